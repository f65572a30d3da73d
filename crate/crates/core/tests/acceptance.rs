//! Acceptance gate: one PASS/FAIL line per criterion, exact comparisons only.
//! Runs without the libtest harness so the lines always reach the output.

mod common;

use std::process::Command;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use common::{build, ceil_half, polytope_catalog, small_spheres};
use stresslab::algebra::{artinian_reduction, hochster_betti, koszul_betti, socle_dims, BettiTable, Ring, Variant};
use stresslab::builder::Builder;
use stresslab::complex::binomial;
use stresslab::exactla::{kernel_basis, rat, QMatrix};
use stresslab::geom::{missing_facets, EmbeddingKind};
use stresslab::homology::ChainComplexQ;
use stresslab::stress::{
    balancing_residuals, check_reconstruction, reconstruct_from_squarefree, rigidity_report, squarefree_part,
    stress_space, weighted_faces,
};
use stresslab::verify::{
    verify_g_inequalities, verify_k_stacked, verify_negative_chord_stresses, verify_row_transfer,
    verify_socle_missing_faces, Instance, Status,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// `(row j, first column i, entries)` with `β_{i+t, i+t+j}` = `entries[t]`.
fn table(ring: Ring, rows: &[(usize, usize, &[u64])]) -> BettiTable {
    let mut t = BettiTable::new(ring);
    for &(j, i0, vals) in rows {
        for (t_, &v) in vals.iter().enumerate() {
            t.add(i0 + t_, i0 + t_ + j, v);
        }
    }
    t
}

fn golden_stellar_cross() -> (BettiTable, BettiTable) {
    let left = table(
        Ring::OverR,
        &[
            (0, 0, &[1]),
            (1, 1, &[10, 15, 10, 5, 1]),
            (2, 1, &[0, 10, 10, 0, 0]),
            (3, 1, &[0, 0, 10, 10, 0]),
            (4, 1, &[1, 5, 10, 15, 10]),
            (5, 6, &[1]),
        ],
    );
    let right = table(Ring::OverRBar, &[(0, 0, &[1]), (1, 1, &[10, 15, 10, 5, 1]), (2, 1, &[0, 15, 31, 21, 5])]);
    (left, right)
}

fn golden_cross4() -> (BettiTable, BettiTable) {
    let left = table(
        Ring::OverR,
        &[(0, 0, &[1]), (1, 1, &[4, 0, 0]), (2, 1, &[0, 6, 0]), (3, 1, &[0, 0, 4]), (4, 4, &[1])],
    );
    let right = table(Ring::OverRBar, &[(0, 0, &[1]), (1, 1, &[4, 2, 0]), (2, 1, &[0, 3, 2])]);
    (left, right)
}

fn cli_betti(builder: &str) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_stresslab"))
        .args(["betti", "--builder", builder, "--ring", "both"])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || format!("betti exited with {}", out.status))?;
    Ok(String::from_utf8(out.stdout).unwrap())
}

fn criterion_1() -> Outcome {
    let mut notes = Vec::new();
    for (spec, (left, right)) in [("stellar-cross:d=5", golden_stellar_cross()), ("cross:d=4", golden_cross4())] {
        let start = Instant::now();
        let ec = build(&spec.parse().unwrap());
        let got_left = hochster_betti(&ec.complex).map_err(|e| e.to_string())?;
        let got_right = koszul_betti(&artinian_reduction(&ec, Variant::ThetaEll).map_err(|e| e.to_string())?);
        ensure(got_left == left, || format!("{spec}: table over R differs:\n{}", got_left.render()))?;
        ensure(got_right == right, || format!("{spec}: table over Rbar differs:\n{}", got_right.render()))?;
        let text = cli_betti(spec)?;
        let expected = format!("over R:\n{}over Rbar:\n{}", left.render(), right.render());
        ensure(text.ends_with(&expected), || format!("{spec}: CLI output differs:\n{text}"))?;
        notes.push(format!("{spec} in {:.2}s", start.elapsed().as_secs_f64()));
    }
    Ok(format!("both tables exact for {}", notes.join(", ")))
}

fn socle(spec: &str) -> Result<Vec<usize>, String> {
    let ec = build(&spec.parse().unwrap());
    let mut r = socle_dims(&artinian_reduction(&ec, Variant::ThetaEll).map_err(|e| e.to_string())?);
    r.resize(ec.d() / 2 + 1, 0);
    Ok(r)
}

fn criterion_2() -> Outcome {
    let gamma = socle("stellar-cross:d=5")?;
    ensure(gamma == [0, 1, 5], || format!("stellar cross socle {gamma:?}"))?;
    let omega = socle("cross:d=4")?;
    ensure(omega == [0, 0, 2], || format!("cross(4) socle {omega:?}"))?;
    for d in 2..=7 {
        let r = socle(&format!("simplex:d={d}"))?;
        ensure(r[0] == 1 && r[1..].iter().all(|&x| x == 0), || format!("simplex d={d}: {r:?}"))?;
    }
    Ok("(0,1,5), (0,0,2), simplex boundaries d=2..7 give (1,0,...)".into())
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let catalog = polytope_catalog();
    let checked: Vec<usize> = catalog
        .par_iter()
        .map(|b| {
            let ec = build(b);
            let v = ec.complex.fgm_vectors();
            (0..=ceil_half(ec.d()))
                .map(|i| {
                    let dim = stress_space(&ec, i).dim() as i64;
                    ensure(dim == v.g(i), || format!("{b}: dim S_{i} = {dim}, g_{i} = {}", v.g(i))).map(|_| 1)
                })
                .sum::<Result<usize, String>>()
        })
        .collect::<Result<_, _>>()?;
    Ok(format!(
        "{} instances, {} (instance, i) pairs, {:.1}s",
        catalog.len(),
        checked.iter().sum::<usize>(),
        start.elapsed().as_secs_f64()
    ))
}

fn criterion_4() -> Outcome {
    use Builder::*;
    let mut catalog: Vec<Builder> = (5..=8).map(|d| Cross { d }).collect();
    for d in 5..=7 {
        catalog.extend((d + 1..=d + 5).map(|n| Cyclic { d, n }));
    }
    catalog.extend([StellarCross { d: 5 }, Stacked { d: 5, n: 7 }, Stacked { d: 6, n: 9 }]);
    let results: Vec<(usize, usize, Vec<String>)> = catalog
        .par_iter()
        .map(|b| {
            let ec = build(b);
            let d = ec.d();
            let m = ec.complex.fgm_vectors().m;
            let (mut asserted, mut gated, mut pairs) = (0, 0, Vec::new());
            for i in 2..ceil_half(d) {
                let in_hypothesis = m.iter().enumerate().all(|(dim, &c)| c == 0 || dim < d + 1 - i);
                for k in 1..i {
                    let r = check_reconstruction(&ec, i, k).map_err(|e| e.to_string())?;
                    ensure(r.contained, || format!("{b}: derivatives of S_{i} escape S_{k}"))?;
                    if in_hypothesis {
                        ensure(r.holds, || format!("{b}: (i,k)=({i},{k}) fails, dims {} vs {}", r.lhs_dim, r.rhs_dim))?;
                        asserted += 1;
                        pairs.push(format!("{b}:({i},{k})"));
                    } else {
                        gated += 1;
                    }
                }
            }
            Ok((asserted, gated, pairs))
        })
        .collect::<Result<_, String>>()?;
    let all: Vec<&String> = results.iter().flat_map(|r| &r.2).collect();
    for needed in ["cyclic:d=5,n=8:(2,1)", "cross:d=8:(3,2)", "cross:d=8:(3,1)"] {
        ensure(all.iter().any(|p| *p == needed), || format!("{needed} was not checked"))?;
    }
    let asserted: usize = results.iter().map(|r| r.0).sum();
    let gated: usize = results.iter().map(|r| r.1).sum();
    Ok(format!("{asserted} in-hypothesis pairs equal as subspaces; {gated} gated pairs satisfy containment"))
}

fn run_verifier(
    catalog: &[Builder],
    f: fn(&Instance) -> stresslab::Result<stresslab::verify::Certificate>,
) -> Result<Vec<stresslab::verify::Certificate>, String> {
    catalog
        .par_iter()
        .map(|b| {
            let inst = Instance::new(b.clone()).map_err(|e| format!("{b}: {e}"))?;
            let cert = f(&inst).map_err(|e| format!("{b}: {e}"))?;
            ensure(cert.status != Status::Refuted, || format!("{b}: {}", cert.witness.clone().unwrap_or_default()))?;
            Ok(cert)
        })
        .collect()
}

fn criterion_5() -> Outcome {
    let certs = run_verifier(&small_spheres(), verify_socle_missing_faces)?;
    let gamma = certs.iter().find(|c| c.instance == "stellar-cross:d=5").unwrap();
    let strict = gamma.payload["checks"].as_array().unwrap().iter().find(|r| r["k"] == 2).cloned().unwrap_or_default();
    ensure(strict["r_k"] == 5 && strict["m_d_minus_k"] == 0 && strict["strict"] == true, || format!("witness {strict}"))?;
    let eq = gamma.payload["checks"].as_array().unwrap().iter().find(|r| r["k"] == 1).cloned().unwrap_or_default();
    ensure(eq["r_k"] == 1 && eq["m_d_minus_k"] == 1, || format!("r_1 row {eq}"))?;
    Ok(format!("{} spheres; strict witness r_2 = 5 > 0 = m_3 on the stellar cross", certs.len()))
}

fn criterion_6() -> Outcome {
    use Builder::*;
    let mut catalog = small_spheres();
    catalog.extend([
        Stacked { d: 6, n: 9 },
        Stacked { d: 7, n: 10 },
        Cross { d: 7 },
        Cyclic { d: 7, n: 11 },
        JoinSimplices { k: 4, l: 2, seed: 0 },
        JoinSimplices { k: 5, l: 2, seed: 0 },
    ]);
    let g_ineq = run_verifier(&catalog, verify_g_inequalities)?;
    let stacked = run_verifier(&catalog, verify_k_stacked)?;
    let (mut yes, mut no, mut odd) = (0, 0, 0);
    for c in &stacked {
        for row in c.payload["checks"].as_array().unwrap() {
            match row["ball_stacked"].as_bool() {
                Some(true) => yes += 1,
                Some(false) => no += 1,
                None => {}
            }
        }
        if c.payload["odd_extra_case"]["ball_stacked"] == true {
            odd += 1;
        }
    }
    ensure(yes > 0 && no > 0, || format!("iff exercised only one way: {yes} stacked, {no} not"))?;
    let join = build(&JoinSimplices { k: 2, l: 2, seed: 0 });
    let v = join.complex.fgm_vectors();
    ensure(v.g(2) == 1 && v.m(2) == 2, || format!("join at k = d/2: g_2 = {}, m_2 = {}", v.g(2), v.m(2)))?;
    Ok(format!(
        "{} instances; iff checked {yes} stacked / {no} non-stacked (k, instance) pairs, {odd} odd-d forward cases; \
         join of two triangle boundaries: g_2 = 1 < m_2 = 2",
        g_ineq.len()
    ))
}

fn criterion_7() -> Outcome {
    let catalog: Vec<Builder> = polytope_catalog().into_iter().filter(|b| build(b).d() >= 3).collect();
    let counts: Vec<(usize, usize)> = catalog
        .par_iter()
        .map(|b| {
            let ec = build(b);
            let d = ec.d();
            let r = rigidity_report(&ec);
            let bound = ec.complex.faces(1).len() as i64 - (d * ec.n()) as i64 + binomial(d as i64 + 1, 2);
            ensure(r.is_inf_rigid && r.dim_s2 as i64 == bound, || format!("{b}: dim S_2(G) = {}, bound {bound}", r.dim_s2))?;
            if d == 3 {
                ensure(r.dim_s2 == 0, || format!("{b}: 3-polytope with a 2-stress"))?;
            }
            let mut edges = 0;
            if d >= 4 && ec.n() > d + 1 && missing_facets(&ec).is_empty() {
                let w = weighted_faces(&stress_space(&ec, 2));
                for e in ec.complex.faces(1) {
                    ensure(w.contains(e), || format!("{b}: edge {e} carries no 2-stress"))?;
                    edges += 1;
                }
            }
            Ok((1, edges))
        })
        .collect::<Result<_, String>>()?;
    let prime_edges: usize = counts.iter().map(|c| c.1).sum();
    Ok(format!("{} polytopes rigid; {prime_edges} edges of prime non-simplices participate", counts.len()))
}

fn criterion_8() -> Outcome {
    let catalog: Vec<Builder> =
        (0..8u64).map(|seed| Builder::Random { d: 3, n: 7 + seed as usize % 4, stack: seed as usize % 3, seed }).collect();
    let certs = run_verifier(&catalog, verify_negative_chord_stresses)?;
    let mut chords = 0;
    let mut instances = 0;
    for c in &certs {
        ensure(c.status == Status::Verified, || format!("{}: {:?}", c.instance, c.status))?;
        let n = c.payload["checks"].as_array().map_or(0, Vec::len);
        if n > 0 {
            instances += 1;
        }
        chords += n;
    }
    ensure(instances >= 5, || format!("only {instances} instances had a usable chord"))?;
    Ok(format!("{instances} seeded random 3-polytopes, {chords} chords, all endpoint weights negative"))
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..200 {
        let (r, c) = (rng.gen_range(1..8), rng.gen_range(1..8));
        let rows = (0..r).map(|_| (0..c).map(|_| rat(rng.gen_range(-3..=3))).collect()).collect();
        let m = QMatrix::from_rows(c, rows);
        ensure(m.rank() + kernel_basis(&m).dim() == c, || format!("rank-nullity fails on {m:?}"))?;
    }
    let spheres = small_spheres();
    let counts: Vec<usize> = spheres
        .par_iter()
        .map(|b| {
            let ec = build(b);
            let c = &ec.complex;
            let (n, d) = (ec.n(), ec.d());
            let cc = ChainComplexQ::new(c);
            for k in 1..=cc.top_dim() {
                if let (Some(a), Some(bm)) = (cc.boundary(k - 1), cc.boundary(k)) {
                    ensure(a.mul(bm).map(|p| p.is_zero()).unwrap_or(false), || format!("{b}: boundary squared nonzero at {k}"))?;
                }
            }
            let v = c.fgm_vectors();
            ensure((0..=d).all(|i| v.h[i] == v.h[d - i]), || format!("{b}: h = {:?}", v.h))?;
            let over_r = hochster_betti(c).map_err(|e| e.to_string())?;
            for ((i, j), x) in over_r.entries() {
                ensure(i <= n - d && j <= n && over_r.get(n - d - i, n - j) == x, || format!("{b}: beta_({i},{j}) asymmetric"))?;
            }
            for k in 0..d {
                ensure(over_r.get(1, k + 1) == v.m(k), || format!("{b}: beta_(1,{}) != m_{k}", k + 1))?;
            }
            let inst = Instance { builder: b.clone(), ec: ec.clone() };
            let rt = verify_row_transfer(&inst).map_err(|e| e.to_string())?;
            ensure(rt.status == Status::Verified, || format!("{b}: row transfer {:?}", rt.witness))?;
            let mut stresses = 0;
            if ec.kind == EmbeddingKind::NaturalPolytope || ec.kind == EmbeddingKind::GenericSphere {
                let s2 = stress_space(&ec, 2);
                for lam in s2.vectors() {
                    let w = squarefree_part(&s2, &lam);
                    ensure(balancing_residuals(&w, &ec).iter().all(|(_, r)| r.iter().all(|x| *x == rat(0))), || {
                        format!("{b}: unbalanced 2-stress")
                    })?;
                    let back = reconstruct_from_squarefree(&w, &ec).map_err(|e| e.to_string())?;
                    ensure(back == lam, || format!("{b}: squarefree round trip differs"))?;
                    stresses += 1;
                }
            }
            Ok(stresses)
        })
        .collect::<Result<_, String>>()?;
    Ok(format!(
        "200 random matrices; {} spheres (boundary^2, Dehn-Sommerville, Betti symmetry, m_k = beta_(1,k+1), row transfer); \
         {} 2-stresses balanced and round-tripped",
        spheres.len(),
        counts.iter().sum::<usize>()
    ))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("golden Betti tables", criterion_1),
        ("socle counts", criterion_2),
        ("stress dimensions equal g-numbers", criterion_3),
        ("reconstruction from stresses", criterion_4),
        ("socle vs missing faces", criterion_5),
        ("g-inequalities and k-stackedness", criterion_6),
        ("rigidity and edge participation", criterion_7),
        ("negative chord stresses on 3-polytopes", criterion_8),
        ("structural invariants", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name} ({secs:.1}s) - {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({secs:.1}s) - {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all 9 criteria passed");
}
