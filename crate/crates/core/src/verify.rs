//! Claim verifiers over a catalog of named instances, producing certificates.
//!
//! Each verifier checks the claim's hypotheses first and downgrades to
//! `reported` when they fail, so `refuted` always means a violated
//! implication on an instance where it should hold.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::{
    artinian_reduction, hochster_betti, koszul_betti, lefschetz_map_ranks, macaulay_upper, socle_dims, BettiTable,
    Variant,
};
use crate::builder::Builder;
use crate::complex::{Face, FGVectors, RelativeComplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::geom::{missing_facets, EmbeddedComplex, EmbeddingKind};
use crate::homology::is_homology_ball_with_boundary;
use crate::stress::{check_reconstruction, dehn_negative_weights_check, rigidity_report, stress_space, weighted_faces};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Refuted,
    Reported,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Verified => "verified",
            Status::Refuted => "refuted",
            Status::Reported => "reported",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub claim_id: String,
    /// Builder string that regenerates the instance.
    pub instance: String,
    pub seed: u64,
    pub status: Status,
    /// For refutations: the violated relation.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub payload: Value,
}

impl Certificate {
    pub fn summary_line(&self) -> String {
        let mut s = format!("{:<15} {:<40} seed={:<4} {}", self.claim_id, self.instance, self.seed, self.status);
        if let Some(w) = &self.witness {
            s.push_str(&format!("  [{w}]"));
        }
        s
    }
}

pub struct Instance {
    pub builder: Builder,
    pub ec: EmbeddedComplex,
}

impl Instance {
    pub fn new(builder: Builder) -> Result<Self> {
        let ec = builder.build()?;
        Ok(Instance { builder, ec })
    }

    pub fn seed(&self) -> u64 {
        match self.builder {
            Builder::JoinSimplices { seed, .. } | Builder::Random { seed, .. } => seed,
            _ => 0,
        }
    }

    fn d(&self) -> usize {
        self.ec.d()
    }

    fn vectors(&self) -> FGVectors {
        self.ec.complex.fgm_vectors()
    }

    fn is_simplex(&self) -> bool {
        self.ec.n() == self.d() + 1
    }
}

/// Accumulates the individual relations checked by one verifier.
struct Checks {
    rows: Vec<Value>,
    failure: Option<String>,
}

impl Checks {
    fn new() -> Self {
        Checks { rows: Vec::new(), failure: None }
    }

    fn record(&mut self, what: String, holds: bool, row: Value) {
        if !holds && self.failure.is_none() {
            self.failure = Some(what);
        }
        self.rows.push(row);
    }

    fn finish(self, claim: &str, inst: &Instance, mut payload: Value) -> Certificate {
        payload["checks"] = Value::Array(self.rows);
        let status = if self.failure.is_some() { Status::Refuted } else { Status::Verified };
        certificate(claim, inst, status, self.failure, payload)
    }
}

fn certificate(claim: &str, inst: &Instance, status: Status, witness: Option<String>, payload: Value) -> Certificate {
    Certificate {
        claim_id: claim.to_string(),
        instance: inst.builder.to_string(),
        seed: inst.seed(),
        status,
        witness,
        payload,
    }
}

fn reported(claim: &str, inst: &Instance, reason: &str, mut payload: Value) -> Certificate {
    payload["reason"] = json!(reason);
    certificate(claim, inst, Status::Reported, None, payload)
}

fn ceil_half(d: usize) -> usize {
    d.div_ceil(2)
}

/// Every claim the harness knows, in the order `all` runs them.
pub const CLAIMS: &[&str] = &[
    "Prop3.2",
    "Cor1.3",
    "Cor1.4",
    "Thm2.1",
    "Thm2.3",
    "Thm3.1",
    "Thm5.1",
    "Thm1.5",
    "Lem3.6",
    "RowTransfer",
    "Lem5.2",
    "Rem4.2-report",
    "Rem3.7-report",
    "Conj5.5-report",
];

pub fn verify_claim(claim: &str, inst: &Instance) -> Result<Certificate> {
    match claim {
        "Prop3.2" => verify_socle_missing_faces(inst),
        "Cor1.3" => verify_g_inequalities(inst),
        "Cor1.4" => verify_k_stacked(inst),
        "Thm2.1" => verify_lefschetz_and_hilbert(inst),
        "Thm2.3" => verify_stress_dimensions(inst),
        "Thm3.1" => verify_reconstruction_theorem(inst),
        "Thm5.1" => verify_rigidity(inst),
        "Thm1.5" => verify_edge_stresses(inst),
        "Lem3.6" => verify_betti_symmetry(inst),
        "RowTransfer" => verify_row_transfer(inst),
        "Lem5.2" => verify_negative_chord_stresses(inst),
        "Rem4.2-report" => report_half_dimension_join(inst),
        "Rem3.7-report" => report_half_dimension_reconstruction(inst),
        "Conj5.5-report" => report_face_participation(inst),
        other => Err(Error::InvalidParameter(format!("unknown claim {other:?}; known: {}", CLAIMS.join(", ")))),
    }
}

/// Default instances for a claim. `seed` feeds the randomized entries.
pub fn catalog(claim: &str, seed: u64) -> Vec<Builder> {
    use Builder::*;
    let joins = |k| JoinSimplices { k, l: k, seed };
    let mut out = match claim {
        "Prop3.2" => vec![
            Simplex { d: 3 },
            Simplex { d: 5 },
            Cross { d: 4 },
            Cross { d: 5 },
            StellarCross { d: 5 },
            Cyclic { d: 5, n: 8 },
            Cyclic { d: 6, n: 9 },
            Stacked { d: 5, n: 7 },
            joins(2),
        ],
        "Cor1.3" => vec![
            Cross { d: 4 },
            Cross { d: 6 },
            StellarCross { d: 5 },
            Cyclic { d: 6, n: 10 },
            Stacked { d: 6, n: 9 },
            ConnectedSum { d: 4, count: 2 },
            joins(2),
        ],
        "Cor1.4" => vec![
            Stacked { d: 6, n: 9 },
            Stacked { d: 5, n: 7 },
            Cross { d: 6 },
            Cyclic { d: 6, n: 10 },
            StellarCross { d: 5 },
            ConnectedSum { d: 4, count: 2 },
            JoinSimplices { k: 3, l: 2, seed },
        ],
        "Thm2.1" => vec![Simplex { d: 3 }, Cross { d: 3 }, Cross { d: 4 }, Cyclic { d: 4, n: 7 }, joins(2)],
        "Thm2.3" => vec![
            Simplex { d: 5 },
            Cross { d: 5 },
            Cyclic { d: 5, n: 9 },
            Stacked { d: 5, n: 8 },
            StellarCross { d: 5 },
            joins(2),
        ],
        "Thm3.1" => vec![
            Cyclic { d: 5, n: 8 },
            Cyclic { d: 6, n: 9 },
            Cross { d: 6 },
            StellarCross { d: 5 },
            Stacked { d: 5, n: 7 },
        ],
        "Thm5.1" => vec![
            Simplex { d: 3 },
            Cross { d: 3 },
            Cross { d: 5 },
            Cyclic { d: 4, n: 8 },
            Stacked { d: 4, n: 7 },
            StellarCross { d: 5 },
        ],
        "Thm1.5" => vec![
            Cross { d: 4 },
            StellarCross { d: 5 },
            Cyclic { d: 4, n: 7 },
            Stacked { d: 4, n: 6 },
            ConnectedSum { d: 4, count: 2 },
            Simplex { d: 4 },
        ],
        "Lem3.6" | "RowTransfer" => vec![
            Simplex { d: 4 },
            Cross { d: 4 },
            StellarCross { d: 5 },
            Cyclic { d: 5, n: 8 },
            Stacked { d: 4, n: 7 },
            joins(2),
        ],
        "Lem5.2" => vec![Cross { d: 3 }, Stacked { d: 3, n: 6 }, ConnectedSum { d: 3, count: 2 }],
        "Rem4.2-report" => vec![joins(2), joins(3)],
        "Rem3.7-report" => vec![Cross { d: 4 }, Cyclic { d: 4, n: 7 }],
        "Conj5.5-report" => vec![Cross { d: 6 }, Cyclic { d: 6, n: 9 }],
        _ => Vec::new(),
    };
    if claim == "Lem5.2" {
        out.extend((0..5).map(|i| Random { d: 3, n: 7 + i as usize % 3, stack: i as usize % 3, seed: seed + i }));
    }
    out
}

/// Runs `claim` (or every claim for `"all"`) on its catalog.
pub fn run_catalog(claim: &str, seed: u64) -> Result<Vec<Certificate>> {
    let claims: Vec<&str> = if claim == "all" {
        CLAIMS.to_vec()
    } else if CLAIMS.contains(&claim) {
        vec![claim]
    } else {
        return Err(Error::InvalidParameter(format!("unknown claim {claim:?}; known: {}", CLAIMS.join(", "))));
    };
    let jobs: Vec<(&str, Builder)> =
        claims.iter().flat_map(|c| catalog(c, seed).into_iter().map(move |b| (*c, b))).collect();
    jobs.into_par_iter().map(|(c, b)| verify_claim(c, &Instance::new(b)?)).collect()
}

pub fn verify_socle_missing_faces(inst: &Instance) -> Result<Certificate> {
    const CLAIM: &str = "Prop3.2";
    let d = inst.d();
    let v = inst.vectors();
    let model = artinian_reduction(&inst.ec, Variant::ThetaEll)?;
    let r = socle_dims(&model);
    let r_at = |k: usize| r.get(k).copied().unwrap_or(0) as u64;
    let bound = ceil_half(d) - 1;
    let mut checks = Checks::new();
    for k in 0..=bound {
        let (rk, mk) = (r_at(k), v.m(d - k));
        let (holds, rel) = if k < bound { (rk == mk, "=") } else { (rk >= mk, ">=") };
        checks.record(
            format!("k={k}: r_k={rk} vs m_(d-k)={mk} ({rel})"),
            holds,
            json!({"k": k, "r_k": rk, "m_d_minus_k": mk, "relation": rel, "strict": rk > mk}),
        );
    }
    Ok(checks.finish(CLAIM, inst, json!({"d": d, "socle": r})))
}

pub fn verify_g_inequalities(inst: &Instance) -> Result<Certificate> {
    const CLAIM: &str = "Cor1.3";
    let d = inst.d();
    let v = inst.vectors();
    if d < 4 {
        return Ok(reported(CLAIM, inst, "needs d >= 4", json!({"d": d})));
    }
    let mut checks = Checks::new();
    for k in 1..ceil_half(d) {
        let (gk, gk1, mk) = (v.g(k), v.g(k + 1), v.m(d - k) as i64);
        let room = gk - mk;
        let cap = if room >= 0 { macaulay_upper(room as u64, k as u32) as i64 } else { -1 };
        checks.record(
            format!("k={k}: g_k={gk} >= m_(d-k)={mk}"),
            gk >= mk,
            json!({"k": k, "g_k": gk, "m_d_minus_k": mk, "relation": ">="}),
        );
        checks.record(
            format!("k={k}: 0 <= g_(k+1)={gk1} <= ({room})^<{k}>={cap}"),
            0 <= gk1 && gk1 <= cap,
            json!({"k": k, "g_k_plus_1": gk1, "macaulay_bound": cap}),
        );
    }
    Ok(checks.finish(CLAIM, inst, json!({"d": d, "g": v.g, "m": v.m})))
}

/// Faces of the unique candidate ball: `Δ` plus every vertex set not in `Δ`
/// whose `(d-k)`-subsets are all faces of `Δ`. Grows one size at a time and
/// stops past `d + 2` vertices, which no `d`-ball can have.
pub fn candidate_ball(c: &SimplicialComplex, d: usize, k: usize) -> SimplicialComplex {
    let mut faces: Vec<Face> = c.all_faces().collect();
    let mut known: BTreeSet<Face> = faces.iter().copied().collect();
    let size = d - k;
    let mut layer: Vec<Face> = c.faces(size as isize - 1).to_vec();
    let vertices = c.vertices();
    for s in size + 1..=d + 2 {
        let mut next = BTreeSet::new();
        for f in &layer {
            let top = f.max_vertex().unwrap_or(0);
            for &v in vertices.iter().filter(|&&v| v > top) {
                let g = f.with(v);
                if !known.contains(&g) && g.facets_of_boundary().all(|r| known.contains(&r)) {
                    next.insert(g);
                }
            }
        }
        // sets already in Δ also seed the next size
        let mut seeds: Vec<Face> = c.faces(s as isize - 1).to_vec();
        seeds.extend(next.iter().copied());
        faces.extend(next.iter().copied());
        known.extend(next.iter().copied());
        if seeds.is_empty() {
            break;
        }
        layer = seeds;
    }
    SimplicialComplex::from_faces(faces)
}

pub fn verify_k_stacked(inst: &Instance) -> Result<Certificate> {
    const CLAIM: &str = "Cor1.4";
    let d = inst.d();
    let v = inst.vectors();
    let c = &inst.ec.complex;
    let mut checks = Checks::new();
    let mut odd_case = Value::Null;
    let top = if d % 2 == 1 { (d - 1) / 2 } else { (d / 2).saturating_sub(1) };
    for k in 1..=top {
        let gamma = candidate_ball(c, d, k);
        let ball = is_homology_ball_with_boundary(&gamma);
        let stacked = gamma.dim() == d as isize && ball.is_ball && ball.boundary == *c;
        let (gk, mk) = (v.g(k), v.m(d - k) as i64);
        let numeric = gk == mk;
        let row = |extra: Value| {
            let mut r = json!({"k": k, "g_k": gk, "m_d_minus_k": mk, "ball_stacked": stacked,
                "murai_nevo_stacked": v.g(k + 1) == 0});
            if let (Value::Object(a), Value::Object(b)) = (&mut r, extra) {
                a.extend(b);
            }
            r
        };
        let relative = if stacked {
            let rc = RelativeComplex::new(gamma.clone(), c.clone())?;
            let f = rc.f_vector();
            let h = rc.h_vector();
            Some((f.get(d - k + 1).copied().unwrap_or(0), h.get(d + 1 - k).copied().unwrap_or(0)))
        } else {
            None
        };
        let rel_json = json!({"relative_f_d_minus_k": relative.map(|r| r.0), "relative_h_d_plus_1_minus_k": relative.map(|r| r.1)});
        if 2 * (k + 1) <= d {
            // both directions, plus the independent Murai-Nevo criterion
            let mn = v.g(k + 1) == 0;
            checks.record(
                format!("k={k}: ball-stacked={stacked}, g_k=m_(d-k) is {numeric}, g_(k+1)=0 is {mn}"),
                stacked == numeric && stacked == mn,
                row(rel_json),
            );
        } else {
            odd_case = row(rel_json);
            if !stacked {
                continue;
            }
            checks.record(format!("k={k} (odd d, forward only): g_k={gk} vs m_(d-k)={mk}"), numeric, odd_case.clone());
        }
        if let Some((f, h)) = relative {
            checks.record(
                format!("k={k}: relative f={f}, relative h={h}, g_k={gk}, m_(d-k)={mk}"),
                f == mk && h == gk,
                json!({"k": k, "relative_f": f, "relative_h": h}),
            );
        }
    }
    Ok(checks.finish(CLAIM, inst, json!({"d": d, "g": v.g, "m": v.m, "odd_extra_case": odd_case})))
}

pub fn verify_lefschetz_and_hilbert(inst: &Instance) -> Result<Certificate> {
    const CLAIM: &str = "Thm2.1";
    let d = inst.d();
    let v = inst.vectors();
    let theta = artinian_reduction(&inst.ec, Variant::Theta)?;
    let ell = artinian_reduction(&inst.ec, Variant::ThetaEll)?;
    let mut checks = Checks::new();
    let hf = theta.hilbert_function();
    let h: Vec<usize> = v.h.iter().map(|&x| x as usize).collect();
    checks.record(format!("Hilbert function {hf:?} vs h {h:?}"), hf == h, json!({"hilbert": hf, "h": h}));
    for step in lefschetz_map_ranks(&theta).into_iter().filter(|s| s.degree < ceil_half(d)) {
        checks.record(format!("multiplication by l injective in degree {}", step.degree), step.injective, json!(step));
    }
    let hf_ell = ell.hilbert_function();
    let g: Vec<usize> = (0..=ceil_half(d)).map(|k| v.g(k).max(0) as usize).collect();
    let trimmed: Vec<usize> = {
        let mut g = g.clone();
        while g.last() == Some(&0) {
            g.pop();
        }
        g
    };
    checks.record(format!("Hilbert function {hf_ell:?} vs g {trimmed:?}"), hf_ell == trimmed, json!({"hilbert_ell": hf_ell, "g": g}));
    Ok(checks.finish(CLAIM, inst, json!({"d": d})))
}

pub fn verify_stress_dimensions(inst: &Instance) -> Result<Certificate> {
    const CLAIM: &str = "Thm2.3";
    let d = inst.d();
    let v = inst.vectors();
    let mut checks = Checks::new();
    let mut dims = Vec::new();
    for i in 0..=ceil_half(d) {
        let dim = stress_space(&inst.ec, i).dim();
        dims.push(dim);
        checks.record(format!("i={i}: dim S_i={dim} vs g_i={}", v.g(i)), dim as i64 == v.g(i), json!({"i": i, "dim": dim, "g_i": v.g(i)}));
    }
    Ok(checks.finish(CLAIM, inst, json!({"d": d, "dims": dims})))
}

fn max_missing_dim(v: &FGVectors) -> Option<usize> {
    v.m.iter().rposition(|&x| x > 0)
}

pub fn verify_reconstruction_theorem(inst: &Instance) -> Result<Certificate> {
    const CLAIM: &str = "Thm3.1";
    let d = inst.d();
    let v = inst.vectors();
    let top = ceil_half(d) - 1;
    let mut checks = Checks::new();
    let mut gated = Vec::new();
    for i in 2..=top {
        let in_hypothesis = max_missing_dim(&v).is_none_or(|m| m < d + 1 - i);
        for k in 1..i {
            let r = check_reconstruction(&inst.ec, i, k)?;
            let row = json!({"i": i, "k": k, "holds": r.holds, "contained": r.contained, "lhs_dim": r.lhs_dim, "rhs_dim": r.rhs_dim});
            checks.record(format!("i={i}, k={k}: derivatives lie in S_k"), r.contained, row.clone());
            if in_hypothesis {
                checks.record(format!("i={i}, k={k}: S_k equals the derivatives of S_i"), r.holds, row);
            } else {
                gated.push(row);
            }
        }
    }
    if checks.rows.is_empty() {
        return Ok(reported(CLAIM, inst, "no degree pair 1 <= k < i <= ceil(d/2)-1", json!({"d": d})));
    }
    let hypothesis_failed = !gated.is_empty();
    let mut cert = checks.finish(CLAIM, inst, json!({"d": d, "outside_hypothesis": gated}));
    if hypothesis_failed && cert.status == Status::Verified {
        cert.status = Status::Reported;
        cert.payload["reason"] = json!("missing faces of dimension >= d-i+1; only containment asserted");
    }
    Ok(cert)
}

pub fn verify_rigidity(inst: &Instance) -> Result<Certificate> {
    const CLAIM: &str = "Thm5.1";
    let d = inst.d();
    if d < 3 || inst.ec.kind != EmbeddingKind::NaturalPolytope {
        return Ok(reported(CLAIM, inst, "needs a natural polytope with d >= 3", json!({"d": d})));
    }
    let r = rigidity_report(&inst.ec);
    let g2 = inst.vectors().g(2);
    let mut checks = Checks::new();
    checks.record(
        format!("dim S_2(G)={} vs bound {}", r.dim_s2, r.lower_bound),
        r.is_inf_rigid,
        json!({"dim_s2": r.dim_s2, "bound": r.lower_bound}),
    );
    checks.record(format!("dim S_2(G)={} vs g_2={g2}", r.dim_s2), r.dim_s2 as i64 == g2, json!({"g_2": g2}));
    if d == 3 {
        checks.record("3-polytope carries a 2-stress".into(), r.dim_s2 == 0, json!({"dehn": r.dim_s2 == 0}));
    }
    Ok(checks.finish(CLAIM, inst, json!(r)))
}

pub fn verify_edge_stresses(inst: &Instance) -> Result<Certificate> {
    const CLAIM: &str = "Thm1.5";
    let d = inst.d();
    if d < 4 || inst.ec.kind != EmbeddingKind::NaturalPolytope {
        return Ok(reported(CLAIM, inst, "needs a natural polytope with d >= 4", json!({"d": d})));
    }
    if inst.is_simplex() {
        return Ok(reported(CLAIM, inst, "a simplex carries no 2-stress", json!({"d": d})));
    }
    let c = &inst.ec.complex;
    let participating = weighted_faces(&stress_space(&inst.ec, 2));
    let cuts = missing_facets(&inst.ec);
    let prime = cuts.is_empty();
    let mut checks = Checks::new();
    let mut excluded = Vec::new();
    for &e in c.faces(1) {
        let in_cut = cuts.iter().any(|t| e.is_subset(*t));
        let lk = c.link(e)?;
        let simplex_link = lk.n_vertices() == d - 1 && lk.facets().len() == d - 1;
        let asserted = prime || (!in_cut && !simplex_link);
        let yes = participating.contains(&e);
        if asserted {
            checks.record(format!("edge {e} participates in no 2-stress"), yes, json!({"edge": e.to_vec(), "participates": yes}));
        } else {
            excluded.push(json!({"edge": e.to_vec(), "participates": yes, "in_missing_facet": in_cut}));
        }
    }
    let part = if prime { 1 } else { 2 };
    Ok(checks.finish(CLAIM, inst, json!({"d": d, "part": part, "edges": c.faces(1).len(), "excluded": excluded})))
}

fn symmetric_entry(t: &BettiTable, n: usize, d: usize, i: usize, j: usize) -> Option<u64> {
    (i <= n - d && j <= n).then(|| t.get(n - d - i, n - j))
}

pub fn verify_betti_symmetry(inst: &Instance) -> Result<Certificate> {
    const CLAIM: &str = "Lem3.6";
    let (n, d) = (inst.ec.n(), inst.d());
    let t = hochster_betti(&inst.ec.complex)?;
    let mut checks = Checks::new();
    for ((i, j), b) in t.entries() {
        let mirror = symmetric_entry(&t, n, d, i, j);
        checks.record(
            format!("beta_({i},{j})={b} vs beta_({},{})={mirror:?}", n - d - i.min(n - d), n - j.min(n)),
            mirror == Some(b),
            json!({"i": i, "j": j, "beta": b, "mirror": mirror}),
        );
    }
    Ok(checks.finish(CLAIM, inst, json!({"n": n, "d": d, "table": t.to_json()})))
}

pub fn verify_row_transfer(inst: &Instance) -> Result<Certificate> {
    const CLAIM: &str = "RowTransfer";
    let d = inst.d();
    let over_r = hochster_betti(&inst.ec.complex)?;
    let over_rbar = koszul_betti(&artinian_reduction(&inst.ec, Variant::ThetaEll)?);
    let edge = ceil_half(d) - 1;
    let width = over_r.max_i().max(over_rbar.max_i());
    let mut checks = Checks::new();
    for k in 0..=edge {
        for i in 0..=width {
            let (a, b) = (over_rbar.get(i, i + k), over_r.get(i, i + k));
            let (holds, rel) = if k < edge { (a == b, "=") } else { (a >= b, ">=") };
            checks.record(format!("row {k}, column {i}: {a} {rel} {b}"), holds, json!({"row": k, "i": i, "rbar": a, "r": b, "relation": rel}));
        }
    }
    Ok(checks.finish(CLAIM, inst, json!({"d": d, "r": over_r.to_json(), "rbar": over_rbar.to_json()})))
}

pub fn verify_negative_chord_stresses(inst: &Instance) -> Result<Certificate> {
    const CLAIM: &str = "Lem5.2";
    let ec = &inst.ec;
    if ec.d() != 3 || ec.kind != EmbeddingKind::NaturalPolytope {
        return Ok(reported(CLAIM, inst, "needs a natural simplicial 3-polytope", json!({"d": ec.d()})));
    }
    let c = &ec.complex;
    let vs = c.vertices();
    let mut checks = Checks::new();
    let mut skipped = Vec::new();
    for (x, &a) in vs.iter().enumerate() {
        for &b in &vs[x + 1..] {
            if c.contains(Face::from_vertices([a, b])) {
                continue;
            }
            match dehn_negative_weights_check(ec, a, b) {
                Ok(r) => checks.record(
                    format!("chord {a}{b}: unique={}, negative at endpoints={}", r.unique_stress, r.all_negative_at_endpoints),
                    r.unique_stress && r.all_negative_at_endpoints,
                    json!({"a": a, "b": b, "q": r.q_vertices, "stress_dim": r.stress_dim}),
                ),
                Err(e @ (Error::SegmentThroughVertex(..) | Error::DegenerateSegment(..))) => {
                    skipped.push(json!({"a": a, "b": b, "reason": e.to_string()}));
                }
                Err(e) => return Err(e),
            }
        }
    }
    if checks.rows.is_empty() {
        return Ok(reported(CLAIM, inst, "no missing edge in general position", json!({"skipped": skipped})));
    }
    Ok(checks.finish(CLAIM, inst, json!({"skipped": skipped})))
}

pub fn report_half_dimension_join(inst: &Instance) -> Result<Certificate> {
    let d = inst.d();
    let v = inst.vectors();
    let k = d / 2;
    let payload = json!({"d": d, "k": k, "g_k": v.g(k), "m_d_minus_k": v.m(d - k), "inequality_holds": v.g(k) >= v.m(d - k) as i64});
    Ok(reported("Rem4.2-report", inst, "g_k >= m_(d-k) is not claimed at k = d/2", payload))
}

pub fn report_half_dimension_reconstruction(inst: &Instance) -> Result<Certificate> {
    let d = inst.d();
    if d % 2 == 1 {
        return Ok(reported("Rem3.7-report", inst, "d is odd", json!({"d": d})));
    }
    let i = d / 2;
    let rows = (1..i)
        .map(|k| check_reconstruction(&inst.ec, i, k).map(|r| json!({"i": i, "k": k, "check": r})))
        .collect::<Result<Vec<_>>>()?;
    Ok(reported("Rem3.7-report", inst, "the case d = 2i is open; nothing is asserted", json!({"d": d, "rows": rows})))
}

pub fn report_face_participation(inst: &Instance) -> Result<Certificate> {
    let d = inst.d();
    let v = inst.vectors();
    let mut rows = Vec::new();
    for i in 2..=d / 2 {
        if max_missing_dim(&v).is_some_and(|m| m >= d + 1 - i) {
            continue;
        }
        let weighted = weighted_faces(&stress_space(&inst.ec, i));
        // a face participates iff some weighted (i-1)-face contains it; for
        // (i-1)-faces themselves that is membership
        let faces = inst.ec.complex.faces(i as isize - 1);
        let count = faces.iter().filter(|f| weighted.contains(f)).count();
        rows.push(json!({"i": i, "faces": faces.len(), "participating": count}));
    }
    Ok(reported("Conj5.5-report", inst, "exploratory; never asserted", json!({"d": d, "rows": rows})))
}
