//! Named polytope and sphere constructions.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{boundary_from_points, generic_embedding, EmbeddedComplex, EmbeddingKind};
use crate::complex::{Face, SimplicialComplex, Vertex};
use crate::error::{Error, Result};
use crate::exactla::{dot, rat, ratio, solve, QMatrix, Rational};

fn unit(d: usize, i: usize, s: i64) -> Vec<Rational> {
    (0..d).map(|j| rat(if j == i { s } else { 0 })).collect()
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg()))
    }
}

/// Points of an embedded complex with labels `1..=n`, in label order.
fn point_list(ec: &EmbeddedComplex) -> Result<Vec<Vec<Rational>>> {
    let vs = ec.complex.vertices();
    if vs.iter().enumerate().any(|(i, &v)| v as usize != i + 1) {
        return Err(Error::InvalidParameter("vertex labels must be 1..n".into()));
    }
    Ok(vs.iter().map(|&v| ec.point(v).to_vec()).collect())
}

/// `∂Δ^d` realized by `e_1, ..., e_d, -(e_1 + ... + e_d)`.
pub fn simplex_boundary(d: usize) -> Result<EmbeddedComplex> {
    require(d >= 1, || format!("simplex needs d >= 1, got {d}"))?;
    let mut pts: Vec<Vec<Rational>> = (0..d).map(|i| unit(d, i, 1)).collect();
    pts.push(vec![rat(-1); d]);
    boundary_from_points(&pts)
}

/// Labels `1..=d` are `e_i`, labels `d+1..=2d` are `-e_i`.
pub fn cross_polytope(d: usize) -> Result<EmbeddedComplex> {
    require(d >= 1, || format!("cross-polytope needs d >= 1, got {d}"))?;
    let mut pts: Vec<Vec<Rational>> = (0..d).map(|i| unit(d, i, 1)).collect();
    pts.extend((0..d).map(|i| unit(d, i, -1)));
    boundary_from_points(&pts)
}

/// Moment-curve points `(t, t^2, ..., t^d)` for `t = 1..=n`.
pub fn cyclic_polytope(d: usize, n: usize) -> Result<EmbeddedComplex> {
    require(d >= 2 && n > d, || format!("cyclic polytope needs d >= 2 and n > d, got d={d}, n={n}"))?;
    let pts: Vec<Vec<Rational>> =
        (1..=n as i64).map(|t| (1..=d as u32).map(|e| rat(t.pow(e))).collect()).collect();
    boundary_from_points(&pts)
}

/// Starting from `∂Δ^d`, repeatedly subdivides the lexicographically first
/// facet containing the most recently added vertex.
pub fn stacked_polytope(d: usize, n: usize) -> Result<EmbeddedComplex> {
    require(d >= 2 && n > d, || format!("stacked polytope needs d >= 2 and n > d, got d={d}, n={n}"))?;
    let mut ec = simplex_boundary(d)?;
    while ec.n() < n {
        let newest = ec.n() as Vertex;
        let facet = *ec.complex.facets().iter().find(|f| f.contains(newest)).expect("every vertex is in a facet");
        ec = stellar_subdivide_facet(&ec, facet)?;
    }
    Ok(ec)
}

/// `±e_i` plus the point `(1/(d-1)) Σ e_i`, which lies beyond the facet
/// `{e_1, ..., e_d}` only; for `d = 5` this is `(1/4) Σ e_i`.
pub fn stellar_cross(d: usize) -> Result<EmbeddedComplex> {
    require(d >= 3, || format!("stellar cross needs d >= 3, got {d}"))?;
    let mut pts: Vec<Vec<Rational>> = (0..d).map(|i| unit(d, i, 1)).collect();
    pts.extend((0..d).map(|i| unit(d, i, -1)));
    pts.push(vec![ratio(1, d as i64 - 1); d]);
    boundary_from_points(&pts)
}

fn subdivided_facets(c: &SimplicialComplex, facet: Face, apex: Vertex) -> SimplicialComplex {
    let mut fs: Vec<Face> = c.facets().iter().copied().filter(|f| *f != facet).collect();
    fs.extend(facet.facets_of_boundary().map(|r| r.with(apex)));
    SimplicialComplex::from_faces(fs)
}

/// Adds a vertex just beyond `facet`: the barycenter pushed out along the
/// facet normal, halving the offset until the hull has the expected faces.
pub fn stellar_subdivide_facet(ec: &EmbeddedComplex, facet: Face) -> Result<EmbeddedComplex> {
    if !ec.complex.facets().contains(&facet) || ec.kind != EmbeddingKind::NaturalPolytope {
        return Err(Error::Precondition(format!("{facet} is not a facet of a natural polytope")));
    }
    let mut pts = point_list(ec)?;
    let apex = pts.len() as Vertex + 1;
    let (normal, _) = ec.facet_hyperplane(facet).ok_or(Error::InfeasibleStellarPoint(facet))?;
    let k = Rational::from_integer(facet.len().into());
    let bary: Vec<Rational> = (0..ec.d())
        .map(|i| facet.vertices().map(|v| ec.point(v)[i].clone()).sum::<Rational>() / &k)
        .collect();
    let expected = subdivided_facets(&ec.complex, facet, apex);
    pts.push(Vec::new());
    let mut eps = Rational::one();
    for _ in 0..64 {
        let q = bary.iter().zip(&normal).map(|(b, a)| b + &eps * a).collect();
        *pts.last_mut().unwrap() = q;
        if let Ok(next) = boundary_from_points(&pts) {
            if next.complex == expected {
                return Ok(next);
            }
        }
        eps /= rat(2);
    }
    Err(Error::InfeasibleStellarPoint(facet))
}

/// `P1 # P2` glued along `f1` and `f2`, where the `i`-th smallest vertex of
/// `f2` is identified with the `i`-th smallest vertex of `f1`. Vertices of
/// `P1` keep their labels; the remaining vertices of `P2` follow in order.
///
/// `P2` is first mapped affinely onto the far side of `f1`, then flattened
/// towards the barycenter of `f1` by a projective map fixing `aff(f1)` until
/// the hull realizes the sum.
pub fn connected_sum(ec1: &EmbeddedComplex, ec2: &EmbeddedComplex, f1: Face, f2: Face) -> Result<EmbeddedComplex> {
    let d = ec1.d();
    if ec2.d() != d {
        return Err(Error::DimensionMismatch { left: d, right: ec2.d() });
    }
    for (ec, f) in [(ec1, f1), (ec2, f2)] {
        if !ec.complex.facets().contains(&f) || ec.kind != EmbeddingKind::NaturalPolytope {
            return Err(Error::Precondition(format!("{f} is not a facet of a natural polytope")));
        }
    }
    let pts1 = point_list(ec1)?;
    point_list(ec2)?;
    let (normal, offset) = ec1.facet_hyperplane(f1).ok_or(Error::InfeasibleStellarPoint(f1))?;
    let k = Rational::from_integer(d.into());
    let bary: Vec<Rational> =
        (0..d).map(|i| f1.vertices().map(|v| ec1.point(v)[i].clone()).sum::<Rational>() / &k).collect();

    // affine map: f2 vertices onto f1 vertices, centroid of P2 beyond f1
    let pairs: Vec<(Vertex, Vertex)> = f2.vertices().zip(f1.vertices()).collect();
    let mut src: Vec<Vec<Rational>> = pairs.iter().map(|&(b, _)| ec2.point(b).to_vec()).collect();
    let mut dst: Vec<Vec<Rational>> = pairs.iter().map(|&(_, a)| ec1.point(a).to_vec()).collect();
    src.push(ec2.embedding.centroid());
    dst.push(bary.iter().zip(&normal).map(|(b, a)| b + a).collect());
    let s = QMatrix::from_rows(d + 1, src.into_iter().map(|mut p| {
        p.push(Rational::one());
        p
    }).collect());
    let t = QMatrix::from_rows(d, dst);
    let affine = solve(&s, &t).ok_or_else(|| Error::Precondition(format!("facet {f2} is degenerate")))?;
    let apply = |p: &[Rational]| -> Vec<Rational> {
        (0..d)
            .map(|j| p.iter().enumerate().map(|(i, x)| x * &affine[(i, j)]).sum::<Rational>() + &affine[(d, j)])
            .collect()
    };

    let n1 = pts1.len() as Vertex;
    let mut relabel = std::collections::BTreeMap::new();
    for &(b, a) in &pairs {
        relabel.insert(b, a);
    }
    let mut moved = Vec::new();
    for &v in ec2.complex.vertices() {
        if !f2.contains(v) {
            relabel.insert(v, n1 + moved.len() as Vertex + 1);
            moved.push(apply(ec2.point(v)));
        }
    }
    let mut expected: Vec<Face> = ec1.complex.facets().iter().copied().filter(|f| *f != f1).collect();
    expected.extend(
        ec2.complex.facets().iter().filter(|f| **f != f2).map(|f| Face::from_vertices(f.vertices().map(|v| relabel[&v]))),
    );
    let expected = SimplicialComplex::from_faces(expected);

    let mut lambda = Rational::one();
    for _ in 0..64 {
        let mut pts = pts1.clone();
        for y in &moved {
            let h = dot(&normal, y) - &offset;
            debug_assert!(h > Rational::zero());
            let scale = (Rational::one() + &lambda * h).recip();
            pts.push(bary.iter().zip(y).map(|(c, yi)| c + (yi - c) * &scale).collect());
        }
        if let Ok(ec) = boundary_from_points(&pts) {
            if ec.complex == expected {
                return Ok(ec);
            }
        }
        lambda *= rat(2);
    }
    Err(Error::Precondition(format!("could not realize the connected sum along {f1}")))
}

/// `∂Δ^k * ∂Δ^k` on labels `1..=k+1` and `k+2..=2k+2`, a `(2k-1)`-sphere with
/// a validated generic embedding in `Q^{2k}`.
pub fn join_of_simplex_boundaries(k: usize, seed: u64) -> Result<EmbeddedComplex> {
    join_of_simplex_boundary_pair(k, k, seed)
}

/// `∂Δ^k * ∂Δ^l`, a `(k+l-1)`-sphere, generically embedded in `Q^{k+l}`.
pub fn join_of_simplex_boundary_pair(k: usize, l: usize, seed: u64) -> Result<EmbeddedComplex> {
    require(k >= 1 && l >= 1, || format!("join needs k, l >= 1, got k={k}, l={l}"))?;
    let a = Face::from_vertices(1..=k as Vertex + 1);
    let b = Face::from_vertices(k as Vertex + 2..=(k + l) as Vertex + 2);
    let c = SimplicialComplex::simplex_boundary(a).join(&SimplicialComplex::simplex_boundary(b))?;
    generic_embedding(&c, k + l, seed)
}

/// Hull of `n` seeded random integer points on the paraboloid
/// `x_d = x_1^2 + ... + x_{d-1}^2` (all of them are vertices), followed by
/// `stacks` stellar subdivisions of randomly chosen facets.
pub fn random_polytope(d: usize, n: usize, stacks: usize, seed: u64) -> Result<EmbeddedComplex> {
    require(d >= 2 && n > d, || format!("random polytope needs d >= 2 and n > d, got d={d}, n={n}"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bound = 4 * n as i64;
    let mut ec = None;
    for _ in 0..64 {
        let mut seen = std::collections::BTreeSet::new();
        while seen.len() < n {
            seen.insert((0..d - 1).map(|_| rng.gen_range(-bound..=bound)).collect::<Vec<i64>>());
        }
        let pts: Vec<Vec<Rational>> = seen
            .into_iter()
            .map(|x| {
                let h: i64 = x.iter().map(|t| t * t).sum();
                x.into_iter().chain([h]).map(rat).collect()
            })
            .collect();
        if let Ok(found) = boundary_from_points(&pts) {
            ec = Some(found);
            break;
        }
    }
    let mut ec = ec.ok_or_else(|| Error::InvalidParameter("no simplicial random hull found".into()))?;
    for _ in 0..stacks {
        let facets = ec.complex.facets();
        let facet = facets[rng.gen_range(0..facets.len())];
        ec = stellar_subdivide_facet(&ec, facet)?;
    }
    Ok(ec)
}
