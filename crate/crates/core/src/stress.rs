//! Affine stresses: degree-`i` polynomials supported on faces and annihilated
//! by the derivative operators of `θ_1, ..., θ_d, ℓ`.
//!
//! A polynomial is killed by every directional derivative along the row space
//! of the R-matrix iff it is a polynomial in the linear forms `⟨w, x⟩` for
//! `w` in the kernel of the R-matrix (the affine dependencies of the points).
//! So `S_i` is computed as the degree-`i` polynomials in those forms whose
//! expansion vanishes on every monomial not supported on a face. That system
//! has one column per monomial in `n - d - 1` variables, far fewer than the
//! face-supported monomials the literal definition would use; the literal
//! kernel is kept as [`stress_space_direct`] for cross-checking.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::monomial::{all_monomials, is_squarefree, support, Exponents, MonomialBasis};
use crate::complex::{Face, SimplicialComplex, Vertex};
use crate::error::{Error, Result};
use crate::exactla::{dot, format_rational, kernel_basis, ratio, QMatrix, Rational, Subspace};
use crate::geom::{lsop_and_lefschetz, prime_components, EmbeddedComplex, EmbeddingKind};

/// Basis of `S_i`, in coordinates indexed by the face-supported degree-`i`
/// monomials (graded-lex order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StressBasis {
    pub degree: usize,
    vertices: Vec<Vertex>,
    monomials: Vec<Exponents>,
    pub space: Subspace,
}

impl StressBasis {
    fn new(c: &SimplicialComplex, degree: usize, space: Subspace) -> Self {
        let monomials = MonomialBasis::supported(c, degree).monomials().to_vec();
        StressBasis { degree, vertices: c.vertices().to_vec(), monomials, space }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn monomials(&self) -> &[Exponents] {
        &self.monomials
    }

    pub fn vectors(&self) -> Vec<Vec<Rational>> {
        self.space.basis_vectors()
    }

    fn monomial_index(&self) -> HashMap<&Exponents, usize> {
        self.monomials.iter().enumerate().map(|(i, m)| (m, i)).collect()
    }

    /// Support of the squarefree monomial at coordinate `i`, if it is one.
    fn squarefree_face(&self, i: usize) -> Option<Face> {
        let m = &self.monomials[i];
        is_squarefree(m).then(|| support(m, &self.vertices))
    }
}

/// Coefficient vectors of `Π_j ⟨w_j, x⟩^{β_j}` over all degree-`k`
/// monomials, for every `β` of degree `k`, built up degree by degree.
struct Expansions {
    forms: Vec<Vec<Rational>>,
    n: usize,
}

impl Expansions {
    fn of_degree(&self, k: usize) -> (MonomialBasis, Vec<Exponents>, Vec<Vec<Rational>>) {
        let m = self.forms.len();
        let mut xs = MonomialBasis::all(self.n, 0);
        let mut zs = all_monomials(m, 0);
        let mut polys = vec![vec![Rational::one()]];
        for t in 1..=k {
            let next_xs = MonomialBasis::all(self.n, t);
            let next_zs = all_monomials(m, t);
            let z_index: HashMap<&Exponents, usize> = zs.iter().enumerate().map(|(i, z)| (z, i)).collect();
            let next: Vec<Vec<Rational>> = next_zs
                .iter()
                .map(|beta| {
                    let j = beta.iter().position(|&e| e > 0).unwrap();
                    let mut prev = beta.clone();
                    prev[j] -= 1;
                    times_linear(&xs, &polys[z_index[&prev]], &self.forms[j], &next_xs)
                })
                .collect();
            xs = next_xs;
            zs = next_zs;
            polys = next;
        }
        (xs, zs, polys)
    }
}

fn times_linear(from: &MonomialBasis, src: &[Rational], form: &[Rational], to: &MonomialBasis) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); to.len()];
    for (i, c) in src.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut e = from.get(i).clone();
        for (v, a) in form.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            e[v] += 1;
            out[to.index_of(&e).unwrap()] += c * a;
            e[v] -= 1;
        }
    }
    out
}

pub fn stress_space(ec: &EmbeddedComplex, i: usize) -> StressBasis {
    let c = &ec.complex;
    let n = c.n_vertices();
    let deps = kernel_basis(&lsop_and_lefschetz(ec).matrix).basis_vectors();
    let (xs, _, polys) = Expansions { forms: deps, n }.of_degree(i);
    let vs = c.vertices();
    let outside: Vec<usize> = (0..xs.len()).filter(|&k| !c.contains(support(xs.get(k), vs))).collect();
    let inside: Vec<usize> = (0..xs.len()).filter(|&k| c.contains(support(xs.get(k), vs))).collect();

    let constraints = QMatrix::from_rows(
        polys.len(),
        outside.iter().map(|&k| polys.iter().map(|p| p[k].clone()).collect()).collect(),
    );
    let ker = kernel_basis(&constraints);
    let vectors = ker.basis_vectors().into_iter().map(|coef| {
        inside
            .iter()
            .map(|&k| coef.iter().zip(&polys).filter(|(a, _)| !a.is_zero()).map(|(a, p)| a * &p[k]).sum())
            .collect()
    });
    // `inside` enumerates the supported monomials in the same order as
    // MonomialBasis::supported
    StressBasis::new(c, i, Subspace::span(inside.len(), vectors))
}

/// Literal definition: the kernel of `λ ↦ (∂_{θ_1} λ, ..., ∂_{θ_d} λ, ∂_ℓ λ)`
/// over face-supported degree-`i` polynomials.
pub fn stress_space_direct(ec: &EmbeddedComplex, i: usize) -> StressBasis {
    let c = &ec.complex;
    let src = MonomialBasis::supported(c, i);
    if i == 0 {
        return StressBasis::new(c, 0, Subspace::full(src.len()));
    }
    let dst = MonomialBasis::supported(c, i - 1);
    let r = lsop_and_lefschetz(ec).matrix;
    let mut m = QMatrix::zeros(r.rows() * dst.len(), src.len());
    for (col, e) in src.monomials().iter().enumerate() {
        for v in 0..e.len() {
            if e[v] == 0 {
                continue;
            }
            let mut lower = e.clone();
            lower[v] -= 1;
            let row = dst.index_of(&lower).unwrap();
            for form in 0..r.rows() {
                let coef = &r[(form, v)] * Rational::from_integer(e[v].into());
                m[(form * dst.len() + row, col)] += coef;
            }
        }
    }
    StressBasis::new(c, i, kernel_basis(&m))
}

/// `∂λ/∂x_v` for a vector over degree-`i` supported monomials, returned over
/// degree-`(i-1)` supported monomials.
fn partial(sb: &StressBasis, lower: &MonomialBasis, lambda: &[Rational], v: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); lower.len()];
    for (k, c) in lambda.iter().enumerate() {
        let e = &sb.monomials[k];
        if c.is_zero() || e[v] == 0 {
            continue;
        }
        let mut f = e.clone();
        f[v] -= 1;
        out[lower.index_of(&f).unwrap()] += c * Rational::from_integer(e[v].into());
    }
    out
}

/// Span of all order-`r` partial derivatives of `S_i`, inside degree `i - r`.
pub fn derivative_map(ec: &EmbeddedComplex, sb: &StressBasis, r: usize) -> StressBasis {
    let c = &ec.complex;
    let mut cur = sb.clone();
    for _ in 0..r {
        let deg = cur.degree - 1;
        let lower = MonomialBasis::supported(c, deg);
        let vectors: Vec<Vec<Rational>> = cur
            .vectors()
            .iter()
            .flat_map(|lam| (0..c.n_vertices()).map(|v| partial(&cur, &lower, lam, v)).collect::<Vec<_>>())
            .collect();
        cur = StressBasis::new(c, deg, Subspace::span(lower.len(), vectors));
    }
    cur
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReconstructionCheck {
    pub holds: bool,
    /// `dim S_k`.
    pub lhs_dim: usize,
    /// Dimension of the derivatives of `S_i` of order `i - k`.
    pub rhs_dim: usize,
    pub contained: bool,
}

/// Whether `S_k` equals the span of all order-`(i-k)` derivatives of `S_i`.
pub fn check_reconstruction(ec: &EmbeddedComplex, i: usize, k: usize) -> Result<ReconstructionCheck> {
    if !(1 <= k && k < i) {
        return Err(Error::InvalidParameter(format!("need 1 <= k < i, got i={i}, k={k}")));
    }
    let lhs = stress_space(ec, k);
    let rhs = derivative_map(ec, &stress_space(ec, i), i - k);
    Ok(ReconstructionCheck {
        holds: crate::exactla::subspace_equal(&lhs.space, &rhs.space)?,
        lhs_dim: lhs.dim(),
        rhs_dim: rhs.dim(),
        contained: crate::exactla::subspace_contains(&lhs.space, &rhs.space)?,
    })
}

/// Number of minimal generators of the inverse system in degree `-k`:
/// `dim S_k` minus the span of first derivatives of `S_{k+1}`.
pub fn inverse_system_generators(ec: &EmbeddedComplex, k: usize) -> usize {
    let here = stress_space(ec, k);
    let below = derivative_map(ec, &stress_space(ec, k + 1), 1);
    here.dim() - below.dim()
}

/// Weights `λ_F` on the squarefree monomials of a stress.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeWeights {
    pub degree: usize,
    pub weights: BTreeMap<Face, Rational>,
}

impl SquarefreeWeights {
    pub fn get(&self, f: Face) -> Rational {
        self.weights.get(&f).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.weights.values().all(Zero::is_zero)
    }
}

/// Every `(i-1)`-face with its coefficient in `λ` (zeros included).
pub fn squarefree_part(sb: &StressBasis, lambda: &[Rational]) -> SquarefreeWeights {
    let weights = (0..sb.monomials.len())
        .filter_map(|k| sb.squarefree_face(k).map(|f| (f, lambda[k].clone())))
        .collect();
    SquarefreeWeights { degree: sb.degree, weights }
}

/// Rebuilds a 2-stress from its edge weights: the coefficient of `x_u^2` is
/// `-1/2` times the sum of the weights of the edges at `u`.
pub fn reconstruct_from_squarefree(weights: &SquarefreeWeights, ec: &EmbeddedComplex) -> Result<Vec<Rational>> {
    if weights.degree != 2 {
        return Err(Error::InvalidParameter("reconstruction is implemented for 2-stresses".into()));
    }
    let s2 = stress_space(ec, 2);
    let vs = ec.complex.vertices();
    let half = ratio(-1, 2);
    let lambda: Vec<Rational> = s2
        .monomials
        .iter()
        .map(|m| {
            let f = support(m, vs);
            if is_squarefree(m) {
                weights.get(f)
            } else {
                let u = f.vertices().next().unwrap();
                let sum: Rational = weights.weights.iter().filter(|(e, _)| e.contains(u)).map(|(_, w)| w.clone()).sum();
                &half * sum
            }
        })
        .collect();
    if !s2.space.contains_vector(&lambda) {
        return Err(Error::ReconstructionMismatch);
    }
    Ok(lambda)
}

/// `Σ_v λ_{uv} (p(u) - p(v))` at every vertex `u`.
pub fn balancing_residuals(weights: &SquarefreeWeights, ec: &EmbeddedComplex) -> Vec<(Vertex, Vec<Rational>)> {
    ec.complex
        .vertices()
        .iter()
        .map(|&u| {
            let pu = ec.point(u);
            let mut acc = vec![Rational::zero(); ec.d()];
            for (e, w) in weights.weights.iter().filter(|(e, w)| e.contains(u) && !w.is_zero()) {
                let v = e.without(u).vertices().next().unwrap();
                for (a, (x, y)) in acc.iter_mut().zip(pu.iter().zip(ec.point(v))) {
                    *a += w * (x - y);
                }
            }
            (u, acc)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RigidityReport {
    pub d: usize,
    pub f0: usize,
    pub f1: usize,
    pub dim_s2: usize,
    /// `f_1 - d f_0 + C(d+1, 2)`.
    pub lower_bound: i64,
    pub is_inf_rigid: bool,
}

/// Stress count of the graph against the rigidity lower bound.
pub fn rigidity_report(ec: &EmbeddedComplex) -> RigidityReport {
    let graph = ec.complex.skeleton(1);
    let g = ec.restrict_to(graph).expect("skeleton of an embedded complex");
    rigidity_of(&g)
}

fn rigidity_of(g: &EmbeddedComplex) -> RigidityReport {
    let d = g.d();
    let f0 = g.complex.faces(0).len();
    let f1 = g.complex.faces(1).len();
    let dim_s2 = stress_space(g, 2).dim();
    let lower_bound = f1 as i64 - (d * f0) as i64 + (d * (d + 1) / 2) as i64;
    RigidityReport { d, f0, f1, dim_s2, lower_bound, is_inf_rigid: dim_s2 as i64 == lower_bound }
}

/// Rigidity report of the graph with one edge deleted.
pub fn rigidity_without_edge(ec: &EmbeddedComplex, edge: Face) -> Result<RigidityReport> {
    let graph = ec.complex.skeleton(1);
    if edge.len() != 2 || !graph.contains(edge) {
        return Err(Error::NotAFace(edge));
    }
    let mut faces: Vec<Face> = graph.faces(1).iter().copied().filter(|e| *e != edge).collect();
    faces.extend(graph.vertices().iter().map(|&v| Face::singleton(v)));
    Ok(rigidity_of(&ec.restrict_to(SimplicialComplex::from_faces(faces))?))
}

/// Faces `F` with `|F| = i` carrying a nonzero weight in some basis stress.
pub fn weighted_faces(sb: &StressBasis) -> HashSet<Face> {
    let mut out = HashSet::new();
    for lam in sb.vectors() {
        for (k, x) in lam.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            if let Some(f) = sb.squarefree_face(k) {
                out.insert(f);
            }
        }
    }
    out
}

/// Whether some stress of degree `i` has a nonzero weight on a face
/// containing `f`. Also returns such a stress.
pub fn participation_witness(ec: &EmbeddedComplex, i: usize, f: Face) -> Result<Option<Vec<Rational>>> {
    if !ec.complex.contains(f) {
        return Err(Error::NotAFace(f));
    }
    if f.len() > i {
        return Err(Error::InvalidParameter(format!("{f} has more than {i} vertices, so no degree-{i} stress weights it")));
    }
    let sb = stress_space(ec, i);
    Ok(sb.vectors().into_iter().find(|lam| {
        lam.iter().enumerate().any(|(k, x)| !x.is_zero() && sb.squarefree_face(k).is_some_and(|g| f.is_subset(g)))
    }))
}

pub fn face_participation(ec: &EmbeddedComplex, i: usize, f: Face) -> Result<bool> {
    Ok(participation_witness(ec, i, f)?.is_some())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DehnCheck {
    pub a: Vertex,
    pub b: Vertex,
    /// Vertices of the prime components met by the open chord.
    pub q_vertices: Vec<Vertex>,
    pub stress_dim: usize,
    pub unique_stress: bool,
    /// Normalized so the chord has weight 1.
    pub weights: Option<SquarefreeWeights>,
    pub all_negative_at_endpoints: bool,
}

/// For a missing edge `ab` of a simplicial 3-polytope: the stress of
/// `G(Q) ∪ ab` with `λ_ab = 1`, where `Q` is the union of the prime components
/// meeting the open segment `(p(a), p(b))`, and whether it is negative on
/// every other edge of `G(Q)` at `a` and at `b`.
pub fn dehn_negative_weights_check(ec: &EmbeddedComplex, a: Vertex, b: Vertex) -> Result<DehnCheck> {
    if ec.d() != 3 || ec.kind != EmbeddingKind::NaturalPolytope {
        return Err(Error::Precondition("needs a natural simplicial 3-polytope".into()));
    }
    let e = Face::from_vertices([a, b]);
    let c = &ec.complex;
    if a == b || !c.contains(Face::singleton(a)) || !c.contains(Face::singleton(b)) {
        return Err(Error::Precondition(format!("{a} and {b} must be distinct vertices")));
    }
    if c.contains(e) {
        return Err(Error::Precondition(format!("{e} is an edge, not a missing edge")));
    }
    let (pa, pb) = (ec.point(a), ec.point(b));
    let dir: Vec<Rational> = pb.iter().zip(pa).map(|(x, y)| x - y).collect();

    for &v in c.vertices().iter().filter(|&&v| v != a && v != b) {
        let off: Vec<Rational> = ec.point(v).iter().zip(pa).map(|(x, y)| x - y).collect();
        let k = dir.iter().position(|x| !x.is_zero()).unwrap();
        let t = &off[k] / &dir[k];
        let collinear = off.iter().zip(&dir).all(|(o, dd)| *o == &t * dd);
        if collinear && t > Rational::zero() && t < Rational::one() {
            return Err(Error::SegmentThroughVertex(a, b, v));
        }
    }
    for tau in crate::geom::missing_facets(ec) {
        check_cut_crossing(ec, tau, a, b)?;
    }

    let mut q = Face::EMPTY;
    let mut edges: Vec<Face> = Vec::new();
    for comp in prime_components(ec)? {
        if meets_open_chord(&comp, pa, &dir, a, b)? {
            q = q.union(comp.complex.vertex_face());
            edges.extend(comp.complex.faces(1));
        }
    }
    edges.push(e);
    let graph = SimplicialComplex::from_faces(edges.iter().copied());
    let framework = ec.restrict_to(graph)?;
    let sb = stress_space(&framework, 2);
    let mut check = DehnCheck {
        a,
        b,
        q_vertices: q.to_vec(),
        stress_dim: sb.dim(),
        unique_stress: false,
        weights: None,
        all_negative_at_endpoints: false,
    };
    if sb.dim() != 1 {
        return Ok(check);
    }
    let w = squarefree_part(&sb, &sb.vectors()[0]);
    let at_e = w.get(e);
    if at_e.is_zero() {
        return Ok(check);
    }
    let normalized = SquarefreeWeights {
        degree: 2,
        weights: w.weights.iter().map(|(f, x)| (*f, x / &at_e)).collect(),
    };
    check.unique_stress = true;
    check.all_negative_at_endpoints = normalized
        .weights
        .iter()
        .filter(|(f, _)| **f != e && (f.contains(a) || f.contains(b)))
        .all(|(_, x)| *x < Rational::zero());
    check.weights = Some(normalized);
    Ok(check)
}

/// Rejects chords that cross a cut plane on the boundary of the cut triangle.
fn check_cut_crossing(ec: &EmbeddedComplex, tau: Face, a: Vertex, b: Vertex) -> Result<()> {
    let pts: Vec<&[Rational]> = tau.vertices().map(|v| ec.point(v)).collect();
    let Some((n, c)) = crate::geom::hyperplane_through(&pts, 3) else { return Ok(()) };
    let sa = dot(&n, ec.point(a)) - &c;
    let sb = dot(&n, ec.point(b)) - &c;
    if sa.is_zero() || sb.is_zero() || (sa > Rational::zero()) == (sb > Rational::zero()) {
        return Ok(());
    }
    let t = &sa / (&sa - &sb);
    let x: Vec<Rational> = ec.point(a).iter().zip(ec.point(b)).map(|(p, q)| p + &t * (q - p)).collect();
    // barycentric coordinates of x in tau
    let mut rows: Vec<Vec<Rational>> = (0..3).map(|r| pts.iter().map(|p| p[r].clone()).chain([x[r].clone()]).collect()).collect();
    rows.push(vec![Rational::one(), Rational::one(), Rational::one(), Rational::one()]);
    let red = crate::exactla::rref(&QMatrix::from_rows(4, rows));
    if red.pivot_cols != [0, 1, 2] {
        return Ok(());
    }
    let mu: Vec<Rational> = (0..3).map(|r| red.reduced[(r, 3)].clone()).collect();
    let inside = mu.iter().all(|m| *m >= Rational::zero());
    if inside && mu.iter().any(Zero::is_zero) {
        return Err(Error::DegenerateSegment(a, b, format!("the chord meets the boundary of the cut triangle {tau}")));
    }
    Ok(())
}

/// Whether `p(a) + t·dir` lies in the component for a nondegenerate range of
/// `t` inside `(0, 1)`.
fn meets_open_chord(comp: &EmbeddedComplex, pa: &[Rational], dir: &[Rational], a: Vertex, b: Vertex) -> Result<bool> {
    let (mut lo, mut hi) = (Rational::zero(), Rational::one());
    for &f in comp.complex.facets() {
        let (n, c) = comp.facet_hyperplane(f).expect("facets of a hull are supporting");
        // n·pa + t n·dir <= c
        let base = &c - dot(&n, pa);
        let slope = dot(&n, dir);
        if slope.is_zero() {
            if base < Rational::zero() {
                return Ok(false);
            }
        } else if slope > Rational::zero() {
            hi = hi.min(&base / &slope);
        } else {
            lo = lo.max(&base / &slope);
        }
    }
    if lo == hi && lo > Rational::zero() && lo < Rational::one() {
        return Err(Error::DegenerateSegment(a, b, "the chord touches a prime component in a single point".into()));
    }
    Ok(lo < hi)
}

/// JSON dump of a stress basis.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StressDump {
    pub degree: usize,
    pub vertices: Vec<Vertex>,
    /// Exponent vector (comma-separated, vertex order) to coefficient.
    pub basis: Vec<BTreeMap<String, String>>,
    /// Face (comma-separated labels) to weight.
    pub squarefree: Vec<BTreeMap<String, String>>,
}

impl StressBasis {
    pub fn dump(&self) -> StressDump {
        let key = |e: &Exponents| e.iter().map(u8::to_string).collect::<Vec<_>>().join(",");
        let face_key = |f: Face| f.vertices().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
        let vectors = self.vectors();
        StressDump {
            degree: self.degree,
            vertices: self.vertices.clone(),
            basis: vectors
                .iter()
                .map(|lam| {
                    lam.iter()
                        .enumerate()
                        .filter(|(_, x)| !x.is_zero())
                        .map(|(k, x)| (key(&self.monomials[k]), format_rational(x)))
                        .collect()
                })
                .collect(),
            squarefree: vectors
                .iter()
                .map(|lam| {
                    squarefree_part(self, lam)
                        .weights
                        .into_iter()
                        .filter(|(_, x)| !x.is_zero())
                        .map(|(f, x)| (face_key(f), format_rational(&x)))
                        .collect()
                })
                .collect(),
        }
    }

    /// Coordinates of `lambda` as a map from exponent vectors.
    pub fn as_polynomial(&self, lambda: &[Rational]) -> BTreeMap<Exponents, Rational> {
        self.monomial_index()
            .into_iter()
            .filter(|(_, k)| !lambda[*k].is_zero())
            .map(|(m, k)| (m.clone(), lambda[k].clone()))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{rat, subspace_contains, subspace_equal};
    use crate::geom::{cross_polytope, cyclic_polytope, simplex_boundary, stellar_cross};

    #[test]
    fn matches_direct_kernel() {
        for ec in [cross_polytope(4).unwrap(), cyclic_polytope(4, 7).unwrap(), simplex_boundary(3).unwrap()] {
            for i in 1..=3 {
                let fast = stress_space(&ec, i);
                let slow = stress_space_direct(&ec, i);
                assert!(subspace_equal(&fast.space, &slow.space).unwrap(), "degree {i}");
            }
        }
    }

    #[test]
    fn dimensions_are_g_numbers() {
        let ec = cross_polytope(4).unwrap();
        assert_eq!(stress_space(&ec, 1).dim(), 3);
        assert_eq!(stress_space(&ec, 2).dim(), 2);
        let gamma = stellar_cross(5).unwrap();
        assert_eq!(stress_space(&gamma, 2).dim(), 5);
        // Dehn: simplicial 3-polytopes carry no 2-stress
        assert_eq!(stress_space(&cross_polytope(3).unwrap(), 2).dim(), 0);
    }

    #[test]
    fn derivative_formula_on_two_stress() {
        let ec = cross_polytope(4).unwrap();
        let s2 = stress_space(&ec, 2);
        let lower = MonomialBasis::supported(&ec.complex, 1);
        let lam = &s2.vectors()[0];
        let w = squarefree_part(&s2, lam);
        for v in 0..ec.n() {
            let u_label = ec.complex.vertices()[v];
            let d = partial(&s2, &lower, lam, v);
            for (k, x) in d.iter().enumerate() {
                let other = support(lower.get(k), ec.complex.vertices()).vertices().next().unwrap();
                let expected = if other == u_label {
                    -w.weights.iter().filter(|(e, _)| e.contains(u_label)).map(|(_, x)| x.clone()).sum::<Rational>()
                } else {
                    w.get(Face::from_vertices([u_label, other]))
                };
                assert_eq!(*x, expected);
            }
        }
    }

    #[test]
    fn round_trip_and_balancing() {
        let ec = stellar_cross(5).unwrap();
        let s2 = stress_space(&ec, 2);
        for lam in s2.vectors() {
            let w = squarefree_part(&s2, &lam);
            assert_eq!(reconstruct_from_squarefree(&w, &ec).unwrap(), lam);
            for (_, r) in balancing_residuals(&w, &ec) {
                assert!(r.iter().all(Zero::is_zero));
            }
        }
        let zero = squarefree_part(&s2, &vec![rat(0); s2.monomials().len()]);
        assert!(zero.is_zero());
    }

    #[test]
    fn reconstruction_on_cyclic() {
        let ec = cyclic_polytope(5, 8).unwrap();
        let r = check_reconstruction(&ec, 2, 1).unwrap();
        assert!(r.holds && r.contained);
        assert_eq!(r.lhs_dim, 2);
    }

    #[test]
    fn derivatives_stay_stresses() {
        let ec = cyclic_polytope(6, 9).unwrap();
        let s2 = stress_space(&ec, 2);
        let d = derivative_map(&ec, &s2, 1);
        assert!(subspace_contains(&stress_space(&ec, 1).space, &d.space).unwrap());
    }

    #[test]
    fn rigidity_counts() {
        let r = rigidity_report(&simplex_boundary(3).unwrap());
        assert_eq!((r.dim_s2, r.lower_bound), (0, 0));
        assert!(r.is_inf_rigid);
        let r = rigidity_report(&cross_polytope(4).unwrap());
        assert_eq!(r.dim_s2, 2);
        assert!(r.is_inf_rigid);
    }

    #[test]
    fn participation() {
        let ec = cross_polytope(4).unwrap();
        for e in ec.complex.faces(1) {
            assert!(face_participation(&ec, 2, *e).unwrap());
        }
        let s = simplex_boundary(4).unwrap();
        assert!(!face_participation(&s, 2, Face::from_vertices([1, 2])).unwrap());
        assert!(face_participation(&ec, 2, Face::from_vertices([1, 5])).is_err());
    }

    #[test]
    fn octahedron_chord() {
        let ec = cross_polytope(3).unwrap();
        let check = dehn_negative_weights_check(&ec, 1, 4).unwrap();
        assert!(check.unique_stress);
        assert!(check.all_negative_at_endpoints);
        assert!(dehn_negative_weights_check(&simplex_boundary(3).unwrap(), 1, 2).is_err());
    }
}
