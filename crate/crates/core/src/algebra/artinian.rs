//! Artinian reductions `R/(I_Δ + (Θ))` and `R/(I_Δ + (Θ, ℓ))`.
//!
//! The linear forms are eliminated by substitution: after row reduction of
//! their coefficient matrix, each pivot variable is a combination of the
//! non-pivot ("free") variables `y`. The quotient is then `Q[y]` modulo the
//! image of `I_Δ`, handled degree by degree with an echelon basis of the
//! ideal; standard monomials (non-pivot columns) form the basis of `A_k`.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::monomial::MonomialBasis;
use crate::complex::Vertex;
use crate::error::{Error, Result};
use crate::exactla::{rref, EchelonBasis, QMatrix, Rational};
use crate::geom::{lsop_and_lefschetz, EmbeddedComplex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variant {
    /// `R/(I_Δ + (θ_1, ..., θ_d))`.
    Theta,
    /// `R/(I_Δ + (θ_1, ..., θ_d, ℓ))`.
    ThetaEll,
}

#[derive(Clone, Debug)]
struct DegreePart {
    monomials: MonomialBasis,
    ideal: EchelonBasis,
    /// Monomial indices outside the ideal's pivots, i.e. the basis of `A_k`.
    standard: Vec<usize>,
}

/// Per-degree model of an Artinian reduction.
#[derive(Clone, Debug)]
pub struct GradedAlgebraModel {
    variant: Variant,
    d: usize,
    vertices: Vec<Vertex>,
    free: Vec<usize>,
    subst: Vec<Vec<Rational>>,
    degrees: Vec<DegreePart>,
}

pub fn artinian_reduction(ec: &EmbeddedComplex, variant: Variant) -> Result<GradedAlgebraModel> {
    let order: Vec<usize> = (0..ec.n()).collect();
    artinian_reduction_with_order(ec, variant, &order)
}

/// As [`artinian_reduction`], but the free variables are chosen as the
/// non-pivot columns after permuting the vertex columns by `order`.
pub fn artinian_reduction_with_order(
    ec: &EmbeddedComplex,
    variant: Variant,
    order: &[usize],
) -> Result<GradedAlgebraModel> {
    let n = ec.n();
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted.iter().copied().ne(0..n) {
        return Err(Error::InvalidParameter("column order is not a permutation".into()));
    }
    let r = lsop_and_lefschetz(ec);
    let forms = match variant {
        Variant::Theta => r.theta(),
        Variant::ThetaEll => r.matrix.clone(),
    };
    let permuted = QMatrix::from_rows(
        n,
        (0..forms.rows()).map(|i| order.iter().map(|&c| forms[(i, c)].clone()).collect()).collect(),
    );
    let red = rref(&permuted);
    let pivot_set: Vec<bool> = (0..n).map(|c| red.pivot_cols.contains(&c)).collect();
    let mut free: Vec<usize> = (0..n).filter(|&c| !pivot_set[c]).map(|c| order[c]).collect();
    free.sort_unstable();
    let m = free.len();
    let y_of = |v: usize| free.binary_search(&v).ok();

    let mut subst = vec![vec![Rational::zero(); m]; n];
    for &v in &free {
        subst[v][y_of(v).unwrap()] = Rational::from_integer(1.into());
    }
    for (row, &p) in red.pivot_cols.iter().enumerate() {
        let target = &mut subst[order[p]];
        for c in (0..n).filter(|&c| !pivot_set[c]) {
            let a = &red.reduced[(row, c)];
            if !a.is_zero() {
                target[y_of(order[c]).unwrap()] = -a.clone();
            }
        }
    }

    let mut model = GradedAlgebraModel {
        variant,
        d: ec.d(),
        vertices: ec.complex.vertices().to_vec(),
        free,
        subst,
        degrees: Vec::new(),
    };
    model.scan(ec)?;
    if variant == Variant::Theta {
        model.check_lsop(ec)?;
    }
    Ok(model)
}

/// `src` (over `from`) times a linear form in the free variables, over `to`.
fn mul_linear(from: &MonomialBasis, src: &[Rational], form: &[Rational], to: &MonomialBasis) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); to.len()];
    for (i, c) in src.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut e = from.get(i).clone();
        for (j, a) in form.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            e[j] += 1;
            out[to.index_of(&e).expect("degree k+1 monomial")] += c * a;
            e[j] -= 1;
        }
    }
    out
}

impl GradedAlgebraModel {
    fn scan(&mut self, ec: &EmbeddedComplex) -> Result<()> {
        let m = self.free.len();
        let vs = ec.complex.vertices();
        let missing = ec.complex.missing_faces(None);
        // Theta: degrees 0..=d+1 (the last must vanish); ThetaEll: until zero
        let limit = match self.variant {
            Variant::Theta => self.d + 1,
            Variant::ThetaEll => usize::MAX,
        };
        let mut k = 0;
        loop {
            let monomials = MonomialBasis::all(m, k);
            let mut ideal = EchelonBasis::new(monomials.len());
            if let Some(prev) = self.degrees.last() {
                'outer: for row in prev.ideal.rows() {
                    for j in 0..m {
                        let mut unit = vec![Rational::zero(); m];
                        unit[j] = Rational::from_integer(1.into());
                        ideal.insert(mul_linear(&prev.monomials, row, &unit, &monomials));
                        if ideal.is_full() {
                            break 'outer;
                        }
                    }
                }
            }
            for face in missing.iter().filter(|f| f.len() == k) {
                if ideal.is_full() {
                    break;
                }
                ideal.insert(self.image_of_squarefree(face.vertices().map(|v| vs.binary_search(&v).unwrap())));
            }
            let pivots = ideal.pivot_cols();
            let standard: Vec<usize> = (0..monomials.len()).filter(|c| pivots.binary_search(c).is_err()).collect();
            let done = standard.is_empty() || k >= limit;
            self.degrees.push(DegreePart { monomials, ideal, standard });
            if done {
                return Ok(());
            }
            k += 1;
        }
    }

    /// `φ(x_{v_1} ⋯ x_{v_t})` over the degree-`t` free monomials.
    fn image_of_squarefree(&self, idx: impl Iterator<Item = usize>) -> Vec<Rational> {
        let m = self.free.len();
        let mut basis = MonomialBasis::all(m, 0);
        let mut poly = vec![Rational::from_integer(1.into())];
        for v in idx {
            let next = MonomialBasis::all(m, basis.degree() + 1);
            poly = mul_linear(&basis, &poly, &self.subst[v], &next);
            basis = next;
        }
        poly
    }

    fn check_lsop(&self, ec: &EmbeddedComplex) -> Result<()> {
        if !ec.complex.is_pure() || ec.complex.dim() != self.d as isize - 1 {
            return Ok(());
        }
        let h = ec.complex.fgm_vectors().h;
        for k in 0..=self.d + 1 {
            let expected = h.get(k).map_or(0, |&x| x as usize);
            if self.dim(k) != expected {
                return Err(Error::LsopFailure { degree: k, got: self.dim(k), expected });
            }
        }
        Ok(())
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Labels of the vertices whose variables generate the quotient.
    pub fn free_vertices(&self) -> Vec<Vertex> {
        self.free.iter().map(|&i| self.vertices[i]).collect()
    }

    pub fn n_free(&self) -> usize {
        self.free.len()
    }

    /// Image of `x_v` as a linear form in the free variables.
    pub fn substitution(&self, v: Vertex) -> Option<&[Rational]> {
        self.vertices.binary_search(&v).ok().map(|i| self.subst[i].as_slice())
    }

    pub fn dim(&self, k: usize) -> usize {
        self.degrees.get(k).map_or(0, |p| p.standard.len())
    }

    /// `dim A_0, dim A_1, ...` up to the last nonzero degree.
    pub fn hilbert_function(&self) -> Vec<usize> {
        let mut h: Vec<usize> = (0..self.degrees.len()).map(|k| self.dim(k)).collect();
        while h.last() == Some(&0) {
            h.pop();
        }
        h
    }

    pub fn top_degree(&self) -> usize {
        self.hilbert_function().len().saturating_sub(1)
    }

    /// Standard monomials (exponents over the free variables) spanning `A_k`.
    pub fn basis_monomials(&self, k: usize) -> Vec<Vec<u8>> {
        self.degrees
            .get(k)
            .map(|p| p.standard.iter().map(|&i| p.monomials.get(i).clone()).collect())
            .unwrap_or_default()
    }

    /// Coordinates in `A_k` of a polynomial given over all degree-`k` free
    /// monomials.
    pub fn normal_form(&self, k: usize, poly: &[Rational]) -> Vec<Rational> {
        let Some(p) = self.degrees.get(k) else { return Vec::new() };
        let mut v = poly.to_vec();
        p.ideal.reduce(&mut v);
        p.standard.iter().map(|&i| v[i].clone()).collect()
    }

    /// Coordinates in `A_k` of the class of an `x`-monomial (exponents over
    /// the vertices, in vertex order).
    pub fn project_monomial(&self, exps: &[u8]) -> Vec<Rational> {
        let k: usize = exps.iter().map(|&e| e as usize).sum();
        if self.degrees.get(k).is_none() {
            return Vec::new();
        }
        let idx = exps.iter().enumerate().flat_map(|(i, &e)| std::iter::repeat_n(i, e as usize));
        let mut basis = MonomialBasis::all(self.free.len(), 0);
        let mut poly = vec![Rational::from_integer(1.into())];
        for v in idx {
            let next = MonomialBasis::all(self.free.len(), basis.degree() + 1);
            poly = mul_linear(&basis, &poly, &self.subst[v], &next);
            basis = next;
        }
        self.normal_form(k, &poly)
    }

    /// Matrix of the normal-form map from the given `x`-monomials to `A_k`
    /// (one column per monomial).
    pub fn projector(&self, monomials: &MonomialBasis) -> QMatrix {
        let k = monomials.degree();
        let mut out = QMatrix::zeros(self.dim(k), monomials.len());
        for (j, e) in monomials.monomials().iter().enumerate() {
            for (i, x) in self.project_monomial(e).into_iter().enumerate() {
                out[(i, j)] = x;
            }
        }
        out
    }

    /// Multiplication by a linear form over the free variables, `A_k -> A_{k+1}`.
    pub fn multiplication_by_free_form(&self, k: usize, form: &[Rational]) -> QMatrix {
        let (rows, cols) = (self.dim(k + 1), self.dim(k));
        let mut out = QMatrix::zeros(rows, cols);
        if rows == 0 || cols == 0 {
            return out;
        }
        let (src, dst) = (&self.degrees[k], &self.degrees[k + 1]);
        for (col, &s) in src.standard.iter().enumerate() {
            let mut unit = vec![Rational::zero(); src.monomials.len()];
            unit[s] = Rational::from_integer(1.into());
            let image = mul_linear(&src.monomials, &unit, form, &dst.monomials);
            for (row, x) in self.normal_form(k + 1, &image).into_iter().enumerate() {
                out[(row, col)] = x;
            }
        }
        out
    }

    /// Multiplication by a linear form `Σ c_v x_v` given over the vertices.
    pub fn multiplication_by(&self, k: usize, form: &[Rational]) -> QMatrix {
        let mut free_form = vec![Rational::zero(); self.free.len()];
        for (c, s) in form.iter().zip(&self.subst) {
            if c.is_zero() {
                continue;
            }
            for (a, b) in free_form.iter_mut().zip(s) {
                *a += c * b;
            }
        }
        self.multiplication_by_free_form(k, &free_form)
    }

    /// Multiplication by `x_v` for the vertex at position `i`.
    pub fn multiplication_by_variable(&self, k: usize, i: usize) -> QMatrix {
        self.multiplication_by_free_form(k, &self.subst[i])
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LefschetzStep {
    /// Source degree `i` of `·ℓ : A_i -> A_{i+1}`.
    pub degree: usize,
    pub rank: usize,
    pub injective: bool,
    pub surjective: bool,
}

/// Ranks of multiplication by `ℓ = Σ x_v` between consecutive degrees.
pub fn lefschetz_map_ranks(model: &GradedAlgebraModel) -> Vec<LefschetzStep> {
    let ell = vec![Rational::from_integer(1.into()); model.vertices.len()];
    let top = model.degrees.len().saturating_sub(1);
    (0..top)
        .map(|i| {
            let rank = model.multiplication_by(i, &ell).rank();
            LefschetzStep { degree: i, rank, injective: rank == model.dim(i), surjective: rank == model.dim(i + 1) }
        })
        .collect()
}

/// `r_k = dim {a ∈ A_k : x_v a = 0 for all v}`.
pub fn socle_dims(model: &GradedAlgebraModel) -> Vec<usize> {
    let top = model.top_degree();
    (0..=top)
        .map(|k| {
            let cols = model.dim(k);
            let mut rows = Vec::new();
            for i in 0..model.vertices.len() {
                rows.extend(model.multiplication_by_variable(k, i).row_vecs());
            }
            cols - QMatrix::from_rows(cols, rows).rank()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rat;
    use crate::geom::{boundary_from_points, cross_polytope, simplex_boundary, stellar_cross};

    fn triangle() -> EmbeddedComplex {
        boundary_from_points(&[vec![rat(1), rat(0)], vec![rat(0), rat(1)], vec![rat(-1), rat(-1)]]).unwrap()
    }

    #[test]
    fn triangle_quotients() {
        let theta = artinian_reduction(&triangle(), Variant::Theta).unwrap();
        assert_eq!(theta.hilbert_function(), vec![1, 1, 1]);
        let ell = artinian_reduction(&triangle(), Variant::ThetaEll).unwrap();
        assert_eq!(ell.hilbert_function(), vec![1]);
        let steps = lefschetz_map_ranks(&theta);
        assert!(steps[0].injective && steps[0].surjective);
        assert!(steps[1].injective && steps[1].surjective);
    }

    #[test]
    fn simplex_socle() {
        let model = artinian_reduction(&simplex_boundary(4).unwrap(), Variant::ThetaEll).unwrap();
        assert_eq!(model.hilbert_function(), vec![1]);
        assert_eq!(socle_dims(&model), vec![1]);
    }

    #[test]
    fn cross_polytope_four() {
        let ec = cross_polytope(4).unwrap();
        let theta = artinian_reduction(&ec, Variant::Theta).unwrap();
        assert_eq!(theta.hilbert_function(), vec![1, 4, 6, 4, 1]);
        let steps = lefschetz_map_ranks(&theta);
        assert!(steps[0].injective && steps[1].injective);
        assert!(steps[2].surjective && steps[3].surjective);
        let ell = artinian_reduction(&ec, Variant::ThetaEll).unwrap();
        assert_eq!(ell.hilbert_function(), vec![1, 3, 2]);
        assert_eq!(socle_dims(&ell), vec![0, 0, 2]);
    }

    #[test]
    fn stellar_cross_socle() {
        let ell = artinian_reduction(&stellar_cross(5).unwrap(), Variant::ThetaEll).unwrap();
        assert_eq!(ell.hilbert_function(), vec![1, 5, 5]);
        assert_eq!(socle_dims(&ell), vec![0, 1, 5]);
    }

    #[test]
    fn projection_kills_non_faces() {
        let ec = cross_polytope(3).unwrap();
        let model = artinian_reduction(&ec, Variant::Theta).unwrap();
        // x_1 x_4 is an antipodal pair
        let mut e = vec![0u8; 6];
        e[0] = 1;
        e[3] = 1;
        assert!(model.project_monomial(&e).iter().all(Zero::is_zero));
    }
}
