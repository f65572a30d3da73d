//! Rational embeddings of simplicial complexes, polytope construction and
//! facet enumeration.

mod builders;
mod cone;
mod generic;
mod hull;
mod prime;

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::complex::{Face, SimplicialComplex, Vertex};
use crate::error::{Error, Result};
use crate::exactla::{dot, format_rational, kernel_basis, parse_rational, rat, QMatrix, Rational};

pub use builders::{
    connected_sum, cross_polytope, cyclic_polytope, join_of_simplex_boundaries, join_of_simplex_boundary_pair,
    random_polytope, simplex_boundary, stacked_polytope, stellar_cross, stellar_subdivide_facet,
};
pub use cone::{cone_projection, AffineHyperplane};
pub use generic::{generic_embedding, GENERIC_RETRIES};
pub use hull::{boundary_from_labeled_points, boundary_from_points};
pub use prime::{missing_facets, prime_components};

/// Vertex coordinates `p(v) ∈ Q^d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    d: usize,
    points: BTreeMap<Vertex, Vec<Rational>>,
}

impl Embedding {
    pub fn new(d: usize, points: BTreeMap<Vertex, Vec<Rational>>) -> Result<Self> {
        for p in points.values() {
            if p.len() != d {
                return Err(Error::DimensionMismatch { left: d, right: p.len() });
            }
        }
        Ok(Embedding { d, points })
    }

    /// Points for labels `1..=points.len()`.
    pub fn from_list(d: usize, points: Vec<Vec<Rational>>) -> Result<Self> {
        Self::new(d, points.into_iter().enumerate().map(|(i, p)| (i as Vertex + 1, p)).collect())
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn point(&self, v: Vertex) -> &[Rational] {
        &self.points[&v]
    }

    pub fn get(&self, v: Vertex) -> Option<&[Rational]> {
        self.points.get(&v).map(Vec::as_slice)
    }

    pub fn points(&self) -> &BTreeMap<Vertex, Vec<Rational>> {
        &self.points
    }

    pub fn restrict(&self, vertices: &[Vertex]) -> Embedding {
        Embedding { d: self.d, points: vertices.iter().map(|v| (*v, self.points[v].clone())).collect() }
    }

    pub fn translate(&self, shift: &[Rational]) -> Embedding {
        let points = self
            .points
            .iter()
            .map(|(v, p)| (*v, p.iter().zip(shift).map(|(a, b)| a + b).collect()))
            .collect();
        Embedding { d: self.d, points }
    }

    pub fn centroid(&self) -> Vec<Rational> {
        let n = Rational::from_integer(self.points.len().into());
        let mut c = vec![Rational::zero(); self.d];
        for p in self.points.values() {
            for (a, b) in c.iter_mut().zip(p) {
                *a += b;
            }
        }
        c.into_iter().map(|x| x / &n).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EmbeddingKind {
    /// Boundary complex of the convex hull of the points.
    NaturalPolytope,
    /// A sphere with validated generic coordinates.
    GenericSphere,
    /// Coordinates inherited by a derived complex (a star, a skeleton, a
    /// projected link); nothing beyond full dimension is validated.
    Framework,
}

#[derive(Clone, Debug)]
pub struct EmbeddedComplex {
    pub complex: SimplicialComplex,
    pub embedding: Embedding,
    pub kind: EmbeddingKind,
}

impl EmbeddedComplex {
    pub fn new(complex: SimplicialComplex, embedding: Embedding, kind: EmbeddingKind) -> Result<Self> {
        for &v in complex.vertices() {
            if embedding.get(v).is_none() {
                return Err(Error::Precondition(format!("vertex {v} has no coordinates")));
            }
        }
        let embedding = embedding.restrict(complex.vertices());
        Ok(EmbeddedComplex { complex, embedding, kind })
    }

    pub fn d(&self) -> usize {
        self.embedding.d
    }

    pub fn n(&self) -> usize {
        self.complex.n_vertices()
    }

    pub fn point(&self, v: Vertex) -> &[Rational] {
        self.embedding.point(v)
    }

    /// Same coordinates on a subcomplex (e.g. a star or a skeleton).
    pub fn restrict_to(&self, sub: SimplicialComplex) -> Result<EmbeddedComplex> {
        let embedding = self.embedding.restrict(sub.vertices());
        EmbeddedComplex::new(sub, embedding, EmbeddingKind::Framework)
    }

    /// Hyperplane `a·x = c` through the points of `facet`, oriented so every
    /// other vertex has `a·p(v) < c`. `None` if it is not a supporting
    /// hyperplane with all other vertices strictly beneath.
    pub fn facet_hyperplane(&self, facet: Face) -> Option<(Vec<Rational>, Rational)> {
        let pts: Vec<&[Rational]> = facet.vertices().map(|v| self.point(v)).collect();
        let (mut a, mut c) = hyperplane_through(&pts, self.d())?;
        let mut sign = 0;
        for &v in self.complex.vertices() {
            if facet.contains(v) {
                continue;
            }
            let s = dot(&a, self.point(v)) - &c;
            if s.is_zero() {
                return None;
            }
            let here = if s > Rational::zero() { 1 } else { -1 };
            if sign == 0 {
                sign = here;
            } else if sign != here {
                return None;
            }
        }
        if sign > 0 {
            a.iter_mut().for_each(|x| *x = -x.clone());
            c = -c;
        }
        Some((a, c))
    }
}

/// `(a, c)` with `a·p = c` for every given point, or `None` unless the points
/// span a unique hyperplane.
pub(crate) fn hyperplane_through(points: &[&[Rational]], d: usize) -> Option<(Vec<Rational>, Rational)> {
    let rows = points
        .iter()
        .map(|p| p.iter().cloned().chain(std::iter::once(-Rational::one())).collect())
        .collect();
    let ker = kernel_basis(&QMatrix::from_rows(d + 1, rows));
    if ker.dim() != 1 {
        return None;
    }
    let mut v = ker.basis().row(0).to_vec();
    let c = v.pop().unwrap();
    Some((v, c))
}

/// Coefficient rows `θ_1..θ_d, ℓ` of the linear forms induced by an
/// embedding: column `j` is `p(v_j)` with a one appended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMatrix {
    pub matrix: QMatrix,
}

impl RMatrix {
    pub fn d(&self) -> usize {
        self.matrix.rows() - 1
    }

    /// The `d × n` block of `θ` rows.
    pub fn theta(&self) -> QMatrix {
        QMatrix::from_rows(self.matrix.cols(), (0..self.d()).map(|r| self.matrix.row(r).to_vec()).collect())
    }
}

pub fn lsop_and_lefschetz(ec: &EmbeddedComplex) -> RMatrix {
    let d = ec.d();
    let vs = ec.complex.vertices();
    let mut m = QMatrix::zeros(d + 1, vs.len());
    for (j, &v) in vs.iter().enumerate() {
        for (i, x) in ec.point(v).iter().enumerate() {
            m[(i, j)] = x.clone();
        }
        m[(d, j)] = rat(1);
    }
    RMatrix { matrix: m }
}

/// On-disk form of an embedded complex.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EmbeddedComplexJson {
    pub n: usize,
    pub facets: Vec<Vec<Vertex>>,
    pub d: usize,
    pub points: Vec<Vec<String>>,
    pub kind: EmbeddingKind,
}

impl EmbeddedComplex {
    /// Serialized form; labels are renumbered to `1..=n` if they are not
    /// contiguous already.
    pub fn to_json(&self) -> EmbeddedComplexJson {
        let vs = self.complex.vertices();
        let relabel = |v: Vertex| self.complex.vertex_index(v).unwrap() as Vertex + 1;
        EmbeddedComplexJson {
            n: vs.len(),
            facets: self.complex.facets().iter().map(|f| f.vertices().map(relabel).collect()).collect(),
            d: self.d(),
            points: vs.iter().map(|&v| self.point(v).iter().map(format_rational).collect()).collect(),
            kind: self.kind,
        }
    }

    pub fn from_json(j: &EmbeddedComplexJson) -> Result<Self> {
        let complex = SimplicialComplex::from_facets(j.n, &j.facets)?;
        if j.points.len() != j.n {
            return Err(Error::DimensionMismatch { left: j.n, right: j.points.len() });
        }
        let points = j
            .points
            .iter()
            .map(|p| p.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let embedding = Embedding::from_list(j.d, points)?;
        let ec = EmbeddedComplex::new(complex, embedding, j.kind)?;
        if lsop_and_lefschetz(&ec).matrix.rank() != j.d + 1 {
            return Err(Error::NotFullDim(j.d));
        }
        Ok(ec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_rows() {
        let pts = vec![vec![rat(1), rat(0)], vec![rat(0), rat(1)], vec![rat(-1), rat(-1)]];
        let ec = boundary_from_points(&pts).unwrap();
        let r = lsop_and_lefschetz(&ec);
        // centroid is already the origin, so the rows are the literal forms
        assert_eq!(r.matrix, QMatrix::from_i64(&[&[1, 0, -1], &[0, 1, -1], &[1, 1, 1]]));
        assert_eq!(r.matrix.rank(), 3);
    }

    #[test]
    fn json_round_trip() {
        let ec = cross_polytope(3).unwrap();
        let j = ec.to_json();
        let back = EmbeddedComplex::from_json(&j).unwrap();
        assert_eq!(back.complex, ec.complex);
        assert_eq!(back.embedding, ec.embedding);
        let text = serde_json::to_string(&j).unwrap();
        assert!(text.contains("\"natural-polytope\""));
        assert!(text.contains("\"1/1\""));
    }
}
