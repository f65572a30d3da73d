//! Central projection of a vertex link onto a hyperplane.

use num_traits::Zero;

use super::{EmbeddedComplex, Embedding, EmbeddingKind};
use crate::complex::{Face, Vertex};
use crate::error::{Error, Result};
use crate::exactla::{dot, Rational};

/// `{x : normal · x = offset}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineHyperplane {
    pub normal: Vec<Rational>,
    pub offset: Rational,
}

/// The link of `apex` with every vertex `v` sent to the point where the ray
/// from `p(apex)` through `p(v)` meets `h`. Points of `h` are written in
/// `d - 1` coordinates by dropping the first coordinate with a nonzero
/// normal entry.
pub fn cone_projection(ec: &EmbeddedComplex, apex: Vertex, h: &AffineHyperplane) -> Result<EmbeddedComplex> {
    let d = ec.d();
    if h.normal.len() != d {
        return Err(Error::DimensionMismatch { left: d, right: h.normal.len() });
    }
    let drop = h
        .normal
        .iter()
        .position(|x| !x.is_zero())
        .ok_or_else(|| Error::Precondition("hyperplane normal is zero".into()))?;
    let link = ec.complex.link(Face::singleton(apex))?;
    let pu = ec.embedding.get(apex).ok_or(Error::NotAFace(Face::singleton(apex)))?;
    let gap = &h.offset - dot(&h.normal, pu);
    if gap.is_zero() {
        return Err(Error::Precondition(format!("hyperplane contains p({apex})")));
    }
    let mut points = std::collections::BTreeMap::new();
    for &v in link.vertices() {
        let dir: Vec<Rational> = ec.point(v).iter().zip(pu).map(|(a, b)| a - b).collect();
        let along = dot(&h.normal, &dir);
        if along.is_zero() {
            return Err(Error::Precondition(format!("p({apex}) - p({v}) is zero or parallel to the hyperplane")));
        }
        let t = &gap / along;
        let proj: Vec<Rational> = pu
            .iter()
            .zip(&dir)
            .enumerate()
            .filter(|(i, _)| *i != drop)
            .map(|(_, (a, b))| a + &t * b)
            .collect();
        points.insert(v, proj);
    }
    EmbeddedComplex::new(link, Embedding::new(d - 1, points)?, EmbeddingKind::Framework)
}
