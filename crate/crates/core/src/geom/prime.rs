//! Decomposition along missing facets.

use num_traits::Zero;

use super::{boundary_from_labeled_points, hyperplane_through, EmbeddedComplex, EmbeddingKind};
use crate::complex::{Face, Vertex};
use crate::error::{Error, Result};
use crate::exactla::{dot, Rational};

pub fn missing_facets(ec: &EmbeddedComplex) -> Vec<Face> {
    ec.complex.missing_faces(Some(ec.d() as isize - 1))
}

/// Splits a natural polytope along its missing facets until every piece is
/// prime. Components keep the original labels and coordinates and are sorted
/// by vertex list.
pub fn prime_components(ec: &EmbeddedComplex) -> Result<Vec<EmbeddedComplex>> {
    if ec.kind != EmbeddingKind::NaturalPolytope {
        return Err(Error::Precondition("prime decomposition needs a natural polytope".into()));
    }
    let mut out = Vec::new();
    split(ec.clone(), &mut out)?;
    out.sort_by(|a, b| a.complex.vertices().cmp(b.complex.vertices()));
    Ok(out)
}

fn split(ec: EmbeddedComplex, out: &mut Vec<EmbeddedComplex>) -> Result<()> {
    let Some(&tau) = missing_facets(&ec).first() else {
        out.push(ec);
        return Ok(());
    };
    let pts: Vec<&[Rational]> = tau.vertices().map(|v| ec.point(v)).collect();
    let (a, c) = hyperplane_through(&pts, ec.d()).ok_or(Error::DegenerateCut(tau, tau.vertices().next().unwrap()))?;
    let (mut above, mut below) = (tau.to_vec(), tau.to_vec());
    for &v in ec.complex.vertices() {
        if tau.contains(v) {
            continue;
        }
        let s = dot(&a, ec.point(v)) - &c;
        if s.is_zero() {
            return Err(Error::DegenerateCut(tau, v));
        }
        if s > Rational::zero() { above.push(v) } else { below.push(v) }
    }
    for mut side in [above, below] {
        side.sort_unstable();
        let coords: Vec<Vec<Rational>> = side.iter().map(|&v| ec.point(v).to_vec()).collect();
        let piece = boundary_from_labeled_points(&side as &[Vertex], &coords)?;
        split(piece, out)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{cross_polytope, stacked_polytope};

    #[test]
    fn prime_polytope_is_one_component() {
        let ec = cross_polytope(4).unwrap();
        assert_eq!(prime_components(&ec).unwrap().len(), 1);
    }

    #[test]
    fn stacked_splits_into_simplices() {
        let ec = stacked_polytope(3, 5).unwrap();
        let parts = prime_components(&ec).unwrap();
        assert_eq!(parts.len(), 2);
        for p in &parts {
            assert_eq!(p.n(), 4);
            assert_eq!(p.complex.facets().len(), 4);
        }
        let shared = Face::from_vertices(parts[0].complex.vertices().iter().copied())
            .intersection(Face::from_vertices(parts[1].complex.vertices().iter().copied()));
        assert_eq!(missing_facets(&ec), vec![shared]);
    }
}
