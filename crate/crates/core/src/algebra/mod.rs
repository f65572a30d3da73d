//! Stanley–Reisner rings, their Artinian reductions and Betti tables.

mod artinian;
mod betti;
mod macaulay;
pub mod monomial;

pub use artinian::{
    artinian_reduction, artinian_reduction_with_order, lefschetz_map_ranks, socle_dims, GradedAlgebraModel,
    LefschetzStep, Variant,
};
pub use betti::{hochster_betti, hochster_betti_with_cap, koszul_betti, BettiJson, BettiTable, Ring, HOCHSTER_CAP};
pub use macaulay::{binomial_expansion, macaulay_upper};
pub use monomial::{Exponents, MonomialBasis};

use crate::complex::SimplicialComplex;

/// Minimal generators of `I_Δ` as squarefree exponent vectors over the
/// vertices of `c` (one per missing face).
pub fn sr_ideal_generators(c: &SimplicialComplex) -> Vec<Exponents> {
    let vs = c.vertices();
    c.missing_faces(None)
        .into_iter()
        .map(|f| vs.iter().map(|&v| u8::from(f.contains(v))).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::Face;

    #[test]
    fn triangle_boundary_generator() {
        let c = SimplicialComplex::simplex_boundary(Face::from_vertices([1, 2, 3]));
        assert_eq!(sr_ideal_generators(&c), vec![vec![1, 1, 1]]);
        assert!(sr_ideal_generators(&SimplicialComplex::simplex(Face::from_vertices([1, 2, 3]))).is_empty());
    }
}
