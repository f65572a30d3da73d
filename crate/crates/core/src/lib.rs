//! Affine stresses, Artinian reductions and graded Betti tables of simplicial
//! polytopes and spheres, computed over exact rationals.

pub mod algebra;
pub mod builder;
pub mod cli;
pub mod complex;
pub mod error;
pub mod exactla;
pub mod geom;
pub mod homology;
pub mod stress;
pub mod verify;

pub use error::{Error, Result};
