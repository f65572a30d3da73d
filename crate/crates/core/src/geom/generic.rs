//! Seeded random embeddings, accepted only when they behave generically.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{lsop_and_lefschetz, EmbeddedComplex, Embedding, EmbeddingKind};
use crate::algebra::{artinian_reduction, lefschetz_map_ranks, Variant};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::exactla::{ratio, Rational};
use crate::homology::sphere_witness;

pub const GENERIC_RETRIES: usize = 8;

const COORD_BOUND: i64 = 1_000_000;

/// Random rational coordinates for a `(d-1)`-sphere, redrawn until `Θ` is a
/// linear system of parameters (Hilbert function `h`) and `·ℓ` is injective
/// in degrees below `⌈d/2⌉`.
pub fn generic_embedding(c: &SimplicialComplex, d: usize, seed: u64) -> Result<EmbeddedComplex> {
    if c.dim() != d as isize - 1 {
        return Err(Error::InvalidParameter(format!("a {}-dimensional complex cannot be a {}-sphere", c.dim(), d as isize - 1)));
    }
    if let Some(w) = sphere_witness(c) {
        return Err(Error::NotASphere(w));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..GENERIC_RETRIES {
        let points = c
            .vertices()
            .iter()
            .map(|&v| {
                let p: Vec<Rational> = (0..d)
                    .map(|_| ratio(rng.gen_range(-COORD_BOUND..=COORD_BOUND), rng.gen_range(1..=COORD_BOUND)))
                    .collect();
                (v, p)
            })
            .collect();
        let ec = EmbeddedComplex::new(c.clone(), Embedding::new(d, points)?, EmbeddingKind::GenericSphere)?;
        if lsop_and_lefschetz(&ec).matrix.rank() == d + 1 && behaves_generically(&ec) {
            return Ok(ec);
        }
    }
    Err(Error::ValidationFailedAfterRetries(GENERIC_RETRIES))
}

fn behaves_generically(ec: &EmbeddedComplex) -> bool {
    let Ok(model) = artinian_reduction(ec, Variant::Theta) else { return false };
    let below = ec.d().div_ceil(2);
    lefschetz_map_ranks(&model).iter().filter(|s| s.degree < below).all(|s| s.injective)
}
