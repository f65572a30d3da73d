#![allow(dead_code)]

use stresslab::builder::Builder;
use stresslab::geom::EmbeddedComplex;

/// Natural polytopes used for the stress-dimension sweep.
pub fn polytope_catalog() -> Vec<Builder> {
    use Builder::*;
    let mut out = Vec::new();
    for d in 2..=7 {
        out.push(Simplex { d });
        out.push(Cross { d });
        for n in d + 1..=d + 5 {
            out.push(Cyclic { d, n });
        }
    }
    for d in 2..=6 {
        for n in d + 1..=9 {
            out.push(Stacked { d, n });
        }
    }
    out.push(StellarCross { d: 5 });
    out
}

/// Spheres small enough for Hochster's formula and the reduced algebras.
pub fn small_spheres() -> Vec<Builder> {
    use Builder::*;
    let mut out = vec![
        Simplex { d: 3 },
        Simplex { d: 4 },
        Simplex { d: 6 },
        Cross { d: 3 },
        Cross { d: 4 },
        Cross { d: 5 },
        Cross { d: 6 },
        StellarCross { d: 5 },
        Stacked { d: 4, n: 7 },
        Stacked { d: 5, n: 9 },
        JoinSimplices { k: 2, l: 2, seed: 0 },
        JoinSimplices { k: 3, l: 2, seed: 1 },
        ConnectedSum { d: 4, count: 2 },
    ];
    for (d, n) in [(3, 7), (4, 8), (4, 9), (5, 8), (5, 10), (6, 10), (6, 12)] {
        out.push(Cyclic { d, n });
    }
    out
}

pub fn build(b: &Builder) -> EmbeddedComplex {
    b.build().unwrap_or_else(|e| panic!("{b}: {e}"))
}

pub fn ceil_half(d: usize) -> usize {
    d.div_ceil(2)
}
