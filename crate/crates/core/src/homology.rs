//! Reduced simplicial homology over `Q`.
//!
//! Boundary matrices have entries `±1`, so ranks go through the fraction-free
//! sparse integer path and only fall back to rational elimination on
//! overflow.

use std::collections::HashMap;

use crate::complex::{Face, SimplicialComplex};
use crate::exactla::{rat, sparse_integer_rank, QMatrix};

/// Augmented chain complex `C_{dim} -> ... -> C_0 -> C_{-1} = Q`, with faces
/// oriented by increasing vertex label.
#[derive(Clone, Debug)]
pub struct ChainComplexQ {
    /// `boundaries[k]` is `∂_k : C_k -> C_{k-1}` for `k = 0..=dim`, with rows
    /// indexed by `(k-1)`-faces and columns by `k`-faces.
    boundaries: Vec<QMatrix>,
}

impl ChainComplexQ {
    pub fn new(c: &SimplicialComplex) -> Self {
        let top = c.dim();
        let boundaries = (0..=top).map(|k| boundary_matrix(c, k)).collect();
        ChainComplexQ { boundaries }
    }

    pub fn top_dim(&self) -> isize {
        self.boundaries.len() as isize - 1
    }

    /// `∂_k`, or `None` outside `0..=dim`.
    pub fn boundary(&self, k: isize) -> Option<&QMatrix> {
        usize::try_from(k).ok().and_then(|k| self.boundaries.get(k))
    }
}

/// Sparse rows of `∂_k` transposed: one row per `k`-face, listing
/// `(index of (k-1)-face, sign)` sorted by index.
fn boundary_rows(c: &SimplicialComplex, k: isize) -> Vec<Vec<(u32, i64)>> {
    let lower = c.faces(k - 1);
    let index: HashMap<Face, u32> = lower.iter().enumerate().map(|(i, f)| (*f, i as u32)).collect();
    c.faces(k)
        .iter()
        .map(|f| {
            let mut row: Vec<(u32, i64)> = f
                .vertices()
                .enumerate()
                .map(|(pos, v)| (index[&f.without(v)], if pos % 2 == 0 { 1 } else { -1 }))
                .collect();
            row.sort_unstable_by_key(|e| e.0);
            row
        })
        .collect()
}

pub fn boundary_matrix(c: &SimplicialComplex, k: isize) -> QMatrix {
    let rows = c.faces(k - 1).len();
    let cols = c.faces(k).len();
    let mut m = QMatrix::zeros(rows, cols);
    for (j, row) in boundary_rows(c, k).into_iter().enumerate() {
        for (i, s) in row {
            m[(i as usize, j)] = rat(s);
        }
    }
    m
}

fn boundary_rank(c: &SimplicialComplex, k: isize) -> usize {
    if k < 0 || k > c.dim() {
        return 0;
    }
    let cols = c.faces(k - 1).len();
    sparse_integer_rank(cols, boundary_rows(c, k)).unwrap_or_else(|| boundary_matrix(c, k).rank())
}

/// `dim H̃_k(c; Q)` for `k = -1..=dim c`; index `0` holds `k = -1`.
pub fn reduced_betti(c: &SimplicialComplex) -> Vec<usize> {
    let top = c.dim();
    let ranks: Vec<usize> = (0..=top + 1).map(|k| boundary_rank(c, k)).collect();
    (-1..=top)
        .map(|k| {
            let faces = c.faces(k).len();
            let below = if k >= 0 { ranks[k as usize] } else { 0 };
            let above = ranks[(k + 1) as usize];
            faces - below - above
        })
        .collect()
}

/// `dim H̃_k` for a single `k` (zero outside the complex's range).
pub fn reduced_betti_at(c: &SimplicialComplex, k: isize) -> usize {
    if k < -1 || k > c.dim() {
        return 0;
    }
    c.faces(k).len() - boundary_rank(c, k) - boundary_rank(c, k + 1)
}

fn is_sphere_homology(betti: &[usize], dim: isize) -> bool {
    betti.iter().enumerate().all(|(i, &b)| b == usize::from(i as isize - 1 == dim))
}

/// First face whose link does not have the rational homology of a sphere of
/// the right dimension, if any.
pub fn sphere_witness(c: &SimplicialComplex) -> Option<Face> {
    if !c.is_pure() {
        return c.facets().iter().copied().find(|f| f.dim() < c.dim());
    }
    let top = c.dim();
    c.all_faces().find(|&f| {
        let lk = c.link(f).expect("face of c");
        let expected = top - f.len() as isize;
        lk.dim() != expected || !is_sphere_homology(&reduced_betti(&lk), expected)
    })
}

pub fn is_homology_sphere(c: &SimplicialComplex) -> bool {
    sphere_witness(c).is_none()
}

#[derive(Clone, Debug)]
pub struct BallCheck {
    pub is_ball: bool,
    /// Ridges in exactly one facet, closed under subsets.
    pub boundary: SimplicialComplex,
    pub witness: Option<Face>,
}

/// Homology-ball test. Every link must be acyclic (boundary faces) or a
/// homology sphere of dimension `dim c - |F|` (interior faces); the faces with
/// acyclic links must be exactly the subsets of the free ridges, and those
/// must form a homology sphere of dimension `dim c - 1`.
pub fn is_homology_ball_with_boundary(c: &SimplicialComplex) -> BallCheck {
    let top = c.dim();
    let ridges: Vec<Face> = c
        .faces(top - 1)
        .iter()
        .copied()
        .filter(|r| c.facets().iter().filter(|f| r.is_subset(**f)).count() == 1)
        .collect();
    let boundary = SimplicialComplex::from_faces(ridges.iter().copied());
    let fail = |f: Face, boundary: SimplicialComplex| BallCheck { is_ball: false, boundary, witness: Some(f) };

    if ridges.is_empty() {
        return fail(Face::EMPTY, boundary);
    }
    if let Some(f) = c.facets().iter().find(|f| f.dim() != top) {
        return fail(*f, boundary);
    }
    for f in c.all_faces() {
        let lk = c.link(f).expect("face of c");
        let betti = reduced_betti(&lk);
        let acyclic = betti.iter().all(|&b| b == 0);
        let on_boundary = boundary.contains(f);
        let ok = if on_boundary {
            acyclic
        } else {
            let expected = top - f.len() as isize;
            lk.dim() == expected && is_sphere_homology(&betti, expected)
        };
        if !ok {
            return fail(f, boundary);
        }
    }
    if let Some(f) = sphere_witness(&boundary) {
        return fail(f, boundary);
    }
    if boundary.dim() != top - 1 {
        return fail(Face::EMPTY, boundary);
    }
    BallCheck { is_ball: true, boundary, witness: None }
}

/// `Σ (-1)^k dim H̃_k`, which must equal `Σ (-1)^k f_k` over `k >= -1`.
pub fn reduced_euler_characteristic(c: &SimplicialComplex) -> i64 {
    reduced_betti(c)
        .iter()
        .enumerate()
        .map(|(i, &b)| if i % 2 == 1 { b as i64 } else { -(b as i64) })
        .sum()
}
