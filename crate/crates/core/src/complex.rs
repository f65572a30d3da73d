//! Abstract simplicial complexes and their face-count invariants.

use std::collections::HashSet;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = u32;

/// Largest vertex label a [`Face`] can hold.
pub const MAX_VERTICES: usize = 64;

/// A finite vertex set, stored as a bitmask (bit `v - 1` for label `v`).
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face(pub u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub fn from_vertices<I: IntoIterator<Item = Vertex>>(vs: I) -> Face {
        Face(vs.into_iter().fold(0u64, |m, v| m | (1u64 << (v - 1))))
    }

    pub fn singleton(v: Vertex) -> Face {
        Face(1u64 << (v - 1))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// `|F| - 1`.
    pub fn dim(self) -> isize {
        self.len() as isize - 1
    }

    pub fn contains(self, v: Vertex) -> bool {
        v >= 1 && (v as usize) <= MAX_VERTICES && self.0 & (1u64 << (v - 1)) != 0
    }

    pub fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub fn minus(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    pub fn with(self, v: Vertex) -> Face {
        Face(self.0 | (1u64 << (v - 1)))
    }

    pub fn without(self, v: Vertex) -> Face {
        Face(self.0 & !(1u64 << (v - 1)))
    }

    /// Increasing vertex labels.
    pub fn vertices(self) -> impl Iterator<Item = Vertex> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let t = bits.trailing_zeros();
            bits &= bits - 1;
            Some(t + 1)
        })
    }

    pub fn to_vec(self) -> Vec<Vertex> {
        self.vertices().collect()
    }

    pub fn max_vertex(self) -> Option<Vertex> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros())
    }

    /// All subsets of size `|F| - 1`.
    pub fn facets_of_boundary(self) -> impl Iterator<Item = Face> {
        self.vertices().map(move |v| self.without(v))
    }

    /// All subsets of the given size.
    pub fn subsets_of_size(self, k: usize) -> Vec<Face> {
        let vs = self.to_vec();
        let mut out = Vec::new();
        combinations(&vs, k, &mut |c| out.push(Face::from_vertices(c.iter().copied())));
        out
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self.vertices().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", vs.join(","))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Visits every `k`-subset of `items` in lexicographic order.
pub fn combinations<T: Copy>(items: &[T], k: usize, visit: &mut dyn FnMut(&[T])) {
    fn go<T: Copy>(items: &[T], k: usize, start: usize, cur: &mut Vec<T>, visit: &mut dyn FnMut(&[T])) {
        if cur.len() == k {
            visit(cur);
            return;
        }
        let need = k - cur.len();
        for i in start..items.len() {
            if items.len() - i < need {
                break;
            }
            cur.push(items[i]);
            go(items, k, i + 1, cur, visit);
            cur.pop();
        }
    }
    if k <= items.len() {
        go(items, k, 0, &mut Vec::with_capacity(k), visit);
    }
}

pub fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1i64, |acc, i| acc * (n - i) / (i + 1))
}

/// A finite abstract simplicial complex given by its facets.
///
/// The vertex set is the union of the facets, so every vertex is a face. The
/// complex `{∅}` (no vertices) has the single facet `∅`.
#[derive(Clone)]
pub struct SimplicialComplex {
    vertices: Vec<Vertex>,
    facets: Vec<Face>,
    faces_by_size: OnceLock<Vec<Vec<Face>>>,
    face_set: OnceLock<HashSet<Face>>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("vertices", &self.vertices)
            .field("facets", &self.facets)
            .finish()
    }
}

fn sort_faces(faces: &mut [Face]) {
    faces.sort_by_key(|f| f.to_vec());
}

impl SimplicialComplex {
    /// Complex on vertices `1..=n`. Redundant (non-maximal) input facets are
    /// dropped; every label must be in range and every vertex must be used.
    pub fn from_facets(n: usize, facets: &[Vec<Vertex>]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { got: n, max: MAX_VERTICES });
        }
        let mut masks = Vec::with_capacity(facets.len());
        for f in facets {
            for &v in f {
                if v == 0 || v as usize > n {
                    return Err(Error::LabelOutOfRange { label: v, n: n as u32 });
                }
            }
            masks.push(Face::from_vertices(f.iter().copied()));
        }
        let c = Self::from_faces(masks);
        if c.vertices.len() != n {
            let missing = (1..=n as Vertex).find(|v| !c.vertices.contains(v)).unwrap();
            return Err(Error::InvalidParameter(format!("vertex {missing} lies in no facet")));
        }
        Ok(c)
    }

    /// Complex generated by arbitrary faces (only the maximal ones are kept).
    pub fn from_faces<I: IntoIterator<Item = Face>>(faces: I) -> Self {
        let mut fs: Vec<Face> = faces.into_iter().collect();
        fs.sort_by_key(|f| std::cmp::Reverse(f.len()));
        fs.dedup();
        let mut facets: Vec<Face> = Vec::new();
        for f in fs {
            if !facets.iter().any(|g| f.is_subset(*g)) {
                facets.push(f);
            }
        }
        if facets.is_empty() {
            facets.push(Face::EMPTY);
        }
        sort_faces(&mut facets);
        let all = facets.iter().fold(Face::EMPTY, |a, f| a.union(*f));
        SimplicialComplex {
            vertices: all.to_vec(),
            facets,
            faces_by_size: OnceLock::new(),
            face_set: OnceLock::new(),
        }
    }

    /// The complex `{∅}`.
    pub fn empty() -> Self {
        Self::from_faces([Face::EMPTY])
    }

    /// The full simplex on `face`.
    pub fn simplex(face: Face) -> Self {
        Self::from_faces([face])
    }

    /// Boundary of the simplex on `face`.
    pub fn simplex_boundary(face: Face) -> Self {
        Self::from_faces(face.facets_of_boundary())
    }

    /// Reconstructs the complex on `vertices` whose minimal non-faces are
    /// exactly `missing`.
    pub fn from_missing_faces(vertices: &[Vertex], missing: &[Face]) -> Self {
        let mut facets = Vec::new();
        let vs: Vec<Vertex> = vertices.to_vec();
        fn grow(vs: &[Vertex], i: usize, cur: Face, missing: &[Face], out: &mut Vec<Face>) {
            if i == vs.len() {
                // maximal iff no vertex outside can be added
                let maximal = vs
                    .iter()
                    .filter(|v| !cur.contains(**v))
                    .all(|&v| missing.iter().any(|m| m.is_subset(cur.with(v))));
                if maximal {
                    out.push(cur);
                }
                return;
            }
            let with = cur.with(vs[i]);
            if !missing.iter().any(|m| m.is_subset(with)) {
                grow(vs, i + 1, with, missing, out);
            }
            grow(vs, i + 1, cur, missing, out);
        }
        grow(&vs, 0, Face::EMPTY, missing, &mut facets);
        Self::from_faces(facets)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_face(&self) -> Face {
        Face::from_vertices(self.vertices.iter().copied())
    }

    /// Position of `v` in [`Self::vertices`].
    pub fn vertex_index(&self, v: Vertex) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.dim()).max().unwrap_or(-1)
    }

    pub fn is_pure(&self) -> bool {
        let d = self.dim();
        self.facets.iter().all(|f| f.dim() == d)
    }

    fn face_set(&self) -> &HashSet<Face> {
        self.face_set.get_or_init(|| self.faces_by_size().iter().flatten().copied().collect())
    }

    /// Faces grouped by cardinality `0..=dim+1`, each group sorted
    /// lexicographically.
    pub fn faces_by_size(&self) -> &[Vec<Face>] {
        self.faces_by_size.get_or_init(|| {
            let top = (self.dim() + 1) as usize;
            let mut seen: HashSet<Face> = HashSet::new();
            let mut by_size = vec![Vec::new(); top + 1];
            let mut stack: Vec<Face> = self.facets.clone();
            while let Some(f) = stack.pop() {
                if !seen.insert(f) {
                    continue;
                }
                by_size[f.len()].push(f);
                stack.extend(f.facets_of_boundary().filter(|g| !seen.contains(g)));
            }
            for group in by_size.iter_mut() {
                sort_faces(group);
            }
            by_size
        })
    }

    /// Faces of dimension `k` (cardinality `k + 1`).
    pub fn faces(&self, k: isize) -> &[Face] {
        let size = k + 1;
        if size < 0 {
            return &[];
        }
        self.faces_by_size().get(size as usize).map_or(&[], Vec::as_slice)
    }

    pub fn all_faces(&self) -> impl Iterator<Item = Face> + '_ {
        self.faces_by_size().iter().flatten().copied()
    }

    pub fn contains(&self, f: Face) -> bool {
        self.face_set().contains(&f)
    }

    fn require_face(&self, f: Face) -> Result<()> {
        if self.contains(f) {
            Ok(())
        } else {
            Err(Error::NotAFace(f))
        }
    }

    /// `(f_{-1}, f_0, ..., f_{dim})`.
    pub fn f_vector(&self) -> Vec<i64> {
        self.faces_by_size().iter().map(|g| g.len() as i64).collect()
    }

    pub fn link(&self, f: Face) -> Result<Self> {
        self.require_face(f)?;
        Ok(Self::from_faces(self.facets.iter().filter(|g| f.is_subset(**g)).map(|g| g.minus(f))))
    }

    pub fn star(&self, f: Face) -> Result<Self> {
        self.require_face(f)?;
        Ok(Self::from_faces(self.facets.iter().filter(|g| f.is_subset(**g)).copied()))
    }

    /// Faces of dimension at most `i`.
    pub fn skeleton(&self, i: isize) -> Self {
        let mut gens: Vec<Face> = self.faces(i).to_vec();
        gens.extend(self.facets.iter().filter(|f| f.dim() < i));
        Self::from_faces(gens)
    }

    /// `{F ∈ Δ : F ⊆ W}`.
    pub fn induced(&self, w: Face) -> Self {
        Self::from_faces(self.facets.iter().map(|f| f.intersection(w)))
    }

    /// Minimal non-faces on the vertex set, optionally only those of
    /// dimension `dim`. Sorted by size, then lexicographically.
    pub fn missing_faces(&self, dim: Option<isize>) -> Vec<Face> {
        let mut out = Vec::new();
        let top = self.vertices.len();
        for size in 2..=top {
            if let Some(d) = dim {
                if size as isize != d + 1 {
                    continue;
                }
            }
            out.extend(self.missing_faces_of_size(size));
        }
        out
    }

    fn missing_faces_of_size(&self, size: usize) -> Vec<Face> {
        // every missing face of size s is a face of size s-1 plus a larger vertex
        let smaller = self.faces(size as isize - 2);
        let mut found = Vec::new();
        for &g in smaller {
            let start = g.max_vertex().unwrap_or(0);
            for &v in self.vertices.iter().filter(|&&v| v > start) {
                let f = g.with(v);
                if !self.contains(f) && f.facets_of_boundary().all(|b| self.contains(b)) {
                    found.push(f);
                }
            }
        }
        sort_faces(&mut found);
        found
    }

    /// `m_k` for `k = 0..=dim+1`.
    pub fn missing_face_counts(&self) -> Vec<u64> {
        let top = (self.dim() + 1).max(0) as usize;
        let mut m = vec![0u64; top + 1];
        for f in self.missing_faces(None) {
            let k = f.dim() as usize;
            if k < m.len() {
                m[k] += 1;
            } else {
                m.resize(k + 1, 0);
                m[k] += 1;
            }
        }
        m
    }

    pub fn fgm_vectors(&self) -> FGVectors {
        let f = self.f_vector();
        let d = (self.dim() + 1).max(0) as usize;
        let h = h_from_f(&f, d);
        let g = g_from_h(&h, d);
        FGVectors { f, h, g, m: self.missing_face_counts(), pure: self.is_pure() }
    }

    /// Cone over the complex with a new apex label.
    pub fn cone(&self, apex: Vertex) -> Self {
        Self::from_faces(self.facets.iter().map(|f| f.with(apex)))
    }

    /// Join with a complex on a disjoint vertex set.
    pub fn join(&self, other: &Self) -> Result<Self> {
        if !self.vertex_face().intersection(other.vertex_face()).is_empty() {
            return Err(Error::InvalidParameter("join of complexes with shared vertices".into()));
        }
        let mut facets = Vec::new();
        for a in &self.facets {
            for b in &other.facets {
                facets.push(a.union(*b));
            }
        }
        Ok(Self::from_faces(facets))
    }

    /// Renumbers vertices to `1..=n` in increasing order of current labels.
    pub fn relabel_contiguous(&self) -> Self {
        let map = |f: Face| {
            Face::from_vertices(f.vertices().map(|v| self.vertex_index(v).unwrap() as Vertex + 1))
        };
        Self::from_faces(self.facets.iter().map(|&f| map(f)))
    }

    /// Facets as sorted label lists.
    pub fn facet_lists(&self) -> Vec<Vec<Vertex>> {
        self.facets.iter().map(|f| f.to_vec()).collect()
    }
}

/// `h` from `f = (f_{-1}, ..., f_{d-1})` via
/// `sum h_i t^{d-i} = sum f_{i-1} (t-1)^{d-i}`.
pub fn h_from_f(f: &[i64], d: usize) -> Vec<i64> {
    let fi = |i: usize| f.get(i).copied().unwrap_or(0);
    (0..=d)
        .map(|k| {
            (0..=k)
                .map(|i| {
                    let sign = if (k - i) % 2 == 0 { 1 } else { -1 };
                    sign * binomial((d - i) as i64, (k - i) as i64) * fi(i)
                })
                .sum()
        })
        .collect()
}

/// `g_0 = 1`, `g_k = h_k - h_{k-1}` for `1 <= k <= floor(d/2)`; for odd `d`
/// the next difference vanishes on spheres and is available via
/// [`FGVectors::g`].
pub fn g_from_h(h: &[i64], d: usize) -> Vec<i64> {
    let top = d / 2;
    let mut g = vec![1];
    for k in 1..=top {
        g.push(h.get(k).copied().unwrap_or(0) - h.get(k - 1).copied().unwrap_or(0));
    }
    g
}

/// Face numbers of a complex of dimension `d - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FGVectors {
    /// `f[i] = f_{i-1}` for `i = 0..=d`.
    pub f: Vec<i64>,
    /// `h_0..h_d`.
    pub h: Vec<i64>,
    /// `g_0..g_{floor(d/2)}`.
    pub g: Vec<i64>,
    /// `m[k]` = number of missing faces of dimension `k`.
    pub m: Vec<u64>,
    pub pure: bool,
}

impl FGVectors {
    pub fn d(&self) -> usize {
        self.f.len() - 1
    }

    pub fn m(&self, k: usize) -> u64 {
        self.m.get(k).copied().unwrap_or(0)
    }

    /// `h_k - h_{k-1}` for any `k` (`g_0 = 1`).
    pub fn g(&self, k: usize) -> i64 {
        if k == 0 {
            return 1;
        }
        self.h.get(k).copied().unwrap_or(0) - self.h.get(k - 1).copied().unwrap_or(0)
    }

    /// The h-vector; only meaningful for pure complexes.
    pub fn checked_h(&self) -> Result<&[i64]> {
        if self.pure {
            Ok(&self.h)
        } else {
            Err(Error::NotPure)
        }
    }

    pub fn checked_g(&self) -> Result<&[i64]> {
        if self.pure {
            Ok(&self.g)
        } else {
            Err(Error::NotPure)
        }
    }
}

/// `(Δ, Γ)`: the faces of `total` not in `sub`.
#[derive(Clone, Debug)]
pub struct RelativeComplex {
    total: SimplicialComplex,
    sub: SimplicialComplex,
}

impl RelativeComplex {
    pub fn new(total: SimplicialComplex, sub: SimplicialComplex) -> Result<Self> {
        if let Some(f) = sub.all_faces().find(|f| !total.contains(*f)) {
            return Err(Error::NotSubcomplex(f));
        }
        Ok(RelativeComplex { total, sub })
    }

    pub fn total(&self) -> &SimplicialComplex {
        &self.total
    }

    pub fn sub(&self) -> &SimplicialComplex {
        &self.sub
    }

    pub fn faces(&self) -> impl Iterator<Item = Face> + '_ {
        self.total.all_faces().filter(|f| !self.sub.contains(*f))
    }

    /// `(f_{-1}, ..., f_{dim total})` of the relative complex.
    pub fn f_vector(&self) -> Vec<i64> {
        let top = (self.total.dim() + 1).max(0) as usize;
        let mut f = vec![0i64; top + 1];
        for face in self.faces() {
            f[face.len()] += 1;
        }
        f
    }

    /// h-vector computed with `d = dim(total) + 1`.
    pub fn h_vector(&self) -> Vec<i64> {
        let d = (self.total.dim() + 1).max(0) as usize;
        h_from_f(&self.f_vector(), d)
    }
}

pub fn relative_h(rc: &RelativeComplex) -> Vec<i64> {
    rc.h_vector()
}
