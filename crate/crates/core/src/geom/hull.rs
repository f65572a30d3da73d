//! Brute-force facet enumeration for simplicial polytopes.

use num_traits::Zero;
use rayon::prelude::*;

use super::{hyperplane_through, EmbeddedComplex, Embedding, EmbeddingKind};
use crate::complex::{combinations, Face, SimplicialComplex, Vertex, MAX_VERTICES};
use crate::error::{Error, Result};
use crate::exactla::{dot, rat, QMatrix, Rational};

enum Verdict {
    Facet,
    NotSupporting,
    Flat(Face),
}

/// Boundary complex of `conv(points)` with labels `1..=n`, translated so
/// that the centroid of the vertices is the origin.
pub fn boundary_from_points(points: &[Vec<Rational>]) -> Result<EmbeddedComplex> {
    let labels: Vec<Vertex> = (1..=points.len() as Vertex).collect();
    let ec = boundary_from_labeled_points(&labels, points)?;
    let shift: Vec<Rational> = ec.embedding.centroid().into_iter().map(|x| -x).collect();
    let embedding = ec.embedding.translate(&shift);
    Ok(EmbeddedComplex { embedding, ..ec })
}

/// As [`boundary_from_points`] but with explicit labels and no translation.
pub fn boundary_from_labeled_points(labels: &[Vertex], points: &[Vec<Rational>]) -> Result<EmbeddedComplex> {
    let n = points.len();
    if labels.len() != n {
        return Err(Error::DimensionMismatch { left: labels.len(), right: n });
    }
    if labels.iter().any(|&v| v == 0 || v as usize > MAX_VERTICES) {
        return Err(Error::TooManyVertices { got: n, max: MAX_VERTICES });
    }
    let d = points.first().map_or(0, Vec::len);
    if let Some(p) = points.iter().find(|p| p.len() != d) {
        return Err(Error::DimensionMismatch { left: d, right: p.len() });
    }
    let augmented = QMatrix::from_rows(
        d + 1,
        points.iter().map(|p| p.iter().cloned().chain(std::iter::once(rat(1))).collect()).collect(),
    );
    if d == 0 || augmented.rank() != d + 1 {
        return Err(Error::NotFullDim(d));
    }

    let idx: Vec<usize> = (0..n).collect();
    let mut subsets = Vec::new();
    combinations(&idx, d, &mut |s| subsets.push(s.to_vec()));

    let verdicts: Vec<(usize, Verdict)> = subsets
        .par_iter()
        .enumerate()
        .map(|(k, s)| (k, classify(s, points, labels, d)))
        .collect();

    let mut facets = Vec::new();
    for (k, v) in verdicts {
        match v {
            Verdict::Facet => facets.push(Face::from_vertices(subsets[k].iter().map(|&i| labels[i]))),
            Verdict::Flat(f) => return Err(Error::NotSimplicial(f)),
            Verdict::NotSupporting => {}
        }
    }
    let used = facets.iter().fold(Face::EMPTY, |a, f| a.union(*f));
    if let Some(&v) = labels.iter().find(|&&v| !used.contains(v)) {
        return Err(Error::PointNotVertex(v));
    }
    let complex = SimplicialComplex::from_faces(facets);
    let embedding = Embedding::new(d, labels.iter().copied().zip(points.iter().cloned()).collect())?;
    Ok(EmbeddedComplex { complex, embedding, kind: EmbeddingKind::NaturalPolytope })
}

fn classify(subset: &[usize], points: &[Vec<Rational>], labels: &[Vertex], d: usize) -> Verdict {
    let pts: Vec<&[Rational]> = subset.iter().map(|&i| points[i].as_slice()).collect();
    let Some((a, c)) = hyperplane_through(&pts, d) else {
        return Verdict::NotSupporting;
    };
    let (mut pos, mut neg) = (false, false);
    let mut on = Face::from_vertices(subset.iter().map(|&i| labels[i]));
    let mut extra = false;
    for (i, p) in points.iter().enumerate() {
        if subset.contains(&i) {
            continue;
        }
        let s = dot(&a, p) - &c;
        if s.is_zero() {
            on = on.with(labels[i]);
            extra = true;
        } else if s > Rational::zero() {
            pos = true;
        } else {
            neg = true;
        }
        if pos && neg {
            return Verdict::NotSupporting;
        }
    }
    if extra {
        Verdict::Flat(on)
    } else {
        Verdict::Facet
    }
}
