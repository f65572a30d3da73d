use thiserror::Error;

use crate::complex::Face;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("vertex label {label} out of range 1..={n}")]
    LabelOutOfRange { label: u32, n: u32 },

    #[error("complexes support at most {max} vertices, got {got}")]
    TooManyVertices { got: usize, max: usize },

    #[error("{0} is not a face of the complex")]
    NotAFace(Face),

    #[error("complex is not pure")]
    NotPure,

    #[error("not a subcomplex: face {0} is missing from the total complex")]
    NotSubcomplex(Face),

    #[error("points do not affinely span R^{0}")]
    NotFullDim(usize),

    #[error("convex hull is not simplicial: the hyperplane through {0} contains more than d points")]
    NotSimplicial(Face),

    #[error("point {0} is not a vertex of the convex hull")]
    PointNotVertex(u32),

    #[error("cut along missing facet {0} is degenerate: vertex {1} lies on its hyperplane")]
    DegenerateCut(Face, u32),

    #[error("could not place a point beyond facet {0}")]
    InfeasibleStellarPoint(Face),

    #[error("embedding validation failed after {0} attempts")]
    ValidationFailedAfterRetries(usize),

    #[error("input complex is not a homology sphere (witness face {0})")]
    NotASphere(Face),

    #[error("Theta is not a linear system of parameters: dim A_{degree} = {got}, h_{degree} = {expected}")]
    LsopFailure { degree: usize, got: usize, expected: usize },

    #[error("Hochster scan over 2^{n} subsets exceeds the cap of {cap} vertices")]
    CapExceeded { n: usize, cap: usize },

    #[error("rebuilt stress is not an affine stress")]
    ReconstructionMismatch,

    #[error("segment through vertices {0} and {1} passes through vertex {2}")]
    SegmentThroughVertex(u32, u32, u32),

    #[error("segment through vertices {0} and {1} is not in general position: {2}")]
    DegenerateSegment(u32, u32, String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
