use thiserror::Error;

use crate::complex::Simplex;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("linear feasibility is only decided over the rationals")]
    RequiresRationals,

    #[error("invalid simplex {0:?}: vertices must be nonempty, distinct and in range")]
    InvalidSimplex(Vec<usize>),

    #[error("simplex {simplex} is missing its face {face}")]
    MissingFace { simplex: Simplex, face: Simplex },

    #[error("subcomplex simplex {0} is not a simplex of the total complex")]
    NotInTotal(Simplex),

    #[error("not a pseudo-manifold: face {0} lies in three or more top simplices")]
    NotPseudoManifold(Simplex),

    #[error("not a pure complex: {0} is not a face of a top-dimensional simplex")]
    NotPure(Simplex),

    #[error("subcomplex is not the boundary of the manifold")]
    BoundaryMismatch,

    #[error("non-orientable: orientation propagation reached a contradiction at {0}")]
    NonOrientable(Simplex),

    #[error("complex is disconnected")]
    Disconnected,

    #[error("complex is empty")]
    Empty,

    #[error("map is not simplicial: {simplex} maps onto {image}, which is not a target simplex")]
    NotSimplicial { simplex: Simplex, image: Simplex },

    #[error("map does not respect the pairs: {simplex} lies in the source subcomplex but {image} is not in the target subcomplex")]
    NotAPairMap { simplex: Simplex, image: Simplex },

    #[error("vertex image array has length {got}, expected {expected}")]
    ImageLength { got: usize, expected: usize },

    #[error("chain of degree {0} is not a cycle")]
    NotACycle(usize),

    #[error("basis mismatch: {0}")]
    BasisMismatch(String),

    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),

    #[error(
        "duality map in degree {0} is singular; target is not a homology manifold for this field"
    )]
    DualitySingular(usize),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
}
