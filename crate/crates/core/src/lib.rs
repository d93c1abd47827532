//! Lefschetz coincidence theory for simplicial maps of pairs
//! `f, g : (X, A) -> (M, ∂M)` into a triangulated, oriented, compact manifold.
//!
//! The crate computes the Lefschetz homomorphism `Λ_fg : H_*(X, A) -> H_{*-n}(M)`
//! together with everything it is built from: homology over `Q` or `F_p`, cap
//! products, Poincaré–Lefschetz duality, transfers and Knill-type traces. An
//! exact geometric oracle decides whether `f` and `g` actually meet, so a
//! nonzero `Λ_fg` can be checked against a concrete coincidence point.
//!
//! ```
//! use std::sync::Arc;
//! use lefschetz::{builtins, FieldSpec, SimplicialMap};
//! use lefschetz::lefschetz::lefschetz_full;
//!
//! let torus = builtins::torus();
//! let circle = Arc::new(builtins::pair("c3").unwrap());
//! let p = torus.proj_second().clone();
//! let g = SimplicialMap::constant(torus.pair().clone(), circle, 0).unwrap();
//! let report = lefschetz_full(&p, &g, FieldSpec::Rationals, true).unwrap();
//! assert!(report.is_nonzero());
//! assert!(report.oracle.unwrap().is_witness());
//! ```

pub mod builtins;
pub mod complex;
pub mod document;
pub mod error;
pub mod feasibility;
pub mod field;
pub mod homology;
pub mod lefschetz;
pub mod linalg;
pub mod oracle;
pub mod orientation;
pub mod product;
pub mod verify;

pub use complex::{Simplex, SimplicialComplex, SimplicialMap, SimplicialPair};
pub use error::Error;
pub use field::{FieldSpec, Scalar};
pub use homology::{GradedBasis, GradedMap, HomologyClass};
pub use linalg::Matrix;
