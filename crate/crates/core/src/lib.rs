//! Exact symmetric rank and border-rank certificates for homogeneous
//! polynomials.
//!
//! Everything in this crate works over ℚ with arbitrary-precision integers
//! and needs only `alloc`. The layers build on each other:
//!
//! - [`linalg`]: rational matrices, fraction-free rank, kernels, span sums
//!   and intersections.
//! - [`poly`]: dense homogeneous polynomials in graded-lex order,
//!   catalecticant matrices, binary forms.
//! - [`scheme`]: points, lines, curvilinear zero-dimensional schemes and their
//!   Veronese spans.
//! - [`sylvester`]: rank, border rank and explicit decompositions of binary
//!   forms.
//! - [`structure`]: verifiers for the binary/residual splitting of minimal
//!   Waring decompositions and the related uniqueness statements.
//! - [`constructions`]: seeded generators for the sharpness constructions and
//!   the round-trip test families.
//!
//! Serialization, file formats and the command line live in the companion
//! `waring-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod constructions;
pub mod error;
pub mod linalg;
pub mod numeric;
pub mod poly;
pub mod rat;
pub mod scheme;
pub mod structure;
pub mod sylvester;

pub use error::{Error, Result};
pub use linalg::Mat;
pub use poly::{BinaryForm, HomogPoly};
pub use rat::Rat;
pub use scheme::{CurvComponent, Line, ProjPoint, Scheme};
