//! Additive codes over Z2^α × Z4^β: canonical forms, duality, spans and
//! intersections, perfect code constructions and monomial orbit search.

pub mod algebra;
pub mod cli;
pub mod code;
pub mod config;
pub mod constructions;
pub mod duality;
pub mod error;
pub mod format;
pub mod lattice;
pub mod packed;
pub mod reproduce;
pub mod search;
pub mod verify;

pub use algebra::{compute_type, element_order, standard_reduce, CodeType, MixedMatrix, MixedVector, Shape};
pub use code::{apply_monomial, extend_parity, gray_map, lee_weight, puncture_parity, AdditiveCode, Monomial};
pub use duality::{dual, dual_type, inner_product};
pub use error::{Error, Result};
