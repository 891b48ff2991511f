//! Exact computation of the RR transform of integer sequences: `b_n` is the
//! number of real roots, counted with multiplicity, of the section
//! `a_0 + a_1 x + ... + a_n x^n`.
//!
//! The crate is organised bottom-up:
//!
//! - [`poly`] and [`frac`]: integer polynomials and exact rationals,
//! - [`roots`]: Descartes-bisection isolation with a Sturm cross-check,
//! - [`catalog`]: generators for the studied sequence families,
//! - [`engine`]: the transform, completely-real checks and table searches,
//! - [`theorems`]: executable checkers for the minimality and extension results.
//!
//! With the default `parallel` feature the engine fans independent root
//! counts out to rayon; without it every [`Exec`] runs sequentially.

pub mod catalog;
pub mod engine;
pub mod error;
pub mod exec;
pub mod frac;
pub mod poly;
pub mod roots;
pub mod theorems;

pub use error::{Error, Result};
pub use exec::Exec;
pub use frac::Frac;
pub use poly::{BigPoly, RatPoly, SqfDecomp};
