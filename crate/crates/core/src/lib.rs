//! Degree polynomials of graphs and multigraphs and the location of their roots.
//!
//! The degree polynomial of a multigraph `G` is `D(G; x) = sum_v x^deg(v)`.
//! This crate builds these polynomials from degree sequences and named
//! families, finds and certifies their complex roots, and checks them
//! against explicit root-location bounds and limit-of-zeros predictions.

// `!(x > 0.0)` style guards are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod asymptotics;
pub mod bounds;
pub mod error;
pub mod exact;
pub mod families;
pub mod float17;
pub mod graphical;
pub mod horner;
pub mod poly;
pub mod rootfind;
pub mod sequence;
pub mod sweep;

pub use num_complex;

pub use error::{Error, Result};
pub use poly::IntPolynomial;
pub use rootfind::{find_roots, Root, RootSet};
pub use sequence::DegreeSequence;
