//! Exact counting of representations by positive definite ternary quadratic
//! forms and by ternary sums of triangular numbers `aT_x + bT_y + cT_z`.
//!
//! The crate is `no_std` (it needs `alloc` for solution lists and reports).
//! Everything is pure integer arithmetic; there is no floating point on any
//! counting path.
//!
//! Module map:
//!
//! * [`forms`]: ternary/binary forms, parity and congruence restrictions,
//!   lattice point enumeration, substitution.
//! * [`triangular`]: `t(a,b,c;n)` by direct enumeration and via odd
//!   representations of `ax^2+by^2+cz^2`.
//! * [`reductions`]: turns `t(a,b,c;n)` into counts of explicit substituted
//!   forms (one count, or a difference of two).
//! * [`identities`]: restricted-count lemmas for `x^2+3y^2` and `ax^2+by^2`,
//!   the explicit bijections, genus fixtures and the theorem families.
//! * [`local`]: the `<1,1,6>` representability criterion and its 2-adic
//!   density.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

mod error;
pub mod forms;
pub mod identities;
pub mod local;
pub mod reductions;
pub mod report;
pub mod triangular;

pub use error::{Error, Result};
pub use forms::{
    BinaryQuadForm, Constraint, LinearCongruence, ParityClass, SolutionTriple, TernaryQuadForm,
};
pub use report::{Record, VerificationReport};
pub use triangular::TriangularTriple;
