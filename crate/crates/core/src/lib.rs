//! Trace maps on finite-dimensional commutative algebras over prime fields.
//!
//! An `F_p`-valued trace of an algebra `R` is a linear functional whose kernel
//! contains no nonzero ideal. This crate builds such traces for quotients
//! `F_p[x_1, ..., x_n]/<g_1(x_1), ..., g_n(x_n)>`, verifies arbitrary
//! functionals, and uses traces to build codes over `F_p` from codes over `R`.
//!
//! Modules, bottom up: [`field`], [`poly`], [`linalg`], [`algebra`],
//! [`trace`], [`codes`]; [`io`] and [`cli`] hold the JSON front end.

pub mod error;
pub mod field;
pub mod linalg;
pub mod poly;

pub use error::{Error, Result};
pub use field::{FpElement, PrimeField};
pub use linalg::Matrix;
pub use poly::{Factorization, Poly};
pub mod algebra;
pub use algebra::{crt_decompose, AlgElement, Algebra, CrtDecomposition, Provenance};
pub mod limits;
pub mod trace;
pub use limits::Limits;
pub use trace::{Functional, GramMatrix, Trace, Verdict};
pub mod cli;
pub mod codes;
pub mod io;
pub use codes::{CodeOverF, CodeOverR, CodeParams};
