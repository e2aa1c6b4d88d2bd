//! Exact-arithmetic classification of irreducible highest-weight modules of
//! unitary minimal W-algebras W^k_min(g) and of their affine parents.
//!
//! ```
//! use walg::classify::{w_classification, Ell0, Level};
//! use walg::{build_algebra, AlgebraId, Rational};
//!
//! let alg = build_algebra(AlgebraId::Spo2m(3))?;
//! let level = Level::new(&alg, Rational::int(-1))?;
//! let list: Vec<String> = w_classification(&level)?
//!     .iter()
//!     .map(|e| format!("{} {}", e.label.nu, e.label.ell0))
//!     .collect();
//! assert_eq!(list, ["(0) free", "(1) 1/4", "(2) 1/2"]);
//! # Ok::<(), walg::Error>(())
//! ```

pub mod affine;
pub mod algebra;
pub mod catalog;
pub mod classify;
pub mod cli;
pub mod error;
pub mod ledger;
pub mod linalg;
pub mod rational;
pub mod report;

pub use algebra::{build_algebra, AlgebraData, AlgebraId, Parity, Root, Weight};
pub use error::{Error, Result};
pub use rational::Rational;
