//! Inverse moments of the β-Laguerre ensemble at the hard edge.
//!
//! Exact routes (partition sums, hypergeometric Mellin transforms,
//! recurrences), quadrature oracles over the limiting densities, and Monte
//! Carlo sampling of the tridiagonal matrix model.
//!
//! ```
//! use hardedge::moments::{moment_limit, Method, MomentQuery};
//! use hardedge::Scalar;
//!
//! let q = MomentQuery::integer(2, Scalar::parse("2", true)?, Scalar::parse("4", true)?, None);
//! assert_eq!(q.evaluate(Method::Auto)?.value, Scalar::rational(1, 60));
//!
//! let x: f64 = moment_limit(2, &4.0, &6.5)?;
//! assert!(x > 0.0);
//! # Ok::<(), hardedge::Error>(())
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::redundant_guards)]

pub mod densities;
pub mod ensemble;
pub mod error;
pub mod linalg;
pub mod moments;
pub mod partitions;
pub mod quad;
pub mod scalar;
pub mod specfun;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::{Mode, Scalar};
