//! Exact-arithmetic engine for the genus-one mirror formulas of the quintic
//! FJRW and twisted 5-spin theories.
//!
//! Layers, bottom up: [`exactnum`] scalars, [`pseries`] truncated series,
//! the I-function tower in [`ifun`], the Frobenius structure in [`frob`],
//! the first-order R-matrix in [`rmat`], genus-one potentials in [`genus1`],
//! the stable-graph sum in [`cohft`] and localization data in [`loc`].
//! Every verification returns a [`Report`].

#![allow(clippy::needless_range_loop)]

pub mod cohft;
pub mod error;
pub mod exactnum;
pub mod frob;
pub mod genus1;
pub mod ifun;
pub mod loc;
pub mod pseries;
pub mod report;
pub mod rmat;

pub use error::{Error, Result};
pub use exactnum::{CycScalar, LambdaLaurent, LambdaPoly, Rational, Ring};
pub use ifun::Theory;
pub use pseries::TruncatedSeries;
pub use report::{Failure, Report, Status};

/// Series over Q.
pub type QSeries = TruncatedSeries<Rational>;
/// Series over Q[Λ, Λ⁻¹].
pub type PSeries = TruncatedSeries<LambdaPoly>;
/// Series over Q(ξ)[λ^{±1/2}].
pub type LSeries = TruncatedSeries<LambdaLaurent>;
