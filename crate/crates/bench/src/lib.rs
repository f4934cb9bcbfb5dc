//! Shared fixtures for the criterion benches.

use mirrorforge::{frob, genus1, rmat, QSeries, Result};

/// Orders exercised by the benches.
pub const ORDERS: &[usize] = &[10, 20, 30];

/// Frame, R-matrix and genus-one potential in one pass.
pub fn genus_one_pipeline(order: usize) -> Result<QSeries> {
    let frame = frob::build_frame(order + 1)?;
    let r = rmat::build_r1(&frame, &rmat::default_constants())?;
    genus1::f1_with(&frame, &r)
}
