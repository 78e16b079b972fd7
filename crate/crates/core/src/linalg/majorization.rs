//! Majorization test for real vectors.
//!
//! `x ≺ y` ("x is majorized by y") means: after sorting both vectors in
//! non-increasing order, every prefix sum of x is at most the matching prefix
//! sum of y, and the totals agree. This is the order underlying the
//! Schur–Horn theorem (diagonal of a symmetric matrix ≺ its spectrum), which
//! the test suite exercises against the eigensolver.

use std::cmp::Ordering;

use crate::scalar::Scalar;

use super::eigen::LinalgError;

/// Whether `x ≺ y`, with slack `tol` on every prefix comparison and on the
/// total-sum equality. Errors if the lengths differ.
pub fn is_majorized<F: Scalar>(x: &[F], y: &[F], tol: F) -> Result<bool, LinalgError> {
    if x.len() != y.len() {
        return Err(LinalgError::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    let mut xs = x.to_vec();
    let mut ys = y.to_vec();
    let descending = |a: &F, b: &F| b.partial_cmp(a).unwrap_or(Ordering::Equal);
    xs.sort_by(descending);
    ys.sort_by(descending);

    let mut px = F::zero();
    let mut py = F::zero();
    for i in 0..xs.len() {
        px += xs[i];
        py += ys[i];
        let last = i + 1 == xs.len();
        if last {
            if (px - py).abs() > tol {
                return Ok(false);
            }
        } else if px > py + tol {
            return Ok(false);
        }
    }
    Ok(true)
}
