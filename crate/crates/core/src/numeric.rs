//! Small numeric helpers: pairwise summation and tail-mass estimates.

use crate::C64;

const PAIRWISE_BASE: usize = 32;

/// Sum with pairwise (cascade) splitting. Error grows like O(log n) instead
/// of O(n), and the reduction order is fixed, so results are reproducible
/// regardless of how the terms were produced.
pub fn pairwise_sum(xs: &[f64]) -> f64 {
    if xs.len() <= PAIRWISE_BASE {
        return xs.iter().sum();
    }
    let mid = xs.len() / 2;
    pairwise_sum(&xs[..mid]) + pairwise_sum(&xs[mid..])
}

/// Complex-valued pairwise sum with the same fixed reduction order.
pub fn pairwise_sum_c64(xs: &[C64]) -> C64 {
    if xs.len() <= PAIRWISE_BASE {
        return xs.iter().sum();
    }
    let mid = xs.len() / 2;
    pairwise_sum_c64(&xs[..mid]) + pairwise_sum_c64(&xs[mid..])
}

/// Upper-tail mass of a unit Gaussian beyond `z` standard deviations.
pub fn gaussian_tail(z: f64) -> f64 {
    0.5 * libm::erfc(z / std::f64::consts::SQRT_2)
}
