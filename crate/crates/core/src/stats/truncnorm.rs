//! Truncated-normal variate generation.
//!
//! Central intervals use the inverse-cdf method; once a standardized bound
//! passes `TAIL_CUT` the interval mass is too small for the cdf scale and we
//! switch to one-sided exponential rejection, which stays exact arbitrarily
//! far out.

use crate::error::{Error, Result};
use crate::stats::normal::{norm_cdf, norm_quantile};
use crate::stats::rng::RngStream;

/// Standardized bound beyond which the inverse-cdf path is abandoned.
const TAIL_CUT: f64 = 5.0;

/// Draw from N(mean, var) restricted to the open interval (lower, upper).
/// Bounds may be infinite. Every returned value lies strictly inside.
pub fn sample_truncated_normal(
    rng: &mut RngStream,
    mean: f64,
    var: f64,
    lower: f64,
    upper: f64,
) -> Result<f64> {
    if !(var > 0.0) {
        return Err(Error::invalid(format!("truncated normal variance {var} must be > 0")));
    }
    if !(lower < upper) {
        return Err(Error::invalid(format!(
            "truncated normal bounds ({lower}, {upper}) must satisfy lower < upper"
        )));
    }
    let sd = var.sqrt();
    let a = (lower - mean) / sd;
    let b = (upper - mean) / sd;
    let z = sample_standardized(rng, a, b);
    let x = mean + sd * z;
    // Rounding at the ends of very thin intervals can land on a bound.
    Ok(clamp_open(x, lower, upper))
}

fn clamp_open(x: f64, lower: f64, upper: f64) -> f64 {
    let mut x = x;
    if x <= lower {
        x = lower.next_up();
    }
    if x >= upper {
        x = upper.next_down();
    }
    x
}

fn sample_standardized(rng: &mut RngStream, a: f64, b: f64) -> f64 {
    if a == f64::NEG_INFINITY && b == f64::INFINITY {
        return rng.standard_normal();
    }
    // Reduce to a right-tail problem when the interval sits in the left tail.
    if b <= -TAIL_CUT {
        return -tail_rejection(rng, -b, -a);
    }
    if a >= TAIL_CUT {
        return tail_rejection(rng, a, b);
    }
    let pa = if a == f64::NEG_INFINITY { 0.0 } else { norm_cdf(a) };
    let pb = if b == f64::INFINITY { 1.0 } else { norm_cdf(b) };
    if pb - pa > 1e-12 {
        let u = pa + (pb - pa) * rng.uniform();
        let z = norm_quantile(u.clamp(f64::MIN_POSITIVE, 1.0 - 1e-16));
        return z.clamp(a, b);
    }
    // Interval mass below cdf resolution: treat as a tail problem anchored at
    // whichever bound is closer to the mode.
    if a >= 0.0 {
        tail_rejection(rng, a, b)
    } else {
        -tail_rejection(rng, -b, -a)
    }
}

/// Robert's exponential rejection for N(0,1) restricted to (a, b), a > 0.
fn tail_rejection(rng: &mut RngStream, a: f64, b: f64) -> f64 {
    debug_assert!(a > 0.0 && b > a);
    let lambda = 0.5 * (a + (a * a + 4.0).sqrt());
    loop {
        let x = a + rng.exponential(lambda);
        if x >= b {
            continue;
        }
        let d = x - lambda;
        if rng.uniform() <= (-0.5 * d * d).exp() {
            return x;
        }
    }
}
