//! Inverse-Gaussian variates (mean/scale parameterization).

use crate::error::{Error, Result};
use crate::stats::rng::RngStream;

/// Draw from the inverse-Gaussian distribution with mean `a` and scale `b`
/// (density ∝ x^{-3/2} exp(−b(x−a)²/(2a²x))), via the transform-with-uniform-
/// correction method of Michael, Schucany and Haas.
pub fn sample_inverse_gaussian(rng: &mut RngStream, a: f64, b: f64) -> Result<f64> {
    if !(a > 0.0) || !(b > 0.0) {
        return Err(Error::invalid(format!(
            "inverse-Gaussian parameters must be positive (a={a}, b={b})"
        )));
    }
    let nu = rng.standard_normal();
    let y = nu * nu;
    let x1 = a + a * a * y / (2.0 * b) - (a / (2.0 * b)) * (4.0 * a * b * y + a * a * y * y).sqrt();
    // Cancellation for huge y can push x1 to 0 or slightly below.
    let x1 = if x1 > 0.0 { x1 } else { f64::MIN_POSITIVE };
    let u = rng.uniform();
    if u <= a / (a + x1) {
        Ok(x1)
    } else {
        Ok(a * a / x1)
    }
}
