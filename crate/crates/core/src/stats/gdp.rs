//! Generalized double Pareto prior: density and scale-mixture sampling.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::stats::rng::RngStream;

/// Shape/scale hyperparameters of the generalized double Pareto distribution.
/// The default (3, 1) gives mean 0, variance 1 and Pr(|λ| < 2) ≈ 0.96.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GdpParams {
    pub alpha: f64,
    pub beta: f64,
}

impl GdpParams {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha > 0.0) || !(beta > 0.0) {
            return Err(Error::invalid(format!(
                "GDP parameters must be positive (alpha={alpha}, beta={beta})"
            )));
        }
        Ok(GdpParams { alpha, beta })
    }
}

impl Default for GdpParams {
    fn default() -> Self {
        GdpParams { alpha: 3.0, beta: 1.0 }
    }
}

/// Density (α/2β)(1 + |x|/β)^{−(α+1)}.
pub fn gdp_density(x: f64, params: GdpParams) -> f64 {
    let GdpParams { alpha, beta } = params;
    (alpha / (2.0 * beta)) * (1.0 + x.abs() / beta).powf(-(alpha + 1.0))
}

/// Marginal draw through the three-stage mixture
/// ξ ~ Ga(α, β),  ψ | ξ ~ Exp(ξ²/2),  λ | ψ ~ N(0, ψ).
pub fn sample_gdp(rng: &mut RngStream, params: GdpParams) -> f64 {
    let xi = rng.gamma(params.alpha, params.beta);
    let psi = rng.exponential(0.5 * xi * xi);
    rng.normal(0.0, psi.sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn density_at_zero_is_alpha_over_two_beta() {
        let p = GdpParams::default();
        assert_abs_diff_eq!(gdp_density(0.0, p), 1.5, epsilon = 1e-15);
    }

    #[test]
    fn density_is_symmetric() {
        let p = GdpParams::new(2.5, 0.7).unwrap();
        for &x in &[0.1, 0.5, 1.0, 3.0, 10.0] {
            assert_eq!(gdp_density(x, p), gdp_density(-x, p));
        }
    }

    #[test]
    fn density_at_one_default_params() {
        // 1.5 · 2⁻⁴ = 0.09375
        assert_abs_diff_eq!(gdp_density(1.0, GdpParams::default()), 0.09375, epsilon = 1e-15);
    }

    #[test]
    fn default_moments_and_central_mass() {
        let mut rng = RngStream::new(31);
        let n = 1_000_000usize;
        let (mut s, mut s2, mut inside) = (0.0, 0.0, 0usize);
        for _ in 0..n {
            let x = sample_gdp(&mut rng, GdpParams::default());
            s += x;
            s2 += x * x;
            if x.abs() < 2.0 {
                inside += 1;
            }
        }
        let mean = s / n as f64;
        let var = s2 / n as f64 - mean * mean;
        let p2 = inside as f64 / n as f64;
        assert!(mean.abs() < 0.02, "mean {mean}");
        assert!((var - 1.0).abs() < 0.05, "variance {var}");
        assert!((p2 - 0.96).abs() < 0.01, "Pr(|x|<2) {p2}");
    }

    #[test]
    fn histogram_matches_density() {
        // Binned frequencies of mixture draws against the closed form.
        let p = GdpParams::default();
        let mut rng = RngStream::new(32);
        let n = 1_000_000usize;
        let (lo, hi, nb) = (-6.0, 6.0, 120usize);
        let w = (hi - lo) / nb as f64;
        let mut counts = vec![0usize; nb];
        let mut in_range = 0usize;
        for _ in 0..n {
            let x = sample_gdp(&mut rng, p);
            if x > lo && x < hi {
                counts[((x - lo) / w) as usize] += 1;
                in_range += 1;
            }
        }
        assert!(in_range as f64 / n as f64 > 0.99);
        let mut sup = 0.0f64;
        for (i, &c) in counts.iter().enumerate() {
            let center = lo + (i as f64 + 0.5) * w;
            let expected = gdp_density(center, p) * w;
            let observed = c as f64 / n as f64;
            sup = sup.max((observed - expected).abs() / w);
        }
        assert!(sup < 0.01, "sup density error {sup}");
    }
}
