//! Priors induced on scaled loadings and uniquenesses by priors on the
//! unscaled loadings.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::stats::gdp::{sample_gdp, GdpParams};
use crate::stats::rng::RngStream;

/// Prior on an unscaled loading.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Prior {
    Gdp(GdpParams),
    /// N(0, 1/precision).
    Normal { precision: f64 },
}

impl Prior {
    pub fn default_gdp() -> Self {
        Prior::Gdp(GdpParams::default())
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Prior::Gdp(p) => {
                GdpParams::new(p.alpha, p.beta)?;
                Ok(())
            }
            Prior::Normal { precision } => {
                if *precision > 0.0 {
                    Ok(())
                } else {
                    Err(Error::invalid("normal prior precision must be positive"))
                }
            }
        }
    }

    pub fn sample(&self, rng: &mut RngStream) -> f64 {
        match self {
            Prior::Gdp(p) => sample_gdp(rng, *p),
            Prior::Normal { precision } => rng.normal(0.0, (1.0 / precision).sqrt()),
        }
    }
}

/// Density of the uniqueness u = 1/(1 + Σ_h λ_h²) when the k unscaled loadings
/// are iid N(0, 1/b):
///
///   π(u) = (b/2)^{k/2} / Γ(k/2) · u⁻² · ((1−u)/u)^{k/2−1} · exp(−(b/2)(1−u)/u)
pub fn normal_induced_uniqueness_density(u: f64, k: usize, b: f64) -> Result<f64> {
    if !(u > 0.0 && u < 1.0) {
        return Err(Error::invalid(format!("uniqueness {u} must lie in (0,1)")));
    }
    if k == 0 || !(b > 0.0) {
        return Err(Error::invalid("k must be >= 1 and b > 0"));
    }
    let kh = k as f64 / 2.0;
    let s = (1.0 - u) / u;
    let log_norm = kh * (b / 2.0).ln() - libm::lgamma(kh);
    let log_dens = log_norm - 2.0 * u.ln() + (kh - 1.0) * s.ln() - 0.5 * b * s;
    Ok(log_dens.exp())
}

/// One draw from the prior induced on (scaled loading, uniqueness): a k-row of
/// unscaled loadings from `prior`, mapped through the scaling identities. The
/// returned loading is the first (all coordinates are exchangeable a priori).
pub fn sample_induced_prior(rng: &mut RngStream, prior: Prior, k: usize) -> (f64, f64) {
    let row: Vec<f64> = (0..k).map(|_| prior.sample(rng)).collect();
    let norm2: f64 = row.iter().map(|x| x * x).sum();
    let denom = (1.0 + norm2).sqrt();
    (row[0] / denom, 1.0 / (1.0 + norm2))
}

/// Draws from the induced prior for a study table.
pub fn simulate_induced_prior(
    rng: &mut RngStream,
    prior: Prior,
    k: usize,
    draws: usize,
) -> Result<Vec<(f64, f64)>> {
    prior.validate()?;
    if k == 0 || draws == 0 {
        return Err(Error::invalid("k and draws must be >= 1"));
    }
    Ok((0..draws).map(|_| sample_induced_prior(rng, prior, k)).collect())
}
