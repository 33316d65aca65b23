//! Random variate generation and closed-form densities used by the samplers
//! and the prior studies.

pub mod gdp;
pub mod induced;
pub mod invgauss;
pub mod normal;
pub mod rng;
pub mod truncnorm;

pub use gdp::{gdp_density, sample_gdp, GdpParams};
pub use induced::{
    normal_induced_uniqueness_density, sample_induced_prior, simulate_induced_prior, Prior,
};
pub use invgauss::sample_inverse_gaussian;
pub use normal::{norm_cdf, norm_pdf, norm_quantile, norm_sf};
pub use rng::RngStream;
pub use truncnorm::sample_truncated_normal;
