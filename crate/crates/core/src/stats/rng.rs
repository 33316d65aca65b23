//! Seedable random stream, one per chain or replicate.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

/// Deterministic random stream. Identical seed (and stream id) reproduces the
/// exact draw sequence; distinct stream ids give independent streams for
/// parallel chains and replicates.
#[derive(Debug, Clone)]
pub struct RngStream(ChaCha8Rng);

impl RngStream {
    pub fn new(seed: u64) -> Self {
        RngStream(ChaCha8Rng::seed_from_u64(seed))
    }

    /// Independent stream for chain/replicate `id` under the same seed.
    pub fn substream(seed: u64, id: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(id);
        RngStream(rng)
    }

    #[inline]
    pub fn uniform(&mut self) -> f64 {
        // (0,1): reject the exact 0 the generator can produce.
        loop {
            let u: f64 = self.0.random();
            if u > 0.0 {
                return u;
            }
        }
    }

    #[inline]
    pub fn standard_normal(&mut self) -> f64 {
        StandardNormal.sample(&mut self.0)
    }

    #[inline]
    pub fn normal(&mut self, mean: f64, sd: f64) -> f64 {
        mean + sd * self.standard_normal()
    }

    /// Gamma draw with the shape/rate parameterization.
    pub fn gamma(&mut self, shape: f64, rate: f64) -> f64 {
        let g = rand_distr::Gamma::new(shape, 1.0 / rate)
            .expect("gamma parameters must be positive");
        g.sample(&mut self.0)
    }

    /// Exponential draw with the given rate.
    pub fn exponential(&mut self, rate: f64) -> f64 {
        let e = rand_distr::Exp::new(rate).expect("exponential rate must be positive");
        e.sample(&mut self.0)
    }

    /// Dirichlet draw via normalized gammas.
    pub fn dirichlet(&mut self, alphas: &[f64]) -> Vec<f64> {
        loop {
            let g: Vec<f64> = alphas.iter().map(|&a| self.gamma(a, 1.0)).collect();
            let s: f64 = g.iter().sum();
            if s > 0.0 {
                return g.into_iter().map(|x| x / s).collect();
            }
        }
    }

    pub fn inner(&mut self) -> &mut ChaCha8Rng {
        &mut self.0
    }
}
