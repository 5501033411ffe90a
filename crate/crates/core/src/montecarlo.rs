//! Seeded Monte Carlo estimates of selection frequencies.
//!
//! Trial `t` under master seed `s` runs on its own stream
//! `Prng::new(derive_seed(s, t))`, so any split of the trial range across
//! workers reproduces the same counts.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use crate::graph::Graph;
use crate::mechanisms::{MechanismSpec, Runner};
use crate::rng::{derive_seed, Prng};
use crate::{Error, Result};

/// `sqrt(ln(2/delta) / (2 trials))`: with probability at least `1 - delta`
/// a frequency of `trials` independent Bernoulli draws is within this of its
/// mean.
pub fn hoeffding_eps(trials: u64, delta: f64) -> f64 {
    libm::sqrt(libm::log(2.0 / delta) / (2.0 * trials as f64))
}

#[derive(Debug, Clone, PartialEq)]
pub struct McEstimate {
    pub mechanism: MechanismSpec,
    pub trials: u64,
    pub seed: u64,
    /// Selection counts per 0-based vertex index.
    pub counts: Vec<u64>,
    /// Sum of the selected vertices' indegrees over all trials.
    pub degree_sum: u64,
    pub delta: usize,
}

impl McEstimate {
    pub fn freq(&self) -> Vec<f64> {
        self.counts.iter().map(|&c| c as f64 / self.trials as f64).collect()
    }

    pub fn mean_degree(&self) -> f64 {
        self.degree_sum as f64 / self.trials as f64
    }

    pub fn hoeffding_eps(&self, delta: f64) -> f64 {
        hoeffding_eps(self.trials, delta)
    }

    /// Adds the counts of a disjoint trial range under the same seed.
    pub fn merge(mut self, other: &McEstimate) -> Result<McEstimate> {
        if other.counts.len() != self.counts.len() {
            return Err(Error::DimensionMismatch { expected: self.counts.len(), got: other.counts.len() });
        }
        self.trials += other.trials;
        self.degree_sum += other.degree_sum;
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            *a += b;
        }
        Ok(self)
    }
}

/// Runs trials `range` of the stream family for `seed`.
pub fn estimate_range(g: &Graph, spec: MechanismSpec, range: Range<u64>, seed: u64) -> Result<McEstimate> {
    spec.validate()?;
    let mut counts = vec![0u64; g.n()];
    let mut runner = Runner::new(g);
    for t in range.clone() {
        let mut rng = Prng::new(derive_seed(seed, t));
        counts[runner.run(spec, &mut rng)?.index()] += 1;
    }
    let degree_sum = counts.iter().zip(g.indegrees()).map(|(&c, d)| c * d as u64).sum();
    Ok(McEstimate {
        mechanism: spec,
        trials: range.end - range.start,
        seed,
        counts,
        degree_sum,
        delta: g.max_indegree(),
    })
}

pub fn estimate(g: &Graph, spec: MechanismSpec, trials: u64, seed: u64) -> Result<McEstimate> {
    if trials == 0 {
        return Err(Error::Domain { name: "trials", value: 0 });
    }
    estimate_range(g, spec, 0..trials, seed)
}

/// Sampled ratio with a Hoeffding half-width. Selected degrees lie in
/// `[0, delta]`, so the ratio's band equals the frequency band.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatioEstimate {
    pub ratio: f64,
    pub band: f64,
}

impl RatioEstimate {
    pub fn from_estimate(est: &McEstimate, confidence_delta: f64) -> Result<RatioEstimate> {
        if est.delta == 0 {
            return Err(Error::ZeroDelta);
        }
        Ok(RatioEstimate { ratio: est.mean_degree() / est.delta as f64, band: est.hoeffding_eps(confidence_delta) })
    }
}

pub fn estimate_ratio(
    g: &Graph,
    spec: MechanismSpec,
    trials: u64,
    seed: u64,
    confidence_delta: f64,
) -> Result<RatioEstimate> {
    if g.max_indegree() == 0 {
        return Err(Error::ZeroDelta);
    }
    RatioEstimate::from_estimate(&estimate(g, spec, trials, seed)?, confidence_delta)
}
