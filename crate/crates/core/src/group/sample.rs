use std::f64::consts::TAU;

use rand::Rng;

use crate::error::{Error, Result};
use crate::group::{DiskPoint, Frame, GroupElement};
use crate::numerics::stream_rng;

/// Acceptance bookkeeping for rejection sampling; the acceptance rate is an
/// unbiased estimator of the hyperbolic ball area.
#[derive(Debug, Clone, Copy, Default)]
pub struct HaarSampleStats {
    pub proposals: u64,
    pub accepted: u64,
}

impl HaarSampleStats {
    /// Estimate of the hyperbolic area of the sampled ball from the
    /// acceptance rate against the Euclidean proposal.
    pub fn area_estimate(&self, ball_radius: f64) -> f64 {
        let r_max = (ball_radius / 2.0).tanh();
        let envelope = 4.0 * std::f64::consts::PI * r_max * r_max
            / ((1.0 - r_max * r_max) * (1.0 - r_max * r_max));
        self.accepted as f64 / self.proposals as f64 * envelope
    }
}

/// Closed-form area of a hyperbolic ball of radius `rho` (curvature -1).
pub fn hyperbolic_ball_area(rho: f64) -> f64 {
    TAU * (rho.cosh() - 1.0)
}

/// I.i.d. Haar samples on `G` over the hyperbolic ball of the given radius:
/// `z` rejection-sampled from `dVol = 4 dx dy / (1-|z|^2)^2`, `theta` uniform.
/// Sample `i` draws only from stream `(seed, i)`, so any parallel
/// partitioning reproduces the same list.
pub fn haar_sample(ball_radius: f64, count: usize, seed: u64) -> Result<Vec<GroupElement>> {
    Ok(haar_sample_with_stats(ball_radius, count, seed)?.0)
}

pub fn haar_sample_with_stats(
    ball_radius: f64,
    count: usize,
    seed: u64,
) -> Result<(Vec<GroupElement>, HaarSampleStats)> {
    if ball_radius <= 0.0 {
        return Err(Error::contract("ball_radius must be positive"));
    }
    if count == 0 {
        return Err(Error::contract("count must be positive"));
    }
    let r_max = (ball_radius / 2.0).tanh();
    let mut stats = HaarSampleStats::default();
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let mut rng = stream_rng(seed, i as u64);
        let z = loop {
            stats.proposals += 1;
            // uniform on the Euclidean disk of radius r_max
            let r = r_max * rng.random_range(0.0..1.0f64).sqrt();
            let phi = rng.random_range(0.0..TAU);
            let ratio = (1.0 - r_max * r_max) / (1.0 - r * r);
            if rng.random_range(0.0..1.0) < ratio * ratio {
                stats.accepted += 1;
                break DiskPoint::new(num_complex::Complex64::from_polar(r, phi)).unwrap();
            }
        };
        let theta = rng.random_range(0.0..TAU);
        out.push(Frame::new(z, theta).to_group());
    }
    Ok((out, stats))
}
