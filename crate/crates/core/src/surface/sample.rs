use std::f64::consts::TAU;

use rand::Rng;

use crate::error::{Error, Result};
use crate::group::{DiskPoint, Frame, GroupElement};
use crate::numerics::stream_rng;
use crate::surface::FuchsianGroup;

/// Acceptance bookkeeping; the in-domain fraction estimates the quotient
/// area from the covering-ball area.
#[derive(Debug, Clone, Copy, Default)]
pub struct SurfaceSampleStats {
    pub ball_draws: u64,
    pub in_domain: u64,
    pub cover_radius: f64,
}

impl SurfaceSampleStats {
    pub fn area_estimate(&self) -> f64 {
        self.in_domain as f64 / self.ball_draws as f64
            * crate::group::hyperbolic_ball_area(self.cover_radius)
    }
}

/// Haar samples on the quotient: `z` rejection-sampled in the Dirichlet
/// domain (sample the covering hyperbolic ball, keep points that are their
/// own reduction), `theta` uniform. Deterministic per `(seed, index)`.
pub fn sample_surface(
    group: &FuchsianGroup,
    count: usize,
    seed: u64,
) -> Result<Vec<GroupElement>> {
    Ok(sample_surface_with_stats(group, count, seed)?.0)
}

pub fn sample_surface_with_stats(
    group: &FuchsianGroup,
    count: usize,
    seed: u64,
) -> Result<(Vec<GroupElement>, SurfaceSampleStats)> {
    if count == 0 {
        return Err(Error::contract("count must be positive"));
    }
    let cover = group.domain_radius() + 0.05;
    let r_max = (cover / 2.0).tanh();
    let mut stats = SurfaceSampleStats {
        cover_radius: cover,
        ..Default::default()
    };
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let mut rng = stream_rng(seed, i as u64);
        let mut guard = 0u32;
        let z = loop {
            // hyperbolic-area sample on the covering ball
            let r = r_max * rng.random_range(0.0..1.0f64).sqrt();
            let phi = rng.random_range(0.0..TAU);
            let ratio = (1.0 - r_max * r_max) / (1.0 - r * r);
            if rng.random_range(0.0..1.0) >= ratio * ratio {
                continue;
            }
            stats.ball_draws += 1;
            let z = num_complex::Complex64::from_polar(r, phi);
            if group.in_domain(z) {
                stats.in_domain += 1;
                break z;
            }
            guard += 1;
            if guard > 10_000 {
                return Err(Error::contract(
                    "surface sampling acceptance rate below 1%: covering ball misconfigured",
                ));
            }
        };
        let theta = rng.random_range(0.0..TAU);
        out.push(Frame::new(DiskPoint::new(z).unwrap(), theta).to_group());
    }
    Ok((out, stats))
}
