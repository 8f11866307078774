use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{GroupElement, Model};

/// A point of the open unit disk.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiskPoint(Complex64);

/// A point of the circle at infinity, kept on `|b| = 1` to 1e-12.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundaryPoint(Complex64);

impl DiskPoint {
    pub fn new(z: Complex64) -> Result<Self> {
        if z.norm() >= 1.0 {
            return Err(Error::contract(format!(
                "disk point must satisfy |z| < 1, got |z| = {}",
                z.norm()
            )));
        }
        Ok(DiskPoint(z))
    }

    pub fn origin() -> Self {
        DiskPoint(Complex64::new(0.0, 0.0))
    }

    pub fn value(&self) -> Complex64 {
        self.0
    }

    pub fn from_xy(x: f64, y: f64) -> Result<Self> {
        DiskPoint::new(Complex64::new(x, y))
    }

    /// Geodesic polar coordinates about the origin: hyperbolic radius `rho`
    /// and direction `phi`.
    pub fn from_polar(rho: f64, phi: f64) -> Self {
        DiskPoint(Complex64::from_polar((rho / 2.0).tanh(), phi))
    }
}

impl BoundaryPoint {
    pub fn new(b: Complex64) -> Result<Self> {
        if (b.norm() - 1.0).abs() > 1e-12 {
            return Err(Error::contract(format!(
                "boundary point must satisfy |b| = 1, got |b| = {}",
                b.norm()
            )));
        }
        // Renormalize the stored value exactly onto the circle.
        Ok(BoundaryPoint(b / b.norm()))
    }

    pub fn from_angle(theta: f64) -> Self {
        BoundaryPoint(Complex64::from_polar(1.0, theta))
    }

    pub fn one() -> Self {
        BoundaryPoint(Complex64::new(1.0, 0.0))
    }

    pub fn value(&self) -> Complex64 {
        self.0
    }

    pub fn angle(&self) -> f64 {
        self.0.arg()
    }
}

impl GroupElement {
    /// Mobius action on an interior point of the disk model.
    pub fn apply_point(&self, z: DiskPoint) -> DiskPoint {
        debug_assert_eq!(self.model, Model::Disk);
        let w = self.apply_complex(z.value());
        // Isometries keep the open disk invariant; clamp roundoff just inside.
        let n = w.norm();
        if n < 1.0 {
            DiskPoint(w)
        } else {
            DiskPoint(w / n * (1.0 - 1e-15))
        }
    }

    /// Mobius action on a boundary point, renormalized back onto the circle.
    pub fn apply_boundary(&self, b: BoundaryPoint) -> BoundaryPoint {
        debug_assert_eq!(self.model, Model::Disk);
        let w = self.apply_complex(b.value());
        let n = w.norm();
        BoundaryPoint(w / n)
    }
}

/// Hyperbolic distance in the metric `ds^2 = 4 (dx^2 + dy^2)/(1 - x^2 - y^2)^2`.
pub fn hyperbolic_distance(z: DiskPoint, w: DiskPoint) -> f64 {
    let zv = z.value();
    let wv = w.value();
    let num = (zv - wv).norm();
    let den = (Complex64::new(1.0, 0.0) - wv.conj() * zv).norm();
    2.0 * (num / den).atanh()
}

/// Distance from the origin given `|z|^2`, avoiding a square root in hot
/// loops that only compare radii.
pub fn distance_from_origin_sq(norm_sqr: f64) -> f64 {
    2.0 * norm_sqr.sqrt().atanh()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::SubgroupKind;
    use crate::numerics::GaussLegendre;
    use rand::Rng;

    fn random_disk_element(rng: &mut impl Rng) -> GroupElement {
        let g = GroupElement::subgroup(SubgroupKind::N, rng.random_range(-1.5..1.5))
            .compose(&GroupElement::subgroup(
                SubgroupKind::A,
                rng.random_range(-1.5..1.5),
            ))
            .unwrap()
            .compose(&GroupElement::subgroup(
                SubgroupKind::K,
                rng.random_range(0.0..std::f64::consts::TAU),
            ))
            .unwrap();
        g.to_model(Model::Disk)
    }

    fn random_point(rng: &mut impl Rng) -> DiskPoint {
        DiskPoint::from_polar(rng.random_range(0.0..2.5), rng.random_range(0.0..std::f64::consts::TAU))
    }

    #[test]
    fn disk_point_rejects_exterior() {
        assert!(DiskPoint::new(Complex64::new(1.0, 0.2)).is_err());
        assert!(BoundaryPoint::new(Complex64::new(0.5, 0.0)).is_err());
    }

    #[test]
    fn distance_of_coincident_points_is_zero() {
        let z = DiskPoint::from_xy(0.3, -0.1).unwrap();
        assert_eq!(hyperbolic_distance(z, z), 0.0);
    }

    #[test]
    fn radial_distance_matches_arclength_quadrature() {
        // Independent oracle: integrate ds = 2 dt / (1 - t^2) along the radius.
        let gl = GaussLegendre::new(40);
        let oracle: f64 = gl
            .on_interval(0.0, 0.5)
            .iter()
            .map(|(t, w)| w * 2.0 / (1.0 - t * t))
            .sum();
        let d = hyperbolic_distance(DiskPoint::origin(), DiskPoint::from_xy(0.5, 0.0).unwrap());
        assert!((d - oracle).abs() < 1e-12, "d = {d}, oracle = {oracle}");
        assert!((d - 3.0f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn distance_is_mobius_invariant() {
        let mut rng = crate::numerics::stream_rng(11, 0);
        for _ in 0..50 {
            let g = random_disk_element(&mut rng);
            let z = random_point(&mut rng);
            let w = random_point(&mut rng);
            let before = hyperbolic_distance(z, w);
            let after = hyperbolic_distance(g.apply_point(z), g.apply_point(w));
            assert!((before - after).abs() < 1e-10, "drift {}", before - after);
        }
    }

    #[test]
    fn triangle_inequality_and_symmetry() {
        let mut rng = crate::numerics::stream_rng(12, 0);
        for _ in 0..200 {
            let a = random_point(&mut rng);
            let b = random_point(&mut rng);
            let c = random_point(&mut rng);
            let ab = hyperbolic_distance(a, b);
            let ba = hyperbolic_distance(b, a);
            assert!((ab - ba).abs() < 1e-12);
            assert!(ab <= hyperbolic_distance(a, c) + hyperbolic_distance(c, b) + 1e-12);
        }
    }

    #[test]
    fn boundary_maps_to_boundary_interior_to_interior() {
        let mut rng = crate::numerics::stream_rng(13, 0);
        for _ in 0..50 {
            let g = random_disk_element(&mut rng);
            let b = BoundaryPoint::from_angle(rng.random_range(0.0..std::f64::consts::TAU));
            let gb = g.apply_boundary(b);
            assert!((gb.value().norm() - 1.0).abs() < 1e-12);
            let z = random_point(&mut rng);
            assert!(g.apply_point(z).value().norm() < 1.0);
        }
    }

    #[test]
    fn projective_elements_act_identically() {
        let mut rng = crate::numerics::stream_rng(14, 0);
        let g = random_disk_element(&mut rng);
        let minus = GroupElement {
            a: -g.a,
            b: -g.b,
            c: -g.c,
            d: -g.d,
            model: g.model,
        };
        for _ in 0..100 {
            let z = random_point(&mut rng);
            let d = (g.apply_point(z).value() - minus.apply_point(z).value()).norm();
            assert!(d < 1e-14);
        }
    }

    #[test]
    fn half_plane_infinity_handling() {
        // nbar_v sends infinity to 1/v in the half-plane model.
        let g = GroupElement::subgroup(SubgroupKind::Nbar, 2.0);
        let inf = Complex64::new(f64::INFINITY, 0.0);
        assert!((g.apply_complex(inf) - Complex64::new(0.5, 0.0)).norm() < 1e-15);
        // n_u fixes infinity.
        let n = GroupElement::subgroup(SubgroupKind::N, 0.4);
        assert!(n.apply_complex(inf).re.is_infinite());
    }
}
