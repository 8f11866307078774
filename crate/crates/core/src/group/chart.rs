use num_complex::Complex64;

use crate::group::element::theta_mod_2pi;
use crate::group::{BoundaryPoint, DiskPoint, GroupElement, Model, SubgroupKind};

/// The `(z, theta)` chart on `G ~ S D`: base point and fibre angle, with
/// `theta = 0` pointing at `1` on the boundary circle.
#[derive(Debug, Clone, Copy)]
pub struct Frame {
    pub z: DiskPoint,
    pub theta: f64,
}

/// The `(z, b)` chart: base point and forward endpoint of the geodesic.
#[derive(Debug, Clone, Copy)]
pub struct HoroCoord {
    pub z: DiskPoint,
    pub b: BoundaryPoint,
}

/// The hyperbolic translation carrying the origin to `z` along the geodesic
/// through both; the canonical section of `G -> D`.
fn translation_to(z: DiskPoint) -> GroupElement {
    let zv = z.value();
    let s = (1.0 - zv.norm_sqr()).sqrt();
    GroupElement {
        a: Complex64::new(1.0 / s, 0.0),
        b: zv / s,
        c: zv.conj() / s,
        d: Complex64::new(1.0 / s, 0.0),
        model: Model::Disk,
    }
}

impl Frame {
    pub fn new(z: DiskPoint, theta: f64) -> Self {
        Frame {
            z,
            theta: theta_mod_2pi(theta),
        }
    }

    /// The disk-model group element `T_z k_theta` representing this frame.
    pub fn to_group(&self) -> GroupElement {
        translation_to(self.z)
            .compose_unchecked(&GroupElement::subgroup_in(SubgroupKind::K, self.theta, Model::Disk))
    }
}

impl HoroCoord {
    pub fn new(z: DiskPoint, b: BoundaryPoint) -> Self {
        HoroCoord { z, b }
    }

    pub fn to_group(&self) -> GroupElement {
        self.to_frame().to_group()
    }

    pub fn to_frame(&self) -> Frame {
        // theta is the direction of b seen from z: rotate so that
        // T_z k_theta maps 1 to b.
        let t_inv = translation_to(self.z).invert();
        let pre = t_inv.apply_boundary(self.b);
        Frame::new(self.z, pre.value().arg())
    }
}

impl GroupElement {
    /// Base point of the frame: the image of the origin.
    pub fn base_point(&self) -> DiskPoint {
        debug_assert_eq!(self.model, Model::Disk);
        self.apply_point(DiskPoint::origin())
    }

    /// Forward conformal endpoint of the geodesic through this frame: the
    /// Mobius image of `1` on the boundary.
    pub fn forward_endpoint(&self) -> BoundaryPoint {
        debug_assert_eq!(self.model, Model::Disk);
        self.apply_boundary(BoundaryPoint::one())
    }

    pub fn to_horo(&self) -> HoroCoord {
        HoroCoord {
            z: self.base_point(),
            b: self.forward_endpoint(),
        }
    }

    pub fn to_frame(&self) -> Frame {
        let z = self.base_point();
        let k = translation_to(z).invert().compose_unchecked(self);
        Frame::new(z, k.rotation_angle())
    }
}
