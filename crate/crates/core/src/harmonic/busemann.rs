use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::group::{BoundaryPoint, DiskPoint};

/// Spectral parameter and boundary point of a hyperbolic plane wave
/// `z -> e^{(1/2 + i r) <z, b>}`.
#[derive(Debug, Clone, Copy)]
pub struct PlaneWaveParam {
    pub r: Complex64,
    pub b: BoundaryPoint,
}

/// The Busemann function `<z, b>`: signed hyperbolic distance from the origin
/// to the horocycle through `z` tangent to `b`, equal to
/// `log((1 - |z|^2) / |z - b|^2)`.
pub fn busemann(z: DiskPoint, b: BoundaryPoint) -> Result<f64> {
    let zv = z.value();
    let r2 = zv.norm_sqr();
    if r2 >= (1.0 - 1e-12) * (1.0 - 1e-12) {
        return Err(Error::PrecisionLoss(format!(
            "Busemann function unreliable for |z| = {} this close to the boundary",
            r2.sqrt()
        )));
    }
    Ok((-r2).ln_1p() - (zv - b.value()).norm_sqr().ln())
}

/// The classical Poisson kernel `P(z, b) = (1 - |z|^2)/|z - b|^2 = e^{<z,b>}`.
pub fn poisson_kernel(z: DiskPoint, b: BoundaryPoint) -> f64 {
    let zv = z.value();
    (1.0 - zv.norm_sqr()) / (zv - b.value()).norm_sqr()
}

/// Hyperbolic plane wave `e^{(1/2 + i r) <z, b>}`; `r` may be complex within
/// the analyticity strip of any symbol it feeds.
pub fn plane_wave(z: DiskPoint, b: BoundaryPoint, r: Complex64) -> Result<Complex64> {
    let bus = busemann(z, b)?;
    let mu = Complex64::new(0.5, 0.0) + Complex64::new(0.0, 1.0) * r;
    Ok((mu * bus).exp())
}
