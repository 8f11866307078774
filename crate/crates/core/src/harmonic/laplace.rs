use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::group::DiskPoint;

/// Apply the positive Laplace-Beltrami operator
/// `Delta = -((1 - |z|^2)^2 / 4) (d^2/dx^2 + d^2/dy^2)`
/// to a smooth function by Richardson-extrapolated 5-point stencils at steps
/// `h` and `h/2`, giving an `O(h^4)` truncation error.
pub fn laplace_apply<F>(f: F, z: DiskPoint, h: f64) -> Result<Complex64>
where
    F: Fn(DiskPoint) -> Complex64,
{
    let zv = z.value();
    if zv.norm() + h >= 1.0 {
        return Err(Error::contract(format!(
            "stencil of step {h} exits the disk at |z| = {}",
            zv.norm()
        )));
    }
    let flat = |step: f64| -> Complex64 {
        let p = |dx: f64, dy: f64| {
            f(DiskPoint::new(Complex64::new(zv.re + dx, zv.im + dy)).expect("stencil inside disk"))
        };
        let center = f(z);
        let dxx = p(step, 0.0) + p(-step, 0.0) - 2.0 * center;
        let dyy = p(0.0, step) + p(0.0, -step) - 2.0 * center;
        (dxx + dyy) / (step * step)
    };
    let coarse = flat(h);
    let fine = flat(h / 2.0);
    let euclidean = (4.0 * fine - coarse) / 3.0;
    let factor = (1.0 - zv.norm_sqr()) * (1.0 - zv.norm_sqr()) / 4.0;
    Ok(-factor * euclidean)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::BoundaryPoint;
    use crate::harmonic::{plane_wave, poisson_kernel};

    #[test]
    fn constants_are_harmonic() {
        let v = laplace_apply(
            |_| Complex64::new(1.0, 0.0),
            DiskPoint::from_xy(0.2, 0.4).unwrap(),
            1e-3,
        )
        .unwrap();
        assert!(v.norm() < 1e-9);
    }

    #[test]
    fn poisson_kernel_is_harmonic() {
        // mu = 1 (r = -i/2): eigenvalue mu(1 - mu) = 0.
        let b = BoundaryPoint::from_angle(0.7);
        let z = DiskPoint::from_xy(0.3, 0.2).unwrap();
        let v = laplace_apply(
            |w| Complex64::new(poisson_kernel(w, b), 0.0),
            z,
            5e-3,
        )
        .unwrap();
        let scale = poisson_kernel(z, b);
        assert!(v.norm() / scale < 1e-6, "residual {}", v.norm() / scale);
    }

    #[test]
    fn plane_wave_eigenvalue_at_r_two() {
        // Delta phi = (1/4 + r^2) phi = 4.25 phi at r = 2.
        let b = BoundaryPoint::from_angle(2.1);
        let z = DiskPoint::from_xy(0.3, 0.2).unwrap();
        let r = Complex64::new(2.0, 0.0);
        let f = |w: DiskPoint| plane_wave(w, b, r).unwrap();
        let v = laplace_apply(f, z, 5e-3).unwrap();
        let expect = Complex64::new(4.25, 0.0) * f(z);
        assert!(
            (v - expect).norm() / expect.norm() < 1e-6,
            "relative residual {}",
            (v - expect).norm() / expect.norm()
        );
    }

    #[test]
    fn stencil_outside_disk_is_rejected() {
        let z = DiskPoint::from_xy(0.999, 0.0).unwrap();
        assert!(laplace_apply(|_| Complex64::new(0.0, 0.0), z, 0.01).is_err());
    }
}
