use num_complex::Complex64;

use crate::group::{GroupElement, Model};

/// Coefficients of a tangent vector in the left-invariant frame
/// `{H, X_+, X_-}` normalised by `|H| = |X_+| = |X_-| = 1`.
#[derive(Debug, Clone, Copy)]
pub struct AlgebraCoefficients {
    pub h: Complex64,
    pub x_plus: Complex64,
    pub x_minus: Complex64,
}

impl AlgebraCoefficients {
    pub fn norm(&self) -> f64 {
        (self.h.norm_sqr() + self.x_plus.norm_sqr() + self.x_minus.norm_sqr()).sqrt()
    }
}

/// Express a (nearly traceless) matrix tangent vector, already pulled back to
/// the identity, in the `{H, X_+, X_-}` basis of the given model.
///
/// In the half-plane model `H = diag(1/2, -1/2)`, `X_+ = [[0,1],[0,0]]`,
/// `X_- = [[0,0],[1,0]]`; disk-model vectors are converted through the Cayley
/// conjugation first.
pub fn frame_coefficients(xi: [Complex64; 4], model: Model) -> AlgebraCoefficients {
    let m = match model {
        Model::UpperHalfPlane => xi,
        Model::Disk => {
            // conj by the inverse Cayley matrix: C^{-1} xi C
            let wrap = GroupElement {
                a: xi[0],
                b: xi[1],
                c: xi[2],
                d: xi[3],
                model: Model::Disk,
            };
            // to_model renormalizes the determinant, which is wrong for an
            // algebra element; conjugate by hand instead.
            let c = cayley();
            let ci = cayley_inv();
            let t = mul(&ci, &wrap.entries());
            mul(&t, &c)
        }
    };
    AlgebraCoefficients {
        h: m[0] - m[3],
        x_plus: m[1],
        x_minus: m[2],
    }
}

fn cayley() -> [Complex64; 4] {
    let s = Complex64::new(1.0, 1.0);
    let i = Complex64::new(0.0, 1.0);
    [1.0 / s, -i / s, 1.0 / s, i / s]
}

fn cayley_inv() -> [Complex64; 4] {
    let s = Complex64::new(0.5, -0.5);
    let i = Complex64::new(0.0, 1.0);
    [i * s, i * s, -s, s]
}

fn mul(x: &[Complex64; 4], y: &[Complex64; 4]) -> [Complex64; 4] {
    [
        x[0] * y[0] + x[1] * y[2],
        x[0] * y[1] + x[1] * y[3],
        x[2] * y[0] + x[3] * y[2],
        x[2] * y[1] + x[3] * y[3],
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::SubgroupKind;

    #[test]
    fn recovers_basis_coefficients_in_both_models() {
        for model in [Model::UpperHalfPlane, Model::Disk] {
            // d/dt at 0 of the one-parameter subgroups gives the basis fields.
            let s = 1e-7;
            for (kind, pick) in [
                (SubgroupKind::A, 0usize),
                (SubgroupKind::N, 1),
                (SubgroupKind::Nbar, 2),
            ] {
                let plus = GroupElement::subgroup_in(kind, s, model);
                let minus = GroupElement::subgroup_in(kind, -s, model);
                let xi: Vec<Complex64> = plus
                    .entries()
                    .iter()
                    .zip(minus.entries().iter())
                    .map(|(p, m)| (p - m) / (2.0 * s))
                    .collect();
                let co = frame_coefficients([xi[0], xi[1], xi[2], xi[3]], model);
                let values = [co.h, co.x_plus, co.x_minus];
                for (i, v) in values.iter().enumerate() {
                    let expect = if i == pick { 1.0 } else { 0.0 };
                    assert!(
                        (v - Complex64::new(expect, 0.0)).norm() < 1e-6,
                        "{kind:?} {model:?} coefficient {i}: {v}"
                    );
                }
            }
        }
    }
}
