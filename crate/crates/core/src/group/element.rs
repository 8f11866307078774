use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::wrap_angle;

/// Which model of the hyperbolic plane a matrix acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Model {
    /// `PSL(2,R)` acting on `{Im z > 0}`.
    UpperHalfPlane,
    /// `PSU(1,1)` acting on `{|z| < 1}`.
    Disk,
}

/// One-parameter subgroups of `G`: geodesic, stable horocyclic, unstable
/// horocyclic and fibre rotation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubgroupKind {
    A,
    N,
    Nbar,
    K,
}

/// A unit-determinant 2x2 complex matrix together with its model tag.
/// Elements are projective: `g` and `-g` compare equal.
#[derive(Debug, Clone, Copy)]
pub struct GroupElement {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
    pub model: Model,
}

const I: Complex64 = Complex64::new(0.0, 1.0);

// Cayley transform z -> (z - i)/(z + i), normalized to det 1, and its
// inverse. These intertwine the two models: g_disk = C g_hp C^{-1}.
fn cayley_matrix() -> [Complex64; 4] {
    // [[1, -i], [1, i]] / (1 + i), with (1+i)^2 = 2i.
    let s = Complex64::new(1.0, 1.0);
    [1.0 / s, -I / s, 1.0 / s, I / s]
}

fn cayley_inverse_matrix() -> [Complex64; 4] {
    // [[i, i], [-1, 1]] * (1 - i)/2
    let s = Complex64::new(0.5, -0.5);
    [I * s, I * s, -s, s]
}

fn mat_mul(x: &[Complex64; 4], y: &[Complex64; 4]) -> [Complex64; 4] {
    [
        x[0] * y[0] + x[1] * y[2],
        x[0] * y[1] + x[1] * y[3],
        x[2] * y[0] + x[3] * y[2],
        x[2] * y[1] + x[3] * y[3],
    ]
}

impl GroupElement {
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64, model: Model) -> Self {
        GroupElement { a, b, c, d, model }.renormalized()
    }

    pub fn identity(model: Model) -> Self {
        GroupElement {
            a: Complex64::new(1.0, 0.0),
            b: Complex64::new(0.0, 0.0),
            c: Complex64::new(0.0, 0.0),
            d: Complex64::new(1.0, 0.0),
            model,
        }
    }

    pub fn det(&self) -> Complex64 {
        self.a * self.d - self.b * self.c
    }

    /// Divide by a square root of the determinant so `|det - 1| <= 1e-12`
    /// holds after every composition.
    pub fn renormalized(&self) -> Self {
        let det = self.det();
        let s = det.sqrt();
        GroupElement {
            a: self.a / s,
            b: self.b / s,
            c: self.c / s,
            d: self.d / s,
            model: self.model,
        }
    }

    pub fn entries(&self) -> [Complex64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn compose(&self, other: &GroupElement) -> Result<GroupElement> {
        if self.model != other.model {
            return Err(Error::ModelMismatch(self.model, other.model));
        }
        Ok(self.compose_unchecked(other))
    }

    /// Matrix product without the model check, for hot loops where both
    /// operands are known to share a model.
    pub fn compose_unchecked(&self, other: &GroupElement) -> GroupElement {
        let m = mat_mul(&self.entries(), &other.entries());
        GroupElement {
            a: m[0],
            b: m[1],
            c: m[2],
            d: m[3],
            model: self.model,
        }
        .renormalized()
    }

    pub fn invert(&self) -> GroupElement {
        GroupElement {
            a: self.d,
            b: -self.b,
            c: -self.c,
            d: self.a,
            model: self.model,
        }
        .renormalized()
    }

    /// Entrywise max-norm distance in the projective quotient: the smaller of
    /// the distances to `other` and to `-other`.
    pub fn projective_distance(&self, other: &GroupElement) -> f64 {
        let mut plus: f64 = 0.0;
        let mut minus: f64 = 0.0;
        for (x, y) in self.entries().iter().zip(other.entries().iter()) {
            plus = plus.max((x - y).norm());
            minus = minus.max((x + y).norm());
        }
        plus.min(minus)
    }

    pub fn is_identity(&self, tol: f64) -> bool {
        self.projective_distance(&GroupElement::identity(self.model)) <= tol
    }

    /// Residual of the SU(1,1) shape `[[alpha, beta], [conj(beta), conj(alpha)]]`
    /// with `|alpha|^2 - |beta|^2 = 1`. Zero (to roundoff) for disk-model
    /// elements; meaningless for half-plane ones.
    pub fn su11_defect(&self) -> f64 {
        let shape = (self.d - self.a.conj())
            .norm()
            .max((self.c - self.b.conj()).norm());
        let unit = (self.a.norm_sqr() - self.b.norm_sqr() - 1.0).abs();
        // Projective ambiguity: -g has the same shape.
        let shape_neg = (self.d + self.a.conj())
            .norm()
            .max((self.c + self.b.conj()).norm());
        shape.min(shape_neg).max(unit)
    }

    /// The displayed one-parameter matrices a_t, n_u, nbar_v, k_theta in the
    /// half-plane model.
    pub fn subgroup(kind: SubgroupKind, param: f64) -> GroupElement {
        let z = |x: f64| Complex64::new(x, 0.0);
        let (a, b, c, d) = match kind {
            SubgroupKind::A => (z((param / 2.0).exp()), z(0.0), z(0.0), z((-param / 2.0).exp())),
            SubgroupKind::N => (z(1.0), z(param), z(0.0), z(1.0)),
            SubgroupKind::Nbar => (z(1.0), z(0.0), z(param), z(1.0)),
            SubgroupKind::K => {
                let (s, c2) = (param / 2.0).sin_cos();
                (z(c2), z(s), z(-s), z(c2))
            }
        };
        GroupElement {
            a,
            b,
            c,
            d,
            model: Model::UpperHalfPlane,
        }
    }

    /// One-parameter subgroup elements in a chosen model. The disk forms are
    /// the Cayley conjugates of the half-plane matrices, in closed form:
    ///
    /// * `a_t   -> [[cosh(t/2), sinh(t/2)], [sinh(t/2), cosh(t/2)]]`
    /// * `n_u   -> I + u/2 * [[i, -i], [i, -i]]`
    /// * `nbar_v-> I + v/2 * [[-i, -i], [i, i]]`
    /// * `k_th  -> diag(e^{i th/2}, e^{-i th/2})`
    pub fn subgroup_in(kind: SubgroupKind, param: f64, model: Model) -> GroupElement {
        match model {
            Model::UpperHalfPlane => GroupElement::subgroup(kind, param),
            Model::Disk => {
                let zero = Complex64::new(0.0, 0.0);
                let one = Complex64::new(1.0, 0.0);
                let (a, b, c, d) = match kind {
                    SubgroupKind::A => {
                        let ch = Complex64::new((param / 2.0).cosh(), 0.0);
                        let sh = Complex64::new((param / 2.0).sinh(), 0.0);
                        (ch, sh, sh, ch)
                    }
                    SubgroupKind::N => {
                        let h = Complex64::new(0.0, param / 2.0);
                        (one + h, -h, h, one - h)
                    }
                    SubgroupKind::Nbar => {
                        let h = Complex64::new(0.0, param / 2.0);
                        (one - h, -h, h, one + h)
                    }
                    SubgroupKind::K => {
                        let e = Complex64::from_polar(1.0, param / 2.0);
                        (e, zero, zero, e.conj())
                    }
                };
                GroupElement { a, b, c, d, model: Model::Disk }
            }
        }
    }

    /// Convert between the two models by conjugating with the Cayley matrix.
    pub fn to_model(&self, model: Model) -> GroupElement {
        if self.model == model {
            return *self;
        }
        let m = self.entries();
        let conv = match model {
            Model::Disk => mat_mul(&mat_mul(&cayley_matrix(), &m), &cayley_inverse_matrix()),
            Model::UpperHalfPlane => {
                mat_mul(&mat_mul(&cayley_inverse_matrix(), &m), &cayley_matrix())
            }
        };
        GroupElement {
            a: conv[0],
            b: conv[1],
            c: conv[2],
            d: conv[3],
            model,
        }
        .renormalized()
    }

    /// Fractional linear action on a raw complex point of the matching model.
    /// Infinite input maps to `a/c`; a vanishing denominator maps to the
    /// designated point at infinity (`infinity` in the half-plane model, and
    /// its Cayley image `1` on the disk boundary).
    pub fn apply_complex(&self, z: Complex64) -> Complex64 {
        if !(z.re.is_finite() && z.im.is_finite()) {
            if self.c.norm() < 1e-300 {
                return match self.model {
                    Model::UpperHalfPlane => Complex64::new(f64::INFINITY, 0.0),
                    Model::Disk => Complex64::new(1.0, 0.0),
                };
            }
            return self.a / self.c;
        }
        let den = self.c * z + self.d;
        if den.norm() < 1e-300 {
            return match self.model {
                Model::UpperHalfPlane => Complex64::new(f64::INFINITY, 0.0),
                Model::Disk => Complex64::new(1.0, 0.0),
            };
        }
        (self.a * z + self.b) / den
    }

    /// The rotation angle theta in `[0, 2*pi)` of a disk-model element fixing
    /// the origin. Computed from `alpha^2`, which is blind to the projective
    /// sign.
    pub(crate) fn rotation_angle(&self) -> f64 {
        wrap_angle((self.a * self.a).arg())
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{:.6}{:+.6}i, {:.6}{:+.6}i], [{:.6}{:+.6}i, {:.6}{:+.6}i]] ({:?})",
            self.a.re, self.a.im, self.b.re, self.b.im, self.c.re, self.c.im, self.d.re,
            self.d.im, self.model
        )
    }
}

/// The Cayley transform as a point map, `z -> (z - i)/(z + i)`, sending the
/// upper half-plane onto the disk and `infinity` to `1`.
pub fn cayley_point(z: Complex64) -> Complex64 {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Complex64::new(1.0, 0.0);
    }
    (z - I) / (z + I)
}

/// Inverse Cayley point map, `w -> i (1 + w)/(1 - w)`, sending `1` to the
/// point at infinity.
pub fn cayley_point_inverse(w: Complex64) -> Complex64 {
    let den = Complex64::new(1.0, 0.0) - w;
    if den.norm() < 1e-300 {
        return Complex64::new(f64::INFINITY, 0.0);
    }
    I * (Complex64::new(1.0, 0.0) + w) / den
}

/// Angle helper used by chart code: theta of `k_theta` with `k_0 = k_{2 pi}`
/// in the projective quotient.
pub(crate) fn theta_mod_2pi(theta: f64) -> f64 {
    let t = wrap_angle(theta);
    if (t - 2.0 * PI).abs() < 1e-15 {
        0.0
    } else {
        t
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(x: Complex64, y: Complex64, tol: f64) -> bool {
        (x - y).norm() <= tol
    }

    #[test]
    fn compose_with_identity_and_inverse() {
        let g = GroupElement::subgroup(SubgroupKind::N, 0.7)
            .compose(&GroupElement::subgroup(SubgroupKind::A, -0.3))
            .unwrap();
        let id = GroupElement::identity(Model::UpperHalfPlane);
        assert!(g.compose(&id).unwrap().projective_distance(&g) < 1e-15);
        assert!(g.compose(&g.invert()).unwrap().is_identity(1e-12));
    }

    #[test]
    fn compose_rejects_model_mismatch() {
        let g = GroupElement::identity(Model::UpperHalfPlane);
        let h = GroupElement::identity(Model::Disk);
        assert!(matches!(g.compose(&h), Err(Error::ModelMismatch(_, _))));
    }

    #[test]
    fn composition_is_associative() {
        let g1 = GroupElement::subgroup(SubgroupKind::N, 1.3);
        let g2 = GroupElement::subgroup(SubgroupKind::A, 0.9);
        let g3 = GroupElement::subgroup(SubgroupKind::K, 2.1);
        let left = g1.compose(&g2).unwrap().compose(&g3).unwrap();
        let right = g1.compose(&g2.compose(&g3).unwrap()).unwrap();
        assert!(left.projective_distance(&right) < 1e-12);
    }

    #[test]
    fn conjugation_identity_n1_a_ln2() {
        // n_1 a_{ln 2} = a_{ln 2} n_{1/2}, entrywise.
        let lhs = GroupElement::subgroup(SubgroupKind::N, 1.0)
            .compose(&GroupElement::subgroup(SubgroupKind::A, 2.0f64.ln()))
            .unwrap();
        let rhs = GroupElement::subgroup(SubgroupKind::A, 2.0f64.ln())
            .compose(&GroupElement::subgroup(SubgroupKind::N, 0.5))
            .unwrap();
        for (x, y) in lhs.entries().iter().zip(rhs.entries().iter()) {
            assert!(close(*x, *y, 1e-14));
        }
    }

    #[test]
    fn subgroup_one_parameter_property() {
        for kind in [SubgroupKind::A, SubgroupKind::N, SubgroupKind::Nbar, SubgroupKind::K] {
            for model in [Model::UpperHalfPlane, Model::Disk] {
                let s = 0.37;
                let t = -1.12;
                let combined = GroupElement::subgroup_in(kind, s + t, model);
                let product = GroupElement::subgroup_in(kind, s, model)
                    .compose(&GroupElement::subgroup_in(kind, t, model))
                    .unwrap();
                assert!(
                    combined.projective_distance(&product) < 1e-12,
                    "{kind:?} {model:?}"
                );
            }
        }
    }

    #[test]
    fn subgroup_special_values() {
        assert!(GroupElement::subgroup(SubgroupKind::A, 0.0).is_identity(0.0));
        // k_{2 pi} = k_0 in the projective quotient
        assert!(GroupElement::subgroup(SubgroupKind::K, 2.0 * PI).is_identity(1e-12));
        let a = GroupElement::subgroup(SubgroupKind::A, 4.0f64.ln());
        assert!(close(a.a, Complex64::new(2.0, 0.0), 1e-15));
        assert!(close(a.d, Complex64::new(0.5, 0.0), 1e-15));
    }

    #[test]
    fn disk_subgroup_forms_match_cayley_conjugation() {
        for kind in [SubgroupKind::A, SubgroupKind::N, SubgroupKind::Nbar, SubgroupKind::K] {
            let t = 0.83;
            let closed = GroupElement::subgroup_in(kind, t, Model::Disk);
            let conjugated = GroupElement::subgroup(kind, t).to_model(Model::Disk);
            assert!(
                closed.projective_distance(&conjugated) < 1e-14,
                "{kind:?}: {closed} vs {conjugated}"
            );
            assert!(closed.su11_defect() < 1e-14);
        }
    }

    #[test]
    fn cayley_sends_i_to_origin() {
        assert!(cayley_point(Complex64::new(0.0, 1.0)).norm() < 1e-15);
        let inf = Complex64::new(f64::INFINITY, 0.0);
        assert!(close(cayley_point(inf), Complex64::new(1.0, 0.0), 0.0));
        let z = Complex64::new(0.3, 1.7);
        assert!(close(cayley_point_inverse(cayley_point(z)), z, 1e-14));
    }

    #[test]
    fn model_round_trip() {
        let g = GroupElement::subgroup(SubgroupKind::Nbar, 0.6)
            .compose(&GroupElement::subgroup(SubgroupKind::K, 1.1))
            .unwrap();
        let back = g.to_model(Model::Disk).to_model(Model::UpperHalfPlane);
        assert!(g.projective_distance(&back) < 1e-13);
    }
}
