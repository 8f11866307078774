//! Finite-difference verification of the Lie brackets
//! `[H, X+] = X+`, `[H, X-] = -X-`, `[X+, X-] = 2H`
//! for the right-action flows, in the `(x, y, theta)` chart.

use num_complex::Complex64;

use crate::group::{GroupElement, Model, SubgroupKind};

/// The three bracket identities under test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BracketPair {
    HXPlus,
    HXMinus,
    XPlusXMinus,
}

impl BracketPair {
    pub fn all() -> [BracketPair; 3] {
        [
            BracketPair::HXPlus,
            BracketPair::HXMinus,
            BracketPair::XPlusXMinus,
        ]
    }

    fn fields(&self) -> (SubgroupKind, SubgroupKind) {
        match self {
            BracketPair::HXPlus => (SubgroupKind::A, SubgroupKind::N),
            BracketPair::HXMinus => (SubgroupKind::A, SubgroupKind::Nbar),
            BracketPair::XPlusXMinus => (SubgroupKind::N, SubgroupKind::Nbar),
        }
    }

    /// The expected bracket as a signed basis flow.
    fn expected(&self) -> (SubgroupKind, f64) {
        match self {
            BracketPair::HXPlus => (SubgroupKind::N, 1.0),
            BracketPair::HXMinus => (SubgroupKind::Nbar, -1.0),
            BracketPair::XPlusXMinus => (SubgroupKind::A, 2.0),
        }
    }
}

/// Disk-model generator matrices of the one-parameter subgroups.
fn generator(kind: SubgroupKind) -> [Complex64; 4] {
    let i = Complex64::new(0.0, 1.0);
    let half = Complex64::new(0.5, 0.0);
    match kind {
        // d/dt a_t^D = (1/2) [[0, 1], [1, 0]]
        SubgroupKind::A => [Complex64::new(0.0, 0.0), half, half, Complex64::new(0.0, 0.0)],
        // d/du n_u^D = (i/2) [[1, -1], [1, -1]]
        SubgroupKind::N => [i * half, -i * half, i * half, -i * half],
        // d/dv nbar_v^D = (i/2) [[-1, -1], [1, 1]]
        SubgroupKind::Nbar => [-i * half, -i * half, i * half, i * half],
        // d/dtheta k_theta^D = (i/2) diag(1, -1)
        SubgroupKind::K => [i * half, Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0), -i * half],
    }
}

/// Closed-form chart components `(dx, dy, dtheta)` of the left-invariant
/// field generating `kind`, evaluated at `g`. With `w` the generator matrix,
/// `z' = w_01 / d^2`, and `theta'` follows from differentiating the rotation
/// part `k = T_z^{-1} g` of the frame decomposition.
pub fn field_chart(g: &GroupElement, kind: SubgroupKind) -> [f64; 3] {
    debug_assert_eq!(g.model, Model::Disk);
    let w = generator(kind);
    let z = g.base_point().value();
    let zdot = w[1] / (g.d * g.d);

    // T_z^{-1} = n [[1, -z], [-conj z, 1]], n = (1 - |z|^2)^{-1/2}
    let n = (1.0 - z.norm_sqr()).powf(-0.5);
    let ndot = n * n * n * (z.conj() * zdot).re;
    let tinv = [
        Complex64::new(n, 0.0),
        -n * z,
        -n * z.conj(),
        Complex64::new(n, 0.0),
    ];
    let tinv_dot = [
        Complex64::new(ndot, 0.0),
        -(ndot * z + n * zdot),
        -(ndot * z.conj() + n * zdot.conj()),
        Complex64::new(ndot, 0.0),
    ];

    let ge = g.entries();
    let gw = mul(&ge, &w);
    let k = mul(&tinv, &ge);
    let kdot0 = tinv_dot[0] * ge[0] + tinv_dot[1] * ge[2] + tinv[0] * gw[0] + tinv[1] * gw[2];
    let theta_dot = 2.0 * (kdot0 / k[0]).im;

    [zdot.re, zdot.im, theta_dot]
}

fn mul(x: &[Complex64; 4], y: &[Complex64; 4]) -> [Complex64; 4] {
    [
        x[0] * y[0] + x[1] * y[2],
        x[0] * y[1] + x[1] * y[3],
        x[2] * y[0] + x[3] * y[2],
        x[2] * y[1] + x[3] * y[3],
    ]
}

fn flow(g: &GroupElement, kind: SubgroupKind, t: f64) -> GroupElement {
    g.compose_unchecked(&GroupElement::subgroup_in(kind, t, Model::Disk))
}

/// Max-norm residual of one bracket identity at `g`, with the bracket formed
/// by central finite differences of the exact right-action flows:
///
/// `[V, W]^i ~ (W^i(g e^{hV}) - W^i(g e^{-hV}))/2h - (V^i(g e^{hW}) - V^i(g e^{-hW}))/2h`
///
/// compared against the expected field. The residual scales as `O(h^2)`.
pub fn bracket_residual(g: &GroupElement, pair: BracketPair, h: f64) -> f64 {
    debug_assert_eq!(g.model, Model::Disk);
    let (v, w) = pair.fields();
    let (expected_kind, factor) = pair.expected();

    let wp = field_chart(&flow(g, v, h), w);
    let wm = field_chart(&flow(g, v, -h), w);
    let vp = field_chart(&flow(g, w, h), v);
    let vm = field_chart(&flow(g, w, -h), v);
    let expected = field_chart(g, expected_kind);

    let mut res: f64 = 0.0;
    for i in 0..3 {
        let est = (wp[i] - wm[i]) / (2.0 * h) - (vp[i] - vm[i]) / (2.0 * h);
        res = res.max((est - factor * expected[i]).abs());
    }
    res
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{DiskPoint, Frame};
    use crate::numerics::stream_rng;
    use rand::Rng;
    use std::f64::consts::TAU;

    fn sample_points(n: usize) -> Vec<GroupElement> {
        let mut rng = stream_rng(31, 0);
        (0..n)
            .map(|_| {
                Frame::new(
                    DiskPoint::from_polar(rng.random_range(0.2..1.8), rng.random_range(0.0..TAU)),
                    rng.random_range(0.0..TAU),
                )
                .to_group()
            })
            .collect()
    }

    #[test]
    fn analytic_fields_match_flow_derivatives() {
        let points = sample_points(6);
        let s = 1e-5;
        for g in &points {
            for kind in [SubgroupKind::A, SubgroupKind::N, SubgroupKind::Nbar, SubgroupKind::K] {
                let analytic = field_chart(g, kind);
                let fp = flow(g, kind, s).to_frame();
                let fm = flow(g, kind, -s).to_frame();
                let fd = [
                    (fp.z.value().re - fm.z.value().re) / (2.0 * s),
                    (fp.z.value().im - fm.z.value().im) / (2.0 * s),
                    crate::numerics::angle_diff(fp.theta, fm.theta) / (2.0 * s),
                ];
                for i in 0..3 {
                    assert!(
                        (analytic[i] - fd[i]).abs() < 1e-8,
                        "{kind:?} component {i}: analytic {} vs fd {}",
                        analytic[i],
                        fd[i]
                    );
                }
            }
        }
    }

    #[test]
    fn bracket_identities_hold_with_second_order_residual() {
        let points = sample_points(8);
        for pair in BracketPair::all() {
            let res = |h: f64| -> f64 {
                points
                    .iter()
                    .map(|g| bracket_residual(g, pair, h))
                    .fold(0.0, f64::max)
            };
            let coarse = res(1e-3);
            let fine = res(1e-4);
            assert!(coarse < 1e-4, "{pair:?}: residual {coarse} at h=1e-3");
            let order = (coarse / fine).log10();
            assert!(
                order >= 1.9,
                "{pair:?}: observed order {order} (residuals {coarse} -> {fine})"
            );
        }
    }
}
