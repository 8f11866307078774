//! Shared numerical infrastructure: deterministic summation, Gauss-Legendre
//! rules, smooth cutoffs and counter-based random streams.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Wrap an angle into `[0, 2*pi)`.
pub fn wrap_angle(theta: f64) -> f64 {
    let two_pi = 2.0 * PI;
    let mut t = theta % two_pi;
    if t < 0.0 {
        t += two_pi;
    }
    if t >= two_pi {
        t -= two_pi;
    }
    t
}

/// Signed difference `a - b` of two angles, reduced to `(-pi, pi]`.
pub fn angle_diff(a: f64, b: f64) -> f64 {
    let mut d = (a - b) % (2.0 * PI);
    if d > PI {
        d -= 2.0 * PI;
    }
    if d <= -PI {
        d += 2.0 * PI;
    }
    d
}

/// Deterministic pairwise summation. The grouping depends only on the index
/// range, never on thread scheduling, so results are bit-stable.
pub fn pairwise_sum(values: &[f64]) -> f64 {
    match values.len() {
        0 => 0.0,
        1 => values[0],
        2 => values[0] + values[1],
        n => {
            let mid = n / 2;
            pairwise_sum(&values[..mid]) + pairwise_sum(&values[mid..])
        }
    }
}

/// Pairwise summation for complex values; same fixed grouping as
/// [`pairwise_sum`].
pub fn pairwise_sum_c(values: &[Complex64]) -> Complex64 {
    match values.len() {
        0 => Complex64::new(0.0, 0.0),
        1 => values[0],
        2 => values[0] + values[1],
        n => {
            let mid = n / 2;
            pairwise_sum_c(&values[..mid]) + pairwise_sum_c(&values[mid..])
        }
    }
}

/// Mean and standard error of the mean for a complex sample, accumulated with
/// the deterministic pairwise order. The standard error combines the real and
/// imaginary sample variances.
pub fn mean_and_stderr(values: &[Complex64]) -> (Complex64, f64) {
    let n = values.len();
    assert!(n > 1, "need at least two samples");
    let mean = pairwise_sum_c(values) / n as f64;
    let sq: Vec<f64> = values.iter().map(|v| (v - mean).norm_sqr()).collect();
    let var = pairwise_sum(&sq) / (n as f64 - 1.0);
    (mean, (var / n as f64).sqrt())
}

/// A deterministic stream for sample `stream` of experiment `seed`. Parallel
/// partitioning cannot reorder draws because every index owns its stream.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Stable 64-bit mix of a label into a stream id, for per-record seeding that
/// does not depend on record order.
pub fn stream_label(tag: &str) -> u64 {
    // FNV-1a
    let mut h: u64 = 0xcbf29ce484222325;
    for byte in tag.as_bytes() {
        h ^= *byte as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

/// Gauss-Legendre nodes and weights on `[-1, 1]`, by Newton iteration on the
/// Legendre recurrence.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussLegendre {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1);
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let m = n.div_ceil(2);
        for i in 0..m {
            // Chebyshev-based initial guess.
            let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_and_derivative(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-15 {
                    break;
                }
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        GaussLegendre { nodes, weights }
    }

    /// Nodes and weights mapped to `[a, b]`.
    pub fn on_interval(&self, a: f64, b: f64) -> Vec<(f64, f64)> {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| (mid + half * x, half * w))
            .collect()
    }
}

fn legendre_and_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Composite Gauss-Legendre rule: `panels` equal panels over `[a, b]`,
/// `per_panel` nodes each.
pub fn composite_gl(a: f64, b: f64, panels: usize, per_panel: usize) -> Vec<(f64, f64)> {
    let rule = GaussLegendre::new(per_panel);
    let mut out = Vec::with_capacity(panels * per_panel);
    let width = (b - a) / panels as f64;
    for p in 0..panels {
        let lo = a + p as f64 * width;
        out.extend(rule.on_interval(lo, lo + width));
    }
    out
}

/// `C^inf` transition equal to 1 on `(-inf, lo]` and 0 on `[hi, inf)`.
pub fn smooth_cutoff(x: f64, lo: f64, hi: f64) -> f64 {
    debug_assert!(hi > lo);
    if x <= lo {
        return 1.0;
    }
    if x >= hi {
        return 0.0;
    }
    let s = (x - lo) / (hi - lo);
    let a = (-1.0 / s).exp();
    let b = (-1.0 / (1.0 - s)).exp();
    b / (a + b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_legendre_integrates_polynomials_exactly() {
        // degree 2n-1 exactness
        let gl = GaussLegendre::new(6);
        let int: f64 = gl
            .on_interval(0.0, 1.0)
            .iter()
            .map(|(x, w)| w * x.powi(11))
            .sum();
        assert!((int - 1.0 / 12.0).abs() < 1e-14, "got {int}");
    }

    #[test]
    fn gauss_legendre_weights_sum_to_length() {
        for n in [1, 2, 5, 16, 41] {
            let gl = GaussLegendre::new(n);
            let s: f64 = gl.weights.iter().sum();
            assert!((s - 2.0).abs() < 1e-12);
        }
    }

    #[test]
    fn composite_rule_handles_oscillatory_integrand() {
        let rule = composite_gl(0.0, 10.0, 10, 12);
        let int: f64 = rule.iter().map(|(x, w)| w * (3.0 * x).sin()).sum();
        let exact = (1.0 - (30.0f64).cos()) / 3.0;
        assert!((int - exact).abs() < 1e-12);
    }

    #[test]
    fn pairwise_sum_is_order_of_magnitude_exact() {
        let values: Vec<f64> = (0..1000).map(|i| (i as f64).sin()).collect();
        let a = pairwise_sum(&values);
        let b: f64 = values.iter().sum();
        assert!((a - b).abs() < 1e-10);
    }

    #[test]
    fn stream_rng_is_deterministic_per_index() {
        use rand::Rng;
        let draws1: Vec<f64> = (0..5)
            .map(|i| stream_rng(42, i).random_range(0.0..1.0))
            .collect();
        let draws2: Vec<f64> = (0..5)
            .map(|i| stream_rng(42, i).random_range(0.0..1.0))
            .collect();
        assert_eq!(draws1, draws2);
        assert_ne!(draws1[0], draws1[1]);
    }

    #[test]
    fn angle_diff_handles_wraparound() {
        assert!((angle_diff(0.1, 2.0 * PI - 0.1) - 0.2).abs() < 1e-14);
        assert!((angle_diff(2.0 * PI - 0.1, 0.1) + 0.2).abs() < 1e-14);
    }

    #[test]
    fn smooth_cutoff_is_monotone_with_flat_tails() {
        assert_eq!(smooth_cutoff(-1.0, 0.0, 1.0), 1.0);
        assert_eq!(smooth_cutoff(2.0, 0.0, 1.0), 0.0);
        let mut prev = 1.0;
        for i in 1..100 {
            let v = smooth_cutoff(i as f64 / 100.0, 0.0, 1.0);
            assert!(v <= prev + 1e-15);
            prev = v;
        }
    }
}
