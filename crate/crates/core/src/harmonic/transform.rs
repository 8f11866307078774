use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::{BoundaryPoint, DiskPoint};
use crate::harmonic::busemann;
use crate::numerics::{composite_gl, pairwise_sum, pairwise_sum_c};

/// Geodesic-polar quadrature on a centred hyperbolic ball: composite
/// Gauss-Legendre in the radius, trapezoid in the angle, with the `sinh(rho)`
/// area factor folded into the weights.
#[derive(Debug, Clone)]
pub struct DiskQuadrature {
    pub r_support: f64,
    nodes: Vec<(DiskPoint, f64)>,
}

impl DiskQuadrature {
    pub fn new(r_support: f64, n_rho: usize, n_phi: usize) -> Self {
        let panels = (r_support.ceil() as usize).max(1);
        let per_panel = n_rho.div_ceil(panels);
        let radial = composite_gl(0.0, r_support, panels, per_panel);
        let mut nodes = Vec::with_capacity(radial.len() * n_phi);
        let dphi = TAU / n_phi as f64;
        for &(rho, w) in &radial {
            let jac = w * rho.sinh() * dphi;
            for j in 0..n_phi {
                nodes.push((DiskPoint::from_polar(rho, j as f64 * dphi), jac));
            }
        }
        DiskQuadrature { r_support, nodes }
    }

    pub fn nodes(&self) -> &[(DiskPoint, f64)] {
        &self.nodes
    }

    /// Integral against the hyperbolic area `dVol`.
    pub fn integrate<F>(&self, f: F) -> Complex64
    where
        F: Fn(DiskPoint) -> Complex64 + Sync,
    {
        let terms: Vec<Complex64> = self.nodes.iter().map(|&(z, w)| f(z) * w).collect();
        pairwise_sum_c(&terms)
    }

    pub fn integrate_real<F>(&self, f: F) -> f64
    where
        F: Fn(DiskPoint) -> f64 + Sync,
    {
        let terms: Vec<f64> = self.nodes.iter().map(|&(z, w)| f(z) * w).collect();
        pairwise_sum(&terms)
    }
}

/// Canonical spectral grid for a requested node count: unit-ish Gauss-Legendre
/// panels over `[0, r_max]`, reconstructible from `(n_r, r_max)` alone.
pub fn canonical_r_grid(n_r: usize, r_max: f64) -> Vec<(f64, f64)> {
    let panels = ((r_max / 2.0).round() as usize).max(1);
    let per_panel = n_r.div_ceil(panels);
    composite_gl(0.0, r_max, panels, per_panel)
}

/// Plancherel density `dp(r) = (r / 2 pi) tanh(pi r)`.
pub fn plancherel_density(r: f64) -> f64 {
    r / TAU * (PI * r).tanh()
}

/// Sampled non-Euclidean Fourier transform `F(b, r)` on an equispaced
/// boundary grid and a Gauss-Legendre spectral grid.
///
/// Conventions (fixed by the inversion round-trip):
/// forward exponent `(1/2 - i r)`, inversion exponent `(1/2 + i r)` against
/// `dp(r) db` with the normalised circle measure `db` of total mass 1.
#[derive(Debug, Clone)]
pub struct HelgasonTable {
    pub n_b: usize,
    pub r_max: f64,
    b_points: Vec<BoundaryPoint>,
    /// spectral nodes r_k
    r_nodes: Vec<f64>,
    /// Gauss-Legendre weight times the Plancherel density at r_k
    r_weights: Vec<f64>,
    /// row-major `[b_index][r_index]`
    values: Vec<Complex64>,
}

pub const HELGASON_CONVENTION: &str = "busemann-disk-v1-forward(1/2-ir)";

impl HelgasonTable {
    pub fn new(n_b: usize, n_r: usize, r_max: f64) -> Result<Self> {
        if !n_b.is_power_of_two() {
            return Err(Error::contract(format!(
                "boundary grid size must be a power of two, got {n_b}"
            )));
        }
        if r_max <= 0.0 || n_r == 0 {
            return Err(Error::contract("spectral grid must be nonempty"));
        }
        let grid = canonical_r_grid(n_r, r_max);
        let b_points = (0..n_b)
            .map(|i| BoundaryPoint::from_angle(TAU * i as f64 / n_b as f64))
            .collect();
        let r_nodes: Vec<f64> = grid.iter().map(|&(r, _)| r).collect();
        let r_weights: Vec<f64> = grid
            .iter()
            .map(|&(r, w)| w * plancherel_density(r))
            .collect();
        let len = n_b * r_nodes.len();
        Ok(HelgasonTable {
            n_b,
            r_max,
            b_points,
            r_nodes,
            r_weights,
            values: vec![Complex64::new(0.0, 0.0); len],
        })
    }

    pub fn n_r(&self) -> usize {
        self.r_nodes.len()
    }

    pub fn b_points(&self) -> &[BoundaryPoint] {
        &self.b_points
    }

    pub fn r_nodes(&self) -> &[f64] {
        &self.r_nodes
    }

    pub fn value(&self, b_index: usize, r_index: usize) -> Complex64 {
        self.values[b_index * self.r_nodes.len() + r_index]
    }

    pub fn set_value(&mut self, b_index: usize, r_index: usize, v: Complex64) {
        self.values[b_index * self.r_nodes.len() + r_index] = v;
    }

    /// `||F||^2` in `L^2(dp(r) db)` with the normalised circle measure.
    pub fn plancherel_norm_sq(&self) -> f64 {
        let db = 1.0 / self.n_b as f64;
        let terms: Vec<f64> = (0..self.n_b)
            .flat_map(|i| {
                let row = &self.values[i * self.r_nodes.len()..(i + 1) * self.r_nodes.len()];
                row.iter()
                    .zip(&self.r_weights)
                    .map(move |(v, w)| v.norm_sqr() * w * db)
                    .collect::<Vec<_>>()
            })
            .collect();
        pairwise_sum(&terms)
    }

    /// Structured text serialization: a header carrying the grid parameters
    /// and the sign convention, then one row per `(b_index, r_index)` entry.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str("n_b,n_r,r_max,convention\n");
        out.push_str(&format!(
            "{},{},{:.16e},{}\n",
            self.n_b,
            self.r_nodes.len(),
            self.r_max,
            HELGASON_CONVENTION
        ));
        out.push_str("b_index,r_index,re,im\n");
        for i in 0..self.n_b {
            for k in 0..self.r_nodes.len() {
                let v = self.value(i, k);
                out.push_str(&format!("{},{},{:.16e},{:.16e}\n", i, k, v.re, v.im));
            }
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let bad = |msg: &str| Error::contract(format!("helgason table parse: {msg}"));
        lines.next().ok_or_else(|| bad("missing header"))?;
        let header = lines.next().ok_or_else(|| bad("missing header values"))?;
        let fields: Vec<&str> = header.split(',').collect();
        if fields.len() != 4 {
            return Err(bad("header must have 4 fields"));
        }
        let n_b: usize = fields[0].parse().map_err(|_| bad("bad n_b"))?;
        let n_r: usize = fields[1].parse().map_err(|_| bad("bad n_r"))?;
        let r_max: f64 = fields[2].parse().map_err(|_| bad("bad r_max"))?;
        if fields[3] != HELGASON_CONVENTION {
            return Err(bad(&format!("unknown convention {}", fields[3])));
        }
        let mut table = HelgasonTable::new(n_b, n_r, r_max)?;
        if table.n_r() != n_r {
            return Err(bad("n_r is not canonical for this r_max"));
        }
        lines.next().ok_or_else(|| bad("missing column header"))?;
        for line in lines {
            if line.trim().is_empty() {
                continue;
            }
            let cols: Vec<&str> = line.split(',').collect();
            if cols.len() != 4 {
                return Err(bad("data row must have 4 fields"));
            }
            let i: usize = cols[0].parse().map_err(|_| bad("bad b_index"))?;
            let k: usize = cols[1].parse().map_err(|_| bad("bad r_index"))?;
            let re: f64 = cols[2].parse().map_err(|_| bad("bad re"))?;
            let im: f64 = cols[3].parse().map_err(|_| bad("bad im"))?;
            if i >= n_b || k >= table.n_r() {
                return Err(bad("index out of range"));
            }
            table.set_value(i, k, Complex64::new(re, im));
        }
        Ok(table)
    }
}

/// Forward transform `F(b, r) = int f(z) e^{(1/2 - i r) <z, b>} dVol(z)` of a
/// function supported in the quadrature ball.
pub fn helgason_forward<F>(
    f: F,
    disk: &DiskQuadrature,
    n_b: usize,
    n_r: usize,
    r_max: f64,
) -> Result<HelgasonTable>
where
    F: Fn(DiskPoint) -> Complex64 + Sync,
{
    // Support contract: the integrand must already be negligible on the rim.
    let mut rim_max: f64 = 0.0;
    let mut interior_max: f64 = 0.0;
    for j in 0..32 {
        let phi = TAU * j as f64 / 32.0;
        rim_max = rim_max.max(f(DiskPoint::from_polar(disk.r_support, phi)).norm());
        interior_max = interior_max.max(f(DiskPoint::from_polar(0.4 * disk.r_support, phi)).norm());
    }
    if rim_max > 1e-6 * interior_max.max(1e-300) {
        return Err(Error::SupportOverflow(format!(
            "function is not supported inside the quadrature ball: rim magnitude {rim_max:.3e}"
        )));
    }

    let mut table = HelgasonTable::new(n_b, n_r, r_max)?;
    let samples: Vec<(DiskPoint, Complex64)> = disk
        .nodes()
        .iter()
        .map(|&(z, w)| (z, f(z) * w))
        .collect();
    let n_r_actual = table.n_r();
    let r_nodes = table.r_nodes().to_vec();
    let b_points = table.b_points().to_vec();

    let rows: Vec<Vec<Complex64>> = (0..n_b)
        .into_par_iter()
        .map(|i| {
            let b = b_points[i];
            let mut row = vec![Complex64::new(0.0, 0.0); n_r_actual];
            for &(z, fw) in &samples {
                if fw.norm_sqr() == 0.0 {
                    continue;
                }
                let bus = busemann(z, b).expect("quadrature nodes are interior");
                let amp = fw * (0.5 * bus).exp();
                for (k, &r) in r_nodes.iter().enumerate() {
                    let (s, c) = (-r * bus).sin_cos();
                    row[k] += amp * Complex64::new(c, s);
                }
            }
            row
        })
        .collect();
    for (i, row) in rows.into_iter().enumerate() {
        for (k, v) in row.into_iter().enumerate() {
            table.set_value(i, k, v);
        }
    }
    Ok(table)
}

/// Pointwise inversion `f(z) = int e^{(1/2 + i r) <z, b>} F(b, r) dp(r) db`
/// with the normalised circle measure.
pub fn helgason_inverse(table: &HelgasonTable, z: DiskPoint) -> Complex64 {
    let db = 1.0 / table.n_b as f64;
    let mut terms = Vec::with_capacity(table.n_b * table.n_r());
    for (i, &b) in table.b_points().iter().enumerate() {
        let bus = busemann(z, b).expect("inversion point is interior");
        let amp = (0.5 * bus).exp();
        for (k, &r) in table.r_nodes().iter().enumerate() {
            let (s, c) = (r * bus).sin_cos();
            terms.push(table.value(i, k) * Complex64::new(c, s) * (amp * table.r_weights[k] * db));
        }
    }
    pairwise_sum_c(&terms)
}

/// `|trapezoid of e^{<z,b>} db - 2 pi|`: the change of measure between the
/// fibre angle and the boundary coordinate has total mass `2 pi`.
pub fn measure_identity_residual(z: DiskPoint, n_b: usize) -> f64 {
    let quad: f64 = (0..n_b)
        .map(|i| {
            let b = BoundaryPoint::from_angle(TAU * i as f64 / n_b as f64);
            busemann(z, b).unwrap().exp() * TAU / n_b as f64
        })
        .sum();
    (quad - TAU).abs()
}

/// Plancherel comparison for a transformed function: `||f||^2_{L^2(dVol)}`
/// computed on the disk quadrature.
pub fn plancherel_symbol_norm<F>(f: F, disk: &DiskQuadrature) -> f64
where
    F: Fn(DiskPoint) -> Complex64 + Sync,
{
    disk.integrate_real(|z| f(z).norm_sqr())
}
