//! Harmonic analysis on the hyperbolic disk: Busemann function, Poisson
//! kernel, plane waves, a stencil Laplace-Beltrami operator, and the
//! non-Euclidean Fourier transform with its inversion and Plancherel
//! identities.

mod busemann;
mod laplace;
mod transform;

pub use busemann::{busemann, plane_wave, poisson_kernel, PlaneWaveParam};
pub use laplace::laplace_apply;
pub use transform::{
    helgason_forward, helgason_inverse, measure_identity_residual, plancherel_symbol_norm,
    DiskQuadrature, HelgasonTable,
};
