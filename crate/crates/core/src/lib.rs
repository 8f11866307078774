//! Numerical laboratory for the unit tangent bundle of the hyperbolic plane
//! and its compact quotients.
//!
//! The crate is organised around the identification of `S*H^2` with the
//! matrix group `G = PSL(2,R) ~ PSU(1,1)`:
//!
//! * [`group`] — exact matrix model of `G`, Mobius actions, the Cayley
//!   transform, the `(z, theta)` and `(z, b)` charts, hyperbolic distance and
//!   Haar sampling.
//! * [`harmonic`] — Busemann function, Poisson kernel, hyperbolic plane
//!   waves, a stencil Laplace-Beltrami operator, and the non-Euclidean
//!   (Helgason) Fourier transform with inversion and Plancherel checks.
//! * [`quant`] — symbols `a(z, b, r)` and their exact quantization `Op(a)`,
//!   symbol-action and group-commutation residuals, geodesic pullback of
//!   symbols, and kernel periodization over a discrete group.
//! * [`surface`] — the genus-2 Bolza quotient: group balls, Dirichlet-domain
//!   reduction, truncated Poincare observables and Haar sampling on the
//!   quotient.
//! * [`dynamics`] — closed-form flows, Lyapunov exponents, Monte-Carlo
//!   correlation series and exponential-envelope fitting.
//! * [`trace`] — spectral records, boundary-distribution evaluation, the
//!   trace pairing, time-evolved trace series and the summability budget.
//! * [`experiments`] — canonical experiment recipes used by the CLI driver
//!   and the acceptance suite.

pub mod dynamics;
pub mod error;
pub mod experiments;
pub mod group;
pub mod harmonic;
pub mod numerics;
pub mod quant;
pub mod surface;
pub mod trace;

pub use error::{Error, Result};
pub use group::{BoundaryPoint, DiskPoint, Frame, GroupElement, HoroCoord, Model};
