//! The compact quotient: Fuchsian group machinery for the genus-2 Bolza
//! surface, Dirichlet-domain reduction, Gamma-invariant observables built as
//! truncated Poincare series, and Haar sampling on the quotient.

mod fuchsian;
mod observable;
mod sample;

pub use fuchsian::{bolza_group, FuchsianGroup, Reduction, BOLZA_SYSTOLE};
pub use observable::{poincare_observable, smooth_bump, Observable};
pub use sample::{sample_surface, sample_surface_with_stats, SurfaceSampleStats};
