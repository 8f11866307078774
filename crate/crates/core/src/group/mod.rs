//! Exact matrix model of `G = PSL(2,R) ~ PSU(1,1)`, identified with the unit
//! tangent bundle of the hyperbolic plane. All dynamics and quadrature run in
//! the disk model; the Cayley transform is the single conversion point.

mod algebra;
mod bracket;
mod chart;
mod element;
mod point;
mod sample;

pub use algebra::{frame_coefficients, AlgebraCoefficients};
pub use bracket::{bracket_residual, BracketPair};
pub use chart::{Frame, HoroCoord};
pub use element::{cayley_point, cayley_point_inverse, GroupElement, Model, SubgroupKind};
pub use point::{distance_from_origin_sq, hyperbolic_distance, BoundaryPoint, DiskPoint};
pub use sample::{haar_sample, hyperbolic_ball_area, HaarSampleStats};
