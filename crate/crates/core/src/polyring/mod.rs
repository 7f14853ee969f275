//! Multivariate polynomial arithmetic, homogeneous plane curves,
//! resultants, and linear systems of curve conditions.

mod curve;
mod intersect;
mod linsys;
mod poly;
mod resultant;

pub use curve::{PlaneCurve, ProjPoint};
pub use intersect::{
    intersection_multiplicity, local_equation_at, local_intersection, local_vars, multiplicity_at,
};
pub use linsys::{
    kernel_basis, monomials_of_degree, solve_curve_conditions, ChartFrame, LinearCondition,
    LocalProbe,
};
pub use poly::{base_field_roots, gcd_few_vars, Poly, PolyError};
pub use resultant::resultant;
