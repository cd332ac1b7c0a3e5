//! Exact sparse algebra: polynomials, vector fields, forms and chart maps.

pub mod chart;
pub mod field;
pub mod form;
pub mod poly;
pub mod text;

pub use chart::{chart_transform, homogenize, omega_of, ChartData};
pub use field::{divergence, lie_bracket, quasi_weight, VectorField};
pub use form::{contract, exterior_derivative, rot, AltForm};
pub use poly::{rat, LaurentPoly, Monomial, Poly};
pub use text::{parse_field, parse_poly, render_field, render_poly};
