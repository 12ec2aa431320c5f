//! Exact computation of sums of local topological degrees of polynomial maps
//! away from an excluded zero set, and of Whitney intersection numbers of
//! polynomial immersions `M^m -> R^{2m}` of algebraic complete intersections.
//!
//! The pipeline is: ideal quotient `S = J:I` ([`groebner`]), the finite
//! dimensional algebra `A = Q[x]/S` ([`algebra`]), the Bezoutian element of
//! `A (x) A` and its trace functional ([`bezoutian`]), symmetric bilinear
//! forms and their exact signatures ([`forms`]), and the end-to-end degree and
//! immersion formulas ([`degree`]). [`oracle`] is a floating point witness
//! used for cross-checking only.

pub mod algebra;
pub mod bezoutian;
pub mod degree;
pub mod error;
pub mod forms;
pub mod groebner;
pub mod linalg;
pub mod oracle;
pub mod polyring;

pub use error::{Error, ErrorClass, Result};
