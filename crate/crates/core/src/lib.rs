//! Alpha-spectral radii of graphs, exact characteristic polynomials of
//! `A_alpha(G) = alpha D(G) + (1 - alpha) A(G)`, and the extremal
//! unicyclic and bicyclic families of given order and diameter.
//!
//! Most fast numeric paths come with an exact or exhaustive check. Eigenvalues
//! can be confirmed against Sturm-isolated roots of exact characteristic
//! polynomials, and extremal claims against a brute-force census up to
//! isomorphism.

pub mod alpha;
pub mod canon;
pub mod charpoly;
pub mod enumeration;
pub mod error;
pub mod exec;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod lemmas;
pub mod poly;
pub mod spectral;
pub mod transforms;

pub use error::{Error, Result};
pub use graph::Graph;
pub use poly::{Rational, RationalPolynomial};
