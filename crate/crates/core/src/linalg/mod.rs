//! Exact rational dense linear algebra.

pub mod echelon;
pub mod matrix;
pub mod poly;
pub mod rat;

pub use echelon::{rref_insert, solve_homogeneous, EchelonBasis};
pub use matrix::RatMatrix;
pub use poly::{min_poly, rational_roots, Poly, RationalRoots};
pub use rat::Rat;
