//! Exact graded commutative algebra over `GF(p)[x,y,z]` aimed at grade-3 ideals.

pub mod altpf;
pub mod claims;
pub mod error;
pub mod experiments;
pub mod field;
pub mod ideal;
pub mod koszul;
pub mod linalg;
pub mod poly;
pub mod tables;
pub mod tor;
pub mod trimres;
pub mod polymat;

pub use error::{Error, Result};
pub use field::Field;
pub use poly::{Monomial, Poly};
