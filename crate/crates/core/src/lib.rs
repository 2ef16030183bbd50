//! Bigraded dimensions of the linearized Kashiwara-Vergne Lie algebra.
//!
//! The algebra modules are generic over [`scalar::Coeff`]; the aliases below
//! fix the two coefficient domains used in practice.

pub mod error;
pub mod scalar;
pub mod words;

mod arith;

pub mod algebra;
pub mod bk;
pub mod bounds;
pub mod lie;
pub mod modmat;
pub mod reference;
pub mod selftest;

pub use error::{Error, Result};
pub use num_rational::BigRational;

pub use bk::QSeries;

/// Exact rational coefficients.
pub type Q = BigRational;
/// Polynomials in linear words over the rationals.
pub type QAssocPoly = algebra::AssocPoly<Q>;
/// Polynomials in cyclic words over the rationals.
pub type QPoly = algebra::CyclicPoly<Q>;
/// Polynomials in linear words mod p.
pub type ZpAssocPoly = algebra::AssocPoly<scalar::Zp>;
/// Polynomials in cyclic words mod p.
pub type ZpPoly = algebra::CyclicPoly<scalar::Zp>;
/// Special derivations over the rationals.
pub type QSpecialPair = lie::SpecialPair<Q>;
