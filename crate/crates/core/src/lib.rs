//! Exact-arithmetic nonabelian Fourier pairings for groups presented by
//! finite data, plus the Hecke-module and Clifford-algebra verifications
//! built on the same scalar field.

pub mod clifford;
pub mod families;
pub mod groups;
pub mod hecke;
pub mod heis;
pub mod mat;
pub mod pairing;
pub mod poly;
pub mod report;
pub mod ring;
pub mod scalar;

pub use ring::{Conj, Field, Ring};

/// The exact scalar field used throughout: the cyclotomic field generated by
/// a primitive 24th root of unity, which contains i, sqrt(2) and the cube
/// roots of unity needed by the tabulated data.
pub type Scalar = scalar::Scalar;

/// Polynomials in t (with q = t^2) over the scalar field.
pub type Poly = poly::Polynomial<Scalar>;

/// Matrices with exact scalar entries.
pub type ScalarMat = mat::Mat<Scalar>;

/// Matrices with polynomial entries, as used for Hecke generator actions.
pub type PolyMat = mat::Mat<Poly>;
