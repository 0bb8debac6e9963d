//! Müntz spaces `E_λ(n)` through Schur functions: blossoms, Bernstein bases,
//! de Casteljau paths, dimension elevation and curve geometry, all in exact
//! rational arithmetic by default.

pub mod bernstein;
pub mod blossom;
pub mod casteljau;
pub mod error;
pub mod geometry;
pub mod linalg;
pub mod partition;
pub mod poly;
pub mod rational;
pub mod scalar;
pub mod space;
pub mod symfunc;

pub use error::{Error, Result};
pub use partition::Partition;
pub use scalar::Scalar;
pub use symfunc::ArgMultiset;
pub use space::MuntzSpace;
pub use poly::SparsePolynomial;
pub use bernstein::BernsteinBasis;
pub use geometry::{MuntzCurve, TensorSurface};

pub type Rational = num_rational::BigRational;
pub type ExactArgs = ArgMultiset<Rational>;
pub type ExactPolynomial = SparsePolynomial<Rational>;
pub type ExactBasis = BernsteinBasis<Rational>;
pub type ExactCurve = MuntzCurve<Rational>;
pub type ExactSurface = TensorSurface<Rational>;
pub type FloatCurve = MuntzCurve<f64>;
pub type FloatBasis = BernsteinBasis<f64>;
