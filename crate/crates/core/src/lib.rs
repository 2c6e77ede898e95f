//! Exact computations with planar rook algebras and the tensor powers of the
//! natural representations of `gl(1|1)` and `U_q(gl(1|1))`.
//!
//! The combinatorial and algebraic layers are generic over a coefficient
//! [`Ring`]; elimination-based routines need an exact [`Field`]. The aliases
//! below fix the coefficient types used by the verification routines.

pub mod bounds;
pub mod diagram;
pub mod error;
pub mod gl11;
pub mod hecke;
pub mod laurent;
pub mod linalg;
pub mod report;
pub mod rook_algebra;
pub mod scalar;
pub mod sparse;
pub mod suites;
pub mod tensor;
pub mod uq;

pub use diagram::{enumerate_planar, PlanarRookDiagram, RookDiagram, Subset};
pub use error::{Error, Result};
pub use laurent::{q_integer, LaurentPoly};
pub use report::{ClaimReport, Status, VerificationReport};
pub use rook_algebra::AlgebraElement;
pub use scalar::{Field, JsonScalar, Ring};
pub use sparse::{SparseMatrix, SparseVector};
pub use tensor::TensorVector;

/// Exact rationals.
pub type Rational = num_rational::BigRational;
/// Laurent polynomials in `q` with rational coefficients.
pub type QPoly = LaurentPoly<Rational>;
pub type RationalMatrix = SparseMatrix<Rational>;
pub type QMatrix = SparseMatrix<QPoly>;
pub type RationalElement = AlgebraElement<Rational>;
pub type RationalTensor = TensorVector<Rational>;
pub type QTensor = TensorVector<QPoly>;
