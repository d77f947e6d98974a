//! Exact construction of the graded Lie algebras attached to pentads of
//! Cartan type `P(r, n; A, D, Γ)`.
//!
//! The core is generic over an exact [`Scalar`] field. The aliases below fix
//! the field to arbitrary-precision rationals, which is what the CLI and the
//! spec-file formats use.
//!
//! ```
//! use cartan_pentads::{QMatrix, QPentad};
//!
//! // sl3 as P(2, 2; (1/3)(2 1; 1 2), (2 -1; -1 2), I)
//! let a = QMatrix::from_ints(&[&[2, 1], &[1, 2]]).scale(&cartan_pentads::rational(1, 3));
//! let d = QMatrix::from_ints(&[&[2, -1], &[-1, 2]]);
//! let p = QPentad::new(a, d, QMatrix::identity(2)).unwrap();
//! assert_eq!(p.cartan_matrix().matrix, QMatrix::from_ints(&[&[2, -1], &[-1, 2]]));
//!
//! let alg = cartan_pentads::GradedAlgebra::build(&p, 4).unwrap();
//! assert_eq!(alg.structure_report().unwrap().total_dim, Some(8));
//! ```

pub mod constructions;
pub mod engine;
pub mod error;
pub mod fixtures;
pub mod linalg;
pub mod modules;
pub mod pentad;
pub mod scalar;
pub mod spec_io;

pub use constructions::FiniteCartanData;
pub use engine::{GradedAlgebra, Sampling, StructureReport, DEFAULT_DEGREE_CAP, DEFAULT_MAX_DEGREE};
pub use error::{Error, Result};
pub use linalg::Matrix;
pub use modules::{Direction, GradedModule};
pub use pentad::{CartanMatrix, Pentad, PentadReport};
pub use scalar::Scalar;

/// Arbitrary-precision rational numbers.
pub type Rational = num_rational::BigRational;
pub type QMatrix = Matrix<Rational>;
pub type QPentad = Pentad<Rational>;
pub type QCartanMatrix = CartanMatrix<Rational>;
pub type QGradedAlgebra = GradedAlgebra<Rational>;
pub type QGradedModule = GradedModule<Rational>;
pub type QFiniteCartanData = FiniteCartanData<Rational>;

/// `p / q` as a [`Rational`]. Panics when `q = 0`.
pub fn rational(p: i64, q: i64) -> Rational {
    Rational::new(p.into(), q.into())
}
