//! Exact verification toolkit for totally geodesic subalgebras of N-graded filiform Lie algebras.
//!
//! Everything is computed over exact scalars: [`Rational`] for the classified algebras and
//! [`RadNum`] (sums of rational multiples of square roots) for the codimension-4 construction.

pub mod catalog;
pub mod error;
pub mod exactnum;
pub mod lie;
pub mod linalg;
pub mod m01;
pub mod m03;
pub mod poly;
pub mod scalar;
pub mod tgs;
pub mod verdict;

pub use error::{Error, Result};
pub use exactnum::RadNum;
pub use lie::{DegreeValue, LieAlgebra};
pub use linalg::{InnerProduct, Matrix, Subspace, Vector};
pub use scalar::{Rational, Scalar};
pub use verdict::Verdict;
