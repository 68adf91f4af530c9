//! Exact dense linear algebra over Q and Z: the computational substrate
//! for every other module. No floating point anywhere.

mod matrix;
mod scalar;

pub use matrix::{hermite_rows, kronecker, solve_in_span, ExactMatrix, SmithDecomposition};
pub use scalar::{parse_rational, Ring, Scalar};
