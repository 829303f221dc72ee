//! Exact linear algebra over GF(2) with bit-packed storage.

mod matrix;
mod symmetric;
pub mod text;
mod vector;

pub use matrix::{Echelon, Gf2Matrix, RowBasis};
pub(crate) use matrix::check_permutation;
pub use symmetric::{upper_bits, SymmetricMatrix};
pub use vector::{Gf2Vector, Parity};
