//! Binary frames over Z_2^d.
//!
//! A frame is a spanning sequence of vectors in Z_2^d. This crate provides
//!
//! - bit-packed GF(2) linear algebra ([`gf2`]),
//! - frame operators, natural duals and the full space of duals ([`frame`]),
//! - dual pairs and Parseval frames with prescribed dot products ([`dual`]),
//! - minimal symmetric factorization `S = A A*` over GF(2) ([`symfactor`]),
//! - frames with a prescribed frame operator and prescribed vector parities
//!   ([`synthesis`]),
//! - attainability catalogs, from the theory and from exhaustive search
//!   ([`catalog`]).

pub mod catalog;
pub mod dual;
mod error;
pub mod frame;
pub mod gf2;
pub mod symfactor;
pub mod synthesis;
pub mod worked_examples;

pub use error::{Error, Result};
pub use frame::{AlphaVector, DualPair, DualSpace, Frame};
pub use gf2::{Gf2Matrix, Gf2Vector, Parity, SymmetricMatrix};
