//! Exact scalar arithmetic (roots of unity) and exact rational linear
//! algebra. Every other module is built on top of these two carriers.

mod matrix;
pub(crate) mod modsolve;
mod roots;

pub use matrix::{MatrixError, RationalMatrix};
pub use roots::RootOfUnity;
