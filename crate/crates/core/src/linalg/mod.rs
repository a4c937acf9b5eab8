//! Exact vectors, square matrices and rank-3 structure-constant tensors.

mod map;
mod tensor;
mod vector;

pub use map::LinearMap;
pub use tensor::{Trilinear, DENSE_LIMIT};
pub use vector::Vector;
