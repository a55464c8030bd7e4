//! Small dense linear algebra: enough for n ≤ ~40 and nothing more.

mod eigen;
mod matrix;
mod svd;

pub use eigen::{symmetric_eigen, SymmetricEigen};
pub use matrix::Matrix;
pub use svd::{null_space, null_space_below, singular_values};
