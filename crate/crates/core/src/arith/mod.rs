//! Exact scalars and multilinear maps between tensor spaces.

mod arrow;
mod linmap;
mod scalar;
mod space;
mod sparse;

pub use arrow::{Arrow, Difference};
pub use linmap::{compose, leg_permutation, maps_equal, tensor, DenseWitness, LinMap};
pub use scalar::{FieldSpec, Rational, Scalar};
pub use space::TensorSpace;
pub use sparse::{Accumulator, SparseVec};
