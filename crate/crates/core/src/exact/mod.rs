//! Exact linear algebra: rationals, dense matrices, and labeled bilinear
//! spaces with radicals and root reflections.

mod matrix;
mod rational;
mod space;

pub use matrix::{fixed_subspace_dim, rank, Matrix};
pub use rational::{ParseRationalError, Rational};
pub use space::{neg_cartan_a, BasisLabel, BilinearSpace, LatticeVector, OrbitClass};
