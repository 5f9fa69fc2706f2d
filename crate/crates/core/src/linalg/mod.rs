// SPDX-License-Identifier: Apache-2.0

pub mod matrix;
pub mod rational;
pub mod subspace;
pub mod tensor;

pub use matrix::{Matrix, Vector};
pub use rational::Rational;
pub use subspace::{is_positive_definite, kernel, kernel_image, solve, splitting, Splitting, Subspace};
pub use tensor::{BilinearMap, TrilinearMap};
