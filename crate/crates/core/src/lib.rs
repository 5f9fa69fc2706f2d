// SPDX-License-Identifier: Apache-2.0

//! Exact computations with enhanced Leibniz algebras: axiom checking,
//! Loday and symmetric cohomology, the decomposition into Lie-algebraic
//! building blocks, and the induced 2-term L-infinity algebras.

pub mod cohomology;
pub mod corpus;
pub mod ela;
pub mod error;
pub mod json;
pub mod leibniz;
pub mod lie2;
pub mod linalg;
pub mod random;
pub mod report;
pub mod structure;

pub use error::{Error, Result};
pub use report::{Failure, Report};
