//! Gabrielov numbers and Coxeter-Dynkin diagrams for cusp singularities
//! `x1^p + x2^q + x3^r - c x1 x2 x3` with a finite abelian diagonal
//! symmetry group `G` in SL(3,C).
//!
//! The pipeline, all in exact rational arithmetic:
//!
//! 1. [`cusp`]: the Milnor lattice with its T-shaped distinguished basis.
//! 2. [`symmetry`]: the group, its ages, stabilizers, and Gabrielov numbers.
//! 3. [`action`]: `G` acting on the Milnor lattice by integer matrices.
//! 4. [`orbit`]: the intersection form of `V/G` by summing over `G`.
//! 5. [`resolution`]: root blocks over the singular points of `V/G` and the
//!    hat basis whose diagram is the star with Gabrielov-number arms.
//!
//! [`report`] turns any of these into DOT/JSON diagrams and runs the
//! verification checks.

pub mod action;
pub mod case;
pub mod cusp;
pub mod error;
pub mod exact;
pub mod orbit;
pub mod report;
pub mod resolution;
pub mod symmetry;

pub use case::Case;
pub use cusp::{CuspTriple, MilnorLattice};
pub use error::{Error, Result};
pub use symmetry::{GroupElement, SymmetryGroup};
