//! Exact lattice-point computations relating FFLV polytopes of types A and C to
//! string polytopes of Demazure modules in rank `2n - 1`.
//!
//! * [`rootsys`]: labels, the order `≼`, reduced words, weights, Weyl dimensions.
//! * [`fflv`]: FFLV lattice points via chains and Minkowski sums.
//! * [`crystal`]: Demazure crystals and string coordinates.
//! * [`degenmap`]: the unimodular matrix, translation vectors and fold/unfold.
//! * [`wedge`]: an independent oracle acting on exterior powers.
//! * [`verify`]: end-to-end checks producing serializable reports.

pub mod crystal;
pub mod degenmap;
pub mod error;
pub mod fflv;
pub mod linalg;
pub mod rootsys;
pub mod verify;
pub mod wedge;

pub use error::{Error, Result};
pub use fflv::{ExponentVector, LatticePointSet};
pub use rootsys::{DominantWeight, Family, LabelBasis, LieType, ReducedWord, RootLabel, Weight};
