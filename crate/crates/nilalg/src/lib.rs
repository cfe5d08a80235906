//! Exact-arithmetic workbench for finite-dimensional nilpotent associative
//! algebras.
//!
//! The crate builds algebras from sparse structure-constant tables over
//! arbitrary-precision rationals and computes their standard invariants:
//! the descending power series and nilindex, characteristic sequences via
//! Jordan profiles of left multiplication operators, natural gradations and
//! the gradation positions of an adapted basis. A catalog constructs the
//! classified families (null-filiform, filiform, quasi-filiform, filiform of
//! degree p and the naturally graded p-filiform family), a constraints
//! module extracts and solves the polynomial conditions on the family's free
//! coefficients, and `verify` bundles the whole-catalog property suites run
//! by the `verify-theorems` subcommand.
//!
//! Everything is exact: no floating point is used anywhere.

pub mod algebra;
pub mod catalog;
pub mod charseq;
pub mod cli;
pub mod constraints;
pub mod error;
pub mod grading;
pub mod io;
pub mod linalg;
pub mod scalar;
pub mod verify;

pub use algebra::{Algebra, AnnihilatorInvariants, PowerSeries};
pub use charseq::{char_seq_algebra, char_seq_element, is_p_filiform, CharacteristicSequence};
pub use error::{Error, Result};
pub use grading::{natural_gradation, Gradation, GradationPositions};
pub use linalg::{Matrix, Subspace, Vector};
pub use scalar::Scalar;
