//! Computational toolkit for the Jones polynomial, SU(2) Verlinde counts, and the
//! quantization of the moduli space of flat SU(2) connections on the torus.
//!
//! Every identity is checked by two independent routes: the Kauffman state sum
//! against the Temperley-Lieb trace, the Verlinde formula against admissible
//! colorings, and the quantum-group operators against Toeplitz quantization.

pub mod cyclotomic;
pub mod error;
pub mod knots;
pub mod laurent;
pub mod matrix;
pub mod temperley_lieb;
pub mod toeplitz;
pub mod torus;
pub mod verify;
pub mod verlinde;

pub use cyclotomic::{cyc_embed, CycScalar};
pub use error::{CalibrationError, KnotError, NumericError, ParseError};
pub use laurent::{laurent_eval_at_root, HalfExpLaurent, Laurent};
pub use matrix::ComplexMatrix;
