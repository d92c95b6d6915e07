//! Exact computations for standard Whittaker modules of Spin(r,1) at regular
//! integral infinitesimal character.

pub mod arith;
pub mod catalog;
pub mod error;
pub mod gt;
pub mod lie;
pub mod radial;
pub mod verify;
pub mod whittaker;

pub use arith::{Gauss, HalfInt, Rational, SqrtRatSum};
pub use error::{Error, Result};
pub use gt::{GTPattern, PartialGTPattern, SpinWeight};
pub use catalog::{InfCharacter, IrrLabel, SocleDiagram};
pub use whittaker::GammaCondition;
