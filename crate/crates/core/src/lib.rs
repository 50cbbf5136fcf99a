//! Exact covolumes, formal dimensions and von Neumann dimensions for lattices
//! in `PSL(2,R)` and `PGL(2,F)`.
//!
//! All quantities are exact: rationals are arbitrary precision and factors of
//! `π` are tracked symbolically by [`PiRational`].

pub mod cli;
pub mod error;
pub mod factor;
pub mod finite_field;
pub mod fuchsian;
pub mod padic;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::{PiRational, Rational};
