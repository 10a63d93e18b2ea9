//! Crosscorrelation laboratory for binary m-sequences of lengths `2^m - 1` and
//! `2^k - 1` with `m = 2k`.

pub mod error;
pub mod cli;
pub mod config;
pub mod dobbertin;
pub mod expsums;
pub mod sequences;
pub mod verify;
pub mod field;
pub mod linalg;
pub mod zerocount;

pub use error::{Error, Result};
pub use field::{Elem, FieldCtx, FieldSpec};
