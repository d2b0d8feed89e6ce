//! The extended Bloch group and the lifted Rogers dilogarithm.
//!
//! Everything is generic over a [`Real`] scalar. `f64` is the working type,
//! `f32` is supported for cheap experiments and [`HighPrecision`] (a 256-bit
//! binary float, about 71 significant digits) for reference evaluations.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bloch;
pub mod ccs;
pub mod cover;
pub mod dilog;
pub mod error;
pub mod prebloch;
pub mod rogers;
pub mod scalar;
pub mod sweep;

pub use cover::{is_flattened_ft, make_flattened_ft, FlattenedFT, FlattenedNumber};
pub use dilog::{li2, CutPoint, Side};
pub use error::{Error, Result};
pub use prebloch::FormalSum;
pub use rogers::{rogers_l_bar, rogers_l_hat, CmodTransfer, CmodZ2, IndexReading};
pub use scalar::Real;

/// 256-bit binary floating point.
pub type HighPrecision = f256::f256;

pub type Complex64 = num_complex::Complex<f64>;
pub type ComplexHp = num_complex::Complex<HighPrecision>;

pub type CutPoint64 = CutPoint<f64>;
pub type FlattenedNumber64 = FlattenedNumber<f64>;
pub type FlattenedNumberHp = FlattenedNumber<HighPrecision>;
pub type FormalSum64 = FormalSum<f64>;
pub type FormalSumHp = FormalSum<HighPrecision>;
pub type CmodZ2F64 = CmodZ2<f64>;
pub type CmodZ2Hp = CmodZ2<HighPrecision>;
