//! The lifted Rogers dilogarithm and its value group `C/4π²Z`.
//!
//! `Z(2) = (2πi)²Z = 4π²Z` is real, so reduction only ever touches the real
//! part of a value. The imaginary part is never reduced; it carries the
//! volume information.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::Zero;

use crate::cover::FlattenedNumber;
use crate::dilog::{li2, log_one_minus, principal_log};
use crate::scalar::{modulus, two_pi_i, Real};

/// Reduce `x` into `(-period/2, period/2]`.
fn reduce_symmetric<T: Real>(x: T, period: T) -> T {
    let k = (-x / period + T::half()).floor();
    let mut r = x + period * k;
    let half = period * T::half();
    if r <= -half {
        r += period;
    } else if r > half {
        r -= period;
    }
    r
}

/// An element of `C/Z(2) = C/4π²Z`, stored with `Re ∈ (-2π², 2π²]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CmodZ2<T: Real> {
    value: Complex<T>,
}

impl<T: Real> CmodZ2<T> {
    pub fn new(value: Complex<T>) -> Self {
        CmodZ2 {
            value: Complex::new(reduce_symmetric(value.re, T::four_pi_squared()), value.im),
        }
    }

    pub fn zero() -> Self {
        CmodZ2 { value: Complex::zero() }
    }

    /// Canonical representative.
    pub fn value(&self) -> Complex<T> {
        self.value
    }

    pub fn re(&self) -> T {
        self.value.re
    }

    pub fn im(&self) -> T {
        self.value.im
    }

    /// Distance to zero in `C/4π²Z`.
    pub fn norm(&self) -> T {
        modulus(self.value)
    }

    /// Distance to `other` in `C/4π²Z`; wrap-around at `±2π²` is handled.
    pub fn distance(&self, other: &Self) -> T {
        (*self - *other).norm()
    }

    pub fn approx_eq(&self, other: &Self, tol: T) -> bool {
        let d = *self - *other;
        d.re().abs() <= tol && d.im().abs() <= tol
    }

    /// Image in `C/2π²Z`, the coarser group obtained with the transfer relation.
    pub fn reduce_mod_transfer(&self) -> CmodTransfer<T> {
        CmodTransfer::new(self.value)
    }
}

impl<T: Real> Default for CmodZ2<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Real> Add for CmodZ2<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.value + rhs.value)
    }
}

impl<T: Real> AddAssign for CmodZ2<T> {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl<T: Real> Sub for CmodZ2<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.value - rhs.value)
    }
}

impl<T: Real> Neg for CmodZ2<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.value)
    }
}

impl<T: Real> Mul<i64> for CmodZ2<T> {
    type Output = Self;
    fn mul(self, k: i64) -> Self {
        Self::new(self.value * T::from_i64(k))
    }
}

/// `re im`
impl<T: Real> fmt::Display for CmodZ2<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.value.re, self.value.im)
    }
}

/// An element of `C/2π²Z`, stored with `Re ∈ (-π², π²]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CmodTransfer<T: Real> {
    value: Complex<T>,
}

impl<T: Real> CmodTransfer<T> {
    pub fn new(value: Complex<T>) -> Self {
        let period = T::two() * T::pi_squared();
        CmodTransfer {
            value: Complex::new(reduce_symmetric(value.re, period), value.im),
        }
    }

    pub fn value(&self) -> Complex<T> {
        self.value
    }

    pub fn approx_eq(&self, other: &Self, tol: T) -> bool {
        let d = CmodTransfer::new(self.value - other.value);
        d.value.re.abs() <= tol && d.value.im.abs() <= tol
    }
}

impl<T: Real> fmt::Display for CmodTransfer<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.value.re, self.value.im)
    }
}

/// How a stored index `n` (label `2n`) enters the analytic formulas.
///
/// Only [`IndexReading::HalfIndex`] makes the lifted dilogarithm both satisfy
/// the five-term relation and separate the order-two element κ̂ from zero; the
/// other reading is kept so tests can show that it fails.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum IndexReading {
    /// `Log z + 2πi·n` for label `2n`.
    #[default]
    HalfIndex,
    /// `Log z + 2πi·(2n)`: the even label itself multiplies `2πi`.
    EvenLabel,
}

impl IndexReading {
    fn factor(self) -> i64 {
        match self {
            IndexReading::HalfIndex => 1,
            IndexReading::EvenLabel => 2,
        }
    }
}

/// `L̄(z; 2p, 2q) = Li₂(z) + ½(Log z + 2πi p)(Log(1-z) + 2πi q) - π²/6`.
pub fn rogers_l_bar<T: Real>(f: &FlattenedNumber<T>) -> Complex<T> {
    rogers_l_bar_with(f, IndexReading::HalfIndex)
}

pub fn rogers_l_bar_with<T: Real>(f: &FlattenedNumber<T>, reading: IndexReading) -> Complex<T> {
    let base = f.base();
    let k = reading.factor();
    let tpi = two_pi_i::<T>();
    let a = principal_log(base) + tpi * T::from_i64(k * f.p());
    let b = log_one_minus(base) + tpi * T::from_i64(k * f.q());
    li2(base) + a * b * T::half() - Complex::new(T::zeta2(), T::zero())
}

/// `L̂ = L̄ mod 4π²`, well defined on the cover.
pub fn rogers_l_hat<T: Real>(f: &FlattenedNumber<T>) -> CmodZ2<T> {
    CmodZ2::new(rogers_l_bar(f))
}

pub fn rogers_l_hat_with<T: Real>(f: &FlattenedNumber<T>, reading: IndexReading) -> CmodZ2<T> {
    CmodZ2::new(rogers_l_bar_with(f, reading))
}

/// `C/2π²Z` image of a `C/4π²Z` value.
pub fn reduce_mod_transfer<T: Real>(v: &CmodZ2<T>) -> CmodTransfer<T> {
    v.reduce_mod_transfer()
}
