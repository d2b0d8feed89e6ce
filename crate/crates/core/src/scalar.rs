//! Scalar abstraction.
//!
//! Every numeric routine in the crate is written against [`Real`], so the same
//! code runs in `f64` (the default working precision), `f32`, and the 237-bit
//! [`f256`] type used for high-precision reruns.
//!
//! `Real` is deliberately narrower than `num_traits::Float`: it asks only for
//! field arithmetic, ordering and the handful of elementary functions the
//! dilogarithm needs. That keeps non-IEEE backends such as `f256` usable.

use std::fmt::{Debug, Display};
use std::ops::{AddAssign, DivAssign, MulAssign, Neg, SubAssign};
use std::sync::OnceLock;

use f256::f256;
use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, Zero};

/// A real scalar usable as the coordinate type of every computation.
pub trait Real:
    Num
    + Copy
    + PartialOrd
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    /// Human-readable name used in reports.
    const NAME: &'static str;

    fn from_f64(x: f64) -> Self;
    fn to_f64(self) -> f64;
    fn pi() -> Self;
    /// Unit roundoff of the type.
    fn epsilon() -> Self;
    fn abs(self) -> Self;
    fn sqrt(self) -> Self;
    fn ln(self) -> Self;
    fn exp(self) -> Self;
    fn sin(self) -> Self;
    fn cos(self) -> Self;
    /// Four-quadrant arctangent of `self / x`.
    fn atan2(self, x: Self) -> Self;
    fn floor(self) -> Self;
    fn is_finite(self) -> bool;

    /// Coefficients `B_{2k} / (2k+1)!` for `k = 1..`, long enough to reach
    /// full precision of the type for `|u| <= 1.3`.
    fn li2_coefficients() -> &'static [Self];

    fn from_i64(n: i64) -> Self {
        // Exact for |n| < 2^53, which covers every index the crate produces.
        Self::from_f64(n as f64)
    }

    fn two() -> Self {
        Self::one() + Self::one()
    }

    fn half() -> Self {
        Self::one() / Self::two()
    }

    fn two_pi() -> Self {
        Self::two() * Self::pi()
    }

    fn pi_squared() -> Self {
        Self::pi() * Self::pi()
    }

    /// `4π²`, the generator of `Z(2) = (2πi)²Z` up to sign.
    fn four_pi_squared() -> Self {
        let two_pi = Self::two_pi();
        two_pi * two_pi
    }

    /// `π²/6 = Li₂(1)`.
    fn zeta2() -> Self {
        Self::pi_squared() / Self::from_f64(6.0)
    }

    /// Round half away from zero, returned as an integer.
    fn round_to_i64(self) -> i64 {
        let r = (self + Self::half()).floor();
        r.to_f64() as i64
    }

    fn max_of(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }
}

/// Bernoulli numbers `B_0..=B_n` (with `B_1 = -1/2`) as exact rationals.
pub fn bernoulli_numbers(n: usize) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = Vec::with_capacity(n + 1);
    b.push(BigRational::one());
    for m in 1..=n {
        // B_m = -1/(m+1) * sum_{k<m} C(m+1, k) B_k
        let mut acc = BigRational::zero();
        let mut binom = BigInt::one();
        for (k, bk) in b.iter().enumerate() {
            acc += BigRational::from_integer(binom.clone()) * bk;
            binom = binom * BigInt::from(m + 1 - k) / BigInt::from(k + 1);
        }
        b.push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
    }
    b
}

/// Exact coefficients `B_{2k} / (2k+1)!` for `k = 1..=terms`.
pub fn li2_coefficients_exact(terms: usize) -> Vec<BigRational> {
    let b = bernoulli_numbers(2 * terms);
    let mut factorial = BigInt::from(6); // 3!
    let mut out = Vec::with_capacity(terms);
    for k in 1..=terms {
        if k > 1 {
            factorial *= BigInt::from(2 * k) * BigInt::from(2 * k + 1);
        }
        out.push(&b[2 * k] / BigRational::from_integer(factorial.clone()));
    }
    out
}

fn rational_to<T: Real>(r: &BigRational) -> T {
    let parse = |i: &BigInt| -> T {
        let digits = i.abs().to_str_radix(10);
        let v = T::from_str_radix(&digits, 10).unwrap_or_else(|_| panic!("unparsable integer {digits}"));
        if i.is_negative() {
            -v
        } else {
            v
        }
    };
    parse(r.numer()) / parse(r.denom())
}

fn coefficient_table<T: Real>(terms: usize) -> Vec<T> {
    li2_coefficients_exact(terms).iter().map(rational_to::<T>).collect()
}

macro_rules! impl_ieee_real {
    ($t:ty, $name:literal, $terms:expr, $pi:expr) => {
        impl Real for $t {
            const NAME: &'static str = $name;

            fn from_f64(x: f64) -> Self {
                x as $t
            }
            fn to_f64(self) -> f64 {
                self as f64
            }
            fn pi() -> Self {
                $pi
            }
            fn epsilon() -> Self {
                <$t>::EPSILON
            }
            fn abs(self) -> Self {
                <$t>::abs(self)
            }
            fn sqrt(self) -> Self {
                <$t>::sqrt(self)
            }
            fn ln(self) -> Self {
                <$t>::ln(self)
            }
            fn exp(self) -> Self {
                <$t>::exp(self)
            }
            fn sin(self) -> Self {
                <$t>::sin(self)
            }
            fn cos(self) -> Self {
                <$t>::cos(self)
            }
            fn atan2(self, x: Self) -> Self {
                <$t>::atan2(self, x)
            }
            fn floor(self) -> Self {
                <$t>::floor(self)
            }
            fn is_finite(self) -> bool {
                <$t>::is_finite(self)
            }
            fn li2_coefficients() -> &'static [Self] {
                static TABLE: OnceLock<Vec<$t>> = OnceLock::new();
                TABLE.get_or_init(|| coefficient_table::<$t>($terms))
            }
        }
    };
}

impl_ieee_real!(f32, "f32", 8, std::f32::consts::PI);
impl_ieee_real!(f64, "f64", 16, std::f64::consts::PI);

impl Real for f256 {
    const NAME: &'static str = "f256";

    fn from_f64(x: f64) -> Self {
        f256::from(x)
    }
    fn to_f64(self) -> f64 {
        format!("{self:e}").parse().unwrap_or(f64::NAN)
    }
    fn pi() -> Self {
        ::f256::consts::PI
    }
    fn epsilon() -> Self {
        f256::EPSILON
    }
    fn abs(self) -> Self {
        f256::abs(&self)
    }
    fn sqrt(self) -> Self {
        f256::sqrt(self)
    }
    fn ln(self) -> Self {
        f256::ln(&self)
    }
    fn exp(self) -> Self {
        f256::exp(&self)
    }
    fn sin(self) -> Self {
        f256::sin(&self)
    }
    fn cos(self) -> Self {
        f256::cos(&self)
    }
    // f256::atan2 ignores the quadrant, so go through atan.
    fn atan2(self, x: Self) -> Self {
        let zero = f256::ZERO;
        let pi = ::f256::consts::PI;
        if x > zero {
            f256::atan(&(self / x))
        } else if x < zero {
            let a = f256::atan(&(self / x));
            if self >= zero {
                a + pi
            } else {
                a - pi
            }
        } else if self > zero {
            pi / f256::TWO
        } else if self < zero {
            -pi / f256::TWO
        } else {
            zero
        }
    }
    fn floor(self) -> Self {
        f256::floor(&self)
    }
    fn is_finite(self) -> bool {
        f256::is_finite(self)
    }
    fn from_i64(n: i64) -> Self {
        f256::from(n)
    }
    fn li2_coefficients() -> &'static [Self] {
        static TABLE: OnceLock<Vec<f256>> = OnceLock::new();
        TABLE.get_or_init(|| coefficient_table::<f256>(64))
    }
}

/// `i` in the given scalar type.
pub fn imag_unit<T: Real>() -> Complex<T> {
    Complex::new(T::zero(), T::one())
}

/// `2πi`.
pub fn two_pi_i<T: Real>() -> Complex<T> {
    Complex::new(T::zero(), T::two_pi())
}

pub fn from_f64_pair<T: Real>(re: f64, im: f64) -> Complex<T> {
    Complex::new(T::from_f64(re), T::from_f64(im))
}

pub fn to_c64<T: Real>(z: Complex<T>) -> Complex<f64> {
    Complex::new(z.re.to_f64(), z.im.to_f64())
}

/// Modulus, computed without the intermediate overflow of `re² + im²`.
pub fn modulus<T: Real>(z: Complex<T>) -> T {
    let a = z.re.abs();
    let b = z.im.abs();
    let (big, small) = if a >= b { (a, b) } else { (b, a) };
    if big.is_zero() {
        return T::zero();
    }
    let r = small / big;
    big * (T::one() + r * r).sqrt()
}

/// Argument in `(-π, π]`. The negative real axis (either signed zero) maps to
/// `+π`, and points on the coordinate axes return exact multiples of `π/2`.
pub fn arg<T: Real>(z: Complex<T>) -> T {
    if z.im.is_zero() {
        if z.re < T::zero() {
            T::pi()
        } else {
            T::zero()
        }
    } else if z.re.is_zero() {
        if z.im > T::zero() {
            T::pi() / T::two()
        } else {
            -T::pi() / T::two()
        }
    } else {
        z.im.atan2(z.re)
    }
}

/// Principal logarithm with `Im ∈ (-π, π]`.
pub fn principal_ln<T: Real>(z: Complex<T>) -> Complex<T> {
    Complex::new(modulus(z).ln(), arg(z))
}

/// `ln(1 + x)`, accurate for small `x`.
pub fn ln_1p<T: Real>(x: T) -> T {
    let u = T::one() + x;
    if u == T::one() {
        x
    } else {
        u.ln() * x / (u - T::one())
    }
}

/// Principal `Log(1 - w)`, accurate for small `w`.
pub fn ln_one_minus<T: Real>(w: Complex<T>) -> Complex<T> {
    let (a, b) = (-w.re, -w.im);
    let t = a * (T::two() + a) + b * b;
    let re = if t.abs() < T::half() {
        ln_1p(t) * T::half()
    } else {
        modulus(Complex::new(T::one() + a, b)).ln()
    };
    Complex::new(re, arg(Complex::new(T::one() + a, b)))
}

pub fn exp<T: Real>(z: Complex<T>) -> Complex<T> {
    let m = z.re.exp();
    Complex::new(m * z.im.cos(), m * z.im.sin())
}

/// `e^{iθ}`.
pub fn cis<T: Real>(theta: T) -> Complex<T> {
    Complex::new(theta.cos(), theta.sin())
}

/// Neumaier-compensated running sum of complex values.
#[derive(Clone, Copy, Debug)]
pub struct CompensatedSum<T: Real> {
    sum: Complex<T>,
    carry: Complex<T>,
}

impl<T: Real> Default for CompensatedSum<T> {
    fn default() -> Self {
        Self {
            sum: Complex::zero(),
            carry: Complex::zero(),
        }
    }
}

fn neumaier_step<T: Real>(sum: &mut T, carry: &mut T, x: T) {
    let t = *sum + x;
    if sum.abs() >= x.abs() {
        *carry += (*sum - t) + x;
    } else {
        *carry += (x - t) + *sum;
    }
    *sum = t;
}

impl<T: Real> CompensatedSum<T> {
    pub fn add(&mut self, x: Complex<T>) {
        neumaier_step(&mut self.sum.re, &mut self.carry.re, x.re);
        neumaier_step(&mut self.sum.im, &mut self.carry.im, x.im);
    }

    pub fn value(&self) -> Complex<T> {
        self.sum + self.carry
    }
}

impl<T: Real> FromIterator<Complex<T>> for CompensatedSum<T> {
    fn from_iter<I: IntoIterator<Item = Complex<T>>>(iter: I) -> Self {
        let mut acc = Self::default();
        for x in iter {
            acc.add(x);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bernoulli_small_values() {
        let b = bernoulli_numbers(8);
        let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        assert_eq!(b[1], r(-1, 2));
        assert_eq!(b[2], r(1, 6));
        assert_eq!(b[3], r(0, 1));
        assert_eq!(b[4], r(-1, 30));
        assert_eq!(b[6], r(1, 42));
        assert_eq!(b[8], r(-1, 30));
    }

    #[test]
    fn first_li2_coefficients() {
        // Li₂ = u - u²/4 + u³/36 - u⁵/3600 + u⁷/211680 - ...
        let c = li2_coefficients_exact(3);
        let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        assert_eq!(c, vec![r(1, 36), r(-1, 3600), r(1, 211680)]);
        let f = <f64 as Real>::li2_coefficients();
        assert_eq!(f.len(), 16);
        assert!((f[1] + 1.0 / 3600.0).abs() < 1e-20);
    }

    #[test]
    fn arg_on_axes_is_exact() {
        let c = |re: f64, im: f64| Complex::new(re, im);
        assert_eq!(arg(c(-2.0, 0.0)), std::f64::consts::PI);
        assert_eq!(arg(c(-2.0, -0.0)), std::f64::consts::PI);
        assert_eq!(arg(c(0.0, 3.0)) * 2.0, std::f64::consts::PI);
        assert_eq!(arg(c(0.0, -3.0)), -std::f64::consts::FRAC_PI_2);
        assert_eq!(arg(c(5.0, 0.0)), 0.0);
    }

    #[test]
    fn f256_elementary_functions() {
        let x = f256::from(0.75);
        assert!((Real::ln(x).to_f64() - 0.75f64.ln()).abs() < 1e-15);
        let y = Real::atan2(f256::from(1.0), f256::from(-1.0));
        assert!((y.to_f64() - 0.75 * std::f64::consts::PI).abs() < 1e-15);
        let pi = <f256 as Real>::pi();
        assert!((Real::sin(pi / f256::from(6.0)) - f256::from(0.5)).abs() < f256::from(1e-70));
        assert_eq!(<f256 as Real>::from_i64(-7).to_f64(), -7.0);
        assert_eq!(<f256 as Real>::li2_coefficients().len(), 64);
    }

    #[test]
    fn log_one_minus_small_argument() {
        let w = Complex::new(1e-8, 2e-8);
        // -w - w²/2 - w³/3
        let series = -w - w * w / 2.0 - w * w * w / 3.0;
        assert!((ln_one_minus(w) - series).norm() <= 1e-16 * series.norm());
        let w = Complex::new(-3.0, 0.5);
        assert!((ln_one_minus(w) - (Complex::new(1.0, 0.0) - w).ln()).norm() < 1e-15);
        assert_eq!(ln_1p(0.0f64), 0.0);
        assert!((ln_1p(1e-10f64) - (1e-10 - 5e-21)).abs() < 1e-26);
    }

    #[test]
    fn compensated_sum_recovers_small_terms() {
        let mut s = CompensatedSum::<f64>::default();
        s.add(Complex::new(1e16, 0.0));
        for _ in 0..10 {
            s.add(Complex::new(1.0, 0.0));
        }
        s.add(Complex::new(-1e16, 0.0));
        assert_eq!(s.value().re, 10.0);
    }

    #[test]
    fn modulus_matches_hypot() {
        let z = Complex::new(3e200, 4e200);
        assert!((modulus(z) / 5e200 - 1.0).abs() < 1e-15);
    }
}
