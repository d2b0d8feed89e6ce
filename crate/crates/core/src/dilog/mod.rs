//! Principal logarithm and dilogarithm on the closed cut plane.
//!
//! The cut plane is `C ∖ ((-∞,0] ∪ [1,∞))`. Each real point `x` of
//! `(-∞,0) ∪ (1,∞)` is doubled into `x+0i` ([`Side::Above`]) and `x-0i`
//! ([`Side::Below`]); all branch decisions are driven by that tag rather than by
//! the sign of a floating-point zero.

pub mod continuation;

use std::fmt;

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{arg, ln_one_minus, modulus, principal_ln, CompensatedSum, Real};

/// Which copy of a point on the real cut is meant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Interior,
    /// `x + 0i`, the limit from the upper half plane.
    Above,
    /// `x - 0i`, the limit from the lower half plane.
    Below,
}

impl Side {
    pub fn flipped(self) -> Side {
        match self {
            Side::Interior => Side::Interior,
            Side::Above => Side::Below,
            Side::Below => Side::Above,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Side::Interior => "i",
            Side::Above => "a",
            Side::Below => "b",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Side> {
        match tag {
            "i" | "interior" => Some(Side::Interior),
            "a" | "above" => Some(Side::Above),
            "b" | "below" => Some(Side::Below),
            _ => None,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// True when `z` lies on `(-∞,0) ∪ (1,∞)`.
pub fn on_cut<T: Real>(z: Complex<T>) -> bool {
    z.im.is_zero() && (z.re < T::zero() || z.re > T::one())
}

/// A point of the closed cut plane.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CutPoint<T: Real> {
    z: Complex<T>,
    side: Side,
}

impl<T: Real> CutPoint<T> {
    pub fn new(z: Complex<T>, side: Side) -> Result<Self> {
        if !z.re.is_finite() || !z.im.is_finite() {
            return Err(Error::NonFinite(format!("{z}")));
        }
        if z.im.is_zero() && (z.re.is_zero() || z.re == T::one()) {
            return Err(Error::BranchPoint(format!("{z}")));
        }
        let cut = on_cut(z);
        let consistent = match side {
            Side::Interior => !cut,
            Side::Above | Side::Below => cut,
        };
        if !consistent {
            return Err(Error::InconsistentSide {
                z: format!("{z}"),
                side: side.tag(),
            });
        }
        // Normalise -0.0 so equal points compare and print identically.
        let z = Complex::new(z.re, if z.im.is_zero() { T::zero() } else { z.im });
        Ok(CutPoint { z, side })
    }

    pub fn interior(z: Complex<T>) -> Result<Self> {
        Self::new(z, Side::Interior)
    }

    /// `z + 0i`: points landing on the cut are tagged [`Side::Above`].
    ///
    /// The tag is applied only when `Im z` is exactly zero; no rounding
    /// tolerance is involved.
    pub fn plus_zero(z: Complex<T>) -> Result<Self> {
        let side = if on_cut(z) { Side::Above } else { Side::Interior };
        Self::new(z, side)
    }

    pub fn real(x: T, side: Side) -> Result<Self> {
        Self::new(Complex::new(x, T::zero()), side)
    }

    pub fn z(&self) -> Complex<T> {
        self.z
    }

    pub fn side(&self) -> Side {
        self.side
    }

    /// `Arg` in `(-π, π]`, with `x-0i` on the negative axis giving `-π`.
    pub fn arg(&self) -> T {
        if self.side == Side::Below && self.z.re < T::zero() {
            -T::pi()
        } else {
            arg(self.z)
        }
    }

    /// The point `1 - z`, with the side tag flipped for boundary points.
    pub fn one_minus(&self) -> Result<Self> {
        Self::new(Complex::<T>::one() - self.z, self.side.flipped())
    }
}

impl<T: Real> fmt::Display for CutPoint<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.z.re, self.z.im, self.side)
    }
}

/// Sided principal logarithm of an arbitrary nonzero complex number: on the
/// negative axis `side` selects `±iπ`, elsewhere it is ignored.
fn ln_sided<T: Real>(z: Complex<T>, side: Side) -> Complex<T> {
    if z.im.is_zero() && z.re < T::zero() {
        let im = if side == Side::Below { -T::pi() } else { T::pi() };
        Complex::new((-z.re).ln(), im)
    } else {
        principal_ln(z)
    }
}

/// `Log z` with `Im ∈ (-π, π]`; `x-0i` for `x < 0` gives `Im = -π`.
pub fn principal_log<T: Real>(p: &CutPoint<T>) -> Complex<T> {
    ln_sided(p.z, p.side)
}

/// `Log(1 - z)`. For `x > 1`, `x+0i` gives `Im = -π` and `x-0i` gives `Im = +π`.
pub fn log_one_minus<T: Real>(p: &CutPoint<T>) -> Complex<T> {
    let w = Complex::<T>::one() - p.z;
    ln_sided(w, p.side.flipped())
}

/// Bernoulli-accelerated series `Li₂(w) = Σ B_n u^{n+1}/(n+1)!`, `u = -Log(1-w)`.
/// Intended for `|w| <= 1`, `Re w <= 1/2`, where `|u| < 1.3`.
fn li2_bernoulli<T: Real>(w: Complex<T>) -> Complex<T> {
    let u = -ln_one_minus(w);
    let u2 = u * u;
    let mut acc = CompensatedSum::default();
    acc.add(u);
    acc.add(-u2 / T::from_f64(4.0));
    let mut power = u;
    let tiny = T::epsilon() / T::from_f64(16.0);
    for &c in T::li2_coefficients() {
        power = power * u2;
        let term = power * c;
        acc.add(term);
        if modulus(term) <= tiny * modulus(acc.value()) {
            break;
        }
    }
    acc.value()
}

/// `Li₂` on the closed unit disc, real cut excluded (the disc meets the
/// cut only in `[-1, 0)`, where `Li₂` is continuous).
fn li2_disc<T: Real>(w: Complex<T>) -> Complex<T> {
    if w.re > T::half() {
        // Euler reflection; |1 - w| < 1 and Re(1 - w) < 1/2 here.
        let v = Complex::<T>::one() - w;
        let ln_w = principal_ln(w);
        let ln_v = principal_ln(v);
        Complex::new(T::zeta2(), T::zero()) - ln_w * ln_v - li2_bernoulli(v)
    } else {
        li2_bernoulli(w)
    }
}

fn li2_sided<T: Real>(z: Complex<T>, side: Side) -> Complex<T> {
    if z.is_zero() {
        return Complex::zero();
    }
    if z.im.is_zero() && z.re == T::one() {
        return Complex::new(T::zeta2(), T::zero());
    }
    let r2 = z.norm_sqr();
    if r2 > T::one() {
        // Inversion: Li₂(z) = -π²/6 - ½ Log²(-z) - Li₂(1/z). The point -z
        // sits on the opposite side of the negative axis.
        let ln_neg = ln_sided(-z, side.flipped());
        let inv = z.inv();
        Complex::new(-T::zeta2(), T::zero()) - ln_neg * ln_neg * T::half() - li2_disc(inv)
    } else {
        li2_disc(z)
    }
}

/// Principal branch of `Li₂` on the closed cut plane.
///
/// For `x > 1`, `Li₂(x+0i) - Li₂(x-0i) = 2πi ln x`.
pub fn li2<T: Real>(p: &CutPoint<T>) -> Complex<T> {
    li2_sided(p.z, p.side)
}

/// `Li₂` at an arbitrary complex point, reading points on `(1, ∞)` as `x+0i`.
/// Defined at `0` and `1` as well.
pub fn li2_complex<T: Real>(z: Complex<T>) -> Complex<T> {
    let side = if on_cut(z) { Side::Above } else { Side::Interior };
    li2_sided(z, side)
}
