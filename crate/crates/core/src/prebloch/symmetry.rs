use std::fmt;

use num_complex::Complex;
use num_traits::{One, Zero};

use super::kernel::chi_hat;
use super::FormalSum;
use crate::cover::FlattenedNumber;
use crate::error::{Error, Result};
use crate::scalar::{arg, cis, modulus, Real};

/// The fourth root with `Arg ∈ (-π/4, π/4]`.
pub fn root4<T: Real>(z: Complex<T>) -> Result<Complex<T>> {
    if z.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let r = modulus(z).sqrt().sqrt();
    Ok(cis(arg(z) / T::from_f64(4.0)) * r)
}

/// `i^k`, exact.
fn i_pow<T: Real>(k: i64) -> Complex<T> {
    let (o, z) = (T::one(), T::zero());
    match k.rem_euclid(4) {
        0 => Complex::new(o, z),
        1 => Complex::new(z, o),
        2 => Complex::new(-o, z),
        _ => Complex::new(z, -o),
    }
}

/// `e^{-πi n/12}`, with `n` reduced mod 24 first.
fn twelfth<T: Real>(n: i64) -> Complex<T> {
    let r = n.rem_euclid(24);
    cis(-T::pi() * T::from_i64(r) / T::from_f64(12.0))
}

/// One of the five relations describing the action of the anharmonic group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SymmetryRelation {
    /// `z ↦ 1/z`
    Inverse,
    /// `z ↦ 1 - 1/z`
    OneMinusInverse,
    /// `z ↦ -z/(1-z)`
    Ratio,
    /// `z ↦ 1/(1-z)`
    InverseOneMinus,
    /// `z ↦ 1 - z`
    OneMinus,
}

impl SymmetryRelation {
    pub const ALL: [SymmetryRelation; 5] = [
        SymmetryRelation::Inverse,
        SymmetryRelation::OneMinusInverse,
        SymmetryRelation::Ratio,
        SymmetryRelation::InverseOneMinus,
        SymmetryRelation::OneMinus,
    ];

    /// 1-based number.
    pub fn number(self) -> u8 {
        Self::ALL.iter().position(|&s| s == self).unwrap() as u8 + 1
    }

    pub fn from_number(n: u8) -> Option<Self> {
        Self::ALL.get((n as usize).checked_sub(1)?).copied()
    }
}

impl fmt::Display for SymmetryRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "symmetry-{}", self.number())
    }
}

/// The chosen relation as `LHS - RHS`, for `Im z > 0`.
pub fn symmetry_relation<T: Real>(
    z: Complex<T>,
    p: i64,
    q: i64,
    which: SymmetryRelation,
) -> Result<FormalSum<T>> {
    if !(z.im > T::zero()) {
        return Err(Error::NotUpperHalfPlane(format!("{} {}", z.re, z.im)));
    }
    let one = Complex::<T>::one();
    let g = |w: Complex<T>, a: i64, b: i64| FlattenedNumber::interior(w, a, b);
    let base = g(z, p, q)?;
    let mut s = FormalSum::new();
    match which {
        SymmetryRelation::Inverse => {
            s.push(1, g(one / z, -p, p + q)?);
            s.push(1, base);
            s -= &chi_hat(i_pow::<T>(p) * root4(z)?)?;
        }
        SymmetryRelation::OneMinusInverse => {
            s.push(1, g(one - one / z, -p - q, p)?);
            s.push(-1, base);
            s += &chi_hat(twelfth::<T>(1 - 6 * p) * root4(z)?)?;
        }
        SymmetryRelation::Ratio => {
            s.push(1, g(-z / (one - z), p + q, -q)?);
            s.push(1, base);
            s -= &chi_hat(twelfth::<T>(1 + 6 * q) * root4(z - one)?)?;
        }
        SymmetryRelation::InverseOneMinus => {
            s.push(1, g(one / (one - z), q, -p - q)?);
            s.push(-1, base);
            s += &chi_hat(twelfth::<T>(2 + 6 * q) * root4(z - one)?)?;
        }
        SymmetryRelation::OneMinus => {
            s.push(1, g(one - z, -q, -p)?);
            s.push(1, base);
            s -= &chi_hat(twelfth::<T>(-1))?;
        }
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    #[test]
    fn fourth_roots() {
        assert!((root4(c(16.0, 0.0)).unwrap() - c(2.0, 0.0)).norm() < 1e-15);
        assert!((root4(c(-1.0, 0.0)).unwrap() - Complex::from_polar(1.0, PI / 4.0)).norm() < 1e-15);
        assert!((root4(c(0.0, 1.0)).unwrap() - Complex::from_polar(1.0, PI / 8.0)).norm() < 1e-15);
        let w = root4(c(-3.0, -1e-300)).unwrap();
        assert!(w.arg() > -PI / 4.0 - 1e-15 && w.arg() < -PI / 4.0 + 1e-12);
        assert!(root4(c(0.0, 0.0)).is_err());
    }

    #[test]
    fn exact_powers_of_i() {
        assert_eq!(i_pow::<f64>(5), c(0.0, 1.0));
        assert_eq!(i_pow::<f64>(-1), c(0.0, -1.0));
        assert_eq!(i_pow::<f64>(-6), c(-1.0, 0.0));
    }

    #[test]
    fn numbering() {
        for (k, s) in SymmetryRelation::ALL.iter().enumerate() {
            assert_eq!(s.number() as usize, k + 1);
            assert_eq!(SymmetryRelation::from_number(k as u8 + 1), Some(*s));
        }
        assert_eq!(SymmetryRelation::from_number(0), None);
        assert_eq!(SymmetryRelation::from_number(6), None);
    }

    #[test]
    fn examples_vanish() {
        let cases = [
            (c(0.3, 0.4), 0, 0, SymmetryRelation::OneMinus),
            (c(0.0, 1.0), 1, 0, SymmetryRelation::Inverse),
            (c(0.0, 2.0), 0, 1, SymmetryRelation::Ratio),
        ];
        for (z, p, q, w) in cases {
            let v = symmetry_relation(z, p, q, w).unwrap().eval_lhat();
            assert!(v.norm() < 1e-11, "{w} at {z}: {v}");
        }
    }

    #[test]
    fn all_relations_on_a_grid() {
        for w in SymmetryRelation::ALL {
            for &(re, im) in &[(-2.5, 0.1), (0.5, 0.5), (1.7, 2.0), (0.0, 0.3)] {
                for p in -3..=3 {
                    for q in -3..=3 {
                        let v = symmetry_relation(c(re, im), p, q, w).unwrap().eval_lhat();
                        assert!(v.norm() < 1e-10, "{w} z={re}+{im}i p={p} q={q}: {v}");
                    }
                }
            }
        }
    }

    #[test]
    fn lower_half_plane_rejected() {
        assert!(matches!(
            symmetry_relation(c(0.3, -0.4), 0, 0, SymmetryRelation::Inverse),
            Err(Error::NotUpperHalfPlane(_))
        ));
        assert!(symmetry_relation(c(0.3, 0.0), 0, 0, SymmetryRelation::Inverse).is_err());
    }
}
