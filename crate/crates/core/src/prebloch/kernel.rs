use num_complex::Complex;
use num_traits::{One, Zero};

use super::FormalSum;
use crate::cover::FlattenedNumber;
use crate::dilog::CutPoint;
use crate::error::{Error, Result};
use crate::scalar::{exp, two_pi_i, Real};

/// `{z;2p} = [z;2p,2] - [z;2p,0]`.
pub fn curly<T: Real>(z: &CutPoint<T>, p: i64) -> FormalSum<T> {
    FormalSum::from_terms([
        (1, FlattenedNumber::from_cut_point(*z, p, 1)),
        (-1, FlattenedNumber::from_cut_point(*z, p, 0)),
    ])
}

/// `κ̂ = {½;2} - {½;0}`.
pub fn kappa_hat<T: Real>() -> FormalSum<T> {
    let half = CutPoint::interior(Complex::new(T::half(), T::zero())).expect("½ is interior");
    kappa_hat_at(&half, 1)
}

/// `{z;2p} - {z;2(p-1)}`, the same element for every `z` and `p`.
pub fn kappa_hat_at<T: Real>(z: &CutPoint<T>, p: i64) -> FormalSum<T> {
    curly(z, p) - curly(z, p - 1)
}

/// `χ̂(z)`: `0` at `1`, `κ̂` at `-1`, otherwise `{z²+0i; 0}` when
/// `Arg z ∈ (-π/2, π/2]` and `{z²+0i; 2}` else.
pub fn chi_hat<T: Real>(z: Complex<T>) -> Result<FormalSum<T>> {
    if z.is_zero() {
        return Err(Error::ZeroArgument);
    }
    if z == Complex::one() {
        return Ok(FormalSum::new());
    }
    if z == -Complex::<T>::one() {
        return Ok(kappa_hat());
    }
    let zero = T::zero();
    let right = z.re > zero || (z.re == zero && z.im > zero);
    let sq = CutPoint::plus_zero(z * z)?;
    Ok(curly(&sq, if right { 0 } else { 1 }))
}

/// `L̂(χ̂(z) + χ̂(w) - χ̂(zw))`, zero since `χ̂` is a homomorphism.
pub fn check_chi_homomorphism<T: Real>(z: Complex<T>, w: Complex<T>) -> Result<crate::CmodZ2<T>> {
    let s = chi_hat(z)? + chi_hat(w)? - chi_hat(z * w)?;
    Ok(s.eval_lhat())
}

/// `exp(L̂(s)/2πi)`, the splitting of `χ̂`.
pub fn splitting<T: Real>(s: &FormalSum<T>) -> Complex<T> {
    exp(s.eval_lhat().value() / two_pi_i::<T>())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dilog::Side;
    use crate::rogers::CmodZ2;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    fn pt(re: f64, im: f64) -> CutPoint<f64> {
        CutPoint::plus_zero(c(re, im)).unwrap()
    }

    #[test]
    fn curly_examples() {
        let s = curly(&pt(0.5, 0.0), 0);
        assert_eq!(
            s.terms(),
            &[
                (1, FlattenedNumber::interior(c(0.5, 0.0), 0, 1).unwrap()),
                (-1, FlattenedNumber::interior(c(0.5, 0.0), 0, 0).unwrap()),
            ]
        );
        // L̂{z;2p} = πi(Log z + 2πi p)
        let v = s.eval_lhat().value();
        assert!((v - c(0.0, -PI * 2f64.ln())).norm() < 1e-14, "{v}");
        assert!((curly(&pt(0.5, 0.0), 3) - curly(&pt(0.5, 0.0), 3)).is_empty());
    }

    #[test]
    fn curly_independent_of_q() {
        let z = pt(-0.7, 1.3);
        for q in -3..3 {
            let other = FormalSum::from_terms([
                (1, FlattenedNumber::from_cut_point(z, 2, q)),
                (-1, FlattenedNumber::from_cut_point(z, 2, q - 1)),
            ]);
            assert!((other - curly(&z, 2)).eval_lhat().norm() < 1e-12);
        }
    }

    #[test]
    fn kappa_is_order_two() {
        let k = kappa_hat::<f64>().eval_lhat();
        assert!(k.approx_eq(&CmodZ2::new(c(-2.0 * PI * PI, 0.0)), 1e-12));
        assert!(k.norm() > 19.0);
        assert!((kappa_hat::<f64>() * 2).eval_lhat().norm() < 1e-12);
        for (z, p) in [(pt(0.0, 1.0), 1), (pt(-3.0, 0.0), -2), (pt(0.2, -5.0), 7)] {
            let v = kappa_hat_at(&z, p).eval_lhat();
            assert!(v.approx_eq(&k, 1e-11), "{v}");
        }
    }

    #[test]
    fn chi_examples() {
        assert!(chi_hat(c(1.0, 0.0)).unwrap().is_empty());
        assert_eq!(chi_hat(c(-1.0, 0.0)).unwrap(), kappa_hat());
        let minus_one = CutPoint::real(-1.0, Side::Above).unwrap();
        assert_eq!(chi_hat(c(0.0, 1.0)).unwrap(), curly(&minus_one, 0));
        assert_eq!(chi_hat(c(0.0, -1.0)).unwrap(), curly(&minus_one, 1));
        assert!(matches!(chi_hat(c(0.0, 0.0)), Err(Error::ZeroArgument)));
    }

    #[test]
    fn chi_composed_with_l_hat() {
        // L̂ ∘ χ̂ = 2πi Log z
        for &(re, im) in &[(0.7, 0.2), (-0.3, 1.0), (-2.0, -0.5), (0.0, -3.0), (-4.0, 0.0)] {
            let z = c(re, im);
            let v = chi_hat(z).unwrap().eval_lhat();
            let expect = CmodZ2::new(c(0.0, 2.0 * PI) * z.ln());
            assert!(v.approx_eq(&expect, 1e-11), "{z}: {v} vs {expect}");
        }
    }

    #[test]
    fn chi_homomorphism_examples() {
        let i = c(0.0, 1.0);
        assert!(check_chi_homomorphism(i, i).unwrap().norm() < 1e-12);
        assert!(check_chi_homomorphism(c(1.0, 0.0), c(0.3, -2.0)).unwrap().norm() < 1e-12);
        for k in 0..12 {
            let z = Complex::from_polar(1.0, 0.5 * k as f64);
            let w = Complex::from_polar(1.0, 2.0 + 0.3 * k as f64);
            assert!(check_chi_homomorphism(z, w).unwrap().norm() < 1e-11);
        }
    }

    #[test]
    fn splitting_examples() {
        let z = Complex::from_polar(0.7, 0.3);
        assert!((splitting(&chi_hat(z).unwrap()) - z).norm() < 1e-14);
        assert_eq!(splitting(&FormalSum::<f64>::new()), c(1.0, 0.0));
        assert!((splitting(&kappa_hat::<f64>()) - c(-1.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn square_index_period() {
        // {z²;2p+4} = {z²;2p}
        let z = pt(-0.4, 0.9);
        let sq = CutPoint::plus_zero(z.z() * z.z()).unwrap();
        for p in -3..3 {
            assert!((curly(&sq, p + 2) - curly(&sq, p)).eval_lhat().norm() < 1e-11);
        }
    }

    #[test]
    fn roots_of_unity() {
        // L̂(χ̂(e^{2πiα})) = -4π²α mod 4π²
        for (n, d) in [(1, 2), (1, 3), (2, 3), (1, 4), (3, 4), (1, 6), (5, 6), (1, 12)] {
            let alpha = n as f64 / d as f64;
            let v = chi_hat(Complex::from_polar(1.0, 2.0 * PI * alpha)).unwrap().eval_lhat();
            let expect = CmodZ2::new(c(-4.0 * PI * PI * alpha, 0.0));
            assert!(v.approx_eq(&expect, 1e-10), "{n}/{d}: {v}");
        }
    }
}
