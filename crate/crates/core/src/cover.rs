//! Points of the universal abelian cover of `C ∖ {0, 1}` and flattened
//! five-term tuples.
//!
//! A [`FlattenedNumber`] stores the generator `[z; 2p, 2q]` through the plain
//! integers `p` and `q`; the even labels only appear when printing. The two
//! holomorphic coordinates of the cover are
//!
//! ```text
//! l = Log z + 2πi·p        m = -Log(1 - z) + 2πi·q
//! ```

use std::fmt;

use num_complex::Complex;
use num_traits::One;

use crate::dilog::{log_one_minus, principal_log, CutPoint, Side};
use crate::error::{Error, Result};
use crate::scalar::{modulus, two_pi_i, Real};

/// Default tolerance for geometric equations.
pub const DEFAULT_TOL: f64 = 1e-9;

/// A point `(z; 2p, 2q)` of the cover, always held in canonical form
/// (never tagged [`Side::Below`]).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FlattenedNumber<T: Real> {
    base: CutPoint<T>,
    p: i64,
    q: i64,
}

impl<T: Real> FlattenedNumber<T> {
    /// Canonical representative of the class of `(z ± 0i; 2p, 2q)`.
    ///
    /// Below-side points are rewritten with the gluing identifications:
    /// `(x-0i; 2p, 2q) = (x+0i; 2p-2, 2q)` for `x < 0` and
    /// `(x-0i; 2p, 2q) = (x+0i; 2p, 2q-2)` for `x > 1`.
    pub fn canonicalize(z: Complex<T>, side: Side, p: i64, q: i64) -> Result<Self> {
        let base = CutPoint::new(z, side)?;
        Ok(Self::from_cut_point(base, p, q))
    }

    pub fn from_cut_point(base: CutPoint<T>, p: i64, q: i64) -> Self {
        if base.side() != Side::Below {
            return FlattenedNumber { base, p, q };
        }
        let above = CutPoint::new(base.z(), Side::Above).expect("below-side point is on the cut");
        if base.z().re < T::zero() {
            FlattenedNumber { base: above, p: p - 1, q }
        } else {
            FlattenedNumber { base: above, p, q: q - 1 }
        }
    }

    /// Interior point with the given indices.
    pub fn interior(z: Complex<T>, p: i64, q: i64) -> Result<Self> {
        Self::canonicalize(z, Side::Interior, p, q)
    }

    /// `(z + 0i; 2p, 2q)`.
    pub fn plus_zero(z: Complex<T>, p: i64, q: i64) -> Result<Self> {
        Ok(Self::from_cut_point(CutPoint::plus_zero(z)?, p, q))
    }

    pub fn base(&self) -> &CutPoint<T> {
        &self.base
    }

    pub fn z(&self) -> Complex<T> {
        self.base.z()
    }

    pub fn side(&self) -> Side {
        self.base.side()
    }

    /// Half of the first even label.
    pub fn p(&self) -> i64 {
        self.p
    }

    /// Half of the second even label.
    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn with_indices(&self, p: i64, q: i64) -> Self {
        FlattenedNumber { p, q, ..*self }
    }

    /// `Log z + 2πi·p`.
    pub fn log_param_l(&self) -> Complex<T> {
        principal_log(&self.base) + two_pi_i::<T>() * T::from_i64(self.p)
    }

    /// `-Log(1 - z) + 2πi·q`.
    pub fn log_param_m(&self) -> Complex<T> {
        -log_one_minus(&self.base) + two_pi_i::<T>() * T::from_i64(self.q)
    }

    /// Same class, written the way it prints in the literature: `(z; 2p, 2q)`.
    pub fn label(&self) -> String {
        let z = match self.side() {
            Side::Interior => self.z().to_string(),
            side => format!("{}{}", self.z().re, side_suffix(side)),
        };
        format!("({z}; {}, {})", 2 * self.p, 2 * self.q)
    }

    /// Parse the `z_re z_im side p q` record (p, q are the halved indices).
    pub fn parse_fields(fields: &[&str]) -> std::result::Result<Self, String> {
        if fields.len() != 5 {
            return Err(format!("expected 5 fields `z_re z_im side p q`, got {}", fields.len()));
        }
        let re = parse_real::<T>(fields[0])?;
        let im = parse_real::<T>(fields[1])?;
        let side = Side::from_tag(fields[2]).ok_or_else(|| format!("unknown side tag `{}`", fields[2]))?;
        let p = fields[3].parse::<i64>().map_err(|e| format!("bad p `{}`: {e}", fields[3]))?;
        let q = fields[4].parse::<i64>().map_err(|e| format!("bad q `{}`: {e}", fields[4]))?;
        Self::canonicalize(Complex::new(re, im), side, p, q).map_err(|e| e.to_string())
    }
}

fn side_suffix(side: Side) -> &'static str {
    match side {
        Side::Interior => "",
        Side::Above => "+0i",
        Side::Below => "-0i",
    }
}

/// Parse a decimal real into any scalar type.
pub fn parse_real<T: Real>(s: &str) -> std::result::Result<T, String> {
    let x: f64 = s.parse().map_err(|e| format!("bad number `{s}`: {e}"))?;
    if !x.is_finite() {
        return Err(format!("non-finite number `{s}`"));
    }
    // Decimal strings that are exact in T (e.g. 0.1 in f256) go through the
    // type's own parser.
    Ok(T::from_str_radix(s, 10).unwrap_or_else(|_| T::from_f64(x)))
}

/// `z_re z_im side p q`.
impl<T: Real> fmt::Display for FlattenedNumber<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.base, self.p, self.q)
    }
}

/// The five cross-ratios `(x, y, y/x, (1-1/x)/(1-1/y), (1-x)/(1-y))`.
pub fn five_term_projections<T: Real>(x: Complex<T>, y: Complex<T>) -> [Complex<T>; 5] {
    let one = Complex::<T>::one();
    [
        x,
        y,
        y / x,
        (one - x.inv()) / (one - y.inv()),
        (one - x) / (one - y),
    ]
}

/// A five-tuple of flattened numbers in the lifted five-term set.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FlattenedFT<T: Real> {
    entries: [FlattenedNumber<T>; 5],
}

impl<T: Real> FlattenedFT<T> {
    /// Validate an externally produced tuple.
    pub fn new(entries: [FlattenedNumber<T>; 5], tol: T) -> Result<Self> {
        if is_flattened_ft(&entries, tol) {
            Ok(FlattenedFT { entries })
        } else {
            Err(Error::NotFlattenedFt)
        }
    }

    pub fn entries(&self) -> &[FlattenedNumber<T>; 5] {
        &self.entries
    }

    pub fn into_entries(self) -> [FlattenedNumber<T>; 5] {
        self.entries
    }
}

/// The chart of flattened tuples over `FT⁺`:
///
/// ```text
/// (x; 2p₀, 2q₀), (y; 2p₁, 2q₁), (y/x; 2(p₁-p₀), 2q₂),
/// (z₃; 2(p₁-p₀+q₁-q₀), 2(q₂-q₁)), (z₄; 2(q₁-q₀), 2(q₂-q₁-p₀))
/// ```
///
/// All five projections must have strictly positive imaginary part.
pub fn make_flattened_ft<T: Real>(
    x: Complex<T>,
    y: Complex<T>,
    p0: i64,
    p1: i64,
    q0: i64,
    q1: i64,
    q2: i64,
) -> Result<FlattenedFT<T>> {
    if x == y {
        return Err(Error::NotInFtPlus("x = y".into()));
    }
    let z = five_term_projections(x, y);
    if let Some((k, zk)) = z.iter().enumerate().find(|(_, zk)| !(zk.im > T::zero()) || !zk.re.is_finite()) {
        return Err(Error::NotInFtPlus(format!("Im z{k} = {} is not positive", zk.im)));
    }
    let idx = [
        (p0, q0),
        (p1, q1),
        (p1 - p0, q2),
        (p1 - p0 + q1 - q0, q2 - q1),
        (q1 - q0, q2 - q1 - p0),
    ];
    let mut entries = [FlattenedNumber::interior(x, 0, 0)?; 5];
    for k in 0..5 {
        entries[k] = FlattenedNumber::interior(z[k], idx[k].0, idx[k].1)?;
    }
    Ok(FlattenedFT { entries })
}

fn near<T: Real>(a: Complex<T>, b: Complex<T>, tol: T) -> bool {
    let scale = T::one().max_of(modulus(a)).max_of(modulus(b));
    modulus(a - b) <= tol * scale
}

/// Membership test for the lifted five-term set.
///
/// Checks the projected five-term equations and the five linear identities
/// between log-parameters that hold on the whole connected component:
///
/// ```text
/// l₂ = l₁ - l₀        l₃ = l₁ - l₀ + m₁ - m₀      l₄ = m₁ - m₀
/// m₃ = m₂ - m₁        m₄ = m₂ - m₁ - l₀
/// ```
pub fn is_flattened_ft<T: Real>(t: &[FlattenedNumber<T>; 5], tol: T) -> bool {
    let x = t[0].z();
    let y = t[1].z();
    if near(x, y, tol) {
        return false;
    }
    let proj = five_term_projections(x, y);
    if !(2..5).all(|k| near(t[k].z(), proj[k], tol)) {
        return false;
    }
    let l: Vec<_> = t.iter().map(|f| f.log_param_l()).collect();
    let m: Vec<_> = t.iter().map(|f| f.log_param_m()).collect();
    near(l[2], l[1] - l[0], tol)
        && near(l[3], l[1] - l[0] + m[1] - m[0], tol)
        && near(l[4], m[1] - m[0], tol)
        && near(m[3], m[2] - m[1], tol)
        && near(m[4], m[2] - m[1] - l[0], tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    fn close(a: Complex<f64>, b: Complex<f64>) -> bool {
        (a - b).norm() < 1e-14
    }

    #[test]
    fn canonicalize_examples() {
        let f = FlattenedNumber::canonicalize(c(-2.0, 0.0), Side::Below, 3, 0).unwrap();
        assert_eq!((f.side(), f.p(), f.q()), (Side::Above, 2, 0));
        let g = FlattenedNumber::canonicalize(c(2.0, 0.0), Side::Below, 0, 5).unwrap();
        assert_eq!((g.side(), g.p(), g.q()), (Side::Above, 0, 4));
        let h = FlattenedNumber::canonicalize(c(0.5, 0.5), Side::Interior, 1, 1).unwrap();
        assert_eq!((h.z(), h.side(), h.p(), h.q()), (c(0.5, 0.5), Side::Interior, 1, 1));
    }

    #[test]
    fn canonicalize_rejects_bad_points() {
        assert!(FlattenedNumber::canonicalize(c(0.0, 0.0), Side::Interior, 0, 0).is_err());
        assert!(FlattenedNumber::canonicalize(c(1.0, 0.0), Side::Above, 0, 0).is_err());
        assert!(FlattenedNumber::canonicalize(c(0.5, 0.0), Side::Above, 0, 0).is_err());
        assert!(FlattenedNumber::canonicalize(c(-1.0, 0.0), Side::Interior, 0, 0).is_err());
    }

    #[test]
    fn log_param_examples() {
        let ln2 = 2f64.ln();
        let f = FlattenedNumber::interior(c(0.5, 0.0), 0, 0).unwrap();
        assert!(close(f.log_param_l(), c(-ln2, 0.0)));
        assert!(close(f.log_param_m(), c(ln2, 0.0)));
        assert!(close(f.with_indices(1, 0).log_param_l(), c(-ln2, 2.0 * PI)));
        assert!(close(f.with_indices(0, 2).log_param_m(), c(ln2, 4.0 * PI)));
        let a = FlattenedNumber::canonicalize(c(-2.0, 0.0), Side::Above, 0, 0).unwrap();
        assert!(close(a.log_param_l(), c(ln2, PI)));
        let b = FlattenedNumber::canonicalize(c(2.0, 0.0), Side::Above, 0, 0).unwrap();
        assert!(close(b.log_param_m(), c(0.0, PI)));
    }

    #[test]
    fn ft_chart_indices() {
        let t = make_flattened_ft(c(0.3, 0.2), c(0.0, 1.0), 1, 0, 0, 0, 0).unwrap();
        let idx: Vec<_> = t.entries().iter().map(|f| (f.p(), f.q())).collect();
        assert_eq!(idx, vec![(1, 0), (0, 0), (-1, 0), (-1, 0), (0, -1)]);
        let t0 = make_flattened_ft(c(0.3, 0.2), c(0.0, 1.0), 0, 0, 0, 0, 0).unwrap();
        assert!(t0.entries().iter().all(|f| f.p() == 0 && f.q() == 0));
        assert!(is_flattened_ft(t.entries(), 1e-9));
    }

    #[test]
    fn ft_rejections() {
        assert!(matches!(
            make_flattened_ft(c(0.5, 0.0), c(0.6, 0.0), 0, 0, 0, 0, 0),
            Err(Error::NotInFtPlus(_))
        ));
        // x outside the triangle (0, 1, y)
        assert!(make_flattened_ft(c(0.9, 0.9), c(0.0, 1.0), 0, 0, 0, 0, 0).is_err());
        assert!(make_flattened_ft(c(0.3, 0.2), c(0.3, 0.2), 0, 0, 0, 0, 0).is_err());
    }

    #[test]
    fn membership_detects_index_tampering() {
        let t = make_flattened_ft(c(0.3, 0.2), c(0.0, 1.0), 2, -1, 3, 0, 1).unwrap();
        let mut e = t.into_entries();
        e[2] = e[2].with_indices(e[2].p(), e[2].q() + 1);
        assert!(!is_flattened_ft(&e, 1e-9));
        assert!(FlattenedFT::new(e, 1e-9).is_err());
    }

    #[test]
    fn membership_rejects_unrelated_points() {
        let pts = [c(0.3, 0.2), c(0.0, 1.0), c(2.0, 2.0), c(-1.0, 0.5), c(0.7, -0.3)];
        let e = pts.map(|z| FlattenedNumber::interior(z, 0, 0).unwrap());
        assert!(!is_flattened_ft(&e, 1e-9));
    }

    #[test]
    fn display_and_parse() {
        let f = FlattenedNumber::<f64>::parse_fields(&["-2", "0", "b", "3", "1"]).unwrap();
        assert_eq!(f.to_string(), "-2 0 a 2 1");
        assert_eq!(f.label(), "(-2+0i; 4, 2)");
        assert!(FlattenedNumber::<f64>::parse_fields(&["1", "0", "i", "0", "0"]).is_err());
        assert!(FlattenedNumber::<f64>::parse_fields(&["0.5", "0", "x", "0", "0"]).is_err());
    }
}
