//! The map `ν̂` into `C ∧_Z C` and a numerical vanishing test.
//!
//! `C ∧_Z C` has torsion that floating point cannot see, so vanishing can
//! only be refuted here, never certified. [`wedge_necessary_zero`] says so in
//! its result.

use std::cmp::Ordering;
use std::fmt;

use num_complex::Complex;
use num_traits::Zero;

use crate::cover::parse_real;
use crate::error::{Error, Result};
use crate::prebloch::FormalSum;
use crate::scalar::{two_pi_i, CompensatedSum, Real};

/// Integer combination of wedges `a ∧ b`, kept in normal form: no term with
/// `a = b` or a zero factor, `a < b` in the `(Re, Im)` order, like terms
/// merged.
#[derive(Clone, Debug, PartialEq)]
pub struct WedgeExpr<T: Real> {
    terms: Vec<(i64, Complex<T>, Complex<T>)>,
}

impl<T: Real> Default for WedgeExpr<T> {
    fn default() -> Self {
        WedgeExpr { terms: Vec::new() }
    }
}

fn lex<T: Real>(a: &Complex<T>, b: &Complex<T>) -> Ordering {
    a.re.partial_cmp(&b.re)
        .unwrap_or(Ordering::Equal)
        .then(a.im.partial_cmp(&b.im).unwrap_or(Ordering::Equal))
}

impl<T: Real> WedgeExpr<T> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, Complex<T>, Complex<T>)>) -> Self {
        let mut w = Self::new();
        for (c, a, b) in terms {
            w.push(c, a, b);
        }
        w
    }

    /// Add `coeff · a ∧ b`.
    pub fn push(&mut self, coeff: i64, a: Complex<T>, b: Complex<T>) {
        self.push_merging(coeff, a, b, T::zero());
    }

    fn push_merging(&mut self, coeff: i64, a: Complex<T>, b: Complex<T>, tol: T) {
        if coeff == 0 || a == b || a.is_zero() || b.is_zero() {
            return;
        }
        let (c, a, b) = match lex(&a, &b) {
            Ordering::Greater => (-coeff, b, a),
            _ => (coeff, a, b),
        };
        let close = |u: Complex<T>, v: Complex<T>| {
            let d = u - v;
            d.re.abs() <= tol && d.im.abs() <= tol
        };
        match self.terms.iter().position(|t| close(t.1, a) && close(t.2, b)) {
            Some(i) => {
                self.terms[i].0 += c;
                if self.terms[i].0 == 0 {
                    self.terms.remove(i);
                }
            }
            None => {
                let at = self
                    .terms
                    .partition_point(|t| lex(&t.1, &a).then(lex(&t.2, &b)) == Ordering::Less);
                self.terms.insert(at, (c, a, b));
            }
        }
    }

    pub fn terms(&self) -> &[(i64, Complex<T>, Complex<T>)] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Swap the factors of every term.
    pub fn transposed(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|&(c, a, b)| (c, b, a)))
    }

    /// `Σ c · (Re a · Im b - Im a · Re b)`, a Z-bilinear antisymmetric form,
    /// so it vanishes on every zero of `C ∧_Z C`.
    pub fn pairing(&self) -> T {
        let s: CompensatedSum<T> = self
            .terms
            .iter()
            .map(|&(c, a, b)| Complex::new((a.re * b.im - a.im * b.re) * T::from_i64(c), T::zero()))
            .collect();
        s.value().re
    }

    /// Split every factor as `u + 2πi·k` with `Im u ∈ (-π, π]`, expand
    /// bilinearly and merge terms whose factors agree within `tol`.
    pub fn reduce_periods(&self, tol: T) -> Self {
        let tau = two_pi_i::<T>();
        let split = |a: Complex<T>| {
            let k = (a.im / T::two_pi()).round_to_i64();
            (a - tau * T::from_i64(k), k)
        };
        let mut out = Self::new();
        for &(c, a, b) in &self.terms {
            let (a0, ka) = split(a);
            let (b0, kb) = split(b);
            out.push_merging(c, a0, b0, tol);
            out.push_merging(c * kb, a0, tau, tol);
            out.push_merging(c * ka, tau, b0, tol);
        }
        out
    }

    /// Parse `coeff a_re a_im b_re b_im` lines; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut w = Self::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| Error::Parse { line: n + 1, message };
            let f: Vec<&str> = line.split_whitespace().collect();
            if f.len() != 5 {
                return Err(err(format!("expected 5 fields `coeff a_re a_im b_re b_im`, got {}", f.len())));
            }
            let c = f[0].parse::<i64>().map_err(|e| err(format!("bad coefficient `{}`: {e}", f[0])))?;
            let num = |s: &str| parse_real::<T>(s).map_err(err);
            w.push(c, Complex::new(num(f[1])?, num(f[2])?), Complex::new(num(f[3])?, num(f[4])?));
        }
        Ok(w)
    }
}

/// One `coeff a_re a_im b_re b_im` line per term.
impl<T: Real> fmt::Display for WedgeExpr<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (c, a, b) in &self.terms {
            writeln!(f, "{c} {} {} {} {}", a.re, a.im, b.re, b.im)?;
        }
        Ok(())
    }
}

/// `ν̂(Σ c [z;2p,2q]) = Σ c (Log z + 2πi p) ∧ (-Log(1-z) + 2πi q)`.
pub fn nu_hat<T: Real>(s: &FormalSum<T>) -> WedgeExpr<T> {
    WedgeExpr::from_terms(
        s.terms()
            .iter()
            .map(|(c, f)| (*c, f.log_param_l(), f.log_param_m())),
    )
}

/// Outcome of [`wedge_necessary_zero`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WedgeVerdict<T: Real> {
    /// No evidence against vanishing was found.
    pub passed: bool,
    /// The normal form is empty, so the expression is exactly zero.
    pub exact_zero: bool,
    /// Pairing of the expression as given.
    pub pairing: T,
    /// Pairing after [`WedgeExpr::reduce_periods`].
    pub reduced_pairing: T,
    /// Terms left after [`WedgeExpr::reduce_periods`].
    pub reduced_terms: usize,
}

impl<T: Real> WedgeVerdict<T> {
    /// A pass that is only a necessary condition.
    pub fn heuristic(&self) -> bool {
        self.passed && !self.exact_zero
    }

    pub fn max_pairing(&self) -> T {
        self.pairing.abs().max_of(self.reduced_pairing.abs())
    }
}

/// Passes if `w` is empty, or if both pairings are within `tol`.
/// A failure proves `w ≠ 0` in `C ∧_Z C`; a heuristic pass proves nothing.
pub fn wedge_necessary_zero<T: Real>(w: &WedgeExpr<T>, tol: T) -> WedgeVerdict<T> {
    let reduced = w.reduce_periods(tol);
    let pairing = w.pairing();
    let reduced_pairing = reduced.pairing();
    let exact_zero = w.is_empty() || reduced.is_empty();
    WedgeVerdict {
        passed: exact_zero || (pairing.abs() <= tol && reduced_pairing.abs() <= tol),
        exact_zero,
        pairing,
        reduced_pairing,
        reduced_terms: reduced.len(),
    }
}
