//! Formal sums over the cover and the relations of the extended pre-Bloch
//! group.
//!
//! Equality in the pre-Bloch group is not decided here. Every relation is
//! produced as a [`FormalSum`] `LHS - RHS` and verified through the
//! homomorphism [`FormalSum::eval_lhat`], which is injective on the part of the
//! group where the relations differ from the classical ones.

mod kernel;
mod relations;
mod symmetry;

pub use kernel::{check_chi_homomorphism, chi_hat, curly, kappa_hat, kappa_hat_at, splitting};
pub use relations::{
    arg_case, curly_product_relation, cycle_relation, five_term_element, index_decomposition,
    index_relation, mirror_relation, IndexRelation,
};
pub use symmetry::{root4, symmetry_relation, SymmetryRelation};

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::cover::FlattenedNumber;
use crate::rogers::{rogers_l_bar_with, CmodZ2, IndexReading};
use crate::scalar::{CompensatedSum, Real};

/// Integer combination of generators `[z; 2p, 2q]`.
///
/// Generators are kept in canonical form, like generators are merged and
/// zero coefficients dropped. Term order is the order of first insertion.
#[derive(Clone, Debug, PartialEq)]
pub struct FormalSum<T: Real> {
    terms: Vec<(i64, FlattenedNumber<T>)>,
}

impl<T: Real> Default for FormalSum<T> {
    fn default() -> Self {
        FormalSum { terms: Vec::new() }
    }
}

impl<T: Real> FormalSum<T> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn generator(f: FlattenedNumber<T>) -> Self {
        let mut s = Self::new();
        s.push(1, f);
        s
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, FlattenedNumber<T>)>) -> Self {
        let mut s = Self::new();
        for (c, f) in terms {
            s.push(c, f);
        }
        s
    }

    pub fn push(&mut self, coeff: i64, f: FlattenedNumber<T>) {
        if coeff == 0 {
            return;
        }
        match self.terms.iter().position(|(_, g)| *g == f) {
            Some(i) => {
                self.terms[i].0 += coeff;
                if self.terms[i].0 == 0 {
                    self.terms.remove(i);
                }
            }
            None => self.terms.push((coeff, f)),
        }
    }

    pub fn terms(&self) -> &[(i64, FlattenedNumber<T>)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Σ coeff · L̂(generator)` in `C/4π²Z`.
    pub fn eval_lhat(&self) -> CmodZ2<T> {
        self.eval_lhat_with(IndexReading::HalfIndex)
    }

    pub fn eval_lhat_with(&self, reading: IndexReading) -> CmodZ2<T> {
        let acc: CompensatedSum<T> = self
            .terms
            .iter()
            .map(|(c, f)| rogers_l_bar_with(f, reading) * T::from_i64(*c))
            .collect();
        CmodZ2::new(acc.value())
    }

    /// Parse `coeff z_re z_im side p q` lines; `#` starts a comment.
    pub fn parse(text: &str) -> crate::Result<Self> {
        let mut s = Self::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let parse_err = |message: String| crate::Error::Parse { line: n + 1, message };
            if fields.len() != 6 {
                return Err(parse_err(format!(
                    "expected 6 fields `coeff z_re z_im side p q`, got {}",
                    fields.len()
                )));
            }
            let coeff = fields[0]
                .parse::<i64>()
                .map_err(|e| parse_err(format!("bad coefficient `{}`: {e}", fields[0])))?;
            let f = FlattenedNumber::parse_fields(&fields[1..]).map_err(parse_err)?;
            s.push(coeff, f);
        }
        Ok(s)
    }
}

/// One `coeff z_re z_im side p q` line per term.
impl<T: Real> fmt::Display for FormalSum<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (c, g) in &self.terms {
            writeln!(f, "{c} {g}")?;
        }
        Ok(())
    }
}

impl<T: Real> AddAssign<&FormalSum<T>> for FormalSum<T> {
    fn add_assign(&mut self, rhs: &FormalSum<T>) {
        for (c, f) in &rhs.terms {
            self.push(*c, *f);
        }
    }
}

impl<T: Real> SubAssign<&FormalSum<T>> for FormalSum<T> {
    fn sub_assign(&mut self, rhs: &FormalSum<T>) {
        for (c, f) in &rhs.terms {
            self.push(-*c, *f);
        }
    }
}

impl<T: Real> Add for FormalSum<T> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += &rhs;
        self
    }
}

impl<T: Real> Sub for FormalSum<T> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        self -= &rhs;
        self
    }
}

impl<T: Real> Neg for FormalSum<T> {
    type Output = Self;
    fn neg(self) -> Self {
        self * -1
    }
}

impl<T: Real> Mul<i64> for FormalSum<T> {
    type Output = Self;
    fn mul(self, k: i64) -> Self {
        if k == 0 {
            return Self::new();
        }
        FormalSum {
            terms: self.terms.into_iter().map(|(c, f)| (c * k, f)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dilog::Side;
    use num_complex::Complex;
    use std::f64::consts::PI;

    fn half(p: i64, q: i64) -> FlattenedNumber<f64> {
        FlattenedNumber::interior(Complex::new(0.5, 0.0), p, q).unwrap()
    }

    #[test]
    fn merging_and_pruning() {
        let mut s = FormalSum::new();
        s.push(2, half(0, 0));
        s.push(3, half(1, 0));
        s.push(-2, half(0, 0));
        assert_eq!(s.len(), 1);
        assert_eq!(s.terms()[0], (3, half(1, 0)));
        // below-side input is merged with its canonical twin
        let a = FlattenedNumber::canonicalize(Complex::new(-2.0, 0.0), Side::Above, 0, 0).unwrap();
        let b = FlattenedNumber::canonicalize(Complex::new(-2.0, 0.0), Side::Below, 1, 0).unwrap();
        let t = FormalSum::from_terms([(1, a), (-1, b)]);
        assert!(t.is_empty());
    }

    #[test]
    fn eval_examples() {
        assert_eq!(FormalSum::<f64>::new().eval_lhat(), CmodZ2::zero());
        let v = FormalSum::generator(half(0, 0)).eval_lhat();
        assert!((v.value() - Complex::new(-PI * PI / 12.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn arithmetic() {
        let a = FormalSum::generator(half(0, 0));
        let b = FormalSum::generator(half(0, 1));
        let s = a.clone() * 3 - b.clone() + a.clone();
        assert_eq!(s.terms(), &[(4, half(0, 0)), (-1, half(0, 1))]);
        assert!((s.clone() - s.clone()).is_empty());
        assert!((-(a.clone()) + a).is_empty());
        #[allow(clippy::erasing_op)]
        let zero = b * 0;
        assert!(zero.is_empty());
    }

    #[test]
    fn text_round_trip() {
        let s = FormalSum::from_terms([(2, half(1, -1)), (-3, half(0, 4))]);
        let text = s.to_string();
        assert_eq!(text, "2 0.5 0 i 1 -1\n-3 0.5 0 i 0 4\n");
        assert_eq!(FormalSum::<f64>::parse(&text).unwrap(), s);
        let err = FormalSum::<f64>::parse("# c\n1 0.5 0 i 0\n").unwrap_err();
        assert!(matches!(err, crate::Error::Parse { line: 2, .. }));
    }
}
