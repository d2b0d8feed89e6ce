//! Complex volume of flattened triangulations.
//!
//! The input is the image of the fundamental class as a signed list of
//! flattened shapes, one simplex per line:
//!
//! ```text
//! name: figure-eight
//! # sign z_re z_im side p q
//! 1 0.5 0.8660254037844386 i 0 0
//! 1 0.5 0.8660254037844386 i 0 0
//! ```
//!
//! `side` is `i` (interior) or `a` (real point on a cut, upper side). Gluing
//! consistency of the flattenings is not checked.

use std::fmt;
use std::io::BufRead;

use num_complex::Complex;
use rayon::prelude::*;
use serde::Serialize;

use crate::cover::{parse_real, FlattenedNumber};
use crate::dilog::Side;
use crate::error::{Error, Result};
use crate::prebloch::FormalSum;
use crate::rogers::{rogers_l_bar, CmodTransfer, CmodZ2};
use crate::scalar::{exp, two_pi_i, CompensatedSum, Real};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Simplex<T: Real> {
    pub sign: i64,
    pub shape: FlattenedNumber<T>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FlattenedTriangulation<T: Real> {
    pub name: Option<String>,
    simplices: Vec<Simplex<T>>,
}

impl<T: Real> FlattenedTriangulation<T> {
    pub fn new(name: Option<String>, simplices: Vec<Simplex<T>>) -> Result<Self> {
        if simplices.is_empty() {
            return Err(Error::EmptyInput);
        }
        if let Some(i) = simplices.iter().position(|s| s.sign.abs() != 1) {
            return Err(Error::Validation {
                index: i,
                line: 0,
                message: format!("sign must be +1 or -1, got {}", simplices[i].sign),
            });
        }
        Ok(FlattenedTriangulation { name, simplices })
    }

    pub fn simplices(&self) -> &[Simplex<T>] {
        &self.simplices
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::load(text.as_bytes())
    }

    pub fn load<R: BufRead>(reader: R) -> Result<Self> {
        let mut name = None;
        let mut simplices = Vec::new();
        for (n, line) in reader.lines().enumerate() {
            let line = line?;
            let lineno = n + 1;
            let body = line.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            if let Some(rest) = body.strip_prefix("name:") {
                name = Some(rest.trim().to_string());
                continue;
            }
            let parse_err = |message: String| Error::Parse { line: lineno, message };
            let f: Vec<&str> = body.split_whitespace().collect();
            if f.len() != 6 {
                return Err(parse_err(format!(
                    "expected 6 fields `sign z_re z_im side p q`, got {}",
                    f.len()
                )));
            }
            let sign = match f[0] {
                "1" | "+1" => 1,
                "-1" => -1,
                s => return Err(parse_err(format!("sign must be +1 or -1, got `{s}`"))),
            };
            let re: T = parse_real(f[1]).map_err(parse_err)?;
            let im: T = parse_real(f[2]).map_err(parse_err)?;
            let p = f[4].parse::<i64>().map_err(|e| parse_err(format!("bad p `{}`: {e}", f[4])))?;
            let q = f[5].parse::<i64>().map_err(|e| parse_err(format!("bad q `{}`: {e}", f[5])))?;
            let index = simplices.len();
            let invalid = |message: String| Error::Validation { index, line: lineno, message };
            let side = match f[3] {
                "i" => Side::Interior,
                "a" => Side::Above,
                s => return Err(invalid(format!("side must be `i` or `a`, got `{s}`"))),
            };
            let shape = FlattenedNumber::canonicalize(Complex::new(re, im), side, p, q)
                .map_err(|e| invalid(e.to_string()))?;
            simplices.push(Simplex { sign, shape });
        }
        Self::new(name, simplices)
    }

    /// The shapes as a formal sum.
    pub fn to_formal_sum(&self) -> FormalSum<T> {
        FormalSum::from_terms(self.simplices.iter().map(|s| (s.sign, s.shape)))
    }

    /// `t` followed by the simplices of `other`.
    pub fn concat(&self, other: &Self) -> Self {
        let mut simplices = self.simplices.clone();
        simplices.extend_from_slice(&other.simplices);
        FlattenedTriangulation { name: self.name.clone(), simplices }
    }

    /// All signs flipped.
    pub fn negated(&self) -> Self {
        let simplices = self
            .simplices
            .iter()
            .map(|s| Simplex { sign: -s.sign, shape: s.shape })
            .collect();
        FlattenedTriangulation { name: self.name.clone(), simplices }
    }
}

/// Same line format as the input.
impl<T: Real> fmt::Display for FlattenedTriangulation<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(name) = &self.name {
            writeln!(f, "name: {name}")?;
        }
        for s in &self.simplices {
            writeln!(f, "{} {}", s.sign, s.shape)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CcsReport<T: Real> {
    pub name: Option<String>,
    pub simplices: usize,
    /// `Σ sign · L̂(shape)`.
    pub value: CmodZ2<T>,
    /// The same value in `C/2π²Z`.
    pub mod_2pi2: CmodTransfer<T>,
    /// `exp(value / 2πi)`.
    pub split: Complex<T>,
}

/// Evaluate `Σ sign · L̂(shape)`.
///
/// Terms are computed in parallel and summed in input order, so the result
/// does not depend on scheduling.
pub fn complex_volume<T: Real>(t: &FlattenedTriangulation<T>) -> CcsReport<T> {
    let terms: Vec<Complex<T>> = t
        .simplices
        .par_iter()
        .map(|s| rogers_l_bar(&s.shape) * T::from_i64(s.sign))
        .collect();
    let sum: CompensatedSum<T> = terms.into_iter().collect();
    let value = CmodZ2::new(sum.value());
    CcsReport {
        name: t.name.clone(),
        simplices: t.simplices.len(),
        value,
        mod_2pi2: value.reduce_mod_transfer(),
        split: exp(value.value() / two_pi_i::<T>()),
    }
}

/// Flat record of a [`CcsReport`] for structured output.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CcsRecord {
    pub name: Option<String>,
    pub precision: &'static str,
    pub simplices: usize,
    pub value_re: f64,
    pub value_im: f64,
    pub value_mod_2pi2_re: f64,
    pub value_mod_2pi2_im: f64,
    pub split_re: f64,
    pub split_im: f64,
}

impl<T: Real> CcsReport<T> {
    pub fn record(&self) -> CcsRecord {
        CcsRecord {
            name: self.name.clone(),
            precision: T::NAME,
            simplices: self.simplices,
            value_re: self.value.re().to_f64(),
            value_im: self.value.im().to_f64(),
            value_mod_2pi2_re: self.mod_2pi2.value().re.to_f64(),
            value_mod_2pi2_im: self.mod_2pi2.value().im.to_f64(),
            split_re: self.split.re.to_f64(),
            split_im: self.split.im.to_f64(),
        }
    }
}

impl<T: Real> fmt::Display for CcsReport<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(name) = &self.name {
            writeln!(f, "name: {name}")?;
        }
        writeln!(f, "simplices: {}", self.simplices)?;
        writeln!(f, "value: {}", self.value)?;
        writeln!(f, "value mod 2pi^2: {}", self.mod_2pi2)?;
        writeln!(f, "split: {} {}", self.split.re, self.split.im)?;
        writeln!(f, "note: the imaginary part is the volume contribution; no sign convention is applied")
    }
}
