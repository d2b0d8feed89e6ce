//! Seeded randomized sweeps over the relations.
//!
//! Sample `i` of a sweep draws from its own ChaCha stream `(seed, i)`, so a
//! report does not depend on thread scheduling and any single sample can be
//! regenerated in isolation.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bloch::{nu_hat, wedge_necessary_zero};
use crate::cover::{make_flattened_ft, FlattenedFT, DEFAULT_TOL};
use crate::dilog::{CutPoint, Side};
use crate::error::{Error, Result};
use crate::prebloch::{
    chi_hat, curly_product_relation, cycle_relation, five_term_element, index_relation,
    kappa_hat_at, mirror_relation, symmetry_relation, arg_case, FormalSum, IndexRelation,
    SymmetryRelation,
};
use crate::rogers::{CmodZ2, IndexReading};
use crate::scalar::{exp, principal_ln, two_pi_i, Real};

/// Relations a sweep can exercise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    FiveTerm,
    Cycle,
    Mirror,
    /// `{z;2p} + {w;2r} = {zw; 2(p+r+ε)}`.
    Homo,
    IndexQ,
    IndexP,
    IndexPQ,
    ChiHom,
    Symmetry(SymmetryRelation),
    Kappa,
    Splitting,
    /// `ν̂` of five-term elements.
    Wedge,
}

impl Relation {
    pub fn all() -> Vec<Relation> {
        let mut v = vec![
            Relation::FiveTerm,
            Relation::Cycle,
            Relation::Mirror,
            Relation::Homo,
            Relation::IndexQ,
            Relation::IndexP,
            Relation::IndexPQ,
            Relation::ChiHom,
        ];
        v.extend(SymmetryRelation::ALL.iter().map(|&s| Relation::Symmetry(s)));
        v.extend([Relation::Kappa, Relation::Splitting, Relation::Wedge]);
        v
    }

    pub fn name(&self) -> String {
        match self {
            Relation::FiveTerm => "five-term".into(),
            Relation::Cycle => "cycle".into(),
            Relation::Mirror => "mirror".into(),
            Relation::Homo => "homo".into(),
            Relation::IndexQ => "index-q".into(),
            Relation::IndexP => "index-p".into(),
            Relation::IndexPQ => "index-pq".into(),
            Relation::ChiHom => "chi-hom".into(),
            Relation::Symmetry(s) => s.to_string(),
            Relation::Kappa => "kappa".into(),
            Relation::Splitting => "splitting".into(),
            Relation::Wedge => "wedge".into(),
        }
    }

    /// Whether samples are spread evenly over the three argument cases.
    pub fn stratified(&self) -> bool {
        matches!(self, Relation::Cycle | Relation::Homo)
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for Relation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Relation::all()
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::UnknownRelation(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepConfig {
    pub relation: Relation,
    pub samples: usize,
    pub seed: u64,
    pub tol: f64,
    /// Indices are drawn from `[-index_bound, index_bound]`.
    pub index_bound: i64,
    pub reading: IndexReading,
    /// At most this many failing samples are echoed in the report.
    pub echo_limit: usize,
}

impl SweepConfig {
    pub fn new(relation: Relation) -> Self {
        SweepConfig {
            relation,
            samples: 500,
            seed: 0,
            tol: DEFAULT_TOL,
            index_bound: 5,
            reading: IndexReading::HalfIndex,
            echo_limit: 20,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.samples == 0 {
            return Err(Error::Degenerate("samples must be at least 1".into()));
        }
        if !(self.tol > 0.0) {
            return Err(Error::Degenerate(format!("tolerance must be positive, got {}", self.tol)));
        }
        if self.index_bound < 0 {
            return Err(Error::Degenerate(format!("index bound must be >= 0, got {}", self.index_bound)));
        }
        Ok(())
    }
}

/// A sample whose residual exceeded the tolerance or that could not be built.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Failure {
    pub index: usize,
    pub residual: Option<f64>,
    /// Parameters, then the formal sum in `coeff z_re z_im side p q` lines.
    pub input: String,
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepReport {
    pub relation: String,
    pub precision: &'static str,
    pub samples: usize,
    pub seed: u64,
    pub tol: f64,
    pub index_bound: i64,
    pub max_residual: f64,
    pub passed: bool,
    /// Samples per argument case (`-1`, `0`, `1`) for stratified relations.
    pub cases: BTreeMap<i64, usize>,
    pub failure_count: usize,
    pub failures: Vec<Failure>,
}

impl fmt::Display for SweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "relation: {}", self.relation)?;
        writeln!(f, "precision: {}", self.precision)?;
        writeln!(f, "samples: {}", self.samples)?;
        writeln!(f, "seed: {}", self.seed)?;
        writeln!(f, "index bound: {}", self.index_bound)?;
        writeln!(f, "tol: {:e}", self.tol)?;
        writeln!(f, "max residual: {:e}", self.max_residual)?;
        if !self.cases.is_empty() {
            let cases: Vec<String> = self.cases.iter().map(|(k, n)| format!("{k}:{n}")).collect();
            writeln!(f, "cases: {}", cases.join(" "))?;
        }
        for fail in &self.failures {
            match (&fail.error, fail.residual) {
                (Some(e), _) => writeln!(f, "failure {}: {e}", fail.index)?,
                (None, Some(r)) => writeln!(f, "failure {}: residual {r:e}", fail.index)?,
                (None, None) => writeln!(f, "failure {}", fail.index)?,
            }
            for line in fail.input.lines() {
                writeln!(f, "  {line}")?;
            }
        }
        let hidden = self.failure_count - self.failures.len();
        if hidden > 0 {
            writeln!(f, "({hidden} more failures not shown)")?;
        }
        writeln!(f, "result: {}", if self.passed { "pass" } else { "fail" })
    }
}

struct Outcome {
    residual: f64,
    case: Option<i64>,
    input: String,
}

/// Run the sweep described by `cfg` in scalar type `T`.
pub fn run_sweep<T: Real>(cfg: &SweepConfig) -> Result<SweepReport> {
    cfg.validate()?;
    let outcomes: Vec<Result<Outcome>> = (0..cfg.samples)
        .into_par_iter()
        .map(|i| sample::<T>(cfg, i))
        .collect();
    let mut max_residual = 0.0f64;
    let mut cases = BTreeMap::new();
    let mut failures = Vec::new();
    let mut failure_count = 0;
    for (index, out) in outcomes.into_iter().enumerate() {
        let failure = match out {
            Ok(o) => {
                if let Some(c) = o.case {
                    *cases.entry(c).or_insert(0) += 1;
                }
                if o.residual.is_nan() || o.residual > max_residual {
                    max_residual = if o.residual.is_nan() { f64::NAN } else { o.residual };
                }
                (!(o.residual <= cfg.tol)).then_some(Failure {
                    index,
                    residual: Some(o.residual),
                    input: o.input,
                    error: None,
                })
            }
            Err(e) => Some(Failure { index, residual: None, input: String::new(), error: Some(e.to_string()) }),
        };
        if let Some(fail) = failure {
            failure_count += 1;
            if failures.len() < cfg.echo_limit {
                failures.push(fail);
            }
        }
    }
    Ok(SweepReport {
        relation: cfg.relation.name(),
        precision: T::NAME,
        samples: cfg.samples,
        seed: cfg.seed,
        tol: cfg.tol,
        index_bound: cfg.index_bound,
        max_residual,
        passed: failure_count == 0,
        cases,
        failure_count,
        failures,
    })
}

/// The RNG for sample `index` of a sweep seeded with `seed`.
pub fn sample_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

fn c<T: Real>(z: Complex<f64>) -> Complex<T> {
    Complex::new(T::from_f64(z.re), T::from_f64(z.im))
}

fn index(rng: &mut ChaCha8Rng, bound: i64) -> i64 {
    rng.gen_range(-bound..=bound)
}

fn polar(r: f64, theta: f64) -> Complex<f64> {
    Complex::from_polar(r, theta)
}

/// Interior points of a box, plus real points on either cut, either side.
fn cut_point(rng: &mut ChaCha8Rng) -> (Complex<f64>, Side) {
    if rng.gen_bool(0.15) {
        let x = if rng.gen_bool(0.5) { rng.gen_range(-5.0..-0.05) } else { rng.gen_range(1.05..5.0) };
        let side = if rng.gen_bool(0.5) { Side::Above } else { Side::Below };
        (Complex::new(x, 0.0), side)
    } else {
        (Complex::new(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0)), Side::Interior)
    }
}

fn to_cut_point<T: Real>((z, side): (Complex<f64>, Side)) -> Result<CutPoint<T>> {
    CutPoint::new(c(z), side)
}

/// `(x, y)` with `y` in a box of the upper half plane and `x` inside the
/// triangle `(0, 1, y)`, at barycentric distance at least 0.05 from its
/// edges.
pub fn ft_plus_pair(rng: &mut ChaCha8Rng) -> (Complex<f64>, Complex<f64>) {
    let y = Complex::new(rng.gen_range(-2.0..3.0), rng.gen_range(0.1..3.0));
    let e: [f64; 3] = [0, 1, 2].map(|_| -(1.0 - rng.gen::<f64>()).ln());
    let s: f64 = e.iter().sum();
    let w = e.map(|ei| 0.05 + 0.85 * ei / s);
    (Complex::new(w[1], 0.0) + y * w[2], y)
}

/// A random tuple of the flattened five-term set with indices in
/// `[-bound, bound]`.
pub fn random_flattened_ft<T: Real>(rng: &mut ChaCha8Rng, bound: i64) -> Result<FlattenedFT<T>> {
    let (x, y) = ft_plus_pair(rng);
    let idx: [i64; 5] = [0; 5].map(|_| index(rng, bound));
    make_flattened_ft(c(x), c(y), idx[0], idx[1], idx[2], idx[3], idx[4])
}

/// Arguments `(α, β)` in `(-π, π]` with `arg_case(α + β) = case`.
fn arg_pair_with_sum_case(rng: &mut ChaCha8Rng, case: i64) -> (f64, f64) {
    use std::f64::consts::PI;
    match case {
        1 => {
            let a = rng.gen_range(0.0..PI);
            (a, rng.gen_range(PI - a..PI))
        }
        -1 => {
            let a = rng.gen_range(-PI..0.0);
            (a, rng.gen_range(-PI..-PI - a))
        }
        _ => {
            let a = rng.gen_range(-PI..PI);
            (a, rng.gen_range((-PI - a).max(-PI)..(PI - a).min(PI)))
        }
    }
}

fn sum_input<T: Real>(params: String, s: &FormalSum<T>) -> String {
    format!("{params}\n{s}")
}

fn relation_outcome<T: Real>(
    cfg: &SweepConfig,
    s: &FormalSum<T>,
    case: Option<i64>,
    params: String,
) -> Outcome {
    Outcome {
        residual: s.eval_lhat_with(cfg.reading).norm().to_f64(),
        case,
        input: sum_input(params, s),
    }
}

fn sample<T: Real>(cfg: &SweepConfig, i: usize) -> Result<Outcome> {
    let rng = &mut sample_rng(cfg.seed, i);
    let b = cfg.index_bound;
    match cfg.relation {
        Relation::FiveTerm => {
            let t = random_flattened_ft::<T>(rng, b)?;
            Ok(relation_outcome(cfg, &five_term_element(&t), None, "five-term".into()))
        }
        Relation::Wedge => {
            let t = random_flattened_ft::<T>(rng, b)?;
            let s = five_term_element(&t);
            let v = wedge_necessary_zero(&nu_hat(&s), T::from_f64(cfg.tol));
            let residual = if v.exact_zero { 0.0 } else { v.max_pairing().to_f64() };
            Ok(Outcome {
                residual,
                case: None,
                input: sum_input(format!("wedge: pairing {} reduced {}", v.pairing, v.reduced_pairing), &s),
            })
        }
        Relation::Cycle => {
            let target = (i % 3) as i64 - 1;
            // Arg y - Arg x = Arg y + (-Arg x): reuse the sum sampler with -Arg x.
            let (neg_ax, ay) = arg_pair_with_sum_case(rng, target);
            let x = CutPoint::<T>::interior(c(polar(rng.gen_range(0.2..3.0), -neg_ax)))?;
            let y = CutPoint::<T>::interior(c(polar(rng.gen_range(0.2..3.0), ay)))?;
            let idx: [i64; 5] = [0; 5].map(|_| index(rng, b));
            let case = arg_case(y.arg() - x.arg());
            let s = cycle_relation(&x, &y, idx[0], idx[1], idx[2], idx[3], idx[4])?;
            let params = format!("cycle: x {} y {} p0 p1 q0 q1 q2 {:?} case {case}", x, y, idx);
            Ok(relation_outcome(cfg, &s, Some(case), params))
        }
        Relation::Homo => {
            let (z, w) = if i % 10 == 9 {
                // products landing on the negative real axis, including ties
                let m1 = [-3.0, -2.0, -1.0, 1.0, 2.0, 3.0][rng.gen_range(0..6)];
                let mut m2 = [-3.0, -2.0, -1.0, 1.0, 2.0, 3.0][rng.gen_range(0..6)];
                if m1 * m2 == -1.0 {
                    m2 *= 2.0;
                }
                (Complex::new(0.0, m1), Complex::new(0.0, m2))
            } else {
                let (a, b2) = arg_pair_with_sum_case(rng, (i % 3) as i64 - 1);
                (polar(rng.gen_range(0.2..3.0), a), polar(rng.gen_range(0.2..3.0), b2))
            };
            let z = CutPoint::<T>::plus_zero(c(z))?;
            let w = CutPoint::<T>::plus_zero(c(w))?;
            let (p, r) = (index(rng, b), index(rng, b));
            let case = arg_case(z.arg() + w.arg());
            let s = curly_product_relation(&z, p, &w, r)?;
            Ok(relation_outcome(cfg, &s, Some(case), format!("homo: z {z} p {p} w {w} r {r} case {case}")))
        }
        Relation::IndexQ | Relation::IndexP | Relation::IndexPQ => {
            let z = to_cut_point::<T>(cut_point(rng))?;
            let (p, q, p2) = (index(rng, b), index(rng, b), index(rng, b));
            let (kind, p2, q2) = match cfg.relation {
                Relation::IndexQ => (IndexRelation::Q, p, index(rng, b)),
                Relation::IndexP => (IndexRelation::P, p2, q),
                _ => (IndexRelation::PQ, p2, p + q - p2),
            };
            let s = index_relation(&z, p, q, p2, q2, kind)?;
            Ok(relation_outcome(cfg, &s, None, format!("{}: z {z} p q p' q' {p} {q} {p2} {q2}", cfg.relation)))
        }
        Relation::Mirror => {
            let z = to_cut_point::<T>(cut_point(rng))?;
            let (p, q) = (index(rng, b), index(rng, b));
            let s = mirror_relation(&z, p, q)?;
            Ok(relation_outcome(cfg, &s, None, format!("mirror: z {z} p {p} q {q}")))
        }
        Relation::ChiHom => {
            let (z, w) = chi_pair(rng, i);
            let (zt, wt) = (c::<T>(z), c::<T>(w));
            let s = chi_hat(zt)? + chi_hat(wt)? - chi_hat(zt * wt)?;
            Ok(relation_outcome(cfg, &s, None, format!("chi-hom: z {} {} w {} {}", z.re, z.im, w.re, w.im)))
        }
        Relation::Symmetry(which) => {
            let z = Complex::new(rng.gen_range(-3.0..3.0), rng.gen_range(0.05..3.0));
            let (p, q) = (index(rng, b), index(rng, b));
            let s = symmetry_relation(c::<T>(z), p, q, which)?;
            Ok(relation_outcome(cfg, &s, None, format!("{which}: z {} {} p {p} q {q}", z.re, z.im)))
        }
        Relation::Kappa => {
            let z = to_cut_point::<T>(cut_point(rng))?;
            let p = index(rng, b);
            let k = kappa_hat_at(&z, p);
            let v = k.eval_lhat_with(cfg.reading);
            let target = CmodZ2::new(Complex::new(-T::two() * T::pi_squared(), T::zero()));
            let twice = (k.clone() * 2).eval_lhat_with(cfg.reading).norm();
            let residual = v.distance(&target).max_of(twice).to_f64();
            Ok(Outcome { residual, case: None, input: sum_input(format!("kappa: z {z} p {p}"), &k) })
        }
        Relation::Splitting => {
            let z = splitting_point(rng, i);
            let zt = c::<T>(z);
            let chi = chi_hat(zt)?;
            let v = chi.eval_lhat_with(cfg.reading);
            let expect = CmodZ2::new(two_pi_i::<T>() * principal_ln(zt));
            let split = exp(v.value() / two_pi_i::<T>());
            let rel = crate::scalar::modulus(split - zt) / crate::scalar::modulus(zt);
            let residual = v.distance(&expect).max_of(rel).to_f64();
            Ok(Outcome { residual, case: None, input: sum_input(format!("splitting: z {} {}", z.re, z.im), &chi) })
        }
    }
}

/// Pairs for the homomorphism test: units, products that land exactly on
/// the real axis, pure imaginaries and generic points.
fn chi_pair(rng: &mut ChaCha8Rng, i: usize) -> (Complex<f64>, Complex<f64>) {
    let generic = |rng: &mut ChaCha8Rng| polar(rng.gen_range(-1.5f64..1.5).exp(), rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI));
    let unit = |rng: &mut ChaCha8Rng| Complex::new(if rng.gen_bool(0.5) { 1.0 } else { -1.0 }, 0.0);
    let small = |rng: &mut ChaCha8Rng| [-3.0, -2.0, -1.0, 1.0, 2.0, 3.0][rng.gen_range(0..6)];
    match i % 10 {
        0 => (unit(rng), generic(rng)),
        1 => (generic(rng), unit(rng)),
        2 => {
            let z = Complex::new(rng.gen_range(-3..=3) as f64, small(rng));
            let mut k = small(rng);
            if k * z.norm_sqr() == 1.0 {
                k = 2.0;
            }
            (z, z.conj() * k)
        }
        3 => (Complex::new(0.0, small(rng)), Complex::new(0.0, small(rng))),
        4 => (unit(rng), unit(rng)),
        _ => (generic(rng), generic(rng)),
    }
}

fn splitting_point(rng: &mut ChaCha8Rng, i: usize) -> Complex<f64> {
    let r = 10f64.powf(rng.gen_range(-3.0..3.0));
    match i % 10 {
        0 => Complex::new(-r, 0.0),
        1 => Complex::new(0.0, if rng.gen_bool(0.5) { r } else { -r }),
        2 => Complex::new(r, 0.0),
        _ => polar(r, rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI)),
    }
}
