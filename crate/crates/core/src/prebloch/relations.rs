use num_complex::Complex;

use super::kernel::curly;
use super::FormalSum;
use crate::cover::{FlattenedFT, FlattenedNumber};
use crate::dilog::CutPoint;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Case of an argument sum or difference `s`:
/// `-1` if `s ≤ -π`, `0` if `-π < s ≤ π`, `+1` if `π < s`.
pub fn arg_case<T: Real>(s: T) -> i64 {
    let pi = T::pi();
    if s <= -pi {
        -1
    } else if s <= pi {
        0
    } else {
        1
    }
}

fn gen<T: Real>(z: &CutPoint<T>, p: i64, q: i64) -> FlattenedNumber<T> {
    FlattenedNumber::from_cut_point(*z, p, q)
}

/// `[ẑ₀] - [ẑ₁] + [ẑ₂] - [ẑ₃] + [ẑ₄]`.
pub fn five_term_element<T: Real>(t: &FlattenedFT<T>) -> FormalSum<T> {
    FormalSum::from_terms(
        t.entries()
            .iter()
            .enumerate()
            .map(|(k, f)| (if k % 2 == 0 { 1 } else { -1 }, *f)),
    )
}

/// `{z;2p} + {w;2r} - {zw+0i; 2(p+r+ε)}`.
pub fn curly_product_relation<T: Real>(
    z: &CutPoint<T>,
    p: i64,
    w: &CutPoint<T>,
    r: i64,
) -> Result<FormalSum<T>> {
    let prod = CutPoint::plus_zero(z.z() * w.z())?;
    let eps = arg_case(z.arg() + w.arg());
    Ok(curly(z, p) + curly(w, r) - curly(&prod, p + r + eps))
}

/// The cycle relation in `x`, `y` and `y/x`, as `LHS - RHS`.
pub fn cycle_relation<T: Real>(
    x: &CutPoint<T>,
    y: &CutPoint<T>,
    p0: i64,
    p1: i64,
    q0: i64,
    q1: i64,
    q2: i64,
) -> Result<FormalSum<T>> {
    if x.z() == y.z() {
        return Err(Error::Degenerate("cycle relation needs x != y".into()));
    }
    let ratio = CutPoint::plus_zero(y.z() / x.z())?;
    let shift = p1 - p0 + arg_case(y.arg() - x.arg());
    let lhs = FormalSum::from_terms([
        (1, gen(x, p0, q0 - 1)),
        (-1, gen(x, p0, q0)),
        (-1, gen(y, p1, q1 - 1)),
        (1, gen(y, p1, q1)),
    ]);
    let rhs = FormalSum::from_terms([(1, gen(&ratio, shift, q2)), (-1, gen(&ratio, shift, q2 - 1))]);
    Ok(lhs - rhs)
}

/// Which index relation to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IndexRelation {
    /// The `q` step `[z;p,q-1] - [z;p,q]` does not depend on `q`; needs `p' = p`.
    Q,
    /// The `p` step `[z;p-1,q] - [z;p,q]` does not depend on `p`; needs `q' = q`.
    P,
    /// The diagonal step `[z;p+1,q-1] - [z;p,q]` depends only on `p+q`.
    PQ,
}

pub fn index_relation<T: Real>(
    z: &CutPoint<T>,
    p: i64,
    q: i64,
    p2: i64,
    q2: i64,
    kind: IndexRelation,
) -> Result<FormalSum<T>> {
    let step = |a: i64, b: i64| -> FormalSum<T> {
        let (da, db) = match kind {
            IndexRelation::Q => (0, -1),
            IndexRelation::P => (-1, 0),
            IndexRelation::PQ => (1, -1),
        };
        FormalSum::from_terms([(1, gen(z, a + da, b + db)), (-1, gen(z, a, b))])
    };
    let violated = match kind {
        IndexRelation::Q if p != p2 => Some(format!("q relation needs p' = p, got {p} and {p2}")),
        IndexRelation::P if q != q2 => Some(format!("p relation needs q' = q, got {q} and {q2}")),
        IndexRelation::PQ if p + q != p2 + q2 => Some(format!(
            "diagonal relation needs p+q = p'+q', got {} and {}",
            p + q,
            p2 + q2
        )),
        _ => None,
    };
    if let Some(msg) = violated {
        return Err(Error::IndexPrecondition(msg));
    }
    Ok(step(p, q) - step(p2, q2))
}

/// `[z;2p,2q] + [1-z;-2q,-2p] - 2[½;0,0]`.
pub fn mirror_relation<T: Real>(z: &CutPoint<T>, p: i64, q: i64) -> Result<FormalSum<T>> {
    let half = CutPoint::interior(Complex::new(T::half(), T::zero()))?;
    Ok(FormalSum::from_terms([
        (1, gen(z, p, q)),
        (1, gen(&z.one_minus()?, -q, -p)),
        (-2, gen(&half, 0, 0)),
    ]))
}

/// `pq[z;2,2] - p(q-1)[z;2,0] - (p-1)q[z;0,2] + (p-1)(q-1)[z;0,0]`, which has
/// the same image as `[z;2p,2q]`.
pub fn index_decomposition<T: Real>(z: &CutPoint<T>, p: i64, q: i64) -> FormalSum<T> {
    FormalSum::from_terms([
        (p * q, gen(z, 1, 1)),
        (-p * (q - 1), gen(z, 1, 0)),
        (-(p - 1) * q, gen(z, 0, 1)),
        ((p - 1) * (q - 1), gen(z, 0, 0)),
    ])
}
