//! Analytic continuation of the Rogers dilogarithm along closed paths.
//!
//! `L(z) = Li₂(z) + ½ log z log(1-z) - π²/6` is continued by integrating
//! `L'(z) = -½ (log(1-z)/z + log z/(1-z))`, with both logarithms tracked
//! step by step so they stay continuous along the path.

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::scalar::{cis, principal_ln, CompensatedSum, Real};

/// A closed loop `θ ↦ center + radius·e^{i(θ₀ ± θ)}`, `θ ∈ [0, 2π]`.
#[derive(Clone, Copy, Debug)]
pub struct Loop<T: Real> {
    pub center: Complex<T>,
    pub radius: T,
    /// Angle of the base point as seen from `center`.
    pub start_angle: T,
    pub counter_clockwise: bool,
}

impl<T: Real> Loop<T> {
    /// Counter-clockwise loop around 0 through the base point `½`.
    pub fn around_zero() -> Self {
        Loop {
            center: Complex::zero(),
            radius: T::half(),
            start_angle: T::zero(),
            counter_clockwise: true,
        }
    }

    /// Counter-clockwise loop around 1 through the base point `½`.
    pub fn around_one() -> Self {
        Loop {
            center: Complex::one(),
            radius: T::half(),
            start_angle: T::pi(),
            counter_clockwise: true,
        }
    }

    pub fn reversed(self) -> Self {
        Loop {
            counter_clockwise: !self.counter_clockwise,
            ..self
        }
    }

    fn point(&self, theta: T) -> (Complex<T>, Complex<T>) {
        let t = if self.counter_clockwise { theta } else { -theta };
        let e = cis(self.start_angle + t);
        let z = self.center + e * self.radius;
        let dir = if self.counter_clockwise { T::one() } else { -T::one() };
        // dz/dθ
        let dz = Complex::new(-e.im, e.re) * (self.radius * dir);
        (z, dz)
    }
}

/// A branch of `log` that is kept continuous between nearby evaluations.
#[derive(Clone, Copy, Debug)]
pub struct TrackedLog<T: Real> {
    value: Complex<T>,
}

impl<T: Real> TrackedLog<T> {
    pub fn principal(w: Complex<T>) -> Self {
        TrackedLog {
            value: principal_ln(w),
        }
    }

    /// Move to `w`, choosing the branch closest to the current value.
    pub fn step(&mut self, w: Complex<T>) -> Complex<T> {
        let p = principal_ln(w);
        let k = ((self.value.im - p.im) / T::two_pi()).round_to_i64();
        self.value = Complex::new(p.re, p.im + T::two_pi() * T::from_i64(k));
        self.value
    }

    pub fn value(&self) -> Complex<T> {
        self.value
    }

    /// Number of full turns relative to the principal branch at the current point.
    pub fn winding(&self) -> i64 {
        (self.value.im / T::two_pi()).round_to_i64()
    }
}

/// State of a continuation: the tracked logarithms at the current point.
#[derive(Clone, Copy, Debug)]
pub struct RogersContinuation<T: Real> {
    log_z: TrackedLog<T>,
    log_one_minus: TrackedLog<T>,
    change: Complex<T>,
}

impl<T: Real> RogersContinuation<T> {
    /// Start at `z` on the principal branches.
    pub fn new(z: Complex<T>) -> Self {
        RogersContinuation {
            log_z: TrackedLog::principal(z),
            log_one_minus: TrackedLog::principal(Complex::<T>::one() - z),
            change: Complex::zero(),
        }
    }

    fn derivative(&mut self, z: Complex<T>) -> Complex<T> {
        let lz = self.log_z.step(z);
        let lw = self.log_one_minus.step(Complex::<T>::one() - z);
        -(lw / z + lz / (Complex::<T>::one() - z)) * T::half()
    }

    /// Continue along `lp` using composite Simpson with `steps` panels.
    pub fn follow(&mut self, lp: &Loop<T>, steps: usize) {
        let steps = steps.max(2) & !1;
        let h = T::two_pi() / T::from_i64(steps as i64);
        let mut acc = CompensatedSum::default();
        for j in 0..=steps {
            let (z, dz) = lp.point(h * T::from_i64(j as i64));
            let f = self.derivative(z) * dz;
            let w = if j == 0 || j == steps {
                T::one()
            } else if j % 2 == 1 {
                T::from_f64(4.0)
            } else {
                T::two()
            };
            acc.add(f * w);
        }
        self.change = self.change + acc.value() * (h / T::from_f64(3.0));
    }

    /// Total change of `L` accumulated so far.
    pub fn change(&self) -> Complex<T> {
        self.change
    }

    /// Current sheet offsets of `log z` and `log(1-z)` in units of `2πi`.
    pub fn log_windings(&self) -> (i64, i64) {
        (self.log_z.winding(), self.log_one_minus.winding())
    }
}

/// Change of the Rogers dilogarithm along the commutator of `γ₀` and `γ₁`,
/// the counter-clockwise loops of radius ½ around 0 and 1 based at ½.
///
/// The loops are traversed in the order `γ₁, γ₀, γ₁⁻¹, γ₀⁻¹`; the opposite
/// order gives the negative. The logarithms return to their starting
/// branches, so the result is the pure monodromy of `L`.
pub fn commutator_monodromy<T: Real>(steps_per_loop: usize) -> (Complex<T>, (i64, i64)) {
    let g0 = Loop::around_zero();
    let g1 = Loop::around_one();
    let mut cont = RogersContinuation::new(Complex::new(T::half(), T::zero()));
    for lp in [g1, g0, g1.reversed(), g0.reversed()] {
        cont.follow(&lp, steps_per_loop);
    }
    (cont.change(), cont.log_windings())
}
