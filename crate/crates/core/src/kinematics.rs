//! Time evolution of frames and the rate propagator.
//!
//! Rates follow the quaternion convention `ω = q̇ q̄`, which is HALF the
//! physical angular velocity. [`propagate`] takes physical rates and halves
//! them; [`BodyRate::physical_rate`] doubles back. A frame vector moves by
//! `ḟ = [ω, f] = 2 ω × f`.

use crate::coeff::{ComplexScalar, DualScalar, Scalar};
use crate::error::{Error, Result};
use crate::quat::{commutator, Quaternion, Vector3};

type CQ = Quaternion<ComplexScalar>;

/// Time tolerance, relative to the series span, for window checks.
const TIME_EPS: f64 = 1e-12;

/// Quaternion rate `ω = q̇ q⁻¹`. Pure vector for real and dual unit
/// trajectories; a general traceless quaternion in the Lorentz regime.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BodyRate<R> {
    pub omega: Quaternion<R>,
}

impl<R: Scalar> BodyRate<R> {
    pub fn vector(&self) -> Vector3<R> {
        self.omega.vector()
    }

    /// `2 ω`, the physical angular velocity (dual: `ω + ε v`).
    pub fn physical_rate(&self) -> Vector3<R> {
        self.vector().scale(2.0)
    }

    /// Size of the scalar part, which vanishes for unit trajectories.
    pub fn scalar_residual(&self) -> f64 {
        self.omega.w.max_abs()
    }
}

/// `ω = q̇ q̄`; for unit `q` this is `q̇ q⁻¹` in every ring.
pub fn body_rate<R: Scalar>(q: Quaternion<R>, qdot: Quaternion<R>) -> Result<BodyRate<R>> {
    q.check_unit()?;
    Ok(BodyRate { omega: qdot * q.conj() })
}

/// `[ω, f]`.
pub fn frame_velocity<R: Scalar>(omega: Quaternion<R>, f: Quaternion<R>) -> Quaternion<R> {
    commutator(omega, f)
}

/// `[ω̇, f] + [ω, [ω, f]]`.
///
/// For vectors this is `[ω̇, f] + 4 ⟨ω,f⟩ ω - 4 ‖ω‖² f`.
pub fn frame_acceleration<R: Scalar>(omega: Quaternion<R>, omegadot: Quaternion<R>, f: Quaternion<R>) -> Quaternion<R> {
    commutator(omegadot, f) + commutator(omega, commutator(omega, f))
}

/// Same acceleration from `α = q̈ q̄ = ω̇ + ω²`: `α f + f ᾱ - 2 ω f ω`.
pub fn frame_acceleration_alpha<R: Scalar>(omega: Quaternion<R>, alpha: Quaternion<R>, f: Quaternion<R>) -> Quaternion<R> {
    alpha * f + f * alpha.conj() - (omega * f * omega).scale(2.0)
}

fn adjoint(q: CQ) -> CQ {
    q.conj().map(|z| z.conj())
}

/// `(ω, α) = (u̇ u⁻¹, ü u⁻¹)`.
pub fn lorentz_rates(u: CQ, udot: CQ, uddot: CQ) -> Result<(CQ, CQ)> {
    u.check_unit()?;
    let inv = u.conj();
    Ok((udot * inv, uddot * inv))
}

/// `ω = ϖ + η` with `ϖ† = -ϖ` (rotation) and `η† = η` (boost).
pub fn split_rate(omega: CQ) -> (CQ, CQ) {
    let a = adjoint(omega);
    ((omega - a).scale(0.5), (omega + a).scale(0.5))
}

/// `(ḟ, f̈)` of `f = u f₀ u†`: `ḟ = ω f + f ω†`, `f̈ = α f + f α† + 2 ω f ω†`.
pub fn lorentz_frame_kinematics(u: CQ, udot: CQ, uddot: CQ, f0: CQ) -> Result<(CQ, CQ)> {
    if f0.dist(adjoint(f0)) > 1e-10 * f0.max_abs().max(1.0) {
        return Err(Error::ConstraintViolated("frame vector must be self-adjoint"));
    }
    let (w, a) = lorentz_rates(u, udot, uddot)?;
    let f = u * f0 * adjoint(u);
    let (wa, aa) = (adjoint(w), adjoint(a));
    Ok((w * f + f * wa, a * f + f * aa + (w * f * wa).scale(2.0)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpinorSide {
    /// `q = u q₀` with `q₀` in the left ideal `{x ε}`.
    Left,
    /// `q = q₀ u†` with `q₀` in the right ideal `{ε x}`.
    Right,
}

/// `(q̇, q̈)` of a spinor: left `(ω q, α q)`, right `(q ω†, q α†)`.
pub fn spinor_kinematics(
    u: CQ,
    udot: CQ,
    uddot: CQ,
    q0: CQ,
    eps: CQ,
    side: SpinorSide,
) -> Result<(CQ, CQ)> {
    let (w, a) = lorentz_rates(u, udot, uddot)?;
    let fixed = match side {
        SpinorSide::Left => q0 * eps,
        SpinorSide::Right => eps * q0,
    };
    let residual = fixed.dist(q0);
    if residual > 1e-10 * q0.max_abs().max(1.0) {
        return Err(Error::NotInIdeal { residual });
    }
    Ok(match side {
        SpinorSide::Left => {
            let q = u * q0;
            (w * q, a * q)
        }
        SpinorSide::Right => {
            let q = q0 * adjoint(u);
            (q * adjoint(w), q * adjoint(a))
        }
    })
}

/// Ordered `(t, q)` samples.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory<R> {
    pub samples: Vec<(f64, Quaternion<R>)>,
}

impl<R: Scalar> Trajectory<R> {
    pub fn new(samples: Vec<(f64, Quaternion<R>)>) -> Result<Self> {
        check_times(samples.iter().map(|s| s.0))?;
        for (_, q) in &samples {
            if q.unit_residual() > 1e-9 {
                return Err(Error::NotUnit { residual: q.unit_residual() });
            }
        }
        Ok(Self { samples })
    }

    pub fn last(&self) -> Option<&(f64, Quaternion<R>)> {
        self.samples.last()
    }
}

fn check_times(ts: impl Iterator<Item = f64>) -> Result<()> {
    let mut prev = f64::NEG_INFINITY;
    for (index, t) in ts.enumerate() {
        if !t.is_finite() || t <= prev {
            return Err(Error::NonmonotoneTime { index });
        }
        prev = t;
    }
    Ok(())
}

/// Physical rates at time `t`: angular velocity `omega` and, for the dual
/// and complex regimes, `v` (linear velocity or boost rapidity rate).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateSample {
    pub t: f64,
    pub omega: [f64; 3],
    pub v: [f64; 3],
}

/// Piecewise-linear rate history with strictly increasing times.
#[derive(Debug, Clone, PartialEq)]
pub struct RateSeries {
    samples: Vec<RateSample>,
}

impl RateSeries {
    pub fn new(samples: Vec<RateSample>) -> Result<Self> {
        if samples.is_empty() {
            return Err(Error::EmptyRateSeries);
        }
        check_times(samples.iter().map(|s| s.t))?;
        Ok(Self { samples })
    }

    /// Constant rates over `[t0, t1]`.
    pub fn constant(t0: f64, t1: f64, omega: [f64; 3], v: [f64; 3]) -> Result<Self> {
        Self::new(vec![RateSample { t: t0, omega, v }, RateSample { t: t1, omega, v }])
    }

    pub fn samples(&self) -> &[RateSample] {
        &self.samples
    }

    pub fn start(&self) -> f64 {
        self.samples[0].t
    }

    pub fn end(&self) -> f64 {
        self.samples[self.samples.len() - 1].t
    }

    /// Linear interpolation; times within a relative `1e-12` of the window
    /// are clamped onto it.
    pub fn at(&self, t: f64) -> Result<([f64; 3], [f64; 3])> {
        let (t0, t1) = (self.start(), self.end());
        let slack = TIME_EPS * (t1 - t0).abs().max(t0.abs()).max(t1.abs()).max(1.0);
        if !(t >= t0 - slack && t <= t1 + slack) {
            return Err(Error::OutOfRange { t });
        }
        let t = t.clamp(t0, t1);
        let k = self.samples.partition_point(|s| s.t <= t);
        if k == 0 {
            let s = &self.samples[0];
            return Ok((s.omega, s.v));
        }
        if k == self.samples.len() {
            let s = &self.samples[k - 1];
            return Ok((s.omega, s.v));
        }
        let (a, b) = (&self.samples[k - 1], &self.samples[k]);
        let w = (t - a.t) / (b.t - a.t);
        let lerp = |x: [f64; 3], y: [f64; 3]| std::array::from_fn(|i| x[i] + w * (y[i] - x[i]));
        Ok((lerp(a.omega, b.omega), lerp(a.v, b.v)))
    }
}

/// Rings the propagator runs in, with the map from physical rates to `ω`.
pub trait RateRing: Scalar {
    fn rate_quat(omega: [f64; 3], v: [f64; 3]) -> Quaternion<Self>;
}

impl RateRing for f64 {
    /// `½ ω`; `v` is ignored.
    fn rate_quat(omega: [f64; 3], _v: [f64; 3]) -> Quaternion<f64> {
        Vector3::from_array(omega).scale(0.5).to_quat()
    }
}

impl RateRing for DualScalar {
    /// `½ (ω + ε v)` with `v` the spatial linear velocity `ȧ - ω × a`.
    fn rate_quat(omega: [f64; 3], v: [f64; 3]) -> Quaternion<DualScalar> {
        Vector3::from_array(std::array::from_fn(|k| DualScalar::new(0.5 * omega[k], 0.5 * v[k]))).to_quat()
    }
}

impl RateRing for ComplexScalar {
    /// `½ (ω + i v)` with `v` the boost rapidity rate.
    fn rate_quat(omega: [f64; 3], v: [f64; 3]) -> CQ {
        Vector3::from_array(std::array::from_fn(|k| ComplexScalar::new(0.5 * omega[k], 0.5 * v[k]))).to_quat()
    }
}

/// One RK4 step of `q̇ = ω(t) q`, followed by renormalization.
fn rk4_step<R: RateRing>(q: Quaternion<R>, rates: &RateSeries, t: f64, h: f64) -> Result<Quaternion<R>> {
    let w = |t: f64| -> Result<Quaternion<R>> {
        let (o, v) = rates.at(t)?;
        Ok(R::rate_quat(o, v))
    };
    let (w0, wm, w1) = (w(t)?, w(t + 0.5 * h)?, w(t + h)?);
    let k1 = w0 * q;
    let k2 = wm * (q + k1.scale(0.5 * h));
    let k3 = wm * (q + k2.scale(0.5 * h));
    let k4 = w1 * (q + k3.scale(h));
    let next = q + (k1 + k2.scale(2.0) + k3.scale(2.0) + k4).scale(h / 6.0);
    next.normalized()
}

fn integrate<R: RateRing>(
    q0: Quaternion<R>,
    rates: &RateSeries,
    h: f64,
    mut visit: impl FnMut(f64, Quaternion<R>),
) -> Result<Quaternion<R>> {
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::InvalidStep(h));
    }
    q0.check_unit()?;
    let (t0, t1) = (rates.start(), rates.end());
    let span = t1 - t0;
    let n = if span > 0.0 { (span / h - 1e-9).ceil().max(1.0) as usize } else { 0 };
    let mut q = q0;
    visit(t0, q);
    let mut t = t0;
    for k in 1..=n {
        let t_next = if k == n { t1 } else { t0 + k as f64 * h };
        q = rk4_step(q, rates, t, t_next - t)?;
        t = t_next;
        visit(t, q);
    }
    Ok(q)
}

/// RK4 with linearly interpolated rates over the whole series window, from
/// `q0` at its first time; the last step is shortened to end on the window.
pub fn propagate<R: RateRing>(q0: Quaternion<R>, rates: &RateSeries, h: f64) -> Result<Trajectory<R>> {
    let mut samples = Vec::new();
    integrate(q0, rates, h, |t, q| samples.push((t, q)))?;
    Ok(Trajectory { samples })
}

/// [`propagate`] keeping only the final state.
pub fn propagate_final<R: RateRing>(q0: Quaternion<R>, rates: &RateSeries, h: f64) -> Result<Quaternion<R>> {
    integrate(q0, rates, h, |_, _| {})
}
