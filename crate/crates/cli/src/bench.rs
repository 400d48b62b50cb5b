//! Attitude propagation benchmark: unit quaternion vs DCM vs Euler angles
//! on one seeded smooth trajectory.
//!
//! The trajectory is defined by its Euler angles, each a sum of three
//! sinusoids, so the exact terminal attitude is known. All three methods
//! integrate the same piecewise-linear spatial angular velocity sampled on
//! the step grid with RK4.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use quatmotion::kinematics::{propagate_final, RateSample, RateSeries};
use quatmotion::matrix::skew;
use quatmotion::rotations::{euler_rates, euler_to_rotmat, quat_to_rotmat_unchecked, rot_y, rot_z, rotmat_to_quat, EulerAngles};
use quatmotion::{Error, Mat3};

use crate::error::CliResult;

const HARMONICS: usize = 3;
/// Bound on the summed pitch amplitude; keeps the Euler method away from
/// gimbal lock.
const PITCH_AMPLITUDE: f64 = 0.6;
const ROLL_YAW_AMPLITUDE: f64 = 1.0;

#[derive(Debug, Clone, Copy)]
pub struct BenchConfig {
    pub steps: u64,
    pub h: f64,
    pub seed: u64,
    /// Scales every angle amplitude; `0` gives a zero-rate run.
    pub amplitude: f64,
    /// Omits wall times so the report is byte-reproducible.
    pub deterministic: bool,
}

#[derive(Debug, Clone, Copy, Serialize)]
struct Harmonic {
    amp: f64,
    freq: f64,
    phase: f64,
}

/// One angle as `Σ amp sin(freq t + phase)`.
#[derive(Debug, Clone, Copy)]
struct Angle([Harmonic; HARMONICS]);

impl Angle {
    fn random(rng: &mut ChaCha8Rng, total: f64) -> Self {
        Angle(std::array::from_fn(|_| Harmonic {
            amp: total / HARMONICS as f64 * rng.gen_range(0.2..1.0),
            freq: rng.gen_range(0.2..2.0),
            phase: rng.gen_range(0.0..std::f64::consts::TAU),
        }))
    }

    fn value(&self, t: f64) -> f64 {
        self.0.iter().map(|h| h.amp * (h.freq * t + h.phase).sin()).sum()
    }

    fn rate(&self, t: f64) -> f64 {
        self.0.iter().map(|h| h.amp * h.freq * (h.freq * t + h.phase).cos()).sum()
    }
}

struct Truth {
    roll: Angle,
    pitch: Angle,
    yaw: Angle,
}

impl Truth {
    fn new(seed: u64, scale: f64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Truth {
            roll: Angle::random(&mut rng, scale * ROLL_YAW_AMPLITUDE),
            pitch: Angle::random(&mut rng, scale * PITCH_AMPLITUDE),
            yaw: Angle::random(&mut rng, scale * ROLL_YAW_AMPLITUDE),
        }
    }

    fn euler(&self, t: f64) -> EulerAngles {
        EulerAngles { roll: self.roll.value(t), pitch: self.pitch.value(t), yaw: self.yaw.value(t) }
    }

    /// Spatial angular velocity of `Rz(ψ) Ry(θ) Rx(φ)`.
    fn omega(&self, t: f64) -> [f64; 3] {
        let e = self.euler(t);
        let rz = rot_z(e.yaw);
        let ey = rz.column(1);
        let ex = (rz * rot_y(e.pitch)).column(0);
        let (dr, dp, dy) = (self.roll.rate(t), self.pitch.rate(t), self.yaw.rate(t));
        std::array::from_fn(|k| dr * ex[k] + dp * ey[k] + if k == 2 { dy } else { 0.0 })
    }
}

#[derive(Debug, Serialize)]
struct MethodReport {
    name: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    wall_time_ns: Option<u64>,
    /// Unit-norm residual (quat), `max |RᵀR - I|` (dcm), `0` for Euler
    /// angles, which carry no constraint.
    drift: f64,
    error_vs_exact_rad: f64,
}

#[derive(Debug, Serialize)]
struct Disagreement {
    quat_dcm: f64,
    quat_euler: f64,
    dcm_euler: f64,
}

#[derive(Debug, Serialize)]
pub struct RunReport {
    steps: u64,
    step: f64,
    seed: u64,
    amplitude: f64,
    methods: Vec<MethodReport>,
    disagreement_rad: Disagreement,
    max_disagreement_rad: f64,
}

impl RunReport {
    pub fn max_disagreement_rad(&self) -> f64 {
        self.max_disagreement_rad
    }

    pub fn max_error_vs_exact_rad(&self) -> f64 {
        self.methods.iter().map(|m| m.error_vs_exact_rad).fold(0.0, f64::max)
    }

    pub fn max_drift(&self) -> f64 {
        self.methods.iter().map(|m| m.drift).fold(0.0, f64::max)
    }
}

/// Rotation angle of `AᵀB`, robust near zero.
pub fn rotation_distance(a: &Mat3, b: &Mat3) -> f64 {
    let m = a.transpose() * *b;
    let m = &m.0;
    let axial = [m[2][1] - m[1][2], m[0][2] - m[2][0], m[1][0] - m[0][1]];
    let sin2 = (axial[0] * axial[0] + axial[1] * axial[1] + axial[2] * axial[2]).sqrt();
    sin2.atan2(m[0][0] + m[1][1] + m[2][2] - 1.0)
}

fn orthogonality_residual(r: &Mat3) -> f64 {
    (r.transpose() * *r).dist(&Mat3::identity())
}

fn timed<T>(f: impl FnOnce() -> CliResult<T>) -> CliResult<(T, u64)> {
    let start = Instant::now();
    let out = f()?;
    Ok((out, start.elapsed().as_nanos() as u64))
}

fn dcm_rk4(r0: Mat3, omega: &[[f64; 3]], h: f64) -> Mat3 {
    let deriv = |w: [f64; 3], r: Mat3| skew(w) * r;
    let mut r = r0;
    for k in 0..omega.len() - 1 {
        let (w0, w1) = (omega[k], omega[k + 1]);
        let wm = std::array::from_fn(|i| 0.5 * (w0[i] + w1[i]));
        let k1 = deriv(w0, r);
        let k2 = deriv(wm, r + k1.scale(0.5 * h));
        let k3 = deriv(wm, r + k2.scale(0.5 * h));
        let k4 = deriv(w1, r + k3.scale(h));
        r = r + (k1 + k2.scale(2.0) + k3.scale(2.0) + k4).scale(h / 6.0);
        // first-order re-orthogonalization R (3I - RᵀR) / 2
        r = (r * (Mat3::identity().scale(3.0) - r.transpose() * r)).scale(0.5);
    }
    r
}

fn euler_rk4(e0: EulerAngles, omega: &[[f64; 3]], h: f64) -> CliResult<EulerAngles> {
    let add = |e: EulerAngles, d: [f64; 3], s: f64| EulerAngles {
        roll: e.roll + s * d[0],
        pitch: e.pitch + s * d[1],
        yaw: e.yaw + s * d[2],
    };
    let mut e = e0;
    for k in 0..omega.len() - 1 {
        let (w0, w1) = (omega[k], omega[k + 1]);
        let wm = std::array::from_fn(|i| 0.5 * (w0[i] + w1[i]));
        let k1 = euler_rates(e, w0)?;
        let k2 = euler_rates(add(e, k1, 0.5 * h), wm)?;
        let k3 = euler_rates(add(e, k2, 0.5 * h), wm)?;
        let k4 = euler_rates(add(e, k3, h), w1)?;
        e = add(e, std::array::from_fn(|i| k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]), h / 6.0);
    }
    Ok(e)
}

pub fn cmd_bench(cfg: BenchConfig) -> CliResult<RunReport> {
    if cfg.steps == 0 {
        return Err(crate::error::CliError::Schema("bench needs at least one step".into()));
    }
    if !(cfg.h > 0.0 && cfg.h.is_finite()) {
        return Err(Error::InvalidStep(cfg.h).into());
    }
    if !(cfg.amplitude >= 0.0 && cfg.amplitude <= 1.0) {
        return Err(crate::error::CliError::Schema("bench amplitude must lie in [0, 1]".into()));
    }
    let truth = Truth::new(cfg.seed, cfg.amplitude);
    let times: Vec<f64> = (0..=cfg.steps).map(|k| k as f64 * cfg.h).collect();
    let omega: Vec<[f64; 3]> = times.iter().map(|&t| truth.omega(t)).collect();
    let rates = RateSeries::new(times.iter().zip(&omega).map(|(&t, &w)| RateSample { t, omega: w, v: [0.0; 3] }).collect())?;

    let e0 = truth.euler(0.0);
    let r0 = euler_to_rotmat(e0);
    let q0 = rotmat_to_quat(&r0)?;
    let t_end = times[times.len() - 1];
    let exact = euler_to_rotmat(truth.euler(t_end));

    let (q, t_quat) = timed(|| Ok(propagate_final::<f64>(q0, &rates, cfg.h)?))?;
    let (r, t_dcm) = timed(|| Ok(dcm_rk4(r0, &omega, cfg.h)))?;
    let (e, t_euler) = timed(|| euler_rk4(e0, &omega, cfg.h))?;

    let rq = quat_to_rotmat_unchecked(q);
    let re = euler_to_rotmat(e);
    let wall = |ns| if cfg.deterministic { None } else { Some(ns) };
    let methods = vec![
        MethodReport {
            name: "quat",
            wall_time_ns: wall(t_quat),
            drift: (q.norm_sq() - 1.0).abs(),
            error_vs_exact_rad: rotation_distance(&rq, &exact),
        },
        MethodReport {
            name: "dcm",
            wall_time_ns: wall(t_dcm),
            drift: orthogonality_residual(&r),
            error_vs_exact_rad: rotation_distance(&r, &exact),
        },
        MethodReport {
            name: "euler",
            wall_time_ns: wall(t_euler),
            drift: 0.0,
            error_vs_exact_rad: rotation_distance(&re, &exact),
        },
    ];
    let disagreement_rad = Disagreement {
        quat_dcm: rotation_distance(&rq, &r),
        quat_euler: rotation_distance(&rq, &re),
        dcm_euler: rotation_distance(&r, &re),
    };
    let max_disagreement_rad =
        disagreement_rad.quat_dcm.max(disagreement_rad.quat_euler).max(disagreement_rad.dcm_euler);
    Ok(RunReport {
        steps: cfg.steps,
        step: cfg.h,
        seed: cfg.seed,
        amplitude: cfg.amplitude,
        methods,
        disagreement_rad,
        max_disagreement_rad,
    })
}
