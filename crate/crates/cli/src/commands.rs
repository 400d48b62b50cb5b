//! Subcommand bodies. Each takes its input text and returns the JSON output.

use clap::ValueEnum;
use serde::Serialize;

use quatmotion::kinematics::{propagate, RateRing};
use quatmotion::lines::dual_angle;
use quatmotion::rigid::{chasles_tol, screw_to_rigid, RigidMotion};
use quatmotion::{ComplexScalar, DualScalar, Matrix, Quaternion};

use crate::convert::{canonical_dual, parse_line, screw_to_j};
use crate::error::{CliError, CliResult};
use crate::json::{self, ComplexQuatJ, DualQuatJ, QuatJ, RigidJ, ScrewJ};
use crate::rates::parse_rates;

pub const DEFAULT_TOL: f64 = 1e-10;

/// Validation tolerance from `QUATMOTION_TOL`, or [`DEFAULT_TOL`].
pub fn tolerance_from_env() -> CliResult<f64> {
    match std::env::var("QUATMOTION_TOL") {
        Err(_) => Ok(DEFAULT_TOL),
        Ok(s) => match s.trim().parse::<f64>() {
            Ok(t) if t > 0.0 && t.is_finite() => Ok(t),
            _ => Err(CliError::Schema(format!("QUATMOTION_TOL must be a positive number, got `{s}`"))),
        },
    }
}

#[derive(Debug, Serialize)]
struct ChaslesOut {
    #[serde(flatten)]
    screw: ScrewJ,
    residual: f64,
}

/// Screw decomposition of a rigid motion `{"a": [3], "R": [[3];3]}`, with
/// the reconstruction residual.
pub fn cmd_chasles(payload: &str, tol: f64) -> CliResult<String> {
    let g: RigidJ = json::from_str(payload)?;
    let g = RigidMotion::new(g.a, Matrix(g.r), tol)?;
    let sp = chasles_tol(&g, tol)?;
    let residual = screw_to_rigid(&sp).dist(&g);
    json::to_string(&ChaslesOut { screw: screw_to_j(&sp), residual })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PropagateRegime {
    /// Unit quaternion attitude; `v` columns are not accepted.
    Real,
    /// Unit dual quaternion pose; `v` is the spatial linear velocity.
    Dual,
    /// Unit complex quaternion; `v` is the boost rapidity rate.
    Complex,
}

impl PropagateRegime {
    fn name(self) -> &'static str {
        match self {
            PropagateRegime::Real => "real",
            PropagateRegime::Dual => "dual",
            PropagateRegime::Complex => "complex",
        }
    }
}

#[derive(Debug, Serialize)]
struct Sample<S> {
    t: f64,
    q: S,
}

#[derive(Debug, Serialize)]
struct TrajectoryOut<S> {
    regime: &'static str,
    step: f64,
    samples: Vec<Sample<S>>,
}

fn run<R: RateRing, S: Serialize>(
    regime: PropagateRegime,
    rates: &quatmotion::kinematics::RateSeries,
    h: f64,
    emit: impl Fn(Quaternion<R>) -> S,
) -> CliResult<String> {
    let traj = propagate(Quaternion::<R>::one(), rates, h)?;
    let samples = traj.samples.into_iter().map(|(t, q)| Sample { t, q: emit(q) }).collect();
    json::to_string(&TrajectoryOut { regime: regime.name(), step: h, samples })
}

/// Propagates from the identity at the first CSV time.
pub fn cmd_propagate(csv: &str, regime: PropagateRegime, h: f64) -> CliResult<String> {
    let (rates, has_v) = parse_rates(csv)?;
    match regime {
        PropagateRegime::Real if has_v => {
            Err(CliError::Schema("the real regime takes `t,wx,wy,wz` only; drop the v columns".into()))
        }
        PropagateRegime::Real => run::<f64, _>(regime, &rates, h, QuatJ::from),
        PropagateRegime::Dual => run::<DualScalar, _>(regime, &rates, h, |q| DualQuatJ::from(canonical_dual(q))),
        PropagateRegime::Complex => run::<ComplexScalar, _>(regime, &rates, h, ComplexQuatJ::from),
    }
}

#[derive(Debug, Serialize)]
struct DualAngleOut {
    theta: f64,
    s: f64,
    parallel: bool,
}

/// Dual angle between two Plücker lines `{"u": [3], "m": [3]}`.
pub fn cmd_lines(l1: &str, l2: &str) -> CliResult<String> {
    let (l1, l2) = (parse_line(l1)?, parse_line(l2)?);
    let a = dual_angle(&l1, &l2);
    json::to_string(&DualAngleOut { theta: a.theta, s: a.s, parallel: a.parallel })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chasles_reports_screw() {
        let out = cmd_chasles(r#"{"a":[1,2,3],"R":[[0,-1,0],[1,0,0],[0,0,1]]}"#, DEFAULT_TOL).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert!((v["s"].as_f64().unwrap() - 3.0).abs() < 1e-12);
        assert!((v["theta"].as_f64().unwrap() - std::f64::consts::FRAC_PI_2).abs() < 1e-12);
        assert!(v["residual"].as_f64().unwrap() < 1e-12);
        let bad = cmd_chasles(r#"{"a":[0,0,0],"R":[[2,0,0],[0,1,0],[0,0,1]]}"#, DEFAULT_TOL);
        assert_eq!(bad.unwrap_err().exit_code(), 3);
    }

    #[test]
    fn propagate_rejects_v_for_real() {
        let err = cmd_propagate("t,wx,wy,wz,vx,vy,vz\n0,0,0,0,0,0,0\n1,0,0,0,0,0,0\n", PropagateRegime::Real, 0.1);
        assert!(matches!(err, Err(CliError::Schema(_))));
        let err = cmd_propagate("t,wx,wy,wz\n0,0,0,0\n1,0,0,0\n", PropagateRegime::Real, 0.0);
        assert_eq!(err.unwrap_err().exit_code(), 2);
    }

    #[test]
    fn lines_perpendicular() {
        let out = cmd_lines(r#"{"u":[1,0,0],"m":[0,0,0]}"#, r#"{"u":[0,1,0],"m":[0,0,0]}"#).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert!((v["theta"].as_f64().unwrap() - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
        assert_eq!(v["s"].as_f64().unwrap(), 0.0);
        assert_eq!(v["parallel"], false);
    }
}
