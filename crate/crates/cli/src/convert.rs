//! Representation conversion through one hub per regime: the unit
//! quaternion (real), the unit dual quaternion (dual) and the unit complex
//! quaternion (complex).

use clap::ValueEnum;

use quatmotion::lines::PlueckerLine;
use quatmotion::lorentz::{
    adjoint_congruence_to_lorentz4, check_proper_orthochronous, lorentz4_to_quat, quat_to_sl2c, sl2c_to_quat,
};
use quatmotion::rigid::{
    chasles_tol, dual_quat, dual_parts, dualquat_to_rigid, from_homogeneous, screw_to_dualquat, study_residual,
    to_homogeneous, ScrewParams,
};
use quatmotion::rotations::{
    canonical_sign, euler_to_rotmat, quat_to_rotmat_unchecked, quat_to_su2, rotmat_to_euler, rotmat_to_quat_tol,
    su2_to_quat, EulerAngles,
};
use quatmotion::{ComplexScalar, DualScalar, Error, Matrix, Quaternion, Vector3};

use crate::error::{CliError, CliResult};
use crate::json::{self, *};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReprKind {
    Quat,
    Dcm,
    Euler,
    Su2,
    Dualquat,
    Homog,
    Screw,
    Sl2c,
    Lorentz4,
    Plucker,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    Real,
    Dual,
    Complex,
    Line,
}

impl ReprKind {
    pub const ALL: [ReprKind; 10] = [
        ReprKind::Quat,
        ReprKind::Dcm,
        ReprKind::Euler,
        ReprKind::Su2,
        ReprKind::Dualquat,
        ReprKind::Homog,
        ReprKind::Screw,
        ReprKind::Sl2c,
        ReprKind::Lorentz4,
        ReprKind::Plucker,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ReprKind::Quat => "quat",
            ReprKind::Dcm => "dcm",
            ReprKind::Euler => "euler",
            ReprKind::Su2 => "su2",
            ReprKind::Dualquat => "dualquat",
            ReprKind::Homog => "homog",
            ReprKind::Screw => "screw",
            ReprKind::Sl2c => "sl2c",
            ReprKind::Lorentz4 => "lorentz4",
            ReprKind::Plucker => "plucker",
        }
    }

    pub fn regime(self) -> Regime {
        match self {
            ReprKind::Quat | ReprKind::Dcm | ReprKind::Euler | ReprKind::Su2 => Regime::Real,
            ReprKind::Dualquat | ReprKind::Homog | ReprKind::Screw => Regime::Dual,
            ReprKind::Sl2c | ReprKind::Lorentz4 => Regime::Complex,
            ReprKind::Plucker => Regime::Line,
        }
    }
}

type Q = Quaternion<f64>;
type DQ = Quaternion<DualScalar>;
type CQ = Quaternion<ComplexScalar>;

fn check_unit_tol<R: quatmotion::Scalar>(q: Quaternion<R>, tol: f64) -> CliResult<Quaternion<R>> {
    let residual = q.unit_residual();
    if residual.is_nan() || residual > tol {
        return Err(Error::NotUnit { residual }.into());
    }
    Ok(q.normalized()?)
}

fn mat3(m: Mat3J) -> quatmotion::Mat3 {
    Matrix(m)
}

fn mat4(m: Mat4J) -> quatmotion::Mat4 {
    Matrix(m)
}

fn complex2(m: Complex2J) -> Matrix<ComplexScalar, 2> {
    Matrix(m.map(|row| row.map(complex_from_j)))
}

fn complex2_j(m: &Matrix<ComplexScalar, 2>) -> Complex2J {
    m.0.map(|row| row.map(complex_j))
}

/// Sign canon of a dual quaternion, fixed by its real part.
pub fn canonical_dual(q: DQ) -> DQ {
    let (p, _) = dual_parts(q);
    if canonical_sign(p) == p {
        q
    } else {
        -q
    }
}

fn parse_real(kind: ReprKind, payload: &str, tol: f64) -> CliResult<Q> {
    Ok(match kind {
        ReprKind::Quat => check_unit_tol(json::from_str::<QuatJ>(payload)?.into(), tol)?,
        ReprKind::Dcm => rotmat_to_quat_tol(&mat3(json::from_str(payload)?), tol)?,
        ReprKind::Euler => {
            let e: EulerJ = json::from_str(payload)?;
            let r = euler_to_rotmat(EulerAngles { roll: e.roll, pitch: e.pitch, yaw: e.yaw });
            rotmat_to_quat_tol(&r, tol)?
        }
        ReprKind::Su2 => check_unit_tol(su2_to_quat(&complex2(json::from_str(payload)?))?, tol)?,
        _ => unreachable!("not a real representation"),
    })
}

fn emit_real(kind: ReprKind, q: Q) -> CliResult<String> {
    match kind {
        ReprKind::Quat => json::to_string(&QuatJ::from(q)),
        ReprKind::Dcm => json::to_string(&quat_to_rotmat_unchecked(q).0),
        ReprKind::Euler => {
            let e = rotmat_to_euler(&quat_to_rotmat_unchecked(q))?;
            json::to_string(&EulerJ { roll: e.roll, pitch: e.pitch, yaw: e.yaw })
        }
        ReprKind::Su2 => json::to_string(&complex2_j(&quat_to_su2(q))),
        _ => unreachable!("not a real representation"),
    }
}

/// Validates a screw record and builds its dual quaternion.
pub fn screw_from_j(s: &ScrewJ, tol: f64) -> CliResult<ScrewParams> {
    let (u, m) = (Vector3::from_array(s.u), Vector3::from_array(s.m));
    let n = u.norm_sq().sqrt();
    if n.is_nan() || (n - 1.0).abs() > tol {
        return Err(Error::AxisNotUnit { residual: (n - 1.0).abs() }.into());
    }
    if u.dot(m).abs() > tol * m.max_abs().max(1.0) {
        return Err(Error::ConstraintViolated("screw moment must be orthogonal to its axis").into());
    }
    Ok(ScrewParams { u: s.u, m: s.m, theta: s.theta, s: s.s })
}

pub fn screw_to_j(sp: &ScrewParams) -> ScrewJ {
    ScrewJ { u: sp.u, m: sp.m, theta: sp.theta, s: sp.s }
}

fn parse_dual(kind: ReprKind, payload: &str, tol: f64) -> CliResult<DQ> {
    Ok(match kind {
        ReprKind::Dualquat => {
            let q: DQ = json::from_str::<DualQuatJ>(payload)?.into();
            let study = study_residual(q).abs();
            if study.is_nan() || study > tol {
                return Err(Error::ConstraintViolated("dual quaternion is off the Study quadric").into());
            }
            check_unit_tol(q, tol)?
        }
        ReprKind::Homog => {
            let g = from_homogeneous(&mat4(json::from_str(payload)?), tol)?;
            let r = rotmat_to_quat_tol(&g.r, tol)?;
            let a = Vector3::from_array(g.a).to_quat();
            dual_quat(r, (a * r).scale(0.5)).normalized()?
        }
        ReprKind::Screw => screw_to_dualquat(&screw_from_j(&json::from_str(payload)?, tol)?),
        _ => unreachable!("not a dual representation"),
    })
}

fn emit_dual(kind: ReprKind, q: DQ, tol: f64) -> CliResult<String> {
    match kind {
        ReprKind::Dualquat => json::to_string(&DualQuatJ::from(canonical_dual(q))),
        ReprKind::Homog => json::to_string(&to_homogeneous(&dualquat_to_rigid(q)?).0),
        ReprKind::Screw => json::to_string(&screw_to_j(&chasles_tol(&dualquat_to_rigid(q)?, tol)?)),
        _ => unreachable!("not a dual representation"),
    }
}

fn parse_complex(kind: ReprKind, payload: &str, tol: f64) -> CliResult<CQ> {
    Ok(match kind {
        ReprKind::Sl2c => check_unit_tol(sl2c_to_quat(&complex2(json::from_str(payload)?)), tol)?,
        ReprKind::Lorentz4 => {
            let l = mat4(json::from_str(payload)?);
            check_proper_orthochronous(&l, tol)?;
            lorentz4_to_quat(&l)?
        }
        _ => unreachable!("not a complex representation"),
    })
}

fn emit_complex(kind: ReprKind, q: CQ) -> CliResult<String> {
    match kind {
        ReprKind::Sl2c => json::to_string(&complex2_j(&quat_to_sl2c(quatmotion::lorentz::canonical_sign(q)))),
        ReprKind::Lorentz4 => json::to_string(&adjoint_congruence_to_lorentz4(q)?.0),
        _ => unreachable!("not a complex representation"),
    }
}

pub fn parse_line(payload: &str) -> CliResult<PlueckerLine> {
    let l: PlueckerJ = json::from_str(payload)?;
    Ok(PlueckerLine::new(l.u, l.m)?)
}

/// Converts `payload` from one representation to another of the same regime.
pub fn cmd_convert(from: ReprKind, to: ReprKind, payload: &str, tol: f64) -> CliResult<String> {
    if from.regime() != to.regime() {
        return Err(CliError::RegimeMismatch { from: from.name(), to: to.name() });
    }
    match from.regime() {
        Regime::Real => emit_real(to, parse_real(from, payload, tol)?),
        Regime::Dual => emit_dual(to, parse_dual(from, payload, tol)?, tol),
        Regime::Complex => emit_complex(to, parse_complex(from, payload, tol)?),
        Regime::Line => {
            let l = parse_line(payload)?;
            json::to_string(&PlueckerJ { u: l.u, m: l.m })
        }
    }
}
