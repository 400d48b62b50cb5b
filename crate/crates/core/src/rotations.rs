//! Real unit quaternions as rotations: SO(3), SU(2), Euler angles,
//! Cayley–Klein parameters and the Pauli-spinor bilinears.

use crate::coeff::{ComplexScalar, Scalar};
use crate::error::{Error, Result};
use crate::matrix::{Mat3, Matrix};
use crate::quat::{rodrigues_generic, Quaternion, Vector3};

pub type RotationMatrix3 = Mat3;
pub type SU2Matrix = Matrix<ComplexScalar, 2>;

/// Default tolerance of the rotation and unitarity checks.
pub const TOL_ROT: f64 = 1e-10;
/// Extraction reports gimbal lock below this `|cos(pitch)|`.
pub const GIMBAL_TOL: f64 = 1e-7;

type Q = Quaternion<f64>;

/// Roll θ about x, pitch φ about y, yaw ψ about z, radians.
///
/// `R = Rz(ψ) Ry(φ) Rx(θ)`: applied to vectors, roll acts first.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EulerAngles {
    pub roll: f64,
    pub pitch: f64,
    pub yaw: f64,
}

/// `ψ†ψ` and `ψ†σⁱψ` of the spinor carried by a real quaternion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PauliObservables {
    pub density: f64,
    /// σ-index order.
    pub spin: [f64; 3],
}

/// Max-norm residuals of `RᵀR - I` and `det R - 1`.
pub fn rotation_residual(r: &Mat3) -> f64 {
    let orth = (r.transpose() * *r).dist(&Mat3::identity());
    orth.max((r.det() - 1.0).abs())
}

pub fn check_rotation(r: &Mat3, tol: f64) -> Result<()> {
    let residual = rotation_residual(r);
    if residual <= tol && r.0.iter().flatten().all(|x| x.is_finite()) {
        Ok(())
    } else {
        Err(Error::NotARotation { residual })
    }
}

/// Column `j` is the vector part of `u eⱼ ū`, so `R(uu') = R(u) R(u')`.
pub fn quat_to_rotmat(u: Q) -> Result<Mat3> {
    u.check_unit()?;
    Ok(quat_to_rotmat_unchecked(u))
}

/// [`quat_to_rotmat`] without the unit check; quadratic in `u`.
pub fn quat_to_rotmat_unchecked(u: Q) -> Mat3 {
    let Q { w, x, y, z } = u;
    Matrix([
        [1.0 - 2.0 * (y * y + z * z), 2.0 * (x * y - w * z), 2.0 * (x * z + w * y)],
        [2.0 * (x * y + w * z), 1.0 - 2.0 * (x * x + z * z), 2.0 * (y * z - w * x)],
        [2.0 * (x * z - w * y), 2.0 * (y * z + w * x), 1.0 - 2.0 * (x * x + y * y)],
    ])
}

/// Sign canon for extracted quaternions: `w > 0`, or on a tie the first
/// nonzero component positive.
pub fn canonical_sign(q: Q) -> Q {
    for c in q.to_array() {
        if c > 0.0 {
            return q;
        }
        if c < 0.0 {
            return -q;
        }
    }
    q
}

/// Shepperd extraction pivoting on the largest of the trace and the diagonal.
pub fn rotmat_to_quat(r: &Mat3) -> Result<Q> {
    rotmat_to_quat_tol(r, TOL_ROT)
}

pub fn rotmat_to_quat_tol(r: &Mat3, tol: f64) -> Result<Q> {
    check_rotation(r, tol)?;
    let m = &r.0;
    let t = m[0][0] + m[1][1] + m[2][2];
    let pivots = [t, m[0][0], m[1][1], m[2][2]];
    let k = (0..4)
        .max_by(|&a, &b| pivots[a].total_cmp(&pivots[b]))
        .unwrap_or(0);
    let q = match k {
        0 => {
            let w = 0.5 * (1.0 + t).sqrt();
            let f = 0.25 / w;
            Q::new(w, (m[2][1] - m[1][2]) * f, (m[0][2] - m[2][0]) * f, (m[1][0] - m[0][1]) * f)
        }
        1 => {
            let x = 0.5 * (1.0 + m[0][0] - m[1][1] - m[2][2]).sqrt();
            let f = 0.25 / x;
            Q::new((m[2][1] - m[1][2]) * f, x, (m[0][1] + m[1][0]) * f, (m[0][2] + m[2][0]) * f)
        }
        2 => {
            let y = 0.5 * (1.0 - m[0][0] + m[1][1] - m[2][2]).sqrt();
            let f = 0.25 / y;
            Q::new((m[0][2] - m[2][0]) * f, (m[0][1] + m[1][0]) * f, y, (m[1][2] + m[2][1]) * f)
        }
        _ => {
            let z = 0.5 * (1.0 - m[0][0] - m[1][1] + m[2][2]).sqrt();
            let f = 0.25 / z;
            Q::new((m[1][0] - m[0][1]) * f, (m[0][2] + m[2][0]) * f, (m[1][2] + m[2][1]) * f, z)
        }
    };
    Ok(canonical_sign(q))
}

/// `cos θ v + (1 - cos θ)⟨v,u⟩u + sin θ u×v` for a unit axis `u`.
pub fn rodrigues(axis: [f64; 3], theta: f64, v: [f64; 3]) -> [f64; 3] {
    rodrigues_generic(Vector3::from_array(axis), theta, Vector3::from_array(v)).to_array()
}

/// `[q] = q⁰τ₀ + qⁱτᵢ` with `τ₁ = i diag(1,-1)`, `τ₂ = [[0,1],[-1,0]]`,
/// `τ₃ = i [[0,1],[1,0]]`.
pub fn quat_to_su2(q: Q) -> SU2Matrix {
    let c = ComplexScalar::new;
    Matrix([[c(q.w, q.x), c(q.y, q.z)], [c(-q.y, q.z), c(q.w, -q.x)]])
}

/// Inverse of [`quat_to_su2`]; rejects matrices outside the real span of the τ basis.
pub fn su2_to_quat(m: &SU2Matrix) -> Result<Q> {
    let [[a, b], [cc, d]] = m.0;
    let residual = (d - a.conj()).max_abs().max((cc + b.conj()).max_abs());
    if residual > TOL_ROT * m.max_abs().max(1.0) {
        return Err(Error::ConstraintViolated("matrix is not of the form q⁰τ₀ + qⁱτᵢ"));
    }
    Ok(Q::new(a.re, a.im, b.re, b.im))
}

/// `(L, R)` with `L = [[u¹, -u²*], [u², u¹*]]` for `u¹ = u⁰ + i u²`,
/// `u² = u¹ + i u³` (the `z¹ + i z²` splitting, `j` read as the complex unit),
/// and `R = Lᵀ`.
///
/// `L` acting on the column `(q⁰ + i q², q¹ + i q³)` gives the same
/// components of `uq`.
pub fn su2_left_right(u: Q) -> Result<(SU2Matrix, SU2Matrix)> {
    u.check_unit()?;
    let u1 = ComplexScalar::new(u.w, u.y);
    let u2 = ComplexScalar::new(u.x, u.z);
    let l = Matrix([[u1, -u2.conj()], [u2, u1.conj()]]);
    Ok((l, l.transpose()))
}

/// Elementary rotations of roll, pitch and yaw.
pub fn rot_x(t: f64) -> Mat3 {
    let (s, c) = t.sin_cos();
    Matrix([[1.0, 0.0, 0.0], [0.0, c, -s], [0.0, s, c]])
}

pub fn rot_y(t: f64) -> Mat3 {
    let (s, c) = t.sin_cos();
    Matrix([[c, 0.0, s], [0.0, 1.0, 0.0], [-s, 0.0, c]])
}

pub fn rot_z(t: f64) -> Mat3 {
    let (s, c) = t.sin_cos();
    Matrix([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])
}

pub fn euler_to_rotmat(e: EulerAngles) -> Mat3 {
    rot_z(e.yaw) * rot_y(e.pitch) * rot_x(e.roll)
}

/// Errors with [`Error::GimbalLock`] when `|cos(pitch)| < GIMBAL_TOL`.
pub fn rotmat_to_euler(r: &Mat3) -> Result<EulerAngles> {
    let m = &r.0;
    let cp = m[2][1].hypot(m[2][2]);
    if cp < GIMBAL_TOL {
        return Err(Error::GimbalLock { cos_pitch: cp });
    }
    Ok(EulerAngles {
        roll: m[2][1].atan2(m[2][2]),
        pitch: (-m[2][0]).atan2(cp),
        yaw: m[1][0].atan2(m[0][0]),
    })
}

/// Extraction that never fails: at gimbal lock roll is set to zero and the
/// combined roll/yaw angle is reported as yaw.
pub fn rotmat_to_euler_locked(r: &Mat3) -> EulerAngles {
    match rotmat_to_euler(r) {
        Ok(e) => e,
        Err(_) => {
            let m = &r.0;
            EulerAngles {
                roll: 0.0,
                pitch: (-m[2][0]).atan2(m[2][1].hypot(m[2][2])),
                yaw: (-m[0][1]).atan2(m[1][1]),
            }
        }
    }
}

/// Euler-angle rates `(θ̇, φ̇, ψ̇)` producing the space-frame angular velocity
/// `omega` (so that `Ṙ = [ω]× R`).
pub fn euler_rates(e: EulerAngles, omega: [f64; 3]) -> Result<[f64; 3]> {
    let (sp, cp) = e.pitch.sin_cos();
    if cp.abs() < GIMBAL_TOL {
        return Err(Error::GimbalLock { cos_pitch: cp.abs() });
    }
    let (sy, cy) = e.yaw.sin_cos();
    let a = cy * omega[0] + sy * omega[1];
    let pitch_rate = -sy * omega[0] + cy * omega[1];
    let roll_rate = a / cp;
    let yaw_rate = omega[2] + sp * roll_rate;
    Ok([roll_rate, pitch_rate, yaw_rate])
}

/// `α = q⁰ + i q³`, `β = q² + i q¹`.
pub fn cayley_klein(q: Q) -> (ComplexScalar, ComplexScalar) {
    (ComplexScalar::new(q.w, q.z), ComplexScalar::new(q.y, q.x))
}

/// Spinor `ψ = (z¹, z²)`, `z¹ = q⁰ + i q¹`, `z² = q² + i q³`.
///
/// spin₁ = `2(q⁰q² + q¹q³)`, spin₂ = `i(z¹z²* - z²z¹*) = 2(q⁰q³ - q¹q²)`,
/// spin₃ = `(q⁰)² + (q¹)² - (q²)² - (q³)²`.
pub fn pauli_bilinears(q: Q) -> PauliObservables {
    let Q { w, x, y, z } = q;
    PauliObservables {
        density: w * w + x * x + y * y + z * z,
        spin: [
            2.0 * (w * y + x * z),
            2.0 * (w * z - x * y),
            w * w + x * x - y * y - z * z,
        ],
    }
}

/// `[J, v₁, v₂, v₃]` with `J = q⁰dq¹ - q¹dq⁰ + q²dq³ - q³dq²` and `v` the
/// vector part of `½(q̄ dq - d̄q q)`; ħ/m = 1.
pub fn noether_current(q: Q, dq: Q) -> [f64; 4] {
    let j = q.w * dq.x - q.x * dq.w + q.y * dq.z - q.z * dq.y;
    let v = (q.conj() * dq - dq.conj() * q).scale(0.5);
    [j, v.x, v.y, v.z]
}
