//! Euclidean rigid motions, screws, unit dual quaternions and dual matrices.
//!
//! A motion `(a, R)` acts on points by `v ↦ a + R v`. Its dual quaternion is
//! `r + ε ½ a r` with `r` the rotation quaternion, and a frame at point `x`
//! with axes `fᵢ` lifts to the dual vectors `fᵢ + ε (x × fᵢ)`.

use crate::coeff::{DualScalar, Scalar};
use crate::error::{Error, Result};
use crate::matrix::{skew, Mat3, Mat4, Matrix};
use crate::quat::{from_polar, polar, PolarForm, Quaternion, Vector3};
use crate::rotations::{check_rotation, quat_to_rotmat, rotmat_to_quat_tol, TOL_ROT};

pub type DualMatrix3 = Matrix<DualScalar, 3>;
pub type HomogeneousMatrix4 = Mat4;
pub type DualQuat = Quaternion<DualScalar>;

/// Rotation angles below this are treated as pure translations by [`chasles`].
pub const CHASLES_ANGLE_TOL: f64 = 1e-9;

type Q = Quaternion<f64>;
type V = Vector3<f64>;

fn v(a: [f64; 3]) -> V {
    V::from_array(a)
}

/// `v ↦ a + R v`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RigidMotion {
    pub a: [f64; 3],
    pub r: Mat3,
}

/// Screw: rotation by `theta` about the line `(u, m)` and slide `s` along it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScrewParams {
    pub u: [f64; 3],
    /// Moment `d × u` of the axis about the origin.
    pub m: [f64; 3],
    pub theta: f64,
    pub s: f64,
}

impl RigidMotion {
    pub fn identity() -> Self {
        Self { a: [0.0; 3], r: Mat3::identity() }
    }

    pub fn translation(a: [f64; 3]) -> Self {
        Self { a, r: Mat3::identity() }
    }

    pub fn rotation(r: Mat3) -> Self {
        Self { a: [0.0; 3], r }
    }

    /// Validates the rotation block.
    pub fn new(a: [f64; 3], r: Mat3, tol: f64) -> Result<Self> {
        check_rotation(&r, tol)?;
        Ok(Self { a, r })
    }

    /// Max-norm distance between translations and rotation blocks.
    pub fn dist(&self, o: &Self) -> f64 {
        v(self.a).dist(v(o.a)).max(self.r.dist(&o.r))
    }
}

/// `(a, R)(b, S) = (a + R b, R S)`.
pub fn compose(g: &RigidMotion, h: &RigidMotion) -> RigidMotion {
    let rb = g.r.mul_vec(h.a);
    RigidMotion { a: (v(g.a) + v(rb)).to_array(), r: g.r * h.r }
}

/// `(-Rᵀa, Rᵀ)`.
pub fn invert(g: &RigidMotion) -> RigidMotion {
    let rt = g.r.transpose();
    RigidMotion { a: (-v(rt.mul_vec(g.a))).to_array(), r: rt }
}

pub fn apply_point(g: &RigidMotion, p: [f64; 3]) -> [f64; 3] {
    (v(g.a) + v(g.r.mul_vec(p))).to_array()
}

/// `[[1, 0], [a, R]]`, acting on `(1, v)`.
pub fn to_homogeneous(g: &RigidMotion) -> HomogeneousMatrix4 {
    Mat4::from_fn(|i, j| match (i, j) {
        (0, 0) => 1.0,
        (0, _) => 0.0,
        (_, 0) => g.a[i - 1],
        _ => g.r.0[i - 1][j - 1],
    })
}

pub fn from_homogeneous(h: &HomogeneousMatrix4, tol: f64) -> Result<RigidMotion> {
    let row = h.0[0];
    let residual = (row[0] - 1.0).abs().max(row[1].abs()).max(row[2].abs()).max(row[3].abs());
    if residual > tol {
        return Err(Error::ConstraintViolated("first row of a homogeneous matrix must be (1,0,0,0)"));
    }
    let r = Mat3::from_fn(|i, j| h.0[i + 1][j + 1]);
    RigidMotion::new([h.0[1][0], h.0[2][0], h.0[3][0]], r, tol)
}

/// Rotation by `theta` about the unit axis `u` through the origin.
pub fn axis_angle_rotmat(u: [f64; 3], theta: f64) -> Mat3 {
    let h = 0.5 * theta;
    let q = Q::from_scalar_vector(h.cos(), v(u).scale(h.sin()));
    crate::rotations::quat_to_rotmat_unchecked(q)
}

/// Chasles decomposition.
///
/// The axis point `d` solves `(I - R) d = a⊥` on the plane orthogonal to
/// the axis, in closed form `d = ½ a⊥ + ½ cot(θ/2) u × a⊥`. The angle comes
/// from the canonical rotation quaternion, so `θ ∈ [0, π]`. Below
/// [`CHASLES_ANGLE_TOL`] the motion is treated as a pure translation with
/// `u = a/‖a‖`, or `u = e₃` when `a` also vanishes.
pub fn chasles(g: &RigidMotion) -> Result<ScrewParams> {
    chasles_tol(g, TOL_ROT)
}

pub fn chasles_tol(g: &RigidMotion, tol: f64) -> Result<ScrewParams> {
    let q = rotmat_to_quat_tol(&g.r, tol)?;
    let a = v(g.a);
    let vn = q.vector().norm_sq().sqrt();
    let theta = 2.0 * vn.atan2(q.w);
    if theta < CHASLES_ANGLE_TOL {
        let an = a.norm_sq().sqrt();
        let u = if an > 1e-12 { a.scale(1.0 / an) } else { V::basis(2) };
        return Ok(ScrewParams { u: u.to_array(), m: [0.0; 3], theta: 0.0, s: an });
    }
    let u = q.vector().scale(1.0 / vn);
    let s = a.dot(u);
    let a_perp = a - u.scale(s);
    let cot = q.w / vn;
    let d = a_perp.scale(0.5) + u.cross(a_perp).scale(0.5 * cot);
    Ok(ScrewParams { u: u.to_array(), m: d.cross(u).to_array(), theta, s })
}

/// Foot of the perpendicular from the origin to the screw axis, `u × m`.
pub fn screw_axis_point(sp: &ScrewParams) -> [f64; 3] {
    v(sp.u).cross(v(sp.m)).to_array()
}

/// The two commuting factors of a screw: rotation about the axis line and
/// slide along it.
pub fn screw_factors(sp: &ScrewParams) -> (RigidMotion, RigidMotion) {
    let r = axis_angle_rotmat(sp.u, sp.theta);
    let d = v(screw_axis_point(sp));
    let rot = RigidMotion { a: (d - v(r.mul_vec(d.to_array()))).to_array(), r };
    let slide = RigidMotion::translation(v(sp.u).scale(sp.s).to_array());
    (rot, slide)
}

pub fn screw_to_rigid(sp: &ScrewParams) -> RigidMotion {
    let (rot, slide) = screw_factors(sp);
    compose(&slide, &rot)
}

/// `p + ε r` from real and dual parts.
pub fn dual_quat(p: Q, r: Q) -> DualQuat {
    DualQuat::new(
        DualScalar::new(p.w, r.w),
        DualScalar::new(p.x, r.x),
        DualScalar::new(p.y, r.y),
        DualScalar::new(p.z, r.z),
    )
}

/// `(p, r)` of `p + ε r`.
pub fn dual_parts(q: DualQuat) -> (Q, Q) {
    (q.map(|c| c.re), q.map(|c| c.du))
}

pub fn dual_vector(u: [f64; 3], m: [f64; 3]) -> Vector3<DualScalar> {
    Vector3::new(
        DualScalar::new(u[0], m[0]),
        DualScalar::new(u[1], m[1]),
        DualScalar::new(u[2], m[2]),
    )
}

pub fn dual_vector_parts(l: Vector3<DualScalar>) -> ([f64; 3], [f64; 3]) {
    (l.map(|c| c.re).to_array(), l.map(|c| c.du).to_array())
}

/// Study-quadric residual `Σ qᵘ rᵤ` of `q + ε r`.
pub fn study_residual(q: DualQuat) -> f64 {
    let (p, r) = dual_parts(q);
    crate::quat::euclidean_form(p, r)
}

/// `r + ε ½ a r`, with `r` sign-canonical.
pub fn rigid_to_dualquat(g: &RigidMotion) -> Result<DualQuat> {
    let r = rotmat_to_quat_tol(&g.r, TOL_ROT)?;
    let dual = (v(g.a).to_quat() * r).scale(0.5);
    Ok(dual_quat(r, dual))
}

/// Inverse of [`rigid_to_dualquat`]: `R` from the real part, `a = 2 r' r̄`.
pub fn dualquat_to_rigid(q: DualQuat) -> Result<RigidMotion> {
    q.check_unit()?;
    let (p, r) = dual_parts(q);
    let r_mat = quat_to_rotmat(p)?;
    let a = (r * p.conj()).scale(2.0);
    Ok(RigidMotion { a: [a.x, a.y, a.z], r: r_mat })
}

/// Unit dual quaternion `cos(θ̲/2) + sin(θ̲/2) (u + ε m)` with `θ̲ = θ + ε s`.
pub fn screw_to_dualquat(sp: &ScrewParams) -> DualQuat {
    let p = PolarForm {
        magnitude: DualScalar::one(),
        angle: DualScalar::new(sp.theta, sp.s),
        axis: Some(dual_vector(sp.u, sp.m)),
    };
    // axis is set, so from_polar cannot fail
    from_polar(&p).unwrap_or_else(|_| DualQuat::one())
}

/// Screw read off the dual polar form. Fails with [`Error::DegenerateAxis`]
/// for pure translations, whose dual axis has no invertible length.
pub fn dualquat_to_screw(q: DualQuat) -> Result<ScrewParams> {
    q.check_unit()?;
    let p = polar(q)?;
    let axis = p.axis.ok_or(Error::DegenerateAxis)?;
    let (u, m) = dual_vector_parts(axis);
    Ok(ScrewParams { u, m, theta: p.angle.re, s: p.angle.du })
}

/// The canonical frame of `frame` (origin `a`, axes the columns of `R`)
/// lifted to dual vectors and transformed by `u̲ (·) ū̲`.
pub fn dualquat_frame_action(u: DualQuat, frame: &RigidMotion) -> Result<[Vector3<DualScalar>; 3]> {
    u.check_unit()?;
    let x = v(frame.a);
    Ok(std::array::from_fn(|i| {
        let f = v(frame.r.column(i));
        let lifted = dual_vector(f.to_array(), x.cross(f).to_array());
        (u * lifted.to_quat() * u.conj()).vector()
    }))
}

/// Column `i` is the vector part of `u̲ eᵢ ū̲`; equals `R + ε [a]× R`.
pub fn dualquat_to_dualmatrix(u: DualQuat) -> Result<DualMatrix3> {
    let cols = dualquat_frame_action(u, &RigidMotion::identity())?;
    Ok(DualMatrix3::from_columns(cols.map(|c| c.to_array())))
}

pub fn dual_det(m: &DualMatrix3) -> DualScalar {
    m.det()
}

/// `ad(ω) + ε ad(v)`.
pub fn iso3_to_dualmatrix(vel: [f64; 3], omega: [f64; 3]) -> DualMatrix3 {
    let w = skew(omega);
    let a = skew(vel);
    DualMatrix3::from_fn(|i, j| DualScalar::new(w.0[i][j], a.0[i][j]))
}

/// Bracket of `iso(3)`: `[(v, ω), (v', ω')] = (ω×v' - ω'×v, ω×ω')`.
pub fn iso3_bracket(a: ([f64; 3], [f64; 3]), b: ([f64; 3], [f64; 3])) -> ([f64; 3], [f64; 3]) {
    let ((va, wa), (vb, wb)) = ((v(a.0), v(a.1)), (v(b.0), v(b.1)));
    ((wa.cross(vb) - wb.cross(va)).to_array(), wa.cross(wb).to_array())
}

/// Exponential series `Σ Mⁿ/n!`, summed until the term max-norm drops below
/// `1e-15` (at most 400 terms).
pub fn dual_matrix_exp(m: &DualMatrix3) -> DualMatrix3 {
    let mut sum = DualMatrix3::identity();
    let mut term = DualMatrix3::identity();
    for n in 1..400 {
        term = (term * *m).scale(1.0 / n as f64);
        sum = sum + term;
        if term.max_abs() < 1e-15 {
            break;
        }
    }
    sum
}
