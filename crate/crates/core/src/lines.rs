//! Line geometry.
//!
//! Oriented real lines are dual unit vectors `u + ε m` with moment
//! `m = x × u`. Bivectors of ℝ⁴ are identified with ℂ³ through `E + iB`,
//! under which the Hodge star is multiplication by `i`.

use crate::coeff::{ComplexScalar, DualScalar, Scalar};
use crate::error::{Error, Result};
use crate::quat::{conjugate_congruence, Quaternion, Vector3};
use crate::rigid::{dual_vector, dual_vector_parts, DualQuat};

/// Tolerance of the line invariants `‖u‖ = 1` and `⟨u,m⟩ = 0`.
pub const TOL_LINE: f64 = 1e-10;
/// Below this `sin θ` two lines are treated as parallel.
pub const PARALLEL_TOL: f64 = 1e-9;

type V = Vector3<f64>;

fn v(a: [f64; 3]) -> V {
    V::from_array(a)
}

/// Oriented line with unit direction `u` and moment `m ⊥ u`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlueckerLine {
    pub u: [f64; 3],
    pub m: [f64; 3],
}

/// `θ + ε s`. `parallel` marks the branch where `s` is a point-to-line
/// distance rather than a signed offset along the common perpendicular.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DualAngle {
    pub theta: f64,
    pub s: f64,
    pub parallel: bool,
}

impl DualAngle {
    pub fn as_dual(&self) -> DualScalar {
        DualScalar::new(self.theta, self.s)
    }
}

/// `Eⁱ εᵢ + Bⁱ *εᵢ` with `εᵢ = e₀∧eᵢ` and `*ε₁ = e₂∧e₃` (cyclic).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bivector4 {
    pub e: [f64; 3],
    pub b: [f64; 3],
}

impl PlueckerLine {
    pub fn new(u: [f64; 3], m: [f64; 3]) -> Result<Self> {
        let n = v(u).norm_sq().sqrt();
        if (n - 1.0).abs() > TOL_LINE {
            return Err(Error::DirNotUnit { norm: n });
        }
        if v(u).dot(v(m)).abs() > TOL_LINE * v(m).max_abs().max(1.0) {
            return Err(Error::ConstraintViolated("line moment must be orthogonal to its direction"));
        }
        Ok(Self { u, m })
    }

    /// Point of the line closest to the origin, `u × m`.
    pub fn foot(&self) -> [f64; 3] {
        v(self.u).cross(v(self.m)).to_array()
    }

    pub fn reversed(&self) -> Self {
        Self { u: (-v(self.u)).to_array(), m: (-v(self.m)).to_array() }
    }

    pub fn dist(&self, o: &Self) -> f64 {
        v(self.u).dist(v(o.u)).max(v(self.m).dist(v(o.m)))
    }

    /// Equality of the underlying unoriented lines: `(u, m) ~ (-u, -m)`.
    pub fn same_unoriented(&self, o: &Self, tol: f64) -> bool {
        self.dist(o) <= tol || self.dist(&o.reversed()) <= tol
    }
}

pub fn line_from_point_dir(x: [f64; 3], u: [f64; 3]) -> Result<PlueckerLine> {
    let n = v(u).norm_sq().sqrt();
    if (n - 1.0).abs() > TOL_LINE {
        return Err(Error::DirNotUnit { norm: n });
    }
    Ok(PlueckerLine { u, m: v(x).cross(v(u)).to_array() })
}

pub fn line_to_dualvector(l: &PlueckerLine) -> Vector3<DualScalar> {
    dual_vector(l.u, l.m)
}

/// Decodes a dual unit vector; fails unless `⟨l̲,l̲⟩ = 1 + ε0`.
pub fn dualvector_to_line(l: Vector3<DualScalar>) -> Result<PlueckerLine> {
    let n = l.dot(l);
    let residual = (n.re - 1.0).abs().max(n.du.abs());
    if residual > TOL_LINE || !n.is_finite() {
        return Err(Error::NotDualUnit { residual });
    }
    let (u, m) = dual_vector_parts(l);
    Ok(PlueckerLine { u, m })
}

/// Dual angle from `⟨l̲, l̲′⟩ = cos θ - ε s sin θ`.
///
/// `s` is the signed offset from `l1` to `l2` along `u × u′`. For parallel
/// lines the dual part carries no distance, so `s` is the distance between
/// the lines and `theta` is `0` or `π`.
pub fn dual_angle(l1: &PlueckerLine, l2: &PlueckerLine) -> DualAngle {
    let (u1, u2) = (v(l1.u), v(l2.u));
    let sin = u1.cross(u2).norm_sq().sqrt();
    let theta = sin.atan2(u1.dot(u2));
    if sin < PARALLEL_TOL {
        let d = v(l2.foot()) - v(l1.foot());
        let s = d.cross(u1).norm_sq().sqrt();
        return DualAngle { theta, s, parallel: true };
    }
    let dual_part = u1.dot(v(l2.m)) + v(l1.m).dot(u2);
    DualAngle { theta, s: -dual_part / sin, parallel: false }
}

/// `l̲ × l̲′ = sin θ̲ n̲`, returning the common perpendicular `n̲` and `θ̲`.
pub fn dual_cross(l1: &PlueckerLine, l2: &PlueckerLine) -> Result<(Vector3<DualScalar>, DualAngle)> {
    let angle = dual_angle(l1, l2);
    if angle.parallel {
        return Err(Error::ParallelLines);
    }
    let c = line_to_dualvector(l1).cross(line_to_dualvector(l2));
    let sin = crate::coeff::dual_sin(angle.as_dual());
    Ok((c.smul(sin.try_inv()?), angle))
}

/// `q l̲ q̄` with the line as a pure dual quaternion.
pub fn transform_line(q: DualQuat, l: &PlueckerLine) -> Result<PlueckerLine> {
    let moved = conjugate_congruence(q, line_to_dualvector(l).to_quat())?;
    let (u, m) = dual_vector_parts(moved.vector());
    Ok(PlueckerLine { u, m })
}

pub fn bivector_to_c3(b: &Bivector4) -> Vector3<ComplexScalar> {
    Vector3::from_array(std::array::from_fn(|k| ComplexScalar::new(b.e[k], b.b[k])))
}

pub fn c3_to_bivector(z: Vector3<ComplexScalar>) -> Bivector4 {
    let a = z.to_array();
    Bivector4 { e: a.map(|c| c.re), b: a.map(|c| c.im) }
}

/// Hodge star, `*(E, B) = (-B, E)`.
pub fn hodge_star(b: &Bivector4) -> Bivector4 {
    Bivector4 { e: b.b.map(|x| -x), b: b.e }
}

/// `x ∧ y` for 4-vectors indexed `0..4`.
pub fn wedge4(x: [f64; 4], y: [f64; 4]) -> Bivector4 {
    let p = |i: usize, j: usize| x[i] * y[j] - x[j] * y[i];
    Bivector4 { e: [p(0, 1), p(0, 2), p(0, 3)], b: [p(2, 3), p(3, 1), p(1, 2)] }
}

/// Result of the Klein quadric test.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KleinCheck {
    /// Coefficient of `e₀∧e₁∧e₂∧e₃` in `b ∧ b`, equal to `2⟨E,B⟩`.
    pub value: f64,
    pub decomposable: bool,
}

pub fn klein_quadric_check(b: &Bivector4) -> KleinCheck {
    let value = 2.0 * v(b.e).dot(v(b.b));
    let scale = v(b.e).max_abs().max(v(b.b).max_abs()).max(1.0);
    KleinCheck { value, decomposable: value.abs() < 1e-10 * scale * scale }
}

/// The bivector components as a complex pure quaternion `(E + iB)`.
pub fn bivector_to_quat(b: &Bivector4) -> Quaternion<ComplexScalar> {
    bivector_to_c3(b).to_quat()
}
