//! Quaternions over any coefficient ring.
//!
//! Angle convention: a unit quaternion stores the HALF angle,
//! `u = cos(α/2) + sin(α/2) û`, while [`PolarForm::angle`] is the full angle
//! `α`. Every factor of two elsewhere in the crate goes back to this choice.

use std::ops::{Add, Mul, Neg, Sub};

use crate::coeff::Scalar;
use crate::error::{Error, Result};

/// Tolerance of the Unit/Null/Nilpotent/Idempotent tests.
pub const TOL_CLASS: f64 = 1e-10;

/// `w e₀ + x e₁ + y e₂ + z e₃`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quaternion<R> {
    pub w: R,
    pub x: R,
    pub y: R,
    pub z: R,
}

/// Pure quaternion; embeds with `w = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vector3<R> {
    pub x: R,
    pub y: R,
    pub z: R,
}

impl<R: Scalar> Vector3<R> {
    pub fn new(x: R, y: R, z: R) -> Self {
        Self { x, y, z }
    }

    pub fn zero() -> Self {
        Self::new(R::zero(), R::zero(), R::zero())
    }

    /// `e₁`, `e₂`, `e₃` for `k = 0, 1, 2`.
    pub fn basis(k: usize) -> Self {
        let mut a = [R::zero(); 3];
        a[k] = R::one();
        Self::from_array(a)
    }

    pub fn from_array(a: [R; 3]) -> Self {
        Self::new(a[0], a[1], a[2])
    }

    pub fn to_array(self) -> [R; 3] {
        [self.x, self.y, self.z]
    }

    pub fn to_quat(self) -> Quaternion<R> {
        Quaternion::new(R::zero(), self.x, self.y, self.z)
    }

    pub fn map<S: Scalar>(self, mut f: impl FnMut(R) -> S) -> Vector3<S> {
        Vector3::new(f(self.x), f(self.y), f(self.z))
    }

    /// Bilinear (not sesquilinear) scalar product.
    pub fn dot(self, o: Self) -> R {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn cross(self, o: Self) -> Self {
        Self::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    /// `⟨v, v⟩`, ring valued.
    pub fn norm_sq(self) -> R {
        self.dot(self)
    }

    pub fn scale(self, k: f64) -> Self {
        self.map(|c| c.scale(k))
    }

    /// Multiplication by a ring element.
    pub fn smul(self, k: R) -> Self {
        self.map(|c| k * c)
    }

    pub fn max_abs(self) -> f64 {
        self.x.max_abs().max(self.y.max_abs()).max(self.z.max_abs())
    }

    pub fn dist(self, o: Self) -> f64 {
        (self - o).max_abs()
    }
}

impl<R: Scalar> Add for Vector3<R> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl<R: Scalar> Sub for Vector3<R> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl<R: Scalar> Neg for Vector3<R> {
    type Output = Self;
    fn neg(self) -> Self {
        self.map(|c| -c)
    }
}

pub fn cross<R: Scalar>(p: Vector3<R>, q: Vector3<R>) -> Vector3<R> {
    p.cross(q)
}

/// `pq - qp`; equals `2 p×q` on pure quaternions.
pub fn commutator<R: Scalar>(p: Quaternion<R>, q: Quaternion<R>) -> Quaternion<R> {
    p * q - q * p
}

/// `pq + qp`; equals `-2⟨p,q⟩` on pure quaternions.
pub fn anticommutator<R: Scalar>(p: Quaternion<R>, q: Quaternion<R>) -> Quaternion<R> {
    p * q + q * p
}

impl<R: Scalar> Quaternion<R> {
    pub fn new(w: R, x: R, y: R, z: R) -> Self {
        Self { w, x, y, z }
    }

    pub fn from_array(a: [R; 4]) -> Self {
        Self::new(a[0], a[1], a[2], a[3])
    }

    pub fn to_array(self) -> [R; 4] {
        [self.w, self.x, self.y, self.z]
    }

    pub fn zero() -> Self {
        Self::scalar(R::zero())
    }

    pub fn one() -> Self {
        Self::scalar(R::one())
    }

    pub fn scalar(w: R) -> Self {
        Self::new(w, R::zero(), R::zero(), R::zero())
    }

    /// `e₀..e₃` for `k = 0..3`.
    pub fn basis(k: usize) -> Self {
        let mut a = [R::zero(); 4];
        a[k] = R::one();
        Self::from_array(a)
    }

    pub fn from_scalar_vector(w: R, v: Vector3<R>) -> Self {
        Self::new(w, v.x, v.y, v.z)
    }

    pub fn vector(self) -> Vector3<R> {
        Vector3::new(self.x, self.y, self.z)
    }

    pub fn map<S: Scalar>(self, mut f: impl FnMut(R) -> S) -> Quaternion<S> {
        Quaternion::new(f(self.w), f(self.x), f(self.y), f(self.z))
    }

    pub fn scale(self, k: f64) -> Self {
        self.map(|c| c.scale(k))
    }

    /// Multiplication by a ring element (central, so side does not matter).
    pub fn smul(self, k: R) -> Self {
        self.map(|c| k * c)
    }

    pub fn max_abs(self) -> f64 {
        self.to_array().iter().fold(0.0, |m, c| m.max(c.max_abs()))
    }

    pub fn dist(self, o: Self) -> f64 {
        (self - o).max_abs()
    }

    pub fn is_finite(self) -> bool {
        self.to_array().iter().all(|c| c.is_finite())
    }

    /// Quaternion conjugation: negates the vector part.
    pub fn conj(self) -> Self {
        Self::new(self.w, -self.x, -self.y, -self.z)
    }

    /// Coefficientwise complex conjugation `q*`.
    pub fn complex_conj(self) -> Result<Self> {
        let f = |c: R| c.complex_conj().ok_or(Error::UnsupportedConjugation("complex"));
        Ok(Self::new(f(self.w)?, f(self.x)?, f(self.y)?, f(self.z)?))
    }

    /// Coefficientwise dual conjugation `ε ↦ -ε`.
    pub fn dual_conj(self) -> Result<Self> {
        let f = |c: R| c.dual_conj().ok_or(Error::UnsupportedConjugation("dual"));
        Ok(Self::new(f(self.w)?, f(self.x)?, f(self.y)?, f(self.z)?))
    }

    /// `q† = conj(q*)`.
    pub fn adjoint(self) -> Result<Self> {
        Ok(self.complex_conj()?.conj())
    }

    /// Scalar part of `q q̄`.
    pub fn norm_sq(self) -> R {
        euclidean_form(self, self)
    }

    /// Two-sided inverse `q̄ / ‖q‖²`.
    pub fn inverse(self) -> Result<Self> {
        let n = self.norm_sq();
        let scale = self.max_abs().max(1.0);
        if n.primary_abs() <= crate::coeff::TOL_INV * scale * scale {
            return Err(Error::NotInvertible { modulus: n.primary_abs() });
        }
        Ok(self.conj().smul(n.try_inv()?))
    }

    /// `q / sqrt(‖q‖²)` with the ring's principal square root.
    pub fn normalized(self) -> Result<Self> {
        let n = self.norm_sq();
        if n.primary_abs() <= crate::coeff::TOL_INV * self.max_abs().max(1.0).powi(2) {
            return Err(Error::NotInvertible { modulus: n.primary_abs() });
        }
        Ok(self.smul(n.sqrt().try_inv()?))
    }

    /// Residual `max_abs(‖q‖² - 1)`.
    pub fn unit_residual(self) -> f64 {
        self.norm_sq().dist(R::one())
    }

    /// `Ok` when the unit residual is within [`TOL_CLASS`].
    pub fn check_unit(self) -> Result<()> {
        let residual = self.unit_residual();
        if residual <= TOL_CLASS && self.is_finite() {
            Ok(())
        } else {
            Err(Error::NotUnit { residual })
        }
    }

    pub fn polar(self) -> Result<PolarForm<R>> {
        polar(self)
    }

    pub fn classify(self) -> Classification {
        classify(self)
    }
}

impl<R: Scalar> Add for Quaternion<R> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl<R: Scalar> Sub for Quaternion<R> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.w - o.w, self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl<R: Scalar> Neg for Quaternion<R> {
    type Output = Self;
    fn neg(self) -> Self {
        self.map(|c| -c)
    }
}

impl<R: Scalar> Mul for Quaternion<R> {
    type Output = Self;
    fn mul(self, q: Self) -> Self {
        mul(self, q)
    }
}

/// Hamilton product with `eᵢeⱼ = -δᵢⱼ + εᵢⱼₖeₖ`.
pub fn mul<R: Scalar>(p: Quaternion<R>, q: Quaternion<R>) -> Quaternion<R> {
    Quaternion::new(
        p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
        p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
        p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
        p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w,
    )
}

/// `p⁰q⁰ + ⟨p,q⟩`, which is the scalar part of `p q̄`.
pub fn euclidean_form<R: Scalar>(p: Quaternion<R>, q: Quaternion<R>) -> R {
    p.w * q.w + p.x * q.x + p.y * q.y + p.z * q.z
}

/// `p⁰q⁰ - ⟨p,q⟩`, which is the scalar part of `pq`.
pub fn minkowski_form<R: Scalar>(p: Quaternion<R>, q: Quaternion<R>) -> R {
    p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z
}

/// `magnitude · (cos(angle/2) + sin(angle/2) axis)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarForm<R> {
    pub magnitude: R,
    /// Full angle `α`.
    pub angle: R,
    /// `None` when the vector part is null and no axis can be read off.
    pub axis: Option<Vector3<R>>,
}

/// Polar decomposition.
///
/// The half angle is `atan2(sqrt⟨v,v⟩, w)` of the normalized quaternion, with
/// the ring's principal square root. For complex coefficients the half angle
/// is `-i Log(w + i sqrt⟨v,v⟩)`, so `Re α` is the rotation angle and `Im α` the
/// rapidity. When the vector part is null the angle is computed from a zero
/// sine and the axis is left unset.
pub fn polar<R: Scalar>(q: Quaternion<R>) -> Result<PolarForm<R>> {
    let n = q.norm_sq();
    let scale = q.max_abs().max(1.0);
    if n.primary_abs() <= crate::coeff::TOL_INV * scale * scale {
        return Err(Error::NotInvertible { modulus: n.primary_abs() });
    }
    let magnitude = n.sqrt();
    let u = q.smul(magnitude.try_inv()?);
    let v = u.vector();
    let vv = v.norm_sq();
    if vv.primary_abs() <= TOL_CLASS {
        let half = R::atan2(R::zero(), u.w);
        return Ok(PolarForm { magnitude, angle: half + half, axis: None });
    }
    let s = vv.sqrt();
    let half = R::atan2(s, u.w);
    let axis = v.smul(s.try_inv()?);
    Ok(PolarForm { magnitude, angle: half + half, axis: Some(axis) })
}

pub fn from_polar<R: Scalar>(p: &PolarForm<R>) -> Result<Quaternion<R>> {
    let half = p.angle.half();
    let (c, s) = (half.cos(), half.sin());
    let q = match p.axis {
        Some(axis) => Quaternion::from_scalar_vector(c, axis.smul(s)),
        None if s.max_abs() <= TOL_CLASS => Quaternion::scalar(c),
        None => return Err(Error::DegenerateAxis),
    };
    Ok(q.smul(p.magnitude))
}

/// Structural class of a quaternion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuatClass {
    Unit,
    Null,
    NilpotentDeg2,
    Idempotent,
    Generic,
}

/// Flags evaluated by [`classify`]; several may hold at once.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Classification {
    pub unit: bool,
    pub null: bool,
    pub nilpotent: bool,
    pub idempotent: bool,
}

impl Classification {
    pub fn kinds(&self) -> Vec<QuatClass> {
        let mut out = Vec::new();
        if self.unit {
            out.push(QuatClass::Unit);
        }
        if self.null {
            out.push(QuatClass::Null);
        }
        if self.nilpotent {
            out.push(QuatClass::NilpotentDeg2);
        }
        if self.idempotent {
            out.push(QuatClass::Idempotent);
        }
        if out.is_empty() {
            out.push(QuatClass::Generic);
        }
        out
    }

    pub fn has(&self, k: QuatClass) -> bool {
        self.kinds().contains(&k)
    }
}

/// Unit: `‖q‖² = 1` in every component. Null: the invertible part of `‖q‖²`
/// vanishes after scaling `q` to unit max-component. Nilpotent: `q ≠ 0` and the
/// scaled `q²` vanishes. Idempotent: `q² = q` with `q ∉ {0, 1}`.
pub fn classify<R: Scalar>(q: Quaternion<R>) -> Classification {
    let m = q.max_abs();
    if m == 0.0 {
        return Classification { null: true, ..Default::default() };
    }
    let qs = q.scale(1.0 / m);
    let sq = q * q;
    Classification {
        unit: q.unit_residual() <= TOL_CLASS,
        null: qs.norm_sq().primary_abs() <= TOL_CLASS,
        nilpotent: (qs * qs).max_abs() <= TOL_CLASS,
        idempotent: sq.dist(q) <= TOL_CLASS
            && m > TOL_CLASS
            && q.dist(Quaternion::one()) > TOL_CLASS,
    }
}

/// `u q ū`.
pub fn conjugate_congruence<R: Scalar>(u: Quaternion<R>, q: Quaternion<R>) -> Result<Quaternion<R>> {
    u.check_unit()?;
    Ok(u * q * u.conj())
}

/// `cos α v + (1 - cos α)⟨û,v⟩û + sin α û×v` with ring-valued `α`.
pub fn rodrigues_generic<R: Scalar>(axis: Vector3<R>, angle: R, v: Vector3<R>) -> Vector3<R> {
    let (c, s) = (angle.cos(), angle.sin());
    v.smul(c) + axis.smul((R::one() - c) * axis.dot(v)) + axis.cross(v).smul(s)
}
