//! Coefficient rings: real, dual, complex and complex-dual scalars.
//!
//! Every quaternion type in the crate is generic over [`Scalar`]. The
//! complex-dual ring is stored as four reals, but each of its operations is
//! written as the corresponding complex operation on the pair `(a+ib, c+id)`,
//! so restricting to `d = c = 0` reproduces [`ComplexScalar`] results and
//! restricting to `b = d = 0` reproduces [`DualScalar`] results bit for bit.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Relative factor of the invertibility threshold.
pub const TOL_INV: f64 = 1e-12;

fn inv_threshold(max_abs: f64) -> f64 {
    TOL_INV * max_abs.max(1.0)
}

/// Ring operations shared by the four coefficient types.
pub trait Scalar:
    Copy
    + Debug
    + PartialEq
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_f64(x: f64) -> Self;
    /// Multiplication by a real number.
    fn scale(self, k: f64) -> Self;
    /// Largest absolute value over the real components.
    fn max_abs(self) -> f64;
    /// Modulus of the part that decides invertibility (the non-nilpotent part).
    fn primary_abs(self) -> f64;
    /// Multiplicative inverse; fails when `primary_abs` is at or below
    /// `TOL_INV * max(1, max_abs)`.
    fn try_inv(self) -> Result<Self>;
    /// Principal square root.
    fn sqrt(self) -> Self;
    fn sin(self) -> Self;
    fn cos(self) -> Self;
    /// Angle whose cosine and sine are proportional to `x` and `y`.
    ///
    /// Real: `f64::atan2`. Dual: lifted with its derivative. Complex:
    /// `-i Log((x + iy) / sqrt(x² + y²))` on the principal branch, so the real
    /// part lies in `(-π, π]`.
    fn atan2(y: Self, x: Self) -> Self;
    /// `None` when the ring has no complex conjugation.
    fn complex_conj(self) -> Option<Self>;
    /// `None` when the ring has no dual conjugation (`ε ↦ -ε`).
    fn dual_conj(self) -> Option<Self>;
    fn is_finite(self) -> bool;

    fn half(self) -> Self {
        self.scale(0.5)
    }

    fn try_div(self, rhs: Self) -> Result<Self> {
        Ok(self * rhs.try_inv()?)
    }

    /// `max_abs` of the difference.
    fn dist(self, rhs: Self) -> f64 {
        (self - rhs).max_abs()
    }
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_f64(x: f64) -> Self {
        x
    }
    fn scale(self, k: f64) -> Self {
        self * k
    }
    fn max_abs(self) -> f64 {
        self.abs()
    }
    fn primary_abs(self) -> f64 {
        self.abs()
    }
    fn try_inv(self) -> Result<Self> {
        if self.abs() <= inv_threshold(self.abs()) {
            return Err(Error::NotInvertible { modulus: self.abs() });
        }
        Ok(1.0 / self)
    }
    fn sqrt(self) -> Self {
        f64::sqrt(self)
    }
    fn sin(self) -> Self {
        f64::sin(self)
    }
    fn cos(self) -> Self {
        f64::cos(self)
    }
    fn atan2(y: Self, x: Self) -> Self {
        f64::atan2(y, x)
    }
    fn complex_conj(self) -> Option<Self> {
        None
    }
    fn dual_conj(self) -> Option<Self> {
        None
    }
    fn is_finite(self) -> bool {
        f64::is_finite(self)
    }
}

// ---------------------------------------------------------------- dual

/// `re + ε du` with `ε² = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct DualScalar {
    pub re: f64,
    pub du: f64,
}

impl DualScalar {
    pub const fn new(re: f64, du: f64) -> Self {
        Self { re, du }
    }

    pub const fn eps() -> Self {
        Self { re: 0.0, du: 1.0 }
    }

    /// `ε ↦ -ε`.
    pub fn conj(self) -> Self {
        Self::new(self.re, -self.du)
    }

    /// `α ᾱ`, which equals `re²` and is the real modulus squared.
    pub fn modulus_sq(self) -> f64 {
        self.re * self.re
    }
}

impl Add for DualScalar {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.re + o.re, self.du + o.du)
    }
}

impl Sub for DualScalar {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.re - o.re, self.du - o.du)
    }
}

impl Mul for DualScalar {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        dual_mul(self, o)
    }
}

impl Neg for DualScalar {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re, -self.du)
    }
}

/// `(a + εb)(c + εd) = ac + ε(ad + bc)`.
pub fn dual_mul(p: DualScalar, q: DualScalar) -> DualScalar {
    DualScalar::new(p.re * q.re, p.re * q.du + p.du * q.re)
}

/// `1/a - ε b/a²`; pure dual numbers are divisors of zero.
pub fn dual_inverse(p: DualScalar) -> Result<DualScalar> {
    if p.re.abs() <= inv_threshold(p.max_abs()) {
        return Err(Error::NotInvertible { modulus: p.re.abs() });
    }
    let ia = 1.0 / p.re;
    Ok(DualScalar::new(ia, -((p.du * ia) * ia)))
}

/// Lift of an analytic function: `f(x + εs) = f(x) + ε f'(x) s`, given
/// `f(x.re)` and `f'(x.re)`.
pub fn dual_apply(f_value: f64, f_derivative: f64, x: DualScalar) -> DualScalar {
    DualScalar::new(f_value, x.du * f_derivative)
}

pub fn dual_sin(x: DualScalar) -> DualScalar {
    dual_apply(x.re.sin(), x.re.cos(), x)
}

pub fn dual_cos(x: DualScalar) -> DualScalar {
    let c = x.re.cos();
    let s = x.re.sin();
    DualScalar::new(c, -(x.du * s))
}

pub fn dual_sqrt(x: DualScalar) -> DualScalar {
    let r = x.re.sqrt();
    DualScalar::new(r, x.du * (1.0 / (r + r)))
}

impl Scalar for DualScalar {
    fn zero() -> Self {
        Self::new(0.0, 0.0)
    }
    fn one() -> Self {
        Self::new(1.0, 0.0)
    }
    fn from_f64(x: f64) -> Self {
        Self::new(x, 0.0)
    }
    fn scale(self, k: f64) -> Self {
        Self::new(self.re * k, self.du * k)
    }
    fn max_abs(self) -> f64 {
        self.re.abs().max(self.du.abs())
    }
    fn primary_abs(self) -> f64 {
        self.re.abs()
    }
    fn try_inv(self) -> Result<Self> {
        dual_inverse(self)
    }
    fn sqrt(self) -> Self {
        dual_sqrt(self)
    }
    fn sin(self) -> Self {
        dual_sin(self)
    }
    fn cos(self) -> Self {
        dual_cos(self)
    }
    fn atan2(y: Self, x: Self) -> Self {
        let r2 = x.re * x.re + y.re * y.re;
        DualScalar::new(y.re.atan2(x.re), (x.re * y.du - y.re * x.du) / r2)
    }
    fn complex_conj(self) -> Option<Self> {
        None
    }
    fn dual_conj(self) -> Option<Self> {
        Some(self.conj())
    }
    fn is_finite(self) -> bool {
        self.re.is_finite() && self.du.is_finite()
    }
}

// ---------------------------------------------------------------- complex

/// `re + i im`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ComplexScalar {
    pub re: f64,
    pub im: f64,
}

impl ComplexScalar {
    pub const fn new(re: f64, im: f64) -> Self {
        Self { re, im }
    }

    pub const fn i() -> Self {
        Self { re: 0.0, im: 1.0 }
    }

    pub fn conj(self) -> Self {
        Self::new(self.re, -self.im)
    }

    /// `z z*`.
    pub fn norm_sqr(self) -> f64 {
        self.re * self.re + self.im * self.im
    }

    pub fn abs(self) -> f64 {
        self.re.hypot(self.im)
    }

    /// Argument in `(-π, π]`; a signed zero imaginary part counts as `+0`.
    pub fn arg(self) -> f64 {
        let im = if self.im == 0.0 { 0.0 } else { self.im };
        im.atan2(self.re)
    }

    pub fn exp(self) -> Self {
        let m = self.re.exp();
        Self::new(m * self.im.cos(), m * self.im.sin())
    }

    /// Principal logarithm, imaginary part in `(-π, π]`.
    pub fn ln(self) -> Self {
        Self::new(self.abs().ln(), self.arg())
    }

    /// Principal square root: real part ≥ 0, branch cut on the negative
    /// real axis assigned to the upper half plane.
    pub fn sqrt(self) -> Self {
        if self.re == 0.0 && self.im == 0.0 {
            return Self::new(0.0, 0.0);
        }
        let im = if self.im == 0.0 { 0.0 } else { self.im };
        let r = self.abs();
        let t = ((r + self.re.abs()) * 0.5).sqrt();
        if self.re >= 0.0 {
            Self::new(t, im / (2.0 * t))
        } else {
            Self::new(im.abs() / (2.0 * t), t.copysign(im))
        }
    }

    /// Smith's algorithm; exact `1/re` when `im = 0`.
    fn recip_unchecked(self) -> Self {
        let (c, d) = (self.re, self.im);
        if c.abs() >= d.abs() {
            let r = d / c;
            let den = c + d * r;
            Self::new(1.0 / den, -r / den)
        } else {
            let r = c / d;
            let den = c * r + d;
            Self::new(r / den, -1.0 / den)
        }
    }

    pub fn try_recip(self) -> Result<Self> {
        let m = self.abs();
        if m <= inv_threshold(self.max_abs()) {
            return Err(Error::NotInvertible { modulus: m });
        }
        Ok(self.recip_unchecked())
    }
}

impl Add for ComplexScalar {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.re + o.re, self.im + o.im)
    }
}

impl Sub for ComplexScalar {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.re - o.re, self.im - o.im)
    }
}

impl Mul for ComplexScalar {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Self::new(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )
    }
}

impl Neg for ComplexScalar {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re, -self.im)
    }
}

/// `sin(x+iy) = sin x cosh y + i cos x sinh y`.
pub fn complex_sin(z: ComplexScalar) -> ComplexScalar {
    ComplexScalar::new(z.re.sin() * z.im.cosh(), z.re.cos() * z.im.sinh())
}

/// `cos(x+iy) = cos x cosh y - i sin x sinh y`.
pub fn complex_cos(z: ComplexScalar) -> ComplexScalar {
    ComplexScalar::new(z.re.cos() * z.im.cosh(), -(z.re.sin() * z.im.sinh()))
}

fn complex_atan2(y: ComplexScalar, x: ComplexScalar) -> ComplexScalar {
    let r = (x * x + y * y).sqrt();
    let w = (x + ComplexScalar::i() * y) * r.recip_unchecked();
    let l = w.ln();
    // -i * l
    ComplexScalar::new(l.im, -l.re)
}

impl Scalar for ComplexScalar {
    fn zero() -> Self {
        Self::new(0.0, 0.0)
    }
    fn one() -> Self {
        Self::new(1.0, 0.0)
    }
    fn from_f64(x: f64) -> Self {
        Self::new(x, 0.0)
    }
    fn scale(self, k: f64) -> Self {
        Self::new(self.re * k, self.im * k)
    }
    fn max_abs(self) -> f64 {
        self.re.abs().max(self.im.abs())
    }
    fn primary_abs(self) -> f64 {
        self.abs()
    }
    fn try_inv(self) -> Result<Self> {
        self.try_recip()
    }
    fn sqrt(self) -> Self {
        ComplexScalar::sqrt(self)
    }
    fn sin(self) -> Self {
        complex_sin(self)
    }
    fn cos(self) -> Self {
        complex_cos(self)
    }
    fn atan2(y: Self, x: Self) -> Self {
        complex_atan2(y, x)
    }
    fn complex_conj(self) -> Option<Self> {
        Some(self.conj())
    }
    fn dual_conj(self) -> Option<Self> {
        None
    }
    fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}

// ---------------------------------------------------------------- complex dual

/// `(a + ib) + ε(c + id)`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ComplexDualScalar {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl ComplexDualScalar {
    pub const fn new(a: f64, b: f64, c: f64, d: f64) -> Self {
        Self { a, b, c, d }
    }

    pub fn from_parts(primary: ComplexScalar, dual: ComplexScalar) -> Self {
        Self::new(primary.re, primary.im, dual.re, dual.im)
    }

    /// The complex part `a + ib`.
    pub fn primary(self) -> ComplexScalar {
        ComplexScalar::new(self.a, self.b)
    }

    /// The coefficient `c + id` of ε.
    pub fn dual(self) -> ComplexScalar {
        ComplexScalar::new(self.c, self.d)
    }

    pub fn from_dual(x: DualScalar) -> Self {
        Self::new(x.re, 0.0, x.du, 0.0)
    }

    pub fn from_complex(z: ComplexScalar) -> Self {
        Self::new(z.re, z.im, 0.0, 0.0)
    }

    pub fn complex_conj(self) -> Self {
        Self::from_parts(self.primary().conj(), self.dual().conj())
    }

    pub fn dual_conj(self) -> Self {
        Self::from_parts(self.primary(), -self.dual())
    }
}

impl Add for ComplexDualScalar {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::from_parts(self.primary() + o.primary(), self.dual() + o.dual())
    }
}

impl Sub for ComplexDualScalar {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::from_parts(self.primary() - o.primary(), self.dual() - o.dual())
    }
}

impl Mul for ComplexDualScalar {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let (p, q) = (self.primary(), self.dual());
        let (p2, q2) = (o.primary(), o.dual());
        Self::from_parts(p * p2, p * q2 + q * p2)
    }
}

impl Neg for ComplexDualScalar {
    type Output = Self;
    fn neg(self) -> Self {
        Self::from_parts(-self.primary(), -self.dual())
    }
}

pub fn cdual_sin(x: ComplexDualScalar) -> ComplexDualScalar {
    let p = x.primary();
    ComplexDualScalar::from_parts(complex_sin(p), x.dual() * complex_cos(p))
}

pub fn cdual_cos(x: ComplexDualScalar) -> ComplexDualScalar {
    let p = x.primary();
    ComplexDualScalar::from_parts(complex_cos(p), -(x.dual() * complex_sin(p)))
}

/// Adjunction `α† = a* - ε b*`, the composite of complex and dual conjugation.
pub fn cdual_adjoint(x: ComplexDualScalar) -> ComplexDualScalar {
    ComplexDualScalar::from_parts(x.primary().conj(), -x.dual().conj())
}

impl Scalar for ComplexDualScalar {
    fn zero() -> Self {
        Self::new(0.0, 0.0, 0.0, 0.0)
    }
    fn one() -> Self {
        Self::new(1.0, 0.0, 0.0, 0.0)
    }
    fn from_f64(x: f64) -> Self {
        Self::new(x, 0.0, 0.0, 0.0)
    }
    fn scale(self, k: f64) -> Self {
        Self::from_parts(self.primary().scale(k), self.dual().scale(k))
    }
    fn max_abs(self) -> f64 {
        self.primary().max_abs().max(self.dual().max_abs())
    }
    fn primary_abs(self) -> f64 {
        self.primary().abs()
    }
    fn try_inv(self) -> Result<Self> {
        let p = self.primary();
        let m = p.abs();
        if m <= inv_threshold(self.max_abs()) {
            return Err(Error::NotInvertible { modulus: m });
        }
        let ip = p.recip_unchecked();
        Ok(Self::from_parts(ip, -((self.dual() * ip) * ip)))
    }
    fn sqrt(self) -> Self {
        let r = self.primary().sqrt();
        let den = (r + r).recip_unchecked();
        Self::from_parts(r, self.dual() * den)
    }
    fn sin(self) -> Self {
        cdual_sin(self)
    }
    fn cos(self) -> Self {
        cdual_cos(self)
    }
    fn atan2(y: Self, x: Self) -> Self {
        let (yp, xp) = (y.primary(), x.primary());
        let ang = complex_atan2(yp, xp);
        let r2 = xp * xp + yp * yp;
        let du = (xp * y.dual() - yp * x.dual()) * r2.recip_unchecked();
        Self::from_parts(ang, du)
    }
    fn complex_conj(self) -> Option<Self> {
        Some(ComplexDualScalar::complex_conj(self))
    }
    fn dual_conj(self) -> Option<Self> {
        Some(ComplexDualScalar::dual_conj(self))
    }
    fn is_finite(self) -> bool {
        self.a.is_finite() && self.b.is_finite() && self.c.is_finite() && self.d.is_finite()
    }
}
