//! Complex quaternions as the Lorentz machinery.
//!
//! Minkowski vectors are self-adjoint quaternions `t + i (x e₁ + y e₂ + z e₃)`,
//! so the self-adjoint basis is `f₀ = 1`, `fⱼ = i eⱼ`. A unit complex
//! quaternion `u` acts on them by `q ↦ u q u†`, which is the proper
//! orthochronous Lorentz transformation whose column `μ` holds the Minkowski
//! coordinates of `u f_μ u†`. The 2×2 matrix of a quaternion is `qᵘτᵤ` in the
//! τ basis `τ₀ = I`, `τ₁ = i diag(1,-1)`, `τ₂ = [[0,1],[-1,0]]`,
//! `τ₃ = i [[0,1],[1,0]]`.

use crate::coeff::{ComplexDualScalar, ComplexScalar, Scalar};
use crate::error::{Error, Result};
use crate::matrix::{Mat4, Matrix};
use crate::quat::{euclidean_form, Quaternion, Vector3, TOL_CLASS};

type C = ComplexScalar;
type CQ = Quaternion<ComplexScalar>;

pub type SL2CMatrix = Matrix<ComplexScalar, 2>;
pub type Lorentz4Matrix = Mat4;
pub type ComplexMatrix3 = Matrix<ComplexScalar, 3>;
pub type ComplexMatrix4 = Matrix<ComplexScalar, 4>;
pub type ComplexDualMatrix3 = Matrix<ComplexDualScalar, 3>;
/// `(t, x, y, z)`.
pub type MinkowskiVector = [f64; 4];

/// Tolerance of the post hoc Lorentz-matrix checks.
pub const TOL_LORENTZ: f64 = 1e-9;

const I: C = C::new(0.0, 1.0);

fn c(re: f64) -> C {
    C::new(re, 0.0)
}

/// The five actions of the unit complex quaternions plus the chiral action.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ActionKind {
    /// `u q`
    LeftMult,
    /// `q u`
    RightMult,
    /// `u q u*`
    ComplexCongruence,
    /// `u q ū`
    ConjugateCongruence,
    /// `u q u†`
    AdjointCongruence,
    /// `u q u₂`
    Chiral,
}

/// Subspaces of the complex quaternions left invariant by an action.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subspace {
    Scalars,
    PureVectors,
    /// `{q ε}` for an idempotent `ε`.
    LeftIdeal,
    /// `{ε q}` for an idempotent `ε`.
    RightIdeal,
    Real,
    Imaginary,
    SelfAdjoint,
    AntiSelfAdjoint,
}

impl ActionKind {
    pub const ALL: [ActionKind; 6] = [
        ActionKind::LeftMult,
        ActionKind::RightMult,
        ActionKind::ComplexCongruence,
        ActionKind::ConjugateCongruence,
        ActionKind::AdjointCongruence,
        ActionKind::Chiral,
    ];

    /// Invariant subspaces on which the action is studied. The chiral action
    /// is an isometry of the whole space and carries no distinguished one.
    ///
    /// Complex congruence keeps real and imaginary quaternions in place only
    /// for real `u`, since `(u q u*)* = u* q* u`.
    pub fn invariant_subspaces(self) -> &'static [Subspace] {
        use Subspace::*;
        match self {
            ActionKind::LeftMult => &[LeftIdeal],
            ActionKind::RightMult => &[RightIdeal],
            ActionKind::ComplexCongruence => &[Real, Imaginary],
            ActionKind::ConjugateCongruence => &[Scalars, PureVectors],
            ActionKind::AdjointCongruence => &[SelfAdjoint, AntiSelfAdjoint],
            ActionKind::Chiral => &[],
        }
    }

    /// Whether the action preserves the relevant scalar product on its
    /// invariant subspaces. Complex congruence does not in general.
    pub fn is_isometric(self) -> bool {
        self != ActionKind::ComplexCongruence
    }
}

/// Membership of `q` in an invariant subspace, to `tol`. Ideal membership
/// needs an idempotent and is tested by [`in_ideal`] instead.
pub fn in_subspace(s: Subspace, q: CQ, tol: f64) -> Option<bool> {
    let d = match s {
        Subspace::Scalars => q.vector().max_abs(),
        Subspace::PureVectors => q.w.max_abs(),
        Subspace::Real => q.map(|z| z.im).max_abs(),
        Subspace::Imaginary => q.map(|z| z.re).max_abs(),
        Subspace::SelfAdjoint => q.dist(adjoint(q)),
        Subspace::AntiSelfAdjoint => q.dist(-adjoint(q)),
        Subspace::LeftIdeal | Subspace::RightIdeal => return None,
    };
    Some(d <= tol * q.max_abs().max(1.0))
}

fn adjoint(q: CQ) -> CQ {
    q.conj().map(|z| z.conj())
}

fn complex_conj(q: CQ) -> CQ {
    q.map(|z| z.conj())
}

/// `[q] = qᵘτᵤ = [[q⁰ + iq¹, q² + iq³], [-q² + iq³, q⁰ - iq¹]]`.
pub fn quat_to_sl2c(q: CQ) -> SL2CMatrix {
    Matrix([[q.w + I * q.x, q.y + I * q.z], [-q.y + I * q.z, q.w - I * q.x]])
}

/// Inverse of [`quat_to_sl2c`]; every 2×2 complex matrix has a preimage.
pub fn sl2c_to_quat(m: &SL2CMatrix) -> CQ {
    let [[a, b], [cc, d]] = m.0;
    let mi = C::new(0.0, -0.5);
    CQ::new((a + d).scale(0.5), (a - d) * mi, (b - cc).scale(0.5), (b + cc) * mi)
}

/// `u q`, `q u`, `u q u*`, `u q ū`, `u q u†` or `u q u₂`.
pub fn apply_action(kind: ActionKind, u: CQ, q: CQ, u2: Option<CQ>) -> Result<CQ> {
    u.check_unit()?;
    Ok(match kind {
        ActionKind::LeftMult => u * q,
        ActionKind::RightMult => q * u,
        ActionKind::ComplexCongruence => u * q * complex_conj(u),
        ActionKind::ConjugateCongruence => u * q * u.conj(),
        ActionKind::AdjointCongruence => u * q * adjoint(u),
        ActionKind::Chiral => {
            let u2 = u2.ok_or(Error::ConstraintViolated("chiral action needs a second unit quaternion"))?;
            u2.check_unit()?;
            u * q * u2
        }
    })
}

/// The chiral action maps real quaternions to real ones iff both factors are real.
pub fn chiral_preserves_real(u1: CQ, u2: CQ, tol: f64) -> bool {
    u1.map(|z| z.im).max_abs() <= tol && u2.map(|z| z.im).max_abs() <= tol
}

/// Scalars to scalars and vectors to vectors iff `u₁ = ū₂` (conjugate congruence).
pub fn chiral_preserves_scalars(u1: CQ, u2: CQ, tol: f64) -> bool {
    u1.dist(u2.conj()) <= tol
}

/// Self-adjoint to self-adjoint iff `u₁ = u₂†` (adjoint congruence).
pub fn chiral_preserves_adjoint(u1: CQ, u2: CQ, tol: f64) -> bool {
    u1.dist(adjoint(u2)) <= tol
}

/// `t + i x·e`.
pub fn minkowski_to_quat(x: MinkowskiVector) -> CQ {
    CQ::new(c(x[0]), C::new(0.0, x[1]), C::new(0.0, x[2]), C::new(0.0, x[3]))
}

/// Coordinates of a self-adjoint quaternion; no check is made that the
/// discarded parts vanish.
pub fn quat_to_minkowski_unchecked(q: CQ) -> MinkowskiVector {
    [q.w.re, q.x.im, q.y.im, q.z.im]
}

pub fn quat_to_minkowski(q: CQ, tol: f64) -> Result<MinkowskiVector> {
    if in_subspace(Subspace::SelfAdjoint, q, tol) != Some(true) {
        return Err(Error::ConstraintViolated("quaternion is not self-adjoint"));
    }
    Ok(quat_to_minkowski_unchecked(q))
}

/// `η(x, y)` with signature `(+,-,-,-)`.
pub fn minkowski_dot(x: MinkowskiVector, y: MinkowskiVector) -> f64 {
    x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3]
}

/// Self-adjoint basis `f₀ = 1`, `fⱼ = i eⱼ`.
pub fn self_adjoint_basis(mu: usize) -> CQ {
    let mut x = [0.0; 4];
    x[mu] = 1.0;
    minkowski_to_quat(x)
}

/// Max-norm residual of `LᵀηL = η`.
pub fn lorentz_residual(l: &Lorentz4Matrix) -> f64 {
    let eta = Mat4::from_fn(|i, j| match (i, j) {
        (0, 0) => 1.0,
        _ if i == j => -1.0,
        _ => 0.0,
    });
    (l.transpose() * eta * *l).dist(&eta)
}

/// Checks `LᵀηL = η`, `L⁰₀ ≥ 1` and `det L = 1` to `tol`.
pub fn check_proper_orthochronous(l: &Lorentz4Matrix, tol: f64) -> Result<()> {
    let scale = l.max_abs().max(1.0);
    if lorentz_residual(l) > tol * scale * scale {
        return Err(Error::ConstraintViolated("matrix is not Lorentz-orthogonal"));
    }
    if l.0[0][0] < 1.0 - tol * scale {
        return Err(Error::ConstraintViolated("matrix is not orthochronous"));
    }
    if (l.det() - 1.0).abs() > tol * scale.powi(4) {
        return Err(Error::ConstraintViolated("matrix is not proper"));
    }
    Ok(())
}

/// Column `μ` holds the Minkowski coordinates of `u f_μ u†`.
pub fn adjoint_congruence_to_lorentz4(u: CQ) -> Result<Lorentz4Matrix> {
    u.check_unit()?;
    let ua = adjoint(u);
    let cols: [[f64; 4]; 4] =
        std::array::from_fn(|mu| quat_to_minkowski_unchecked(u * self_adjoint_basis(mu) * ua));
    let l = Mat4::from_columns(cols);
    check_proper_orthochronous(&l, TOL_LORENTZ)?;
    Ok(l)
}

/// Unit quaternion of a proper orthochronous Lorentz matrix, sign fixed so
/// the first nonzero real-then-imaginary component is positive.
///
/// With `h₀ = 1`, `hⱼ = i eⱼ` one has `Σ_μ (u f_μ u†) c h_μ = 4 S(u† c) u`
/// for any `c`; the `c ∈ {1, e₁, e₂, e₃}` giving the largest result is used.
pub fn lorentz4_to_quat(l: &Lorentz4Matrix) -> Result<CQ> {
    check_proper_orthochronous(l, TOL_LORENTZ)?;
    let images: [CQ; 4] = std::array::from_fn(|mu| minkowski_to_quat(l.column(mu)));
    let mut best = CQ::zero();
    let mut best_norm = -1.0;
    for k in 0..4 {
        let cq = CQ::basis(k);
        let x = (0..4).fold(CQ::zero(), |acc, mu| acc + images[mu] * cq * self_adjoint_basis(mu));
        let n = x.norm_sq().abs();
        if n > best_norm {
            best_norm = n;
            best = x;
        }
    }
    Ok(canonical_sign(best.smul(best.norm_sq().sqrt().try_inv()?)))
}

/// `±q` with the first component above `1e-12` in `(w.re, w.im, x.re, …)` positive.
pub fn canonical_sign(q: CQ) -> CQ {
    for z in q.to_array() {
        for part in [z.re, z.im] {
            if part.abs() > 1e-12 {
                return if part > 0.0 { q } else { -q };
            }
        }
    }
    q
}

/// Column `i` is the vector part of `u eᵢ ū`, over any coefficient ring.
pub fn congruence_matrix<R: Scalar>(u: Quaternion<R>) -> Matrix<R, 3> {
    let cols: [[R; 3]; 3] = std::array::from_fn(|i| (u * Quaternion::basis(i + 1) * u.conj()).vector().to_array());
    Matrix::from_columns(cols)
}

/// Complex-orthogonal matrix of `u eᵢ ū = eⱼ Lʲᵢ`.
pub fn unitquat_to_so3c(u: CQ) -> Result<ComplexMatrix3> {
    u.check_unit()?;
    Ok(congruence_matrix(u))
}

/// `[L(u)]ᵘᵥ`: component `μ` of `u e_ν`.
pub fn left_mult_matrix<R: Scalar>(u: Quaternion<R>) -> Matrix<R, 4> {
    let cols: [[R; 4]; 4] = std::array::from_fn(|nu| (u * Quaternion::basis(nu)).to_array());
    Matrix::from_columns(cols)
}

/// `[R(u)]ᵘᵥ`: component `μ` of `e_ν u`.
pub fn right_mult_matrix<R: Scalar>(u: Quaternion<R>) -> Matrix<R, 4> {
    let cols: [[R; 4]; 4] = std::array::from_fn(|nu| (Quaternion::basis(nu) * u).to_array());
    Matrix::from_columns(cols)
}

fn conj_matrix<const N: usize>(m: &Matrix<C, N>) -> Matrix<C, N> {
    m.map(|z| z.conj())
}

/// `D = diag(1, i, i, i)`, the change from the basis `e_μ` to `f_μ`.
fn basis_change() -> ComplexMatrix4 {
    ComplexMatrix4::from_fn(|i, j| match (i, j) {
        (0, 0) => c(1.0),
        _ if i == j => I,
        _ => c(0.0),
    })
}

fn basis_change_inv() -> ComplexMatrix4 {
    conj_matrix(&basis_change())
}

/// Einstein–Mayer factors `(L, R)` of the Lorentz transformation of `u`.
///
/// Both factors are written in the self-adjoint basis `f_μ`:
/// `L = D⁻¹ L(u) D` and `R = D⁻¹ R(u†) D` with `D = diag(1, i, i, i)`. In
/// that basis `L R = R L`, `R = L*` and `L R` is the real matrix of
/// [`adjoint_congruence_to_lorentz4`]. In the `e_μ` basis the conjugation
/// condition reads `R(u†) = S L(u)* S` with `S = diag(1,-1,-1,-1)` instead.
pub fn einstein_mayer_factorize(u: CQ) -> Result<(ComplexMatrix4, ComplexMatrix4)> {
    let lorentz = adjoint_congruence_to_lorentz4(u)?;
    let (d, dinv) = (basis_change(), basis_change_inv());
    let l = dinv * left_mult_matrix(u) * d;
    let r = dinv * right_mult_matrix(adjoint(u)) * d;
    let tol = 1e-12 * u.max_abs().max(1.0).powi(2);
    if (l * r).dist(&(r * l)) > tol {
        return Err(Error::FactorizationViolated("factors do not commute"));
    }
    if r.dist(&conj_matrix(&l)) > tol {
        return Err(Error::FactorizationViolated("R is not the complex conjugate of L"));
    }
    let tol = 1e-10 * lorentz.max_abs().max(1.0);
    if (l * r).dist(&lorentz.map(c)) > tol {
        return Err(Error::FactorizationViolated("L R is not the Lorentz matrix of u"));
    }
    Ok((l, r))
}

fn idempotent_residual<R: Scalar>(e: Quaternion<R>) -> f64 {
    (e * e - e).max_abs()
}

/// `½ (1 + sign · i axis)` for a complex unit axis.
pub fn make_idempotent(axis: Vector3<C>, sign: f64) -> Result<CQ> {
    let residual = (axis.dot(axis) - c(1.0)).max_abs();
    if residual > TOL_CLASS {
        return Err(Error::AxisNotUnit { residual });
    }
    let s = if sign < 0.0 { -1.0 } else { 1.0 };
    Ok(CQ::from_scalar_vector(c(0.5), axis.smul(C::new(0.0, 0.5 * s))))
}

/// Chart `(φ, χ)` of a nontrivial idempotent with `E⁰ = ½`:
/// `φ = (E⁰ + iE³)/(E² + iE¹)`, `χ = -(E⁰ - iE³)/(E² + iE¹)`. `None` where
/// the chart is singular (`E² + iE¹ = 0`).
pub fn idempotent_chart(e: CQ) -> Option<(C, C)> {
    let den = e.y + I * e.x;
    let inv = den.try_inv().ok()?;
    let phi = (e.w + I * e.z) * inv;
    let chi = -((e.w - I * e.z) * inv);
    Some((phi, chi))
}

/// Inverse of [`idempotent_chart`]; singular at `φ = χ`.
pub fn idempotent_from_chart(phi: C, chi: C) -> Result<CQ> {
    let inv = (phi - chi).try_inv()?;
    let pc = phi * chi;
    let half_i = C::new(0.0, -0.5);
    Ok(CQ::new(
        c(0.5),
        half_i * (c(1.0) - pc) * inv,
        (c(1.0) + pc).scale(0.5) * inv,
        half_i * (phi + chi) * inv,
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealSide {
    /// `q = q ε + q ε̄`; components are invariant under left multiplication.
    Left,
    /// `q = ε q + ε̄ q`; components are invariant under right multiplication.
    Right,
}

pub fn ideal_project(eps: CQ, q: CQ, side: IdealSide) -> Result<(CQ, CQ)> {
    let residual = idempotent_residual(eps);
    if residual > TOL_CLASS {
        return Err(Error::NotIdempotent { residual });
    }
    let bar = eps.conj();
    Ok(match side {
        IdealSide::Left => (q * eps, q * bar),
        IdealSide::Right => (eps * q, bar * q),
    })
}

/// Whether `x` lies in the left ideal `{q ε}` (`x ε = x`) or the right
/// ideal `{ε q}` (`ε x = x`).
pub fn in_ideal(eps: CQ, x: CQ, side: IdealSide, tol: f64) -> bool {
    let y = match side {
        IdealSide::Left => x * eps,
        IdealSide::Right => eps * x,
    };
    y.dist(x) <= tol * x.max_abs().max(1.0)
}

/// Complex-dual orthogonal matrix of `u̲ e_i ū̲`.
pub fn complex_rigid_matrix(u: Quaternion<ComplexDualScalar>) -> Result<ComplexDualMatrix3> {
    u.check_unit()?;
    Ok(congruence_matrix(u))
}

/// `½ (1 + i u) + ε r` with `⟨u,u⟩ = 1` and `⟨u,r⟩ = 0`.
pub fn cdual_idempotent(axis: Vector3<C>, r: Vector3<C>) -> Result<Quaternion<ComplexDualScalar>> {
    if (axis.dot(axis) - c(1.0)).max_abs() > TOL_CLASS {
        return Err(Error::ConstraintViolated("idempotent axis must satisfy <u,u> = 1"));
    }
    if axis.dot(r).max_abs() > TOL_CLASS * r.max_abs().max(1.0) {
        return Err(Error::ConstraintViolated("idempotent dual part must satisfy <u,r> = 0"));
    }
    let p = make_idempotent(axis, 1.0)?;
    let r = r.to_quat();
    Ok(Quaternion::new(
        ComplexDualScalar::from_parts(p.w, r.w),
        ComplexDualScalar::from_parts(p.x, r.x),
        ComplexDualScalar::from_parts(p.y, r.y),
        ComplexDualScalar::from_parts(p.z, r.z),
    ))
}

/// Rotation angle `Re α` wrapped to `(-π, π]` and rapidity `Im α` of the
/// complex polar angle of a unit quaternion.
pub fn angle_rapidity(u: CQ) -> Result<(f64, f64)> {
    u.check_unit()?;
    let p = u.polar()?;
    let mut theta = p.angle.re;
    let tau = 2.0 * std::f64::consts::PI;
    theta -= tau * ((theta + std::f64::consts::PI) / tau).ceil() - tau;
    Ok((theta, p.angle.im))
}

/// `CS(q q̄′)` restricted to self-adjoint quaternions, i.e. `η(q, q′)`.
pub fn self_adjoint_product(q: CQ, q2: CQ) -> C {
    euclidean_form(q, q2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::DualScalar;
    use crate::quat::{conjugate_congruence, minkowski_form, rodrigues_generic};
    use crate::rigid::{dualquat_to_dualmatrix, rigid_to_dualquat, RigidMotion};
    use crate::rotations::quat_to_rotmat_unchecked;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rc(rng: &mut ChaCha8Rng) -> C {
        C::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
    }

    fn rand_cq(rng: &mut ChaCha8Rng) -> CQ {
        CQ::new(rc(rng), rc(rng), rc(rng), rc(rng))
    }

    fn rand_unit(rng: &mut ChaCha8Rng) -> CQ {
        loop {
            if let Ok(u) = rand_cq(rng).normalized() {
                if u.max_abs() < 3.0 {
                    return u;
                }
            }
        }
    }

    fn real_unit(rng: &mut ChaCha8Rng) -> Quaternion<f64> {
        Quaternion::new(
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        )
        .normalized()
        .unwrap()
    }

    fn boost(beta: f64) -> CQ {
        CQ::new(c((beta / 2.0).cosh()), c(0.0), c(0.0), C::new(0.0, (beta / 2.0).sinh()))
    }

    #[test]
    fn sl2c_matrix() {
        assert_eq!(quat_to_sl2c(CQ::one()), SL2CMatrix::identity());
        let null = CQ::new(c(0.0), c(1.0), I, c(0.0));
        assert!(quat_to_sl2c(null).det().max_abs() < 1e-15);
        // τ basis relations τᵢτⱼ = -δᵢⱼ + εᵢⱼₖτₖ
        let t = |k: usize| quat_to_sl2c(CQ::basis(k));
        assert_eq!(t(1) * t(2), t(3));
        assert_eq!(t(2) * t(3), t(1));
        assert_eq!(t(3) * t(1), t(2));
        assert_eq!(t(1) * t(1), -SL2CMatrix::identity());
        let mut rng = ChaCha8Rng::seed_from_u64(50);
        for _ in 0..200 {
            let (p, q) = (rand_cq(&mut rng), rand_cq(&mut rng));
            let mq = quat_to_sl2c(q);
            assert!((quat_to_sl2c(p) * mq).dist(&quat_to_sl2c(p * q)) < 1e-14);
            assert!(mq.det().dist(q.norm_sq()) < 1e-14);
            let herm = mq.transpose().map(|z| z.conj());
            assert!(herm.dist(&quat_to_sl2c(adjoint(q))) < 1e-15);
            assert!(sl2c_to_quat(&mq).dist(q) < 1e-15);
            let u = rand_unit(&mut rng);
            assert!(quat_to_sl2c(u).det().dist(c(1.0)) < 1e-12);
        }
    }

    #[test]
    fn actions() {
        let b = 0.9;
        let q = apply_action(ActionKind::AdjointCongruence, boost(b), CQ::one(), None).unwrap();
        let expect = CQ::new(c(b.cosh()), c(0.0), c(0.0), C::new(0.0, b.sinh()));
        assert!(q.dist(expect) < 1e-15);
        let mut rng = ChaCha8Rng::seed_from_u64(51);
        let u = rand_unit(&mut rng);
        let s = CQ::scalar(rc(&mut rng));
        assert!(apply_action(ActionKind::ConjugateCongruence, u, s, None).unwrap().dist(s) < 1e-14);
        assert!(apply_action(ActionKind::Chiral, u, s, None).is_err());
        assert!(matches!(
            apply_action(ActionKind::LeftMult, u.scale(2.0), s, None),
            Err(Error::NotUnit { .. })
        ));
        for _ in 0..200 {
            let (u, u2, q) = (rand_unit(&mut rng), rand_unit(&mut rng), rand_cq(&mut rng));
            for kind in [ActionKind::LeftMult, ActionKind::RightMult, ActionKind::Chiral] {
                let q2 = apply_action(kind, u, q, Some(u2)).unwrap();
                assert!(q2.norm_sq().dist(q.norm_sq()) < 1e-12);
            }
            let x = minkowski_to_quat([rc(&mut rng).re, 0.3, -0.8, rc(&mut rng).im]);
            let y = minkowski_to_quat([0.5, rc(&mut rng).re, 0.1, 0.2]);
            let ad = |q| apply_action(ActionKind::AdjointCongruence, u, q, None).unwrap();
            let (x2, y2) = (ad(x), ad(y));
            assert_eq!(in_subspace(Subspace::SelfAdjoint, x2, 1e-12), Some(true));
            let anti = x.smul(I);
            assert_eq!(in_subspace(Subspace::AntiSelfAdjoint, ad(anti), 1e-12), Some(true));
            assert!(self_adjoint_product(x2, y2).dist(self_adjoint_product(x, y)) < 1e-10);
            let vq = CQ::from_scalar_vector(c(0.0), rand_cq(&mut rng).vector());
            let cv = apply_action(ActionKind::ConjugateCongruence, u, vq, None).unwrap();
            assert_eq!(in_subspace(Subspace::PureVectors, cv, 1e-12), Some(true));
            let real = rand_cq(&mut rng).map(|z| c(z.re));
            let ru = real_unit(&mut rng).map(c);
            let cc = apply_action(ActionKind::ComplexCongruence, ru, real, None).unwrap();
            assert_eq!(in_subspace(Subspace::Real, cc, 1e-12), Some(true));
            let cc = apply_action(ActionKind::ComplexCongruence, u, real, None).unwrap();
            assert_eq!(in_subspace(Subspace::Real, cc, 1e-6), Some(false));
        }
        for kind in ActionKind::ALL {
            assert_eq!(kind.is_isometric(), kind != ActionKind::ComplexCongruence);
            let _ = kind.invariant_subspaces();
        }
        assert_eq!(
            ActionKind::AdjointCongruence.invariant_subspaces(),
            &[Subspace::SelfAdjoint, Subspace::AntiSelfAdjoint]
        );
    }

    #[test]
    fn complex_congruence_is_not_isometric() {
        let mut rng = ChaCha8Rng::seed_from_u64(52);
        let found = (0..100).any(|_| {
            let u = rand_unit(&mut rng);
            let p = rand_cq(&mut rng).map(|z| c(z.re));
            let q = rand_cq(&mut rng).map(|z| c(z.re));
            let act = |x| apply_action(ActionKind::ComplexCongruence, u, x, None).unwrap();
            (minkowski_form(act(p), act(q)) - minkowski_form(p, q)).max_abs() > 1e-3
        });
        assert!(found);
    }

    #[test]
    fn chiral_predicates() {
        let mut rng = ChaCha8Rng::seed_from_u64(53);
        let (u, v) = (rand_unit(&mut rng), rand_unit(&mut rng));
        let (ru, rv) = (real_unit(&mut rng).map(c), real_unit(&mut rng).map(c));
        assert!(chiral_preserves_real(ru, rv, 1e-15));
        assert!(!chiral_preserves_real(u, rv, 1e-6));
        assert!(chiral_preserves_scalars(u, u.conj(), 0.0));
        assert!(!chiral_preserves_scalars(u, v, 1e-6));
        assert!(chiral_preserves_adjoint(u, adjoint(u), 0.0));
        assert!(!chiral_preserves_adjoint(u, v, 1e-6));
        // under u₁ = u₂† the chiral action is adjoint congruence
        let q = rand_cq(&mut rng);
        let chiral = apply_action(ActionKind::Chiral, u, q, Some(adjoint(u))).unwrap();
        assert_eq!(chiral, apply_action(ActionKind::AdjointCongruence, u, q, None).unwrap());
    }

    #[test]
    fn lorentz4() {
        assert!(adjoint_congruence_to_lorentz4(CQ::one()).unwrap().dist(&Mat4::identity()) < 1e-15);
        let b = 1.3;
        let l = adjoint_congruence_to_lorentz4(boost(b)).unwrap();
        let mut expect = Mat4::identity();
        expect.0[0][0] = b.cosh();
        expect.0[3][3] = b.cosh();
        expect.0[0][3] = b.sinh();
        expect.0[3][0] = b.sinh();
        assert!(l.dist(&expect) < 1e-14);
        assert!(lorentz_residual(&expect) < 1e-13);

        let mut rng = ChaCha8Rng::seed_from_u64(54);
        for _ in 0..200 {
            let r = real_unit(&mut rng);
            let l = adjoint_congruence_to_lorentz4(r.map(c)).unwrap();
            let rot = quat_to_rotmat_unchecked(r);
            let block = Mat4::from_fn(|i, j| match (i, j) {
                (0, 0) => 1.0,
                (0, _) | (_, 0) => 0.0,
                _ => rot.0[i - 1][j - 1],
            });
            assert!(l.dist(&block) < 1e-14);

            let (u, v) = (rand_unit(&mut rng), rand_unit(&mut rng));
            let (lu, lv) = (adjoint_congruence_to_lorentz4(u).unwrap(), adjoint_congruence_to_lorentz4(v).unwrap());
            let luv = adjoint_congruence_to_lorentz4(u * v).unwrap();
            let scale = luv.max_abs().max(1.0);
            assert!(luv.dist(&(lu * lv)) < 1e-10 * scale);
            assert!(adjoint_congruence_to_lorentz4(-u).unwrap().dist(&lu) < 1e-15 * lu.max_abs());
            let back = lorentz4_to_quat(&lu).unwrap();
            assert!(back.dist(canonical_sign(u)) < 1e-9 * scale);
            let (ld, inv) = (lu.det(), lu.0[0][0]);
            assert!((ld - 1.0).abs() < 1e-9 * scale.powi(4) && inv >= 1.0);
        }
        let mut bad = Mat4::identity();
        bad.0[1][1] = -1.0;
        assert!(lorentz4_to_quat(&bad).is_err());
    }

    #[test]
    fn so3c() {
        assert_eq!(unitquat_to_so3c(CQ::one()).unwrap(), ComplexMatrix3::identity());
        let mut rng = ChaCha8Rng::seed_from_u64(55);
        for _ in 0..200 {
            let u = rand_unit(&mut rng);
            let m = unitquat_to_so3c(u).unwrap();
            let s = m.max_abs().max(1.0).powi(2);
            assert!((m.transpose() * m).dist(&ComplexMatrix3::identity()) < 1e-10 * s);
            assert!(m.det().dist(c(1.0)) < 1e-10 * s * m.max_abs());
            let r = real_unit(&mut rng);
            let mr = unitquat_to_so3c(r.map(c)).unwrap();
            assert!(mr.map(|z| z.re).dist(&quat_to_rotmat_unchecked(r)) < 1e-15);
            assert_eq!(mr.map(|z| z.im).max_abs(), 0.0);

            // complex Rodrigues
            let p = u.polar().unwrap();
            let v = rand_cq(&mut rng).vector();
            if let Some(axis) = p.axis {
                let rod = rodrigues_generic(axis, p.angle, v);
                let cong = conjugate_congruence(u, v.to_quat()).unwrap().vector();
                assert!(rod.dist(cong) < 1e-10 * u.max_abs().max(1.0).powi(2));
            }
        }
        let b = 0.7;
        let m = unitquat_to_so3c(boost(b)).unwrap();
        // boost about e₃ is a rotation by the imaginary angle i b
        let (ch, sh) = (C::new(b.cosh(), 0.0), C::new(0.0, b.sinh()));
        let expect = Matrix([[ch, -sh, c(0.0)], [sh, ch, c(0.0)], [c(0.0), c(0.0), c(1.0)]]);
        assert!(m.dist(&expect) < 1e-15);
        let (theta, beta) = angle_rapidity(boost(b)).unwrap();
        assert!(theta.abs() < 1e-15 && (beta - b).abs() < 1e-14);
    }

    #[test]
    fn mult_matrices() {
        assert_eq!(left_mult_matrix(CQ::one()), ComplexMatrix4::identity());
        assert_eq!(right_mult_matrix(CQ::one()), ComplexMatrix4::identity());
        let u = Quaternion::new(0.3, -1.2, 0.7, 2.5);
        let [u0, u1, u2, u3] = u.to_array();
        let printed_l = Matrix([
            [u0, -u1, -u2, -u3],
            [u1, u0, -u3, u2],
            [u2, u3, u0, -u1],
            [u3, -u2, u1, u0],
        ]);
        let printed_r = Matrix([
            [u0, -u1, -u2, -u3],
            [u1, u0, u3, -u2],
            [u2, -u3, u0, u1],
            [u3, u2, -u1, u0],
        ]);
        assert_eq!(left_mult_matrix(u), printed_l);
        assert_eq!(right_mult_matrix(u), printed_r);
        let mut rng = ChaCha8Rng::seed_from_u64(56);
        for _ in 0..200 {
            let (u, v, q) = (rand_cq(&mut rng), rand_cq(&mut rng), rand_cq(&mut rng));
            let (lu, rv) = (left_mult_matrix(u), right_mult_matrix(v));
            assert!((lu * rv).dist(&(rv * lu)) < 1e-14);
            assert!(CQ::from_array(lu.mul_vec(q.to_array())).dist(u * q) < 1e-14);
            assert!(CQ::from_array(rv.mul_vec(q.to_array())).dist(q * v) < 1e-14);
        }
    }

    #[test]
    fn einstein_mayer() {
        let (l, r) = einstein_mayer_factorize(CQ::one()).unwrap();
        assert_eq!((l, r), (ComplexMatrix4::identity(), ComplexMatrix4::identity()));
        let mut rng = ChaCha8Rng::seed_from_u64(57);
        let s = ComplexMatrix4::from_fn(|i, j| match (i, j) {
            (0, 0) => c(1.0),
            _ if i == j => c(-1.0),
            _ => c(0.0),
        });
        for k in 0..200 {
            let u = if k % 2 == 0 { real_unit(&mut rng).map(c) } else { rand_unit(&mut rng) };
            let (l, r) = einstein_mayer_factorize(u).unwrap();
            assert!(r.dist(&conj_matrix(&l)) < 1e-12);
            // e basis: L(u) R(u†) is the action q ↦ u q u† on components
            let (le, re) = (left_mult_matrix(u), right_mult_matrix(adjoint(u)));
            for mu in 0..4 {
                let image = u * CQ::basis(mu) * adjoint(u);
                assert!(CQ::from_array((le * re).column(mu)).dist(image) < 1e-12 * image.max_abs().max(1.0));
            }
            let scale = le.max_abs().max(1.0);
            assert!(re.dist(&(s * conj_matrix(&le) * s)) < 1e-14 * scale);
        }
        let (l, r) = einstein_mayer_factorize(boost(0.8)).unwrap();
        let lor = adjoint_congruence_to_lorentz4(boost(0.8)).unwrap();
        assert!((l * r).dist(&lor.map(c)) < 1e-14);
    }

    #[test]
    fn idempotents() {
        let e3 = Vector3::new(c(0.0), c(0.0), c(1.0));
        let eps = make_idempotent(e3, 1.0).unwrap();
        assert_eq!(eps, CQ::new(c(0.5), c(0.0), c(0.0), C::new(0.0, 0.5)));
        assert_eq!(eps * eps, eps);
        assert_eq!(eps * eps.conj(), CQ::zero());
        assert_eq!(eps + eps.conj(), CQ::one());
        assert!(eps.classify().idempotent && eps.classify().null);
        assert!(matches!(make_idempotent(e3.scale(2.0), 1.0), Err(Error::AxisNotUnit { .. })));
        assert!(idempotent_chart(eps).is_none());

        let mut rng = ChaCha8Rng::seed_from_u64(58);
        for _ in 0..300 {
            // complex unit axis via a complex rotation of e₃
            let u = rand_unit(&mut rng);
            let axis = conjugate_congruence(u, e3.to_quat()).unwrap().vector();
            let sign = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
            let eps = make_idempotent(axis, sign).unwrap();
            let scale = eps.max_abs().max(1.0).powi(2);
            assert!(idempotent_residual(eps) < 1e-12 * scale);
            assert!(eps.norm_sq().max_abs() < 1e-12 * scale);
            assert!((eps + eps.conj()).dist(CQ::one()) < 1e-15);
            let (phi, chi) = idempotent_chart(eps).unwrap();
            let back = idempotent_from_chart(phi, chi).unwrap();
            assert!(back.dist(eps) < 1e-9 * scale);

            let q = rand_cq(&mut rng);
            for side in [IdealSide::Left, IdealSide::Right] {
                let (a, b) = ideal_project(eps, q, side).unwrap();
                assert!((a + b).dist(q) < 1e-12 * scale);
                assert!(a.norm_sq().max_abs() < 1e-10 * scale * scale);
                assert!(in_ideal(eps, a, side, 1e-10 * scale));
                let w = rand_unit(&mut rng);
                let moved = match side {
                    IdealSide::Left => w * a,
                    IdealSide::Right => a * w,
                };
                assert!(in_ideal(eps, moved, side, 1e-9 * scale * w.max_abs()));
            }
        }
        let (a, b) = ideal_project(eps, CQ::one(), IdealSide::Left).unwrap();
        assert_eq!((a, b), (eps, eps.conj()));
        assert!(matches!(
            ideal_project(CQ::basis(1), CQ::one(), IdealSide::Left),
            Err(Error::NotIdempotent { .. })
        ));
    }

    #[test]
    fn null_condition() {
        let mut rng = ChaCha8Rng::seed_from_u64(59);
        for k in 0..1000 {
            let p = real_unit(&mut rng).scale(rng.gen_range(0.1..3.0));
            let r = if k % 2 == 0 {
                // null: orthogonal, equal length
                let mut r = real_unit(&mut rng);
                r = r - p.scale(euclidean_form(r, p) / p.norm_sq());
                r.scale(p.norm_sq().sqrt() / r.norm_sq().sqrt())
            } else {
                real_unit(&mut rng).scale(rng.gen_range(0.1..3.0))
            };
            let q = CQ::new(
                C::new(p.w, r.w),
                C::new(p.x, r.x),
                C::new(p.y, r.y),
                C::new(p.z, r.z),
            );
            let is_null = q.norm_sq().max_abs() < 1e-10;
            let cond = (p.norm_sq() - r.norm_sq()).abs() < 1e-10 && euclidean_form(p, r).abs() < 1e-10;
            assert_eq!(is_null, cond);
            assert_eq!(is_null, k % 2 == 0);
        }
    }

    #[test]
    fn complex_dual_rigid() {
        let id = complex_rigid_matrix(Quaternion::one()).unwrap();
        assert_eq!(id, ComplexDualMatrix3::identity());
        let mut rng = ChaCha8Rng::seed_from_u64(60);
        for _ in 0..100 {
            let g = RigidMotion { a: [1.0, -0.5, 2.0], r: quat_to_rotmat_unchecked(real_unit(&mut rng)) };
            let dq = rigid_to_dualquat(&g).unwrap();
            let lifted = dq.map(ComplexDualScalar::from_dual);
            let m = complex_rigid_matrix(lifted).unwrap();
            let expect = dualquat_to_dualmatrix(dq).unwrap();
            let slice = m.map(|z| DualScalar::new(z.primary().re, z.dual().re));
            assert!(slice.dist(&expect) < 1e-15);
            assert_eq!(m.map(|z| C::new(z.primary().im, z.dual().im)).max_abs(), 0.0);

            let u = rand_unit(&mut rng);
            let m = complex_rigid_matrix(u.map(ComplexDualScalar::from_complex)).unwrap();
            assert!(m.map(|z| z.primary()).dist(&unitquat_to_so3c(u).unwrap()) < 1e-15);

            // general complex-dual unit: u + ε (a u) with a a complex vector
            let a = rand_cq(&mut rng).vector().to_quat();
            let du = (a * u).scale(0.5);
            let w = Quaternion::new(
                ComplexDualScalar::from_parts(u.w, du.w),
                ComplexDualScalar::from_parts(u.x, du.x),
                ComplexDualScalar::from_parts(u.y, du.y),
                ComplexDualScalar::from_parts(u.z, du.z),
            );
            let m = complex_rigid_matrix(w).unwrap();
            let s = m.max_abs().max(1.0).powi(2);
            assert!((m.transpose() * m).dist(&ComplexDualMatrix3::identity()) < 1e-10 * s);
            assert!(m.det().dist(ComplexDualScalar::one()) < 1e-10 * s * m.max_abs());
        }
    }

    #[test]
    fn cdual_idempotents() {
        let e3 = Vector3::new(c(0.0), c(0.0), c(1.0));
        let l = cdual_idempotent(e3, Vector3::zero()).unwrap();
        assert_eq!(l.map(|z| z.primary()), make_idempotent(e3, 1.0).unwrap());
        assert!(cdual_idempotent(e3, Vector3::new(c(0.0), c(0.0), c(1.0))).is_err());
        let mut rng = ChaCha8Rng::seed_from_u64(61);
        for _ in 0..200 {
            let u = rand_unit(&mut rng);
            let axis = conjugate_congruence(u, e3.to_quat()).unwrap().vector();
            let w = rand_cq(&mut rng).vector();
            let r = axis.cross(w);
            let l = cdual_idempotent(axis, r).unwrap();
            let scale = l.max_abs().max(1.0).powi(2);
            assert!((l * l - l).max_abs() < 1e-10 * scale);
            assert!(l.classify().idempotent || l.max_abs() > 1e4);
            assert!((l + l.conj()).dist(Quaternion::one()) < 1e-15);
        }
    }
}
