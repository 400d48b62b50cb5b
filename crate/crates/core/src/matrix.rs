//! Small square matrices over any coefficient ring.

use std::ops::{Add, Mul, Neg, Sub};

use crate::coeff::Scalar;

/// Row-major `N×N` matrix; `m.0[row][col]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Matrix<R, const N: usize>(pub [[R; N]; N]);

pub type Mat3 = Matrix<f64, 3>;
pub type Mat4 = Matrix<f64, 4>;

impl<R: Scalar, const N: usize> Matrix<R, N> {
    pub fn zero() -> Self {
        Self([[R::zero(); N]; N])
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for i in 0..N {
            m.0[i][i] = R::one();
        }
        m
    }

    pub fn from_fn(f: impl Fn(usize, usize) -> R) -> Self {
        let mut m = Self::zero();
        for i in 0..N {
            for j in 0..N {
                m.0[i][j] = f(i, j);
            }
        }
        m
    }

    pub fn from_columns(cols: [[R; N]; N]) -> Self {
        Self::from_fn(|i, j| cols[j][i])
    }

    pub fn column(&self, j: usize) -> [R; N] {
        std::array::from_fn(|i| self.0[i][j])
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|i, j| self.0[j][i])
    }

    pub fn map<S: Scalar>(&self, f: impl Fn(R) -> S) -> Matrix<S, N> {
        Matrix::from_fn(|i, j| f(self.0[i][j]))
    }

    pub fn scale(&self, k: f64) -> Self {
        self.map(|x| x.scale(k))
    }

    pub fn mul_vec(&self, v: [R; N]) -> [R; N] {
        std::array::from_fn(|i| {
            let mut acc = R::zero();
            for (j, vj) in v.iter().enumerate() {
                acc = acc + self.0[i][j] * *vj;
            }
            acc
        })
    }

    /// Largest `max_abs` over the entries.
    pub fn max_abs(&self) -> f64 {
        self.0
            .iter()
            .flatten()
            .fold(0.0, |m, x| m.max(x.max_abs()))
    }

    /// `max_abs` of the entrywise difference.
    pub fn dist(&self, other: &Self) -> f64 {
        (*self - *other).max_abs()
    }

    pub fn trace(&self) -> R {
        (0..N).fold(R::zero(), |acc, i| acc + self.0[i][i])
    }

    /// Leibniz expansion; intended for `N ≤ 4`.
    pub fn det(&self) -> R {
        let mut total = R::zero();
        for (perm, sign) in permutations(N) {
            let mut term = R::one();
            for (i, &p) in perm.iter().enumerate() {
                term = term * self.0[i][p];
            }
            total = if sign { total + term } else { total - term };
        }
        total
    }
}

impl<R: Scalar, const N: usize> Add for Matrix<R, N> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::from_fn(|i, j| self.0[i][j] + o.0[i][j])
    }
}

impl<R: Scalar, const N: usize> Sub for Matrix<R, N> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::from_fn(|i, j| self.0[i][j] - o.0[i][j])
    }
}

impl<R: Scalar, const N: usize> Neg for Matrix<R, N> {
    type Output = Self;
    fn neg(self) -> Self {
        self.map(|x| -x)
    }
}

impl<R: Scalar, const N: usize> Mul for Matrix<R, N> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Self::from_fn(|i, j| {
            let mut acc = R::zero();
            for k in 0..N {
                acc = acc + self.0[i][k] * o.0[k][j];
            }
            acc
        })
    }
}

/// All permutations of `0..n` with their parity (`true` = even).
fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<(Vec<usize>, bool)>) {
        let n = used.len();
        if prefix.len() == n {
            let mut inversions = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if prefix[i] > prefix[j] {
                        inversions += 1;
                    }
                }
            }
            out.push((prefix.clone(), inversions % 2 == 0));
            return;
        }
        for k in 0..n {
            if !used[k] {
                used[k] = true;
                prefix.push(k);
                rec(prefix, used, out);
                prefix.pop();
                used[k] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// `[v]×`, the matrix of `x ↦ v × x`.
pub fn skew<R: Scalar>(v: [R; 3]) -> Matrix<R, 3> {
    let z = R::zero();
    Matrix([[z, -v[2], v[1]], [v[2], z, -v[0]], [-v[1], v[0], z]])
}
