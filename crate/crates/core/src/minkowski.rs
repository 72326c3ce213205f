//! Minkowski space `Mink^{n+1}` with the form of signature `(+,…,+,−)`.
//!
//! Coordinates are ordered `(x_1, …, x_n, t)`: spatial axes first, time last.
//! The time orientation is the constant field `X = (0, …, 0, 1)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Relative threshold used for every sign test on form values.
pub const EPS: f64 = 1e-9;

/// Scale-free threshold for a sign test on `inner(u, v)`.
///
/// `EPS * max(1, |u|²·|v|²)^{1/2}` with Euclidean norms.
pub fn sign_threshold(u: &Vector, v: &Vector) -> f64 {
    EPS * (u.euclid_norm_sq() * v.euclid_norm_sq()).sqrt().max(1.0)
}

/// A point or tangent vector of `Mink^{n+1}`.
#[derive(Clone, PartialEq)]
pub struct Vector(Vec<f64>);

impl Vector {
    /// Wraps `coords = (x_1, …, x_n, t)`; requires `n >= 2`.
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.len() < 3 {
            return Err(Error::DimensionTooSmall(coords.len().saturating_sub(1)));
        }
        Ok(Vector(coords))
    }

    pub fn from_slice(coords: &[f64]) -> Result<Self> {
        Self::new(coords.to_vec())
    }

    pub fn zeros(n: usize) -> Result<Self> {
        Self::new(vec![0.0; n + 1])
    }

    /// Unit vector along coordinate `index` (0-based; `n` is the time axis).
    pub fn basis(n: usize, index: usize) -> Result<Self> {
        let mut v = Self::zeros(n)?;
        if index > n {
            return Err(Error::InvalidArgument(format!(
                "basis index {index} out of range for n = {n}"
            )));
        }
        v.0[index] = 1.0;
        Ok(v)
    }

    /// The time-orientation field `X = (0, …, 0, 1)`.
    pub fn time_axis(n: usize) -> Result<Self> {
        Self::basis(n, n)
    }

    /// Spatial dimension `n`.
    pub fn n(&self) -> usize {
        self.0.len() - 1
    }

    /// Total dimension `n + 1`.
    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<f64> {
        self.0
    }

    pub fn spatial(&self) -> &[f64] {
        &self.0[..self.0.len() - 1]
    }

    pub fn time(&self) -> f64 {
        self.0[self.0.len() - 1]
    }

    pub fn euclid_dot(&self, other: &Vector) -> f64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn euclid_norm_sq(&self) -> f64 {
        self.0.iter().map(|a| a * a).sum()
    }

    pub fn euclid_norm(&self) -> f64 {
        self.euclid_norm_sq().sqrt()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0.0)
    }

    pub fn scaled(&self, k: f64) -> Vector {
        Vector(self.0.iter().map(|a| a * k).collect())
    }

    /// `self + k * other`.
    pub fn add_scaled(&self, k: f64, other: &Vector) -> Vector {
        Vector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + k * b)
                .collect(),
        )
    }

    pub(crate) fn check_same_dim(&self, other: &Vector) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                actual: other.dim(),
            });
        }
        Ok(())
    }

    /// Form value without a dimension check; callers guarantee equal lengths.
    pub(crate) fn form(&self, other: &Vector) -> f64 {
        let last = self.0.len() - 1;
        let spatial: f64 = self.0[..last]
            .iter()
            .zip(&other.0[..last])
            .map(|(a, b)| a * b)
            .sum();
        spatial - self.0[last] * other.0[last]
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Vector").field(&self.0).finish()
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector(self.0.iter().map(|a| -a).collect())
    }
}

impl Neg for Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        -&self
    }
}

impl Mul<&Vector> for f64 {
    type Output = Vector;
    fn mul(self, rhs: &Vector) -> Vector {
        rhs.scaled(self)
    }
}

/// Causal character of a vector under the Lorentz form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CausalClass {
    Timelike,
    Spacelike,
    Null,
    Zero,
}

impl CausalClass {
    pub fn is_causal(self) -> bool {
        matches!(self, CausalClass::Timelike | CausalClass::Null)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TimeDirection {
    Future,
    Past,
    None,
}

impl TimeDirection {
    pub fn flipped(self) -> TimeDirection {
        match self {
            TimeDirection::Future => TimeDirection::Past,
            TimeDirection::Past => TimeDirection::Future,
            TimeDirection::None => TimeDirection::None,
        }
    }
}

/// `Σ u_k v_k − u_t v_t`.
pub fn inner(u: &Vector, v: &Vector) -> Result<f64> {
    u.check_same_dim(v)?;
    Ok(u.form(v))
}

pub fn classify(v: &Vector) -> CausalClass {
    if v.is_zero() {
        return CausalClass::Zero;
    }
    let q = v.form(v);
    let thr = sign_threshold(v, v);
    if q < -thr {
        CausalClass::Timelike
    } else if q > thr {
        CausalClass::Spacelike
    } else {
        CausalClass::Null
    }
}

/// Future iff `v` is non-spacelike and `g(X, v) = −v_t < 0`.
pub fn time_direction(v: &Vector) -> TimeDirection {
    if !classify(v).is_causal() {
        return TimeDirection::None;
    }
    let g_xv = -v.time();
    if g_xv < 0.0 {
        TimeDirection::Future
    } else if g_xv > 0.0 {
        TimeDirection::Past
    } else {
        TimeDirection::None
    }
}

/// Dense row-major square matrix acting on `Mink^{n+1}`.
#[derive(Clone, PartialEq)]
pub struct Matrix {
    dim: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn identity(dim: usize) -> Matrix {
        let mut data = vec![0.0; dim * dim];
        for i in 0..dim {
            data[i * dim + i] = 1.0;
        }
        Matrix { dim, data }
    }

    pub fn from_row_major(dim: usize, data: Vec<f64>) -> Result<Matrix> {
        if data.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                actual: data.len(),
            });
        }
        if dim < 3 {
            return Err(Error::DimensionTooSmall(dim.saturating_sub(1)));
        }
        Ok(Matrix { dim, data })
    }

    /// Builds the matrix whose columns are `cols`.
    pub fn from_columns(cols: &[Vector]) -> Result<Matrix> {
        let dim = cols.len();
        let mut data = vec![0.0; dim * dim];
        for (j, c) in cols.iter().enumerate() {
            if c.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    actual: c.dim(),
                });
            }
            for (i, &x) in c.coords().iter().enumerate() {
                data[i * dim + j] = x;
            }
        }
        Matrix::from_row_major(dim, data)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.data[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: f64) {
        self.data[row * self.dim + col] = value;
    }

    pub fn as_row_major(&self) -> &[f64] {
        &self.data
    }

    pub fn transpose(&self) -> Matrix {
        let d = self.dim;
        let mut out = Matrix {
            dim: d,
            data: vec![0.0; d * d],
        };
        for i in 0..d {
            for j in 0..d {
                out.data[j * d + i] = self.data[i * d + j];
            }
        }
        out
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.dim != rhs.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                actual: rhs.dim,
            });
        }
        let d = self.dim;
        let mut data = vec![0.0; d * d];
        for i in 0..d {
            for k in 0..d {
                let a = self.data[i * d + k];
                if a == 0.0 {
                    continue;
                }
                for j in 0..d {
                    data[i * d + j] += a * rhs.data[k * d + j];
                }
            }
        }
        Ok(Matrix { dim: d, data })
    }

    pub fn apply(&self, v: &Vector) -> Result<Vector> {
        if v.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                actual: v.dim(),
            });
        }
        Ok(self.apply_unchecked(v))
    }

    pub(crate) fn apply_unchecked(&self, v: &Vector) -> Vector {
        let d = self.dim;
        let x = v.coords();
        Vector(
            (0..d)
                .map(|i| {
                    self.data[i * d..(i + 1) * d]
                        .iter()
                        .zip(x)
                        .map(|(a, b)| a * b)
                        .sum()
                })
                .collect(),
        )
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0_f64, |m, a| m.max(a.abs()))
    }

    /// Largest absolute entrywise difference.
    pub fn max_abs_diff(&self, other: &Matrix) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .fold(0.0_f64, |m, (a, b)| m.max((a - b).abs()))
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[f64]> = self.data.chunks(self.dim).collect();
        f.debug_struct("Matrix").field("rows", &rows).finish()
    }
}

/// Residual of `ΛᵀGΛ = G` in the max norm, relative to `max(1, max|Λ_ij|²)`.
///
/// The normalization keeps the residual meaningful for large boosts, whose
/// entries grow like `cosh ψ` and whose products carry rounding error
/// proportional to `cosh² ψ`.
pub fn verify_isometry(m: &Matrix) -> f64 {
    let d = m.dim;
    let mut worst = 0.0_f64;
    for i in 0..d {
        for j in i..d {
            let mut s = 0.0;
            for k in 0..d {
                let g = if k + 1 == d { -1.0 } else { 1.0 };
                s += g * m.get(k, i) * m.get(k, j);
            }
            let target = if i != j {
                0.0
            } else if i + 1 == d {
                -1.0
            } else {
                1.0
            };
            worst = worst.max((s - target).abs());
        }
    }
    let scale = m.max_abs().powi(2).max(1.0);
    worst / scale
}

/// A linear isometry of `Mink^{n+1}`.
#[derive(Clone, PartialEq)]
pub struct Isometry {
    matrix: Matrix,
    preserves_time: bool,
}

impl Isometry {
    /// Accepts `matrix` if its isometry residual is within [`EPS`].
    pub fn new(matrix: Matrix) -> Result<Isometry> {
        let r = verify_isometry(&matrix);
        if r.is_nan() || r > EPS {
            return Err(Error::NotAnIsometry(r));
        }
        Ok(Self::from_matrix_unchecked(matrix))
    }

    pub(crate) fn from_matrix_unchecked(matrix: Matrix) -> Isometry {
        // g(X, ΛX) = −Λ_tt
        let t = matrix.dim - 1;
        let preserves_time = matrix.get(t, t) > 0.0;
        Isometry {
            matrix,
            preserves_time,
        }
    }

    pub fn identity(n: usize) -> Result<Isometry> {
        check_n(n)?;
        Ok(Self::from_matrix_unchecked(Matrix::identity(n + 1)))
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn preserves_time(&self) -> bool {
        self.preserves_time
    }

    pub fn n(&self) -> usize {
        self.matrix.dim - 1
    }

    pub fn apply(&self, v: &Vector) -> Result<Vector> {
        self.matrix.apply(v)
    }

    /// `self ∘ other`: applies `other` first.
    pub fn compose(&self, other: &Isometry) -> Result<Isometry> {
        Ok(Self::from_matrix_unchecked(self.matrix.mul(&other.matrix)?))
    }

    /// `Λ⁻¹ = G Λᵀ G`.
    pub fn inverse(&self) -> Isometry {
        let d = self.matrix.dim;
        let mut m = self.matrix.transpose();
        for i in 0..d {
            for j in 0..d {
                let gi = if i + 1 == d { -1.0 } else { 1.0 };
                let gj = if j + 1 == d { -1.0 } else { 1.0 };
                let v = m.get(i, j) * gi * gj;
                m.set(i, j, v);
            }
        }
        Self::from_matrix_unchecked(m)
    }

    pub fn residual(&self) -> f64 {
        verify_isometry(&self.matrix)
    }
}

impl fmt::Debug for Isometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Isometry")
            .field("matrix", &self.matrix)
            .field("preserves_time", &self.preserves_time)
            .finish()
    }
}

pub(crate) fn check_n(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::DimensionTooSmall(n));
    }
    Ok(())
}

/// Hyperbolic rotation by `psi` in the `(x_1, t)` plane.
pub fn boost(psi: f64, n: usize) -> Result<Isometry> {
    boost_along(1, psi, n)
}

/// Hyperbolic rotation by `psi` in the `(x_axis, t)` plane, `axis` in `1..=n`.
pub fn boost_along(axis: usize, psi: f64, n: usize) -> Result<Isometry> {
    check_n(n)?;
    if axis == 0 || axis > n {
        return Err(Error::InvalidAxes(axis, n + 1, n));
    }
    let (ch, sh) = (psi.cosh(), psi.sinh());
    let a = axis - 1;
    let mut m = Matrix::identity(n + 1);
    m.set(a, a, ch);
    m.set(a, n, sh);
    m.set(n, a, sh);
    m.set(n, n, ch);
    Ok(Isometry::from_matrix_unchecked(m))
}

/// `i_0 = −Id`, an isometry that reverses time orientation.
pub fn central_symmetry(n: usize) -> Result<Isometry> {
    check_n(n)?;
    let mut m = Matrix::identity(n + 1);
    for i in 0..=n {
        m.set(i, i, -1.0);
    }
    Ok(Isometry::from_matrix_unchecked(m))
}

/// Rotation by `angle` in the plane of spatial axes `(i, j)`, both in `1..=n`.
///
/// Positive angles carry `x_i` towards `x_j`.
pub fn spatial_rotation(axes: (usize, usize), angle: f64, n: usize) -> Result<Isometry> {
    check_n(n)?;
    let (i, j) = axes;
    if i == j || i == 0 || j == 0 || i > n || j > n {
        return Err(Error::InvalidAxes(i, j, n));
    }
    let (c, s) = (angle.cos(), angle.sin());
    let (a, b) = (i - 1, j - 1);
    let mut m = Matrix::identity(n + 1);
    m.set(a, a, c);
    m.set(a, b, -s);
    m.set(b, a, s);
    m.set(b, b, c);
    Ok(Isometry::from_matrix_unchecked(m))
}
