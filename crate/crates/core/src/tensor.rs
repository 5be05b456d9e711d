//! Matrix and volume containers.
//!
//! A video clip of `k` frames, each `m` rows by `n` columns, lives in two
//! equivalent views:
//!
//! * the **matrix view**, an `mn × k` [`Matrix`] whose column `t` is frame `t`
//!   vectorized column-major (pixel `(i, j)` at row `i + m·j`);
//! * the **volume view**, a [`Tensor3D`] indexed `(i, j, t)`.
//!
//! Both share the same flat memory layout (`i + m·j + m·n·t`), so converting
//! between them is a move of the underlying buffer, never a permutation.

use nalgebra::DMatrix;

use crate::error::{Error, Result};

/// Dense real matrix, column-major. Holds `X`, `L`, `W`, `E` and the duals.
pub type Matrix = DMatrix<f64>;

/// Volume dimensions: `m` rows (height), `n` columns (width), `k` frames.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Dims {
    pub m: usize,
    pub n: usize,
    pub k: usize,
}

impl Dims {
    pub fn new(m: usize, n: usize, k: usize) -> Result<Self> {
        if m == 0 || n == 0 || k == 0 {
            return Err(Error::InvalidInput(format!(
                "dimensions must be positive, got {m}x{n}x{k}"
            )));
        }
        Ok(Dims { m, n, k })
    }

    /// Pixels per frame.
    #[inline]
    pub fn pixels(&self) -> usize {
        self.m * self.n
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.m * self.n * self.k
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    #[inline]
    pub fn index(&self, i: usize, j: usize, t: usize) -> usize {
        i + self.m * (j + self.n * t)
    }

    /// Check that `x` is the `mn × k` matrix view of a volume with these dims.
    pub fn check_matrix(&self, x: &Matrix) -> Result<()> {
        if x.nrows() != self.pixels() || x.ncols() != self.k {
            return Err(Error::DimensionMismatch(format!(
                "matrix is {}x{}, expected {}x{} for volume {}x{}x{}",
                x.nrows(),
                x.ncols(),
                self.pixels(),
                self.k,
                self.m,
                self.n,
                self.k
            )));
        }
        Ok(())
    }
}

impl std::fmt::Display for Dims {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}x{}x{}", self.m, self.n, self.k)
    }
}

/// Real-valued `m × n × k` volume.
#[derive(Clone, Debug, PartialEq)]
pub struct Tensor3D {
    dims: Dims,
    data: Vec<f64>,
}

impl Tensor3D {
    pub fn zeros(dims: Dims) -> Self {
        Tensor3D {
            dims,
            data: vec![0.0; dims.len()],
        }
    }

    pub fn from_elem(dims: Dims, value: f64) -> Self {
        Tensor3D {
            dims,
            data: vec![value; dims.len()],
        }
    }

    pub fn from_vec(dims: Dims, data: Vec<f64>) -> Result<Self> {
        if data.len() != dims.len() {
            return Err(Error::DimensionMismatch(format!(
                "volume {dims} needs {} values, got {}",
                dims.len(),
                data.len()
            )));
        }
        Ok(Tensor3D { dims, data })
    }

    pub fn from_fn(dims: Dims, mut f: impl FnMut(usize, usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(dims.len());
        for t in 0..dims.k {
            for j in 0..dims.n {
                for i in 0..dims.m {
                    data.push(f(i, j, t));
                }
            }
        }
        Tensor3D { dims, data }
    }

    /// Inverse reshape: the volume view of an `mn × k` matrix.
    pub fn from_matrix(x: &Matrix, dims: Dims) -> Result<Self> {
        dims.check_matrix(x)?;
        Ok(Tensor3D {
            dims,
            data: x.as_slice().to_vec(),
        })
    }

    /// Reshape to the `mn × k` matrix view.
    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_column_slice(self.dims.pixels(), self.dims.k, &self.data)
    }

    pub fn into_matrix(self) -> Matrix {
        Matrix::from_vec(self.dims.pixels(), self.dims.k, self.data)
    }

    #[inline]
    pub fn dims(&self) -> Dims {
        self.dims
    }

    #[inline]
    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    #[inline]
    pub fn as_mut_slice(&mut self) -> &mut [f64] {
        &mut self.data
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, t: usize) -> f64 {
        self.data[self.dims.index(i, j, t)]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, t: usize, v: f64) {
        let idx = self.dims.index(i, j, t);
        self.data[idx] = v;
    }

    pub fn dot(&self, other: &Tensor3D) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn scale(&self, c: f64) -> Tensor3D {
        Tensor3D {
            dims: self.dims,
            data: self.data.iter().map(|v| c * v).collect(),
        }
    }
}

/// Three-channel forward-difference field of a volume: horizontal (along
/// columns `j`), vertical (along rows `i`) and depth (along frames `t`).
#[derive(Clone, Debug, PartialEq)]
pub struct GradientField3D {
    pub horizontal: Tensor3D,
    pub vertical: Tensor3D,
    pub depth: Tensor3D,
}

impl GradientField3D {
    pub fn zeros(dims: Dims) -> Self {
        GradientField3D {
            horizontal: Tensor3D::zeros(dims),
            vertical: Tensor3D::zeros(dims),
            depth: Tensor3D::zeros(dims),
        }
    }

    pub fn new(horizontal: Tensor3D, vertical: Tensor3D, depth: Tensor3D) -> Result<Self> {
        let d = horizontal.dims();
        if vertical.dims() != d || depth.dims() != d {
            return Err(Error::DimensionMismatch(format!(
                "gradient channels disagree: {}, {}, {}",
                d,
                vertical.dims(),
                depth.dims()
            )));
        }
        Ok(GradientField3D {
            horizontal,
            vertical,
            depth,
        })
    }

    #[inline]
    pub fn dims(&self) -> Dims {
        self.horizontal.dims()
    }

    pub fn channels(&self) -> [&Tensor3D; 3] {
        [&self.horizontal, &self.vertical, &self.depth]
    }

    /// `self + c · other`, channel by channel.
    pub fn add_scaled(&self, c: f64, other: &GradientField3D) -> GradientField3D {
        let f = |a: &Tensor3D, b: &Tensor3D| Tensor3D {
            dims: a.dims,
            data: a.data.iter().zip(&b.data).map(|(x, y)| x + c * y).collect(),
        };
        GradientField3D {
            horizontal: f(&self.horizontal, &other.horizontal),
            vertical: f(&self.vertical, &other.vertical),
            depth: f(&self.depth, &other.depth),
        }
    }

    pub fn dot(&self, other: &GradientField3D) -> f64 {
        self.horizontal.dot(&other.horizontal)
            + self.vertical.dot(&other.vertical)
            + self.depth.dot(&other.depth)
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }
}

/// Largest absolute entry.
pub fn max_abs(x: &Matrix) -> f64 {
    x.iter().fold(0.0_f64, |acc, v| acc.max(v.abs()))
}

pub(crate) fn ensure_finite(x: &Matrix, what: &str) -> Result<()> {
    if x.iter().all(|v| v.is_finite()) {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("{what} contains non-finite entries")))
    }
}
