use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::field::Field;
use super::LinalgError;

/// Dense row-major matrix over an exact field.
///
/// `0 x n` and `n x 0` matrices are legal and behave as expected under
/// products and stacking.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn scalar(n: usize, c: F) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = c.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<F>) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(Matrix { rows, cols, data })
    }

    /// Builds a matrix from integer rows; panics on ragged input.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_fn(rows.len(), cols, |r, c| {
            assert_eq!(rows[r].len(), cols, "ragged rows");
            F::from_i64(rows[r][c])
        })
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self, LinalgError> {
        let cols = rows.first().map_or(0, |r| r.len());
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(LinalgError::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend(r);
        }
        Ok(Matrix {
            rows: n,
            cols,
            data,
        })
    }

    /// Matrix whose columns are the given vectors, all of length `dim`.
    pub fn from_columns(dim: usize, cols: &[Vec<F>]) -> Result<Self, LinalgError> {
        for c in cols {
            if c.len() != dim {
                return Err(LinalgError::DimensionMismatch {
                    expected: dim,
                    found: c.len(),
                });
            }
        }
        Ok(Self::from_fn(dim, cols.len(), |r, c| cols[c][r].clone()))
    }

    pub fn column_vector(v: &[F]) -> Self {
        Self::from_fn(v.len(), 1, |r, _| v[r].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn entries(&self) -> &[F] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<F> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<F>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn map(&self, f: impl Fn(&F) -> F) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        self.map(|x| x.clone() * c.clone())
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Self {
        Self::from_fn(rows.len(), cols.len(), |r, c| {
            self[(rows.start + r, cols.start + c)].clone()
        })
    }

    pub fn hstack(blocks: &[&Matrix<F>]) -> Result<Self, LinalgError> {
        let rows = blocks.first().map_or(0, |b| b.rows);
        if let Some(b) = blocks.iter().find(|b| b.rows != rows) {
            return Err(LinalgError::DimensionMismatch {
                expected: rows,
                found: b.rows,
            });
        }
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let mut off = 0;
        for b in blocks {
            out.set_block(0, off, b);
            off += b.cols;
        }
        Ok(out)
    }

    pub fn vstack(blocks: &[&Matrix<F>]) -> Result<Self, LinalgError> {
        let cols = blocks.first().map_or(0, |b| b.cols);
        if let Some(b) = blocks.iter().find(|b| b.cols != cols) {
            return Err(LinalgError::DimensionMismatch {
                expected: cols,
                found: b.cols,
            });
        }
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut out = Self::zeros(rows, cols);
        let mut off = 0;
        for b in blocks {
            out.set_block(off, 0, b);
            off += b.rows;
        }
        Ok(out)
    }

    /// Writes `block` with its top-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix<F>) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols);
        for r in 0..block.rows {
            for c in 0..block.cols {
                self[(r0 + r, c0 + c)] = block[(r, c)].clone();
            }
        }
    }

    pub fn checked_mul(&self, rhs: &Matrix<F>) -> Result<Self, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = &rhs[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] = out[(r, c)].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn checked_add(&self, rhs: &Matrix<F>) -> Result<Self, LinalgError> {
        self.zip_with(rhs, |a, b| a.clone() + b.clone())
    }

    pub fn checked_sub(&self, rhs: &Matrix<F>) -> Result<Self, LinalgError> {
        self.zip_with(rhs, |a, b| a.clone() - b.clone())
    }

    fn zip_with(&self, rhs: &Matrix<F>, f: impl Fn(&F, &F) -> F) -> Result<Self, LinalgError> {
        if self.shape() != rhs.shape() {
            return Err(LinalgError::ShapeMismatch {
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn mul_vec(&self, v: &[F]) -> Result<Vec<F>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(F::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect())
    }

    /// Commutator `AB - BA`.
    pub fn commutator(&self, rhs: &Matrix<F>) -> Result<Self, LinalgError> {
        self.checked_mul(rhs)?.checked_sub(&rhs.checked_mul(self)?)
    }
}

impl<F: Field> Index<(usize, usize)> for Matrix<F> {
    type Output = F;

    fn index(&self, (r, c): (usize, usize)) -> &F {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl<F: Field> IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut F {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl<F: Field> Mul for &Matrix<F> {
    type Output = Matrix<F>;

    /// Panics on a shape mismatch; use [`Matrix::checked_mul`] for fallible code.
    fn mul(self, rhs: &Matrix<F>) -> Matrix<F> {
        self.checked_mul(rhs)
            .expect("matrix product shape mismatch")
    }
}

impl<F: Field> Add for &Matrix<F> {
    type Output = Matrix<F>;

    fn add(self, rhs: &Matrix<F>) -> Matrix<F> {
        self.checked_add(rhs).expect("matrix sum shape mismatch")
    }
}

impl<F: Field> Sub for &Matrix<F> {
    type Output = Matrix<F>;

    fn sub(self, rhs: &Matrix<F>) -> Matrix<F> {
        self.checked_sub(rhs)
            .expect("matrix difference shape mismatch")
    }
}

impl<F: Field> Neg for &Matrix<F> {
    type Output = Matrix<F>;

    fn neg(self) -> Matrix<F> {
        self.map(|x| -x.clone())
    }
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(r, c)])?;
            }
        }
        write!(f, "]")
    }
}

impl<F: Field> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    rows: usize,
    cols: usize,
    entries: Vec<String>,
}

impl<F: Field> Serialize for Matrix<F> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        MatrixRepr {
            rows: self.rows,
            cols: self.cols,
            entries: self.data.iter().map(|x| x.to_string()).collect(),
        }
        .serialize(s)
    }
}

impl<'de, F: Field> Deserialize<'de> for Matrix<F> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = MatrixRepr::deserialize(d)?;
        let data = repr
            .entries
            .iter()
            .map(|e| {
                e.trim()
                    .parse::<F>()
                    .map_err(|_| D::Error::custom(format!("invalid scalar {e:?}")))
            })
            .collect::<Result<Vec<F>, _>>()?;
        Matrix::from_vec(repr.rows, repr.cols, data).map_err(D::Error::custom)
    }
}
