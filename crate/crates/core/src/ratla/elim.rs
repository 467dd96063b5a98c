use super::field::Field;
use super::matrix::Matrix;
use super::LinalgError;

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone)]
pub struct Echelon<F> {
    pub reduced: Matrix<F>,
    pub pivots: Vec<usize>,
}

impl<F: Field> std::fmt::Debug for Echelon<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Echelon")
            .field("reduced", &self.reduced)
            .field("pivots", &self.pivots)
            .finish()
    }
}

impl<F: Field> Echelon<F> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Gauss-Jordan elimination. In each column the nonzero entry of smallest
/// height is chosen as pivot; the result is independent of that
/// choice since the reduced form is unique.
pub fn rref<F: Field>(m: &Matrix<F>) -> Echelon<F> {
    let (rows, cols) = m.shape();
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows)
            .filter(|&i| !a[(i, c)].is_zero())
            .max_by(|&i, &j| {
                a[(i, c)]
                    .pivot_key()
                    .cmp(&a[(j, c)].pivot_key())
                    .then(j.cmp(&i))
            })
        else {
            continue;
        };
        swap_rows(&mut a, r, p);
        let inv = a[(r, c)].inv();
        for k in c..cols {
            if !a[(r, k)].is_zero() {
                a[(r, k)] = a[(r, k)].clone() * inv.clone();
            }
        }
        for i in 0..rows {
            if i == r || a[(i, c)].is_zero() {
                continue;
            }
            let f = a[(i, c)].clone();
            for k in c..cols {
                if !a[(r, k)].is_zero() {
                    a[(i, k)] = a[(i, k)].clone() - f.clone() * a[(r, k)].clone();
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    Echelon { reduced: a, pivots }
}

fn swap_rows<F: Field>(a: &mut Matrix<F>, i: usize, j: usize) {
    if i == j {
        return;
    }
    for c in 0..a.cols() {
        let t = a[(i, c)].clone();
        a[(i, c)] = a[(j, c)].clone();
        a[(j, c)] = t;
    }
}

pub fn rank<F: Field>(m: &Matrix<F>) -> usize {
    // eliminate along the shorter side
    if m.rows() > m.cols() {
        rref(&m.transpose()).rank()
    } else {
        rref(m).rank()
    }
}

/// Basis of the right null space, one vector per free column.
pub fn kernel_basis<F: Field>(m: &Matrix<F>) -> Vec<Vec<F>> {
    let ech = rref(m);
    let cols = m.cols();
    let mut is_pivot = vec![false; cols];
    for &p in &ech.pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![F::zero(); cols];
            v[free] = F::one();
            for (r, &p) in ech.pivots.iter().enumerate() {
                v[p] = -ech.reduced[(r, free)].clone();
            }
            v
        })
        .collect()
}

/// Some exact solution of `m x = b`, or `None` when the system is inconsistent.
pub fn solve<F: Field>(m: &Matrix<F>, b: &[F]) -> Result<Option<Vec<F>>, LinalgError> {
    if b.len() != m.rows() {
        return Err(LinalgError::DimensionMismatch {
            expected: m.rows(),
            found: b.len(),
        });
    }
    let aug = Matrix::hstack(&[m, &Matrix::column_vector(b)])?;
    let ech = rref(&aug);
    if ech.pivots.last() == Some(&m.cols()) {
        return Ok(None);
    }
    let mut x = vec![F::zero(); m.cols()];
    for (r, &p) in ech.pivots.iter().enumerate() {
        x[p] = ech.reduced[(r, m.cols())].clone();
    }
    Ok(Some(x))
}

/// Solves `m X = b` column by column.
pub fn solve_matrix<F: Field>(
    m: &Matrix<F>,
    b: &Matrix<F>,
) -> Result<Option<Matrix<F>>, LinalgError> {
    let mut cols = Vec::with_capacity(b.cols());
    for c in 0..b.cols() {
        match solve(m, &b.column(c))? {
            Some(x) => cols.push(x),
            None => return Ok(None),
        }
    }
    Matrix::from_columns(m.cols(), &cols).map(Some)
}

pub fn inverse<F: Field>(m: &Matrix<F>) -> Result<Matrix<F>, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare(m.shape()));
    }
    let n = m.rows();
    let aug = Matrix::hstack(&[m, &Matrix::identity(n)])?;
    let ech = rref(&aug);
    if ech.pivots.len() < n || ech.pivots[..n].iter().any(|&p| p >= n) {
        return Err(LinalgError::Singular);
    }
    Ok(ech.reduced.submatrix(0..n, n..2 * n))
}

pub fn determinant<F: Field>(m: &Matrix<F>) -> Result<F, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare(m.shape()));
    }
    let n = m.rows();
    let mut a = m.clone();
    let mut det = F::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[(i, c)].is_zero()) else {
            return Ok(F::zero());
        };
        if p != c {
            swap_rows(&mut a, p, c);
            det = -det;
        }
        let piv = a[(c, c)].clone();
        det = det * piv.clone();
        for i in c + 1..n {
            if a[(i, c)].is_zero() {
                continue;
            }
            let f = a[(i, c)].clone() / piv.clone();
            for k in c..n {
                a[(i, k)] = a[(i, k)].clone() - f.clone() * a[(c, k)].clone();
            }
        }
    }
    Ok(det)
}

pub fn is_invertible<F: Field>(m: &Matrix<F>) -> bool {
    m.is_square() && rank(m) == m.rows()
}

#[cfg(test)]
mod tests {
    use num_traits::Zero;

    use super::*;
    use crate::{RationalMatrix, Scalar};

    fn q(n: i64) -> Scalar {
        Scalar::from_integer(n.into())
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&RationalMatrix::identity(2)), 2);
        assert_eq!(rank(&RationalMatrix::zeros(0, 5)), 0);
        assert_eq!(rank(&RationalMatrix::zeros(5, 0)), 0);
        assert_eq!(rank(&RationalMatrix::from_i64_rows(&[&[1, 2], &[2, 4]])), 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&RationalMatrix::identity(3)).is_empty());
        assert_eq!(kernel_basis(&RationalMatrix::zeros(2, 3)).len(), 3);
        let k = kernel_basis(&RationalMatrix::from_i64_rows(&[&[1, 2], &[2, 4]]));
        assert_eq!(k.len(), 1);
        // proportional to (2, -1)
        assert_eq!(k[0][0].clone() * q(-1), k[0][1].clone() * q(2));
        assert!(!k[0][0].is_zero());
    }

    #[test]
    fn solve_examples() {
        let x = solve(&RationalMatrix::identity(2), &[q(3), q(5)]).unwrap();
        assert_eq!(x, Some(vec![q(3), q(5)]));
        let m = RationalMatrix::from_i64_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(solve(&m, &[q(1), q(3)]).unwrap(), None);
        let z = solve(&RationalMatrix::zeros(2, 2), &[q(0), q(0)]).unwrap();
        assert_eq!(z, Some(vec![q(0), q(0)]));
        assert!(solve(&m, &[q(1)]).is_err());
    }

    #[test]
    fn inverse_and_determinant() {
        let m = RationalMatrix::from_i64_rows(&[&[2, 1], &[1, 1]]);
        let inv = inverse(&m).unwrap();
        assert_eq!(&m * &inv, RationalMatrix::identity(2));
        assert_eq!(determinant(&m).unwrap(), q(1));
        let s = RationalMatrix::from_i64_rows(&[&[1, 2], &[2, 4]]);
        assert!(matches!(inverse(&s), Err(LinalgError::Singular)));
        assert_eq!(determinant(&s).unwrap(), q(0));
        assert_eq!(
            inverse(&RationalMatrix::zeros(0, 0)).unwrap().shape(),
            (0, 0)
        );
    }

    #[test]
    fn small_integer_field_works_too() {
        use num_rational::Ratio;
        let m: Matrix<Ratio<i64>> = Matrix::from_i64_rows(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        assert_eq!(rank(&m), 2);
        assert_eq!(kernel_basis(&m).len(), 1);
    }
}
