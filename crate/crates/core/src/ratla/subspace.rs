//! Subspaces of `F^n` given by spanning sets.

use super::elim::{kernel_basis, rank, rref};
use super::field::Field;
use super::matrix::Matrix;
use super::LinalgError;

fn check_dims<F>(dim: usize, vecs: &[Vec<F>]) -> Result<(), LinalgError> {
    match vecs.iter().find(|v| v.len() != dim) {
        Some(v) => Err(LinalgError::DimensionMismatch {
            expected: dim,
            found: v.len(),
        }),
        None => Ok(()),
    }
}

/// Canonical basis of the span: the nonzero rows of the reduced echelon form
/// of the matrix whose rows are the given vectors.
pub fn span_basis<F: Field>(dim: usize, vecs: &[Vec<F>]) -> Result<Vec<Vec<F>>, LinalgError> {
    check_dims(dim, vecs)?;
    if vecs.is_empty() {
        return Ok(Vec::new());
    }
    let m = Matrix::from_rows(vecs.to_vec())?;
    let ech = rref(&m);
    Ok((0..ech.rank())
        .map(|r| ech.reduced.row(r).to_vec())
        .collect())
}

pub fn span_dim<F: Field>(dim: usize, vecs: &[Vec<F>]) -> Result<usize, LinalgError> {
    check_dims(dim, vecs)?;
    if vecs.is_empty() {
        return Ok(0);
    }
    Ok(rank(&Matrix::from_rows(vecs.to_vec())?))
}

pub fn sum_subspaces<F: Field>(
    dim: usize,
    a: &[Vec<F>],
    b: &[Vec<F>],
) -> Result<Vec<Vec<F>>, LinalgError> {
    let all: Vec<Vec<F>> = a.iter().chain(b).cloned().collect();
    span_basis(dim, &all)
}

pub fn intersect_subspaces<F: Field>(
    dim: usize,
    a: &[Vec<F>],
    b: &[Vec<F>],
) -> Result<Vec<Vec<F>>, LinalgError> {
    let a = span_basis(dim, a)?;
    let b = span_basis(dim, b)?;
    if a.is_empty() || b.is_empty() {
        return Ok(Vec::new());
    }
    // a x = b y  <=>  [a | -b] (x, y) = 0
    let neg_b: Vec<Vec<F>> = b
        .iter()
        .map(|v| v.iter().map(|x| -x.clone()).collect())
        .collect();
    let cols: Vec<Vec<F>> = a.iter().chain(&neg_b).cloned().collect();
    let m = Matrix::from_columns(dim, &cols)?;
    let mut out = Vec::new();
    for k in kernel_basis(&m) {
        let mut v = vec![F::zero(); dim];
        for (coef, basis) in k.iter().zip(&a) {
            if coef.is_zero() {
                continue;
            }
            for (vi, bi) in v.iter_mut().zip(basis) {
                *vi = vi.clone() + coef.clone() * bi.clone();
            }
        }
        out.push(v);
    }
    span_basis(dim, &out)
}

pub fn contains<F: Field>(dim: usize, basis: &[Vec<F>], v: &[F]) -> Result<bool, LinalgError> {
    let before = span_dim(dim, basis)?;
    let mut ext = basis.to_vec();
    ext.push(v.to_vec());
    Ok(span_dim(dim, &ext)? == before)
}

/// Smallest subspace containing `seeds` and invariant under every operator.
pub fn krylov_closure<F: Field>(
    dim: usize,
    seeds: &[Vec<F>],
    ops: &[&Matrix<F>],
) -> Result<Vec<Vec<F>>, LinalgError> {
    for op in ops {
        if op.shape() != (dim, dim) {
            return Err(LinalgError::ShapeMismatch {
                left: (dim, dim),
                right: op.shape(),
            });
        }
    }
    let mut basis = span_basis(dim, seeds)?;
    loop {
        let mut next = basis.clone();
        for op in ops {
            for v in &basis {
                next.push(op.mul_vec(v)?);
            }
        }
        let next = span_basis(dim, &next)?;
        if next.len() == basis.len() {
            return Ok(basis);
        }
        basis = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Scalar;

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| Scalar::from_integer(x.into())).collect()
    }

    #[test]
    fn coordinate_axes() {
        let e1 = v(&[1, 0]);
        let e2 = v(&[0, 1]);
        assert!(
            intersect_subspaces(2, std::slice::from_ref(&e1), std::slice::from_ref(&e2))
                .unwrap()
                .is_empty()
        );
        assert_eq!(sum_subspaces(2, &[e1], &[e2]).unwrap().len(), 2);
    }

    #[test]
    fn proportional_lines() {
        let i = intersect_subspaces(2, &[v(&[1, 1])], &[v(&[2, 2])]).unwrap();
        assert_eq!(i.len(), 1);
    }

    #[test]
    fn mismatched_ambient_dimension() {
        assert!(sum_subspaces(2, &[v(&[1, 0, 0])], &[]).is_err());
    }

    #[test]
    fn krylov_of_shift() {
        let shift = Matrix::from_i64_rows(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]]);
        let full = krylov_closure(3, &[v(&[1, 0, 0])], &[&shift]).unwrap();
        assert_eq!(full.len(), 3);
        let part = krylov_closure(3, &[v(&[0, 1, 0])], &[&shift]).unwrap();
        assert_eq!(part.len(), 2);
    }
}
