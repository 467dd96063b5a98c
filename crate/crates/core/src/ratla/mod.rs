//! Exact linear algebra over rational fields.

mod elim;
mod field;
mod matrix;
mod subspace;

pub use elim::{
    determinant, inverse, is_invertible, kernel_basis, rank, rref, solve, solve_matrix, Echelon,
};
pub use field::Field;
pub use matrix::Matrix;
pub use subspace::{
    contains, intersect_subspaces, krylov_closure, span_basis, span_dim, sum_subspaces,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("shape mismatch: {left:?} vs {right:?}")]
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("matrix of shape {0:?} is not square")]
    NotSquare((usize, usize)),
    #[error("matrix is singular")]
    Singular,
}

/// Serde adapter writing a single scalar as `"p/q"` (or `"p"`).
pub mod scalar_str {
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::Scalar;

    pub fn serialize<S: Serializer>(x: &Scalar, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Scalar, D::Error> {
        let raw = String::deserialize(d)?;
        crate::parse_scalar(&raw).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod props {
    use proptest::prelude::*;

    use super::*;

    type Q = crate::Scalar;

    fn small_matrix() -> impl Strategy<Value = Matrix<Q>> {
        (0usize..=8, 0usize..=8).prop_flat_map(|(r, c)| {
            proptest::collection::vec((-5i64..=5, 1i64..=3), r * c).prop_map(move |xs| {
                let data = xs
                    .into_iter()
                    .map(|(n, d)| Q::new(n.into(), d.into()))
                    .collect();
                Matrix::from_vec(r, c, data).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in small_matrix()) {
            let k = kernel_basis(&m);
            prop_assert_eq!(rank(&m) + k.len(), m.cols());
            for v in &k {
                prop_assert!(m.mul_vec(v).unwrap().iter().all(|x| *x == Q::from_integer(0.into())));
            }
        }

        #[test]
        fn rank_of_transpose(m in small_matrix()) {
            prop_assert_eq!(rank(&m), rank(&m.transpose()));
        }

        #[test]
        fn solve_is_exact(m in small_matrix(), seed in proptest::collection::vec(-4i64..=4, 8)) {
            let b: Vec<Q> = (0..m.rows()).map(|i| Q::from_integer(seed[i % seed.len()].into())).collect();
            if let Some(x) = solve(&m, &b).unwrap() {
                prop_assert_eq!(m.mul_vec(&x).unwrap(), b);
            }
        }
    }
}
