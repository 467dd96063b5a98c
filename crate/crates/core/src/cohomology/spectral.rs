//! Independent cross-check on `P2`: the hypercohomology spectral sequence of
//! a complex of length at most three, built from monomial bases.
//!
//! `E1^{p,q} = H^q(M^p)` is nonzero only for `q = 0, 2`. Row 0 uses the
//! monomials of `H^0(O(d))`, row 2 the inverse monomials `x^m` (all `m_i <= -1`)
//! spanning `H^2(O(d))`, on which multiplication drops every term with a
//! nonnegative exponent. With three columns no higher differential connects
//! the two rows, so `E2 = E_infinity`.

use std::collections::{BTreeMap, HashMap};

use super::{CohomologyError, LineBundleComplex, Space};
use crate::poly::monomials_of_degree;
use crate::ratla;
use crate::{RationalMatrix, Scalar};

fn row_basis(twist: i64, q: usize) -> Vec<Vec<i64>> {
    let groups = Space::P2.groups();
    match q {
        0 => monomials_of_degree(3, &groups, &[twist])
            .into_iter()
            .map(|e| e.into_iter().map(|x| x as i64).collect())
            .collect(),
        _ => monomials_of_degree(3, &groups, &[-twist - 3])
            .into_iter()
            .map(|e| e.into_iter().map(|x| -1 - x as i64).collect())
            .collect(),
    }
}

/// `h^n` from the two-row spectral sequence; only for complexes on `P2` with
/// at most three terms.
pub fn beilinson_p2(c: &LineBundleComplex) -> Result<BTreeMap<i64, usize>, CohomologyError> {
    if c.space() != Space::P2 {
        return Err(CohomologyError::SpaceMismatch {
            expected: Space::P2,
            found: c.space(),
        });
    }
    if c.len() > 3 {
        return Err(CohomologyError::Unsupported(
            "the two-row spectral sequence degenerates only for at most three terms".into(),
        ));
    }
    let mut out = BTreeMap::new();
    if c.is_empty() {
        return Ok(out);
    }
    let positions = c.len();
    for n in 0..positions + 2 {
        out.insert(c.start() + n as i64, 0);
    }
    for q in [0usize, 2] {
        let bases: Vec<Vec<(usize, Vec<i64>)>> = c
            .terms()
            .iter()
            .map(|ts| {
                ts.iter()
                    .enumerate()
                    .flat_map(|(t, tw)| row_basis(tw[0], q).into_iter().map(move |m| (t, m)))
                    .collect()
            })
            .collect();
        let mut ranks = vec![0usize; positions];
        for p in 0..positions.saturating_sub(1) {
            let index: HashMap<&(usize, Vec<i64>), usize> = bases[p + 1]
                .iter()
                .enumerate()
                .map(|(i, k)| (k, i))
                .collect();
            let map = &c.maps()[p];
            let mut d = RationalMatrix::zeros(bases[p + 1].len(), bases[p].len());
            for (col, (t, m)) in bases[p].iter().enumerate() {
                for r in 0..map.rows() {
                    for (e, coeff) in map.get(r, *t).terms() {
                        let m2: Vec<i64> = m.iter().zip(e).map(|(a, &b)| a + b as i64).collect();
                        if q == 2 && m2.iter().any(|&x| x >= 0) {
                            continue;
                        }
                        let row = index[&(r, m2)];
                        let cur: Scalar = d[(row, col)].clone();
                        d[(row, col)] = cur + coeff;
                    }
                }
            }
            ranks[p] = if d.rows() == 0 || d.cols() == 0 {
                0
            } else {
                ratla::rank(&d)
            };
        }
        for p in 0..positions {
            let inc = if p > 0 { ranks[p - 1] } else { 0 };
            let e2 = bases[p].len() - ranks[p] - inc;
            *out.get_mut(&(c.start() + (p + q) as i64))
                .expect("degree in range") += e2;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{hypercohomology, linear_form};
    use crate::PolynomialMatrix;

    #[test]
    fn agrees_with_cech_on_ideal_sheaf_twists() {
        let alpha = PolynomialMatrix::from_fn(3, 1, 3, |r, _| match r {
            0 => linear_form(&[-1, 0, 0]),
            1 => linear_form(&[0, -1, 0]),
            _ => crate::Polynomial::zero(3),
        });
        let beta = PolynomialMatrix::from_fn(1, 3, 3, |_, c| match c {
            0 => linear_form(&[0, 1, 0]),
            1 => linear_form(&[-1, 0, 0]),
            _ => linear_form(&[0, 0, 1]),
        });
        let m = LineBundleComplex::new(
            Space::P2,
            -1,
            vec![vec![vec![-1]], vec![vec![0]; 3], vec![vec![1]]],
            vec![alpha, beta],
        )
        .unwrap();
        for d in -5..=3 {
            let t = m.twisted(&[d]);
            let cech = hypercohomology(&t, None).unwrap();
            let ss = beilinson_p2(&t).unwrap();
            for (n, h) in &ss {
                assert_eq!(cech.get(*n), *h, "twist {d}, degree {n}");
            }
            assert_eq!(ss.values().sum::<usize>(), cech.h.values().sum::<usize>());
        }
    }
}
