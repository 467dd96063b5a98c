//! ADHM data `(B1, B2, i, j)` for framed sheaves on `(P2, l_inf)`.
//!
//! Homogeneous coordinates are `[x0 : x1 : x2]` with `l_inf = {x2 = 0}`. The
//! monad is `O(-1)^k --alpha--> O^(2k+r) --beta--> O(1)^k` with
//!
//! ```text
//! alpha = ( B1 x2 - x0 ; B2 x2 - x1 ; j x2 )
//! beta  = ( -(B2 x2 - x1) | B1 x2 - x0 | i x2 )
//! ```
//!
//! so that `beta alpha = x2^2 ([B1, B2] + i j)`.

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cohomology::{CohomologyError, LineBundleComplex, Space};
use crate::ratla::{self, LinalgError};
use crate::{int, PolynomialMatrix, RationalMatrix, Scalar};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AdhmError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("ADHM equation fails; [B1,B2] + ij = {residual}")]
    EquationFails { residual: RationalMatrix },
    #[error("datum is not stable")]
    Unstable,
    #[error("framing verification failed at {point:?}: {reason}")]
    FramingFailed { point: Vec<Scalar>, reason: String },
    #[error("the point [0:0:0] does not exist")]
    ZeroPoint,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
}

/// `B1, B2: k x k`, `i: k x r`, `j: r x k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdhmDatum {
    pub k: usize,
    pub r: usize,
    #[serde(rename = "B1")]
    pub b1: RationalMatrix,
    #[serde(rename = "B2")]
    pub b2: RationalMatrix,
    pub i: RationalMatrix,
    pub j: RationalMatrix,
}

impl AdhmDatum {
    pub fn new(
        b1: RationalMatrix,
        b2: RationalMatrix,
        i: RationalMatrix,
        j: RationalMatrix,
    ) -> Result<Self, AdhmError> {
        let d = AdhmDatum {
            k: b1.rows(),
            r: i.cols(),
            b1,
            b2,
            i,
            j,
        };
        d.check_shapes()?;
        Ok(d)
    }

    /// All matrices zero.
    pub fn zero(k: usize, r: usize) -> Self {
        AdhmDatum {
            k,
            r,
            b1: RationalMatrix::zeros(k, k),
            b2: RationalMatrix::zeros(k, k),
            i: RationalMatrix::zeros(k, r),
            j: RationalMatrix::zeros(r, k),
        }
    }

    /// `k = 1`, `B = 0`, `i = 1`, `j = 0`: the ideal sheaf of `[0:0:1]`.
    pub fn ideal_sheaf_of_origin() -> Self {
        let mut d = Self::zero(1, 1);
        d.i[(0, 0)] = int(1);
        d
    }

    pub fn check_shapes(&self) -> Result<(), AdhmError> {
        let (k, r) = (self.k, self.r);
        let expect = [
            ("B1", self.b1.shape(), (k, k)),
            ("B2", self.b2.shape(), (k, k)),
            ("i", self.i.shape(), (k, r)),
            ("j", self.j.shape(), (r, k)),
        ];
        for (name, found, want) in expect {
            if found != want {
                return Err(AdhmError::Shape(format!(
                    "{name} is {found:?}, expected {want:?} for k={k}, r={r}"
                )));
            }
        }
        Ok(())
    }

    /// `[B1, B2] + i j`
    pub fn residual(&self) -> RationalMatrix {
        &self.b1.commutator(&self.b2).expect("square") + &(&self.i * &self.j)
    }
}

pub fn check_equation(d: &AdhmDatum) -> bool {
    d.residual().is_zero()
}

/// The smallest `B`-invariant subspace containing the image of `i` is `V`.
pub fn is_stable(d: &AdhmDatum) -> bool {
    let seeds = d.i.columns();
    ratla::krylov_closure(d.k, &seeds, &[&d.b1, &d.b2])
        .map(|b| b.len() == d.k)
        .unwrap_or(false)
}

/// The largest `B`-invariant subspace inside `ker j` is zero.
pub fn is_costable(d: &AdhmDatum) -> bool {
    let seeds: Vec<Vec<Scalar>> = (0..d.r).map(|row| d.j.row(row).to_vec()).collect();
    let (t1, t2) = (d.b1.transpose(), d.b2.transpose());
    ratla::krylov_closure(d.k, &seeds, &[&t1, &t2])
        .map(|b| b.len() == d.k)
        .unwrap_or(false)
}

fn block_column(blocks: &[&RationalMatrix]) -> RationalMatrix {
    RationalMatrix::vstack(blocks).expect("matching widths")
}

fn block_row(blocks: &[&RationalMatrix]) -> RationalMatrix {
    RationalMatrix::hstack(blocks).expect("matching heights")
}

/// Coefficient matrices of `alpha` (for `x0, x1, x2`).
pub fn alpha_coefficients(d: &AdhmDatum) -> [RationalMatrix; 3] {
    let (k, r) = (d.k, d.r);
    let id = RationalMatrix::identity(k);
    let minus = -&id;
    let zk = RationalMatrix::zeros(k, k);
    let zr = RationalMatrix::zeros(r, k);
    [
        block_column(&[&minus, &zk, &zr]),
        block_column(&[&zk, &minus, &zr]),
        block_column(&[&d.b1, &d.b2, &d.j]),
    ]
}

/// Coefficient matrices of `beta` (for `x0, x1, x2`).
pub fn beta_coefficients(d: &AdhmDatum) -> [RationalMatrix; 3] {
    let (k, r) = (d.k, d.r);
    let id = RationalMatrix::identity(k);
    let minus = -&id;
    let zk = RationalMatrix::zeros(k, k);
    let zr = RationalMatrix::zeros(k, r);
    [
        block_row(&[&zk, &minus, &zr]),
        block_row(&[&id, &zk, &zr]),
        block_row(&[&-&d.b2, &d.b1, &d.i]),
    ]
}

fn linear_matrix(coeffs: &[RationalMatrix; 3]) -> PolynomialMatrix {
    PolynomialMatrix::linear_combination(coeffs).expect("equal shapes")
}

/// `O(-1)^k -> O^(2k+r) -> O(1)^k` in degrees `-1, 0, 1`.
pub fn monad_from_adhm(d: &AdhmDatum) -> Result<LineBundleComplex, AdhmError> {
    d.check_shapes()?;
    if !check_equation(d) {
        return Err(AdhmError::EquationFails {
            residual: d.residual(),
        });
    }
    Ok(monad_unchecked(d)?)
}

/// The same assembly without the equation check; the result is a complex
/// only when the equation holds, so this returns the raw maps.
pub fn monad_maps(d: &AdhmDatum) -> (PolynomialMatrix, PolynomialMatrix) {
    let mut alpha = linear_matrix(&alpha_coefficients(d));
    let mut beta = linear_matrix(&beta_coefficients(d));
    if d.k == 0 {
        alpha = PolynomialMatrix::zeros(d.r, 0, 3);
        beta = PolynomialMatrix::zeros(0, d.r, 3);
    }
    (alpha, beta)
}

fn monad_unchecked(d: &AdhmDatum) -> Result<LineBundleComplex, CohomologyError> {
    let (alpha, beta) = monad_maps(d);
    LineBundleComplex::new(
        Space::P2,
        -1,
        vec![
            vec![vec![-1]; d.k],
            vec![vec![0]; 2 * d.k + d.r],
            vec![vec![1]; d.k],
        ],
        vec![alpha, beta],
    )
}

/// Fiber homology of a monad at a point: its dimension and a basis of a
/// complement of `im alpha(p)` inside `ker beta(p)`.
#[derive(Clone, Debug, PartialEq)]
pub struct FiberHomology {
    pub dim: usize,
    pub basis: Vec<Vec<Scalar>>,
}

pub fn fiber_homology(
    monad: &LineBundleComplex,
    point: &[Scalar],
) -> Result<FiberHomology, AdhmError> {
    if point.iter().all(|x| x.is_zero()) {
        return Err(AdhmError::ZeroPoint);
    }
    if monad.len() != 3 || monad.start() != -1 || monad.space() != Space::P2 {
        return Err(AdhmError::Shape(
            "expected a monad on P2 in degrees -1, 0, 1".into(),
        ));
    }
    let n = monad.term(0).len();
    let a = monad.maps()[0].eval(point);
    let b = monad.maps()[1].eval(point);
    let image = ratla::span_basis(n, &a.columns())?;
    let kernel = ratla::kernel_basis(&b);
    let mut basis = image.clone();
    let mut complement = Vec::new();
    for v in kernel {
        basis.push(v.clone());
        if ratla::span_dim(n, &basis)? == basis.len() {
            complement.push(v);
        } else {
            basis.pop();
        }
    }
    Ok(FiberHomology {
        dim: complement.len(),
        basis: complement,
    })
}

/// Sample points of `l_inf` used to verify framings.
pub fn line_at_infinity_samples() -> Vec<Vec<Scalar>> {
    [(1, 0), (0, 1), (1, 1), (1, -1), (2, 1)]
        .iter()
        .map(|&(a, b)| vec![int(a), int(b), int(0)])
        .collect()
}

/// The trivialization of `E` along `l_inf` by the `W`-block `{(0, 0, w)}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CanonicalFraming {
    pub r: usize,
    /// `(2k + r) x r`: the sections `(0, 0, e_m)`.
    pub sections: RationalMatrix,
    /// Points of `l_inf`, one per row, where the `W`-projection of the fiber
    /// homology was checked to be invertible.
    pub verified_at: RationalMatrix,
}

pub fn w_block_sections(k: usize, r: usize) -> RationalMatrix {
    let mut s = RationalMatrix::zeros(2 * k + r, r);
    for m in 0..r {
        s[(2 * k + m, m)] = int(1);
    }
    s
}

/// Requires stability (the fiber test alone cannot see instability away from
/// `l_inf`), then checks at five points of `l_inf` that the fiber homology has
/// dimension `r` and projects isomorphically onto `W`.
pub fn canonical_framing(d: &AdhmDatum) -> Result<CanonicalFraming, AdhmError> {
    let monad = monad_from_adhm(d)?;
    if !is_stable(d) {
        return Err(AdhmError::Unstable);
    }
    let points = line_at_infinity_samples();
    for p in &points {
        let fh = fiber_homology(&monad, p)?;
        if fh.dim != d.r {
            return Err(AdhmError::FramingFailed {
                point: p.clone(),
                reason: format!("fiber homology has dimension {}, expected {}", fh.dim, d.r),
            });
        }
        let proj =
            RationalMatrix::from_fn(d.r, d.r, |row, col| fh.basis[col][2 * d.k + row].clone());
        if !ratla::is_invertible(&proj) {
            return Err(AdhmError::FramingFailed {
                point: p.clone(),
                reason: "W-projection is singular".into(),
            });
        }
    }
    Ok(CanonicalFraming {
        r: d.r,
        sections: w_block_sections(d.k, d.r),
        verified_at: RationalMatrix::from_rows(points)?,
    })
}

/// Partitions of `n` in reverse lexicographic order, parts decreasing.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            prefix.push(part);
            go(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Torus-fixed datum of a partition: basis indexed by boxes `(a, b)` with
/// `b < lambda_a`; `B1` moves `(a, b) -> (a + 1, b)`, `B2` moves
/// `(a, b) -> (a, b + 1)`, `i` hits `(0, 0)`, `j = 0`.
pub fn fixed_point_of_partition(lambda: &[usize]) -> AdhmDatum {
    let boxes: Vec<(usize, usize)> = lambda
        .iter()
        .enumerate()
        .flat_map(|(a, &len)| (0..len).map(move |b| (a, b)))
        .collect();
    let k = boxes.len();
    let pos = |a: usize, b: usize| boxes.iter().position(|&x| x == (a, b));
    let mut d = AdhmDatum::zero(k, 1);
    for (col, &(a, b)) in boxes.iter().enumerate() {
        if let Some(row) = pos(a + 1, b) {
            d.b1[(row, col)] = int(1);
        }
        if let Some(row) = pos(a, b + 1) {
            d.b2[(row, col)] = int(1);
        }
    }
    if k > 0 {
        d.i[(0, 0)] = int(1);
    }
    d
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FixedPoint {
    pub partition: Vec<usize>,
    pub datum: AdhmDatum,
}

/// One fixed datum per partition of `k`; only rank one is supported.
pub fn torus_fixed_points(k: usize, r: usize) -> Result<Vec<FixedPoint>, AdhmError> {
    if r != 1 {
        return Err(AdhmError::Unsupported(format!(
            "torus fixed points for r = {r} (only r = 1)"
        )));
    }
    Ok(partitions(k)
        .into_iter()
        .map(|partition| FixedPoint {
            datum: fixed_point_of_partition(&partition),
            partition,
        })
        .collect())
}

/// `B1 = diag(x)`, `B2 = diag(y)`, `i` all ones, `j = 0`.
pub fn adhm_from_points(points: &[(Scalar, Scalar)]) -> AdhmDatum {
    let k = points.len();
    let mut d = AdhmDatum::zero(k, 1);
    for (m, (x, y)) in points.iter().enumerate() {
        d.b1[(m, m)] = x.clone();
        d.b2[(m, m)] = y.clone();
        d.i[(m, 0)] = int(1);
    }
    d
}

/// `(g B1 g^-1, g B2 g^-1, g i, j g^-1)`
pub fn gl_action(g: &RationalMatrix, d: &AdhmDatum) -> Result<AdhmDatum, AdhmError> {
    if g.shape() != (d.k, d.k) {
        return Err(AdhmError::Shape(format!(
            "g is {:?}, expected {:?}",
            g.shape(),
            (d.k, d.k)
        )));
    }
    let ginv = ratla::inverse(g)?;
    AdhmDatum::new(
        g.checked_mul(&d.b1)?.checked_mul(&ginv)?,
        g.checked_mul(&d.b2)?.checked_mul(&ginv)?,
        g.checked_mul(&d.i)?,
        d.j.checked_mul(&ginv)?,
    )
    .map(|mut out| {
        out.r = d.r;
        out
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TangentReport {
    pub rank_dmu: usize,
    pub stabilizer_dim: usize,
    pub tangent_dim: i64,
}

fn unit(rows: usize, cols: usize, idx: usize) -> RationalMatrix {
    let mut m = RationalMatrix::zeros(rows, cols);
    if rows * cols > 0 {
        m[(idx / cols, idx % cols)] = int(1);
    }
    m
}

fn flatten(m: &RationalMatrix) -> Vec<Scalar> {
    m.entries().to_vec()
}

/// Rank of the linearized moment map, dimension of the stabilizer in `gl(k)`,
/// and `(2k^2 + 2kr - rank) - (k^2 - stabilizer)`.
pub fn tangent_report(d: &AdhmDatum) -> Result<TangentReport, AdhmError> {
    d.check_shapes()?;
    if !check_equation(d) {
        return Err(AdhmError::EquationFails {
            residual: d.residual(),
        });
    }
    let (k, r) = (d.k, d.r);
    let mut cols: Vec<Vec<Scalar>> = Vec::new();
    for idx in 0..k * k {
        let e = unit(k, k, idx);
        cols.push(flatten(&e.commutator(&d.b2)?));
    }
    for idx in 0..k * k {
        let e = unit(k, k, idx);
        cols.push(flatten(&d.b1.commutator(&e)?));
    }
    for idx in 0..k * r {
        cols.push(flatten(&(&unit(k, r, idx) * &d.j)));
    }
    for idx in 0..r * k {
        cols.push(flatten(&(&d.i * &unit(r, k, idx))));
    }
    let dmu = RationalMatrix::from_columns(k * k, &cols)?;
    let rank_dmu = ratla::rank(&dmu);
    // stabilizer: xi with [xi, B1] = [xi, B2] = 0, xi i = 0, j xi = 0
    let mut stab_cols: Vec<Vec<Scalar>> = Vec::new();
    for idx in 0..k * k {
        let xi = unit(k, k, idx);
        let mut v = flatten(&xi.commutator(&d.b1)?);
        v.extend(flatten(&xi.commutator(&d.b2)?));
        v.extend(flatten(&(&xi * &d.i)));
        v.extend(flatten(&(&d.j * &xi)));
        stab_cols.push(v);
    }
    let stabilizer_dim = if k == 0 {
        0
    } else {
        let m = RationalMatrix::from_columns(2 * k * k + 2 * k * r, &stab_cols)?;
        k * k - ratla::rank(&m)
    };
    let (k, r) = (k as i64, r as i64);
    Ok(TangentReport {
        rank_dmu,
        stabilizer_dim,
        tangent_dim: (2 * k * k + 2 * k * r - rank_dmu as i64) - (k * k - stabilizer_dim as i64),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::linear_form;
    use crate::frac;

    fn m(rows: &[&[i64]]) -> RationalMatrix {
        RationalMatrix::from_i64_rows(rows)
    }

    #[test]
    fn equation_examples() {
        let d = AdhmDatum::new(m(&[&[2]]), m(&[&[3]]), m(&[&[1]]), m(&[&[0]])).unwrap();
        assert!(check_equation(&d));
        let d = AdhmDatum::new(
            m(&[&[0, 1], &[0, 0]]),
            m(&[&[0, 0], &[1, 0]]),
            RationalMatrix::zeros(2, 1),
            RationalMatrix::zeros(1, 2),
        )
        .unwrap();
        assert!(!check_equation(&d));
        assert_eq!(d.residual(), m(&[&[1, 0], &[0, -1]]));
        assert!(check_equation(&AdhmDatum::zero(0, 3)));
    }

    #[test]
    fn stability_examples() {
        let mut d = AdhmDatum::zero(2, 1);
        d.b1 = m(&[&[0, 0], &[1, 0]]);
        d.i = m(&[&[1], &[0]]);
        assert!(is_stable(&d));
        d.b1 = RationalMatrix::zeros(2, 2);
        assert!(!is_stable(&d));
        assert!(is_stable(&AdhmDatum::ideal_sheaf_of_origin()));
        assert!(!is_costable(&AdhmDatum::ideal_sheaf_of_origin()));
    }

    #[test]
    fn monad_of_ideal_sheaf() {
        let monad = monad_from_adhm(&AdhmDatum::ideal_sheaf_of_origin()).unwrap();
        let alpha = &monad.maps()[0];
        assert_eq!(alpha.get(0, 0), &linear_form(&[-1, 0, 0]));
        assert_eq!(alpha.get(1, 0), &linear_form(&[0, -1, 0]));
        assert!(alpha.get(2, 0).is_zero());
        let beta = &monad.maps()[1];
        assert_eq!(beta.get(0, 0), &linear_form(&[0, 1, 0]));
        assert_eq!(beta.get(0, 1), &linear_form(&[-1, 0, 0]));
        assert_eq!(beta.get(0, 2), &linear_form(&[0, 0, 1]));
    }

    #[test]
    fn monad_rejects_non_solutions() {
        let mut d = AdhmDatum::ideal_sheaf_of_origin();
        d.j = m(&[&[1]]);
        match monad_from_adhm(&d) {
            Err(AdhmError::EquationFails { residual }) => assert_eq!(residual, m(&[&[1]])),
            other => panic!("unexpected {other:?}"),
        }
        // the raw composite is x2^2 times the residual
        let (a, b) = monad_maps(&d);
        let prod = b.mul(&a).unwrap();
        assert_eq!(prod.get(0, 0).coeff(&[0, 0, 2]), int(1));
    }

    #[test]
    fn trivial_bundle_monad() {
        let monad = monad_from_adhm(&AdhmDatum::zero(0, 2)).unwrap();
        assert_eq!(monad.term(0).len(), 2);
        assert!(monad.term(-1).is_empty() && monad.term(1).is_empty());
    }

    #[test]
    fn fiber_examples() {
        let monad = monad_from_adhm(&AdhmDatum::ideal_sheaf_of_origin()).unwrap();
        assert_eq!(
            fiber_homology(&monad, &[int(0), int(0), int(1)])
                .unwrap()
                .dim,
            2
        );
        assert_eq!(
            fiber_homology(&monad, &[int(1), int(1), int(1)])
                .unwrap()
                .dim,
            1
        );
        assert_eq!(
            fiber_homology(&monad, &[int(1), int(0), int(0)])
                .unwrap()
                .dim,
            1
        );
        assert_eq!(
            fiber_homology(&monad, &[int(0), int(0), int(0)]),
            Err(AdhmError::ZeroPoint)
        );
    }

    #[test]
    fn framing_examples() {
        let f = canonical_framing(&AdhmDatum::ideal_sheaf_of_origin()).unwrap();
        assert_eq!(f.sections, m(&[&[0], &[0], &[1]]));
        assert_eq!(f.verified_at.rows(), 5);
        let f = canonical_framing(&AdhmDatum::zero(0, 2)).unwrap();
        assert_eq!(f.sections, RationalMatrix::identity(2));
        let mut bad = AdhmDatum::zero(2, 1);
        bad.i = m(&[&[1], &[0]]);
        assert!(canonical_framing(&bad).is_err());
    }

    #[test]
    fn fixed_point_counts() {
        let counts: Vec<usize> = (1..=6)
            .map(|k| torus_fixed_points(k, 1).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11]);
        for k in 1..=5 {
            for fp in torus_fixed_points(k, 1).unwrap() {
                assert!(check_equation(&fp.datum), "{:?}", fp.partition);
                assert!(is_stable(&fp.datum), "{:?}", fp.partition);
            }
        }
        assert!(torus_fixed_points(2, 2).is_err());
    }

    #[test]
    fn point_configurations() {
        let d = adhm_from_points(&[(int(0), int(0)), (int(1), int(1))]);
        assert!(check_equation(&d) && is_stable(&d));
        let d = adhm_from_points(&[(int(0), int(0)), (int(0), int(0))]);
        assert!(!is_stable(&d));
        assert_eq!(adhm_from_points(&[]).k, 0);
    }

    #[test]
    fn group_action() {
        let d = AdhmDatum::ideal_sheaf_of_origin();
        assert_eq!(gl_action(&RationalMatrix::identity(1), &d).unwrap(), d);
        let g = gl_action(&m(&[&[2]]), &d).unwrap();
        assert_eq!(g.i, m(&[&[2]]));
        let monad = monad_from_adhm(&g).unwrap();
        assert_eq!(
            fiber_homology(&monad, &[int(0), int(0), int(1)])
                .unwrap()
                .dim,
            2
        );
        let pts = adhm_from_points(&[(int(0), int(0)), (int(1), frac(1, 2))]);
        let swapped = gl_action(&m(&[&[0, 1], &[1, 0]]), &pts).unwrap();
        assert_eq!(swapped.b2[(0, 0)], frac(1, 2));
        assert!(gl_action(&RationalMatrix::zeros(2, 2), &pts).is_err());
    }

    #[test]
    fn tangent_examples() {
        let t = tangent_report(&AdhmDatum::ideal_sheaf_of_origin()).unwrap();
        assert_eq!(
            t,
            TangentReport {
                rank_dmu: 1,
                stabilizer_dim: 0,
                tangent_dim: 2
            }
        );
        assert_eq!(
            tangent_report(&AdhmDatum::zero(0, 1)).unwrap().tangent_dim,
            0
        );
        let d = adhm_from_points(&[(int(0), int(0)), (int(1), int(2))]);
        let t = tangent_report(&d).unwrap();
        assert_eq!((t.rank_dmu, t.stabilizer_dim, t.tangent_dim), (4, 0, 4));
    }

    #[test]
    fn datum_json() {
        let d = AdhmDatum::ideal_sheaf_of_origin();
        let js = serde_json::to_value(&d).unwrap();
        assert!(js.get("B1").is_some() && js.get("j").is_some());
        let back: AdhmDatum = serde_json::from_value(js).unwrap();
        assert_eq!(back, d);
    }
}
