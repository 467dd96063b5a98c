//! Polynomials in homogeneous coordinates and matrices of them.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::ratla::{Field, LinalgError, Matrix};

/// Sparse polynomial over `F`; keys are exponent vectors, zero coefficients
/// are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<F> {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, F>,
}

impl<F: Field> Poly<F> {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        Self::monomial(nvars, vec![0; nvars], c)
    }

    pub fn monomial(nvars: usize, exps: Vec<u32>, c: F) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    /// The coordinate `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(nvars, e, F::one())
    }

    /// `sum_i coeffs[i] * x_i`
    pub fn linear(coeffs: &[F]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(unit_exp(n, i), c.clone());
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &F)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> F {
        self.terms.get(exps).cloned().unwrap_or_else(F::zero)
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: F) {
        assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().clone() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-F::one())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = Self::zero(self.nvars);
        if c.is_zero() {
            return out;
        }
        for (e, x) in &self.terms {
            out.terms.insert(e.clone(), x.clone() * c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1.clone() * c2.clone());
            }
        }
        out
    }

    /// Exponent sums over each variable group; `None` for the zero polynomial
    /// or when terms disagree.
    pub fn multidegree(&self, groups: &[Vec<usize>]) -> Option<Vec<i64>> {
        let mut it = self.terms.keys().map(|e| group_degree(e, groups));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn eval(&self, point: &[F]) -> F {
        assert_eq!(point.len(), self.nvars);
        let mut acc = F::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    t = t * x.clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Replaces each variable `x_i` by `images[i]` (all in a common ring).
    pub fn substitute(&self, images: &[Poly<F>]) -> Poly<F> {
        assert_eq!(images.len(), self.nvars);
        let target = images.first().map_or(0, |p| p.nvars);
        let mut out = Poly::zero(target);
        for (e, c) in &self.terms {
            let mut t = Poly::constant(target, c.clone());
            for (img, &k) in images.iter().zip(e) {
                for _ in 0..k {
                    t = t.mul(img);
                }
            }
            out = out.add(&t);
        }
        out
    }
}

pub(crate) fn unit_exp(n: usize, i: usize) -> Vec<u32> {
    let mut e = vec![0; n];
    e[i] = 1;
    e
}

pub fn group_degree(exps: &[u32], groups: &[Vec<usize>]) -> Vec<i64> {
    groups
        .iter()
        .map(|g| g.iter().map(|&i| exps[i] as i64).sum())
        .collect()
}

/// All exponent vectors with the given degree in each group.
pub fn monomials_of_degree(nvars: usize, groups: &[Vec<usize>], degree: &[i64]) -> Vec<Vec<u32>> {
    let mut out = vec![vec![0u32; nvars]];
    for (g, &d) in groups.iter().zip(degree) {
        if d < 0 {
            return Vec::new();
        }
        let mut next = Vec::new();
        for base in &out {
            for split in compositions(d as u32, g.len()) {
                let mut e = base.clone();
                for (&i, k) in g.iter().zip(&split) {
                    e[i] = *k;
                }
                next.push(e);
            }
        }
        out = next;
    }
    out.sort();
    out
}

fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 {
            vec![Vec::new()]
        } else {
            Vec::new()
        };
    }
    if parts == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => write!(f, "*x{i}")?,
                    _ => write!(f, "*x{i}^{k}")?,
                }
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    coeff: String,
    exponents: Vec<u32>,
}

impl<F: Field> Poly<F> {
    fn to_repr(&self) -> Vec<TermRepr> {
        self.terms
            .iter()
            .map(|(e, c)| TermRepr {
                coeff: c.to_string(),
                exponents: e.clone(),
            })
            .collect()
    }

    fn from_repr(nvars: Option<usize>, terms: Vec<TermRepr>) -> Result<Self, String> {
        let n = nvars
            .or_else(|| terms.first().map(|t| t.exponents.len()))
            .unwrap_or(0);
        let mut p = Poly::zero(n);
        for t in terms {
            if t.exponents.len() != n {
                return Err(format!(
                    "exponent vector of length {} in a {n}-variable ring",
                    t.exponents.len()
                ));
            }
            let c: F = t
                .coeff
                .trim()
                .parse()
                .map_err(|_| format!("invalid coefficient {:?}", t.coeff))?;
            p.add_term(t.exponents, c);
        }
        Ok(p)
    }
}

/// Matrix with polynomial entries, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix<F> {
    rows: usize,
    cols: usize,
    nvars: usize,
    data: Vec<Poly<F>>,
}

impl<F: Field> PolyMatrix<F> {
    pub fn zeros(rows: usize, cols: usize, nvars: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            nvars,
            data: vec![Poly::zero(nvars); rows * cols],
        }
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        nvars: usize,
        mut f: impl FnMut(usize, usize) -> Poly<F>,
    ) -> Self {
        let mut m = Self::zeros(rows, cols, nvars);
        for r in 0..rows {
            for c in 0..cols {
                let p = f(r, c);
                assert_eq!(p.nvars, nvars);
                m.data[r * cols + c] = p;
            }
        }
        m
    }

    /// `sum_i coeffs[i] * x_i` for constant matrices of a common shape.
    pub fn linear_combination(coeffs: &[Matrix<F>]) -> Result<Self, LinalgError> {
        let n = coeffs.len();
        let (rows, cols) = coeffs.first().map_or((0, 0), |m| m.shape());
        let mut out = Self::zeros(rows, cols, n);
        for (i, m) in coeffs.iter().enumerate() {
            if m.shape() != (rows, cols) {
                return Err(LinalgError::ShapeMismatch {
                    left: (rows, cols),
                    right: m.shape(),
                });
            }
            for r in 0..rows {
                for c in 0..cols {
                    out.data[r * cols + c].add_term(unit_exp(n, i), m[(r, c)].clone());
                }
            }
        }
        Ok(out)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn get(&self, r: usize, c: usize) -> &Poly<F> {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, p: Poly<F>) {
        assert_eq!(p.nvars, self.nvars);
        self.data[r * self.cols + c] = p;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|p| p.is_zero())
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = Self::zeros(self.rows, rhs.cols, self.nvars);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if !b.is_zero() {
                        let i = r * rhs.cols + c;
                        out.data[i] = out.data[i].add(&a.mul(b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &F) -> Self {
        self.map(|p| p.scale(c))
    }

    pub fn map(&self, f: impl Fn(&Poly<F>) -> Poly<F>) -> Self {
        let data: Vec<Poly<F>> = self.data.iter().map(f).collect();
        let nvars = data.first().map_or(self.nvars, |p| p.nvars);
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            nvars,
            data,
        }
    }

    pub fn eval(&self, point: &[F]) -> Matrix<F> {
        Matrix::from_fn(self.rows, self.cols, |r, c| self.get(r, c).eval(point))
    }

    pub fn substitute(&self, images: &[Poly<F>]) -> Self {
        let target = images.first().map_or(0, |p| p.nvars);
        let mut out = self.map(|p| p.substitute(images));
        out.nvars = target;
        out
    }

    /// Coefficient matrix of a single monomial.
    pub fn coefficient(&self, exps: &[u32]) -> Matrix<F> {
        Matrix::from_fn(self.rows, self.cols, |r, c| self.get(r, c).coeff(exps))
    }

    pub fn hstack(blocks: &[&Self]) -> Self {
        let rows = blocks.first().map_or(0, |b| b.rows);
        let nvars = blocks.first().map_or(0, |b| b.nvars);
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(rows, cols, nvars);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, rows);
            for r in 0..rows {
                for c in 0..b.cols {
                    out.set(r, off + c, b.get(r, c).clone());
                }
            }
            off += b.cols;
        }
        out
    }

    pub fn vstack(blocks: &[&Self]) -> Self {
        let cols = blocks.first().map_or(0, |b| b.cols);
        let nvars = blocks.first().map_or(0, |b| b.nvars);
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut out = Self::zeros(rows, cols, nvars);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.cols, cols);
            for r in 0..b.rows {
                for c in 0..cols {
                    out.set(off + r, c, b.get(r, c).clone());
                }
            }
            off += b.rows;
        }
        out
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, self.nvars, |r, c| {
            self.get(c, r).clone()
        })
    }
}

#[derive(Serialize, Deserialize)]
struct PolyMatrixRepr {
    rows: usize,
    cols: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    nvars: Option<usize>,
    entries: Vec<Vec<TermRepr>>,
}

impl<F: Field> fmt::Debug for PolyMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries((0..self.rows).map(|r| &self.data[r * self.cols..(r + 1) * self.cols]))
            .finish()
    }
}

impl<F: Field> Serialize for PolyMatrix<F> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyMatrixRepr {
            rows: self.rows,
            cols: self.cols,
            nvars: Some(self.nvars),
            entries: self.data.iter().map(|p| p.to_repr()).collect(),
        }
        .serialize(s)
    }
}

impl<'de, F: Field> Deserialize<'de> for PolyMatrix<F> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = PolyMatrixRepr::deserialize(d)?;
        if repr.entries.len() != repr.rows * repr.cols {
            return Err(D::Error::custom(format!(
                "expected {} entries, found {}",
                repr.rows * repr.cols,
                repr.entries.len()
            )));
        }
        let nvars = repr.nvars.or_else(|| {
            repr.entries
                .iter()
                .flat_map(|e| e.first())
                .map(|t| t.exponents.len())
                .next()
        });
        let data = repr
            .entries
            .into_iter()
            .map(|e| Poly::from_repr(nvars, e))
            .collect::<Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        Ok(PolyMatrix {
            rows: repr.rows,
            cols: repr.cols,
            nvars: nvars.unwrap_or(0),
            data,
        })
    }
}
