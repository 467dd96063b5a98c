//! Chain maps between line-bundle complexes modulo chain homotopy.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use super::{CohomologyError, LineBundleComplex};
use crate::poly::monomials_of_degree;
use crate::ratla;
use crate::{int, Polynomial, PolynomialMatrix, RationalMatrix, Scalar};

/// Unknown coefficients of a family of maps `E_p -> F_{p + shift}`: one slot
/// per monomial of the forced degree in every entry.
struct Layout {
    /// `(degree p, row, col, exponents)`
    slots: Vec<(i64, usize, usize, Vec<u32>)>,
    index: HashMap<(i64, usize, usize, Vec<u32>), usize>,
}

impl Layout {
    fn new(e: &LineBundleComplex, f: &LineBundleComplex, shift: i64) -> Self {
        let groups = e.space().groups();
        let n = e.space().nvars();
        let mut slots = Vec::new();
        for p in e.start()..=e.end() {
            let (src, dst) = (e.term(p), f.term(p + shift));
            for (r, tr) in dst.iter().enumerate() {
                for (c, tc) in src.iter().enumerate() {
                    let deg: Vec<i64> = tr.iter().zip(tc).map(|(a, b)| a - b).collect();
                    for m in monomials_of_degree(n, &groups, &deg) {
                        slots.push((p, r, c, m));
                    }
                }
            }
        }
        let index = slots
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, s)| (s, i))
            .collect();
        Layout { slots, index }
    }

    fn len(&self) -> usize {
        self.slots.len()
    }

    /// Polynomial matrices `E_p -> F_{p + shift}` for a coefficient vector.
    fn assemble(
        &self,
        e: &LineBundleComplex,
        f: &LineBundleComplex,
        shift: i64,
        x: &[Scalar],
    ) -> BTreeMap<i64, PolynomialMatrix> {
        let n = e.space().nvars();
        let mut out: BTreeMap<i64, PolynomialMatrix> = (e.start()..=e.end())
            .map(|p| {
                (
                    p,
                    PolynomialMatrix::zeros(f.term(p + shift).len(), e.term(p).len(), n),
                )
            })
            .collect();
        for ((p, r, c, m), v) in self.slots.iter().zip(x) {
            if v.is_zero() {
                continue;
            }
            let mat = out.get_mut(p).expect("degree in range");
            let mut entry = mat.get(*r, *c).clone();
            entry.add_term(m.clone(), v.clone());
            mat.set(*r, *c, entry);
        }
        out
    }
}

/// Sparse linear combination of polynomial-matrix coefficients keyed by
/// `(degree, row, col, exponents)`.
type Image = BTreeMap<(i64, usize, usize, Vec<u32>), Scalar>;

fn add_product(
    out: &mut Image,
    key: (i64, usize, usize),
    p: &Polynomial,
    q: &Polynomial,
    sign: &Scalar,
) {
    let prod = p.mul(q);
    for (e, c) in prod.terms() {
        let k = (key.0, key.1, key.2, e.clone());
        let slot = out.entry(k).or_insert_with(Scalar::zero);
        *slot += c * sign;
    }
}

/// Hom in the homotopy category between two complexes of sums of line bundles.
#[derive(Clone, Debug)]
pub struct ChainMapSpace {
    /// Dimension of the space of chain maps.
    pub cycles: usize,
    /// Dimension of the null-homotopic chain maps.
    pub boundaries: usize,
    /// `cycles - boundaries`
    pub hom_dim: usize,
    /// Representatives of a basis of the quotient, as maps per degree.
    pub classes: Vec<BTreeMap<i64, PolynomialMatrix>>,
}

/// Chain maps `E -> F` (components of forced degrees) modulo homotopies.
pub fn chain_maps(
    e: &LineBundleComplex,
    f: &LineBundleComplex,
) -> Result<ChainMapSpace, CohomologyError> {
    if e.space() != f.space() {
        return Err(CohomologyError::SpaceMismatch {
            expected: e.space(),
            found: f.space(),
        });
    }
    let n = e.space().nvars();
    let maps = Layout::new(e, f, 0);
    let one = int(1);
    let minus = int(-1);
    // chain condition d_F phi_p - phi_{p+1} d_E = 0, column by column
    let mut rows: HashMap<(i64, usize, usize, Vec<u32>), usize> = HashMap::new();
    let mut columns: Vec<Image> = Vec::with_capacity(maps.len());
    for (p, r, c, m) in &maps.slots {
        let mono = Polynomial::monomial(n, m.clone(), int(1));
        let mut img = Image::new();
        if let Some(df) = f.map(*p) {
            for r2 in 0..df.rows() {
                let entry = df.get(r2, *r);
                if !entry.is_zero() {
                    add_product(&mut img, (*p, r2, *c), entry, &mono, &one);
                }
            }
        }
        if let Some(de) = e.map(p - 1) {
            for c2 in 0..de.cols() {
                let entry = de.get(*c, c2);
                if !entry.is_zero() {
                    add_product(&mut img, (p - 1, *r, c2), &mono, entry, &minus);
                }
            }
        }
        img.retain(|_, v| !v.is_zero());
        for k in img.keys() {
            let len = rows.len();
            rows.entry(k.clone()).or_insert(len);
        }
        columns.push(img);
    }
    let mut system = RationalMatrix::zeros(rows.len(), maps.len());
    for (j, img) in columns.iter().enumerate() {
        for (k, v) in img {
            system[(rows[k], j)] = v.clone();
        }
    }
    let cycles = ratla::kernel_basis(&system);
    // null-homotopic maps d_F h + h d_E with h: E_p -> F_{p-1}
    let homs = Layout::new(e, f, -1);
    let mut boundary_vecs: Vec<Vec<Scalar>> = Vec::new();
    for (p, r, c, m) in &homs.slots {
        let mono = Polynomial::monomial(n, m.clone(), int(1));
        let mut img = Image::new();
        if let Some(df) = f.map(p - 1) {
            for r2 in 0..df.rows() {
                let entry = df.get(r2, *r);
                if !entry.is_zero() {
                    add_product(&mut img, (*p, r2, *c), entry, &mono, &one);
                }
            }
        }
        if let Some(de) = e.map(p - 1) {
            for c2 in 0..de.cols() {
                let entry = de.get(*c, c2);
                if !entry.is_zero() {
                    add_product(&mut img, (p - 1, *r, c2), &mono, entry, &one);
                }
            }
        }
        let mut v = vec![Scalar::zero(); maps.len()];
        for (k, x) in img {
            if x.is_zero() {
                continue;
            }
            let idx = maps.index.get(&k).ok_or_else(|| {
                CohomologyError::Malformed(format!(
                    "homotopy image leaves the chain-map slots at {k:?}"
                ))
            })?;
            v[*idx] += x;
        }
        boundary_vecs.push(v);
    }
    let dim = maps.len();
    // one elimination on [boundaries | cycles]: pivots in the cycle block pick
    // representatives of a basis of the quotient
    let nbv = boundary_vecs.len();
    let mut all = boundary_vecs;
    all.extend(cycles.iter().cloned());
    let (nb, classes) = if all.is_empty() || dim == 0 {
        (0, Vec::new())
    } else {
        let ech = ratla::rref(&RationalMatrix::from_columns(dim, &all)?);
        let nb = ech.pivots.iter().filter(|&&p| p < nbv).count();
        let classes = ech
            .pivots
            .iter()
            .filter(|&&p| p >= nbv)
            .map(|&p| maps.assemble(e, f, 0, &all[p]))
            .collect();
        (nb, classes)
    };
    Ok(ChainMapSpace {
        cycles: cycles.len(),
        boundaries: nb,
        hom_dim: cycles.len() - nb,
        classes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{linear_form, Space};

    #[test]
    fn hom_between_line_bundles() {
        let o = LineBundleComplex::single(Space::P2, vec![0], 0);
        let o1 = LineBundleComplex::single(Space::P2, vec![1], 0);
        assert_eq!(chain_maps(&o, &o1).unwrap().hom_dim, 3);
        assert_eq!(chain_maps(&o1, &o).unwrap().hom_dim, 0);
        assert_eq!(chain_maps(&o, &o).unwrap().hom_dim, 1);
    }

    #[test]
    fn homotopies_are_quotiented() {
        // cone of the identity on O: contractible, so End = 0 in the homotopy category
        let id = PolynomialMatrix::from_fn(1, 1, 3, |_, _| Polynomial::constant(3, int(1)));
        let cone =
            LineBundleComplex::new(Space::P2, 0, vec![vec![vec![0]], vec![vec![0]]], vec![id])
                .unwrap();
        let s = chain_maps(&cone, &cone).unwrap();
        assert!(s.cycles > 0);
        assert_eq!(s.hom_dim, 0);
    }

    #[test]
    fn ideal_sheaf_endomorphisms() {
        let alpha = PolynomialMatrix::from_fn(3, 1, 3, |r, _| match r {
            0 => linear_form(&[-1, 0, 0]),
            1 => linear_form(&[0, -1, 0]),
            _ => Polynomial::zero(3),
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
        let s = chain_maps(&m, &m).unwrap();
        assert_eq!(s.hom_dim, 1);
        assert_eq!(s.classes.len(), 1);
    }
}
