//! Bound quivers, their representations, hom spaces, the Euler form and the
//! dimension-vector dictionary of the preset exceptional collections.

use std::collections::BTreeMap;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ratla::{self, LinalgError};
use crate::surface::{self, ExceptionalCollection, NumericalClass, SurfaceError, SurfaceKind};
use crate::{frac, int, RationalMatrix, Scalar};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum QuiverError {
    #[error("arrow {arrow}: expected a {expected:?} matrix, found {found:?}")]
    Shape {
        arrow: String,
        expected: (usize, usize),
        found: (usize, usize),
    },
    #[error("representation has {found} vertex dimensions, quiver has {expected} vertices")]
    VertexCount { expected: usize, found: usize },
    #[error("unknown arrow {0:?}")]
    UnknownArrow(String),
    #[error("invalid quiver: {0}")]
    Invalid(String),
    #[error("dimension vector entry {vertex} is {value}: not representable in the heart")]
    NegativeEntry { vertex: usize, value: Scalar },
    #[error("dimension vector entry {vertex} is {value}: not an integer")]
    NonIntegral { vertex: usize, value: Scalar },
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub id: String,
    pub src: usize,
    pub dst: usize,
}

/// One term `coeff * path` of a relation; paths list arrow indices in the
/// order they are traversed, so `[a, b]` is the composite `b a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationTerm {
    pub coeff: Scalar,
    pub path: Vec<usize>,
}

pub type Relation = Vec<RelationTerm>;

/// Quiver with vertices `0..vertices` and a set of relation generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundQuiver {
    pub vertices: usize,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Relation>,
}

pub type DimVector = Vec<usize>;

impl BoundQuiver {
    pub fn new(
        vertices: usize,
        arrows: Vec<Arrow>,
        relations: Vec<Relation>,
    ) -> Result<Self, QuiverError> {
        let q = BoundQuiver {
            vertices,
            arrows,
            relations,
        };
        q.validate()?;
        Ok(q)
    }

    fn validate(&self) -> Result<(), QuiverError> {
        let mut seen = std::collections::BTreeSet::new();
        for a in &self.arrows {
            if a.src >= self.vertices || a.dst >= self.vertices {
                return Err(QuiverError::Invalid(format!(
                    "arrow {} has an endpoint outside 0..{}",
                    a.id, self.vertices
                )));
            }
            if !seen.insert(a.id.clone()) {
                return Err(QuiverError::Invalid(format!("duplicate arrow id {}", a.id)));
            }
        }
        for (k, rel) in self.relations.iter().enumerate() {
            let mut ends = None;
            for term in rel {
                if term.path.len() < 2 {
                    return Err(QuiverError::Invalid(format!(
                        "relation {k} has a path of length < 2"
                    )));
                }
                let e = self.path_endpoints(&term.path).ok_or_else(|| {
                    QuiverError::Invalid(format!("relation {k} has a non-composable path"))
                })?;
                if *ends.get_or_insert(e) != e {
                    return Err(QuiverError::Invalid(format!(
                        "relation {k} mixes paths with different endpoints"
                    )));
                }
            }
        }
        Ok(())
    }

    /// `(source, target)` of a composable path.
    pub fn path_endpoints(&self, path: &[usize]) -> Option<(usize, usize)> {
        let first = self.arrows.get(*path.first()?)?;
        let mut at = first.dst;
        for &a in &path[1..] {
            let arrow = self.arrows.get(a)?;
            if arrow.src != at {
                return None;
            }
            at = arrow.dst;
        }
        Some((first.src, at))
    }

    pub fn relation_endpoints(&self, k: usize) -> (usize, usize) {
        self.path_endpoints(&self.relations[k][0].path)
            .expect("validated relation")
    }

    pub fn arrow_index(&self, id: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.id == id)
    }

    /// Indices of the arrows `src -> dst`, in quiver order.
    pub fn arrows_between(&self, src: usize, dst: usize) -> Vec<usize> {
        (0..self.arrows.len())
            .filter(|&i| self.arrows[i].src == src && self.arrows[i].dst == dst)
            .collect()
    }

    /// All paths `i -> j` of exactly `len` arrows.
    pub fn paths(&self, i: usize, j: usize, len: usize) -> Vec<Vec<usize>> {
        let mut frontier: Vec<(Vec<usize>, usize)> = vec![(Vec::new(), i)];
        for _ in 0..len {
            let mut next = Vec::new();
            for (p, at) in frontier {
                for (k, a) in self.arrows.iter().enumerate() {
                    if a.src == at {
                        let mut q = p.clone();
                        q.push(k);
                        next.push((q, a.dst));
                    }
                }
            }
            frontier = next;
        }
        frontier
            .into_iter()
            .filter(|(_, at)| *at == j)
            .map(|(p, _)| p)
            .collect()
    }
}

fn arrow(id: &str, src: usize, dst: usize) -> Arrow {
    Arrow {
        id: id.into(),
        src,
        dst,
    }
}

/// Beilinson quiver `0 => 1 => 2` with three arrows each way and relations
/// `b_i a_j + b_j a_i` for `i <= j` (the diagonal ones stored as `b_i a_i`).
/// Arrow `a_m` (resp. `b_m`) is the coefficient of `x_{m-1}`.
pub fn preset_p2() -> BoundQuiver {
    let mut arrows = Vec::new();
    for m in 1..=3 {
        arrows.push(arrow(&format!("a{m}"), 0, 1));
    }
    for m in 1..=3 {
        arrows.push(arrow(&format!("b{m}"), 1, 2));
    }
    let a = |m: usize| m - 1;
    let b = |m: usize| m + 2;
    let mut relations = Vec::new();
    for i in 1..=3 {
        for j in i..=3 {
            let rel = if i == j {
                vec![RelationTerm {
                    coeff: int(1),
                    path: vec![a(i), b(i)],
                }]
            } else {
                vec![
                    RelationTerm {
                        coeff: int(1),
                        path: vec![a(j), b(i)],
                    },
                    RelationTerm {
                        coeff: int(1),
                        path: vec![a(i), b(j)],
                    },
                ]
            };
            relations.push(rel);
        }
    }
    BoundQuiver::new(3, arrows, relations).expect("preset is valid")
}

/// Square quiver `0 -> 1 -> 3`, `0 -> 2 -> 3` with doubled arrows and
/// relations `b1_i a1_j + b2_j a2_i` for `i, j` in `{1, 2}`.
///
/// Vertex `i` carries `E_i` of [`ExceptionalCollection::preset`]; the sink is
/// vertex 3 so that the Euler form matches `chi` under the dimension-vector
/// matrix.
pub fn preset_p1xp1() -> BoundQuiver {
    let arrows = vec![
        arrow("a1_1", 0, 1),
        arrow("a1_2", 0, 1),
        arrow("a2_1", 0, 2),
        arrow("a2_2", 0, 2),
        arrow("b1_1", 1, 3),
        arrow("b1_2", 1, 3),
        arrow("b2_1", 2, 3),
        arrow("b2_2", 2, 3),
    ];
    let a1 = |i: usize| i - 1;
    let a2 = |i: usize| i + 1;
    let b1 = |i: usize| i + 3;
    let b2 = |i: usize| i + 5;
    let mut relations = Vec::new();
    for i in 1..=2 {
        for j in 1..=2 {
            relations.push(vec![
                RelationTerm {
                    coeff: int(1),
                    path: vec![a1(j), b1(i)],
                },
                RelationTerm {
                    coeff: int(1),
                    path: vec![a2(i), b2(j)],
                },
            ]);
        }
    }
    BoundQuiver::new(4, arrows, relations).expect("preset is valid")
}

pub fn preset(surface: SurfaceKind) -> BoundQuiver {
    match surface {
        SurfaceKind::P2 => preset_p2(),
        SurfaceKind::P1xP1 => preset_p1xp1(),
    }
}

/// A representation: one matrix per arrow, of shape `d_dst x d_src`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub dims: DimVector,
    pub mats: Vec<RationalMatrix>,
}

impl Representation {
    pub fn new(
        q: &BoundQuiver,
        dims: DimVector,
        mats: Vec<RationalMatrix>,
    ) -> Result<Self, QuiverError> {
        let rep = Representation { dims, mats };
        rep.check_shapes(q)?;
        Ok(rep)
    }

    pub fn zero(q: &BoundQuiver, dims: DimVector) -> Self {
        let mats = q
            .arrows
            .iter()
            .map(|a| RationalMatrix::zeros(dims[a.dst], dims[a.src]))
            .collect();
        Representation { dims, mats }
    }

    /// One-dimensional at `vertex`, zero elsewhere.
    pub fn simple(q: &BoundQuiver, vertex: usize) -> Self {
        let mut dims = vec![0; q.vertices];
        dims[vertex] = 1;
        Self::zero(q, dims)
    }

    pub fn check_shapes(&self, q: &BoundQuiver) -> Result<(), QuiverError> {
        if self.dims.len() != q.vertices {
            return Err(QuiverError::VertexCount {
                expected: q.vertices,
                found: self.dims.len(),
            });
        }
        if self.mats.len() != q.arrows.len() {
            return Err(QuiverError::Invalid(format!(
                "{} matrices for {} arrows",
                self.mats.len(),
                q.arrows.len()
            )));
        }
        for (a, m) in q.arrows.iter().zip(&self.mats) {
            let expected = (self.dims[a.dst], self.dims[a.src]);
            if m.shape() != expected {
                return Err(QuiverError::Shape {
                    arrow: a.id.clone(),
                    expected,
                    found: m.shape(),
                });
            }
        }
        Ok(())
    }

    pub fn is_zero_dimensional(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    /// Matrix of a path, `M_last ... M_first`.
    pub fn path_matrix(&self, q: &BoundQuiver, path: &[usize]) -> RationalMatrix {
        let (src, _) = q.path_endpoints(path).expect("composable path");
        let mut m = RationalMatrix::identity(self.dims[src]);
        for &a in path {
            m = &self.mats[a] * &m;
        }
        m
    }

    /// Action of `G_d`: `M_a -> g_dst M_a g_src^{-1}`.
    pub fn conjugate(&self, q: &BoundQuiver, g: &[RationalMatrix]) -> Result<Self, QuiverError> {
        let inv = g
            .iter()
            .map(ratla::inverse)
            .collect::<Result<Vec<_>, _>>()?;
        let mats = q
            .arrows
            .iter()
            .zip(&self.mats)
            .map(|(a, m)| g[a.dst].checked_mul(m)?.checked_mul(&inv[a.src]))
            .collect::<Result<Vec<_>, _>>()?;
        Representation::new(q, self.dims.clone(), mats)
    }

    pub fn to_json(&self, q: &BoundQuiver) -> RepresentationJson {
        RepresentationJson {
            dims: self.dims.clone(),
            mats: q
                .arrows
                .iter()
                .zip(&self.mats)
                .map(|(a, m)| (a.id.clone(), m.clone()))
                .collect(),
        }
    }

    /// Missing arrows default to zero matrices.
    pub fn from_json(q: &BoundQuiver, js: &RepresentationJson) -> Result<Self, QuiverError> {
        for id in js.mats.keys() {
            if q.arrow_index(id).is_none() {
                return Err(QuiverError::UnknownArrow(id.clone()));
            }
        }
        if js.dims.len() != q.vertices {
            return Err(QuiverError::VertexCount {
                expected: q.vertices,
                found: js.dims.len(),
            });
        }
        let mats = q
            .arrows
            .iter()
            .map(|a| {
                js.mats
                    .get(&a.id)
                    .cloned()
                    .unwrap_or_else(|| RationalMatrix::zeros(js.dims[a.dst], js.dims[a.src]))
            })
            .collect();
        Representation::new(q, js.dims.clone(), mats)
    }
}

/// `{dims: [...], mats: {arrowId: matrix}}`
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RepresentationJson {
    pub dims: Vec<usize>,
    pub mats: BTreeMap<String, RationalMatrix>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
struct TermJson {
    coeff: String,
    path: Vec<String>,
}

/// `{vertices, arrows: [{id, src, dst}], relations: [[{coeff, path: [ids]}]]}`
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuiverJson {
    vertices: usize,
    arrows: Vec<Arrow>,
    relations: Vec<Vec<TermJson>>,
}

impl BoundQuiver {
    pub fn to_json(&self) -> QuiverJson {
        QuiverJson {
            vertices: self.vertices,
            arrows: self.arrows.clone(),
            relations: self
                .relations
                .iter()
                .map(|rel| {
                    rel.iter()
                        .map(|t| TermJson {
                            coeff: t.coeff.to_string(),
                            path: t.path.iter().map(|&a| self.arrows[a].id.clone()).collect(),
                        })
                        .collect()
                })
                .collect(),
        }
    }

    pub fn from_json(js: &QuiverJson) -> Result<Self, QuiverError> {
        let index: BTreeMap<&str, usize> = js
            .arrows
            .iter()
            .enumerate()
            .map(|(i, a)| (a.id.as_str(), i))
            .collect();
        let relations = js
            .relations
            .iter()
            .map(|rel| {
                rel.iter()
                    .map(|t| {
                        let coeff = crate::parse_scalar(&t.coeff).map_err(QuiverError::Invalid)?;
                        let path = t
                            .path
                            .iter()
                            .map(|id| {
                                index
                                    .get(id.as_str())
                                    .copied()
                                    .ok_or_else(|| QuiverError::UnknownArrow(id.clone()))
                            })
                            .collect::<Result<Vec<_>, _>>()?;
                        Ok(RelationTerm { coeff, path })
                    })
                    .collect::<Result<Vec<_>, QuiverError>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        BoundQuiver::new(js.vertices, js.arrows.clone(), relations)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RelationCheck {
    pub holds: bool,
    /// `(relation index, nonzero residual)`
    pub violations: Vec<(usize, RationalMatrix)>,
}

pub fn check_relations(
    q: &BoundQuiver,
    rep: &Representation,
) -> Result<RelationCheck, QuiverError> {
    rep.check_shapes(q)?;
    let mut violations = Vec::new();
    for (k, rel) in q.relations.iter().enumerate() {
        let (s, t) = q.relation_endpoints(k);
        let mut acc = RationalMatrix::zeros(rep.dims[t], rep.dims[s]);
        for term in rel {
            acc = &acc + &rep.path_matrix(q, &term.path).scale(&term.coeff);
        }
        if !acc.is_zero() {
            violations.push((k, acc));
        }
    }
    Ok(RelationCheck {
        holds: violations.is_empty(),
        violations,
    })
}

/// Space of intertwiners `phi` with `phi_dst M1_a = M2_a phi_src` for all arrows.
#[derive(Clone, Debug, PartialEq)]
pub struct HomSpace {
    pub dim: usize,
    /// Each basis element is one matrix per vertex, `d2_i x d1_i`.
    pub basis: Vec<Vec<RationalMatrix>>,
}

pub fn hom_space(
    q: &BoundQuiver,
    rep1: &Representation,
    rep2: &Representation,
) -> Result<HomSpace, QuiverError> {
    rep1.check_shapes(q)?;
    rep2.check_shapes(q)?;
    let d1 = &rep1.dims;
    let d2 = &rep2.dims;
    let mut offset = vec![0; q.vertices + 1];
    for i in 0..q.vertices {
        offset[i + 1] = offset[i] + d2[i] * d1[i];
    }
    let nvars = offset[q.vertices];
    let var = |i: usize, r: usize, c: usize| offset[i] + r * d1[i] + c;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for (a, (m1, m2)) in q.arrows.iter().zip(rep1.mats.iter().zip(&rep2.mats)) {
        let (s, t) = (a.src, a.dst);
        for p in 0..d2[t] {
            for c in 0..d1[s] {
                let mut row = vec![Scalar::zero(); nvars];
                for k in 0..d1[t] {
                    let x = &m1[(k, c)];
                    if !x.is_zero() {
                        row[var(t, p, k)] += x.clone();
                    }
                }
                for k in 0..d2[s] {
                    let x = &m2[(p, k)];
                    if !x.is_zero() {
                        row[var(s, k, c)] -= x.clone();
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let system = if rows.is_empty() {
        RationalMatrix::zeros(0, nvars)
    } else {
        RationalMatrix::from_rows(rows)?
    };
    let basis = ratla::kernel_basis(&system)
        .into_iter()
        .map(|v| {
            (0..q.vertices)
                .map(|i| RationalMatrix::from_fn(d2[i], d1[i], |r, c| v[var(i, r, c)].clone()))
                .collect()
        })
        .collect::<Vec<Vec<_>>>();
    Ok(HomSpace {
        dim: basis.len(),
        basis,
    })
}

fn combine(
    basis: &[Vec<RationalMatrix>],
    coeffs: &[Scalar],
    like: &[RationalMatrix],
) -> Vec<RationalMatrix> {
    let mut out: Vec<RationalMatrix> = like
        .iter()
        .map(|m| RationalMatrix::zeros(m.rows(), m.cols()))
        .collect();
    for (b, c) in basis.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        for (o, m) in out.iter_mut().zip(b) {
            *o = &*o + &m.scale(c);
        }
    }
    out
}

fn all_invertible(ms: &[RationalMatrix]) -> bool {
    ms.iter().all(ratla::is_invertible)
}

const ISO_RANDOM_TRIALS: usize = 20;
const ISO_EXHAUSTIVE_MAX_DIM: usize = 9;

/// Decides isomorphism by looking for an intertwiner invertible at every
/// vertex: random rational combinations of a hom basis first, then all
/// combinations with coefficients in `-2..=2` when the hom space is small.
pub fn is_isomorphic(
    q: &BoundQuiver,
    rep1: &Representation,
    rep2: &Representation,
) -> Result<bool, QuiverError> {
    if rep1.dims != rep2.dims {
        return Ok(false);
    }
    let hom = hom_space(q, rep1, rep2)?;
    let shape: Vec<RationalMatrix> = rep1
        .dims
        .iter()
        .map(|&d| RationalMatrix::zeros(d, d))
        .collect();
    if rep1.is_zero_dimensional() {
        return Ok(true);
    }
    if hom.dim == 0 {
        return Ok(false);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x1505);
    for _ in 0..ISO_RANDOM_TRIALS {
        let coeffs: Vec<Scalar> = (0..hom.dim)
            .map(|_| frac(rng.gen_range(-7..=7), rng.gen_range(1..=4)))
            .collect();
        if all_invertible(&combine(&hom.basis, &coeffs, &shape)) {
            return Ok(true);
        }
    }
    if hom.dim > ISO_EXHAUSTIVE_MAX_DIM {
        return Ok(false);
    }
    let mut digits = vec![-2i64; hom.dim];
    loop {
        let coeffs: Vec<Scalar> = digits.iter().map(|&d| int(d)).collect();
        if all_invertible(&combine(&hom.basis, &coeffs, &shape)) {
            return Ok(true);
        }
        let mut k = 0;
        loop {
            if k == digits.len() {
                return Ok(false);
            }
            digits[k] += 1;
            if digits[k] <= 2 {
                break;
            }
            digits[k] = -2;
            k += 1;
        }
    }
}

/// `<d, e> = sum d_i e_i - sum_arrows d_src e_dst + sum_relations d_src e_dst`.
pub fn euler_form(q: &BoundQuiver, d: &[i64], e: &[i64]) -> i64 {
    let mut s: i64 = d.iter().zip(e).map(|(a, b)| a * b).sum();
    for a in &q.arrows {
        s -= d[a.src] * e[a.dst];
    }
    for k in 0..q.relations.len() {
        let (src, dst) = q.relation_endpoints(k);
        s += d[src] * e[dst];
    }
    s
}

/// Signed version of the dictionary: `-chi(E_i, v)` for every vertex.
pub fn signed_dimension_vector(v: &NumericalClass) -> Result<Vec<Scalar>, QuiverError> {
    let collection = ExceptionalCollection::preset(v.surface());
    Ok(surface::collection_pairings(&collection, &v.to_chern())?
        .into_iter()
        .map(|x| -x)
        .collect())
}

/// `d^v_i = -chi(E_i, v)`, rejected when some entry is negative or fractional.
pub fn dimension_vector(v: &NumericalClass) -> Result<DimVector, QuiverError> {
    signed_dimension_vector(v)?
        .into_iter()
        .enumerate()
        .map(|(vertex, x)| {
            if !x.is_integer() {
                Err(QuiverError::NonIntegral { vertex, value: x })
            } else if x < Scalar::zero() {
                Err(QuiverError::NegativeEntry { vertex, value: x })
            } else {
                Ok(surface::to_i64(&x) as usize)
            }
        })
        .collect()
}

/// The matrix sending `(rank, c1, chi)` to `d^v`.
pub fn dimension_vector_matrix(surface: SurfaceKind) -> RationalMatrix {
    match surface {
        SurfaceKind::P2 => RationalMatrix::from_i64_rows(&[&[1, 2, -1], &[3, 3, -2], &[1, 1, -1]]),
        SurfaceKind::P1xP1 => RationalMatrix::from_i64_rows(&[
            &[1, 1, 2, -1],
            &[2, 0, 2, -1],
            &[1, 1, 1, -1],
            &[1, 0, 1, -1],
        ]),
    }
}

/// Dimension of `e_j (KQ/J) e_i`: paths `i -> j` modulo the two-sided ideal
/// generated by the relations, computed length by length.
pub fn path_space_dim(q: &BoundQuiver, i: usize, j: usize) -> usize {
    let max_len = q.vertices;
    let mut total = 0;
    for len in 0..=max_len {
        let paths = q.paths(i, j, len);
        if paths.is_empty() {
            continue;
        }
        let index: BTreeMap<&Vec<usize>, usize> =
            paths.iter().enumerate().map(|(k, p)| (p, k)).collect();
        let mut ideal: Vec<Vec<Scalar>> = Vec::new();
        for (k, rel) in q.relations.iter().enumerate() {
            let (s, t) = q.relation_endpoints(k);
            for rel_len in rel
                .iter()
                .map(|term| term.path.len())
                .collect::<std::collections::BTreeSet<_>>()
            {
                if rel_len > len {
                    continue;
                }
                for pre_len in 0..=len - rel_len {
                    let post_len = len - rel_len - pre_len;
                    for pre in q.paths(i, s, pre_len) {
                        for post in q.paths(t, j, post_len) {
                            let mut v = vec![Scalar::zero(); paths.len()];
                            for term in rel.iter().filter(|term| term.path.len() == rel_len) {
                                let full: Vec<usize> =
                                    pre.iter().chain(&term.path).chain(&post).copied().collect();
                                if let Some(&k) = index.get(&full) {
                                    v[k] += term.coeff.clone();
                                }
                            }
                            ideal.push(v);
                        }
                    }
                }
            }
        }
        let r = ratla::span_dim(paths.len(), &ideal).expect("consistent lengths");
        total += paths.len() - r;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> RationalMatrix {
        RationalMatrix::from_i64_rows(rows)
    }

    /// Representation of the ideal sheaf of `[0:0:1]`.
    fn ideal_sheaf_rep(q: &BoundQuiver) -> Representation {
        Representation::new(
            q,
            vec![1, 3, 1],
            vec![
                m(&[&[-1], &[0], &[0]]),
                m(&[&[0], &[-1], &[0]]),
                m(&[&[0], &[0], &[0]]),
                m(&[&[0, -1, 0]]),
                m(&[&[1, 0, 0]]),
                m(&[&[0, 0, 1]]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn p2_preset_shape() {
        let q = preset_p2();
        assert_eq!(q.arrows.len(), 6);
        assert_eq!(q.relations.len(), 6);
        for k in 0..q.relations.len() {
            assert_eq!(q.relation_endpoints(k), (0, 2));
        }
    }

    #[test]
    fn p1xp1_preset_shape() {
        let q = preset_p1xp1();
        assert_eq!(q.arrows.len(), 8);
        assert_eq!(q.relations.len(), 4);
        for k in 0..q.relations.len() {
            assert_eq!(q.relation_endpoints(k), (0, 3));
        }
    }

    #[test]
    fn relation_checks() {
        let q = preset_p2();
        assert!(
            check_relations(&q, &Representation::zero(&q, vec![2, 3, 1]))
                .unwrap()
                .holds
        );
        assert!(check_relations(&q, &ideal_sheaf_rep(&q)).unwrap().holds);
        let ones = Representation::new(&q, vec![1, 1, 1], vec![m(&[&[1]]); 6]).unwrap();
        let chk = check_relations(&q, &ones).unwrap();
        assert!(!chk.holds);
        assert_eq!(chk.violations[0].1, m(&[&[1]]));
    }

    #[test]
    fn shape_errors() {
        let q = preset_p2();
        let bad = Representation::new(&q, vec![1, 1, 1], vec![m(&[&[1, 2]]); 6]);
        assert!(matches!(bad, Err(QuiverError::Shape { .. })));
    }

    #[test]
    fn hom_dimensions() {
        let q = preset_p2();
        let s = Representation::simple(&q, 0);
        assert_eq!(hom_space(&q, &s, &s).unwrap().dim, 1);
        let z = Representation::zero(&q, vec![0, 0, 0]);
        let i = ideal_sheaf_rep(&q);
        assert_eq!(hom_space(&q, &z, &i).unwrap().dim, 0);
        assert_eq!(hom_space(&q, &i, &i).unwrap().dim, 1);
        // Hom(S_1, I): a vector of C^3 killed by every b_m.
        let s1 = Representation::simple(&q, 1);
        let h = hom_space(&q, &s1, &i).unwrap().dim;
        assert_eq!(h, 0);
        // <d, e> = 3 - 0 - 3*1 = 0 lower-bounds hom - ext1 here
        assert!(h as i64 >= euler_form(&q, &[0, 1, 0], &[1, 3, 1]));
    }

    #[test]
    fn isomorphism_examples() {
        let q = preset_p2();
        let rep = |a: [i64; 3]| {
            let mut r = Representation::zero(&q, vec![1, 1, 0]);
            for (mat, &ak) in r.mats.iter_mut().zip(&a) {
                *mat = m(&[&[ak]]);
            }
            r
        };
        let i = ideal_sheaf_rep(&q);
        assert!(is_isomorphic(&q, &i, &i).unwrap());
        assert!(is_isomorphic(&q, &rep([1, 0, 0]), &rep([2, 0, 0])).unwrap());
        assert!(!is_isomorphic(&q, &rep([1, 0, 0]), &rep([0, 1, 0])).unwrap());
    }

    #[test]
    fn euler_form_values() {
        assert_eq!(euler_form(&preset_p2(), &[1, 3, 1], &[1, 3, 1]), -1);
        assert_eq!(
            euler_form(&preset_p1xp1(), &[1, 2, 1, 1], &[1, 2, 1, 1]),
            -1
        );
        assert_eq!(euler_form(&preset_p2(), &[0, 0, 0], &[1, 3, 1]), 0);
    }

    #[test]
    fn dimension_vectors() {
        let p2 = SurfaceKind::P2;
        assert_eq!(
            dimension_vector(&NumericalClass::new(p2, 1, vec![0], 0).unwrap()).unwrap(),
            vec![1, 3, 1]
        );
        assert_eq!(
            dimension_vector(&NumericalClass::new(p2, 1, vec![0], 1).unwrap()).unwrap(),
            vec![0, 1, 0]
        );
        let pp = SurfaceKind::P1xP1;
        assert_eq!(
            dimension_vector(&NumericalClass::new(pp, 1, vec![0, 0], 1).unwrap()).unwrap(),
            vec![0, 1, 0, 0]
        );
        // O(3) on P2 sits outside the heart
        let o3 = NumericalClass::line_bundle(&surface::DivisorClass::p2(3));
        assert!(matches!(
            dimension_vector(&o3),
            Err(QuiverError::NegativeEntry { .. })
        ));
    }

    #[test]
    fn dimension_vector_matrices() {
        let mp2 = dimension_vector_matrix(SurfaceKind::P2);
        assert_eq!(mp2, m(&[&[1, 2, -1], &[3, 3, -2], &[1, 1, -1]]));
        assert_eq!(
            mp2.mul_vec(&[int(1), int(0), int(1)]).unwrap(),
            vec![int(0), int(1), int(0)]
        );
        assert_eq!(dimension_vector_matrix(SurfaceKind::P1xP1).shape(), (4, 4));
    }

    #[test]
    fn path_spaces() {
        let q = preset_p2();
        assert_eq!(path_space_dim(&q, 0, 1), 3);
        assert_eq!(path_space_dim(&q, 0, 2), 3);
        for v in 0..3 {
            assert_eq!(path_space_dim(&q, v, v), 1);
        }
        assert_eq!(path_space_dim(&q, 2, 0), 0);
        let q = preset_p1xp1();
        // Hom(O(1,0), O(2,1)) = H0(O(1,1)) = 4
        assert_eq!(path_space_dim(&q, 0, 3), 4);
        assert_eq!(path_space_dim(&q, 0, 2), 2);
        assert_eq!(path_space_dim(&q, 3, 3), 1);
    }

    #[test]
    fn quiver_json_round_trip() {
        let q = preset_p1xp1();
        let js = serde_json::to_string(&q.to_json()).unwrap();
        let back = BoundQuiver::from_json(&serde_json::from_str(&js).unwrap()).unwrap();
        assert_eq!(back, q);
        let q = preset_p2();
        let rep = ideal_sheaf_rep(&q);
        let js = serde_json::to_string(&rep.to_json(&q)).unwrap();
        let back = Representation::from_json(&q, &serde_json::from_str(&js).unwrap()).unwrap();
        assert_eq!(back, rep);
    }
}
