//! Heart membership and framability: the vanishing battery, triviality on the
//! curve `C0`, framings, the representation extracted from a monad and its
//! inverse, framed morphisms, and the Hilbert-scheme demo.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::adhm::{self, AdhmDatum, AdhmError};
use crate::cohomology::{
    self, chain_maps, euler_characteristic, hypercohomology, locally_free_homology,
    restrict_to_curve, splitting_type, CohomologyError, LineBundleComplex, Space,
};
use crate::poly::{monomials_of_degree, unit_exp};
use crate::quiver::{self, BoundQuiver, QuiverError, Representation};
use crate::ratla::{self, LinalgError};
use crate::report::Check;
use crate::sample::Sampler;
use crate::surface::{
    CollectionMember, CurveModel, ExceptionalCollection, NumericalClass, SurfaceKind,
};
use crate::{int, Polynomial, PolynomialMatrix, RationalMatrix, Scalar};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HeartError {
    #[error("monad is not in the normal form O(-1)^a -> O^b -> O(1)^c on P2: {0}")]
    NotNormalForm(String),
    #[error("relations fail: {violations} violated")]
    RelationsFail { violations: usize },
    #[error("framings have ranks {left} and {right}")]
    FramingMismatch { left: usize, right: usize },
    #[error("surface of the complex ({complex}) differs from the collection's ({collection})")]
    SurfaceMismatch {
        complex: Space,
        collection: SurfaceKind,
    },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
    #[error(transparent)]
    Adhm(#[from] AdhmError),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BatteryEntry {
    pub vertex: usize,
    pub member: String,
    pub h0: usize,
    pub h2: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VanishingReport {
    pub entries: Vec<BatteryEntry>,
    pub pass: bool,
}

/// `[O(-1)^3 -> O]` in degrees `0, 1` with map `(x0, x1, x2)`: the cotangent
/// bundle of `P2` in degree 0.
pub fn euler_resolution_of_omega() -> LineBundleComplex {
    let map = PolynomialMatrix::from_fn(1, 3, 3, |_, c| Polynomial::var(3, c));
    LineBundleComplex::new(
        Space::P2,
        0,
        vec![vec![vec![-1]; 3], vec![vec![0]]],
        vec![map],
    )
    .expect("Euler sequence")
}

/// `h^0` and `h^2` of `E (x) E_i^dual` for every member of the collection, in
/// vertex order; the tangent member is handled through the Euler resolution of
/// the cotangent bundle.
pub fn vanishing_battery(
    c: &LineBundleComplex,
    collection: &ExceptionalCollection,
) -> Result<VanishingReport, HeartError> {
    if c.space() != Space::from(collection.surface) {
        return Err(HeartError::SurfaceMismatch {
            complex: c.space(),
            collection: collection.surface,
        });
    }
    let mut entries = Vec::new();
    for (vertex, member) in collection.members.iter().enumerate() {
        let twisted = match member {
            CollectionMember::LineBundle { class } => c.twisted_by(&class.neg())?,
            CollectionMember::Tangent => c.tensor(&euler_resolution_of_omega())?,
        };
        let h = hypercohomology(&twisted, None)?;
        entries.push(BatteryEntry {
            vertex,
            member: member.label(),
            h0: h.get(0),
            h2: h.get(2),
        });
    }
    let pass = entries.iter().all(|e| e.h0 == 0 && e.h2 == 0);
    Ok(VanishingReport { entries, pass })
}

/// A framing `phi` of `E` along `C0`, stored against reference sections: the
/// columns of `sections` are a basis of `H^0(C0, E|C0)` inside the degree-0
/// term of the restricted complex, and `phi(sections * u) = matrix * u`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Framing {
    pub sections: PolynomialMatrix,
    pub matrix: RationalMatrix,
}

impl Framing {
    pub fn rank(&self) -> usize {
        self.matrix.rows()
    }

    /// The `W`-block framing of an ADHM monad, with the identity matrix.
    pub fn canonical(d: &AdhmDatum) -> Result<Self, HeartError> {
        let f = adhm::canonical_framing(d)?;
        Ok(Framing {
            sections: constant_matrix(&f.sections, 2),
            matrix: RationalMatrix::identity(d.r),
        })
    }

    /// `g . phi`, the action of `GL(r)` on framings.
    pub fn translate(&self, g: &RationalMatrix) -> Result<Self, HeartError> {
        if !ratla::is_invertible(g) {
            return Err(LinalgError::Singular.into());
        }
        Ok(Framing {
            sections: self.sections.clone(),
            matrix: g.checked_mul(&self.matrix)?,
        })
    }

    /// The same framing expressed against other reference sections spanning
    /// the same space: if `new = sections * T` then the matrix becomes `matrix * T`.
    pub fn rebase(&self, new_sections: &PolynomialMatrix) -> Result<Self, HeartError> {
        let t = solve_sections(&self.sections, new_sections)?.ok_or_else(|| {
            HeartError::Unsupported("new sections leave the span of the old ones".into())
        })?;
        if !ratla::is_invertible(&t) {
            return Err(HeartError::Unsupported(
                "new sections are not a basis".into(),
            ));
        }
        Ok(Framing {
            sections: new_sections.clone(),
            matrix: self.matrix.checked_mul(&t)?,
        })
    }
}

fn constant_matrix(m: &RationalMatrix, nvars: usize) -> PolynomialMatrix {
    PolynomialMatrix::from_fn(m.rows(), m.cols(), nvars, |r, c| {
        Polynomial::constant(nvars, m[(r, c)].clone())
    })
}

/// Coefficient vectors of the columns of a polynomial matrix over a shared
/// `(row, exponents)` index.
fn flatten_columns(
    mats: &[&PolynomialMatrix],
    index: &mut BTreeMap<(usize, Vec<u32>), usize>,
) -> Vec<Vec<Vec<(usize, Scalar)>>> {
    mats.iter()
        .map(|m| {
            (0..m.cols())
                .map(|c| {
                    let mut col = Vec::new();
                    for r in 0..m.rows() {
                        for (e, x) in m.get(r, c).terms() {
                            let len = index.len();
                            let k = *index.entry((r, e.clone())).or_insert(len);
                            col.push((k, x.clone()));
                        }
                    }
                    col
                })
                .collect()
        })
        .collect()
}

fn densify(cols: &[Vec<(usize, Scalar)>], dim: usize) -> Vec<Vec<Scalar>> {
    cols.iter()
        .map(|col| {
            let mut v = vec![Scalar::zero(); dim];
            for (k, x) in col {
                v[*k] += x;
            }
            v
        })
        .collect()
}

/// `X` with `basis * X = target`, if any.
fn solve_sections(
    basis: &PolynomialMatrix,
    target: &PolynomialMatrix,
) -> Result<Option<RationalMatrix>, HeartError> {
    let mut index = BTreeMap::new();
    let flat = flatten_columns(&[basis, target], &mut index);
    let dim = index.len();
    let b = RationalMatrix::from_columns(dim, &densify(&flat[0], dim))?;
    let mut cols = Vec::new();
    for t in densify(&flat[1], dim) {
        match ratla::solve(&b, &t)? {
            Some(x) => cols.push(x),
            None => return Ok(None),
        }
    }
    Ok(Some(RationalMatrix::from_columns(basis.cols(), &cols)?))
}

/// A basis of `H^0` of the homology in degree `position`, represented by
/// sections of the degree-`position` term modulo the image of the previous
/// map, put in reduced echelon form so that the result is canonical.
pub fn section_basis(c: &LineBundleComplex, position: i64) -> Result<PolynomialMatrix, HeartError> {
    let space = c.space();
    let zero = vec![0; space.twist_len()];
    let o = LineBundleComplex::single(space, zero, position);
    let homs = chain_maps(&o, c)?;
    let n = c.term(position).len();
    let nvars = space.nvars();
    let groups = space.groups();
    let mut keys: Vec<(usize, Vec<u32>)> = Vec::new();
    for (r, t) in c.term(position).iter().enumerate() {
        for m in monomials_of_degree(nvars, &groups, t) {
            keys.push((r, m));
        }
    }
    let index: BTreeMap<(usize, Vec<u32>), usize> = keys
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, k)| (k, i))
        .collect();
    let rows: Vec<Vec<Scalar>> = homs
        .classes
        .iter()
        .map(|cls| {
            let m = &cls[&position];
            let mut v = vec![Scalar::zero(); keys.len()];
            for r in 0..n {
                for (e, x) in m.get(r, 0).terms() {
                    v[index[&(r, e.clone())]] += x;
                }
            }
            v
        })
        .collect();
    let reduced: Vec<Vec<Scalar>> = if rows.is_empty() {
        Vec::new()
    } else {
        let ech = ratla::rref(&RationalMatrix::from_rows(rows)?);
        (0..ech.rank())
            .map(|i| ech.reduced.row(i).to_vec())
            .collect()
    };
    let mut out = PolynomialMatrix::zeros(n, reduced.len(), nvars);
    for (col, v) in reduced.iter().enumerate() {
        for (k, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let (r, e) = &keys[k];
            let mut entry = out.get(*r, col).clone();
            entry.add_term(e.clone(), x.clone());
            out.set(*r, col, entry);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrivialityReport {
    pub curve: String,
    /// Degree of the complex in which the restricted homology lives.
    pub position: i64,
    pub rank: usize,
    pub degree: i64,
    /// `h^0(C0, E|C0 (-1))`
    pub h0_minus_one: usize,
    pub splitting: Vec<i64>,
    pub trivial: bool,
    pub framing: Option<Framing>,
}

/// `E|C0` is trivial iff it has degree 0 and `h^0(E|C0(-1)) = 0`; when it is,
/// a framing is built from the echelon basis of `H^0(C0, E|C0)`.
pub fn triviality_on_curve(
    c: &LineBundleComplex,
    curve: &CurveModel,
) -> Result<TrivialityReport, HeartError> {
    let restricted = restrict_to_curve(c, curve)?;
    let (position, rank) = locally_free_homology(&restricted)?;
    let sign = if position.rem_euclid(2) == 0 { 1 } else { -1 };
    let degree = sign * euler_characteristic(&restricted) - rank as i64;
    let h0_minus_one = cohomology::p1_sections(&restricted, position, -1)?;
    let splitting = splitting_type(&restricted)?;
    let trivial = degree == 0 && h0_minus_one == 0;
    let framing = if trivial {
        let sections = section_basis(&restricted, position)?;
        let h0 = hypercohomology(&restricted, None)?.get(position);
        if sections.cols() != rank || h0 != rank {
            return Err(HeartError::Unsupported(format!(
                "sections of the restriction are not carried by degree {position} alone ({} found, h0 = {h0}, rank {rank})",
                sections.cols()
            )));
        }
        Some(Framing {
            sections,
            matrix: RationalMatrix::identity(rank),
        })
    } else {
        None
    };
    Ok(TrivialityReport {
        curve: curve.name.clone(),
        position,
        rank,
        degree,
        h0_minus_one,
        splitting,
        trivial,
        framing,
    })
}

/// Dimensions `(d0, d1, d2)` of a monad in normal form.
pub fn normal_form_dims(monad: &LineBundleComplex) -> Result<Vec<usize>, HeartError> {
    if monad.space() != Space::P2 {
        return Err(HeartError::NotNormalForm(format!(
            "space is {}",
            monad.space()
        )));
    }
    if monad.start() != -1 || monad.len() != 3 {
        return Err(HeartError::NotNormalForm(format!(
            "positions {}..{}, expected -1..1",
            monad.start(),
            monad.end()
        )));
    }
    for (p, want) in [(-1, -1), (0, 0), (1, 1)] {
        if let Some(t) = monad.term(p).iter().find(|t| t[0] != want) {
            return Err(HeartError::NotNormalForm(format!(
                "twist {} in degree {p}",
                t[0]
            )));
        }
    }
    Ok((-1..=1).map(|p| monad.term(p).len()).collect())
}

/// Arrow matrices `a_m`, `b_m` = coefficient of `x_{m-1}` in `alpha`, `beta`;
/// no relation check, so this also accepts maps with `beta alpha != 0`.
pub fn rep_from_maps(
    dims: &[usize],
    alpha: &PolynomialMatrix,
    beta: &PolynomialMatrix,
) -> Result<Representation, HeartError> {
    let q = quiver::preset_p2();
    let mut mats = Vec::with_capacity(6);
    for m in 0..3 {
        mats.push(alpha.coefficient(&unit_exp(3, m)));
    }
    for m in 0..3 {
        mats.push(beta.coefficient(&unit_exp(3, m)));
    }
    Ok(Representation::new(&q, dims.to_vec(), mats)?)
}

/// `(alpha, beta) = (sum a_m x_{m-1}, sum b_m x_{m-1})`
pub fn maps_from_rep(rep: &Representation) -> (PolynomialMatrix, PolynomialMatrix) {
    let assemble = |ms: &[RationalMatrix], rows: usize, cols: usize| {
        if rows == 0 || cols == 0 {
            PolynomialMatrix::zeros(rows, cols, 3)
        } else {
            PolynomialMatrix::linear_combination(ms).expect("arrow matrices share a shape")
        }
    };
    let d = &rep.dims;
    (
        assemble(&rep.mats[0..3], d[1], d[0]),
        assemble(&rep.mats[3..6], d[2], d[1]),
    )
}

/// The representation of the P2 quiver carried by a monad in normal form.
pub fn rep_from_monad(monad: &LineBundleComplex) -> Result<Representation, HeartError> {
    let dims = normal_form_dims(monad)?;
    rep_from_maps(&dims, &monad.maps()[0], &monad.maps()[1])
}

/// The monad `O(-1)^d0 -> O^d1 -> O(1)^d2` of a representation satisfying the
/// relations.
pub fn monad_from_rep(rep: &Representation) -> Result<LineBundleComplex, HeartError> {
    let q: BoundQuiver = quiver::preset_p2();
    let check = quiver::check_relations(&q, rep)?;
    if !check.holds {
        return Err(HeartError::RelationsFail {
            violations: check.violations.len(),
        });
    }
    let (alpha, beta) = maps_from_rep(rep);
    let d = &rep.dims;
    Ok(LineBundleComplex::new(
        Space::P2,
        -1,
        vec![
            vec![vec![-1]; d[0]],
            vec![vec![0]; d[1]],
            vec![vec![1]; d[2]],
        ],
        vec![alpha, beta],
    )?)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FramedHomReport {
    /// `dim Hom(E, F)` (chain maps modulo homotopy).
    pub hom_dim: usize,
    /// Rank of `Hom(E, F) -> Hom(E|C0, F|C0)`.
    pub restriction_rank: usize,
    pub restriction_injective: bool,
    /// Whether some morphism is compatible with the framings.
    pub consistent: bool,
    /// Dimension of the affine space of framed morphisms, when nonempty.
    pub solution_dim: Option<usize>,
    /// Exactly one framed morphism.
    pub unique: bool,
}

/// Morphisms `xi: E -> F` with `phi_F o xi|C0 = phi_E`, as an affine linear
/// problem on chain maps modulo homotopy.
pub fn framed_hom(
    monad_e: &LineBundleComplex,
    framing_e: &Framing,
    monad_f: &LineBundleComplex,
    framing_f: &Framing,
    curve: &CurveModel,
) -> Result<FramedHomReport, HeartError> {
    let r = framing_e.rank();
    if framing_f.rank() != r {
        return Err(HeartError::FramingMismatch {
            left: r,
            right: framing_f.rank(),
        });
    }
    let space = chain_maps(monad_e, monad_f)?;
    let mut restrictions = Vec::with_capacity(space.classes.len());
    for class in &space.classes {
        let xi0 = class
            .get(&0)
            .ok_or_else(|| HeartError::Unsupported("no degree-0 component".into()))?;
        let on_curve = if xi0.rows() == 0 || xi0.cols() == 0 {
            PolynomialMatrix::zeros(xi0.rows(), xi0.cols(), 2)
        } else {
            xi0.substitute(&curve.parametrization)
        };
        let image = if framing_e.sections.cols() == 0 {
            PolynomialMatrix::zeros(on_curve.rows(), 0, 2)
        } else {
            on_curve
                .mul(&framing_e.sections)
                .map_err(HeartError::Linalg)?
        };
        let rm = solve_sections(&framing_f.sections, &image)?.ok_or_else(|| {
            HeartError::Unsupported("morphism does not preserve the reference sections".into())
        })?;
        restrictions.push(rm);
    }
    let flat = |m: &RationalMatrix| m.entries().to_vec();
    let rest_cols: Vec<Vec<Scalar>> = restrictions.iter().map(flat).collect();
    let restriction_rank = if rest_cols.is_empty() {
        0
    } else {
        ratla::span_dim(r * r, &rest_cols)?
    };
    let cols: Vec<Vec<Scalar>> = restrictions
        .iter()
        .map(|rm| framing_f.matrix.checked_mul(rm).map(|m| flat(&m)))
        .collect::<Result<_, _>>()?;
    let a = RationalMatrix::from_columns(r * r, &cols)?;
    let b = flat(&framing_e.matrix);
    let consistent = if cols.is_empty() {
        b.iter().all(|x| x.is_zero())
    } else {
        ratla::solve(&a, &b)?.is_some()
    };
    let solution_dim =
        consistent.then(|| space.hom_dim - if cols.is_empty() { 0 } else { ratla::rank(&a) });
    Ok(FramedHomReport {
        hom_dim: space.hom_dim,
        restriction_rank,
        restriction_injective: restriction_rank == space.hom_dim,
        consistent,
        solution_dim,
        unique: solution_dim == Some(0),
    })
}

/// Framed automorphisms of the ADHM monad of `d` with its canonical framing.
pub fn framed_automorphisms(d: &AdhmDatum) -> Result<FramedHomReport, HeartError> {
    let monad = adhm::monad_from_adhm(d)?;
    let phi = Framing::canonical(d)?;
    framed_hom(&monad, &phi, &monad, &phi, &CurveModel::line_at_infinity())
}

/// `[O(-1,-1) -> O(-1,0) + O(0,-1)]` in degrees `-1, 0`: the ideal sheaf of
/// `{x1 = x2 = 0}`, the point `([1:0], [0:1])` of `P1 x P1`.
pub fn p1xp1_point_ideal() -> LineBundleComplex {
    let f = Polynomial::var(4, 1);
    let g = Polynomial::var(4, 2);
    let map = PolynomialMatrix::from_fn(2, 1, 4, |r, _| if r == 0 { g.neg() } else { f.clone() });
    LineBundleComplex::new(
        Space::P1xP1,
        -1,
        vec![vec![vec![-1, -1]], vec![vec![-1, 0], vec![0, -1]]],
        vec![map],
    )
    .expect("two-term complex")
}

/// `O(-1) + O(1)` on `P2` as a complex with no maps: `c1 = 0` but not trivial
/// on `l_inf`.
pub fn unframable_example() -> LineBundleComplex {
    LineBundleComplex::sum(Space::P2, vec![vec![-1], vec![1]], 0).expect("valid twists")
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HilbertReport {
    /// One configured point of `C2` per row.
    pub points: RationalMatrix,
    pub k: usize,
    pub stable: bool,
    pub fiber_at_points: Vec<usize>,
    pub fiber_elsewhere: Vec<usize>,
    pub checks: Vec<Check>,
    pub pass: bool,
}

pub const HILBERT_RANDOM_POINTS: usize = 20;

/// `adhm_from_points -> stability -> monad -> (fiber profile, triviality and
/// framing, vanishing battery, representation, round trip)`; an unstable
/// configuration stops after the stability check.
pub fn hilbert_demo(points: &[(Scalar, Scalar)], seed: u64) -> Result<HilbertReport, HeartError> {
    hilbert_demo_with_samples(points, seed, HILBERT_RANDOM_POINTS)
}

/// [`hilbert_demo`] with `samples` random points off the configuration.
pub fn hilbert_demo_with_samples(
    points: &[(Scalar, Scalar)],
    seed: u64,
    samples: usize,
) -> Result<HilbertReport, HeartError> {
    let d = adhm::adhm_from_points(points);
    let pts = RationalMatrix::from_fn(points.len(), 2, |r, c| {
        if c == 0 {
            points[r].0.clone()
        } else {
            points[r].1.clone()
        }
    });
    let stable = adhm::is_stable(&d);
    let mut checks = vec![Check::new(
        "stable",
        "the smallest B-invariant subspace containing im i is V",
        stable,
        if stable {
            "distinct points"
        } else {
            "repeated point: unstable"
        },
    )];
    if !stable {
        return Ok(HilbertReport {
            points: pts,
            k: d.k,
            stable,
            fiber_at_points: Vec::new(),
            fiber_elsewhere: Vec::new(),
            checks,
            pass: false,
        });
    }
    let monad = adhm::monad_from_adhm(&d)?;
    let fiber_at_points = points
        .iter()
        .map(|(x, y)| adhm::fiber_homology(&monad, &[x.clone(), y.clone(), int(1)]).map(|f| f.dim))
        .collect::<Result<Vec<_>, _>>()?;
    let mut sampler = Sampler::new(seed);
    let mut fiber_elsewhere = Vec::new();
    while fiber_elsewhere.len() < samples {
        let p = (sampler.scalar(), sampler.scalar());
        if points.contains(&p) {
            continue;
        }
        fiber_elsewhere.push(adhm::fiber_homology(&monad, &[p.0, p.1, int(1)])?.dim);
    }
    checks.push(Check::new(
        "fiber-profile",
        "the sheaf is the ideal of the configured points: fiber dimension 2 at them, 1 elsewhere",
        fiber_at_points.iter().all(|&x| x == 2) && fiber_elsewhere.iter().all(|&x| x == 1),
        format!("{fiber_at_points:?} at the points, {fiber_elsewhere:?} elsewhere"),
    ));
    let triv = triviality_on_curve(&monad, &CurveModel::line_at_infinity())?;
    let canonical = Framing::canonical(&d);
    checks.push(Check::new(
        "trivial-on-linf",
        "E is trivial on l_inf iff it has degree 0 and h0(E(-1)) = 0",
        triv.trivial
            && canonical.is_ok()
            && triv.framing.as_ref().map(|f| &f.sections)
                == canonical.as_ref().ok().map(|f| &f.sections),
        format!(
            "degree {}, h0(-1) = {}, splitting {:?}",
            triv.degree, triv.h0_minus_one, triv.splitting
        ),
    ));
    let battery = vanishing_battery(&monad, &ExceptionalCollection::preset(SurfaceKind::P2))?;
    checks.push(Check::new(
        "battery",
        "torsion-free sheaves trivial on C0 lie in the heart: h0 = h2 = 0 against every member",
        battery.pass,
        format!(
            "{:?}",
            battery
                .entries
                .iter()
                .map(|e| (e.h0, e.h2))
                .collect::<Vec<_>>()
        ),
    ));
    let rep = rep_from_monad(&monad)?;
    let expected =
        quiver::dimension_vector(&NumericalClass::framed(SurfaceKind::P2, 1, d.k as i64))?;
    let relations = quiver::check_relations(&quiver::preset_p2(), &rep)?.holds;
    checks.push(Check::new(
        "representation",
        "d^v_i = -chi(E_i, v) and the relations hold",
        rep.dims == expected && relations,
        format!("dims {:?}, expected {expected:?}", rep.dims),
    ));
    let back = monad_from_rep(&rep)?;
    checks.push(Check::new(
        "round-trip",
        "monad and representation determine each other",
        back == monad && rep_from_monad(&back)? == rep,
        "exact",
    ));
    let pass = checks.iter().all(|c| c.pass);
    Ok(HilbertReport {
        points: pts,
        k: d.k,
        stable,
        fiber_at_points,
        fiber_elsewhere,
        checks,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frac;

    fn ideal_monad() -> LineBundleComplex {
        adhm::monad_from_adhm(&AdhmDatum::ideal_sheaf_of_origin()).unwrap()
    }

    #[test]
    fn battery_examples() {
        let p2 = ExceptionalCollection::preset(SurfaceKind::P2);
        let r = vanishing_battery(&ideal_monad(), &p2).unwrap();
        assert!(r.pass);
        assert_eq!(r.entries.len(), 3);
        assert_eq!(r.entries[1].member, "tau");
        let r = vanishing_battery(&unframable_example(), &p2).unwrap();
        assert!(!r.pass);
        let o1 = r.entries.iter().find(|e| e.member == "O(1)").unwrap();
        assert_eq!(o1.h0, 1);
        let q = ExceptionalCollection::preset(SurfaceKind::P1xP1);
        let r = vanishing_battery(&p1xp1_point_ideal(), &q).unwrap();
        assert!(r.pass);
        assert_eq!(r.entries.len(), 4);
        assert!(vanishing_battery(&ideal_monad(), &q).is_err());
    }

    #[test]
    fn omega_resolution() {
        let h = hypercohomology(&euler_resolution_of_omega(), None).unwrap();
        assert_eq!(h.get(1), 1);
        assert_eq!(h.get(0) + h.get(2), 0);
    }

    #[test]
    fn triviality_examples() {
        let linf = CurveModel::line_at_infinity();
        let t = triviality_on_curve(&ideal_monad(), &linf).unwrap();
        assert!(t.trivial);
        assert_eq!(t.splitting, vec![0]);
        let f = t.framing.unwrap();
        assert_eq!(
            f,
            Framing::canonical(&AdhmDatum::ideal_sheaf_of_origin()).unwrap()
        );
        let t = triviality_on_curve(&unframable_example(), &linf).unwrap();
        assert!(!t.trivial);
        assert_eq!(t.h0_minus_one, 1);
        assert_eq!(t.splitting, vec![1, -1]);
        let trivial = adhm::monad_from_adhm(&AdhmDatum::zero(0, 2)).unwrap();
        let t = triviality_on_curve(&trivial, &linf).unwrap();
        assert_eq!(t.framing.unwrap().matrix, RationalMatrix::identity(2));
    }

    #[test]
    fn framing_torsor() {
        let d = AdhmDatum::zero(0, 2);
        let phi = Framing::canonical(&d).unwrap();
        let g = RationalMatrix::from_i64_rows(&[&[1, 2], &[0, 1]]);
        assert_eq!(phi.translate(&g).unwrap().matrix, g);
        let t = RationalMatrix::from_i64_rows(&[&[2, 0], &[1, 1]]);
        let new_sections = phi.sections.mul(&constant_matrix(&t, 2)).unwrap();
        let rebased = phi.rebase(&new_sections).unwrap();
        assert_eq!(rebased.matrix, t);
        assert!(phi.translate(&RationalMatrix::zeros(2, 2)).is_err());
    }

    #[test]
    fn ideal_sheaf_rep() {
        let rep = rep_from_monad(&ideal_monad()).unwrap();
        assert_eq!(rep.dims, vec![1, 3, 1]);
        let col = |v: &[i64]| {
            RationalMatrix::from_i64_rows(&v.iter().map(std::slice::from_ref).collect::<Vec<_>>())
        };
        assert_eq!(rep.mats[0], col(&[-1, 0, 0]));
        assert_eq!(rep.mats[1], col(&[0, -1, 0]));
        assert_eq!(rep.mats[2], col(&[0, 0, 0]));
        assert_eq!(rep.mats[3], RationalMatrix::from_i64_rows(&[&[0, -1, 0]]));
        assert_eq!(rep.mats[4], RationalMatrix::from_i64_rows(&[&[1, 0, 0]]));
        assert_eq!(rep.mats[5], RationalMatrix::from_i64_rows(&[&[0, 0, 1]]));
        assert!(
            quiver::check_relations(&quiver::preset_p2(), &rep)
                .unwrap()
                .holds
        );
        assert_eq!(monad_from_rep(&rep).unwrap(), ideal_monad());
    }

    #[test]
    fn rep_edge_cases() {
        let q = quiver::preset_p2();
        let zero = Representation::zero(&q, vec![0, 1, 0]);
        let m = monad_from_rep(&zero).unwrap();
        assert_eq!(rep_from_monad(&m).unwrap(), zero);
        let triv = rep_from_monad(&adhm::monad_from_adhm(&AdhmDatum::zero(0, 2)).unwrap()).unwrap();
        assert_eq!(triv.dims, vec![0, 2, 0]);
        let mut bad = rep_from_monad(&ideal_monad()).unwrap();
        bad.mats[5] = RationalMatrix::from_i64_rows(&[&[1, 0, 1]]);
        assert!(matches!(
            monad_from_rep(&bad),
            Err(HeartError::RelationsFail { .. })
        ));
        let (a, b) = maps_from_rep(&bad);
        assert!(!b.mul(&a).unwrap().is_zero());
        let wrong = LineBundleComplex::single(Space::P2, vec![1], 0);
        assert!(rep_from_monad(&wrong).is_err());
    }

    #[test]
    fn framed_hom_examples() {
        let r = framed_automorphisms(&AdhmDatum::ideal_sheaf_of_origin()).unwrap();
        assert_eq!(r.hom_dim, 1);
        assert!(r.restriction_injective && r.unique);
        let r = framed_automorphisms(&AdhmDatum::zero(0, 1)).unwrap();
        assert!(r.unique);
        let d = adhm::adhm_from_points(&[(int(0), int(0)), (int(1), frac(1, 2))]);
        let r = framed_automorphisms(&d).unwrap();
        assert!(r.unique, "{r:?}");
        let a = Framing::canonical(&AdhmDatum::zero(0, 1)).unwrap();
        let b = Framing::canonical(&AdhmDatum::zero(0, 2)).unwrap();
        let m = ideal_monad();
        assert!(matches!(
            framed_hom(&m, &a, &m, &b, &CurveModel::line_at_infinity()),
            Err(HeartError::FramingMismatch { .. })
        ));
    }

    #[test]
    fn framed_hom_between_different_sheaves() {
        // I_p -> O: framed morphism exists (the inclusion), unframed Hom is 1-dimensional
        let e = ideal_monad();
        let f = adhm::monad_from_adhm(&AdhmDatum::zero(0, 1)).unwrap();
        let pe = Framing::canonical(&AdhmDatum::ideal_sheaf_of_origin()).unwrap();
        let pf = Framing::canonical(&AdhmDatum::zero(0, 1)).unwrap();
        let r = framed_hom(&e, &pe, &f, &pf, &CurveModel::line_at_infinity()).unwrap();
        assert_eq!(r.hom_dim, 1);
        assert!(r.unique);
        // O -> I_p: no nonzero morphism, so no framed one
        let r = framed_hom(&f, &pf, &e, &pe, &CurveModel::line_at_infinity()).unwrap();
        assert_eq!(r.hom_dim, 0);
        assert!(!r.consistent);
    }

    #[test]
    fn hilbert_examples() {
        let r = hilbert_demo(&[(int(0), int(0))], 1).unwrap();
        assert!(r.pass, "{:?}", r.checks);
        assert_eq!(r.fiber_at_points, vec![2]);
        let r = hilbert_demo(&[(int(0), int(0)), (int(1), int(1))], 1).unwrap();
        assert!(r.pass, "{:?}", r.checks);
        assert_eq!(r.fiber_elsewhere, vec![1; HILBERT_RANDOM_POINTS]);
        let r = hilbert_demo(&[(int(0), int(0)), (int(0), int(0))], 1).unwrap();
        assert!(!r.stable && !r.pass);
    }

    #[test]
    fn p1xp1_ideal_is_a_resolution() {
        let c = p1xp1_point_ideal();
        let h = hypercohomology(&c, None).unwrap();
        // h0(I_p) = 0, chi(I_p) = 0
        assert!(h.is_zero());
    }
}
