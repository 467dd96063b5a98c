//! The two target surfaces: intersection theory, Chern characters and
//! Hirzebruch-Riemann-Roch, exceptional collections and framing curves.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::{frac, int, Polynomial, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SurfaceError {
    #[error("classes live on different surfaces ({0} vs {1})")]
    SurfaceMismatch(SurfaceKind, SurfaceKind),
    #[error("divisor class on {surface} needs {expected} coordinates, got {found}")]
    WrongLength {
        surface: SurfaceKind,
        expected: usize,
        found: usize,
    },
    #[error("Euler characteristic {0} is not an integer")]
    NonIntegral(Scalar),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SurfaceKind {
    #[serde(rename = "P2")]
    P2,
    #[serde(rename = "P1xP1")]
    P1xP1,
}

impl fmt::Display for SurfaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SurfaceKind::P2 => "P2",
            SurfaceKind::P1xP1 => "P1xP1",
        })
    }
}

impl std::str::FromStr for SurfaceKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "P2" | "p2" => Ok(SurfaceKind::P2),
            "P1xP1" | "p1xp1" | "P1P1" => Ok(SurfaceKind::P1xP1),
            _ => Err(format!("unknown surface {s:?} (expected P2 or P1xP1)")),
        }
    }
}

impl SurfaceKind {
    pub fn picard_rank(self) -> usize {
        match self {
            SurfaceKind::P2 => 1,
            SurfaceKind::P1xP1 => 2,
        }
    }

    /// Gram matrix of the intersection form in the basis `H` resp. `H, F`.
    pub fn intersection_matrix(self) -> Vec<Vec<i64>> {
        match self {
            SurfaceKind::P2 => vec![vec![1]],
            SurfaceKind::P1xP1 => vec![vec![0, 1], vec![1, 0]],
        }
    }

    pub fn canonical_class(self) -> DivisorClass {
        match self {
            SurfaceKind::P2 => DivisorClass::raw(self, vec![-3]),
            SurfaceKind::P1xP1 => DivisorClass::raw(self, vec![-2, -2]),
        }
    }

    /// Charts of the standard torus-invariant affine cover.
    pub fn chart_count(self) -> usize {
        match self {
            SurfaceKind::P2 => 3,
            SurfaceKind::P1xP1 => 4,
        }
    }

    /// Number of homogeneous coordinates (`x0,x1,x2` resp. `x0,x1,y0,y1`).
    pub fn coordinate_count(self) -> usize {
        match self {
            SurfaceKind::P2 => 3,
            SurfaceKind::P1xP1 => 4,
        }
    }

    /// Degree-one part of the Todd class, `-K/2`, as rational coordinates.
    fn todd1(self) -> Vec<Scalar> {
        self.canonical_class()
            .coords
            .iter()
            .map(|&k| frac(-k, 2))
            .collect()
    }

    pub fn all() -> [SurfaceKind; 2] {
        [SurfaceKind::P2, SurfaceKind::P1xP1]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DivisorClass {
    pub surface: SurfaceKind,
    pub coords: Vec<i64>,
}

impl DivisorClass {
    pub fn new(surface: SurfaceKind, coords: Vec<i64>) -> Result<Self, SurfaceError> {
        if coords.len() != surface.picard_rank() {
            return Err(SurfaceError::WrongLength {
                surface,
                expected: surface.picard_rank(),
                found: coords.len(),
            });
        }
        Ok(DivisorClass { surface, coords })
    }

    fn raw(surface: SurfaceKind, coords: Vec<i64>) -> Self {
        debug_assert_eq!(coords.len(), surface.picard_rank());
        DivisorClass { surface, coords }
    }

    pub fn zero(surface: SurfaceKind) -> Self {
        Self::raw(surface, vec![0; surface.picard_rank()])
    }

    /// `dH` on `P2`.
    pub fn p2(d: i64) -> Self {
        Self::raw(SurfaceKind::P2, vec![d])
    }

    /// `aH + bF` on `P1 x P1`.
    pub fn p1xp1(a: i64, b: i64) -> Self {
        Self::raw(SurfaceKind::P1xP1, vec![a, b])
    }

    pub fn add(&self, other: &Self) -> Result<Self, SurfaceError> {
        same_surface(self.surface, other.surface)?;
        Ok(Self::raw(
            self.surface,
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        ))
    }

    pub fn neg(&self) -> Self {
        Self::raw(self.surface, self.coords.iter().map(|a| -a).collect())
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SurfaceError> {
        self.add(&other.neg())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&a| a == 0)
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.surface {
            SurfaceKind::P2 => write!(f, "O({})", self.coords[0]),
            SurfaceKind::P1xP1 => write!(f, "O({},{})", self.coords[0], self.coords[1]),
        }
    }
}

fn same_surface(a: SurfaceKind, b: SurfaceKind) -> Result<(), SurfaceError> {
    if a == b {
        Ok(())
    } else {
        Err(SurfaceError::SurfaceMismatch(a, b))
    }
}

pub fn intersect(d: &DivisorClass, e: &DivisorClass) -> Result<i64, SurfaceError> {
    same_surface(d.surface, e.surface)?;
    let g = d.surface.intersection_matrix();
    let mut s = 0;
    for (i, row) in g.iter().enumerate() {
        for (j, gij) in row.iter().enumerate() {
            s += d.coords[i] * gij * e.coords[j];
        }
    }
    Ok(s)
}

fn intersect_q(surface: SurfaceKind, a: &[Scalar], b: &[Scalar]) -> Scalar {
    let g = surface.intersection_matrix();
    let mut s = Scalar::zero();
    for (i, row) in g.iter().enumerate() {
        for (j, gij) in row.iter().enumerate() {
            if *gij != 0 {
                s += a[i].clone() * int(*gij) * b[j].clone();
            }
        }
    }
    s
}

/// `ch = (rank, c1, ch2)`; `c1` is kept integral since every class in scope
/// has an integral first Chern class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChernCharacter {
    pub rank: i64,
    pub c1: DivisorClass,
    #[serde(with = "crate::ratla::scalar_str")]
    pub ch2: Scalar,
}

impl ChernCharacter {
    pub fn surface(&self) -> SurfaceKind {
        self.c1.surface
    }

    pub fn structure_sheaf(surface: SurfaceKind) -> Self {
        Self::line_bundle(&DivisorClass::zero(surface))
    }

    /// `ch(O(D)) = (1, D, D^2/2)`.
    pub fn line_bundle(d: &DivisorClass) -> Self {
        let self_int = intersect(d, d).expect("same surface");
        ChernCharacter {
            rank: 1,
            c1: d.clone(),
            ch2: frac(self_int, 2),
        }
    }

    /// Tangent bundle of `P2`, from the Euler sequence.
    pub fn tangent_p2() -> Self {
        ChernCharacter {
            rank: 2,
            c1: DivisorClass::p2(3),
            ch2: frac(3, 2),
        }
    }

    pub fn cotangent_p2() -> Self {
        Self::tangent_p2().dual()
    }

    /// Negates `c1`.
    pub fn dual(&self) -> Self {
        ChernCharacter {
            rank: self.rank,
            c1: self.c1.neg(),
            ch2: self.ch2.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, SurfaceError> {
        Ok(ChernCharacter {
            rank: self.rank + other.rank,
            c1: self.c1.add(&other.c1)?,
            ch2: self.ch2.clone() + other.ch2.clone(),
        })
    }

    pub fn neg(&self) -> Self {
        ChernCharacter {
            rank: -self.rank,
            c1: self.c1.neg(),
            ch2: -self.ch2.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, SurfaceError> {
        same_surface(self.surface(), other.surface())?;
        let c1 = DivisorClass::raw(
            self.surface(),
            self.c1
                .coords
                .iter()
                .zip(&other.c1.coords)
                .map(|(a, b)| self.rank * b + other.rank * a)
                .collect(),
        );
        let ch2 = int(self.rank) * other.ch2.clone()
            + int(other.rank) * self.ch2.clone()
            + int(intersect(&self.c1, &other.c1)?);
        Ok(ChernCharacter {
            rank: self.rank * other.rank,
            c1,
            ch2,
        })
    }
}

/// Hirzebruch-Riemann-Roch with the hard-coded Todd classes
/// `1 + 3/2 H + pt` on `P2` and `1 + (H + F) + pt` on `P1 x P1`.
pub fn chi(ch: &ChernCharacter) -> Scalar {
    let s = ch.surface();
    let c1: Vec<Scalar> = ch.c1.coords.iter().map(|&a| int(a)).collect();
    ch.ch2.clone() + intersect_q(s, &c1, &s.todd1()) + int(ch.rank)
}

/// `chi(v, w) = integral of ch(v)^dual * ch(w) * td`.
pub fn chi_pair(v: &ChernCharacter, w: &ChernCharacter) -> Result<Scalar, SurfaceError> {
    Ok(chi(&v.dual().mul(w)?))
}

/// Numerical class in the coordinates `(rank, c1, chi)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NumericalClass {
    pub rank: i64,
    pub c1: DivisorClass,
    pub chi: i64,
}

impl NumericalClass {
    pub fn new(
        surface: SurfaceKind,
        rank: i64,
        c1: Vec<i64>,
        chi: i64,
    ) -> Result<Self, SurfaceError> {
        Ok(NumericalClass {
            rank,
            c1: DivisorClass::new(surface, c1)?,
            chi,
        })
    }

    pub fn surface(&self) -> SurfaceKind {
        self.c1.surface
    }

    /// Class of a rank-`r` torsion-free sheaf with `c1 = 0`, `c2 = k`.
    pub fn framed(surface: SurfaceKind, r: i64, k: i64) -> Self {
        NumericalClass {
            rank: r,
            c1: DivisorClass::zero(surface),
            chi: r - k,
        }
    }

    pub fn line_bundle(d: &DivisorClass) -> Self {
        Self::from_chern(&ChernCharacter::line_bundle(d)).expect("line bundles are integral")
    }

    /// `(rank, c1 coordinates..., chi)` as used by the dimension-vector matrix.
    pub fn coordinates(&self) -> Vec<i64> {
        let mut v = vec![self.rank];
        v.extend(&self.c1.coords);
        v.push(self.chi);
        v
    }

    pub fn from_coordinates(surface: SurfaceKind, coords: &[i64]) -> Result<Self, SurfaceError> {
        let n = surface.picard_rank() + 2;
        if coords.len() != n {
            return Err(SurfaceError::WrongLength {
                surface,
                expected: n,
                found: coords.len(),
            });
        }
        Self::new(surface, coords[0], coords[1..n - 1].to_vec(), coords[n - 1])
    }

    pub fn to_chern(&self) -> ChernCharacter {
        let s = self.surface();
        let c1: Vec<Scalar> = self.c1.coords.iter().map(|&a| int(a)).collect();
        ChernCharacter {
            rank: self.rank,
            c1: self.c1.clone(),
            ch2: int(self.chi) - intersect_q(s, &c1, &s.todd1()) - int(self.rank),
        }
    }

    pub fn from_chern(ch: &ChernCharacter) -> Result<Self, SurfaceError> {
        let x = chi(ch);
        if !x.is_integer() {
            return Err(SurfaceError::NonIntegral(x));
        }
        Ok(NumericalClass {
            rank: ch.rank,
            c1: ch.c1.clone(),
            chi: to_i64(&x),
        })
    }

    /// Second Chern class `c1^2/2 - ch2`.
    pub fn c2(&self) -> Scalar {
        let ch = self.to_chern();
        frac(intersect(&ch.c1, &ch.c1).expect("same surface"), 2) - ch.ch2
    }

    pub fn add(&self, other: &Self) -> Result<Self, SurfaceError> {
        Ok(NumericalClass {
            rank: self.rank + other.rank,
            c1: self.c1.add(&other.c1)?,
            chi: self.chi + other.chi,
        })
    }
}

pub(crate) fn to_i64(x: &Scalar) -> i64 {
    use num_traits::ToPrimitive;
    x.to_integer().to_i64().expect("integer fits in i64")
}

/// Class of `v (x) O(D)`, computed through the Chern character product.
pub fn twist(v: &NumericalClass, d: &DivisorClass) -> Result<NumericalClass, SurfaceError> {
    same_surface(v.surface(), d.surface)?;
    NumericalClass::from_chern(&v.to_chern().mul(&ChernCharacter::line_bundle(d))?)
}

/// Closed form for `chi(O(D))`: `(d+1)(d+2)/2` on `P2`, `(a+1)(b+1)` on `P1 x P1`.
pub fn chi_line_bundle(d: &DivisorClass) -> i64 {
    match d.surface {
        SurfaceKind::P2 => {
            let n = d.coords[0];
            (n + 1) * (n + 2) / 2
        }
        SurfaceKind::P1xP1 => (d.coords[0] + 1) * (d.coords[1] + 1),
    }
}

/// A smooth rational curve `P1 -> X` given by forms in `(s, t)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CurveModel {
    pub name: String,
    pub class: DivisorClass,
    /// One form in `(s, t)` per homogeneous coordinate of the surface.
    pub parametrization: Vec<Polynomial>,
}

impl CurveModel {
    /// The line `x2 = 0`, parametrized by `[s : t : 0]`.
    pub fn line_at_infinity() -> Self {
        CurveModel {
            name: "linf".into(),
            class: DivisorClass::p2(1),
            parametrization: vec![
                Polynomial::var(2, 0),
                Polynomial::var(2, 1),
                Polynomial::zero(2),
            ],
        }
    }

    /// The diagonal, parametrized by `([s : t], [s : t])`.
    pub fn diagonal() -> Self {
        CurveModel {
            name: "diag".into(),
            class: DivisorClass::p1xp1(1, 1),
            parametrization: vec![
                Polynomial::var(2, 0),
                Polynomial::var(2, 1),
                Polynomial::var(2, 0),
                Polynomial::var(2, 1),
            ],
        }
    }

    pub fn preset(surface: SurfaceKind) -> Self {
        match surface {
            SurfaceKind::P2 => Self::line_at_infinity(),
            SurfaceKind::P1xP1 => Self::diagonal(),
        }
    }

    pub fn by_name(name: &str) -> Option<Self> {
        match name {
            "linf" | "line" => Some(Self::line_at_infinity()),
            "diag" | "diagonal" => Some(Self::diagonal()),
            _ => None,
        }
    }

    pub fn surface(&self) -> SurfaceKind {
        self.class.surface
    }

    /// Degree of the parametrizing forms for each coordinate group of the surface.
    pub fn group_degrees(&self) -> Vec<i64> {
        crate::cohomology::Space::from(self.surface())
            .groups()
            .iter()
            .map(|g| {
                g.iter()
                    .filter_map(|&i| self.parametrization[i].multidegree(&[vec![0, 1]]))
                    .map(|d| d[0])
                    .next()
                    .unwrap_or(0)
            })
            .collect()
    }

    /// Degree on `P1` of `O(D)` restricted to the curve.
    pub fn restricted_degree(&self, d: &DivisorClass) -> i64 {
        d.coords
            .iter()
            .zip(self.group_degrees())
            .map(|(a, g)| a * g)
            .sum()
    }

    /// Degree bookkeeping: the parametrization must pull `O(D)` back to
    /// `O(D . C)` for every `D`.
    pub fn is_consistent(&self) -> bool {
        let s = self.surface();
        (0..s.picard_rank()).all(|i| {
            let mut e = vec![0; s.picard_rank()];
            e[i] = 1;
            let e = DivisorClass::raw(s, e);
            intersect(&e, &self.class).ok() == Some(self.restricted_degree(&e))
        })
    }
}

/// Member of one of the preset exceptional collections.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CollectionMember {
    LineBundle {
        class: DivisorClass,
    },
    /// Tangent bundle of `P2`.
    Tangent,
}

impl CollectionMember {
    pub fn chern(&self) -> ChernCharacter {
        match self {
            CollectionMember::LineBundle { class } => ChernCharacter::line_bundle(class),
            CollectionMember::Tangent => ChernCharacter::tangent_p2(),
        }
    }

    pub fn label(&self) -> String {
        match self {
            CollectionMember::LineBundle { class } => class.to_string(),
            CollectionMember::Tangent => "tau".into(),
        }
    }
}

/// Full strong exceptional collection indexed by quiver vertex: `members[i] = E_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExceptionalCollection {
    pub surface: SurfaceKind,
    pub members: Vec<CollectionMember>,
}

impl ExceptionalCollection {
    /// `(E_2, E_1, E_0) = (O(1), tau, O(2))` on `P2`;
    /// `E_0..E_3 = O(2,1), O(2,0), O(1,1), O(1,0)` on `P1 x P1`.
    pub fn preset(surface: SurfaceKind) -> Self {
        let lb = |class| CollectionMember::LineBundle { class };
        let members = match surface {
            SurfaceKind::P2 => vec![
                lb(DivisorClass::p2(2)),
                CollectionMember::Tangent,
                lb(DivisorClass::p2(1)),
            ],
            SurfaceKind::P1xP1 => vec![
                lb(DivisorClass::p1xp1(2, 1)),
                lb(DivisorClass::p1xp1(2, 0)),
                lb(DivisorClass::p1xp1(1, 1)),
                lb(DivisorClass::p1xp1(1, 0)),
            ],
        };
        ExceptionalCollection { surface, members }
    }

    pub fn line_bundle_classes(&self) -> Vec<DivisorClass> {
        self.members
            .iter()
            .filter_map(|m| match m {
                CollectionMember::LineBundle { class } => Some(class.clone()),
                CollectionMember::Tangent => None,
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MemberBound {
    pub class: DivisorClass,
    /// `D . C0`
    pub degree: i64,
    pub positive: bool,
    pub below_anticanonical: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisReport {
    pub surface: SurfaceKind,
    pub curve: String,
    /// `-K . C0`
    pub anticanonical_degree: i64,
    pub curve_self_intersection: i64,
    pub curve_nef_and_big: bool,
    pub members: Vec<MemberBound>,
    /// A class with `c1(L) . C0 = 1`, searched in the box `[-3, 3]^rank`.
    pub degree_one_class: Option<DivisorClass>,
    pub pass: bool,
}

pub fn hypothesis_check(
    surface: SurfaceKind,
    curve: &CurveModel,
    collection: &[DivisorClass],
) -> Result<HypothesisReport, SurfaceError> {
    same_surface(surface, curve.surface())?;
    let c0 = &curve.class;
    let anti = -intersect(&surface.canonical_class(), c0)?;
    let members = collection
        .iter()
        .map(|d| {
            let degree = intersect(d, c0)?;
            Ok(MemberBound {
                class: d.clone(),
                degree,
                positive: degree > 0,
                below_anticanonical: degree < anti,
            })
        })
        .collect::<Result<Vec<_>, SurfaceError>>()?;
    let self_int = intersect(c0, c0)?;
    let nef = c0.coords.iter().all(|&a| a >= 0);
    let degree_one_class = search_degree_one(surface, c0);
    let pass = members.iter().all(|m| m.positive && m.below_anticanonical)
        && degree_one_class.is_some()
        && nef
        && self_int > 0;
    Ok(HypothesisReport {
        surface,
        curve: curve.name.clone(),
        anticanonical_degree: anti,
        curve_self_intersection: self_int,
        curve_nef_and_big: nef && self_int > 0,
        members,
        degree_one_class,
        pass,
    })
}

/// Smallest class (by l1 norm, then lexicographically largest) of degree 1
/// against `c0` inside `[-3, 3]^rank`.
fn search_degree_one(surface: SurfaceKind, c0: &DivisorClass) -> Option<DivisorClass> {
    let n = surface.picard_rank();
    let mut candidates: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..n {
        candidates = candidates
            .into_iter()
            .flat_map(|v| {
                (-3..=3).map(move |a| {
                    let mut w = v.clone();
                    w.push(a);
                    w
                })
            })
            .collect();
    }
    candidates.sort_by(|a, b| {
        let na: i64 = a.iter().map(|x| x.abs()).sum();
        let nb: i64 = b.iter().map(|x| x.abs()).sum();
        na.cmp(&nb).then(b.cmp(a))
    });
    candidates
        .into_iter()
        .map(|c| DivisorClass::raw(surface, c))
        .find(|d| intersect(d, c0) == Ok(1))
}

/// `chi(E_i, v)` for every member; helper shared with the quiver module.
pub fn collection_pairings(
    collection: &ExceptionalCollection,
    v: &ChernCharacter,
) -> Result<Vec<Scalar>, SurfaceError> {
    collection
        .members
        .iter()
        .map(|m| chi_pair(&m.chern(), v))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn intersection_numbers() {
        let h = DivisorClass::p1xp1(1, 0);
        let f = DivisorClass::p1xp1(0, 1);
        assert_eq!(intersect(&h, &f), Ok(1));
        assert_eq!(intersect(&h, &h), Ok(0));
        assert_eq!(intersect(&f, &f), Ok(0));
        assert_eq!(intersect(&DivisorClass::p2(1), &DivisorClass::p2(1)), Ok(1));
        assert!(intersect(&h, &DivisorClass::p2(1)).is_err());
    }

    #[test]
    fn euler_characteristics() {
        assert_eq!(
            chi(&ChernCharacter::line_bundle(&DivisorClass::p2(1))),
            int(3)
        );
        assert_eq!(
            chi(&ChernCharacter::line_bundle(&DivisorClass::p1xp1(1, 1))),
            int(4)
        );
        for s in SurfaceKind::all() {
            assert_eq!(chi(&ChernCharacter::structure_sheaf(s)), int(1));
        }
    }

    #[test]
    fn closed_forms_match_hrr() {
        // monomial-count oracle, extended to negative degrees by Serre duality
        let binom2 = |n: i64| if n >= 0 { (n + 1) * (n + 2) / 2 } else { 0 };
        for d in -5..=5 {
            let serre = if d >= 0 { binom2(d) } else { binom2(-3 - d) };
            let expected = if d >= -2 { binom2(d) } else { serre };
            let ch = ChernCharacter::line_bundle(&DivisorClass::p2(d));
            assert_eq!(chi(&ch), int(expected), "P2 degree {d}");
            assert_eq!(chi_line_bundle(&DivisorClass::p2(d)), expected);
        }
        let h0 = |m: i64| if m >= 0 { m + 1 } else { 0 };
        let h1 = |m: i64| if m <= -2 { -m - 1 } else { 0 };
        for a in -4..=4 {
            for b in -4..=4 {
                let chi_a = h0(a) - h1(a);
                let chi_b = h0(b) - h1(b);
                let ch = ChernCharacter::line_bundle(&DivisorClass::p1xp1(a, b));
                assert_eq!(chi(&ch), int(chi_a * chi_b));
            }
        }
    }

    #[test]
    fn pairing_of_ideal_sheaf_class() {
        for s in SurfaceKind::all() {
            let v = NumericalClass::framed(s, 1, 1).to_chern();
            assert_eq!(chi_pair(&v, &v).unwrap(), int(-1), "{s}");
            let o = ChernCharacter::structure_sheaf(s);
            assert_eq!(chi_pair(&o, &o).unwrap(), int(1));
        }
    }

    #[test]
    fn twists() {
        let o = NumericalClass::line_bundle(&DivisorClass::zero(SurfaceKind::P2));
        let o1 = twist(&o, &DivisorClass::p2(1)).unwrap();
        assert_eq!(o1.chi, 3);
        assert_eq!(o1.c1, DivisorClass::p2(1));
        assert_eq!(twist(&o, &DivisorClass::zero(SurfaceKind::P2)).unwrap(), o);
        assert_eq!(twist(&o, &DivisorClass::p2(-2)).unwrap().chi, 0);
    }

    #[test]
    fn tangent_bundle_character() {
        let t = ChernCharacter::tangent_p2();
        // chi(T_P2) = h0 = 8
        assert_eq!(chi(&t), int(8));
        assert_eq!(chi(&ChernCharacter::cotangent_p2()), int(-1));
    }

    #[test]
    fn hypothesis_instances() {
        let r = hypothesis_check(
            SurfaceKind::P1xP1,
            &CurveModel::diagonal(),
            &[
                DivisorClass::p1xp1(1, 0),
                DivisorClass::p1xp1(1, 1),
                DivisorClass::p1xp1(2, 0),
                DivisorClass::p1xp1(2, 1),
            ],
        )
        .unwrap();
        assert!(r.pass);
        assert_eq!(r.anticanonical_degree, 4);
        assert_eq!(
            r.members.iter().map(|m| m.degree).collect::<Vec<_>>(),
            vec![1, 2, 2, 3]
        );
        assert_eq!(r.degree_one_class, Some(DivisorClass::p1xp1(1, 0)));

        let r = hypothesis_check(
            SurfaceKind::P2,
            &CurveModel::line_at_infinity(),
            &[DivisorClass::p2(1), DivisorClass::p2(2)],
        )
        .unwrap();
        assert!(r.pass);
        assert_eq!(r.anticanonical_degree, 3);
        assert_eq!(r.degree_one_class, Some(DivisorClass::p2(1)));

        let r = hypothesis_check(
            SurfaceKind::P2,
            &CurveModel::line_at_infinity(),
            &[DivisorClass::p2(3)],
        )
        .unwrap();
        assert!(!r.pass);
        assert!(r.members[0].positive && !r.members[0].below_anticanonical);
    }

    #[test]
    fn curve_presets_are_consistent() {
        assert!(CurveModel::line_at_infinity().is_consistent());
        assert!(CurveModel::diagonal().is_consistent());
        assert_eq!(
            CurveModel::diagonal().restricted_degree(&DivisorClass::p1xp1(1, 1)),
            2
        );
    }
}
