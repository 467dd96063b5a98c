//! Line-bundle complexes on `P1`, `P2` and `P1 x P1`, and their (hyper)cohomology.
//!
//! Hypercohomology is computed on the Cech double complex of the standard
//! toric cover, restricted to Laurent monomials whose exponents are bounded
//! below by the window. See [`cech`] for the algorithm.

mod cech;
mod chain;
mod spectral;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::{group_degree, unit_exp};
use crate::ratla::{self, LinalgError};
use crate::surface::{CurveModel, DivisorClass, SurfaceKind};
use crate::{int, Polynomial, PolynomialMatrix, RationalMatrix, Scalar};

pub use chain::{chain_maps, ChainMapSpace};
pub use spectral::beilinson_p2;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CohomologyError {
    #[error("malformed complex: {0}")]
    Malformed(String),
    #[error("map {position}: entry ({row}, {col}) is not homogeneous of multidegree {expected:?}")]
    Degree {
        position: i64,
        row: usize,
        col: usize,
        expected: Vec<i64>,
    },
    #[error("not a complex: composite of maps {position} and {} is nonzero", position + 1)]
    NotAComplex { position: i64 },
    #[error("window {given} is below the required bound {required}")]
    WindowTooSmall { given: usize, required: usize },
    #[error(
        "internal error: Euler characteristic {computed} differs from the closed form {expected}"
    )]
    EulerMismatch { computed: i64, expected: i64 },
    #[error("complex lives on {found}, expected {expected}")]
    SpaceMismatch { expected: Space, found: Space },
    #[error("homology is not locally free: {0}")]
    NotLocallyFree(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Ambient space of a complex: the two surfaces and the curve `P1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Space {
    P1,
    P2,
    P1xP1,
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Space::P1 => "P1",
            Space::P2 => "P2",
            Space::P1xP1 => "P1xP1",
        })
    }
}

impl std::str::FromStr for Space {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "P1" => Ok(Space::P1),
            "P2" => Ok(Space::P2),
            "P1xP1" => Ok(Space::P1xP1),
            _ => Err(format!("unknown space {s:?} (expected P1, P2 or P1xP1)")),
        }
    }
}

impl From<SurfaceKind> for Space {
    fn from(s: SurfaceKind) -> Self {
        match s {
            SurfaceKind::P2 => Space::P2,
            SurfaceKind::P1xP1 => Space::P1xP1,
        }
    }
}

impl Space {
    pub fn nvars(self) -> usize {
        match self {
            Space::P1 => 2,
            Space::P2 => 3,
            Space::P1xP1 => 4,
        }
    }

    /// Homogeneous coordinates grouped by projective factor.
    pub fn groups(self) -> Vec<Vec<usize>> {
        match self {
            Space::P1 => vec![vec![0, 1]],
            Space::P2 => vec![vec![0, 1, 2]],
            Space::P1xP1 => vec![vec![0, 1], vec![2, 3]],
        }
    }

    pub fn twist_len(self) -> usize {
        self.groups().len()
    }

    pub fn dim(self) -> usize {
        match self {
            Space::P1 => 1,
            Space::P2 | Space::P1xP1 => 2,
        }
    }

    /// Affine charts of the toric cover, each given by the bitmask of the
    /// coordinates it inverts: `x_i != 0` on `P1`/`P2`, `x_a y_b != 0` on `P1 x P1`.
    pub fn charts(self) -> Vec<u32> {
        match self {
            Space::P1 => vec![1, 2],
            Space::P2 => vec![1, 2, 4],
            Space::P1xP1 => vec![1 | 4, 1 | 8, 2 | 4, 2 | 8],
        }
    }

    pub fn surface(self) -> Option<SurfaceKind> {
        match self {
            Space::P1 => None,
            Space::P2 => Some(SurfaceKind::P2),
            Space::P1xP1 => Some(SurfaceKind::P1xP1),
        }
    }
}

fn binom2(n: i64) -> usize {
    // C(n + 2, 2) for n >= 0
    if n < 0 {
        0
    } else {
        ((n + 1) * (n + 2) / 2) as usize
    }
}

fn p1_cohomology(m: i64) -> (usize, usize) {
    if m >= 0 {
        ((m + 1) as usize, 0)
    } else {
        (0, (-m - 1) as usize)
    }
}

/// Closed-form `(h0, h1, h2)` of `O(twist)`.
pub fn line_bundle_cohomology(space: Space, twist: &[i64]) -> [usize; 3] {
    match space {
        Space::P1 => {
            let (h0, h1) = p1_cohomology(twist[0]);
            [h0, h1, 0]
        }
        Space::P2 => {
            let d = twist[0];
            [binom2(d), 0, binom2(-3 - d)]
        }
        Space::P1xP1 => {
            let (a0, a1) = p1_cohomology(twist[0]);
            let (b0, b1) = p1_cohomology(twist[1]);
            [a0 * b0, a0 * b1 + a1 * b0, a1 * b1]
        }
    }
}

pub fn line_bundle_chi(space: Space, twist: &[i64]) -> i64 {
    let h = line_bundle_cohomology(space, twist);
    h[0] as i64 - h[1] as i64 + h[2] as i64
}

/// Bounded complex of sums of line bundles with polynomial maps.
///
/// `terms[p]` sits in cohomological degree `start + p`; `maps[p]` goes from
/// `terms[p]` to `terms[p + 1]` and has entry `(r, c)` homogeneous of
/// multidegree `terms[p + 1][r] - terms[p][c]`.
#[derive(Clone, Debug, PartialEq)]
pub struct LineBundleComplex {
    space: Space,
    start: i64,
    terms: Vec<Vec<Vec<i64>>>,
    maps: Vec<PolynomialMatrix>,
}

impl LineBundleComplex {
    pub fn new(
        space: Space,
        start: i64,
        terms: Vec<Vec<Vec<i64>>>,
        maps: Vec<PolynomialMatrix>,
    ) -> Result<Self, CohomologyError> {
        let c = LineBundleComplex {
            space,
            start,
            terms,
            maps,
        };
        c.validate()?;
        Ok(c)
    }

    /// `O(twist)` in degree `position`.
    pub fn single(space: Space, twist: Vec<i64>, position: i64) -> Self {
        LineBundleComplex::new(space, position, vec![vec![twist]], Vec::new()).expect("single term")
    }

    /// `O(t_1) + ... + O(t_n)` in degree `position`.
    pub fn sum(
        space: Space,
        twists: Vec<Vec<i64>>,
        position: i64,
    ) -> Result<Self, CohomologyError> {
        LineBundleComplex::new(space, position, vec![twists], Vec::new())
    }

    pub fn empty(space: Space) -> Self {
        LineBundleComplex {
            space,
            start: 0,
            terms: Vec::new(),
            maps: Vec::new(),
        }
    }

    fn validate(&self) -> Result<(), CohomologyError> {
        let n = self.space.nvars();
        let len = self.space.twist_len();
        if self.terms.is_empty() {
            if !self.maps.is_empty() {
                return Err(CohomologyError::Malformed("maps without terms".into()));
            }
            return Ok(());
        }
        if self.maps.len() + 1 != self.terms.len() {
            return Err(CohomologyError::Malformed(format!(
                "{} terms need {} maps, found {}",
                self.terms.len(),
                self.terms.len() - 1,
                self.maps.len()
            )));
        }
        for t in self.terms.iter().flatten() {
            if t.len() != len {
                return Err(CohomologyError::Malformed(format!(
                    "twist {t:?} has length {}, {} expects {len}",
                    t.len(),
                    self.space
                )));
            }
        }
        let groups = self.space.groups();
        for (p, m) in self.maps.iter().enumerate() {
            let (src, dst) = (&self.terms[p], &self.terms[p + 1]);
            if m.rows() != dst.len() || m.cols() != src.len() {
                return Err(CohomologyError::Malformed(format!(
                    "map {} has shape {}x{}, expected {}x{}",
                    self.start + p as i64,
                    m.rows(),
                    m.cols(),
                    dst.len(),
                    src.len()
                )));
            }
            if m.nvars() != n && !(m.rows() == 0 || m.cols() == 0) {
                return Err(CohomologyError::Malformed(format!(
                    "map {} uses {} variables, {} has {n}",
                    self.start + p as i64,
                    m.nvars(),
                    self.space
                )));
            }
            for (r, dst_twist) in dst.iter().enumerate() {
                for (c, src_twist) in src.iter().enumerate() {
                    let e = m.get(r, c);
                    if e.is_zero() {
                        continue;
                    }
                    let expected: Vec<i64> = dst_twist
                        .iter()
                        .zip(src_twist)
                        .map(|(a, b)| a - b)
                        .collect();
                    if e.multidegree(&groups).as_ref() != Some(&expected) {
                        return Err(CohomologyError::Degree {
                            position: self.start + p as i64,
                            row: r,
                            col: c,
                            expected,
                        });
                    }
                }
            }
        }
        for p in 0..self.maps.len().saturating_sub(1) {
            if !self.maps[p + 1].mul(&self.maps[p])?.is_zero() {
                return Err(CohomologyError::NotAComplex {
                    position: self.start + p as i64,
                });
            }
        }
        Ok(())
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn start(&self) -> i64 {
        self.start
    }

    /// Last occupied degree (`start - 1` for the empty complex).
    pub fn end(&self) -> i64 {
        self.start + self.terms.len() as i64 - 1
    }

    pub fn terms(&self) -> &[Vec<Vec<i64>>] {
        &self.terms
    }

    pub fn maps(&self) -> &[PolynomialMatrix] {
        &self.maps
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in degree `position` (empty outside the range).
    pub fn term(&self, position: i64) -> &[Vec<i64>] {
        let p = position - self.start;
        if p < 0 || p as usize >= self.terms.len() {
            &[]
        } else {
            &self.terms[p as usize]
        }
    }

    /// Map out of degree `position`, if both ends are in range.
    pub fn map(&self, position: i64) -> Option<&PolynomialMatrix> {
        let p = position - self.start;
        if p < 0 {
            None
        } else {
            self.maps.get(p as usize)
        }
    }

    /// Largest absolute twist coordinate.
    pub fn max_twist(&self) -> i64 {
        self.terms
            .iter()
            .flatten()
            .flatten()
            .map(|x| x.abs())
            .max()
            .unwrap_or(0)
    }

    /// Sum over maps of the largest total degree of an entry.
    pub fn total_map_degree(&self) -> i64 {
        let groups = self.space.groups();
        self.maps
            .iter()
            .map(|m| {
                let mut best = 0;
                for r in 0..m.rows() {
                    for c in 0..m.cols() {
                        if let Some(d) = m.get(r, c).multidegree(&groups) {
                            best = best.max(d.iter().sum());
                        }
                    }
                }
                best
            })
            .sum()
    }

    /// `E(D)`: every twist shifted by `d`.
    pub fn twisted(&self, d: &[i64]) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|ts| {
                ts.iter()
                    .map(|t| t.iter().zip(d).map(|(a, b)| a + b).collect())
                    .collect()
            })
            .collect();
        LineBundleComplex {
            space: self.space,
            start: self.start,
            terms,
            maps: self.maps.clone(),
        }
    }

    pub fn twisted_by(&self, d: &DivisorClass) -> Result<Self, CohomologyError> {
        if Space::from(d.surface) != self.space {
            return Err(CohomologyError::SpaceMismatch {
                expected: self.space,
                found: Space::from(d.surface),
            });
        }
        Ok(self.twisted(&d.coords))
    }

    /// Same complex with degrees moved by `by` (no sign change on the maps).
    pub fn shifted(&self, by: i64) -> Self {
        LineBundleComplex {
            start: self.start + by,
            ..self.clone()
        }
    }

    /// Tensor product with the Koszul sign `d(x (x) y) = dx (x) y + (-1)^|x| x (x) dy`.
    /// In each degree, summands are ordered by the degree of the left factor,
    /// then left index, then right index.
    pub fn tensor(&self, other: &Self) -> Result<Self, CohomologyError> {
        if self.space != other.space {
            return Err(CohomologyError::SpaceMismatch {
                expected: self.space,
                found: other.space,
            });
        }
        if self.is_empty() || other.is_empty() {
            return Ok(Self::empty(self.space));
        }
        let n = self.space.nvars();
        let start = self.start + other.start;
        let end = self.end() + other.end();
        // layout[deg] = list of (i, a, b) with i the left degree
        let mut layout: Vec<Vec<(i64, usize, usize)>> = Vec::new();
        let mut terms = Vec::new();
        for deg in start..=end {
            let mut lay = Vec::new();
            let mut ts = Vec::new();
            for i in self.start..=self.end() {
                let j = deg - i;
                let (left, right) = (self.term(i), other.term(j));
                for (a, ta) in left.iter().enumerate() {
                    for (b, tb) in right.iter().enumerate() {
                        lay.push((i, a, b));
                        ts.push(ta.iter().zip(tb).map(|(x, y)| x + y).collect());
                    }
                }
            }
            layout.push(lay);
            terms.push(ts);
        }
        let mut maps = Vec::new();
        for k in 0..layout.len() - 1 {
            let (src, dst) = (&layout[k], &layout[k + 1]);
            let index: BTreeMap<(i64, usize, usize), usize> =
                dst.iter().enumerate().map(|(r, &key)| (key, r)).collect();
            let mut m = PolynomialMatrix::zeros(dst.len(), src.len(), n);
            for (c, &(i, a, b)) in src.iter().enumerate() {
                let j = start + k as i64 - i;
                if let Some(da) = self.map(i) {
                    for a2 in 0..da.rows() {
                        let e = da.get(a2, a);
                        if !e.is_zero() {
                            let r = index[&(i + 1, a2, b)];
                            m.set(r, c, m.get(r, c).add(e));
                        }
                    }
                }
                if let Some(db) = other.map(j) {
                    let sign = if i.rem_euclid(2) == 0 {
                        int(1)
                    } else {
                        int(-1)
                    };
                    for b2 in 0..db.rows() {
                        let e = db.get(b2, b);
                        if !e.is_zero() {
                            let r = index[&(i, a, b2)];
                            m.set(r, c, m.get(r, c).add(&e.scale(&sign)));
                        }
                    }
                }
            }
            maps.push(m);
        }
        LineBundleComplex::new(self.space, start, terms, maps)
    }

    /// Degreewise direct sum; maps are block diagonal.
    pub fn direct_sum(&self, other: &Self) -> Result<Self, CohomologyError> {
        if self.space != other.space {
            return Err(CohomologyError::SpaceMismatch {
                expected: self.space,
                found: other.space,
            });
        }
        if self.is_empty() {
            return Ok(other.clone());
        }
        if other.is_empty() {
            return Ok(self.clone());
        }
        let n = self.space.nvars();
        let start = self.start.min(other.start);
        let end = self.end().max(other.end());
        let terms: Vec<Vec<Vec<i64>>> = (start..=end)
            .map(|d| self.term(d).iter().chain(other.term(d)).cloned().collect())
            .collect();
        let mut maps = Vec::new();
        for d in start..end {
            let (s1, s2) = (self.term(d).len(), other.term(d).len());
            let (t1, t2) = (self.term(d + 1).len(), other.term(d + 1).len());
            let mut m = PolynomialMatrix::zeros(t1 + t2, s1 + s2, n);
            if let Some(a) = self.map(d) {
                for r in 0..t1 {
                    for c in 0..s1 {
                        m.set(r, c, a.get(r, c).clone());
                    }
                }
            }
            if let Some(b) = other.map(d) {
                for r in 0..t2 {
                    for c in 0..s2 {
                        m.set(t1 + r, s1 + c, b.get(r, c).clone());
                    }
                }
            }
            maps.push(m);
        }
        LineBundleComplex::new(self.space, start, terms, maps)
    }

    /// Fiber of every map at a point of the space.
    pub fn fiber_maps(&self, point: &[Scalar]) -> Vec<RationalMatrix> {
        self.maps.iter().map(|m| m.eval(point)).collect()
    }

    /// Dimension of the homology of the fiber complex at `point`, per degree.
    pub fn fiber_homology(&self, point: &[Scalar]) -> BTreeMap<i64, usize> {
        let fibers = self.fiber_maps(point);
        let ranks: Vec<usize> = fibers.iter().map(ratla::rank).collect();
        (0..self.terms.len())
            .map(|p| {
                let dim = self.terms[p].len();
                let out = if p < ranks.len() { ranks[p] } else { 0 };
                let inc = if p > 0 { ranks[p - 1] } else { 0 };
                (self.start + p as i64, dim - out - inc)
            })
            .collect()
    }
}

/// JSON form `{space, positions: [p0, p1], terms: [[twist, ...], ...], maps: [...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComplexJson {
    pub space: Space,
    pub positions: [i64; 2],
    pub terms: Vec<Vec<TwistJson>>,
    #[serde(default)]
    pub maps: Vec<PolynomialMatrix>,
}

/// A twist written either as an integer (one factor) or as an array.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TwistJson {
    Scalar(i64),
    Coords(Vec<i64>),
}

impl TwistJson {
    fn coords(&self) -> Vec<i64> {
        match self {
            TwistJson::Scalar(d) => vec![*d],
            TwistJson::Coords(v) => v.clone(),
        }
    }
}

impl LineBundleComplex {
    pub fn to_json(&self) -> ComplexJson {
        ComplexJson {
            space: self.space,
            positions: [self.start, self.end()],
            terms: self
                .terms
                .iter()
                .map(|ts| ts.iter().map(|t| TwistJson::Coords(t.clone())).collect())
                .collect(),
            maps: self.maps.clone(),
        }
    }

    pub fn from_json(js: &ComplexJson) -> Result<Self, CohomologyError> {
        let [p0, p1] = js.positions;
        if p1 - p0 + 1 != js.terms.len() as i64 {
            return Err(CohomologyError::Malformed(format!(
                "positions [{p0}, {p1}] do not match {} terms",
                js.terms.len()
            )));
        }
        let terms = js
            .terms
            .iter()
            .map(|ts| ts.iter().map(TwistJson::coords).collect())
            .collect();
        LineBundleComplex::new(js.space, p0, terms, js.maps.clone())
    }
}

impl Serialize for LineBundleComplex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for LineBundleComplex {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let js = ComplexJson::deserialize(d)?;
        LineBundleComplex::from_json(&js).map_err(serde::de::Error::custom)
    }
}

/// `sum_p (-1)^p sum_twists chi(O(twist))`.
pub fn euler_characteristic(c: &LineBundleComplex) -> i64 {
    (c.start..=c.end())
        .map(|p| {
            let s: i64 = c.term(p).iter().map(|t| line_bundle_chi(c.space, t)).sum();
            if p.rem_euclid(2) == 0 {
                s
            } else {
                -s
            }
        })
        .sum()
}

/// Lower bound on retained Laurent exponents.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialWindow {
    pub bound: usize,
}

impl MonomialWindow {
    /// `2 + max |twist| + total map degree`.
    pub fn required(c: &LineBundleComplex) -> Self {
        MonomialWindow {
            bound: (2 + c.max_twist() + c.total_map_degree()) as usize,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyReport {
    /// `h^n` for every degree in which the Cech double complex is nonzero.
    pub h: BTreeMap<i64, usize>,
    pub euler: i64,
    pub window: usize,
    pub window_stable: bool,
}

impl CohomologyReport {
    pub fn get(&self, n: i64) -> usize {
        self.h.get(&n).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.h.values().all(|&x| x == 0)
    }
}

/// Hypercohomology through the truncated Cech double complex, recomputed at
/// `window + 2` to certify stability and cross-checked against the closed-form
/// Euler characteristic.
pub fn hypercohomology(
    c: &LineBundleComplex,
    window: Option<MonomialWindow>,
) -> Result<CohomologyReport, CohomologyError> {
    let required = MonomialWindow::required(c);
    let window = window.unwrap_or(required);
    if window.bound < required.bound {
        return Err(CohomologyError::WindowTooSmall {
            given: window.bound,
            required: required.bound,
        });
    }
    let h = cech::hypercohomology_dims(c, window.bound as i64)?;
    let wider = cech::hypercohomology_dims(c, window.bound as i64 + 2)?;
    let euler: i64 = h
        .iter()
        .map(|(&n, &d)| {
            if n.rem_euclid(2) == 0 {
                d as i64
            } else {
                -(d as i64)
            }
        })
        .sum();
    let expected = euler_characteristic(c);
    if euler != expected {
        return Err(CohomologyError::EulerMismatch {
            computed: euler,
            expected,
        });
    }
    Ok(CohomologyReport {
        window_stable: h == wider,
        h,
        euler,
        window: window.bound,
    })
}

/// Pulls the complex back along the curve's parametrization; `O(D)` becomes
/// `O(D . C0)` on `P1`.
pub fn restrict_to_curve(
    c: &LineBundleComplex,
    curve: &CurveModel,
) -> Result<LineBundleComplex, CohomologyError> {
    let space = Space::from(curve.surface());
    if space != c.space {
        return Err(CohomologyError::SpaceMismatch {
            expected: space,
            found: c.space,
        });
    }
    if !curve.is_consistent() {
        return Err(CohomologyError::Malformed(format!(
            "parametrization of {} does not represent its class",
            curve.name
        )));
    }
    let degrees = curve.group_degrees();
    let terms = c
        .terms
        .iter()
        .map(|ts| {
            ts.iter()
                .map(|t| vec![t.iter().zip(&degrees).map(|(a, g)| a * g).sum()])
                .collect()
        })
        .collect();
    let maps = c
        .maps
        .iter()
        .map(|m| {
            let mut out = m.substitute(&curve.parametrization);
            if m.rows() == 0 || m.cols() == 0 {
                out = PolynomialMatrix::zeros(m.rows(), m.cols(), 2);
            }
            out
        })
        .collect();
    LineBundleComplex::new(Space::P1, c.start, terms, maps)
}

/// Sample points of `P1`: `[1:0], [0:1], [1:1], [1:-1], [1:2], [2:1], ...`.
pub fn p1_sample_points(count: usize) -> Vec<Vec<Scalar>> {
    let mut pts = vec![vec![int(1), int(0)], vec![int(0), int(1)]];
    let mut k = 1;
    while pts.len() < count {
        pts.push(vec![int(1), int(k)]);
        pts.push(vec![int(1), int(-k)]);
        pts.push(vec![int(k + 1), int(1)]);
        k += 1;
    }
    pts.truncate(count.max(2));
    pts
}

/// Degree in which a complex on `P1` has its (locally free) homology, and its
/// rank, certified by fiber ranks at sample points.
pub fn locally_free_homology(c: &LineBundleComplex) -> Result<(i64, usize), CohomologyError> {
    if c.space != Space::P1 {
        return Err(CohomologyError::SpaceMismatch {
            expected: Space::P1,
            found: c.space,
        });
    }
    if c.is_empty() {
        return Ok((0, 0));
    }
    let max_deg = c.total_map_degree().max(0) as usize;
    let mut seen: Option<BTreeMap<i64, usize>> = None;
    for pt in p1_sample_points(max_deg + 5) {
        let fh = c.fiber_homology(&pt);
        match &seen {
            None => seen = Some(fh),
            Some(prev) if *prev != fh => {
                return Err(CohomologyError::NotLocallyFree(format!(
                    "fiber homology jumps from {prev:?} to {fh:?} at {pt:?}"
                )))
            }
            _ => {}
        }
    }
    let fh = seen.expect("at least one sample point");
    let nonzero: Vec<(i64, usize)> = fh.into_iter().filter(|&(_, d)| d > 0).collect();
    match nonzero.as_slice() {
        [] => Ok((c.start, 0)),
        [(p, d)] => Ok((*p, *d)),
        _ => Err(CohomologyError::NotLocallyFree(format!(
            "fiber homology in several degrees: {nonzero:?}"
        ))),
    }
}

/// `t -> h0(E(t))` for the bundle presented by a complex on `P1`.
pub fn p1_sections(c: &LineBundleComplex, position: i64, t: i64) -> Result<usize, CohomologyError> {
    Ok(hypercohomology(&c.twisted(&[t]), None)?.get(position))
}

const SPLITTING_SEARCH_LIMIT: i64 = 256;

/// Splitting type `a_1 >= ... >= a_r` of the bundle presented by a complex on
/// `P1`, read off from the jumps of `t -> h0(E(t))`.
pub fn splitting_type(c: &LineBundleComplex) -> Result<Vec<i64>, CohomologyError> {
    let (p0, r) = locally_free_homology(c)?;
    if r == 0 {
        return Ok(Vec::new());
    }
    let chi = if p0.rem_euclid(2) == 0 {
        euler_characteristic(c)
    } else {
        -euler_characteristic(c)
    };
    let deg = chi - r as i64;
    let h0 = |t: i64| p1_sections(c, p0, t);
    // all summands >= -t_high once h1(E(t_high - 1)) = 0
    let mut t_low = 0;
    while h0(t_low)? > 0 {
        t_low -= 1;
        if t_low < -SPLITTING_SEARCH_LIMIT {
            return Err(CohomologyError::Unsupported(
                "splitting search out of range".into(),
            ));
        }
    }
    let mut t_high = t_low + 1;
    loop {
        let full = |t: i64| deg + r as i64 * (t + 1);
        if h0(t_high - 1)? as i64 == full(t_high - 1)
            && h0(t_high)? as i64 == full(t_high)
            && h0(t_high - 1)? > 0
        {
            break;
        }
        t_high += 1;
        if t_high > SPLITTING_SEARCH_LIMIT {
            return Err(CohomologyError::Unsupported(
                "splitting search out of range".into(),
            ));
        }
    }
    // delta(t) = #{a_i >= -t}
    let mut out = Vec::new();
    let mut prev_delta = 0;
    let mut prev_h = h0(t_low)?;
    for t in t_low + 1..=t_high {
        let h = h0(t)?;
        let delta = h - prev_h;
        for _ in prev_delta..delta {
            out.push(-t);
        }
        prev_delta = delta;
        prev_h = h;
    }
    if out.len() != r || out.iter().sum::<i64>() != deg {
        return Err(CohomologyError::NotLocallyFree(format!(
            "jump pattern {out:?} inconsistent with rank {r} and degree {deg}"
        )));
    }
    out.sort_by(|a, b| b.cmp(a));
    Ok(out)
}

/// Polynomial of a linear form `sum_i coeffs[i] x_i`, helper for presets.
pub fn linear_form(coeffs: &[i64]) -> Polynomial {
    let n = coeffs.len();
    let mut p = Polynomial::zero(n);
    for (i, &c) in coeffs.iter().enumerate() {
        p.add_term(unit_exp(n, i), int(c));
    }
    p
}

/// Koszul complex `O(-a-b) -> O(-a) + O(-b) -> O` of two forms `f, g` of
/// multidegrees `a, b`, ending in degree 0.
pub fn koszul(
    space: Space,
    f: &Polynomial,
    g: &Polynomial,
) -> Result<LineBundleComplex, CohomologyError> {
    let groups = space.groups();
    let a = f
        .multidegree(&groups)
        .ok_or_else(|| CohomologyError::Malformed("f is not homogeneous".into()))?;
    let b = g
        .multidegree(&groups)
        .ok_or_else(|| CohomologyError::Malformed("g is not homogeneous".into()))?;
    let n = space.nvars();
    let neg = |v: &[i64]| v.iter().map(|x| -x).collect::<Vec<_>>();
    let ab: Vec<i64> = a.iter().zip(&b).map(|(x, y)| -x - y).collect();
    let mut d0 = PolynomialMatrix::zeros(2, 1, n);
    d0.set(0, 0, g.neg());
    d0.set(1, 0, f.clone());
    let mut d1 = PolynomialMatrix::zeros(1, 2, n);
    d1.set(0, 0, f.clone());
    d1.set(0, 1, g.clone());
    LineBundleComplex::new(
        space,
        -2,
        vec![
            vec![ab],
            vec![neg(&a), neg(&b)],
            vec![vec![0; groups.len()]],
        ],
        vec![d0, d1],
    )
}

/// Multidegree of a monomial exponent vector on `space`.
pub fn monomial_degree(space: Space, exps: &[u32]) -> Vec<i64> {
    group_degree(exps, &space.groups())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frac;

    fn ideal_sheaf_monad() -> LineBundleComplex {
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
        LineBundleComplex::new(
            Space::P2,
            -1,
            vec![vec![vec![-1]], vec![vec![0]; 3], vec![vec![1]]],
            vec![alpha, beta],
        )
        .unwrap()
    }

    #[test]
    fn closed_forms() {
        assert_eq!(line_bundle_cohomology(Space::P2, &[1]), [3, 0, 0]);
        assert_eq!(line_bundle_cohomology(Space::P2, &[-3]), [0, 0, 1]);
        assert_eq!(line_bundle_cohomology(Space::P2, &[-5]), [0, 0, 6]);
        assert_eq!(line_bundle_cohomology(Space::P1xP1, &[-1, -1]), [0, 0, 0]);
        assert_eq!(line_bundle_cohomology(Space::P1xP1, &[1, -2]), [0, 2, 0]);
        assert_eq!(line_bundle_cohomology(Space::P1, &[-3]), [0, 2, 0]);
    }

    #[test]
    fn single_line_bundles_match_closed_forms() {
        for space in [Space::P1, Space::P2, Space::P1xP1] {
            let len = space.twist_len();
            let range: Vec<Vec<i64>> = if len == 1 {
                (-3..=3).map(|d| vec![d]).collect()
            } else {
                (-3..=3)
                    .flat_map(|a| (-3..=3).map(move |b| vec![a, b]))
                    .collect()
            };
            for t in range {
                let rep =
                    hypercohomology(&LineBundleComplex::single(space, t.clone(), 0), None).unwrap();
                let h = line_bundle_cohomology(space, &t);
                for (n, &hn) in h.iter().enumerate() {
                    assert_eq!(rep.get(n as i64), hn, "{space} {t:?} h^{n}");
                }
                assert!(rep.window_stable);
            }
        }
    }

    #[test]
    fn serre_duality_on_p2() {
        for d in -6..=3 {
            let h2 = hypercohomology(&LineBundleComplex::single(Space::P2, vec![d], 0), None)
                .unwrap()
                .get(2);
            let h0 = hypercohomology(&LineBundleComplex::single(Space::P2, vec![-3 - d], 0), None)
                .unwrap()
                .get(0);
            assert_eq!(h2, h0);
        }
    }

    #[test]
    fn ideal_sheaf_cohomology() {
        let m = ideal_sheaf_monad();
        assert_eq!(euler_characteristic(&m), 0);
        let rep = hypercohomology(&m, None).unwrap();
        assert!(rep.is_zero());
        assert_eq!(rep.euler, 0);
        let rep = hypercohomology(&m.twisted(&[1]), None).unwrap();
        assert_eq!(rep.get(0), 2);
        assert_eq!(rep.get(1) + rep.get(2), 0);
        let m2 = m.twisted(&[-2]);
        assert_eq!(euler_characteristic(&m2), -1);
        let rep = hypercohomology(&m2, None).unwrap();
        assert_eq!((rep.get(0), rep.get(1), rep.get(2)), (0, 1, 0));
    }

    #[test]
    fn empty_complex() {
        let e = LineBundleComplex::empty(Space::P2);
        assert_eq!(euler_characteristic(&e), 0);
        assert!(hypercohomology(&e, None).unwrap().is_zero());
    }

    #[test]
    fn window_must_satisfy_bound() {
        let m = ideal_sheaf_monad();
        let need = MonomialWindow::required(&m).bound;
        assert_eq!(need, 2 + 1 + 2);
        assert!(matches!(
            hypercohomology(&m, Some(MonomialWindow { bound: need - 1 })),
            Err(CohomologyError::WindowTooSmall { .. })
        ));
        assert!(hypercohomology(&m, Some(MonomialWindow { bound: need + 3 })).is_ok());
    }

    #[test]
    fn non_complexes_are_rejected() {
        let a = PolynomialMatrix::from_fn(1, 1, 3, |_, _| linear_form(&[1, 0, 0]));
        let r = LineBundleComplex::new(
            Space::P2,
            0,
            vec![vec![vec![0]], vec![vec![1]], vec![vec![2]]],
            vec![a.clone(), a.clone()],
        );
        assert!(matches!(r, Err(CohomologyError::NotAComplex { .. })));
        let r = LineBundleComplex::new(Space::P2, 0, vec![vec![vec![0]], vec![vec![2]]], vec![a]);
        assert!(matches!(r, Err(CohomologyError::Degree { .. })));
    }

    #[test]
    fn restriction_examples() {
        let linf = CurveModel::line_at_infinity();
        let r =
            restrict_to_curve(&LineBundleComplex::single(Space::P2, vec![1], 0), &linf).unwrap();
        assert_eq!(r.terms(), &[vec![vec![1]]]);
        let diag = CurveModel::diagonal();
        let r = restrict_to_curve(
            &LineBundleComplex::single(Space::P1xP1, vec![1, 1], 0),
            &diag,
        )
        .unwrap();
        assert_eq!(r.terms(), &[vec![vec![2]]]);
        let r = restrict_to_curve(&ideal_sheaf_monad(), &linf).unwrap();
        let s = |c: i64| linear_form(&[c, 0]);
        let t = |c: i64| linear_form(&[0, c]);
        assert_eq!(r.maps()[0].get(0, 0), &s(-1));
        assert_eq!(r.maps()[0].get(1, 0), &t(-1));
        assert!(r.maps()[0].get(2, 0).is_zero());
        assert_eq!(r.maps()[1].get(0, 0), &t(1));
        assert_eq!(r.maps()[1].get(0, 1), &s(-1));
        assert!(r.maps()[1].get(0, 2).is_zero());
        assert!(restrict_to_curve(&ideal_sheaf_monad(), &diag).is_err());
    }

    #[test]
    fn splitting_types() {
        let r = restrict_to_curve(&ideal_sheaf_monad(), &CurveModel::line_at_infinity()).unwrap();
        assert_eq!(splitting_type(&r).unwrap(), vec![0]);
        assert_eq!(
            splitting_type(&LineBundleComplex::single(Space::P1, vec![2], 0)).unwrap(),
            vec![2]
        );
        let sum = LineBundleComplex::sum(Space::P1, vec![vec![1], vec![-1]], 0).unwrap();
        assert_eq!(splitting_type(&sum).unwrap(), vec![1, -1]);
        // O(-1) -> O + O via (s, t): cokernel O(1)
        let m = PolynomialMatrix::from_fn(2, 1, 2, |r, _| {
            linear_form(if r == 0 { &[1, 0] } else { &[0, 1] })
        });
        let c = LineBundleComplex::new(
            Space::P1,
            -1,
            vec![vec![vec![-1]], vec![vec![0], vec![0]]],
            vec![m],
        )
        .unwrap();
        assert_eq!(splitting_type(&c).unwrap(), vec![1]);
        // O(-1) -> O + O via (s, 0) is not locally free
        let m = PolynomialMatrix::from_fn(2, 1, 2, |r, _| {
            if r == 0 {
                linear_form(&[1, 0])
            } else {
                Polynomial::zero(2)
            }
        });
        let c = LineBundleComplex::new(
            Space::P1,
            -1,
            vec![vec![vec![-1]], vec![vec![0], vec![0]]],
            vec![m],
        )
        .unwrap();
        assert!(matches!(
            splitting_type(&c),
            Err(CohomologyError::NotLocallyFree(_))
        ));
    }

    #[test]
    fn tensor_with_euler_sequence() {
        // Omega = [O(-1)^3 -> O]; chi(Omega) = -1 and H^1(Omega) = 1
        let m = PolynomialMatrix::from_fn(1, 3, 3, |_, c| Polynomial::var(3, c));
        let omega = LineBundleComplex::new(
            Space::P2,
            0,
            vec![vec![vec![-1]; 3], vec![vec![0]]],
            vec![m],
        )
        .unwrap();
        let rep = hypercohomology(&omega, None).unwrap();
        assert_eq!((rep.get(0), rep.get(1), rep.get(2)), (0, 1, 0));
        let t = ideal_sheaf_monad().tensor(&omega).unwrap();
        assert_eq!((t.start(), t.end()), (-1, 2));
        let rep = hypercohomology(&t, None).unwrap();
        assert_eq!(rep.get(0) + rep.get(2), 0);
        assert_eq!(rep.euler, euler_characteristic(&t));
    }

    #[test]
    fn koszul_resolves_a_point() {
        // x0 and y1 on P1 x P1 cut out the point ([0:1], [1:0])
        let f = Polynomial::var(4, 0);
        let g = Polynomial::var(4, 3);
        let k = koszul(Space::P1xP1, &f, &g).unwrap();
        assert_eq!((k.start(), k.end()), (-2, 0));
        for tw in [[0, 0], [1, 1], [-2, 3]] {
            let rep = hypercohomology(&k.twisted(&tw), None).unwrap();
            assert_eq!(rep.get(0), 1);
            assert_eq!(rep.h.values().sum::<usize>(), 1);
        }
    }

    #[test]
    fn complex_json_round_trip() {
        let m = ideal_sheaf_monad();
        let js = serde_json::to_string(&m).unwrap();
        let back: LineBundleComplex = serde_json::from_str(&js).unwrap();
        assert_eq!(back, m);
        let scalar_twists = r#"{"space":"P2","positions":[0,0],"terms":[[1,-2]],"maps":[]}"#;
        let c: LineBundleComplex = serde_json::from_str(scalar_twists).unwrap();
        assert_eq!(c.terms(), &[vec![vec![1], vec![-2]]]);
        assert!(serde_json::from_str::<LineBundleComplex>(
            r#"{"space":"P2","positions":[0,1],"terms":[[1]]}"#
        )
        .is_err());
    }

    #[test]
    fn fiber_homology_of_ideal_sheaf() {
        let m = ideal_sheaf_monad();
        assert_eq!(m.fiber_homology(&[int(0), int(0), int(1)])[&0], 2);
        assert_eq!(m.fiber_homology(&[int(1), int(1), int(1)])[&0], 1);
        assert_eq!(m.fiber_homology(&[frac(1, 2), int(0), int(0)])[&0], 1);
    }
}
