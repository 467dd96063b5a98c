//! The twelve acceptance criteria. Each returns a pass/fail verdict with a
//! detail string; arithmetic is exact so every comparison is an equality.
//! Time budgets are reported next to the measured time.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::adhm;
use crate::cohomology::{
    beilinson_p2, euler_characteristic, hypercohomology, line_bundle_cohomology, restrict_to_curve,
    LineBundleComplex, MonomialWindow, Space,
};
use crate::heart::{self, Framing};
use crate::quiver::{self, Representation};
use crate::sample::{self, Sampler};
use crate::surface::{
    self, CurveModel, DivisorClass, ExceptionalCollection, NumericalClass, SurfaceKind,
};
use crate::{int, RationalMatrix, Scalar};

type Verdict = Result<(bool, String), String>;

pub struct Criterion {
    pub id: u32,
    pub name: &'static str,
    /// The statement the criterion witnesses.
    pub anchor: &'static str,
    pub budget: Duration,
    run: fn(u64) -> Verdict,
}

pub const CRITERIA: [Criterion; 12] = [
    Criterion {
        id: 1,
        name: "dimension-vector dictionary",
        anchor: "d^v_i = -chi(E_i, v) equals the dimension-vector matrix applied to (rank, c1, chi)",
        budget: Duration::from_secs(1),
        run: dimension_vectors,
    },
    Criterion {
        id: 2,
        name: "Euler-form compatibility",
        anchor: "the Euler form of the bound quiver matches chi(v, w) under the derived equivalence",
        budget: Duration::from_secs(1),
        run: euler_forms,
    },
    Criterion {
        id: 3,
        name: "ADHM equation iff complex",
        anchor: "beta alpha = x2^2 ([B1, B2] + ij)",
        budget: Duration::from_secs(5),
        run: adhm_iff_monad,
    },
    Criterion {
        id: 4,
        name: "torus fixed points",
        anchor: "fixed points of the Hilbert scheme are indexed by partitions",
        budget: Duration::from_secs(5),
        run: fixed_points,
    },
    Criterion {
        id: 5,
        name: "framability",
        anchor: "E|C0 is trivial iff h0(P1, E(-1)) = 0 and degree 0; global sections are identified with framings",
        budget: Duration::from_secs(30),
        run: framability,
    },
    Criterion {
        id: 6,
        name: "vanishing battery",
        anchor: "H^l(X; E(-D_i)) = 0 for l = 0, 2 for sheaves trivial on C0",
        budget: Duration::from_secs(60),
        run: battery,
    },
    Criterion {
        id: 7,
        name: "hypercohomology engine",
        anchor: "truncated Cech hypercohomology agrees with chi, closed forms and the spectral sequence",
        budget: Duration::from_secs(120),
        run: engine,
    },
    Criterion {
        id: 8,
        name: "Hilbert-scheme fiber profile",
        anchor: "rank-one framed sheaves with c2 = k reduce to ideals of k points in X minus C0",
        budget: Duration::from_secs(10),
        run: hilbert_profile,
    },
    Criterion {
        id: 9,
        name: "tangent dimension",
        anchor: "the moduli stack is smooth when C0 . K_X < 0",
        budget: Duration::from_secs(10),
        run: tangent,
    },
    Criterion {
        id: 10,
        name: "round trip and relations",
        anchor: "representations satisfying the relations are the monads of the heart",
        budget: Duration::from_secs(5),
        run: round_trip,
    },
    Criterion {
        id: 11,
        name: "framed rigidity",
        anchor: "framed sheaves have trivial automorphism group; Hom(E, F) -> Hom(E|C0, F|C0) is injective",
        budget: Duration::from_secs(60),
        run: rigidity,
    },
    Criterion {
        id: 12,
        name: "hypothesis bounds",
        anchor: "0 < D_i . C0 < -K_X . C0 for every collection member",
        budget: Duration::from_millis(100),
        run: hypotheses,
    },
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionResult {
    pub id: u32,
    pub name: String,
    pub anchor: String,
    pub pass: bool,
    pub detail: String,
    pub budget_ms: u64,
    /// Wall-clock time; excluded from JSON so reports are reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CriterionResult {
    pub fn within_budget(&self) -> bool {
        self.elapsed.as_millis() <= u128::from(self.budget_ms)
    }

    pub fn line(&self) -> String {
        format!(
            "{} [{:>2}] {}: {} ({} ms, budget {} ms)",
            if self.pass { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.detail,
            self.elapsed.as_millis(),
            self.budget_ms
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AcceptanceReport {
    pub seed: u64,
    pub results: Vec<CriterionResult>,
    pub pass: bool,
}

pub fn run_criterion(c: &Criterion, seed: u64) -> CriterionResult {
    let start = Instant::now();
    let (pass, detail) = match (c.run)(seed) {
        Ok(v) => v,
        Err(e) => (false, format!("error: {e}")),
    };
    CriterionResult {
        id: c.id,
        name: c.name.into(),
        anchor: c.anchor.into(),
        pass,
        detail,
        budget_ms: c.budget.as_millis() as u64,
        elapsed: start.elapsed(),
    }
}

pub fn criterion(id: u32) -> Option<&'static Criterion> {
    CRITERIA.iter().find(|c| c.id == id)
}

pub fn run_all(seed: u64) -> AcceptanceReport {
    let results: Vec<CriterionResult> = CRITERIA.iter().map(|c| run_criterion(c, seed)).collect();
    let pass = results.iter().all(|r| r.pass);
    AcceptanceReport {
        seed,
        results,
        pass,
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn to_i64(x: &Scalar) -> Result<i64, String> {
    if x.is_integer() {
        Ok(surface::to_i64(x))
    } else {
        Err(format!("{x} is not an integer"))
    }
}

fn signed_dims(v: &NumericalClass) -> Result<Vec<i64>, String> {
    quiver::signed_dimension_vector(v)
        .map_err(err)?
        .iter()
        .map(to_i64)
        .collect()
}

const CLASSES_PER_SURFACE: usize = 50;

fn dimension_vectors(seed: u64) -> Verdict {
    let mut s = Sampler::new(seed);
    let pinned = RationalMatrix::from_i64_rows(&[&[1, 2, -1], &[3, 3, -2], &[1, 1, -1]]);
    if quiver::dimension_vector_matrix(SurfaceKind::P2) != pinned {
        return Ok((
            false,
            "P2 matrix differs from (1,2,-1; 3,3,-2; 1,1,-1)".into(),
        ));
    }
    let mut checked = 0;
    for surface in SurfaceKind::all() {
        let m = quiver::dimension_vector_matrix(surface);
        for _ in 0..CLASSES_PER_SURFACE {
            let v = s.numerical_class(surface);
            let coords: Vec<Scalar> = v.coordinates().into_iter().map(int).collect();
            let via_matrix = m.mul_vec(&coords).map_err(err)?;
            let via_hrr = quiver::signed_dimension_vector(&v).map_err(err)?;
            if via_matrix != via_hrr {
                return Ok((
                    false,
                    format!("{v:?}: matrix {via_matrix:?} vs HRR {via_hrr:?}"),
                ));
            }
            checked += 1;
        }
    }
    Ok((true, format!("{checked} classes agree on P2 and P1xP1")))
}

fn euler_forms(seed: u64) -> Verdict {
    let mut s = Sampler::new(seed);
    let mut detail = Vec::new();
    for surface in SurfaceKind::all() {
        let q = quiver::preset(surface);
        for _ in 0..CLASSES_PER_SURFACE {
            let (v, w) = (s.numerical_class(surface), s.numerical_class(surface));
            let lhs = quiver::euler_form(&q, &signed_dims(&v)?, &signed_dims(&w)?);
            let rhs = surface::chi_pair(&v.to_chern(), &w.to_chern()).map_err(err)?;
            if int(lhs) != rhs {
                return Ok((
                    false,
                    format!("{surface}: euler form {lhs} vs chi {rhs} for {v:?}, {w:?}"),
                ));
            }
        }
        let ideal = NumericalClass::framed(surface, 1, 1);
        let d = signed_dims(&ideal)?;
        let pinned = quiver::euler_form(&q, &d, &d);
        if pinned != -1 {
            return Ok((
                false,
                format!("{surface}: ideal-sheaf self-pairing {pinned}, expected -1"),
            ));
        }
        detail.push(format!("{surface}: {} relations", q.relations.len()));
    }
    Ok((
        true,
        format!(
            "{} pairs per surface, ideal sheaf -1; {}",
            CLASSES_PER_SURFACE,
            detail.join(", ")
        ),
    ))
}

const ADHM_CASES: [(usize, usize); 5] = [(1, 1), (2, 1), (2, 2), (3, 1), (3, 2)];

fn adhm_iff_monad(seed: u64) -> Verdict {
    let mut s = Sampler::new(seed);
    for n in 0..20 {
        let (k, r) = ADHM_CASES[n % ADHM_CASES.len()];
        let d = s.adhm_solution(k, r);
        let (a, b) = adhm::monad_maps(&d);
        let composite = b.mul(&a).map_err(err)?;
        if !adhm::check_equation(&d) || !composite.is_zero() || adhm::monad_from_adhm(&d).is_err() {
            return Ok((false, format!("solution {n} ({k}, {r}) not a complex")));
        }
        let d = s.adhm_non_solution(k, r);
        let (a, b) = adhm::monad_maps(&d);
        let composite = b.mul(&a).map_err(err)?;
        // beta alpha = x2^2 ([B1, B2] + ij), entry by entry
        let x2sq = composite.coefficient(&[0, 0, 2]);
        let only_x2sq = (0..composite.rows()).all(|i| {
            (0..composite.cols()).all(|j| {
                composite
                    .get(i, j)
                    .terms()
                    .all(|(e, _)| e == &vec![0, 0, 2])
            })
        });
        if adhm::check_equation(&d) || composite.is_zero() || x2sq != d.residual() || !only_x2sq {
            return Ok((false, format!("non-solution {n} ({k}, {r}) misclassified")));
        }
        if adhm::monad_from_adhm(&d).is_ok() {
            return Ok((false, format!("non-solution {n} accepted as a monad")));
        }
    }
    Ok((
        true,
        "20 solutions give complexes, 20 non-solutions give residual x2^2 ([B1,B2] + ij)".into(),
    ))
}

fn fixed_points(_seed: u64) -> Verdict {
    let expected = [1, 2, 3, 5, 7, 11];
    let mut counts = Vec::new();
    for k in 1..=6 {
        let fps = adhm::torus_fixed_points(k, 1).map_err(err)?;
        if let Some(bad) = fps
            .iter()
            .find(|fp| !adhm::check_equation(&fp.datum) || !adhm::is_stable(&fp.datum))
        {
            return Ok((
                false,
                format!("partition {:?} fails equation or stability", bad.partition),
            ));
        }
        counts.push(fps.len());
    }
    Ok((counts == expected, format!("counts {counts:?}")))
}

fn framability(seed: u64) -> Verdict {
    let linf = CurveModel::line_at_infinity();
    let pool = sample::stable_pool(seed);
    for (n, d) in pool.iter().enumerate() {
        let monad = adhm::monad_from_adhm(d).map_err(err)?;
        let restricted = restrict_to_curve(&monad, &linf).map_err(err)?;
        let degree: i64 = euler_characteristic(&restricted) - d.r as i64;
        let t = heart::triviality_on_curve(&monad, &linf).map_err(err)?;
        let canonical = Framing::canonical(d).map_err(err)?;
        let ok = degree == 0
            && t.degree == 0
            && t.h0_minus_one == 0
            && t.splitting == vec![0; d.r]
            && t.framing.as_ref().map(|f| &f.sections) == Some(&canonical.sections);
        if !ok {
            return Ok((false, format!("sample {n} (k={}, r={}): {t:?}", d.k, d.r)));
        }
    }
    Ok((
        true,
        format!(
            "{} stable samples trivial on l_inf with invertible canonical framing",
            pool.len()
        ),
    ))
}

fn battery(seed: u64) -> Verdict {
    let collection = ExceptionalCollection::preset(SurfaceKind::P2);
    let pool = sample::stable_pool(seed);
    let mut entries = 0;
    for (n, d) in pool.iter().enumerate() {
        let monad = adhm::monad_from_adhm(d).map_err(err)?;
        let r = heart::vanishing_battery(&monad, &collection).map_err(err)?;
        if !r.pass {
            return Ok((
                false,
                format!("sample {n} (k={}, r={}): {:?}", d.k, d.r, r.entries),
            ));
        }
        entries += 2 * r.entries.len();
    }
    let p1xp1 = heart::vanishing_battery(
        &heart::p1xp1_point_ideal(),
        &ExceptionalCollection::preset(SurfaceKind::P1xP1),
    )
    .map_err(err)?;
    let counter =
        heart::vanishing_battery(&heart::unframable_example(), &collection).map_err(err)?;
    let h0 = counter
        .entries
        .iter()
        .find(|e| e.member == "O(1)")
        .map(|e| e.h0);
    let ok = p1xp1.pass && !counter.pass && h0 == Some(1);
    Ok((
        ok,
        format!(
            "{} samples, {entries} entries zero; P1xP1 point ideal pass = {}; O(-1)+O(1): h0(E(-1)) = {}",
            pool.len(),
            p1xp1.pass,
            h0.map_or("missing".to_string(), |h| h.to_string())
        ),
    ))
}

fn engine(seed: u64) -> Verdict {
    let mut s = Sampler::new(seed);
    for n in 0..100 {
        let c = s.complex();
        let h = hypercohomology(&c, None).map_err(|e| format!("complex {n}: {e}"))?;
        let wide = hypercohomology(
            &c,
            Some(MonomialWindow {
                bound: h.window + 2,
            }),
        )
        .map_err(err)?;
        if h.euler != euler_characteristic(&c) || !h.window_stable || wide.h != h.h {
            return Ok((false, format!("complex {n}: {h:?}")));
        }
    }
    let mut single = 0;
    for space in [Space::P1, Space::P2, Space::P1xP1] {
        let twists: Vec<Vec<i64>> = match space.twist_len() {
            1 => (-3..=3).map(|a| vec![a]).collect(),
            _ => (-3..=3)
                .flat_map(|a| (-3..=3).map(move |b| vec![a, b]))
                .collect(),
        };
        for t in twists {
            let h = hypercohomology(&LineBundleComplex::single(space, t.clone(), 0), None)
                .map_err(err)?;
            let closed = line_bundle_cohomology(space, &t);
            if (0..3).any(|i| h.get(i as i64) != closed[i]) {
                return Ok((false, format!("{space} O{t:?}: {:?} vs {closed:?}", h.h)));
            }
            single += 1;
        }
    }
    for n in 0..20 {
        let c = s.three_term_complex_p2();
        let cech = hypercohomology(&c, None).map_err(err)?;
        let ss = beilinson_p2(&c).map_err(err)?;
        let agree = ss.iter().all(|(d, h)| cech.get(*d) == *h)
            && ss.values().sum::<usize>() == cech.h.values().sum::<usize>();
        if !agree {
            return Ok((
                false,
                format!("spectral cross-check {n}: {ss:?} vs {:?}", cech.h),
            ));
        }
    }
    Ok((
        true,
        format!("100 random complexes stable at N and N+2 with matching chi; {single} line bundles; 20 spectral cross-checks"),
    ))
}

fn hilbert_profile(seed: u64) -> Verdict {
    let mut s = Sampler::new(seed);
    let mut configs = 0;
    for k in 1..=3 {
        for _ in 0..2 {
            let pts = s.distinct_points(k);
            let d = adhm::adhm_from_points(&pts);
            let monad = adhm::monad_from_adhm(&d).map_err(err)?;
            for (x, y) in &pts {
                let f =
                    adhm::fiber_homology(&monad, &[x.clone(), y.clone(), int(1)]).map_err(err)?;
                if f.dim != 2 {
                    return Ok((
                        false,
                        format!("fiber {} at configured point ({x}, {y})", f.dim),
                    ));
                }
            }
            let mut others = 0;
            while others < 20 {
                let p = (s.scalar(), s.scalar());
                if pts.contains(&p) {
                    continue;
                }
                let f = adhm::fiber_homology(&monad, &[p.0.clone(), p.1.clone(), int(1)])
                    .map_err(err)?;
                if f.dim != 1 {
                    return Ok((false, format!("fiber {} at ({}, {})", f.dim, p.0, p.1)));
                }
                others += 1;
            }
            configs += 1;
        }
    }
    let demo = heart::hilbert_demo(&s.distinct_points(2), seed).map_err(err)?;
    Ok((
        demo.pass,
        format!(
            "{configs} configurations with k <= 3; demo pipeline pass = {}",
            demo.pass
        ),
    ))
}

fn tangent(seed: u64) -> Verdict {
    let mut s = Sampler::new(seed);
    let mut seen = Vec::new();
    for (k, r) in [(1, 1), (2, 1), (2, 2), (3, 2)] {
        for _ in 0..3 {
            let d = s.stable_adhm(k, r, true);
            let t = adhm::tangent_report(&d).map_err(err)?;
            if t.rank_dmu != k * k || t.stabilizer_dim != 0 || t.tangent_dim != (2 * k * r) as i64 {
                return Ok((false, format!("(k, r) = ({k}, {r}): {t:?}")));
            }
        }
        seen.push(format!("({k},{r}) -> {}", 2 * k * r));
    }
    Ok((true, format!("tangent_dim = 2kr: {}", seen.join(", "))))
}

fn random_rep(s: &mut Sampler, dims: &[usize]) -> Representation {
    let q = quiver::preset_p2();
    let mats = q
        .arrows
        .iter()
        .map(|a| s.matrix(dims[a.dst], dims[a.src]))
        .collect();
    Representation::new(&q, dims.to_vec(), mats).expect("shapes follow the quiver")
}

fn round_trip(seed: u64) -> Verdict {
    let mut s = Sampler::new(seed);
    let q = quiver::preset_p2();
    for n in 0..20 {
        let (k, r) = ADHM_CASES[n % ADHM_CASES.len()];
        let d = s.adhm_solution(k, r);
        let rep = heart::rep_from_monad(&adhm::monad_from_adhm(&d).map_err(err)?).map_err(err)?;
        let g: Vec<RationalMatrix> = rep.dims.iter().map(|&n| s.invertible_matrix(n)).collect();
        let rep = rep.conjugate(&q, &g).map_err(err)?;
        let back =
            heart::rep_from_monad(&heart::monad_from_rep(&rep).map_err(err)?).map_err(err)?;
        if back != rep {
            return Ok((false, format!("round trip {n} changed the representation")));
        }
    }
    let (mut holds, mut fails) = (0, 0);
    for n in 0..20 {
        let rep = if n % 2 == 0 {
            let d = s.adhm_solution(1 + n % 3, 1);
            heart::rep_from_monad(&adhm::monad_from_adhm(&d).map_err(err)?).map_err(err)?
        } else {
            random_rep(&mut s, &[1 + n % 2, 3, 1])
        };
        let relations = quiver::check_relations(&q, &rep).map_err(err)?.holds;
        let (a, b) = heart::maps_from_rep(&rep);
        let complex = b.mul(&a).map_err(err)?.is_zero();
        if relations != complex {
            return Ok((
                false,
                format!("assembly {n}: relations {relations}, complex {complex}"),
            ));
        }
        if relations {
            holds += 1;
        } else {
            fails += 1;
        }
    }
    Ok((
        holds > 0 && fails > 0,
        format!("20 round trips exact; relations iff complex on 20 assemblies ({holds} hold, {fails} fail)"),
    ))
}

fn rigidity(seed: u64) -> Verdict {
    let pool = sample::stable_pool(seed);
    let mut injective = 0;
    for (n, d) in pool.iter().enumerate() {
        let r = heart::framed_automorphisms(d).map_err(err)?;
        if !r.unique {
            return Ok((false, format!("sample {n} (k={}, r={}): {r:?}", d.k, d.r)));
        }
        if injective < 10 {
            if !r.restriction_injective {
                return Ok((
                    false,
                    format!("sample {n}: restriction to l_inf not injective"),
                ));
            }
            injective += 1;
        }
    }
    Ok((
        injective == 10,
        format!(
            "{} samples with a unique framed automorphism; restriction injective on {injective}",
            pool.len()
        ),
    ))
}

fn hypotheses(_seed: u64) -> Verdict {
    let q = ExceptionalCollection::preset(SurfaceKind::P1xP1).line_bundle_classes();
    let rq =
        surface::hypothesis_check(SurfaceKind::P1xP1, &CurveModel::diagonal(), &q).map_err(err)?;
    let degrees_q: Vec<i64> = rq.members.iter().map(|m| m.degree).collect();
    let p = [DivisorClass::p2(1), DivisorClass::p2(2)];
    let rp = surface::hypothesis_check(SurfaceKind::P2, &CurveModel::line_at_infinity(), &p)
        .map_err(err)?;
    let degrees_p: Vec<i64> = rp.members.iter().map(|m| m.degree).collect();
    let ok = rq.pass
        && rp.pass
        && rq.anticanonical_degree == 4
        && rp.anticanonical_degree == 3
        && q.len() == 4;
    Ok((
        ok,
        format!(
            "P1xP1: (aH+bF).diag = {degrees_q:?} in (0, 4); P2: D.C0 = {degrees_p:?} in (0, 3)"
        ),
    ))
}
