//! Seeded property checks across modules: group actions, fiber profiles,
//! framings and the representation dictionary.

use fsheaf::adhm::{self, AdhmDatum};
use fsheaf::heart::{self, Framing};
use fsheaf::quiver;
use fsheaf::sample::{Sampler, DEFAULT_SEED};
use fsheaf::surface::{CurveModel, ExceptionalCollection, NumericalClass, SurfaceKind};
use fsheaf::{int, ratla, RationalMatrix, Scalar};

fn fiber_dims(d: &AdhmDatum, points: &[Vec<Scalar>]) -> Vec<usize> {
    let monad = adhm::monad_from_adhm(d).unwrap();
    points
        .iter()
        .map(|p| adhm::fiber_homology(&monad, p).unwrap().dim)
        .collect()
}

fn affine(x: i64, y: i64) -> Vec<Scalar> {
    vec![int(x), int(y), int(1)]
}

#[test]
fn gl_action_preserves_equation_stability_fibers_and_battery() {
    let mut s = Sampler::new(DEFAULT_SEED);
    let d = adhm::adhm_from_points(&[(int(0), int(0)), (int(1), int(2))]);
    let probes = vec![affine(0, 0), affine(1, 2), affine(2, 1), affine(-1, 3)];
    let fibers = fiber_dims(&d, &probes);
    assert_eq!(fibers, vec![2, 2, 1, 1]);
    let collection = ExceptionalCollection::preset(SurfaceKind::P2);
    for _ in 0..10 {
        let g = s.invertible_matrix(d.k);
        let h = adhm::gl_action(&g, &d).unwrap();
        assert!(adhm::check_equation(&h));
        assert!(adhm::is_stable(&h));
        assert_eq!(fiber_dims(&h, &probes), fibers);
        let monad = adhm::monad_from_adhm(&h).unwrap();
        assert!(heart::vanishing_battery(&monad, &collection).unwrap().pass);
    }
}

#[test]
fn fiber_is_r_along_the_line_at_infinity() {
    let mut s = Sampler::new(DEFAULT_SEED ^ 1);
    for (k, r) in [(1, 1), (2, 1), (2, 2)] {
        let d = s.stable_adhm(k, r, true);
        let monad = adhm::monad_from_adhm(&d).unwrap();
        for _ in 0..20 {
            let p = vec![s.scalar(), s.nonzero_scalar(), int(0)];
            assert_eq!(
                adhm::fiber_homology(&monad, &p).unwrap().dim,
                r,
                "k = {k}, r = {r}"
            );
        }
    }
}

#[test]
fn fiber_jumps_sum_to_the_number_of_points() {
    let points = [(0, 0), (1, -1), (-2, 2)];
    let d = adhm::adhm_from_points(&points.map(|(x, y)| (int(x), int(y))));
    let grid: Vec<Vec<Scalar>> = (-2..=2)
        .flat_map(|x| (-2..=2).map(move |y| affine(x, y)))
        .collect();
    let jumps: usize = fiber_dims(&d, &grid).iter().map(|f| f - d.r).sum();
    assert_eq!(jumps, d.k);
}

#[test]
fn framings_form_a_gl_r_torsor() {
    let mut s = Sampler::new(DEFAULT_SEED ^ 2);
    let d = s.stable_adhm(1, 2, false);
    let phi = Framing::canonical(&d).unwrap();
    assert_eq!(phi.rank(), 2);
    for _ in 0..5 {
        let g = s.invertible_matrix(2);
        let h = s.invertible_matrix(2);
        let moved = phi.translate(&g).unwrap();
        assert_eq!(moved.translate(&ratla::inverse(&g).unwrap()).unwrap(), phi);
        // compatibility of the action and freeness
        assert_eq!(
            moved.translate(&h).unwrap(),
            phi.translate(&(&h * &g)).unwrap()
        );
        assert_eq!(moved == phi.translate(&h).unwrap(), g == h);
        // transitivity: the element carrying phi to moved is recovered
        let carried = moved
            .matrix
            .checked_mul(&ratla::inverse(&phi.matrix).unwrap())
            .unwrap();
        assert_eq!(carried, g);
    }
    assert!(phi.translate(&RationalMatrix::zeros(2, 2)).is_err());
}

#[test]
fn rescaled_framing_gives_a_unique_framed_isomorphism_in_rank_one() {
    let d = adhm::adhm_from_points(&[(int(0), int(1)), (int(2), int(0))]);
    let monad = adhm::monad_from_adhm(&d).unwrap();
    let phi = Framing::canonical(&d).unwrap();
    let scaled = phi
        .translate(&RationalMatrix::identity(1).scale(&int(3)))
        .unwrap();
    let report = heart::framed_hom(
        &monad,
        &scaled,
        &monad,
        &phi,
        &CurveModel::line_at_infinity(),
    )
    .unwrap();
    assert_eq!(report.hom_dim, 1);
    assert!(report.unique);
}

#[test]
fn representation_dims_match_the_dictionary() {
    let mut s = Sampler::new(DEFAULT_SEED ^ 3);
    let q = quiver::preset_p2();
    for (k, r) in [(1, 1), (2, 1), (2, 2), (3, 1)] {
        let d = s.stable_adhm(k, r, true);
        let rep = heart::rep_from_monad(&adhm::monad_from_adhm(&d).unwrap()).unwrap();
        let class = NumericalClass::framed(SurfaceKind::P2, r as i64, k as i64);
        let expected = quiver::dimension_vector(&class).unwrap();
        assert_eq!(rep.dims, vec![k, 2 * k + r, k]);
        assert_eq!(rep.dims, expected);
        assert!(quiver::check_relations(&q, &rep).unwrap().holds);
    }
}

#[test]
fn conjugated_representations_are_isomorphic() {
    let mut s = Sampler::new(DEFAULT_SEED ^ 4);
    let q = quiver::preset_p2();
    let d = s.stable_adhm(2, 1, true);
    let rep = heart::rep_from_monad(&adhm::monad_from_adhm(&d).unwrap()).unwrap();
    for _ in 0..3 {
        let g: Vec<RationalMatrix> = rep.dims.iter().map(|&n| s.invertible_matrix(n)).collect();
        let other = rep.conjugate(&q, &g).unwrap();
        assert!(quiver::check_relations(&q, &other).unwrap().holds);
        assert!(quiver::is_isomorphic(&q, &rep, &other).unwrap());
    }
    // different supports give non-isomorphic representations
    let rep_of = |pts: &[(i64, i64)]| {
        let pts: Vec<_> = pts.iter().map(|&(x, y)| (int(x), int(y))).collect();
        heart::rep_from_monad(&adhm::monad_from_adhm(&adhm::adhm_from_points(&pts)).unwrap())
            .unwrap()
    };
    assert!(
        !quiver::is_isomorphic(&q, &rep_of(&[(0, 0), (1, 1)]), &rep_of(&[(0, 0), (1, 2)])).unwrap()
    );
}
