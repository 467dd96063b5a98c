//! Deterministic random inputs: rationals in a small box, matrices, classes,
//! stable ADHM data and complexes of line bundles.
//!
//! Numerators satisfy `|n| <= 5` and denominators lie in `{1, 2, 3}` so that
//! exact arithmetic stays cheap.

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::adhm::{self, AdhmDatum};
use crate::cohomology::{self, LineBundleComplex, Space};
use crate::poly::monomials_of_degree;
use crate::ratla;
use crate::surface::{NumericalClass, SurfaceKind};
use crate::{Polynomial, PolynomialMatrix, RationalMatrix, Scalar};

/// Seed used when none is given, so default runs are reproducible.
pub const DEFAULT_SEED: u64 = 0x5eed_f5a4;

pub const NUMERATOR_BOUND: i64 = 5;
pub const DENOMINATORS: [i64; 3] = [1, 2, 3];

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn integer(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn coin(&mut self) -> bool {
        self.rng.gen()
    }

    pub fn scalar(&mut self) -> Scalar {
        let n = self.integer(-NUMERATOR_BOUND, NUMERATOR_BOUND);
        let d = *DENOMINATORS.choose(&mut self.rng).expect("nonempty");
        crate::frac(n, d)
    }

    pub fn nonzero_scalar(&mut self) -> Scalar {
        loop {
            let x = self.scalar();
            if !x.is_zero() {
                return x;
            }
        }
    }

    pub fn matrix(&mut self, rows: usize, cols: usize) -> RationalMatrix {
        RationalMatrix::from_fn(rows, cols, |_, _| self.scalar())
    }

    pub fn invertible_matrix(&mut self, n: usize) -> RationalMatrix {
        loop {
            let g = self.matrix(n, n);
            if ratla::is_invertible(&g) {
                return g;
            }
        }
    }

    /// Rank in `[-3, 3]`, `c1` coordinates in `[-3, 3]`, `chi` in `[-5, 5]`.
    pub fn numerical_class(&mut self, surface: SurfaceKind) -> NumericalClass {
        let rank = self.integer(-3, 3);
        let c1 = (0..surface.picard_rank())
            .map(|_| self.integer(-3, 3))
            .collect();
        let chi = self.integer(-5, 5);
        NumericalClass::new(surface, rank, c1, chi).expect("coordinates match the surface")
    }

    /// `k` distinct points of `C^2` with integer coordinates in the box.
    pub fn distinct_points(&mut self, k: usize) -> Vec<(Scalar, Scalar)> {
        let mut pts: Vec<(i64, i64)> = Vec::with_capacity(k);
        while pts.len() < k {
            let p = (self.integer(-3, 3), self.integer(-3, 3));
            if !pts.contains(&p) {
                pts.push(p);
            }
        }
        pts.into_iter()
            .map(|(x, y)| (crate::int(x), crate::int(y)))
            .collect()
    }

    /// A stable solution of the ADHM equation: commuting diagonal `B`s with
    /// distinct eigenvalue pairs, a random `i` and `j = 0`, conjugated by a
    /// random invertible matrix when `conjugate` is set.
    pub fn stable_adhm(&mut self, k: usize, r: usize, conjugate: bool) -> AdhmDatum {
        let pts = self.distinct_points(k);
        let mut d = AdhmDatum::zero(k, r);
        for (m, (x, y)) in pts.into_iter().enumerate() {
            d.b1[(m, m)] = x;
            d.b2[(m, m)] = y;
        }
        loop {
            d.i = self.matrix(k, r);
            if adhm::is_stable(&d) {
                break;
            }
        }
        if conjugate && k > 0 {
            let g = self.invertible_matrix(k);
            d = adhm::gl_action(&g, &d).expect("invertible");
        }
        d
    }

    /// A solution of the ADHM equation that is not necessarily stable: a
    /// torus fixed point (rank one) or a stable sample, conjugated.
    pub fn adhm_solution(&mut self, k: usize, r: usize) -> AdhmDatum {
        if r == 1 && k > 0 && self.coin() {
            let fixed = adhm::torus_fixed_points(k, 1).expect("rank one");
            let d = fixed.choose(&mut self.rng).expect("nonempty").datum.clone();
            let g = self.invertible_matrix(k);
            return adhm::gl_action(&g, &d).expect("invertible");
        }
        self.stable_adhm(k, r, true)
    }

    /// Random matrices violating the ADHM equation (`k >= 1`).
    pub fn adhm_non_solution(&mut self, k: usize, r: usize) -> AdhmDatum {
        assert!(k >= 1, "every datum with k = 0 is a solution");
        loop {
            let d = AdhmDatum {
                k,
                r,
                b1: self.matrix(k, k),
                b2: self.matrix(k, k),
                i: self.matrix(k, r),
                j: self.matrix(r, k),
            };
            if !adhm::check_equation(&d) {
                return d;
            }
        }
    }

    /// A random form of multidegree `degree`; each coefficient is zero with
    /// probability about one half so the forms stay sparse.
    pub fn form(&mut self, space: Space, degree: &[i64]) -> Polynomial {
        let n = space.nvars();
        let mut p = Polynomial::zero(n);
        for m in monomials_of_degree(n, &space.groups(), degree) {
            if self.coin() {
                p.add_term(m, self.scalar());
            }
        }
        p
    }

    fn nonzero_form(&mut self, space: Space, degree: &[i64]) -> Polynomial {
        if monomials_of_degree(space.nvars(), &space.groups(), degree).is_empty() {
            return Polynomial::zero(space.nvars());
        }
        loop {
            let p = self.form(space, degree);
            if !p.is_zero() {
                return p;
            }
        }
    }

    fn twist(&mut self, space: Space, lo: i64, hi: i64) -> Vec<i64> {
        (0..space.twist_len())
            .map(|_| self.integer(lo, hi))
            .collect()
    }

    fn map_between(
        &mut self,
        space: Space,
        src: &[Vec<i64>],
        dst: &[Vec<i64>],
    ) -> PolynomialMatrix {
        PolynomialMatrix::from_fn(dst.len(), src.len(), space.nvars(), |r, c| {
            let deg: Vec<i64> = dst[r].iter().zip(&src[c]).map(|(a, b)| a - b).collect();
            self.form(space, &deg)
        })
    }

    /// A two-term complex `A -> B` with random forms; every map is a complex.
    pub fn two_term_complex(&mut self, space: Space) -> LineBundleComplex {
        let a: Vec<Vec<i64>> = (0..self.integer(1, 2))
            .map(|_| self.twist(space, -3, 0))
            .collect();
        let b: Vec<Vec<i64>> = (0..self.integer(1, 2))
            .map(|_| {
                let base = a[0].clone();
                base.iter().map(|x| x + self.integer(0, 2)).collect()
            })
            .collect();
        let map = self.map_between(space, &a, &b);
        let start = self.integer(-1, 0);
        LineBundleComplex::new(space, start, vec![a, b], vec![map])
            .expect("two-term complexes are complexes")
    }

    /// A Koszul complex of two random forms, twisted and shifted.
    pub fn koszul_complex(&mut self, space: Space) -> LineBundleComplex {
        let da = self.twist(space, 0, 2);
        let db = self.twist(space, 0, 2);
        let f = self.nonzero_form(space, &da);
        let g = self.nonzero_form(space, &db);
        let k = cohomology::koszul(space, &f, &g).expect("homogeneous forms");
        let t = self.twist(space, -1, 3);
        k.twisted(&t)
    }

    /// A complex with at most three terms on `P2`: a Koszul complex, a twisted
    /// ADHM monad, or a tensor product of two two-term complexes.
    pub fn three_term_complex_p2(&mut self) -> LineBundleComplex {
        match self.integer(0, 2) {
            0 => self.koszul_complex(Space::P2),
            1 => {
                let k = self.integer(1, 2) as usize;
                let d = self.adhm_solution(k, 1);
                let t = self.integer(-4, 2);
                adhm::monad_from_adhm(&d).expect("solution").twisted(&[t])
            }
            _ => {
                let a = self.small_two_term(Space::P2);
                let b = self.small_two_term(Space::P2);
                a.tensor(&b).expect("same space")
            }
        }
    }

    fn small_two_term(&mut self, space: Space) -> LineBundleComplex {
        let a = vec![self.twist(space, -2, 0)];
        let b: Vec<i64> = a.iter().flatten().map(|x| x + self.integer(0, 1)).collect();
        let map = self.map_between(space, &a, std::slice::from_ref(&b));
        LineBundleComplex::new(space, 0, vec![a, vec![b]], vec![map]).expect("two-term")
    }

    /// Any of the random complex families, on a random space.
    pub fn complex(&mut self) -> LineBundleComplex {
        let space = *[Space::P1, Space::P2, Space::P1xP1]
            .choose(&mut self.rng)
            .expect("nonempty");
        match self.integer(0, 3) {
            0 => LineBundleComplex::sum(
                space,
                (0..self.integer(1, 3))
                    .map(|_| self.twist(space, -4, 3))
                    .collect(),
                0,
            )
            .expect("valid twists"),
            1 => self.two_term_complex(space),
            2 if space != Space::P1 => self.koszul_complex(space),
            3 if space == Space::P2 => self.three_term_complex_p2(),
            _ => self.two_term_complex(space),
        }
    }

    pub fn choose<'a, T>(&mut self, items: &'a [T]) -> &'a T {
        items.choose(&mut self.rng).expect("nonempty")
    }
}

/// The stable pool used across the framability, battery, tangent and rigidity
/// checks: a few samples for each `(k, r)`.
pub fn stable_pool(seed: u64) -> Vec<AdhmDatum> {
    let mut s = Sampler::new(seed);
    let mut pool = vec![
        AdhmDatum::ideal_sheaf_of_origin(),
        AdhmDatum::zero(0, 1),
        AdhmDatum::zero(0, 2),
    ];
    for (k, r) in [(1, 1), (2, 1), (2, 2), (3, 1), (3, 2)] {
        for _ in 0..2 {
            pool.push(s.stable_adhm(k, r, true));
        }
    }
    for k in 1..=3 {
        for fp in adhm::torus_fixed_points(k, 1).expect("rank one") {
            pool.push(fp.datum);
        }
    }
    pool
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::euler_characteristic;

    #[test]
    fn deterministic() {
        let mut a = Sampler::new(7);
        let mut b = Sampler::new(7);
        for _ in 0..10 {
            assert_eq!(a.matrix(3, 2), b.matrix(3, 2));
        }
    }

    #[test]
    fn seeds_differ() {
        let mut a = Sampler::new(1);
        let mut b = Sampler::new(2);
        let xs: Vec<RationalMatrix> = (0..10).map(|_| a.matrix(3, 3)).collect();
        let ys: Vec<RationalMatrix> = (0..10).map(|_| b.matrix(3, 3)).collect();
        assert_ne!(xs, ys);
    }

    #[test]
    fn entries_in_box() {
        let mut s = Sampler::new(3);
        for _ in 0..500 {
            let x = s.scalar();
            let (n, d) = (
                i64::try_from(x.numer().clone()).unwrap(),
                i64::try_from(x.denom().clone()).unwrap(),
            );
            assert!(n.abs() <= NUMERATOR_BOUND);
            assert!(DENOMINATORS.contains(&d) || (d == 1 && n == 0));
        }
    }

    #[test]
    fn stable_samples() {
        let mut s = Sampler::new(11);
        for (k, r) in [(1, 1), (2, 1), (2, 2), (3, 2)] {
            let d = s.stable_adhm(k, r, true);
            assert!(adhm::check_equation(&d) && adhm::is_stable(&d));
            let n = s.adhm_non_solution(k, r);
            assert!(!adhm::check_equation(&n));
        }
    }

    #[test]
    fn complexes_are_complexes() {
        let mut s = Sampler::new(5);
        for _ in 0..30 {
            let c = s.complex();
            let _ = euler_characteristic(&c);
        }
        for _ in 0..10 {
            assert!(s.three_term_complex_p2().len() <= 3);
        }
    }

    #[test]
    fn pool_is_stable() {
        for d in stable_pool(DEFAULT_SEED) {
            assert!(adhm::check_equation(&d) && adhm::is_stable(&d));
        }
    }
}
