//! Seeded sampling of test data. The same seed always produces the same sequence.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::enveloping::{EnvElement, Envelope};
use crate::filtered_dual::TruncatedFunctional;
use crate::lie_rinehart::LElement;
use crate::poly::{MultiIndex, Poly, Rational};

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn chance(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }

    /// A nonzero rational with small numerator and denominator.
    pub fn scalar(&mut self) -> Rational {
        let n: i64 = *[-3, -2, -1, 1, 2, 3].choose(&mut self.rng).expect("nonempty");
        let d: i64 = if self.rng.gen_bool(0.2) { self.rng.gen_range(2..=3) } else { 1 };
        Rational::new(n.into(), d.into())
    }

    pub fn multi_index(&mut self, len: usize, max_degree: u32) -> MultiIndex {
        let d = self.rng.gen_range(0..=max_degree);
        let all = MultiIndex::of_degree(len, d);
        all[self.rng.gen_range(0..all.len())].clone()
    }

    /// A polynomial with at most `max_terms` terms of degree at most `max_degree`.
    pub fn poly(&mut self, nvars: usize, max_degree: u32, max_terms: usize) -> Poly {
        let mut p = Poly::zero(nvars);
        let terms = self.rng.gen_range(0..=max_terms);
        for _ in 0..terms {
            let m = self.multi_index(nvars, max_degree);
            let c = self.scalar();
            p.add_term(m, c);
        }
        p
    }

    pub fn nonzero_poly(&mut self, nvars: usize, max_degree: u32, max_terms: usize) -> Poly {
        loop {
            let p = self.poly(nvars, max_degree, max_terms.max(1));
            if !p.is_zero() {
                return p;
            }
        }
    }

    /// An element of `F^max_degree U` with polynomial coefficients of degree at most 2.
    pub fn element(&mut self, env: &Envelope, max_degree: u32, max_terms: usize) -> EnvElement {
        let mut u = env.zero();
        let terms = self.rng.gen_range(1..=max_terms.max(1));
        for _ in 0..terms {
            let alpha = self.multi_index(env.rank(), max_degree);
            let a = self.nonzero_poly(env.nvars(), 2, 2);
            u.add_term(alpha, a);
        }
        u
    }

    /// A functional of the given precision with sparse small values.
    pub fn functional(&mut self, env: &Envelope, precision: u32) -> TruncatedFunctional {
        let mut table = Vec::new();
        for alpha in env.basis(precision) {
            if self.rng.gen_bool(0.6) {
                table.push((alpha, self.poly(env.nvars(), 2, 2)));
            }
        }
        TruncatedFunctional::from_table(env, precision, table).expect("sampled within precision")
    }

    pub fn l_element(&mut self, nvars: usize, rank: usize) -> LElement {
        LElement::new((0..rank).map(|_| self.poly(nvars, 2, 2)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_for_a_seed() {
        let (mut a, mut b) = (Sampler::new(7), Sampler::new(7));
        for _ in 0..20 {
            assert_eq!(a.poly(2, 3, 4), b.poly(2, 3, 4));
        }
        let mut c = Sampler::new(8);
        let first: Vec<Poly> = (0..5).map(|_| a.poly(2, 3, 4)).collect();
        let other: Vec<Poly> = (0..5).map(|_| c.poly(2, 3, 4)).collect();
        assert_ne!(first, other);
    }
}
