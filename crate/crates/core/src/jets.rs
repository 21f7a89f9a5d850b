//! Jets: `A (x) A` completed at `K = ker(mu)`, in the coordinates `x` (left leg) and
//! `h_j = 1 (x) x_j - x_j (x) 1`, together with the map into `U*`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;

use crate::enveloping::Envelope;
use crate::error::AlgebraError;
use crate::filtered_dual::{convolve, vartheta, FunctionalOracle, TruncatedFunctional};
use crate::finite_dual::DualRep;
use crate::linalg;
use crate::poly::{join_signed_terms, render_monomial, MultiIndex, Poly, Rational};

/// `sum_gamma a'_gamma(x) h^gamma` modulo `K^(n+1)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Jet {
    nvars: usize,
    precision: u32,
    terms: BTreeMap<MultiIndex, Poly>,
}

impl Jet {
    pub fn zero(nvars: usize, precision: u32) -> Self {
        Jet { nvars, precision, terms: BTreeMap::new() }
    }

    /// `a (x) 1`.
    pub fn from_poly(a: Poly, precision: u32) -> Self {
        let mut j = Jet::zero(a.nvars(), precision);
        j.add_term(MultiIndex::zero(a.nvars()), a);
        j
    }

    /// `h^gamma`, zero when `|gamma|` exceeds the precision.
    pub fn h_power(nvars: usize, gamma: MultiIndex, precision: u32) -> Self {
        let mut j = Jet::zero(nvars, precision);
        j.add_term(gamma, Poly::one(nvars));
        j
    }

    pub fn h(nvars: usize, j: usize, precision: u32) -> Self {
        Jet::h_power(nvars, MultiIndex::unit(nvars, j), precision)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &Poly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, gamma: &MultiIndex) -> Poly {
        self.terms.get(gamma).cloned().unwrap_or_else(|| Poly::zero(self.nvars))
    }

    fn add_term(&mut self, gamma: MultiIndex, a: Poly) {
        if gamma.degree() > self.precision || a.is_zero() {
            return;
        }
        let slot = self.terms.entry(gamma.clone()).or_insert_with(|| Poly::zero(self.nvars));
        slot.add_assign_ref(&a);
        if slot.is_zero() {
            self.terms.remove(&gamma);
        }
    }

    pub fn add(&self, other: &Jet) -> Jet {
        let mut out = Jet::zero(self.nvars, self.precision.min(other.precision));
        for (g, a) in self.terms.iter().chain(&other.terms) {
            out.add_term(g.clone(), a.clone());
        }
        out
    }

    /// The `h`-graded product, truncated at the smaller precision.
    pub fn mul(&self, other: &Jet) -> Jet {
        let mut out = Jet::zero(self.nvars, self.precision.min(other.precision));
        for (g1, a1) in &self.terms {
            for (g2, a2) in &other.terms {
                out.add_term(g1.add(g2), a1 * a2);
            }
        }
        out
    }

    /// Expands into `Q[x1..xk, y1..yk]` with `y_j` the right-leg copy of `x_j`.
    pub fn to_tensor_poly(&self) -> Poly {
        let k = self.nvars;
        let h: Vec<Poly> = (0..k).map(|j| &Poly::var(2 * k, k + j) - &Poly::var(2 * k, j)).collect();
        let mut out = Poly::zero(2 * k);
        for (gamma, a) in &self.terms {
            let mut term = a.extend_vars(k, 0);
            for (j, hj) in h.iter().enumerate() {
                term = &term * &hj.pow(gamma.get(j));
            }
            out.add_assign_ref(&term);
        }
        out
    }
}

impl fmt::Display for Jet {
    /// `x1^2 + 2*x1*h1`; the `h` part follows the `x` part in each term.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut pieces: Vec<(Rational, String)> = Vec::new();
        for (gamma, a) in &self.terms {
            let hpart = render_monomial(gamma, "h");
            for (m, c) in a.terms().rev() {
                let xpart = render_monomial(m, "x");
                let body = match (xpart.is_empty(), hpart.is_empty()) {
                    (true, _) => hpart.clone(),
                    (false, true) => xpart,
                    (false, false) => format!("{xpart}*{hpart}"),
                };
                pieces.push((c.clone(), body));
            }
        }
        write!(f, "{}", join_signed_terms(pieces))
    }
}

/// `a' (x) a = sum_{|gamma| <= n} a' (d^gamma a / gamma!) h^gamma`.
pub fn jet_from_tensor(source: &Poly, target: &Poly, n: u32) -> Jet {
    let mut out = Jet::zero(source.nvars(), n);
    for gamma in MultiIndex::up_to_degree(source.nvars(), n) {
        let d = target.partial_multi(&gamma);
        if d.is_zero() {
            continue;
        }
        let inv = Rational::new(One::one(), gamma.factorial());
        out.add_term(gamma, &d.scale(&inv) * source);
    }
    out
}

/// Evaluates jets in `U*` at a fixed precision, caching the convolution powers of
/// `vartheta(h) = vartheta(1 (x) x_j) - vartheta(x_j (x) 1)`.
pub struct JetDual<'a> {
    env: &'a Envelope,
    precision: u32,
    powers: BTreeMap<MultiIndex, TruncatedFunctional>,
}

impl<'a> JetDual<'a> {
    pub fn new(env: &'a Envelope, precision: u32) -> Self {
        let mut powers = BTreeMap::new();
        powers.insert(MultiIndex::zero(env.nvars()), TruncatedFunctional::counit(env, precision));
        JetDual { env, precision, powers }
    }

    pub fn h(&self, j: usize) -> TruncatedFunctional {
        let k = self.env.nvars();
        let xj = Poly::var(k, j);
        let one = Poly::one(k);
        vartheta(one.clone(), xj.clone())
            .truncate(self.env, self.precision)
            .sub(&vartheta(xj, one).truncate(self.env, self.precision))
    }

    /// `vartheta(h)^{*gamma}`, built as `vartheta(h)^{*(gamma - e_j)} * vartheta(h_j)`.
    pub fn h_power(&mut self, gamma: &MultiIndex) -> TruncatedFunctional {
        if let Some(f) = self.powers.get(gamma) {
            return f.clone();
        }
        let j = gamma.last_nonzero().expect("zero exponent is cached");
        let prev = self.h_power(&gamma.decrement(j).expect("nonzero exponent"));
        let f = convolve(self.env, &prev, &self.h(j));
        self.powers.insert(gamma.clone(), f.clone());
        f
    }

    /// `sum_gamma vartheta(a'_gamma (x) 1) * vartheta(h)^{*gamma}`.
    pub fn image(&mut self, jet: &Jet) -> TruncatedFunctional {
        let mut out = TruncatedFunctional::zero(self.env, self.precision);
        for (gamma, a) in &jet.terms {
            if gamma.degree() > self.precision {
                continue;
            }
            // vartheta(a (x) 1) is a' eps, and eps is the convolution unit
            out = out.add(&self.h_power(gamma).mul_poly(a));
        }
        out
    }
}

pub fn jet_to_functional(env: &Envelope, jet: &Jet, m: u32) -> TruncatedFunctional {
    JetDual::new(env, m).image(jet)
}

/// `M[gamma][alpha] = vartheta(h)^{*gamma}(X^alpha)` for `|gamma|, |alpha| <= n`, with its
/// determinant. Only defined when `L` is the module of coordinate derivations.
pub fn theta_matrix(env: &Envelope, n: u32) -> Result<(Vec<Vec<Poly>>, Poly), AlgebraError> {
    if !env.presentation().is_coordinate_derivations() {
        return Err(AlgebraError::NotDerivationModule);
    }
    let mut dual = JetDual::new(env, n);
    let basis = env.basis(n);
    let matrix: Vec<Vec<Poly>> = MultiIndex::up_to_degree(env.nvars(), n)
        .iter()
        .map(|gamma| {
            let f = dual.h_power(gamma);
            basis.iter().map(|alpha| f.at(alpha).expect("within precision")).collect()
        })
        .collect();
    let det = linalg::determinant(&matrix, env.nvars());
    Ok((matrix, det))
}

/// `zeta(eta(a' (x) a)) = vartheta(a' (x) a)` at precision `m`.
pub fn eta_triangle_check(env: &Envelope, source: &Poly, target: &Poly, m: u32) -> bool {
    DualRep::eta(env, source.clone(), target.clone()).zeta(env, m) == vartheta(source.clone(), target.clone()).truncate(env, m)
}

/// `true` when every `h^gamma` with `|gamma| <= n` maps into `Ann F^(|gamma|-1) U`.
pub fn filtration_check(env: &Envelope, n: u32) -> bool {
    let mut dual = JetDual::new(env, n);
    MultiIndex::up_to_degree(env.nvars(), n).iter().all(|g| dual.h_power(g).vanishing_level() >= g.degree())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_poly;
    use crate::fixtures::Fixture;
    use crate::random::Sampler;

    fn p(s: &str, k: usize) -> Poly {
        parse_poly(s, k).unwrap()
    }

    #[test]
    fn taylor_examples() {
        assert_eq!(jet_from_tensor(&p("1", 1), &p("x1", 1), 2).to_string(), "x1 + h1");
        assert_eq!(jet_from_tensor(&p("x1^2", 1), &p("1", 1), 3), Jet::from_poly(p("x1^2", 1), 3));
        assert_eq!(jet_from_tensor(&p("1", 1), &p("x1^2", 1), 1).to_string(), "x1^2 + 2*x1*h1");
        assert_eq!(jet_from_tensor(&p("1", 1), &p("x1^2", 1), 2).to_string(), "x1^2 + 2*x1*h1 + h1^2");
    }

    #[test]
    fn products() {
        let h = Jet::h(1, 0, 2);
        assert_eq!(h.mul(&h), Jet::h_power(1, MultiIndex::new(vec![2]), 2));
        let h1 = Jet::h(1, 0, 1);
        assert!(h1.mul(&h1).is_zero());
        let x = p("x1", 1);
        let one = p("1", 1);
        assert_eq!(
            jet_from_tensor(&one, &x, 3).mul(&jet_from_tensor(&x, &one, 3)),
            jet_from_tensor(&x, &x, 3)
        );
    }

    #[test]
    fn kernel_guard() {
        // h_j lies in K = ker(mu), and the Taylor expansion is exact once n >= deg a
        for k in 1..=2 {
            for j in 0..k {
                let h = Jet::h(k, j, 3).to_tensor_poly();
                let mu: Vec<Poly> = (0..2 * k).map(|i| Poly::var(k, i % k)).collect();
                assert!(h.substitute(&mu).is_zero());
            }
        }
        let a_src = p("x1*x2 + 3", 2);
        let a = p("x1^2*x2 - x2 + 1", 2);
        let expected = &a_src.extend_vars(2, 0) * &a.extend_vars(2, 2);
        assert_eq!(jet_from_tensor(&a_src, &a, 3).to_tensor_poly(), expected);
        assert_ne!(jet_from_tensor(&a_src, &a, 2).to_tensor_poly(), expected);
        // (A (x) A)/K^(n+1) is free over A on the h-monomials of degree <= n
        assert_eq!(MultiIndex::up_to_degree(2, 3).len(), 10);
    }

    #[test]
    fn functional_examples() {
        let w1 = Envelope::new(Fixture::W1.presentation());
        let f = jet_to_functional(&w1, &Jet::h(1, 0, 2), 2);
        assert_eq!(f.to_string(), "{[1]: -1} @2");
        let f = jet_to_functional(&w1, &Jet::h_power(1, MultiIndex::new(vec![2]), 3), 3);
        assert_eq!(f.to_string(), "{[2]: 2} @3");
        let a = p("x1^2 + 1", 1);
        assert_eq!(jet_to_functional(&w1, &Jet::from_poly(a.clone(), 3), 3), vartheta(a, p("1", 1)).truncate(&w1, 3));
    }

    #[test]
    fn extends_vartheta_multiplicatively() {
        let mut s = Sampler::new(5);
        for f in Fixture::ALL {
            let env = Envelope::new(f.presentation());
            let k = env.nvars();
            for _ in 0..5 {
                let (a1, a2) = (s.poly(k, 2, 2), s.poly(k, 2, 2));
                let j = jet_from_tensor(&a1, &a2, 3);
                assert_eq!(jet_to_functional(&env, &j, 3), vartheta(a1.clone(), a2.clone()).truncate(&env, 3));
                let j2 = jet_from_tensor(&s.poly(k, 2, 2), &s.poly(k, 2, 2), 3);
                assert_eq!(
                    jet_to_functional(&env, &j.mul(&j2), 3),
                    convolve(&env, &jet_to_functional(&env, &j, 3), &jet_to_functional(&env, &j2, 3))
                );
                assert!(eta_triangle_check(&env, &a1, &a2, 3));
            }
            assert!(filtration_check(&env, 3));
        }
    }

    #[test]
    fn theta_matrices() {
        let w1 = Envelope::new(Fixture::W1.presentation());
        let (m, det) = theta_matrix(&w1, 1).unwrap();
        assert_eq!(m, vec![vec![p("1", 1), p("0", 1)], vec![p("0", 1), p("-1", 1)]]);
        assert_eq!(det, p("-1", 1));
        let (m, det) = theta_matrix(&w1, 2).unwrap();
        assert_eq!(m[2][2], p("2", 1));
        assert_eq!(det, p("-2", 1));
        let w2 = Envelope::new(Fixture::W2.presentation());
        let (m, det) = theta_matrix(&w2, 1).unwrap();
        assert_eq!((m[1][1].clone(), m[2][2].clone(), m[1][2].clone()), (p("-1", 2), p("-1", 2), p("0", 2)));
        assert_eq!(det, p("1", 2));
        let aff = Envelope::new(Fixture::Aff.presentation());
        assert!(matches!(theta_matrix(&aff, 1), Err(AlgebraError::NotDerivationModule)));
    }
}
