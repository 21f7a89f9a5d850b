//! Tensor powers of `U` over `A`, in canonical form `X^a1 (x) X^a2 (x) ... (x) X^ak * c`.
//!
//! Each junction between consecutive legs records how a coefficient crosses it. For
//! `U_A (x)_A U_A` (the codomain of `Delta`) the relation is `u*a (x) v = u (x) v*a`; for
//! `U_A (x)_A _AU` (the codomain of `delta`) it is `u*a (x) v = u (x) a*v`. Reduction pushes
//! coefficients left to right until only the last leg carries one.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::poly::{join_signed_terms, render_monomial, MultiIndex, Poly, Rational};

use super::{EnvElement, Envelope, TranslationRule};

/// How a coefficient on the left leg crosses a tensor junction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Balance {
    /// `u*a (x) v = u (x) v*a`
    Right,
    /// `u*a (x) v = u (x) a*v`
    Left,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TensorFlavor {
    /// `U_A (x)_A U_A`, the codomain of the comultiplication.
    Coprod,
    /// `U_A (x)_A _AU`, the codomain of the translation map.
    Translate,
}

impl TensorFlavor {
    pub fn junction(self) -> Balance {
        match self {
            TensorFlavor::Coprod => Balance::Right,
            TensorFlavor::Translate => Balance::Left,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tensor {
    nvars: usize,
    rank: usize,
    junctions: Vec<Balance>,
    terms: BTreeMap<Vec<MultiIndex>, Poly>,
}

impl Tensor {
    pub fn zero(nvars: usize, rank: usize, junctions: Vec<Balance>) -> Self {
        Tensor { nvars, rank, junctions, terms: BTreeMap::new() }
    }

    pub fn legs(&self) -> usize {
        self.junctions.len() + 1
    }

    pub fn junctions(&self) -> &[Balance] {
        &self.junctions
    }

    /// The flavor of a two-leg tensor.
    pub fn flavor(&self) -> Option<TensorFlavor> {
        match self.junctions.as_slice() {
            [Balance::Right] => Some(TensorFlavor::Coprod),
            [Balance::Left] => Some(TensorFlavor::Translate),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<MultiIndex>, &Poly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, legs: &[MultiIndex]) -> Poly {
        self.terms.get(legs).cloned().unwrap_or_else(|| Poly::zero(self.nvars))
    }

    /// Filtration level: the largest total degree `|a1| + ... + |ak|` of a term.
    pub fn level(&self) -> u32 {
        self.terms.keys().map(|legs| legs.iter().map(MultiIndex::degree).sum()).max().unwrap_or(0)
    }

    /// Adds `X^a1 (x) ... (x) X^ak * c`, already canonical.
    pub fn add_term(&mut self, legs: Vec<MultiIndex>, c: Poly) {
        debug_assert_eq!(legs.len(), self.legs());
        if c.is_zero() {
            return;
        }
        match self.terms.entry(legs) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                o.get_mut().add_assign_ref(&c);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &Tensor) {
        assert_eq!(self.junctions, other.junctions, "tensor shapes differ");
        for (legs, c) in &other.terms {
            self.add_term(legs.clone(), c.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &Tensor) {
        assert_eq!(self.junctions, other.junctions, "tensor shapes differ");
        for (legs, c) in &other.terms {
            self.add_term(legs.clone(), -c);
        }
    }

    pub fn sub(&self, other: &Tensor) -> Tensor {
        let mut out = self.clone();
        out.sub_assign(other);
        out
    }

    pub fn scale(&self, c: &Rational) -> Tensor {
        let mut out = Tensor::zero(self.nvars, self.rank, self.junctions.clone());
        for (legs, a) in &self.terms {
            out.add_term(legs.clone(), a.scale(c));
        }
        out
    }

    /// Right multiplication of the last leg by `a`.
    pub fn mul_right(&self, a: &Poly) -> Tensor {
        if a.is_one() {
            return self.clone();
        }
        let mut out = Tensor::zero(self.nvars, self.rank, self.junctions.clone());
        for (legs, c) in &self.terms {
            out.add_term(legs.clone(), c * a);
        }
        out
    }

    /// The same terms read under other junction rules. Only meaningful when no
    /// coefficient has to cross a junction, e.g. for comparisons of canonical forms.
    pub fn with_junctions(&self, junctions: Vec<Balance>) -> Tensor {
        assert_eq!(junctions.len(), self.junctions.len());
        Tensor { junctions, ..self.clone() }
    }
}

impl fmt::Display for Tensor {
    /// Highest total degree first; ties broken by the last leg, then earlier legs.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut keys: Vec<&Vec<MultiIndex>> = self.terms.keys().collect();
        keys.sort_by(|a, b| {
            let da: u32 = a.iter().map(MultiIndex::degree).sum();
            let db: u32 = b.iter().map(MultiIndex::degree).sum();
            db.cmp(&da).then_with(|| b.iter().rev().cmp(a.iter().rev()))
        });
        let mut pieces = Vec::new();
        for legs in keys {
            let rendered: Vec<String> = legs
                .iter()
                .map(|m| {
                    let s = render_monomial(m, "X");
                    if s.is_empty() {
                        "1".to_string()
                    } else {
                        s
                    }
                })
                .collect();
            let (last_leg, head) = rendered.split_last().expect("at least one leg");
            for (m, c) in self.terms[legs].terms().rev() {
                let x = render_monomial(m, "x");
                let last = match (last_leg.as_str(), x.is_empty()) {
                    (_, true) => last_leg.clone(),
                    ("1", false) => x,
                    (g, false) => format!("{g}*{x}"),
                };
                let mut body = head.join("⊗");
                if !head.is_empty() {
                    body.push('⊗');
                }
                body.push_str(&last);
                pieces.push((c.clone(), body));
            }
        }
        f.write_str(&join_signed_terms(pieces))
    }
}

impl Envelope {
    pub fn tensor_zero(&self, junctions: Vec<Balance>) -> Tensor {
        Tensor::zero(self.nvars(), self.rank(), junctions)
    }

    /// Canonical form of `legs[0] (x) legs[1] (x) ... (x) legs[k-1]`.
    pub fn tensor_from_legs(&self, junctions: &[Balance], legs: &[EnvElement]) -> Tensor {
        let mut out = self.tensor_zero(junctions.to_vec());
        self.accumulate_legs(&mut out, legs, None);
        out
    }

    /// Adds `legs[0] (x) ... (x) legs[k-1] * scale` to `out`.
    pub(crate) fn accumulate_legs(&self, out: &mut Tensor, legs: &[EnvElement], scale: Option<&Poly>) {
        assert_eq!(legs.len(), out.legs(), "leg count does not match junctions");
        // states: canonical prefix -> coefficient waiting to cross into the next leg
        let mut states: BTreeMap<Vec<MultiIndex>, Poly> = BTreeMap::new();
        for (alpha, a) in legs[0].terms() {
            states.insert(vec![alpha.clone()], a.clone());
        }
        for (k, leg) in legs.iter().enumerate().skip(1) {
            let mut next: BTreeMap<Vec<MultiIndex>, Poly> = BTreeMap::new();
            for (prefix, c) in states {
                let moved = match out.junctions[k - 1] {
                    Balance::Right => leg.mul_right(&c),
                    Balance::Left => self.lmul_coeff(&c, leg),
                };
                for (beta, b) in moved.terms() {
                    let mut key = prefix.clone();
                    key.push(beta.clone());
                    let slot = next.entry(key).or_insert_with(|| Poly::zero(self.nvars()));
                    slot.add_assign_ref(b);
                }
            }
            next.retain(|_, c| !c.is_zero());
            states = next;
        }
        for (legs, c) in states {
            match scale {
                Some(s) => out.add_term(legs, &c * s),
                None => out.add_term(legs, c),
            }
        }
    }

    /// Expands a canonical term into explicit legs (coefficient on the last leg).
    pub fn term_legs(&self, legs: &[MultiIndex], c: &Poly) -> Vec<EnvElement> {
        let mut out: Vec<EnvElement> = legs.iter().map(|m| self.monomial(m.clone())).collect();
        let last = out.last_mut().expect("at least one leg");
        *last = last.mul_right(c);
        out
    }

    // ---- comultiplication -----------------------------------------------------------

    /// `Delta(X^alpha)`, built multiplicatively from `Delta(X_i) = X_i (x) 1 + 1 (x) X_i`.
    pub fn coprod_monomial(&self, alpha: &MultiIndex) -> Arc<Tensor> {
        self.coprod_mono.get_or_compute(alpha.clone(), || {
            let mut out = self.tensor_zero(vec![Balance::Right]);
            let Some(i) = alpha.first_nonzero() else {
                out.add_term(vec![alpha.clone(), alpha.clone()], Poly::one(self.nvars()));
                return out;
            };
            let rest = alpha.decrement(i).expect("nonzero exponent");
            let gi = self.generator(i);
            let inner = self.coprod_monomial(&rest);
            for (legs, c) in inner.terms() {
                let (g, d) = (&legs[0], &legs[1]);
                // (X_i (x) 1 + 1 (x) X_i) * (X^g (x) X^d c)
                let xi_g = self.mono_times(&MultiIndex::unit(self.rank(), i), &self.monomial(g.clone()));
                let xi_d = self.mul(&gi, &self.monomial(d.clone()).mul_right(c));
                self.accumulate_legs(&mut out, &[xi_g, self.monomial(d.clone()).mul_right(c)], None);
                self.accumulate_legs(&mut out, &[self.monomial(g.clone()), xi_d], None);
            }
            out
        })
    }

    /// `Delta(u)` in `U_A (x)_A U_A`.
    pub fn coprod(&self, u: &EnvElement) -> Tensor {
        let mut out = self.tensor_zero(vec![Balance::Right]);
        for (alpha, a) in u.terms() {
            out.add_assign(&self.coprod_monomial(alpha).mul_right(a));
        }
        out
    }

    // ---- translation map ------------------------------------------------------------

    fn translation_sign(&self) -> Rational {
        match self.translation_rule() {
            TranslationRule::Standard => Rational::from_integer((-1).into()),
            TranslationRule::FlippedSign => Rational::from_integer(1.into()),
        }
    }

    /// `delta(X^alpha) = beta^{-1}(1 (x) X^alpha)`, folding `delta(uv) = v- u- (x) u+ v+`
    /// from the right with `delta(X_i) = 1 (x) X_i - X_i (x) 1`.
    pub fn translate_monomial(&self, alpha: &MultiIndex) -> Arc<Tensor> {
        self.translate_mono.get_or_compute(alpha.clone(), || {
            let mut out = self.tensor_zero(vec![Balance::Left]);
            let Some(i) = alpha.first_nonzero() else {
                out.add_term(vec![alpha.clone(), alpha.clone()], Poly::one(self.nvars()));
                return out;
            };
            let rest = alpha.decrement(i).expect("nonzero exponent");
            let unit = MultiIndex::unit(self.rank(), i);
            let sign = Poly::constant(self.nvars(), self.translation_sign());
            let inner = self.translate_monomial(&rest);
            for (legs, c) in inner.terms() {
                let (p, q) = (&legs[0], &legs[1]);
                let plus = self.monomial(q.clone()).mul_right(c);
                // w- (x) X_i w+
                let xi_plus = self.mono_times(&unit, &plus);
                self.accumulate_legs(&mut out, &[self.monomial(p.clone()), xi_plus], None);
                // s * w- X_i (x) w+
                let minus_xi = self.mono_mul(p, &unit);
                self.accumulate_legs(&mut out, &[(*minus_xi).clone(), plus], Some(&sign));
            }
            out
        })
    }

    /// `delta(u) = u- (x) u+` in `U_A (x)_A _AU`.
    pub fn translate(&self, u: &EnvElement) -> Tensor {
        let mut out = self.tensor_zero(vec![Balance::Left]);
        for (alpha, a) in u.terms() {
            out.add_assign(&self.translate_monomial(alpha).mul_right(a));
        }
        out
    }

    // ---- beta and its inverse -------------------------------------------------------

    /// `beta(u (x) v) = u v1 (x) v2`, from the translate flavor to the coproduct flavor.
    pub fn beta(&self, t: &Tensor) -> Tensor {
        assert_eq!(t.flavor(), Some(TensorFlavor::Translate), "beta expects U (x) _AU");
        let mut out = self.tensor_zero(vec![Balance::Right]);
        for (legs, c) in t.terms() {
            for (inner, e) in self.coprod_monomial(&legs[1]).terms() {
                let first = self.mono_mul(&legs[0], &inner[0]);
                let second = self.monomial(inner[1].clone()).mul_right(&(e * c));
                self.accumulate_legs(&mut out, &[(*first).clone(), second], None);
            }
        }
        out
    }

    /// `beta^{-1}(v (x) u) = v u- (x) u+`.
    pub fn beta_inv(&self, t: &Tensor) -> Tensor {
        assert_eq!(t.flavor(), Some(TensorFlavor::Coprod), "beta_inv expects U (x) U_A");
        let mut out = self.tensor_zero(vec![Balance::Left]);
        for (legs, c) in t.terms() {
            for (inner, e) in self.translate_monomial(&legs[1]).terms() {
                let first = self.mono_mul(&legs[0], &inner[0]);
                let second = self.monomial(inner[1].clone()).mul_right(&(e * c));
                self.accumulate_legs(&mut out, &[(*first).clone(), second], None);
            }
        }
        out
    }

    // ---- products on tensors --------------------------------------------------------

    /// Leg-wise product in the Takeuchi product `U x_A U`.
    pub fn takeuchi_mul(&self, s: &Tensor, t: &Tensor) -> Tensor {
        let mut out = self.tensor_zero(vec![Balance::Right]);
        for (l1, c) in s.terms() {
            let second_left = self.monomial(l1[1].clone()).mul_right(c);
            for (l2, d) in t.terms() {
                let first = self.mono_mul(&l1[0], &l2[0]);
                let second = self.mul(&second_left, &self.monomial(l2[1].clone()).mul_right(d));
                self.accumulate_legs(&mut out, &[(*first).clone(), second], None);
            }
        }
        out
    }

    /// Product in `U^op x_A U`: `(p (x) q)(r (x) s) = r p (x) q s`, as in
    /// `delta(uv) = v- u- (x) u+ v+`.
    pub fn translate_product(&self, s: &Tensor, t: &Tensor) -> Tensor {
        let mut out = self.tensor_zero(vec![Balance::Left]);
        for (l1, c) in s.terms() {
            let second_left = self.monomial(l1[1].clone()).mul_right(c);
            for (l2, d) in t.terms() {
                let first = self.mono_mul(&l2[0], &l1[0]);
                let second = self.mul(&second_left, &self.monomial(l2[1].clone()).mul_right(d));
                self.accumulate_legs(&mut out, &[(*first).clone(), second], None);
            }
        }
        out
    }

    /// `sum u2 * eps(u1)` for a coproduct tensor; recovers `u` from `Delta(u)`.
    pub fn counit_first_leg(&self, t: &Tensor) -> EnvElement {
        let mut out = self.zero();
        let zero = MultiIndex::zero(self.rank());
        for (legs, c) in t.terms() {
            if legs[0] == zero {
                out.add_term(legs[1].clone(), c.clone());
            }
        }
        out
    }

    /// `sum u1 * eps(u2)` for a coproduct tensor.
    pub fn counit_second_leg(&self, t: &Tensor) -> EnvElement {
        let mut out = self.zero();
        for (legs, c) in t.terms() {
            let eps = self.counit(&self.monomial(legs[1].clone()).mul_right(c));
            out.add_assign(&self.monomial(legs[0].clone()).mul_right(&eps));
        }
        out
    }

    /// Left multiplication by `a` on leg `k` of a two-leg tensor, re-canonicalized.
    pub fn lmul_leg(&self, t: &Tensor, k: usize, a: &Poly) -> Tensor {
        let mut out = self.tensor_zero(t.junctions().to_vec());
        for (legs, c) in t.terms() {
            let mut explicit = self.term_legs(legs, c);
            explicit[k] = self.lmul_coeff(a, &explicit[k]);
            self.accumulate_legs(&mut out, &explicit, None);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::Fixture;

    fn env(f: Fixture) -> Envelope {
        Envelope::new(f.presentation())
    }

    #[test]
    fn coproduct_of_generators_and_scalars() {
        let w1 = env(Fixture::W1);
        assert_eq!(w1.coprod(&w1.generator(0)).to_string(), "1⊗X1 + X1⊗1");
        let a = w1.parse("x1^2").unwrap();
        assert_eq!(w1.coprod(&a).to_string(), "1⊗x1^2");
        assert_eq!(w1.coprod(&w1.parse("X1^2").unwrap()).to_string(), "1⊗X1^2 + 2*X1⊗X1 + X1^2⊗1");
    }

    #[test]
    fn translation_of_generators_and_scalars() {
        let w1 = env(Fixture::W1);
        assert_eq!(w1.translate(&w1.generator(0)).to_string(), "1⊗X1 - X1⊗1");
        assert_eq!(
            w1.translate(&w1.parse("X1^2").unwrap()).to_string(),
            "1⊗X1^2 - 2*X1⊗X1 + X1^2⊗1"
        );
        let a = w1.parse("x1 + 3").unwrap();
        assert_eq!(w1.translate(&a).to_string(), "1⊗x1 + 3*1⊗1");
    }

    #[test]
    fn beta_examples() {
        let w1 = env(Fixture::W1);
        let t = w1.translate(&w1.generator(0));
        assert_eq!(w1.beta(&t).to_string(), "1⊗X1");
        let u = w1.parse("X1^2*x1 + X1").unwrap();
        let u1 = w1.tensor_from_legs(&[Balance::Left], &[u.clone(), w1.one()]);
        assert_eq!(w1.beta(&u1), w1.tensor_from_legs(&[Balance::Right], &[u, w1.one()]));
    }

    #[test]
    fn balancing_rules() {
        let w1 = env(Fixture::W1);
        let x = w1.parse("x1").unwrap();
        let g = w1.generator(0);
        // x (x) X1 = 1 (x) X1*x under the coproduct rule, 1 (x) x*X1 under the translate rule
        let right = w1.tensor_from_legs(&[Balance::Right], &[x.clone(), g.clone()]);
        assert_eq!(right.to_string(), "1⊗X1*x1");
        let left = w1.tensor_from_legs(&[Balance::Left], &[x, g]);
        assert_eq!(left.to_string(), "1⊗X1*x1 - 1⊗1");
    }
}
