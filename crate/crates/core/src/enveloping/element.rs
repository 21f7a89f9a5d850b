use std::collections::BTreeMap;
use std::fmt;

use crate::poly::{join_signed_terms, render_monomial, MultiIndex, Poly, Rational};

/// `sum_alpha X^alpha * a_alpha` in PBW right-coefficient normal form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct EnvElement {
    nvars: usize,
    rank: usize,
    terms: BTreeMap<MultiIndex, Poly>,
}

impl EnvElement {
    pub fn zero(nvars: usize, rank: usize) -> Self {
        EnvElement { nvars, rank, terms: BTreeMap::new() }
    }

    pub fn monomial(rank: usize, alpha: MultiIndex, a: Poly) -> Self {
        let mut out = EnvElement::zero(a.nvars(), rank);
        out.add_term(alpha, a);
        out
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rank(&self) -> usize {
        self.rank
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

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&MultiIndex, &Poly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, alpha: &MultiIndex) -> Poly {
        self.terms.get(alpha).cloned().unwrap_or_else(|| Poly::zero(self.nvars))
    }

    /// Filtration degree: the largest `|alpha|` with nonzero coefficient (0 for zero).
    pub fn degree(&self) -> u32 {
        self.terms.keys().next_back().map(MultiIndex::degree).unwrap_or(0)
    }

    pub fn add_term(&mut self, alpha: MultiIndex, a: Poly) {
        assert_eq!(alpha.len(), self.rank, "PBW index length mismatch");
        if a.is_zero() {
            return;
        }
        match self.terms.entry(alpha) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(a);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                o.get_mut().add_assign_ref(&a);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &EnvElement) {
        for (alpha, a) in &other.terms {
            self.add_term(alpha.clone(), a.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &EnvElement) {
        for (alpha, a) in &other.terms {
            self.add_term(alpha.clone(), -a);
        }
    }

    pub fn add(&self, other: &EnvElement) -> EnvElement {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &EnvElement) -> EnvElement {
        let mut out = self.clone();
        out.sub_assign(other);
        out
    }

    pub fn neg(&self) -> EnvElement {
        EnvElement {
            nvars: self.nvars,
            rank: self.rank,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> EnvElement {
        let mut out = EnvElement::zero(self.nvars, self.rank);
        for (alpha, a) in &self.terms {
            out.add_term(alpha.clone(), a.scale(c));
        }
        out
    }

    /// Right multiplication by `iota_A(a)`; in normal form this only touches coefficients.
    pub fn mul_right(&self, a: &Poly) -> EnvElement {
        if a.is_one() {
            return self.clone();
        }
        let mut out = EnvElement::zero(self.nvars, self.rank);
        for (alpha, c) in &self.terms {
            out.add_term(alpha.clone(), c * a);
        }
        out
    }

    pub fn truncate(&self, n: u32) -> EnvElement {
        EnvElement {
            nvars: self.nvars,
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .filter(|(alpha, _)| alpha.degree() <= n)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    /// Homogeneous component of degree exactly `n`.
    pub fn component(&self, n: u32) -> EnvElement {
        EnvElement {
            nvars: self.nvars,
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .filter(|(alpha, _)| alpha.degree() == n)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    /// Signed display terms `(c, "X^alpha*x^m")`, highest first.
    pub(crate) fn display_terms(&self) -> Vec<(Rational, String)> {
        let mut out = Vec::new();
        for (alpha, a) in self.terms.iter().rev() {
            let g = render_monomial(alpha, "X");
            for (m, c) in a.terms().rev() {
                let x = render_monomial(m, "x");
                let body = match (g.is_empty(), x.is_empty()) {
                    (true, _) => x,
                    (false, true) => g.clone(),
                    (false, false) => format!("{g}*{x}"),
                };
                out.push((c.clone(), body));
            }
        }
        out
    }
}

impl fmt::Display for EnvElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_signed_terms(self.display_terms()))
    }
}
