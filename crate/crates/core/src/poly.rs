//! Exact rational scalars and sparse multivariate polynomials.
//!
//! The base algebra is `A = Q[x1..xk]`. Polynomials are stored as sorted maps from exponent
//! vectors to nonzero rationals; the map order is graded-lexicographic, which is also the
//! (reversed) printing order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::AlgebraError;

/// Exact rational number with arbitrary precision numerator and denominator.
pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// An exponent vector, used both for commutative monomials `x^a` and for PBW words `X^a`.
///
/// Ordered graded-lexicographically: total degree first, then lexicographically with the
/// first coordinate most significant.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn zero(len: usize) -> Self {
        MultiIndex(vec![0; len])
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = vec![0; len];
        v[i] = 1;
        MultiIndex(v)
    }

    pub fn new(exponents: Vec<u32>) -> Self {
        MultiIndex(exponents)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn add(&self, other: &MultiIndex) -> MultiIndex {
        debug_assert_eq!(self.len(), other.len());
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise difference, `None` if some coordinate would go negative.
    pub fn checked_sub(&self, other: &MultiIndex) -> Option<MultiIndex> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(MultiIndex)
    }

    pub fn increment(&self, i: usize) -> MultiIndex {
        let mut v = self.0.clone();
        v[i] += 1;
        MultiIndex(v)
    }

    pub fn decrement(&self, i: usize) -> Option<MultiIndex> {
        let mut v = self.0.clone();
        v[i] = v[i].checked_sub(1)?;
        Some(MultiIndex(v))
    }

    pub fn first_nonzero(&self) -> Option<usize> {
        self.0.iter().position(|&e| e > 0)
    }

    pub fn last_nonzero(&self) -> Option<usize> {
        self.0.iter().rposition(|&e| e > 0)
    }

    /// `prod_i a_i!`
    pub fn factorial(&self) -> BigInt {
        let mut acc = BigInt::one();
        for &e in &self.0 {
            for j in 2..=e {
                acc *= BigInt::from(j);
            }
        }
        acc
    }

    /// All exponent vectors of the given length with total degree exactly `degree`,
    /// in ascending graded-lex order.
    pub fn of_degree(len: usize, degree: u32) -> Vec<MultiIndex> {
        fn rec(len: usize, remaining: u32, prefix: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
            if prefix.len() + 1 == len {
                prefix.push(remaining);
                out.push(MultiIndex(prefix.clone()));
                prefix.pop();
                return;
            }
            for e in 0..=remaining {
                prefix.push(e);
                rec(len, remaining - e, prefix, out);
                prefix.pop();
            }
        }
        if len == 0 {
            return if degree == 0 { vec![MultiIndex(vec![])] } else { vec![] };
        }
        let mut out = Vec::new();
        rec(len, degree, &mut Vec::with_capacity(len), &mut out);
        out.sort();
        out
    }

    /// All exponent vectors with total degree at most `max_degree`, ascending.
    pub fn up_to_degree(len: usize, max_degree: u32) -> Vec<MultiIndex> {
        (0..=max_degree).flat_map(|d| MultiIndex::of_degree(len, d)).collect()
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Vec<u32>> for MultiIndex {
    fn from(v: Vec<u32>) -> Self {
        MultiIndex(v)
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "]")
    }
}

/// Sparse polynomial in `nvars` commuting variables with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<MultiIndex, Rational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Poly::monomial(nvars, MultiIndex::zero(nvars), c)
    }

    pub fn from_int(nvars: usize, c: i64) -> Self {
        Poly::constant(nvars, int(c))
    }

    /// The coordinate function `x_{i+1}` (zero based `i`).
    pub fn var(nvars: usize, i: usize) -> Self {
        Poly::monomial(nvars, MultiIndex::unit(nvars, i), Rational::one())
    }

    pub fn monomial(nvars: usize, exponents: MultiIndex, c: Rational) -> Self {
        assert_eq!(exponents.len(), nvars, "exponent vector length mismatch");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponents, c);
        }
        Poly { nvars, terms }
    }

    /// Builds a polynomial from possibly repeated, possibly zero terms.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (MultiIndex, Rational)>,
    {
        let mut p = Poly::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().next().is_some_and(|(m, c)| m.is_zero() && c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&MultiIndex, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &MultiIndex) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&MultiIndex::zero(self.nvars))
    }

    /// `Some(c)` when the polynomial is the constant `c`.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next()?;
                m.is_zero().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(MultiIndex::degree)
    }

    pub fn leading_term(&self) -> Option<(&MultiIndex, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: MultiIndex, c: Rational) {
        assert_eq!(m.len(), self.nvars, "exponent vector length mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign_ref(&mut self, other: &Poly) {
        self.check_vars(other).expect("variable count mismatch");
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn sub_assign_ref(&mut self, other: &Poly) {
        self.check_vars(other).expect("variable count mismatch");
        for (m, c) in &other.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }

    fn check_vars(&self, other: &Poly) -> Result<(), AlgebraError> {
        if self.nvars == other.nvars {
            Ok(())
        } else {
            Err(AlgebraError::VariableCountMismatch { left: self.nvars, right: other.nvars })
        }
    }

    pub fn try_sum(&self, other: &Poly) -> Result<Poly, AlgebraError> {
        self.check_vars(other)?;
        let mut out = self.clone();
        out.add_assign_ref(other);
        Ok(out)
    }

    pub fn try_product(&self, other: &Poly) -> Result<Poly, AlgebraError> {
        self.check_vars(other)?;
        let mut out = Poly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.add(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Partial derivative with respect to `x_{i+1}`.
    pub fn partial(&self, i: usize) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.get(i);
            if e > 0 {
                out.add_term(m.decrement(i).expect("positive exponent"), c * int(e as i64));
            }
        }
        out
    }

    /// Iterated partial derivative `d^gamma`.
    pub fn partial_multi(&self, gamma: &MultiIndex) -> Poly {
        let mut out = self.clone();
        for i in 0..gamma.len() {
            for _ in 0..gamma.get(i) {
                out = out.partial(i);
            }
        }
        out
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        let (lm, lc) = divisor.leading_term()?;
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.nvars);
        while let Some((m, c)) = rem.leading_term() {
            let shift = m.checked_sub(&lm)?;
            let q = c / &lc;
            let step = Poly::monomial(self.nvars, shift, q);
            rem.sub_assign_ref(&(&step * divisor));
            quot.add_assign_ref(&step);
        }
        Some(quot)
    }

    /// Embeds into a ring with `nvars + extra` variables (new variables appended).
    pub fn extend_vars(&self, extra: usize, offset: usize) -> Poly {
        let n = self.nvars + extra;
        Poly::from_terms(
            n,
            self.terms.iter().map(|(m, c)| {
                let mut v = vec![0; n];
                for (i, &e) in m.as_slice().iter().enumerate() {
                    v[i + offset] = e;
                }
                (MultiIndex::new(v), c.clone())
            }),
        )
    }

    /// Substitutes `x_i -> images[i]`.
    pub fn substitute(&self, images: &[Poly]) -> Poly {
        assert_eq!(images.len(), self.nvars);
        let target = images.first().map(Poly::nvars).unwrap_or(0);
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut term = Poly::constant(target, c.clone());
            for (i, &e) in m.as_slice().iter().enumerate() {
                if e > 0 {
                    term = &term * &images[i].pow(e);
                }
            }
            out.add_assign_ref(&term);
        }
        out
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.try_sum(rhs).expect("variable count mismatch")
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out.sub_assign_ref(rhs);
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.try_product(rhs).expect("variable count mismatch")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Rational::one())
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, rhs: Poly) -> Poly {
        self.add_assign_ref(&rhs);
        self
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(mut self, rhs: Poly) -> Poly {
        self.sub_assign_ref(&rhs);
        self
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

pub(crate) fn render_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Renders `x1^2*x3`; empty string for the unit monomial.
pub(crate) fn render_monomial(m: &MultiIndex, symbol: &str) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.as_slice().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(format!("{symbol}{}", i + 1)),
            _ => parts.push(format!("{symbol}{}^{e}", i + 1)),
        }
    }
    parts.join("*")
}

/// Joins signed terms `(coefficient, body)` into `a - b + c` form. An empty body denotes a
/// scalar term.
pub(crate) fn join_signed_terms<I>(terms: I) -> String
where
    I: IntoIterator<Item = (Rational, String)>,
{
    let mut out = String::new();
    for (c, body) in terms {
        let negative = c.is_negative();
        let abs = c.abs();
        let piece = if body.is_empty() {
            render_rational(&abs)
        } else if abs.is_one() {
            body
        } else {
            format!("{}*{}", render_rational(&abs), body)
        };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        out.push_str(&piece);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for Poly {
    /// Deterministic rendering, highest graded-lex term first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = join_signed_terms(
            self.terms.iter().rev().map(|(m, c)| (c.clone(), render_monomial(m, "x"))),
        );
        f.write_str(&s)
    }
}

/// A derivation `sum_j D_j d/dx_j` of the polynomial algebra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Derivation {
    components: Vec<Poly>,
}

impl Derivation {
    pub fn new(components: Vec<Poly>) -> Result<Self, AlgebraError> {
        let k = components.len();
        for c in &components {
            if c.nvars() != k {
                return Err(AlgebraError::VariableCountMismatch { left: k, right: c.nvars() });
            }
        }
        Ok(Derivation { components })
    }

    pub fn zero(nvars: usize) -> Self {
        Derivation { components: vec![Poly::zero(nvars); nvars] }
    }

    /// `d/dx_{i+1}`.
    pub fn coordinate(nvars: usize, i: usize) -> Self {
        let mut components = vec![Poly::zero(nvars); nvars];
        components[i] = Poly::one(nvars);
        Derivation { components }
    }

    pub fn nvars(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Poly] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Poly::is_zero)
    }

    pub fn try_apply(&self, p: &Poly) -> Result<Poly, AlgebraError> {
        if p.nvars() != self.nvars() {
            return Err(AlgebraError::VariableCountMismatch { left: self.nvars(), right: p.nvars() });
        }
        Ok(self.apply(p))
    }

    pub fn apply(&self, p: &Poly) -> Poly {
        let mut out = Poly::zero(self.nvars());
        for (j, c) in self.components.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let dp = p.partial(j);
            if !dp.is_zero() {
                out.add_assign_ref(&(c * &dp));
            }
        }
        out
    }

    /// The commutator `[self, other] = self o other - other o self`, again a derivation.
    pub fn commutator(&self, other: &Derivation) -> Derivation {
        let components = (0..self.nvars())
            .map(|j| {
                let xj = Poly::var(self.nvars(), j);
                &self.apply(&other.apply(&xj)) - &other.apply(&self.apply(&xj))
            })
            .collect();
        Derivation { components }
    }

    pub fn scale_by(&self, a: &Poly) -> Derivation {
        Derivation { components: self.components.iter().map(|c| c * a).collect() }
    }

    pub fn add(&self, other: &Derivation) -> Derivation {
        Derivation {
            components: self.components.iter().zip(&other.components).map(|(a, b)| a + b).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_poly;

    fn p(s: &str) -> Poly {
        parse_poly(s, 2).unwrap()
    }

    #[test]
    fn sums() {
        assert!(p("x1").try_sum(&p("-x1")).unwrap().is_zero());
        assert_eq!(&p("x1^2+1") + &p("x1"), p("x1^2 + x1 + 1"));
        assert_eq!(&p("1/2*x1") + &p("1/3*x1"), p("5/6*x1"));
    }

    #[test]
    fn products() {
        assert_eq!(&p("x1+1") * &p("x1-1"), p("x1^2 - 1"));
        let q = p("3*x1*x2 - 7/5");
        assert_eq!(&q * &Poly::one(2), q);
        assert_eq!(&p("x1+x2") * &p("x1+x2"), p("x1^2 + 2*x1*x2 + x2^2"));
    }

    #[test]
    fn mismatch_is_an_error() {
        let a = Poly::var(1, 0);
        let b = Poly::var(2, 0);
        assert!(matches!(a.try_sum(&b), Err(AlgebraError::VariableCountMismatch { .. })));
        assert!(a.try_product(&b).is_err());
        assert!(Derivation::coordinate(2, 0).try_apply(&a).is_err());
    }

    #[test]
    fn derivations() {
        let d = Derivation::coordinate(1, 0);
        let x = Poly::var(1, 0);
        assert_eq!(d.apply(&x.pow(3)), x.pow(2).scale(&int(3)));
        let euler = d.scale_by(&x);
        assert_eq!(euler.apply(&x), x);
        assert!(euler.apply(&Poly::from_int(1, 5)).is_zero());
    }

    #[test]
    fn exact_division() {
        let a = p("x1^2 - x2^2");
        assert_eq!(a.div_exact(&p("x1 - x2")), Some(p("x1 + x2")));
        assert_eq!(p("x1^2 + 1").div_exact(&p("x1")), None);
        assert_eq!(p("6").div_exact(&p("4")), Some(p("3/2")));
    }

    #[test]
    fn rendering() {
        assert_eq!(p("3*x1^2 - 1/2").to_string(), "3*x1^2 - 1/2");
        assert_eq!(p("0*x1").to_string(), "0");
        assert_eq!(p("-x2 + x1*x2").to_string(), "x1*x2 - x2");
        assert_eq!(p("-1").to_string(), "-1");
    }

    #[test]
    fn monomial_enumeration() {
        assert_eq!(MultiIndex::of_degree(2, 2).len(), 3);
        assert_eq!(MultiIndex::up_to_degree(2, 1).len(), 3);
        assert_eq!(MultiIndex::up_to_degree(3, 2).len(), 10);
        let all = MultiIndex::up_to_degree(2, 3);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }
}
