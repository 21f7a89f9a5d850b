//! The universal enveloping Hopf algebroid `U = V_A(L)` in PBW normal form.
//!
//! Elements are `sum_alpha X^alpha * a_alpha` with ordered monomials
//! `X^alpha = X1^alpha_1 ... Xr^alpha_r` and right coefficients `a_alpha` in `A`. Reordering
//! uses `X_j X_i = X_i X_j + [X_j, X_i]` and `a X_i = X_i a - omega(X_i)(a)`.
//!
//! [`Envelope`] is the computation context. It owns the presentation and write-once caches
//! for generator/monomial products, left coefficient multiplication, `Delta` and `delta` on
//! PBW monomials.

mod element;
pub mod identities;
mod tensor;

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, RwLock};

use crate::error::AlgebraError;
use crate::expr::{evaluate, parse_expr, ExprContext};
use crate::lie_rinehart::LRPresentation;
use crate::poly::{MultiIndex, Poly, Rational};

pub use element::EnvElement;
pub use tensor::{Balance, Tensor, TensorFlavor};

/// Sign convention for the translation map on generators, `delta(X) = 1 (x) X + s * X (x) 1`.
/// Only [`TranslationRule::Standard`] (`s = -1`) gives a Hopf algebroid; the flipped rule
/// exists as a negative control for the axiom suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TranslationRule {
    #[default]
    Standard,
    FlippedSign,
}

#[derive(Debug)]
struct Memo<K, V>(RwLock<HashMap<K, Arc<V>>>);

impl<K: Eq + Hash, V> Memo<K, V> {
    fn new() -> Self {
        Memo(RwLock::new(HashMap::new()))
    }

    fn get_or_compute(&self, key: K, compute: impl FnOnce() -> V) -> Arc<V> {
        if let Some(v) = self.0.read().expect("memo lock poisoned").get(&key) {
            return v.clone();
        }
        // computed outside the lock: compute may recurse into this memo
        let value = Arc::new(compute());
        self.0.write().expect("memo lock poisoned").entry(key).or_insert(value).clone()
    }
}

/// Context for computations in `V_A(L)` for a fixed presentation.
#[derive(Debug)]
pub struct Envelope {
    pres: Arc<LRPresentation>,
    rule: TranslationRule,
    gen_mono: Memo<(usize, MultiIndex), EnvElement>,
    mono_mono: Memo<(MultiIndex, MultiIndex), EnvElement>,
    coeff_mono: Memo<(MultiIndex, MultiIndex), EnvElement>,
    coprod_mono: Memo<MultiIndex, Tensor>,
    translate_mono: Memo<MultiIndex, Tensor>,
}

impl Envelope {
    pub fn new(pres: LRPresentation) -> Self {
        Self::with_rule(pres, TranslationRule::Standard)
    }

    pub fn with_rule(pres: LRPresentation, rule: TranslationRule) -> Self {
        Envelope {
            pres: Arc::new(pres),
            rule,
            gen_mono: Memo::new(),
            mono_mono: Memo::new(),
            coeff_mono: Memo::new(),
            coprod_mono: Memo::new(),
            translate_mono: Memo::new(),
        }
    }

    pub fn presentation(&self) -> &LRPresentation {
        &self.pres
    }

    pub fn translation_rule(&self) -> TranslationRule {
        self.rule
    }

    pub fn nvars(&self) -> usize {
        self.pres.nvars()
    }

    pub fn rank(&self) -> usize {
        self.pres.rank()
    }

    pub fn zero(&self) -> EnvElement {
        EnvElement::zero(self.nvars(), self.rank())
    }

    pub fn one(&self) -> EnvElement {
        self.from_poly(Poly::one(self.nvars()))
    }

    /// `iota_A(a)`.
    pub fn from_poly(&self, a: Poly) -> EnvElement {
        EnvElement::monomial(self.rank(), MultiIndex::zero(self.rank()), a)
    }

    /// `iota_L(X_{i+1})`.
    pub fn generator(&self, i: usize) -> EnvElement {
        self.monomial(MultiIndex::unit(self.rank(), i))
    }

    /// `X^alpha` with unit coefficient.
    pub fn monomial(&self, alpha: MultiIndex) -> EnvElement {
        EnvElement::monomial(self.rank(), alpha, Poly::one(self.nvars()))
    }

    /// All PBW monomials `X^alpha` with `|alpha| <= n`, ascending.
    pub fn basis(&self, n: u32) -> Vec<MultiIndex> {
        MultiIndex::up_to_degree(self.rank(), n)
    }

    /// Parses an element expression such as `X1^2*(3*x1) + X2 - 1/2`.
    pub fn parse(&self, text: &str) -> Result<EnvElement, AlgebraError> {
        evaluate(&parse_expr(text)?, self)
    }

    // ---- multiplication ------------------------------------------------------------

    /// `X^beta * X^gamma`-free left multiplication by a monomial coefficient:
    /// normal form of `x^m * X^beta`.
    fn coeff_times_mono(&self, m: &MultiIndex, beta: &MultiIndex) -> Arc<EnvElement> {
        self.coeff_mono.get_or_compute((m.clone(), beta.clone()), || {
            let k = self.nvars();
            let a = Poly::monomial(k, m.clone(), Rational::from_integer(1.into()));
            let Some(i) = beta.first_nonzero() else {
                return self.from_poly(a);
            };
            // a X_i X^rest = X_i (a X^rest) - omega_i(a) X^rest
            let rest = beta.decrement(i).expect("nonzero exponent");
            let inner = self.lmul_mono(&a, &rest);
            let mut out = self.zero();
            for (gamma, c) in inner.terms() {
                // gamma only uses generators with index >= i, so X_i X^gamma is ordered
                out.add_term(gamma.increment(i), c.clone());
            }
            let da = self.pres.anchor(i).apply(&a);
            if !da.is_zero() {
                out.sub_assign(&self.lmul_mono(&da, &rest));
            }
            out
        })
    }

    /// Normal form of `a * X^beta`.
    fn lmul_mono(&self, a: &Poly, beta: &MultiIndex) -> EnvElement {
        let mut out = self.zero();
        for (m, c) in a.terms() {
            let piece = self.coeff_times_mono(m, beta);
            out.add_assign(&piece.scale(c));
        }
        out
    }

    /// `iota_A(a) * u` in PBW normal form.
    pub fn lmul_coeff(&self, a: &Poly, u: &EnvElement) -> EnvElement {
        let mut out = self.zero();
        for (beta, b) in u.terms() {
            out.add_assign(&self.lmul_mono(a, beta).mul_right(b));
        }
        out
    }

    /// `X_j * X^beta`.
    fn gen_times_mono(&self, j: usize, beta: &MultiIndex) -> Arc<EnvElement> {
        self.gen_mono.get_or_compute((j, beta.clone()), || {
            match beta.first_nonzero() {
                Some(i) if i < j => {
                    // X_j X_i X^rest = X_i (X_j X^rest) + sum_m X_m c[j][i][m] X^rest
                    let rest = beta.decrement(i).expect("nonzero exponent");
                    let inner = self.gen_times_mono(j, &rest);
                    let mut out = self.gen_times_elem(i, &inner);
                    for m in 0..self.rank() {
                        let c = self.pres.structure(j, i, m);
                        if c.is_zero() {
                            continue;
                        }
                        let tail = self.lmul_mono(c, &rest);
                        out.add_assign(&self.gen_times_elem(m, &tail));
                    }
                    out
                }
                _ => self.monomial(beta.increment(j)),
            }
        })
    }

    /// `X_j * u`.
    fn gen_times_elem(&self, j: usize, u: &EnvElement) -> EnvElement {
        let mut out = self.zero();
        for (beta, b) in u.terms() {
            out.add_assign(&self.gen_times_mono(j, beta).mul_right(b));
        }
        out
    }

    /// `X^alpha * X^beta`.
    pub fn mono_mul(&self, alpha: &MultiIndex, beta: &MultiIndex) -> Arc<EnvElement> {
        match (alpha.last_nonzero(), beta.first_nonzero()) {
            (None, _) => Arc::new(self.monomial(beta.clone())),
            (Some(j), Some(i)) if j <= i => Arc::new(self.monomial(alpha.add(beta))),
            (Some(_), None) => Arc::new(self.monomial(alpha.clone())),
            (Some(j), Some(_)) => self.mono_mono.get_or_compute((alpha.clone(), beta.clone()), || {
                // X^alpha X^beta = X^head (X_j X^beta)
                let head = alpha.decrement(j).expect("nonzero exponent");
                let right = self.gen_times_mono(j, beta);
                let mut out = self.zero();
                for (gamma, c) in right.terms() {
                    out.add_assign(&self.mono_mul(&head, gamma).mul_right(c));
                }
                out
            }),
        }
    }

    /// `X^alpha * u`.
    pub fn mono_times(&self, alpha: &MultiIndex, u: &EnvElement) -> EnvElement {
        let mut out = self.zero();
        for (gamma, c) in u.terms() {
            out.add_assign(&self.mono_mul(alpha, gamma).mul_right(c));
        }
        out
    }

    /// PBW normal form of `u * v`.
    pub fn mul(&self, u: &EnvElement, v: &EnvElement) -> EnvElement {
        let mut out = self.zero();
        for (alpha, a) in u.terms() {
            // X^alpha a X^beta b = X^alpha (a X^beta) b
            let av = self.lmul_coeff(a, v);
            out.add_assign(&self.mono_times(alpha, &av));
        }
        out
    }

    pub fn pow(&self, u: &EnvElement, e: u32) -> EnvElement {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, u);
        }
        acc
    }

    // ---- counit, filtration, dual basis ---------------------------------------------

    /// `epsilon(u)`: the coefficient of the empty monomial.
    pub fn counit(&self, u: &EnvElement) -> Poly {
        u.coefficient(&MultiIndex::zero(self.rank()))
    }

    /// The retraction `theta_n`: drops all terms of degree above `n`.
    pub fn truncate_theta(&self, u: &EnvElement, n: u32) -> EnvElement {
        u.truncate(n)
    }

    /// The distinguished dual basis of `F^n U`: PBW monomials `X^alpha`, `|alpha| <= n`,
    /// paired with the coordinate functionals reading `a_alpha`.
    pub fn dual_basis(&self, n: u32) -> Vec<(MultiIndex, DualBasisFunctional)> {
        self.basis(n)
            .into_iter()
            .map(|alpha| (alpha.clone(), DualBasisFunctional { alpha }))
            .collect()
    }
}

/// The coordinate functional `lambda_alpha(sum X^beta a_beta) = a_alpha`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualBasisFunctional {
    alpha: MultiIndex,
}

impl DualBasisFunctional {
    pub fn alpha(&self) -> &MultiIndex {
        &self.alpha
    }

    pub fn apply(&self, u: &EnvElement) -> Poly {
        u.coefficient(&self.alpha)
    }
}

impl ExprContext for Envelope {
    type Value = EnvElement;

    fn number(&self, c: &Rational) -> EnvElement {
        self.from_poly(Poly::constant(self.nvars(), c.clone()))
    }

    fn variable(&self, index: usize, position: usize) -> Result<EnvElement, AlgebraError> {
        if index < self.nvars() {
            Ok(self.from_poly(Poly::var(self.nvars(), index)))
        } else {
            Err(AlgebraError::UnknownVariable { name: format!("x{}", index + 1), position })
        }
    }

    fn generator(&self, index: usize, position: usize) -> Result<EnvElement, AlgebraError> {
        if index < self.rank() {
            Ok(self.generator(index))
        } else {
            Err(AlgebraError::UnknownVariable { name: format!("X{}", index + 1), position })
        }
    }

    fn add(&self, a: &EnvElement, b: &EnvElement) -> EnvElement {
        let mut out = a.clone();
        out.add_assign(b);
        out
    }

    fn sub(&self, a: &EnvElement, b: &EnvElement) -> EnvElement {
        let mut out = a.clone();
        out.sub_assign(b);
        out
    }

    fn mul(&self, a: &EnvElement, b: &EnvElement) -> EnvElement {
        Envelope::mul(self, a, b)
    }

    fn neg(&self, a: &EnvElement) -> EnvElement {
        a.neg()
    }
}
