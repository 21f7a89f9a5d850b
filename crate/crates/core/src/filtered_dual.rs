//! The convolution algebra `U*` at finite precision.
//!
//! A right `A`-linear functional on `U` is determined by its values on PBW monomials. A
//! [`TruncatedFunctional`] of precision `n` stores `f(X^alpha)` for `|alpha| <= n`, i.e. an
//! element of `(F^n U)* = U* / F_{n+1} U*`. Functionals given by a rule for every monomial
//! implement [`FunctionalOracle`] and are truncated on demand.

use std::collections::BTreeMap;
use std::fmt;

use crate::enveloping::{EnvElement, Envelope};
use crate::error::AlgebraError;
use crate::expr::parse_poly;
use crate::poly::{MultiIndex, Poly};

/// A rule `alpha -> f(X^alpha)` defined on every PBW monomial.
pub trait FunctionalOracle: Send + Sync {
    fn value(&self, env: &Envelope, alpha: &MultiIndex) -> Poly;

    fn truncate(&self, env: &Envelope, n: u32) -> TruncatedFunctional {
        let mut out = TruncatedFunctional::zero(env, n);
        for alpha in env.basis(n) {
            let v = self.value(env, &alpha);
            out.set(alpha, v);
        }
        out
    }
}

/// The counit `epsilon`, the unit of `U*`.
#[derive(Clone, Copy, Debug, Default)]
pub struct CounitOracle;

impl FunctionalOracle for CounitOracle {
    fn value(&self, env: &Envelope, alpha: &MultiIndex) -> Poly {
        if alpha.is_zero() {
            Poly::one(env.nvars())
        } else {
            Poly::zero(env.nvars())
        }
    }
}

/// `vartheta(a' (x) a)(u) = eps(a u) a'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vartheta {
    pub source: Poly,
    pub target: Poly,
}

pub fn vartheta(source: Poly, target: Poly) -> Vartheta {
    Vartheta { source, target }
}

impl FunctionalOracle for Vartheta {
    fn value(&self, env: &Envelope, alpha: &MultiIndex) -> Poly {
        let u = env.lmul_coeff(&self.target, &env.monomial(alpha.clone()));
        &env.counit(&u) * &self.source
    }
}

/// Extension by zero of a finite table, `E_lambda` style.
impl FunctionalOracle for TruncatedFunctional {
    fn value(&self, env: &Envelope, alpha: &MultiIndex) -> Poly {
        self.values.get(alpha).cloned().unwrap_or_else(|| Poly::zero(env.nvars()))
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedFunctional {
    nvars: usize,
    rank: usize,
    precision: u32,
    values: BTreeMap<MultiIndex, Poly>,
}

impl TruncatedFunctional {
    pub fn zero(env: &Envelope, precision: u32) -> Self {
        TruncatedFunctional { nvars: env.nvars(), rank: env.rank(), precision, values: BTreeMap::new() }
    }

    /// The counit at the given precision.
    pub fn counit(env: &Envelope, precision: u32) -> Self {
        CounitOracle.truncate(env, precision)
    }

    /// The coordinate functional `lambda_alpha` at precision `n`.
    pub fn dual_basis(env: &Envelope, alpha: &MultiIndex, n: u32) -> Self {
        let mut out = Self::zero(env, n);
        out.set(alpha.clone(), Poly::one(env.nvars()));
        out
    }

    /// Builds a functional from `(alpha, value)` pairs; entries beyond the precision are
    /// rejected.
    pub fn from_table<I>(env: &Envelope, precision: u32, table: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = (MultiIndex, Poly)>,
    {
        let mut out = Self::zero(env, precision);
        for (alpha, v) in table {
            if alpha.len() != env.rank() {
                return Err(AlgebraError::Dimension(format!(
                    "multi-index {alpha} has length {}, expected {}",
                    alpha.len(),
                    env.rank()
                )));
            }
            if alpha.degree() > precision {
                return Err(AlgebraError::PrecisionExceeded { degree: alpha.degree(), precision });
            }
            if v.nvars() != env.nvars() {
                return Err(AlgebraError::VariableCountMismatch { left: env.nvars(), right: v.nvars() });
            }
            out.set(alpha, v);
        }
        Ok(out)
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// Nonzero entries in ascending order of `alpha`.
    pub fn entries(&self) -> impl Iterator<Item = (&MultiIndex, &Poly)> {
        self.values.iter()
    }

    fn set(&mut self, alpha: MultiIndex, v: Poly) {
        debug_assert!(alpha.degree() <= self.precision);
        if v.is_zero() {
            self.values.remove(&alpha);
        } else {
            self.values.insert(alpha, v);
        }
    }

    /// `f(X^alpha)`.
    pub fn at(&self, alpha: &MultiIndex) -> Result<Poly, AlgebraError> {
        if alpha.degree() > self.precision {
            return Err(AlgebraError::PrecisionExceeded { degree: alpha.degree(), precision: self.precision });
        }
        Ok(self.values.get(alpha).cloned().unwrap_or_else(|| Poly::zero(self.nvars)))
    }

    /// `f(u) = sum_alpha f(X^alpha) a_alpha` for `u = sum X^alpha a_alpha`.
    pub fn eval(&self, u: &EnvElement) -> Result<Poly, AlgebraError> {
        if u.degree() > self.precision && !u.is_zero() {
            return Err(AlgebraError::PrecisionExceeded { degree: u.degree(), precision: self.precision });
        }
        let mut out = Poly::zero(self.nvars);
        for (alpha, a) in u.terms() {
            if let Some(v) = self.values.get(alpha) {
                out.add_assign_ref(&(v * a));
            }
        }
        Ok(out)
    }

    /// `tau*_{m,n}`: restriction to `F^m U`.
    pub fn restrict(&self, m: u32) -> TruncatedFunctional {
        let m = m.min(self.precision);
        TruncatedFunctional {
            nvars: self.nvars,
            rank: self.rank,
            precision: m,
            values: self
                .values
                .iter()
                .filter(|(alpha, _)| alpha.degree() <= m)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &TruncatedFunctional) -> TruncatedFunctional {
        let p = self.precision.min(other.precision);
        let mut out = self.restrict(p);
        for (alpha, v) in other.values.iter().filter(|(a, _)| a.degree() <= p) {
            let sum = &out.values.get(alpha).cloned().unwrap_or_else(|| Poly::zero(self.nvars)) + v;
            out.set(alpha.clone(), sum);
        }
        out
    }

    pub fn neg(&self) -> TruncatedFunctional {
        TruncatedFunctional {
            values: self.values.iter().map(|(k, v)| (k.clone(), -v)).collect(),
            ..self.clone()
        }
    }

    pub fn sub(&self, other: &TruncatedFunctional) -> TruncatedFunctional {
        self.add(&other.neg())
    }

    /// `f * a`: pointwise multiplication of values by `a` (the `A`-module structure
    /// `f(u) a`, which is `t*(a)`-multiplication).
    pub fn mul_poly(&self, a: &Poly) -> TruncatedFunctional {
        let mut out = Self { values: BTreeMap::new(), ..self.clone() };
        for (alpha, v) in &self.values {
            out.set(alpha.clone(), v * a);
        }
        out
    }

    /// `(f <- u)(v) = f(u v)`, at precision `precision - deg(u)`.
    pub fn shift(&self, env: &Envelope, u: &EnvElement) -> Result<TruncatedFunctional, AlgebraError> {
        let d = u.degree();
        if d > self.precision {
            return Err(AlgebraError::PrecisionExceeded { degree: d, precision: self.precision });
        }
        let n = self.precision - d;
        let mut out = TruncatedFunctional::zero(env, n);
        for beta in env.basis(n) {
            let v = self.eval(&env.mul(u, &env.monomial(beta.clone())))?;
            out.set(beta, v);
        }
        Ok(out)
    }

    /// `(f <- a)(v) = f(a v)` for `a` in `A`; keeps the precision.
    pub fn shift_poly(&self, env: &Envelope, a: &Poly) -> TruncatedFunctional {
        let mut out = TruncatedFunctional::zero(env, self.precision);
        for beta in env.basis(self.precision) {
            let v = self.eval(&env.lmul_coeff(a, &env.monomial(beta.clone()))).expect("degree preserved");
            out.set(beta, v);
        }
        out
    }

    /// The largest `k <= precision + 1` such that `f` vanishes on `F^(k-1) U`.
    pub fn vanishing_level(&self) -> u32 {
        self.values.keys().map(MultiIndex::degree).min().unwrap_or(self.precision + 1)
    }
}

impl fmt::Display for TruncatedFunctional {
    /// `{[0]: x1, [1]: -1} @2`; zero entries are omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let entries: Vec<String> = self.values.iter().map(|(alpha, v)| format!("{alpha}: {v}")).collect();
        write!(f, "{{{}}} @{}", entries.join(", "), self.precision)
    }
}

fn offset_error(err: AlgebraError, offset: usize) -> AlgebraError {
    match err {
        AlgebraError::Syntax { position, message } => AlgebraError::Syntax { position: position + offset, message },
        AlgebraError::UnknownVariable { name, position } => {
            AlgebraError::UnknownVariable { name, position: position + offset }
        }
        other => other,
    }
}

fn parse_poly_at(text: &str, offset: usize, nvars: usize) -> Result<Poly, AlgebraError> {
    parse_poly(text, nvars).map_err(|e| offset_error(e, offset))
}

fn parse_index(text: &str, offset: usize, rank: usize) -> Result<MultiIndex, AlgebraError> {
    let inner = text.trim();
    let lead = offset + text.len() - text.trim_start().len();
    let body = inner
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| AlgebraError::Syntax { position: lead, message: "expected a multi-index '[a,b,...]'".into() })?;
    let exponents = body
        .split(',')
        .map(|part| part.trim().parse::<u32>())
        .collect::<Result<Vec<u32>, _>>()
        .map_err(|_| AlgebraError::Syntax { position: lead, message: format!("bad multi-index '{inner}'") })?;
    if exponents.len() != rank {
        return Err(AlgebraError::Syntax {
            position: lead,
            message: format!("multi-index '{inner}' must have {rank} entries"),
        });
    }
    Ok(MultiIndex::new(exponents))
}

/// Parses a functional literal at the given precision: `eps`, `theta(a'; a)` or a table
/// `{[alpha]: poly, ...}`.
pub fn parse_functional(env: &Envelope, text: &str, precision: u32) -> Result<TruncatedFunctional, AlgebraError> {
    let k = env.nvars();
    let trimmed = text.trim();
    let lead = text.len() - text.trim_start().len();
    if trimmed == "eps" {
        return Ok(TruncatedFunctional::counit(env, precision));
    }
    if let Some(args) = trimmed.strip_prefix("theta(").and_then(|t| t.strip_suffix(')')) {
        let start = lead + "theta(".len();
        let Some((left, right)) = args.split_once(';') else {
            return Err(AlgebraError::Syntax { position: start, message: "expected 'theta(a'; a)'".into() });
        };
        let source = parse_poly_at(left, start, k)?;
        let target = parse_poly_at(right, start + left.len() + 1, k)?;
        return Ok(vartheta(source, target).truncate(env, precision));
    }
    if let Some(body) = trimmed.strip_prefix('{').and_then(|t| t.strip_suffix('}')) {
        let mut table = Vec::new();
        let mut depth = 0i32;
        let mut start = 0;
        let base = lead + 1;
        let mut pieces = Vec::new();
        for (i, ch) in body.char_indices() {
            match ch {
                '[' | '(' => depth += 1,
                ']' | ')' => depth -= 1,
                ',' if depth == 0 => {
                    pieces.push((start, &body[start..i]));
                    start = i + 1;
                }
                _ => {}
            }
        }
        pieces.push((start, &body[start..]));
        for (at, piece) in pieces {
            if piece.trim().is_empty() {
                if body.trim().is_empty() {
                    continue;
                }
                return Err(AlgebraError::Syntax { position: base + at, message: "empty table entry".into() });
            }
            let Some((index, value)) = piece.split_once(':') else {
                return Err(AlgebraError::Syntax { position: base + at, message: "expected '[alpha]: poly'".into() });
            };
            let alpha = parse_index(index, base + at, env.rank())?;
            let v = parse_poly_at(value, base + at + index.len() + 1, k)?;
            table.push((alpha, v));
        }
        return TruncatedFunctional::from_table(env, precision, table);
    }
    Err(AlgebraError::Syntax {
        position: lead,
        message: "expected 'eps', 'theta(a'; a)' or '{[alpha]: poly, ...}'".into(),
    })
}

/// `(f * g)(X^alpha) = sum f(X^beta) g(X^gamma) c` over `Delta(X^alpha)`; the result has the
/// smaller of the two precisions.
pub fn convolve(env: &Envelope, f: &TruncatedFunctional, g: &TruncatedFunctional) -> TruncatedFunctional {
    let n = f.precision.min(g.precision);
    let mut out = TruncatedFunctional::zero(env, n);
    for alpha in env.basis(n) {
        let mut acc = Poly::zero(env.nvars());
        for (legs, c) in env.coprod_monomial(&alpha).terms() {
            let (Some(fv), Some(gv)) = (f.values.get(&legs[0]), g.values.get(&legs[1])) else {
                continue;
            };
            acc.add_assign_ref(&(&(fv * gv) * c));
        }
        out.set(alpha, acc);
    }
    out
}

/// `f^{*e}`, with `f^{*0} = eps`.
pub fn convolve_power(env: &Envelope, f: &TruncatedFunctional, e: u32) -> TruncatedFunctional {
    let mut acc = TruncatedFunctional::counit(env, f.precision);
    for _ in 0..e {
        acc = convolve(env, &acc, f);
    }
    acc
}

/// An element `sum_alpha g_alpha (x) lambda_alpha` of `(F^m U)* (x)_A (F^n U)*`, stored as
/// `table[(beta, alpha)] = g_alpha(X^beta)` for `|beta| <= m`, `|alpha| <= n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorFunctional {
    nvars: usize,
    m: u32,
    n: u32,
    table: BTreeMap<(MultiIndex, MultiIndex), Poly>,
}

impl TensorFunctional {
    pub fn zero(env: &Envelope, m: u32, n: u32) -> Self {
        TensorFunctional { nvars: env.nvars(), m, n, table: BTreeMap::new() }
    }

    pub fn levels(&self) -> (u32, u32) {
        (self.m, self.n)
    }

    pub fn entry(&self, beta: &MultiIndex, alpha: &MultiIndex) -> Poly {
        self.table.get(&(beta.clone(), alpha.clone())).cloned().unwrap_or_else(|| Poly::zero(self.nvars))
    }

    pub(crate) fn add_entry(&mut self, beta: MultiIndex, alpha: MultiIndex, v: Poly) {
        if v.is_zero() {
            return;
        }
        let key = (beta, alpha);
        let sum = &self.table.get(&key).cloned().unwrap_or_else(|| Poly::zero(self.nvars)) + &v;
        if sum.is_zero() {
            self.table.remove(&key);
        } else {
            self.table.insert(key, sum);
        }
    }

    /// The component `g_alpha` as a functional of precision `m`.
    pub fn component(&self, env: &Envelope, alpha: &MultiIndex) -> TruncatedFunctional {
        let mut out = TruncatedFunctional::zero(env, self.m);
        for ((beta, a), v) in &self.table {
            if a == alpha {
                out.set(beta.clone(), v.clone());
            }
        }
        out
    }

    /// The matrix with rows `beta` (`|beta| <= m`) and columns `alpha` (`|alpha| <= n`).
    pub fn matrix(&self, env: &Envelope) -> Vec<Vec<Poly>> {
        let cols = env.basis(self.n);
        env.basis(self.m).iter().map(|beta| cols.iter().map(|alpha| self.entry(beta, alpha)).collect()).collect()
    }

    /// `phi_{m,n}^{-1}` direction: the value on `x (x) y` with `x` in `F^n U`, `y` in `F^m U`,
    /// `sum_alpha g_alpha(lambda_alpha(x) y)`.
    pub fn evaluate(&self, env: &Envelope, x: &EnvElement, y: &EnvElement) -> Result<Poly, AlgebraError> {
        if x.degree() > self.n {
            return Err(AlgebraError::PrecisionExceeded { degree: x.degree(), precision: self.n });
        }
        if y.degree() > self.m {
            return Err(AlgebraError::PrecisionExceeded { degree: y.degree(), precision: self.m });
        }
        let mut out = Poly::zero(self.nvars);
        for (alpha, a) in x.terms() {
            let shifted = env.lmul_coeff(a, y);
            for (beta, b) in shifted.terms() {
                if let Some(v) = self.table.get(&(beta.clone(), alpha.clone())) {
                    out.add_assign_ref(&(v * b));
                }
            }
        }
        Ok(out)
    }
}

/// `phi_{m,n}` on `sum_i f_i (x) g_i` with `f_i` at precision `m` and `g_i` at precision
/// `n`: `table[(beta, alpha)] = sum_i f_i(g_i(X^alpha) X^beta)`.
pub fn phi_mn(
    env: &Envelope,
    parts: &[(TruncatedFunctional, TruncatedFunctional)],
    m: u32,
    n: u32,
) -> Result<TensorFunctional, AlgebraError> {
    let mut out = TensorFunctional::zero(env, m, n);
    for (f, g) in parts {
        if f.precision != m || g.precision != n {
            return Err(AlgebraError::LevelMismatch {
                expected_m: m,
                expected_n: n,
                got_m: f.precision,
                got_n: g.precision,
            });
        }
        for alpha in env.basis(n) {
            let ga = g.at(&alpha)?;
            if ga.is_zero() {
                continue;
            }
            for beta in env.basis(m) {
                let v = f.eval(&env.lmul_coeff(&ga, &env.monomial(beta.clone())))?;
                out.add_entry(beta, alpha.clone(), v);
            }
        }
    }
    Ok(out)
}

/// Direct evaluation of `sum_i f_i (x) g_i` on `x (x) y` as `sum_i f_i(g_i(x) y)`.
pub fn evaluate_parts(
    env: &Envelope,
    parts: &[(TruncatedFunctional, TruncatedFunctional)],
    x: &EnvElement,
    y: &EnvElement,
) -> Result<Poly, AlgebraError> {
    let mut out = Poly::zero(env.nvars());
    for (f, g) in parts {
        out.add_assign_ref(&f.eval(&env.lmul_coeff(&g.eval(x)?, y))?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_poly;
    use crate::fixtures::Fixture;

    fn p(s: &str, k: usize) -> Poly {
        parse_poly(s, k).unwrap()
    }

    fn table(f: &TruncatedFunctional) -> Vec<String> {
        f.entries().map(|(a, v)| format!("{a}:{v}")).collect()
    }

    #[test]
    fn truncation_examples() {
        let w1 = Envelope::new(Fixture::W1.presentation());
        assert_eq!(table(&CounitOracle.truncate(&w1, 2)), ["[0]:1"]);
        let t = vartheta(p("1", 1), p("x1", 1)).truncate(&w1, 2);
        assert_eq!(table(&t), ["[0]:x1", "[1]:-1"]);
        assert_eq!(t.to_string(), "{[0]: x1, [1]: -1} @2");
        assert_eq!(t.restrict(0), vartheta(p("1", 1), p("x1", 1)).truncate(&w1, 0));
    }

    #[test]
    fn evaluation() {
        let w1 = Envelope::new(Fixture::W1.presentation());
        let t = vartheta(p("1", 1), p("x1", 1)).truncate(&w1, 2);
        assert_eq!(t.eval(&w1.generator(0)).unwrap(), p("-1", 1));
        let u = w1.parse("X1^2*x1 + X1*(x1+1) - 3").unwrap();
        let eps = TruncatedFunctional::counit(&w1, 2);
        assert_eq!(eps.eval(&u).unwrap(), w1.counit(&u));
        assert!(matches!(
            eps.eval(&w1.parse("X1^3").unwrap()),
            Err(AlgebraError::PrecisionExceeded { degree: 3, precision: 2 })
        ));
    }

    #[test]
    fn convolution_examples() {
        let w1 = Envelope::new(Fixture::W1.presentation());
        let h = TruncatedFunctional::from_table(&w1, 3, [(MultiIndex::new(vec![1]), p("-1", 1))]).unwrap();
        let hh = convolve(&w1, &h, &h);
        assert_eq!(table(&hh), ["[2]:2"]);
        let eps = TruncatedFunctional::counit(&w1, 3);
        assert_eq!(convolve(&w1, &eps, &h), h);
        assert_eq!(convolve(&w1, &h, &eps), h);
        assert_eq!(h.vanishing_level(), 1);
        assert_eq!(hh.vanishing_level(), 2);
        assert_eq!(eps.vanishing_level(), 0);
        assert_eq!(TruncatedFunctional::zero(&w1, 3).vanishing_level(), 4);
    }

    #[test]
    fn vartheta_examples() {
        let aff = Envelope::new(Fixture::Aff.presentation());
        assert_eq!(vartheta(p("1", 1), p("1", 1)).truncate(&aff, 3), TruncatedFunctional::counit(&aff, 3));
        let a = p("x1^2 + 1", 1);
        let f = vartheta(a.clone(), p("1", 1)).truncate(&aff, 2);
        assert_eq!(f, TruncatedFunctional::counit(&aff, 2).mul_poly(&a));
        // algebra map: vartheta(a' b' (x) a b) = vartheta(a' (x) a) * vartheta(b' (x) b)
        let (a1, a2, b1, b2) = (p("x1", 1), p("x1 + 2", 1), p("3", 1), p("x1^2", 1));
        let lhs = vartheta(&a1 * &b1, &a2 * &b2).truncate(&aff, 3);
        let rhs = convolve(&aff, &vartheta(a1, a2).truncate(&aff, 3), &vartheta(b1, b2).truncate(&aff, 3));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn phi_mn_round_trip() {
        let aff = Envelope::new(Fixture::Aff.presentation());
        let f = vartheta(p("x1", 1), p("x1^2", 1)).truncate(&aff, 2);
        let g = vartheta(p("1", 1), p("x1 - 1", 1)).truncate(&aff, 2);
        let eps = TruncatedFunctional::counit(&aff, 2);
        let parts = vec![(f.clone(), g.clone()), (eps.clone(), f.clone())];
        let t = phi_mn(&aff, &parts, 2, 2).unwrap();
        for a in aff.basis(2) {
            for b in aff.basis(2) {
                let x = aff.lmul_coeff(&p("x1", 1), &aff.monomial(a.clone()));
                let y = aff.monomial(b.clone());
                assert_eq!(t.evaluate(&aff, &x, &y).unwrap(), evaluate_parts(&aff, &parts, &x, &y).unwrap());
            }
        }
        let unit = phi_mn(&aff, &[(eps.clone(), eps.clone())], 2, 2).unwrap();
        assert_eq!(unit.evaluate(&aff, &aff.one(), &aff.one()).unwrap(), Poly::one(1));
        assert!(matches!(phi_mn(&aff, &[(f.restrict(1), g)], 2, 2), Err(AlgebraError::LevelMismatch { .. })));
    }

    #[test]
    fn functional_literals() {
        let w1 = Envelope::new(Fixture::W1.presentation());
        assert_eq!(parse_functional(&w1, "eps", 2).unwrap(), TruncatedFunctional::counit(&w1, 2));
        assert_eq!(parse_functional(&w1, " theta(1; x1) ", 2).unwrap().to_string(), "{[0]: x1, [1]: -1} @2");
        assert_eq!(parse_functional(&w1, "{[1]: -1, [0]: x1}", 2).unwrap().to_string(), "{[0]: x1, [1]: -1} @2");
        assert!(parse_functional(&w1, "{}", 1).unwrap().is_zero());
        assert!(matches!(parse_functional(&w1, "{[3]: 1}", 2), Err(AlgebraError::PrecisionExceeded { .. })));
        assert!(matches!(parse_functional(&w1, "{[1,0]: 1}", 2), Err(AlgebraError::Syntax { position: 1, .. })));
        assert!(matches!(parse_functional(&w1, "theta(1; x2)", 2), Err(AlgebraError::UnknownVariable { position: 9, .. })));
        assert!(matches!(parse_functional(&w1, "delta", 2), Err(AlgebraError::Syntax { .. })));
    }
}
