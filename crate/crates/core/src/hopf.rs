//! Structure maps of the complete Hopf algebroid `U*`: counit, topological
//! comultiplication, antipode, and the axiom suite that checks them level by level.

use crate::enveloping::identities::sample_elements;
use crate::enveloping::{EnvElement, Envelope};
use crate::error::AlgebraError;
use crate::filtered_dual::{convolve, vartheta, FunctionalOracle, TensorFunctional, TruncatedFunctional};
use crate::poly::{MultiIndex, Poly};
use crate::random::Sampler;
use crate::report::{CheckLine, Report};

/// `eps*(f) = f(1)`.
pub fn counit_star(f: &TruncatedFunctional) -> Poly {
    f.at(&MultiIndex::zero(f.rank())).expect("precision is at least zero")
}

/// `Delta*(f)` projected to `(F^m U)* (x) (F^n U)*`: `table[(beta, alpha)] = f(X^alpha X^beta)`.
pub fn delta_star(env: &Envelope, f: &TruncatedFunctional, m: u32, n: u32) -> Result<TensorFunctional, AlgebraError> {
    if f.precision() < m + n {
        return Err(AlgebraError::PrecisionExceeded { degree: m + n, precision: f.precision() });
    }
    let mut out = TensorFunctional::zero(env, m, n);
    for alpha in env.basis(n) {
        for beta in env.basis(m) {
            let v = f.eval(&env.mono_mul(&alpha, &beta))?;
            out.add_entry(beta, alpha.clone(), v);
        }
    }
    Ok(out)
}

/// Checks `f(uv) = sum_alpha (f <- X^alpha)(lambda_alpha(u) v)`.
pub fn fuv_check(env: &Envelope, f: &TruncatedFunctional, u: &EnvElement, v: &EnvElement) -> Result<bool, AlgebraError> {
    let (n, m) = (u.degree(), v.degree());
    let table = delta_star(env, f, m, n)?;
    Ok(f.eval(&env.mul(u, v))? == table.evaluate(env, u, v)?)
}

/// `S*(f)(u) = eps(f(u-) u+)`.
pub fn antipode_star(env: &Envelope, f: &TruncatedFunctional) -> TruncatedFunctional {
    let n = f.precision();
    let mut table = Vec::new();
    for alpha in env.basis(n) {
        let mut acc = Poly::zero(env.nvars());
        for (legs, c) in env.translate_monomial(&alpha).terms() {
            let fv = f.at(&legs[0]).expect("delta is filtered");
            if fv.is_zero() {
                continue;
            }
            let w = env.lmul_coeff(&fv, &env.monomial(legs[1].clone()));
            acc.add_assign_ref(&(&env.counit(&w) * c));
        }
        table.push((alpha, acc));
    }
    TruncatedFunctional::from_table(env, n, table).expect("same precision")
}

/// Both identities of the antipode lemma at `u`:
/// `S*(f*h)(u) = S*(f)(h(u-) u+)` and
/// `(S*(f) * h)(u) = h(f(u-) u+) = ((eps <- f(u-)) * h)(u+)`.
pub fn antipode_pointwise_check(
    env: &Envelope,
    f: &TruncatedFunctional,
    h: &TruncatedFunctional,
    u: &EnvElement,
) -> Result<bool, AlgebraError> {
    let n = f.precision().min(h.precision());
    if u.degree() > n {
        return Err(AlgebraError::PrecisionExceeded { degree: u.degree(), precision: n });
    }
    let (f, h) = (f.restrict(n), h.restrict(n));
    let t = env.translate(u);
    let sf = antipode_star(env, &f);

    let first_lhs = antipode_star(env, &convolve(env, &f, &h)).eval(u)?;
    let mut first_rhs = Poly::zero(env.nvars());
    for (legs, c) in t.terms() {
        let plus = env.monomial(legs[1].clone()).mul_right(c);
        first_rhs.add_assign_ref(&sf.eval(&env.lmul_coeff(&h.at(&legs[0])?, &plus))?);
    }

    let second_lhs = convolve(env, &sf, &h).eval(u)?;
    let mut via_shift = Poly::zero(env.nvars());
    let mut via_convolution = Poly::zero(env.nvars());
    for (legs, c) in t.terms() {
        let plus = env.monomial(legs[1].clone()).mul_right(c);
        let fm = f.at(&legs[0])?;
        via_shift.add_assign_ref(&h.eval(&env.lmul_coeff(&fm, &plus))?);
        let eps_shift = vartheta(Poly::one(env.nvars()), fm).truncate(env, n);
        via_convolution.add_assign_ref(&convolve(env, &eps_shift, &h).eval(&plus)?);
    }
    Ok(first_lhs == first_rhs && second_lhs == via_shift && second_lhs == via_convolution)
}

/// `sum_{|alpha| <= n} (f <- X^alpha) * S*(lambda_alpha)` on `F^n U`; the antipode axiom
/// says this is `s*(eps*(f)) = vartheta(f(1) (x) 1)`.
pub fn antipode_limit_sum(env: &Envelope, f: &TruncatedFunctional, n: u32) -> Result<TruncatedFunctional, AlgebraError> {
    if f.precision() < 2 * n {
        return Err(AlgebraError::PrecisionExceeded { degree: 2 * n, precision: f.precision() });
    }
    let mut acc = TruncatedFunctional::zero(env, n);
    for alpha in env.basis(n) {
        let shifted = f.shift(env, &env.monomial(alpha.clone()))?.restrict(n);
        let lambda = TruncatedFunctional::dual_basis(env, &alpha, n);
        acc = acc.add(&convolve(env, &shifted, &antipode_star(env, &lambda)));
    }
    Ok(acc)
}

fn first_failure<T>(items: impl IntoIterator<Item = T>, check: impl Fn(&T) -> Result<Option<String>, AlgebraError>) -> Result<(), String> {
    for item in items {
        match check(&item) {
            Ok(None) => {}
            Ok(Some(w)) => return Err(w),
            Err(e) => return Err(e.to_string()),
        }
    }
    Ok(())
}

/// Test functionals for the suite: `eps`, a few `vartheta` images and seeded random tables.
pub fn suite_functionals(env: &Envelope, precision: u32, seed: u64) -> Vec<TruncatedFunctional> {
    let k = env.nvars();
    let x = Poly::var(k, 0);
    let one = Poly::one(k);
    let mut out = vec![
        TruncatedFunctional::counit(env, precision),
        vartheta(one.clone(), x.clone()).truncate(env, precision),
        vartheta(x.clone(), one.clone()).truncate(env, precision),
        vartheta(&x * &x, &x + &one).truncate(env, precision),
    ];
    let mut sampler = Sampler::new(seed);
    for _ in 0..2 {
        out.push(sampler.functional(env, precision));
    }
    out
}

fn fail_witness(f: &TruncatedFunctional, extra: &str) -> String {
    if extra.is_empty() {
        format!("f = {f}")
    } else {
        format!("f = {f}, {extra}")
    }
}

/// Counitality: `(eps* (x) id) Delta*(f) = f = (id (x) eps*) Delta*(f)` at levels `<= n`.
pub fn check_delta_counit(env: &Envelope, fs: &[TruncatedFunctional], n: u32) -> Result<(), String> {
    first_failure(fs, |f| {
        let f = f.restrict(n);
        let one = env.one();
        // rows beta = 0 read eps* of the first factor, column alpha = 0 the second
        let left = delta_star(env, &f, 0, n)?;
        let right = delta_star(env, &f, n, 0)?;
        for alpha in env.basis(n) {
            let u = env.monomial(alpha.clone());
            if left.evaluate(env, &u, &one)? != f.eval(&u)? || right.evaluate(env, &one, &u)? != f.eval(&u)? {
                return Ok(Some(fail_witness(&f, &format!("u = {u}"))));
            }
        }
        Ok(None)
    })
}

/// Coassociativity at level `n`: the two iterated expansions of `Delta*` agree with
/// `f(x (y z)) = f((x y) z)` on monomial triples of total degree `<= n`.
pub fn check_delta_coassociative(env: &Envelope, fs: &[TruncatedFunctional], n: u32) -> Result<(), String> {
    let basis = env.basis(n);
    let x1 = Poly::var(env.nvars(), 0);
    let mut triples = Vec::new();
    for a in &basis {
        for b in &basis {
            for c in &basis {
                if a.degree() + b.degree() + c.degree() <= n {
                    triples.push((a.clone(), b.clone(), c.clone()));
                }
            }
        }
    }
    first_failure(fs, |f| {
        let f = f.restrict(n);
        for (a, b, c) in &triples {
            let x = env.lmul_coeff(&x1, &env.monomial(a.clone()));
            let y = env.monomial(b.clone()).mul_right(&x1);
            let z = env.monomial(c.clone());
            let nested_right = f.eval(&env.mul(&x, &env.mul(&y, &z)))?;
            let nested_left = f.eval(&env.mul(&env.mul(&x, &y), &z))?;
            // sum_{alpha, beta} f(X^alpha X^beta lambda_beta(lambda_alpha(x) y) z)
            let mut route1 = Poly::zero(env.nvars());
            for (alpha, xa) in x.terms() {
                for (beta, yb) in env.lmul_coeff(xa, &y).terms() {
                    let tail = env.lmul_coeff(yb, &z);
                    route1.add_assign_ref(&f.eval(&env.mul(&env.mono_mul(alpha, beta), &tail))?);
                }
            }
            // sum_{alpha, gamma} f(X^alpha lambda_alpha(X^gamma lambda_gamma(x) y) z)
            let mut route2 = Poly::zero(env.nvars());
            for (gamma, xg) in x.terms() {
                let w = env.mono_times(gamma, &env.lmul_coeff(xg, &y));
                for (alpha, wa) in w.terms() {
                    route2.add_assign_ref(&f.eval(&env.mono_times(alpha, &env.lmul_coeff(wa, &z)))?);
                }
            }
            if !(nested_left == nested_right && route1 == nested_right && route2 == nested_right) {
                return Ok(Some(fail_witness(&f, &format!("x = {x}, y = {y}, z = {z}"))));
            }
        }
        Ok(None)
    })
}

/// `Delta*(f * g) = Delta*(f) Delta*(g)` at levels `(p, q)` with `p + q <= n`, comparing
/// `delta_star(f * g)` with the product `sum ((f <- X^i) * (g <- X^j)) (x) (lambda_i * lambda_j)`.
pub fn check_delta_multiplicative(env: &Envelope, fs: &[TruncatedFunctional], n: u32) -> Result<(), String> {
    let mut pairs = Vec::new();
    for (i, f) in fs.iter().enumerate() {
        for g in &fs[i..] {
            pairs.push((f.restrict(n), g.restrict(n)));
        }
    }
    first_failure(pairs, |(f, g)| {
        let fg = convolve(env, f, g);
        for p in 0..=n {
            let q = n - p;
            let direct = delta_star(env, &fg, p, q)?;
            let mut product = TensorFunctional::zero(env, p, q);
            let cols = env.basis(q);
            for i in &cols {
                let fi = f.shift(env, &env.monomial(i.clone()))?.restrict(p);
                for j in &cols {
                    let gj = g.shift(env, &env.monomial(j.clone()))?.restrict(p);
                    let left = convolve(env, &fi, &gj);
                    if left.is_zero() {
                        continue;
                    }
                    for alpha in &cols {
                        let lij = env.coprod_monomial(alpha).coefficient(&[i.clone(), j.clone()]);
                        if lij.is_zero() {
                            continue;
                        }
                        for (beta, v) in left.entries() {
                            product.add_entry(beta.clone(), alpha.clone(), v * &lij);
                        }
                    }
                }
            }
            if direct != product {
                return Ok(Some(format!("f = {f}, g = {g}, levels ({p},{q})")));
            }
        }
        Ok(None)
    })
}

pub fn check_antipode_involution(env: &Envelope, fs: &[TruncatedFunctional], n: u32) -> Result<(), String> {
    first_failure(fs, |f| {
        let f = f.restrict(n);
        Ok((antipode_star(env, &antipode_star(env, &f)) != f).then(|| fail_witness(&f, "")))
    })
}

pub fn check_antipode_multiplicative(env: &Envelope, fs: &[TruncatedFunctional], n: u32) -> Result<(), String> {
    let mut pairs = Vec::new();
    for f in fs {
        for g in fs {
            pairs.push((f.restrict(n), g.restrict(n)));
        }
    }
    first_failure(pairs, |(f, g)| {
        let lhs = antipode_star(env, &convolve(env, f, g));
        let rhs = convolve(env, &antipode_star(env, f), &antipode_star(env, g));
        Ok((lhs != rhs).then(|| format!("f = {f}, g = {g}")))
    })
}

/// `S*(vartheta(a' (x) a)) = vartheta(a (x) a')`, which contains `S* s* = t*` and `S* t* = s*`.
pub fn check_antipode_swaps_legs(env: &Envelope, n: u32, seed: u64) -> Result<(), String> {
    let k = env.nvars();
    let mut sampler = Sampler::new(seed ^ 0x5eed);
    let mut pairs = vec![(Poly::var(k, 0), Poly::one(k)), (Poly::one(k), Poly::var(k, 0))];
    for _ in 0..4 {
        pairs.push((sampler.poly(k, 2, 3), sampler.poly(k, 2, 3)));
    }
    first_failure(pairs, |(a1, a)| {
        let lhs = antipode_star(env, &vartheta(a1.clone(), a.clone()).truncate(env, n));
        let rhs = vartheta(a.clone(), a1.clone()).truncate(env, n);
        Ok((lhs != rhs).then(|| format!("a' = {a1}, a = {a}")))
    })
}

pub fn check_antipode_pointwise(env: &Envelope, fs: &[TruncatedFunctional], n: u32) -> Result<(), String> {
    let samples = sample_elements(env, n);
    let fs: Vec<TruncatedFunctional> = fs.iter().map(|f| f.restrict(n)).collect();
    let mut cases = Vec::new();
    for f in &fs {
        for h in &fs {
            cases.push((f, h));
        }
    }
    first_failure(cases, |(f, h)| {
        for u in &samples {
            if !antipode_pointwise_check(env, f, h, u)? {
                return Ok(Some(format!("f = {f}, h = {h}, u = {u}")));
            }
        }
        Ok(None)
    })
}

pub fn check_antipode_limit(env: &Envelope, fs: &[TruncatedFunctional], n: u32) -> Result<(), String> {
    first_failure(fs, |f| {
        let f = f.restrict(2 * n);
        let sum = antipode_limit_sum(env, &f, n)?;
        let expected = TruncatedFunctional::counit(env, n).mul_poly(&counit_star(&f));
        Ok((sum != expected).then(|| format!("f = {f}: sum = {sum}")))
    })
}

/// `f(u- u+) = f(1) eps(u)`.
pub fn check_translation_contraction(env: &Envelope, fs: &[TruncatedFunctional], n: u32) -> Result<(), String> {
    let samples = sample_elements(env, n);
    first_failure(fs, |f| {
        for u in &samples {
            let mut contracted = env.zero();
            for (legs, c) in env.translate(u).terms() {
                contracted.add_assign(&env.mono_mul(&legs[0], &legs[1]).mul_right(c));
            }
            if f.eval(&contracted)? != &counit_star(f) * &env.counit(u) {
                return Ok(Some(fail_witness(f, &format!("u = {u}"))));
            }
        }
        Ok(None)
    })
}

/// The antipode checks, in suite order.
fn antipode_checks(env: &Envelope, fixture: &str, fs: &[TruncatedFunctional], n: u32, seed: u64) -> Report {
    let mut report = Report::new();
    report.check("antipode-involution", fixture, n, check_antipode_involution(env, fs, n));
    report.check("antipode-multiplicative", fixture, n, check_antipode_multiplicative(env, fs, n));
    report.check("antipode-swaps-source-target", fixture, n, check_antipode_swaps_legs(env, n, seed));
    report.check("antipode-lemma-pointwise", fixture, n, check_antipode_pointwise(env, fs, n));
    report.check("antipode-limit-identity", fixture, n, check_antipode_limit(env, fs, n));
    report
}

/// Runs the complete Hopf algebroid axioms on `U*` at level `n`.
pub fn hopf_axiom_suite(env: &Envelope, fixture: &str, n: u32, seed: u64) -> Report {
    let fs = suite_functionals(env, 2 * n, seed);
    let mut report = Report::new();
    for level in 1..=n {
        report.check("delta-counital", fixture, level, check_delta_counit(env, &fs, level));
    }
    report.check("delta-coassociative", fixture, n, check_delta_coassociative(env, &fs, n));
    report.check("delta-multiplicative", fixture, n, check_delta_multiplicative(env, &fs, n));
    report.check("translation-contraction", fixture, n, check_translation_contraction(env, &fs, n));
    report.extend(antipode_checks(env, fixture, &fs, n, seed));
    report
}

/// Runs the antipode checks with a sign-flipped translation map. The result line passes
/// when at least one check detects the mutation; its note carries the failing witness.
pub fn negative_control(mutated: &Envelope, fixture: &str, n: u32, seed: u64) -> CheckLine {
    let fs = suite_functionals(mutated, 2 * n, seed);
    let report = antipode_checks(mutated, fixture, &fs, n, seed);
    let first = report.failures().next().cloned();
    match first {
        Some(line) => CheckLine::new("negative-control-flipped-translation", fixture, n, Ok(()))
            .with_note(format!("detected by {}: {}", line.id, line.witness.clone().unwrap_or_default())),
        None => CheckLine::new(
            "negative-control-flipped-translation",
            fixture,
            n,
            Err("mutation not detected".to_string()),
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enveloping::TranslationRule;
    use crate::expr::parse_poly;
    use crate::fixtures::Fixture;

    fn p(s: &str) -> Poly {
        parse_poly(s, 1).unwrap()
    }

    fn h_functional(env: &Envelope, n: u32) -> TruncatedFunctional {
        TruncatedFunctional::from_table(env, n, [(MultiIndex::new(vec![1]), p("-1"))]).unwrap()
    }

    #[test]
    fn counit_star_examples() {
        let w1 = Envelope::new(Fixture::W1.presentation());
        assert_eq!(counit_star(&TruncatedFunctional::counit(&w1, 2)), p("1"));
        let t = vartheta(p("x1 + 1"), p("x1")).truncate(&w1, 2);
        assert_eq!(counit_star(&t), p("x1^2 + x1"));
        assert!(counit_star(&TruncatedFunctional::zero(&w1, 2)).is_zero());
    }

    #[test]
    fn delta_star_examples() {
        let w1 = Envelope::new(Fixture::W1.presentation());
        let t = delta_star(&w1, &h_functional(&w1, 2), 1, 1).unwrap();
        let rendered: Vec<Vec<String>> =
            t.matrix(&w1).iter().map(|r| r.iter().map(|v| v.to_string()).collect()).collect();
        assert_eq!(rendered, [["0", "-1"], ["-1", "0"]]);
        let f = vartheta(p("x1"), p("x1^2")).truncate(&w1, 3);
        let row0 = delta_star(&w1, &f, 0, 3).unwrap().component(&w1, &MultiIndex::zero(1));
        assert_eq!(row0.at(&MultiIndex::zero(1)).unwrap(), f.at(&MultiIndex::zero(1)).unwrap());
        for alpha in w1.basis(3) {
            assert_eq!(delta_star(&w1, &f, 0, 3).unwrap().entry(&MultiIndex::zero(1), &alpha), f.at(&alpha).unwrap());
        }
        assert!(matches!(delta_star(&w1, &f, 2, 2), Err(AlgebraError::PrecisionExceeded { .. })));
    }

    #[test]
    fn fuv_examples() {
        let w1 = Envelope::new(Fixture::W1.presentation());
        let f = vartheta(p("1"), p("x1")).truncate(&w1, 2);
        let x = w1.generator(0);
        assert!(fuv_check(&w1, &f, &x, &x).unwrap());
        let eps = TruncatedFunctional::counit(&w1, 4);
        let u = w1.parse("X1^2*x1 + 1").unwrap();
        assert!(fuv_check(&w1, &eps, &u, &w1.parse("X1*x1^2").unwrap()).unwrap());
    }

    #[test]
    fn antipode_examples() {
        let w1 = Envelope::new(Fixture::W1.presentation());
        let eps = TruncatedFunctional::counit(&w1, 3);
        assert_eq!(antipode_star(&w1, &eps), eps);
        let s = antipode_star(&w1, &vartheta(p("1"), p("x1")).truncate(&w1, 2));
        assert_eq!(s, vartheta(p("x1"), p("1")).truncate(&w1, 2));
        assert_eq!(s.to_string(), "{[0]: x1} @2");
        let h = h_functional(&w1, 2);
        let hh = convolve(&w1, &h, &h);
        assert!(antipode_pointwise_check(&w1, &hh, &hh, &w1.parse("X1^2").unwrap()).unwrap());
        assert!(antipode_pointwise_check(&w1, &h, &eps.restrict(2), &w1.parse("X1^2*x1").unwrap()).unwrap());
    }

    #[test]
    fn suite_passes_on_fixtures_at_low_level() {
        for f in Fixture::ALL {
            let env = Envelope::new(f.presentation());
            let report = hopf_axiom_suite(&env, f.name(), 2, 0);
            assert!(report.all_passed(), "{report}");
        }
    }

    #[test]
    fn flipped_translation_is_detected() {
        let env = Envelope::with_rule(Fixture::W1.presentation(), TranslationRule::FlippedSign);
        let line = negative_control(&env, "W1", 2, 0);
        assert!(line.passed, "{line}");
        assert!(line.witness.unwrap().starts_with("detected by"));
    }
}
