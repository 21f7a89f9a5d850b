//! Executable forms of the structural identities of `V_A(L)`.
//!
//! Each check returns `Ok(())` or `Err(witness)` where the witness names the first input on
//! which the two sides differ. Inputs are swept deterministically over the PBW monomials
//! `X^alpha`, together with `X^alpha * x1` and `x1 * X^alpha`.

use crate::linalg;
use crate::poly::{MultiIndex, Poly, Rational};

use super::{Balance, EnvElement, Envelope, Tensor};

pub type CheckResult = Result<(), String>;

/// Test elements of degree at most `n`: every `X^alpha`, and when `A` has variables also
/// `X^alpha * x1` and `x1 * X^alpha`.
pub fn sample_elements(env: &Envelope, n: u32) -> Vec<EnvElement> {
    let mut out = Vec::new();
    let x = (env.nvars() > 0).then(|| Poly::var(env.nvars(), 0));
    for alpha in env.basis(n) {
        let m = env.monomial(alpha);
        if let Some(x) = &x {
            out.push(m.mul_right(x));
            out.push(env.lmul_coeff(x, &m));
        }
        out.push(m);
    }
    out
}

fn first_failure<T>(items: impl IntoIterator<Item = T>, check: impl Fn(&T) -> Option<String>) -> CheckResult {
    for item in items {
        if let Some(w) = check(&item) {
            return Err(w);
        }
    }
    Ok(())
}

/// Closed form `Delta(X^alpha) = sum_{gamma <= alpha} binom(alpha, gamma) X^gamma (x) X^(alpha-gamma)`.
pub fn coprod_closed_form(env: &Envelope, alpha: &MultiIndex) -> Tensor {
    let mut out = env.tensor_zero(vec![Balance::Right]);
    for d in 0..=alpha.degree() {
        for gamma in MultiIndex::of_degree(alpha.len(), d) {
            let Some(rest) = alpha.checked_sub(&gamma) else { continue };
            let binom = alpha.factorial() / (gamma.factorial() * rest.factorial());
            out.add_term(vec![gamma, rest], Poly::constant(env.nvars(), Rational::from_integer(binom)));
        }
    }
    out
}

pub fn check_coprod_closed_form(env: &Envelope, n: u32) -> CheckResult {
    first_failure(env.basis(n), |alpha| {
        (*env.coprod_monomial(alpha) != coprod_closed_form(env, alpha))
            .then(|| format!("Delta(X^{alpha})"))
    })
}

/// `(eps (x) id) Delta(u) = u = (id (x) eps) Delta(u)`.
pub fn check_counit(env: &Envelope, n: u32) -> CheckResult {
    first_failure(sample_elements(env, n), |u| {
        let d = env.coprod(u);
        (env.counit_first_leg(&d) != *u || env.counit_second_leg(&d) != *u).then(|| u.to_string())
    })
}

/// `(Delta (x) id) Delta = (id (x) Delta) Delta` in `U_A (x) U_A (x) U_A`.
pub fn check_coassociativity(env: &Envelope, n: u32) -> CheckResult {
    let junctions = [Balance::Right, Balance::Right];
    first_failure(sample_elements(env, n), |u| {
        let d = env.coprod(u);
        let mut lhs = env.tensor_zero(junctions.to_vec());
        let mut rhs = env.tensor_zero(junctions.to_vec());
        for (legs, c) in d.terms() {
            let second = env.monomial(legs[1].clone()).mul_right(c);
            for (inner, e) in env.coprod_monomial(&legs[0]).terms() {
                let mid = env.monomial(inner[1].clone()).mul_right(e);
                env.accumulate_legs(&mut lhs, &[env.monomial(inner[0].clone()), mid, second.clone()], None);
            }
            let split = env.coprod(&second);
            for (inner, e) in split.terms() {
                let legs3 = [
                    env.monomial(legs[0].clone()),
                    env.monomial(inner[0].clone()),
                    env.monomial(inner[1].clone()).mul_right(e),
                ];
                env.accumulate_legs(&mut rhs, &legs3, None);
            }
        }
        (lhs != rhs).then(|| u.to_string())
    })
}

/// `Delta(u)` lies in the Takeuchi product: left multiplication by each `x_j` on either
/// leg gives the same tensor.
pub fn check_takeuchi(env: &Envelope, n: u32) -> CheckResult {
    first_failure(sample_elements(env, n), |u| {
        let d = env.coprod(u);
        for j in 0..env.nvars() {
            let x = Poly::var(env.nvars(), j);
            if env.lmul_leg(&d, 0, &x) != env.lmul_leg(&d, 1, &x) {
                return Some(format!("{u} with x{}", j + 1));
            }
        }
        None
    })
}

/// `Delta(uv) = Delta(u) Delta(v)` on pairs of sample elements with total degree `<= n`.
pub fn check_coprod_multiplicative(env: &Envelope, n: u32) -> CheckResult {
    let samples = sample_elements(env, n);
    let pairs = samples
        .iter()
        .flat_map(|u| samples.iter().map(move |v| (u, v)))
        .filter(|(u, v)| u.degree() + v.degree() <= n);
    first_failure(pairs, |(u, v)| {
        (env.coprod(&env.mul(u, v)) != env.takeuchi_mul(&env.coprod(u), &env.coprod(v)))
            .then(|| format!("u = {u}, v = {v}"))
    })
}

/// `u- u+1 (x) u+2 = 1 (x) u`, i.e. `beta(delta(u)) = 1 (x) u`.
pub fn check_b4(env: &Envelope, n: u32) -> CheckResult {
    first_failure(sample_elements(env, n), |u| {
        let expected = env.tensor_from_legs(&[Balance::Right], &[env.one(), u.clone()]);
        (env.beta(&env.translate(u)) != expected).then(|| u.to_string())
    })
}

/// `u1- (x) u1+ (x) u2 = u- (x) u+1 (x) u+2`.
pub fn check_b5(env: &Envelope, n: u32) -> CheckResult {
    let junctions = [Balance::Left, Balance::Right];
    first_failure(sample_elements(env, n), |u| {
        let mut lhs = env.tensor_zero(junctions.to_vec());
        for (legs, c) in env.coprod(u).terms() {
            let last = env.monomial(legs[1].clone()).mul_right(c);
            for (inner, e) in env.translate_monomial(&legs[0]).terms() {
                let mid = env.monomial(inner[1].clone()).mul_right(e);
                env.accumulate_legs(&mut lhs, &[env.monomial(inner[0].clone()), mid, last.clone()], None);
            }
        }
        let mut rhs = env.tensor_zero(junctions.to_vec());
        for (legs, d) in env.translate(u).terms() {
            let plus = env.monomial(legs[1].clone()).mul_right(d);
            for (inner, f) in env.coprod(&plus).terms() {
                let legs3 = [
                    env.monomial(legs[0].clone()),
                    env.monomial(inner[0].clone()),
                    env.monomial(inner[1].clone()).mul_right(f),
                ];
                env.accumulate_legs(&mut rhs, &legs3, None);
            }
        }
        (lhs != rhs).then(|| u.to_string())
    })
}

/// `u+- (x) u- (x) u++ = u-1 (x) u-2 (x) u+`.
pub fn check_b55(env: &Envelope, n: u32) -> CheckResult {
    let junctions = [Balance::Right, Balance::Right];
    first_failure(sample_elements(env, n), |u| {
        let t = env.translate(u);
        let mut lhs = env.tensor_zero(junctions.to_vec());
        let mut rhs = env.tensor_zero(junctions.to_vec());
        for (legs, d) in t.terms() {
            let plus = env.monomial(legs[1].clone()).mul_right(d);
            for (inner, f) in env.translate(&plus).terms() {
                let legs3 = [
                    env.monomial(inner[0].clone()),
                    env.monomial(legs[0].clone()),
                    env.monomial(inner[1].clone()).mul_right(f),
                ];
                env.accumulate_legs(&mut lhs, &legs3, None);
            }
            for (inner, f) in env.coprod_monomial(&legs[0]).terms() {
                let legs3 = [
                    env.monomial(inner[0].clone()),
                    env.monomial(inner[1].clone()).mul_right(f),
                    plus.clone(),
                ];
                env.accumulate_legs(&mut rhs, &legs3, None);
            }
        }
        (lhs != rhs).then(|| u.to_string())
    })
}

/// `u- u+ = eps(u)`.
pub fn check_b555(env: &Envelope, n: u32) -> CheckResult {
    first_failure(sample_elements(env, n), |u| {
        let mut product = env.zero();
        for (legs, d) in env.translate(u).terms() {
            product.add_assign(&env.mono_mul(&legs[0], &legs[1]).mul_right(d));
        }
        (product != env.from_poly(env.counit(u))).then(|| u.to_string())
    })
}

/// `delta(uv) = v- u- (x) u+ v+` on pairs with total degree `<= n`.
pub fn check_b66(env: &Envelope, n: u32) -> CheckResult {
    let samples = sample_elements(env, n);
    let pairs = samples
        .iter()
        .flat_map(|u| samples.iter().map(move |v| (u, v)))
        .filter(|(u, v)| u.degree() + v.degree() <= n);
    first_failure(pairs, |(u, v)| {
        let lhs = env.translate(&env.mul(u, v));
        let rhs = env.translate_product(&env.translate(u), &env.translate(v));
        (lhs != rhs).then(|| format!("u = {u}, v = {v}"))
    })
}

/// `a (x) 1 = 1 (x) a = delta(a)` for `a` ranging over the variables and a mixed polynomial.
pub fn check_b6(env: &Envelope) -> CheckResult {
    let k = env.nvars();
    let mut samples: Vec<Poly> = (0..k).map(|j| Poly::var(k, j)).collect();
    if k > 0 {
        let x = Poly::var(k, 0);
        samples.push(&(&x * &x) + &Poly::from_int(k, 3));
    }
    first_failure(samples, |a| {
        let ia = env.from_poly(a.clone());
        let left = env.tensor_from_legs(&[Balance::Left], &[ia.clone(), env.one()]);
        let right = env.tensor_from_legs(&[Balance::Left], &[env.one(), ia.clone()]);
        (left != right || env.translate(&ia) != right).then(|| a.to_string())
    })
}

/// `beta o beta^{-1} = id` and `beta^{-1} o beta = id` on the tensors
/// `X^alpha (x) X^beta * c` with `|alpha| + |beta| <= n`.
pub fn check_beta_roundtrip(env: &Envelope, n: u32) -> CheckResult {
    let k = env.nvars();
    let mut coefficients = vec![Poly::one(k)];
    if k > 0 {
        coefficients.push(Poly::var(k, 0));
    }
    let basis = env.basis(n);
    let mut cases = Vec::new();
    for a in &basis {
        for b in &basis {
            if a.degree() + b.degree() <= n {
                for c in &coefficients {
                    cases.push((a.clone(), b.clone(), c.clone()));
                }
            }
        }
    }
    first_failure(cases, |(a, b, c)| {
        let mut coprod = env.tensor_zero(vec![Balance::Right]);
        coprod.add_term(vec![a.clone(), b.clone()], c.clone());
        let mut translate = env.tensor_zero(vec![Balance::Left]);
        translate.add_term(vec![a.clone(), b.clone()], c.clone());
        let ok = env.beta(&env.beta_inv(&coprod)) == coprod && env.beta_inv(&env.beta(&translate)) == translate;
        (!ok).then(|| format!("X^{a} ⊗ X^{b}*({c})"))
    })
}

/// Rank over `Frac(A)` of `F^n U / F^(n-1) U`, computed from the top-degree parts of all
/// words `X_{i1} ... X_{in}` in the generators.
pub fn graded_rank(env: &Envelope, n: u32) -> usize {
    let top = MultiIndex::of_degree(env.rank(), n);
    let mut words = vec![env.one()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(words.len() * env.rank());
        for w in &words {
            for i in 0..env.rank() {
                next.push(env.mul(w, &env.generator(i)));
            }
        }
        words = next;
    }
    let rows: Vec<Vec<Poly>> = words
        .iter()
        .map(|w| top.iter().map(|alpha| w.coefficient(alpha)).collect())
        .collect();
    linalg::rank(&rows, env.nvars())
}

/// Number of PBW monomials of degree exactly `n` in `r` generators.
pub fn monomial_count(rank: usize, n: u32) -> usize {
    MultiIndex::of_degree(rank, n).len()
}

pub fn check_graded_rank(env: &Envelope, n: u32) -> CheckResult {
    for d in 0..=n {
        let (got, want) = (graded_rank(env, d), monomial_count(env.rank(), d));
        if got != want {
            return Err(format!("degree {d}: rank {got}, expected {want}"));
        }
    }
    Ok(())
}
