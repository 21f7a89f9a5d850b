//! Property suites over the fixtures. Every suite is deterministic for a given seed.

use std::fmt;
use std::str::FromStr;

use crate::enveloping::identities::{self, CheckResult};
use crate::enveloping::{Envelope, TranslationRule};
use crate::filtered_dual::convolve;
use crate::finite_dual::{coprod_compatible, k_order_level, sample_dualrep};
use crate::fixtures::Fixture;
use crate::hopf::{antipode_star, counit_star, fuv_check, hopf_axiom_suite, negative_control};
use crate::jets::{eta_triangle_check, filtration_check, theta_matrix};
use crate::linalg;
use crate::random::Sampler;
use crate::report::{CheckLine, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Pbw,
    Schauenburg,
    Hopf,
    Fuv,
    Zeta,
    Jets,
}

impl Suite {
    pub const ALL: [Suite; 6] = [Suite::Pbw, Suite::Schauenburg, Suite::Hopf, Suite::Fuv, Suite::Zeta, Suite::Jets];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Pbw => "pbw",
            Suite::Schauenburg => "schauenburg",
            Suite::Hopf => "hopf",
            Suite::Fuv => "fuv",
            Suite::Zeta => "zeta",
            Suite::Jets => "jets",
        }
    }

    pub fn run(self, seed: u64) -> Report {
        match self {
            Suite::Pbw => pbw_suite(seed),
            Suite::Schauenburg => schauenburg_suite(),
            Suite::Hopf => hopf_suite(seed),
            Suite::Fuv => fuv_suite(seed),
            Suite::Zeta => zeta_suite(seed),
            Suite::Jets => jets_suite(seed),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite '{s}'"))
    }
}

fn env(f: Fixture) -> Envelope {
    Envelope::new(f.presentation())
}

/// Runs `check` on `count` sampled cases and reports the first failing one.
fn sampled(count: usize, mut check: impl FnMut(usize) -> CheckResult) -> CheckResult {
    (0..count).try_for_each(|i| check(i).map_err(|w| format!("case {i}: {w}")))
}

pub fn pbw_suite(seed: u64) -> Report {
    let mut report = Report::new();
    let mut sampler = Sampler::new(seed);
    for f in Fixture::ALL {
        let e = env(f);
        for n in 0..=5 {
            report.check("pbw-graded-rank", f.name(), n, identities::check_graded_rank(&e, n));
        }
        let outcome = sampled(500, |_| {
            let u = sampler.element(&e, 3, 3);
            let v = sampler.element(&e, 3, 3);
            let uv = e.mul(&u, &v);
            if uv.degree() <= u.degree() + v.degree() {
                Ok(())
            } else {
                Err(format!("u = {u}, v = {v}, deg(uv) = {}", uv.degree()))
            }
        });
        report.check("filtration-degree", f.name(), 3, outcome);
    }
    report
}

pub fn schauenburg_suite() -> Report {
    let mut report = Report::new();
    for f in Fixture::ALL {
        let e = env(f);
        let n = 5;
        report.check("B4", f.name(), n, identities::check_b4(&e, n));
        report.check("B5", f.name(), n, identities::check_b5(&e, n));
        report.check("B55", f.name(), n, identities::check_b55(&e, n));
        report.check("B555", f.name(), n, identities::check_b555(&e, n));
        report.check("B66", f.name(), n, identities::check_b66(&e, n));
        report.check("B6", f.name(), 1, identities::check_b6(&e));
        for level in 0..=4 {
            report.check("beta-roundtrip", f.name(), level, identities::check_beta_roundtrip(&e, level));
        }
    }
    report
}

pub fn hopf_suite(seed: u64) -> Report {
    let mut report = Report::new();
    for f in [Fixture::W1, Fixture::Aff] {
        report.extend(hopf_axiom_suite(&env(f), f.name(), 4, seed));
        let mutated = Envelope::with_rule(f.presentation(), TranslationRule::FlippedSign);
        report.push(negative_control(&mutated, f.name(), 4, seed));
    }
    report
}

pub fn fuv_suite(seed: u64) -> Report {
    let mut report = Report::new();
    let mut sampler = Sampler::new(seed);
    for f in Fixture::ALL {
        let e = env(f);
        let outcome = sampled(200, |_| {
            let g = sampler.functional(&e, 4);
            let u = sampler.element(&e, 2, 3);
            let v = sampler.element(&e, 2, 3);
            match fuv_check(&e, &g, &u, &v) {
                Ok(true) => Ok(()),
                Ok(false) => Err(format!("f = {g}, u = {u}, v = {v}")),
                Err(err) => Err(err.to_string()),
            }
        });
        report.check("fuv-rule", f.name(), 2, outcome);
    }
    report
}

pub fn zeta_suite(seed: u64) -> Report {
    let mut report = Report::new();
    let mut sampler = Sampler::new(seed);
    let precision = 3;
    for f in Fixture::ALL {
        let e = env(f);
        let pairs: Vec<_> = (0..100).map(|_| (sample_dualrep(&e, &mut sampler), sample_dualrep(&e, &mut sampler))).collect();
        let counit = sampled(pairs.len(), |i| {
            let w = &pairs[i].0;
            let (lhs, rhs) = (counit_star(&w.zeta(&e, precision)), w.counit());
            if lhs == rhs { Ok(()) } else { Err(format!("eps*(zeta(w)) = {lhs}, eps°(w) = {rhs}")) }
        });
        report.check("zeta-counit", f.name(), precision, counit);
        let multiplicative = sampled(pairs.len(), |i| {
            let (w1, w2) = &pairs[i];
            let lhs = w1.mul(w2).zeta(&e, precision);
            let rhs = convolve(&e, &w1.zeta(&e, precision), &w2.zeta(&e, precision));
            if lhs == rhs { Ok(()) } else { Err(format!("zeta(w1 w2) = {lhs}, zeta(w1) * zeta(w2) = {rhs}")) }
        });
        report.check("zeta-multiplicative", f.name(), precision, multiplicative);
        let antipode = sampled(pairs.len(), |i| {
            let w = &pairs[i].0;
            let lhs = w.antipode().zeta(&e, precision);
            let rhs = antipode_star(&e, &w.zeta(&e, precision));
            if lhs == rhs { Ok(()) } else { Err(format!("zeta(S°w) = {lhs}, S*(zeta(w)) = {rhs}")) }
        });
        report.check("zeta-antipode", f.name(), precision, antipode);
        let coprod = sampled(pairs.len(), |i| {
            let w = &pairs[i].1;
            for m in 0..=2 {
                for n in 0..=2 {
                    match coprod_compatible(&e, w, m, n) {
                        Ok(true) => {}
                        Ok(false) => return Err(format!("levels ({m}, {n})")),
                        Err(err) => return Err(err.to_string()),
                    }
                }
            }
            Ok(())
        });
        report.check("zeta-coproduct", f.name(), 2, coprod);
        let k_order = sampled(50, |_| {
            let len = 1 + sampler.below(3);
            let ws: Vec<_> = (0..len).map(|_| sample_dualrep(&e, &mut sampler)).collect();
            let level = k_order_level(&e, &ws);
            if level >= len as u32 { Ok(()) } else { Err(format!("product of {len} vanishes only below level {level}")) }
        });
        report.check("k-order", f.name(), 3, k_order);
    }
    report
}

pub fn jets_suite(seed: u64) -> Report {
    let mut report = Report::new();
    for f in [Fixture::W1, Fixture::W2] {
        let e = env(f);
        for n in 0..=5 {
            let line = match theta_matrix(&e, n) {
                Ok((_, det)) if linalg::is_unit(&det) => {
                    CheckLine::new("theta-invertible", f.name(), n, Ok(())).with_note(format!("det = {det}"))
                }
                Ok((_, det)) => CheckLine::new("theta-invertible", f.name(), n, Err(format!("det = {det}"))),
                Err(err) => CheckLine::new("theta-invertible", f.name(), n, Err(err.to_string())),
            };
            report.push(line);
        }
    }
    let w1 = env(Fixture::W1);
    let line = match theta_matrix(&w1, 5) {
        Ok((m, _)) => {
            let diagonal: Vec<String> = (0..m.len()).map(|k| m[k][k].to_string()).collect();
            let mismatch = (0..m.len()).find(|&k| {
                let expected: i64 = (1..=k as i64).product::<i64>() * if k % 2 == 0 { 1 } else { -1 };
                m[k][k] != crate::poly::Poly::from_int(1, expected)
            });
            let outcome = match mismatch {
                None => Ok(()),
                Some(k) => Err(format!("entry {k} is {}", m[k][k])),
            };
            CheckLine::new("theta-diagonal", "W1", 5, outcome).with_note(format!("diagonal = {}", diagonal.join(", ")))
        }
        Err(err) => CheckLine::new("theta-diagonal", "W1", 5, Err(err.to_string())),
    };
    report.push(line);
    let mut sampler = Sampler::new(seed);
    for f in Fixture::ALL {
        let e = env(f);
        let outcome = sampled(100, |_| {
            let (a1, a2) = (sampler.poly(e.nvars(), 2, 3), sampler.poly(e.nvars(), 2, 3));
            if eta_triangle_check(&e, &a1, &a2, 3) { Ok(()) } else { Err(format!("a' = {a1}, a = {a2}")) }
        });
        report.check("eta-triangle", f.name(), 3, outcome);
        report.check(
            "jet-filtration",
            f.name(),
            3,
            if filtration_check(&e, 3) { Ok(()) } else { Err("h-power below its level".into()) },
        );
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }
}
