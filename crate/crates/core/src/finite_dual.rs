//! The finite dual `U°` through representatives `phi (x) m`, where `M` is a free right
//! `U`-module of finite rank.
//!
//! A representation is given by matrices `R_i` over `A`: the generator `X_i` acts on a
//! column vector by `rho_i(v) = R_i v - omega_i(v)` (the anchor applied entrywise), and
//! `a` in `A` acts by multiplication. Equality in `U°` is never decided on representatives;
//! all comparisons go through `zeta` at finite precision.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::enveloping::Envelope;
use crate::error::AlgebraError;
use crate::expr::parse_poly;
use crate::filtered_dual::{phi_mn, FunctionalOracle, TruncatedFunctional};
use crate::hopf::delta_star;
use crate::lie_rinehart::json_pointer;
use crate::linalg;
use crate::poly::{MultiIndex, Poly};
use crate::random::Sampler;

type Matrix = Vec<Vec<Poly>>;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct URep {
    nvars: usize,
    dim: usize,
    matrices: Vec<Matrix>,
}

#[derive(Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RepDoc {
    rank: usize,
    matrices: Vec<Vec<Vec<String>>>,
}

fn mat_vec(m: &Matrix, v: &[Poly], nvars: usize) -> Vec<Poly> {
    m.iter()
        .map(|row| {
            let mut acc = Poly::zero(nvars);
            for (a, b) in row.iter().zip(v) {
                if !a.is_zero() && !b.is_zero() {
                    acc.add_assign_ref(&(a * b));
                }
            }
            acc
        })
        .collect()
}

fn kron(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    a.iter().flat_map(|x| b.iter().map(move |y| x * y)).collect()
}

fn dot(a: &[Poly], b: &[Poly], nvars: usize) -> Poly {
    let mut acc = Poly::zero(nvars);
    for (x, y) in a.iter().zip(b) {
        acc.add_assign_ref(&(x * y));
    }
    acc
}

impl URep {
    /// Builds a representation and checks the module law.
    pub fn new(env: &Envelope, matrices: Vec<Matrix>) -> Result<Self, AlgebraError> {
        let rep = Self::new_unchecked(env, matrices)?;
        rep.check_flatness(env)?;
        Ok(rep)
    }

    /// Checks dimensions only.
    pub fn new_unchecked(env: &Envelope, matrices: Vec<Matrix>) -> Result<Self, AlgebraError> {
        if matrices.len() != env.rank() {
            return Err(AlgebraError::Dimension(format!(
                "expected {} action matrices, got {}",
                env.rank(),
                matrices.len()
            )));
        }
        let dim = matrices.first().map_or(0, Vec::len);
        for (i, m) in matrices.iter().enumerate() {
            if m.len() != dim || m.iter().any(|row| row.len() != dim) {
                return Err(AlgebraError::Dimension(format!("matrix {} is not {dim}x{dim}", i + 1)));
            }
            if let Some(p) = m.iter().flatten().find(|p| p.nvars() != env.nvars()) {
                return Err(AlgebraError::VariableCountMismatch { left: env.nvars(), right: p.nvars() });
            }
        }
        if dim == 0 && env.rank() > 0 {
            return Err(AlgebraError::Dimension("representation of rank 0".into()));
        }
        Ok(URep { nvars: env.nvars(), dim, matrices })
    }

    /// Parses `{"rank": d, "matrices": [[["poly", ...], ...], ...]}` and checks flatness.
    pub fn from_json(env: &Envelope, document: &str) -> Result<Self, AlgebraError> {
        let de = &mut serde_json::Deserializer::from_str(document);
        let doc: RepDoc = serde_path_to_error::deserialize(de).map_err(|e| AlgebraError::Schema {
            path: json_pointer(&e.path().to_string()),
            message: e.inner().to_string(),
        })?;
        let schema = |path: String, message: String| AlgebraError::Schema { path, message };
        if doc.rank == 0 {
            return Err(schema("/rank".into(), "rank must be positive".into()));
        }
        if doc.matrices.len() != env.rank() {
            return Err(schema(
                "/matrices".into(),
                format!("expected {} matrices, one per generator, got {}", env.rank(), doc.matrices.len()),
            ));
        }
        let mut matrices = Vec::with_capacity(doc.matrices.len());
        for (i, m) in doc.matrices.iter().enumerate() {
            if m.len() != doc.rank {
                return Err(schema(format!("/matrices/{i}"), format!("expected {} rows", doc.rank)));
            }
            let mut rows = Vec::with_capacity(m.len());
            for (r, row) in m.iter().enumerate() {
                if row.len() != doc.rank {
                    return Err(schema(format!("/matrices/{i}/{r}"), format!("expected {} entries", doc.rank)));
                }
                let mut parsed = Vec::with_capacity(row.len());
                for (c, text) in row.iter().enumerate() {
                    let p = parse_poly(text, env.nvars())
                        .map_err(|e| schema(format!("/matrices/{i}/{r}/{c}"), e.to_string()))?;
                    parsed.push(p);
                }
                rows.push(parsed);
            }
            matrices.push(rows);
        }
        URep::new(env, matrices)
    }

    pub fn to_json(&self) -> String {
        let doc = RepDoc {
            rank: self.dim,
            matrices: self
                .matrices
                .iter()
                .map(|m| m.iter().map(|row| row.iter().map(|p| p.to_string()).collect()).collect())
                .collect(),
        };
        serde_json::to_string(&doc).expect("serializable")
    }

    /// `A` itself: rank 1, all `R_i = 0`, so `a . u = eps(a u)`.
    pub fn trivial(env: &Envelope) -> Self {
        URep { nvars: env.nvars(), dim: 1, matrices: vec![vec![vec![Poly::zero(env.nvars())]]; env.rank()] }
    }

    /// Rank one with `R_i = omega_i(F)`: the trivial module twisted by `e^F`.
    pub fn gauge(env: &Envelope, f: &Poly) -> Self {
        let matrices = (0..env.rank()).map(|i| vec![vec![env.presentation().anchor(i).apply(f)]]).collect();
        URep { nvars: env.nvars(), dim: 1, matrices }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self, i: usize) -> &Matrix {
        &self.matrices[i]
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    /// `v . X_i = R_i v - omega_i(v)`.
    pub fn apply_generator(&self, env: &Envelope, i: usize, v: &[Poly]) -> Vec<Poly> {
        let anchor = env.presentation().anchor(i);
        let mut out = mat_vec(&self.matrices[i], v, self.nvars);
        for (o, x) in out.iter_mut().zip(v) {
            o.sub_assign_ref(&anchor.apply(x));
        }
        out
    }

    /// `v . X^alpha`, acting by `X_1` first, then `X_2`, and so on.
    pub fn act_monomial(&self, env: &Envelope, v: &[Poly], alpha: &MultiIndex) -> Vec<Poly> {
        let mut cur = v.to_vec();
        for i in 0..alpha.len() {
            for _ in 0..alpha.get(i) {
                cur = self.apply_generator(env, i, &cur);
            }
        }
        cur
    }

    /// The module law for `i < j`:
    /// `(v . X_i) . X_j - (v . X_j) . X_i = sum_m c_ij^m (v . X_m)`,
    /// tested on the basis vectors and on `x1` times them.
    pub fn check_flatness(&self, env: &Envelope) -> Result<(), AlgebraError> {
        let k = self.nvars;
        let pres = env.presentation();
        let mut probes = Vec::new();
        for q in 0..self.dim {
            let mut e = vec![Poly::zero(k); self.dim];
            e[q] = Poly::one(k);
            if k > 0 {
                probes.push(e.iter().map(|p| p * &Poly::var(k, 0)).collect::<Vec<_>>());
            }
            probes.push(e);
        }
        for i in 0..env.rank() {
            for j in i + 1..env.rank() {
                for v in &probes {
                    let ij = self.apply_generator(env, j, &self.apply_generator(env, i, v));
                    let ji = self.apply_generator(env, i, &self.apply_generator(env, j, v));
                    let mut rhs = vec![Poly::zero(k); self.dim];
                    for m in 0..env.rank() {
                        let c = pres.structure(i, j, m);
                        if c.is_zero() {
                            continue;
                        }
                        for (r, x) in rhs.iter_mut().zip(self.apply_generator(env, m, v)) {
                            r.add_assign_ref(&(c * &x));
                        }
                    }
                    let lhs: Vec<Poly> = ij.iter().zip(&ji).map(|(a, b)| a - b).collect();
                    if lhs != rhs {
                        return Err(AlgebraError::Flatness { i: i + 1, j: j + 1 });
                    }
                }
            }
        }
        Ok(())
    }

    /// `(m (x) n) . u = m . u1 (x) n . u2`: matrices `R (x) I + I (x) R'`, basis index
    /// `p * dim(N) + q`.
    pub fn tensor(&self, other: &URep) -> URep {
        let (d1, d2) = (self.dim, other.dim);
        let k = self.nvars;
        let matrices = self
            .matrices
            .iter()
            .zip(&other.matrices)
            .map(|(a, b)| {
                let mut out = vec![vec![Poly::zero(k); d1 * d2]; d1 * d2];
                for p in 0..d1 {
                    for q in 0..d2 {
                        for p2 in 0..d1 {
                            if !a[p][p2].is_zero() {
                                out[p * d2 + q][p2 * d2 + q].add_assign_ref(&a[p][p2]);
                            }
                        }
                        for q2 in 0..d2 {
                            if !b[q][q2].is_zero() {
                                out[p * d2 + q][p * d2 + q2].add_assign_ref(&b[q][q2]);
                            }
                        }
                    }
                }
                out
            })
            .collect();
        URep { nvars: k, dim: d1 * d2, matrices }
    }

    /// The dual module `M*` in the coordinate dual basis: matrices `-R_i^T`.
    pub fn dual(&self) -> URep {
        let d = self.dim;
        let matrices = self
            .matrices
            .iter()
            .map(|m| (0..d).map(|r| (0..d).map(|c| -&m[c][r]).collect()).collect())
            .collect();
        URep { nvars: self.nvars, dim: d, matrices }
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(&self, other: &URep) -> URep {
        let (d1, d2) = (self.dim, other.dim);
        let k = self.nvars;
        let matrices = self
            .matrices
            .iter()
            .zip(&other.matrices)
            .map(|(a, b)| {
                let mut out = vec![vec![Poly::zero(k); d1 + d2]; d1 + d2];
                for r in 0..d1 {
                    out[r][..d1].clone_from_slice(&a[r]);
                }
                for r in 0..d2 {
                    out[d1 + r][d1..].clone_from_slice(&b[r]);
                }
                out
            })
            .collect();
        URep { nvars: k, dim: d1 + d2, matrices }
    }
}

/// A representative `phi (x) m` of an element of `U°`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DualRep {
    pub rep: URep,
    pub phi: Vec<Poly>,
    pub m: Vec<Poly>,
}

impl DualRep {
    pub fn new(rep: URep, phi: Vec<Poly>, m: Vec<Poly>) -> Result<Self, AlgebraError> {
        if phi.len() != rep.dim || m.len() != rep.dim {
            return Err(AlgebraError::Dimension(format!(
                "phi and m must have length {}, got {} and {}",
                rep.dim,
                phi.len(),
                m.len()
            )));
        }
        Ok(DualRep { rep, phi, m })
    }

    /// `eta(a' (x) a)`: the trivial module with `phi = a'`, `m = a`.
    pub fn eta(env: &Envelope, source: Poly, target: Poly) -> Self {
        DualRep { rep: URep::trivial(env), phi: vec![source], m: vec![target] }
    }

    /// `eps°(phi (x) m) = phi(m)`.
    pub fn counit(&self) -> Poly {
        dot(&self.phi, &self.m, self.rep.nvars)
    }

    /// Product on `M (x) N` with `(phi (x) psi, m (x) n)`.
    pub fn mul(&self, other: &DualRep) -> DualRep {
        DualRep { rep: self.rep.tensor(&other.rep), phi: kron(&self.phi, &other.phi), m: kron(&self.m, &other.m) }
    }

    /// `Delta°(phi (x) m) = sum_q (phi (x) e_q) (x) (e_q* (x) m)`.
    pub fn coprod(&self) -> Vec<(DualRep, DualRep)> {
        let k = self.rep.nvars;
        (0..self.rep.dim)
            .map(|q| {
                let mut e = vec![Poly::zero(k); self.rep.dim];
                e[q] = Poly::one(k);
                (
                    DualRep { rep: self.rep.clone(), phi: self.phi.clone(), m: e.clone() },
                    DualRep { rep: self.rep.clone(), phi: e, m: self.m.clone() },
                )
            })
            .collect()
    }

    /// `S°(phi (x) m) = ev_m (x) phi` on `M*`.
    pub fn antipode(&self) -> DualRep {
        DualRep { rep: self.rep.dual(), phi: self.m.clone(), m: self.phi.clone() }
    }

    /// Representative of `self + other` on `M (+) N`.
    pub fn sum(&self, other: &DualRep) -> DualRep {
        DualRep {
            rep: self.rep.direct_sum(&other.rep),
            phi: self.phi.iter().chain(&other.phi).cloned().collect(),
            m: self.m.iter().chain(&other.m).cloned().collect(),
        }
    }

    /// Projection to the augmentation ideal: `w - eta(eps°(w) (x) 1)`.
    pub fn normalized(&self, env: &Envelope) -> DualRep {
        let c = self.counit();
        self.sum(&DualRep::eta(env, -c, Poly::one(env.nvars())))
    }

    /// `zeta(w)` truncated at precision `n`, reusing `m . X^(alpha - e_j)` for `m . X^alpha`.
    pub fn zeta(&self, env: &Envelope, n: u32) -> TruncatedFunctional {
        self.truncate(env, n)
    }
}

/// `zeta(phi (x) m)(X^alpha) = phi(m . X^alpha)`.
impl FunctionalOracle for DualRep {
    fn value(&self, env: &Envelope, alpha: &MultiIndex) -> Poly {
        dot(&self.phi, &self.rep.act_monomial(env, &self.m, alpha), self.rep.nvars)
    }

    fn truncate(&self, env: &Envelope, n: u32) -> TruncatedFunctional {
        let mut acted: BTreeMap<MultiIndex, Vec<Poly>> = BTreeMap::new();
        let mut table = Vec::new();
        for alpha in env.basis(n) {
            let v = match alpha.last_nonzero() {
                None => self.m.clone(),
                Some(j) => {
                    let prev = &acted[&alpha.decrement(j).expect("nonzero exponent")];
                    self.rep.apply_generator(env, j, prev)
                }
            };
            table.push((alpha.clone(), dot(&self.phi, &v, self.rep.nvars)));
            acted.insert(alpha, v);
        }
        TruncatedFunctional::from_table(env, n, table).expect("within precision")
    }
}

/// `zeta(w_1 ... w_l)` vanishes on `F^(l-1) U` when every `w_i` lies in `ker eps°`. Each
/// factor is normalized first; returns the vanishing level reached at precision `l`.
pub fn k_order_level(env: &Envelope, ws: &[DualRep]) -> u32 {
    let l = ws.len() as u32;
    let mut product = DualRep::eta(env, Poly::one(env.nvars()), Poly::one(env.nvars()));
    for w in ws {
        product = product.mul(&w.normalized(env));
    }
    product.zeta(env, l).vanishing_level()
}

pub fn k_order_check(env: &Envelope, ws: &[DualRep]) -> bool {
    k_order_level(env, ws) >= ws.len() as u32
}

/// Rank over `Frac(A)` of `{zeta(w)|F^n U}` in `(F^n U)*`, and the full rank.
pub fn density_diagnostic(env: &Envelope, ws: &[DualRep], n: u32) -> (usize, usize) {
    let basis = env.basis(n);
    let rows: Vec<Vec<Poly>> = ws
        .iter()
        .map(|w| {
            let z = w.zeta(env, n);
            basis.iter().map(|a| z.at(a).expect("within precision")).collect()
        })
        .collect();
    (linalg::rank(&rows, env.nvars()), basis.len())
}

/// Compares `Delta°(w)` with `Delta*(zeta(w))` at levels `(m, n)` through `phi_{m,n}`.
pub fn coprod_compatible(env: &Envelope, w: &DualRep, m: u32, n: u32) -> Result<bool, AlgebraError> {
    let parts: Vec<(TruncatedFunctional, TruncatedFunctional)> =
        w.coprod().iter().map(|(a, b)| (a.zeta(env, m), b.zeta(env, n))).collect();
    Ok(phi_mn(env, &parts, m, n)? == delta_star(env, &w.zeta(env, m + n), m, n)?)
}

/// A flat representation built from twisted trivial modules, their duals, sums and
/// products; over a rank-one algebroid also arbitrary 2x2 matrices.
pub fn sample_rep(env: &Envelope, sampler: &mut Sampler) -> URep {
    let k = env.nvars();
    let choice = sampler.below(if env.rank() == 1 { 6 } else { 5 });
    match choice {
        0 => URep::trivial(env),
        1 => URep::gauge(env, &sampler.poly(k, 2, 2)),
        2 => URep::gauge(env, &sampler.poly(k, 2, 2)).direct_sum(&URep::gauge(env, &sampler.poly(k, 2, 2))),
        3 => URep::gauge(env, &sampler.poly(k, 2, 2)).dual(),
        4 => URep::gauge(env, &sampler.poly(k, 1, 2)).tensor(&URep::gauge(env, &sampler.poly(k, 1, 2))),
        _ => {
            let m = (0..2).map(|_| (0..2).map(|_| sampler.poly(k, 1, 2)).collect()).collect();
            URep::new(env, vec![m]).expect("rank-one algebroids have no flatness condition")
        }
    }
}

pub fn sample_dualrep(env: &Envelope, sampler: &mut Sampler) -> DualRep {
    let rep = sample_rep(env, sampler);
    let d = rep.dim();
    let phi = (0..d).map(|_| sampler.poly(env.nvars(), 1, 2)).collect();
    let m = (0..d).map(|_| sampler.poly(env.nvars(), 1, 2)).collect();
    DualRep::new(rep, phi, m).expect("dimensions agree")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filtered_dual::{convolve, vartheta};
    use crate::fixtures::Fixture;
    use crate::hopf::antipode_star;

    fn env(f: Fixture) -> Envelope {
        Envelope::new(f.presentation())
    }

    fn p(s: &str) -> Poly {
        parse_poly(s, 1).unwrap()
    }

    #[test]
    fn loading_representations() {
        let w1 = env(Fixture::W1);
        let exp = URep::from_json(&w1, r#"{"rank": 1, "matrices": [[["1"]]]}"#).unwrap();
        assert_eq!(exp.dim(), 1);
        let trivial = URep::from_json(&w1, r#"{"rank": 1, "matrices": [[["0"]]]}"#).unwrap();
        assert_eq!(trivial, URep::trivial(&w1));
        let aff = env(Fixture::Aff);
        assert!(matches!(
            URep::from_json(&aff, r#"{"rank": 1, "matrices": [[["1"]], [["0"]]]}"#),
            Err(AlgebraError::Flatness { i: 1, j: 2 })
        ));
        // a character vanishing on [L, L] = span(X1)
        URep::from_json(&aff, r#"{"rank": 1, "matrices": [[["0"]], [["1"]]]}"#).unwrap();
        URep::from_json(&aff, r#"{"rank": 1, "matrices": [[["x1"]], [["x1^2 + 5"]]]}"#).unwrap();
        let err = URep::from_json(&w1, r#"{"rank": 1, "matrices": [[["1 +"]]]}"#).unwrap_err();
        assert!(matches!(err, AlgebraError::Schema { ref path, .. } if path == "/matrices/0/0/0"), "{err}");
        let err = URep::from_json(&w1, r#"{"rank": 1, "matrices": [[["1"]]], "extra": 1}"#).unwrap_err();
        assert!(matches!(err, AlgebraError::Schema { .. }));
        let err = URep::from_json(&w1, r#"{"rank": 2, "matrices": [[["1"]]]}"#).unwrap_err();
        assert!(matches!(err, AlgebraError::Schema { ref path, .. } if path == "/matrices/0"));
    }

    #[test]
    fn action_examples() {
        let w1 = env(Fixture::W1);
        let trivial = URep::trivial(&w1);
        let x2 = vec![p("x1^2")];
        assert_eq!(trivial.act_monomial(&w1, &x2, &MultiIndex::new(vec![1])), vec![p("-2*x1")]);
        assert_eq!(trivial.act_monomial(&w1, &x2, &MultiIndex::zero(1)), x2);
        let exp = URep::new(&w1, vec![vec![vec![p("1")]]]).unwrap();
        for k in 0..5 {
            assert_eq!(exp.act_monomial(&w1, &[p("1")], &MultiIndex::new(vec![k])), vec![p("1")]);
        }
    }

    #[test]
    fn zeta_examples() {
        let w1 = env(Fixture::W1);
        let eta = DualRep::eta(&w1, p("x1 + 1"), p("x1^2"));
        assert_eq!(eta.zeta(&w1, 3), vartheta(p("x1 + 1"), p("x1^2")).truncate(&w1, 3));
        let exp = DualRep::new(URep::new(&w1, vec![vec![vec![p("1")]]]).unwrap(), vec![p("1")], vec![p("1")]).unwrap();
        let z = exp.zeta(&w1, 3);
        for alpha in w1.basis(3) {
            assert_eq!(z.at(&alpha).unwrap(), p("1"));
        }
        assert_eq!(z.at(&MultiIndex::zero(1)).unwrap(), exp.counit());
        // the slow path agrees with the incremental one
        let aff = env(Fixture::Aff);
        let mut s = Sampler::new(3);
        let w = sample_dualrep(&aff, &mut s);
        let slow: Vec<Poly> = aff.basis(3).iter().map(|a| w.value(&aff, a)).collect();
        let fast = w.zeta(&aff, 3);
        let fast: Vec<Poly> = aff.basis(3).iter().map(|a| fast.at(a).unwrap()).collect();
        assert_eq!(slow, fast);
    }

    #[test]
    fn constructions() {
        let w1 = env(Fixture::W1);
        let exp = URep::new(&w1, vec![vec![vec![p("1")]]]).unwrap();
        assert_eq!(exp.tensor(&exp).matrix(0), &vec![vec![p("2")]]);
        assert_eq!(URep::trivial(&w1).tensor(&exp), exp);
        assert_eq!(exp.dual().matrix(0), &vec![vec![p("-1")]]);
        assert_eq!(URep::trivial(&w1).dual(), URep::trivial(&w1));
        let mut s = Sampler::new(1);
        for f in Fixture::ALL {
            let e = env(f);
            for _ in 0..10 {
                let (a, b) = (sample_rep(&e, &mut s), sample_rep(&e, &mut s));
                a.check_flatness(&e).unwrap();
                a.tensor(&b).check_flatness(&e).unwrap();
                a.dual().check_flatness(&e).unwrap();
                assert_eq!(a.dual().dual(), a);
            }
        }
    }

    #[test]
    fn structure_maps_through_zeta() {
        let mut s = Sampler::new(2);
        for f in Fixture::ALL {
            let e = env(f);
            for _ in 0..5 {
                let (w1, w2) = (sample_dualrep(&e, &mut s), sample_dualrep(&e, &mut s));
                assert_eq!(w1.mul(&w2).zeta(&e, 3), convolve(&e, &w1.zeta(&e, 3), &w2.zeta(&e, 3)));
                assert_eq!(w1.antipode().zeta(&e, 3), antipode_star(&e, &w1.zeta(&e, 3)));
                assert!(coprod_compatible(&e, &w1, 2, 2).unwrap());
                assert!(k_order_check(&e, &[w1.clone(), w2.clone()]));
            }
        }
        let w1 = env(Fixture::W1);
        assert_eq!(DualRep::eta(&w1, p("x1"), p("x1 + 2")).counit(), p("x1^2 + 2*x1"));
    }

    #[test]
    fn density_examples() {
        let w1 = env(Fixture::W1);
        let unit = DualRep::eta(&w1, p("1"), p("1"));
        assert_eq!(density_diagnostic(&w1, std::slice::from_ref(&unit), 0), (1, 1));
        assert_eq!(density_diagnostic(&w1, &[], 2), (0, 3));
        let exp = DualRep::new(URep::new(&w1, vec![vec![vec![p("1")]]]).unwrap(), vec![p("1")], vec![p("1")]).unwrap();
        let ws = vec![unit, DualRep::eta(&w1, p("1"), p("x1")), DualRep::eta(&w1, p("1"), p("x1^2")), exp];
        assert_eq!(density_diagnostic(&w1, &ws, 2), (3, 3));
    }
}
