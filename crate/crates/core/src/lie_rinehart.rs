//! Lie-Rinehart algebras `(A, L)` with `A = Q[x1..xk]` and `L` free of rank `r`.
//!
//! A presentation fixes a basis `X1..Xr` of `L`, the anchor `omega(X_i)` as a derivation of
//! `A`, and structure functions with `[X_i, X_j] = sum_m X_m * c[i][j][m]` (right
//! coefficients).

use std::collections::BTreeMap;

use serde::Deserialize;

use crate::error::AlgebraError;
use crate::expr::parse_poly;
use crate::poly::{Derivation, Poly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LRPresentation {
    nvars: usize,
    rank: usize,
    anchor: Vec<Derivation>,
    /// `bracket[i][j][m]`
    bracket: Vec<Vec<Vec<Poly>>>,
}

/// An element `sum_m X_m * a_m` of `L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LElement {
    coeffs: Vec<Poly>,
}

impl LElement {
    pub fn new(coeffs: Vec<Poly>) -> Self {
        LElement { coeffs }
    }

    pub fn zero(nvars: usize, rank: usize) -> Self {
        LElement { coeffs: vec![Poly::zero(nvars); rank] }
    }

    pub fn basis(nvars: usize, rank: usize, i: usize) -> Self {
        let mut e = LElement::zero(nvars, rank);
        e.coeffs[i] = Poly::one(nvars);
        e
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Poly::is_zero)
    }

    pub fn add(&self, other: &LElement) -> LElement {
        LElement { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &LElement) -> LElement {
        LElement { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, a: &Poly) -> LElement {
        LElement { coeffs: self.coeffs.iter().map(|c| c * a).collect() }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PresentationDoc {
    variables: usize,
    rank: usize,
    anchor: Vec<Vec<String>>,
    #[serde(default)]
    bracket: BTreeMap<String, Vec<String>>,
}

fn schema(path: impl Into<String>, message: impl Into<String>) -> AlgebraError {
    AlgebraError::Schema { path: path.into(), message: message.into() }
}

fn parse_at(text: &str, nvars: usize, path: String) -> Result<Poly, AlgebraError> {
    parse_poly(text, nvars).map_err(|e| schema(path, e.to_string()))
}

impl LRPresentation {
    /// Builds and validates a presentation.
    pub fn new(
        anchor: Vec<Derivation>,
        bracket: Vec<Vec<Vec<Poly>>>,
    ) -> Result<Self, AlgebraError> {
        let rank = anchor.len();
        let nvars = anchor.first().map(Derivation::nvars).unwrap_or(0);
        let p = Self::new_unchecked(nvars, anchor, bracket)?;
        if rank == 0 {
            return Err(schema("/rank", "rank must be at least 1"));
        }
        p.validate()?;
        Ok(p)
    }

    /// Builds a presentation checking only dimensions, not the Lie-Rinehart axioms.
    pub fn new_unchecked(
        nvars: usize,
        anchor: Vec<Derivation>,
        bracket: Vec<Vec<Vec<Poly>>>,
    ) -> Result<Self, AlgebraError> {
        let rank = anchor.len();
        if nvars == 0 {
            return Err(schema("/variables", "need at least one variable"));
        }
        if anchor.iter().any(|d| d.nvars() != nvars) {
            return Err(AlgebraError::Dimension("anchor derivations over wrong ring".into()));
        }
        let ok = bracket.len() == rank
            && bracket.iter().all(|row| {
                row.len() == rank
                    && row.iter().all(|c| c.len() == rank && c.iter().all(|p| p.nvars() == nvars))
            });
        if !ok {
            return Err(AlgebraError::Dimension("bracket table must be rank x rank x rank".into()));
        }
        Ok(LRPresentation { nvars, rank, anchor, bracket })
    }

    /// Parses the JSON presentation document and validates all axioms.
    pub fn from_json(document: &str) -> Result<Self, AlgebraError> {
        let p = Self::from_json_unchecked(document)?;
        p.validate()?;
        Ok(p)
    }

    pub fn from_json_unchecked(document: &str) -> Result<Self, AlgebraError> {
        let de = &mut serde_json::Deserializer::from_str(document);
        let doc: PresentationDoc = serde_path_to_error::deserialize(de).map_err(|e| {
            let path = e.path().to_string();
            schema(json_pointer(&path), e.into_inner().to_string())
        })?;
        let (k, r) = (doc.variables, doc.rank);
        if k == 0 {
            return Err(schema("/variables", "need at least one variable"));
        }
        if r == 0 {
            return Err(schema("/rank", "rank must be at least 1"));
        }
        if doc.anchor.len() != r {
            return Err(schema("/anchor", format!("expected {r} rows, got {}", doc.anchor.len())));
        }
        let mut anchor = Vec::with_capacity(r);
        for (i, row) in doc.anchor.iter().enumerate() {
            if row.len() != k {
                return Err(schema(format!("/anchor/{i}"), format!("expected {k} entries")));
            }
            let comps = row
                .iter()
                .enumerate()
                .map(|(j, s)| parse_at(s, k, format!("/anchor/{i}/{j}")))
                .collect::<Result<Vec<_>, _>>()?;
            anchor.push(Derivation::new(comps)?);
        }
        let mut bracket = vec![vec![vec![Poly::zero(k); r]; r]; r];
        for (key, entry) in &doc.bracket {
            let path = format!("/bracket/{key}");
            let (i, j) = parse_pair(key, r).ok_or_else(|| {
                schema(path.clone(), format!("key must be \"i,j\" with 1 <= i, j <= {r}"))
            })?;
            if entry.len() != r {
                return Err(schema(path, format!("expected {r} entries")));
            }
            for (m, s) in entry.iter().enumerate() {
                bracket[i][j][m] = parse_at(s, k, format!("{path}/{m}"))?;
            }
        }
        Self::new_unchecked(k, anchor, bracket)
    }

    /// Checks antisymmetry, the anchor morphism property and the Jacobi identity on basis
    /// triples.
    pub fn validate(&self) -> Result<(), AlgebraError> {
        let r = self.rank;
        for i in 0..r {
            for j in i..r {
                for m in 0..r {
                    if self.bracket[i][j][m] != -&self.bracket[j][i][m] {
                        return Err(AlgebraError::Antisymmetry { i: i + 1, j: j + 1 });
                    }
                }
            }
        }
        for i in 0..r {
            for j in (i + 1)..r {
                let lhs = self.anchor_derivation(&self.bracket_generators(i, j));
                let rhs = self.anchor[i].commutator(&self.anchor[j]);
                if lhs != rhs {
                    return Err(AlgebraError::AnchorMorphism { i: i + 1, j: j + 1 });
                }
            }
        }
        for i in 0..r {
            for j in (i + 1)..r {
                for k in (j + 1)..r {
                    let (a, b, c) = (self.generator(i), self.generator(j), self.generator(k));
                    let sum = self
                        .bracket(&a, &self.bracket(&b, &c))
                        .add(&self.bracket(&b, &self.bracket(&c, &a)))
                        .add(&self.bracket(&c, &self.bracket(&a, &b)));
                    if !sum.is_zero() {
                        return Err(AlgebraError::Jacobi { i: i + 1, j: j + 1, k: k + 1 });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn anchor(&self, i: usize) -> &Derivation {
        &self.anchor[i]
    }

    pub fn anchors(&self) -> &[Derivation] {
        &self.anchor
    }

    /// `c[i][j][m]`
    pub fn structure(&self, i: usize, j: usize, m: usize) -> &Poly {
        &self.bracket[i][j][m]
    }

    pub fn generator(&self, i: usize) -> LElement {
        LElement::basis(self.nvars, self.rank, i)
    }

    pub fn bracket_generators(&self, i: usize, j: usize) -> LElement {
        LElement::new(self.bracket[i][j].clone())
    }

    /// The A-linear extension of the anchor, as a derivation.
    pub fn anchor_derivation(&self, xi: &LElement) -> Derivation {
        let mut d = Derivation::zero(self.nvars);
        for (m, a) in xi.coeffs().iter().enumerate() {
            if !a.is_zero() {
                d = d.add(&self.anchor[m].scale_by(a));
            }
        }
        d
    }

    /// `xi(a) = sum_m a_m * omega(X_m)(a)`.
    pub fn anchor_apply(&self, xi: &LElement, a: &Poly) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (m, c) in xi.coeffs().iter().enumerate() {
            if !c.is_zero() {
                out.add_assign_ref(&(c * &self.anchor[m].apply(a)));
            }
        }
        out
    }

    /// Bilinear extension of the bracket through the Leibniz rule
    /// `[X, aY] = a[X,Y] + X(a)Y` and antisymmetry.
    pub fn bracket(&self, xi: &LElement, eta: &LElement) -> LElement {
        let mut out = LElement::zero(self.nvars, self.rank);
        for (m, a) in xi.coeffs().iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (n, b) in eta.coeffs().iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out = out.add(&self.bracket_generators(m, n).scale(&(a * b)));
            }
        }
        let mut leibniz = Vec::with_capacity(self.rank);
        for n in 0..self.rank {
            let plus = self.anchor_apply(xi, &eta.coeffs()[n]);
            let minus = self.anchor_apply(eta, &xi.coeffs()[n]);
            leibniz.push(&plus - &minus);
        }
        out.add(&LElement::new(leibniz))
    }

    /// True when the anchors are exactly the coordinate derivations and `r = k`, i.e. the
    /// presentation is `(A, Der(A))` in the standard basis.
    pub fn is_coordinate_derivations(&self) -> bool {
        self.rank == self.nvars
            && self
                .anchor
                .iter()
                .enumerate()
                .all(|(i, d)| *d == Derivation::coordinate(self.nvars, i))
            && self.bracket.iter().flatten().flatten().all(Poly::is_zero)
    }

    /// Serializes back to the JSON document format.
    pub fn to_json(&self) -> String {
        let anchor: Vec<Vec<String>> = self
            .anchor
            .iter()
            .map(|d| d.components().iter().map(|p| p.to_string()).collect())
            .collect();
        let mut bracket = serde_json::Map::new();
        for i in 0..self.rank {
            for j in 0..self.rank {
                if self.bracket[i][j].iter().any(|p| !p.is_zero()) {
                    bracket.insert(
                        format!("{},{}", i + 1, j + 1),
                        self.bracket[i][j].iter().map(|p| p.to_string()).collect(),
                    );
                }
            }
        }
        serde_json::json!({
            "variables": self.nvars,
            "rank": self.rank,
            "anchor": anchor,
            "bracket": bracket,
        })
        .to_string()
    }
}

fn parse_pair(key: &str, r: usize) -> Option<(usize, usize)> {
    let (a, b) = key.split_once(',')?;
    let i: usize = a.trim().parse().ok()?;
    let j: usize = b.trim().parse().ok()?;
    ((1..=r).contains(&i) && (1..=r).contains(&j)).then(|| (i - 1, j - 1))
}

/// Converts a serde path like `anchor[0][1]` to a JSON pointer `/anchor/0/1`.
pub fn json_pointer(path: &str) -> String {
    if path == "." || path.is_empty() {
        return "/".into();
    }
    let mut out = String::new();
    for seg in path.split(['.', '[']) {
        let seg = seg.trim_end_matches(']');
        if !seg.is_empty() {
            out.push('/');
            out.push_str(seg);
        }
    }
    if out.is_empty() {
        out.push('/');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{Fixture, AFF_WRONG_SIGN_JSON};

    fn p(s: &str, k: usize) -> Poly {
        parse_poly(s, k).unwrap()
    }

    #[test]
    fn fixtures_load() {
        for f in Fixture::ALL {
            f.presentation();
        }
        let aff = Fixture::Aff.presentation();
        assert_eq!(aff.rank(), 2);
        assert_eq!(aff.structure(1, 0, 0), &p("-1", 1));
    }

    #[test]
    fn wrong_sign_affine_is_rejected() {
        let err = LRPresentation::from_json(AFF_WRONG_SIGN_JSON).unwrap_err();
        assert_eq!(err, AlgebraError::AnchorMorphism { i: 1, j: 2 });
    }

    #[test]
    fn antisymmetry_violation_names_indices() {
        let doc = r#"{"variables":1,"rank":2,"anchor":[["1"],["x1"]],"bracket":{"2,1":["-1","0"]}}"#;
        assert_eq!(
            LRPresentation::from_json(doc).unwrap_err(),
            AlgebraError::Antisymmetry { i: 1, j: 2 }
        );
    }

    #[test]
    fn jacobi_violation_is_detected() {
        // Abelian anchors (zero) so the anchor check passes; a bracket table that is not a Lie
        // algebra: [X1,X2] = X3, [X2,X3] = X1, [X3,X1] = X3.
        let doc = r#"{"variables":1,"rank":3,"anchor":[["0"],["0"],["0"]],"bracket":{
            "1,2":["0","0","1"],"2,1":["0","0","-1"],
            "2,3":["1","0","0"],"3,2":["-1","0","0"],
            "3,1":["0","0","1"],"1,3":["0","0","-1"]}}"#;
        assert_eq!(
            LRPresentation::from_json(doc).unwrap_err(),
            AlgebraError::Jacobi { i: 1, j: 2, k: 3 }
        );
    }

    #[test]
    fn schema_errors_have_pointer_paths() {
        let err = LRPresentation::from_json(r#"{"variables":1,"rank":1,"anchor":[["x2"]]}"#)
            .unwrap_err();
        assert!(matches!(err, AlgebraError::Schema { ref path, .. } if path == "/anchor/0/0"));
        let err = LRPresentation::from_json(r#"{"variables":1,"rank":"one","anchor":[]}"#)
            .unwrap_err();
        assert!(matches!(err, AlgebraError::Schema { ref path, .. } if path == "/rank"), "{err:?}");
        let err = LRPresentation::from_json(
            r#"{"variables":1,"rank":1,"anchor":[["1"]],"bracket":{"1,3":["0"]}}"#,
        )
        .unwrap_err();
        assert!(matches!(err, AlgebraError::Schema { ref path, .. } if path == "/bracket/1,3"));
    }

    #[test]
    fn brackets_on_fixtures() {
        let w1 = Fixture::W1.presentation();
        let x = LElement::new(vec![p("1", 1)]);
        let xx = LElement::new(vec![p("x1", 1)]);
        assert!(w1.bracket(&x, &x).is_zero());
        assert_eq!(w1.bracket(&x, &xx), x);
        let aff = Fixture::Aff.presentation();
        assert_eq!(
            aff.bracket(&aff.generator(1), &aff.generator(0)),
            LElement::new(vec![p("-1", 1), p("0", 1)])
        );
    }

    #[test]
    fn anchor_application() {
        let w1 = Fixture::W1.presentation();
        assert_eq!(w1.anchor_apply(&w1.generator(0), &p("x1^2", 1)), p("2*x1", 1));
        let aff = Fixture::Aff.presentation();
        assert_eq!(aff.anchor_apply(&aff.generator(1), &p("x1", 1)), p("x1", 1));
        assert!(aff.anchor_apply(&aff.generator(1), &p("1", 1)).is_zero());
    }

    #[test]
    fn json_round_trip() {
        for f in Fixture::ALL {
            let pres = f.presentation();
            assert_eq!(LRPresentation::from_json(&pres.to_json()).unwrap(), pres);
        }
    }

    #[test]
    fn pointer_conversion() {
        assert_eq!(json_pointer("anchor[0][1]"), "/anchor/0/1");
        assert_eq!(json_pointer("rank"), "/rank");
        assert_eq!(json_pointer("."), "/");
    }
}
