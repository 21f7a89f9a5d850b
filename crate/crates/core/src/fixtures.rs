//! Built-in presentations used by tests, the acceptance suite and the CLI.

use std::fmt;
use std::str::FromStr;

use crate::lie_rinehart::LRPresentation;

/// First Weyl algebra: `A = Q[x1]`, `L = Der(A)` spanned by `d/dx1`.
pub const W1_JSON: &str = r#"{"variables": 1, "rank": 1, "anchor": [["1"]]}"#;

/// Second Weyl algebra: `A = Q[x1, x2]`, `L = Der(A)` in the coordinate basis.
pub const W2_JSON: &str = r#"{"variables": 2, "rank": 2, "anchor": [["1", "0"], ["0", "1"]]}"#;

/// Affine Lie algebroid on the line: `X1 -> d/dx1`, `X2 -> x1 d/dx1`, `[X2, X1] = -X1`.
pub const AFF_JSON: &str = r#"{
  "variables": 1,
  "rank": 2,
  "anchor": [["1"], ["x1"]],
  "bracket": {"1,2": ["1", "0"], "2,1": ["-1", "0"]}
}"#;

/// `AFF` with the bracket sign flipped; violates the anchor morphism property.
pub const AFF_WRONG_SIGN_JSON: &str = r#"{
  "variables": 1,
  "rank": 2,
  "anchor": [["1"], ["x1"]],
  "bracket": {"1,2": ["-1", "0"], "2,1": ["1", "0"]}
}"#;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Fixture {
    W1,
    W2,
    Aff,
}

impl Fixture {
    pub const ALL: [Fixture; 3] = [Fixture::W1, Fixture::W2, Fixture::Aff];

    pub fn json(self) -> &'static str {
        match self {
            Fixture::W1 => W1_JSON,
            Fixture::W2 => W2_JSON,
            Fixture::Aff => AFF_JSON,
        }
    }

    pub fn presentation(self) -> LRPresentation {
        LRPresentation::from_json(self.json()).expect("built-in fixture is valid")
    }

    pub fn name(self) -> &'static str {
        match self {
            Fixture::W1 => "W1",
            Fixture::W2 => "W2",
            Fixture::Aff => "AFF",
        }
    }
}

impl fmt::Display for Fixture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Fixture {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "W1" => Ok(Fixture::W1),
            "W2" => Ok(Fixture::W2),
            "AFF" => Ok(Fixture::Aff),
            other => Err(format!("unknown fixture `{other}` (expected W1, W2 or AFF)")),
        }
    }
}
