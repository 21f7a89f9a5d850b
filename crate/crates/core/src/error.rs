use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("variable count mismatch: {left} vs {right}")]
    VariableCountMismatch { left: usize, right: usize },

    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("unknown variable `{name}` at position {position}")]
    UnknownVariable { name: String, position: usize },

    #[error("schema violation at {path}: {message}")]
    Schema { path: String, message: String },

    #[error("bracket is not antisymmetric: c[{i}][{j}] != -c[{j}][{i}] (1-based generators)")]
    Antisymmetry { i: usize, j: usize },

    #[error("Jacobi identity fails on generators ({i}, {j}, {k}) (1-based)")]
    Jacobi { i: usize, j: usize, k: usize },

    #[error("anchor is not a Lie morphism on generators ({i}, {j}) (1-based): omega([X{i},X{j}]) != [omega(X{i}), omega(X{j})]")]
    AnchorMorphism { i: usize, j: usize },

    #[error("precision exceeded: element of degree {degree} needs a functional of precision >= {degree}, got {precision}")]
    PrecisionExceeded { degree: u32, precision: u32 },

    #[error("representation is not flat on generators ({i}, {j}) (1-based)")]
    Flatness { i: usize, j: usize },

    #[error("level mismatch: expected ({expected_m}, {expected_n}), got ({got_m}, {got_n})")]
    LevelMismatch { expected_m: u32, expected_n: u32, got_m: u32, got_n: u32 },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("presentation is not the full derivation module Der(A) with coordinate anchors")]
    NotDerivationModule,
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
