//! Exact computations with the universal enveloping Hopf algebroid `V_A(L)` of a free
//! Lie-Rinehart algebra over `A = Q[x1..xk]`, its convolution algebra `U*`, the finite
//! dual `U°` and the jets algebra.

pub mod enveloping;
pub mod error;
pub mod expr;
pub mod filtered_dual;
pub mod finite_dual;
pub mod fixtures;
pub mod hopf;
pub mod jets;
pub mod lie_rinehart;
pub mod linalg;
pub mod poly;
pub mod random;
pub mod report;
pub mod suites;

pub use enveloping::{Balance, EnvElement, Envelope, Tensor, TensorFlavor, TranslationRule};
pub use error::{AlgebraError, Result};
pub use fixtures::Fixture;
pub use lie_rinehart::{LElement, LRPresentation};
pub use poly::{Derivation, MultiIndex, Poly, Rational};
