//! Computer-algebra kernel for β-graded vanishing ideals of point sets in
//! toric quotients `(F_q^r \ V(B)) / G`, and the evaluation codes they define.
//!
//! The crate is layered bottom-up:
//!
//! * [`gf`]: exact arithmetic in `GF(p^k)`.
//! * [`poly`]: sparse polynomials in a ring graded by an integer matrix β.
//! * [`groebner`]: Buchberger's algorithm and the ideal calculus built on it
//!   (elimination, intersection, colon, saturation).
//! * [`lattice`]: integer kernels via Hermite normal form and lattice ideals.
//! * [`vanishing`]: the vanishing-ideal pipelines (elimination of a rational
//!   parameterization, cellular sums of lattice ideals, colon by the
//!   irrelevant ideal) and orbit enumeration.
//! * [`codes`]: evaluation codes and their parameters `[N, K, δ]`.

pub mod codes;
pub mod error;
pub mod gf;
pub mod groebner;
pub mod lattice;
pub mod poly;
pub mod vanishing;

pub use codes::{CodeParams, EvaluationCode};
pub use error::{Error, Result};
pub use gf::{FieldElement, FiniteField};
pub use groebner::{Budget, Ideal};
pub use lattice::{IntLattice, Support};
pub use poly::{Monomial, MonomialOrder, Polynomial, Ring};
pub use vanishing::{OrbitPoint, RationalMap, ToricData};
