//! Root counting on the complex unit circle for self-inversive polynomials.
//!
//! A polynomial `p(z) = a_0 + ... + a_n z^n` is self-inversive when
//! `a_{n-k} = omega * conj(a_k)` for some `|omega| = 1`. Simple coefficient
//! inequalities then guarantee how many of its roots lie on `|z| = 1`. This
//! crate evaluates those inequalities ([`criteria`]), and checks every claim
//! against an independent numeric root finder and argument-principle counter
//! ([`oracle`]). The [`bethe`] and [`salem`] modules cover two families where
//! the inequalities have a direct interpretation.

pub mod bethe;
pub mod config;
pub mod criteria;
pub mod inversive;
pub mod oracle;
pub mod poly;
pub mod salem;

pub use config::Tolerances;
pub use criteria::{PredictionKind, RootCountPrediction};
pub use inversive::{InversiveReport, SelfInversive};
pub use oracle::{Band, Oracle, RootClassification};
pub use poly::{Coeff, PolyError, Polynomial};
