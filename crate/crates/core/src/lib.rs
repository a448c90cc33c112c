//! Exact computations around the center of the quantized enveloping algebra
//! `U_q(g)` at generic `q`, through its Harish-Chandra image: the even
//! sublattice `Q ∩ 2Λ`, the dominant monoid `Ψ = {λ ∈ Λ⁺ : 2λ ∈ Q}`, its
//! Hilbert basis, and binomial presentations of the monoid algebra.

pub mod appendix;
pub mod characters;
pub mod error;
pub mod exec;
pub mod lattice;
pub mod monoid;
pub mod presentation;
pub mod rational;
pub mod report;
pub mod root_system;
pub mod suite;
pub mod weyl;

pub use error::{Error, Result};
pub use exec::{Execution, Limits};
pub use lattice::{IntegerLattice, LatticeCase};
pub use rational::Rational;
pub use root_system::{CartanData, Family, LieType, RootCoords, Weight};
