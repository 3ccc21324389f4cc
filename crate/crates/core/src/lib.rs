//! Numerical semigroups attached to negative-definite Seifert rational
//! homology spheres.
//!
//! A star-shaped plumbing graph with Seifert invariants
//! `(-b0; (alpha_i, omega_i))` carries the quasi-linear function
//! `N(l) = b0*l - sum ceil(l*omega_i/alpha_i)`. Its non-negativity locus is a
//! numerical semigroup `S`, and `{N >= -1}` is an `S`-module `M`. This crate
//! computes both, their Frobenius numbers by brute force and by the lattice
//! formulas driven by generalized Laufer computation sequences, and the
//! surrounding lattice data (dual cycles, canonical cycle, classes in
//! `H = L'/L`).
//!
//! All arithmetic on cycles is exact ([`Q`] is an arbitrary-precision
//! rational).

pub mod augment;
pub mod brieskorn;
mod error;
pub mod lattice;
pub mod laufer;
pub mod random;
pub mod rational;
pub mod report;
pub mod seifert;
pub mod semigroup;
pub mod verify;

pub use error::{Error, Result};
pub use lattice::{build_graph, ClassRep, RationalCycle, StarGraph};
pub use laufer::{LauferOptions, LauferScalars, LauferTrace, TieBreak, XSeries};
pub use rational::Q;
pub use seifert::{SeifertData, SeifertInvariants};
pub use semigroup::{Kind, SemigroupFrobenius, SemigroupView};
