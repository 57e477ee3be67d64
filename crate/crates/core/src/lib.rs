//! Exact combinatorics of tau-tilting modules over Nakayama algebras.
//!
//! The crate has four parts:
//! * [`algebra`] — Nakayama algebras as Kupisch series, with uniserial
//!   modules, AR translate, Hom dimensions, and vertex-killing quotients.
//! * [`oracle`] — brute-force enumeration of tau-tilting and support
//!   tau-tilting modules by clique search over the tau-rigidity graph.
//! * [`count`] — arbitrary-precision evaluation of the counting
//!   recurrences, memoized, with redundant routes asserted against each
//!   other.
//! * [`spectral`] — the characteristic polynomial of the recurrence, its
//!   complex roots, and closed-form checks against the exact counts.

pub mod algebra;
pub mod count;
pub mod error;
pub mod oracle;
pub mod spectral;

pub use algebra::{AlgebraSpec, Indec, ModuleSet, QuotientComponent, QuotientResult, Shape};
pub use count::{CountEngine, Family};
pub use error::{Error, Result};
pub use oracle::{CompatGraph, SupportPair};
