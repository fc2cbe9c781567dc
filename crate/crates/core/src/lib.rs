//! Factorization invariants of finitely generated reduced commutative monoids.
//!
//! A monoid here is an additive submonoid of ℕ₀^d described by a finite list of
//! generators. After normalization the generators form the unique minimal atom
//! set (the irreducible elements), and every computation is exact integer
//! combinatorics over that atom list:
//!
//! - complete factorization sets `Z(x)` and length sets `L(x)` of an element,
//! - Betti graphs (factorizations joined when they share an atom) and the set
//!   of Betti elements (elements whose Betti graph is disconnected),
//! - classification as factorial, half-factorial, and length-factorial, with
//!   the master factorization of a length-factorial non-factorial monoid,
//! - quasi-n-factoriality violations and equal-length witness pairs.
//!
//! Four input families are supported: numerical monoids (d = 1), affine
//! monoids given by explicit generators, kernel monoids (nonnegative solutions
//! of a homogeneous linear system, atoms computed by a completion procedure),
//! and block monoids of finite abelian groups (atoms are the minimal zero-sum
//! sequences).
//!
//! All arithmetic is checked; overflow is reported as [`Error::Overflow`],
//! never wrapped. Searches that cannot be certified complete carry an explicit
//! bound in their result.
//!
//! ```
//! use facto_core::{MonoidPresentation, ReducedMonoid, Element, SearchOptions};
//!
//! let m = ReducedMonoid::build(MonoidPresentation::Numerical(vec![2, 3])).unwrap();
//! let zs = m.factorizations(&Element::scalar(6)).unwrap();
//! assert_eq!(zs.len(), 2); // 2+2+2 and 3+3
//!
//! let report = m.classify(&SearchOptions::default()).unwrap();
//! assert!(report.length_factorial && !report.half_factorial);
//! ```
//!
//! The crate is `no_std` (requires `alloc`); all types are immutable after
//! construction and safe to share across threads.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod betti;
pub mod block;
pub mod classify;
pub mod diophantine;
mod error;
pub mod factorize;
pub mod monoid;

pub use betti::{BettiGraph, BettiSet, Completeness, SearchOptions};
pub use block::{FiniteAbelianGroup, ZeroSumSequence};
pub use classify::{ClassificationReport, EqualLengthWitness, MasterFactorization, QuasiViolation};
pub use diophantine::{LinearSystem, SolveOptions};
pub use error::Error;
pub use factorize::{Factorization, FactorizationSet, LengthSet};
pub use monoid::{minimal_generators, Element, MonoidPresentation, ReducedMonoid};

/// Convenience alias used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;
