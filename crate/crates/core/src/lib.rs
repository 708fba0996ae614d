//! Exact root-system combinatorics for finite and untwisted affine Weyl groups,
//! centred on the atomic length statistic
//! `L_λ(w) = ⟨λ − w(λ), ρ∨⟩`.
//!
//! Everything here is `no_std` (with `alloc`): root data, group elements,
//! inversion sets, orbit enumeration, Susanfe reflections, Shi vectors, core
//! partitions and the type-A permutation statistics. IO, the command-line
//! front end and thread-level parallelism live in the companion `atomic` crate.
//!
//! All arithmetic is exact. Vectors of the finite root system are stored in
//! simple-root coordinates, so heights and the `ρ∨` pairing are coordinate sums.
#![no_std]
#![forbid(unsafe_code)]
// matrix code reads better with explicit indices
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod affine;
pub mod atomiclen;
pub mod cores;
mod error;
pub mod linalg;
pub mod orbit;
pub mod perms;
pub mod rootdata;
pub mod susanfe;
pub mod weyl;

pub use error::{Error, Result};

/// Exact rational number used throughout.
pub type Rational = num_rational::Ratio<i64>;

pub use rootdata::{Family, RootSystem, RootVec, TypeLabel, WeightVec};
pub use weyl::{WeylElement, Word};
