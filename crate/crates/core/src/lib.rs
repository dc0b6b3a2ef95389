//! Exact computations with Schur functions, tau series and (n,s) curves.
//!
//! Everything runs over [`Rational`](rational::Rational) with no rounding.
//! The crate is `no_std` and needs only `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod check;
pub mod curve;
pub mod det;
pub mod error;
pub mod partition;
pub mod poly;
pub mod rational;
pub mod schur;
pub mod semigroup;
pub mod seed;
pub mod series;
pub mod tau;

pub use curve::CurveModel;
pub use error::{CurveError, GapError, PartitionError, PolyError, SchurError, SeriesError, TauError};
pub use partition::Partition;
pub use poly::{Monomial, Polynomial, Var};
pub use rational::Rational;
pub use schur::{DerivationIndex, SchurSum, SignedPoint, Specialization};
pub use semigroup::GapSequence;
pub use series::TruncatedSeries;
pub use tau::TauSeries;
