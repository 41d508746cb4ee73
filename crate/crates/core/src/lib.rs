//! Exact saturation and syzygy computations over `V[X]` for a residually
//! discrete valuation domain `V`.
//!
//! * [`echelon`] saturates finitely generated submodules of free `V`-modules
//!   through strict residual echelon forms.
//! * [`vxsat`] computes a finite `V[X]`-generating set of the `V`-saturation of
//!   a finitely generated submodule of `V[X]^n`.
//! * [`syzygy`] derives generators of the syzygy module over `V[X]` from the
//!   syzygies over `K[X]`.
//! * [`oracle`] holds brute-force checkers working directly from the
//!   definition of saturation on degree-bounded slices.

pub mod cli;
pub mod echelon;
pub mod error;
pub mod field;
pub mod oracle;
pub mod poly;
pub mod polyvec;
pub mod syzygy;
pub mod valuation;
pub mod vxsat;

pub use error::{Error, Result};
pub use field::{Field, PrimeField, Rationals};
pub use polyvec::{PivotIndex, PolyVec};
pub use valuation::{DomainSpec, ValuationDomain, Zp};
