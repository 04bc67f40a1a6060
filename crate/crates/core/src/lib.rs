//! Möbius function of the poset `(Z, <=_S)` induced by a numerical semigroup
//! `S`, where `x <=_S y` iff `y - x` lies in `S`.
//!
//! The crate offers several independent ways of computing `mu_S`:
//!
//! * alternating chain sums and the bottom-up recursive definition
//!   ([`oracle`]), valid for every numerical semigroup;
//! * a constant-time closed form for two generators, a three-branch
//!   recursion for arithmetic semigroups `<a, a+d, ..., a+kd>`, and a
//!   closed form through multiset multiplicities for `<2q, 2q+d, 2q+2d>`
//!   ([`closed`]);
//!
//! and a [`harness`] that cross-checks them against each other.
//!
//! ```
//! use smobius_core::{NumericalSemigroup, MobiusMemo, closed};
//!
//! let s = NumericalSemigroup::new(&[2, 3]).unwrap();
//! let mut memo = MobiusMemo::new(s);
//! assert_eq!(memo.mobius(5).unwrap(), 1);
//! assert_eq!(closed::mobius_deddens(2, 3, 5).unwrap(), 1);
//! ```

pub mod closed;
pub mod error;
pub mod harness;
pub mod num;
pub mod oracle;
pub mod semigroup;

pub use closed::{ArithmeticMobius, EvenCaseParams, Family, MultisetId};
pub use error::{MobiusError, Result};
pub use harness::{Evaluator, Method};
pub use num::Mu;
pub use oracle::{count_chains, mobius_by_chains, ChainCount, ChainTable, MobiusMemo};
pub use semigroup::{ArithmeticParams, NumericalSemigroup, Representation};
