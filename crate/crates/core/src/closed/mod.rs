//! Fast formulas for the Möbius function of specific semigroup families.

mod arithmetic;
mod deddens;
mod even;

pub use arithmetic::{ArithmeticMobius, Remainder};
pub use deddens::mobius_deddens;
pub use even::{
    mobius_even_closed, mobius_even_step, multiplicity, EvenCaseParams, Family, MultisetId,
};
