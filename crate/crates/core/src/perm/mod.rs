//! Permutations, permutation groups, stabilizer chains and element
//! enumeration.

mod bsgs;
pub mod cycles;
mod elements;
mod group;
mod permutation;

pub use bsgs::{Bsgs, BsgsLevel};
pub use cycles::{format_cycles, parse_cycles, CycleParseError};
pub use elements::ElementTable;
pub use group::{PermGroup, DEFAULT_ENUMERATION_CAP};
pub use permutation::{compose, inverse, Permutation, MAX_DEGREE};
pub(crate) use permutation::{compose_into, conjugate_into};
