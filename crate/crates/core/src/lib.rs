//! Conjugacy class sizes of finite simple groups, computed from permutation
//! generators, and symbolic reasoning about same-size conjugacy class sets.
//!
//! The guide in `book/` walks through the pieces; its code samples run as
//! doctests of this crate.

pub mod catalog;
pub mod constructors;
pub mod error;
pub mod gf;
pub mod invariants;
pub mod perm;
pub mod uset;
pub mod verify;

pub use error::{Error, GeneratorFileError, Result};
pub use perm::{PermGroup, Permutation};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/permutations.md")]
    mod permutations {}
    #[doc = include_str!("../../../book/src/building-groups.md")]
    mod building_groups {}
    #[doc = include_str!("../../../book/src/generator-files.md")]
    mod generator_files {}
    #[doc = include_str!("../../../book/src/invariants.md")]
    mod invariants {}
    #[doc = include_str!("../../../book/src/patterns.md")]
    mod patterns {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/command-line.md")]
    mod command_line {}
}
