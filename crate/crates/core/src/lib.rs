//! Conjugation quandles over finite groups.
//!
//! The crate builds conjugation quandles from permutation groups and Cayley
//! tables, decides connectedness and the Hayashi property (every left
//! translation has a regular cycle), and checks the centralizer criterion
//! that characterizes it, each fast path paired with a brute-force oracle.

pub mod checks;
pub mod error;
pub mod group;
pub mod perm;
pub mod quandle;

pub use error::{Error, Result};
pub use group::{ConjClass, Element, FiniteGroup};
pub use perm::{CycleStructure, Parity, Permutation};
pub use quandle::{ConjugationQuandle, LeftTranslation};
