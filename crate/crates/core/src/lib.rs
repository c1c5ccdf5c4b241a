//! State complexity workbench for the star of symmetric difference,
//! `L1 ⊛ L2 = (L1 ⊕ L2)*`.
//!
//! The crate is `no_std` and only needs `alloc`. It provides:
//!
//! * [`transforms`]: total transformations of `{0, …, n-1}`, the letters of monsters;
//! * [`automata`]: complete DFAs, minimization, equivalence and letter renamings;
//! * [`monsters`]: 1-monsters and k-monsters over transformation alphabets;
//! * [`modifiers`]: the Star, Xor and StX constructions behind a common [`modifiers::Modifier`] trait;
//! * [`tableaux`]: boolean-matrix states of StX, right-triangle freeness, saturation and counting;
//! * [`witness`]: the 17-letter bounded alphabet and the witness measurements.
//!
//! IO, file formats and the command line live in the companion `stx` crate.
#![no_std]

extern crate alloc;

pub mod automata;
mod error;
mod limits;
pub mod modifiers;
pub mod monsters;
pub mod tableaux;
pub mod transforms;
pub mod witness;

pub use automata::{Dfa, NerodePartition};
pub use error::{Error, Result};
pub use limits::Limits;
pub use monsters::{MonsterSpec, PairLetter};
pub use tableaux::{FinalZone, Tableau};
pub use transforms::Transformation;
