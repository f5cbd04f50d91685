//! Permutation-group toolkit for nonsolvable length, group laws and trajectory
//! certificates.
//!
//! The crate is organised in layers:
//!
//! * [`permgroup`]: permutations, stabilizer chains, closures, coset actions, Sylow subgroups;
//! * [`grpstruct`]: solvable radical, non-abelian socle, the RS-series and the nonsolvable length;
//! * [`freeword`]: reduced words, partial subwords, word maps and canonical enumeration;
//! * [`laws`]: law detection and the shortest-law length;
//! * [`pncheck`]: trajectory certificates for words acting on points;
//! * [`corpus`]: constructors for the standard families and the JSON group file format.

pub mod arith;
pub mod caps;
pub mod corpus;
pub mod error;
pub mod freeword;
pub mod grpstruct;
pub mod laws;
pub mod permgroup;
pub mod pncheck;

pub use caps::Caps;
pub use error::{Error, Result};
pub use permgroup::{PermGroup, Permutation};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/permutations.md")]
    mod permutations {}
    #[doc = include_str!("../../../book/src/corpus.md")]
    mod corpus {}
    #[doc = include_str!("../../../book/src/structure.md")]
    mod structure {}
    #[doc = include_str!("../../../book/src/words.md")]
    mod words {}
    #[doc = include_str!("../../../book/src/laws.md")]
    mod laws {}
    #[doc = include_str!("../../../book/src/trajectories.md")]
    mod trajectories {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}
