//! Permutations and permutation groups.
//!
//! Everything acts on the right: the image of point `x` under `g` then `h` is
//! `h.apply(g.apply(x))`, and products are written `g.mul(&h)`.

pub mod cert;
mod chain;
mod group;
mod perm;
mod quotient;
mod sylow;

pub use cert::{CertificateKind, StructureCertificate};
pub use group::{ChainElements, ConjugacyClass, PermGroup};
pub use perm::Permutation;
pub use quotient::CosetAction;
