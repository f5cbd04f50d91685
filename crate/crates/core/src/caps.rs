//! Resource caps shared by all searches.
//!
//! Exceeding a cap is always reported as [`Error::CapExceeded`](crate::Error::CapExceeded)
//! (or as an inconclusive outcome), never by silently returning partial data.

use serde::{Deserialize, Serialize};

/// Environment prefix read by [`Caps::from_env`].
pub const ENV_PREFIX: &str = "NSLEN_";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Largest group order for which elements may be listed.
    pub element_cap: u128,
    /// Largest index for a coset action.
    pub index_cap: u128,
    /// Largest number of word evaluations for an exhaustive law check.
    pub tuple_cap: u128,
    /// Largest group order for subgroup-lattice enumeration.
    pub frattini_cap: u128,
    /// Largest number of Sylow conjugates tried by the trajectory search.
    pub sylow_conj_cap: u128,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            element_cap: 1_000_000,
            index_cap: 100_000,
            tuple_cap: 1_000_000_000,
            frattini_cap: 2000,
            sylow_conj_cap: 10_000,
        }
    }
}

impl Caps {
    /// Defaults overridden by `NSLEN_ELEMENT_CAP`, `NSLEN_INDEX_CAP`,
    /// `NSLEN_TUPLE_CAP`, `NSLEN_FRATTINI_CAP` and `NSLEN_SYLOW_CONJ_CAP`.
    pub fn from_env() -> Self {
        let mut caps = Caps::default();
        let read = |name: &str, slot: &mut u128| {
            if let Ok(v) = std::env::var(format!("{ENV_PREFIX}{name}")) {
                if let Ok(v) = v.trim().parse() {
                    *slot = v;
                }
            }
        };
        read("ELEMENT_CAP", &mut caps.element_cap);
        read("INDEX_CAP", &mut caps.index_cap);
        read("TUPLE_CAP", &mut caps.tuple_cap);
        read("FRATTINI_CAP", &mut caps.frattini_cap);
        read("SYLOW_CONJ_CAP", &mut caps.sylow_conj_cap);
        caps
    }
}
