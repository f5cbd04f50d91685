//! Checking whether a group is `m`-rarefied.
//!
//! A group `H` of non-solvable length `m` is `m`-rarefied when
//!
//! 1. `R_1(H) = Φ(H)` and `R_{i+1}(H)/S_i(H) = Φ(H/S_i(H))` for `1 ≤ i < m`;
//! 2. `S_i(H)/R_i(H)` is the unique minimal normal subgroup of `H/R_i(H)` for
//!    `1 ≤ i ≤ m`;
//! 3. the simple components of every `S_i(H)/R_i(H)` lie in the family recognized
//!    by [`l_class_candidates`].
//!
//! The first condition says nothing about the top layer `R_{m+1}/S_m`; the report
//! records that comparison separately as `top_layer_frattini`.

use serde::Serialize;

use super::{frattini, l_class_candidates, rs_series, LCandidate, RSSeries};
use crate::caps::Caps;
use crate::error::Result;
use crate::permgroup::PermGroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Membership {
    Yes,
    /// Holds only if `a = 0` is admitted in `PSL2(p^(2^a))`.
    Conditional,
    No,
}

#[derive(Clone, Debug, Serialize)]
pub struct RarefiedReport {
    pub m: usize,
    pub lambda: usize,
    pub lambda_matches: bool,
    /// Entry `i` compares `R_{i+1}/S_i` with `Φ(G/S_i)` (entry 0 is `R_1` against `Φ(G)`),
    /// for `0 ≤ i < max(m, 1)` as far as the series reaches.
    pub frattini_layers: Vec<bool>,
    pub condition_i: bool,
    /// `R_{m+1}/S_m = Φ(G/S_m)`; not part of the conditions.
    pub top_layer_frattini: Option<bool>,
    /// Entry `i - 1` is true when `S_i/R_i` is the only minimal normal subgroup of `G/R_i`.
    pub unique_minimal_normal: Vec<bool>,
    pub condition_ii: bool,
    /// Family matches of the component order of each `S_i/R_i`.
    pub components: Vec<Vec<LCandidate>>,
    pub condition_iii: Membership,
}

impl RarefiedReport {
    /// All three conditions hold and the length is `m`. Conditional membership
    /// counts as holding.
    pub fn holds(&self) -> bool {
        self.lambda_matches
            && self.condition_i
            && self.condition_ii
            && self.condition_iii != Membership::No
    }
}

/// Order of `Φ(G/N)`, computed in the action on the cosets of `N`.
fn frattini_of_quotient(g: &PermGroup, n: &PermGroup, caps: &Caps) -> Result<u128> {
    if n.is_trivial() {
        return Ok(frattini(g, caps)?.order());
    }
    let action = g.coset_action(n, caps.index_cap)?;
    Ok(frattini(action.image(), caps)?.order())
}

fn frattini_matches(series: &RSSeries, g: &PermGroup, i: usize, caps: &Caps) -> Result<bool> {
    // Φ(G/N) ≤ R(G/N) always, so comparing orders suffices.
    let (below, above) = if i == 0 {
        (PermGroup::trivial(g.degree()), series.r(1).unwrap())
    } else {
        (series.s(i).unwrap().group.clone(), series.r(i + 1).unwrap())
    };
    let phi = frattini_of_quotient(g, &below, caps)?;
    Ok(phi == above.order / below.order())
}

pub fn is_rarefied(g: &PermGroup, m: usize, caps: &Caps) -> Result<RarefiedReport> {
    let series = rs_series(g, caps)?;
    let lambda = series.lambda;
    let layers = m.min(lambda);

    let mut frattini_layers = Vec::new();
    for i in 0..m.max(1).min(lambda + 1) {
        frattini_layers.push(frattini_matches(&series, g, i, caps)?);
    }
    let top_layer_frattini = if lambda == m && m > 0 {
        Some(frattini_matches(&series, g, m, caps)?)
    } else {
        None
    };

    let mut unique_minimal_normal = Vec::new();
    let mut components = Vec::new();
    let mut condition_iii = Membership::Yes;
    for i in 1..=layers {
        let s = series.s(i).unwrap();
        unique_minimal_normal.push(s.minimal_normal == Some(1));
        let mut found = Vec::new();
        for c in &s.components {
            let cands = c.map(|c| l_class_candidates(c.order)).unwrap_or_default();
            let here = if cands.is_empty() {
                Membership::No
            } else if cands.iter().all(|c| c.conditional) {
                Membership::Conditional
            } else {
                Membership::Yes
            };
            condition_iii = match (condition_iii, here) {
                (Membership::No, _) | (_, Membership::No) => Membership::No,
                (Membership::Conditional, _) | (_, Membership::Conditional) => {
                    Membership::Conditional
                }
                _ => Membership::Yes,
            };
            found.extend(cands);
        }
        components.push(found);
    }

    Ok(RarefiedReport {
        m,
        lambda,
        lambda_matches: lambda == m,
        condition_i: frattini_layers.iter().all(|&b| b),
        frattini_layers,
        top_layer_frattini,
        condition_ii: unique_minimal_normal.iter().all(|&b| b),
        unique_minimal_normal,
        components,
        condition_iii,
    })
}
