//! The RS-series `1 = R_0 ≤ R_1 < S_1 < R_2 < ... ≤ R_{λ+1} = G`.

use serde::Serialize;

use super::{socle_with_factors, solvable_radical, Components};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::permgroup::{CosetAction, PermGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LayerKind {
    R,
    S,
}

/// One term of the series, as a subgroup of the input group.
#[derive(Clone, Debug, Serialize)]
pub struct RsLayer {
    pub kind: LayerKind,
    /// 1-based position: `R_i` or `S_i`.
    pub index: usize,
    #[serde(skip)]
    pub group: PermGroup,
    pub order: u128,
    /// For S-terms: number of minimal normal subgroups of `G/R_i` making up `S_i/R_i`.
    pub minimal_normal: Option<usize>,
    /// For S-terms: simple components of each such minimal normal subgroup.
    pub components: Vec<Option<Components>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RSSeries {
    pub layers: Vec<RsLayer>,
    /// Non-solvable length: the number of S-terms.
    pub lambda: usize,
}

impl RSSeries {
    pub fn r(&self, i: usize) -> Option<&RsLayer> {
        self.layers
            .iter()
            .find(|l| l.kind == LayerKind::R && l.index == i)
    }

    pub fn s(&self, i: usize) -> Option<&RsLayer> {
        self.layers
            .iter()
            .find(|l| l.kind == LayerKind::S && l.index == i)
    }
}

/// The current quotient `G/N`, or `G` itself while `N` is trivial.
struct Quotient {
    action: Option<CosetAction>,
    normal: PermGroup,
}

impl Quotient {
    fn new(g: &PermGroup, n: &PermGroup, caps: &Caps) -> Result<Quotient> {
        let action = if n.is_trivial() {
            None
        } else {
            Some(g.coset_action(n, caps.index_cap)?)
        };
        Ok(Quotient {
            action,
            normal: n.clone(),
        })
    }

    fn group<'a>(&'a self, g: &'a PermGroup) -> &'a PermGroup {
        self.action.as_ref().map_or(g, |a| a.image())
    }

    fn pull_back(&self, sub: &PermGroup) -> Result<PermGroup> {
        match &self.action {
            None => Ok(sub.clone()),
            Some(a) => a.preimage(sub),
        }
    }
}

fn layer(kind: LayerKind, index: usize, group: PermGroup) -> RsLayer {
    RsLayer {
        kind,
        index,
        order: group.order(),
        group,
        minimal_normal: None,
        components: Vec::new(),
    }
}

/// Computes as much of the series as the caps allow. The error, if any, is the one
/// that stopped the computation; the layers before it are returned alongside.
pub fn rs_series_partial(g: &PermGroup, caps: &Caps) -> (Vec<RsLayer>, Option<Error>) {
    let mut layers = Vec::new();
    let err = build(g, caps, &mut layers).err();
    (layers, err)
}

fn build(g: &PermGroup, caps: &Caps, layers: &mut Vec<RsLayer>) -> Result<()> {
    let mut quotient = Quotient::new(g, &PermGroup::trivial(g.degree()), caps)?;
    for i in 1.. {
        let r = quotient.pull_back(&solvable_radical(quotient.group(g), caps)?)?;
        let done = r.order() == g.order();
        layers.push(layer(LayerKind::R, i, r.clone()));
        if done {
            return Ok(());
        }
        if !r.same_subgroup(&quotient.normal) {
            quotient = Quotient::new(g, &r, caps)?;
        }
        let socle = socle_with_factors(quotient.group(g), caps)?;
        if socle.group.is_trivial() {
            return Err(Error::Certificate(format!(
                "quotient by R_{i} has trivial radical and trivial socle"
            )));
        }
        let s = quotient.pull_back(&socle.group)?;
        let mut l = layer(LayerKind::S, i, s.clone());
        l.minimal_normal = Some(socle.minimal_normal.len());
        l.components = socle.components;
        layers.push(l);
        quotient = Quotient::new(g, &s, caps)?;
    }
    unreachable!()
}

pub fn rs_series(g: &PermGroup, caps: &Caps) -> Result<RSSeries> {
    let (layers, err) = rs_series_partial(g, caps);
    if let Some(e) = err {
        return Err(e);
    }
    let lambda = layers.iter().filter(|l| l.kind == LayerKind::S).count();
    Ok(RSSeries { layers, lambda })
}

/// `λ(G)`: number of non-solvable layers.
pub fn nonsolvable_length(g: &PermGroup, caps: &Caps) -> Result<usize> {
    Ok(rs_series(g, caps)?.lambda)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{alternating, cyclic, direct_product, symmetric, wreath_product};

    #[test]
    fn small_lengths() {
        let caps = Caps::default();
        assert_eq!(nonsolvable_length(&symmetric(4).unwrap(), &caps).unwrap(), 0);
        let s5 = rs_series(&symmetric(5).unwrap(), &caps).unwrap();
        assert_eq!(s5.lambda, 1);
        let orders: Vec<u128> = s5.layers.iter().map(|l| l.order).collect();
        assert_eq!(orders, vec![1, 60, 120]);
        assert_eq!(s5.s(1).unwrap().minimal_normal, Some(1));
        assert_eq!(
            s5.s(1).unwrap().components,
            vec![Some(Components { count: 1, order: 60 })]
        );
    }

    #[test]
    fn wreath_of_a5_by_a5() {
        let caps = Caps::default();
        let a5 = alternating(5).unwrap();
        let w = wreath_product(&a5, &a5).unwrap();
        let series = rs_series(&w, &caps).unwrap();
        assert_eq!(series.lambda, 2);
        let orders: Vec<u128> = series.layers.iter().map(|l| l.order).collect();
        let base = 60u128.pow(5);
        assert_eq!(orders, vec![1, base, base, base * 60, base * 60]);
        assert_eq!(
            series.s(1).unwrap().components,
            vec![Some(Components { count: 5, order: 60 })]
        );
    }

    #[test]
    fn direct_products() {
        let caps = Caps::default();
        let a5 = alternating(5).unwrap();
        let g = direct_product(&cyclic(6).unwrap(), &a5).unwrap();
        let series = rs_series(&g, &caps).unwrap();
        assert_eq!(series.lambda, 1);
        assert_eq!(series.r(1).unwrap().order, 6);
        assert_eq!(series.s(1).unwrap().order, 360);
    }

    #[test]
    fn partial_series_on_cap() {
        let caps = Caps {
            element_cap: 100,
            ..Caps::default()
        };
        let (layers, err) = rs_series_partial(&symmetric(5).unwrap(), &caps);
        assert!(layers.is_empty());
        assert!(matches!(err, Some(Error::CapExceeded { .. })));
    }
}
