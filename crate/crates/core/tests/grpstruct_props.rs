mod common;

use common::{is_nilpotent, small_group};
use nslen::corpus::{alternating, cyclic, direct_product, psl2, symmetric, wreath_product};
use nslen::grpstruct::{
    dihedral_class_check, frattini, l_class_candidates, minimal_normal_subgroups, nonabelian_socle,
    nonsolvable_length, rs_series, solvable_radical,
};
use nslen::permgroup::CosetAction;
use nslen::{Caps, PermGroup, Permutation};
use proptest::prelude::*;

fn caps() -> Caps {
    Caps::default()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn radical_is_normal_solvable_and_stable(g in small_group(720)) {
        let r = solvable_radical(&g, &caps()).unwrap();
        prop_assert!(r.is_solvable());
        prop_assert!(r.is_normal_in(&g));
        let q = CosetAction::new(&g, &r, 1000).unwrap();
        prop_assert!(solvable_radical(q.image(), &caps()).unwrap().is_trivial());
    }

    #[test]
    fn frattini_is_normal_and_nilpotent(g in small_group(120)) {
        let phi = frattini(&g, &caps()).unwrap();
        prop_assert!(phi.is_normal_in(&g));
        prop_assert!(is_nilpotent(&phi));
    }

    #[test]
    fn minimal_normal_subgroups_are_minimal(g in small_group(120)) {
        let mins = minimal_normal_subgroups(&g, &caps()).unwrap();
        for m in &mins {
            prop_assert!(!m.is_trivial());
            prop_assert!(m.is_normal_in(&g));
            for x in m.generators() {
                prop_assert!(g.normal_closure(std::slice::from_ref(x)).unwrap().same_subgroup(m));
            }
        }
    }
}

fn corpus() -> Vec<PermGroup> {
    let a5 = alternating(5).unwrap();
    vec![
        symmetric(4).unwrap(),
        a5.clone(),
        symmetric(5).unwrap(),
        symmetric(6).unwrap(),
        psl2(7).unwrap(),
        psl2(8).unwrap(),
        direct_product(&a5, &a5).unwrap(),
        direct_product(&cyclic(6).unwrap(), &a5).unwrap(),
        wreath_product(&a5, &cyclic(2).unwrap()).unwrap(),
        wreath_product(&a5, &a5).unwrap(),
        direct_product(&symmetric(5).unwrap(), &cyclic(3).unwrap()).unwrap(),
    ]
}

#[test]
fn socle_factors_are_independent() {
    for g in corpus() {
        let s = nonabelian_socle(&g, &caps()).unwrap();
        assert!(s.is_normal_in(&g));
        let mins: Vec<PermGroup> = minimal_normal_subgroups(&g, &caps())
            .unwrap_or_default()
            .into_iter()
            .filter(|m| !m.is_abelian())
            .collect();
        for (i, a) in mins.iter().enumerate() {
            assert!(a.is_subgroup_of(&s));
            for b in &mins[..i] {
                for x in a.generators() {
                    for y in b.generators() {
                        assert!(x.commutator(y).is_identity(), "{:?}", g.name());
                    }
                }
            }
        }
    }
}

#[test]
fn lambda_drops_by_one_above_the_first_socle_layer() {
    for g in corpus() {
        let series = rs_series(&g, &caps()).unwrap();
        if series.lambda == 0 {
            continue;
        }
        let s1 = &series.s(1).unwrap().group;
        let q = CosetAction::new(&g, s1, caps().index_cap).unwrap();
        let top = nonsolvable_length(q.image(), &caps()).unwrap();
        assert_eq!(top, series.lambda - 1, "{:?}", g.name());
    }
}

#[test]
fn lambda_is_monotone_on_subgroups() {
    let a5 = alternating(5).unwrap();
    let s5 = symmetric(5).unwrap();
    let point_stabilizer = s5
        .subgroup(vec![
            Permutation::parse_cycles(5, "(0 1)").unwrap(),
            Permutation::parse_cycles(5, "(0 1 2 3)").unwrap(),
        ])
        .unwrap();
    let pairs = [
        (alternating(5).unwrap(), symmetric(5).unwrap()),
        (point_stabilizer, s5.clone()),
        (direct_product(&a5, &a5).unwrap(), wreath_product(&a5, &cyclic(2).unwrap()).unwrap()),
    ];
    for (h, g) in pairs {
        assert!(h.is_subgroup_of(&g));
        let lh = nonsolvable_length(&h, &caps()).unwrap();
        let lg = nonsolvable_length(&g, &caps()).unwrap();
        assert!(lh <= lg);
    }
}

#[test]
fn l_class_orders_match_formulas() {
    for n in (60..200_000u128).step_by(12) {
        for c in l_class_candidates(n) {
            assert_eq!(c.order(), n, "{c}");
        }
    }
}

#[test]
fn dihedral_single_class_at_desk_scale() {
    for q in [5, 7, 8, 9] {
        let s = psl2(q).unwrap();
        let auts = nslen::corpus::psl2_outer_automorphisms(q).unwrap();
        let r = dihedral_class_check(&s, &auts, &caps()).unwrap();
        assert!(!r.single_class_primes().is_empty(), "PSL2({q})");
    }
}
