use std::collections::BTreeSet;
use std::sync::Arc;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use fintop::homotopy::{core, find_beat_points, is_dbp_retract, is_ubp_retract};
use fintop::iso::{find_isomorphism, is_isomorphism};
use fintop::laws;
use fintop::poset::numeric_labels;
use fintop::random::random_poset;
use fintop::{ElemSet, FinitePoset};

fn poset(max_n: usize, connected: bool) -> impl Strategy<Value = FinitePoset> {
    (1..=max_n, 0.05f64..0.85, any::<u64>())
        .prop_map(move |(n, density, seed)| random_poset(n, density, seed, connected).unwrap())
}

fn subset_of(p: &FinitePoset, bits: u64) -> ElemSet {
    ElemSet::from_indices(p.len(), (0..p.len()).filter(|&i| bits & (1 << i) != 0))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn down_and_up_sets_are_dual(p in poset(12, false)) {
        let op = p.opposite();
        for x in 0..p.len() {
            for y in 0..p.len() {
                prop_assert_eq!(p.down_set(x).contains(y), p.up_set(y).contains(x));
            }
            prop_assert_eq!(p.down_set(x), op.up_set(x));
        }
        prop_assert_eq!(op.opposite(), p);
    }

    #[test]
    fn components_partition_the_input(p in poset(12, false), bits in any::<u64>()) {
        let s = subset_of(&p, bits);
        let comps = p.connected_components(&s);
        let mut union = p.empty_set();
        for c in &comps {
            prop_assert!(!c.intersects(&union));
            prop_assert!(p.is_connected_subset(c));
            union.union_with(c);
        }
        prop_assert_eq!(&union, &s);
        // no block can absorb a neighbour
        for (i, a) in comps.iter().enumerate() {
            for b in comps.iter().skip(i + 1) {
                prop_assert!(!p.is_connected_subset(&a.union(b)));
            }
        }
    }

    #[test]
    fn rebuilding_from_covers_round_trips(p in poset(12, false)) {
        let rebuilt = FinitePoset::from_index_covers(p.labels().to_vec(), p.covers()).unwrap();
        prop_assert_eq!(rebuilt, p);
    }

    #[test]
    fn isomorphism_is_symmetric_and_checked(p in poset(10, false), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut perm: Vec<usize> = (0..p.len()).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let covers: Vec<(usize, usize)> = p.covers().iter().map(|&(a, b)| (perm[a], perm[b])).collect();
        let q = FinitePoset::from_index_covers(numeric_labels(p.len()), &covers).unwrap();
        let phi = find_isomorphism(&p, &q).unwrap();
        prop_assert!(is_isomorphism(&p, &q, &phi));
        prop_assert!(find_isomorphism(&q, &p).is_some());
        let other = random_poset(p.len(), 0.4, seed, false).unwrap();
        prop_assert_eq!(find_isomorphism(&p, &other).is_some(), find_isomorphism(&other, &p).is_some());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn removing_a_beat_point_keeps_the_core(p in poset(8, false)) {
        let c = core(&p);
        prop_assert!(find_beat_points(&c).is_empty());
        for bp in find_beat_points(&p) {
            let mut rest = p.full_set();
            rest.remove(bp.element);
            let smaller = core(&p.induced_subposet(&rest).unwrap());
            prop_assert!(find_isomorphism(&c, &smaller).is_some());
        }
    }

    #[test]
    fn retract_duality_and_extremes(p in poset(7, false), bits in any::<u64>()) {
        let a = subset_of(&p, bits);
        prop_assume!(!a.is_empty());
        let x = Arc::new(p.clone());
        let op = Arc::new(p.opposite());
        let dbp = is_dbp_retract(&x, &a).unwrap();
        let ubp = is_ubp_retract(&x, &a).unwrap();
        prop_assert_eq!(ubp.is_some(), is_dbp_retract(&op, &a).unwrap().is_some());
        if let Some(r) = &dbp {
            prop_assert!(p.minimal().is_subset(&a));
            let ir = r.idempotent();
            prop_assert!(ir.pointwise_leq(&fintop::MonotoneMap::identity(x.clone())));
            prop_assert_eq!(r.retraction.compose(&r.inclusion).unwrap(), fintop::MonotoneMap::identity(r.subspace.clone()));
        }
        if ubp.is_some() {
            prop_assert!(p.maximal().is_subset(&a));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn structural_laws_hold(p in poset(8, true), seed in any::<u64>()) {
        let x = Arc::new(p);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let failures = laws::check_all(&x, &mut rng);
        prop_assert!(failures.is_empty(), "{:?} on covers {:?}", failures, x.covers());
    }

    #[test]
    fn structural_laws_hold_without_connectivity(p in poset(6, false), seed in any::<u64>()) {
        let x = Arc::new(p);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let failures = laws::check_all(&x, &mut rng);
        prop_assert!(failures.is_empty(), "{:?} on covers {:?}", failures, x.covers());
    }
}

#[test]
fn grothendieck_cardinality() {
    for seed in 0..60 {
        let x = Arc::new(random_poset(1 + seed as usize % 8, 0.35, seed, true).unwrap());
        let u = fintop::CSpace::u_family(&x);
        let integral = fintop::grothendieck::build_integral(&x);
        let total: usize = u.regions().iter().map(|r| r.members.len()).sum();
        assert_eq!(integral.poset.len(), total);
        let tops: BTreeSet<String> = integral.poset.set_labels(&integral.poset.maximal()).into_iter().map(String::from).collect();
        let expected: BTreeSet<String> = x
            .maximal()
            .iter()
            .map(|a| format!("({},{})", u.label(u.find(fintop::Side::U, x.down_set(a)).unwrap()), x.label(a)))
            .collect();
        assert_eq!(tops, expected);
    }
}
