mod common;

use common::*;
use contractibility::{
    c3_contractible, contracts_to, cyclicity, find_suitable_pair, p4_contractible, solve_2dcs,
    verify_witness, Budget, EngineError, Graph, PatternSpec,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn arb_connected(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (any::<u64>(), min_n..=max_n).prop_map(|(seed, n)| {
        random_connected_graph(&mut ChaCha8Rng::seed_from_u64(seed), n, n)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn path_contraction_iff_suitable_pair(g in arb_connected(3, 7), l in 3usize..=5) {
        let pair = find_suitable_pair(&g, l, Budget::UNLIMITED).unwrap();
        let any = contracts_to(&g, &PatternSpec::Path(l), Budget::UNLIMITED);
        let any = match any {
            Err(EngineError::PatternTooLarge { .. }) => None,
            other => other.unwrap(),
        };
        prop_assert_eq!(pair.is_some(), any.is_some());
        prop_assert_eq!(pair.is_some(), brute_force_path(&g, l));
        if let Some(w) = any {
            prop_assert!(verify_witness(&g, &w).is_ok());
            prop_assert_eq!(w.quotient(&g).unwrap(), Graph::path("p", l));
        }
    }

    #[test]
    fn p4_on_seven_vertices(g in arb_connected(7, 7)) {
        let a = p4_contractible(&g, Budget::UNLIMITED).unwrap();
        prop_assert_eq!(a.is_some(), brute_force_path(&g, 4));
        if let Some(w) = a {
            prop_assert!(verify_witness(&g, &w).is_ok());
        }
    }

    #[test]
    fn two_dcs_matches_enumeration(seed in any::<u64>(), n in 2usize..=12, split in 1usize..=11) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(&mut rng, n, 0.35);
        let k = split.min(n - 1);
        let z1 = set(&[&vname(0)]);
        let z2: std::collections::BTreeSet<String> = (k..n).step_by(3).map(vname).collect();
        let got = solve_2dcs(&g, &z1, &z2, Budget::UNLIMITED).unwrap();
        prop_assert_eq!(got.is_some(), brute_force_2dcs(&g, &z1, &z2));
        if let Some(s) = got {
            prop_assert!(s.is_valid_for(&g, &z1, &z2));
        }
    }
}

#[test]
fn triangle_test_matches_search() {
    for n in 1..=6 {
        for g in all_graphs(n) {
            let search = match contracts_to(&g, &PatternSpec::Cycle(3), Budget::UNLIMITED) {
                Err(EngineError::PatternTooLarge { .. }) => None,
                other => other.unwrap(),
            };
            assert_eq!(c3_contractible(&g), search.is_some(), "{}", g.to_json());
        }
    }
}

#[test]
fn cycle_and_path_facts() {
    for k in 3..=9 {
        let c = Graph::cycle("c", k);
        assert_eq!(cyclicity(&c, Budget::UNLIMITED).unwrap(), k);
        assert_eq!(cyclicity(&c.subdivide_all(), Budget::UNLIMITED).unwrap(), 2 * k);
        let p = Graph::path("p", k);
        assert_eq!(cyclicity(&p, Budget::UNLIMITED).unwrap(), 0);
        assert!(find_suitable_pair(&p, k, Budget::UNLIMITED).unwrap().is_some());
        assert!(find_suitable_pair(&p, k + 1, Budget::UNLIMITED).unwrap().is_none());
    }
    // K4 contracts to a triangle but to no longer cycle
    let k4 = graph_from_mask(4, 0b111111);
    assert_eq!(cyclicity(&k4, Budget::UNLIMITED).unwrap(), 3);
}

#[test]
fn explicit_pattern_quotients() {
    // K_{1,3} on a subdivided star
    let star = PatternSpec::Explicit(Graph::from_edges([("h", "a"), ("h", "b"), ("h", "c")]).unwrap());
    let g = Graph::from_edges([("0", "1"), ("1", "2"), ("0", "3"), ("3", "4"), ("0", "5")]).unwrap();
    let w = contracts_to(&g, &star, Budget::UNLIMITED).unwrap().expect("star contraction");
    assert!(verify_witness(&g, &w).is_ok());
    assert_eq!(w.quotient(&g).unwrap(), star.graph());
    assert!(contracts_to(&Graph::path("", 6), &star, Budget::UNLIMITED).unwrap().is_none());
}

#[test]
fn budget_is_never_a_no() {
    let g = Graph::cycle("c", 12).subdivide_all();
    let r = contracts_to(&g, &PatternSpec::Cycle(20), Budget::nodes(1));
    assert!(matches!(r, Err(EngineError::BudgetExceeded(1))));
}

#[test]
fn invalid_requests_are_errors() {
    let g = Graph::path("", 3);
    assert!(matches!(
        contracts_to(&g, &PatternSpec::Path(4), Budget::UNLIMITED),
        Err(EngineError::PatternTooLarge { .. })
    ));
    assert!(contracts_to(&g, &PatternSpec::Cycle(2), Budget::UNLIMITED).is_err());
    assert!(find_suitable_pair(&g, 2, Budget::UNLIMITED).is_err());
    let a = set(&["1"]);
    assert!(solve_2dcs(&g, &a, &a, Budget::UNLIMITED).is_err());
    assert!(solve_2dcs(&g, &a, &set(&[]), Budget::UNLIMITED).is_err());
}
