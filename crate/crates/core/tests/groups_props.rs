use obstruct_core::groups::{
    combine_periods, enumerate_admissible, enumerate_by_order, has_noncyclic_abelian_subgroup, is_admissible,
    FiniteGroup, GroupElement, SpaceFormGroup, TableGroup,
};
use proptest::prelude::*;

/// All-pairs search over order-p elements, no pruning.
fn naive_zpzp<G: FiniteGroup>(g: &G) -> bool {
    let elems = g.all_elements();
    let e = g.identity();
    let n = g.group_order();
    for p in (2..=n).filter(|&p| obstruct_core::arith::is_prime(p) && n % (p * p) == 0) {
        let order_p: Vec<_> = elems.iter().copied().filter(|&x| x != e && g.power(x, p) == e).collect();
        for &x in &order_p {
            let span: Vec<_> = (1..p).map(|k| g.power(x, k)).collect();
            for &y in &order_p {
                if !span.contains(&y) && g.mul(x, y) == g.mul(y, x) {
                    return true;
                }
            }
        }
    }
    false
}

fn small_groups() -> Vec<SpaceFormGroup> {
    enumerate_by_order(400, None).unwrap()
}

#[test]
fn pruned_search_matches_naive_on_metacyclic_groups() {
    for g in small_groups() {
        assert_eq!(has_noncyclic_abelian_subgroup(&g, u64::MAX).unwrap(), naive_zpzp(&g), "{g}");
        assert!(!naive_zpzp(&g), "{g}");
    }
}

/// Holomorph-style table of `Z_n ⋊ Z_m` with action `x ↦ k x`.
fn semidirect(n: usize, m: usize, k: usize) -> TableGroup {
    let size = n * m;
    let kp: Vec<usize> = (0..m).scan(1usize, |acc, _| {
        let cur = *acc;
        *acc = *acc * k % n;
        Some(cur)
    }).collect();
    let table = (0..size)
        .map(|x| {
            let (xi, xj) = (x % n, x / n);
            (0..size)
                .map(|y| {
                    let (yi, yj) = (y % n, y / n);
                    (xi + kp[xj] * yi) % n + ((xj + yj) % m) * n
                })
                .collect()
        })
        .collect();
    TableGroup::from_table(table).unwrap()
}

#[test]
fn pruned_search_matches_naive_on_tables() {
    let mut cases = vec![];
    for (a, b) in [(2, 2), (3, 3), (2, 4), (3, 9), (5, 5), (2, 6), (4, 4)] {
        cases.push(TableGroup::direct_product(&TableGroup::cyclic(a), &TableGroup::cyclic(b)));
    }
    // S_3 = Z_3 ⋊ Z_2, D_4 = Z_4 ⋊ Z_2, Z_9 ⋊ Z_3, Z_7 ⋊ Z_3, Z_3 × S_3
    for (n, m, k) in [(3, 2, 2), (4, 2, 3), (9, 3, 4), (7, 3, 2), (5, 4, 2)] {
        cases.push(semidirect(n, m, k));
    }
    cases.push(TableGroup::direct_product(&TableGroup::cyclic(3), &semidirect(3, 2, 2)));
    cases.push(TableGroup::direct_product(&TableGroup::cyclic(2), &semidirect(5, 4, 2)));
    for g in &cases {
        assert_eq!(has_noncyclic_abelian_subgroup(g, u64::MAX).unwrap(), naive_zpzp(g), "order {}", g.group_order());
    }
    let expected = [true, true, true, true, true, true, true, false, true, true, false, false, true, true];
    for (g, want) in cases.iter().zip(expected) {
        assert_eq!(naive_zpzp(g), want, "order {}", g.group_order());
    }
}

#[test]
fn enumeration_is_lexicographic_and_admissible() {
    let gs = enumerate_admissible(40, 30, None).unwrap();
    let keys: Vec<_> = gs.iter().map(|g| (g.a(), g.b(), g.c())).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    for &(a, b, c) in &keys {
        assert!(is_admissible(a, b, c));
    }
    // every admissible triple in range is listed
    let brute = (1..=40u64)
        .flat_map(|a| (1..=30u64).flat_map(move |b| (1..=a).map(move |c| (a, b, c))))
        .filter(|&(a, b, c)| is_admissible(a, b, c))
        .count();
    assert_eq!(brute, keys.len());
    for g in enumerate_admissible(40, 30, Some(3)).unwrap() {
        assert_eq!(g.d(), 3);
    }
}

fn admissible_triple() -> impl Strategy<Value = SpaceFormGroup> {
    let all = enumerate_by_order(2_000, None).unwrap();
    (0..all.len()).prop_map(move |k| all[k].clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn group_axioms(g in admissible_triple(), xs in proptest::collection::vec((0u64..10_000, 0u64..10_000), 3)) {
        let [x, y, z] = [0, 1, 2].map(|k| g.element(xs[k].0, xs[k].1));
        prop_assert_eq!(g.multiply(g.multiply(x, y), z), g.multiply(x, g.multiply(y, z)));
        prop_assert_eq!(g.multiply(x, g.inverse(x)), GroupElement::IDENTITY);
        prop_assert_eq!(g.multiply(g.inverse(x), x), GroupElement::IDENTITY);
        let ord = g.element_order(x);
        prop_assert_eq!(g.order() % ord, 0);
        prop_assert_eq!(g.pow(x, ord), GroupElement::IDENTITY);
    }

    #[test]
    fn class_invariants(g in admissible_triple()) {
        prop_assert_eq!(g.b() % g.d(), 0);
        prop_assert_eq!(g.is_cyclic(), g.d() == 1);
        prop_assert_eq!(g.cohomology_period().period, 2 * g.d());
        let h = g.cyclic_subgroup_index();
        prop_assert_eq!(h.order * h.index, g.order());
        let json = serde_json::to_string(&g).unwrap();
        let back: SpaceFormGroup = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn period_combination(x in 1u64..200, y in 1u64..200) {
        let c = combine_periods(2 * x, 2 * y).unwrap();
        prop_assert_eq!(c.period, 2 * obstruct_core::arith::gcd(x, y));
        prop_assert_eq!(c.forces_cyclic, obstruct_core::arith::gcd(x, y) == 1);
    }
}
