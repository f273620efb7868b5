use obstruct_core::coding_bounds::{
    brute_force_code_oracle, cor_ak_sweep, dimension_33_row, exact_log_ge, exact_sqrt_ge, griesmer_bound,
    griesmer_inequality, griesmer_max_distance, log_threshold_inequality, minimum_distance, GriesmerQuery,
    SweepVariant,
};
use proptest::prelude::*;

/// Best minimum distance over every full-rank `k × n` generator matrix.
fn best_distance_all_matrices(n: usize, k: usize) -> u64 {
    let mut best = 0;
    for bits in 0u64..(1 << (n * k)) {
        let rows: Vec<u64> = (0..k).map(|r| (bits >> (r * n)) & ((1 << n) - 1)).collect();
        let mut min = u64::MAX;
        for msg in 1u64..(1 << k) {
            let word = (0..k).filter(|r| msg >> r & 1 == 1).fold(0, |acc, r| acc ^ rows[r]);
            min = min.min(word.count_ones() as u64);
        }
        // a zero codeword from a nonzero message means rank < k
        if min > 0 {
            best = best.max(min);
        }
    }
    best
}

#[test]
fn column_oracle_matches_matrix_enumeration() {
    for k in 1..=3usize {
        for n in k..=7usize {
            let r = brute_force_code_oracle(n, k).unwrap();
            assert_eq!(r.best_distance, best_distance_all_matrices(n, k), "[{n},{k}]");
            assert_eq!(minimum_distance(&r.witness, k), r.best_distance);
        }
    }
}

#[test]
fn known_optimal_codes() {
    assert_eq!(brute_force_code_oracle(7, 3).unwrap().best_distance, 4);
    assert_eq!(brute_force_code_oracle(7, 4).unwrap().best_distance, 3);
    assert_eq!(brute_force_code_oracle(14, 4).unwrap().best_distance, 7);
    assert_eq!(griesmer_bound(4, 8), 15);
    assert_eq!(griesmer_max_distance(15, 4), 8);
    assert!(brute_force_code_oracle(15, 4).is_err());
}

#[test]
fn threshold_dimensions() {
    let row33 = dimension_33_row();
    assert_eq!((row33.s_min, row33.j, row33.lhs, row33.rhs, row33.pass), (4, 2, 15, 17, true));
    let sqrt = cor_ak_sweep(9, 101, SweepVariant::Sqrt, false).unwrap();
    let ns: Vec<u64> = sqrt.iter().map(|r| r.n).collect();
    let mut sorted = ns.clone();
    sorted.sort();
    assert_eq!(ns, sorted);
    let r47 = sqrt.iter().find(|r| r.n == 47).unwrap();
    assert_eq!((r47.s_min, r47.j, r47.lhs, r47.rhs, r47.pass), (5, 3, 21, 21, false));
    for r in sqrt.iter().filter(|r| (37..=45).contains(&r.n) || r.n == 49) {
        assert!(r.pass, "n = {}", r.n);
    }
    let log = cor_ak_sweep(35, 2_000, SweepVariant::Log, true).unwrap();
    assert!(log.iter().all(|r| r.log_threshold));
}

proptest! {
    #[test]
    fn log_comparison_matches_floats(num in 2u64..10, den in 1u64..9, s in -30i64..60, x in 1u64..1_000_000) {
        prop_assume!(num > den);
        let lhs = s as f64 * (num as f64 / den as f64).ln();
        let rhs = (x as f64).ln();
        prop_assume!((lhs - rhs).abs() > 1e-9);
        prop_assert_eq!(exact_log_ge(num, den, s, x).unwrap(), lhs >= rhs);
    }

    #[test]
    fn sqrt_comparison_matches_integer_root(s in -5i64..2_000, x in 0u64..4_000_000) {
        let root = (x as f64).sqrt().floor() as i64;
        let root = (root - 2..=root + 2).filter(|r| *r >= 0 && (r * r) as u64 <= x).max().unwrap();
        let ceil_root = if (root * root) as u64 == x { root } else { root + 1 };
        prop_assert_eq!(exact_sqrt_ge(s, x), s + 2 >= ceil_root);
    }

    #[test]
    fn griesmer_rhs_monotone(n in 9u64..500, s in 1u64..30, j in 1u64..6, c in 1u64..10) {
        prop_assume!(s >= j && c + 1 <= n + 1);
        let base = griesmer_inequality(GriesmerQuery::new(n, s, c, j).unwrap());
        let more_s = griesmer_inequality(GriesmerQuery::new(n, s + 1, c, j).unwrap());
        let more_c = griesmer_inequality(GriesmerQuery::new(n, s, c + 1, j).unwrap());
        prop_assert!(more_s.rhs >= base.rhs);
        prop_assert!(more_c.rhs <= base.rhs);
        prop_assert!(!base.holds || more_s.holds);
    }

    #[test]
    fn log_threshold_monotone_in_s(n in 5u64..100_000, s in 0u64..40) {
        prop_assert!(!log_threshold_inequality(n, s).unwrap() || log_threshold_inequality(n, s + 1).unwrap());
    }

    #[test]
    fn griesmer_bound_is_attained_or_exceeded(k in 1u64..5, d in 1u64..20) {
        let n = griesmer_bound(k, d);
        prop_assert!(n >= d + k - 1);
        prop_assert!(griesmer_max_distance(n, k) >= d);
    }
}
