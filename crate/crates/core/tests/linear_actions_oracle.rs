use nalgebra::DMatrix;
use obstruct_core::groups::{AdmissibleTriple, SpaceFormGroup};
use obstruct_core::linear_actions::{
    build_sphere_action, construct_scc_params, BetaConvention, MonomialRotationMatrix, RationalAngle,
    SphereActionBundle, TorusElement, TorusWeight,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const TOL: f64 = 1e-9;

fn dense(m: &MonomialRotationMatrix) -> DMatrix<f64> {
    let rows = m.to_dense();
    let n = rows.len();
    DMatrix::from_fn(n, n, |i, j| rows[i][j])
}

fn has_unit_eigenvalue_numeric(m: &MonomialRotationMatrix) -> bool {
    let d = dense(m);
    let n = d.nrows();
    (d - DMatrix::identity(n, n)).singular_values().min() < TOL
}

fn matrix_strategy() -> impl Strategy<Value = MonomialRotationMatrix> {
    (1usize..=5).prop_flat_map(|m| {
        (
            Just(Vec::from_iter(0..m)).prop_shuffle(),
            proptest::collection::vec((0i64..12, 1u64..=12), m),
        )
            .prop_map(|(perm, angles)| {
                let angles = angles.into_iter().map(|(k, d)| RationalAngle::of(k, d)).collect();
                MonomialRotationMatrix::new(perm, angles).unwrap()
            })
    })
}

fn pair_strategy() -> impl Strategy<Value = (MonomialRotationMatrix, MonomialRotationMatrix)> {
    (1usize..=5).prop_flat_map(|m| {
        let one = (
            Just(Vec::from_iter(0..m)).prop_shuffle(),
            proptest::collection::vec((0i64..12, 1u64..=12), m),
        )
            .prop_map(|(perm, angles)| {
                let angles = angles.into_iter().map(|(k, d)| RationalAngle::of(k, d)).collect();
                MonomialRotationMatrix::new(perm, angles).unwrap()
            });
        (one.clone(), one)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn exact_product_matches_dense_product((a, b) in pair_strategy()) {
        let exact = dense(&a.multiply(&b).unwrap());
        let numeric = dense(&a) * dense(&b);
        prop_assert!((exact - numeric).abs().max() < TOL);
    }

    #[test]
    fn cycle_sum_criterion_matches_singular_values(m in matrix_strategy()) {
        prop_assert_eq!(m.eigen_angle_zero(), has_unit_eigenvalue_numeric(&m));
    }

    #[test]
    fn group_laws(m in matrix_strategy()) {
        let id = MonomialRotationMatrix::identity(m.block_count());
        prop_assert_eq!(m.multiply(&m.inverse()).unwrap(), id.clone());
        prop_assert!(m.pow(m.order()).is_identity());
        let d = dense(&m);
        prop_assert!((d.transpose() * &d - DMatrix::identity(d.nrows(), d.nrows())).abs().max() < TOL);
    }

    #[test]
    fn conjugation_preserves_spectrum(m in matrix_strategy(), seed in any::<u64>()) {
        let mut relabel: Vec<usize> = (0..m.block_count()).collect();
        relabel.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let c = m.conjugate_by(&relabel).unwrap();
        prop_assert_eq!(c.eigen_angle_zero(), m.eigen_angle_zero());
        prop_assert_eq!(c.order(), m.order());
    }
}

#[test]
fn relabelled_bundles_stay_free() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (p, n) in [(3u64, 11u64), (5, 19)] {
        let bundle = build_sphere_action(p, n).unwrap();
        for _ in 0..5 {
            let mut relabel: Vec<usize> = (0..((n + 1) / 2) as usize).collect();
            relabel.shuffle(&mut rng);
            let c = bundle.conjugated(&relabel).unwrap();
            assert!(c.is_free_representation(u64::MAX).unwrap());
            assert!(c.diagonal_circle_is_free());
        }
    }
}

#[test]
fn both_beta_conventions_are_free_and_conjugate() {
    for p in [3u64, 5, 7] {
        let triple = construct_scc_params(p).unwrap();
        let bl = SphereActionBundle::from_triple(triple, p, 1, BetaConvention::CornerBottomLeft).unwrap();
        let tr = SphereActionBundle::from_triple(triple, p, 1, BetaConvention::CornerTopRight).unwrap();
        assert!(bl.is_free_representation(u64::MAX).unwrap());
        assert!(tr.is_free_representation(u64::MAX).unwrap());
        let reverse: Vec<usize> = (0..p as usize).rev().collect();
        let moved = bl.conjugated(&reverse).unwrap();
        assert_eq!(moved.alpha_image(), tr.alpha_image(), "p = {p}");
        assert_eq!(moved.beta_image(), tr.beta_image(), "p = {p}");
    }
}

#[test]
fn torus_commutes_with_group() {
    let bundle = build_sphere_action(3, 17).unwrap();
    let t = TorusElement::new(vec![RationalAngle::of(1, 5), RationalAngle::of(2, 7), RationalAngle::of(3, 11)]);
    assert!(bundle.commutes_with_torus(&t).unwrap());
    // unequal weights inside one copy break commutation with β
    let mut weights = bundle.torus_weights().to_vec();
    weights[0] = TorusWeight { coord: 0, weight: 2 };
    let skewed = bundle.clone().with_torus_weights(weights).unwrap();
    assert!(!skewed.commutes_with_torus(&t).unwrap());
    assert!(!skewed.diagonal_circle_is_free());
}

#[test]
fn detects_non_free_representation() {
    // Z_3 = Γ(1, 3, 1) with β fixing the second plane
    let group = SpaceFormGroup::new(1, 3, 1).unwrap();
    let alpha = MonomialRotationMatrix::identity(2);
    let beta = MonomialRotationMatrix::diagonal(vec![RationalAngle::of(1, 3), RationalAngle::ZERO]);
    let torus = vec![TorusWeight { coord: 0, weight: 1 }, TorusWeight { coord: 0, weight: 1 }];
    let bundle = SphereActionBundle::from_parts(group, 3, 3, alpha, beta, torus, 1).unwrap();
    assert!(!bundle.is_free_representation(u64::MAX).unwrap());
    assert!(has_unit_eigenvalue_numeric(bundle.beta_image()));
    // the relations are enforced
    let bad_beta = MonomialRotationMatrix::diagonal(vec![RationalAngle::of(1, 4), RationalAngle::ZERO]);
    let torus = vec![TorusWeight { coord: 0, weight: 1 }; 2];
    let g = SpaceFormGroup::new(1, 3, 1).unwrap();
    assert!(SphereActionBundle::from_parts(g, 3, 3, MonomialRotationMatrix::identity(2), bad_beta, torus, 1).is_err());
    assert!(AdmissibleTriple::new(7, 9, 2).is_ok());
}
