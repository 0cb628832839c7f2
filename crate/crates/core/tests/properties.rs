use choquet_core::integral::{common_sort_permutation, comonotonic};
use choquet_core::oracle;
use choquet_core::{
    choquet, choquet_mobius, lovasz_extension, mobius_transform, unanimity_game,
    validate_capacity, validate_signed_capacity, zeta_transform, Point, SetFunction,
    SignedCapacity, Subset, Tolerance,
};
use proptest::prelude::*;

fn set_function(max_n: usize) -> impl Strategy<Value = SetFunction> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(-10.0f64..10.0, 1 << n)
            .prop_map(move |values| SetFunction::new(n, values).unwrap())
    })
}

fn game(max_n: usize) -> impl Strategy<Value = SignedCapacity> {
    set_function(max_n).prop_map(|f| {
        let mut values = f.into_values();
        values[0] = 0.0;
        let n = values.len().trailing_zeros() as usize;
        validate_signed_capacity(SetFunction::new(n, values).unwrap()).unwrap()
    })
}

fn game_and_point(max_n: usize) -> impl Strategy<Value = (SignedCapacity, Point)> {
    game(max_n).prop_flat_map(|v| {
        let n = v.n();
        (Just(v), prop::collection::vec(-5.0f64..5.0, n).prop_map(Point::from))
    })
}

/// Points with heavy ties: coordinates drawn from three levels.
fn tied_game_and_point(max_n: usize) -> impl Strategy<Value = (SignedCapacity, Point)> {
    game(max_n).prop_flat_map(|v| {
        let n = v.n();
        let levels = prop::collection::vec(-5.0f64..5.0, 3);
        let picks = prop::collection::vec(0usize..3, n);
        (Just(v), (levels, picks).prop_map(|(l, p)| Point::from(p.iter().map(|&i| l[i]).collect::<Vec<_>>())))
    })
}

fn close(a: f64, b: f64) -> bool {
    Tolerance::default().close(a, b)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn zeta_inverts_mobius(f in set_function(12)) {
        let back = zeta_transform(&mobius_transform(&f));
        for (a, b) in back.values().iter().zip(f.values()) {
            prop_assert!(close(*a, *b));
        }
    }

    #[test]
    fn fast_transform_matches_naive_on_integers(
        (n, values) in (1usize..=8).prop_flat_map(|n| (Just(n), prop::collection::vec(-3i32..=3, 1 << n)))
    ) {
        let f = SetFunction::new(n, values.into_iter().map(f64::from).collect()).unwrap();
        prop_assert_eq!(mobius_transform(&f), oracle::mobius_naive(&f).unwrap());
    }

    #[test]
    fn fast_transform_matches_naive_on_reals(f in set_function(8)) {
        let scale = f.values().iter().fold(1.0f64, |m, v| m.max(v.abs()));
        let fast = mobius_transform(&f);
        let naive = oracle::mobius_naive(&f).unwrap();
        for (a, b) in fast.coefficients().iter().zip(naive.coefficients()) {
            prop_assert!((a - b).abs() <= 1e-12 * scale);
        }
    }

    #[test]
    fn mobius_is_linear(
        (f, g) in (1usize..=8).prop_flat_map(|n| (
            prop::collection::vec(-10.0f64..10.0, 1 << n),
            prop::collection::vec(-10.0f64..10.0, 1 << n),
        ).prop_map(move |(a, b)| (SetFunction::new(n, a).unwrap(), SetFunction::new(n, b).unwrap()))),
        a in -3.0f64..3.0,
        b in -3.0f64..3.0,
    ) {
        let lhs = mobius_transform(&f.combine(a, &g, b).unwrap());
        let (mf, mg) = (mobius_transform(&f), mobius_transform(&g));
        for s in Subset::all(f.n()) {
            let rhs = a * mf.get(s) + b * mg.get(s);
            let scale = 1e-9 * (1 << f.n()) as f64 * 30.0;
            prop_assert!((lhs.get(s) - rhs).abs() <= scale);
        }
    }

    #[test]
    fn formula_equivalence((v, x) in game_and_point(10)) {
        let direct = choquet(&v, &x).unwrap().value;
        let via_mobius = choquet_mobius(&mobius_transform(&v), &x).unwrap().value;
        prop_assert!((direct - via_mobius).abs() <= 1e-9 * direct.abs().max(1.0));
    }

    #[test]
    fn tie_independence((v, x) in tied_game_and_point(5)) {
        let values = oracle::choquet_all_permutations(&v, &x).unwrap();
        prop_assert_eq!(values.len(), 1);
        prop_assert!(close(values[0], choquet(&v, &x).unwrap().value));
    }

    #[test]
    fn positive_homogeneity((v, x) in game_and_point(8)) {
        let base = choquet(&v, &x).unwrap().value;
        for r in [0.5, 2.0, 7.3] {
            let scaled = choquet(&v, &x.scaled(r)).unwrap().value;
            prop_assert!((scaled - r * base).abs() <= 1e-9 * (r * base).abs().max(1.0));
        }
    }

    #[test]
    fn comonotonic_additivity_and_affinity((v, x) in game_and_point(8), seed in any::<u64>()) {
        let mut rng = choquet_core::random::trial_rng(seed, 0);
        let (a, b) = choquet_core::random::comonotonic_pair(v.n(), &mut rng);
        let (fa, fb) = (choquet(&v, &a).unwrap().value, choquet(&v, &b).unwrap().value);
        let sum = choquet(&v, &a.combine(1.0, &b, 1.0)).unwrap().value;
        prop_assert!((sum - fa - fb).abs() <= 1e-9 * fa.abs().max(fb.abs()).max(1.0));
        let lambda = (x[0] + 5.0) / 10.0;
        let mix = choquet(&v, &a.combine(lambda, &b, 1.0 - lambda)).unwrap().value;
        let rhs = lambda * fa + (1.0 - lambda) * fb;
        prop_assert!((mix - rhs).abs() <= 1e-9 * fa.abs().max(fb.abs()).max(1.0));
    }

    #[test]
    fn unanimity_game_evaluates_to_min((_, x) in game_and_point(8), mask in 1u32..256) {
        let n = x.len();
        let t = Subset::from_mask(mask & ((1 << n) - 1));
        prop_assume!(!t.is_empty());
        let v = unanimity_game(n, t).unwrap();
        prop_assert_eq!(choquet(&v, &x).unwrap().value, x.min_over(t));
    }

    #[test]
    fn lovasz_interpolates_vertices(f in set_function(10)) {
        for s in Subset::all(f.n()) {
            let value = lovasz_extension(&f, &Point::indicator(f.n(), s)).unwrap().value;
            prop_assert!((value - f.get(s)).abs() <= 1e-12);
        }
    }

    #[test]
    fn comonotonic_matches_pairwise_criterion(
        (x, y) in (1usize..=6).prop_flat_map(|n| (
            prop::collection::vec(-2i32..=2, n), prop::collection::vec(-2i32..=2, n)))
    ) {
        let x = Point::from(x.into_iter().map(f64::from).collect::<Vec<_>>());
        let y = Point::from(y.into_iter().map(f64::from).collect::<Vec<_>>());
        let pairwise = (0..x.len()).all(|i| (0..x.len()).all(|j| (x[i] - x[j]) * (y[i] - y[j]) >= 0.0));
        prop_assert_eq!(comonotonic(&x, &y).unwrap(), pairwise);
        if let Some(p) = common_sort_permutation(&x, &y).unwrap() {
            prop_assert!(p.sorts(&x) && p.sorts(&y));
        }
    }
}

#[test]
fn unanimity_games_are_basis_duals() {
    for n in 1..=6 {
        for t in Subset::all(n).skip(1) {
            let m = mobius_transform(&unanimity_game(n, t).unwrap());
            for s in Subset::all(n) {
                assert_eq!(m.get(s), if s == t { 1.0 } else { 0.0 });
            }
        }
    }
}

#[test]
fn accepted_capacities_are_fully_monotone() {
    let mut rng = choquet_core::random::trial_rng(42, 0);
    for n in 1..=6 {
        for k in 0..200 {
            // Alternate between generated capacities and near-monotone noise
            // so the validator sees both accepts and rejects.
            let candidate = if k % 2 == 0 {
                choquet_core::random::monotone_capacity(n, &mut rng).unwrap().into_signed()
            } else {
                let base = choquet_core::random::monotone_capacity(n, &mut rng).unwrap();
                let mut values = base.values().to_vec();
                let i = 1 + k % (values.len() - 1);
                values[i] -= 0.3;
                validate_signed_capacity(SetFunction::new(n, values).unwrap()).unwrap()
            };
            if let Ok(mu) = validate_capacity(candidate) {
                for t in Subset::all(n) {
                    for s in Subset::all(n).filter(|s| s.is_subset_of(t)) {
                        assert!(mu.get(s) <= mu.get(t));
                    }
                }
            }
        }
    }
}

#[test]
fn monotone_capacities_give_monotone_integrals() {
    let mut rng = choquet_core::random::trial_rng(9, 0);
    use rand::Rng;
    for n in 1..=8 {
        let mu = choquet_core::random::monotone_capacity(n, &mut rng).unwrap();
        for _ in 0..100 {
            let x = choquet_core::random::point(n, -5.0, 5.0, &mut rng);
            let mut bumped = x.clone();
            bumped[rng.gen_range(0..n)] += rng.gen_range(0.0..3.0);
            let (before, after) = (choquet(&mu, &x).unwrap().value, choquet(&mu, &bumped).unwrap().value);
            assert!(after >= before - 1e-12);
        }
    }
}
