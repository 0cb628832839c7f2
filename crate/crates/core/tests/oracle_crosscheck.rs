//! Frozen values computed by hand or by the brute-force oracles, and the
//! exhaustive integer-grid comparisons of the fast transform.

use choquet_core::oracle::{choquet_all_permutations, lovasz_affine_check, mobius_naive};
use choquet_core::{
    basis_decomposition, choquet, choquet_mobius, lovasz_extension, mobius_transform,
    unanimity_game, zeta_transform, Point, SetFunction, SignedCapacity, Subset,
};

fn set(e: &[usize]) -> Subset {
    Subset::from_elements(e.iter().copied()).unwrap()
}

/// Every integer set function on `[n]` with values in `-3..=3`.
fn for_each_grid_function(n: usize, mut visit: impl FnMut(&SetFunction)) {
    let size = 1usize << n;
    let mut digits = vec![0usize; size];
    loop {
        let values = digits.iter().map(|&d| d as f64 - 3.0).collect();
        visit(&SetFunction::new(n, values).unwrap());
        let mut k = 0;
        while k < size {
            digits[k] += 1;
            if digits[k] < 7 {
                break;
            }
            digits[k] = 0;
            k += 1;
        }
        if k == size {
            return;
        }
    }
}

#[test]
fn fast_transform_is_exact_on_full_integer_grids() {
    for n in 1..=2 {
        let mut count = 0;
        for_each_grid_function(n, |f| {
            assert_eq!(mobius_transform(f), mobius_naive(f).unwrap());
            count += 1;
        });
        assert_eq!(count, 7usize.pow(1 << n));
    }
}

#[test]
fn fast_transform_is_exact_on_integer_grid_axes() {
    // The transform is linear and exact on small integers, so agreement on
    // every `c * δ_S` with `c ∈ -3..=3` pins it down on the whole grid.
    for n in 3..=4 {
        for s in Subset::all(n) {
            for c in -3..=3 {
                let f = SetFunction::from_fn(n, |t| if t == s { c as f64 } else { 0.0 }).unwrap();
                assert_eq!(mobius_transform(&f), mobius_naive(&f).unwrap());
            }
        }
    }
}

#[test]
fn derived_transform_values() {
    // m(S) = Σ_{T⊆S} (-1)^{|S|-|T|} f(T) evaluated term by term.
    let f = SetFunction::new(2, vec![0.0, 3.0, -1.0, 2.0]).unwrap();
    let naive = mobius_naive(&f).unwrap();
    assert_eq!(naive.coefficients(), &[0.0, 3.0, -1.0, 2.0 - 3.0 - (-1.0) + 0.0]);
    assert_eq!(mobius_transform(&f), naive);
    assert_eq!(zeta_transform(&naive), f);

    let additive = SetFunction::new(2, vec![0.0, 2.0, 5.0, 7.0]).unwrap();
    assert_eq!(mobius_naive(&additive).unwrap().coefficients(), &[0.0, 2.0, 5.0, 0.0]);

    let a = unanimity_game(3, set(&[1])).unwrap();
    let b = unanimity_game(3, set(&[2, 3])).unwrap();
    let v = SignedCapacity::new(a.combine(2.0, &b, -3.0).unwrap()).unwrap();
    let naive = mobius_naive(&v).unwrap();
    let expected: Vec<(Subset, f64)> = naive.nonzero().collect();
    assert_eq!(expected, vec![(set(&[1]), 2.0), (set(&[2, 3]), -3.0)]);
    assert_eq!(basis_decomposition(&v), expected);
}

#[test]
fn derived_integral_values() {
    let v = SignedCapacity::new(SetFunction::new(2, vec![0.0, 3.0, -1.0, 2.0]).unwrap()).unwrap();
    let x = Point::from(vec![5.0, 1.0]);
    // Single valid order π = (2, 1): (v({1,2}) - v({1})) * 1 + v({1}) * 5.
    assert_eq!(choquet_all_permutations(&v, &x).unwrap(), vec![(2.0 - 3.0) * 1.0 + 3.0 * 5.0]);
    assert_eq!(choquet(&v, &x).unwrap().value, 14.0);
    assert_eq!(choquet_mobius(&mobius_naive(&v).unwrap(), &x).unwrap().value, 14.0);

    // Vertex interpolation: f(0, 1) must be f({2}).
    let f = SetFunction::new(2, vec![1.0, 3.0, -1.0, 2.0]).unwrap();
    assert_eq!(lovasz_extension(&f, &Point::from(vec![0.0, 1.0])).unwrap().value, f.get(set(&[2])));

    let v12 = unanimity_game(3, set(&[1, 2])).unwrap();
    assert_eq!(
        choquet_all_permutations(&v12, &Point::from(vec![1.0, 1.0, 2.0])).unwrap(),
        vec![1.0]
    );
}

#[test]
fn lovasz_extension_is_affine_on_every_cone() {
    let mut rng = choquet_core::random::trial_rng(17, 0);
    fn orders(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for rest in orders(n - 1) {
            for pos in 0..=rest.len() {
                let mut o = rest.clone();
                o.insert(pos, n - 1);
                out.push(o);
            }
        }
        out
    }
    for n in 1..=4 {
        for _ in 0..3 {
            let values: Vec<f64> = (0..1 << n)
                .map(|_| rand::Rng::gen_range(&mut rng, -4.0..4.0))
                .collect();
            let f = SetFunction::new(n, values).unwrap();
            for (k, order) in orders(n).into_iter().enumerate() {
                assert!(lovasz_affine_check(&f, &order, 100, k as u64).unwrap());
            }
        }
    }
    // A sampled cone at n = 6.
    let f = SetFunction::from_fn(6, |s| (s.mask() as f64).cos()).unwrap();
    assert!(lovasz_affine_check(&f, &[5, 0, 3, 1, 4, 2], 100, 3).unwrap());
}
