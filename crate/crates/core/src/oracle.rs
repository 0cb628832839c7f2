//! Brute-force reference routines. Nothing here shares arithmetic with the
//! fast transforms or the permutation formula they check.

use rand::Rng;

use crate::error::{Error, Result};
use crate::integral::{lovasz_extension, Point};
use crate::random;
use crate::setfunction::{MobiusRepresentation, SetFunction, SignedCapacity};
use crate::tolerance::Tolerance;

pub const MOBIUS_NAIVE_MAX_N: usize = 12;
pub const ALL_PERMUTATIONS_MAX_N: usize = 6;
pub const AFFINE_CHECK_MAX_N: usize = 8;

fn bound(n: usize, max: usize) -> Result<()> {
    if n > max {
        Err(Error::GroundSetTooLarge { n, max })
    } else {
        Ok(())
    }
}

/// Direct `O(3^n)` inclusion–exclusion.
#[allow(clippy::needless_range_loop)]
pub fn mobius_naive(f: &SetFunction) -> Result<MobiusRepresentation> {
    let n = f.n();
    bound(n, MOBIUS_NAIVE_MAX_N)?;
    let size = 1usize << n;
    let values = f.values();
    let mut coefficients = vec![0.0; size];
    for s in 0..size {
        let mut total = 0.0;
        for t in 0..size {
            if t & s != t {
                continue;
            }
            let gap = (s.count_ones() - t.count_ones()) as usize;
            if gap.is_multiple_of(2) {
                total += values[t];
            } else {
                total -= values[t];
            }
        }
        coefficients[s] = total;
    }
    MobiusRepresentation::new(n, coefficients)
}

/// Every permutation of `0..n` in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                extend(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

/// Distinct values of the permutation-sum over every permutation that sorts
/// `x` ascending. Values within the default tolerance of one another are
/// merged, since tied orders sum the same terms in a different order.
pub fn choquet_all_permutations(v: &SignedCapacity, x: &Point) -> Result<Vec<f64>> {
    let n = v.n();
    bound(n, ALL_PERMUTATIONS_MAX_N)?;
    if x.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: x.len(),
        });
    }
    let tol = Tolerance::default();
    let values = v.values();
    let mut distinct: Vec<f64> = Vec::new();
    for perm in permutations(n) {
        if perm.windows(2).any(|w| x[w[0]] > x[w[1]]) {
            continue;
        }
        // Upper sets {π(k), ..., π(n)} as raw masks.
        let mut upper = vec![0usize; n + 1];
        for k in (0..n).rev() {
            upper[k] = upper[k + 1] | 1 << perm[k];
        }
        let total: f64 = (0..n)
            .map(|k| (values[upper[k]] - values[upper[k + 1]]) * x[perm[k]])
            .sum();
        if !distinct.iter().any(|d| tol.close(*d, total)) {
            distinct.push(total);
        }
    }
    Ok(distinct)
}

/// Samples segments inside the cone of points sorted by `order` (0-based
/// coordinates, ascending) and checks the Lovász extension is affine along
/// each. The first sample is the degenerate segment `x = x'`.
pub fn lovasz_affine_check(f: &SetFunction, order: &[usize], trials: usize, seed: u64) -> Result<bool> {
    let n = f.n();
    bound(n, AFFINE_CHECK_MAX_N)?;
    if order.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: order.len(),
        });
    }
    let mut seen = vec![false; n];
    for &i in order {
        if i >= n || std::mem::replace(&mut seen[i], true) {
            return Err(Error::parse("permutation", format!("{order:?} is not a permutation of 0..{n}")));
        }
    }

    let in_cone = |rng: &mut rand_chacha::ChaCha8Rng| {
        let mut sorted: Vec<f64> = (0..n).map(|_| rng.gen_range(-5.0..=5.0)).collect();
        sorted.sort_by(f64::total_cmp);
        let mut x = vec![0.0; n];
        for (k, &i) in order.iter().enumerate() {
            x[i] = sorted[k];
        }
        Point::from(x)
    };

    let tol = Tolerance::default();
    for k in 0..=trials {
        let mut rng = random::trial_rng(seed, k as u64);
        let x = in_cone(&mut rng);
        let (x_prime, lambda) = if k == 0 {
            (x.clone(), 0.5)
        } else {
            (in_cone(&mut rng), rng.gen_range(0.0..=1.0))
        };
        let mix = x.combine(lambda, &x_prime, 1.0 - lambda);
        let lhs = lovasz_extension(f, &mix)?.value;
        let a = lambda * lovasz_extension(f, &x)?.value;
        let b = (1.0 - lambda) * lovasz_extension(f, &x_prime)?.value;
        let scale = a.abs().max(b.abs()).max(f.get(crate::Subset::EMPTY).abs());
        if (lhs - (a + b)).abs() > tol.band(scale.max(lhs.abs())) {
            return Ok(false);
        }
    }
    Ok(true)
}
