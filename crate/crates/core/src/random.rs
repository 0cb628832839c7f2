//! Seeded samplers for capacities, points and comonotonic pairs.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::integral::Point;
use crate::setfunction::{
    validate_capacity, validate_signed_capacity, Capacity, SetFunction, SignedCapacity,
};
use crate::subset::Subset;

/// Independent stream for trial `index` under `seed`; identical regardless
/// of which thread evaluates the trial.
pub fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Values i.i.d. uniform on `[-1, 1]` off the empty set.
pub fn signed_capacity<R: Rng>(n: usize, rng: &mut R) -> Result<SignedCapacity> {
    let f = SetFunction::from_fn(n, |s| {
        if s.is_empty() {
            0.0
        } else {
            rng.gen_range(-1.0..=1.0)
        }
    })?;
    validate_signed_capacity(f)
}

/// `v(S) = max_{i∈S} v(S \ {i}) + u_S` with `u_S` uniform on `[0, 1)`.
pub fn monotone_capacity<R: Rng>(n: usize, rng: &mut R) -> Result<Capacity> {
    let mut values = vec![0.0; 1 << n];
    for s in Subset::all(n).skip(1) {
        let floor = s
            .indices()
            .map(|i| values[s.without_index(i).index()])
            .fold(f64::NEG_INFINITY, f64::max);
        values[s.index()] = floor + rng.gen::<f64>();
    }
    validate_capacity(validate_signed_capacity(SetFunction::new(n, values)?)?)
}

/// A monotone capacity rescaled so that `v([n]) = 1` exactly.
pub fn normalized_capacity<R: Rng>(n: usize, rng: &mut R) -> Result<Capacity> {
    let full = Subset::full(n);
    loop {
        let mu = monotone_capacity(n, rng)?;
        let top = mu.get(full);
        if top <= 0.0 {
            continue;
        }
        let mut values: Vec<f64> = mu.values().iter().map(|v| v / top).collect();
        // Division can leave the top one ulp off; monotonicity survives
        // because every other value is at most `top / top`.
        values[full.index()] = 1.0;
        return validate_capacity(validate_signed_capacity(SetFunction::new(n, values)?)?);
    }
}

/// Coordinates uniform on `[lo, hi]`.
pub fn point<R: Rng>(n: usize, lo: f64, hi: f64, rng: &mut R) -> Point {
    Point::from((0..n).map(|_| rng.gen_range(lo..=hi)).collect::<Vec<_>>())
}

/// Like [`point`], but coordinates are drawn from a small grid of values so
/// ties are frequent.
pub fn tied_point<R: Rng>(n: usize, rng: &mut R) -> Point {
    let levels = rng.gen_range(1..=n.max(2) - 1);
    let grid: Vec<f64> = (0..levels).map(|_| rng.gen_range(-5.0..=5.0)).collect();
    Point::from((0..n).map(|_| grid[rng.gen_range(0..levels)]).collect::<Vec<_>>())
}

/// Log-uniform on `[lo, hi]`.
pub fn log_uniform<R: Rng>(lo: f64, hi: f64, rng: &mut R) -> f64 {
    rng.gen_range(lo.ln()..=hi.ln()).exp()
}

/// A uniformly chosen nonempty subset of `[n]`.
pub fn nonempty_subset<R: Rng>(n: usize, rng: &mut R) -> Subset {
    Subset::from_mask(rng.gen_range(1..1u32 << n))
}

/// A random nondecreasing piecewise-linear map of the real line.
///
/// Breakpoints are uniform on `[-5, 5]`; each of the segments gets an
/// independent slope in `[0, 2]`, with flat segments forced occasionally so
/// the image contains ties.
struct MonotoneMap {
    breaks: Vec<f64>,
    slopes: Vec<f64>,
    offset: f64,
}

impl MonotoneMap {
    fn sample<R: Rng>(rng: &mut R) -> Self {
        let k = rng.gen_range(1..=4);
        let mut breaks: Vec<f64> = (0..k).map(|_| rng.gen_range(-5.0..=5.0)).collect();
        breaks.sort_by(f64::total_cmp);
        let slopes = (0..=k)
            .map(|_| {
                if rng.gen_bool(0.2) {
                    0.0
                } else {
                    rng.gen_range(0.0..=2.0)
                }
            })
            .collect();
        MonotoneMap {
            breaks,
            slopes,
            offset: rng.gen_range(-5.0..=5.0),
        }
    }

    fn apply(&self, t: f64) -> f64 {
        // Integrate the slope profile from the first breakpoint to t.
        let first = self.breaks[0];
        let mut value = self.offset;
        if t <= first {
            return value + self.slopes[0] * (t - first);
        }
        let mut left = first;
        for (seg, &right) in self.breaks.iter().enumerate().skip(1) {
            let slope = self.slopes[seg];
            if t <= right {
                return value + slope * (t - left);
            }
            value += slope * (right - left);
            left = right;
        }
        value + self.slopes[self.breaks.len()] * (t - left)
    }
}

/// Two comonotonic points: independent nondecreasing maps applied to a
/// shared base vector uniform on `[-5, 5]^n`.
pub fn comonotonic_pair<R: Rng>(n: usize, rng: &mut R) -> (Point, Point) {
    let base = point(n, -5.0, 5.0, rng);
    let (phi, psi) = (MonotoneMap::sample(rng), MonotoneMap::sample(rng));
    let x = base.coordinates().iter().map(|&t| phi.apply(t)).collect::<Vec<_>>();
    let y = base.coordinates().iter().map(|&t| psi.apply(t)).collect::<Vec<_>>();
    (Point::from(x), Point::from(y))
}
