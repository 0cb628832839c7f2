//! Set functions on the subset lattice of `[n]`, their structural classes,
//! and the Möbius/zeta transforms.

use std::ops::Deref;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::par::{self, Execution};
use crate::subset::{Subset, MAX_GROUND_SET};

/// Real values on all `2^n` subsets, indexed by characteristic bitmask.
#[derive(Debug, Clone, PartialEq)]
pub struct SetFunction {
    n: usize,
    values: Vec<f64>,
}

impl SetFunction {
    pub fn new(n: usize, values: Vec<f64>) -> Result<Self> {
        check_ground_set(n)?;
        if values.len() != 1 << n {
            return Err(Error::WrongLength {
                expected: 1 << n,
                found: values.len(),
            });
        }
        if let Some(mask) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite { mask });
        }
        Ok(SetFunction { n, values })
    }

    pub fn zero(n: usize) -> Result<Self> {
        check_ground_set(n)?;
        Ok(SetFunction {
            n,
            values: vec![0.0; 1 << n],
        })
    }

    pub fn from_fn(n: usize, f: impl FnMut(Subset) -> f64) -> Result<Self> {
        check_ground_set(n)?;
        SetFunction::new(n, Subset::all(n).map(f).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn get(&self, s: Subset) -> f64 {
        self.values[s.index()]
    }

    /// `a * self + b * other`.
    pub fn combine(&self, a: f64, other: &SetFunction, b: f64) -> Result<SetFunction> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(x, y)| a * x + b * y)
            .collect();
        SetFunction::new(self.n, values)
    }
}

pub(crate) fn check_ground_set(n: usize) -> Result<()> {
    if n == 0 || n > MAX_GROUND_SET {
        Err(Error::InvalidGroundSet {
            n,
            max: MAX_GROUND_SET,
        })
    } else {
        Ok(())
    }
}

/// A set function vanishing on the empty set (a game).
#[derive(Debug, Clone, PartialEq)]
pub struct SignedCapacity(SetFunction);

impl SignedCapacity {
    pub fn new(f: SetFunction) -> Result<Self> {
        validate_signed_capacity(f)
    }

    pub fn as_set_function(&self) -> &SetFunction {
        &self.0
    }

    pub fn into_set_function(self) -> SetFunction {
        self.0
    }
}

impl Deref for SignedCapacity {
    type Target = SetFunction;

    fn deref(&self) -> &SetFunction {
        &self.0
    }
}

/// A monotone game.
#[derive(Debug, Clone, PartialEq)]
pub struct Capacity(SignedCapacity);

impl Capacity {
    pub fn new(v: SignedCapacity) -> Result<Self> {
        validate_capacity(v)
    }

    pub fn as_signed(&self) -> &SignedCapacity {
        &self.0
    }

    pub fn into_signed(self) -> SignedCapacity {
        self.0
    }

    pub fn is_normalized(&self) -> bool {
        self.get(Subset::full(self.n())) == 1.0
    }
}

impl Deref for Capacity {
    type Target = SignedCapacity;

    fn deref(&self) -> &SignedCapacity {
        &self.0
    }
}

/// Accepts `f` iff `f(∅)` is exactly zero.
pub fn validate_signed_capacity(f: SetFunction) -> Result<SignedCapacity> {
    let value = f.values[0];
    if value != 0.0 {
        return Err(Error::NotAGame { value });
    }
    Ok(SignedCapacity(f))
}

/// Accepts `v` iff `v(S) <= v(S ∪ {i})` for every covering pair.
///
/// Any chain `S ⊂ T` factors into `|T \ S|` covering steps, so the covering
/// pairs imply `v(S) <= v(T)` for all `S ⊆ T` by transitivity. Masks are
/// scanned in descending order, so the reported witness is the violating
/// covering pair highest in the lattice.
pub fn validate_capacity(v: SignedCapacity) -> Result<Capacity> {
    let n = v.n();
    for s in Subset::all(n).rev() {
        for i in (0..n).filter(|&i| !s.contains_index(i)) {
            let t = s.with_index(i);
            let (lower, upper) = (v.get(s), v.get(t));
            if lower > upper {
                return Err(Error::NotMonotone {
                    lower_set: s,
                    upper_set: t,
                    lower,
                    upper,
                });
            }
        }
    }
    Ok(Capacity(v))
}

/// Möbius coefficients `m(S) = Σ_{T⊆S} (-1)^{|S|-|T|} f(T)`.
#[derive(Debug, Clone, PartialEq)]
pub struct MobiusRepresentation {
    n: usize,
    coefficients: Vec<f64>,
}

impl MobiusRepresentation {
    pub fn new(n: usize, coefficients: Vec<f64>) -> Result<Self> {
        let f = SetFunction::new(n, coefficients)?;
        Ok(MobiusRepresentation {
            n,
            coefficients: f.values,
        })
    }

    /// The coefficient vector that is 1 at `t` and 0 elsewhere.
    pub fn delta(n: usize, t: Subset) -> Result<Self> {
        check_ground_set(n)?;
        if !t.fits(n) {
            return Err(Error::SubsetOutOfRange { subset: t, n });
        }
        let mut coefficients = vec![0.0; 1 << n];
        coefficients[t.index()] = 1.0;
        Ok(MobiusRepresentation { n, coefficients })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    pub fn get(&self, s: Subset) -> f64 {
        self.coefficients[s.index()]
    }

    /// `(subset, coefficient)` for every nonzero coefficient, ascending by mask.
    pub fn nonzero(&self) -> impl Iterator<Item = (Subset, f64)> + '_ {
        self.coefficients
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0.0)
            .map(|(mask, c)| (Subset::from_mask(mask as u32), *c))
    }

    pub fn into_set_function(self) -> SetFunction {
        SetFunction {
            n: self.n,
            values: self.coefficients,
        }
    }
}

/// Ground sets at or above this size use the parallel sweep when asked to.
const PARALLEL_TRANSFORM_MIN_N: usize = 12;

/// Sign of the subset-lattice sweep: `+1` for zeta, `-1` for Möbius.
fn lattice_sweep(values: &mut [f64], n: usize, sign: f64, exec: Execution) {
    let exec = if n >= PARALLEL_TRANSFORM_MIN_N {
        exec
    } else {
        Execution::Sequential
    };
    for bit in 0..n {
        let step = 1usize << bit;
        // Each block of 2*step masks: the upper half (bit set) absorbs the
        // lower half (bit clear). Updates within a bit are independent.
        let apply = |block: &mut [f64]| {
            let (lo, hi) = block.split_at_mut(step);
            for (h, l) in hi.iter_mut().zip(lo.iter()) {
                *h += sign * *l;
            }
        };
        let blocks = values.len() / (2 * step);
        if exec.is_parallel() && blocks < 16 {
            // Few wide blocks: parallelize inside each block instead.
            #[cfg(feature = "parallel")]
            for block in values.chunks_mut(2 * step) {
                let (lo, hi) = block.split_at_mut(step);
                hi.par_iter_mut()
                    .zip(lo.par_iter())
                    .for_each(|(h, l)| *h += sign * *l);
            }
        } else {
            par::for_each_chunk_mut(exec, values, 2 * step, apply);
        }
    }
}

pub fn mobius_transform(f: &SetFunction) -> MobiusRepresentation {
    mobius_transform_with(f, Execution::Sequential)
}

/// Fast Möbius transform in `O(n 2^n)`: for each bit, then masks ascending,
/// `a[S] -= a[S \ {bit}]` for every `S` containing the bit.
pub fn mobius_transform_with(f: &SetFunction, exec: Execution) -> MobiusRepresentation {
    let mut coefficients = f.values.clone();
    lattice_sweep(&mut coefficients, f.n, -1.0, exec);
    MobiusRepresentation {
        n: f.n,
        coefficients,
    }
}

pub fn zeta_transform(m: &MobiusRepresentation) -> SetFunction {
    zeta_transform_with(m, Execution::Sequential)
}

/// `f(S) = Σ_{T⊆S} m(T)`, the inverse of [`mobius_transform`].
pub fn zeta_transform_with(m: &MobiusRepresentation, exec: Execution) -> SetFunction {
    let mut values = m.coefficients.clone();
    lattice_sweep(&mut values, m.n, 1.0, exec);
    SetFunction { n: m.n, values }
}

/// The unanimity game `v_T(S) = [T ⊆ S]`.
pub fn unanimity_game(n: usize, t: Subset) -> Result<SignedCapacity> {
    check_ground_set(n)?;
    if t.is_empty() {
        // v_∅ would be 1 on ∅; its Möbius weight m_v(∅) is 0 for every game.
        return Err(Error::EmptySubset);
    }
    if !t.fits(n) {
        return Err(Error::SubsetOutOfRange { subset: t, n });
    }
    let f = SetFunction::from_fn(n, |s| if t.is_subset_of(s) { 1.0 } else { 0.0 })?;
    Ok(SignedCapacity(f))
}

/// Coordinates of `v` in the unanimity basis: `v = Σ m_v(T) v_T`.
pub fn basis_decomposition(v: &SignedCapacity) -> Vec<(Subset, f64)> {
    mobius_transform(v).nonzero().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sf(n: usize, values: &[f64]) -> SetFunction {
        SetFunction::new(n, values.to_vec()).unwrap()
    }

    fn set(elements: &[usize]) -> Subset {
        Subset::from_elements(elements.iter().copied()).unwrap()
    }

    #[test]
    fn construction_rejects_bad_shapes() {
        assert!(matches!(
            SetFunction::new(0, vec![0.0]),
            Err(Error::InvalidGroundSet { .. })
        ));
        assert!(matches!(
            SetFunction::new(21, vec![]),
            Err(Error::InvalidGroundSet { .. })
        ));
        assert!(matches!(
            SetFunction::new(2, vec![0.0; 3]),
            Err(Error::WrongLength { expected: 4, found: 3 })
        ));
        assert!(matches!(
            SetFunction::new(1, vec![0.0, f64::NAN]),
            Err(Error::NonFinite { mask: 1 })
        ));
    }

    #[test]
    fn signed_capacity_validation() {
        assert!(validate_signed_capacity(sf(1, &[0.0, 5.0])).is_ok());
        assert_eq!(
            validate_signed_capacity(sf(2, &[0.1, 1.0, 1.0, 1.0])),
            Err(Error::NotAGame { value: 0.1 })
        );
        assert!(validate_signed_capacity(sf(2, &[0.0, 3.0, -1.0, 2.0])).is_ok());
    }

    #[test]
    fn capacity_validation() {
        let ok = validate_signed_capacity(sf(2, &[0.0, 1.0, 1.0, 1.0])).unwrap();
        assert!(validate_capacity(ok).is_ok());

        let v = validate_signed_capacity(sf(2, &[0.0, 3.0, -1.0, 2.0])).unwrap();
        match validate_capacity(v) {
            Err(Error::NotMonotone {
                lower_set,
                upper_set,
                lower,
                upper,
            }) => {
                assert_eq!((lower_set, upper_set), (set(&[1]), set(&[1, 2])));
                assert_eq!((lower, upper), (3.0, 2.0));
            }
            other => panic!("expected NotMonotone, got {other:?}"),
        }

        let vstar = crate::axioms::vstar();
        let mu = validate_capacity(vstar).unwrap();
        assert!(mu.is_normalized());
    }

    #[test]
    fn mobius_examples() {
        let t = set(&[1, 3]);
        let m = mobius_transform(&unanimity_game(3, t).unwrap());
        for s in Subset::all(3) {
            assert_eq!(m.get(s), if s == t { 1.0 } else { 0.0 });
        }

        let additive = SetFunction::from_fn(2, |s| s.indices().map(|i| [2.0, 5.0][i]).sum()).unwrap();
        assert_eq!(mobius_transform(&additive).coefficients(), &[0.0, 2.0, 5.0, 0.0]);

        let game = sf(2, &[0.0, 3.0, -1.0, 2.0]);
        let m = mobius_transform(&game);
        assert_eq!(m.coefficients(), &[0.0, 3.0, -1.0, 0.0]);
        assert_eq!(zeta_transform(&m), game);
    }

    #[test]
    fn zeta_examples() {
        let m = MobiusRepresentation::delta(3, set(&[1, 3])).unwrap();
        assert_eq!(
            zeta_transform(&m),
            unanimity_game(3, set(&[1, 3])).unwrap().into_set_function()
        );
        let zero = MobiusRepresentation::new(2, vec![0.0; 4]).unwrap();
        assert_eq!(zeta_transform(&zero), SetFunction::zero(2).unwrap());
    }

    #[test]
    fn unanimity_games() {
        assert_eq!(unanimity_game(2, set(&[2])).unwrap().values(), &[0.0, 0.0, 1.0, 1.0]);
        let full = unanimity_game(3, Subset::full(3)).unwrap();
        assert_eq!(full.values().iter().filter(|v| **v == 1.0).count(), 1);
        assert_eq!(full.get(Subset::full(3)), 1.0);
        assert_eq!(unanimity_game(1, set(&[1])).unwrap().values(), &[0.0, 1.0]);
        assert_eq!(unanimity_game(2, Subset::EMPTY), Err(Error::EmptySubset));
        assert!(matches!(
            unanimity_game(2, set(&[3])),
            Err(Error::SubsetOutOfRange { .. })
        ));
    }

    #[test]
    fn basis_decompositions() {
        let t = set(&[1, 3]);
        assert_eq!(basis_decomposition(&unanimity_game(3, t).unwrap()), vec![(t, 1.0)]);

        let a = unanimity_game(3, set(&[1])).unwrap();
        let b = unanimity_game(3, set(&[2, 3])).unwrap();
        let v = SignedCapacity::new(a.combine(2.0, &b, -3.0).unwrap()).unwrap();
        assert_eq!(
            basis_decomposition(&v),
            vec![(set(&[1]), 2.0), (set(&[2, 3]), -3.0)]
        );

        let zero = SignedCapacity::new(SetFunction::zero(3).unwrap()).unwrap();
        assert!(basis_decomposition(&zero).is_empty());
    }

    #[test]
    fn parallel_sweep_is_bit_identical() {
        let n = 14;
        let f = SetFunction::from_fn(n, |s| ((s.mask() as f64) * 0.618).sin()).unwrap();
        let seq = mobius_transform_with(&f, Execution::Sequential);
        let par = mobius_transform_with(&f, Execution::Parallel);
        assert_eq!(seq, par);
        assert_eq!(
            zeta_transform_with(&seq, Execution::Sequential),
            zeta_transform_with(&par, Execution::Parallel)
        );
    }
}
