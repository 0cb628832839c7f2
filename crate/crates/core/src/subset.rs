//! Bitmask subsets of the ground set `[n] = {1, ..., n}`.
//!
//! Element `i` (1-based) is stored in bit `i - 1`, so `{1, 3}` is `0b101`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported ground set.
pub const MAX_GROUND_SET: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Subset(u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub const fn from_mask(mask: u32) -> Self {
        Subset(mask)
    }

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_GROUND_SET);
        Subset(((1u64 << n) - 1) as u32)
    }

    /// Builds a subset from 1-based element labels.
    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Result<Self> {
        let mut mask = 0u32;
        for e in elements {
            if e == 0 || e > MAX_GROUND_SET {
                return Err(Error::parse(
                    "subset",
                    format!("element {e} is outside 1..={MAX_GROUND_SET}"),
                ));
            }
            let bit = 1u32 << (e - 1);
            if mask & bit != 0 {
                return Err(Error::parse("subset", format!("element {e} repeated")));
            }
            mask |= bit;
        }
        Ok(Subset(mask))
    }

    pub const fn mask(self) -> u32 {
        self.0
    }

    pub const fn index(self) -> usize {
        self.0 as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Membership of the 0-based coordinate `i` (element `i + 1`).
    pub const fn contains_index(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub const fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn with_index(self, i: usize) -> Self {
        Subset(self.0 | 1 << i)
    }

    pub const fn without_index(self, i: usize) -> Self {
        Subset(self.0 & !(1 << i))
    }

    pub fn fits(self, n: usize) -> bool {
        (self.0 as u64) >> n == 0
    }

    /// 0-based coordinate indices in ascending order.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i)
            }
        })
    }

    /// 1-based element labels in ascending order.
    pub fn elements(self) -> impl Iterator<Item = usize> {
        self.indices().map(|i| i + 1)
    }

    /// Every subset of `[n]` in ascending mask order.
    pub fn all(n: usize) -> impl DoubleEndedIterator<Item = Subset> + ExactSizeIterator {
        (0..1u32 << n).map(Subset)
    }
}

/// Comma-joined ascending 1-based labels; the empty set renders as `""`.
impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for e in self.elements() {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Subset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Subset::EMPTY);
        }
        let elements = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::parse("subset", format!("bad element {tok:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Subset::from_elements(elements)
    }
}

impl Serialize for Subset {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
