//! Signed Choquet integrals and Lovász extensions.
//!
//! Two independent evaluation routes are provided: the sorting-permutation
//! formula over the chain of upper sets, and the Möbius form
//! `Σ_S m(S) · min_{i∈S} x_i`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::par::{self, Execution};
use crate::setfunction::{Capacity, MobiusRepresentation, SetFunction, SignedCapacity};
use crate::subset::Subset;

/// A finite real vector to aggregate.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct Point(Vec<f64>);

impl Point {
    pub fn new(coordinates: Vec<f64>) -> Result<Self> {
        if let Some(i) = coordinates.iter().position(|c| !c.is_finite()) {
            return Err(Error::parse("point", format!("coordinate {} is not finite", i + 1)));
        }
        Ok(Point(coordinates))
    }

    pub fn constant(n: usize, c: f64) -> Self {
        Point(vec![c; n])
    }

    /// Indicator vector `1_S` of length `n`.
    pub fn indicator(n: usize, s: Subset) -> Self {
        Point((0..n).map(|i| if s.contains_index(i) { 1.0 } else { 0.0 }).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coordinates(&self) -> &[f64] {
        &self.0
    }

    pub fn scaled(&self, r: f64) -> Point {
        Point(self.0.iter().map(|c| r * c).collect())
    }

    pub fn shifted(&self, s: f64) -> Point {
        Point(self.0.iter().map(|c| c + s).collect())
    }

    /// `a * self + b * other`; lengths must agree.
    pub fn combine(&self, a: f64, other: &Point, b: f64) -> Point {
        debug_assert_eq!(self.len(), other.len());
        Point(self.0.iter().zip(&other.0).map(|(x, y)| a * x + b * y).collect())
    }

    pub fn min_over(&self, s: Subset) -> f64 {
        s.indices().map(|i| self.0[i]).fold(f64::INFINITY, f64::min)
    }
}

impl From<Vec<f64>> for Point {
    fn from(v: Vec<f64>) -> Self {
        Point(v)
    }
}

impl std::ops::Index<usize> for Point {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl std::ops::IndexMut<usize> for Point {
    fn index_mut(&mut self, i: usize) -> &mut f64 {
        &mut self.0[i]
    }
}

/// Parses comma-separated decimals such as `4,0,2`.
impl FromStr for Point {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let coordinates = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<f64>()
                    .map_err(|_| Error::parse("point", format!("bad coordinate {:?}", tok.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Point::new(coordinates)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// A permutation sorting a point ascending, with its chain of upper sets.
///
/// `order[k]` is the 0-based coordinate in position `k + 1`, and
/// `upper_chain[k]` is the set of coordinates in positions `k + 1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SortPermutation {
    order: Vec<usize>,
    upper_chain: Vec<Subset>,
}

impl SortPermutation {
    pub fn from_order(order: Vec<usize>) -> Self {
        let mut upper = Subset::EMPTY;
        let mut upper_chain: Vec<Subset> = order
            .iter()
            .rev()
            .map(|&i| {
                upper = upper.with_index(i);
                upper
            })
            .collect();
        upper_chain.reverse();
        SortPermutation { order, upper_chain }
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// The permutation as 1-based element labels.
    pub fn elements(&self) -> Vec<usize> {
        self.order.iter().map(|i| i + 1).collect()
    }

    pub fn upper_chain(&self) -> &[Subset] {
        &self.upper_chain
    }

    /// Whether `x` is nondecreasing along this order, i.e. lies in its cone.
    pub fn sorts(&self, x: &Point) -> bool {
        self.order.windows(2).all(|w| x[w[0]] <= x[w[1]])
    }
}

impl fmt::Display for SortPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, e) in self.elements().into_iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EvaluationResult {
    pub value: f64,
    pub permutation: SortPermutation,
}

/// Stable ascending sort by `(value, index)`.
pub fn sort_permutation(x: &Point) -> SortPermutation {
    let mut order: Vec<usize> = (0..x.len()).collect();
    order.sort_by(|&a, &b| x[a].total_cmp(&x[b]).then(a.cmp(&b)));
    SortPermutation::from_order(order)
}

fn check_dimension(expected: usize, x: &Point) -> Result<()> {
    if x.len() != expected {
        Err(Error::DimensionMismatch {
            expected,
            found: x.len(),
        })
    } else {
        Ok(())
    }
}

/// `Σ_k (f(A_k) - f(A_{k+1})) x_{π(k)}` with `f(A_{n+1})` replaced by `tail`.
fn chain_sum(f: &SetFunction, x: &Point, perm: &SortPermutation, tail: f64) -> f64 {
    let chain = perm.upper_chain();
    let mut total = 0.0;
    for (k, &i) in perm.order().iter().enumerate() {
        let here = f.get(chain[k]);
        let next = chain.get(k + 1).map_or(tail, |s| f.get(*s));
        total += (here - next) * x[i];
    }
    total
}

/// Signed Choquet integral of `x` with respect to `v`.
pub fn choquet(v: &SignedCapacity, x: &Point) -> Result<EvaluationResult> {
    check_dimension(v.n(), x)?;
    let permutation = sort_permutation(x);
    let value = chain_sum(v, x, &permutation, 0.0);
    Ok(EvaluationResult { value, permutation })
}

/// The classical Choquet integral of a nonnegative point.
pub fn choquet_capacity(mu: &Capacity, x: &Point) -> Result<EvaluationResult> {
    if let Some(index) = x.coordinates().iter().position(|c| *c < 0.0) {
        return Err(Error::NegativeCoordinate {
            index: index + 1,
            value: x[index],
        });
    }
    choquet(mu, x)
}

/// `Σ_S m(S) min_{i∈S} x_i`; the empty-set coefficient is added as a
/// constant offset, so this also evaluates general Lovász extensions.
pub fn choquet_mobius(m: &MobiusRepresentation, x: &Point) -> Result<EvaluationResult> {
    check_dimension(m.n(), x)?;
    let permutation = sort_permutation(x);
    let mut value = m.get(Subset::EMPTY);
    for (s, c) in m.nonzero().filter(|(s, _)| !s.is_empty()) {
        value += c * x.min_over(s);
    }
    Ok(EvaluationResult { value, permutation })
}

/// Lovász extension of the pseudo-Boolean function `f`:
/// `f(∅) + Σ_k (f_k - f_{k+1}) x_{π(k)}` with `f_{n+1} = f(∅)`.
pub fn lovasz_extension(f: &SetFunction, x: &Point) -> Result<EvaluationResult> {
    check_dimension(f.n(), x)?;
    let permutation = sort_permutation(x);
    let offset = f.get(Subset::EMPTY);
    let value = offset + chain_sum(f, x, &permutation, offset);
    Ok(EvaluationResult { value, permutation })
}

/// Choquet values for a batch of points.
pub fn choquet_batch(v: &SignedCapacity, points: &[Point], exec: Execution) -> Result<Vec<f64>> {
    par::map_slice(exec, points, |x| choquet(v, x).map(|r| r.value))
        .into_iter()
        .collect()
}

/// `(x_i - x_j)(y_i - y_j) >= 0` for all pairs.
pub fn comonotonic(x: &Point, y: &Point) -> Result<bool> {
    Ok(common_sort_permutation(x, y)?.is_some())
}

/// A permutation sorting both points, if one exists.
///
/// Sorting by `(x, y, index)` puts `y` in nondecreasing order inside every
/// block of tied `x`; the points are comonotonic iff `y` is then
/// nondecreasing overall.
pub fn common_sort_permutation(x: &Point, y: &Point) -> Result<Option<SortPermutation>> {
    check_dimension(x.len(), y)?;
    let mut order: Vec<usize> = (0..x.len()).collect();
    order.sort_by(|&a, &b| {
        x[a].total_cmp(&x[b])
            .then(y[a].total_cmp(&y[b]))
            .then(a.cmp(&b))
    });
    let perm = SortPermutation::from_order(order);
    Ok(perm.sorts(y).then_some(perm))
}
