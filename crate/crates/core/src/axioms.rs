//! Sampled checks of the aggregation axioms, plus the three operator
//! families showing the basis-characterization conditions are independent.
//!
//! Every check evaluates a fixed list of fixture samples (degenerate cases
//! and known witnesses) followed by `trials` random samples. Trial `k` draws
//! from its own RNG stream derived from `(seed, k)`, so reports do not depend
//! on how trials are scheduled across threads.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::integral::{choquet, Point};
use crate::par::{self, Execution};
use crate::random;
use crate::setfunction::{mobius_transform, unanimity_game, SetFunction, SignedCapacity};
use crate::subset::Subset;
use crate::tolerance::{Agreement, Tolerance};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Choquet,
    WeightedMean,
    Multilinear,
    VstarPatch,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::Choquet,
        Family::WeightedMean,
        Family::Multilinear,
        Family::VstarPatch,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Choquet => "choquet",
            Family::WeightedMean => "weighted-mean",
            Family::Multilinear => "multilinear",
            Family::VstarPatch => "vstar-patch",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::parse("family", format!("unknown family {s:?}")))
    }
}

/// The capacity `v*` on `[3]`: 0 on singletons and on `{1,2}`, 1/2 on
/// `{1,3}` and `{2,3}`, 1 on the full set.
pub fn vstar() -> SignedCapacity {
    let values = vec![0.0, 0.0, 0.0, 0.0, 0.0, 0.5, 0.5, 1.0];
    SignedCapacity::new(SetFunction::new(3, values).expect("fixed shape")).expect("v*(∅) = 0")
}

/// A capacity-parameterized aggregation rule on a fixed ground set.
#[derive(Debug, Clone, PartialEq)]
pub struct Aggregator {
    family: Family,
    n: usize,
    vstar: Option<SignedCapacity>,
}

impl Aggregator {
    pub fn new(family: Family, n: usize) -> Result<Self> {
        crate::setfunction::check_ground_set(n)?;
        if family == Family::VstarPatch && n != 3 {
            return Err(Error::UnsupportedGroundSet {
                family: family.name(),
                required: 3,
                n,
            });
        }
        let vstar = (family == Family::VstarPatch).then(vstar);
        Ok(Aggregator { family, n, vstar })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `f_v(x)`.
    pub fn evaluate(&self, v: &SignedCapacity, x: &Point) -> Result<f64> {
        for found in [v.n(), x.len()] {
            if found != self.n {
                return Err(Error::DimensionMismatch {
                    expected: self.n,
                    found,
                });
            }
        }
        match self.family {
            Family::Choquet => Ok(choquet(v, x)?.value),
            Family::WeightedMean => Ok(mobius_transform(v)
                .nonzero()
                .filter(|(t, _)| !t.is_empty())
                .map(|(t, m)| {
                    let sum: f64 = t.indices().map(|i| x[i]).sum();
                    m * sum / t.len() as f64
                })
                .sum()),
            Family::Multilinear => Ok(mobius_transform(v)
                .nonzero()
                .map(|(t, m)| m * t.indices().map(|i| x[i]).product::<f64>())
                .sum()),
            Family::VstarPatch => {
                if Some(v) == self.vstar.as_ref() {
                    Ok(((x[0] + x[1]) / 2.0).min(x[2]))
                } else {
                    Ok(choquet(v, x)?.value)
                }
            }
        }
    }

    /// `f_{v_S}(x)` for the unanimity game on `s`.
    pub fn evaluate_basis(&self, s: Subset, x: &Point) -> Result<f64> {
        self.evaluate(&unanimity_game(self.n, s)?, x)
    }

    /// Capacities on which the rule departs from its generic form.
    pub fn distinguished_capacities(&self) -> Vec<SignedCapacity> {
        self.vstar.iter().cloned().collect()
    }
}

impl fmt::Display for Aggregator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (n = {})", self.family, self.n)
    }
}

pub fn evaluate_family(agg: &Aggregator, v: &SignedCapacity, x: &Point) -> Result<f64> {
    agg.evaluate(v, x)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    ComonotonicAdditivity,
    PositiveHomogeneity,
    ComonotonicAffinity,
    IntervalScale,
    ZeroOnBasis,
    LinearityInCapacity,
}

impl Axiom {
    pub const ALL: [Axiom; 6] = [
        Axiom::ComonotonicAdditivity,
        Axiom::PositiveHomogeneity,
        Axiom::ComonotonicAffinity,
        Axiom::IntervalScale,
        Axiom::ZeroOnBasis,
        Axiom::LinearityInCapacity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::ComonotonicAdditivity => "comonotonic-additivity",
            Axiom::PositiveHomogeneity => "positive-homogeneity",
            Axiom::ComonotonicAffinity => "comonotonic-affinity",
            Axiom::IntervalScale => "interval-scale",
            Axiom::ZeroOnBasis => "zero-on-basis",
            Axiom::LinearityInCapacity => "linearity-in-capacity",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Axiom {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Axiom::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::parse("axiom", format!("unknown axiom {s:?}")))
    }
}

fn capacity_values<S: serde::Serializer>(
    v: &SignedCapacity,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    serializer.collect_seq(v.values())
}

/// The concrete inputs of one sampled identity.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Sample {
    /// `f(x + y) = f(x) + f(y)`.
    Additivity {
        #[serde(serialize_with = "capacity_values")]
        capacity: SignedCapacity,
        x: Point,
        y: Point,
    },
    /// `f(r x) = r f(x)`.
    Homogeneity {
        #[serde(serialize_with = "capacity_values")]
        capacity: SignedCapacity,
        x: Point,
        r: f64,
    },
    /// `f(λ x + (1 - λ) x') = λ f(x) + (1 - λ) f(x')`.
    Affinity {
        #[serde(serialize_with = "capacity_values")]
        capacity: SignedCapacity,
        x: Point,
        x_prime: Point,
        lambda: f64,
    },
    /// `f_{v_S}(r x + s 1) = r f_{v_S}(x) + s`.
    IntervalScale { subset: Subset, x: Point, r: f64, s: f64 },
    /// `f_{v_S}(x) = 0`.
    ZeroOnBasis { subset: Subset, x: Point },
    /// `f_v(x) = Σ_T m_v(T) f_{v_T}(x)`.
    Linearity {
        #[serde(serialize_with = "capacity_values")]
        capacity: SignedCapacity,
        x: Point,
    },
}

/// Both sides of a sampled identity and the magnitude they were built from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sides {
    pub lhs: f64,
    pub rhs: f64,
    pub scale: f64,
}

impl Sample {
    pub fn axiom(&self) -> Axiom {
        match self {
            Sample::Additivity { .. } => Axiom::ComonotonicAdditivity,
            Sample::Homogeneity { .. } => Axiom::PositiveHomogeneity,
            Sample::Affinity { .. } => Axiom::ComonotonicAffinity,
            Sample::IntervalScale { .. } => Axiom::IntervalScale,
            Sample::ZeroOnBasis { .. } => Axiom::ZeroOnBasis,
            Sample::Linearity { .. } => Axiom::LinearityInCapacity,
        }
    }

    pub fn evaluate(&self, agg: &Aggregator) -> Result<Sides> {
        let sides = match self {
            Sample::Additivity { capacity, x, y } => {
                let lhs = agg.evaluate(capacity, &x.combine(1.0, y, 1.0))?;
                let (fx, fy) = (agg.evaluate(capacity, x)?, agg.evaluate(capacity, y)?);
                Sides {
                    lhs,
                    rhs: fx + fy,
                    scale: fx.abs().max(fy.abs()),
                }
            }
            Sample::Homogeneity { capacity, x, r } => {
                let lhs = agg.evaluate(capacity, &x.scaled(*r))?;
                let rhs = r * agg.evaluate(capacity, x)?;
                Sides { lhs, rhs, scale: 0.0 }
            }
            Sample::Affinity {
                capacity,
                x,
                x_prime,
                lambda,
            } => {
                let mix = x.combine(*lambda, x_prime, 1.0 - lambda);
                let lhs = agg.evaluate(capacity, &mix)?;
                let (a, b) = (
                    lambda * agg.evaluate(capacity, x)?,
                    (1.0 - lambda) * agg.evaluate(capacity, x_prime)?,
                );
                Sides {
                    lhs,
                    rhs: a + b,
                    scale: a.abs().max(b.abs()),
                }
            }
            Sample::IntervalScale { subset, x, r, s } => {
                let lhs = agg.evaluate_basis(*subset, &x.scaled(*r).shifted(*s))?;
                let scaled = r * agg.evaluate_basis(*subset, x)?;
                Sides {
                    lhs,
                    rhs: scaled + s,
                    scale: scaled.abs().max(s.abs()),
                }
            }
            Sample::ZeroOnBasis { subset, x } => Sides {
                lhs: agg.evaluate_basis(*subset, x)?,
                rhs: 0.0,
                scale: 0.0,
            },
            Sample::Linearity { capacity, x } => {
                let lhs = agg.evaluate(capacity, x)?;
                let mut rhs = 0.0;
                let mut scale = 0.0f64;
                for (t, m) in mobius_transform(capacity).nonzero() {
                    // m_v(∅) = 0 for every game, so the basis runs over T ≠ ∅.
                    if t.is_empty() {
                        continue;
                    }
                    let term = m * agg.evaluate_basis(t, x)?;
                    rhs += term;
                    scale = scale.max(term.abs());
                }
                Sides { lhs, rhs, scale }
            }
        };
        Ok(sides)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    pub inputs: Sample,
    pub lhs: f64,
    pub rhs: f64,
    pub discrepancy: f64,
}

impl Witness {
    /// Re-evaluates the recorded inputs from scratch.
    pub fn replay(&self, agg: &Aggregator) -> Result<Sides> {
        self.inputs.evaluate(agg)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    SatisfiedOnSamples,
    Falsified,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::SatisfiedOnSamples => "satisfied-on-samples",
            Verdict::Falsified => "falsified",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AxiomReport {
    pub axiom: Axiom,
    pub aggregator: Family,
    pub n: usize,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub samples_run: usize,
    /// Samples outside the pass band but below the falsification threshold.
    pub marginal_samples: usize,
    pub seed: u64,
    pub tolerance: f64,
}

impl AxiomReport {
    pub fn is_falsified(&self) -> bool {
        self.verdict == Verdict::Falsified
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CheckConfig {
    /// Random samples drawn after the fixtures.
    pub trials: usize,
    pub seed: u64,
    pub tolerance: Tolerance,
    pub execution: Execution,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            trials: 1000,
            seed: 0,
            tolerance: Tolerance::default(),
            execution: Execution::default(),
        }
    }
}

impl CheckConfig {
    pub fn with_trials(trials: usize, seed: u64) -> Self {
        CheckConfig {
            trials,
            seed,
            ..CheckConfig::default()
        }
    }
}

/// Stream index reserved for drawing fixture inputs.
const FIXTURE_STREAM: u64 = u64::MAX;

fn run_check<G>(
    axiom: Axiom,
    agg: &Aggregator,
    cfg: &CheckConfig,
    fixtures: Vec<Sample>,
    generate: G,
) -> Result<AxiomReport>
where
    G: Fn(&mut ChaCha8Rng) -> Sample + Sync + Send,
{
    let judge = |sample: Sample| -> Result<(Agreement, Option<Witness>)> {
        let sides = sample.evaluate(agg)?;
        let agreement = cfg.tolerance.classify(sides.lhs, sides.rhs, sides.scale);
        let witness = (agreement == Agreement::Falsified).then(|| Witness {
            lhs: sides.lhs,
            rhs: sides.rhs,
            discrepancy: (sides.lhs - sides.rhs).abs(),
            inputs: sample,
        });
        Ok((agreement, witness))
    };

    let mut outcomes = fixtures.into_iter().map(&judge).collect::<Result<Vec<_>>>()?;
    let sampled = par::map_indices(cfg.execution, cfg.trials, |k| {
        let mut rng = random::trial_rng(cfg.seed, k as u64);
        judge(generate(&mut rng))
    });
    for outcome in sampled {
        outcomes.push(outcome?);
    }

    let marginal_samples = outcomes
        .iter()
        .filter(|(a, _)| *a == Agreement::Marginal)
        .count();
    let samples_run = outcomes.len();
    let witness = outcomes.into_iter().find_map(|(_, w)| w);
    Ok(AxiomReport {
        axiom,
        aggregator: agg.family,
        n: agg.n,
        verdict: if witness.is_some() {
            Verdict::Falsified
        } else {
            Verdict::SatisfiedOnSamples
        },
        witness,
        samples_run,
        marginal_samples,
        seed: cfg.seed,
        tolerance: cfg.tolerance.relative,
    })
}

fn fixture_rng(cfg: &CheckConfig) -> ChaCha8Rng {
    random::trial_rng(cfg.seed, FIXTURE_STREAM)
}

fn check_capacity_dimension(agg: &Aggregator, v: &SignedCapacity) -> Result<()> {
    if v.n() != agg.n {
        return Err(Error::DimensionMismatch {
            expected: agg.n,
            found: v.n(),
        });
    }
    Ok(())
}

fn check_subset(agg: &Aggregator, subset: Option<Subset>) -> Result<()> {
    match subset {
        Some(s) if s.is_empty() => Err(Error::EmptySubset),
        Some(s) if !s.fits(agg.n) => Err(Error::SubsetOutOfRange { subset: s, n: agg.n }),
        _ => Ok(()),
    }
}

/// Pads a short fixture point with `fill` up to length `n`.
fn padded(coords: &[f64], n: usize, fill: f64) -> Point {
    let mut c = coords.to_vec();
    c.resize(n, fill);
    Point::from(c)
}

/// `f(x + y) = f(x) + f(y)` on comonotonic pairs.
pub fn check_comonotonic_additivity(
    agg: &Aggregator,
    v: &SignedCapacity,
    cfg: &CheckConfig,
) -> Result<AxiomReport> {
    check_capacity_dimension(agg, v)?;
    let n = agg.n;
    let mut rng = fixture_rng(cfg);
    let fixtures = vec![
        // (x, 0) reduces the identity to f(0) = 0.
        Sample::Additivity {
            capacity: v.clone(),
            x: random::point(n, -5.0, 5.0, &mut rng),
            y: Point::constant(n, 0.0),
        },
    ];
    run_check(Axiom::ComonotonicAdditivity, agg, cfg, fixtures, |rng| {
        let (x, y) = random::comonotonic_pair(n, rng);
        Sample::Additivity {
            capacity: v.clone(),
            x,
            y,
        }
    })
}

/// `f(r x) = r f(x)` for `r` log-uniform on `[0.1, 10]`.
pub fn check_positive_homogeneity(
    agg: &Aggregator,
    v: &SignedCapacity,
    cfg: &CheckConfig,
) -> Result<AxiomReport> {
    check_capacity_dimension(agg, v)?;
    let n = agg.n;
    let mut rng = fixture_rng(cfg);
    let fixtures = vec![Sample::Homogeneity {
        capacity: v.clone(),
        x: random::point(n, -5.0, 5.0, &mut rng),
        r: 1.0,
    }];
    run_check(Axiom::PositiveHomogeneity, agg, cfg, fixtures, |rng| {
        Sample::Homogeneity {
            capacity: v.clone(),
            x: random::point(n, -5.0, 5.0, rng),
            r: random::log_uniform(0.1, 10.0, rng),
        }
    })
}

/// Affinity along segments between comonotonic points, `λ ∈ [0, 1]`.
pub fn check_comonotonic_affinity(
    agg: &Aggregator,
    v: &SignedCapacity,
    cfg: &CheckConfig,
) -> Result<AxiomReport> {
    check_capacity_dimension(agg, v)?;
    let n = agg.n;
    let mut rng = fixture_rng(cfg);
    let (x, x_prime) = random::comonotonic_pair(n, &mut rng);
    let fixtures = [0.0, 1.0]
        .into_iter()
        .map(|lambda| Sample::Affinity {
            capacity: v.clone(),
            x: x.clone(),
            x_prime: x_prime.clone(),
            lambda,
        })
        .collect();
    run_check(Axiom::ComonotonicAffinity, agg, cfg, fixtures, |rng| {
        let (x, x_prime) = random::comonotonic_pair(n, rng);
        Sample::Affinity {
            capacity: v.clone(),
            x,
            x_prime,
            lambda: rng.gen_range(0.0..=1.0),
        }
    })
}

/// `f_{v_S}(r x + s 1) = r f_{v_S}(x) + s`. With `subset = None` the basis
/// game is drawn per trial.
pub fn check_interval_scale_covariance(
    agg: &Aggregator,
    subset: Option<Subset>,
    cfg: &CheckConfig,
) -> Result<AxiomReport> {
    check_subset(agg, subset)?;
    let n = agg.n;
    let mut rng = fixture_rng(cfg);
    let mut fixtures = vec![Sample::IntervalScale {
        subset: subset.unwrap_or(Subset::full(n)),
        x: random::point(n, -5.0, 5.0, &mut rng),
        r: 1.0,
        s: 0.0,
    }];
    // Known witness for the multilinear family.
    let pair = Subset::from_mask(0b11);
    if agg.family == Family::Multilinear && n >= 2 && subset.is_none_or(|s| s == pair) {
        fixtures.push(Sample::IntervalScale {
            subset: pair,
            x: padded(&[1.0, 1.0], n, 1.0),
            r: 1.0,
            s: 1.0,
        });
    }
    run_check(Axiom::IntervalScale, agg, cfg, fixtures, |rng| {
        let s = subset.unwrap_or_else(|| random::nonempty_subset(n, rng));
        Sample::IntervalScale {
            subset: s,
            x: random::point(n, -5.0, 5.0, rng),
            r: random::log_uniform(0.1, 10.0, rng),
            s: rng.gen_range(-5.0..=5.0),
        }
    })
}

/// `f_{v_S}(x) = 0` when some `x_i = 0` with `i ∈ S`, for `x ∈ [0, 1]^n`.
pub fn check_zero_on_basis(
    agg: &Aggregator,
    subset: Option<Subset>,
    cfg: &CheckConfig,
) -> Result<AxiomReport> {
    check_subset(agg, subset)?;
    let n = agg.n;
    let mut fixtures = vec![Sample::ZeroOnBasis {
        subset: subset.unwrap_or(Subset::full(n)),
        x: Point::constant(n, 0.0),
    }];
    // Known witness for the weighted-mean family.
    let pair = Subset::from_mask(0b11);
    if agg.family == Family::WeightedMean && n >= 2 && subset.is_none_or(|s| s == pair) {
        fixtures.push(Sample::ZeroOnBasis {
            subset: pair,
            x: padded(&[0.0, 2.0], n, 0.0),
        });
    }
    run_check(Axiom::ZeroOnBasis, agg, cfg, fixtures, |rng| {
        let s = subset.unwrap_or_else(|| random::nonempty_subset(n, rng));
        let mut x = random::point(n, 0.0, 1.0, rng);
        let members: Vec<usize> = s.indices().collect();
        x[members[rng.gen_range(0..members.len())]] = 0.0;
        Sample::ZeroOnBasis { subset: s, x }
    })
}

/// `f_v(x) = Σ_T m_v(T) f_{v_T}(x)` for random signed capacities `v`, plus
/// every capacity on which the family is special-cased.
pub fn check_linearity_in_capacity(agg: &Aggregator, cfg: &CheckConfig) -> Result<AxiomReport> {
    let n = agg.n;
    let mut rng = fixture_rng(cfg);
    let mut fixtures = Vec::new();
    for v in agg.distinguished_capacities() {
        if agg.family == Family::VstarPatch {
            fixtures.push(Sample::Linearity {
                capacity: v.clone(),
                x: Point::from(vec![0.0, 2.0, 1.0]),
            });
        }
        fixtures.push(Sample::Linearity {
            capacity: v,
            x: random::point(n, -5.0, 5.0, &mut rng),
        });
    }
    run_check(Axiom::LinearityInCapacity, agg, cfg, fixtures, |rng| {
        Sample::Linearity {
            capacity: random::signed_capacity(n, rng).expect("valid ground set"),
            x: random::point(n, -5.0, 5.0, rng),
        }
    })
}

/// Dispatches by axiom name. Capacity-free axioms ignore `v` apart from its
/// ground-set size.
pub fn check(
    axiom: Axiom,
    agg: &Aggregator,
    v: &SignedCapacity,
    subset: Option<Subset>,
    cfg: &CheckConfig,
) -> Result<AxiomReport> {
    match axiom {
        Axiom::ComonotonicAdditivity => check_comonotonic_additivity(agg, v, cfg),
        Axiom::PositiveHomogeneity => check_positive_homogeneity(agg, v, cfg),
        Axiom::ComonotonicAffinity => check_comonotonic_affinity(agg, v, cfg),
        Axiom::IntervalScale => check_interval_scale_covariance(agg, subset, cfg),
        Axiom::ZeroOnBasis => check_zero_on_basis(agg, subset, cfg),
        Axiom::LinearityInCapacity => check_linearity_in_capacity(agg, cfg),
    }
}

/// Ground-set size used for the sampled independence matrix.
pub const INDEPENDENCE_N: usize = 3;

/// Rows of the independence matrix.
pub const COUNTEREXAMPLE_FAMILIES: [Family; 3] =
    [Family::WeightedMean, Family::Multilinear, Family::VstarPatch];

/// Columns: linearity in the capacity, zero on basis games, interval-scale
/// covariance.
pub const CHARACTERIZATION_CONDITIONS: [Axiom; 3] = [
    Axiom::LinearityInCapacity,
    Axiom::ZeroOnBasis,
    Axiom::IntervalScale,
];

/// The single condition each counterexample family violates.
pub fn expected_violation(family: Family) -> Option<Axiom> {
    match family {
        Family::WeightedMean => Some(Axiom::ZeroOnBasis),
        Family::Multilinear => Some(Axiom::IntervalScale),
        Family::VstarPatch => Some(Axiom::LinearityInCapacity),
        Family::Choquet => None,
    }
}

/// A hand-computed counterexample, evaluated at its native ground-set size.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KnownWitness {
    pub family: Family,
    pub axiom: Axiom,
    pub n: usize,
    pub inputs: Sample,
    pub expected_lhs: f64,
    pub expected_rhs: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub reproduced: bool,
}

/// The three counterexamples: weighted mean on `v_{1,2}` at `(0, 2)`,
/// multilinear on `v_{1,2}` at `x = (1, 1)` with `r = s = 1`, and the `v*`
/// patch at `(0, 2, 1)`.
pub fn known_witnesses() -> Result<Vec<KnownWitness>> {
    let pair = Subset::from_mask(0b11);
    let cases = [
        (
            Family::WeightedMean,
            2,
            Sample::ZeroOnBasis {
                subset: pair,
                x: Point::from(vec![0.0, 2.0]),
            },
            1.0,
            0.0,
        ),
        (
            Family::Multilinear,
            2,
            Sample::IntervalScale {
                subset: pair,
                x: Point::from(vec![1.0, 1.0]),
                r: 1.0,
                s: 1.0,
            },
            4.0,
            2.0,
        ),
        (
            Family::VstarPatch,
            3,
            Sample::Linearity {
                capacity: vstar(),
                x: Point::from(vec![0.0, 2.0, 1.0]),
            },
            1.0,
            0.5,
        ),
    ];
    cases
        .into_iter()
        .map(|(family, n, inputs, expected_lhs, expected_rhs)| {
            let agg = Aggregator::new(family, n)?;
            let sides = inputs.evaluate(&agg)?;
            Ok(KnownWitness {
                family,
                axiom: inputs.axiom(),
                n,
                expected_lhs,
                expected_rhs,
                lhs: sides.lhs,
                rhs: sides.rhs,
                reproduced: sides.lhs == expected_lhs && sides.rhs == expected_rhs,
                inputs,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MatrixCell {
    pub family: Family,
    pub axiom: Axiom,
    pub expected: Verdict,
    pub report: AxiomReport,
}

impl MatrixCell {
    pub fn matches(&self) -> bool {
        self.report.verdict == self.expected
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IndependenceMatrix {
    pub seed: u64,
    pub trials: usize,
    pub witnesses_only: bool,
    pub cells: Vec<MatrixCell>,
    pub witnesses: Vec<KnownWitness>,
}

impl IndependenceMatrix {
    pub fn passed(&self) -> bool {
        self.cells.iter().all(MatrixCell::matches) && self.witnesses.iter().all(|w| w.reproduced)
    }

    pub fn deviations(&self) -> impl Iterator<Item = &MatrixCell> {
        self.cells.iter().filter(|c| !c.matches())
    }
}

/// Runs every counterexample family against every characterization
/// condition. With `witnesses_only`, only the fixture samples are used and
/// no random trials are drawn.
pub fn independence_suite(cfg: &CheckConfig, witnesses_only: bool) -> Result<IndependenceMatrix> {
    let cfg = CheckConfig {
        trials: if witnesses_only { 0 } else { cfg.trials },
        ..*cfg
    };
    let mut cells = Vec::new();
    for family in COUNTEREXAMPLE_FAMILIES {
        let agg = Aggregator::new(family, INDEPENDENCE_N)?;
        for axiom in CHARACTERIZATION_CONDITIONS {
            let report = match axiom {
                Axiom::LinearityInCapacity => check_linearity_in_capacity(&agg, &cfg)?,
                Axiom::ZeroOnBasis => check_zero_on_basis(&agg, None, &cfg)?,
                _ => check_interval_scale_covariance(&agg, None, &cfg)?,
            };
            let expected = if expected_violation(family) == Some(axiom) {
                Verdict::Falsified
            } else {
                Verdict::SatisfiedOnSamples
            };
            cells.push(MatrixCell {
                family,
                axiom,
                expected,
                report,
            });
        }
    }
    Ok(IndependenceMatrix {
        seed: cfg.seed,
        trials: cfg.trials,
        witnesses_only,
        cells,
        witnesses: known_witnesses()?,
    })
}
