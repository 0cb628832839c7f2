use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use choquet_core::axioms::{self, Aggregator, AxiomReport, CheckConfig, IndependenceMatrix};
use choquet_core::format::{parse_set_function, write_set_function};
use choquet_core::{
    choquet, lovasz_extension, mobius_transform, oracle, random, validate_signed_capacity,
    zeta_transform, Error, EvaluationResult, Execution, MobiusRepresentation, Point, SetFunction,
    SignedCapacity, Tolerance,
};
use serde_json::json;

use crate::{Cli, Command, Format, Kind, Sampling};

pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::DimensionMismatch { .. } | Error::UnsupportedGroundSet { .. } => 3,
            Error::NotAGame { .. } => 4,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<ExitCode, Failure>;

/// Stream index for drawing a capacity when `check` is given none.
const CAPACITY_STREAM: u64 = u64::MAX - 1;

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure {
        code: 2,
        message: format!("{}: {e}", path.display()),
    }
}

fn read_set_function(path: &Path) -> Result<SetFunction, Failure> {
    let text = fs::read_to_string(path).map_err(|e| io_failure(path, e))?;
    parse_set_function(&text).map_err(|e| Failure {
        code: 2,
        message: format!("{}: {e}", path.display()),
    })
}

fn emit(output: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| io_failure(path, e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn config(sampling: &Sampling, sequential: bool) -> CheckConfig {
    CheckConfig {
        trials: sampling.trials as usize,
        seed: sampling.seed,
        tolerance: sampling
            .tolerance
            .map_or_else(Tolerance::default, Tolerance::with_relative),
        execution: if sequential {
            Execution::Sequential
        } else {
            Execution::Parallel
        },
    }
}

pub fn run(cli: Cli) -> Outcome {
    let format = cli.format;
    match cli.command {
        Command::Eval {
            capacity,
            point,
            lovasz,
        } => eval(&capacity, &point, lovasz, format),
        Command::Mobius {
            capacity,
            invert,
            output,
        } => mobius(&capacity, invert, output.as_ref()),
        Command::Check {
            axiom,
            family,
            capacity,
            n,
            subset,
            sampling,
        } => {
            let cfg = config(&sampling, cli.sequential);
            let v = match capacity {
                Some(path) => validate_signed_capacity(read_set_function(&path)?)?,
                None => {
                    let mut rng = random::trial_rng(cfg.seed, CAPACITY_STREAM);
                    random::signed_capacity(n as usize, &mut rng)?
                }
            };
            let agg = Aggregator::new(family, v.n())?;
            let report = axioms::check(axiom, &agg, &v, subset, &cfg)?;
            print_report(&report, format);
            Ok(if report.is_falsified() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::IndependenceSuite {
            paper_witnesses_only,
            sampling,
        } => {
            let cfg = config(&sampling, cli.sequential);
            let matrix = axioms::independence_suite(&cfg, paper_witnesses_only)?;
            print_matrix(&matrix, format);
            for cell in matrix.deviations() {
                eprintln!(
                    "deviation: {} / {}: expected {}, got {}",
                    cell.family, cell.axiom, cell.expected, cell.report.verdict
                );
            }
            for w in matrix.witnesses.iter().filter(|w| !w.reproduced) {
                eprintln!(
                    "witness not reproduced: {} / {}: got {} vs {}, expected {} vs {}",
                    w.family, w.axiom, w.lhs, w.rhs, w.expected_lhs, w.expected_rhs
                );
            }
            Ok(if matrix.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::RandomCapacity {
            n,
            kind,
            seed,
            output,
        } => {
            let n = n as usize;
            let mut rng = random::trial_rng(seed, 0);
            let f = match kind {
                Kind::Signed => random::signed_capacity(n, &mut rng)?.into_set_function(),
                Kind::Monotone => random::monotone_capacity(n, &mut rng)?
                    .into_signed()
                    .into_set_function(),
                Kind::NormalizedMonotone => random::normalized_capacity(n, &mut rng)?
                    .into_signed()
                    .into_set_function(),
            };
            emit(output.as_ref(), &write_set_function(&f))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle { capacity, point } => {
            let f = read_set_function(&capacity)?;
            let m = oracle::mobius_naive(&f)?;
            match point {
                None => print!("{}", write_set_function(&m.into_set_function())),
                Some(point) => {
                    let v = validate_signed_capacity(f)?;
                    let x = parse_point(&point)?;
                    let values = oracle::choquet_all_permutations(&v, &x)?;
                    match format {
                        Format::Json => println!("{}", json!({ "values": values })),
                        Format::Text => {
                            for value in values {
                                println!("{value}");
                            }
                        }
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn parse_point(text: &str) -> Result<Point, Failure> {
    text.parse::<Point>().map_err(|e| Failure {
        code: 2,
        message: e.to_string(),
    })
}

fn eval(path: &Path, point: &str, lovasz: bool, format: Format) -> Outcome {
    let f = read_set_function(path)?;
    let x = parse_point(point)?;
    let result: EvaluationResult = if lovasz {
        lovasz_extension(&f, &x)?
    } else {
        let v: SignedCapacity = validate_signed_capacity(f).map_err(|e| Failure {
            code: 4,
            message: format!("values[\"\"]: {e} (pass --lovasz for general set functions)"),
        })?;
        choquet(&v, &x)?
    };
    match format {
        Format::Text => {
            println!("{}", result.value);
            println!("permutation: {}", result.permutation);
        }
        Format::Json => println!(
            "{}",
            json!({
                "value": result.value,
                "permutation": result.permutation.elements(),
                "lovasz": lovasz,
            })
        ),
    }
    Ok(ExitCode::SUCCESS)
}

fn mobius(path: &Path, invert: bool, output: Option<&PathBuf>) -> Outcome {
    let f = read_set_function(path)?;
    let out = if invert {
        let m = MobiusRepresentation::new(f.n(), f.into_values())?;
        zeta_transform(&m)
    } else {
        mobius_transform(&f).into_set_function()
    };
    emit(output, &write_set_function(&out))?;
    Ok(ExitCode::SUCCESS)
}

fn print_report(report: &AxiomReport, format: Format) {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(report).expect("report serializes")
        ),
        Format::Text => {
            println!("axiom: {}", report.axiom);
            println!("aggregator: {} (n = {})", report.aggregator, report.n);
            println!("verdict: {}", report.verdict);
            println!(
                "samples: {} ({} marginal)",
                report.samples_run, report.marginal_samples
            );
            println!("seed: {}", report.seed);
            println!("tolerance: {:e}", report.tolerance);
            if let Some(w) = &report.witness {
                println!(
                    "witness: {}",
                    serde_json::to_string(&w.inputs).expect("inputs serialize")
                );
                println!("  lhs = {}, rhs = {}, discrepancy = {}", w.lhs, w.rhs, w.discrepancy);
            }
        }
    }
}

fn print_matrix(matrix: &IndependenceMatrix, format: Format) {
    if format == Format::Json {
        println!(
            "{}",
            serde_json::to_string_pretty(matrix).expect("matrix serializes")
        );
        return;
    }
    let columns = axioms::CHARACTERIZATION_CONDITIONS;
    print!("{:<16}", "family");
    for axiom in columns {
        print!("{:<26}", axiom.name());
    }
    println!();
    for family in axioms::COUNTEREXAMPLE_FAMILIES {
        print!("{:<16}", family.name());
        for axiom in columns {
            let cell = matrix
                .cells
                .iter()
                .find(|c| c.family == family && c.axiom == axiom)
                .expect("full matrix");
            let verdict = match cell.report.verdict {
                choquet_core::Verdict::Falsified => "FALSIFIED",
                choquet_core::Verdict::SatisfiedOnSamples => "holds",
            };
            let mark = if cell.matches() { "" } else { " (unexpected)" };
            print!("{:<26}", format!("{verdict}{mark}"));
        }
        println!();
    }
    println!();
    for w in &matrix.witnesses {
        println!(
            "{} / {} at n = {}: {} vs {} ({})",
            w.family,
            w.axiom,
            w.n,
            w.lhs,
            w.rhs,
            if w.reproduced { "reproduced" } else { "NOT reproduced" }
        );
    }
    println!(
        "samples per cell: {} random + fixtures, seed {}",
        matrix.trials, matrix.seed
    );
    println!(
        "independence pattern: {}",
        if matrix.passed() { "reproduced" } else { "DEVIATES" }
    );
}
