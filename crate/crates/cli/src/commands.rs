//! Subcommand implementations.

use std::fs;
use std::time::Instant;

use serde::Serialize;
use serde_json::json;

use exmat_core::analysis::{degeneracy_class, is_acyclic, is_light, is_permutation, reduce_chain};
use exmat_core::construction::{
    build_construction, density_bound_check, gen_pt, gen_qt, gen_xt, ConstructionError,
    ConstructionParams,
};
use exmat_core::containment::{
    contains_with, enumerate_occurrences_with, find_witness_with, ContainmentError, Embedding,
    SearchOptions,
};
use exmat_core::extremal::{extremal_exact, extremal_greedy_lb, ExtremalError, ExtremalMethod};
use exmat_core::matrix::BITMATRIX_MAX_SIDE;
use exmat_core::pattern::catalog;
use exmat_core::verify::{
    property_space, verify_avoidance, verify_lemma_p, verify_lemma_q, verify_property,
    verify_reflected_property, VerificationReport, VerifyError, VerifyMode, EXHAUSTIVE_BUDGET,
};
use exmat_core::{Pattern, SparseMatrix};

use crate::report::{write_output, RunReport};
use crate::{
    formats, ClassifyArgs, CliError, ContainsArgs, DensityArgs, ExtremalArgs, GenConstructionArgs,
    GenPatternArgs, ReduceArgs, VerifyArgs,
};

fn read_file(path: &str) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::usage(format!("cannot read {path}: {e}")))
}

fn load_pattern(path: &str) -> Result<Pattern, CliError> {
    formats::read_pattern(&read_file(path)?)
        .map_err(|e| CliError::usage(format!("{path}: {e:#}")))
}

fn load_matrix(path: &str) -> Result<SparseMatrix, CliError> {
    formats::read_matrix(&read_file(path)?)
        .map_err(|e| CliError::usage(format!("{path}: {e:#}")))
}

fn params(t: u32, k: u32) -> Result<ConstructionParams, CliError> {
    ConstructionParams::new(t, k).map_err(|e| match e {
        ConstructionError::ParamRange { .. } => CliError::usage(format!("{e}")),
        other => CliError::scale(format!("{other}")),
    })
}

fn containment_error(e: ContainmentError) -> CliError {
    match e {
        ContainmentError::DegeneratePattern => CliError::usage(format!("{e}")),
        _ => CliError::scale(format!("{e}")),
    }
}

fn emit<T: Serialize>(
    mut report: RunReport<T>,
    dest: &Option<String>,
    timings: bool,
    started: Instant,
) -> Result<(), CliError> {
    if timings {
        report.timing_ms = Some(started.elapsed().as_millis() as u64);
    }
    if let Some(dest) = dest {
        write_output(dest, &report.render())
            .map_err(|e| CliError::other(format!("{e:#}")))?;
    }
    Ok(())
}

pub fn gen_construction(args: GenConstructionArgs) -> Result<i32, CliError> {
    let params = params(args.t, args.k)?;
    let matrix = build_construction(&params, args.cap)
        .map_err(|e| CliError::scale(format!("{e}")))?;
    write_output(&args.output, &formats::write_matrix(&matrix))
        .map_err(|e| CliError::other(format!("{e:#}")))?;
    Ok(0)
}

pub fn gen_pattern(args: GenPatternArgs) -> Result<i32, CliError> {
    let pattern = match (&args.family, &args.name) {
        (Some(family), None) => {
            let t = args
                .t
                .ok_or_else(|| CliError::usage("--family requires --t"))?;
            let gen = match family.to_ascii_lowercase().as_str() {
                "pt" | "p" => gen_pt,
                "qt" | "q" => gen_qt,
                "xt" | "x" => gen_xt,
                other => return Err(CliError::usage(format!("unknown family `{other}`"))),
            };
            gen(t).map_err(|e| CliError::usage(format!("{e}")))?
        }
        (None, Some(name)) => catalog(name).map_err(|e| CliError::usage(format!("{e}")))?,
        _ => return Err(CliError::usage("pass exactly one of --family (with --t) or --name")),
    };
    write_output(&args.output, &formats::write_pattern(&pattern))
        .map_err(|e| CliError::other(format!("{e:#}")))?;
    Ok(0)
}

#[derive(Serialize)]
struct ContainsResults {
    pattern_rows: u32,
    pattern_cols: u32,
    matrix_side: u64,
    contained: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Embedding>,
    #[serde(skip_serializing_if = "Option::is_none")]
    occurrence_count: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    occurrences: Option<Vec<Embedding>>,
}

pub fn contains(args: ContainsArgs, timings: bool, started: Instant) -> Result<i32, CliError> {
    let pattern = load_pattern(&args.pattern)?;
    let matrix = load_matrix(&args.matrix)?;
    let opts = SearchOptions { node_budget: args.budget };

    // Dense bitset search under the dense cap, sparse line search above it.
    let dense = (matrix.side() <= BITMATRIX_MAX_SIDE)
        .then(|| matrix.to_bitmatrix().expect("side checked"));

    let mut results = ContainsResults {
        pattern_rows: pattern.rows(),
        pattern_cols: pattern.cols(),
        matrix_side: matrix.side(),
        contained: false,
        witness: None,
        occurrence_count: None,
        occurrences: None,
    };
    if let Some(limit) = args.count {
        let occ = match &dense {
            Some(d) => enumerate_occurrences_with(&pattern, d, Some(limit), &opts),
            None => enumerate_occurrences_with(&pattern, &matrix, Some(limit), &opts),
        }
        .map_err(containment_error)?;
        results.contained = !occ.is_empty();
        results.occurrence_count = Some(occ.len() as u64);
        results.occurrences = Some(occ);
        if args.witness {
            results.witness = results.occurrences.as_ref().and_then(|o| o.first().cloned());
        }
    } else if args.witness {
        let witness = match &dense {
            Some(d) => find_witness_with(&pattern, d, &opts),
            None => find_witness_with(&pattern, &matrix, &opts),
        }
        .map_err(containment_error)?;
        results.contained = witness.is_some();
        results.witness = witness;
    } else {
        results.contained = match &dense {
            Some(d) => contains_with(&pattern, d, &opts),
            None => contains_with(&pattern, &matrix, &opts),
        }
        .map_err(containment_error)?;
    }

    let contained = results.contained;
    let report = RunReport::new(
        "contains",
        json!({
            "pattern": args.pattern,
            "matrix": args.matrix,
            "count": args.count,
            "budget": args.budget,
        }),
        results,
    );
    emit(report, &args.json, timings, started)?;
    Ok(if contained { 0 } else { 1 })
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Check {
    Part(u8),
    Reflected(u8),
    LemmaP,
    LemmaQ,
    Avoidance,
}

impl Check {
    fn parse_list(text: &str) -> Result<Vec<Check>, CliError> {
        let mut out = Vec::new();
        for item in text.split(',') {
            match item.trim().to_ascii_lowercase().as_str() {
                "" => {}
                "all" => {
                    out.extend([
                        Check::Part(1),
                        Check::Part(2),
                        Check::Part(3),
                        Check::Part(4),
                        Check::Part(5),
                        Check::Reflected(4),
                        Check::Reflected(5),
                        Check::LemmaP,
                        Check::LemmaQ,
                        Check::Avoidance,
                    ]);
                }
                "1" | "2" | "3" | "4" | "5" => {
                    out.push(Check::Part(item.trim().parse().expect("digit")));
                }
                "r4" => out.push(Check::Reflected(4)),
                "r5" => out.push(Check::Reflected(5)),
                "p" => out.push(Check::LemmaP),
                "q" => out.push(Check::LemmaQ),
                "avoidance" => out.push(Check::Avoidance),
                other => return Err(CliError::usage(format!("unknown check `{other}`"))),
            }
        }
        if out.is_empty() {
            return Err(CliError::usage("no checks requested"));
        }
        Ok(out)
    }
}

fn verify_error(e: VerifyError) -> CliError {
    match e {
        VerifyError::BadPart(_) => CliError::usage(format!("{e}")),
        _ => CliError::scale(format!("{e}")),
    }
}

pub fn verify(args: VerifyArgs, timings: bool, started: Instant) -> Result<i32, CliError> {
    let params = params(args.t, args.k)?;
    let checks = Check::parse_list(&args.checks)?;

    let needs_matrix = checks
        .iter()
        .any(|c| matches!(c, Check::LemmaP | Check::LemmaQ | Check::Avoidance));
    let matrix = if needs_matrix {
        Some(build_construction(&params, args.cap).map_err(|e| CliError::scale(format!("{e}")))?)
    } else {
        None
    };

    // Sampled when forced by --samples; otherwise exhaustive where the
    // space (or matrix) is small enough, falling back to 10^6 samples.
    let default_samples = args.samples.unwrap_or(1_000_000);
    let mode_for = |space: u128| -> VerifyMode {
        if args.samples.is_none() && space <= EXHAUSTIVE_BUDGET {
            VerifyMode::Exhaustive
        } else {
            VerifyMode::Sampled { samples: default_samples, seed: args.seed }
        }
    };

    let mut reports: Vec<VerificationReport> = Vec::new();
    for check in &checks {
        let report = match *check {
            Check::Part(part) => {
                let mode = mode_for(property_space(&params, part, false));
                verify_property(&params, part, mode).map_err(verify_error)?
            }
            Check::Reflected(part) => {
                let mode = mode_for(property_space(&params, part, true));
                verify_reflected_property(&params, part, mode).map_err(verify_error)?
            }
            Check::LemmaP | Check::LemmaQ => {
                let m = matrix.as_ref().expect("built above");
                // Full enumeration is cheap while the matrix is small.
                let mode = if args.samples.is_none() && params.n() <= BITMATRIX_MAX_SIDE {
                    VerifyMode::Exhaustive
                } else {
                    VerifyMode::Sampled { samples: default_samples, seed: args.seed }
                };
                if matches!(check, Check::LemmaP) {
                    verify_lemma_p(&params, m, mode).map_err(verify_error)?
                } else {
                    verify_lemma_q(&params, m, mode).map_err(verify_error)?
                }
            }
            Check::Avoidance => {
                let m = matrix.as_ref().expect("built above");
                let opts = SearchOptions { node_budget: args.budget };
                verify_avoidance(&params, m, &opts).map_err(verify_error)?
            }
        };
        reports.push(report);
    }

    let all_pass = reports.iter().all(|r| r.pass);
    let sampled = reports
        .iter()
        .any(|r| matches!(r.mode, VerifyMode::Sampled { .. }));
    let mut report = RunReport::new(
        "verify",
        json!({
            "t": args.t,
            "k": args.k,
            "checks": args.checks,
            "samples": args.samples,
            "cap": args.cap,
            "budget": args.budget,
        }),
        json!({ "checks": reports, "all_pass": all_pass }),
    );
    if sampled {
        report.seed = Some(args.seed);
    }
    emit(report, &args.json, timings, started)?;
    Ok(if all_pass { 0 } else { 1 })
}

pub fn density(args: DensityArgs, timings: bool, started: Instant) -> Result<i32, CliError> {
    let params = params(args.t, args.k)?;
    let check = density_bound_check(&params);
    let results = json!({
        "n": params.n(),
        "weight": check.weight.to_string(),
        "bound_numer": check.bound_numer.to_string(),
        "bound_denom": check.bound_denom,
        "bound_approx": check.bound_numer as f64 / check.bound_denom as f64,
        "pass": check.pass,
    });
    let pass = check.pass;
    let report = RunReport::new("density", json!({ "t": args.t, "k": args.k }), results);
    emit(report, &args.json, timings, started)?;
    Ok(if pass { 0 } else { 1 })
}

fn extremal_error(e: ExtremalError) -> CliError {
    match e {
        ExtremalError::Scale { .. } | ExtremalError::Budget { .. } => {
            CliError::scale(format!("{e}"))
        }
        _ => CliError::usage(format!("{e}")),
    }
}

pub fn extremal(args: ExtremalArgs, timings: bool, started: Instant) -> Result<i32, CliError> {
    let pattern = load_pattern(&args.pattern)?;
    let (result, seed) = match args.method.to_ascii_lowercase().as_str() {
        "bnb" => (
            extremal_exact(&pattern, args.n, ExtremalMethod::BranchAndBound)
                .map_err(extremal_error)?,
            None,
        ),
        "exhaustive" => (
            extremal_exact(&pattern, args.n, ExtremalMethod::Exhaustive)
                .map_err(extremal_error)?,
            None,
        ),
        "greedy" => (
            extremal_greedy_lb(&pattern, args.n, args.seed).map_err(extremal_error)?,
            Some(args.seed),
        ),
        other => return Err(CliError::usage(format!("unknown method `{other}`"))),
    };
    let results = json!({
        "n": args.n,
        "method": result.method,
        "value": result.value,
        "nodes_explored": result.nodes_explored,
        "maximizer_entries": result.maximizer.to_sparse().entries(),
    });
    let mut report = RunReport::new(
        "extremal",
        json!({ "pattern": args.pattern, "n": args.n, "method": args.method }),
        results,
    );
    report.seed = seed;
    emit(report, &args.json, timings, started)?;
    Ok(0)
}

pub fn classify(args: ClassifyArgs, timings: bool, started: Instant) -> Result<i32, CliError> {
    let pattern = load_pattern(&args.pattern)?;
    let degeneracy = degeneracy_class(&pattern)
        .map_err(|e| CliError::usage(format!("{e}")))?;
    let results = json!({
        "rows": pattern.rows(),
        "cols": pattern.cols(),
        "weight": pattern.weight(),
        "light": is_light(&pattern),
        "permutation": is_permutation(&pattern),
        "acyclic": is_acyclic(&pattern),
        "degeneracy": degeneracy,
    });
    let report = RunReport::new("classify", json!({ "pattern": args.pattern }), results);
    emit(report, &args.json, timings, started)?;
    Ok(0)
}

pub fn reduce(args: ReduceArgs, timings: bool, started: Instant) -> Result<i32, CliError> {
    let pattern = load_pattern(&args.pattern)?;
    if args.target_weight < 1 {
        return Err(CliError::usage("--target-weight must be at least 1"));
    }
    let chain = reduce_chain(&pattern, args.target_weight)
        .map_err(|e| CliError::scale(format!("{e}")))?;
    let results = match &chain {
        Some(chain) => json!({
            "found": true,
            "length": chain.implied_exponent(),
            "final_weight": chain.final_pattern.weight(),
            "chain": chain,
        }),
        None => json!({ "found": false }),
    };
    let found = chain.is_some();
    let report = RunReport::new(
        "reduce",
        json!({ "pattern": args.pattern, "target_weight": args.target_weight }),
        results,
    );
    emit(report, &args.json, timings, started)?;
    Ok(if found { 0 } else { 1 })
}
