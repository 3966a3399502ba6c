//! Command-line front end: argument parsing, dispatch to `zsl-core`, result
//! caching and report rendering.
//!
//! Exit codes: 0 success, 2 usage / domain / capacity / budget error,
//! 3 mathematical violation found.

pub mod cache;
pub mod config;
pub mod report;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::error::ErrorKind;
use clap::Parser;
use serde::Deserialize;
use serde_json::json;
use thiserror::Error;
use zsl_core::group::{dihedral_group, GroupModel};
use zsl_core::harborth::{
    formula_certificate, harborth_bruteforce, verify_remark_odd, SearchOptions,
};
use zsl_core::lemma::{verify_lemma1, verify_lemma2, verify_lemma3, LemmaOptions};
use zsl_core::product::product_set;

use crate::cache::{cache_key, Cache};
use crate::config::{
    Cli, Command, Format, GroupArgs, GroupChoice, HarborthArgs, Method, RunConfig, VerifyCommand,
};
use crate::report::{
    canonical_json, render_report, HarborthReport, ProductSetReport, RemarkOddReport, Report,
    TheoremReport, TheoremRow, SCHEMA_VERSION,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] zsl_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            // an internal certificate failed re-verification: treat as a finding
            CliError::Core(zsl_core::Error::SelfCheck(_)) => EXIT_VIOLATION,
            _ => EXIT_USAGE,
        }
    }
}

#[derive(Deserialize)]
struct TableFile {
    label: Option<String>,
    table: Vec<Vec<usize>>,
}

/// A resolved group plus the parameters that identify it in cache keys.
struct LoadedGroup {
    model: GroupModel,
    key: serde_json::Value,
}

fn load_group(args: &GroupArgs) -> Result<LoadedGroup, CliError> {
    match args.group {
        GroupChoice::Dihedral => {
            let n = args
                .n
                .ok_or_else(|| CliError::Usage("--n is required for --group dihedral".into()))?;
            if args.table.is_some() {
                return Err(CliError::Usage(
                    "--table only applies to --group table".into(),
                ));
            }
            Ok(LoadedGroup {
                model: dihedral_group(n)?,
                key: json!({"kind": "dihedral", "n": n}),
            })
        }
        GroupChoice::Table => {
            let path = args
                .table
                .as_ref()
                .ok_or_else(|| CliError::Usage("--table is required for --group table".into()))?;
            let text = fs::read_to_string(path).map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            })?;
            let file: TableFile = serde_json::from_str(&text).map_err(|e| {
                CliError::Usage(format!("{}: not a group table file: {e}", path.display()))
            })?;
            let label = file.label.unwrap_or_else(|| "table".into());
            let model = GroupModel::from_table(label.clone(), &file.table)?;
            Ok(LoadedGroup {
                model,
                key: json!({"kind": "table", "label": label, "table": file.table}),
            })
        }
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn elapsed_ms(start: Instant) -> u64 {
    start.elapsed().as_millis() as u64
}

fn harborth_report(
    group: &GroupModel,
    method: Method,
    symmetry: bool,
    cfg: &RunConfig,
) -> Result<HarborthReport, CliError> {
    let start = Instant::now();
    let opts = SearchOptions {
        jobs: cfg.jobs,
        symmetry,
        budget: cfg.budget,
        ..SearchOptions::default()
    };
    let dihedral_n = || {
        group.dihedral_n().ok_or_else(|| {
            CliError::Usage(
                "the closed form only covers dihedral groups; use --method brute".into(),
            )
        })
    };
    match method {
        Method::Brute => {
            let cert = harborth_bruteforce(group, &opts)?;
            Ok(HarborthReport::from_certificate(
                group,
                "brute",
                &cert,
                elapsed_ms(start),
            ))
        }
        Method::Formula => {
            let cert = formula_certificate(dihedral_n()?)?;
            Ok(HarborthReport::from_certificate(
                group,
                "formula",
                &cert,
                elapsed_ms(start),
            ))
        }
        Method::Both => {
            let n = dihedral_n()?;
            let brute = harborth_bruteforce(group, &opts)?;
            let formula = formula_certificate(n)?;
            let mut r = HarborthReport::from_certificate(group, "both", &brute, elapsed_ms(start));
            r.brute_value = Some(brute.value);
            r.formula_value = Some(formula.value);
            r.formula_lower_witness = Some(group.subset_names(formula.lower_witness));
            r.agree = Some(brute.value == formula.value);
            Ok(r)
        }
    }
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Brute => "brute",
        Method::Formula => "formula",
        Method::Both => "both",
    }
}

/// What a parsed command resolves to before any computation.
struct Plan {
    command: &'static str,
    params: serde_json::Value,
    json_out: Option<PathBuf>,
}

fn plan(cli: &Cli) -> Result<Plan, CliError> {
    Ok(match &cli.command {
        Command::Harborth(h) => {
            let g = load_group(&h.group)?;
            Plan {
                command: "harborth",
                params: json!({"group": g.key, "method": method_name(h.method), "symmetry": h.symmetry}),
                json_out: h.json.clone(),
            }
        }
        Command::ProductSet(p) => {
            let g = load_group(&p.group)?;
            let input = g.model.parse_subset(&p.elements)?;
            Plan {
                command: "product-set",
                params: json!({"group": g.key, "input": input.0}),
                json_out: None,
            }
        }
        Command::Verify(v) => match v {
            VerifyCommand::Lemma1 {
                n,
                trials,
                seed,
                json,
            } => Plan {
                command: "verify-lemma1",
                params: json!({"n": n, "trials": trials, "seed": seed}),
                json_out: json.clone(),
            },
            VerifyCommand::Lemma2(a) | VerifyCommand::Lemma3(a) => Plan {
                command: if matches!(v, VerifyCommand::Lemma2(_)) {
                    "verify-lemma2"
                } else {
                    "verify-lemma3"
                },
                // quotient translation changes subsets_checked; force never changes the report
                params: json!({"n": a.n, "s": a.s, "quotient_translation": a.quotient_translation}),
                json_out: a.json.clone(),
            },
            VerifyCommand::Theorem {
                n_min,
                n_max,
                symmetry,
                json,
            } => {
                if n_min > n_max {
                    return Err(CliError::Usage(format!(
                        "--n-min {n_min} exceeds --n-max {n_max}"
                    )));
                }
                Plan {
                    command: "verify-theorem",
                    params: json!({"n_min": n_min, "n_max": n_max, "symmetry": symmetry}),
                    json_out: json.clone(),
                }
            }
            VerifyCommand::RemarkOdd { n, json } => Plan {
                command: "verify-remark-odd",
                params: json!({"n": n}),
                json_out: json.clone(),
            },
        },
    })
}

fn compute(cli: &Cli, cfg: &RunConfig) -> Result<Report, CliError> {
    Ok(match &cli.command {
        Command::Harborth(HarborthArgs {
            group,
            method,
            symmetry,
            ..
        }) => {
            let g = load_group(group)?;
            Report::Harborth(harborth_report(&g.model, *method, *symmetry, cfg)?)
        }
        Command::ProductSet(p) => {
            let g = load_group(&p.group)?;
            let input = g.model.parse_subset(&p.elements)?;
            let result = product_set(&g.model, input)?;
            Report::ProductSet(ProductSetReport::new(&g.model, input, &result))
        }
        Command::Verify(v) => match v {
            VerifyCommand::Lemma1 {
                n, trials, seed, ..
            } => Report::Lemma(verify_lemma1(*n, *trials, *seed)?),
            VerifyCommand::Lemma2(a) | VerifyCommand::Lemma3(a) => {
                let opts = LemmaOptions {
                    jobs: cfg.jobs,
                    quotient_translation: a.quotient_translation,
                    force: a.force,
                };
                let r = if matches!(v, VerifyCommand::Lemma2(_)) {
                    verify_lemma2(a.n, a.s, &opts)?
                } else {
                    verify_lemma3(a.n, a.s, &opts)?
                };
                Report::Lemma(r)
            }
            VerifyCommand::Theorem {
                n_min,
                n_max,
                symmetry,
                ..
            } => {
                let mut rows = Vec::new();
                for n in *n_min..=*n_max {
                    let g = dihedral_group(n)?;
                    let cert = harborth_report(&g, Method::Both, *symmetry, cfg)?;
                    rows.push(TheoremRow {
                        n,
                        brute: cert.brute_value.unwrap_or(cert.value),
                        formula: cert.formula_value.unwrap_or(cert.value),
                        agree: cert.agree == Some(true),
                        certificate: cert,
                    });
                }
                Report::Theorem(TheoremReport {
                    schema_version: SCHEMA_VERSION,
                    n_min: *n_min,
                    n_max: *n_max,
                    passed: rows.iter().all(|r| r.agree),
                    rows,
                })
            }
            VerifyCommand::RemarkOdd { n, .. } => {
                let g = dihedral_group(*n)?;
                let r = verify_remark_odd(*n, cfg.jobs)?;
                Report::RemarkOdd(RemarkOddReport::new(&g, &r))
            }
        },
    })
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let cfg = RunConfig::from_cli(cli).map_err(CliError::Usage)?;
    let plan = plan(cli)?;
    let cache = cfg.cache_dir.as_ref().map(Cache::new);
    let key = cache_key(plan.command, &plan.params);

    let cached = cache.as_ref().and_then(|c| c.load(&key));
    let report = match cached {
        Some(r) => r,
        None => compute(cli, &cfg)?,
    };
    let violation = report.violation();

    let format = match &cli.command {
        Command::ProductSet(p) if p.json => Format::Json,
        _ => cfg.format,
    };
    let _ = out.write_all(render_report(&report, format).as_bytes());
    if let Some(path) = &plan.json_out {
        write_file(path, &canonical_json(&report.payload()))?;
    }

    if violation {
        let _ = writeln!(err, "zsl: mathematical violation found");
        return Ok(EXIT_VIOLATION);
    }
    if let Some(c) = &cache {
        if let Err(e) = c.store(&key, plan.command, &report) {
            // a read-only cache must not fail an otherwise good run
            let _ = writeln!(
                err,
                "zsl: warning: cannot write cache in {}: {e}",
                c.dir().display()
            );
        }
    }
    Ok(EXIT_OK)
}

/// Parses `argv` (including the program name), runs the command and returns
/// the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "zsl: {e}");
            e.exit_code()
        }
    }
}
