use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use qfla::catalog::{make_algebra, FamilyId, FamilyTag};
use qfla::derivations::{solve_derivation_space, verify_theorem, DerivationProblem};
use qfla::io::{algebra_to_value, derivation_space_to_value, import_algebra};
use qfla::lie::{LieAlgebra, SparseVector};
use qfla::linalg::{format_rational, parse_rational, Rational};
use qfla::report::{
    cmd_verify_all, grid_ids, verify_family_variants, with_thread_cap, VariantReport,
};
use qfla::tpa::{find_variant, variants};
use qfla::Error;

const PASS: u8 = 0;
const VERIFICATION_FAILURE: u8 = 2;
const USAGE_ERROR: u8 = 3;

#[derive(Parser)]
#[command(
    name = "qfla",
    version,
    about = "Exact checks for quasi-filiform Lie algebras of maximum length"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Bracket tables, Jacobi identity and nilindex.
    #[command(subcommand)]
    Algebra(AlgebraCmd),
    /// δ-derivation spaces and the closed-form ½-derivation bases.
    #[command(subcommand)]
    Derivations(DerivationsCmd),
    /// Transposed Poisson product tables.
    #[command(subcommand)]
    Tpa(TpaCmd),
    /// Every check on a dimension grid.
    VerifyAll(VerifyAllArgs),
}

#[derive(Args, Clone)]
struct FamilyArgs {
    /// g1n1, g2n1, g3n1, g1_7, g2_9 or g3_11.
    #[arg(long)]
    family: String,
    /// Dimension; implied for the fixed-dimension algebras.
    #[arg(long)]
    n: Option<usize>,
}

impl FamilyArgs {
    fn id(&self) -> Result<FamilyId, Error> {
        FamilyId::new(self.family.parse::<FamilyTag>()?, self.n)
    }
}

#[derive(Args)]
struct AlgebraSource {
    #[arg(long, conflicts_with = "input")]
    family: Option<String>,
    #[arg(long, requires = "family")]
    n: Option<usize>,
    /// Algebra JSON file instead of a catalog family.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Subcommand)]
enum AlgebraCmd {
    Show {
        #[command(flatten)]
        source: AlgebraSource,
        #[arg(long)]
        json: bool,
    },
    Check {
        #[command(flatten)]
        source: AlgebraSource,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum DerivationsCmd {
    Solve {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value = "1/2")]
        delta: String,
        #[arg(long)]
        json: bool,
    },
    /// Brute-force nullspace against the closed-form basis.
    Verify {
        #[arg(long, conflicts_with = "family")]
        all: bool,
        #[arg(long, default_value_t = 21)]
        n_max: usize,
        #[arg(long, required_unless_present = "all")]
        family: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Clone)]
struct SweepArgs {
    #[arg(long, default_value_t = 25)]
    samples: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..))]
    bound: u32,
}

#[derive(Subcommand)]
enum TpaCmd {
    List {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        json: bool,
    },
    /// Print one parametrized table.
    Show {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        variant: String,
    },
    Verify {
        #[arg(long, conflicts_with_all = ["family", "variant"])]
        all: bool,
        #[arg(long, default_value = "5,7,9,11")]
        n_grid: String,
        #[arg(long, required_unless_present = "all")]
        family: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        variant: Option<String>,
        #[command(flatten)]
        sweep: SweepArgs,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct VerifyAllArgs {
    #[arg(long, default_value = "5,6,7,8,9,10,11")]
    n_grid: String,
    #[command(flatten)]
    sweep: SweepArgs,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

enum Failure {
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp
                | ErrorKind::DisplayVersion
                | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => ExitCode::SUCCESS,
                _ => ExitCode::from(USAGE_ERROR),
            };
        }
    };
    let result = match cli.command {
        Command::Algebra(cmd) => algebra(cmd),
        Command::Derivations(cmd) => derivations(cmd),
        Command::Tpa(cmd) => tpa(cmd),
        Command::VerifyAll(args) => verify_all(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(USAGE_ERROR)
        }
    }
}

/// Writes to stdout; a closed pipe (e.g. `| head`) is not an error.
fn emit(text: &str) {
    let mut out = io::stdout().lock();
    if let Err(e) = writeln!(out, "{text}").and_then(|_| out.flush()) {
        if e.kind() != io::ErrorKind::BrokenPipe {
            eprintln!("error: {e}");
        }
    }
}

fn print_json(v: &Value) {
    emit(&serde_json::to_string_pretty(v).expect("json values serialize"));
}

fn status(ok: bool) -> u8 {
    if ok {
        PASS
    } else {
        VERIFICATION_FAILURE
    }
}

fn term(c: &Rational, k: usize) -> String {
    match format_rational(c).as_str() {
        "1" => format!("e{k}"),
        "-1" => format!("-e{k}"),
        s => format!("{s} e{k}"),
    }
}

fn fmt_sparse(v: &SparseVector) -> String {
    v.iter()
        .map(|(k, c)| term(c, k + 1))
        .collect::<Vec<_>>()
        .join(" + ")
        .replace("+ -", "- ")
}

fn fmt_dense(v: &[Rational]) -> String {
    let sparse: SparseVector = v
        .iter()
        .enumerate()
        .filter(|(_, c)| **c != Rational::default())
        .map(|(k, c)| (k, c.clone()))
        .collect();
    if sparse.is_empty() {
        "0".to_string()
    } else {
        fmt_sparse(&sparse)
    }
}

fn parse_grid(text: &str) -> Result<Vec<usize>, Failure> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| Failure::Usage(format!("invalid --n-grid entry {s:?}")))
        })
        .collect()
}

fn load_algebra(
    source: &AlgebraSource,
) -> Result<(LieAlgebra, Option<FamilyId>, Vec<String>), Failure> {
    match (&source.family, &source.input) {
        (Some(family), None) => {
            let id = FamilyId::new(family.parse::<FamilyTag>()?, source.n)?;
            Ok((make_algebra(id), Some(id), Vec::new()))
        }
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            let imported = import_algebra(&text)?;
            Ok((imported.algebra, None, imported.warnings))
        }
        _ => Err(Failure::Usage(
            "one of --family or --input is required".into(),
        )),
    }
}

fn algebra(cmd: AlgebraCmd) -> CmdResult {
    match cmd {
        AlgebraCmd::Show { source, json } => {
            let (alg, _, warnings) = load_algebra(&source)?;
            for w in &warnings {
                eprintln!("warning: {w}");
            }
            if json {
                print_json(&algebra_to_value(&alg));
            } else {
                println!("{} (dim {})", alg.name(), alg.dim());
                for (&(i, j), v) in alg.brackets() {
                    println!("  [e{},e{}] = {}", i + 1, j + 1, fmt_sparse(v));
                }
            }
            Ok(PASS)
        }
        AlgebraCmd::Check { source, json } => {
            let (alg, id, warnings) = load_algebra(&source)?;
            let jacobi = alg.jacobi_check();
            let series = alg.lower_central_series();
            let expected = id.map(|id| id.n() - 1);
            let nil_ok = expected.is_none_or(|e| series.nilindex == Some(e));
            let ok = jacobi.passed() && nil_ok;
            if json {
                print_json(&json!({
                    "name": alg.name(),
                    "dim": alg.dim(),
                    "jacobi": jacobi,
                    "lower_central_series": series.dims(),
                    "nilindex": series.nilindex,
                    "expected_nilindex": expected,
                    "warnings": warnings,
                    "pass": ok,
                }));
            } else {
                match jacobi.witness() {
                    None => println!("jacobi: pass ({} triples)", jacobi.tuples_checked),
                    Some(w) => println!(
                        "jacobi: FAIL on {} of {} triples, first {:?} residual {}",
                        jacobi.violations.len(),
                        jacobi.tuples_checked,
                        w.indices,
                        fmt_dense(&w.residual)
                    ),
                }
                println!("lower central series: {:?}", series.dims());
                let nil = series
                    .nilindex
                    .map_or("none (not nilpotent)".to_string(), |k| k.to_string());
                match expected {
                    Some(e) => println!("nilindex: {nil} (expected {e})"),
                    None => println!("nilindex: {nil}"),
                }
            }
            Ok(status(ok))
        }
    }
}

fn derivations(cmd: DerivationsCmd) -> CmdResult {
    match cmd {
        DerivationsCmd::Solve {
            family,
            delta,
            json,
        } => {
            let id = family.id()?;
            let delta = parse_rational(&delta)?;
            let alg = make_algebra(id);
            let space = solve_derivation_space(&DerivationProblem::new(&alg, delta.clone()));
            if json {
                print_json(&derivation_space_to_value(&space));
            } else {
                println!(
                    "{id}: δ={} derivation space of dim {}",
                    format_rational(&delta),
                    space.dim()
                );
                for (b, map) in space.basis_maps().iter().enumerate() {
                    let images: Vec<String> = (0..id.n())
                        .map(|j| (j, map.column(j)))
                        .filter(|(_, col)| col.iter().any(|c| *c != Rational::default()))
                        .map(|(j, col)| format!("e{} ↦ {}", j + 1, fmt_dense(&col)))
                        .collect();
                    println!("  φ{}: {}", b + 1, images.join(", "));
                }
            }
            Ok(PASS)
        }
        DerivationsCmd::Verify {
            all,
            n_max,
            family,
            n,
            json,
        } => {
            let ids = if all {
                FamilyId::grid(n_max)
            } else {
                let family = family.expect("clap enforces --family without --all");
                vec![FamilyId::new(family.parse::<FamilyTag>()?, n)?]
            };
            let reports = with_thread_cap(|| {
                use qfla::report::rayon_map;
                rayon_map(&ids, |&id| verify_theorem(id))
            });
            let ok = reports.iter().all(|r| r.equal);
            if json {
                print_json(&serde_json::to_value(&reports).expect("reports serialize"));
            } else {
                for (id, r) in ids.iter().zip(&reports) {
                    println!(
                        "{id}: solved {} predicted {} ({} parameters) {}",
                        r.solved_dim,
                        r.predicted_dim,
                        r.parameter_count,
                        if r.equal { "equal" } else { "MISMATCH" }
                    );
                }
            }
            Ok(status(ok))
        }
    }
}

fn print_variant_report(r: &VariantReport) {
    let word = |o: &qfla::report::SweepOutcome| match &o.witness {
        None => "pass".to_string(),
        Some(w) => format!(
            "FAIL {}/{} (sample {}, {:?}, residual {})",
            o.failed_samples,
            r.samples,
            w.sample,
            w.indices,
            fmt_dense(&w.residual)
        ),
    };
    println!("{} n={}", r.variant, r.n);
    println!("  associative: {}", word(&r.associative));
    println!("  transposed_leibniz: {}", word(&r.transposed_leibniz));
    println!(
        "  operators_in_halfderiv_space: {}",
        word(&r.operators_in_halfderiv_space)
    );
    println!(
        "  poisson_leibniz (informational): {}",
        word(&r.poisson_leibniz)
    );
    for e in &r.sampling_errors {
        println!("  sampling error: {e}");
    }
    if r.suspected_erratum {
        println!("  suspected erratum: required check fails on every sample");
    }
}

fn tpa(cmd: TpaCmd) -> CmdResult {
    match cmd {
        TpaCmd::List { family, json } => {
            let id = family.id()?;
            let vs = variants(id);
            if json {
                let list: Vec<Value> = vs
                    .iter()
                    .map(|v| {
                        json!({
                            "key": v.key,
                            "id": v.id(),
                            "parameters": v.parameters,
                            "constraints": v.constraints.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                        })
                    })
                    .collect();
                print_json(&Value::Array(list));
            } else {
                for v in &vs {
                    let cons: Vec<String> =
                        v.constraints.iter().map(|c| format!("{c}≠0")).collect();
                    let suffix = if cons.is_empty() {
                        String::new()
                    } else {
                        format!(", requires {}", cons.join(", "))
                    };
                    println!("{} ({} parameters{suffix})", v.key, v.parameters.len());
                }
            }
            Ok(PASS)
        }
        TpaCmd::Show { family, variant } => {
            let v = find_variant(family.id()?, &variant)?;
            print!("{v}");
            println!("  parameters: {}", v.parameters.join(", "));
            Ok(PASS)
        }
        TpaCmd::Verify {
            all,
            n_grid,
            family,
            n,
            variant,
            sweep,
            json,
        } => {
            let ids = if all {
                let (ids, skipped) = grid_ids(&parse_grid(&n_grid)?);
                for s in skipped {
                    eprintln!("skipped {s}");
                }
                ids
            } else {
                let family = family.expect("clap enforces --family without --all");
                vec![FamilyId::new(family.parse::<FamilyTag>()?, n)?]
            };
            if let (Some(key), [id]) = (&variant, ids.as_slice()) {
                find_variant(*id, key)?;
            }
            let reports: Vec<VariantReport> = with_thread_cap(|| {
                use qfla::report::rayon_map;
                rayon_map(&ids, |&id| {
                    verify_family_variants(id, sweep.samples, sweep.seed, sweep.bound)
                })
            })
            .into_iter()
            .flatten()
            .filter(|r| {
                variant.as_ref().is_none_or(|key| {
                    r.variant
                        .rsplit('.')
                        .next()
                        .unwrap()
                        .eq_ignore_ascii_case(key)
                })
            })
            .collect();
            let ok = reports.iter().all(VariantReport::passed);
            if json {
                let v = if reports.len() == 1 && !all {
                    serde_json::to_value(&reports[0])
                } else {
                    serde_json::to_value(&reports)
                };
                print_json(&v.expect("reports serialize"));
            } else {
                for r in &reports {
                    print_variant_report(r);
                }
            }
            Ok(status(ok))
        }
    }
}

fn verify_all(args: VerifyAllArgs) -> CmdResult {
    let grid = parse_grid(&args.n_grid)?;
    let report = cmd_verify_all(&grid, args.sweep.samples, args.sweep.seed, args.sweep.bound);
    let text = report.to_json();
    match &args.out {
        Some(path) => {
            fs::write(path, format!("{text}\n"))
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            println!(
                "{} algebras, {} theorem checks, {} product tables, {} failure(s); report written to {}",
                report.lie_axioms.len(),
                report.theorems.len(),
                report.transposed_poisson.len(),
                report.failures,
                path.display()
            );
        }
        None => emit(&text),
    }
    for s in &report.skipped {
        eprintln!("skipped {s}");
    }
    Ok(status(report.passed()))
}
