//! `orbitmult`: Corwin–Greenleaf multiplicities and Fock branching from the
//! command line.
//!
//! Exit status: 0 on success, 1 on usage or parse errors, 2 when `verify`
//! finds the oracle disagreeing with the exact answer.

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use orbitmult::branching::{
    branch_table, branching_multiplicity, compare_n_m, convention, tensor_with_dual_sym,
    AlphaSign, BranchingTable, CompareRow, FockModel,
};
use orbitmult::cg_solver::{cg_multiplicity_with, solver, CGResult, GroupNormSolver, Multiplicity};
use orbitmult::oracle::{randomized_search, verify_membership, OracleConfig};
use orbitmult::rational::{parse_rational, to_f64, Rational};
use orbitmult::weights::{dominant_in_box, DominantWeight};

const SEED_ENV: &str = "ORBITMULT_SEED";

#[derive(Parser)]
#[command(name = "orbitmult", version, about = "Corwin-Greenleaf multiplicities for U(n) x H_n")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact n(O_(lambda,alpha), O_mu) with group norms and a witness.
    Cg {
        #[command(flatten)]
        point: Point,
        /// Group-norm solver: lagrange or linear-system.
        #[arg(long, default_value = "lagrange")]
        solver: String,
    },
    /// m(pi_(lambda,alpha), tau_mu) and the Fock degree k that carries it.
    Branch {
        #[arg(long, allow_hyphen_values = true)]
        lambda: DominantWeight,
        #[arg(long, allow_hyphen_values = true)]
        alpha_sign: AlphaSign,
        #[arg(long, allow_hyphen_values = true)]
        mu: DominantWeight,
        #[command(flatten)]
        fock: Fock,
    },
    /// Constituents of tau_lambda (x) tau_(0,...,0,-k).
    Decompose {
        #[arg(long, allow_hyphen_values = true)]
        lambda: DominantWeight,
        #[arg(long)]
        k: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// n and m side by side over a box of mu or the first Fock degrees.
    Compare {
        #[arg(long, allow_hyphen_values = true)]
        lambda: DominantWeight,
        #[arg(long, allow_hyphen_values = true, value_parser = rational)]
        alpha: Rational,
        /// Every dominant mu with entries in lo..=hi.
        #[arg(long, allow_hyphen_values = true, value_parser = mu_box, conflicts_with = "k_max", required_unless_present = "k_max")]
        mu_box: Option<(i64, i64)>,
        /// Every mu in the branching table up to this degree.
        #[arg(long)]
        k_max: Option<u64>,
        #[command(flatten)]
        fock: Fock,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Checks the exact answer against the eigenvalue oracle.
    Verify {
        #[command(flatten)]
        point: Point,
        #[arg(long, default_value_t = 200_000)]
        budget: usize,
        /// Overridden by ORBITMULT_SEED.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
    /// The branching table of pi_(lambda,alpha) restricted to K.
    Table {
        #[arg(long, allow_hyphen_values = true)]
        lambda: DominantWeight,
        #[arg(long, allow_hyphen_values = true, value_parser = rational)]
        alpha: Rational,
        #[arg(long)]
        k_max: u64,
        #[command(flatten)]
        fock: Fock,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Args)]
struct Point {
    #[arg(long, allow_hyphen_values = true)]
    lambda: DominantWeight,
    #[arg(long, allow_hyphen_values = true, value_parser = rational)]
    alpha: Rational,
    #[arg(long, allow_hyphen_values = true)]
    mu: DominantWeight,
}

#[derive(Args)]
struct Fock {
    /// K-types of the Fock space: standard, conjugate or sign-matched.
    #[arg(long, default_value = "standard")]
    convention: String,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn mu_box(s: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = s
        .split_once(':')
        .ok_or_else(|| format!("expected lo:hi, got `{s}`"))?;
    let lo: i64 = lo.trim().parse().map_err(|e| format!("`{lo}`: {e}"))?;
    let hi: i64 = hi.trim().parse().map_err(|e| format!("`{hi}`: {e}"))?;
    if lo > hi {
        return Err(format!("empty box {lo}:{hi}"));
    }
    Ok((lo, hi))
}

/// Usage and parse failures.
#[derive(Debug)]
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

enum Outcome {
    Done,
    Mismatch,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli.command, &mut out) {
        Ok(Outcome::Done) => ExitCode::SUCCESS,
        Ok(Outcome::Mismatch) => ExitCode::from(2),
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn fock_model(f: &Fock) -> Result<&'static dyn FockModel, UsageError> {
    Ok(convention(&f.convention)?)
}

fn warn_rank_one(lambda: &DominantWeight) {
    if lambda.n() == 1 {
        eprintln!("warning: n = 1; the multiplicity results are stated for n >= 2");
    }
}

fn run(command: Command, out: &mut impl Write) -> Result<Outcome, UsageError> {
    match command {
        Command::Cg { point, solver: name } => {
            let s: &dyn GroupNormSolver = solver(&name)?;
            warn_rank_one(&point.lambda);
            let r = cg_multiplicity_with(s, &point.lambda, &point.alpha, &point.mu)?;
            writeln!(out, "{}", serde_json::to_string(&r)?)?;
        }
        Command::Branch {
            lambda,
            alpha_sign,
            mu,
            fock,
        } => {
            let b = branching_multiplicity(&lambda, &mu, alpha_sign, fock_model(&fock)?)?;
            writeln!(out, "{}", serde_json::to_string(&b)?)?;
        }
        Command::Decompose { lambda, k, format } => {
            let parts = tensor_with_dual_sym(&lambda, k);
            match format {
                Format::Json => writeln!(out, "{}", serde_json::to_string(&parts)?)?,
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(out);
                    w.write_record(["nu"])?;
                    for nu in &parts {
                        w.write_record([nu.to_string()])?;
                    }
                    w.flush()?;
                }
                Format::Text => {
                    let text: Vec<String> = parts.iter().map(|nu| nu.to_string()).collect();
                    writeln!(out, "{}", text.join(" "))?;
                }
            }
        }
        Command::Compare {
            lambda,
            alpha,
            mu_box,
            k_max,
            fock,
            format,
        } => {
            let model = fock_model(&fock)?;
            warn_rank_one(&lambda);
            let mus = match (mu_box, k_max) {
                (Some((lo, hi)), _) => dominant_in_box(lambda.n(), lo, hi),
                (None, Some(k)) => {
                    let sign = AlphaSign::of(&alpha)?;
                    branch_table(&lambda, sign, model, k)
                        .rows
                        .into_iter()
                        .flat_map(|r| r.constituents)
                        .collect()
                }
                (None, None) => return Err(UsageError("one of --mu-box, --k-max is required".into())),
            };
            let rows = compare_n_m(&lambda, &alpha, &mus, model)?;
            write_compare(&rows, format, out)?;
        }
        Command::Verify {
            point,
            budget,
            seed,
            tol,
        } => {
            let seed = match std::env::var(SEED_ENV) {
                Ok(v) => v
                    .trim()
                    .parse()
                    .map_err(|e| UsageError(format!("{SEED_ENV}=`{v}`: {e}")))?,
                Err(_) => seed,
            };
            warn_rank_one(&point.lambda);
            let cfg = OracleConfig {
                tol,
                seed,
                ..OracleConfig::default()
            };
            return verify(&point, budget, &cfg, out);
        }
        Command::Table {
            lambda,
            alpha,
            k_max,
            fock,
            format,
        } => {
            let sign = AlphaSign::of(&alpha)?;
            let t = branch_table(&lambda, sign, fock_model(&fock)?, k_max);
            write_table(&t, format, out)?;
        }
    }
    Ok(Outcome::Done)
}

fn write_compare(rows: &[CompareRow], format: Format, out: &mut impl Write) -> Result<(), UsageError> {
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(rows)?)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["mu", "n", "m", "agree", "scalar_form_flag"])?;
            for r in rows {
                w.write_record([
                    r.mu.to_string(),
                    r.n.to_string(),
                    r.m.to_string(),
                    r.agree.to_string(),
                    r.scalar_form_flag.to_string(),
                ])?;
            }
            w.flush()?;
        }
        Format::Text => {
            for r in rows {
                let flag = if r.scalar_form_flag { " flagged" } else { "" };
                writeln!(out, "{} : n={} m={} agree={}{flag}", r.mu, r.n, r.m, r.agree)?;
            }
        }
    }
    Ok(())
}

fn write_table(t: &BranchingTable, format: Format, out: &mut impl Write) -> Result<(), UsageError> {
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(t)?)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["k", "nu", "dim"])?;
            for (k, nu, dim) in t.records() {
                w.write_record([k.to_string(), nu.to_string(), dim.to_string()])?;
            }
            w.flush()?;
        }
        Format::Text => {
            for row in &t.rows {
                let parts: Vec<String> = row.constituents.iter().map(|nu| nu.to_string()).collect();
                writeln!(out, "k={}: {}", row.k, parts.join(" "))?;
            }
        }
    }
    Ok(())
}

/// The witness must pass the oracle when `n = 1`, and the randomized search
/// must succeed exactly when `n = 1`.
fn verify(point: &Point, budget: usize, cfg: &OracleConfig, out: &mut impl Write) -> Result<Outcome, UsageError> {
    let r: CGResult = cg_multiplicity_with(solver("lagrange")?, &point.lambda, &point.alpha, &point.mu)?;
    let alpha = to_f64(&point.alpha);
    let witness_ok = match &r.witness {
        Some(z) => Some(verify_membership(&point.lambda, alpha, &z.to_vector(), &point.mu, cfg)?),
        None => None,
    };
    let found = randomized_search(&point.lambda, alpha, &point.mu, budget, cfg)?.is_some();
    let expect = r.multiplicity == Multiplicity::Finite(1);
    let agree = found == expect && witness_ok != Some(false);
    let report = serde_json::json!({
        "n": r.multiplicity,
        "witness_verified": witness_ok,
        "search_found": found,
        "seed": cfg.seed,
        "agree": agree,
    });
    writeln!(out, "{report}")?;
    if agree {
        Ok(Outcome::Done)
    } else {
        eprintln!("oracle disagrees with the exact answer: {}", r.diagnostics);
        Ok(Outcome::Mismatch)
    }
}
