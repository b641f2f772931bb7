//! `iquantum`: verification suites, structure-constant tables and expansions.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use iquantum_core::verify::{self, Basis, ComultForm, Suite, SuiteReport, TableFormat, VarsigmaMode};
use iquantum_core::Parity;

#[derive(Parser)]
#[command(
    name = "iquantum",
    version,
    about = "Exact checks for iota-divided powers of the rank-one iquantum group"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite (or `all`); exits nonzero if any check fails.
    Verify {
        /// qidentities, pbw-core, mult-even, mult-odd, comult-even, comult-odd,
        /// fhy-forms, proof-recurrences, chi, positivity, or all
        suite: String,
        /// Bound for the suite's grid (defaults depend on the suite and mode)
        #[arg(long)]
        max: Option<i64>,
        #[arg(long, value_enum, default_value_t = Mode::Generic)]
        varsigma: Mode,
        /// Write the JSON report here (`-` for stdout)
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Emit multiplication structure constants.
    Table {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        max: i32,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Output file (stdout when absent)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print an iota-divided power or its coproduct in canonical form.
    Expand {
        #[arg(value_enum)]
        what: What,
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: i32,
        #[arg(long, value_enum, default_value_t = BasisArg::B)]
        basis: BasisArg,
        #[arg(long, value_enum, default_value_t = Form::Theorem)]
        form: Form,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Generic,
    #[value(name = "q-inverse")]
    QInverse,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Ev,
    Odd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    Idp,
    Comult,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    #[value(name = "B")]
    B,
    Pbw,
}

#[derive(Clone, Copy, ValueEnum)]
enum Form {
    Theorem,
    Fhy,
    Direct,
}

impl From<Family> for Parity {
    fn from(f: Family) -> Parity {
        match f {
            Family::Ev => Parity::Ev,
            Family::Odd => Parity::Odd,
        }
    }
}

fn write_out(path: Option<&PathBuf>, text: &str) -> Result<()> {
    match path {
        Some(p) if p.as_os_str() != "-" => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        _ => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn summarize(r: &SuiteReport) {
    let failed = r.failures().count();
    eprintln!(
        "{} (bound {}, varsigma {}): {} checks, {} failed, {:.2}s",
        r.suite,
        r.parameters.bound,
        r.parameters.varsigma,
        r.checks.len(),
        failed,
        r.wall_time_s
    );
    for c in r.failures().take(20) {
        eprintln!("  FAIL {} {:?}: {}", c.id, c.params, c.witness.as_deref().unwrap_or(""));
    }
}

fn verify_cmd(suite: &str, max: Option<i64>, mode: Mode, json: Option<PathBuf>) -> Result<bool> {
    let mode = match mode {
        Mode::Generic => VarsigmaMode::Generic,
        Mode::QInverse => VarsigmaMode::Specialized,
    };
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![suite.parse()?]
    };
    let mut reports = Vec::new();
    for s in suites {
        let r = verify::run_suite(s, max.unwrap_or_else(|| s.default_bound(mode)), mode)?;
        summarize(&r);
        reports.push(r);
    }
    let passed = reports.iter().all(SuiteReport::passed);
    if let Some(path) = json {
        let text = if reports.len() == 1 {
            reports[0].to_json()
        } else {
            serde_json::to_string_pretty(&reports)?
        };
        write_out(Some(&path), &(text + "\n"))?;
    }
    Ok(passed)
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Verify {
            suite,
            max,
            varsigma,
            json,
        } => verify_cmd(&suite, max, varsigma, json),
        Command::Table {
            family,
            max,
            format,
            out,
        } => {
            let format = match format {
                Format::Csv => TableFormat::Csv,
                Format::Json => TableFormat::Json,
            };
            write_out(out.as_ref(), &verify::emit_table(family.into(), max, format)?)?;
            Ok(true)
        }
        Command::Expand {
            what,
            family,
            n,
            basis,
            form,
        } => {
            let text = match what {
                What::Idp => verify::expand_idp(
                    family.into(),
                    n,
                    match basis {
                        BasisArg::B => Basis::B,
                        BasisArg::Pbw => Basis::Pbw,
                    },
                )?,
                What::Comult => verify::expand_comult(
                    family.into(),
                    n,
                    match form {
                        Form::Theorem => ComultForm::Theorem,
                        Form::Fhy => ComultForm::Fhy,
                        Form::Direct => ComultForm::Direct,
                    },
                )?,
            };
            println!("{text}");
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
