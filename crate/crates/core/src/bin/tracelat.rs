use std::error::Error;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use tracelat::cyclotomic::{self, Involution};
use tracelat::quadratic;
use tracelat::report::{self, GramJson};
use tracelat::roots::{self, EnumerationBudget};
use tracelat::theorems;

#[derive(Parser, Debug)]
#[command(name = "tracelat", version, about = "Trace-form lattices of cyclotomic and quadratic fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the trace-form Gram matrix of Q(zeta_m) or Q(sqrt(c))
    Gram {
        #[arg(long, conflicts_with = "quad_c", required_unless_present = "quad_c")]
        m: Option<u64>,
        #[arg(long = "quad-c", allow_hyphen_values = true)]
        quad_c: Option<i64>,
        #[arg(long, value_parser = parse_theta)]
        theta: Involution,
    },
    /// Invariants and root decomposition of a Gram matrix read from JSON
    Classify {
        #[arg(long)]
        gram: PathBuf,
    },
    /// Compare computed classifications with the theorem predictions
    Sweep {
        #[arg(long = "max-m")]
        max_m: u64,
        #[arg(long = "max-quad")]
        max_quad: i64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Smith-form versus splitting-law cyclicity of p-primary parts
    Cyclicity {
        #[arg(long = "max-m")]
        max_m: u64,
    },
    /// Floating-point embedding form versus exact trace form
    BkCheck {
        #[arg(long = "max-m")]
        max_m: u64,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
    },
}

fn parse_theta(s: &str) -> Result<Involution, String> {
    s.parse()
}

/// `[1, 1, 1, 2]` as `1^3 2`.
fn compact_exponents(exps: &[u32]) -> String {
    if exps.is_empty() {
        return "-".into();
    }
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < exps.len() {
        let run = exps[i..].iter().take_while(|&&e| e == exps[i]).count();
        parts.push(if run == 1 { exps[i].to_string() } else { format!("{}^{}", exps[i], run) });
        i += run;
    }
    parts.join(" ")
}

fn print_json(v: &Value) -> Result<(), Box<dyn Error>> {
    println!("{}", serde_json::to_string_pretty(v)?);
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode, Box<dyn Error>> {
    let budget = EnumerationBudget::default();
    match cli.command {
        Command::Gram { m, quad_c, theta } => {
            let lattice = match (m, quad_c) {
                (Some(m), _) => cyclotomic::gram_trace_form(m, theta)?,
                (None, Some(c)) => quadratic::quad_gram(c, theta)?,
                (None, None) => unreachable!("clap requires one of --m / --quad-c"),
            };
            print_json(&serde_json::to_value(GramJson::from_lattice(&lattice))?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify { gram } => {
            let lattice = report::parse_gram(&fs::read_to_string(&gram)?)?;
            let own = roots::witt_decompose(&lattice, budget)?;
            let similar = roots::similar_to(&lattice, budget)?;
            print_json(&report::classify_value(&lattice, &own, &similar))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Sweep { max_m, max_quad, out } => {
            let records = theorems::sweep(max_m, max_quad, budget)?;
            let values: Vec<Value> = records.iter().map(report::record_value).collect();
            fs::write(&out, serde_json::to_string_pretty(&values)?)?;
            let bad: Vec<_> = records.iter().filter(|r| !r.agrees()).collect();
            eprintln!("{} records written to {}, {} disagreements", records.len(), out.display(), bad.len());
            for r in &bad {
                eprintln!("  DISAGREE {}: similar_to {}", r.spec, r.similar.summary());
            }
            Ok(if bad.is_empty() { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        Command::Cyclicity { max_m } => {
            let rows = theorems::cyclicity_table(max_m)?;
            println!("{:>5} {:>4} {:>4} {:>4} {:>4}  {:<16} {:>9} {:>9} {:>6}", "m", "p", "e", "f", "g", "p-exponents", "snf", "criterion", "agree");
            for r in &rows {
                let exps = compact_exponents(&r.report.exponents);
                println!(
                    "{:>5} {:>4} {:>4} {:>4} {:>4}  {:<16} {:>9} {:>9} {:>6}",
                    r.m, r.p, r.ramification.e, r.ramification.f, r.ramification.g, exps, r.snf_cyclic, r.criterion, r.agree
                );
            }
            let bad = rows.iter().filter(|r| !r.agree).count();
            eprintln!("{} pairs checked, {} disagreements", rows.len(), bad);
            Ok(if bad == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        Command::BkCheck { max_m, tol } => {
            let rows = theorems::bk_table(max_m, tol)?;
            println!("{:>5} {:>14} {:>6}", "m", "max_dev", "ok");
            for r in &rows {
                println!("{:>5} {:>14.3e} {:>6}", r.m, r.max_deviation, r.within_tolerance);
            }
            let worst = rows.iter().map(|r| r.max_deviation).fold(0.0, f64::max);
            eprintln!("{}", json!({"max_deviation": worst, "tolerance": tol}));
            Ok(if rows.iter().all(|r| r.within_tolerance) { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
