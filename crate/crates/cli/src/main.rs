//! Command-line front end for the quandles toolkit.
//!
//! Quandle files use the text format of `quandles::text`: an order line, then
//! one table row per line, `#` comments allowed. Subsets on the command line
//! are 0-based comma lists (`0,1`); congruences are semicolon-separated
//! classes (`0,1;2`).
//!
//! Exit status: 0 on success, 1 on domain errors (invalid tables, failed
//! verification, bounds), 2 on usage errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, Subcommand};
use quandles::classify::classify;
use quandles::closure::{closure_sub, is_closed, is_dense};
use quandles::congruence::{effective_closure, inn_congruence, join, quotient, Congruence};
use quandles::enumerate::enumerate_quandles;
use quandles::hom::enumerate_homs;
use quandles::orbit::{orbits, pi0};
use quandles::text::{format_quandle, parse_quandle};
use quandles::verify::run_all;
use quandles::{Quandle, Subset};

#[derive(Parser)]
#[command(
    name = "quandles",
    version,
    about = "Finite quandle toolkit: orbits, closure operators, classification, enumeration"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a quandle file
    Check { file: PathBuf },
    /// Print the orbit partition
    Orbits { file: PathBuf },
    /// Print the trivial quandle of components and the unit map
    Pi0 { file: PathBuf },
    /// Closure of a subquandle, with dense/closed flags
    Closure {
        file: PathBuf,
        /// Subquandle as a comma list, e.g. 0,1
        #[arg(long)]
        sub: String,
    },
    /// Closure of a congruence
    ClosureCong {
        file: PathBuf,
        /// Congruence classes, e.g. 0,1;2
        #[arg(long)]
        cong: String,
    },
    /// The congruence whose classes are the orbits
    Inn { file: PathBuf },
    /// Quotient by a congruence, with the projection map
    Quotient {
        file: PathBuf,
        /// Congruence classes, e.g. 0,1;2
        #[arg(long)]
        cong: String,
    },
    /// Join of two congruences (pass --cong twice)
    Join {
        file: PathBuf,
        /// Congruence classes, e.g. 0,1;2
        #[arg(long = "cong")]
        congs: Vec<String>,
    },
    /// Classification report
    Classify {
        file: PathBuf,
        /// One JSON object instead of text
        #[arg(long)]
        json: bool,
    },
    /// Componentwise product of two quandles
    Product { file1: PathBuf, file2: PathBuf },
    /// All homomorphisms from the first quandle to the second, one map per line
    Homs { file1: PathBuf, file2: PathBuf },
    /// All quandles of one order up to isomorphism
    Enumerate {
        #[arg(long)]
        order: usize,
        /// Print only the class count
        #[arg(long)]
        count_only: bool,
    },
    /// Run every verification suite and report per-statement results
    Verify {
        #[arg(long, default_value_t = 4)]
        max_order: usize,
        /// One JSON object per suite instead of text
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}

fn load(path: &Path) -> anyhow::Result<Quandle> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    parse_quandle(&text).with_context(|| format!("{}", path.display()))
}

fn parse_subset(spec: &str, order: usize) -> anyhow::Result<Subset> {
    let mut s = Subset::empty(order);
    for tok in spec.split(',').filter(|t| !t.trim().is_empty()) {
        let x: usize = tok
            .trim()
            .parse()
            .map_err(|_| anyhow!("bad subset element {tok:?}"))?;
        if x >= order {
            return Err(anyhow!("subset element {x} outside the carrier 0..{order}"));
        }
        s.insert(x);
    }
    Ok(s)
}

fn parse_congruence(spec: &str, order: usize) -> anyhow::Result<Congruence> {
    let mut classes = Vec::new();
    for class in spec.split(';').filter(|c| !c.trim().is_empty()) {
        let mut members = Vec::new();
        for tok in class.split(',').filter(|t| !t.trim().is_empty()) {
            members.push(
                tok.trim()
                    .parse()
                    .map_err(|_| anyhow!("bad congruence element {tok:?}"))?,
            );
        }
        classes.push(members);
    }
    Ok(Congruence::from_classes(order, &classes)?)
}

fn run(command: Command) -> anyhow::Result<ExitCode> {
    match command {
        Command::Check { file } => {
            let q = load(&file)?;
            println!("ok: quandle of order {}", q.order());
        }
        Command::Orbits { file } => {
            let q = load(&file)?;
            let orb = orbits(&q);
            println!("orbits: {}", orb.class_count());
            println!("classes: {}", inn_congruence(&q));
        }
        Command::Pi0 { file } => {
            let q = load(&file)?;
            let (components, unit) = pi0(&q);
            print!("{}", format_quandle(&components));
            println!("# unit: {}", join_words(unit.map()));
        }
        Command::Closure { file, sub } => {
            let q = load(&file)?;
            let m = parse_subset(&sub, q.order())?;
            let c = closure_sub(&q, &m)?;
            println!("closure: {c}");
            println!("dense: {}", is_dense(&q, &m)?);
            println!("closed: {}", is_closed(&q, &m)?);
        }
        Command::ClosureCong { file, cong } => {
            let q = load(&file)?;
            let r = parse_congruence(&cong, q.order())?;
            println!("closure: {}", effective_closure(&q, &r)?);
        }
        Command::Inn { file } => {
            let q = load(&file)?;
            println!("inn: {}", inn_congruence(&q));
        }
        Command::Quotient { file, cong } => {
            let q = load(&file)?;
            let r = parse_congruence(&cong, q.order())?;
            let (quot, proj) = quotient(&q, &r)?;
            print!("{}", format_quandle(&quot));
            println!("# projection: {}", join_words(proj.map()));
        }
        Command::Join { file, congs } => {
            if congs.len() != 2 {
                Cli::command()
                    .error(
                        ErrorKind::WrongNumberOfValues,
                        "join needs exactly two --cong arguments",
                    )
                    .exit();
            }
            let q = load(&file)?;
            let r = parse_congruence(&congs[0], q.order())?;
            let s = parse_congruence(&congs[1], q.order())?;
            r.validate_on(&q)?;
            s.validate_on(&q)?;
            println!("join: {}", join(&q, &r, &s)?);
        }
        Command::Classify { file, json } => {
            let q = load(&file)?;
            let c = classify(&q)?;
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "trivial": c.trivial,
                        "quasi_trivial": c.quasi_trivial,
                        "connected": c.connected,
                        "c_connected": c.c_connected,
                        "c_separated": c.c_separated,
                        "in_Z": c.in_z,
                        "orbits": c.orbit_count,
                    })
                );
            } else {
                println!("{:<15}{}", "trivial:", c.trivial);
                println!("{:<15}{}", "quasi_trivial:", c.quasi_trivial);
                println!("{:<15}{}", "connected:", c.connected);
                println!("{:<15}{}", "c_connected:", c.c_connected);
                println!("{:<15}{}", "c_separated:", c.c_separated);
                println!("{:<15}{}", "in_Z:", c.in_z);
                println!("{:<15}{}", "orbits:", c.orbit_count);
                println!(
                    "summary: trivial={} quasi_trivial={} connected={} c_connected={} c_separated={} in_Z={} orbits={}",
                    c.trivial, c.quasi_trivial, c.connected, c.c_connected, c.c_separated, c.in_z, c.orbit_count
                );
            }
        }
        Command::Product { file1, file2 } => {
            let q1 = load(&file1)?;
            let q2 = load(&file2)?;
            print!("{}", format_quandle(&q1.product(&q2)?));
        }
        Command::Homs { file1, file2 } => {
            let q1 = load(&file1)?;
            let q2 = load(&file2)?;
            for h in enumerate_homs(&q1, &q2) {
                println!("{}", join_words(h.map()));
            }
        }
        Command::Enumerate { order, count_only } => {
            let classes = enumerate_quandles(order)?;
            if count_only {
                println!("{}", classes.len());
            } else {
                for (i, q) in classes.iter().enumerate() {
                    if i > 0 {
                        println!();
                    }
                    print!("{}", format_quandle(q));
                }
            }
        }
        Command::Verify { max_order, json } => {
            let results = run_all(max_order)?;
            let width = results.iter().map(|r| r.name.len()).max().unwrap_or(0);
            let mut failed = 0;
            for r in &results {
                if json {
                    println!(
                        "{}",
                        serde_json::json!({
                            "suite": r.name,
                            "instances": r.instances,
                            "pass": r.passed,
                        })
                    );
                } else {
                    let status = if r.passed { "pass" } else { "FAIL" };
                    println!("{status}  {:<width$}  {:>9} instances", r.name, r.instances);
                }
                if !r.passed {
                    failed += 1;
                    if let Some(w) = &r.witness {
                        eprintln!("witness ({}): {w}", r.name);
                    }
                }
            }
            if !json {
                println!(
                    "verify: {}/{} suites passed (max order {max_order})",
                    results.len() - failed,
                    results.len()
                );
            }
            if failed > 0 {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn join_words(values: &[usize]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
