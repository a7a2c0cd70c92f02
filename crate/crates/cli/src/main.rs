use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;

use biset_core::acceptance::run_acceptance;
use biset_core::charmod::CharacterTable;
use biset_core::group::FiniteGroup;
use biset_core::io::{bundled_names, bundled_table, load_group, GroupSpec, TableDocument};
use biset_core::scenario::{blocks_report, bundled_scenario, parse_scenario, run_scenario, BUNDLED_SCENARIOS};
use biset_core::suite::{run_suite, SuiteConfig};
use biset_core::Error;

#[derive(Parser)]
#[command(name = "biset", version, about = "Bisets, extended tensor products, blocks and Broue invariants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Randomized check of the tensor product laws for bisets and their characters.
    VerifyBisetLaws {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Largest base group order used.
        #[arg(long, default_value_t = 12)]
        max_order: usize,
        /// Instances per law.
        #[arg(long, default_value_t = 50)]
        count: usize,
        /// Perturb one side of most comparisons so that those laws must fail.
        #[arg(long, hide = true)]
        mutate: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Blocks of a group algebra over a splitting field of characteristic p.
    Blocks {
        /// Bundled table name, or a JSON file holding a table document or a group spec.
        group: String,
        #[arg(long, short)]
        prime: u64,
        #[arg(long)]
        field_degree: Option<u32>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Runs a scenario through the Broue invariant pipeline.
    Broue {
        /// Bundled scenario name or a JSON scenario file.
        scenario: String,
        #[arg(long)]
        field_degree: Option<u32>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Validates a character table document and prints it in canonical form.
    IngestTable {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Runs all acceptance criteria.
    RunAcceptance {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Input(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::SizeLimit { .. }
            | Error::Permutation(_)
            | Error::GroupTable(_)
            | Error::NotASubgroup(_)
            | Error::NotNormal(_)
            | Error::Homomorphism(_)
            | Error::AmbientMismatch(_)
            | Error::CharacterTable(_)
            | Error::Field(_)
            | Error::SplittingField(_)
            | Error::Schema(_) => Failure::Input(e.to_string()),
            other => Failure::Verification(other.to_string()),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn emit<T: Serialize>(value: &T, out: Option<&Path>) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Failure::Input(e.to_string()))?;
    match out {
        Some(p) => std::fs::write(p, text + "\n").map_err(|e| Failure::Input(format!("{}: {e}", p.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            let _ = writeln!(stdout, "{text}");
            Ok(())
        }
    }
}

fn load_group_arg(arg: &str) -> Result<(Arc<FiniteGroup>, Option<CharacterTable>), Failure> {
    if bundled_names().iter().any(|n| n.eq_ignore_ascii_case(arg)) {
        let t = bundled_table(arg)?;
        return Ok((t.group().ambient().clone(), Some(t)));
    }
    let path = Path::new(arg);
    if !path.exists() {
        return Err(Failure::Input(format!("{arg} is neither a bundled table ({}) nor a file", bundled_names().join(", "))));
    }
    let text = read(path)?;
    if let Ok(doc) = serde_json::from_str::<TableDocument>(&text) {
        let t = doc.load()?;
        return Ok((t.group().ambient().clone(), Some(t)));
    }
    let spec: GroupSpec = serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{arg}: {e}")))?;
    Ok(load_group(&spec)?)
}

fn cmd_blocks(group: &str, p: u64, m: Option<u32>, seed: u64, out: Option<&Path>) -> Result<bool, Failure> {
    let (g, table) = load_group_arg(group)?;
    emit(&blocks_report(&g, table.as_ref(), p, m, seed)?, out)?;
    Ok(true)
}

fn cmd_broue(scenario: &str, m: Option<u32>, out: Option<&Path>) -> Result<bool, Failure> {
    let mut doc = if BUNDLED_SCENARIOS.iter().any(|(n, _)| *n == scenario) {
        bundled_scenario(scenario)?
    } else {
        let path = Path::new(scenario);
        if !path.exists() {
            let names: Vec<&str> = BUNDLED_SCENARIOS.iter().map(|(n, _)| *n).collect();
            return Err(Failure::Input(format!("{scenario} is neither a bundled scenario ({}) nor a file", names.join(", "))));
        }
        parse_scenario(&read(path)?)?
    };
    if m.is_some() {
        doc.field_degree = m;
    }
    let report = run_scenario(&doc)?;
    emit(&report, out)?;
    Ok(report.passed)
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::VerifyBisetLaws { seed, max_order, count, mutate, out } => {
            let report = run_suite(&SuiteConfig { seed, count, max_order, mutate })?;
            emit(&report, out.as_deref())?;
            for l in report.laws.iter().filter(|l| !l.ok()) {
                eprintln!("{}: {}/{} passed", l.law, l.passed, l.instances);
                for c in &l.counterexamples {
                    eprintln!("  counterexample: {c}");
                }
            }
            Ok(report.passed())
        }
        Command::Blocks { group, prime, field_degree, seed, out } => cmd_blocks(&group, prime, field_degree, seed, out.as_deref()),
        Command::Broue { scenario, field_degree, out } => cmd_broue(&scenario, field_degree, out.as_deref()),
        Command::IngestTable { file, out } => {
            let doc: TableDocument = serde_json::from_str(&read(&file)?).map_err(|e| Failure::Input(format!("{}: {e}", file.display())))?;
            let table = doc.load()?;
            emit(&TableDocument::from_table(&doc.name, doc.group.clone(), &table), out.as_deref())?;
            Ok(true)
        }
        Command::RunAcceptance { seed, out } => {
            let report = run_acceptance(seed);
            for c in &report.criteria {
                eprintln!("criterion {}: {} ({:.2}s) {}", c.id, if c.passed { "PASS" } else { "FAIL" }, c.elapsed.as_secs_f64(), c.name);
            }
            emit(&report, out.as_deref())?;
            Ok(report.passed())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let outcome = run(cli);
    eprintln!("elapsed: {:.3}s", start.elapsed().as_secs_f64());
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("input error: {msg}");
            ExitCode::from(2)
        }
    }
}
