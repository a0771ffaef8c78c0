use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use idealtop::families::Family;
use idealtop::harness::{self, CheckId, CorpusSpec};
use idealtop::report::{analyze, to_canonical_json};
use idealtop::ring::RingSpec;
use idealtop::zsym::{prm_z_sober_bounded, reg_z_not_sober_certificate};
use idealtop::{Error, Result};

const Z_BOUND_CAP: u64 = 1_000_000;

#[derive(Parser)]
#[command(name = "idealtop", version, about = "Ideal spaces of finite commutative rings under the coarse lower topology")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Ideal lattice, named families and their topological properties.
    Analyze {
        /// Ring, e.g. "Z/12", "GF(2)[x]/(x^3)", "Z/2 x Z/2", "Z/8 / (4)".
        spec: String,
        /// Families to report (repeatable or comma separated); default all.
        #[arg(long, value_delimiter = ',')]
        family: Vec<Family>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-verify every check over the generated corpus.
    Verify {
        /// Run every check (the default when --only is absent).
        #[arg(long)]
        all: bool,
        /// Check ids such as chk-sober-eq (repeatable or comma separated).
        #[arg(long, value_delimiter = ',')]
        only: Vec<CheckId>,
        /// JSON file overriding corpus bounds.
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long, default_value = "reports")]
        out: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Certificates for Reg(Z) (irreducible, not sober) and Prm(Z) (sober up to the bound).
    ZExample {
        #[arg(long, default_value_t = 1000)]
        bound: u64,
        #[arg(long, default_value = "z-certificates")]
        out: PathBuf,
    },
    /// Write the corpus ring list as JSON.
    CorpusGen {
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn load_corpus(path: Option<&PathBuf>) -> Result<CorpusSpec> {
    match path {
        Some(p) => Ok(serde_json::from_str(&std::fs::read_to_string(p)?)?),
        None => Ok(CorpusSpec::default()),
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Analyze {
            spec,
            family,
            json,
            out,
        } => {
            let spec: RingSpec = spec.parse()?;
            let families = if family.is_empty() { Family::ALL.to_vec() } else { family };
            let report = analyze(&spec, &families)?;
            let text = if json { report.to_json()? } else { report.to_text() };
            emit(&text, out.as_ref())?;
        }
        Command::Verify {
            all,
            only,
            corpus,
            out,
            seed,
        } => {
            let mut spec = load_corpus(corpus.as_ref())?;
            if let Some(s) = seed {
                spec.seed = s;
            }
            let selected = if all || only.is_empty() { CheckId::ALL.to_vec() } else { only };
            let run = harness::run(&spec, &selected)?;
            std::fs::create_dir_all(&out)?;
            for r in &run.reports {
                std::fs::write(out.join(r.check.file_name()), r.to_json()?)?;
            }
            std::fs::write(out.join("summary.json"), run.summary_json(&spec)?)?;
            print!("{}", run.summary_table());
            if run.non_adversarial_failures() > 0 {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::ZExample { bound, out } => {
            if bound > Z_BOUND_CAP {
                return Err(Error::Precondition(format!(
                    "bound {bound} exceeds the maximum of {Z_BOUND_CAP}"
                )));
            }
            let reg = reg_z_not_sober_certificate(bound)?;
            let prm = prm_z_sober_bounded(bound)?;
            std::fs::create_dir_all(&out)?;
            std::fs::write(out.join("reg_z_certificate.json"), to_canonical_json(&reg)?)?;
            std::fs::write(out.join("prm_z_verdict.json"), to_canonical_json(&prm)?)?;
            let reg_ok = reg.validate();
            let prm_ok = prm.validate() && prm.sober_bounded;
            println!(
                "Reg(Z): irreducible ({} pairs up to {}), not sober: certificate {}",
                reg.irreducible.pairs_checked,
                reg.irreducible.pair_bound,
                if reg_ok { "valid" } else { "INVALID" }
            );
            println!(
                "Prm(Z): {} traces, {} irreducible, sober up to {}: {}",
                prm.traces_checked,
                prm.irreducible_traces,
                bound,
                if prm_ok { "valid" } else { "INVALID" }
            );
            if !(reg_ok && prm_ok) {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::CorpusGen { corpus, out } => {
            let spec = load_corpus(corpus.as_ref())?;
            let rings = harness::generate_corpus(&spec)?;
            let list: Vec<serde_json::Value> = rings
                .iter()
                .map(|r| serde_json::json!({ "ring": r.to_string(), "spec": r }))
                .collect();
            emit(&to_canonical_json(&list)?, out.as_ref())?;
            if out.is_some() {
                eprintln!("{} rings", rings.len());
            }
        }
    }
    Ok(ExitCode::SUCCESS)
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
