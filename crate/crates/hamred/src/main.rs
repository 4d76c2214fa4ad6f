//! Command-line interface: verification suites for the built-in actions,
//! arbitrary reductions, and identification of structure-constant algebras.
//!
//! Exit codes: 0 = all checks passed, 1 = a mathematical check failed or the
//! pipeline hit an internal inconsistency, 2 = usage or input error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::Value;

use hamred::catalog::{self, CatalogEntry, Expected};
use hamred::identify::{identify, verify_relations};
use hamred::report::{
    quotient_from_json, reduction_json, run_entry, spin3_cross_report, Report,
};
use hamred::Error;

#[derive(Parser)]
#[command(
    name = "hamred",
    version,
    about = "Exact Hamiltonian reduction of Clifford and Grassmann algebras over the rationals"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a named verification suite and report every check.
    Verify {
        /// One of: theorem-h, theorem-g2, theorem-bott, spin8-vanishing,
        /// lagrangian-example, classical-limit, all
        target: String,
        /// Write the canonical JSON report(s) to this path.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Print the full text report (a summary line is printed regardless).
        #[arg(long)]
        text: bool,
        /// Also run the randomized suites with this many trials each
        /// (seeded by HAMRED_SEED).
        #[arg(long)]
        fuzz: Option<usize>,
    },
    /// Run the reduction pipeline on a catalog action or a JSON action file.
    Reduce {
        /// Catalog entry name or path to a JSON file
        /// {name, signature: [-1|0|1,...], generators: ["..."], allows_odd?}
        action: String,
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long)]
        text: bool,
    },
    /// Identify a structure-constant algebra given as JSON
    /// {dim, parities, unit, structure_constants}.
    Identify { file: PathBuf },
    /// Inspect the built-in actions.
    Catalog {
        #[command(subcommand)]
        sub: CatalogCmd,
    },
}

#[derive(Subcommand)]
enum CatalogCmd {
    /// One line per built-in action.
    List,
}

/// Input/usage failures exit 2; mathematical failures exit 1.
enum Failure {
    Math(String),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Math(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.cmd {
        Command::Verify {
            target,
            json,
            text,
            fuzz,
        } => cmd_verify(&target, json.as_deref(), text, fuzz),
        Command::Reduce { action, json, text } => cmd_reduce(&action, json.as_deref(), text),
        Command::Identify { file } => cmd_identify(&file),
        Command::Catalog { sub: CatalogCmd::List } => cmd_catalog_list(),
    };
    match result {
        Ok(true) => ExitCode::from(0),
        Ok(false) => ExitCode::from(1),
        Err(Failure::Math(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn entries_for_target(target: &str) -> Result<Vec<CatalogEntry>, Failure> {
    let by_name = |name: &str| -> Result<CatalogEntry, Failure> {
        catalog::entry_by_name(name)?
            .ok_or_else(|| Failure::Input(format!("missing catalog entry `{name}`")))
    };
    let names: Vec<&str> = match target {
        "theorem-h" => vec!["spin3-minus", "spin3-plus"],
        "theorem-g2" => vec!["g2"],
        "theorem-bott" => vec!["spin7"],
        "spin8-vanishing" => vec!["spin8"],
        "lagrangian-example" => vec!["lagrangian"],
        "classical-limit" => vec!["classical-spin3"],
        "all" => {
            return Ok(catalog::all_entries().map_err(Failure::from)?);
        }
        other => {
            return Err(Failure::Input(format!(
                "unknown verify target `{other}`; expected one of theorem-h, theorem-g2, \
                 theorem-bott, spin8-vanishing, lagrangian-example, classical-limit, all"
            )))
        }
    };
    names.into_iter().map(by_name).collect()
}

fn write_json(path: &Path, value: &Value) -> Result<(), Failure> {
    let rendered = serde_json::to_string_pretty(value)
        .map_err(|e| Failure::Input(format!("serializing report: {e}")))?;
    std::fs::write(path, rendered + "\n")
        .map_err(|e| Failure::Input(format!("writing {}: {e}", path.display())))
}

fn cmd_verify(
    target: &str,
    json: Option<&Path>,
    text: bool,
    fuzz: Option<usize>,
) -> Result<bool, Failure> {
    let entries = entries_for_target(target)?;
    let mut reports: Vec<Report> = Vec::new();
    for entry in &entries {
        reports.push(run_entry(entry, fuzz)?);
    }
    // the cross-action normalization checks ride along with both Spin(3) runs
    if matches!(target, "theorem-h" | "all") {
        reports.push(spin3_cross_report()?);
    }

    let mut all_pass = true;
    for report in &reports {
        if text {
            print!("{}", report.to_text());
        } else {
            println!(
                "{}: {}",
                report.action,
                if report.pass() { "PASS" } else { "FAIL" }
            );
        }
        all_pass &= report.pass();
    }
    if let Some(path) = json {
        let value = if reports.len() == 1 {
            reports[0].to_json()
        } else {
            Value::Array(reports.iter().map(|r| r.to_json()).collect())
        };
        write_json(path, &value)?;
    }
    Ok(all_pass)
}

fn resolve_action(action: &str) -> Result<CatalogEntry, Failure> {
    if let Some(entry) = catalog::entry_by_name(action)? {
        return Ok(entry);
    }
    let path = Path::new(action);
    if !path.exists() {
        return Err(Failure::Input(format!(
            "`{action}` is neither a catalog entry nor an existing file"
        )));
    }
    let raw = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("reading {}: {e}", path.display())))?;
    let value: Value = serde_json::from_str(&raw)
        .map_err(|e| Failure::Input(format!("parsing {}: {e}", path.display())))?;
    let spec = catalog::action_from_json(&value).map_err(|e| Failure::Input(e.to_string()))?;
    let classical = spec.signature.is_all_zero();
    Ok(CatalogEntry {
        spec,
        expected: Expected::default(),
        classical,
    })
}

fn cmd_reduce(action: &str, json: Option<&Path>, text: bool) -> Result<bool, Failure> {
    let entry = resolve_action(action)?;
    let report = run_entry(&entry, None)?;
    let mut value = report.to_json();

    // attach the full reduction data for non-module entries
    if !entry.spec.allows_odd {
        let reduction = if entry.classical {
            hamred::reduction::classical_reduce(&entry.spec)?.reduction
        } else {
            hamred::reduction::reduce(&entry.spec)?
        };
        let detail = reduction_json(&entry.spec, &reduction)?;
        value
            .as_object_mut()
            .expect("report JSON is an object")
            .insert("reduction".to_string(), detail);
    }

    if text {
        print!("{}", report.to_text());
    } else {
        println!(
            "{}: {}",
            report.action,
            if report.pass() { "PASS" } else { "FAIL" }
        );
    }
    if let Some(path) = json {
        write_json(path, &value)?;
    }
    Ok(report.pass())
}

fn cmd_identify(file: &Path) -> Result<bool, Failure> {
    let raw = std::fs::read_to_string(file)
        .map_err(|e| Failure::Input(format!("reading {}: {e}", file.display())))?;
    let value: Value = serde_json::from_str(&raw)
        .map_err(|e| Failure::Input(format!("parsing {}: {e}", file.display())))?;
    let algebra = quotient_from_json(&value).map_err(|e| Failure::Input(e.to_string()))?;
    let (tag, witness) = identify(&algebra, &[]);
    let verified = verify_relations(&algebra, &witness).unwrap_or(false);
    println!("tag: {tag}");
    for (name, coords) in &witness.images {
        let rendered: Vec<String> = coords.iter().map(hamred::rat_to_string).collect();
        println!("  {name} -> [{}]", rendered.join(", "));
    }
    for rel in &witness.relations {
        println!(
            "  [{}] {}",
            if rel.pass { "PASS" } else { "FAIL" },
            rel.description
        );
    }
    // Unknown is a legitimate answer for a well-formed input
    let _ = verified;
    Ok(true)
}

fn cmd_catalog_list() -> Result<bool, Failure> {
    for entry in catalog::all_entries()? {
        let tag = entry
            .expected
            .tag
            .map(|t| t.to_string())
            .unwrap_or_else(|| "-".to_string());
        println!(
            "{:<16} n={} signature={:?} generators={} expected={}",
            entry.spec.name,
            entry.spec.n(),
            entry.spec.signature.entries(),
            entry.spec.generators.len(),
            tag
        );
    }
    Ok(true)
}
