mod format;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};
use htype_core::basis_builder::{AutoConfigSource, ConfigRegistry};
use htype_core::clifford_rep::{clifford_type, minimal_admissible_dimension};
use htype_core::golden::{
    build_n07, golden_table, match_generated, relation_outcomes, verify_all_golden, MatchOutcome,
};
use htype_core::lie_algebra::{verify_htype, StructureTable};
use htype_core::pipeline::generate;
use htype_core::words::Signature;
use htype_core::Error;
use serde_json::json;

use crate::format::FormatRegistry;

#[derive(Parser)]
#[command(
    name = "htype",
    version,
    about = "Structure constants of pseudo H-type Lie algebras n_{r,s}"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate the commutation table of n_{r,s}
    Gen {
        r: usize,
        s: usize,
        /// Output format: json, csv or latex
        #[arg(long, default_value = "json")]
        format: String,
        /// Write to this file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        /// Configuration source: paper or auto
        #[arg(long, default_value = "paper")]
        config: String,
    },
    /// Verify reference tables, generated tables, or both
    #[command(group(ArgGroup::new("which").args(["golden", "generated", "all"])))]
    Verify {
        #[arg(long)]
        golden: bool,
        #[arg(long)]
        generated: bool,
        #[arg(long)]
        all: bool,
        /// Print a JSON report
        #[arg(long)]
        json: bool,
    },
    /// Match the generated table against the reference table
    Match { r: usize, s: usize },
    /// List minimal admissible module dimensions
    Dims,
    /// Check the listed relations for a signature
    Relations { r: usize, s: usize },
}

enum Failure {
    Usage(String),
    Mismatch(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Mismatch(_) => 3,
            Failure::Internal(_) => 1,
        }
    }

    fn report(&self) {
        let (kind, message) = match self {
            Failure::Usage(m) => ("usage", m),
            Failure::Mismatch(m) => ("mismatch", m),
            Failure::Internal(m) => ("internal", m),
        };
        eprintln!("{}", json!({ "error": kind, "message": message }));
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::SignatureRange { .. }
            | Error::LetterRange { .. }
            | Error::NotTabulated(_)
            | Error::Config(_)
            | Error::Parse(_) => Failure::Usage(e.to_string()),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn signature(r: usize, s: usize) -> Result<Signature, Failure> {
    Ok(Signature::new(r, s)?)
}

fn emit(text: &str, out: Option<&PathBuf>) -> Outcome {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn gen_table(sig: Signature, config: &str) -> Result<(StructureTable, Option<u32>), Failure> {
    let registry = ConfigRegistry::default();
    let source = registry.get(config)?;
    if config == "paper" && (sig.r(), sig.s()) == (0, 7) {
        return Ok((build_n07()?, None));
    }
    let run = match generate(sig, source) {
        Err(Error::NotTabulated(_)) => {
            eprintln!(
                "warning: no written-out configuration for {sig}; using searched involutions"
            );
            generate(sig, &AutoConfigSource)?
        }
        other => other?,
    };
    if !run.report.all_passed() {
        return Err(Failure::Mismatch(format!(
            "generated table for {sig} fails: {:?}",
            run.report.failed_checks()
        )));
    }
    let number = golden_table(sig).and_then(|g| g.number);
    Ok((run.table, number))
}

fn cmd_gen(r: usize, s: usize, format: &str, out: Option<&PathBuf>, config: &str) -> Outcome {
    let formats = FormatRegistry::default();
    let fmt = formats.get(format).ok_or_else(|| {
        Failure::Usage(format!(
            "unknown format {format:?}; available: {}",
            formats.names().join(", ")
        ))
    })?;
    let sig = signature(r, s)?;
    let (table, number) = gen_table(sig, config)?;
    emit(&fmt.render(&table, number), out)
}

fn cmd_verify(golden: bool, generated: bool, json_out: bool) -> Outcome {
    let mut ok = true;
    let mut doc = serde_json::Map::new();
    if golden {
        let verifications = verify_all_golden();
        for v in &verifications {
            ok &= v.explained();
            if !json_out {
                let name = v
                    .table
                    .map_or_else(|| v.sig.to_string(), |n| format!("Table {n} {}", v.sig));
                let status = if v.clean() {
                    "ok"
                } else if v.explained() {
                    "errata"
                } else {
                    "FAIL"
                };
                println!("{name}: {status}");
                for e in &v.errata {
                    println!("  {e}");
                }
                for f in &v.unexplained {
                    println!("  unexplained: {f}");
                }
            }
        }
        doc.insert(
            "golden".into(),
            serde_json::to_value(&verifications).expect("serializable"),
        );
    }
    if generated {
        let mut entries = Vec::new();
        for sig in Signature::all() {
            let result = gen_table_quiet(sig);
            let (passed, detail) = match &result {
                Ok(failed) if failed.is_empty() => (true, json!([])),
                Ok(failed) => (false, json!(failed)),
                Err(e) => (false, json!(e)),
            };
            ok &= passed;
            if !json_out {
                println!("generated {sig}: {}", if passed { "ok" } else { "FAIL" });
                if !passed {
                    println!("  {detail}");
                }
            }
            entries.push(json!({ "sig": sig, "passed": passed, "detail": detail }));
        }
        doc.insert("generated".into(), json!(entries));
    }
    if json_out {
        println!(
            "{}",
            serde_json::to_string_pretty(&doc).expect("serializable")
        );
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Mismatch("verification failed".into()))
    }
}

/// Failed check labels for the generated table of `sig`, paper
/// configuration first.
fn gen_table_quiet(sig: Signature) -> Result<Vec<&'static str>, String> {
    let registry = ConfigRegistry::default();
    let report = if (sig.r(), sig.s()) == (0, 7) {
        let t = build_n07().map_err(|e| e.to_string())?;
        let mut report = verify_htype(&t.block(1, 8).map_err(|e| e.to_string())?);
        if report.all_passed() {
            report = verify_htype(&t.block(9, 16).map_err(|e| e.to_string())?);
        }
        report
    } else {
        let paper = registry.get("paper").expect("registered");
        match generate(sig, paper) {
            Ok(run) => run.report,
            Err(Error::NotTabulated(_)) => {
                generate(sig, &AutoConfigSource)
                    .map_err(|e| e.to_string())?
                    .report
            }
            Err(e) => return Err(e.to_string()),
        }
    };
    Ok(report
        .failed_checks()
        .into_iter()
        .map(|c| c.label())
        .collect())
}

fn cmd_match(r: usize, s: usize) -> Outcome {
    let sig = signature(r, s)?;
    let m = match_generated(sig)?;
    let name = m
        .table
        .map_or_else(String::new, |n| format!(" (Table {n})"));
    println!("{sig}{name}: {}", m.outcome.name());
    println!("  initial vector: {:?}", m.outcome.vector());
    match &m.outcome {
        MatchOutcome::ExactMatch { .. } => println!("  sign class: all +1"),
        MatchOutcome::SignEquivalent { signs, .. } => println!("  sign class: {signs:?}"),
        MatchOutcome::Unmatched {
            diffs,
            explained_by_errata,
            ..
        } => {
            for d in diffs {
                println!("  differs at {d}");
            }
            println!("  all differences at errata cells: {explained_by_errata}");
        }
    }
    for e in &m.errata {
        println!("  erratum: {e}");
    }
    println!(
        "  candidates tried: {}, reproducing: {}",
        m.candidates_tried, m.reproducing
    );
    if m.outcome.accepted() {
        Ok(())
    } else {
        Err(Failure::Mismatch(format!(
            "generated table for {sig} does not reproduce the reference"
        )))
    }
}

fn cmd_dims() -> Outcome {
    println!("{:<8} {:<10} {:>4}", "(r,s)", "Cl_{r,s}", "dim");
    for sig in Signature::all() {
        let ty = clifford_type(sig.r(), sig.s())?;
        let d = minimal_admissible_dimension(sig);
        let mut notes = Vec::new();
        if ty.doubled {
            notes.push("doubled");
        }
        if d.derived {
            notes.push("derived from classification");
        }
        if let Some(note) = ty.suspected_typo {
            notes.push(note);
        }
        println!(
            "{:<8} {:<10} {:>4}  {}",
            sig.to_string(),
            ty.to_string(),
            d.dim,
            notes.join("; ")
        );
    }
    Ok(())
}

fn cmd_relations(r: usize, s: usize) -> Outcome {
    let sig = signature(r, s)?;
    let outcomes = relation_outcomes(sig)?;
    if outcomes.is_empty() {
        println!("{sig}: no listed relations");
        return Ok(());
    }
    let mut ok = true;
    for o in &outcomes {
        ok &= o.confirmed();
        let status = if o.confirmed() {
            "confirmed"
        } else {
            "NOT CONFIRMED"
        };
        let printed = o
            .printed_via
            .as_ref()
            .map_or_else(String::new, |p| format!(" (printed as {p})"));
        println!(
            "{}{printed}: {status}; matrix signs {:?}",
            o.text, o.matrix_signs
        );
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Mismatch(format!(
            "some relations for {sig} do not hold"
        )))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen {
            r,
            s,
            format,
            out,
            config,
        } => cmd_gen(r, s, &format, out.as_ref(), &config),
        Command::Verify {
            golden,
            generated,
            all,
            json,
        } => {
            let both = all || !(golden || generated);
            cmd_verify(golden || both, generated || both, json)
        }
        Command::Match { r, s } => cmd_match(r, s),
        Command::Dims => cmd_dims(),
        Command::Relations { r, s } => cmd_relations(r, s),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            f.report();
            ExitCode::from(f.code())
        }
    }
}
