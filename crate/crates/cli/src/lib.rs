//! Command-line front end for `formwidth-core`.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 work cap
//! reached before an answer was found.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use formwidth_core::extremal::DEFAULT_EX_BUDGET;
use formwidth_core::formation::{DEFAULT_FORMATION_BUDGET, MAX_NAIVE_BLOCKS};
use formwidth_core::golden::GoldenBlocks;
use formwidth_core::{
    classify_all, enumerate_fw4_alt5, ex_bruteforce, fl, fw_naive, fw_search, parse_sequence,
    verify_theorem, ClassificationReport, EnumOptions, Error, FlOutcome, FwOptions, FwOutcome,
    Sequence,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNRESOLVED: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "formwidth",
    version,
    about = "Formation width and pattern containment for sequences"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Worker threads (1 = deterministic single-threaded reference path).
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub threads: Option<u32>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Formation width of a sequence.
    Fw {
        #[arg(value_parser = sequence_arg)]
        sequence: Sequence,
        /// Also run the unpruned enumeration and report its node count.
        #[arg(long)]
        naive: bool,
    },
    /// Formation length of a sequence.
    Fl {
        #[arg(value_parser = sequence_arg)]
        sequence: Sequence,
        /// Largest alphabet size to try.
        #[arg(long, default_value_t = 8)]
        max_r: usize,
        /// Formations checked per alphabet size before giving up.
        #[arg(long, default_value_t = DEFAULT_FORMATION_BUDGET)]
        budget: u64,
    },
    /// Whether HAYSTACK contains PATTERN up to renaming of letters.
    Contains {
        #[arg(value_parser = sequence_arg)]
        haystack: Sequence,
        #[arg(value_parser = sequence_arg)]
        pattern: Sequence,
    },
    /// Alternation length of a sequence.
    Alt {
        #[arg(value_parser = sequence_arg)]
        sequence: Sequence,
    },
    /// Every reduced sequence on N letters with formation width 4 and
    /// alternation length 5.
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        letters: u32,
        /// Compare against the block for N in this golden file.
        #[arg(long)]
        golden: Option<PathBuf>,
    },
    /// Which family a sequence belongs to.
    Classify {
        #[arg(value_parser = sequence_arg)]
        sequence: Sequence,
        /// List every matching family.
        #[arg(long)]
        verbose: bool,
    },
    /// Compare the enumeration with the family list for n = 2..=N.
    VerifyTheorem {
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(2..))]
        max_letters: u32,
        /// Also compare each enumerated block with this golden file.
        #[arg(long)]
        golden: Option<PathBuf>,
    },
    /// Exact Ex(u, n) by exhaustive search (feasible for tiny n only).
    Ex {
        #[arg(long, value_parser = sequence_arg)]
        pattern: Sequence,
        #[arg(long)]
        n: usize,
        /// Search-tree nodes before giving up.
        #[arg(long, default_value_t = DEFAULT_EX_BUDGET)]
        budget: u64,
    },
}

fn sequence_arg(text: &str) -> Result<Sequence, String> {
    parse_sequence(text).map_err(|e| e.to_string())
}

/// Parses `args` (program name first) and runs the command, writing results
/// to `out` and diagnostics to standard error. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            if code == EXIT_OK {
                let _ = write!(out, "{e}");
            } else {
                eprint!("{e}");
            }
            return code;
        }
    };
    let result = match cli.threads {
        Some(k) => match rayon::ThreadPoolBuilder::new()
            .num_threads(k as usize)
            .build()
        {
            Ok(pool) => {
                let mut buf = Vec::new();
                let result = pool.install(|| execute(&cli, &mut buf));
                out.write_all(&buf).map_err(Failure::from).and(result)
            }
            Err(e) => Err(Failure::Usage(e.to_string())),
        },
        None => execute(&cli, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            EXIT_VERIFY_FAILED
        }
    }
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(_) => Failure::Internal(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

fn emit_json(out: &mut dyn Write, value: &impl Serialize) -> Result<(), Failure> {
    let text = serde_json::to_string(value).map_err(|e| Failure::Internal(e.to_string()))?;
    writeln!(out, "{text}")?;
    Ok(())
}

fn load_golden(path: &Path) -> Result<GoldenBlocks, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(GoldenBlocks::parse(&text)?)
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let parallel = cli.threads != Some(1);
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Fw { sequence, naive } => {
            let report = fw_search(
                sequence,
                &FwOptions {
                    limit: None,
                    parallel,
                },
            )?;
            let width = report
                .outcome
                .exact()
                .ok_or_else(|| Failure::Internal("search stopped early".into()))?;
            let naive_nodes = if *naive {
                let cap = sequence.len().min(MAX_NAIVE_BLOCKS);
                let naive = fw_naive(sequence, cap)?;
                if naive.outcome != FwOutcome::Exact(width) {
                    return Err(Failure::Internal(format!(
                        "naive search disagrees: {:?} vs fw={width}",
                        naive.outcome
                    )));
                }
                Some(naive.nodes)
            } else {
                None
            };
            if json {
                let mut value = json!({
                    "sequence": sequence,
                    "fw": width,
                    "nodes_visited": report.nodes_visited,
                    "levels": report.levels,
                });
                if let Some(n) = naive_nodes {
                    value["naive_nodes"] = json!(n);
                }
                emit_json(out, &value)?;
            } else {
                writeln!(out, "fw={width}")?;
                if let Some(n) = naive_nodes {
                    writeln!(
                        out,
                        "nodes_visited={} naive_nodes={n}",
                        report.nodes_visited
                    )?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Fl {
            sequence,
            max_r,
            budget,
        } => {
            let report = fl(sequence, *max_r, *budget)?;
            if json {
                emit_json(out, &report)?;
            } else {
                match report.outcome {
                    FlOutcome::Resolved { fl } => writeln!(out, "fl={fl} fw={}", report.fw)?,
                    FlOutcome::BeyondMaxR { max_r } => {
                        writeln!(out, "fl=unresolved(max_r={max_r}) fw={}", report.fw)?
                    }
                    FlOutcome::WorkCap { r } => writeln!(
                        out,
                        "fl=unresolved(budget exhausted at r={r}) fw={}",
                        report.fw
                    )?,
                }
            }
            Ok(match report.outcome {
                FlOutcome::Resolved { .. } => EXIT_OK,
                _ => EXIT_UNRESOLVED,
            })
        }
        Command::Contains { haystack, pattern } => {
            let found = haystack.contains_pattern(pattern);
            if json {
                emit_json(
                    out,
                    &json!({ "haystack": haystack, "pattern": pattern, "contains": found }),
                )?;
            } else {
                writeln!(out, "{found}")?;
            }
            Ok(EXIT_OK)
        }
        Command::Alt { sequence } => {
            let alt = sequence.alternation_length();
            if json {
                emit_json(
                    out,
                    &json!({ "sequence": sequence, "alternation_length": alt }),
                )?;
            } else {
                writeln!(out, "alt={alt}")?;
            }
            Ok(EXIT_OK)
        }
        Command::Enumerate { letters, golden } => {
            let n = *letters as usize;
            let golden = golden.as_deref().map(load_golden).transpose()?;
            let set = enumerate_fw4_alt5(n, &EnumOptions { parallel })?;
            if json {
                let rows: Vec<_> = set
                    .members()
                    .iter()
                    .map(|s| json!({ "sequence": s, "fw": 4, "alternation_length": s.alternation_length() }))
                    .collect();
                emit_json(
                    out,
                    &json!({ "n": n, "count": set.len(), "sequences": rows }),
                )?;
            } else {
                for s in set.members() {
                    writeln!(out, "{s}")?;
                }
            }
            if let Some(golden) = golden {
                let expected = golden.block(n).cloned().unwrap_or_default();
                let got: std::collections::BTreeSet<Sequence> =
                    set.into_members().into_iter().collect();
                if got != expected {
                    for s in got.difference(&expected) {
                        eprintln!("not in golden: {s}");
                    }
                    for s in expected.difference(&got) {
                        eprintln!("missing from enumeration: {s}");
                    }
                    eprintln!("golden mismatch for n={n}");
                    return Ok(EXIT_VERIFY_FAILED);
                }
                eprintln!("golden match for n={n} ({} sequences)", expected.len());
            }
            Ok(EXIT_OK)
        }
        Command::Classify { sequence, verbose } => {
            let all = classify_all(sequence);
            if json {
                let mut value = json!({ "sequence": sequence, "match": all.first() });
                if *verbose {
                    value["all"] = json!(all);
                }
                emit_json(out, &value)?;
            } else if all.is_empty() {
                writeln!(out, "none")?;
            } else {
                let shown = if *verbose { &all[..] } else { &all[..1] };
                for m in shown {
                    let index = m.i.map(|i| format!(" i={i}")).unwrap_or_default();
                    writeln!(out, "{} n={}{index} reversed={}", m.family, m.n, m.reversed)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::VerifyTheorem {
            max_letters,
            golden,
        } => {
            let golden = golden.as_deref().map(load_golden).transpose()?;
            let mut all_ok = true;
            let mut reports = Vec::new();
            for n in 2..=*max_letters as usize {
                let report = verify_theorem(n, &EnumOptions { parallel })?;
                let golden_ok = golden.as_ref().map(|g| golden_agrees(g, &report));
                all_ok &= report.passed() && golden_ok != Some(false);
                if !json {
                    write_report(out, &report, golden_ok)?;
                }
                reports.push((report, golden_ok));
            }
            if json {
                let rows: Vec<_> = reports
                    .iter()
                    .map(|(r, g)| json!({ "report": r, "passed": r.passed(), "golden_match": g }))
                    .collect();
                emit_json(out, &json!({ "passed": all_ok, "blocks": rows }))?;
            } else {
                writeln!(out, "{}", if all_ok { "PASS" } else { "FAIL" })?;
            }
            Ok(if all_ok { EXIT_OK } else { EXIT_VERIFY_FAILED })
        }
        Command::Ex { pattern, n, budget } => {
            let res = ex_bruteforce(pattern, *n, *budget)?;
            if json {
                emit_json(out, &res)?;
            } else if res.cap_hit {
                writeln!(
                    out,
                    "Ex({pattern}, {n}) >= {} (budget exhausted) witness={} nodes={}",
                    res.value, res.witness, res.nodes
                )?;
            } else {
                writeln!(
                    out,
                    "Ex({pattern}, {n}) = {} witness={} nodes={}",
                    res.value, res.witness, res.nodes
                )?;
            }
            Ok(if res.cap_hit {
                EXIT_UNRESOLVED
            } else {
                EXIT_OK
            })
        }
    }
}

/// Whether the enumerated block in `report` equals the golden block for its n.
fn golden_agrees(golden: &GoldenBlocks, report: &ClassificationReport) -> bool {
    let got: std::collections::BTreeSet<&Sequence> = report
        .matched
        .values()
        .flatten()
        .chain(&report.unmatched_enumerated)
        .collect();
    golden.block(report.n).is_some_and(|expected| {
        got.len() == expected.len() && expected.iter().all(|s| got.contains(s))
    })
}

fn write_report(
    out: &mut dyn Write,
    report: &ClassificationReport,
    golden_ok: Option<bool>,
) -> Result<(), Failure> {
    let golden = match golden_ok {
        Some(true) => " golden=match",
        Some(false) => " golden=MISMATCH",
        None => "",
    };
    writeln!(
        out,
        "n={} enumerated={} family_instances={} unmatched_enumerated={} unmatched_family={}{golden} {}",
        report.n,
        report.enumerated,
        report.family_instances,
        report.unmatched_enumerated.len(),
        report.unmatched_family.len(),
        if report.passed() { "ok" } else { "FAIL" }
    )?;
    for (family, members) in &report.matched {
        writeln!(out, "  {family}: {}", members.len())?;
    }
    for s in &report.unmatched_enumerated {
        writeln!(out, "  enumerated but in no family: {s}")?;
    }
    for s in &report.unmatched_family {
        writeln!(out, "  family instance not enumerated: {s}")?;
    }
    Ok(())
}
