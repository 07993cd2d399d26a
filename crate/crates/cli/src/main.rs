use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use minuscule::{CatalogEntry, EntryData, Family, RankCaps};
use rayon::prelude::*;

mod report;

/// Minuscule heaps, rowmotion orbits and homomesy audits in exact arithmetic.
#[derive(Debug, Parser)]
#[command(name = "minuscule", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List minuscule weights with lattice and heap sizes.
    Catalog {
        #[arg(long)]
        max_rank: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Check every rowmotion orbit of one entry, or of the whole catalog.
    Audit {
        #[command(flatten)]
        entry: EntryArgs,
        /// Audit every catalog entry instead of a single one.
        #[arg(long, conflicts_with_all = ["family", "rank", "weight"])]
        all: bool,
        /// With --all, the largest rank considered.
        #[arg(long)]
        max_rank: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Worker threads for --all; defaults to the number of CPUs.
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Write the heap, lattice or orbits of an entry as JSON.
    Export {
        /// Cartan family: A, B, C, D or E.
        family: Family,
        rank: usize,
        /// 1-based Bourbaki index of the fundamental weight.
        weight: usize,
        #[arg(value_enum)]
        what: ExportKind,
        /// Output file; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        caps: CapArgs,
    },
}

#[derive(Debug, Args)]
struct EntryArgs {
    /// Cartan family: A, B, C, D or E.
    family: Option<Family>,
    rank: Option<usize>,
    /// 1-based Bourbaki index of the fundamental weight.
    weight: Option<usize>,
}

#[derive(Debug, Args)]
struct CapArgs {
    /// Override a rank cap, e.g. `--cap A=12`. Defaults: A=9 B=6 C=6 D=7 E=7.
    #[arg(long = "cap", value_parser = parse_cap)]
    caps: Vec<(Family, usize)>,
}

impl CapArgs {
    fn caps(&self) -> RankCaps {
        let mut caps = RankCaps::default();
        for &(f, n) in &self.caps {
            caps.set(f, n);
        }
        caps
    }
}

fn parse_cap(s: &str) -> Result<(Family, usize), String> {
    let (f, n) = s.split_once('=').ok_or_else(|| format!("expected FAMILY=RANK, got `{s}`"))?;
    let n = n.trim().parse().map_err(|e| format!("bad rank in `{s}`: {e}"))?;
    Ok((f.parse()?, n))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ExportKind {
    Heap,
    Lattice,
    Orbits,
}

/// Failures mapped onto exit codes.
enum Failure {
    Verification,
    Usage(anyhow::Error),
    Runtime(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Runtime(e)
    }
}

fn usage(e: impl Into<anyhow::Error>) -> Failure {
    Failure::Usage(e.into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(e)) => {
            eprintln!("usage error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Catalog { max_rank, format, caps } => {
            let max_rank = max_rank.unwrap_or(usize::MAX);
            if max_rank == 0 {
                return Err(usage(anyhow!("--max-rank must be at least 1")));
            }
            let entries: Vec<EntryData> = caps
                .caps()
                .catalog(max_rank)
                .into_iter()
                .map(EntryData::build)
                .collect::<Result<_, _>>()
                .map_err(anyhow::Error::from)?;
            let text = match format {
                Format::Text => report::catalog_table(&entries),
                Format::Json => json(&report::catalog_json(&entries))?,
            };
            emit(&text, None)?;
            Ok(())
        }
        Command::Audit { entry, all, max_rank, format, workers, out, caps } => {
            let caps = caps.caps();
            let entries = if all {
                caps.catalog(max_rank.unwrap_or(usize::MAX))
            } else {
                if max_rank.is_some() {
                    return Err(usage(anyhow!("--max-rank only applies with --all")));
                }
                vec![resolve_entry(&entry, &caps)?]
            };
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(workers.unwrap_or(0))
                .build()
                .context("building worker pool")?;
            let audits: Vec<report::EntryAudit> = pool.install(|| {
                entries
                    .par_iter()
                    .map(|&e| report::EntryAudit::run(e))
                    .collect::<anyhow::Result<_>>()
            })?;
            let all_pass = audits.iter().all(report::EntryAudit::passes);
            let text = match format {
                Format::Text => report::audit_text(&audits),
                Format::Json => json(&report::audit_json(&audits))?,
            };
            emit(&text, out.as_deref())?;
            for failure in audits.iter().flat_map(report::EntryAudit::failures) {
                eprintln!("FAIL {failure}");
            }
            if all_pass {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
        Command::Export { family, rank, weight, what, out, caps } => {
            let args = EntryArgs { family: Some(family), rank: Some(rank), weight: Some(weight) };
            let entry = resolve_entry(&args, &caps.caps())?;
            let data = EntryData::build(entry).map_err(anyhow::Error::from)?;
            let text = match what {
                ExportKind::Heap => json(&data.heap.to_export())?,
                ExportKind::Lattice => json(&data.lattice.to_export())?,
                ExportKind::Orbits => json(&report::orbits_json(&data))?,
            };
            emit(&text, out.as_deref())?;
            Ok(())
        }
    }
}

fn resolve_entry(args: &EntryArgs, caps: &RankCaps) -> Result<CatalogEntry, Failure> {
    let (Some(family), Some(rank), Some(weight)) = (args.family, args.rank, args.weight) else {
        return Err(usage(anyhow!("expected FAMILY RANK WEIGHT (or --all)")));
    };
    caps.check(family, rank).map_err(usage)?;
    CatalogEntry::new(family, rank, weight).map_err(usage)
}

fn json<T: serde::Serialize>(value: &T) -> anyhow::Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn emit(text: &str, out: Option<&Path>) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes()).context("writing to stdout")?;
            stdout.flush().context("writing to stdout")
        }
    }
}
