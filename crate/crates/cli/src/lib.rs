//! The `vcsparse` command line: thin adapters from files in the text graph
//! format to `vcsparse_core`.

use std::collections::BTreeSet;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use vcsparse_core::{
    expand_weighted, generate_gk, mincut, parse_graph, serialize_graph, sparsify_qb_directed,
    sparsify_qb_undirected, sparsify_tau, sparsify_with_separator, verify_sparsifier, CutQuery,
    SparsifierResult, TerminalGraph, VerificationReport, VerifyMode, VerifyOptions, VertexId,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "vcsparse",
    version,
    about = "Exact vertex-cut sparsifiers for terminal graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a sparsifier of a graph and write it in canonical form
    Sparsify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: PathBuf,
        #[arg(long, value_enum, default_value_t = SparsifyMode::Auto)]
        mode: SparsifyMode,
        /// Component size bound; selects the separator pipeline
        #[arg(long)]
        tau: Option<usize>,
        /// Append one comment line per kept edge naming the matched pair
        #[arg(long)]
        provenance: bool,
    },
    /// Check that one graph preserves every terminal cut of another
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        sparsifier: PathBuf,
        #[arg(long, value_enum, default_value_t = CheckMode::Full)]
        mode: CheckMode,
        /// Confirm a disagreement with the exhaustive oracle
        #[arg(long)]
        cross_check: bool,
        #[arg(long)]
        json: bool,
        /// Worker threads (default: available processors)
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Minimum vertex cut between two vertex sets
    Mincut {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_delimiter = ',')]
        source_set: Vec<String>,
        #[arg(long, value_delimiter = ',')]
        sink_set: Vec<String>,
        #[arg(long, value_delimiter = ',')]
        delete: Vec<String>,
        #[arg(long)]
        witness: bool,
    },
    /// Write the lower-bound graph G_k, optionally without some v_i_j
    GenLower {
        #[arg(long)]
        k: usize,
        /// Pairs i:j whose middle vertex is left out
        #[arg(long, value_delimiter = ',')]
        remove: Vec<String>,
        /// Replace weighted vertices by unit-weight copies
        #[arg(long)]
        unweighted: bool,
        #[arg(long)]
        output: PathBuf,
    },
    /// Print basic facts about a graph
    Stats {
        #[arg(long)]
        graph: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SparsifyMode {
    Auto,
    Qb,
    Tau,
    Separator,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckMode {
    Bipartition,
    Full,
    Paranoid,
}

impl From<CheckMode> for VerifyMode {
    fn from(m: CheckMode) -> Self {
        match m {
            CheckMode::Bipartition => VerifyMode::Bipartition,
            CheckMode::Full => VerifyMode::Full,
            CheckMode::Paranoid => VerifyMode::Paranoid,
        }
    }
}

/// Parse `args` (including the program name), run the command and return the
/// exit status.
pub fn run<I, S>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e:#}");
            EXIT_ERROR
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> anyhow::Result<i32> {
    match command {
        Command::Sparsify {
            input,
            output,
            mode,
            tau,
            provenance,
        } => {
            let g = read_graph(&input)?;
            let result = sparsify(&g, mode, tau)?;
            let mut text = serialize_graph(&result.sparsifier);
            if provenance {
                text.push_str(&result.provenance_comments());
            }
            write_file(&output, &text)?;
            writeln!(out, "{}", result.stats.summary_line())?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            graph,
            sparsifier,
            mode,
            cross_check,
            json,
            jobs,
        } => {
            let g = read_graph(&graph)?;
            let h = read_graph(&sparsifier)?;
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs.unwrap_or(0))
                .build()?;
            let report =
                pool.install(|| verify_sparsifier(&g, &h, mode.into(), VerifyOptions { cross_check }))?;
            if json {
                writeln!(out, "{}", report_json(&report))?;
            } else {
                write_report(out, &report)?;
            }
            Ok(if report.passed() {
                EXIT_OK
            } else {
                EXIT_VERIFY_FAILED
            })
        }
        Command::Mincut {
            graph,
            source_set,
            sink_set,
            delete,
            witness,
        } => {
            let g = read_graph(&graph)?;
            let q = CutQuery::from_names(&source_set, &sink_set, &delete)?;
            let r = mincut(&g, &q)?;
            writeln!(out, "{}", r.value)?;
            if witness {
                writeln!(out, "witness: {}", join(r.witness.iter().flatten()))?;
            }
            Ok(EXIT_OK)
        }
        Command::GenLower {
            k,
            remove,
            unweighted,
            output,
        } => {
            let removed = remove
                .iter()
                .map(|p| parse_pair(p))
                .collect::<anyhow::Result<Vec<_>>>()?;
            let inst = generate_gk(k, &removed)?;
            let g = if unweighted {
                expand_weighted(&inst.graph)?.graph
            } else {
                inst.graph
            };
            write_file(&output, &serialize_graph(&g))?;
            writeln!(
                out,
                "k={} V={} E={}",
                g.terminal_count(),
                g.vertex_count(),
                g.edge_count()
            )?;
            Ok(EXIT_OK)
        }
        Command::Stats { graph } => {
            let g = read_graph(&graph)?;
            writeln!(out, "orientation: {}", g.orientation())?;
            writeln!(out, "k: {}", g.terminal_count())?;
            writeln!(out, "vertices: {}", g.vertex_count())?;
            writeln!(out, "edges: {}", g.edge_count())?;
            writeln!(out, "c: {}", g.max_nonterminal_component())?;
            writeln!(out, "quasi_bipartite: {}", g.is_quasi_bipartite())?;
            Ok(EXIT_OK)
        }
    }
}

fn sparsify(g: &TerminalGraph, mode: SparsifyMode, tau: Option<usize>) -> anyhow::Result<SparsifierResult> {
    let qb = |g: &TerminalGraph| {
        if g.is_directed() {
            sparsify_qb_directed(g)
        } else {
            sparsify_qb_undirected(g)
        }
    };
    let result = match (mode, tau) {
        (SparsifyMode::Separator, None) => bail!("--mode separator needs --tau"),
        (SparsifyMode::Auto | SparsifyMode::Separator, Some(tau)) => sparsify_with_separator(g, tau)?,
        (SparsifyMode::Qb | SparsifyMode::Tau, Some(_)) => {
            bail!("--tau only applies to the separator pipeline")
        }
        (SparsifyMode::Auto, None) if g.max_nonterminal_component() <= 1 => qb(g)?,
        (SparsifyMode::Auto | SparsifyMode::Tau, None) => sparsify_tau(g)?,
        (SparsifyMode::Qb, None) => qb(g)?,
    };
    Ok(result)
}

fn parse_pair(text: &str) -> anyhow::Result<(usize, usize)> {
    let (i, j) = text
        .split_once(':')
        .ok_or_else(|| anyhow!("expected i:j, got {text:?}"))?;
    Ok((
        i.trim()
            .parse()
            .with_context(|| format!("bad index in {text:?}"))?,
        j.trim()
            .parse()
            .with_context(|| format!("bad index in {text:?}"))?,
    ))
}

fn read_graph(path: &Path) -> anyhow::Result<TerminalGraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_graph(&text).with_context(|| format!("parsing {}", path.display()))
}

fn write_file(path: &Path, text: &str) -> anyhow::Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn join<'a>(ids: impl IntoIterator<Item = &'a VertexId>) -> String {
    ids.into_iter()
        .map(VertexId::as_str)
        .collect::<Vec<_>>()
        .join(",")
}

fn write_report(out: &mut dyn Write, report: &VerificationReport) -> std::io::Result<()> {
    let outcome = if report.passed() { "pass" } else { "fail" };
    writeln!(
        out,
        "mode={} queries={} outcome={outcome}",
        report.mode, report.queries_checked
    )?;
    if let Some(w) = report.witness() {
        writeln!(
            out,
            "witness A={} B={} D={} graph={} sparsifier={}",
            join(&w.sources),
            join(&w.sinks),
            join(&w.deleted),
            w.value_in_graph,
            w.value_in_sparsifier
        )?;
    }
    Ok(())
}

fn names(set: &BTreeSet<VertexId>) -> Vec<&str> {
    set.iter().map(VertexId::as_str).collect()
}

fn report_json(report: &VerificationReport) -> serde_json::Value {
    let witness = report.witness().map(|w| {
        json!({
            "sources": names(&w.sources),
            "sinks": names(&w.sinks),
            "deleted": names(&w.deleted),
            "value_in_graph": w.value_in_graph,
            "value_in_sparsifier": w.value_in_sparsifier,
        })
    });
    json!({
        "mode": report.mode.to_string(),
        "queries_checked": report.queries_checked,
        "outcome": if report.passed() { "pass" } else { "fail" },
        "witness": witness,
    })
}
