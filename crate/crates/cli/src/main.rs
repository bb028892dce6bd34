//! `voltage-tower`: generate graphs, build derived graphs, and compute the
//! Iwasawa invariants of constant Z_p-towers.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 parse or validation error,
//! 3 non-unit voltage parameter, 4 no tower exists, 5 growth law not exact
//! at the top levels, 6 brute-force oracle over its edge cap.

mod document;
mod dot;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use voltage_tower_core::generators::{bouquet, directed_cycle, doubled, volcano, CraterSpec, VolcanoSpec};
use voltage_tower_core::iwasawa::{invariants, verify_growth_with};
use voltage_tower_core::linalg::brute_force_spanning_trees;
use voltage_tower_core::tower::derive;
use voltage_tower_core::{ConstantVoltage, DirectedMultigraph, Error, Prime, TowerReport};

use document::{to_json, GraphDocument, InvariantsDocument, TowerReportDocument};

#[derive(Parser)]
#[command(name = "voltage-tower", version, about = "Constant Z_p-towers of graph coverings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated graph as a graph document.
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Build the level-n derived graph of a constant voltage assignment.
    Derive {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        level: u32,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        param: i64,
        /// Accept a parameter divisible by p.
        #[arg(long)]
        allow_non_unit: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print the invariants document (mu, lambda, n0, characteristic polynomial).
    Invariants {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        p: u64,
        /// Also embed the tower report up to this level.
        #[arg(long)]
        n_max: Option<u32>,
    },
    /// Count spanning trees level by level and check the growth law.
    Verify {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n_max: u32,
        /// Emit the tower report as JSON instead of a table.
        #[arg(long)]
        json: bool,
    },
    /// Write the graph in Graphviz DOT format.
    ExportDot {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Count spanning trees by brute force (at most 16 non-loop edges).
    Oracle {
        #[arg(short, long)]
        input: PathBuf,
    },
}

#[derive(Subcommand)]
enum Family {
    /// Directed cycle 0 -> 1 -> ... -> k-1 -> 0.
    Cycle {
        #[arg(long)]
        length: usize,
        #[command(flatten)]
        out: Out,
    },
    /// One vertex with the given number of loops.
    Bouquet {
        #[arg(long)]
        loops: usize,
        #[command(flatten)]
        out: Out,
    },
    /// Abstract l-volcano, oriented away from the crater.
    Volcano {
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        out: Out,
    },
    /// Volcano with a reversed partner for every non-loop edge.
    DoubledVolcano {
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        out: Out,
    },
}

#[derive(Args)]
struct SpecArgs {
    #[arg(long)]
    l: usize,
    #[arg(long)]
    depth: usize,
    /// cycle:K, loop, two-loops or point
    #[arg(long)]
    crater: CraterSpec,
}

#[derive(Args)]
struct Out {
    #[arg(short, long)]
    output: Option<PathBuf>,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Self { code, message: message.into() }
    }

    fn invalid(message: impl Into<String>) -> Self {
        Self::new(2, message)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotAUnit { .. } => 3,
            Error::NoTowerExists(_) => 4,
            Error::TooLarge { .. } => 6,
            _ => 2,
        };
        Self::new(code, e.to_string())
    }
}

type CliResult<T = ()> = Result<T, Failure>;

fn read_text(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| Failure::new(1, format!("cannot read {}: {e}", path.display())))
}

fn read_graph(path: &Path) -> CliResult<(String, DirectedMultigraph)> {
    let text = read_text(path)?;
    let doc = GraphDocument::parse(&text).map_err(|e| Failure::invalid(format!("{}: {e}", path.display())))?;
    let graph = doc.to_graph().map_err(|e| Failure::invalid(format!("{}: {e}", path.display())))?;
    Ok((text, graph))
}

fn emit(output: Option<&Path>, text: &str) -> CliResult {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| Failure::new(1, format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|()| stdout.flush())
                .map_err(|e| Failure::new(1, format!("cannot write to standard output: {e}")))
        }
    }
}

fn volcano_from(spec: &SpecArgs) -> CliResult<DirectedMultigraph> {
    let spec = VolcanoSpec::new(spec.l, spec.depth, spec.crater)?;
    Ok(volcano(&spec)?)
}

fn cmd_gen(family: &Family) -> CliResult {
    let (graph, out) = match family {
        Family::Cycle { length, out } => (directed_cycle(*length)?, out),
        Family::Bouquet { loops, out } => (bouquet(*loops), out),
        Family::Volcano { spec, out } => (volcano_from(spec)?, out),
        Family::DoubledVolcano { spec, out } => (doubled(&volcano_from(spec)?), out),
    };
    emit(out.output.as_deref(), &to_json(&GraphDocument::from_graph(&graph)))
}

fn cmd_derive(input: &Path, p: u64, level: u32, param: i64, allow_non_unit: bool, output: Option<&Path>) -> CliResult {
    let (text, graph) = read_graph(input)?;
    let voltage = ConstantVoltage::new(p, param)?;
    if !voltage.is_unit() && !allow_non_unit {
        return Err(Failure::new(3, format!("{param} is not a unit modulo {p}; pass --allow-non-unit to derive anyway")));
    }
    if level == 0 {
        return emit(output, &text);
    }
    let derived = derive(&graph, &voltage, level)?;
    emit(output, &to_json(&GraphDocument::from_graph(derived.graph())))
}

fn connected(graph: &DirectedMultigraph) -> CliResult {
    if graph.is_connected()? {
        Ok(())
    } else {
        Err(Failure::invalid("graph is not connected"))
    }
}

fn cmd_invariants(input: &Path, p: u64, n_max: Option<u32>) -> CliResult {
    let (_, graph) = read_graph(input)?;
    connected(&graph)?;
    let inv = invariants(&graph, Prime::new(p)?)?;
    let report = n_max.map(|n| verify_growth_with(&graph, &inv, n)).transpose()?;
    emit(None, &to_json(&InvariantsDocument::new(&inv, report.as_ref())))
}

fn table(graph: &DirectedMultigraph, r: &TowerReport) -> String {
    let header = ["n", "components", "kappa", "ord_p", "predicted"];
    let rows: Vec<[String; 5]> = r
        .levels
        .iter()
        .map(|l| {
            [
                l.n.to_string(),
                l.component_count.to_string(),
                l.kappa_per_component.to_string(),
                l.ord_p.to_string(),
                l.predicted_ord_p.map_or_else(|| "-".to_string(), |x| x.to_string()),
            ]
        })
        .collect();
    let mut widths = header.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = format!("graph {}\n", graph.name().unwrap_or("graph"));
    let nu = r.fitted_nu.map_or_else(|| "-".to_string(), |x| x.to_string());
    out += &format!("p = {}, n0 = {}, mu = {}, lambda = {}, nu = {nu}\n", r.p, r.n0, r.mu, r.lambda);
    match r.exact_from_level {
        Some(n) => out += &format!("growth law exact from n = {n}\n"),
        None => out += "growth law not exact at the top levels\n",
    }
    let line = |cells: &[&str]| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
        padded.join("  ") + "\n"
    };
    out += &line(&header);
    for row in &rows {
        out += &line(&row.each_ref().map(String::as_str));
    }
    out
}

fn cmd_verify(input: &Path, p: u64, n_max: u32, json: bool) -> CliResult {
    let (_, graph) = read_graph(input)?;
    connected(&graph)?;
    let inv = invariants(&graph, Prime::new(p)?)?;
    let report = verify_growth_with(&graph, &inv, n_max)?;
    let text = if json { to_json(&TowerReportDocument::from_report(&report)) } else { table(&graph, &report) };
    emit(None, &text)?;
    if report.exact_from_level.is_some() {
        return Ok(());
    }
    let below = &report.levels[report.levels.len() - 2];
    Err(Failure::new(
        5,
        format!(
            "growth law mismatch at n = {}: observed ord_p(kappa) = {}, fitted mu p^m + lambda m + nu = {}",
            below.n,
            below.ord_p,
            below.predicted_ord_p.map_or_else(|| "-".to_string(), |x| x.to_string())
        ),
    ))
}

fn cmd_export_dot(input: &Path, output: Option<&Path>) -> CliResult {
    let (_, graph) = read_graph(input)?;
    emit(output, &dot::to_dot(&graph))
}

fn cmd_oracle(input: &Path) -> CliResult {
    let (_, graph) = read_graph(input)?;
    let count = brute_force_spanning_trees(&graph)?;
    emit(None, &format!("{count}\n"))
}

fn run(cli: Cli) -> CliResult {
    match &cli.command {
        Command::Gen { family } => cmd_gen(family),
        Command::Derive { input, p, level, param, allow_non_unit, output } => {
            cmd_derive(input, *p, *level, *param, *allow_non_unit, output.as_deref())
        }
        Command::Invariants { input, p, n_max } => cmd_invariants(input, *p, *n_max),
        Command::Verify { input, p, n_max, json } => cmd_verify(input, *p, *n_max, *json),
        Command::ExportDot { input, output } => cmd_export_dot(input, output.as_deref()),
        Command::Oracle { input } => cmd_oracle(input),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("voltage-tower: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
