//! Thin command-line front-end: load a graph and seeds, run the improvement
//! loop over a δ list, and emit one JSON record per δ (or `--stats` for a
//! graph summary).

use std::fs::File;
use std::io::{BufReader, Write};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::{Parser, ValueEnum};

use flowcut::run::records_to_jsonl;
use flowcut::{graph_stats, io as graph_io, run_sweep, Graph, NodeSet, SweepOptions};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Pick by extension: `.mtx` / `.mm` mean matrix-market, anything else
    /// edge list.
    Auto,
    Edgelist,
    MatrixMarket,
}

#[derive(Parser, Debug)]
#[command(
    name = "flowcut",
    version,
    about = "Find a low-conductance set near a seed set by localized max flows",
    after_help = "Output is one JSON record per --delta value, in input order.\n\
                  Examples:\n  \
                  flowcut --graph data/collab379.mtx --seed-nodes 92 --grow-seeds \\\n          \
                  --delta 1 --delta 0.6 --delta 0.3 --delta 0\n  \
                  flowcut --graph data/barbell.txt --index-base 1 --stats"
)]
struct Cli {
    /// Graph file (edge list `u v [w]` or Matrix Market symmetric coordinate)
    #[arg(long)]
    graph: PathBuf,

    /// Input format
    #[arg(long, value_enum, default_value_t = Format::Auto)]
    format: Format,

    /// Node id base of the input files and of emitted ids (0 or 1).
    /// Defaults to 0 for edge lists and 1 for Matrix Market files.
    #[arg(long)]
    index_base: Option<u32>,

    /// Seed file: one node id per line, `#` comments
    #[arg(long)]
    seeds: Option<PathBuf>,

    /// Inline seed ids, comma separated (alternative to --seeds)
    #[arg(long, value_delimiter = ',')]
    seed_nodes: Vec<u64>,

    /// Grow the seed set by its neighborhood before running
    #[arg(long)]
    grow_seeds: bool,

    /// Locality parameter; repeat the flag to sweep several values
    #[arg(long = "delta")]
    delta: Vec<f64>,

    /// Relative tolerance for capacity comparisons
    #[arg(long, default_value_t = 1e-9)]
    tolerance: f64,

    /// Cap on improvement iterations per run
    #[arg(long)]
    max_iters: Option<u32>,

    /// Write records here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,

    /// Attach per-iteration diagnostics to each record
    #[arg(long)]
    trace: bool,

    /// Print a graph summary instead of running
    #[arg(long)]
    stats: bool,
}

fn detect_format(path: &Path, requested: Format) -> Format {
    if requested != Format::Auto {
        return requested;
    }
    match path.extension().and_then(|e| e.to_str()) {
        Some("mtx") | Some("mm") => Format::MatrixMarket,
        _ => Format::Edgelist,
    }
}

fn load_graph(cli: &Cli) -> anyhow::Result<(Graph, u32)> {
    let format = detect_format(&cli.graph, cli.format);
    let index_base = match cli.index_base {
        Some(base) if base <= 1 => base,
        Some(base) => bail!("--index-base must be 0 or 1, got {base}"),
        None => match format {
            Format::MatrixMarket => 1,
            _ => 0,
        },
    };
    let file = File::open(&cli.graph)
        .with_context(|| format!("cannot open graph file {}", cli.graph.display()))?;
    let reader = BufReader::new(file);
    let (graph, stats) = match format {
        Format::MatrixMarket => graph_io::read_matrix_market(reader),
        _ => graph_io::read_edge_list(reader, index_base),
    }
    .with_context(|| format!("cannot parse {}", cli.graph.display()))?;
    if stats.self_loops_dropped > 0 {
        eprintln!(
            "warning: dropped {} self-loop(s) from {}",
            stats.self_loops_dropped,
            cli.graph.display()
        );
    }
    Ok((graph, index_base))
}

fn load_seeds(cli: &Cli, graph: &Graph, index_base: u32) -> anyhow::Result<NodeSet> {
    let mut ids: Vec<u32> = Vec::new();
    if let Some(path) = &cli.seeds {
        let file = File::open(path)
            .with_context(|| format!("cannot open seed file {}", path.display()))?;
        ids.extend(
            graph_io::read_seed_ids(BufReader::new(file), index_base)
                .with_context(|| format!("cannot parse {}", path.display()))?,
        );
    }
    for &raw in &cli.seed_nodes {
        if raw < index_base as u64 {
            bail!("seed id {raw} below index base {index_base}");
        }
        ids.push(u32::try_from(raw - index_base as u64).context("seed id too large")?);
    }
    if ids.is_empty() {
        bail!("no seeds given: pass --seeds <file> or --seed-nodes <ids>");
    }
    let seed = NodeSet::from_ids(graph, ids).context("invalid seed set")?;
    if cli.grow_seeds {
        let hood = graph.neighborhood(&seed);
        let grown = seed.members().iter().chain(hood.members()).copied();
        return Ok(NodeSet::from_ids(graph, grown).expect("grown ids are valid"));
    }
    Ok(seed)
}

fn emit(cli: &Cli, text: &str) -> anyhow::Result<()> {
    match &cli.out {
        Some(path) => {
            let mut file =
                File::create(path).with_context(|| format!("cannot create {}", path.display()))?;
            file.write_all(text.as_bytes())?;
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn main() -> anyhow::Result<()> {
    let cli = Cli::parse();
    let (graph, index_base) = load_graph(&cli)?;

    if cli.stats {
        let stats = graph_stats(&graph);
        let mut text = serde_json::to_string(&stats)?;
        text.push('\n');
        return emit(&cli, &text);
    }

    let seed = load_seeds(&cli, &graph, index_base)?;
    let opts = SweepOptions {
        deltas: if cli.delta.is_empty() {
            vec![0.0]
        } else {
            cli.delta.clone()
        },
        tolerance: cli.tolerance,
        max_iterations: cli.max_iters,
        emit_trace: cli.trace,
    };
    let mut records = run_sweep(&graph, &seed, &opts).context("run failed")?;
    for record in &mut records {
        for id in &mut record.set {
            *id += index_base;
        }
    }
    emit(&cli, &records_to_jsonl(&records))
}
