use std::fs::{self, File};
use std::io::{self, BufReader, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use genlouvain::bench::{bench_graph, format_tables, BENCH_PRECISION};
use genlouvain::io::{read_edge_list, read_partition, write_levels, write_partition, Labels, RunSummary};
use genlouvain::louvain::DEFAULT_PRECISION;
use genlouvain::oracle::{exact_optimum, DEFAULT_CAP};
use genlouvain::{detect, evaluate, pretreat, relational_total, CriterionId, Graph, RunConfig};

#[derive(Parser)]
#[command(name = "genlouvain", version, about = "Louvain community detection with pluggable criteria")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Detect communities and write the partition.
    Detect(DetectArgs),
    /// Evaluate a partition with both evaluators.
    Eval(EvalArgs),
    /// Exhaustive optimum of a small graph.
    Optimum(OptimumArgs),
    /// Repeated runs per criterion, reported as tables.
    Bench(BenchArgs),
}

#[derive(Args)]
struct CriterionArgs {
    /// ng, zc, oz, wc, bm, di, du, g or pd
    #[arg(long, short = 'c', default_value = "ng")]
    criterion: String,
    /// Owsiński-Zadrożny parameter, in (0, 1)
    #[arg(long)]
    alpha: Option<f64>,
}

impl CriterionArgs {
    fn parse(&self) -> Result<CriterionId> {
        Ok(CriterionId::parse(&self.criterion, self.alpha)?)
    }
}

#[derive(Args)]
struct RunArgs {
    #[arg(long)]
    precision: Option<f64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Visit nodes in input order instead of a seeded shuffle.
    #[arg(long)]
    no_shuffle: bool,
    #[arg(long)]
    max_levels: Option<usize>,
}

impl RunArgs {
    fn config(&self, criterion: CriterionId, default_precision: f64) -> Result<RunConfig> {
        let mut cfg = RunConfig::new(criterion)
            .precision(self.precision.unwrap_or(default_precision))
            .seed(self.seed)
            .shuffle(!self.no_shuffle);
        cfg.max_levels = self.max_levels;
        cfg.validate()?;
        Ok(cfg)
    }
}

#[derive(Args)]
struct DetectArgs {
    /// Edge list, or `-` for stdin.
    graph: PathBuf,
    #[command(flatten)]
    criterion: CriterionArgs,
    #[command(flatten)]
    run: RunArgs,
    /// Partition output; stdout when absent.
    #[arg(long, short = 'o')]
    output: Option<PathBuf>,
    /// Per-level partitions, one column per level.
    #[arg(long)]
    levels_out: Option<PathBuf>,
    /// Run summary as JSON.
    #[arg(long)]
    summary: Option<PathBuf>,
}

#[derive(Args)]
struct EvalArgs {
    graph: PathBuf,
    partition: PathBuf,
    #[command(flatten)]
    criterion: CriterionArgs,
}

#[derive(Args)]
struct OptimumArgs {
    graph: PathBuf,
    #[command(flatten)]
    criterion: CriterionArgs,
    /// Largest node count searched exhaustively.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
    #[arg(long, short = 'o')]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    /// One or more edge lists; each becomes a table row.
    #[arg(required = true)]
    graphs: Vec<PathBuf>,
    /// Comma-separated criteria, or `all` for ng,zc,di,du,bm,g,pd.
    #[arg(long, short = 'c', default_value = "all")]
    criterion: String,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long, default_value_t = 10)]
    runs: usize,
    #[command(flatten)]
    run: RunArgs,
}

fn load_graph(path: &Path) -> Result<(Graph, Labels)> {
    let mut text = String::new();
    if path == Path::new("-") {
        io::stdin().read_to_string(&mut text).context("reading stdin")?;
    } else {
        File::open(path)
            .with_context(|| format!("opening {}", path.display()))?
            .read_to_string(&mut text)
            .with_context(|| format!("reading {}", path.display()))?;
    }
    let (graph, labels) = read_edge_list(text.as_bytes()).with_context(|| format!("parsing {}", path.display()))?;
    if graph.num_nodes() == 0 {
        bail!("{}: graph has no edges", path.display());
    }
    Ok((graph, labels))
}

fn emit(target: Option<&Path>, bytes: &[u8]) -> Result<()> {
    match target {
        Some(path) => fs::write(path, bytes).with_context(|| format!("writing {}", path.display())),
        None => Ok(io::stdout().write_all(bytes)?),
    }
}

fn cmd_detect(args: &DetectArgs) -> Result<()> {
    let criterion = args.criterion.parse()?;
    let cfg = args.run.config(criterion, DEFAULT_PRECISION)?;
    let (graph, labels) = load_graph(&args.graph)?;
    let h = detect(&graph, &cfg)?;
    let summary = RunSummary::new(&h, &cfg);

    let mut partition = Vec::new();
    write_partition(&mut partition, &h.flat, &labels)?;
    emit(args.output.as_deref(), &partition)?;
    if let Some(path) = &args.levels_out {
        let mut levels = Vec::new();
        write_levels(&mut levels, &h, &labels)?;
        emit(Some(path), &levels)?;
    }
    if let Some(path) = &args.summary {
        emit(Some(path), format!("{}\n", summary.to_json()).as_bytes())?;
    }
    if args.output.is_some() {
        print!("{}", summary.to_text());
    } else {
        eprint!("{}", summary.to_text());
    }
    Ok(())
}

fn cmd_eval(args: &EvalArgs) -> Result<()> {
    let criterion = args.criterion.parse()?;
    let (graph, labels) = load_graph(&args.graph)?;
    let file = File::open(&args.partition).with_context(|| format!("opening {}", args.partition.display()))?;
    let p = read_partition(BufReader::new(file), &labels)?;
    let g0 = pretreat(criterion, &graph)?;
    let relational = relational_total(criterion, &g0, &p)?;
    let aggregate = evaluate(criterion, &g0, &p)?;
    println!("criterion    {criterion}");
    println!("communities  {}", p.num_communities());
    println!("relational   {relational}");
    println!("aggregate    {aggregate}");
    let tol = 1e-9 * relational.abs().max(1.0);
    if (relational - aggregate).abs() > tol {
        bail!("evaluators disagree by {}", (relational - aggregate).abs());
    }
    Ok(())
}

fn cmd_optimum(args: &OptimumArgs) -> Result<()> {
    let criterion = args.criterion.parse()?;
    let (graph, labels) = load_graph(&args.graph)?;
    let g0 = pretreat(criterion, &graph)?;
    let (p, quality) = exact_optimum(criterion, &g0, args.cap)?;
    let mut partition = Vec::new();
    write_partition(&mut partition, &p, &labels)?;
    emit(args.output.as_deref(), &partition)?;
    eprintln!("criterion {criterion}: optimum {quality} with {} communities", p.num_communities());
    Ok(())
}

fn cmd_bench(args: &BenchArgs) -> Result<()> {
    let criteria = if args.criterion.trim() == "all" {
        CriterionId::EXPERIMENTS.to_vec()
    } else {
        args.criterion
            .split(',')
            .map(|name| CriterionId::parse(name, args.alpha))
            .collect::<Result<Vec<_>, _>>()?
    };
    if args.runs == 0 {
        bail!("--runs must be at least 1");
    }
    let base = args.run.config(criteria[0], BENCH_PRECISION)?;
    let mut results = Vec::new();
    for path in &args.graphs {
        let (graph, _) = load_graph(path)?;
        let name = path
            .file_stem()
            .map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned());
        results.push((name, bench_graph(&graph, &criteria, args.runs, &base)));
    }
    print!("{}", format_tables(&results));
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Detect(args) => cmd_detect(args),
        Command::Eval(args) => cmd_eval(args),
        Command::Optimum(args) => cmd_optimum(args),
        Command::Bench(args) => cmd_bench(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
