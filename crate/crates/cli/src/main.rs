use std::collections::BTreeSet;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use elpoly_core::enumerate::{LONG_MAX_N, ProgressFn};
use elpoly_core::hull::{facet_description, DEFAULT_MAX_FACET_DIM};
use elpoly_core::io::{hull_summary_to_json, vector_set_from_csv, vector_set_from_json, vector_set_to_csv, vector_set_to_json};
use elpoly_core::{
    build_blg_path, check_bhr, count_blg, cycle_count, encoding_to_vector, enumerate_cycle_vectors,
    enumerate_encodings, enumerate_vertices, extend_to_cycle, extended_cycle, lower_bound_vertices,
    predicted_vertex_count, realizable_path, CostPermutation, EdgeKind, EdgeLengthVector,
    EnumerateOptions, HullSummary, InstanceParams, PointSet, VectorSet, VertexPrediction,
};

mod verify;

/// Largest n enumerated without `--allow-long`.
const SHORT_MAX_N: usize = 12;

#[derive(Parser)]
#[command(name = "elpoly", version, about = "Edge-length polytopes of circulant Hamiltonian cycles")]
struct Cli {
    /// Worker threads (defaults to available parallelism).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the distinct edge-length vectors of all Hamiltonian cycles.
    Enumerate(EnumerateArgs),
    /// Vertices and facets of the edge-length polytope.
    Hull(HullArgs),
    /// Greedy (BLG) paths for n = 2^k.
    Blg(BlgArgs),
    /// Divisor feasibility of a path edge-length vector.
    Bhr(BhrArgs),
    /// Compare computed results against every embedded reference table.
    VerifyAll,
    /// Closed-form counts for n.
    Formulas {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct EnumerationBound {
    /// Permit n = 13 and 14, which take minutes to an hour.
    #[arg(long)]
    allow_long: bool,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    /// Output file; the summary still goes to standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[command(flatten)]
    bound: EnumerationBound,
}

#[derive(Args)]
struct HullArgs {
    /// Enumerate the set for this n.
    #[arg(long, conflicts_with = "input", required_unless_present = "input")]
    n: Option<usize>,
    /// Read a vector set (JSON or CSV) instead.
    #[arg(long = "in", value_name = "PATH")]
    input: Option<PathBuf>,
    /// Compare against the embedded vertex lists and counts.
    #[arg(long)]
    check_fixtures: bool,
    /// Largest affine dimension handed to facet enumeration.
    #[arg(long, default_value_t = DEFAULT_MAX_FACET_DIM)]
    max_facet_dim: usize,
    #[command(flatten)]
    bound: EnumerationBound,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("mode").required(true))]
struct BlgArgs {
    #[arg(long)]
    n: usize,
    /// Every encoding with its path vector and extended cycle vector.
    #[arg(long, group = "mode")]
    list: bool,
    /// Number of BLG paths.
    #[arg(long, group = "mode")]
    count: bool,
    /// Explicit path for a cost order given as a prefix, e.g. 8,10,7.
    #[arg(long, group = "mode", value_name = "PHI")]
    path: Option<String>,
    /// Explicit cycles for every encoding whose extension is defined.
    #[arg(long, group = "mode")]
    extend: bool,
}

#[derive(Args)]
struct BhrArgs {
    #[arg(long)]
    n: usize,
    /// Comma-separated counts t_1..t_d.
    #[arg(long)]
    t: String,
    /// Also search for a Hamiltonian path realizing t.
    #[arg(long)]
    realize: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global() {
            eprintln!("error: {e}");
            return ExitCode::FAILURE;
        }
    }
    let result = match cli.command {
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::Hull(args) => cmd_hull(args),
        Command::Blg(args) => cmd_blg(args),
        Command::Bhr(args) => cmd_bhr(args),
        Command::VerifyAll => verify::run(),
        Command::Formulas { n } => cmd_formulas(n),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn max_n(allow_long: bool) -> Result<usize> {
    match std::env::var("ELPOLY_MAX_N") {
        Ok(v) => v.trim().parse().with_context(|| format!("ELPOLY_MAX_N={v:?} is not an integer")),
        Err(_) => Ok(if allow_long { LONG_MAX_N } else { SHORT_MAX_N }),
    }
}

fn enumerate(n: usize, bound: &EnumerationBound) -> Result<VectorSet> {
    let params = InstanceParams::new(n)?;
    let max_n = max_n(bound.allow_long)?;
    if n > max_n && n <= LONG_MAX_N && !bound.allow_long {
        bail!("enumerating n = {n} takes a long time; pass --allow-long to run it");
    }
    let progress: Option<ProgressFn> = (n > SHORT_MAX_N).then(|| {
        Arc::new(|done: usize, total: usize| {
            eprint!("\r{done}/{total} parts");
            if done == total {
                eprintln!();
            }
        }) as ProgressFn
    });
    Ok(enumerate_cycle_vectors(&params, &EnumerateOptions { max_n, progress })?)
}

fn cmd_enumerate(args: EnumerateArgs) -> Result<bool> {
    let set = enumerate(args.n, &args.bound)?;
    if let Some(path) = &args.out {
        let text = match args.format {
            Format::Json => vector_set_to_json(&set).to_string() + "\n",
            Format::Csv => vector_set_to_csv(&set),
        };
        std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    }
    let mut out = std::io::stdout().lock();
    writeln!(out, "n = {}", set.n())?;
    if let Some(c) = set.cycles_visited() {
        writeln!(out, "cycles: {c}")?;
    }
    writeln!(out, "distinct vectors: {}", set.len())?;
    if args.out.is_none() {
        for t in set.vectors() {
            writeln!(out, "{t}")?;
        }
    }
    Ok(true)
}

fn read_set(path: &PathBuf) -> Result<VectorSet> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let set = if text.trim_start().starts_with('{') { vector_set_from_json(&text) } else { vector_set_from_csv(&text) };
    set.with_context(|| format!("parsing {}", path.display()))
}

pub(crate) fn analyze(set: &VectorSet, max_facet_dim: usize) -> Result<HullSummary> {
    let points = PointSet::from_vector_set(set);
    let mut summary = enumerate_vertices(&points)?;
    match facet_description(&points, max_facet_dim) {
        Ok((dual, _)) => {
            if dual.vertices != summary.vertices {
                bail!("vertex certification and double description disagree");
            }
            summary.facet_count = dual.facet_count;
        }
        Err(e @ elpoly_core::Error::ResourceLimit { .. }) => eprintln!("warning: {e}; facets not computed"),
        Err(e) => return Err(e.into()),
    }
    Ok(summary)
}

fn cmd_hull(args: HullArgs) -> Result<bool> {
    let set = match (&args.input, args.n) {
        (Some(path), _) => read_set(path)?,
        (None, Some(n)) => enumerate(n, &args.bound)?,
        (None, None) => bail!("pass --n or --in"),
    };
    let summary = analyze(&set, args.max_facet_dim)?;
    println!("{}", hull_summary_to_json(&summary));
    if !args.check_fixtures {
        return Ok(true);
    }
    let report = verify::check_hull(set.n(), &summary);
    for line in &report.lines {
        println!("{line}");
    }
    println!("{}", if report.pass { "PASS" } else { "FAIL" });
    Ok(report.pass)
}

fn parse_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|x| x.trim().parse::<usize>().with_context(|| format!("{x:?} is not a nonnegative integer")))
        .collect()
}

fn cmd_blg(args: BlgArgs) -> Result<bool> {
    let params = InstanceParams::new(args.n)?;
    params.power_of_two()?;
    let mut out = std::io::stdout().lock();
    if args.count {
        writeln!(out, "{}", count_blg(&params)?)?;
    } else if let Some(phi) = &args.path {
        let phi = CostPermutation::from_prefix(&params, &parse_list(phi)?)?;
        let path = build_blg_path(&phi, &params);
        let order: Vec<String> = path.order().iter().map(usize::to_string).collect();
        writeln!(out, "phi: {:?}", phi.as_slice())?;
        writeln!(out, "path: {}", order.join(","))?;
        writeln!(out, "vector: {}", path.path_vector()?)?;
    } else {
        for s in enumerate_encodings(&params)? {
            let vector = encoding_to_vector(&s, &params)?;
            if args.list {
                let extended = match extend_to_cycle(&s, &params) {
                    Ok(v) => v.to_string(),
                    Err(_) => "-".to_string(),
                };
                writeln!(out, "{s}\t{vector}\t{extended}")?;
            } else if let Ok(cycle) = extended_cycle(&s, &params) {
                let order: Vec<String> = cycle.order().iter().map(usize::to_string).collect();
                writeln!(out, "{s}\t{}\t{}", cycle.cycle_vector()?, order.join(","))?;
            }
        }
    }
    Ok(true)
}

fn cmd_bhr(args: BhrArgs) -> Result<bool> {
    let params = InstanceParams::new(args.n)?;
    let t = EdgeLengthVector::new(&params, EdgeKind::Path, parse_list(&args.t)?)?;
    let mut verdict = check_bhr(&t, &params)?;
    if args.realize {
        let bound = max_n(false)?;
        verdict.realizable = Some(realizable_path(&t, &params, bound.max(elpoly_core::bhr::DEFAULT_REALIZE_MAX_N))?);
    }
    println!("{}", serde_json::to_value(&verdict)?);
    Ok(true)
}

fn cmd_formulas(n: usize) -> Result<bool> {
    let params = InstanceParams::new(n)?;
    let mut out = std::io::stdout().lock();
    writeln!(out, "n = {n}, d = {}", params.d)?;
    writeln!(out, "hamiltonian cycles: {}", cycle_count(&params)?)?;
    match predicted_vertex_count(&params) {
        VertexPrediction::Exact(v) => writeln!(out, "vertices: {v}")?,
        VertexPrediction::LowerBound(b) => writeln!(out, "vertices: at least {b}")?,
        VertexPrediction::Unknown => writeln!(out, "vertices: no closed form")?,
    }
    if params.power_of_two().is_ok() {
        writeln!(out, "blg paths: {}", count_blg(&params)?)?;
        if let Ok(b) = lower_bound_vertices(&params) {
            writeln!(out, "vertex lower bound: {} (crude {})", b.bound, b.crude)?;
        }
    }
    Ok(true)
}

pub(crate) fn sorted_vertices(summary: &HullSummary) -> BTreeSet<Vec<usize>> {
    summary
        .vertices
        .iter()
        .map(|v| v.iter().map(|x| x.to_integer().try_into().unwrap_or(usize::MAX)).collect())
        .collect()
}
