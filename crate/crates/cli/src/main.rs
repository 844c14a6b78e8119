use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use seqmix::census::{measure_census, predict_census};
use seqmix::gen;
use seqmix::io as text;
use seqmix::lineage::{iterated_line_digraph, sequence_graph, sequence_mixed_direct};
use seqmix::metrics;
use seqmix::moore::{classify_moore, moore_layers, MooreVerdict};
use seqmix::reduce::{reduce, report_for, GraphFigures};
use seqmix::route::route;
use seqmix::{Digraph, MixedGraph};

mod reproduce;
mod table;

use table::Table;

#[derive(Parser)]
#[command(name = "seqmix", version, about = "Sequence mixed graphs and mixed Moore bounds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a generated graph in the text format.
    Generate {
        #[command(subcommand)]
        family: Family,
    },
    /// Build a line digraph, sequence graph or sequence mixed graph.
    Build(BuildArgs),
    /// Order, degrees, diameter, average distance and Moore comparison.
    Analyze(AnalyzeArgs),
    /// Predicted and measured V1/V2 census of a sequence mixed graph.
    Census(CensusArgs),
    /// Mixed Moore bound, or a Moore check of a graph file.
    Moore(MooreArgs),
    /// Degree reduction of a sequence mixed graph.
    Reduce(ReduceArgs),
    /// Route between two walks of a sequence mixed graph.
    Route(RouteArgs),
    /// Convert between the text format and DOT.
    Export(ExportArgs),
    /// Recompute the reference values and print a pass/fail table.
    Reproduce,
}

#[derive(Subcommand)]
enum Family {
    /// Kautz digraph K(d, n) on words of length n.
    Kautz {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
        /// Keep digons as arc pairs.
        #[arg(long)]
        pure_digraph: bool,
    },
    /// Complete symmetric digraph K*_n, or K_n.
    Ksym {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Mode::Digraph)]
        mode: Mode,
    },
    /// Complete bipartite graph K_{m,n}.
    Kbipartite {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Cycle on n vertices.
    Cycle {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        directed: bool,
    },
    /// The Bosák graph.
    Bosak,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Mixed,
    Digraph,
}

#[derive(Clone, Copy, ValueEnum)]
enum Construction {
    /// Iterated line digraph of the associated digraph.
    Line,
    /// Sequence graph of an undirected graph.
    Seq,
    /// Sequence mixed graph.
    Seqmix,
}

#[derive(Args)]
struct Input {
    /// Graph file; standard input when omitted or `-`.
    input: Option<PathBuf>,
    /// Read `E` lines as digons and keep arc pairs apart.
    #[arg(long)]
    digraph: bool,
}

#[derive(Args)]
struct BuildArgs {
    #[arg(value_enum)]
    construction: Construction,
    #[arg(long = "l")]
    length: usize,
    /// Write the walk labels of the vertices to this file.
    #[arg(long)]
    emit_labels: Option<PathBuf>,
    #[command(flatten)]
    input: Input,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    input: Input,
}

#[derive(Args)]
struct CensusArgs {
    #[arg(long = "l")]
    length: u32,
    input: Option<PathBuf>,
}

#[derive(Args)]
struct MooreArgs {
    #[arg(long, required_unless_present = "check")]
    r: Option<u32>,
    #[arg(long, required_unless_present = "check")]
    z: Option<u32>,
    #[arg(long, required_unless_present = "check")]
    k: Option<u32>,
    /// Print the layer table.
    #[arg(long)]
    table: bool,
    /// Classify a graph file as Moore, almost Moore or neither.
    #[arg(long, conflicts_with_all = ["r", "z", "k"])]
    check: Option<PathBuf>,
}

#[derive(Args)]
struct ReduceArgs {
    #[arg(long = "l")]
    length: usize,
    #[arg(long)]
    rprime: usize,
    /// Write the reduced graph here instead of standard output; the report
    /// then goes to standard output.
    #[arg(long, short)]
    output: Option<PathBuf>,
    #[command(flatten)]
    input: Input,
}

#[derive(Args)]
struct RouteArgs {
    #[arg(long = "l")]
    length: usize,
    /// Source walk, e.g. `0,3,1`.
    #[arg(long)]
    from: String,
    /// Target walk.
    #[arg(long)]
    to: String,
    input: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Dot,
}

#[derive(Args)]
struct ExportArgs {
    #[arg(long, value_enum, default_value_t = Format::Dot)]
    format: Format,
    /// Format of the input.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    from_format: Format,
    input: Option<PathBuf>,
}

/// A failure with its exit code.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Io(String),
    Check(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Check(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Io(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Io(m) | Failure::Check(m) => m,
        }
    }
}

impl From<seqmix::Error> for Failure {
    fn from(e: seqmix::Error) -> Self {
        match e {
            seqmix::Error::Parse { .. } | seqmix::Error::Fixture(_) => Failure::Io(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn read_input(path: Option<&Path>) -> Result<(String, String), Failure> {
    match path {
        Some(p) if p != Path::new("-") => {
            let body = fs::read_to_string(p).map_err(|e| Failure::Io(format!("{}: {e}", p.display())))?;
            Ok((body, p.display().to_string()))
        }
        _ => {
            let mut body = String::new();
            io::stdin().read_to_string(&mut body)?;
            Ok((body, "<stdin>".into()))
        }
    }
}

fn load_mixed(path: Option<&Path>) -> Result<MixedGraph, Failure> {
    let (body, source) = read_input(path)?;
    Ok(text::parse_mixed(&body, &source)?)
}

fn load_digraph(path: Option<&Path>) -> Result<Digraph, Failure> {
    let (body, source) = read_input(path)?;
    Ok(text::parse_digraph(&body, &source)?)
}

fn write_file(path: &Path, body: &str) -> Outcome {
    fs::write(path, body).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn emit(body: &str) -> Outcome {
    let mut out = io::stdout().lock();
    match out.write_all(body.as_bytes()).and_then(|_| out.flush()) {
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
        other => Ok(other?),
    }
}

fn generate(family: Family) -> Outcome {
    let body = match family {
        Family::Kautz { d, n, pure_digraph } => {
            if pure_digraph {
                text::write_digraph(&gen::kautz_digraph(d, n)?)
            } else {
                text::write_mixed(&gen::kautz(d, n)?)
            }
        }
        Family::Ksym { n, mode } => match mode {
            Mode::Digraph => text::write_digraph(&gen::complete_symmetric_digraph(n)?),
            Mode::Mixed => text::write_mixed(&gen::complete_graph(n)?),
        },
        Family::Kbipartite { m, n } => text::write_mixed(&gen::complete_bipartite(m, n)?),
        Family::Cycle { n, directed } => text::write_mixed(&gen::cycle(n, directed)?),
        Family::Bosak => text::write_mixed(&gen::bosak()?),
    };
    emit(&body)
}

fn build(args: BuildArgs) -> Outcome {
    let path = args.input.input.as_deref();
    let (body, labels) = match args.construction {
        Construction::Line => {
            let d = load_digraph(path)?;
            if args.length == 0 {
                return Err(Failure::Usage("walk length must be at least 1".into()));
            }
            let line = iterated_line_digraph(&d, args.length);
            (text::write_digraph(&line), line.labels().map(text::write_labels))
        }
        Construction::Seq | Construction::Seqmix => {
            let s = if args.input.digraph {
                if matches!(args.construction, Construction::Seq) {
                    return Err(Failure::Usage("`build seq` needs an undirected graph".into()));
                }
                sequence_mixed_direct(&load_digraph(path)?, args.length)?
            } else {
                let g = load_mixed(path)?;
                match args.construction {
                    Construction::Seq => sequence_graph(&g, args.length)?,
                    _ => sequence_mixed_direct(&g, args.length)?,
                }
            };
            (text::write_mixed(&s), s.labels().map(text::write_labels))
        }
    };
    if let (Some(file), Some(labels)) = (&args.emit_labels, labels) {
        write_file(file, &labels)?;
    }
    emit(&body)
}

fn figures_table(title: &str, f: &GraphFigures, avg: Option<&str>) -> Table {
    let mut t = Table::new(["field", title]);
    t.row(["order".to_string(), f.order.to_string()]);
    t.row(["max undirected degree".to_string(), f.delta.to_string()]);
    t.row(["max directed degree".to_string(), f.delta_star.to_string()]);
    t.row(["diameter".to_string(), opt(f.diameter)]);
    if let Some(avg) = avg {
        t.row(["average distance".to_string(), avg.to_string()]);
    }
    t.row(["moore reference".to_string(), opt(f.moore_ref.as_ref())]);
    t.row([
        "ratio".to_string(),
        f.ratio.map_or("-".into(), |r| format!("{r:.6}")),
    ]);
    t
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |v| v.to_string())
}

fn rational(avg: &metrics::Average) -> String {
    format!(
        "{}/{} ({:.6})",
        avg.numer(),
        avg.denom(),
        *avg.numer() as f64 / *avg.denom() as f64
    )
}

fn analyze(args: AnalyzeArgs) -> Outcome {
    let path = args.input.input.as_deref();
    let g = if args.input.digraph {
        MixedGraph::from_digraph(&load_digraph(path)?)
    } else {
        load_mixed(path)?
    };
    let summary = metrics::summary(&g);
    let figures = seqmix::reduce::figures(&g)?;
    let avg = summary.avg.as_ref().map(rational);
    let mut t = figures_table("value", &figures, Some(avg.as_deref().unwrap_or("-")));
    t.row([
        "edges / arcs".to_string(),
        format!("{} / {}", g.edges().len(), g.arcs().len()),
    ]);
    let regularity = g.total_regularity();
    t.row([
        "total regularity (r,z)".to_string(),
        regularity.map_or("-".into(), |(r, z)| format!("({r},{z})")),
    ]);
    if regularity.is_some() && summary.strongly_connected {
        let class = classify_moore(&g)?;
        t.row(["moore bound M(r,z,k)".to_string(), class.bound.to_string()]);
        t.row(["classification".to_string(), verdict(class.verdict).to_string()]);
    }
    t.row([
        "distance distribution".to_string(),
        format!("{:?}", summary.pair_layers),
    ]);
    emit(&t.render())
}

fn verdict(v: MooreVerdict) -> &'static str {
    match v {
        MooreVerdict::Moore => "MOORE",
        MooreVerdict::AlmostMoore => "ALMOST MOORE",
        MooreVerdict::Other => "OTHER",
    }
}

fn census(args: CensusArgs) -> Outcome {
    let g = load_mixed(args.input.as_deref())?;
    let (r, z) = g
        .total_regularity()
        .ok_or_else(|| Failure::Usage("census needs a totally regular graph".into()))?;
    let predicted = predict_census(g.order() as u64, r as u64, z as u64, args.length)?;
    let s = sequence_mixed_direct(&g, args.length as usize)?;
    let measured = measure_census(&s)?;
    let mut t = Table::new(["quantity", "predicted", "measured", "status"]);
    let rows = [
        ("|V1|", predicted.v1.to_string(), measured.v1.to_string()),
        ("|V2|", predicted.v2.to_string(), measured.v2.to_string()),
        ("order", predicted.n_total.to_string(), measured.total.to_string()),
    ];
    let mut ok = true;
    for (name, p, m) in rows {
        let pass = p == m;
        ok &= pass;
        t.row([name.to_string(), p, m, status(pass).to_string()]);
    }
    let bounded = [
        ("max undirected degree", predicted.delta, measured.max_undirected as u64),
        (
            "max directed degree",
            predicted.delta_star,
            measured.max_out.max(measured.max_in) as u64,
        ),
    ];
    for (name, p, m) in bounded {
        let pass = m <= p;
        ok &= pass;
        t.row([format!("{name} (bound)"), p.to_string(), m.to_string(), status(pass).to_string()]);
    }
    t.row([
        "palindromes".to_string(),
        "-".to_string(),
        measured.palindromes.to_string(),
        String::new(),
    ]);
    emit(&t.render())?;
    if ok {
        Ok(())
    } else {
        Err(Failure::Check("census mismatch".into()))
    }
}

fn status(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn moore(args: MooreArgs) -> Outcome {
    if let Some(path) = args.check {
        let g = load_mixed(Some(&path))?;
        let class = classify_moore(&g).map_err(|e| match e {
            seqmix::Error::NotTotallyRegular | seqmix::Error::NotStronglyConnected => {
                Failure::Check(format!("not a Moore graph: {e}"))
            }
            other => other.into(),
        })?;
        let mut t = Table::new(["field", "value"]);
        t.row(["(r,z)".to_string(), format!("({},{})", class.r, class.z)]);
        t.row(["diameter".to_string(), class.diameter.to_string()]);
        t.row(["order".to_string(), class.order.to_string()]);
        t.row(["moore bound".to_string(), class.bound.to_string()]);
        t.row(["deficit".to_string(), class.deficit.to_string()]);
        t.row(["classification".to_string(), verdict(class.verdict).to_string()]);
        emit(&t.render())?;
        return match class.verdict {
            MooreVerdict::Moore => Ok(()),
            other => Err(Failure::Check(format!("not a Moore graph: {}", verdict(other)))),
        };
    }
    let (r, z, k) = (args.r.unwrap_or(0), args.z.unwrap_or(0), args.k.unwrap_or(0));
    let table = moore_layers(r, z, k)?;
    if !args.table {
        return emit(&format!("{}\n", table.total));
    }
    let mut t = Table::new(["i", "via edge", "via arc", "layer", "cumulative"]);
    let mut cumulative = num_bigint::BigUint::default();
    for (i, layer) in table.layers.iter().enumerate() {
        cumulative += &layer.count;
        t.row([
            i.to_string(),
            layer.via_edge.to_string(),
            layer.via_arc.to_string(),
            layer.count.to_string(),
            cumulative.to_string(),
        ]);
    }
    let closed = table
        .closed_form
        .map_or("undefined".to_string(), |c| format!("{c:.6}"));
    emit(&format!(
        "{}M({r},{z},{k}) = {}\nclosed form: {closed}\n",
        t.render(),
        table.total
    ))
}

fn run_reduce(args: ReduceArgs) -> Outcome {
    let path = args.input.input.as_deref();
    let reduction = if args.input.digraph {
        reduce(&load_digraph(path)?, args.length, args.rprime)?
    } else {
        reduce(&load_mixed(path)?, args.length, args.rprime)?
    };
    let report = report_for(&reduction, args.length, args.rprime)?;
    let mut t = Table::new(["field", "S^l", "S^l_m"]);
    let (a, b) = (&report.sequence, &report.reduced);
    let rows = [
        ("order", a.order.to_string(), b.order.to_string()),
        ("max undirected degree", a.delta.to_string(), b.delta.to_string()),
        ("max directed degree", a.delta_star.to_string(), b.delta_star.to_string()),
        ("diameter", opt(a.diameter), opt(b.diameter)),
        ("moore reference", opt(a.moore_ref.as_ref()), opt(b.moore_ref.as_ref())),
        (
            "ratio",
            a.ratio.map_or("-".into(), |r| format!("{r:.6}")),
            b.ratio.map_or("-".into(), |r| format!("{r:.6}")),
        ),
    ];
    for (name, x, y) in rows {
        t.row([name.to_string(), x, y]);
    }
    let rec = report.reconciliation;
    let summary = format!(
        "{}factor arcs {} (converted {}, already edges {}, collapsed pairs {}); edges +{}, arcs -{}\n",
        t.render(),
        rec.selected,
        rec.converted,
        rec.already_edges,
        rec.collapsed_pairs,
        rec.edges_added,
        rec.arcs_removed
    );
    let graph = text::write_mixed(&reduction.reduced);
    match args.output {
        Some(file) => {
            write_file(&file, &graph)?;
            emit(&summary)
        }
        None => {
            eprint!("{summary}");
            emit(&graph)
        }
    }
}

fn run_route(args: RouteArgs) -> Outcome {
    let g = load_mixed(args.input.as_deref())?;
    let parse = |s: &str| {
        text::parse_tuple(s).ok_or_else(|| Failure::Usage(format!("malformed walk `{s}`")))
    };
    let u = seqmix::lineage::canonical_walk(&parse(&args.from)?, &g)?;
    let v = seqmix::lineage::canonical_walk(&parse(&args.to)?, &g)?;
    let path = route(&g, args.length, &u, &v)?;
    let mut out = String::new();
    for (i, step) in path.steps.iter().enumerate() {
        out.push_str(&format!("{i}\t{step}\n"));
    }
    out.push_str(&format!("length {} (p = {}, l = {})\n", path.length, path.p, args.length));
    if path.stays > 0 {
        out.push_str(&format!("stays {}\n", path.stays));
    }
    emit(&out)
}

fn export(args: ExportArgs) -> Outcome {
    let (body, source) = read_input(args.input.as_deref())?;
    let g = match args.from_format {
        Format::Text => text::parse_mixed(&body, &source)?,
        Format::Dot => text::parse_dot(&body, &source)?,
    };
    match args.format {
        Format::Text => emit(&text::write_mixed(&g)),
        Format::Dot => emit(&text::to_dot(&g)),
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Generate { family } => generate(family),
        Command::Build(args) => build(args),
        Command::Analyze(args) => analyze(args),
        Command::Census(args) => census(args),
        Command::Moore(args) => moore(args),
        Command::Reduce(args) => run_reduce(args),
        Command::Route(args) => run_route(args),
        Command::Export(args) => export(args),
        Command::Reproduce => {
            let (body, ok) = reproduce::run()?;
            emit(&body)?;
            if ok {
                Ok(())
            } else {
                Err(Failure::Check("some reference values were not reproduced".into()))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("seqmix: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}
