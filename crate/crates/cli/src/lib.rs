//! The `giwb` command line. Every subcommand prints one JSON record per line
//! on stdout; diagnostics go to stderr.

use std::io::{BufRead, Write};
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Args, Parser, Subcommand};
use giwb_core::bounds::{generate_family, FamilySpec};
use giwb_core::gamma::{gamma_closed, gamma_oracle, gamma_property_suite};
use giwb_core::harness::{
    catalog_scan, scan, write_violations_tsv, Category, Check, ScanConfig, Source,
};
use giwb_core::invariants::{decomposition_failures, Analysis};
use giwb_core::{parse_edge_list, parse_graph6, to_graph6, Error, Graph, Status, Verdict, VERSION};
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_THEOREM_VIOLATED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "giwb", version, about = "Graph invariant workbench")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the invariant report of each input graph.
    Invariants(InputArg),
    /// Print the alpha-core / tau-core decomposition of each input graph.
    Decompose(InputArg),
    /// Evaluate Gamma(a, t), or the property suite over a grid.
    Gamma(GammaArgs),
    /// Run checks on each input graph.
    Check(CheckArgs),
    /// Scan every graph of a given order, or a graph6 file.
    Search(SearchArgs),
    /// Print a member of a named family as graph6.
    Generate(GenerateArgs),
    /// Fewest edges among graphs with given alpha, tau and component count.
    CatalogMinEdges(CatalogArgs),
}

#[derive(Debug, Args)]
struct InputArg {
    /// graph6 token, file (graph6 lines or an `n <count>` edge list) or `-`
    /// for stdin
    input: String,
}

#[derive(Debug, Args)]
struct GammaArgs {
    #[arg(long, required_unless_present = "properties")]
    a: Option<u64>,
    #[arg(long, required_unless_present = "properties")]
    t: Option<u64>,
    /// Also compute the value by dynamic programming.
    #[arg(long)]
    oracle: bool,
    /// Check the gamma identities on 1..=AMAX × 0..=TMAX instead.
    #[arg(long, num_args = 2, value_names = ["AMAX", "TMAX"], conflicts_with_all = ["a", "t", "oracle"])]
    properties: Option<Vec<u64>>,
}

#[derive(Debug, Args)]
#[command(group(
    ArgGroup::new("selection").required(true).multiple(true).args([
        "all", "checks", "theorem1", "theorem1_equality", "cor1", "berge", "edge_bound",
        "galvin_goddard", "decomposition", "matching_remark", "hyper_cor", "hyper_conformal",
        "conj1", "conj1_bound", "conj3", "omega_v",
    ])
))]
struct CheckArgs {
    #[arg(long)]
    all: bool,
    /// Comma-separated check names.
    #[arg(long, value_name = "LIST")]
    checks: Option<String>,
    #[arg(long)]
    theorem1: bool,
    #[arg(long)]
    theorem1_equality: bool,
    #[arg(long)]
    cor1: bool,
    #[arg(long)]
    berge: bool,
    #[arg(long)]
    edge_bound: bool,
    #[arg(long)]
    galvin_goddard: bool,
    #[arg(long)]
    decomposition: bool,
    #[arg(long)]
    matching_remark: bool,
    #[arg(long)]
    hyper_cor: bool,
    #[arg(long)]
    hyper_conformal: bool,
    #[arg(long)]
    conj1: bool,
    #[arg(long)]
    conj1_bound: bool,
    #[arg(long)]
    conj3: bool,
    #[arg(long)]
    omega_v: bool,
    #[command(flatten)]
    input: InputArg,
}

impl CheckArgs {
    fn selected(&self) -> giwb_core::Result<Vec<Check>> {
        if self.all {
            return Ok(Check::ALL.to_vec());
        }
        let flags = [
            self.theorem1,
            self.theorem1_equality,
            self.cor1,
            self.berge,
            self.edge_bound,
            self.galvin_goddard,
            self.decomposition,
            self.matching_remark,
            self.hyper_cor,
            self.hyper_conformal,
            self.conj1,
            self.conj1_bound,
            self.conj3,
            self.omega_v,
        ];
        let mut checks = match &self.checks {
            Some(list) => Check::parse_list(list)?,
            None => Vec::new(),
        };
        for (c, _) in Check::ALL.iter().zip(flags).filter(|(_, on)| *on) {
            if !checks.contains(c) {
                checks.push(*c);
            }
        }
        checks.sort();
        Ok(checks)
    }
}

#[derive(Debug, Args)]
struct SearchArgs {
    /// Enumerate all graphs on N vertices.
    #[arg(long, required_unless_present = "input", conflicts_with = "input")]
    n: Option<usize>,
    #[arg(long, requires = "n")]
    connected: bool,
    /// One graph per isomorphism class.
    #[arg(long, requires = "n")]
    dedup: bool,
    /// Scan the graph6 lines of FILE instead of enumerating.
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,
    /// Comma-separated check names, or `all`.
    #[arg(long, value_name = "LIST", default_value = "all")]
    checks: String,
    #[arg(long, env = "GIWB_SHARDS", default_value_t = 1)]
    shards: usize,
    /// Also write the violations as TSV to FILE.
    #[arg(long, value_name = "FILE")]
    tsv: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct GenerateArgs {
    /// clique-of-stars | star | complete | odd-cycle
    #[arg(long)]
    family: String,
    /// clique-of-stars: TAU LEAVES; star: LEAVES; complete, odd-cycle: N
    #[arg(long, num_args = 1..=2, required = true)]
    params: Vec<usize>,
}

#[derive(Debug, Args)]
struct CatalogArgs {
    #[arg(long)]
    alpha: usize,
    #[arg(long)]
    tau: usize,
    #[arg(long)]
    c: usize,
    /// Order to enumerate; defaults to alpha + tau.
    #[arg(long, conflicts_with = "input")]
    n: Option<usize>,
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,
    #[arg(long, env = "GIWB_SHARDS", default_value_t = 1)]
    shards: usize,
}

struct Io<'a> {
    stdin: &'a mut dyn BufRead,
    out: &'a mut dyn Write,
}

impl Io<'_> {
    fn emit(&mut self, mut record: Value) -> giwb_core::Result<()> {
        if let Value::Object(map) = &mut record {
            map.insert("version".into(), VERSION.into());
        }
        writeln!(self.out, "{record}").map_err(stdout_error)
    }
}

fn stdout_error(source: std::io::Error) -> Error {
    Error::Io {
        path: "<stdout>".into(),
        source,
    }
}

/// Runs one invocation against the process's standard streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdin = std::io::stdin();
    run_with(
        argv,
        &mut stdin.lock(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    )
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run_with<I, T>(
    argv: I,
    stdin: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let mut io = Io { stdin, out };
    match dispatch(cli.command, &mut io) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "giwb: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(command: Command, io: &mut Io) -> giwb_core::Result<i32> {
    match command {
        Command::Invariants(arg) => {
            for (index, g) in load(&arg.input, io)? {
                let report = Analysis::new(&g).report();
                io.emit(json!({ "index": index, "graph": g, "invariants": report }))?;
            }
            Ok(EXIT_OK)
        }
        Command::Decompose(arg) => {
            for (index, g) in load(&arg.input, io)? {
                let a = Analysis::new(&g);
                let cores = a.cores();
                let failures = decomposition_failures(&g, &cores);
                io.emit(
                    json!({ "index": index, "graph": g, "cores": cores, "failures": failures }),
                )?;
            }
            Ok(EXIT_OK)
        }
        Command::Gamma(args) => gamma_command(args, io),
        Command::Check(args) => check_command(args, io),
        Command::Search(args) => search_command(args, io),
        Command::Generate(args) => {
            let spec = family(&args.family, &args.params)?;
            let g = generate_family(&spec)?;
            writeln!(io.out, "{}", to_graph6(&g)).map_err(stdout_error)?;
            Ok(EXIT_OK)
        }
        Command::CatalogMinEdges(args) => {
            let source = match args.input {
                Some(path) => Source::File { path },
                None => Source::Enumerate {
                    n: args.n.unwrap_or(args.alpha + args.tau),
                    connected_only: false,
                    dedup: false,
                },
            };
            let cat = catalog_scan(args.alpha, args.tau, args.c, &source, args.shards)?;
            io.emit(json!({
                "source": source,
                "catalog": cat,
                "respects_bound": cat.respects_bound(),
            }))?;
            Ok(EXIT_OK)
        }
    }
}

fn gamma_command(args: GammaArgs, io: &mut Io) -> giwb_core::Result<i32> {
    if let Some(grid) = args.properties {
        let report = gamma_property_suite(grid[0], grid[1]);
        io.emit(json!({ "gamma_properties": report }))?;
        return Ok(EXIT_OK);
    }
    let (a, t) = (
        args.a.expect("required by clap"),
        args.t.expect("required by clap"),
    );
    let value = gamma_closed(a, t)?;
    let mut record = json!({ "gamma": value });
    if args.oracle {
        record["oracle"] = gamma_oracle(a, t)?.into();
    }
    io.emit(record)?;
    Ok(EXIT_OK)
}

fn check_command(args: CheckArgs, io: &mut Io) -> giwb_core::Result<i32> {
    let checks = args.selected()?;
    let mut code = EXIT_OK;
    for (index, g) in load(&args.input.input, io)? {
        let a = Analysis::new(&g);
        for &c in &checks {
            let verdict = c.evaluate(&a);
            code = code.max(exit_code(c, &verdict));
            io.emit(json!({ "index": index, "graph": g, "verdict": verdict }))?;
        }
    }
    Ok(code)
}

/// Only proven statements fail the run; conjecture violations are findings.
fn exit_code(check: Check, verdict: &Verdict) -> i32 {
    if verdict.status == Status::Violated && check.category() == Category::Theorem {
        EXIT_THEOREM_VIOLATED
    } else {
        EXIT_OK
    }
}

fn search_command(args: SearchArgs, io: &mut Io) -> giwb_core::Result<i32> {
    let source = match args.input {
        Some(path) => Source::File { path },
        None => Source::Enumerate {
            n: args.n.expect("required by clap"),
            connected_only: args.connected,
            dedup: args.dedup,
        },
    };
    let checks = Check::parse_list(&args.checks)?;
    let report = scan(&ScanConfig {
        source,
        checks: checks.iter().map(|c| c.name().to_string()).collect(),
        shard_count: args.shards,
    })?;
    if let Some(path) = &args.tsv {
        let io_err = |source| Error::Io {
            path: path.clone(),
            source,
        };
        let file = std::fs::File::create(path).map_err(io_err)?;
        write_violations_tsv(&report, std::io::BufWriter::new(file)).map_err(io_err)?;
    }
    let code = if report.theorem_violated() {
        EXIT_THEOREM_VIOLATED
    } else {
        EXIT_OK
    };
    io.emit(serde_json::to_value(&report).expect("report serializes"))?;
    Ok(code)
}

fn family(kind: &str, params: &[usize]) -> giwb_core::Result<FamilySpec> {
    let wrong = |want: &str| {
        Error::InvalidFamily(format!(
            "{kind} takes {want}, got {} parameters",
            params.len()
        ))
    };
    Ok(match (kind, params) {
        ("clique-of-stars", &[tau, leaves]) => FamilySpec::CliqueOfStars { tau, leaves },
        ("clique-of-stars", _) => return Err(wrong("TAU LEAVES")),
        ("star", &[leaves]) => FamilySpec::Star { leaves },
        ("complete", &[n]) => FamilySpec::Complete { n },
        ("odd-cycle", &[n]) => FamilySpec::OddCycle { n },
        ("star" | "complete" | "odd-cycle", _) => return Err(wrong("one parameter")),
        _ => return Err(Error::InvalidFamily(format!("unknown family `{kind}`"))),
    })
}

/// `-` reads stdin, an existing path reads that file, anything else is an
/// inline graph6 token.
fn load(arg: &str, io: &mut Io) -> giwb_core::Result<Vec<(u64, Graph)>> {
    if arg == "-" {
        let mut text = String::new();
        io.stdin
            .read_to_string(&mut text)
            .map_err(|source| Error::Io {
                path: "<stdin>".into(),
                source,
            })?;
        return parse_text(&text, Path::new("<stdin>"));
    }
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        return parse_text(&text, path);
    }
    Ok(vec![(1, parse_graph6(arg)?)])
}

/// An `n <count>` header marks an edge list; otherwise one graph6 graph per
/// line. Blank lines and `#` comments are skipped.
fn parse_text(text: &str, origin: &Path) -> giwb_core::Result<Vec<(u64, Graph)>> {
    let significant = || {
        text.lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
    };
    let edge_list = significant()
        .next()
        .is_some_and(|(_, l)| l.split_whitespace().next() == Some("n"));
    if edge_list {
        return Ok(vec![(1, parse_edge_list(text)?)]);
    }
    let graphs = significant()
        .map(|(line, l)| {
            parse_graph6(l)
                .map(|g| (line as u64, g))
                .map_err(|e| Error::InFile {
                    path: origin.to_path_buf(),
                    line,
                    source: Box::new(e),
                })
        })
        .collect::<giwb_core::Result<Vec<_>>>()?;
    if graphs.is_empty() {
        return Err(Error::Graph6 {
            offset: 0,
            message: format!("no graphs in {}", origin.display()),
        });
    }
    Ok(graphs)
}
