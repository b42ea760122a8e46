use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ec_kit::enumerate::{bundled_graphs, generate_all, BUNDLED_MAX_ORDER, GENERATE_MAX_ORDER};
use ec_kit::families::Family;
use ec_kit::graph6::{parse_graph6, write_graph6};
use ec_kit::io::{parse_edge_list, parse_inline_edges, parse_partition, to_dot};
use ec_kit::verifier::{
    characterize_ec_equals_m, evaluate_labeled, read_graph6_stream, record_of, report,
    run_family_suite, standard_checks, sweep_to_file, verify_ecg_catalog, GraphClass, SweepConfig,
};
use ec_kit::{
    build_ecg, ec_exact, singleton_partition, validate_partition, ClassStatus, EdgePartition,
    Error, Graph, SolverConfig,
};

// stdout may be a closed pipe (`| head`); output errors are ignored
macro_rules! outln {
    ($($t:tt)*) => {{
        let _ = writeln!(io::stdout().lock(), $($t)*);
    }};
}

macro_rules! out {
    ($($t:tt)*) => {{
        let _ = write!(io::stdout().lock(), $($t)*);
    }};
}

#[derive(Parser)]
#[command(name = "ec-kit", version, about = "Edge coalition numbers of small graphs")]
struct Cli {
    /// Worker threads for the solver and the sweep.
    #[arg(long, global = true, env = "EC_KIT_THREADS", default_value_t = 1)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact edge coalition number with a certificate.
    Ec {
        #[command(flatten)]
        input: Input,
        /// Time budget in seconds; on exhaustion an interval is reported.
        #[arg(long)]
        budget: Option<f64>,
        #[arg(long, default_value_t = 24)]
        max_edges: usize,
        /// Print a sweep record instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Checks whether a partition file describes an ec-partition.
    Certify {
        #[command(flatten)]
        input: Input,
        /// One class per line, edge indices separated by spaces or commas.
        #[arg(long)]
        partition: PathBuf,
    },
    /// Coalition graph of a partition (the singleton partition by default).
    Ecg {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        partition: Option<PathBuf>,
        #[arg(long, conflicts_with = "graph6")]
        dot: bool,
        #[arg(long)]
        graph6: bool,
    },
    /// Runs verification suites and writes their reports.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// graph6 file for the sweep; defaults to the bundled graphs.
        #[arg(long)]
        graphs: Option<PathBuf>,
        /// Output directory.
        #[arg(long, default_value = "verify-out")]
        out: PathBuf,
        /// Per-graph time budget in seconds.
        #[arg(long)]
        budget: Option<f64>,
    },
    /// Prints graph6 lines.
    Gen {
        #[arg(long, conflicts_with = "all_upto", required_unless_present = "all_upto")]
        family: Option<String>,
        /// Every graph on 1..=N vertices up to isomorphism.
        #[arg(long)]
        all_upto: Option<usize>,
    },
}

#[derive(Args)]
#[group(multiple = false)]
struct Input {
    /// Family spec such as path:6, cycle:5, kb:2,4, dstar:2,3.
    #[arg(long)]
    family: Option<String>,
    /// Inline edges such as "3: 0-1,1-2".
    #[arg(long)]
    edges: Option<String>,
    /// A graph6 string.
    #[arg(long = "g6")]
    g6: Option<String>,
    /// Edge-list file ("n m" then "u v" lines), or a graph6 file ending in .g6.
    file: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Family,
    Sweep,
    Ecg,
    All,
}

/// Error carrying the exit code: 1 for computation failures, 2 for usage.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn compute(message: impl Into<String>) -> Failure {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::DuplicateEdge { .. }
            | Error::SelfLoop(_)
            | Error::VertexOutOfRange { .. }
            | Error::EdgeOutOfRange { .. }
            | Error::InvalidFamilyParams(_)
            | Error::MalformedGraph6(_)
            | Error::MalformedEdgeList(_)
            | Error::NotAPartition(_)
            | Error::MismatchedGraph { .. }
            | Error::Io(_) => 2,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type CliResult = Result<ExitCode, Failure>;

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn first_graph6_line(text: &str) -> Result<Graph, Failure> {
    let line = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .ok_or_else(|| Failure::usage("no graph on input"))?;
    Ok(parse_graph6(line)?)
}

impl Input {
    fn graph(&self) -> Result<Graph, Failure> {
        if let Some(spec) = &self.family {
            let family: Family = spec.parse()?;
            return Ok(family.build()?);
        }
        if let Some(spec) = &self.edges {
            return Ok(parse_inline_edges(spec)?);
        }
        if let Some(g6) = &self.g6 {
            return Ok(parse_graph6(g6.trim())?);
        }
        if let Some(path) = &self.file {
            let text = read_file(path)?;
            return if path.extension().is_some_and(|e| e == "g6") {
                first_graph6_line(&text)
            } else {
                Ok(parse_edge_list(&text)?)
            };
        }
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::usage(format!("stdin: {e}")))?;
        first_graph6_line(&text)
    }
}

fn budget(secs: Option<f64>) -> Result<Option<Duration>, Failure> {
    secs.map(|s| Duration::try_from_secs_f64(s).map_err(|e| Failure::usage(format!("--budget: {e}"))))
        .transpose()
}

fn describe_class(g: &Graph, p: &EdgePartition, i: usize) -> String {
    let items: Vec<String> = p.classes()[i]
        .iter()
        .map(|e| {
            let (u, v) = g.endpoints(e).expect("partition matches graph");
            format!("e{e}({u}-{v})")
        })
        .collect();
    items.join(" ")
}

fn cmd_ec(g: &Graph, budget: Option<Duration>, max_edges: usize, json: bool, threads: usize) -> CliResult {
    let solver = SolverConfig {
        max_edges,
        time_budget: budget,
        threads,
        ..SolverConfig::default()
    };
    if json {
        let cfg = SweepConfig {
            solver,
            ..SweepConfig::default()
        };
        let ev = evaluate_labeled(g, &cfg);
        let record = record_of(&ev, &standard_checks());
        outln!("{}", record.to_json_line());
        return Ok(if ev.exact().is_some() || g.m() == 0 {
            ExitCode::SUCCESS
        } else {
            ExitCode::from(1)
        });
    }
    match ec_exact(g, &solver) {
        Ok(r) => {
            outln!("EC = {}", r.value);
            for i in 0..r.certificate.order() {
                outln!("class {i}: {}", describe_class(g, &r.certificate, i));
            }
            Ok(ExitCode::SUCCESS)
        }
        Err(Error::TimeBudgetExceeded { lo, hi, best }) => {
            outln!("EC in [{lo}, {hi}]");
            for i in 0..best.order() {
                outln!("class {i}: {}", describe_class(g, &best, i));
            }
            Err(Failure::compute(format!("time budget exhausted; EC in [{lo}, {hi}]")))
        }
        Err(e) => Err(e.into()),
    }
}

fn load_partition(g: &Graph, path: &Path) -> Result<EdgePartition, Failure> {
    Ok(parse_partition(&read_file(path)?, g.m())?)
}

fn cmd_certify(g: &Graph, path: &Path) -> CliResult {
    let p = load_partition(g, path)?;
    let verdict = validate_partition(g, &p)?;
    for (i, status) in verdict.class_status.iter().enumerate() {
        let what = match status {
            ClassStatus::SingletonDominating => "dominating single edge".to_string(),
            ClassStatus::Partnered(list) => {
                let list: Vec<String> = list.iter().map(usize::to_string).collect();
                format!("partners {}", list.join(", "))
            }
            ClassStatus::Orphan => "orphan".to_string(),
        };
        outln!("class {i} [{}]: {what}", describe_class(g, &p, i));
    }
    match verdict.first_orphan() {
        None => {
            outln!("ec-partition of order {}", p.order());
            Ok(ExitCode::SUCCESS)
        }
        Some(i) => {
            outln!("not an ec-partition");
            Err(Failure::compute(format!("class {i} has no coalition partner")))
        }
    }
}

fn cmd_ecg(g: &Graph, partition: Option<&Path>, graph6: bool) -> CliResult {
    let p = match partition {
        Some(path) => load_partition(g, path)?,
        None => singleton_partition(g)?,
    };
    let ecg = build_ecg(g, &p)?;
    if graph6 {
        outln!("{}", write_graph6(&ecg.graph)?);
    } else {
        out!("{}", to_dot(&ecg.graph, "ecg"));
    }
    Ok(ExitCode::SUCCESS)
}

fn write_out(dir: &Path, name: &str, text: &str) -> Result<(), Failure> {
    let path = dir.join(name);
    fs::write(&path, text).map_err(|e| Failure::compute(format!("{}: {e}", path.display())))?;
    log::info!("wrote {}", path.display());
    Ok(())
}

fn sweep_graphs(graphs: Option<&Path>) -> Result<Vec<Graph>, Failure> {
    match graphs {
        Some(path) => Ok(read_graph6_stream(&read_file(path)?)),
        None => {
            let mut all = Vec::new();
            for n in 1..=BUNDLED_MAX_ORDER {
                all.extend(bundled_graphs(n)?);
            }
            Ok(all)
        }
    }
}

fn cmd_verify(suite: Suite, graphs: Option<&Path>, out: &Path, budget: Option<Duration>, threads: usize) -> CliResult {
    // read the input before creating anything
    let stream = match suite {
        Suite::Sweep | Suite::All => Some(sweep_graphs(graphs)?),
        _ => None,
    };
    fs::create_dir_all(out).map_err(|e| Failure::usage(format!("{}: {e}", out.display())))?;
    let solver = SolverConfig {
        time_budget: budget,
        ..SolverConfig::default()
    };
    let mut clean = true;

    if matches!(suite, Suite::Family | Suite::All) {
        let rep = run_family_suite(&solver);
        write_out(out, "family.csv", &rep.to_csv()?)?;
        let failed = rep.failures();
        outln!("family suite: {} rows, {} not passing", rep.rows.len(), failed.len());
        for row in failed {
            outln!(
                "  {} expected {} got [{}, {}] {}",
                row.family,
                row.expected,
                row.ec_lo.map_or("-".into(), |v| v.to_string()),
                row.ec_hi.map_or("-".into(), |v| v.to_string()),
                row.status
            );
        }
    }

    if let Some(graphs) = stream {
        let checks = standard_checks();
        let cfg = SweepConfig {
            solver: solver.clone(),
            threads,
            ..SweepConfig::default()
        };
        let outcome = sweep_to_file(&graphs, &checks, &cfg, &out.join("sweep.jsonl"))?;
        let rep = report(&outcome.records, &checks);
        write_out(out, "sweep_report.txt", &rep.to_text())?;
        write_out(out, "sweep_discrepancies.json", &rep.to_json())?;
        out!("{}", rep.to_text());
        if let Some(repro) = &outcome.aborted {
            clean = false;
            let text = serde_json::to_string_pretty(repro).expect("serializable");
            write_out(out, "reproducer.json", &text)?;
            outln!("sweep stopped: assert check {} failed on {}", repro.check, repro.graph6);
        }
        if rep.assert_failures() > 0 {
            clean = false;
        }
    }

    if matches!(suite, Suite::Ecg | Suite::All) {
        let catalog = verify_ecg_catalog()?;
        let mut text = catalog.to_text();
        for class in [GraphClass::Tree, GraphClass::Unicyclic, GraphClass::Other] {
            let list = characterize_ec_equals_m(BUNDLED_MAX_ORDER, class)?;
            text.push_str(&format!("EC = m, {class:?}, n <= {BUNDLED_MAX_ORDER}: {}\n", list.len()));
            for g in list {
                text.push_str(&format!(
                    "  {} n={} m={} shape={}\n",
                    g.key,
                    g.n,
                    g.m,
                    g.shape.as_deref().unwrap_or("none")
                ));
            }
        }
        write_out(out, "ecg_catalog.txt", &text)?;
        out!("{}", catalog.to_text());
    }
    Ok(if clean { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_gen(family: Option<&str>, all_upto: Option<usize>) -> CliResult {
    if let Some(spec) = family {
        let family: Family = spec.parse()?;
        outln!("{}", write_graph6(&family.build()?)?);
        return Ok(ExitCode::SUCCESS);
    }
    let n = all_upto.expect("clap requires one of the two");
    if n > GENERATE_MAX_ORDER {
        return Err(Failure::usage(format!("--all-upto accepts at most {GENERATE_MAX_ORDER}")));
    }
    for k in 1..=n {
        for g in generate_all(k)? {
            outln!("{}", write_graph6(&g)?);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> CliResult {
    let threads = cli.threads.max(1);
    match cli.command {
        Command::Ec {
            input,
            budget: b,
            max_edges,
            json,
        } => cmd_ec(&input.graph()?, budget(b)?, max_edges, json, threads),
        Command::Certify { input, partition } => cmd_certify(&input.graph()?, &partition),
        Command::Ecg {
            input,
            partition,
            dot: _,
            graph6,
        } => cmd_ecg(&input.graph()?, partition.as_deref(), graph6),
        Command::Verify {
            suite,
            graphs,
            out,
            budget: b,
        } => cmd_verify(suite, graphs.as_deref(), &out, budget(b)?, threads),
        Command::Gen { family, all_upto } => cmd_gen(family.as_deref(), all_upto),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn"))
        .target(env_logger::Target::Stderr)
        .init();
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
