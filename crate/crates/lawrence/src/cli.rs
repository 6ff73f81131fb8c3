//! Argument parsing and dispatch.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lawrence_core::exactlin::TuOptions;
use lawrence_core::graphs::EdgeOrder;
use lawrence_core::matroid::MatroidCaps;
use serde::Serialize;

use crate::commands::{self, CmdError, CmdResult, ModelSpec, Settings, Source, TutteMethod};
use crate::report::{ErrorReport, Text, SCHEMA_ID};

#[derive(Parser, Debug)]
#[command(name = "lawrence", version, about = "Degrees and ML degrees of Lawrence-lifted toric varieties")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Ground-set order for activities.
    #[arg(long, global = true, value_enum, default_value_t = OrderArg::Natural)]
    pub order: OrderArg,
    /// Also count the degree through initial-term free sets.
    #[arg(long, global = true)]
    pub oracle: bool,
    /// Largest dimension for the total unimodularity search.
    #[arg(long, global = true, default_value_t = TuOptions::default().max_dim)]
    pub cap_minors: usize,
    /// Largest ground set for exhaustive enumeration; also bounds the
    /// pipeline cross-check of model formulas.
    #[arg(long, global = true, default_value_t = MatroidCaps::default().max_ground)]
    pub cap_ground: usize,
    /// Seed for random likelihood data.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Natural,
    File,
    Example45,
}

impl From<OrderArg> for EdgeOrder {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Natural => EdgeOrder::Natural,
            OrderArg::File => EdgeOrder::File,
            OrderArg::Example45 => EdgeOrder::Example45,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Dc,
    Activity,
    Census,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct Input {
    /// Matrix file.
    #[arg(long)]
    pub matrix: Option<PathBuf>,
    /// Graph file; its incidence matrix is used.
    #[arg(long)]
    pub graph: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Rank, total unimodularity, circuits, degree and ML degree of a matrix.
    Analyze { file: PathBuf },
    /// Degree and ML degree for a graph file.
    Graph { file: PathBuf },
    /// Degree and ML degree of a statistical model.
    Model {
        #[command(subcommand)]
        spec: ModelArg,
    },
    /// Tutte polynomial.
    Tutte {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = MethodArg::Dc)]
        method: MethodArg,
    },
    /// List circuits.
    Circuits {
        #[command(flatten)]
        input: Input,
    },
    /// Emit the likelihood equations of the Lawrence lift.
    Emit {
        #[command(flatten)]
        input: Input,
        /// Comma-separated rationals.
        #[arg(long, allow_hyphen_values = true)]
        u: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        w: Option<String>,
        /// Substitute the linear equations into the circuit equations.
        #[arg(long)]
        eliminated: bool,
    },
    /// Degree and ML degree tables for complete bipartite graphs.
    Tables {
        #[arg(long, default_value_t = 6)]
        max: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum ModelArg {
    /// No-three-way interaction model with a binary axis.
    N3w { m1: usize, m2: usize, m3: usize },
    /// Independence model of K(m1, m2).
    Bipartite { m1: usize, m2: usize },
    /// Hierarchical model of a complex file.
    Hierarchical {
        file: PathBuf,
        /// States per variable, comma-separated.
        #[arg(long, value_delimiter = ',', required = true)]
        states: Vec<usize>,
    },
    /// K(m1, m2) with cells removed.
    Quasi {
        m1: usize,
        m2: usize,
        /// Cells `i:j`, 1-based, comma-separated.
        #[arg(long, value_delimiter = ',')]
        remove: Vec<String>,
    },
    /// Boundary of the n-simplex with binary states.
    SimplexBoundary { n: usize },
}

/// Exit code and captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Execution {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

fn render<T: Serialize + Text>(r: &T, format: Format) -> String {
    match format {
        Format::Text => r.text(),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(r).expect("reports serialize");
            s.push('\n');
            s
        }
    }
}

fn name(c: &Command) -> &'static str {
    match c {
        Command::Analyze { .. } => "analyze",
        Command::Graph { .. } => "graph",
        Command::Model { .. } => "model",
        Command::Tutte { .. } => "tutte",
        Command::Circuits { .. } => "circuits",
        Command::Emit { .. } => "emit",
        Command::Tables { .. } => "tables",
    }
}

fn source(input: &Input) -> CmdResult<Source> {
    match (&input.matrix, &input.graph) {
        (Some(p), None) => Ok(Source::Matrix(commands::load_matrix(p)?)),
        (None, Some(p)) => Ok(Source::Graph(commands::load_graph(p)?)),
        _ => Err(CmdError::Input("give exactly one of --matrix and --graph".into())),
    }
}

fn cell(t: &str) -> CmdResult<(usize, usize)> {
    let bad = || CmdError::Input(format!("bad cell `{t}`, expected `i:j`"));
    let (i, j) = t.split_once(':').ok_or_else(bad)?;
    Ok((i.trim().parse().map_err(|_| bad())?, j.trim().parse().map_err(|_| bad())?))
}

fn model_spec(arg: &ModelArg) -> CmdResult<ModelSpec> {
    Ok(match arg {
        ModelArg::N3w { m1, m2, m3 } => ModelSpec::NoThreeWay([*m1, *m2, *m3]),
        ModelArg::Bipartite { m1, m2 } => ModelSpec::Bipartite(*m1, *m2),
        ModelArg::Hierarchical { file, states } => {
            ModelSpec::Hierarchical(commands::load_complex(file)?, states.clone())
        }
        ModelArg::Quasi { m1, m2, remove } => {
            ModelSpec::Quasi(*m1, *m2, remove.iter().map(|t| cell(t)).collect::<CmdResult<_>>()?)
        }
        ModelArg::SimplexBoundary { n } => ModelSpec::SimplexBoundary(*n),
    })
}

/// Run a parsed command. The exit code is 2 when a report is printed but
/// some quantity was refused for a failed hypothesis.
pub fn run(cli: &Cli) -> CmdResult<(u8, String)> {
    let settings = Settings {
        tu: TuOptions { max_dim: cli.cap_minors },
        caps: MatroidCaps { max_ground: cli.cap_ground },
        oracle: cli.oracle,
        order: cli.order.into(),
    };
    let f = cli.format;
    Ok(match &cli.command {
        Command::Analyze { file } => {
            let r = commands::analyze(&commands::load_matrix(file)?, &settings)?;
            (if r.refused.is_empty() { 0 } else { 2 }, render(&r, f))
        }
        Command::Graph { file } => {
            let r = commands::graph(&commands::load_graph(file)?)?;
            (if r.refused.is_empty() { 0 } else { 2 }, render(&r, f))
        }
        Command::Model { spec } => (0, render(&commands::model(&model_spec(spec)?, cli.cap_ground)?, f)),
        Command::Tutte { input, method } => {
            let method = match method {
                MethodArg::Dc => TutteMethod::Dc,
                MethodArg::Activity => TutteMethod::Activity,
                MethodArg::Census => TutteMethod::Census,
            };
            (0, render(&commands::tutte(&source(input)?, method, &settings)?, f))
        }
        Command::Circuits { input } => (0, render(&commands::list_circuits(&source(input)?)?, f)),
        Command::Emit { input, u, w, eliminated } => {
            let a = source(input)?.matrix()?;
            let text = commands::emit(&a, u.as_deref(), w.as_deref(), cli.seed, *eliminated)?;
            let out = match f {
                Format::Text => text,
                Format::Json => {
                    let v = serde_json::json!({
                        "schema": SCHEMA_ID,
                        "command": "emit",
                        "form": if *eliminated { "eliminated" } else { "full" },
                        "system": text,
                    });
                    let mut s = serde_json::to_string_pretty(&v).expect("json");
                    s.push('\n');
                    s
                }
            };
            (0, out)
        }
        Command::Tables { max } => (0, render(&commands::tables(*max)?, f)),
    })
}

/// Parse `args` (including the program name) and run, capturing output.
pub fn execute<I, T>(args: I) -> Execution
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Execution { code: 1, stdout: String::new(), stderr: text }
            } else {
                Execution { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    match run(&cli) {
        Ok((code, stdout)) => Execution { code, stdout, stderr: String::new() },
        Err(e) => {
            let report = ErrorReport {
                schema: SCHEMA_ID,
                command: name(&cli.command).to_string(),
                error: e.detail(),
            };
            let (stdout, stderr) = match cli.format {
                Format::Json => (render(&report, Format::Json), String::new()),
                Format::Text => (String::new(), report.text()),
            };
            Execution { code: e.exit_code(), stdout, stderr }
        }
    }
}
