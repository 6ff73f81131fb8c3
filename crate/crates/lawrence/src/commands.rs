//! The work behind each subcommand, returning serializable reports.

use std::path::{Path, PathBuf};

use lawrence_core::exactlin::{circuits, is_totally_unimodular, rank, TuOptions};
use lawrence_core::graphs::{
    circuit_taxonomy, digraph_degree_mldeg, edge_order, graph_degree_mldeg, is_balanced, is_bipartite,
    signed_degree_mldeg, EdgeOrder, GraphReport, DEFAULT_CYCLE_CAP,
};
use lawrence_core::matroid::{tutte_activity, tutte_census, tutte_dc, GroundOrder, MatroidCaps};
use lawrence_core::models::{
    closed_degree_k, closed_mldeg_k, complete_bipartite_values, hierarchical_matrix, no_three_way_values,
    pipeline_values, quasi_independence_matrix, simplex_boundary_values, two_facet_values, Method,
    ModelValues, SimplicialComplex,
};
use lawrence_core::toric::{build_ml_system, degree_oracle_lawrence, random_data, Form, MonomialOrder};
use lawrence_core::{Error, Hypothesis, Matroid, Parity, RatMatrix, Rational};
use num_bigint::BigUint;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::formats::{parse_complex, parse_graph, parse_matrix, FormatError, GraphInput};
use crate::report::*;

/// Default seed for randomly drawn likelihood data.
pub const DEFAULT_SEED: u64 = 0;

/// Largest `--max` accepted by `tables`.
pub const TABLES_MAX: usize = 64;

#[derive(Debug, thiserror::Error)]
pub enum CmdError {
    #[error("{0}")]
    Input(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Format { path: PathBuf, source: FormatError },
    #[error(transparent)]
    Core(#[from] Error),
}

impl CmdError {
    /// 1 input error, 2 hypothesis failure, 3 resource cap exceeded.
    pub fn exit_code(&self) -> u8 {
        match self {
            CmdError::Core(e) if e.hypothesis().is_some() => 2,
            CmdError::Core(Error::CapExceeded { .. }) => 3,
            _ => 1,
        }
    }

    pub fn detail(&self) -> ErrorDetail {
        let (kind, hypothesis, circuit) = match self {
            CmdError::Core(e) => match (e.hypothesis(), e) {
                (Some(h), Error::OddCircuitPresent { circuit }) => ("hypothesis", Some(h.as_str()), Some(circuit.clone())),
                (Some(h), _) => ("hypothesis", Some(h.as_str()), None),
                (None, Error::CapExceeded { .. }) => ("cap", None, None),
                _ => ("input", None, None),
            },
            _ => ("input", None, None),
        };
        ErrorDetail {
            kind,
            message: self.to_string(),
            hypothesis,
            circuit,
        }
    }
}

pub type CmdResult<T> = Result<T, CmdError>;

/// Flags shared by every command.
#[derive(Clone, Debug)]
pub struct Settings {
    pub tu: TuOptions,
    pub caps: MatroidCaps,
    pub oracle: bool,
    pub order: EdgeOrder,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            tu: TuOptions::default(),
            caps: MatroidCaps::default(),
            oracle: false,
            order: EdgeOrder::Natural,
        }
    }
}

fn read(path: &Path) -> CmdResult<String> {
    std::fs::read_to_string(path).map_err(|source| CmdError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn with_path<T>(path: &Path, r: Result<T, FormatError>) -> CmdResult<T> {
    r.map_err(|source| CmdError::Format {
        path: path.to_path_buf(),
        source,
    })
}

pub fn load_matrix(path: &Path) -> CmdResult<RatMatrix> {
    with_path(path, parse_matrix(&read(path)?))
}

pub fn load_graph(path: &Path) -> CmdResult<GraphInput> {
    with_path(path, parse_graph(&read(path)?))
}

pub fn load_complex(path: &Path) -> CmdResult<SimplicialComplex> {
    with_path(path, parse_complex(&read(path)?))
}

/// Where a matrix came from; graphs keep their edge list for orders and
/// circuit classes.
#[derive(Clone, Debug)]
pub enum Source {
    Matrix(RatMatrix),
    Graph(GraphInput),
}

impl Source {
    pub fn matrix(&self) -> CmdResult<RatMatrix> {
        match self {
            Source::Matrix(a) => Ok(a.clone()),
            Source::Graph(g) => Ok(g.incidence()?),
        }
    }

    /// Ground order for activities. Matrix columns count as edges listed in
    /// index order, so only `example45` changes anything: it reverses them.
    pub fn ground_order(&self, order: EdgeOrder) -> GroundOrder {
        match self {
            Source::Graph(g) => edge_order(&g.edges(), order),
            Source::Matrix(a) => {
                let n = a.cols();
                match order {
                    EdgeOrder::Example45 => {
                        GroundOrder::from_sequence(&(0..n).rev().collect::<Vec<_>>()).expect("a permutation")
                    }
                    _ => GroundOrder::natural(n),
                }
            }
        }
    }
}

pub fn analyze(a: &RatMatrix, s: &Settings) -> CmdResult<AnalyzeReport> {
    let tu = is_totally_unimodular(a, s.tu)?;
    let m = Matroid::with_caps(a, s.caps);
    let circs = m.circuits();
    let even = circs.iter().filter(|c| c.parity() == Parity::Even).count();
    let tutte = tutte_dc(&m);
    let mut refused = Vec::new();
    let refuse = |q, h: Hypothesis, circuit| Refusal {
        quantity: q,
        hypothesis: h.as_str(),
        circuit,
    };
    let degree = if tu {
        Some(tutte.bases_count())
    } else {
        refused.push(refuse("degree", Hypothesis::TotallyUnimodular, None));
        None
    };
    let odd = circs.iter().find(|c| c.parity() == Parity::Odd);
    let mldeg = match (tu, odd) {
        (false, _) => {
            refused.push(refuse("mldeg", Hypothesis::TotallyUnimodular, None));
            None
        }
        (true, Some(c)) => {
            refused.push(refuse("mldeg", Hypothesis::EvenCircuits, Some(c.vector().to_vec())));
            None
        }
        (true, None) => Some(tutte.external_zero_count()),
    };
    let oracle = match (s.oracle, tu) {
        (false, _) => None,
        (true, false) => {
            refused.push(refuse("oracle", Hypothesis::TotallyUnimodular, None));
            None
        }
        (true, true) => {
            let r = degree_oracle_lawrence(a, &MonomialOrder::degrevlex(2 * a.cols()))?;
            Some(OracleJson {
                order: "degrevlex",
                bases: r.bases,
                constructed: r.constructed,
                maximal_sets: r.maximal_sets,
                top_sets: r.top_sets,
                agrees: r.agrees() && Some(r.degree() as u128) == degree,
            })
        }
    };
    Ok(AnalyzeReport {
        schema: SCHEMA_ID,
        command: "analyze",
        rows: a.rows(),
        cols: a.cols(),
        rank: rank(a),
        totally_unimodular: tu,
        circuits: CircuitSummary {
            count: circs.len(),
            even,
            odd: circs.len() - even,
        },
        degree,
        mldeg,
        refused,
        tutte: (&tutte).into(),
        oracle,
    })
}

pub fn graph(g: &GraphInput) -> CmdResult<GraphJson> {
    let (report, bipartite, balanced, vertices): (GraphReport, bool, Option<bool>, usize) = match g {
        GraphInput::Undirected(g) => (graph_degree_mldeg(g)?, is_bipartite(g), None, g.vertex_count()),
        GraphInput::Directed(d) => {
            let u = d.underlying();
            (digraph_degree_mldeg(d)?, is_bipartite(&u), None, u.vertex_count())
        }
        GraphInput::Signed(s) => (
            signed_degree_mldeg(s)?,
            is_bipartite(s.graph()),
            Some(is_balanced(s)),
            s.graph().vertex_count(),
        ),
    };
    let refused = report
        .reason
        .map(|h| Refusal {
            quantity: "mldeg",
            hypothesis: h.as_str(),
            circuit: None,
        })
        .into_iter()
        .collect();
    Ok(GraphJson {
        schema: SCHEMA_ID,
        command: "graph",
        kind: g.kind(),
        vertices,
        edges: g.edges().len(),
        bipartite,
        balanced,
        degree: report.degree,
        mldeg: report.mldeg,
        refused,
        tutte: (&report.tutte).into(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TutteMethod {
    Dc,
    Activity,
    Census,
}

impl TutteMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            TutteMethod::Dc => "dc",
            TutteMethod::Activity => "activity",
            TutteMethod::Census => "census",
        }
    }
}

pub fn tutte(src: &Source, method: TutteMethod, s: &Settings) -> CmdResult<TutteReport> {
    let a = src.matrix()?;
    let m = Matroid::with_caps(&a, s.caps);
    let t = match method {
        TutteMethod::Dc => tutte_dc(&m),
        TutteMethod::Activity => tutte_activity(&m, &src.ground_order(s.order))?,
        TutteMethod::Census => tutte_census(&m)?,
    };
    Ok(TutteReport {
        schema: SCHEMA_ID,
        command: "tutte",
        method: method.as_str(),
        ground: m.ground_size(),
        rank: m.rank(),
        tutte: (&t).into(),
    })
}

pub fn list_circuits(src: &Source) -> CmdResult<CircuitsReport> {
    let a = src.matrix()?;
    let classes = match src {
        Source::Graph(GraphInput::Undirected(g)) => Some(circuit_taxonomy(g, DEFAULT_CYCLE_CAP)?),
        _ => None,
    };
    let out: Vec<CircuitJson> = circuits(&a)
        .iter()
        .map(|c| CircuitJson {
            support: c.support().iter().map(|i| i + 1).collect(),
            vector: c.vector().to_vec(),
            parity: match c.parity() {
                Parity::Even => "even",
                Parity::Odd => "odd",
            },
            class: classes.as_ref().and_then(|cl| {
                cl.iter()
                    .find(|e| e.support.as_slice() == c.support())
                    .map(|e| e.class.as_str())
            }),
        })
        .collect();
    Ok(CircuitsReport {
        schema: SCHEMA_ID,
        command: "circuits",
        count: out.len(),
        circuits: out,
    })
}

/// Comma-separated rationals such as `1,-2/3,5`.
pub fn parse_rationals(text: &str, n: usize, what: &str) -> CmdResult<Vec<Rational>> {
    let v: Vec<Rational> = text
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<Rational>()
                .map_err(|_| CmdError::Input(format!("{what}: bad rational `{t}`")))
        })
        .collect::<CmdResult<_>>()?;
    if v.len() != n {
        return Err(CmdError::Input(format!("{what}: expected {n} entries, found {}", v.len())));
    }
    Ok(v)
}

/// The emitted likelihood system as text.
pub fn emit(a: &RatMatrix, u: Option<&str>, w: Option<&str>, seed: Option<u64>, eliminated: bool) -> CmdResult<String> {
    let n = a.cols();
    let form = if eliminated { Form::Eliminated } else { Form::Full };
    let (u, w, seed) = match (u, w) {
        (Some(u), Some(w)) => (parse_rationals(u, n, "--u")?, parse_rationals(w, n, "--w")?, None),
        (None, None) => {
            let seed = seed.unwrap_or(DEFAULT_SEED);
            let (u, w) = random_data(n, &mut ChaCha8Rng::seed_from_u64(seed));
            (u, w, Some(seed))
        }
        _ => return Err(CmdError::Input("--u and --w must be given together".into())),
    };
    let mut system = build_ml_system(a, &u, &w, form)?;
    system.seed = seed;
    Ok(system.emit())
}

pub fn tables(max: usize) -> CmdResult<TablesReport> {
    if max == 0 || max > TABLES_MAX {
        return Err(CmdError::Input(format!("--max must lie in 1..={TABLES_MAX}")));
    }
    let grid = |f: fn(usize, usize) -> BigUint| -> Vec<Vec<BigCount>> {
        (1..=max)
            .map(|m1| (1..=max).map(|m2| BigCount(f(m1, m2))).collect())
            .collect()
    };
    Ok(TablesReport {
        schema: SCHEMA_ID,
        command: "tables",
        max,
        method: Method::ClosedForm.as_str(),
        degree: grid(closed_degree_k),
        mldeg: grid(closed_mldeg_k),
    })
}

/// Which model the `model` command evaluates.
#[derive(Clone, Debug)]
pub enum ModelSpec {
    NoThreeWay([usize; 3]),
    Bipartite(usize, usize),
    Hierarchical(SimplicialComplex, Vec<usize>),
    /// `K(m1, m2)` without the listed 1-based cells `(i, j)`.
    Quasi(usize, usize, Vec<(usize, usize)>),
    SimplexBoundary(usize),
}

fn model_json(model: &'static str, parameters: serde_json::Value, v: ModelValues) -> ModelJson {
    ModelJson {
        schema: SCHEMA_ID,
        command: "model",
        model,
        parameters,
        degree: BigCount(v.degree),
        mldeg: BigCount(v.mldeg),
        method: v.method.as_str(),
        cross_checked: v.cross_checked,
    }
}

fn piped(a: &RatMatrix) -> CmdResult<ModelValues> {
    let (degree, mldeg) = pipeline_values(a)?;
    Ok(ModelValues {
        degree,
        mldeg,
        method: Method::Pipeline,
        cross_checked: false,
    })
}

/// `cap` bounds the column count of matrices sent through the pipeline as
/// a cross-check of a closed form.
pub fn model(spec: &ModelSpec, cap: usize) -> CmdResult<ModelJson> {
    Ok(match spec {
        ModelSpec::NoThreeWay(m) => model_json("n3w", json!({ "m": m }), no_three_way_values(*m, cap)?),
        ModelSpec::Bipartite(m1, m2) => model_json(
            "bipartite",
            json!({ "m1": m1, "m2": m2 }),
            complete_bipartite_values(*m1, *m2, cap)?,
        ),
        ModelSpec::Hierarchical(g, r) => {
            let facets: Vec<Vec<usize>> = g.facets().iter().map(|f| f.iter().map(|i| i + 1).collect()).collect();
            let params = json!({ "n": g.ground_size(), "facets": facets, "states": r });
            let covering = (0..g.ground_size()).all(|i| g.facets().iter().any(|f| f.contains(&i)));
            let v = if g.facets().len() == 2 && covering {
                two_facet_values(g, r, cap)?
            } else {
                piped(&hierarchical_matrix(g, r)?)?
            };
            model_json("hierarchical", params, v)
        }
        ModelSpec::Quasi(m1, m2, removed) => {
            if *m1 == 0 || *m2 == 0 {
                return Err(CmdError::Input("K(m1, m2) needs m1, m2 >= 1".into()));
            }
            let mut cols = Vec::with_capacity(removed.len());
            for &(i, j) in removed {
                if i == 0 || i > *m1 || j == 0 || j > *m2 {
                    return Err(CmdError::Input(format!("cell {i}{j} outside {m1} x {m2}")));
                }
                cols.push((i - 1) * m2 + (j - 1));
            }
            let base = lawrence_core::graphs::incidence(&lawrence_core::graphs::Graph::complete_bipartite(*m1, *m2))?;
            let a = quasi_independence_matrix(&base, &cols)?;
            model_json("quasi", json!({ "m1": m1, "m2": m2, "removed": removed }), piped(&a)?)
        }
        ModelSpec::SimplexBoundary(n) => {
            // the pipeline matrix has 2^n columns
            let pipe_n = (2..=*n).take_while(|&k| k < usize::BITS as usize && 1usize << k <= cap).last().unwrap_or(1);
            model_json("simplex-boundary", json!({ "n": n }), simplex_boundary_values(*n, pipe_n)?)
        }
    })
}
