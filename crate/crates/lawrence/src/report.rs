//! Serializable reports for each command, with a plain-text rendering.
//!
//! Every JSON document carries `schema` and `command`; the layout is
//! described by `schema/lawrence-output.v1.json`.

use std::fmt::Write as _;

use lawrence_core::TuttePoly;
use num_bigint::BigUint;
use serde::{Serialize, Serializer};

pub const SCHEMA_ID: &str = "lawrence-output/v1";

/// `{"coeffs": [[i, j, t_ij], ...]}`, sorted by `(i, j)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TutteJson {
    pub coeffs: Vec<(usize, usize, u128)>,
}

impl From<&TuttePoly> for TutteJson {
    fn from(t: &TuttePoly) -> Self {
        TutteJson { coeffs: t.terms().collect() }
    }
}

/// A nonnegative integer that serializes as a JSON number when it fits in
/// `u128` and as a decimal string otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigCount(pub BigUint);

impl Serialize for BigCount {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match u128::try_from(&self.0) {
            Ok(v) => s.serialize_u128(v),
            Err(_) => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl From<u128> for BigCount {
    fn from(v: u128) -> Self {
        BigCount(BigUint::from(v))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CircuitSummary {
    pub count: usize,
    pub even: usize,
    pub odd: usize,
}

/// A quantity that was not computed because a hypothesis failed.
#[derive(Clone, Debug, Serialize)]
pub struct Refusal {
    pub quantity: &'static str,
    pub hypothesis: &'static str,
    /// An offending circuit, when one witnesses the failure.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub circuit: Option<Vec<i64>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleJson {
    pub order: &'static str,
    pub bases: usize,
    pub constructed: usize,
    pub maximal_sets: usize,
    pub top_sets: usize,
    pub agrees: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalyzeReport {
    pub schema: &'static str,
    pub command: &'static str,
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    pub totally_unimodular: bool,
    pub circuits: CircuitSummary,
    pub degree: Option<u128>,
    pub mldeg: Option<u128>,
    pub refused: Vec<Refusal>,
    pub tutte: TutteJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleJson>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphJson {
    pub schema: &'static str,
    pub command: &'static str,
    pub kind: &'static str,
    pub vertices: usize,
    pub edges: usize,
    pub bipartite: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub balanced: Option<bool>,
    pub degree: u128,
    pub mldeg: Option<u128>,
    pub refused: Vec<Refusal>,
    pub tutte: TutteJson,
}

#[derive(Clone, Debug, Serialize)]
pub struct ModelJson {
    pub schema: &'static str,
    pub command: &'static str,
    pub model: &'static str,
    pub parameters: serde_json::Value,
    pub degree: BigCount,
    pub mldeg: BigCount,
    pub method: &'static str,
    pub cross_checked: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TutteReport {
    pub schema: &'static str,
    pub command: &'static str,
    pub method: &'static str,
    pub ground: usize,
    pub rank: usize,
    pub tutte: TutteJson,
}

#[derive(Clone, Debug, Serialize)]
pub struct CircuitJson {
    /// 1-based column (edge) indices.
    pub support: Vec<usize>,
    pub vector: Vec<i64>,
    pub parity: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class: Option<&'static str>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CircuitsReport {
    pub schema: &'static str,
    pub command: &'static str,
    pub count: usize,
    pub circuits: Vec<CircuitJson>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TablesReport {
    pub schema: &'static str,
    pub command: &'static str,
    pub max: usize,
    pub method: &'static str,
    pub degree: Vec<Vec<BigCount>>,
    pub mldeg: Vec<Vec<BigCount>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ErrorDetail {
    pub kind: &'static str,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hypothesis: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub circuit: Option<Vec<i64>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ErrorReport {
    pub schema: &'static str,
    pub command: String,
    pub error: ErrorDetail,
}

fn opt(v: Option<u128>) -> String {
    v.map_or_else(|| "-".into(), |x| x.to_string())
}

fn refusals(out: &mut String, r: &[Refusal]) {
    for x in r {
        let _ = write!(out, "refused: {} ({})", x.quantity, x.hypothesis);
        if let Some(c) = &x.circuit {
            let _ = write!(out, " circuit {}", join(c));
        }
        out.push('\n');
    }
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn tutte_text(t: &TutteJson) -> String {
    TuttePoly::from_terms(t.coeffs.iter().copied()).to_string()
}

/// Plain-text rendering.
pub trait Text {
    fn text(&self) -> String;
}

impl Text for AnalyzeReport {
    fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "matrix: {} x {}, rank {}", self.rows, self.cols, self.rank);
        let _ = writeln!(s, "totally unimodular: {}", self.totally_unimodular);
        let c = &self.circuits;
        let _ = writeln!(s, "circuits: {} ({} even, {} odd)", c.count, c.even, c.odd);
        let _ = writeln!(s, "tutte: {}", tutte_text(&self.tutte));
        let _ = writeln!(s, "degree: {}", opt(self.degree));
        let _ = writeln!(s, "mldeg: {}", opt(self.mldeg));
        refusals(&mut s, &self.refused);
        if let Some(o) = &self.oracle {
            let _ = writeln!(
                s,
                "oracle ({}): bases {}, constructed {}, maximal {}, top {}, agrees {}",
                o.order, o.bases, o.constructed, o.maximal_sets, o.top_sets, o.agrees
            );
        }
        s
    }
}

impl Text for GraphJson {
    fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "graph: {}, {} vertices, {} edges", self.kind, self.vertices, self.edges);
        let _ = writeln!(s, "bipartite: {}", self.bipartite);
        if let Some(b) = self.balanced {
            let _ = writeln!(s, "balanced: {b}");
        }
        let _ = writeln!(s, "tutte: {}", tutte_text(&self.tutte));
        let _ = writeln!(s, "degree: {}", self.degree);
        let _ = writeln!(s, "mldeg: {}", opt(self.mldeg));
        refusals(&mut s, &self.refused);
        s
    }
}

impl Text for ModelJson {
    fn text(&self) -> String {
        format!(
            "model: {} {}\ndegree: {}\nmldeg: {}\nmethod: {}\ncross-checked: {}\n",
            self.model,
            self.parameters,
            self.degree.0,
            self.mldeg.0,
            self.method,
            self.cross_checked
        )
    }
}

impl Text for TutteReport {
    fn text(&self) -> String {
        format!("{}\n", tutte_text(&self.tutte))
    }
}

impl Text for CircuitsReport {
    fn text(&self) -> String {
        let mut s = String::new();
        for c in &self.circuits {
            let _ = write!(s, "{{{}}} [{}] {}", join(&c.support), join(&c.vector), c.parity);
            if let Some(class) = c.class {
                let _ = write!(s, " {class}");
            }
            s.push('\n');
        }
        let _ = writeln!(s, "{} circuits", self.count);
        s
    }
}

fn table_text(s: &mut String, title: &str, rows: &[Vec<BigCount>]) {
    let width = rows
        .iter()
        .flatten()
        .map(|x| x.0.to_string().len())
        .chain([5])
        .max()
        .unwrap_or(5);
    let _ = writeln!(s, "{title}");
    let _ = write!(s, "{:>5}", "m1\\m2");
    for j in 1..=rows.len() {
        let _ = write!(s, " {j:>width$}");
    }
    s.push('\n');
    for (i, row) in rows.iter().enumerate() {
        let _ = write!(s, "{:>5}", i + 1);
        for x in row {
            let _ = write!(s, " {:>width$}", x.0.to_string());
        }
        s.push('\n');
    }
}

impl Text for TablesReport {
    fn text(&self) -> String {
        let mut s = String::new();
        table_text(&mut s, "degree of X_{Λ(A_{K(m1,m2)})}", &self.degree);
        s.push('\n');
        table_text(&mut s, "ML degree of X_{Λ(A_{K(m1,m2)})}", &self.mldeg);
        s
    }
}

impl Text for ErrorReport {
    fn text(&self) -> String {
        let mut s = format!("error: {}", self.error.message);
        if let Some(c) = &self.error.circuit {
            let _ = write!(s, " (circuit {})", join(c));
        }
        s.push('\n');
        s
    }
}
