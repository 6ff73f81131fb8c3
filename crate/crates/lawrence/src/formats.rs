//! Text formats for matrices, graphs and simplicial complexes.
//!
//! All three skip blank lines and lines starting with `#`.

use lawrence_core::graphs::{DiGraph, Graph, Sign, SignedGraph};
use lawrence_core::models::SimplicialComplex;
use lawrence_core::{RatMatrix, Rational};
use num_bigint::BigInt;

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("unexpected end of input: {0}")]
    Truncated(String),
    #[error("{0}")]
    Invalid(#[from] lawrence_core::Error),
}

fn syntax(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, msg: msg.into() }
}

/// Content lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_usize(tok: &str, line: usize, what: &str) -> Result<usize, FormatError> {
    tok.parse().map_err(|_| syntax(line, format!("bad {what} `{tok}`")))
}

/// `d n`, then `d` rows of `n` integers.
pub fn parse_matrix(text: &str) -> Result<RatMatrix, FormatError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| FormatError::Truncated("missing `d n` header".into()))?;
    let dims: Vec<&str> = header.split_whitespace().collect();
    let [d, n] = dims[..] else {
        return Err(syntax(hl, "header must be `d n`"));
    };
    let (d, n) = (parse_usize(d, hl, "row count")?, parse_usize(n, hl, "column count")?);
    let mut entries = Vec::with_capacity(d * n);
    for r in 0..d {
        let (ln, row) = lines
            .next()
            .ok_or_else(|| FormatError::Truncated(format!("expected {d} rows, found {r}")))?;
        let toks: Vec<&str> = row.split_whitespace().collect();
        if toks.len() != n {
            return Err(syntax(ln, format!("expected {n} entries, found {}", toks.len())));
        }
        for t in toks {
            let v: BigInt = t.parse().map_err(|_| syntax(ln, format!("bad integer `{t}`")))?;
            entries.push(Rational::from_integer(v));
        }
    }
    if let Some((ln, _)) = lines.next() {
        return Err(syntax(ln, "trailing content after the last row"));
    }
    Ok(RatMatrix::new(d, n, entries)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphInput {
    Undirected(Graph),
    Directed(DiGraph),
    Signed(SignedGraph),
}

impl GraphInput {
    /// Edge endpoints, 0-based, in file order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        match self {
            GraphInput::Undirected(g) => g.edges().to_vec(),
            GraphInput::Directed(d) => d.arcs().to_vec(),
            GraphInput::Signed(s) => s.graph().edges().to_vec(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            GraphInput::Undirected(_) => "undirected",
            GraphInput::Directed(_) => "directed",
            GraphInput::Signed(_) => "signed",
        }
    }

    pub fn incidence(&self) -> lawrence_core::Result<RatMatrix> {
        use lawrence_core::graphs::{incidence, incidence_directed, incidence_signed};
        match self {
            GraphInput::Undirected(g) => incidence(g),
            GraphInput::Directed(d) => incidence_directed(d),
            GraphInput::Signed(s) => incidence_signed(s),
        }
    }
}

/// `V E [undirected|directed|signed]`, then `E` lines `u v [+|-]`, 1-based.
pub fn parse_graph(text: &str) -> Result<GraphInput, FormatError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| FormatError::Truncated("missing `V E` header".into()))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    let (v, e, kind) = match toks[..] {
        [v, e] => (v, e, "undirected"),
        [v, e, k] => (v, e, k),
        _ => return Err(syntax(hl, "header must be `V E [undirected|directed|signed]`")),
    };
    if !matches!(kind, "undirected" | "directed" | "signed") {
        return Err(syntax(hl, format!("unknown graph kind `{kind}`")));
    }
    let (v, e) = (parse_usize(v, hl, "vertex count")?, parse_usize(e, hl, "edge count")?);
    let mut edges = Vec::with_capacity(e);
    let mut signs = Vec::with_capacity(e);
    for k in 0..e {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| FormatError::Truncated(format!("expected {e} edges, found {k}")))?;
        let toks: Vec<&str> = line.split_whitespace().collect();
        let (a, b, sign) = match (kind, &toks[..]) {
            ("signed", [a, b, s]) => (a, b, Some(*s)),
            ("signed", _) => return Err(syntax(ln, "signed edges are `u v +` or `u v -`")),
            (_, [a, b]) => (a, b, None),
            _ => return Err(syntax(ln, "edges are `u v`")),
        };
        let endpoint = |t: &str| -> Result<usize, FormatError> {
            let x = parse_usize(t, ln, "vertex")?;
            if x == 0 || x > v {
                return Err(syntax(ln, format!("vertex {x} outside 1..={v}")));
            }
            Ok(x - 1)
        };
        edges.push((endpoint(a)?, endpoint(b)?));
        match sign {
            Some("+") => signs.push(Sign::Plus),
            Some("-") => signs.push(Sign::Minus),
            Some(s) => return Err(syntax(ln, format!("bad sign `{s}`"))),
            None => {}
        }
    }
    if let Some((ln, _)) = lines.next() {
        return Err(syntax(ln, "trailing content after the last edge"));
    }
    Ok(match kind {
        "undirected" => GraphInput::Undirected(Graph::new(v, edges)?),
        "directed" => GraphInput::Directed(DiGraph::new(v, edges)?),
        _ => GraphInput::Signed(SignedGraph::new(Graph::new(v, edges)?, signs)?),
    })
}

/// `n`, then one facet per line as 1-based indices.
pub fn parse_complex(text: &str) -> Result<SimplicialComplex, FormatError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| FormatError::Truncated("missing ground size".into()))?;
    let n = parse_usize(header, hl, "ground size")?;
    let mut facets = Vec::new();
    for (ln, line) in lines {
        let mut f = Vec::new();
        for t in line.split_whitespace() {
            let i = parse_usize(t, ln, "index")?;
            if i == 0 || i > n {
                return Err(syntax(ln, format!("index {i} outside 1..={n}")));
            }
            f.push(i - 1);
        }
        facets.push(f);
    }
    Ok(SimplicialComplex::new(n, facets)?)
}

/// Inverse of [`parse_graph`].
pub fn write_graph(g: &GraphInput) -> String {
    let edges = g.edges();
    let n = match g {
        GraphInput::Undirected(g) => g.vertex_count(),
        GraphInput::Directed(d) => d.underlying().vertex_count(),
        GraphInput::Signed(s) => s.graph().vertex_count(),
    };
    let mut out = format!("{n} {} {}\n", edges.len(), g.kind());
    for (k, (a, b)) in edges.iter().enumerate() {
        out.push_str(&format!("{} {}", a + 1, b + 1));
        if let GraphInput::Signed(s) = g {
            out.push_str(match s.signs()[k] {
                Sign::Plus => " +",
                Sign::Minus => " -",
            });
        }
        out.push('\n');
    }
    out
}

/// Inverse of [`parse_complex`].
pub fn write_complex(c: &SimplicialComplex) -> String {
    let mut out = format!("{}\n", c.ground_size());
    for f in c.facets() {
        let idx: Vec<String> = f.iter().map(|i| (i + 1).to_string()).collect();
        out.push_str(&idx.join(" "));
        out.push('\n');
    }
    out
}
