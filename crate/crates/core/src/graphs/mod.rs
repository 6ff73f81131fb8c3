//! Undirected multigraphs, directed graphs and signed graphs as sources of
//! totally unimodular matrices.
//!
//! Vertices are `0..n` internally; file formats in the `lawrence` crate are
//! 1-based.

mod taxonomy;

pub use taxonomy::{circuit_taxonomy, simple_cycles, CircuitClass, TaxonomyEntry, DEFAULT_CYCLE_CAP};

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Hypothesis, Result};
use crate::exactlin::int::{with_fallback, Int};
use crate::exactlin::{determinant, RatMatrix, Rational};
use crate::matroid::{tutte_dc, GroundOrder, Matroid, TuttePoly};

/// An undirected multigraph without loops.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

fn check_edges(n: usize, edges: &[(usize, usize)]) -> Result<()> {
    for &(u, v) in edges {
        if u >= n || v >= n {
            return Err(Error::Invalid(alloc::format!("edge ({u}, {v}) out of range")));
        }
        if u == v {
            return Err(Error::Invalid(alloc::format!("loop at vertex {u}")));
        }
    }
    Ok(())
}

impl Graph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        check_edges(n, &edges)?;
        Ok(Graph { n, edges })
    }

    /// The cycle `0 - 1 - … - (n-1) - 0`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 2, "a cycle needs two vertices");
        Graph {
            n,
            edges: (0..n).map(|i| (i, (i + 1) % n)).collect(),
        }
    }

    /// The path `0 - 1 - … - (n-1)`.
    pub fn path(n: usize) -> Self {
        Graph {
            n,
            edges: (1..n).map(|i| (i - 1, i)).collect(),
        }
    }

    /// Left vertices `0..m1`, right vertices `m1..m1+m2`; edge `ij` has index
    /// `i*m2 + j`.
    pub fn complete_bipartite(m1: usize, m2: usize) -> Self {
        let mut edges = Vec::with_capacity(m1 * m2);
        for i in 0..m1 {
            for j in 0..m2 {
                edges.push((i, m1 + j));
            }
        }
        Graph { n: m1 + m2, edges }
    }

    /// Vertices of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + self.n, v + self.n)));
        Graph {
            n: self.n + other.n,
            edges,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// `adj[v]` lists `(neighbour, edge index)`.
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.n];
        for (k, &(u, v)) in self.edges.iter().enumerate() {
            adj[u].push((v, k));
            adj[v].push((u, k));
        }
        adj
    }

    /// Connected components as sorted vertex lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &(w, _) in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiGraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl DiGraph {
    pub fn new(n: usize, arcs: Vec<(usize, usize)>) -> Result<Self> {
        check_edges(n, &arcs)?;
        Ok(DiGraph { n, arcs })
    }

    /// Orient every edge `(u, v)` of `g` from `u` to `v`, or the other way
    /// where `flip[k]` is set.
    pub fn orient(g: &Graph, flip: &[bool]) -> Self {
        let arcs = g
            .edges
            .iter()
            .enumerate()
            .map(|(k, &(u, v))| if flip.get(k).copied().unwrap_or(false) { (v, u) } else { (u, v) })
            .collect();
        DiGraph { n: g.n, arcs }
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn underlying(&self) -> Graph {
        Graph {
            n: self.n,
            edges: self.arcs.clone(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedGraph {
    graph: Graph,
    signs: Vec<Sign>,
}

impl SignedGraph {
    pub fn new(graph: Graph, signs: Vec<Sign>) -> Result<Self> {
        if signs.len() != graph.edge_count() {
            return Err(Error::DimensionMismatch {
                expected: graph.edge_count(),
                found: signs.len(),
            });
        }
        Ok(SignedGraph { graph, signs })
    }

    /// Every edge with the same sign.
    pub fn uniform(graph: Graph, sign: Sign) -> Self {
        let signs = vec![sign; graph.edge_count()];
        SignedGraph { graph, signs }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }
}

fn int(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

fn matrix_from_columns(n: usize, cols: impl Iterator<Item = [(usize, i64); 2]>, m: usize) -> RatMatrix {
    let mut a = RatMatrix::zeros(n, m).expect("graph has a vertex and an edge");
    for (k, entries) in cols.enumerate() {
        for (v, x) in entries {
            a.set(v, k, int(x));
        }
    }
    a
}

fn require_nonempty(n: usize, m: usize) -> Result<()> {
    if n == 0 || m == 0 {
        return Err(Error::Invalid("graph needs at least one vertex and one edge".into()));
    }
    Ok(())
}

/// Vertex–edge 0/1 incidence matrix.
pub fn incidence(g: &Graph) -> Result<RatMatrix> {
    require_nonempty(g.n, g.edge_count())?;
    Ok(matrix_from_columns(
        g.n,
        g.edges.iter().map(|&(u, v)| [(u, 1), (v, 1)]),
        g.edge_count(),
    ))
}

/// `+1` at the tail and `-1` at the head of each arc.
pub fn incidence_directed(d: &DiGraph) -> Result<RatMatrix> {
    require_nonempty(d.n, d.arcs.len())?;
    Ok(matrix_from_columns(
        d.n,
        d.arcs.iter().map(|&(u, v)| [(u, 1), (v, -1)]),
        d.arcs.len(),
    ))
}

/// Negative edges get `(1, 1)`; positive edges get `+1` at the smaller
/// endpoint and `-1` at the larger.
pub fn incidence_signed(s: &SignedGraph) -> Result<RatMatrix> {
    let g = &s.graph;
    require_nonempty(g.n, g.edge_count())?;
    Ok(matrix_from_columns(
        g.n,
        g.edges.iter().zip(&s.signs).map(|(&(u, v), &sg)| {
            let (a, b) = (u.min(v), u.max(v));
            match sg {
                Sign::Minus => [(a, 1), (b, 1)],
                Sign::Plus => [(a, 1), (b, -1)],
            }
        }),
        g.edge_count(),
    ))
}

/// Outcome of a bipartiteness test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bipartition {
    /// `side[v]` is the colour of `v`.
    Coloring(Vec<bool>),
    /// Edge indices of an odd closed walk that is a simple cycle.
    OddCycle(Vec<usize>),
}

impl Bipartition {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartition::Coloring(_))
    }
}

/// Breadth-first 2-colouring, with an odd cycle as witness on failure.
pub fn bipartition(g: &Graph) -> Bipartition {
    let adj = g.adjacency();
    let mut side: Vec<Option<bool>> = vec![None; g.n];
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; g.n];
    let mut depth = vec![0usize; g.n];
    for s in 0..g.n {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &(w, k) in &adj[v] {
                match side[w] {
                    None => {
                        side[w] = Some(!side[v].unwrap());
                        parent[w] = Some((v, k));
                        depth[w] = depth[v] + 1;
                        queue.push_back(w);
                    }
                    Some(c) if c == side[v].unwrap() => {
                        return Bipartition::OddCycle(close_cycle(&parent, &depth, v, w, k));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    Bipartition::Coloring(side.into_iter().map(|c| c.unwrap()).collect())
}

/// Tree paths from `a` and `b` up to their meeting point, plus edge `k`.
fn close_cycle(parent: &[Option<(usize, usize)>], depth: &[usize], a: usize, b: usize, k: usize) -> Vec<usize> {
    let (mut a, mut b) = (a, b);
    let mut edges = vec![k];
    while a != b {
        if depth[a] >= depth[b] {
            let (p, e) = parent[a].expect("not the root");
            edges.push(e);
            a = p;
        } else {
            let (p, e) = parent[b].expect("not the root");
            edges.push(e);
            b = p;
        }
    }
    edges.sort_unstable();
    edges
}

pub fn is_bipartite(g: &Graph) -> bool {
    bipartition(g).is_bipartite()
}

/// Vertex signs `ς` with `ς(u) δ(e) ς(v) = +` on every edge, if any.
pub fn balancing_switch(s: &SignedGraph) -> Option<Vec<Sign>> {
    let g = &s.graph;
    let adj = g.adjacency();
    let mut sigma: Vec<Option<Sign>> = vec![None; g.n];
    for root in 0..g.n {
        if sigma[root].is_some() {
            continue;
        }
        sigma[root] = Some(Sign::Plus);
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            let sv = sigma[v].unwrap();
            for &(w, k) in &adj[v] {
                let want = sv.times(s.signs[k]);
                match sigma[w] {
                    None => {
                        sigma[w] = Some(want);
                        stack.push(w);
                    }
                    Some(x) if x != want => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(sigma.into_iter().map(|x| x.unwrap()).collect())
}

/// Every cycle has positive sign product.
pub fn is_balanced(s: &SignedGraph) -> bool {
    balancing_switch(s).is_some()
}

/// `δ^ς(e) = ς(u) δ(e) ς(v)`.
pub fn switch(s: &SignedGraph, sigma: &[Sign]) -> Result<SignedGraph> {
    if sigma.len() != s.graph.n {
        return Err(Error::DimensionMismatch {
            expected: s.graph.n,
            found: sigma.len(),
        });
    }
    let signs = s
        .graph
        .edges
        .iter()
        .zip(&s.signs)
        .map(|(&(u, v), &d)| sigma[u].times(d).times(sigma[v]))
        .collect();
    Ok(SignedGraph {
        graph: s.graph.clone(),
        signs,
    })
}

/// Number of spanning forests: the product over components of the
/// matrix-tree determinant.
pub fn spanning_forest_count(g: &Graph) -> BigInt {
    let mut total = BigInt::one();
    for comp in g.components() {
        if comp.len() < 2 {
            continue;
        }
        let mut index = vec![usize::MAX; g.n];
        for (k, &v) in comp.iter().enumerate() {
            index[v] = k;
        }
        // reduced Laplacian: drop the first vertex of the component
        let m = comp.len() - 1;
        let mut lap = vec![vec![BigInt::from(0); m]; m];
        for &(u, v) in &g.edges {
            if index[u] == usize::MAX {
                continue;
            }
            let (a, b) = (index[u], index[v]);
            for (x, y) in [(a, b), (b, a)] {
                if x > 0 {
                    lap[x - 1][x - 1] += 1;
                    if y > 0 {
                        lap[x - 1][y - 1] -= 1;
                    }
                }
            }
        }
        let det = with_fallback!(&lap, |l: T| determinant::<T>(l).map(|d| d.to_big()));
        total *= det;
    }
    total
}

/// Which ground-set order to use for activity computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeOrder {
    /// By `(min endpoint, max endpoint, index)`.
    Natural,
    /// Edge indices as given.
    File,
    /// The reverse: an edge with a smaller first endpoint is larger.
    Example45,
}

pub fn edge_order(edges: &[(usize, usize)], order: EdgeOrder) -> GroundOrder {
    let key = |k: usize| {
        let (u, v) = edges[k];
        (u.min(v), u.max(v))
    };
    let mut seq: Vec<usize> = (0..edges.len()).collect();
    match order {
        EdgeOrder::File => {}
        EdgeOrder::Natural => seq.sort_by_key(|&k| (key(k), k)),
        EdgeOrder::Example45 => seq.sort_by(|&a, &b| key(b).cmp(&key(a)).then(a.cmp(&b))),
    }
    GroundOrder::from_sequence(&seq).expect("a sorted index list is a permutation")
}

/// Degree and ML degree of the Lawrence lift of a graph's incidence matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphReport {
    pub degree: u128,
    /// Absent when the ML degree hypothesis fails; `reason` says which.
    pub mldeg: Option<u128>,
    pub reason: Option<Hypothesis>,
    pub tutte: TuttePoly,
}

fn report(a: &RatMatrix, bipartite: bool) -> GraphReport {
    let tutte = tutte_dc(&Matroid::new(a));
    GraphReport {
        degree: tutte.bases_count(),
        mldeg: bipartite.then(|| tutte.external_zero_count()),
        reason: (!bipartite).then_some(Hypothesis::Bipartite),
        tutte,
    }
}

/// Bipartite graphs get both values. A non-bipartite graph whose incidence
/// matrix has independent columns has degree 1 and no ML degree claim; any
/// other non-bipartite graph fails.
pub fn graph_degree_mldeg(g: &Graph) -> Result<GraphReport> {
    let a = incidence(g)?;
    if is_bipartite(g) {
        return Ok(report(&a, true));
    }
    let m = Matroid::new(&a);
    if m.rank() == g.edge_count() {
        return Ok(GraphReport {
            degree: 1,
            mldeg: None,
            reason: Some(Hypothesis::Bipartite),
            tutte: TuttePoly::monomial(m.rank(), 0, 1),
        });
    }
    Err(Error::HypothesisFailed {
        which: Hypothesis::Bipartite,
    })
}

/// Directed incidence matrices are always totally unimodular; the ML degree
/// needs a bipartite underlying graph.
pub fn digraph_degree_mldeg(d: &DiGraph) -> Result<GraphReport> {
    let a = incidence_directed(d)?;
    Ok(report(&a, is_bipartite(&d.underlying())))
}

/// Needs a balanced signed graph; the ML degree needs a bipartite
/// underlying graph.
pub fn signed_degree_mldeg(s: &SignedGraph) -> Result<GraphReport> {
    if !is_balanced(s) {
        return Err(Error::HypothesisFailed {
            which: Hypothesis::Balanced,
        });
    }
    let a = incidence_signed(s)?;
    Ok(report(&a, is_bipartite(&s.graph)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::fixtures;
    use crate::exactlin::{is_totally_unimodular, TuOptions};

    fn tu(a: &RatMatrix) -> bool {
        is_totally_unimodular(a, TuOptions::default()).unwrap()
    }

    fn triangle() -> Graph {
        Graph::cycle(3)
    }

    #[test]
    fn incidence_matrices() {
        assert_eq!(incidence(&triangle()).unwrap(), fixtures::triangle());
        assert_eq!(incidence(&Graph::complete_bipartite(2, 3)).unwrap(), fixtures::complete_bipartite(2, 3));
        let edge = Graph::new(2, vec![(0, 1)]).unwrap();
        assert_eq!(incidence(&edge).unwrap(), RatMatrix::from_rows(&[[1], [1]]).unwrap());
        let arc = DiGraph::new(2, vec![(0, 1)]).unwrap();
        assert_eq!(incidence_directed(&arc).unwrap(), RatMatrix::from_rows(&[[1], [-1]]).unwrap());
    }

    #[test]
    fn bad_graphs() {
        assert!(Graph::new(2, vec![(0, 2)]).is_err());
        assert!(Graph::new(2, vec![(1, 1)]).is_err());
        assert!(incidence(&Graph::new(3, vec![]).unwrap()).is_err());
        assert!(SignedGraph::new(triangle(), vec![Sign::Plus]).is_err());
    }

    #[test]
    fn signed_incidence_conventions() {
        let neg = SignedGraph::uniform(Graph::cycle(4), Sign::Minus);
        assert_eq!(incidence_signed(&neg).unwrap(), incidence(&Graph::cycle(4)).unwrap());
        // all positive: the orientation from smaller to larger endpoint
        let g = Graph::cycle(4);
        let flip: Vec<bool> = g.edges().iter().map(|&(u, v)| u > v).collect();
        let pos = SignedGraph::uniform(g.clone(), Sign::Plus);
        assert_eq!(incidence_signed(&pos).unwrap(), incidence_directed(&DiGraph::orient(&g, &flip)).unwrap());
    }

    #[test]
    fn bipartite_witnesses() {
        match bipartition(&Graph::cycle(5)) {
            Bipartition::OddCycle(c) => assert_eq!(c, vec![0, 1, 2, 3, 4]),
            other => panic!("{other:?}"),
        }
        let Bipartition::Coloring(side) = bipartition(&Graph::cycle(6)) else {
            panic!("even cycle is bipartite")
        };
        for &(u, v) in Graph::cycle(6).edges() {
            assert_ne!(side[u], side[v]);
        }
        // two triangles joined by a path: witness is a triangle
        let g = Graph::new(7, vec![(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 4)]).unwrap();
        let Bipartition::OddCycle(c) = bipartition(&g) else { panic!() };
        assert_eq!(c.len() % 2, 1);
    }

    #[test]
    fn balance() {
        let k22 = Graph::complete_bipartite(2, 2);
        assert!(is_balanced(&SignedGraph::uniform(k22, Sign::Plus)));
        assert!(is_balanced(&SignedGraph::uniform(Graph::cycle(4), Sign::Minus)));
        let t = SignedGraph::new(triangle(), vec![Sign::Plus, Sign::Plus, Sign::Minus]).unwrap();
        assert!(!is_balanced(&t));
        // parallel edges with opposite signs form a negative 2-cycle
        let p = SignedGraph::new(Graph::new(2, vec![(0, 1), (0, 1)]).unwrap(), vec![Sign::Plus, Sign::Minus]).unwrap();
        assert!(!is_balanced(&p));
        assert!(!tu(&incidence_signed(&p).unwrap()));
    }

    #[test]
    fn switching_is_an_involution() {
        let s = SignedGraph::new(Graph::cycle(4), vec![Sign::Plus, Sign::Minus, Sign::Minus, Sign::Plus]).unwrap();
        let sigma = [Sign::Minus, Sign::Plus, Sign::Minus, Sign::Minus];
        let t = switch(&s, &sigma).unwrap();
        assert_eq!(t.graph(), s.graph());
        assert_eq!(switch(&t, &sigma).unwrap(), s);
        assert_eq!(is_balanced(&t), is_balanced(&s));
        let fix = balancing_switch(&s).unwrap();
        assert!(switch(&s, &fix).unwrap().signs().iter().all(|&x| x == Sign::Plus));
    }

    #[test]
    fn forests() {
        assert_eq!(spanning_forest_count(&Graph::complete_bipartite(2, 3)), BigInt::from(12));
        let two = Graph::complete_bipartite(3, 2).disjoint_union(&Graph::complete_bipartite(3, 2));
        assert_eq!(spanning_forest_count(&two), BigInt::from(144));
        assert_eq!(spanning_forest_count(&Graph::path(5)), BigInt::one());
        let doubled = Graph::new(2, vec![(0, 1), (0, 1), (0, 1)]).unwrap();
        assert_eq!(spanning_forest_count(&doubled), BigInt::from(3));
    }

    #[test]
    fn example_46_values() {
        let r = graph_degree_mldeg(&Graph::cycle(4)).unwrap();
        assert_eq!((r.degree, r.mldeg), (4, Some(3)));
        let r = graph_degree_mldeg(&Graph::path(4)).unwrap();
        assert_eq!((r.degree, r.mldeg), (1, Some(1)));
        let r = graph_degree_mldeg(&Graph::complete_bipartite(2, 3)).unwrap();
        assert_eq!((r.degree, r.mldeg), (12, Some(7)));
        for n in [4, 6, 8] {
            let r = graph_degree_mldeg(&Graph::cycle(n)).unwrap();
            assert_eq!((r.degree, r.mldeg), (n as u128, Some(n as u128 - 1)));
        }
    }

    #[test]
    fn odd_graphs() {
        let r = graph_degree_mldeg(&Graph::cycle(5)).unwrap();
        assert_eq!((r.degree, r.mldeg, r.reason), (1, None, Some(Hypothesis::Bipartite)));
        let bowtie = Graph::new(5, vec![(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        assert_eq!(
            graph_degree_mldeg(&bowtie),
            Err(Error::HypothesisFailed { which: Hypothesis::Bipartite })
        );
    }

    #[test]
    fn directed_and_signed_reports() {
        let g = Graph::cycle(6);
        let d = DiGraph::orient(&g, &[true, false, true, true, false, false]);
        let r = digraph_degree_mldeg(&d).unwrap();
        assert_eq!((r.degree, r.mldeg), (6, Some(5)));
        let d3 = DiGraph::orient(&triangle(), &[]);
        let r = digraph_degree_mldeg(&d3).unwrap();
        assert_eq!((r.degree, r.mldeg, r.reason), (3, None, Some(Hypothesis::Bipartite)));
        let unbalanced = SignedGraph::new(triangle(), vec![Sign::Plus, Sign::Plus, Sign::Minus]).unwrap();
        assert!(signed_degree_mldeg(&unbalanced).is_err());
    }

    #[test]
    fn edge_orders() {
        let edges = [(1, 2), (0, 2), (0, 1)];
        let nat = edge_order(&edges, EdgeOrder::Natural);
        assert_eq!(nat.min_of(&[0, 1, 2]), Some(2));
        let file = edge_order(&edges, EdgeOrder::File);
        assert_eq!(file.min_of(&[0, 1, 2]), Some(0));
        let ex = edge_order(&edges, EdgeOrder::Example45);
        assert_eq!(ex.min_of(&[0, 1, 2]), Some(0));
        assert!(ex.less(1, 2));
    }
}
