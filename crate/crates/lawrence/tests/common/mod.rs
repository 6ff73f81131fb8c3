//! Shared corpus of small matroids: graphs, directed and signed graphs, and
//! model matrices, all with at most 12 ground elements.
#![allow(dead_code)]

use lawrence::formats::GraphInput;
use lawrence_core::exactlin::RatMatrix;
use lawrence_core::graphs::{DiGraph, Graph, Sign, SignedGraph};
use lawrence_core::models::{
    hierarchical_matrix, no_three_way_matrix, quasi_independence_matrix, SimplicialComplex,
};
use lawrence_core::toric::lawrence_lift;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct Entry {
    pub name: String,
    pub matrix: RatMatrix,
    pub source: Option<GraphInput>,
}

fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new(n, edges.to_vec()).unwrap()
}

/// 1-based edge list.
fn g1(n: usize, edges: &[(usize, usize)]) -> Graph {
    g(n, &edges.iter().map(|&(a, b)| (a - 1, b - 1)).collect::<Vec<_>>())
}

pub fn example26() -> RatMatrix {
    RatMatrix::from_rows(&[
        [-1, 0, 0, 1, 1],
        [1, 1, 0, 0, 0],
        [0, -1, 1, 0, -1],
        [0, 0, -1, -1, 0],
    ])
    .unwrap()
}

/// Left vertices 1, 2 and right vertices 3, 4, 5 of the example graphs.
pub fn g2() -> Graph {
    g1(4, &[(1, 3), (1, 4), (2, 3), (2, 4)])
}

pub fn g3() -> Graph {
    g1(5, &[(1, 3), (1, 4), (1, 5), (2, 3)])
}

pub fn g4() -> Graph {
    g1(5, &[(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)])
}

pub fn bowtie() -> Graph {
    g1(5, &[(1, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 3)])
}

/// Two triangles joined by a path with `len` edges.
pub fn handcuff(len: usize) -> Graph {
    let n = 6 + len - 1;
    let mut e = vec![(0, 1), (1, 2), (2, 0)];
    for k in 0..len {
        e.push((2 + k, 3 + k));
    }
    let t = 2 + len;
    e.extend([(t, t + 1), (t + 1, t + 2), (t + 2, t)]);
    g(n, &e)
}

/// Undirected graphs, each with at most 8 vertices and 12 edges.
pub fn graphs() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = (3..=8).map(|n| (format!("C{n}"), Graph::cycle(n))).collect();
    out.extend([
        ("G2".to_string(), g2()),
        ("G3".to_string(), g3()),
        ("G4".to_string(), g4()),
        ("K4".into(), g1(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])),
        ("K4-e".into(), g1(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)])),
        ("K33".into(), Graph::complete_bipartite(3, 3)),
        ("K24".into(), Graph::complete_bipartite(2, 4)),
        ("K34".into(), Graph::complete_bipartite(3, 4)),
        ("bowtie".into(), bowtie()),
        ("handcuff1".into(), handcuff(1)),
        ("handcuff2".into(), handcuff(2)),
        (
            "prism".into(),
            g1(6, &[(1, 2), (2, 3), (3, 1), (4, 5), (5, 6), (6, 4), (1, 4), (2, 5), (3, 6)]),
        ),
        ("wheel4".into(), g1(5, &[(1, 2), (2, 3), (3, 4), (4, 1), (5, 1), (5, 2), (5, 3), (5, 4)])),
        (
            "cube".into(),
            g1(
                8,
                &[(1, 2), (2, 3), (3, 4), (4, 1), (5, 6), (6, 7), (7, 8), (8, 5), (1, 5), (2, 6), (3, 7), (4, 8)],
            ),
        ),
        ("theta".into(), g1(5, &[(1, 2), (2, 5), (1, 3), (3, 5), (1, 4), (4, 5)])),
        ("parallel".into(), g1(3, &[(1, 2), (1, 2), (2, 3), (3, 1)])),
        ("double-square".into(), g1(4, &[(1, 2), (2, 3), (3, 4), (4, 1), (1, 2)])),
        ("path5".into(), Graph::path(5)),
        ("C3+C4".into(), Graph::cycle(3).disjoint_union(&Graph::cycle(4))),
    ]);
    out
}

pub fn digraphs() -> Vec<(String, DiGraph)> {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    graphs()
        .into_iter()
        .filter(|(n, _)| ["K4", "G4", "C5", "prism", "bowtie", "handcuff1"].contains(&n.as_str()))
        .map(|(n, g)| {
            let flip: Vec<bool> = (0..g.edge_count()).map(|_| rng.random()).collect();
            (format!("{n}->"), DiGraph::orient(&g, &flip))
        })
        .collect()
}

pub fn signed_graphs() -> Vec<(String, SignedGraph)> {
    use Sign::{Minus as M, Plus as P};
    let s = |g: Graph, signs: &[Sign]| SignedGraph::new(g, signs.to_vec()).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    let mut out = vec![
        ("C4 balanced".to_string(), s(Graph::cycle(4), &[M, M, P, P])),
        ("C4 unbalanced".into(), s(Graph::cycle(4), &[M, P, P, P])),
        ("C3 all minus".into(), SignedGraph::uniform(Graph::cycle(3), M)),
        ("C3 all plus".into(), SignedGraph::uniform(Graph::cycle(3), P)),
        ("C5 one plus".into(), s(Graph::cycle(5), &[P, M, M, M, M])),
        ("bowtie mixed".into(), s(bowtie(), &[P, M, M, P, P, P])),
    ];
    for name in ["K4", "prism", "theta"] {
        let (_, g) = graphs().into_iter().find(|(n, _)| n == name).unwrap();
        let signs: Vec<Sign> = (0..g.edge_count()).map(|_| if rng.random() { P } else { M }).collect();
        out.push((format!("{name} random"), s(g, &signs)));
    }
    out
}

pub fn model_matrices() -> Vec<(String, RatMatrix)> {
    let ex54 = SimplicialComplex::new(3, vec![vec![0, 1], vec![1, 2]]).unwrap();
    let k23 = lawrence_core::graphs::incidence(&Graph::complete_bipartite(2, 3)).unwrap();
    let k22 = lawrence_core::graphs::incidence(&Graph::complete_bipartite(2, 2)).unwrap();
    vec![
        ("example26".into(), example26()),
        ("n3w 222".into(), no_three_way_matrix(2, 2, 2).unwrap()),
        ("n3w 232".into(), no_three_way_matrix(2, 3, 2).unwrap()),
        ("lift K22".into(), lawrence_lift(&k22).unwrap()),
        ("example54".into(), hierarchical_matrix(&ex54, &[3, 2, 2]).unwrap()),
        (
            "boundary3 binary".into(),
            hierarchical_matrix(&SimplicialComplex::simplex_boundary(3), &[2, 2, 2]).unwrap(),
        ),
        ("quasi K23-23".into(), quasi_independence_matrix(&k23, &[5]).unwrap()),
        ("quasi K23-13,22,23".into(), quasi_independence_matrix(&k23, &[2, 4, 5]).unwrap()),
        ("identity3".into(), RatMatrix::identity(3).unwrap()),
        ("non-unit".into(), RatMatrix::from_rows(&[[1, 2, 3, 4, 0], [0, 1, 1, 2, 1]]).unwrap()),
        ("loop".into(), RatMatrix::from_rows(&[[1, 0, 1, 0], [0, 0, 1, 1]]).unwrap()),
    ]
}

/// Everything above, as matrices.
pub fn corpus() -> Vec<Entry> {
    let mut out = Vec::new();
    for (name, g) in graphs() {
        let src = GraphInput::Undirected(g);
        out.push(Entry { name, matrix: src.incidence().unwrap(), source: Some(src) });
    }
    for (name, d) in digraphs() {
        let src = GraphInput::Directed(d);
        out.push(Entry { name, matrix: src.incidence().unwrap(), source: Some(src) });
    }
    for (name, s) in signed_graphs() {
        let src = GraphInput::Signed(s);
        out.push(Entry { name, matrix: src.incidence().unwrap(), source: Some(src) });
    }
    for (name, matrix) in model_matrices() {
        out.push(Entry { name, matrix, source: None });
    }
    for e in &out {
        assert!(e.matrix.cols() <= 12, "{} has {} columns", e.name, e.matrix.cols());
    }
    out
}
