//! Circuits of an undirected incidence matrix from the cycle structure of
//! the graph: even cycles, two odd cycles meeting in one vertex, and two
//! disjoint odd cycles joined by a path.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::Graph;
use crate::error::{Error, Result};

pub const DEFAULT_CYCLE_CAP: usize = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CircuitClass {
    EvenCycle,
    SharedVertexOddPair,
    PathJoinedOddPair,
}

impl CircuitClass {
    pub fn as_str(self) -> &'static str {
        match self {
            CircuitClass::EvenCycle => "even-cycle",
            CircuitClass::SharedVertexOddPair => "shared-vertex-odd-pair",
            CircuitClass::PathJoinedOddPair => "path-joined-odd-pair",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct TaxonomyEntry {
    /// Sorted edge indices.
    pub support: Vec<usize>,
    pub class: CircuitClass,
}

/// A simple cycle as sorted edge indices and its vertex set.
#[derive(Clone, Debug)]
struct Cycle {
    edges: Vec<usize>,
    vertices: Vec<usize>,
}

/// All simple cycles (including 2-cycles from parallel edges) as sorted
/// edge-index lists, in lexicographic order. Fails past `cap` cycles.
pub fn simple_cycles(g: &Graph, cap: usize) -> Result<Vec<Vec<usize>>> {
    Ok(cycles(g, cap)?.into_iter().map(|c| c.edges).collect())
}

fn cycles(g: &Graph, cap: usize) -> Result<Vec<Cycle>> {
    let adj = g.adjacency();
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut out = Vec::new();
    let n = g.vertex_count();
    // each cycle is rooted at its smallest vertex
    for s in 0..n {
        let mut on_path = vec![false; n];
        on_path[s] = true;
        let mut path_v = vec![s];
        let mut path_e = Vec::new();
        extend(&adj, s, &mut on_path, &mut path_v, &mut path_e, &mut found, &mut out, cap)?;
    }
    out.sort_by(|a: &Cycle, b: &Cycle| a.edges.cmp(&b.edges));
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn extend(
    adj: &[Vec<(usize, usize)>],
    s: usize,
    on_path: &mut [bool],
    path_v: &mut Vec<usize>,
    path_e: &mut Vec<usize>,
    found: &mut BTreeSet<Vec<usize>>,
    out: &mut Vec<Cycle>,
    cap: usize,
) -> Result<()> {
    let v = *path_v.last().unwrap();
    for &(w, k) in &adj[v] {
        if w == s && !path_e.is_empty() && path_e[0] != k {
            let mut edges = path_e.clone();
            edges.push(k);
            edges.sort_unstable();
            if found.insert(edges.clone()) {
                if found.len() > cap {
                    return Err(Error::cap("cycle enumeration", found.len(), cap));
                }
                let mut vertices = path_v.clone();
                vertices.sort_unstable();
                out.push(Cycle { edges, vertices });
            }
        } else if w > s && !on_path[w] {
            on_path[w] = true;
            path_v.push(w);
            path_e.push(k);
            extend(adj, s, on_path, path_v, path_e, found, out, cap)?;
            path_e.pop();
            path_v.pop();
            on_path[w] = false;
        }
    }
    Ok(())
}

fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().copied().filter(|x| b.binary_search(x).is_ok()).collect()
}

fn union(parts: &[&[usize]]) -> Vec<usize> {
    let set: BTreeSet<usize> = parts.iter().flat_map(|p| p.iter().copied()).collect();
    set.into_iter().collect()
}

/// Edge sets of paths from `from` to `to` whose internal vertices avoid
/// `blocked`.
fn joining_paths(g: &Graph, from: &[usize], to: &[usize], blocked: &[bool], cap: usize) -> Result<Vec<Vec<usize>>> {
    let adj = g.adjacency();
    let mut out = Vec::new();
    let mut visited = vec![false; g.vertex_count()];
    let mut edges = Vec::new();
    for &a in from {
        walk(&adj, a, to, blocked, &mut visited, &mut edges, &mut out, cap)?;
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn walk(
    adj: &[Vec<(usize, usize)>],
    v: usize,
    to: &[usize],
    blocked: &[bool],
    visited: &mut [bool],
    edges: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    cap: usize,
) -> Result<()> {
    visited[v] = true;
    for &(w, k) in &adj[v] {
        if visited[w] {
            continue;
        }
        if to.binary_search(&w).is_ok() {
            let mut p = edges.clone();
            p.push(k);
            out.push(p);
            if out.len() > cap {
                return Err(Error::cap("path enumeration", out.len(), cap));
            }
        } else if !blocked[w] {
            edges.push(k);
            walk(adj, w, to, blocked, visited, edges, out, cap)?;
            edges.pop();
        }
    }
    visited[v] = false;
    Ok(())
}

/// Predicted circuit supports of the incidence matrix of `g`, each tagged
/// with its class, sorted by support.
pub fn circuit_taxonomy(g: &Graph, cap: usize) -> Result<Vec<TaxonomyEntry>> {
    let all = cycles(g, cap)?;
    let mut out: Vec<TaxonomyEntry> = Vec::new();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut push = |support: Vec<usize>, class| {
        if seen.insert(support.clone()) {
            out.push(TaxonomyEntry { support, class });
        }
    };
    let (even, odd): (Vec<&Cycle>, Vec<&Cycle>) = all.iter().partition(|c| c.edges.len() % 2 == 0);
    for c in even {
        push(c.edges.clone(), CircuitClass::EvenCycle);
    }
    let mut blocked = vec![false; g.vertex_count()];
    for (i, c1) in odd.iter().enumerate() {
        for c2 in &odd[i + 1..] {
            let common = intersect(&c1.vertices, &c2.vertices);
            match common.len() {
                1 => push(union(&[&c1.edges, &c2.edges]), CircuitClass::SharedVertexOddPair),
                0 => {
                    for &v in c1.vertices.iter().chain(&c2.vertices) {
                        blocked[v] = true;
                    }
                    for p in joining_paths(g, &c1.vertices, &c2.vertices, &blocked, cap)? {
                        push(union(&[&c1.edges, &c2.edges, &p]), CircuitClass::PathJoinedOddPair);
                    }
                    for &v in c1.vertices.iter().chain(&c2.vertices) {
                        blocked[v] = false;
                    }
                }
                _ => {}
            }
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::circuits;
    use crate::graphs::incidence;

    fn supports(g: &Graph) -> Vec<Vec<usize>> {
        let mut s: Vec<Vec<usize>> = circuits(&incidence(g).unwrap()).iter().map(|c| c.support().to_vec()).collect();
        s.sort();
        s
    }

    fn predicted(g: &Graph) -> Vec<Vec<usize>> {
        let mut s: Vec<Vec<usize>> = circuit_taxonomy(g, DEFAULT_CYCLE_CAP).unwrap().into_iter().map(|e| e.support).collect();
        s.sort();
        s
    }

    #[test]
    fn triangle_has_none() {
        assert!(circuit_taxonomy(&Graph::cycle(3), DEFAULT_CYCLE_CAP).unwrap().is_empty());
        assert_eq!(simple_cycles(&Graph::cycle(3), 10).unwrap().len(), 1);
    }

    #[test]
    fn k23_has_three_four_cycles() {
        let t = circuit_taxonomy(&Graph::complete_bipartite(2, 3), DEFAULT_CYCLE_CAP).unwrap();
        assert_eq!(t.len(), 3);
        assert!(t.iter().all(|e| e.class == CircuitClass::EvenCycle && e.support.len() == 4));
    }

    #[test]
    fn bowtie() {
        let g = Graph::new(5, vec![(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        let t = circuit_taxonomy(&g, DEFAULT_CYCLE_CAP).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].class, CircuitClass::SharedVertexOddPair);
        assert_eq!(t[0].support.len(), 6);
        assert_eq!(predicted(&g), supports(&g));
    }

    #[test]
    fn handcuff() {
        let g = Graph::new(7, vec![(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 4)]).unwrap();
        let t = circuit_taxonomy(&g, DEFAULT_CYCLE_CAP).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].class, CircuitClass::PathJoinedOddPair);
        assert_eq!(t[0].support, (0..8).collect::<Vec<_>>());
        assert_eq!(predicted(&g), supports(&g));
        // the path edges carry ±2
        let c = &circuits(&incidence(&g).unwrap())[0];
        assert_eq!(c.vector().iter().filter(|x| x.abs() == 2).count(), 2);
    }

    #[test]
    fn parallel_edges_make_two_cycles() {
        let g = Graph::new(3, vec![(0, 1), (0, 1), (1, 2)]).unwrap();
        assert_eq!(simple_cycles(&g, 10).unwrap(), vec![vec![0, 1]]);
        assert_eq!(predicted(&g), supports(&g));
    }

    #[test]
    fn complete_graphs_match_kernel() {
        for n in 3..=5 {
            let mut edges = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    edges.push((i, j));
                }
            }
            let g = Graph::new(n, edges).unwrap();
            assert_eq!(predicted(&g), supports(&g), "K{n}");
        }
    }

    #[test]
    fn cap_is_enforced() {
        let g = Graph::complete_bipartite(3, 3);
        assert!(matches!(simple_cycles(&g, 5), Err(Error::CapExceeded { .. })));
    }
}
