//! Undirected simple graphs with dense all-pairs shortest-path matrices.
//!
//! Vertices are `0..n-1` internally; all file formats are 1-indexed.

use crate::{Error, Result};
use std::collections::VecDeque;

/// Distance value for unreachable pairs.
pub const INFINITY: u32 = u32::MAX;

/// An undirected simple graph in canonical form: no self-loops, no
/// parallel edges, neighbor lists sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Parallel edges are deduplicated,
    /// self-loops and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let mut edge_count = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            edge_count += list.len();
        }
        Ok(Graph {
            n,
            adjacency,
            edge_count: edge_count / 2,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Sorted open neighborhood of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Iterates over all edges as pairs `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adjacency[u]
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Subgraph induced by `keep` (ascending). Returns the graph plus the
    /// map from new ids to original ids.
    pub fn induced(&self, keep: &[usize]) -> (Graph, Vec<usize>) {
        let mut index = vec![usize::MAX; self.n];
        for (new, &old) in keep.iter().enumerate() {
            index[old] = new;
        }
        let mut edges = Vec::new();
        for &old in keep {
            for &w in &self.adjacency[old] {
                if index[w] != usize::MAX && old < w {
                    edges.push((index[old], index[w]));
                }
            }
        }
        (
            Graph::from_edges(keep.len(), &edges).expect("induced subgraph is well-formed"),
            keep.to_vec(),
        )
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == self.n
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut components = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = components.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adjacency[u] {
                    if comp[v] == usize::MAX {
                        comp[v] = id;
                        members.push(v);
                        queue.push_back(v);
                    }
                }
            }
            members.sort_unstable();
            components.push(members);
        }
        components
    }

    /// BFS distances from `source`; `INFINITY` for unreachable vertices.
    pub fn bfs(&self, source: usize) -> Vec<u32> {
        let mut dist = vec![INFINITY; self.n];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                if dist[v] == INFINITY {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// True iff `N(v)` induces a clique.
    pub fn is_simplicial(&self, v: usize) -> bool {
        let nb = &self.adjacency[v];
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                if !self.has_edge(a, b) {
                    return false;
                }
            }
        }
        true
    }

    /// All vertices whose neighborhood is a clique.
    pub fn simplicial_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.is_simplicial(v)).collect()
    }

    /// Partitions `V` into maximal classes of mutual false twins
    /// (`N(u) = N(v)`) and, separately, true twins (`N[u] = N[v]`).
    /// Both partitions include singleton classes and are sorted.
    pub fn twin_classes(&self) -> TwinClasses {
        let mut by_open: std::collections::HashMap<Vec<usize>, Vec<usize>> = Default::default();
        let mut by_closed: std::collections::HashMap<Vec<usize>, Vec<usize>> = Default::default();
        for v in 0..self.n {
            by_open
                .entry(self.adjacency[v].clone())
                .or_default()
                .push(v);
            let mut closed = self.adjacency[v].clone();
            closed.push(v);
            closed.sort_unstable();
            by_closed.entry(closed).or_default().push(v);
        }
        let collect = |map: std::collections::HashMap<Vec<usize>, Vec<usize>>| {
            let mut classes: Vec<Vec<usize>> = map.into_values().collect();
            for class in &mut classes {
                class.sort_unstable();
            }
            classes.sort();
            classes
        };
        TwinClasses {
            false_twins: collect(by_open),
            true_twins: collect(by_closed),
        }
    }

    // Small named graphs, used all over the tests and examples.

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    /// Star `K_{1,leaves}` with the center as vertex 0.
    pub fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::from_edges(leaves + 1, &edges).unwrap()
    }
}

/// The two twin partitions of a graph.
#[derive(Debug, Clone)]
pub struct TwinClasses {
    pub false_twins: Vec<Vec<usize>>,
    pub true_twins: Vec<Vec<usize>>,
}

impl TwinClasses {
    /// Classes of the requested kind with at least two members.
    pub fn nontrivial(&self, kind: TwinKind) -> Vec<&Vec<usize>> {
        let classes = match kind {
            TwinKind::False => &self.false_twins,
            TwinKind::True => &self.true_twins,
        };
        classes.iter().filter(|c| c.len() >= 2).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwinKind {
    False,
    True,
}

/// Dense hop-distance matrix with the diameter of the finite part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
    diameter: u32,
}

impl DistanceMatrix {
    pub fn dist(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Largest finite entry.
    pub fn max_finite(&self) -> u32 {
        self.diameter
    }

    pub fn is_finite(&self) -> bool {
        self.dist.iter().all(|&d| d != INFINITY)
    }

    /// Diameter of a connected graph; errors on disconnected input.
    pub fn diameter(&self) -> Result<u32> {
        if self.is_finite() {
            Ok(self.diameter)
        } else {
            Err(Error::Disconnected("infinite diameter"))
        }
    }
}

/// Exact hop distances via one BFS per vertex; unreachable pairs get
/// [`INFINITY`].
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.vertex_count();
    let mut dist = Vec::with_capacity(n * n);
    let mut diameter = 0;
    for v in 0..n {
        let row = g.bfs(v);
        for &d in &row {
            if d != INFINITY && d > diameter {
                diameter = d;
            }
        }
        dist.extend(row);
    }
    DistanceMatrix { n, dist, diameter }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_distances() {
        let g = Graph::path(3);
        let dm = all_pairs_distances(&g);
        assert_eq!(dm.dist(0, 2), 2);
        assert_eq!(dm.diameter().unwrap(), 2);
    }

    #[test]
    fn clique_distances() {
        let dm = all_pairs_distances(&Graph::complete(4));
        for u in 0..4 {
            for v in 0..4 {
                assert_eq!(dm.dist(u, v), if u == v { 0 } else { 1 });
            }
        }
        assert_eq!(dm.diameter().unwrap(), 1);
    }

    #[test]
    fn disconnected_pairs_are_infinite() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let dm = all_pairs_distances(&g);
        assert_eq!(dm.dist(0, 2), INFINITY);
        assert!(dm.diameter().is_err());
    }

    #[test]
    fn connectivity() {
        assert!(Graph::path(4).is_connected());
        assert!(!Graph::from_edges(2, &[]).unwrap().is_connected());
        assert!(Graph::cycle(6).is_connected());
    }

    #[test]
    fn twin_classes_star() {
        let g = Graph::star(3);
        let tc = g.twin_classes();
        assert_eq!(tc.nontrivial(TwinKind::False), vec![&vec![1, 2, 3]]);
        assert!(tc.nontrivial(TwinKind::True).is_empty());
    }

    #[test]
    fn twin_classes_triangle() {
        let tc = Graph::complete(3).twin_classes();
        assert_eq!(tc.nontrivial(TwinKind::True), vec![&vec![0, 1, 2]]);
        assert!(tc.nontrivial(TwinKind::False).is_empty());
    }

    #[test]
    fn twin_classes_path_are_singletons() {
        let tc = Graph::path(4).twin_classes();
        assert!(tc.nontrivial(TwinKind::False).is_empty());
        assert!(tc.nontrivial(TwinKind::True).is_empty());
    }

    #[test]
    fn simplicial_examples() {
        assert_eq!(Graph::path(4).simplicial_vertices(), vec![0, 3]);
        assert!(Graph::cycle(4).simplicial_vertices().is_empty());
        assert_eq!(Graph::complete(4).simplicial_vertices(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(all_pairs_distances(&Graph::cycle(6)).diameter().unwrap(), 3);
        assert_eq!(all_pairs_distances(&Graph::complete(4)).diameter().unwrap(), 1);
        assert_eq!(all_pairs_distances(&Graph::path(5)).diameter().unwrap(), 4);
    }

    #[test]
    fn self_loop_rejected() {
        assert!(Graph::from_edges(2, &[(1, 1)]).is_err());
    }

    #[test]
    fn degree_one_vertices_are_simplicial() {
        let g = Graph::star(4);
        let simp = g.simplicial_vertices();
        for v in g.vertices() {
            if g.degree(v) == 1 {
                assert!(simp.contains(&v));
            }
        }
    }
}
