//! Corpora for the test suites: exhaustive enumeration of connected
//! graphs up to isomorphism (small n) and seeded random connected graphs.
//!
//! Graphs on up to 11 vertices are packed into a `u64` edge mask over the
//! upper-triangle order (0,1), (0,2), (1,2), (0,3), ...

use crate::graph::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;

fn edge_bit(u: usize, v: usize) -> u64 {
    let (u, v) = if u < v { (u, v) } else { (v, u) };
    1u64 << (v * (v - 1) / 2 + u)
}

/// Decodes an edge mask into a graph.
pub fn mask_to_graph(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if mask & edge_bit(u, v) != 0 {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

fn adjacency_masks(n: usize, mask: u64) -> Vec<u64> {
    let mut adj = vec![0u64; n];
    for v in 1..n {
        for u in 0..v {
            if mask & edge_bit(u, v) != 0 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
    }
    adj
}

/// Isomorphism-invariant fingerprint: sorted per-vertex profiles of
/// (degree, sorted distance row, sorted neighbor degrees).
fn fingerprint(n: usize, adj: &[u64]) -> Vec<u8> {
    let mut dist = vec![[u8::MAX; 11]; n];
    for s in 0..n {
        dist[s][s] = 0;
        let mut frontier: u64 = 1 << s;
        let mut seen: u64 = 1 << s;
        let mut d = 0u8;
        while frontier != 0 {
            d += 1;
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= adj[v] & !seen;
            }
            let mut m = next;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                dist[s][v] = d;
            }
            seen |= next;
            frontier = next;
        }
    }
    let mut profiles: Vec<Vec<u8>> = (0..n)
        .map(|v| {
            let mut row: Vec<u8> = (0..n).map(|u| dist[v][u]).collect();
            row.sort_unstable();
            let mut nbr_deg: Vec<u8> = (0..n)
                .filter(|&u| adj[v] >> u & 1 == 1)
                .map(|u| adj[u].count_ones() as u8)
                .collect();
            nbr_deg.sort_unstable();
            let mut profile = vec![adj[v].count_ones() as u8];
            profile.extend(row);
            profile.extend(nbr_deg);
            profile
        })
        .collect();
    profiles.sort();
    profiles.into_iter().flatten().collect()
}

/// Backtracking isomorphism test with degree/profile pruning; graphs are
/// tiny so this is plenty fast.
fn isomorphic(n: usize, a: &[u64], b: &[u64]) -> bool {
    let deg = |adj: &[u64], v: usize| adj[v].count_ones();
    let mut mapping = vec![usize::MAX; n];
    let mut used: u64 = 0;
    fn rec(
        n: usize,
        a: &[u64],
        b: &[u64],
        v: usize,
        mapping: &mut [usize],
        used: &mut u64,
        deg: &dyn Fn(&[u64], usize) -> u32,
    ) -> bool {
        if v == n {
            return true;
        }
        for w in 0..n {
            if *used >> w & 1 == 1 || deg(a, v) != deg(b, w) {
                continue;
            }
            let consistent = (0..v).all(|u| (a[v] >> u & 1) == (b[w] >> mapping[u] & 1));
            if !consistent {
                continue;
            }
            mapping[v] = w;
            *used |= 1 << w;
            if rec(n, a, b, v + 1, mapping, used, deg) {
                return true;
            }
            *used &= !(1 << w);
            mapping[v] = usize::MAX;
        }
        false
    }
    rec(n, a, b, 0, &mut mapping, &mut used, &deg)
}

/// All connected graphs on exactly `n` vertices up to isomorphism, as
/// edge masks. Built by augmenting the (n-1)-vertex representatives with
/// one vertex (every connected graph has a non-cut vertex, so every class
/// is reached).
pub fn connected_graphs(n: usize) -> Vec<u64> {
    assert!((1..=9).contains(&n), "enumeration supported for 1..=9 vertices");
    if n == 1 {
        return vec![0];
    }
    let smaller = connected_graphs(n - 1);
    let mut classes: HashMap<Vec<u8>, Vec<(u64, Vec<u64>)>> = HashMap::new();
    let mut result = Vec::new();
    for &base in &smaller {
        for nbrs in 1u64..(1 << (n - 1)) {
            let mut mask = base;
            for u in 0..n - 1 {
                if nbrs >> u & 1 == 1 {
                    mask |= edge_bit(u, n - 1);
                }
            }
            let adj = adjacency_masks(n, mask);
            let fp = fingerprint(n, &adj);
            let bucket = classes.entry(fp).or_default();
            if !bucket.iter().any(|(_, other)| isomorphic(n, &adj, other)) {
                bucket.push((mask, adj));
                result.push(mask);
            }
        }
    }
    result.sort_unstable();
    result
}

/// Known counts of connected graphs up to isomorphism, used as a
/// self-check by the acceptance suite.
pub const CONNECTED_GRAPH_COUNTS: [usize; 9] =
    [1, 1, 2, 6, 21, 112, 853, 11117, 261080];

/// Seeded random connected graph on `n` vertices: a uniform random
/// spanning tree skeleton plus independent edges.
pub fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize, extra_edge_prob: f64) -> Graph {
    assert!(n >= 1);
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((v, rng.gen_range(0..v)));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(extra_edge_prob) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Convenience wrapper producing a fresh generator.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_up_to_six() {
        for n in 1..=6 {
            assert_eq!(
                connected_graphs(n).len(),
                CONNECTED_GRAPH_COUNTS[n - 1],
                "n = {n}"
            );
        }
    }

    #[test]
    fn enumerated_graphs_are_connected() {
        for &mask in &connected_graphs(5) {
            assert!(mask_to_graph(5, mask).is_connected());
        }
    }

    #[test]
    fn random_graphs_are_connected() {
        let mut rng = seeded_rng(1);
        for _ in 0..20 {
            let g = random_connected_graph(&mut rng, 9, 0.2);
            assert!(g.is_connected());
        }
    }
}
