//! Tree decompositions: validation, construction from elimination orders
//! (exact for small graphs, min-fill otherwise) and the nice form used by
//! the dynamic programs.

use crate::graph::Graph;
use crate::{Error, Result};
use std::collections::VecDeque;

/// A tree decomposition: bags over graph vertices, tree edges over bag
/// indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeDecomposition {
    n: usize,
    bags: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    pub fn new(n: usize, mut bags: Vec<Vec<usize>>, edges: Vec<(usize, usize)>) -> Self {
        for bag in &mut bags {
            bag.sort_unstable();
            bag.dedup();
        }
        TreeDecomposition { n, bags, edges }
    }

    pub fn graph_vertex_count(&self) -> usize {
        self.n
    }

    pub fn bag_count(&self) -> usize {
        self.bags.len()
    }

    pub fn bags(&self) -> &[Vec<usize>] {
        &self.bags
    }

    pub fn tree_edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn width(&self) -> usize {
        self.bags.iter().map(|b| b.len()).max().unwrap_or(0).saturating_sub(1)
    }

    fn neighbors(&self) -> Vec<Vec<usize>> {
        let mut nb = vec![Vec::new(); self.bags.len()];
        for &(a, b) in &self.edges {
            nb[a].push(b);
            nb[b].push(a);
        }
        nb
    }
}

/// First violated tree-decomposition condition, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TdViolation {
    /// The bag tree is not a tree (wrong edge count, cycle, or disconnected).
    NotATree,
    /// A bag references a vertex outside the graph.
    BagOutOfRange { bag: usize, vertex: usize },
    /// Condition (i): a vertex appears in no bag.
    MissingVertex(usize),
    /// Condition (ii): a graph edge is contained in no bag.
    UncoveredEdge(usize, usize),
    /// Condition (iii): the bags containing a vertex are not connected.
    DisconnectedOccurrences(usize),
}

impl std::fmt::Display for TdViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TdViolation::NotATree => write!(f, "bag graph is not a tree"),
            TdViolation::BagOutOfRange { bag, vertex } => {
                write!(f, "bag {bag} references vertex {vertex} outside the graph")
            }
            TdViolation::MissingVertex(v) => write!(f, "vertex {v} appears in no bag"),
            TdViolation::UncoveredEdge(u, v) => write!(f, "edge ({u}, {v}) covered by no bag"),
            TdViolation::DisconnectedOccurrences(v) => {
                write!(f, "bags containing vertex {v} do not form a subtree")
            }
        }
    }
}

/// Checks the three tree-decomposition conditions (plus tree shape).
pub fn validate_td(g: &Graph, td: &TreeDecomposition) -> std::result::Result<(), TdViolation> {
    let nb = td.bag_count();
    if nb == 0 {
        return if g.vertex_count() == 0 {
            Ok(())
        } else {
            Err(TdViolation::MissingVertex(0))
        };
    }
    if td.edges.len() + 1 != nb {
        return Err(TdViolation::NotATree);
    }
    let neighbors = td.neighbors();
    let mut seen = vec![false; nb];
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    let mut count = 1;
    while let Some(b) = queue.pop_front() {
        for &c in &neighbors[b] {
            if !seen[c] {
                seen[c] = true;
                count += 1;
                queue.push_back(c);
            }
        }
    }
    if count != nb {
        return Err(TdViolation::NotATree);
    }

    for (i, bag) in td.bags.iter().enumerate() {
        for &v in bag {
            if v >= g.vertex_count() {
                return Err(TdViolation::BagOutOfRange { bag: i, vertex: v });
            }
        }
    }
    let mut covered = vec![false; g.vertex_count()];
    for bag in &td.bags {
        for &v in bag {
            covered[v] = true;
        }
    }
    if let Some(v) = covered.iter().position(|&c| !c) {
        return Err(TdViolation::MissingVertex(v));
    }
    for (u, v) in g.edges() {
        if !td.bags.iter().any(|bag| {
            bag.binary_search(&u).is_ok() && bag.binary_search(&v).is_ok()
        }) {
            return Err(TdViolation::UncoveredEdge(u, v));
        }
    }
    for v in g.vertices() {
        let holders: Vec<usize> = (0..nb)
            .filter(|&b| td.bags[b].binary_search(&v).is_ok())
            .collect();
        let mut reached = vec![false; nb];
        let mut queue = VecDeque::from([holders[0]]);
        reached[holders[0]] = true;
        let mut count = 1;
        while let Some(b) = queue.pop_front() {
            for &c in &neighbors[b] {
                if !reached[c] && td.bags[c].binary_search(&v).is_ok() {
                    reached[c] = true;
                    count += 1;
                    queue.push_back(c);
                }
            }
        }
        if count != holders.len() {
            return Err(TdViolation::DisconnectedOccurrences(v));
        }
    }
    Ok(())
}

/// Builds a decomposition from an elimination order: the bag of `v` is
/// `{v}` plus its neighbors in the fill graph at elimination time, and the
/// bag hangs below the bag of the first later-eliminated such neighbor.
fn td_from_elimination(g: &Graph, order: &[usize]) -> TreeDecomposition {
    let n = g.vertex_count();
    let mut position = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let mut adj: Vec<std::collections::BTreeSet<usize>> = (0..n)
        .map(|v| g.neighbors(v).iter().copied().collect())
        .collect();
    let mut bags: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut parent_vertex: Vec<Option<usize>> = vec![None; n];
    for &v in order {
        let nbrs: Vec<usize> = adj[v].iter().copied().collect();
        let mut bag = nbrs.clone();
        bag.push(v);
        bag.sort_unstable();
        bags[position[v]] = bag;
        parent_vertex[position[v]] = nbrs.iter().copied().min_by_key(|&u| position[u]);
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                adj[a].insert(b);
                adj[b].insert(a);
            }
            adj[a].remove(&v);
        }
        adj[v].clear();
    }
    let mut edges = Vec::new();
    for i in 0..n {
        if let Some(u) = parent_vertex[i] {
            edges.push((i, position[u]));
        }
    }
    TreeDecomposition::new(n, bags, edges)
}

/// Vertices outside `through ∪ {v}` reachable from `v` along paths whose
/// interior lies in `through`.
fn reach_outside(g: &Graph, v: usize, through: u32) -> u32 {
    let mut seen: u32 = 1 << v;
    let mut frontier = vec![v];
    let mut result: u32 = 0;
    while let Some(u) = frontier.pop() {
        for &w in g.neighbors(u) {
            if seen >> w & 1 == 1 {
                continue;
            }
            seen |= 1 << w;
            if through >> w & 1 == 1 {
                frontier.push(w);
            } else {
                result |= 1 << w;
            }
        }
    }
    result
}

/// Exact treewidth and an optimal elimination order via the subset dynamic
/// program; only for small graphs.
fn exact_elimination(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    debug_assert!(n <= 12 && n >= 1);
    let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    let mut dp = vec![u32::MAX; 1 << n];
    dp[0] = 0;
    let mut subsets: Vec<u32> = (0..=full).collect();
    subsets.sort_by_key(|s| s.count_ones());
    for &s in &subsets {
        if s == 0 || dp[s as usize] == u32::MAX {
            continue;
        }
        // dp[s] already final because subsets are visited by size.
    }
    // Fill by increasing popcount.
    for &s in subsets.iter().skip(1) {
        let mut best = u32::MAX;
        for v in 0..n {
            if s >> v & 1 == 0 {
                continue;
            }
            let rest = s & !(1 << v);
            let prev = dp[rest as usize];
            if prev == u32::MAX {
                continue;
            }
            let deg = reach_outside(g, v, rest).count_ones();
            best = best.min(prev.max(deg));
        }
        dp[s as usize] = best;
    }
    // Reconstruct: walking down from the full set yields the reverse
    // elimination order.
    let mut reverse = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let target = dp[s as usize];
        let mut picked = None;
        for v in 0..n {
            if s >> v & 1 == 0 {
                continue;
            }
            let rest = s & !(1 << v);
            if dp[rest as usize] == u32::MAX {
                continue;
            }
            let deg = reach_outside(g, v, rest).count_ones();
            if dp[rest as usize].max(deg) == target {
                picked = Some(v);
                break;
            }
        }
        let v = picked.expect("dp reconstruction");
        reverse.push(v);
        s &= !(1 << v);
    }
    reverse.reverse();
    reverse
}

/// Min-fill elimination order.
fn min_fill_elimination(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut adj: Vec<std::collections::BTreeSet<usize>> = (0..n)
        .map(|v| g.neighbors(v).iter().copied().collect())
        .collect();
    let mut remaining: Vec<usize> = (0..n).collect();
    let mut order = Vec::with_capacity(n);
    while !remaining.is_empty() {
        let fill = |v: usize, adj: &Vec<std::collections::BTreeSet<usize>>| -> usize {
            let nbrs: Vec<usize> = adj[v].iter().copied().collect();
            let mut missing = 0;
            for (i, &a) in nbrs.iter().enumerate() {
                for &b in &nbrs[i + 1..] {
                    if !adj[a].contains(&b) {
                        missing += 1;
                    }
                }
            }
            missing
        };
        let &v = remaining
            .iter()
            .min_by_key(|&&v| (fill(v, &adj), v))
            .unwrap();
        let nbrs: Vec<usize> = adj[v].iter().copied().collect();
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                adj[a].insert(b);
                adj[b].insert(a);
            }
            adj[a].remove(&v);
        }
        adj[v].clear();
        remaining.retain(|&u| u != v);
        order.push(v);
    }
    order
}

/// Constructs a tree decomposition: exact elimination search for n <= 12,
/// min-fill heuristic above.
pub fn heuristic_td(g: &Graph) -> Result<TreeDecomposition> {
    if !g.is_connected() {
        return Err(Error::Disconnected("tree decomposition construction"));
    }
    let order = if g.vertex_count() <= 12 {
        exact_elimination(g)
    } else {
        min_fill_elimination(g)
    };
    let td = td_from_elimination(g, &order);
    debug_assert!(validate_td(g, &td).is_ok());
    Ok(td)
}

/// Node types of a nice tree decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeKind {
    Leaf,
    Introduce(usize),
    Forget(usize),
    Join,
}

#[derive(Debug, Clone)]
pub struct NiceNode {
    pub bag: Vec<usize>,
    pub kind: NodeKind,
    pub children: Vec<usize>,
    /// V(G_i): union of all bags in the subtree, sorted.
    pub processed: Vec<usize>,
}

/// A rooted nice tree decomposition: every node is a leaf with a single
/// vertex, an introduce, a forget, or a join of two identical bags.
#[derive(Debug, Clone)]
pub struct NiceTreeDecomposition {
    pub nodes: Vec<NiceNode>,
    pub root: usize,
    pub width: usize,
}

impl NiceTreeDecomposition {
    /// Node indices in bottom-up (children before parents) order.
    pub fn bottom_up(&self) -> Vec<usize> {
        let mut order = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![(self.root, false)];
        while let Some((i, expanded)) = stack.pop() {
            if expanded {
                order.push(i);
            } else {
                stack.push((i, true));
                for &c in &self.nodes[i].children {
                    stack.push((c, false));
                }
            }
        }
        order
    }
}

struct NiceBuilder {
    nodes: Vec<NiceNode>,
}

impl NiceBuilder {
    fn push(&mut self, bag: Vec<usize>, kind: NodeKind, children: Vec<usize>) -> usize {
        self.nodes.push(NiceNode {
            bag,
            kind,
            children,
            processed: Vec::new(),
        });
        self.nodes.len() - 1
    }

    /// Leaf chain covering `bag`: a one-vertex leaf plus introduces.
    fn leaf_chain(&mut self, bag: &[usize]) -> usize {
        let mut node = self.push(vec![bag[0]], NodeKind::Leaf, vec![]);
        let mut current = vec![bag[0]];
        for &v in &bag[1..] {
            current.push(v);
            current.sort_unstable();
            node = self.push(current.clone(), NodeKind::Introduce(v), vec![node]);
        }
        node
    }

    /// Forgets then introduces to morph a node with bag `from` into `to`.
    fn morph(&mut self, mut node: usize, from: &[usize], to: &[usize]) -> usize {
        let mut current = from.to_vec();
        for &v in from {
            if to.binary_search(&v).is_err() {
                current.retain(|&u| u != v);
                node = self.push(current.clone(), NodeKind::Forget(v), vec![node]);
            }
        }
        for &v in to {
            if from.binary_search(&v).is_err() {
                current.push(v);
                current.sort_unstable();
                node = self.push(current.clone(), NodeKind::Introduce(v), vec![node]);
            }
        }
        node
    }
}

/// Transforms a valid decomposition into nice form of the same width.
/// The root bag is kept as-is.
pub fn make_nice(g: &Graph, td: &TreeDecomposition) -> Result<NiceTreeDecomposition> {
    validate_td(g, td).map_err(|v| Error::InvalidTreeDecomposition(v.to_string()))?;
    if g.vertex_count() == 0 {
        return Err(Error::InvalidInput("empty graph".into()));
    }

    // Splice out empty bags; in a valid decomposition they carry nothing.
    let keep: Vec<usize> = (0..td.bag_count()).filter(|&b| !td.bags[b].is_empty()).collect();
    let (bags, edges) = if keep.len() == td.bag_count() {
        (td.bags.clone(), td.edges.clone())
    } else {
        let mut index = vec![usize::MAX; td.bag_count()];
        for (new, &old) in keep.iter().enumerate() {
            index[old] = new;
        }
        let neighbors = td.neighbors();
        let mut edges = Vec::new();
        // Walk around removed bags: connect each removed bag's surviving
        // neighbors in a chain to keep the tree intact.
        let mut extra: Vec<(usize, usize)> = Vec::new();
        for &(a, b) in &td.edges {
            if index[a] != usize::MAX && index[b] != usize::MAX {
                edges.push((index[a], index[b]));
            }
        }
        for removed in 0..td.bag_count() {
            if index[removed] != usize::MAX {
                continue;
            }
            let alive: Vec<usize> = neighbors[removed]
                .iter()
                .copied()
                .filter(|&b| index[b] != usize::MAX)
                .collect();
            for pair in alive.windows(2) {
                extra.push((index[pair[0]], index[pair[1]]));
            }
        }
        edges.extend(extra);
        (
            keep.iter().map(|&b| td.bags[b].clone()).collect::<Vec<_>>(),
            edges,
        )
    };
    if bags.is_empty() {
        return Err(Error::InvalidInput("decomposition covers no vertices".into()));
    }

    let mut neighbors = vec![Vec::new(); bags.len()];
    for &(a, b) in &edges {
        neighbors[a].push(b);
        neighbors[b].push(a);
    }

    // Root at a bag adjacent to a leaf (or the single bag).
    let root_bag = if bags.len() == 1 {
        0
    } else {
        let leaf = (0..bags.len()).find(|&b| neighbors[b].len() == 1).unwrap();
        neighbors[leaf][0]
    };

    let mut builder = NiceBuilder { nodes: Vec::new() };
    // Iterative DFS building children before parents.
    let mut order = Vec::new();
    let mut parent = vec![usize::MAX; bags.len()];
    let mut stack = vec![root_bag];
    let mut seen = vec![false; bags.len()];
    seen[root_bag] = true;
    while let Some(b) = stack.pop() {
        order.push(b);
        for &c in &neighbors[b] {
            if !seen[c] {
                seen[c] = true;
                parent[c] = b;
                stack.push(c);
            }
        }
    }
    let mut built: Vec<Option<usize>> = vec![None; bags.len()];
    for &b in order.iter().rev() {
        let children: Vec<usize> = neighbors[b]
            .iter()
            .copied()
            .filter(|&c| parent[c] == b)
            .collect();
        let node = if children.is_empty() {
            builder.leaf_chain(&bags[b])
        } else {
            let mut tops: Vec<usize> = children
                .iter()
                .map(|&c| {
                    let child_node = built[c].unwrap();
                    builder.morph(child_node, &bags[c], &bags[b])
                })
                .collect();
            let mut node = tops.remove(0);
            for other in tops {
                node = builder.push(bags[b].clone(), NodeKind::Join, vec![node, other]);
            }
            node
        };
        built[b] = Some(node);
    }
    let root = built[root_bag].unwrap();

    // Processed sets bottom-up.
    let mut ntd = NiceTreeDecomposition {
        width: builder
            .nodes
            .iter()
            .map(|n| n.bag.len())
            .max()
            .unwrap_or(1)
            - 1,
        nodes: builder.nodes,
        root,
    };
    for i in ntd.bottom_up() {
        let mut processed: Vec<usize> = ntd.nodes[i].bag.clone();
        for ci in 0..ntd.nodes[i].children.len() {
            let c = ntd.nodes[i].children[ci];
            processed.extend(ntd.nodes[c].processed.iter().copied());
        }
        processed.sort_unstable();
        processed.dedup();
        ntd.nodes[i].processed = processed;
    }
    debug_assert!(check_nice(&ntd).is_ok());
    Ok(ntd)
}

/// Checks the structural invariants of a nice decomposition; used by tests.
pub fn check_nice(ntd: &NiceTreeDecomposition) -> Result<()> {
    for (i, node) in ntd.nodes.iter().enumerate() {
        let fail = |msg: String| Err(Error::InvalidTreeDecomposition(format!("node {i}: {msg}")));
        match node.kind {
            NodeKind::Leaf => {
                if !node.children.is_empty() || node.bag.len() != 1 {
                    return fail("leaf must have one vertex and no children".into());
                }
            }
            NodeKind::Introduce(v) => {
                if node.children.len() != 1 {
                    return fail("introduce must have one child".into());
                }
                let child = &ntd.nodes[node.children[0]];
                let mut expect = node.bag.clone();
                expect.retain(|&u| u != v);
                if node.bag.binary_search(&v).is_err() || child.bag != expect {
                    return fail(format!("introduce({v}) bag mismatch"));
                }
            }
            NodeKind::Forget(v) => {
                if node.children.len() != 1 {
                    return fail("forget must have one child".into());
                }
                let child = &ntd.nodes[node.children[0]];
                let mut expect = child.bag.clone();
                expect.retain(|&u| u != v);
                if child.bag.binary_search(&v).is_err() || node.bag != expect {
                    return fail(format!("forget({v}) bag mismatch"));
                }
            }
            NodeKind::Join => {
                if node.children.len() != 2 {
                    return fail("join must have two children".into());
                }
                for &c in &node.children {
                    if ntd.nodes[c].bag != node.bag {
                        return fail("join children bags differ".into());
                    }
                }
            }
        }
    }
    Ok(())
}

/// Converts a nice decomposition back to a plain one (used by tests).
pub fn nice_to_td(g: &Graph, ntd: &NiceTreeDecomposition) -> TreeDecomposition {
    let bags: Vec<Vec<usize>> = ntd.nodes.iter().map(|n| n.bag.clone()).collect();
    let mut edges = Vec::new();
    for (i, node) in ntd.nodes.iter().enumerate() {
        for &c in &node.children {
            edges.push((i, c));
        }
    }
    TreeDecomposition::new(g.vertex_count(), bags, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validate_examples() {
        let p3 = Graph::path(3);
        let good = TreeDecomposition::new(3, vec![vec![0, 1], vec![1, 2]], vec![(0, 1)]);
        assert!(validate_td(&p3, &good).is_ok());
        assert_eq!(good.width(), 1);

        let bad = TreeDecomposition::new(3, vec![vec![0], vec![2]], vec![(0, 1)]);
        assert!(matches!(
            validate_td(&p3, &bad),
            Err(TdViolation::UncoveredEdge(0, 1)) | Err(TdViolation::MissingVertex(1))
        ));

        let k3 = Graph::complete(3);
        let single = TreeDecomposition::new(3, vec![vec![0, 1, 2]], vec![]);
        assert!(validate_td(&k3, &single).is_ok());
        assert_eq!(single.width(), 2);
    }

    #[test]
    fn heuristic_widths() {
        let tree = Graph::from_edges(6, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)]).unwrap();
        assert_eq!(heuristic_td(&tree).unwrap().width(), 1);
        assert_eq!(heuristic_td(&Graph::complete(5)).unwrap().width(), 4);
        assert_eq!(heuristic_td(&Graph::cycle(6)).unwrap().width(), 2);
    }

    #[test]
    fn heuristic_large_uses_min_fill() {
        let g = Graph::cycle(20);
        let td = heuristic_td(&g).unwrap();
        assert!(validate_td(&g, &td).is_ok());
        assert_eq!(td.width(), 2);
    }

    #[test]
    fn make_nice_single_bag_k3() {
        let k3 = Graph::complete(3);
        let td = TreeDecomposition::new(3, vec![vec![0, 1, 2]], vec![]);
        let ntd = make_nice(&k3, &td).unwrap();
        // One leaf plus two introduces, no joins or forgets.
        assert_eq!(ntd.nodes.len(), 3);
        assert!(matches!(ntd.nodes[0].kind, NodeKind::Leaf));
        assert!(ntd
            .nodes
            .iter()
            .all(|n| !matches!(n.kind, NodeKind::Join | NodeKind::Forget(_))));
        assert_eq!(ntd.width, 2);
    }

    #[test]
    fn make_nice_two_bags_has_forget() {
        let p3 = Graph::path(3);
        let td = TreeDecomposition::new(3, vec![vec![0, 1], vec![1, 2]], vec![(0, 1)]);
        let ntd = make_nice(&p3, &td).unwrap();
        assert!(check_nice(&ntd).is_ok());
        assert!(ntd
            .nodes
            .iter()
            .any(|n| matches!(n.kind, NodeKind::Forget(_))));
        assert!(validate_td(&p3, &nice_to_td(&p3, &ntd)).is_ok());
        // Join-free input stays join-free.
        assert!(!ntd.nodes.iter().any(|n| matches!(n.kind, NodeKind::Join)));
    }

    #[test]
    fn make_nice_preserves_width_and_processed_sets() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let n = rng.gen_range(2..11);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.35) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            if !g.is_connected() {
                continue;
            }
            let td = heuristic_td(&g).unwrap();
            let ntd = make_nice(&g, &td).unwrap();
            assert!(check_nice(&ntd).is_ok());
            assert_eq!(ntd.width, td.width());
            assert!(validate_td(&g, &nice_to_td(&g, &ntd)).is_ok());
            // Root processes the whole graph.
            let root = &ntd.nodes[ntd.root];
            assert_eq!(root.processed, g.vertices().collect::<Vec<_>>());
            // Join nodes: processed = union of children; introduce adds {v}.
            for node in &ntd.nodes {
                match node.kind {
                    NodeKind::Join => {
                        let mut union: Vec<usize> = ntd.nodes[node.children[0]]
                            .processed
                            .iter()
                            .chain(ntd.nodes[node.children[1]].processed.iter())
                            .copied()
                            .collect();
                        union.sort_unstable();
                        union.dedup();
                        assert_eq!(node.processed, union);
                    }
                    NodeKind::Introduce(v) => {
                        let child = &ntd.nodes[node.children[0]];
                        let mut expect = child.processed.clone();
                        expect.push(v);
                        expect.sort_unstable();
                        assert_eq!(node.processed, expect);
                    }
                    _ => {}
                }
            }
        }
    }

    #[test]
    fn td_format_round_trip() {
        use crate::io::{parse_td, write_td};
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for _ in 0..3 {
            let n = rng.gen_range(3..9);
            let edges: Vec<(usize, usize)> = (1..n).map(|v| (v, rng.gen_range(0..v))).collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            let td = heuristic_td(&g).unwrap();
            let text = write_td(&td);
            let back = parse_td(&text).unwrap();
            assert_eq!(back, td);
        }
    }

    #[test]
    fn exact_elimination_small_bound() {
        // Exact search certifies width 3 or less where it applies.
        let g = Graph::cycle(8);
        let td = heuristic_td(&g).unwrap();
        assert_eq!(td.width(), 2);
    }
}
