//! Incremental graph builder with stable string names per vertex and
//! named groups; names map to dense integer ids at emission.

use super::{ceil_log2, Construction, GadgetGraph};
use crate::graph::Graph;
use crate::Result;
use std::collections::{BTreeMap, BTreeSet, HashMap};

#[derive(Debug, Default)]
pub struct GadgetBuilder {
    names: Vec<String>,
    index: HashMap<String, usize>,
    edges: BTreeSet<(usize, usize)>,
    groups: BTreeMap<String, Vec<usize>>,
}

impl GadgetBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns the vertex with this name, creating it on first use.
    pub fn vertex(&mut self, name: impl Into<String>) -> usize {
        let name = name.into();
        if let Some(&id) = self.index.get(&name) {
            return id;
        }
        let id = self.names.len();
        self.index.insert(name.clone(), id);
        self.names.push(name);
        id
    }

    pub fn edge(&mut self, a: usize, b: usize) {
        assert_ne!(a, b, "gadget constructions never add self-loops");
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        self.edges.insert((a, b));
    }

    pub fn clique(&mut self, members: &[usize]) {
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                self.edge(a, b);
            }
        }
    }

    pub fn group(&mut self, name: impl Into<String>, members: &[usize]) {
        let entry = self.groups.entry(name.into()).or_default();
        entry.extend_from_slice(members);
        entry.sort_unstable();
        entry.dedup();
    }

    pub fn group_members(&self, name: &str) -> Vec<usize> {
        self.groups.get(name).cloned().unwrap_or_default()
    }

    pub fn vertex_id(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn neighbors_of(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn name_of(&self, v: usize) -> &str {
        &self.names[v]
    }

    /// Degrees over the edges added so far.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.names.len()];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    pub fn finish(self, k: usize, construction: Construction) -> Result<GadgetGraph> {
        let edges: Vec<(usize, usize)> = self.edges.iter().copied().collect();
        let graph = Graph::from_edges(self.names.len(), &edges)?;
        Ok(GadgetGraph {
            graph,
            k,
            groups: self.groups,
            names: self.names,
            construction,
        })
    }
}

/// Ids of one resolving-flavor identification gadget.
pub struct BitRep {
    /// Code bit count.
    pub q: usize,
    /// Pendant pairs (a-side, b-side): q code pairs plus the starred pair;
    /// one vertex per pair is forced into every resolving set.
    pub pendant_pairs: Vec<(usize, usize)>,
    pub nullifier: usize,
}

impl BitRep {
    /// The a-side pendants, the witness's canonical choice.
    pub fn a_sides(&self) -> Vec<usize> {
        self.pendant_pairs.iter().map(|&(a, _)| a).collect()
    }
}

/// Attaches the identification gadget for `members` of the set `label`
/// with `q` code bits; `codes[j]` is the 1-based code of member `j`
/// (members of a critical pair share their pair index as code).
///
/// Adds, per bit i, a path a-y_i-b; one extra starred path; a clique on
/// the y vertices; edges from y_star to every member; code wiring from
/// members to the y vertices (leftmost code bit first); a nullifier
/// adjacent to all y vertices and to every current outside neighbor of
/// the member set.
pub fn attach_identifying_gadget(
    b: &mut GadgetBuilder,
    label: &str,
    members: &[usize],
    codes: &[usize],
    q: usize,
) -> BitRep {
    assert_eq!(members.len(), codes.len());
    let mut core = Vec::with_capacity(q + 1);
    let mut pendant_pairs = Vec::with_capacity(q + 1);
    for i in 1..=q {
        let y = b.vertex(format!("y({label},{i})"));
        let ya = b.vertex(format!("ya({label},{i})"));
        let yb = b.vertex(format!("yb({label},{i})"));
        b.edge(ya, y);
        b.edge(y, yb);
        core.push(y);
        pendant_pairs.push((ya, yb));
    }
    let y_star = b.vertex(format!("y({label},star)"));
    let ya_star = b.vertex(format!("ya({label},star)"));
    let yb_star = b.vertex(format!("yb({label},star)"));
    b.edge(ya_star, y_star);
    b.edge(y_star, yb_star);
    core.push(y_star);
    pendant_pairs.push((ya_star, yb_star));
    b.clique(&core);
    for &m in members {
        b.edge(m, y_star);
    }
    for (&m, &code) in members.iter().zip(codes) {
        debug_assert!(code >= 1 && code + 2 <= 1 << q, "code must fit below all-ones");
        for i in 1..=q {
            if code >> (q - i) & 1 == 1 {
                b.edge(m, core[i - 1]);
            }
        }
    }
    let nullifier = b.vertex(format!("nullifier({label})"));
    for &y in &core {
        b.edge(nullifier, y);
    }
    // Current outside neighbors of the member set.
    let gadget: BTreeSet<usize> = core
        .iter()
        .chain(pendant_pairs.iter().flat_map(|(a, c)| [a, c]))
        .copied()
        .chain([nullifier])
        .collect();
    let member_set: BTreeSet<usize> = members.iter().copied().collect();
    let mut outside = BTreeSet::new();
    for &m in members {
        for u in b.neighbors_of(m) {
            if !member_set.contains(&u) && !gadget.contains(&u) {
                outside.insert(u);
            }
        }
    }
    for u in outside {
        b.edge(u, nullifier);
    }

    let mut bits_group: Vec<usize> = pendant_pairs.iter().flat_map(|&(a, c)| [a, c]).collect();
    bits_group.sort_unstable();
    let mut rep_group = core.clone();
    rep_group.extend(bits_group.iter().copied());
    b.group(format!("bit-rep({label})"), &rep_group);
    b.group(format!("bits({label})"), &bits_group);
    b.group(format!("nullifier({label})"), &[nullifier]);

    BitRep {
        q,
        pendant_pairs,
        nullifier,
    }
}

/// Gadget code bit count for a plain set of `len` members, matching the
/// budget formulas: enough bits to represent every member index while the
/// all-ones pattern stays reserved.
pub fn plain_q(len: usize) -> usize {
    ceil_log2(len + 2) + 1
}
