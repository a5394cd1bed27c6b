//! Bottom-up dynamic program for metric dimension over a nice tree
//! decomposition.
//!
//! A table entry is the canonical signature of a partial solution `S`
//! inside the processed subgraph `G_i`:
//! * the selected bag vertices,
//! * the inside classes realized by `S`,
//! * `resolved`: inside-by-outside class pairs all of whose vertex pairs
//!   are settled by `S` (maintained hereditarily through bag changes),
//! * `pending`: inside class pairs that still contain an unresolved vertex
//!   pair; only a later solution vertex whose class separates the two
//!   classes can discharge such an entry.
//!
//! At the root no outside vertices remain, so the metric dimension is the
//! cheapest entry without pending obligations.

use super::classes::NodeClasses;
use super::{min_sum, BitSet, ExtNat};
use crate::graph::{all_pairs_distances, Graph};
use crate::oracle::is_resolving_set;
use crate::td::{NiceTreeDecomposition, NodeKind};
use crate::{Error, Method, Problem, Result, SolutionReport};
use std::collections::HashMap;

/// An instance of the extended problem at a single node, as used by the
/// per-node value tables. Only the leaf case is exposed; interior nodes
/// are handled by the signature tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmdInstance {
    /// Bag vertices, ascending.
    pub bag: Vec<usize>,
    /// Selected bag vertices.
    pub selected: Vec<usize>,
    /// Classes the solution must realize.
    pub d_int: Vec<Vec<u32>>,
    /// Classes promised to the future solution.
    pub d_ext: Vec<Vec<u32>>,
    /// Inside-by-outside class pairs the solution must resolve.
    pub d_pair: Vec<(Vec<u32>, Vec<u32>)>,
}

/// Value table for a leaf node with bag `{v}`: 0 when nothing is selected
/// or required, 1 when `v` is selected and the only inside requirement is
/// its own class `(0)`, infinite otherwise.
pub fn emd_leaf_dim(inst: &EmdInstance) -> Result<ExtNat> {
    if inst.bag.len() != 1 {
        return Err(Error::InvalidInput(format!(
            "leaf bags contain exactly one vertex, got {}",
            inst.bag.len()
        )));
    }
    let v = inst.bag[0];
    if inst.selected.is_empty() {
        if inst.d_int.is_empty() && inst.d_pair.is_empty() {
            Ok(ExtNat::Fin(0))
        } else {
            Ok(ExtNat::Inf)
        }
    } else if inst.selected == [v] {
        if inst.d_int.iter().all(|r| r == &vec![0u32]) {
            Ok(ExtNat::Fin(1))
        } else {
            Ok(ExtNat::Inf)
        }
    } else {
        Ok(ExtNat::Inf)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Sig {
    s_bag: u64,
    d_int: BitSet,
    resolved: BitSet,
    pending: BitSet,
}

#[derive(Debug, Clone, Copy)]
enum Back {
    Leaf { take: Option<usize> },
    Unary { child: usize, take: Option<usize> },
    Join { left: usize, right: usize },
}

struct Table {
    entries: Vec<(Sig, u32, Back)>,
    index: HashMap<Sig, usize>,
}

impl Table {
    fn new() -> Self {
        Table {
            entries: Vec::new(),
            index: HashMap::new(),
        }
    }

    fn insert(&mut self, sig: Sig, cost: u32, back: Back) {
        match self.index.get(&sig) {
            Some(&i) if self.entries[i].1 <= cost => {}
            Some(&i) => {
                self.entries[i].1 = cost;
                self.entries[i].2 = back;
            }
            None => {
                self.index.insert(sig.clone(), self.entries.len());
                self.entries.push((sig, cost, back));
            }
        }
    }
}

fn insert_coord(vec: &[u16], p: usize, value: u16) -> Vec<u16> {
    let mut out = Vec::with_capacity(vec.len() + 1);
    out.extend_from_slice(&vec[..p]);
    out.push(value);
    out.extend_from_slice(&vec[p..]);
    out
}

fn remove_coord(vec: &[u16], p: usize) -> Vec<u16> {
    let mut out = vec.to_vec();
    out.remove(p);
    out
}

fn insert_bit(mask: u64, p: usize, set: bool) -> u64 {
    let low = mask & ((1u64 << p) - 1);
    let high = (mask >> p) << (p + 1);
    low | high | if set { 1 << p } else { 0 }
}

fn remove_bit(mask: u64, p: usize) -> u64 {
    let low = mask & ((1u64 << p) - 1);
    let high = (mask >> (p + 1)) << p;
    low | high
}

fn resolves_ids(a: &[u16], b: &[u16], u: &[u16]) -> bool {
    min_sum(a, u) != min_sum(b, u)
}

fn leaf_table(ctx: &NodeClasses, v: usize) -> Table {
    let mut table = Table::new();
    let v_int = ctx.int_of_vertex[&v];
    let empty = Sig {
        s_bag: 0,
        d_int: BitSet::new(ctx.int_count()),
        resolved: BitSet::new(ctx.pair_bits()),
        pending: BitSet::new(ctx.unordered_bits()),
    };
    table.insert(empty, 0, Back::Leaf { take: None });

    let mut d_int = BitSet::new(ctx.int_count());
    d_int.set(v_int);
    let mut resolved = BitSet::new(ctx.pair_bits());
    for e in 0..ctx.ext_count() {
        resolved.set(ctx.pair_index(v_int, e));
    }
    let take = Sig {
        s_bag: 1,
        d_int,
        resolved,
        pending: BitSet::new(ctx.unordered_bits()),
    };
    table.insert(take, 1, Back::Leaf { take: Some(v) });
    table
}

fn introduce_table(
    parent: &NodeClasses,
    child: &NodeClasses,
    child_table: &Table,
    v: usize,
) -> Table {
    let p = parent.bag.binary_search(&v).unwrap();
    let v_int = parent.int_of_vertex[&v];
    // v's vector over the child bag: its parent vector minus its own
    // (zero) coordinate.
    let dv_child: Vec<u16> = remove_coord(&parent.int_vecs[v_int], p);
    let v_ext_child = child
        .ext_id(&dv_child)
        .expect("introduced vertex realizes a child outside class");

    // Child inside class -> parent inside class (unique lift).
    let lift_int: Vec<usize> = child
        .int_vecs
        .iter()
        .map(|r| {
            let m = min_sum(r, &dv_child) as u16;
            parent
                .int_id(&insert_coord(r, p, m))
                .expect("lifted inside class is realized")
        })
        .collect();
    // Parent inside class (other than v's) -> child inside class.
    let unlift_int: Vec<Option<usize>> = parent
        .int_vecs
        .iter()
        .enumerate()
        .map(|(id, r)| {
            if id == v_int {
                None
            } else {
                child.int_id(&remove_coord(r, p))
            }
        })
        .collect();
    let ext_to_child: Vec<usize> = parent
        .ext_vecs
        .iter()
        .map(|t| {
            child
                .ext_id(&remove_coord(t, p))
                .expect("outside classes survive an introduce")
        })
        .collect();
    // For C1: child inside classes resolving (d(v), t) per parent outside t.
    let c1_resolvers: Vec<BitSet> = parent
        .ext_vecs
        .iter()
        .map(|t| {
            let t_child = remove_coord(t, p);
            let mut bits = BitSet::new(child.int_count());
            for (u, uvec) in child.int_vecs.iter().enumerate() {
                if resolves_ids(&dv_child, &t_child, uvec) {
                    bits.set(u);
                }
            }
            bits
        })
        .collect();
    // Child pending pairs v would resolve.
    let v_kills: Vec<(usize, usize)> = {
        let mut kills = Vec::new();
        for a in 0..child.int_count() {
            for b in a..child.int_count() {
                if resolves_ids(&child.int_vecs[a], &child.int_vecs[b], &dv_child) {
                    kills.push((a, b));
                }
            }
        }
        kills
    };
    let kills_grid: std::collections::HashSet<(usize, usize)> = v_kills.into_iter().collect();

    let mut table = Table::new();
    for (entry_idx, (csig, ccost, _)) in child_table.entries.iter().enumerate() {
        // Shared pieces.
        let lift_pending = |dead_check: bool, kill_with_v: bool| -> Option<BitSet> {
            let mut pending = BitSet::new(parent.unordered_bits());
            for a in 0..child.int_count() {
                for b in a..child.int_count() {
                    if !csig.pending.get(child.unordered_index(a, b)) {
                        continue;
                    }
                    if kill_with_v && kills_grid.contains(&(a, b)) {
                        continue;
                    }
                    let (pa, pb) = (lift_int[a], lift_int[b]);
                    if dead_check && pa == pb {
                        return None;
                    }
                    pending.set(parent.unordered_index(pa, pb));
                }
            }
            Some(pending)
        };

        // Type 1: v not selected.
        {
            let mut d_int = BitSet::new(parent.int_count());
            for r in csig.d_int.iter_ones() {
                d_int.set(lift_int[r]);
            }
            let mut resolved = BitSet::new(parent.pair_bits());
            for r in 0..parent.int_count() {
                for t in 0..parent.ext_count() {
                    let ok = if r == v_int {
                        csig.d_int.intersects(&c1_resolvers[t])
                    } else {
                        match unlift_int[r] {
                            Some(cr) => csig.resolved.get(child.pair_index(cr, ext_to_child[t])),
                            // Inside class realized only through v's arrival
                            // cannot occur: every non-v realizer lives in the
                            // child graph.
                            None => false,
                        }
                    };
                    if ok {
                        resolved.set(parent.pair_index(r, t));
                    }
                }
            }
            let mut pending = lift_pending(false, false).unwrap();
            // Pairs (x, v) not settled at the child level need future help.
            for r in 0..child.int_count() {
                if !csig.resolved.get(child.pair_index(r, v_ext_child)) {
                    pending.set(parent.unordered_index(lift_int[r], v_int));
                }
            }
            table.insert(
                Sig {
                    s_bag: insert_bit(csig.s_bag, p, false),
                    d_int,
                    resolved,
                    pending,
                },
                *ccost,
                Back::Unary {
                    child: entry_idx,
                    take: None,
                },
            );
        }

        // Type 2: v selected.
        {
            let mut d_int = BitSet::new(parent.int_count());
            for r in csig.d_int.iter_ones() {
                d_int.set(lift_int[r]);
            }
            d_int.set(v_int);
            let mut resolved = BitSet::new(parent.pair_bits());
            for r in 0..parent.int_count() {
                for t in 0..parent.ext_count() {
                    let by_v = parent.int_vecs[r][p] != parent.ext_vecs[t][p];
                    let inherited = r != v_int
                        && match unlift_int[r] {
                            Some(cr) => csig.resolved.get(child.pair_index(cr, ext_to_child[t])),
                            None => false,
                        };
                    if by_v || inherited {
                        resolved.set(parent.pair_index(r, t));
                    }
                }
            }
            let pending = lift_pending(false, true).unwrap();
            table.insert(
                Sig {
                    s_bag: insert_bit(csig.s_bag, p, true),
                    d_int,
                    resolved,
                    pending,
                },
                ccost + 1,
                Back::Unary {
                    child: entry_idx,
                    take: Some(v),
                },
            );
        }
    }
    table
}

fn forget_table(parent: &NodeClasses, child: &NodeClasses, child_table: &Table, v: usize) -> Table {
    let p = child.bag.binary_search(&v).unwrap();
    let trunc_int: Vec<usize> = child
        .int_vecs
        .iter()
        .map(|r| {
            parent
                .int_id(&remove_coord(r, p))
                .expect("truncated inside class is realized")
        })
        .collect();
    // Preimages of parent classes among child classes.
    let mut int_preimages: Vec<Vec<usize>> = vec![Vec::new(); parent.int_count()];
    for (c, &pid) in trunc_int.iter().enumerate() {
        int_preimages[pid].push(c);
    }
    let mut ext_preimages: Vec<Vec<usize>> = vec![Vec::new(); parent.ext_count()];
    for (c, tvec) in child.ext_vecs.iter().enumerate() {
        if let Some(pid) = parent.ext_id(&remove_coord(tvec, p)) {
            ext_preimages[pid].push(c);
        }
        // A child outside class realized only by v has no parent outside
        // counterpart; it simply disappears.
    }

    let mut table = Table::new();
    'entries: for (entry_idx, (csig, ccost, _)) in child_table.entries.iter().enumerate() {
        let mut d_int = BitSet::new(parent.int_count());
        for r in csig.d_int.iter_ones() {
            d_int.set(trunc_int[r]);
        }
        let mut pending = BitSet::new(parent.unordered_bits());
        for a in 0..child.int_count() {
            for b in a..child.int_count() {
                if !csig.pending.get(child.unordered_index(a, b)) {
                    continue;
                }
                let (pa, pb) = (trunc_int[a], trunc_int[b]);
                if pa == pb {
                    // Classes merged with an unresolved pair inside: no
                    // later vertex can ever separate them.
                    continue 'entries;
                }
                pending.set(parent.unordered_index(pa, pb));
            }
        }
        let mut resolved = BitSet::new(parent.pair_bits());
        for r in 0..parent.int_count() {
            'pairs: for t in 0..parent.ext_count() {
                for &ca in &int_preimages[r] {
                    for &cb in &ext_preimages[t] {
                        if !csig.resolved.get(child.pair_index(ca, cb)) {
                            continue 'pairs;
                        }
                    }
                }
                resolved.set(parent.pair_index(r, t));
            }
        }
        table.insert(
            Sig {
                s_bag: remove_bit(csig.s_bag, p),
                d_int,
                resolved,
                pending,
            },
            *ccost,
            Back::Unary {
                child: entry_idx,
                take: None,
            },
        );
    }
    table
}

fn join_table(
    parent: &NodeClasses,
    left: &NodeClasses,
    right: &NodeClasses,
    left_table: &Table,
    right_table: &Table,
) -> Table {
    let int_to_parent = |ctx: &NodeClasses| -> Vec<usize> {
        ctx.int_vecs
            .iter()
            .map(|r| parent.int_id(r).expect("child inside class stays realized"))
            .collect()
    };
    let l_int = int_to_parent(left);
    let r_int = int_to_parent(right);
    // Parent class -> child inside/outside ids by vector.
    let parent_in_left: Vec<Option<usize>> =
        parent.int_vecs.iter().map(|v| left.int_id(v)).collect();
    let parent_in_right: Vec<Option<usize>> =
        parent.int_vecs.iter().map(|v| right.int_id(v)).collect();
    let parent_int_as_left_ext: Vec<Option<usize>> =
        parent.int_vecs.iter().map(|v| left.ext_id(v)).collect();
    let parent_int_as_right_ext: Vec<Option<usize>> =
        parent.int_vecs.iter().map(|v| right.ext_id(v)).collect();
    let ext_to_left: Vec<usize> = parent
        .ext_vecs
        .iter()
        .map(|v| left.ext_id(v).expect("outside classes survive a join"))
        .collect();
    let ext_to_right: Vec<usize> = parent
        .ext_vecs
        .iter()
        .map(|v| right.ext_id(v).expect("outside classes survive a join"))
        .collect();
    // Resolver bitsets over parent inside classes.
    let pair_resolvers: Vec<BitSet> = (0..parent.int_count())
        .flat_map(|r| (0..parent.ext_count().max(1)).map(move |t| (r, t)))
        .map(|(r, t)| {
            let mut bits = BitSet::new(parent.int_count());
            if t < parent.ext_count() {
                for u in 0..parent.int_count() {
                    if resolves_ids(&parent.int_vecs[r], &parent.ext_vecs[t], &parent.int_vecs[u]) {
                        bits.set(u);
                    }
                }
            }
            bits
        })
        .collect();
    let unordered_resolvers: Vec<BitSet> = (0..parent.int_count())
        .flat_map(|a| (0..parent.int_count()).map(move |b| (a, b)))
        .map(|(a, b)| {
            let mut bits = BitSet::new(parent.int_count());
            if a <= b {
                for u in 0..parent.int_count() {
                    if resolves_ids(&parent.int_vecs[a], &parent.int_vecs[b], &parent.int_vecs[u]) {
                        bits.set(u);
                    }
                }
            }
            bits
        })
        .collect();
    // Classes realized strictly outside the bag, per side.
    let mut out_left = vec![false; parent.int_count()];
    for (c, &pid) in l_int.iter().enumerate() {
        if left.int_realized_outside_bag[c] {
            out_left[pid] = true;
        }
    }
    let mut out_right = vec![false; parent.int_count()];
    for (c, &pid) in r_int.iter().enumerate() {
        if right.int_realized_outside_bag[c] {
            out_right[pid] = true;
        }
    }

    // Bucket right entries by selected bag set.
    let mut by_sbag: HashMap<u64, Vec<usize>> = HashMap::new();
    for (i, (sig, _, _)) in right_table.entries.iter().enumerate() {
        by_sbag.entry(sig.s_bag).or_default().push(i);
    }

    let mut table = Table::new();
    for (li, (lsig, lcost, _)) in left_table.entries.iter().enumerate() {
        let d1p = {
            let mut bits = BitSet::new(parent.int_count());
            for r in lsig.d_int.iter_ones() {
                bits.set(l_int[r]);
            }
            bits
        };
        let Some(partners) = by_sbag.get(&lsig.s_bag) else {
            continue;
        };
        for &ri in partners {
            let (rsig, rcost, _) = &right_table.entries[ri];
            let mut d2p = BitSet::new(parent.int_count());
            for r in rsig.d_int.iter_ones() {
                d2p.set(r_int[r]);
            }

            let mut d_int = d1p.clone();
            d_int.union_with(&d2p);

            let mut resolved = BitSet::new(parent.pair_bits());
            for r in 0..parent.int_count() {
                for t in 0..parent.ext_count() {
                    let side = |in_child: &Option<usize>,
                                ext_map: &Vec<usize>,
                                child: &NodeClasses,
                                csig: &Sig,
                                sibling_d: &BitSet|
                     -> bool {
                        match in_child {
                            None => true,
                            Some(cr) => {
                                csig.resolved.get(child.pair_index(*cr, ext_map[t]))
                                    || sibling_d.intersects(&pair_resolvers[r * parent.ext_count().max(1) + t])
                            }
                        }
                    };
                    if side(&parent_in_left[r], &ext_to_left, left, lsig, &d2p)
                        && side(&parent_in_right[r], &ext_to_right, right, rsig, &d1p)
                    {
                        resolved.set(parent.pair_index(r, t));
                    }
                }
            }

            let mut pending = BitSet::new(parent.unordered_bits());
            let mut dead = false;
            let carry = |csig: &Sig,
                             child: &NodeClasses,
                             map: &Vec<usize>,
                             sibling_d: &BitSet,
                             pending: &mut BitSet,
                             dead: &mut bool| {
                for a in 0..child.int_count() {
                    for b in a..child.int_count() {
                        if !csig.pending.get(child.unordered_index(a, b)) {
                            continue;
                        }
                        let (pa, pb) = (map[a], map[b]);
                        if pa == pb && a != b {
                            *dead = true;
                            return;
                        }
                        let idx = pa.min(pb) * parent.int_count() + pa.max(pb);
                        if sibling_d.intersects(&unordered_resolvers[idx]) {
                            continue;
                        }
                        pending.set(parent.unordered_index(pa, pb));
                    }
                }
            };
            carry(lsig, left, &l_int, &d2p, &mut pending, &mut dead);
            if dead {
                continue;
            }
            carry(rsig, right, &r_int, &d1p, &mut pending, &mut dead);
            if dead {
                continue;
            }
            // Cross pairs between the two processed sides.
            for a in 0..parent.int_count() {
                if !out_left[a] {
                    continue;
                }
                'cross: for b in 0..parent.int_count() {
                    if !out_right[b] {
                        continue;
                    }
                    // Settled by the left solution for every outside
                    // realization of b, or symmetrically by the right one.
                    if let (Some(ca), Some(tb)) = (parent_in_left[a], parent_int_as_left_ext[b]) {
                        if lsig.resolved.get(left.pair_index(ca, tb)) {
                            continue 'cross;
                        }
                    }
                    if let (Some(cb), Some(ta)) = (parent_in_right[b], parent_int_as_right_ext[a]) {
                        if rsig.resolved.get(right.pair_index(cb, ta)) {
                            continue 'cross;
                        }
                    }
                    if a == b {
                        dead = true;
                        break;
                    }
                    pending.set(parent.unordered_index(a, b));
                }
                if dead {
                    break;
                }
            }
            if dead {
                continue;
            }

            let cost = lcost + rcost - lsig.s_bag.count_ones();
            table.insert(
                Sig {
                    s_bag: lsig.s_bag,
                    d_int,
                    resolved,
                    pending,
                },
                cost,
                Back::Join { left: li, right: ri },
            );
        }
    }
    table
}

/// Metric dimension via the tree-decomposition dynamic program, with a
/// reconstructed and verified witness.
pub fn md_dp(g: &Graph, ntd: &NiceTreeDecomposition) -> Result<SolutionReport> {
    md_dp_budgeted(g, ntd, None)
}

/// Budgeted variant; the deadline is checked between nodes.
pub fn md_dp_budgeted(
    g: &Graph,
    ntd: &NiceTreeDecomposition,
    deadline: Option<std::time::Instant>,
) -> Result<SolutionReport> {
    if !g.is_connected() {
        return Err(Error::Disconnected("the dynamic program requires a connected graph"));
    }
    if ntd.width + 1 > 60 {
        return Err(Error::CapExceeded("dynamic program capped at width 59".into()));
    }
    let dm = all_pairs_distances(g);
    let diam = dm.diameter()? as usize;
    let order = ntd.bottom_up();
    let root = ntd.root;
    if ntd.nodes[root].processed.len() != g.vertex_count() {
        return Err(Error::InvalidTreeDecomposition(
            "root does not process the whole graph".into(),
        ));
    }

    let mut contexts: Vec<Option<NodeClasses>> = vec![None; ntd.nodes.len()];
    let mut tables: Vec<Option<Table>> = (0..ntd.nodes.len()).map(|_| None).collect();
    for &i in &order {
        if let Some(deadline) = deadline {
            if std::time::Instant::now() >= deadline {
                return Err(Error::TimeBudgetExceeded);
            }
        }
        let node = &ntd.nodes[i];
        let ctx = NodeClasses::build(&dm, &node.bag, &node.processed);
        // Realized class counts stay below the full vector space.
        debug_assert!({
            let bound = (diam as u64 + 1).checked_pow(node.bag.len() as u32);
            bound.is_none_or(|b| ctx.int_count() as u64 <= b && ctx.ext_count() as u64 <= b)
        });
        let table = match node.kind {
            NodeKind::Leaf => leaf_table(&ctx, node.bag[0]),
            NodeKind::Introduce(v) => {
                let c = node.children[0];
                introduce_table(&ctx, contexts[c].as_ref().unwrap(), tables[c].as_ref().unwrap(), v)
            }
            NodeKind::Forget(v) => {
                let c = node.children[0];
                forget_table(&ctx, contexts[c].as_ref().unwrap(), tables[c].as_ref().unwrap(), v)
            }
            NodeKind::Join => {
                let (c1, c2) = (node.children[0], node.children[1]);
                join_table(
                    &ctx,
                    contexts[c1].as_ref().unwrap(),
                    contexts[c2].as_ref().unwrap(),
                    tables[c1].as_ref().unwrap(),
                    tables[c2].as_ref().unwrap(),
                )
            }
        };
        contexts[i] = Some(ctx);
        tables[i] = Some(table);
    }

    let root_table = tables[root].as_ref().unwrap();
    let best = root_table
        .entries
        .iter()
        .enumerate()
        .filter(|(_, (sig, _, _))| sig.pending.is_empty())
        .min_by_key(|(_, (_, cost, _))| *cost);
    let Some((best_idx, (_, best_cost, _))) = best else {
        return Err(Error::InvalidInput(
            "dynamic program found no solution (internal error)".into(),
        ));
    };

    // Witness reconstruction through the back-pointers.
    let mut witness = Vec::new();
    let mut stack = vec![(root, best_idx)];
    while let Some((node, entry)) = stack.pop() {
        match tables[node].as_ref().unwrap().entries[entry].2 {
            Back::Leaf { take } => {
                if let Some(v) = take {
                    witness.push(v);
                }
            }
            Back::Unary { child, take } => {
                if let Some(v) = take {
                    witness.push(v);
                }
                stack.push((ntd.nodes[node].children[0], child));
            }
            Back::Join { left, right } => {
                stack.push((ntd.nodes[node].children[0], left));
                stack.push((ntd.nodes[node].children[1], right));
            }
        }
    }
    witness.sort_unstable();
    witness.dedup();
    if witness.len() != *best_cost as usize || !is_resolving_set(g, &dm, &witness)? {
        return Err(Error::InvalidInput(
            "dynamic program produced an inconsistent witness (internal error)".into(),
        ));
    }
    Ok(SolutionReport {
        problem: Problem::Md,
        optimum: witness.len(),
        witness,
        method: Method::DpTw,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::brute_md;
    use crate::td::{heuristic_td, make_nice};

    fn dp(g: &Graph) -> usize {
        let td = heuristic_td(g).unwrap();
        let ntd = make_nice(g, &td).unwrap();
        md_dp(g, &ntd).unwrap().optimum
    }

    #[test]
    fn leaf_case_table() {
        let base = EmdInstance {
            bag: vec![0],
            selected: vec![],
            d_int: vec![],
            d_ext: vec![],
            d_pair: vec![],
        };
        assert_eq!(emd_leaf_dim(&base).unwrap(), ExtNat::Fin(0));

        let mut with_pair = base.clone();
        with_pair.d_pair = vec![(vec![0], vec![1])];
        assert_eq!(emd_leaf_dim(&with_pair).unwrap(), ExtNat::Inf);

        let mut take = base.clone();
        take.selected = vec![0];
        take.d_int = vec![vec![0]];
        assert_eq!(emd_leaf_dim(&take).unwrap(), ExtNat::Fin(1));

        let mut bad = base;
        bad.bag = vec![0, 1];
        assert!(emd_leaf_dim(&bad).is_err());
    }

    #[test]
    fn full_runs_match_brute() {
        for g in [
            Graph::path(4),
            Graph::path(5),
            Graph::cycle(4),
            Graph::cycle(6),
            Graph::complete(3),
            Graph::star(3),
            Graph::star(4),
        ] {
            assert_eq!(dp(&g), brute_md(&g).unwrap().optimum);
        }
    }

    #[test]
    fn single_vertex() {
        let g = Graph::from_edges(1, &[]).unwrap();
        assert_eq!(dp(&g), 0);
    }

    #[test]
    fn random_graphs_match_brute() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(21);
        let mut done = 0;
        while done < 40 {
            let n = rng.gen_range(2..8);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.45) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            if !g.is_connected() {
                continue;
            }
            done += 1;
            assert_eq!(dp(&g), brute_md(&g).unwrap().optimum, "graph {g:?}");
        }
    }
}
