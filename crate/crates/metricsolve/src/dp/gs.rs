//! Bottom-up dynamic program for geodetic set over a nice tree
//! decomposition.
//!
//! A table entry is the canonical signature of a partial solution `S`
//! inside the processed subgraph `G_i`:
//! * the selected bag vertices,
//! * the inside classes realized by `S`,
//! * `dd`: all class pairs of distinct solution vertices together with
//!   their distance (the material future vertices can be covered with),
//! * `obligations`: one entry per uncovered vertex, holding its class and
//!   the set of outside classes `t` such that choosing any future vertex
//!   of class `t` would cover it together with a current solution vertex.
//!   A future pair can also discharge an obligation: when its first
//!   member is chosen the obligation's class set grows accordingly.
//!
//! At the root no outside vertices remain, so the geodetic number is the
//! cheapest entry without obligations.

use super::classes::NodeClasses;
use super::{min_sum, BitSet, ExtNat};
use crate::graph::{all_pairs_distances, Graph};
use crate::oracle::is_geodetic_set;
use crate::td::{NiceTreeDecomposition, NodeKind};
use crate::{Error, Method, Problem, Result, SolutionReport};
use std::collections::HashMap;

/// An instance of the extended problem at a single node; only the leaf
/// value table is exposed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EgsInstance {
    pub bag: Vec<usize>,
    pub selected: Vec<usize>,
    pub d_int: Vec<Vec<u32>>,
    pub d_ext: Vec<Vec<u32>>,
    /// Unordered class pairs plus their distance, realized inside.
    pub d_intint: Vec<(Vec<u32>, Vec<u32>, u32)>,
    /// Unordered class pairs plus their distance, realized outside.
    pub d_extext: Vec<(Vec<u32>, Vec<u32>, u32)>,
}

/// Value table for a leaf node with bag `{v}`: 0 when nothing is selected
/// or required, 1 when `v` is selected, the only inside requirement is its
/// own class and no inside pair is required, infinite otherwise.
pub fn egs_leaf_dim(inst: &EgsInstance) -> Result<ExtNat> {
    if inst.bag.len() != 1 {
        return Err(Error::InvalidInput(format!(
            "leaf bags contain exactly one vertex, got {}",
            inst.bag.len()
        )));
    }
    let v = inst.bag[0];
    if inst.selected.is_empty() {
        if inst.d_int.is_empty() && inst.d_intint.is_empty() {
            Ok(ExtNat::Fin(0))
        } else {
            Ok(ExtNat::Inf)
        }
    } else if inst.selected == [v] {
        if inst.d_int.iter().all(|r| r == &vec![0u32]) && inst.d_intint.is_empty() {
            Ok(ExtNat::Fin(1))
        } else {
            Ok(ExtNat::Inf)
        }
    } else {
        Ok(ExtNat::Inf)
    }
}

/// Unordered class pair with distance.
type DdEntry = (u16, u16, u16);

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Sig {
    s_bag: u64,
    d_int: BitSet,
    dd: Vec<DdEntry>,
    /// Sorted (class, coverable-by classes) entries for uncovered vertices.
    obligations: Vec<(u16, BitSet)>,
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

fn dd_entry(a: usize, b: usize, d: u32) -> DdEntry {
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    (a as u16, b as u16, d as u16)
}

fn normalize_dd(mut dd: Vec<DdEntry>) -> Vec<DdEntry> {
    dd.sort_unstable();
    dd.dedup();
    dd
}

fn normalize_obls(mut obls: Vec<(u16, BitSet)>) -> Vec<(u16, BitSet)> {
    obls.sort_unstable();
    obls.dedup();
    obls
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

/// `x` (class `c`) lies on a shortest path between a vertex of class `a`
/// and a vertex of class `b` at distance `d`, with all distances running
/// through the bag.
fn pair_covers(c: &[u16], a: &[u16], b: &[u16], d: u32) -> bool {
    min_sum(c, a) + min_sum(c, b) == d
}

/// `x` (class `c`) would be covered by a solution vertex of class `s` and
/// a future vertex of class `t`.
fn class_covers(c: &[u16], s: &[u16], t: &[u16]) -> bool {
    min_sum(c, s) + min_sum(c, t) == min_sum(s, t)
}

fn leaf_table(ctx: &NodeClasses, v: usize) -> Table {
    let mut table = Table::new();
    let v_int = ctx.int_of_vertex[&v];
    table.insert(
        Sig {
            s_bag: 0,
            d_int: BitSet::new(ctx.int_count()),
            dd: vec![],
            obligations: vec![(v_int as u16, BitSet::new(ctx.ext_count()))],
        },
        0,
        Back::Leaf { take: None },
    );
    let mut d_int = BitSet::new(ctx.int_count());
    d_int.set(v_int);
    table.insert(
        Sig {
            s_bag: 1,
            d_int,
            dd: vec![],
            obligations: vec![],
        },
        1,
        Back::Leaf { take: Some(v) },
    );
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
    let dv_child: Vec<u16> = remove_coord(&parent.int_vecs[v_int], p);
    let v_ext_child = child
        .ext_id(&dv_child)
        .expect("introduced vertex realizes a child outside class");

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
    let ext_to_child: Vec<usize> = parent
        .ext_vecs
        .iter()
        .map(|t| {
            child
                .ext_id(&remove_coord(t, p))
                .expect("outside classes survive an introduce")
        })
        .collect();

    // For v's own obligation under type 1: child inside classes r such
    // that a solution vertex of class r covers v together with a future
    // vertex of (parent) class t.
    let v_cover_grid: Vec<BitSet> = parent
        .ext_vecs
        .iter()
        .map(|t| {
            let t_child = remove_coord(t, p);
            let mut bits = BitSet::new(child.int_count());
            for (r, rvec) in child.int_vecs.iter().enumerate() {
                if class_covers(&dv_child, rvec, &t_child) {
                    bits.set(r);
                }
            }
            bits
        })
        .collect();
    // Type 2: additional outside classes covering an obligation class
    // together with v.
    let gain_grid: Vec<Vec<bool>> = (0..parent.int_count())
        .map(|c| {
            (0..parent.ext_count())
                .map(|t| {
                    class_covers(
                        &parent.int_vecs[c],
                        &parent.int_vecs[v_int],
                        &parent.ext_vecs[t],
                    )
                })
                .collect()
        })
        .collect();

    let lift_f = |f: &BitSet| -> BitSet {
        let mut out = BitSet::new(parent.ext_count());
        for t in 0..parent.ext_count() {
            if f.get(ext_to_child[t]) {
                out.set(t);
            }
        }
        out
    };

    let mut table = Table::new();
    for (entry_idx, (csig, ccost, _)) in child_table.entries.iter().enumerate() {
        let lifted_dd: Vec<DdEntry> = csig
            .dd
            .iter()
            .map(|&(a, b, d)| dd_entry(lift_int[a as usize], lift_int[b as usize], d as u32))
            .collect();

        // Type 1: v not selected.
        {
            let mut d_int = BitSet::new(parent.int_count());
            for r in csig.d_int.iter_ones() {
                d_int.set(lift_int[r]);
            }
            let mut obligations: Vec<(u16, BitSet)> = csig
                .obligations
                .iter()
                .map(|(c, f)| (lift_int[*c as usize] as u16, lift_f(f)))
                .collect();
            // v itself: covered by an existing solution pair, otherwise
            // obligated.
            let covered = csig.dd.iter().any(|&(a, b, d)| {
                pair_covers(
                    &dv_child,
                    &child.int_vecs[a as usize],
                    &child.int_vecs[b as usize],
                    d as u32,
                )
            });
            if !covered {
                let mut f = BitSet::new(parent.ext_count());
                for t in 0..parent.ext_count() {
                    if csig.d_int.intersects(&v_cover_grid[t]) {
                        f.set(t);
                    }
                }
                obligations.push((v_int as u16, f));
            }
            table.insert(
                Sig {
                    s_bag: insert_bit(csig.s_bag, p, false),
                    d_int,
                    dd: normalize_dd(lifted_dd.clone()),
                    obligations: normalize_obls(obligations),
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
            let mut dd = lifted_dd;
            for r in csig.d_int.iter_ones() {
                let d = min_sum(&child.int_vecs[r], &dv_child);
                dd.push(dd_entry(lift_int[r], v_int, d));
            }
            let mut obligations = Vec::new();
            for (c, f) in &csig.obligations {
                if f.get(v_ext_child) {
                    continue; // covered by an old solution vertex and v
                }
                let pc = lift_int[*c as usize];
                let mut nf = lift_f(f);
                for t in 0..parent.ext_count() {
                    if gain_grid[pc][t] {
                        nf.set(t);
                    }
                }
                obligations.push((pc as u16, nf));
            }
            table.insert(
                Sig {
                    s_bag: insert_bit(csig.s_bag, p, true),
                    d_int,
                    dd: normalize_dd(dd),
                    obligations: normalize_obls(obligations),
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
    // Any realized fine extension decides membership for the coarse class.
    let ext_rep: Vec<usize> = parent
        .ext_vecs
        .iter()
        .map(|t| {
            (0..child.ext_count())
                .find(|&c| remove_coord(&child.ext_vecs[c], p) == *t)
                .expect("outside classes survive a forget")
        })
        .collect();

    let mut table = Table::new();
    for (entry_idx, (csig, ccost, _)) in child_table.entries.iter().enumerate() {
        let mut d_int = BitSet::new(parent.int_count());
        for r in csig.d_int.iter_ones() {
            d_int.set(trunc_int[r]);
        }
        let dd = normalize_dd(
            csig.dd
                .iter()
                .map(|&(a, b, d)| dd_entry(trunc_int[a as usize], trunc_int[b as usize], d as u32))
                .collect(),
        );
        let obligations = normalize_obls(
            csig.obligations
                .iter()
                .map(|(c, f)| {
                    let mut nf = BitSet::new(parent.ext_count());
                    for t in 0..parent.ext_count() {
                        if f.get(ext_rep[t]) {
                            nf.set(t);
                        }
                    }
                    (trunc_int[*c as usize] as u16, nf)
                })
                .collect(),
        );
        table.insert(
            Sig {
                s_bag: remove_bit(csig.s_bag, p),
                d_int,
                dd,
                obligations,
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
    let l_int: Vec<usize> = left
        .int_vecs
        .iter()
        .map(|r| parent.int_id(r).expect("child inside class stays realized"))
        .collect();
    let r_int: Vec<usize> = right
        .int_vecs
        .iter()
        .map(|r| parent.int_id(r).expect("child inside class stays realized"))
        .collect();
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

    let mut by_sbag: HashMap<u64, Vec<usize>> = HashMap::new();
    for (i, (sig, _, _)) in right_table.entries.iter().enumerate() {
        by_sbag.entry(sig.s_bag).or_default().push(i);
    }

    let translate_dd = |dd: &[DdEntry], map: &[usize]| -> Vec<DdEntry> {
        dd.iter()
            .map(|&(a, b, d)| dd_entry(map[a as usize], map[b as usize], d as u32))
            .collect()
    };

    // Carries one side's obligations into the joint node.
    let carry_obls = |csig_obls: &[(u16, BitSet)],
                      map: &[usize],
                      own_ext_of_parent_ext: &[usize],
                      sibling_d_parent: &BitSet,
                      sibling_dd_parent: &[DdEntry],
                      sibling_as_own_ext: &[Option<usize>]|
     -> Vec<(u16, BitSet)> {
        let mut out = Vec::new();
        'obls: for (c, f) in csig_obls {
            let pc = map[*c as usize];
            let cvec = &parent.int_vecs[pc];
            // Covered by a pair inside the sibling solution?
            for &(a, b, d) in sibling_dd_parent {
                if pair_covers(cvec, &parent.int_vecs[a as usize], &parent.int_vecs[b as usize], d as u32) {
                    continue 'obls;
                }
            }
            // Covered by an own solution vertex plus a sibling vertex?
            for b in sibling_d_parent.iter_ones() {
                if let Some(e) = sibling_as_own_ext[b] {
                    if f.get(e) {
                        continue 'obls;
                    }
                }
            }
            // Still open: translate the class set and add sibling gains.
            let mut nf = BitSet::new(parent.ext_count());
            for t in 0..parent.ext_count() {
                if f.get(own_ext_of_parent_ext[t]) {
                    nf.set(t);
                }
            }
            for b in sibling_d_parent.iter_ones() {
                for t in 0..parent.ext_count() {
                    if class_covers(cvec, &parent.int_vecs[b], &parent.ext_vecs[t]) {
                        nf.set(t);
                    }
                }
            }
            out.push((pc as u16, nf));
        }
        out
    };

    let mut table = Table::new();
    for (li, (lsig, lcost, _)) in left_table.entries.iter().enumerate() {
        let d1p = {
            let mut bits = BitSet::new(parent.int_count());
            for r in lsig.d_int.iter_ones() {
                bits.set(l_int[r]);
            }
            bits
        };
        let dd1p = translate_dd(&lsig.dd, &l_int);
        let Some(partners) = by_sbag.get(&lsig.s_bag) else {
            continue;
        };
        for &ri in partners {
            let (rsig, rcost, _) = &right_table.entries[ri];
            let mut d2p = BitSet::new(parent.int_count());
            for r in rsig.d_int.iter_ones() {
                d2p.set(r_int[r]);
            }
            let dd2p = translate_dd(&rsig.dd, &r_int);

            let mut d_int = d1p.clone();
            d_int.union_with(&d2p);

            let mut dd = dd1p.clone();
            dd.extend_from_slice(&dd2p);
            for a in d1p.iter_ones() {
                for b in d2p.iter_ones() {
                    if a == b && parent.int_vecs[a].contains(&0) {
                        // A class containing a bag vertex has exactly one
                        // realizer; no distinct pair exists.
                        continue;
                    }
                    let d = min_sum(&parent.int_vecs[a], &parent.int_vecs[b]);
                    dd.push(dd_entry(a, b, d));
                }
            }

            let mut obligations = carry_obls(
                &lsig.obligations,
                &l_int,
                &ext_to_left,
                &d2p,
                &dd2p,
                &parent_int_as_left_ext,
            );
            obligations.extend(carry_obls(
                &rsig.obligations,
                &r_int,
                &ext_to_right,
                &d1p,
                &dd1p,
                &parent_int_as_right_ext,
            ));

            let cost = lcost + rcost - lsig.s_bag.count_ones();
            table.insert(
                Sig {
                    s_bag: lsig.s_bag,
                    d_int,
                    dd: normalize_dd(dd),
                    obligations: normalize_obls(obligations),
                },
                cost,
                Back::Join { left: li, right: ri },
            );
        }
    }
    table
}

/// Geodetic number via the tree-decomposition dynamic program, with a
/// reconstructed and verified witness.
pub fn gs_dp(g: &Graph, ntd: &NiceTreeDecomposition) -> Result<SolutionReport> {
    gs_dp_budgeted(g, ntd, None)
}

/// Budgeted variant; the deadline is checked between nodes.
pub fn gs_dp_budgeted(
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
    let _ = dm.diameter()?;
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
        .filter(|(_, (sig, _, _))| sig.obligations.is_empty())
        .min_by_key(|(_, (_, cost, _))| *cost);
    let Some((best_idx, (_, best_cost, _))) = best else {
        return Err(Error::InvalidInput(
            "dynamic program found no solution (internal error)".into(),
        ));
    };

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
    if witness.len() != *best_cost as usize || !is_geodetic_set(g, &dm, &witness)? {
        return Err(Error::InvalidInput(
            "dynamic program produced an inconsistent witness (internal error)".into(),
        ));
    }
    Ok(SolutionReport {
        problem: Problem::Gs,
        optimum: witness.len(),
        witness,
        method: Method::DpTw,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::brute_gs;
    use crate::td::{heuristic_td, make_nice};

    fn dp(g: &Graph) -> usize {
        let td = heuristic_td(g).unwrap();
        let ntd = make_nice(g, &td).unwrap();
        gs_dp(g, &ntd).unwrap().optimum
    }

    #[test]
    fn leaf_case_table() {
        let base = EgsInstance {
            bag: vec![0],
            selected: vec![],
            d_int: vec![],
            d_ext: vec![],
            d_intint: vec![],
            d_extext: vec![],
        };
        assert_eq!(egs_leaf_dim(&base).unwrap(), ExtNat::Fin(0));

        let mut take = base.clone();
        take.selected = vec![0];
        take.d_int = vec![vec![0]];
        assert_eq!(egs_leaf_dim(&take).unwrap(), ExtNat::Fin(1));

        let mut with_pair = take.clone();
        with_pair.d_intint = vec![(vec![0], vec![1], 1)];
        assert_eq!(egs_leaf_dim(&with_pair).unwrap(), ExtNat::Inf);

        let mut bad = base;
        bad.bag = vec![0, 1];
        assert!(egs_leaf_dim(&bad).is_err());
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
        ] {
            assert_eq!(dp(&g), brute_gs(&g).unwrap().optimum);
        }
    }

    #[test]
    fn single_vertex() {
        let g = Graph::from_edges(1, &[]).unwrap();
        assert_eq!(dp(&g), 1);
    }

    #[test]
    fn random_graphs_match_brute() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(22);
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
            assert_eq!(dp(&g), brute_gs(&g).unwrap().optimum, "graph {g:?}");
        }
    }
}
