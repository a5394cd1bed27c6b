//! Vertex covers, twin-based kernelization and the XP algorithms
//! parameterized by vertex cover number.

use crate::graph::{all_pairs_distances, Graph, TwinKind};
use crate::oracle::{is_geodetic_set, is_resolving_set};
use crate::{Decision, Error, Method, Problem, Result, SolutionReport};
use std::collections::BTreeSet;

/// Endpoints of a greedily computed maximal matching: covers all edges
/// and has at most twice the minimum vertex cover size.
pub fn approx_vc_2(g: &Graph) -> Vec<usize> {
    let mut matched = vec![false; g.vertex_count()];
    let mut cover = Vec::new();
    for (u, v) in g.edges() {
        if !matched[u] && !matched[v] {
            matched[u] = true;
            matched[v] = true;
            cover.push(u);
            cover.push(v);
        }
    }
    cover.sort_unstable();
    cover
}

/// Mutable adjacency view used by the branching solver.
struct VcState {
    adj: Vec<BTreeSet<usize>>,
    alive: Vec<bool>,
}

impl VcState {
    fn new(g: &Graph) -> Self {
        VcState {
            adj: (0..g.vertex_count())
                .map(|v| g.neighbors(v).iter().copied().collect())
                .collect(),
            alive: vec![true; g.vertex_count()],
        }
    }

    fn remove(&mut self, v: usize) {
        self.alive[v] = false;
        let nbrs: Vec<usize> = self.adj[v].iter().copied().collect();
        for u in nbrs {
            self.adj[u].remove(&v);
        }
        self.adj[v].clear();
    }

    fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Lower bound from a greedy matching.
    fn matching_bound(&self) -> usize {
        let mut matched = vec![false; self.adj.len()];
        let mut size = 0;
        for u in 0..self.adj.len() {
            if matched[u] || !self.alive[u] {
                continue;
            }
            if let Some(&v) = self.adj[u].iter().find(|&&v| !matched[v]) {
                matched[u] = true;
                matched[v] = true;
                size += 1;
            }
        }
        size
    }
}

fn vc_branch(state: &mut VcState, chosen: &mut Vec<usize>, best: &mut Option<Vec<usize>>) {
    // Reductions: isolated vertices are ignored; a degree-1 vertex forces
    // its neighbor; a vertex whose closed neighborhood contains another
    // vertex's closed neighborhood may be taken (dominance).
    let mut undo: Vec<(usize, Vec<usize>)> = Vec::new();
    loop {
        let mut acted = false;
        for v in 0..state.adj.len() {
            if !state.alive[v] || state.adj[v].len() != 1 {
                continue;
            }
            let u = *state.adj[v].iter().next().unwrap();
            undo.push((u, state.adj[u].iter().copied().collect()));
            chosen.push(u);
            state.remove(u);
            acted = true;
            break;
        }
        if acted {
            continue;
        }
        // Dominance: if N[u] ⊆ N[v] for an edge (u, v), take v.
        'dom: for u in 0..state.adj.len() {
            if !state.alive[u] || state.adj[u].is_empty() {
                continue;
            }
            for &v in state.adj[u].clone().iter() {
                let dominated = state.adj[u]
                    .iter()
                    .all(|&w| w == v || state.adj[v].contains(&w));
                if dominated {
                    undo.push((v, state.adj[v].iter().copied().collect()));
                    chosen.push(v);
                    state.remove(v);
                    acted = true;
                    break 'dom;
                }
            }
        }
        if !acted {
            break;
        }
    }

    let done = state.edge_count() == 0;
    if done {
        let candidate = {
            let mut c = chosen.clone();
            c.sort_unstable();
            c
        };
        let better = match best {
            None => true,
            Some(b) => candidate.len() < b.len() || (candidate.len() == b.len() && candidate < *b),
        };
        if better {
            *best = Some(candidate);
        }
    } else {
        let prune = match best {
            Some(b) => chosen.len() + state.matching_bound() >= b.len(),
            None => false,
        };
        if !prune {
            // Branch on a maximum-degree vertex (lowest id on ties):
            // either it is in the cover, or its whole neighborhood is.
            let v = (0..state.adj.len())
                .filter(|&v| state.alive[v])
                .max_by(|&a, &b| {
                    state.adj[a]
                        .len()
                        .cmp(&state.adj[b].len())
                        .then(b.cmp(&a))
                })
                .unwrap();
            let saved_v = state.adj[v].iter().copied().collect::<Vec<_>>();

            chosen.push(v);
            state.remove(v);
            vc_branch(state, chosen, best);
            chosen.pop();
            state.alive[v] = true;
            for &u in &saved_v {
                state.adj[u].insert(v);
                state.adj[v].insert(u);
            }

            let nbrs = saved_v.clone();
            let mut saved: Vec<(usize, Vec<usize>)> = Vec::new();
            for &u in &nbrs {
                saved.push((u, state.adj[u].iter().copied().collect()));
                chosen.push(u);
                state.remove(u);
            }
            vc_branch(state, chosen, best);
            for _ in &nbrs {
                chosen.pop();
            }
            for (u, old) in saved.into_iter().rev() {
                state.alive[u] = true;
                for w in old {
                    state.adj[u].insert(w);
                    state.adj[w].insert(u);
                }
            }
        }
    }

    for (u, old) in undo.into_iter().rev() {
        chosen.pop();
        state.alive[u] = true;
        for w in old {
            state.adj[u].insert(w);
            state.adj[w].insert(u);
        }
    }
}

/// Minimum vertex cover by branching, solved per connected component.
/// Deterministic: same input, same output.
pub fn exact_vc(g: &Graph) -> Vec<usize> {
    let mut cover = Vec::new();
    for component in g.components() {
        if component.len() == 1 {
            continue;
        }
        let (sub, map) = g.induced(&component);
        let mut state = VcState::new(&sub);
        let mut chosen = Vec::new();
        let mut best = None;
        vc_branch(&mut state, &mut chosen, &mut best);
        cover.extend(best.expect("branching always terminates").into_iter().map(|v| map[v]));
    }
    cover.sort_unstable();
    cover
}

/// Cover used by the kernels: minimum when cheap, 2-approximation
/// otherwise (the twin rules only need some cover of the graph).
fn kernel_cover(g: &Graph) -> Vec<usize> {
    let approx = approx_vc_2(g);
    if approx.len() <= 26 {
        exact_vc(g)
    } else {
        approx
    }
}

/// Outcome of a kernelization run.
#[derive(Debug, Clone)]
pub struct KernelResult {
    /// Reduced graph over the surviving vertices, relabelled densely.
    pub graph: Graph,
    /// Original ids of the surviving vertices, ascending; position = new id.
    pub vertex_map: Vec<usize>,
    /// Reduced budget. Negative budgets are reported through `no_instance`.
    pub budget: i64,
    /// One entry per deletion: original vertex id, rule id, budget delta.
    pub log: Vec<(usize, &'static str, i64)>,
    /// Vertex cover (original ids) the rules were applied against.
    pub cover: Vec<usize>,
    /// Set when the budget went negative: the instance is replaced by the
    /// canonical constant-size NO instance (a single vertex, budget -1).
    pub no_instance: bool,
}

impl KernelResult {
    pub fn is_no_instance(&self) -> bool {
        self.no_instance
    }
}

fn finish_kernel(
    g: &Graph,
    deleted: &[bool],
    budget: i64,
    log: Vec<(usize, &'static str, i64)>,
    cover: Vec<usize>,
) -> KernelResult {
    if budget < 0 {
        return KernelResult {
            graph: Graph::from_edges(1, &[]).unwrap(),
            vertex_map: vec![0],
            budget: -1,
            log,
            cover,
            no_instance: true,
        };
    }
    let keep: Vec<usize> = (0..g.vertex_count()).filter(|&v| !deleted[v]).collect();
    let (graph, vertex_map) = g.induced(&keep);
    KernelResult {
        graph,
        vertex_map,
        budget,
        log,
        cover,
        no_instance: false,
    }
}

/// Twin rule shared by the metric-dimension and strong-metric-dimension
/// kernels: while three vertices outside the cover are pairwise false
/// twins, delete one and decrease the budget.
fn kernelize_twins(g: &Graph, k: i64, rule: &'static str) -> Result<KernelResult> {
    if !g.is_connected() {
        return Err(Error::Disconnected("kernelization requires a connected graph"));
    }
    let cover = kernel_cover(g);
    let in_cover = {
        let mut mask = vec![false; g.vertex_count()];
        for &v in &cover {
            mask[v] = true;
        }
        mask
    };
    let mut deleted = vec![false; g.vertex_count()];
    let mut budget = k;
    let mut log = Vec::new();
    loop {
        if budget < 0 {
            return Ok(finish_kernel(g, &deleted, budget, log, cover));
        }
        // Group surviving independent-set vertices by neighborhood
        // (deleting an independent-set vertex never changes another
        // vertex's neighborhood, so recomputing groups per sweep is exact).
        let mut groups: std::collections::BTreeMap<Vec<usize>, Vec<usize>> = Default::default();
        for v in 0..g.vertex_count() {
            if deleted[v] || in_cover[v] {
                continue;
            }
            let nb: Vec<usize> = g.neighbors(v).iter().copied().filter(|&u| !deleted[u]).collect();
            groups.entry(nb).or_default().push(v);
        }
        let target = groups.values().find(|members| members.len() >= 3);
        match target {
            Some(members) => {
                let x = *members.last().unwrap();
                deleted[x] = true;
                budget -= 1;
                log.push((x, rule, -1));
            }
            None => return Ok(finish_kernel(g, &deleted, budget, log, cover)),
        }
    }
}

/// Metric-dimension kernel: false-twin rule on the independent side.
/// Fixpoint has at most `|X| + 2 * 2^|X|` vertices.
pub fn kernelize_md_vc(g: &Graph, k: i64) -> Result<KernelResult> {
    kernelize_twins(g, k, "md-twins")
}

/// Strong-metric-dimension kernel: same rule, same bound.
pub fn kernelize_smd_vc(g: &Graph, k: i64) -> Result<KernelResult> {
    kernelize_twins(g, k, "smd-twins")
}

/// Geodetic-set kernel. Rule 1 (to fixpoint first in each sweep): three
/// simplicial vertices that are mutual (false or true) twins lose one,
/// budget -1. Rule 2: six false twins that are neither true twins nor
/// simplicial lose one, budget unchanged. Fixpoint has at most
/// `|X| + 5 * 2^|X|` vertices.
pub fn kernelize_gs_vc(g: &Graph, k: i64) -> Result<KernelResult> {
    if !g.is_connected() {
        return Err(Error::Disconnected("kernelization requires a connected graph"));
    }
    let cover = kernel_cover(g);
    let mut current = g.clone();
    // Survivors of `g`; current[i] corresponds to original alive[i].
    let mut alive: Vec<usize> = (0..g.vertex_count()).collect();
    let mut budget = k;
    let mut log = Vec::new();

    loop {
        if budget < 0 {
            break;
        }
        let tc = current.twin_classes();
        // Rule 1: simplicial twin triples (false and true classes alike).
        let rule1 = tc
            .nontrivial(TwinKind::False)
            .into_iter()
            .chain(tc.nontrivial(TwinKind::True))
            .filter(|class| class.len() >= 3)
            .find(|class| class.iter().all(|&v| current.is_simplicial(v)));
        if let Some(class) = rule1 {
            let x = *class.last().unwrap();
            log.push((alive[x], "gs-simplicial", -1));
            budget -= 1;
            remove_vertex(&mut current, &mut alive, x);
            continue;
        }
        // Rule 2: six-member false-twin classes, not true twins (a
        // nontrivial false-twin class never is) and not simplicial.
        let rule2 = tc
            .nontrivial(TwinKind::False)
            .into_iter()
            .filter(|class| class.len() >= 6)
            .find(|class| class.iter().all(|&v| !current.is_simplicial(v)));
        if let Some(class) = rule2 {
            let x = *class.last().unwrap();
            log.push((alive[x], "gs-open-twins", 0));
            remove_vertex(&mut current, &mut alive, x);
            continue;
        }
        break;
    }

    if budget < 0 {
        return Ok(KernelResult {
            graph: Graph::from_edges(1, &[]).unwrap(),
            vertex_map: vec![0],
            budget: -1,
            log,
            cover,
            no_instance: true,
        });
    }
    Ok(KernelResult {
        graph: current,
        vertex_map: alive,
        budget,
        log,
        cover,
        no_instance: false,
    })
}

fn remove_vertex(g: &mut Graph, alive: &mut Vec<usize>, v: usize) {
    let keep: Vec<usize> = (0..g.vertex_count()).filter(|&u| u != v).collect();
    let (next, _) = g.induced(&keep);
    alive.remove(v);
    *g = next;
}

/// Enumerates sets `base ∪ A` with `A ⊆ pool`, `|A| <= max_extra`, in
/// cardinality-ascending then lexicographic order, returning the first
/// set accepted by `check`. The deadline is checked between cardinality
/// layers.
fn first_accepted(
    base: &[usize],
    pool: &[usize],
    max_extra: usize,
    deadline: Option<std::time::Instant>,
    mut check: impl FnMut(&[usize]) -> Result<bool>,
) -> Result<Option<Vec<usize>>> {
    fn rec(
        pool: &[usize],
        start: usize,
        want: usize,
        chosen: &mut Vec<usize>,
        base: &[usize],
        check: &mut impl FnMut(&[usize]) -> Result<bool>,
    ) -> Result<Option<Vec<usize>>> {
        if chosen.len() == want {
            let mut candidate = base.to_vec();
            candidate.extend_from_slice(chosen);
            candidate.sort_unstable();
            candidate.dedup();
            if check(&candidate)? {
                return Ok(Some(candidate));
            }
            return Ok(None);
        }
        for i in start..pool.len() {
            if pool.len() - i < want - chosen.len() {
                break;
            }
            chosen.push(pool[i]);
            if let Some(hit) = rec(pool, i + 1, want, chosen, base, check)? {
                return Ok(Some(hit));
            }
            chosen.pop();
        }
        Ok(None)
    }
    for extra in 0..=max_extra.min(pool.len()) {
        if let Some(deadline) = deadline {
            if std::time::Instant::now() >= deadline {
                return Err(Error::TimeBudgetExceeded);
            }
        }
        let mut chosen = Vec::with_capacity(extra);
        if let Some(hit) = rec(pool, 0, extra, &mut chosen, base, &mut check)? {
            return Ok(Some(hit));
        }
    }
    Ok(None)
}

/// Metric dimension in `n^O(vc)`: forced twin-class members plus an
/// enumerated remainder of at most `|X|` vertices.
pub fn xp_md_vc(g: &Graph, k: usize) -> Result<Decision> {
    xp_md_vc_budgeted(g, k, None)
}

/// Budgeted variant of [`xp_md_vc`].
pub fn xp_md_vc_budgeted(
    g: &Graph,
    k: usize,
    deadline: Option<std::time::Instant>,
) -> Result<Decision> {
    if !g.is_connected() {
        return Err(Error::Disconnected("xp solver requires a connected graph"));
    }
    let dm = all_pairs_distances(g);
    let cover = exact_vc(g);
    let in_cover = {
        let mut mask = vec![false; g.vertex_count()];
        for &v in &cover {
            mask[v] = true;
        }
        mask
    };
    // Largest F ⊆ I such that every member of F has a false twin in I∖F:
    // per twin class of I keep the lowest-id representative out of F.
    let mut forced: Vec<usize> = Vec::new();
    let tc = g.twin_classes();
    for class in tc.nontrivial(TwinKind::False) {
        let members: Vec<usize> = class.iter().copied().filter(|&v| !in_cover[v]).collect();
        if members.len() >= 2 {
            forced.extend(&members[1..]);
        }
    }
    forced.sort_unstable();
    if (k as i64) < forced.len() as i64 {
        return Ok(Decision::No);
    }
    let pool: Vec<usize> = (0..g.vertex_count()).filter(|v| !forced.contains(v)).collect();
    let hit = first_accepted(&forced, &pool, cover.len(), deadline, |candidate| {
        if candidate.len() > k {
            return Ok(false);
        }
        is_resolving_set(g, &dm, candidate)
    })?;
    Ok(match hit {
        Some(witness) => Decision::Yes(SolutionReport {
            problem: Problem::Md,
            optimum: witness.len(),
            witness,
            method: Method::XpVc,
        }),
        None => Decision::No,
    })
}

/// Geodetic set in `n^O(vc)`: simplicial vertices are forced, the
/// remainder is enumerated up to size `|X|`.
pub fn xp_gs_vc(g: &Graph, k: usize) -> Result<Decision> {
    xp_gs_vc_budgeted(g, k, None)
}

/// Budgeted variant of [`xp_gs_vc`].
pub fn xp_gs_vc_budgeted(
    g: &Graph,
    k: usize,
    deadline: Option<std::time::Instant>,
) -> Result<Decision> {
    if !g.is_connected() {
        return Err(Error::Disconnected("xp solver requires a connected graph"));
    }
    let dm = all_pairs_distances(g);
    let cover = exact_vc(g);
    let forced = g.simplicial_vertices();
    if forced.len() > k {
        return Ok(Decision::No);
    }
    let pool: Vec<usize> = (0..g.vertex_count()).filter(|v| !forced.contains(v)).collect();
    let hit = first_accepted(&forced, &pool, cover.len(), deadline, |candidate| {
        if candidate.len() > k {
            return Ok(false);
        }
        is_geodetic_set(g, &dm, candidate)
    })?;
    Ok(match hit {
        Some(witness) => Decision::Yes(SolutionReport {
            problem: Problem::Gs,
            optimum: witness.len(),
            witness,
            method: Method::XpVc,
        }),
        None => Decision::No,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{brute_gs, brute_md};

    #[test]
    fn approx_examples() {
        let single = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(approx_vc_2(&single), vec![0, 1]);
        assert!(approx_vc_2(&Graph::from_edges(3, &[]).unwrap()).is_empty());
        let p4 = Graph::path(4);
        let cover = approx_vc_2(&p4);
        assert!(cover.len() <= 4);
        for (u, v) in p4.edges() {
            assert!(cover.contains(&u) || cover.contains(&v));
        }
    }

    #[test]
    fn exact_vc_examples() {
        assert_eq!(exact_vc(&Graph::complete(3)).len(), 2);
        assert_eq!(exact_vc(&Graph::star(4)), vec![0]);
        assert_eq!(exact_vc(&Graph::cycle(5)).len(), 3);
    }

    #[test]
    fn exact_vc_covers_all_edges() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..30 {
            let n = rng.gen_range(2..10);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.4) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let cover = exact_vc(&g);
            for (u, v) in g.edges() {
                assert!(cover.contains(&u) || cover.contains(&v));
            }
            assert!(cover.len() <= approx_vc_2(&g).len());
        }
    }

    #[test]
    fn md_kernel_star() {
        // Minimum cover of K_{1,4} is the center; two leaves get deleted.
        let res = kernelize_md_vc(&Graph::star(4), 3).unwrap();
        assert_eq!(res.budget, 1);
        assert_eq!(res.log.len(), 2);
        assert_eq!(res.graph.vertex_count(), 3);
        assert_eq!(
            res.graph.vertices().filter(|&v| res.graph.degree(v) == 1).count(),
            2
        );
    }

    #[test]
    fn md_kernel_path_unchanged() {
        let res = kernelize_md_vc(&Graph::path(4), 2).unwrap();
        assert_eq!(res.budget, 2);
        assert!(res.log.is_empty());
        assert_eq!(res.graph, Graph::path(4));
    }

    #[test]
    fn kernel_no_instance() {
        let res = kernelize_md_vc(&Graph::star(5), 0).unwrap();
        assert!(res.is_no_instance());
        assert_eq!(res.budget, -1);
        assert_eq!(res.graph.vertex_count(), 1);
    }

    #[test]
    fn smd_kernel_star() {
        let res = kernelize_smd_vc(&Graph::star(4), 4).unwrap();
        assert_eq!(res.budget, 2);
        assert_eq!(res.log.len(), 2);
        let unchanged = kernelize_smd_vc(&Graph::path(4), 2).unwrap();
        assert_eq!(unchanged.budget, 2);
        assert!(unchanged.log.is_empty());
    }

    #[test]
    fn gs_kernel_examples() {
        let res = kernelize_gs_vc(&Graph::star(3), 3).unwrap();
        assert_eq!(res.budget, 2);
        assert_eq!(res.log.len(), 1);
        assert_eq!(res.log[0].1, "gs-simplicial");

        let unchanged = kernelize_gs_vc(&Graph::cycle(4), 2).unwrap();
        assert!(unchanged.log.is_empty());

        // Seven-member non-simplicial false-twin class: rule 2 deletes one
        // member without touching the budget.
        let mut edges = vec![(0, 1)];
        for v in 2..9 {
            edges.push((0, v));
            edges.push((1, v));
        }
        let g = Graph::from_edges(9, &edges).unwrap();
        let res = kernelize_gs_vc(&g, 5).unwrap();
        assert_eq!(res.budget, 5);
        assert!(res.log.iter().any(|(_, rule, delta)| *rule == "gs-open-twins" && *delta == 0));
    }

    #[test]
    fn xp_md_examples() {
        assert!(xp_md_vc(&Graph::path(4), 1).unwrap().is_yes());
        assert!(!xp_md_vc(&Graph::star(4), 2).unwrap().is_yes());
        assert!(xp_md_vc(&Graph::complete(4), 3).unwrap().is_yes());
    }

    #[test]
    fn xp_gs_examples() {
        assert!(xp_gs_vc(&Graph::path(4), 2).unwrap().is_yes());
        assert!(!xp_gs_vc(&Graph::complete(3), 2).unwrap().is_yes());
        assert!(xp_gs_vc(&Graph::cycle(6), 2).unwrap().is_yes());
    }

    #[test]
    fn xp_matches_brute_on_small_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let mut checked = 0;
        while checked < 25 {
            let n = rng.gen_range(2..8);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.5) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            if !g.is_connected() {
                continue;
            }
            checked += 1;
            let md = brute_md(&g).unwrap().optimum;
            let gs = brute_gs(&g).unwrap().optimum;
            for k in 0..=n {
                assert_eq!(xp_md_vc(&g, k).unwrap().is_yes(), k >= md);
                assert_eq!(xp_gs_vc(&g, k).unwrap().is_yes(), k >= gs);
            }
        }
    }
}
