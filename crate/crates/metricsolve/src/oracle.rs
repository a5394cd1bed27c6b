//! Polynomial-time verifiers and brute-force reference solvers.
//!
//! The brute-force solvers enumerate candidate sets in cardinality-ascending
//! then lexicographic order, so the returned witness is the
//! lexicographically smallest optimum set. Forced vertices (simplicial for
//! geodetic sets, lowest member of each nontrivial twin class for the two
//! resolving problems) are seeded before the search; the seeds are exactly
//! the vertices the lexicographically smallest optimum must contain.

use crate::graph::{all_pairs_distances, DistanceMatrix, Graph, TwinKind};
use crate::{Error, Method, Problem, Result, SolutionReport};

/// Default cap on the brute-force instance size.
pub const DEFAULT_BRUTE_CAP: usize = 16;

fn require_connected(g: &Graph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected("solvers require a connected graph"))
    }
}

/// True iff every vertex pair `u != v` has some `w` in `s` with
/// `d(w,u) != d(w,v)`.
pub fn is_resolving_set(g: &Graph, dm: &DistanceMatrix, s: &[usize]) -> Result<bool> {
    require_connected(g)?;
    let n = g.vertex_count();
    for u in 0..n {
        for v in u + 1..n {
            if !s.iter().any(|&w| dm.dist(w, u) != dm.dist(w, v)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// True iff every vertex lies on a shortest path between two members of
/// `s` (vertices of `s` count via the trivial path).
pub fn is_geodetic_set(g: &Graph, dm: &DistanceMatrix, s: &[usize]) -> Result<bool> {
    require_connected(g)?;
    let n = g.vertex_count();
    'outer: for u in 0..n {
        if s.contains(&u) {
            continue;
        }
        for (i, &s1) in s.iter().enumerate() {
            for &s2 in &s[i + 1..] {
                if dm.dist(s1, u) + dm.dist(u, s2) == dm.dist(s1, s2) {
                    continue 'outer;
                }
            }
        }
        return Ok(false);
    }
    Ok(true)
}

/// True iff every pair `u != v` has some `w` in `s` such that `u` lies on a
/// shortest `w`-`v` path or `v` lies on a shortest `w`-`u` path.
pub fn is_strong_resolving_set(g: &Graph, dm: &DistanceMatrix, s: &[usize]) -> Result<bool> {
    require_connected(g)?;
    let n = g.vertex_count();
    for u in 0..n {
        for v in u + 1..n {
            let ok = s.iter().any(|&w| {
                dm.dist(w, u) == dm.dist(w, v) + dm.dist(v, u)
                    || dm.dist(w, v) == dm.dist(w, u) + dm.dist(u, v)
            });
            if !ok {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Verifier signature shared by the three problems.
pub fn verifier(problem: Problem) -> fn(&Graph, &DistanceMatrix, &[usize]) -> Result<bool> {
    match problem {
        Problem::Md => is_resolving_set,
        Problem::Gs => is_geodetic_set,
        Problem::Smd => is_strong_resolving_set,
    }
}

/// Smallest set passing `verifier` that contains `forced`, searched in
/// cardinality-ascending then lexicographic order over the free vertices.
fn brute_search(
    g: &Graph,
    dm: &DistanceMatrix,
    problem: Problem,
    forced: &[usize],
    deadline: Option<std::time::Instant>,
) -> Result<SolutionReport> {
    let n = g.vertex_count();
    let check = verifier(problem);
    let free: Vec<usize> = (0..n).filter(|v| !forced.contains(v)).collect();
    let mut current: Vec<usize> = forced.to_vec();

    for extra in 0..=free.len() {
        if let Some(deadline) = deadline {
            if std::time::Instant::now() >= deadline {
                return Err(Error::TimeBudgetExceeded);
            }
        }
        let mut found: Option<Vec<usize>> = None;
        let mut chosen: Vec<usize> = Vec::with_capacity(extra);
        // Enumerates `extra`-subsets of `free` in lexicographic order.
        fn rec(
            free: &[usize],
            start: usize,
            extra: usize,
            chosen: &mut Vec<usize>,
            current: &mut Vec<usize>,
            g: &Graph,
            dm: &DistanceMatrix,
            check: fn(&Graph, &DistanceMatrix, &[usize]) -> Result<bool>,
            found: &mut Option<Vec<usize>>,
        ) -> Result<()> {
            if found.is_some() {
                return Ok(());
            }
            if chosen.len() == extra {
                let mut candidate = current.clone();
                candidate.extend_from_slice(chosen);
                candidate.sort_unstable();
                if check(g, dm, &candidate)? {
                    *found = Some(candidate);
                }
                return Ok(());
            }
            for i in start..free.len() {
                if free.len() - i < extra - chosen.len() {
                    break;
                }
                chosen.push(free[i]);
                rec(free, i + 1, extra, chosen, current, g, dm, check, found)?;
                chosen.pop();
                if found.is_some() {
                    return Ok(());
                }
            }
            Ok(())
        }
        rec(
            &free,
            0,
            extra,
            &mut chosen,
            &mut current,
            g,
            dm,
            check,
            &mut found,
        )?;
        if let Some(witness) = found {
            let optimum = witness.len();
            debug_assert!(check(g, dm, &witness)?);
            return Ok(SolutionReport {
                problem,
                optimum,
                witness,
                method: Method::Brute,
            });
        }
    }
    unreachable!("the full vertex set always verifies")
}

fn brute(
    g: &Graph,
    problem: Problem,
    cap: usize,
    deadline: Option<std::time::Instant>,
) -> Result<SolutionReport> {
    require_connected(g)?;
    if g.vertex_count() > cap {
        return Err(Error::CapExceeded(format!(
            "brute-force solver capped at n <= {cap}, got n = {}",
            g.vertex_count()
        )));
    }
    let dm = all_pairs_distances(g);
    let forced: Vec<usize> = match problem {
        Problem::Gs => g.simplicial_vertices(),
        Problem::Md | Problem::Smd => {
            // One vertex per nontrivial twin class must be in any solution;
            // the lexicographically smallest optimum contains the lowest
            // member of each class.
            let tc = g.twin_classes();
            let mut forced: Vec<usize> = tc
                .nontrivial(TwinKind::False)
                .into_iter()
                .chain(tc.nontrivial(TwinKind::True))
                .map(|class| class[0])
                .collect();
            forced.sort_unstable();
            forced.dedup();
            forced
        }
    };
    brute_search(g, &dm, problem, &forced, deadline)
}

/// Exact metric dimension by exhaustive search (default cap [`DEFAULT_BRUTE_CAP`]).
pub fn brute_md(g: &Graph) -> Result<SolutionReport> {
    brute(g, Problem::Md, DEFAULT_BRUTE_CAP, None)
}

/// Exact geodetic number by exhaustive search.
pub fn brute_gs(g: &Graph) -> Result<SolutionReport> {
    brute(g, Problem::Gs, DEFAULT_BRUTE_CAP, None)
}

/// Exact strong metric dimension by exhaustive search.
pub fn brute_smd(g: &Graph) -> Result<SolutionReport> {
    brute(g, Problem::Smd, DEFAULT_BRUTE_CAP, None)
}

/// Same as the `brute_*` functions but with an explicit size cap.
pub fn brute_with_cap(g: &Graph, problem: Problem, cap: usize) -> Result<SolutionReport> {
    brute(g, problem, cap, None)
}

/// Budgeted variant; the deadline is checked between cardinality layers.
pub fn brute_budgeted(
    g: &Graph,
    problem: Problem,
    cap: usize,
    deadline: Option<std::time::Instant>,
) -> Result<SolutionReport> {
    brute(g, problem, cap, deadline)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dm(g: &Graph) -> DistanceMatrix {
        all_pairs_distances(g)
    }

    #[test]
    fn resolving_set_examples() {
        let p4 = Graph::path(4);
        assert!(is_resolving_set(&p4, &dm(&p4), &[0]).unwrap());
        let k3 = Graph::complete(3);
        assert!(!is_resolving_set(&k3, &dm(&k3), &[0]).unwrap());
        let c4 = Graph::cycle(4);
        assert!(is_resolving_set(&c4, &dm(&c4), &[0, 1]).unwrap());
    }

    #[test]
    fn geodetic_set_examples() {
        let p4 = Graph::path(4);
        assert!(is_geodetic_set(&p4, &dm(&p4), &[0, 3]).unwrap());
        let k3 = Graph::complete(3);
        assert!(!is_geodetic_set(&k3, &dm(&k3), &[0, 1]).unwrap());
        let c6 = Graph::cycle(6);
        assert!(is_geodetic_set(&c6, &dm(&c6), &[0, 3]).unwrap());
    }

    #[test]
    fn strong_resolving_set_examples() {
        let p3 = Graph::path(3);
        assert!(is_strong_resolving_set(&p3, &dm(&p3), &[0, 2]).unwrap());
        assert!(!is_strong_resolving_set(&p3, &dm(&p3), &[1]).unwrap());
        let star = Graph::star(3);
        assert!(is_strong_resolving_set(&star, &dm(&star), &[1, 2]).unwrap());
    }

    #[test]
    fn disconnected_is_rejected() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(is_resolving_set(&g, &dm(&g), &[0]).is_err());
        assert!(brute_md(&g).is_err());
    }

    #[test]
    fn brute_values() {
        assert_eq!(brute_md(&Graph::path(5)).unwrap().optimum, 1);
        assert_eq!(brute_gs(&Graph::complete(3)).unwrap().optimum, 3);
        assert_eq!(brute_smd(&Graph::complete(4)).unwrap().optimum, 3);
    }

    #[test]
    fn cap_is_enforced() {
        let g = Graph::path(17);
        assert!(matches!(brute_md(&g), Err(Error::CapExceeded(_))));
    }

    #[test]
    fn witnesses_verify_and_gs_contains_pendants() {
        for g in [Graph::path(6), Graph::star(4), Graph::cycle(5)] {
            let d = dm(&g);
            let md = brute_md(&g).unwrap();
            assert!(is_resolving_set(&g, &d, &md.witness).unwrap());
            let gs = brute_gs(&g).unwrap();
            assert!(is_geodetic_set(&g, &d, &gs.witness).unwrap());
            for v in g.vertices() {
                if g.degree(v) == 1 {
                    assert!(gs.witness.contains(&v));
                }
            }
            let smd = brute_smd(&g).unwrap();
            assert!(is_strong_resolving_set(&g, &d, &smd.witness).unwrap());
            assert!(smd.optimum >= md.optimum);
        }
    }
}
