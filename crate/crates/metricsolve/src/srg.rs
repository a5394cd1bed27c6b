//! The strong resolving graph and the reduction `smd(G) = vc(G_SR)`.

use crate::graph::{all_pairs_distances, DistanceMatrix, Graph};
use crate::oracle::is_strong_resolving_set;
use crate::vc::{approx_vc_2, exact_vc, kernelize_smd_vc};
use crate::{Error, Method, Problem, Result, SolutionReport};

/// True iff `u` is maximally distant from `v`: no neighbor of `u` is
/// strictly farther from `v`.
pub fn is_maximally_distant(g: &Graph, dm: &DistanceMatrix, u: usize, v: usize) -> Result<bool> {
    if u == v {
        return Err(Error::InvalidInput(
            "maximal distance is defined for distinct vertices".into(),
        ));
    }
    Ok(g.neighbors(u).iter().all(|&y| dm.dist(y, v) <= dm.dist(u, v)))
}

/// True iff `u` and `v` are mutually maximally distant.
pub fn mutually_maximally_distant(
    g: &Graph,
    dm: &DistanceMatrix,
    u: usize,
    v: usize,
) -> Result<bool> {
    Ok(is_maximally_distant(g, dm, u, v)? && is_maximally_distant(g, dm, v, u)?)
}

/// Strong resolving graph: same vertex set, an edge for every mutually
/// maximally distant pair.
pub fn strong_resolving_graph(g: &Graph, dm: &DistanceMatrix) -> Result<Graph> {
    if !g.is_connected() {
        return Err(Error::Disconnected(
            "the strong resolving graph is defined for connected graphs",
        ));
    }
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::InvalidInput(
            "the strong resolving graph needs at least two vertices".into(),
        ));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if mutually_maximally_distant(g, dm, u, v)? {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Threshold above which `smd_solve` runs the twin kernel before the
/// vertex-cover search.
pub const SMD_KERNEL_THRESHOLD: usize = 24;

/// Exact strong metric dimension: a minimum vertex cover of the strong
/// resolving graph is a minimum strong resolving set.
pub fn smd_solve(g: &Graph) -> Result<SolutionReport> {
    if !g.is_connected() {
        return Err(Error::Disconnected("smd is defined for connected graphs"));
    }
    if g.vertex_count() == 1 {
        return Ok(SolutionReport {
            problem: Problem::Smd,
            optimum: 0,
            witness: vec![],
            method: Method::SmdVc,
        });
    }

    // Twin pre-pass on large instances: deleted twins are forced into the
    // solution one-for-one.
    let (work, map, forced): (Graph, Vec<usize>, Vec<usize>) =
        if approx_vc_2(g).len() > SMD_KERNEL_THRESHOLD {
            let kernel = kernelize_smd_vc(g, g.vertex_count() as i64)?;
            debug_assert!(!kernel.is_no_instance());
            let forced = kernel.log.iter().map(|&(v, _, _)| v).collect();
            (kernel.graph, kernel.vertex_map, forced)
        } else {
            (g.clone(), g.vertices().collect(), vec![])
        };

    let dm = all_pairs_distances(&work);
    let srg = strong_resolving_graph(&work, &dm)?;
    let cover = exact_vc(&srg);

    let mut witness: Vec<usize> = cover.into_iter().map(|v| map[v]).collect();
    witness.extend(forced);
    witness.sort_unstable();
    let report = SolutionReport {
        problem: Problem::Smd,
        optimum: witness.len(),
        witness,
        method: Method::SmdVc,
    };
    debug_assert!(is_strong_resolving_set(g, &all_pairs_distances(g), &report.witness)?);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::brute_smd;

    fn srg_of(g: &Graph) -> Graph {
        strong_resolving_graph(g, &all_pairs_distances(g)).unwrap()
    }

    #[test]
    fn maximally_distant_examples() {
        let p3 = Graph::path(3);
        let dm = all_pairs_distances(&p3);
        assert!(is_maximally_distant(&p3, &dm, 0, 2).unwrap());
        assert!(!is_maximally_distant(&p3, &dm, 1, 0).unwrap());
        let c4 = Graph::cycle(4);
        let dm4 = all_pairs_distances(&c4);
        assert!(is_maximally_distant(&c4, &dm4, 0, 2).unwrap());
        assert!(is_maximally_distant(&p3, &dm, 0, 0).is_err());
    }

    #[test]
    fn srg_path3() {
        let srg = srg_of(&Graph::path(3));
        assert_eq!(srg.edges().collect::<Vec<_>>(), vec![(0, 2)]);
        assert_eq!(srg.degree(1), 0);
    }

    #[test]
    fn srg_star_is_leaf_clique() {
        let srg = srg_of(&Graph::star(3));
        assert_eq!(srg.degree(0), 0);
        for u in 1..4 {
            for v in u + 1..4 {
                assert!(srg.has_edge(u, v));
            }
        }
    }

    #[test]
    fn srg_c4_is_two_antipodal_edges() {
        let srg = srg_of(&Graph::cycle(4));
        assert_eq!(srg.edges().collect::<Vec<_>>(), vec![(0, 2), (1, 3)]);
    }

    #[test]
    fn smd_examples() {
        assert_eq!(smd_solve(&Graph::star(3)).unwrap().optimum, 2);
        assert_eq!(smd_solve(&Graph::path(5)).unwrap().optimum, 1);
        assert_eq!(smd_solve(&Graph::complete(4)).unwrap().optimum, 3);
    }

    #[test]
    fn smd_matches_brute_on_named_graphs() {
        for g in [
            Graph::path(6),
            Graph::cycle(5),
            Graph::cycle(6),
            Graph::star(4),
            Graph::complete(5),
        ] {
            assert_eq!(
                smd_solve(&g).unwrap().optimum,
                brute_smd(&g).unwrap().optimum
            );
        }
    }

    #[test]
    fn pendant_set_is_clique_and_support_isolated() {
        // Random trees have plenty of pendants.
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let n = rng.gen_range(3..10);
            let edges: Vec<(usize, usize)> =
                (1..n).map(|v| (v, rng.gen_range(0..v))).collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            let srg = srg_of(&g);
            let pendants: Vec<usize> = g.vertices().filter(|&v| g.degree(v) == 1).collect();
            for (i, &z1) in pendants.iter().enumerate() {
                for &z2 in &pendants[i + 1..] {
                    assert!(srg.has_edge(z1, z2));
                }
            }
            for &z in &pendants {
                let support = g.neighbors(z)[0];
                assert_eq!(srg.degree(support), 0);
            }
        }
    }
}
