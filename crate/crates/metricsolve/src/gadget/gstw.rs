//! Geodetic-set hardness instances with logarithmic treewidth and
//! diameter at most five, generated from a 3-partitioned 3-CNF.

use super::{Construction, GadgetGraph};
use crate::sat::{Assignment, PartitionedCnf, PARTS};
use crate::sperner::sperner_set_rep;
use crate::{Error, Result};
use std::collections::BTreeSet;

struct Layout {
    builder: super::GadgetBuilder,
    k: usize,
    /// Per part: selector vertices indexed 1..=2n (t at even, f at odd).
    selector: [Vec<usize>; 3],
    /// Forced pendants: z1, z2, all x_star, all c_b.
    forced: Vec<usize>,
}

fn construct(pcnf: &PartitionedCnf) -> Result<Layout> {
    let n = pcnf.vars_per_part();
    let m = pcnf.clause_count();
    if n == 0 || m == 0 {
        return Err(Error::InvalidInput("construction needs variables and clauses".into()));
    }
    let mut b = super::GadgetBuilder::new();
    let mut forced = Vec::new();
    let mut selector: [Vec<usize>; 3] = Default::default();

    let (p, rep) = sperner_set_rep(2 * n);

    // Shared vertices.
    let y1 = b.vertex("y1");
    let y2 = b.vertex("y2");
    let z1 = b.vertex("z1");
    let z2 = b.vertex("z2");
    b.edge(y1, z1);
    b.edge(y2, z2);
    let g1 = b.vertex("g1");
    let g2 = b.vertex("g2");
    let g3 = b.vertex("g3");
    b.edge(g1, y1);
    b.edge(g1, y2);
    b.group("globals", &[y1, y2, z1, z2, g1, g2, g3]);
    forced.push(z1);
    forced.push(z2);

    let mut separator = vec![g1, g2, g3, y1, y2];

    for part in PARTS {
        let tag = part.tag();
        // Selector vertices.
        let mut a_members = vec![0usize; 2 * n];
        for i in 1..=n {
            a_members[2 * i - 1] = b.vertex(format!("t({tag},{})", 2 * i));
            a_members[2 * i - 2] = b.vertex(format!("f({tag},{})", 2 * i - 1));
        }
        b.group(format!("A^{tag}"), &a_members);
        selector[part as usize] = a_members.clone();

        // Per-variable diamond with a pendant tip.
        for i in 1..=n {
            let left = b.vertex(format!("x_left({tag},{i})"));
            let right = b.vertex(format!("x_right({tag},{i})"));
            let circ = b.vertex(format!("x_circ({tag},{i})"));
            let star = b.vertex(format!("x_star({tag},{i})"));
            for &sel in &[a_members[2 * i - 1], a_members[2 * i - 2]] {
                b.edge(left, sel);
                b.edge(right, sel);
            }
            b.edge(circ, left);
            b.edge(circ, right);
            b.edge(star, circ);
            b.edge(g1, circ);
            b.group(format!("X^{tag}"), &[left, right, circ, star]);
            forced.push(star);
        }

        for &a in &a_members {
            b.edge(y1, a);
            b.edge(y2, a);
            b.edge(g1, a);
            b.edge(g2, a);
        }

        // Validation portal.
        let v_members: Vec<usize> = (1..=2 * p)
            .map(|j| b.vertex(format!("v({tag},{j})")))
            .collect();
        b.clique(&v_members);
        b.group(format!("V^{tag}"), &v_members);
        b.group("portals", &v_members);
        separator.extend(&v_members);
        for &v in &v_members {
            b.edge(g1, v);
        }
        for idx in 1..=2 * n {
            for &coord in &rep[idx - 1] {
                b.edge(a_members[idx - 1], v_members[coord - 1]);
            }
        }
    }

    // Clause paths c - c_a - c_b.
    for q in 1..=m {
        let c = b.vertex(format!("c({q})"));
        let ca = b.vertex(format!("ca({q})"));
        let cb = b.vertex(format!("cb({q})"));
        b.edge(c, ca);
        b.edge(ca, cb);
        b.edge(g2, c);
        b.edge(g3, ca);
        b.group("clauses", &[c, ca, cb]);
        forced.push(cb);

        for part in PARTS {
            let tag = part.tag();
            if let Some(lit) = pcnf.part_literal(q - 1, part) {
                let idx = if lit.positive {
                    2 * (lit.index + 1)
                } else {
                    2 * (lit.index + 1) - 1
                };
                let code: BTreeSet<usize> = rep[idx - 1].iter().copied().collect();
                for j in 1..=2 * p {
                    if !code.contains(&j) {
                        let v = b.vertex(format!("v({tag},{j})"));
                        b.edge(c, v);
                        b.edge(ca, v);
                    }
                }
            }
        }
    }

    b.group("separator", &separator);
    let k = 6 * n + m + 2;
    debug_assert_eq!(forced.len(), 3 * n + m + 2);
    Ok(Layout {
        builder: b,
        k,
        selector,
        forced,
    })
}

/// Geodetic-set instance with treewidth `O(log n)` and diameter at most 5;
/// the budget is `6n + m + 2`.
pub fn build_gs_tw(pcnf: &PartitionedCnf) -> Result<GadgetGraph> {
    let layout = construct(pcnf)?;
    let k = layout.k;
    layout.builder.finish(k, Construction::GsTw)
}

/// Forward witness: the pendants (z1, z2, every variable tip, every
/// clause tip) plus the selector of each variable's assigned polarity.
pub(super) fn witness_gs_tw(pcnf: &PartitionedCnf, assignment: &Assignment) -> Result<Vec<usize>> {
    let layout = construct(pcnf)?;
    let mut witness = layout.forced;
    for part in PARTS {
        for i in 1..=pcnf.vars_per_part() {
            let idx = if assignment.get(part, i - 1) {
                2 * i
            } else {
                2 * i - 1
            };
            witness.push(layout.selector[part as usize][idx - 1]);
        }
    }
    witness.sort_unstable();
    witness.dedup();
    debug_assert_eq!(witness.len(), layout.k);
    Ok(witness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::all_pairs_distances;
    use crate::oracle::is_geodetic_set;
    use crate::sat::{PLit, Part};

    fn tiny_pcnf() -> PartitionedCnf {
        PartitionedCnf::new(
            1,
            vec![vec![
                PLit { part: Part::Alpha, index: 0, positive: true },
                PLit { part: Part::Beta, index: 0, positive: true },
                PLit { part: Part::Gamma, index: 0, positive: true },
            ]],
        )
        .unwrap()
    }

    #[test]
    fn sizes_and_budget() {
        let gg = build_gs_tw(&tiny_pcnf()).unwrap();
        assert_eq!(gg.graph.vertex_count(), 34);
        assert_eq!(gg.k, 9);
        assert!(gg.graph.is_connected());
        assert!(gg.groups_cover_all_vertices());
    }

    #[test]
    fn diameter_and_separator() {
        let gg = build_gs_tw(&tiny_pcnf()).unwrap();
        let dm = all_pairs_distances(&gg.graph);
        assert!(dm.diameter().unwrap() <= 5);
        // Removing the separator leaves components of at most 6 vertices.
        let separator: std::collections::BTreeSet<usize> =
            gg.group("separator").iter().copied().collect();
        let keep: Vec<usize> = gg
            .graph
            .vertices()
            .filter(|v| !separator.contains(v))
            .collect();
        let (rest, _) = gg.graph.induced(&keep);
        for component in rest.components() {
            assert!(component.len() <= 6);
        }
    }

    #[test]
    fn witness_verifies() {
        let pcnf = tiny_pcnf();
        let gg = build_gs_tw(&pcnf).unwrap();
        let assignment = pcnf.satisfying_assignment().unwrap().unwrap();
        let witness = witness_gs_tw(&pcnf, &assignment).unwrap();
        assert_eq!(witness.len(), gg.k);
        let dm = all_pairs_distances(&gg.graph);
        assert!(is_geodetic_set(&gg.graph, &dm, &witness).unwrap());
        // Pendant vertices are forced into the witness.
        for v in gg.graph.vertices() {
            if gg.graph.degree(v) == 1 {
                assert!(witness.contains(&v));
            }
        }
    }
}
