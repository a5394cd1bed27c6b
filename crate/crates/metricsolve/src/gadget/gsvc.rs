//! Geodetic-set hardness instances with vertex cover `O(sqrt(N))`:
//! bucketed assignment vertices, anchored by isolated-edge pendants, a
//! hub clique facing the validation portals, and one vertex per clause.

use super::{Construction, GadgetGraph};
use crate::sat::{Assignment, PartitionedCnf, PARTS};
use crate::{Error, Result};

const MAX_SIDE: usize = 4;

struct Layout {
    builder: super::GadgetBuilder,
    k: usize,
    assignments: [Vec<Vec<usize>>; 3],
    /// Pendant vertices: u' matching tips and the b anchors.
    forced: Vec<usize>,
    side: usize,
}

fn construct(pcnf: &PartitionedCnf) -> Result<Layout> {
    let n = pcnf.vars_per_part();
    let m = pcnf.clause_count();
    if n == 0 || m == 0 {
        return Err(Error::InvalidInput("construction needs variables and clauses".into()));
    }
    let mut side = 1;
    while side * side < n {
        side += 1;
    }
    if side > MAX_SIDE {
        return Err(Error::CapExceeded(format!(
            "bucket construction capped at {} variables per part, got {n}",
            MAX_SIDE * MAX_SIDE
        )));
    }
    let per_bucket = 1usize << side;

    let mut b = super::GadgetBuilder::new();
    let mut forced = Vec::new();
    let mut assignments: [Vec<Vec<usize>>; 3] = Default::default();

    // Hub clique with pendant tips.
    let u_members: Vec<usize> = (1..=side).map(|i| b.vertex(format!("u({i})"))).collect();
    b.clique(&u_members);
    b.group("U", &u_members);
    for i in 1..=side {
        let tip = b.vertex(format!("u'({i})"));
        b.edge(u_members[i - 1], tip);
        b.group("U'", &[tip]);
        forced.push(tip);
    }

    for part in PARTS {
        let tag = part.tag();
        let mut buckets = Vec::new();
        let mut g_vertices = Vec::new();

        // Truth/false/validation rows (independent sets).
        let t_members: Vec<usize> = (1..=side)
            .map(|j| b.vertex(format!("t({tag},{j})")))
            .collect();
        let f_members: Vec<usize> = (1..=side)
            .map(|j| b.vertex(format!("f({tag},{j})")))
            .collect();
        let v_members: Vec<usize> = (1..=side)
            .map(|i| b.vertex(format!("v({tag},{i})")))
            .collect();
        b.group(format!("T^{tag}"), &t_members);
        b.group(format!("F^{tag}"), &f_members);
        b.group(format!("V^{tag}"), &v_members);

        for i in 1..=side {
            // Assignment vertices of bucket i.
            let members: Vec<usize> = (1..=per_bucket)
                .map(|l| b.vertex(format!("a({tag},{i},{l})")))
                .collect();
            b.group(format!("A^{tag}_{i}"), &members);
            b.group(format!("A^{tag}"), &members);

            // Two isolated-edge anchors adjacent to the whole bucket.
            let mut anchors = Vec::new();
            for j in 1..=2 {
                let anchor = b.vertex(format!("anchor({tag},{i},{j})"));
                let tip = b.vertex(format!("anchor_tip({tag},{i},{j})"));
                b.edge(anchor, tip);
                forced.push(tip);
                for &a in &members {
                    b.edge(anchor, a);
                }
                b.group(format!("B^{tag}"), &[anchor, tip]);
                anchors.push(anchor);
            }

            // Bucket g-vertex: anchors, whole truth/false rows, hub.
            let g = b.vertex(format!("g({tag},{i})"));
            for &anchor in &anchors {
                b.edge(g, anchor);
            }
            for &t in &t_members {
                b.edge(g, t);
            }
            for &f in &f_members {
                b.edge(g, f);
            }
            for &u in &u_members {
                b.edge(g, u);
            }
            b.group(format!("g^{tag}"), &[g]);
            g_vertices.push(g);

            // Portal edge and assignment encoding.
            for (l, &a) in members.iter().enumerate() {
                b.edge(a, v_members[i - 1]);
                for j in 1..=side {
                    if l >> (j - 1) & 1 == 1 {
                        b.edge(a, t_members[j - 1]);
                    } else {
                        b.edge(a, f_members[j - 1]);
                    }
                }
            }
            buckets.push(members);
        }

        // Hub to validation row: complete bipartite minus the matching.
        for i in 1..=side {
            for j in 1..=side {
                if i != j {
                    b.edge(u_members[i - 1], v_members[j - 1]);
                }
            }
        }

        assignments[part as usize] = buckets;
    }

    // Clause vertices.
    for q in 1..=m {
        let c = b.vertex(format!("c({q})"));
        b.group("C", &[c]);
        for part in PARTS {
            let tag = part.tag();
            if let Some(lit) = pcnf.part_literal(q - 1, part) {
                let bucket = lit.index / side + 1;
                let pos = lit.index % side + 1;
                let hub = b.vertex(format!("u({bucket})"));
                b.edge(c, hub);
                let portal = if lit.positive {
                    b.vertex(format!("t({tag},{pos})"))
                } else {
                    b.vertex(format!("f({tag},{pos})"))
                };
                b.edge(c, portal);
            }
        }
    }

    let k = 10 * side;
    debug_assert_eq!(forced.len(), 7 * side);
    Ok(Layout {
        builder: b,
        k,
        assignments,
        forced,
        side,
    })
}

/// Geodetic-set instance with vertex cover `O(sqrt(n))`; the budget is
/// `10 sqrt(n)`.
pub fn build_gs_vc(pcnf: &PartitionedCnf) -> Result<GadgetGraph> {
    let layout = construct(pcnf)?;
    let k = layout.k;
    layout.builder.finish(k, Construction::GsVc)
}

/// Forward witness: all pendants plus, per bucket, the assignment vertex
/// matching the satisfying assignment.
pub(super) fn witness_gs_vc(pcnf: &PartitionedCnf, assignment: &Assignment) -> Result<Vec<usize>> {
    let layout = construct(pcnf)?;
    let side = layout.side;
    let mut witness = layout.forced;
    for part in PARTS {
        for (i, bucket) in layout.assignments[part as usize].iter().enumerate() {
            let mut l = 0usize;
            for j in 0..side {
                let var = i * side + j;
                if var < pcnf.vars_per_part() && assignment.get(part, var) {
                    l |= 1 << j;
                }
            }
            witness.push(bucket[l]);
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
                PLit { part: Part::Beta, index: 0, positive: false },
                PLit { part: Part::Gamma, index: 0, positive: true },
            ]],
        )
        .unwrap()
    }

    #[test]
    fn tiny_counts() {
        let gg = build_gs_vc(&tiny_pcnf()).unwrap();
        assert_eq!(gg.graph.vertex_count(), 33);
        assert_eq!(gg.k, 10);
        assert!(gg.graph.is_connected());
        assert!(gg.groups_cover_all_vertices());
    }

    #[test]
    fn witness_verifies_and_contains_pendants() {
        let pcnf = tiny_pcnf();
        let gg = build_gs_vc(&pcnf).unwrap();
        let assignment = pcnf.satisfying_assignment().unwrap().unwrap();
        let witness = witness_gs_vc(&pcnf, &assignment).unwrap();
        assert_eq!(witness.len(), gg.k);
        let dm = all_pairs_distances(&gg.graph);
        assert!(is_geodetic_set(&gg.graph, &dm, &witness).unwrap());
        for v in gg.graph.vertices() {
            if gg.graph.degree(v) == 1 {
                assert!(witness.contains(&v));
            }
        }
    }
}
