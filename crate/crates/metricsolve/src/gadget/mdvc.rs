//! Metric-dimension hardness instances with vertex cover `O(sqrt(N))`,
//! generated from a 3-partitioned 3-CNF. Variables are padded to a
//! perfect square per part and split into `sqrt(n)` buckets; one vertex
//! per possible bucket assignment carries the encoding.

use super::builder::{attach_identifying_gadget, plain_q, GadgetBuilder};
use super::{ceil_log2, Construction, GadgetGraph};
use crate::sat::{Assignment, PartitionedCnf, PARTS};
use crate::{Error, Result};

/// Variables per bucket above this blow the construction up (each bucket
/// gets `2^side` assignment vertices).
const MAX_SIDE: usize = 4;

fn side_of(n: usize) -> Result<usize> {
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
    Ok(side)
}

struct Layout {
    builder: GadgetBuilder,
    k: usize,
    /// Per part and bucket: the `2^side` assignment vertices.
    assignments: [Vec<Vec<usize>>; 3],
    forced: Vec<usize>,
    side: usize,
}

fn construct(pcnf: &PartitionedCnf) -> Result<Layout> {
    let n = pcnf.vars_per_part();
    let m = pcnf.clause_count();
    if n == 0 || m == 0 {
        return Err(Error::InvalidInput("construction needs variables and clauses".into()));
    }
    let side = side_of(n)?;
    let blocks = side; // buckets per part
    let per_bucket = 1usize << side;

    let mut b = GadgetBuilder::new();
    let mut forced = Vec::new();
    let mut assignments: [Vec<Vec<usize>>; 3] = Default::default();
    let mut vc_witness = Vec::new();

    for part in PARTS {
        let tag = part.tag();

        // Assignment vertices per bucket.
        let mut a_all = Vec::new();
        let mut buckets = Vec::new();
        for i in 1..=blocks {
            let members: Vec<usize> = (1..=per_bucket)
                .map(|l| b.vertex(format!("a({tag},{i},{l})")))
                .collect();
            b.group(format!("A^{tag}_{i}"), &members);
            a_all.extend(members.iter().copied());
            buckets.push(members);
        }
        b.group(format!("A^{tag}"), &a_all);
        let a_codes: Vec<usize> = (1..=a_all.len()).collect();
        let a_q = plain_q(a_all.len());
        let a_rep = attach_identifying_gadget(&mut b, &format!("A^{tag}"), &a_all, &a_codes, a_q);
        forced.extend(a_rep.a_sides());

        // Critical bucket pairs, a clique.
        let mut b_members = Vec::new();
        let mut b_codes = Vec::new();
        let mut b_circ = Vec::new();
        for i in 1..=blocks {
            let circ = b.vertex(format!("b_circ({tag},{i})"));
            let star = b.vertex(format!("b_star({tag},{i})"));
            b_members.push(circ);
            b_members.push(star);
            b_codes.push(i);
            b_codes.push(i);
            b_circ.push(circ);
        }
        b.clique(&b_members);
        b.group(format!("B^{tag}"), &b_members);
        let b_q = ceil_log2(blocks + 2) + 1;
        let b_rep = attach_identifying_gadget(&mut b, &format!("B^{tag}"), &b_members, &b_codes, b_q);
        forced.extend(b_rep.a_sides());
        vc_witness.extend(b_members.iter().copied());

        // Selector wiring.
        for i in 1..=blocks {
            for &a in &buckets[i - 1] {
                b.edge(b_circ[i - 1], a);
            }
        }
        for &a in &a_all {
            b.edge(b_rep.nullifier, a);
        }
        for &x in &b_members {
            b.edge(a_rep.nullifier, x);
        }
        b.edge(b_rep.nullifier, a_rep.nullifier);

        // Portals: truth, false and validation, one clique.
        let t_members: Vec<usize> = (1..=side)
            .map(|j| b.vertex(format!("t({tag},{j})")))
            .collect();
        let f_members: Vec<usize> = (1..=side)
            .map(|j| b.vertex(format!("f({tag},{j})")))
            .collect();
        let v_members: Vec<usize> = (1..=blocks)
            .map(|i| b.vertex(format!("v({tag},{i})")))
            .collect();
        let mut p_members = t_members.clone();
        p_members.extend(&f_members);
        p_members.extend(&v_members);
        b.clique(&p_members);
        b.group(format!("T^{tag}"), &t_members);
        b.group(format!("F^{tag}"), &f_members);
        b.group(format!("V^{tag}"), &v_members);
        b.group(format!("P^{tag}"), &p_members);
        b.group("portals", &p_members);
        let p_codes: Vec<usize> = (1..=p_members.len()).collect();
        let p_q = plain_q(p_members.len());
        let p_rep = attach_identifying_gadget(&mut b, &format!("P^{tag}"), &p_members, &p_codes, p_q);
        forced.extend(p_rep.a_sides());
        vc_witness.extend(p_members.iter().copied());

        for &v in &p_members {
            b.edge(a_rep.nullifier, v);
        }
        b.edge(p_rep.nullifier, a_rep.nullifier);

        // Assignment encoding: bucket i, assignment l-1 in binary; bit
        // j-1 decides the j-th variable of the bucket.
        for i in 1..=blocks {
            for (l, &a) in buckets[i - 1].iter().enumerate() {
                for j in 1..=side {
                    if l >> (j - 1) & 1 == 1 {
                        b.edge(a, t_members[j - 1]);
                    } else {
                        b.edge(a, f_members[j - 1]);
                    }
                }
                b.edge(a, v_members[i - 1]);
            }
        }

        assignments[part as usize] = buckets;
    }

    // Clause critical pairs.
    let mut c_members = Vec::new();
    let mut c_codes = Vec::new();
    let mut c_circ = Vec::new();
    let mut c_star = Vec::new();
    for q in 1..=m {
        let circ = b.vertex(format!("c_circ({q})"));
        let star = b.vertex(format!("c_star({q})"));
        c_members.push(circ);
        c_members.push(star);
        c_codes.push(q);
        c_codes.push(q);
        c_circ.push(circ);
        c_star.push(star);
    }
    b.group("C", &c_members);
    let c_q = plain_q(2 * m);
    let c_rep = attach_identifying_gadget(&mut b, "C", &c_members, &c_codes, c_q);
    forced.extend(c_rep.a_sides());

    for part in PARTS {
        let tag = part.tag();
        for q in 1..=m {
            match pcnf.part_literal(q - 1, part) {
                Some(lit) => {
                    // Bucket and in-bucket position of the variable.
                    let bucket = lit.index / side + 1;
                    let pos = lit.index % side + 1;
                    for i in 1..=side {
                        if i != bucket {
                            let v = b.vertex(format!("v({tag},{i})"));
                            b.edge(v, c_circ[q - 1]);
                            b.edge(v, c_star[q - 1]);
                        }
                    }
                    let portal = if lit.positive {
                        b.vertex(format!("t({tag},{pos})"))
                    } else {
                        b.vertex(format!("f({tag},{pos})"))
                    };
                    b.edge(portal, c_circ[q - 1]);
                }
                None => {
                    for i in 1..=side {
                        let v = b.vertex(format!("v({tag},{i})"));
                        b.edge(v, c_circ[q - 1]);
                        b.edge(v, c_star[q - 1]);
                    }
                }
            }
        }
        let p_null = b.vertex(format!("nullifier(P^{tag})"));
        for q in 1..=m {
            b.edge(p_null, c_circ[q - 1]);
            b.edge(p_null, c_star[q - 1]);
        }
        b.edge(p_null, c_rep.nullifier);
    }

    // Cover witness: bucket pairs, portals, identification gadgets.
    for part in PARTS {
        let tag = part.tag();
        for label in [format!("A^{tag}"), format!("B^{tag}"), format!("P^{tag}")] {
            vc_witness.extend(b.group_members(&format!("bit-rep({label})")));
            vc_witness.extend(b.group_members(&format!("nullifier({label})")));
        }
    }
    vc_witness.extend(b.group_members("bit-rep(C)"));
    vc_witness.extend(b.group_members("nullifier(C)"));
    b.group("vc-witness", &vc_witness);

    let a_q = plain_q(blocks * per_bucket);
    let b_q = ceil_log2(blocks + 2) + 1;
    let p_q = plain_q(3 * side);
    let k = 3 * (side + (b_q + 1) + (a_q + 1) + (p_q + 1)) + (c_q + 1);
    debug_assert_eq!(k, 3 * side + forced.len());

    Ok(Layout {
        builder: b,
        k,
        assignments,
        forced,
        side,
    })
}

/// Metric-dimension instance with vertex cover `O(sqrt(n))`; variables
/// are bucketed and each bucket's assignments become single vertices.
pub fn build_md_vc(pcnf: &PartitionedCnf) -> Result<GadgetGraph> {
    let layout = construct(pcnf)?;
    let k = layout.k;
    layout.builder.finish(k, Construction::MdVc)
}

/// Forward witness: for each bucket the assignment vertex matching the
/// satisfying assignment (padding variables count as False) plus one
/// pendant per forced false-twin pair.
pub(super) fn witness_md_vc(pcnf: &PartitionedCnf, assignment: &Assignment) -> Result<Vec<usize>> {
    let layout = construct(pcnf)?;
    let side = layout.side;
    let mut witness = layout.forced;
    for part in PARTS {
        for (i, bucket) in layout.assignments[part as usize].iter().enumerate() {
            let mut l = 0usize;
            for j in 0..side {
                let var = i * side + j;
                let value = var < pcnf.vars_per_part() && assignment.get(part, var);
                if value {
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
    use crate::oracle::is_resolving_set;
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
    fn tiny_shape() {
        let gg = build_md_vc(&tiny_pcnf()).unwrap();
        // One variable per part: buckets of one, two assignment vertices,
        // portals of size one each.
        assert_eq!(gg.group("A^alpha").len(), 2);
        assert_eq!(gg.group("T^alpha").len(), 1);
        assert_eq!(gg.group("V^alpha").len(), 1);
        assert!(gg.graph.is_connected());
        assert!(gg.groups_cover_all_vertices());
    }

    #[test]
    fn cover_witness_is_vertex_cover() {
        let gg = build_md_vc(&tiny_pcnf()).unwrap();
        let cover: std::collections::BTreeSet<usize> =
            gg.group("vc-witness").iter().copied().collect();
        for (u, v) in gg.graph.edges() {
            assert!(cover.contains(&u) || cover.contains(&v), "edge ({u}, {v}) uncovered");
        }
    }

    #[test]
    fn witness_verifies() {
        let pcnf = tiny_pcnf();
        let gg = build_md_vc(&pcnf).unwrap();
        let assignment = pcnf.satisfying_assignment().unwrap().unwrap();
        let witness = witness_md_vc(&pcnf, &assignment).unwrap();
        assert_eq!(witness.len(), gg.k);
        let dm = all_pairs_distances(&gg.graph);
        assert!(is_resolving_set(&gg.graph, &dm, &witness).unwrap());
    }
}
