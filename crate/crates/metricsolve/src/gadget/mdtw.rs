//! Metric-dimension hardness instances with logarithmic treewidth and
//! constant diameter, generated from a 3-partitioned 3-CNF.

use super::builder::{attach_identifying_gadget, plain_q, GadgetBuilder};
use super::{ceil_log2, Construction, GadgetGraph};
use crate::sat::{Assignment, PartitionedCnf, PARTS};
use crate::sperner::sperner_set_rep;
use crate::{Error, Result};

struct Layout {
    builder: GadgetBuilder,
    k: usize,
    /// Per part: the 2n selector vertices, index 1..=2n (t at even, f at odd).
    selector: [Vec<usize>; 3],
    /// a-side pendants of all ten identification gadgets.
    forced: Vec<usize>,
}

fn construct(pcnf: &PartitionedCnf) -> Result<Layout> {
    let n = pcnf.vars_per_part();
    let m = pcnf.clause_count();
    if n == 0 || m == 0 {
        return Err(Error::InvalidInput("construction needs variables and clauses".into()));
    }
    let mut b = GadgetBuilder::new();
    let mut forced = Vec::new();
    let mut selector: [Vec<usize>; 3] = Default::default();

    let (p, rep) = sperner_set_rep(2 * n);

    for part in PARTS {
        let tag = part.tag();

        // Critical pairs for the variables.
        let mut x_members = Vec::new();
        let mut x_codes = Vec::new();
        let mut x_circ = Vec::new();
        for i in 1..=n {
            let c = b.vertex(format!("x_circ({tag},{i})"));
            let s = b.vertex(format!("x_star({tag},{i})"));
            x_members.push(c);
            x_members.push(s);
            x_codes.push(i);
            x_codes.push(i);
            x_circ.push(c);
        }
        b.group(format!("X^{tag}"), &x_members);
        let x_q = ceil_log2(n + 2) + 1;
        let x_rep = attach_identifying_gadget(&mut b, &format!("X^{tag}"), &x_members, &x_codes, x_q);
        forced.extend(x_rep.a_sides());

        // Selector vertices t_{2i}, f_{2i-1}, indexed 1..=2n.
        let mut a_members = vec![0usize; 2 * n];
        for i in 1..=n {
            let t = b.vertex(format!("t({tag},{})", 2 * i));
            let f = b.vertex(format!("f({tag},{})", 2 * i - 1));
            a_members[2 * i - 1] = t;
            a_members[2 * i - 2] = f;
        }
        b.group(format!("A^{tag}"), &a_members);
        let a_codes: Vec<usize> = (1..=2 * n).collect();
        let a_q = plain_q(2 * n);
        let a_rep = attach_identifying_gadget(&mut b, &format!("A^{tag}"), &a_members, &a_codes, a_q);
        forced.extend(a_rep.a_sides());
        selector[part as usize] = a_members.clone();

        // Selector wiring.
        for i in 1..=n {
            b.edge(x_circ[i - 1], a_members[2 * i - 1]);
            b.edge(x_circ[i - 1], a_members[2 * i - 2]);
        }
        for &a in &a_members {
            b.edge(x_rep.nullifier, a);
        }
        for &x in &x_members {
            b.edge(a_rep.nullifier, x);
        }
        b.edge(x_rep.nullifier, a_rep.nullifier);

        // Validation portal, a clique on 2p vertices.
        let v_members: Vec<usize> = (1..=2 * p)
            .map(|j| b.vertex(format!("v({tag},{j})")))
            .collect();
        b.clique(&v_members);
        b.group(format!("V^{tag}"), &v_members);
        b.group("portals", &v_members);
        let v_q = plain_q(2 * p);
        let v_codes: Vec<usize> = (1..=2 * p).collect();
        let v_rep = attach_identifying_gadget(&mut b, &format!("V^{tag}"), &v_members, &v_codes, v_q);
        forced.extend(v_rep.a_sides());
        b.edge(v_rep.nullifier, a_rep.nullifier);
        for &v in &v_members {
            b.edge(a_rep.nullifier, v);
        }

        // Selector-to-portal wiring through the set representation.
        for idx in 1..=2 * n {
            for &coord in &rep[idx - 1] {
                b.edge(a_members[idx - 1], v_members[coord - 1]);
            }
        }
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

    // Clause-to-portal wiring.
    let mut gadget_qs = vec![c_rep.q + 1];
    for part in PARTS {
        let tag = part.tag();
        let v_members: Vec<usize> = (1..=2 * p)
            .map(|j| b.vertex(format!("v({tag},{j})")))
            .collect();
        for q in 1..=m {
            match pcnf.part_literal(q - 1, part) {
                Some(lit) => {
                    for &v in &v_members {
                        b.edge(v, c_circ[q - 1]);
                    }
                    let idx = if lit.positive {
                        2 * (lit.index + 1)
                    } else {
                        2 * (lit.index + 1) - 1
                    };
                    let code: std::collections::BTreeSet<usize> = rep[idx - 1].iter().copied().collect();
                    for j in 1..=2 * p {
                        if !code.contains(&j) {
                            b.edge(v_members[j - 1], c_star[q - 1]);
                        }
                    }
                }
                None => {
                    for &v in &v_members {
                        b.edge(v, c_circ[q - 1]);
                        b.edge(v, c_star[q - 1]);
                    }
                }
            }
        }
        let v_null = b.vertex(format!("nullifier(V^{tag})"));
        b.edge(v_null, c_rep.nullifier);
    }

    // Budget: one selector per variable plus one vertex per pendant
    // false-twin pair of each identification gadget (q + 1 pairs for a
    // gadget with q code bits).
    let x_q = ceil_log2(n + 2) + 1;
    let a_q = plain_q(2 * n);
    let v_q = plain_q(2 * p);
    gadget_qs.extend([x_q + 1, a_q + 1, v_q + 1].iter().flat_map(|&c| [c, c, c]));
    let k = 3 * n + gadget_qs.iter().sum::<usize>();
    debug_assert_eq!(k, 3 * n + forced.len());

    Ok(Layout {
        builder: b,
        k,
        selector,
        forced,
    })
}

/// Metric-dimension instance with treewidth `O(log n)`: critical variable
/// and clause pairs, true/false selector vertices, Sperner-wired
/// validation portals and identification gadgets.
pub fn build_md_tw(pcnf: &PartitionedCnf) -> Result<GadgetGraph> {
    let layout = construct(pcnf)?;
    let k = layout.k;
    layout.builder.finish(k, Construction::MdTw)
}

/// Forward witness: the selector of each variable's assigned polarity
/// plus one pendant per forced false-twin pair.
pub(super) fn witness_md_tw(pcnf: &PartitionedCnf, assignment: &Assignment) -> Result<Vec<usize>> {
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
    use crate::oracle::is_resolving_set;
    use crate::sat::{PLit, Part};

    fn tiny_pcnf() -> PartitionedCnf {
        // Single clause (x^alpha v x^beta v x^gamma), one variable per part.
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
    fn identifying_gadget_size() {
        // A plain two-element set gets q = 3 code bits: 3(q+1)+1 vertices.
        let mut b = GadgetBuilder::new();
        let m1 = b.vertex("m1");
        let m2 = b.vertex("m2");
        let before = b.vertex_count();
        let rep = attach_identifying_gadget(&mut b, "S", &[m1, m2], &[1, 2], plain_q(2));
        assert_eq!(rep.q, 3);
        assert_eq!(b.vertex_count() - before, 3 * (rep.q + 1) + 1);
    }

    #[test]
    fn budget_and_witness() {
        let pcnf = tiny_pcnf();
        let gg = build_md_tw(&pcnf).unwrap();
        // Printed closed form plus one per identification gadget.
        assert_eq!(gg.k, 33 + 10);
        assert!(gg.graph.is_connected());
        assert!(gg.groups_cover_all_vertices());

        let assignment = pcnf.satisfying_assignment().unwrap().unwrap();
        let witness = witness_md_tw(&pcnf, &assignment).unwrap();
        assert_eq!(witness.len(), gg.k);
        let dm = all_pairs_distances(&gg.graph);
        assert!(is_resolving_set(&gg.graph, &dm, &witness).unwrap());
    }
}
