//! Strong-metric-dimension hardness instances from an exact 3-partitioned
//! 3-CNF: the classic satisfiability-to-vertex-cover graph `H`, and the
//! graph `G` whose strong resolving graph reproduces `H` (up to a pendant
//! clique), so that `smd(G) = vc(G_SR) = (|Z| - 1) + vc(H)`.

use super::builder::GadgetBuilder;
use super::{ceil_log2, Construction, GadgetGraph};
use crate::sat::{Part, PartitionedCnf, PARTS};
use crate::sperner::sperner_set_rep;
use crate::{Error, Result};

fn require_exact(pcnf: &PartitionedCnf) -> Result<()> {
    if !pcnf.is_exact() {
        return Err(Error::InvalidInput(
            "construction requires the exact variant (one variable per part in every clause)"
                .into(),
        ));
    }
    if pcnf.vars_per_part() == 0 || pcnf.clause_count() == 0 {
        return Err(Error::InvalidInput("construction needs variables and clauses".into()));
    }
    Ok(())
}

fn literal_name(part: Part, index: usize, positive: bool) -> String {
    format!(
        "x({},{},{})",
        part.tag(),
        index + 1,
        if positive { "t" } else { "f" }
    )
}

fn clause_name(part: Part, clause: usize) -> String {
    format!("u({},{})", part.tag(), clause + 1)
}

/// Vertex-cover graph of an exact formula: literal matching edges, one
/// triangle per clause, and edges joining equal literals across the two
/// sides. The formula is satisfiable iff the graph has a vertex cover of
/// size `3n + 2m`.
pub fn build_smd_h(pcnf: &PartitionedCnf) -> Result<GadgetGraph> {
    require_exact(pcnf)?;
    let n = pcnf.vars_per_part();
    let m = pcnf.clause_count();
    let mut b = GadgetBuilder::new();

    for part in PARTS {
        let tag = part.tag();
        for i in 0..n {
            let t = b.vertex(literal_name(part, i, true));
            let f = b.vertex(literal_name(part, i, false));
            b.edge(t, f);
            b.group(format!("X^{tag}_T"), &[t]);
            b.group(format!("X^{tag}_F"), &[f]);
            b.group("H-vertices", &[t, f]);
        }
    }
    for q in 0..m {
        let triangle: Vec<usize> = PARTS
            .iter()
            .map(|&part| b.vertex(clause_name(part, q)))
            .collect();
        b.clique(&triangle);
        for &part in &PARTS {
            let tag = part.tag();
            let lit = pcnf.part_literal(q, part).expect("exact formula");
            let u = b.vertex(clause_name(part, q));
            let x = b.vertex(literal_name(part, lit.index, lit.positive));
            b.edge(u, x);
            let side = if lit.positive { "T" } else { "F" };
            b.group(format!("U^{tag}_{side}"), &[u]);
            b.group("H-vertices", &[u]);
        }
    }
    b.finish(3 * n + 2 * m, Construction::SmdH)
}

/// Ids of one independent-set identification gadget.
struct IndGadget {
    bitrep: Vec<usize>,
    glb: usize,
    glb_bitrep: usize,
}

/// Attaches the strong-resolving flavor gadget: q = ceil(log(len + 1))
/// code vertices each with a pendant bit, a member-global vertex with a
/// pendant, and a code-global vertex with a pendant.
fn attach_ind_gadget(b: &mut GadgetBuilder, label: &str, members: &[usize]) -> IndGadget {
    let len = members.len();
    assert!(len >= 1);
    let q = ceil_log2(len + 1);
    let mut bitrep = Vec::with_capacity(q);
    for l in 1..=q {
        let y = b.vertex(format!("y({label},{l})"));
        let ya = b.vertex(format!("ya({label},{l})"));
        b.edge(y, ya);
        bitrep.push(y);
    }
    for (j, &m) in members.iter().enumerate() {
        let code = j + 1;
        for l in 1..=q {
            if code >> (q - l) & 1 == 1 {
                b.edge(m, bitrep[l - 1]);
            }
        }
    }
    let glb = b.vertex(format!("glb({label})"));
    let pndt = b.vertex(format!("pndt({label})"));
    b.edge(glb, pndt);
    for &m in members {
        b.edge(glb, m);
    }
    let glb_bitrep = b.vertex(format!("glb(bit-rep({label}))"));
    let pndt_bitrep = b.vertex(format!("pndt(bit-rep({label}))"));
    b.edge(glb_bitrep, pndt_bitrep);
    for &y in &bitrep {
        b.edge(glb_bitrep, y);
    }
    b.group(format!("bit-rep({label})"), &bitrep);
    IndGadget {
        bitrep,
        glb,
        glb_bitrep,
    }
}

/// Adds a connection portal between `a_side` (wired by their Sperner
/// codes) and `b_side` (wired complementarily through `phi`), each portal
/// vertex carrying a pendant bit, and makes every portal vertex adjacent
/// to the four given global vertices.
fn attach_con_port(
    b: &mut GadgetBuilder,
    label: &str,
    a_side: &[(usize, usize)],
    b_side: &[(usize, usize)],
    ell: usize,
    globals: [usize; 4],
) {
    let (p, rep) = sperner_set_rep(ell);
    let ports: Vec<usize> = (1..=2 * p)
        .map(|j| {
            let v = b.vertex(format!("port({label},{j})"));
            let tip = b.vertex(format!("port_tip({label},{j})"));
            b.edge(v, tip);
            v
        })
        .collect();
    b.group(format!("con-port({label})"), &ports);
    for &(vertex, code) in a_side {
        for &coord in &rep[code - 1] {
            b.edge(vertex, ports[coord - 1]);
        }
    }
    for &(vertex, code) in b_side {
        let image: std::collections::BTreeSet<usize> = rep[code - 1].iter().copied().collect();
        for j in 1..=2 * p {
            if !image.contains(&j) {
                b.edge(vertex, ports[j - 1]);
            }
        }
    }
    for &g in &globals {
        for &v in &ports {
            b.edge(v, g);
        }
    }
}

/// Strong-metric-dimension instance: its strong resolving graph consists
/// of the clique on the pendant set `Z`, isolated support vertices, and a
/// copy of the vertex-cover graph `H`; the budget is
/// `3n + 2m + (|Z| - 1)`.
pub fn build_smd_vc(pcnf: &PartitionedCnf) -> Result<GadgetGraph> {
    require_exact(pcnf)?;
    let n = pcnf.vars_per_part();
    let m = pcnf.clause_count();
    let mut b = GadgetBuilder::new();

    // Literal and clause occurrence vertices, as in the plain graph H.
    let mut members: std::collections::BTreeMap<String, Vec<usize>> = Default::default();
    for part in PARTS {
        let tag = part.tag();
        let mut t_side = Vec::new();
        let mut f_side = Vec::new();
        for i in 0..n {
            t_side.push(b.vertex(literal_name(part, i, true)));
            f_side.push(b.vertex(literal_name(part, i, false)));
        }
        b.group(format!("X^{tag}_T"), &t_side);
        b.group(format!("X^{tag}_F"), &f_side);
        b.group("H-vertices", &t_side);
        b.group("H-vertices", &f_side);
        members.insert(format!("X^{tag}_T"), t_side);
        members.insert(format!("X^{tag}_F"), f_side);

        let mut u_t = Vec::new();
        let mut u_f = Vec::new();
        let mut u_all = Vec::new();
        for q in 0..m {
            let lit = pcnf.part_literal(q, part).expect("exact formula");
            let u = b.vertex(clause_name(part, q));
            if lit.positive {
                u_t.push(u);
            } else {
                u_f.push(u);
            }
            u_all.push(u);
        }
        if u_t.is_empty() || u_f.is_empty() {
            return Err(Error::InvalidInput(format!(
                "every part needs positive and negative clause occurrences, part {tag} lacks some"
            )));
        }
        b.group(format!("U^{tag}_T"), &u_t);
        b.group(format!("U^{tag}_F"), &u_f);
        b.group("H-vertices", &u_all);
        members.insert(format!("U^{tag}_T"), u_t);
        members.insert(format!("U^{tag}_F"), u_f);
        members.insert(format!("U^{tag}"), u_all);
    }

    // Step 1: identification gadgets for the twelve independent sets.
    let mut gadgets: std::collections::BTreeMap<String, IndGadget> = Default::default();
    for part in PARTS {
        let tag = part.tag();
        for side in ["T", "F"] {
            for set in ["X", "U"] {
                let label = format!("{set}^{tag}_{side}");
                let g = attach_ind_gadget(&mut b, &label, &members[&label]);
                gadgets.insert(label, g);
            }
        }
    }

    // Step 2: matching edges through per-part variable portals.
    for part in PARTS {
        let tag = part.tag();
        let a_label = format!("X^{tag}_T");
        let b_label = format!("X^{tag}_F");
        let a_side: Vec<(usize, usize)> = members[&a_label]
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i + 1))
            .collect();
        let b_side: Vec<(usize, usize)> = members[&b_label]
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i + 1))
            .collect();
        let ga = &gadgets[&a_label];
        let gb = &gadgets[&b_label];
        b.edge(ga.glb, gb.glb);
        let globals = [ga.glb, ga.glb_bitrep, gb.glb, gb.glb_bitrep];
        attach_con_port(&mut b, &format!("{a_label},{b_label}"), &a_side, &b_side, n, globals);
    }

    // Step 3: clause triangles through pairwise clause portals. Each
    // clause-occurrence family gets fresh global vertices per pairing.
    let clause_pairs = [
        (Part::Alpha, Part::Beta),
        (Part::Beta, Part::Gamma),
        (Part::Gamma, Part::Alpha),
    ];
    let mut u_global_round: std::collections::BTreeMap<String, usize> = Default::default();
    for (first, second) in clause_pairs {
        let mut pair_globals = Vec::new();
        for part in [first, second] {
            let tag = part.tag();
            let round = u_global_round.entry(format!("U^{tag}")).or_insert(0);
            *round += 1;
            let suffix = if *round == 1 { "" } else { "2" };
            let glb = b.vertex(format!("glb{suffix}(U^{tag})"));
            let pndt = b.vertex(format!("pndt{suffix}(U^{tag})"));
            b.edge(glb, pndt);
            for &u in &members[&format!("U^{tag}")] {
                b.edge(glb, u);
            }
            let glb_br = b.vertex(format!("glb{suffix}(bit-rep(U^{tag}))"));
            let pndt_br = b.vertex(format!("pndt{suffix}(bit-rep(U^{tag}))"));
            b.edge(glb_br, pndt_br);
            for label in [format!("U^{tag}_T"), format!("U^{tag}_F")] {
                for &y in &gadgets[&label].bitrep {
                    b.edge(glb_br, y);
                }
            }
            pair_globals.push((glb, glb_br));
        }
        b.edge(pair_globals[0].0, pair_globals[1].0);
        let a_side: Vec<(usize, usize)> = (0..m)
            .map(|q| (b.vertex(clause_name(first, q)), q + 1))
            .collect();
        let b_side: Vec<(usize, usize)> = (0..m)
            .map(|q| (b.vertex(clause_name(second, q)), q + 1))
            .collect();
        let globals = [
            pair_globals[0].0,
            pair_globals[0].1,
            pair_globals[1].0,
            pair_globals[1].1,
        ];
        attach_con_port(
            &mut b,
            &format!("U^{},U^{}", first.tag(), second.tag()),
            &a_side,
            &b_side,
            m,
            globals,
        );
    }

    // Step 4: literal-occurrence edges through starred globals.
    let mut shortcut = Vec::new();
    for part in PARTS {
        let tag = part.tag();
        for side in ["T", "F"] {
            let x_label = format!("X^{tag}_{side}");
            let u_label = format!("U^{tag}_{side}");
            let mut stars = Vec::new();
            for label in [&x_label, &u_label] {
                let glb = b.vertex(format!("glb*({label})"));
                let pndt = b.vertex(format!("pndt*({label})"));
                b.edge(glb, pndt);
                for &v in &members[label.as_str()] {
                    b.edge(glb, v);
                }
                let glb_br = b.vertex(format!("glb*(bit-rep({label}))"));
                let pndt_br = b.vertex(format!("pndt*(bit-rep({label}))"));
                b.edge(glb_br, pndt_br);
                for &y in &gadgets[label.as_str()].bitrep {
                    b.edge(glb_br, y);
                }
                stars.push((glb, glb_br));
            }
            shortcut.push(stars[0].0);
            shortcut.push(stars[1].0);
            let a_side: Vec<(usize, usize)> = members[&x_label]
                .iter()
                .enumerate()
                .map(|(i, &v)| (v, i + 1))
                .collect();
            let positive = side == "T";
            let b_side: Vec<(usize, usize)> = (0..m)
                .filter_map(|q| {
                    let lit = pcnf.part_literal(q, part).expect("exact formula");
                    (lit.positive == positive)
                        .then(|| (b.vertex(clause_name(part, q)), lit.index + 1))
                })
                .collect();
            let globals = [stars[0].0, stars[0].1, stars[1].0, stars[1].1];
            attach_con_port(
                &mut b,
                &format!("{x_label},{u_label}"),
                &a_side,
                &b_side,
                n,
                globals,
            );
        }
    }

    // The twelve starred member-globals form the short-cut clique.
    b.clique(&shortcut);
    b.group("S_K", &shortcut);

    // Z: all pendant vertices of the finished construction.
    let degrees = b.degrees();
    let pendants: Vec<usize> = (0..b.vertex_count()).filter(|&v| degrees[v] == 1).collect();
    b.group("Z", &pendants);
    let k = 3 * n + 2 * m + pendants.len() - 1;
    b.finish(k, Construction::SmdVc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::all_pairs_distances;
    use crate::sat::PLit;
    use crate::srg::strong_resolving_graph;
    use crate::vc::exact_vc;

    fn lit(part: Part, index: usize, positive: bool) -> PLit {
        PLit {
            part,
            index,
            positive,
        }
    }

    /// n = 1 per part, two clauses using both polarities everywhere.
    fn tiny_exact() -> PartitionedCnf {
        PartitionedCnf::new(
            1,
            vec![
                vec![
                    lit(Part::Alpha, 0, true),
                    lit(Part::Beta, 0, true),
                    lit(Part::Gamma, 0, true),
                ],
                vec![
                    lit(Part::Alpha, 0, false),
                    lit(Part::Beta, 0, false),
                    lit(Part::Gamma, 0, false),
                ],
            ],
        )
        .unwrap()
    }

    #[test]
    fn h_counts() {
        let pcnf = PartitionedCnf::new(
            1,
            vec![vec![
                lit(Part::Alpha, 0, true),
                lit(Part::Beta, 0, false),
                lit(Part::Gamma, 0, true),
            ]],
        )
        .unwrap();
        let h = build_smd_h(&pcnf).unwrap();
        assert_eq!(h.graph.vertex_count(), 9);
        assert_eq!(h.k, 5);
        // Clause triangles are vertex-disjoint (one triangle here).
        let triangle: Vec<usize> = (0..9).filter(|&v| h.names[v].starts_with("u(")).collect();
        assert_eq!(triangle.len(), 3);
    }

    #[test]
    fn h_vc_tracks_satisfiability() {
        let sat = tiny_exact();
        let h = build_smd_h(&sat).unwrap();
        assert!(exact_vc(&h.graph).len() <= h.k);

        // All eight sign patterns on one variable per part: unsatisfiable.
        let mut clauses = Vec::new();
        for bits in 0..8u8 {
            clauses.push(vec![
                lit(Part::Alpha, 0, bits & 1 == 1),
                lit(Part::Beta, 0, bits & 2 == 2),
                lit(Part::Gamma, 0, bits & 4 == 4),
            ]);
        }
        let unsat = PartitionedCnf::new(1, clauses).unwrap();
        assert!(unsat.satisfying_assignment().unwrap().is_none());
        let h = build_smd_h(&unsat).unwrap();
        assert!(exact_vc(&h.graph).len() > h.k);
    }

    #[test]
    fn non_exact_rejected() {
        let pcnf = PartitionedCnf::new(
            1,
            vec![vec![lit(Part::Alpha, 0, true), lit(Part::Beta, 0, true)]],
        )
        .unwrap();
        assert!(build_smd_h(&pcnf).is_err());
        assert!(build_smd_vc(&pcnf).is_err());
    }

    #[test]
    fn z_is_exactly_the_pendant_set() {
        let gg = build_smd_vc(&tiny_exact()).unwrap();
        let pendants: Vec<usize> = gg
            .graph
            .vertices()
            .filter(|&v| gg.graph.degree(v) == 1)
            .collect();
        assert_eq!(gg.group("Z"), pendants.as_slice());
        assert_eq!(gg.k, 3 + 4 + pendants.len() - 1);
        assert!(gg.graph.is_connected());
    }

    /// n = 2 per part, exercising absent matching/clause pairs too.
    fn two_var_exact() -> PartitionedCnf {
        let mut clauses = Vec::new();
        for i in 0..2 {
            for positive in [true, false] {
                clauses.push(vec![
                    lit(Part::Alpha, i, positive),
                    lit(Part::Beta, i, positive),
                    lit(Part::Gamma, i, positive),
                ]);
            }
        }
        PartitionedCnf::new(2, clauses).unwrap()
    }

    #[test]
    fn srg_restricted_to_h_vertices_reproduces_h() {
        let pcnf = two_var_exact();
        let gg = build_smd_vc(&pcnf).unwrap();
        let h = build_smd_h(&pcnf).unwrap();
        let dm = all_pairs_distances(&gg.graph);
        let srg = strong_resolving_graph(&gg.graph, &dm).unwrap();

        // Map H vertices into G by name.
        let map: Vec<usize> = (0..h.graph.vertex_count())
            .map(|v| gg.vertex_by_name(&h.names[v]).expect("H vertex exists in G"))
            .collect();
        for u in 0..h.graph.vertex_count() {
            for v in u + 1..h.graph.vertex_count() {
                assert_eq!(
                    h.graph.has_edge(u, v),
                    srg.has_edge(map[u], map[v]),
                    "pair {} / {}",
                    h.names[u],
                    h.names[v]
                );
            }
        }

        // Pendant set: clique in the strong resolving graph, supports
        // isolated.
        let z = gg.group("Z");
        for (i, &z1) in z.iter().enumerate() {
            for &z2 in &z[i + 1..] {
                assert!(srg.has_edge(z1, z2));
            }
        }
        for &zv in z {
            let support = gg.graph.neighbors(zv)[0];
            assert_eq!(srg.degree(support), 0);
        }
    }

    #[test]
    fn full_pipeline_tracks_satisfiability() {
        use crate::srg::smd_solve;
        let sat = tiny_exact();
        let gg = build_smd_vc(&sat).unwrap();
        let report = smd_solve(&gg.graph).unwrap();
        assert!(report.optimum <= gg.k, "{} vs {}", report.optimum, gg.k);

        let mut clauses = Vec::new();
        for bits in 0..8u8 {
            clauses.push(vec![
                lit(Part::Alpha, 0, bits & 1 == 1),
                lit(Part::Beta, 0, bits & 2 == 2),
                lit(Part::Gamma, 0, bits & 4 == 4),
            ]);
        }
        let unsat = PartitionedCnf::new(1, clauses).unwrap();
        let gg = build_smd_vc(&unsat).unwrap();
        let report = smd_solve(&gg.graph).unwrap();
        assert!(report.optimum > gg.k, "{} vs {}", report.optimum, gg.k);
    }
}
