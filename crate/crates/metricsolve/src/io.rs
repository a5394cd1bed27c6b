//! File formats: PACE `gr`, DIMACS `edge`, PACE `td`, DIMACS `cnf` with a
//! partition sidecar, solution-set files and gadget group annotations.
//!
//! Vertices and variables are 1-indexed on disk, 0-indexed in memory.

use crate::graph::Graph;
use crate::sat::{Cnf, Part, PartitionedCnf};
use crate::td::TreeDecomposition;
use crate::{Error, Result};

fn tokens(line: &str) -> Vec<&str> {
    line.split_whitespace().collect()
}

fn parse_usize(tok: &str, line: usize, what: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("expected {what}, got '{tok}'")))
}

/// Reads a graph in PACE gr format (`p tw n m`) or DIMACS (`p edge n m`
/// with `e u v` lines). Comment lines start with `c`.
pub fn parse_graph(input: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut declared_m = 0usize;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut dimacs = false;
    for (idx, raw) in input.lines().enumerate() {
        let lineno = idx + 1;
        let toks = tokens(raw);
        match toks.as_slice() {
            [] => continue,
            [first, ..] if first.starts_with('c') && *first == "c" => continue,
            ["p", fmt, ns, ms, ..] => {
                if n.is_some() {
                    return Err(Error::parse(lineno, "duplicate problem line"));
                }
                dimacs = *fmt == "edge";
                if !dimacs && *fmt != "tw" && *fmt != "ds" {
                    return Err(Error::parse(lineno, format!("unknown format '{fmt}'")));
                }
                n = Some(parse_usize(ns, lineno, "vertex count")?);
                declared_m = parse_usize(ms, lineno, "edge count")?;
            }
            ["e", us, vs] => {
                let u = parse_usize(us, lineno, "endpoint")?;
                let v = parse_usize(vs, lineno, "endpoint")?;
                edges.push(check_edge(u, v, n, lineno)?);
            }
            [us, vs] if n.is_some() && !dimacs => {
                let u = parse_usize(us, lineno, "endpoint")?;
                let v = parse_usize(vs, lineno, "endpoint")?;
                edges.push(check_edge(u, v, n, lineno)?);
            }
            _ => return Err(Error::parse(lineno, format!("unrecognized line '{raw}'"))),
        }
    }
    let n = n.ok_or_else(|| Error::parse(0, "missing problem line"))?;
    if edges.len() != declared_m {
        return Err(Error::parse(
            0,
            format!("header declares {declared_m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_edges(n, &edges)
}

fn check_edge(u: usize, v: usize, n: Option<usize>, lineno: usize) -> Result<(usize, usize)> {
    let n = n.ok_or_else(|| Error::parse(lineno, "edge before problem line"))?;
    if u == 0 || v == 0 || u > n || v > n {
        return Err(Error::parse(
            lineno,
            format!("edge ({u}, {v}) out of range 1..={n}"),
        ));
    }
    Ok((u - 1, v - 1))
}

/// Writes a graph in PACE gr format, edges sorted, 1-indexed.
pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("p tw {} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}

/// Reads a tree decomposition in PACE td format:
/// `s td <#bags> <width+1> <n>`, `b <id> <v...>` and bag-tree edge lines.
pub fn parse_td(input: &str) -> Result<TreeDecomposition> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut bags: Vec<Option<Vec<usize>>> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (idx, raw) in input.lines().enumerate() {
        let lineno = idx + 1;
        let toks = tokens(raw);
        match toks.as_slice() {
            [] => continue,
            ["c", ..] => continue,
            ["s", "td", nb, w1, ns] => {
                if header.is_some() {
                    return Err(Error::parse(lineno, "duplicate solution line"));
                }
                let nb = parse_usize(nb, lineno, "bag count")?;
                let w1 = parse_usize(w1, lineno, "width+1")?;
                let n = parse_usize(ns, lineno, "vertex count")?;
                header = Some((nb, w1, n));
                bags = vec![None; nb];
            }
            ["b", id, verts @ ..] => {
                let (nb, _, n) =
                    header.ok_or_else(|| Error::parse(lineno, "bag before solution line"))?;
                let id = parse_usize(id, lineno, "bag id")?;
                if id == 0 || id > nb {
                    return Err(Error::parse(lineno, format!("bag id {id} out of range")));
                }
                let mut bag = Vec::with_capacity(verts.len());
                for vs in verts {
                    let v = parse_usize(vs, lineno, "vertex")?;
                    if v == 0 || v > n {
                        return Err(Error::parse(
                            lineno,
                            format!("bag references vertex {v} out of range 1..={n}"),
                        ));
                    }
                    bag.push(v - 1);
                }
                bag.sort_unstable();
                bag.dedup();
                bags[id - 1] = Some(bag);
            }
            [a, b] => {
                let (nb, _, _) =
                    header.ok_or_else(|| Error::parse(lineno, "edge before solution line"))?;
                let a = parse_usize(a, lineno, "bag id")?;
                let b = parse_usize(b, lineno, "bag id")?;
                if a == 0 || b == 0 || a > nb || b > nb {
                    return Err(Error::parse(lineno, format!("tree edge ({a}, {b}) out of range")));
                }
                edges.push((a - 1, b - 1));
            }
            _ => return Err(Error::parse(lineno, format!("unrecognized line '{raw}'"))),
        }
    }
    let (nb, _, n) = header.ok_or_else(|| Error::parse(0, "missing solution line"))?;
    let mut resolved = Vec::with_capacity(nb);
    for (i, bag) in bags.into_iter().enumerate() {
        resolved.push(bag.ok_or_else(|| {
            Error::parse(0, format!("bag {} declared in header but never defined", i + 1))
        })?);
    }
    Ok(TreeDecomposition::new(n, resolved, edges))
}

/// Writes a tree decomposition in PACE td format.
pub fn write_td(td: &TreeDecomposition) -> String {
    let mut out = format!(
        "s td {} {} {}\n",
        td.bag_count(),
        td.width() + 1,
        td.graph_vertex_count()
    );
    for (i, bag) in td.bags().iter().enumerate() {
        out.push_str(&format!("b {}", i + 1));
        for &v in bag {
            out.push_str(&format!(" {}", v + 1));
        }
        out.push('\n');
    }
    for &(a, b) in td.tree_edges() {
        out.push_str(&format!("{} {}\n", a + 1, b + 1));
    }
    out
}

/// Reads a solution file: whitespace-separated 1-indexed vertex ids,
/// `#` comments.
pub fn parse_solution(input: &str, n: usize) -> Result<Vec<usize>> {
    let mut vertices = Vec::new();
    for (idx, raw) in input.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("");
        for tok in line.split_whitespace() {
            let v = parse_usize(tok, lineno, "vertex id")?;
            if v == 0 || v > n {
                return Err(Error::parse(
                    lineno,
                    format!("vertex {v} out of range 1..={n}"),
                ));
            }
            vertices.push(v - 1);
        }
    }
    vertices.sort_unstable();
    vertices.dedup();
    Ok(vertices)
}

/// Writes a solution file, ascending and 1-indexed.
pub fn write_solution(vertices: &[usize]) -> String {
    let mut sorted = vertices.to_vec();
    sorted.sort_unstable();
    let mut out = String::new();
    for v in sorted {
        out.push_str(&format!("{}\n", v + 1));
    }
    out
}

/// Reads a DIMACS cnf file (`p cnf n m`, 0-terminated clause lines).
pub fn parse_cnf(input: &str) -> Result<Cnf> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses: Vec<Vec<i32>> = Vec::new();
    let mut pending: Vec<i32> = Vec::new();
    for (idx, raw) in input.lines().enumerate() {
        let lineno = idx + 1;
        let toks = tokens(raw);
        match toks.as_slice() {
            [] => continue,
            ["c", ..] => continue,
            ["p", "cnf", ns, ms] => {
                if header.is_some() {
                    return Err(Error::parse(lineno, "duplicate problem line"));
                }
                header = Some((
                    parse_usize(ns, lineno, "variable count")?,
                    parse_usize(ms, lineno, "clause count")?,
                ));
            }
            lits => {
                let (n, _) =
                    header.ok_or_else(|| Error::parse(lineno, "clause before problem line"))?;
                for tok in lits {
                    let lit: i32 = tok
                        .parse()
                        .map_err(|_| Error::parse(lineno, format!("expected literal, got '{tok}'")))?;
                    if lit == 0 {
                        if pending.is_empty() {
                            return Err(Error::parse(lineno, "empty clause"));
                        }
                        clauses.push(std::mem::take(&mut pending));
                    } else {
                        if lit.unsigned_abs() as usize > n {
                            return Err(Error::parse(
                                lineno,
                                format!("literal {lit} out of range (n = {n})"),
                            ));
                        }
                        pending.push(lit);
                    }
                }
            }
        }
    }
    let (n, m) = header.ok_or_else(|| Error::parse(0, "missing problem line"))?;
    if !pending.is_empty() {
        return Err(Error::parse(0, "last clause not 0-terminated"));
    }
    if clauses.len() != m {
        return Err(Error::parse(
            0,
            format!("header declares {m} clauses, found {}", clauses.len()),
        ));
    }
    Cnf::new(n, clauses)
}

/// Writes a cnf in DIMACS format.
pub fn write_cnf(cnf: &Cnf) -> String {
    let mut out = format!("p cnf {} {}\n", cnf.variable_count(), cnf.clauses().len());
    for clause in cnf.clauses() {
        for lit in clause {
            out.push_str(&format!("{lit} "));
        }
        out.push_str("0\n");
    }
    out
}

/// Reads a partition sidecar: lines `pa ...`, `pb ...`, `pg ...` listing
/// 1-indexed variable ids of the three parts. Combined with a cnf this
/// yields a [`PartitionedCnf`]; the partition must be disjoint, covering,
/// and balanced, and every clause may use at most one variable per part.
pub fn parse_partition(input: &str, cnf: &Cnf) -> Result<PartitionedCnf> {
    let n = cnf.variable_count();
    let mut assignment: Vec<Option<Part>> = vec![None; n];
    for (idx, raw) in input.lines().enumerate() {
        let lineno = idx + 1;
        let toks = tokens(raw);
        let (part, vars) = match toks.as_slice() {
            [] => continue,
            ["c", ..] | ["#", ..] => continue,
            ["pa", rest @ ..] => (Part::Alpha, rest),
            ["pb", rest @ ..] => (Part::Beta, rest),
            ["pg", rest @ ..] => (Part::Gamma, rest),
            _ => return Err(Error::parse(lineno, format!("unrecognized line '{raw}'"))),
        };
        for tok in vars {
            let v = parse_usize(tok, lineno, "variable id")?;
            if v == 0 || v > n {
                return Err(Error::parse(
                    lineno,
                    format!("variable {v} out of range 1..={n}"),
                ));
            }
            if assignment[v - 1].is_some() {
                return Err(Error::parse(
                    lineno,
                    format!("variable {v} assigned to two parts"),
                ));
            }
            assignment[v - 1] = Some(part);
        }
    }
    let mut parts: [Vec<usize>; 3] = Default::default();
    for (v, part) in assignment.iter().enumerate() {
        match part {
            Some(p) => parts[*p as usize].push(v),
            None => {
                return Err(Error::InvalidInput(format!(
                    "variable {} not assigned to any part",
                    v + 1
                )))
            }
        }
    }
    PartitionedCnf::from_cnf_and_parts(cnf, parts)
}

/// Writes the partition sidecar for a [`PartitionedCnf`] expressed over the
/// global variable ids of [`PartitionedCnf::to_cnf`].
pub fn write_partition(pcnf: &PartitionedCnf) -> String {
    let n = pcnf.vars_per_part();
    let row = |tag: &str, offset: usize| {
        let mut line = tag.to_string();
        for i in 0..n {
            line.push_str(&format!(" {}", offset + i + 1));
        }
        line.push('\n');
        line
    };
    format!(
        "{}{}{}",
        row("pa", 0),
        row("pb", n),
        row("pg", 2 * n)
    )
}

/// Writes a gadget group-annotation file: one `g <group-name> v1 v2 ...`
/// line per group, vertices 1-indexed.
pub fn write_groups<'a>(groups: impl Iterator<Item = (&'a str, &'a [usize])>) -> String {
    let mut out = String::new();
    for (name, members) in groups {
        out.push_str(&format!("g {name}"));
        let mut sorted = members.to_vec();
        sorted.sort_unstable();
        for v in sorted {
            out.push_str(&format!(" {}", v + 1));
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gr_round_trip() {
        let g = Graph::cycle(5);
        let text = write_graph(&g);
        let back = parse_graph(&text).unwrap();
        assert_eq!(g, back);
        assert_eq!(write_graph(&back), text);
    }

    #[test]
    fn dimacs_edge_format() {
        let g = parse_graph("c comment\np edge 3 2\ne 1 2\ne 2 3\n").unwrap();
        assert_eq!(g, Graph::path(3));
    }

    #[test]
    fn gr_errors() {
        assert!(parse_graph("").is_err());
        assert!(parse_graph("p tw 2 1\n3 1\n").is_err());
        assert!(parse_graph("p tw 2 2\n1 2\n").is_err());
    }

    #[test]
    fn solution_round_trip() {
        let parsed = parse_solution("3 1 # comment\n2\n", 5).unwrap();
        assert_eq!(parsed, vec![0, 1, 2]);
        assert_eq!(write_solution(&parsed), "1\n2\n3\n");
        assert!(parse_solution("9", 5).is_err());
    }

    #[test]
    fn cnf_round_trip() {
        let cnf = parse_cnf("p cnf 3 2\n1 -2 3 0\n-1 2 0\n").unwrap();
        assert_eq!(cnf.clauses().len(), 2);
        let text = write_cnf(&cnf);
        assert_eq!(parse_cnf(&text).unwrap().clauses(), cnf.clauses());
    }

    #[test]
    fn td_errors() {
        assert!(parse_td("").is_err());
        assert!(parse_td("s td 1 1 2\nb 1 3\n").is_err());
    }
}
