//! 3-CNF formulas, the three-way variable partition used by the hardness
//! constructions, and the transformations that produce it.

use crate::{Error, Result};

/// One of the three variable parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Part {
    Alpha = 0,
    Beta = 1,
    Gamma = 2,
}

pub const PARTS: [Part; 3] = [Part::Alpha, Part::Beta, Part::Gamma];

impl Part {
    pub fn tag(self) -> &'static str {
        match self {
            Part::Alpha => "alpha",
            Part::Beta => "beta",
            Part::Gamma => "gamma",
        }
    }
}

/// A literal of a partitioned formula: variable `index` of `part`,
/// positive or negated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PLit {
    pub part: Part,
    /// 0-based index within the part.
    pub index: usize,
    pub positive: bool,
}

/// A plain CNF over variables `0..n-1`; literals in DIMACS convention
/// (`+v`/`-v`, 1-indexed) as `i32`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cnf {
    n: usize,
    clauses: Vec<Vec<i32>>,
}

impl Cnf {
    pub fn new(n: usize, clauses: Vec<Vec<i32>>) -> Result<Self> {
        for clause in &clauses {
            if clause.is_empty() {
                return Err(Error::InvalidInput("empty clause".into()));
            }
            for &lit in clause {
                let v = lit.unsigned_abs() as usize;
                if lit == 0 || v > n {
                    return Err(Error::InvalidInput(format!("literal {lit} out of range")));
                }
            }
        }
        Ok(Cnf { n, clauses })
    }

    pub fn variable_count(&self) -> usize {
        self.n
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }

    pub fn evaluate(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|clause| {
            clause
                .iter()
                .any(|&lit| assignment[lit.unsigned_abs() as usize - 1] == (lit > 0))
        })
    }

    /// Truth-table satisfiability check; errors beyond 24 variables.
    pub fn satisfying_assignment(&self) -> Result<Option<Vec<bool>>> {
        if self.n > 24 {
            return Err(Error::CapExceeded(format!(
                "truth-table SAT check capped at 24 variables, got {}",
                self.n
            )));
        }
        for bits in 0u64..(1u64 << self.n) {
            let assignment: Vec<bool> = (0..self.n).map(|i| bits >> i & 1 == 1).collect();
            if self.evaluate(&assignment) {
                return Ok(Some(assignment));
            }
        }
        Ok(None)
    }
}

/// A 3-CNF with its variables split into three equal parts such that no
/// clause contains more than one variable from each part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionedCnf {
    vars_per_part: usize,
    clauses: Vec<Vec<PLit>>,
}

impl PartitionedCnf {
    /// Validates the per-clause part constraint and clause sizes.
    pub fn new(vars_per_part: usize, clauses: Vec<Vec<PLit>>) -> Result<Self> {
        for clause in &clauses {
            if clause.is_empty() || clause.len() > 3 {
                return Err(Error::InvalidInput(format!(
                    "clause with {} literals (expected 1..=3)",
                    clause.len()
                )));
            }
            for part in PARTS {
                if clause.iter().filter(|l| l.part == part).count() > 1 {
                    return Err(Error::InvalidInput(format!(
                        "clause uses more than one variable from part {}",
                        part.tag()
                    )));
                }
            }
            for lit in clause {
                if lit.index >= vars_per_part {
                    return Err(Error::InvalidInput(format!(
                        "variable index {} out of range (n per part = {vars_per_part})",
                        lit.index
                    )));
                }
            }
        }
        Ok(PartitionedCnf {
            vars_per_part,
            clauses,
        })
    }

    /// Builds a partitioned formula from a plain cnf and a three-way split
    /// of its variables. The split must be balanced and covering.
    pub fn from_cnf_and_parts(cnf: &Cnf, parts: [Vec<usize>; 3]) -> Result<Self> {
        let n = parts[0].len();
        if parts[1].len() != n || parts[2].len() != n {
            return Err(Error::InvalidInput(format!(
                "parts must have equal sizes, got {}/{}/{}",
                parts[0].len(),
                parts[1].len(),
                parts[2].len()
            )));
        }
        let mut lookup: Vec<Option<(Part, usize)>> = vec![None; cnf.variable_count()];
        for (p, members) in parts.iter().enumerate() {
            for (i, &v) in members.iter().enumerate() {
                lookup[v] = Some((PARTS[p], i));
            }
        }
        let clauses = cnf
            .clauses()
            .iter()
            .map(|clause| {
                clause
                    .iter()
                    .map(|&lit| {
                        let (part, index) = lookup[lit.unsigned_abs() as usize - 1]
                            .expect("partition covers all variables");
                        PLit {
                            part,
                            index,
                            positive: lit > 0,
                        }
                    })
                    .collect()
            })
            .collect();
        PartitionedCnf::new(n, clauses)
    }

    pub fn vars_per_part(&self) -> usize {
        self.vars_per_part
    }

    pub fn clause_count(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[Vec<PLit>] {
        &self.clauses
    }

    /// True iff every clause contains exactly one variable from each part.
    pub fn is_exact(&self) -> bool {
        self.clauses.iter().all(|clause| {
            clause.len() == 3
                && PARTS
                    .iter()
                    .all(|&p| clause.iter().filter(|l| l.part == p).count() == 1)
        })
    }

    /// Variable of `clause` belonging to `part`, if any.
    pub fn part_literal(&self, clause: usize, part: Part) -> Option<PLit> {
        self.clauses[clause].iter().copied().find(|l| l.part == part)
    }

    /// Evaluates under an assignment indexed `[part][index]`.
    pub fn evaluate(&self, assignment: &Assignment) -> bool {
        self.clauses.iter().all(|clause| {
            clause
                .iter()
                .any(|lit| assignment.get(lit.part, lit.index) == lit.positive)
        })
    }

    /// Truth-table search for a satisfying assignment; errors beyond
    /// 24 total variables.
    pub fn satisfying_assignment(&self) -> Result<Option<Assignment>> {
        let total = 3 * self.vars_per_part;
        if total > 24 {
            return Err(Error::CapExceeded(format!(
                "truth-table SAT check capped at 24 variables, got {total}"
            )));
        }
        for bits in 0u64..(1u64 << total) {
            let assignment = Assignment {
                vars_per_part: self.vars_per_part,
                values: (0..total).map(|i| bits >> i & 1 == 1).collect(),
            };
            if self.evaluate(&assignment) {
                return Ok(Some(assignment));
            }
        }
        Ok(None)
    }

    /// Flattens to a plain cnf over global ids `alpha: 1..=n`,
    /// `beta: n+1..=2n`, `gamma: 2n+1..=3n`.
    pub fn to_cnf(&self) -> Cnf {
        let n = self.vars_per_part;
        let clauses = self
            .clauses
            .iter()
            .map(|clause| {
                clause
                    .iter()
                    .map(|lit| {
                        let v = (lit.part as usize * n + lit.index + 1) as i32;
                        if lit.positive {
                            v
                        } else {
                            -v
                        }
                    })
                    .collect()
            })
            .collect();
        Cnf::new(3 * n, clauses).expect("flattened cnf is well-formed")
    }
}

/// An assignment of a partitioned formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment {
    vars_per_part: usize,
    /// `values[part * n + index]`.
    values: Vec<bool>,
}

impl Assignment {
    pub fn new(vars_per_part: usize, values: Vec<bool>) -> Self {
        assert_eq!(values.len(), 3 * vars_per_part);
        Assignment {
            vars_per_part,
            values,
        }
    }

    pub fn get(&self, part: Part, index: usize) -> bool {
        self.values[part as usize * self.vars_per_part + index]
    }

    pub fn vars_per_part(&self) -> usize {
        self.vars_per_part
    }
}

fn check_three_sat_input(cnf: &Cnf) -> Result<()> {
    if cnf.clauses().is_empty() {
        return Err(Error::InvalidInput(
            "formula has no clauses (every variable must be used)".into(),
        ));
    }
    let mut used = vec![false; cnf.variable_count()];
    for clause in cnf.clauses() {
        if clause.len() < 2 || clause.len() > 3 {
            return Err(Error::InvalidInput(format!(
                "clause with {} literals (expected 2 or 3)",
                clause.len()
            )));
        }
        for &lit in clause {
            used[lit.unsigned_abs() as usize - 1] = true;
        }
    }
    if let Some(v) = used.iter().position(|&u| !u) {
        return Err(Error::InvalidInput(format!(
            "variable {} is never used",
            v + 1
        )));
    }
    Ok(())
}

/// Splits a 3-CNF into an equisatisfiable 3-partitioned formula: each
/// variable x_i becomes a triple (alpha, beta, gamma copy), original
/// clauses are retargeted by literal position, and three linking clauses
/// per variable force the copies to agree.
pub fn partition_3sat(cnf: &Cnf) -> Result<PartitionedCnf> {
    check_three_sat_input(cnf)?;
    let n = cnf.variable_count();
    let mut clauses: Vec<Vec<PLit>> = Vec::new();
    for clause in cnf.clauses() {
        let retargeted = clause
            .iter()
            .zip(PARTS)
            .map(|(&lit, part)| PLit {
                part,
                index: lit.unsigned_abs() as usize - 1,
                positive: lit > 0,
            })
            .collect();
        clauses.push(retargeted);
    }
    for i in 0..n {
        let lit = |part, positive| PLit {
            part,
            index: i,
            positive,
        };
        clauses.push(vec![lit(Part::Alpha, false), lit(Part::Beta, true)]);
        clauses.push(vec![lit(Part::Beta, false), lit(Part::Gamma, true)]);
        clauses.push(vec![lit(Part::Alpha, true), lit(Part::Gamma, false)]);
    }
    PartitionedCnf::new(n, clauses)
}

/// Like [`partition_3sat`] but the output satisfies the exact variant:
/// every clause contains exactly one variable from each part. Adds a
/// forced-False dummy variable x0 per part, seven guard clauses pinning
/// the dummies, and pads short clauses with the positive x0 literal of
/// each missing part.
pub fn exact_partition_3sat(cnf: &Cnf) -> Result<PartitionedCnf> {
    let base = partition_3sat(cnf)?;
    let n = base.vars_per_part();
    // Dummy x0 of each part gets index n in the widened parts.
    let dummy = |part, positive| PLit {
        part,
        index: n,
        positive,
    };
    let mut clauses: Vec<Vec<PLit>> = Vec::new();
    for clause in base.clauses() {
        let mut clause = clause.clone();
        for part in PARTS {
            if !clause.iter().any(|l| l.part == part) {
                clause.push(dummy(part, true));
            }
        }
        clauses.push(clause);
    }
    // Guard clauses: satisfied exactly when all three dummies are False.
    for bits in 0..8u8 {
        if bits == 0b111 {
            continue;
        }
        clauses.push(
            PARTS
                .iter()
                .enumerate()
                .map(|(i, &part)| dummy(part, bits >> i & 1 == 1))
                .collect(),
        );
    }
    let out = PartitionedCnf::new(n + 1, clauses)?;
    debug_assert!(out.is_exact());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny() -> Cnf {
        // (x1 v -x2 v x3)
        Cnf::new(3, vec![vec![1, -2, 3]]).unwrap()
    }

    #[test]
    fn partition_counts() {
        let p = partition_3sat(&tiny()).unwrap();
        assert_eq!(p.vars_per_part() * 3, 9);
        assert_eq!(p.clause_count(), 10);
    }

    #[test]
    fn exact_partition_counts() {
        let p = exact_partition_3sat(&tiny()).unwrap();
        assert_eq!(p.vars_per_part() * 3, 12);
        assert_eq!(p.clause_count(), 17);
        assert!(p.is_exact());
    }

    #[test]
    fn exact_on_three_literal_formula_keeps_originals() {
        let cnf = Cnf::new(3, vec![vec![1, 2, 3], vec![-1, -2, -3]]).unwrap();
        let p = exact_partition_3sat(&cnf).unwrap();
        assert_eq!(p.vars_per_part(), 4);
        assert_eq!(p.clause_count(), 2 + 9 + 7);
        // The two original clauses keep their literals untouched.
        assert_eq!(p.clauses()[0].len(), 3);
        assert!(p.clauses()[0].iter().all(|l| l.index < 3));
    }

    #[test]
    fn empty_formula_rejected() {
        let cnf = Cnf::new(1, vec![]).unwrap();
        assert!(partition_3sat(&cnf).is_err());
    }

    #[test]
    fn oversized_clause_rejected() {
        let cnf = Cnf::new(4, vec![vec![1, 2, 3, 4]]).unwrap();
        assert!(partition_3sat(&cnf).is_err());
    }

    fn random_cnf(seed: u64) -> Cnf {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(2..=4);
        let m = rng.gen_range(1..=4);
        let mut clauses = Vec::new();
        let mut used = vec![false; n];
        for _ in 0..m {
            let len = rng.gen_range(2..=3);
            let mut vars: Vec<usize> = (0..n).collect();
            for i in (1..vars.len()).rev() {
                vars.swap(i, rng.gen_range(0..=i));
            }
            let clause: Vec<i32> = vars[..len]
                .iter()
                .map(|&v| {
                    used[v] = true;
                    let sign = if rng.gen() { 1 } else { -1 };
                    sign * (v as i32 + 1)
                })
                .collect();
            clauses.push(clause);
        }
        // Ensure every variable is used.
        for v in 0..n {
            if !used[v] {
                clauses.push(vec![v as i32 + 1, -(v as i32 + 1)]);
            }
        }
        Cnf::new(n, clauses).unwrap()
    }

    #[test]
    fn transformations_preserve_satisfiability() {
        for seed in 0..50 {
            let cnf = random_cnf(seed);
            let sat = cnf.satisfying_assignment().unwrap().is_some();
            let p = partition_3sat(&cnf).unwrap();
            assert_eq!(p.satisfying_assignment().unwrap().is_some(), sat, "seed {seed}");
            let e = exact_partition_3sat(&cnf).unwrap();
            assert_eq!(e.satisfying_assignment().unwrap().is_some(), sat, "seed {seed} exact");
        }
    }
}
