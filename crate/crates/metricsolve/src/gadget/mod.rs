//! Generators for the SAT-based hardness instances, with named vertex
//! groups and witness builders checked by the problem verifiers.

mod builder;
mod gstw;
mod gsvc;
mod mdtw;
mod mdvc;
mod smd;

pub use builder::GadgetBuilder;
pub use gstw::build_gs_tw;
pub use gsvc::build_gs_vc;
pub use mdtw::build_md_tw;
pub use mdvc::build_md_vc;
pub use smd::{build_smd_h, build_smd_vc};

use crate::graph::Graph;
use crate::sat::{Assignment, PartitionedCnf};
use crate::{Error, Result};
use std::collections::BTreeMap;

/// Which hardness construction produced a gadget graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Construction {
    MdTw,
    GsTw,
    MdVc,
    GsVc,
    SmdVc,
    SmdH,
}

impl Construction {
    pub fn as_str(self) -> &'static str {
        match self {
            Construction::MdTw => "md-tw",
            Construction::GsTw => "gs-tw",
            Construction::MdVc => "md-vc",
            Construction::GsVc => "gs-vc",
            Construction::SmdVc => "smd-vc",
            Construction::SmdH => "smd-h",
        }
    }
}

impl std::str::FromStr for Construction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "md-tw" => Ok(Construction::MdTw),
            "gs-tw" => Ok(Construction::GsTw),
            "md-vc" => Ok(Construction::MdVc),
            "gs-vc" => Ok(Construction::GsVc),
            "smd-vc" => Ok(Construction::SmdVc),
            "smd-h" => Ok(Construction::SmdH),
            other => Err(Error::InvalidInput(format!(
                "unknown construction '{other}' (expected md-tw, gs-tw, md-vc, gs-vc, smd-vc or smd-h)"
            ))),
        }
    }
}

/// A generated hardness instance: graph, budget, named vertex groups and
/// a stable per-vertex name.
#[derive(Debug, Clone)]
pub struct GadgetGraph {
    pub graph: Graph,
    pub k: usize,
    pub groups: BTreeMap<String, Vec<usize>>,
    pub names: Vec<String>,
    pub construction: Construction,
}

impl GadgetGraph {
    pub fn group(&self, name: &str) -> &[usize] {
        self.groups.get(name).map(|v| v.as_slice()).unwrap_or(&[])
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Every vertex must belong to at least one group.
    pub fn groups_cover_all_vertices(&self) -> bool {
        let mut seen = vec![false; self.graph.vertex_count()];
        for members in self.groups.values() {
            for &v in members {
                seen[v] = true;
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// Builds the construction's forward witness from a satisfying assignment
/// (checked). The returned set has exactly the construction's budget `k`
/// many vertices and passes the matching verifier.
pub fn witness_from_assignment(
    construction: Construction,
    pcnf: &PartitionedCnf,
    assignment: &Assignment,
) -> Result<Vec<usize>> {
    if !pcnf.evaluate(assignment) {
        return Err(Error::UnsatisfyingAssignment);
    }
    match construction {
        Construction::MdTw => mdtw::witness_md_tw(pcnf, assignment),
        Construction::GsTw => gstw::witness_gs_tw(pcnf, assignment),
        Construction::MdVc => mdvc::witness_md_vc(pcnf, assignment),
        Construction::GsVc => gsvc::witness_gs_vc(pcnf, assignment),
        Construction::SmdVc | Construction::SmdH => Err(Error::InvalidInput(
            "witnesses are generated for the md/gs constructions only".into(),
        )),
    }
}

/// Dispatches a construction on a partitioned formula.
pub fn build(construction: Construction, pcnf: &PartitionedCnf) -> Result<GadgetGraph> {
    match construction {
        Construction::MdTw => build_md_tw(pcnf),
        Construction::GsTw => build_gs_tw(pcnf),
        Construction::MdVc => build_md_vc(pcnf),
        Construction::GsVc => build_gs_vc(pcnf),
        Construction::SmdVc => build_smd_vc(pcnf),
        Construction::SmdH => build_smd_h(pcnf),
    }
}

pub(crate) fn ceil_log2(x: usize) -> usize {
    assert!(x >= 1);
    (usize::BITS - (x - 1).leading_zeros()) as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ceil_log2_values() {
        assert_eq!(ceil_log2(1), 0);
        assert_eq!(ceil_log2(2), 1);
        assert_eq!(ceil_log2(3), 2);
        assert_eq!(ceil_log2(4), 2);
        assert_eq!(ceil_log2(5), 3);
        assert_eq!(ceil_log2(8), 3);
        assert_eq!(ceil_log2(9), 4);
    }
}
