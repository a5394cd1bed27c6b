//! Solution reports shared by all solvers.

use serde::Serialize;
use std::fmt;

/// Which of the three problems a report refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Problem {
    Md,
    Gs,
    Smd,
}

impl Problem {
    pub fn as_str(self) -> &'static str {
        match self {
            Problem::Md => "md",
            Problem::Gs => "gs",
            Problem::Smd => "smd",
        }
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Problem {
    type Err = crate::Error;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "md" => Ok(Problem::Md),
            "gs" => Ok(Problem::Gs),
            "smd" => Ok(Problem::Smd),
            other => Err(crate::Error::InvalidInput(format!(
                "unknown problem '{other}' (expected md, gs or smd)"
            ))),
        }
    }
}

/// How a report was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Brute,
    DpTw,
    XpVc,
    SmdVc,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Brute => "brute",
            Method::DpTw => "dp-tw",
            Method::XpVc => "xp-vc",
            Method::SmdVc => "smd-vc",
        })
    }
}

/// An optimum together with a verifier-passing witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionReport {
    pub problem: Problem,
    pub optimum: usize,
    /// Sorted, 0-indexed witness of size `optimum`.
    pub witness: Vec<usize>,
    pub method: Method,
}

/// Outcome of a budgeted (decision) run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Yes(SolutionReport),
    No,
}

impl Decision {
    pub fn is_yes(&self) -> bool {
        matches!(self, Decision::Yes(_))
    }
}
