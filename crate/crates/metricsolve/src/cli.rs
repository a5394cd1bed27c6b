//! Command-line front end: file parsing, solver orchestration and
//! text/JSON reporting. The binary in `src/main.rs` is a thin wrapper
//! around [`run`].

use crate::gadget::{build, witness_from_assignment, Construction, GadgetGraph};
use crate::graph::{all_pairs_distances, Graph};
use crate::io;
use crate::oracle::{brute_budgeted, verifier, DEFAULT_BRUTE_CAP};
use crate::sat::{exact_partition_3sat, partition_3sat, Assignment, PartitionedCnf};
use crate::srg::{smd_solve, strong_resolving_graph};
use crate::td::{heuristic_td, make_nice, validate_td, NiceTreeDecomposition, TreeDecomposition};
use crate::vc::{approx_vc_2, kernelize_gs_vc, kernelize_md_vc, kernelize_smd_vc};
use crate::{Decision, Error, Method, Problem, Result, SolutionReport};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::path::PathBuf;
use std::time::Instant;

/// Exit codes: 0 = success / YES / valid, 1 = NO / invalid, 2 = error.
pub const EXIT_OK: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "metricsolve",
    about = "Exact solvers for metric dimension, geodetic set and strong metric dimension",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Auto,
    Brute,
    DpTw,
    XpVc,
    SmdVc,
}

#[derive(Debug, Args)]
pub struct Caps {
    /// Largest accepted vertex count.
    #[arg(long, default_value_t = 2048)]
    pub max_n: usize,
    /// Largest accepted tree decomposition width for the dynamic programs.
    #[arg(long, default_value_t = 8)]
    pub max_width: usize,
    /// Cooperative time budget in seconds.
    #[arg(long)]
    pub time_limit: Option<f64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve a problem exactly, optionally as a budgeted decision.
    Solve {
        problem: Problem,
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        /// Budget: exit 0 if a solution of at most this size exists, 1 otherwise.
        #[arg(short)]
        k: Option<usize>,
        /// Tree decomposition file for the dp-tw method.
        #[arg(long)]
        td: Option<PathBuf>,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        caps: Caps,
    },
    /// Verify a solution file against the matching verifier.
    Check {
        problem: Problem,
        graph: PathBuf,
        solution: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Apply the problem's twin kernelization and emit the reduced graph.
    Kernelize {
        problem: Problem,
        graph: PathBuf,
        #[arg(short)]
        k: i64,
        /// Output path for the reduced graph (PACE gr).
        #[arg(short)]
        output: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Build a hardness instance from a partitioned formula.
    Reduce {
        construction: String,
        cnf: PathBuf,
        /// Partition sidecar (pa/pb/pg lines).
        #[arg(long)]
        parts: Option<PathBuf>,
        /// Output prefix: writes <prefix>.gr and <prefix>.groups.
        #[arg(short)]
        output: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Split a 3-CNF into an equisatisfiable 3-partitioned formula.
    Partition {
        cnf: PathBuf,
        /// Produce the exact variant (one variable per part per clause).
        #[arg(long)]
        exact: bool,
        /// Output prefix: writes <prefix>.cnf and <prefix>.parts.
        #[arg(short)]
        output: Option<PathBuf>,
    },
    /// Build a construction's forward witness from a satisfying assignment.
    Witness {
        construction: String,
        cnf: PathBuf,
        #[arg(long)]
        parts: Option<PathBuf>,
        /// Randomize the satisfying-assignment search order.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Structural statistics of a graph.
    Stats {
        graph: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Emit the strong resolving graph in PACE gr format.
    GsrDump {
        graph: PathBuf,
        #[arg(short)]
        output: Option<PathBuf>,
    },
}

/// Runs one parsed command; returns the exit code.
pub fn run(cli: Cli) -> i32 {
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            EXIT_ERROR
        }
    }
}

fn read_graph(path: &PathBuf) -> Result<Graph> {
    io::parse_graph(&std::fs::read_to_string(path)?)
}

fn deadline_of(caps: &Caps) -> Option<Instant> {
    caps.time_limit
        .map(|secs| Instant::now() + std::time::Duration::from_secs_f64(secs))
}

fn pick_auto(g: &Graph, problem: Problem, max_width: usize) -> Result<(Method, Option<TreeDecomposition>)> {
    if g.vertex_count() <= 12 {
        return Ok((Method::Brute, None));
    }
    if problem == Problem::Smd {
        return Ok((Method::SmdVc, None));
    }
    let td = heuristic_td(g)?;
    if td.width() <= 3 && td.width() <= max_width {
        return Ok((Method::DpTw, Some(td)));
    }
    if approx_vc_2(g).len() <= 20 {
        return Ok((Method::XpVc, None));
    }
    Err(Error::CapExceeded(
        "no applicable method: graph too large for brute force, width above 3 and cover above 20"
            .into(),
    ))
}

fn load_or_build_ntd(
    g: &Graph,
    td_path: &Option<PathBuf>,
    prebuilt: Option<TreeDecomposition>,
    max_width: usize,
) -> Result<NiceTreeDecomposition> {
    let td = match td_path {
        Some(path) => {
            let td = io::parse_td(&std::fs::read_to_string(path)?)?;
            validate_td(g, &td).map_err(|v| Error::InvalidTreeDecomposition(v.to_string()))?;
            td
        }
        None => match prebuilt {
            Some(td) => td,
            None => heuristic_td(g)?,
        },
    };
    if td.width() > max_width {
        return Err(Error::CapExceeded(format!(
            "decomposition width {} above --max-width {max_width}",
            td.width()
        )));
    }
    make_nice(g, &td)
}

fn solve_with(
    g: &Graph,
    problem: Problem,
    method: MethodArg,
    td_path: &Option<PathBuf>,
    caps: &Caps,
    budget: Option<usize>,
) -> Result<(Decision, Method)> {
    let deadline = deadline_of(caps);
    let (method, prebuilt) = match method {
        MethodArg::Auto => pick_auto(g, problem, caps.max_width)?,
        MethodArg::Brute => (Method::Brute, None),
        MethodArg::DpTw => (Method::DpTw, None),
        MethodArg::XpVc => (Method::XpVc, None),
        MethodArg::SmdVc => (Method::SmdVc, None),
    };
    let report: SolutionReport = match (method, problem) {
        (Method::Brute, _) => brute_budgeted(g, problem, DEFAULT_BRUTE_CAP + 8, deadline)?,
        (Method::DpTw, Problem::Md) => {
            let ntd = load_or_build_ntd(g, td_path, prebuilt, caps.max_width)?;
            crate::dp::md_dp_budgeted(g, &ntd, deadline)?
        }
        (Method::DpTw, Problem::Gs) => {
            let ntd = load_or_build_ntd(g, td_path, prebuilt, caps.max_width)?;
            crate::dp::gs_dp_budgeted(g, &ntd, deadline)?
        }
        (Method::DpTw, Problem::Smd) => {
            return Err(Error::InvalidInput(
                "no tree-decomposition dynamic program for smd; use smd-vc or brute".into(),
            ))
        }
        (Method::XpVc, Problem::Md) => {
            let k = budget.unwrap_or(g.vertex_count());
            return match crate::vc::xp_md_vc_budgeted(g, k, deadline)? {
                Decision::Yes(report) => Ok((Decision::Yes(report), Method::XpVc)),
                Decision::No => Ok((Decision::No, Method::XpVc)),
            };
        }
        (Method::XpVc, Problem::Gs) => {
            let k = budget.unwrap_or(g.vertex_count());
            return match crate::vc::xp_gs_vc_budgeted(g, k, deadline)? {
                Decision::Yes(report) => Ok((Decision::Yes(report), Method::XpVc)),
                Decision::No => Ok((Decision::No, Method::XpVc)),
            };
        }
        (Method::XpVc, Problem::Smd) => {
            return Err(Error::InvalidInput(
                "no xp algorithm for smd; use smd-vc or brute".into(),
            ))
        }
        (Method::SmdVc, Problem::Smd) => smd_solve(g)?,
        (Method::SmdVc, _) => {
            return Err(Error::InvalidInput(
                "the smd-vc method applies to the smd problem only".into(),
            ))
        }
    };
    let decision = match budget {
        Some(k) if report.optimum > k => Decision::No,
        _ => Decision::Yes(report),
    };
    Ok((decision, method))
}

fn report_json(
    g: &Graph,
    report: Option<&SolutionReport>,
    problem: Problem,
    method: Method,
    k: Option<usize>,
    elapsed_ms: u128,
) -> serde_json::Value {
    json!({
        "problem": problem.as_str(),
        "n": g.vertex_count(),
        "m": g.edge_count(),
        "k": k,
        "optimum": report.map(|r| r.optimum),
        "witness": report.map(|r| r.witness.iter().map(|v| v + 1).collect::<Vec<_>>()),
        "method": method.to_string(),
        "elapsed_ms": elapsed_ms,
    })
}

fn write_or_print(path: &Option<PathBuf>, content: &str) -> Result<()> {
    match path {
        Some(path) => std::fs::write(path, content)?,
        None => print!("{content}"),
    }
    Ok(())
}

fn parse_pcnf(cnf_path: &PathBuf, parts: &Option<PathBuf>) -> Result<PartitionedCnf> {
    let cnf = io::parse_cnf(&std::fs::read_to_string(cnf_path)?)?;
    match parts {
        Some(parts_path) => io::parse_partition(&std::fs::read_to_string(parts_path)?, &cnf),
        None => Err(Error::InvalidInput(
            "partition required (or run partition first)".into(),
        )),
    }
}

fn groups_annotation(gg: &GadgetGraph) -> String {
    let mut out = String::new();
    for (v, name) in gg.names.iter().enumerate() {
        out.push_str(&format!("c v {} {}\n", v + 1, name));
    }
    out.push_str(&io::write_groups(
        gg.groups.iter().map(|(name, members)| (name.as_str(), members.as_slice())),
    ));
    out
}

fn dispatch(command: Command) -> Result<i32> {
    match command {
        Command::Solve {
            problem,
            graph,
            method,
            k,
            td,
            json,
            caps,
        } => {
            let g = read_graph(&graph)?;
            if g.vertex_count() > caps.max_n {
                return Err(Error::CapExceeded(format!(
                    "graph has {} vertices, --max-n is {}",
                    g.vertex_count(),
                    caps.max_n
                )));
            }
            let start = Instant::now();
            let (decision, used) = solve_with(&g, problem, method, &td, &caps, k)?;
            let elapsed = start.elapsed().as_millis();
            match decision {
                Decision::Yes(report) => {
                    if json {
                        println!(
                            "{}",
                            report_json(&g, Some(&report), problem, used, k, elapsed)
                        );
                    } else {
                        println!("{} optimum {}", problem, report.optimum);
                        println!(
                            "witness {}",
                            report
                                .witness
                                .iter()
                                .map(|v| (v + 1).to_string())
                                .collect::<Vec<_>>()
                                .join(" ")
                        );
                    }
                    Ok(EXIT_OK)
                }
                Decision::No => {
                    if json {
                        println!("{}", report_json(&g, None, problem, used, k, elapsed));
                    } else {
                        println!("{problem} NO (budget {})", k.unwrap_or_default());
                    }
                    Ok(EXIT_NO)
                }
            }
        }
        Command::Check {
            problem,
            graph,
            solution,
            json,
        } => {
            let g = read_graph(&graph)?;
            let sol = io::parse_solution(&std::fs::read_to_string(&solution)?, g.vertex_count())?;
            let dm = all_pairs_distances(&g);
            let valid = verifier(problem)(&g, &dm, &sol)?;
            if json {
                println!(
                    "{}",
                    json!({"problem": problem.as_str(), "size": sol.len(), "valid": valid})
                );
            } else {
                println!("{}", if valid { "valid" } else { "invalid" });
            }
            Ok(if valid { EXIT_OK } else { EXIT_NO })
        }
        Command::Kernelize {
            problem,
            graph,
            k,
            output,
            json,
        } => {
            let g = read_graph(&graph)?;
            let kernel = match problem {
                Problem::Md => kernelize_md_vc(&g, k)?,
                Problem::Gs => kernelize_gs_vc(&g, k)?,
                Problem::Smd => kernelize_smd_vc(&g, k)?,
            };
            let text = io::write_graph(&kernel.graph);
            if let Some(path) = &output {
                std::fs::write(path, &text)?;
            }
            if json {
                println!(
                    "{}",
                    json!({
                        "problem": problem.as_str(),
                        "n": kernel.graph.vertex_count(),
                        "m": kernel.graph.edge_count(),
                        "k": kernel.budget,
                        "deletions": kernel.log.len(),
                        "no_instance": kernel.no_instance,
                    })
                );
            } else {
                if output.is_none() {
                    print!("{text}");
                }
                println!("k {}", kernel.budget);
                if kernel.no_instance {
                    println!("trivial NO instance");
                }
            }
            Ok(EXIT_OK)
        }
        Command::Reduce {
            construction,
            cnf,
            parts,
            output,
            json,
        } => {
            let construction: Construction = construction.parse()?;
            let pcnf = parse_pcnf(&cnf, &parts)?;
            let gg = build(construction, &pcnf)?;
            let graph_text = io::write_graph(&gg.graph);
            let groups_text = groups_annotation(&gg);
            if let Some(prefix) = &output {
                std::fs::write(prefix.with_extension("gr"), &graph_text)?;
                std::fs::write(prefix.with_extension("groups"), &groups_text)?;
            }
            if json {
                println!(
                    "{}",
                    json!({
                        "construction": construction.as_str(),
                        "n": gg.graph.vertex_count(),
                        "m": gg.graph.edge_count(),
                        "k": gg.k,
                        "groups": gg.groups.keys().collect::<Vec<_>>(),
                    })
                );
            } else {
                if output.is_none() {
                    print!("{graph_text}");
                }
                println!("k {}", gg.k);
            }
            Ok(EXIT_OK)
        }
        Command::Partition { cnf, exact, output } => {
            let raw = io::parse_cnf(&std::fs::read_to_string(&cnf)?)?;
            let pcnf = if exact {
                exact_partition_3sat(&raw)?
            } else {
                partition_3sat(&raw)?
            };
            let cnf_text = io::write_cnf(&pcnf.to_cnf());
            let parts_text = io::write_partition(&pcnf);
            match &output {
                Some(prefix) => {
                    std::fs::write(prefix.with_extension("cnf"), &cnf_text)?;
                    std::fs::write(prefix.with_extension("parts"), &parts_text)?;
                    println!(
                        "partitioned: {} variables per part, {} clauses",
                        pcnf.vars_per_part(),
                        pcnf.clause_count()
                    );
                }
                None => {
                    print!("{cnf_text}");
                    print!("{parts_text}");
                }
            }
            Ok(EXIT_OK)
        }
        Command::Witness {
            construction,
            cnf,
            parts,
            seed,
            json,
        } => {
            let construction: Construction = construction.parse()?;
            let pcnf = parse_pcnf(&cnf, &parts)?;
            let assignment = find_satisfying(&pcnf, seed)?
                .ok_or_else(|| Error::InvalidInput("formula is unsatisfiable".into()))?;
            let witness = witness_from_assignment(construction, &pcnf, &assignment)?;
            let gg = build(construction, &pcnf)?;
            if json {
                println!(
                    "{}",
                    json!({
                        "construction": construction.as_str(),
                        "k": gg.k,
                        "witness": witness.iter().map(|v| v + 1).collect::<Vec<_>>(),
                    })
                );
            } else {
                println!(
                    "{}",
                    witness
                        .iter()
                        .map(|v| (v + 1).to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                );
            }
            Ok(EXIT_OK)
        }
        Command::Stats { graph, json } => {
            let g = read_graph(&graph)?;
            let dm = all_pairs_distances(&g);
            let tc = g.twin_classes();
            let diameter = dm.diameter().ok();
            let width = if g.is_connected() && g.vertex_count() >= 1 {
                heuristic_td(&g).ok().map(|td| td.width())
            } else {
                None
            };
            let stats = json!({
                "n": g.vertex_count(),
                "m": g.edge_count(),
                "connected": g.is_connected(),
                "diameter": diameter,
                "simplicial": g.simplicial_vertices().len(),
                "false_twin_classes": tc.false_twins.iter().filter(|c| c.len() >= 2).count(),
                "true_twin_classes": tc.true_twins.iter().filter(|c| c.len() >= 2).count(),
                "approx_vc": approx_vc_2(&g).len(),
                "heuristic_width": width,
            });
            if json {
                println!("{stats}");
            } else {
                println!("{}", serde_json::to_string_pretty(&stats).unwrap());
            }
            Ok(EXIT_OK)
        }
        Command::GsrDump { graph, output } => {
            let g = read_graph(&graph)?;
            let dm = all_pairs_distances(&g);
            let srg = strong_resolving_graph(&g, &dm)?;
            write_or_print(&output, &io::write_graph(&srg))?;
            Ok(EXIT_OK)
        }
    }
}

/// Truth-table search for a satisfying assignment; with a seed the
/// assignments are probed in a shuffled order.
fn find_satisfying(pcnf: &PartitionedCnf, seed: Option<u64>) -> Result<Option<Assignment>> {
    let total = 3 * pcnf.vars_per_part();
    if total > 24 {
        return Err(Error::CapExceeded(format!(
            "truth-table SAT check capped at 24 variables, got {total}"
        )));
    }
    let mut order: Vec<u64> = (0..1u64 << total).collect();
    if let Some(seed) = seed {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        order.shuffle(&mut rng);
    }
    for bits in order {
        let assignment = Assignment::new(
            pcnf.vars_per_part(),
            (0..total).map(|i| bits >> i & 1 == 1).collect(),
        );
        if pcnf.evaluate(&assignment) {
            return Ok(Some(assignment));
        }
    }
    Ok(None)
}
