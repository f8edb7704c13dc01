//! Command-line front end.
//!
//! Exit codes: 0 when the property holds or a witness is found, 1 when it
//! fails or no witness exists, 2 on input errors.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::Path;
use std::time::Instant;

use clap::{Parser, Subcommand};

use crate::bounds::{bounds_record, complete_graph_zero_excess, verify_bound};
use crate::edgelist::{self, EdgeList};
use crate::engine::{is_orientable, lambda_count, scan_cordial};
use crate::error::Error;
use crate::named::{named, Named};
use crate::quasigroup::{is_subset_q_cordial, z3_minus_instance, CayleyTable, CordialInstance};
use crate::report::{RunReport, Value};
use crate::search::{
    noncordial_orientations_with_jobs, scan_alternating_paths, tournament_survey_with_jobs,
    SymmetryMode,
};
use crate::verification;

pub const EXIT_HOLDS: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "cordial",
    version,
    about = "(2,3)-cordial labelings of digraphs and orientability of graphs"
)]
struct Cli {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for orientation scans (0 = all cores).
    #[arg(long, global = true, env = "CORDIAL_JOBS", default_value_t = 0)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Search a digraph for a cordial labeling. FILE is a path, `-`, or NAME[:N].
    CheckDigraph {
        file: String,
        /// Only scan labelings with vertex 0 labeled 0.
        #[arg(long)]
        fix_first_label: bool,
    },
    /// Decide orientability of an undirected graph.
    CheckGraph { file: String },
    /// List the orientations of a graph that have no cordial labeling.
    Search {
        file: String,
        #[arg(long)]
        fix_first_arc: bool,
        #[arg(long)]
        fix_first_label: bool,
    },
    /// Print a named graph or digraph as an edge list.
    Gen { name: String, n: Option<usize> },
    /// Even n up to NMAX whose alternating path is not cordial.
    ScanAlternating { n_max: usize },
    /// Count non-cordial tournaments on N vertices (1..=6).
    Tournaments { n: usize },
    /// Evaluate the edge-count bound formulas.
    Bounds { n: usize },
    /// Exhaustively test the edge-count bound (N in 6..=7).
    VerifyBound { n: usize },
    /// Subset-quasigroup cordiality of a digraph.
    Qcheck {
        file: String,
        /// Table file, or `z3_minus`.
        #[arg(long)]
        table: String,
        /// Comma-separated label subset, e.g. `0,1`.
        #[arg(long, value_delimiter = ',')]
        subset: Vec<usize>,
    },
    /// Run every reproduction check and print a pass/fail table.
    VerifyPaper,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INPUT
            } else {
                EXIT_HOLDS
            };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    match execute(&cli, stdin, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

fn load(spec: &str, stdin: &mut dyn Read) -> Result<EdgeList, Error> {
    let io_err = |e: std::io::Error| Error::Parse {
        line: 0,
        message: format!("{spec}: {e}"),
    };
    if spec == "-" {
        let mut text = String::new();
        stdin.read_to_string(&mut text).map_err(io_err)?;
        return edgelist::parse(&text);
    }
    if Path::new(spec).exists() {
        let text = std::fs::read_to_string(spec).map_err(io_err)?;
        return edgelist::parse(&text);
    }
    let (name, n) = match spec.split_once(':') {
        Some((name, n)) => {
            let n = n.parse().map_err(|_| Error::Parse {
                line: 0,
                message: format!("bad count in `{spec}`"),
            })?;
            (name, Some(n))
        }
        None => (spec, None),
    };
    Ok(match named(name, n)? {
        Named::Graph(g) => EdgeList::Undirected(g),
        Named::Digraph(d) => EdgeList::Directed(d),
    })
}

fn execute(cli: &Cli, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<i32, Error> {
    let start = Instant::now();
    let (mut report, code) = match &cli.command {
        Command::Gen { name, n } => {
            let text = match named(name, *n)? {
                Named::Graph(g) => edgelist::write_graph(&g),
                Named::Digraph(d) => edgelist::write_digraph(&d),
            };
            let _ = out.write_all(text.as_bytes());
            return Ok(EXIT_HOLDS);
        }
        Command::CheckDigraph {
            file,
            fix_first_label,
        } => {
            let d = load(file, stdin)?.into_digraph()?;
            let mut r = RunReport::new("check-digraph");
            r.input("file", file)
                .input("fix_first_label", fix_first_label);
            let scan = scan_cordial(&d, *fix_first_label);
            r.verdict("vertices", d.vertex_count())
                .verdict("arcs", d.arc_count())
                .verdict("labelings_scanned", scan.labelings_scanned)
                .verdict("cordial", scan.witness.is_some());
            match &scan.witness {
                Some(w) => {
                    r.verdict("result", "cordial labeling found")
                        .verdict("labeling", Value::Bits(w.labeling.to_string()));
                    if let Some(t) = w.gamma {
                        r.verdict("gamma", t);
                    }
                }
                None => {
                    r.verdict("result", "no cordial labeling");
                }
            }
            let code = exit_for(scan.witness.is_some());
            (r, code)
        }
        Command::CheckGraph { file } => {
            let g = load(file, stdin)?.into_graph()?;
            let mut r = RunReport::new("check-graph");
            r.input("file", file);
            r.verdict("vertices", g.vertex_count())
                .verdict("edges", g.edge_count());
            let w = is_orientable(&g);
            r.verdict("orientable", w.is_some());
            match &w {
                Some(w) => {
                    let lambda = lambda_count(&g, &w.labeling)?;
                    r.verdict("result", "(2,3)-orientable")
                        .verdict("labeling", Value::Bits(w.labeling.to_string()))
                        .verdict("lambda", lambda)
                        .verdict("orientation", Value::Bits(w.orientation.to_string()))
                        .verdict("gamma", w.gamma);
                }
                None => {
                    r.verdict("result", "not (2,3)-orientable");
                }
            }
            (r, exit_for(w.is_some()))
        }
        Command::Search {
            file,
            fix_first_arc,
            fix_first_label,
        } => {
            let g = load(file, stdin)?.into_graph()?;
            let mode = SymmetryMode::from_flags(*fix_first_arc, *fix_first_label);
            let s = noncordial_orientations_with_jobs(&g, mode, cli.jobs)?;
            let mut r = RunReport::new("search");
            r.input("file", file).input("symmetry", mode);
            r.verdict("orientations_scanned", s.total_orientations_scanned)
                .verdict("noncordial_count", s.noncordial.len())
                .verdict(
                    "noncordial",
                    Value::List(
                        s.noncordial
                            .iter()
                            .map(|o| Value::Bits(o.to_string()))
                            .collect(),
                    ),
                );
            let code = exit_for(s.noncordial.is_empty());
            (r, code)
        }
        Command::ScanAlternating { n_max } => {
            let failing = scan_alternating_paths(*n_max)?;
            let mut r = RunReport::new("scan-alternating");
            r.input("n_max", n_max);
            r.verdict(
                "noncordial_n",
                Value::List(failing.iter().map(|&n| Value::from(n)).collect()),
            );
            (r, exit_for(failing.is_empty()))
        }
        Command::Tournaments { n } => {
            let s = tournament_survey_with_jobs(*n, cli.jobs)?;
            let mut r = RunReport::new("tournaments");
            r.input("n", n);
            r.verdict("total", s.total)
                .verdict("noncordial_count", s.noncordial_count);
            (r, exit_for(s.noncordial_count == 0))
        }
        Command::Bounds { n } => {
            let b = bounds_record(*n)?;
            let mut r = RunReport::new("bounds");
            r.input("n", n);
            r.verdict("z", b.z)
                .verdict("bichromatic_capacity", b.bichromatic_capacity)
                .verdict("e_max", b.e_max)
                .verdict("within_hypothesis", b.within_hypothesis)
                .verdict("zero_excess", complete_graph_zero_excess(*n));
            (r, EXIT_HOLDS)
        }
        Command::VerifyBound { n } => {
            let v = verify_bound(*n)?;
            let mut r = RunReport::new("verify-bound");
            r.input("n", n);
            r.verdict("e_max", v.e_max)
                .verdict("graphs_checked", v.graphs_checked)
                .verdict("violations", v.violations.len());
            if let Some(g) = v.violations.first() {
                r.verdict(
                    "first_violation",
                    edgelist::write_graph(g)
                        .replace('\n', " ")
                        .trim_end()
                        .to_string(),
                );
            }
            r.verdict("tight_edges", v.tight_graph.edge_count());
            match &v.tight_witness {
                Some(w) => {
                    r.verdict("tight_labeling", Value::Bits(w.labeling.to_string()))
                        .verdict("tight_orientation", Value::Bits(w.orientation.to_string()))
                        .verdict("tight_gamma", w.gamma);
                }
                None => {
                    r.verdict("tight_witness", false);
                }
            }
            (
                r,
                exit_for(v.violations.is_empty() && v.tight_witness.is_some()),
            )
        }
        Command::Qcheck {
            file,
            table,
            subset,
        } => {
            let d = load(file, stdin)?.into_digraph()?;
            let inst = if table == "z3_minus" && subset.is_empty() {
                z3_minus_instance()
            } else {
                let t = if table == "z3_minus" {
                    z3_minus_instance().table().clone()
                } else {
                    let text = std::fs::read_to_string(table).map_err(|e| Error::Parse {
                        line: 0,
                        message: format!("{table}: {e}"),
                    })?;
                    CayleyTable::parse(&text)?
                };
                CordialInstance::new(t, subset)?
            };
            let mut r = RunReport::new("qcheck");
            r.input("file", file).input("table", table).input(
                "subset",
                inst.label_subset()
                    .iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(","),
            );
            let w = is_subset_q_cordial(&d, &inst);
            r.verdict("cordial", w.is_some());
            if let Some(f) = &w {
                r.verdict(
                    "labeling",
                    Value::List(
                        f.iter()
                            .map(|&x| Value::Text(inst.table().name(x)))
                            .collect(),
                    ),
                );
            }
            (r, exit_for(w.is_some()))
        }
        Command::VerifyPaper => {
            let outcomes = verification::run_all();
            let mut r = RunReport::new("verify-paper");
            for o in &outcomes {
                if !cli.json {
                    let _ = writeln!(out, "{}", o.line());
                }
                r.verdict(&format!("criterion_{}", o.id), o.passed());
            }
            let all = outcomes.iter().all(|o| o.passed());
            r.verdict("all_passed", all);
            (r, exit_for(all))
        }
    };
    report.set_elapsed(start.elapsed());
    let text = if cli.json {
        report.to_json() + "\n"
    } else {
        report.to_text()
    };
    let _ = out.write_all(text.as_bytes());
    Ok(code)
}

fn exit_for(holds: bool) -> i32 {
    if holds {
        EXIT_HOLDS
    } else {
        EXIT_FAILS
    }
}
