use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;
use serde_json::{json, Value};

use edgeflip::corpus;
use edgeflip::flip::DEFAULT_GROUP_CAP;
use edgeflip::io::{edge_set_to_json, format_move_sequence, graph_to_json, parse_edge_set, parse_graph};
use edgeflip::selfcheck::run_selfcheck;
use edgeflip::solver::{solve, verify_sequence, DEFAULT_STATE_CAP};
use edgeflip::structure::{groups_isomorphic, structure, verify_structure};
use edgeflip::vertex_flip::{classify_y, pi1};
use edgeflip::{Error, Graph, OrbitDescriptor, Puzzle, Solution, YGraphSpec};

const EXIT_USAGE: u8 = 1;
const EXIT_UNSOLVABLE: u8 = 2;
const EXIT_CAP: u8 = 3;
const EXIT_INVARIANT: u8 = 4;

/// Default number of orbits `orbits` will list.
const DEFAULT_ORBIT_LIMIT: usize = 1 << 16;

#[derive(Parser)]
#[command(name = "edgeflip", version, about = "Edge-flipping puzzles on finite simple connected graphs")]
struct Cli {
    /// Machine-readable output (the default).
    #[arg(long, global = true, conflicts_with = "human")]
    json: bool,
    /// Plain-text output.
    #[arg(long, global = true)]
    human: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphArg {
    /// Graph file (JSON or text), or `builtin:NAME`.
    #[arg(long = "graph", value_name = "PATH")]
    graph: String,
}

#[derive(Subcommand)]
enum Command {
    /// Orbit descriptor and orbit size of one configuration.
    Classify {
        #[command(flatten)]
        graph: GraphArg,
        /// Configuration as endpoint pairs, e.g. "0-1,1-2", or "-".
        #[arg(long, visible_alias = "from", value_name = "EDGES")]
        config: String,
    },
    /// Shortest move sequence between two configurations.
    Solve {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, value_name = "EDGES")]
        from: String,
        #[arg(long, value_name = "EDGES")]
        to: String,
        /// Maximum number of stored search states.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        cap: Option<u64>,
    },
    /// Every orbit with its size.
    Orbits {
        #[command(flatten)]
        graph: GraphArg,
        /// Refuse to list more than this many orbits.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        cap: Option<u64>,
    },
    /// Structure and order of the edge-flipping group.
    Order {
        #[command(flatten)]
        graph: GraphArg,
    },
    /// Enumerate the group and check it against the product model.
    Verify {
        #[command(flatten)]
        graph: GraphArg,
        /// Maximum number of group elements to enumerate.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        cap: Option<u64>,
    },
    /// Whether two graphs have isomorphic edge-flipping groups.
    Isomorphic {
        /// Exactly two graphs.
        #[arg(long = "graph", value_name = "PATH", num_args = 1, required = true)]
        graphs: Vec<String>,
    },
    /// Invariant and group of a one-hub graph.
    Pi1 {
        /// Number of vertices.
        #[arg(long)]
        m: usize,
        /// Path vertices joined to the hub, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        attach: Vec<usize>,
    },
    /// Line graph in JSON form.
    Linegraph {
        #[command(flatten)]
        graph: GraphArg,
    },
    /// Run the built-in oracle comparisons.
    Selfcheck,
}

/// A failed command: exit code plus the one-line error report.
struct Failure {
    code: u8,
    kind: String,
    detail: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::CapExceeded { .. }) {
            EXIT_CAP
        } else {
            EXIT_USAGE
        };
        Failure {
            code,
            kind: e.kind().to_string(),
            detail: e.to_string(),
        }
    }
}

/// Successful (or verdict-bearing) output.
struct Report {
    value: Value,
    human: String,
    code: u8,
}

impl Report {
    fn ok(value: Value, human: String) -> Self {
        Report { value, human, code: 0 }
    }
}

fn load_graph(spec: &str) -> Result<Graph, Failure> {
    if let Some(name) = spec.strip_prefix("builtin:") {
        return corpus::builtin(name).ok_or_else(|| Failure {
            code: EXIT_USAGE,
            kind: "UnknownBuiltin".into(),
            detail: format!("no built-in graph named {name:?}"),
        });
    }
    let text = fs::read_to_string(Path::new(spec)).map_err(|e| Failure {
        code: EXIT_USAGE,
        kind: "Io".into(),
        detail: format!("{spec}: {e}"),
    })?;
    Ok(parse_graph(&text)?)
}

fn cap_or(cap: Option<u64>, default: usize) -> usize {
    cap.map_or(default, |c| usize::try_from(c).unwrap_or(usize::MAX))
}

/// Numbers that fit in `u64` as JSON numbers, bigger ones as strings.
fn count_json(x: &BigUint) -> Value {
    u64::try_from(x).map_or_else(|_| json!(x.to_string()), |v| json!(v))
}

fn descriptor_json(g: &Graph, d: &OrbitDescriptor) -> Value {
    json!({ "coset_rep": edge_set_to_json(g, &d.coset_rep), "class": d.class.label() })
}

fn descriptor_text(g: &Graph, d: &OrbitDescriptor) -> String {
    format!("{} + {}", edgeflip::io::format_edge_set(g, &d.coset_rep), d.class)
}

fn run(command: Command) -> Result<Report, Failure> {
    match command {
        Command::Classify { graph, config } => {
            let g = load_graph(&graph.graph)?;
            let cfg = parse_edge_set(&g, &config)?;
            let p = Puzzle::new(g.clone())?;
            let d = p.classify(&cfg)?;
            let size = p.orbit_size(&d)?;
            let mut value = descriptor_json(&g, &d);
            value["orbit_size"] = count_json(&size);
            Ok(Report::ok(value, format!("orbit {} of size {size}", descriptor_text(&g, &d))))
        }
        Command::Solve { graph, from, to, cap } => {
            let g = load_graph(&graph.graph)?;
            let start = parse_edge_set(&g, &from)?;
            let target = parse_edge_set(&g, &to)?;
            let p = Puzzle::new(g.clone())?;
            let cap = cap_or(cap, DEFAULT_STATE_CAP);
            match solve(&p, &start, &target, cap)? {
                Solution::Solved(w) => {
                    if verify_sequence(&g, &start, &w)? != target {
                        return Err(Failure {
                            code: EXIT_INVARIANT,
                            kind: "InvariantViolation".into(),
                            detail: "solver output does not replay to the target".into(),
                        });
                    }
                    let moves = format_move_sequence(&g, &w)?;
                    let human = format!("solvable in {} moves: {moves}", w.len());
                    Ok(Report::ok(json!({ "solvable": true, "moves": moves, "length": w.len() }), human))
                }
                Solution::Unsolvable { from, to } => Ok(Report {
                    human: format!(
                        "unsolvable: start lies in {}, target in {}",
                        descriptor_text(&g, &from),
                        descriptor_text(&g, &to)
                    ),
                    value: json!({
                        "solvable": false,
                        "certificate": { "from": descriptor_json(&g, &from), "to": descriptor_json(&g, &to) },
                    }),
                    code: EXIT_UNSOLVABLE,
                }),
                Solution::CapExceeded { cap } => Ok(Report {
                    value: json!({ "solvable": true, "cap_exceeded": true, "cap": cap }),
                    human: format!("solvable, but the search exceeded {cap} states"),
                    code: EXIT_CAP,
                }),
            }
        }
        Command::Orbits { graph, cap } => {
            let g = load_graph(&graph.graph)?;
            let p = Puzzle::new(g.clone())?;
            let descriptors = p.descriptors(cap_or(cap, DEFAULT_ORBIT_LIMIT))?;
            let mut rows = Vec::new();
            let mut lines = Vec::new();
            for d in &descriptors {
                let size = p.orbit_size(d)?;
                let mut row = descriptor_json(&g, d);
                row["orbit_size"] = count_json(&size);
                rows.push(row);
                lines.push(format!("{}\t{size}", descriptor_text(&g, d)));
            }
            let count = p.orbit_count()?;
            lines.insert(0, format!("{count} orbits"));
            Ok(Report::ok(json!({ "orbit_count": count.to_string(), "orbits": rows }), lines.join("\n")))
        }
        Command::Order { graph } => {
            let g = load_graph(&graph.graph)?;
            let s = structure(&g)?;
            let human = format!("{s}, order {}", s.order);
            Ok(Report::ok(
                json!({
                    "n": s.n,
                    "m": s.m,
                    "k": s.k,
                    "order": s.order.to_string(),
                    "branch": s.branch.as_str(),
                }),
                human,
            ))
        }
        Command::Verify { graph, cap } => {
            let g = load_graph(&graph.graph)?;
            let r = verify_structure(&g, cap_or(cap, DEFAULT_GROUP_CAP))?;
            let passed = r.passed();
            let value = json!({
                "passed": passed,
                "predicted_order": r.descriptor.order.to_string(),
                "group_order": r.group_order.to_string(),
                "order_matches": r.order_matches,
                "homomorphism": r.homomorphism,
                "pairs_checked": r.pairs_checked,
                "exhaustive_pairs": r.exhaustive_pairs,
                "image_size": r.image_size.to_string(),
                "injective": r.injective,
                "components_allowed": r.components_allowed,
                "surjective": r.surjective,
            });
            let human = format!(
                "{}: order {} (predicted {}), homomorphism on {} pairs {}, injective {}, components {}, surjective {}",
                if passed { "PASS" } else { "FAIL" },
                r.group_order,
                r.descriptor.order,
                r.pairs_checked,
                r.homomorphism,
                r.injective,
                r.components_allowed,
                r.surjective
            );
            Ok(Report {
                value,
                human,
                code: if passed { 0 } else { EXIT_INVARIANT },
            })
        }
        Command::Isomorphic { graphs } => {
            if graphs.len() != 2 {
                return Err(Failure {
                    code: EXIT_USAGE,
                    kind: "usage".into(),
                    detail: format!("isomorphic takes exactly two --graph arguments, got {}", graphs.len()),
                });
            }
            let a = load_graph(&graphs[0])?;
            let b = load_graph(&graphs[1])?;
            let verdict = groups_isomorphic(&a, &b)?;
            Ok(Report::ok(
                json!({ "isomorphic": verdict, "n": [a.n(), b.n()], "m": [a.m(), b.m()] }),
                format!(
                    "{} (n = {} vs {}, m = {} vs {})",
                    if verdict { "isomorphic" } else { "not isomorphic" },
                    a.n(),
                    b.n(),
                    a.m(),
                    b.m()
                ),
            ))
        }
        Command::Pi1 { m, attach } => {
            let spec = YGraphSpec::new(m, attach)?;
            let value = pi1(&spec);
            let class = classify_y(&spec)?;
            let order = class.order().map_or(Value::Null, |o| json!(o.to_string()));
            Ok(Report::ok(
                json!({ "pi1": value, "classification": class.to_string(), "order": order }),
                format!("{spec}: pi1 = {value}, group {class}"),
            ))
        }
        Command::Linegraph { graph } => {
            let g = load_graph(&graph.graph)?;
            let line = edgeflip::graph::line_graph(&g)?;
            Ok(Report::ok(graph_to_json(&line), edgeflip::io::graph_to_text(&line)))
        }
        Command::Selfcheck => {
            let report = run_selfcheck()?;
            let passed = report.passed();
            let lines: Vec<String> = report
                .checks
                .iter()
                .map(|c| {
                    let verdict = if c.passed { "ok  " } else { "FAIL" };
                    format!("{verdict} {} {} {}", c.graph, c.check, c.detail)
                })
                .collect();
            let value = json!({ "passed": passed, "checks": report.checks });
            Ok(Report {
                value,
                human: lines.join("\n"),
                code: if passed { 0 } else { EXIT_INVARIANT },
            })
        }
    }
}

fn emit_error(f: &Failure) {
    let line = json!({ "error": f.kind, "detail": f.detail });
    eprintln!("{line}");
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let detail = e.render().to_string();
            let first = detail.lines().next().unwrap_or("").trim_start_matches("error: ").to_string();
            emit_error(&Failure {
                code: EXIT_USAGE,
                kind: "usage".into(),
                detail: first,
            });
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let human = cli.human && !cli.json;
    match run(cli.command) {
        Ok(report) => {
            let mut out = std::io::stdout().lock();
            let text = if human {
                report.human
            } else {
                serde_json::to_string(&report.value).expect("JSON values always serialize")
            };
            let _ = writeln!(out, "{text}");
            if report.code == EXIT_CAP {
                emit_error(&Failure {
                    code: EXIT_CAP,
                    kind: "CapExceeded".into(),
                    detail: "search budget exhausted".into(),
                });
            }
            ExitCode::from(report.code)
        }
        Err(f) => {
            emit_error(&f);
            ExitCode::from(f.code)
        }
    }
}
