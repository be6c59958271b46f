use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use graphroot::io::{parse_edge_list, write_dot, write_edge_list};
use graphroot::oracle::{find_roots, OracleError, RootQuery};
use graphroot::reduction::{build_instance, extract_partition, SetSplittingInstance};
use graphroot::root6::{recognize_girth6, root_with_edge, root_with_neighborhood, EdgeInstance, NeighborhoodInstance};
use graphroot::root7::{recognize_bipartite_c4c6free, recognize_root7};
use graphroot::{enumerate_maximal_cliques, girth, max_weight_clique, power, square, Girth, Graph, Reason, RootResult};
use serde_json::{json, Value};

mod weights;

const YES: u8 = 0;
const NO: u8 = 1;
const USAGE: u8 = 2;
const BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "graphroot", version, about = "Square roots of graphs with girth constraints")]
struct Cli {
    /// Structured JSON on stdout.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Edge-list file, `-` for stdin.
    file: PathBuf,
}

#[derive(Args)]
struct RootOut {
    /// Print the root as Graphviz DOT instead of an edge list.
    #[arg(long)]
    dot: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Square of a graph.
    Square(Input),
    /// k-th power of a graph.
    Power {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: usize,
    },
    /// Girth, `inf` for forests.
    Girth(Input),
    /// Maximal cliques, one per line.
    Cliques {
        #[command(flatten)]
        input: Input,
        /// Give up after this many cliques (exit 1).
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Maximum-weight clique of a graph with few maximal cliques.
    CliqueMax {
        #[command(flatten)]
        input: Input,
        /// File of `v w` lines; unlisted vertices weigh 1.
        #[arg(long)]
        weights: Option<PathBuf>,
        /// Maximal clique budget, default n.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Square root of girth at least 7.
    Root7 {
        #[command(flatten)]
        input: Input,
        /// Look for a bipartite root without 4- and 6-cycles instead.
        #[arg(long = "bipartite-c4c6")]
        bipartite: bool,
        #[command(flatten)]
        out: RootOut,
    },
    /// Square root of girth at least 6.
    Root6 {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: RootOut,
    },
    /// Girth-6 root containing a given edge.
    Root6Fixed {
        #[command(flatten)]
        input: Input,
        /// `u,v`
        #[arg(long, value_parser = parse_pair)]
        edge: (usize, usize),
        #[command(flatten)]
        out: RootOut,
    },
    /// Girth-6 root with a prescribed neighbourhood of one vertex.
    Root6Nbhd {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        vertex: usize,
        /// Comma-separated neighbours of the vertex in the root.
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<usize>,
        #[command(flatten)]
        out: RootOut,
    },
    /// Exhaustive root search.
    RootOracle {
        #[command(flatten)]
        input: Input,
        #[arg(long, conflicts_with = "girth_exact")]
        girth_min: Option<usize>,
        #[arg(long)]
        girth_exact: Option<usize>,
        /// Comma-separated forbidden cycle lengths.
        #[arg(long, value_delimiter = ',')]
        forbid: Vec<usize>,
        #[arg(long)]
        limit: Option<usize>,
        /// Maximum number of search nodes (exit 3 when exceeded).
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Reduction graph of a set splitting instance.
    ReduceBuild {
        /// Instance JSON: {"n": .., "subsets": [[..], ..]}
        instance: PathBuf,
    },
    /// Read a splitting off a square root of the reduction graph.
    ReduceExtract { instance: PathBuf, root: PathBuf },
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or("expected `u,v`")?;
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("`{t}`: {e}"));
    Ok((num(a)?, num(b)?))
}

struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: USAGE,
        message: message.into(),
    }
}

/// What a command prints and how it exits.
struct Report {
    code: u8,
    text: String,
    json: Value,
}

fn read_text(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| usage(format!("stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = read_text(path)?;
    parse_edge_list(&text).map_err(|e| usage(format!("{}:{}:{}: {}", path.display(), e.line, e.column, e.kind)))
}

fn read_instance(path: &Path) -> Result<SetSplittingInstance, Failure> {
    let text = read_text(path)?;
    let raw: SetSplittingInstance = serde_json::from_str(&text)
        .map_err(|e| usage(format!("{}:{}:{}: {e}", path.display(), e.line(), e.column())))?;
    raw.validated().map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn edges_json(g: &Graph) -> Value {
    json!(g.edges().map(|(u, v)| [u, v]).collect::<Vec<_>>())
}

fn girth_json(g: Girth) -> Value {
    match g {
        Girth::Finite(k) => json!(k),
        Girth::Infinite => json!("inf"),
    }
}

fn graph_report(g: &Graph) -> Report {
    Report {
        code: YES,
        text: write_edge_list(g),
        json: json!({ "n": g.n(), "edges": edges_json(g) }),
    }
}

fn root_report(result: Result<Graph, Reason>, out: &RootOut) -> Report {
    match result {
        Ok(root) => {
            let gr = girth(&root);
            Report {
                code: YES,
                text: if out.dot {
                    write_dot(&root, "root")
                } else {
                    write_edge_list(&root)
                },
                json: json!({ "verdict": "YES", "reason": null, "root_edges": edges_json(&root), "girth": girth_json(gr) }),
            }
        }
        Err(reason) => Report {
            code: NO,
            text: format!("{}\n", reason.code()),
            json: json!({ "verdict": "NO", "reason": reason.code(), "root_edges": null, "girth": null }),
        },
    }
}

fn verdict(r: RootResult) -> Result<Graph, Reason> {
    match r {
        RootResult::Yes { root, .. } => Ok(root),
        RootResult::No { reason } => Err(reason),
    }
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    Ok(match &cli.command {
        Command::Square(input) => graph_report(&square(&read_graph(&input.file)?)),
        Command::Power { input, k } => {
            let g = read_graph(&input.file)?;
            graph_report(&power(&g, *k).map_err(|e| usage(e.to_string()))?)
        }
        Command::Girth(input) => {
            let gr = girth(&read_graph(&input.file)?);
            Report {
                code: YES,
                text: format!("{gr}\n"),
                json: json!({ "girth": girth_json(gr) }),
            }
        }
        Command::Cliques { input, cap } => {
            let list = enumerate_maximal_cliques(&read_graph(&input.file)?, *cap);
            let mut text: String = list
                .cliques
                .iter()
                .map(|q| q.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ") + "\n")
                .collect();
            if !list.complete {
                text.push_str(&format!("# stopped: more than {} maximal cliques\n", cap.unwrap_or(0)));
            }
            Report {
                code: if list.complete { YES } else { NO },
                text,
                json: json!({ "cliques": list.cliques.iter().map(|q| q.as_slice().to_vec()).collect::<Vec<_>>(), "complete": list.complete }),
            }
        }
        Command::CliqueMax { input, weights, cap } => {
            let g = read_graph(&input.file)?;
            let w = match weights {
                Some(path) => weights::parse(&read_text(path)?, g.n())
                    .map_err(|e| usage(format!("{}:{}:{}: {}", path.display(), e.line, e.column, e.message)))?,
                None => vec![1.0; g.n()],
            };
            match max_weight_clique(&g, &w, cap.unwrap_or(g.n().max(1))) {
                Ok((q, weight)) => Report {
                    code: YES,
                    text: format!(
                        "{}\n{weight}\n",
                        q.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
                    ),
                    json: json!({ "clique": q.as_slice(), "weight": weight }),
                },
                Err(e @ graphroot::CliqueError::TooManyCliques { .. }) => Report {
                    code: NO,
                    text: format!("{e}\n"),
                    json: json!({ "clique": null, "error": e.to_string() }),
                },
                Err(e) => return Err(usage(e.to_string())),
            }
        }
        Command::Root7 { input, bipartite, out } => {
            let g = read_graph(&input.file)?;
            let r = if *bipartite {
                recognize_bipartite_c4c6free(&g)
            } else {
                recognize_root7(&g)
            };
            root_report(verdict(r), out)
        }
        Command::Root6 { input, out } => root_report(verdict(recognize_girth6(&read_graph(&input.file)?)), out),
        Command::Root6Fixed { input, edge, out } => {
            let g = read_graph(&input.file)?;
            let inst = EdgeInstance::new(&g, edge.0, edge.1).map_err(|e| usage(e.to_string()))?;
            root_report(root_with_edge(&inst), out)
        }
        Command::Root6Nbhd {
            input,
            vertex,
            set,
            out,
        } => {
            let g = read_graph(&input.file)?;
            let inst = NeighborhoodInstance::new(&g, *vertex, set.iter().copied().collect())
                .map_err(|e| usage(e.to_string()))?;
            root_report(root_with_neighborhood(&inst).ok_or(Reason::NoCandidate), out)
        }
        Command::RootOracle {
            input,
            girth_min,
            girth_exact,
            forbid,
            limit,
            budget,
        } => {
            let mut q = RootQuery::new(read_graph(&input.file)?).forbid(forbid.iter().copied());
            if let Some(k) = girth_min {
                q = q.girth_min(*k);
            }
            if let Some(k) = girth_exact {
                q = q.girth_exact(*k);
            }
            if let Some(l) = limit {
                q = q.limit(*l);
            }
            if let Some(b) = budget {
                q = q.budget(*b);
            }
            let (search, code) = match find_roots(&q) {
                Ok(s) => {
                    let code = if s.roots.is_empty() { NO } else { YES };
                    (s, code)
                }
                Err(OracleError::BudgetExceeded { partial }) => (partial, BUDGET),
                Err(e) => return Err(usage(e.to_string())),
            };
            let mut text = format!(
                "# {} roots, exhausted: {}, nodes: {}\n",
                search.roots.len(),
                search.exhausted,
                search.nodes
            );
            for h in &search.roots {
                text.push_str(&write_edge_list(h));
            }
            Report {
                code,
                text,
                json: json!({
                    "roots": search.roots.iter().map(edges_json).collect::<Vec<_>>(),
                    "exhausted": search.exhausted,
                    "nodes": search.nodes,
                    "budget_exceeded": code == BUDGET,
                }),
            }
        }
        Command::ReduceBuild { instance } => {
            let ri = build_instance(&read_instance(instance)?).map_err(|e| usage(e.to_string()))?;
            let roles: String = ri
                .roles
                .iter()
                .enumerate()
                .map(|(v, r)| format!("# {v} {r}\n"))
                .collect();
            Report {
                code: YES,
                text: roles + &write_edge_list(&ri.graph),
                json: json!({ "n": ri.graph.n(), "edges": edges_json(&ri.graph), "roles": ri.roles }),
            }
        }
        Command::ReduceExtract { instance, root } => {
            let ri = build_instance(&read_instance(instance)?).map_err(|e| usage(e.to_string()))?;
            let h = read_graph(root)?;
            if h.n() != ri.graph.n() {
                return Err(usage(format!(
                    "root has {} vertices, instance graph has {}",
                    h.n(),
                    ri.graph.n()
                )));
            }
            match extract_partition(&ri, &h) {
                Ok(x) => {
                    let v = json!(x);
                    Report {
                        code: YES,
                        text: format!("{v}\n"),
                        json: v,
                    }
                }
                Err(e) => Report {
                    code: NO,
                    text: format!("{e}\n"),
                    json: json!({ "error": e.to_string() }),
                },
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            if cli.json {
                println!("{}", report.json);
            } else {
                print!("{}", report.text);
            }
            ExitCode::from(report.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
