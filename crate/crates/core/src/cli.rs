//! The `srn` command-line front end.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::arrowing::{arrows, ArrowOptions, SearchBudget, UndecidedReason, Verdict, DEFAULT_MAX_NODES};
use crate::edge_coloring::{proper_edge_coloring, two_factorize};
use crate::free_coloring::{lemma_branch, lemma_free_coloring, EdgeColoring, LemmaBranch};
use crate::graph::{edge_list_decode, graph6_decode, graph6_encode, Graph, DEFAULT_ENUMERATION_BUDGET};
use crate::ramsey::{
    classify_all, classify_instance, l_sequence, size_ramsey_exhaustive, theorem_value,
    verify_characterization, witness_graph, CharacterizationStatus, InstanceClass, SearchStatus,
};
use crate::star_forest::StarForest;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_UNDECIDED: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

const AFTER_HELP: &str = "\
GRAPH INPUT:
    g6:<code>          graph6 string
    edgelist:<path>    file with an \"n m\" header line and one \"u v\" line per edge
    edgelist:-         the same, read from standard input

EXIT STATUS:
    0   success, or the graph arrows the forests
    1   negative verdict (does not arrow, no graph found, characterization differs)
    2   undecided: a node, time or enumeration limit was reached
    64  usage or input error

ENVIRONMENT:
    SRN_THREADS        default for --threads (1 if unset)";

#[derive(Parser, Debug)]
#[command(
    name = "srn",
    version,
    about = "Size Ramsey numbers of star forests",
    long_about = "Evaluates the l-sequence formula and proved closed forms for pairs of star \
forests, builds witness graphs and free colorings, decides arrowing exactly and computes small \
size Ramsey numbers by exhaustive search. Forests are comma-separated star sizes, e.g. 3,2,2 \
for K_{1,3} + 2K_{1,2}.",
    after_help = AFTER_HELP
)]
struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the l-sequence, its total and the theorem covering the pair.
    Formula {
        #[command(flatten)]
        forests: ForestArgs,
        /// List every proved theorem that covers the pair.
        #[arg(long)]
        all_matches: bool,
    },
    /// Print the witness graph, the disjoint union of stars K_{1,l_k}.
    Witness {
        #[command(flatten)]
        forests: ForestArgs,
    },
    /// Decide whether a graph arrows the forests.
    Arrows {
        #[command(flatten)]
        graph: GraphArg,
        #[command(flatten)]
        forests: ForestArgs,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Free red/blue coloring for (K_{1,n}, K_{1,m}) when the max degree is at most n+m-3, or n+m-2 with n and m odd.
    FreeColor {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Proper edge coloring with at most max-degree + 1 colors (max-degree if bipartite).
    EdgeColor {
        #[command(flatten)]
        graph: GraphArg,
    },
    /// Split an even-regular graph into 2-factors.
    TwoFactor {
        #[command(flatten)]
        graph: GraphArg,
    },
    /// Smallest edge count of an arrowing graph, with all minimal graphs.
    Search {
        #[command(flatten)]
        forests: ForestArgs,
        /// Largest edge count to examine.
        #[arg(long)]
        max_edges: usize,
        /// Largest edge count the graph enumerator may reach.
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_BUDGET)]
        enum_budget: usize,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Compare the predicted minimal graphs with exhaustive search.
    Verify {
        #[command(flatten)]
        forests: ForestArgs,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_BUDGET)]
        max_edges: usize,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_BUDGET)]
        enum_budget: usize,
        #[command(flatten)]
        search: SearchArgs,
    },
}

#[derive(Args, Debug)]
struct ForestArgs {
    /// First forest (color 0, red).
    #[arg(long)]
    f1: Option<StarForest>,
    /// Second forest (color 1, blue).
    #[arg(long)]
    f2: Option<StarForest>,
    /// Further forests for colors 2, 3, ...; repeatable.
    #[arg(long)]
    fi: Vec<StarForest>,
}

impl ForestArgs {
    /// Forests in color order: --f1, --f2, then each --fi.
    fn list(&self) -> Result<Vec<StarForest>, Failure> {
        let mut out: Vec<StarForest> = self.f1.iter().chain(&self.f2).cloned().collect();
        out.extend(self.fi.iter().cloned());
        if out.is_empty() {
            return Err(Failure("at least one forest is required (--f1, --f2 or --fi)".into()));
        }
        Ok(out)
    }
}

#[derive(Args, Debug)]
struct GraphArg {
    /// g6:<code>, edgelist:<path> or edgelist:-
    #[arg(long)]
    graph: String,
}

#[derive(Args, Debug)]
struct SearchArgs {
    /// Maximum search nodes per arrowing decision.
    #[arg(long, default_value_t = DEFAULT_MAX_NODES, value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,
    /// Wall-clock limit per arrowing decision, in milliseconds.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    timeout_ms: Option<u64>,
    /// Worker threads.
    #[arg(long, env = "SRN_THREADS", default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    threads: u64,
    /// Disable color symmetry breaking among identical forests.
    #[arg(long)]
    no_symmetry_breaking: bool,
}

impl SearchArgs {
    fn options(&self) -> ArrowOptions {
        ArrowOptions {
            budget: SearchBudget {
                max_nodes: self.budget,
                time_limit: self.timeout_ms.map(Duration::from_millis),
            },
            symmetry_breaking: !self.no_symmetry_breaking,
            threads: self.threads as usize,
        }
    }
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

struct Output {
    code: i32,
    json: String,
    text: String,
}

/// Runs one command line. `argv[0]` is the program name.
pub fn run<I, T>(argv: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(rendered.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = stderr.write_all(rendered.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(&cli.command, stdin) {
        Ok(out) => {
            let body = match cli.format {
                Format::Json => out.json,
                Format::Text => out.text,
            };
            let _ = writeln!(stdout, "{body}");
            out.code
        }
        Err(Failure(msg)) => {
            let _ = writeln!(stderr, "srn: {msg}");
            EXIT_USAGE
        }
    }
}

fn read_graph(input: &str, stdin: &mut dyn Read) -> Result<Graph, Failure> {
    if let Some(code) = input.strip_prefix("g6:") {
        return Ok(graph6_decode(code)?);
    }
    if let Some(path) = input.strip_prefix("edgelist:") {
        let text = if path == "-" {
            let mut s = String::new();
            stdin.read_to_string(&mut s)?;
            s
        } else {
            std::fs::read_to_string(path).map_err(|e| Failure(format!("{path}: {e}")))?
        };
        return Ok(edge_list_decode(&text)?);
    }
    Err(Failure(format!(
        "graph input must start with g6: or edgelist:, found {input:?}"
    )))
}

fn provenance(class: InstanceClass) -> &'static str {
    if class.is_proved() {
        "proved"
    } else {
        "conjectured"
    }
}

fn sizes(forests: &[StarForest]) -> Vec<Vec<usize>> {
    forests.iter().map(|f| f.sizes().to_vec()).collect()
}

fn forests_text(forests: &[StarForest]) -> String {
    forests.iter().map(|f| f.to_string()).collect::<Vec<_>>().join(" | ")
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("reports serialize")
}

#[derive(Serialize)]
struct FormulaReport {
    l_sequence: Vec<usize>,
    total: usize,
    covered_by: InstanceClass,
    provenance: &'static str,
    command: &'static str,
    forests: Vec<Vec<usize>>,
    first_index: usize,
    theorem_value: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    all_matches: Option<Vec<InstanceClass>>,
}

#[derive(Serialize)]
struct WitnessReport {
    command: &'static str,
    forests: Vec<Vec<usize>>,
    graph6: String,
    edge_count: usize,
    stars: Vec<usize>,
    covered_by: InstanceClass,
    provenance: &'static str,
}

#[derive(Serialize)]
struct ArrowsReport {
    command: &'static str,
    forests: Vec<Vec<usize>>,
    graph6: String,
    verdict: Verdict,
    arrows: Option<bool>,
    counterexample: Option<EdgeColoring>,
    reason: Option<UndecidedReason>,
    colorings_explored: u64,
}

#[derive(Serialize)]
struct EdgeColorReport {
    command: &'static str,
    max_degree: usize,
    bipartite: bool,
    color_count: usize,
    classes: Vec<Vec<(usize, usize)>>,
}

#[derive(Serialize)]
struct TwoFactorReport {
    command: &'static str,
    k: usize,
    factors: Vec<Vec<(usize, usize)>>,
}

#[derive(Serialize)]
struct SearchReport {
    command: &'static str,
    forests: Vec<Vec<usize>>,
    status: SearchStatus,
    value: Option<usize>,
    minimal_graphs: Vec<crate::graph::CanonicalCode>,
    undecided: Vec<crate::graph::CanonicalCode>,
    graphs_checked: usize,
    max_edges: usize,
    conjectured: usize,
    covered_by: InstanceClass,
    provenance: &'static str,
}

#[derive(Serialize)]
struct VerifyReport {
    command: &'static str,
    forests: Vec<Vec<usize>>,
    provenance: &'static str,
    #[serde(flatten)]
    report: crate::ramsey::CharacterizationReport,
}

fn execute(cmd: &Command, stdin: &mut dyn Read) -> Result<Output, Failure> {
    match cmd {
        Command::Formula { forests, all_matches } => {
            let fs = forests.list()?;
            let l = l_sequence(&fs);
            let class = classify_instance(&fs);
            let all = all_matches.then(|| classify_all(&fs));
            let mut text = format!(
                "l_sequence (from k = {}): {}\ntotal: {}\ncovered_by: {} ({})",
                l.first_index,
                join(&l.values),
                l.total,
                class,
                provenance(class)
            );
            if let Some(all) = &all {
                text.push_str(&format!("\nall_matches: {}", join(all)));
            }
            let report = FormulaReport {
                l_sequence: l.values.clone(),
                total: l.total,
                covered_by: class,
                provenance: provenance(class),
                command: "formula",
                forests: sizes(&fs),
                first_index: l.first_index,
                theorem_value: theorem_value(class, &fs),
                all_matches: all,
            };
            Ok(Output { code: EXIT_OK, json: json(&report), text })
        }
        Command::Witness { forests } => {
            let fs = forests.list()?;
            let g = witness_graph(&fs);
            let l = l_sequence(&fs);
            let class = classify_instance(&fs);
            let report = WitnessReport {
                command: "witness",
                forests: sizes(&fs),
                graph6: graph6_encode(&g),
                edge_count: g.edge_count(),
                stars: l.values.clone(),
                covered_by: class,
                provenance: provenance(class),
            };
            let text = format!(
                "witness: {}\nstars: {}\nedges: {}\ngraph6: {}",
                l.values.iter().map(|k| format!("K_{{1,{k}}}")).collect::<Vec<_>>().join(" + "),
                join(&l.values),
                report.edge_count,
                report.graph6
            );
            Ok(Output { code: EXIT_OK, json: json(&report), text })
        }
        Command::Arrows { graph, forests, search } => {
            let g = read_graph(&graph.graph, stdin)?;
            let fs = forests.list()?;
            let v = arrows(&g, &fs, &search.options())?;
            let code = match v.verdict {
                Verdict::Arrows => EXIT_OK,
                Verdict::DoesNotArrow => EXIT_NEGATIVE,
                Verdict::Undecided => EXIT_UNDECIDED,
            };
            let mut text = format!(
                "verdict: {}\nforests: {}\nnodes: {}\nelapsed: {:?}",
                json(&v.verdict).trim_matches('"'),
                forests_text(&fs),
                v.colorings_explored,
                v.elapsed
            );
            if let Some(c) = &v.counterexample {
                for color in 0..c.q() {
                    let edges: Vec<String> = c.class(color).iter().map(|(a, b)| format!("{a}-{b}")).collect();
                    text.push_str(&format!("\ncolor {color}: {}", edges.join(" ")));
                }
            }
            if let Some(r) = v.reason {
                text.push_str(&format!("\nreason: {}", json(&r).trim_matches('"')));
            }
            let report = ArrowsReport {
                command: "arrows",
                forests: sizes(&fs),
                graph6: graph6_encode(&g),
                verdict: v.verdict,
                arrows: v.arrows(),
                counterexample: v.counterexample,
                reason: v.reason,
                colorings_explored: v.colorings_explored,
            };
            Ok(Output { code, json: json(&report), text })
        }
        Command::FreeColor { graph, n, m } => {
            let g = read_graph(&graph.graph, stdin)?;
            if *n == 0 || *m == 0 {
                return Err(Failure("--n and --m must be positive".into()));
            }
            let c = lemma_free_coloring(&g, *n, *m)?;
            let branch = match lemma_branch(&g, *n, *m) {
                Some(LemmaBranch::VizingPartition) => "vizing-partition",
                Some(LemmaBranch::RegularEmbedding) => "regular-embedding",
                None => unreachable!("coloring exists only when a branch applies"),
            };
            let mut text = format!("branch: {branch}");
            for color in 0..2 {
                let edges: Vec<String> = c.class(color).iter().map(|(a, b)| format!("{a}-{b}")).collect();
                text.push_str(&format!("\ncolor {color}: {}", edges.join(" ")));
            }
            Ok(Output { code: EXIT_OK, json: json(&c), text })
        }
        Command::EdgeColor { graph } => {
            let g = read_graph(&graph.graph, stdin)?;
            let c = proper_edge_coloring(&g);
            let report = EdgeColorReport {
                command: "edge-color",
                max_degree: g.max_degree(),
                bipartite: g.is_bipartite(),
                color_count: c.color_count(),
                classes: c.classes(),
            };
            let mut text = format!(
                "max_degree: {}\nbipartite: {}\ncolors: {}",
                report.max_degree, report.bipartite, report.color_count
            );
            for (i, class) in report.classes.iter().enumerate() {
                let edges: Vec<String> = class.iter().map(|(a, b)| format!("{a}-{b}")).collect();
                text.push_str(&format!("\ncolor {i}: {}", edges.join(" ")));
            }
            Ok(Output { code: EXIT_OK, json: json(&report), text })
        }
        Command::TwoFactor { graph } => {
            let g = read_graph(&graph.graph, stdin)?;
            let tf = two_factorize(&g)?;
            let report = TwoFactorReport {
                command: "two-factor",
                k: tf.factors.len(),
                factors: tf.factors,
            };
            let mut text = format!("factors: {}", report.k);
            for (i, f) in report.factors.iter().enumerate() {
                let edges: Vec<String> = f.iter().map(|(a, b)| format!("{a}-{b}")).collect();
                text.push_str(&format!("\nfactor {i}: {}", edges.join(" ")));
            }
            Ok(Output { code: EXIT_OK, json: json(&report), text })
        }
        Command::Search { forests, max_edges, enum_budget, search } => {
            let fs = forests.list()?;
            let r = size_ramsey_exhaustive(&fs, *max_edges, *enum_budget, &search.options())?;
            let class = classify_instance(&fs);
            let code = match r.status {
                SearchStatus::Complete => EXIT_OK,
                SearchStatus::NotFound => EXIT_NEGATIVE,
                SearchStatus::Partial => EXIT_UNDECIDED,
            };
            let text = format!(
                "status: {}\nvalue: {}\nminimal_graphs: {}\nundecided: {}\ngraphs_checked: {}\nconjectured: {} ({}, {})",
                json(&r.status).trim_matches('"'),
                r.value.map_or("none".to_string(), |v| v.to_string()),
                join(&r.minimal_graphs),
                join(&r.undecided),
                r.graphs_checked,
                l_sequence(&fs).total,
                class,
                provenance(class)
            );
            let report = SearchReport {
                command: "search",
                forests: sizes(&fs),
                status: r.status,
                value: r.value,
                minimal_graphs: r.minimal_graphs,
                undecided: r.undecided,
                graphs_checked: r.graphs_checked,
                max_edges: *max_edges,
                conjectured: l_sequence(&fs).total,
                covered_by: class,
                provenance: provenance(class),
            };
            Ok(Output { code, json: json(&report), text })
        }
        Command::Verify { forests, max_edges, enum_budget, search } => {
            let fs = forests.list()?;
            let r = verify_characterization(&fs, *max_edges, *enum_budget, &search.options())?;
            let code = match r.status {
                CharacterizationStatus::Equal => EXIT_OK,
                CharacterizationStatus::Different => EXIT_NEGATIVE,
                CharacterizationStatus::Partial => EXIT_UNDECIDED,
            };
            let text = format!(
                "status: {}\nclass: {}\npredicted_value: {}\nfound_value: {}\npredicted: {}\nfound: {}\nmissing: {}\nunexpected: {}",
                json(&r.status).trim_matches('"'),
                r.class,
                r.predicted_value,
                r.found_value.map_or("none".to_string(), |v| v.to_string()),
                join(&r.predicted),
                join(&r.found),
                join(&r.missing),
                join(&r.unexpected)
            );
            let report = VerifyReport {
                command: "verify",
                forests: sizes(&fs),
                provenance: provenance(r.class),
                report: r,
            };
            Ok(Output { code, json: json(&report), text })
        }
    }
}
