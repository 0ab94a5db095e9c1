//! `vcrit`: enumerate vertex-critical graphs in H-free classes, certify
//! colourability, and run the structural checks from the command line.

use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use vcrit::certify::{certify_colourable, verify_certificate, Certificate, CriticalList, Provenance};
use vcrit::claims;
use vcrit::coloring::chromatic_with_witness;
use vcrit::criticality::classify;
use vcrit::enumerate::{enumerate_critical, EnumerationConfig};
use vcrit::graph6::parse_graph6_lines;
use vcrit::iso::canonical_form;
use vcrit::patterns::{catalog_names, realize};
use vcrit::search::find_induced;
use vcrit::{emit_graph6, parse_graph6, Graph};

const SCHEMA: u32 = 1;

#[derive(Parser)]
#[command(name = "vcrit", version, about = "Vertex-critical graphs in H-free classes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate k-vertex-critical graphs avoiding the given patterns.
    Enumerate {
        #[arg(short)]
        k: usize,
        /// Forbidden pattern: a catalogue name, or graph6 (prefix `g6:` to force).
        #[arg(long = "forbid", num_args = 1.., value_delimiter = ',')]
        forbid: Vec<String>,
        #[arg(long)]
        max_order: usize,
        /// graph6 file of starting graphs instead of K1.
        #[arg(long)]
        seeds: Option<PathBuf>,
        #[arg(long)]
        threads: Option<usize>,
        /// Write the JSON report here instead of standard error.
        #[arg(long)]
        stats: Option<PathBuf>,
        /// Only branch on low-degree vertices, not comparable pairs.
        #[arg(long)]
        no_prune_comparable: bool,
    },
    /// Certify k-colourability of each input graph.
    Certify {
        #[arg(short)]
        k: usize,
        /// Comma-separated forbidden patterns defining the family.
        #[arg(long, value_delimiter = ',', required = true)]
        family: Vec<String>,
        /// graph6 file of the (k+1)-vertex-critical graphs of the family.
        #[arg(long)]
        list: Option<PathBuf>,
        #[arg(default_value = "-")]
        input: String,
    },
    /// Print the chromatic number of each input graph.
    Chromatic {
        /// Also print an optimal colouring.
        #[arg(long)]
        witness: bool,
        #[arg(default_value = "-")]
        input: String,
    },
    /// Classify each input graph as k-vertex-critical or not.
    CriticalCheck {
        #[arg(short)]
        k: usize,
        #[arg(default_value = "-")]
        input: String,
    },
    /// Find an induced copy of a pattern in each input graph.
    FindInduced {
        #[arg(long)]
        pattern: String,
        #[arg(default_value = "-")]
        input: String,
    },
    /// Canonical graph6 of each input graph, sorted by order then form.
    Canon {
        #[arg(default_value = "-")]
        input: String,
    },
    /// List catalogued pattern names, or print one pattern as graph6.
    Catalog { name: Option<String> },
    /// Run a structural check suite.
    Claims {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(short)]
        k: Option<usize>,
        #[arg(long)]
        max_order: Option<usize>,
        #[arg(long)]
        threads: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Sperner,
    Thm31,
    Thm41,
    Conjecture,
    Bull,
}

enum Failure {
    /// Bad flags or arguments.
    Usage(String),
    /// The input or the computation failed.
    Domain(String),
}

type Outcome = Result<bool, Failure>;

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

fn domain<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Domain(e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Domain(msg)) => {
            eprintln!("vcrit: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("vcrit: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Returns `Ok(false)` when every input was handled but some result is a
/// domain failure (for example a graph outside the family).
fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Enumerate {
            k,
            forbid,
            max_order,
            seeds,
            threads,
            stats,
            no_prune_comparable,
        } => {
            let forbidden = patterns(&forbid)?;
            let seeds = match seeds {
                Some(p) => Some(read_graphs(&p.to_string_lossy())?),
                None => None,
            };
            let cfg = EnumerationConfig {
                k,
                forbidden: forbidden.clone(),
                max_order,
                prune_comparable: !no_prune_comparable,
                seeds,
                threads,
            };
            cfg.validate().map_err(usage)?;
            let report = enumerate_critical(&cfg).map_err(domain)?;
            let mut out = stdout();
            for f in &report.forms {
                writeln!(out, "{}", f.as_str()).map_err(domain)?;
            }
            out.flush().map_err(domain)?;
            let json = json!({
                "schema": SCHEMA,
                "k": k,
                "max_order": max_order,
                "forbidden": forbidden.iter().map(g6).collect::<Vec<_>>(),
                "found": report.forms.iter().map(|f| f.as_str()).collect::<Vec<_>>(),
                "counts_by_order": report.counts_by_order,
                "complete": report.complete,
                "stats": report.stats,
            });
            emit_report(&json, stats.as_ref())?;
            Ok(true)
        }
        Command::Certify {
            k,
            family,
            list,
            input,
        } => {
            let forbidden = patterns(&family)?;
            let list = match list {
                Some(p) => {
                    let text = fs::read_to_string(&p).map_err(|e| domain(format!("{}: {e}", p.display())))?;
                    CriticalList::from_graph6(k, forbidden, &text, Provenance::Supplied).map_err(domain)?
                }
                None => CriticalList::known(k, forbidden).map_err(usage)?,
            };
            let graphs = read_graphs(&input)?;
            let results: Vec<(Value, bool)> = graphs
                .par_iter()
                .map(|g| certify_json(g, k, &list))
                .collect();
            let mut out = stdout();
            let mut ok = true;
            for (v, fine) in results {
                ok &= fine;
                writeln!(out, "{v}").map_err(domain)?;
            }
            out.flush().map_err(domain)?;
            Ok(ok)
        }
        Command::Chromatic { witness, input } => {
            let graphs = read_graphs(&input)?;
            let lines: Vec<String> = graphs
                .par_iter()
                .map(|g| {
                    let (chi, col) = chromatic_with_witness(g);
                    if witness {
                        let cols: Vec<String> = col.0.iter().map(usize::to_string).collect();
                        format!("{chi} {}", cols.join(" ")).trim_end().to_string()
                    } else {
                        chi.to_string()
                    }
                })
                .collect();
            write_lines(&lines)
        }
        Command::CriticalCheck { k, input } => {
            if k == 0 {
                return Err(usage("k must be at least 1"));
            }
            let graphs = read_graphs(&input)?;
            let lines: Vec<String> = graphs
                .par_iter()
                .map(|g| format!("{} {}", g6(g), classify(g, k).reason_code()))
                .collect();
            write_lines(&lines)
        }
        Command::FindInduced { pattern, input } => {
            let h = pattern_graph(&pattern)?;
            let graphs = read_graphs(&input)?;
            let lines: Vec<String> = graphs
                .par_iter()
                .map(|g| match find_induced(g, &h) {
                    Some(e) => e.0.iter().map(usize::to_string).collect::<Vec<_>>().join(" "),
                    None => "free".to_string(),
                })
                .collect();
            write_lines(&lines)
        }
        Command::Canon { input } => {
            let graphs = read_graphs(&input)?;
            let mut forms: Vec<_> = graphs
                .par_iter()
                .map(|g| canonical_form(g).map_err(domain))
                .collect::<Result<_, _>>()?;
            forms.sort();
            let lines: Vec<String> = forms.iter().map(|f| f.as_str().to_string()).collect();
            write_lines(&lines)
        }
        Command::Catalog { name } => {
            let lines = match name {
                Some(n) => vec![g6(&realize(&n).map_err(usage)?)],
                None => catalog_names()
                    .into_iter()
                    .map(|n| format!("{n}\t{}", g6(&realize(n).expect("catalogued"))))
                    .collect(),
            };
            write_lines(&lines)
        }
        Command::Claims {
            suite,
            k,
            max_order,
            threads,
        } => {
            if let Some(t) = threads {
                rayon::ThreadPoolBuilder::new()
                    .num_threads(t)
                    .build_global()
                    .map_err(domain)?;
            }
            let json = run_suite(suite, k, max_order)?;
            let pass = json["pass"].as_bool().unwrap_or(false);
            let mut out = stdout();
            writeln!(out, "{json}").map_err(domain)?;
            out.flush().map_err(domain)?;
            Ok(pass)
        }
    }
}

fn certify_json(g: &Graph, k: usize, list: &CriticalList) -> (Value, bool) {
    match certify_colourable(g, k, list) {
        Ok(cert) => {
            let verified = verify_certificate(g, k, &cert);
            let mut v = json!({
                "schema": SCHEMA,
                "graph": g6(g),
                "verdict": cert.verdict(),
                "verified": verified,
            });
            let in_family = !matches!(cert, Certificate::NotInFamily { .. });
            match cert {
                Certificate::Colourable(c) => v["colouring"] = json!(c.0),
                Certificate::NotColourable {
                    critical,
                    embedding,
                } => {
                    v["critical"] = json!(g6(&critical));
                    v["embedding"] = json!(embedding.0);
                }
                Certificate::NotInFamily { pattern, embedding } => {
                    v["pattern"] = json!(g6(&pattern));
                    v["embedding"] = json!(embedding.0);
                }
            }
            (v, verified && in_family)
        }
        Err(e) => (
            json!({ "schema": SCHEMA, "graph": g6(g), "error": e.to_string() }),
            false,
        ),
    }
}

fn run_suite(suite: Suite, k: Option<usize>, max_order: Option<usize>) -> Result<Value, Failure> {
    let need_k = || k.ok_or_else(|| usage("this suite needs -k"));
    let need_n = || max_order.ok_or_else(|| usage("this suite needs --max-order"));
    let v = match suite {
        Suite::Sperner => {
            // Every family over a ground set of size at most 4.
            let mut checked = 0u64;
            let mut pass = true;
            for n in 0..=4usize {
                let subsets = 1u64 << n;
                for sel in 0u64..(1u64 << subsets) {
                    let members: Vec<u64> = (0..subsets).filter(|s| sel >> s & 1 == 1).collect();
                    let f = claims::SetFamily::new(n, members).map_err(domain)?;
                    let a = claims::max_antichain(&f).map_err(domain)?;
                    pass &= a as u64 <= claims::sperner_bound(n).map_err(domain)?;
                    checked += 1;
                }
            }
            json!({ "suite": "sperner", "families_checked": checked, "pass": pass })
        }
        Suite::Thm31 | Suite::Thm41 => {
            let k = need_k()?;
            let n = need_n()?;
            let thm31 = matches!(suite, Suite::Thm31);
            let forbidden: Vec<Graph> = if thm31 {
                vec![realize("co-gem").unwrap(), realize("P5").unwrap(), realize("P3+P2").unwrap()]
            } else {
                vec![realize("co-gem").unwrap(), realize("paw+P1").unwrap()]
            };
            let report = enumerate_critical(&EnumerationConfig::new(k, forbidden, n)).map_err(usage)?;
            let mut failures = Vec::new();
            for (g, f) in report.found.iter().zip(&report.forms) {
                let ok = if thm31 {
                    claims::check_thm31_consequence(g, k, 1)
                } else {
                    claims::check_thm41_consequence(g)
                }
                .map_err(domain)?;
                if !ok {
                    failures.push(f.as_str().to_string());
                }
            }
            json!({
                "suite": if thm31 { "thm31" } else { "thm41" },
                "k": k,
                "max_order": n,
                "graphs_checked": report.found.len(),
                "counts_by_order": report.counts_by_order,
                "complete": report.complete,
                "failures": failures,
                "pass": failures.is_empty(),
            })
        }
        Suite::Conjecture => {
            let k = need_k()?;
            let n = need_n()?;
            let report = claims::conjecture_slice(k, n).map_err(usage)?;
            let found: Vec<&str> = report.forms.iter().map(|f| f.as_str()).collect();
            json!({
                "suite": "conjecture",
                "k": k,
                "max_order": n,
                "forbidden": claims::conjecture_family(k).iter().map(g6).collect::<Vec<_>>(),
                "found": found,
                "complete": report.complete,
                "outcome": if found.is_empty() { "supports" } else { "refutes" },
                "pass": found.is_empty(),
            })
        }
        Suite::Bull => {
            let k = need_k()?;
            let n = need_n()?;
            let same = claims::bull_equivalence(k, n).map_err(usage)?;
            json!({ "suite": "bull", "k": k, "max_order": n, "pass": same })
        }
    };
    let mut v = v;
    v["schema"] = json!(SCHEMA);
    Ok(v)
}

fn g6(g: &Graph) -> String {
    emit_graph6(g).expect("orders here fit graph6")
}

/// A catalogue name, or graph6 text (forced with a `g6:` prefix).
fn pattern_graph(s: &str) -> Result<Graph, Failure> {
    if let Some(word) = s.strip_prefix("g6:") {
        return parse_graph6(word).map_err(|e| usage(format!("pattern {s}: {e}")));
    }
    match realize(s) {
        Ok(g) => Ok(g),
        Err(name_err) => parse_graph6(s).map_err(|_| usage(format!("pattern {s}: {name_err}"))),
    }
}

fn patterns(names: &[String]) -> Result<Vec<Graph>, Failure> {
    names.iter().map(|s| pattern_graph(s)).collect()
}

fn read_text(input: &str) -> Result<String, Failure> {
    if input == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(domain)?;
        Ok(s)
    } else {
        fs::read_to_string(input).map_err(|e| domain(format!("{input}: {e}")))
    }
}

fn read_graphs(input: &str) -> Result<Vec<Graph>, Failure> {
    let text = read_text(input)?;
    parse_graph6_lines(&text).map_err(|(line, e)| domain(format!("{input}: line {line}: {e}")))
}

fn stdout() -> BufWriter<io::StdoutLock<'static>> {
    BufWriter::new(io::stdout().lock())
}

fn write_lines(lines: &[String]) -> Outcome {
    let mut out = stdout();
    for l in lines {
        writeln!(out, "{l}").map_err(domain)?;
    }
    out.flush().map_err(domain)?;
    Ok(true)
}

fn emit_report(json: &Value, path: Option<&PathBuf>) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(json).map_err(domain)?;
    match path {
        Some(p) => fs::write(p, text + "\n").map_err(|e| domain(format!("{}: {e}", p.display()))),
        None => {
            eprintln!("{text}");
            Ok(())
        }
    }
}
