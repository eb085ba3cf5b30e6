use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use bei::checks::{check_graph, CheckId, TheoremCheck};
use bei::io;
use bei::limits::{joint_limit_table, ratios_strictly_decreasing};
use bei::sweep::{sweep, Filter, SweepMode};
use bei_core::algebra::{hilbert_h_polynomial, Field};
use bei_core::chordal::{is_chordal, Chordality};
use bei_core::cliques::{free_vertices, maximal_cliques};
use bei_core::interval::{interval_representation, is_strongly_interval};
use bei_core::path::longest_induced_path;
use bei_core::primes::{krull_dimension, minimal_primes};
use bei_core::Graph;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "bei",
    version,
    about = "Exact invariants and regularity checks for binomial edge ideals"
)]
struct Cli {
    /// Print JSON instead of a table.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cliques, longest induced paths, minimal primes and Krull dimension.
    Invariants { file: PathBuf },
    /// Betti table and regularity of S/J_G.
    Regularity {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "f2")]
        field: FieldArg,
    },
    /// Chordality and strongly interval recognition with an interval model.
    Recognize { file: PathBuf },
    /// h-polynomial and Krull dimension of S/J_G.
    Hilbert { file: PathBuf },
    /// Run theorem checks on one graph.
    Verify {
        file: PathBuf,
        /// Comma-separated check ids (default: all).
        #[arg(long, value_delimiter = ',')]
        checks: Vec<CheckId>,
    },
    /// Run checks over a family of graphs.
    Sweep {
        #[arg(long, value_enum)]
        mode: ModeArg,
        /// Vertex count (exhaustive, random) or the maximum (caterpillars).
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value = "connected-chordal")]
        filter: FilterArg,
        #[arg(long, value_delimiter = ',')]
        checks: Vec<CheckId>,
    },
    /// Ratio table for the joins P_m * K_t.
    Limits {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        tmax: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FieldArg {
    F2,
    Q,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Random,
    Caterpillars,
}

#[derive(Clone, Copy, ValueEnum)]
enum FilterArg {
    ConnectedChordal,
    Connected,
    Trees,
}

fn read_graph(path: &PathBuf) -> bei::Result<Graph> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(path)?
    };
    io::parse_graph(&text)
}

fn labels(g: &Graph, vs: impl IntoIterator<Item = usize>) -> String {
    vs.into_iter()
        .map(|v| g.label(v))
        .collect::<Vec<_>>()
        .join(" ")
}

fn print_json(value: &serde_json::Value) {
    println!("{}", serde_json::to_string(value).expect("json"));
}

fn print_checks(checks: &[TheoremCheck]) {
    for c in checks {
        let values: Vec<String> = c.values.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let note = c
            .note
            .as_deref()
            .map(|n| format!("  ({n})"))
            .unwrap_or_default();
        println!(
            "{:<18} {:<9} {}{}",
            c.id.as_str(),
            c.verdict.to_string(),
            values.join(" "),
            note
        );
    }
}

fn selected(checks: Vec<CheckId>) -> Vec<CheckId> {
    if checks.is_empty() {
        CheckId::ALL.to_vec()
    } else {
        checks
    }
}

fn run(cli: Cli) -> bei::Result<bool> {
    match cli.command {
        Command::Invariants { file } => {
            let g = read_graph(&file)?;
            let cliques = maximal_cliques(&g);
            let path = longest_induced_path(&g)?;
            let primes = minimal_primes(&g)?;
            let dim = krull_dimension(&g)?;
            let chordal = is_chordal(&g).is_chordal();
            let free = free_vertices(&g);
            if cli.json {
                print_json(&json!({
                    "n": g.n(),
                    "edges": g.edge_count(),
                    "chordal": chordal,
                    "c": cliques.count(),
                    "cliques": cliques.facets.iter().map(|f| f.iter().map(|v| v + 1).collect::<Vec<_>>()).collect::<Vec<_>>(),
                    "free": free.iter().map(|v| v + 1).collect::<Vec<_>>(),
                    "L": path.total(),
                    "paths": path.paths.iter().map(|p| p.iter().map(|v| v + 1).collect::<Vec<_>>()).collect::<Vec<_>>(),
                    "primes": io::primes_json(&primes),
                    "dim": dim,
                }));
            } else {
                println!("n {}  edges {}  chordal {}", g.n(), g.edge_count(), chordal);
                println!("c(G) = {}", cliques.count());
                for f in &cliques.facets {
                    println!("  clique {}", labels(&g, f.iter()));
                }
                println!("free vertices: {}", labels(&g, free.iter()));
                println!("L(G) = {}", path.total());
                for p in &path.paths {
                    println!("  path {}", labels(&g, p.iter().copied()));
                }
                println!("minimal primes: {}", primes.len());
                for p in &primes {
                    let comps: Vec<String> = p
                        .components
                        .iter()
                        .map(|c| format!("{{{}}}", labels(&g, c.iter())))
                        .collect();
                    println!(
                        "  T={{{}}}  components {}",
                        labels(&g, p.cut_set.iter()),
                        comps.join(" ")
                    );
                }
                println!("Krull dimension {dim}");
            }
            Ok(true)
        }
        Command::Regularity { file, field } => {
            let g = read_graph(&file)?;
            let field = match field {
                FieldArg::F2 => Field::F2,
                FieldArg::Q => Field::Rationals,
            };
            let table = bei::parallel::betti_table(&g, field)?;
            if cli.json {
                print_json(&io::betti_json(&table));
            } else {
                println!("{:>4} {:>4} {:>8}", "i", "j", "beta");
                for ((i, j), r) in table.entries() {
                    println!("{i:>4} {j:>4} {r:>8}");
                }
                println!("reg = {}", table.regularity());
            }
            Ok(true)
        }
        Command::Recognize { file } => {
            let g = read_graph(&file)?;
            let chordality = is_chordal(&g);
            let strongly = is_strongly_interval(&g)?;
            let rep = if g.is_connected() {
                interval_representation(&g)?
            } else {
                None
            };
            if cli.json {
                let cycle = match &chordality {
                    Chordality::NotChordal { cycle } => {
                        Some(cycle.iter().map(|v| v + 1).collect::<Vec<_>>())
                    }
                    Chordality::Chordal { .. } => None,
                };
                print_json(&json!({
                    "chordal": chordality.is_chordal(),
                    "chordless_cycle": cycle,
                    "strongly_interval": strongly,
                    "intervals": rep.as_ref().map(|r| io::write_representation(r, &g).lines().map(String::from).collect::<Vec<_>>()),
                }));
            } else {
                match &chordality {
                    Chordality::Chordal { .. } => println!("chordal: yes"),
                    Chordality::NotChordal { cycle } => println!(
                        "chordal: no, chordless cycle {}",
                        labels(&g, cycle.iter().copied())
                    ),
                }
                println!("strongly interval: {}", if strongly { "yes" } else { "no" });
                if let Some(rep) = rep {
                    print!("{}", io::write_representation(&rep, &g));
                }
            }
            Ok(true)
        }
        Command::Hilbert { file } => {
            let g = read_graph(&file)?;
            let h = hilbert_h_polynomial(&g)?;
            if cli.json {
                print_json(&io::h_json(&h));
            } else {
                let terms: Vec<String> = h
                    .coeffs
                    .iter()
                    .enumerate()
                    .map(|(i, c)| format!("{c}*t^{i}"))
                    .collect();
                println!("h(t) = {}", terms.join(" + "));
                println!("dim = {}  deg h = {}", h.dim, h.degree());
            }
            Ok(true)
        }
        Command::Verify { file, checks } => {
            let g = read_graph(&file)?;
            let results = check_graph(&g, &selected(checks));
            let ok = !results.iter().any(TheoremCheck::is_failure);
            if cli.json {
                print_json(&serde_json::to_value(&results).expect("json"));
            } else {
                print_checks(&results);
                println!(
                    "{}",
                    if ok {
                        "all required checks pass"
                    } else {
                        "REQUIRED CHECK FAILED"
                    }
                );
            }
            Ok(ok)
        }
        Command::Sweep {
            mode,
            n,
            count,
            seed,
            filter,
            checks,
        } => {
            let mode = match mode {
                ModeArg::Exhaustive => SweepMode::Exhaustive {
                    n,
                    filter: match filter {
                        FilterArg::ConnectedChordal => Filter::ConnectedChordal,
                        FilterArg::Connected => Filter::Connected,
                        FilterArg::Trees => Filter::Trees,
                    },
                },
                ModeArg::Random => SweepMode::Random { n, count, seed },
                ModeArg::Caterpillars => SweepMode::Caterpillars {
                    max_n: n,
                    count,
                    seed,
                },
            };
            let report = sweep(mode, &selected(checks))?;
            if cli.json {
                print_json(&serde_json::to_value(&report).expect("json"));
            } else {
                println!("{} graphs in {:.2?}", report.counts.graphs, report.elapsed);
                println!(
                    "{:<18} {:>6} {:>6} {:>6} {:>8} {:>6}",
                    "check", "pass", "fail", "n/a", "observed", "error"
                );
                for (id, [p, f, na, o, e]) in &report.by_check {
                    println!("{:<18} {p:>6} {f:>6} {na:>6} {o:>8} {e:>6}", id.as_str());
                }
                for c in report.failures() {
                    println!(
                        "FAIL {} on {}: {:?} {}",
                        c.id,
                        c.fingerprint,
                        c.values,
                        c.note.as_deref().unwrap_or("")
                    );
                }
            }
            Ok(report.success())
        }
        Command::Limits { m, tmax } => {
            let rows = joint_limit_table(m, tmax)?;
            let ok = ratios_strictly_decreasing(&rows);
            if cli.json {
                print_json(&json!({ "rows": rows, "strictly_decreasing": ok }));
            } else {
                println!(
                    "{:>4} {:>4} {:>6} {:>6} {:>10} {:>10}",
                    "t", "c", "deg h", "n-2", "c/deg h", "c/(n-2)"
                );
                for r in &rows {
                    println!(
                        "{:>4} {:>4} {:>6} {:>6} {:>10} {:>10}",
                        r.t,
                        r.c,
                        r.deg_h,
                        r.n_minus_2,
                        r.c_over_deg_h.to_string(),
                        r.c_over_n_minus_2.to_string()
                    );
                }
                println!("both ratios strictly decreasing: {ok}");
            }
            Ok(ok)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
