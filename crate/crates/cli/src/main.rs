use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use fibindex::bounds::GraphClass;
use fibindex::canon::graph_from_code;
use fibindex::counting::{fibonacci_index_with_stats, NAIVE_LIMIT};
use fibindex::search::{
    self, build_extremal_report_with, connected_exceptions, report_file_name, verify_theorems_with, ScanOptions,
    ENUMERATION_LIMIT, VERIFY_LIMIT,
};
use fibindex::{
    counterexample_size_vs_fib, fibonacci_index, fibonacci_index_naive, generate, random_graph, Analysis, Error,
    FamilySpec, Graph,
};
use serde::Serialize;

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// Exact stable-set counts, bounds and extremal search for small graphs.
#[derive(Parser)]
#[command(name = "fibindex", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count stable sets of one graph and check it against the bounds.
    Compute {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        json: bool,
    },
    /// Exhaustively check the extremal characterizations at one order.
    Verify {
        #[arg(long)]
        n: usize,
        /// Permit n = 8 (a long run).
        #[arg(long)]
        allow_n8: bool,
        #[arg(long)]
        threads: Option<usize>,
        /// Directory for the report files.
        #[arg(long, default_value = ".")]
        out: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Build the extremal report of one class and order.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "general")]
        class: GraphClass,
        #[arg(long)]
        allow_n8: bool,
        #[arg(long)]
        threads: Option<usize>,
        /// Write `report-<class>-n<order>.json` here instead of printing it.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare the branching counter with subset enumeration.
    OracleCheck {
        /// Check every labeled graph of this order.
        #[arg(long, default_value_t = 5)]
        exhaustive: usize,
        /// Number of seeded random graphs.
        #[arg(long, default_value_t = 500)]
        count: usize,
        #[arg(long, default_value_t = 18)]
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Graph pairs where more edges come with more stable sets.
    Counterexample {
        #[arg(long)]
        json: bool,
    },
    /// Time the counter on seeded random graphs.
    Bench {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        reps: usize,
        /// Also count by subset enumeration (n <= 25).
        #[arg(long)]
        check_naive: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// Generator spec such as `turan:n=7,alpha=3`.
    #[arg(long = "gen")]
    generator: Option<String>,
    /// Edge-list file.
    #[arg(long)]
    file: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Compute { input, json } => compute(&input, json),
        Command::Verify {
            n,
            allow_n8,
            threads,
            out,
            json,
        } => verify(n, allow_n8, threads, &out, json),
        Command::Search {
            n,
            class,
            allow_n8,
            threads,
            out,
        } => search_report(n, class, allow_n8, threads, out.as_deref()),
        Command::OracleCheck {
            exhaustive,
            count,
            max_n,
            seed,
        } => oracle_check(exhaustive, count, max_n, seed),
        Command::Counterexample { json } => counterexample(json),
        Command::Bench {
            n,
            density,
            seed,
            reps,
            check_naive,
            json,
        } => bench(n, density, seed, reps, check_naive, json),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(EXIT_FAILURE)
        }
    }
}

fn load_graph(input: &GraphInput) -> Result<Graph, Failure> {
    match (&input.generator, &input.file) {
        (Some(spec), None) => Ok(generate(&spec.parse::<FamilySpec>()?)?),
        (None, Some(path)) => {
            let text =
                fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
            Graph::parse_edge_list(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
        }
        _ => Err(Failure::Usage("give exactly one of --gen or --file".into())),
    }
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn compute(input: &GraphInput, json: bool) -> Outcome {
    let g = load_graph(input)?;
    let a = Analysis::of(&g)?;
    if json {
        print_json(&a);
        return Ok(());
    }
    println!("n = {}", a.n);
    println!("m = {}", a.m);
    println!("alpha = {}", a.alpha);
    println!("F = {}", a.fib);
    println!("alpha-critical = {}", a.alpha_critical);
    println!("connected = {}", a.connected);
    println!("tree = {}", a.tree);
    if let Some(form) = a.canonical_form {
        println!("canonical = {form}");
    }
    for b in &a.bounds {
        println!(
            "bounds[{}]: {} <= F = {} <= {}  lower_tight = {}  upper_tight = {}",
            b.graph_class, b.lower, b.fib, b.upper, b.lower_tight, b.upper_tight
        );
    }
    Ok(())
}

fn order_limit(allow_n8: bool) -> usize {
    if allow_n8 {
        ENUMERATION_LIMIT
    } else {
        VERIFY_LIMIT
    }
}

fn write_file(path: &Path, contents: &str) -> Outcome {
    fs::write(path, contents).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))
}

fn verify(n: usize, allow_n8: bool, threads: Option<usize>, out: &Path, json: bool) -> Outcome {
    let v = verify_theorems_with(n, &ScanOptions { threads }, order_limit(allow_n8))?;
    fs::create_dir_all(out).map_err(|e| Failure::Usage(format!("cannot create {}: {e}", out.display())))?;
    for class in [GraphClass::General, GraphClass::Connected] {
        let file = v.report_file(class);
        write_file(&out.join(file.file_name()), &file.to_json())?;
    }
    if json {
        print_json(&v.verdicts);
    } else {
        println!(
            "n = {n}: {} graphs, {} connected",
            v.general.enumeration_total, v.connected.enumeration_total
        );
        for verdict in &v.verdicts {
            let status = if verdict.pass { "PASS" } else { "FAIL" };
            print!("{status} {}", verdict.theorem);
            if verdict.theorem == search::Theorem::ConnectedUpper {
                for (en, ea) in connected_exceptions().filter(|&(en, _)| en == n) {
                    print!("  (alpha = {ea}: maximizers TC({en},{ea}) and C_{en})");
                }
            }
            println!();
            for d in &verdict.discrepancies {
                let list = |forms: &[fibindex::CanonicalForm]| {
                    forms.iter().map(|f| f.to_string()).collect::<Vec<_>>().join(", ")
                };
                println!(
                    "  {} alpha = {}: expected [{}], observed [{}]",
                    d.graph_class,
                    d.alpha,
                    list(&d.expected),
                    list(&d.observed)
                );
            }
        }
    }
    if v.all_pass() {
        Ok(())
    } else {
        Err(Failure::Verification(format!("a characterization failed at n = {n}")))
    }
}

fn search_report(n: usize, class: GraphClass, allow_n8: bool, threads: Option<usize>, out: Option<&Path>) -> Outcome {
    if n > order_limit(allow_n8) {
        return Err(Error::Capability {
            what: "exhaustive graph enumeration",
            limit: order_limit(allow_n8),
            n,
        }
        .into());
    }
    let report = build_extremal_report_with(n, class, &ScanOptions { threads })?;
    let mut text = serde_json::to_string_pretty(&report).expect("serializable");
    text.push('\n');
    match out {
        Some(dir) => {
            fs::create_dir_all(dir).map_err(|e| Failure::Usage(format!("cannot create {}: {e}", dir.display())))?;
            let path = dir.join(report_file_name(class, n));
            write_file(&path, &text)?;
            println!("wrote {}", path.display());
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn oracle_check(exhaustive: usize, count: usize, max_n: usize, seed: u64) -> Outcome {
    if exhaustive > 7 || max_n > NAIVE_LIMIT {
        return Err(Failure::Usage(format!(
            "oracle-check supports --exhaustive <= 7 and --max-n <= {NAIVE_LIMIT}"
        )));
    }
    let mut mismatches = 0usize;
    let pairs = exhaustive * exhaustive.saturating_sub(1) / 2;
    for code in 0..1u64 << pairs {
        let g = graph_from_code(exhaustive, code)?;
        if fibonacci_index(&g) != fibonacci_index_naive(&g)? {
            mismatches += 1;
            eprintln!("mismatch on labeled graph {code} of order {exhaustive}");
        }
    }
    for i in 0..count {
        let (n, p, s) = random_case(i, max_n, seed);
        let g = random_graph(n, p, s)?;
        if fibonacci_index(&g) != fibonacci_index_naive(&g)? {
            mismatches += 1;
            eprintln!("mismatch on random graph n = {n}, p = {p}, seed = {s}");
        }
    }
    println!(
        "checked {} labeled graphs of order {exhaustive} and {count} random graphs with n <= {max_n}: {mismatches} mismatches",
        1u64 << pairs
    );
    if mismatches == 0 {
        Ok(())
    } else {
        Err(Failure::Verification(format!("{mismatches} mismatches")))
    }
}

/// Order, density and seed of the `i`-th random oracle case.
fn random_case(i: usize, max_n: usize, seed: u64) -> (usize, f64, u64) {
    let n = i % (max_n + 1);
    let p = ((i / (max_n + 1)) % 9 + 1) as f64 / 10.0;
    (n, p, seed.wrapping_add(i as u64))
}

fn counterexample(json: bool) -> Outcome {
    let r = counterexample_size_vs_fib();
    if json {
        print_json(&r);
    } else {
        let line = |name: &str, s: &search::GraphSummary| {
            println!("{name}: n = {}, m = {}, alpha = {}, F = {}", s.n, s.m, s.alpha, s.fib)
        };
        line("P3+P3 ", &r.sparse);
        line("spider", &r.dense);
        println!("fewer edges and fewer stable sets: {}", r.holds);
        for s in &r.scaled {
            println!(
                "{} copies: m {} < {}, F {} < {}: {}",
                s.copies, s.sparse.m, s.dense.m, s.sparse.fib, s.dense.fib, s.holds
            );
        }
        for row in &r.turan_vs_star {
            println!(
                "r = {:2}: F(T({},{})) = {} < F(S_{}) = {} (m {} < {}): {}",
                row.r,
                2 * row.r,
                row.r,
                row.turan_fib,
                2 * row.r,
                row.star_fib,
                row.turan_edges,
                row.star_edges,
                row.holds && row.closed_forms_match
            );
        }
    }
    if r.all_hold() {
        Ok(())
    } else {
        Err(Failure::Verification("a counterexample did not reproduce".into()))
    }
}

#[derive(Serialize)]
struct BenchRow {
    rep: usize,
    seed: u64,
    n: usize,
    m: usize,
    fib: fibindex::BigCount,
    branch_nodes: u64,
    memo_hits: u64,
    seconds: f64,
    naive_agrees: Option<bool>,
}

fn bench(n: usize, density: f64, seed: u64, reps: usize, check_naive: bool, json: bool) -> Outcome {
    if check_naive && n > NAIVE_LIMIT {
        return Err(Failure::Usage(format!("--check-naive needs n <= {NAIVE_LIMIT}")));
    }
    let mut rows = Vec::new();
    for rep in 0..reps {
        let s = seed.wrapping_add(rep as u64);
        let g = random_graph(n, density, s)?;
        let (fib, stats) = fibonacci_index_with_stats(&g);
        let naive_agrees = if check_naive {
            Some(fibonacci_index_naive(&g)? == fib)
        } else {
            None
        };
        rows.push(BenchRow {
            rep,
            seed: s,
            n,
            m: g.size(),
            fib,
            branch_nodes: stats.branch_nodes,
            memo_hits: stats.memo_hits,
            seconds: stats.elapsed.as_secs_f64(),
            naive_agrees,
        });
    }
    if json {
        print_json(&rows);
    } else {
        println!("rep  seed  n  m  F  branch_nodes  memo_hits  seconds  naive");
        for r in &rows {
            let naive = match r.naive_agrees {
                Some(true) => "ok",
                Some(false) => "MISMATCH",
                None => "-",
            };
            println!(
                "{}  {}  {}  {}  {}  {}  {}  {:.6}  {}",
                r.rep, r.seed, r.n, r.m, r.fib, r.branch_nodes, r.memo_hits, r.seconds, naive
            );
        }
    }
    if rows.iter().any(|r| r.naive_agrees == Some(false)) {
        Err(Failure::Verification(
            "branching count disagrees with enumeration".into(),
        ))
    } else {
        Ok(())
    }
}
