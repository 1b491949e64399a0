//! Command-line surface: closed-form values, certified constructions,
//! verification, exact search, value tables and the consistency harness.
//!
//! Exit codes: 0 success (including "no 3TDS exists" answers), 1 domain
//! failures (failed verification, failed consistency check, aborted
//! search), 2 I/O or parse errors. Timings go to stderr so stdout stays
//! byte-deterministic.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use rooktds::{
    build_table, components, construct_min_3tds, gamma_3t, parse_matrix_text, render_matrix,
    run_consistency_check, solve_min_ktds, BitMatrix, GammaResult, RenderFormat, SolveStatus,
    SolverConfig,
};

#[derive(Parser)]
#[command(
    name = "rooktds",
    version,
    about = "3-tuple total domination on rook's graphs: formulas, certified constructions, exact search"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Grid,
    Pbm,
    Json,
}

impl From<FormatArg> for RenderFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Grid => RenderFormat::Grid,
            FormatArg::Pbm => RenderFormat::Pbm,
            FormatArg::Json => RenderFormat::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the minimum 3TDS size of the n x m board and its formula regime
    Gamma { n: usize, m: usize },
    /// Build a certified minimum 3TDS matrix
    Construct {
        n: usize,
        m: usize,
        #[arg(long, value_enum, default_value_t = FormatArg::Grid)]
        format: FormatArg,
        /// Write to a file instead of stdout
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a grid-format matrix file against the k-neighbor bound
    Verify {
        file: PathBuf,
        #[arg(long, default_value_t = 3)]
        k: usize,
    },
    /// Exact minimum by branch-and-bound (independent of the formulas)
    Solve {
        n: usize,
        m: usize,
        #[arg(long, default_value_t = 3)]
        k: usize,
        /// Abort after this many seconds, reporting the best incumbent
        #[arg(long)]
        time_budget: Option<f64>,
        /// Abort after this many search nodes
        #[arg(long)]
        node_budget: Option<u64>,
        /// Seed the search with the constructed minimum (k = 3 only)
        #[arg(long)]
        seed_upper_bound: bool,
    },
    /// Emit closed-form values for all boards with n <= max-n, n <= m <= max-m
    Table {
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        max_m: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Json)]
        format: TableFormat,
    },
    /// Cross-check formulas, constructor and solver; nonzero exit on failure
    Check {
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        max_m: usize,
        /// Run the exact solver on boards with at most this many cells
        #[arg(long, default_value_t = 30)]
        oracle_limit: usize,
    },
}

fn main() -> ExitCode {
    // Die quietly on a closed pipe (e.g. `table | head`) like other
    // line-oriented tools, instead of panicking mid-print.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Gamma { n, m } => cmd_gamma(n, m),
        Cmd::Construct { n, m, format, output } => cmd_construct(n, m, format.into(), output),
        Cmd::Verify { file, k } => cmd_verify(&file, k),
        Cmd::Solve { n, m, k, time_budget, node_budget, seed_upper_bound } => {
            cmd_solve(n, m, k, time_budget, node_budget, seed_upper_bound)
        }
        Cmd::Table { max_n, max_m, format } => cmd_table(max_n, max_m, format),
        Cmd::Check { max_n, max_m, oracle_limit } => cmd_check(max_n, max_m, oracle_limit),
    }
}

fn check_dims(n: usize, m: usize) -> Result<(), ExitCode> {
    if n == 0 || m == 0 {
        eprintln!("error: board dimensions must be positive");
        return Err(ExitCode::from(2));
    }
    Ok(())
}

fn cmd_gamma(n: usize, m: usize) -> ExitCode {
    if let Err(code) = check_dims(n, m) {
        return code;
    }
    match gamma_3t(n, m) {
        GammaResult::NoSolution => println!("gamma({n},{m}): no 3TDS exists"),
        GammaResult::Feasible { value, regime } => {
            println!("gamma({n},{m}) = {value} [{}]", regime.name())
        }
    }
    ExitCode::SUCCESS
}

fn cmd_construct(n: usize, m: usize, format: RenderFormat, output: Option<PathBuf>) -> ExitCode {
    if let Err(code) = check_dims(n, m) {
        return code;
    }
    let Some(w) = construct_min_3tds(n, m) else {
        println!("no 3TDS exists");
        return ExitCode::SUCCESS;
    };
    let text = render_matrix(&w, format);
    match output {
        None => print!("{text}"),
        Some(path) => {
            if let Err(e) = std::fs::write(&path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
    }
    ExitCode::SUCCESS
}

fn cmd_verify(file: &PathBuf, k: usize) -> ExitCode {
    if k == 0 {
        eprintln!("error: k must be positive");
        return ExitCode::from(2);
    }
    let text = match std::fs::read_to_string(file) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", file.display());
            return ExitCode::from(2);
        }
    };
    let mat = match parse_matrix_text(&text) {
        Ok(m) => m,
        Err(e) => {
            eprintln!("error: {}: {e}", file.display());
            return ExitCode::from(2);
        }
    };
    let ok = mat.is_ktds(k);
    println!("ones: {}", mat.ones_count());
    println!("is_ktds(k={k}): {ok}");
    let comps = components(&mat);
    println!("components: {}", comps.len());
    for c in comps {
        println!("- rows {} cols {}: {} ones", join(&c.row_indices), join(&c.col_indices), c.ones);
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn cmd_solve(
    n: usize,
    m: usize,
    k: usize,
    time_budget: Option<f64>,
    node_budget: Option<u64>,
    seed_upper_bound: bool,
) -> ExitCode {
    if let Err(code) = check_dims(n, m) {
        return code;
    }
    if k == 0 {
        eprintln!("error: k must be positive");
        return ExitCode::from(2);
    }
    let mut cfg = SolverConfig {
        node_budget,
        time_budget: time_budget.map(Duration::from_secs_f64),
        ..Default::default()
    };
    if seed_upper_bound {
        if k == 3 {
            cfg.initial_upper_bound = construct_min_3tds(n, m).map(|w| w.ones_count());
        } else {
            eprintln!("note: --seed-upper-bound only applies to k = 3; ignored");
        }
    }
    let report = solve_min_ktds(n, m, k, &cfg);
    eprintln!("elapsed: {:?}", report.elapsed);
    match report.status {
        SolveStatus::NoSolution => {
            println!("status: no_solution");
            println!("no {k}TDS exists");
            ExitCode::SUCCESS
        }
        SolveStatus::Optimal => {
            println!("status: optimal");
            println!("value: {}", report.value.expect("optimal has a value"));
            println!("nodes: {}", report.nodes_explored);
            println!("witness:");
            print_witness(report.witness.as_ref().expect("optimal has a witness"));
            ExitCode::SUCCESS
        }
        SolveStatus::Aborted => {
            println!("status: aborted");
            println!("nodes: {}", report.nodes_explored);
            match (report.value, report.witness.as_ref()) {
                (Some(v), Some(w)) => {
                    println!("best: {v}");
                    println!("incumbent:");
                    print_witness(w);
                }
                _ => println!("best: none"),
            }
            ExitCode::from(1)
        }
    }
}

fn print_witness(w: &BitMatrix) {
    print!("{}", render_matrix(w, RenderFormat::Grid));
}

fn cmd_table(max_n: usize, max_m: usize, format: TableFormat) -> ExitCode {
    if let Err(code) = check_dims(max_n, max_m) {
        return code;
    }
    let rows = build_table(max_n, max_m, 30);
    match format {
        TableFormat::Json => {
            println!("{}", serde_json::to_string_pretty(&rows).expect("table json cannot fail"));
        }
        TableFormat::Csv => {
            println!("n,m,gamma,regime,construct_ones,oracle_value");
            for r in rows {
                println!(
                    "{},{},{},{},{},{}",
                    r.n,
                    r.m,
                    opt(r.gamma),
                    r.regime,
                    opt(r.construct_ones),
                    opt(r.oracle_value)
                );
            }
        }
    }
    ExitCode::SUCCESS
}

fn opt(v: Option<usize>) -> String {
    v.map_or(String::new(), |x| x.to_string())
}

fn cmd_check(max_n: usize, max_m: usize, oracle_limit: usize) -> ExitCode {
    if let Err(code) = check_dims(max_n, max_m) {
        return code;
    }
    if max_n > max_m {
        eprintln!("error: needs max-n <= max-m");
        return ExitCode::from(2);
    }
    let report = run_consistency_check(max_n, max_m, oracle_limit);
    for p in &report.properties {
        match &p.counterexample {
            None => println!("PASS {}", p.name),
            Some(ce) => println!("FAIL {}: {}", p.name, ce),
        }
    }
    let failed = report.properties.iter().filter(|p| !p.pass).count();
    if failed == 0 {
        println!("all {} properties passed", report.properties.len());
        ExitCode::SUCCESS
    } else {
        println!("{failed} of {} properties failed", report.properties.len());
        ExitCode::from(1)
    }
}
