use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use latchi::catalog::{catalog_json, demo_lattices, graph_class};
use latchi::graph::{ball_graph, torus_graph, FiniteGraph};
use latchi::iso::invariant_signature;
use latchi::pipeline::{
    certify_entry, check_demo, run_dpb, run_dtb, table4_report, table5_attempts, ChiCertificate,
    PipelineOptions,
};
use latchi::sat::{encode_k_coloring, write_dimacs, SatStatus, SolverConfig, DEFAULT_CONFLICT_BUDGET};
use latchi::voronoi::verify_catalog_vectors;
use latchi::{catalog, find_entry, strict_voronoi_vectors, CatalogEntry, Error};

/// Chromatic numbers of four-dimensional lattices, from strict Voronoi
/// vectors to SAT certificates.
#[derive(Parser, Debug)]
#[command(name = "latchi", version)]
struct Cli {
    /// Conflict budget per SAT instance.
    #[arg(long, global = true, default_value_t = DEFAULT_CONFLICT_BUDGET)]
    budget: u64,
    /// Solver seed; 0 keeps the natural variable order.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Disable symmetry breaking on torus instances.
    #[arg(long, global = true)]
    no_symmetry_breaking: bool,
    /// Worker threads for per-class jobs.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The 52 quaternary forms and their recorded strict Voronoi vectors.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Group the catalog into Voronoi graph isomorphism classes.
    Classify {
        #[arg(long)]
        json: bool,
    },
    /// Ball graph invariants of one entry.
    Invariants { symbol: String },
    /// Lower and upper bounds on the chromatic number.
    Chi {
        #[command(subcommand)]
        action: ChiAction,
    },
    /// Write the k-coloring CNF of a ball or torus graph in DIMACS format.
    EmitCnf {
        #[arg(long)]
        entry: String,
        #[command(flatten)]
        target: CnfTarget,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        out: PathBuf,
    },
    /// Export ball and torus graphs.
    Graph {
        #[command(subcommand)]
        action: GraphAction,
    },
    /// Smoke test on the two- and three-dimensional lattices.
    Demo {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    List {
        #[arg(long)]
        json: bool,
    },
    /// Recompute every strict Voronoi vector set and compare.
    Verify {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand, Debug)]
enum ChiAction {
    /// Is the unit ball graph k-colorable?
    Dpb {
        #[arg(long)]
        entry: String,
        #[arg(long)]
        k: u32,
    },
    /// Is the torus Z^4/cZ^4 c-colorable?
    Dtb {
        #[arg(long)]
        entry: String,
        #[arg(long)]
        c: u32,
    },
    /// Certificates for all classes, or for one entry.
    Full {
        #[arg(long)]
        entry: Option<String>,
        /// Directory for certificate JSON and DIMACS files.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct CnfTarget {
    /// Unit ball graph.
    #[arg(long)]
    ball: bool,
    /// Torus with this scale.
    #[arg(long, value_name = "C")]
    torus: Option<u32>,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct GraphTarget {
    /// Ball of this radius.
    #[arg(long, value_name = "D")]
    ball: Option<u32>,
    /// Torus with this scale.
    #[arg(long, value_name = "C")]
    torus: Option<u32>,
}

#[derive(Subcommand, Debug)]
enum GraphAction {
    /// Edge list ("p n m" then 1-based pairs), or JSON when `--out` ends in `.json`.
    Export {
        #[arg(long)]
        entry: String,
        #[command(flatten)]
        target: GraphTarget,
        #[arg(long)]
        out: PathBuf,
    },
}

/// Completed without error; `false` means a result disagreed with the
/// recorded values.
type Agreement = bool;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn options(cli: &Cli) -> PipelineOptions {
    PipelineOptions {
        solver: SolverConfig {
            conflict_budget: cli.budget,
            seed: cli.seed,
        },
        dpb_symmetry_breaking: false,
        dtb_symmetry_breaking: !cli.no_symmetry_breaking,
        threads: cli.threads,
    }
}

fn run(cli: &Cli) -> Result<Agreement, Error> {
    let opts = options(cli);
    match &cli.command {
        Command::Catalog { action } => match action {
            CatalogAction::List { json } => catalog_list(*json),
            CatalogAction::Verify { json } => catalog_verify(*json),
        },
        Command::Classify { json } => classify(*json),
        Command::Invariants { symbol } => invariants(symbol),
        Command::Chi { action } => match action {
            ChiAction::Dpb { entry, k } => chi_dpb(find_entry(entry)?, *k, &opts),
            ChiAction::Dtb { entry, c } => chi_dtb(find_entry(entry)?, *c, &opts),
            ChiAction::Full { entry, out } => chi_full(entry.as_deref(), out.as_deref(), &opts),
        },
        Command::EmitCnf { entry, target, k, out } => {
            let entry = find_entry(entry)?;
            let (g, breaking) = match target.torus {
                Some(c) => (torus(entry, c)?, !cli.no_symmetry_breaking),
                None => (ball(entry, 1)?, false),
            };
            let f = encode_k_coloring(&g, *k, breaking)?;
            std::fs::write(out, write_dimacs(&f))?;
            println!(
                "wrote {} ({} variables, {} clauses)",
                out.display(),
                f.var_count(),
                f.clause_count()
            );
            Ok(true)
        }
        Command::Graph { action } => match action {
            GraphAction::Export { entry, target, out } => {
                let entry = find_entry(entry)?;
                let g = match (target.ball, target.torus) {
                    (Some(d), _) => ball(entry, d)?,
                    (None, Some(c)) => torus(entry, c)?,
                    (None, None) => unreachable!("clap requires one target"),
                };
                let text = if out.extension().is_some_and(|e| e == "json") {
                    g.to_json()?
                } else {
                    g.to_edge_list()
                };
                std::fs::write(out, text)?;
                println!(
                    "wrote {} ({} vertices, {} edges)",
                    out.display(),
                    g.vertex_count(),
                    g.edge_count()
                );
                Ok(true)
            }
        },
        Command::Demo { json } => demo(*json, &opts),
    }
}

fn ball(entry: &CatalogEntry, d: u32) -> Result<FiniteGraph, Error> {
    ball_graph(&strict_voronoi_vectors(&entry.form())?, d)
}

fn torus(entry: &CatalogEntry, c: u32) -> Result<FiniteGraph, Error> {
    torus_graph(&strict_voronoi_vectors(&entry.form())?, c)
}

fn catalog_list(json: bool) -> Result<Agreement, Error> {
    if json {
        println!("{}", catalog_json()?);
        return Ok(true);
    }
    println!("{:<10} {:<5} {:>3} {:>5} {:>5} {:>3}  rays", "symbol", "kind", "dim", "pairs", "class", "chi");
    for e in catalog() {
        let rays: Vec<String> = e.rays.iter().map(|r| r.get().to_string()).collect();
        println!(
            "{:<10} {:<5} {:>3} {:>5} {:>5} {:>3}  {}",
            e.symbol,
            if e.zonotopal { "z" } else { "n" },
            e.secondary_cone_dim,
            e.expected_voronoi.len(),
            e.expected_class,
            e.expected_chi,
            rays.join(" ")
        );
    }
    Ok(true)
}

fn catalog_verify(json: bool) -> Result<Agreement, Error> {
    let report = verify_catalog_vectors(catalog())?;
    if json {
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        for r in &report.rows {
            let mark = if r.matched { "ok" } else { "MISMATCH" };
            println!("{:<10} {:>2} pairs  {mark}", r.symbol, r.computed_pairs);
            for v in &r.missing {
                println!("    missing {v:?}");
            }
            for v in &r.extra {
                println!("    extra   {v:?}");
            }
        }
        println!("{}/{} entries match", report.matches, report.rows.len());
    }
    Ok(report.mismatches == 0)
}

fn classify(json: bool) -> Result<Agreement, Error> {
    let report = table4_report()?;
    if json {
        println!("{}", serde_json::to_string_pretty(&report.classes)?);
    } else {
        println!("{:>2}  {:<11} {:>3} {:>4} {:>6} {:>3}  members", "id", "graph", "r", "|E|", "order", "#");
        for row in &report.rows {
            println!(
                "{:>2}  {:<11} {:>3} {:>4} {:>6} {:>3}  {}{}",
                row.class_id,
                row.graph_name,
                row.r,
                row.edges,
                row.aut_order,
                row.number,
                row.members.join(", "),
                if row.matched { "" } else { "  MISMATCH" }
            );
        }
        for class in &report.classes {
            for w in &class.witnesses {
                println!("witness {} -> {}: {:?}", w.from, w.to, w.map.matrix());
            }
        }
        println!(
            "{} classes, {}/{} rows match",
            report.rows.len(),
            report.rows.iter().filter(|r| r.matched).count(),
            report.rows.len()
        );
    }
    Ok(report.all_matched())
}

fn invariants(symbol: &str) -> Result<Agreement, Error> {
    let entry = find_entry(symbol)?;
    let s = strict_voronoi_vectors(&entry.form())?;
    let sig = invariant_signature(&s)?;
    println!("symbol  {}", entry.symbol);
    println!("pairs   {}", s.pair_count());
    println!("r       {}", sig.r);
    println!("|E|     {}", sig.e1);
    println!("order   {}", sig.aut);
    let class = graph_class(entry.expected_class).expect("catalog classes are valid");
    let agrees = class.r as usize == sig.r
        && class.edges as usize == sig.e1
        && u128::from(class.aut_order) == sig.aut;
    println!(
        "class   {} {}{}",
        class.id,
        class.graph_name,
        if agrees { "" } else { " (MISMATCH)" }
    );
    Ok(agrees)
}

fn chi_dpb(entry: &CatalogEntry, k: u32, opts: &PipelineOptions) -> Result<Agreement, Error> {
    let r = run_dpb(entry, k, opts)?;
    // every member of a class has the same ball graph, whose chromatic number
    // is that of the lattice
    let expected = if k < entry.expected_chi { SatStatus::Unsat } else { SatStatus::Sat };
    println!(
        "{} ball graph ({} vertices, {} edges), k = {}: {} ({} conflicts, {} ms)",
        r.symbol, r.graph.vertices, r.graph.edges, k, r.status, r.solver.conflicts, r.elapsed_ms
    );
    if r.status == SatStatus::Unsat {
        println!("chi >= {}", k + 1);
    }
    report_expectation(Some(expected), r.status)
}

fn chi_dtb(entry: &CatalogEntry, c: u32, opts: &PipelineOptions) -> Result<Agreement, Error> {
    let r = run_dtb(entry, c, opts)?;
    let expected = if c < entry.expected_chi {
        Some(SatStatus::Unsat)
    } else if c == entry.torus_scale_c {
        Some(SatStatus::Sat)
    } else {
        None
    };
    println!(
        "{} torus c = {} ({} vertices, {} edges): {} ({} conflicts, {} ms)",
        r.symbol, c, r.graph.vertices, r.graph.edges, r.status, r.solver.conflicts, r.elapsed_ms
    );
    if let Some(col) = &r.coloring {
        println!("verified {}-coloring using {} colors; chi <= {c}", c, col.used_colors());
    }
    report_expectation(expected, r.status)
}

fn report_expectation(expected: Option<SatStatus>, got: SatStatus) -> Result<Agreement, Error> {
    match expected {
        None => {
            println!("no recorded expectation for this instance");
            Ok(true)
        }
        Some(e) if e == got => Ok(true),
        Some(e) => {
            println!("expected {e}");
            Ok(false)
        }
    }
}

fn print_certificate(cert: &ChiCertificate) {
    println!(
        "{:>2}  {:<10} chi {}  ball {:>2}/{:<3} unsat at {}  torus c={} {:>4}/{:<5} sat  ({}+{} conflicts, {} ms)",
        cert.class_id,
        cert.representative,
        cert.chi,
        cert.dpb_graph_stats.vertices,
        cert.dpb_graph_stats.edges,
        cert.dpb_unsat_k,
        cert.torus_c,
        cert.torus_stats.vertices,
        cert.torus_stats.edges,
        cert.dpb_solver.conflicts,
        cert.dtb_solver.conflicts,
        cert.finished_unix_ms - cert.started_unix_ms
    );
}

fn persist(cert: &ChiCertificate, out: Option<&Path>) -> Result<(), Error> {
    if let Some(dir) = out {
        for path in cert.persist(dir)? {
            println!("    wrote {}", path.display());
        }
    }
    Ok(())
}

fn chi_full(entry: Option<&str>, out: Option<&Path>, opts: &PipelineOptions) -> Result<Agreement, Error> {
    if let Some(symbol) = entry {
        let cert = certify_entry(find_entry(symbol)?, opts)?;
        print_certificate(&cert);
        persist(&cert, out)?;
        return Ok(true);
    }
    let mut agreed = 0;
    let attempts = table5_attempts(opts)?;
    let total = attempts.len();
    for a in attempts {
        match a.result {
            Ok(cert) => {
                print_certificate(&cert);
                persist(&cert, out)?;
                if cert.chi == a.expected_chi {
                    agreed += 1;
                }
            }
            Err(e) => println!("{:>2}  {:<10} FAILED: {e}", a.class_id, a.representative),
        }
    }
    println!("{agreed}/{total} classes certified");
    Ok(agreed == total)
}

fn demo(json: bool, opts: &PipelineOptions) -> Result<Agreement, Error> {
    let checks = demo_lattices()
        .iter()
        .map(|d| check_demo(d, opts))
        .collect::<Result<Vec<_>, _>>()?;
    if json {
        println!("{}", serde_json::to_string_pretty(&checks)?);
    } else {
        for c in &checks {
            println!(
                "{:<23} pairs {}  chi {}  ball {}/{} {}  torus {}/{} {}  {}",
                c.name,
                c.pairs,
                c.chi,
                c.dpb.graph.vertices,
                c.dpb.graph.edges,
                c.dpb.status,
                c.dtb.graph.vertices,
                c.dtb.graph.edges,
                c.dtb.status,
                if c.passed { "ok" } else { "MISMATCH" }
            );
        }
    }
    Ok(checks.iter().all(|c| c.passed))
}
