//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use latchi::catalog::{demo_lattices, GRAPH_CLASSES};
use latchi::exact::EXACT_VERTEX_LIMIT;
use latchi::pipeline::{check_demo, run_table4, run_table5, PipelineOptions};
use latchi::sat::{solve_coloring, solve_with, write_dimacs, ChromaticOptions, SolverConfig};
use latchi::voronoi::{canonical_sign, verify_catalog_vectors};
use latchi::{
    ball_graph, catalog, chromatic_number_exact_small, chromatic_number_sat, encode_k_coloring,
    find_entry, find_linear_isomorphism, is_proper_coloring, strict_voronoi_vectors, torus_graph,
    FiniteGraph,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CATALOG_LIMIT: Duration = Duration::from_secs(10);
const TABLE4_LIMIT: Duration = Duration::from_secs(600);
const TABLE5_LIMIT: Duration = Duration::from_secs(7200);
const SMOKE_LIMIT: Duration = Duration::from_secs(1);
const CONFLICT_BUDGET: u64 = 50_000_000;
const TABLE4_COUNTS: [usize; 16] = [1, 2, 1, 1, 5, 1, 10, 2, 18, 2, 3, 1, 2, 1, 1, 1];
const TABLE5_CHI: [u32; 16] = [5, 7, 6, 5, 6, 5, 6, 5, 4, 4, 5, 4, 4, 3, 3, 2];
const RANDOM_GRAPHS: usize = 200;
const RANDOM_CONJUGATIONS: usize = 50;

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure(t <= limit, || format!("took {t:?}, limit {limit:?}"))?;
    Ok(t)
}

fn cli(args: &[&str]) -> Result<(i32, String), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_latchi"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    Ok((
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
    ))
}

fn options() -> PipelineOptions {
    PipelineOptions {
        solver: SolverConfig {
            conflict_budget: CONFLICT_BUDGET,
            seed: 0,
        },
        ..PipelineOptions::default()
    }
}

fn catalog_fidelity() -> Check {
    let start = Instant::now();
    let report = verify_catalog_vectors(catalog()).map_err(|e| e.to_string())?;
    ensure(report.rows.len() == 52 && report.matches == 52, || {
        format!("{}/{} entries match", report.matches, report.rows.len())
    })?;
    let (code, out) = cli(&["catalog", "verify"])?;
    ensure(code == 0 && out.contains("52/52 entries match"), || {
        format!("`catalog verify` exited {code}")
    })?;
    let t = within(CATALOG_LIMIT, start)?;
    Ok(format!("52/52 pair sets equal, library and CLI, {t:.2?}"))
}

fn table4() -> Check {
    let start = Instant::now();
    let report = run_table4().map_err(|e| e.to_string())?;
    let counts: Vec<usize> = report.rows.iter().map(|r| r.number).collect();
    ensure(counts == TABLE4_COUNTS, || format!("member counts {counts:?}"))?;
    for (row, class) in report.rows.iter().zip(&GRAPH_CLASSES) {
        ensure(
            (row.r, row.edges, row.aut_order)
                == (class.r as usize, class.edges as usize, u128::from(class.aut_order)),
            || format!("class {} has ({}, {}, {})", row.class_id, row.r, row.edges, row.aut_order),
        )?;
    }
    let rows: Vec<_> = report.rows.iter().map(|r| (r.r, r.edges, r.aut_order)).collect();
    for key in [(30, 180, 240), (30, 186, 144), (8, 8, 40320)] {
        ensure(rows.contains(&key), || format!("row {key:?} missing"))?;
    }
    let (code, out) = cli(&["classify"])?;
    ensure(code == 0 && out.contains("16 classes, 16/16 rows match"), || {
        format!("`classify` exited {code}")
    })?;
    let t = within(TABLE4_LIMIT, start)?;
    Ok(format!("16 classes, counts and (r, |E|, order) rows exact, {t:.2?}"))
}

fn witnesses() -> Check {
    let mut found = Vec::new();
    for (a, b) in [("411", "311+"), ("441", "331+"), ("K_5-2", "K_5-2-1")] {
        let s = strict_voronoi_vectors(&find_entry(a).unwrap().form()).unwrap();
        let t = strict_voronoi_vectors(&find_entry(b).unwrap().form()).unwrap();
        ensure(!s.same_pairs(&t), || format!("{a} and {b} have equal vector sets"))?;
        let m = find_linear_isomorphism(&s, &t)
            .map_err(|e| e.to_string())?
            .ok_or_else(|| format!("no map {a} -> {b}"))?;
        // recheck by hand: image of S ∪ -S equals S' ∪ -S'
        let image: BTreeSet<Vec<i64>> = s
            .expanded()
            .iter()
            .map(|v| {
                m.matrix()
                    .iter()
                    .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
                    .collect()
            })
            .collect();
        let target: BTreeSet<Vec<i64>> = t.expanded().into_iter().collect();
        ensure(image == target, || format!("{a} -> {b}: image differs"))?;
        ensure(m.determinant().abs() == 1, || format!("{a} -> {b}: det {}", m.determinant()))?;
        found.push(format!("{a}->{b}"));
    }
    Ok(format!("unimodular maps verified for {}", found.join(", ")))
}

fn table5() -> Check {
    let start = Instant::now();
    let certs = run_table5(&options()).map_err(|e| e.to_string())?;
    let chi: Vec<u32> = certs.iter().map(|c| c.chi).collect();
    ensure(chi == TABLE5_CHI, || format!("chi {chi:?}"))?;
    let mut max_conflicts = 0;
    for cert in &certs {
        let class = &GRAPH_CLASSES[usize::from(cert.class_id) - 1];
        ensure(cert.representative == class.representative, || {
            format!("class {} certified on {}", cert.class_id, cert.representative)
        })?;
        // independent of the solver: rebuild the torus and check the coloring
        let s = strict_voronoi_vectors(&find_entry(&cert.representative).unwrap().form()).unwrap();
        let g = torus_graph(&s, cert.torus_c).unwrap();
        let colors = cert.witness_coloring.colors();
        ensure(colors.len() == g.vertex_count(), || "witness length".into())?;
        ensure(colors.iter().all(|&c| (1..=cert.chi).contains(&c)), || "witness range".into())?;
        ensure(g.edges().all(|(u, v)| colors[u] != colors[v]), || {
            format!("class {}: improper witness", cert.class_id)
        })?;
        ensure(cert.dpb_unsat_k + 1 == cert.chi && cert.torus_c == cert.chi, || {
            format!("class {}: bounds disagree", cert.class_id)
        })?;
        ensure(g.vertex_count() == (cert.chi as usize).pow(4), || "torus size".into())?;
        max_conflicts = max_conflicts
            .max(cert.dpb_solver.conflicts)
            .max(cert.dtb_solver.conflicts);
    }
    let k33 = &certs[1];
    ensure(k33.torus_stats.vertices == 2401 && k33.dtb_formula.var_count() == 16807, || {
        "K_{3,3} torus size".into()
    })?;
    let t = within(TABLE5_LIMIT, start)?;
    Ok(format!(
        "16 certificates, chi {chi:?}, max {max_conflicts} conflicts per instance, {t:.2?}"
    ))
}

fn smoke() -> Check {
    let start = Instant::now();
    let demos = demo_lattices();
    let hex = demos.iter().find(|d| d.name == "hexagonal").unwrap();
    let r = check_demo(hex, &options()).map_err(|e| e.to_string())?;
    ensure(r.passed && r.chi == 3, || "hexagonal".into())?;
    ensure(r.dpb.graph.vertices == 7, || format!("C_1 has {} vertices", r.dpb.graph.vertices))?;
    ensure((r.dtb.graph.vertices, r.dtb.graph.edges) == (9, 27), || {
        format!("torus {}/{}", r.dtb.graph.vertices, r.dtb.graph.edges)
    })?;
    let sq = demos.iter().find(|d| d.name == "square").unwrap();
    let r = check_demo(sq, &options()).map_err(|e| e.to_string())?;
    ensure(r.passed && r.chi == 2, || "square".into())?;
    let t = within(SMOKE_LIMIT, start)?;
    Ok(format!("hexagonal chi 3 (C_1 7 vertices, torus 9/27), square chi 2, {t:.2?}"))
}

fn random_graphs() -> Vec<FiniteGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1a77);
    (0..RANDOM_GRAPHS)
        .map(|i| {
            let p = if i % 2 == 0 { 0.2 } else { 0.5 };
            let n = rng.gen_range(1..=16);
            let mut edges = Vec::new();
            for a in 0..n {
                for b in a + 1..n {
                    if rng.gen_bool(p) {
                        edges.push((a, b));
                    }
                }
            }
            FiniteGraph::from_edges(n, edges).unwrap()
        })
        .collect()
}

/// Random unimodular matrix with its inverse, from column operations.
fn random_unimodular(rng: &mut ChaCha8Rng) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
    let id = |i: usize, j: usize| i64::from(i == j);
    let mut a: Vec<Vec<i64>> = (0..4).map(|i| (0..4).map(|j| id(i, j)).collect()).collect();
    let mut inv = a.clone();
    for _ in 0..rng.gen_range(1..8) {
        let (i, j) = (rng.gen_range(0..4), rng.gen_range(0..4));
        match rng.gen_range(0..3) {
            0 if i != j => {
                let k = if rng.gen_bool(0.5) { 1 } else { -1 };
                for row in a.iter_mut() {
                    row[i] += k * row[j];
                }
                let ri = inv[i].clone();
                for (x, y) in inv[j].iter_mut().zip(&ri) {
                    *x -= k * y;
                }
            }
            1 => {
                for row in a.iter_mut() {
                    row.swap(i, j);
                }
                inv.swap(i, j);
            }
            _ => {
                for row in a.iter_mut() {
                    row[i] = -row[i];
                }
                for x in inv[i].iter_mut() {
                    *x = -*x;
                }
            }
        }
    }
    (a, inv)
}

fn property_suite() -> Check {
    let opts = ChromaticOptions::default();

    // (a) oracle equivalence, (c) decode-then-verify
    let mut graphs: Vec<FiniteGraph> = catalog()
        .iter()
        .map(|e| ball_graph(&strict_voronoi_vectors(&e.form()).unwrap(), 1).unwrap())
        .filter(|g| g.vertex_count() <= EXACT_VERTEX_LIMIT)
        .collect();
    let balls = graphs.len();
    graphs.extend(random_graphs());
    let mut sat_checked = 0;
    for (i, g) in graphs.iter().enumerate() {
        let exact = chromatic_number_exact_small(g).map_err(|e| e.to_string())?;
        let r = chromatic_number_sat(g, 1, 17, &opts).map_err(|e| e.to_string())?;
        ensure(r.chi == exact, || format!("graph {i}: sat {} exact {exact}", r.chi))?;
        for k in 1..=r.chi + 1 {
            if let (Some(col), _) = solve_coloring(g, k, &opts).map_err(|e| e.to_string())? {
                ensure(is_proper_coloring(g, &col).unwrap(), || format!("graph {i} k={k}"))?;
                sat_checked += 1;
            }
        }
    }

    // (b) unimodular equivariance
    let mut rng = ChaCha8Rng::seed_from_u64(0xb0b);
    for _ in 0..RANDOM_CONJUGATIONS {
        let entry = &catalog()[rng.gen_range(0..catalog().len())];
        let (a, inv) = random_unimodular(&mut rng);
        let q = entry.form();
        let before = strict_voronoi_vectors(&q).unwrap();
        let after = strict_voronoi_vectors(&q.conjugate(&a).unwrap()).unwrap();
        let mapped: BTreeSet<Vec<i64>> = before
            .vectors()
            .iter()
            .map(|v| {
                let w: Vec<i64> = inv.iter().map(|r| r.iter().zip(v).map(|(x, y)| x * y).sum()).collect();
                canonical_sign(&w)
            })
            .collect();
        let got: BTreeSet<Vec<i64>> = after.vectors().iter().cloned().collect();
        ensure(got == mapped, || format!("{} under {a:?}", entry.symbol))?;
    }

    // (d) DIMACS and solver output are byte-identical across runs
    let golden = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/golden");
    let edge = FiniteGraph::from_edges(2, [(0, 1)]).unwrap();
    let stored = std::fs::read_to_string(golden.join("edge-k2.cnf")).map_err(|e| e.to_string())?;
    ensure(write_dimacs(&encode_k_coloring(&edge, 2, false).unwrap()) == stored, || {
        "edge-k2.cnf differs from golden".into()
    })?;
    let dir = std::env::temp_dir().join(format!("latchi-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let mut emitted = 0;
    for (entry, target) in [("K_{3,3}", "7"), ("C_3+C_3", "3"), ("222+", "4")] {
        let mut texts = Vec::new();
        for run in 0..2 {
            let path = dir.join(format!("run{run}.cnf"));
            let p = path.to_str().unwrap();
            let (code, _) = cli(&["emit-cnf", "--entry", entry, "--torus", target, "--k", target, "--out", p])?;
            ensure(code == 0, || format!("emit-cnf {entry} exited {code}"))?;
            texts.push(std::fs::read(&path).map_err(|e| e.to_string())?);
        }
        ensure(texts[0] == texts[1], || format!("{entry}: DIMACS differs between runs"))?;
        let f = latchi::sat::parse_dimacs(std::str::from_utf8(&texts[0]).unwrap()).unwrap();
        let cfg = SolverConfig { seed: 42, ..SolverConfig::default() };
        let (x, _) = solve_with(&f, &cfg).unwrap();
        let (y, _) = solve_with(&f, &cfg).unwrap();
        ensure(x.to_solution_text() == y.to_solution_text(), || {
            format!("{entry}: seeded solutions differ")
        })?;
        emitted += 1;
    }
    let _ = std::fs::remove_dir_all(&dir);

    Ok(format!(
        "(a) {} graphs ({balls} ball graphs + {RANDOM_GRAPHS} random) match the exact oracle; \
         (b) {RANDOM_CONJUGATIONS} conjugations equivariant; (c) {sat_checked} SAT decodes proper; \
         (d) golden + {emitted} repeated emissions identical",
        graphs.len()
    ))
}

fn main() {
    let criteria: [(&str, fn() -> Check); 6] = [
        ("catalog fidelity", catalog_fidelity),
        ("classification table", table4),
        ("isomorphism witnesses", witnesses),
        ("chromatic number certificates", table5),
        ("hexagonal and square smoke test", smoke),
        ("property suite", property_suite),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("[PASS] {}. {name}: {detail}", i + 1),
            Err(why) => {
                failures += 1;
                println!("[FAIL] {}. {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {}/{} criteria pass", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
