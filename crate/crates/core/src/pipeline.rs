//! End-to-end runs over the catalog.
//!
//! A certificate for χ pairs two SAT verdicts. The unit ball graph `C_1` is
//! not (χ-1)-colorable, so χ is a lower bound (`dpb`, the Delaunay polytope
//! bound). The torus `Z^4 / cZ^4` with `c = χ` is χ-colorable and the
//! coloring lifts periodically to the whole lattice, so χ is an upper bound
//! (`dtb`, the discrete torus bound).

use std::path::{Path, PathBuf};
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{catalog, find_entry, CatalogEntry, DemoLattice, GRAPH_CLASSES};
use crate::error::{domain, Error, Result};
use crate::graph::{
    ball_graph, is_proper_coloring, sublattice_avoids_generators, torus_graph, Coloring,
    FiniteGraph,
};
use crate::iso::{classify, IsoClass};
use crate::sat::{
    decode_coloring, encode_k_coloring, solve_with, write_dimacs, CnfFormula, SatOutcome,
    SatStatus, SolverConfig, SolverStats,
};
use crate::voronoi::{strict_voronoi_vectors, verify_catalog_vectors, GeneratorSet, VerificationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PipelineOptions {
    pub solver: SolverConfig,
    /// Symmetry breaking on the ball-graph instances.
    pub dpb_symmetry_breaking: bool,
    /// Symmetry breaking on the torus instances.
    pub dtb_symmetry_breaking: bool,
    /// Worker threads for per-class jobs; `None` uses rayon's default.
    pub threads: Option<usize>,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        Self {
            solver: SolverConfig::default(),
            dpb_symmetry_breaking: false,
            dtb_symmetry_breaking: true,
            threads: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GraphStats {
    pub vertices: usize,
    pub edges: usize,
}

impl From<&FiniteGraph> for GraphStats {
    fn from(g: &FiniteGraph) -> Self {
        Self {
            vertices: g.vertex_count(),
            edges: g.edge_count(),
        }
    }
}

fn unix_ms() -> u128 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_millis())
        .unwrap_or(0)
}

/// Verdict on the k-colorability of the unit ball graph.
#[derive(Clone, Debug, Serialize)]
pub struct DpbRun {
    pub symbol: String,
    pub k: u32,
    pub status: SatStatus,
    pub graph: GraphStats,
    pub solver: SolverStats,
    pub elapsed_ms: u128,
    #[serde(skip)]
    pub formula: CnfFormula,
}

pub fn run_dpb(entry: &CatalogEntry, k: u32, opts: &PipelineOptions) -> Result<DpbRun> {
    let s = strict_voronoi_vectors(&entry.form())?;
    dpb_on(&entry.symbol, &s, k, opts)
}

fn dpb_on(symbol: &str, s: &GeneratorSet, k: u32, opts: &PipelineOptions) -> Result<DpbRun> {
    if k == 0 {
        return Err(domain("k must be at least 1"));
    }
    let start = Instant::now();
    let c1 = ball_graph(s, 1)?;
    let formula = encode_k_coloring(&c1, k, opts.dpb_symmetry_breaking)?;
    let (out, solver) = solve_with(&formula, &opts.solver)?;
    if out.is_sat() {
        let col = decode_coloring(c1.vertex_count(), k, &out)?;
        if !is_proper_coloring(&c1, &col)? {
            return Err(Error::Verification(format!("{symbol}: decoded ball coloring is improper")));
        }
    }
    Ok(DpbRun {
        symbol: symbol.to_string(),
        k,
        status: out.status(),
        graph: GraphStats::from(&c1),
        solver,
        elapsed_ms: start.elapsed().as_millis(),
        formula,
    })
}

/// Verdict on the c-colorability of the torus `Z^n / cZ^n`.
#[derive(Clone, Debug, Serialize)]
pub struct DtbRun {
    pub symbol: String,
    pub c: u32,
    pub status: SatStatus,
    pub graph: GraphStats,
    /// Present iff SAT, already checked against the torus graph.
    pub coloring: Option<Coloring>,
    pub solver: SolverStats,
    pub elapsed_ms: u128,
    #[serde(skip)]
    pub formula: CnfFormula,
    #[serde(skip)]
    pub outcome: SatOutcome,
}

pub fn run_dtb(entry: &CatalogEntry, c: u32, opts: &PipelineOptions) -> Result<DtbRun> {
    let s = strict_voronoi_vectors(&entry.form())?;
    dtb_on(&entry.symbol, &s, c, opts)
}

fn dtb_on(symbol: &str, s: &GeneratorSet, c: u32, opts: &PipelineOptions) -> Result<DtbRun> {
    let start = Instant::now();
    if c < 2 || !sublattice_avoids_generators(s, c) {
        return Err(domain(format!(
            "{symbol}: {c}Z^{} contains a strict Voronoi vector",
            s.dim()
        )));
    }
    let g = torus_graph(s, c)?;
    let formula = encode_k_coloring(&g, c, opts.dtb_symmetry_breaking)?;
    let (outcome, solver) = solve_with(&formula, &opts.solver)?;
    let coloring = if outcome.is_sat() {
        let col = decode_coloring(g.vertex_count(), c, &outcome)?;
        if !is_proper_coloring(&g, &col)? {
            return Err(Error::Verification(format!("{symbol}: decoded torus coloring is improper")));
        }
        Some(col)
    } else {
        None
    };
    Ok(DtbRun {
        symbol: symbol.to_string(),
        c,
        status: outcome.status(),
        graph: GraphStats::from(&g),
        coloring,
        solver,
        elapsed_ms: start.elapsed().as_millis(),
        formula,
        outcome,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ChiCertificate {
    pub class_id: u8,
    pub representative: String,
    pub chi: u32,
    pub dpb_unsat_k: u32,
    pub dpb_graph_stats: GraphStats,
    pub torus_c: u32,
    pub torus_stats: GraphStats,
    pub witness_coloring: Coloring,
    pub started_unix_ms: u128,
    pub finished_unix_ms: u128,
    pub dpb_solver: SolverStats,
    pub dtb_solver: SolverStats,
    #[serde(skip)]
    pub dpb_formula: CnfFormula,
    #[serde(skip)]
    pub dtb_formula: CnfFormula,
    #[serde(skip)]
    pub dtb_outcome: SatOutcome,
}

impl ChiCertificate {
    /// Rechecks the bookkeeping and the witness coloring, rebuilding the
    /// torus graph from the catalog rather than trusting the solver.
    pub fn check(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Verification(format!("{}: {msg}", self.representative)));
        if self.dpb_unsat_k + 1 != self.chi || self.torus_c != self.chi {
            return fail(format!(
                "inconsistent bounds: unsat at {}, chi {}, torus {}",
                self.dpb_unsat_k, self.chi, self.torus_c
            ));
        }
        let entry = find_entry(&self.representative)?;
        let s = strict_voronoi_vectors(&entry.form())?;
        let g = torus_graph(&s, self.torus_c)?;
        if GraphStats::from(&g) != self.torus_stats {
            return fail("torus size differs from the recorded one".into());
        }
        if !is_proper_coloring(&g, &self.witness_coloring)? {
            return fail("witness coloring is not proper".into());
        }
        if self.witness_coloring.used_colors() > self.chi as usize {
            return fail("witness coloring uses too many colors".into());
        }
        Ok(())
    }

    fn file_stem(&self) -> String {
        let slug: String = self
            .representative
            .chars()
            .filter_map(|ch| match ch {
                '+' => Some('p'),
                '-' => Some('m'),
                '\'' => Some('q'),
                ',' => Some('_'),
                c if c.is_ascii_alphanumeric() => Some(c),
                _ => None,
            })
            .collect();
        format!("class{:02}-{slug}", self.class_id)
    }

    /// Writes `<stem>.json` next to both DIMACS instances and the torus
    /// solution file.
    pub fn persist(&self, dir: &Path) -> Result<Vec<PathBuf>> {
        std::fs::create_dir_all(dir)?;
        let stem = self.file_stem();
        let files = [
            (format!("{stem}.json"), serde_json::to_string_pretty(self)? + "\n"),
            (format!("{stem}-dpb-k{}.cnf", self.dpb_unsat_k), write_dimacs(&self.dpb_formula)),
            (format!("{stem}-dtb-c{}.cnf", self.torus_c), write_dimacs(&self.dtb_formula)),
            (format!("{stem}-dtb-c{}.sol", self.torus_c), self.dtb_outcome.to_solution_text()),
        ];
        let mut written = Vec::with_capacity(files.len());
        for (name, text) in files {
            let path = dir.join(name);
            std::fs::write(&path, text)?;
            written.push(path);
        }
        Ok(written)
    }
}

/// Certifies `chi` for one entry: UNSAT at `chi - 1` on the ball graph and a
/// verified `chi`-coloring of the torus with scale `torus_c`.
pub fn certify(
    class_id: u8,
    entry: &CatalogEntry,
    chi: u32,
    torus_c: u32,
    opts: &PipelineOptions,
) -> Result<ChiCertificate> {
    if chi < 2 {
        return Err(domain("a lattice needs at least two colors"));
    }
    let started = unix_ms();
    let dpb = run_dpb(entry, chi - 1, opts)?;
    if dpb.status != SatStatus::Unsat {
        return Err(Error::Verification(format!(
            "class {class_id} ({}): ball graph is {}-colorable",
            entry.symbol,
            chi - 1
        )));
    }
    if torus_c != chi {
        return Err(domain(format!("torus scale {torus_c} differs from chi {chi}")));
    }
    let dtb = run_dtb(entry, torus_c, opts)?;
    let Some(witness) = dtb.coloring else {
        return Err(Error::Verification(format!(
            "class {class_id} ({}): torus with c = {torus_c} is not {torus_c}-colorable",
            entry.symbol
        )));
    };
    let cert = ChiCertificate {
        class_id,
        representative: entry.symbol.clone(),
        chi,
        dpb_unsat_k: chi - 1,
        dpb_graph_stats: dpb.graph,
        torus_c,
        torus_stats: dtb.graph,
        witness_coloring: witness,
        started_unix_ms: started,
        finished_unix_ms: unix_ms(),
        dpb_solver: dpb.solver,
        dtb_solver: dtb.solver,
        dpb_formula: dpb.formula,
        dtb_formula: dtb.formula,
        dtb_outcome: dtb.outcome,
    };
    cert.check()?;
    Ok(cert)
}

/// Certificate for one catalog entry using the values recorded for it.
pub fn certify_entry(entry: &CatalogEntry, opts: &PipelineOptions) -> Result<ChiCertificate> {
    certify(
        entry.expected_class,
        entry,
        entry.expected_chi,
        entry.torus_scale_c,
        opts,
    )
}

fn with_pool<T: Send>(opts: &PipelineOptions, job: impl FnOnce() -> T + Send) -> Result<T> {
    match opts.threads {
        None => Ok(job()),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::Resource(e.to_string()))
            .map(|pool| pool.install(job)),
    }
}

/// Outcome of certifying one classification row.
#[derive(Debug)]
pub struct Table5Attempt {
    pub class_id: u8,
    pub representative: &'static str,
    pub expected_chi: u32,
    pub result: Result<ChiCertificate>,
}

/// Certifies every classification row on the worker pool, keeping failures
/// alongside successes. Rows come back in table order.
pub fn table5_attempts(opts: &PipelineOptions) -> Result<Vec<Table5Attempt>> {
    with_pool(opts, || {
        GRAPH_CLASSES
            .par_iter()
            .map(|class| Table5Attempt {
                class_id: class.id,
                representative: class.representative,
                expected_chi: class.chi,
                result: find_entry(class.representative)
                    .and_then(|entry| certify(class.id, entry, class.chi, class.c, opts)),
            })
            .collect()
    })
}

/// One certificate per classification row, in table order. The first failed
/// row is reported as an error naming its class.
pub fn run_table5(opts: &PipelineOptions) -> Result<Vec<ChiCertificate>> {
    table5_attempts(opts)?
        .into_iter()
        .map(|a| {
            a.result.map_err(|e| {
                Error::Verification(format!("class {} ({}): {e}", a.class_id, a.representative))
            })
        })
        .collect()
}

/// Smoke-test result for a two- or three-dimensional lattice.
#[derive(Clone, Debug, Serialize)]
pub struct DemoCheck {
    pub name: String,
    pub pairs: usize,
    pub expected_pairs: usize,
    pub chi: u32,
    pub dpb: DpbRun,
    pub dtb: DtbRun,
    pub passed: bool,
}

/// Ball graph not (χ-1)-colorable and torus χ-colorable, for a demo lattice.
pub fn check_demo(d: &DemoLattice, opts: &PipelineOptions) -> Result<DemoCheck> {
    let s = strict_voronoi_vectors(&d.form())?;
    let dpb = dpb_on(d.name, &s, d.expected_chi - 1, opts)?;
    let dtb = dtb_on(d.name, &s, d.torus_scale_c, opts)?;
    let passed = s.pair_count() == d.expected_pairs
        && dpb.status == SatStatus::Unsat
        && dtb.status == SatStatus::Sat
        && d.torus_scale_c == d.expected_chi;
    Ok(DemoCheck {
        name: d.name.to_string(),
        pairs: s.pair_count(),
        expected_pairs: d.expected_pairs,
        chi: d.expected_chi,
        dpb,
        dtb,
        passed,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Table4Row {
    pub class_id: u8,
    pub graph_name: String,
    pub r: usize,
    pub edges: usize,
    pub aut_order: u128,
    pub number: usize,
    pub members: Vec<String>,
    pub matched: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Table4Report {
    pub verification: VerificationReport,
    pub rows: Vec<Table4Row>,
    pub classes: Vec<IsoClass>,
}

impl Table4Report {
    pub fn all_matched(&self) -> bool {
        self.verification.mismatches == 0
            && self.rows.len() == GRAPH_CLASSES.len()
            && self.rows.iter().all(|r| r.matched)
    }
}

/// Classifies the verified catalog and compares every row with the recorded
/// classification. Mismatches are reported, not raised.
pub fn table4_report() -> Result<Table4Report> {
    let verification = verify_catalog_vectors(catalog())?;
    let classes = classify(catalog())?;
    let rows = classes
        .iter()
        .map(|c| {
            let expected = GRAPH_CLASSES.iter().find(|g| g.id == c.class_id);
            let matched = expected.is_some_and(|g| {
                let mut want: Vec<&str> = g.members.to_vec();
                let mut have: Vec<&str> = c.members.iter().map(String::as_str).collect();
                want.sort_unstable();
                have.sort_unstable();
                g.r as usize == c.signature.r
                    && g.edges as usize == c.signature.e1
                    && u128::from(g.aut_order) == c.signature.aut
                    && want == have
            });
            Table4Row {
                class_id: c.class_id,
                graph_name: c.graph_name.clone(),
                r: c.signature.r,
                edges: c.signature.e1,
                aut_order: c.signature.aut,
                number: c.members.len(),
                members: c.members.clone(),
                matched,
            }
        })
        .collect();
    Ok(Table4Report {
        verification,
        rows,
        classes,
    })
}

/// Like [`table4_report`], but any mismatch is an error naming the rows.
pub fn run_table4() -> Result<Table4Report> {
    let report = table4_report()?;
    if !report.all_matched() {
        let bad: Vec<String> = report
            .verification
            .rows
            .iter()
            .filter(|r| !r.matched)
            .map(|r| format!("catalog {}", r.symbol))
            .chain(
                report
                    .rows
                    .iter()
                    .filter(|r| !r.matched)
                    .map(|r| format!("class {} ({})", r.class_id, r.graph_name)),
            )
            .collect();
        return Err(Error::Verification(format!(
            "{} classes found, mismatches: {}",
            report.rows.len(),
            bad.join(", ")
        )));
    }
    Ok(report)
}
