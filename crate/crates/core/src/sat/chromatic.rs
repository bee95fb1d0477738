//! Chromatic number by scanning k upward over SAT instances.

use serde::{Deserialize, Serialize};

use super::cnf::{color_var, encode_k_coloring};
use super::solver::{solve_with, SatOutcome, SolverConfig, SolverStats};
use crate::error::{domain, Error, Result};
use crate::graph::{Coloring, FiniteGraph};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChromaticOptions {
    pub solver: SolverConfig,
    pub symmetry_breaking: bool,
}

/// Lowest true color of each vertex. Conflict clauses forbid adjacent
/// vertices from sharing any true color, so the choice is always proper.
pub fn decode_coloring(n: usize, k: u32, out: &SatOutcome) -> Result<Coloring> {
    let a = out
        .assignment()
        .ok_or_else(|| domain("cannot decode an unsatisfiable outcome"))?;
    if a.len() != n * k as usize + 1 {
        return Err(domain(format!(
            "assignment has {} variables, expected {}",
            a.len() - 1,
            n * k as usize
        )));
    }
    let colors = (0..n)
        .map(|v| {
            (1..=k)
                .find(|&l| a[color_var(v, l, k) as usize])
                .ok_or_else(|| Error::Verification(format!("vertex {} has no color", v + 1)))
        })
        .collect::<Result<Vec<u32>>>()?;
    Coloring::new(colors, k)
}

/// Solves `encode_k_coloring(g, k)`; on SAT the decoded coloring is returned.
pub fn solve_coloring(
    g: &FiniteGraph,
    k: u32,
    opts: &ChromaticOptions,
) -> Result<(Option<Coloring>, SolverStats)> {
    let f = encode_k_coloring(g, k, opts.symmetry_breaking)?;
    let (out, stats) = solve_with(&f, &opts.solver)?;
    if !out.is_sat() {
        return Ok((None, stats));
    }
    Ok((Some(decode_coloring(g.vertex_count(), k, &out)?), stats))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChromaticResult {
    pub chi: u32,
    pub witness: Coloring,
    /// `chi - 1`, or `lo - 1` when `lo` itself was colorable.
    pub unsat_k: u32,
}

pub fn chromatic_number_sat(
    g: &FiniteGraph,
    lo: u32,
    hi: u32,
    opts: &ChromaticOptions,
) -> Result<ChromaticResult> {
    if lo == 0 || lo > hi {
        return Err(domain(format!("need 1 <= lo <= hi, got lo={lo} hi={hi}")));
    }
    for k in lo..=hi {
        if let (Some(witness), _) = solve_coloring(g, k, opts)? {
            return Ok(ChromaticResult {
                chi: k,
                witness,
                unsat_k: k - 1,
            });
        }
    }
    Err(Error::Range(format!("graph is not {hi}-colorable")))
}
