//! CNF formulas and the k-coloring encoding, with DIMACS text in and out.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::graph::FiniteGraph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CnfFormula {
    var_count: u32,
    clauses: Vec<Vec<i32>>,
}

impl CnfFormula {
    pub fn new(var_count: u32, clauses: Vec<Vec<i32>>) -> Result<Self> {
        for c in &clauses {
            if c.is_empty() {
                return Err(domain("empty clause"));
            }
            if let Some(l) = c.iter().find(|&&l| l == 0 || l.unsigned_abs() > var_count) {
                return Err(domain(format!("literal {l} out of range 1..={var_count}")));
            }
        }
        Ok(Self { var_count, clauses })
    }

    pub fn var_count(&self) -> u32 {
        self.var_count
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }

    pub fn clause_count(&self) -> usize {
        self.clauses.len()
    }

    /// Does `assignment` (indexed by variable, slot 0 unused) satisfy every clause?
    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.var_count as usize + 1
            && self.clauses.iter().all(|c| {
                c.iter()
                    .any(|&l| assignment[l.unsigned_abs() as usize] == (l > 0))
            })
    }
}

/// Variable for vertex `v` (0-based) taking color `color` (1-based).
///
/// This is `x_{i,l} = (i - 1) k + l` with the 1-based vertex `i = v + 1`.
pub fn color_var(v: usize, color: u32, k: u32) -> i32 {
    (v as u64 * u64::from(k) + u64::from(color)) as i32
}

/// k-colorability of `g` as CNF.
///
/// One at-least-one clause per vertex and `k` conflict clauses per edge; a
/// vertex may end up with several colors, any of which is usable. With
/// `symmetry_breaking`, vertex 1 gets color 1 and vertex `i <= k` avoids
/// colors above `i`.
pub fn encode_k_coloring(g: &FiniteGraph, k: u32, symmetry_breaking: bool) -> Result<CnfFormula> {
    if k == 0 {
        return Err(domain("k must be at least 1"));
    }
    let n = g.vertex_count();
    let var_count = n as u64 * u64::from(k);
    if var_count > i32::MAX as u64 {
        return Err(Error::Resource(format!("{var_count} variables exceed the DIMACS range")));
    }
    let mut clauses: Vec<Vec<i32>> =
        Vec::with_capacity(n + g.edge_count() * k as usize + if symmetry_breaking { n } else { 0 });
    for v in 0..n {
        clauses.push((1..=k).map(|l| color_var(v, l, k)).collect());
    }
    for (u, v) in g.edges() {
        for l in 1..=k {
            clauses.push(vec![-color_var(u, l, k), -color_var(v, l, k)]);
        }
    }
    if symmetry_breaking && n > 0 {
        clauses.push(vec![color_var(0, 1, k)]);
        for v in 0..n.min(k as usize) {
            for l in (v as u32 + 2)..=k {
                clauses.push(vec![-color_var(v, l, k)]);
            }
        }
    }
    CnfFormula::new(var_count as u32, clauses)
}

pub fn write_dimacs(f: &CnfFormula) -> String {
    write_dimacs_with_comments(f, &[])
}

/// DIMACS with leading `c` comment lines.
pub fn write_dimacs_with_comments(f: &CnfFormula, comments: &[&str]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "c {c}");
    }
    let _ = writeln!(out, "p cnf {} {}", f.var_count, f.clauses.len());
    for c in &f.clauses {
        for l in c {
            let _ = write!(out, "{l} ");
        }
        out.push_str("0\n");
    }
    out
}

pub fn parse_dimacs(text: &str) -> Result<CnfFormula> {
    let mut header: Option<(u32, usize)> = None;
    let mut clauses = Vec::new();
    let mut current = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("p cnf") {
            let nums: Vec<&str> = rest.split_whitespace().collect();
            let parse = |s: &str| s.parse::<u64>().map_err(|_| Error::Parse(format!("bad header: {line}")));
            if nums.len() != 2 {
                return Err(Error::Parse(format!("bad header: {line}")));
            }
            header = Some((parse(nums[0])? as u32, parse(nums[1])? as usize));
            continue;
        }
        if header.is_none() {
            return Err(Error::Parse("clause before header".into()));
        }
        for tok in line.split_whitespace() {
            let l: i32 = tok
                .parse()
                .map_err(|_| Error::Parse(format!("bad literal {tok:?}")))?;
            if l == 0 {
                clauses.push(std::mem::take(&mut current));
            } else {
                current.push(l);
            }
        }
    }
    let (vars, count) = header.ok_or_else(|| Error::Parse("missing header".into()))?;
    if !current.is_empty() {
        return Err(Error::Parse("unterminated clause".into()));
    }
    if clauses.len() != count {
        return Err(Error::Parse(format!(
            "header promises {count} clauses, found {}",
            clauses.len()
        )));
    }
    CnfFormula::new(vars, clauses).map_err(|e| Error::Parse(e.to_string()))
}
