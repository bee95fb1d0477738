//! Conflict-driven clause learning.
//!
//! Propagation uses two watched literals with blockers. Conflicts are learned
//! at the first UIP and minimized recursively. Branching follows VSIDS with
//! saved phases. Restarts are geometric, and learned clauses are periodically
//! thinned by LBD, then activity.

use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use super::cnf::CnfFormula;
use crate::error::{Error, Result};

pub const DEFAULT_CONFLICT_BUDGET: u64 = 50_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolverConfig {
    pub conflict_budget: u64,
    /// 0 keeps the natural variable order for ties; anything else perturbs
    /// initial activities with a generator seeded from it.
    pub seed: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            conflict_budget: DEFAULT_CONFLICT_BUDGET,
            seed: 0,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolverStats {
    pub conflicts: u64,
    pub decisions: u64,
    pub propagations: u64,
    pub restarts: u64,
    pub learned: u64,
    pub deleted: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SatStatus {
    #[serde(rename = "SAT")]
    Sat,
    #[serde(rename = "UNSAT")]
    Unsat,
}

impl std::fmt::Display for SatStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SatStatus::Sat => "SAT",
            SatStatus::Unsat => "UNSAT",
        })
    }
}

/// Solver verdict. A satisfiable outcome always carries an assignment that
/// was checked against the formula when the outcome was built.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SatOutcome {
    status: SatStatus,
    /// Indexed by variable; slot 0 is unused.
    assignment: Option<Vec<bool>>,
}

impl SatOutcome {
    pub fn satisfiable(f: &CnfFormula, assignment: Vec<bool>) -> Result<Self> {
        if !f.is_satisfied_by(&assignment) {
            return Err(Error::Verification(
                "assignment does not satisfy the formula".into(),
            ));
        }
        Ok(Self {
            status: SatStatus::Sat,
            assignment: Some(assignment),
        })
    }

    pub fn unsatisfiable() -> Self {
        Self {
            status: SatStatus::Unsat,
            assignment: None,
        }
    }

    pub fn status(&self) -> SatStatus {
        self.status
    }

    pub fn is_sat(&self) -> bool {
        self.status == SatStatus::Sat
    }

    pub fn assignment(&self) -> Option<&[bool]> {
        self.assignment.as_deref()
    }

    /// Solution file text: an `s` line, then `v` lines ending in `0`.
    pub fn to_solution_text(&self) -> String {
        match &self.assignment {
            None => "s UNSATISFIABLE\n".to_string(),
            Some(a) => {
                let mut out = String::from("s SATISFIABLE\n");
                let lits: Vec<String> = (1..a.len())
                    .map(|v| if a[v] { v.to_string() } else { format!("-{v}") })
                    .chain(std::iter::once("0".to_string()))
                    .collect();
                for chunk in lits.chunks(20) {
                    out.push_str("v ");
                    out.push_str(&chunk.join(" "));
                    out.push('\n');
                }
                out
            }
        }
    }

    /// Reads solution text produced by this crate or an external solver and
    /// checks it against `f`.
    pub fn from_solution_text(f: &CnfFormula, text: &str) -> Result<Self> {
        let mut status = None;
        let mut assignment = vec![false; f.var_count() as usize + 1];
        for line in text.lines() {
            let line = line.trim();
            if let Some(s) = line.strip_prefix("s ") {
                status = match s.trim() {
                    "SATISFIABLE" => Some(SatStatus::Sat),
                    "UNSATISFIABLE" => Some(SatStatus::Unsat),
                    other => return Err(Error::Parse(format!("unknown status {other:?}"))),
                };
            } else if let Some(rest) = line.strip_prefix("v ") {
                for tok in rest.split_whitespace() {
                    let l: i64 = tok
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad literal {tok:?}")))?;
                    let v = l.unsigned_abs() as usize;
                    if v >= assignment.len() {
                        return Err(Error::Parse(format!("variable {v} out of range")));
                    }
                    if l > 0 {
                        assignment[v] = true;
                    }
                }
            }
        }
        match status {
            Some(SatStatus::Sat) => Self::satisfiable(f, assignment),
            Some(SatStatus::Unsat) => Ok(Self::unsatisfiable()),
            None => Err(Error::Parse("missing status line".into())),
        }
    }
}

/// Decides `f` with the default configuration.
pub fn solve(f: &CnfFormula) -> Result<SatOutcome> {
    solve_with(f, &SolverConfig::default()).map(|(o, _)| o)
}

pub fn solve_with(f: &CnfFormula, config: &SolverConfig) -> Result<(SatOutcome, SolverStats)> {
    let mut s = Solver::new(f, config);
    let sat = s.search()?;
    let outcome = if sat {
        SatOutcome::satisfiable(f, s.model())?
    } else {
        SatOutcome::unsatisfiable()
    };
    Ok((outcome, s.stats))
}

type Lit = u32;
const NO_REASON: u32 = u32::MAX;
const VAR_DECAY: f64 = 0.95;
const CLAUSE_DECAY: f64 = 0.999;
const RESTART_FIRST: f64 = 100.0;
const RESTART_GROWTH: f64 = 1.5;

fn lit_of(dimacs: i32) -> Lit {
    ((dimacs.unsigned_abs() - 1) << 1) | u32::from(dimacs < 0)
}

fn var(l: Lit) -> usize {
    (l >> 1) as usize
}

fn neg(l: Lit) -> Lit {
    l ^ 1
}

/// 1 true, -1 false, 0 unassigned.
fn lit_value(values: &[i8], l: Lit) -> i8 {
    let v = values[var(l)];
    if l & 1 == 0 {
        v
    } else {
        -v
    }
}

struct Clause {
    lits: Vec<Lit>,
    learnt: bool,
    deleted: bool,
    lbd: u32,
    activity: f64,
}

#[derive(Clone, Copy)]
struct Watch {
    cref: u32,
    blocker: Lit,
}

/// Max-heap of variables keyed by activity, ties to the smaller index.
struct VarHeap {
    heap: Vec<u32>,
    pos: Vec<usize>,
}

const NOT_IN_HEAP: usize = usize::MAX;

impl VarHeap {
    fn new(n: usize) -> Self {
        Self {
            heap: Vec::with_capacity(n),
            pos: vec![NOT_IN_HEAP; n],
        }
    }

    fn before(act: &[f64], a: u32, b: u32) -> bool {
        let (x, y) = (act[a as usize], act[b as usize]);
        x > y || (x == y && a < b)
    }

    fn contains(&self, v: usize) -> bool {
        self.pos[v] != NOT_IN_HEAP
    }

    fn up(&mut self, act: &[f64], mut i: usize) {
        let v = self.heap[i];
        while i > 0 {
            let parent = (i - 1) / 2;
            if !Self::before(act, v, self.heap[parent]) {
                break;
            }
            self.heap[i] = self.heap[parent];
            self.pos[self.heap[i] as usize] = i;
            i = parent;
        }
        self.heap[i] = v;
        self.pos[v as usize] = i;
    }

    fn down(&mut self, act: &[f64], mut i: usize) {
        let v = self.heap[i];
        loop {
            let left = 2 * i + 1;
            if left >= self.heap.len() {
                break;
            }
            let right = left + 1;
            let child = if right < self.heap.len() && Self::before(act, self.heap[right], self.heap[left]) {
                right
            } else {
                left
            };
            if !Self::before(act, self.heap[child], v) {
                break;
            }
            self.heap[i] = self.heap[child];
            self.pos[self.heap[i] as usize] = i;
            i = child;
        }
        self.heap[i] = v;
        self.pos[v as usize] = i;
    }

    fn insert(&mut self, act: &[f64], v: usize) {
        if self.contains(v) {
            return;
        }
        self.pos[v] = self.heap.len();
        self.heap.push(v as u32);
        self.up(act, self.heap.len() - 1);
    }

    fn pop(&mut self, act: &[f64]) -> Option<usize> {
        let top = *self.heap.first()?;
        let last = self.heap.pop().expect("nonempty");
        self.pos[top as usize] = NOT_IN_HEAP;
        if !self.heap.is_empty() {
            self.heap[0] = last;
            self.pos[last as usize] = 0;
            self.down(act, 0);
        }
        Some(top as usize)
    }

    fn increased(&mut self, act: &[f64], v: usize) {
        if self.contains(v) {
            self.up(act, self.pos[v]);
        }
    }
}

struct Solver {
    var_count: usize,
    clauses: Vec<Clause>,
    learnts: Vec<u32>,
    watches: Vec<Vec<Watch>>,
    values: Vec<i8>,
    level: Vec<u32>,
    reason: Vec<u32>,
    trail: Vec<Lit>,
    trail_lim: Vec<usize>,
    qhead: usize,
    activity: Vec<f64>,
    var_inc: f64,
    cla_inc: f64,
    order: VarHeap,
    phase: Vec<bool>,
    seen: Vec<bool>,
    inconsistent: bool,
    max_learnts: f64,
    budget: u64,
    stats: SolverStats,
}

impl Solver {
    fn new(f: &CnfFormula, config: &SolverConfig) -> Self {
        let n = f.var_count() as usize;
        let mut activity = vec![0.0; n];
        if config.seed != 0 {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(config.seed);
            for a in activity.iter_mut() {
                *a = rng.gen::<f64>() * 1e-5;
            }
        }
        let mut s = Self {
            var_count: n,
            clauses: Vec::with_capacity(f.clause_count()),
            learnts: Vec::new(),
            watches: vec![Vec::new(); 2 * n],
            values: vec![0; n],
            level: vec![0; n],
            reason: vec![NO_REASON; n],
            trail: Vec::with_capacity(n),
            trail_lim: Vec::new(),
            qhead: 0,
            activity,
            var_inc: 1.0,
            cla_inc: 1.0,
            order: VarHeap::new(n),
            phase: vec![false; n],
            seen: vec![false; n],
            inconsistent: false,
            max_learnts: (f.clause_count() as f64 / 3.0).max(5000.0),
            budget: config.conflict_budget,
            stats: SolverStats::default(),
        };
        for v in 0..n {
            s.order.insert(&s.activity, v);
        }
        for c in f.clauses() {
            s.add_original(c);
            if s.inconsistent {
                break;
            }
        }
        s
    }

    fn add_original(&mut self, clause: &[i32]) {
        let mut lits: Vec<Lit> = clause.iter().map(|&l| lit_of(l)).collect();
        lits.sort_unstable();
        lits.dedup();
        if lits.windows(2).any(|w| w[1] == neg(w[0])) {
            return;
        }
        // only level-0 assignments exist while loading
        if lits.iter().any(|&l| lit_value(&self.values, l) == 1) {
            return;
        }
        lits.retain(|&l| lit_value(&self.values, l) == 0);
        match lits.len() {
            0 => self.inconsistent = true,
            1 => {
                self.enqueue(lits[0], NO_REASON);
                if self.propagate().is_some() {
                    self.inconsistent = true;
                }
            }
            _ => {
                self.attach(lits, false, 0);
            }
        }
    }

    fn attach(&mut self, lits: Vec<Lit>, learnt: bool, lbd: u32) -> u32 {
        let cref = self.clauses.len() as u32;
        self.watches[lits[0] as usize].push(Watch { cref, blocker: lits[1] });
        self.watches[lits[1] as usize].push(Watch { cref, blocker: lits[0] });
        self.clauses.push(Clause {
            lits,
            learnt,
            deleted: false,
            lbd,
            activity: 0.0,
        });
        if learnt {
            self.learnts.push(cref);
        }
        cref
    }

    fn decision_level(&self) -> u32 {
        self.trail_lim.len() as u32
    }

    fn enqueue(&mut self, l: Lit, reason: u32) {
        let v = var(l);
        self.values[v] = if l & 1 == 0 { 1 } else { -1 };
        self.level[v] = self.decision_level();
        self.reason[v] = reason;
        self.trail.push(l);
    }

    /// Unit propagation; returns a conflicting clause if one arises.
    fn propagate(&mut self) -> Option<u32> {
        let mut conflict = None;
        while self.qhead < self.trail.len() {
            let p = self.trail[self.qhead];
            self.qhead += 1;
            self.stats.propagations += 1;
            let false_lit = neg(p);
            let mut ws = std::mem::take(&mut self.watches[false_lit as usize]);
            let (mut i, mut j) = (0, 0);
            while i < ws.len() {
                let w = ws[i];
                i += 1;
                if lit_value(&self.values, w.blocker) == 1 {
                    ws[j] = w;
                    j += 1;
                    continue;
                }
                let c = &mut self.clauses[w.cref as usize];
                if c.deleted {
                    continue;
                }
                if c.lits[0] == false_lit {
                    c.lits.swap(0, 1);
                }
                let first = c.lits[0];
                if first != w.blocker && lit_value(&self.values, first) == 1 {
                    ws[j] = Watch { cref: w.cref, blocker: first };
                    j += 1;
                    continue;
                }
                let mut moved = false;
                for k in 2..c.lits.len() {
                    if lit_value(&self.values, c.lits[k]) != -1 {
                        c.lits.swap(1, k);
                        self.watches[c.lits[1] as usize].push(Watch { cref: w.cref, blocker: first });
                        moved = true;
                        break;
                    }
                }
                if moved {
                    continue;
                }
                ws[j] = Watch { cref: w.cref, blocker: first };
                j += 1;
                if lit_value(&self.values, first) == -1 {
                    conflict = Some(w.cref);
                    self.qhead = self.trail.len();
                    while i < ws.len() {
                        ws[j] = ws[i];
                        j += 1;
                        i += 1;
                    }
                } else {
                    self.enqueue(first, w.cref);
                }
            }
            ws.truncate(j);
            self.watches[false_lit as usize] = ws;
            if conflict.is_some() {
                break;
            }
        }
        conflict
    }

    fn bump_var(&mut self, v: usize) {
        self.activity[v] += self.var_inc;
        if self.activity[v] > 1e100 {
            for a in self.activity.iter_mut() {
                *a *= 1e-100;
            }
            self.var_inc *= 1e-100;
        }
        self.order.increased(&self.activity, v);
    }

    fn bump_clause(&mut self, cref: u32) {
        let c = &mut self.clauses[cref as usize];
        if !c.learnt {
            return;
        }
        c.activity += self.cla_inc;
        if c.activity > 1e20 {
            for &l in &self.learnts {
                self.clauses[l as usize].activity *= 1e-20;
            }
            self.cla_inc *= 1e-20;
        }
    }

    /// First-UIP clause with the asserting literal first and the literal of
    /// the backjump level second, plus that level.
    fn analyze(&mut self, conflict: u32) -> (Vec<Lit>, u32) {
        let current = self.decision_level();
        let mut learnt: Vec<Lit> = vec![0];
        let mut pending = 0usize;
        let mut index = self.trail.len();
        let mut cref = conflict;
        let mut asserting: Option<Lit> = None;
        loop {
            self.bump_clause(cref);
            let start = usize::from(asserting.is_some());
            for k in start..self.clauses[cref as usize].lits.len() {
                let q = self.clauses[cref as usize].lits[k];
                let v = var(q);
                if !self.seen[v] && self.level[v] > 0 {
                    self.bump_var(v);
                    self.seen[v] = true;
                    if self.level[v] >= current {
                        pending += 1;
                    } else {
                        learnt.push(q);
                    }
                }
            }
            loop {
                index -= 1;
                if self.seen[var(self.trail[index])] {
                    break;
                }
            }
            let p = self.trail[index];
            asserting = Some(p);
            cref = self.reason[var(p)];
            self.seen[var(p)] = false;
            pending -= 1;
            if pending == 0 {
                break;
            }
        }
        learnt[0] = neg(asserting.expect("conflict at positive level"));

        let mut to_clear: Vec<Lit> = learnt.clone();
        let mut kept = 1;
        for i in 1..learnt.len() {
            let l = learnt[i];
            if self.reason[var(l)] == NO_REASON || !self.redundant(l, &mut to_clear) {
                learnt[kept] = l;
                kept += 1;
            }
        }
        learnt.truncate(kept);
        for l in to_clear {
            self.seen[var(l)] = false;
        }

        let mut back = 0;
        if learnt.len() > 1 {
            let mut best = 1;
            for i in 2..learnt.len() {
                if self.level[var(learnt[i])] > self.level[var(learnt[best])] {
                    best = i;
                }
            }
            learnt.swap(1, best);
            back = self.level[var(learnt[1])];
        }
        (learnt, back)
    }

    /// Is `p` implied by the other literals already marked seen?
    fn redundant(&mut self, p: Lit, to_clear: &mut Vec<Lit>) -> bool {
        let top = to_clear.len();
        let mut stack = vec![p];
        while let Some(q) = stack.pop() {
            let r = self.reason[var(q)] as usize;
            for k in 1..self.clauses[r].lits.len() {
                let l = self.clauses[r].lits[k];
                let v = var(l);
                if self.seen[v] || self.level[v] == 0 {
                    continue;
                }
                if self.reason[v] == NO_REASON {
                    for x in to_clear.drain(top..) {
                        self.seen[var(x)] = false;
                    }
                    return false;
                }
                self.seen[v] = true;
                stack.push(l);
                to_clear.push(l);
            }
        }
        true
    }

    fn lbd(&self, lits: &[Lit]) -> u32 {
        let mut levels: Vec<u32> = lits.iter().map(|&l| self.level[var(l)]).collect();
        levels.sort_unstable();
        levels.dedup();
        levels.len() as u32
    }

    fn cancel_until(&mut self, lvl: u32) {
        if self.decision_level() <= lvl {
            return;
        }
        let start = self.trail_lim[lvl as usize];
        for i in (start..self.trail.len()).rev() {
            let l = self.trail[i];
            let v = var(l);
            self.phase[v] = l & 1 == 0;
            self.values[v] = 0;
            self.reason[v] = NO_REASON;
            self.order.insert(&self.activity, v);
        }
        self.trail.truncate(start);
        self.trail_lim.truncate(lvl as usize);
        self.qhead = start;
    }

    fn locked(&self, cref: u32) -> bool {
        let first = self.clauses[cref as usize].lits[0];
        lit_value(&self.values, first) == 1 && self.reason[var(first)] == cref
    }

    /// Drops about half of the learned clauses, keeping glue clauses and
    /// those currently serving as reasons.
    fn reduce(&mut self) {
        let mut ranked = std::mem::take(&mut self.learnts);
        ranked.sort_by(|&a, &b| {
            let (x, y) = (&self.clauses[a as usize], &self.clauses[b as usize]);
            x.lbd
                .cmp(&y.lbd)
                .then(y.activity.total_cmp(&x.activity))
                .then(a.cmp(&b))
        });
        let half = ranked.len() / 2;
        let mut keep = Vec::with_capacity(ranked.len());
        for (i, &cref) in ranked.iter().enumerate() {
            if i < half || self.clauses[cref as usize].lbd <= 2 || self.locked(cref) {
                keep.push(cref);
            } else {
                let c = &mut self.clauses[cref as usize];
                c.deleted = true;
                c.lits = Vec::new();
                self.stats.deleted += 1;
            }
        }
        keep.sort_unstable();
        self.learnts = keep;
        let clauses = &self.clauses;
        for ws in self.watches.iter_mut() {
            ws.retain(|w| !clauses[w.cref as usize].deleted);
        }
        self.max_learnts *= 1.1;
    }

    fn pick_branch(&mut self) -> Option<Lit> {
        while let Some(v) = self.order.pop(&self.activity) {
            if self.values[v] == 0 {
                return Some(((v as u32) << 1) | u32::from(!self.phase[v]));
            }
        }
        None
    }

    fn search(&mut self) -> Result<bool> {
        if self.inconsistent || self.propagate().is_some() {
            return Ok(false);
        }
        let mut restart_limit = RESTART_FIRST;
        let mut since_restart = 0u64;
        loop {
            if let Some(conflict) = self.propagate() {
                self.stats.conflicts += 1;
                since_restart += 1;
                if self.decision_level() == 0 {
                    return Ok(false);
                }
                if self.stats.conflicts > self.budget {
                    return Err(Error::Resource(format!(
                        "conflict budget of {} exhausted",
                        self.budget
                    )));
                }
                let (learnt, back) = self.analyze(conflict);
                self.cancel_until(back);
                self.stats.learned += 1;
                if learnt.len() == 1 {
                    self.enqueue(learnt[0], NO_REASON);
                } else {
                    let lbd = self.lbd(&learnt);
                    let first = learnt[0];
                    let cref = self.attach(learnt, true, lbd);
                    self.bump_clause(cref);
                    self.enqueue(first, cref);
                }
                self.var_inc /= VAR_DECAY;
                self.cla_inc /= CLAUSE_DECAY;
            } else {
                if since_restart as f64 >= restart_limit {
                    self.cancel_until(0);
                    self.stats.restarts += 1;
                    since_restart = 0;
                    restart_limit *= RESTART_GROWTH;
                    continue;
                }
                if self.learnts.len() as f64 - self.trail.len() as f64 >= self.max_learnts {
                    self.reduce();
                }
                match self.pick_branch() {
                    None => return Ok(true),
                    Some(l) => {
                        self.stats.decisions += 1;
                        self.trail_lim.push(self.trail.len());
                        self.enqueue(l, NO_REASON);
                    }
                }
            }
        }
    }

    fn model(&self) -> Vec<bool> {
        let mut out = vec![false; self.var_count + 1];
        for v in 0..self.var_count {
            out[v + 1] = self.values[v] == 1;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cnf(vars: u32, clauses: &[&[i32]]) -> CnfFormula {
        CnfFormula::new(vars, clauses.iter().map(|c| c.to_vec()).collect()).unwrap()
    }

    #[test]
    fn trivial_cases() {
        assert!(solve(&cnf(0, &[])).unwrap().is_sat());
        assert!(solve(&cnf(3, &[])).unwrap().is_sat());
        assert!(!solve(&cnf(1, &[&[1], &[-1]])).unwrap().is_sat());
        let out = solve(&cnf(2, &[&[1, 2], &[-1], &[1, -2, 2]])).unwrap();
        assert_eq!(out.assignment().unwrap(), &[false, false, true]);
    }

    /// Pigeonhole: `holes + 1` pigeons into `holes` holes.
    fn pigeonhole(holes: u32) -> CnfFormula {
        let pigeons = holes + 1;
        let x = |p: u32, h: u32| (p * holes + h + 1) as i32;
        let mut c: Vec<Vec<i32>> = (0..pigeons).map(|p| (0..holes).map(|h| x(p, h)).collect()).collect();
        for h in 0..holes {
            for p in 0..pigeons {
                for q in p + 1..pigeons {
                    c.push(vec![-x(p, h), -x(q, h)]);
                }
            }
        }
        CnfFormula::new(pigeons * holes, c).unwrap()
    }

    #[test]
    fn pigeonhole_is_unsat() {
        for h in 1..=6 {
            assert!(!solve(&pigeonhole(h)).unwrap().is_sat(), "php {h}");
        }
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let cfg = SolverConfig {
            conflict_budget: 5,
            seed: 0,
        };
        assert!(matches!(solve_with(&pigeonhole(7), &cfg), Err(Error::Resource(_))));
    }

    #[test]
    fn agrees_with_truth_table_on_random_3sat() {
        use rand::Rng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for round in 0..300 {
            let vars = rng.gen_range(1..=10u32);
            let m = rng.gen_range(0..=45);
            let clauses: Vec<Vec<i32>> = (0..m)
                .map(|_| {
                    (0..rng.gen_range(1..=3))
                        .map(|_| {
                            let v = rng.gen_range(1..=vars) as i32;
                            if rng.gen_bool(0.5) { v } else { -v }
                        })
                        .collect()
                })
                .collect();
            let f = CnfFormula::new(vars, clauses).unwrap();
            let brute = (0u32..1 << vars).any(|bits| {
                let a: Vec<bool> = std::iter::once(false)
                    .chain((0..vars).map(|i| bits >> i & 1 == 1))
                    .collect();
                f.is_satisfied_by(&a)
            });
            let seed = round % 3;
            let (out, _) = solve_with(&f, &SolverConfig { conflict_budget: 1_000_000, seed }).unwrap();
            assert_eq!(out.is_sat(), brute, "round {round}");
        }
    }

    #[test]
    fn outcome_rejects_bad_assignment() {
        let f = cnf(1, &[&[1]]);
        assert!(SatOutcome::satisfiable(&f, vec![false, false]).is_err());
    }

    #[test]
    fn solution_text_round_trip() {
        let f = cnf(3, &[&[1, -2], &[3]]);
        let out = solve(&f).unwrap();
        let text = out.to_solution_text();
        assert!(text.starts_with("s SATISFIABLE\nv "));
        assert_eq!(SatOutcome::from_solution_text(&f, &text).unwrap(), out);
        let unsat = SatOutcome::unsatisfiable();
        assert_eq!(unsat.to_solution_text(), "s UNSATISFIABLE\n");
        assert_eq!(SatOutcome::from_solution_text(&f, "s UNSATISFIABLE\n").unwrap(), unsat);
    }
}
