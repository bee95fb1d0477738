//! Finite graphs cut out of a lattice Voronoi graph.
//!
//! Two constructions matter: the ball `C_d` of radius `d` around the origin
//! (an induced subgraph, so its chromatic number bounds the lattice's from
//! below) and the discrete torus `Z^n / cZ^n` (whose colorings extend
//! periodically, bounding from above).

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::voronoi::GeneratorSet;

/// Simple undirected graph on `0..vertex_count` with integer vector labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteGraph {
    labels: Vec<Vec<i64>>,
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl FiniteGraph {
    /// Builds a simple graph, dropping duplicate edges. Loops are rejected.
    pub fn from_edges(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let labels = (0..vertex_count).map(|i| vec![i as i64]).collect();
        Self::with_labels(labels, edges)
    }

    pub fn with_labels(
        labels: Vec<Vec<i64>>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let n = labels.len();
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(domain(format!("edge ({u}, {v}) out of range for {n} vertices")));
            }
            if u == v {
                return Err(domain(format!("loop at vertex {u}")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let mut edge_count = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            edge_count += list.len();
        }
        Ok(Self {
            labels,
            adjacency,
            edge_count: edge_count / 2,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn labels(&self) -> &[Vec<i64>] {
        &self.labels
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Plain edge list: a `p <n> <m>` header, then one 1-based `u v` pair per line.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("p {} {}\n", self.vertex_count(), self.edge_count());
        for (u, v) in self.edges() {
            writeln!(out, "{} {}", u + 1, v + 1).unwrap();
        }
        out
    }

    pub fn to_json(&self) -> Result<String> {
        #[derive(Serialize)]
        struct Export<'a> {
            vertices: usize,
            edges: Vec<[usize; 2]>,
            labels: &'a [Vec<i64>],
        }
        let export = Export {
            vertices: self.vertex_count(),
            edges: self.edges().map(|(u, v)| [u + 1, v + 1]).collect(),
            labels: &self.labels,
        };
        Ok(serde_json::to_string_pretty(&export)?)
    }
}

/// Assignment of colors `1..=k` to the vertices of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    colors: Vec<u32>,
    k: u32,
}

impl Coloring {
    pub fn new(colors: Vec<u32>, k: u32) -> Result<Self> {
        if let Some(bad) = colors.iter().find(|&&c| c == 0 || c > k) {
            return Err(domain(format!("color {bad} outside 1..={k}")));
        }
        Ok(Self { colors, k })
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Number of distinct colors actually used.
    pub fn used_colors(&self) -> usize {
        let mut seen: Vec<u32> = self.colors.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }
}

pub fn is_proper_coloring(g: &FiniteGraph, col: &Coloring) -> Result<bool> {
    if col.len() != g.vertex_count() {
        return Err(domain(format!(
            "coloring covers {} vertices, graph has {}",
            col.len(),
            g.vertex_count()
        )));
    }
    Ok(g.edges().all(|(u, v)| col.colors[u] != col.colors[v]))
}

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// The subgraph of the Cayley graph induced on all lattice points within
/// graph distance `d` of the origin. Vertex 0 is the origin; vertices are
/// listed in breadth-first order.
pub fn ball_graph(s: &GeneratorSet, d: u32) -> Result<FiniteGraph> {
    let gens = s.expanded();
    if d > 0 && gens.is_empty() {
        return Err(domain("empty generator set"));
    }
    let origin = vec![0i64; s.dim()];
    let mut index: HashMap<Vec<i64>, usize> = HashMap::from([(origin.clone(), 0)]);
    let mut labels = vec![origin];
    let mut frontier = 0..1;
    for _ in 0..d {
        let start = labels.len();
        for u in frontier.clone() {
            for g in &gens {
                let w = add(&labels[u], g);
                if !index.contains_key(&w) {
                    index.insert(w.clone(), labels.len());
                    labels.push(w);
                }
            }
        }
        frontier = start..labels.len();
    }
    let mut edges = Vec::new();
    for (u, x) in labels.iter().enumerate() {
        for g in &gens {
            if let Some(&v) = index.get(&add(x, g)) {
                if u < v {
                    edges.push((u, v));
                }
            }
        }
    }
    FiniteGraph::with_labels(labels, edges)
}

/// True iff no generator lies in `cZ^n`.
pub fn sublattice_avoids_generators(s: &GeneratorSet, c: u32) -> bool {
    let c = i64::from(c);
    c != 0
        && !s
            .vectors()
            .iter()
            .any(|v| v.iter().all(|x| x.rem_euclid(c) == 0))
}

/// Label of vertex `index` of the torus `Z^n / cZ^n`: base-`c` digits, most
/// significant first.
pub fn torus_label(index: usize, n: usize, c: u32) -> Vec<i64> {
    let c = c as usize;
    let mut out = vec![0i64; n];
    let mut rest = index;
    for slot in out.iter_mut().rev() {
        *slot = (rest % c) as i64;
        rest /= c;
    }
    out
}

/// Index of the torus vertex containing the integer vector `x`.
pub fn torus_index(x: &[i64], c: u32) -> usize {
    let ci = i64::from(c);
    x.iter()
        .fold(0usize, |acc, &v| acc * c as usize + v.rem_euclid(ci) as usize)
}

/// The discrete torus `Z^n / cZ^n`: cosets `x̄, ȳ` are adjacent iff `x - y`
/// is congruent to a generator mod `c`.
pub fn torus_graph(s: &GeneratorSet, c: u32) -> Result<FiniteGraph> {
    if c < 2 || !sublattice_avoids_generators(s, c) {
        return Err(domain(format!(
            "sublattice {c}Z^n contains a Voronoi vector"
        )));
    }
    let n = s.dim();
    let count = (c as usize)
        .checked_pow(n as u32)
        .ok_or_else(|| domain("torus too large"))?;
    let labels: Vec<Vec<i64>> = (0..count).map(|i| torus_label(i, n, c)).collect();
    let gens = s.expanded();
    let mut edges = Vec::with_capacity(count * gens.len() / 2);
    for (u, x) in labels.iter().enumerate() {
        for g in &gens {
            let v = torus_index(&add(x, g), c);
            if u < v {
                edges.push((u, v));
            }
        }
    }
    FiniteGraph::with_labels(labels, edges)
}
