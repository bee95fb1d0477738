//! Order of the automorphism group of a small graph.
//!
//! Individualization-refinement with a stabilizer chain: fix a vertex `v` of
//! the first non-trivial cell, count the vertices `w` of that cell for which
//! some automorphism maps `v` to `w` (the orbit of `v` under the current
//! stabilizer), then recurse into the stabilizer of `v`. The group order is
//! the product of the orbit sizes.

use crate::graph::FiniteGraph;

/// Ordered partition of the vertex set.
type Partition = Vec<Vec<usize>>;

/// Refines `p` to the coarsest equitable partition below it. New cells are
/// ordered by their (isomorphism invariant) signatures, so the result is
/// compatible with any automorphism that respects `p`.
fn refine(g: &FiniteGraph, mut p: Partition) -> Partition {
    loop {
        let cell_of = cell_index(&p, g.vertex_count());
        let mut next: Partition = Vec::with_capacity(p.len());
        for cell in &p {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut counts = vec![0usize; p.len()];
                    for &w in g.neighbors(v) {
                        counts[cell_of[w]] += 1;
                    }
                    (counts, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        if next.len() == p.len() {
            return next;
        }
        p = next;
    }
}

fn individualize(p: &Partition, cell: usize, v: usize) -> Partition {
    let mut out = Vec::with_capacity(p.len() + 1);
    out.extend_from_slice(&p[..cell]);
    out.push(vec![v]);
    out.push(p[cell].iter().copied().filter(|&w| w != v).collect());
    out.extend_from_slice(&p[cell + 1..]);
    out
}

fn shapes_match(a: &Partition, b: &Partition) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.len() == y.len())
}

fn is_automorphism(g: &FiniteGraph, map: &[usize]) -> bool {
    g.edges().all(|(u, v)| g.has_edge(map[u], map[v]))
}

fn cell_index(p: &Partition, n: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for (ci, cell) in p.iter().enumerate() {
        for &v in cell {
            out[v] = ci;
        }
    }
    out
}

/// Searches for an automorphism that carries the ordered partition `left`
/// onto `right` and maps every cell of the base partition to itself.
fn exists_isomorphic_extension(
    g: &FiniteGraph,
    base: &[usize],
    left: &Partition,
    right: &Partition,
) -> bool {
    if !shapes_match(left, right) {
        return false;
    }
    let Some(ci) = left.iter().position(|c| c.len() > 1) else {
        let mut map = vec![0usize; g.vertex_count()];
        for (a, b) in left.iter().zip(right) {
            map[a[0]] = b[0];
        }
        return (0..map.len()).all(|u| base[u] == base[map[u]]) && is_automorphism(g, &map);
    };
    let v = left[ci][0];
    let l = refine(g, individualize(left, ci, v));
    right[ci].iter().any(|&w| {
        let r = refine(g, individualize(right, ci, w));
        exists_isomorphic_extension(g, base, &l, &r)
    })
}

fn stabilizer_order(g: &FiniteGraph, p: &Partition) -> u128 {
    let Some(ci) = p.iter().position(|c| c.len() > 1) else {
        return 1;
    };
    let v = p[ci][0];
    let base = cell_index(p, g.vertex_count());
    let fixed = refine(g, individualize(p, ci, v));
    let orbit = p[ci]
        .iter()
        .filter(|&&w| {
            w == v || {
                let r = refine(g, individualize(p, ci, w));
                exists_isomorphic_extension(g, &base, &fixed, &r)
            }
        })
        .count() as u128;
    orbit * stabilizer_order(g, &fixed)
}

/// Exact order of `Aut(g)`.
pub fn automorphism_order(g: &FiniteGraph) -> u128 {
    if g.vertex_count() == 0 {
        return 1;
    }
    let start = refine(g, vec![(0..g.vertex_count()).collect()]);
    stabilizer_order(g, &start)
}
