//! Exact chromatic number of small graphs by branch and bound.
//!
//! Independent of the SAT path: bitmask adjacency, a maximum clique as the
//! lower bound and DSATUR-ordered backtracking for each candidate `k`.

use crate::error::{Error, Result};
use crate::graph::{Coloring, FiniteGraph};

pub const EXACT_VERTEX_LIMIT: usize = 24;

fn masks(g: &FiniteGraph) -> Vec<u32> {
    (0..g.vertex_count())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect()
}

fn max_clique(adj: &[u32], candidates: u32, size: u32, best: &mut u32) {
    if candidates == 0 {
        *best = (*best).max(size);
        return;
    }
    if size + candidates.count_ones() <= *best {
        return;
    }
    let mut rest = candidates;
    while rest != 0 {
        if size + rest.count_ones() <= *best {
            return;
        }
        let v = rest.trailing_zeros() as usize;
        rest &= !(1 << v);
        max_clique(adj, rest & adj[v], size + 1, best);
    }
}

pub fn clique_number(g: &FiniteGraph) -> Result<u32> {
    check_size(g)?;
    let adj = masks(g);
    let all = (1u32 << g.vertex_count()) - 1;
    let mut best = 0;
    max_clique(&adj, all, 0, &mut best);
    Ok(best)
}

fn check_size(g: &FiniteGraph) -> Result<()> {
    if g.vertex_count() > EXACT_VERTEX_LIMIT {
        return Err(Error::Refused(format!(
            "exact coloring limited to {EXACT_VERTEX_LIMIT} vertices, graph has {}",
            g.vertex_count()
        )));
    }
    Ok(())
}

struct Search<'a> {
    adj: &'a [u32],
    colors: Vec<u32>,
    k: u32,
}

impl Search<'_> {
    /// Colors available to `v`, as a bitmask over `0..k`.
    fn free(&self, v: usize) -> u32 {
        let mut used = 0u32;
        let mut nb = self.adj[v];
        while nb != 0 {
            let w = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            if self.colors[w] != 0 {
                used |= 1 << (self.colors[w] - 1);
            }
        }
        !used & ((1u32 << self.k) - 1)
    }

    fn run(&mut self, remaining: usize, max_used: u32) -> bool {
        if remaining == 0 {
            return true;
        }
        // DSATUR: fewest free colors first, ties by degree
        let (v, free) = (0..self.colors.len())
            .filter(|&v| self.colors[v] == 0)
            .map(|v| (v, self.free(v)))
            .min_by_key(|&(v, f)| (f.count_ones(), std::cmp::Reverse(self.adj[v].count_ones())))
            .expect("an uncolored vertex remains");
        let mut options = free;
        while options != 0 {
            let c = options.trailing_zeros() + 1;
            options &= options - 1;
            // colors above max_used + 1 are interchangeable
            if c > max_used + 1 {
                break;
            }
            self.colors[v] = c;
            if self.run(remaining - 1, max_used.max(c)) {
                return true;
            }
        }
        self.colors[v] = 0;
        false
    }
}

/// A proper `k`-coloring if one exists.
pub fn find_k_coloring(g: &FiniteGraph, k: u32) -> Result<Option<Coloring>> {
    check_size(g)?;
    let n = g.vertex_count();
    if n == 0 {
        return Ok(Some(Coloring::new(Vec::new(), k.max(1))?));
    }
    if k == 0 {
        return Ok(None);
    }
    let adj = masks(g);
    let mut s = Search {
        adj: &adj,
        colors: vec![0; n],
        k: k.min(n as u32),
    };
    if s.run(n, 0) {
        Ok(Some(Coloring::new(s.colors, k)?))
    } else {
        Ok(None)
    }
}

/// Exact `χ(g)` for graphs with at most [`EXACT_VERTEX_LIMIT`] vertices.
pub fn chromatic_number_exact_small(g: &FiniteGraph) -> Result<u32> {
    check_size(g)?;
    if g.vertex_count() == 0 {
        return Ok(0);
    }
    let mut k = clique_number(g)?.max(1);
    loop {
        if find_k_coloring(g, k)?.is_some() {
            return Ok(k);
        }
        k += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_proper_coloring;

    fn complete(n: usize) -> FiniteGraph {
        FiniteGraph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
    }

    fn cycle(n: usize) -> FiniteGraph {
        FiniteGraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn basic_graphs() {
        assert_eq!(chromatic_number_exact_small(&complete(3)).unwrap(), 3);
        assert_eq!(chromatic_number_exact_small(&cycle(5)).unwrap(), 3);
        assert_eq!(chromatic_number_exact_small(&cycle(6)).unwrap(), 2);
        let star = FiniteGraph::from_edges(9, (1..9).map(|i| (0, i))).unwrap();
        assert_eq!(chromatic_number_exact_small(&star).unwrap(), 2);
        assert_eq!(chromatic_number_exact_small(&FiniteGraph::from_edges(3, []).unwrap()).unwrap(), 1);
    }

    #[test]
    fn mycielski_grotzsch() {
        // triangle-free with chromatic number 4
        let mut e: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        for i in 0..5 {
            e.push((5 + i, (i + 1) % 5));
            e.push((5 + i, (i + 4) % 5));
            e.push((5 + i, 10));
        }
        let g = FiniteGraph::from_edges(11, e).unwrap();
        assert_eq!(clique_number(&g).unwrap(), 2);
        assert_eq!(chromatic_number_exact_small(&g).unwrap(), 4);
        let col = find_k_coloring(&g, 4).unwrap().unwrap();
        assert!(is_proper_coloring(&g, &col).unwrap());
        assert!(find_k_coloring(&g, 3).unwrap().is_none());
    }

    #[test]
    fn refuses_large_graphs() {
        assert!(matches!(
            chromatic_number_exact_small(&cycle(25)),
            Err(Error::Refused(_))
        ));
    }
}
