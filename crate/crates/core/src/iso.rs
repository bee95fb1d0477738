//! Isomorphism of Cayley graphs of lattices.
//!
//! Every isomorphism between `Cayley(Z^n, S)` and `Cayley(Z^n, S')` that fixes
//! the origin is linear, so it is pinned down by the images of one basis
//! contained in `S`. We fix such a basis, try every ordered basis of `S'` as
//! its image, and keep the first integral map with `|det| = 1` that carries
//! `S` onto `S'`. Failure certifies that the graphs are not isomorphic.
//! Partial tuples are dropped as soon as some `b_i ± b_j` is a generator on
//! one side but not the other.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::automorphism::automorphism_order;
use crate::catalog::{catalog, CatalogEntry, GRAPH_CLASSES};
use crate::error::{domain, Result};
use crate::graph::ball_graph;
use crate::linalg;
use crate::voronoi::{strict_voronoi_vectors, GeneratorSet};

/// Integer matrix with determinant `±1`, acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnimodularMap {
    n: usize,
    matrix: Vec<Vec<i64>>,
}

impl UnimodularMap {
    pub fn new(matrix: Vec<Vec<i64>>) -> Result<Self> {
        let n = matrix.len();
        if n == 0 || matrix.iter().any(|r| r.len() != n) {
            return Err(domain("unimodular map must be a nonempty square matrix"));
        }
        if linalg::det_i64(&matrix).abs() != 1 {
            return Err(domain("determinant is not ±1"));
        }
        Ok(Self { n, matrix })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            n,
            matrix: linalg::identity_i64(n),
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn determinant(&self) -> i64 {
        linalg::det_i64(&self.matrix) as i64
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        linalg::mat_vec_i64(&self.matrix, v)
    }

    pub fn inverse(&self) -> Self {
        Self {
            n: self.n,
            matrix: linalg::unimodular_inverse(&self.matrix).expect("unimodular by construction"),
        }
    }

    /// True iff this map carries `S ∪ -S` onto `S' ∪ -S'`.
    pub fn maps_onto(&self, s: &GeneratorSet, target: &GeneratorSet) -> bool {
        if s.dim() != self.n || target.dim() != self.n || s.pair_count() != target.pair_count() {
            return false;
        }
        let want: HashSet<Vec<i64>> = target.expanded().into_iter().collect();
        let image: HashSet<Vec<i64>> = s.expanded().iter().map(|v| self.apply(v)).collect();
        image == want
    }
}

fn check_generating(s: &GeneratorSet) -> Result<()> {
    let gens = s.expanded();
    if linalg::rank_i64(&gens) != s.dim() {
        return Err(domain("generator set is rank deficient"));
    }
    if linalg::maximal_minor_gcd(&gens, s.dim()) != 1 {
        return Err(domain("generator set spans a proper sublattice of Z^n"));
    }
    Ok(())
}

/// First linearly independent `n`-tuple met scanning the sorted `S ∪ -S`.
fn first_basis(gens: &[Vec<i64>], n: usize) -> Vec<Vec<i64>> {
    let mut basis: Vec<Vec<i64>> = Vec::with_capacity(n);
    for g in gens {
        basis.push(g.clone());
        if linalg::rank_i64(&basis) < basis.len() {
            basis.pop();
        }
        if basis.len() == n {
            break;
        }
    }
    basis
}

struct Enumerator<'a> {
    n: usize,
    targets: &'a [Vec<i64>],
    /// `adj(B)` for the source basis `B` (basis vectors as columns).
    adj: Vec<Vec<i128>>,
    det: i128,
    source: &'a GeneratorSet,
    wanted: HashSet<Vec<i64>>,
    /// For source basis vectors `i < j`: are `b_i + b_j` and `b_i - b_j`
    /// generators? A linear isomorphism must preserve both answers.
    source_links: Vec<Vec<(bool, bool)>>,
    chosen: Vec<usize>,
}

fn links(u: &[i64], v: &[i64], gens: &HashSet<Vec<i64>>) -> (bool, bool) {
    let sum: Vec<i64> = u.iter().zip(v).map(|(a, b)| a + b).collect();
    let diff: Vec<i64> = u.iter().zip(v).map(|(a, b)| a - b).collect();
    (gens.contains(&sum), gens.contains(&diff))
}

impl Enumerator<'_> {
    /// `A = B' adj(B) / det(B)` for the chosen images `B'`, if integral.
    fn candidate(&self) -> Option<Vec<Vec<i64>>> {
        let n = self.n;
        let mut a = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut acc: i128 = 0;
                for k in 0..n {
                    acc += i128::from(self.targets[self.chosen[k]][i]) * self.adj[k][j];
                }
                if acc % self.det != 0 {
                    return None;
                }
                a[i][j] = i64::try_from(acc / self.det).ok()?;
            }
        }
        Some(a)
    }

    fn accepts(&self, a: &[Vec<i64>]) -> bool {
        if linalg::det_i64(a).abs() != 1 {
            return false;
        }
        self.source
            .expanded()
            .iter()
            .all(|v| self.wanted.contains(&linalg::mat_vec_i64(a, v)))
    }

    fn search(&mut self) -> Option<Vec<Vec<i64>>> {
        if self.chosen.len() == self.n {
            let a = self.candidate()?;
            return self.accepts(&a).then_some(a);
        }
        for t in 0..self.targets.len() {
            if self.chosen.contains(&t) {
                continue;
            }
            let j = self.chosen.len();
            let consistent = self.chosen.iter().enumerate().all(|(i, &c)| {
                links(&self.targets[c], &self.targets[t], &self.wanted) == self.source_links[i][j]
            });
            if !consistent {
                continue;
            }
            self.chosen.push(t);
            let independent = {
                let rows: Vec<Vec<i64>> =
                    self.chosen.iter().map(|&i| self.targets[i].clone()).collect();
                linalg::rank_i64(&rows) == rows.len()
            };
            if independent {
                if let Some(a) = self.search() {
                    return Some(a);
                }
            }
            self.chosen.pop();
        }
        None
    }
}

/// A unimodular `A` with `A(S ∪ -S) = S' ∪ -S'`, or `None` when the Cayley
/// graphs are not isomorphic.
pub fn find_linear_isomorphism(
    s: &GeneratorSet,
    target: &GeneratorSet,
) -> Result<Option<UnimodularMap>> {
    check_generating(s)?;
    check_generating(target)?;
    if s.dim() != target.dim() || s.pair_count() != target.pair_count() {
        return Ok(None);
    }
    let n = s.dim();
    if s.same_pairs(target) {
        return Ok(Some(UnimodularMap::identity(n)));
    }
    let basis = first_basis(&s.expanded(), n);
    let columns = linalg::transpose(&basis);
    let targets = target.expanded();
    let source_set: HashSet<Vec<i64>> = s.expanded().into_iter().collect();
    let source_links = (0..n)
        .map(|i| (0..n).map(|j| links(&basis[i], &basis[j], &source_set)).collect())
        .collect();
    let mut e = Enumerator {
        n,
        targets: &targets,
        adj: linalg::adjugate_i64(&columns),
        det: linalg::det_i64(&columns),
        source: s,
        wanted: targets.iter().cloned().collect(),
        source_links,
        chosen: Vec::with_capacity(n),
    };
    Ok(e.search().map(|matrix| UnimodularMap { n, matrix }))
}

/// Regularity plus the edge count and automorphism group order of the unit
/// ball graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Signature {
    pub r: usize,
    pub e1: usize,
    pub aut: u128,
}

pub fn invariant_signature(s: &GeneratorSet) -> Result<Signature> {
    let c1 = ball_graph(s, 1)?;
    Ok(Signature {
        r: 2 * s.pair_count(),
        e1: c1.edge_count(),
        aut: automorphism_order(&c1),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct IsoWitness {
    pub from: String,
    pub to: String,
    pub map: UnimodularMap,
}

#[derive(Clone, Debug, Serialize)]
pub struct IsoClass {
    pub class_id: u8,
    pub graph_name: String,
    pub signature: Signature,
    pub members: Vec<String>,
    pub representative: String,
    /// Non-identity maps used to merge members with different generator sets.
    pub witnesses: Vec<IsoWitness>,
}

fn catalog_rank(symbol: &str) -> (usize, String) {
    let pos = catalog()
        .iter()
        .position(|e| e.symbol == symbol)
        .unwrap_or(usize::MAX);
    (pos, symbol.to_string())
}

/// Groups entries into Cayley-graph isomorphism classes.
///
/// Entries are bucketed by [`Signature`]; pairs in different buckets are
/// non-isomorphic outright, and within a bucket each entry is compared with
/// the first member of every class found so far.
pub fn classify(entries: &[CatalogEntry]) -> Result<Vec<IsoClass>> {
    let prepared: Vec<(GeneratorSet, Signature)> = entries
        .par_iter()
        .map(|e| {
            let s = strict_voronoi_vectors(&e.form())?;
            let sig = invariant_signature(&s)?;
            Ok((s, sig))
        })
        .collect::<Result<_>>()?;

    let mut buckets: BTreeMap<Signature, Vec<usize>> = BTreeMap::new();
    for (i, (_, sig)) in prepared.iter().enumerate() {
        buckets.entry(*sig).or_default().push(i);
    }

    let mut classes: Vec<IsoClass> = Vec::new();
    for (sig, mut idx) in buckets {
        idx.sort_by_key(|&i| catalog_rank(&entries[i].symbol));
        let mut groups: Vec<(usize, Vec<usize>, Vec<IsoWitness>)> = Vec::new();
        for i in idx {
            let mut placed = false;
            for (head, members, witnesses) in groups.iter_mut() {
                if let Some(map) = find_linear_isomorphism(&prepared[i].0, &prepared[*head].0)? {
                    if !prepared[i].0.same_pairs(&prepared[*head].0) {
                        witnesses.push(IsoWitness {
                            from: entries[i].symbol.clone(),
                            to: entries[*head].symbol.clone(),
                            map,
                        });
                    }
                    members.push(i);
                    placed = true;
                    break;
                }
            }
            if !placed {
                groups.push((i, vec![i], Vec::new()));
            }
        }
        for (_, members, witnesses) in groups {
            let names: Vec<String> = members.iter().map(|&i| entries[i].symbol.clone()).collect();
            let known = GRAPH_CLASSES.iter().find(|c| {
                c.r as usize == sig.r && c.edges as usize == sig.e1 && u128::from(c.aut_order) == sig.aut
            });
            let (class_id, graph_name, representative) = match known {
                Some(c) => (
                    c.id,
                    c.graph_name.to_string(),
                    if names.iter().any(|m| m == c.representative) {
                        c.representative.to_string()
                    } else {
                        names[0].clone()
                    },
                ),
                None => (0, format!("V_{}", sig.r), names[0].clone()),
            };
            classes.push(IsoClass {
                class_id,
                graph_name,
                signature: sig,
                members: names,
                representative,
                witnesses,
            });
        }
    }
    // known classes in table order, anything unrecognized afterwards
    classes.sort_by(|a, b| {
        let ka = (a.class_id == 0, a.class_id, std::cmp::Reverse(a.signature.r), a.signature);
        let kb = (b.class_id == 0, b.class_id, std::cmp::Reverse(b.signature.r), b.signature);
        ka.cmp(&kb)
    });
    Ok(classes)
}
