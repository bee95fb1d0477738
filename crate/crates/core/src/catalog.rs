//! The 52 Delaunay subdivision types of quaternary forms, as embedded data.
//!
//! Every entry records the ray multiset of a representative form together with
//! its published strict Voronoi vectors (one per `±` pair). It also carries
//! the secondary cone dimension and its Voronoi graph class, whose chromatic
//! number is copied onto the entry. The `expected_*` fields are oracles for the checks in
//! this crate; no computation reads them as input.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::qform::{build_form, QuadraticForm, RayIndex};

/// The seventeen candidate vectors `v1..=v17`, one per `±` pair.
pub const CANDIDATE_VECTORS: [[i64; 4]; 17] = [
    [0, 0, 0, 1],
    [0, 0, 1, -1],
    [0, 0, 1, 0],
    [0, 0, 1, 1],
    [0, 1, 0, 0],
    [0, 1, 0, 1],
    [0, 1, 1, 0],
    [0, 1, 1, 1],
    [1, -1, 0, 0],
    [1, 0, 0, 0],
    [1, 0, 0, 1],
    [1, 0, 1, 0],
    [1, 0, 1, 1],
    [1, 1, 0, 0],
    [1, 1, 0, 1],
    [1, 1, 1, 0],
    [1, 1, 1, 1],
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub symbol: String,
    pub zonotopal: bool,
    pub rays: Vec<RayIndex>,
    #[serde(rename = "dim")]
    pub secondary_cone_dim: u32,
    /// One representative per `±` pair.
    #[serde(rename = "voronoi")]
    pub expected_voronoi: Vec<[i64; 4]>,
    #[serde(rename = "chi")]
    pub expected_chi: u32,
    #[serde(rename = "c")]
    pub torus_scale_c: u32,
    /// Row of the Voronoi graph classification this entry belongs to.
    #[serde(skip)]
    pub expected_class: u8,
}

impl CatalogEntry {
    pub fn form(&self) -> QuadraticForm {
        build_form(&self.rays).expect("catalog ray multisets are nonempty")
    }

    /// Number of strict Voronoi vectors, counting both signs.
    pub fn expected_vector_count(&self) -> usize {
        2 * self.expected_voronoi.len()
    }

    pub fn expected_vectors(&self) -> Vec<Vec<i64>> {
        self.expected_voronoi.iter().map(|v| v.to_vec()).collect()
    }
}

/// One row of the classification of four-dimensional Voronoi graphs, with the
/// torus data used to pin down its chromatic number.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphClass {
    pub id: u8,
    pub graph_name: &'static str,
    /// Regularity of the Voronoi graph.
    pub r: u32,
    /// Edges of the radius-one ball graph.
    pub edges: u32,
    /// Automorphism group order of the radius-one ball graph.
    pub aut_order: u64,
    pub members: &'static [&'static str],
    /// Lattice used for the torus bound.
    pub representative: &'static str,
    pub c: u32,
    pub chi: u32,
}

pub const GRAPH_CLASSES: [GraphClass; 16] = [
    GraphClass { id: 1, graph_name: "V_30^z", r: 30, edges: 180, aut_order: 240, members: &["K_5"], representative: "K_5", c: 5, chi: 5 },
    GraphClass { id: 2, graph_name: "V_30^{z,n}", r: 30, edges: 186, aut_order: 144, members: &["K_{3,3}", "111+"], representative: "K_{3,3}", c: 7, chi: 7 },
    GraphClass { id: 3, graph_name: "V_30^n", r: 30, edges: 180, aut_order: 24, members: &["111-"], representative: "111-", c: 6, chi: 6 },
    GraphClass { id: 4, graph_name: "V_28^z", r: 28, edges: 154, aut_order: 24, members: &["K_5-1"], representative: "K_5-1", c: 5, chi: 5 },
    GraphClass { id: 5, graph_name: "V_28^n", r: 28, edges: 160, aut_order: 24, members: &["211+", "211-", "311+", "311-", "411"], representative: "211+", c: 6, chi: 6 },
    GraphClass { id: 6, graph_name: "V_26^z", r: 26, edges: 134, aut_order: 16, members: &["K_5-1-1"], representative: "K_5-1-1", c: 5, chi: 5 },
    GraphClass { id: 7, graph_name: "V_26^n", r: 26, edges: 140, aut_order: 96, members: &["221+", "221-", "22'1", "321+", "321-", "421", "331+", "331-", "431", "441"], representative: "221+", c: 6, chi: 6 },
    GraphClass { id: 8, graph_name: "V_24^z", r: 24, edges: 114, aut_order: 16, members: &["K_5-2", "K_5-2-1"], representative: "K_5-2-1", c: 5, chi: 5 },
    GraphClass { id: 9, graph_name: "V_24^n", r: 24, edges: 120, aut_order: 1152, members: &["222+", "222-", "222'", "22'2''", "322+", "322-", "322'", "422", "422'", "332+", "332-", "432", "333+", "333-", "442", "433", "443", "444"], representative: "222+", c: 4, chi: 4 },
    GraphClass { id: 10, graph_name: "V_22^z", r: 22, edges: 94, aut_order: 96, members: &["C_{2221}", "C_{222}"], representative: "C_{2221}", c: 4, chi: 4 },
    GraphClass { id: 11, graph_name: "V_20^z", r: 20, edges: 80, aut_order: 240, members: &["K_5-3", "C_{321}", "C_5"], representative: "K_5-3", c: 5, chi: 5 },
    GraphClass { id: 12, graph_name: "V_16^z", r: 16, edges: 52, aut_order: 96, members: &["K_4+1"], representative: "K_4+1", c: 4, chi: 4 },
    GraphClass { id: 13, graph_name: "V_14^z", r: 14, edges: 38, aut_order: 96, members: &["C_{221}+1", "C_4+1"], representative: "C_{221}+1", c: 4, chi: 4 },
    GraphClass { id: 14, graph_name: "V_12^z", r: 12, edges: 24, aut_order: 288, members: &["C_3+C_3"], representative: "C_3+C_3", c: 3, chi: 3 },
    GraphClass { id: 15, graph_name: "V_10^z", r: 10, edges: 16, aut_order: 288, members: &["C_3+1+1"], representative: "C_3+1+1", c: 3, chi: 3 },
    GraphClass { id: 16, graph_name: "V_8^z", r: 8, edges: 8, aut_order: 40320, members: &["1+1+1+1"], representative: "1+1+1+1", c: 2, chi: 2 },
];

struct Row {
    symbol: &'static str,
    zonotopal: bool,
    dim: u32,
    rays: &'static [u8],
    vectors: &'static [u8],
    class: u8,
}

const V28N_PLUS: &[u8] = &[1, 2, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 16, 17];
const V28N_MINUS: &[u8] = &[1, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 16, 17];
const V26N_PLUS: &[u8] = &[1, 2, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17];
const V26N_MINUS: &[u8] = &[1, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17];
const V24N: &[u8] = &[1, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17];

#[rustfmt::skip]
const ROWS: [Row; 52] = [
    // zonotopal
    Row { symbol: "K_5", zonotopal: true, dim: 10, rays: &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10], vectors: &[1, 3, 4, 5, 6, 7, 8, 10, 11, 12, 13, 14, 15, 16, 17], class: 1 },
    Row { symbol: "K_{3,3}", zonotopal: true, dim: 9, rays: &[1, 2, 3, 4, 6, 7, 8, 9, 12], vectors: &[1, 2, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 15, 16, 17], class: 2 },
    Row { symbol: "K_5-1", zonotopal: true, dim: 9, rays: &[1, 2, 3, 4, 5, 7, 8, 9, 10], vectors: &[1, 3, 4, 5, 6, 7, 8, 10, 11, 13, 14, 15, 16, 17], class: 4 },
    Row { symbol: "K_5-2", zonotopal: true, dim: 8, rays: &[1, 2, 3, 4, 7, 8, 9, 10], vectors: &[1, 3, 4, 5, 6, 7, 8, 10, 11, 13, 15, 17], class: 8 },
    Row { symbol: "K_5-1-1", zonotopal: true, dim: 8, rays: &[1, 2, 3, 4, 5, 7, 8, 10], vectors: &[1, 3, 4, 5, 7, 8, 10, 11, 13, 14, 15, 16, 17], class: 6 },
    Row { symbol: "K_5-3", zonotopal: true, dim: 7, rays: &[1, 2, 4, 7, 8, 9, 10], vectors: &[1, 3, 4, 5, 7, 8, 10, 11, 13, 17], class: 11 },
    Row { symbol: "K_5-2-1", zonotopal: true, dim: 7, rays: &[1, 2, 4, 5, 7, 8, 10], vectors: &[1, 3, 4, 5, 7, 8, 10, 11, 13, 14, 16, 17], class: 8 },
    Row { symbol: "K_4+1", zonotopal: true, dim: 7, rays: &[1, 2, 3, 4, 8, 9, 10], vectors: &[1, 3, 4, 5, 6, 7, 8, 10], class: 12 },
    Row { symbol: "C_{2221}", zonotopal: true, dim: 7, rays: &[1, 2, 3, 4, 7, 9, 10], vectors: &[1, 3, 4, 5, 6, 8, 10, 11, 13, 15, 17], class: 10 },
    Row { symbol: "C_{221}+1", zonotopal: true, dim: 6, rays: &[1, 2, 3, 4, 8, 10], vectors: &[1, 3, 4, 5, 7, 8, 10], class: 13 },
    Row { symbol: "C_{321}", zonotopal: true, dim: 6, rays: &[1, 2, 4, 7, 8, 10], vectors: &[1, 3, 4, 5, 7, 8, 10, 11, 13, 17], class: 11 },
    Row { symbol: "C_{222}", zonotopal: true, dim: 6, rays: &[1, 2, 3, 7, 9, 10], vectors: &[1, 3, 4, 5, 6, 8, 10, 11, 13, 15, 17], class: 10 },
    Row { symbol: "C_3+C_3", zonotopal: true, dim: 6, rays: &[1, 4, 7, 8, 9, 10], vectors: &[3, 5, 7, 8, 10, 17], class: 14 },
    Row { symbol: "C_5", zonotopal: true, dim: 5, rays: &[1, 2, 7, 8, 10], vectors: &[1, 3, 4, 5, 7, 8, 10, 11, 13, 17], class: 11 },
    Row { symbol: "C_4+1", zonotopal: true, dim: 5, rays: &[1, 2, 4, 8, 10], vectors: &[1, 3, 4, 5, 7, 8, 10], class: 13 },
    Row { symbol: "C_3+1+1", zonotopal: true, dim: 5, rays: &[1, 2, 3, 4, 8], vectors: &[1, 3, 5, 7, 10], class: 15 },
    Row { symbol: "1+1+1+1", zonotopal: true, dim: 4, rays: &[1, 2, 3, 4], vectors: &[1, 3, 5, 10], class: 16 },
    // non-zonotopal
    Row { symbol: "111+", zonotopal: false, dim: 10, rays: &[1, 2, 3, 4, 6, 7, 8, 9, 11, 12], vectors: &[1, 2, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 15, 16, 17], class: 2 },
    Row { symbol: "111-", zonotopal: false, dim: 10, rays: &[1, 2, 3, 4, 6, 7, 8, 9, 10, 11], vectors: &[1, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 15, 16, 17], class: 3 },
    Row { symbol: "211+", zonotopal: false, dim: 9, rays: &[1, 2, 3, 4, 6, 8, 9, 11, 12], vectors: V28N_PLUS, class: 5 },
    Row { symbol: "211-", zonotopal: false, dim: 9, rays: &[1, 2, 3, 4, 6, 8, 9, 10, 11], vectors: V28N_MINUS, class: 5 },
    Row { symbol: "311+", zonotopal: false, dim: 8, rays: &[1, 2, 3, 4, 6, 8, 11, 12], vectors: V28N_PLUS, class: 5 },
    Row { symbol: "311-", zonotopal: false, dim: 8, rays: &[1, 2, 3, 4, 6, 8, 10, 11], vectors: V28N_MINUS, class: 5 },
    Row { symbol: "221+", zonotopal: false, dim: 8, rays: &[1, 2, 3, 4, 8, 9, 11, 12], vectors: V26N_PLUS, class: 7 },
    Row { symbol: "221-", zonotopal: false, dim: 8, rays: &[1, 2, 3, 4, 8, 9, 10, 11], vectors: V26N_MINUS, class: 7 },
    Row { symbol: "22'1", zonotopal: false, dim: 8, rays: &[1, 2, 3, 4, 7, 8, 11, 12], vectors: V26N_PLUS, class: 7 },
    Row { symbol: "411", zonotopal: false, dim: 7, rays: &[1, 2, 4, 6, 8, 10, 11], vectors: V28N_MINUS, class: 5 },
    Row { symbol: "321+", zonotopal: false, dim: 7, rays: &[1, 2, 4, 7, 8, 10, 11], vectors: V26N_MINUS, class: 7 },
    Row { symbol: "321-", zonotopal: false, dim: 7, rays: &[1, 2, 3, 4, 8, 10, 11], vectors: V26N_MINUS, class: 7 },
    Row { symbol: "222+", zonotopal: false, dim: 7, rays: &[1, 3, 4, 8, 9, 11, 12], vectors: V24N, class: 9 },
    Row { symbol: "222-", zonotopal: false, dim: 7, rays: &[1, 3, 4, 6, 7, 10, 11], vectors: V24N, class: 9 },
    Row { symbol: "222'", zonotopal: false, dim: 7, rays: &[1, 3, 4, 8, 9, 10, 11], vectors: V24N, class: 9 },
    Row { symbol: "22'2''", zonotopal: false, dim: 7, rays: &[1, 4, 7, 8, 9, 10, 11], vectors: V24N, class: 9 },
    Row { symbol: "421", zonotopal: false, dim: 6, rays: &[1, 2, 4, 8, 10, 11], vectors: V26N_MINUS, class: 7 },
    Row { symbol: "331+", zonotopal: false, dim: 6, rays: &[1, 2, 3, 4, 11, 12], vectors: V26N_PLUS, class: 7 },
    Row { symbol: "331-", zonotopal: false, dim: 6, rays: &[1, 2, 3, 4, 10, 11], vectors: V26N_MINUS, class: 7 },
    Row { symbol: "322+", zonotopal: false, dim: 6, rays: &[1, 3, 4, 8, 11, 12], vectors: V24N, class: 9 },
    Row { symbol: "322-", zonotopal: false, dim: 6, rays: &[1, 4, 7, 8, 11, 12], vectors: V24N, class: 9 },
    Row { symbol: "322'", zonotopal: false, dim: 6, rays: &[1, 2, 4, 6, 7, 11], vectors: V24N, class: 9 },
    Row { symbol: "431", zonotopal: false, dim: 5, rays: &[1, 2, 4, 10, 11], vectors: V26N_MINUS, class: 7 },
    Row { symbol: "422", zonotopal: false, dim: 5, rays: &[1, 4, 8, 11, 12], vectors: V24N, class: 9 },
    Row { symbol: "422'", zonotopal: false, dim: 5, rays: &[1, 4, 8, 10, 11], vectors: V24N, class: 9 },
    Row { symbol: "332+", zonotopal: false, dim: 5, rays: &[1, 3, 4, 11, 12], vectors: V24N, class: 9 },
    Row { symbol: "332-", zonotopal: false, dim: 5, rays: &[1, 3, 4, 10, 11], vectors: V24N, class: 9 },
    Row { symbol: "441", zonotopal: false, dim: 5, rays: &[1, 2, 10, 11], vectors: V26N_MINUS, class: 7 },
    Row { symbol: "432", zonotopal: false, dim: 4, rays: &[1, 4, 10, 11], vectors: V24N, class: 9 },
    Row { symbol: "333+", zonotopal: false, dim: 4, rays: &[3, 4, 11, 12], vectors: V24N, class: 9 },
    Row { symbol: "333-", zonotopal: false, dim: 4, rays: &[3, 4, 10, 11], vectors: V24N, class: 9 },
    Row { symbol: "442", zonotopal: false, dim: 3, rays: &[1, 10, 11], vectors: V24N, class: 9 },
    Row { symbol: "433", zonotopal: false, dim: 3, rays: &[4, 10, 11], vectors: V24N, class: 9 },
    Row { symbol: "443", zonotopal: false, dim: 2, rays: &[10, 11], vectors: V24N, class: 9 },
    Row { symbol: "444", zonotopal: false, dim: 1, rays: &[11], vectors: V24N, class: 9 },
];

fn build_entry(row: &Row) -> CatalogEntry {
    let class = &GRAPH_CLASSES[usize::from(row.class) - 1];
    CatalogEntry {
        symbol: row.symbol.to_string(),
        zonotopal: row.zonotopal,
        rays: row
            .rays
            .iter()
            .map(|&i| RayIndex::new(i).expect("ray index in range"))
            .collect(),
        secondary_cone_dim: row.dim,
        expected_voronoi: row
            .vectors
            .iter()
            .map(|&i| CANDIDATE_VECTORS[usize::from(i) - 1])
            .collect(),
        expected_chi: class.chi,
        torus_scale_c: class.c,
        expected_class: row.class,
    }
}

/// All 52 entries: the 17 zonotopal types first, then the 35 others.
pub fn catalog() -> &'static [CatalogEntry] {
    static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(|| ROWS.iter().map(build_entry).collect())
}

/// Drops the TeX decoration so that `K5-2`, `K_5-2` and `K_{5}-2` all match.
pub fn normalize_symbol(s: &str) -> String {
    s.chars()
        .filter(|c| !matches!(c, '_' | '{' | '}' | ' ' | '$'))
        .collect()
}

pub fn find_entry(symbol: &str) -> Result<&'static CatalogEntry> {
    let key = normalize_symbol(symbol);
    catalog()
        .iter()
        .find(|e| normalize_symbol(&e.symbol) == key)
        .ok_or_else(|| domain(format!("no catalog entry named {symbol:?}")))
}

pub fn graph_class(id: u8) -> Option<&'static GraphClass> {
    GRAPH_CLASSES.iter().find(|c| c.id == id)
}

pub fn catalog_json() -> Result<String> {
    Ok(serde_json::to_string_pretty(catalog())?)
}

/// Two- and three-dimensional lattices used as smoke tests. These are not
/// part of the four-dimensional classification.
#[derive(Clone, Debug)]
pub struct DemoLattice {
    pub name: &'static str,
    pub gram: Vec<Vec<i64>>,
    /// Number of `±` pairs of strict Voronoi vectors (half the facet count).
    pub expected_pairs: usize,
    pub expected_chi: u32,
    pub torus_scale_c: u32,
}

impl DemoLattice {
    pub fn form(&self) -> QuadraticForm {
        QuadraticForm::from_i64_rows(&self.gram).expect("demo Gram matrices are valid")
    }
}

pub fn demo_lattices() -> Vec<DemoLattice> {
    vec![
        DemoLattice {
            name: "square",
            gram: vec![vec![1, 0], vec![0, 1]],
            expected_pairs: 2,
            expected_chi: 2,
            torus_scale_c: 2,
        },
        DemoLattice {
            name: "hexagonal",
            gram: vec![vec![2, -1], vec![-1, 2]],
            expected_pairs: 3,
            expected_chi: 3,
            torus_scale_c: 3,
        },
        DemoLattice {
            name: "cube",
            gram: vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]],
            expected_pairs: 3,
            expected_chi: 2,
            torus_scale_c: 2,
        },
        DemoLattice {
            name: "hexagonal-prism",
            gram: vec![vec![2, -1, 0], vec![-1, 2, 0], vec![0, 0, 1]],
            expected_pairs: 4,
            expected_chi: 3,
            torus_scale_c: 3,
        },
        DemoLattice {
            name: "rhombic-dodecahedron",
            gram: vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]],
            expected_pairs: 6,
            expected_chi: 4,
            torus_scale_c: 4,
        },
        DemoLattice {
            name: "elongated-dodecahedron",
            gram: vec![vec![3, -1, -1], vec![-1, 2, 0], vec![-1, 0, 2]],
            expected_pairs: 6,
            expected_chi: 4,
            torus_scale_c: 4,
        },
        DemoLattice {
            name: "truncated-octahedron",
            gram: vec![vec![3, -1, -1], vec![-1, 3, -1], vec![-1, -1, 3]],
            expected_pairs: 7,
            expected_chi: 4,
            torus_scale_c: 4,
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    // "number" column of the two subdivision tables, in catalog order
    const NUMBERS: [usize; 52] = [
        30, 30, 28, 24, 26, 20, 24, 16, 22, 14, 20, 22, 12, 20, 14, 10, 8, //
        30, 30, 28, 28, 28, 28, 26, 26, 26, 28, 26, 26, 24, 24, 24, 24, //
        26, 26, 26, 24, 24, 24, 26, 24, 24, 24, 24, 26, 24, 24, 24, 24, 24, 24, 24,
    ];

    #[test]
    fn size_and_split() {
        let cat = catalog();
        assert_eq!(cat.len(), 52);
        assert_eq!(cat.iter().filter(|e| e.zonotopal).count(), 17);
        assert_eq!(cat.iter().filter(|e| !e.zonotopal).count(), 35);
        assert!(cat[..17].iter().all(|e| e.zonotopal));
    }

    #[test]
    fn vector_counts_match_tables() {
        for (e, &n) in catalog().iter().zip(NUMBERS.iter()) {
            assert_eq!(e.expected_vector_count(), n, "{}", e.symbol);
            assert!(e
                .expected_voronoi
                .iter()
                .all(|v| v.iter().all(|c| (-1..=1).contains(c))));
        }
    }

    #[test]
    fn every_form_is_positive_definite() {
        for e in catalog() {
            assert!(e.form().is_positive_definite(), "{}", e.symbol);
        }
    }

    #[test]
    fn named_entries() {
        let e = find_entry("1+1+1+1").unwrap();
        assert_eq!(e.rays.iter().map(|r| r.get()).collect::<Vec<_>>(), [1, 2, 3, 4]);
        assert_eq!(e.expected_vector_count(), 8);
        assert_eq!((e.expected_chi, e.torus_scale_c), (2, 2));

        let e = find_entry("K_{3,3}").unwrap();
        assert_eq!(e.expected_vector_count(), 30);
        assert_eq!((e.expected_chi, e.torus_scale_c), (7, 7));

        assert_eq!(find_entry("K5-2-1").unwrap().symbol, "K_5-2-1");
        assert!(find_entry("nope").is_err());
    }

    #[test]
    fn classes_partition_the_catalog() {
        let counts: Vec<usize> = GRAPH_CLASSES.iter().map(|c| c.members.len()).collect();
        assert_eq!(counts, [1, 2, 1, 1, 5, 1, 10, 2, 18, 2, 3, 1, 2, 1, 1, 1]);
        for e in catalog() {
            let owners: Vec<u8> = GRAPH_CLASSES
                .iter()
                .filter(|c| c.members.contains(&e.symbol.as_str()))
                .map(|c| c.id)
                .collect();
            assert_eq!(owners, [e.expected_class], "{}", e.symbol);
        }
        for c in &GRAPH_CLASSES {
            assert!(c.members.contains(&c.representative));
            assert_eq!(c.c, c.chi);
            assert_eq!(c.r as usize, find_entry(c.representative).unwrap().expected_vector_count());
        }
    }

    #[test]
    fn json_keys() {
        let v: serde_json::Value = serde_json::from_str(&catalog_json().unwrap()).unwrap();
        let first = &v[0];
        let mut keys: Vec<&str> = first.as_object().unwrap().keys().map(|k| k.as_str()).collect();
        keys.sort();
        assert_eq!(keys, ["c", "chi", "dim", "rays", "symbol", "voronoi", "zonotopal"]);
        assert_eq!(first["voronoi"][0], serde_json::json!([0, 0, 0, 1]));
    }
}
