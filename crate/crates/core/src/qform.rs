//! Integral positive definite quadratic forms and Voronoi's twelve ray matrices.
//!
//! A lattice is carried as `Z^n` together with a Gram matrix `Q`; the squared
//! length of a lattice vector `x` is `Q[x] = x^T Q x`. All arithmetic is exact.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::linalg;

pub const MIN_DIM: usize = 2;
pub const MAX_DIM: usize = 5;

/// Symmetric integer Gram matrix of dimension `2..=5`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<BigInt>>", into = "Vec<Vec<BigInt>>")]
pub struct QuadraticForm {
    n: usize,
    rows: Vec<Vec<BigInt>>,
}

impl QuadraticForm {
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let n = rows.len();
        if !(MIN_DIM..=MAX_DIM).contains(&n) {
            return Err(domain(format!(
                "dimension {n} outside {MIN_DIM}..={MAX_DIM}"
            )));
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(domain("Gram matrix is not square"));
        }
        for i in 0..n {
            for j in i + 1..n {
                if rows[i][j] != rows[j][i] {
                    return Err(domain(format!("Gram matrix not symmetric at ({i}, {j})")));
                }
            }
        }
        Ok(Self { n, rows })
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    /// The zero form of dimension `n`; only useful as an accumulator.
    pub(crate) fn zero(n: usize) -> Self {
        Self {
            n,
            rows: vec![vec![BigInt::zero(); n]; n],
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.rows[i][j]
    }

    /// Entries as `i64`, if they all fit.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|v| i64::try_from(v).ok()).collect())
            .collect()
    }

    /// `Q[x] = x^T Q x`.
    pub fn evaluate(&self, x: &[i64]) -> BigInt {
        assert_eq!(x.len(), self.n, "vector dimension mismatch");
        let mut acc = BigInt::zero();
        for i in 0..self.n {
            if x[i] == 0 {
                continue;
            }
            let mut row = BigInt::zero();
            for j in 0..self.n {
                if x[j] != 0 {
                    row += &self.rows[i][j] * x[j];
                }
            }
            acc += row * x[i];
        }
        acc
    }

    pub fn determinant(&self) -> BigInt {
        linalg::det_big(&self.rows)
    }

    /// Sylvester's criterion: all leading principal minors strictly positive.
    pub fn is_positive_definite(&self) -> bool {
        linalg::leading_minors(&self.rows)
            .iter()
            .all(|m| m.is_positive())
    }

    pub fn scaled(&self, k: i64) -> Self {
        Self {
            n: self.n,
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|v| v * k).collect())
                .collect(),
        }
    }

    /// `A^T Q A`: the same lattice expressed in the basis given by the columns of `A`.
    pub fn conjugate(&self, a: &[Vec<i64>]) -> Result<Self> {
        if a.len() != self.n || a.iter().any(|r| r.len() != self.n) {
            return Err(domain("basis change has the wrong shape"));
        }
        let n = self.n;
        let mut qa = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if a[k][j] != 0 {
                        qa[i][j] += &self.rows[i][k] * a[k][j];
                    }
                }
            }
        }
        let mut out = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if a[k][i] != 0 {
                        out[i][j] += &qa[k][j] * a[k][i];
                    }
                }
            }
        }
        Self::from_rows(out)
    }

    fn add_assign(&mut self, other: &Self) {
        for (r, o) in self.rows.iter_mut().zip(&other.rows) {
            for (v, w) in r.iter_mut().zip(o) {
                *v += w;
            }
        }
    }
}

impl TryFrom<Vec<Vec<BigInt>>> for QuadraticForm {
    type Error = Error;

    fn try_from(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        Self::from_rows(rows)
    }
}

impl From<QuadraticForm> for Vec<Vec<BigInt>> {
    fn from(q: QuadraticForm) -> Self {
        q.rows
    }
}

/// Text format: the dimension on the first line, then one whitespace
/// separated row per line.
impl fmt::Display for QuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n)?;
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for QuadraticForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty Gram matrix input".into()))?;
        let n: usize = header
            .parse()
            .map_err(|_| Error::Parse(format!("bad dimension line {header:?}")))?;
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse(format!("missing row {}", i + 1)))?;
            let row = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<BigInt>()
                        .map_err(|_| Error::Parse(format!("bad integer {t:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if row.len() != n {
                return Err(Error::Parse(format!(
                    "row {} has {} entries, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
            rows.push(row);
        }
        if let Some(extra) = lines.next() {
            return Err(Error::Parse(format!("trailing input {extra:?}")));
        }
        Self::from_rows(rows)
    }
}

/// Index of one of Voronoi's extremal rays `R1..=R12` for quaternary forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub struct RayIndex(u8);

impl RayIndex {
    pub fn new(i: u8) -> Result<Self> {
        if (1..=12).contains(&i) {
            Ok(Self(i))
        } else {
            Err(domain(format!("ray index {i} outside 1..=12")))
        }
    }

    pub fn get(self) -> u8 {
        self.0
    }
}

impl TryFrom<u8> for RayIndex {
    type Error = Error;

    fn try_from(i: u8) -> Result<Self> {
        Self::new(i)
    }
}

impl From<RayIndex> for u8 {
    fn from(r: RayIndex) -> u8 {
        r.0
    }
}

const RAYS: [[[i64; 4]; 4]; 12] = [
    [[1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]],
    [[0, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]],
    [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 0]],
    [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1]],
    [[1, -1, 0, 0], [-1, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]],
    [[1, 0, -1, 0], [0, 0, 0, 0], [-1, 0, 1, 0], [0, 0, 0, 0]],
    [[1, 0, 0, -1], [0, 0, 0, 0], [0, 0, 0, 0], [-1, 0, 0, 1]],
    [[0, 0, 0, 0], [0, 1, -1, 0], [0, -1, 1, 0], [0, 0, 0, 0]],
    [[0, 0, 0, 0], [0, 1, 0, -1], [0, 0, 0, 0], [0, -1, 0, 1]],
    [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 1, -1], [0, 0, -1, 1]],
    [[4, 2, -2, -2], [2, 4, -2, -2], [-2, -2, 4, 0], [-2, -2, 0, 4]],
    [[1, 1, -1, -1], [1, 1, -1, -1], [-1, -1, 1, 1], [-1, -1, 1, 1]],
];

/// The extremal ray `R_i` of the secondary cones of quaternary forms.
pub fn ray_matrix(i: RayIndex) -> QuadraticForm {
    let m = &RAYS[usize::from(i.0) - 1];
    QuadraticForm {
        n: 4,
        rows: m
            .iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect(),
    }
}

/// Ray matrix by raw index, with the range check.
pub fn ray_matrix_checked(i: u8) -> Result<QuadraticForm> {
    RayIndex::new(i).map(ray_matrix)
}

/// Entrywise sum of the selected ray matrices (a multiset, repeats count).
pub fn build_form(rays: &[RayIndex]) -> Result<QuadraticForm> {
    if rays.is_empty() {
        return Err(domain("empty ray multiset"));
    }
    let mut q = QuadraticForm::zero(4);
    for &r in rays {
        q.add_assign(&ray_matrix(r));
    }
    Ok(q)
}

pub fn is_positive_definite(q: &QuadraticForm) -> bool {
    q.is_positive_definite()
}
