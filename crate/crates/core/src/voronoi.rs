//! Strict Voronoi vectors of a positive definite form.
//!
//! A nonzero lattice vector `v` is a strict Voronoi vector (its Voronoi
//! facet is `(n-1)`-dimensional) exactly when `±v` are the only vectors of
//! minimal length in the coset `v + 2Z^n`. We compute the minima of all
//! `2^n - 1` nonzero cosets by exhaustive enumeration of a box that provably
//! contains every candidate.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Num, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::catalog::CatalogEntry;
use crate::error::{domain, Error, Result};
use crate::linalg;
use crate::qform::QuadraticForm;

/// Upper limit on the number of enumerated points per form.
const MAX_BOX_POINTS: u128 = 200_000_000;

/// Centrally symmetric set of nonzero integer vectors, stored one per `±` pair.
///
/// Stored representatives have a positive first nonzero coordinate and are
/// sorted lexicographically, so two sets are equal iff they are equal as
/// sets of `±` pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSet {
    n: usize,
    vectors: Vec<Vec<i64>>,
    #[serde(skip)]
    form: Option<QuadraticForm>,
}

/// Flip `v` so that its first nonzero coordinate is positive.
pub fn canonical_sign(v: &[i64]) -> Vec<i64> {
    match v.iter().find(|&&c| c != 0) {
        Some(&c) if c < 0 => v.iter().map(|x| -x).collect(),
        _ => v.to_vec(),
    }
}

impl GeneratorSet {
    pub fn new(n: usize, vectors: Vec<Vec<i64>>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for v in &vectors {
            if v.len() != n {
                return Err(domain(format!("vector {v:?} is not {n}-dimensional")));
            }
            if v.iter().all(|&c| c == 0) {
                return Err(domain("zero vector in generator set"));
            }
            if !set.insert(canonical_sign(v)) {
                return Err(domain(format!("vector {v:?} repeated up to sign")));
            }
        }
        Ok(Self {
            n,
            vectors: set.into_iter().collect(),
            form: None,
        })
    }

    pub fn with_form(mut self, form: QuadraticForm) -> Self {
        self.form = Some(form);
        self
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// One representative per `±` pair.
    pub fn vectors(&self) -> &[Vec<i64>] {
        &self.vectors
    }

    /// Number of `±` pairs.
    pub fn pair_count(&self) -> usize {
        self.vectors.len()
    }

    pub fn form(&self) -> Option<&QuadraticForm> {
        self.form.as_ref()
    }

    /// `S ∪ -S`, sorted lexicographically.
    pub fn expanded(&self) -> Vec<Vec<i64>> {
        let mut out: Vec<Vec<i64>> = self
            .vectors
            .iter()
            .flat_map(|v| [v.clone(), v.iter().map(|x| -x).collect()])
            .collect();
        out.sort();
        out
    }

    pub fn max_abs_coordinate(&self) -> i64 {
        self.vectors
            .iter()
            .flat_map(|v| v.iter().map(|c| c.abs()))
            .max()
            .unwrap_or(0)
    }

    /// Same set of `±` pairs, ignoring the attached form.
    pub fn same_pairs(&self, other: &Self) -> bool {
        self.n == other.n && self.vectors == other.vectors
    }
}

struct CosetMin<T> {
    value: Option<T>,
    minimizers: Vec<Vec<i64>>,
}

fn parity_class(x: &[i64]) -> usize {
    x.iter()
        .enumerate()
        .fold(0, |acc, (i, &c)| acc | (((c & 1) as usize) << i))
}

fn evaluate<T>(rows: &[Vec<T>], x: &[i64]) -> T
where
    T: Num + Clone + From<i64>,
{
    let n = x.len();
    let mut acc = T::zero();
    for i in 0..n {
        if x[i] == 0 {
            continue;
        }
        let mut row = T::zero();
        for j in 0..n {
            if x[j] != 0 {
                row = row + rows[i][j].clone() * T::from(x[j]);
            }
        }
        acc = acc + row * T::from(x[i]);
    }
    acc
}

/// Visits every point of the box `[-b_i, b_i]` in lexicographic order.
fn for_each_in_box(bounds: &[i64], mut f: impl FnMut(&[i64])) {
    let n = bounds.len();
    let mut x: Vec<i64> = bounds.iter().map(|b| -b).collect();
    loop {
        f(&x);
        let mut i = n;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if x[i] < bounds[i] {
                x[i] += 1;
                break;
            }
            x[i] = -bounds[i];
        }
    }
}

fn coset_minima<T>(rows: &[Vec<T>], bounds: &[i64]) -> Vec<CosetMin<T>>
where
    T: Num + Clone + Ord + From<i64>,
{
    let n = bounds.len();
    let mut mins: Vec<CosetMin<T>> = (0..1usize << n)
        .map(|_| CosetMin {
            value: None,
            minimizers: Vec::new(),
        })
        .collect();
    for_each_in_box(bounds, |x| {
        let class = parity_class(x);
        if class == 0 {
            return;
        }
        let val = evaluate(rows, x);
        let slot = &mut mins[class];
        match &slot.value {
            Some(m) if val > *m => {}
            Some(m) if val == *m => slot.minimizers.push(x.to_vec()),
            _ => {
                slot.value = Some(val);
                slot.minimizers.clear();
                slot.minimizers.push(x.to_vec());
            }
        }
    });
    mins
}

fn strict_from_minima<T>(mins: Vec<CosetMin<T>>) -> Vec<Vec<i64>> {
    mins.into_iter()
        .skip(1)
        .filter_map(|m| {
            // the box is symmetric, so minimizers come in ± pairs
            (m.minimizers.len() == 2).then(|| canonical_sign(&m.minimizers[0]))
        })
        .collect()
}

/// Per-coordinate bounds `|x_i| <= sqrt(M (Q^-1)_ii)` enclosing every `x`
/// with `Q[x] <= M`, where `M` bounds all coset minima from above.
fn enclosing_box(q: &QuadraticForm) -> Result<Vec<i64>> {
    let n = q.dim();
    // every nonzero parity class has a representative in {-1, 0, 1}^n
    let mut best: Vec<Option<BigInt>> = vec![None; 1 << n];
    for_each_in_box(&vec![1; n], |x| {
        let class = parity_class(x);
        if class == 0 {
            return;
        }
        let v = q.evaluate(x);
        let slot = &mut best[class];
        if slot.as_ref().is_none_or(|b| v < *b) {
            *slot = Some(v);
        }
    });
    let bound = best
        .into_iter()
        .skip(1)
        .map(|b| b.expect("every class has a small representative"))
        .max()
        .expect("n >= 1");
    let det = q.determinant();
    let adj = linalg::adjugate_diagonal_big(q.rows());
    let bounds: Vec<i64> = adj
        .iter()
        .map(|a| {
            let r = linalg::isqrt_big(&(&bound * a / &det));
            i64::try_from(r).map_err(|_| Error::Resource("enumeration bound overflow".into()))
        })
        .collect::<Result<_>>()?;
    let points: u128 = bounds
        .iter()
        .map(|&b| 2 * b as u128 + 1)
        .try_fold(1u128, |acc, s| acc.checked_mul(s))
        .unwrap_or(u128::MAX);
    if points > MAX_BOX_POINTS {
        return Err(Error::Resource(format!(
            "enumeration box with {points} points is too large"
        )));
    }
    Ok(bounds)
}

/// The strict Voronoi vectors of `Z^n` under the metric `q`.
pub fn strict_voronoi_vectors(q: &QuadraticForm) -> Result<GeneratorSet> {
    if !q.is_positive_definite() {
        return Err(domain("form is not positive definite"));
    }
    let bounds = enclosing_box(q)?;
    let small = q.to_i64_rows().filter(|rows| {
        // |q_ij x_i x_j| summed over n^2 terms must stay well inside i128
        let qmax = rows.iter().flatten().map(|v| v.unsigned_abs()).max().unwrap_or(0) as u128;
        let bmax = bounds.iter().copied().max().unwrap_or(0) as u128;
        qmax.checked_mul(bmax * bmax)
            .and_then(|t| t.checked_mul(64))
            .is_some_and(|t| t < i128::MAX as u128)
    });
    let vectors = match small {
        Some(rows) => {
            let rows: Vec<Vec<i128>> = rows
                .iter()
                .map(|r| r.iter().map(|&v| i128::from(v)).collect())
                .collect();
            strict_from_minima(coset_minima(&rows, &bounds))
        }
        None => strict_from_minima(coset_minima(q.rows(), &bounds)),
    };
    Ok(GeneratorSet::new(q.dim(), vectors)?.with_form(q.clone()))
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationRow {
    pub symbol: String,
    pub matched: bool,
    pub computed_pairs: usize,
    pub expected_pairs: usize,
    /// Expected but not computed.
    pub missing: Vec<Vec<i64>>,
    /// Computed but not expected.
    pub extra: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub rows: Vec<VerificationRow>,
    pub matches: usize,
    pub mismatches: usize,
}

pub fn verify_entry(entry: &CatalogEntry) -> Result<VerificationRow> {
    let computed = strict_voronoi_vectors(&entry.form())?;
    let expected = GeneratorSet::new(4, entry.expected_vectors())?;
    let have: BTreeSet<&Vec<i64>> = computed.vectors().iter().collect();
    let want: BTreeSet<&Vec<i64>> = expected.vectors().iter().collect();
    Ok(VerificationRow {
        symbol: entry.symbol.clone(),
        matched: have == want,
        computed_pairs: computed.pair_count(),
        expected_pairs: expected.pair_count(),
        missing: want.difference(&have).map(|v| (*v).clone()).collect(),
        extra: have.difference(&want).map(|v| (*v).clone()).collect(),
    })
}

/// Recomputes the strict Voronoi vectors of each entry and compares them, as
/// sets of `±` pairs, with the recorded lists.
pub fn verify_catalog_vectors(entries: &[CatalogEntry]) -> Result<VerificationReport> {
    let rows = entries.iter().map(verify_entry).collect::<Result<Vec<_>>>()?;
    let matches = rows.iter().filter(|r| r.matched).count();
    Ok(VerificationReport {
        mismatches: rows.len() - matches,
        matches,
        rows,
    })
}

/// `Q[v] < Q[v + 2w]` for all `w != 0, -v` with `|w|_inf <= window`.
pub fn is_locally_strict(q: &QuadraticForm, v: &[i64], window: i64) -> bool {
    let base = q.evaluate(v);
    let mut ok = true;
    for_each_in_box(&vec![window; v.len()], |w| {
        if !ok || w.iter().all(|c| *c == 0) || w.iter().zip(v).all(|(a, b)| *a == -b) {
            return;
        }
        let moved: Vec<i64> = v.iter().zip(w).map(|(a, b)| a + 2 * b).collect();
        let val = q.evaluate(&moved);
        if val <= base || val.is_negative() || val.is_zero() {
            ok = false;
        }
    });
    ok
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{find_entry, CANDIDATE_VECTORS};
    use crate::qform::{build_form, RayIndex};

    fn named(ix: &[usize]) -> Vec<Vec<i64>> {
        let mut v: Vec<Vec<i64>> = ix.iter().map(|&i| CANDIDATE_VECTORS[i - 1].to_vec()).collect();
        v.sort();
        v
    }

    #[test]
    fn identity_gives_unit_vectors() {
        let q = QuadraticForm::from_i64_rows(&linalg::identity_i64(4)).unwrap();
        let s = strict_voronoi_vectors(&q).unwrap();
        assert_eq!(s.vectors(), named(&[1, 3, 5, 10]).as_slice());
        assert_eq!(s.expanded().len(), 8);
    }

    #[test]
    fn k5_form() {
        let rays: Vec<RayIndex> = (1..=10).map(|i| RayIndex::new(i).unwrap()).collect();
        let s = strict_voronoi_vectors(&build_form(&rays).unwrap()).unwrap();
        assert_eq!(s.pair_count(), 15);
        assert_eq!(
            s.vectors(),
            named(&[1, 3, 4, 5, 6, 7, 8, 10, 11, 12, 13, 14, 15, 16, 17]).as_slice()
        );
    }

    #[test]
    fn d4_form() {
        let s = strict_voronoi_vectors(&build_form(&[RayIndex::new(11).unwrap()]).unwrap()).unwrap();
        assert_eq!(
            s.vectors(),
            named(&[1, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17]).as_slice()
        );
    }

    #[test]
    fn hexagonal_lattice() {
        let q = QuadraticForm::from_i64_rows(&[vec![2, -1], vec![-1, 2]]).unwrap();
        let s = strict_voronoi_vectors(&q).unwrap();
        assert_eq!(s.vectors(), &[vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn non_strict_ties_are_dropped() {
        // square lattice: the coset of (1, 1) has four minimizers
        let q = QuadraticForm::from_i64_rows(&linalg::identity_i64(2)).unwrap();
        let s = strict_voronoi_vectors(&q).unwrap();
        assert_eq!(s.vectors(), &[vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn rejects_indefinite() {
        let q = QuadraticForm::from_i64_rows(&[vec![1, 2], vec![2, 1]]).unwrap();
        assert!(matches!(strict_voronoi_vectors(&q), Err(Error::Domain(_))));
    }

    #[test]
    fn far_minimizers_are_found() {
        // a badly reduced basis of Z^2: minima lie well outside {-1, 0, 1}^2
        let q = QuadraticForm::from_i64_rows(&[vec![1, 0], vec![0, 1]])
            .unwrap()
            .conjugate(&[vec![1, 7], vec![0, 1]])
            .unwrap();
        let s = strict_voronoi_vectors(&q).unwrap();
        // images of e1, e2 under the inverse basis change
        assert_eq!(s.vectors(), &[vec![1, 0], vec![7, -1]]);
    }

    #[test]
    fn generator_set_invariants() {
        assert!(GeneratorSet::new(2, vec![vec![0, 0]]).is_err());
        assert!(GeneratorSet::new(2, vec![vec![1, 0], vec![-1, 0]]).is_err());
        assert!(GeneratorSet::new(2, vec![vec![1, 0, 0]]).is_err());
        let s = GeneratorSet::new(2, vec![vec![-1, 2], vec![0, -1]]).unwrap();
        assert_eq!(s.vectors(), &[vec![0, 1], vec![1, -2]]);
        assert_eq!(s.expanded(), vec![vec![-1, 2], vec![0, -1], vec![0, 1], vec![1, -2]]);
    }

    #[test]
    fn single_entry_and_negative_control() {
        let e = find_entry("K_5-1").unwrap();
        let row = verify_entry(e).unwrap();
        assert!(row.matched);
        assert_eq!(row.computed_pairs, 14);

        let mut bad = e.clone();
        bad.expected_voronoi[0] = [1, -1, 0, 0];
        let report = verify_catalog_vectors(&[bad]).unwrap();
        assert_eq!((report.matches, report.mismatches), (0, 1));
        assert_eq!(report.rows[0].missing, vec![vec![1, -1, 0, 0]]);
    }
}
