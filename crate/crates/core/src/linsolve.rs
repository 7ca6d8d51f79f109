//! Exact sparse linear systems over `ℚ(i)`.

use std::collections::BTreeMap;

use crate::scalar::Scalar;

/// A sparse row: column index → nonzero coefficient.
pub type SparseRow = BTreeMap<usize, Scalar>;

/// `A·x = b` with `A` stored by rows.
#[derive(Clone, Debug, Default)]
pub struct SparseSystem {
    ncols: usize,
    rows: Vec<(SparseRow, Scalar)>,
}

/// Outcome of elimination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    /// One solution with all free variables set to zero, or `None` when
    /// the system is inconsistent.
    pub values: Option<Vec<Scalar>>,
    pub rank: usize,
    /// Rank of `[A | b]`; exceeds `rank` exactly when inconsistent.
    pub augmented_rank: usize,
    pub nrows: usize,
    pub ncols: usize,
}

impl SparseSystem {
    pub fn new(ncols: usize) -> Self {
        SparseSystem {
            ncols,
            rows: Vec::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    /// Adds one equation; zero coefficients are dropped.
    pub fn push(&mut self, row: SparseRow, rhs: Scalar) {
        let row: SparseRow = row.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        debug_assert!(row.keys().all(|&j| j < self.ncols));
        if row.is_empty() && rhs.is_zero() {
            return;
        }
        self.rows.push((row, rhs));
    }

    /// Gaussian elimination over the field. Pivots are chosen per column as
    /// the remaining row with the fewest nonzeros, which keeps fill-in low on
    /// the near-diagonal systems produced by the diagonal action.
    pub fn solve(&self) -> Solution {
        let nrows = self.rows.len();
        let mut rows: Vec<(SparseRow, Scalar)> = self.rows.clone();
        let mut active = vec![true; nrows];
        let mut pivots: Vec<(usize, usize)> = Vec::new(); // (column, row)

        let mut by_col: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, (r, _)) in rows.iter().enumerate() {
            for &j in r.keys() {
                by_col.entry(j).or_default().push(i);
            }
        }

        for col in 0..self.ncols {
            let Some(cands) = by_col.get(&col).cloned() else {
                continue;
            };
            let pivot = cands
                .iter()
                .copied()
                .filter(|&i| active[i] && rows[i].0.contains_key(&col))
                .min_by_key(|&i| (rows[i].0.len(), i));
            let Some(p) = pivot else { continue };
            active[p] = false;
            let (prow, prhs) = rows[p].clone();
            let pval = prow[&col].clone();
            let targets: Vec<usize> = cands
                .iter()
                .copied()
                .filter(|&i| active[i] && rows[i].0.contains_key(&col))
                .collect();
            for i in targets {
                let factor = &rows[i].0[&col] / &pval;
                let (row, rhs) = &mut rows[i];
                for (&j, c) in &prow {
                    let delta = &factor * c;
                    let entry = row.entry(j).or_insert_with(Scalar::zero);
                    *entry -= &delta;
                    if entry.is_zero() {
                        row.remove(&j);
                    } else {
                        let list = by_col.entry(j).or_default();
                        if !list.contains(&i) {
                            list.push(i);
                        }
                    }
                }
                *rhs -= &(&factor * &prhs);
            }
            pivots.push((col, p));
        }

        let rank = pivots.len();
        let inconsistent =
            (0..nrows).any(|i| active[i] && rows[i].0.is_empty() && !rows[i].1.is_zero());
        let augmented_rank = rank + usize::from(inconsistent);
        if inconsistent {
            return Solution {
                values: None,
                rank,
                augmented_rank,
                nrows,
                ncols: self.ncols,
            };
        }

        let mut x = vec![Scalar::zero(); self.ncols];
        for &(col, p) in pivots.iter().rev() {
            let (row, rhs) = &rows[p];
            let mut acc = rhs.clone();
            for (&j, c) in row.range(col + 1..) {
                acc -= &(c * &x[j]);
            }
            x[col] = &acc / &row[&col];
        }
        Solution {
            values: Some(x),
            rank,
            augmented_rank,
            nrows,
            ncols: self.ncols,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(entries: &[(usize, i64)]) -> SparseRow {
        entries
            .iter()
            .map(|&(j, c)| (j, Scalar::from_int(c)))
            .collect()
    }

    fn check(sys: &SparseSystem, x: &[Scalar]) {
        for (r, b) in &sys.rows {
            let mut acc = Scalar::zero();
            for (&j, c) in r {
                acc += &(c * &x[j]);
            }
            assert_eq!(&acc, b);
        }
    }

    #[test]
    fn square_system() {
        let mut sys = SparseSystem::new(3);
        sys.push(row(&[(0, 2), (1, 1)]), Scalar::from_int(3));
        sys.push(row(&[(1, 1), (2, -1)]), Scalar::from_int(0));
        sys.push(row(&[(0, 1), (2, 4)]), Scalar::from_int(5));
        let sol = sys.solve();
        assert_eq!(sol.rank, 3);
        let x = sol.values.unwrap();
        check(&sys, &x);
    }

    #[test]
    fn overdetermined_consistent_with_free_variable() {
        let mut sys = SparseSystem::new(3);
        sys.push(row(&[(0, 1), (1, 1)]), Scalar::from_int(2));
        sys.push(row(&[(0, 2), (1, 2)]), Scalar::from_int(4));
        sys.push(row(&[(2, 3)]), Scalar::i());
        let sol = sys.solve();
        assert_eq!(sol.rank, 2);
        assert_eq!(sol.augmented_rank, 2);
        check(&sys, &sol.values.unwrap());
    }

    #[test]
    fn inconsistent() {
        let mut sys = SparseSystem::new(2);
        sys.push(row(&[(0, 1), (1, 1)]), Scalar::from_int(1));
        sys.push(row(&[(0, 1), (1, 1)]), Scalar::from_int(2));
        let sol = sys.solve();
        assert!(sol.values.is_none());
        assert_eq!((sol.rank, sol.augmented_rank), (1, 2));
    }

    #[test]
    fn empty_row_with_rhs() {
        let mut sys = SparseSystem::new(1);
        sys.push(SparseRow::new(), Scalar::one());
        assert!(sys.solve().values.is_none());
    }

    #[test]
    fn gaussian_coefficients() {
        let mut sys = SparseSystem::new(2);
        let mut r1 = SparseRow::new();
        r1.insert(0, Scalar::gaussian(1, 1));
        r1.insert(1, Scalar::ratio(1, 3));
        sys.push(r1, Scalar::gaussian(0, 2));
        let mut r2 = SparseRow::new();
        r2.insert(0, Scalar::i());
        r2.insert(1, Scalar::from_int(-1));
        sys.push(r2, Scalar::from_int(7));
        let x = sys.solve().values.unwrap();
        check(&sys, &x);
    }
}
