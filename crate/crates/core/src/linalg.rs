//! Exact linear algebra over the rationals.
//!
//! Ranks are computed by fraction-free elimination on sparse integer rows;
//! each stored row is kept primitive (content divided out) to limit
//! coefficient growth. Null spaces use a dense reduced row echelon form
//! over `BigRational`, which is only needed for small systems.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A sparse row: `(column, nonzero value)` pairs with increasing columns.
pub type SparseRow = Vec<(usize, BigInt)>;

/// Row echelon form built one row at a time.
#[derive(Debug, Clone)]
pub struct Echelon {
    ncols: usize,
    /// `pivot_of[c]` is the stored row whose leading column is `c`.
    pivot_of: Vec<Option<usize>>,
    rows: Vec<SparseRow>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            pivot_of: vec![None; ncols],
            rows: Vec::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    /// Reduces `row` against the stored pivots. Returns `true` and stores the
    /// remainder when the row is independent of what is already there.
    pub fn insert(&mut self, mut row: SparseRow) -> bool {
        debug_assert!(row.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(row.iter().all(|(c, v)| *c < self.ncols && !v.is_zero()));
        make_primitive(&mut row);
        while let Some(lead) = row.first().map(|e| e.0) {
            match self.pivot_of[lead] {
                Some(p) => {
                    row = eliminate(&row, &self.rows[p]);
                    make_primitive(&mut row);
                }
                None => {
                    if row[0].1.is_negative() {
                        for (_, v) in row.iter_mut() {
                            *v = -std::mem::take(v);
                        }
                    }
                    self.pivot_of[lead] = Some(self.rows.len());
                    self.rows.push(row);
                    return true;
                }
            }
        }
        false
    }

    /// Leading columns of the stored rows.
    pub fn pivot_columns(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r[0].0).collect()
    }
}

/// `lp * row - rc * pivot`, scaled down by `gcd(lp, rc)`, which cancels the
/// leading entry of `row`.
fn eliminate(row: &SparseRow, pivot: &SparseRow) -> SparseRow {
    let rc = &row[0].1;
    let lp = &pivot[0].1;
    let g = rc.gcd(lp);
    let (fr, fp) = (lp / &g, rc / &g);
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (1, 1);
    while i < row.len() || j < pivot.len() {
        let ci = row.get(i).map_or(usize::MAX, |e| e.0);
        let cj = pivot.get(j).map_or(usize::MAX, |e| e.0);
        if ci < cj {
            out.push((ci, &row[i].1 * &fr));
            i += 1;
        } else if cj < ci {
            out.push((cj, -(&pivot[j].1 * &fp)));
            j += 1;
        } else {
            let v = &row[i].1 * &fr - &pivot[j].1 * &fp;
            if !v.is_zero() {
                out.push((ci, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn make_primitive(row: &mut SparseRow) {
    let mut g = BigInt::zero();
    for (_, v) in row.iter() {
        g = g.gcd(v);
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() {
        return;
    }
    for (_, v) in row.iter_mut() {
        *v /= &g;
    }
}

/// Clears denominators of a rational sparse row and sorts it.
pub fn integer_row(row: &[(usize, BigRational)]) -> SparseRow {
    let lcm = row
        .iter()
        .fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
    let mut out: SparseRow = row
        .iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(c, v)| (*c, v.numer() * (&lcm / v.denom())))
        .collect();
    out.sort_by_key(|e| e.0);
    out
}

/// Rank of a list of sparse rational rows with `ncols` columns.
pub fn rank_of_rows(ncols: usize, rows: &[Vec<(usize, BigRational)>]) -> usize {
    let mut e = Echelon::new(ncols);
    for r in rows {
        if e.is_full() {
            break;
        }
        e.insert(integer_row(r));
    }
    e.rank()
}

/// Basis of `{ v : A v = 0 }` for the matrix whose rows are given.
pub fn nullspace(ncols: usize, rows: &[Vec<(usize, BigRational)>]) -> Vec<Vec<BigRational>> {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| {
            let mut dense = vec![BigRational::zero(); ncols];
            for (c, v) in r {
                dense[*c] += v;
            }
            dense
        })
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][col].recip();
        for v in m[rank].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = m[rank].clone();
        for (i, r) in m.iter_mut().enumerate() {
            if i != rank && !r[col].is_zero() {
                let f = r[col].clone();
                for (x, p) in r.iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); ncols];
            v[f] = BigRational::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[i][f].clone();
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lincomb::rat;
    use proptest::prelude::*;

    fn row(entries: &[(usize, i64)]) -> Vec<(usize, BigRational)> {
        entries.iter().map(|&(c, v)| (c, rat(v))).collect()
    }

    #[test]
    fn small_ranks() {
        assert_eq!(rank_of_rows(3, &[]), 0);
        let rows = vec![row(&[(0, 1)]), row(&[(1, 1)]), row(&[(0, 1), (1, 1)])];
        assert_eq!(rank_of_rows(2, &rows), 2);
        let rows = vec![row(&[(0, 2), (1, 4)]), row(&[(0, 3), (1, 6)])];
        assert_eq!(rank_of_rows(2, &rows), 1);
    }

    #[test]
    fn nullspace_small() {
        let rows = vec![row(&[(0, 1), (1, 1)])];
        let ns = nullspace(2, &rows);
        assert_eq!(ns, vec![vec![rat(-1), rat(1)]]);
    }

    /// Rank by dense rational Gaussian elimination, for comparison.
    fn dense_rank(ncols: usize, rows: &[Vec<i64>]) -> usize {
        let mut m: Vec<Vec<BigRational>> =
            rows.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect();
        let mut rank = 0;
        for col in 0..ncols {
            if let Some(p) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) {
                m.swap(rank, p);
                for i in rank + 1..m.len() {
                    let f = &m[i][col] / &m[rank][col];
                    let pr = m[rank].clone();
                    for (x, p) in m[i].iter_mut().zip(&pr) {
                        *x -= &f * p;
                    }
                }
                rank += 1;
            }
        }
        rank
    }

    proptest! {
        #[test]
        fn sparse_rank_matches_dense(rows in prop::collection::vec(prop::collection::vec(-3i64..4, 6), 0..9)) {
            let sparse: Vec<_> = rows
                .iter()
                .map(|r| r.iter().enumerate().filter(|(_, v)| **v != 0).map(|(c, &v)| (c, rat(v))).collect())
                .collect();
            prop_assert_eq!(rank_of_rows(6, &sparse), dense_rank(6, &rows));
            let ns = nullspace(6, &sparse);
            prop_assert_eq!(ns.len() + dense_rank(6, &rows), 6);
            for v in &ns {
                for r in &sparse {
                    let dot: BigRational = r.iter().map(|(c, x)| x * &v[*c]).sum();
                    prop_assert!(dot.is_zero());
                }
            }
        }
    }
}
