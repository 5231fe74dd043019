//! Bigraded dimensions of quotients of polynomial rings by ideals spanned
//! by quasi-symmetric polynomials, computed by exact elimination.

mod dq;
mod formulas;
mod rdiag;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::linalg::{integer_row, Echelon, SparseRow};
use crate::poly::{monomial_basis, Monomial, Polynomial};
use crate::Bidegree;

pub use dq::{
    basis_check, conjectured_basis, harmonics_basis, hilbert_dq, predicted_dq, BasisReport,
    DqTower, MonomialSets,
};
pub use formulas::{catalan, formule_r, hilbert_q, plethystic_guess, psi, q_factorial};
pub use rdiag::{
    dsym_generators, hilbert_r_diag, hilbert_r_diag_m_basis, hilbert_r_diag_with, hilbert_r_univariate,
};

/// Dimensions indexed by bidegree `(d1, d2)` with `d1 + d2 <= max_total`.
///
/// Rows run from `t^max_total` at the top down to `t^0`; the row for `t^j`
/// lists the coefficients of `q^0 .. q^(max_total - j)`.
#[derive(Debug, Clone, Eq)]
pub struct HilbertMatrix {
    pub n: usize,
    pub max_total: u32,
    entries: BTreeMap<Bidegree, u64>,
    /// Whether the band of total degree `max_total + 1` was checked to vanish.
    pub band_vanishes: Option<bool>,
}

impl HilbertMatrix {
    pub fn new(n: usize, max_total: u32) -> Self {
        HilbertMatrix {
            n,
            max_total,
            entries: BTreeMap::new(),
            band_vanishes: None,
        }
    }

    /// From displayed rows, top (`t^K`) first.
    pub fn from_rows(n: usize, rows: &[Vec<u64>]) -> Self {
        let k = rows.len().saturating_sub(1) as u32;
        let mut m = Self::new(n, k);
        for (r, row) in rows.iter().enumerate() {
            let j = k - r as u32;
            for (i, &v) in row.iter().enumerate() {
                m.set((i as u32, j), v);
            }
        }
        m
    }

    pub fn set(&mut self, d: Bidegree, v: u64) {
        assert!(d.0 + d.1 <= self.max_total, "bidegree {d:?} outside the matrix");
        self.entries.insert(d, v);
    }

    pub fn entry(&self, d: Bidegree) -> u64 {
        self.entries.get(&d).copied().unwrap_or(0)
    }

    pub fn rows(&self) -> Vec<Vec<u64>> {
        (0..=self.max_total)
            .rev()
            .map(|j| (0..=self.max_total - j).map(|i| self.entry((i, j))).collect())
            .collect()
    }

    /// `(d1, d2, dim)` for every position of the triangle.
    pub fn bidegrees(&self) -> Vec<(u32, u32, u64)> {
        triangle(self.max_total)
            .map(|(a, b)| (a, b, self.entry((a, b))))
            .collect()
    }

    /// Entries with `t`-degree zero, i.e. the bottom row.
    pub fn first_column(&self) -> Vec<u64> {
        (0..=self.max_total).map(|i| self.entry((i, 0))).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        triangle(self.max_total).all(|(a, b)| self.entry((a, b)) == self.entry((b, a)))
    }

    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    /// Triangular display with blanks in place of zeros.
    pub fn render_text(&self) -> String {
        let width = self.entries.values().map(|v| v.to_string().len()).max().unwrap_or(1);
        self.rows()
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&v| {
                        if v == 0 {
                            " ".repeat(width)
                        } else {
                            format!("{v:>width$}")
                        }
                    })
                    .collect::<Vec<_>>()
                    .join(" ")
                    .trim_end()
                    .to_string()
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// Matrices compare by `n` and displayed entries.
impl PartialEq for HilbertMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.rows() == other.rows()
    }
}

impl fmt::Display for HilbertMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_text())
    }
}

/// All bidegrees with total at most `k`, by total then `d1`.
pub fn triangle(k: u32) -> impl Iterator<Item = Bidegree> {
    (0..=k).flat_map(|t| (0..=t).rev().map(move |a| (a, t - a)))
}

/// Bidegrees of total exactly `t`.
pub(crate) fn antidiagonal(t: u32) -> Vec<Bidegree> {
    (0..=t).rev().map(|a| (a, t - a)).collect()
}

/// The monomial basis of one bidegree together with its reverse index.
#[derive(Debug, Clone)]
pub struct Coordinates {
    pub n: usize,
    pub d: Bidegree,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl Coordinates {
    pub fn new(n: usize, d: Bidegree) -> Self {
        let basis = monomial_basis(n, d);
        let index = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        Coordinates { n, d, basis, index }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Integer row of a polynomial of this bidegree (denominators cleared).
    pub fn row(&self, p: &Polynomial) -> Result<SparseRow> {
        let mut entries = Vec::with_capacity(p.num_terms());
        for (m, c) in p.terms() {
            let found = m.bidegree();
            let i = self.position(m).filter(|_| found == self.d).ok_or(
                Error::BidegreeMismatch {
                    expected: self.d,
                    found,
                },
            )?;
            entries.push((i, c.clone()));
        }
        Ok(integer_row(&entries))
    }

    pub fn polynomial(&self, row: &[(usize, num_rational::BigRational)]) -> Polynomial {
        Polynomial::from_terms(self.n, row.iter().map(|(i, c)| (self.basis[*i].clone(), c.clone())))
    }

    /// Where multiplication by `m` sends each basis monomial, inside `target`.
    pub fn shift_map(&self, m: &Monomial, target: &Coordinates) -> Vec<usize> {
        self.basis
            .iter()
            .map(|b| target.position(&b.mul(m)).expect("product lands in the target bidegree"))
            .collect()
    }
}

/// Applies a column map to a sparse row, keeping it sorted.
pub(crate) fn remap(row: &SparseRow, map: &[usize]) -> SparseRow {
    let mut out: SparseRow = row.iter().map(|(c, v)| (map[*c], v.clone())).collect();
    out.sort_by_key(|e| e.0);
    out
}

/// The spanning set `{ m g }` of the bidegree-`d` part of the ideal
/// generated by `gens`, `m` running over monomials.
pub fn ideal_component(gens: &[Polynomial], n: usize, d: Bidegree) -> Result<Vec<Polynomial>> {
    let mut out = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let e = g.bidegree().ok_or(Error::NotHomogeneous)?;
        if e == (0, 0) {
            return Err(Error::ConstantGenerator);
        }
        if e.0 > d.0 || e.1 > d.1 {
            continue;
        }
        for m in monomial_basis(n, (d.0 - e.0, d.1 - e.1)) {
            out.push(g.mul_monomial(&m));
        }
    }
    Ok(out)
}

/// Rank of the coefficient matrix of `vectors` in the monomial basis of
/// bidegree `d`.
pub fn exact_rank(vectors: &[Polynomial], n: usize, d: Bidegree) -> Result<usize> {
    let coords = Coordinates::new(n, d);
    let mut e = Echelon::new(coords.dim());
    for v in vectors {
        let row = coords.row(v)?;
        if !row.is_empty() && !e.is_full() {
            e.insert(row);
        }
    }
    Ok(e.rank())
}

/// Greedily keeps the rows independent of everything kept before.
pub(crate) fn independent_rows(
    ncols: usize,
    rows: impl IntoIterator<Item = SparseRow>,
) -> Vec<SparseRow> {
    let mut e = Echelon::new(ncols);
    let mut kept = Vec::new();
    for r in rows {
        if e.is_full() {
            break;
        }
        if !r.is_empty() && e.insert(r.clone()) {
            kept.push(r);
        }
    }
    kept
}

pub(crate) fn ones_row(cols: impl IntoIterator<Item = usize>) -> SparseRow {
    let mut row: SparseRow = cols.into_iter().map(|c| (c, BigInt::from(1))).collect();
    row.sort_by_key(|e| e.0);
    row
}
