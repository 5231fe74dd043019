//! The quotient of `Q[x, y]` by the ideal generated by diagonally
//! quasi-symmetric polynomials without constant term.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use super::{antidiagonal, independent_rows, ones_row, remap, triangle, Coordinates, HilbertMatrix};
use crate::bicomp::enumerate_bicompositions;
use crate::linalg::{nullspace, Echelon, SparseRow};
use crate::poly::{Monomial, Polynomial};
use crate::Bidegree;

/// Monomials grouped by bidegree.
pub type MonomialSets = BTreeMap<Bidegree, BTreeSet<Monomial>>;

struct Component {
    coords: Coordinates,
    /// Independent rows spanning the ideal in this bidegree. These are the
    /// original products `m M_a`, not reduced forms, so they stay sparse.
    kept: Vec<SparseRow>,
}

/// Ideal components of `J_n` computed bidegree by bidegree.
///
/// The degree-`d` component is spanned by the `M_a` of bidegree `d` together
/// with `x_i` and `y_i` times the components one step below, so each level
/// only needs the previous one.
pub struct DqTower {
    n: usize,
    comps: BTreeMap<Bidegree, Component>,
}

impl DqTower {
    /// All bidegrees of total degree at most `max_total`.
    pub fn build(n: usize, max_total: u32) -> Self {
        Self::build_where(n, max_total, |_| true)
    }

    /// All bidegrees componentwise below `d`.
    pub fn build_box(n: usize, d: Bidegree) -> Self {
        Self::build_where(n, d.0 + d.1, |e| e.0 <= d.0 && e.1 <= d.1)
    }

    fn build_where(n: usize, max_total: u32, keep: impl Fn(Bidegree) -> bool + Sync) -> Self {
        let mut tower = DqTower {
            n,
            comps: BTreeMap::new(),
        };
        for t in 0..=max_total {
            let level: Vec<(Bidegree, Component)> = antidiagonal(t)
                .into_par_iter()
                .filter(|&d| keep(d))
                .map(|d| (d, tower.component(d)))
                .collect();
            tower.comps.extend(level);
        }
        tower
    }

    fn component(&self, d: Bidegree) -> Component {
        let coords = Coordinates::new(self.n, d);
        let mut candidates: Vec<SparseRow> = Vec::new();
        if d != (0, 0) {
            for a in enumerate_bicompositions(d, self.n) {
                candidates.push(ones_row((1..=self.n as u32).combinations(a.len()).map(|s| {
                    let m = Monomial::new(s, a.clone()).expect("increasing support");
                    coords.position(&m).expect("monomial of bidegree d")
                })));
            }
        }
        let below = [
            (d.0.checked_sub(1).map(|a| (a, d.1)), true),
            (d.1.checked_sub(1).map(|b| (d.0, b)), false),
        ];
        for (e, is_x) in below {
            let Some(prev) = e.and_then(|e| self.comps.get(&e)) else {
                continue;
            };
            for i in 1..=self.n as u32 {
                let var = if is_x { Monomial::x(i) } else { Monomial::y(i) };
                let map = prev.coords.shift_map(&var, &coords);
                candidates.extend(prev.kept.iter().map(|r| remap(r, &map)));
            }
        }
        let kept = independent_rows(coords.dim(), candidates);
        Component { coords, kept }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn get(&self, d: Bidegree) -> &Component {
        self.comps
            .get(&d)
            .unwrap_or_else(|| panic!("bidegree {d:?} was not computed"))
    }

    pub fn coordinates(&self, d: Bidegree) -> &Coordinates {
        &self.get(d).coords
    }

    /// Independent integer rows spanning the ideal component.
    pub fn ideal_rows(&self, d: Bidegree) -> &[SparseRow] {
        &self.get(d).kept
    }

    pub fn ideal_rank(&self, d: Bidegree) -> usize {
        self.get(d).kept.len()
    }

    pub fn quotient_dim(&self, d: Bidegree) -> usize {
        let c = self.get(d);
        c.coords.dim() - c.kept.len()
    }
}

/// Dimensions of `DQ_n` for total degree below `n`, with the band of total
/// degree `n` checked to vanish.
///
/// Once every monomial of degree `n` lies in the ideal, so does every
/// monomial of higher degree, so the band check certifies the rest.
pub fn hilbert_dq(n: usize) -> HilbertMatrix {
    assert!(n >= 1, "hilbert_dq needs n >= 1");
    let k = n as u32 - 1;
    let tower = DqTower::build(n, k + 1);
    let mut m = HilbertMatrix::new(n, k);
    for d in triangle(k) {
        m.set(d, tower.quotient_dim(d) as u64);
    }
    m.band_vanishes = Some(antidiagonal(k + 1).into_iter().all(|d| tower.quotient_dim(d) == 0));
    m
}

/// The recursively predicted dimensions: Catalan numbers on the outer
/// diagonal, partial sums of the previous matrix inside.
pub fn predicted_dq(n: usize) -> HilbertMatrix {
    assert!(n >= 1, "predicted_dq needs n >= 1");
    let k = n as u32 - 1;
    let mut m = HilbertMatrix::new(n, k);
    if n == 1 {
        m.set((0, 0), 1);
        return m;
    }
    let prev = predicted_dq(n - 1);
    let c = super::catalan(k);
    for (a, b) in triangle(k) {
        let v = if a + b == k {
            c
        } else {
            (0..=a)
                .flat_map(|a2| (0..=b).map(move |b2| (a2, b2)))
                .map(|e| prev.entry(e))
                .sum()
        };
        m.set((a, b), v);
    }
    m
}

/// A basis of the orthogonal complement of the ideal component at `d`
/// under the differential scalar product.
pub fn harmonics_basis(n: usize, d: Bidegree) -> Vec<Polynomial> {
    let tower = DqTower::build_box(n, d);
    let coords = tower.coordinates(d);
    let weights: Vec<BigRational> = coords
        .basis()
        .iter()
        .map(|m| BigRational::from_integer(m.self_pairing()))
        .collect();
    // ⟨r, h⟩ = Σ r_m w_m h_m, so solve A z = 0 and set h_m = z_m / w_m.
    let rows: Vec<Vec<(usize, BigRational)>> = tower
        .ideal_rows(d)
        .iter()
        .map(|r| {
            r.iter()
                .map(|(c, v)| (*c, BigRational::from_integer(v.clone())))
                .collect()
        })
        .collect();
    nullspace(coords.dim(), &rows)
        .into_iter()
        .map(|z| {
            let entries: Vec<(usize, BigRational)> = z
                .into_iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i, v / &weights[i]))
                .collect();
            coords.polynomial(&entries)
        })
        .collect()
}

/// The candidate monomial basis `B_n`, built from `B_{n-1}` by multiplying
/// with powers of `x_n, y_n` below the outer diagonal and by repeatedly
/// applying `phi` along it.
pub fn conjectured_basis(n: usize) -> MonomialSets {
    assert!(n >= 1, "conjectured_basis needs n >= 1");
    let mut sets = MonomialSets::new();
    if n == 1 {
        sets.insert((0, 0), BTreeSet::from([Monomial::one()]));
        return sets;
    }
    let prev = conjectured_basis(n - 1);
    let k = n as u32 - 1;
    let last = n as u32;
    let lift = |i: u32, j: u32| -> BTreeSet<Monomial> {
        let mut out = BTreeSet::new();
        for (&(a, b), ms) in prev.range((0, 0)..=(i, j)) {
            if a > i || b > j {
                continue;
            }
            let shift = Monomial::single(last, i - a, j - b);
            out.extend(ms.iter().map(|m| m.mul(&shift)));
        }
        out
    };
    for (i, j) in triangle(k) {
        if i + j < k {
            sets.insert((i, j), lift(i, j));
        }
    }
    sets.insert((k, 0), lift(k, 0));
    for i in 1..=k {
        let from = &sets[&(k + 1 - i, i - 1)];
        let image = from
            .iter()
            .map(|m| m.with_exponent(m.exponent().phi().expect("positive x-degree")))
            .collect();
        sets.insert((k - i, i), image);
    }
    sets.retain(|_, s| !s.is_empty());
    sets
}

/// Outcome of testing `B_n` against the computed quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisReport {
    pub n: usize,
    /// `(bidegree, |B_n(d)|, dim DQ_n(d), rank of B_n(d) modulo the ideal)`.
    pub rows: Vec<(Bidegree, usize, usize, usize)>,
    pub band_vanishes: bool,
}

impl BasisReport {
    pub fn passes(&self) -> bool {
        self.band_vanishes
            && self
                .rows
                .iter()
                .all(|&(_, size, dim, rank)| size == dim && rank == size)
    }

    pub fn failures(&self) -> Vec<Bidegree> {
        self.rows
            .iter()
            .filter(|&&(_, size, dim, rank)| size != dim || rank != size)
            .map(|r| r.0)
            .collect()
    }
}

/// Checks that `B_n(d)` is independent modulo the ideal and has the
/// quotient's dimension in every bidegree.
pub fn basis_check(n: usize) -> BasisReport {
    let k = n as u32 - 1;
    let tower = DqTower::build(n, k + 1);
    let sets = conjectured_basis(n);
    let empty = BTreeSet::new();
    let rows = triangle(k)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|d| {
            let coords = tower.coordinates(d);
            let candidates = sets.get(&d).unwrap_or(&empty);
            let mut e = Echelon::new(coords.dim());
            for r in tower.ideal_rows(d) {
                e.insert(r.clone());
            }
            let before = e.rank();
            for m in candidates {
                e.insert(ones_row([coords.position(m).expect("monomial of bidegree d")]));
            }
            (d, candidates.len(), tower.quotient_dim(d), e.rank() - before)
        })
        .collect();
    let band_vanishes = antidiagonal(k + 1).into_iter().all(|d| tower.quotient_dim(d) == 0);
    BasisReport {
        n,
        rows,
        band_vanishes,
    }
}
