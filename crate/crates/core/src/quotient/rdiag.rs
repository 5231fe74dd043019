//! Quotients of `DQSym_n` (and `QSym_n`) by the ideal generated by the
//! positive-degree symmetric invariants.

use rayon::prelude::*;

use super::{antidiagonal, triangle, Coordinates, HilbertMatrix};
use crate::bicomp::{enumerate_bicompositions, Bicomposition, Bivector};
use crate::dqsym::{m_expand_basis, m_mult};
use crate::linalg::{rank_of_rows, Echelon};
use crate::lincomb::rat;
use crate::poly::Polynomial;
use crate::series::UnivariateSeries;
use crate::Bidegree;

/// Nonzero bivectors `(a, b)` with `a + b <= maxdeg`, by total then `a`.
fn generator_degrees(maxdeg: u32) -> Vec<Bidegree> {
    (1..=maxdeg).flat_map(antidiagonal).collect()
}

/// Polarized power sums `Σ_i x_i^a y_i^b` for `1 <= a + b <= maxdeg`.
pub fn dsym_generators(n: usize, maxdeg: u32) -> Vec<Polynomial> {
    generator_degrees(maxdeg)
        .into_iter()
        .map(|(a, b)| m_expand_basis(&letter((a, b)), n))
        .collect()
}

fn letter(d: Bidegree) -> Bicomposition {
    Bicomposition::single(Bivector::new(d.0, d.1)).expect("nonzero generator degree")
}

/// Pairs `(M_a, generator degree)` spanning the ideal in bidegree `d`.
fn ideal_pairs(n: usize, d: Bidegree, gen_degree: u32) -> Vec<(Bicomposition, Bidegree)> {
    generator_degrees(gen_degree)
        .into_iter()
        .filter(|e| e.0 <= d.0 && e.1 <= d.1)
        .flat_map(|e| {
            enumerate_bicompositions((d.0 - e.0, d.1 - e.1), n)
                .into_iter()
                .map(move |a| (a, e))
        })
        .collect()
}

fn r_dim(n: usize, d: Bidegree, gen_degree: u32) -> u64 {
    let coords = Coordinates::new(n, d);
    let ambient = enumerate_bicompositions(d, n).len();
    let mut e = Echelon::new(coords.dim());
    for (a, g) in ideal_pairs(n, d, gen_degree) {
        if e.rank() == ambient {
            break;
        }
        let p = m_expand_basis(&a, n)
            .mul(&m_expand_basis(&letter(g), n))
            .expect("same n");
        e.insert(coords.row(&p).expect("product has bidegree d"));
    }
    (ambient - e.rank()) as u64
}

/// Dimensions of `DQSym_n / <DSym_n^+>` up to total degree `max_total`,
/// using the generators of total degree at most `gen_degree`. Ranks are
/// taken in monomial coordinates of `Q[x, y]`.
pub fn hilbert_r_diag_with(n: usize, max_total: u32, gen_degree: u32) -> HilbertMatrix {
    let mut m = HilbertMatrix::new(n, max_total);
    let dims: Vec<(Bidegree, u64)> = triangle(max_total + 1)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|d| (d, r_dim(n, d, gen_degree)))
        .collect();
    let mut band = true;
    for (d, v) in dims {
        if d.0 + d.1 <= max_total {
            m.set(d, v);
        } else {
            band &= v == 0;
        }
    }
    m.band_vanishes = Some(band);
    m
}

/// As [`hilbert_r_diag_with`], with every generator that can contribute.
pub fn hilbert_r_diag(n: usize, max_total: u32) -> HilbertMatrix {
    hilbert_r_diag_with(n, max_total, max_total + 1)
}

/// The same dimensions computed in the `M` basis: products by quasi-shuffle,
/// dropping bicompositions longer than `n` (they vanish in `n` variables).
pub fn hilbert_r_diag_m_basis(n: usize, max_total: u32) -> HilbertMatrix {
    let mut m = HilbertMatrix::new(n, max_total);
    let dims: Vec<(Bidegree, u64)> = triangle(max_total)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|d| {
            let basis = enumerate_bicompositions(d, n);
            let rows: Vec<_> = ideal_pairs(n, d, max_total)
                .into_iter()
                .map(|(a, g)| {
                    m_mult(&a, &letter(g))
                        .terms()
                        .filter(|(c, _)| c.len() <= n)
                        .map(|(c, v)| (basis.binary_search(c).expect("listed"), v.clone()))
                        .collect()
                })
                .collect();
            (d, (basis.len() - rank_of_rows(basis.len(), &rows)) as u64)
        })
        .collect();
    for (d, v) in dims {
        m.set(d, v);
    }
    m
}

/// Dimension series of `QSym_n / <e_1, .., e_n>`, computed through the
/// degree one past that of `Ψ_n`.
pub fn hilbert_r_univariate(n: usize) -> UnivariateSeries {
    let bound = n * (n + 1) / 2 + 1;
    let elementary: Vec<Polynomial> = (1..=n)
        .map(|j| m_expand_basis(&Bicomposition::from_rows(&vec![1; j], &vec![0; j]).expect("nonzero"), n))
        .collect();
    let coeffs: Vec<_> = (0..=bound as u32)
        .into_par_iter()
        .map(|k| {
            let coords = Coordinates::new(n, (k, 0));
            let ambient = enumerate_bicompositions((k, 0), n).len();
            let mut e = Echelon::new(coords.dim());
            for (j, ej) in elementary.iter().enumerate() {
                let j = j as u32 + 1;
                if j > k {
                    break;
                }
                for c in enumerate_bicompositions((k - j, 0), n) {
                    let p = m_expand_basis(&c, n).mul(ej).expect("same n");
                    e.insert(coords.row(&p).expect("degree k"));
                }
            }
            rat((ambient - e.rank()) as i64)
        })
        .collect();
    UnivariateSeries::truncated(coeffs, bound)
}
