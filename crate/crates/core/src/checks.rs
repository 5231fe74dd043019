//! Exhaustive verification suites over bounded ranges. Each suite counts
//! the instances it checked and records every counterexample it met.

use rayon::prelude::*;

use crate::action::{e_element, ActionMode};
use crate::bicomp::{enumerate_bicompositions, enumerate_by_total, enumerate_up_to, Bicomposition};
use crate::dnsym::duality_check;
use crate::dqsym::{
    coproduct, counit, lyndon_freeness_report, m_mult, pi_project, qsym_coproduct, qsym_counit,
    qsym_product, tensor_product, DQSymElt,
};
use crate::lincomb::Combination;
use crate::poly::{monomial_basis, Polynomial};
use crate::quotient::{basis_check, triangle};
use crate::symfun::{frobenius_from_formula, frobenius_from_traces, h_in_p, k_space_frobenius};
use crate::Bidegree;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub suite: &'static str,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl CheckReport {
    fn new(suite: &'static str) -> Self {
        CheckReport {
            suite,
            checked: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn merge(&mut self, other: CheckReport) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
    }

    pub fn passes(&self) -> bool {
        self.failures.is_empty()
    }
}

/// `E_{ijk} m = 0` under the Hivert action for every `i < j < k <= n` and
/// every monomial of bidegree componentwise at most `bound`.
pub fn kernel(n: usize, bound: Bidegree) -> CheckReport {
    let mut report = CheckReport::new("kernel");
    let triples: Vec<(u32, u32, u32)> = (1..=n as u32)
        .flat_map(|i| (i + 1..=n as u32).flat_map(move |j| (j + 1..=n as u32).map(move |k| (i, j, k))))
        .collect();
    let monomials: Vec<_> = (0..=bound.0)
        .flat_map(|a| (0..=bound.1).map(move |b| (a, b)))
        .flat_map(|d| monomial_basis(n, d))
        .collect();
    for (i, j, k) in triples {
        let e = e_element(i, j, k, n).expect("valid triple");
        let parts: Vec<CheckReport> = monomials
            .par_chunks(64)
            .map(|chunk| {
                let mut r = CheckReport::new("kernel");
                for m in chunk {
                    let p = Polynomial::monomial(n, m.clone());
                    let image = e.apply(&p, ActionMode::Hivert).expect("same n");
                    r.record(image.is_zero(), || format!("E[{i},{j},{k}] * {m} = {image}"));
                }
                r
            })
            .collect();
        parts.into_iter().for_each(|r| report.merge(r));
    }
    report
}

/// Both adjointness identities between `DNSym` and `DQSym` on every triple
/// `(a, b, c)` with `bidegree(a) + bidegree(b) = bidegree(c)` of total
/// degree at most `max_total`.
pub fn duality(max_total: u32) -> CheckReport {
    let mut report = CheckReport::new("duality");
    let all: Vec<_> = (0..=max_total)
        .flat_map(|t| enumerate_by_total(t, usize::MAX))
        .collect();
    for a in &all {
        for b in &all {
            let (da, db) = (a.bidegree(), b.bidegree());
            let d = (da.0 + db.0, da.1 + db.1);
            if d.0 + d.1 > max_total {
                continue;
            }
            for c in enumerate_bicompositions(d, usize::MAX) {
                report.record(duality_check(a, b, &c), || format!("a = {a}, b = {b}, c = {c}"));
            }
        }
    }
    report
}

/// Trace-based and closed-form Frobenius characteristics agree for
/// `n <= max_n` and bidegrees up to `bound`; each `K_a` has characteristic
/// `h_k h_{n-k}` for `n <= kspace_n` and `bidegree(a) <= kspace_bound`.
pub fn frobenius(max_n: usize, bound: Bidegree, kspace_n: usize, kspace_bound: Bidegree) -> CheckReport {
    let mut report = CheckReport::new("frobenius");
    for n in 1..=max_n {
        for a in 0..=bound.0 {
            for b in 0..=bound.1 {
                let d = (a, b);
                let traces = frobenius_from_traces(n, d).expect("n within guard");
                let formula = frobenius_from_formula(n, d);
                report.record(traces == formula, || {
                    format!("n = {n}, d = {d:?}: traces {traces} vs formula {formula}")
                });
            }
        }
    }
    for n in 1..=kspace_n {
        for a in enumerate_up_to(kspace_bound, n) {
            let k = a.len() as u32;
            let got = k_space_frobenius(&a, n).expect("length within n");
            let want = h_in_p(k).mul(&h_in_p(n as u32 - k));
            report.record(got == want, || format!("n = {n}, a = {a}: {got} vs {want}"));
        }
    }
    report
}

/// Products of Lyndon `M`'s form a basis in every bidegree of total degree
/// at most `max_total`.
pub fn lyndon(max_total: u32) -> CheckReport {
    let mut report = CheckReport::new("lyndon");
    let reports: Vec<_> = triangle(max_total)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(lyndon_freeness_report)
        .collect();
    for r in reports {
        report.record(r.passes(), || {
            format!(
                "bidegree {:?}: dimension {}, {} products, rank {}",
                r.bidegree, r.dimension, r.products, r.rank
            )
        });
    }
    report
}

/// The candidate monomial basis is a basis of the quotient for `n`.
pub fn basis(n: usize) -> CheckReport {
    let mut report = CheckReport::new("basis");
    let r = basis_check(n);
    for &(d, size, dim, rank) in &r.rows {
        report.record(size == dim && rank == size, || {
            format!("bidegree {d:?}: {size} candidates, quotient dimension {dim}, independent {rank}")
        });
    }
    report.record(r.band_vanishes, || format!("degree {n} component does not vanish"));
    report
}

type Triple = (Bicomposition, Bicomposition, Bicomposition);

/// Hopf axioms on the `M` basis up to total degree `max_total`:
/// multiplicativity of the coproduct, coassociativity, counit laws, and
/// compatibility of the projection to `QSym` with all structure maps.
pub fn hopf(max_total: u32) -> CheckReport {
    let mut report = CheckReport::new("hopf");
    let all: Vec<_> = (0..=max_total)
        .flat_map(|t| enumerate_by_total(t, usize::MAX))
        .collect();
    let e = Bicomposition::empty;
    for a in &all {
        let ma = DQSymElt::m(a.clone());
        let da = coproduct(&ma);

        let left: Combination<Triple> =
            da.linear(|(x, y)| coproduct(&DQSymElt::m(x.clone())).map_keys(|(p, q)| (p.clone(), q.clone(), y.clone())));
        let right: Combination<Triple> =
            da.linear(|(x, y)| coproduct(&DQSymElt::m(y.clone())).map_keys(|(p, q)| (x.clone(), p.clone(), q.clone())));
        report.record(left == right, || format!("coassociativity fails at M[{a}]"));

        // (ε ⊗ id) Δ = id = (id ⊗ ε) Δ
        let lhs: DQSymElt = DQSymElt(da.linear(|(x, y)| {
            if x.is_empty() {
                Combination::basis(y.clone())
            } else {
                Combination::zero()
            }
        }));
        let rhs: DQSymElt = DQSymElt(da.linear(|(x, y)| {
            if y.is_empty() {
                Combination::basis(x.clone())
            } else {
                Combination::zero()
            }
        }));
        report.record(lhs == ma && rhs == ma, || format!("counit law fails at M[{a}]"));
        report.record(counit(&ma) == crate::lincomb::rat((a == &e()) as i64), || {
            format!("counit of M[{a}]")
        });

        let pa = pi_project(&ma);
        let dpa = qsym_coproduct(&pa);
        let pi_da = da.map_keys(|(x, y)| (x.collapse(), y.collapse()));
        report.record(dpa == pi_da, || format!("projection does not commute with the coproduct at M[{a}]"));
        report.record(qsym_counit(&pa) == counit(&ma), || format!("projection and counit at M[{a}]"));

        for b in &all {
            if a.total_degree() + b.total_degree() > max_total {
                continue;
            }
            let mb = DQSymElt::m(b.clone());
            let prod = m_mult(a, b);
            let lhs = coproduct(&prod);
            let rhs = tensor_product(&da, &coproduct(&mb));
            report.record(lhs == rhs, || format!("coproduct is not multiplicative on M[{a}] M[{b}]"));
            let pp = qsym_product(&pa, &pi_project(&mb));
            report.record(pi_project(&prod) == pp, || {
                format!("projection is not multiplicative on M[{a}] M[{b}]")
            });
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        for r in [
            kernel(3, (1, 1)),
            duality(2),
            frobenius(2, (1, 1), 2, (1, 1)),
            lyndon(3),
            basis(2),
            hopf(2),
        ] {
            assert!(r.passes(), "{}: {:?}", r.suite, r.failures);
            assert!(r.checked > 0);
        }
    }

    #[test]
    fn a_wrong_claim_is_caught() {
        // The natural action is faithful, so E does not vanish there.
        let e = e_element(1, 2, 3, 3).unwrap();
        let p = Polynomial::monomial(3, crate::poly::Monomial::from_dense(&[2, 1, 0], &[0, 0, 0]));
        assert!(!e.apply(&p, ActionMode::Natural).unwrap().is_zero());
    }
}
