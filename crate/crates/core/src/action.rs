//! Symmetric group actions on `Q[x, y]`.
//!
//! Two actions are provided. The natural diagonal action permutes the
//! variables `x_i -> x_σ(i)`, `y_i -> y_σ(i)` and is multiplicative. The
//! Hivert action moves the support set of each monomial and keeps its
//! bicomposition exponent unchanged; it factors through the Temperley-Lieb
//! algebra and is not multiplicative.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::lincomb::{rat, Combination};
use crate::poly::{monomial_basis, Monomial, Polynomial};
use crate::symfun::Partition;
use crate::Bidegree;

/// A permutation of `1..=n` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let n = images.len() as u32;
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i == 0 || i > n || std::mem::replace(&mut seen[i as usize - 1], true) {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n as u32).collect(),
        }
    }

    /// Every permutation of `1..=n`, in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        (1..=n as u32)
            .permutations(n)
            .map(|images| Permutation { images })
            .collect()
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, i: u32) -> u32 {
        self.images[i as usize - 1]
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        check_n(self.n(), other.n())?;
        Ok(Permutation {
            images: other.images.iter().map(|&i| self.apply(i)).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.n()];
        for (i, &s) in self.images.iter().enumerate() {
            images[s as usize - 1] = i as u32 + 1;
        }
        Permutation { images }
    }

    pub fn cycle_type(&self) -> Partition {
        let mut seen = vec![false; self.n()];
        let mut lengths = Vec::new();
        for start in 0..self.n() {
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i] as usize - 1;
                len += 1;
            }
            if len > 0 {
                lengths.push(len);
            }
        }
        Partition::new(lengths)
    }

    pub fn sign(&self) -> i64 {
        let p = self.cycle_type();
        if (self.n() - p.len()) % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.images.iter().join(" "))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let images = s
            .split_whitespace()
            .map(|t| {
                t.parse::<u32>()
                    .map_err(|e| Error::InvalidPermutation(format!("{s:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(images)
    }
}

fn check_n(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::VariableMismatch { left, right });
    }
    Ok(())
}

/// Which action a group algebra element acts through.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ActionMode {
    Natural,
    Hivert,
}

pub fn natural_monomial(s: &Permutation, m: &Monomial) -> Monomial {
    let n = s.n();
    let mut xs = vec![0; n];
    let mut ys = vec![0; n];
    for (i, p) in m.columns() {
        let j = s.apply(i) as usize - 1;
        xs[j] = p.a;
        ys[j] = p.b;
    }
    Monomial::from_dense(&xs, &ys)
}

pub fn hivert_monomial(s: &Permutation, m: &Monomial) -> Monomial {
    let mut support: Vec<u32> = m.support().iter().map(|&i| s.apply(i)).collect();
    support.sort_unstable();
    m.with_support(support)
}

pub fn natural_action(s: &Permutation, p: &Polynomial) -> Result<Polynomial> {
    check_n(s.n(), p.n())?;
    Ok(p.map_monomials(|m| natural_monomial(s, m)))
}

pub fn hivert_action(s: &Permutation, p: &Polynomial) -> Result<Polynomial> {
    check_n(s.n(), p.n())?;
    Ok(p.map_monomials(|m| hivert_monomial(s, m)))
}

/// An element of the group algebra `Q S_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAlgebraElt {
    n: usize,
    terms: Combination<Permutation>,
}

impl GroupAlgebraElt {
    pub fn new(n: usize, terms: impl IntoIterator<Item = (Permutation, BigRational)>) -> Result<Self> {
        let terms: Combination<Permutation> = terms.into_iter().collect();
        for s in terms.keys() {
            check_n(n, s.n())?;
        }
        Ok(GroupAlgebraElt { n, terms })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &BigRational)> {
        self.terms.iter()
    }

    pub fn apply(&self, p: &Polynomial, mode: ActionMode) -> Result<Polynomial> {
        check_n(self.n, p.n())?;
        let mut acc = Polynomial::zero(self.n);
        for (s, c) in self.terms.iter() {
            let moved = match mode {
                ActionMode::Natural => natural_action(s, p)?,
                ActionMode::Hivert => hivert_action(s, p)?,
            };
            acc = acc.add(&moved.scale(c))?;
        }
        Ok(acc)
    }
}

/// The signed sum of the six permutations moving only `i < j < k`.
pub fn e_element(i: u32, j: u32, k: u32, n: usize) -> Result<GroupAlgebraElt> {
    if !(1 <= i && i < j && j < k && k as usize <= n) {
        return Err(Error::InvalidIndices(format!(
            "need 1 <= i < j < k <= n, got ({i}, {j}, {k}) with n = {n}"
        )));
    }
    let slots = [i, j, k];
    let terms = Permutation::all(3).into_iter().map(|w| {
        let mut images: Vec<u32> = (1..=n as u32).collect();
        for (pos, &slot) in slots.iter().enumerate() {
            images[slot as usize - 1] = slots[w.images[pos] as usize - 1];
        }
        (Permutation { images }, rat(w.sign()))
    });
    GroupAlgebraElt::new(n, terms)
}

/// Trace of `s` acting by the Hivert action on the bidegree `d` component
/// of `Q[x, y]` in `n` variable pairs: the action permutes monomials, so
/// this counts fixed monomials.
pub fn hivert_trace(s: &Permutation, n: usize, d: Bidegree) -> Result<u64> {
    check_n(s.n(), n)?;
    Ok(monomial_basis(n, d)
        .iter()
        .filter(|m| &hivert_monomial(s, m) == *m)
        .count() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::monomial_basis;
    use proptest::prelude::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn m(support: &[u32], exp: &str) -> Polynomial {
        let mono = Monomial::new(support.to_vec(), exp.parse().unwrap()).unwrap();
        Polynomial::monomial(4, mono)
    }

    #[test]
    fn hivert_examples() {
        let s = perm("3 1 4 2");
        assert_eq!(
            hivert_action(&s, &m(&[1, 3, 4], "2,0,2/1,1,0")).unwrap(),
            m(&[2, 3, 4], "2,0,2/1,1,0")
        );
        assert_eq!(
            hivert_action(&s, &m(&[1, 3, 4], "2,1,2/0,0,0")).unwrap(),
            m(&[2, 3, 4], "2,1,2/0,0,0")
        );
        let p = m(&[1, 3], "1,0/0,2");
        assert_eq!(hivert_action(&Permutation::identity(4), &p).unwrap(), p);
        assert!(hivert_action(&perm("2 1"), &p).is_err());
    }

    #[test]
    fn natural_examples() {
        let p = Polynomial::x(1, 2).mul(&Polynomial::y(2, 2)).unwrap();
        let swapped = Polynomial::x(2, 2).mul(&Polynomial::y(1, 2)).unwrap();
        assert_eq!(natural_action(&perm("2 1"), &p).unwrap(), swapped);
        assert_eq!(natural_action(&Permutation::identity(2), &p).unwrap(), p);
    }

    #[test]
    fn e_element_display() {
        let e = e_element(1, 2, 3, 3).unwrap();
        let expected = GroupAlgebraElt::new(
            3,
            [
                ("1 2 3", 1),
                ("1 3 2", -1),
                ("2 1 3", -1),
                ("2 3 1", 1),
                ("3 1 2", 1),
                ("3 2 1", -1),
            ]
            .map(|(s, c)| (perm(s), rat(c))),
        )
        .unwrap();
        assert_eq!(e, expected);
        let total: BigRational = e.terms().map(|(_, c)| c.clone()).sum();
        assert_eq!(total, rat(0));
        assert!(e_element(2, 1, 3, 3).is_err());
        assert!(e_element(1, 2, 4, 3).is_err());
    }

    #[test]
    fn e_element_conjugation() {
        // c maps 1->2, 2->3, 3->4, 4->1.
        let c = perm("2 3 4 1");
        let e = e_element(1, 2, 3, 4).unwrap();
        let conj = GroupAlgebraElt::new(
            4,
            e.terms().map(|(s, v)| {
                (c.compose(&s.compose(&c.inverse()).unwrap()).unwrap(), v.clone())
            }),
        )
        .unwrap();
        assert_eq!(conj, e_element(2, 3, 4, 4).unwrap());
    }

    #[test]
    fn group_algebra_basics() {
        let p = m(&[1, 2], "1,0/1,2");
        let id = GroupAlgebraElt::new(4, [(Permutation::identity(4), rat(1))]).unwrap();
        assert_eq!(id.apply(&p, ActionMode::Hivert).unwrap(), p);
        let zero = GroupAlgebraElt::new(
            4,
            [(Permutation::identity(4), rat(1)), (Permutation::identity(4), rat(-1))],
        )
        .unwrap();
        assert!(zero.apply(&p, ActionMode::Natural).unwrap().is_zero());
        let e = e_element(1, 2, 3, 4).unwrap();
        assert!(e.apply(&m(&[1, 3, 4], "2,0,2/1,1,0"), ActionMode::Hivert).unwrap().is_zero());
        // Not in the kernel of the natural action.
        assert!(!e.apply(&m(&[1, 3, 4], "2,0,2/1,1,0"), ActionMode::Natural).unwrap().is_zero());
    }

    #[test]
    fn traces() {
        let id = Permutation::identity(2);
        let swap = perm("2 1");
        assert_eq!(hivert_trace(&id, 2, (1, 0)).unwrap(), 2);
        assert_eq!(hivert_trace(&swap, 2, (1, 0)).unwrap(), 0);
        // x1y1 and x2y2 swap, x1y2 and x2y1 keep the support {1, 2}.
        assert_eq!(hivert_trace(&swap, 2, (1, 1)).unwrap(), 2);
    }

    #[test]
    fn cycle_types() {
        assert_eq!(Permutation::identity(3).cycle_type(), Partition::new(vec![1, 1, 1]));
        assert_eq!(perm("3 1 2").cycle_type(), Partition::new(vec![3]));
        assert_eq!(perm("2 1 4 3").cycle_type(), Partition::new(vec![2, 2]));
    }

    #[test]
    fn hivert_is_a_left_action() {
        let group = Permutation::all(3);
        let monos: Vec<_> = (0..=2)
            .flat_map(|a| (0..=2).map(move |b| (a, b)))
            .flat_map(|d| monomial_basis(3, d))
            .collect();
        for s in &group {
            for t in &group {
                let st = s.compose(t).unwrap();
                for mono in &monos {
                    assert_eq!(
                        hivert_monomial(&st, mono),
                        hivert_monomial(s, &hivert_monomial(t, mono))
                    );
                }
            }
        }
    }

    #[test]
    fn hivert_is_not_multiplicative() {
        let s = perm("2 1");
        let p = Polynomial::x(1, 2);
        // x1 x2^2 keeps its shape, while the factors move to x2 and x1^2.
        let q = Polynomial::monomial(2, Monomial::single(2, 2, 0));
        let lhs = hivert_action(&s, &p.mul(&q).unwrap()).unwrap();
        let rhs = hivert_action(&s, &p).unwrap().mul(&hivert_action(&s, &q).unwrap()).unwrap();
        assert_ne!(lhs, rhs);
    }

    #[test]
    fn trace_is_a_class_function() {
        for n in 3..=4 {
            for d in [(1, 0), (1, 1), (2, 1)] {
                let mut by_type = std::collections::BTreeMap::new();
                for s in Permutation::all(n) {
                    let t = hivert_trace(&s, n, d).unwrap();
                    let prev = by_type.entry(s.cycle_type()).or_insert(t);
                    assert_eq!(*prev, t);
                }
            }
        }
    }

    fn arb_poly4() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(
            (prop::collection::vec(0u32..3, 4), prop::collection::vec(0u32..3, 4), -2i64..3),
            0..4,
        )
        .prop_map(|ts| {
            Polynomial::from_terms(4, ts.into_iter().map(|(x, y, c)| (Monomial::from_dense(&x, &y), rat(c))))
        })
    }

    /// Identifies `y_i = x_i`, keeping the polynomial inside `Q[x, y]`.
    fn collapse(p: &Polynomial) -> Polynomial {
        p.map_monomials(|m| {
            let xs: Vec<u32> = (1..=4).map(|i| m.column(i).total()).collect();
            Monomial::from_dense(&xs, &[0; 4])
        })
    }

    proptest! {
        #[test]
        fn natural_is_multiplicative(p in arb_poly4(), q in arb_poly4(), k in 0usize..24) {
            let s = &Permutation::all(4)[k];
            prop_assert_eq!(
                natural_action(s, &p.mul(&q).unwrap()).unwrap(),
                natural_action(s, &p).unwrap().mul(&natural_action(s, &q).unwrap()).unwrap()
            );
        }

        #[test]
        fn hivert_commutes_with_collapse(p in arb_poly4(), k in 0usize..24) {
            let s = &Permutation::all(4)[k];
            prop_assert_eq!(
                hivert_action(s, &collapse(&p)).unwrap(),
                collapse(&hivert_action(s, &p).unwrap())
            );
        }
    }
}
