//! Sparse polynomials with rational coefficients in `x_1..x_n, y_1..y_n`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::bicomp::{Bicomposition, Bivector};
use crate::error::{Error, Result};
use crate::lincomb::Combination;
use crate::Bidegree;

/// A monomial stored as its support set and bicomposition exponent.
///
/// Columns with zero exponent are never stored, so the representation is
/// canonical.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    support: Vec<u32>,
    exponent: Bicomposition,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial {
            support: Vec::new(),
            exponent: Bicomposition::empty(),
        }
    }

    /// `(xy)^a_i` for a strictly increasing support `i` (1-based).
    pub fn new(support: Vec<u32>, exponent: Bicomposition) -> Result<Self> {
        if support.len() != exponent.len() {
            return Err(Error::InvalidIndices(format!(
                "support {support:?} has length {} but exponent {exponent} has length {}",
                support.len(),
                exponent.len()
            )));
        }
        if support.first() == Some(&0) || support.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidIndices(format!(
                "support {support:?} is not strictly increasing in 1..n"
            )));
        }
        Ok(Monomial { support, exponent })
    }

    /// From dense exponent vectors (entry `i` is the exponent of `x_{i+1}`).
    pub fn from_dense(xs: &[u32], ys: &[u32]) -> Self {
        let mut support = Vec::new();
        let mut parts = Vec::new();
        for (i, (&a, &b)) in xs.iter().zip(ys).enumerate() {
            if a != 0 || b != 0 {
                support.push(i as u32 + 1);
                parts.push(Bivector::new(a, b));
            }
        }
        Monomial {
            support,
            exponent: Bicomposition::new(parts).expect("zero columns skipped"),
        }
    }

    pub fn x(i: u32) -> Self {
        Self::single(i, 1, 0)
    }

    pub fn y(i: u32) -> Self {
        Self::single(i, 0, 1)
    }

    /// `x_i^a y_i^b`.
    pub fn single(i: u32, a: u32, b: u32) -> Self {
        if a == 0 && b == 0 {
            return Self::one();
        }
        Monomial {
            support: vec![i],
            exponent: Bicomposition::single(Bivector::new(a, b)).expect("nonzero"),
        }
    }

    pub fn support(&self) -> &[u32] {
        &self.support
    }

    pub fn exponent(&self) -> &Bicomposition {
        &self.exponent
    }

    pub fn bidegree(&self) -> Bidegree {
        self.exponent.bidegree()
    }

    pub fn max_index(&self) -> u32 {
        self.support.last().copied().unwrap_or(0)
    }

    /// `(index, bivector)` pairs in support order.
    pub fn columns(&self) -> impl Iterator<Item = (u32, Bivector)> + '_ {
        self.support
            .iter()
            .copied()
            .zip(self.exponent.parts().iter().copied())
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut support = Vec::with_capacity(self.support.len() + other.support.len());
        let mut parts = Vec::with_capacity(support.capacity());
        let (mut l, mut r) = (self.columns().peekable(), other.columns().peekable());
        loop {
            let next = match (l.peek(), r.peek()) {
                (Some(&(i, u)), Some(&(j, v))) => match i.cmp(&j) {
                    Ordering::Less => {
                        l.next();
                        (i, u)
                    }
                    Ordering::Greater => {
                        r.next();
                        (j, v)
                    }
                    Ordering::Equal => {
                        l.next();
                        r.next();
                        (i, u + v)
                    }
                },
                (Some(&c), None) => {
                    l.next();
                    c
                }
                (None, Some(&c)) => {
                    r.next();
                    c
                }
                (None, None) => break,
            };
            support.push(next.0);
            parts.push(next.1);
        }
        Monomial {
            support,
            exponent: Bicomposition::new(parts).expect("sums of nonzero columns"),
        }
    }

    /// Exponent of `x_i` and `y_i`.
    pub fn column(&self, i: u32) -> Bivector {
        match self.support.binary_search(&i) {
            Ok(pos) => self.exponent.parts()[pos],
            Err(_) => Bivector::default(),
        }
    }

    /// `⟨m, m⟩ = ∏ a_i! b_i!`.
    pub fn self_pairing(&self) -> BigInt {
        self.exponent
            .parts()
            .iter()
            .map(|p| factorial(p.a) * factorial(p.b))
            .product()
    }

    /// Same support, exponent replaced.
    pub(crate) fn with_exponent(&self, exponent: Bicomposition) -> Monomial {
        debug_assert_eq!(exponent.len(), self.support.len());
        Monomial {
            support: self.support.clone(),
            exponent,
        }
    }

    /// Same exponent, new (already sorted) support.
    pub(crate) fn with_support(&self, support: Vec<u32>) -> Monomial {
        debug_assert_eq!(support.len(), self.support.len());
        Monomial {
            support,
            exponent: self.exponent.clone(),
        }
    }
}

pub(crate) fn factorial(k: u32) -> BigInt {
    (1..=k).map(BigInt::from).product()
}

fn falling(k: u32, j: u32) -> BigInt {
    (0..j).map(|t| BigInt::from(k - t)).product()
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.bidegree()
            .cmp(&other.bidegree())
            .then_with(|| self.support.cmp(&other.support))
            .then_with(|| self.exponent.cmp(&other.exponent))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.support.is_empty() {
            return write!(f, "1");
        }
        let mut factors = Vec::new();
        for (i, p) in self.columns() {
            for (name, e) in [("x", p.a), ("y", p.b)] {
                match e {
                    0 => {}
                    1 => factors.push(format!("{name}{i}")),
                    _ => factors.push(format!("{name}{i}^{e}")),
                }
            }
        }
        write!(f, "{}", factors.join("*"))
    }
}

/// A polynomial in `n` pairs of variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    n: usize,
    terms: Combination<Monomial>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial {
            n,
            terms: Combination::zero(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(n, Monomial::one())
    }

    pub fn monomial(n: usize, m: Monomial) -> Self {
        Self::term(n, m, BigRational::one())
    }

    pub fn term(n: usize, m: Monomial, c: BigRational) -> Self {
        assert!(m.max_index() as usize <= n, "monomial {m} outside {n} variables");
        Polynomial {
            n,
            terms: Combination::term(m, c),
        }
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Monomial, BigRational)>) -> Self {
        let terms: Combination<Monomial> = terms.into_iter().collect();
        assert!(terms.keys().all(|m| m.max_index() as usize <= n));
        Polynomial { n, terms }
    }

    pub fn x(i: u32, n: usize) -> Self {
        Self::monomial(n, Monomial::x(i))
    }

    pub fn y(i: u32, n: usize) -> Self {
        Self::monomial(n, Monomial::y(i))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.coeff(m)
    }

    pub fn constant_term(&self) -> BigRational {
        self.coeff(&Monomial::one())
    }

    fn check(&self, other: &Polynomial) -> Result<()> {
        if self.n != other.n {
            return Err(Error::VariableMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        Ok(Polynomial {
            n: self.n,
            terms: &self.terms + &other.terms,
        })
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        Ok(Polynomial {
            n: self.n,
            terms: &self.terms - &other.terms,
        })
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        Polynomial {
            n: self.n,
            terms: self.terms.scale(c),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        Ok(Polynomial {
            n: self.n,
            terms: self
                .terms
                .bilinear(&other.terms, |a, b| Combination::basis(a.mul(b))),
        })
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            n: self.n,
            terms: self.terms.map_keys(|k| k.mul(m)),
        }
    }

    /// `p(∂x, ∂y)` applied to `q`.
    pub fn apply_diff(&self, q: &Polynomial) -> Result<Polynomial> {
        self.check(q)?;
        let mut out = Combination::zero();
        for (dm, dc) in self.terms.iter() {
            for (m, c) in q.terms.iter() {
                if let Some((k, rest)) = differentiate(dm, m) {
                    out.add_term(rest, dc * c * BigRational::from_integer(k));
                }
            }
        }
        Ok(Polynomial { n: self.n, terms: out })
    }

    /// Constant term of `p(∂) q`.
    pub fn scalar_product(&self, q: &Polynomial) -> Result<BigRational> {
        self.check(q)?;
        let mut acc = BigRational::zero();
        for (m, c) in self.terms.iter() {
            let d = q.coeff(m);
            if !d.is_zero() {
                acc += c * d * BigRational::from_integer(m.self_pairing());
            }
        }
        Ok(acc)
    }

    pub fn bidegree_component(&self, d: Bidegree) -> Polynomial {
        Polynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.bidegree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// The common bidegree of all terms, or `None` for a mixed polynomial.
    /// The zero polynomial has no bidegree either.
    pub fn bidegree(&self) -> Option<Bidegree> {
        let mut it = self.terms.keys().map(Monomial::bidegree);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn map_monomials(&self, f: impl FnMut(&Monomial) -> Monomial) -> Polynomial {
        Polynomial {
            n: self.n,
            terms: self.terms.map_keys(f),
        }
    }
}

/// `∂^d m = k * rest` when `d` divides `m`.
fn differentiate(d: &Monomial, m: &Monomial) -> Option<(BigInt, Monomial)> {
    let mut k = BigInt::one();
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    let top = d.max_index().max(m.max_index());
    for i in 1..=top {
        let (p, q) = (d.column(i), m.column(i));
        if p.a > q.a || p.b > q.b {
            return None;
        }
        k *= falling(q.a, p.a) * falling(q.b, p.b);
        xs.push(q.a - p.a);
        ys.push(q.b - p.b);
    }
    Some((k, Monomial::from_dense(&xs, &ys)))
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::lincomb::render(&self.terms, |m| m.to_string()))
    }
}

/// Weak compositions of `total` into `parts` nonnegative entries.
pub(crate) fn weak_compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in weak_compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// All monomials of bidegree `d` in `n` pairs of variables, sorted.
pub fn monomial_basis(n: usize, d: Bidegree) -> Vec<Monomial> {
    let xs = weak_compositions(d.0, n);
    let ys = weak_compositions(d.1, n);
    let mut out: Vec<_> = xs
        .iter()
        .flat_map(|x| ys.iter().map(move |y| Monomial::from_dense(x, y)))
        .collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lincomb::rat;
    use num_integer::binomial;
    use proptest::prelude::*;

    fn mono(xs: &[u32], ys: &[u32]) -> Monomial {
        Monomial::from_dense(xs, ys)
    }

    #[test]
    fn multiplication_examples() {
        let p = Polynomial::x(1, 1).mul(&Polynomial::y(1, 1)).unwrap();
        let m = p.terms().next().unwrap().0.clone();
        assert_eq!(m.support(), &[1]);
        assert_eq!(m.exponent().to_string(), "1/1");

        let x1 = Polynomial::x(1, 2);
        let x2 = Polynomial::x(2, 2);
        let lhs = x1.add(&x2).unwrap().mul(&x1.sub(&x2).unwrap()).unwrap();
        let rhs = x1.mul(&x1).unwrap().sub(&x2.mul(&x2).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(
            x1.mul(&Polynomial::x(1, 3)),
            Err(Error::VariableMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn differential_examples() {
        let n = 2;
        let x1 = Polynomial::monomial(n, mono(&[1, 0], &[0, 0]));
        let x1sq = Polynomial::monomial(n, mono(&[2, 0], &[0, 0]));
        assert_eq!(x1.apply_diff(&x1sq).unwrap(), x1.scale(&rat(2)));
        let x1y1 = Polynomial::monomial(n, mono(&[1, 0], &[1, 0]));
        assert_eq!(x1y1.apply_diff(&x1y1).unwrap(), Polynomial::one(n));
        let target = Polynomial::monomial(n, mono(&[2, 0], &[0, 1]));
        assert_eq!(
            x1sq.apply_diff(&target).unwrap(),
            Polynomial::y(2, n).scale(&rat(2))
        );
    }

    #[test]
    fn scalar_product_examples() {
        let n = 2;
        let x1sq = Polynomial::monomial(n, mono(&[2, 0], &[0, 0]));
        assert_eq!(x1sq.scalar_product(&x1sq).unwrap(), rat(2));
        assert_eq!(
            Polynomial::x(1, n).scalar_product(&Polynomial::y(1, n)).unwrap(),
            rat(0)
        );
        let m = Polynomial::monomial(n, mono(&[2, 0], &[0, 3]));
        assert_eq!(m.scalar_product(&m).unwrap(), rat(12));
        // Same value through explicit differentiation.
        assert_eq!(m.apply_diff(&m).unwrap().constant_term(), rat(12));
    }

    #[test]
    fn components() {
        let p = Polynomial::x(1, 1).add(&Polynomial::y(1, 1)).unwrap();
        assert_eq!(p.bidegree_component((1, 0)), Polynomial::x(1, 1));
        assert!(p.bidegree_component((0, 0)).is_zero());
        assert_eq!(p.bidegree(), None);
        assert_eq!(Polynomial::x(1, 1).bidegree(), Some((1, 0)));
    }

    #[test]
    fn monomial_basis_counts() {
        assert_eq!(
            monomial_basis(2, (1, 0)),
            vec![Monomial::x(2), Monomial::x(1)]
                .into_iter()
                .collect::<std::collections::BTreeSet<_>>()
                .into_iter()
                .collect::<Vec<_>>()
        );
        assert_eq!(monomial_basis(2, (1, 1)).len(), 4);
        assert_eq!(monomial_basis(1, (3, 2)), vec![mono(&[3], &[2])]);
        for n in 1..=4usize {
            for d in [(0, 0), (2, 1), (3, 3)] {
                let expected = binomial(d.0 as u64 + n as u64 - 1, n as u64 - 1)
                    * binomial(d.1 as u64 + n as u64 - 1, n as u64 - 1);
                assert_eq!(monomial_basis(n, d).len() as u64, expected);
            }
        }
    }

    #[test]
    fn display() {
        let m = Monomial::new(
            vec![1, 3, 4],
            "2,0,2/1,1,0".parse().unwrap(),
        )
        .unwrap();
        assert_eq!(m.to_string(), "x1^2*y1*y3*x4^2");
        assert_eq!(Monomial::one().to_string(), "1");
        assert!(Monomial::new(vec![2, 1], "1,1/0,0".parse().unwrap()).is_err());
    }

    const N: usize = 3;

    fn arb_monomial() -> impl Strategy<Value = Monomial> {
        (prop::collection::vec(0u32..3, N), prop::collection::vec(0u32..3, N))
            .prop_map(|(x, y)| Monomial::from_dense(&x, &y))
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((arb_monomial(), -3i64..4), 0..4)
            .prop_map(|ts| Polynomial::from_terms(N, ts.into_iter().map(|(m, c)| (m, rat(c)))))
    }

    fn arb_homogeneous(d: Bidegree) -> impl Strategy<Value = Polynomial> {
        let basis = monomial_basis(N, d);
        prop::collection::vec(-3i64..4, basis.len()).prop_map(move |cs| {
            Polynomial::from_terms(N, basis.iter().cloned().zip(cs.into_iter().map(rat)))
        })
    }

    proptest! {
        #[test]
        fn mul_commutative_associative(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            prop_assert_eq!(p.mul(&q).unwrap(), q.mul(&p).unwrap());
            prop_assert_eq!(
                p.mul(&q).unwrap().mul(&r).unwrap(),
                p.mul(&q.mul(&r).unwrap()).unwrap()
            );
        }

        #[test]
        fn diff_operators_compose(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            prop_assert_eq!(
                p.mul(&q).unwrap().apply_diff(&r).unwrap(),
                p.apply_diff(&q.apply_diff(&r).unwrap()).unwrap()
            );
        }

        #[test]
        fn scalar_product_symmetric(p in arb_homogeneous((2, 1)), q in arb_homogeneous((2, 1))) {
            prop_assert_eq!(p.scalar_product(&q).unwrap(), q.scalar_product(&p).unwrap());
            prop_assert_eq!(p.scalar_product(&q).unwrap(), p.apply_diff(&q).unwrap().constant_term());
        }

        #[test]
        fn components_orthogonal(p in arb_poly(), q in arb_poly()) {
            let a = p.bidegree_component((1, 1));
            let b = q.bidegree_component((2, 0));
            prop_assert_eq!(a.scalar_product(&b).unwrap(), rat(0));
        }

        #[test]
        fn monomials_orthogonal_and_positive(a in arb_monomial(), b in arb_monomial()) {
            let pa = Polynomial::monomial(N, a.clone());
            let pb = Polynomial::monomial(N, b.clone());
            let s = pa.scalar_product(&pb).unwrap();
            if a == b {
                prop_assert!(s > rat(0));
            } else {
                prop_assert_eq!(s, rat(0));
            }
        }
    }
}
