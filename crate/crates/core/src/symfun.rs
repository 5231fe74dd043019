//! Partitions and symmetric functions expanded in the power-sum basis.

use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;

use crate::action::{hivert_monomial, hivert_trace, Permutation};
use crate::bicomp::{count_by_length, Bicomposition};
use crate::error::{Error, Result};
use crate::lincomb::{render, Combination};
use crate::poly::{factorial, Monomial};
use crate::Bidegree;

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Sorts the given parts decreasingly and drops zeros.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `∏_k k^{m_k} m_k!` where `m_k` is the multiplicity of part `k`.
    pub fn z(&self) -> BigInt {
        self.0
            .iter()
            .dedup_with_count()
            .map(|(m, &k)| BigInt::from(k).pow(m as u32) * factorial(m as u32))
            .product()
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.iter().join(","))
    }
}

pub fn z_of(l: &Partition) -> BigInt {
    l.z()
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions(n: u32) -> Vec<Partition> {
    fn go(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            prefix.push(p);
            go(rest - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// A homogeneous symmetric function of degree `n` in the `p` basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymP {
    degree: u32,
    terms: Combination<Partition>,
}

impl SymP {
    pub fn zero(degree: u32) -> Self {
        SymP {
            degree,
            terms: Combination::zero(),
        }
    }

    pub fn one() -> Self {
        Self::power_sum(Partition::default())
    }

    pub fn power_sum(l: Partition) -> Self {
        SymP {
            degree: l.size(),
            terms: Combination::basis(l),
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeff(&self, l: &Partition) -> BigRational {
        self.terms.coeff(l)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn add(&self, other: &SymP) -> SymP {
        assert_eq!(self.degree, other.degree, "adding symmetric functions of different degree");
        SymP {
            degree: self.degree,
            terms: &self.terms + &other.terms,
        }
    }

    pub fn scale(&self, c: &BigRational) -> SymP {
        SymP {
            degree: self.degree,
            terms: self.terms.scale(c),
        }
    }

    pub fn mul(&self, other: &SymP) -> SymP {
        p_mult(self, other)
    }
}

impl fmt::Display for SymP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render(&self.terms, |l| format!("p[{l}]")))
    }
}

/// `h_k = Σ_{λ ⊢ k} p_λ / z_λ`.
pub fn h_in_p(k: u32) -> SymP {
    SymP {
        degree: k,
        terms: partitions(k)
            .into_iter()
            .map(|l| {
                let z = l.z();
                (l, BigRational::new(BigInt::one(), z))
            })
            .collect(),
    }
}

pub fn p_mult(u: &SymP, v: &SymP) -> SymP {
    SymP {
        degree: u.degree + v.degree,
        terms: u.terms.bilinear(&v.terms, |a, b| Combination::basis(a.union(b))),
    }
}

/// Largest `n` accepted by the trace-based Frobenius computations.
pub const FROBENIUS_MAX_N: usize = 5;

fn frobenius_sum(n: usize, trace: impl Fn(&Permutation) -> u64 + Sync) -> SymP {
    let group = Permutation::all(n);
    let contributions: Vec<(Partition, u64)> = group
        .par_iter()
        .map(|s| (s.cycle_type(), trace(s)))
        .collect();
    let scale = BigRational::new(BigInt::one(), factorial(n as u32));
    let terms: Combination<Partition> = contributions
        .into_iter()
        .map(|(l, t)| (l, BigRational::from_integer(t.into()) * &scale))
        .collect();
    SymP {
        degree: n as u32,
        terms,
    }
}

/// `(1/n!) Σ_σ χ(σ) p_{λ(σ)}` with `χ` the Hivert trace on bidegree `d`.
pub fn frobenius_from_traces(n: usize, d: Bidegree) -> Result<SymP> {
    if n > FROBENIUS_MAX_N {
        return Err(Error::TooLarge(format!("frobenius with n = {n}")));
    }
    Ok(frobenius_sum(n, |s| hivert_trace(s, n, d).expect("same n")))
}

/// `Σ_k c_k(d) h_k h_{n-k}` with `c_k(d)` the number of bicompositions of
/// bidegree `d` and length `k`.
pub fn frobenius_from_formula(n: usize, d: Bidegree) -> SymP {
    let n32 = n as u32;
    let mut acc = SymP::zero(n32);
    for k in 0..=n {
        let c = count_by_length(d, k);
        if c == 0 {
            continue;
        }
        let term = h_in_p(k as u32).mul(&h_in_p(n32 - k as u32));
        acc = acc.add(&term.scale(&BigRational::from_integer(c.into())));
    }
    acc
}

/// Frobenius characteristic of the span of monomials with exponent
/// exactly `a`.
pub fn k_space_frobenius(a: &Bicomposition, n: usize) -> Result<SymP> {
    if a.len() > n {
        return Err(Error::LengthExceedsVariables { len: a.len(), n });
    }
    if n > FROBENIUS_MAX_N {
        return Err(Error::TooLarge(format!("frobenius with n = {n}")));
    }
    let monos: Vec<Monomial> = (1..=n as u32)
        .combinations(a.len())
        .map(|support| Monomial::new(support, a.clone()).expect("sorted support"))
        .collect();
    Ok(frobenius_sum(n, |s| {
        monos.iter().filter(|m| &hivert_monomial(s, m) == *m).count() as u64
    }))
}
