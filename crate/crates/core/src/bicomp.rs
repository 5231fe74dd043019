//! Bicompositions and the combinatorics built on them.
//!
//! A bicomposition is a sequence of nonzero bivectors `(a_i / b_i)`. It is
//! written in matrix form with the top row holding the x-exponents and the
//! bottom row the y-exponents, e.g. `2,0/1,3`. The empty bicomposition is
//! written `-`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::Bidegree;

/// A pair `(a, b)` of natural numbers. Ordered lexicographically, top entry
/// first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Bivector {
    pub a: u32,
    pub b: u32,
}

impl Bivector {
    pub const fn new(a: u32, b: u32) -> Self {
        Bivector { a, b }
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn total(self) -> u32 {
        self.a + self.b
    }
}

impl std::ops::Add for Bivector {
    type Output = Bivector;

    fn add(self, rhs: Bivector) -> Bivector {
        Bivector::new(self.a + rhs.a, self.b + rhs.b)
    }
}

/// An ordinary composition, the image of a bicomposition under the
/// collapse `y = x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Composition(pub Vec<u32>);

impl Composition {
    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The single-row bicomposition `(c_1, .., c_k / 0, .., 0)`.
    pub fn to_bicomposition(&self) -> Bicomposition {
        Bicomposition(self.0.iter().map(|&c| Bivector::new(c, 0)).collect())
    }
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "-");
        }
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// A finite sequence of nonzero bivectors.
///
/// The `Ord` instance compares by length first and then part by part in
/// biletter order. This is the deterministic order used by every
/// enumeration in the crate. Word (lexicographic) comparison is available
/// through [`Bicomposition::lex_cmp`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Bicomposition(Vec<Bivector>);

impl Bicomposition {
    pub fn new(parts: Vec<Bivector>) -> Result<Self> {
        if parts.iter().any(|p| p.is_zero()) {
            return Err(Error::Parse {
                what: "bicomposition",
                input: format!("{parts:?}"),
                reason: "zero column".into(),
            });
        }
        Ok(Bicomposition(parts))
    }

    /// Builds from `(a, b)` pairs.
    pub fn from_pairs(pairs: &[(u32, u32)]) -> Result<Self> {
        Self::new(pairs.iter().map(|&(a, b)| Bivector::new(a, b)).collect())
    }

    /// Builds from the two rows of the matrix notation.
    pub fn from_rows(top: &[u32], bottom: &[u32]) -> Result<Self> {
        if top.len() != bottom.len() {
            return Err(Error::Parse {
                what: "bicomposition",
                input: format!("{top:?}/{bottom:?}"),
                reason: "rows of unequal length".into(),
            });
        }
        Self::new(
            top.iter()
                .zip(bottom)
                .map(|(&a, &b)| Bivector::new(a, b))
                .collect(),
        )
    }

    pub fn empty() -> Self {
        Bicomposition(Vec::new())
    }

    pub fn single(v: Bivector) -> Result<Self> {
        Self::new(vec![v])
    }

    pub fn parts(&self) -> &[Bivector] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn top(&self) -> Vec<u32> {
        self.0.iter().map(|p| p.a).collect()
    }

    pub fn bottom(&self) -> Vec<u32> {
        self.0.iter().map(|p| p.b).collect()
    }

    pub fn bidegree(&self) -> Bidegree {
        self.0
            .iter()
            .fold((0, 0), |(x, y), p| (x + p.a, y + p.b))
    }

    pub fn total_degree(&self) -> u32 {
        let (x, y) = self.bidegree();
        x + y
    }

    pub fn collapse(&self) -> Composition {
        Composition(self.0.iter().map(|p| p.total()).collect())
    }

    /// Word comparison over the biletter alphabet (a proper prefix is
    /// smaller).
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        self.0.as_slice().cmp(other.0.as_slice())
    }

    /// `(α_1, .., α_k + β_1, .., β_l)`.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        let (Some((&last, init)), Some((&first, rest))) =
            (self.0.split_last(), other.0.split_first())
        else {
            return Err(Error::EmptyBicomposition);
        };
        let mut parts = Vec::with_capacity(self.len() + other.len() - 1);
        parts.extend_from_slice(init);
        parts.push(last + first);
        parts.extend_from_slice(rest);
        Ok(Bicomposition(parts))
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Bicomposition(parts)
    }

    fn prepend(&self, head: Bivector) -> Self {
        let mut parts = Vec::with_capacity(self.len() + 1);
        parts.push(head);
        parts.extend_from_slice(&self.0);
        Bicomposition(parts)
    }

    fn tail(&self) -> Self {
        Bicomposition(self.0[1..].to_vec())
    }

    /// The quasi-shuffle as a set, unrolled by splitting off the first part
    /// of `other` and letting it land after (or merge into the end of) every
    /// prefix of `self`.
    pub fn quasi_shuffle(&self, other: &Self) -> BTreeSet<Bicomposition> {
        if other.is_empty() {
            return BTreeSet::from([self.clone()]);
        }
        if self.is_empty() {
            return BTreeSet::from([other.clone()]);
        }
        let head = Bicomposition(vec![other.0[0]]);
        let other_rest = other.tail();
        let mut out = BTreeSet::new();
        for cut in 0..=self.len() {
            let prefix = Bicomposition(self.0[..cut].to_vec());
            let suffix = Bicomposition(self.0[cut..].to_vec());
            for c in suffix.quasi_shuffle(&other_rest) {
                out.insert(prefix.concat(&head).concat(&c));
                if let Ok(merged) = prefix.sum(&head) {
                    out.insert(merged.concat(&c));
                }
            }
        }
        out
    }

    /// The quasi-shuffle as a multiset: each result is paired with the
    /// number of ways it arises. These are the structure constants of the
    /// monomial basis product.
    pub fn quasi_shuffle_counts(&self, other: &Self) -> BTreeMap<Bicomposition, u64> {
        let mut memo = BTreeMap::new();
        qsh_counts(&self.0, &other.0, &mut memo)
    }

    /// Every bicomposition obtained by splitting each part into an ordered
    /// sequence of nonzero bivectors with the same vector sum.
    pub fn refinements(&self) -> BTreeSet<Bicomposition> {
        let mut acc = vec![Bicomposition::empty()];
        for &part in &self.0 {
            let splits = enumerate_bicompositions((part.a, part.b), usize::MAX);
            acc = acc
                .iter()
                .flat_map(|prefix| splits.iter().map(move |s| prefix.concat(s)))
                .collect();
        }
        acc.into_iter().collect()
    }

    /// True iff `self` arises from `other` by summing groups of consecutive
    /// parts, i.e. `other` is a refinement of `self`.
    pub fn order_leq(&self, other: &Self) -> bool {
        let mut it = other.0.iter();
        for &target in &self.0 {
            let mut acc = Bivector::default();
            while acc.total() < target.total() {
                match it.next() {
                    Some(&p) => acc = acc + p,
                    None => return false,
                }
            }
            if acc != target {
                return false;
            }
        }
        it.next().is_none()
    }

    /// Strictly smaller than each of its proper cyclic rotations.
    pub fn is_lyndon(&self) -> Result<bool> {
        if self.is_empty() {
            return Err(Error::EmptyBicomposition);
        }
        let w = &self.0;
        let k = w.len();
        Ok((1..k).all(|r| {
            let rotated = w[r..].iter().chain(&w[..r]);
            w.iter().lt(rotated)
        }))
    }

    /// Factorization into a weakly decreasing product of Lyndon words
    /// (Duval's algorithm).
    pub fn lyndon_factorization(&self) -> Vec<Bicomposition> {
        let w = &self.0;
        let n = w.len();
        let mut out = Vec::new();
        let mut i = 0;
        while i < n {
            let (mut j, mut k) = (i + 1, i);
            while j < n && w[k] <= w[j] {
                if w[k] < w[j] {
                    k = i;
                } else {
                    k += 1;
                }
                j += 1;
            }
            while i <= k {
                out.push(Bicomposition(w[i..i + j - k].to_vec()));
                i += j - k;
            }
        }
        out
    }

    /// Moves one unit from the top row to the bottom row at the first
    /// column whose top entry is positive.
    pub fn phi(&self) -> Result<Self> {
        let m = self
            .0
            .iter()
            .position(|p| p.a > 0)
            .ok_or(Error::ZeroTopRow)?;
        let mut parts = self.0.clone();
        parts[m].a -= 1;
        parts[m].b += 1;
        Ok(Bicomposition(parts))
    }
}

fn qsh_counts(
    a: &[Bivector],
    b: &[Bivector],
    memo: &mut BTreeMap<(Vec<Bivector>, Vec<Bivector>), BTreeMap<Bicomposition, u64>>,
) -> BTreeMap<Bicomposition, u64> {
    if a.is_empty() || b.is_empty() {
        let rest = if a.is_empty() { b } else { a };
        return BTreeMap::from([(Bicomposition(rest.to_vec()), 1)]);
    }
    let key = (a.to_vec(), b.to_vec());
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let mut out = BTreeMap::new();
    let branches = [
        (a[0], &a[1..], b),
        (b[0], a, &b[1..]),
        (a[0] + b[0], &a[1..], &b[1..]),
    ];
    for (head, ra, rb) in branches {
        for (c, mult) in qsh_counts(ra, rb, memo) {
            *out.entry(c.prepend(head)).or_insert(0) += mult;
        }
    }
    memo.insert(key, out.clone());
    out
}

impl Ord for Bicomposition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Bicomposition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Bicomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "-");
        }
        let row = |sel: fn(&Bivector) -> u32| {
            self.0
                .iter()
                .map(|p| sel(p).to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "{}/{}", row(|p| p.a), row(|p| p.b))
    }
}

impl FromStr for Bicomposition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" {
            return Ok(Bicomposition::empty());
        }
        let err = |reason: &str| Error::Parse {
            what: "bicomposition",
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let (top, bottom) = s.split_once('/').ok_or_else(|| err("missing '/'"))?;
        let row = |r: &str| -> Result<Vec<u32>> {
            r.split(',')
                .map(|t| t.trim().parse::<u32>().map_err(|e| err(&e.to_string())))
                .collect()
        };
        let (top, bottom) = (row(top)?, row(bottom)?);
        if top.len() != bottom.len() {
            return Err(err("rows of unequal length"));
        }
        if top.iter().zip(&bottom).any(|(&a, &b)| a == 0 && b == 0) {
            return Err(err("zero column"));
        }
        Bicomposition::from_rows(&top, &bottom)
    }
}

/// All nonzero bivectors `v` with `v <= bound` componentwise.
fn nonzero_bivectors_below(bound: Bidegree) -> impl Iterator<Item = Bivector> {
    (0..=bound.0)
        .flat_map(move |a| (0..=bound.1).map(move |b| Bivector::new(a, b)))
        .filter(|v| !v.is_zero())
}

/// All bicompositions of exactly the given bidegree with at most `maxlen`
/// parts, sorted.
pub fn enumerate_bicompositions(bidegree: Bidegree, maxlen: usize) -> Vec<Bicomposition> {
    fn go(
        rest: Bidegree,
        maxlen: usize,
        prefix: &mut Vec<Bivector>,
        out: &mut Vec<Bicomposition>,
    ) {
        if rest == (0, 0) {
            out.push(Bicomposition(prefix.clone()));
            return;
        }
        if prefix.len() == maxlen {
            return;
        }
        for v in nonzero_bivectors_below(rest) {
            prefix.push(v);
            go((rest.0 - v.a, rest.1 - v.b), maxlen, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(bidegree, maxlen, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// All bicompositions (including the empty one) whose bidegree is
/// componentwise at most `bound`, sorted.
pub fn enumerate_up_to(bound: Bidegree, maxlen: usize) -> Vec<Bicomposition> {
    let mut out: Vec<_> = (0..=bound.0)
        .flat_map(|a| (0..=bound.1).map(move |b| (a, b)))
        .flat_map(|d| enumerate_bicompositions(d, maxlen))
        .collect();
    out.sort();
    out
}

/// All bicompositions with total degree at most `total`, sorted.
pub fn enumerate_by_total(total: u32, maxlen: usize) -> Vec<Bicomposition> {
    let mut out: Vec<_> = (0..=total)
        .flat_map(|t| (0..=t).map(move |a| (a, t - a)))
        .flat_map(|d| enumerate_bicompositions(d, maxlen))
        .collect();
    out.sort();
    out
}

/// Lyndon bicompositions of bidegree at most `maxbidegree`, sorted.
pub fn lyndon_list(maxbidegree: Bidegree) -> Vec<Bicomposition> {
    enumerate_up_to(maxbidegree, usize::MAX)
        .into_iter()
        .filter(|c| !c.is_empty() && c.is_lyndon().unwrap_or(false))
        .collect()
}

/// Number of bicompositions of the given bidegree and exact length.
pub fn count_by_length(bidegree: Bidegree, len: usize) -> u64 {
    enumerate_bicompositions(bidegree, len)
        .iter()
        .filter(|c| c.len() == len)
        .count() as u64
}
