//! Finite rational linear combinations over an ordered index set.

use std::collections::btree_map;
use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

/// A finite map `key -> nonzero rational`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Combination<K: Ord> {
    terms: BTreeMap<K, BigRational>,
}

impl<K: Ord> Default for Combination<K> {
    fn default() -> Self {
        Combination {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> Combination<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(key: K) -> Self {
        Self::term(key, BigRational::one())
    }

    pub fn term(key: K, coeff: BigRational) -> Self {
        let mut c = Self::zero();
        c.add_term(key, coeff);
        c
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &K) -> BigRational {
        self.terms.get(key).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, BigRational> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, BigRational> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, key: K, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign_scaled(&mut self, other: &Self, scale: &BigRational) {
        if scale.is_zero() {
            return;
        }
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c * scale);
        }
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        let mut out = Self::zero();
        out.add_assign_scaled(self, s);
        out
    }

    /// Applies `f` to every key and sums coefficients that collide.
    pub fn map_keys<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> L) -> Combination<L> {
        let mut out = Combination::zero();
        for (k, c) in &self.terms {
            out.add_term(f(k), c.clone());
        }
        out
    }

    /// Bilinear extension of `f` on basis pairs.
    pub fn bilinear<L: Ord + Clone, M: Ord + Clone>(
        &self,
        other: &Combination<L>,
        mut f: impl FnMut(&K, &L) -> Combination<M>,
    ) -> Combination<M> {
        let mut out = Combination::zero();
        for (k, a) in &self.terms {
            for (l, b) in &other.terms {
                out.add_assign_scaled(&f(k, l), &(a * b));
            }
        }
        out
    }

    /// Linear extension of `f` on basis elements.
    pub fn linear<M: Ord + Clone>(&self, mut f: impl FnMut(&K) -> Combination<M>) -> Combination<M> {
        let mut out = Combination::zero();
        for (k, a) in &self.terms {
            out.add_assign_scaled(&f(k), a);
        }
        out
    }
}

impl<K: Ord + Clone> FromIterator<(K, BigRational)> for Combination<K> {
    fn from_iter<I: IntoIterator<Item = (K, BigRational)>>(iter: I) -> Self {
        let mut c = Self::zero();
        for (k, v) in iter {
            c.add_term(k, v);
        }
        c
    }
}

impl<K: Ord + Clone> std::ops::Add for &Combination<K> {
    type Output = Combination<K>;

    fn add(self, rhs: &Combination<K>) -> Combination<K> {
        let mut out = self.clone();
        out.add_assign_scaled(rhs, &BigRational::one());
        out
    }
}

impl<K: Ord + Clone> std::ops::Sub for &Combination<K> {
    type Output = Combination<K>;

    fn sub(self, rhs: &Combination<K>) -> Combination<K> {
        let mut out = self.clone();
        out.add_assign_scaled(rhs, &-BigRational::one());
        out
    }
}

impl<K: Ord + Clone> std::ops::Neg for &Combination<K> {
    type Output = Combination<K>;

    fn neg(self) -> Combination<K> {
        self.scale(&-BigRational::one())
    }
}

/// Renders as `c1*prefix[key] + c2*prefix[key]`, with unit coefficients
/// written `1`. The zero combination renders as `0`.
pub fn render<K: Ord>(c: &Combination<K>, mut key: impl FnMut(&K) -> String) -> String {
    if c.terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (k, v)) in c.terms.iter().enumerate() {
        let neg = v < &BigRational::zero();
        let mag = if neg { -v.clone() } else { v.clone() };
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&format!("{}*{}", rational_text(&mag), key(k)));
    }
    out
}

/// `p/q`, or `p` when the denominator is one.
pub fn rational_text(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl<K: Ord + fmt::Display> fmt::Display for Combination<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render(self, |k| format!("[{k}]")))
    }
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}
