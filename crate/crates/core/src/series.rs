//! Truncated power series in one and two variables with rational
//! coefficients.
//!
//! A truncated series only knows its coefficients up to its bound; asking
//! for anything beyond returns `None` rather than zero.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::lincomb::rational_text;

/// A series in `q`. When `bound` is `None` the series is an exact
/// polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnivariateSeries {
    coeffs: Vec<BigRational>,
    bound: Option<usize>,
}

impl UnivariateSeries {
    pub fn polynomial(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UnivariateSeries { coeffs, bound: None }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::polynomial(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    /// Coefficients known for exponents `0..=bound`.
    pub fn truncated(mut coeffs: Vec<BigRational>, bound: usize) -> Self {
        coeffs.resize(bound + 1, BigRational::zero());
        UnivariateSeries {
            coeffs,
            bound: Some(bound),
        }
    }

    pub fn one() -> Self {
        Self::polynomial(vec![BigRational::one()])
    }

    /// `q^k`.
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![BigRational::zero(); k + 1];
        c[k] = BigRational::one();
        Self::polynomial(c)
    }

    pub fn bound(&self) -> Option<usize> {
        self.bound
    }

    pub fn is_exact(&self) -> bool {
        self.bound.is_none()
    }

    /// Degree of an exact polynomial (`None` for zero or truncated series).
    pub fn degree(&self) -> Option<usize> {
        match self.bound {
            None => self.coeffs.len().checked_sub(1),
            Some(_) => None,
        }
    }

    pub fn coeff(&self, k: usize) -> Option<BigRational> {
        match self.bound {
            Some(b) if k > b => None,
            _ => Some(self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)),
        }
    }

    /// Known coefficients, from `q^0` up.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn truncate(&self, bound: usize) -> Self {
        let b = self.bound.map_or(bound, |own| own.min(bound));
        let coeffs = (0..=b).map(|k| self.coeff(k).expect("within bound")).collect();
        Self::truncated(coeffs, b)
    }

    fn combined_bound(&self, other: &Self) -> Option<usize> {
        match (self.bound, other.bound) {
            (None, b) | (b, None) => b,
            (Some(a), Some(b)) => Some(a.min(b)),
        }
    }

    fn build(coeffs: Vec<BigRational>, bound: Option<usize>) -> Self {
        match bound {
            None => Self::polynomial(coeffs),
            Some(b) => {
                let mut coeffs = coeffs;
                coeffs.truncate(b + 1);
                Self::truncated(coeffs, b)
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|k| {
                self.coeffs.get(k).cloned().unwrap_or_default()
                    + other.coeffs.get(k).cloned().unwrap_or_default()
            })
            .collect();
        Self::build(coeffs, self.combined_bound(other))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::build(self.coeffs.iter().map(|x| x * c).collect(), self.bound)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let bound = self.combined_bound(other);
        let len = (self.coeffs.len() + other.coeffs.len()).saturating_sub(1);
        let len = bound.map_or(len, |b| len.min(b + 1));
        let mut coeffs = vec![BigRational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(len - i) {
                coeffs[i + j] += a * b;
            }
        }
        Self::build(coeffs, bound)
    }

    /// `1 / self` up to `bound`. Requires a nonzero constant term.
    pub fn inverse(&self, bound: usize) -> Self {
        let bound = self.bound.map_or(bound, |b| b.min(bound));
        let c0 = self.coeffs.first().cloned().unwrap_or_default();
        assert!(!c0.is_zero(), "inverse of a series without constant term");
        let inv0 = c0.recip();
        let mut out = vec![BigRational::zero(); bound + 1];
        out[0] = inv0.clone();
        for k in 1..=bound {
            let mut acc = BigRational::zero();
            for j in 1..=k.min(self.coeffs.len().saturating_sub(1)) {
                acc += &self.coeffs[j] * &out[k - j];
            }
            out[k] = -acc * &inv0;
        }
        Self::truncated(out, bound)
    }

    /// Coefficientwise equality on exponents `0..=deg`. Unknown coefficients
    /// compare unequal.
    pub fn agrees_up_to(&self, other: &Self, deg: usize) -> bool {
        (0..=deg).all(|k| match (self.coeff(k), other.coeff(k)) {
            (Some(a), Some(b)) => a == b,
            _ => false,
        })
    }
}

impl fmt::Display for UnivariateSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let var = match k {
                0 => String::new(),
                1 => "q".into(),
                _ => format!("q^{k}"),
            };
            parts.push(match (k, c.is_one()) {
                (0, _) => rational_text(c),
                (_, true) => var,
                _ => format!("{}*{}", rational_text(c), var),
            });
        }
        let body = if parts.is_empty() { "0".into() } else { parts.join(" + ") };
        match self.bound {
            None => write!(f, "{body}"),
            Some(b) => write!(f, "{body} + O(q^{})", b + 1),
        }
    }
}

/// A series in `q` and `t` known on the box `0..=bound.0` x `0..=bound.1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariateSeries {
    /// `coeffs[i][j]` is the coefficient of `q^i t^j`.
    coeffs: Vec<Vec<BigRational>>,
    bound: (usize, usize),
}

impl BivariateSeries {
    pub fn zero(bound: (usize, usize)) -> Self {
        BivariateSeries {
            coeffs: vec![vec![BigRational::zero(); bound.1 + 1]; bound.0 + 1],
            bound,
        }
    }

    pub fn one(bound: (usize, usize)) -> Self {
        let mut s = Self::zero(bound);
        s.coeffs[0][0] = BigRational::one();
        s
    }

    /// Builds from `(i, j, c)` triples; entries outside the box are dropped.
    pub fn from_terms(bound: (usize, usize), terms: impl IntoIterator<Item = (usize, usize, BigRational)>) -> Self {
        let mut s = Self::zero(bound);
        for (i, j, c) in terms {
            if i <= bound.0 && j <= bound.1 {
                s.coeffs[i][j] += c;
            }
        }
        s
    }

    /// `1 / ((1 - q^a)(1 - t^b))`.
    pub fn geometric(bound: (usize, usize), a: usize, b: usize) -> Self {
        let mut s = Self::zero(bound);
        for i in (0..=bound.0).step_by(a) {
            for j in (0..=bound.1).step_by(b) {
                s.coeffs[i][j] = BigRational::one();
            }
        }
        s
    }

    pub fn bound(&self) -> (usize, usize) {
        self.bound
    }

    pub fn coeff(&self, i: usize, j: usize) -> Option<BigRational> {
        (i <= self.bound.0 && j <= self.bound.1).then(|| self.coeffs[i][j].clone())
    }

    fn common(&self, other: &Self) -> (usize, usize) {
        (self.bound.0.min(other.bound.0), self.bound.1.min(other.bound.1))
    }

    pub fn add(&self, other: &Self) -> Self {
        let b = self.common(other);
        let mut s = Self::zero(b);
        for i in 0..=b.0 {
            for j in 0..=b.1 {
                s.coeffs[i][j] = &self.coeffs[i][j] + &other.coeffs[i][j];
            }
        }
        s
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut s = self.clone();
        for row in s.coeffs.iter_mut() {
            for x in row.iter_mut() {
                *x *= c;
            }
        }
        s
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let b = self.common(other);
        let mut s = Self::zero(b);
        for i1 in 0..=b.0 {
            for j1 in 0..=b.1 {
                let x = &self.coeffs[i1][j1];
                if x.is_zero() {
                    continue;
                }
                for i2 in 0..=b.0 - i1 {
                    for j2 in 0..=b.1 - j1 {
                        let y = &other.coeffs[i2][j2];
                        if !y.is_zero() {
                            s.coeffs[i1 + i2][j1 + j2] += x * y;
                        }
                    }
                }
            }
        }
        s
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.bound), |acc, _| acc.mul(self))
    }

    /// `1 / self`. Requires a nonzero constant term.
    pub fn inverse(&self) -> Self {
        let c0 = &self.coeffs[0][0];
        assert!(!c0.is_zero(), "inverse of a series without constant term");
        let inv0 = c0.recip();
        let b = self.bound;
        let mut out = Self::zero(b);
        // Fill in graded (i + j) order so every needed entry is known.
        for total in 0..=b.0 + b.1 {
            for i in 0..=total.min(b.0) {
                let j = total - i;
                if j > b.1 {
                    continue;
                }
                if total == 0 {
                    out.coeffs[0][0] = inv0.clone();
                    continue;
                }
                let mut acc = BigRational::zero();
                for i1 in 0..=i {
                    for j1 in 0..=j {
                        if i1 == 0 && j1 == 0 {
                            continue;
                        }
                        let x = &self.coeffs[i1][j1];
                        if !x.is_zero() {
                            acc += x * &out.coeffs[i - i1][j - j1];
                        }
                    }
                }
                out.coeffs[i][j] = -acc * &inv0;
            }
        }
        out
    }

    /// Nonzero coefficients with `i + j <= total`, as `(i, j, c)`.
    pub fn terms_up_to(&self, total: usize) -> Vec<(usize, usize, BigRational)> {
        let mut out = Vec::new();
        for t in 0..=total {
            for i in 0..=t {
                let j = t - i;
                if let Some(c) = self.coeff(i, j) {
                    if !c.is_zero() {
                        out.push((i, j, c));
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bicomp::count_by_length;
    use crate::lincomb::rat;

    #[test]
    fn univariate_inverse() {
        // 1/(1 - 2q) = Σ 2^k q^k
        let s = UnivariateSeries::from_integers(&[1, -2]).inverse(6);
        for k in 0..=6 {
            assert_eq!(s.coeff(k), Some(rat(1 << k)));
        }
        assert_eq!(s.coeff(7), None);
    }

    #[test]
    fn exact_times_truncated_is_truncated() {
        let p = UnivariateSeries::from_integers(&[1, 1]);
        let s = UnivariateSeries::from_integers(&[1, -1]).inverse(4);
        let prod = p.mul(&s);
        assert_eq!(prod.bound(), Some(4));
        assert_eq!(prod.coeff(3), Some(rat(2)));
        assert_eq!(p.mul(&p), UnivariateSeries::from_integers(&[1, 2, 1]));
    }

    #[test]
    fn display() {
        assert_eq!(UnivariateSeries::from_integers(&[1, 0, 0, 1]).to_string(), "1 + q^3");
        assert_eq!(
            UnivariateSeries::from_integers(&[1, 2]).truncate(3).to_string(),
            "1 + 2*q + O(q^4)"
        );
    }

    #[test]
    fn bivariate_inverse_round_trip() {
        let b = (5, 4);
        let s = BivariateSeries::from_terms(b, [(0, 0, rat(1)), (1, 1, rat(1)), (2, 0, rat(-3))]);
        assert_eq!(s.mul(&s.inverse()), BivariateSeries::one(b));
        assert_eq!(s.coeff(6, 0), None);
    }

    #[test]
    fn length_counts_match_series_powers() {
        // Σ_{(a,b) != 0} q^a t^b = 1/((1-q)(1-t)) - 1 = (q + t - qt)/((1-q)(1-t)).
        let b = (4, 4);
        let gen = BivariateSeries::geometric(b, 1, 1).sub(&BivariateSeries::one(b));
        let closed = BivariateSeries::from_terms(b, [(1, 0, rat(1)), (0, 1, rat(1)), (1, 1, rat(-1))])
            .mul(&BivariateSeries::geometric(b, 1, 1));
        assert_eq!(gen, closed);
        for k in 0..=4u32 {
            let p = closed.pow(k);
            for i in 0..=4 {
                for j in 0..=4 {
                    assert_eq!(
                        p.coeff(i, j).unwrap(),
                        rat(count_by_length((i as u32, j as u32), k as usize) as i64),
                        "k = {k}, ({i}, {j})"
                    );
                }
            }
        }
    }
}
