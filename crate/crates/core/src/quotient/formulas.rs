//! Closed forms and recurrences for the Hilbert series of the quotients.

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::One;

use crate::series::{BivariateSeries, UnivariateSeries};
use crate::symfun::partitions;

pub fn catalan(k: u32) -> u64 {
    (binomial(2 * k as u64, k as u64)) / (k as u64 + 1)
}

/// `Σ_{k<n} (n-k)/(n+k) C(n+k, k) q^k`.
pub fn hilbert_q(n: usize) -> UnivariateSeries {
    let n = n as i64;
    UnivariateSeries::polynomial(
        (0..n)
            .map(|k| {
                BigRational::new(BigInt::from(n - k), BigInt::from(n + k))
                    * BigRational::from_integer(binomial(BigInt::from(n + k), BigInt::from(k)))
            })
            .collect(),
    )
}

/// `[n]_q! = ∏_{k=1}^n (1 + q + .. + q^{k-1})`.
pub fn q_factorial(n: usize) -> UnivariateSeries {
    (1..=n).fold(UnivariateSeries::one(), |acc, k| {
        acc.mul(&UnivariateSeries::from_integers(&vec![1; k]))
    })
}

/// `Ψ_n = Ψ_{n-1} + q^n ([n]_q! - Ψ_{n-1})`, `Ψ_0 = 1`.
pub fn psi(n: usize) -> UnivariateSeries {
    (1..=n).fold(UnivariateSeries::one(), |prev, k| {
        let diff = q_factorial(k).sub(&prev);
        prev.add(&UnivariateSeries::monomial(k).mul(&diff))
    })
}

/// `[n]_q! ((1-q)^{n+1} - q^{n+1}) / (1 - 2q)`, expanded up to `q^trunc`.
pub fn formule_r(n: usize, trunc: usize) -> UnivariateSeries {
    let one_minus_q = UnivariateSeries::from_integers(&[1, -1]);
    let power = (0..=n).fold(UnivariateSeries::one(), |acc, _| acc.mul(&one_minus_q));
    let numer = power.sub(&UnivariateSeries::monomial(n + 1));
    let geometric = UnivariateSeries::from_integers(&[1, -2]).inverse(trunc);
    q_factorial(n).mul(&numer).mul(&geometric)
}

/// `Σ_{k=0}^n (S - 1)^k / h_n[S]` with `S = 1/((1-q)(1-t))`, where
/// `h_n[S] = Σ_{λ ⊢ n} z_λ^{-1} ∏_k 1/((1 - q^{λ_k})(1 - t^{λ_k}))`.
pub fn plethystic_guess(n: usize, trunc: (usize, usize)) -> BivariateSeries {
    let s = BivariateSeries::geometric(trunc, 1, 1);
    let base = s.sub(&BivariateSeries::one(trunc));
    let mut numer = BivariateSeries::zero(trunc);
    let mut power = BivariateSeries::one(trunc);
    for _ in 0..=n {
        numer = numer.add(&power);
        power = power.mul(&base);
    }
    let mut denom = BivariateSeries::zero(trunc);
    for l in partitions(n as u32) {
        let term = l.parts().iter().fold(BivariateSeries::one(trunc), |acc, &k| {
            acc.mul(&BivariateSeries::geometric(trunc, k as usize, k as usize))
        });
        denom = denom.add(&term.scale(&BigRational::new(BigInt::one(), l.z())));
    }
    numer.mul(&denom.inverse())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lincomb::rat;

    #[test]
    fn catalan_numbers() {
        let c: Vec<u64> = (0..8).map(catalan).collect();
        assert_eq!(c, vec![1, 1, 2, 5, 14, 42, 132, 429]);
    }

    #[test]
    fn hilbert_q_examples() {
        assert_eq!(hilbert_q(1), UnivariateSeries::from_integers(&[1]));
        assert_eq!(hilbert_q(4), UnivariateSeries::from_integers(&[1, 3, 5, 5]));
        assert_eq!(hilbert_q(5), UnivariateSeries::from_integers(&[1, 4, 9, 14, 14]));
        // Top coefficient is the Catalan number C_{n-1}.
        for n in 1..9 {
            assert_eq!(hilbert_q(n).coeff(n - 1), Some(rat(catalan(n as u32 - 1) as i64)));
        }
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi(0), UnivariateSeries::one());
        assert_eq!(psi(1), UnivariateSeries::one());
        assert_eq!(psi(2), UnivariateSeries::from_integers(&[1, 0, 0, 1]));
        assert_eq!(psi(3), UnivariateSeries::from_integers(&[1, 0, 0, 1, 2, 2]));
        assert_eq!(psi(3).degree(), Some(5));
    }

    #[test]
    fn formula_matches_recurrence() {
        assert!(formule_r(0, 6).agrees_up_to(&UnivariateSeries::one(), 6));
        for n in 1..=6 {
            let bound = n * (n + 1) / 2 + 4;
            assert!(formule_r(n, bound).agrees_up_to(&psi(n), bound), "n = {n}");
        }
    }

    #[test]
    fn guess_n2() {
        let g = plethystic_guess(2, (4, 4));
        let expected: &[((usize, usize), i64)] = &[
            ((0, 0), 1),
            ((1, 0), 0),
            ((0, 1), 0),
            ((1, 1), 1),
            ((3, 0), 1),
            ((2, 1), 1),
            ((1, 2), 1),
            ((0, 3), 1),
            ((3, 1), -1),
            ((2, 2), -1),
            ((1, 3), -1),
        ];
        for &((i, j), c) in expected {
            assert_eq!(g.coeff(i, j), Some(rat(c)), "q^{i} t^{j}");
        }
        assert_eq!(g.coeff(5, 0), None);
        for n in 0..4 {
            assert_eq!(plethystic_guess(n, (3, 3)).coeff(0, 0), Some(rat(1)));
        }
    }

    #[test]
    fn guess_n2_closed_form() {
        // With u = (1-q)(1-t), clearing denominators gives
        // (1 - u + u^2)(1 + q)(1 + t) / (1 + qt) for n = 2.
        let b = (6, 6);
        let f = |terms: &[(usize, usize, i64)]| {
            BivariateSeries::from_terms(b, terms.iter().map(|&(i, j, c)| (i, j, rat(c))))
        };
        let u = f(&[(0, 0, 1), (1, 0, -1), (0, 1, -1), (1, 1, 1)]);
        let closed = BivariateSeries::one(b)
            .sub(&u)
            .add(&u.mul(&u))
            .mul(&f(&[(0, 0, 1), (1, 0, 1)]))
            .mul(&f(&[(0, 0, 1), (0, 1, 1)]))
            .mul(&f(&[(0, 0, 1), (1, 1, 1)]).inverse());
        assert_eq!(plethystic_guess(2, b), closed);
    }
}
