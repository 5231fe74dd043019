//! The free algebra `DNSym` on letters `h_α`, `α` a nonzero bivector, and
//! its pairing with `DQSym`.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::bicomp::{Bicomposition, Bivector};
use crate::dqsym::{coproduct, m_mult, DQSymElt, TensorElt};
use crate::lincomb::{render, Combination};

/// A combination of words `h_{α_1} .. h_{α_k}`, each word stored as the
/// bicomposition `(α_1, .., α_k)`. The empty word is the unit.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DNSymElt(pub Combination<Bicomposition>);

impl DNSymElt {
    pub fn zero() -> Self {
        DNSymElt(Combination::zero())
    }

    pub fn one() -> Self {
        Self::h(Bicomposition::empty())
    }

    pub fn h(word: Bicomposition) -> Self {
        DNSymElt(Combination::basis(word))
    }

    pub fn coeff(&self, w: &Bicomposition) -> BigRational {
        self.0.coeff(w)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Bicomposition, &BigRational)> {
        self.0.iter()
    }

    pub fn add(&self, other: &DNSymElt) -> DNSymElt {
        DNSymElt(&self.0 + &other.0)
    }

    pub fn scale(&self, c: &BigRational) -> DNSymElt {
        DNSymElt(self.0.scale(c))
    }

    pub fn product(&self, other: &DNSymElt) -> DNSymElt {
        h_product(self, other)
    }
}

impl fmt::Display for DNSymElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            render(&self.0, |w| {
                if w.is_empty() {
                    return "1".to_string();
                }
                w.parts()
                    .iter()
                    .map(|p| format!("h[{}/{}]", p.a, p.b))
                    .collect::<Vec<_>>()
                    .join("*")
            })
        )
    }
}

/// Concatenation of words, extended bilinearly.
pub fn h_product(u: &DNSymElt, v: &DNSymElt) -> DNSymElt {
    DNSymElt(u.0.bilinear(&v.0, |a, b| Combination::basis(a.concat(b))))
}

/// Product on `DNSym ⊗ DNSym`, componentwise concatenation.
pub fn h_tensor_product(s: &TensorElt, t: &TensorElt) -> TensorElt {
    s.bilinear(t, |(a1, a2), (b1, b2)| {
        Combination::basis((a1.concat(b1), a2.concat(b2)))
    })
}

/// `Δ(h_α) = Σ_{β+γ=α} h_β ⊗ h_γ`, with `h_0 = 1`.
pub fn letter_coproduct(alpha: Bivector) -> TensorElt {
    let word = |v: Bivector| {
        if v.is_zero() {
            Bicomposition::empty()
        } else {
            Bicomposition::single(v).expect("nonzero")
        }
    };
    (0..=alpha.a)
        .flat_map(|a| (0..=alpha.b).map(move |b| Bivector::new(a, b)))
        .map(|beta| {
            let gamma = Bivector::new(alpha.a - beta.a, alpha.b - beta.b);
            ((word(beta), word(gamma)), BigRational::one())
        })
        .collect()
}

/// The algebra morphism extending [`letter_coproduct`] to words.
pub fn h_coproduct(u: &DNSymElt) -> TensorElt {
    u.0.linear(|w| {
        let unit = Combination::basis((Bicomposition::empty(), Bicomposition::empty()));
        w.parts()
            .iter()
            .fold(unit, |acc, &alpha| h_tensor_product(&acc, &letter_coproduct(alpha)))
    })
}

/// `⟨h_a, M_b⟩ = δ_{ab}`.
pub fn pairing(u: &DNSymElt, v: &DQSymElt) -> BigRational {
    u.terms()
        .map(|(w, c)| c * v.coeff(w))
        .fold(BigRational::zero(), |acc, x| acc + x)
}

/// The pairing on tensor squares.
pub fn tensor_pairing(s: &TensorElt, t: &TensorElt) -> BigRational {
    s.iter()
        .map(|(k, c)| c * t.coeff(k))
        .fold(BigRational::zero(), |acc, x| acc + x)
}

/// Checks both adjointness identities for one index triple:
/// `⟨h_c, M_a M_b⟩ = ⟨Δ h_c, M_a ⊗ M_b⟩` and
/// `⟨h_a h_b, M_c⟩ = ⟨h_a ⊗ h_b, Δ M_c⟩`.
pub fn duality_check(a: &Bicomposition, b: &Bicomposition, c: &Bicomposition) -> bool {
    let ab = (a.clone(), b.clone());
    let pair = Combination::basis(ab);
    let hc = DNSymElt::h(c.clone());
    let mc = DQSymElt::m(c.clone());

    let product_side = pairing(&hc, &m_mult(a, b));
    let coproduct_side = tensor_pairing(&h_coproduct(&hc), &pair);

    let h_product_side = pairing(&DNSymElt::h(a.concat(b)), &mc);
    let m_coproduct_side = tensor_pairing(&pair, &coproduct(&mc));

    product_side == coproduct_side && h_product_side == m_coproduct_side
}
