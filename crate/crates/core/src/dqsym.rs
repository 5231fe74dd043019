//! The Hopf algebra `DQSym` of diagonally quasi-symmetric functions.
//!
//! Elements are kept basis-abstractly as combinations of monomial
//! functions `M_a`; [`m_expand`] produces the polynomial in `n` variable
//! pairs on demand.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::bicomp::{lyndon_list, enumerate_bicompositions, Bicomposition, Composition};
use crate::lincomb::{render, Combination};
use crate::linalg::rank_of_rows;
use crate::poly::{Monomial, Polynomial};
use crate::Bidegree;

/// A combination of `M_a`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DQSymElt(pub Combination<Bicomposition>);

/// A combination of `M_a ⊗ M_b` (or `h_a ⊗ h_b` on the dual side).
pub type TensorElt = Combination<(Bicomposition, Bicomposition)>;

/// A quasi-symmetric function in the ordinary monomial basis.
pub type QSymElt = Combination<Composition>;

impl DQSymElt {
    pub fn zero() -> Self {
        DQSymElt(Combination::zero())
    }

    pub fn one() -> Self {
        Self::m(Bicomposition::empty())
    }

    pub fn m(a: Bicomposition) -> Self {
        DQSymElt(Combination::basis(a))
    }

    pub fn coeff(&self, a: &Bicomposition) -> BigRational {
        self.0.coeff(a)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Bicomposition, &BigRational)> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, other: &DQSymElt) -> DQSymElt {
        DQSymElt(&self.0 + &other.0)
    }

    pub fn sub(&self, other: &DQSymElt) -> DQSymElt {
        DQSymElt(&self.0 - &other.0)
    }

    pub fn scale(&self, c: &BigRational) -> DQSymElt {
        DQSymElt(self.0.scale(c))
    }

    pub fn product(&self, other: &DQSymElt) -> DQSymElt {
        product(self, other)
    }
}

impl FromIterator<(Bicomposition, BigRational)> for DQSymElt {
    fn from_iter<I: IntoIterator<Item = (Bicomposition, BigRational)>>(iter: I) -> Self {
        DQSymElt(iter.into_iter().collect())
    }
}

impl fmt::Display for DQSymElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render(&self.0, |a| format!("M[{a}]")))
    }
}

/// Renders a DQSym element written in the fundamental basis.
pub fn render_f(u: &DQSymElt) -> String {
    render(&u.0, |a| format!("F[{a}]"))
}

/// `M_a` as a polynomial in `n` variable pairs: the sum of `(xy)^a_i` over
/// all `ℓ(a)`-subsets `i` of `1..=n`.
pub fn m_expand_basis(a: &Bicomposition, n: usize) -> Polynomial {
    Polynomial::from_terms(
        n,
        (1..=n as u32).combinations(a.len()).map(|support| {
            (
                Monomial::new(support, a.clone()).expect("increasing support"),
                BigRational::one(),
            )
        }),
    )
}

pub fn m_expand(u: &DQSymElt, n: usize) -> Polynomial {
    let mut acc = Polynomial::zero(n);
    for (a, c) in u.terms() {
        if a.len() <= n {
            acc = acc.add(&m_expand_basis(a, n).scale(c)).expect("same n");
        }
    }
    acc
}

/// `M_a M_b` as the sum of `M_c` over the quasi-shuffle of `a` and `b`,
/// counted with multiplicity.
pub fn m_mult(a: &Bicomposition, b: &Bicomposition) -> DQSymElt {
    a.quasi_shuffle_counts(b)
        .into_iter()
        .map(|(c, k)| (c, BigRational::from_integer(k.into())))
        .collect()
}

pub fn product(u: &DQSymElt, v: &DQSymElt) -> DQSymElt {
    DQSymElt(u.0.bilinear(&v.0, |a, b| m_mult(a, b).0))
}

/// Deconcatenation coproduct.
pub fn coproduct(u: &DQSymElt) -> TensorElt {
    u.0.linear(|a| {
        (0..=a.len())
            .map(|cut| {
                let (l, r) = a.parts().split_at(cut);
                (
                    (
                        Bicomposition::new(l.to_vec()).expect("parts of a bicomposition"),
                        Bicomposition::new(r.to_vec()).expect("parts of a bicomposition"),
                    ),
                    BigRational::one(),
                )
            })
            .collect()
    })
}

pub fn counit(u: &DQSymElt) -> BigRational {
    u.coeff(&Bicomposition::empty())
}

/// Product on `DQSym ⊗ DQSym`, componentwise.
pub fn tensor_product(s: &TensorElt, t: &TensorElt) -> TensorElt {
    s.bilinear(t, |(a1, a2), (b1, b2)| {
        let left = m_mult(a1, b1);
        let right = m_mult(a2, b2);
        left.0.bilinear(&right.0, |c1, c2| Combination::basis((c1.clone(), c2.clone())))
    })
}

/// `F_b`: the sum of `M_a` over all refinements `a` of `b`.
pub fn f_basis(b: &Bicomposition) -> DQSymElt {
    b.refinements()
        .into_iter()
        .map(|a| (a, BigRational::one()))
        .collect()
}

/// Rewrites an element given in the `M` basis in the `F` basis. The
/// result's keys index `F` elements.
pub fn m_in_f(u: &DQSymElt) -> DQSymElt {
    // F_b = M_b + (longer terms), so peeling off the shortest remaining
    // index is a unitriangular solve.
    let mut rest = u.clone();
    let mut out = DQSymElt::zero();
    while let Some((b, c)) = rest.terms().min_by(|x, y| x.0.cmp(y.0)).map(|(b, c)| (b.clone(), c.clone())) {
        rest = rest.sub(&f_basis(&b).scale(&c));
        out.0.add_term(b, c);
    }
    out
}

/// `π(M_a) = M_{c(a)}`, the projection identifying `y_i = x_i`.
pub fn pi_project(u: &DQSymElt) -> QSymElt {
    u.0.map_keys(Bicomposition::collapse)
}

/// Product in `QSym`, through single-row bicompositions.
pub fn qsym_product(u: &QSymElt, v: &QSymElt) -> QSymElt {
    u.bilinear(v, |a, b| {
        m_mult(&a.to_bicomposition(), &b.to_bicomposition())
            .0
            .map_keys(|c| Composition(c.top()))
    })
}

pub fn qsym_coproduct(u: &QSymElt) -> Combination<(Composition, Composition)> {
    u.linear(|a| {
        (0..=a.len())
            .map(|cut| {
                let (l, r) = a.parts().split_at(cut);
                ((Composition(l.to_vec()), Composition(r.to_vec())), BigRational::one())
            })
            .collect()
    })
}

pub fn qsym_counit(u: &QSymElt) -> BigRational {
    u.coeff(&Composition::default())
}

/// Weakly decreasing (in word order) sequences of Lyndon bicompositions
/// whose bidegrees add up to `d`.
pub fn lyndon_multisets(d: Bidegree) -> Vec<Vec<Bicomposition>> {
    let mut lyndon = lyndon_list(d);
    lyndon.sort_by(|a, b| b.lex_cmp(a));
    fn go(
        rest: Bidegree,
        from: usize,
        lyndon: &[Bicomposition],
        prefix: &mut Vec<Bicomposition>,
        out: &mut Vec<Vec<Bicomposition>>,
    ) {
        if rest == (0, 0) {
            out.push(prefix.clone());
            return;
        }
        for (i, w) in lyndon.iter().enumerate().skip(from) {
            let (a, b) = w.bidegree();
            if a <= rest.0 && b <= rest.1 {
                prefix.push(w.clone());
                go((rest.0 - a, rest.1 - b), i, lyndon, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(d, 0, &lyndon, &mut Vec::new(), &mut out);
    out
}

/// Outcome of the Lyndon freeness check in one bidegree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreenessReport {
    pub bidegree: Bidegree,
    /// Number of bicompositions of the bidegree.
    pub dimension: usize,
    /// Number of Lyndon monomials `M_{l_1} .. M_{l_k}`.
    pub products: usize,
    pub rank: usize,
}

impl FreenessReport {
    pub fn passes(&self) -> bool {
        self.dimension == self.products && self.rank == self.dimension
    }
}

pub fn lyndon_freeness_report(d: Bidegree) -> FreenessReport {
    let basis = enumerate_bicompositions(d, usize::MAX);
    let index: BTreeMap<&Bicomposition, usize> =
        basis.iter().enumerate().map(|(i, b)| (b, i)).collect();
    let rows: Vec<Vec<(usize, BigRational)>> = lyndon_multisets(d)
        .into_iter()
        .map(|ws| {
            let prod = ws
                .iter()
                .fold(DQSymElt::one(), |acc, w| acc.product(&DQSymElt::m(w.clone())));
            prod.terms()
                .map(|(c, v)| (index[c], v.clone()))
                .filter(|(_, v)| !v.is_zero())
                .collect()
        })
        .collect();
    FreenessReport {
        bidegree: d,
        dimension: basis.len(),
        products: rows.len(),
        rank: rank_of_rows(basis.len(), &rows),
    }
}

/// True iff the products of Lyndon `M`'s form a basis of the bidegree `d`
/// component.
pub fn lyndon_freeness_check(d: Bidegree) -> bool {
    lyndon_freeness_report(d).passes()
}
