//! Expressions in the reflection monoid: actions on weights, pairing
//! matrices, Coxeter machinery for the real part, block normal forms and
//! bounded searches over roots and the partial order.

mod coxeter;
mod normal_form;
mod order;

pub use coxeter::{coxeter_length, group_elements, reduced_word, CoxeterElement};
pub use normal_form::{
    check_lemma_422, is_dominant_reduced, satisfies_condition_4, satisfies_condition_5,
    to_minimal_dominant_reduced, BlockForm, LemmaReport, PropertyResult, PropertyStatus,
    DEFAULT_REWRITE_BUDGET,
};
pub use order::{bounded_order_leq, positive_roots, OrderBounds, RootEntry, RootSet, Tri};

use std::fmt;

use crate::cartan::BorcherdsCartanDatum;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::weight::Weight;

/// `r_i μ = μ − ⟨α_i^∨, μ⟩ α_i`, for real and imaginary `i` alike.
pub fn reflect<S: Scalar>(datum: &BorcherdsCartanDatum, i: usize, mu: &Weight<S>) -> Weight<S> {
    let p = mu.pairing(datum, i);
    mu.minus_root(i, &p)
}

/// Inverse of `r_i`. For imaginary `i` this is
/// `μ + ⟨α_i^∨, μ⟩ / (1 − a_ii) · α_i`.
pub fn reflect_inverse<S: Scalar>(datum: &BorcherdsCartanDatum, i: usize, mu: &Weight<S>) -> Weight<S> {
    if datum.is_real(i) {
        return reflect(datum, i, mu);
    }
    let p = mu.pairing(datum, i);
    let c = p / S::from_i64(1 - datum.a(i, i));
    mu.minus_root(i, &-c)
}

/// Inverse of a simple reflection applied to a weight (imaginary index only).
pub fn act_inverse<S: Scalar>(datum: &BorcherdsCartanDatum, i: usize, mu: &Weight<S>) -> Result<Weight<S>> {
    if datum.is_real(i) {
        return Err(Error::NotImaginary(datum.label(i).to_string()));
    }
    Ok(reflect_inverse(datum, i, mu))
}

/// A word in the generators `r_i`, stored in written order: `letters[0]` is
/// the leftmost letter and acts last.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonoidWord {
    letters: Vec<usize>,
}

impl MonoidWord {
    pub fn new(letters: Vec<usize>) -> Self {
        Self { letters }
    }

    pub fn identity() -> Self {
        Self::default()
    }

    /// Builds a word from letters listed in application order.
    pub fn from_application_order(mut letters: Vec<usize>) -> Self {
        letters.reverse();
        Self { letters }
    }

    /// Parses `r1 r2^2 r1`; tokens are whitespace separated.
    pub fn parse(datum: &BorcherdsCartanDatum, text: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            let body = token
                .strip_prefix('r')
                .ok_or_else(|| Error::Parse(format!("word token `{token}` must start with `r`")))?;
            let (label, power) = match body.split_once('^') {
                Some((l, p)) => {
                    let p: usize = p
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent in `{token}`")))?;
                    (l, p)
                }
                None => (body, 1),
            };
            let i = datum.index_of(label)?;
            letters.extend(std::iter::repeat_n(i, power));
        }
        Ok(Self { letters })
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letters in the order they act on a weight.
    pub fn application_order(&self) -> Vec<usize> {
        self.letters.iter().rev().copied().collect()
    }

    pub fn is_real(&self, datum: &BorcherdsCartanDatum) -> bool {
        self.letters.iter().all(|&i| datum.is_real(i))
    }

    /// `self · other` (other acts first).
    pub fn compose(&self, other: &MonoidWord) -> MonoidWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        MonoidWord { letters }
    }

    pub fn act<S: Scalar>(&self, datum: &BorcherdsCartanDatum, mu: &Weight<S>) -> Weight<S> {
        self.letters.iter().rev().fold(mu.clone(), |acc, &i| reflect(datum, i, &acc))
    }

    /// Text form with consecutive equal letters collapsed into powers.
    pub fn display(&self, datum: &BorcherdsCartanDatum) -> String {
        let mut parts: Vec<String> = Vec::new();
        let mut k = 0;
        while k < self.letters.len() {
            let i = self.letters[k];
            let mut run = 1;
            while k + run < self.letters.len() && self.letters[k + run] == i {
                run += 1;
            }
            if run == 1 {
                parts.push(format!("r{}", datum.label(i)));
            } else {
                parts.push(format!("r{}^{}", datum.label(i), run));
            }
            k += run;
        }
        parts.join(" ")
    }
}

impl fmt::Display for MonoidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|i| format!("r[{i}]")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Linear map on pairing vectors: row `j` gives `⟨α_j^∨, w μ⟩` in terms of
/// the pairings of `μ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingMatrix<S> {
    rows: Vec<Vec<S>>,
}

impl<S: Scalar> PairingMatrix<S> {
    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|j| (0..n).map(|k| if j == k { S::one() } else { S::zero() }).collect())
            .collect();
        Self { rows }
    }

    /// `⟨α_j^∨, r_i μ⟩ = p_j − a_ji p_i`.
    pub fn of_letter(datum: &BorcherdsCartanDatum, i: usize) -> Self {
        let mut m = Self::identity(datum.rank());
        for j in 0..datum.rank() {
            let v = m.rows[j][i].clone() - S::from_i64(datum.a(j, i));
            m.rows[j][i] = v;
        }
        m
    }

    pub fn of_word(datum: &BorcherdsCartanDatum, word: &MonoidWord) -> Self {
        word.letters()
            .iter()
            .fold(Self::identity(datum.rank()), |acc, &i| acc.compose(&Self::of_letter(datum, i)))
    }

    /// Matrix of `u v` from those of `u` (self) and `v` (other).
    pub fn compose(&self, other: &Self) -> Self {
        let n = self.rows.len();
        let rows = (0..n)
            .map(|j| {
                (0..n)
                    .map(|k| {
                        (0..n).fold(S::zero(), |acc, l| {
                            acc + self.rows[j][l].clone() * other.rows[l][k].clone()
                        })
                    })
                    .collect()
            })
            .collect();
        Self { rows }
    }

    pub fn apply(&self, p: &[S]) -> Vec<S> {
        self.rows
            .iter()
            .map(|row| row.iter().zip(p).fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone()))
            .collect()
    }

    pub fn rows(&self) -> &[Vec<S>] {
        &self.rows
    }

    pub fn is_nonnegative(&self) -> bool {
        self.rows.iter().flatten().all(|x| !x.is_negative())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type W = Weight<BigRational>;

    fn q(n: i64) -> BigRational {
        BigRational::from_i64(n)
    }

    fn mixed() -> BorcherdsCartanDatum {
        BorcherdsCartanDatum::from_matrix(
            vec![vec![2, -1], vec![-1, 0]],
            &[("lam01", &[0, 1]), ("lam02", &[0, 2]), ("lam10", &[1, 0])],
        )
        .unwrap()
    }

    #[test]
    fn act_examples() {
        let d = mixed();
        let lam = W::named(&d, "lam01").unwrap();
        let r2 = MonoidWord::parse(&d, "r2").unwrap();
        let r1 = MonoidWord::parse(&d, "r1").unwrap();
        assert_eq!(r2.act(&d, &lam), lam.minus_root(1, &q(1)));
        assert_eq!(act_inverse(&d, 1, &lam.minus_root(1, &q(1))).unwrap(), lam);
        assert_eq!(r1.act(&d, &lam), lam);
        assert!(act_inverse(&d, 0, &lam).is_err());
    }

    #[test]
    fn parse_and_display() {
        let d = mixed();
        let w = MonoidWord::parse(&d, "r1 r2^2 r1").unwrap();
        assert_eq!(w.letters(), &[0, 1, 1, 0]);
        assert_eq!(w.display(&d), "r1 r2^2 r1");
        assert_eq!(MonoidWord::parse(&d, "").unwrap(), MonoidWord::identity());
        assert!(MonoidWord::parse(&d, "s1").is_err());
        assert!(MonoidWord::parse(&d, "r7").is_err());
        assert!(MonoidWord::parse(&d, "r1^x").is_err());
    }

    #[test]
    fn written_order_acts_right_to_left() {
        let d = mixed();
        let lam = W::named(&d, "lam01").unwrap();
        // r1 r2: r2 first gives λ−α_2 (pairing with α_1^∨ is 1), then r1
        let w = MonoidWord::parse(&d, "r1 r2").unwrap();
        assert_eq!(w.act(&d, &lam), lam.minus_root(1, &q(1)).minus_root(0, &q(1)));
        assert_eq!(w.application_order(), vec![1, 0]);
    }

    #[test]
    fn pairing_matrix_of_imaginary_reflection() {
        let d = mixed();
        let m = PairingMatrix::<BigRational>::of_letter(&d, 1);
        assert_eq!(m.rows(), &[vec![q(1), q(1)], vec![q(0), q(1)]]);
        assert!(m.is_nonnegative());
        assert!(!PairingMatrix::<BigRational>::of_letter(&d, 0).is_nonnegative());
    }

    #[test]
    fn pairing_matrix_tracks_action() {
        let d = mixed();
        let w = MonoidWord::parse(&d, "r2 r1 r2^2 r1").unwrap();
        let m = PairingMatrix::<BigRational>::of_word(&d, &w);
        for name in ["lam01", "lam02", "lam10"] {
            let mu = W::named(&d, name).unwrap();
            assert_eq!(m.apply(&mu.pairings(&d)), w.act(&d, &mu).pairings(&d));
        }
    }
}
