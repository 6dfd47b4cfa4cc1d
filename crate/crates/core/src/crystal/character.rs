//! Finitely supported integer combinations of formal exponentials `e^μ`,
//! optionally truncated below a depth.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::cartan::BorcherdsCartanDatum;
use crate::scalar::Scalar;
use crate::weight::Weight;

/// `Σ c_μ e^μ`. With `depth = Some(d)` only terms whose weight has root
/// height at most `d` are meaningful and stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterElement<S> {
    terms: BTreeMap<Weight<S>, i64>,
    depth: Option<S>,
}

impl<S: Scalar> Default for CharacterElement<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> CharacterElement<S> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new(), depth: None }
    }

    pub fn monomial(mu: Weight<S>) -> Self {
        Self { terms: BTreeMap::from([(mu, 1)]), depth: None }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Weight<S>, i64)>, depth: Option<S>) -> Self {
        let mut out = Self { terms: BTreeMap::new(), depth };
        for (w, c) in terms {
            out.add_term(w, c);
        }
        out
    }

    pub fn terms(&self) -> &BTreeMap<Weight<S>, i64> {
        &self.terms
    }

    pub fn depth(&self) -> Option<&S> {
        self.depth.as_ref()
    }

    pub fn coefficient(&self, mu: &Weight<S>) -> i64 {
        self.terms.get(mu).copied().unwrap_or(0)
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

    /// Sum of all coefficients.
    pub fn total(&self) -> i64 {
        self.terms.values().sum()
    }

    fn keeps(&self, mu: &Weight<S>) -> bool {
        self.depth.as_ref().is_none_or(|d| mu.depth() <= *d)
    }

    /// Adds `c e^μ`, dropping it if it lies below the truncation.
    pub fn add_term(&mut self, mu: Weight<S>, c: i64) {
        if c == 0 || !self.keeps(&mu) {
            return;
        }
        match self.terms.entry(mu) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    /// Restricts to terms of depth at most `d` and records the cutoff.
    pub fn truncate(&self, d: S) -> Self {
        let d = match &self.depth {
            Some(old) if *old < d => old.clone(),
            _ => d,
        };
        Self {
            terms: self.terms.iter().filter(|(w, _)| w.depth() <= d).map(|(w, &c)| (w.clone(), c)).collect(),
            depth: Some(d),
        }
    }

    fn min_depth(&self) -> Option<S> {
        self.terms.keys().map(|w| w.depth()).min()
    }

    fn combined_depth(a: &Option<S>, b: &Option<S>) -> Option<S> {
        match (a, b) {
            (Some(x), Some(y)) => Some(if x < y { x.clone() } else { y.clone() }),
            (Some(x), None) | (None, Some(x)) => Some(x.clone()),
            (None, None) => None,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = Self { terms: BTreeMap::new(), depth: Self::combined_depth(&self.depth, &other.depth) };
        for (w, &c) in self.terms.iter().chain(other.terms.iter()) {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, &c)| (w.clone(), c * k)), self.depth.clone())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1))
    }

    /// Product in the group ring. A truncated factor is complete only up to
    /// its depth, so the product is trusted up to `d_1 + min depth(B)` and
    /// `d_2 + min depth(A)`.
    pub fn mul(&self, other: &Self) -> Self {
        let bound_a = self.depth.clone().zip(other.min_depth()).map(|(d, m)| d + m);
        let bound_b = other.depth.clone().zip(self.min_depth()).map(|(d, m)| d + m);
        let depth = Self::combined_depth(&bound_a, &bound_b);
        let mut out = Self { terms: BTreeMap::new(), depth };
        for (a, &x) in &self.terms {
            for (b, &y) in &other.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }

    /// Applies a linear map given on monomials.
    pub fn map_terms(&self, mut f: impl FnMut(&Weight<S>) -> Vec<(Weight<S>, i64)>) -> Self {
        let mut out = Self { terms: BTreeMap::new(), depth: self.depth.clone() };
        for (w, &c) in &self.terms {
            for (v, k) in f(w) {
                out.add_term(v, c * k);
            }
        }
        out
    }

    /// Equality after truncating both sides at the smaller cutoff.
    pub fn agrees_with(&self, other: &Self) -> bool {
        match Self::combined_depth(&self.depth, &other.depth) {
            Some(d) => self.truncate(d.clone()).terms == other.truncate(d).terms,
            None => self.terms == other.terms,
        }
    }

    /// Terms where the two sides differ (within the common cutoff).
    pub fn difference(&self, other: &Self) -> Vec<(Weight<S>, i64, i64)> {
        let d = Self::combined_depth(&self.depth, &other.depth);
        let (a, b) = match d {
            Some(d) => (self.truncate(d.clone()), other.truncate(d)),
            None => (self.clone(), other.clone()),
        };
        let mut keys: Vec<&Weight<S>> = a.terms.keys().chain(b.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter()
            .filter(|k| a.coefficient(k) != b.coefficient(k))
            .map(|k| (k.clone(), a.coefficient(k), b.coefficient(k)))
            .collect()
    }

    fn sorted_terms(&self, datum: &BorcherdsCartanDatum) -> Vec<(&Weight<S>, i64)> {
        let mut v: Vec<(Vec<S>, &Weight<S>, i64)> = self
            .terms
            .iter()
            .map(|(w, &c)| ((0..datum.rank()).map(|i| w.root_coeff(i)).collect(), w, c))
            .collect();
        v.sort_by(|x, y| x.0.cmp(&y.0).then_with(|| x.1.cmp(y.1)));
        v.into_iter().map(|(_, w, c)| (w, c)).collect()
    }

    /// `[{"weight": …, "coefficient": n}, …]` sorted by root-coefficient vector.
    pub fn to_json(&self, datum: &BorcherdsCartanDatum) -> Value {
        Value::Array(
            self.sorted_terms(datum)
                .into_iter()
                .map(|(w, c)| json!({ "weight": w.to_json(datum), "coefficient": c }))
                .collect(),
        )
    }

    pub fn display(&self, datum: &BorcherdsCartanDatum) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (w, c)) in self.sorted_terms(datum).into_iter().enumerate() {
            if k > 0 {
                out.push_str(if c < 0 { " - " } else { " + " });
            } else if c < 0 {
                out.push('-');
            }
            if c.abs() != 1 {
                let _ = write!(out, "{}*", c.abs());
            }
            let _ = write!(out, "e^({})", w.display(datum));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    type W = Weight<Rational>;
    type C = CharacterElement<Rational>;

    fn r(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    #[test]
    fn arithmetic_drops_zeros() {
        let a = C::monomial(W::base_weight(0));
        let z = a.sub(&a);
        assert!(z.is_zero());
        let b = C::from_terms([(W::base_weight(0), 2), (W::simple_root(0).scale(&r(-1)), 3)], None);
        assert_eq!(b.total(), 5);
    }

    #[test]
    fn product_cutoff() {
        let lam = W::base_weight(0);
        let a = C::from_terms([(lam.clone(), 1), (lam.minus_root(0, &r(1)), 1)], Some(r(1)));
        let p = a.mul(&a);
        assert_eq!(p.depth(), Some(&r(1)));
        assert_eq!(p.coefficient(&(&lam + &lam)), 1);
        assert_eq!(p.coefficient(&(&lam + &lam).minus_root(0, &r(1))), 2);
        assert_eq!(p.len(), 2);
    }

    #[test]
    fn truncated_comparison() {
        let lam = W::base_weight(0);
        let a = C::from_terms([(lam.clone(), 1), (lam.minus_root(0, &r(2)), 1)], Some(r(3)));
        let b = C::from_terms([(lam.clone(), 1)], Some(r(1)));
        assert!(a.agrees_with(&b));
        let c = C::from_terms([(lam.clone(), 1), (lam.minus_root(0, &r(1)), 1)], Some(r(1)));
        assert!(!a.agrees_with(&c));
    }
}
