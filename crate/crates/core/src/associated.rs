//! The associated (truncated) Kac–Moody datum: every imaginary index `i` is
//! replaced by copies `(i,1), …, (i,M_i)`, all with diagonal entry 2.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::cartan::BorcherdsCartanDatum;
use crate::error::{Error, Result};
use crate::index::IndexWord;
use crate::scalar::Scalar;
use crate::weight::Weight;

#[derive(Clone, Debug)]
pub struct AssociatedDatum {
    parent: Arc<BorcherdsCartanDatum>,
    copies: BTreeMap<usize, usize>,
    derived: Arc<BorcherdsCartanDatum>,
    index: Vec<(usize, usize)>,
    lookup: BTreeMap<(usize, usize), usize>,
}

impl AssociatedDatum {
    /// `copies[i] = M_i` for every imaginary `i`.
    pub fn new(parent: Arc<BorcherdsCartanDatum>, copies: BTreeMap<usize, usize>) -> Result<Self> {
        for i in parent.imaginary_indices() {
            match copies.get(&i) {
                Some(&m) if m >= 1 => {}
                _ => return Err(Error::BadCopies(parent.label(i).to_string())),
            }
        }
        let mut index = Vec::new();
        for i in 0..parent.rank() {
            let m = if parent.is_real(i) { 1 } else { copies[&i] };
            for c in 1..=m {
                index.push((i, c));
            }
        }
        let lookup = index.iter().enumerate().map(|(k, &ic)| (ic, k)).collect();
        let labels = index
            .iter()
            .map(|&(i, m)| format!("({},{})", parent.label(i), m))
            .collect();
        let matrix = index
            .iter()
            .map(|&(i, m)| {
                index
                    .iter()
                    .map(|&(j, n)| if (i, m) == (j, n) { 2 } else { parent.a(i, j) })
                    .collect()
            })
            .collect();
        let symmetrizer = index.iter().map(|&(i, _)| parent.symmetrizer()[i]).collect();
        let weights = parent
            .weight_names()
            .iter()
            .enumerate()
            .map(|(b, name)| {
                let p = parent.base_pairings(b);
                (name.clone(), index.iter().map(|&(i, _)| p[i]).collect())
            })
            .collect();
        let derived = BorcherdsCartanDatum::new(labels, matrix, Some(symmetrizer), weights)?;
        Ok(Self { parent, copies, derived: Arc::new(derived), index, lookup })
    }

    /// Same budget `m` for every imaginary index.
    pub fn with_uniform_copies(parent: Arc<BorcherdsCartanDatum>, m: usize) -> Result<Self> {
        let copies = parent.imaginary_indices().into_iter().map(|i| (i, m)).collect();
        Self::new(parent, copies)
    }

    pub fn parent(&self) -> &Arc<BorcherdsCartanDatum> {
        &self.parent
    }

    pub fn derived(&self) -> &Arc<BorcherdsCartanDatum> {
        &self.derived
    }

    pub fn copies(&self) -> &BTreeMap<usize, usize> {
        &self.copies
    }

    /// Parent index and copy number of a derived index.
    pub fn split(&self, k: usize) -> (usize, usize) {
        self.index[k]
    }

    pub fn derived_index(&self, i: usize, m: usize) -> Result<usize> {
        self.lookup.get(&(i, m)).copied().ok_or_else(|| Error::CopiesExceeded {
            index: self.parent.label(i).to_string(),
            needed: m,
            budget: if self.parent.is_real(i) { 1 } else { self.copies[&i] },
        })
    }

    /// All derived indices whose parent lies in `subset`.
    pub fn derived_indices_over(&self, subset: &[usize]) -> Vec<usize> {
        (0..self.index.len()).filter(|&k| subset.contains(&self.index[k].0)).collect()
    }

    /// Lifts a base-only weight `λ` to `λ̃` with `⟨α̃_(i,m)^∨, λ̃⟩ = ⟨α_i^∨, λ⟩`.
    /// Base weights carry over unchanged since the derived datum declares them
    /// with lifted pairing vectors.
    pub fn lift_base<S: Scalar>(&self, weight: &Weight<S>) -> Result<Weight<S>> {
        if !weight.is_base_only() {
            return Err(Error::Invalid(
                "only base-only weights lift canonically; use lift_weight with an index word".into(),
            ));
        }
        Ok(weight.clone())
    }

    /// Lifts `λ − Σ c_i α_i` along a generic index word whose letters account
    /// for the root coefficients: each letter `(i,m)` contributes `α̃_(i,m)`.
    pub fn lift_weight<S: Scalar>(&self, weight: &Weight<S>, word: &IndexWord) -> Result<Weight<S>> {
        if !word.is_generic(&self.parent) {
            return Err(Error::WordWeightMismatch("index word is not generic".into()));
        }
        let mut counts: BTreeMap<usize, i64> = BTreeMap::new();
        let mut derived_counts: BTreeMap<usize, i64> = BTreeMap::new();
        for &(i, m) in word.letters() {
            *counts.entry(i).or_default() += 1;
            *derived_counts.entry(self.derived_index(i, m)?).or_default() += 1;
        }
        let expected: BTreeMap<usize, S> = counts.iter().map(|(&i, &c)| (i, S::from_i64(c))).collect();
        if weight.roots() != &expected {
            return Err(Error::WordWeightMismatch(format!(
                "weight roots {:?} vs word letters {:?}",
                weight.roots(),
                counts
            )));
        }
        let base = weight.base_part();
        Ok(&base + &Weight::negative_root(&derived_counts))
    }

    /// Copy-erasing projection of a derived weight back to the parent datum.
    pub fn collapse_weight<S: Scalar>(&self, weight: &Weight<S>) -> Weight<S> {
        let mut roots: BTreeMap<usize, S> = BTreeMap::new();
        for (&k, c) in weight.roots() {
            let i = self.index[k].0;
            let e = roots.entry(i).or_insert_with(S::zero);
            *e = e.clone() + c.clone();
        }
        Weight::from_parts(weight.base().clone(), roots)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type W = Weight<BigRational>;

    fn datum(m: Vec<Vec<i64>>) -> Arc<BorcherdsCartanDatum> {
        Arc::new(BorcherdsCartanDatum::from_matrix(m, &[("lam", &[0, 1])]).unwrap())
    }

    #[test]
    fn derived_matrix_for_mixed_datum() {
        let d = datum(vec![vec![2, -1], vec![-1, 0]]);
        let a = AssociatedDatum::new(d, BTreeMap::from([(1, 3)])).unwrap();
        let t = a.derived();
        assert_eq!(t.labels(), &["(1,1)", "(2,1)", "(2,2)", "(2,3)"]);
        assert!(t.imaginary_indices().is_empty());
        for m in 1..=3 {
            assert_eq!(t.a(0, m), -1);
            assert_eq!(t.a(m, 0), -1);
            for n in 1..=3 {
                assert_eq!(t.a(m, n), if m == n { 2 } else { 0 });
            }
        }
    }

    #[test]
    fn copies_of_negative_imaginary_are_linked() {
        let d = datum(vec![vec![2, -1], vec![-1, -2]]);
        let a = AssociatedDatum::new(d, BTreeMap::from([(1, 2)])).unwrap();
        let t = a.derived();
        assert_eq!(t.a(1, 2), -2);
        assert_eq!(t.a(2, 1), -2);
        assert!((0..3).all(|k| t.a(k, k) == 2));
    }

    #[test]
    fn all_real_datum_is_relabelled() {
        let d = datum(vec![vec![2, -1], vec![-1, 2]]);
        let a = AssociatedDatum::new(d.clone(), BTreeMap::new()).unwrap();
        assert_eq!(a.derived().matrix(), d.matrix());
        assert_eq!(a.derived().labels(), &["(1,1)", "(2,1)"]);
    }

    #[test]
    fn lifted_pairings_match() {
        let d = datum(vec![vec![2, -1], vec![-1, 0]]);
        let a = AssociatedDatum::with_uniform_copies(d.clone(), 4).unwrap();
        let lam = W::base_weight(0);
        let lt = a.lift_base(&lam).unwrap();
        for k in 0..a.derived().rank() {
            let (i, _) = a.split(k);
            assert_eq!(lt.pairing(a.derived(), k), lam.pairing(&d, i));
        }
    }

    #[test]
    fn lift_weight_examples() {
        let d = datum(vec![vec![2, -1], vec![-1, 0]]);
        let a = AssociatedDatum::with_uniform_copies(d.clone(), 3).unwrap();
        let one = BigRational::from_i64(1);
        let lam = W::base_weight(0);
        // word (2,1): letter 1 applied first, then 2
        let w = crate::index::ordered_index(&d, &[0, 1]);
        let mu = lam.minus_root(0, &one).minus_root(1, &one);
        let lifted = a.lift_weight(&mu, &w).unwrap();
        let k11 = a.derived_index(0, 1).unwrap();
        let k21 = a.derived_index(1, 1).unwrap();
        assert_eq!(lifted, lam.minus_root(k11, &one).minus_root(k21, &one));
        assert_eq!(a.lift_weight(&lam, &IndexWord::default()).unwrap(), lam);
        let w2 = crate::index::ordered_index(&d, &[1, 1]);
        let two = lam.minus_root(1, &BigRational::from_i64(2));
        let lifted = a.lift_weight(&two, &w2).unwrap();
        let k22 = a.derived_index(1, 2).unwrap();
        assert_eq!(lifted, lam.minus_root(k21, &one).minus_root(k22, &one));
        assert!(a.lift_weight(&lam, &w2).is_err());
        assert_eq!(a.collapse_weight(&lifted), two);
    }

    #[test]
    fn missing_copies_rejected() {
        let d = datum(vec![vec![2, -1], vec![-1, 0]]);
        assert_eq!(
            AssociatedDatum::new(d, BTreeMap::new()).unwrap_err(),
            Error::BadCopies("2".into())
        );
    }
}
