//! Index words over `I` and over the associated index set `Ĩ`.
//!
//! Words are stored in application order: position 0 is the rightmost letter
//! of a written tuple `(i_k, …, i_2, i_1)`, i.e. the operator applied first.
//! [`IndexWord::display`] prints the written (leftmost-applied-last) order.

use std::collections::BTreeMap;

use crate::cartan::BorcherdsCartanDatum;
use crate::error::{Error, Result};

/// A word over `Ĩ`: letters `(index, copy)`, copies starting at 1.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexWord {
    letters: Vec<(usize, usize)>,
}

/// Assigns the canonical ordered copy numbers to a word over `I`
/// (given in application order): real letters get copy 1 and the
/// occurrences of each imaginary index are numbered 1, 2, 3, … in order of
/// application.
pub fn ordered_index(datum: &BorcherdsCartanDatum, word: &[usize]) -> IndexWord {
    let mut seen: BTreeMap<usize, usize> = BTreeMap::new();
    let letters = word
        .iter()
        .map(|&i| {
            if datum.is_real(i) {
                (i, 1)
            } else {
                let c = seen.entry(i).or_insert(0);
                *c += 1;
                (i, *c)
            }
        })
        .collect();
    IndexWord { letters }
}

impl IndexWord {
    pub fn new(letters: Vec<(usize, usize)>) -> Self {
        Self { letters }
    }

    pub fn letters(&self) -> &[(usize, usize)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Drops the copy numbers.
    pub fn erase_copies(&self) -> Vec<usize> {
        self.letters.iter().map(|&(i, _)| i).collect()
    }

    pub fn is_ordered(&self, datum: &BorcherdsCartanDatum) -> bool {
        *self == ordered_index(datum, &self.erase_copies())
    }

    /// Distinct occurrences of the same imaginary index carry distinct copies
    /// (and real letters carry copy 1).
    pub fn is_generic(&self, datum: &BorcherdsCartanDatum) -> bool {
        let mut used: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &(i, m) in &self.letters {
            if m == 0 {
                return false;
            }
            if datum.is_real(i) {
                if m != 1 {
                    return false;
                }
                continue;
            }
            let v = used.entry(i).or_default();
            if v.contains(&m) {
                return false;
            }
            v.push(m);
        }
        true
    }

    /// Diagonal action of `Ω`: `perms[i]` relabels copies of the imaginary
    /// index `i` (copies absent from the map are fixed).
    pub fn omega_apply(
        &self,
        datum: &BorcherdsCartanDatum,
        perms: &BTreeMap<usize, BTreeMap<usize, usize>>,
    ) -> Result<IndexWord> {
        for (&i, p) in perms {
            if datum.is_real(i) {
                return Err(Error::NotImaginary(datum.label(i).to_string()));
            }
            let mut image: Vec<usize> = p.values().copied().collect();
            image.sort_unstable();
            let mut domain: Vec<usize> = p.keys().copied().collect();
            domain.sort_unstable();
            if image != domain || image.contains(&0) {
                return Err(Error::Invalid(format!(
                    "copy map for index `{}` is not a permutation",
                    datum.label(i)
                )));
            }
        }
        let letters = self
            .letters
            .iter()
            .map(|&(i, m)| match perms.get(&i).and_then(|p| p.get(&m)) {
                Some(&n) => (i, n),
                None => (i, m),
            })
            .collect();
        Ok(IndexWord { letters })
    }

    /// Written order, e.g. `((3,5),(1,1),(2,1))`.
    pub fn display(&self, datum: &BorcherdsCartanDatum) -> String {
        let parts: Vec<String> = self
            .letters
            .iter()
            .rev()
            .map(|&(i, m)| format!("({},{})", datum.label(i), m))
            .collect();
        format!("({})", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ex_datum() -> BorcherdsCartanDatum {
        // 1 real, 2 and 3 imaginary
        BorcherdsCartanDatum::from_matrix(
            vec![vec![2, -1, -1], vec![-1, 0, -1], vec![-1, -1, -2]],
            &[],
        )
        .unwrap()
    }

    /// Written tuple → application order.
    fn written(d: &BorcherdsCartanDatum, labels: &[&str]) -> Vec<usize> {
        labels.iter().rev().map(|l| d.index_of(l).unwrap()).collect()
    }

    #[test]
    fn ordered_index_twelve_letter_example() {
        let d = ex_datum();
        let w = written(&d, &["3", "1", "3", "3", "1", "2", "3", "1", "3", "2", "1", "2"]);
        let o = ordered_index(&d, &w);
        assert_eq!(
            o.display(&d),
            "((3,5),(1,1),(3,4),(3,3),(1,1),(2,3),(3,2),(1,1),(3,1),(2,2),(1,1),(2,1))"
        );
        assert!(o.is_ordered(&d));
        assert!(o.is_generic(&d));
    }

    #[test]
    fn ordered_index_small_cases() {
        let d = ex_datum();
        assert_eq!(ordered_index(&d, &[0, 0, 0]).display(&d), "((1,1),(1,1),(1,1))");
        assert_eq!(ordered_index(&d, &written(&d, &["2", "2"])).display(&d), "((2,2),(2,1))");
    }

    #[test]
    fn genericity() {
        let d = ex_datum();
        assert!(IndexWord::new(vec![(1, 1), (1, 2)]).is_generic(&d));
        assert!(!IndexWord::new(vec![(1, 1), (1, 1)]).is_generic(&d));
        assert!(!IndexWord::new(vec![(0, 2)]).is_generic(&d));
    }

    #[test]
    fn omega_swaps_copies() {
        let d = ex_datum();
        // written ((2,2),(1,1),(2,1))
        let w = IndexWord::new(vec![(1, 1), (0, 1), (1, 2)]);
        let perms = BTreeMap::from([(1, BTreeMap::from([(1, 2), (2, 1)]))]);
        let out = w.omega_apply(&d, &perms).unwrap();
        assert_eq!(out.display(&d), "((2,1),(1,1),(2,2))");
        let bad = BTreeMap::from([(1, BTreeMap::from([(1, 2), (2, 2)]))]);
        assert!(w.omega_apply(&d, &bad).is_err());
        let real = BTreeMap::from([(0, BTreeMap::from([(1, 1)]))]);
        assert!(w.omega_apply(&d, &real).is_err());
    }
}
