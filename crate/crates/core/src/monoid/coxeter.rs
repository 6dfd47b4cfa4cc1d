//! The Coxeter group generated by the real reflections, realized by integer
//! matrices acting on root coordinates of the real indices.

use std::collections::HashSet;

use crate::cartan::BorcherdsCartanDatum;
use crate::error::{Error, Result};

/// An element of the real Weyl group. `mat` holds the images `w α_j` of the
/// real simple roots as columns; `inv` the same for `w^{-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoxeterElement {
    real: Vec<usize>,
    cartan: Vec<Vec<i64>>,
    mat: Vec<Vec<i64>>,
    inv: Vec<Vec<i64>>,
}

impl CoxeterElement {
    pub fn identity(datum: &BorcherdsCartanDatum) -> Self {
        let real = datum.real_indices();
        let n = real.len();
        let cartan = real.iter().map(|&i| real.iter().map(|&j| datum.a(i, j)).collect()).collect();
        let id: Vec<Vec<i64>> =
            (0..n).map(|r| (0..n).map(|c| i64::from(r == c)).collect()).collect();
        Self { real, cartan, mat: id.clone(), inv: id }
    }

    /// Element of a word given in written order.
    pub fn from_word(datum: &BorcherdsCartanDatum, letters: &[usize]) -> Result<Self> {
        let mut w = Self::identity(datum);
        for &i in letters {
            w = w.times(datum, i)?;
        }
        Ok(w)
    }

    fn pos(&self, datum: &BorcherdsCartanDatum, i: usize) -> Result<usize> {
        self.real
            .iter()
            .position(|&r| r == i)
            .ok_or_else(|| Error::NotReal(datum.label(i).to_string()))
    }

    // columns of m·r_j
    fn right_mul(cartan: &[Vec<i64>], m: &mut [Vec<i64>], j: usize) {
        let n = m.len();
        for k in 0..n {
            let a = cartan[j][k];
            if a != 0 && k != j {
                for row in m.iter_mut() {
                    row[k] -= a * row[j];
                }
            }
        }
        for row in m.iter_mut() {
            row[j] = -row[j];
        }
    }

    // r_j·m
    fn left_mul(cartan: &[Vec<i64>], m: &mut [Vec<i64>], j: usize) {
        let n = m.len();
        for c in 0..n {
            let s: i64 = (0..n).map(|k| cartan[j][k] * m[k][c]).sum();
            m[j][c] -= s;
        }
    }

    /// `self · r_i`.
    pub fn times(&self, datum: &BorcherdsCartanDatum, i: usize) -> Result<Self> {
        let j = self.pos(datum, i)?;
        let mut out = self.clone();
        Self::right_mul(&self.cartan, &mut out.mat, j);
        Self::left_mul(&self.cartan, &mut out.inv, j);
        Ok(out)
    }

    /// `r_i · self`.
    pub fn left_times(&self, datum: &BorcherdsCartanDatum, i: usize) -> Result<Self> {
        let j = self.pos(datum, i)?;
        let mut out = self.clone();
        Self::left_mul(&self.cartan, &mut out.mat, j);
        Self::right_mul(&self.cartan, &mut out.inv, j);
        Ok(out)
    }

    pub fn inverse(&self) -> Self {
        Self { mat: self.inv.clone(), inv: self.mat.clone(), ..self.clone() }
    }

    pub fn is_identity(&self) -> bool {
        self.mat.iter().enumerate().all(|(r, row)| row.iter().enumerate().all(|(c, &x)| x == i64::from(r == c)))
    }

    fn column_negative(m: &[Vec<i64>], j: usize) -> bool {
        m.iter().all(|row| row[j] <= 0)
    }

    /// Real indices `i` with `ℓ(w r_i) < ℓ(w)`.
    pub fn right_descents(&self) -> Vec<usize> {
        (0..self.real.len())
            .filter(|&j| Self::column_negative(&self.mat, j))
            .map(|j| self.real[j])
            .collect()
    }

    /// Real indices `i` with `ℓ(r_i w) < ℓ(w)`.
    pub fn left_descents(&self) -> Vec<usize> {
        (0..self.real.len())
            .filter(|&j| Self::column_negative(&self.inv, j))
            .map(|j| self.real[j])
            .collect()
    }

    /// A reduced word in written order, obtained by repeatedly stripping the
    /// smallest right descent.
    pub fn reduced_word(&self, datum: &BorcherdsCartanDatum) -> Vec<usize> {
        let mut w = self.clone();
        let mut stripped = Vec::new();
        while let Some(&s) = w.right_descents().first() {
            stripped.push(s);
            w = w.times(datum, s).expect("descent is real");
        }
        stripped.reverse();
        stripped
    }

    pub fn length(&self, datum: &BorcherdsCartanDatum) -> usize {
        self.reduced_word(datum).len()
    }

    /// Hashable key identifying the element.
    pub fn key(&self) -> Vec<i64> {
        self.mat.iter().flatten().copied().collect()
    }
}

/// Coxeter length of a real word (written order).
pub fn coxeter_length(datum: &BorcherdsCartanDatum, letters: &[usize]) -> Result<usize> {
    Ok(CoxeterElement::from_word(datum, letters)?.length(datum))
}

/// One reduced word (written order) for the element of a real word.
pub fn reduced_word(datum: &BorcherdsCartanDatum, letters: &[usize]) -> Result<Vec<usize>> {
    Ok(CoxeterElement::from_word(datum, letters)?.reduced_word(datum))
}

/// All elements of the real Weyl group of length at most `max_len`, as
/// reduced words ordered by length then lexicographically.
pub fn group_elements(datum: &BorcherdsCartanDatum, max_len: usize, cap: usize) -> Result<Vec<Vec<usize>>> {
    let id = CoxeterElement::identity(datum);
    let mut seen: HashSet<Vec<i64>> = HashSet::from([id.key()]);
    let mut frontier = vec![id];
    let mut out = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for &i in &datum.real_indices() {
                let v = w.left_times(datum, i)?;
                if seen.insert(v.key()) {
                    if seen.len() > cap {
                        return Err(Error::Budget(format!("more than {cap} Weyl group elements")));
                    }
                    next.push(v);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        let mut words: Vec<(Vec<usize>, CoxeterElement)> =
            next.into_iter().map(|v| (v.reduced_word(datum), v)).collect();
        words.sort_by(|a, b| a.0.cmp(&b.0));
        out.extend(words.iter().map(|(w, _)| w.clone()));
        frontier = words.into_iter().map(|(_, v)| v).collect();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> BorcherdsCartanDatum {
        BorcherdsCartanDatum::from_matrix(vec![vec![2, -1], vec![-1, 2]], &[]).unwrap()
    }

    fn b2() -> BorcherdsCartanDatum {
        BorcherdsCartanDatum::from_matrix(vec![vec![2, -2], vec![-1, 2]], &[]).unwrap()
    }

    /// Brute-force oracle: the six elements of A2 as permutations of three
    /// letters, with length = number of inversions.
    fn a2_perm_length(letters: &[usize]) -> usize {
        let mut p = [0usize, 1, 2];
        for &i in letters.iter().rev() {
            p.swap(i, i + 1);
        }
        let mut inv = 0;
        for x in 0..3 {
            for y in x + 1..3 {
                if p[x] > p[y] {
                    inv += 1;
                }
            }
        }
        inv
    }

    #[test]
    fn lengths_in_a2() {
        let d = a2();
        assert_eq!(coxeter_length(&d, &[0, 1, 0]).unwrap(), 3);
        assert_eq!(coxeter_length(&d, &[0, 0]).unwrap(), 0);
        assert_eq!(coxeter_length(&d, &[0, 1, 0, 1]).unwrap(), 2);
        assert_eq!(reduced_word(&d, &[0, 1, 0, 1]).unwrap(), vec![1, 0]);
    }

    #[test]
    fn lengths_match_permutation_oracle() {
        let d = a2();
        for len in 0..7 {
            for code in 0..(1usize << len) {
                let w: Vec<usize> = (0..len).map(|b| (code >> b) & 1).collect();
                assert_eq!(coxeter_length(&d, &w).unwrap(), a2_perm_length(&w), "{w:?}");
            }
        }
    }

    #[test]
    fn group_sizes() {
        assert_eq!(group_elements(&a2(), 10, 100).unwrap().len(), 6);
        assert_eq!(group_elements(&b2(), 10, 100).unwrap().len(), 8);
        let affine =
            BorcherdsCartanDatum::from_matrix(vec![vec![2, -2], vec![-2, 2]], &[]).unwrap();
        assert_eq!(group_elements(&affine, 4, 100).unwrap().len(), 9);
        assert!(group_elements(&affine, 50, 20).is_err());
    }

    #[test]
    fn descents_and_inverse() {
        let d = b2();
        let w = CoxeterElement::from_word(&d, &[0, 1]).unwrap();
        assert_eq!(w.right_descents(), vec![1]);
        assert_eq!(w.left_descents(), vec![0]);
        assert!(w.times(&d, 1).unwrap().times(&d, 0).unwrap().is_identity());
        assert_eq!(w.inverse(), CoxeterElement::from_word(&d, &[1, 0]).unwrap());
    }

    #[test]
    fn imaginary_letters_rejected() {
        let d = BorcherdsCartanDatum::from_matrix(vec![vec![2, -1], vec![-1, 0]], &[]).unwrap();
        assert!(coxeter_length(&d, &[1]).is_err());
    }
}
