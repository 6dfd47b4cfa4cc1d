//! Borcherds–Cartan data: validation, index classification and the JSON
//! datum file format.
//!
//! Weights are never materialized as elements of an abstract lattice. A datum
//! declares a list of named dominant base weights by their pairing vectors
//! `⟨α_i^∨, λ⟩`; every other weight is a rational combination of base weights
//! and simple roots (see [`crate::weight::Weight`]). The datum is assumed to
//! contain weights realizing any nonnegative pairing vector that is needed,
//! and simple roots and coroots are assumed linearly independent; neither is
//! checked.

use std::collections::{BTreeMap, VecDeque};
use std::path::Path as FsPath;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// On-disk representation of a datum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatumFile {
    pub indices: Vec<String>,
    pub matrix: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub symmetrizer: Option<Vec<i64>>,
    #[serde(default)]
    pub weights: BTreeMap<String, Vec<i64>>,
}

/// A validated, symmetrizable and even Borcherds–Cartan datum over a finite
/// index set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BorcherdsCartanDatum {
    labels: Vec<String>,
    matrix: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    weight_names: Vec<String>,
    weight_pairings: Vec<Vec<i64>>,
}

impl BorcherdsCartanDatum {
    /// Validates a raw datum. When `symmetrizer` is `None` one is computed
    /// (the smallest positive integer solution on each connected component).
    pub fn new(
        labels: Vec<String>,
        matrix: Vec<Vec<i64>>,
        symmetrizer: Option<Vec<i64>>,
        weights: BTreeMap<String, Vec<i64>>,
    ) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::EmptyIndexSet);
        }
        for (pos, l) in labels.iter().enumerate() {
            if labels[..pos].contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        if matrix.len() != n {
            return Err(Error::NotSquare { row: matrix.len(), len: 0, expected: n });
        }
        for (r, row) in matrix.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare { row: r, len: row.len(), expected: n });
            }
        }
        for i in 0..n {
            let a = matrix[i][i];
            if a != 2 && a > 0 {
                return Err(Error::BadDiagonal { index: labels[i].clone(), value: a });
            }
            if a % 2 != 0 {
                return Err(Error::OddDiagonal { index: labels[i].clone(), value: a });
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                if matrix[i][j] > 0 {
                    return Err(Error::PositiveOffDiagonal {
                        i: labels[i].clone(),
                        j: labels[j].clone(),
                        value: matrix[i][j],
                    });
                }
                if (matrix[i][j] == 0) != (matrix[j][i] == 0) {
                    return Err(Error::ZeroPatternMismatch {
                        i: labels[i].clone(),
                        j: labels[j].clone(),
                        a_ij: matrix[i][j],
                        a_ji: matrix[j][i],
                    });
                }
            }
        }
        let symmetrizer = match symmetrizer {
            Some(d) => {
                let ok = d.len() == n
                    && d.iter().all(|&x| x > 0)
                    && (0..n).all(|i| (0..n).all(|j| d[i] * matrix[i][j] == d[j] * matrix[j][i]));
                if !ok {
                    return Err(Error::BadSymmetrizer(d));
                }
                d
            }
            None => compute_symmetrizer(&labels, &matrix)?,
        };
        let mut weight_names = Vec::with_capacity(weights.len());
        let mut weight_pairings = Vec::with_capacity(weights.len());
        for (name, p) in weights {
            if p.len() != n {
                return Err(Error::WeightLength { name, len: p.len(), expected: n });
            }
            if let Some(i) = p.iter().position(|&x| x < 0) {
                return Err(Error::NegativeWeight { name, index: labels[i].clone(), value: p[i] });
            }
            weight_names.push(name);
            weight_pairings.push(p);
        }
        Ok(Self { labels, matrix, symmetrizer, weight_names, weight_pairings })
    }

    /// Convenience constructor with labels `"1"`, `"2"`, …
    pub fn from_matrix(matrix: Vec<Vec<i64>>, weights: &[(&str, &[i64])]) -> Result<Self> {
        let labels = (1..=matrix.len()).map(|i| i.to_string()).collect();
        let weights = weights.iter().map(|(n, p)| (n.to_string(), p.to_vec())).collect();
        Self::new(labels, matrix, None, weights)
    }

    pub fn from_file(file: DatumFile) -> Result<Self> {
        Self::new(file.indices, file.matrix, file.symmetrizer, file.weights)
    }

    pub fn to_file(&self) -> DatumFile {
        DatumFile {
            indices: self.labels.clone(),
            matrix: self.matrix.clone(),
            symmetrizer: Some(self.symmetrizer.clone()),
            weights: self
                .weight_names
                .iter()
                .cloned()
                .zip(self.weight_pairings.iter().cloned())
                .collect(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: DatumFile = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        Self::from_file(file)
    }

    /// Normalized JSON document. Loading the output and saving again
    /// reproduces it byte for byte.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_file()).expect("datum serializes");
        s.push('\n');
        s
    }

    pub fn load(path: impl AsRef<FsPath>) -> Result<Self> {
        let text = std::fs::read_to_string(path.as_ref())
            .map_err(|e| Error::Invalid(format!("{}: {e}", path.as_ref().display())))?;
        Self::from_json(&text)
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownIndex(label.to_string()))
    }

    /// `a_ij = ⟨α_i^∨, α_j⟩`.
    #[inline]
    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.matrix[i][j]
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    #[inline]
    pub fn is_real(&self, i: usize) -> bool {
        self.matrix[i][i] == 2
    }

    #[inline]
    pub fn is_imaginary(&self, i: usize) -> bool {
        !self.is_real(i)
    }

    pub fn real_indices(&self) -> Vec<usize> {
        (0..self.rank()).filter(|&i| self.is_real(i)).collect()
    }

    pub fn imaginary_indices(&self) -> Vec<usize> {
        (0..self.rank()).filter(|&i| self.is_imaginary(i)).collect()
    }

    pub fn weight_names(&self) -> &[String] {
        &self.weight_names
    }

    pub fn weight_index(&self, name: &str) -> Result<usize> {
        self.weight_names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownWeight(name.to_string()))
    }

    /// Pairing vector `(⟨α_i^∨, λ_b⟩)_i` of the base weight with index `b`.
    pub fn base_pairings(&self, b: usize) -> &[i64] {
        &self.weight_pairings[b]
    }
}

fn compute_symmetrizer(labels: &[String], a: &[Vec<i64>]) -> Result<Vec<i64>> {
    let n = labels.len();
    let mut d: Vec<Option<Ratio<i64>>> = vec![None; n];
    let mut out = vec![0i64; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(Ratio::from_integer(1));
        let mut component = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            let di = d[i].unwrap();
            for j in 0..n {
                if j == i || a[i][j] == 0 {
                    continue;
                }
                // d_i a_ij = d_j a_ji
                let dj = di * Ratio::new(a[i][j], a[j][i]);
                match d[j] {
                    None => {
                        d[j] = Some(dj);
                        component.push(j);
                        queue.push_back(j);
                    }
                    Some(x) if x != dj => {
                        return Err(Error::NotSymmetrizable {
                            i: labels[i].clone(),
                            j: labels[j].clone(),
                        })
                    }
                    Some(_) => {}
                }
            }
        }
        let lcm = component.iter().fold(1i64, |acc, &i| acc.lcm(d[i].unwrap().denom()));
        let ints: Vec<i64> = component.iter().map(|&i| (d[i].unwrap() * lcm).to_integer()).collect();
        let g = ints.iter().fold(0i64, |acc, &x| acc.gcd(&x));
        for (&i, &x) in component.iter().zip(&ints) {
            out[i] = x / g;
        }
    }
    Ok(out)
}
