//! Positive roots up to a height bound and a bounded search for the partial
//! order generated by `w → r_β w` with `ℓ(r_β w) > ℓ(w)`.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};

use crate::cartan::BorcherdsCartanDatum;
use crate::scalar::Scalar;
use crate::weight::Weight;

use super::{reflect, MonoidWord};

/// A positive root `β = u α_i` with `u` a real word (written order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootEntry {
    pub coeffs: BTreeMap<usize, i64>,
    pub imaginary: bool,
    pub word: Vec<usize>,
    pub index: usize,
}

impl RootEntry {
    pub fn height(&self) -> i64 {
        self.coeffs.values().sum()
    }

    /// `⟨β^∨, μ⟩ = ⟨α_i^∨, u^{-1} μ⟩`.
    pub fn coroot_pairing<S: Scalar>(&self, datum: &BorcherdsCartanDatum, mu: &Weight<S>) -> S {
        let mut nu = mu.clone();
        for &j in &self.word {
            nu = reflect(datum, j, &nu);
        }
        nu.pairing(datum, self.index)
    }

    /// `r_β = u r_i u^{-1}` as a written word.
    pub fn reflection_word(&self) -> Vec<usize> {
        let mut w = self.word.clone();
        w.push(self.index);
        w.extend(self.word.iter().rev());
        w
    }

    /// The root as a weight (`+β`).
    pub fn to_weight<S: Scalar>(&self) -> Weight<S> {
        let neg: BTreeMap<usize, i64> = self.coeffs.iter().map(|(&i, &c)| (i, -c)).collect();
        Weight::negative_root(&neg)
    }
}

#[derive(Clone, Debug, Default)]
pub struct RootSet {
    pub real: Vec<RootEntry>,
    pub imaginary: Vec<RootEntry>,
    /// Some root above the height bound was reachable.
    pub truncated: bool,
}

impl RootSet {
    pub fn all(&self) -> impl Iterator<Item = &RootEntry> {
        self.real.iter().chain(self.imaginary.iter())
    }
}

/// Positive real roots and the `W_re`-orbits of imaginary simple roots, up to
/// the given height. Roots are reached from simple roots by reflections
/// `r_j` with `⟨α_j^∨, β⟩ < 0`, which raise the height.
pub fn positive_roots(datum: &BorcherdsCartanDatum, height: usize) -> RootSet {
    let n = datum.rank();
    let real = datum.real_indices();
    let mut out = RootSet::default();
    let mut seen: HashSet<(bool, Vec<i64>)> = HashSet::new();
    let mut queue = VecDeque::new();
    for i in 0..n {
        let mut c = vec![0; n];
        c[i] = 1;
        let entry = RootEntry {
            coeffs: BTreeMap::from([(i, 1)]),
            imaginary: datum.is_imaginary(i),
            word: Vec::new(),
            index: i,
        };
        if height >= 1 && seen.insert((entry.imaginary, c.clone())) {
            queue.push_back((c, entry));
        }
    }
    if height == 0 {
        out.truncated = n > 0;
        return out;
    }
    while let Some((c, entry)) = queue.pop_front() {
        for &j in &real {
            let p: i64 = (0..n).map(|k| c[k] * datum.a(j, k)).sum();
            if p >= 0 {
                continue;
            }
            let mut c2 = c.clone();
            c2[j] -= p;
            let h: i64 = c2.iter().sum();
            if h as usize > height {
                out.truncated = true;
                continue;
            }
            if seen.insert((entry.imaginary, c2.clone())) {
                let mut word = vec![j];
                word.extend_from_slice(&entry.word);
                let next = RootEntry {
                    coeffs: c2.iter().enumerate().filter(|(_, &v)| v != 0).map(|(k, &v)| (k, v)).collect(),
                    imaginary: entry.imaginary,
                    word,
                    index: entry.index,
                };
                queue.push_back((c2, next));
            }
        }
        if entry.imaginary {
            out.imaginary.push(entry);
        } else {
            out.real.push(entry);
        }
    }
    let key = |e: &RootEntry| (e.height(), e.coeffs.clone());
    out.real.sort_by_key(key);
    out.imaginary.sort_by_key(key);
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tri {
    True,
    False,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrderBounds {
    pub root_height: usize,
    pub chain_length: usize,
    /// Maximum number of words explored when normalizing one element.
    pub class_cap: usize,
}

impl Default for OrderBounds {
    fn default() -> Self {
        Self { root_height: 12, chain_length: 8, class_cap: 20_000 }
    }
}

fn braid_order(datum: &BorcherdsCartanDatum, i: usize, j: usize) -> Option<usize> {
    match datum.a(i, j) * datum.a(j, i) {
        0 => Some(2),
        1 => Some(3),
        2 => Some(4),
        3 => Some(6),
        _ => None,
    }
}

/// Shortest-then-least word equal to `word` under the defining relations,
/// found by exhausting rewrites that never lengthen the word. `None` when
/// the cap is hit.
fn canonical(datum: &BorcherdsCartanDatum, word: &[usize], cap: usize) -> Option<Vec<usize>> {
    let mut seen: HashSet<Vec<usize>> = HashSet::from([word.to_vec()]);
    let mut queue = VecDeque::from([word.to_vec()]);
    let mut best = word.to_vec();
    while let Some(w) = queue.pop_front() {
        if (w.len(), &w) < (best.len(), &best) {
            best = w.clone();
        }
        let mut next = Vec::new();
        for p in 0..w.len().saturating_sub(1) {
            let (x, y) = (w[p], w[p + 1]);
            if x == y {
                if datum.is_real(x) {
                    let mut v = w.clone();
                    v.drain(p..p + 2);
                    next.push(v);
                }
                continue;
            }
            if datum.a(x, y) == 0 {
                let mut v = w.clone();
                v.swap(p, p + 1);
                next.push(v);
            } else if datum.is_real(x) && datum.is_real(y) {
                if let Some(m) = braid_order(datum, x, y) {
                    if p + m <= w.len() && (0..m).all(|t| w[p + t] == if t % 2 == 0 { x } else { y }) {
                        let mut v = w.clone();
                        for t in 0..m {
                            v[p + t] = if t % 2 == 0 { y } else { x };
                        }
                        next.push(v);
                    }
                }
            }
        }
        for v in next {
            if seen.insert(v.clone()) {
                if seen.len() > cap {
                    return None;
                }
                queue.push_back(v);
            }
        }
    }
    Some(best)
}

/// Decides `v ≤ w` by breadth-first search over chains of length-raising
/// reflections `r_β`, with `β` drawn from [`positive_roots`] within the
/// height bound. Answers `False` only when every root was enumerated and the
/// search was exhaustive.
pub fn bounded_order_leq(datum: &BorcherdsCartanDatum, v: &MonoidWord, w: &MonoidWord, bounds: OrderBounds) -> Tri {
    let (cv, cw) = match (
        canonical(datum, v.letters(), bounds.class_cap),
        canonical(datum, w.letters(), bounds.class_cap),
    ) {
        (Some(a), Some(b)) => (a, b),
        _ => return Tri::Unknown,
    };
    if cv == cw {
        return Tri::True;
    }
    let target_len = cw.len();
    let roots = positive_roots(datum, bounds.root_height);
    let mut exhaustive = !roots.truncated;
    let reflections: BTreeSet<Vec<usize>> = roots.all().map(|r| r.reflection_word()).collect();
    let mut seen: HashMap<Vec<usize>, usize> = HashMap::from([(cv.clone(), 0)]);
    let mut queue = VecDeque::from([(cv, 0usize)]);
    while let Some((u, depth)) = queue.pop_front() {
        if depth == bounds.chain_length {
            exhaustive = false;
            continue;
        }
        for r in &reflections {
            let mut word = r.clone();
            word.extend_from_slice(&u);
            let Some(next) = canonical(datum, &word, bounds.class_cap) else {
                exhaustive = false;
                continue;
            };
            if next.len() <= u.len() || next.len() > target_len {
                continue;
            }
            if next == cw {
                return Tri::True;
            }
            if !seen.contains_key(&next) {
                seen.insert(next.clone(), depth + 1);
                queue.push_back((next, depth + 1));
            }
        }
    }
    if exhaustive {
        Tri::False
    } else {
        Tri::Unknown
    }
}
