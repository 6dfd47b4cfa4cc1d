//! The embedding `π ↦ π̃` of a path crystal into the path model of the
//! associated Kac–Moody datum, and the copy-collapse map back.

use std::collections::BTreeSet;

use crate::associated::AssociatedDatum;
use crate::cartan::BorcherdsCartanDatum;
use crate::error::{Error, Result};
use crate::index::{ordered_index, IndexWord};
use crate::pathmodel::Path;
use crate::scalar::Scalar;
use crate::weight::Weight;

use super::CrystalGraph;

/// `F_{(i,m)} π_λ̃` for a word over `Ĩ` (application order).
fn apply_index_word<S: Scalar>(assoc: &AssociatedDatum, lambda: &Weight<S>, word: &IndexWord) -> Result<Option<Path<S>>> {
    let derived = assoc.derived();
    let mut p = Path::straight(&assoc.lift_base(lambda)?);
    for &(i, m) in word.letters() {
        let k = assoc.derived_index(i, m)?;
        match p.f_op(derived, k)? {
            Some(q) => p = q,
            None => return Ok(None),
        }
    }
    Ok(Some(p))
}

/// Image of `F_i π_λ` under the embedding, for a word `i` over `I` in
/// application order: the ordered index of `i` applied to `π_λ̃`.
pub fn embed_word<S: Scalar>(assoc: &AssociatedDatum, lambda: &Weight<S>, word: &[usize]) -> Result<Path<S>> {
    let idx = ordered_index(assoc.parent(), word);
    apply_index_word(assoc, lambda, &idx)?
        .ok_or_else(|| Error::Invalid("embedded monomial vanished on a crystal node".into()))
}

/// Embedding of every node of a crystal, computed from each stored
/// generating word. `inconsistent` lists nodes whose words disagree.
#[derive(Clone, Debug)]
pub struct Embedding<S> {
    pub paths: Vec<Path<S>>,
    pub inconsistent: Vec<usize>,
}

impl<S: Scalar> Embedding<S> {
    pub fn of_graph(graph: &CrystalGraph<S>, assoc: &AssociatedDatum) -> Result<Self> {
        let mut paths = Vec::with_capacity(graph.len());
        let mut inconsistent = Vec::new();
        for n in 0..graph.len() {
            let words = graph.generating_words(n);
            let first = embed_word(assoc, graph.lambda(), &words[0])?;
            for w in &words[1..] {
                if embed_word(assoc, graph.lambda(), w)? != first {
                    inconsistent.push(n);
                    break;
                }
            }
            paths.push(first);
        }
        Ok(Self { paths, inconsistent })
    }

    /// Distinct nodes have distinct images.
    pub fn is_injective(&self) -> bool {
        self.paths.iter().collect::<BTreeSet<_>>().len() == self.paths.len()
    }
}

/// Embedding of one node from its first stored generating word.
pub fn embed_path<S: Scalar>(graph: &CrystalGraph<S>, node: usize, assoc: &AssociatedDatum) -> Result<Path<S>> {
    embed_word(assoc, graph.lambda(), &graph.generating_words(node)[0])
}

/// Copy-collapse of a path of the associated model: `α̃_(i,m) ↦ α_i` on
/// every direction.
pub fn collapse_path<S: Scalar>(assoc: &AssociatedDatum, path: &Path<S>) -> Path<S> {
    Path::new(path.segments().iter().map(|(w, d)| (assoc.collapse_weight(w), d.clone())).collect())
        .expect("durations are preserved")
}

/// `⟨α_k^∨, σ + π(t)⟩ ≥ 0` for all listed `k` and all `t`. Pairings are
/// linear on segments, so the vertices suffice.
pub fn is_dominant_shifted<S: Scalar>(
    datum: &BorcherdsCartanDatum,
    path: &Path<S>,
    shift: &Weight<S>,
    coroots: &[usize],
) -> bool {
    coroots.iter().all(|&k| {
        let base = shift.pairing(datum, k);
        path.h_profile(datum, k).values.iter().all(|h| !(base.clone() + h.clone()).is_negative())
    })
}

/// For a generic index word `(i,m)` with `η = F_{(i,m)} π_λ̃ ≠ 0`, returns
/// `(η, η̄)` where `η̄ = F_{(i,m̄)} π_λ̃` uses the ordered copies.
pub fn reorder_generic<S: Scalar>(
    assoc: &AssociatedDatum,
    lambda: &Weight<S>,
    word: &IndexWord,
) -> Result<(Path<S>, Path<S>)> {
    if !word.is_generic(assoc.parent()) {
        return Err(Error::Invalid("index word is not generic".into()));
    }
    let eta = apply_index_word(assoc, lambda, word)?
        .ok_or_else(|| Error::Invalid("F_(i,m) π_λ̃ is zero".into()))?;
    let ordered = ordered_index(assoc.parent(), &word.erase_copies());
    let bar = apply_index_word(assoc, lambda, &ordered)?
        .ok_or_else(|| Error::Invalid("reordered monomial vanished for a nonzero generic monomial".into()))?;
    Ok((eta, bar))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::{generate, GenerateOptions};
    use crate::Rational;
    use std::sync::Arc;

    type W = Weight<Rational>;

    fn imag1() -> Arc<BorcherdsCartanDatum> {
        Arc::new(BorcherdsCartanDatum::from_matrix(vec![vec![0]], &[("lam1", &[1])]).unwrap())
    }

    #[test]
    fn rank_one_imaginary_embedding() {
        let d = imag1();
        let lam = W::named(&d, "lam1").unwrap();
        let assoc = AssociatedDatum::with_uniform_copies(Arc::clone(&d), 4).unwrap();
        let g = generate(&d, &lam, 3, &GenerateOptions::default()).unwrap();
        let emb = Embedding::of_graph(&g, &assoc).unwrap();
        assert!(emb.is_injective());
        assert!(emb.inconsistent.is_empty());
        assert_eq!(emb.paths[0], Path::straight(&lam));
        let c1 = assoc.derived_index(0, 1).unwrap();
        let c2 = assoc.derived_index(0, 2).unwrap();
        let expected = lam.minus_root(c1, &Rational::from_i64(1)).minus_root(c2, &Rational::from_i64(1));
        assert_eq!(emb.paths[2].wt(), expected);
        for n in 0..g.len() {
            assert_eq!(collapse_path(&assoc, &emb.paths[n]), *g.node(n));
        }
    }

    #[test]
    fn reorder_rank_one() {
        let d = imag1();
        let lam = W::named(&d, "lam1").unwrap();
        let assoc = AssociatedDatum::with_uniform_copies(Arc::clone(&d), 3).unwrap();
        let (eta, bar) = reorder_generic(&assoc, &lam, &IndexWord::new(vec![(0, 1), (0, 3)])).unwrap();
        let (same, same_bar) = reorder_generic(&assoc, &lam, &IndexWord::new(vec![(0, 1), (0, 2)])).unwrap();
        assert_eq!(same, same_bar);
        assert_eq!(bar, same);
        assert_ne!(eta, bar);
    }

    #[test]
    fn dominance_of_shifted_paths() {
        let d = Arc::new(
            BorcherdsCartanDatum::from_matrix(vec![vec![2, -1], vec![-1, 0]], &[("lam01", &[0, 1]), ("lam10", &[1, 0])])
                .unwrap(),
        );
        let lam = W::named(&d, "lam10").unwrap();
        let mu = W::named(&d, "lam01").unwrap();
        let assoc = AssociatedDatum::with_uniform_copies(Arc::clone(&d), 2).unwrap();
        let der = assoc.derived();
        let all: Vec<usize> = (0..der.rank()).collect();
        assert!(is_dominant_shifted(der, &Path::straight(&mu), &lam, &all));
        assert!(is_dominant_shifted(der, &Path::straight(&W::zero()), &lam, &all));
        let k = assoc.derived_index(1, 1).unwrap();
        let f = Path::straight(&mu).f_op(der, k).unwrap().unwrap();
        assert!(!is_dominant_shifted(der, &f, &lam, &all));
    }
}
