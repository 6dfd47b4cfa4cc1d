//! Tensor product and branching decompositions via dominant embedded paths,
//! the PRV-type sufficient condition, and the concatenation model of tensor
//! products.

use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use serde_json::{json, Value};

use crate::associated::AssociatedDatum;
use crate::cartan::BorcherdsCartanDatum;
use crate::error::{Error, Result};
use crate::index::IndexWord;
use crate::monoid::{reflect, MonoidWord};
use crate::pathmodel::Path;
use crate::scalar::Scalar;
use crate::weight::Weight;

use super::{embed_word, generate, is_dominant_shifted, CharacterElement, GenerateOptions};

/// Highest weights of the components with multiplicity, plus the result of
/// the truncated character identity when verification was requested.
#[derive(Clone, Debug)]
pub struct Decomposition<S> {
    pub components: BTreeMap<Weight<S>, usize>,
    pub depth: usize,
    /// `(weight, lhs, rhs)` for every disagreeing term; `None` if not checked.
    pub mismatches: Option<Vec<(Weight<S>, i64, i64)>>,
}

impl<S: Scalar> Decomposition<S> {
    pub fn verified(&self) -> Option<bool> {
        self.mismatches.as_ref().map(|m| m.is_empty())
    }

    pub fn to_json(&self, datum: &BorcherdsCartanDatum) -> Value {
        let comps: Vec<Value> = self
            .components
            .iter()
            .map(|(w, &m)| json!({ "weight": w.to_json(datum), "multiplicity": m }))
            .collect();
        let mut out = json!({ "depth": self.depth, "components": comps });
        if let Some(m) = &self.mismatches {
            out["verified"] = Value::Bool(m.is_empty());
            out["mismatches"] = Value::Array(
                m.iter()
                    .map(|(w, a, b)| json!({ "weight": w.to_json(datum), "lhs": a, "rhs": b }))
                    .collect(),
            );
        }
        out
    }
}

fn copies_for(depth: usize) -> usize {
    depth + 1
}

/// Components of `V(λ) ⊗ V(μ)` whose highest weight lies within `depth` of
/// `λ + μ`: one for each `π ∈ 𝔹(μ)` whose embedding stays in the dominant
/// chamber after shifting by `λ̃`. With `verify`, also checks
/// `ch V(λ) · ch V(μ) = Σ ch V(ν)` up to the depth.
pub fn tensor_decompose<S: Scalar>(
    datum: &Arc<BorcherdsCartanDatum>,
    lambda: &Weight<S>,
    mu: &Weight<S>,
    depth: usize,
    verify: bool,
    options: &GenerateOptions,
) -> Result<Decomposition<S>> {
    for w in [lambda, mu] {
        if !w.is_dominant(datum) || !w.is_base_only() {
            return Err(Error::NotDominant(w.display(datum)));
        }
    }
    let g_mu = generate(datum, mu, depth, options)?;
    let assoc = AssociatedDatum::with_uniform_copies(Arc::clone(datum), copies_for(depth))?;
    let derived = assoc.derived();
    let shift = assoc.lift_base(lambda)?;
    let coroots: Vec<usize> = (0..derived.rank()).collect();
    let mut components = BTreeMap::new();
    for n in 0..g_mu.len() {
        let p = embed_word(&assoc, mu, &g_mu.generating_words(n)[0])?;
        if is_dominant_shifted(derived, &p, &shift, &coroots) {
            *components.entry(lambda + &g_mu.node(n).wt()).or_insert(0) += 1;
        }
    }
    let mismatches = if verify {
        let lhs = generate(datum, lambda, depth, options)?.truncated_character().mul(&g_mu.truncated_character());
        let base_depth = (lambda + mu).depth();
        let mut rhs = CharacterElement::from_terms([], Some(base_depth.clone() + S::from_i64(depth as i64)));
        for (nu, &mult) in &components {
            let rel = (nu.depth() - base_depth.clone()).to_i64_exact().expect("integral depth") as usize;
            let ch = generate(datum, nu, depth - rel, options)?.truncated_character();
            rhs = rhs.add(&ch.scale(mult as i64));
        }
        Some(lhs.difference(&rhs))
    } else {
        None
    };
    Ok(Decomposition { components, depth, mismatches })
}

/// Restriction of `V(λ)` to the subalgebra on `subset`: components are the
/// weights of paths whose embeddings are dominant for all copies over the
/// subset.
pub fn branch<S: Scalar>(
    datum: &Arc<BorcherdsCartanDatum>,
    lambda: &Weight<S>,
    subset: &[usize],
    depth: usize,
    verify: bool,
    options: &GenerateOptions,
) -> Result<Decomposition<S>> {
    let g = generate(datum, lambda, depth, options)?;
    let assoc = AssociatedDatum::with_uniform_copies(Arc::clone(datum), copies_for(depth))?;
    let derived = assoc.derived();
    let coroots = assoc.derived_indices_over(subset);
    let mut components = BTreeMap::new();
    for n in 0..g.len() {
        let p = embed_word(&assoc, lambda, &g.generating_words(n)[0])?;
        if is_dominant_shifted(derived, &p, &Weight::zero(), &coroots) {
            *components.entry(g.node(n).wt()).or_insert(0) += 1;
        }
    }
    let mismatches = if verify {
        let lhs = g.truncated_character();
        let mut rhs = CharacterElement::from_terms([], lhs.depth().cloned());
        let sub = GenerateOptions { indices: Some(subset.to_vec()), ..options.clone() };
        for (nu, &mult) in &components {
            let rel = (nu.depth() - lambda.depth()).to_i64_exact().expect("integral depth") as usize;
            let ch = generate(datum, nu, depth - rel, &sub)?.truncated_character();
            rhs = rhs.add(&ch.scale(mult as i64));
        }
        Some(lhs.difference(&rhs))
    } else {
        None
    };
    Ok(Decomposition { components, depth, mismatches })
}

/// `{π ∗ η : π ∈ 𝔹(λ), η ∈ 𝔹(μ)}` within total depth `depth`, the
/// concatenation model of `𝔹(λ) ⊗ 𝔹(μ)`.
pub fn ambient_tensor_set<S: Scalar>(
    datum: &Arc<BorcherdsCartanDatum>,
    lambda: &Weight<S>,
    mu: &Weight<S>,
    depth: usize,
    options: &GenerateOptions,
) -> Result<HashSet<Path<S>>> {
    let gl = generate(datum, lambda, depth, options)?;
    let gm = generate(datum, mu, depth, options)?;
    let mut out = HashSet::new();
    for a in 0..gl.len() {
        for b in 0..gm.len() {
            if gl.node_depth(a) + gm.node_depth(b) <= depth {
                out.insert(gl.node(a).concat(gm.node(b)));
            }
        }
    }
    Ok(out)
}

/// Nodes of the concatenation model killed by every raising operator; the
/// imaginary ones are cut off against the model itself.
pub fn tensor_highest_weight_nodes<S: Scalar>(
    datum: &Arc<BorcherdsCartanDatum>,
    lambda: &Weight<S>,
    mu: &Weight<S>,
    depth: usize,
    options: &GenerateOptions,
) -> Result<Vec<Path<S>>> {
    let ambient = ambient_tensor_set(datum, lambda, mu, depth, options)?;
    let mut out = Vec::new();
    for p in &ambient {
        let mut highest = true;
        for i in 0..datum.rank() {
            if p.e_op_cutoff(datum, i, &ambient)?.is_some() {
                highest = false;
                break;
            }
        }
        if highest {
            out.push(p.clone());
        }
    }
    out.sort();
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct PrvReport<S> {
    pub nu: Weight<S>,
    pub nu_bar: Weight<S>,
    pub nu_dominant: bool,
    pub nu_bar_dominant: bool,
    /// Pairings of `ν̄` with every index of the associated datum.
    pub nu_bar_pairings: Vec<(String, S)>,
    /// Whether `V(ν)` occurs; `None` when `ν` is not dominant or lies beyond
    /// the search depth.
    pub occurs: Option<bool>,
    pub note: String,
}

impl<S: Scalar> PrvReport<S> {
    pub fn to_json(&self, datum: &BorcherdsCartanDatum, derived: &BorcherdsCartanDatum) -> Value {
        json!({
            "nu": self.nu.to_json(datum),
            "nu_bar": self.nu_bar.to_json(derived),
            "nu_dominant": self.nu_dominant,
            "nu_bar_dominant": self.nu_bar_dominant,
            "nu_bar_pairings": self.nu_bar_pairings.iter().map(|(l, p)| json!({"index": l, "pairing": p.to_string()})).collect::<Vec<_>>(),
            "occurs": self.occurs,
            "note": self.note,
        })
    }

    /// Whether the report contradicts the sufficient condition.
    pub fn is_failure(&self) -> bool {
        self.nu_bar_dominant && self.occurs == Some(false)
    }
}

fn check_pairing_one<S: Scalar>(datum: &BorcherdsCartanDatum, word: &MonoidWord, start: &Weight<S>) -> Result<()> {
    let mut w = start.clone();
    for i in word.application_order() {
        if datum.is_imaginary(i) && !w.pairing(datum, i).is_one() {
            return Err(Error::Admissibility(format!(
                "imaginary letter r{} must see pairing 1, found {}",
                datum.label(i),
                w.pairing(datum, i)
            )));
        }
        w = reflect(datum, i, &w);
    }
    Ok(())
}

/// Sufficient condition for `V(R_i λ + R_j μ)` to occur in `V(λ) ⊗ V(μ)`:
/// computes `ν` and its associated-model counterpart `ν̄` (with disjoint
/// copies for the two words) and, when `ν̄` is dominant, checks occurrence in
/// [`tensor_decompose`] at the given depth. Also returns the associated
/// datum used, for rendering `ν̄`.
pub fn prv_check<S: Scalar>(
    datum: &Arc<BorcherdsCartanDatum>,
    lambda: &Weight<S>,
    mu: &Weight<S>,
    word_i: &MonoidWord,
    word_j: &MonoidWord,
    depth: usize,
    options: &GenerateOptions,
) -> Result<(PrvReport<S>, AssociatedDatum)> {
    check_pairing_one(datum, word_i, lambda)?;
    check_pairing_one(datum, word_j, mu)?;
    let app_i = word_i.application_order();
    let app_j = word_j.application_order();
    let mut used: BTreeMap<usize, usize> = BTreeMap::new();
    let mut assign = |word: &[usize]| -> IndexWord {
        IndexWord::new(
            word.iter()
                .map(|&k| {
                    if datum.is_real(k) {
                        (k, 1)
                    } else {
                        let c = used.entry(k).or_insert(0);
                        *c += 1;
                        (k, *c)
                    }
                })
                .collect(),
        )
    };
    let idx_i = assign(&app_i);
    let idx_j = assign(&app_j);
    let budget = used.values().copied().max().unwrap_or(0).max(depth) + 1;
    let assoc = AssociatedDatum::with_uniform_copies(Arc::clone(datum), budget)?;
    let derived = assoc.derived();

    let nu = &word_i.act(datum, lambda) + &word_j.act(datum, mu);
    let mut a = assoc.lift_base(lambda)?;
    for &(k, m) in idx_i.letters() {
        a = reflect(derived, assoc.derived_index(k, m)?, &a);
    }
    let mut b = assoc.lift_base(mu)?;
    for &(k, m) in idx_j.letters() {
        b = reflect(derived, assoc.derived_index(k, m)?, &b);
    }
    let nu_bar = &a + &b;
    let pairings: Vec<(String, S)> =
        (0..derived.rank()).map(|k| (derived.label(k).to_string(), nu_bar.pairing(derived, k))).collect();
    let nu_bar_dominant = nu_bar.is_dominant(derived);
    let nu_dominant = nu.is_dominant(datum);
    let rel_depth = (nu.depth() - (lambda + mu).depth()).to_i64_exact().unwrap_or(i64::MAX);
    let in_range = nu_dominant && rel_depth <= depth as i64;
    let occurs = if in_range {
        Some(tensor_decompose(datum, lambda, mu, depth, false, options)?.components.contains_key(&nu))
    } else {
        None
    };
    let note = if !nu_bar_dominant {
        let neg: Vec<String> = pairings
            .iter()
            .filter(|(_, p)| p.is_negative())
            .map(|(l, p)| format!("{l}: {p}"))
            .collect();
        let mut note = format!("nu-bar non-dominant ({}); no assertion made", neg.join(", "));
        if occurs == Some(false) {
            note.push_str("; nu does not occur, counterexample reproduced");
        }
        note
    } else {
        match occurs {
            Some(true) => "nu occurs in the tensor product".to_string(),
            Some(false) => "nu-bar dominant but nu does not occur".to_string(),
            None if !nu_dominant => "nu-bar dominant but nu is not dominant".to_string(),
            None => format!("nu lies at depth {rel_depth}, beyond the search depth {depth}; inconclusive"),
        }
    };
    Ok((
        PrvReport { nu, nu_bar, nu_dominant, nu_bar_dominant, nu_bar_pairings: pairings, occurs, note },
        assoc,
    ))
}
