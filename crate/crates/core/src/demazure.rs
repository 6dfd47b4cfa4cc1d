//! Demazure operators on the group ring, Demazure crystals `𝔹_w(λ)` built
//! by staged lowering, and the checks relating the two.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use serde_json::{json, Value};

use crate::associated::AssociatedDatum;
use crate::cartan::BorcherdsCartanDatum;
use crate::crystal::{collapse_path, embed_path, generate, CharacterElement, GenerateOptions};
use crate::error::{Error, Result};
use crate::monoid::{is_dominant_reduced, satisfies_condition_4, satisfies_condition_5, BlockForm};
use crate::pathmodel::Path;
use crate::report::Check;
use crate::scalar::Scalar;
use crate::weight::Weight;

fn integral_pairing<S: Scalar>(datum: &BorcherdsCartanDatum, mu: &Weight<S>, i: usize) -> Result<i64> {
    mu.pairing(datum, i)
        .to_i64_exact()
        .ok_or_else(|| Error::Invalid(format!("non-integral pairing with index `{}`", datum.label(i))))
}

fn check_integral<S: Scalar>(datum: &BorcherdsCartanDatum, ch: &CharacterElement<S>, i: usize) -> Result<()> {
    for mu in ch.terms().keys() {
        integral_pairing(datum, mu, i)?;
    }
    Ok(())
}

/// `𝒟_i(e^μ) = (e^μ − e^{μ−(1+n)α_i}) / (1 − e^{−α_i})` with
/// `n = ⟨α_i^∨, μ⟩`, for a real index `i`.
pub fn demazure_real<S: Scalar>(
    datum: &BorcherdsCartanDatum,
    ch: &CharacterElement<S>,
    i: usize,
) -> Result<CharacterElement<S>> {
    if !datum.is_real(i) {
        return Err(Error::NotReal(datum.label(i).to_string()));
    }
    check_integral(datum, ch, i)?;
    Ok(ch.map_terms(|mu| {
        let n = integral_pairing(datum, mu, i).expect("checked above");
        if n >= 0 {
            (0..=n).map(|m| (mu.minus_root(i, &S::from_i64(m)), 1)).collect()
        } else {
            (1..=(-n - 1)).map(|m| (mu.minus_root(i, &S::from_i64(-m)), -1)).collect()
        }
    }))
}

/// `𝒟_i^{(a)}(e^μ)`: `e^μ` if `⟨α_i^∨, μ⟩ = 0`, else `Σ_{m=0}^{a} e^{μ−mα_i}`.
pub fn demazure_imaginary<S: Scalar>(
    datum: &BorcherdsCartanDatum,
    ch: &CharacterElement<S>,
    i: usize,
    power: usize,
) -> Result<CharacterElement<S>> {
    if datum.is_real(i) {
        return Err(Error::NotImaginary(datum.label(i).to_string()));
    }
    if power < 1 {
        return Err(Error::Invalid("imaginary Demazure power must be at least 1".into()));
    }
    Ok(ch.map_terms(|mu| {
        if mu.pairing(datum, i).is_zero() {
            vec![(mu.clone(), 1)]
        } else {
            (0..=power as i64).map(|m| (mu.minus_root(i, &S::from_i64(m)), 1)).collect()
        }
    }))
}

/// `𝒟_v = 𝒟_{j_l} ⋯ 𝒟_{j_1}` for a real word `v = r_{j_l} ⋯ r_{j_1}` in
/// written order.
pub fn demazure_word<S: Scalar>(
    datum: &BorcherdsCartanDatum,
    ch: &CharacterElement<S>,
    written: &[usize],
) -> Result<CharacterElement<S>> {
    let mut out = ch.clone();
    for &j in written.iter().rev() {
        out = demazure_real(datum, &out, j)?;
    }
    Ok(out)
}

/// Rejects forms that are not admissible for `λ`, naming the failed condition.
pub fn check_admissible<S: Scalar>(datum: &BorcherdsCartanDatum, form: &BlockForm, lambda: &Weight<S>) -> Result<()> {
    let word = form.to_word();
    if !satisfies_condition_4(datum, &word, lambda) {
        return Err(Error::Admissibility(format!(
            "condition (4) fails for {} at {}",
            form.display(datum),
            lambda.display(datum)
        )));
    }
    if !satisfies_condition_5(datum, &word, lambda) {
        return Err(Error::Admissibility(format!(
            "condition (5) fails for {} at {}",
            form.display(datum),
            lambda.display(datum)
        )));
    }
    if !is_dominant_reduced(datum, form) {
        return Err(Error::Admissibility(format!("{} is not dominant reduced", form.display(datum))));
    }
    Ok(())
}

fn guard_depth<S: Scalar>(ch: &CharacterElement<S>, max_depth: usize) -> Result<()> {
    let bound = S::from_i64(max_depth as i64);
    if ch.terms().keys().any(|w| w.depth() > bound) {
        return Err(Error::Budget(format!("Demazure character exceeds depth guard {max_depth}")));
    }
    Ok(())
}

/// `𝒟_{w_k} 𝒟_{i_k}^{(a_k)} ⋯ 𝒟_{w_0}(e^λ)` along the stored reduced
/// words. The result is exact; `max_depth` only guards against runaway
/// inputs.
pub fn demazure_character<S: Scalar>(
    datum: &BorcherdsCartanDatum,
    lambda: &Weight<S>,
    form: &BlockForm,
    max_depth: usize,
) -> Result<CharacterElement<S>> {
    check_admissible(datum, form, lambda)?;
    let mut ch = CharacterElement::monomial(lambda.clone());
    for (s, block) in form.real_blocks().iter().enumerate() {
        if s > 0 {
            let (i, a) = form.imaginary()[s - 1];
            ch = demazure_imaginary(datum, &ch, i, a)?;
            guard_depth(&ch, max_depth)?;
        }
        ch = demazure_word(datum, &ch, block)?;
        guard_depth(&ch, max_depth)?;
    }
    Ok(ch)
}

/// Node budget and depth guard for staged enumeration.
#[derive(Clone, Copy, Debug)]
pub struct StageLimits {
    pub node_budget: usize,
    pub max_depth: usize,
}

impl Default for StageLimits {
    fn default() -> Self {
        Self { node_budget: crate::crystal::DEFAULT_NODE_BUDGET, max_depth: 64 }
    }
}

fn limit<S: Scalar>(set: &BTreeSet<Path<S>>, limits: &StageLimits) -> Result<()> {
    if set.len() > limits.node_budget {
        return Err(Error::Budget(format!("Demazure crystal exceeds node budget {}", limits.node_budget)));
    }
    let bound = S::from_i64(limits.max_depth as i64);
    if set.iter().any(|p| p.depth() > bound) {
        return Err(Error::Budget(format!("Demazure crystal exceeds depth guard {}", limits.max_depth)));
    }
    Ok(())
}

/// Closure under all powers `f_j^m`, `m ≥ 0`.
fn close_under<S: Scalar>(
    datum: &BorcherdsCartanDatum,
    set: BTreeSet<Path<S>>,
    j: usize,
    limits: &StageLimits,
) -> Result<BTreeSet<Path<S>>> {
    let mut out = BTreeSet::new();
    let bound = S::from_i64(limits.max_depth as i64);
    for p in set {
        let mut cur = Some(p);
        while let Some(q) = cur {
            if q.depth() > bound {
                return Err(Error::Budget(format!("Demazure crystal exceeds depth guard {}", limits.max_depth)));
            }
            cur = q.f_op(datum, j)?;
            out.insert(q);
        }
    }
    limit(&out, limits)?;
    Ok(out)
}

/// `{f_i^ε p : p ∈ set, 0 ≤ ε ≤ a}`.
fn bounded_powers<S: Scalar>(
    datum: &BorcherdsCartanDatum,
    set: BTreeSet<Path<S>>,
    i: usize,
    a: usize,
    limits: &StageLimits,
) -> Result<BTreeSet<Path<S>>> {
    let mut out = BTreeSet::new();
    for p in set {
        let mut cur = Some(p);
        for _ in 0..=a {
            let Some(q) = cur else { break };
            cur = q.f_op(datum, i)?;
            out.insert(q);
        }
    }
    limit(&out, limits)?;
    Ok(out)
}

/// Applies the real block `written` (rightmost letter first), each letter
/// under all powers.
fn apply_real_block<S: Scalar>(
    datum: &BorcherdsCartanDatum,
    mut set: BTreeSet<Path<S>>,
    written: &[usize],
    limits: &StageLimits,
) -> Result<BTreeSet<Path<S>>> {
    for &j in written.iter().rev() {
        set = close_under(datum, set, j, limits)?;
    }
    Ok(set)
}

/// `𝔹_w(λ)`: starting from `π_λ`, each real block closes under all powers
/// of its letters and each imaginary block `r_i^a` applies `f_i^ε`,
/// `0 ≤ ε ≤ a`.
pub fn demazure_crystal<S: Scalar>(
    datum: &BorcherdsCartanDatum,
    lambda: &Weight<S>,
    form: &BlockForm,
    limits: &StageLimits,
) -> Result<BTreeSet<Path<S>>> {
    check_admissible(datum, form, lambda)?;
    staged(datum, lambda, form.real_blocks(), form.imaginary(), limits)
}

fn staged<S: Scalar>(
    datum: &BorcherdsCartanDatum,
    lambda: &Weight<S>,
    blocks: &[Vec<usize>],
    imaginary: &[(usize, usize)],
    limits: &StageLimits,
) -> Result<BTreeSet<Path<S>>> {
    let mut set = BTreeSet::from([Path::straight(lambda)]);
    for (s, block) in blocks.iter().enumerate() {
        if s > 0 {
            let (i, a) = imaginary[s - 1];
            set = bounded_powers(datum, set, i, a, limits)?;
        }
        set = apply_real_block(datum, set, block, limits)?;
    }
    Ok(set)
}

/// `Σ_{p ∈ set} e^{wt p}`.
pub fn character_of<S: Scalar>(set: &BTreeSet<Path<S>>) -> CharacterElement<S> {
    CharacterElement::from_terms(set.iter().map(|p| (p.wt(), 1)), None)
}

fn mismatch_witnesses<S: Scalar>(
    datum: &BorcherdsCartanDatum,
    lhs: &CharacterElement<S>,
    rhs: &CharacterElement<S>,
) -> Vec<Value> {
    lhs.difference(rhs)
        .into_iter()
        .map(|(w, a, b)| json!({ "weight": w.display(datum), "lhs": a, "rhs": b }))
        .collect()
}

/// The enumerated crystal character equals the operator formula.
pub fn verify_theorem4<S: Scalar>(
    datum: &BorcherdsCartanDatum,
    lambda: &Weight<S>,
    form: &BlockForm,
    limits: &StageLimits,
) -> Result<Check> {
    let set = demazure_crystal(datum, lambda, form, limits)?;
    let lhs = character_of(&set);
    let rhs = demazure_character(datum, lambda, form, limits.max_depth)?;
    let mut witnesses = mismatch_witnesses(datum, &lhs, &rhs);
    let passed = witnesses.is_empty();
    witnesses.insert(0, json!({ "word": form.display(datum), "nodes": set.len(), "terms": rhs.len() }));
    Ok(Check::new("demazure-character", passed, witnesses))
}

/// Every node of `𝔹_w(λ)` is a node of `𝔹(λ)`, and the extremal weight
/// `wλ` is carried by exactly one node of each.
pub fn verify_theorem3_subset<S: Scalar>(
    datum: &Arc<BorcherdsCartanDatum>,
    lambda: &Weight<S>,
    form: &BlockForm,
    limits: &StageLimits,
) -> Result<Check> {
    let set = demazure_crystal(datum, lambda, form, limits)?;
    let depth = set
        .iter()
        .map(|p| p.depth().to_i64_exact().expect("integral depth") as usize)
        .max()
        .unwrap_or(0);
    let opts = GenerateOptions { indices: None, node_budget: limits.node_budget };
    let graph = generate(datum, lambda, depth, &opts)?;
    let missing: Vec<Value> =
        set.iter().filter(|p| graph.find(p).is_none()).map(|p| p.to_json(datum)).collect();
    let extremal = form.to_word().act(datum, lambda);
    let in_demazure = set.iter().filter(|p| p.wt() == extremal).count();
    let in_full = graph.weight_space(&extremal).len();
    let passed = missing.is_empty() && in_demazure == 1 && in_full == 1;
    let mut witnesses = vec![json!({
        "word": form.display(datum),
        "extremal_weight": extremal.display(datum),
        "extremal_in_demazure": in_demazure,
        "extremal_in_crystal": in_full,
        "generated_depth": depth,
    })];
    witnesses.extend(missing);
    Ok(Check::new("demazure-subset", passed, witnesses))
}

/// Intermediate identities for the last imaginary block: with `𝔹_1` the
/// crystal of the form without `w_k r_{i_k}^{a_k}` and
/// `𝔹_2 = {f_{i_k}^ε b}`, checks `ch 𝔹_2 = 𝒟_{i_k}^{(a_k)} ch 𝔹_1` and
/// `ch 𝔹_w = 𝒟_{w_k} ch 𝔹_2`.
pub fn demazure_recursion_check<S: Scalar>(
    datum: &BorcherdsCartanDatum,
    lambda: &Weight<S>,
    form: &BlockForm,
    limits: &StageLimits,
) -> Result<Vec<Check>> {
    check_admissible(datum, form, lambda)?;
    let k = form.k();
    if k == 0 {
        return Err(Error::Invalid("recursion check needs at least one imaginary block".into()));
    }
    let blocks = form.real_blocks();
    let (i, a) = form.imaginary()[k - 1];
    let b1 = staged(datum, lambda, &blocks[..k], &form.imaginary()[..k - 1], limits)?;
    let b2 = bounded_powers(datum, b1.clone(), i, a, limits)?;
    let bw = apply_real_block(datum, b2.clone(), &blocks[k], limits)?;
    let step1_rhs = demazure_imaginary(datum, &character_of(&b1), i, a)?;
    let step2_rhs = demazure_word(datum, &character_of(&b2), &blocks[k])?;
    let full = staged(datum, lambda, blocks, form.imaginary(), limits)?;
    let name = form.display(datum);
    Ok(vec![
        Check::new(
            "recursion-imaginary-step",
            character_of(&b2) == step1_rhs,
            [vec![json!({ "word": name, "b1": b1.len(), "b2": b2.len() })], mismatch_witnesses(datum, &character_of(&b2), &step1_rhs)].concat(),
        ),
        Check::new(
            "recursion-real-step",
            character_of(&bw) == step2_rhs && bw == full,
            [vec![json!({ "word": name, "bw": bw.len() })], mismatch_witnesses(datum, &character_of(&bw), &step2_rhs)].concat(),
        ),
    ])
}

/// Compares `𝒟_v` along two words for the same real element on the given
/// characters; returns the inputs on which they differ.
pub fn braid_comparison<S: Scalar>(
    datum: &BorcherdsCartanDatum,
    first: &[usize],
    second: &[usize],
    inputs: &[CharacterElement<S>],
) -> Result<Vec<CharacterElement<S>>> {
    let mut out = Vec::new();
    for ch in inputs {
        if demazure_word(datum, ch, first)? != demazure_word(datum, ch, second)? {
            out.push(ch.clone());
        }
    }
    Ok(out)
}

/// Outcome of the associated-model comparison for a Demazure crystal.
#[derive(Clone, Debug)]
pub struct ShadowReport<S> {
    /// Copies-subset enumeration (all subsets of each imaginary block).
    pub full: BTreeSet<Path<S>>,
    /// Enumeration with initial segments of copies only.
    pub ordered: BTreeSet<Path<S>>,
    pub checks: Vec<Check>,
}

/// Relabels copies of imaginary roots in every direction of a path.
pub fn relabel_copies<S: Scalar>(
    assoc: &AssociatedDatum,
    path: &Path<S>,
    perms: &BTreeMap<usize, BTreeMap<usize, usize>>,
) -> Result<Path<S>> {
    let mut map: BTreeMap<usize, usize> = BTreeMap::new();
    for (&i, p) in perms {
        for (&m, &n) in p {
            map.insert(assoc.derived_index(i, m)?, assoc.derived_index(i, n)?);
        }
    }
    let segments = path
        .segments()
        .iter()
        .map(|(w, d)| {
            let roots = w.roots().iter().map(|(k, c)| (*map.get(k).unwrap_or(k), c.clone())).collect();
            (Weight::from_parts(w.base().clone(), roots), d.clone())
        })
        .collect();
    Path::new(segments)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n);
            out.push(q);
        }
    }
    out
}

/// All elements of the product of the symmetric groups on the copies
/// `1..=a_t` of each imaginary block.
fn block_permutations(imaginary: &[(usize, usize)]) -> Vec<BTreeMap<usize, BTreeMap<usize, usize>>> {
    let mut out = vec![BTreeMap::new()];
    for &(i, a) in imaginary {
        let mut next = Vec::new();
        for base in &out {
            for p in permutations(a) {
                let mut m = base.clone();
                m.insert(i, p.iter().enumerate().map(|(k, &v)| (k + 1, v)).collect());
                next.push(m);
            }
        }
        out = next;
    }
    out
}

/// Associated-model enumeration for `w`: real blocks become blocks over the
/// copy-1 indices and the block `r_{i_t}^{a_t}` applies `f_{(i_t,m)}` for
/// `m` in a subset of `1..=a_t` (every subset for `full`, initial segments
/// for `ordered`). Checks that `full` is the orbit of `ordered` under copy
/// permutations, that collapsing `ordered` gives `𝔹_w(λ)` and that the
/// embedding of `𝔹_w(λ)` is `ordered`. Also reports whether `full` agrees
/// with the closure under all powers of the copies.
pub fn shadow_check<S: Scalar>(
    datum: &Arc<BorcherdsCartanDatum>,
    lambda: &Weight<S>,
    form: &BlockForm,
    limits: &StageLimits,
) -> Result<ShadowReport<S>> {
    let parent_set = demazure_crystal(datum, lambda, form, limits)?;
    let max_power = form.imaginary().iter().map(|&(_, a)| a).max().unwrap_or(1);
    let assoc = AssociatedDatum::with_uniform_copies(Arc::clone(datum), max_power)?;
    let derived = assoc.derived();
    let lam = assoc.lift_base(lambda)?;
    let lift_block = |b: &[usize]| -> Result<Vec<usize>> { b.iter().map(|&j| assoc.derived_index(j, 1)).collect() };
    let blocks: Vec<Vec<usize>> = form.real_blocks().iter().map(|b| lift_block(b)).collect::<Result<_>>()?;

    let run = |all_subsets: bool| -> Result<BTreeSet<Path<S>>> {
        let mut set = BTreeSet::from([Path::straight(&lam)]);
        for (s, block) in blocks.iter().enumerate() {
            if s > 0 {
                let (i, a) = form.imaginary()[s - 1];
                let copies: Vec<usize> = (1..=a).map(|m| assoc.derived_index(i, m)).collect::<Result<_>>()?;
                let subsets: Vec<Vec<usize>> = if all_subsets {
                    (0u32..1 << a)
                        .map(|mask| (0..a).filter(|b| mask & (1 << b) != 0).map(|b| copies[b]).collect())
                        .collect()
                } else {
                    (0..=a).map(|e| copies[..e].to_vec()).collect()
                };
                let mut next = BTreeSet::new();
                for p in &set {
                    'subset: for sub in &subsets {
                        let mut q = p.clone();
                        for &k in sub {
                            match q.f_op(derived, k)? {
                                Some(r) => q = r,
                                None => continue 'subset,
                            }
                        }
                        next.insert(q);
                    }
                }
                limit(&next, limits)?;
                set = next;
            }
            set = apply_real_block(derived, set, block, limits)?;
        }
        Ok(set)
    };
    let full = run(true)?;
    let ordered = run(false)?;

    let mut orbit = BTreeSet::new();
    for perm in block_permutations(form.imaginary()) {
        for p in &ordered {
            orbit.insert(relabel_copies(&assoc, p, &perm)?);
        }
    }
    let collapsed: BTreeSet<Path<S>> = ordered.iter().map(|p| collapse_path(&assoc, p)).collect();

    let depth = parent_set.iter().map(|p| p.depth().to_i64_exact().unwrap_or(0) as usize).max().unwrap_or(0);
    let graph = generate(datum, lambda, depth, &GenerateOptions { indices: None, node_budget: limits.node_budget })?;
    let mut embedded = BTreeSet::new();
    for p in &parent_set {
        let n = graph.find(p).ok_or(Error::NotInCrystal)?;
        embedded.insert(embed_path(&graph, n, &assoc)?);
    }

    let mut all_powers = BTreeSet::from([Path::straight(&lam)]);
    for (s, block) in blocks.iter().enumerate() {
        if s > 0 {
            let (i, a) = form.imaginary()[s - 1];
            for m in (1..=a).rev() {
                all_powers = close_under(derived, all_powers, assoc.derived_index(i, m)?, limits)?;
            }
        }
        all_powers = apply_real_block(derived, all_powers, block, limits)?;
    }

    let sizes = json!({
        "word": form.display(datum),
        "full": full.len(),
        "ordered": ordered.len(),
        "demazure": parent_set.len(),
    });
    let checks = vec![
        Check::new("shadow-orbit", orbit == full, vec![sizes.clone(), json!({ "orbit": orbit.len() })]),
        Check::new("shadow-collapse", collapsed == parent_set, vec![sizes.clone(), json!({ "collapsed": collapsed.len() })]),
        Check::new("shadow-embedding", embedded == ordered, vec![sizes.clone(), json!({ "embedded": embedded.len() })]),
        Check::new(
            "shadow-all-powers",
            all_powers == full,
            vec![sizes, json!({ "all_powers": all_powers.len() })],
        ),
    ];
    Ok(ShadowReport { full, ordered, checks })
}
