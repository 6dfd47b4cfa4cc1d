//! Verification suites over the bundled fixtures. Each suite returns a list
//! of named checks; a suite passes when no check fails or is skipped.

use std::collections::BTreeSet;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::associated::AssociatedDatum;
use crate::cartan::BorcherdsCartanDatum;
use crate::crystal::{
    branch, generate, prv_check, tensor_decompose, tensor_highest_weight_nodes, ambient_tensor_set,
    CharacterElement, Embedding, GenerateOptions, collapse_path, DEFAULT_NODE_BUDGET,
};
use crate::demazure::{
    demazure_real, demazure_recursion_check, shadow_check, verify_theorem3_subset, verify_theorem4, StageLimits,
};
use crate::error::{Error, Result};
use crate::index::ordered_index;
use crate::monoid::{
    check_lemma_422, group_elements, to_minimal_dominant_reduced, BlockForm, MonoidWord, PropertyStatus,
    DEFAULT_REWRITE_BUDGET,
};
use crate::pathmodel::Path;
use crate::report::{Check, CheckStatus};
use crate::weight::Weight;
use crate::Rational;

type W = Weight<Rational>;

pub const SUITES: &[&str] =
    &["paper-examples", "thm4", "thm3", "thm1", "thm2", "prv", "lemma411", "invariants", "shadow"];

/// Bundled datum files by name.
pub fn fixture(name: &str) -> Result<Arc<BorcherdsCartanDatum>> {
    let text = match name {
        "a1" => include_str!("../fixtures/a1.json"),
        "a2" => include_str!("../fixtures/a2.json"),
        "b2" => include_str!("../fixtures/b2.json"),
        "mixed" => include_str!("../fixtures/mixed.json"),
        "imag1" => include_str!("../fixtures/imag1.json"),
        "ex222" => include_str!("../fixtures/ex222.json"),
        _ => return Err(Error::Invalid(format!("unknown fixture `{name}`"))),
    };
    Ok(Arc::new(BorcherdsCartanDatum::from_json(text)?))
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    /// Overrides the generation depth of suites that truncate.
    pub depth: Option<usize>,
    pub node_budget: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self { depth: None, node_budget: DEFAULT_NODE_BUDGET }
    }
}

impl SuiteOptions {
    fn depth_or(&self, default: usize) -> usize {
        self.depth.unwrap_or(default)
    }

    fn generate(&self) -> GenerateOptions {
        GenerateOptions { indices: None, node_budget: self.node_budget }
    }

    fn limits(&self) -> StageLimits {
        StageLimits { node_budget: self.node_budget, ..StageLimits::default() }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == CheckStatus::Pass)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| c.status != CheckStatus::Pass).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite,
            "passed": self.passed(),
            "total": self.checks.len(),
            "failures": self.failures().len(),
            "checks": self.checks,
        })
    }
}

pub fn run_suite(name: &str, options: &SuiteOptions) -> Result<SuiteReport> {
    let checks = match name {
        "paper-examples" => reference_examples(options)?,
        "thm4" => theorem4_suite(options)?,
        "thm3" => theorem3_suite(options)?,
        "thm1" => tensor_suite(options)?,
        "thm2" => branching_suite(options)?,
        "prv" => prv_suite(options)?,
        "lemma411" => extremal_suite(options)?,
        "invariants" => invariant_suite(options)?,
        "shadow" => shadow_suite(options)?,
        _ => return Err(Error::Invalid(format!("unknown suite `{name}` (expected one of {})", SUITES.join(", ")))),
    };
    Ok(SuiteReport { suite: name.to_string(), checks })
}

fn named(d: &BorcherdsCartanDatum, name: &str) -> Result<W> {
    W::named(d, name)
}

/// Written-order word from labels.
fn word(d: &BorcherdsCartanDatum, text: &str) -> Result<MonoidWord> {
    MonoidWord::parse(d, text)
}

/// `(fixture, weight, words)` for the Demazure suites.
pub fn demazure_fixtures() -> Result<Vec<(String, String, Vec<MonoidWord>)>> {
    let mut out = Vec::new();
    let imag_words = (1..=10).map(|a| MonoidWord::new(vec![0; a])).collect();
    out.push(("imag1".to_string(), "lam1".to_string(), imag_words));
    let mixed = fixture("mixed")?;
    let mixed_words =
        ["r2", "r1 r2", "r2^2", "r1 r2^2"].iter().map(|t| word(&mixed, t)).collect::<Result<_>>()?;
    out.push(("mixed".to_string(), "lam01".to_string(), mixed_words));
    for name in ["a2", "b2"] {
        let d = fixture(name)?;
        let words = group_elements(&d, 16, 1000)?.into_iter().map(MonoidWord::new).collect();
        out.push((name.to_string(), "lam11".to_string(), words));
    }
    Ok(out)
}

/// A fixture word with its minimal dominant reduced form.
type FormCase = (Arc<BorcherdsCartanDatum>, W, MonoidWord, BlockForm);

fn normal_forms() -> Result<Vec<FormCase>> {
    let mut out = Vec::new();
    for (fix, weight, words) in demazure_fixtures()? {
        let d = fixture(&fix)?;
        let lam = named(&d, &weight)?;
        for w in words {
            let form = to_minimal_dominant_reduced(&d, &w, &lam, DEFAULT_REWRITE_BUDGET)?;
            out.push((Arc::clone(&d), lam.clone(), w, form));
        }
    }
    Ok(out)
}

fn tag(check: Check, fixture: &str, word: &str) -> Check {
    let mut c = check;
    c.check = format!("{} [{fixture}: {word}]", c.check);
    c
}

fn fixture_name(d: &BorcherdsCartanDatum) -> &'static str {
    for name in ["a1", "a2", "b2", "mixed", "imag1", "ex222"] {
        if fixture(name).map(|f| *f == *d).unwrap_or(false) {
            return name;
        }
    }
    "datum"
}

fn theorem4_suite(options: &SuiteOptions) -> Result<Vec<Check>> {
    let limits = options.limits();
    let mut checks = Vec::new();
    for (d, lam, w, form) in normal_forms()? {
        let fx = fixture_name(&d);
        let label = w.display(&d);
        checks.push(tag(verify_theorem4(&d, &lam, &form, &limits)?, fx, &label));
        if form.k() > 0 {
            for c in demazure_recursion_check(&d, &lam, &form, &limits)? {
                checks.push(tag(c, fx, &label));
            }
        }
    }
    Ok(checks)
}

fn theorem3_suite(options: &SuiteOptions) -> Result<Vec<Check>> {
    let limits = options.limits();
    let mut checks = Vec::new();
    for (d, lam, w, form) in normal_forms()? {
        checks.push(tag(verify_theorem3_subset(&d, &lam, &form, &limits)?, fixture_name(&d), &w.display(&d)));
    }
    Ok(checks)
}

fn decomposition_check(name: String, mismatches: Option<Vec<(W, i64, i64)>>, d: &BorcherdsCartanDatum, comps: Value) -> Check {
    let mism = mismatches.unwrap_or_default();
    let mut witnesses = vec![comps];
    witnesses.extend(mism.iter().map(|(w, a, b)| json!({ "weight": w.display(d), "lhs": a, "rhs": b })));
    Check::new(name, mism.is_empty(), witnesses)
}

fn tensor_suite(options: &SuiteOptions) -> Result<Vec<Check>> {
    let cases: &[(&str, &str, &str, usize)] = &[
        ("mixed", "lam01", "lam01", 5),
        ("mixed", "lam10", "lam01", 5),
        ("mixed", "lam11", "lam10", 5),
        ("a1", "lam2", "lam2", 6),
        ("a1", "lam3", "lam1", 6),
        ("a2", "lam10", "lam01", 6),
        ("a2", "lam11", "lam10", 6),
    ];
    let mut checks = Vec::new();
    for &(fx, l, m, depth) in cases {
        let d = fixture(fx)?;
        let depth = options.depth_or(depth);
        let dec = tensor_decompose(&d, &named(&d, l)?, &named(&d, m)?, depth, true, &options.generate())?;
        checks.push(decomposition_check(
            format!("tensor-identity [{fx}: {l} x {m}, depth {depth}]"),
            dec.mismatches.clone(),
            &d,
            dec.to_json(&d)["components"].clone(),
        ));
    }
    Ok(checks)
}

fn branching_suite(options: &SuiteOptions) -> Result<Vec<Check>> {
    let d = fixture("mixed")?;
    let depth = options.depth_or(4);
    let mut checks = Vec::new();
    for l in ["lam01", "lam10", "lam11"] {
        for (sname, subset) in [("{1}", vec![0usize]), ("{}", vec![])] {
            let dec = branch(&d, &named(&d, l)?, &subset, depth, true, &options.generate())?;
            checks.push(decomposition_check(
                format!("branching-identity [mixed: {l}, S = {sname}, depth {depth}]"),
                dec.mismatches.clone(),
                &d,
                json!(dec.components.len()),
            ));
        }
    }
    Ok(checks)
}

/// Tensor non-example on the mixed datum: `λ` pairs 0 and `μ` pairs 1 with the
/// imaginary index.
fn non_example_checks(options: &SuiteOptions) -> Result<Vec<Check>> {
    let d = fixture("mixed")?;
    let lam = named(&d, "lam10")?;
    let mu = named(&d, "lam01")?;
    let i = 1;
    let depth = options.depth_or(4).max(1);
    let one = Rational::from_integer(1.into());
    let nu = (&lam + &mu).minus_root(i, &one);
    let gopts = options.generate();

    let hw = tensor_highest_weight_nodes(&d, &lam, &mu, depth, &gopts)?;
    let of_weight: Vec<Value> = hw.iter().filter(|p| p.wt() == nu).map(|p| p.to_json(&d)).collect();
    let hw_weights: Vec<String> = hw.iter().map(|p| p.wt().display(&d)).collect();
    let mut checks = vec![Check::new(
        "non-example-no-highest-weight-node",
        of_weight.is_empty(),
        vec![json!({ "nu": nu.display(&d), "highest_weights": hw_weights })],
    )];

    let ambient = ambient_tensor_set(&d, &lam, &mu, depth, &gopts)?;
    let pl = Path::straight(&lam);
    let pm = Path::straight(&mu);
    let lowered = pm.f_op(&d, i)?.ok_or_else(|| Error::Invalid("f_i kills pi_mu".into()))?;
    let raised = pl.concat(&lowered).e_op_cutoff(&d, i, &ambient)?;
    let expected = pl.concat(&pm);
    checks.push(Check::new(
        "non-example-raising-nonzero",
        raised.as_ref() == Some(&expected),
        vec![json!({ "result": raised.map(|p| p.to_json(&d)), "expected": expected.to_json(&d) })],
    ));

    let (rep, assoc) = prv_check(&d, &lam, &mu, &MonoidWord::identity(), &MonoidWord::new(vec![i]), depth, &gopts)?;
    let k = assoc.derived_index(i, 1)?;
    let pairing = rep.nu_bar.pairing(assoc.derived(), k);
    let dec = tensor_decompose(&d, &lam, &mu, depth, false, &gopts)?;
    checks.push(Check::new(
        "non-example-nu-bar-pairing",
        pairing == -one.clone() && !rep.nu_bar_dominant && rep.nu == nu && !dec.components.contains_key(&nu),
        vec![json!({ "pairing": pairing.to_string(), "note": rep.note, "nu_occurs": dec.components.contains_key(&nu) })],
    ));
    Ok(checks)
}

fn reference_examples(options: &SuiteOptions) -> Result<Vec<Check>> {
    let d = fixture("ex222")?;
    let labels = ["3", "1", "3", "3", "1", "2", "3", "1", "3", "2", "1", "2"];
    let app: Vec<usize> = labels.iter().rev().map(|l| d.index_of(l)).collect::<Result<_>>()?;
    let got = ordered_index(&d, &app).display(&d);
    let expected = "((3,5),(1,1),(3,4),(3,3),(1,1),(2,3),(3,2),(1,1),(3,1),(2,2),(1,1),(2,1))";
    let mut checks = vec![Check::new(
        "ordered-index-example",
        got == expected,
        vec![json!({ "got": got, "expected": expected })],
    )];
    checks.extend(non_example_checks(options)?);
    Ok(checks)
}

fn prv_suite(options: &SuiteOptions) -> Result<Vec<Check>> {
    let d = fixture("a2")?;
    let depth = options.depth_or(6);
    let gopts = options.generate();
    let elements: Vec<MonoidWord> = group_elements(&d, 8, 100)?.into_iter().map(MonoidWord::new).collect();
    let mut checks = Vec::new();
    for (l, m) in [("lam10", "lam01"), ("lam11", "lam10"), ("lam11", "lam11"), ("lam21", "lam01")] {
        let lam = named(&d, l)?;
        let mu = named(&d, m)?;
        let dec = tensor_decompose(&d, &lam, &mu, depth, false, &gopts)?;
        let mut seen = BTreeSet::new();
        let mut tested = 0;
        let mut failures = Vec::new();
        let mut skipped = Vec::new();
        for w1 in &elements {
            for w2 in &elements {
                let nu = &w1.act(&d, &lam) + &w2.act(&d, &mu);
                if !nu.is_dominant(&d) || !seen.insert(nu.clone()) {
                    continue;
                }
                let (rep, _) = prv_check(&d, &lam, &mu, w1, w2, depth, &gopts)?;
                match rep.occurs {
                    Some(true) => tested += 1,
                    Some(false) => failures.push(json!({ "w1": w1.display(&d), "w2": w2.display(&d), "nu": nu.display(&d) })),
                    None => skipped.push(json!({ "nu": nu.display(&d), "note": rep.note })),
                }
                debug_assert_eq!(rep.occurs == Some(true), dec.components.contains_key(&nu));
            }
        }
        let name = format!("prv-sufficient-condition [a2: {l} x {m}, depth {depth}]");
        let mut witnesses = vec![json!({ "distinct_dominant_nu": seen.len(), "confirmed": tested })];
        witnesses.extend(failures.iter().cloned());
        if !skipped.is_empty() && failures.is_empty() {
            witnesses.extend(skipped);
            checks.push(Check { check: name, status: CheckStatus::Skipped, witnesses });
        } else {
            checks.push(Check::new(name, failures.is_empty() && tested > 0, witnesses));
        }
    }
    // the non-example
    let mixed = fixture("mixed")?;
    let (rep, _) = prv_check(
        &mixed,
        &named(&mixed, "lam10")?,
        &named(&mixed, "lam01")?,
        &MonoidWord::identity(),
        &MonoidWord::new(vec![1]),
        options.depth_or(4),
        &gopts,
    )?;
    checks.push(Check::new(
        "prv-non-example [mixed: lam10 x lam01, r2 on the right]",
        !rep.nu_bar_dominant && rep.occurs == Some(false),
        vec![json!({ "note": rep.note, "nu": rep.nu.display(&mixed) })],
    ));
    Ok(checks)
}

/// Admissible words used for the extremal-weight checks.
pub fn extremal_samples() -> Result<Vec<(String, String, MonoidWord)>> {
    let mut out = Vec::new();
    for (fx, weight, words) in demazure_fixtures()? {
        let d = fixture(&fx)?;
        let lam = named(&d, &weight)?;
        for w in words {
            if crate::monoid::satisfies_condition_4(&d, &w, &lam) && crate::monoid::satisfies_condition_5(&d, &w, &lam) {
                out.push((fx.clone(), weight.clone(), w));
            }
        }
    }
    // every admissible word of length at most 4 on the mixed datum
    let mixed = fixture("mixed")?;
    for weight in ["lam10", "lam11", "lam02"] {
        let lam = named(&mixed, weight)?;
        let mut words: Vec<Vec<usize>> = vec![Vec::new()];
        for _ in 0..4 {
            words = words
                .iter()
                .flat_map(|w| (0..mixed.rank()).map(move |i| [w.clone(), vec![i]].concat()))
                .collect();
            for w in &words {
                let w = MonoidWord::new(w.clone());
                if crate::monoid::satisfies_condition_4(&mixed, &w, &lam)
                    && crate::monoid::satisfies_condition_5(&mixed, &w, &lam)
                {
                    out.push(("mixed".to_string(), weight.to_string(), w));
                }
            }
        }
    }
    Ok(out)
}

fn extremal_suite(options: &SuiteOptions) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let gopts = options.generate();
    let samples = extremal_samples()?;
    for (fx, weight, w) in &samples {
        let d = fixture(fx)?;
        let lam = named(&d, weight)?;
        let label = format!("extremal-weight-singleton [{fx}: {weight}, {}]", w.display(&d));
        let admissible = crate::monoid::satisfies_condition_4(&d, w, &lam)
            && crate::monoid::satisfies_condition_5(&d, w, &lam);
        if !admissible {
            checks.push(Check::new(label, false, vec![json!("word is not admissible")]));
            continue;
        }
        let ext = w.act(&d, &lam);
        let depth = ext.depth().to_integer().try_into().unwrap_or(0usize);
        let g = generate(&d, &lam, depth, &gopts)?;
        let n = g.weight_space(&ext).len();
        checks.push(Check::new(label, n == 1, vec![json!({ "weight": ext.display(&d), "nodes": n })]));
    }
    checks.push(Check::new(
        "extremal-sample-size",
        samples.len() >= 20,
        vec![json!({ "samples": samples.len() })],
    ));
    Ok(checks)
}

fn crystal_invariants(fx: &str, weight: &str, depth: usize, options: &SuiteOptions) -> Result<Vec<Check>> {
    let d = fixture(fx)?;
    let lam = named(&d, weight)?;
    let g = generate(&d, &lam, depth, &options.generate())?;
    let tag = format!("[{fx}: {weight}, depth {depth}]");
    let mut inverse = Vec::new();
    let mut strings = Vec::new();
    for n in 0..g.len() {
        let p = g.node(n);
        for i in 0..d.rank() {
            if g.node_depth(n) < depth {
                if let Some(q) = p.f_op(&d, i)? {
                    if q.e_op_cutoff(&d, i, &g)?.as_ref() != Some(p) {
                        inverse.push(json!({ "node": n, "index": d.label(i), "op": "e after f" }));
                    }
                }
            }
            if let Some(q) = p.e_op_cutoff(&d, i, &g)? {
                if q.f_op(&d, i)?.as_ref() != Some(p) {
                    inverse.push(json!({ "node": n, "index": d.label(i), "op": "f after e" }));
                }
            }
            if d.is_real(i) {
                let mut eps = 0;
                let mut cur = p.clone();
                while let Some(q) = cur.e_op_real(&d, i)? {
                    eps += 1;
                    cur = q;
                }
                let mut phi = 0;
                let mut cur = p.clone();
                while let Some(q) = cur.f_op(&d, i)? {
                    phi += 1;
                    cur = q;
                }
                let pairing = p.wt().pairing(&d, i).to_integer();
                if eps != p.eps(&d, i) || Some(phi) != p.phi(&d, i) || num_bigint::BigInt::from(phi - eps) != pairing {
                    strings.push(json!({ "node": n, "index": d.label(i), "eps": eps, "phi": phi }));
                }
            }
        }
    }
    let graded: Vec<Value> = g
        .edges()
        .iter()
        .filter(|&&(a, i, b)| g.node(b).wt() != g.node(a).wt().minus_root(i, &Rational::from_integer(1.into())))
        .map(|&(a, i, b)| json!([a, d.label(i), b]))
        .collect();

    let assoc = AssociatedDatum::with_uniform_copies(Arc::clone(&d), depth + 1)?;
    let emb = Embedding::of_graph(&g, &assoc)?;
    let mut bookkeeping = Vec::new();
    for (n, e) in emb.paths.iter().enumerate() {
        if collapse_path(&assoc, e) != *g.node(n) || assoc.collapse_weight(&e.wt()) != g.node(n).wt() {
            bookkeeping.push(json!({ "node": n }));
        }
    }
    let nodes = json!({ "nodes": g.len(), "edges": g.edges().len() });
    Ok(vec![
        Check::new(format!("partial-inverse {tag}"), inverse.is_empty(), [vec![nodes.clone()], inverse].concat()),
        Check::new(format!("string-lengths {tag}"), strings.is_empty(), [vec![nodes.clone()], strings].concat()),
        Check::new(format!("edge-grading {tag}"), graded.is_empty(), [vec![nodes.clone()], graded].concat()),
        Check::new(
            format!("embedding-injective {tag}"),
            emb.is_injective() && emb.inconsistent.is_empty(),
            vec![nodes.clone(), json!({ "inconsistent": emb.inconsistent })],
        ),
        Check::new(format!("embedding-collapse {tag}"), bookkeeping.is_empty(), [vec![nodes], bookkeeping].concat()),
    ])
}

/// A random finite combination of weights `λ_b − Σ c_i α_i` with small
/// coefficients.
pub fn random_character(d: &BorcherdsCartanDatum, rng: &mut ChaCha8Rng) -> CharacterElement<Rational> {
    let terms = rng.gen_range(1..=5);
    let nb = d.weight_names().len();
    let mut out = Vec::new();
    for _ in 0..terms {
        let mut w = W::base_weight(rng.gen_range(0..nb));
        for i in 0..d.rank() {
            let c = rng.gen_range(-3i64..=3);
            w = w.minus_root(i, &Rational::from_integer(c.into()));
        }
        out.push((w, rng.gen_range(-3i64..=3)));
    }
    CharacterElement::from_terms(out, None)
}

fn idempotence_check(samples: usize) -> Result<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut failures = Vec::new();
    let fixtures: Vec<Arc<BorcherdsCartanDatum>> =
        ["a2", "b2", "mixed"].iter().map(|f| fixture(f)).collect::<Result<_>>()?;
    for s in 0..samples {
        let d = &fixtures[s % fixtures.len()];
        let reals = d.real_indices();
        let i = reals[rng.gen_range(0..reals.len())];
        let ch = random_character(d, &mut rng);
        let once = demazure_real(d, &ch, i)?;
        let twice = demazure_real(d, &once, i)?;
        if once != twice {
            failures.push(json!({ "sample": s, "input": ch.display(d), "index": d.label(i) }));
        }
    }
    let mut witnesses = vec![json!({ "samples": samples })];
    witnesses.extend(failures.iter().cloned());
    Ok(Check::new("demazure-real-idempotent", failures.is_empty(), witnesses))
}

fn lemma_checks() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let mut forms = normal_forms()?;
    for (fx, weight, w) in extremal_samples()? {
        let d = fixture(&fx)?;
        let lam = named(&d, &weight)?;
        let form = to_minimal_dominant_reduced(&d, &w, &lam, DEFAULT_REWRITE_BUDGET)?;
        forms.push((d, lam, w, form));
    }
    for (d, lam, w, form) in forms {
        let report = check_lemma_422(&d, &form, &lam);
        let witnesses = report
            .results
            .iter()
            .map(|r| {
                let status = match r.status {
                    PropertyStatus::Pass => "pass",
                    PropertyStatus::Fail => "fail",
                    PropertyStatus::Vacuous => "vacuous",
                };
                json!({ "property": r.property.to_string(), "status": status, "witnesses": r.witnesses })
            })
            .collect();
        checks.push(Check::new(
            format!("normal-form-properties [{}: {}, {} -> {}]", fixture_name(&d), lam.display(&d), w.display(&d), form.display(&d)),
            report.all_hold(),
            witnesses,
        ));
    }
    Ok(checks)
}

fn invariant_suite(options: &SuiteOptions) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for (fx, weight, depth) in
        [("a1", "lam2", 5), ("a2", "lam11", 5), ("b2", "lam11", 5), ("mixed", "lam01", 5), ("mixed", "lam11", 4), ("imag1", "lam1", 5)]
    {
        checks.extend(crystal_invariants(fx, weight, options.depth_or(depth).min(depth), options)?);
    }
    checks.push(idempotence_check(200)?);
    checks.extend(lemma_checks()?);
    Ok(checks)
}

fn shadow_suite(options: &SuiteOptions) -> Result<Vec<Check>> {
    let d = fixture("mixed")?;
    let lam = named(&d, "lam01")?;
    let mut checks = Vec::new();
    for text in ["r1 r2^2", "r2^2", "r1 r2"] {
        let form = to_minimal_dominant_reduced(&d, &word(&d, text)?, &lam, DEFAULT_REWRITE_BUDGET)?;
        let rep = shadow_check(&d, &lam, &form, &options.limits())?;
        for c in rep.checks {
            checks.push(tag(c, "mixed", text));
        }
    }
    Ok(checks)
}
