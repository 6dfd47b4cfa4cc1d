//! Truncated path crystals `𝔹(λ) = ℱ π_λ`, their characters, the embedding
//! into the associated model, and the decomposition theorems built on it.

mod character;
mod decompose;
mod embed;

pub use character::CharacterElement;
pub use decompose::{
    ambient_tensor_set, branch, prv_check, tensor_decompose, tensor_highest_weight_nodes, Decomposition,
    PrvReport,
};
pub use embed::{collapse_path, embed_path, embed_word, is_dominant_shifted, reorder_generic, Embedding};

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use serde_json::{json, Value};

use crate::cartan::BorcherdsCartanDatum;
use crate::error::{Error, Result};
use crate::pathmodel::{Path, PathSet};
use crate::scalar::Scalar;
use crate::weight::Weight;

pub const DEFAULT_NODE_BUDGET: usize = 200_000;

/// How many distinct generating words are kept per node.
const WORDS_PER_NODE: usize = 3;

#[derive(Clone, Debug)]
pub struct GenerateOptions {
    /// Lowering operators used; `None` means all indices.
    pub indices: Option<Vec<usize>>,
    pub node_budget: usize,
}

impl Default for GenerateOptions {
    fn default() -> Self {
        Self { indices: None, node_budget: DEFAULT_NODE_BUDGET }
    }
}

/// The part of `ℱ π_λ` within a given depth, with its `f_i`-edges.
#[derive(Clone, Debug)]
pub struct CrystalGraph<S> {
    datum: Arc<BorcherdsCartanDatum>,
    lambda: Weight<S>,
    depth: usize,
    indices: Vec<usize>,
    nodes: Vec<Path<S>>,
    node_depth: Vec<usize>,
    lookup: HashMap<Path<S>, usize>,
    edges: Vec<(usize, usize, usize)>,
    /// Generating words in application order (`words[n][k][0]` acts first).
    words: Vec<Vec<Vec<usize>>>,
}

/// Breadth-first closure of `π_λ` under the lowering operators, level by
/// level up to `depth`. Nodes are ordered by depth, then by serialized form.
pub fn generate<S: Scalar>(
    datum: &Arc<BorcherdsCartanDatum>,
    lambda: &Weight<S>,
    depth: usize,
    options: &GenerateOptions,
) -> Result<CrystalGraph<S>> {
    let indices = options.indices.clone().unwrap_or_else(|| (0..datum.rank()).collect());
    if !lambda.is_dominant_for(datum, &indices) {
        return Err(Error::NotDominant(lambda.display(datum)));
    }
    let root = Path::straight(lambda);
    let mut g = CrystalGraph {
        datum: Arc::clone(datum),
        lambda: lambda.clone(),
        depth,
        indices: indices.clone(),
        nodes: vec![root.clone()],
        node_depth: vec![0],
        lookup: HashMap::from([(root, 0)]),
        edges: Vec::new(),
        words: vec![vec![Vec::new()]],
    };
    let mut level: Vec<usize> = vec![0];
    for d in 1..=depth {
        // path -> (incoming edges, words)
        let mut fresh: HashMap<Path<S>, (Vec<(usize, usize)>, Vec<Vec<usize>>)> = HashMap::new();
        let mut order: Vec<Path<S>> = Vec::new();
        for &n in &level {
            for &i in &indices {
                let Some(q) = g.nodes[n].f_op(datum, i)? else { continue };
                let entry = fresh.entry(q.clone()).or_insert_with(|| {
                    order.push(q.clone());
                    (Vec::new(), Vec::new())
                });
                entry.0.push((n, i));
                for w in &g.words[n] {
                    if entry.1.len() == WORDS_PER_NODE {
                        break;
                    }
                    let mut w2 = w.clone();
                    w2.push(i);
                    if !entry.1.contains(&w2) {
                        entry.1.push(w2);
                    }
                }
            }
        }
        if g.nodes.len() + order.len() > options.node_budget {
            return Err(Error::Budget(format!("crystal exceeds node budget {}", options.node_budget)));
        }
        let mut keyed: Vec<(String, Path<S>)> =
            order.into_iter().map(|p| (p.to_json(datum).to_string(), p)).collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        let mut next = Vec::with_capacity(keyed.len());
        for (_, p) in keyed {
            let (incoming, words) = fresh.remove(&p).expect("collected above");
            let id = g.nodes.len();
            g.lookup.insert(p.clone(), id);
            g.nodes.push(p);
            g.node_depth.push(d);
            g.words.push(words);
            for (from, i) in incoming {
                g.edges.push((from, i, id));
            }
            next.push(id);
        }
        if next.is_empty() {
            break;
        }
        level = next;
    }
    g.edges.sort();
    Ok(g)
}

impl<S: Scalar> CrystalGraph<S> {
    pub fn datum(&self) -> &Arc<BorcherdsCartanDatum> {
        &self.datum
    }

    pub fn lambda(&self) -> &Weight<S> {
        &self.lambda
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn nodes(&self) -> &[Path<S>] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node(&self, n: usize) -> &Path<S> {
        &self.nodes[n]
    }

    pub fn node_depth(&self, n: usize) -> usize {
        self.node_depth[n]
    }

    pub fn find(&self, path: &Path<S>) -> Option<usize> {
        self.lookup.get(path).copied()
    }

    /// `(from, i, to)` with `to = f_i from`.
    pub fn edges(&self) -> &[(usize, usize, usize)] {
        &self.edges
    }

    /// Stored generating words of a node, in application order.
    pub fn generating_words(&self, n: usize) -> &[Vec<usize>] {
        &self.words[n]
    }

    /// Nodes of the given weight.
    pub fn weight_space(&self, mu: &Weight<S>) -> Vec<usize> {
        (0..self.nodes.len()).filter(|&n| self.nodes[n].wt() == *mu).collect()
    }

    /// `Σ e^{wt π}` over the nodes, cut at the generation depth.
    pub fn truncated_character(&self) -> CharacterElement<S> {
        let cutoff = self.lambda.depth() + S::from_i64(self.depth as i64);
        CharacterElement::from_terms(self.nodes.iter().map(|p| (p.wt(), 1)), Some(cutoff))
    }

    pub fn to_json(&self) -> Value {
        let d = &*self.datum;
        let nodes: Vec<Value> = self
            .nodes
            .iter()
            .enumerate()
            .map(|(n, p)| {
                let words: Vec<Value> = self.words[n]
                    .iter()
                    .map(|w| Value::Array(w.iter().rev().map(|&i| Value::String(d.label(i).to_string())).collect()))
                    .collect();
                json!({
                    "id": n,
                    "depth": self.node_depth[n],
                    "weight": p.wt().to_json(d),
                    "path": p.to_json(d),
                    "generating_words": words,
                })
            })
            .collect();
        let edges: Vec<Value> = self
            .edges
            .iter()
            .map(|&(a, i, b)| json!({ "from": a, "index": d.label(i), "to": b }))
            .collect();
        json!({
            "highest_weight": self.lambda.to_json(d),
            "depth": self.depth,
            "nodes": nodes,
            "edges": edges,
        })
    }

    /// Nodes grouped by weight, for text output.
    pub fn weight_multiplicities(&self) -> BTreeMap<Weight<S>, usize> {
        let mut out = BTreeMap::new();
        for p in &self.nodes {
            *out.entry(p.wt()).or_insert(0) += 1;
        }
        out
    }
}

impl<S: Scalar> PathSet<S> for CrystalGraph<S> {
    fn contains_path(&self, path: &Path<S>) -> bool {
        self.lookup.contains_key(path)
    }
}
