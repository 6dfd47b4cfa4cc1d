//! Weights as exact combinations of named base weights and simple roots.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::{Add, Neg, Sub};

use serde_json::{json, Map, Value};

use crate::cartan::BorcherdsCartanDatum;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A weight `Σ_b x_b λ_b − Σ_i c_i α_i`, where `λ_b` are the datum's named
/// base weights. Both coefficient maps are normalized (no stored zeros), so
/// derived equality is structural equality.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Weight<S> {
    base: BTreeMap<usize, S>,
    roots: BTreeMap<usize, S>,
}

fn insert_add<S: Scalar>(map: &mut BTreeMap<usize, S>, key: usize, value: S) {
    if value.is_zero() {
        return;
    }
    let sum = match map.remove(&key) {
        Some(old) => old + value,
        None => value,
    };
    if !sum.is_zero() {
        map.insert(key, sum);
    }
}

impl<S: Scalar> Weight<S> {
    pub fn zero() -> Self {
        Self { base: BTreeMap::new(), roots: BTreeMap::new() }
    }

    pub fn from_parts(base: BTreeMap<usize, S>, roots: BTreeMap<usize, S>) -> Self {
        Self {
            base: base.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
            roots: roots.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
        }
    }

    /// The base weight with index `b`.
    pub fn base_weight(b: usize) -> Self {
        Self { base: BTreeMap::from([(b, S::one())]), roots: BTreeMap::new() }
    }

    pub fn named(datum: &BorcherdsCartanDatum, name: &str) -> Result<Self> {
        Ok(Self::base_weight(datum.weight_index(name)?))
    }

    /// The simple root `α_i`.
    pub fn simple_root(i: usize) -> Self {
        Self { base: BTreeMap::new(), roots: BTreeMap::from([(i, -S::one())]) }
    }

    /// `−Σ c_i α_i` for a nonnegative integer combination.
    pub fn negative_root(coeffs: &BTreeMap<usize, i64>) -> Self {
        Self::from_parts(
            BTreeMap::new(),
            coeffs.iter().map(|(&i, &c)| (i, S::from_i64(c))).collect(),
        )
    }

    pub fn base(&self) -> &BTreeMap<usize, S> {
        &self.base
    }

    /// Coefficients `c_i` of `−α_i`.
    pub fn roots(&self) -> &BTreeMap<usize, S> {
        &self.roots
    }

    pub fn root_coeff(&self, i: usize) -> S {
        self.roots.get(&i).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.base.is_empty() && self.roots.is_empty()
    }

    pub fn is_base_only(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn has_integral_roots(&self) -> bool {
        self.roots.values().all(|c| c.is_integral())
    }

    /// Height of the root part: `Σ_i c_i`.
    pub fn depth(&self) -> S {
        self.roots.values().fold(S::zero(), |acc, c| acc + c.clone())
    }

    /// The same weight with its root part removed.
    pub fn base_part(&self) -> Self {
        Self { base: self.base.clone(), roots: BTreeMap::new() }
    }

    /// `self − c α_i`.
    pub fn minus_root(&self, i: usize, c: &S) -> Self {
        let mut out = self.clone();
        insert_add(&mut out.roots, i, c.clone());
        out
    }

    pub fn scale(&self, x: &S) -> Self {
        if x.is_zero() {
            return Self::zero();
        }
        Self {
            base: self.base.iter().map(|(&k, v)| (k, v.clone() * x.clone())).collect(),
            roots: self.roots.iter().map(|(&k, v)| (k, v.clone() * x.clone())).collect(),
        }
    }

    /// `⟨α_j^∨, self⟩ = Σ_b x_b ⟨α_j^∨, λ_b⟩ − Σ_i c_i a_ji`.
    pub fn pairing(&self, datum: &BorcherdsCartanDatum, j: usize) -> S {
        let mut acc = S::zero();
        for (&b, x) in &self.base {
            let p = datum.base_pairings(b)[j];
            if p != 0 {
                acc = acc + x.clone() * S::from_i64(p);
            }
        }
        for (&i, c) in &self.roots {
            let a = datum.a(j, i);
            if a != 0 {
                acc = acc - c.clone() * S::from_i64(a);
            }
        }
        acc
    }

    pub fn pairings(&self, datum: &BorcherdsCartanDatum) -> Vec<S> {
        (0..datum.rank()).map(|j| self.pairing(datum, j)).collect()
    }

    /// All pairings are nonnegative integers.
    pub fn is_dominant(&self, datum: &BorcherdsCartanDatum) -> bool {
        self.pairings(datum).iter().all(|p| p.is_integral() && !p.is_negative())
    }

    /// Dominant for the listed coroots only.
    pub fn is_dominant_for(&self, datum: &BorcherdsCartanDatum, indices: &[usize]) -> bool {
        indices.iter().all(|&j| {
            let p = self.pairing(datum, j);
            p.is_integral() && !p.is_negative()
        })
    }

    /// Human readable form, e.g. `lam01 - a[1] - 2*a[2]`.
    pub fn display(&self, datum: &BorcherdsCartanDatum) -> String {
        let mut out = String::new();
        for (&b, x) in &self.base {
            let name = &datum.weight_names()[b];
            if !out.is_empty() {
                out.push_str(if x.is_negative() { " - " } else { " + " });
            } else if x.is_negative() {
                out.push('-');
            }
            let ax = x.abs();
            if ax.is_one() {
                out.push_str(name);
            } else {
                let _ = write!(out, "{ax}*{name}");
            }
        }
        for (&i, c) in &self.roots {
            // stored c means −c α_i
            if !out.is_empty() {
                out.push_str(if c.is_negative() { " + " } else { " - " });
            } else if !c.is_negative() {
                out.push('-');
            }
            let ac = c.abs();
            if ac.is_one() {
                let _ = write!(out, "a[{}]", datum.label(i));
            } else {
                let _ = write!(out, "{ac}*a[{}]", datum.label(i));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// JSON object `{"base": …, "roots": {label: "p/q"}}`. The base is `null`
    /// for no base part, a bare name for a single base weight with
    /// coefficient one, and an object `{name: "p/q"}` otherwise.
    pub fn to_json(&self, datum: &BorcherdsCartanDatum) -> Value {
        let base = if self.base.is_empty() {
            Value::Null
        } else if self.base.len() == 1 && self.base.values().next().unwrap().is_one() {
            Value::String(datum.weight_names()[*self.base.keys().next().unwrap()].clone())
        } else {
            let mut m = Map::new();
            for (&b, x) in &self.base {
                m.insert(datum.weight_names()[b].clone(), Value::String(x.to_string()));
            }
            Value::Object(m)
        };
        let mut roots = Map::new();
        for (&i, c) in &self.roots {
            roots.insert(datum.label(i).to_string(), Value::String(c.to_string()));
        }
        json!({ "base": base, "roots": Value::Object(roots) })
    }

    pub fn from_json(datum: &BorcherdsCartanDatum, value: &Value) -> Result<Self> {
        let obj = value.as_object().ok_or_else(|| Error::Json("weight must be an object".into()))?;
        let mut base = BTreeMap::new();
        match obj.get("base") {
            None | Some(Value::Null) => {}
            Some(Value::String(name)) => {
                base.insert(datum.weight_index(name)?, S::one());
            }
            Some(Value::Object(m)) => {
                for (name, x) in m {
                    base.insert(datum.weight_index(name)?, parse_scalar::<S>(x)?);
                }
            }
            Some(_) => return Err(Error::Json("bad weight base".into())),
        }
        let mut roots = BTreeMap::new();
        if let Some(r) = obj.get("roots") {
            let m = r.as_object().ok_or_else(|| Error::Json("roots must be an object".into()))?;
            for (label, c) in m {
                roots.insert(datum.index_of(label)?, parse_scalar::<S>(c)?);
            }
        }
        Ok(Self::from_parts(base, roots))
    }
}

pub(crate) fn parse_scalar<S: Scalar>(v: &Value) -> Result<S> {
    match v {
        Value::String(s) => s.parse::<S>().map_err(|_| Error::Json(format!("bad rational `{s}`"))),
        Value::Number(n) if n.is_i64() => Ok(S::from_i64(n.as_i64().unwrap())),
        _ => Err(Error::Json(format!("expected a rational string, got {v}"))),
    }
}

impl<S: Scalar> Add for &Weight<S> {
    type Output = Weight<S>;
    fn add(self, rhs: &Weight<S>) -> Weight<S> {
        let mut out = self.clone();
        for (&k, v) in &rhs.base {
            insert_add(&mut out.base, k, v.clone());
        }
        for (&k, v) in &rhs.roots {
            insert_add(&mut out.roots, k, v.clone());
        }
        out
    }
}

impl<S: Scalar> Sub for &Weight<S> {
    type Output = Weight<S>;
    fn sub(self, rhs: &Weight<S>) -> Weight<S> {
        self + &(-rhs)
    }
}

impl<S: Scalar> Neg for &Weight<S> {
    type Output = Weight<S>;
    fn neg(self) -> Weight<S> {
        Weight {
            base: self.base.iter().map(|(&k, v)| (k, -v.clone())).collect(),
            roots: self.roots.iter().map(|(&k, v)| (k, -v.clone())).collect(),
        }
    }
}
