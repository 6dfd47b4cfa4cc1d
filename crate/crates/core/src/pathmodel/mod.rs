//! Piecewise-linear paths with exact breakpoints and the root operators
//! `e_i`, `f_i` acting on them.

mod gls;

pub use gls::{a_chain_exists, orbit_by_depth, validate_gls, ChainBounds, GlsView, OrbitPoset};

use std::collections::{BTreeSet, HashSet};

use serde_json::{json, Value};

use crate::cartan::BorcherdsCartanDatum;
use crate::error::{Error, Result};
use crate::monoid::{reflect, reflect_inverse, MonoidWord};
use crate::scalar::Scalar;
use crate::weight::{parse_scalar, Weight};

/// A path `π: [0,1] → h*` with `π(0) = 0`, given by its segments
/// `(direction, duration)`. Always kept in canonical form: positive
/// durations summing to one, adjacent directions distinct.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path<S> {
    segments: Vec<(Weight<S>, S)>,
}

/// Sampled values of `H_i^π(t) = ⟨α_i^∨, π(t)⟩` at the vertices of a path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HProfile<S> {
    pub times: Vec<S>,
    pub values: Vec<S>,
}

impl<S: Scalar> HProfile<S> {
    pub fn min(&self) -> S {
        self.values.iter().min().cloned().unwrap_or_else(S::zero)
    }

    /// Least integer value taken by `H`.
    pub fn min_integer_level(&self) -> i64 {
        self.min().ceil_i64()
    }

    pub fn end(&self) -> S {
        self.values.last().cloned().unwrap_or_else(S::zero)
    }

    pub fn at(&self, t: &S) -> S {
        for k in 0..self.times.len() - 1 {
            if *t <= self.times[k + 1] {
                return self.interp(k, t);
            }
        }
        self.end()
    }

    fn interp(&self, k: usize, t: &S) -> S {
        let (t0, t1) = (&self.times[k], &self.times[k + 1]);
        let (h0, h1) = (&self.values[k], &self.values[k + 1]);
        h0.clone() + (h1.clone() - h0.clone()) * (t.clone() - t0.clone()) / (t1.clone() - t0.clone())
    }

    // all points of [lo, hi] where H = level, as closed intervals clipped to
    // [lo, hi]; a flat piece at the level yields its whole range
    fn level_set(&self, level: &S, lo: &S, hi: &S) -> Vec<(S, S)> {
        let mut out = Vec::new();
        for k in 0..self.times.len() - 1 {
            let (t0, t1) = (&self.times[k], &self.times[k + 1]);
            if t1 < lo || t0 > hi {
                continue;
            }
            let a = if t0 < lo { lo.clone() } else { t0.clone() };
            let b = if t1 > hi { hi.clone() } else { t1.clone() };
            let (ha, hb) = (self.interp(k, &a), self.interp(k, &b));
            if ha == *level && hb == *level {
                out.push((a, b));
            } else if (ha <= *level && *level <= hb) || (hb <= *level && *level <= ha) {
                let t = a.clone() + (level.clone() - ha.clone()) * (b.clone() - a.clone()) / (hb - ha);
                out.push((t.clone(), t));
            }
        }
        out
    }

    /// Smallest `t ∈ [lo, hi]` with `H(t) = level`.
    pub fn first_at(&self, level: &S, lo: &S, hi: &S) -> Option<S> {
        self.level_set(level, lo, hi).into_iter().map(|(a, _)| a).min()
    }

    /// Largest `t ∈ [lo, hi]` with `H(t) = level`.
    pub fn last_at(&self, level: &S, lo: &S, hi: &S) -> Option<S> {
        self.level_set(level, lo, hi).into_iter().map(|(_, b)| b).max()
    }

    /// Maximum and minimum of `H` on `[lo, hi]`.
    pub fn range_on(&self, lo: &S, hi: &S) -> (S, S) {
        let mut vals = vec![self.at(lo), self.at(hi)];
        for (t, h) in self.times.iter().zip(&self.values) {
            if t > lo && t < hi {
                vals.push(h.clone());
            }
        }
        (vals.iter().max().unwrap().clone(), vals.iter().min().unwrap().clone())
    }
}

/// Membership oracle used by the cutoff of imaginary raising operators.
pub trait PathSet<S> {
    fn contains_path(&self, path: &Path<S>) -> bool;
}

impl<S: Scalar> PathSet<S> for HashSet<Path<S>> {
    fn contains_path(&self, path: &Path<S>) -> bool {
        self.contains(path)
    }
}

impl<S: Scalar> PathSet<S> for BTreeSet<Path<S>> {
    fn contains_path(&self, path: &Path<S>) -> bool {
        self.contains(path)
    }
}

impl<S: Scalar> Path<S> {
    /// Builds a path from arbitrary segments; zero durations are dropped and
    /// equal neighbours merged.
    pub fn new(segments: Vec<(Weight<S>, S)>) -> Result<Self> {
        let mut total = S::zero();
        for (_, d) in &segments {
            if d.is_negative() {
                return Err(Error::Invalid("negative segment duration".into()));
            }
            total = total + d.clone();
        }
        if !total.is_one() {
            return Err(Error::Invalid(format!("segment durations sum to {total}, expected 1")));
        }
        Ok(Self::canonical(segments))
    }

    fn canonical(segments: Vec<(Weight<S>, S)>) -> Self {
        let mut out: Vec<(Weight<S>, S)> = Vec::with_capacity(segments.len());
        for (w, d) in segments {
            if d.is_zero() {
                continue;
            }
            match out.last_mut() {
                Some((lw, ld)) if *lw == w => *ld = ld.clone() + d,
                _ => out.push((w, d)),
            }
        }
        Self { segments: out }
    }

    /// The straight line `π_λ(t) = tλ`.
    pub fn straight(lambda: &Weight<S>) -> Self {
        Self { segments: vec![(lambda.clone(), S::one())] }
    }

    pub fn segments(&self) -> &[(Weight<S>, S)] {
        &self.segments
    }

    /// `π(1)`.
    pub fn wt(&self) -> Weight<S> {
        self.segments.iter().fold(Weight::zero(), |acc, (w, d)| &acc + &w.scale(d))
    }

    /// `π(t)`.
    pub fn at(&self, t: &S) -> Weight<S> {
        let mut acc = Weight::zero();
        let mut start = S::zero();
        for (w, d) in &self.segments {
            let end = start.clone() + d.clone();
            if *t >= end {
                acc = &acc + &w.scale(d);
            } else {
                if *t > start {
                    acc = &acc + &w.scale(&(t.clone() - start));
                }
                break;
            }
            start = end;
        }
        acc
    }

    /// Cumulative breakpoints `0 = t_0 < ⋯ < t_n = 1`.
    pub fn breakpoints(&self) -> Vec<S> {
        let mut ts = vec![S::zero()];
        for (_, d) in &self.segments {
            let last = ts.last().unwrap().clone();
            ts.push(last + d.clone());
        }
        ts
    }

    pub fn h_profile(&self, datum: &BorcherdsCartanDatum, i: usize) -> HProfile<S> {
        let mut values = vec![S::zero()];
        for (w, d) in &self.segments {
            let last = values.last().unwrap().clone();
            values.push(last + w.pairing(datum, i) * d.clone());
        }
        HProfile { times: self.breakpoints(), values }
    }

    pub fn min_integer_level(&self, datum: &BorcherdsCartanDatum, i: usize) -> i64 {
        self.h_profile(datum, i).min_integer_level()
    }

    /// Segments split so that `cuts` are breakpoints.
    fn split_at(&self, cuts: &[S]) -> Vec<(S, S, Weight<S>)> {
        let mut out = Vec::new();
        let mut start = S::zero();
        for (w, d) in &self.segments {
            let end = start.clone() + d.clone();
            let mut a = start.clone();
            for c in cuts {
                if *c > a && *c < end {
                    out.push((a.clone(), c.clone(), w.clone()));
                    a = c.clone();
                }
            }
            out.push((a, end.clone(), w.clone()));
            start = end;
        }
        out
    }

    /// Applies the linear map `g` to the directions on `[lo, hi]`.
    fn transform_on(&self, lo: &S, hi: &S, g: impl Fn(&Weight<S>) -> Weight<S>) -> Self {
        let pieces = self.split_at(&[lo.clone(), hi.clone()]);
        let segs = pieces
            .into_iter()
            .map(|(a, b, w)| {
                let inside = a >= *lo && b <= *hi;
                (if inside { g(&w) } else { w }, b - a)
            })
            .collect();
        Self::canonical(segs)
    }

    /// Lowering operator `f_i`. `Ok(None)` encodes the zero result.
    pub fn f_op(&self, datum: &BorcherdsCartanDatum, i: usize) -> Result<Option<Self>> {
        let h = self.h_profile(datum, i);
        let m = h.min_integer_level();
        let (zero, one) = (S::zero(), S::one());
        let level = S::from_i64(m);
        let f_plus = h.last_at(&level, &zero, &one).expect("integer minimum level is attained");
        if f_plus == one {
            return Ok(None);
        }
        let f_minus = h
            .first_at(&S::from_i64(m + 1), &f_plus, &one)
            .ok_or_else(|| Error::OperatorUndefined { index: datum.label(i).to_string(), level: m + 1 })?;
        Ok(Some(self.transform_on(&f_plus, &f_minus, |w| reflect(datum, i, w))))
    }

    /// Raising operator `e_i` for real `i`.
    pub fn e_op_real(&self, datum: &BorcherdsCartanDatum, i: usize) -> Result<Option<Self>> {
        if !datum.is_real(i) {
            return Err(Error::NotReal(datum.label(i).to_string()));
        }
        let h = self.h_profile(datum, i);
        let m = h.min_integer_level();
        let (zero, one) = (S::zero(), S::one());
        let e_plus = h.first_at(&S::from_i64(m), &zero, &one).expect("integer minimum level is attained");
        if e_plus.is_zero() {
            return Ok(None);
        }
        let e_minus = h
            .last_at(&S::from_i64(m + 1), &zero, &e_plus)
            .expect("H(0) = 0 ≥ m + 1 whenever the minimum is reached after 0");
        Ok(Some(self.transform_on(&e_minus, &e_plus, |w| reflect(datum, i, w))))
    }

    /// Raising operator `e_i` for imaginary `i` on all paths, before the
    /// cutoff to a crystal.
    pub fn e_op_imaginary_raw(&self, datum: &BorcherdsCartanDatum, i: usize) -> Result<Option<Self>> {
        if datum.is_real(i) {
            return Err(Error::NotImaginary(datum.label(i).to_string()));
        }
        let h = self.h_profile(datum, i);
        let m = h.min_integer_level();
        let a_ii = datum.a(i, i);
        let one = S::one();
        let e_minus = h.last_at(&S::from_i64(m), &S::zero(), &one).expect("integer minimum level is attained");
        if e_minus == one {
            return Ok(None);
        }
        let threshold = S::from_i64(m + 1 - a_ii);
        let (max_after, _) = h.range_on(&e_minus, &one);
        if max_after < threshold {
            return Ok(None);
        }
        let e_plus = h.first_at(&threshold, &e_minus, &one).expect("continuity");
        let (_, min_tail) = h.range_on(&e_plus, &one);
        if min_tail <= S::from_i64(m - a_ii) {
            return Ok(None);
        }
        Ok(Some(self.transform_on(&e_minus, &e_plus, |w| reflect_inverse(datum, i, w))))
    }

    /// `e_i` on a crystal: real indices use the plain operator, imaginary
    /// indices the raw operator followed by a membership cutoff.
    pub fn e_op_cutoff<P: PathSet<S> + ?Sized>(
        &self,
        datum: &BorcherdsCartanDatum,
        i: usize,
        crystal: &P,
    ) -> Result<Option<Self>> {
        if !crystal.contains_path(self) {
            return Err(Error::NotInCrystal);
        }
        if datum.is_real(i) {
            return self.e_op_real(datum, i);
        }
        Ok(self.e_op_imaginary_raw(datum, i)?.filter(|p| crystal.contains_path(p)))
    }

    /// `ε_i`: `−m_i` for real `i`, zero for imaginary `i`.
    pub fn eps(&self, datum: &BorcherdsCartanDatum, i: usize) -> i64 {
        if datum.is_real(i) {
            -self.min_integer_level(datum, i)
        } else {
            0
        }
    }

    /// `φ_i = ε_i + ⟨α_i^∨, wt⟩`. `None` if the pairing is not an integer.
    pub fn phi(&self, datum: &BorcherdsCartanDatum, i: usize) -> Option<i64> {
        let p = self.wt().pairing(datum, i).to_i64_exact()?;
        Some(self.eps(datum, i) + p)
    }

    /// `f_i^n`, or `None` as soon as a step gives zero.
    pub fn f_pow(&self, datum: &BorcherdsCartanDatum, i: usize, n: usize) -> Result<Option<Self>> {
        let mut p = self.clone();
        for _ in 0..n {
            match p.f_op(datum, i)? {
                Some(q) => p = q,
                None => return Ok(None),
            }
        }
        Ok(Some(p))
    }

    /// The action `S_v` of a real word: for each letter in application
    /// order apply `f_j^n` (or `e_j^{-n}`) with `n = ⟨α_j^∨, wt⟩`.
    pub fn s_action(&self, datum: &BorcherdsCartanDatum, word: &MonoidWord) -> Result<Self> {
        let mut p = self.clone();
        for j in word.application_order() {
            if !datum.is_real(j) {
                return Err(Error::NotReal(datum.label(j).to_string()));
            }
            let n = p
                .wt()
                .pairing(datum, j)
                .to_i64_exact()
                .ok_or_else(|| Error::Invalid("non-integral pairing in S_v".into()))?;
            for _ in 0..n.unsigned_abs() {
                let next = if n > 0 { p.f_op(datum, j)? } else { p.e_op_real(datum, j)? };
                p = next.ok_or_else(|| {
                    Error::Invalid(format!("S_v left the crystal at letter r{}", datum.label(j)))
                })?;
            }
        }
        Ok(p)
    }

    /// Concatenation `π_1 * π_2`, each factor run at double speed.
    pub fn concat(&self, other: &Self) -> Self {
        let half = S::from_ratio(1, 2);
        let two = S::from_i64(2);
        let segs = self
            .segments
            .iter()
            .map(|(w, d)| (w.scale(&two), d.clone() * half.clone()))
            .chain(other.segments.iter().map(|(w, d)| (w.scale(&two), d.clone() * half.clone())))
            .collect();
        Self::canonical(segs)
    }

    /// Height of the root part of `λ − wt(π)` for a path of shape `λ`.
    pub fn depth(&self) -> S {
        self.wt().depth()
    }

    pub fn to_json(&self, datum: &BorcherdsCartanDatum) -> Value {
        Value::Array(
            self.segments
                .iter()
                .map(|(w, d)| json!({ "direction": w.to_json(datum), "duration": d.to_string() }))
                .collect(),
        )
    }

    pub fn from_json(datum: &BorcherdsCartanDatum, value: &Value) -> Result<Self> {
        let arr = value.as_array().ok_or_else(|| Error::Json("path must be an array".into()))?;
        let mut segs = Vec::with_capacity(arr.len());
        for seg in arr {
            let dir = seg.get("direction").ok_or_else(|| Error::Json("segment lacks direction".into()))?;
            let dur = seg.get("duration").ok_or_else(|| Error::Json("segment lacks duration".into()))?;
            segs.push((Weight::from_json(datum, dir)?, parse_scalar::<S>(dur)?));
        }
        Self::new(segs)
    }
}
