use std::collections::HashMap;

use serde::Serialize;

use super::{decompose, p, Method, ScaledTriangle, Triangle};
use crate::chordring::RingElem;

/// Chord indices `k >= 1` whose product is `c`, if `c` lies in the monoid
/// generated by the chords.
pub fn monoid_factor(c: &RingElem) -> Option<Vec<usize>> {
    let ring = c.ring();
    if *c == ring.one() {
        return Some(Vec::new());
    }
    let target = c.eval_f64();
    let m = (std::f64::consts::PI / (ring.point() / 2.0).acos()).round() as usize;
    let chords: Vec<(usize, RingElem, f64)> = (1..=(m.saturating_sub(2)) / 2)
        .map(|k| {
            let e = p(ring, k);
            let v = e.eval_f64();
            (k, e, v)
        })
        .filter(|(_, _, v)| *v > 1.0 + 1e-12)
        .collect();
    fn go(
        chords: &[(usize, RingElem, f64)],
        from: usize,
        acc: &RingElem,
        val: f64,
        target: f64,
        c: &RingElem,
        word: &mut Vec<usize>,
    ) -> bool {
        if (val - target).abs() < 1e-9 * target && acc == c {
            return true;
        }
        for i in from..chords.len() {
            let (k, e, v) = &chords[i];
            let nv = val * v;
            if nv > target * (1.0 + 1e-9) {
                continue;
            }
            word.push(*k);
            if go(chords, i, &(acc * e), nv, target, c, word) {
                return true;
            }
            word.pop();
        }
        false
    }
    let mut word = Vec::new();
    go(&chords, 0, &ring.one(), 1.0, target, c, &mut word).then_some(word)
}

#[derive(Clone, Debug, Serialize)]
pub enum Derivation {
    Leaf(String),
    Node {
        target: String,
        method: Method,
        /// Chord factors scaling every part.
        extra: Vec<usize>,
        parts: Vec<Derivation>,
    },
}

impl Derivation {
    pub fn root_method(&self) -> Option<Method> {
        match self {
            Derivation::Leaf(_) => None,
            Derivation::Node { method, .. } => Some(*method),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Derivation::Leaf(_) => 1,
            Derivation::Node { parts, .. } => 1 + parts.iter().map(Derivation::size).sum::<usize>(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub enum Reach {
    Derived(Derivation),
    /// `exhausted` means no branch was cut by the budget, so the target is
    /// unreachable outright.
    Unreachable { exhausted: bool },
}

fn candidates(t: &ScaledTriangle, exclude: &[&str]) -> Vec<Method> {
    let a = t.base.angles();
    let min = *a.iter().min().expect("three angles");
    let mut out = Vec::new();
    for rotation in 0..3 {
        let r = t.base.rotated(rotation);
        out.extend((1..r[2]).map(|t| Method::Pair { rotation, t }));
        if min >= 3 {
            out.push(Method::Nine { rotation });
        }
        out.extend((1..min).filter(|&t| t != 2).map(|t| Method::Pt { rotation, t }));
    }
    out.extend((1..min).map(|t| Method::Inscribed { t }));
    let bound = t.scale.eval_f64().floor() as usize;
    out.extend((2..=bound).map(|n| Method::Square { rotation: 0, n }));
    out.retain(|mth| !exclude.contains(&mth.name()));
    out
}

type Key = ([usize; 3], Vec<i64>);

struct Search<'a> {
    generators: &'a [Triangle],
    exclude: &'a [&'a str],
    found: HashMap<Key, Derivation>,
    failed: HashMap<Key, usize>,
    cut: bool,
}

impl Search<'_> {
    fn go(&mut self, t: &ScaledTriangle, budget: usize) -> Option<Derivation> {
        let key = (t.base.angles(), t.scale.coords().to_vec());
        if let Some(d) = self.found.get(&key) {
            return Some(d.clone());
        }
        if self.failed.get(&key).is_some_and(|&b| b >= budget) {
            return None;
        }
        if t.scale == t.ring().one() && self.generators.contains(&t.base) {
            let d = Derivation::Leaf(t.to_string());
            self.found.insert(key, d.clone());
            return Some(d);
        }
        let methods = candidates(t, self.exclude);
        if budget == 0 {
            if !methods.is_empty() {
                self.cut = true;
            }
            return None;
        }
        for method in methods {
            let Ok(d) = decompose(t, method) else { continue };
            let Some(extra) = monoid_factor(&d.extra) else { continue };
            let mut parts = Vec::with_capacity(d.parts.len());
            let mut ok = true;
            for q in &d.parts {
                match self.go(&q.scaled(d.m), budget - 1) {
                    Some(sub) => parts.push(sub),
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                let der = Derivation::Node {
                    target: t.to_string(),
                    method,
                    extra,
                    parts,
                };
                self.found.insert(key, der.clone());
                return Some(der);
            }
        }
        let entry = self.failed.entry(key).or_insert(0);
        *entry = (*entry).max(budget);
        None
    }
}

/// Search for a derivation of `target` from unscaled `generators` by the
/// decomposition methods, with part scales in the chord monoid. `budget`
/// bounds the tree depth; methods named in `exclude` are skipped.
pub fn closure_reach(target: &ScaledTriangle, generators: &[Triangle], budget: usize, exclude: &[&str]) -> Reach {
    let mut s = Search {
        generators,
        exclude,
        found: HashMap::new(),
        failed: HashMap::new(),
        cut: false,
    };
    match s.go(target, budget) {
        Some(d) => Reach::Derived(d),
        None => Reach::Unreachable { exhausted: !s.cut },
    }
}

/// All triangles of the m-gon in both orientations.
pub fn all_triangles(m: usize) -> Vec<Triangle> {
    let mut out = Vec::new();
    for a in 1..m {
        for b in 1..m - a {
            let c = m - a - b;
            if let Ok(t) = Triangle::new(m, [a, b, c]) {
                if !out.contains(&t) {
                    out.push(t);
                }
            }
        }
    }
    out.sort();
    out
}
