//! Module-valued crystals built as tensor products of elementary crystals.
//!
//! An element is a finite sequence of entries, one per tensor position, each
//! entry an `s`-tuple of naturals giving its coordinates in a fixed basis
//! `g_0 = 1, g_1, ..., g_{s-1}` of a rank-`s` module. Position 1 is the
//! rightmost tensor factor. The operators `f_{root,i}` and `e_{root,i}` act
//! through the `i`-th component of the Kashiwara function.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::chordring::{QuotientRing, RingElem};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CrystalError {
    #[error("unknown root label {0:?}")]
    UnknownRoot(String),
    #[error("component {comp} out of range for rank {rank}")]
    BadComponent { comp: usize, rank: usize },
    #[error("insertion at position {0} lies outside the finite sequence")]
    WindowOverflow(usize),
    #[error("root {0} has no position in the sequence")]
    NoPosition(usize),
    #[error("cartan table must be square over {0} roots with 2 on the diagonal")]
    BadCartan(usize),
    #[error("entry at position {pos} has {got} components, expected {rank}")]
    BadEntry { pos: usize, got: usize, rank: usize },
}

/// Rank-`s` module data: the simple roots and, for each ordered pair, the
/// matrix of multiplication by the Cartan value `root^vee(other)`.
#[derive(Clone, Debug)]
pub struct ModuleSpec {
    roots: Vec<String>,
    basis_labels: Vec<String>,
    // cartan[a][b] = coords of a^vee(b)
    cartan_values: Vec<Vec<Vec<i64>>>,
    // act[a][b][i][j]: i-th coordinate of a^vee(b) * g_j
    act: Vec<Vec<Vec<Vec<i64>>>>,
}

impl ModuleSpec {
    /// Integer Cartan matrix, rank-one entries.
    pub fn classical(roots: Vec<String>, cartan: &[Vec<i64>]) -> Result<ModuleSpec, CrystalError> {
        let k = roots.len();
        if cartan.len() != k || cartan.iter().enumerate().any(|(a, row)| row.len() != k || row[a] != 2) {
            return Err(CrystalError::BadCartan(k));
        }
        Ok(ModuleSpec {
            roots,
            basis_labels: vec!["1".into()],
            cartan_values: cartan.iter().map(|row| row.iter().map(|&c| vec![c]).collect()).collect(),
            act: cartan.iter().map(|row| row.iter().map(|&c| vec![vec![c]]).collect()).collect(),
        })
    }

    /// Cartan values in a quotient ring; the ring basis is the module basis.
    pub fn over_ring(
        roots: Vec<String>,
        ring: &Arc<QuotientRing>,
        basis_labels: Vec<String>,
        cartan: &[Vec<RingElem>],
    ) -> Result<ModuleSpec, CrystalError> {
        let k = roots.len();
        let two = ring.int(2);
        if cartan.len() != k || cartan.iter().enumerate().any(|(a, row)| row.len() != k || row[a] != two) {
            return Err(CrystalError::BadCartan(k));
        }
        Ok(ModuleSpec {
            roots,
            basis_labels,
            cartan_values: cartan
                .iter()
                .map(|row| row.iter().map(|c| c.coords().to_vec()).collect())
                .collect(),
            act: cartan
                .iter()
                .map(|row| row.iter().map(|c| c.mul_matrix()).collect())
                .collect(),
        })
    }

    pub fn rank(&self) -> usize {
        self.basis_labels.len()
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn roots(&self) -> &[String] {
        &self.roots
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis_labels
    }

    pub fn cartan_value(&self, a: usize, b: usize) -> &[i64] {
        &self.cartan_values[a][b]
    }

    pub fn root_index(&self, label: &str) -> Result<usize, CrystalError> {
        self.roots
            .iter()
            .position(|r| r == label)
            .ok_or_else(|| CrystalError::UnknownRoot(label.to_string()))
    }

    /// Every `(root, component)` operator label.
    pub fn operators(&self) -> Vec<(usize, usize)> {
        (0..self.num_roots())
            .flat_map(|a| (0..self.rank()).map(move |i| (a, i)))
            .collect()
    }
}

/// The sequence of simple roots attached to tensor positions 1, 2, ...
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JSeq {
    /// `pattern[0]` sits at position 1 and the pattern repeats forever.
    Periodic(Vec<usize>),
    /// A finite word, position 1 first. With `dummies`, one extra position
    /// per root sits above the word; it only ever holds zero entries and
    /// marks where the sequence would continue.
    Finite { word: Vec<usize>, dummies: bool },
}

impl JSeq {
    fn root_at(&self, num_roots: usize, k: usize) -> Option<usize> {
        match self {
            JSeq::Periodic(p) => Some(p[(k - 1) % p.len()]),
            JSeq::Finite { word, dummies } => {
                if k <= word.len() {
                    Some(word[k - 1])
                } else if *dummies && k <= word.len() + num_roots {
                    Some(k - word.len() - 1)
                } else {
                    None
                }
            }
        }
    }

    fn real_len(&self) -> Option<usize> {
        match self {
            JSeq::Periodic(_) => None,
            JSeq::Finite { word, .. } => Some(word.len()),
        }
    }
}

/// Entries by position; trailing all-zero positions are trimmed so equal
/// elements compare equal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CrystalElt {
    entries: Vec<Vec<u32>>,
}

impl CrystalElt {
    /// The highest element `b_infinity`.
    pub fn highest() -> CrystalElt {
        CrystalElt { entries: Vec::new() }
    }

    pub fn from_entries(mut entries: Vec<Vec<u32>>) -> CrystalElt {
        while entries.last().is_some_and(|e| e.iter().all(|&c| c == 0)) {
            entries.pop();
        }
        CrystalElt { entries }
    }

    pub fn entries(&self) -> &[Vec<u32>] {
        &self.entries
    }

    /// Entry at position `k` (1-based), zero if above the support.
    pub fn entry(&self, k: usize, rank: usize) -> Vec<u32> {
        self.entries.get(k - 1).cloned().unwrap_or_else(|| vec![0; rank])
    }

    /// Number of positions up to the last nonzero one.
    pub fn support(&self) -> usize {
        self.entries.len()
    }

    pub fn degree(&self) -> u64 {
        self.entries.iter().flatten().map(|&c| c as u64).sum()
    }

    pub fn is_highest(&self) -> bool {
        self.entries.is_empty()
    }
}

impl fmt::Debug for CrystalElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b{:?}", self.entries)
    }
}

/// One value of the Kashiwara function.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KashiwaraValue {
    pub position: usize,
    pub value: Vec<i64>,
    /// Above the support, standing in for all positions further out.
    pub virtual_slot: bool,
}

/// A module spec together with a position sequence.
#[derive(Clone, Debug)]
pub struct Crystal {
    spec: Arc<ModuleSpec>,
    j: JSeq,
}

/// Closure output: elements by total degree, each layer sorted.
#[derive(Clone, Debug)]
pub struct Closure {
    pub layers: Vec<Vec<CrystalElt>>,
}

impl Closure {
    pub fn len(&self) -> usize {
        self.layers.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = &CrystalElt> {
        self.layers.iter().flatten()
    }

    pub fn to_set(&self) -> HashSet<CrystalElt> {
        self.iter().cloned().collect()
    }
}

impl Crystal {
    pub fn new(spec: Arc<ModuleSpec>, j: JSeq) -> Crystal {
        Crystal { spec, j }
    }

    pub fn spec(&self) -> &Arc<ModuleSpec> {
        &self.spec
    }

    pub fn jseq(&self) -> &JSeq {
        &self.j
    }

    pub fn root_at(&self, k: usize) -> Option<usize> {
        self.j.root_at(self.spec.num_roots(), k)
    }

    fn check_op(&self, root: usize, comp: usize) -> Result<(), CrystalError> {
        if root >= self.spec.num_roots() {
            return Err(CrystalError::UnknownRoot(root.to_string()));
        }
        if comp >= self.spec.rank() {
            return Err(CrystalError::BadComponent {
                comp,
                rank: self.spec.rank(),
            });
        }
        Ok(())
    }

    /// Validate entry arity and that the support fits the sequence.
    pub fn check_elt(&self, b: &CrystalElt) -> Result<(), CrystalError> {
        let s = self.spec.rank();
        for (k, e) in b.entries.iter().enumerate() {
            if e.len() != s {
                return Err(CrystalError::BadEntry {
                    pos: k + 1,
                    got: e.len(),
                    rank: s,
                });
            }
        }
        if let Some(n) = self.j.real_len() {
            if b.support() > n {
                return Err(CrystalError::WindowOverflow(b.support()));
            }
        }
        Ok(())
    }

    /// The Kashiwara function of `root` at each position of that root up to
    /// the support, followed by the first such position above it (value 0)
    /// when one exists.
    pub fn kashiwara(&self, b: &CrystalElt, root: usize) -> Vec<KashiwaraValue> {
        let s = self.spec.rank();
        let top = match self.j.real_len() {
            Some(n) => n,
            None => b.support(),
        };
        let mut running = vec![0i64; s];
        let mut out = Vec::new();
        for k in (1..=top).rev() {
            let here = self.root_at(k).expect("position inside the sequence");
            let entry = b.entries.get(k - 1);
            if here == root {
                let mut value = running.clone();
                if let Some(e) = entry {
                    for (v, &c) in value.iter_mut().zip(e) {
                        *v += c as i64;
                    }
                }
                out.push(KashiwaraValue {
                    position: k,
                    value,
                    virtual_slot: false,
                });
            }
            if let Some(e) = entry {
                let act = &self.spec.act[root][here];
                for (i, r) in running.iter_mut().enumerate() {
                    *r += act[i].iter().zip(e).map(|(a, &c)| a * c as i64).sum::<i64>();
                }
            }
        }
        out.reverse();
        let mut k = top + 1;
        while let Some(r) = self.root_at(k) {
            if r == root {
                out.push(KashiwaraValue {
                    position: k,
                    value: vec![0; s],
                    virtual_slot: true,
                });
                break;
            }
            k += 1;
            if matches!(self.j, JSeq::Periodic(ref p) if k > top + p.len()) {
                break;
            }
        }
        out
    }

    /// `epsilon_{root,comp}`: the maximum of the Kashiwara function, or
    /// `None` (minus infinity) when the root has no position at all.
    pub fn epsilon(&self, b: &CrystalElt, root: usize, comp: usize) -> Option<i64> {
        self.kashiwara(b, root).iter().map(|v| v.value[comp]).max()
    }

    pub fn f(&self, b: &CrystalElt, root: usize, comp: usize) -> Result<CrystalElt, CrystalError> {
        self.check_op(root, comp)?;
        let ks = self.kashiwara(b, root);
        let best = ks
            .iter()
            .map(|v| v.value[comp])
            .max()
            .ok_or(CrystalError::NoPosition(root))?;
        let pos = ks
            .iter()
            .find(|v| v.value[comp] == best)
            .expect("maximum attained")
            .position;
        if self.j.real_len().is_some_and(|n| pos > n) {
            return Err(CrystalError::WindowOverflow(pos));
        }
        let mut entries = b.entries.clone();
        if entries.len() < pos {
            entries.resize(pos, vec![0; self.spec.rank()]);
        }
        entries[pos - 1][comp] += 1;
        Ok(CrystalElt { entries })
    }

    /// `None` is the null element.
    pub fn e(&self, b: &CrystalElt, root: usize, comp: usize) -> Option<CrystalElt> {
        self.check_op(root, comp).ok()?;
        let ks = self.kashiwara(b, root);
        let best = ks.iter().map(|v| v.value[comp]).max()?;
        let slot = ks.iter().rev().find(|v| v.value[comp] == best)?;
        if slot.virtual_slot {
            return None;
        }
        let c = b.entries.get(slot.position - 1)?[comp];
        if c == 0 {
            return None;
        }
        let mut entries = b.entries.clone();
        entries[slot.position - 1][comp] -= 1;
        Some(CrystalElt::from_entries(entries))
    }

    /// Coefficients of `wt b` on the basis `g_i root`, index `root * s + i`.
    pub fn weight(&self, b: &CrystalElt) -> Vec<i64> {
        let s = self.spec.rank();
        let mut w = vec![0i64; self.spec.num_roots() * s];
        for (k, e) in b.entries.iter().enumerate() {
            let r = self.root_at(k + 1).expect("support inside the sequence");
            for (i, &c) in e.iter().enumerate() {
                w[r * s + i] -= c as i64;
            }
        }
        w
    }

    /// All elements reached from `b_infinity` by at most `depth` operators.
    pub fn closure(&self, depth: usize) -> Result<Closure, CrystalError> {
        self.closure_with_order(depth, &self.spec.operators())
    }

    /// Closure applying operators in the given order within each element.
    pub fn closure_with_order(&self, depth: usize, ops: &[(usize, usize)]) -> Result<Closure, CrystalError> {
        let mut layers = vec![vec![CrystalElt::highest()]];
        for _ in 0..depth {
            let prev = layers.last().expect("nonempty");
            let next: Vec<CrystalElt> = prev
                .par_iter()
                .map(|b| ops.iter().map(|&(r, i)| self.f(b, r, i)).collect::<Result<Vec<_>, _>>())
                .collect::<Result<Vec<_>, _>>()?
                .into_iter()
                .flatten()
                .collect::<HashSet<_>>()
                .into_iter()
                .collect();
            let mut next = next;
            next.par_sort();
            layers.push(next);
        }
        Ok(Closure { layers })
    }

    /// Whether `epsilon_{root,comp}` equals the number of `e_{root,comp}`
    /// steps before the null element, for every element.
    pub fn upper_normal<'a>(&self, set: impl IntoIterator<Item = &'a CrystalElt>, root: usize, comp: usize) -> bool {
        set.into_iter().all(|b| {
            let mut count = 0i64;
            let mut cur = b.clone();
            while let Some(next) = self.e(&cur, root, comp) {
                count += 1;
                cur = next;
            }
            self.epsilon(b, root, comp) == Some(count)
        })
    }
}

/// Rank-two spec over the odd chord ring of `m` in the `ChordG` basis:
/// roots `alpha`, `beta` with `alpha^vee(beta) = beta^vee(alpha) = -x`.
pub fn odd_spec(m: usize) -> Result<Arc<ModuleSpec>, crate::chordring::ChordError> {
    let ring = crate::chordring::odd_ring_g(m)?;
    let labels = (0..ring.rank()).map(|i| format!("g{i}")).collect();
    Ok(odd_spec_in(&ring, labels))
}

/// The golden case `m = 5`, basis `{1, g}`.
pub fn golden_spec() -> Arc<ModuleSpec> {
    let ring = crate::chordring::odd_ring_g(5).expect("m = 5");
    odd_spec_in(&ring, vec!["1".into(), "g".into()])
}

fn odd_spec_in(ring: &Arc<QuotientRing>, labels: Vec<String>) -> Arc<ModuleSpec> {
    let g = ring.gen();
    let two = ring.int(2);
    let cartan = vec![vec![two.clone(), -&g], vec![-&g, two]];
    Arc::new(ModuleSpec::over_ring(vec!["alpha".into(), "beta".into()], ring, labels, &cartan).expect("valid cartan"))
}
