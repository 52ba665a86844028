//! Dictionary between the rank-two crystal over the odd chord ring
//! `m = 2n + 1` and the integer crystal of type `A_{2n}`.
//!
//! The module basis is `g_i` with `g_i = p_{2i}` and `p_{2i+1} = g_{n-1-i}`.
//! Component `i` of an alpha-type entry becomes the entry of `alpha_{2i+1}`,
//! component `i` of a beta-type entry that of `alpha_{2n-2i}`. Each module
//! position expands into a block of `n` commuting classical positions.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::crystal::{odd_spec, Crystal, CrystalElt, CrystalError, JSeq, ModuleSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BridgeError {
    #[error("n must be at least 1")]
    BadRank,
    #[error("support {support} exceeds the {limit} module positions")]
    SupportTooLarge { support: usize, limit: usize },
    #[error("classical element is not constant on the expected block pattern")]
    NotInImage,
    #[error(transparent)]
    Crystal(#[from] CrystalError),
}

/// Classical root labels are 0-based: index `k` is `alpha_{k+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BasisDict {
    pub n: usize,
}

impl BasisDict {
    pub fn new(n: usize) -> Result<BasisDict, BridgeError> {
        if n == 0 {
            return Err(BridgeError::BadRank);
        }
        Ok(BasisDict { n })
    }

    pub fn positions(&self) -> usize {
        2 * self.n + 1
    }

    /// Classical root (0-based) carrying component `comp` of module root
    /// `root` (0 = alpha, 1 = beta).
    pub fn classical_root(&self, root: usize, comp: usize) -> usize {
        if root == 0 {
            2 * comp
        } else {
            2 * self.n - 2 * comp - 1
        }
    }

    /// Inverse of [`BasisDict::classical_root`].
    pub fn module_op(&self, classical: usize) -> (usize, usize) {
        if classical % 2 == 0 {
            (0, classical / 2)
        } else {
            (1, (2 * self.n - 1 - classical) / 2)
        }
    }

    /// Classical position of component `comp` at module position `j`.
    pub fn classical_position(&self, j: usize, comp: usize) -> usize {
        (j - 1) * self.n + (self.n - comp)
    }

    /// The finite classical word: module position `j` expands into `n`
    /// positions. With `reversed`, each block is listed in the opposite
    /// order (the roots in a block commute).
    pub fn classical_word(&self, reversed: bool) -> Vec<usize> {
        let n = self.n;
        let mut word = Vec::with_capacity(n * self.positions());
        for j in 1..=self.positions() {
            let root = (j + 1) % 2;
            let mut block: Vec<usize> = (1..=n).map(|k| self.classical_root(root, n - k)).collect();
            if reversed {
                block.reverse();
            }
            word.extend(block);
        }
        word
    }

    fn position_map(&self, reversed: bool) -> Vec<(usize, usize, usize)> {
        // (classical position, module position, component)
        let n = self.n;
        let mut out = Vec::new();
        for j in 1..=self.positions() {
            for comp in 0..n {
                let mut k = n - comp;
                if reversed {
                    k = n + 1 - k;
                }
                out.push(((j - 1) * n + k, j, comp));
            }
        }
        out
    }
}

/// Cartan matrix of `A_k`.
pub fn cartan_a(k: usize) -> Vec<Vec<i64>> {
    (0..k)
        .map(|i| {
            (0..k)
                .map(|j| match i.abs_diff(j) {
                    0 => 2,
                    1 => -1,
                    _ => 0,
                })
                .collect()
        })
        .collect()
}

pub fn classical_spec(n: usize) -> Arc<ModuleSpec> {
    let labels = (1..=2 * n).map(|i| format!("alpha{i}")).collect();
    Arc::new(ModuleSpec::classical(labels, &cartan_a(2 * n)).expect("type A cartan"))
}

pub fn module_crystal(n: usize) -> Result<Crystal, BridgeError> {
    let spec = odd_spec(2 * n + 1).map_err(|_| BridgeError::BadRank)?;
    Ok(Crystal::new(spec, JSeq::Periodic(vec![0, 1])))
}

pub fn classical_crystal(n: usize, reversed_blocks: bool) -> Result<Crystal, BridgeError> {
    let dict = BasisDict::new(n)?;
    Ok(Crystal::new(
        classical_spec(n),
        JSeq::Finite {
            word: dict.classical_word(reversed_blocks),
            dummies: true,
        },
    ))
}

pub fn to_classical_with(dict: &BasisDict, b: &CrystalElt, reversed: bool) -> Result<CrystalElt, BridgeError> {
    if b.support() > dict.positions() {
        return Err(BridgeError::SupportTooLarge {
            support: b.support(),
            limit: dict.positions(),
        });
    }
    let mut out = vec![vec![0u32]; dict.n * dict.positions()];
    for (cp, j, comp) in dict.position_map(reversed) {
        if let Some(e) = b.entries().get(j - 1) {
            out[cp - 1][0] = e[comp];
        }
    }
    Ok(CrystalElt::from_entries(out))
}

pub fn to_classical(dict: &BasisDict, b: &CrystalElt) -> Result<CrystalElt, BridgeError> {
    to_classical_with(dict, b, false)
}

pub fn from_classical(dict: &BasisDict, b: &CrystalElt) -> Result<CrystalElt, BridgeError> {
    if b.support() > dict.n * dict.positions() {
        return Err(BridgeError::NotInImage);
    }
    let mut out = vec![vec![0u32; dict.n]; dict.positions()];
    for (cp, j, comp) in dict.position_map(false) {
        if let Some(e) = b.entries().get(cp - 1) {
            out[j - 1][comp] = e[0];
        }
    }
    Ok(CrystalElt::from_entries(out))
}

/// Module weight recovered from a classical weight.
pub fn weight_to_module(dict: &BasisDict, classical: &[i64]) -> Vec<i64> {
    let n = dict.n;
    let mut w = vec![0i64; 2 * n];
    for (k, &c) in classical.iter().enumerate() {
        let (root, comp) = dict.module_op(k);
        w[root * n + comp] += c;
    }
    w
}

/// Kostant partition count for `A_k`: ways of writing `mu` (coefficients
/// on the simple roots) as a sum of positive roots `alpha_i + ... + alpha_j`.
pub fn kostant_a(mu: &[u32]) -> u64 {
    // The lowest nonzero index must start some root. Roots sharing that
    // start are taken with nonincreasing end so each multiset counts once.
    fn rec(mu: &mut Vec<u32>, cap: usize, memo: &mut HashMap<(Vec<u32>, usize), u64>) -> u64 {
        let Some(i) = mu.iter().position(|&c| c > 0) else {
            return 1;
        };
        let key = (mu.clone(), cap);
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let mut total = 0;
        let mut j = i;
        while j <= cap && j < mu.len() && mu[j] > 0 {
            for c in mu[i..=j].iter_mut() {
                *c -= 1;
            }
            let next_cap = if mu[i] > 0 { j } else { usize::MAX };
            total += rec(mu, next_cap, memo);
            for c in mu[i..=j].iter_mut() {
                *c += 1;
            }
            j += 1;
        }
        memo.insert(key, total);
        total
    }
    rec(&mut mu.to_vec(), usize::MAX, &mut HashMap::new())
}

#[derive(Clone, Debug, Serialize)]
pub struct IntertwineReport {
    pub n: usize,
    pub depth: usize,
    pub module_elements: usize,
    pub operator_checks: usize,
    pub mismatches: Vec<String>,
    pub module_layers: Vec<usize>,
    pub classical_layers: Vec<usize>,
    pub kostant_layers: Vec<u64>,
    /// Classical weights whose element count differs from the Kostant count.
    pub weight_count_mismatches: usize,
    pub injective: bool,
    pub weight_compatible: bool,
    pub image_equals_classical: bool,
}

impl IntertwineReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
            && self.module_layers.iter().map(|&x| x as u64).eq(self.kostant_layers.iter().copied())
            && self.module_layers == self.classical_layers
            && self.weight_count_mismatches == 0
            && self.injective
            && self.weight_compatible
            && self.image_equals_classical
    }
}

/// For every element of the module closure and every `f_{root,comp}`,
/// compare `to_classical(f b)` with the matching classical operator
/// applied to `to_classical(b)`.
pub fn intertwine_check(n: usize, depth: usize) -> Result<IntertwineReport, BridgeError> {
    let dict = BasisDict::new(n)?;
    let module = module_crystal(n)?;
    let classical = classical_crystal(n, false)?;
    let mc = module.closure(depth)?;
    let cc = classical.closure(depth)?;
    let ops = module.spec().operators();

    let mut mismatches: Vec<String> = mc
        .iter()
        .collect::<Vec<_>>()
        .par_iter()
        .flat_map_iter(|b| {
            let dict = &dict;
            let module = &module;
            let classical = &classical;
            ops.iter().filter_map(move |&(r, i)| {
                let lhs = module.f(b, r, i).map_err(BridgeError::from).and_then(|fb| to_classical(dict, &fb));
                let rhs = to_classical(dict, b)
                    .and_then(|cb| classical.f(&cb, dict.classical_root(r, i), 0).map_err(BridgeError::from));
                match (lhs, rhs) {
                    (Ok(x), Ok(y)) if x == y => None,
                    (l, r2) => Some(format!("{b:?} op ({r},{i}): {l:?} vs {r2:?}")),
                }
            })
        })
        .collect();
    mismatches.sort();

    let mut images = HashSet::new();
    let mut weight_compatible = true;
    for b in mc.iter() {
        let cb = to_classical(&dict, b)?;
        if weight_to_module(&dict, &classical.weight(&cb)) != module.weight(b) {
            weight_compatible = false;
        }
        if from_classical(&dict, &cb)? != *b {
            weight_compatible = false;
        }
        images.insert(cb);
    }
    let injective = images.len() == mc.len();
    let image_equals_classical = images == cc.to_set();

    let kostant_layers = (0..=depth).map(|d| kostant_height_total(2 * n, d)).collect();
    let mut by_weight: HashMap<Vec<u32>, u64> = HashMap::new();
    for b in cc.iter() {
        let w = classical.weight(b).iter().map(|&c| (-c) as u32).collect();
        *by_weight.entry(w).or_default() += 1;
    }
    let weight_count_mismatches = by_weight.iter().filter(|(w, &c)| kostant_a(w) != c).count();

    Ok(IntertwineReport {
        n,
        depth,
        module_elements: mc.len(),
        operator_checks: mc.len() * ops.len(),
        mismatches,
        module_layers: mc.layers.iter().map(Vec::len).collect(),
        classical_layers: cc.layers.iter().map(Vec::len).collect(),
        kostant_layers,
        weight_count_mismatches,
        injective,
        weight_compatible,
        image_equals_classical,
    })
}

/// Number of multisets of positive roots of `A_k` with total height `d`,
/// that is the sum of Kostant counts over all weights of height `d`.
pub fn kostant_height_total(k: usize, d: usize) -> u64 {
    // roots of height h occur k + 1 - h times
    let mut ways = vec![0u64; d + 1];
    ways[0] = 1;
    for h in 1..=k {
        for _ in 0..(k + 1 - h) {
            for t in h..=d {
                ways[t] += ways[t - h];
            }
        }
    }
    ways[d]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dictionary_examples() {
        let d = BasisDict::new(2).unwrap();
        let b = CrystalElt::from_entries(vec![vec![2, 3]]);
        let c = to_classical(&d, &b).unwrap();
        // position 1 expands to (alpha3, alpha1) from the right
        assert_eq!(c.entries(), &[vec![3], vec![2]]);
        let b = CrystalElt::from_entries(vec![vec![0, 0], vec![5, 7]]);
        let c = to_classical(&d, &b).unwrap();
        // beta block reads (alpha2, alpha4) from the right: alpha4 gets the 1-part
        assert_eq!(c.entries(), &[vec![0], vec![0], vec![7], vec![5]]);
        assert_eq!(from_classical(&d, &c).unwrap(), b);
    }

    #[test]
    fn kostant_small() {
        assert_eq!(kostant_a(&[1, 1]), 2);
        assert_eq!(kostant_a(&[1, 1, 1]), 4);
        assert_eq!(kostant_a(&[2, 1]), 2);
        assert_eq!(kostant_height_total(2, 2), 4);
    }

    #[test]
    fn shallow_check_passes() {
        let r = intertwine_check(2, 2).unwrap();
        assert!(r.passed(), "{r:?}");
    }
}
