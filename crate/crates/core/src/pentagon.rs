//! The golden crystal (`m = 5`): explicit membership inequalities,
//! annihilation predicates, normal forms, transport to the opposite
//! sequence, and the ten-root character count.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::crystal::{golden_spec, Crystal, CrystalElt, CrystalError, JSeq, ModuleSpec};

pub const ALPHA: usize = 0;
pub const BETA: usize = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PentagonError {
    #[error("element {0} is not in the crystal")]
    NotMember(String),
    #[error("normal form did not terminate within {0} blocks")]
    NoTermination(usize),
    #[error(transparent)]
    Crystal(#[from] CrystalError),
}

/// The four operator labels `alpha`, `g alpha`, `beta`, `g beta`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum GoldenOp {
    Alpha,
    GAlpha,
    Beta,
    GBeta,
}

impl GoldenOp {
    pub const ALL: [GoldenOp; 4] = [GoldenOp::Alpha, GoldenOp::GAlpha, GoldenOp::Beta, GoldenOp::GBeta];

    /// `(root, component)` in the crystal engine.
    pub fn index(self) -> (usize, usize) {
        match self {
            GoldenOp::Alpha => (ALPHA, 0),
            GoldenOp::GAlpha => (ALPHA, 1),
            GoldenOp::Beta => (BETA, 0),
            GoldenOp::GBeta => (BETA, 1),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GoldenOp::Alpha => "alpha",
            GoldenOp::GAlpha => "g alpha",
            GoldenOp::Beta => "beta",
            GoldenOp::GBeta => "g beta",
        }
    }
}

/// The crystal over the sequence with `alpha` at position 1.
pub fn crystal_j() -> Crystal {
    Crystal::new(golden_spec(), JSeq::Periodic(vec![ALPHA, BETA]))
}

/// The crystal over the opposite sequence, `beta` at position 1.
pub fn crystal_j_prime() -> Crystal {
    Crystal::new(golden_spec(), JSeq::Periodic(vec![BETA, ALPHA]))
}

pub fn spec() -> Arc<ModuleSpec> {
    golden_spec()
}

/// Auxiliary integers determined by the entries at positions 2..5.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct MembershipParams {
    pub u: i64,
    pub v: i64,
    pub s: i64,
    pub t: i64,
    pub a: i64,
    pub a_prime: i64,
}

fn pairs(b: &CrystalElt) -> [(i64, i64); 6] {
    let mut out = [(0, 0); 6];
    for (k, slot) in out.iter_mut().enumerate().skip(1) {
        if let Some(e) = b.entries().get(k - 1) {
            *slot = (e[0] as i64, e[1] as i64);
        }
    }
    out
}

pub fn params(b: &CrystalElt) -> MembershipParams {
    let p = pairs(b);
    let (m2, n2) = p[2];
    let (m3, n3) = p[3];
    let (m4, n4) = p[4];
    let (m5, n5) = p[5];
    let u = n2 - m3;
    let v = m2 + n2 - n3;
    let s = n2 - v - m4;
    let t = m2 + n2 - u - v - n4;
    let a = m2 - v - t - m5;
    let a_prime = n2 - u - v - s - t - n5;
    MembershipParams { u, v, s, t, a, a_prime }
}

/// The inequality description of the crystal. Entries are naturals by
/// construction, so only the listed inequalities are checked on top.
pub fn is_member(b: &CrystalElt) -> (bool, MembershipParams) {
    let pr = params(b);
    if b.support() > 5 {
        return (false, pr);
    }
    let MembershipParams { u, v, s, t, a, a_prime } = pr;
    let ok = [
        u,
        v,
        u + t,
        v + s,
        v + t,
        s + t + v,
        v + t + a,
        u + t + a_prime,
        s + v + t + a,
        s + v + t + a_prime,
        s + t + v + a + a_prime,
    ]
    .iter()
    .all(|&x| x >= 0);
    (ok, pr)
}

/// Closed-form test for `e_op b` being null, valid on members.
pub fn e_kills(b: &CrystalElt, op: GoldenOp) -> Result<bool, PentagonError> {
    let (ok, p) = is_member(b);
    if !ok {
        return Err(PentagonError::NotMember(format!("{b:?}")));
    }
    let e = pairs(b);
    let (m1, n1) = e[1];
    let (m5, n5) = e[5];
    Ok(match op {
        GoldenOp::Alpha => p.a >= 0 && p.a + p.u - m1 >= 0 && m5 == 0,
        GoldenOp::GAlpha => p.a_prime >= 0 && p.a_prime + p.v - n1 >= 0 && n5 == 0,
        GoldenOp::Beta => p.s >= 0 && p.u + p.t + p.a_prime == 0,
        GoldenOp::GBeta => p.t >= 0 && p.a + p.a_prime + p.s + p.t + p.v == 0,
    })
}

/// All elements of the ambient five-fold product with total degree
/// `<= depth` that satisfy the inequalities.
pub fn members_up_to(depth: u32) -> Vec<CrystalElt> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; 10];
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<CrystalElt>) {
        if i == cur.len() {
            let b = CrystalElt::from_entries(cur.chunks(2).map(|c| c.to_vec()).collect());
            if is_member(&b).0 {
                out.push(b);
            }
            return;
        }
        for c in 0..=left {
            cur[i] = c;
            rec(i + 1, left - c, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, depth, &mut cur, &mut out);
    out
}

/// A block `F_root^{(m, n)} = f_root^m f_{g root}^n` of an operator word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Block {
    pub root: usize,
    pub m: u32,
    pub n: u32,
}

/// Operator word, leftmost block first (it is applied last).
pub type Word = Vec<Block>;

pub fn apply_word(c: &Crystal, word: &[Block], start: &CrystalElt) -> Result<CrystalElt, CrystalError> {
    let mut b = start.clone();
    for blk in word.iter().rev() {
        for _ in 0..blk.n {
            b = c.f(&b, blk.root, 1)?;
        }
        for _ in 0..blk.m {
            b = c.f(&b, blk.root, 0)?;
        }
    }
    Ok(b)
}

fn drain(c: &Crystal, b: &mut CrystalElt, root: usize, comp: usize) -> u32 {
    let mut k = 0;
    while let Some(next) = c.e(b, root, comp) {
        *b = next;
        k += 1;
    }
    k
}

const BLOCK_CAP: usize = 64;

/// Peel blocks off alternately starting from `first`, each block taking
/// every available `e_root` then every available `e_{g root}`.
pub fn normal_form_from(c: &Crystal, b: &CrystalElt, first: usize) -> Result<Word, PentagonError> {
    let mut cur = b.clone();
    let mut word = Vec::new();
    let mut root = first;
    let mut idle = 0;
    while !cur.is_highest() {
        if word.len() >= BLOCK_CAP {
            return Err(PentagonError::NoTermination(BLOCK_CAP));
        }
        let m = drain(c, &mut cur, root, 0);
        let n = drain(c, &mut cur, root, 1);
        if c.e(&cur, root, 0).is_some() {
            return Err(PentagonError::NotMember(format!("{b:?}")));
        }
        idle = if m + n == 0 { idle + 1 } else { 0 };
        if idle >= 2 {
            return Err(PentagonError::NotMember(format!("{b:?}")));
        }
        word.push(Block { root, m, n });
        root = 1 - root;
    }
    while word.last().is_some_and(|blk| blk.m + blk.n == 0) {
        word.pop();
    }
    Ok(word)
}

/// Normal form over the sequence with `alpha` first.
pub fn normal_form(b: &CrystalElt) -> Result<Word, PentagonError> {
    normal_form_from(&crystal_j(), b, ALPHA)
}

/// Whether every suffix `F_{k+1}...b_infinity` is killed by both `e` of the
/// root of block `k`.
pub fn is_normal_form(c: &Crystal, word: &[Block]) -> Result<bool, CrystalError> {
    for k in 0..word.len() {
        let b = apply_word(c, &word[k + 1..], &CrystalElt::highest())?;
        let r = word[k].root;
        if c.e(&b, r, 0).is_some() || c.e(&b, r, 1).is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The crystal isomorphism to the opposite sequence: write `b` in normal
/// form and apply the same word to the opposite highest element.
pub fn transport(b: &CrystalElt) -> Result<CrystalElt, PentagonError> {
    let word = normal_form(b)?;
    Ok(apply_word(&crystal_j_prime(), &word, &CrystalElt::highest())?)
}

/// Inverse of [`transport`], through normal forms over the opposite sequence.
pub fn transport_back(b: &CrystalElt) -> Result<CrystalElt, PentagonError> {
    let word = normal_form_from(&crystal_j_prime(), b, BETA)?;
    Ok(apply_word(&crystal_j(), &word, &CrystalElt::highest())?)
}

/// Positive roots in coordinates `(alpha, g alpha, beta, g beta)`, short
/// roots first.
pub const POSITIVE_ROOTS: [[u32; 4]; 10] = [
    [1, 0, 0, 0],
    [1, 0, 0, 1],
    [0, 1, 0, 1],
    [0, 1, 1, 0],
    [0, 0, 1, 0],
    [0, 1, 0, 0],
    [0, 1, 1, 1],
    [1, 1, 1, 1],
    [1, 1, 0, 1],
    [0, 0, 0, 1],
];

/// Number of ways to write `w` as a sum of positive roots with repetition.
pub fn char_coeff(w: [u32; 4]) -> u64 {
    let mut memo = HashMap::new();
    partitions(w, 0, &mut memo)
}

fn partitions(w: [u32; 4], from: usize, memo: &mut HashMap<([u32; 4], usize), u64>) -> u64 {
    if w == [0; 4] {
        return 1;
    }
    if from == POSITIVE_ROOTS.len() {
        return 0;
    }
    if let Some(&v) = memo.get(&(w, from)) {
        return v;
    }
    // use root `from` zero or more times, then move on
    let mut total = partitions(w, from + 1, memo);
    let r = POSITIVE_ROOTS[from];
    let mut rest = w;
    while (0..4).all(|i| rest[i] >= r[i]) {
        for i in 0..4 {
            rest[i] -= r[i];
        }
        total += partitions(rest, from + 1, memo);
    }
    memo.insert((w, from), total);
    total
}

/// `-wt b` in coordinates `(alpha, g alpha, beta, g beta)`.
pub fn neg_weight(c: &Crystal, b: &CrystalElt) -> [u32; 4] {
    let w = c.weight(b);
    [-w[0] as u32, -w[1] as u32, -w[2] as u32, -w[3] as u32]
}

/// One row of the layer table: elements of a given total degree.
#[derive(Clone, Debug, Serialize)]
pub struct LayerRow {
    pub degree: usize,
    pub closure: usize,
    pub members: usize,
}

/// Results of the full golden-crystal check up to a depth.
#[derive(Clone, Debug, Serialize)]
pub struct PentagonSuite {
    pub depth: usize,
    pub layers: Vec<LayerRow>,
    /// Closure and inequality-defined sets agree.
    pub membership: bool,
    /// Elements where an annihilation predicate disagrees with `e`.
    pub annihilation_mismatches: usize,
    /// Weights of height `<= depth` whose layer size differs from the
    /// partition count.
    pub character_mismatches: usize,
    /// Elements of degree `<= transport_depth` where transport fails to be
    /// a weight-preserving bijection.
    pub transport_depth: usize,
    pub transport_mismatches: usize,
}

impl PentagonSuite {
    pub fn passed(&self) -> bool {
        self.membership
            && self.annihilation_mismatches == 0
            && self.character_mismatches == 0
            && self.transport_mismatches == 0
    }
}

/// Membership, annihilation, character and transport checks on the closure
/// of the given depth; transport is checked up to `min(depth, 8)`.
pub fn verify_suite(depth: usize) -> Result<PentagonSuite, PentagonError> {
    let c = crystal_j();
    let cl = c.closure(depth)?;
    let members = members_up_to(depth as u32);
    let mut member_layers = vec![0usize; depth + 1];
    for b in &members {
        member_layers[b.degree() as usize] += 1;
    }
    let layers = (0..=depth)
        .map(|d| LayerRow {
            degree: d,
            closure: cl.layers.get(d).map_or(0, Vec::len),
            members: member_layers[d],
        })
        .collect();
    let membership = cl.to_set() == members.into_iter().collect();

    let mut annihilation_mismatches = 0;
    for b in cl.iter() {
        for op in GoldenOp::ALL {
            let (r, i) = op.index();
            if e_kills(b, op)? != c.e(b, r, i).is_none() {
                annihilation_mismatches += 1;
            }
        }
    }

    let mut by_weight: HashMap<[u32; 4], u64> = HashMap::new();
    for b in cl.iter() {
        *by_weight.entry(neg_weight(&c, b)).or_default() += 1;
    }
    let d = depth as u32;
    let mut character_mismatches = 0;
    for a in 0..=d {
        for b in 0..=d - a {
            for x in 0..=d - a - b {
                for y in 0..=d - a - b - x {
                    let w = [a, b, x, y];
                    if by_weight.get(&w).copied().unwrap_or(0) != char_coeff(w) {
                        character_mismatches += 1;
                    }
                }
            }
        }
    }

    let transport_depth = depth.min(8);
    let cp = crystal_j_prime();
    let mut images = std::collections::HashSet::new();
    let mut transport_mismatches = 0;
    for b in cl.iter().filter(|b| b.degree() as usize <= transport_depth) {
        let t = transport(b)?;
        if c.weight(b) != cp.weight(&t) || transport_back(&t)? != *b || !images.insert(t) {
            transport_mismatches += 1;
        }
    }
    let opposite = cp.closure(transport_depth)?;
    if opposite.len() != images.len() {
        transport_mismatches += opposite.len().abs_diff(images.len());
    }

    Ok(PentagonSuite {
        depth,
        layers,
        membership,
        annihilation_mismatches,
        character_mismatches,
        transport_depth,
        transport_mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn elt(pairs: &[(u32, u32)]) -> CrystalElt {
        CrystalElt::from_entries(pairs.iter().map(|&(m, n)| vec![m, n]).collect())
    }

    #[test]
    fn membership_examples() {
        assert!(is_member(&CrystalElt::highest()).0);
        assert!(!is_member(&elt(&[(0, 0), (0, 0), (1, 0)])).0);
        let (ok, p) = is_member(&elt(&[(0, 0), (1, 1), (1, 2), (1, 2), (1, 1)]));
        assert!(ok);
        assert_eq!(p, MembershipParams::default());
    }

    #[test]
    fn first_steps() {
        let c = crystal_j();
        let b = c.f(&CrystalElt::highest(), ALPHA, 0).unwrap();
        assert_eq!(b, elt(&[(1, 0)]));
        assert_eq!(normal_form(&b).unwrap(), vec![Block { root: ALPHA, m: 1, n: 0 }]);
        assert!(e_kills(&CrystalElt::highest(), GoldenOp::Alpha).unwrap());
        assert!(!e_kills(&b, GoldenOp::Alpha).unwrap());
    }

    #[test]
    fn character_small() {
        assert_eq!(char_coeff([0; 4]), 1);
        assert_eq!(char_coeff([1, 0, 1, 0]), 1);
        assert_eq!(char_coeff([1, 0, 0, 1]), 2);
    }
}
