//! Dihedral and augmented Weyl groups as integer matrices, the rank-two
//! root system for odd m, the identifications with `W(A_2n)` and `W(B_k)`,
//! and the dodecahedron scalar products.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::bridge::{cartan_a, BasisDict};
use crate::chordring::{
    chord_poly, chord_ring, even_ring, folded_even, odd_ring_g, ChordError, EvenSide, IntPoly, QuotientRing, RatElem,
    RingElem,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoxeterError {
    #[error("group closure exceeded {0} elements")]
    CapExceeded(usize),
    #[error("m = {0} is not supported here")]
    BadM(usize),
    #[error("object outside the domain: {0}")]
    Domain(String),
    #[error(transparent)]
    Ring(#[from] ChordError),
}

/// Square integer matrix acting on column vectors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinMap {
    n: usize,
    data: Vec<i64>,
}

impl fmt::Debug for LinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[i64]> = self.data.chunks(self.n).collect();
        write!(f, "{rows:?}")
    }
}

impl Serialize for LinMap {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

impl LinMap {
    pub fn identity(n: usize) -> LinMap {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        LinMap { n, data }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> LinMap {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "square matrix");
        LinMap {
            n,
            data: rows.concat(),
        }
    }

    /// The matrix whose `j`-th column is `cols[j]`.
    pub fn from_columns(cols: &[Vec<i64>]) -> LinMap {
        let n = cols.len();
        let mut data = vec![0; n * n];
        for (j, c) in cols.iter().enumerate() {
            for (i, &v) in c.iter().enumerate() {
                data[i * n + j] = v;
            }
        }
        LinMap { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.n).map(<[i64]>::to_vec).collect()
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &LinMap) -> LinMap {
        let n = self.n;
        let mut data = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    data[i * n + j] += a * other.data[k * n + j];
                }
            }
        }
        LinMap { n, data }
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.data[i * self.n + j] * v[j]).sum())
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == LinMap::identity(self.n)
    }

    /// Multiplicative order, if at most `cap`.
    pub fn order(&self, cap: usize) -> Option<usize> {
        let mut p = self.clone();
        for k in 1..=cap {
            if p.is_identity() {
                return Some(k);
            }
            p = p.compose(self);
        }
        None
    }

    /// Inverse of a permutation matrix.
    pub fn transpose(&self) -> LinMap {
        let n = self.n;
        let mut data = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                data[j * n + i] = self.data[i * n + j];
            }
        }
        LinMap { n, data }
    }
}

/// Simple reflections of a classical root system, on simple-root
/// coordinates: `s_k(alpha_j) = alpha_j - cartan[k][j] alpha_k`.
pub fn classical_reflections(cartan: &[Vec<i64>]) -> Vec<LinMap> {
    let n = cartan.len();
    (0..n)
        .map(|k| {
            let mut m = LinMap::identity(n);
            for j in 0..n {
                m.data[k * n + j] -= cartan[k][j];
            }
            m
        })
        .collect()
}

/// Bourbaki `B_k`: the last simple root is short.
pub fn cartan_b(k: usize) -> Vec<Vec<i64>> {
    let mut c = cartan_a(k);
    if k >= 2 {
        c[k - 1][k - 2] = -2;
    }
    c
}

/// The lattice `M_alpha alpha + M_beta beta` of the rank-two system for a
/// given m, with coordinates: alpha part first, then beta part.
#[derive(Clone, Debug)]
pub struct RankTwoLattice {
    pub m: usize,
    pub ring_alpha: Arc<QuotientRing>,
    pub ring_beta: Arc<QuotientRing>,
    alpha_of_beta: IntPoly,
    beta_of_alpha: IntPoly,
}

impl RankTwoLattice {
    /// Odd m: both sides are the chord ring in the `g` basis and the Cartan
    /// values are `-x`. Even m: the `y`-rings of the even case with
    /// `alpha^vee(beta) = -y` and `beta^vee(alpha) = -1`.
    pub fn new(m: usize) -> Result<RankTwoLattice, CoxeterError> {
        if m < 3 {
            return Err(CoxeterError::BadM(m));
        }
        if m % 2 == 1 {
            let r = odd_ring_g(m)?;
            Ok(RankTwoLattice {
                m,
                ring_alpha: r.clone(),
                ring_beta: r,
                alpha_of_beta: IntPoly::x().scale(-1),
                beta_of_alpha: IntPoly::x().scale(-1),
            })
        } else {
            Ok(RankTwoLattice {
                m,
                ring_alpha: even_ring(m, EvenSide::Alpha)?,
                ring_beta: even_ring(m, EvenSide::Beta)?,
                alpha_of_beta: IntPoly::x().scale(-1),
                beta_of_alpha: IntPoly::constant(-1),
            })
        }
    }

    pub fn rank_alpha(&self) -> usize {
        self.ring_alpha.rank()
    }

    pub fn rank_beta(&self) -> usize {
        self.ring_beta.rank()
    }

    pub fn dim(&self) -> usize {
        self.rank_alpha() + self.rank_beta()
    }

    pub fn split(&self, v: &[i64]) -> (RingElem, RingElem) {
        let a = self.rank_alpha();
        (
            self.ring_alpha.elem(v[..a].to_vec()).expect("arity"),
            self.ring_beta.elem(v[a..].to_vec()).expect("arity"),
        )
    }

    pub fn join(&self, c: &RingElem, d: &RingElem) -> Vec<i64> {
        let mut v = c.coords().to_vec();
        v.extend_from_slice(d.coords());
        v
    }

    /// `alpha^vee(c alpha + d beta) = 2c + alpha^vee(beta) d`, in `M_alpha`.
    pub fn alpha_coroot(&self, v: &[i64]) -> RingElem {
        let (c, d) = self.split(v);
        self.ring_alpha
            .from_poly(&(&c.lift().scale(2) + &(&self.alpha_of_beta * &d.lift())))
    }

    /// `beta^vee(c alpha + d beta) = beta^vee(alpha) c + 2d`, in `M_beta`.
    pub fn beta_coroot(&self, v: &[i64]) -> RingElem {
        let (c, d) = self.split(v);
        self.ring_beta
            .from_poly(&(&(&self.beta_of_alpha * &c.lift()) + &d.lift().scale(2)))
    }

    /// `s_{root,i} v = v - (root^vee v)_i e_i root`, `root` 0 for alpha.
    pub fn aug_reflection(&self, root: usize, i: usize) -> LinMap {
        let n = self.dim();
        let offset = if root == 0 { 0 } else { self.rank_alpha() };
        let cols: Vec<Vec<i64>> = (0..n)
            .map(|j| {
                let mut e = vec![0; n];
                e[j] = 1;
                let co = if root == 0 { self.alpha_coroot(&e) } else { self.beta_coroot(&e) };
                e[offset + i] -= co.coords()[i];
                e
            })
            .collect();
        LinMap::from_columns(&cols)
    }

    /// Generators `s_{alpha,0..}` then `s_{beta,0..}`.
    pub fn aug_gens(&self) -> Vec<LinMap> {
        let mut g: Vec<LinMap> = (0..self.rank_alpha()).map(|i| self.aug_reflection(0, i)).collect();
        g.extend((0..self.rank_beta()).map(|i| self.aug_reflection(1, i)));
        g
    }

    /// `s_alpha` or `s_beta` as the product of its augmented factors.
    pub fn simple_reflection(&self, root: usize) -> LinMap {
        let k = if root == 0 { self.rank_alpha() } else { self.rank_beta() };
        (0..k).fold(LinMap::identity(self.dim()), |acc, i| acc.compose(&self.aug_reflection(root, i)))
    }

    /// Generators in the order matched with the simple reflections
    /// `s_1, s_2, ...` of the classical type, together with that type.
    pub fn matched_gens(&self) -> (Vec<LinMap>, CoxeterType) {
        let m = self.m;
        if m % 2 == 1 {
            let n = (m - 1) / 2;
            let gens = (1..=2 * n)
                .map(|k| {
                    if k % 2 == 1 {
                        self.aug_reflection(0, (k - 1) / 2)
                    } else {
                        self.aug_reflection(1, n - k / 2)
                    }
                })
                .collect();
            (gens, CoxeterType::A(2 * n))
        } else if m % 4 == 0 {
            let n = m / 4;
            let gens = (1..=2 * n)
                .map(|k| {
                    if k % 2 == 1 {
                        self.aug_reflection(1, (k - 1) / 2)
                    } else {
                        self.aug_reflection(0, k / 2 - 1)
                    }
                })
                .collect();
            (gens, CoxeterType::B(2 * n))
        } else {
            let n = (m - 2) / 4;
            let gens = (1..=2 * n + 1)
                .map(|k| {
                    if k % 2 == 1 {
                        self.aug_reflection(0, (k - 1) / 2)
                    } else {
                        self.aug_reflection(1, k / 2 - 1)
                    }
                })
                .collect();
            (gens, CoxeterType::B(2 * n + 1))
        }
    }
}

pub fn aug_gens(m: usize) -> Result<Vec<LinMap>, CoxeterError> {
    Ok(RankTwoLattice::new(m)?.aug_gens())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CoxeterType {
    A(usize),
    B(usize),
}

impl CoxeterType {
    pub fn rank(self) -> usize {
        match self {
            CoxeterType::A(k) | CoxeterType::B(k) => k,
        }
    }

    pub fn coxeter_matrix(self) -> Vec<Vec<usize>> {
        let k = self.rank();
        let mut c: Vec<Vec<usize>> = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| match i.abs_diff(j) {
                        0 => 1,
                        1 => 3,
                        _ => 2,
                    })
                    .collect()
            })
            .collect();
        if let CoxeterType::B(k) = self {
            if k >= 2 {
                c[k - 2][k - 1] = 4;
                c[k - 1][k - 2] = 4;
            }
        }
        c
    }

    pub fn group_order(self) -> u64 {
        let fact = |k: usize| (1..=k as u64).product::<u64>();
        match self {
            CoxeterType::A(k) => fact(k + 1),
            CoxeterType::B(k) => (1u64 << k) * fact(k),
        }
    }

    pub fn cartan(self) -> Vec<Vec<i64>> {
        match self {
            CoxeterType::A(k) => cartan_a(k),
            CoxeterType::B(k) => cartan_b(k),
        }
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterType::A(k) => write!(f, "A{k}"),
            CoxeterType::B(k) => write!(f, "B{k}"),
        }
    }
}

pub const DEFAULT_CAP: usize = 100_000;

/// Breadth-first closure under right multiplication by the generators.
pub fn group_closure(gens: &[LinMap], cap: usize) -> Result<Vec<LinMap>, CoxeterError> {
    let n = gens.first().map_or(0, LinMap::dim);
    let id = LinMap::identity(n);
    let mut seen: HashSet<LinMap> = HashSet::from([id.clone()]);
    let mut all = vec![id.clone()];
    let mut frontier = vec![id];
    while !frontier.is_empty() {
        let candidates: Vec<LinMap> = frontier
            .par_iter()
            .flat_map_iter(|w| gens.iter().map(move |s| w.compose(s)))
            .collect();
        let mut next = Vec::new();
        for c in candidates {
            if seen.insert(c.clone()) {
                all.push(c.clone());
                next.push(c);
                if all.len() > cap {
                    return Err(CoxeterError::CapExceeded(cap));
                }
            }
        }
        frontier = next;
    }
    Ok(all)
}

/// Orders of pairwise products `s_i s_j`.
pub fn coxeter_matrix_of(gens: &[LinMap]) -> Vec<Vec<usize>> {
    gens.iter()
        .map(|a| gens.iter().map(|b| a.compose(b).order(64).unwrap_or(0)).collect())
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct CoxeterReport {
    pub m: usize,
    pub target: String,
    pub relations_hold: bool,
    pub involutions: bool,
    pub order: usize,
    pub expected_order: u64,
}

impl CoxeterReport {
    pub fn passed(&self) -> bool {
        self.relations_hold && self.involutions && self.order as u64 == self.expected_order
    }
}

pub fn coxeter_check(gens: &[LinMap], target: CoxeterType) -> Result<CoxeterReport, CoxeterError> {
    let order = group_closure(gens, DEFAULT_CAP)?.len();
    let n = gens.first().map_or(0, LinMap::dim);
    Ok(CoxeterReport {
        m: 0,
        target: target.to_string(),
        relations_hold: gens.len() == target.rank() && coxeter_matrix_of(gens) == target.coxeter_matrix(),
        involutions: gens.iter().all(|g| g.compose(g) == LinMap::identity(n)),
        order,
        expected_order: target.group_order(),
    })
}

/// Check the augmented group of m against the classical type it is
/// identified with.
pub fn check_m(m: usize) -> Result<CoxeterReport, CoxeterError> {
    let lat = RankTwoLattice::new(m)?;
    let (gens, ty) = lat.matched_gens();
    let mut r = coxeter_check(&gens, ty)?;
    r.m = m;
    Ok(r)
}

/// Order of `s_alpha s_beta` for the symmetric Cartan matrix with
/// off-diagonal `-x` over the chord ring of m.
pub fn dihedral_rotation_order(m: usize) -> Result<Option<usize>, CoxeterError> {
    let ring = chord_ring(m)?;
    let r = ring.rank();
    let x = ring.gen();
    let refl = |root: usize| {
        let cols: Vec<Vec<i64>> = (0..2 * r)
            .map(|j| {
                let mut e = vec![0; 2 * r];
                e[j] = 1;
                let c = ring.elem(e[..r].to_vec()).unwrap();
                let d = ring.elem(e[r..].to_vec()).unwrap();
                let co = if root == 0 { &c.scale(2) - &(&x * &d) } else { &d.scale(2) - &(&x * &c) };
                let shift = if root == 0 { 0 } else { r };
                for (i, v) in co.coords().iter().enumerate() {
                    e[shift + i] -= v;
                }
                e
            })
            .collect();
        LinMap::from_columns(&cols)
    };
    Ok(refl(0).compose(&refl(1)).order(4 * m))
}

/// `(s_alpha s_beta)^n alpha = R_n alpha + S_n beta` with the recurrence
/// over `Z[x]`, compared with `R_n = P_2n`, `S_n = P_{2n-1}`.
pub fn rotation_polys_match(max_n: i64) -> bool {
    let x = IntPoly::x();
    let (mut r, mut s) = (IntPoly::one(), IntPoly::zero());
    for n in 0..=max_n {
        if r != chord_poly(2 * n) || s != chord_poly(2 * n - 1) {
            return false;
        }
        let s_next = &(&x * &r) - &s;
        let r_next = &(&x * &s_next) - &r;
        r = r_next;
        s = s_next;
    }
    true
}

/// `psi`: module lattice to simple-root coordinates of `A_2n`,
/// `g_i alpha -> alpha_{2i+1}`, `g_i beta -> alpha_{2n-2i}`.
pub fn psi_matrix(n: usize) -> LinMap {
    let dict = BasisDict { n };
    let cols: Vec<Vec<i64>> = (0..2 * n)
        .map(|j| {
            let (root, comp) = if j < n { (0, j) } else { (1, j - n) };
            let mut e = vec![0; 2 * n];
            e[dict.classical_root(root, comp)] = 1;
            e
        })
        .collect();
    LinMap::from_columns(&cols)
}

/// Even case: images of the simple roots `alpha_1..alpha_k` of `B_k` as
/// lattice vectors. With `split_rings` false both sides use the modulus of
/// the beta side, which loses injectivity when `m = 4n + 2`.
pub fn psi_even_images(m: usize, split_rings: bool) -> Result<Vec<(RingElem, RingElem)>, CoxeterError> {
    if m % 2 != 0 || m < 4 {
        return Err(CoxeterError::BadM(m));
    }
    let ring_b = even_ring(m, EvenSide::Beta)?;
    let ring_a = if split_rings { even_ring(m, EvenSide::Alpha)? } else { ring_b.clone() };
    let t = |k: usize| folded_even(k as i64).expect("index");
    let mut out = Vec::new();
    if m % 4 == 0 {
        let n = m / 4;
        for idx in 1..=2 * n {
            // alpha_{2(n-k)} -> t_{2k} alpha, alpha_{2(n-k)-1} -> t_{2k+1} beta
            if idx % 2 == 0 {
                let k = n - idx / 2;
                out.push((ring_a.from_poly(&t(2 * k)), ring_b.zero()));
            } else {
                let k = n - (idx + 1) / 2;
                out.push((ring_a.zero(), ring_b.from_poly(&t(2 * k + 1))));
            }
        }
    } else {
        let n = (m - 2) / 4;
        for idx in 1..=2 * n + 1 {
            // alpha_{2(n-k)+1} -> t_{2k} alpha, alpha_{2(n-k)} -> t_{2k+1} beta
            if idx % 2 == 1 {
                let k = n - (idx - 1) / 2;
                out.push((ring_a.from_poly(&t(2 * k)), ring_b.zero()));
            } else {
                let k = n - idx / 2;
                out.push((ring_a.zero(), ring_b.from_poly(&t(2 * k + 1))));
            }
        }
    }
    Ok(out)
}

/// The even-case identification as a matrix from `Z pi` to the lattice.
pub fn psi_even_matrix(m: usize) -> Result<LinMap, CoxeterError> {
    let imgs = psi_even_images(m, true)?;
    let cols: Vec<Vec<i64>> = imgs
        .iter()
        .map(|(c, d)| {
            let mut v = c.coords().to_vec();
            v.extend_from_slice(d.coords());
            v
        })
        .collect();
    Ok(LinMap::from_columns(&cols))
}

/// Whether `psi s_k = g_k psi` for each matched generator `g_k`, where
/// `s_k` are the classical reflections of `ty` on `Z pi`.
pub fn equivariant(psi: &LinMap, classical: &[LinMap], gens: &[LinMap], module_to_classical: bool) -> bool {
    classical.iter().zip(gens).all(|(s, g)| {
        if module_to_classical {
            psi.compose(g) == s.compose(psi)
        } else {
            psi.compose(s) == g.compose(psi)
        }
    })
}

/// Root system of odd m: preimages of the roots of `A_2n` under `psi`.
pub fn roots_odd(m: usize) -> Result<Vec<Vec<i64>>, CoxeterError> {
    if m % 2 == 0 || m < 3 {
        return Err(CoxeterError::BadM(m));
    }
    let n = (m - 1) / 2;
    let inv = psi_matrix(n).transpose();
    let mut roots = Vec::new();
    for i in 0..2 * n {
        for j in i..2 * n {
            let mut v = vec![0i64; 2 * n];
            for c in v[i..=j].iter_mut() {
                *c = 1;
            }
            let r = inv.apply(&v);
            roots.push(r.iter().map(|c| -c).collect());
            roots.push(r);
        }
    }
    roots.sort();
    Ok(roots)
}

fn orbits(points: &[Vec<i64>], gens: &[LinMap]) -> Vec<Vec<Vec<i64>>> {
    let mut left: HashSet<Vec<i64>> = points.iter().cloned().collect();
    let mut out = Vec::new();
    let mut sorted = points.to_vec();
    sorted.sort();
    for p in sorted {
        if !left.contains(&p) {
            continue;
        }
        let mut orbit = vec![p.clone()];
        left.remove(&p);
        let mut k = 0;
        while k < orbit.len() {
            for g in gens {
                let q = g.apply(&orbit[k]);
                if left.remove(&q) {
                    orbit.push(q);
                }
            }
            k += 1;
        }
        orbit.sort();
        out.push(orbit);
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct RootReport {
    pub m: usize,
    pub count: usize,
    pub w_orbit_sizes: Vec<usize>,
    pub wa_orbit_sizes: Vec<usize>,
    pub stable: bool,
    /// The orbit of the simple roots under `W` is the short roots and the
    /// long ones are `x` times them.
    pub short_orbit_of_simple: bool,
}

pub fn root_orbit(m: usize) -> Result<RootReport, CoxeterError> {
    let roots = roots_odd(m)?;
    let lat = RankTwoLattice::new(m)?;
    let gens = lat.aug_gens();
    let w = [lat.simple_reflection(0), lat.simple_reflection(1)];
    let set: HashSet<&Vec<i64>> = roots.iter().collect();
    let stable = gens.iter().all(|g| roots.iter().all(|r| set.contains(&g.apply(r))));
    let w_orbits = orbits(&roots, &w);
    let wa_orbits = orbits(&roots, &gens);
    let alpha = lat.join(&lat.ring_alpha.one(), &lat.ring_beta.zero());
    let short = w_orbits.iter().find(|o| o.contains(&alpha)).cloned().unwrap_or_default();
    let beta = lat.join(&lat.ring_alpha.zero(), &lat.ring_beta.one());
    Ok(RootReport {
        m,
        count: roots.len(),
        w_orbit_sizes: w_orbits.iter().map(Vec::len).collect(),
        wa_orbit_sizes: wa_orbits.iter().map(Vec::len).collect(),
        stable,
        short_orbit_of_simple: short.contains(&beta) && short.len() == 2 * m,
    })
}

/// Render a golden-lattice vector `(a, b, c, d) = a alpha + b g alpha + c
/// beta + d g beta`.
pub fn golden_label(v: &[i64]) -> String {
    let names = ["a", "ga", "b", "gb"];
    let mut s = String::new();
    for (c, name) in v.iter().zip(names) {
        if *c == 0 {
            continue;
        }
        let sign = if *c < 0 { "-" } else if s.is_empty() { "" } else { "+" };
        let mag = c.abs();
        s.push_str(sign);
        if mag != 1 {
            s.push_str(&mag.to_string());
        }
        s.push_str(name);
    }
    if s.is_empty() {
        "0".into()
    } else {
        s
    }
}

/// Action of one augmented generator on the golden roots: fixed roots and
/// swapped pairs.
#[derive(Clone, Debug, Serialize)]
pub struct RootActionRow {
    pub generator: String,
    pub fixed: Vec<Vec<i64>>,
    pub swapped: Vec<(Vec<i64>, Vec<i64>)>,
}

pub fn golden_action_table() -> Vec<RootActionRow> {
    let lat = RankTwoLattice::new(5).expect("m = 5");
    let roots = roots_odd(5).expect("m = 5");
    let mut out = Vec::new();
    for (root, name) in [(0, "alpha"), (1, "beta")] {
        for i in 0..2 {
            let g = lat.aug_reflection(root, i);
            let mut fixed = Vec::new();
            let mut swapped = Vec::new();
            for r in &roots {
                let img = g.apply(r);
                if img == *r {
                    fixed.push(r.clone());
                } else if *r < img {
                    swapped.push((r.clone(), img));
                }
            }
            out.push(RootActionRow {
                generator: format!("s_{name},{}", i + 1),
                fixed,
                swapped,
            });
        }
    }
    out
}

/// The listed action of `s_{alpha,1}` and `s_{alpha,2}` on positive roots,
/// as (fixed, swapped pairs) in golden coordinates.
#[allow(clippy::type_complexity)]
pub fn expected_alpha_action() -> [(Vec<[i64; 4]>, Vec<([i64; 4], [i64; 4])>); 2] {
    [
        (
            vec![[0, 1, 0, 0], [0, 0, 1, 0], [0, 1, 1, 0]],
            vec![
                ([1, 0, 0, 0], [-1, 0, 0, 0]),
                ([1, 0, 0, 1], [0, 0, 0, 1]),
                ([0, 1, 0, 1], [1, 1, 0, 1]),
                ([0, 1, 1, 1], [1, 1, 1, 1]),
            ],
        ),
        (
            vec![[1, 0, 0, 0], [1, 1, 1, 1], [0, 1, 1, 1]],
            vec![
                ([0, 1, 0, 0], [0, -1, 0, 0]),
                ([1, 0, 0, 1], [1, 1, 0, 1]),
                ([0, 1, 1, 0], [0, 0, 1, 0]),
                ([0, 0, 0, 1], [0, 1, 0, 1]),
            ],
        ),
    ]
}

/// Compare the computed action of `s_{alpha,i}` with the listed one:
/// every listed fixed root and its negative are fixed, every listed pair
/// and its negative are swapped, and nothing else moves or stays.
pub fn alpha_action_matches() -> bool {
    let table = golden_action_table();
    expected_alpha_action().iter().enumerate().all(|(i, (fixed, pairs))| {
        let row = &table[i];
        let mut want_fixed: HashSet<Vec<i64>> = HashSet::new();
        for f in fixed {
            want_fixed.insert(f.to_vec());
            want_fixed.insert(f.iter().map(|c| -c).collect());
        }
        let mut want_pairs: HashSet<(Vec<i64>, Vec<i64>)> = HashSet::new();
        for (a, b) in pairs {
            let (a, b) = (a.to_vec(), b.to_vec());
            let na: Vec<i64> = a.iter().map(|c| -c).collect();
            let nb: Vec<i64> = b.iter().map(|c| -c).collect();
            want_pairs.insert(if a < b { (a, b) } else { (b, a) });
            want_pairs.insert(if na < nb { (na, nb) } else { (nb, na) });
        }
        let got_fixed: HashSet<Vec<i64>> = row.fixed.iter().cloned().collect();
        let got_pairs: HashSet<(Vec<i64>, Vec<i64>)> = row.swapped.iter().cloned().collect();
        got_fixed == want_fixed && got_pairs == want_pairs
    })
}

/// Scalar products of four dodecahedron vertices, exact over `Q[g]`.
#[derive(Clone, Debug, Serialize)]
pub struct DodecaReport {
    pub gram: Vec<Vec<String>>,
    pub checks: Vec<(String, bool)>,
}

impl DodecaReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }
}

pub fn dodeca_check() -> DodecaReport {
    let ring = odd_ring_g(5).expect("m = 5");
    let q = |a: i64, b: i64, den: i64| RatElem::new(ring.elem(vec![a, b]).expect("rank 2"), den);
    // vertex = (x, k * c, z) with c^2 = 1 - g^2/4 = (3 - g)/4
    let c2 = q(3, -1, 4);
    let g2 = q(1, 1, 1);
    let verts: [(RatElem, RatElem, RatElem); 4] = [
        (q(1, 0, 1), q(0, 0, 1), q(1, 1, 2)),
        (&g2 * &q(-1, 0, 2), q(0, 1, 1), q(-1, 1, 2)),
        (q(0, 1, 1), q(0, 0, 1), q(-1, 1, 2)),
        (q(0, -1, 2), q(1, 0, 1), q(1, 1, 2)),
    ];
    let dot = |a: &(RatElem, RatElem, RatElem), b: &(RatElem, RatElem, RatElem)| {
        &(&(&a.0 * &b.0) + &(&(&a.1 * &b.1) * &c2)) + &(&a.2 * &b.2)
    };
    let gram: Vec<Vec<RatElem>> = verts.iter().map(|a| verts.iter().map(|b| dot(a, b)).collect()).collect();
    let norm = q(6, 3, 4);
    let small = q(-2, -1, 4);
    let big = q(0, 5, 4);
    let mut checks = Vec::new();
    for (i, row) in gram.iter().enumerate() {
        checks.push((format!("(v{0},v{0}) = 3(g+2)/4", i + 1), row[i] == norm));
    }
    checks.push(("(v1,v2) = -1/2 - g/4".into(), gram[0][1] == small));
    checks.push(("(v3,v4) = -1/2 - g/4".into(), gram[2][3] == small));
    checks.push(("(v1,v4) = 1/2 + g/4".into(), gram[0][3] == -&small));
    checks.push(("(v1,v3) = 5g/4".into(), gram[0][2] == big));
    checks.push(("(v2,v4) = 5g/4".into(), gram[1][3] == big));
    checks.push(("(v2,v3) = -5g/4".into(), gram[1][2] == -&big));
    // planar parts: v3 = g v1 and v2 = g v4
    let g = q(0, 1, 1);
    checks.push((
        "planar v3 = g v1".into(),
        verts[2].0 == &g * &verts[0].0 && verts[2].1 == &g * &verts[0].1,
    ));
    checks.push((
        "planar v2 = g v4".into(),
        verts[1].0 == &g * &verts[3].0 && verts[1].1 == &g * &verts[3].1,
    ));
    DodecaReport {
        gram: gram.iter().map(|r| r.iter().map(|e| e.to_string()).collect()).collect(),
        checks,
    }
}

/// Counts of group elements by word length from the identity.
pub fn length_profile(gens: &[LinMap]) -> Vec<usize> {
    let n = gens.first().map_or(0, LinMap::dim);
    let mut dist: HashMap<LinMap, usize> = HashMap::from([(LinMap::identity(n), 0)]);
    let mut frontier = vec![LinMap::identity(n)];
    let mut profile = vec![1];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for w in &frontier {
            for s in gens {
                let c = w.compose(s);
                if !dist.contains_key(&c) {
                    dist.insert(c.clone(), profile.len());
                    next.push(c);
                }
            }
        }
        if !next.is_empty() {
            profile.push(next.len());
        }
        frontier = next;
    }
    profile
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_generators() {
        let lat = RankTwoLattice::new(5).unwrap();
        let s_a1 = lat.aug_reflection(0, 0);
        let beta = vec![0, 0, 1, 0];
        assert_eq!(s_a1.apply(&beta), beta);
        assert_eq!(s_a1.compose(&lat.aug_reflection(0, 1)), lat.simple_reflection(0));
    }

    #[test]
    fn small_orders() {
        assert_eq!(group_closure(&aug_gens(5).unwrap(), DEFAULT_CAP).unwrap().len(), 120);
        let lat = RankTwoLattice::new(5).unwrap();
        let w = [lat.simple_reflection(0), lat.simple_reflection(1)];
        assert_eq!(group_closure(&w, DEFAULT_CAP).unwrap().len(), 10);
        assert_eq!(aug_gens(8).unwrap().len(), 4);
    }

    #[test]
    fn rotation_polys() {
        assert!(rotation_polys_match(12));
    }

    #[test]
    fn dodecahedron() {
        let r = dodeca_check();
        assert!(r.passed(), "{r:?}");
    }
}
