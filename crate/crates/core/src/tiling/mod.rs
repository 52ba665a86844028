//! Triangles of the regular m-gon, exact lengths and areas in the chord
//! ring, star products along equal edges, decompositions and reach search.

mod decompose;
mod reach;

use std::fmt;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::chordring::{chord_in, chord_ring, ChordError, QuotientRing, RingElem};

pub use decompose::{
    decompose, method_sweep, natural_whole, verify, Decomposition, Method, Part, PointTag, SweepReport,
    VerifyReport, FLOAT_TOL,
};
pub use reach::{all_triangles, closure_reach, monoid_factor, Derivation, Reach};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TilingError {
    #[error("angles {0:?} do not form a triangle of the {1}-gon")]
    BadTriangle(Vec<usize>, usize),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("edge lengths differ: {0} vs {1}")]
    LengthMismatch(String, String),
    #[error("pieces overlap: {0}")]
    Overlap(String),
    #[error("conservation check failed: {0}")]
    Conservation(String),
    #[error(transparent)]
    Ring(#[from] ChordError),
}

/// Angles in units of `pi/m`, stored in the least cyclic rotation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Triangle {
    m: usize,
    angles: [usize; 3],
}

fn least_rotation(a: [usize; 3]) -> [usize; 3] {
    let rots = [a, [a[1], a[2], a[0]], [a[2], a[0], a[1]]];
    *rots.iter().min().expect("three rotations")
}

impl Triangle {
    pub fn new(m: usize, angles: [usize; 3]) -> Result<Triangle, TilingError> {
        if m < 3 || angles.iter().any(|&a| a == 0) || angles.iter().sum::<usize>() != m {
            return Err(TilingError::BadTriangle(angles.to_vec(), m));
        }
        Ok(Triangle {
            m,
            angles: least_rotation(angles),
        })
    }

    /// `T_i = T{1, i, m-i-1}`.
    pub fn indexed(m: usize, i: usize) -> Result<Triangle, TilingError> {
        if i == 0 || i + 1 >= m {
            return Err(TilingError::BadTriangle(vec![1, i], m));
        }
        Triangle::new(m, [1, i, m - i - 1])
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn angles(&self) -> [usize; 3] {
        self.angles
    }

    /// The triangle with reversed orientation.
    pub fn mirror(&self) -> Triangle {
        let [a, b, c] = self.angles;
        Triangle {
            m: self.m,
            angles: least_rotation([a, c, b]),
        }
    }

    pub fn is_isosceles(&self) -> bool {
        let [a, b, c] = self.angles;
        a == b || b == c || a == c
    }

    /// True for the primed member of a mirror pair.
    pub fn parity(&self) -> bool {
        self.angles > self.mirror().angles
    }

    /// Equal up to orientation.
    pub fn same_up_to_mirror(&self, other: &Triangle) -> bool {
        self == other || *self == other.mirror()
    }

    /// Rotation of the stored angles starting at index `r`.
    pub fn rotated(&self, r: usize) -> [usize; 3] {
        let a = self.angles;
        [a[r % 3], a[(r + 1) % 3], a[(r + 2) % 3]]
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.angles;
        write!(f, "T{{{a},{b},{c}}}")
    }
}

/// Chord `p_k` as a length in the ring of the m-gon.
pub(crate) fn p(ring: &Arc<QuotientRing>, k: usize) -> RingElem {
    chord_in(ring, k)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScaledTriangle {
    pub base: Triangle,
    pub scale: RingElem,
}

impl ScaledTriangle {
    pub fn new(base: Triangle, scale: RingElem) -> ScaledTriangle {
        ScaledTriangle { base, scale }
    }

    pub fn unit(base: Triangle) -> Result<ScaledTriangle, TilingError> {
        let ring = chord_ring(base.m)?;
        Ok(ScaledTriangle { base, scale: ring.one() })
    }

    /// `p_k T`.
    pub fn chord_scaled(base: Triangle, k: usize) -> Result<ScaledTriangle, TilingError> {
        let ring = chord_ring(base.m)?;
        Ok(ScaledTriangle {
            base,
            scale: p(&ring, k),
        })
    }

    pub fn ring(&self) -> &Arc<QuotientRing> {
        self.scale.ring()
    }

    /// Side opposite the stored angle `k`.
    pub fn side(&self, k: usize) -> RingElem {
        &self.scale * &p(self.ring(), self.base.angles[k] - 1)
    }

    /// Normalized area `scale^2 p_{a-1} p_{b-1} p_{c-1}`; the true area is
    /// this times `sin(pi/m)/2`.
    pub fn area(&self) -> RingElem {
        area_of(&self.scale, self.base.angles)
    }

    pub fn mirror(&self) -> ScaledTriangle {
        ScaledTriangle {
            base: self.base.mirror(),
            scale: self.scale.clone(),
        }
    }
}

pub(crate) fn area_of(scale: &RingElem, angles: [usize; 3]) -> RingElem {
    let ring = scale.ring();
    let mut a = scale * scale;
    for k in angles {
        a = &a * &p(ring, k - 1);
    }
    a
}

impl fmt::Display for ScaledTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.scale == self.ring().one() {
            write!(f, "{}", self.base)
        } else {
            write!(f, "({}){}", self.scale, self.base)
        }
    }
}

/// Closed polygon with integer angles (units of `pi/m`, straight = m) and
/// exact side lengths; `sides[i]` runs from vertex `i` to `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Polygon {
    pub m: usize,
    pub angles: Vec<usize>,
    pub sides: Vec<RingElem>,
}

impl Polygon {
    pub fn from_triangle(t: &ScaledTriangle) -> Polygon {
        let a = t.base.angles;
        Polygon {
            m: t.base.m,
            angles: a.to_vec(),
            sides: vec![t.side(2), t.side(0), t.side(1)],
        }
    }

    pub fn len(&self) -> usize {
        self.angles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.angles.is_empty()
    }

    /// Drop straight vertices, merging their sides.
    pub fn merged(&self) -> Polygon {
        let n = self.len();
        let Some(start) = (0..n).find(|&i| self.angles[i] != self.m) else {
            return self.clone();
        };
        let mut angles = Vec::new();
        let mut sides: Vec<RingElem> = Vec::new();
        for step in 0..n {
            let i = (start + step) % n;
            if self.angles[i] == self.m {
                let last = sides.last_mut().expect("start is not straight");
                *last = &*last + &self.sides[i];
            } else {
                angles.push(self.angles[i]);
                sides.push(self.sides[i].clone());
            }
        }
        Polygon { m: self.m, angles, sides }
    }

    /// Same merged shape up to cyclic relabelling.
    pub fn same_shape(&self, other: &Polygon) -> bool {
        let a = self.merged();
        let b = other.merged();
        let n = a.len();
        n == b.len()
            && (0..n).any(|r| (0..n).all(|i| a.angles[i] == b.angles[(i + r) % n] && a.sides[i] == b.sides[(i + r) % n]))
    }

    /// Whether the merged polygon is the given scaled triangle, compared by
    /// multiplication only.
    pub fn matches(&self, t: &ScaledTriangle) -> bool {
        self.same_shape(&Polygon::from_triangle(t))
    }

    pub fn area_f64(&self) -> f64 {
        let pts = self.float_vertices();
        let n = pts.len();
        (0..n)
            .map(|i| {
                let (a, b) = (pts[i], pts[(i + 1) % n]);
                a.0 * b.1 - a.1 * b.0
            })
            .sum::<f64>()
            .abs()
            / 2.0
    }

    /// Vertices walked clockwise from the origin along the positive x axis.
    pub fn float_vertices(&self) -> Vec<(f64, f64)> {
        let step = std::f64::consts::PI / self.m as f64;
        let mut pos = (0.0, 0.0);
        let mut dir = 0.0f64;
        let mut out = Vec::with_capacity(self.len());
        for i in 0..self.len() {
            out.push(pos);
            let l = self.sides[i].eval_f64();
            pos = (pos.0 + l * dir.cos(), pos.1 + l * dir.sin());
            let next = (i + 1) % self.len();
            dir -= std::f64::consts::PI - self.angles[next] as f64 * step;
        }
        out
    }

    /// Closure and simplicity of the float boundary.
    pub fn check_simple(&self) -> Result<(), TilingError> {
        let pts = self.float_vertices();
        let n = pts.len();
        let size: f64 = self.sides.iter().map(RingElem::eval_f64).sum();
        let last = pts[n - 1];
        let l = self.sides[n - 1].eval_f64();
        let step = std::f64::consts::PI / self.m as f64;
        let turn: f64 = (1..n).map(|i| std::f64::consts::PI - self.angles[i] as f64 * step).sum();
        let end = (last.0 + l * (-turn).cos(), last.1 + l * (-turn).sin());
        if (end.0.powi(2) + end.1.powi(2)).sqrt() > FLOAT_TOL * size.max(1.0) {
            return Err(TilingError::Overlap("boundary does not close".into()));
        }
        for i in 0..n {
            for j in i + 1..n {
                if j == i + 1 || (i == 0 && j == n - 1) {
                    continue;
                }
                if segments_touch(pts[i], pts[(i + 1) % n], pts[j], pts[(j + 1) % n], FLOAT_TOL * size.max(1.0)) {
                    return Err(TilingError::Overlap(format!("edges {i} and {j} meet")));
                }
            }
        }
        Ok(())
    }
}

fn cross(o: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

fn seg_dist_point(a: (f64, f64), b: (f64, f64), p: (f64, f64)) -> f64 {
    let (dx, dy) = (b.0 - a.0, b.1 - a.1);
    let len2 = dx * dx + dy * dy;
    let t = if len2 == 0.0 { 0.0 } else { (((p.0 - a.0) * dx + (p.1 - a.1) * dy) / len2).clamp(0.0, 1.0) };
    let q = (a.0 + t * dx, a.1 + t * dy);
    ((p.0 - q.0).powi(2) + (p.1 - q.1).powi(2)).sqrt()
}

pub(crate) fn segments_touch(a: (f64, f64), b: (f64, f64), c: (f64, f64), d: (f64, f64), tol: f64) -> bool {
    let d1 = cross(a, b, c);
    let d2 = cross(a, b, d);
    let d3 = cross(c, d, a);
    let d4 = cross(c, d, b);
    if ((d1 > tol && d2 < -tol) || (d1 < -tol && d2 > tol)) && ((d3 > tol && d4 < -tol) || (d3 < -tol && d4 > tol)) {
        return true;
    }
    seg_dist_point(a, b, c) < tol
        || seg_dist_point(a, b, d) < tol
        || seg_dist_point(c, d, a) < tol
        || seg_dist_point(c, d, b) < tol
}

/// Glue side `e` of `a` to side `f` of `b`, traversed in opposite
/// directions so the pieces lie on opposite sides.
pub fn star(a: &Polygon, b: &Polygon, e: usize, f: usize) -> Result<Polygon, TilingError> {
    if a.m != b.m {
        return Err(TilingError::Precondition(format!("m = {} vs {}", a.m, b.m)));
    }
    if e >= a.len() || f >= b.len() {
        return Err(TilingError::Precondition("edge index out of range".into()));
    }
    if a.sides[e] != b.sides[f] {
        return Err(TilingError::LengthMismatch(a.sides[e].to_string(), b.sides[f].to_string()));
    }
    let (na, nb) = (a.len(), b.len());
    let m = a.m;
    let mut angles = Vec::with_capacity(na + nb - 2);
    let mut sides = Vec::with_capacity(na + nb - 2);
    // a's vertex e+1 meets b's vertex f
    angles.push(a.angles[(e + 1) % na] + b.angles[f]);
    sides.push(a.sides[(e + 1) % na].clone());
    for k in 2..na {
        let i = (e + k) % na;
        angles.push(a.angles[i]);
        sides.push(a.sides[i].clone());
    }
    // a's vertex e meets b's vertex f+1
    angles.push(a.angles[e] + b.angles[(f + 1) % nb]);
    sides.push(b.sides[(f + 1) % nb].clone());
    for k in 2..nb {
        let i = (f + k) % nb;
        angles.push(b.angles[i]);
        sides.push(b.sides[i].clone());
    }
    if angles.iter().any(|&x| x >= 2 * m) {
        return Err(TilingError::Overlap("angle sum reaches a full turn".into()));
    }
    let out = Polygon { m, angles, sides };
    out.check_simple()?;
    Ok(out)
}

/// Every valid gluing of `a` and `b` along one pair of equal edges.
pub fn star_all(a: &Polygon, b: &Polygon) -> Vec<Polygon> {
    let mut out: Vec<Polygon> = Vec::new();
    for e in 0..a.len() {
        for f in 0..b.len() {
            if let Ok(p) = star(a, b, e, f) {
                if !out.iter().any(|q| q.same_shape(&p) && q.len() == p.len()) {
                    out.push(p);
                }
            }
        }
    }
    out
}

/// `p_t p_i = sum_{j=0}^{t} p_{i+t-2j}` in the chord ring of m, for all
/// `t <= i <= m - t - 3`.
pub fn product_identity_holds(m: usize) -> Result<bool, TilingError> {
    let ring = chord_ring(m)?;
    for t in 0..m {
        for i in t..m {
            if i + t + 3 > m {
                continue;
            }
            let lhs = &p(&ring, t) * &p(&ring, i);
            let rhs = (0..=t).fold(ring.zero(), |acc, j| &acc + &p(&ring, i + t - 2 * j));
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `T_i * T_{i+1} = p_i T_1`, searched over all edge pairs and orientations.
pub fn consecutive_pair_holds(m: usize, i: usize) -> Result<bool, TilingError> {
    let ti = Triangle::indexed(m, i)?;
    let tj = Triangle::indexed(m, i + 1)?;
    let target = ScaledTriangle::chord_scaled(Triangle::indexed(m, 1)?, i)?;
    for a in [ti, ti.mirror()] {
        for b in [tj, tj.mirror()] {
            let pa = Polygon::from_triangle(&ScaledTriangle::unit(a)?);
            let pb = Polygon::from_triangle(&ScaledTriangle::unit(b)?);
            if star_all(&pa, &pb).iter().any(|q| q.matches(&target)) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_rotation() {
        let t = Triangle::new(9, [5, 1, 3]).unwrap();
        assert_eq!(t.angles(), [1, 3, 5]);
        assert_eq!(t.mirror().angles(), [1, 5, 3]);
        assert!(!t.parity());
        assert!(t.mirror().parity());
        assert!(Triangle::new(5, [1, 2, 2]).unwrap().is_isosceles());
        assert!(Triangle::new(7, [2, 2, 2]).is_err());
    }

    #[test]
    fn golden_pair_star() {
        let t1 = ScaledTriangle::unit(Triangle::indexed(5, 1).unwrap()).unwrap();
        let t2 = ScaledTriangle::unit(Triangle::indexed(5, 2).unwrap()).unwrap();
        let g_t1 = ScaledTriangle::chord_scaled(t1.base, 1).unwrap();
        let prods = star_all(&Polygon::from_triangle(&t1), &Polygon::from_triangle(&t2));
        assert!(prods.iter().any(|q| q.matches(&g_t1)));
    }

    #[test]
    fn length_mismatch() {
        let t1 = ScaledTriangle::unit(Triangle::indexed(5, 1).unwrap()).unwrap();
        let a = Polygon::from_triangle(&t1);
        // sides of T{1,1,3}: g, 1, 1 in listing order
        assert!(matches!(star(&a, &a, 0, 1), Err(TilingError::LengthMismatch(..))));
    }
}
