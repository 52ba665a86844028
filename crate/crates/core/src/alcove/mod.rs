//! Images of `A_2n` alcoves in the rank-two plane over `Z[g]`, the twelve
//! pentagonal shape classes, and Golden Pair tilings driven by reflection
//! walks through alcoves.

mod pentagonal;
mod tile;

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::chordring::{factor, odd_ring_g, BasisKind, ChordError, QuotientRing, RingElem};

pub use pentagonal::{
    classify, compatible_step, fundamental_alcove, in_root_lattice, pair_for_shared, root_in_weights, shape_classes,
    weight_to_roots, Alcove, ShapeClass, ShapeClasses, ShapeKind, ShapeLabel, Weight4,
};
pub use tile::{
    aperiodic_tile, find_tiling25, verify_golden, Diagonal, GoldenKind, GoldenTile, GoldenTiling, GoldenCheck, Region,
    Tiling25, Walk,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlcoveError {
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("reflections {0} and {1} do not form a compatible pair")]
    Incompatible(usize, usize),
    #[error("search exhausted: {0}")]
    SearchExhausted(String),
    #[error("walk: {0}")]
    Walk(String),
    #[error("region: {0}")]
    Region(String),
    #[error(transparent)]
    Ring(#[from] ChordError),
}

/// Which basis the two coordinates of a [`PlanarPoint`] refer to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Frame {
    /// Fundamental weights `varpi_alpha, varpi_beta`.
    Weight,
    /// Simple roots `alpha, beta`.
    Root,
}

/// A point `a e_1 + b e_2` of the plane with exact coordinates in the odd
/// chord ring and its floating position. In the weight frame
/// `varpi_alpha = (1, 0)` and `varpi_beta = (cos(pi/m), sin(pi/m))`.
#[derive(Clone)]
pub struct PlanarPoint {
    frame: Frame,
    a: RingElem,
    b: RingElem,
    xy: [f64; 2],
}

impl PlanarPoint {
    pub fn new(frame: Frame, a: RingElem, b: RingElem) -> PlanarPoint {
        let x = a.ring().point();
        let (c, s) = (x / 2.0, (1.0 - x * x / 4.0).sqrt());
        let (wa, wb) = match frame {
            Frame::Weight => (a.eval_f64(), b.eval_f64()),
            Frame::Root => {
                let (ra, rb) = (a.eval_f64(), b.eval_f64());
                (2.0 * ra - x * rb, 2.0 * rb - x * ra)
            }
        };
        PlanarPoint {
            frame,
            a,
            b,
            xy: [wa + wb * c, wb * s],
        }
    }

    pub fn origin(ring: &Arc<QuotientRing>) -> PlanarPoint {
        PlanarPoint::new(Frame::Weight, ring.zero(), ring.zero())
    }

    pub fn frame(&self) -> Frame {
        self.frame
    }

    pub fn a(&self) -> &RingElem {
        &self.a
    }

    pub fn b(&self) -> &RingElem {
        &self.b
    }

    pub fn xy(&self) -> [f64; 2] {
        self.xy
    }

    pub fn ring(&self) -> &Arc<QuotientRing> {
        self.a.ring()
    }

    /// The same point in the weight frame.
    pub fn to_weight(&self) -> PlanarPoint {
        match self.frame {
            Frame::Weight => self.clone(),
            Frame::Root => {
                let x = self.ring().gen();
                let a = &self.a.scale(2) - &(&x * &self.b);
                let b = &self.b.scale(2) - &(&x * &self.a);
                PlanarPoint::new(Frame::Weight, a, b)
            }
        }
    }

    fn weight_coords(&self) -> (RingElem, RingElem) {
        let w = self.to_weight();
        (w.a, w.b)
    }

    pub fn add(&self, other: &PlanarPoint) -> PlanarPoint {
        let (a1, b1) = self.weight_coords();
        let (a2, b2) = other.weight_coords();
        PlanarPoint::new(Frame::Weight, &a1 + &a2, &b1 + &b2)
    }

    pub fn sub(&self, other: &PlanarPoint) -> PlanarPoint {
        let (a1, b1) = self.weight_coords();
        let (a2, b2) = other.weight_coords();
        PlanarPoint::new(Frame::Weight, &a1 - &a2, &b1 - &b2)
    }

    pub fn scale(&self, c: i64) -> PlanarPoint {
        PlanarPoint::new(self.frame, self.a.scale(c), self.b.scale(c))
    }

    /// Squared length `a^2 + b^2 + x ab` in the weight frame.
    pub fn norm2(&self) -> RingElem {
        let (a, b) = self.weight_coords();
        let x = a.ring().gen();
        &(&(&a * &a) + &(&b * &b)) + &(&x * &(&a * &b))
    }

    pub fn dist2(&self, other: &PlanarPoint) -> RingElem {
        self.sub(other).norm2()
    }

    /// Weight-frame determinant, a positive multiple of the signed area
    /// spanned by the two vectors.
    pub fn det(&self, other: &PlanarPoint) -> RingElem {
        let (a1, b1) = self.weight_coords();
        let (a2, b2) = other.weight_coords();
        &(&a1 * &b2) - &(&b1 * &a2)
    }

    /// Weight-frame coordinate vectors, used as an exact key.
    pub fn key(&self) -> (Vec<i64>, Vec<i64>) {
        let (a, b) = self.weight_coords();
        (a.coords().to_vec(), b.coords().to_vec())
    }

    /// The augmented reflection `s_{root,i}` (root 0 for alpha):
    /// `v - (root^vee v)_i g_i root`, with the pairing read in the `g` basis.
    pub fn reflect(&self, root: usize, i: usize) -> PlanarPoint {
        let (a, b) = self.weight_coords();
        let ring = a.ring().clone();
        let x = ring.gen();
        let gi = ring.basis_elem(i);
        let c = if root == 0 { a.coords()[i] } else { b.coords()[i] };
        let step = gi.scale(c);
        let (da, db) = if root == 0 {
            (step.scale(2), -&(&x * &step))
        } else {
            (-&(&x * &step), step.scale(2))
        };
        PlanarPoint::new(Frame::Weight, &a - &da, &b - &db)
    }
}

impl PartialEq for PlanarPoint {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}

impl Eq for PlanarPoint {}

impl std::hash::Hash for PlanarPoint {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.key().hash(state);
    }
}

impl fmt::Debug for PlanarPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

impl fmt::Display for PlanarPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (e1, e2) = match self.frame {
            Frame::Weight => ("wa", "wb"),
            Frame::Root => ("a", "b"),
        };
        write!(f, "({})*{e1} + ({})*{e2}", self.a, self.b)
    }
}

impl Serialize for PlanarPoint {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("PlanarPoint", 4)?;
        st.serialize_field("frame", &self.frame)?;
        st.serialize_field("a", self.a.coords())?;
        st.serialize_field("b", self.b.coords())?;
        st.serialize_field("xy", &self.xy)?;
        st.end()
    }
}

/// Ring `Z[g]` for `m = 2n + 1` in the `g_i` basis.
pub fn plane_ring(n: usize) -> Result<Arc<QuotientRing>, AlcoveError> {
    if n == 0 {
        return Err(AlcoveError::Precondition("n must be at least 1".into()));
    }
    Ok(odd_ring_g(2 * n + 1)?)
}

/// Image of a weight of `A_2n` given in fundamental-weight coordinates:
/// `varpi_{2i+1} -> g_i varpi_alpha` and `varpi_{2n-2i} -> g_i varpi_beta`.
pub fn psi_prime(ring: &Arc<QuotientRing>, c: &[i64]) -> PlanarPoint {
    let n = ring.rank();
    assert_eq!(c.len(), 2 * n, "weight of A_2n expected");
    let a = (0..n).map(|i| c[2 * i]).collect();
    let b = (0..n).map(|i| c[2 * n - 2 * i - 1]).collect();
    PlanarPoint::new(
        Frame::Weight,
        ring.elem(a).expect("arity"),
        ring.elem(b).expect("arity"),
    )
}

/// Inverse of [`psi_prime`] on weight-frame points.
pub fn psi_prime_inverse(p: &PlanarPoint) -> Vec<i64> {
    let (a, b) = p.weight_coords();
    let n = a.ring().rank();
    let mut c = vec![0; 2 * n];
    for i in 0..n {
        c[2 * i] = a.coords()[i];
        c[2 * n - 2 * i - 1] = b.coords()[i];
    }
    c
}

/// The points `x_0, ..., x_{2n+1}`: `x_0 = x_{2n+1} = 0` and `x_i` the image
/// of the `i`-th fundamental weight.
pub fn fundamental_image(n: usize) -> Result<Vec<PlanarPoint>, AlcoveError> {
    let ring = plane_ring(n)?;
    let mut out = vec![PlanarPoint::origin(&ring)];
    for i in 0..2 * n {
        let mut c = vec![0; 2 * n];
        c[i] = 1;
        out.push(psi_prime(&ring, &c));
    }
    out.push(PlanarPoint::origin(&ring));
    Ok(out)
}

/// Angle at the origin between the two rays carrying the `x_i`.
pub fn cone_angle(points: &[PlanarPoint]) -> f64 {
    let angles: Vec<f64> = points
        .iter()
        .filter(|p| p.xy()[0].hypot(p.xy()[1]) > 1e-12)
        .map(|p| p.xy()[1].atan2(p.xy()[0]))
        .collect();
    let hi = angles.iter().cloned().fold(f64::MIN, f64::max);
    let lo = angles.iter().cloned().fold(f64::MAX, f64::min);
    hi - lo
}

/// `(on_lines, total)`: `total` counts the distinct nonzero sums of distinct
/// weights of the defining representation, `on_lines` those whose image lies
/// on a line `Q[g] w varpi_alpha`. Collinearity is decided exactly in the
/// number field of `2 cos(pi/m)`; for composite `m` the image map is not
/// injective and sums are still counted one by one.
pub fn weight_line_count(n: usize) -> Result<(usize, usize), AlcoveError> {
    if !(1..=5).contains(&n) {
        return Err(AlcoveError::Precondition(format!("n = {n} outside 1..=5")));
    }
    let m = 2 * n + 1;
    let ring = plane_ring(n)?;
    let field = minimal_field(&ring, m)?;
    let to_field = |p: &PlanarPoint| -> (RingElem, RingElem) {
        (
            p.a.convert(&field).expect("factor of the modulus"),
            p.b.convert(&field).expect("factor of the modulus"),
        )
    };
    // weights of the defining representation in fundamental coordinates
    let weights: Vec<Vec<i64>> = (0..m)
        .map(|k| {
            let mut c = vec![0; 2 * n];
            if k < 2 * n {
                c[k] += 1;
            }
            if k > 0 {
                c[k - 1] -= 1;
            }
            c
        })
        .collect();
    let directions = line_directions(&field);
    let mut seen = HashSet::new();
    let mut on_lines = 0;
    for mask in 1u32..(1 << m) - 1 {
        let mut c = vec![0; 2 * n];
        for (k, w) in weights.iter().enumerate() {
            if mask & (1 << k) != 0 {
                for (ci, wi) in c.iter_mut().zip(w) {
                    *ci += wi;
                }
            }
        }
        if !seen.insert(c.clone()) {
            continue;
        }
        let (a, b) = to_field(&psi_prime(&ring, &c));
        if directions.iter().any(|(da, db)| (&(&a * db) - &(&b * da)).is_zero()) {
            on_lines += 1;
        }
    }
    Ok((on_lines, seen.len()))
}

/// `Q[x]/(f)` for the irreducible factor `f` of the chord modulus vanishing
/// at `2 cos(pi/m)`, in the power basis.
fn minimal_field(ring: &Arc<QuotientRing>, m: usize) -> Result<Arc<QuotientRing>, AlcoveError> {
    let point = ring.point();
    let f = factor(ring.modulus())?
        .into_iter()
        .filter(|f| f.degree().unwrap_or(0) >= 1)
        .min_by(|f, h| {
            f.eval_f64(point)
                .abs()
                .partial_cmp(&h.eval_f64(point).abs())
                .expect("finite")
        })
        .ok_or_else(|| AlcoveError::Precondition(format!("no factor for m = {m}")))?;
    Ok(QuotientRing::new(f, "x", BasisKind::Power, point)?)
}

/// Representatives of the `m` lines through the orbit of `varpi_alpha` under
/// `s_alpha(a, b) = (-a, b + xa)` and `s_beta(a, b) = (a + xb, -b)`.
fn line_directions(field: &Arc<QuotientRing>) -> Vec<(RingElem, RingElem)> {
    let x = field.gen();
    let mut orbit = vec![(field.one(), field.zero())];
    let mut i = 0;
    while i < orbit.len() {
        let (a, b) = orbit[i].clone();
        let images = [
            (-&a, &b + &(&x * &a)),
            (&a + &(&x * &b), -&b),
        ];
        for img in images {
            if !orbit.contains(&img) {
                orbit.push(img);
            }
        }
        i += 1;
    }
    let mut lines: Vec<(RingElem, RingElem)> = Vec::new();
    for (a, b) in orbit {
        if !lines.iter().any(|(c, d)| (&(&a * d) - &(&b * c)).is_zero()) {
            lines.push((a, b));
        }
    }
    lines
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shoelace_unit_steps() {
        for n in 1..=5 {
            let x = fundamental_image(n).unwrap();
            let one = x[0].ring().one();
            for w in x.windows(2) {
                assert_eq!(w[0].dist2(&w[1]), one, "n = {n}");
            }
        }
    }

    #[test]
    fn golden_rays() {
        let x = fundamental_image(2).unwrap();
        let ring = x[0].ring().clone();
        let g = ring.gen();
        assert_eq!(x[1], PlanarPoint::new(Frame::Weight, ring.one(), ring.zero()));
        assert_eq!(x[3], PlanarPoint::new(Frame::Weight, g, ring.zero()));
        assert!((cone_angle(&x) - std::f64::consts::PI / 5.0).abs() < 1e-12);
    }

    #[test]
    fn root_frame_round_trip() {
        let ring = plane_ring(2).unwrap();
        let alpha = PlanarPoint::new(Frame::Root, ring.one(), ring.zero());
        // alpha = 2 varpi_1 - varpi_2 maps to 2 varpi_alpha - g varpi_beta
        let w = psi_prime(&ring, &[2, -1, 0, 0]);
        assert_eq!(alpha.to_weight(), w);
        let d = alpha.to_weight().xy();
        assert!((d[0] - alpha.xy()[0]).abs() < 1e-12 && (d[1] - alpha.xy()[1]).abs() < 1e-12);
    }
}
