use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::cheb::{folded_even, p};
use super::poly::IntPoly;
use super::ChordError;

/// Which free basis coordinates of a quotient ring refer to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BasisKind {
    /// `1, x, ..., x^{r-1}`.
    Power,
    /// `P_0(x), ..., P_{r-1}(x)`, the chord basis.
    ChebyshevP,
    /// The chord basis reordered so that `g_i = P_{2i}` while `2i < r` and
    /// `P_{2k+1} = g_{r-1-k}`; for odd m this makes `g_0 = 1` and
    /// `g_{r-1} = x`.
    ChordG,
    /// Even-case basis for the alpha-side module: folded members of even
    /// index, highest first.
    EvenAlpha,
    /// Even-case basis for the beta-side module: folded members of odd index,
    /// highest first.
    EvenBeta,
}

impl BasisKind {
    pub fn name(self) -> &'static str {
        match self {
            BasisKind::Power => "power",
            BasisKind::ChebyshevP => "chebyshev-p",
            BasisKind::ChordG => "chord-g",
            BasisKind::EvenAlpha => "even-alpha",
            BasisKind::EvenBeta => "even-beta",
        }
    }

    fn elements(self, rank: usize) -> Vec<IntPoly> {
        let r = rank as i64;
        match self {
            BasisKind::Power => (0..rank).map(|k| IntPoly::monomial(1, k)).collect(),
            BasisKind::ChebyshevP => (0..r).map(p).collect(),
            BasisKind::ChordG => (0..r).map(|i| p(chord_g_index(r, i))).collect(),
            BasisKind::EvenAlpha => (1..=r)
                .map(|i| folded_even(2 * (r - i)).expect("nonnegative index"))
                .collect(),
            BasisKind::EvenBeta => (1..=r)
                .map(|i| folded_even(2 * (r - i) + 1).expect("nonnegative index"))
                .collect(),
        }
    }
}

/// Chord index of the `i`-th element of the `ChordG` basis of rank `r`.
pub fn chord_g_index(r: i64, i: i64) -> i64 {
    if 2 * i < r {
        2 * i
    } else {
        2 * (r - 1 - i) + 1
    }
}

/// `Z[v]/(f)` for a monic `f`, with coordinates in a declared free basis.
///
/// The ring is allowed to have zero divisors; equality of elements is
/// equality of coordinates. `point` is a real root used only for floating
/// evaluation (rendering and cross-checks).
#[derive(Clone, Debug)]
pub struct QuotientRing {
    modulus: IntPoly,
    var: &'static str,
    basis_kind: BasisKind,
    basis: Vec<IntPoly>,
    // inverse of the basis matrix; basis polys have distinct degrees and are monic
    inv: Vec<Vec<i64>>,
    point: f64,
}

impl PartialEq for QuotientRing {
    fn eq(&self, other: &Self) -> bool {
        self.modulus == other.modulus && self.basis_kind == other.basis_kind && self.var == other.var
    }
}

impl Eq for QuotientRing {}

impl QuotientRing {
    pub fn new(
        modulus: IntPoly,
        var: &'static str,
        basis_kind: BasisKind,
        point: f64,
    ) -> Result<Arc<Self>, ChordError> {
        let rank = match modulus.degree() {
            Some(d) if d >= 1 && modulus.is_monic() => d,
            _ => return Err(ChordError::BadModulus(modulus.to_string())),
        };
        let basis = basis_kind.elements(rank);
        // columns of M are power coordinates of the basis elements
        let mut m = vec![vec![0i64; rank]; rank];
        for (j, b) in basis.iter().enumerate() {
            for (i, row) in m.iter_mut().enumerate() {
                row[j] = b.coeff(i);
            }
        }
        let inv = invert_unimodular(&m).ok_or(ChordError::BadBasis)?;
        Ok(Arc::new(QuotientRing {
            modulus,
            var,
            basis_kind,
            basis,
            inv,
            point,
        }))
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn modulus(&self) -> &IntPoly {
        &self.modulus
    }

    pub fn var(&self) -> &'static str {
        self.var
    }

    pub fn basis_kind(&self) -> BasisKind {
        self.basis_kind
    }

    pub fn basis_polys(&self) -> &[IntPoly] {
        &self.basis
    }

    pub fn point(&self) -> f64 {
        self.point
    }

    pub fn describe(&self) -> String {
        format!(
            "Z[{v}]/({m}) in the {b} basis",
            v = self.var,
            m = self.modulus.display_with(self.var),
            b = self.basis_kind.name()
        )
    }

    /// Same modulus, different basis.
    pub fn rebased(&self, kind: BasisKind) -> Arc<QuotientRing> {
        QuotientRing::new(self.modulus.clone(), self.var, kind, self.point)
            .expect("modulus already validated")
    }

    pub fn zero(self: &Arc<Self>) -> RingElem {
        RingElem {
            ring: self.clone(),
            coords: vec![0; self.rank()],
        }
    }

    pub fn one(self: &Arc<Self>) -> RingElem {
        self.from_poly(&IntPoly::one())
    }

    pub fn int(self: &Arc<Self>, c: i64) -> RingElem {
        self.from_poly(&IntPoly::constant(c))
    }

    /// The class of the variable.
    pub fn gen(self: &Arc<Self>) -> RingElem {
        self.from_poly(&IntPoly::x())
    }

    /// The `i`-th basis element.
    pub fn basis_elem(self: &Arc<Self>, i: usize) -> RingElem {
        let mut coords = vec![0; self.rank()];
        coords[i] = 1;
        RingElem {
            ring: self.clone(),
            coords,
        }
    }

    pub fn elem(self: &Arc<Self>, coords: Vec<i64>) -> Result<RingElem, ChordError> {
        if coords.len() != self.rank() {
            return Err(ChordError::Arity {
                expected: self.rank(),
                got: coords.len(),
            });
        }
        Ok(RingElem {
            ring: self.clone(),
            coords,
        })
    }

    /// Reduce a polynomial and express it in the declared basis.
    pub fn from_poly(self: &Arc<Self>, poly: &IntPoly) -> RingElem {
        let r = poly.rem_monic(&self.modulus);
        let coords = (0..self.rank())
            .map(|i| (0..self.rank()).map(|j| self.inv[i][j] * r.coeff(j)).sum())
            .collect();
        RingElem {
            ring: self.clone(),
            coords,
        }
    }

    fn to_poly(&self, coords: &[i64]) -> IntPoly {
        let mut acc = IntPoly::zero();
        for (c, b) in coords.iter().zip(&self.basis) {
            if *c != 0 {
                acc = &acc + &b.scale(*c);
            }
        }
        acc
    }
}

fn invert_unimodular(m: &[Vec<i64>]) -> Option<Vec<Vec<i64>>> {
    // Gauss-Jordan over the rationals, then require an integral result.
    use num_rational::Rational64 as Q;
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Q> = row.iter().map(|&x| Q::from_integer(x)).collect();
            r.extend((0..n).map(|j| Q::from_integer((i == j) as i64)));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| a[r][col] != Q::from_integer(0))?;
        a.swap(col, piv);
        let pv = a[col][col];
        for x in a[col].iter_mut() {
            *x /= pv;
        }
        for r in 0..n {
            if r != col && a[r][col] != Q::from_integer(0) {
                let f = a[r][col];
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(pivot_row) {
                    *x -= f * y;
                }
            }
        }
    }
    a.iter()
        .map(|row| {
            row[n..]
                .iter()
                .map(|x| x.is_integer().then(|| x.to_integer()))
                .collect::<Option<Vec<i64>>>()
        })
        .collect()
}

/// An element of a [`QuotientRing`], as integer coordinates in its basis.
#[derive(Clone)]
pub struct RingElem {
    ring: Arc<QuotientRing>,
    coords: Vec<i64>,
}

impl PartialEq for RingElem {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords && (Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring)
    }
}

impl Eq for RingElem {}

impl std::hash::Hash for RingElem {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.coords.hash(state);
    }
}

impl fmt::Debug for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coords)
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label = |i: usize| match self.ring.basis_kind {
            BasisKind::Power => match i {
                0 => "1".to_string(),
                1 => self.ring.var.to_string(),
                _ => format!("{}^{}", self.ring.var, i),
            },
            BasisKind::ChebyshevP => format!("p{i}"),
            BasisKind::ChordG => format!("g{i}"),
            BasisKind::EvenAlpha | BasisKind::EvenBeta => format!("e{i}"),
        };
        let terms: Vec<String> = self
            .coords
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(|(i, c)| match *c {
                1 => label(i),
                -1 => format!("-{}", label(i)),
                c => format!("{c}*{}", label(i)),
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + ").replace("+ -", "- "))
        }
    }
}

impl RingElem {
    pub fn ring(&self) -> &Arc<QuotientRing> {
        &self.ring
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// Representative polynomial of degree below the rank.
    pub fn lift(&self) -> IntPoly {
        self.ring.to_poly(&self.coords)
    }

    pub fn eval_f64(&self) -> f64 {
        self.lift().eval_f64(self.ring.point)
    }

    fn check(&self, other: &RingElem) -> Result<(), ChordError> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(ChordError::RingMismatch {
                left: self.ring.describe(),
                right: other.ring.describe(),
            })
        }
    }

    pub fn try_add(&self, other: &RingElem) -> Result<RingElem, ChordError> {
        self.check(other)?;
        Ok(RingElem {
            ring: self.ring.clone(),
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, other: &RingElem) -> Result<RingElem, ChordError> {
        self.try_add(&other.scale(-1))
    }

    pub fn try_mul(&self, other: &RingElem) -> Result<RingElem, ChordError> {
        self.check(other)?;
        Ok(self.ring.from_poly(&(&self.lift() * &other.lift())))
    }

    pub fn scale(&self, c: i64) -> RingElem {
        RingElem {
            ring: self.ring.clone(),
            coords: self.coords.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> RingElem {
        let mut acc = self.ring.one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Re-express in another basis of the same modulus, or reduce into a
    /// ring whose modulus divides this one.
    pub fn convert(&self, target: &Arc<QuotientRing>) -> Result<RingElem, ChordError> {
        if target.modulus == self.ring.modulus || self.ring.modulus.divisible_by(&target.modulus) {
            Ok(target.from_poly(&self.lift()))
        } else {
            Err(ChordError::RingMismatch {
                left: self.ring.describe(),
                right: target.describe(),
            })
        }
    }

    /// Matrix of multiplication by `self` in the declared basis:
    /// `(self * b)_i = sum_j m[i][j] b_j`.
    pub fn mul_matrix(&self) -> Vec<Vec<i64>> {
        let r = self.ring.rank();
        let mut m = vec![vec![0i64; r]; r];
        for j in 0..r {
            let col = self * &self.ring.basis_elem(j);
            for (i, row) in m.iter_mut().enumerate() {
                row[j] = col.coords[i];
            }
        }
        m
    }

    /// The unique `c` with `c * d == self`, when `d` is not a zero divisor
    /// and the quotient is integral.
    pub fn div_exact(&self, d: &RingElem) -> Option<RingElem> {
        self.check(d).ok()?;
        use num_rational::Rational64 as Q;
        let m = d.mul_matrix();
        let n = m.len();
        let mut a: Vec<Vec<Q>> = (0..n)
            .map(|i| {
                let mut row: Vec<Q> = m[i].iter().map(|&x| Q::from_integer(x)).collect();
                row.push(Q::from_integer(self.coords[i]));
                row
            })
            .collect();
        for col in 0..n {
            let piv = (col..n).find(|&r| a[r][col] != Q::from_integer(0))?;
            a.swap(col, piv);
            let pv = a[col][col];
            for x in a[col].iter_mut() {
                *x /= pv;
            }
            for r in 0..n {
                if r != col && a[r][col] != Q::from_integer(0) {
                    let f = a[r][col];
                    let pivot_row = a[col].clone();
                    for (x, y) in a[r].iter_mut().zip(pivot_row) {
                        *x -= f * y;
                    }
                }
            }
        }
        let coords = a
            .iter()
            .map(|row| row[n].is_integer().then(|| row[n].to_integer()))
            .collect::<Option<Vec<i64>>>()?;
        Some(RingElem {
            ring: self.ring.clone(),
            coords,
        })
    }
}

macro_rules! ring_op {
    ($tr:ident, $m:ident, $try:ident) => {
        impl $tr for &RingElem {
            type Output = RingElem;
            /// Panics when the operands live in different rings.
            fn $m(self, rhs: &RingElem) -> RingElem {
                self.$try(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr for RingElem {
            type Output = RingElem;
            fn $m(self, rhs: RingElem) -> RingElem {
                (&self).$m(&rhs)
            }
        }
    };
}
ring_op!(Add, add, try_add);
ring_op!(Sub, sub, try_sub);
ring_op!(Mul, mul, try_mul);

impl Neg for &RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        self.scale(-1)
    }
}

/// Serializable form: coordinates plus basis metadata.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingElemJson {
    pub coords: Vec<i64>,
    pub basis: String,
    pub modulus: Vec<i64>,
    pub var: String,
}

impl From<&RingElem> for RingElemJson {
    fn from(e: &RingElem) -> Self {
        RingElemJson {
            coords: e.coords.clone(),
            basis: e.ring.basis_kind.name().to_string(),
            modulus: e.ring.modulus.coeffs().to_vec(),
            var: e.ring.var.to_string(),
        }
    }
}

impl Serialize for RingElem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RingElemJson::from(self).serialize(s)
    }
}

/// Rank of the chord ring of the regular m-gon.
pub fn chord_rank(m: usize) -> usize {
    m / 2
}

/// `Z[x]/(P_{floor(m/2)} - P_{floor((m-3)/2)})` in the chord basis, with
/// `x` standing for `2 cos(pi/m)`.
pub fn chord_ring(m: usize) -> Result<Arc<QuotientRing>, ChordError> {
    if m < 3 {
        return Err(ChordError::PolygonTooSmall(m));
    }
    let hi = (m / 2) as i64;
    let lo = ((m as i64) - 3).div_euclid(2);
    let modulus = &p(hi) - &p(lo);
    QuotientRing::new(
        modulus,
        "x",
        BasisKind::ChebyshevP,
        2.0 * (std::f64::consts::PI / m as f64).cos(),
    )
}

/// The chord `p_{j-1}`: distance between vertices `j` apart on the unit-side
/// regular m-gon.
pub fn chord(m: usize, j: usize) -> Result<RingElem, ChordError> {
    if j < 1 || j >= m {
        return Err(ChordError::ChordOutOfRange { m, j });
    }
    let ring = chord_ring(m)?;
    Ok(chord_in(&ring, j - 1))
}

/// `p_i` in an existing chord ring (any `i >= 0`; the ring relation folds
/// large indices back).
pub fn chord_in(ring: &Arc<QuotientRing>, i: usize) -> RingElem {
    ring.from_poly(&p(i as i64))
}

/// The odd chord ring `m = 2n + 1` in the `ChordG` basis.
pub fn odd_ring_g(m: usize) -> Result<Arc<QuotientRing>, ChordError> {
    if m % 2 == 0 {
        return Err(ChordError::NotOdd(m));
    }
    Ok(chord_ring(m)?.rebased(BasisKind::ChordG))
}

/// Which side of the even case a module belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvenSide {
    Alpha,
    Beta,
}

/// The even-case modules in `y = x^2`.
///
/// For `m = 4n` both sides are `Z[y]/(t_{2n})`; for `m = 4n+2` the alpha
/// side is `Z[y]/(y t_{2n+1})` and the beta side `Z[y]/(t_{2n+1})`, where
/// `t_k` is [`folded_even`].
pub fn even_ring(m: usize, side: EvenSide) -> Result<Arc<QuotientRing>, ChordError> {
    if m < 4 || m % 2 != 0 {
        return Err(ChordError::NotEven(m));
    }
    let n = (m / 4) as i64;
    let modulus = if m % 4 == 0 {
        folded_even(2 * n)?
    } else {
        match side {
            EvenSide::Alpha => &IntPoly::x() * &folded_even(2 * n + 1)?,
            EvenSide::Beta => folded_even(2 * n + 1)?,
        }
    };
    let kind = match side {
        EvenSide::Alpha => BasisKind::EvenAlpha,
        EvenSide::Beta => BasisKind::EvenBeta,
    };
    let y = 4.0 * (std::f64::consts::PI / m as f64).cos().powi(2);
    QuotientRing::new(modulus, "y", kind, y)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_ring() {
        let r = chord_ring(5).unwrap();
        assert_eq!(r.rank(), 2);
        let g = r.gen();
        assert_eq!(&g * &g, &g + &r.one());
        assert!((g.eval_f64() - 1.618_033_988_749_895).abs() < 1e-12);
    }

    #[test]
    fn heptagon_products() {
        let p1 = chord(7, 2).unwrap();
        let p2 = chord(7, 3).unwrap();
        let p3 = chord(7, 4).unwrap();
        assert_eq!(&p1 * &p2, &p3 + &p1);
        assert_eq!(p3, p2);
    }

    #[test]
    fn nonagon_square() {
        let r = chord_ring(9).unwrap();
        let p = |i| chord_in(&r, i);
        assert_eq!(&p(2) * &p(2), &(&p(4) + &p(2)) + &p(0));
    }

    #[test]
    fn chord_g_basis() {
        let r = odd_ring_g(7).unwrap();
        let x = r.gen();
        assert_eq!(x, r.basis_elem(2));
        assert_eq!(r.basis_elem(1), chord_in(&r, 2));
        assert_eq!(chord_in(&r, 3), r.basis_elem(1));
    }

    #[test]
    fn division() {
        let r = chord_ring(7).unwrap();
        let a = chord_in(&r, 1);
        let b = chord_in(&r, 2);
        let ab = &a * &b;
        assert_eq!(ab.div_exact(&b).unwrap(), a);
    }

    #[test]
    fn mismatch_is_error() {
        let a = chord_ring(5).unwrap().one();
        let b = chord_ring(7).unwrap().one();
        assert!(a.try_add(&b).is_err());
    }

    #[test]
    fn even_bases() {
        let a = even_ring(10, EvenSide::Alpha).unwrap();
        let b = even_ring(10, EvenSide::Beta).unwrap();
        assert_eq!((a.rank(), b.rank()), (3, 2));
        // the beta modulus divides the alpha modulus
        let e = a.basis_elem(0);
        assert!(e.convert(&b).is_ok());
    }
}
