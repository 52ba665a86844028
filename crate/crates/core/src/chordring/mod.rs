//! Integer polynomials, the chord polynomial families, and exact arithmetic in
//! quotient rings `Z[x]/(f)`.

mod cheb;
mod irreducible;
mod poly;
mod ratelem;
mod ring;

pub use cheb::{cheb, cutoff_ratio, folded_even, identity_suite, ChebKind, CutoffRatio, CutoffValue, IdentityCheck};
pub(crate) use cheb::p as chord_poly;
pub use irreducible::{factor, is_irreducible, MAX_DEGREE};
pub use poly::IntPoly;
pub use ratelem::RatElem;
pub use ring::{
    chord, chord_g_index, chord_in, chord_rank, chord_ring, even_ring, odd_ring_g, BasisKind, EvenSide, QuotientRing, RingElem, RingElemJson,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChordError {
    #[error("{family}_{n} is outside the family's index range")]
    NegativeIndex { family: &'static str, n: i64 },
    #[error("cutoff ratio t_{n} has a pole at y = {y}")]
    Pole {
        n: i64,
        y: String,
        recurrence_pole: Option<i64>,
    },
    #[error("degree {0} is above the exhaustive factor search limit")]
    DegreeTooLarge(usize),
    #[error("modulus {0} is not monic of positive degree")]
    BadModulus(String),
    #[error("basis is not unimodular for this modulus")]
    BadBasis,
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: String, right: String },
    #[error("expected {expected} coordinates, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("m = {0} is too small for a polygon")]
    PolygonTooSmall(usize),
    #[error("chord index {j} out of range for m = {m}")]
    ChordOutOfRange { m: usize, j: usize },
    #[error("m = {0} is not an even value >= 4")]
    NotEven(usize),
    #[error("m = {0} is not odd")]
    NotOdd(usize),
}
