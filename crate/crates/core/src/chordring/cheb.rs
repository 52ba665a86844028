use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use super::poly::IntPoly;
use super::ChordError;

/// The polynomial families used throughout.
///
/// `Chord` is `P_n` with `P_{-1} = 0`, `P_0 = 1`, `P_{n+1} = x P_n - P_{n-1}`;
/// evaluated at `2 cos(pi/m)` it gives the chord lengths of the regular
/// m-gon. `Classical` is the usual first-kind recurrence with the doubled
/// middle term. `OddModulus` is `P_n - P_{n-1}` and `EvenModulus` is
/// `P_n - P_{n-2}`, the moduli of the chord rings for odd and even m.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ChebKind {
    Chord,
    Classical,
    OddModulus,
    EvenModulus,
}

impl ChebKind {
    pub fn parse(s: &str) -> Option<ChebKind> {
        match s {
            "P" | "p" | "chord" => Some(ChebKind::Chord),
            "Pc" | "pc" | "classical" => Some(ChebKind::Classical),
            "Q" | "q" | "odd" => Some(ChebKind::OddModulus),
            "S" | "s" | "even" => Some(ChebKind::EvenModulus),
            _ => None,
        }
    }

    pub fn short_name(self) -> &'static str {
        match self {
            ChebKind::Chord => "P",
            ChebKind::Classical => "Pc",
            ChebKind::OddModulus => "Q",
            ChebKind::EvenModulus => "S",
        }
    }

    fn min_index(self) -> i64 {
        match self {
            ChebKind::Chord | ChebKind::OddModulus => -1,
            ChebKind::Classical | ChebKind::EvenModulus => 0,
        }
    }
}

/// `P_n` for `n >= -2` (with `P_{-2} = -1` from running the recurrence backwards).
fn chord_raw(n: i64) -> IntPoly {
    match n {
        -2 => IntPoly::constant(-1),
        -1 => IntPoly::zero(),
        _ => {
            let x = IntPoly::x();
            let (mut prev, mut cur) = (IntPoly::zero(), IntPoly::one());
            for _ in 0..n {
                let next = &(&x * &cur) - &prev;
                prev = cur;
                cur = next;
            }
            cur
        }
    }
}

fn classical_raw(n: i64) -> IntPoly {
    let x = IntPoly::x();
    let two_x = x.scale(2);
    if n == 0 {
        return IntPoly::one();
    }
    let (mut prev, mut cur) = (IntPoly::one(), x);
    for _ in 1..n {
        let next = &(&two_x * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Member `n` of a family.
///
/// Chord and odd-modulus members start at `n = -1`, the others at `n = 0`.
/// The even-modulus member at 0 is the constant 1 by convention (the raw
/// difference would give 2).
pub fn cheb(kind: ChebKind, n: i64) -> Result<IntPoly, ChordError> {
    if n < kind.min_index() {
        return Err(ChordError::NegativeIndex {
            family: kind.short_name(),
            n,
        });
    }
    Ok(match kind {
        ChebKind::Chord => chord_raw(n),
        ChebKind::Classical => classical_raw(n),
        ChebKind::OddModulus => &chord_raw(n) - &chord_raw(n - 1),
        ChebKind::EvenModulus => {
            if n == 0 {
                IntPoly::one()
            } else {
                &chord_raw(n) - &chord_raw(n - 2)
            }
        }
    })
}

pub(crate) fn p(n: i64) -> IntPoly {
    chord_raw(n)
}

pub(crate) fn q(n: i64) -> IntPoly {
    cheb(ChebKind::OddModulus, n).expect("index in range")
}

pub(crate) fn s(n: i64) -> IntPoly {
    cheb(ChebKind::EvenModulus, n).expect("index in range")
}

/// The even-case family in `y = x^2`: `S_k(x)` for even `k`, `S_k(x)/x` for
/// odd `k`, rewritten as a polynomial in `y`.
pub fn folded_even(k: i64) -> Result<IntPoly, ChordError> {
    let sk = cheb(ChebKind::EvenModulus, k)?;
    let even = if k % 2 == 0 {
        sk
    } else {
        sk.div_x().expect("odd members vanish at 0")
    };
    Ok(even.fold_even().expect("parity of the family"))
}

fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// One checked identity, named by the shape of the relation.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub n: i64,
    pub holds: bool,
}

/// Product and factorization identities for the chord, odd- and
/// even-modulus families, checked exactly up to `max_n` (odd family from
/// `n = 0`, even family from `n = 1`).
pub fn identity_suite(max_n: i64) -> Vec<IdentityCheck> {
    let mut out = Vec::new();
    let x = IntPoly::x();
    for n in 0..=max_n {
        let qn = q(n);
        // Q_n(x) Q_n(-x) = (-1)^n P_2n
        let lhs = &qn * &qn.reflect();
        out.push(IdentityCheck {
            name: "Q_n(x)Q_n(-x) = (-1)^n P_2n".into(),
            n,
            holds: lhs == p(2 * n).scale(sign(n)),
        });
        // Q_n(x) Q_{n-1}(-x) = (-1)^{n-1} P_{2n-1} + (-1)^n
        let lhs = &qn * &q(n - 1).reflect();
        let rhs = &p(2 * n - 1).scale(sign(n - 1)) + &IntPoly::constant(sign(n));
        out.push(IdentityCheck {
            name: "Q_n(x)Q_{n-1}(-x) = (-1)^{n-1} P_{2n-1} + (-1)^n".into(),
            n,
            holds: lhs == rhs,
        });
        // Q_{n+1}(x) Q_{n-1}(-x) = (-1)^{n+1} P_2n + (-1)^n x
        let lhs = &q(n + 1) * &q(n - 1).reflect();
        let rhs = &p(2 * n).scale(sign(n + 1)) + &x.scale(sign(n));
        out.push(IdentityCheck {
            name: "Q_{n+1}(x)Q_{n-1}(-x) = (-1)^{n+1} P_2n + (-1)^n x".into(),
            n,
            holds: lhs == rhs,
        });
    }
    for n in 1..=max_n {
        let sn = s(n);
        let checks: [(&str, IntPoly, IntPoly); 4] = [
            ("S_n P_{n-1} = P_{2n-1}", &sn * &p(n - 1), p(2 * n - 1)),
            ("S_n P_n = P_2n + 1", &sn * &p(n), &p(2 * n) + &IntPoly::one()),
            ("S_n P_{n+1} = P_{2n+1} + x", &sn * &p(n + 1), &p(2 * n + 1) + &x),
            ("S_n P_{n-2} = P_{2n-2} - 1", &sn * &p(n - 2), &p(2 * n - 2) - &IntPoly::one()),
        ];
        for (name, lhs, rhs) in checks {
            out.push(IdentityCheck {
                name: name.into(),
                n,
                holds: lhs == rhs,
            });
        }
    }
    out
}

/// The ratio `t_n(y)` with `t_3 = 1`, `t_{n+1} = 1 - 1/(y t_n)`, kept as a
/// reduced fraction of polynomials in `y`.
///
/// The closed form is `P_{n-2}(x) / (x P_{n-3}(x))` with `y = x^2`; after
/// cancelling the common power of `x` both sides are polynomials in `y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutoffRatio {
    pub n: i64,
    pub numerator: IntPoly,
    pub denominator: IntPoly,
}

/// How a cutoff ratio evaluation went.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutoffValue {
    pub value: Rational64,
    /// First index where the recurrence divided by zero, if it did.
    pub recurrence_pole: Option<i64>,
}

pub fn cutoff_ratio(n: i64) -> Result<CutoffRatio, ChordError> {
    if n < 3 {
        return Err(ChordError::NegativeIndex { family: "cutoff", n });
    }
    let top = p(n - 2);
    let bottom = &IntPoly::x() * &p(n - 3);
    // exactly one of top, bottom is odd; strip one x from both when needed
    let (top, bottom) = if n % 2 == 1 {
        (top.div_x().unwrap(), bottom.div_x().unwrap())
    } else {
        (top, bottom)
    };
    Ok(CutoffRatio {
        n,
        numerator: top.fold_even().expect("even after stripping"),
        denominator: bottom.fold_even().expect("even after stripping"),
    })
}

impl CutoffRatio {
    /// Evaluate at a rational `y`, running the recurrence and switching to
    /// the closed form once it hits a zero divisor. A zero of the closed-form
    /// denominator is reported as a pole.
    pub fn eval(&self, y: Rational64) -> Result<CutoffValue, ChordError> {
        let zero = Rational64::from_integer(0);
        let one = Rational64::from_integer(1);
        let mut t = one;
        let mut recurrence_pole = None;
        for k in 3..self.n {
            let d = y * t;
            if d == zero {
                recurrence_pole = Some(k + 1);
                break;
            }
            t = one - one / d;
        }
        let eval = |p: &IntPoly| {
            p.coeffs()
                .iter()
                .rev()
                .fold(zero, |acc, &a| acc * y + Rational64::from_integer(a))
        };
        let den = eval(&self.denominator);
        if den == zero {
            return Err(ChordError::Pole {
                n: self.n,
                y: y.to_string(),
                recurrence_pole,
            });
        }
        let closed = eval(&self.numerator) / den;
        if recurrence_pole.is_none() {
            debug_assert_eq!(closed, t);
        }
        Ok(CutoffValue {
            value: closed,
            recurrence_pole,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_members() {
        assert_eq!(cheb(ChebKind::Chord, 4).unwrap().to_string(), "x^4 - 3x^2 + 1");
        assert_eq!(cheb(ChebKind::OddModulus, 2).unwrap().to_string(), "x^2 - x - 1");
        assert_eq!(cheb(ChebKind::EvenModulus, 2).unwrap().to_string(), "x^2 - 2");
        assert_eq!(cheb(ChebKind::Classical, 2).unwrap().to_string(), "2x^2 - 1");
        assert_eq!(cheb(ChebKind::OddModulus, -1).unwrap(), IntPoly::one());
        assert!(cheb(ChebKind::Chord, -2).is_err());
    }

    #[test]
    fn cutoff_small_cases() {
        let t4 = cutoff_ratio(4).unwrap();
        assert_eq!((t4.numerator.display_with("y"), t4.denominator.display_with("y")), ("y - 1".into(), "y".into()));
        let t5 = cutoff_ratio(5).unwrap();
        assert_eq!(t5.numerator.display_with("y"), "y - 2");
        assert_eq!(t5.denominator.display_with("y"), "y - 1");
        let t6 = cutoff_ratio(6).unwrap();
        assert_eq!(t6.numerator.display_with("y"), "y^2 - 3y + 1");
        assert_eq!(t6.denominator.display_with("y"), "y^2 - 2y");
    }

    #[test]
    fn cutoff_pole_reported() {
        let one = Rational64::from_integer(1);
        assert_eq!(cutoff_ratio(4).unwrap().eval(one).unwrap().value, Rational64::from_integer(0));
        let err = cutoff_ratio(5).unwrap().eval(one).unwrap_err();
        assert!(matches!(err, ChordError::Pole { recurrence_pole: Some(5), .. }));
        // past the pole the closed form takes over
        let v = cutoff_ratio(6).unwrap().eval(one).unwrap();
        assert_eq!(v.recurrence_pole, Some(5));
        assert_eq!(v.value, Rational64::from_integer(1));
    }
}
