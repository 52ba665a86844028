use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// Dense integer polynomial, coefficients stored lowest degree first.
///
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial is the empty vector and structural equality is polynomial
/// equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct IntPoly {
    coeffs: Vec<i64>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: i64) -> Self {
        IntPoly::new(vec![c])
    }

    pub fn one() -> Self {
        IntPoly::constant(1)
    }

    /// The monomial `c * x^k`.
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut v = vec![0; k + 1];
        v[k] = c;
        IntPoly::new(v)
    }

    pub fn x() -> Self {
        IntPoly::monomial(1, 1)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> i64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    pub fn scale(&self, c: i64) -> Self {
        IntPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> Self {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, &a)| if k % 2 == 1 { -a } else { a })
                .collect(),
        )
    }

    /// `p(x^2)`.
    pub fn square_var(&self) -> Self {
        let mut v = vec![0; 2 * self.coeffs.len()];
        for (k, &a) in self.coeffs.iter().enumerate() {
            v[2 * k] = a;
        }
        IntPoly::new(v)
    }

    /// For an even polynomial `q(x^2)` returns `q`; `None` if odd terms occur.
    pub fn fold_even(&self) -> Option<Self> {
        if self.coeffs.iter().skip(1).step_by(2).any(|&a| a != 0) {
            return None;
        }
        Some(IntPoly::new(self.coeffs.iter().step_by(2).copied().collect()))
    }

    /// Exact division by `x`; `None` if the constant term is nonzero.
    pub fn div_x(&self) -> Option<Self> {
        if self.coeff(0) != 0 {
            return None;
        }
        Some(IntPoly::new(self.coeffs.iter().skip(1).copied().collect()))
    }

    pub fn eval(&self, x: i64) -> i64 {
        self.coeffs.iter().rev().fold(0i64, |acc, &a| acc * x + a)
    }

    pub fn eval_i128(&self, x: i128) -> i128 {
        self.coeffs
            .iter()
            .rev()
            .fold(0i128, |acc, &a| acc * x + a as i128)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &a| acc * x + a as f64)
    }

    pub fn content(&self) -> i64 {
        self.coeffs
            .iter()
            .fold(0i64, |g, &a| num_integer::gcd(g, a))
    }

    /// Divide out the content and make the leading coefficient positive.
    pub fn primitive(&self) -> Self {
        let c = self.content();
        if c == 0 {
            return IntPoly::zero();
        }
        let s = if self.leading() < 0 { -c } else { c };
        IntPoly::new(self.coeffs.iter().map(|a| a / s).collect())
    }

    /// Remainder modulo a monic polynomial.
    pub fn rem_monic(&self, m: &IntPoly) -> IntPoly {
        self.divrem_monic(m).1
    }

    /// Quotient and remainder by a monic divisor.
    pub fn divrem_monic(&self, m: &IntPoly) -> (IntPoly, IntPoly) {
        assert!(m.is_monic(), "divisor must be monic");
        self.divrem_exact_lead(m)
            .expect("monic division never fails")
    }

    /// Division over the integers; `None` when some step would need a
    /// non-integral quotient coefficient.
    pub fn divrem_exact_lead(&self, d: &IntPoly) -> Option<(IntPoly, IntPoly)> {
        let dd = d.degree().expect("division by zero polynomial");
        let lead = d.leading();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Some((IntPoly::zero(), self.clone()));
        }
        let mut q = vec![0i64; r.len() - dd];
        for k in (dd..r.len()).rev() {
            let c = r[k];
            if c == 0 {
                continue;
            }
            if c % lead != 0 {
                return None;
            }
            let f = c / lead;
            q[k - dd] = f;
            for (j, &b) in d.coeffs.iter().enumerate() {
                r[k - dd + j] -= f * b;
            }
        }
        Some((IntPoly::new(q), IntPoly::new(r)))
    }

    /// Whether `d` divides `self` in `Z[x]`.
    pub fn divisible_by(&self, d: &IntPoly) -> bool {
        matches!(self.divrem_exact_lead(d), Some((_, r)) if r.is_zero())
    }

    pub fn pow(&self, e: u32) -> IntPoly {
        let mut acc = IntPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Render with a chosen variable name, e.g. `x^2 - x - 1`.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, &a) in self.coeffs.iter().enumerate().rev() {
            if a == 0 {
                continue;
            }
            let mag = a.unsigned_abs();
            if out.is_empty() {
                if a < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if a < 0 { " - " } else { " + " });
            }
            let body = match k {
                0 => mag.to_string(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if mag != 1 && k > 0 {
                out.push_str(&mag.to_string());
            }
            out.push_str(&body);
        }
        out
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("x"))
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut v = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        IntPoly::new(v)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        self.scale(-1)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_trim() {
        let p = IntPoly::new(vec![-1, -1, 1, 0, 0]);
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.to_string(), "x^2 - x - 1");
        assert_eq!(IntPoly::new(vec![0, 0]).to_string(), "0");
        assert_eq!(IntPoly::new(vec![3, 0, -2]).display_with("y"), "-2y^2 + 3");
    }

    #[test]
    fn division() {
        let p = IntPoly::new(vec![1, 0, -3, 0, 1]);
        let f = IntPoly::new(vec![-1, -1, 1]);
        let (q, r) = p.divrem_monic(&f);
        assert!(r.is_zero());
        assert_eq!(q, IntPoly::new(vec![-1, 1, 1]));
        assert!(!IntPoly::new(vec![1, 2]).divisible_by(&IntPoly::new(vec![0, 2])));
    }

    #[test]
    fn folding() {
        let p = IntPoly::new(vec![1, 0, -3, 0, 1]);
        assert_eq!(p.fold_even().unwrap().square_var(), p);
        assert!(IntPoly::x().fold_even().is_none());
        assert_eq!(p.reflect(), p);
    }
}
