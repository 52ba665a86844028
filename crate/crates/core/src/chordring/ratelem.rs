use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;

use super::ring::RingElem;

/// An element of `Q (x) R` for a quotient ring `R`: a ring element over a
/// positive integer denominator, kept in lowest terms.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatElem {
    num: RingElem,
    den: i64,
}

impl RatElem {
    pub fn new(num: RingElem, den: i64) -> RatElem {
        assert!(den != 0, "zero denominator");
        let s = den.signum();
        let mut r = RatElem {
            num: num.scale(s),
            den: den * s,
        };
        r.normalize();
        r
    }

    pub fn from_elem(num: RingElem) -> RatElem {
        RatElem { num, den: 1 }
    }

    fn normalize(&mut self) {
        let g = self.num.coords().iter().fold(self.den, |g, &c| g.gcd(&c));
        if g > 1 {
            let coords = self.num.coords().iter().map(|c| c / g).collect();
            self.num = self.num.ring().elem(coords).expect("same rank");
            self.den /= g;
        }
    }

    pub fn numerator(&self) -> &RingElem {
        &self.num
    }

    pub fn denominator(&self) -> i64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn eval_f64(&self) -> f64 {
        self.num.eval_f64() / self.den as f64
    }

    pub fn scale(&self, num: i64, den: i64) -> RatElem {
        RatElem::new(self.num.scale(num), self.den * den)
    }
}

impl Add for &RatElem {
    type Output = RatElem;
    fn add(self, rhs: &RatElem) -> RatElem {
        let l = self.den.lcm(&rhs.den);
        RatElem::new(&self.num.scale(l / self.den) + &rhs.num.scale(l / rhs.den), l)
    }
}

impl Sub for &RatElem {
    type Output = RatElem;
    fn sub(self, rhs: &RatElem) -> RatElem {
        self + &(-rhs)
    }
}

impl Neg for &RatElem {
    type Output = RatElem;
    fn neg(self) -> RatElem {
        RatElem {
            num: -&self.num,
            den: self.den,
        }
    }
}

impl Mul for &RatElem {
    type Output = RatElem;
    fn mul(self, rhs: &RatElem) -> RatElem {
        RatElem::new(&self.num * &rhs.num, self.den * rhs.den)
    }
}

impl fmt::Display for RatElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/{}", self.num, self.den)
        }
    }
}
