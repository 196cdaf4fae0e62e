//! The Burnside ring A(Z/p) = Z{1, g} with g² = pg.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// `a·1 + b·g` where `g = [G/e]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BurnsideElement {
    pub p: i64,
    pub a: i64,
    pub b: i64,
}

impl BurnsideElement {
    pub fn new(p: i64, a: i64, b: i64) -> Self {
        Self { p, a, b }
    }
    pub fn one(p: i64) -> Self {
        Self::new(p, 1, 0)
    }
    pub fn zero(p: i64) -> Self {
        Self::new(p, 0, 0)
    }
    pub fn g(p: i64) -> Self {
        Self::new(p, 0, 1)
    }
    /// κ = p − g.
    pub fn kappa(p: i64) -> Self {
        Self::new(p, p, -1)
    }

    /// Augmentation ε(a + bg) = a + pb (cardinality).
    pub fn eps(&self) -> i64 {
        self.a + self.p * self.b
    }

    /// Cardinality of the fixed set, which is `a`.
    pub fn fixed_degree(&self) -> i64 {
        self.a
    }

    pub fn is_unit(&self) -> bool {
        self.eps().abs() == 1 && self.fixed_degree().abs() == 1
    }

    pub fn pow(&self, n: u64) -> Self {
        let mut r = Self::one(self.p);
        for _ in 0..n {
            r = r * *self;
        }
        r
    }

    fn check(&self, o: &Self) {
        assert_eq!(self.p, o.p, "Burnside elements for different primes");
    }
}

impl Add for BurnsideElement {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        self.check(&o);
        Self::new(self.p, self.a + o.a, self.b + o.b)
    }
}

impl Sub for BurnsideElement {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Neg for BurnsideElement {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(self.p, -self.a, -self.b)
    }
}

impl Mul for BurnsideElement {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self.check(&o);
        // (a + bg)(c + dg) = ac + (ad + bc + pbd) g
        Self::new(self.p, self.a * o.a, self.a * o.b + self.b * o.a + self.p * self.b * o.b)
    }
}

pub fn burnside_mul(x: BurnsideElement, y: BurnsideElement) -> BurnsideElement {
    x * y
}

pub fn burnside_eps(x: BurnsideElement) -> i64 {
    x.eps()
}

impl fmt::Display for BurnsideElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, 1) => write!(f, "g"),
            (0, -1) => write!(f, "-g"),
            (0, b) => write!(f, "{b}g"),
            (a, 1) => write!(f, "{a}+g"),
            (a, -1) => write!(f, "{a}-g"),
            (a, b) if b < 0 => write!(f, "{a}{b}g"),
            (a, b) => write!(f, "{a}+{b}g"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g_squared() {
        let g = BurnsideElement::g(3);
        assert_eq!(g * g, BurnsideElement::new(3, 0, 3));
    }

    #[test]
    fn kappa_squared() {
        for p in [2, 3, 5, 7] {
            let k = BurnsideElement::kappa(p);
            assert_eq!(k * k, BurnsideElement::new(p, p * p, -p));
            assert_eq!(k * k, BurnsideElement::new(p, p, 0) * k);
        }
    }

    #[test]
    fn one_minus_g_is_an_involution_for_two() {
        let u = BurnsideElement::one(2) - BurnsideElement::g(2);
        assert_eq!(u * u, BurnsideElement::one(2));
        assert!(u.is_unit());
        assert!(!BurnsideElement::g(2).is_unit());
        assert!(!(BurnsideElement::one(3) - BurnsideElement::g(3)).is_unit());
    }

    #[test]
    fn eps_is_multiplicative() {
        for p in [2, 3, 5] {
            for a in -3..4 {
                for b in -3..4 {
                    let x = BurnsideElement::new(p, a, b);
                    let y = BurnsideElement::new(p, b + 1, a - 2);
                    assert_eq!((x * y).eps(), x.eps() * y.eps());
                    assert_eq!((x * y).fixed_degree(), x.a * y.a);
                }
            }
        }
    }
}
