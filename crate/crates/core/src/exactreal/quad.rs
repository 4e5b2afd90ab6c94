//! Formal quadratic extensions `a + b*sqrt(d)` over an ordered field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::{Field, Sign};

/// `a + b*sqrt(d)` with `d > 0`. The radicand is `None` for plain base
/// elements; binary operations require equal radicands whenever both are set.
#[derive(Clone, Debug)]
pub struct QuadScalar<T> {
    pub a: T,
    pub b: T,
    radicand: Option<T>,
}

impl<T: Field> QuadScalar<T> {
    pub fn new(a: T, b: T, d: T) -> QuadScalar<T> {
        assert!(d.is_positive(), "radicand must be positive");
        QuadScalar {
            a,
            b,
            radicand: Some(d),
        }
    }

    pub fn base(a: T) -> QuadScalar<T> {
        QuadScalar {
            a,
            b: T::zero(),
            radicand: None,
        }
    }

    /// `sqrt(d)` itself.
    pub fn sqrt(d: T) -> QuadScalar<T> {
        QuadScalar::new(T::zero(), T::one(), d)
    }

    pub fn radicand(&self) -> Option<&T> {
        self.radicand.as_ref()
    }

    pub fn conjugate(&self) -> QuadScalar<T> {
        QuadScalar {
            a: self.a.clone(),
            b: -self.b.clone(),
            radicand: self.radicand.clone(),
        }
    }

    /// `a^2 - b^2 d`.
    pub fn norm(&self) -> T {
        let aa = self.a.clone() * &self.a;
        match &self.radicand {
            Some(d) => aa - self.b.clone() * &self.b * d,
            None => aa,
        }
    }

    fn joint_radicand(&self, other: &QuadScalar<T>) -> Option<T> {
        match (&self.radicand, &other.radicand) {
            (Some(x), Some(y)) => {
                assert!(x == y, "quadratic extensions with different radicands");
                Some(x.clone())
            }
            (Some(x), None) | (None, Some(x)) => Some(x.clone()),
            (None, None) => None,
        }
    }

    pub fn scale(&self, k: &T) -> QuadScalar<T> {
        QuadScalar {
            a: self.a.clone() * k,
            b: self.b.clone() * k,
            radicand: self.radicand.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Exact sign, comparing `a^2` with `b^2 d` when the parts disagree.
    pub fn sign(&self) -> Sign {
        let sa = self.a.sign();
        let sb = self.b.sign();
        if sb == Sign::Zero {
            return sa;
        }
        if sa == Sign::Zero || sa == sb {
            return sb;
        }
        match self.norm().sign() {
            Sign::Positive => sa,
            Sign::Negative => sb,
            Sign::Zero => Sign::Zero,
        }
    }

    /// Inverse via the conjugate, `None` for zero.
    pub fn inverse(&self) -> Option<QuadScalar<T>> {
        let n = self.norm().inverse()?;
        Some(self.conjugate().scale(&n))
    }
}

impl<T: Field> PartialEq for QuadScalar<T> {
    fn eq(&self, other: &QuadScalar<T>) -> bool {
        if !(self.b.is_zero() && other.b.is_zero()) {
            self.joint_radicand(other);
        }
        self.a == other.a && self.b == other.b
    }
}

impl<T: Field> Add for QuadScalar<T> {
    type Output = QuadScalar<T>;

    fn add(self, rhs: QuadScalar<T>) -> QuadScalar<T> {
        let radicand = self.joint_radicand(&rhs);
        QuadScalar {
            a: self.a + rhs.a,
            b: self.b + rhs.b,
            radicand,
        }
    }
}

impl<T: Field> Sub for QuadScalar<T> {
    type Output = QuadScalar<T>;

    fn sub(self, rhs: QuadScalar<T>) -> QuadScalar<T> {
        let radicand = self.joint_radicand(&rhs);
        QuadScalar {
            a: self.a - rhs.a,
            b: self.b - rhs.b,
            radicand,
        }
    }
}

impl<T: Field> Mul for QuadScalar<T> {
    type Output = QuadScalar<T>;

    fn mul(self, rhs: QuadScalar<T>) -> QuadScalar<T> {
        let radicand = self.joint_radicand(&rhs);
        let bb = self.b.clone() * &rhs.b;
        let a = match &radicand {
            Some(d) => self.a.clone() * &rhs.a + bb * d,
            None => self.a.clone() * &rhs.a,
        };
        let b = self.a * &rhs.b + rhs.a * &self.b;
        QuadScalar { a, b, radicand }
    }
}

impl<T: Field> Neg for QuadScalar<T> {
    type Output = QuadScalar<T>;

    fn neg(self) -> QuadScalar<T> {
        QuadScalar {
            a: -self.a,
            b: -self.b,
            radicand: self.radicand,
        }
    }
}

impl<T: Field + fmt::Display> fmt::Display for QuadScalar<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.radicand {
            Some(d) if !self.b.is_zero() => write!(f, "({})+({})*sqrt({})", self.a, self.b, d),
            _ => write!(f, "{}", self.a),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn conjugate_identities() {
        let x = QuadScalar::new(q(3), q(2), q(7));
        assert_eq!(x.clone() + x.conjugate(), QuadScalar::base(q(6)));
        assert_eq!(x.clone() * x.conjugate(), QuadScalar::base(q(9 - 28)));
    }

    #[test]
    fn exact_sign() {
        // 3 - 2 sqrt 2 > 0, 2 - 2 sqrt 2 < 0
        assert_eq!(QuadScalar::new(q(3), q(-2), q(2)).sign(), Sign::Positive);
        assert_eq!(QuadScalar::new(q(2), q(-2), q(2)).sign(), Sign::Negative);
        assert_eq!(QuadScalar::new(q(-3), q(2), q(2)).sign(), Sign::Negative);
    }

    #[test]
    fn inverse() {
        let x = QuadScalar::new(q(1), q(1), q(2));
        let inv = x.inverse().unwrap();
        assert_eq!(x * inv, QuadScalar::base(q(1)));
    }
}
