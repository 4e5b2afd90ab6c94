//! Scalar traits shared by the linear algebra and the Coxeter geometry.
//!
//! Everything above this module is written against [`Ring`], [`Field`] and
//! [`CoxeterScalar`]. The exact instantiation used throughout the crate is
//! [`TrigScalar`](crate::exactreal::TrigScalar); `BigRational` covers systems
//! whose labels are all in `{2, 3, inf}` and `f64` gives approximate
//! geometry for cross-checks.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Sign of a real scalar.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Negative => '-',
            Sign::Zero => '0',
            Sign::Positive => '+',
        }
    }
}

/// Commutative ring with identity.
pub trait Ring:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn from_integer(n: i64) -> Self;

    fn from_rational(q: &BigRational) -> Self;
}

/// Ordered field: exact division and a sign oracle.
pub trait Field: Ring {
    /// Multiplicative inverse, `None` for zero.
    fn inverse(&self) -> Option<Self>;

    fn sign(&self) -> Sign;

    /// Approximate value, for display hints only.
    fn to_f64(&self) -> f64;

    fn is_negative(&self) -> bool {
        self.sign() == Sign::Negative
    }

    fn is_positive(&self) -> bool {
        self.sign() == Sign::Positive
    }
}

/// A field that contains the entries of the Coxeter bilinear form.
pub trait CoxeterScalar: Field {
    /// Whether equality and sign are exact for this type.
    const EXACT: bool;

    /// `cos(k*pi/n)` inside the ring attached to `modulus` (a multiple of
    /// `n`), or `None` if the value is not representable in this type.
    fn cos_pi(k: u32, n: u32, modulus: u32) -> Option<Self>;

    /// Human-readable exact rendering.
    fn render(&self) -> String;
}

/// Scalars with exact, hashable equality; required wherever roots or
/// elements are deduplicated.
pub trait ExactScalar: CoxeterScalar + Eq + std::hash::Hash {}

impl ExactScalar for BigRational {}

impl Ring for f64 {
    fn from_integer(n: i64) -> Self {
        n as f64
    }

    fn from_rational(q: &BigRational) -> Self {
        ToPrimitive::to_f64(q).unwrap_or(f64::NAN)
    }
}

impl Field for f64 {
    fn inverse(&self) -> Option<Self> {
        if *self == 0.0 {
            None
        } else {
            Some(1.0 / self)
        }
    }

    fn sign(&self) -> Sign {
        if *self > 0.0 {
            Sign::Positive
        } else if *self < 0.0 {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }

    fn to_f64(&self) -> f64 {
        *self
    }
}

impl CoxeterScalar for f64 {
    const EXACT: bool = false;

    fn cos_pi(k: u32, n: u32, _modulus: u32) -> Option<Self> {
        Some((std::f64::consts::PI * k as f64 / n as f64).cos())
    }

    fn render(&self) -> String {
        format!("{self}")
    }
}

impl Ring for BigRational {
    fn from_integer(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_rational(q: &BigRational) -> Self {
        q.clone()
    }
}

impl Field for BigRational {
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn sign(&self) -> Sign {
        if self.is_zero() {
            Sign::Zero
        } else if Signed::is_positive(self) {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

impl CoxeterScalar for BigRational {
    const EXACT: bool = true;

    fn cos_pi(k: u32, n: u32, _modulus: u32) -> Option<Self> {
        // Niven: the only rational cosines at rational multiples of pi.
        let half = |p: i64, q: i64| Some(BigRational::new(p.into(), q.into()));
        if n == 0 || (12 * k as u64) % n as u64 != 0 {
            return None;
        }
        let twelfths = (12 * k as u64 / n as u64) % 24;
        match twelfths {
            0 => half(1, 1),
            4 | 20 => half(1, 2),
            6 | 18 => half(0, 1),
            8 | 16 => half(-1, 2),
            12 => half(-1, 1),
            _ => None,
        }
    }

    fn render(&self) -> String {
        self.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_cosines_follow_niven() {
        let q = |p: i64, r: i64| BigRational::new(p.into(), r.into());
        assert_eq!(BigRational::cos_pi(1, 3, 3), Some(q(1, 2)));
        assert_eq!(BigRational::cos_pi(2, 3, 3), Some(q(-1, 2)));
        assert_eq!(BigRational::cos_pi(1, 2, 2), Some(q(0, 1)));
        assert_eq!(BigRational::cos_pi(1, 1, 1), Some(q(-1, 1)));
        assert_eq!(BigRational::cos_pi(0, 7, 7), Some(q(1, 1)));
        assert_eq!(BigRational::cos_pi(1, 4, 4), None);
        assert_eq!(BigRational::cos_pi(1, 5, 5), None);
        assert_eq!(BigRational::cos_pi(1, 6, 6), None);
    }

    #[test]
    fn sign_flip() {
        assert_eq!(Sign::Negative.flip(), Sign::Positive);
        assert_eq!(Sign::Zero.flip(), Sign::Zero);
    }
}
