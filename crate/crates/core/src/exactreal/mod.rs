//! Exact real numbers of the form `sum_k c_k cos(k*pi/N)` with rational `c_k`.
//!
//! A [`TrigScalar`] is stored as an element of `Q(zeta)`, `zeta = exp(i*pi/N)`,
//! written in the power basis `1, zeta, ..., zeta^(d-1)` with `d = phi(2N)`,
//! as integer numerators over one positive common denominator. Reduction
//! modulo the cyclotomic polynomial makes the representation unique, so
//! equality is structural. Signs are decided by an exact zero test followed
//! by fixed-point interval evaluation at doubling precision.
//!
//! Values with different moduli can be mixed through the operator traits:
//! both sides are lifted to the lcm of the moduli first. The checked
//! [`TrigScalar::checked_mul`] refuses mismatched moduli instead.

mod cyclo;
mod interval;
mod parse;
mod quad;

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::scalar::{CoxeterScalar, ExactScalar, Field, Ring, Sign};
use cyclo::CycloRing;

pub use quad::QuadScalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("index {k} outside [0, {modulus}]")]
    IndexOutOfRange { k: u32, modulus: u32 },
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u32, right: u32 },
    #[error("modulus {from} does not divide {to}")]
    NotDivisible { from: u32, to: u32 },
    #[error("cannot parse scalar {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

#[derive(Clone)]
pub struct TrigScalar {
    ring: Arc<CycloRing>,
    num: Vec<BigInt>,
    den: BigInt,
}

impl TrigScalar {
    fn from_parts(ring: Arc<CycloRing>, mut num: Vec<BigInt>, mut den: BigInt) -> TrigScalar {
        cyclo::trim(&mut num);
        if num.is_empty() {
            return TrigScalar {
                ring,
                num,
                den: BigInt::one(),
            };
        }
        if den.is_negative() {
            den = -den;
            for c in num.iter_mut() {
                *c = -std::mem::take(c);
            }
        }
        let g = cyclo::content(&num, &den);
        if !g.is_one() {
            for c in num.iter_mut() {
                *c /= &g;
            }
            den /= &g;
        }
        TrigScalar { ring, num, den }
    }

    /// Build from a rational polynomial in `zeta` of degree `< 2N`.
    fn from_rational_poly(ring: Arc<CycloRing>, poly: &[BigRational]) -> TrigScalar {
        let den = poly
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = poly
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let num = ring.reduce(&ints);
        TrigScalar::from_parts(ring, num, den)
    }

    /// `sum c_k cos(k*pi/N)`.
    pub fn make(modulus: u32, terms: &[(u32, BigRational)]) -> Result<TrigScalar, ExactError> {
        if modulus == 0 {
            return Err(ExactError::ZeroModulus);
        }
        let ring = cyclo::ring(modulus);
        let order = 2 * modulus as usize;
        let mut poly = vec![BigRational::zero(); order];
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        for (k, c) in terms {
            if *k > modulus {
                return Err(ExactError::IndexOutOfRange { k: *k, modulus });
            }
            let k = *k as usize;
            let h = c * &half;
            poly[k] += &h;
            poly[(order - k) % order] += h;
        }
        Ok(TrigScalar::from_rational_poly(ring, &poly))
    }

    pub fn rational(q: &BigRational, modulus: u32) -> TrigScalar {
        let ring = cyclo::ring(modulus.max(1));
        TrigScalar::from_parts(ring, vec![q.numer().clone()], q.denom().clone())
    }

    pub fn integer(n: i64) -> TrigScalar {
        TrigScalar::from_parts(cyclo::ring(1), vec![BigInt::from(n)], BigInt::one())
    }

    /// `cos(k*pi/n)` in the ring of modulus `n`.
    pub fn cos_pi_frac(k: u32, n: u32) -> Result<TrigScalar, ExactError> {
        if n == 0 {
            return Err(ExactError::ZeroModulus);
        }
        let k = k % (2 * n);
        let k = if k > n { 2 * n - k } else { k };
        TrigScalar::make(n, &[(k, BigRational::one())])
    }

    pub fn modulus(&self) -> u32 {
        self.ring.modulus
    }

    /// Re-express over modulus `m`, a multiple of the current one.
    pub fn change_modulus(&self, m: u32) -> Result<TrigScalar, ExactError> {
        let n = self.modulus();
        if m == 0 || m % n != 0 {
            return Err(ExactError::NotDivisible { from: n, to: m });
        }
        if m == n {
            return Ok(self.clone());
        }
        let step = (m / n) as usize;
        let ring = cyclo::ring(m);
        let mut poly = vec![BigInt::zero(); 2 * m as usize];
        for (j, c) in self.num.iter().enumerate() {
            poly[j * step] = c.clone();
        }
        let num = ring.reduce(&poly);
        Ok(TrigScalar::from_parts(ring, num, self.den.clone()))
    }

    fn lift_pair(a: &TrigScalar, b: &TrigScalar) -> (TrigScalar, TrigScalar) {
        let (n, m) = (a.modulus(), b.modulus());
        if n == m {
            return (a.clone(), b.clone());
        }
        // rationals live in every ring
        if a.is_rational() {
            return (a.with_ring(&b.ring), b.clone());
        }
        if b.is_rational() {
            return (a.clone(), b.with_ring(&a.ring));
        }
        let l = n.lcm(&m);
        (
            a.change_modulus(l).expect("lcm is a multiple"),
            b.change_modulus(l).expect("lcm is a multiple"),
        )
    }

    fn with_ring(&self, ring: &Arc<CycloRing>) -> TrigScalar {
        debug_assert!(self.is_rational());
        TrigScalar {
            ring: ring.clone(),
            num: self.num.clone(),
            den: self.den.clone(),
        }
    }

    /// Product of two scalars that share a modulus.
    pub fn checked_mul(&self, other: &TrigScalar) -> Result<TrigScalar, ExactError> {
        if self.modulus() != other.modulus() {
            return Err(ExactError::ModulusMismatch {
                left: self.modulus(),
                right: other.modulus(),
            });
        }
        Ok(self.mul_same(other))
    }

    fn mul_same(&self, other: &TrigScalar) -> TrigScalar {
        if self.num.is_empty() || other.num.is_empty() {
            return TrigScalar::from_parts(self.ring.clone(), vec![], BigInt::one());
        }
        let mut prod = vec![BigInt::zero(); self.num.len() + other.num.len() - 1];
        for (i, x) in self.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.num.iter().enumerate() {
                prod[i + j] += x * y;
            }
        }
        let num = self.ring.reduce(&prod);
        TrigScalar::from_parts(self.ring.clone(), num, &self.den * &other.den)
    }

    fn add_same(&self, other: &TrigScalar, negate: bool) -> TrigScalar {
        let n = self.num.len().max(other.num.len());
        let mut num = Vec::with_capacity(n);
        for i in 0..n {
            let x = self.num.get(i).map(|c| c * &other.den).unwrap_or_default();
            let y = other.num.get(i).map(|c| c * &self.den).unwrap_or_default();
            num.push(if negate { x - y } else { x + y });
        }
        TrigScalar::from_parts(self.ring.clone(), num, &self.den * &other.den)
    }

    fn combine(&self, other: &TrigScalar, negate: bool) -> TrigScalar {
        if self.modulus() == other.modulus() {
            self.add_same(other, negate)
        } else {
            let (a, b) = TrigScalar::lift_pair(self, other);
            a.add_same(&b, negate)
        }
    }

    fn product(&self, other: &TrigScalar) -> TrigScalar {
        if self.modulus() == other.modulus() {
            self.mul_same(other)
        } else {
            let (a, b) = TrigScalar::lift_pair(self, other);
            a.mul_same(&b)
        }
    }

    pub fn is_rational(&self) -> bool {
        self.num.len() <= 1
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        match self.num.len() {
            0 => Some(BigRational::zero()),
            1 => Some(BigRational::new(self.num[0].clone(), self.den.clone())),
            _ => None,
        }
    }

    /// `Tr(x) / [Q(zeta):Q]`, which does not depend on the modulus.
    pub fn normalized_trace(&self) -> BigRational {
        let mut acc = BigRational::zero();
        for (c, t) in self.num.iter().zip(&self.ring.normalized_trace) {
            if !t.is_zero() {
                acc += t * BigRational::from_integer(c.clone());
            }
        }
        acc / BigRational::from_integer(self.den.clone())
    }

    /// Coefficients `r_j` with `x = sum_j r_j cos(j*pi/N)`, `j < phi(2N)/2`.
    /// Unique for real `x`.
    pub fn cos_coefficients(&self) -> Vec<BigRational> {
        let d = self.ring.degree;
        let h = (d / 2).max(1);
        if self.num.is_empty() {
            return vec![];
        }
        // columns: power-basis images of cos(j*pi/N)
        let order = 2 * self.modulus() as usize;
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let mut rows: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); h + 1]; d];
        for j in 0..h {
            let mut poly = vec![BigInt::zero(); order];
            poly[j] += 1;
            poly[(order - j) % order] += 1;
            let img = self.ring.reduce(&poly);
            for (i, c) in img.iter().enumerate() {
                rows[i][j] = BigRational::from_integer(c.clone()) * &half;
            }
        }
        for (i, c) in self.num.iter().enumerate() {
            rows[i][h] = BigRational::new(c.clone(), self.den.clone());
        }
        let sol = solve_consistent(rows, h);
        let mut sol = sol.expect("real scalar lies in the cosine span");
        while sol.last().is_some_and(|c| c.is_zero()) {
            sol.pop();
        }
        sol
    }

    /// Square root of a small nonnegative integer when it lies in some
    /// cyclotomic ring this crate builds (`2`, `3`, `5`, squares).
    pub fn sqrt_small(d: u32) -> Option<TrigScalar> {
        let r = (d as f64).sqrt().round() as u32;
        if r * r == d {
            return Some(TrigScalar::integer(r as i64));
        }
        let (modulus, terms): (u32, Vec<(u32, i64)>) = match d {
            2 => (4, vec![(1, 2)]),
            3 => (6, vec![(1, 2)]),
            5 => (5, vec![(0, -1), (1, 4)]),
            _ => return None,
        };
        let terms: Vec<(u32, BigRational)> = terms
            .into_iter()
            .map(|(k, c)| (k, BigRational::from_integer(c.into())))
            .collect();
        TrigScalar::make(modulus, &terms).ok()
    }

    pub fn parse(text: &str) -> Result<TrigScalar, ExactError> {
        parse::parse_scalar(text)
    }

    fn interval_sign(&self) -> Sign {
        let bound: BigInt = self.num.iter().map(|c| c.abs()).sum::<BigInt>() * 2 + 1;
        let mut prec = 64u32;
        loop {
            let table = self.ring.cos_table(prec);
            let mut s = BigInt::zero();
            for (c, t) in self.num.iter().zip(table.iter()) {
                if !c.is_zero() {
                    s += c * t;
                }
            }
            if s.abs() > bound {
                return if s.is_positive() {
                    Sign::Positive
                } else {
                    Sign::Negative
                };
            }
            prec *= 2;
        }
    }
}

/// Solve `A x = b` (last column is `b`) for `cols` unknowns, assuming the
/// system is consistent with a unique solution.
fn solve_consistent(mut rows: Vec<Vec<BigRational>>, cols: usize) -> Option<Vec<BigRational>> {
    let mut pivot_row = 0;
    let mut pivots = Vec::new();
    for col in 0..cols {
        let Some(p) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, p);
        let inv = rows[pivot_row][col].recip();
        for c in col..=cols {
            let v = &rows[pivot_row][c] * &inv;
            rows[pivot_row][c] = v;
        }
        for r in 0..rows.len() {
            if r != pivot_row && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for c in col..=cols {
                    let v = &f * &rows[pivot_row][c];
                    rows[r][c] -= v;
                }
            }
        }
        pivots.push(col);
        pivot_row += 1;
    }
    if rows[pivot_row..].iter().any(|r| !r[cols].is_zero()) {
        return None;
    }
    let mut out = vec![BigRational::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        out[c] = rows[r][cols].clone();
    }
    Some(out)
}

impl PartialEq for TrigScalar {
    fn eq(&self, other: &TrigScalar) -> bool {
        if self.modulus() == other.modulus() {
            return self.num == other.num && self.den == other.den;
        }
        if self.num.is_empty() || other.num.is_empty() {
            return self.num.is_empty() && other.num.is_empty();
        }
        let (a, b) = TrigScalar::lift_pair(self, other);
        a.num == b.num && a.den == b.den
    }
}

impl Eq for TrigScalar {}

impl Hash for TrigScalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        if self.num.len() <= 1 {
            self.to_rational().expect("rational").hash(state);
        } else {
            self.normalized_trace().hash(state);
        }
    }
}

impl fmt::Display for TrigScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self))
    }
}

impl fmt::Debug for TrigScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [N={}]", render(self), self.modulus())
    }
}

fn render(x: &TrigScalar) -> String {
    if let Some(q) = x.to_rational() {
        return q.to_string();
    }
    let n = x.modulus();
    let mut out = String::new();
    for (j, c) in x.cos_coefficients().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let negative = Signed::is_negative(c);
        let mag = c.abs();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push(if negative { '-' } else { '+' });
        }
        if j == 0 {
            out.push_str(&mag.to_string());
            continue;
        }
        if !mag.is_one() {
            if mag.is_integer() {
                out.push_str(&mag.to_string());
            } else {
                out.push_str(&format!("{mag}*"));
            }
        }
        let g = (j as u32).gcd(&n);
        let (k, m) = (j as u32 / g, n / g);
        if k == 1 {
            out.push_str(&format!("cos(pi/{m})"));
        } else {
            out.push_str(&format!("cos({k}pi/{m})"));
        }
    }
    out
}

impl Zero for TrigScalar {
    fn zero() -> TrigScalar {
        TrigScalar::from_parts(cyclo::ring(1), vec![], BigInt::one())
    }

    fn is_zero(&self) -> bool {
        self.num.is_empty()
    }
}

impl One for TrigScalar {
    fn one() -> TrigScalar {
        TrigScalar::integer(1)
    }
}

impl Neg for TrigScalar {
    type Output = TrigScalar;

    fn neg(mut self) -> TrigScalar {
        for c in self.num.iter_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &TrigScalar {
    type Output = TrigScalar;

    fn neg(self) -> TrigScalar {
        -self.clone()
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<TrigScalar> for TrigScalar {
            type Output = TrigScalar;
            fn $method(self, rhs: TrigScalar) -> TrigScalar {
                $body(&self, &rhs)
            }
        }
        impl<'a> $tr<&'a TrigScalar> for TrigScalar {
            type Output = TrigScalar;
            fn $method(self, rhs: &'a TrigScalar) -> TrigScalar {
                $body(&self, rhs)
            }
        }
        impl<'b> $tr<TrigScalar> for &'b TrigScalar {
            type Output = TrigScalar;
            fn $method(self, rhs: TrigScalar) -> TrigScalar {
                $body(self, &rhs)
            }
        }
        impl<'a, 'b> $tr<&'a TrigScalar> for &'b TrigScalar {
            type Output = TrigScalar;
            fn $method(self, rhs: &'a TrigScalar) -> TrigScalar {
                $body(self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &TrigScalar, b: &TrigScalar| a.combine(b, false));
forward_binop!(Sub, sub, |a: &TrigScalar, b: &TrigScalar| a.combine(b, true));
forward_binop!(Mul, mul, |a: &TrigScalar, b: &TrigScalar| a.product(b));

impl Ring for TrigScalar {
    fn from_integer(n: i64) -> TrigScalar {
        TrigScalar::integer(n)
    }

    fn from_rational(q: &BigRational) -> TrigScalar {
        TrigScalar::rational(q, 1)
    }
}

impl Field for TrigScalar {
    fn inverse(&self) -> Option<TrigScalar> {
        if self.num.is_empty() {
            return None;
        }
        if let Some(q) = self.to_rational() {
            return Some(TrigScalar::rational(&q.recip(), self.modulus()));
        }
        let a: Vec<BigRational> = self
            .num
            .iter()
            .map(|c| BigRational::new(c.clone(), self.den.clone()))
            .collect();
        let m: Vec<BigRational> = self
            .ring
            .phi
            .iter()
            .map(|&c| BigRational::from_integer(c.into()))
            .collect();
        let inv = cyclo::inverse_mod(&a, &m)?;
        Some(TrigScalar::from_rational_poly(self.ring.clone(), &inv))
    }

    fn sign(&self) -> Sign {
        if self.num.is_empty() {
            return Sign::Zero;
        }
        if self.num.len() == 1 {
            return if self.num[0].is_positive() {
                Sign::Positive
            } else {
                Sign::Negative
            };
        }
        self.interval_sign()
    }

    fn to_f64(&self) -> f64 {
        let n = self.modulus() as f64;
        let den = self.den.to_f64().unwrap_or(f64::NAN);
        self.num
            .iter()
            .enumerate()
            .map(|(j, c)| {
                c.to_f64().unwrap_or(f64::NAN) * (std::f64::consts::PI * j as f64 / n).cos()
            })
            .sum::<f64>()
            / den
    }
}

impl ExactScalar for TrigScalar {}

impl CoxeterScalar for TrigScalar {
    const EXACT: bool = true;

    fn cos_pi(k: u32, n: u32, modulus: u32) -> Option<TrigScalar> {
        let c = TrigScalar::cos_pi_frac(k, n).ok()?;
        c.change_modulus(modulus).ok()
    }

    fn render(&self) -> String {
        render(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, r: i64) -> BigRational {
        BigRational::new(p.into(), r.into())
    }

    fn c(k: u32, n: u32) -> TrigScalar {
        TrigScalar::cos_pi_frac(k, n).unwrap()
    }

    #[test]
    fn known_cosines() {
        assert_eq!(c(1, 3), TrigScalar::rational(&q(1, 2), 1));
        assert_eq!(c(1, 2), TrigScalar::zero());
        assert_eq!(c(1, 1), TrigScalar::integer(-1));
        assert_eq!(c(0, 9), TrigScalar::one());
        assert_eq!(c(2, 3), TrigScalar::rational(&q(-1, 2), 7));
    }

    #[test]
    fn sqrt_two_squares_to_two() {
        let r2 = TrigScalar::make(4, &[(1, q(2, 1))]).unwrap();
        assert_eq!(&r2 * &r2, TrigScalar::integer(2));
        assert_eq!(r2.render(), "2cos(pi/4)");
    }

    #[test]
    fn golden_ratio_relation() {
        let phi = TrigScalar::make(5, &[(1, q(2, 1))]).unwrap();
        assert_eq!(&phi * &phi, &phi + &TrigScalar::one());
        let psi = TrigScalar::make(5, &[(2, q(2, 1))]).unwrap();
        assert_eq!(phi.checked_mul(&psi).unwrap(), TrigScalar::one());
    }

    #[test]
    fn checked_mul_rejects_mismatch() {
        let a = c(1, 4);
        let b = c(1, 5);
        assert_eq!(
            a.checked_mul(&b),
            Err(ExactError::ModulusMismatch { left: 4, right: 5 })
        );
        // the operator lifts instead
        assert_eq!((&a * &b).modulus(), 20);
    }

    #[test]
    fn make_rejects_large_index() {
        assert_eq!(
            TrigScalar::make(3, &[(4, q(1, 1))]).unwrap_err(),
            ExactError::IndexOutOfRange { k: 4, modulus: 3 }
        );
        assert!(TrigScalar::make(3, &[(3, q(1, 1))]).is_ok());
    }

    #[test]
    fn change_modulus_round_trip() {
        let a = c(1, 3);
        let b = a.change_modulus(6).unwrap();
        assert_eq!(b, c(2, 6));
        assert_eq!(TrigScalar::one().change_modulus(12).unwrap(), TrigScalar::one());
        let r2 = TrigScalar::make(4, &[(1, q(2, 1))]).unwrap();
        let lifted = r2.change_modulus(20).unwrap();
        assert_eq!(lifted, TrigScalar::make(20, &[(5, q(2, 1))]).unwrap());
        assert_eq!(lifted, r2);
        assert!(a.change_modulus(8).is_err());
    }

    #[test]
    fn signs() {
        assert_eq!(TrigScalar::zero().sign(), Sign::Zero);
        assert_eq!((c(1, 3) - TrigScalar::rational(&q(1, 2), 1)).sign(), Sign::Zero);
        let r2 = TrigScalar::sqrt_small(2).unwrap();
        let x = TrigScalar::rational(&q(-1, 2), 1) - &r2 * TrigScalar::rational(&q(1, 2), 1);
        assert_eq!(x.sign(), Sign::Negative);
        assert_eq!((&x + TrigScalar::one()).sign(), Sign::Negative);
        // 3/2 - sqrt 2 is small and positive
        let y = TrigScalar::rational(&q(3, 2), 1) - &r2;
        assert_eq!(y.sign(), Sign::Positive);
        // 99/70 - sqrt 2 ~ 7e-5
        let z = TrigScalar::rational(&q(99, 70), 1) - &r2;
        assert_eq!(z.sign(), Sign::Positive);
    }

    #[test]
    fn inverse_of_golden_ratio() {
        let phi = TrigScalar::make(5, &[(1, q(2, 1))]).unwrap();
        let inv = phi.inverse().unwrap();
        assert_eq!(&inv, &(&phi - &TrigScalar::one()));
        assert!(TrigScalar::zero().inverse().is_none());
    }

    #[test]
    fn rendering_is_reduced() {
        assert_eq!(c(1, 3).render(), "1/2");
        assert_eq!((-c(1, 5)).render(), "-cos(pi/5)");
        assert_eq!(c(2, 5).render(), "-1/2+cos(pi/5)");
        assert_eq!(c(2, 10).render(), "cos(pi/5)");
        assert_eq!(TrigScalar::sqrt_small(3).unwrap().render(), "2cos(pi/6)");
    }

    #[test]
    fn hash_consistent_across_moduli() {
        use std::collections::hash_map::DefaultHasher;
        let h = |x: &TrigScalar| {
            let mut s = DefaultHasher::new();
            x.hash(&mut s);
            s.finish()
        };
        let a = c(1, 4);
        assert_eq!(h(&a), h(&a.change_modulus(12).unwrap()));
        assert_eq!(h(&TrigScalar::one()), h(&TrigScalar::one().change_modulus(5).unwrap()));
    }
}
