//! Fixed-point evaluation of `cos(j*pi/N)` with big integers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

const GUARD: u32 = 32;

fn atan_inv(x: u32, one: &BigInt) -> BigInt {
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut term = one / &x;
    let mut sum = BigInt::zero();
    let mut k = 0u64;
    while !term.is_zero() {
        let t = &term / BigInt::from(2 * k + 1);
        if k % 2 == 0 {
            sum += t;
        } else {
            sum -= t;
        }
        term /= &x2;
        k += 1;
    }
    sum
}

/// `pi * 2^bits` up to a few units.
pub(crate) fn pi_fixed(bits: u32) -> BigInt {
    let one = BigInt::one() << bits;
    atan_inv(5, &one) * 16 - atan_inv(239, &one) * 4
}

fn cos_fixed(theta: &BigInt, bits: u32) -> BigInt {
    let one = BigInt::one() << bits;
    let theta2 = (theta * theta) >> bits as usize;
    let mut sum = one.clone();
    let mut term = one;
    let mut k = 1u64;
    loop {
        term = (&term * &theta2) >> bits as usize;
        term = -term / BigInt::from((2 * k - 1) * (2 * k));
        if term.is_zero() {
            break;
        }
        sum += &term;
        k += 1;
    }
    sum
}

/// `round(cos(j*pi/n) * 2^prec)` within 2 units, for `j < count`.
pub(crate) fn cos_pi_table(n: u32, count: usize, prec: u32) -> Vec<BigInt> {
    let bits = prec + GUARD;
    let pi = pi_fixed(bits);
    (0..count)
        .map(|j| {
            if j == 0 {
                return BigInt::one() << prec;
            }
            // reduce to [0, pi/2] for fast Taylor convergence
            let (jj, negate) = if 2 * j as u64 > n as u64 {
                (n as usize - j, true)
            } else {
                (j, false)
            };
            let theta = &pi * BigInt::from(jj) / BigInt::from(n);
            let c = cos_fixed(&theta, bits) >> GUARD as usize;
            if negate {
                -c
            } else {
                c
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    #[test]
    fn pi_digits() {
        let p = pi_fixed(60).to_f64().unwrap() / 2f64.powi(60);
        assert!((p - std::f64::consts::PI).abs() < 1e-15);
    }

    #[test]
    fn cos_table_matches_float() {
        let t = cos_pi_table(7, 7, 50);
        for (j, v) in t.iter().enumerate() {
            let approx = v.to_f64().unwrap() / 2f64.powi(50);
            let exact = (std::f64::consts::PI * j as f64 / 7.0).cos();
            assert!((approx - exact).abs() < 1e-13, "j={j}");
        }
    }
}
