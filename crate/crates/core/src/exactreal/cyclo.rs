//! Cyclotomic quotient rings `Q[x]/Phi_{2N}(x)` and their cached tables.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::interval;

/// Data attached to one modulus `N`: `x` stands for `zeta = exp(i*pi/N)`,
/// a primitive `2N`-th root of unity.
#[derive(Debug)]
pub(crate) struct CycloRing {
    pub modulus: u32,
    pub degree: usize,
    /// Monic `Phi_{2N}`, lowest coefficient first.
    pub phi: Vec<i64>,
    /// `x^j mod Phi_{2N}` for `0 <= j < 2N`.
    pub powers: Vec<Vec<i64>>,
    /// `Tr(zeta^j) / degree` for `0 <= j < degree`; modulus-independent.
    pub normalized_trace: Vec<BigRational>,
    cos_cache: Mutex<Option<(u32, Arc<Vec<BigInt>>)>>,
}

impl CycloRing {
    fn build(modulus: u32) -> CycloRing {
        assert!(modulus >= 1, "modulus must be positive");
        let order = 2 * modulus as usize;
        let phi = cyclotomic_polynomial(order);
        let degree = phi.len() - 1;

        let mut powers = Vec::with_capacity(order);
        let mut current = vec![0i64; degree];
        current[0] = 1;
        if degree == 0 {
            current = vec![];
        }
        for _ in 0..order {
            powers.push(current.clone());
            // multiply by x and reduce
            let top = current.last().copied().unwrap_or(0);
            let mut next = vec![0i64; degree];
            for i in (1..degree).rev() {
                next[i] = current[i - 1];
            }
            if top != 0 {
                for (i, c) in next.iter_mut().enumerate() {
                    *c -= top * phi[i];
                }
            }
            current = next;
        }

        let normalized_trace = (0..degree)
            .map(|j| {
                let g = (j as u64).gcd(&(order as u64));
                let m = order as u64 / g;
                BigRational::new(BigInt::from(mobius(m)), BigInt::from(totient(m)))
            })
            .collect();

        CycloRing {
            modulus,
            degree,
            phi,
            powers,
            normalized_trace,
            cos_cache: Mutex::new(None),
        }
    }

    /// Reduce an integer polynomial of degree `< 2N` modulo `Phi_{2N}`.
    pub fn reduce(&self, poly: &[BigInt]) -> Vec<BigInt> {
        let mut out: Vec<BigInt> = vec![BigInt::zero(); self.degree];
        for (k, c) in poly.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k < self.degree {
                out[k] += c;
            } else {
                for (slot, p) in out.iter_mut().zip(&self.powers[k]) {
                    if *p != 0 {
                        *slot += c * BigInt::from(*p);
                    }
                }
            }
        }
        trim(&mut out);
        out
    }

    /// Approximations `a_j` of `cos(j*pi/N) * 2^prec` for `j < degree`,
    /// each within 2 units of the true value.
    pub fn cos_table(&self, prec: u32) -> Arc<Vec<BigInt>> {
        let mut guard = self.cos_cache.lock().expect("cos cache poisoned");
        if let Some((p, table)) = guard.as_ref() {
            if *p >= prec {
                if *p == prec {
                    return table.clone();
                }
                let shift = (*p - prec) as usize;
                return Arc::new(table.iter().map(|v| v >> shift).collect());
            }
        }
        let table = Arc::new(interval::cos_pi_table(self.modulus, self.degree, prec));
        *guard = Some((prec, table.clone()));
        table
    }
}

pub(crate) fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

static RINGS: OnceLock<Mutex<HashMap<u32, Arc<CycloRing>>>> = OnceLock::new();

/// Shared ring for modulus `N` (memoized).
pub(crate) fn ring(modulus: u32) -> Arc<CycloRing> {
    let rings = RINGS.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(r) = rings.lock().expect("ring table poisoned").get(&modulus) {
        return r.clone();
    }
    let built = Arc::new(CycloRing::build(modulus));
    rings
        .lock()
        .expect("ring table poisoned")
        .entry(modulus)
        .or_insert(built)
        .clone()
}

/// Integer coefficients of the `n`-th cyclotomic polynomial, lowest first.
pub(crate) fn cyclotomic_polynomial(n: usize) -> Vec<i64> {
    // x^n - 1 divided by Phi_d for every proper divisor d
    let mut poly = vec![0i64; n + 1];
    poly[0] = -1;
    poly[n] = 1;
    for d in 1..n {
        if n % d == 0 {
            poly = exact_div_monic(&poly, &cyclotomic_polynomial(d));
        }
    }
    poly
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut q = vec![0i64; qd + 1];
    for k in (0..=qd).rev() {
        let c = rem[k + dd];
        q[k] = c;
        if c != 0 {
            for (i, d) in den.iter().enumerate() {
                rem[k + i] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "inexact cyclotomic division");
    q
}

fn mobius(mut n: u64) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

fn totient(n: u64) -> u64 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u64
}

/// Polynomial inverse of `a` modulo the monic `m` over `Q`, via the
/// extended Euclidean algorithm. `None` if `gcd(a, m) != 1`.
pub(crate) fn inverse_mod(a: &[BigRational], m: &[BigRational]) -> Option<Vec<BigRational>> {
    let mut r0: Vec<BigRational> = m.to_vec();
    let mut r1: Vec<BigRational> = a.to_vec();
    trim_q(&mut r1);
    let mut s0: Vec<BigRational> = vec![];
    let mut s1: Vec<BigRational> = vec![BigRational::one()];
    while !r1.is_empty() {
        let (q, r) = divmod_q(&r0, &r1);
        let qs1 = mul_q(&q, &s1);
        let s2 = sub_q(&s0, &qs1);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].clone();
    let mut out: Vec<BigRational> = s0.into_iter().map(|x| x / &c).collect();
    // reduce modulo m
    if out.len() >= m.len() {
        out = divmod_q(&out, m).1;
    }
    Some(out)
}

fn trim_q(v: &mut Vec<BigRational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn divmod_q(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = a.to_vec();
    trim_q(&mut rem);
    let db = b.len() - 1;
    let lead = &b[db];
    if rem.len() < b.len() {
        return (vec![], rem);
    }
    let mut q = vec![BigRational::zero(); rem.len() - db];
    while rem.len() >= b.len() {
        let k = rem.len() - 1 - db;
        let c = rem.last().expect("nonempty") / lead;
        for (i, bi) in b.iter().enumerate() {
            rem[k + i] -= &c * bi;
        }
        q[k] = c;
        rem.pop();
        trim_q(&mut rem);
    }
    trim_q(&mut q);
    (q, rem)
}

fn mul_q(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim_q(&mut out);
    out
}

fn sub_q(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
        let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
        out.push(x - y);
    }
    trim_q(&mut out);
    out
}

/// gcd of a list of integers together with `den`, always positive.
pub(crate) fn content(nums: &[BigInt], den: &BigInt) -> BigInt {
    let mut g = den.abs();
    for n in nums {
        if g.is_one() {
            break;
        }
        g = g.gcd(n);
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(cyclotomic_polynomial(10), vec![1, -1, 1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        // Phi_105 is the first with a coefficient outside {-1, 0, 1}
        assert!(cyclotomic_polynomial(105).contains(&-2));
    }

    #[test]
    fn powers_wrap_to_minus_one_at_n() {
        for n in 1..=12u32 {
            let r = ring(n);
            assert_eq!(r.degree, totient(2 * n as u64) as usize);
            // zeta^N = -1
            let mut minus_one = vec![0i64; r.degree];
            minus_one[0] = -1;
            assert_eq!(r.powers[n as usize], minus_one, "modulus {n}");
        }
    }

    #[test]
    fn traces_are_ramanujan_sums() {
        // Q(zeta_8): Tr(1)=4, Tr(zeta)=0, Tr(zeta^2)=0, Tr(zeta^3)=0
        let r = ring(4);
        assert_eq!(r.normalized_trace[0], BigRational::one());
        assert!(r.normalized_trace[1..].iter().all(|t| t.is_zero()));
        // Q(zeta_6): zeta has trace 1 over a degree-2 field
        let r = ring(3);
        assert_eq!(r.normalized_trace[1], BigRational::new(1.into(), 2.into()));
    }

    #[test]
    fn polynomial_inverse() {
        let q = |n: i64| BigRational::from_integer(n.into());
        // x^2 - x + 1 (Phi_6): inverse of x is 1 - x
        let m = vec![q(1), q(-1), q(1)];
        let inv = inverse_mod(&[q(0), q(1)], &m).unwrap();
        assert_eq!(inv, vec![q(1), q(-1)]);
    }
}
