//! Small integer helpers: primality, `p`-adic valuations, checked powers.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::Zero;

use crate::{Error, Result};

/// Deterministic trial division; primes here are tiny (the tower modulus
/// `p^n` has to fit in memory as a vertex count).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// `v_p(n)`, or `None` for `n == 0`.
pub fn valuation_u64(mut n: u64, p: u64) -> Option<u32> {
    if n == 0 {
        return None;
    }
    let mut v = 0;
    while n % p == 0 {
        n /= p;
        v += 1;
    }
    Some(v)
}

/// `v_p(n)` for a big integer, or `None` for zero.
pub fn valuation(n: &BigInt, p: u64) -> Option<u32> {
    valuation_biguint(n.magnitude(), p)
}

pub fn valuation_biguint(n: &BigUint, p: u64) -> Option<u32> {
    if n.is_zero() {
        return None;
    }
    let p = BigUint::from(p);
    let mut v = 0;
    let mut rest = n.clone();
    loop {
        let (q, r) = rest.div_rem(&p);
        if !r.is_zero() {
            return Some(v);
        }
        rest = q;
        v += 1;
    }
}

pub fn checked_pow(base: u64, exp: u32) -> Result<u64> {
    base.checked_pow(exp).ok_or(Error::Overflow)
}

/// Non-negative gcd.
pub fn gcd(a: i64, b: i64) -> u64 {
    a.unsigned_abs().gcd(&b.unsigned_abs())
}

/// Reduces `value` into `[0, modulus)`.
pub fn rem_euclid(value: i64, modulus: u64) -> u64 {
    let m = i128::from(modulus);
    (i128::from(value).rem_euclid(m)) as u64
}
