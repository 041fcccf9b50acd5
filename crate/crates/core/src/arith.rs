//! Small number-theoretic helpers for group orders.

use alloc::vec::Vec;
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::InvalidArgument(alloc::format!("{p} is not prime")))
    }
}

/// Largest power of `p` dividing `n`, together with its exponent.
pub fn p_part(n: &BigUint, p: u64) -> (BigUint, u32) {
    let mut m = n.clone();
    let mut part = BigUint::one();
    let mut exp = 0;
    if m.is_zero() {
        return (part, 0);
    }
    let pb = BigUint::from(p);
    while (&m % &pb).is_zero() {
        m /= &pb;
        part *= &pb;
        exp += 1;
    }
    (part, exp)
}

/// Prime divisors of `n` in increasing order, found by trial division.
///
/// Orders of permutation groups of degree `d` only have prime factors `<= d`,
/// so the search is cut off at `bound` when given.
pub fn prime_divisors(n: &BigUint, bound: Option<u64>) -> Vec<u64> {
    let mut out = Vec::new();
    let mut m = n.clone();
    let mut d = 2u64;
    loop {
        if m.is_one() || m.is_zero() {
            break;
        }
        if let Some(b) = bound {
            if d > b {
                break;
            }
        }
        if let Some(small) = m.to_u64() {
            if d.saturating_mul(d) > small {
                out.push(small);
                break;
            }
        }
        let db = BigUint::from(d);
        if (&m % &db).is_zero() {
            out.push(d);
            while (&m % &db).is_zero() {
                m /= &db;
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Exponent `k` with `n = p^k`, if `n` is a power of `p`.
pub fn log_p(n: usize, p: u64) -> Option<u32> {
    let mut m = n as u64;
    let mut k = 0;
    while m > 1 {
        if !m.is_multiple_of(p) {
            return None;
        }
        m /= p;
        k += 1;
    }
    (m == 1).then_some(k)
}

pub fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_and_parts() {
        assert!(is_prime(2) && is_prime(5) && is_prime(7919));
        assert!(!is_prime(1) && !is_prime(0) && !is_prime(91));
        let n = BigUint::from(7200u32);
        assert_eq!(p_part(&n, 2), (BigUint::from(32u32), 5));
        assert_eq!(p_part(&n, 7), (BigUint::one(), 0));
        assert_eq!(prime_divisors(&n, None), [2, 3, 5]);
        assert_eq!(prime_divisors(&BigUint::from(660u32), Some(12)), [2, 3, 5, 11]);
        assert_eq!(prime_divisors(&BigUint::one(), None), Vec::<u64>::new());
        assert_eq!(log_p(32, 2), Some(5));
        assert_eq!(log_p(1, 3), Some(0));
        assert_eq!(log_p(12, 2), None);
    }
}
