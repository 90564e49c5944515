//! Integer helpers shared by the representation-theoretic modules.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

/// `C(n, k)` as an exact integer; 0 when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Parity of `C(m, k)` by Lucas' theorem: odd iff every binary digit of `k`
/// is also a digit of `m`.
pub fn binomial_is_odd(m: &BigUint, k: u64) -> bool {
    (0..64).filter(|j| k >> j & 1 == 1).all(|j| m.bit(j))
}

/// 2-adic valuation of a positive integer.
pub fn ord2(m: &BigUint) -> Option<u64> {
    m.trailing_zeros()
}

/// `numerator / 2^shift` if it is an exact nonnegative integer.
pub fn exact_nonneg_shift(numerator: &BigInt, shift: u32) -> Option<BigUint> {
    if numerator.sign() == Sign::Minus {
        return None;
    }
    let mag = numerator.magnitude();
    if !mag.is_zero() && mag.trailing_zeros().unwrap_or(0) < u64::from(shift) {
        return None;
    }
    Some(mag >> shift)
}

/// The coefficient of `x^i` in `(1 - x)^minus * (1 + x)^plus`.
pub fn signed_binomial_coefficient(minus: u64, plus: u64, i: u64) -> BigInt {
    let mut acc = BigInt::zero();
    for j in 0..=i.min(minus) {
        let term = BigInt::from(binomial(minus, j)) * BigInt::from(binomial(plus, i - j));
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}
