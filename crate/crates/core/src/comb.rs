//! Small exact-arithmetic combinatorial helpers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n.max(1) {
        acc *= k;
    }
    acc
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for r in 0..k {
        acc = acc * (n - r) / (r + 1);
    }
    acc
}

pub fn pow2(k: u32) -> BigInt {
    BigInt::one() << k
}
