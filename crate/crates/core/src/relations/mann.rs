//! Explicit conductor bounds for irreducible vanishing sums of roots of
//! unity with coefficients in a totally real abelian field of degree `g`.

use crate::exact::primes_upto;
use num_bigint::BigUint;
use num_traits::One;

/// Smallest exponent `v` with `p^v >= 1 + g/(p-1)`, computed by integer
/// comparisons only: `p^v (p-1) >= (p-1) + g`.
pub fn mann_exponent_bound(p: u64, g: u64) -> u32 {
    assert!(p >= 2 && g >= 1);
    let target = BigUint::from(p - 1) + BigUint::from(g);
    let pm1 = BigUint::from(p - 1);
    let mut v = 0u32;
    let mut power = BigUint::one();
    loop {
        if &power * &pm1 >= target {
            return v;
        }
        power *= BigUint::from(p);
        v += 1;
    }
}

/// Conductor bound for an irreducible relation of length `k` with
/// coefficients of degree `g`: product of `p^{v0(p)}` over primes
/// `p <= 2 k g`.
pub fn mann_conductor_bound(k: u64, g: u64) -> BigUint {
    assert!(k >= 1 && g >= 1);
    let mut n = BigUint::one();
    for p in primes_upto(2 * k * g) {
        let v = mann_exponent_bound(p, g);
        for _ in 0..v {
            n *= BigUint::from(p);
        }
    }
    n
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponent_values() {
        assert_eq!(mann_exponent_bound(2, 2), 2);
        assert_eq!(mann_exponent_bound(3, 2), 1);
        assert_eq!(mann_exponent_bound(2, 1), 1);
        assert_eq!(mann_exponent_bound(5, 4), 1);
        assert_eq!(mann_exponent_bound(2, 4), 3);
    }

    #[test]
    fn conductor_values() {
        assert_eq!(mann_conductor_bound(1, 1), BigUint::from(2u32));
        assert_eq!(mann_conductor_bound(1, 2), BigUint::from(12u32));
        assert_eq!(mann_conductor_bound(4, 2), BigUint::from(60060u32));
    }

    #[test]
    fn rational_coefficients_give_squarefree_bounds() {
        // for g = 1 every exponent is 1
        for k in 1..=6 {
            let n = mann_conductor_bound(k, 1);
            let primes = primes_upto(2 * k);
            let expect: BigUint = primes.iter().fold(BigUint::one(), |acc, &p| acc * BigUint::from(p));
            assert_eq!(n, expect);
        }
    }
}
