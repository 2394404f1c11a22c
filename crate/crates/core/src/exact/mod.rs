//! Exact arithmetic kernel: rationals, cyclotomic numbers, Galois action,
//! sign determination and rational linear algebra.

mod cyclotomic;
mod interval;
mod linalg;
mod sign;
mod span;

pub use cyclotomic::{CycField, CycNum, RootOfUnity};
pub use interval::RatInterval;
pub use linalg::{rat_mat_det, rat_mat_rank, rat_solve, RatMatrix};
pub use sign::Sign;
pub use span::{q_span_degree, span_conductor, span_discriminant, span_report, SpanReport};

use alloc::string::String;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number. The representation is always reduced
/// (gcd of numerator and denominator is one, denominator positive).
pub type Rat = num_rational::BigRational;

/// `p/q` rendering with an explicit denominator, used by serializers.
pub fn rat_to_string(r: &Rat) -> String {
    use alloc::format;
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `p/q` or a bare integer `p`.
pub fn rat_from_str(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().ok()?;
        let d: BigInt = den.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Rat::new(n, d))
    } else {
        let n: BigInt = s.parse().ok()?;
        Some(Rat::from_integer(n))
    }
}

pub fn rat_i64(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    let mut n = n;
    let mut result = n;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// All divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Moebius function.
pub fn moebius(n: u64) -> i64 {
    let mut n = n;
    let mut k = 0;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            k += 1;
        }
        p += 1;
    }
    if n > 1 {
        k += 1;
    }
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

pub fn lcm_u64(a: u64, b: u64) -> u64 {
    num_integer::lcm(a, b)
}

/// Primes up to `n` inclusive.
pub fn primes_upto(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut sieve = alloc::vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut p = 2usize;
    while p * p <= n {
        if sieve[p] {
            let mut q = p * p;
            while q <= n {
                sieve[q] = false;
                q += p;
            }
        }
        p += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter_map(|(i, &b)| if b { Some(i as u64) } else { None })
        .collect()
}

/// Trace of the primitive root power `zeta_n^m` down to the rationals:
/// `mu(d) * phi(n) / phi(d)` where `d = n / gcd(n, m)`.
pub fn root_trace(n: u64, m: u64) -> Rat {
    let d = n / gcd_u64(n, m % n);
    let mu = moebius(d);
    if mu == 0 {
        return Rat::zero();
    }
    let t = BigInt::from(mu) * BigInt::from(euler_phi(n) / euler_phi(d));
    Rat::from_integer(t)
}

pub fn rat_is_one(r: &Rat) -> bool {
    r.is_one()
}

pub fn rat_abs(r: &Rat) -> Rat {
    r.abs()
}
