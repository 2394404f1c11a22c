//! Rational interval arithmetic with outward dyadic rounding, plus rigorous
//! enclosures of pi and of cosines of rational angles. Used only for sign
//! determination; no interval value ever leaks into a result.

use super::Rat;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq)]
pub struct RatInterval {
    pub lo: Rat,
    pub hi: Rat,
}

impl RatInterval {
    pub fn point(r: Rat) -> Self {
        RatInterval { lo: r.clone(), hi: r }
    }

    pub fn new(lo: Rat, hi: Rat) -> Self {
        debug_assert!(lo <= hi);
        RatInterval { lo, hi }
    }

    pub fn add(&self, other: &Self) -> Self {
        RatInterval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        RatInterval {
            lo: &self.lo - &other.hi,
            hi: &self.hi - &other.lo,
        }
    }

    pub fn neg(&self) -> Self {
        RatInterval {
            lo: -self.hi.clone(),
            hi: -self.lo.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let cands = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let mut lo = cands[0].clone();
        let mut hi = cands[0].clone();
        for c in &cands[1..] {
            if *c < lo {
                lo = c.clone();
            }
            if *c > hi {
                hi = c.clone();
            }
        }
        RatInterval { lo, hi }
    }

    pub fn scale(&self, r: &Rat) -> Self {
        if r.is_negative() {
            RatInterval {
                lo: &self.hi * r,
                hi: &self.lo * r,
            }
        } else {
            RatInterval {
                lo: &self.lo * r,
                hi: &self.hi * r,
            }
        }
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// Rounds both endpoints outward onto the grid of multiples of 2^-bits.
    pub fn round_out(&self, bits: u64) -> Self {
        RatInterval {
            lo: dyadic_floor(&self.lo, bits),
            hi: dyadic_ceil(&self.hi, bits),
        }
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }
}

fn pow2(bits: u64) -> BigInt {
    BigInt::one() << bits
}

fn dyadic_floor(r: &Rat, bits: u64) -> Rat {
    let scaled = r * Rat::from_integer(pow2(bits));
    Rat::new(scaled.floor().to_integer(), pow2(bits))
}

fn dyadic_ceil(r: &Rat, bits: u64) -> Rat {
    let scaled = r * Rat::from_integer(pow2(bits));
    Rat::new(scaled.ceil().to_integer(), pow2(bits))
}

/// Enclosure of pi via Machin's formula, tightened as `bits` grows.
/// `pi/4 = 4 atan(1/5) - atan(1/239)`; the arctangent series is alternating
/// so truncations bracket the true value.
pub fn pi_interval(bits: u64) -> RatInterval {
    let terms = (bits / 4 + 8) as usize;
    let a5 = atan_inv_interval(5, terms);
    let a239 = atan_inv_interval(239, terms);
    let four = Rat::from_integer(BigInt::from(4));
    a5.scale(&four)
        .sub(&a239)
        .scale(&four)
        .round_out(bits + 2)
}

/// Interval for atan(1/x), x >= 2, from the alternating Leibniz series.
fn atan_inv_interval(x: u64, terms: usize) -> RatInterval {
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut partial = Rat::zero();
    let mut power = x.clone(); // x^(2k+1)
    let mut below = Rat::zero();
    let mut above = Rat::zero();
    for k in 0..terms {
        let term = Rat::new(BigInt::one(), &power * BigInt::from(2 * k as u64 + 1));
        if k % 2 == 0 {
            partial += term;
            above = partial.clone();
        } else {
            partial -= term;
            below = partial.clone();
        }
        power *= &x2;
    }
    // With at least two terms the last two partial sums bracket the limit.
    if below > above {
        core::mem::swap(&mut below, &mut above);
    }
    RatInterval::new(below, above)
}

/// cos on an interval argument, via Taylor series with rigorous tail bound.
/// Valid for |x| <= 8 or so; arguments here are at most 2*pi.
fn cos_interval(x: &RatInterval, bits: u64) -> RatInterval {
    // cos is 1-Lipschitz, so evaluate at the midpoint and widen by the radius.
    let two = Rat::from_integer(BigInt::from(2));
    let mid = (&x.lo + &x.hi) / &two;
    let rad = (&x.hi - &x.lo) / &two;
    let c = cos_point(&mid, bits);
    RatInterval {
        lo: &c.lo - &rad,
        hi: &c.hi + &rad,
    }
    .round_out(bits)
}

/// Taylor enclosure of cos at an exact rational point, |x| <= 8.
fn cos_point(x: &Rat, bits: u64) -> RatInterval {
    let x2 = x * x;
    let mut term = Rat::one();
    let mut sum = Rat::one();
    let mut k: u64 = 0;
    loop {
        // term_{k+1} = -term_k * x^2 / ((2k+1)(2k+2))
        k += 1;
        let denom = BigInt::from(2 * k - 1) * BigInt::from(2 * k);
        term = -(&term * &x2) / Rat::from_integer(denom);
        sum += &term;
        // Once |x^2| < (2k+1)(2k+2) the series is alternating with
        // decreasing magnitude, so |tail| <= |next term|.
        let next_denom = BigInt::from(2 * k + 1) * BigInt::from(2 * k + 2);
        if x2 < Rat::from_integer(next_denom) {
            let bound = Rat::new(BigInt::one(), pow2(bits));
            let next = term.abs() * &x2; // over-estimate of the next term
            if next < bound {
                let tail = next;
                return RatInterval {
                    lo: &sum - &tail,
                    hi: &sum + &tail,
                };
            }
        }
    }
}

/// Enclosures of cos(2*pi*j/n) for j = 0..n-1, all at once, via the
/// Chebyshev recurrence cos((j+1)t) = 2 cos(t) cos(jt) - cos((j-1)t).
pub fn cos_table(n: u64, bits: u64) -> Vec<RatInterval> {
    let mut out = Vec::with_capacity(n as usize);
    out.push(RatInterval::point(Rat::one()));
    if n == 1 {
        return out;
    }
    if n == 2 {
        out.push(RatInterval::point(-Rat::one()));
        return out;
    }
    let pi = pi_interval(bits + 8);
    let theta = pi.scale(&Rat::new(BigInt::from(2), BigInt::from(n)));
    let c1 = cos_interval(&theta, bits + 8);
    out.push(c1.clone());
    let two = Rat::from_integer(BigInt::from(2));
    for j in 2..n {
        let prev = &out[(j - 1) as usize];
        let prev2 = &out[(j - 2) as usize];
        let next = c1.scale(&two).mul(prev).sub(prev2).round_out(bits + 8);
        out.push(next);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_is_close() {
        let pi = pi_interval(64);
        let lo = Rat::new(BigInt::from(3141592653589793238i64), BigInt::from(1000000000000000000i64));
        let hi = Rat::new(BigInt::from(3141592653589793239i64), BigInt::from(1000000000000000000i64));
        assert!(pi.lo < hi && pi.hi > lo);
        assert!(pi.width() < Rat::new(BigInt::one(), BigInt::one() << 60));
    }

    #[test]
    fn cos_values() {
        // cos(2*pi/4) = 0, cos(2*pi/6) = 1/2, cos(2*pi*3/6) = -1
        let t4 = cos_table(4, 64);
        assert!(t4[1].contains_zero());
        let t6 = cos_table(6, 64);
        let half = Rat::new(BigInt::one(), BigInt::from(2));
        assert!(t6[1].lo <= half && half <= t6[1].hi);
        assert!(t6[3].lo <= -Rat::one() && -Rat::one() <= t6[3].hi);
    }
}
