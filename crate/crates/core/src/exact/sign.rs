//! Rigorous sign determination for real cyclotomic numbers.
//!
//! The sign of a nonzero real algebraic number is decided by evaluating the
//! element with interval enclosures of the root-of-unity coordinates at
//! increasing precision; the exact zero test on the canonical form guarantees
//! termination.

use super::interval::{cos_table, RatInterval};
use super::{CycNum, Rat};
use core::cmp::Ordering;
use num_traits::{Signed, Zero};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct NotRealError;

impl core::fmt::Display for NotRealError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "value is not fixed by complex conjugation")
    }
}

impl CycNum {
    /// Exact sign of a real cyclotomic number under the standard embedding.
    /// Errors when the input is not fixed by complex conjugation.
    pub fn real_sign(&self) -> Result<Sign, NotRealError> {
        if !self.is_real() {
            return Err(NotRealError);
        }
        Ok(self.real_sign_unchecked())
    }

    /// Sign assuming reality was already established.
    pub fn real_sign_unchecked(&self) -> Sign {
        if self.is_zero() {
            return Sign::Zero;
        }
        if self.conductor() == 1 {
            return rat_sign(&self.coeffs()[0]);
        }
        let mut bits = 64u64;
        loop {
            let enclosure = self.real_enclosure(bits);
            if enclosure.lo.is_positive() {
                return Sign::Positive;
            }
            if enclosure.hi.is_negative() {
                return Sign::Negative;
            }
            bits *= 2;
        }
    }

    /// Interval containing the real part of the element; for real elements
    /// this encloses the value itself.
    pub fn real_enclosure(&self, bits: u64) -> RatInterval {
        let n = self.conductor();
        let table = cos_table(n, bits);
        let mut acc = RatInterval::point(Rat::zero());
        for (j, c) in self.coeffs().iter().enumerate() {
            if !c.is_zero() {
                acc = acc.add(&table[j].scale(c));
            }
        }
        acc.round_out(bits)
    }

    /// Total order on real cyclotomic numbers. Panics if either side fails
    /// the reality check; callers compare geometric lengths and coordinates
    /// which are real by construction.
    pub fn cmp_real(&self, other: &CycNum) -> Ordering {
        match self.sub(other).real_sign().expect("cmp_real on non-real value") {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        }
    }

    pub fn is_positive_real(&self) -> bool {
        self.real_sign_unchecked() == Sign::Positive
    }

    pub fn min_real(self, other: CycNum) -> CycNum {
        if self.cmp_real(&other) == Ordering::Greater {
            other
        } else {
            self
        }
    }

    pub fn max_real(self, other: CycNum) -> CycNum {
        if self.cmp_real(&other) == Ordering::Less {
            other
        } else {
            self
        }
    }
}

fn rat_sign(r: &Rat) -> Sign {
    if r.is_zero() {
        Sign::Zero
    } else if r.is_positive() {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_i64;

    #[test]
    fn sign_examples() {
        // 2 cos(72 deg) > 0
        let a = CycNum::root(5, 1).add(&CycNum::root(5, 4));
        assert_eq!(a.real_sign().unwrap(), Sign::Positive);
        // zeta_3 + zeta_3^2 = -1
        let b = CycNum::root(3, 1).add(&CycNum::root(3, 2));
        assert_eq!(b.real_sign().unwrap(), Sign::Negative);
        assert_eq!(CycNum::zero().real_sign().unwrap(), Sign::Zero);
        // zeta_5 is not real
        assert!(CycNum::root(5, 1).real_sign().is_err());
    }

    #[test]
    fn sign_is_odd() {
        let vals = [
            CycNum::root(5, 1).add(&CycNum::root(5, 4)),
            CycNum::root(7, 2).add(&CycNum::root(7, 5)).sub(&CycNum::from_rat(rat_i64(1, 3))),
            CycNum::from_rat(rat_i64(-2, 7)),
        ];
        for v in vals {
            let s = v.real_sign().unwrap().as_i32();
            let t = v.neg().real_sign().unwrap().as_i32();
            assert_eq!(s * t, -1);
        }
    }

    #[test]
    fn close_call_resolves() {
        // 2cos(2 pi / 7) - 2cos(2 pi / 7 + tiny rational offset) style values
        // are awkward; instead test a genuinely small nonzero number:
        // (zeta_7 + zeta_7^6) - 5/4 = 2cos(2pi/7) - 1.25 ~ -0.0031
        let v = CycNum::root(7, 1)
            .add(&CycNum::root(7, 6))
            .sub(&CycNum::from_rat(rat_i64(5, 4)));
        assert_eq!(v.real_sign().unwrap(), Sign::Negative);
    }
}
