//! Vanishing sums of roots of unity: exact zero testing that stays cheap at
//! large conductors, irreducible decomposition by subset search, and
//! rotation normalization.

use crate::exact::{gcd_u64, lcm_u64, CycNum, Rat, RootOfUnity};
use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use num_traits::Zero;

/// Exact zero test for a sum of rational multiples of roots of unity given
/// as exponents modulo `modulus`. Works prime power by prime power, so the
/// cost depends on the number of terms and not on `phi(modulus)`.
///
/// The recursion uses the basis `1, z, ..., z^(phi(q)-1)` of `Q(zeta_q)`
/// over `Q(zeta_{m})` for `q = p^a`, `m = modulus/q`: exponents with top
/// digit `p-1` rewrite as minus the sum over the lower digits, and the sum
/// vanishes exactly when every basis coordinate vanishes recursively.
pub fn root_sum_is_zero(terms: &[(Rat, u64)], modulus: u64) -> bool {
    let live: Vec<(Rat, u64)> = terms
        .iter()
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, e)| (c.clone(), e % modulus))
        .collect();
    if live.is_empty() {
        return true;
    }
    if modulus == 1 {
        let mut s = Rat::zero();
        for (c, _) in &live {
            s += c;
        }
        return s.is_zero();
    }
    // smallest prime factor of the modulus
    let mut p = 2u64;
    while modulus % p != 0 {
        p += 1;
    }
    let mut q = 1u64;
    let mut m = modulus;
    while m % p == 0 {
        m /= p;
        q *= p;
    }
    // zeta_modulus^e = zeta_q^(e*m' mod q) * zeta_m^(e*q' mod m)
    // with m*m' + q*q' = 1.
    let (mp, qp) = bezout(m, q);
    let step = q / p; // p^(a-1)
    let mut buckets: BTreeMap<u64, Vec<(Rat, u64)>> = BTreeMap::new();
    for (c, e) in live {
        let eq = mul_mod(e % q, mp, q);
        let em = if m == 1 { 0 } else { mul_mod(e % m, qp, m) };
        buckets.entry(eq).or_default().push((c, em));
    }
    // coordinates with respect to zeta_q^c, c < phi(q) = (p-1)*step:
    // S_c - S_{(p-1)*step + (c mod step)} must vanish for every c.
    let phi_q = (p - 1) * step;
    let mut residues: Vec<u64> = buckets
        .keys()
        .map(|&c| c % step)
        .collect();
    residues.sort_unstable();
    residues.dedup();
    for r in residues {
        let top = buckets.get(&(phi_q + r));
        for j in 0..p - 1 {
            let c = j * step + r;
            let lower = buckets.get(&c);
            let mut diff: Vec<(Rat, u64)> = Vec::new();
            if let Some(v) = lower {
                diff.extend(v.iter().cloned());
            }
            if let Some(v) = top {
                diff.extend(v.iter().map(|(c, e)| (-c.clone(), *e)));
            }
            if !root_sum_is_zero(&diff, m) {
                return false;
            }
        }
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// Returns `(m', q')` with `m*m' + q*q' = 1`, both reduced to be
/// nonnegative modulo the other factor.
fn bezout(m: u64, q: u64) -> (u64, u64) {
    // extended euclid on (m, q), gcd = 1
    let (mut r0, mut r1) = (m as i128, q as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let quo = r0 / r1;
        let r = r0 - quo * r1;
        r0 = r1;
        r1 = r;
        let s = s0 - quo * s1;
        s0 = s1;
        s1 = s;
        let t = t0 - quo * t1;
        t0 = t1;
        t1 = t;
    }
    debug_assert_eq!(r0, 1);
    let mp = s0.rem_euclid(q.max(1) as i128) as u64; // m*m' = 1 mod q
    let qp = t0.rem_euclid(m.max(1) as i128) as u64; // q*q' = 1 mod m
    (mp, qp)
}

/// A formal sum of real-coefficient multiples of pairwise distinct roots of
/// unity. Duplicate roots are merged and zero terms dropped on construction;
/// terms are kept sorted by `(order, exponent)` of the root.
#[derive(Clone, Debug, PartialEq)]
pub struct VanishingRelation {
    terms: Vec<(CycNum, RootOfUnity)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RelationError {
    NonRealCoefficient,
    NotVanishing,
    Empty,
}

impl core::fmt::Display for RelationError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            RelationError::NonRealCoefficient => write!(f, "relation coefficient is not real"),
            RelationError::NotVanishing => write!(f, "relation does not sum to zero"),
            RelationError::Empty => write!(f, "relation has no terms"),
        }
    }
}

impl VanishingRelation {
    pub fn new(terms: Vec<(CycNum, RootOfUnity)>) -> Result<Self, RelationError> {
        let mut merged: Vec<(CycNum, RootOfUnity)> = Vec::new();
        for (c, r) in terms {
            if !c.is_real() {
                return Err(RelationError::NonRealCoefficient);
            }
            if let Some(slot) = merged.iter_mut().find(|(_, r2)| *r2 == r) {
                slot.0 = slot.0.add(&c);
            } else {
                merged.push((c, r));
            }
        }
        merged.retain(|(c, _)| !c.is_zero());
        merged.sort_by(|a, b| (a.1.order(), a.1.exponent()).cmp(&(b.1.order(), b.1.exponent())));
        Ok(VanishingRelation { terms: merged })
    }

    pub fn from_rational_terms(terms: &[(Rat, RootOfUnity)]) -> Self {
        let cyc: Vec<(CycNum, RootOfUnity)> = terms
            .iter()
            .map(|(c, r)| (CycNum::from_rat(c.clone()), *r))
            .collect();
        VanishingRelation::new(cyc).unwrap()
    }

    pub fn terms(&self) -> &[(CycNum, RootOfUnity)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Expands every cyclotomic coefficient into rational multiples of roots
    /// of unity, returning `(coeff, exponent)` pairs over a common modulus.
    fn expanded(&self) -> (Vec<(Rat, u64)>, u64) {
        let mut modulus = 1u64;
        for (c, r) in &self.terms {
            modulus = lcm_u64(modulus, lcm_u64(c.conductor(), r.order()));
        }
        let mut out = Vec::new();
        for (c, r) in &self.terms {
            let nc = c.conductor();
            let root_exp = if r.order() == 1 {
                0
            } else {
                r.exponent() * (modulus / r.order())
            };
            for (j, coeff) in c.coeffs().iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                let e = (root_exp + j as u64 * (modulus / nc)) % modulus;
                out.push((coeff.clone(), e));
            }
        }
        (out, modulus)
    }

    /// Exact test of the defining equation.
    pub fn is_vanishing(&self) -> bool {
        let (terms, modulus) = self.expanded();
        root_sum_is_zero(&terms, modulus)
    }

    fn subset(&self, mask: u32) -> VanishingRelation {
        let terms = self
            .terms
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, t)| t.clone())
            .collect();
        VanishingRelation { terms }
    }

    /// Splits a vanishing relation into irreducible vanishing parts: minimal
    /// vanishing subsets are peeled off first, with ties broken by the
    /// lexicographic order of the index sets over the canonical term order.
    pub fn decompose_irreducible(&self) -> Result<Vec<VanishingRelation>, RelationError> {
        if !self.is_vanishing() {
            return Err(RelationError::NotVanishing);
        }
        let mut parts = Vec::new();
        let mut rest = self.clone();
        while !rest.is_empty() {
            let k = rest.len();
            assert!(k <= 31, "relation too long for subset search");
            let found = minimal_vanishing_subset(&rest);
            match found {
                Some(mask) => {
                    parts.push(rest.subset(mask));
                    let co_mask = !mask & ((1u32 << k) - 1);
                    rest = rest.subset(co_mask);
                }
                None => {
                    // no proper vanishing subset: rest itself is irreducible
                    parts.push(rest.clone());
                    break;
                }
            }
        }
        Ok(parts)
    }

    /// True when no proper nonempty subset of the terms also vanishes.
    pub fn is_irreducible(&self) -> bool {
        self.is_vanishing() && minimal_vanishing_subset(self).is_none()
    }

    /// Multiplies every root by the inverse of the first root, making the
    /// first root 1. Coefficients are unchanged.
    pub fn normalize_rotation(&self) -> VanishingRelation {
        if self.terms.is_empty() {
            return self.clone();
        }
        let inv = self.terms[0].1.inverse();
        let terms = self
            .terms
            .iter()
            .map(|(c, r)| (c.clone(), r.mul(&inv)))
            .collect();
        VanishingRelation::new(terms).unwrap()
    }

    /// Least common multiple of the root orders.
    pub fn order_lcm(&self) -> u64 {
        self.terms
            .iter()
            .fold(1u64, |acc, (_, r)| lcm_u64(acc, r.order()))
    }

    /// Direct evaluation as a field element (small conductors only).
    pub fn evaluate(&self) -> CycNum {
        let mut s = CycNum::zero();
        for (c, r) in &self.terms {
            s = s.add(&c.mul(&r.value()));
        }
        s
    }
}

/// Smallest proper nonempty vanishing subset in (size, lexicographic) order,
/// as a bitmask over the canonical term order, if one exists.
fn minimal_vanishing_subset(rel: &VanishingRelation) -> Option<u32> {
    let k = rel.len();
    for size in 1..k {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            let mask = combo.iter().fold(0u32, |m, &i| m | (1 << i));
            if rel.subset(mask).is_vanishing() {
                return Some(mask);
            }
            if !next_combination(&mut combo, k) {
                break;
            }
        }
    }
    None
}

fn next_combination(combo: &mut [usize], k: usize) -> bool {
    let size = combo.len();
    let mut i = size;
    while i > 0 {
        i -= 1;
        if combo[i] < k - size + i {
            combo[i] += 1;
            for j in i + 1..size {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Conductor of the rotation-normalized relation: the lcm of the root
/// orders after dividing by the first root, adjusted away from 2 mod 4.
pub fn normalized_conductor(rel: &VanishingRelation) -> u64 {
    let n = rel.normalize_rotation().order_lcm();
    if n > 2 && n % 4 == 2 {
        n / 2
    } else {
        n
    }
}

/// Do all roots of the rotation-normalized relation lie in `Q(zeta_n)`?
/// `n` is assumed even (every conductor bound produced here is).
pub fn normalized_roots_within(rel: &VanishingRelation, n: &num_bigint::BigUint) -> bool {
    use num_bigint::BigUint;
    use num_traits::Zero as _;
    let rot = rel.normalize_rotation();
    rot.terms.iter().all(|(_, r)| {
        let ord = BigUint::from(r.order());
        (n % ord).is_zero()
    })
}

pub fn order_lcm_of(roots: &[RootOfUnity]) -> u64 {
    roots.iter().fold(1u64, |acc, r| lcm_u64(acc, r.order()))
}

/// Convenience: gcd of many integers.
pub fn gcd_all(xs: &[u64]) -> u64 {
    xs.iter().fold(0u64, |acc, &x| gcd_u64(acc, x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_int;

    fn rel(terms: &[(i64, u64, i64)]) -> VanishingRelation {
        let t: Vec<(Rat, RootOfUnity)> = terms
            .iter()
            .map(|&(c, n, e)| (rat_int(c), RootOfUnity::new(n, e)))
            .collect();
        VanishingRelation::from_rational_terms(&t)
    }

    #[test]
    fn sparse_zero_test_agrees_with_direct() {
        // 1 + z3 + z3^2 = 0
        assert!(root_sum_is_zero(
            &[(rat_int(1), 0), (rat_int(1), 1), (rat_int(1), 2)],
            3
        ));
        // 1 + z5 != 0
        assert!(!root_sum_is_zero(&[(rat_int(1), 0), (rat_int(1), 1)], 5));
        // full 5th root sum
        let five: Vec<(Rat, u64)> = (0..5).map(|e| (rat_int(1), e)).collect();
        assert!(root_sum_is_zero(&five, 5));
        // mixed conductors: z6 - z6 = 0 coded at modulus 12
        assert!(root_sum_is_zero(&[(rat_int(1), 2), (rat_int(-1), 2)], 12));
        // 1 - z2 + z3 at modulus 6: 1 + 1 + z3 != 0
        assert!(!root_sum_is_zero(
            &[(rat_int(1), 0), (rat_int(-1), 3), (rat_int(1), 2)],
            6
        ));
        // zeta_6 = 1 + zeta_3: zeta_6 - 1 - zeta_3^2... check a known one:
        // zeta_6 + zeta_6^5 = 1: zeta_6 + zeta_6^5 - 1 = 0 at modulus 6
        assert!(root_sum_is_zero(
            &[(rat_int(1), 1), (rat_int(1), 5), (rat_int(-1), 0)],
            6
        ));
    }

    #[test]
    fn sparse_matches_cycnum_on_random_sums() {
        // cross-check the sparse test against direct field arithmetic
        let cases: &[&[(i64, u64, i64)]] = &[
            &[(1, 12, 1), (1, 12, 5), (1, 12, 9), (-1, 4, 1)],
            &[(2, 15, 1), (-2, 15, 1)],
            &[(1, 8, 1), (1, 8, 3), (1, 8, 5), (1, 8, 7)],
            &[(1, 7, 1), (1, 7, 2), (1, 7, 3), (1, 7, 4), (1, 7, 5), (1, 7, 6), (1, 1, 0)],
            &[(3, 9, 1), (-1, 9, 4), (2, 3, 1)],
        ];
        for case in cases {
            let r = rel(case);
            assert_eq!(r.is_vanishing(), r.evaluate().is_zero(), "case {:?}", case);
        }
    }

    #[test]
    fn vanishing_examples() {
        assert!(rel(&[(1, 1, 0), (1, 3, 1), (1, 3, 2)]).is_vanishing());
        assert!(!rel(&[(1, 1, 0), (1, 5, 1)]).is_vanishing());
        let five = rel(&[(1, 1, 0), (1, 5, 1), (1, 5, 2), (1, 5, 3), (1, 5, 4)]);
        assert!(five.is_vanishing());
    }

    #[test]
    fn decompose_examples() {
        // the full 5th root sum is a single irreducible part
        let five = rel(&[(1, 1, 0), (1, 5, 1), (1, 5, 2), (1, 5, 3), (1, 5, 4)]);
        let parts = five.decompose_irreducible().unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].len(), 5);
        // 1 + z3 + z3^2 is itself irreducible
        let three = rel(&[(1, 1, 0), (1, 3, 1), (1, 3, 2)]);
        let parts = three.decompose_irreducible().unwrap();
        assert_eq!(parts.len(), 1);
        // two stacked relations with disjoint roots decompose:
        // (1 + z3 + z3^2) + 2 z7 (1 + z3 + z3^2)
        let terms: Vec<(i64, u64, i64)> = vec![
            (1, 1, 0),
            (1, 3, 1),
            (1, 3, 2),
            (2, 7, 1),
            (2, 21, 10),
            (2, 21, 17),
        ];
        let stacked = rel(&terms);
        let parts = stacked.decompose_irreducible().unwrap();
        assert_eq!(parts.len(), 2);
        let sizes: Vec<usize> = parts.iter().map(|p| p.len()).collect();
        assert_eq!(sizes, vec![3, 3]);
        // parts partition the terms and re-sum to the input
        let total: usize = parts.iter().map(|p| p.len()).sum();
        assert_eq!(total, stacked.len());
        for p in &parts {
            assert!(p.is_vanishing());
            assert!(p.is_irreducible());
        }
    }

    #[test]
    fn rotation_examples() {
        let r = rel(&[(1, 5, 1), (1, 5, 2), (1, 5, 3)]);
        let n = r.normalize_rotation();
        let roots: Vec<(u64, u64)> = n.terms().iter().map(|(_, r)| (r.order(), r.exponent())).collect();
        assert_eq!(roots, vec![(1, 0), (5, 1), (5, 2)]);
        let r2 = rel(&[(1, 1, 0), (1, 3, 1)]);
        assert_eq!(r2.normalize_rotation(), r2);
        let r3 = rel(&[(1, 8, 3), (1, 8, 7)]);
        let n3 = r3.normalize_rotation();
        let roots3: Vec<(u64, u64)> = n3.terms().iter().map(|(_, r)| (r.order(), r.exponent())).collect();
        assert_eq!(roots3, vec![(1, 0), (2, 1)]);
    }

    #[test]
    fn duplicate_roots_merge() {
        let r = rel(&[(1, 1, 0), (1, 1, 0), (-1, 2, 1), (1, 3, 1), (1, 3, 2)]);
        // 2*1 + 1*(-1)*(-1)... the root -1 with coefficient -1 contributes +1;
        // total: 2 + 1 + (z3 + z3^2) = 2 + 1 - 1 = 2, not vanishing
        assert_eq!(r.len(), 4);
        assert!(!r.is_vanishing());
    }
}
