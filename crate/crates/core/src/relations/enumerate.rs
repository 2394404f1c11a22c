//! Exhaustive enumeration of width-generating root tuples.
//!
//! A tuple is stored as a set of inverse pairs `{x, x^-1}`: the residue at
//! `x^-1` is minus the residue at `x`, so which member of a pair is labeled
//! is a sign convention. The enumeration picks the labeling with all widths
//! positive, which always exists once the widths are real and nonzero.

use super::residues::{raw_residues, ResidueRejection};
use super::vanishing::order_lcm_of;
use crate::exact::{gcd_u64, lcm_u64, span_report, CycNum, Rat, RootOfUnity, Sign};
use alloc::vec::Vec;
use num_bigint::BigInt;

/// A normalized root tuple with its positive real widths (first width 1)
/// and the residue scale constant.
#[derive(Clone, Debug)]
pub struct PeriodTuple {
    pub genus: usize,
    pub roots: Vec<RootOfUnity>,
    pub widths: Vec<CycNum>,
    pub scale: CycNum,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TupleRejection {
    Residue(ResidueRejection),
    SpanNotField,
}

impl From<ResidueRejection> for TupleRejection {
    fn from(r: ResidueRejection) -> Self {
        TupleRejection::Residue(r)
    }
}

impl PeriodTuple {
    /// Builds a tuple from an unordered set of inverse pairs, choosing the
    /// positive labeling. The width span must be a totally real field of
    /// degree equal to the genus.
    pub fn from_pair_representatives(reps: &[RootOfUnity]) -> Result<Self, TupleRejection> {
        let g = reps.len();
        let raw = raw_residues(reps)?;
        let scale = raw[0].inv().expect("nonzero residue");
        let mut roots = reps.to_vec();
        let mut widths = Vec::with_capacity(g);
        for (i, r) in raw.iter().enumerate() {
            let w = r.mul(&scale);
            if !w.is_real() {
                return Err(ResidueRejection::NonRealResidue.into());
            }
            match w.real_sign_unchecked() {
                Sign::Positive => widths.push(w),
                Sign::Negative => {
                    // flip to the inverse pair member; the residue negates
                    roots[i] = roots[i].inverse();
                    widths.push(w.neg());
                }
                Sign::Zero => unreachable!("residues are nonzero"),
            }
        }
        let report = span_report(&widths);
        if report.degree != g {
            return Err(ResidueRejection::WrongSpanDegree(report.degree).into());
        }
        if !report.totally_real {
            return Err(ResidueRejection::NonTotallyRealSpan.into());
        }
        if !report.is_field {
            return Err(TupleRejection::SpanNotField);
        }
        Ok(PeriodTuple {
            genus: g,
            roots,
            widths,
            scale,
        })
    }

    pub fn order_lcm(&self) -> u64 {
        order_lcm_of(&self.roots)
    }

    /// Canonical sort key: conductor first, then the root list.
    pub fn sort_key(&self) -> (u64, Vec<(u64, u64)>) {
        (
            self.order_lcm(),
            self.roots.iter().map(|r| (r.order(), r.exponent())).collect(),
        )
    }
}

/// An inverse pair `{zeta_n^e, zeta_n^(n-e)}` keyed by its canonical member
/// (the one with smaller exponent).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct RootPair {
    pub order: u64,
    pub exponent: u64,
}

impl RootPair {
    pub fn representative(&self) -> RootOfUnity {
        RootOfUnity::new(self.order, self.exponent as i64)
    }

    pub fn of(root: RootOfUnity) -> Self {
        let e = root.exponent().min(root.order() - root.exponent());
        RootPair {
            order: root.order(),
            exponent: e,
        }
    }

    fn galois_image(&self, t: u64) -> Self {
        RootPair::of(self.representative().galois_apply(t))
    }
}

/// All inverse pairs of primitive order `3..=cap`.
pub fn pair_classes(order_cap: u64) -> Vec<RootPair> {
    let mut out = Vec::new();
    for n in 3..=order_cap {
        for e in 1..n {
            if 2 * e < n && gcd_u64(e, n) == 1 {
                out.push(RootPair { order: n, exponent: e });
            }
        }
    }
    out
}

/// Is this pair set the lexicographically smallest member of its orbit
/// under the simultaneous Galois action?
fn is_galois_canonical(set: &[RootPair]) -> bool {
    let l = set.iter().fold(1u64, |acc, p| lcm_u64(acc, p.order));
    let key: Vec<(u64, u64)> = set.iter().map(|p| (p.order, p.exponent)).collect();
    for t in 2..l {
        if gcd_u64(t, l) != 1 {
            continue;
        }
        let mut img: Vec<(u64, u64)> = set
            .iter()
            .map(|p| {
                let q = p.galois_image(t);
                (q.order, q.exponent)
            })
            .collect();
        img.sort_unstable();
        if img < key {
            return false;
        }
    }
    true
}

/// Exhaustive enumeration of accepted tuples for a given genus, with the
/// least common multiple of the root orders bounded by `order_cap`.
/// The output is deduplicated modulo permutation, inversion of individual
/// roots, and the simultaneous Galois action, and is sorted canonically.
pub fn enumerate_period_tuples(genus: usize, order_cap: u64) -> Vec<PeriodTuple> {
    enumerate_period_tuples_stats(genus, order_cap).0
}

/// Same, also reporting how many pair sets were examined and how many
/// passed the residue filter before Galois deduplication.
pub fn enumerate_period_tuples_stats(genus: usize, order_cap: u64) -> (Vec<PeriodTuple>, u64, u64) {
    assert!(genus >= 2);
    let classes = pair_classes(order_cap);
    let mut out = Vec::new();
    let mut sets_seen = 0u64;
    let mut accepted = 0u64;
    let mut stack: Vec<usize> = Vec::new();
    enumerate_rec(
        &classes,
        genus,
        order_cap,
        0,
        1,
        &mut stack,
        &mut |set: &[RootPair]| {
            sets_seen += 1;
            let reps: Vec<RootOfUnity> = set.iter().map(|p| p.representative()).collect();
            if let Ok(t) = PeriodTuple::from_pair_representatives(&reps) {
                accepted += 1;
                if is_galois_canonical(set) {
                    out.push(t);
                }
            }
        },
    );
    out.sort_by_key(|t| t.sort_key());
    (out, sets_seen, accepted)
}

fn enumerate_rec(
    classes: &[RootPair],
    remaining: usize,
    cap: u64,
    start: usize,
    lcm_so_far: u64,
    stack: &mut Vec<usize>,
    visit: &mut impl FnMut(&[RootPair]),
) {
    if remaining == 0 {
        let set: Vec<RootPair> = stack.iter().map(|&i| classes[i]).collect();
        visit(&set);
        return;
    }
    for i in start..classes.len() {
        let l = lcm_u64(lcm_so_far, classes[i].order);
        if l > cap {
            continue;
        }
        stack.push(i);
        enumerate_rec(classes, remaining - 1, cap, i + 1, l, stack, visit);
        stack.pop();
    }
}

/// Candidate values for the normalized slit ratio `w_1 / b_1`.
///
/// The antiderivative of the width-generating differential is a sum of
/// logarithms; the relative period between the two zeros is determined up
/// to integer multiples of the residues. With `x_i^2 = e^(2 pi i q_i)`,
/// `q_i` the turn fraction in `[0,1)`, the candidates are
/// `+- sum_i b_i (q_i + n_i)` with integer windings `|n_i| <= winding_cap`,
/// filtered to positive values. Every candidate lies in the span of the
/// widths.
pub fn relative_period_candidates(t: &PeriodTuple, winding_cap: i64) -> Vec<CycNum> {
    let g = t.genus;
    let fractions: Vec<Rat> = t.roots.iter().map(|x| x.pow(2).turn_fraction()).collect();
    let mut values: Vec<CycNum> = Vec::new();
    let mut windings = alloc::vec![-winding_cap; g];
    loop {
        for sign in [1i64, -1] {
            let mut v = CycNum::zero();
            for i in 0..g {
                let q = &fractions[i] + Rat::from_integer(BigInt::from(windings[i]));
                v = v.add(&t.widths[i].scale(&q));
            }
            if sign < 0 {
                v = v.neg();
            }
            if v.real_sign_unchecked() == Sign::Positive && !values.iter().any(|u| u == &v) {
                values.push(v);
            }
        }
        // advance the winding vector
        let mut i = 0;
        loop {
            if i == g {
                values.sort_by(|a, b| a.cmp_real(b));
                return values;
            }
            if windings[i] < winding_cap {
                windings[i] += 1;
                break;
            }
            windings[i] = -winding_cap;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_i64;

    #[test]
    fn pair_class_counts() {
        // orders 3..=10 give 1+1+2+1+3+2+3+2 = 15 classes
        assert_eq!(pair_classes(10).len(), 15);
        assert_eq!(pair_classes(4).len(), 2);
    }

    #[test]
    fn small_cap_is_empty() {
        assert!(enumerate_period_tuples(2, 4).is_empty());
    }

    #[test]
    fn golden_class_found_at_cap_ten() {
        let tuples = enumerate_period_tuples(2, 10);
        assert!(!tuples.is_empty());
        // the decagon class: roots of order 10 with widths {1, (sqrt5-1)/2}
        let golden_minus = CycNum::root(5, 1).add(&CycNum::root(5, 4));
        let found = tuples.iter().any(|t| {
            t.roots.iter().all(|r| r.order() == 10) && t.widths.contains(&golden_minus)
        });
        assert!(found, "decagon tuple missing: {:?}", tuples.iter().map(|t| t.sort_key()).collect::<Vec<_>>());
        // every accepted tuple satisfies the invariants
        for t in &tuples {
            assert!(t.widths[0].is_one());
            let rep = span_report(&t.widths);
            assert_eq!(rep.degree, 2);
            assert!(rep.is_field && rep.totally_real);
        }
    }

    #[test]
    fn monotone_in_cap() {
        let small = enumerate_period_tuples(2, 8);
        let large = enumerate_period_tuples(2, 10);
        for t in &small {
            assert!(large.iter().any(|u| u.sort_key() == t.sort_key()));
        }
    }

    #[test]
    fn golden_slit_ratio_is_a_candidate() {
        let x = [RootOfUnity::new(10, 1), RootOfUnity::new(10, 7)];
        let t = PeriodTuple::from_pair_representatives(&x).unwrap();
        let cands = relative_period_candidates(&t, 2);
        // sqrt5 / 5 = (2 phi - 1)/5
        let target = CycNum::root(5, 1)
            .add(&CycNum::root(5, 4))
            .sub(&CycNum::root(5, 2))
            .sub(&CycNum::root(5, 3))
            .scale(&rat_i64(1, 5));
        assert!(cands.iter().any(|c| c == &target));
        for c in &cands {
            assert_eq!(c.real_sign().unwrap(), Sign::Positive);
        }
        let bound = (2 * 2 + 1u64).pow(2) as usize * 2;
        assert!(cands.len() <= bound);
    }
}
