//! From a tuple of roots of unity to candidate cylinder widths: the widths
//! are the residues of `C z^(g-1) / prod_i (z - x_i)(z - x_i^-1)` at the
//! `x_i`, normalized so the first width is 1.

use super::systems::{check_root_preconditions, period_system_check};
use crate::exact::{span_report, CycNum, RootOfUnity, Sign};
use alloc::vec::Vec;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ResidueRejection {
    /// Roots coincide, contain an inverse pair, or contain 1 or -1.
    InvalidRoots,
    NonRealResidue,
    WrongSpanDegree(usize),
    NonTotallyRealSpan,
    NonPositiveWidth(usize),
}

impl core::fmt::Display for ResidueRejection {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ResidueRejection::InvalidRoots => write!(f, "invalid root tuple"),
            ResidueRejection::NonRealResidue => write!(f, "residue ratio is not real"),
            ResidueRejection::WrongSpanDegree(d) => write!(f, "width span has degree {}", d),
            ResidueRejection::NonTotallyRealSpan => write!(f, "width span is not totally real"),
            ResidueRejection::NonPositiveWidth(i) => write!(f, "width {} is not positive", i),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ResidueOutcome {
    /// Normalized widths, first entry 1.
    pub widths: Vec<CycNum>,
    /// The constant making the first residue 1.
    pub scale: CycNum,
}

/// Raw residues of `z^(g-1) / prod (z - x_i)(z - x_i^-1)` at each `x_i`.
pub fn raw_residues(x: &[RootOfUnity]) -> Result<Vec<CycNum>, ResidueRejection> {
    if x.len() < 2 || x.iter().any(|r| r.is_real()) {
        return Err(ResidueRejection::InvalidRoots);
    }
    if check_root_preconditions(x).is_err() {
        return Err(ResidueRejection::InvalidRoots);
    }
    let g = x.len();
    let vals: Vec<CycNum> = x.iter().map(|r| r.value()).collect();
    let inv_vals: Vec<CycNum> = x.iter().map(|r| r.inverse().value()).collect();
    let mut out = Vec::with_capacity(g);
    for i in 0..g {
        let mut den = vals[i].sub(&inv_vals[i]);
        for j in 0..g {
            if j == i {
                continue;
            }
            den = den.mul(&vals[i].sub(&vals[j]));
            den = den.mul(&vals[i].sub(&inv_vals[j]));
        }
        let num = vals[i].pow(g as i64 - 1);
        out.push(num.div(&den).expect("distinct roots give nonzero denominator"));
    }
    Ok(out)
}

/// Widths from residues with the acceptance filter: every normalized width
/// must be real and positive, and the widths must span a `g`-dimensional
/// totally real space over the rationals.
pub fn residues_from_roots(x: &[RootOfUnity]) -> Result<ResidueOutcome, ResidueRejection> {
    let raw = raw_residues(x)?;
    let g = x.len();
    let scale = raw[0].inv().expect("residues are nonzero");
    let mut widths = Vec::with_capacity(g);
    for r in &raw {
        widths.push(r.mul(&scale));
    }
    for (i, w) in widths.iter().enumerate() {
        if !w.is_real() {
            return Err(ResidueRejection::NonRealResidue);
        }
        if w.real_sign_unchecked() != Sign::Positive {
            return Err(ResidueRejection::NonPositiveWidth(i));
        }
    }
    let report = span_report(&widths);
    if report.degree != g {
        return Err(ResidueRejection::WrongSpanDegree(report.degree));
    }
    if !report.totally_real {
        return Err(ResidueRejection::NonTotallyRealSpan);
    }
    // cross-verification: accepted residues always satisfy the power system
    assert!(
        period_system_check(x, &widths).unwrap_or(false),
        "accepted residues must satisfy the period system"
    );
    Ok(ResidueOutcome { widths, scale })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_tuple_accepted() {
        let x = [RootOfUnity::new(10, 1), RootOfUnity::new(10, 7)];
        let out = residues_from_roots(&x).unwrap();
        assert!(out.widths[0].is_one());
        let golden_minus = CycNum::root(5, 1).add(&CycNum::root(5, 4));
        assert_eq!(out.widths[1], golden_minus);
    }

    #[test]
    fn octagon_tuple_rejected() {
        // (z8, z8^3) has width ratio -1: positivity fails
        let x = [RootOfUnity::new(8, 1), RootOfUnity::new(8, 3)];
        match residues_from_roots(&x) {
            Err(ResidueRejection::NonPositiveWidth(1)) => {}
            other => panic!("expected positivity rejection, got {:?}", other),
        }
        // the positive labeling (z8, z8^5) has widths (1, 1): span too small
        let x = [RootOfUnity::new(8, 1), RootOfUnity::new(8, 5)];
        match residues_from_roots(&x) {
            Err(ResidueRejection::WrongSpanDegree(1)) => {}
            other => panic!("expected span rejection, got {:?}", other),
        }
    }

    #[test]
    fn invalid_tuples_rejected() {
        // inverse pair
        let x = [RootOfUnity::new(5, 1), RootOfUnity::new(5, 4)];
        assert!(matches!(residues_from_roots(&x), Err(ResidueRejection::InvalidRoots)));
        // contains -1
        let x = [RootOfUnity::new(2, 1), RootOfUnity::new(5, 1)];
        assert!(matches!(residues_from_roots(&x), Err(ResidueRejection::InvalidRoots)));
    }

    #[test]
    fn labeling_with_negative_width_rejected() {
        // the galois image of the golden tuple has a negative width ratio
        let x = [RootOfUnity::new(10, 1), RootOfUnity::new(10, 3)];
        match residues_from_roots(&x) {
            Err(ResidueRejection::NonPositiveWidth(_)) => {}
            other => panic!("expected positivity rejection, got {:?}", other),
        }
    }
}
