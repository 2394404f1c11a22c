//! The linear systems satisfied by cylinder widths: the raw coefficient
//! system of the partial-fraction identity, the intermediate eliminated
//! form, and the power form used by the search. All three have the same
//! solutions; evaluating all of them is kept as a self-test.

use crate::exact::{CycNum, RootOfUnity};
use alloc::vec;
use alloc::vec::Vec;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoincidentRoots;

impl core::fmt::Display for CoincidentRoots {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "roots coincide or contain an inverse pair")
    }
}

pub fn check_root_preconditions(x: &[RootOfUnity]) -> Result<(), CoincidentRoots> {
    for i in 0..x.len() {
        for j in 0..x.len() {
            if i != j && (x[i] == x[j] || x[i] == x[j].inverse()) {
                return Err(CoincidentRoots);
            }
        }
    }
    Ok(())
}

/// Power form: `sum_i b_i (x_i^e - x_i^-e) = 0` for `e = 1..g-1`.
pub fn period_system_check(x: &[RootOfUnity], b: &[CycNum]) -> Result<bool, CoincidentRoots> {
    assert_eq!(x.len(), b.len());
    assert!(x.len() >= 2);
    check_root_preconditions(x)?;
    Ok(power_system_holds(x, b))
}

fn power_system_holds(x: &[RootOfUnity], b: &[CycNum]) -> bool {
    let g = x.len();
    for e in 1..g as i64 {
        let mut s = CycNum::zero();
        for (xi, bi) in x.iter().zip(b.iter()) {
            let diff = xi.pow(e).value().sub(&xi.pow(-e).value());
            s = s.add(&bi.mul(&diff));
        }
        if !s.is_zero() {
            return false;
        }
    }
    true
}

/// Eliminated form: `sum_i b_i (x_i - x_i^-1)(x_i + x_i^-1)^(e-1) = 0`.
fn eliminated_system_holds(x: &[RootOfUnity], b: &[CycNum]) -> bool {
    let g = x.len();
    let diffs: Vec<CycNum> = x.iter().map(|xi| xi.value().sub(&xi.inverse().value())).collect();
    let sums: Vec<CycNum> = x.iter().map(|xi| xi.value().add(&xi.inverse().value())).collect();
    for e in 1..g {
        let mut s = CycNum::zero();
        for i in 0..g {
            let mut term = diffs[i].clone();
            for _ in 0..e - 1 {
                term = term.mul(&sums[i]);
            }
            s = s.add(&b[i].mul(&term));
        }
        if !s.is_zero() {
            return false;
        }
    }
    true
}

/// Raw form: the numerator polynomial of
/// `sum_i b_i (1/(z - x_i) - 1/(z - x_i^-1))` over the common denominator
/// must be a constant multiple of `z^(g-1)`, i.e. every other coefficient
/// vanishes. The numerator is
/// `sum_i b_i (x_i - x_i^-1) prod_{j != i} (z^2 - (x_j + x_j^-1) z + 1)`.
fn raw_system_holds(x: &[RootOfUnity], b: &[CycNum]) -> bool {
    let g = x.len();
    let diffs: Vec<CycNum> = x.iter().map(|xi| xi.value().sub(&xi.inverse().value())).collect();
    let sums: Vec<CycNum> = x.iter().map(|xi| xi.value().add(&xi.inverse().value())).collect();
    let mut num = vec![CycNum::zero(); 2 * g - 1];
    for i in 0..g {
        let mut poly = vec![CycNum::one()];
        for j in 0..g {
            if j == i {
                continue;
            }
            // multiply by z^2 - sums[j] z + 1
            let factor = [CycNum::one(), sums[j].neg(), CycNum::one()];
            poly = cyc_poly_mul(&poly, &factor);
        }
        let scale = b[i].mul(&diffs[i]);
        for (k, c) in poly.iter().enumerate() {
            num[k] = num[k].add(&scale.mul(c));
        }
    }
    num.iter()
        .enumerate()
        .all(|(k, c)| k == g - 1 || c.is_zero())
}

fn cyc_poly_mul(a: &[CycNum], b: &[CycNum]) -> Vec<CycNum> {
    let mut out = vec![CycNum::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            out[i + j] = out[i + j].add(&x.mul(y));
        }
    }
    out
}

/// Evaluates the raw, eliminated and power systems and reports whether all
/// three agree in truth value. Disagreement means an implementation bug,
/// never a property of the input.
pub fn equation_system_equivalence_check(g: usize, x: &[RootOfUnity], b: &[CycNum]) -> bool {
    assert_eq!(x.len(), g);
    assert_eq!(b.len(), g);
    let raw = raw_system_holds(x, b);
    let eliminated = eliminated_system_holds(x, b);
    let power = power_system_holds(x, b);
    raw == eliminated && eliminated == power
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_i64;

    #[test]
    fn power_system_examples() {
        // both imaginary parts positive: nonzero sum
        let x = [RootOfUnity::new(8, 1), RootOfUnity::new(8, 3)];
        let b = [CycNum::one(), CycNum::one()];
        assert!(!period_system_check(&x, &b).unwrap());
        // the genus-two golden tuple
        let x = [RootOfUnity::new(10, 1), RootOfUnity::new(10, 7)];
        let golden = CycNum::root(5, 1).add(&CycNum::root(5, 4));
        let b = [CycNum::one(), golden];
        assert!(period_system_check(&x, &b).unwrap());
        // equal rational widths with nonvanishing difference sum
        let x = [RootOfUnity::new(5, 1), RootOfUnity::new(5, 2)];
        let q = CycNum::from_rat(rat_i64(3, 2));
        let b = [q.clone(), q];
        assert!(!period_system_check(&x, &b).unwrap());
    }

    #[test]
    fn precondition_rejects_inverse_pairs() {
        let x = [RootOfUnity::new(5, 1), RootOfUnity::new(5, 4)];
        let b = [CycNum::one(), CycNum::one()];
        assert!(period_system_check(&x, &b).is_err());
    }

    #[test]
    fn systems_agree_on_solutions_and_non_solutions() {
        let golden = CycNum::root(5, 1).add(&CycNum::root(5, 4));
        let cases: Vec<(Vec<RootOfUnity>, Vec<CycNum>)> = vec![
            (
                vec![RootOfUnity::new(10, 1), RootOfUnity::new(10, 7)],
                vec![CycNum::one(), golden],
            ),
            (
                vec![RootOfUnity::new(8, 1), RootOfUnity::new(8, 3)],
                vec![CycNum::one(), CycNum::one()],
            ),
            (
                vec![
                    RootOfUnity::new(7, 1),
                    RootOfUnity::new(7, 2),
                    RootOfUnity::new(7, 3),
                ],
                vec![CycNum::one(), CycNum::from_int(2), CycNum::from_int(3)],
            ),
            (
                vec![
                    RootOfUnity::new(9, 1),
                    RootOfUnity::new(12, 1),
                    RootOfUnity::new(5, 2),
                ],
                vec![CycNum::from_int(1), CycNum::root(5, 1).add(&CycNum::root(5, 4)), CycNum::from_int(-2)],
            ),
        ];
        for (x, b) in cases {
            assert!(equation_system_equivalence_check(x.len(), &x, &b));
        }
    }
}
