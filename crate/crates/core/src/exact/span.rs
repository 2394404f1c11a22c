//! Rational span of a list of cyclotomic numbers: dimension over Q, whether
//! the span is multiplicatively closed (and hence a field), and whether it is
//! totally real.

use super::linalg::{rat_mat_rank, rat_solve};
use super::{lcm_u64, CycNum, Rat};
use alloc::vec::Vec;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanReport {
    /// Dimension over Q of the Q-vector space spanned by the inputs.
    pub degree: usize,
    /// True when the span contains 1 and is closed under multiplication,
    /// i.e. the span itself is the Q-algebra (hence a field) it generates.
    pub is_field: bool,
    /// True when every element of the span is fixed by complex conjugation.
    /// For subfields of cyclotomic fields this coincides with total reality.
    pub totally_real: bool,
}

/// Dimension over Q of the span of `v`.
pub fn q_span_degree(v: &[CycNum]) -> usize {
    span_report(v).degree
}

pub fn span_report(v: &[CycNum]) -> SpanReport {
    assert!(!v.is_empty(), "span of an empty list");
    let l = v.iter().fold(1u64, |acc, x| lcm_u64(acc, x.conductor()));
    let coords: Vec<Vec<Rat>> = v.iter().map(|x| x.lift_coords(l)).collect();
    let degree = rat_mat_rank(&coords);

    let in_span = |target: &CycNum| -> bool {
        let cols = coords.len();
        let rows = coords[0].len();
        let mut a: Vec<Vec<Rat>> = Vec::with_capacity(rows);
        for r in 0..rows {
            a.push((0..cols).map(|c| coords[c][r].clone()).collect());
        }
        let b = target.lift_coords(l);
        rat_solve(&a, &b).is_some()
    };

    let mut is_field = degree > 0 && in_span(&CycNum::one());
    if is_field {
        'outer: for i in 0..v.len() {
            for j in i..v.len() {
                if !in_span(&v[i].mul(&v[j])) {
                    is_field = false;
                    break 'outer;
                }
            }
        }
    }

    let totally_real = v.iter().all(|x| x.is_real());

    SpanReport {
        degree,
        is_field,
        totally_real,
    }
}

/// Smallest conductor `m` with every element of `v` in `Q(zeta_m)`.
pub fn span_conductor(v: &[CycNum]) -> u64 {
    let minimized: Vec<CycNum> = v.iter().map(|x| x.minimized()).collect();
    let l = minimized
        .iter()
        .fold(1u64, |acc, x| lcm_u64(acc, x.conductor()));
    for d in super::divisors(l) {
        if d > 2 && d % 4 == 2 {
            continue;
        }
        let d = if d == 2 { 1 } else { d };
        if minimized.iter().all(|x| d % x.conductor() == 0) {
            return d;
        }
    }
    l
}

/// Discriminant of the lattice spanned by `basis` inside the real field it
/// generates: `det(Tr(b_i b_j))` with traces taken in the field of degree
/// `deg` (which must equal the span degree of the basis).
pub fn span_discriminant(basis: &[CycNum], deg: usize) -> Rat {
    let l = basis
        .iter()
        .fold(1u64, |acc, x| lcm_u64(acc, x.conductor()));
    let phi_l = super::euler_phi(l) as usize;
    let scale = Rat::new(
        num_bigint::BigInt::from(deg as u64),
        num_bigint::BigInt::from(phi_l as u64),
    );
    let g = basis.len();
    let mut gram: Vec<Vec<Rat>> = Vec::with_capacity(g);
    for i in 0..g {
        let mut row = Vec::with_capacity(g);
        for j in 0..g {
            let prod = basis[i].mul(&basis[j]).lift_to(l);
            row.push(prod.trace_to_q() * &scale);
        }
        gram.push(row);
    }
    super::linalg::rat_mat_det(&gram)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_int;

    #[test]
    fn degrees() {
        let one = CycNum::one();
        let two = CycNum::from_int(2);
        let three = CycNum::from_int(3);
        assert_eq!(q_span_degree(&[one.clone(), two, three]), 1);
        let golden = CycNum::root(5, 1).add(&CycNum::root(5, 4));
        assert_eq!(q_span_degree(&[one.clone(), golden]), 2);
        let z5 = CycNum::root(5, 1);
        assert_eq!(q_span_degree(&[one, z5.clone(), z5.mul(&z5)]), 3);
    }

    #[test]
    fn field_and_reality_flags() {
        let one = CycNum::one();
        let golden = CycNum::root(5, 1).add(&CycNum::root(5, 4));
        let rep = span_report(&[one.clone(), golden.clone()]);
        assert_eq!(rep.degree, 2);
        assert!(rep.is_field);
        assert!(rep.totally_real);
        // {1, zeta_5} spans a 2-dimensional space that is not a field
        let rep2 = span_report(&[one, CycNum::root(5, 1)]);
        assert_eq!(rep2.degree, 2);
        assert!(!rep2.is_field);
        assert!(!rep2.totally_real);
    }

    #[test]
    fn conductor_and_discriminant() {
        let one = CycNum::one();
        let golden_m1 = CycNum::root(5, 1).add(&CycNum::root(5, 4));
        assert_eq!(span_conductor(&[one.clone(), golden_m1.clone()]), 5);
        // disc of the basis {1, (sqrt5 - 1)/2} of Q(sqrt5) is 5
        let disc = span_discriminant(&[one, golden_m1], 2);
        assert_eq!(disc, rat_int(5));
    }
}
