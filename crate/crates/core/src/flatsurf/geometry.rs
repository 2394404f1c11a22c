//! The linear identities between horizontal and vertical cylinder data:
//! regularity of the weighted intersection form, the unique solve for the
//! heights, and the finite twist lattice.

use crate::exact::{rat_mat_det, rat_solve, CycNum, Rat, Sign};
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Zero};

/// Geometric intersection numbers of horizontal core curves (rows) with
/// vertical core curves (columns).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionMatrix {
    rows: Vec<Vec<u64>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixError {
    Empty,
    Ragged,
    ZeroRow(usize),
    ZeroColumn(usize),
}

impl IntersectionMatrix {
    pub fn new(rows: Vec<Vec<u64>>) -> Result<Self, MatrixError> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(MatrixError::Empty);
        }
        let cols = rows[0].len();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(MatrixError::Ragged);
        }
        for (i, r) in rows.iter().enumerate() {
            if r.iter().all(|&e| e == 0) {
                return Err(MatrixError::ZeroRow(i));
            }
        }
        for j in 0..cols {
            if rows.iter().all(|r| r[j] == 0) {
                return Err(MatrixError::ZeroColumn(j));
            }
        }
        Ok(IntersectionMatrix { rows })
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> usize {
        self.rows[0].len()
    }

    pub fn entry(&self, i: usize, j: usize) -> u64 {
        self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    /// `E diag(m) E^T` as a rational matrix.
    pub fn weighted_gram(&self, m: &[Rat]) -> Vec<Vec<Rat>> {
        let g = self.row_count();
        let cols = self.col_count();
        assert_eq!(cols, m.len());
        let mut out = vec![vec![Rat::zero(); g]; g];
        for i in 0..g {
            for k in 0..g {
                let mut s = Rat::zero();
                for j in 0..cols {
                    if self.rows[i][j] != 0 && self.rows[k][j] != 0 {
                        s += &m[j]
                            * Rat::from_integer((self.rows[i][j] * self.rows[k][j]).into());
                    }
                }
                out[i][k] = s;
            }
        }
        out
    }
}

/// Is `E diag(m) E^T` invertible?
pub fn regularity_check(e: &IntersectionMatrix, m: &[Rat]) -> bool {
    !rat_mat_det(&e.weighted_gram(m)).is_zero()
}

/// Both identity families, checked exactly:
/// `b_h[i] = sum_j e[i][j] h_v[j]`, `b_v[j] = sum_i e[i][j] h_h[i]`,
/// and `h_v[j] = m_v[j] b_v[j]`.
pub fn verify_period_identities(
    e: &IntersectionMatrix,
    h_h: &[CycNum],
    b_h: &[CycNum],
    h_v: &[CycNum],
    b_v: &[CycNum],
    m_v: &[Rat],
) -> bool {
    let g = e.row_count();
    let cols = e.col_count();
    if h_h.len() != g || b_h.len() != g || h_v.len() != cols || b_v.len() != cols || m_v.len() != cols
    {
        return false;
    }
    for i in 0..g {
        let mut s = CycNum::zero();
        for j in 0..cols {
            if e.entry(i, j) != 0 {
                s = s.add(&h_v[j].scale(&Rat::from_integer(e.entry(i, j).into())));
            }
        }
        if s != b_h[i] {
            return false;
        }
    }
    for j in 0..cols {
        let mut s = CycNum::zero();
        for i in 0..g {
            if e.entry(i, j) != 0 {
                s = s.add(&h_h[i].scale(&Rat::from_integer(e.entry(i, j).into())));
            }
        }
        if s != b_v[j] {
            return false;
        }
        if b_v[j].scale(&m_v[j]) != h_v[j] {
            return false;
        }
    }
    true
}

#[derive(Clone, Debug, PartialEq)]
pub enum GeometryRejection {
    SingularSystem,
    NonPositiveSolution,
}

impl core::fmt::Display for GeometryRejection {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            GeometryRejection::SingularSystem => write!(f, "weighted intersection form is singular"),
            GeometryRejection::NonPositiveSolution => {
                write!(f, "solved cylinder data is not positive")
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct SolvedGeometry {
    pub h_h: Vec<CycNum>,
    pub b_v: Vec<CycNum>,
    pub h_v: Vec<CycNum>,
}

/// Solves `b_h = E diag(m_v) E^T h_h` for the horizontal heights, then
/// reads off the vertical widths `b_v = E^T h_h` and heights
/// `h_v = m_v b_v`. Rejects singular systems and non-positive solutions.
pub fn solve_geometry(
    b_h: &[CycNum],
    m_v: &[Rat],
    e: &IntersectionMatrix,
) -> Result<SolvedGeometry, GeometryRejection> {
    let g = e.row_count();
    assert_eq!(b_h.len(), g);
    let s = e.weighted_gram(m_v);
    if rat_mat_det(&s).is_zero() {
        return Err(GeometryRejection::SingularSystem);
    }
    // invert the rational matrix column by column
    let mut inv_cols: Vec<Vec<Rat>> = Vec::with_capacity(g);
    for j in 0..g {
        let mut unit = vec![Rat::zero(); g];
        unit[j] = Rat::one();
        let col = rat_solve(&s, &unit).expect("nonsingular");
        inv_cols.push(col);
    }
    let mut h_h = Vec::with_capacity(g);
    for i in 0..g {
        let mut v = CycNum::zero();
        for j in 0..g {
            v = v.add(&b_h[j].scale(&inv_cols[j][i]));
        }
        h_h.push(v);
    }
    let cols = e.col_count();
    let mut b_v = Vec::with_capacity(cols);
    let mut h_v = Vec::with_capacity(cols);
    for j in 0..cols {
        let mut v = CycNum::zero();
        for i in 0..g {
            if e.entry(i, j) != 0 {
                v = v.add(&h_h[i].scale(&Rat::from_integer(e.entry(i, j).into())));
            }
        }
        h_v.push(v.scale(&m_v[j]));
        b_v.push(v);
    }
    for val in h_h.iter().chain(b_v.iter()).chain(h_v.iter()) {
        if !val.is_real() || val.real_sign_unchecked() != Sign::Positive {
            return Err(GeometryRejection::NonPositiveSolution);
        }
    }
    Ok(SolvedGeometry { h_h, b_v, h_v })
}

/// Are all the modulus ratios rational? If so, returns the integer vector
/// scaled so the last (designated) modulus is 1 before clearing
/// denominators, with gcd one.
pub fn moduli_commensurability(moduli: &[CycNum]) -> (bool, Option<Vec<u64>>) {
    assert!(!moduli.is_empty());
    let last = moduli.last().unwrap();
    let mut ratios: Vec<Rat> = Vec::with_capacity(moduli.len());
    for m in moduli {
        match m.div(last).and_then(|q| q.to_rat()) {
            Some(r) => ratios.push(r),
            None => return (false, None),
        }
    }
    let mut denom_lcm = num_bigint::BigInt::one();
    for r in &ratios {
        denom_lcm = num_integer::lcm(denom_lcm, r.denom().clone());
    }
    let ints: Vec<num_bigint::BigInt> = ratios
        .iter()
        .map(|r| r.numer() * &denom_lcm / r.denom())
        .collect();
    let mut g = num_bigint::BigInt::zero();
    for i in &ints {
        g = num_integer::gcd(g, i.clone());
    }
    let out: Vec<u64> = ints
        .iter()
        .map(|i| {
            let v = i / &g;
            u64::try_from(v).expect("positive modulus ratio")
        })
        .collect();
    (true, Some(out))
}

/// The finite set of twist values for one cylinder: sums of non-negative
/// integer multiples of the vertical heights, within the bound, folded with
/// their negatives into the fundamental domain `[0, width)`.
fn twist_values_for(
    width: &CycNum,
    bound: &CycNum,
    h_v: &[CycNum],
    limit: usize,
) -> Option<Vec<CycNum>> {
    let mut sums: Vec<CycNum> = vec![CycNum::zero()];
    let mut head = 0;
    while head < sums.len() {
        if sums.len() > 4 * limit {
            return None;
        }
        let base = sums[head].clone();
        head += 1;
        for h in h_v {
            let next = base.add(h);
            if next.cmp_real(bound) != core::cmp::Ordering::Greater
                && !sums.contains(&next)
            {
                sums.push(next);
            }
        }
    }
    let mut folded: Vec<CycNum> = Vec::new();
    for s in &sums {
        for v in [s.clone(), s.neg()] {
            let r = reduce_mod(&v, width);
            if !folded.contains(&r) {
                folded.push(r);
            }
        }
    }
    if folded.len() > limit {
        return None;
    }
    folded.sort_by(|a, b| a.cmp_real(b));
    Some(folded)
}

fn reduce_mod(v: &CycNum, modulus: &CycNum) -> CycNum {
    let mut r = v.clone();
    while r.real_sign_unchecked() == Sign::Negative {
        r = r.add(modulus);
    }
    while r.cmp_real(modulus) != core::cmp::Ordering::Less {
        r = r.sub(modulus);
    }
    r
}

/// Twist vectors `(t_2, ..., t_g)`: per cylinder the finite list of values
/// within `bound_i = b_h[i] * (sum_j e[i][j])`, or within the override.
/// Returns `None` when the list would exceed `limit` vectors.
pub fn enumerate_twists(
    b_h: &[CycNum],
    e: &IntersectionMatrix,
    h_v: &[CycNum],
    bound_override: Option<&CycNum>,
    limit: usize,
) -> Option<Vec<Vec<CycNum>>> {
    let g = e.row_count();
    let mut per_cyl: Vec<Vec<CycNum>> = Vec::new();
    for i in 1..g {
        let bound = match bound_override {
            Some(b) => b.clone(),
            None => {
                let total: u64 = (0..e.col_count()).map(|j| e.entry(i, j)).sum();
                b_h[i].scale(&Rat::from_integer(total.into()))
            }
        };
        per_cyl.push(twist_values_for(&b_h[i], &bound, h_v, limit)?);
    }
    let mut total: usize = 1;
    for t in &per_cyl {
        total = total.checked_mul(t.len())?;
        if total > limit {
            return None;
        }
    }
    let mut out: Vec<Vec<CycNum>> = vec![Vec::new()];
    for t in &per_cyl {
        let mut next = Vec::with_capacity(out.len() * t.len());
        for prefix in &out {
            for v in t {
                let mut p = prefix.clone();
                p.push(v.clone());
                next.push(p);
            }
        }
        out = next;
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat_i64, rat_int};

    fn staircase_e() -> IntersectionMatrix {
        IntersectionMatrix::new(vec![vec![1, 1, 0], vec![0, 1, 1]]).unwrap()
    }

    #[test]
    fn regularity_examples() {
        let e = staircase_e();
        let m = [rat_int(1), rat_int(1), rat_int(1)];
        assert!(regularity_check(&e, &m));
        assert_eq!(
            rat_mat_det(&e.weighted_gram(&m)),
            rat_int(3)
        );
        assert!(IntersectionMatrix::new(vec![vec![0, 0, 0], vec![0, 1, 1]]).is_err());
    }

    #[test]
    fn solve_example() {
        let e = staircase_e();
        let m = [rat_int(1), rat_int(1), rat_int(1)];
        let b_h = [CycNum::from_int(2), CycNum::from_int(2)];
        let sol = solve_geometry(&b_h, &m, &e).unwrap();
        assert_eq!(sol.h_h[0], CycNum::from_rat(rat_i64(2, 3)));
        assert_eq!(sol.h_h[1], CycNum::from_rat(rat_i64(2, 3)));
        assert_eq!(sol.b_v[1], CycNum::from_rat(rat_i64(4, 3)));
        assert!(verify_period_identities(&e, &sol.h_h, &b_h, &sol.h_v, &sol.b_v, &m));
        // perturbing an entry breaks the identities
        let e2 = IntersectionMatrix::new(vec![vec![2, 1, 0], vec![0, 1, 1]]).unwrap();
        assert!(!verify_period_identities(&e2, &sol.h_h, &b_h, &sol.h_v, &sol.b_v, &m));
    }

    #[test]
    fn solve_rejects_bad_cones() {
        let e = staircase_e();
        let m = [rat_int(1), rat_int(1), rat_int(1)];
        // widths far off the positive cone
        let b_h = [CycNum::from_int(1), CycNum::from_int(-10)];
        assert!(matches!(
            solve_geometry(&b_h, &m, &e),
            Err(GeometryRejection::NonPositiveSolution)
        ));
    }

    #[test]
    fn commensurability_examples() {
        let half = CycNum::from_rat(rat_i64(1, 2));
        let one = CycNum::one();
        let (ok, ints) = moduli_commensurability(&[half.clone(), one.clone(), half]);
        assert!(ok);
        assert_eq!(ints.unwrap(), vec![1, 2, 1]);
        let sqrt2 = CycNum::root(8, 1).add(&CycNum::root(8, 7));
        let (ok, _) = moduli_commensurability(&[one.clone(), sqrt2]);
        assert!(!ok);
        let (ok, ints) = moduli_commensurability(&[one]);
        assert!(ok);
        assert_eq!(ints.unwrap(), vec![1]);
    }

    #[test]
    fn twist_enumeration() {
        let e = staircase_e();
        let b_h = [CycNum::from_int(2), CycNum::from_int(2)];
        let h_v = [CycNum::one(), CycNum::one(), CycNum::one()];
        // zero bound leaves only the zero twist
        let zero = CycNum::zero();
        let t = enumerate_twists(&b_h, &e, &h_v, Some(&zero), 100).unwrap();
        assert_eq!(t, vec![vec![CycNum::zero()]]);
        // with the default bound the values fill the fundamental domain grid
        let t = enumerate_twists(&b_h, &e, &h_v, None, 100).unwrap();
        assert!(t.iter().any(|v| v[0] == CycNum::zero()));
        assert!(t.iter().any(|v| v[0] == CycNum::one()));
        for v in &t {
            assert!(v[0].real_sign_unchecked() != Sign::Negative);
            assert!(v[0].cmp_real(&b_h[1]) == core::cmp::Ordering::Less);
        }
    }
}
