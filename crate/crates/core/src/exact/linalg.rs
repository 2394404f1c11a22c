//! Dense rational linear algebra, sized for the small systems that occur
//! here (dimensions rarely exceed a few hundred).

use super::Rat;
use alloc::vec::Vec;
use num_traits::{One, Zero};

pub type RatMatrix = Vec<Vec<Rat>>;

/// Rank by fraction-preserving Gaussian elimination.
pub fn rat_mat_rank(m: &[Vec<Rat>]) -> usize {
    if m.is_empty() {
        return 0;
    }
    let rows = m.len();
    let cols = m[0].len();
    let mut a: Vec<Vec<Rat>> = m.to_vec();
    let mut rank = 0;
    let mut col = 0;
    while rank < rows && col < cols {
        let pivot = (rank..rows).find(|&r| !a[r][col].is_zero());
        match pivot {
            None => {
                col += 1;
            }
            Some(p) => {
                a.swap(rank, p);
                let inv = a[rank][col].recip();
                for j in col..cols {
                    a[rank][j] = &a[rank][j] * &inv;
                }
                for r in 0..rows {
                    if r != rank && !a[r][col].is_zero() {
                        let f = a[r][col].clone();
                        for j in col..cols {
                            let sub = &a[rank][j] * &f;
                            a[r][j] = &a[r][j] - &sub;
                        }
                    }
                }
                rank += 1;
                col += 1;
            }
        }
    }
    rank
}

/// Solves `A x = b` for one solution, or `None` if inconsistent.
/// `a` is given by rows. Free variables are set to zero.
pub fn rat_solve(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let rows = a.len();
    assert_eq!(rows, b.len());
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut aug: Vec<Vec<Rat>> = a
        .iter()
        .zip(b.iter())
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        let pivot = (rank..rows).find(|&r| !aug[r][col].is_zero());
        if let Some(p) = pivot {
            aug.swap(rank, p);
            let inv = aug[rank][col].recip();
            for j in col..=cols {
                aug[rank][j] = &aug[rank][j] * &inv;
            }
            for r in 0..rows {
                if r != rank && !aug[r][col].is_zero() {
                    let f = aug[r][col].clone();
                    for j in col..=cols {
                        let sub = &aug[rank][j] * &f;
                        aug[r][j] = &aug[r][j] - &sub;
                    }
                }
            }
            pivot_cols.push(col);
            rank += 1;
            if rank == rows {
                break;
            }
        }
    }
    // Consistency: no row of the form (0 ... 0 | nonzero).
    for r in rank..rows {
        if !aug[r][cols].is_zero() {
            return None;
        }
    }
    let mut x = alloc::vec![Rat::zero(); cols];
    for (r, &c) in pivot_cols.iter().enumerate() {
        x[c] = aug[r][cols].clone();
    }
    Some(x)
}

/// Determinant of a square rational matrix.
pub fn rat_mat_det(m: &[Vec<Rat>]) -> Rat {
    let n = m.len();
    if n == 0 {
        return Rat::one();
    }
    assert!(m.iter().all(|r| r.len() == n));
    let mut a: Vec<Vec<Rat>> = m.to_vec();
    let mut det = Rat::one();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero());
        let p = match pivot {
            None => return Rat::zero(),
            Some(p) => p,
        };
        if p != col {
            a.swap(col, p);
            det = -det;
        }
        det *= &a[col][col];
        let inv = a[col][col].recip();
        for r in col + 1..n {
            if !a[r][col].is_zero() {
                let f = &a[r][col] * &inv;
                for j in col..n {
                    let sub = &a[col][j] * &f;
                    a[r][j] = &a[r][j] - &sub;
                }
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_int;

    #[test]
    fn solve_and_det() {
        let a = alloc::vec![
            alloc::vec![rat_int(2), rat_int(1)],
            alloc::vec![rat_int(1), rat_int(3)],
        ];
        let b = alloc::vec![rat_int(5), rat_int(10)];
        let x = rat_solve(&a, &b).unwrap();
        assert_eq!(x[0], rat_int(1));
        assert_eq!(x[1], rat_int(3));
        assert_eq!(rat_mat_det(&a), rat_int(5));
        assert_eq!(rat_mat_rank(&a), 2);
    }

    #[test]
    fn inconsistent() {
        let a = alloc::vec![alloc::vec![rat_int(1)], alloc::vec![rat_int(1)]];
        let b = alloc::vec![rat_int(1), rat_int(2)];
        assert!(rat_solve(&a, &b).is_none());
    }
}
