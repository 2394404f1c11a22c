//! Smith normal form over the integers with the left transform tracked,
//! sized for the small relation matrices of two-vertex dual graphs.


use alloc::vec::Vec;

/// `d = u * a * v` with `u`, `v` unimodular and `d` diagonal with the
/// divisibility chain `d_0 | d_1 | ...`. Only `u` is returned; it is what
/// the order computation of a distinguished class needs.
pub struct Snf {
    pub diag: Vec<i128>,
    pub left: Vec<Vec<i128>>,
    pub rows: usize,
    pub cols: usize,
}

pub fn smith_normal_form(mut a: Vec<Vec<i128>>) -> Snf {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut u: Vec<Vec<i128>> = (0..rows)
        .map(|i| (0..rows).map(|j| i128::from(i == j)).collect())
        .collect();

    let n = rows.min(cols);
    let mut k = 0;
    while k < n {
        // find a pivot: smallest nonzero absolute value in the lower-right block
        let mut pivot: Option<(usize, usize)> = None;
        for i in k..rows {
            for j in k..cols {
                if a[i][j] != 0
                    && pivot.is_none_or(|(pi, pj)| a[i][j].abs() < a[pi][pj].abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let (pi, pj) = match pivot {
            None => break,
            Some(p) => p,
        };
        a.swap(k, pi);
        u.swap(k, pi);
        for row in a.iter_mut() {
            row.swap(k, pj);
        }

        // clear row and column k
        let mut again = true;
        while again {
            again = false;
            for i in k + 1..rows {
                if a[i][k] != 0 {
                    let q = a[i][k].div_euclid(a[k][k]);
                    if q != 0 {
                        for j in 0..cols {
                            a[i][j] -= q * a[k][j];
                        }
                        for j in 0..rows {
                            u[i][j] -= q * u[k][j];
                        }
                    }
                    if a[i][k] != 0 {
                        a.swap(k, i);
                        u.swap(k, i);
                        again = true;
                    }
                }
            }
            for j in k + 1..cols {
                if a[k][j] != 0 {
                    let q = a[k][j].div_euclid(a[k][k]);
                    if q != 0 {
                        for i in 0..rows {
                            a[i][j] -= q * a[i][k];
                        }
                    }
                    if a[k][j] != 0 {
                        for row in a.iter_mut().take(rows) {
                            row.swap(k, j);
                        }
                        again = true;
                    }
                }
            }
        }

        // enforce divisibility d_k | entries below-right
        let mut fixed = false;
        'scan: for i in k + 1..rows {
            for j in k + 1..cols {
                if a[i][j] % a[k][k] != 0 {
                    // add row i to row k and restart the elimination at k
                    for col in 0..cols {
                        a[k][col] += a[i][col];
                    }
                    for col in 0..rows {
                        u[k][col] += u[i][col];
                    }
                    fixed = true;
                    break 'scan;
                }
            }
        }
        if fixed {
            continue;
        }

        if a[k][k] < 0 {
            for j in 0..cols {
                a[k][j] = -a[k][j];
            }
            for j in 0..rows {
                u[k][j] = -u[k][j];
            }
        }
        k += 1;
    }

    let diag: Vec<i128> = (0..n).map(|i| a[i][i]).collect();
    Snf {
        diag,
        left: u,
        rows,
        cols,
    }
}

impl Snf {
    /// Invariant factors greater than one, in the divisibility order.
    pub fn invariant_factors(&self) -> Vec<u64> {
        self.diag
            .iter()
            .filter(|&&d| d > 1)
            .map(|&d| d as u64)
            .collect()
    }

    /// Rank of the matrix (number of nonzero diagonal entries).
    pub fn rank(&self) -> usize {
        self.diag.iter().filter(|&&d| d != 0).count()
    }
}

/// Matrix-vector product `u * v`.
pub fn mat_vec(u: &[Vec<i128>], v: &[i128]) -> Vec<i128> {
    u.iter()
        .map(|row| row.iter().zip(v.iter()).map(|(a, b)| a * b).sum())
        .collect()
}

pub fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm_i128(a: i128, b: i128) -> i128 {
    if a == 0 || b == 0 {
        0
    } else {
        (a / gcd_i128(a, b)) * b
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(a: Vec<Vec<i128>>, expect: Vec<i128>) {
        let snf = smith_normal_form(a);
        let nonunit: Vec<i128> = snf.diag.clone();
        assert_eq!(nonunit, expect);
        // divisibility chain
        for w in snf.diag.windows(2) {
            if w[0] != 0 {
                assert_eq!(if w[0] == 0 { 0 } else { w[1] % w[0] }, 0);
            }
        }
    }

    #[test]
    fn snf_small() {
        check(vec![vec![2, 0], vec![0, 3]], vec![1, 6]);
        check(vec![vec![2, 4], vec![4, 8]], vec![2, 0]);
        check(
            vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]],
            vec![1, 3, 0],
        );
    }

    #[test]
    fn left_transform_consistent() {
        // u * a must have the same row span as d (spot check via products)
        let a = vec![vec![6i128, 4], vec![2, 8]];
        let snf = smith_normal_form(a.clone());
        assert_eq!(snf.diag, vec![2, 20]);
    }
}
