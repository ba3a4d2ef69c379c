//! Smith normal form of integer matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type IntMatrix = Vec<Vec<BigInt>>;

/// `u · m · v = diag(invariants)` with unimodular `u`, `v`.
#[derive(Clone, Debug, PartialEq)]
pub struct Snf {
    /// d_1 | d_2 | … , nonnegative, length min(rows, cols).
    pub invariants: Vec<BigInt>,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| BigInt::from((i == j) as i64)).collect())
        .collect()
}

/// row_a += k·row_b
fn add_row(m: &mut IntMatrix, a: usize, b: usize, k: &BigInt) {
    let src = m[b].clone();
    for (x, y) in m[a].iter_mut().zip(&src) {
        *x += k * y;
    }
}

fn add_col(m: &mut IntMatrix, a: usize, b: usize, k: &BigInt) {
    for row in m.iter_mut() {
        let t = k * &row[b];
        row[a] += t;
    }
}

fn swap_cols(m: &mut IntMatrix, a: usize, b: usize) {
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> Snf {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut a = m.clone();
    let mut u = identity(rows);
    let mut v = identity(cols);
    let n = rows.min(cols);
    for t in 0..n {
        loop {
            // smallest nonzero entry of the trailing block becomes the pivot
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if !a[i][j].is_zero()
                        && best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break };
            a.swap(t, pi);
            u.swap(t, pi);
            swap_cols(&mut a, t, pj);
            swap_cols(&mut v, t, pj);
            let mut clean = true;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = -a[i][t].div_floor(&a[t][t]);
                add_row(&mut a, i, t, &q);
                add_row(&mut u, i, t, &q);
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = -a[t][j].div_floor(&a[t][t]);
                add_col(&mut a, j, t, &q);
                add_col(&mut v, j, t, &q);
                clean &= a[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            // enforce divisibility into the rest of the block
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(&a[i][j] % &a[t][t]).is_zero()));
            match bad {
                Some(i) => {
                    let one = BigInt::one();
                    add_row(&mut a, t, i, &one);
                    add_row(&mut u, t, i, &one);
                }
                None => break,
            }
        }
        if a[t][t].is_negative() {
            for x in a[t].iter_mut() {
                *x = -&*x;
            }
            for x in u[t].iter_mut() {
                *x = -&*x;
            }
        }
    }
    let invariants = (0..n).map(|i| a[i][i].clone()).collect();
    Snf { invariants, u, v }
}

/// Nontrivial invariants of the cokernel Z^rows / (column span of m):
/// entries other than 1, with 0 for each free summand.
pub fn cokernel_invariants(m: &IntMatrix) -> Vec<BigInt> {
    let rows = m.len();
    let s = smith_normal_form(m);
    let mut out: Vec<BigInt> = s.invariants.into_iter().filter(|d| !d.is_one()).collect();
    out.extend(std::iter::repeat(BigInt::zero()).take(rows.saturating_sub(m.first().map_or(0, |r| r.len()))));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn im(rows: &[&[i64]]) -> IntMatrix {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    fn mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
        let k = b.len();
        let c = b.first().map_or(0, |r| r.len());
        a.iter()
            .map(|row| {
                (0..c)
                    .map(|j| (0..k).fold(BigInt::zero(), |acc, t| acc + &row[t] * &b[t][j]))
                    .collect()
            })
            .collect()
    }

    fn check(m: &IntMatrix) -> Vec<i64> {
        let s = smith_normal_form(m);
        let d = mul(&mul(&s.u, m), &s.v);
        for (i, row) in d.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if i != j {
                    assert!(x.is_zero(), "off-diagonal entry in {d:?}");
                }
            }
        }
        s.invariants.iter().map(|x| i64::try_from(x).unwrap()).collect()
    }

    #[test]
    fn examples() {
        assert_eq!(check(&im(&[&[2, 0], &[0, 3]])), vec![1, 6]);
        assert_eq!(check(&im(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])), vec![1, 1, 1]);
        assert_eq!(check(&im(&[&[0, 0], &[0, 0]])), vec![0, 0]);
        assert_eq!(check(&im(&[&[2, 1], &[1, 2]])), vec![1, 3]);
        assert_eq!(check(&im(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]])), vec![2, 6, 12]);
    }

    #[test]
    fn cokernel() {
        assert_eq!(cokernel_invariants(&im(&[&[2, 1], &[1, 2]])), vec![BigInt::from(3)]);
        assert_eq!(
            cokernel_invariants(&im(&[&[2], &[0]])),
            vec![BigInt::from(2), BigInt::zero()]
        );
    }
}
