//! Counter-based deterministic generators for randomized suites.
//!
//! Case `i` of a run with seed `s` always draws from the ChaCha8 stream
//! `i` keyed by `s`, so cases can run in any order or in parallel.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{GroupAlgebraElement, GroupAlgebraMatrix};
use crate::arith::Rational;
use crate::groups::Group;

pub type CaseRng = ChaCha8Rng;

pub fn case_rng(seed: u64, case: u64) -> CaseRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(case);
    rng
}

/// Integral element with coefficients in [−height, height]; each
/// coefficient is nonzero with probability `density`.
pub fn element(rng: &mut CaseRng, g: &Group, height: i64, density: f64) -> GroupAlgebraElement<Rational> {
    let coeffs = (0..g.order())
        .map(|_| {
            if height > 0 && rng.gen_bool(density.clamp(0.0, 1.0)) {
                Rational::from(rng.gen_range(-height..=height))
            } else {
                Rational::zero()
            }
        })
        .collect();
    GroupAlgebraElement::new(g, coeffs).expect("length matches")
}

pub fn matrix(rng: &mut CaseRng, g: &Group, rows: usize, cols: usize, height: i64) -> GroupAlgebraMatrix<Rational> {
    GroupAlgebraMatrix::from_fn(g, rows, cols, |_, _| element(rng, g, height, 0.6))
}

pub fn vectors(rng: &mut CaseRng, g: &Group, count: usize, k: usize, height: i64) -> Vec<Vec<GroupAlgebraElement<Rational>>> {
    (0..count)
        .map(|_| (0..k).map(|_| element(rng, g, height, 0.6)).collect())
        .collect()
}

/// Square matrix that is singular on some Wedderburn components: one row
/// is multiplied by the norm element Σg (killing every non-trivial
/// component) or by 1 − g (killing the trivial one).
pub fn singular_matrix(rng: &mut CaseRng, g: &Group, n: usize, height: i64) -> GroupAlgebraMatrix<Rational> {
    let mut m = matrix(rng, g, n, n, height);
    let i = rng.gen_range(0..n);
    let killer = if g.order() == 1 || rng.gen_bool(0.5) {
        GroupAlgebraElement::new(g, vec![Rational::one(); g.order()]).expect("length matches")
    } else {
        let h = rng.gen_range(1..g.order());
        &GroupAlgebraElement::one(g) - &GroupAlgebraElement::basis(g, h)
    };
    for j in 0..n {
        let v = &killer * m.get(i, j);
        m.set(i, j, v);
    }
    m
}

/// A product of `steps` elementary matrices I + u·E_ij with u = ±g:
/// integral with integral inverse.
pub fn unimodular(rng: &mut CaseRng, g: &Group, n: usize, steps: usize) -> GroupAlgebraMatrix<Rational> {
    let mut m = GroupAlgebraMatrix::identity(g, n);
    if n < 2 {
        return m;
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let j = (i + rng.gen_range(1..n)) % n;
        let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
        let u = GroupAlgebraElement::basis(g, rng.gen_range(0..g.order())).scale(&Rational::from(sign));
        // row_i += u·row_j
        for c in 0..n {
            let v = m.get(i, c) + &(&u * m.get(j, c));
            m.set(i, c, v);
        }
    }
    m
}

pub fn pick<'a, T>(rng: &mut CaseRng, items: &'a [T]) -> &'a T {
    &items[rng.gen_range(0..items.len())]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{inverse, nrd};
    use crate::groups::group;

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let g = group("S3").unwrap();
        let a = matrix(&mut case_rng(7, 3), &g, 2, 2, 5);
        let b = matrix(&mut case_rng(7, 3), &g, 2, 2, 5);
        let c = matrix(&mut case_rng(7, 4), &g, 2, 2, 5);
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn generated_shapes() {
        let g = group("D4").unwrap();
        let mut rng = case_rng(1, 0);
        let u = unimodular(&mut rng, &g, 3, 6);
        assert!(inverse(&u).unwrap().unwrap().is_integral());
        let s = singular_matrix(&mut rng, &g, 2, 3);
        assert!(!nrd(&s).unwrap().is_nowhere_zero());
    }
}
