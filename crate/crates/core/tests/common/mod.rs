#![allow(dead_code)]

use proptest::prelude::*;

use ncfit::algebra::{GroupAlgebraElement, GroupAlgebraMatrix};
use ncfit::arith::Rational;
use ncfit::groups::{group, Group};

pub fn g(name: &str) -> Group {
    group(name).unwrap()
}

/// A matrix over Z[G] with entries of height ≤ h, shrinking towards zero.
pub fn matrix(g: Group, rows: usize, cols: usize, h: i64) -> impl Strategy<Value = GroupAlgebraMatrix<Rational>> {
    let n = g.order();
    prop::collection::vec(-h..=h, rows * cols * n).prop_map(move |c| {
        let chunks: Vec<Vec<i64>> = c.chunks(n).map(|x| x.to_vec()).collect();
        GroupAlgebraMatrix::from_i64(&g, rows, cols, &chunks).unwrap()
    })
}

pub fn vectors(g: Group, count: usize, k: usize, h: i64) -> impl Strategy<Value = Vec<Vec<GroupAlgebraElement<Rational>>>> {
    matrix(g, count.max(1), k, h).prop_map(move |m| (0..count).map(|i| m.row(i)).collect())
}

pub fn one_of(names: &'static [&'static str]) -> impl Strategy<Value = Group> {
    prop::sample::select(names).prop_map(g)
}
