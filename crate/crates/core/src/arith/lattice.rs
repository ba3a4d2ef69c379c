//! Integer lattices in Hermite normal form.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::Rational;
use crate::error::{arg, Result};

/// A sublattice of Z^n with a canonical row-style HNF basis.
///
/// Rows have strictly increasing pivot columns, positive pivots, and every
/// entry above a pivot lies in `[0, pivot)`. Two lattices are equal iff their
/// bases are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntLattice {
    ambient_rank: usize,
    basis: Vec<Vec<BigInt>>,
}

fn pivot_of(v: &[BigInt]) -> Option<usize> {
    v.iter().position(|c| !c.is_zero())
}

impl IntLattice {
    pub fn zero(ambient_rank: usize) -> IntLattice {
        IntLattice {
            ambient_rank,
            basis: Vec::new(),
        }
    }

    /// The full lattice Z^n.
    pub fn full(ambient_rank: usize) -> IntLattice {
        let basis = (0..ambient_rank)
            .map(|i| {
                (0..ambient_rank)
                    .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                    .collect()
            })
            .collect();
        IntLattice {
            ambient_rank,
            basis,
        }
    }

    /// HNF of the lattice spanned by `generators`.
    pub fn hnf(ambient_rank: usize, generators: &[Vec<BigInt>]) -> Result<IntLattice> {
        let mut l = IntLattice::zero(ambient_rank);
        for g in generators {
            l.insert(g.clone())?;
        }
        Ok(l)
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64(ambient_rank: usize, generators: &[Vec<i64>]) -> Result<IntLattice> {
        let gens: Vec<Vec<BigInt>> = generators
            .iter()
            .map(|g| g.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        IntLattice::hnf(ambient_rank, &gens)
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Add one generator; returns whether the lattice grew.
    pub fn insert(&mut self, mut v: Vec<BigInt>) -> Result<bool> {
        if v.len() != self.ambient_rank {
            return arg(format!(
                "vector of length {} in a lattice of rank {}",
                v.len(),
                self.ambient_rank
            ));
        }
        let mut changed = false;
        let mut i = 0;
        loop {
            let Some(c) = pivot_of(&v) else { break };
            while i < self.basis.len() && pivot_of(&self.basis[i]).unwrap() < c {
                i += 1;
            }
            if i == self.basis.len() || pivot_of(&self.basis[i]).unwrap() > c {
                if v[c].is_negative() {
                    v.iter_mut().for_each(|x| *x = -&*x);
                }
                self.basis.insert(i, v);
                changed = true;
                break;
            }
            let row = &self.basis[i];
            let (a, b) = (&row[c], &v[c]);
            if (b % a).is_zero() {
                let q = b / a;
                for (x, r) in v.iter_mut().zip(row) {
                    *x -= &q * r;
                }
                continue;
            }
            let e = a.extended_gcd(b);
            let (g, s, t) = (e.gcd, e.x, e.y);
            let (ag, bg) = (a / &g, b / &g);
            let new_row: Vec<BigInt> = row.iter().zip(&v).map(|(r, x)| &s * r + &t * x).collect();
            let new_v: Vec<BigInt> = row.iter().zip(&v).map(|(r, x)| &ag * x - &bg * r).collect();
            self.basis[i] = new_row;
            v = new_v;
            changed = true;
        }
        if changed {
            self.reduce();
        }
        Ok(changed)
    }

    /// Bring entries above pivots into [0, pivot).
    fn reduce(&mut self) {
        for j in 0..self.basis.len() {
            let c = pivot_of(&self.basis[j]).unwrap();
            if self.basis[j][c].is_negative() {
                self.basis[j].iter_mut().for_each(|x| *x = -&*x);
            }
            let (above, rest) = self.basis.split_at_mut(j);
            let pr = &rest[0];
            let p = &pr[c];
            for row in above.iter_mut() {
                let q = row[c].div_floor(p);
                if !q.is_zero() {
                    for (x, r) in row.iter_mut().zip(pr) {
                        *x -= &q * r;
                    }
                }
            }
        }
    }

    /// Sum of two lattices.
    pub fn join(&self, o: &IntLattice) -> Result<IntLattice> {
        let mut l = self.clone();
        for v in &o.basis {
            l.insert(v.clone())?;
        }
        Ok(l)
    }

    /// Coefficients of `v` in the HNF basis, if `v` lies in the Q-span.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(v.len(), self.ambient_rank, "vector length mismatch");
        let mut rest = v.to_vec();
        let mut coeffs = Vec::with_capacity(self.basis.len());
        for row in &self.basis {
            let c = pivot_of(row).unwrap();
            if rest[..c].iter().any(|x| !x.is_zero()) {
                return None;
            }
            let q = &rest[c] / &Rational::from(row[c].clone());
            if !q.is_zero() {
                for (x, r) in rest.iter_mut().zip(row) {
                    *x -= &(&q * &Rational::from(r.clone()));
                }
            }
            coeffs.push(q);
        }
        rest.iter().all(|x| x.is_zero()).then_some(coeffs)
    }

    /// Membership of a rational vector. With `Some(p)` the test is local at
    /// p: coefficients may have denominators prime to p.
    pub fn contains(&self, v: &[Rational], p: Option<u64>) -> bool {
        match self.coordinates(v) {
            None => false,
            Some(cs) => cs.iter().all(|c| match p {
                None => c.is_integer(),
                Some(p) => !(c.denom() % BigInt::from(p)).is_zero(),
            }),
        }
    }

    pub fn contains_int(&self, v: &[BigInt]) -> bool {
        let q: Vec<Rational> = v.iter().cloned().map(Rational::from).collect();
        self.contains(&q, None)
    }

    /// Containment `self ⊆ o`.
    pub fn is_sublattice_of(&self, o: &IntLattice) -> bool {
        self.basis.iter().all(|v| o.contains_int(v))
    }

    /// Index [Z^n : L] for a full-rank lattice (product of pivots).
    pub fn index(&self) -> Option<BigInt> {
        (self.rank() == self.ambient_rank).then(|| {
            self.basis
                .iter()
                .enumerate()
                .fold(BigInt::one(), |acc, (i, r)| acc * &r[i])
        })
    }
}

impl fmt::Debug for IntLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntLattice(n={}, [", self.ambient_rank)?;
        for (i, r) in self.basis.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let s: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            write!(f, "[{}]", s.join(","))?;
        }
        write!(f, "])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(l: &IntLattice) -> Vec<Vec<i64>> {
        l.basis()
            .iter()
            .map(|r| r.iter().map(|x| i64::try_from(x).unwrap()).collect())
            .collect()
    }

    #[test]
    fn hnf_examples() {
        let l = IntLattice::from_i64(2, &[vec![2, 0], vec![0, 2]]).unwrap();
        assert_eq!(rows(&l), vec![vec![2, 0], vec![0, 2]]);
        let l = IntLattice::from_i64(2, &[vec![2, 0], vec![0, 3], vec![1, 1]]).unwrap();
        assert_eq!(l, IntLattice::full(2));
        let l = IntLattice::from_i64(3, &[]).unwrap();
        assert!(l.is_zero());
    }

    #[test]
    fn reduced_above_pivots() {
        let l = IntLattice::from_i64(2, &[vec![1, 5], vec![0, 3]]).unwrap();
        assert_eq!(rows(&l), vec![vec![1, 2], vec![0, 3]]);
        let l = IntLattice::from_i64(3, &[vec![-4, 6, 2], vec![6, -9, 1]]).unwrap();
        for r in l.basis() {
            assert!(pivot_of(r).map(|c| r[c].is_positive()).unwrap());
        }
        assert!(l.contains_int(&[BigInt::from(-4), BigInt::from(6), BigInt::from(2)]));
    }

    #[test]
    fn local_membership() {
        let l = IntLattice::from_i64(1, &[vec![3]]).unwrap();
        let one = vec![Rational::from(1)];
        assert!(!l.contains(&one, None));
        assert!(l.contains(&one, Some(2)));
        assert!(!l.contains(&one, Some(3)));
        let half = vec![Rational::new(3, 2)];
        assert!(!l.contains(&half, Some(2)));
        assert!(l.contains(&half, Some(5)));
    }

    #[test]
    fn index_and_containment() {
        let a = IntLattice::from_i64(2, &[vec![2, 0], vec![0, 3]]).unwrap();
        assert_eq!(a.index(), Some(BigInt::from(6)));
        assert!(a.is_sublattice_of(&IntLattice::full(2)));
        assert!(!IntLattice::full(2).is_sublattice_of(&a));
    }
}
