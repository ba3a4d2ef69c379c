//! Dense matrices over an exact field with Gaussian elimination.

use std::fmt;

use super::field::Field;
use crate::error::{arg, Result};

#[derive(Clone, PartialEq)]
pub struct Matrix<K> {
    rows: usize,
    cols: usize,
    data: Vec<K>,
}

impl<K: Field> fmt::Debug for Matrix<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[K]> = (0..self.rows).map(|i| self.row(i)).collect();
        f.debug_list().entries(rows).finish()
    }
}

/// Row echelon data from [`Matrix::rref`].
struct Echelon<K> {
    reduced: Matrix<K>,
    pivots: Vec<usize>,
}

impl<K: Field> Matrix<K> {
    pub fn new(rows: usize, cols: usize, data: Vec<K>) -> Matrix<K> {
        assert_eq!(data.len(), rows * cols, "matrix data has wrong length");
        Matrix { rows, cols, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> K) -> Matrix<K> {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<K>>) -> Matrix<K> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn zeros(rows: usize, cols: usize) -> Matrix<K> {
        Matrix::new(rows, cols, vec![K::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Matrix<K> {
        Matrix::from_fn(n, n, |i, j| if i == j { K::one() } else { K::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &K {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: K) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[K] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<K> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[K] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn map<L: Field>(&self, f: impl Fn(&K) -> L) -> Matrix<L> {
        Matrix::new(self.rows, self.cols, self.data.iter().map(f).collect())
    }

    pub fn transpose(&self) -> Matrix<K> {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, o: &Matrix<K>) -> Matrix<K> {
        assert_eq!(self.cols, o.rows, "matrix product shape mismatch");
        let mut out = Matrix::<K>::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let idx = i * o.cols + j;
                        out.data[idx] = out.data[idx].add_ref(&a.mul_ref(b));
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, o: &Matrix<K>) -> Matrix<K> {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a.add_ref(b)).collect();
        Matrix::new(self.rows, self.cols, data)
    }

    pub fn sub(&self, o: &Matrix<K>) -> Matrix<K> {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a.sub_ref(b)).collect();
        Matrix::new(self.rows, self.cols, data)
    }

    pub fn scale(&self, c: &K) -> Matrix<K> {
        Matrix::new(self.rows, self.cols, self.data.iter().map(|a| a.mul_ref(c)).collect())
    }

    pub fn apply(&self, v: &[K]) -> Vec<K> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(K::zero(), |acc, (a, b)| acc.add_ref(&a.mul_ref(b)))
            })
            .collect()
    }

    /// Submatrix with the given rows and columns.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Matrix<K> {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    /// Horizontal concatenation `(self | o)`.
    pub fn hcat(&self, o: &Matrix<K>) -> Matrix<K> {
        assert_eq!(self.rows, o.rows);
        Matrix::from_fn(self.rows, self.cols + o.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                o.get(i, j - self.cols).clone()
            }
        })
    }

    /// Vertical concatenation.
    pub fn vcat(&self, o: &Matrix<K>) -> Matrix<K> {
        assert_eq!(self.cols, o.cols);
        let mut data = self.data.clone();
        data.extend(o.data.iter().cloned());
        Matrix::new(self.rows + o.rows, self.cols, data)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn rref(&self) -> Echelon<K> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("nonzero pivot is invertible");
            for j in c..m.cols {
                let v = m.get(r, j).mul_ref(&inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = m.get(i, j).sub_ref(&f.mul_ref(m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { reduced: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    pub fn det(&self) -> K {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = K::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return K::zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = det.neg_ref();
            }
            let piv = m.get(c, c).clone();
            det = det.mul_ref(&piv);
            let inv = piv.inv().expect("nonzero pivot is invertible");
            for i in c + 1..n {
                let f = m.get(i, c).mul_ref(&inv);
                if f.is_zero() {
                    continue;
                }
                for j in c + 1..n {
                    let v = m.get(i, j).sub_ref(&f.mul_ref(m.get(c, j)));
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Matrix<K>> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let e = self.hcat(&Matrix::identity(n)).rref();
        if e.pivots.len() < n || e.pivots[n - 1] != n - 1 {
            return None;
        }
        let all: Vec<usize> = (0..n).collect();
        let right: Vec<usize> = (n..2 * n).collect();
        Some(e.reduced.select(&all, &right))
    }

    /// Basis of the right null space, as column vectors.
    pub fn kernel(&self) -> Vec<Vec<K>> {
        let e = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !e.pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![K::zero(); self.cols];
                v[f] = K::one();
                for (r, &p) in e.pivots.iter().enumerate() {
                    v[p] = e.reduced.get(r, f).neg_ref();
                }
                v
            })
            .collect()
    }

    /// Some solution x of `self · x = b`, if one exists.
    pub fn solve(&self, b: &[K]) -> Option<Vec<K>> {
        assert_eq!(b.len(), self.rows);
        let bm = Matrix::new(self.rows, 1, b.to_vec());
        let e = self.hcat(&bm).rref();
        if e.pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![K::zero(); self.cols];
        for (r, &p) in e.pivots.iter().enumerate() {
            x[p] = e.reduced.get(r, self.cols).clone();
        }
        Some(x)
    }

    /// Checked product for caller-supplied shapes.
    pub fn try_mul(&self, o: &Matrix<K>) -> Result<Matrix<K>> {
        if self.cols != o.rows {
            return arg(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, o.rows, o.cols
            ));
        }
        Ok(self.mul(o))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{CycloNum, Rational};

    fn qm(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn det_and_inverse() {
        let m = qm(&[&[2, 1], &[7, 4]]);
        assert_eq!(m.det(), Rational::from(1));
        let inv = m.inverse().unwrap();
        assert_eq!(inv, qm(&[&[4, -1], &[-7, 2]]));
        assert_eq!(qm(&[&[1, 2], &[2, 4]]).inverse(), None);
        assert_eq!(qm(&[&[0, 1], &[1, 0]]).det(), Rational::from(-1));
    }

    #[test]
    fn kernel_and_solve() {
        let m = qm(&[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(m.rank(), 1);
        let k = m.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.apply(v).iter().all(|x| x.is_zero()));
        }
        assert!(m.solve(&[Rational::from(1), Rational::from(3)]).is_none());
        let x = m.solve(&[Rational::from(2), Rational::from(4)]).unwrap();
        assert_eq!(m.apply(&x), vec![Rational::from(2), Rational::from(4)]);
    }

    #[test]
    fn cyclotomic_determinant() {
        // det(I + diag(i, -i)) = (1+i)(1-i) = 2
        let i = CycloNum::zeta(4, 1);
        let m = Matrix::from_rows(vec![
            vec![CycloNum::one() + i.clone(), CycloNum::zero()],
            vec![CycloNum::zero(), CycloNum::one() - i],
        ]);
        assert_eq!(m.det(), CycloNum::from_int(2));
    }
}
