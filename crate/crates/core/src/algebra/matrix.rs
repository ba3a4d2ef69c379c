use std::fmt;

use crate::arith::{CycloNum, Field, Matrix, Rational};
use crate::error::{arg, Result};
use crate::groups::Group;

use super::element::GroupAlgebraElement;

/// A rows × cols matrix with entries in K[G].
#[derive(Clone, PartialEq)]
pub struct GroupAlgebraMatrix<K: Field = Rational> {
    group: Group,
    rows: usize,
    cols: usize,
    entries: Vec<GroupAlgebraElement<K>>,
}

impl<K: Field> GroupAlgebraMatrix<K> {
    pub fn new(
        group: &Group,
        rows: usize,
        cols: usize,
        entries: Vec<GroupAlgebraElement<K>>,
    ) -> Result<Self> {
        if entries.len() != rows * cols {
            return arg(format!("{} entries for a {rows}x{cols} matrix", entries.len()));
        }
        if entries.iter().any(|e| e.group() != group) {
            return arg("matrix entries belong to a different group");
        }
        Ok(GroupAlgebraMatrix {
            group: group.clone(),
            rows,
            cols,
            entries,
        })
    }

    pub fn from_fn(
        group: &Group,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> GroupAlgebraElement<K>,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        GroupAlgebraMatrix {
            group: group.clone(),
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(group: &Group, rows: Vec<Vec<GroupAlgebraElement<K>>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return arg("ragged matrix rows");
        }
        Self::new(group, r, c, rows.into_iter().flatten().collect())
    }

    pub fn zeros(group: &Group, rows: usize, cols: usize) -> Self {
        Self::from_fn(group, rows, cols, |_, _| GroupAlgebraElement::zero(group))
    }

    pub fn identity(group: &Group, n: usize) -> Self {
        Self::from_fn(group, n, n, |i, j| {
            if i == j {
                GroupAlgebraElement::one(group)
            } else {
                GroupAlgebraElement::zero(group)
            }
        })
    }

    /// `c` times the identity.
    pub fn scalar(group: &Group, n: usize, c: &GroupAlgebraElement<K>) -> Self {
        Self::from_fn(group, n, n, |i, j| {
            if i == j {
                c.clone()
            } else {
                GroupAlgebraElement::zero(group)
            }
        })
    }

    pub fn group(&self) -> &Group {
        &self.group
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

    pub fn get(&self, i: usize, j: usize) -> &GroupAlgebraElement<K> {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: GroupAlgebraElement<K>) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[GroupAlgebraElement<K>] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> Vec<GroupAlgebraElement<K>> {
        self.entries[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> Vec<GroupAlgebraElement<K>> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn map<L: Field>(&self, f: impl Fn(&K) -> L) -> GroupAlgebraMatrix<L> {
        GroupAlgebraMatrix {
            group: self.group.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e.map(&f)).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.group, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// ι_#(Mᵀ): transpose and apply g ↦ g⁻¹ entrywise.
    pub fn hash_transpose(&self) -> Self {
        Self::from_fn(&self.group, self.cols, self.rows, |i, j| self.get(j, i).hash())
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        if self.cols != o.rows {
            return arg(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, o.rows, o.cols
            ));
        }
        Ok(Self::from_fn(&self.group, self.rows, o.cols, |i, j| {
            (0..self.cols).fold(GroupAlgebraElement::zero(&self.group), |acc, k| {
                &acc + &(self.get(i, k) * o.get(k, j))
            })
        }))
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (o.rows, o.cols) {
            return arg("shape mismatch in matrix sum");
        }
        Ok(Self::from_fn(&self.group, self.rows, self.cols, |i, j| {
            self.get(i, j) + o.get(i, j)
        }))
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (o.rows, o.cols) {
            return arg("shape mismatch in matrix difference");
        }
        Ok(Self::from_fn(&self.group, self.rows, self.cols, |i, j| {
            self.get(i, j) - o.get(i, j)
        }))
    }

    /// Left multiplication of every entry by `c`.
    pub fn left_scale(&self, c: &GroupAlgebraElement<K>) -> Self {
        Self::from_fn(&self.group, self.rows, self.cols, |i, j| c * self.get(i, j))
    }

    pub fn select_cols(&self, cols: &[usize]) -> Self {
        Self::from_fn(&self.group, self.rows, cols.len(), |i, j| self.get(i, cols[j]).clone())
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        Self::from_fn(&self.group, rows.len(), self.cols, |i, j| self.get(rows[i], j).clone())
    }

    /// `(self | o)`.
    pub fn hcat(&self, o: &Self) -> Result<Self> {
        if self.rows != o.rows {
            return arg("row counts differ in horizontal concatenation");
        }
        Ok(Self::from_fn(&self.group, self.rows, self.cols + o.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                o.get(i, j - self.cols).clone()
            }
        }))
    }

    pub fn vcat(&self, o: &Self) -> Result<Self> {
        if self.cols != o.cols {
            return arg("column counts differ in vertical concatenation");
        }
        Ok(Self::from_fn(&self.group, self.rows + o.rows, self.cols, |i, j| {
            if i < self.rows {
                self.get(i, j).clone()
            } else {
                o.get(i - self.rows, j).clone()
            }
        }))
    }

    /// The split matrix at χ: block (i, j) is ρ_χ(M_ij), so the result is
    /// (rows·χ(1)) × (cols·χ(1)) over Q(ζ_e).
    pub fn split(&self, chi: usize) -> Matrix<CycloNum> {
        let d = self.group.irreps()[chi].degree();
        let images: Vec<Matrix<CycloNum>> = self.entries.iter().map(|e| e.rep_image(chi)).collect();
        Matrix::from_fn(self.rows * d, self.cols * d, |r, c| {
            images[(r / d) * self.cols + c / d].get(r % d, c % d).clone()
        })
    }
}

impl GroupAlgebraMatrix<Rational> {
    /// Matrix from per-entry integer coefficient vectors.
    pub fn from_i64(group: &Group, rows: usize, cols: usize, coeffs: &[Vec<i64>]) -> Result<Self> {
        let entries = coeffs
            .iter()
            .map(|c| GroupAlgebraElement::from_i64(group, c))
            .collect::<Result<Vec<_>>>()?;
        Self::new(group, rows, cols, entries)
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|e| e.is_integral())
    }
}

/// Reassemble a matrix from per-χ split blocks (inverse of `split`).
pub fn unsplit(
    group: &Group,
    rows: usize,
    cols: usize,
    blocks: &[Matrix<CycloNum>],
) -> Result<GroupAlgebraMatrix<CycloNum>> {
    let degrees = group.degrees();
    if blocks.len() != degrees.len() {
        return arg("one split block per character required");
    }
    for (b, &d) in blocks.iter().zip(&degrees) {
        if b.rows() != rows * d || b.cols() != cols * d {
            return arg("split block shape mismatch");
        }
    }
    let mut entries = Vec::with_capacity(rows * cols);
    for i in 0..rows {
        for j in 0..cols {
            let parts: Vec<Matrix<CycloNum>> = blocks
                .iter()
                .zip(&degrees)
                .map(|(b, &d)| {
                    let r: Vec<usize> = (i * d..(i + 1) * d).collect();
                    let c: Vec<usize> = (j * d..(j + 1) * d).collect();
                    b.select(&r, &c)
                })
                .collect();
            entries.push(super::element::wedderburn_inverse(group, &parts)?);
        }
    }
    GroupAlgebraMatrix::new(group, rows, cols, entries)
}

impl<K: Field> fmt::Debug for GroupAlgebraMatrix<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} over {}[", self.rows, self.cols, self.group.name())?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| format!("{:?}", self.get(i, j))).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
