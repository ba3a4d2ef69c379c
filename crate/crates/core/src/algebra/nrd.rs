use crate::arith::{CycloNum, Field, Matrix, Rational};
use crate::error::{arg, internal, Result};

use super::central::CentralElement;
use super::matrix::{unsplit, GroupAlgebraMatrix};

/// Per-χ determinants of the split matrix, with no certification.
pub fn nrd_values<K: Field>(m: &GroupAlgebraMatrix<K>) -> Result<Vec<CycloNum>> {
    if !m.is_square() {
        return arg(format!("reduced norm of a non-square {}x{} matrix", m.rows(), m.cols()));
    }
    Ok((0..m.group().num_irreps()).map(|chi| m.split(chi).det()).collect())
}

/// Reduced norm Nrd(M) ∈ ζ(Q[G]).
///
/// The result is certified Galois-consistent, and for integral M every
/// component is certified to lie in Z[ζ_e]; a failed certificate is an
/// internal error.
pub fn nrd(m: &GroupAlgebraMatrix<Rational>) -> Result<CentralElement> {
    let x = CentralElement::from_values(m.group(), nrd_values(m)?)?;
    x.check_galois()?;
    if m.is_integral() && !x.is_integral() {
        return internal(format!("Nrd of an integral matrix is not integral: {x:?}"));
    }
    Ok(x)
}

/// The generalized adjoint M*: M·M* = M*·M = Nrd(M)·I, with M*e_χ = 0
/// exactly where Nrd(M)e_χ = 0.
pub fn adjoint_star(m: &GroupAlgebraMatrix<Rational>) -> Result<GroupAlgebraMatrix<Rational>> {
    if !m.is_square() {
        return arg("adjoint of a non-square matrix");
    }
    let n = m.rows();
    let g = m.group();
    let blocks: Vec<Matrix<CycloNum>> = (0..g.num_irreps())
        .map(|chi| {
            let b = m.split(chi);
            match b.inverse() {
                Some(inv) => inv.scale(&b.det()),
                None => Matrix::zeros(b.rows(), b.cols()),
            }
        })
        .collect();
    let star = unsplit(g, n, n, &blocks)?;
    let entries = star
        .entries()
        .iter()
        .map(|e| e.to_rational())
        .collect::<Option<Vec<_>>>();
    match entries {
        Some(e) => GroupAlgebraMatrix::new(g, n, n, e),
        None => internal("generalized adjoint does not descend to Q[G]"),
    }
}

/// Inverse in M_n(Q[G]), or None when some split block is singular.
pub fn inverse(m: &GroupAlgebraMatrix<Rational>) -> Result<Option<GroupAlgebraMatrix<Rational>>> {
    if !m.is_square() {
        return arg("inverse of a non-square matrix");
    }
    let g = m.group();
    let mut blocks = Vec::with_capacity(g.num_irreps());
    for chi in 0..g.num_irreps() {
        match m.split(chi).inverse() {
            Some(b) => blocks.push(b),
            None => return Ok(None),
        }
    }
    let inv = unsplit(g, m.rows(), m.cols(), &blocks)?;
    match inv.entries().iter().map(|e| e.to_rational()).collect::<Option<Vec<_>>>() {
        Some(e) => GroupAlgebraMatrix::new(g, m.rows(), m.cols(), e).map(Some),
        None => internal("inverse does not descend to Q[G]"),
    }
}

/// Modules whose reduced rank can be computed.
#[derive(Clone, Debug)]
pub enum ModuleShape {
    /// A^k.
    Free(usize),
    /// e_χ·A^k.
    Cut { chi: usize, rank: usize },
    /// The left submodule of A^k generated by the rows of a matrix.
    RowSpan(GroupAlgebraMatrix<Rational>),
}

/// Reduced rank per character: dim_E Hom-multiplicity of V_χ in M ⊗ E.
pub fn reduced_rank(group: &crate::groups::Group, shape: &ModuleShape) -> Result<Vec<usize>> {
    let degrees = group.degrees();
    match shape {
        ModuleShape::Free(k) => Ok(degrees.iter().map(|d| d * k).collect()),
        ModuleShape::Cut { chi, rank } => {
            if *chi >= degrees.len() {
                return arg(format!("character index {chi} out of range"));
            }
            Ok((0..degrees.len())
                .map(|c| if c == *chi { degrees[c] * rank } else { 0 })
                .collect())
        }
        ModuleShape::RowSpan(m) => {
            if m.group() != group {
                return arg("module generators belong to a different group");
            }
            Ok((0..degrees.len()).map(|chi| m.split(chi).rank()).collect())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::GroupAlgebraElement;
    use crate::groups::group;

    fn ints(x: &CentralElement) -> Vec<i64> {
        x.values()
            .iter()
            .map(|v| {
                let q = v.as_rational().unwrap();
                i64::try_from(q.to_integer().unwrap()).unwrap()
            })
            .collect()
    }

    #[test]
    fn norm_of_group_sum() {
        let s3 = group("S3").unwrap();
        let m = GroupAlgebraMatrix::from_i64(&s3, 1, 1, &[vec![1; 6]]).unwrap();
        assert_eq!(ints(&nrd(&m).unwrap()), vec![6, 0, 0]);
    }

    #[test]
    fn quaternion_generator() {
        let q8 = group("Q8").unwrap();
        let m = GroupAlgebraMatrix::from_i64(&q8, 1, 1, &[vec![1, 0, 1, 0, 0, 0, 0, 0]]).unwrap();
        assert_eq!(ints(&nrd(&m).unwrap()), vec![2, 0, 2, 0, 2]);
    }

    #[test]
    fn adjoint_examples() {
        let c2 = group("C2").unwrap();
        let id = GroupAlgebraMatrix::<Rational>::identity(&c2, 2);
        assert_eq!(adjoint_star(&id).unwrap(), id);
        let m = GroupAlgebraMatrix::from_i64(&c2, 1, 1, &[vec![1, 1]]).unwrap();
        let star = adjoint_star(&m).unwrap();
        let n = nrd(&m).unwrap();
        assert_eq!(ints(&n), vec![2, 0]);
        // trivial block 2 has adjugate 1, sign block is zeroed: M* = (1+g)/2
        assert_eq!(
            star.get(0, 0).coeffs(),
            &[Rational::new(1, 2), Rational::new(1, 2)]
        );
        let lhs = m.mul(&star).unwrap();
        let rhs = GroupAlgebraMatrix::scalar(&c2, 1, &n.to_group_algebra().unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn reduced_ranks() {
        let s3 = group("S3").unwrap();
        assert_eq!(reduced_rank(&s3, &ModuleShape::Free(1)).unwrap(), vec![1, 1, 2]);
        assert_eq!(reduced_rank(&s3, &ModuleShape::Free(3)).unwrap(), vec![3, 3, 6]);
        assert_eq!(
            reduced_rank(&s3, &ModuleShape::Cut { chi: 2, rank: 1 }).unwrap(),
            vec![0, 0, 2]
        );
        // the row span of e_χ itself agrees with the cut
        let e = crate::algebra::central_idempotent(&s3, 2).to_rational().unwrap();
        let m = GroupAlgebraMatrix::new(&s3, 1, 1, vec![e]).unwrap();
        assert_eq!(reduced_rank(&s3, &ModuleShape::RowSpan(m)).unwrap(), vec![0, 0, 2]);
        let one = GroupAlgebraElement::<Rational>::one(&s3);
        let m = GroupAlgebraMatrix::new(&s3, 1, 2, vec![one.clone(), one]).unwrap();
        assert_eq!(reduced_rank(&s3, &ModuleShape::RowSpan(m)).unwrap(), vec![1, 1, 2]);
    }
}
