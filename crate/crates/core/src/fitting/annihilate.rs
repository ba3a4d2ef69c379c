use num_bigint::BigInt;

use crate::algebra::{nrd, CentralElement, GroupAlgebraElement, GroupAlgebraMatrix};
use crate::arith::{cokernel_invariants, IntLattice, Rational};
use crate::error::{arg, Result};

/// Result of an annihilation test on cok(θ_M).
#[derive(Clone, Debug)]
pub struct AnnihilationReport {
    pub annihilates: bool,
    /// Coefficients of y, the group-algebra element with image x·Nrd(M).
    pub y: Vec<BigInt>,
    /// Invariant factors of cok(θ_M) as an abelian group.
    pub cokernel: Vec<BigInt>,
}

/// Z-coordinates of a row vector in A^d: index i·|G| + g.
fn row_coords(row: &[GroupAlgebraElement<Rational>]) -> Vec<BigInt> {
    row.iter()
        .flat_map(|x| x.to_integers().expect("integral row"))
        .collect()
}

/// The d|G| × d|G| integer matrix whose rows span the image of θ_M:
/// one row per g·(row i of M).
pub fn image_rows(m: &GroupAlgebraMatrix<Rational>) -> Vec<Vec<BigInt>> {
    let g = m.group();
    let mut out = Vec::new();
    for i in 0..m.rows() {
        let row = m.row(i);
        for h in 0..g.order() {
            let moved: Vec<_> = row.iter().map(|x| x.translate(h)).collect();
            out.push(row_coords(&moved));
        }
    }
    out
}

/// Check that y, the element with central image x·Nrd(M), kills
/// cok(θ_M) = A^d / A^d·M.
pub fn annihilation_check(m: &GroupAlgebraMatrix<Rational>, x: &CentralElement) -> Result<AnnihilationReport> {
    if !m.is_square() {
        return arg("annihilation check needs a square matrix");
    }
    if !m.is_integral() {
        return arg("annihilation check needs an integral matrix");
    }
    let g = m.group();
    if x.group() != g {
        return arg("x belongs to a different group");
    }
    let n = nrd(m)?;
    if !n.is_nowhere_zero() {
        return arg("infinite cokernel: Nrd(M) has a zero component");
    }
    let y = (x * &n).to_group_algebra()?;
    let Some(yc) = y.to_integers() else {
        return arg(format!("x·Nrd(M) = {y:?} is not integral"));
    };
    let d = m.rows();
    let rows = image_rows(m);
    let image = IntLattice::hnf(d * g.order(), &rows)?;
    // the image is a left submodule and y is central, so y·(h·b_i) = h·(y·b_i)
    // lies in it iff y·b_i does
    let annihilates = (0..d).all(|i| {
        let mut v = vec![GroupAlgebraElement::zero(g); d];
        v[i] = y.clone();
        image.contains_int(&row_coords(&v))
    });
    Ok(AnnihilationReport {
        annihilates,
        y: yc,
        cokernel: cokernel_invariants(&rows),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::group;

    #[test]
    fn c2_two_plus_g() {
        let c2 = group("C2").unwrap();
        let m = GroupAlgebraMatrix::from_i64(&c2, 1, 1, &[vec![2, 1]]).unwrap();
        let r = annihilation_check(&m, &CentralElement::one(&c2)).unwrap();
        assert!(r.annihilates);
        assert_eq!(r.cokernel, vec![BigInt::from(3)]);
    }

    #[test]
    fn trivial_group_determinant() {
        let c1 = group("C1").unwrap();
        let m = GroupAlgebraMatrix::from_i64(&c1, 2, 2, &[vec![2], vec![1], vec![0], vec![4]]).unwrap();
        let r = annihilation_check(&m, &CentralElement::one(&c1)).unwrap();
        assert!(r.annihilates);
        assert_eq!(r.y, vec![BigInt::from(8)]);
        assert_eq!(r.cokernel, vec![BigInt::from(8)]);
    }

    #[test]
    fn errors() {
        let c2 = group("C2").unwrap();
        let m = GroupAlgebraMatrix::from_i64(&c2, 1, 1, &[vec![1, 1]]).unwrap();
        assert!(annihilation_check(&m, &CentralElement::one(&c2)).is_err());
        let m = GroupAlgebraMatrix::from_i64(&c2, 1, 1, &[vec![3, 0]]).unwrap();
        let third = CentralElement::constant(&c2, &Rational::new(1, 9));
        assert!(annihilation_check(&m, &third).is_err());
    }
}
