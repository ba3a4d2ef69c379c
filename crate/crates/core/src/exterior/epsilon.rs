use crate::algebra::GroupAlgebraMatrix;
use crate::arith::{CycloNum, Rational};
use crate::error::{arg, Result};

use super::wedge::{contract, pair, wedge_homs, ExteriorElement};

/// ε_M: the top wedge of A^{d'} contracted by the d coordinate homs of
/// θ_M: v ↦ v·M (hom i is column i of M). Degree d' − d.
pub fn epsilon_m(m: &GroupAlgebraMatrix<Rational>) -> Result<ExteriorElement> {
    let (dp, d) = (m.rows(), m.cols());
    if dp <= d {
        return arg(format!("ε_M needs more rows than columns, got {dp}x{d}"));
    }
    let g = m.group();
    let homs: Vec<_> = (0..d).map(|j| m.column(j)).collect();
    pair(&wedge_homs(g, dp, &homs)?, &ExteriorElement::top(g, dp))
}

/// Whether every χ-component of x lies in ∧ of the split kernel of θ_M,
/// i.e. is killed by contraction with every column of the split matrix.
pub fn in_kernel_wedge(x: &ExteriorElement, m: &GroupAlgebraMatrix<Rational>) -> Result<bool> {
    if x.group() != m.group() || x.rank() != m.rows() {
        return arg("element and matrix do not share an ambient module");
    }
    if x.degree() == 0 {
        return Ok(x.is_zero() || m.is_zero());
    }
    for chi in 0..x.group().num_irreps() {
        let (n, p) = x.component_dims(chi);
        let s = m.split(chi);
        for c in 0..s.cols() {
            let f: Vec<CycloNum> = s.column(c);
            if contract(n, 1, &f, p, x.component(chi)).iter().any(|v| !v.is_zero()) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Per χ, whether e_χ·ε_M should be nonzero: the split kernel has
/// dimension exactly (d' − d)·χ(1), i.e. the split matrix has full column rank.
pub fn epsilon_support(m: &GroupAlgebraMatrix<Rational>) -> Vec<bool> {
    let g = m.group();
    (0..g.num_irreps())
        .map(|chi| m.split(chi).rank() == m.cols() * g.irreps()[chi].degree())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::nrd;
    use crate::groups::group;

    #[test]
    fn trivial_group_column() {
        let c1 = group("C1").unwrap();
        let m = GroupAlgebraMatrix::from_i64(&c1, 2, 1, &[vec![2], vec![3]]).unwrap();
        let e = epsilon_m(&m).unwrap();
        // 3·b_1 − 2·b_2, a generator of ker(2x + 3y)
        assert_eq!(e.component(0), &[CycloNum::from_int(3), CycloNum::from_int(-2)]);
        assert!(in_kernel_wedge(&e, &m).unwrap());
        assert!(epsilon_m(&GroupAlgebraMatrix::<Rational>::identity(&c1, 2)).is_err());
    }

    #[test]
    fn pairing_identity_s3() {
        let s3 = group("S3").unwrap();
        let m = GroupAlgebraMatrix::from_i64(
            &s3,
            2,
            1,
            &[vec![1, 1, 0, 0, 0, 0], vec![0, 0, 2, 0, 1, 0]],
        )
        .unwrap();
        let mp = GroupAlgebraMatrix::from_i64(
            &s3,
            2,
            1,
            &[vec![0, 1, 0, 0, 0, 1], vec![1, 0, 0, 3, 0, 0]],
        )
        .unwrap();
        let e = epsilon_m(&m).unwrap();
        assert!(in_kernel_wedge(&e, &m).unwrap());
        let v = pair(&wedge_homs(&s3, 2, &[mp.column(0)]).unwrap(), &e).unwrap();
        let block = mp.hcat(&m).unwrap();
        assert_eq!(v.as_central().unwrap(), nrd(&block).unwrap());
        for (chi, nz) in epsilon_support(&m).iter().enumerate() {
            assert_eq!(!e.component_is_zero(chi), *nz);
        }
    }
}
