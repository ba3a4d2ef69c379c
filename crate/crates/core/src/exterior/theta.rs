use crate::algebra::{inverse, CentralElement, GroupAlgebraElement, GroupAlgebraMatrix};
use crate::arith::{binomial, subsets, Rational};
use crate::error::{arg, Result};
use crate::groups::Group;

use super::wedge::{pair, wedge_elements, wedge_homs, ExteriorElement};

type Vector = Vec<GroupAlgebraElement<Rational>>;

pub(crate) fn standard_basis(g: &Group, k: usize) -> Vec<Vector> {
    (0..k)
        .map(|i| {
            let mut v = vec![GroupAlgebraElement::zero(g); k];
            v[i] = GroupAlgebraElement::one(g);
            v
        })
        .collect()
}

/// Dual basis homs m*_i (m*_i(m_j) = δ_ij) of a basis given by rows, as
/// hom rows: m*_i(x) = x·(column i of B⁻¹).
pub fn dual_basis(basis: &[Vector]) -> Result<Vec<Vector>> {
    let k = basis.len();
    let Some(g) = basis.first().and_then(|v| v.first()).map(|x| x.group().clone()) else {
        return arg("empty basis");
    };
    let b = GroupAlgebraMatrix::from_rows(&g, basis.to_vec())?;
    if b.cols() != k {
        return arg("basis must be square");
    }
    let Some(inv) = inverse(&b)? else {
        return arg("basis vectors are linearly dependent");
    };
    Ok((0..k).map(|i| inv.column(i)).collect())
}

/// Coordinates (∧_{i∈σ} m*_i)(x) for σ over ascending r-subsets of the
/// basis indices.
pub fn theta_wrt(xe: &ExteriorElement, basis: &[Vector]) -> Result<Vec<CentralElement>> {
    let k = xe.rank();
    if basis.len() != k {
        return arg(format!("basis of size {} for a rank-{k} module", basis.len()));
    }
    let dual = dual_basis(basis)?;
    subsets(k, xe.degree())
        .iter()
        .map(|sigma| {
            let homs: Vec<Vector> = sigma.iter().map(|&i| dual[i].clone()).collect();
            let v = pair(&wedge_homs(xe.group(), k, &homs)?, xe)?;
            v.as_central()
                .ok_or_else(|| crate::Error::Internal("pairing value is not central".into()))
        })
        .collect()
}

/// Σ_σ c_σ·∧_{i∈σ} m_i.
pub fn section_wrt(basis: &[Vector], r: usize, coords: &[CentralElement]) -> Result<ExteriorElement> {
    let k = basis.len();
    let Some(g) = basis.first().and_then(|v| v.first()).map(|x| x.group().clone()) else {
        return arg("empty basis");
    };
    let subs = subsets(k, r);
    if coords.len() != subs.len() {
        return arg(format!("{} coordinates for {} subsets", coords.len(), subs.len()));
    }
    let mut out = ExteriorElement::zero(&g, k, r)?;
    for (sigma, c) in subs.iter().zip(coords) {
        let elems: Vec<Vector> = sigma.iter().map(|&i| basis[i].clone()).collect();
        out = out.add(&wedge_elements(&g, k, &elems)?.scale(c)?)?;
    }
    Ok(out)
}

/// θ_b for the standard basis b of A^d, d = rank of xe.
pub fn theta_b(xe: &ExteriorElement) -> Result<Vec<CentralElement>> {
    theta_wrt(xe, &standard_basis(xe.group(), xe.rank()))
}

/// The section θ'_b(c) = Σ_σ c_σ·∧_{i∈σ} b_i.
pub fn theta_b_section(group: &Group, d: usize, r: usize, coords: &[CentralElement]) -> Result<ExteriorElement> {
    if r > d {
        return arg(format!("degree {r} exceeds rank {d}"));
    }
    if d == 0 {
        return ExteriorElement::from_coords(group, 0, 0, coords.iter().map(|c| vec![c.value(0).clone()]).collect());
    }
    section_wrt(&standard_basis(group, d), r, coords)
}

/// Per χ: (split dimension binomial(dχ(1), rχ(1)), tuple dimension binomial(d, r)).
pub fn theta_b_dimensions(group: &Group, d: usize, r: usize) -> Vec<(usize, usize)> {
    group
        .degrees()
        .iter()
        .map(|&n| (binomial(d * n, r * n), binomial(d, r)))
        .collect()
}

/// Whether θ_b is bijective, by comparing dimensions on every component.
pub fn theta_b_bijective(group: &Group, d: usize, r: usize) -> bool {
    theta_b_dimensions(group, d, r).iter().all(|(a, b)| a == b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::group;

    #[test]
    fn round_trip_and_dimensions() {
        let s3 = group("S3").unwrap();
        let c = vec![
            CentralElement::constant(&s3, &Rational::from(2)),
            CentralElement::from_values(
                &s3,
                vec![crate::arith::CycloNum::from_int(1), crate::arith::CycloNum::from_int(-1), crate::arith::CycloNum::from_int(3)],
            )
            .unwrap(),
        ];
        let x = theta_b_section(&s3, 2, 1, &c).unwrap();
        assert_eq!(theta_b(&x).unwrap(), c);
        assert_eq!(theta_b_dimensions(&s3, 2, 1)[2], (6, 2));
        assert!(!theta_b_bijective(&s3, 2, 1));
        assert!(theta_b_bijective(&s3, 2, 2));
        assert!(theta_b_bijective(&group("C4").unwrap(), 3, 1));
    }

    #[test]
    fn dual_basis_of_non_standard_basis() {
        let q8 = group("Q8").unwrap();
        let e = |c: &[i64]| GroupAlgebraElement::from_i64(&q8, c).unwrap();
        let basis = vec![
            vec![e(&[1, 0, 0, 0, 0, 0, 0, 0]), e(&[0, 0, 1, 0, 0, 0, 0, 0])],
            vec![e(&[0, 0, 0, 0, 0, 0, 0, 0]), e(&[0, 0, 0, 0, 1, 0, 0, 0])],
        ];
        let dual = dual_basis(&basis).unwrap();
        for (i, f) in dual.iter().enumerate() {
            for (j, m) in basis.iter().enumerate() {
                let v = super::super::wedge::apply_hom(f, m);
                let want = if i == j { GroupAlgebraElement::one(&q8) } else { GroupAlgebraElement::zero(&q8) };
                assert_eq!(v, want);
            }
        }
        let top = wedge_elements(&q8, 2, &basis).unwrap();
        let t = theta_wrt(&top, &basis).unwrap();
        assert_eq!(t, vec![CentralElement::one(&q8)]);
    }
}
