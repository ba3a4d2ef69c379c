use crate::algebra::{inverse, nrd, CentralElement, GroupAlgebraMatrix};
use crate::arith::Rational;
use crate::error::{arg, Result};

use super::{det_standard, koszul_sign, tensor, GradedInvertible};

type Mat = GroupAlgebraMatrix<Rational>;

/// A split short exact sequence 0 → A^{r1} → A^{r2} → A^{r3} → 0 of left
/// modules (row vectors, x ↦ x·θ), with a section σ of φ.
#[derive(Clone, Debug)]
pub struct ExactSequence {
    pub theta: Mat,
    pub phi: Mat,
    pub section: Mat,
}

impl ExactSequence {
    /// Validate shapes, θφ = 0, σφ = I and exactness on every split component.
    pub fn new(theta: Mat, phi: Mat, section: Mat) -> Result<ExactSequence> {
        let g = theta.group().clone();
        if phi.group() != &g || section.group() != &g {
            return arg("maps belong to different groups");
        }
        let (r1, r2, r3) = (theta.rows(), theta.cols(), phi.cols());
        if phi.rows() != r2 || section.rows() != r3 || section.cols() != r2 {
            return arg("map shapes do not compose");
        }
        if r1 + r3 != r2 {
            return arg(format!("ranks {r1} + {r3} ≠ {r2}: not exact"));
        }
        if !theta.mul(&phi)?.is_zero() {
            return arg("φ∘θ ≠ 0");
        }
        if section.mul(&phi)? != GroupAlgebraMatrix::identity(&g, r3) {
            return arg("section is not a right inverse of φ");
        }
        for chi in 0..g.num_irreps() {
            let n = g.irreps()[chi].degree();
            if theta.split(chi).rank() != r1 * n {
                return arg(format!("θ is not injective at χ{chi}"));
            }
        }
        Ok(ExactSequence { theta, phi, section })
    }

    pub fn ranks(&self) -> (usize, usize, usize) {
        (self.theta.rows(), self.theta.cols(), self.phi.cols())
    }

    /// The change-of-basis matrix T = [θ; σ].
    pub fn assembled(&self) -> Result<Mat> {
        self.theta.vcat(&self.section)
    }

    /// 0 → A^{r3} --σ--> A^{r2} --π--> A^{r1} → 0 with section θ, where π
    /// is the retraction with θπ = I and σπ = 0.
    pub fn complementary(&self) -> Result<ExactSequence> {
        let r1 = self.theta.rows();
        let Some(tinv) = inverse(&self.assembled()?)? else {
            return arg("assembled matrix is singular");
        };
        let pi = tinv.select_cols(&(0..r1).collect::<Vec<_>>());
        ExactSequence::new(self.section.clone(), pi, self.theta.clone())
    }
}

/// The direct-sum sequence A^{r1} → A^{r1+r3} → A^{r3} with the identity
/// section.
pub fn direct_sum_sequence(group: &crate::groups::Group, r1: usize, r3: usize) -> Result<ExactSequence> {
    let r2 = r1 + r3;
    let theta = GroupAlgebraMatrix::from_fn(group, r1, r2, |i, j| {
        if i == j { crate::algebra::GroupAlgebraElement::one(group) } else { crate::algebra::GroupAlgebraElement::zero(group) }
    });
    let section = GroupAlgebraMatrix::from_fn(group, r3, r2, |i, j| {
        if j == r1 + i { crate::algebra::GroupAlgebraElement::one(group) } else { crate::algebra::GroupAlgebraElement::zero(group) }
    });
    ExactSequence::new(theta, section.transpose(), section)
}

/// Generator-level isomorphism d(P2) ≅ d(P1) ⊗ d(P3).
#[derive(Clone, Debug)]
pub struct SesIso {
    /// Nrd of T = [θ; σ].
    pub assembled_nrd: CentralElement,
    /// Image of the standard generator of d(P2).
    pub image: GradedInvertible,
}

/// The isomorphism induced by the sequence: ∧θ(b¹) ∧ ∧σ(b³) = Nrd(T)·∧b²,
/// so the generator of d(P2) maps to Nrd(T)⁻¹·(g1 ⊗ g3).
pub fn ses_iso(seq: &ExactSequence, labels: (&str, &str)) -> Result<SesIso> {
    let g = seq.theta.group();
    let (r1, _, r3) = seq.ranks();
    let t = nrd(&seq.assembled()?)?;
    if !t.is_nowhere_zero() {
        return arg("assembled change of basis is singular");
    }
    let d1 = det_standard(g, labels.0, r1)?;
    let d3 = det_standard(g, labels.1, r3)?;
    Ok(SesIso {
        image: tensor(&d1, &d3)?.scale(&t.inverse()?),
        assembled_nrd: t,
    })
}

/// Compare the isomorphisms of a sequence and of its complementary
/// sequence through the swap d(P1) ⊗ d(P3) → d(P3) ⊗ d(P1). Returns the
/// sign (−1)^{ρ1ρ3} and whether the square commutes.
pub fn swap_order_sign(seq: &ExactSequence) -> Result<(CentralElement, bool)> {
    let iso1 = ses_iso(seq, ("P1", "P3"))?;
    let iso2 = ses_iso(&seq.complementary()?, ("P3", "P1"))?;
    let (rho1, rho3) = (&iso1.image.factors()[0].grading, &iso1.image.factors()[1].grading);
    let sign = koszul_sign(seq.theta.group(), rho1, rho3);
    let swapped = tensor(
        &GradedInvertible {
            factors: vec![iso1.image.factors()[1].clone()],
            ..GradedInvertible::unit(seq.theta.group())
        },
        &GradedInvertible {
            factors: vec![iso1.image.factors()[0].clone()],
            ..GradedInvertible::unit(seq.theta.group())
        },
    )?
    .scale(&(&sign * iso1.image.coeff()));
    Ok((sign, swapped == iso2.image))
}

/// Nrd of the automorphism v ↦ v·π_K·λ·π_U + v·(I − π_K)·θ of A^n: the
/// comparison λ on the kernel summand (picked out by the idempotent π_K
/// with image ker θ) followed by projection onto the complement of im θ
/// cut out by the idempotent π_U, and θ on the complement of the kernel.
pub fn two_term_nrd(theta: &Mat, ker_proj: &Mat, cok_proj: &Mat, comparison: &Mat) -> Result<CentralElement> {
    let g = theta.group();
    let n = theta.rows();
    for m in [theta, ker_proj, cok_proj, comparison] {
        if m.group() != g || m.rows() != n || m.cols() != n {
            return arg(format!("all maps must be {n}x{n} over {}", g.name()));
        }
    }
    if ker_proj.mul(ker_proj)? != *ker_proj || cok_proj.mul(cok_proj)? != *cok_proj {
        return arg("sections must be idempotents");
    }
    if !ker_proj.mul(theta)?.is_zero() || !theta.mul(cok_proj)?.is_zero() {
        return arg("π_K must map into ker θ and π_U must kill im θ");
    }
    for chi in 0..g.num_irreps() {
        let defect = n * g.irreps()[chi].degree() - theta.split(chi).rank();
        if ker_proj.split(chi).rank() != defect || cok_proj.split(chi).rank() != defect {
            return arg(format!("sections do not split kernel and cokernel at χ{chi}"));
        }
    }
    let id = GroupAlgebraMatrix::identity(g, n);
    let aut = ker_proj
        .mul(comparison)?
        .mul(cok_proj)?
        .add(&id.sub(ker_proj)?.mul(theta)?)?;
    let v = nrd(&aut)?;
    if !v.is_nowhere_zero() {
        return arg("comparison is not an isomorphism from kernel to cokernel");
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::group;

    #[test]
    fn direct_sum_has_factor_one() {
        let d4 = group("D4").unwrap();
        let seq = direct_sum_sequence(&d4, 1, 2).unwrap();
        let iso = ses_iso(&seq, ("P1", "P3")).unwrap();
        assert_eq!(iso.assembled_nrd, CentralElement::one(&d4));
        assert_eq!(iso.image.grading(), vec![3, 3, 3, 3, 6]);
        let (sign, ok) = swap_order_sign(&seq).unwrap();
        assert!(ok);
        // ρ1 = (1,1,1,1,2), ρ3 = (2,2,2,2,4): always even
        assert_eq!(sign, CentralElement::one(&d4));
        let seq = direct_sum_sequence(&d4, 1, 1).unwrap();
        let (sign, ok) = swap_order_sign(&seq).unwrap();
        assert!(ok);
        assert_eq!(sign.value(0).to_string(), "-1");
    }

    #[test]
    fn non_exact_rejected() {
        let c2 = group("C2").unwrap();
        let seq = direct_sum_sequence(&c2, 1, 1).unwrap();
        let bad = GroupAlgebraMatrix::<Rational>::identity(&c2, 2).select_cols(&[0]);
        assert!(ExactSequence::new(seq.theta.clone(), bad, seq.section.clone()).is_err());
    }

    #[test]
    fn two_term_examples() {
        let s3 = group("S3").unwrap();
        let theta = GroupAlgebraMatrix::from_i64(&s3, 1, 1, &[vec![2, 1, 0, 0, 0, 0]]).unwrap();
        let zero = GroupAlgebraMatrix::zeros(&s3, 1, 1);
        let id = GroupAlgebraMatrix::identity(&s3, 1);
        assert_eq!(two_term_nrd(&theta, &zero, &zero, &id).unwrap(), nrd(&theta).unwrap());
        assert_eq!(two_term_nrd(&theta, &zero, &zero, &theta).unwrap(), nrd(&theta).unwrap());
        assert_eq!(two_term_nrd(&zero, &id, &id, &id).unwrap(), CentralElement::one(&s3));
        assert!(two_term_nrd(&theta, &id, &id, &id).is_err());
    }
}
