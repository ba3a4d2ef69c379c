//! Graded invertible ξ-modules on the generator level: determinants of
//! free modules, tensor products with the Koszul swap sign, short exact
//! sequence isomorphisms and reduced norms of two-term automorphisms.

mod ses;

pub use ses::{direct_sum_sequence, ses_iso, swap_order_sign, two_term_nrd, ExactSequence, SesIso};

use std::fmt;

use crate::algebra::{nrd, reduced_rank, CentralElement, GroupAlgebraMatrix, ModuleShape};
use crate::arith::{CycloNum, Rational};
use crate::error::{arg, Result};
use crate::fitting::CentralLattice;
use crate::groups::Group;

/// One tensor factor: the determinant line of a named free module, or its
/// dual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub label: String,
    pub dual: bool,
    pub grading: Vec<i64>,
}

/// A graded invertible ξ-module ξ·g with g = coeff·(f_1 ⊗ … ⊗ f_m), where
/// each f_i is the standard top wedge of its factor. The grading is the sum
/// of the factor gradings.
#[derive(Clone, PartialEq)]
pub struct GradedInvertible {
    group: Group,
    factors: Vec<Factor>,
    coeff: CentralElement,
}

impl GradedInvertible {
    /// The unit object (ξ, 0).
    pub fn unit(group: &Group) -> GradedInvertible {
        GradedInvertible {
            group: group.clone(),
            factors: Vec::new(),
            coeff: CentralElement::one(group),
        }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    /// The generator relative to the standard top wedges of the factors.
    pub fn coeff(&self) -> &CentralElement {
        &self.coeff
    }

    pub fn grading(&self) -> Vec<i64> {
        let mut g = vec![0i64; self.group.num_irreps()];
        for f in &self.factors {
            for (a, b) in g.iter_mut().zip(&f.grading) {
                *a += b;
            }
        }
        g
    }

    /// A generator is nonzero in every component.
    pub fn is_nondegenerate(&self) -> bool {
        self.coeff.is_nowhere_zero()
    }

    pub fn scale(&self, c: &CentralElement) -> GradedInvertible {
        GradedInvertible {
            coeff: &self.coeff * c,
            ..self.clone()
        }
    }

    /// The ratio u with other = u·self, for objects on the same factors.
    pub fn ratio(&self, other: &GradedInvertible) -> Result<CentralElement> {
        if self.group != other.group || self.factors != other.factors {
            return arg("objects have different underlying factors");
        }
        Ok(&other.coeff * &self.coeff.inverse()?)
    }

    /// Whether the two objects generate the same ξ-lattice, i.e. their
    /// ratio and its inverse lie in ξ.
    pub fn same_lattice(&self, other: &GradedInvertible, xi: &CentralLattice) -> Result<bool> {
        let u = self.ratio(other)?;
        Ok(xi.contains(&u, None) && xi.contains(&u.inverse()?, None))
    }

    /// X^{-1}: the dual line with negated grading and inverse generator,
    /// factors in reverse order.
    pub fn inverse(&self) -> Result<GradedInvertible> {
        let factors = self
            .factors
            .iter()
            .rev()
            .map(|f| Factor {
                label: f.label.clone(),
                dual: !f.dual,
                grading: f.grading.iter().map(|x| -x).collect(),
            })
            .collect();
        Ok(GradedInvertible {
            group: self.group.clone(),
            factors,
            coeff: self.coeff.inverse()?,
        })
    }
}

/// d(P) for P = A^r with the basis given by the rows of `basis`:
/// generator ∧b_i = Nrd(basis)·(standard top wedge), grading the reduced
/// rank (r·χ(1))_χ.
pub fn det_free(label: &str, basis: &GroupAlgebraMatrix<Rational>) -> Result<GradedInvertible> {
    if !basis.is_square() {
        return arg("a basis of A^r is an r×r matrix");
    }
    let g = basis.group();
    let coeff = nrd(basis)?;
    if !coeff.is_nowhere_zero() {
        return arg("basis vectors are linearly dependent");
    }
    let grading = reduced_rank(g, &ModuleShape::Free(basis.rows()))?
        .into_iter()
        .map(|x| x as i64)
        .collect();
    Ok(GradedInvertible {
        group: g.clone(),
        factors: vec![Factor {
            label: label.to_string(),
            dual: false,
            grading,
        }],
        coeff,
    })
}

/// d(A^r) with its standard basis.
pub fn det_standard(group: &Group, label: &str, r: usize) -> Result<GradedInvertible> {
    det_free(label, &GroupAlgebraMatrix::identity(group, r))
}

/// X ⊗ Y: factors concatenated, generators multiplied, gradings added.
pub fn tensor(x: &GradedInvertible, y: &GradedInvertible) -> Result<GradedInvertible> {
    if x.group != y.group {
        return arg("tensor factors belong to different groups");
    }
    let mut factors = x.factors.clone();
    factors.extend(y.factors.iter().cloned());
    Ok(GradedInvertible {
        group: x.group.clone(),
        factors,
        coeff: &x.coeff * &y.coeff,
    })
}

/// Per-χ sign (−1)^{α_χ·β_χ} for gradings α, β.
pub fn koszul_sign(group: &Group, alpha: &[i64], beta: &[i64]) -> CentralElement {
    let values = alpha
        .iter()
        .zip(beta)
        .map(|(a, b)| CycloNum::from_int(if (a * b).rem_euclid(2) == 0 { 1 } else { -1 }))
        .collect();
    CentralElement::from_values(group, values).expect("rational values")
}

/// The swap isomorphism X ⊗ Y → Y ⊗ X, x ⊗ y ↦ (−1)^{αβ}·y ⊗ x, applied to
/// the generator of X ⊗ Y. Returns the image and the sign.
pub fn swap(x: &GradedInvertible, y: &GradedInvertible) -> Result<(GradedInvertible, CentralElement)> {
    let sign = koszul_sign(&x.group, &x.grading(), &y.grading());
    let image = tensor(y, x)?.scale(&sign);
    Ok((image, sign))
}

/// The evaluation X ⊗ X^{-1} → (ξ, 0), applied to the generator.
pub fn evaluate(x: &GradedInvertible, x_inv: &GradedInvertible) -> Result<GradedInvertible> {
    if x.inverse()?.factors != x_inv.factors {
        return arg("second argument is not the inverse object of the first");
    }
    Ok(GradedInvertible::unit(&x.group).scale(&(&x.coeff * &x_inv.coeff)))
}

impl fmt::Debug for GradedInvertible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self
            .factors
            .iter()
            .map(|x| format!("d({}){}", x.label, if x.dual { "⁻¹" } else { "" }))
            .collect();
        let names = if names.is_empty() { "ξ".to_string() } else { names.join(" ⊗ ") };
        write!(f, "{:?}·[{}] graded {:?}", self.coeff, names, self.grading())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::group;

    #[test]
    fn det_free_examples() {
        let s3 = group("S3").unwrap();
        let a = det_standard(&s3, "A", 1).unwrap();
        assert_eq!(a.grading(), vec![1, 1, 2]);
        assert_eq!(a.coeff(), &CentralElement::one(&s3));
        // basis change by an elementary matrix is a ξ-unit change
        let c = GroupAlgebraMatrix::from_i64(
            &s3,
            2,
            2,
            &[vec![1, 0, 0, 0, 0, 0], vec![0, 1, 0, 0, 1, 0], vec![0; 6], vec![0, 0, 0, 1, 0, 0]],
        )
        .unwrap();
        let p = det_free("P", &c).unwrap();
        let q = det_standard(&s3, "P", 2).unwrap();
        assert_eq!(q.ratio(&p).unwrap(), nrd(&c).unwrap());
    }

    #[test]
    fn tensor_unit_and_swap() {
        let s3 = group("S3").unwrap();
        let x = det_standard(&s3, "X", 1).unwrap();
        let y = det_standard(&s3, "Y", 3).unwrap();
        let u = GradedInvertible::unit(&s3);
        assert_eq!(tensor(&u, &x).unwrap(), x);
        assert_eq!(tensor(&x, &u).unwrap(), x);
        let (img, sign) = swap(&x, &y).unwrap();
        // gradings (1,1,2) and (3,3,6): odd·odd on the linear characters
        let s: Vec<String> = sign.values().iter().map(|v| v.to_string()).collect();
        assert_eq!(s, ["-1", "-1", "1"]);
        let (back, _) = swap(&y, &x).unwrap();
        assert_eq!(tensor(&y, &x).unwrap().ratio(&img).unwrap(), sign);
        assert_eq!(back.ratio(&tensor(&x, &y).unwrap()).unwrap(), sign);
        let inv = x.inverse().unwrap();
        assert_eq!(inv.grading(), vec![-1, -1, -2]);
        assert_eq!(evaluate(&x, &inv).unwrap(), u);
    }
}
