use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::arith::{CycloNum, Matrix, Rational};
use crate::error::{arg, internal, Error, Result};
use crate::groups::Group;

use super::element::{wedderburn_inverse, GroupAlgebraElement};

/// An element of the centre of Q(ζ_e)[G], stored as one value per
/// irreducible character (the scalar by which it acts on V_χ).
#[derive(Clone, PartialEq)]
pub struct CentralElement {
    group: Group,
    values: Vec<CycloNum>,
}

impl CentralElement {
    /// Build from per-χ values without checking Galois consistency.
    pub fn from_values(group: &Group, values: Vec<CycloNum>) -> Result<CentralElement> {
        if values.len() != group.num_irreps() {
            return arg(format!(
                "{} values for {} characters",
                values.len(),
                group.num_irreps()
            ));
        }
        let e = group.exponent();
        for v in &values {
            if e % v.conductor() != 0 {
                let m = v.minimize();
                if e % m.conductor() != 0 {
                    return arg(format!("value {v} does not lie in Q(ζ_{e})"));
                }
            }
        }
        Ok(CentralElement {
            group: group.clone(),
            values,
        })
    }

    pub fn constant(group: &Group, q: &Rational) -> CentralElement {
        CentralElement {
            group: group.clone(),
            values: vec![CycloNum::from_rational(q); group.num_irreps()],
        }
    }

    pub fn one(group: &Group) -> CentralElement {
        Self::constant(group, &Rational::one())
    }

    pub fn zero(group: &Group) -> CentralElement {
        Self::constant(group, &Rational::zero())
    }

    /// The tuple with 1 at χ and 0 elsewhere (the image of e_χ).
    pub fn indicator(group: &Group, chi: usize) -> CentralElement {
        let values = (0..group.num_irreps())
            .map(|c| if c == chi { CycloNum::one() } else { CycloNum::zero() })
            .collect();
        CentralElement {
            group: group.clone(),
            values,
        }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn values(&self) -> &[CycloNum] {
        &self.values
    }

    pub fn value(&self, chi: usize) -> &CycloNum {
        &self.values[chi]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    /// True when no component vanishes.
    pub fn is_nowhere_zero(&self) -> bool {
        self.values.iter().all(|v| !v.is_zero())
    }

    /// values[χ^{σ_a}] = σ_a(values[χ]) for every a ∈ (Z/e)^×.
    pub fn is_galois_consistent(&self) -> bool {
        let e = self.group.exponent().max(1);
        self.group.galois_units().into_iter().all(|a| {
            (0..self.values.len()).all(|chi| {
                let target = self.group.galois_index(a, chi);
                let moved = self.values[chi]
                    .galois_mod(a.max(1), e)
                    .expect("value conductor divides the exponent");
                moved == self.values[target]
            })
        })
    }

    pub fn check_galois(&self) -> Result<()> {
        if self.is_galois_consistent() {
            Ok(())
        } else {
            internal(format!("{:?} is not Galois-consistent", self))
        }
    }

    /// True when every value lies in Z[ζ_e].
    pub fn is_integral(&self) -> bool {
        self.values.iter().all(|v| v.is_integral())
    }

    /// The # involution: (x^#)_χ = x_χ̌.
    pub fn hash(&self) -> CentralElement {
        let values = (0..self.values.len())
            .map(|chi| self.values[self.group.contragredient_index(chi)].clone())
            .collect();
        CentralElement {
            group: self.group.clone(),
            values,
        }
    }

    pub fn inverse(&self) -> Result<CentralElement> {
        let values = self
            .values
            .iter()
            .map(|v| v.inverse())
            .collect::<Result<Vec<_>>>()?;
        Ok(CentralElement {
            group: self.group.clone(),
            values,
        })
    }

    /// Coordinates in the basis of conjugacy-class sums:
    /// a_C = |G|⁻¹ Σ_χ χ(1)·x_χ·χ(g_C⁻¹). Requires Galois consistency.
    pub fn class_coords(&self) -> Result<Vec<Rational>> {
        let g = &self.group;
        let inv_order = CycloNum::from_rational(&Rational::new(1, g.order() as i64));
        g.classes()
            .iter()
            .map(|cls| {
                let rep = g.inverse(cls[0]);
                let s = g.irreps().iter().zip(&self.values).fold(CycloNum::zero(), |acc, (r, x)| {
                    if x.is_zero() {
                        acc
                    } else {
                        &acc + &(&(x * &r.character()[rep]) * &CycloNum::from_int(r.degree() as i64))
                    }
                });
                (&s * &inv_order)
                    .as_rational()
                    .ok_or_else(|| Error::Internal(format!("{self:?} has irrational class coordinates")))
            })
            .collect()
    }

    /// Inverse of [`class_coords`](Self::class_coords):
    /// x_χ = Σ_C a_C·|C|·χ(g_C)/χ(1).
    pub fn from_class_coords(group: &Group, coords: &[Rational]) -> Result<CentralElement> {
        if coords.len() != group.classes().len() {
            return arg("one coordinate per conjugacy class required");
        }
        let values = group
            .irreps()
            .iter()
            .map(|r| {
                let s = group.classes().iter().zip(coords).fold(CycloNum::zero(), |acc, (cls, a)| {
                    if a.is_zero() {
                        acc
                    } else {
                        let w = a * &Rational::from(cls.len() as i64);
                        &acc + &(&r.character()[cls[0]] * &CycloNum::from_rational(&w))
                    }
                });
                &s * &CycloNum::from_rational(&Rational::new(1, r.degree() as i64))
            })
            .collect();
        Ok(CentralElement {
            group: group.clone(),
            values,
        })
    }

    /// The central group-algebra element with these values.
    pub fn to_group_algebra(&self) -> Result<GroupAlgebraElement<Rational>> {
        let coords = self.class_coords()?;
        let mut coeffs = vec![Rational::zero(); self.group.order()];
        for (cls, a) in self.group.classes().iter().zip(&coords) {
            for &x in cls {
                coeffs[x] = a.clone();
            }
        }
        GroupAlgebraElement::new(&self.group, coeffs)
    }

    /// The same element over Q(ζ_e), without requiring rational coordinates.
    pub fn to_group_algebra_cyclo(&self) -> Result<GroupAlgebraElement<CycloNum>> {
        let blocks: Vec<Matrix<CycloNum>> = self
            .group
            .irreps()
            .iter()
            .zip(&self.values)
            .map(|(r, v)| Matrix::identity(r.degree()).scale(v))
            .collect();
        wedderburn_inverse(&self.group, &blocks)
    }

    /// Image of a central group-algebra element; non-central input is an error.
    pub fn from_group_algebra<K: crate::arith::Field>(
        x: &GroupAlgebraElement<K>,
    ) -> Result<CentralElement> {
        if !x.is_central() {
            return arg(format!("{x:?} is not central"));
        }
        let values = (0..x.group().num_irreps())
            .map(|chi| x.rep_image(chi).get(0, 0).clone())
            .collect();
        Ok(CentralElement {
            group: x.group().clone(),
            values,
        })
    }

    fn zip(&self, o: &CentralElement, f: impl Fn(&CycloNum, &CycloNum) -> CycloNum) -> CentralElement {
        assert!(self.group == o.group, "group mismatch");
        CentralElement {
            group: self.group.clone(),
            values: self.values.iter().zip(&o.values).map(|(a, b)| f(a, b)).collect(),
        }
    }
}

impl<'a> Add<&'a CentralElement> for &'a CentralElement {
    type Output = CentralElement;
    fn add(self, o: &'a CentralElement) -> CentralElement {
        self.zip(o, |a, b| a + b)
    }
}

impl<'a> Sub<&'a CentralElement> for &'a CentralElement {
    type Output = CentralElement;
    fn sub(self, o: &'a CentralElement) -> CentralElement {
        self.zip(o, |a, b| a - b)
    }
}

impl<'a> Mul<&'a CentralElement> for &'a CentralElement {
    type Output = CentralElement;
    fn mul(self, o: &'a CentralElement) -> CentralElement {
        self.zip(o, |a, b| a * b)
    }
}

impl Neg for &CentralElement {
    type Output = CentralElement;
    fn neg(self) -> CentralElement {
        CentralElement {
            group: self.group.clone(),
            values: self.values.iter().map(|v| -v).collect(),
        }
    }
}

impl fmt::Debug for CentralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.values.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", v.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::group;

    #[test]
    fn class_coordinates_round_trip() {
        for name in ["C4", "S3", "Q8", "A4", "D5"] {
            let g = group(name).unwrap();
            for (k, _) in g.classes().iter().enumerate() {
                let mut coords = vec![Rational::zero(); g.classes().len()];
                coords[k] = Rational::new(3, 2);
                let x = CentralElement::from_class_coords(&g, &coords).unwrap();
                assert!(x.is_galois_consistent(), "{name}");
                assert_eq!(x.class_coords().unwrap(), coords);
                let ga = x.to_group_algebra().unwrap();
                assert!(ga.is_central());
                assert_eq!(CentralElement::from_group_algebra(&ga).unwrap(), x);
            }
        }
    }

    #[test]
    fn hash_is_involution() {
        let c3 = group("C3").unwrap();
        let x = CentralElement::from_values(
            &c3,
            vec![CycloNum::from_int(1), CycloNum::zeta(3, 1), CycloNum::zeta(3, 2)],
        )
        .unwrap();
        assert_eq!(x.hash().value(1), &CycloNum::zeta(3, 2));
        assert_eq!(x.hash().hash(), x);
        let c = CentralElement::constant(&c3, &Rational::from(5));
        assert_eq!(c.hash(), c);
    }

    #[test]
    fn non_central_rejected() {
        let q8 = group("Q8").unwrap();
        let i = GroupAlgebraElement::<Rational>::basis(&q8, 2);
        assert!(CentralElement::from_group_algebra(&i).is_err());
    }
}
