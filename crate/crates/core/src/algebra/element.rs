use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use crate::arith::{CycloNum, Field, Matrix, Rational};
use crate::error::{arg, Result};
use crate::groups::Group;

/// Coefficient ring of a group-algebra element, as reported to callers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseRing {
    Integers,
    Rationals,
    Cyclotomic(u64),
}

/// Σ_g c_g·g in K[G], with coefficients indexed by element label.
#[derive(Clone, PartialEq)]
pub struct GroupAlgebraElement<K: Field = Rational> {
    group: Group,
    coeffs: Vec<K>,
}

impl<K: Field> GroupAlgebraElement<K> {
    pub fn new(group: &Group, coeffs: Vec<K>) -> Result<Self> {
        if coeffs.len() != group.order() {
            return arg(format!(
                "{} coefficients for a group of order {}",
                coeffs.len(),
                group.order()
            ));
        }
        Ok(GroupAlgebraElement {
            group: group.clone(),
            coeffs,
        })
    }

    pub fn zero(group: &Group) -> Self {
        GroupAlgebraElement {
            group: group.clone(),
            coeffs: vec![K::zero(); group.order()],
        }
    }

    pub fn one(group: &Group) -> Self {
        Self::basis(group, 0)
    }

    /// The group element with label `g`.
    pub fn basis(group: &Group, g: usize) -> Self {
        let mut x = Self::zero(group);
        x.coeffs[g] = K::one();
        x
    }

    pub fn scalar(group: &Group, c: K) -> Self {
        let mut x = Self::zero(group);
        x.coeffs[0] = c;
        x
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn coeff(&self, g: usize) -> &K {
        &self.coeffs[g]
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, c: &K) -> Self {
        GroupAlgebraElement {
            group: self.group.clone(),
            coeffs: self.coeffs.iter().map(|x| x.mul_ref(c)).collect(),
        }
    }

    /// Left multiplication by a group element: h·x.
    pub fn translate(&self, h: usize) -> Self {
        let mut out = vec![K::zero(); self.coeffs.len()];
        for (g, c) in self.coeffs.iter().enumerate() {
            out[self.group.mul(h, g)] = c.clone();
        }
        GroupAlgebraElement {
            group: self.group.clone(),
            coeffs: out,
        }
    }

    /// The anti-involution Σ c_g g ↦ Σ c_g g⁻¹.
    pub fn hash(&self) -> Self {
        let mut out = vec![K::zero(); self.coeffs.len()];
        for (g, c) in self.coeffs.iter().enumerate() {
            out[self.group.inverse(g)] = c.clone();
        }
        GroupAlgebraElement {
            group: self.group.clone(),
            coeffs: out,
        }
    }

    pub fn map<L: Field>(&self, f: impl Fn(&K) -> L) -> GroupAlgebraElement<L> {
        GroupAlgebraElement {
            group: self.group.clone(),
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn to_cyclo(&self) -> GroupAlgebraElement<CycloNum> {
        self.map(|c| c.to_cyclo())
    }

    /// ρ_χ(x) = Σ_g c_g ρ_χ(g).
    pub fn rep_image(&self, chi: usize) -> Matrix<CycloNum> {
        let rep = &self.group.irreps()[chi];
        let d = rep.degree();
        let mut acc = Matrix::zeros(d, d);
        for (g, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acc = acc.add(&rep.matrix(g).scale(&c.to_cyclo()));
        }
        acc
    }

    /// The Wedderburn image (ρ_χ(x))_χ.
    pub fn wedderburn(&self) -> Vec<Matrix<CycloNum>> {
        (0..self.group.num_irreps()).map(|chi| self.rep_image(chi)).collect()
    }

    /// True if x commutes with every group element.
    pub fn is_central(&self) -> bool {
        (0..self.group.order()).all(|g| {
            (0..self.group.order()).all(|h| {
                // coefficient of h in g x g⁻¹ is that of g⁻¹ h g in x
                let conj = self.group.mul(self.group.mul(self.group.inverse(g), h), g);
                self.coeffs[h] == self.coeffs[conj]
            })
        })
    }

    fn check_same(&self, o: &Self) {
        assert!(
            self.group == o.group,
            "group mismatch: {} vs {}",
            self.group.name(),
            o.group.name()
        );
    }

    fn add_impl(&self, o: &Self) -> Self {
        self.check_same(o);
        GroupAlgebraElement {
            group: self.group.clone(),
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.add_ref(b)).collect(),
        }
    }

    fn sub_impl(&self, o: &Self) -> Self {
        self.check_same(o);
        GroupAlgebraElement {
            group: self.group.clone(),
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.sub_ref(b)).collect(),
        }
    }

    fn mul_impl(&self, o: &Self) -> Self {
        self.check_same(o);
        let mut out = vec![K::zero(); self.coeffs.len()];
        for (g, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (h, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    let k = self.group.mul(g, h);
                    out[k] = out[k].add_ref(&a.mul_ref(b));
                }
            }
        }
        GroupAlgebraElement {
            group: self.group.clone(),
            coeffs: out,
        }
    }
}

impl GroupAlgebraElement<Rational> {
    pub fn from_i64(group: &Group, coeffs: &[i64]) -> Result<Self> {
        Self::new(group, coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn base_ring(&self) -> BaseRing {
        if self.is_integral() {
            BaseRing::Integers
        } else {
            BaseRing::Rationals
        }
    }

    /// Integer coefficients, if integral.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs.iter().map(|c| c.to_integer()).collect()
    }
}

impl GroupAlgebraElement<CycloNum> {
    /// Rational coefficients, if every coefficient is rational.
    pub fn to_rational(&self) -> Option<GroupAlgebraElement<Rational>> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.as_rational())
            .collect::<Option<Vec<_>>>()?;
        Some(GroupAlgebraElement {
            group: self.group.clone(),
            coeffs,
        })
    }

    pub fn base_ring(&self) -> BaseRing {
        let n = self
            .coeffs
            .iter()
            .map(|c| c.minimize().conductor())
            .fold(1, crate::arith::cyclo::lcm_u64);
        BaseRing::Cyclotomic(n)
    }
}

/// Fourier inversion: coefficient of g is |G|⁻¹ Σ_χ χ(1)·tr(A_χ ρ_χ(g⁻¹)).
pub fn wedderburn_inverse(
    group: &Group,
    blocks: &[Matrix<CycloNum>],
) -> Result<GroupAlgebraElement<CycloNum>> {
    if blocks.len() != group.num_irreps() {
        return arg(format!(
            "{} blocks for {} irreducible characters",
            blocks.len(),
            group.num_irreps()
        ));
    }
    for (b, r) in blocks.iter().zip(group.irreps()) {
        if b.rows() != r.degree() || b.cols() != r.degree() {
            return arg("block shape does not match the character degree");
        }
    }
    let inv_order = CycloNum::from_rational(&Rational::new(1, group.order() as i64));
    let coeffs = (0..group.order())
        .map(|g| {
            let gi = group.inverse(g);
            let mut acc = CycloNum::zero();
            for (b, r) in blocks.iter().zip(group.irreps()) {
                if b.is_zero() {
                    continue;
                }
                let rho = r.matrix(gi);
                let d = r.degree();
                // tr(A·B) = Σ_{i,j} A_ij B_ji
                let mut tr = CycloNum::zero();
                for i in 0..d {
                    for j in 0..d {
                        let (a, bb) = (b.get(i, j), rho.get(j, i));
                        if !a.is_zero() && !bb.is_zero() {
                            tr = &tr + &(a * bb);
                        }
                    }
                }
                acc = &acc + &(&tr * &CycloNum::from_int(d as i64));
            }
            &acc * &inv_order
        })
        .collect();
    GroupAlgebraElement::new(group, coeffs)
}

/// e_χ = χ(1)|G|⁻¹ Σ_g χ(g) g⁻¹.
pub fn central_idempotent(group: &Group, chi: usize) -> GroupAlgebraElement<CycloNum> {
    let r = &group.irreps()[chi];
    let c = CycloNum::from_rational(&Rational::new(r.degree() as i64, group.order() as i64));
    let mut coeffs = vec![CycloNum::zero(); group.order()];
    for g in 0..group.order() {
        coeffs[group.inverse(g)] = &c * &r.character()[g];
    }
    GroupAlgebraElement::new(group, coeffs).expect("coefficient count matches")
}

macro_rules! element_ops {
    ($tr:ident, $m:ident, $imp:ident) => {
        impl<'a, K: Field> $tr<&'a GroupAlgebraElement<K>> for &'a GroupAlgebraElement<K> {
            type Output = GroupAlgebraElement<K>;
            fn $m(self, o: &'a GroupAlgebraElement<K>) -> GroupAlgebraElement<K> {
                self.$imp(o)
            }
        }
        impl<K: Field> $tr for GroupAlgebraElement<K> {
            type Output = GroupAlgebraElement<K>;
            fn $m(self, o: GroupAlgebraElement<K>) -> GroupAlgebraElement<K> {
                self.$imp(&o)
            }
        }
    };
}

element_ops!(Add, add, add_impl);
element_ops!(Sub, sub, sub_impl);
element_ops!(Mul, mul, mul_impl);

impl<K: Field> Neg for &GroupAlgebraElement<K> {
    type Output = GroupAlgebraElement<K>;
    fn neg(self) -> GroupAlgebraElement<K> {
        self.map(|c| c.neg_ref())
    }
}

impl<K: Field> fmt::Debug for GroupAlgebraElement<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(g, c)| format!("{c:?}*g{g}"))
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}
