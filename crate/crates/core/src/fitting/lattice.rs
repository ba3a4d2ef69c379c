use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::algebra::CentralElement;
use crate::arith::{IntLattice, Rational};
use crate::error::{arg, Result};
use crate::groups::Group;

/// A finitely generated Z-lattice in ζ(Q[G]).
///
/// Coordinates are taken in the basis of conjugacy-class sums (classes in
/// the group's order). The lattice is stored as `denom⁻¹ · H` with H an
/// integer HNF lattice and `denom` minimal, which makes equality canonical.
#[derive(Clone)]
pub struct CentralLattice {
    group: Group,
    denom: BigInt,
    lattice: IntLattice,
    provenance: Vec<String>,
    stable: bool,
    exact: bool,
}

impl PartialEq for CentralLattice {
    /// Equality of the underlying lattices; metadata is ignored.
    fn eq(&self, o: &CentralLattice) -> bool {
        self.group == o.group && self.denom == o.denom && self.lattice == o.lattice
    }
}

impl CentralLattice {
    pub fn zero(group: &Group) -> CentralLattice {
        CentralLattice {
            group: group.clone(),
            denom: BigInt::one(),
            lattice: IntLattice::zero(group.classes().len()),
            provenance: Vec::new(),
            stable: true,
            exact: true,
        }
    }

    /// ζ(Z[G]): the integer span of the class sums.
    pub fn center_of_group_ring(group: &Group) -> CentralLattice {
        CentralLattice {
            lattice: IntLattice::full(group.classes().len()),
            provenance: vec!["class sums of Z[G]".into()],
            ..Self::zero(group)
        }
    }

    pub fn from_generators(group: &Group, gens: &[CentralElement]) -> Result<CentralLattice> {
        let mut l = Self::zero(group);
        for g in gens {
            l.insert(g)?;
        }
        Ok(l)
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn denominator(&self) -> &BigInt {
        &self.denom
    }

    /// HNF basis of `denominator · L`.
    pub fn hnf(&self) -> &IntLattice {
        &self.lattice
    }

    /// Smallest element label of each conjugacy class: the coordinate legend.
    pub fn legend(&self) -> Vec<usize> {
        self.group.classes().iter().map(|c| c[0]).collect()
    }

    pub fn rank(&self) -> usize {
        self.lattice.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.lattice.is_zero()
    }

    pub fn provenance(&self) -> &[String] {
        &self.provenance
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.provenance.push(s.into());
    }

    pub fn is_stable(&self) -> bool {
        self.stable
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    pub fn set_flags(&mut self, stable: bool, exact: bool) {
        self.stable = stable;
        self.exact = exact;
    }

    /// Basis elements as central elements.
    pub fn basis(&self) -> Vec<CentralElement> {
        self.lattice
            .basis()
            .iter()
            .map(|row| {
                let coords: Vec<Rational> = row
                    .iter()
                    .map(|x| Rational::new(x.clone(), self.denom.clone()))
                    .collect();
                CentralElement::from_class_coords(&self.group, &coords)
                    .expect("coordinate count matches")
            })
            .collect()
    }

    fn rescale(&mut self, new_denom: &BigInt) {
        if *new_denom == self.denom {
            return;
        }
        let f = new_denom / &self.denom;
        let rows: Vec<Vec<BigInt>> = self
            .lattice
            .basis()
            .iter()
            .map(|r| r.iter().map(|x| x * &f).collect())
            .collect();
        self.lattice = IntLattice::hnf(self.lattice.ambient_rank(), &rows).expect("same rank");
        self.denom = new_denom.clone();
    }

    fn normalize(&mut self) {
        let content = self
            .lattice
            .basis()
            .iter()
            .flatten()
            .fold(BigInt::zero(), |acc, x| acc.gcd(x));
        let g = self.denom.gcd(&content);
        if !g.is_one() && !g.is_zero() {
            let rows: Vec<Vec<BigInt>> = self
                .lattice
                .basis()
                .iter()
                .map(|r| r.iter().map(|x| x / &g).collect())
                .collect();
            self.lattice = IntLattice::hnf(self.lattice.ambient_rank(), &rows).expect("same rank");
            self.denom = &self.denom / &g;
        }
        if self.lattice.is_zero() {
            self.denom = BigInt::one();
        }
    }

    /// Add a generator (checked for Galois consistency); returns whether
    /// the lattice grew.
    pub fn insert(&mut self, x: &CentralElement) -> Result<bool> {
        if x.group() != &self.group {
            return arg("generator belongs to a different group");
        }
        x.check_galois()?;
        let coords = x.class_coords()?;
        self.insert_coords(&coords)
    }

    /// Add a generator given in class-sum coordinates.
    pub fn insert_coords(&mut self, coords: &[Rational]) -> Result<bool> {
        if coords.len() != self.lattice.ambient_rank() {
            return arg("coordinate vector has the wrong length");
        }
        if self.contains_coords(coords, None) {
            return Ok(false);
        }
        let den = coords.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let target = self.denom.lcm(&den);
        self.rescale(&target);
        let v: Vec<BigInt> = coords
            .iter()
            .map(|c| c.numer() * (&self.denom / c.denom()))
            .collect();
        let grew = self.lattice.insert(v)?;
        self.normalize();
        Ok(grew)
    }

    fn contains_coords(&self, coords: &[Rational], p: Option<u64>) -> bool {
        let scaled: Vec<Rational> = coords
            .iter()
            .map(|c| c * &Rational::from(self.denom.clone()))
            .collect();
        self.lattice.contains(&scaled, p)
    }

    /// Membership, optionally localized at a prime p (denominators prime to
    /// p are then ignored).
    pub fn contains(&self, x: &CentralElement, p: Option<u64>) -> bool {
        if !x.is_galois_consistent() {
            return false;
        }
        match x.class_coords() {
            Ok(c) => self.contains_coords(&c, p),
            Err(_) => false,
        }
    }

    pub fn is_sublattice_of(&self, o: &CentralLattice) -> bool {
        self.group == o.group
            && self.lattice.basis().iter().all(|row| {
                let c: Vec<Rational> = row
                    .iter()
                    .map(|x| Rational::new(x.clone(), self.denom.clone()))
                    .collect();
                o.contains_coords(&c, None)
            })
    }

    pub fn join(&self, o: &CentralLattice) -> Result<CentralLattice> {
        let mut out = self.clone();
        for b in o.basis() {
            out.insert(&b)?;
        }
        out.stable = self.stable && o.stable;
        out.exact = self.exact && o.exact;
        Ok(out)
    }

    /// The lattice generated by all products of basis elements.
    pub fn mul(&self, o: &CentralLattice) -> Result<CentralLattice> {
        let mut out = Self::zero(&self.group);
        let (a, b) = (self.basis(), o.basis());
        for x in &a {
            for y in &b {
                out.insert(&(x * y))?;
            }
        }
        out.stable = self.stable && o.stable;
        out.exact = self.exact && o.exact;
        Ok(out)
    }

    /// Apply the # involution to every generator.
    pub fn hash(&self) -> CentralLattice {
        let mut out = Self::zero(&self.group);
        for b in self.basis() {
            out.insert(&b.hash()).expect("# preserves Galois consistency");
        }
        out.provenance = self.provenance.clone();
        out.stable = self.stable;
        out.exact = self.exact;
        out
    }
}

impl fmt::Debug for CentralLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "CentralLattice({}, 1/{} · {:?}, stable={}, exact={})",
            self.group.name(),
            self.denom,
            self.lattice,
            self.stable,
            self.exact
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::CycloNum;
    use crate::groups::group;

    #[test]
    fn canonical_denominator() {
        let c2 = group("C2").unwrap();
        let half = CentralElement::constant(&c2, &Rational::new(1, 2));
        let mut l = CentralLattice::zero(&c2);
        assert!(l.insert(&half).unwrap());
        assert_eq!(l.denominator(), &BigInt::from(2));
        let mut m = CentralLattice::zero(&c2);
        m.insert(&half).unwrap();
        m.insert(&CentralElement::one(&c2)).unwrap();
        assert_eq!(l, m);
        // adding the whole of Z[G] plus 1/2 gives denominator 2, and
        // removing the 1/2 is impossible, so the two differ
        let z = CentralLattice::center_of_group_ring(&c2);
        assert!(z.is_sublattice_of(&z.join(&l).unwrap()));
        assert!(!l.is_sublattice_of(&z));
    }

    #[test]
    fn local_membership() {
        let c2 = group("C2").unwrap();
        let l = CentralLattice::from_generators(&c2, &[CentralElement::constant(&c2, &Rational::from(3))])
            .unwrap();
        let one = CentralElement::one(&c2);
        assert!(!l.contains(&one, None));
        assert!(l.contains(&one, Some(2)));
        assert!(!l.contains(&one, Some(3)));
    }

    #[test]
    fn inconsistent_generator_rejected() {
        let c3 = group("C3").unwrap();
        let bad = CentralElement::from_values(
            &c3,
            vec![CycloNum::one(), CycloNum::zeta(3, 1), CycloNum::zeta(3, 1)],
        )
        .unwrap();
        assert!(CentralLattice::zero(&c3).insert(&bad).is_err());
    }
}
