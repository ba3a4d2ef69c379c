//! Finite groups from a fixed catalog, with complete sets of irreducible
//! matrix representations over Q(ζ_e), character tables, conjugacy
//! classes, contragredients and the Galois action on characters.

mod catalog;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::cyclo::gcd_u64;
use crate::arith::{CycloNum, Matrix};
use crate::error::{internal, Result};

/// A matrix representation ρ_χ with its character.
#[derive(Clone, Debug)]
pub struct IrreducibleRep {
    degree: usize,
    matrices: Vec<Matrix<CycloNum>>,
    character: Vec<CycloNum>,
}

impl IrreducibleRep {
    fn new(matrices: Vec<Matrix<CycloNum>>, conductor: u64) -> IrreducibleRep {
        let matrices: Vec<Matrix<CycloNum>> = matrices
            .into_iter()
            .map(|m| m.map(|x| x.lift(conductor).expect("entry conductor divides exponent")))
            .collect();
        let degree = matrices[0].rows();
        let character = matrices
            .iter()
            .map(|m| (0..degree).fold(CycloNum::zero(), |acc, i| &acc + m.get(i, i)))
            .collect();
        IrreducibleRep {
            degree,
            matrices,
            character,
        }
    }

    /// χ(1).
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// ρ(g).
    pub fn matrix(&self, g: usize) -> &Matrix<CycloNum> {
        &self.matrices[g]
    }

    pub fn matrices(&self) -> &[Matrix<CycloNum>] {
        &self.matrices
    }

    /// χ(g) = trace ρ(g).
    pub fn character(&self) -> &[CycloNum] {
        &self.character
    }

    /// ρ̌(g) = ρ(g⁻¹)ᵀ.
    pub fn contragredient(&self, group: &FiniteGroup) -> IrreducibleRep {
        let matrices: Vec<Matrix<CycloNum>> = (0..group.order())
            .map(|g| self.matrices[group.inverse(g)].transpose())
            .collect();
        IrreducibleRep::new(matrices, group.exponent())
    }
}

/// A catalog group: multiplication table plus representation data.
///
/// Elements are the labels `0..order`; label 0 is the identity.
pub struct FiniteGroup {
    name: String,
    params: Vec<u64>,
    order: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
    element_orders: Vec<u64>,
    exponent: u64,
    irreps: Vec<IrreducibleRep>,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    contragredient: Vec<usize>,
    galois: Vec<(u64, Vec<usize>)>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, o: &FiniteGroup) -> bool {
        self.name == o.name
    }
}

impl Eq for FiniteGroup {}

/// Shared handle to a catalog group.
pub type Group = Arc<FiniteGroup>;

/// Look up (and cache) a catalog group by name, e.g. `"C6"`, `"D4"`,
/// `"S3xC2"`. With `params`, the name may be a bare family (`"C"`, `[6]`).
pub fn group_from_catalog(name: &str, params: &[u64]) -> Result<Group> {
    let spec = catalog::spec_from_parts(name, params)?;
    let key = spec.canonical_name();
    static CACHE: OnceLock<Mutex<HashMap<String, Group>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(g) = cache.lock().unwrap().get(&key) {
        return Ok(g.clone());
    }
    let g = Arc::new(FiniteGroup::build(&spec)?);
    Ok(cache.lock().unwrap().entry(key).or_insert(g).clone())
}

/// `group_from_catalog(name, &[])`.
pub fn group(name: &str) -> Result<Group> {
    group_from_catalog(name, &[])
}

impl FiniteGroup {
    fn build(spec: &catalog::Spec) -> Result<FiniteGroup> {
        let raw = spec.build();
        let n = raw.order;
        let table = raw.table;
        // group axioms
        for x in 0..n {
            if table[x] != x || table[x * n] != x {
                return internal("label 0 is not the identity");
            }
        }
        for x in 0..n {
            for y in 0..n {
                let xy = table[x * n + y];
                for z in 0..n {
                    if table[xy * n + z] != table[x * n + table[y * n + z]] {
                        return internal("multiplication table is not associative");
                    }
                }
            }
        }
        let mut inverse = vec![usize::MAX; n];
        for x in 0..n {
            match (0..n).find(|&y| table[x * n + y] == 0) {
                Some(y) if table[y * n + x] == 0 => inverse[x] = y,
                _ => return internal("element without inverse"),
            }
        }
        let element_orders: Vec<u64> = (0..n)
            .map(|x| {
                let (mut y, mut k) = (x, 1);
                while y != 0 {
                    y = table[y * n + x];
                    k += 1;
                }
                k
            })
            .collect();
        let exponent = element_orders
            .iter()
            .fold(1, |acc, &o| crate::arith::cyclo::lcm_u64(acc, o));

        let irreps: Vec<IrreducibleRep> = raw
            .irreps
            .into_iter()
            .map(|m| IrreducibleRep::new(m, exponent))
            .collect();

        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let mut cls: Vec<usize> = (0..n)
                .map(|g| table[table[g * n + x] * n + inverse[g]])
                .collect();
            cls.sort_unstable();
            cls.dedup();
            for &y in &cls {
                class_of[y] = classes.len();
            }
            classes.push(cls);
        }

        let mut g = FiniteGroup {
            name: spec.canonical_name(),
            params: spec.params(),
            order: n,
            table,
            inverse,
            element_orders,
            exponent,
            irreps,
            classes,
            class_of,
            contragredient: Vec::new(),
            galois: Vec::new(),
        };
        let find = |g: &FiniteGroup, values: &[CycloNum]| -> Result<usize> {
            match g.irreps.iter().position(|r| r.character() == values) {
                Some(i) => Ok(i),
                None => internal(format!("{}: character not in the catalog", g.name)),
            }
        };
        let mut contra = Vec::new();
        for r in &g.irreps {
            let v: Vec<CycloNum> = (0..n).map(|x| r.character[g.inverse[x]].clone()).collect();
            contra.push(find(&g, &v)?);
        }
        let mut galois = Vec::new();
        for a in (1..=exponent).filter(|&a| gcd_u64(a, exponent) == 1) {
            let mut perm = Vec::new();
            for r in &g.irreps {
                let v: Vec<CycloNum> = (0..n).map(|x| r.character[g.power(x, a)].clone()).collect();
                perm.push(find(&g, &v)?);
            }
            galois.push((a % exponent.max(1), perm));
        }
        g.contragredient = contra;
        g.galois = galois;
        Ok(g)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn params(&self) -> &[u64] {
        &self.params
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order + y]
    }

    pub fn inverse(&self, x: usize) -> usize {
        self.inverse[x]
    }

    pub fn element_order(&self, x: usize) -> u64 {
        self.element_orders[x]
    }

    pub fn power(&self, x: usize, k: u64) -> usize {
        let k = k % self.element_orders[x];
        (0..k).fold(0, |acc, _| self.mul(acc, x))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|x| (0..self.order).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    pub fn irreps(&self) -> &[IrreducibleRep] {
        &self.irreps
    }

    pub fn num_irreps(&self) -> usize {
        self.irreps.len()
    }

    /// Degrees χ(1) in catalog order.
    pub fn degrees(&self) -> Vec<usize> {
        self.irreps.iter().map(|r| r.degree).collect()
    }

    /// Conjugacy classes, ordered by their smallest label.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    /// Index of the contragredient χ̌ of the χ with index `chi`.
    pub fn contragredient_index(&self, chi: usize) -> usize {
        self.contragredient[chi]
    }

    /// Index of χ^{σ_a}, where χ^{σ_a}(g) = σ_a(χ(g)) = χ(g^a).
    pub fn galois_index(&self, a: u64, chi: usize) -> usize {
        let a = a % self.exponent;
        let a = if self.exponent == 1 { 0 } else { a };
        self.galois
            .iter()
            .find(|(b, _)| *b == a)
            .map(|(_, p)| p[chi])
            .expect("a must be a unit modulo the exponent")
    }

    /// Units a modulo the exponent, in increasing order.
    pub fn galois_units(&self) -> Vec<u64> {
        self.galois.iter().map(|(a, _)| *a).collect()
    }

    /// Verify ρ(gh) = ρ(g)ρ(h) for every irrep and every pair.
    pub fn verify_homomorphisms(&self) -> Result<()> {
        for (i, r) in self.irreps.iter().enumerate() {
            for x in 0..self.order {
                for y in 0..self.order {
                    if r.matrix(x).mul(r.matrix(y)) != *r.matrix(self.mul(x, y)) {
                        return internal(format!("{}: irrep {i} fails at ({x},{y})", self.name));
                    }
                }
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct GroupRecord {
    name: String,
    #[serde(default)]
    params: Vec<u64>,
}

impl Serialize for FiniteGroup {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GroupRecord {
            name: self.name.clone(),
            params: self.params.clone(),
        }
        .serialize(s)
    }
}

/// Deserialize a `{name, params}` record into a shared catalog group.
pub fn deserialize_group<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Group, D::Error> {
    let r = GroupRecord::deserialize(d)?;
    group_from_catalog(&r.name, &r.params).map_err(serde::de::Error::custom)
}

/// Parse a group given either as a bare name string or a `{name, params}` record.
pub fn group_from_json(v: &serde_json::Value) -> Result<Group> {
    match v {
        serde_json::Value::String(s) => group(s),
        _ => {
            let r: GroupRecord = serde_json::from_value(v.clone())
                .map_err(|e| crate::Error::Parse(e.to_string()))?;
            group_from_catalog(&r.name, &r.params)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_examples() {
        let c6 = group("C6").unwrap();
        assert_eq!((c6.order(), c6.is_abelian(), c6.exponent()), (6, true, 6));
        let s3 = group("S3").unwrap();
        assert_eq!((s3.order(), s3.is_abelian(), s3.exponent()), (6, false, 6));
        let q8 = group("Q8").unwrap();
        assert_eq!((q8.order(), q8.exponent()), (8, 4));
        assert!(group("NoSuchGroup").is_err());
        assert_eq!(group_from_catalog("C", &[6]).unwrap().name(), "C6");
    }

    #[test]
    fn degrees() {
        assert_eq!(group("S3").unwrap().degrees(), vec![1, 1, 2]);
        assert_eq!(group("Q8").unwrap().degrees(), vec![1, 1, 1, 1, 2]);
        assert_eq!(group("A4").unwrap().degrees(), vec![1, 1, 1, 3]);
        assert_eq!(group("S4").unwrap().degrees(), vec![1, 1, 2, 3, 3]);
        assert_eq!(group("D4").unwrap().degrees(), vec![1, 1, 1, 1, 2]);
        assert_eq!(group("D5").unwrap().degrees(), vec![1, 1, 2, 2]);
        let c2 = group("C2").unwrap();
        let chars: Vec<Vec<CycloNum>> = c2.irreps().iter().map(|r| r.character().to_vec()).collect();
        assert_eq!(chars[0], vec![CycloNum::one(), CycloNum::one()]);
        assert_eq!(chars[1], vec![CycloNum::one(), CycloNum::from_int(-1)]);
    }

    #[test]
    fn contragredients() {
        let c3 = group("C3").unwrap();
        assert_eq!(c3.contragredient_index(1), 2);
        let s3 = group("S3").unwrap();
        assert_eq!(s3.contragredient_index(2), 2);
        let r = &s3.irreps()[2];
        let rc = r.contragredient(&s3);
        assert_eq!(rc.character(), r.character());
        assert_eq!(rc.degree(), 2);
    }

    #[test]
    fn classes_ordered() {
        let s4 = group("S4").unwrap();
        assert_eq!(s4.classes().len(), 5);
        assert_eq!(s4.classes()[0], vec![0]);
        let q8 = group("Q8").unwrap();
        assert_eq!(q8.classes().len(), 5);
        assert_eq!(q8.classes()[1], vec![1]);
    }

    #[test]
    fn serde_record() {
        let g = group("S3xC2").unwrap();
        let s = serde_json::to_string(&*g).unwrap();
        assert_eq!(s, r#"{"name":"S3xC2","params":[2]}"#);
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(group_from_json(&v).unwrap().name(), "S3xC2");
    }
}
