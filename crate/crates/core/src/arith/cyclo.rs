//! Elements of the cyclotomic fields Q(ζ_n).
//!
//! A value is stored as an integer numerator polynomial of degree < φ(n)
//! in the power basis of ζ_n, over a positive common denominator. The
//! numerator is always reduced modulo Φ_n, so equality within one conductor
//! is a coefficient comparison. Values of different conductors are compared
//! and combined inside Q(ζ_lcm) using ζ_m = ζ_n^{n/m}.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::linalg::Matrix;
use super::poly::{cyclotomic_poly, rat_inverse_mod, totient};
use super::rational::Rational;
use crate::error::{arg, Error, Result};

/// Per-conductor data: Φ_n and its degree.
#[derive(Debug)]
struct FieldCtx {
    n: u64,
    phi: usize,
    modulus: Vec<BigInt>,
}

fn ctx(n: u64) -> Arc<FieldCtx> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<FieldCtx>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(c) = cache.read().unwrap().get(&n) {
        return c.clone();
    }
    let modulus = cyclotomic_poly(n);
    let c = Arc::new(FieldCtx {
        n,
        phi: totient(n) as usize,
        modulus,
    });
    cache.write().unwrap().entry(n).or_insert(c).clone()
}

impl FieldCtx {
    /// Reduce an integer polynomial of any length modulo Φ_n.
    fn reduce(&self, mut p: Vec<BigInt>) -> Vec<BigInt> {
        let phi = self.phi;
        if p.len() > phi {
            for k in (phi..p.len()).rev() {
                if p[k].is_zero() {
                    continue;
                }
                let c = std::mem::take(&mut p[k]);
                for i in 0..phi {
                    let m = &self.modulus[i];
                    if !m.is_zero() {
                        p[k - phi + i] -= &c * m;
                    }
                }
            }
        }
        p.resize(phi, BigInt::zero());
        p
    }
}

/// An element of Q(ζ_n).
#[derive(Clone)]
pub struct CycloNum {
    ctx: Arc<FieldCtx>,
    num: Vec<BigInt>,
    den: BigInt,
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm_u64(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

impl CycloNum {
    fn from_parts(ctx: Arc<FieldCtx>, num: Vec<BigInt>, den: BigInt) -> CycloNum {
        let num = ctx.reduce(num);
        let mut x = CycloNum { ctx, num, den };
        x.normalize();
        x
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -&self.den;
            for c in &mut self.num {
                *c = -&*c;
            }
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if self.num.iter().all(|c| c.is_zero()) {
            self.den = BigInt::one();
        } else if !g.is_one() {
            for c in &mut self.num {
                *c /= &g;
            }
            self.den /= &g;
        }
    }

    /// The element Σ coeffs[i]·ζ_n^i; requires exactly φ(n) coefficients.
    pub fn new(n: u64, coeffs: &[Rational]) -> Result<CycloNum> {
        if n == 0 {
            return arg("conductor must be positive");
        }
        let c = ctx(n);
        if coeffs.len() != c.phi {
            return arg(format!(
                "conductor {n} needs {} coefficients, got {}",
                c.phi,
                coeffs.len()
            ));
        }
        Ok(Self::from_coeffs_any(c, coeffs))
    }

    /// Like [`CycloNum::new`] but accepts any number of coefficients,
    /// reducing modulo Φ_n.
    pub fn from_poly(n: u64, coeffs: &[Rational]) -> CycloNum {
        Self::from_coeffs_any(ctx(n), coeffs)
    }

    fn from_coeffs_any(c: Arc<FieldCtx>, coeffs: &[Rational]) -> CycloNum {
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let num = coeffs
            .iter()
            .map(|q| q.numer() * (&den / q.denom()))
            .collect();
        Self::from_parts(c, num, den)
    }

    pub fn from_rational(q: &Rational) -> CycloNum {
        CycloNum {
            ctx: ctx(1),
            num: vec![q.numer().clone()],
            den: q.denom().clone(),
        }
    }

    pub fn from_int(k: i64) -> CycloNum {
        Self::from_rational(&Rational::from(k))
    }

    pub fn zero() -> CycloNum {
        Self::from_int(0)
    }

    pub fn one() -> CycloNum {
        Self::from_int(1)
    }

    /// ζ_n^k for any integer k.
    pub fn zeta(n: u64, k: i64) -> CycloNum {
        let c = ctx(n);
        let e = k.rem_euclid(n as i64) as usize;
        let mut p = vec![BigInt::zero(); e + 1];
        p[e] = BigInt::one();
        Self::from_parts(c, p, BigInt::one())
    }

    pub fn conductor(&self) -> u64 {
        self.ctx.n
    }

    /// Power-basis coordinates in the stored conductor.
    pub fn coeffs(&self) -> Vec<Rational> {
        self.num
            .iter()
            .map(|c| Rational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|q| q.is_one())
    }

    /// True when every power-basis coordinate is an integer, i.e. the
    /// element lies in Z[ζ_n].
    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    /// The rational value, if the element lies in Q.
    pub fn as_rational(&self) -> Option<Rational> {
        // 1 is a power-basis vector, so Q is exactly the first coordinate axis
        self.num[1..]
            .iter()
            .all(|c| c.is_zero())
            .then(|| Rational::new(self.num[0].clone(), self.den.clone()))
    }

    /// Re-express the element in Q(ζ_n) for a multiple n of the conductor.
    pub fn lift(&self, n: u64) -> Result<CycloNum> {
        let m = self.ctx.n;
        if n % m != 0 {
            return arg(format!("cannot lift conductor {m} to {n}"));
        }
        if n == m {
            return Ok(self.clone());
        }
        let step = (n / m) as usize;
        let mut p = vec![BigInt::zero(); (self.num.len() - 1) * step + 1];
        for (i, c) in self.num.iter().enumerate() {
            p[i * step] = c.clone();
        }
        Ok(Self::from_parts(ctx(n), p, self.den.clone()))
    }

    fn lifted(&self, n: u64) -> CycloNum {
        self.lift(n).expect("conductor divides target")
    }

    fn common(a: &CycloNum, b: &CycloNum) -> (CycloNum, CycloNum) {
        let n = lcm_u64(a.ctx.n, b.ctx.n);
        (a.lifted(n), b.lifted(n))
    }

    fn add_same(&self, o: &CycloNum, negate: bool) -> CycloNum {
        let num: Vec<BigInt> = if self.den == o.den {
            self.num
                .iter()
                .zip(&o.num)
                .map(|(a, b)| if negate { a - b } else { a + b })
                .collect()
        } else {
            self.num
                .iter()
                .zip(&o.num)
                .map(|(a, b)| {
                    let (x, y) = (a * &o.den, b * &self.den);
                    if negate {
                        x - y
                    } else {
                        x + y
                    }
                })
                .collect()
        };
        let den = if self.den == o.den {
            self.den.clone()
        } else {
            &self.den * &o.den
        };
        let mut r = CycloNum {
            ctx: self.ctx.clone(),
            num,
            den,
        };
        r.normalize();
        r
    }

    fn mul_same(&self, o: &CycloNum) -> CycloNum {
        let phi = self.ctx.phi;
        let mut p = vec![BigInt::zero(); 2 * phi - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.num.iter().enumerate() {
                if !b.is_zero() {
                    p[i + j] += a * b;
                }
            }
        }
        Self::from_parts(self.ctx.clone(), p, &self.den * &o.den)
    }

    fn binop(&self, o: &CycloNum, f: impl Fn(&CycloNum, &CycloNum) -> CycloNum) -> CycloNum {
        if Arc::ptr_eq(&self.ctx, &o.ctx) || self.ctx.n == o.ctx.n {
            f(self, o)
        } else if o.ctx.n == 1 || self.ctx.n % o.ctx.n == 0 {
            f(self, &o.lifted(self.ctx.n))
        } else if self.ctx.n == 1 || o.ctx.n % self.ctx.n == 0 {
            f(&self.lifted(o.ctx.n), o)
        } else {
            let (a, b) = Self::common(self, o);
            f(&a, &b)
        }
    }

    /// Multiplicative inverse by extended gcd against Φ_n.
    pub fn inverse(&self) -> Result<CycloNum> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let a: Vec<Rational> = self.num.iter().cloned().map(Rational::from).collect();
        let m: Vec<Rational> = self.ctx.modulus.iter().cloned().map(Rational::from).collect();
        let inv = rat_inverse_mod(&a, &m).ok_or(Error::DivisionByZero)?;
        let scaled: Vec<Rational> = inv
            .iter()
            .map(|q| q * &Rational::from(self.den.clone()))
            .collect();
        Ok(Self::from_coeffs_any(self.ctx.clone(), &scaled))
    }

    pub fn pow(&self, e: i64) -> Result<CycloNum> {
        let mut base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = CycloNum::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        Ok(acc)
    }

    /// σ_a(ζ_n) = ζ_n^a, for a coprime to the conductor.
    pub fn galois_apply(&self, a: i64) -> Result<CycloNum> {
        let n = self.ctx.n;
        let a = a.rem_euclid(n as i64) as u64;
        if gcd_u64(a, n) != 1 {
            return arg(format!("galois_apply: {a} is not a unit modulo {n}"));
        }
        Ok(self.galois_unchecked(a))
    }

    fn galois_unchecked(&self, a: u64) -> CycloNum {
        let n = self.ctx.n;
        if n <= 2 || a % n == 1 {
            return self.clone();
        }
        let mut p = vec![BigInt::zero(); n as usize];
        for (i, c) in self.num.iter().enumerate() {
            if !c.is_zero() {
                p[((i as u64 * a) % n) as usize] += c;
            }
        }
        Self::from_parts(self.ctx.clone(), p, self.den.clone())
    }

    /// σ_a for a coprime to some multiple N of the conductor: acts through a mod n.
    pub fn galois_mod(&self, a: u64, modulus: u64) -> Result<CycloNum> {
        if modulus % self.ctx.n != 0 {
            return arg(format!(
                "galois_mod: conductor {} does not divide {modulus}",
                self.ctx.n
            ));
        }
        if gcd_u64(a, modulus) != 1 {
            return arg(format!("galois_mod: {a} is not a unit modulo {modulus}"));
        }
        Ok(self.galois_unchecked(a % self.ctx.n))
    }

    /// Complex conjugation σ_{-1}.
    pub fn conj(&self) -> CycloNum {
        let n = self.ctx.n;
        self.galois_unchecked(n - 1)
    }

    /// Try to rewrite the element inside Q(ζ_m), m | conductor.
    ///
    /// If some σ_a with a ≡ 1 mod m moves the element, that `a` is
    /// returned as witness.
    pub fn descend(&self, m: u64) -> Descent {
        let n = self.ctx.n;
        assert!(m > 0 && n % m == 0, "descend: {m} must divide {n}");
        if m == n {
            return Descent::Element(self.clone());
        }
        for a in (1..n).filter(|&a| a % m == 1 % m && gcd_u64(a, n) == 1) {
            if a == 1 {
                continue;
            }
            if self.galois_unchecked(a) != *self {
                return Descent::Moved(a);
            }
        }
        // Fixed: solve for coordinates in the lifted basis of Q(ζ_m).
        let phi_m = totient(m) as usize;
        let cols: Vec<Vec<Rational>> = (0..phi_m)
            .map(|i| CycloNum::zeta(m, i as i64).lifted(n).coeffs())
            .collect();
        let a = Matrix::from_fn(self.ctx.phi, phi_m, |r, c| cols[c][r].clone());
        let x = a
            .solve(&self.coeffs())
            .expect("fixed element lies in the subfield");
        Descent::Element(CycloNum::from_coeffs_any(ctx(m), &x))
    }

    /// Rewrite the element in the smallest conductor dividing the stored one.
    pub fn minimize(&self) -> CycloNum {
        let n = self.ctx.n;
        for d in super::poly::divisors(n) {
            if d == n {
                break;
            }
            if let Descent::Element(y) = self.descend(d) {
                return y;
            }
        }
        self.clone()
    }

    /// Field trace down to Q.
    pub fn trace(&self) -> Rational {
        let n = self.ctx.n;
        let mut acc = CycloNum::zero();
        for a in (1..=n).filter(|&a| gcd_u64(a, n) == 1) {
            acc = &acc + &self.galois_unchecked(a);
        }
        acc.as_rational().expect("trace is rational")
    }
}

/// Outcome of [`CycloNum::descend`].
#[derive(Clone, Debug, PartialEq)]
pub enum Descent {
    Element(CycloNum),
    /// The automorphism index a with σ_a(x) ≠ x.
    Moved(u64),
}

impl PartialEq for CycloNum {
    fn eq(&self, o: &CycloNum) -> bool {
        if self.ctx.n == o.ctx.n {
            return self.den == o.den && self.num == o.num;
        }
        let (a, b) = CycloNum::common(self, o);
        a.den == b.den && a.num == b.num
    }
}

impl Eq for CycloNum {}

impl fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CycloNum {
    /// Human-readable form such as `(1 - 2*z12^3)/5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.ctx.n;
        let mut terms = Vec::new();
        for (i, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mon = match i {
                0 => String::new(),
                1 => format!("z{n}"),
                _ => format!("z{n}^{i}"),
            };
            let t = if mon.is_empty() {
                c.abs().to_string()
            } else if c.abs().is_one() {
                mon
            } else {
                format!("{}*{mon}", c.abs())
            };
            terms.push((c.is_negative(), t));
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        let mut s = String::new();
        for (k, (neg, t)) in terms.iter().enumerate() {
            match (k, neg) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            s.push_str(t);
        }
        if self.den.is_one() {
            write!(f, "{s}")
        } else if terms.len() == 1 {
            write!(f, "{s}/{}", self.den)
        } else {
            write!(f, "({s})/{}", self.den)
        }
    }
}

macro_rules! cyclo_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl<'a> $tr<&'a CycloNum> for &'a CycloNum {
            type Output = CycloNum;
            fn $m(self, o: &'a CycloNum) -> CycloNum {
                self.binop(o, $body)
            }
        }
        impl $tr for CycloNum {
            type Output = CycloNum;
            fn $m(self, o: CycloNum) -> CycloNum {
                (&self).$m(&o)
            }
        }
    };
}

cyclo_binop!(Add, add, |a, b| a.add_same(b, false));
cyclo_binop!(Sub, sub, |a, b| a.add_same(b, true));
cyclo_binop!(Mul, mul, |a, b| a.mul_same(b));

impl Neg for &CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        CycloNum {
            ctx: self.ctx.clone(),
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        -&self
    }
}

impl From<Rational> for CycloNum {
    fn from(q: Rational) -> Self {
        CycloNum::from_rational(&q)
    }
}

impl From<i64> for CycloNum {
    fn from(k: i64) -> Self {
        CycloNum::from_int(k)
    }
}

#[derive(Serialize, Deserialize)]
struct CycloRecord {
    n: u64,
    coeffs: Vec<Rational>,
}

impl Serialize for CycloNum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CycloRecord {
            n: self.ctx.n,
            coeffs: self.coeffs(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycloNum {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = CycloRecord::deserialize(d)?;
        CycloNum::new(r.n, &r.coeffs).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn make_and_basic_identities() {
        let x = CycloNum::new(1, &[q("3/2")]).unwrap();
        assert_eq!(x.as_rational(), Some(q("3/2")));
        let z4 = CycloNum::new(4, &[q("0"), q("1")]).unwrap();
        assert_eq!(&z4 * &z4, CycloNum::from_int(-1));
        let z5 = CycloNum::new(5, &[q("0"), q("1"), q("0"), q("0")]).unwrap();
        assert!(z5.pow(5).unwrap().is_one());
        assert!(CycloNum::new(5, &[q("1")]).is_err());
    }

    #[test]
    fn inverses() {
        assert_eq!(
            CycloNum::from_int(2).inverse().unwrap(),
            CycloNum::from_rational(&q("1/2"))
        );
        let a = CycloNum::new(4, &[q("1"), q("1")]).unwrap();
        let expect = CycloNum::new(4, &[q("1/2"), q("-1/2")]).unwrap();
        assert_eq!(a.inverse().unwrap(), expect);
        assert_eq!(CycloNum::zero().inverse(), Err(Error::DivisionByZero));
    }

    #[test]
    fn galois_examples() {
        let z4 = CycloNum::zeta(4, 1);
        assert_eq!(z4.galois_apply(1).unwrap(), z4);
        assert_eq!(z4.galois_apply(3).unwrap(), -&z4);
        let w = &CycloNum::zeta(8, 1) + &CycloNum::zeta(8, -1);
        assert_eq!(w.galois_apply(3).unwrap(), -&w);
        assert!(z4.galois_apply(2).is_err());
    }

    #[test]
    fn descend_examples() {
        let x = &CycloNum::zeta(4, 1) * &CycloNum::zeta(4, 1);
        assert_eq!(x.descend(1), Descent::Element(CycloNum::from_int(-1)));
        assert_eq!(CycloNum::zeta(8, 1).descend(4), Descent::Moved(5));
        let r = CycloNum::from_rational(&q("-7/3")).lifted(12);
        for m in [1, 2, 3, 4, 6, 12] {
            match r.descend(m) {
                Descent::Element(y) => assert_eq!(y.as_rational(), Some(q("-7/3"))),
                Descent::Moved(_) => panic!("rational moved"),
            }
        }
        // ζ_12^2 = ζ_6 descends to conductor 6 with coordinate vector (0, 1)
        match CycloNum::zeta(12, 2).descend(6) {
            Descent::Element(y) => {
                assert_eq!(y.conductor(), 6);
                assert_eq!(y.coeffs(), vec![q("0"), q("1")]);
            }
            Descent::Moved(a) => panic!("moved by {a}"),
        }
    }

    #[test]
    fn mixed_conductors() {
        // ζ_3 + ζ_4 lives in Q(ζ_12); subtracting ζ_4 recovers ζ_3
        let s = &CycloNum::zeta(3, 1) + &CycloNum::zeta(4, 1);
        assert_eq!(s.conductor(), 12);
        assert_eq!(&s - &CycloNum::zeta(4, 1), CycloNum::zeta(3, 1));
        assert_eq!(CycloNum::zeta(12, 4), CycloNum::zeta(3, 1));
        assert_eq!(CycloNum::zeta(2, 1), CycloNum::from_int(-1));
    }

    #[test]
    fn trace_and_display() {
        assert_eq!(CycloNum::zeta(5, 1).trace(), q("-1"));
        assert_eq!(CycloNum::zeta(12, 1).trace(), q("0"));
        let x = CycloNum::new(4, &[q("1/2"), q("-1/2")]).unwrap();
        assert_eq!(x.to_string(), "(1 - z4)/2");
    }

    #[test]
    fn serde_round_trip() {
        let x = CycloNum::new(3, &[q("1/2"), q("-2")]).unwrap();
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"n":3,"coeffs":["1/2","-2/1"]}"#);
        let back: CycloNum = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
    }
}
