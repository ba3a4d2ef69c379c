//! Cyclotomic units and the norm distribution relation of the rank-one
//! cyclotomic Euler system.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::cyclo::gcd_u64;
use crate::arith::CycloNum;
use crate::error::{arg, internal, Result};

/// The subfield of Q(ζ_f) fixed by a subgroup H of (Z/f)^×.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianFieldSpec {
    conductor: u64,
    subgroup: BTreeSet<u64>,
}

/// Representatives 1 ≤ a < f of (Z/f)^× (just [1] for f = 1).
pub fn units_mod(f: u64) -> Vec<u64> {
    if f <= 1 {
        return vec![1];
    }
    (1..f).filter(|&a| gcd_u64(a, f) == 1).collect()
}

impl AbelianFieldSpec {
    /// Checks that H consists of units and is closed under multiplication.
    pub fn new(f: u64, h: &[u64]) -> Result<AbelianFieldSpec> {
        if f < 2 {
            return arg(format!("conductor must be at least 2, got {f}"));
        }
        let mut subgroup: BTreeSet<u64> = h.iter().map(|a| a % f).collect();
        subgroup.insert(1);
        if let Some(a) = subgroup.iter().find(|&&a| gcd_u64(a, f) != 1) {
            return arg(format!("{a} is not a unit modulo {f}"));
        }
        for &a in &subgroup {
            for &b in &subgroup {
                if !subgroup.contains(&(a * b % f)) {
                    return arg(format!("H is not closed: {a}·{b} ≡ {} mod {f}", a * b % f));
                }
            }
        }
        Ok(AbelianFieldSpec { conductor: f, subgroup })
    }

    /// Q(ζ_f) itself.
    pub fn full_field(f: u64) -> Result<AbelianFieldSpec> {
        Self::new(f, &[])
    }

    /// Q, as the fixed field of all of (Z/f)^×.
    pub fn rationals(f: u64) -> Result<AbelianFieldSpec> {
        Self::new(f, &units_mod(f))
    }

    /// The maximal real subfield Q(ζ_f)^+.
    pub fn real_subfield(f: u64) -> Result<AbelianFieldSpec> {
        Self::new(f, &[f - 1])
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn subgroup(&self) -> Vec<u64> {
        self.subgroup.iter().copied().collect()
    }

    pub fn is_totally_real(&self) -> bool {
        self.subgroup.contains(&(self.conductor - 1))
    }

    /// [F : Q] = φ(f)/|H|.
    pub fn degree(&self) -> usize {
        units_mod(self.conductor).len() / self.subgroup.len()
    }
}

/// ε_F = Norm_{Q(ζ_f)/F}(1 − ζ_f) = ∏_{h∈H} (1 − ζ_f^h), checked to be
/// fixed by H.
pub fn cyclotomic_unit(spec: &AbelianFieldSpec) -> Result<CycloNum> {
    let f = spec.conductor;
    let one = CycloNum::one();
    let x = spec
        .subgroup
        .iter()
        .fold(CycloNum::one(), |acc, &h| &acc * &(&one - &CycloNum::zeta(f, h as i64)));
    for &h in &spec.subgroup {
        if x.galois_mod(h, f)? != x {
            return internal(format!("norm to the fixed field of H is moved by σ_{h}"));
        }
    }
    Ok(x)
}

/// Norm from Q(ζ_n) to Q(ζ_m), m | n: the product of σ_a(x) over
/// a ∈ (Z/n)^× with a ≡ 1 mod m.
pub fn relative_norm(x: &CycloNum, n: u64, m: u64) -> Result<CycloNum> {
    if m == 0 || n % m != 0 {
        return arg(format!("{m} does not divide {n}"));
    }
    let lifted = x.lift(n)?;
    let mut acc = CycloNum::one();
    for a in units_mod(n) {
        if a % m == 1 % m {
            acc = &acc * &lifted.galois_mod(a, n)?;
        }
    }
    Ok(acc.minimize())
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

fn inverse_mod(a: u64, m: u64) -> u64 {
    (1..m.max(2)).find(|&x| (a * x) % m == 1 % m).unwrap_or(0)
}

/// One row of a distribution-relation table.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DistributionRow {
    pub f: u64,
    pub ell: u64,
    pub lhs: CycloNum,
    pub rhs: CycloNum,
    pub pass: bool,
}

fn distribution(f: u64, ell: u64, flipped: bool) -> Result<DistributionRow> {
    if f < 2 {
        return arg(format!("conductor must be at least 2, got {f}"));
    }
    if !is_prime(ell) {
        return arg(format!("{ell} is not prime"));
    }
    if f % ell == 0 {
        return arg(format!("{ell} divides {f}: a different relation applies"));
    }
    let one = CycloNum::one();
    let lhs = relative_norm(&(&one - &CycloNum::zeta(f * ell, 1)), f * ell, f)?;
    let e = if flipped { ell % f } else { inverse_mod(ell % f, f) };
    let num = &one - &CycloNum::zeta(f, 1);
    let den = &one - &CycloNum::zeta(f, e as i64);
    let rhs = &num * &den.inverse()?;
    let pass = lhs == rhs;
    Ok(DistributionRow { f, ell, lhs, rhs, pass })
}

/// Norm_{Q(ζ_fℓ)/Q(ζ_f)}(1 − ζ_fℓ) against (1 − ζ_f)^{1 − σ_ℓ^{-1}}.
pub fn distribution_check(f: u64, ell: u64) -> Result<DistributionRow> {
    distribution(f, ell, false)
}

/// The same relation with σ_ℓ in place of σ_ℓ^{-1}; used as an
/// orientation guard.
pub fn distribution_check_flipped(f: u64, ell: u64) -> Result<DistributionRow> {
    distribution(f, ell, true)
}

/// Every admissible pair 2 ≤ f ≤ fmax, prime ℓ ≤ ℓmax, ℓ ∤ f, ordered by (f, ℓ).
pub fn admissible_pairs(fmax: u64, ellmax: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for f in 2..=fmax {
        for ell in (2..=ellmax).filter(|&l| is_prime(l) && f % l != 0) {
            out.push((f, ell));
        }
    }
    out
}

pub fn euler_family_check(fmax: u64, ellmax: u64) -> Result<Vec<DistributionRow>> {
    admissible_pairs(fmax, ellmax)
        .par_iter()
        .map(|&(f, ell)| distribution_check(f, ell))
        .collect()
}
