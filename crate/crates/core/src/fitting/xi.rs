use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{adjoint_star, nrd, CentralElement, GroupAlgebraElement, GroupAlgebraMatrix};
use crate::arith::Rational;
use crate::error::Result;
use crate::groups::Group;

use super::lattice::CentralLattice;

/// Enumeration bounds for the budgeted approximations.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(default)]
pub struct Budget {
    /// Largest matrix size enumerated (1 or 2).
    pub max_size: usize,
    /// Coefficient height of enumerated 1×1 matrices.
    pub height: i64,
    /// Maximal support of enumerated 1×1 matrices.
    pub support: usize,
    /// Product-closure rounds for ξ.
    pub rounds: usize,
    /// Cap on the number of enumerated 2×2 matrices.
    pub max_candidates: usize,
    /// Add columns b_i + g·b_j to the Fitting replacement pool.
    pub pool_combinations: bool,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_size: 2,
            height: 1,
            support: 2,
            rounds: 4,
            max_candidates: 4096,
            pool_combinations: true,
        }
    }
}

/// 1×1 integral matrices of bounded height and support, in a fixed order:
/// the identity first, then by support size, positions and values.
pub(crate) fn small_elements(g: &Group, budget: &Budget) -> Vec<GroupAlgebraElement<Rational>> {
    let n = g.order();
    let h = budget.height.max(1);
    let values: Vec<i64> = (1..=h).flat_map(|v| [v, -v]).collect();
    let mut out = vec![GroupAlgebraElement::one(g)];
    fn rec(
        start: usize,
        left: usize,
        n: usize,
        cur: &mut Vec<usize>,
        acc: &mut Vec<Vec<usize>>,
    ) {
        if left == 0 {
            acc.push(cur.clone());
            return;
        }
        for p in start..n {
            cur.push(p);
            rec(p + 1, left - 1, n, cur, acc);
            cur.pop();
        }
    }
    for s in 1..=budget.support.min(n) {
        let mut supports = Vec::new();
        rec(0, s, n, &mut Vec::new(), &mut supports);
        for sup in supports {
            let mut idx = vec![0usize; s];
            loop {
                let mut coeffs = vec![Rational::zero(); n];
                for (k, &p) in sup.iter().enumerate() {
                    coeffs[p] = Rational::from(values[idx[k]]);
                }
                out.push(GroupAlgebraElement::new(g, coeffs).expect("length matches"));
                // odometer over value choices
                let mut k = 0;
                while k < s {
                    idx[k] += 1;
                    if idx[k] < values.len() {
                        break;
                    }
                    idx[k] = 0;
                    k += 1;
                }
                if k == s {
                    break;
                }
            }
        }
    }
    out
}

/// 2×2 matrices with entries in {0} ∪ G, lexicographic, capped.
pub(crate) fn small_matrices(g: &Group, budget: &Budget) -> Vec<GroupAlgebraMatrix<Rational>> {
    if budget.max_size < 2 {
        return Vec::new();
    }
    let n = g.order() + 1;
    let total = n.saturating_pow(4);
    let entry = |k: usize| {
        if k == 0 {
            GroupAlgebraElement::zero(g)
        } else {
            GroupAlgebraElement::basis(g, k - 1)
        }
    };
    (0..total.min(budget.max_candidates))
        .map(|code| {
            let ks = [code / (n * n * n), (code / (n * n)) % n, (code / n) % n, code % n];
            GroupAlgebraMatrix::new(g, 2, 2, ks.iter().map(|&k| entry(k)).collect())
                .expect("shape matches")
        })
        .collect()
}

fn one_by_one(x: &GroupAlgebraElement<Rational>) -> GroupAlgebraMatrix<Rational> {
    GroupAlgebraMatrix::new(x.group(), 1, 1, vec![x.clone()]).expect("1x1")
}

fn xi_compute(g: &Group, budget: &Budget) -> Result<CentralLattice> {
    if g.is_abelian() {
        let mut l = CentralLattice::center_of_group_ring(g);
        l.note("abelian: ξ(Z[G]) = Z[G]");
        l.set_flags(true, true);
        return Ok(l);
    }
    let mut seeds: Vec<GroupAlgebraMatrix<Rational>> =
        small_elements(g, budget).iter().map(one_by_one).collect();
    let n1 = seeds.len();
    seeds.extend(small_matrices(g, budget));
    let n2 = seeds.len() - n1;
    let values: Vec<CentralElement> = seeds
        .par_iter()
        .map(nrd)
        .collect::<Result<Vec<_>>>()?;
    let mut l = CentralLattice::zero(g);
    for v in &values {
        l.insert(v)?;
    }
    l.note(format!(
        "seeds: Nrd of {n1} 1x1 matrices (height {}, support {}) and {n2} 2x2 matrices over {{0}} ∪ G",
        budget.height, budget.support
    ));
    let mut stable = false;
    for round in 0..budget.rounds {
        let basis = l.basis();
        let mut grew = false;
        for (i, x) in basis.iter().enumerate() {
            for y in &basis[i..] {
                grew |= l.insert(&(x * y))?;
            }
        }
        if !grew {
            l.note(format!("product closure stable after {round} extra rounds"));
            stable = true;
            break;
        }
    }
    if !stable {
        l.note("product closure not stable within the round budget");
    }
    l.set_flags(stable, false);
    Ok(l)
}

/// Budgeted under-approximation of the Whitehead order ξ(Z[G]).
///
/// Every generator is the reduced norm of an integral matrix (products
/// are norms of block-diagonal matrices). Abelian groups give exactly Z[G].
/// Results are cached per group and budget.
pub fn xi_approx(g: &Group, budget: &Budget) -> Result<CentralLattice> {
    type Cache = Mutex<HashMap<(String, Budget), CentralLattice>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (g.name().to_string(), budget.clone());
    if let Some(l) = cache.lock().unwrap().get(&key) {
        return Ok(l.clone());
    }
    let l = xi_compute(g, budget)?;
    cache.lock().unwrap().insert(key, l.clone());
    Ok(l)
}

/// Outcome of a δ-membership test.
#[derive(Clone, Debug, PartialEq)]
pub enum DeltaVerdict {
    /// x is not an element of the centre.
    NotCentral,
    /// x·M* is not integral for this integral M.
    CertifiedNo { witness: GroupAlgebraMatrix<Rational> },
    /// Every enumerated M gave an integral x·M*.
    PassedBudget { checked: usize },
    /// Decided exactly (abelian groups, where δ = Z[G]).
    ExactYes,
}

fn times_star_integral(x: &GroupAlgebraElement<Rational>, m: &GroupAlgebraMatrix<Rational>) -> Result<bool> {
    let star = adjoint_star(m)?;
    Ok(star.entries().iter().all(|e| (x * e).is_integral()))
}

/// Test x ∈ δ(Z[G]) against enumerated integral matrices.
pub fn delta_check(x: &CentralElement, budget: &Budget) -> Result<DeltaVerdict> {
    let g = x.group();
    if !x.is_galois_consistent() {
        return Ok(DeltaVerdict::NotCentral);
    }
    let xe = x.to_group_algebra()?;
    let one = one_by_one(&GroupAlgebraElement::one(g));
    if g.is_abelian() {
        return Ok(if xe.is_integral() {
            DeltaVerdict::ExactYes
        } else {
            DeltaVerdict::CertifiedNo { witness: one }
        });
    }
    let mut candidates: Vec<GroupAlgebraMatrix<Rational>> =
        small_elements(g, budget).iter().map(one_by_one).collect();
    candidates.extend(small_matrices(g, budget));
    let checks: Vec<bool> = candidates
        .par_iter()
        .map(|m| times_star_integral(&xe, m))
        .collect::<Result<Vec<_>>>()?;
    match checks.iter().position(|ok| !ok) {
        Some(i) => Ok(DeltaVerdict::CertifiedNo {
            witness: candidates[i].clone(),
        }),
        None => Ok(DeltaVerdict::PassedBudget {
            checked: candidates.len(),
        }),
    }
}

/// δ-test for a group-algebra element: non-central input is rejected
/// before any enumeration.
pub fn delta_check_element(x: &GroupAlgebraElement<Rational>, budget: &Budget) -> Result<DeltaVerdict> {
    if !x.is_central() {
        return Ok(DeltaVerdict::NotCentral);
    }
    delta_check(&CentralElement::from_group_algebra(x)?, budget)
}
