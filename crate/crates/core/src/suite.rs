//! Seeded property suites over the algebra core.
//!
//! Every check runs a batch of independent cases; case `i` of check `c`
//! draws from its own counter-based stream, so reports are byte-identical
//! for a given seed regardless of scheduling. A failing check keeps the
//! smallest failing witness.

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{adjoint_star, nrd, CentralElement, GroupAlgebraElement, GroupAlgebraMatrix};
use crate::arith::{CycloNum, Matrix, Rational};
use crate::cyclotomic::{
    cyclotomic_unit, distribution_check_flipped, euler_family_check, admissible_pairs, AbelianFieldSpec,
};
use crate::detfun::{
    det_free, det_standard, koszul_sign, ses_iso, swap, swap_order_sign, tensor, ExactSequence,
};
use crate::error::{arg, Result};
use crate::exterior::{
    dual_basis, epsilon_m, epsilon_support, in_kernel_wedge, pair, theta_b, theta_b_bijective, theta_b_section,
    wedge_elements, wedge_homs, ExteriorElement,
};
use crate::fitting::{
    annihilation_check, delta_check, fit_classical_oracle, fit_matrix, xi_approx, Budget, CentralLattice,
    DeltaVerdict,
};
use crate::groups::{group, Group};
use crate::io::{central_json, element_json, group_json, lattice_json, matrix_json, to_value};
use crate::random::{self, case_rng, CaseRng};

pub const SUITES: &[&str] = &[
    "oracle",
    "nrd-props",
    "adjoint",
    "pairing",
    "epsilon",
    "theta",
    "detfun",
    "annihilation",
    "xi",
    "cyclo",
];

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    pub budget: Budget,
    /// Overrides the per-check case counts (the defaults are the full sizes).
    pub cases: Option<usize>,
}

impl SuiteConfig {
    pub fn new(seed: u64) -> SuiteConfig {
        SuiteConfig {
            seed,
            budget: Budget::default(),
            cases: None,
        }
    }

    fn count(&self, default: usize) -> usize {
        self.cases.unwrap_or(default)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub cases: usize,
    pub passed: usize,
    /// Smallest failing instance, with its case index.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<Value>,
}

impl CheckReport {
    pub fn pass(&self) -> bool {
        self.passed == self.cases
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub pass: bool,
    pub checks: Vec<CheckReport>,
}

/// Run one named suite, or every suite for `"all"`.
pub fn run(name: &str, cfg: &SuiteConfig) -> Result<Vec<SuiteReport>> {
    if name == "all" {
        return SUITES.iter().map(|s| run_one(s, cfg)).collect();
    }
    Ok(vec![run_one(name, cfg)?])
}

pub fn run_one(name: &str, cfg: &SuiteConfig) -> Result<SuiteReport> {
    let checks = match name {
        "oracle" => vec![oracle(cfg)?],
        "nrd-props" => vec![nrd_multiplicative(cfg)?, nrd_abelian_characters(cfg)?, nrd_transpose(cfg)?],
        "adjoint" => vec![adjoint(cfg)?],
        "pairing" => vec![pairing_gram(cfg)?, pairing_scaling(cfg)?, pairing_normalization(cfg)?],
        "epsilon" => vec![epsilon_pairing(cfg)?, epsilon_vanishing(cfg)?],
        "theta" => vec![theta_round_trip(cfg)?, theta_bijectivity()?],
        "detfun" => vec![detfun_swap(cfg)?, detfun_section_independence(cfg)?],
        "annihilation" => vec![annihilation(cfg)?],
        "xi" => xi_sanity(cfg)?,
        "cyclo" => cyclo()?,
        _ => return arg(format!("unknown suite {name:?}; expected one of {} or all", SUITES.join(", "))),
    };
    Ok(SuiteReport {
        suite: name.to_string(),
        seed: cfg.seed,
        pass: checks.iter().all(CheckReport::pass),
        checks,
    })
}

/// Outcome of one case: `None` on success, otherwise a witness.
type Case = Result<Option<Value>>;

fn stream_base(name: &str) -> u64 {
    // FNV-1a; the high bits separate checks, the low 32 bits index cases
    let h = name.bytes().fold(0xcbf29ce484222325u64, |h, b| (h ^ b as u64).wrapping_mul(0x100000001b3));
    h << 32
}

fn batch<F>(name: &str, cases: usize, seed: u64, f: F) -> Result<CheckReport>
where
    F: Fn(&mut CaseRng) -> Case + Sync,
{
    let base = stream_base(name);
    let outcomes: Vec<(usize, Option<Value>)> = (0..cases)
        .into_par_iter()
        .map(|i| {
            let mut rng = case_rng(seed, base | i as u64);
            let w = match f(&mut rng) {
                Ok(w) => w,
                Err(e) => Some(json!({"error": e.to_string()})),
            };
            (i, w)
        })
        .collect();
    let failures: Vec<(usize, Value)> = outcomes.into_iter().filter_map(|(i, w)| w.map(|w| (i, w))).collect();
    let failure = failures
        .iter()
        .min_by_key(|(i, w)| (w.to_string().len(), *i))
        .map(|(i, w)| json!({"case": i, "seed": seed, "check": name, "witness": w}));
    Ok(CheckReport {
        name: name.to_string(),
        cases,
        passed: cases - failures.len(),
        failure,
    })
}

fn single(name: &str, failures: Vec<Value>, cases: usize) -> CheckReport {
    CheckReport {
        name: name.to_string(),
        cases,
        passed: cases - failures.len().min(cases),
        failure: failures.into_iter().min_by_key(|w| w.to_string().len()),
    }
}

fn groups(names: &[&str]) -> Vec<Group> {
    names.iter().map(|n| group(n).expect("catalog group")).collect()
}

fn scalar_matrix(x: &CentralElement, n: usize) -> Result<GroupAlgebraMatrix<Rational>> {
    Ok(GroupAlgebraMatrix::scalar(x.group(), n, &x.to_group_algebra()?))
}

fn oracle(cfg: &SuiteConfig) -> Result<CheckReport> {
    let cyclic = groups(&["C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8"]);
    batch("oracle", cfg.count(200), cfg.seed, |rng| {
        let g = random::pick(rng, &cyclic).clone();
        let rows = rng.gen_range(1..=4);
        let cols = rng.gen_range(1..=rows);
        let a = rng.gen_range(0..=2);
        let m = random::matrix(rng, &g, rows, cols, 5);
        let fit = fit_matrix(&m, a, &cfg.budget)?;
        let oracle = fit_classical_oracle(&m, a)?;
        Ok((fit != oracle).then(|| {
            json!({"matrix": matrix_json(&m), "a": a, "fit": lattice_json(&fit), "oracle": lattice_json(&oracle)})
        }))
    })
}

const NRD_GROUPS: &[&str] = &["C6", "S3", "D4", "Q8", "A4"];

fn nrd_multiplicative(cfg: &SuiteConfig) -> Result<CheckReport> {
    let gs = groups(NRD_GROUPS);
    batch("nrd-multiplicative", cfg.count(500), cfg.seed, |rng| {
        let g = random::pick(rng, &gs).clone();
        let n = rng.gen_range(1..=2);
        let a = random::matrix(rng, &g, n, n, 3);
        let b = random::matrix(rng, &g, n, n, 3);
        let lhs = nrd(&a.mul(&b)?)?;
        let rhs = &nrd(&a)? * &nrd(&b)?;
        Ok((lhs != rhs).then(|| json!({"a": matrix_json(&a), "b": matrix_json(&b), "nrd_ab": central_json(&lhs)})))
    })
}

/// χ applied entrywise, then a classical determinant.
fn character_det(m: &GroupAlgebraMatrix<Rational>, chi: usize) -> CycloNum {
    let character = m.group().irreps()[chi].character();
    let eval = |x: &GroupAlgebraElement<Rational>| {
        x.coeffs()
            .iter()
            .zip(character)
            .fold(CycloNum::zero(), |acc, (c, v)| &acc + &(v * &CycloNum::from_rational(c)))
    };
    Matrix::from_fn(m.rows(), m.cols(), |i, j| eval(m.get(i, j))).det()
}

fn nrd_abelian_characters(cfg: &SuiteConfig) -> Result<CheckReport> {
    let gs = groups(&["C2", "C3", "C4", "C5", "C6", "C8", "C2xC2", "C2xC4"]);
    batch("nrd-abelian-characters", cfg.count(200), cfg.seed, |rng| {
        let g = random::pick(rng, &gs).clone();
        let n = rng.gen_range(1..=3);
        let m = random::matrix(rng, &g, n, n, 4);
        let v = nrd(&m)?;
        let bad = (0..g.num_irreps()).find(|&chi| v.value(chi) != &character_det(&m, chi));
        Ok(bad.map(|chi| json!({"matrix": matrix_json(&m), "chi": chi, "nrd": central_json(&v)})))
    })
}

fn nrd_transpose(cfg: &SuiteConfig) -> Result<CheckReport> {
    let gs = groups(&["S3", "D4", "Q8", "A4"]);
    batch("nrd-transpose", cfg.count(200), cfg.seed, |rng| {
        let g = random::pick(rng, &gs).clone();
        let n = rng.gen_range(1..=2);
        let m = random::matrix(rng, &g, n, n, 3);
        let lhs = nrd(&m.hash_transpose())?;
        let rhs = nrd(&m)?.hash();
        Ok((lhs != rhs).then(|| json!({"matrix": matrix_json(&m), "lhs": central_json(&lhs), "rhs": central_json(&rhs)})))
    })
}

fn adjoint(cfg: &SuiteConfig) -> Result<CheckReport> {
    let gs = groups(&["C1", "C2", "C3", "C4", "C6", "C2xC2", "S3", "D4", "Q8", "D5", "A4"]);
    batch("adjoint", cfg.count(200), cfg.seed, |rng| {
        let g = random::pick(rng, &gs).clone();
        let n = rng.gen_range(1..=3);
        let m = if rng.gen_bool(0.4) {
            random::singular_matrix(rng, &g, n, 3)
        } else {
            random::matrix(rng, &g, n, n, 3)
        };
        let star = adjoint_star(&m)?;
        let v = nrd(&m)?;
        let target = scalar_matrix(&v, n)?;
        let mut problems = Vec::new();
        if m.mul(&star)? != target {
            problems.push("M·M* ≠ Nrd(M)·I");
        }
        if star.mul(&m)? != target {
            problems.push("M*·M ≠ Nrd(M)·I");
        }
        for chi in 0..g.num_irreps() {
            if star.split(chi).is_zero() != v.value(chi).is_zero() {
                problems.push("component of M* vanishes exactly where Nrd(M) does: violated");
                break;
            }
        }
        let order = GroupAlgebraElement::scalar(&g, Rational::from(g.order() as i64));
        if !star.left_scale(&order).is_integral() {
            problems.push("|G|·M* is not integral");
        }
        Ok((!problems.is_empty()).then(|| json!({"matrix": matrix_json(&m), "problems": problems})))
    })
}

const PAIRING_GROUPS: &[&str] = &["C2", "C3", "C4", "C5", "C6", "C8", "C2xC2", "S3", "D4", "Q8", "D5", "A4", "D6"];

fn pairing_gram(cfg: &SuiteConfig) -> Result<CheckReport> {
    let gs = groups(PAIRING_GROUPS);
    batch("pairing-gram", cfg.count(300), cfg.seed, |rng| {
        let g = random::pick(rng, &gs).clone();
        // keep the split dimension k·χ(1) at most 6
        let dmax = *g.degrees().iter().max().unwrap();
        let kmax = (6 / dmax).clamp(1, 3);
        let k = rng.gen_range(1..=kmax);
        let r = rng.gen_range(1..=k);
        let ws = random::vectors(rng, &g, r, k, 2);
        let hs = random::vectors(rng, &g, r, k, 2);
        let p = pair(&wedge_homs(&g, k, &hs)?, &wedge_elements(&g, k, &ws)?)?;
        let gram = GroupAlgebraMatrix::from_fn(&g, r, r, |a, b| crate::exterior::apply_hom(&hs[b], &ws[a]));
        let want = nrd(&gram)?;
        let got = p.as_central();
        Ok((got.as_ref() != Some(&want)).then(|| {
            json!({
                "group": group_json(&g),
                "elements": ws.iter().map(|v| v.iter().map(element_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
                "homs": hs.iter().map(|v| v.iter().map(element_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
                "pairing": to_value(&p),
                "gram_nrd": central_json(&want),
            })
        }))
    })
}

fn pairing_scaling(cfg: &SuiteConfig) -> Result<CheckReport> {
    let gs = groups(&["S3", "D4", "Q8", "C6"]);
    batch("pairing-endomorphism-scaling", cfg.count(100), cfg.seed, |rng| {
        let g = random::pick(rng, &gs).clone();
        let k = rng.gen_range(1..=3);
        let phi = random::matrix(rng, &g, k, k, 2);
        let images: Vec<_> = (0..k).map(|i| phi.row(i)).collect();
        let lhs = wedge_elements(&g, k, &images)?;
        let rhs = ExteriorElement::top(&g, k).scale(&nrd(&phi)?)?;
        Ok((lhs != rhs).then(|| json!({"phi": matrix_json(&phi), "wedge": to_value(&lhs)})))
    })
}

fn pairing_normalization(cfg: &SuiteConfig) -> Result<CheckReport> {
    let gs = groups(&["C4", "S3", "D4", "Q8", "A4"]);
    batch("pairing-normalization", cfg.count(100), cfg.seed, |rng| {
        let g = random::pick(rng, &gs).clone();
        let k = rng.gen_range(1..=2);
        // a random basis: unimodular change of the standard one, or a
        // random matrix that happens to be invertible over Q
        let mut b = random::unimodular(rng, &g, k, 3);
        if rng.gen_bool(0.5) {
            let m = random::matrix(rng, &g, k, k, 2);
            if nrd(&m)?.is_nowhere_zero() {
                b = m;
            }
        }
        let basis: Vec<_> = (0..k).map(|i| b.row(i)).collect();
        let dual = dual_basis(&basis)?;
        let v = pair(&wedge_homs(&g, k, &dual)?, &wedge_elements(&g, k, &basis)?)?;
        Ok((v.as_central() != Some(CentralElement::one(&g))).then(|| json!({"basis": matrix_json(&b), "value": to_value(&v)})))
    })
}

const EPSILON_GROUPS: &[&str] = &["C6", "S3", "Q8"];

fn epsilon_pairing(cfg: &SuiteConfig) -> Result<CheckReport> {
    let gs = groups(EPSILON_GROUPS);
    batch("epsilon-pairing", cfg.count(100), cfg.seed, |rng| {
        let g = random::pick(rng, &gs).clone();
        let dp = rng.gen_range(2..=3);
        let d = rng.gen_range(1..dp);
        let m = random::matrix(rng, &g, dp, d, 2);
        let mp = random::matrix(rng, &g, dp, dp - d, 2);
        let e = epsilon_m(&m)?;
        let homs: Vec<_> = (0..dp - d).map(|j| mp.column(j)).collect();
        let v = pair(&wedge_homs(&g, dp, &homs)?, &e)?.as_central();
        let want = nrd(&mp.hcat(&m)?)?;
        Ok((v.as_ref() != Some(&want)).then(|| json!({"m": matrix_json(&m), "m_prime": matrix_json(&mp), "nrd": central_json(&want)})))
    })
}

fn epsilon_vanishing(cfg: &SuiteConfig) -> Result<CheckReport> {
    let gs = groups(EPSILON_GROUPS);
    batch("epsilon-vanishing", cfg.count(100), cfg.seed, |rng| {
        let g = random::pick(rng, &gs).clone();
        let dp = rng.gen_range(2..=3);
        let d = rng.gen_range(1..dp);
        let mut m = random::matrix(rng, &g, dp, d, 2);
        if rng.gen_bool(0.5) {
            // make some components rank-deficient
            let s = random::singular_matrix(rng, &g, d, 2);
            m = m.mul(&s)?;
        }
        let e = epsilon_m(&m)?;
        let support = epsilon_support(&m);
        let mismatch = (0..g.num_irreps()).find(|&chi| e.component_is_zero(chi) == support[chi]);
        let kernel = in_kernel_wedge(&e, &m)?;
        Ok((mismatch.is_some() || !kernel)
            .then(|| json!({"m": matrix_json(&m), "support": support, "in_kernel": kernel, "epsilon": to_value(&e)})))
    })
}

fn random_in_lattice(rng: &mut CaseRng, l: &CentralLattice) -> Result<CentralElement> {
    let mut x = CentralElement::zero(l.group());
    for b in l.basis() {
        let c = rng.gen_range(-2i64..=2);
        x = &x + &(&b * &CentralElement::constant(l.group(), &Rational::from(c)));
    }
    Ok(x)
}

fn theta_round_trip(cfg: &SuiteConfig) -> Result<CheckReport> {
    let gs = groups(&["C4", "C6", "S3", "D4", "Q8"]);
    let xis: Vec<CentralLattice> = gs.iter().map(|g| xi_approx(g, &cfg.budget)).collect::<Result<_>>()?;
    batch("theta-round-trip", cfg.count(100), cfg.seed, |rng| {
        let i = rng.gen_range(0..gs.len());
        let g = &gs[i];
        let d = rng.gen_range(1..=3);
        let r = rng.gen_range(1..=d);
        let n = crate::arith::binomial(d, r);
        let coords = (0..n).map(|_| random_in_lattice(rng, &xis[i])).collect::<Result<Vec<_>>>()?;
        let x = theta_b_section(g, d, r, &coords)?;
        let back = theta_b(&x)?;
        Ok((back != coords).then(|| {
            json!({
                "group": group_json(g), "d": d, "r": r,
                "coords": coords.iter().map(central_json).collect::<Vec<_>>(),
            })
        }))
    })
}

fn theta_bijectivity() -> Result<CheckReport> {
    let gs = groups(&["C1", "C2", "C3", "C4", "C6", "C2xC2", "S3", "D4", "Q8", "D5", "A4", "D6", "S4"]);
    let mut failures = Vec::new();
    let mut cases = 0;
    for g in &gs {
        for d in 1..=3 {
            for r in 1..=d {
                cases += 1;
                let want = g.is_abelian() || r == d;
                if theta_b_bijective(g, d, r) != want {
                    failures.push(json!({"group": group_json(g), "d": d, "r": r, "expected": want}));
                }
            }
        }
    }
    Ok(single("theta-bijectivity", failures, cases))
}

/// A random split sequence A^{r1} → A^{r1+r3} → A^{r3} from a unimodular
/// change of basis U: θ and σ are row blocks of U, φ a column block of U⁻¹.
fn random_sequence(rng: &mut CaseRng, g: &Group) -> Result<ExactSequence> {
    let r1 = rng.gen_range(1..=2);
    let r3 = rng.gen_range(1..=2);
    let n = r1 + r3;
    let u = random::unimodular(rng, g, n, 4);
    let uinv = crate::algebra::inverse(&u)?.expect("unimodular");
    let theta = u.select_rows(&(0..r1).collect::<Vec<_>>());
    let section = u.select_rows(&(r1..n).collect::<Vec<_>>());
    let phi = uinv.select_cols(&(r1..n).collect::<Vec<_>>());
    ExactSequence::new(theta, phi, section)
}

const DETFUN_GROUPS: &[&str] = &["C2", "C3", "S3", "D4", "Q8"];

fn detfun_swap(cfg: &SuiteConfig) -> Result<CheckReport> {
    let gs = groups(DETFUN_GROUPS);
    batch("detfun-swap-signs", cfg.count(100), cfg.seed, |rng| {
        let g = random::pick(rng, &gs).clone();
        let seq = random_sequence(rng, &g)?;
        let (r1, _, r3) = seq.ranks();
        let mut problems = Vec::new();
        // the ses order-swap square
        let (sign, commutes) = swap_order_sign(&seq)?;
        if !commutes {
            problems.push("ses order-swap square does not commute");
        }
        let expected: Vec<CycloNum> = g
            .degrees()
            .iter()
            .map(|&n| CycloNum::from_int(if (r1 * n * r3 * n) % 2 == 0 { 1 } else { -1 }))
            .collect();
        if sign != CentralElement::from_values(&g, expected)? {
            problems.push("ses order-swap sign is not (−1)^{ρ1·ρ3}");
        }
        // the swap isomorphism on two free lines, one with a non-standard basis
        let x = det_free("X", &seq.assembled()?)?;
        let y = det_standard(&g, "Y", r3)?;
        let (img, s) = swap(&x, &y)?;
        if s != koszul_sign(&g, &x.grading(), &y.grading()) || img != tensor(&y, &x)?.scale(&s) {
            problems.push("swap does not carry the Koszul sign");
        }
        let (back, s2) = swap(&y, &x)?;
        if back.scale(&s) != tensor(&x, &y)?.scale(&(&s * &s2)) || &s * &s2 != CentralElement::one(&g) {
            problems.push("swap is not an involution");
        }
        Ok((!problems.is_empty()).then(|| {
            json!({"group": group_json(&g), "theta": matrix_json(&seq.theta), "section": matrix_json(&seq.section), "problems": problems})
        }))
    })
}

fn detfun_section_independence(cfg: &SuiteConfig) -> Result<CheckReport> {
    let gs = groups(DETFUN_GROUPS);
    batch("detfun-section-independence", cfg.count(100), cfg.seed, |rng| {
        let g = random::pick(rng, &gs).clone();
        let seq = random_sequence(rng, &g)?;
        let (r1, _, r3) = seq.ranks();
        let shift = random::matrix(rng, &g, r3, r1, 2);
        let other = ExactSequence::new(
            seq.theta.clone(),
            seq.phi.clone(),
            seq.section.add(&shift.mul(&seq.theta)?)?,
        )?;
        let a = ses_iso(&seq, ("P1", "P3"))?;
        let b = ses_iso(&other, ("P1", "P3"))?;
        Ok((a.image != b.image).then(|| {
            json!({"theta": matrix_json(&seq.theta), "sections": [matrix_json(&seq.section), matrix_json(&other.section)]})
        }))
    })
}

fn annihilation(cfg: &SuiteConfig) -> Result<CheckReport> {
    let gs = groups(&["C4", "S3", "D4"]);
    let mut certified = Vec::new();
    for g in &gs {
        let x = CentralElement::constant(g, &Rational::from(g.order() as i64));
        let ok = matches!(delta_check(&x, &cfg.budget)?, DeltaVerdict::ExactYes | DeltaVerdict::PassedBudget { .. });
        certified.push((x, ok));
    }
    batch("annihilation", cfg.count(100), cfg.seed, |rng| {
        let i = rng.gen_range(0..gs.len());
        let g = &gs[i];
        let (x, ok) = &certified[i];
        if !ok {
            return Ok(Some(json!({"group": group_json(g), "problem": "|G| failed the δ check"})));
        }
        let n = rng.gen_range(1..=2);
        let m = loop {
            let m = random::matrix(rng, g, n, n, 3);
            if nrd(&m)?.is_nowhere_zero() {
                break m;
            }
        };
        let report = annihilation_check(&m, x)?;
        Ok((!report.annihilates).then(|| {
            json!({
                "matrix": matrix_json(&m),
                "x": central_json(x),
                "cokernel": report.cokernel.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            })
        }))
    })
}

fn xi_sanity(cfg: &SuiteConfig) -> Result<Vec<CheckReport>> {
    let abelian = groups(&["C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C2xC2", "C2xC4"]);
    let mut failures = Vec::new();
    for g in &abelian {
        let xi = xi_approx(g, &cfg.budget)?;
        if xi != CentralLattice::center_of_group_ring(g) || !xi.is_exact() {
            failures.push(json!({"group": group_json(g), "xi": lattice_json(&xi)}));
        }
    }
    let abelian_check = single("xi-abelian-exact", failures, abelian.len());

    let q8 = group("Q8")?;
    let xi = xi_approx(&q8, &cfg.budget)?;
    let derived = CentralElement::from_values(&q8, [2, 0, 2, 0, 2].iter().map(|&k| CycloNum::from_int(k)).collect())?;
    let mut failures = Vec::new();
    if !xi.contains(&derived, None) || !xi.is_stable() {
        failures.push(json!({"xi": lattice_json(&xi), "derived": central_json(&derived)}));
    }
    let q8_check = single("xi-q8-derived-generator", failures, 1);

    let nonabelian = groups(&["S3", "D4", "Q8", "D5", "A4", "D6", "S4"]);
    let mut failures = Vec::new();
    for g in &nonabelian {
        let xi = xi_approx(g, &cfg.budget)?;
        if let Some(b) = xi.basis().iter().find(|b| !b.is_galois_consistent() || !b.is_integral()) {
            failures.push(json!({"group": group_json(g), "generator": central_json(b)}));
        }
        if !CentralLattice::center_of_group_ring(g).is_sublattice_of(&xi) {
            failures.push(json!({"group": group_json(g), "problem": "ζ(Z[G]) not contained"}));
        }
    }
    let gens_check = single("xi-generators-consistent", failures, nonabelian.len());
    Ok(vec![abelian_check, q8_check, gens_check])
}

fn cyclo() -> Result<Vec<CheckReport>> {
    let rows = euler_family_check(30, 13)?;
    let failures: Vec<Value> = rows.iter().filter(|r| !r.pass).map(to_value).collect();
    let family = single("cyclo-distribution", failures, rows.len());

    let pairs = admissible_pairs(30, 13);
    let mut flipped_fail = 0;
    for &(f, ell) in &pairs {
        if !distribution_check_flipped(f, ell)?.pass {
            flipped_fail += 1;
        }
    }
    let guard_failures = if flipped_fail == 0 {
        vec![json!({"problem": "flipped convention passes on every pair"})]
    } else {
        vec![]
    };
    let guard = single("cyclo-flipped-guard", guard_failures, 1);

    let mut failures = Vec::new();
    let mut cases = 0;
    for p in [2u64, 3, 5, 7, 11, 13] {
        cases += 1;
        let u = cyclotomic_unit(&AbelianFieldSpec::rationals(p)?)?;
        if u != CycloNum::from_int(p as i64) {
            failures.push(json!({"f": p, "unit": to_value(&u)}));
        }
    }
    cases += 1;
    let u12 = cyclotomic_unit(&AbelianFieldSpec::rationals(12)?)?;
    if !u12.is_one() {
        failures.push(json!({"f": 12, "unit": to_value(&u12)}));
    }
    let units = single("cyclo-units-to-q", failures, cases);
    Ok(vec![family, guard, units])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_runs_pass_and_are_deterministic() {
        let cfg = SuiteConfig {
            cases: Some(3),
            ..SuiteConfig::new(7)
        };
        for name in ["oracle", "pairing", "detfun"] {
            let a = run_one(name, &cfg).unwrap();
            assert!(a.pass, "{name}: {}", serde_json::to_string(&a).unwrap());
            let b = run_one(name, &cfg).unwrap();
            assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
        }
        assert!(run_one("nope", &cfg).is_err());
    }
}
