//! Multiplication tables and hardcoded irreducible models for the catalog.

use crate::arith::{CycloNum, Matrix};
use crate::error::{arg, Result};

pub(crate) type RepMatrices = Vec<Matrix<CycloNum>>;

/// A catalog group before character data is attached.
pub(crate) struct RawGroup {
    pub order: usize,
    pub table: Vec<usize>,
    pub irreps: Vec<RepMatrices>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Base {
    Cyclic(u64),
    Dihedral(u64),
    S3,
    Q8,
    A4,
    S4,
}

/// Parsed catalog name: a base group times zero or more cyclic factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Spec {
    pub base: Base,
    pub factors: Vec<u64>,
}

impl Spec {
    pub fn parse(name: &str) -> Result<Spec> {
        let cleaned = name.trim().replace('×', "x");
        let mut parts = cleaned.split(['x', 'X']);
        let first = parts.next().unwrap_or("");
        let base = parse_base(first).ok_or_else(|| unknown(name))?;
        let factors = parts
            .map(|p| match parse_base(p) {
                Some(Base::Cyclic(m)) => Ok(m),
                _ => Err(unknown(name)),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Spec { base, factors })
    }

    pub fn canonical_name(&self) -> String {
        let mut s = match self.base {
            Base::Cyclic(n) => format!("C{n}"),
            Base::Dihedral(n) => format!("D{n}"),
            Base::S3 => "S3".into(),
            Base::Q8 => "Q8".into(),
            Base::A4 => "A4".into(),
            Base::S4 => "S4".into(),
        };
        for m in &self.factors {
            s.push_str(&format!("xC{m}"));
        }
        s
    }

    pub fn params(&self) -> Vec<u64> {
        let mut p = match self.base {
            Base::Cyclic(n) | Base::Dihedral(n) => vec![n],
            _ => vec![],
        };
        p.extend(&self.factors);
        p
    }

    pub fn build(&self) -> RawGroup {
        let mut g = match self.base {
            Base::Cyclic(n) => cyclic(n as usize),
            Base::Dihedral(n) => dihedral(n as usize),
            Base::S3 => dihedral(3),
            Base::Q8 => quaternion(),
            Base::A4 => alternating4(),
            Base::S4 => symmetric4(),
        };
        for &m in &self.factors {
            g = times_cyclic(&g, m as usize);
        }
        g
    }
}

fn unknown(name: &str) -> crate::Error {
    crate::Error::Argument(format!(
        "unknown group {name:?}; expected Cn, Dn, S3, S4, A4, Q8, optionally times cyclic factors (e.g. C2xC3)"
    ))
}

const MAX_PARAM: u64 = 64;

fn parse_base(s: &str) -> Option<Base> {
    match s {
        "S3" => return Some(Base::S3),
        "S4" => return Some(Base::S4),
        "A4" => return Some(Base::A4),
        "Q8" => return Some(Base::Q8),
        _ => {}
    }
    let (head, tail) = s.split_at(s.find(|c: char| c.is_ascii_digit())?);
    let n: u64 = tail.parse().ok()?;
    if n == 0 || n > MAX_PARAM {
        return None;
    }
    match head {
        "C" => Some(Base::Cyclic(n)),
        "D" => Some(Base::Dihedral(n)),
        _ => None,
    }
}

/// Validate a `(name, params)` pair where the name may be a bare family letter.
pub(crate) fn spec_from_parts(name: &str, params: &[u64]) -> Result<Spec> {
    let full = match (name, params) {
        ("C" | "D", [n]) => format!("{name}{n}"),
        ("CxC", [n, m]) => format!("C{n}xC{m}"),
        (_, []) => name.to_string(),
        _ => {
            let spec = Spec::parse(name)?;
            if spec.params() != params {
                return arg(format!("parameters {params:?} do not match group {name:?}"));
            }
            return Ok(spec);
        }
    };
    Spec::parse(&full)
}

fn mat(rows: Vec<Vec<CycloNum>>) -> Matrix<CycloNum> {
    Matrix::from_rows(rows)
}

fn scalar(x: CycloNum) -> Matrix<CycloNum> {
    mat(vec![vec![x]])
}

fn int_mat(rows: &[Vec<i64>]) -> Matrix<CycloNum> {
    mat(rows
        .iter()
        .map(|r| r.iter().map(|&x| CycloNum::from_int(x)).collect())
        .collect())
}

fn cyclic(n: usize) -> RawGroup {
    let table = (0..n * n).map(|k| (k / n + k % n) % n).collect();
    let irreps = (0..n)
        .map(|j| {
            (0..n)
                .map(|k| scalar(CycloNum::zeta(n as u64, (j * k) as i64)))
                .collect()
        })
        .collect();
    RawGroup {
        order: n,
        table,
        irreps,
    }
}

/// Labels k + n·ε stand for r^k s^ε.
fn dihedral(n: usize) -> RawGroup {
    let order = 2 * n;
    let mut table = vec![0; order * order];
    for x in 0..order {
        for y in 0..order {
            let (a, e) = (x % n, x / n);
            let (b, f) = (y % n, y / n);
            let k = if e == 0 { a + b } else { a + n - b } % n;
            table[x * order + y] = k + n * ((e + f) % 2);
        }
    }
    let sign = |x: usize, use_r: bool, use_s: bool| -> i64 {
        let (k, e) = (x % n, x / n);
        let mut p = 0;
        if use_r {
            p += k;
        }
        if use_s {
            p += e;
        }
        if p % 2 == 0 {
            1
        } else {
            -1
        }
    };
    let mut linear: Vec<(bool, bool)> = vec![(false, false), (false, true)];
    if n % 2 == 0 {
        linear.push((true, false));
        linear.push((true, true));
    }
    let mut irreps: Vec<RepMatrices> = linear
        .into_iter()
        .map(|(r, s)| {
            (0..order)
                .map(|x| scalar(CycloNum::from_int(sign(x, r, s))))
                .collect()
        })
        .collect();
    for j in 1..=(n.saturating_sub(1) / 2) {
        let rep = (0..order)
            .map(|x| {
                let (k, e) = (x % n, x / n);
                let z = CycloNum::zeta(n as u64, (j * k) as i64);
                let zi = CycloNum::zeta(n as u64, -((j * k) as i64));
                let zero = CycloNum::zero();
                if e == 0 {
                    mat(vec![vec![z, zero.clone()], vec![zero, zi]])
                } else {
                    // diag(z, z⁻¹) · antidiag(1, 1)
                    mat(vec![vec![zero.clone(), z], vec![zi, zero]])
                }
            })
            .collect();
        irreps.push(rep);
    }
    RawGroup {
        order,
        table,
        irreps,
    }
}

/// Labels: 0:1, 1:−1, 2:i, 3:−i, 4:j, 5:−j, 6:k, 7:−k.
fn quaternion() -> RawGroup {
    // unit products among 1, i, j, k as (sign, unit)
    const UNIT: [[(bool, usize); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    let mut table = vec![0; 64];
    for x in 0..8 {
        for y in 0..8 {
            let (ux, sx) = (x / 2, x % 2 == 1);
            let (uy, sy) = (y / 2, y % 2 == 1);
            let (s, u) = UNIT[ux][uy];
            table[x * 8 + y] = 2 * u + ((s ^ sx ^ sy) as usize);
        }
    }
    let linear = [(1, 1), (-1, 1), (1, -1), (-1, -1)];
    let mut irreps: Vec<RepMatrices> = linear
        .iter()
        .map(|&(a, b)| {
            (0..8)
                .map(|x| {
                    let v = match x / 2 {
                        0 => 1,
                        1 => a,
                        2 => b,
                        _ => a * b,
                    };
                    scalar(CycloNum::from_int(v))
                })
                .collect()
        })
        .collect();
    let i = CycloNum::zeta(4, 1);
    let (o, z) = (CycloNum::one(), CycloNum::zero());
    let units = [
        mat(vec![vec![o.clone(), z.clone()], vec![z.clone(), o.clone()]]),
        mat(vec![vec![i.clone(), z.clone()], vec![z.clone(), -&i]]),
        mat(vec![vec![z.clone(), o.clone()], vec![-&o, z.clone()]]),
        mat(vec![vec![z.clone(), i.clone()], vec![i.clone(), z]]),
    ];
    irreps.push(
        (0..8)
            .map(|x| {
                let m = &units[x / 2];
                if x % 2 == 1 {
                    m.scale(&CycloNum::from_int(-1))
                } else {
                    m.clone()
                }
            })
            .collect(),
    );
    RawGroup {
        order: 8,
        table,
        irreps,
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 0..n {
        for rest in permutations(n - 1) {
            let mut p = vec![first];
            p.extend(rest.into_iter().map(|x| if x >= first { x + 1 } else { x }));
            out.push(p);
        }
    }
    out
}

fn parity(p: &[usize]) -> i64 {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// (g∘h)(x) = g(h(x)).
fn perm_table(perms: &[Vec<usize>]) -> Vec<usize> {
    let n = perms.len();
    let mut table = vec![0; n * n];
    for (a, g) in perms.iter().enumerate() {
        for (b, h) in perms.iter().enumerate() {
            let c: Vec<usize> = h.iter().map(|&x| g[x]).collect();
            table[a * n + b] = perms.iter().position(|p| *p == c).unwrap();
        }
    }
    table
}

/// Permutation action on the sum-zero lattice of Z^m, basis e_i − e_{m−1}.
fn sum_zero_model(p: &[usize]) -> Matrix<CycloNum> {
    let m = p.len();
    let last = m - 1;
    let mut rows = vec![vec![0i64; last]; last];
    for i in 0..last {
        // image of e_i − e_last is e_{p(i)} − e_{p(last)}
        if p[i] != last {
            rows[p[i]][i] += 1;
        }
        if p[last] != last {
            rows[p[last]][i] -= 1;
        }
    }
    int_mat(&rows)
}

fn alternating4() -> RawGroup {
    let perms: Vec<Vec<usize>> = permutations(4).into_iter().filter(|p| parity(p) == 1).collect();
    let table = perm_table(&perms);
    // A4 → A4/V4 ≅ C3 via the 3-cycle c = (0 1 2)
    let is_v4 = |p: &[usize]| p.iter().enumerate().all(|(i, &x)| x == i) || (0..4).all(|i| p[i] != i);
    let compose = |g: &[usize], h: &[usize]| -> Vec<usize> { h.iter().map(|&x| g[x]).collect() };
    let c_inv = vec![2, 0, 1, 3];
    let quotient: Vec<usize> = perms
        .iter()
        .map(|g| {
            let mut h = g.clone();
            for k in 0..3 {
                if is_v4(&h) {
                    return k;
                }
                h = compose(&h, &c_inv);
            }
            unreachable!("coset of V4 not found")
        })
        .collect();
    let mut irreps: Vec<RepMatrices> = (0..3)
        .map(|j| {
            quotient
                .iter()
                .map(|&k| scalar(CycloNum::zeta(3, (j * k) as i64)))
                .collect()
        })
        .collect();
    irreps.push(perms.iter().map(|p| sum_zero_model(p)).collect());
    RawGroup {
        order: 12,
        table,
        irreps,
    }
}

fn symmetric4() -> RawGroup {
    let perms = permutations(4);
    let table = perm_table(&perms);
    let pairings: [[usize; 4]; 3] = [[0, 1, 2, 3], [0, 2, 1, 3], [0, 3, 1, 2]];
    let pairing_of = |q: [usize; 4]| -> usize {
        let norm = |a: usize, b: usize| (a.min(b), a.max(b));
        let (x, y) = (norm(q[0], q[1]), norm(q[2], q[3]));
        let key = if x < y { (x, y) } else { (y, x) };
        pairings
            .iter()
            .position(|p| ((p[0], p[1]), (p[2], p[3])) == key)
            .unwrap()
    };
    let triv = perms.iter().map(|_| scalar(CycloNum::one())).collect();
    let sign: RepMatrices = perms
        .iter()
        .map(|p| scalar(CycloNum::from_int(parity(p))))
        .collect();
    let two = perms
        .iter()
        .map(|p| {
            let action: Vec<usize> = pairings
                .iter()
                .map(|q| pairing_of([p[q[0]], p[q[1]], p[q[2]], p[q[3]]]))
                .collect();
            sum_zero_model(&action)
        })
        .collect();
    let standard: RepMatrices = perms.iter().map(|p| sum_zero_model(p)).collect();
    let twisted = standard
        .iter()
        .zip(&sign)
        .map(|(m, s)| m.scale(s.get(0, 0)))
        .collect();
    RawGroup {
        order: 24,
        table,
        irreps: vec![triv, sign, two, standard, twisted],
    }
}

/// G × C_m with labels g + |G|·c and irreps ρ ⊗ ψ_j (ρ outer, j inner).
fn times_cyclic(g: &RawGroup, m: usize) -> RawGroup {
    let n = g.order;
    let order = n * m;
    let mut table = vec![0; order * order];
    for x in 0..order {
        for y in 0..order {
            let prod = g.table[(x % n) * n + (y % n)];
            table[x * order + y] = prod + n * ((x / n + y / n) % m);
        }
    }
    let mut irreps = Vec::new();
    for rho in &g.irreps {
        for j in 0..m {
            irreps.push(
                (0..order)
                    .map(|x| rho[x % n].scale(&CycloNum::zeta(m as u64, (j * (x / n)) as i64)))
                    .collect(),
            );
        }
    }
    RawGroup {
        order,
        table,
        irreps,
    }
}
