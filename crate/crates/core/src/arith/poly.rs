//! Dense univariate polynomials, just enough for cyclotomic field arithmetic.
//!
//! Coefficients are stored lowest degree first. Integer polynomials carry
//! the cyclotomic moduli; rational ones are used for inversion by the
//! extended Euclidean algorithm.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::rational::Rational;

fn trim_rat(p: &mut Vec<Rational>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// Divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Exact division of integer polynomials by a monic divisor.
fn div_exact_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (i, d) in den.iter().enumerate() {
            rem[k + i] -= &c * d;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    quot
}

/// The n-th cyclotomic polynomial with integer coefficients.
pub fn cyclotomic_poly(n: u64) -> Vec<BigInt> {
    assert!(n > 0, "cyclotomic_poly: n must be positive");
    let mut p = vec![BigInt::zero(); n as usize + 1];
    p[0] = -BigInt::one();
    p[n as usize] = BigInt::one();
    for d in divisors(n) {
        if d == n {
            continue;
        }
        p = div_exact_monic(&p, &cyclotomic_poly(d));
    }
    p
}

/// Euler's totient.
pub fn totient(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

fn rat_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = a.to_vec();
    trim_rat(&mut rem);
    let db = b.len() - 1;
    let lead = b[db].recip().expect("nonzero leading coefficient");
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - db];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + db] * &lead;
        if c.is_zero() {
            continue;
        }
        for (i, d) in b.iter().enumerate() {
            let t = &c * d;
            rem[k + i] -= &t;
        }
        quot[k] = c;
    }
    trim_rat(&mut rem);
    (quot, rem)
}

fn rat_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += &(x * y);
        }
    }
    out
}

fn rat_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out: Vec<Rational> = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_default();
            match b.get(i) {
                Some(y) => x - y,
                None => x,
            }
        })
        .collect();
    trim_rat(&mut out);
    out
}

/// Inverse of `a` modulo `m` over Q, or `None` when they share a factor.
pub(crate) fn rat_inverse_mod(a: &[Rational], m: &[Rational]) -> Option<Vec<Rational>> {
    // invariant: s_i * a == r_i (mod m)
    let mut r0 = m.to_vec();
    let mut r1 = a.to_vec();
    trim_rat(&mut r0);
    trim_rat(&mut r1);
    let mut s0: Vec<Rational> = Vec::new();
    let mut s1: Vec<Rational> = vec![Rational::one()];
    while !r1.is_empty() {
        let (q, r) = rat_divrem(&r0, &r1);
        let s = rat_sub(&s0, &rat_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].recip()?;
    let (_, inv) = rat_divrem(&s0.iter().map(|x| x * &c).collect::<Vec<_>>(), m);
    Some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(p: &[BigInt]) -> Vec<i64> {
        p.iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(ints(&cyclotomic_poly(1)), vec![-1, 1]);
        assert_eq!(ints(&cyclotomic_poly(4)), vec![1, 0, 1]);
        assert_eq!(ints(&cyclotomic_poly(6)), vec![1, -1, 1]);
        assert_eq!(ints(&cyclotomic_poly(12)), vec![1, 0, -1, 0, 1]);
        // first cyclotomic polynomial with a coefficient outside {-1,0,1}
        assert!(ints(&cyclotomic_poly(105)).contains(&-2));
    }

    #[test]
    fn totients() {
        assert_eq!(totient(1), 1);
        assert_eq!(totient(12), 4);
        assert_eq!(totient(390), 96);
        for n in 1..60 {
            assert_eq!(totient(n) as usize + 1, cyclotomic_poly(n).len());
        }
    }

    #[test]
    fn divisor_list() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
    }
}
