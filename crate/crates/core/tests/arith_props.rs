use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use ncfit::arith::{smith_normal_form, CycloNum, IntLattice, Rational};

fn cyclo(n: u64, coeffs: &[i64], den: i64) -> CycloNum {
    let c: Vec<Rational> = coeffs.iter().map(|&x| Rational::new(x, den)).collect();
    CycloNum::from_poly(n, &c)
}

fn triple() -> impl Strategy<Value = (CycloNum, CycloNum, CycloNum)> {
    (1u64..=40).prop_flat_map(|n| {
        let v = || (prop::collection::vec(-4i64..=4, n as usize), 1i64..=3);
        (v(), v(), v()).prop_map(move |((a, da), (b, db), (c, dc))| (cyclo(n, &a, da), cyclo(n, &b, db), cyclo(n, &c, dc)))
    })
}

fn units(n: u64) -> Vec<u64> {
    (1..=n.max(1)).filter(|&a| num_integer::gcd(a, n) == 1).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms((a, b, c) in triple()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            prop_assert!((&a * &a.inverse().unwrap()).is_one());
        }
    }

    #[test]
    fn mixed_conductors(n in 1u64..=12, m in 1u64..=12, x in prop::collection::vec(-3i64..=3, 12), y in prop::collection::vec(-3i64..=3, 12)) {
        let a = cyclo(n, &x[..n as usize], 1);
        let b = cyclo(m, &y[..m as usize], 2);
        let s = &a + &b;
        prop_assert_eq!(&s - &b, a.clone());
        if !b.is_zero() {
            prop_assert_eq!(&(&a * &b) * &b.inverse().unwrap(), a);
        }
    }

    #[test]
    fn galois_composition(n in 1u64..=40, coeffs in prop::collection::vec(-4i64..=4, 40), i in 0usize..64, j in 0usize..64) {
        let x = cyclo(n, &coeffs[..n as usize], 1);
        let u = units(n);
        let (a, b) = (u[i % u.len()], u[j % u.len()]);
        let lhs = x.galois_apply(b as i64).unwrap().galois_apply(a as i64).unwrap();
        prop_assert_eq!(lhs, x.galois_apply((a * b % n.max(1)) as i64).unwrap());
    }

    #[test]
    fn hnf_is_canonical(rows in prop::collection::vec(prop::collection::vec(-6i64..=6, 4), 1..5), mix in prop::collection::vec(-3i64..=3, 16)) {
        let l = IntLattice::from_i64(4, &rows).unwrap();
        // unimodular recombination: add integer multiples of other generators
        let mut other = rows.clone();
        for (t, &c) in mix.iter().enumerate() {
            let (i, j) = (t % other.len(), (t / 4) % other.len());
            if i != j {
                let src = other[j].clone();
                for (x, y) in other[i].iter_mut().zip(&src) {
                    *x += c * y;
                }
            }
        }
        other.reverse();
        prop_assert_eq!(IntLattice::from_i64(4, &other).unwrap(), l.clone());
        for r in l.basis() {
            prop_assert!(l.contains_int(r));
        }
    }

    #[test]
    fn snf_divisibility_and_determinant(entries in prop::collection::vec(-9i64..=9, 9)) {
        let m: Vec<Vec<BigInt>> = entries.chunks(3).map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        let snf = smith_normal_form(&m);
        let d = &snf.invariants;
        for w in d.windows(2) {
            prop_assert!(w[0].is_zero() && w[1].is_zero() || (!w[0].is_zero() && (&w[1] % &w[0]).is_zero()));
        }
        let det = |a: &Vec<Vec<BigInt>>| -> BigInt {
            &a[0][0] * (&a[1][1] * &a[2][2] - &a[1][2] * &a[2][1])
                - &a[0][1] * (&a[1][0] * &a[2][2] - &a[1][2] * &a[2][0])
                + &a[0][2] * (&a[1][0] * &a[2][1] - &a[1][1] * &a[2][0])
        };
        let prod: BigInt = d.iter().product();
        prop_assert_eq!(prod, det(&m).abs());
    }
}
