mod common;

use proptest::prelude::*;

use ncfit::algebra::{nrd, CentralElement, GroupAlgebraMatrix};
use ncfit::arith::Rational;
use ncfit::exterior::{apply_hom, pair, theta_b, theta_b_section, wedge_elements, wedge_homs, ExteriorElement};

use common::{g, matrix, one_of, vectors};

const GROUPS: &[&str] = &["C4", "S3", "Q8", "D4"];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn pairing_equals_gram_nrd(
        (ws, hs) in one_of(GROUPS).prop_flat_map(|g| (vectors(g.clone(), 2, 2, 2), vectors(g, 2, 2, 2)))
    ) {
        let grp = ws[0][0].group().clone();
        let p = pair(&wedge_homs(&grp, 2, &hs).unwrap(), &wedge_elements(&grp, 2, &ws).unwrap()).unwrap();
        let gram = GroupAlgebraMatrix::from_fn(&grp, 2, 2, |a, b| apply_hom(&hs[b], &ws[a]));
        prop_assert_eq!(p.as_central().unwrap(), nrd(&gram).unwrap());
    }

    #[test]
    fn swapping_inputs_flips_sign(
        (ws, hs) in one_of(GROUPS).prop_flat_map(|g| (vectors(g.clone(), 2, 3, 2), vectors(g, 1, 3, 2)))
    ) {
        let grp = ws[0][0].group().clone();
        let h = wedge_homs(&grp, 3, &hs).unwrap();
        let swapped = vec![ws[1].clone(), ws[0].clone()];
        let a = pair(&h, &wedge_elements(&grp, 3, &ws).unwrap()).unwrap();
        let b = pair(&h, &wedge_elements(&grp, 3, &swapped).unwrap()).unwrap();
        // the sign is (−1)^{χ(1)} on each component
        let signs: Vec<_> = grp.degrees().iter().map(|&d| ncfit::arith::CycloNum::from_int(if d % 2 == 0 { 1 } else { -1 })).collect();
        let sign = CentralElement::from_values(&grp, signs).unwrap();
        prop_assert_eq!(b, a.scale(&sign).unwrap());
    }

    #[test]
    fn endomorphism_scaling(phi in matrix(g("S3"), 2, 2, 2)) {
        let grp = phi.group().clone();
        let images: Vec<_> = (0..2).map(|i| phi.row(i)).collect();
        let lhs = wedge_elements(&grp, 2, &images).unwrap();
        prop_assert_eq!(lhs, ExteriorElement::top(&grp, 2).scale(&nrd(&phi).unwrap()).unwrap());
    }

    #[test]
    fn theta_round_trip(c in prop::collection::vec((-5i64..=5, -5i64..=5), 3), r in 1usize..=2) {
        let grp = g("S3");
        let d = 3;
        // binomial(3, r) = 3 for r = 1, 2
        let coords: Vec<CentralElement> = c
            .iter()
            .map(|&(a, b)| {
                // a + b·(class sum of the 3-cycles), an element of ζ(Z[G])
                let mut coeffs = vec![Rational::zero(); 6];
                coeffs[0] = Rational::from(a);
                coeffs[1] = Rational::from(b);
                coeffs[2] = Rational::from(b);
                CentralElement::from_group_algebra(&ncfit::algebra::GroupAlgebraElement::new(&grp, coeffs).unwrap()).unwrap()
            })
            .collect();
        let x = theta_b_section(&grp, d, r, &coords).unwrap();
        prop_assert_eq!(theta_b(&x).unwrap(), coords);
    }
}
