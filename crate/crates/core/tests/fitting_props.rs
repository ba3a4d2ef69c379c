mod common;

use proptest::prelude::*;

use ncfit::algebra::{nrd, CentralElement};
use ncfit::arith::Rational;
use ncfit::fitting::{annihilation_check, fit_classical_oracle, fit_matrix, Budget};

use common::{g, matrix, one_of};

fn small_budget() -> Budget {
    Budget { rounds: 2, max_candidates: 256, ..Budget::default() }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn abelian_fit_matches_classical_oracle(
        (m, a) in one_of(&["C1", "C2", "C3", "C4", "C6", "C2xC2"])
            .prop_flat_map(|g| (1usize..=3).prop_flat_map(move |c| (matrix(g.clone(), 3, c, 4), 0usize..=2)))
    ) {
        prop_assert_eq!(fit_matrix(&m, a, &Budget::default()).unwrap(), fit_classical_oracle(&m, a).unwrap());
    }

    #[test]
    fn fitting_chain(m in matrix(g("S3"), 2, 2, 2)) {
        let b = small_budget();
        let f0 = fit_matrix(&m, 0, &b).unwrap();
        let f1 = fit_matrix(&m, 1, &b).unwrap();
        let f2 = fit_matrix(&m, 2, &b).unwrap();
        prop_assert!(f0.is_sublattice_of(&f1));
        prop_assert!(f1.is_sublattice_of(&f2));
    }

    #[test]
    fn group_order_annihilates(m in one_of(&["C4", "S3", "D4"]).prop_flat_map(|g| matrix(g, 2, 2, 2))) {
        prop_assume!(nrd(&m).unwrap().is_nowhere_zero());
        let g = m.group().clone();
        let x = CentralElement::constant(&g, &Rational::from(g.order() as i64));
        prop_assert!(annihilation_check(&m, &x).unwrap().annihilates);
    }
}
