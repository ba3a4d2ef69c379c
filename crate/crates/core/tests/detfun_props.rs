mod common;

use proptest::prelude::*;

use ncfit::detfun::{det_free, det_standard, direct_sum_sequence, ses_iso, swap, tensor, ExactSequence};

use common::{g, matrix, one_of};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn ses_iso_is_section_independent(shift in one_of(&["C3", "S3", "D4", "Q8"]).prop_flat_map(|g| matrix(g, 2, 1, 3))) {
        let grp = shift.group().clone();
        let seq = direct_sum_sequence(&grp, 1, 2).unwrap();
        let other = ExactSequence::new(
            seq.theta.clone(),
            seq.phi.clone(),
            seq.section.add(&shift.mul(&seq.theta).unwrap()).unwrap(),
        ).unwrap();
        prop_assert_eq!(ses_iso(&seq, ("A", "B")).unwrap().image, ses_iso(&other, ("A", "B")).unwrap().image);
    }

    #[test]
    fn swap_twice_is_identity(basis in matrix(g("S3"), 2, 2, 2), r in 1usize..=3) {
        let grp = basis.group().clone();
        prop_assume!(ncfit::algebra::nrd(&basis).unwrap().is_nowhere_zero());
        let x = det_free("X", &basis).unwrap();
        let y = det_standard(&grp, "Y", r).unwrap();
        let (xy_to_yx, s1) = swap(&x, &y).unwrap();
        let (back, s2) = swap(&y, &x).unwrap();
        prop_assert_eq!(xy_to_yx, tensor(&y, &x).unwrap().scale(&s1));
        prop_assert_eq!(back.scale(&s1), tensor(&x, &y).unwrap());
        prop_assert_eq!(&s1 * &s2, ncfit::algebra::CentralElement::one(&grp));
    }
}
