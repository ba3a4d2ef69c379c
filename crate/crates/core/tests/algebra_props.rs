mod common;

use proptest::prelude::*;

use ncfit::algebra::{adjoint_star, nrd, wedderburn_inverse, GroupAlgebraMatrix};

use common::{matrix, one_of};

const GROUPS: &[&str] = &["C6", "S3", "D4", "Q8", "A4", "C2xC2"];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn nrd_is_multiplicative((a, b) in one_of(GROUPS).prop_flat_map(|g| (matrix(g.clone(), 2, 2, 3), matrix(g, 2, 2, 3)))) {
        prop_assert_eq!(nrd(&a.mul(&b).unwrap()).unwrap(), &nrd(&a).unwrap() * &nrd(&b).unwrap());
    }

    #[test]
    fn nrd_of_hash_transpose(m in one_of(GROUPS).prop_flat_map(|g| matrix(g, 2, 2, 3))) {
        prop_assert_eq!(nrd(&m.hash_transpose()).unwrap(), nrd(&m).unwrap().hash());
    }

    #[test]
    fn adjoint_identity(m in one_of(GROUPS).prop_flat_map(|g| matrix(g, 2, 2, 2))) {
        let star = adjoint_star(&m).unwrap();
        let n = nrd(&m).unwrap();
        let scalar = GroupAlgebraMatrix::scalar(m.group(), 2, &n.to_group_algebra().unwrap());
        prop_assert_eq!(m.mul(&star).unwrap(), scalar.clone());
        prop_assert_eq!(star.mul(&m).unwrap(), scalar);
    }

    #[test]
    fn wedderburn_is_a_ring_isomorphism((a, b) in one_of(GROUPS).prop_flat_map(|g| (matrix(g.clone(), 1, 1, 4), matrix(g, 1, 1, 4)))) {
        let (x, y) = (a.get(0, 0).clone(), b.get(0, 0).clone());
        let wx = x.wedderburn();
        let wy = y.wedderburn();
        let wxy = (&x * &y).wedderburn();
        for chi in 0..wx.len() {
            prop_assert_eq!(&wx[chi].mul(&wy[chi]), &wxy[chi]);
        }
        let back = wedderburn_inverse(x.group(), &wx).unwrap();
        prop_assert_eq!(back, x.to_cyclo());
    }
}
