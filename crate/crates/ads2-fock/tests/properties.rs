use ads2_fock::{build_fock, commutator_check, vacuum_sector, FockModel};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn massless_algebra(mu in 0.01f64..0.99) {
        let (fock, ops) = build_fock(FockModel::massless(mu), 4).unwrap();
        prop_assert!(commutator_check(&fock, &ops, None).max_deviation <= 1e-12);
        let v = vacuum_sector(&fock, &ops);
        prop_assert_eq!(v.degeneracy, 1);
        prop_assert!((v.weight - 0.5 * (mu - 0.5).powi(2)).abs() <= 1e-12);
    }

    #[test]
    fn zero_mode_algebra(m in 0.0f64..0.49) {
        let (fock, ops) = build_fock(FockModel::ZeroMode { m }, 4).unwrap();
        prop_assert!(commutator_check(&fock, &ops, None).max_deviation <= 1e-12);
        let v = vacuum_sector(&fock, &ops);
        prop_assert_eq!(v.degeneracy, 2);
        prop_assert!((v.weight - 0.5 * (0.25 - m * m)).abs() <= 1e-12);
    }
}
