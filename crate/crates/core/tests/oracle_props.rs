mod common;

use common::rng;
use proptest::prelude::*;
use toeplitz_core::oracle::{
    argument_principle_winding, fourier_coefficients_with, numeric_kernel, principal_angle,
    subspace_from_rationals,
};
use toeplitz_core::sample;
use toeplitz_core::{kernel, winding_number};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn numeric_and_symbolic_kernels_agree(seed in any::<u64>()) {
        let mut r = rng(seed);
        let s = sample::symbol(&mut r, 10);
        let nk = numeric_kernel(&s, None).unwrap();
        let sym = kernel(&s).unwrap();
        prop_assert_eq!(nk.dimension(), sym.dimension());
        prop_assert!(nk.gap_ratio > 1e3);
        let basis = subspace_from_rationals(sym.basis(), nk.subspace.degree_cap).unwrap();
        prop_assert!(principal_angle(&nk.subspace, &basis).unwrap().angle < 1e-6);
        prop_assert!(nk.subspace.orthonormality_error() < 1e-10);
    }

    #[test]
    fn doubling_the_grid_changes_nothing(seed in any::<u64>()) {
        let mut r = rng(seed);
        let f = sample::symbol(&mut r, 8).into_value();
        let a = fourier_coefficients_with(&f, 32, 1024).unwrap();
        let b = fourier_coefficients_with(&f, 32, 2048).unwrap();
        for ((_, x), (_, y)) in a.iter().zip(b.iter()) {
            prop_assert!((x - y).norm() < 1e-10);
        }
    }

    #[test]
    fn argument_principle_matches_the_count(seed in any::<u64>()) {
        let mut r = rng(seed);
        let s = sample::symbol(&mut r, 10);
        prop_assert_eq!(argument_principle_winding(s.value()).unwrap(), winding_number(&s).unwrap());
    }
}
