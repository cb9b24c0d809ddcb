mod common;

use common::{kernel_element, rng, span_angle};
use proptest::prelude::*;
use toeplitz_core::oracle::membership_residual;
use toeplitz_core::sample;
use toeplitz_core::{
    includes, is_maximal, kernel, minimal_kernel, equals, winding_number, ToeplitzSymbol,
};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dimension_is_minus_winding(seed in any::<u64>()) {
        let mut r = rng(seed);
        let s = sample::symbol(&mut r, 10);
        let w = winding_number(&s).unwrap();
        prop_assert_eq!(kernel(&s).unwrap().dimension() as i32, (-w).max(0));
    }

    #[test]
    fn scaling_the_symbol_keeps_the_kernel(seed in any::<u64>()) {
        let mut r = rng(seed);
        let s = sample::symbol_with_kernel(&mut r, 8);
        let scaled = ToeplitzSymbol::new(s.value().scale(sample::gain(&mut r))).unwrap();
        let (a, b) = (kernel(&s).unwrap(), kernel(&scaled).unwrap());
        prop_assert_eq!(a.dimension(), b.dimension());
        prop_assert!(span_angle(a.basis(), b.basis(), 60) < 1e-8);
    }

    #[test]
    fn basis_elements_pass_the_fft_membership_test(seed in any::<u64>()) {
        let mut r = rng(seed);
        let s = sample::symbol_with_kernel(&mut r, 8);
        let k = kernel(&s).unwrap();
        let d = (s.value().zero_count() + s.value().pole_count()) as usize + k.dimension();
        for b in k.basis() {
            prop_assert!(membership_residual(&s, b, 2 * d).unwrap() < 1e-8);
        }
    }

    #[test]
    fn minimal_kernel_sits_inside_every_kernel_containing_k(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = sample::symbol_with_kernel(&mut r, 6);
        let k = kernel_element(&mut r, &kernel(&g).unwrap());
        let f_plus = &sample::outer(&mut r, 2, 2) * &sample::blaschke(&mut r, 2).to_rational();
        let h = ToeplitzSymbol::new(g.value() * &f_plus.circle_conjugate()).unwrap();
        prop_assert!(kernel(&h).unwrap().contains(&k));
        let (v, kmin) = minimal_kernel(&k).unwrap();
        prop_assert!(kmin.contains(&k));
        prop_assert!(includes(&v, &h).unwrap());
        prop_assert!(includes(&v, &g).unwrap());
    }

    #[test]
    fn maximal_vectors_generate_the_kernel(seed in any::<u64>()) {
        let mut r = rng(seed);
        let s = sample::symbol_with_kernel(&mut r, 8);
        let ker = kernel(&s).unwrap();
        let mut candidates = vec![ker.maximal_vector().unwrap().clone(), kernel_element(&mut r, &ker)];
        candidates.push(ker.basis()[0].clone());
        for k in candidates {
            let cert = is_maximal(&k, &s).unwrap();
            let (v, kmin) = minimal_kernel(&k).unwrap();
            prop_assert_eq!(cert.is_maximal, equals(&v, &s).unwrap());
            prop_assert_eq!(cert.is_maximal, kmin.dimension() == ker.dimension());
        }
        prop_assert!(is_maximal(ker.maximal_vector().unwrap(), &s).unwrap().is_maximal);
    }

    #[test]
    fn every_nontrivial_kernel_contains_an_outer_function(seed in any::<u64>()) {
        let mut r = rng(seed);
        let s = sample::symbol_with_kernel(&mut r, 8);
        let first = kernel(&s).unwrap().basis()[0].clone();
        prop_assert!(first.first_zero_at(toeplitz_core::tolerance::Location::Inside).is_none());
        prop_assert!(first.is_in_h2());
    }

    #[test]
    fn blaschke_factor_lowers_dimension(seed in any::<u64>(), deg in 0usize..5) {
        let mut r = rng(seed);
        let h = sample::symbol(&mut r, 8);
        let theta = sample::blaschke(&mut r, deg).to_rational();
        let zbar = ToeplitzSymbol::z_power(-1);
        let base = kernel(&zbar.mul(&h)).unwrap().dimension() as i64;
        let twisted = zbar.mul_rational(&theta).unwrap().mul(&h);
        let d = kernel(&twisted).unwrap().dimension() as i64;
        prop_assert_eq!(d, (base - deg as i64).max(0));
    }

    #[test]
    fn inclusion_is_reflexive_and_transitive(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = sample::symbol_with_kernel(&mut r, 6);
        prop_assert!(includes(&g, &g).unwrap());
        let f1 = &sample::outer(&mut r, 2, 1) * &sample::blaschke(&mut r, 1).to_rational();
        let f2 = &sample::outer(&mut r, 1, 2) * &sample::blaschke(&mut r, 2).to_rational();
        let h = ToeplitzSymbol::new(g.value() * &f1.circle_conjugate()).unwrap();
        let l = ToeplitzSymbol::new(h.value() * &f2.circle_conjugate()).unwrap();
        prop_assert!(includes(&g, &h).unwrap() && includes(&h, &l).unwrap());
        prop_assert!(includes(&g, &l).unwrap());
        let (a, b, c) = (
            sample::symbol_with_kernel(&mut r, 4),
            sample::symbol_with_kernel(&mut r, 4),
            sample::symbol_with_kernel(&mut r, 4),
        );
        if includes(&a, &b).unwrap() && includes(&b, &c).unwrap() {
            prop_assert!(includes(&a, &c).unwrap());
        }
    }
}
