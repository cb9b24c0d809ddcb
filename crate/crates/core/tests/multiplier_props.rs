mod common;

use common::{kernel_element, rng};
use proptest::prelude::*;
use toeplitz_core::multipliers::{MaximalVectorRoute, MultiplierRoute, SmirnovRoute};
use toeplitz_core::sample;
use toeplitz_core::{
    equals, image_kernel, is_maximal, is_multiplier, is_surjective_multiplier, kernel,
    multiplier_space, ToeplitzSymbol,
};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn routes_agree(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (w, g, h) = sample::multiplier_triple(&mut r);
        prop_assert_eq!(
            MaximalVectorRoute.decide(&w, &g, &h).unwrap(),
            SmirnovRoute.decide(&w, &g, &h).unwrap()
        );
    }

    #[test]
    fn multiplier_space_is_closed_under_the_test(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = sample::symbol_with_kernel(&mut r, 4);
        let h = sample::symbol_with_kernel(&mut r, 5);
        let m = multiplier_space(&g, &h).unwrap();
        prop_assert_eq!(
            m.space.dimension() as i32,
            (-m.test_symbol.winding().unwrap()).max(0)
        );
        for b in m.space.basis() {
            prop_assert!(is_multiplier(b, &g, &h).unwrap());
        }
    }

    #[test]
    fn multipliers_compose(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = sample::symbol_with_kernel(&mut r, 3);
        let h = sample::symbol_with_kernel(&mut r, 4);
        let l = sample::symbol_with_kernel(&mut r, 5);
        let (m1, m2) = (multiplier_space(&g, &h).unwrap(), multiplier_space(&h, &l).unwrap());
        if !m1.space.is_trivial() && !m2.space.is_trivial() {
            let w1 = kernel_element(&mut r, &m1.space);
            let w2 = kernel_element(&mut r, &m2.space);
            prop_assert!(is_multiplier(&w1, &g, &h).unwrap() && is_multiplier(&w2, &h, &l).unwrap());
            prop_assert!(is_multiplier(&(&w1 * &w2), &g, &l).unwrap());
        }
    }

    #[test]
    fn invertible_multipliers_are_surjective(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = sample::symbol_with_kernel(&mut r, 6);
        let w = sample::outer(&mut r, 3, 3);
        let h = ToeplitzSymbol::new(&(g.value() * &w.circle_conjugate()) * &w.recip().unwrap()).unwrap();
        let report = is_surjective_multiplier(&w, &g, &h).unwrap();
        prop_assert!(report.holds, "{:?}", report);
        let img = image_kernel(&w, &g).unwrap().expect("image is a kernel");
        prop_assert_eq!(img.dimension(), kernel(&h).unwrap().dimension());
        prop_assert!(equals(img.symbol(), &h).unwrap());
        let k = kernel(&g).unwrap().maximal_vector().unwrap().clone();
        prop_assert!(is_maximal(&(&w * &k), &h).unwrap().is_maximal);
    }
}

#[test]
fn power_space_dimensions() {
    for n in 1..=6 {
        for m in 1..=6 {
            let dim = multiplier_space(&ToeplitzSymbol::z_power(-n), &ToeplitzSymbol::z_power(-m))
                .unwrap()
                .space
                .dimension() as i32;
            if n <= m {
                assert_eq!(dim, m - n + 1);
            } else {
                assert_eq!(dim, 0);
            }
        }
    }
}
