mod common;

use common::rng;
use proptest::prelude::*;
use rand::Rng;
use toeplitz_core::halfplane::{cayley_function, cayley_symbol, cayley_symbol_inverse, HalfPlaneRational};
use toeplitz_core::oracle::{circle_l2_norm, line_l2_norm};
use toeplitz_core::sample;
use toeplitz_core::{Complex64, RationalFunction, Root};

fn bounded_symbol(r: &mut rand_chacha::ChaCha8Rng) -> HalfPlaneRational {
    let np = r.gen_range(0..4);
    let nz = r.gen_range(0..=np);
    let off_axis = |r: &mut rand_chacha::ChaCha8Rng| {
        let im: f64 = r.gen_range(0.3..3.0);
        let sign = if r.gen_bool(0.5) { 1.0 } else { -1.0 };
        Complex64::new(r.gen_range(-2.0..2.0), sign * im)
    };
    let poles = (0..np).map(|_| Root::simple(off_axis(r))).collect();
    let zeros = (0..nz).map(|_| Root::simple(off_axis(r))).collect();
    HalfPlaneRational::new(RationalFunction::from_roots(sample::gain(r), zeros, poles))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn v2_is_an_isometry(seed in any::<u64>()) {
        let mut r = rng(seed);
        let f = sample::upper_h2(&mut r, 6);
        let line = line_l2_norm(f.value(), 1e-13);
        let circle = circle_l2_norm(&cayley_function(&f).unwrap(), 1 << 14).unwrap();
        prop_assert!((line - circle).abs() <= 1e-6 * line, "{} vs {}", line, circle);
    }

    #[test]
    fn v2_lands_in_h2_of_the_disc(seed in any::<u64>()) {
        let mut r = rng(seed);
        let f = sample::upper_h2(&mut r, 6);
        prop_assert!(f.is_in_h2());
        prop_assert!(cayley_function(&f).unwrap().pole_in_closed_disc().is_none());
    }

    #[test]
    fn symbol_transfer_is_multiplicative(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (a, b) = (bounded_symbol(&mut r), bounded_symbol(&mut r));
        let ab = HalfPlaneRational::new(a.value() * b.value());
        let lhs = cayley_symbol(&ab).unwrap();
        let rhs = cayley_symbol(&a).unwrap().mul(&cayley_symbol(&b).unwrap());
        prop_assert!(lhs.value().circle_distance(rhs.value(), 64) < 1e-10);
        prop_assert!(lhs.value().approx_eq(rhs.value(), 1e-9));
    }

    #[test]
    fn inverse_substitution_recovers_the_symbol(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = bounded_symbol(&mut r);
        let back = cayley_symbol_inverse(cayley_symbol(&g).unwrap().value());
        prop_assert!(back.approx_eq(g.value(), 1e-9), "{} vs {}", back, g.value());
    }
}
