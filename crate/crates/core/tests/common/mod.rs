#![allow(dead_code)]

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use toeplitz_core::oracle::subspace_from_rationals;
use toeplitz_core::sample;
use toeplitz_core::{RationalFunction, ToeplitzKernel};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Random nonzero element of a nontrivial kernel.
pub fn kernel_element(rng: &mut ChaCha8Rng, k: &ToeplitzKernel) -> RationalFunction {
    k.basis()
        .iter()
        .map(|b| b.scale(sample::gain(rng)))
        .reduce(|a, b| &a + &b)
        .expect("nontrivial kernel")
}

/// Largest principal angle between the spans of two families of H^2 rationals.
pub fn span_angle(a: &[RationalFunction], b: &[RationalFunction], cap: usize) -> f64 {
    let sa = subspace_from_rationals(a, cap).unwrap();
    let sb = subspace_from_rationals(b, cap).unwrap();
    assert_eq!(sa.dimension(), sb.dimension());
    toeplitz_core::oracle::principal_angle(&sa, &sb).unwrap().angle
}
