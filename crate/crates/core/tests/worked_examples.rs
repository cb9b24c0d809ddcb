//! Closed-form results checked against independent numerical evidence.

mod common;

use common::c;
use toeplitz_core::expr::{parse_halfplane_expression, parse_rational, parse_symbol};
use toeplitz_core::halfplane::{cayley_function, HalfPlaneRational};
use toeplitz_core::oracle::{
    circle_l2_norm, circle_residual, fourier_coefficients, line_l2_norm, numeric_kernel,
    principal_angle, subspace_from_rationals,
};
use toeplitz_core::tolerance::{circle_points, CIRCLE_SAMPLES};
use toeplitz_core::{
    crofoot_companion, dim_from_factorization, is_equivalent, kernel, minimal_kernel,
    BlaschkeProduct, RationalFunction, ToeplitzSymbol,
};

fn hp(text: &str) -> HalfPlaneRational {
    HalfPlaneRational::new(parse_halfplane_expression(text).unwrap().lower().unwrap())
}

#[test]
fn kernel_bases_match_the_svd_null_space() {
    for (text, cap, dim) in [("zbar^2", 8, 2), ("z^2", 8, 0), ("(2*z+1)/(z^4*(2+z))", 16, 3)] {
        let s = parse_symbol(text).unwrap();
        let sym = kernel(&s).unwrap();
        let nk = numeric_kernel(&s, Some(cap)).unwrap();
        assert_eq!(sym.dimension(), dim);
        assert_eq!(nk.dimension(), dim);
        if dim > 0 {
            let b = subspace_from_rationals(sym.basis(), cap).unwrap();
            assert!(principal_angle(&nk.subspace, &b).unwrap().angle < 1e-6);
        }
    }
}

#[test]
fn circle_pole_makes_the_quadrature_diverge() {
    // |1/(z-1)|^2 sampled off the pole grows without bound as the grid refines
    let w = parse_rational("1/(z-1)").unwrap();
    let shifted = |n: usize| {
        let half = std::f64::consts::PI / n as f64;
        circle_points(n)
            .into_iter()
            .map(|z| (w.eval(z * c(half.cos(), half.sin()))).norm_sqr())
            .sum::<f64>()
            / n as f64
    };
    let (a, b, d) = (shifted(256), shifted(512), shifted(1024));
    assert!(b > 1.9 * a && d > 1.9 * b);
}

#[test]
fn equivalence_witness_reconstructs_on_the_circle() {
    let g1 = parse_symbol("conj(z*B(0.5))").unwrap();
    let g2 = parse_symbol("zbar^2").unwrap();
    let w = is_equivalent(&g1, &g2).unwrap().unwrap();
    let rebuilt = &(&w.h_minus * g2.value()) * &w.h_plus;
    assert!(circle_residual(&rebuilt, g1.value(), 512).unwrap() < 1e-12);
}

#[test]
fn crofoot_companion_is_unimodular() {
    let w = parse_rational("1/((1-0.5*z)*(1+z/3))").unwrap();
    let cc = crofoot_companion(&BlaschkeProduct::z_power(2), &w).unwrap().unwrap();
    let phi = cc.companion.to_rational();
    for z in circle_points(CIRCLE_SAMPLES) {
        assert!((phi.eval(z).norm() - 1.0).abs() < 1e-12);
    }
}

#[test]
fn factorized_dimension_matches_the_kernel() {
    let theta = BlaschkeProduct::z_power(2);
    let plus = parse_rational("1+z/2").unwrap();
    let d = dim_from_factorization(&RationalFunction::one(), &theta, 1, &plus).unwrap();
    let s = ToeplitzSymbol::new(&RationalFunction::z_power(-2) * &plus.recip().unwrap()).unwrap();
    assert_eq!(d, 2);
    assert_eq!(numeric_kernel(&s, None).unwrap().dimension(), 2);
}

#[test]
fn minimal_kernels_of_k_z2_lattice_points() {
    for (text, dim) in [("1+0.5*z", 1), ("1-z", 2), ("1+2*z", 2)] {
        let (_, k) = minimal_kernel(&parse_rational(text).unwrap()).unwrap();
        assert_eq!(k.dimension(), dim, "{text}");
    }
}

#[test]
fn cayley_norms_match_closed_forms() {
    let pi = std::f64::consts::PI;
    for (text, norm) in [("1/(s+i)", pi.sqrt()), ("1/(s+i)^2", (pi / 2.0).sqrt())] {
        let f = hp(text);
        let v = cayley_function(&f).unwrap();
        assert!((line_l2_norm(f.value(), 1e-13) - norm).abs() < 1e-9);
        assert!((circle_l2_norm(&v, 1024).unwrap() - norm).abs() < 1e-12);
    }
}

#[test]
fn geometric_series_coefficients() {
    let f = parse_rational("1/(1-z/2)").unwrap();
    let cs = fourier_coefficients(&f, 40).unwrap();
    for (k, v) in cs.iter() {
        let expected = if k >= 0 { 0.5f64.powi(k as i32) } else { 0.0 };
        assert!((v - c(expected, 0.0)).norm() < 1e-12);
    }
}
