//! Toeplitz kernels, maximal vectors and multipliers for rational symbols.
//!
//! Every inner function handled here is a finite Blaschke product and every
//! outer function is rational, so kernels are finite-dimensional and all
//! constructions are closed-form. The [`oracle`] module recomputes the same
//! objects by brute-force linear algebra for cross-checking.

pub mod error;
pub mod expr;
pub mod factorization;
pub mod halfplane;
pub mod kernels;
pub mod multipliers;
pub mod oracle;
pub mod poly;
pub mod print;
pub mod rational;
pub mod roots;
pub mod sample;
pub mod symbol;
pub mod tolerance;

pub use expr::{parse_expression, parse_rational, parse_symbol, SymbolExpression};
pub use error::{Result, ToeplitzError};
pub use factorization::{
    blaschke_divides, inner_outer, wiener_hopf, BlaschkeProduct, InnerOuterFactorization,
    WienerHopfFactorization,
};
pub use kernels::{
    dim_from_factorization, equals, includes, is_equivalent, is_maximal, is_rigid, kernel,
    minimal_kernel, EquivalenceWitness, MaximalityCertificate, MaximalityWitness, ToeplitzKernel,
};
pub use multipliers::{
    carleson_check, crofoot_companion, image_kernel, is_multiplier, is_surjective_multiplier,
    multiplier_space, multiplier_space_bounded, CrofootCompanion, MultiplierRoute,
    MultiplierSpace, RouteRegistry, SurjectivityReport,
};
pub use num_complex::Complex64;
pub use poly::ComplexPolynomial;
pub use rational::RationalFunction;
pub use roots::{poly_roots, Root, RootClassification};
pub use symbol::{winding_number, ToeplitzSymbol};
