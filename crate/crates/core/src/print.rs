//! Canonical text form of numbers, polynomials and rational functions.
//!
//! Output is deterministic: ascending powers, 12 significant digits, real
//! part before imaginary part. Every string produced here parses back with
//! [`crate::expr::parse_expression`] to the same value.

use num_complex::Complex64;

const SIG_DIGITS: usize = 12;

/// Round to 12 significant digits.
pub fn round_sig(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{:.*e}", SIG_DIGITS - 1, x).parse().unwrap_or(x)
}

/// Round both parts and drop a part that is below 1e-12 of the modulus.
pub fn clean(c: Complex64) -> Complex64 {
    let m = c.norm();
    let re = if c.re.abs() <= 1e-12 * m { 0.0 } else { round_sig(c.re) };
    let im = if c.im.abs() <= 1e-12 * m { 0.0 } else { round_sig(c.im) };
    // normalise negative zero
    Complex64::new(re + 0.0, im + 0.0)
}

fn real(x: f64) -> String {
    format!("{x}")
}

/// Free-standing literal, e.g. `-0.5`, `2i`, `1-2i`.
pub fn format_complex(c: Complex64) -> String {
    let c = clean(c);
    if c.im == 0.0 {
        real(c.re)
    } else if c.re == 0.0 {
        format!("{}i", real(c.im))
    } else if c.im < 0.0 {
        format!("{}-{}i", real(c.re), real(-c.im))
    } else {
        format!("{}+{}i", real(c.re), real(c.im))
    }
}

fn monomial(k: usize) -> String {
    match k {
        0 => String::new(),
        1 => "z".to_string(),
        _ => format!("z^{k}"),
    }
}

fn term(c: Complex64, k: usize, wrap_complex_constant: bool) -> String {
    let lit = format_complex(c);
    if k == 0 {
        return if c.im != 0.0 && wrap_complex_constant {
            format!("({lit})")
        } else {
            lit
        };
    }
    let mono = monomial(k);
    if c.im == 0.0 {
        if c.re == 1.0 {
            mono
        } else if c.re == -1.0 {
            format!("-{mono}")
        } else {
            format!("{lit}*{mono}")
        }
    } else {
        format!("({lit})*{mono}")
    }
}

/// Sum of terms in ascending powers, `0` for the zero polynomial.
pub fn format_polynomial(coeffs: &[Complex64]) -> String {
    let cleaned: Vec<(usize, Complex64)> = coeffs
        .iter()
        .map(|c| clean(*c))
        .enumerate()
        .filter(|(_, c)| *c != Complex64::new(0.0, 0.0))
        .collect();
    if cleaned.is_empty() {
        return "0".to_string();
    }
    let many = cleaned.len() > 1;
    let mut out = String::new();
    for (i, (k, c)) in cleaned.into_iter().enumerate() {
        let t = term(c, k, many);
        if i == 0 {
            out.push_str(&t);
        } else if let Some(rest) = t.strip_prefix('-') {
            out.push('-');
            out.push_str(rest);
        } else {
            out.push('+');
            out.push_str(&t);
        }
    }
    out
}

/// True when `s` has no `+` or `-` outside parentheses past its first
/// character, so it can stand next to `/` without grouping.
pub(crate) fn is_atomic(s: &str) -> bool {
    let mut depth = 0i32;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' | '-' if depth == 0 && i > 0 => return false,
            _ => {}
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn atomic_strings() {
        assert!(is_atomic("-0.5*z"));
        assert!(is_atomic("(1-2i)*z^2"));
        assert!(!is_atomic("1-2i"));
        assert!(!is_atomic("1+z"));
    }

    #[test]
    fn literals() {
        assert_eq!(format_complex(Complex64::new(-0.5, 0.0)), "-0.5");
        assert_eq!(format_complex(Complex64::new(0.0, 2.0)), "2i");
        assert_eq!(format_complex(Complex64::new(1.0, -2.0)), "1-2i");
        assert_eq!(format_complex(Complex64::new(0.1 + 0.2, 1e-18)), "0.3");
    }

    #[test]
    fn polynomials_in_ascending_powers() {
        let c = |re, im| Complex64::new(re, im);
        assert_eq!(format_polynomial(&[c(1.0, 0.0), c(-0.5, 0.0)]), "1-0.5*z");
        assert_eq!(format_polynomial(&[c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]), "z^2");
        assert_eq!(format_polynomial(&[c(0.0, 1.0), c(-1.0, 0.0)]), "(1i)-z");
        assert_eq!(format_polynomial(&[]), "0");
    }
}
