//! Horner evaluation over `f64` complex coefficients.
//!
//! The compensated variant carries the rounding error of every step in a
//! second accumulator (TwoSum / FMA-based TwoProduct), which gives results
//! as if computed in roughly twice the working precision. Residual
//! certification near roots uses it.

use num_complex::Complex64;

/// Plain Horner, coefficients lowest power first.
pub fn eval(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    coeffs
        .iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
}

/// Value and first derivative in one pass.
pub fn eval_with_derivative(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// `sum |a_k| |z|^k`, the natural scale against which `|p(z)|` is compared.
pub fn abs_scale(coeffs: &[Complex64], z: Complex64) -> f64 {
    let r = z.norm();
    coeffs.iter().rev().fold(0.0, |acc, c| acc * r + c.norm())
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

/// Compensated Horner scheme for complex arguments.
pub fn eval_compensated(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    let mut hi = Complex64::new(0.0, 0.0);
    let mut lo = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        // hi * z, real part: hi.re*z.re - hi.im*z.im
        let (p1, e1) = two_prod(hi.re, z.re);
        let (p2, e2) = two_prod(-hi.im, z.im);
        let (re, e3) = two_sum(p1, p2);
        // imaginary part: hi.re*z.im + hi.im*z.re
        let (p3, e4) = two_prod(hi.re, z.im);
        let (p4, e5) = two_prod(hi.im, z.re);
        let (im, e6) = two_sum(p3, p4);
        let (re, e7) = two_sum(re, c.re);
        let (im, e8) = two_sum(im, c.im);
        let err = Complex64::new(e1 + e2 + e3 + e7, e4 + e5 + e6 + e8);
        lo = lo * z + err;
        hi = Complex64::new(re, im);
    }
    hi + lo
}

/// Coefficients of the `order`-th derivative.
pub fn derivative(coeffs: &[Complex64], order: usize) -> Vec<Complex64> {
    let mut out: Vec<Complex64> = coeffs.to_vec();
    for _ in 0..order {
        if out.is_empty() {
            break;
        }
        out = out
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| c * k as f64)
            .collect();
    }
    out
}
