//! Exact sign evaluation of integer polynomials at rational points.

use std::cmp::Ordering;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::poly::IntPolynomial;

/// `p(a/b) * b^deg` as an exact integer; same sign as `p(a/b)` because `b > 0`.
pub fn scaled_value(p: &IntPolynomial, x: &BigRational) -> BigInt {
    let Some(deg) = p.degree() else {
        return BigInt::zero();
    };
    let num = x.numer();
    let den = x.denom();
    // Horner on the homogenised form: acc = acc * num + a_k * den^(deg - k)
    let mut acc = BigInt::zero();
    let mut den_pow = BigInt::one();
    let mut terms: Vec<BigInt> = Vec::with_capacity(deg + 1);
    for k in (0..=deg).rev() {
        let a = BigInt::from_biguint(Sign::Plus, p.coeff(k));
        terms.push(a * &den_pow);
        den_pow *= den;
    }
    // terms[i] corresponds to power deg - i and carries den^i
    for t in terms {
        acc = acc * num + t;
    }
    acc
}

pub fn sign_at(p: &IntPolynomial, x: &BigRational) -> Ordering {
    let v = scaled_value(p, x);
    if v.is_zero() {
        Ordering::Equal
    } else if v.is_positive() {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

/// Exact sign at a finite `f64`, which is a dyadic rational.
pub fn sign_at_f64(p: &IntPolynomial, x: f64) -> Ordering {
    let r = BigRational::from_float(x).expect("finite input");
    sign_at(p, &r)
}

pub fn value_at(p: &IntPolynomial, x: &BigRational) -> BigRational {
    let deg = p.degree().unwrap_or(0);
    let scale = num_traits::pow(x.denom().clone(), deg);
    BigRational::new(scaled_value(p, x), scale)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn exact_values() {
        let p: IntPolynomial = "x^3 + 3x^2 + 1".parse().unwrap();
        // (-3)^3 + 3*9 + 1 = 1
        assert_eq!(value_at(&p, &rat(-3, 1)), rat(1, 1));
        // (-1/2)^3 + 3/4 + 1 = 13/8
        assert_eq!(value_at(&p, &rat(-1, 2)), rat(13, 8));
        assert_eq!(sign_at(&p, &rat(-28, 9)), Ordering::Less);
        let q: IntPolynomial = "x^2 + 2x + 1".parse().unwrap();
        assert_eq!(sign_at_f64(&q, -1.0), Ordering::Equal);
        assert_eq!(sign_at_f64(&IntPolynomial::zero(), 3.0), Ordering::Equal);
    }
}
