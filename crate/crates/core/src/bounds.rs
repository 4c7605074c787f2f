//! Root-location bounds as checkable predicates with signed margins.
//!
//! A margin is the distance from a root to the violating side of a bound;
//! positive means satisfied. A root only counts as a violation when its margin
//! is below `-(BOUNDARY_SLACK + error radius)`.

use std::fmt;
use std::str::FromStr;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::float17;
use crate::poly::IntPolynomial;
use crate::rootfind::{Root, RootSet};

pub const BOUNDARY_SLACK: f64 = 1e-9;

/// Distance to `n - 1` below which a root counts as extremal.
pub const EXTREMAL_WINDOW: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundName {
    Lagrange,
    Annulus,
    EnestromKakeya,
    Imaginary,
    Conjecture,
}

impl BoundName {
    pub const ALL: [BoundName; 5] = [
        BoundName::Lagrange,
        BoundName::Annulus,
        BoundName::EnestromKakeya,
        BoundName::Imaginary,
        BoundName::Conjecture,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            BoundName::Lagrange => "lagrange",
            BoundName::Annulus => "annulus",
            BoundName::EnestromKakeya => "enestrom_kakeya",
            BoundName::Imaginary => "imaginary",
            BoundName::Conjecture => "conjecture",
        }
    }
}

impl fmt::Display for BoundName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BoundName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "lagrange" => Ok(BoundName::Lagrange),
            "annulus" => Ok(BoundName::Annulus),
            "enestrom_kakeya" | "enestrom-kakeya" | "ek" => Ok(BoundName::EnestromKakeya),
            "imaginary" => Ok(BoundName::Imaginary),
            "conjecture" => Ok(BoundName::Conjecture),
            other => Err(Error::parse(
                "bound",
                other,
                "expected lagrange, annulus, enestrom_kakeya, imaginary or conjecture",
            )),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub bound: BoundName,
    pub holds: bool,
    /// `+inf` (serialized as `null`) when no root is constrained.
    #[serde(with = "float17")]
    pub worst_margin: f64,
    pub witness: Option<Root>,
}

impl BoundReport {
    fn vacuous(bound: BoundName) -> BoundReport {
        BoundReport {
            bound,
            holds: true,
            worst_margin: f64::INFINITY,
            witness: None,
        }
    }
}

/// Folds per-root margins; `margin(root)` returns `None` for unconstrained roots.
fn report(bound: BoundName, rs: &RootSet, margin: impl Fn(&Root) -> Option<f64>) -> BoundReport {
    let mut out = BoundReport::vacuous(bound);
    for (i, root) in rs.roots.iter().enumerate() {
        let Some(m) = margin(root) else { continue };
        if m < -(BOUNDARY_SLACK + rs.error_radius(i)) || m.is_nan() {
            out.holds = false;
        }
        if m < out.worst_margin || m.is_nan() {
            out.worst_margin = m;
            out.witness = Some(*root);
        }
    }
    out
}

fn to_f64(c: &num_bigint::BigUint) -> f64 {
    c.to_f64().unwrap_or(f64::INFINITY)
}

/// `max{(n - a)/a, a/(n - a)}` with `a` the leading coefficient and `n` the
/// coefficient sum: every root of a polynomial with non-negative
/// coefficients lies in this disc.
pub fn lagrange_radius(p: &IntPolynomial) -> Result<f64> {
    if p.term_count() < 2 {
        return Err(Error::Degenerate("monomial: every root is 0"));
    }
    let a = to_f64(p.leading_coeff().expect("nonzero"));
    let n = to_f64(&p.coefficient_sum());
    Ok(((n - a) / a).max(a / (n - a)))
}

pub fn lagrange_check(rs: &RootSet) -> BoundReport {
    match lagrange_radius(&rs.polynomial) {
        Ok(r) => report(BoundName::Lagrange, rs, |z| Some(r - z.modulus())),
        Err(_) => BoundReport::vacuous(BoundName::Lagrange),
    }
}

/// `1/(n-1) <= |z| <= n-1` for every nonzero root.
pub fn annulus_check(rs: &RootSet, n: usize) -> BoundReport {
    if n < 2 {
        return report(BoundName::Annulus, rs, |_| Some(f64::NEG_INFINITY));
    }
    let outer = (n - 1) as f64;
    let inner = 1.0 / outer;
    report(BoundName::Annulus, rs, |z| {
        let m = z.modulus();
        Some((m - inner).min(outer - m))
    })
}

/// `(min a_{k-1}/a_k, max a_{k-1}/a_k)` over the coefficients of `p / x^δ`.
pub fn enestrom_kakeya_interval(p: &IntPolynomial) -> Result<(f64, f64)> {
    let (_, q) = p.deflate_zero();
    let coeffs = q.coeffs();
    if coeffs.len() < 2 {
        return Err(Error::Degenerate("constant after removing the zero root"));
    }
    if let Some(k) = coeffs.iter().position(num_traits::Zero::is_zero) {
        return Err(Error::ZeroCoefficient(k + p.min_degree().unwrap_or(0)));
    }
    let (mut lo, mut hi) = (f64::INFINITY, 0.0f64);
    for w in coeffs.windows(2) {
        let r = to_f64(&w[0]) / to_f64(&w[1]);
        lo = lo.min(r);
        hi = hi.max(r);
    }
    Ok((lo, hi))
}

/// Vacuous when the bound does not apply (gaps in the support).
pub fn enestrom_kakeya_check(rs: &RootSet) -> BoundReport {
    match enestrom_kakeya_interval(&rs.polynomial) {
        Ok((lo, hi)) => report(BoundName::EnestromKakeya, rs, |z| {
            let m = z.modulus();
            Some((m - lo).min(hi - m))
        }),
        Err(_) => BoundReport::vacuous(BoundName::EnestromKakeya),
    }
}

/// Roots on the imaginary axis satisfy `1/sqrt(n-1) <= |z| <= sqrt(n-1)`.
pub fn imaginary_bound_check(rs: &RootSet, n: usize) -> BoundReport {
    let outer = (n.saturating_sub(1) as f64).sqrt();
    let tol = rs.tol;
    report(BoundName::Imaginary, rs, |z| {
        let m = z.modulus();
        if z.re.abs() > tol * m.max(1.0) {
            return None;
        }
        if outer == 0.0 {
            return Some(f64::NEG_INFINITY);
        }
        Some((m - 1.0 / outer).min(outer - m))
    })
}

/// Radius of the conjectured region at argument `theta`.
pub fn conjecture_radius(n: usize, theta: f64) -> f64 {
    (n.saturating_sub(1) as f64).powf(theta.abs() / std::f64::consts::PI)
}

/// `min (n-1)^{|arg z|/pi} - |z|` over nonzero roots.
pub fn conjecture_margin(rs: &RootSet, n: usize) -> BoundReport {
    report(BoundName::Conjecture, rs, |z| {
        Some(conjecture_radius(n, z.arg()) - z.modulus())
    })
}

pub fn check(bound: BoundName, rs: &RootSet, n: usize) -> BoundReport {
    match bound {
        BoundName::Lagrange => lagrange_check(rs),
        BoundName::Annulus => annulus_check(rs, n),
        BoundName::EnestromKakeya => enestrom_kakeya_check(rs),
        BoundName::Imaginary => imaginary_bound_check(rs, n),
        BoundName::Conjecture => conjecture_margin(rs, n),
    }
}

/// `x^Δ + (n-1) x^(Δ-1)` for some `Δ >= 1`.
pub fn is_extremal_form(p: &IntPolynomial, n: usize) -> bool {
    let Some(d) = p.degree() else { return false };
    d >= 1
        && p.term_count() == 2
        && p.coeff(d) == 1u32.into()
        && p.coeff(d - 1) == (n as u64 - 1).into()
}

/// Outcome of the extremal-modulus scan for one polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExtremalScan {
    /// Some root has modulus within [`EXTREMAL_WINDOW`] of `n - 1`.
    pub hit: bool,
    pub extremal_form: bool,
    pub odd_order_even_degree: bool,
}

impl ExtremalScan {
    /// A hit occurs only for the extremal form with `n` odd and `Δ` even.
    pub fn consistent(&self) -> bool {
        !self.hit || (self.extremal_form && self.odd_order_even_degree)
    }
}

pub fn extremal_scan(rs: &RootSet, n: usize) -> ExtremalScan {
    let target = n.saturating_sub(1) as f64;
    let delta = rs.polynomial.degree().unwrap_or(0);
    ExtremalScan {
        hit: n >= 2
            && rs
                .roots
                .iter()
                .any(|r| (r.modulus() - target).abs() <= EXTREMAL_WINDOW),
        extremal_form: is_extremal_form(&rs.polynomial, n),
        odd_order_even_degree: n % 2 == 1 && delta.is_multiple_of(2),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootfind::{find_roots, DEFAULT_TOL};

    fn p(s: &str) -> IntPolynomial {
        s.parse().unwrap()
    }

    fn roots(s: &str) -> RootSet {
        find_roots(&p(s), DEFAULT_TOL).unwrap()
    }

    #[test]
    fn lagrange_examples() {
        assert_eq!(lagrange_radius(&p("x^4 + 3x^3 + x")).unwrap(), 4.0);
        assert_eq!(lagrange_radius(&p("x^3 + 3x")).unwrap(), 3.0);
        assert_eq!(lagrange_radius(&p("4x^3 + x^2")).unwrap(), 4.0);
        assert!(matches!(
            lagrange_radius(&p("3x^2")),
            Err(Error::Degenerate(_))
        ));
        assert!(lagrange_check(&roots("x^3 + 3x")).holds);
    }

    #[test]
    fn annulus_examples() {
        let r = annulus_check(&roots("x^4 + 4x^3"), 5);
        assert!(r.holds);
        assert!(r.worst_margin.abs() <= 1e-9);
        assert_eq!(r.witness.unwrap().re, -4.0);

        let r = annulus_check(&roots("2x + 1"), 3);
        assert!(r.holds);
        assert!(r.worst_margin.abs() <= 1e-12);

        let r = annulus_check(&roots("x^3 + 3x"), 4);
        assert!(r.holds);
        assert!((r.worst_margin - (3.0 - 3f64.sqrt())).abs() < 1e-12);

        // 1/3 < 1/(n-1) for n = 3 would violate
        assert!(!annulus_check(&roots("x + 3"), 3).holds);
    }

    #[test]
    fn enestrom_kakeya_examples() {
        assert_eq!(
            enestrom_kakeya_interval(&p("x^4 + x^3 + 2x^2 + x")).unwrap(),
            (0.5, 2.0)
        );
        assert_eq!(
            enestrom_kakeya_interval(&p("x^2 + x + 1")).unwrap(),
            (1.0, 1.0)
        );
        let h9: IntPolynomial = "x^8 + x^7 + x^6 + x^5 + 2x^4 + x^3 + x^2 + x"
            .parse()
            .unwrap();
        assert_eq!(enestrom_kakeya_interval(&h9).unwrap(), (0.5, 2.0));
        assert!(matches!(
            enestrom_kakeya_interval(&p("x^3 + 3x")),
            Err(Error::ZeroCoefficient(2))
        ));
        assert!(enestrom_kakeya_check(&roots("x^3 + 3x"))
            .worst_margin
            .is_infinite());
    }

    #[test]
    fn imaginary_examples() {
        let r = imaginary_bound_check(&roots("x^3 + 3x"), 4);
        assert!(r.holds);
        assert!(r.worst_margin.abs() <= 1e-12);

        let r = imaginary_bound_check(&roots("x^5 + x^4 + 2x^3 + x^2 + x"), 6);
        assert!(r.holds);
        assert!((r.worst_margin - (1.0 - 1.0 / 5f64.sqrt())).abs() < 1e-12);

        let r = imaginary_bound_check(&roots("x^4 + 3x^3 + x"), 5);
        assert!(r.holds);
        assert!(r.witness.is_none());
    }

    #[test]
    fn conjecture_examples() {
        for n in 3..=12usize {
            let star = format!("x^{} + {}x", n - 1, n - 1);
            let r = conjecture_margin(&roots(&star), n);
            assert!(r.holds, "{star}");
            assert!(r.worst_margin.abs() <= 1e-9, "{star}: {}", r.worst_margin);
        }
        let r = conjecture_margin(&roots("x^4 + 4x^3"), 5);
        assert!(r.worst_margin.abs() <= 1e-12);

        let r = conjecture_margin(&roots("x^7 + 6x^6 + x"), 8);
        assert!(r.holds);
        assert!(r.worst_margin > 0.0);
    }

    #[test]
    fn conjecture_radius_monotone() {
        for n in 2..20 {
            let mut last = 0.0;
            for i in 0..=100 {
                let r = conjecture_radius(n, std::f64::consts::PI * i as f64 / 100.0);
                assert!(r >= last);
                last = r;
            }
        }
    }

    #[test]
    fn extremal_scan_examples() {
        let s = extremal_scan(&roots("x^4 + 4x^3"), 5);
        assert!(s.hit && s.extremal_form && s.odd_order_even_degree && s.consistent());
        let s = extremal_scan(&roots("x^4 + 3x^3 + x"), 5);
        assert!(!s.hit && s.consistent());
    }

    #[test]
    fn report_json() {
        let r = enestrom_kakeya_check(&roots("x^3 + 3x"));
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(
            json,
            r#"{"bound":"enestrom_kakeya","holds":true,"worst_margin":null,"witness":null}"#
        );
        let back: BoundReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
        for b in BoundName::ALL {
            assert_eq!(b.to_string().parse::<BoundName>().unwrap(), b);
        }
    }
}
