//! Certified complex roots of non-negative integer polynomials.
//!
//! `find_roots` strips the `x^δ` factor exactly, runs Aberth–Ehrlich on the
//! remainder, polishes, enforces conjugate symmetry, groups multiple roots
//! into clusters and accepts the result only if every root's relative
//! residual `|p(z)| / sum |a_k| |z|^k` is at most the requested tolerance.

pub mod aberth;

use std::cmp::Ordering;
use std::f64::consts::PI;

use num_complex::Complex64;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact;
use crate::float17;
use crate::horner;
use crate::poly::IntPolynomial;

pub const DEFAULT_TOL: f64 = 1e-12;

/// Factor applied to `tol^(1/m)` when grouping approximations of an m-fold root.
pub const CLUSTER_FACTOR: f64 = 10.0;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Root {
    #[serde(with = "float17")]
    pub re: f64,
    #[serde(with = "float17")]
    pub im: f64,
    #[serde(with = "float17")]
    pub residual: f64,
    pub mult: usize,
}

impl Root {
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }

    pub fn modulus(&self) -> f64 {
        self.value().norm()
    }

    /// Argument in `(-pi, pi]`; the negative real axis maps to `pi`.
    pub fn arg(&self) -> f64 {
        principal_arg(self.value())
    }
}

/// `arg z` in `(-pi, pi]` with `arg(-r) = pi` even for a negative-zero
/// imaginary part.
pub fn principal_arg(z: Complex64) -> f64 {
    if z.im == 0.0 {
        if z.re < 0.0 {
            PI
        } else {
            0.0
        }
    } else {
        z.im.atan2(z.re)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootSet {
    pub schema: u32,
    pub polynomial: IntPolynomial,
    #[serde(with = "float17")]
    pub tol: f64,
    /// Nonzero roots, sorted by argument and then modulus.
    pub roots: Vec<Root>,
    /// Exact multiplicity of the root at the origin (δ).
    pub zero_mult: usize,
}

impl RootSet {
    /// Builds a set from known roots, computing residuals and the canonical order.
    pub fn from_parts(
        polynomial: IntPolynomial,
        tol: f64,
        zero_mult: usize,
        values: Vec<(Complex64, usize)>,
    ) -> RootSet {
        let (_, deflated) = polynomial.deflate_zero();
        let coeffs = deflated.to_complex_coeffs();
        let mut roots: Vec<Root> = values
            .into_iter()
            .map(|(z, mult)| Root {
                re: z.re,
                im: z.im,
                residual: relative_residual(&coeffs, z),
                mult,
            })
            .collect();
        sort_roots(&mut roots);
        RootSet {
            schema: 1,
            polynomial,
            tol,
            roots,
            zero_mult,
        }
    }

    /// Total number of roots counted with multiplicity; equals Δ.
    pub fn total_multiplicity(&self) -> usize {
        self.zero_mult + self.roots.iter().map(|r| r.mult).sum::<usize>()
    }

    /// Every root including zeros, each repeated by its multiplicity.
    pub fn expanded(&self) -> Vec<Complex64> {
        let mut out = vec![Complex64::new(0.0, 0.0); self.zero_mult];
        for r in &self.roots {
            out.extend(std::iter::repeat_n(r.value(), r.mult));
        }
        out
    }

    /// Nonzero roots each repeated by multiplicity.
    pub fn nonzero_expanded(&self) -> Vec<Complex64> {
        self.roots
            .iter()
            .flat_map(|r| std::iter::repeat_n(r.value(), r.mult))
            .collect()
    }

    pub fn max_modulus(&self) -> f64 {
        self.roots.iter().map(Root::modulus).fold(0.0, f64::max)
    }

    /// Radius of a disc around `roots[index]` that holds a true root, derived
    /// from the residual: `d |p / p'|` for simple roots and
    /// `(d m! |p| / |p^(m)|)^(1/m)` for an m-fold cluster. Never below a few ulps.
    pub fn error_radius(&self, index: usize) -> f64 {
        let root = &self.roots[index];
        let z = root.value();
        let (_, deflated) = self.polynomial.deflate_zero();
        let coeffs = deflated.to_complex_coeffs();
        let degree = coeffs.len().saturating_sub(1).max(1) as f64;
        let floor = 4.0 * f64::EPSILON * z.norm().max(1.0);
        let p = horner::eval_compensated(&coeffs, z).norm();
        if p == 0.0 {
            return floor;
        }
        let m = root.mult;
        let dm = horner::eval_compensated(&horner::derivative(&coeffs, m), z).norm();
        if dm == 0.0 {
            return f64::INFINITY;
        }
        let factorial: f64 = (1..=m).map(|k| k as f64).product();
        let r = if m == 1 {
            degree * p / dm
        } else {
            (degree * factorial * p / dm).powf(1.0 / m as f64)
        };
        r.max(floor)
    }

    /// Count of roots (with multiplicity, origin included) with `|z| < radius`,
    /// or `|z| <= radius` when `strict` is false.
    ///
    /// Roots within `tol` of the circle count as on it. A root farther than
    /// `tol` whose error disc still crosses the circle makes the count
    /// `Ambiguous` under strict counting.
    pub fn count_in_disk(&self, radius: f64, strict: bool) -> Result<usize> {
        let mut count = 0;
        if radius > 0.0 || (!strict && radius >= 0.0) {
            count += self.zero_mult;
        }
        let snap = self.tol * radius.max(1.0);
        for (i, r) in self.roots.iter().enumerate() {
            let gap = r.modulus() - radius;
            let inside = if gap.abs() <= snap {
                !strict
            } else {
                if strict && gap.abs() <= self.error_radius(i) {
                    return Err(Error::Ambiguous {
                        radius,
                        distance: gap.abs(),
                    });
                }
                gap < 0.0
            };
            if inside {
                count += r.mult;
            }
        }
        Ok(count)
    }

    /// Real roots (imaginary part exactly zero), as `(value, multiplicity)`.
    pub fn real_roots(&self) -> Vec<(f64, usize)> {
        self.roots
            .iter()
            .filter(|r| r.im == 0.0)
            .map(|r| (r.re, r.mult))
            .collect()
    }

    /// Number of negative real roots with multiplicity.
    pub fn negative_real_count(&self) -> usize {
        self.real_roots()
            .iter()
            .filter(|(x, _)| *x < 0.0)
            .map(|(_, m)| m)
            .sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("root sets serialize")
    }
}

/// Canonical order: argument in `(-pi, pi]`, then modulus.
pub fn sort_roots(roots: &mut [Root]) {
    roots.sort_by(|a, b| {
        a.arg()
            .total_cmp(&b.arg())
            .then(a.modulus().total_cmp(&b.modulus()))
    });
}

fn relative_residual(coeffs: &[Complex64], z: Complex64) -> f64 {
    let scale = horner::abs_scale(coeffs, z);
    if scale == 0.0 {
        return 0.0;
    }
    horner::eval_compensated(coeffs, z).norm() / scale
}

/// Bounding radius `max{(n - a)/a, a/(n - a)}` for the
/// deflated polynomial, with `n` its coefficient sum and `a` its leading
/// coefficient (evaluated in floating point). Falls back to Cauchy's radius
/// for single-term inputs.
fn start_radius(deflated: &IntPolynomial, coeffs: &[Complex64]) -> f64 {
    let c = deflated.to_f64_coeffs();
    let lead = *c.last().unwrap_or(&1.0);
    let rest: f64 = c[..c.len().saturating_sub(1)].iter().sum();
    if rest > 0.0 && lead.is_finite() && rest.is_finite() {
        (rest / lead).max(lead / rest)
    } else {
        aberth::cauchy_radius(coeffs)
    }
}

/// Locates all roots of `p` and certifies them against `tol`.
pub fn find_roots(p: &IntPolynomial, tol: f64) -> Result<RootSet> {
    if p.is_zero() {
        return Err(Error::InvalidArgument(
            "the zero polynomial has no root set".into(),
        ));
    }
    if !(tol > 0.0) || !tol.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let (zero_mult, deflated) = p.deflate_zero();
    let coeffs = deflated.to_complex_coeffs();
    if coeffs.iter().any(|c| !c.is_finite()) {
        return Err(Error::InvalidArgument(
            "coefficients exceed double precision range".into(),
        ));
    }
    let degree = coeffs.len() - 1;
    if degree == 0 {
        return Ok(RootSet::from_parts(p.clone(), tol, zero_mult, Vec::new()));
    }

    let radius = start_radius(&deflated, &coeffs);
    let outcome = aberth::solve(&coeffs, radius, aberth::MAX_SWEEPS);
    let deriv = horner::derivative(&coeffs, 1);
    let polished: Vec<Complex64> = outcome
        .roots
        .iter()
        .map(|&z| aberth::polish(&coeffs, &deriv, z, 8))
        .collect();

    let symmetric = symmetrize(polished.into_iter().map(|z| (z, 1)).collect());
    let clustered = cluster(&coeffs, symmetric, tol);
    let values = symmetrize(clustered);

    let set = RootSet::from_parts(p.clone(), tol, zero_mult, values);
    let certified = set.roots.iter().all(|r| r.residual <= tol);
    if !outcome.converged || !certified {
        return Err(Error::NonConvergence {
            sweeps: outcome.sweeps,
            partial: Box::new(set),
        });
    }
    if let Some(bad) = set.roots.iter().find(|r| r.im == 0.0 && r.re > 0.0) {
        // p > 0 on the positive axis, so this would be a solver defect
        return Err(Error::NonConvergence {
            sweeps: outcome.sweeps,
            partial: Box::new(RootSet {
                roots: vec![*bad],
                ..set
            }),
        });
    }
    Ok(set)
}

/// Pairs each approximation with the nearest approximation to its conjugate.
/// A point closer to its own mirror image than to any partner is snapped to
/// the real axis. Pairs are replaced by exact conjugates.
fn symmetrize(mut items: Vec<(Complex64, usize)>) -> Vec<(Complex64, usize)> {
    items.sort_by(|a, b| {
        a.0.re
            .total_cmp(&b.0.re)
            .then(a.0.im.abs().total_cmp(&b.0.im.abs()))
            .then(a.0.im.total_cmp(&b.0.im))
    });
    let n = items.len();
    let mut used = vec![false; n];
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        if used[i] {
            continue;
        }
        used[i] = true;
        let (z, m) = items[i];
        let mirror = z.conj();
        let partner = (0..n)
            .filter(|&j| !used[j] && items[j].1 == m)
            .min_by(|&a, &b| {
                (items[a].0 - mirror)
                    .norm()
                    .total_cmp(&(items[b].0 - mirror).norm())
            });
        let self_gap = 2.0 * z.im.abs();
        match partner {
            Some(j) if (items[j].0 - mirror).norm() < self_gap => {
                used[j] = true;
                let w = items[j].0;
                let re = 0.5 * (z.re + w.re);
                let im = 0.5 * (z.im.abs() + w.im.abs());
                out.push((Complex64::new(re, im), m));
                out.push((Complex64::new(re, -im), m));
            }
            _ => out.push((Complex64::new(z.re, 0.0), m)),
        }
    }
    out
}

/// Agglomerates approximations of multiple roots. Two groups merge when their
/// centroids are within `CLUSTER_FACTOR * tol^(1/m)` (m the merged size) and
/// the refined centre of the merged group still certifies at `tol`.
fn cluster(
    coeffs: &[Complex64],
    items: Vec<(Complex64, usize)>,
    tol: f64,
) -> Vec<(Complex64, usize)> {
    let mut groups: Vec<(Complex64, usize)> = items;
    let mut rejected: Vec<(usize, usize)> = Vec::new();
    loop {
        let mut best: Option<(usize, usize, f64)> = None;
        for a in 0..groups.len() {
            for b in a + 1..groups.len() {
                let m = groups[a].1 + groups[b].1;
                let d = (groups[a].0 - groups[b].0).norm();
                let limit = CLUSTER_FACTOR * tol.powf(1.0 / m as f64) * groups[a].0.norm().max(1.0);
                let fresh = !rejected.contains(&(a, b));
                if d <= limit && fresh && best.is_none_or(|(_, _, bd)| d < bd) {
                    best = Some((a, b, d));
                }
            }
        }
        let Some((a, b, _)) = best else {
            break;
        };
        let (za, ma) = groups[a];
        let (zb, mb) = groups[b];
        let m = ma + mb;
        let centroid = (za * ma as f64 + zb * mb as f64) / m as f64;
        let refined = refine_multiple(coeffs, centroid, m);
        if relative_residual(coeffs, refined) <= tol {
            groups[a] = (refined, m);
            groups.remove(b);
            rejected.clear();
        } else {
            rejected.push((a, b));
        }
    }
    groups
}

/// Newton on the (m-1)-th derivative, which has a simple root at an m-fold root.
fn refine_multiple(coeffs: &[Complex64], z: Complex64, m: usize) -> Complex64 {
    let q = horner::derivative(coeffs, m - 1);
    let dq = horner::derivative(&q, 1);
    let refined = aberth::polish(&q, &dq, z, 16);
    if relative_residual(coeffs, refined) <= relative_residual(coeffs, z) {
        refined
    } else {
        z
    }
}

/// Bisection with exact signs at every dyadic midpoint; returns the midpoint
/// of a bracket of width at most `tol`.
pub fn bisect_real_root(p: &IntPolynomial, lo: f64, hi: f64, tol: f64) -> Result<f64> {
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::NoSignChange { lo, hi });
    }
    let s_lo = exact::sign_at_f64(p, lo);
    let s_hi = exact::sign_at_f64(p, hi);
    if s_lo == Ordering::Equal || s_hi == Ordering::Equal || s_lo == s_hi {
        return Err(Error::NoSignChange { lo, hi });
    }
    let (mut lo, mut hi) = (lo, hi);
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        match exact::sign_at_f64(p, mid) {
            Ordering::Equal => return Ok(mid),
            s if s == s_lo => lo = mid,
            _ => hi = mid,
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Rational bisection; returns a bracket `[lo, hi]` of width at most `width`
/// holding a root. Either endpoint may itself be an exact root.
pub fn bisect_rational(
    p: &IntPolynomial,
    lo: &BigRational,
    hi: &BigRational,
    width: &BigRational,
) -> Result<(BigRational, BigRational)> {
    use num_traits::ToPrimitive;
    let fail = || Error::NoSignChange {
        lo: lo.to_f64().unwrap_or(f64::NAN),
        hi: hi.to_f64().unwrap_or(f64::NAN),
    };
    if lo >= hi {
        return Err(fail());
    }
    let s_lo = exact::sign_at(p, lo);
    let s_hi = exact::sign_at(p, hi);
    if s_lo == Ordering::Equal {
        return Ok((lo.clone(), lo.clone()));
    }
    if s_hi == Ordering::Equal {
        return Ok((hi.clone(), hi.clone()));
    }
    if s_lo == s_hi {
        return Err(fail());
    }
    let two = BigRational::from_integer(2.into());
    let (mut a, mut b) = (lo.clone(), hi.clone());
    while &(&b - &a) > width {
        let mid = (&a + &b) / &two;
        match exact::sign_at(p, &mid) {
            Ordering::Equal => return Ok((mid.clone(), mid)),
            s if s == s_lo => a = mid,
            _ => b = mid,
        }
    }
    Ok((a, b))
}
