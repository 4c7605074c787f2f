//! Limits of zeros for families `sum_i alpha_i(N; x) lambda_i(x)^N`, where each
//! `alpha_i` is a polynomial in `N` whose coefficients are polynomials in `x`.
//!
//! Only the sufficient direction is implemented: a point is reported as a limit
//! when one of the two classical conditions holds there. Whether every limit
//! point is caught this way cannot be decided from finite data.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact;
use crate::families::{anti_regular_even_angles, FamilySpec};
use crate::horner;
use crate::rootfind::{aberth, bisect_rational, find_roots, DEFAULT_TOL};

/// Relative tolerance for `|lambda_i(z)| = |lambda_j(z)|` on a sample grid.
pub const TIE_TOL: f64 = 1e-6;

#[derive(Clone, Debug, PartialEq)]
pub struct BkwTerm {
    /// Coefficients of `lambda(x)`, lowest power first.
    pub lambda: Vec<f64>,
    /// `alpha[j]` is `p_j(x)`, the coefficient of `N^j`; the last entry is the
    /// top coefficient `p_d`.
    pub alpha: Vec<Vec<f64>>,
}

impl BkwTerm {
    fn lambda_at(&self, z: Complex64) -> Complex64 {
        horner::eval(&complexify(&self.lambda), z)
    }

    fn top_at(&self, z: Complex64) -> Complex64 {
        horner::eval(&complexify(self.alpha.last().expect("validated")), z)
    }
}

fn complexify(c: &[f64]) -> Vec<Complex64> {
    c.iter().map(|&v| Complex64::new(v, 0.0)).collect()
}

fn is_zero_poly(c: &[f64]) -> bool {
    c.iter().all(|&v| v == 0.0)
}

fn trim(mut c: Vec<f64>) -> Vec<f64> {
    while c.len() > 1 && c.last() == Some(&0.0) {
        c.pop();
    }
    c
}

#[derive(Clone, Debug, PartialEq)]
pub struct BkwForm {
    pub name: String,
    pub terms: Vec<BkwTerm>,
}

/// Sample points used for the numeric non-degeneracy check.
const PROBES: [(f64, f64); 4] = [(0.37, 0.21), (-1.3, 0.8), (0.9, -1.7), (2.1, 0.45)];

impl BkwForm {
    /// `D(CL_n)/x = x^N (x + N + 1) + 1` with `N = n - 3`.
    pub fn complete_with_leaf() -> BkwForm {
        BkwForm {
            name: "cl".into(),
            terms: vec![
                BkwTerm {
                    lambda: vec![0.0, 1.0],
                    alpha: vec![vec![1.0, 1.0], vec![1.0]],
                },
                BkwTerm {
                    lambda: vec![1.0],
                    alpha: vec![vec![1.0]],
                },
            ],
        }
    }

    /// `(1 - x) D(H_{2N})`.
    pub fn anti_regular_even() -> BkwForm {
        Self::anti_regular("h-even", vec![-1.0])
    }

    /// `(1 - x) D(H_{2N+1})`.
    pub fn anti_regular_odd() -> BkwForm {
        Self::anti_regular("h-odd", vec![0.0, -1.0])
    }

    fn anti_regular(name: &str, alpha1: Vec<f64>) -> BkwForm {
        BkwForm {
            name: name.into(),
            terms: vec![
                BkwTerm {
                    lambda: vec![0.0, 0.0, 1.0],
                    alpha: vec![alpha1],
                },
                BkwTerm {
                    lambda: vec![0.0, 1.0],
                    alpha: vec![vec![1.0, -1.0]],
                },
                BkwTerm {
                    lambda: vec![1.0],
                    alpha: vec![vec![0.0, 1.0]],
                },
            ],
        }
    }

    pub fn builtin(name: &str) -> Option<BkwForm> {
        match name {
            "cl" => Some(Self::complete_with_leaf()),
            "h-even" => Some(Self::anti_regular_even()),
            "h-odd" => Some(Self::anti_regular_odd()),
            _ => None,
        }
    }

    /// Rejects empty forms, zero `lambda`s, zero top coefficients, and pairs
    /// with `lambda_i = omega lambda_j` for a constant `|omega| = 1`.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::DegenerateForm(msg));
        if self.terms.is_empty() {
            return bad("no terms".into());
        }
        for (i, t) in self.terms.iter().enumerate() {
            if is_zero_poly(&t.lambda) {
                return bad(format!("lambda_{} is identically zero", i + 1));
            }
            match t.alpha.last() {
                Some(top) if !is_zero_poly(top) => {}
                _ => return bad(format!("alpha_{} has a zero top coefficient", i + 1)),
            }
        }
        for i in 0..self.terms.len() {
            for j in i + 1..self.terms.len() {
                let ratios: Vec<Complex64> = PROBES
                    .iter()
                    .map(|&(re, im)| {
                        let z = Complex64::new(re, im);
                        self.terms[i].lambda_at(z) / self.terms[j].lambda_at(z)
                    })
                    .collect();
                let w = ratios[0];
                let constant = ratios
                    .iter()
                    .all(|r| (r - w).norm() <= 1e-9 * w.norm().max(1.0));
                if constant && (w.norm() - 1.0).abs() <= 1e-9 {
                    return bad(format!(
                        "lambda_{} is a unimodular multiple of lambda_{}",
                        i + 1,
                        j + 1
                    ));
                }
            }
        }
        Ok(())
    }

    /// Coefficients (lowest power first) of `sum_i alpha_i(N; x) lambda_i(x)^N`.
    pub fn instance(&self, big_n: usize) -> Vec<f64> {
        let mut out = vec![0.0];
        for t in &self.terms {
            let mut power = vec![1.0];
            for _ in 0..big_n {
                power = poly_mul(&power, &t.lambda);
            }
            let mut alpha = vec![0.0];
            let mut n_pow = 1.0;
            for p in &t.alpha {
                alpha = poly_add(&alpha, &p.iter().map(|c| c * n_pow).collect::<Vec<_>>());
                n_pow *= big_n as f64;
            }
            out = poly_add(&out, &poly_mul(&alpha, &power));
        }
        trim(out)
    }

    /// Roots of [`Self::instance`], found by Aberth iteration and Newton polishing.
    pub fn instance_roots(&self, big_n: usize) -> Vec<Complex64> {
        let coeffs = complexify(&self.instance(big_n));
        let leading_zeros = coeffs.iter().take_while(|c| c.norm() == 0.0).count();
        let deflated = &coeffs[leading_zeros..];
        let out = aberth::solve(
            deflated,
            aberth::cauchy_radius(deflated),
            aberth::MAX_SWEEPS,
        );
        let deriv = horner::derivative(deflated, 1);
        let mut roots = vec![Complex64::new(0.0, 0.0); leading_zeros];
        roots.extend(
            out.roots
                .into_iter()
                .map(|z| aberth::polish(deflated, &deriv, z, 8)),
        );
        roots
    }

    /// `|F_N(z)| / sum_k |c_k| |z|^k` over the expanded coefficients `c_k`.
    pub fn relative_residual(&self, z: Complex64, big_n: usize) -> f64 {
        let coeffs = complexify(&self.instance(big_n));
        let scale = horner::abs_scale(&coeffs, z);
        if scale == 0.0 {
            0.0
        } else {
            horner::eval_compensated(&coeffs, z).norm() / scale
        }
    }
}

fn poly_mul(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] += y;
    }
    out
}

impl FromStr for BkwForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BkwForm::builtin(s.trim())
            .ok_or_else(|| Error::parse("limit form", s.trim(), "expected cl, h-even or h-odd"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LimitClass {
    NotLimit,
    /// A unique dominant `lambda` whose top coefficient vanishes.
    Cond1,
    /// Two or more dominant `lambda`s of equal modulus, one with a nonzero top coefficient.
    Cond2,
}

impl fmt::Display for LimitClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LimitClass::NotLimit => "not_limit",
            LimitClass::Cond1 => "cond1",
            LimitClass::Cond2 => "cond2",
        })
    }
}

/// Terms whose `|lambda(z)|` is within relative `tol` of the maximum, and the maximum.
fn dominant(form: &BkwForm, z: Complex64, tol: f64) -> (Vec<usize>, f64) {
    let moduli: Vec<f64> = form.terms.iter().map(|t| t.lambda_at(z).norm()).collect();
    let max = moduli.iter().copied().fold(0.0, f64::max);
    let tied = (0..moduli.len())
        .filter(|&i| moduli[i] >= max * (1.0 - tol))
        .collect();
    (tied, max)
}

pub fn bkw_classify(form: &BkwForm, z: Complex64, tol: f64) -> Result<LimitClass> {
    let (tied, max) = dominant(form, z, tol);
    if max == 0.0 {
        return Err(Error::DegenerateForm(format!(
            "every lambda vanishes at {z}"
        )));
    }
    let top_zero = |i: usize| form.terms[i].top_at(z).norm() <= tol;
    Ok(match tied.as_slice() {
        [only] if top_zero(*only) => LimitClass::Cond1,
        [_] => LimitClass::NotLimit,
        many if many.iter().any(|&i| !top_zero(i)) => LimitClass::Cond2,
        _ => LimitClass::NotLimit,
    })
}

/// A rectangle `[re_min, re_max] x [im_min, im_max]` sampled at `res` points
/// per axis, endpoints included.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Grid {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
    pub res: usize,
}

impl Grid {
    pub fn square(half_width: f64, res: usize) -> Grid {
        Grid {
            re_min: -half_width,
            re_max: half_width,
            im_min: -half_width,
            im_max: half_width,
            res,
        }
    }

    fn step(&self) -> (f64, f64) {
        let d = (self.res.max(2) - 1) as f64;
        (
            (self.re_max - self.re_min) / d,
            (self.im_max - self.im_min) / d,
        )
    }

    /// Larger of the two cell sides.
    pub fn cell(&self) -> f64 {
        let (a, b) = self.step();
        a.max(b)
    }

    pub fn point(&self, i: usize, j: usize) -> Complex64 {
        let (dx, dy) = self.step();
        Complex64::new(self.re_min + i as f64 * dx, self.im_min + j as f64 * dy)
    }

    fn nearest(&self, z: Complex64) -> Option<(usize, usize)> {
        let (dx, dy) = self.step();
        let inside = z.re >= self.re_min - dx / 2.0
            && z.re <= self.re_max + dx / 2.0
            && z.im >= self.im_min - dy / 2.0
            && z.im <= self.im_max + dy / 2.0;
        if !inside || self.res == 0 {
            return None;
        }
        let i = ((z.re - self.re_min) / dx)
            .round()
            .clamp(0.0, (self.res - 1) as f64) as usize;
        let j = ((z.im - self.im_min) / dy)
            .round()
            .clamp(0.0, (self.res - 1) as f64) as usize;
        Some((i, j))
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LimitPoint {
    pub z: Complex64,
    pub class: LimitClass,
}

/// Grid points classified as limits.
///
/// Equal moduli almost never fall exactly on a grid point, so besides direct
/// classification at [`TIE_TOL`], a point is `Cond2` when the dominant term
/// changes between it and a horizontal or vertical neighbour and it is the
/// endpoint nearer the tie. `Cond1` points are the grid points nearest the
/// zeros of a dominant top coefficient. Output is in row-major order.
pub fn limit_set_sample(form: &BkwForm, grid: &Grid) -> Result<Vec<LimitPoint>> {
    form.validate()?;
    let res = grid.res;
    if res == 0 {
        return Ok(Vec::new());
    }
    // dominant index and log-ratio gap to the runner-up, per grid point
    let info: Vec<Vec<(usize, f64, LimitClass)>> = (0..res)
        .into_par_iter()
        .map(|j| {
            (0..res)
                .map(|i| {
                    let z = grid.point(i, j);
                    let mut m: Vec<(f64, usize)> = form
                        .terms
                        .iter()
                        .enumerate()
                        .map(|(k, t)| (t.lambda_at(z).norm(), k))
                        .collect();
                    m.sort_by(|a, b| b.0.total_cmp(&a.0).then(a.1.cmp(&b.1)));
                    let gap = if m.len() > 1 {
                        (m[0].0 / m[1].0).ln().abs()
                    } else {
                        f64::INFINITY
                    };
                    let class = bkw_classify(form, z, TIE_TOL).unwrap_or(LimitClass::NotLimit);
                    (m[0].1, gap, class)
                })
                .collect()
        })
        .collect();

    let mut class = vec![vec![LimitClass::NotLimit; res]; res];
    for j in 0..res {
        for i in 0..res {
            class[j][i] = info[j][i].2;
        }
    }
    let mut flip = |a: (usize, usize), b: (usize, usize)| {
        let (ia, ja) = a;
        let (ib, jb) = b;
        let (da, ga, _) = info[ja][ia];
        let (db, gb, _) = info[jb][ib];
        if da == db {
            return;
        }
        let (i, j) = if ga <= gb { a } else { b };
        let z = grid.point(i, j);
        let top_nonzero = [da, db]
            .iter()
            .any(|&k| form.terms[k].top_at(z).norm() > TIE_TOL);
        if top_nonzero && class[j][i] == LimitClass::NotLimit {
            class[j][i] = LimitClass::Cond2;
        }
    };
    for j in 0..res {
        for i in 0..res {
            if i + 1 < res {
                flip((i, j), (i + 1, j));
            }
            if j + 1 < res {
                flip((i, j), (i, j + 1));
            }
        }
    }
    for t in &form.terms {
        let top = complexify(&trim(t.alpha.last().expect("validated").clone()));
        if top.len() < 2 {
            continue;
        }
        let zeros = aberth::solve(&top, aberth::cauchy_radius(&top), aberth::MAX_SWEEPS).roots;
        for r in zeros {
            if bkw_classify(form, r, TIE_TOL)? != LimitClass::Cond1 {
                continue;
            }
            if let Some((i, j)) = grid.nearest(r) {
                class[j][i] = LimitClass::Cond1;
            }
        }
    }

    let mut out = Vec::new();
    for (j, row) in class.iter().enumerate() {
        for (i, &c) in row.iter().enumerate() {
            if c != LimitClass::NotLimit {
                out.push(LimitPoint {
                    z: grid.point(i, j),
                    class: c,
                });
            }
        }
    }
    Ok(out)
}

/// Interval holding the large negative root of `D(CL_n)`, certified by exact
/// signs at its endpoints, and a refined root inside it.
#[derive(Clone, Debug, PartialEq)]
pub struct ClLocation {
    pub n: usize,
    pub lo: BigRational,
    pub hi: BigRational,
    /// Even `n`: the interval is `(lo, hi]`; odd `n`: `(lo, hi)`.
    pub closed_right: bool,
    /// Rational bracket of width at most `tol * |root|` inside the interval.
    pub bracket: (BigRational, BigRational),
    pub root: f64,
    /// Even `n`: the root of `D(CL_n)/x` in `[-1, 0)`.
    pub second_root: Option<f64>,
}

impl ClLocation {
    /// Interval endpoints rounded to the nearest `f64`.
    pub fn bounds_f64(&self) -> (f64, f64) {
        (
            self.lo.to_f64().unwrap_or(f64::NAN),
            self.hi.to_f64().unwrap_or(f64::NAN),
        )
    }

    /// Exact test that the root held by the bracket lies inside the interval.
    /// A proper bracket holds its root strictly between its ends; a point
    /// bracket is the root itself.
    pub fn bracket_inside(&self) -> bool {
        let (a, b) = &self.bracket;
        if a == b {
            a > &self.lo && (a < &self.hi || (self.closed_right && a == &self.hi))
        } else {
            a >= &self.lo && b <= &self.hi
        }
    }
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn locate_cl_negative_root(n: usize, tol: f64) -> Result<ClLocation> {
    if n < 4 {
        return Err(Error::InvalidArgument(format!("need n >= 4, got {n}")));
    }
    let p = FamilySpec::CompleteWithLeaf { n }.degree_poly()?;
    let (_, q) = p.deflate_zero();
    let m = rat(n as i64 - 2);
    let odd = n % 2 == 1;
    let (lo, hi) = if odd {
        let eps = BigRational::one() / num_traits::pow(m.clone(), n - 3);
        (-&m - eps, -m)
    } else {
        let eps = BigRational::one() / num_traits::pow(rat(n as i64 - 3), n - 3);
        (-&m, -m + eps)
    };
    let s_lo = exact::sign_at(&q, &lo);
    let s_hi = exact::sign_at(&q, &hi);
    let certified = s_lo != Ordering::Equal
        && if odd {
            s_hi != Ordering::Equal && s_hi != s_lo
        } else {
            s_hi != s_lo
        };
    if !certified {
        return Err(Error::IntervalCertificate(n));
    }
    let width = BigRational::from_float(tol * (n as f64 - 2.0)).unwrap_or_else(BigRational::one);
    let bracket = bisect_rational(&q, &lo, &hi, &width)?;
    let root = ((&bracket.0 + &bracket.1) / rat(2))
        .to_f64()
        .unwrap_or(f64::NAN);

    let second_root = if odd {
        None
    } else {
        let (a, b) = bisect_rational(
            &q,
            &rat(-1),
            &BigRational::from_integer(0.into()),
            &BigRational::from_float(tol).unwrap_or_else(BigRational::one),
        )?;
        Some(((a + b) / rat(2)).to_f64().unwrap_or(f64::NAN))
    };
    Ok(ClLocation {
        n,
        lo,
        hi,
        closed_right: !odd,
        bracket,
        root,
        second_root,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CircleFamily {
    CompleteWithLeaf,
    AntiRegular,
}

/// Worst distance to the unit circle among non-real roots with `|z| < 1 + tol`,
/// leaving out the origin and isolated real roots left of `-1`.
/// Even anti-regular graphs use their closed-form roots.
pub fn circle_convergence_metric(family: CircleFamily, n: usize) -> Result<f64> {
    if n < 5 {
        return Err(Error::InvalidArgument(format!("need n >= 5, got {n}")));
    }
    let spec = match family {
        CircleFamily::AntiRegular if n.is_multiple_of(2) => {
            // Every closed-form root is a root of unity or of -1.
            let count: usize = anti_regular_even_angles(n / 2).iter().map(|(_, m)| m).sum();
            debug_assert_eq!(count, n - 2);
            return Ok(0.0);
        }
        CircleFamily::AntiRegular => FamilySpec::AntiRegular { n },
        CircleFamily::CompleteWithLeaf => FamilySpec::CompleteWithLeaf { n },
    };
    let rs = find_roots(&spec.degree_poly()?, DEFAULT_TOL)?;
    Ok(rs
        .roots
        .iter()
        .filter(|r| !(r.im.abs() < 1e-9 && r.re < -1.0))
        .filter(|r| r.im != 0.0 && r.modulus() < 1.0 + rs.tol)
        .map(|r| (1.0 - r.modulus()).abs())
        .fold(0.0, f64::max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::IntPolynomial;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn classify_examples() {
        let cl = BkwForm::complete_with_leaf();
        let on_circle = Complex64::from_polar(1.0, 0.7);
        assert_eq!(
            bkw_classify(&cl, on_circle, 1e-9).unwrap(),
            LimitClass::Cond2
        );
        assert_eq!(
            bkw_classify(&cl, c(2.0, 0.0), 1e-9).unwrap(),
            LimitClass::NotLimit
        );
        let he = BkwForm::anti_regular_even();
        assert_eq!(
            bkw_classify(&he, c(0.5, 0.0), 1e-9).unwrap(),
            LimitClass::NotLimit
        );
        assert_eq!(
            bkw_classify(&he, c(0.0, 0.0), 1e-9).unwrap(),
            LimitClass::Cond1
        );
    }

    #[test]
    fn classify_rings() {
        let cl = BkwForm::complete_with_leaf();
        for k in 0..360 {
            let theta = k as f64 * std::f64::consts::PI / 180.0;
            for r in [0.55, 0.8, 0.94, 1.06, 1.5, 1.99] {
                let z = Complex64::from_polar(r, theta);
                assert_eq!(bkw_classify(&cl, z, TIE_TOL).unwrap(), LimitClass::NotLimit);
            }
        }
    }

    #[test]
    fn degenerate_forms() {
        let mut f = BkwForm::complete_with_leaf();
        f.terms[1].lambda = vec![0.0, -1.0];
        assert!(matches!(f.validate(), Err(Error::DegenerateForm(_))));
        let mut f = BkwForm::complete_with_leaf();
        f.terms[0].lambda = vec![0.0];
        assert!(f.validate().is_err());
        let f = BkwForm {
            name: "x".into(),
            terms: vec![BkwTerm {
                lambda: vec![0.0, 1.0],
                alpha: vec![vec![1.0]],
            }],
        };
        assert!(matches!(
            bkw_classify(&f, c(0.0, 0.0), 1e-9),
            Err(Error::DegenerateForm(_))
        ));
    }

    #[test]
    fn instances_match_families() {
        let to_f = |p: &IntPolynomial| p.to_f64_coeffs();
        for n in 4..=12 {
            let cl = FamilySpec::CompleteWithLeaf { n }.degree_poly().unwrap();
            assert_eq!(
                BkwForm::complete_with_leaf().instance(n - 3),
                to_f(&cl.deflate_zero().1)
            );
        }
        for k in 2..=8usize {
            // (1 - x) D(H_n) with real coefficients
            for (form, n) in [
                (BkwForm::anti_regular_even(), 2 * k),
                (BkwForm::anti_regular_odd(), 2 * k + 1),
            ] {
                let h = to_f(&FamilySpec::AntiRegular { n }.degree_poly().unwrap());
                let expected = poly_mul(&[1.0, -1.0], &h);
                assert_eq!(form.instance(k), trim(expected), "{} {k}", form.name);
            }
        }
    }

    #[test]
    fn far_grid_is_empty() {
        let grid = Grid {
            re_min: 5.0,
            re_max: 6.0,
            im_min: 0.0,
            im_max: 1.0,
            res: 50,
        };
        for name in ["cl", "h-even", "h-odd"] {
            let form = BkwForm::builtin(name).unwrap();
            assert!(limit_set_sample(&form, &grid).unwrap().is_empty());
        }
    }

    #[test]
    fn small_grid_hugs_circle() {
        let grid = Grid::square(2.0, 81);
        for name in ["cl", "h-even", "h-odd"] {
            let form = BkwForm::builtin(name).unwrap();
            let pts = limit_set_sample(&form, &grid).unwrap();
            assert!(pts.len() > 50);
            for p in pts {
                match p.class {
                    LimitClass::Cond2 => assert!((p.z.norm() - 1.0).abs() <= grid.cell()),
                    LimitClass::Cond1 => assert!(p.z.norm() <= grid.cell()),
                    LimitClass::NotLimit => unreachable!(),
                }
            }
        }
    }

    #[test]
    fn cl_location_examples() {
        let loc = locate_cl_negative_root(5, 1e-12).unwrap();
        assert_eq!(loc.lo, BigRational::new((-28).into(), 9.into()));
        assert_eq!(loc.hi, rat(-3));
        assert!((loc.root + 3.1038034).abs() < 1e-6);
        assert!(loc.second_root.is_none());

        let loc = locate_cl_negative_root(4, 1e-12).unwrap();
        assert_eq!(loc.root, -1.0);
        assert_eq!(loc.second_root, Some(-1.0));

        let loc = locate_cl_negative_root(6, 1e-12).unwrap();
        assert_eq!(loc.lo, rat(-4));
        assert_eq!(loc.hi, rat(-4) + BigRational::new(1.into(), 27.into()));
        assert!(loc.root > -4.0 && loc.root <= -4.0 + 1.0 / 27.0);
        let s = loc.second_root.unwrap();
        assert!((-1.0..0.0).contains(&s));

        for n in 4..=40 {
            locate_cl_negative_root(n, 1e-12).unwrap();
        }
        for n in 4..=40 {
            assert!(
                locate_cl_negative_root(n, 1e-12).unwrap().bracket_inside(),
                "n = {n}"
            );
        }
        assert!(locate_cl_negative_root(3, 1e-12).is_err());
    }

    #[test]
    fn convergence_metric() {
        let m20 = circle_convergence_metric(CircleFamily::CompleteWithLeaf, 20).unwrap();
        let m50 = circle_convergence_metric(CircleFamily::CompleteWithLeaf, 50).unwrap();
        assert!(m50 < m20, "{m50} {m20}");
        assert_eq!(
            circle_convergence_metric(CircleFamily::AntiRegular, 30).unwrap(),
            0.0
        );
        let o21 = circle_convergence_metric(CircleFamily::AntiRegular, 21).unwrap();
        let o41 = circle_convergence_metric(CircleFamily::AntiRegular, 41).unwrap();
        assert!(o41 < o21, "{o41} {o21}");
    }

    #[test]
    fn large_instances_near_limit_set() {
        for (name, big_n) in [("cl", 40), ("h-even", 40), ("h-odd", 40)] {
            let form = BkwForm::builtin(name).unwrap();
            for z in form.instance_roots(big_n) {
                let near_circle = (z.norm() - 1.0).abs() <= 0.2;
                let near_origin = z.norm() <= 0.2;
                let isolated = name == "cl" && (z - c(-(big_n as f64) - 1.0, 0.0)).norm() <= 0.2;
                assert!(near_circle || near_origin || isolated, "{name}: {z}");
                assert!(form.relative_residual(z, big_n) <= 1e-10, "{name}: {z}");
            }
        }
    }
}
