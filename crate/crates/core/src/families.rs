//! Named graph families, their degree polynomials, explicit realizations and
//! closed-form roots.

use std::collections::BTreeSet;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_complex::Complex64;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::graphical::{erdos_gallai, havel_hakimi_realize, GraphEdgeList};
use crate::poly::IntPolynomial;
use crate::rootfind::{principal_arg, RootSet, DEFAULT_TOL};
use crate::sequence::DegreeSequence;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// `K_{n-1}` with a pendant leaf.
    CompleteWithLeaf { n: usize },
    /// Connected anti-regular graph `H_n`, degrees `1..n-1` with `floor(n/2)` repeated.
    AntiRegular { n: usize },
    /// Its complement, degrees `0..n-2`.
    AntiRegularComplement { n: usize },
    /// `K_{1,n-1}`.
    Star { n: usize },
    /// `a_hi` vertices of degree `hi` and `a_lo` of degree `lo`.
    TwoDegree {
        a_hi: u64,
        hi: u64,
        a_lo: u64,
        lo: u64,
    },
    /// One vertex of degree `delta`, `n - 1` of degree `delta - 1`.
    FGraph { n: usize, delta: usize },
    /// `K_{n-1}` minus a perfect matching, plus a universal vertex (`n` odd).
    MatchingComplete { n: usize },
    /// `P_3` plus `(n-3)/2` copies of `P_2` (`n` odd).
    PathUnion { n: usize },
}

impl FamilySpec {
    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::CompleteWithLeaf { n }
            | FamilySpec::AntiRegular { n }
            | FamilySpec::AntiRegularComplement { n }
            | FamilySpec::Star { n }
            | FamilySpec::FGraph { n, .. }
            | FamilySpec::MatchingComplete { n }
            | FamilySpec::PathUnion { n } => n,
            FamilySpec::TwoDegree { a_hi, a_lo, .. } => (a_hi + a_lo) as usize,
        }
    }

    /// The same family at a different order, where that makes sense.
    pub fn with_order(&self, n: usize) -> Option<FamilySpec> {
        Some(match *self {
            FamilySpec::CompleteWithLeaf { .. } => FamilySpec::CompleteWithLeaf { n },
            FamilySpec::AntiRegular { .. } => FamilySpec::AntiRegular { n },
            FamilySpec::AntiRegularComplement { .. } => FamilySpec::AntiRegularComplement { n },
            FamilySpec::Star { .. } => FamilySpec::Star { n },
            FamilySpec::MatchingComplete { .. } => FamilySpec::MatchingComplete { n },
            FamilySpec::PathUnion { .. } => FamilySpec::PathUnion { n },
            FamilySpec::TwoDegree { .. } | FamilySpec::FGraph { .. } => {
                return (n == self.order()).then_some(*self);
            }
        })
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidSpec(msg));
        match *self {
            FamilySpec::CompleteWithLeaf { n }
            | FamilySpec::AntiRegular { n }
            | FamilySpec::AntiRegularComplement { n }
            | FamilySpec::Star { n } => {
                if n < 2 {
                    return bad(format!("{self} needs n >= 2"));
                }
            }
            FamilySpec::TwoDegree { a_hi, hi, a_lo, lo } => {
                if a_hi == 0 || a_lo == 0 || hi <= lo {
                    return bad(format!("{self} needs a_hi, a_lo >= 1 and hi > lo"));
                }
            }
            FamilySpec::FGraph { n, delta } => {
                if n < 3 || n % 2 == 0 || delta % 2 == 1 || delta < 2 || delta > n - 1 {
                    return bad(format!(
                        "{self}: x^D + (n-1)x^(D-1) is a degree polynomial only for odd n and even 2 <= D <= n-1"
                    ));
                }
            }
            FamilySpec::MatchingComplete { n } | FamilySpec::PathUnion { n } => {
                if n < 3 || n % 2 == 0 {
                    return bad(format!("{self} needs odd n >= 3"));
                }
            }
        }
        Ok(())
    }

    pub fn degree_poly(&self) -> Result<IntPolynomial> {
        self.validate()?;
        let term = |c: u64, k: usize| IntPolynomial::monomial(c, k);
        Ok(match *self {
            FamilySpec::CompleteWithLeaf { n } => term(1, n - 1)
                .add(&term(n as u64 - 2, n - 2))
                .add(&term(1, 1)),
            FamilySpec::AntiRegular { n } => anti_regular_poly(n),
            FamilySpec::AntiRegularComplement { n } => {
                anti_regular_poly(n).complement_transform(n, 1)?
            }
            FamilySpec::Star { n } => term(1, n - 1).add(&term(n as u64 - 1, 1)),
            FamilySpec::TwoDegree { a_hi, hi, a_lo, lo } => {
                term(a_hi, hi as usize).add(&term(a_lo, lo as usize))
            }
            FamilySpec::FGraph { n, delta } => term(1, delta).add(&term(n as u64 - 1, delta - 1)),
            FamilySpec::MatchingComplete { n } => term(1, n - 1).add(&term(n as u64 - 1, n - 2)),
            FamilySpec::PathUnion { n } => term(1, 2).add(&term(n as u64 - 1, 1)),
        })
    }

    /// A simple graph with this family's degree polynomial, re-verified before return.
    pub fn realize(&self) -> Result<GraphEdgeList> {
        let expected = self.degree_poly()?;
        let g = match *self {
            FamilySpec::CompleteWithLeaf { n } => {
                let mut edges = complete_edges(n - 1);
                edges.push((0, n - 1));
                GraphEdgeList::new(n, edges)?
            }
            FamilySpec::AntiRegular { n } => anti_regular_graph(n),
            FamilySpec::AntiRegularComplement { n } => anti_regular_graph(n).complement(),
            FamilySpec::Star { n } => GraphEdgeList::new(n, (1..n).map(|v| (0, v)))?,
            FamilySpec::TwoDegree { .. } => {
                let seq = expected
                    .to_degree_sequence()
                    .ok_or_else(|| Error::InvalidSpec(format!("{self} is too large to realize")))?;
                if !erdos_gallai(&seq) {
                    return Err(Error::InvalidSpec(format!("{self} is not graphical")));
                }
                havel_hakimi_realize(&seq)?
            }
            FamilySpec::FGraph { n, delta } => fgraph(n, delta)?,
            FamilySpec::MatchingComplete { n } => {
                let m = n - 1;
                let edges = complete_edges(m)
                    .into_iter()
                    .filter(|&(a, b)| !(a % 2 == 0 && b == a + 1))
                    .chain((0..m).map(|v| (v, m)));
                GraphEdgeList::new(n, edges)?
            }
            FamilySpec::PathUnion { n } => {
                let mut edges = vec![(0, 1), (1, 2)];
                edges.extend((3..n).step_by(2).map(|v| (v, v + 1)));
                GraphEdgeList::new(n, edges)?
            }
        };
        if !g.is_simple() || g.degree_polynomial() != expected {
            return Err(Error::InvalidSpec(format!(
                "construction for {self} produced degree polynomial {}, expected {expected}",
                g.degree_polynomial()
            )));
        }
        Ok(g)
    }
}

fn anti_regular_poly(n: usize) -> IntPolynomial {
    let mut coeffs = vec![1u64; n];
    coeffs[0] = 0;
    coeffs[n / 2] += 1;
    IntPolynomial::from_u64s(&coeffs)
}

fn complete_edges(m: usize) -> Vec<(usize, usize)> {
    (0..m)
        .flat_map(|a| (a + 1..m).map(move |b| (a, b)))
        .collect()
}

/// `H_n`: vertices `v_1..v_n`, edge `v_i v_j` iff `i + j >= n + 1`.
fn anti_regular_graph(n: usize) -> GraphEdgeList {
    let edges = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .filter(|&(i, j)| i + j > n)
        .map(|(i, j)| (i - 1, j - 1));
    GraphEdgeList::new(n, edges).expect("indices in range")
}

/// `F_{n,Δ}`: a circulant `(Δ-1)`-regular graph on `v_0..v_{n-2}` (offsets
/// `1..d-1` and the antipodal offset `k`), then the edges of a matching `M`
/// of size `d = Δ/2` are replaced by edges to `v_{n-1}`. `M` is the greedy
/// lexicographic matching, which uses offset-1 edges whenever `d >= 2`.
fn fgraph(n: usize, delta: usize) -> Result<GraphEdgeList> {
    let m = n - 1;
    let k = m / 2;
    let d = delta / 2;
    let mut circulant = BTreeSet::new();
    for i in 0..m {
        for s in (1..d).chain(std::iter::once(k)) {
            let j = (i + s) % m;
            circulant.insert((i.min(j), i.max(j)));
        }
    }
    let mut matched = vec![false; m];
    let mut matching = Vec::with_capacity(d);
    for &(a, b) in &circulant {
        if matching.len() == d {
            break;
        }
        if !matched[a] && !matched[b] {
            matched[a] = true;
            matched[b] = true;
            matching.push((a, b));
        }
    }
    if matching.len() < d {
        return Err(Error::InvalidSpec(format!(
            "fgraph:{n},{delta}: circulant has no matching of size {d}"
        )));
    }
    let hub = m;
    let edges = circulant
        .iter()
        .copied()
        .filter(|e| !matching.contains(e))
        .chain(matching.iter().flat_map(|&(a, b)| [(a, hub), (b, hub)]));
    GraphEdgeList::new(n, edges)
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::CompleteWithLeaf { n } => write!(f, "cl:{n}"),
            FamilySpec::AntiRegular { n } => write!(f, "anti:{n}"),
            FamilySpec::AntiRegularComplement { n } => write!(f, "anti-c:{n}"),
            FamilySpec::Star { n } => write!(f, "star:{n}"),
            FamilySpec::TwoDegree { a_hi, hi, a_lo, lo } => {
                write!(f, "two:{a_hi},{hi},{a_lo},{lo}")
            }
            FamilySpec::FGraph { n, delta } => write!(f, "fgraph:{n},{delta}"),
            FamilySpec::MatchingComplete { n } => write!(f, "matching:{n}"),
            FamilySpec::PathUnion { n } => write!(f, "paths:{n}"),
        }
    }
}

fn split_spec(s: &str) -> Result<(&str, &str)> {
    s.trim()
        .split_once(':')
        .ok_or_else(|| Error::parse("family spec", s.trim(), "expected <family>:<params>"))
}

fn parse_ints(params: &str, count: usize) -> Result<Vec<u64>> {
    let parts: Vec<&str> = params.split(',').map(str::trim).collect();
    if parts.len() != count {
        return Err(Error::parse(
            "family spec",
            params,
            format!("expected {count} comma-separated integers"),
        ));
    }
    parts
        .iter()
        .map(|p| {
            p.parse::<u64>()
                .map_err(|e| Error::parse("family spec", *p, e.to_string()))
        })
        .collect()
}

fn family_at(name: &str, n: usize) -> Option<FamilySpec> {
    Some(match name {
        "cl" => FamilySpec::CompleteWithLeaf { n },
        "anti" => FamilySpec::AntiRegular { n },
        "anti-c" => FamilySpec::AntiRegularComplement { n },
        "star" => FamilySpec::Star { n },
        "matching" => FamilySpec::MatchingComplete { n },
        "paths" => FamilySpec::PathUnion { n },
        _ => return None,
    })
}

const MAX_FAMILY_ORDER: u64 = 1 << 20;

fn to_order(v: u64, token: &str) -> Result<usize> {
    if v > MAX_FAMILY_ORDER {
        return Err(Error::parse("family spec", token, "order too large"));
    }
    Ok(v as usize)
}

/// `cl:5`, `anti:8`, `anti-c:8`, `star:6`, `fgraph:9,4`, `two:1,4,4,3`,
/// `matching:5`, `paths:5`. Parsed specs are validated.
impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, params) = split_spec(s)?;
        let spec = match name {
            "fgraph" => {
                let v = parse_ints(params, 2)?;
                FamilySpec::FGraph {
                    n: to_order(v[0], params)?,
                    delta: to_order(v[1], params)?,
                }
            }
            "two" => {
                let v = parse_ints(params, 4)?;
                if v[1] > MAX_FAMILY_ORDER || v[3] > MAX_FAMILY_ORDER {
                    return Err(Error::parse("family spec", params, "degree too large"));
                }
                FamilySpec::TwoDegree {
                    a_hi: v[0],
                    hi: v[1],
                    a_lo: v[2],
                    lo: v[3],
                }
            }
            _ => {
                let n = to_order(parse_ints(params, 1)?[0], params)?;
                family_at(name, n)
                    .ok_or_else(|| Error::parse("family spec", name, "unknown family"))?
            }
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// A family swept over an inclusive order range, e.g. `cl:2..20`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilyRange {
    pub base: FamilySpec,
    pub from: usize,
    pub to: usize,
}

impl FamilyRange {
    /// Valid members of the range; orders the family rejects (e.g. even `n`
    /// for `matching`) are skipped.
    pub fn members(&self) -> Vec<FamilySpec> {
        (self.from..=self.to)
            .filter_map(|n| self.base.with_order(n))
            .filter(|s| s.validate().is_ok())
            .collect()
    }
}

impl FromStr for FamilyRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, params) = split_spec(s)?;
        if let Some((a, b)) = params.split_once("..") {
            let from = to_order(parse_ints(a, 1)?[0], a)?;
            let to = to_order(parse_ints(b, 1)?[0], b)?;
            if from > to {
                return Err(Error::parse("family range", params, "empty range"));
            }
            let base = family_at(name, from)
                .ok_or_else(|| Error::parse("family range", name, "family has no order range"))?;
            return Ok(FamilyRange { base, from, to });
        }
        let base: FamilySpec = s.parse()?;
        base.validate()?;
        let n = base.order();
        Ok(FamilyRange {
            base,
            from: n,
            to: n,
        })
    }
}

/// `cos`/`sin` of `num * pi / den` with exact values on the axes.
fn unit_at(num: i64, den: i64) -> Complex64 {
    let g = num.gcd(&den);
    let (num, den) = (num / g, den / g);
    match (num.rem_euclid(2 * den), den) {
        (0, _) => Complex64::new(1.0, 0.0),
        (1, 1) => Complex64::new(-1.0, 0.0),
        (1, 2) => Complex64::new(0.0, 1.0),
        (3, 2) => Complex64::new(0.0, -1.0),
        _ => {
            let theta = PI * num as f64 / den as f64;
            Complex64::new(theta.cos(), theta.sin())
        }
    }
}

/// Roots on a circle given by angles `num/den * pi`, with `num/den` in `(-1, 1]`.
/// Conjugate angles produce exact conjugates.
fn circle_points(modulus: f64, angles: &[(i64, i64)]) -> Vec<Complex64> {
    angles
        .iter()
        .map(|&(num, den)| {
            let w = unit_at(num.abs(), den);
            let w = if num < 0 { w.conj() } else { w };
            w * modulus
        })
        .collect()
}

/// Reduces `num/den` into `(-1, 1]`.
fn wrap_angle(num: i64, den: i64) -> (i64, i64) {
    let g = num.gcd(&den).max(1);
    let (mut num, den) = (num / g, den / g);
    num = num.rem_euclid(2 * den);
    if num > den {
        num -= 2 * den;
    }
    (num, den)
}

/// Closed-form roots of `a_hi x^hi + a_lo x^lo`: `lo` zeros and the
/// `(hi - lo)`-th roots of `-a_lo/a_hi`.
pub fn two_degree_roots(a_hi: u64, hi: u64, a_lo: u64, lo: u64) -> Result<RootSet> {
    if a_hi == 0 || a_lo == 0 || hi <= lo {
        return Err(Error::InvalidArgument(format!(
            "two-degree roots need a_hi, a_lo >= 1 and hi > lo, got ({a_hi}, {hi}, {a_lo}, {lo})"
        )));
    }
    let k = (hi - lo) as i64;
    let modulus = (a_lo as f64 / a_hi as f64).powf(1.0 / k as f64);
    let angles: Vec<(i64, i64)> = (0..k).map(|j| wrap_angle(2 * j + 1, k)).collect();
    let values = circle_points(modulus, &angles)
        .into_iter()
        .map(|z| (z, 1))
        .collect();
    let poly =
        IntPolynomial::monomial(a_hi, hi as usize).add(&IntPolynomial::monomial(a_lo, lo as usize));
    Ok(RootSet::from_parts(poly, DEFAULT_TOL, lo as usize, values))
}

/// Unit-circle roots of `D(H_{2k}; x)` as reduced angles `num/den * pi`
/// with multiplicity: the k-th roots of unity other than 1 and the
/// (k-1)-th roots of -1. Empty for `k = 1`.
pub fn anti_regular_even_angles(k: usize) -> Vec<((i64, i64), usize)> {
    let k = k as i64;
    let mut angles: Vec<(i64, i64)> = (1..k).map(|j| wrap_angle(2 * j, k)).collect();
    if k >= 2 {
        angles.extend((0..k - 1).map(|j| wrap_angle(2 * j + 1, k - 1)));
    }
    angles.sort_by(|a, b| (a.0 * b.1).cmp(&(b.0 * a.1)));
    let mut out: Vec<((i64, i64), usize)> = Vec::new();
    for a in angles {
        match out.last_mut() {
            Some((b, m)) if *b == a => *m += 1,
            _ => out.push((a, 1)),
        }
    }
    out
}

/// Closed-form roots of the connected anti-regular graph `H_{2k}`.
pub fn anti_regular_even_roots(k: usize) -> Result<RootSet> {
    if k == 0 {
        return Err(Error::InvalidArgument("H_2k needs k >= 1".into()));
    }
    let poly = FamilySpec::AntiRegular { n: 2 * k }.degree_poly()?;
    let angles = anti_regular_even_angles(k);
    let points = circle_points(1.0, &angles.iter().map(|(a, _)| *a).collect::<Vec<_>>());
    let values = points
        .into_iter()
        .zip(angles.iter().map(|(_, m)| *m))
        .collect();
    Ok(RootSet::from_parts(poly, DEFAULT_TOL, 1, values))
}

/// A member `omega_a * p/q` of the dense family of roots of `q^a x^(a+1) + p^a x`.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityWitness {
    pub a: u32,
    pub p: u64,
    pub q: u64,
    /// `omega_a = exp(i (2j+1) pi / a)`.
    pub j: u32,
    pub root: Complex64,
}

/// Largest denominator tried when approximating `|target|`.
pub const WITNESS_MAX_DENOMINATOR: u64 = 1_000_000;

impl DensityWitness {
    pub fn omega(&self) -> Complex64 {
        let (num, den) = wrap_angle(2 * self.j as i64 + 1, self.a as i64);
        circle_points(1.0, &[(num, den)])[0]
    }

    /// `q^a x^(a+1) + p^a x`.
    pub fn polynomial(&self) -> IntPolynomial {
        let a = self.a as usize;
        let qa = num_traits::pow(BigUint::from(self.q), a);
        let pa = num_traits::pow(BigUint::from(self.p), a);
        let mut coeffs = vec![BigUint::default(); a + 2];
        coeffs[1] = pa;
        coeffs[a + 1] = qa;
        IntPolynomial::new(coeffs)
    }

    /// `gcd(p, q) = 1`, `omega^a = -1` and `root = omega p/q`, all to rounding.
    /// Together these make `root` a zero of [`Self::polynomial`], since
    /// `q^a x^a + p^a = p^a (omega^a + 1)`.
    pub fn verify(&self) -> bool {
        let w = self.omega();
        let wa = w.powu(self.a);
        let ratio = self.p as f64 / self.q as f64;
        self.p >= 1
            && self.q >= 1
            && self.p.gcd(&self.q) == 1
            && (wa + 1.0).norm() <= 1e-12 * self.a as f64
            && (self.root - w * ratio).norm() <= 4.0 * f64::EPSILON * ratio
    }
}

/// Continued-fraction convergents of `x > 0` with denominators up to `max_q`.
fn convergents(x: f64, max_q: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    let (mut h0, mut h1) = (1u64, x.floor() as u64);
    let (mut k0, mut k1) = (0u64, 1u64);
    let mut frac = x - x.floor();
    out.push((h1, k1));
    for _ in 0..64 {
        if frac <= 0.0 {
            break;
        }
        let y = 1.0 / frac;
        let a = y.floor();
        if !a.is_finite() || a > u64::MAX as f64 / 4.0 {
            break;
        }
        let a = a as u64;
        frac = y - y.floor();
        let (Some(h2), Some(k2)) = (
            a.checked_mul(h1).and_then(|v| v.checked_add(h0)),
            a.checked_mul(k1).and_then(|v| v.checked_add(k0)),
        ) else {
            break;
        };
        if k2 > max_q {
            break;
        }
        out.push((h2, k2));
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
    }
    out
}

/// Searches `a = 1, 2, ...` for a root `omega_a p/q` within `tol` of `target`.
/// For each `a` the root of -1 nearest in angle is taken, then the
/// convergents of the projected modulus are tried in order.
pub fn density_witness(target: Complex64, tol: f64, max_a: u32) -> Result<DensityWitness> {
    if target.norm() == 0.0 || !target.is_finite() {
        return Err(Error::InvalidArgument(
            "target must be finite and nonzero".into(),
        ));
    }
    if !(tol >= 0.0) {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be non-negative, got {tol}"
        )));
    }
    let theta = principal_arg(target);
    for a in 1..=max_a {
        let step = 2.0 * PI / a as f64;
        // omega angles are (2j+1) pi / a; pick j nearest to theta
        let j = ((theta - PI / a as f64) / step)
            .round()
            .rem_euclid(a as f64) as u32;
        let probe = DensityWitness {
            a,
            p: 1,
            q: 1,
            j,
            root: Complex64::new(0.0, 0.0),
        };
        let w = probe.omega();
        let r = (target * w.conj()).re;
        if !(r > 0.0) {
            continue;
        }
        for (p, q) in convergents(r, WITNESS_MAX_DENOMINATOR) {
            if p == 0 {
                continue;
            }
            let root = w * (p as f64 / q as f64);
            if (root - target).norm() <= tol {
                return Ok(DensityWitness { a, p, q, j, root });
            }
        }
    }
    Err(Error::NotFound { tol, max_a })
}

/// Sorted degree sequence of a family member.
pub fn family_sequence(spec: &FamilySpec) -> Result<DegreeSequence> {
    spec.degree_poly()?
        .to_degree_sequence()
        .ok_or_else(|| Error::InvalidSpec(format!("{spec} is too large to expand")))
}
