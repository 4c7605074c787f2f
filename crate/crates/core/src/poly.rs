//! Dense polynomials with non-negative integer coefficients.
//!
//! `coeffs[k]` is `a_k`, the number of vertices of degree `k` when the
//! polynomial is a degree polynomial. Coefficients are arbitrary precision.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::horner;
use crate::sequence::DegreeSequence;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigUint>,
}

impl IntPolynomial {
    /// Trailing zero coefficients are trimmed.
    pub fn new(mut coeffs: Vec<BigUint>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_u64s(coeffs: &[u64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    /// `c * x^k`.
    pub fn monomial(c: u64, k: usize) -> Self {
        let mut coeffs = vec![BigUint::zero(); k + 1];
        coeffs[k] = BigUint::from(c);
        Self::new(coeffs)
    }

    /// Degree polynomial of a degree sequence: `a_k` counts the vertices of degree `k`.
    pub fn from_degrees(seq: &DegreeSequence) -> Self {
        let top = seq.max_degree() as usize;
        let mut coeffs = vec![BigUint::zero(); top + 1];
        for &d in seq.degrees() {
            coeffs[d as usize] += 1u32;
        }
        Self::new(coeffs)
    }

    /// Reads multiplicities back into a sorted sequence. `None` when the
    /// polynomial is zero or too large to expand.
    pub fn to_degree_sequence(&self) -> Option<DegreeSequence> {
        let mut out = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            let c = c.to_u64()?;
            if out.len() as u64 + c > 1 << 32 {
                return None;
            }
            out.extend(std::iter::repeat_n(k as u64, c as usize));
        }
        DegreeSequence::from_sorted(out).ok()
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    /// `a_k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> BigUint {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Highest power with a nonzero coefficient (Δ).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest power with a nonzero coefficient (δ).
    pub fn min_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn leading_coeff(&self) -> Option<&BigUint> {
        self.coeffs.last()
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// `p(1)`, the order `n` of the (multi)graph.
    pub fn coefficient_sum(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    /// Evaluation at 1 as an exact machine integer, when it fits.
    pub fn order(&self) -> Option<u64> {
        self.coefficient_sum().to_u64()
    }

    /// `p'(1) = sum k a_k`, the degree sum `2m`.
    pub fn derivative_at_one(&self) -> BigUint {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c * BigUint::from(k))
            .sum()
    }

    /// Divides out `x^δ`; returns `(δ, p / x^δ)`.
    pub fn deflate_zero(&self) -> (usize, IntPolynomial) {
        match self.min_degree() {
            None => (0, IntPolynomial::zero()),
            Some(delta) => (
                delta,
                IntPolynomial {
                    coeffs: self.coeffs[delta..].to_vec(),
                },
            ),
        }
    }

    pub fn scale(&self, factor: &BigUint) -> IntPolynomial {
        Self::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    pub fn add(&self, other: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    /// Coefficients as `f64`; huge values saturate to infinity.
    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::INFINITY))
            .collect()
    }

    pub fn to_complex_coeffs(&self) -> Vec<Complex64> {
        self.to_f64_coeffs()
            .into_iter()
            .map(|c| Complex64::new(c, 0.0))
            .collect()
    }

    /// Horner evaluation in double precision.
    pub fn evaluate(&self, z: Complex64) -> Complex64 {
        horner::eval(&self.to_complex_coeffs(), z)
    }

    /// Compensated Horner evaluation, for residuals near roots.
    pub fn evaluate_compensated(&self, z: Complex64) -> Complex64 {
        horner::eval_compensated(&self.to_complex_coeffs(), z)
    }

    /// Multigraph complement: `x^((n-1) mu) p(1/x)`, i.e. coefficient
    /// reversal within the window `[0, (n-1) mu]`.
    pub fn complement_transform(&self, n: usize, mu: usize) -> Result<IntPolynomial> {
        let window = n.saturating_sub(1) * mu;
        let Some(degree) = self.degree() else {
            return Ok(IntPolynomial::zero());
        };
        if degree > window {
            return Err(Error::NotRealizable { degree, window });
        }
        let mut coeffs = vec![BigUint::zero(); window + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[window - k] = c.clone();
        }
        Ok(Self::new(coeffs))
    }

    /// Sign changes in the coefficients of `p(-x)`, zeros skipped.
    pub fn sign_changes_neg(&self) -> usize {
        let signs: Vec<bool> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, _)| k % 2 == 0)
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Hakimi's criterion restated on polynomials: `p'(1)` even and
    /// `deg p <= p'(1) / 2`.
    pub fn is_multigraph_degree_poly(&self) -> bool {
        let Some(degree) = self.degree() else {
            return false;
        };
        let d1 = self.derivative_at_one();
        let two = BigUint::from(2u32);
        (&d1 % &two).is_zero() && BigUint::from(degree) <= d1 / two
    }

    /// JSON array of decimal coefficient strings, lowest power first.
    pub fn to_json_coeffs(&self) -> String {
        serde_json::to_string(&CoeffStrings::from(self)).expect("strings serialize")
    }

    pub fn from_json_coeffs(s: &str) -> Result<Self> {
        let raw: CoeffStrings = serde_json::from_str(s)
            .map_err(|e| Error::parse("coefficient array", s.trim(), e.to_string()))?;
        IntPolynomial::try_from(raw)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(transparent)]
struct CoeffStrings(Vec<String>);

impl From<&IntPolynomial> for CoeffStrings {
    fn from(p: &IntPolynomial) -> Self {
        CoeffStrings(p.coeffs.iter().map(|c| c.to_string()).collect())
    }
}

impl TryFrom<CoeffStrings> for IntPolynomial {
    type Error = Error;

    fn try_from(raw: CoeffStrings) -> Result<Self> {
        let coeffs = raw
            .0
            .iter()
            .map(|s| {
                if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(Error::parse(
                        "coefficient array",
                        s.as_str(),
                        "expected a non-negative decimal integer",
                    ));
                }
                s.parse::<BigUint>()
                    .map_err(|e| Error::parse("coefficient array", s.as_str(), e.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(IntPolynomial::new(coeffs))
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CoeffStrings::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = CoeffStrings::deserialize(d)?;
        IntPolynomial::try_from(raw).map_err(serde::de::Error::custom)
    }
}

/// `a_Δ x^Δ + ... + a_δ x^δ`; unit coefficients are omitted on non-constant terms.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (k, c.is_one()) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{c}x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{c}x^{k}")?,
            }
        }
        Ok(())
    }
}

const MAX_PARSED_DEGREE: usize = 1 << 16;

/// Parses sums of terms `c`, `x`, `c x`, `c*x^k`, `x^k`. Repeated powers add up.
impl FromStr for IntPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        const WHAT: &str = "polynomial";
        if s.trim().is_empty() {
            return Err(Error::parse(WHAT, "", "empty input"));
        }
        let mut coeffs: Vec<BigUint> = Vec::new();
        for raw in s.split('+') {
            let term: String = raw.chars().filter(|c| !c.is_whitespace()).collect();
            if term.is_empty() {
                return Err(Error::parse(WHAT, raw, "empty term"));
            }
            let (coeff_part, power) = match term.find('x') {
                None => (term.as_str(), 0usize),
                Some(pos) => {
                    let rest = &term[pos + 1..];
                    let power = if rest.is_empty() {
                        1
                    } else if let Some(exp) = rest.strip_prefix('^') {
                        if exp.is_empty() || !exp.bytes().all(|b| b.is_ascii_digit()) {
                            return Err(Error::parse(WHAT, term.clone(), "bad exponent"));
                        }
                        exp.parse::<usize>()
                            .map_err(|e| Error::parse(WHAT, term.clone(), e.to_string()))?
                    } else {
                        return Err(Error::parse(WHAT, term.clone(), "unexpected text after x"));
                    };
                    let head = &term[..pos];
                    (head.strip_suffix('*').unwrap_or(head), power)
                }
            };
            if power > MAX_PARSED_DEGREE {
                return Err(Error::parse(WHAT, term.clone(), "exponent too large"));
            }
            let coeff = if coeff_part.is_empty() {
                if term.starts_with('x') {
                    BigUint::one()
                } else {
                    return Err(Error::parse(WHAT, term.clone(), "missing coefficient"));
                }
            } else if coeff_part.bytes().all(|b| b.is_ascii_digit()) {
                coeff_part
                    .parse::<BigUint>()
                    .map_err(|e| Error::parse(WHAT, coeff_part, e.to_string()))?
            } else {
                return Err(Error::parse(
                    WHAT,
                    coeff_part,
                    "coefficients must be non-negative integers",
                ));
            };
            if coeffs.len() <= power {
                coeffs.resize(power + 1, BigUint::zero());
            }
            coeffs[power] += coeff;
        }
        Ok(IntPolynomial::new(coeffs))
    }
}
