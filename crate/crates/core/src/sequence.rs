use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A degree sequence `d_1 >= d_2 >= ... >= d_n` with `n >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct DegreeSequence(Vec<u64>);

impl DegreeSequence {
    /// Sorts the degrees into non-increasing order.
    pub fn new(mut degrees: Vec<u64>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::InvalidArgument(
                "a degree sequence needs at least one vertex".into(),
            ));
        }
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        Ok(DegreeSequence(degrees))
    }

    /// Accepts only input that is already non-increasing.
    pub fn from_sorted(degrees: Vec<u64>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::InvalidArgument(
                "a degree sequence needs at least one vertex".into(),
            ));
        }
        if degrees.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!(
                "degrees {degrees:?} are not non-increasing"
            )));
        }
        Ok(DegreeSequence(degrees))
    }

    pub fn degrees(&self) -> &[u64] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.len()
    }

    pub fn max_degree(&self) -> u64 {
        self.0[0]
    }

    pub fn min_degree(&self) -> u64 {
        *self.0.last().expect("non-empty")
    }

    pub fn degree_sum(&self) -> u64 {
        self.0.iter().sum()
    }

    /// `m = (sum d_i) / 2`, or `None` for an odd degree sum.
    pub fn edge_count(&self) -> Option<u64> {
        let s = self.degree_sum();
        s.is_multiple_of(2).then_some(s / 2)
    }

    pub fn is_regular(&self) -> bool {
        self.max_degree() == self.min_degree()
    }

    pub fn into_vec(self) -> Vec<u64> {
        self.0
    }
}

impl TryFrom<Vec<u64>> for DegreeSequence {
    type Error = Error;

    fn try_from(v: Vec<u64>) -> Result<Self> {
        DegreeSequence::from_sorted(v)
    }
}

impl From<DegreeSequence> for Vec<u64> {
    fn from(s: DegreeSequence) -> Self {
        s.0
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// Comma-separated degrees in any order, e.g. `2,2,1,1`.
impl FromStr for DegreeSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let degrees = s
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<u64>()
                    .map_err(|e| Error::parse("degree sequence", tok, e.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        DegreeSequence::new(degrees)
    }
}
