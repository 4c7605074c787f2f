//! Graphicality tests, degree-sequence enumeration and Havel–Hakimi realization.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::sequence::DegreeSequence;

/// A loopless (multi)graph on vertices `0..n`, edges stored as `(u, v)` with `u < v`.
/// Repeated pairs are parallel edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphEdgeList {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl GraphEdgeList {
    /// Normalizes pair orientation and sorts; rejects loops and out-of-range vertices.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut out = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidArgument(format!("loop at vertex {a}")));
            }
            if a >= n || b >= n {
                return Err(Error::InvalidArgument(format!(
                    "edge ({a}, {b}) leaves the vertex range 0..{n}"
                )));
            }
            out.push((a.min(b), a.max(b)));
        }
        out.sort_unstable();
        Ok(GraphEdgeList { n, edges: out })
    }

    pub fn degrees(&self) -> Vec<u64> {
        let mut deg = vec![0u64; self.n];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    pub fn degree_sequence(&self) -> Option<DegreeSequence> {
        DegreeSequence::new(self.degrees()).ok()
    }

    pub fn degree_polynomial(&self) -> IntPolynomial {
        match self.degree_sequence() {
            Some(s) => IntPolynomial::from_degrees(&s),
            None => IntPolynomial::zero(),
        }
    }

    /// No parallel edges (loops are excluded at construction).
    pub fn is_simple(&self) -> bool {
        self.edges.windows(2).all(|w| w[0] != w[1])
    }

    /// Simple-graph complement.
    pub fn complement(&self) -> GraphEdgeList {
        let present: BTreeSet<_> = self.edges.iter().copied().collect();
        let edges = (0..self.n)
            .flat_map(|a| (a + 1..self.n).map(move |b| (a, b)))
            .filter(|e| !present.contains(e))
            .collect();
        GraphEdgeList { n: self.n, edges }
    }
}

/// Erdős–Gallai: even sum and, for every `k`,
/// `sum_{i<=k} d_i <= k(k-1) + sum_{i>k} min(d_i, k)`.
pub fn erdos_gallai(seq: &DegreeSequence) -> bool {
    let d = seq.degrees();
    let n = d.len() as u64;
    if seq.degree_sum() % 2 == 1 || d[0] > n - 1 {
        return false;
    }
    let mut prefix = 0u64;
    for k in 1..=d.len() {
        prefix += d[k - 1];
        let kk = k as u64;
        let tail: u64 = d[k..].iter().map(|&x| x.min(kk)).sum();
        if prefix > kk * (kk - 1) + tail {
            return false;
        }
    }
    true
}

/// Hakimi: even sum and `d_1 <= sum_{i>=2} d_i`.
pub fn hakimi_multigraph(seq: &DegreeSequence) -> bool {
    let sum = seq.degree_sum();
    sum.is_multiple_of(2) && seq.max_degree() <= sum - seq.max_degree()
}

/// `n >= 2`, all degrees positive and summing to `2(n-1)`.
pub fn is_tree_sequence(seq: &DegreeSequence) -> bool {
    let n = seq.order() as u64;
    n >= 2 && seq.min_degree() >= 1 && seq.degree_sum() == 2 * (n - 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SequenceKind {
    SimpleGraph,
    Tree,
    /// Multigraphs whose degrees are capped at `(n-1) * max_mult`.
    Multigraph {
        max_mult: u64,
    },
}

impl SequenceKind {
    pub fn accepts(&self, seq: &DegreeSequence) -> bool {
        match *self {
            SequenceKind::SimpleGraph => erdos_gallai(seq),
            SequenceKind::Tree => is_tree_sequence(seq),
            SequenceKind::Multigraph { max_mult } => {
                seq.max_degree() <= (seq.order() as u64 - 1) * max_mult && hakimi_multigraph(seq)
            }
        }
    }

    /// Largest degree a vertex can have at order `n`.
    pub fn degree_cap(&self, n: usize) -> u64 {
        let base = n.saturating_sub(1) as u64;
        match *self {
            SequenceKind::Multigraph { max_mult } => base * max_mult,
            _ => base,
        }
    }
}

impl fmt::Display for SequenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceKind::SimpleGraph => f.write_str("graph"),
            SequenceKind::Tree => f.write_str("tree"),
            SequenceKind::Multigraph { max_mult } => write!(f, "multigraph:{max_mult}"),
        }
    }
}

/// `graph`, `tree`, `multigraph` or `multigraph:<max_mult>`.
impl FromStr for SequenceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "graph" | "simple" => return Ok(SequenceKind::SimpleGraph),
            "tree" => return Ok(SequenceKind::Tree),
            "multigraph" => return Ok(SequenceKind::Multigraph { max_mult: 1 }),
            _ => {}
        }
        if let Some(m) = s.strip_prefix("multigraph:") {
            let max_mult: u64 = m
                .parse()
                .map_err(|e: std::num::ParseIntError| Error::parse("kind", m, e.to_string()))?;
            if max_mult == 0 {
                return Err(Error::parse("kind", m, "max_mult must be at least 1"));
            }
            return Ok(SequenceKind::Multigraph { max_mult });
        }
        Err(Error::parse(
            "kind",
            s,
            "expected graph, tree or multigraph[:mult]",
        ))
    }
}

/// Lazy stream of non-increasing sequences accepted by a [`SequenceKind`],
/// in lexicographically decreasing order. Built by backtracking with
/// prefix pruning.
#[derive(Clone, Debug)]
pub struct SequenceStream {
    n: usize,
    kind: SequenceKind,
    cap: u64,
    leading: Option<u64>,
    cur: Vec<u64>,
    prefix: Vec<u64>,
    exhausted: bool,
}

/// Every sequence of order `n` passing `kind`'s test.
pub fn enumerate_sequences(n: usize, kind: SequenceKind) -> SequenceStream {
    SequenceStream::new(n, kind, None)
}

/// The shard of [`enumerate_sequences`] with `d_1 = leading`.
pub fn enumerate_with_leading(n: usize, kind: SequenceKind, leading: u64) -> SequenceStream {
    SequenceStream::new(n, kind, Some(leading))
}

impl SequenceStream {
    fn new(n: usize, kind: SequenceKind, leading: Option<u64>) -> Self {
        let cap = kind.degree_cap(n);
        SequenceStream {
            n,
            kind,
            cap,
            leading,
            cur: Vec::with_capacity(n),
            prefix: Vec::with_capacity(n),
            exhausted: n == 0 || leading.is_some_and(|l| l > cap),
        }
    }

    /// Necessary conditions on the prefix `cur ++ [v]`.
    fn feasible(&self, v: u64) -> bool {
        let pos = self.cur.len();
        let sum = self.prefix.last().copied().unwrap_or(0) + v;
        let rest = (self.n - pos - 1) as u64;
        match self.kind {
            SequenceKind::Tree => {
                let target = 2 * (self.n as u64).saturating_sub(1);
                v >= 1 && sum + rest <= target && sum + rest * v >= target
            }
            SequenceKind::SimpleGraph => {
                // Erdős–Gallai at k = pos + 1, later degrees bounded by v
                let k = pos as u64 + 1;
                sum <= k * (k - 1) + rest * v.min(k)
            }
            SequenceKind::Multigraph { .. } => true,
        }
    }

    /// Highest feasible value at the next position that is `<= upper`.
    fn highest_feasible(&self, upper: u64) -> Option<u64> {
        (0..=upper).rev().find(|&v| self.feasible(v))
    }

    fn push(&mut self, v: u64) {
        let s = self.prefix.last().copied().unwrap_or(0) + v;
        self.cur.push(v);
        self.prefix.push(s);
    }

    fn pop(&mut self) -> Option<u64> {
        self.prefix.pop();
        self.cur.pop()
    }

    /// Replaces the deepest value by the next smaller feasible one, popping
    /// levels that have nothing left.
    fn bump(&mut self) {
        while let Some(v) = self.pop() {
            if self.cur.is_empty() && self.leading.is_some() {
                break;
            }
            if v > 0 {
                if let Some(w) = self.highest_feasible(v - 1) {
                    self.push(w);
                    return;
                }
            }
        }
        self.exhausted = true;
    }
}

impl Iterator for SequenceStream {
    type Item = DegreeSequence;

    fn next(&mut self) -> Option<DegreeSequence> {
        loop {
            if self.exhausted {
                return None;
            }
            let pos = self.cur.len();
            if pos == self.n {
                let seq = DegreeSequence::from_sorted(self.cur.clone()).expect("non-increasing");
                self.bump();
                if self.kind.accepts(&seq) {
                    return Some(seq);
                }
                continue;
            }
            let next = if pos == 0 {
                match self.leading {
                    Some(l) => self.feasible(l).then_some(l),
                    None => self.highest_feasible(self.cap),
                }
            } else {
                self.highest_feasible(self.cur[pos - 1])
            };
            match next {
                Some(v) => self.push(v),
                None if pos == 0 => self.exhausted = true,
                None => self.bump(),
            }
        }
    }
}

/// Havel–Hakimi: repeatedly joins the vertex of largest residual degree to
/// the next-largest ones. Vertex `i` receives degree `seq[i]`.
pub fn havel_hakimi_realize(seq: &DegreeSequence) -> Result<GraphEdgeList> {
    if !erdos_gallai(seq) {
        return Err(Error::NotGraphical(seq.to_string()));
    }
    let n = seq.order();
    let mut residual: Vec<(u64, usize)> = seq.degrees().iter().copied().zip(0..n).collect();
    let mut edges = Vec::new();
    loop {
        // largest residual first, ties by lower vertex index
        residual.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let (d, v) = residual[0];
        if d == 0 {
            break;
        }
        residual[0].0 = 0;
        for slot in residual.iter_mut().skip(1).take(d as usize) {
            if slot.0 == 0 {
                return Err(Error::NotGraphical(seq.to_string()));
            }
            slot.0 -= 1;
            edges.push((v, slot.1));
        }
    }
    GraphEdgeList::new(n, edges)
}
