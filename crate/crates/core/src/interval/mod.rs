//! Interval models, clique orderings and interval-graph recognition.
//!
//! A [`CliqueOrdering`] is a linear order `C_0, …, C_{k-1}` of the maximal
//! cliques in which every vertex occupies a consecutive run `[l(u), r(u)]`.
//! Two vertices are adjacent exactly when their runs intersect, so the
//! ordering is a complete certificate of intervalness.

pub mod chordal;
pub mod pqtree;
mod recognize;

pub use recognize::{
    order_cliques_exhaustive, recognize_and_order, NotInterval, NotIntervalReason, EXHAUSTIVE_MAX_CLIQUES,
};

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::graph::{Graph, VertexSet};
use crate::rational::Rational;
use crate::report::ValidationReport;

/// Closed interval `[lo, hi]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        Interval { lo, hi }
    }

    pub fn from_ints(lo: i64, hi: i64) -> Self {
        Interval::new(Rational::from_integer(lo), Rational::from_integer(hi))
    }

    pub fn intersects(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IntervalError {
    #[error("interval of vertex {0} has lo > hi")]
    Inverted(usize),
}

/// One closed interval per vertex; vertex `i` owns `intervals[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntervalModel {
    intervals: Vec<Interval>,
}

impl IntervalModel {
    pub fn new(intervals: Vec<Interval>) -> Result<Self, IntervalError> {
        if let Some(v) = intervals.iter().position(|iv| iv.lo > iv.hi) {
            return Err(IntervalError::Inverted(v));
        }
        Ok(IntervalModel { intervals })
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn n(&self) -> usize {
        self.intervals.len()
    }
}

/// Intersection graph of the model; touching endpoints count as overlap.
pub fn model_to_graph(model: &IntervalModel) -> Graph {
    let iv = model.intervals();
    let mut g = Graph::empty(iv.len());
    for u in 0..iv.len() {
        for v in u + 1..iv.len() {
            if iv[u].intersects(&iv[v]) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Linear ordering of maximal cliques with per-vertex clique runs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CliqueOrdering {
    pub cliques: Vec<VertexSet>,
    /// `left[u]` is the first clique index containing `u`.
    pub left: Vec<usize>,
    /// `right[u]` is the last clique index containing `u`.
    pub right: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OrderingError {
    #[error("vertex {0} lies in no clique")]
    Uncovered(usize),
    #[error("clique {clique} names vertex {vertex} outside 0..{n}")]
    OutOfRange { clique: usize, vertex: usize, n: usize },
}

impl CliqueOrdering {
    /// Builds the ordering, deriving `left`/`right` from clique membership.
    pub fn from_cliques(n: usize, cliques: Vec<VertexSet>) -> Result<Self, OrderingError> {
        let mut left = alloc::vec![usize::MAX; n];
        let mut right = alloc::vec![0; n];
        for (i, c) in cliques.iter().enumerate() {
            for u in c.iter() {
                if u >= n {
                    return Err(OrderingError::OutOfRange {
                        clique: i,
                        vertex: u,
                        n,
                    });
                }
                left[u] = left[u].min(i);
                right[u] = right[u].max(i);
            }
        }
        if let Some(u) = left.iter().position(|&l| l == usize::MAX) {
            return Err(OrderingError::Uncovered(u));
        }
        Ok(CliqueOrdering { cliques, left, right })
    }

    pub fn k(&self) -> usize {
        self.cliques.len()
    }

    pub fn n(&self) -> usize {
        self.left.len()
    }

    /// Adjacency as implied by the ordering: the clique runs intersect.
    pub fn runs_intersect(&self, u: usize, v: usize) -> bool {
        self.left[u] <= self.right[v] && self.left[v] <= self.right[u]
    }
}

/// Sweeps endpoints left to right and emits the active set each time a
/// right endpoint follows a left endpoint.
pub fn model_to_clique_ordering(model: &IntervalModel) -> CliqueOrdering {
    let iv = model.intervals();
    // (coordinate, 0 = open / 1 = close, vertex); opens sort first at ties.
    let mut events: Vec<(&Rational, u8, usize)> = Vec::with_capacity(2 * iv.len());
    for (v, i) in iv.iter().enumerate() {
        events.push((&i.lo, 0, v));
        events.push((&i.hi, 1, v));
    }
    events.sort();

    let mut active = BTreeSet::new();
    let mut cliques = Vec::new();
    let mut opened_since_emit = false;
    for (_, kind, v) in events {
        if kind == 0 {
            active.insert(v);
            opened_since_emit = true;
        } else {
            if opened_since_emit {
                cliques.push(VertexSet::new(active.iter().copied()));
                opened_since_emit = false;
            }
            active.remove(&v);
        }
    }
    CliqueOrdering::from_cliques(iv.len(), cliques).expect("sweep covers every vertex")
}

/// A broken clique-ordering invariant with its witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderingViolation {
    VertexCount {
        expected: usize,
        found: usize,
    },
    NoCliques,
    VertexOutOfRange {
        clique: usize,
        vertex: usize,
    },
    NotAClique {
        clique: usize,
        u: usize,
        v: usize,
    },
    NotMaximal {
        clique: usize,
        extendable_by: usize,
    },
    Nested {
        inner: usize,
        outer: usize,
    },
    /// Cliques containing `vertex` are not exactly the run `left..=right`.
    Consecutiveness {
        vertex: usize,
    },
    AdjacencyMismatch {
        u: usize,
        v: usize,
    },
}

/// Checks every clique-ordering invariant against `g` independently of how
/// the ordering was produced.
pub fn validate_ordering(g: &Graph, ord: &CliqueOrdering) -> ValidationReport<OrderingViolation> {
    let mut report = ValidationReport::new();
    let n = g.n();
    if ord.left.len() != n || ord.right.len() != n {
        report.push(OrderingViolation::VertexCount {
            expected: n,
            found: ord.left.len().max(ord.right.len()),
        });
        return report;
    }
    if n == 0 {
        return report;
    }
    if ord.cliques.is_empty() {
        report.push(OrderingViolation::NoCliques);
        return report;
    }

    let mut membership: Vec<Vec<usize>> = alloc::vec![Vec::new(); n];
    for (i, c) in ord.cliques.iter().enumerate() {
        if let Some(v) = c.iter().find(|&v| v >= n) {
            report.push(OrderingViolation::VertexOutOfRange { clique: i, vertex: v });
            continue;
        }
        for v in c.iter() {
            membership[v].push(i);
        }
        let s = c.as_slice();
        if let Some((u, v)) = first_non_edge(g, s) {
            report.push(OrderingViolation::NotAClique { clique: i, u, v });
        } else if let Some(w) = (0..n).find(|&w| !c.contains(w) && s.iter().all(|&u| g.has_edge(u, w))) {
            report.push(OrderingViolation::NotMaximal {
                clique: i,
                extendable_by: w,
            });
        }
    }
    for (i, a) in ord.cliques.iter().enumerate() {
        for (j, b) in ord.cliques.iter().enumerate() {
            if i != j && a.is_subset(b) && (a != b || i < j) {
                report.push(OrderingViolation::Nested { inner: i, outer: j });
            }
        }
    }
    for (u, runs) in membership.iter().enumerate() {
        let (l, r) = (ord.left[u], ord.right[u]);
        let expected = l <= r && r < ord.k() && runs.len() == r - l + 1 && runs.iter().copied().eq(l..=r);
        if !expected {
            report.push(OrderingViolation::Consecutiveness { vertex: u });
        }
    }
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) != ord.runs_intersect(u, v) {
                report.push(OrderingViolation::AdjacencyMismatch { u, v });
            }
        }
    }
    report
}

fn first_non_edge(g: &Graph, set: &[usize]) -> Option<(usize, usize)> {
    set.iter()
        .enumerate()
        .flat_map(|(i, &u)| set[i + 1..].iter().map(move |&v| (u, v)))
        .find(|&(u, v)| !g.has_edge(u, v))
}
