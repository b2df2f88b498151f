//! Left-to-right vertex labelling over a clique ordering.
//!
//! Repeatedly pick the unlabelled vertex whose clique run ends first, give it
//! and all its unlabelled neighbors the next label, and record it in the
//! primary independent set. Picked vertices `u_0, u_1, …` form a maximum
//! independent set and equal labels imply adjacency.

use alloc::vec::Vec;

use crate::graph::Graph;
use crate::interval::chordal::{chordal_max_independent_set, mcs_elimination_order};
use crate::interval::CliqueOrdering;
use crate::report::ValidationReport;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Labelling {
    /// Label `η(u)` per vertex.
    pub eta: Vec<usize>,
    /// Primary independent set `u_0, …, u_{α-1}`; `eta[primary[i]] == i`.
    pub primary: Vec<usize>,
}

impl Labelling {
    pub fn alpha(&self) -> usize {
        self.primary.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum LabellingError {
    #[error("cannot label a graph without vertices")]
    Empty,
}

/// Single pass: vertices sorted by `(right, index)` propose primaries, and a
/// second cursor over vertices sorted by `left` hands out labels. Among
/// unlabelled vertices (all ending at or after `u_i`) adjacency to `u_i` is
/// exactly `left(v) <= right(u_i)`.
pub fn label_vertices(ord: &CliqueOrdering) -> Result<Labelling, LabellingError> {
    let n = ord.n();
    if n == 0 {
        return Err(LabellingError::Empty);
    }
    let mut by_right: Vec<usize> = (0..n).collect();
    by_right.sort_by_key(|&v| (ord.right[v], v));
    let mut by_left: Vec<usize> = (0..n).collect();
    by_left.sort_by_key(|&v| (ord.left[v], v));

    let mut eta = alloc::vec![usize::MAX; n];
    let mut primary = Vec::new();
    let mut cursor = 0;
    for &u in &by_right {
        if eta[u] != usize::MAX {
            continue;
        }
        let label = primary.len();
        primary.push(u);
        while cursor < n && ord.left[by_left[cursor]] <= ord.right[u] {
            let v = by_left[cursor];
            if eta[v] == usize::MAX {
                eta[v] = label;
            }
            cursor += 1;
        }
    }
    Ok(Labelling { eta, primary })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ObservationViolation {
    /// Label vector has the wrong length or a label outside `0..α`.
    LabelRange {
        vertex: usize,
    },
    /// `eta[primary[index]] != index`.
    PrimaryLabel {
        index: usize,
    },
    /// `η(v) ≤ i ⇔ l(v) ≤ r(u_i)` fails.
    Threshold {
        vertex: usize,
        index: usize,
    },
    SameLabelNonAdjacent {
        v: usize,
        w: usize,
    },
    PrimaryNotIndependent {
        u: usize,
        v: usize,
    },
    PrimaryNotMaximum {
        primary: usize,
        maximum: usize,
    },
    /// `0 = r(u_0) < r(u_1) < … < r(u_{α-1}) = k - 1` fails at `index`.
    PrimaryRightEnds {
        index: usize,
    },
}

/// Checks the labelling's structural guarantees exhaustively. Independence
/// maximality is compared against a maximum independent set computed from a
/// perfect elimination order of `g`, which does not look at `ord`.
pub fn check_observations(g: &Graph, ord: &CliqueOrdering, lab: &Labelling) -> ValidationReport<ObservationViolation> {
    use ObservationViolation::*;
    let mut report = ValidationReport::new();
    let n = g.n();
    let alpha = lab.alpha();

    if lab.eta.len() != n {
        report.push(LabelRange {
            vertex: lab.eta.len().min(n),
        });
        return report;
    }
    for (v, &e) in lab.eta.iter().enumerate() {
        if e >= alpha {
            report.push(LabelRange { vertex: v });
        }
    }
    for (i, &u) in lab.primary.iter().enumerate() {
        if u >= n || lab.eta[u] != i {
            report.push(PrimaryLabel { index: i });
        }
    }
    if lab.primary.iter().any(|&u| u >= n) {
        return report;
    }

    for v in 0..n {
        for (i, &u) in lab.primary.iter().enumerate() {
            if (lab.eta[v] <= i) != (ord.left[v] <= ord.right[u]) {
                report.push(Threshold { vertex: v, index: i });
            }
        }
    }
    for v in 0..n {
        for w in v + 1..n {
            if lab.eta[v] == lab.eta[w] && !g.has_edge(v, w) {
                report.push(SameLabelNonAdjacent { v, w });
            }
        }
    }
    for (i, &u) in lab.primary.iter().enumerate() {
        for &v in &lab.primary[i + 1..] {
            if g.has_edge(u, v) {
                report.push(PrimaryNotIndependent { u, v });
            }
        }
    }
    let maximum = chordal_max_independent_set(g, &mcs_elimination_order(g)).len();
    if alpha != maximum {
        report.push(PrimaryNotMaximum {
            primary: alpha,
            maximum,
        });
    }

    let ends: Vec<usize> = lab.primary.iter().map(|&u| ord.right[u]).collect();
    if ends.first() != Some(&0) {
        report.push(PrimaryRightEnds { index: 0 });
    }
    for i in 1..ends.len() {
        if ends[i - 1] >= ends[i] {
            report.push(PrimaryRightEnds { index: i });
        }
    }
    if ends.last().copied() != ord.k().checked_sub(1) {
        report.push(PrimaryRightEnds {
            index: alpha.saturating_sub(1),
        });
    }
    report
}
