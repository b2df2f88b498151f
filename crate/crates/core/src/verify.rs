//! Independent checks of cube representations and construction traces.

use alloc::vec::Vec;

use crate::construct::{bit, Branch, ConstructionTrace, CubeRepresentation};
use crate::graph::Graph;
use crate::interval::CliqueOrdering;
use crate::labelling::Labelling;
use crate::rational::{abs_diff, half, int};
use crate::report::ValidationReport;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub ok: bool,
    /// Adjacent pairs `(u, v, dimension)` pulled apart in that dimension.
    pub missing_adjacency: Vec<(usize, usize, usize)>,
    /// Non-adjacent pairs within `side` in every dimension.
    pub missing_separation: Vec<(usize, usize)>,
    /// Pairs separated in each dimension.
    pub dimension_stats: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error("representation has {rep} vertices, graph has {graph}")]
    VertexCount { graph: usize, rep: usize },
    #[error("vertex {vertex} has {found} coordinates, expected {expected}")]
    RowLength {
        vertex: usize,
        found: usize,
        expected: usize,
    },
}

/// Compares max-norm geometry against `g` for every pair, exactly.
pub fn verify_representation(g: &Graph, rep: &CubeRepresentation) -> Result<VerificationReport, VerifyError> {
    let n = g.n();
    if rep.coords.len() != n {
        return Err(VerifyError::VertexCount {
            graph: n,
            rep: rep.coords.len(),
        });
    }
    if let Some((vertex, row)) = rep.coords.iter().enumerate().find(|(_, r)| r.len() != rep.dimension) {
        return Err(VerifyError::RowLength {
            vertex,
            found: row.len(),
            expected: rep.dimension,
        });
    }
    let mut missing_adjacency = Vec::new();
    let mut missing_separation = Vec::new();
    let mut dimension_stats = alloc::vec![0; rep.dimension];
    for u in 0..n {
        for v in u + 1..n {
            let mut first_sep = None;
            for d in 0..rep.dimension {
                if abs_diff(&rep.coords[u][d], &rep.coords[v][d]) > rep.side {
                    dimension_stats[d] += 1;
                    first_sep.get_or_insert(d);
                }
            }
            match (g.has_edge(u, v), first_sep) {
                (true, Some(d)) => missing_adjacency.push((u, v, d)),
                (false, None) => missing_separation.push((u, v)),
                _ => {}
            }
        }
    }
    Ok(VerificationReport {
        ok: missing_adjacency.is_empty() && missing_separation.is_empty(),
        missing_adjacency,
        missing_separation,
        dimension_stats,
    })
}

/// Dimensions in which every pair of points lies within `side`.
pub fn complete_dimensions(rep: &CubeRepresentation) -> Vec<usize> {
    (0..rep.dimension)
        .filter(|&d| {
            let lo = rep.coords.iter().map(|r| r[d]).min();
            let hi = rep.coords.iter().map(|r| r[d]).max();
            match (lo, hi) {
                (Some(lo), Some(hi)) => hi - lo <= rep.side,
                _ => true,
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceViolation {
    /// `f(j − 1) ≥ f(j)`.
    FNotIncreasing {
        index: usize,
    },
    /// `f(r(u_i)) ≠ i`.
    FAnchor {
        primary: usize,
    },
    FLength {
        expected: usize,
        found: usize,
    },
    /// `f(r(v)) − f(l(v)) ≥ ψ' − 1/2`.
    SpanTooWide {
        vertex: usize,
    },
    /// `f(j)` outside `[x_d(v), x_d(v) + ψ' − 1/2]` for a clique `j` of `v`.
    CliqueOutsideWindow {
        vertex: usize,
        clique: usize,
        dimension: usize,
    },
    /// Low bits of `γ(v)` differ from `η(v)`, or `γ(v) ∉ [ψ', 3ψ')`.
    GammaBits {
        vertex: usize,
    },
    /// Coordinate disagrees with the branch its `γ` bit selects.
    Coordinate {
        vertex: usize,
        dimension: usize,
    },
    Shape,
}

/// Re-checks a claw-variant trace: the `f` scale, the per-vertex span
/// bound, clique-window inclusion per dimension, `γ` bit agreement, and that
/// every stored coordinate follows from its branch.
pub fn check_trace(
    trace: &ConstructionTrace,
    ord: &CliqueOrdering,
    lab: &Labelling,
) -> ValidationReport<TraceViolation> {
    use TraceViolation::*;
    let mut report = ValidationReport::new();
    let n = ord.n();
    let f = &trace.f.values;
    let psi_prime = trace.psi_prime;
    let width = int(psi_prime) - half();
    let dims = trace.bit_index.len();

    if f.len() != ord.k() {
        report.push(FLength {
            expected: ord.k(),
            found: f.len(),
        });
        return report;
    }
    if trace.padded_coords.len() != n
        || trace.branches.len() != n
        || trace.gamma.values.len() != n
        || lab.eta.len() != n
        || trace.padded_coords.iter().any(|r| r.len() != dims)
    {
        report.push(Shape);
        return report;
    }

    for j in 1..f.len() {
        if f[j - 1] >= f[j] {
            report.push(FNotIncreasing { index: j });
        }
    }
    for (i, &u) in lab.primary.iter().enumerate() {
        if f[ord.right[u]] != int(i) {
            report.push(FAnchor { primary: i });
        }
    }

    let p = trace.bit_index.len().saturating_sub(2) as u32;
    for v in 0..n {
        let (l, r) = (ord.left[v], ord.right[v]);
        if f[r] - f[l] >= width {
            report.push(SpanTooWide { vertex: v });
        }
        let g = trace.gamma.values[v];
        let low_bits_match = (0..p).all(|i| bit(g, i) == bit(lab.eta[v], i));
        if !low_bits_match || g < psi_prime || g >= 3 * psi_prime {
            report.push(GammaBits { vertex: v });
        }
        for (d, &b) in trace.bit_index.iter().enumerate() {
            let x = trace.padded_coords[v][d];
            let expected = match trace.branches[v][d] {
                Branch::Right => f[r] - width,
                Branch::Left => f[l],
            };
            let branch_ok = matches!(
                (bit(g, b), trace.branches[v][d]),
                (0, Branch::Right) | (1, Branch::Left)
            );
            if x != expected || !branch_ok {
                report.push(Coordinate {
                    vertex: v,
                    dimension: d,
                });
            }
            if let Some(j) = (l..=r).find(|&j| f[j] < x || f[j] > x + width) {
                report.push(CliqueOutsideWindow {
                    vertex: v,
                    clique: j,
                    dimension: d,
                });
            }
        }
    }
    report
}
