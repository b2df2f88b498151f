use alloc::vec::Vec;

use super::chordal::{is_perfect_elimination_order, maximal_cliques, mcs_elimination_order};
use super::pqtree::PqTree;
use super::CliqueOrdering;
use crate::graph::{Graph, VertexSet};
use crate::report::next_permutation;

/// Largest clique count the exhaustive arrangement search accepts.
pub const EXHAUSTIVE_MAX_CLIQUES: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NotIntervalReason {
    NotChordal,
    NoConsecutiveOrdering,
}

impl NotIntervalReason {
    pub fn tag(self) -> &'static str {
        match self {
            NotIntervalReason::NotChordal => "not-chordal",
            NotIntervalReason::NoConsecutiveOrdering => "no-consecutive-ordering",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("not an interval graph ({})", reason.tag())]
pub struct NotInterval {
    pub reason: NotIntervalReason,
}

/// Per-vertex lists of the clique indices containing that vertex.
fn memberships(n: usize, cliques: &[VertexSet]) -> Vec<Vec<usize>> {
    let mut out = alloc::vec![Vec::new(); n];
    for (i, c) in cliques.iter().enumerate() {
        for v in c.iter() {
            out[v].push(i);
        }
    }
    out
}

/// Recognizes interval graphs and returns a consecutive clique ordering.
///
/// Chordality is tested on a maximum-cardinality-search elimination order,
/// the maximal cliques are read off that order, and a PQ-tree arranges them so
/// that each vertex's cliques are consecutive.
pub fn recognize_and_order(g: &Graph) -> Result<CliqueOrdering, NotInterval> {
    let n = g.n();
    let peo = mcs_elimination_order(g);
    if !is_perfect_elimination_order(g, &peo) {
        return Err(NotInterval {
            reason: NotIntervalReason::NotChordal,
        });
    }
    let cliques = maximal_cliques(g, &peo);
    let mut tree = PqTree::new(cliques.len());
    for runs in memberships(n, &cliques) {
        tree.reduce(&runs).map_err(|_| NotInterval {
            reason: NotIntervalReason::NoConsecutiveOrdering,
        })?;
    }
    let mut ordered: Vec<VertexSet> = tree.frontier().into_iter().map(|i| cliques[i].clone()).collect();
    // Either direction is valid; prefer the one starting at the smaller clique.
    if ordered.last() < ordered.first() {
        ordered.reverse();
    }
    Ok(CliqueOrdering::from_cliques(n, ordered).expect("maximal cliques cover every vertex"))
}

/// Tries every arrangement of `cliques`; returns the first (lexicographic)
/// permutation of clique indices in which every vertex's cliques are
/// consecutive. `None` if more than [`EXHAUSTIVE_MAX_CLIQUES`] cliques.
pub fn order_cliques_exhaustive(n: usize, cliques: &[VertexSet]) -> Option<Option<Vec<usize>>> {
    let k = cliques.len();
    if k > EXHAUSTIVE_MAX_CLIQUES {
        return None;
    }
    let members = memberships(n, cliques);
    let mut perm: Vec<usize> = (0..k).collect();
    let mut pos = alloc::vec![0; k];
    loop {
        for (i, &c) in perm.iter().enumerate() {
            pos[c] = i;
        }
        let consecutive = members.iter().all(|runs| {
            let lo = runs.iter().map(|&c| pos[c]).min();
            let hi = runs.iter().map(|&c| pos[c]).max();
            match (lo, hi) {
                (Some(lo), Some(hi)) => hi - lo + 1 == runs.len(),
                _ => true,
            }
        });
        if consecutive {
            return Some(Some(perm));
        }
        if !next_permutation(&mut perm) {
            return Some(None);
        }
    }
}
