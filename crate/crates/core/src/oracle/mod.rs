//! Brute-force ground truth for small graphs.
//!
//! Independence and claw numbers come from bitmask branch and bound. Exact
//! cubicity uses the fact that `cub(G)` is the least `b` for which `G` is the
//! intersection of `b` indifference (unit interval) graphs: enumerate the
//! edge-minimal indifference supergraphs of `G`, then find the fewest whose
//! non-edges together cover every non-edge of `G`.

mod cover;
mod indifference;

pub use cover::{exact_cubicity, ExactOutcome, ExactResult, SearchStats, DEFAULT_MAX_B};
pub use indifference::{
    indifference_supergraphs, is_indifference, realize_unit_interval, Candidate, IndifferenceCandidates,
};

use crate::graph::Graph;

/// Vertex limit for the supergraph enumeration and exact cubicity.
pub const ORACLE_MAX_VERTICES: usize = 8;
/// Non-edge limit for the supergraph enumeration.
pub const ORACLE_MAX_NON_EDGES: usize = 24;
/// Vertex limit for the bitmask independent-set search.
pub const MIS_MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("{what} is {actual}, oracle limit is {limit}")]
    TooLarge {
        what: &'static str,
        actual: usize,
        limit: usize,
    },
}

fn check_limit(what: &'static str, actual: usize, limit: usize) -> Result<(), OracleError> {
    if actual > limit {
        Err(OracleError::TooLarge { what, actual, limit })
    } else {
        Ok(())
    }
}

fn adjacency_masks(g: &Graph) -> alloc::vec::Vec<u64> {
    (0..g.n())
        .map(|u| g.neighbors(u).iter().fold(0u64, |m, &v| m | 1 << v))
        .collect()
}

fn mis_within(adj: &[u64], cand: u64) -> usize {
    fn go(adj: &[u64], cand: u64, size: usize, best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        let bit = 1u64 << v;
        go(adj, cand & !adj[v] & !bit, size + 1, best);
        // An isolated candidate is always worth taking.
        if adj[v] & cand != 0 {
            go(adj, cand & !bit, size, best);
        }
    }
    let mut best = 0;
    go(adj, cand, 0, &mut best);
    best
}

/// Exact independence number.
pub fn brute_alpha(g: &Graph) -> Result<usize, OracleError> {
    check_limit("vertex count", g.n(), MIS_MAX_VERTICES)?;
    let all = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    Ok(mis_within(&adjacency_masks(g), all))
}

/// Exact claw number: the largest independent set inside any open
/// neighborhood.
pub fn brute_claw(g: &Graph) -> Result<usize, OracleError> {
    check_limit("vertex count", g.n(), MIS_MAX_VERTICES)?;
    let adj = adjacency_masks(g);
    Ok(adj.iter().map(|&nb| mis_within(&adj, nb)).max().unwrap_or(0))
}
