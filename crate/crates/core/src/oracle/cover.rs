use alloc::vec::Vec;

use super::indifference::{indifference_supergraphs, realize_unit_interval, IndifferenceCandidates};
use super::{check_limit, OracleError, ORACLE_MAX_VERTICES};
use crate::construct::CubeRepresentation;
use crate::graph::Graph;
use crate::rational::Rational;

pub const DEFAULT_MAX_B: usize = 4;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Vertex orders examined while enumerating supergraphs.
    pub permutations: u64,
    /// Inclusion-maximal candidates kept.
    pub candidates: usize,
    pub cover_nodes: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactResult {
    pub cub: usize,
    /// Per witness supergraph, the non-edges of `G` it misses. Together they
    /// cover every non-edge of `G`.
    pub witness: Vec<Vec<(usize, usize)>>,
    /// Umbrella order of each witness supergraph.
    pub witness_orders: Vec<Vec<usize>>,
    pub stats: SearchStats,
}

impl ExactResult {
    /// Unit-side representation with one coordinate per witness supergraph.
    /// `None` only if a witness fails to realize, which would be a bug.
    pub fn to_representation(&self, g: &Graph) -> Option<CubeRepresentation> {
        let non_edges = crate::graph::non_edges(g);
        let mut coords = alloc::vec![Vec::with_capacity(self.cub); g.n()];
        for (missing, order) in self.witness.iter().zip(&self.witness_orders) {
            let mut h = g.clone();
            for &(u, v) in &non_edges {
                if !missing.contains(&(u, v)) {
                    h.add_edge(u, v).ok()?;
                }
            }
            let x = realize_unit_interval(&h, order)?;
            for (row, xv) in coords.iter_mut().zip(x) {
                row.push(xv);
            }
        }
        CubeRepresentation::new(self.cub, Rational::from_integer(1), coords).ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactOutcome {
    Exact(ExactResult),
    /// No cover with at most `b_max` supergraphs exists.
    Exceeded {
        b_max: usize,
        stats: SearchStats,
    },
}

impl ExactOutcome {
    pub fn cub(&self) -> Option<usize> {
        match self {
            ExactOutcome::Exact(r) => Some(r.cub),
            ExactOutcome::Exceeded { .. } => None,
        }
    }
}

/// Minimum number of indifference supergraphs whose intersection is `g`,
/// searched up to `b_max`. Complete graphs (no non-edges) have cubicity 0.
pub fn exact_cubicity(g: &Graph, b_max: usize) -> Result<ExactOutcome, OracleError> {
    check_limit("vertex count", g.n(), ORACLE_MAX_VERTICES)?;
    let cands = indifference_supergraphs(g)?;
    let mut stats = SearchStats {
        permutations: cands.permutations,
        candidates: cands.candidates.len(),
        cover_nodes: 0,
    };
    let universe: u32 = if cands.non_edges.is_empty() {
        0
    } else {
        u32::MAX >> (32 - cands.non_edges.len())
    };
    let masks: Vec<u32> = cands.candidates.iter().map(|c| c.missing).collect();

    for b in 0..=b_max {
        let mut chosen = Vec::new();
        if cover(universe, b, &masks, &mut chosen, &mut stats.cover_nodes) {
            return Ok(ExactOutcome::Exact(result(&cands, &chosen, b, stats)));
        }
    }
    Ok(ExactOutcome::Exceeded { b_max, stats })
}

fn result(cands: &IndifferenceCandidates, chosen: &[usize], cub: usize, stats: SearchStats) -> ExactResult {
    ExactResult {
        cub,
        witness: chosen
            .iter()
            .map(|&i| cands.missing_pairs(cands.candidates[i].missing))
            .collect(),
        witness_orders: chosen.iter().map(|&i| cands.candidates[i].order.clone()).collect(),
        stats,
    }
}

/// Depth-limited set cover. Branches on the uncovered element with the
/// fewest covering sets; prunes when even the largest remaining set, taken
/// `depth` times, cannot finish.
fn cover(uncovered: u32, depth: usize, sets: &[u32], chosen: &mut Vec<usize>, nodes: &mut u64) -> bool {
    *nodes += 1;
    if uncovered == 0 {
        return true;
    }
    if depth == 0 {
        return false;
    }
    let best = sets.iter().map(|s| (s & uncovered).count_ones()).max().unwrap_or(0) as usize;
    if best * depth < uncovered.count_ones() as usize {
        return false;
    }
    let mut pick = None;
    let mut rest = uncovered;
    while rest != 0 {
        let e = rest.trailing_zeros();
        rest &= rest - 1;
        let count = sets.iter().filter(|&&s| s >> e & 1 == 1).count();
        if pick.is_none_or(|(_, c)| count < c) {
            pick = Some((e, count));
        }
    }
    let (e, _) = pick.unwrap();
    for (i, &s) in sets.iter().enumerate() {
        if s >> e & 1 == 1 {
            chosen.push(i);
            if cover(uncovered & !s, depth - 1, sets, chosen, nodes) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}
