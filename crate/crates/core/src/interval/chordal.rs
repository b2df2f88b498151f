//! Maximum cardinality search, perfect elimination orderings and the
//! clique/independent-set routines they enable on chordal graphs.

use alloc::vec::Vec;

use crate::graph::{Graph, VertexSet};

/// Maximum cardinality search; returns the reverse of the visit order, which
/// is a perfect elimination ordering whenever `g` is chordal.
/// Ties are broken towards the lowest vertex index.
pub fn mcs_elimination_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = alloc::vec![0usize; n];
    let mut visited = alloc::vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let mut best = usize::MAX;
        for v in 0..n {
            if !visited[v] && (best == usize::MAX || weight[v] > weight[best]) {
                best = v;
            }
        }
        visited[best] = true;
        order.push(best);
        for &w in g.neighbors(best) {
            if !visited[w] {
                weight[w] += 1;
            }
        }
    }
    order.reverse();
    order
}

fn positions(order: &[usize]) -> Vec<usize> {
    let mut pos = alloc::vec![0; order.len()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    pos
}

/// Neighbors of `v` eliminated after `v`.
fn later_neighbors<'a>(g: &'a Graph, pos: &'a [usize], v: usize) -> impl Iterator<Item = usize> + 'a {
    g.neighbors(v).iter().copied().filter(move |&w| pos[w] > pos[v])
}

/// Whether every vertex's later neighbors form a clique.
pub fn is_perfect_elimination_order(g: &Graph, order: &[usize]) -> bool {
    if order.len() != g.n() {
        return false;
    }
    let pos = positions(order);
    order.iter().all(|&v| {
        let Some(parent) = later_neighbors(g, &pos, v).min_by_key(|&w| pos[w]) else {
            return true;
        };
        later_neighbors(g, &pos, v).all(|w| w == parent || g.has_edge(parent, w))
    })
}

/// Maximal cliques of a chordal graph from a perfect elimination order,
/// listed by their earliest-eliminated vertex.
pub fn maximal_cliques(g: &Graph, order: &[usize]) -> Vec<VertexSet> {
    let pos = positions(order);
    let candidates: Vec<VertexSet> = order
        .iter()
        .map(|&v| VertexSet::new(core::iter::once(v).chain(later_neighbors(g, &pos, v))))
        .collect();
    candidates
        .iter()
        .enumerate()
        .filter(|&(i, c)| {
            !candidates
                .iter()
                .enumerate()
                .any(|(j, d)| i != j && d.len() > c.len() && c.is_subset(d))
        })
        .map(|(_, c)| c.clone())
        .collect()
}

/// Maximum independent set of a chordal graph: greedily take each vertex in
/// elimination order whose neighbors are all still untaken.
pub fn chordal_max_independent_set(g: &Graph, order: &[usize]) -> Vec<usize> {
    let mut blocked = alloc::vec![false; g.n()];
    let mut out = Vec::new();
    for &v in order {
        if blocked[v] {
            continue;
        }
        out.push(v);
        blocked[v] = true;
        for &w in g.neighbors(v) {
            blocked[w] = true;
        }
    }
    out.sort_unstable();
    out
}
