use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{check_limit, OracleError, ORACLE_MAX_NON_EDGES, ORACLE_MAX_VERTICES};
use crate::graph::{non_edges, Graph};
use crate::rational::Rational;
use crate::report::next_permutation;

/// `order` lists vertices left to right; it is an umbrella order when
/// `a < b < c` and `a ~ c` imply `a ~ b` and `b ~ c`.
fn is_umbrella(g: &Graph, order: &[usize]) -> bool {
    let n = order.len();
    for a in 0..n {
        for c in a + 2..n {
            if g.has_edge(order[a], order[c])
                && (a + 1..c).any(|b| !g.has_edge(order[a], order[b]) || !g.has_edge(order[b], order[c]))
            {
                return false;
            }
        }
    }
    true
}

/// Indifference-graph test by searching all vertex orders for an umbrella
/// order; returns one when found.
pub fn is_indifference(g: &Graph) -> Result<Option<Vec<usize>>, OracleError> {
    check_limit("vertex count", g.n(), ORACLE_MAX_VERTICES)?;
    let mut order: Vec<usize> = (0..g.n()).collect();
    loop {
        if is_umbrella(g, &order) {
            return Ok(Some(order));
        }
        if !next_permutation(&mut order) {
            return Ok(None);
        }
    }
}

/// An edge-minimal indifference supergraph `H ⊇ G`, recorded by which
/// non-edges of `G` it still misses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    /// Bit `i` set when `non_edges[i]` is absent from `H`.
    pub missing: u32,
    /// An umbrella order of `H`.
    pub order: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndifferenceCandidates {
    pub non_edges: Vec<(usize, usize)>,
    /// Inclusion-maximal missing sets, largest first.
    pub candidates: Vec<Candidate>,
    pub permutations: u64,
}

impl IndifferenceCandidates {
    pub fn missing_pairs(&self, missing: u32) -> Vec<(usize, usize)> {
        self.non_edges
            .iter()
            .enumerate()
            .filter(|(i, _)| missing >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect()
    }

    /// `H` itself: `g` plus every non-edge not in `missing`.
    pub fn supergraph(&self, g: &Graph, missing: u32) -> Graph {
        let mut h = g.clone();
        for (i, &(u, v)) in self.non_edges.iter().enumerate() {
            if missing >> i & 1 == 0 {
                h.add_edge(u, v).unwrap();
            }
        }
        h
    }
}

/// Every indifference supergraph has an umbrella order, and for a fixed
/// order the edge-minimal supergraph it admits is forced: each position
/// must reach at least as far right as its predecessor and as its farthest
/// `G`-neighbor. Enumerating orders therefore yields every edge-minimal
/// indifference supergraph, i.e. every inclusion-maximal missing set.
pub fn indifference_supergraphs(g: &Graph) -> Result<IndifferenceCandidates, OracleError> {
    let n = g.n();
    check_limit("vertex count", n, ORACLE_MAX_VERTICES)?;
    let non_edges = non_edges(g);
    check_limit("non-edge count", non_edges.len(), ORACLE_MAX_NON_EDGES)?;

    let mut found: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    let mut order: Vec<usize> = (0..n).collect();
    let mut pos = alloc::vec![0usize; n];
    let mut reach = alloc::vec![0usize; n];
    let mut permutations = 0u64;
    loop {
        // An order and its reverse admit the same supergraphs.
        if n < 2 || order[0] < order[n - 1] {
            permutations += 1;
            for (i, &v) in order.iter().enumerate() {
                pos[v] = i;
            }
            let mut far = 0;
            for (i, &v) in order.iter().enumerate() {
                far = g.neighbors(v).iter().map(|&w| pos[w]).fold(far.max(i), usize::max);
                reach[i] = far;
            }
            let mut missing = 0u32;
            for (bit, &(u, v)) in non_edges.iter().enumerate() {
                let (a, b) = if pos[u] < pos[v] {
                    (pos[u], pos[v])
                } else {
                    (pos[v], pos[u])
                };
                if b > reach[a] {
                    missing |= 1 << bit;
                }
            }
            found.entry(missing).or_insert_with(|| order.clone());
        }
        if !next_permutation(&mut order) {
            break;
        }
    }

    let mut all: Vec<(u32, Vec<usize>)> = found.into_iter().collect();
    all.sort_by_key(|&(m, _)| (core::cmp::Reverse(m.count_ones()), m));
    let mut candidates: Vec<Candidate> = Vec::new();
    for (missing, order) in all {
        if !candidates.iter().any(|c| c.missing & missing == missing) {
            candidates.push(Candidate { missing, order });
        }
    }
    Ok(IndifferenceCandidates {
        non_edges,
        candidates,
        permutations,
    })
}

/// Value `a + b·ε` for an infinitesimal `ε > 0`, compared lexicographically.
type Infinitesimal = (i64, i64);

/// Explicit points `x` with `u ~ v ⇔ |x_u − x_v| ≤ 1`, built from an
/// umbrella order by solving difference constraints; `None` if the order
/// does not admit such points. The result is checked pair by pair before it
/// is returned.
pub fn realize_unit_interval(h: &Graph, order: &[usize]) -> Option<Vec<Rational>> {
    let n = h.n();
    if order.len() != n {
        return None;
    }
    if n == 0 {
        return Some(Vec::new());
    }
    // Farthest position adjacent to each position, given the order.
    let reach: Vec<usize> = (0..n)
        .map(|i| {
            (i..n)
                .take_while(|&j| j == i || h.has_edge(order[i], order[j]))
                .last()
                .unwrap()
        })
        .collect();

    // Constraint x[to] − x[from] ≤ w as edge (from, to, w).
    let mut edges: Vec<(usize, usize, Infinitesimal)> = Vec::new();
    for i in 0..n {
        if i + 1 < n {
            edges.push((i + 1, i, (0, 0)));
        }
        if reach[i] > i {
            edges.push((i, reach[i], (1, 0)));
        }
        if reach[i] + 1 < n {
            edges.push((reach[i] + 1, i, (-1, -1)));
        }
    }
    let add = |a: Infinitesimal, b: Infinitesimal| (a.0 + b.0, a.1 + b.1);
    let mut dist: Vec<Infinitesimal> = alloc::vec![(0, 0); n];
    for round in 0..=n {
        let mut changed = false;
        for &(from, to, w) in &edges {
            let cand = add(dist[from], w);
            if cand < dist[to] {
                dist[to] = cand;
                changed = true;
            }
        }
        if !changed {
            break;
        }
        if round == n {
            return None;
        }
    }

    // Largest ε ≤ 1 keeping every constraint true.
    let mut eps = Rational::from_integer(1);
    for &(from, to, w) in &edges {
        let slack_a = w.0 - (dist[to].0 - dist[from].0);
        let slope = (dist[to].1 - dist[from].1) - w.1;
        if slope > 0 && slack_a > 0 {
            eps = eps.min(Rational::new(slack_a, slope));
        }
    }
    let mut x = alloc::vec![Rational::from_integer(0); n];
    for (i, &v) in order.iter().enumerate() {
        x[v] = Rational::from_integer(dist[i].0) + eps * dist[i].1;
    }
    let one = Rational::from_integer(1);
    for u in 0..n {
        for v in u + 1..n {
            let gap = if x[u] > x[v] { x[u] - x[v] } else { x[v] - x[u] };
            if (gap <= one) != h.has_edge(u, v) {
                return None;
            }
        }
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indifference_examples() {
        assert!(is_indifference(&Graph::path(5)).unwrap().is_some());
        assert!(is_indifference(&Graph::complete(4)).unwrap().is_some());
        assert!(is_indifference(&Graph::star(3)).unwrap().is_none());
        assert!(is_indifference(&Graph::cycle(4)).unwrap().is_none());
        assert!(is_indifference(&Graph::empty(9)).is_err());
    }

    #[test]
    fn complete_graph_has_single_empty_candidate() {
        let c = indifference_supergraphs(&Graph::complete(4)).unwrap();
        assert_eq!(c.candidates.len(), 1);
        assert_eq!(c.candidates[0].missing, 0);
    }

    #[test]
    fn p3_is_its_own_candidate() {
        let c = indifference_supergraphs(&Graph::path(3)).unwrap();
        assert_eq!(c.non_edges, [(0, 2)]);
        assert_eq!(c.candidates.len(), 1);
        assert_eq!(c.missing_pairs(c.candidates[0].missing), [(0, 2)]);
    }

    #[test]
    fn c4_candidates_miss_one_diagonal_each() {
        let c = indifference_supergraphs(&Graph::cycle(4)).unwrap();
        assert_eq!(c.non_edges, [(0, 2), (1, 3)]);
        let all = (1u32 << c.non_edges.len()) - 1;
        assert!(c.candidates.iter().all(|cand| cand.missing != all));
        let mut masks: Vec<u32> = c.candidates.iter().map(|cand| cand.missing).collect();
        masks.sort();
        assert_eq!(masks, [1, 2]);
    }

    #[test]
    fn realization_of_paths_and_rejection() {
        let p = Graph::path(4);
        let x = realize_unit_interval(&p, &[0, 1, 2, 3]).unwrap();
        assert!(x.windows(2).all(|w| w[1] - w[0] <= Rational::from_integer(1)));
        assert!(x[2] - x[0] > Rational::from_integer(1));
        // Not an umbrella order of the path.
        assert_eq!(realize_unit_interval(&p, &[0, 2, 1, 3]), None);
        // Star S(3) has no unit-interval model at all.
        assert_eq!(realize_unit_interval(&Graph::star(3), &[1, 0, 2, 3]), None);
    }
}
