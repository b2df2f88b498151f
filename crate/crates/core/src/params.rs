//! Claw number and independence number via the clique ordering.

use alloc::vec::Vec;

use crate::graph::Graph;
use crate::interval::CliqueOrdering;
use crate::labelling::Labelling;

/// `⌈log₂ x⌉`, with `0` for `x ≤ 1`.
pub fn ceil_log2(x: usize) -> u32 {
    if x <= 1 {
        0
    } else {
        usize::BITS - (x - 1).leading_zeros()
    }
}

/// Largest independent set inside `N(v)`, by earliest clique-run end.
/// Returns the size and the chosen leaves.
pub fn neighborhood_mis(ord: &CliqueOrdering, g: &Graph, v: usize) -> (usize, Vec<usize>) {
    let mut nbrs: Vec<usize> = g.neighbors(v).to_vec();
    nbrs.sort_by_key(|&w| (ord.right[w], w));
    let mut leaves: Vec<usize> = Vec::new();
    for w in nbrs {
        if leaves.last().is_none_or(|&last| ord.left[w] > ord.right[last]) {
            leaves.push(w);
        }
    }
    (leaves.len(), leaves)
}

/// Center and leaves of an induced star `S(ψ)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ClawWitness {
    pub center: Option<usize>,
    pub leaves: Vec<usize>,
}

impl ClawWitness {
    /// Leaves pairwise non-adjacent and all adjacent to the center.
    pub fn is_induced_star(&self, g: &Graph) -> bool {
        match self.center {
            None => self.leaves.is_empty(),
            Some(c) => self.leaves.iter().all(|&x| x != c && g.has_edge(c, x)) && g.is_independent(&self.leaves),
        }
    }
}

/// Claw number `ψ`: the largest `m` with an induced `S(m)`; `0` when
/// edgeless. Ties go to the lowest-index center.
pub fn claw_number(ord: &CliqueOrdering, g: &Graph) -> (usize, ClawWitness) {
    let mut best = (0, ClawWitness::default());
    for v in 0..g.n() {
        let (m, leaves) = neighborhood_mis(ord, g, v);
        if m > best.0 {
            best = (
                m,
                ClawWitness {
                    center: Some(v),
                    leaves,
                },
            );
        }
    }
    best
}

pub fn independence_number(lab: &Labelling) -> usize {
    lab.alpha()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamReport {
    pub psi: usize,
    pub alpha: usize,
    pub psi_witness: ClawWitness,
    /// `⌈log₂ψ⌉` when `ψ ≥ 1`.
    pub lower_bound: Option<u32>,
}

pub fn param_report(g: &Graph, ord: &CliqueOrdering, lab: &Labelling) -> ParamReport {
    let (psi, psi_witness) = claw_number(ord, g);
    ParamReport {
        psi,
        alpha: independence_number(lab),
        psi_witness,
        lower_bound: (psi >= 1).then(|| ceil_log2(psi)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexSet;
    use crate::interval::recognize_and_order;
    use crate::labelling::label_vertices;
    use alloc::vec;

    #[test]
    fn ceil_log2_values() {
        let expected = [0, 0, 1, 2, 2, 3, 3, 3, 3, 4];
        for (x, e) in expected.iter().enumerate() {
            assert_eq!(ceil_log2(x), *e, "x = {x}");
        }
        assert_eq!(ceil_log2(1 << 20), 20);
        assert_eq!(ceil_log2((1 << 20) + 1), 21);
    }

    #[test]
    fn p3_claw() {
        let g = Graph::path(3);
        let ord = recognize_and_order(&g).unwrap();
        let (psi, w) = claw_number(&ord, &g);
        assert_eq!(psi, 2);
        assert_eq!(w.center, Some(1));
        assert_eq!(VertexSet::new(w.leaves.iter().copied()), VertexSet::new([0, 2]));
        assert!(w.is_induced_star(&g));
        assert_eq!(neighborhood_mis(&ord, &g, 0).0, 1);
    }

    #[test]
    fn star_and_complete() {
        let g = Graph::star(4);
        let ord = recognize_and_order(&g).unwrap();
        assert_eq!(claw_number(&ord, &g).0, 4);
        assert_eq!(neighborhood_mis(&ord, &g, 0).0, 4);
        assert_eq!(neighborhood_mis(&ord, &g, 3).0, 1);
        let lab = label_vertices(&ord).unwrap();
        assert_eq!(independence_number(&lab), 4);

        for n in 2..6 {
            let k = Graph::complete(n);
            let ord = recognize_and_order(&k).unwrap();
            assert_eq!(claw_number(&ord, &k).0, 1);
            assert_eq!(independence_number(&label_vertices(&ord).unwrap()), 1);
        }
    }

    #[test]
    fn edgeless_graph_has_zero_claw() {
        let g = Graph::empty(3);
        let ord = recognize_and_order(&g).unwrap();
        let lab = label_vertices(&ord).unwrap();
        let report = param_report(&g, &ord, &lab);
        assert_eq!(report.psi, 0);
        assert_eq!(report.psi_witness, ClawWitness::default());
        assert_eq!(report.lower_bound, None);
        assert_eq!(report.alpha, 3);
        assert_eq!(neighborhood_mis(&ord, &g, 1), (0, vec![]));
    }
}
