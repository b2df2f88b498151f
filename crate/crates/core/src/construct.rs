//! Cube representations of interval graphs.
//!
//! For claw number `ψ ≥ 2` the graph is padded so its claw number becomes
//! `ψ' = 2^p`, then every vertex gets `p + 2` coordinates: in dimension `i`
//! a vertex sits at `f(r(u)) − ψ' + 1/2` when bit `i` of its `γ` label is 0
//! and at `f(l(u))` otherwise. Two vertices are adjacent iff every
//! coordinate differs by at most `ψ' − 1/2`. Here `f` maps clique indices to
//! a strictly increasing scale anchored at `f(r(u_i)) = i`, and
//! `γ(u) = η(u) mod ψ' + ψ'` (or `+ 2ψ'` when `⌊η(u)/ψ'⌋` is odd), so the
//! low `p` bits of `γ` copy those of `η` and bits `p`, `p+1` encode the
//! parity of the `η` block.

use alloc::vec::Vec;

use crate::graph::{Graph, VertexSet};
use crate::interval::{recognize_and_order, CliqueOrdering, NotInterval};
use crate::labelling::{label_vertices, Labelling};
use crate::params::{ceil_log2, claw_number, neighborhood_mis};
use crate::rational::{abs_diff, half, int, is_zero, Rational};
use crate::verify::complete_dimensions;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructError {
    #[error(transparent)]
    NotInterval(#[from] NotInterval),
    #[error("claw number {0} is below 2")]
    ClawTooSmall(usize),
    #[error("graph is not a disjoint union of cliques")]
    NotCliqueUnion,
    #[error("representation rows disagree with dimension {0}")]
    Shape(usize),
    #[error("internal invariant failed: {0}")]
    Internal(&'static str),
}

/// Vertices mapped to points; `u ~ v` iff `max_i |x_i(u) − x_i(v)| ≤ side`.
/// Equivalently, closed cubes of side `side` anchored at those points meet.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CubeRepresentation {
    pub dimension: usize,
    pub side: Rational,
    pub coords: Vec<Vec<Rational>>,
}

impl CubeRepresentation {
    pub fn new(dimension: usize, side: Rational, coords: Vec<Vec<Rational>>) -> Result<Self, ConstructError> {
        if coords.iter().any(|row| row.len() != dimension) {
            return Err(ConstructError::Shape(dimension));
        }
        Ok(CubeRepresentation {
            dimension,
            side,
            coords,
        })
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.coords[u]
            .iter()
            .zip(&self.coords[v])
            .all(|(a, b)| abs_diff(a, b) <= self.side)
    }

    /// Rows of the given vertices, in the given order.
    pub fn restrict(&self, vertices: &[usize]) -> CubeRepresentation {
        CubeRepresentation {
            dimension: self.dimension,
            side: self.side,
            coords: vertices.iter().map(|&v| self.coords[v].clone()).collect(),
        }
    }

    /// Removes the listed dimensions.
    pub fn drop_dimensions(&self, drop: &[usize]) -> CubeRepresentation {
        let keep: Vec<usize> = (0..self.dimension).filter(|i| !drop.contains(i)).collect();
        CubeRepresentation {
            dimension: keep.len(),
            side: self.side,
            coords: self
                .coords
                .iter()
                .map(|row| keep.iter().map(|&i| row[i]).collect())
                .collect(),
        }
    }
}

/// `⌊a / 2^i⌋ mod 2`.
pub fn bit(a: usize, i: u32) -> u8 {
    a.checked_shr(i).map_or(0, |x| (x & 1) as u8)
}

/// `G` extended with pendant vertices so that its claw number is a power of
/// two. Original vertices keep their indices; pendants follow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaddedGraph {
    pub graph: Graph,
    pub ordering: CliqueOrdering,
    pub original: VertexSet,
    pub p: u32,
    pub added: usize,
    /// Vertex the pendants hang from, when any were added.
    pub anchor: Option<usize>,
}

impl PaddedGraph {
    pub fn psi_prime(&self) -> usize {
        1 << self.p
    }
}

/// Pads `g` to claw number `2^⌈log₂ψ⌉`. When `ψ` is already a power of two
/// the graph is returned unchanged. Otherwise the vertex of the last clique
/// with the largest neighborhood independent set (lowest index on ties)
/// receives `2^p − m` new pendant neighbors, each in its own new clique
/// appended after the last one.
pub fn pad_graph(g: &Graph, ord: &CliqueOrdering) -> Result<PaddedGraph, ConstructError> {
    let (psi, _) = claw_number(ord, g);
    if psi < 2 {
        return Err(ConstructError::ClawTooSmall(psi));
    }
    let p = ceil_log2(psi);
    let target = 1usize << p;
    let n = g.n();
    if psi == target {
        return Ok(PaddedGraph {
            graph: g.clone(),
            ordering: ord.clone(),
            original: VertexSet::range(n),
            p,
            added: 0,
            anchor: None,
        });
    }

    let last = ord.cliques.last().ok_or(ConstructError::Internal("no cliques"))?;
    let (anchor, m) = last
        .iter()
        .map(|v| (v, neighborhood_mis(ord, g, v).0))
        .fold(None, |best: Option<(usize, usize)>, (v, m)| match best {
            Some((_, bm)) if bm >= m => best,
            _ => Some((v, m)),
        })
        .expect("cliques are non-empty");
    let added = target - m;

    let mut graph = g.clone();
    let mut cliques = ord.cliques.clone();
    // An isolated anchor's singleton clique would stop being maximal once
    // the first pendant arrives; the pendant cliques take its place.
    if last.len() == 1 {
        cliques.pop();
    }
    for _ in 0..added {
        let x = graph.add_vertex();
        graph.add_edge(anchor, x).expect("fresh vertex");
        cliques.push(VertexSet::new([anchor, x]));
    }
    let ordering = CliqueOrdering::from_cliques(graph.n(), cliques).expect("pendants are covered");
    if claw_number(&ordering, &graph).0 != target {
        return Err(ConstructError::Internal("padded claw number is not a power of two"));
    }
    Ok(PaddedGraph {
        graph,
        ordering,
        original: VertexSet::range(n),
        p,
        added,
        anchor: Some(anchor),
    })
}

/// `f` over clique indices `0..k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FTable {
    pub values: Vec<Rational>,
}

/// `f(0) = 0` and, between consecutive primary right ends `a = r(u_i)` and
/// `b = r(u_{i+1})`, `f(j) = i + 1/2 + (j − a) / (2(b − a))` for `a < j ≤ b`.
pub fn compute_f(ord: &CliqueOrdering, lab: &Labelling) -> Result<FTable, ConstructError> {
    let k = ord.k();
    let mut values: Vec<Option<Rational>> = alloc::vec![None; k];
    let ends: Vec<usize> = lab.primary.iter().map(|&u| ord.right[u]).collect();
    if ends.first() != Some(&0) || ends.last() != Some(&(k - 1)) {
        return Err(ConstructError::Internal("primary right ends do not span the ordering"));
    }
    values[0] = Some(int(0));
    for (i, w) in ends.windows(2).enumerate() {
        let (a, b) = (w[0], w[1]);
        if b <= a {
            return Err(ConstructError::Internal("primary right ends not increasing"));
        }
        for j in a + 1..=b {
            let step = Rational::new((j - a) as i64, 2 * (b - a) as i64);
            values[j] = Some(int(i) + half() + step);
        }
    }
    let values = values
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or(ConstructError::Internal("f left undefined"))?;
    Ok(FTable { values })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaTable {
    pub values: Vec<usize>,
}

pub fn gamma(eta: usize, psi_prime: usize) -> usize {
    let block = if (eta / psi_prime).is_multiple_of(2) {
        psi_prime
    } else {
        2 * psi_prime
    };
    eta % psi_prime + block
}

pub fn gamma_label(lab: &Labelling, psi_prime: usize) -> GammaTable {
    GammaTable {
        values: lab.eta.iter().map(|&e| gamma(e, psi_prime)).collect(),
    }
}

/// Which endpoint a coordinate was taken from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    /// Bit 0: `f(r(u)) − ψ' + 1/2`.
    Right,
    /// Bit 1: `f(l(u))`.
    Left,
}

/// Intermediate tables of a claw-variant build, for auditing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionTrace {
    pub padded: PaddedGraph,
    pub labelling: Labelling,
    pub f: FTable,
    pub gamma: GammaTable,
    pub psi: usize,
    pub psi_prime: usize,
    /// `bit_index[d]`: the `γ` bit read by dimension `d`.
    pub bit_index: Vec<u32>,
    /// `branches[v][d]` for every vertex of the padded graph.
    pub branches: Vec<Vec<Branch>>,
    /// Full coordinates on the padded graph, before restriction.
    pub padded_coords: Vec<Vec<Rational>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub representation: CubeRepresentation,
    /// Absent when the graph was routed to the degenerate builder.
    pub trace: Option<ConstructionTrace>,
}

/// Claw-variant build: `⌈log₂ψ⌉ + 2` dimensions, side `ψ' − 1/2`.
/// Graphs with `ψ ≤ 1` get the one-dimensional degenerate layout.
pub fn build_representation(g: &Graph) -> Result<Construction, ConstructError> {
    let ord = recognize_and_order(g)?;
    build_from_ordering(g, &ord)
}

/// [`build_representation`] with a caller-supplied clique ordering.
pub fn build_from_ordering(g: &Graph, ord: &CliqueOrdering) -> Result<Construction, ConstructError> {
    let (psi, _) = claw_number(ord, g);
    if psi < 2 {
        let mut representation = build_degenerate(g)?;
        if representation.dimension == 0 {
            representation = CubeRepresentation {
                dimension: 1,
                side: int(1),
                coords: alloc::vec![alloc::vec![int(0)]; g.n()],
            };
        }
        return Ok(Construction {
            representation,
            trace: None,
        });
    }

    let padded = pad_graph(g, ord)?;
    let ordp = &padded.ordering;
    let labelling = label_vertices(ordp).map_err(|_| ConstructError::Internal("empty padded graph"))?;
    let f = compute_f(ordp, &labelling)?;
    let psi_prime = padded.psi_prime();
    let gamma = gamma_label(&labelling, psi_prime);
    let dims = padded.p + 2;
    let side = int(psi_prime) - half();
    let shift = int(psi_prime) - half();

    let bit_index: Vec<u32> = (0..dims).collect();
    let mut branches = Vec::with_capacity(padded.graph.n());
    let mut padded_coords = Vec::with_capacity(padded.graph.n());
    for u in 0..padded.graph.n() {
        let mut row_branch = Vec::with_capacity(dims as usize);
        let mut row = Vec::with_capacity(dims as usize);
        for &i in &bit_index {
            if bit(gamma.values[u], i) == 0 {
                row_branch.push(Branch::Right);
                row.push(f.values[ordp.right[u]] - shift);
            } else {
                row_branch.push(Branch::Left);
                row.push(f.values[ordp.left[u]]);
            }
        }
        branches.push(row_branch);
        padded_coords.push(row);
    }

    let full = CubeRepresentation {
        dimension: dims as usize,
        side,
        coords: padded_coords.clone(),
    };
    let representation = full.restrict(padded.original.as_slice());
    let trace = ConstructionTrace {
        padded,
        labelling,
        f,
        gamma,
        psi,
        psi_prime,
        bit_index,
        branches,
        padded_coords,
    };
    Ok(Construction {
        representation,
        trace: Some(trace),
    })
}

/// Layout for graphs with claw number at most one (disjoint cliques): the
/// `j`-th clique sits at coordinate `2j` with side 1. Complete graphs get
/// the zero-dimensional representation.
pub fn build_degenerate(g: &Graph) -> Result<CubeRepresentation, ConstructError> {
    let comps = g.components();
    if comps.iter().any(|c| !g.is_clique(c)) {
        return Err(ConstructError::NotCliqueUnion);
    }
    if comps.len() <= 1 {
        return Ok(CubeRepresentation {
            dimension: 0,
            side: int(1),
            coords: alloc::vec![Vec::new(); g.n()],
        });
    }
    let mut coords = alloc::vec![Vec::new(); g.n()];
    for (j, comp) in comps.iter().enumerate() {
        for &v in comp {
            coords[v] = alloc::vec![int(2 * j)];
        }
    }
    Ok(CubeRepresentation {
        dimension: 1,
        side: int(1),
        coords,
    })
}

/// `⌈log₂α⌉`-dimensional build: add a universal vertex (so `ψ = α`), run
/// the claw variant, drop every dimension in which all points are within
/// `side` of each other, then drop the universal vertex.
pub fn build_alpha_representation(g: &Graph) -> Result<CubeRepresentation, ConstructError> {
    let ord = recognize_and_order(g)?;
    build_alpha_from_ordering(g, &ord)
}

pub fn build_alpha_from_ordering(g: &Graph, ord: &CliqueOrdering) -> Result<CubeRepresentation, ConstructError> {
    let n = g.n();
    if g.is_complete() {
        return Ok(CubeRepresentation {
            dimension: 0,
            side: int(1),
            coords: alloc::vec![Vec::new(); n],
        });
    }
    let augmented = g.with_universal_vertex();
    let cliques = ord
        .cliques
        .iter()
        .map(|c| {
            let mut c = c.clone();
            c.insert(n);
            c
        })
        .collect();
    let aug_ord = CliqueOrdering::from_cliques(n + 1, cliques).expect("universal vertex lies in every clique");
    let built = build_from_ordering(&augmented, &aug_ord)?.representation;
    let complete = complete_dimensions(&built);
    let originals: Vec<usize> = (0..n).collect();
    Ok(built.drop_dimensions(&complete).restrict(&originals))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    Claw,
    Alpha,
    Degenerate,
}

/// Lower of the claw-variant and α-variant dimensions (ties go to the
/// α-variant); claw number ≤ 1 uses the degenerate layout.
pub fn build_best(g: &Graph) -> Result<(CubeRepresentation, Variant), ConstructError> {
    let ord = recognize_and_order(g)?;
    build_best_from_ordering(g, &ord)
}

pub fn build_best_from_ordering(
    g: &Graph,
    ord: &CliqueOrdering,
) -> Result<(CubeRepresentation, Variant), ConstructError> {
    let (psi, _) = claw_number(ord, g);
    if psi < 2 {
        return Ok((build_degenerate(g)?, Variant::Degenerate));
    }
    let alpha = label_vertices(ord)
        .map_err(|_| ConstructError::Internal("empty graph"))?
        .alpha();
    if ceil_log2(alpha) <= ceil_log2(psi) + 2 {
        Ok((build_alpha_from_ordering(g, ord)?, Variant::Alpha))
    } else {
        Ok((build_from_ordering(g, ord)?.representation, Variant::Claw))
    }
}

/// Rescales to unit side. Zero-dimensional input is returned unchanged.
pub fn normalize_unit(rep: &CubeRepresentation) -> CubeRepresentation {
    if rep.dimension == 0 || is_zero(&rep.side) {
        return rep.clone();
    }
    CubeRepresentation {
        dimension: rep.dimension,
        side: int(1),
        coords: rep
            .coords
            .iter()
            .map(|row| row.iter().map(|x| x / rep.side).collect())
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::validate_ordering;
    use crate::labelling::check_observations;
    use crate::verify::{check_trace, verify_representation};
    use alloc::vec;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn qs(v: &[(i64, i64)]) -> Vec<Rational> {
        v.iter().map(|&(n, d)| q(n, d)).collect()
    }

    fn column(rep: &CubeRepresentation, d: usize) -> Vec<Rational> {
        rep.coords.iter().map(|r| r[d]).collect()
    }

    /// S(4) laid out as x1 = 0, c = 1, x2 = 2, x3 = 3, x4 = 4 with cliques
    /// {c, x1}, {c, x2}, {c, x3}, {c, x4}.
    fn star4() -> (Graph, CliqueOrdering) {
        let g = Graph::from_edges(5, [(1, 0), (1, 2), (1, 3), (1, 4)]).unwrap();
        let ord =
            CliqueOrdering::from_cliques(5, [0, 2, 3, 4].iter().map(|&x| VertexSet::new([1, x])).collect()).unwrap();
        (g, ord)
    }

    #[test]
    fn bit_examples() {
        assert_eq!(bit(4, 2), 1);
        assert_eq!(bit(5, 1), 0);
        assert_eq!(bit(0, 7), 0);
        assert_eq!(bit(usize::MAX, 200), 0);
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma(0, 2), 2);
        assert_eq!(gamma(1, 2), 3);
        assert_eq!(gamma(5, 4), 9);
    }

    #[test]
    fn f_tables() {
        let (_, ord) = star4();
        let lab = label_vertices(&ord).unwrap();
        assert_eq!(
            compute_f(&ord, &lab).unwrap().values,
            qs(&[(0, 1), (1, 1), (2, 1), (3, 1)])
        );

        let p3 = recognize_and_order(&Graph::path(3)).unwrap();
        let lab = label_vertices(&p3).unwrap();
        assert_eq!(compute_f(&p3, &lab).unwrap().values, qs(&[(0, 1), (1, 1)]));

        let k4 = recognize_and_order(&Graph::complete(4)).unwrap();
        let lab = label_vertices(&k4).unwrap();
        assert_eq!(compute_f(&k4, &lab).unwrap().values, qs(&[(0, 1)]));
    }

    #[test]
    fn f_interpolates_between_primary_ends() {
        // Cliques {0,1}, {1,2,3}, {2,3,4}: primaries 0 and 2 end at cliques 0
        // and 2, so f(1) = 1/2 + 1/4.
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]).unwrap();
        let ord = CliqueOrdering::from_cliques(
            5,
            vec![
                VertexSet::new([0, 1]),
                VertexSet::new([1, 2, 3]),
                VertexSet::new([2, 3, 4]),
            ],
        )
        .unwrap();
        assert!(validate_ordering(&g, &ord).is_ok());
        let lab = label_vertices(&ord).unwrap();
        assert_eq!(lab.primary, vec![0, 2]);
        assert_eq!(compute_f(&ord, &lab).unwrap().values, qs(&[(0, 1), (3, 4), (1, 1)]));
    }

    #[test]
    fn padding_examples() {
        let s3 = Graph::star(3);
        let ord = recognize_and_order(&s3).unwrap();
        let padded = pad_graph(&s3, &ord).unwrap();
        assert_eq!((padded.p, padded.added, padded.anchor), (2, 1, Some(0)));
        assert_eq!(padded.graph, Graph::star(4));
        assert!(validate_ordering(&padded.graph, &padded.ordering).is_ok());

        let p3 = Graph::path(3);
        let padded = pad_graph(&p3, &recognize_and_order(&p3).unwrap()).unwrap();
        assert_eq!(padded.added, 0);
        assert_eq!(padded.graph, p3);

        let s5 = Graph::star(5);
        let ord = recognize_and_order(&s5).unwrap();
        let padded = pad_graph(&s5, &ord).unwrap();
        assert_eq!(padded.added, 3);
        assert_eq!(claw_number(&padded.ordering, &padded.graph).0, 8);
        assert_eq!(padded.ordering.k(), ord.k() + 3);

        let k3 = Graph::complete(3);
        assert_eq!(
            pad_graph(&k3, &recognize_and_order(&k3).unwrap()),
            Err(ConstructError::ClawTooSmall(1))
        );
    }

    #[test]
    fn padding_isolated_last_vertex() {
        // S(3) plus an isolated vertex 4 whose singleton clique comes last.
        let g = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let cliques = vec![
            VertexSet::new([0, 1]),
            VertexSet::new([0, 2]),
            VertexSet::new([0, 3]),
            VertexSet::new([4]),
        ];
        let ord = CliqueOrdering::from_cliques(5, cliques).unwrap();
        let padded = pad_graph(&g, &ord).unwrap();
        assert_eq!((padded.anchor, padded.added), (Some(4), 4));
        assert!(validate_ordering(&padded.graph, &padded.ordering).is_ok());
        assert_eq!(padded.ordering.k(), 3 + 4);
        let built = build_from_ordering(&g, &ord).unwrap();
        assert!(verify_representation(&g, &built.representation).unwrap().ok);
        let t = built.trace.unwrap();
        assert!(check_trace(&t, &t.padded.ordering, &t.labelling).is_ok());
    }

    #[test]
    fn p3_coordinates() {
        let g = Graph::path(3);
        let built = build_representation(&g).unwrap();
        let rep = &built.representation;
        assert_eq!((rep.dimension, rep.side), (3, q(3, 2)));
        assert_eq!(column(rep, 0), qs(&[(-3, 2), (-1, 2), (1, 1)]));
        assert_eq!(column(rep, 1), qs(&[(0, 1), (0, 1), (1, 1)]));
        assert_eq!(column(rep, 2), qs(&[(-3, 2), (-1, 2), (-1, 2)]));
        assert!(verify_representation(&g, rep).unwrap().ok);
        let trace = built.trace.unwrap();
        assert!(check_trace(&trace, &trace.padded.ordering, &trace.labelling).is_ok());
    }

    #[test]
    fn star4_coordinates() {
        let (g, ord) = star4();
        let built = build_from_ordering(&g, &ord).unwrap();
        let rep = &built.representation;
        assert_eq!((rep.dimension, rep.side), (4, q(7, 2)));
        assert_eq!(column(rep, 0), qs(&[(-7, 2), (-1, 2), (1, 1), (-3, 2), (3, 1)]));
        let report = verify_representation(&g, rep).unwrap();
        assert!(report.ok);
        // Every leaf pair is separated using the two low dimensions alone.
        let low = rep.drop_dimensions(&[2, 3]);
        assert!(verify_representation(&g, &low).unwrap().ok);
        assert_eq!(complete_dimensions(rep), vec![2, 3]);
    }

    #[test]
    fn complete_graph_routes_to_degenerate() {
        let built = build_representation(&Graph::complete(3)).unwrap();
        assert!(built.trace.is_none());
        assert_eq!(built.representation.dimension, 1);
        assert!(built.representation.coords.iter().all(|r| r == &vec![int(0)]));
    }

    #[test]
    fn degenerate_examples() {
        let k5 = build_degenerate(&Graph::complete(5)).unwrap();
        assert_eq!(k5.dimension, 0);

        let two = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let rep = build_degenerate(&two).unwrap();
        assert_eq!(rep.dimension, 1);
        assert_eq!(column(&rep, 0), qs(&[(0, 1), (0, 1), (0, 1), (2, 1), (2, 1), (2, 1)]));
        assert!(verify_representation(&two, &rep).unwrap().ok);

        let rep = build_degenerate(&Graph::empty(3)).unwrap();
        assert_eq!(column(&rep, 0), qs(&[(0, 1), (2, 1), (4, 1)]));

        assert_eq!(build_degenerate(&Graph::path(3)), Err(ConstructError::NotCliqueUnion));
    }

    #[test]
    fn alpha_variant_examples() {
        let p3 = Graph::path(3);
        let rep = build_alpha_representation(&p3).unwrap();
        assert_eq!(rep.dimension, 1);
        assert!(verify_representation(&p3, &rep).unwrap().ok);

        let s4 = Graph::star(4);
        let rep = build_alpha_representation(&s4).unwrap();
        assert_eq!(rep.dimension, 2);
        assert!(verify_representation(&s4, &rep).unwrap().ok);

        let k4 = Graph::complete(4);
        assert_eq!(build_alpha_representation(&k4).unwrap().dimension, 0);
    }

    #[test]
    fn best_variant_examples() {
        let (rep, variant) = build_best(&Graph::star(4)).unwrap();
        assert_eq!((rep.dimension, variant), (2, Variant::Alpha));
        let (rep, _) = build_best(&Graph::path(3)).unwrap();
        assert_eq!(rep.dimension, 1);
        let p7 = Graph::path(7);
        let (rep, variant) = build_best(&p7).unwrap();
        assert_eq!((rep.dimension, variant), (2, Variant::Alpha));
        assert!(verify_representation(&p7, &rep).unwrap().ok);
        assert_eq!(build_representation(&p7).unwrap().representation.dimension, 3);

        assert_eq!(
            build_best(&Graph::cycle(4)).unwrap_err(),
            ConstructError::NotInterval(recognize_and_order(&Graph::cycle(4)).unwrap_err())
        );
    }

    #[test]
    fn normalization() {
        let rep = build_representation(&Graph::path(3)).unwrap().representation;
        let unit = normalize_unit(&rep);
        assert_eq!(unit.side, int(1));
        assert_eq!(column(&unit, 0), qs(&[(-1, 1), (-1, 3), (2, 3)]));
        assert!(verify_representation(&Graph::path(3), &unit).unwrap().ok);
        assert_eq!(normalize_unit(&unit), unit);
        let zero = build_degenerate(&Graph::complete(2)).unwrap();
        assert_eq!(normalize_unit(&zero), zero);
    }

    #[test]
    fn observations_hold_on_padded_orderings() {
        let g = Graph::star(6);
        let trace = build_representation(&g).unwrap().trace.unwrap();
        let padded = &trace.padded;
        assert!(check_observations(&padded.graph, &padded.ordering, &trace.labelling).is_ok());
    }
}
