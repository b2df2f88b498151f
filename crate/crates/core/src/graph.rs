//! Simple undirected graphs on dense vertex indices `0..n`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

/// Strictly increasing list of vertex indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(vertices: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = vertices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    pub fn range(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        let mut it = other.0.iter();
        self.0.iter().all(|x| it.any(|y| y == x))
    }

    pub fn insert(&mut self, v: usize) {
        if let Err(pos) = self.0.binary_search(&v) {
            self.0.insert(pos, v);
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter)
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a usize;
    type IntoIter = core::slice::Iter<'a, usize>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
}

/// Simple undirected graph; adjacency lists are kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: alloc::vec![Vec::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        Graph {
            adj: (0..n).map(|u| (0..n).filter(|&v| v != u).collect()).collect(),
        }
    }

    /// Path `0 - 1 - ... - n-1`.
    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).unwrap()
    }

    pub fn cycle(n: usize) -> Self {
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).unwrap()
    }

    /// Star `S(m)`: center `0`, leaves `1..=m`.
    pub fn star(m: usize) -> Self {
        Graph::from_edges(m + 1, (1..=m).map(|v| (0, v))).unwrap()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(GraphError::OutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if let Err(pos) = self.adj[u].binary_search(&v) {
            self.adj[u].insert(pos, v);
            let pos = self.adj[v].binary_search(&u).unwrap_err();
            self.adj[v].insert(pos, u);
        }
        Ok(())
    }

    /// Appends a new isolated vertex and returns its index.
    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    /// Copy of `self` with one extra vertex (index `n`) adjacent to everything.
    pub fn with_universal_vertex(&self) -> Graph {
        let mut g = self.clone();
        let w = g.add_vertex();
        for u in 0..w {
            g.add_edge(u, w).unwrap();
        }
        g
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn is_complete(&self) -> bool {
        self.adj.iter().all(|nb| nb.len() + 1 == self.n())
    }

    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| u != v && !self.has_edge(u, v)))
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = alloc::vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = alloc::vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Canonical edge-list text: `n m` header then sorted `u v` lines.
    pub fn to_edge_list(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} {}", self.n(), self.edge_count());
        for (u, v) in self.edges() {
            let _ = writeln!(s, "{u} {v}");
        }
        s
    }
}

/// Parses the edge-list interchange format. Blank lines and `#` comments are
/// skipped; duplicate edges collapse.
pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines.next().ok_or(GraphError::Malformed {
        line: 1,
        message: "missing \"n m\" header".into(),
    })?;
    let [n, m] = parse_pair(header_line, header)?;
    let mut g = Graph::empty(n);
    let mut seen = 0usize;
    for (line, l) in lines {
        if seen == m {
            return Err(GraphError::Malformed {
                line,
                message: alloc::format!("more than the declared {m} edges"),
            });
        }
        let [u, v] = parse_pair(line, l)?;
        g.add_edge(u, v)?;
        seen += 1;
    }
    if seen < m {
        return Err(GraphError::Malformed {
            line: text.lines().count().max(1),
            message: alloc::format!("expected {m} edges, found {seen}"),
        });
    }
    Ok(g)
}

fn parse_pair(line: usize, text: &str) -> Result<[usize; 2], GraphError> {
    let mut it = text.split_whitespace();
    let mut next = || -> Result<usize, GraphError> {
        let tok = it.next().ok_or_else(|| GraphError::Malformed {
            line,
            message: "expected two integers".into(),
        })?;
        tok.parse().map_err(|_| GraphError::Malformed {
            line,
            message: alloc::format!("not a non-negative integer: {tok:?}"),
        })
    };
    let pair = [next()?, next()?];
    if it.next().is_some() {
        return Err(GraphError::Malformed {
            line,
            message: "trailing tokens".into(),
        });
    }
    Ok(pair)
}

/// Subgraph induced on `set`, relabelled `0..|set|` in increasing order.
/// The returned map sends each new index to its original vertex.
pub fn induced_subgraph(g: &Graph, set: &VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
    let n = g.n();
    let mut index = alloc::vec![usize::MAX; n];
    for (i, v) in set.iter().enumerate() {
        if v >= n {
            return Err(GraphError::OutOfRange { vertex: v, n });
        }
        index[v] = i;
    }
    let adj = set
        .iter()
        .map(|u| {
            g.neighbors(u)
                .iter()
                .filter_map(|&v| (index[v] != usize::MAX).then_some(index[v]))
                .collect()
        })
        .collect();
    Ok((Graph { adj }, set.as_slice().to_vec()))
}

/// All non-adjacent pairs `(u, v)`, `u < v`, in lexicographic order.
pub fn non_edges(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.n();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                out.push((u, v));
            }
        }
    }
    out
}
