//! Simple undirected graphs stored as fixed-width adjacency bit rows.
//!
//! Vertices are labeled `0..vertex_count`. Isolated vertices are allowed; the
//! operations that only make sense for isolated-vertex-free graphs call
//! [`Graph::without_isolated`] first.

mod canonical;
mod enumerate;
mod formats;

pub use canonical::{canonical_form, canonical_labeling, CanonicalCode, MAX_CANONICAL_VERTICES};
pub use enumerate::{
    enumerate_graphs, enumerate_graphs_on_vertices, enumerate_graphs_with_budget,
    DEFAULT_ENUMERATION_BUDGET,
};
pub use formats::{edge_list_decode, edge_list_encode, graph6_decode, graph6_encode};

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("{what} needs n >= {min}, got {n}")]
    TooSmall { what: &'static str, min: usize, n: usize },
    #[error("canonical form supports at most {cap} vertices, got {vertex_count}")]
    CanonicalCapExceeded { vertex_count: usize, cap: usize },
    #[error("enumeration of {requested}-edge graphs exceeds the budget of {budget} edges")]
    EnumerationBudgetExceeded { requested: usize, budget: usize },
    #[error("malformed graph6 at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("malformed edge list at line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
}

/// Square bit matrix; row `v` holds the neighbor set of `v`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    pub fn new(n: usize) -> Self {
        let words = words_for(n);
        BitMatrix {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.n
    }

    /// Number of `u64` words per row.
    #[inline]
    pub fn words(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Sets both `(u, v)` and `(v, u)`.
    #[inline]
    pub fn set_sym(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
        self.bits[v * self.words + u / 64] |= 1 << (u % 64);
    }

    #[inline]
    pub fn clear_sym(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / 64] &= !(1 << (v % 64));
        self.bits[v * self.words + u / 64] &= !(1 << (u % 64));
    }

    #[inline]
    pub fn row_count(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BitMatrix").field("n", &self.n).finish()
    }
}

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

/// Iterates the set bit positions of a multiword bitset.
pub(crate) fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            }
        })
    })
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: BitMatrix,
    edge_count: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: BitMatrix::new(n),
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges and self-loops are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if !g.add_edge(u, v)? {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
        }
        Ok(g)
    }

    /// Adds `uv`; returns `false` if the edge was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        let n = self.vertex_count();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: w,
                    vertex_count: n,
                });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.adj.get(u, v) {
            return Ok(false);
        }
        self.adj.set_sym(u, v);
        self.edge_count += 1;
        Ok(true)
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.adj.size()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && v < self.vertex_count() && self.adj.get(u, v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj.row_count(v)
    }

    pub fn adjacency(&self) -> &BitMatrix {
        &self.adj
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.adj.row(v))
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.vertex_count())
            .flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.vertex_count()).map(|v| self.degree(v)).collect()
    }

    /// Δ(G); 0 for edgeless graphs.
    pub fn max_degree(&self) -> usize {
        (0..self.vertex_count()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// δ(G); 0 for the graph with no vertices.
    pub fn min_degree(&self) -> usize {
        (0..self.vertex_count()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn is_regular(&self) -> bool {
        self.max_degree() == self.min_degree()
    }

    /// Returns the graph `perm(self)`: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.vertex_count(), "permutation length");
        let mut g = Graph::empty(self.vertex_count());
        for (u, v) in self.edges() {
            g.adj.set_sym(perm[u], perm[v]);
        }
        g.edge_count = self.edge_count;
        g
    }

    /// Subgraph induced by `vertices`, relabeled `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.adj.get(u, v) {
                    g.adj.set_sym(i, j);
                    g.edge_count += 1;
                }
            }
        }
        g
    }

    /// Drops isolated vertices; also returns the kept original labels in order.
    pub fn without_isolated(&self) -> (Graph, Vec<usize>) {
        let kept: Vec<usize> = (0..self.vertex_count()).filter(|&v| self.degree(v) > 0).collect();
        (self.induced(&kept), kept)
    }

    /// Connected components, each a sorted vertex list, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Proper 2-coloring of the vertices if the graph is bipartite.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let n = self.vertex_count();
        let mut side: Vec<Option<bool>> = vec![None; n];
        for s in 0..n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for w in self.neighbors(u) {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|s| s.unwrap()).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Whether `self` with `map` applied is a subgraph of `host`.
    pub fn embeds_into(&self, host: &Graph, map: &[usize]) -> bool {
        map.len() == self.vertex_count()
            && map.iter().all(|&v| v < host.vertex_count())
            && {
                let mut seen = map.to_vec();
                seen.sort_unstable();
                seen.windows(2).all(|w| w[0] != w[1])
            }
            && self.edges().all(|(u, v)| host.has_edge(map[u], map[v]))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; ", self.vertex_count())?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

/// K_{1,n}: vertex 0 is the center.
pub fn make_star(n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(GraphError::TooSmall { what: "star", min: 1, n });
    }
    let mut g = Graph::empty(n + 1);
    for leaf in 1..=n {
        g.adj.set_sym(0, leaf);
    }
    g.edge_count = n;
    Ok(g)
}

pub fn make_cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::TooSmall { what: "cycle", min: 3, n });
    }
    let mut g = make_path(n)?;
    g.add_edge(n - 1, 0)?;
    Ok(g)
}

/// Path on `n` vertices (`n - 1` edges).
pub fn make_path(n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(GraphError::TooSmall { what: "path", min: 1, n });
    }
    let mut g = Graph::empty(n);
    for v in 1..n {
        g.adj.set_sym(v - 1, v);
    }
    g.edge_count = n - 1;
    Ok(g)
}

pub fn make_complete(n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(GraphError::TooSmall { what: "complete graph", min: 1, n });
    }
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.adj.set_sym(u, v);
        }
    }
    g.edge_count = n * (n - 1) / 2;
    Ok(g)
}

/// K_{a,b} with sides `0..a` and `a..a+b`.
pub fn make_complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::empty(a + b);
    for u in 0..a {
        for v in a..a + b {
            g.adj.set_sym(u, v);
        }
    }
    g.edge_count = a * b;
    g
}

pub fn make_petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, &edges).expect("petersen edges are simple")
}

/// `a ⊔ b`; vertices of `b` are shifted by `a.vertex_count()`.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let offset = a.vertex_count();
    let mut g = Graph::empty(offset + b.vertex_count());
    for (u, v) in a.edges() {
        g.adj.set_sym(u, v);
    }
    for (u, v) in b.edges() {
        g.adj.set_sym(u + offset, v + offset);
    }
    g.edge_count = a.edge_count + b.edge_count;
    g
}

/// Disjoint union of all `parts` in order.
pub fn disjoint_union_all<'a>(parts: impl IntoIterator<Item = &'a Graph>) -> Graph {
    parts
        .into_iter()
        .fold(Graph::empty(0), |acc, g| disjoint_union(&acc, g))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_shapes() {
        let k2 = make_star(1).unwrap();
        assert_eq!((k2.vertex_count(), k2.edge_count()), (2, 1));
        let s3 = make_star(3).unwrap();
        let mut degs = s3.degrees();
        degs.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(degs, vec![3, 1, 1, 1]);
        let s5 = make_star(5).unwrap();
        assert_eq!((s5.max_degree(), s5.edge_count()), (5, 5));
        assert!(make_star(0).is_err());
    }

    #[test]
    fn standard_constructions() {
        let k2 = make_complete(2).unwrap();
        let two_k2 = disjoint_union(&k2, &k2);
        assert_eq!((two_k2.vertex_count(), two_k2.edge_count()), (4, 2));

        let c4 = make_cycle(4).unwrap();
        assert!(c4.degrees().iter().all(|&d| d == 2));
        assert!(make_cycle(2).is_err());

        let g = disjoint_union(&make_star(3).unwrap(), &make_complete(3).unwrap());
        assert_eq!((g.vertex_count(), g.edge_count()), (7, 6));
        assert_eq!(make_path(1).unwrap().edge_count(), 0);
    }

    #[test]
    fn max_degree_examples() {
        assert_eq!(make_star(3).unwrap().max_degree(), 3);
        assert_eq!(make_cycle(5).unwrap().max_degree(), 2);
        assert_eq!(make_complete(5).unwrap().max_degree(), 4);
        assert_eq!(Graph::empty(4).max_degree(), 0);
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            Graph::from_edges(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, .. })
        ));
    }

    #[test]
    fn wide_rows() {
        let mut g = Graph::empty(130);
        g.add_edge(0, 129).unwrap();
        g.add_edge(64, 65).unwrap();
        assert!(g.has_edge(129, 0));
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 129), (64, 65)]);
        assert_eq!(g.degree(129), 1);
    }

    #[test]
    fn components_and_bipartition() {
        let g = disjoint_union(&make_cycle(4).unwrap(), &make_complete(3).unwrap());
        assert_eq!(g.components(), vec![vec![0, 1, 2, 3], vec![4, 5, 6]]);
        assert!(!g.is_bipartite());
        assert!(make_cycle(6).unwrap().is_bipartite());
        assert_eq!(make_petersen().degrees(), vec![3; 10]);
    }
}
