//! Edge colorings, constructive free 2-colorings for pairs of stars, and freeness checks.
//!
//! Color 0 is red and color 1 is blue.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::edge_coloring::{embed_regular, proper_edge_coloring, two_factorize, DecompositionError};
use crate::graph::Graph;
use crate::star_forest::{StarForest, StarPacker};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("a coloring needs at least one color")]
    NoColors,
    #[error("color {color} is out of range for {q} colors")]
    ColorOutOfRange { color: usize, q: usize },
    #[error("edge ({0}, {1}) is colored twice")]
    DuplicateEdge(usize, usize),
    #[error("coloring is not total on the graph's edge set")]
    NotTotal,
    #[error("{forests} forests given for a {q}-coloring")]
    ArityMismatch { forests: usize, q: usize },
    #[error("max degree {delta} exceeds n + m - 3 with n = {n}, m = {m} (n + m - 2 is allowed only when both are odd)")]
    LemmaHypotheses { delta: usize, n: usize, m: usize },
    #[error(transparent)]
    Decomposition(#[from] DecompositionError),
}

/// Color per edge, stored with `u < v` and sorted by edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoring {
    q: usize,
    entries: Vec<((usize, usize), usize)>,
}

#[derive(Serialize, Deserialize)]
struct Entry {
    edge: [usize; 2],
    color: usize,
}

impl EdgeColoring {
    pub fn new(
        q: usize,
        entries: impl IntoIterator<Item = ((usize, usize), usize)>,
    ) -> Result<Self, ColoringError> {
        if q == 0 {
            return Err(ColoringError::NoColors);
        }
        let mut entries: Vec<((usize, usize), usize)> = entries
            .into_iter()
            .map(|((u, v), c)| ((u.min(v), u.max(v)), c))
            .collect();
        if let Some(&(_, color)) = entries.iter().find(|(_, c)| *c >= q) {
            return Err(ColoringError::ColorOutOfRange { color, q });
        }
        entries.sort_unstable();
        if let Some(w) = entries.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(ColoringError::DuplicateEdge(w[0].0 .0, w[0].0 .1));
        }
        Ok(EdgeColoring { q, entries })
    }

    /// Colors every edge `(u, v)` of `g` (with `u < v`) by `f(u, v)`.
    pub fn from_fn(
        g: &Graph,
        q: usize,
        mut f: impl FnMut(usize, usize) -> usize,
    ) -> Result<Self, ColoringError> {
        Self::new(q, g.edges().map(|(u, v)| ((u, v), f(u, v))))
    }

    pub fn uniform(g: &Graph, q: usize, color: usize) -> Result<Self, ColoringError> {
        Self::from_fn(g, q, |_, _| color)
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn color_of(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.entries
            .binary_search_by(|(e, _)| e.cmp(&key))
            .ok()
            .map(|i| self.entries[i].1)
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.entries.iter().copied()
    }

    /// Edges of one color, sorted.
    pub fn class(&self, color: usize) -> Vec<(usize, usize)> {
        self.iter().filter(|&(_, c)| c == color).map(|(e, _)| e).collect()
    }

    /// The spanning subgraph on `n` vertices formed by one color class.
    pub fn class_graph(&self, n: usize, color: usize) -> Graph {
        let mut h = Graph::empty(n);
        for (u, v) in self.class(color) {
            h.add_edge(u, v).expect("class edge within range");
        }
        h
    }

    /// Maximum degree inside one color class.
    pub fn class_max_degree(&self, n: usize, color: usize) -> usize {
        let mut deg = vec![0; n];
        for (u, v) in self.class(color) {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg.into_iter().max().unwrap_or(0)
    }

    /// Whether the colored edges are exactly `E(g)`.
    pub fn is_total_on(&self, g: &Graph) -> bool {
        self.entries.len() == g.edge_count() && self.entries.iter().all(|&((u, v), _)| g.has_edge(u, v))
    }

    /// Parses the `[{"edge":[u,v],"color":k}, ...]` form.
    pub fn from_json(text: &str, q: usize) -> Result<Self, String> {
        let raw: Vec<Entry> = serde_json::from_str(text).map_err(|e| e.to_string())?;
        Self::new(q, raw.into_iter().map(|e| ((e.edge[0], e.edge[1]), e.color)))
            .map_err(|e| e.to_string())
    }
}

impl Serialize for EdgeColoring {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.entries.iter().map(|&((u, v), color)| Entry {
            edge: [u, v],
            color,
        }))
    }
}

/// Which construction of a free coloring applies to `(g, n, m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LemmaBranch {
    /// Δ ≤ n+m−3: split a proper (Δ+1)-edge-coloring.
    VizingPartition,
    /// Δ = n+m−2 with n, m odd: 2-factorize a regular supergraph.
    RegularEmbedding,
}

pub fn lemma_branch(g: &Graph, n: usize, m: usize) -> Option<LemmaBranch> {
    let delta = g.max_degree();
    if n == 0 || m == 0 {
        None
    } else if delta + 3 <= n + m {
        Some(LemmaBranch::VizingPartition)
    } else if delta + 2 <= n + m && n % 2 == 1 && m % 2 == 1 {
        Some(LemmaBranch::RegularEmbedding)
    } else {
        None
    }
}

/// A red/blue coloring with red max degree ≤ n−1 and blue max degree ≤ m−1.
pub fn lemma_free_coloring(g: &Graph, n: usize, m: usize) -> Result<EdgeColoring, ColoringError> {
    match lemma_branch(g, n, m) {
        Some(LemmaBranch::VizingPartition) => {
            let proper = proper_edge_coloring(g);
            let red = (n - 1).min(proper.color_count());
            EdgeColoring::new(2, proper.iter().map(|(e, c)| (e, usize::from(c >= red))))
        }
        Some(LemmaBranch::RegularEmbedding) => {
            if g.edge_count() == 0 {
                return EdgeColoring::new(2, []);
            }
            let (core, kept) = g.without_isolated();
            let (h, map) = embed_regular(&core)?;
            let factors = two_factorize(&h)?.factors;
            let red_factors = (n - 1) / 2;
            let mut entries = Vec::with_capacity(g.edge_count());
            for (u, v) in core.edges() {
                let (a, b) = (map[u], map[v]);
                let key = (a.min(b), a.max(b));
                let idx = factors
                    .iter()
                    .position(|f| f.binary_search(&key).is_ok())
                    .expect("every edge lies in one factor");
                entries.push(((kept[u], kept[v]), usize::from(idx >= red_factors)));
            }
            EdgeColoring::new(2, entries)
        }
        None => Err(ColoringError::LemmaHypotheses {
            delta: g.max_degree(),
            n,
            m,
        }),
    }
}

/// True iff no color class `i` contains `forests[i]`.
pub fn verify_free(
    g: &Graph,
    c: &EdgeColoring,
    forests: &[StarForest],
) -> Result<bool, ColoringError> {
    if forests.len() != c.q() {
        return Err(ColoringError::ArityMismatch {
            forests: forests.len(),
            q: c.q(),
        });
    }
    if !c.is_total_on(g) {
        return Err(ColoringError::NotTotal);
    }
    for (i, f) in forests.iter().enumerate() {
        let class = c.class_graph(g.vertex_count(), i);
        if StarPacker::new(f).contains(class.adjacency()) {
            return Ok(false);
        }
    }
    Ok(true)
}
