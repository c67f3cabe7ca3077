//! Proper edge colorings, Euler circuits, regular embeddings and 2-factorizations.

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

/// Largest graph [`embed_regular`] will build.
pub const MAX_EMBED_VERTICES: usize = 1 << 14;

const NONE: usize = usize::MAX;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecompositionError {
    #[error("vertex {vertex} has odd degree {degree}")]
    OddDegree { vertex: usize, degree: usize },
    #[error("graph is not regular (degrees {min}..={max})")]
    NotRegular { min: usize, max: usize },
    #[error("graph is {0}-regular; a 2-factorization needs even positive degree")]
    OddRegular(usize),
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("vertex {vertex} has degree {degree}, expected {k}")]
    NotKRegular { k: usize, vertex: usize, degree: usize },
    #[error("graph has no edges")]
    Edgeless,
    #[error("regular embedding would need {vertices} vertices (cap {cap})")]
    TooLarge { vertices: usize, cap: usize },
}

/// Colors `0..color_count`, one per edge; edges listed with `u < v` in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProperEdgeColoring {
    edges: Vec<(usize, usize)>,
    colors: Vec<usize>,
    color_count: usize,
}

impl ProperEdgeColoring {
    pub fn color_count(&self) -> usize {
        self.color_count
    }

    pub fn color_of(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges
            .binary_search(&key)
            .ok()
            .map(|i| self.colors[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.edges.iter().copied().zip(self.colors.iter().copied())
    }

    /// Edge lists per color.
    pub fn classes(&self) -> Vec<Vec<(usize, usize)>> {
        let mut out = vec![Vec::new(); self.color_count];
        for (e, c) in self.iter() {
            out[c].push(e);
        }
        out
    }

    /// Covers exactly `E(g)` and no two edges at a vertex share a color.
    pub fn is_proper_on(&self, g: &Graph) -> bool {
        if self.edges.len() != g.edge_count() || !self.edges.iter().all(|&(u, v)| g.has_edge(u, v)) {
            return false;
        }
        let mut seen = vec![Vec::new(); g.vertex_count()];
        for ((u, v), c) in self.iter() {
            for w in [u, v] {
                if seen[w].contains(&c) {
                    return false;
                }
                seen[w].push(c);
            }
        }
        self.colors.iter().all(|&c| c < self.color_count)
    }
}

/// Each factor is an edge list, `u < v`, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoFactorization {
    pub factors: Vec<Vec<(usize, usize)>>,
}

impl TwoFactorization {
    /// Factors partition `E(h)` and each is spanning and 2-regular.
    pub fn is_valid_for(&self, h: &Graph) -> bool {
        let mut all: Vec<(usize, usize)> = self.factors.iter().flatten().copied().collect();
        all.sort_unstable();
        let mut edges: Vec<(usize, usize)> = h.edges().collect();
        edges.sort_unstable();
        all == edges
            && self.factors.iter().all(|f| {
                let mut deg = vec![0; h.vertex_count()];
                for &(u, v) in f {
                    deg[u] += 1;
                    deg[v] += 1;
                }
                deg.iter().all(|&d| d == 2)
            })
    }
}

/// Incident colors per vertex: `at[v][c]` is the neighbor joined to `v` by color `c`.
struct Palette {
    at: Vec<Vec<usize>>,
}

impl Palette {
    fn new(n: usize, colors: usize) -> Self {
        Palette {
            at: vec![vec![NONE; colors]; n],
        }
    }

    fn free(&self, v: usize) -> usize {
        self.at[v]
            .iter()
            .position(|&w| w == NONE)
            .expect("palette has a free color")
    }

    fn is_free(&self, v: usize, c: usize) -> bool {
        self.at[v][c] == NONE
    }

    fn color_of(&self, u: usize, v: usize) -> Option<usize> {
        self.at[u].iter().position(|&w| w == v)
    }

    fn set(&mut self, u: usize, v: usize, c: usize) {
        debug_assert!(self.is_free(u, c) && self.is_free(v, c));
        self.at[u][c] = v;
        self.at[v][c] = u;
    }

    fn unset(&mut self, u: usize, v: usize, c: usize) {
        self.at[u][c] = NONE;
        self.at[v][c] = NONE;
    }

    /// Swaps colors `a` and `b` along the maximal path leaving `start` by an `a` edge.
    fn flip_path(&mut self, start: usize, a: usize, b: usize) {
        let mut path = Vec::new();
        let (mut cur, mut col) = (start, a);
        loop {
            let next = self.at[cur][col];
            if next == NONE {
                break;
            }
            path.push((cur, next, col));
            cur = next;
            col = if col == a { b } else { a };
            if path.len() > self.at.len() {
                unreachable!("alternating path revisits an edge");
            }
        }
        for &(u, v, c) in &path {
            self.unset(u, v, c);
        }
        for &(u, v, c) in &path {
            self.set(u, v, if c == a { b } else { a });
        }
    }

    fn finish(self, g: &Graph) -> ProperEdgeColoring {
        let edges: Vec<(usize, usize)> = g.edges().collect();
        let raw: Vec<usize> = edges
            .iter()
            .map(|&(u, v)| self.color_of(u, v).expect("every edge colored"))
            .collect();
        let mut used: Vec<usize> = raw.clone();
        used.sort_unstable();
        used.dedup();
        let colors = raw
            .iter()
            .map(|c| used.binary_search(c).unwrap())
            .collect();
        ProperEdgeColoring {
            edges,
            colors,
            color_count: used.len(),
        }
    }
}

/// At most Δ+1 colors in general (Misra–Gries fan recoloring) and at most Δ
/// colors for bipartite graphs (alternating-path recoloring).
pub fn proper_edge_coloring(g: &Graph) -> ProperEdgeColoring {
    if g.is_bipartite() {
        bipartite_coloring(g)
    } else {
        vizing_coloring(g)
    }
}

fn bipartite_coloring(g: &Graph) -> ProperEdgeColoring {
    let delta = g.max_degree();
    let mut pal = Palette::new(g.vertex_count(), delta.max(1));
    for (u, v) in g.edges() {
        let a = pal.free(u);
        let b = pal.free(v);
        if !pal.is_free(v, a) {
            // The a/b path from v cannot reach u in a bipartite graph.
            pal.flip_path(v, a, b);
        }
        pal.set(u, v, a);
    }
    pal.finish(g)
}

fn vizing_coloring(g: &Graph) -> ProperEdgeColoring {
    let mut pal = Palette::new(g.vertex_count(), g.max_degree() + 1);
    for (x, y) in g.edges() {
        let u = x;
        let mut fan = vec![y];
        loop {
            let last = *fan.last().unwrap();
            let next = g.neighbors(u).find(|&w| {
                !fan.contains(&w)
                    && pal
                        .color_of(u, w)
                        .is_some_and(|c| pal.is_free(last, c))
            });
            match next {
                Some(w) => fan.push(w),
                None => break,
            }
        }
        let c = pal.free(u);
        let d = pal.free(*fan.last().unwrap());
        if c != d {
            pal.flip_path(u, d, c);
        }
        let mut w_idx = None;
        for i in 0..fan.len() {
            if i > 0 {
                let still_fan = pal
                    .color_of(u, fan[i])
                    .is_some_and(|col| pal.is_free(fan[i - 1], col));
                if !still_fan {
                    break;
                }
            }
            if pal.is_free(fan[i], d) {
                w_idx = Some(i);
                break;
            }
        }
        let w_idx = w_idx.expect("fan prefix ending at a vertex missing d");
        for i in 0..w_idx {
            let col = pal.color_of(u, fan[i + 1]).expect("fan edges are colored");
            pal.unset(u, fan[i + 1], col);
            pal.set(u, fan[i], col);
        }
        pal.set(u, fan[w_idx], d);
    }
    pal.finish(g)
}

/// One closed walk `v_0, v_1, ..., v_0` per component with at least one edge;
/// consecutive vertices are the traversed edges.
pub fn euler_circuit(g: &Graph) -> Result<Vec<Vec<usize>>, DecompositionError> {
    if let Some(v) = (0..g.vertex_count()).find(|&v| g.degree(v) % 2 == 1) {
        return Err(DecompositionError::OddDegree {
            vertex: v,
            degree: g.degree(v),
        });
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut inc: Vec<Vec<(usize, usize)>> = vec![Vec::new(); g.vertex_count()];
    for (id, &(u, v)) in edges.iter().enumerate() {
        inc[u].push((v, id));
        inc[v].push((u, id));
    }
    let mut used = vec![false; edges.len()];
    let mut ptr = vec![0; g.vertex_count()];
    let mut circuits = Vec::new();
    for comp in g.components() {
        let start = comp[0];
        if inc[start].is_empty() {
            continue;
        }
        // Hierholzer.
        let mut stack = vec![start];
        let mut walk = Vec::new();
        while let Some(&v) = stack.last() {
            let mut advanced = false;
            while ptr[v] < inc[v].len() {
                let (w, id) = inc[v][ptr[v]];
                ptr[v] += 1;
                if !used[id] {
                    used[id] = true;
                    stack.push(w);
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                walk.push(stack.pop().unwrap());
            }
        }
        walk.reverse();
        circuits.push(walk);
    }
    Ok(circuits)
}

/// Embeds `g` into a Δ(g)-regular simple graph by repeated doubling: two
/// copies, each deficient vertex joined to its twin. Vertex `v` of `g` maps to
/// vertex `v` of the result.
pub fn embed_regular(g: &Graph) -> Result<(Graph, Vec<usize>), DecompositionError> {
    let delta = g.max_degree();
    if delta == 0 {
        return Err(DecompositionError::Edgeless);
    }
    let rounds = delta - g.min_degree();
    let vertices = g.vertex_count().checked_shl(rounds as u32).unwrap_or(usize::MAX);
    if vertices > MAX_EMBED_VERTICES || rounds >= usize::BITS as usize {
        return Err(DecompositionError::TooLarge {
            vertices,
            cap: MAX_EMBED_VERTICES,
        });
    }
    let mut cur = g.clone();
    while cur.min_degree() < delta {
        let n = cur.vertex_count();
        let mut next = Graph::empty(2 * n);
        for (u, v) in cur.edges() {
            next.add_edge(u, v).expect("copy");
            next.add_edge(u + n, v + n).expect("copy");
        }
        for v in 0..n {
            if cur.degree(v) < delta {
                next.add_edge(v, v + n).expect("twin edge");
            }
        }
        cur = next;
    }
    Ok((cur, (0..g.vertex_count()).collect()))
}

/// Petersen: orient each component along an Euler circuit, split every vertex
/// into an out-copy and an in-copy, and read each perfect matching of the
/// resulting k-regular bipartite graph back as one 2-factor.
pub fn two_factorize(h: &Graph) -> Result<TwoFactorization, DecompositionError> {
    let (min, max) = (h.min_degree(), h.max_degree());
    if min != max {
        return Err(DecompositionError::NotRegular { min, max });
    }
    if max == 0 || max % 2 == 1 {
        return Err(DecompositionError::OddRegular(max));
    }
    let k = max / 2;
    let n = h.vertex_count();
    let mut factors = vec![Vec::new(); k];
    for circuit in euler_circuit(h)? {
        let arcs: Vec<(usize, usize)> = circuit.windows(2).map(|w| (w[0], w[1])).collect();
        let mut out_adj = vec![Vec::new(); n];
        for &(a, b) in &arcs {
            out_adj[a].push(b);
        }
        for (i, matching) in regular_bipartite_matchings(n, out_adj, k)
            .into_iter()
            .enumerate()
        {
            factors[i].extend(matching.into_iter().map(|(a, b)| (a.min(b), a.max(b))));
        }
    }
    for f in &mut factors {
        f.sort_unstable();
    }
    Ok(TwoFactorization { factors })
}

/// Splits a k-regular bipartite graph into k perfect matchings, each listed as
/// edges `(u, v)` with `u < v`.
pub fn decompose_regular_bipartite(
    b: &Graph,
    k: usize,
) -> Result<Vec<Vec<(usize, usize)>>, DecompositionError> {
    let side = b.bipartition().ok_or(DecompositionError::NotBipartite)?;
    if let Some(v) = (0..b.vertex_count()).find(|&v| b.degree(v) != k) {
        return Err(DecompositionError::NotKRegular {
            k,
            vertex: v,
            degree: b.degree(v),
        });
    }
    let mut adj = vec![Vec::new(); b.vertex_count()];
    for v in 0..b.vertex_count() {
        if !side[v] {
            adj[v] = b.neighbors(v).collect();
        }
    }
    Ok(regular_bipartite_matchings(b.vertex_count(), adj, k)
        .into_iter()
        .map(|m| {
            let mut m: Vec<(usize, usize)> = m.into_iter().map(|(a, c)| (a.min(c), a.max(c))).collect();
            m.sort_unstable();
            m
        })
        .collect())
}

/// `adj[l]` lists the right neighbors of left vertex `l`; both sides are
/// indexed `0..n`. Every vertex with edges must have degree `k` on its side.
fn regular_bipartite_matchings(
    n: usize,
    mut adj: Vec<Vec<usize>>,
    k: usize,
) -> Vec<Vec<(usize, usize)>> {
    let mut out = Vec::with_capacity(k);
    for _ in 0..k {
        let mate = hopcroft_karp(n, &adj);
        let mut matching = Vec::new();
        for (l, m) in mate.iter().enumerate() {
            if let Some(r) = *m {
                matching.push((l, r));
                let pos = adj[l].iter().position(|&x| x == r).unwrap();
                adj[l].swap_remove(pos);
            } else {
                assert!(adj[l].is_empty(), "regular bipartite graph has a perfect matching");
            }
        }
        out.push(matching);
    }
    out
}

fn hopcroft_karp(n: usize, adj: &[Vec<usize>]) -> Vec<Option<usize>> {
    const INF: u32 = u32::MAX;
    let mut match_l: Vec<usize> = vec![NONE; n];
    let mut match_r: Vec<usize> = vec![NONE; n];
    let mut dist = vec![INF; n];
    let mut it = vec![0usize; n];
    let mut queue = Vec::with_capacity(n);
    loop {
        queue.clear();
        for l in 0..n {
            if match_l[l] == NONE && !adj[l].is_empty() {
                dist[l] = 0;
                queue.push(l);
            } else {
                dist[l] = INF;
            }
        }
        let mut found = false;
        let mut head = 0;
        while head < queue.len() {
            let l = queue[head];
            head += 1;
            for &r in &adj[l] {
                let w = match_r[r];
                if w == NONE {
                    found = true;
                } else if dist[w] == INF {
                    dist[w] = dist[l] + 1;
                    queue.push(w);
                }
            }
        }
        if !found {
            break;
        }
        it.iter_mut().for_each(|p| *p = 0);
        let mut stack: Vec<usize> = Vec::new();
        for root in 0..n {
            if match_l[root] != NONE || adj[root].is_empty() {
                continue;
            }
            stack.clear();
            stack.push(root);
            while let Some(&l) = stack.last() {
                if it[l] == adj[l].len() {
                    dist[l] = INF;
                    stack.pop();
                    continue;
                }
                let r = adj[l][it[l]];
                let w = match_r[r];
                if w == NONE {
                    for &x in &stack {
                        let rx = adj[x][it[x]];
                        match_l[x] = rx;
                        match_r[rx] = x;
                    }
                    stack.clear();
                } else if dist[w] != INF && dist[w] == dist[l] + 1 {
                    stack.push(w);
                } else {
                    it[l] += 1;
                }
            }
        }
    }
    match_l
        .into_iter()
        .map(|r| if r == NONE { None } else { Some(r) })
        .collect()
}
