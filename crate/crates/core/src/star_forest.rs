//! Star-forest patterns and exact containment.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::free_coloring::EdgeColoring;
use crate::graph::{iter_bits, BitMatrix, Graph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ForestError {
    #[error("a star forest needs at least one star")]
    Empty,
    #[error("star sizes must be positive, found {0}")]
    NonPositive(i64),
    #[error("cannot parse star size {0:?}")]
    Parse(String),
    #[error("color {color} out of range for a {q}-coloring")]
    ColorOutOfRange { color: usize, q: usize },
    #[error("coloring does not cover exactly the edges of the graph")]
    NotTotal,
}

/// Disjoint union of stars `K_{1,n_1} ⊔ ... ⊔ K_{1,n_s}` with `n_1 >= ... >= n_s >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StarForest(Vec<usize>);

impl StarForest {
    pub fn sizes(&self) -> &[usize] {
        &self.0
    }

    /// Number of stars `s`.
    pub fn components(&self) -> usize {
        self.0.len()
    }

    pub fn total_edges(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn largest(&self) -> usize {
        self.0[0]
    }

    pub fn smallest(&self) -> usize {
        *self.0.last().unwrap()
    }

    /// `count` copies of `K_{1,n}`.
    pub fn uniform(n: usize, count: usize) -> Result<StarForest, ForestError> {
        normalize(&vec![n; count])
    }

    pub fn to_graph(&self) -> Graph {
        let stars: Vec<Graph> = self
            .0
            .iter()
            .map(|&n| crate::graph::make_star(n).expect("positive size"))
            .collect();
        crate::graph::disjoint_union_all(&stars)
    }
}

/// Sorts `sizes` into a non-increasing star forest.
pub fn normalize(sizes: &[usize]) -> Result<StarForest, ForestError> {
    if sizes.is_empty() {
        return Err(ForestError::Empty);
    }
    if sizes.contains(&0) {
        return Err(ForestError::NonPositive(0));
    }
    let mut v = sizes.to_vec();
    v.sort_unstable_by(|a, b| b.cmp(a));
    Ok(StarForest(v))
}

impl FromStr for StarForest {
    type Err = ForestError;

    /// Comma-separated sizes, e.g. `"3,2,2"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let sizes = s
            .split(',')
            .map(|part| {
                let part = part.trim();
                match part.parse::<i64>() {
                    Ok(v) if v >= 1 => Ok(v as usize),
                    Ok(v) => Err(ForestError::NonPositive(v)),
                    Err(_) => Err(ForestError::Parse(part.to_string())),
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        normalize(&sizes)
    }
}

impl fmt::Display for StarForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|n| n.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl Serialize for StarForest {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

pub fn contains_star_forest(g: &Graph, f: &StarForest) -> bool {
    StarPacker::new(f).contains(g.adjacency())
}

/// Containment of `f` in the spanning subgraph formed by the edges of `color`.
pub fn contains_in_color(
    g: &Graph,
    c: &EdgeColoring,
    color: usize,
    f: &StarForest,
) -> Result<bool, ForestError> {
    if color >= c.q() {
        return Err(ForestError::ColorOutOfRange { color, q: c.q() });
    }
    if !c.is_total_on(g) {
        return Err(ForestError::NotTotal);
    }
    let class = c.class_graph(g.vertex_count(), color);
    Ok(contains_star_forest(&class, f))
}

/// Reusable exact packing test for one star forest.
///
/// Stars with at least two leaves are placed largest first by backtracking
/// over centers. Once a center is fixed, leaves adjacent to nothing else are
/// used first, and the remaining leaves are chosen by count within classes of
/// twins, lowest labels first. Single edges are matched in a final phase.
#[derive(Clone, Debug)]
pub struct StarPacker {
    big: Vec<usize>,
    ones: usize,
    /// `need[i]`: vertices consumed by stars `i..` plus the matching edges.
    need: Vec<usize>,
    total_edges: usize,
    min_size: usize,
    scratch: Vec<u64>,
}

impl StarPacker {
    pub fn new(f: &StarForest) -> Self {
        let big: Vec<usize> = f.sizes().iter().copied().filter(|&n| n >= 2).collect();
        let ones = f.components() - big.len();
        let mut need = vec![2 * ones; big.len() + 1];
        for i in (0..big.len()).rev() {
            need[i] = need[i + 1] + big[i] + 1;
        }
        StarPacker {
            big,
            ones,
            need,
            total_edges: f.total_edges(),
            min_size: f.smallest(),
            scratch: Vec::new(),
        }
    }

    /// Smallest star size; a new copy must use an edge at a vertex of at least this degree.
    pub fn min_size(&self) -> usize {
        self.min_size
    }

    pub fn total_edges(&self) -> usize {
        self.total_edges
    }

    pub fn contains(&mut self, adj: &BitMatrix) -> bool {
        let n = adj.size();
        let words = adj.words();
        let depth = self.big.len() + n + 3;
        let mut buf = std::mem::take(&mut self.scratch);
        buf.clear();
        buf.resize(words * depth, 0);
        let mut edges2 = 0;
        for v in 0..n {
            let d = adj.row_count(v);
            if d > 0 {
                buf[v / 64] |= 1 << (v % 64);
                edges2 += d;
            }
        }
        let found = edges2 / 2 >= self.total_edges && self.place(0, usize::MAX, adj, &mut buf);
        self.scratch = buf;
        found
    }

    fn place(&self, i: usize, prev_center: usize, adj: &BitMatrix, buf: &mut [u64]) -> bool {
        let words = adj.words();
        let (cur, rest) = buf.split_at_mut(words);
        if i == self.big.len() {
            return matching(self.ones, adj, cur, rest);
        }
        if popcount(cur) < self.need[i] {
            return false;
        }
        let k = self.big[i];

        let mut degs: Vec<(usize, usize)> = iter_bits(cur)
            .map(|v| (residual(adj.row(v), cur), v))
            .filter(|&(d, _)| d >= self.big[self.big.len() - 1])
            .collect();
        // Stars i.. need, for each j, at least j - i + 1 vertices of residual degree >= big[j].
        for j in i..self.big.len() {
            if degs.iter().filter(|&&(d, _)| d >= self.big[j]).count() < j - i + 1 {
                return false;
            }
        }
        degs.retain(|&(d, v)| d >= k && (i == 0 || self.big[i - 1] != k || v > prev_center));
        degs.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));

        for &(_, c) in &degs {
            let row_c = adj.row(c);
            let mut base = cur.to_vec();
            base[c / 64] &= !(1 << (c % 64));
            let mut pendants = Vec::new();
            let mut others = Vec::new();
            for x in iter_bits(row_c).filter(|&x| test(cur, x)) {
                if residual(adj.row(x), &base) == 0 {
                    pendants.push(x);
                } else {
                    others.push(x);
                }
            }
            if pendants.len() >= k {
                rest[..words].copy_from_slice(&base);
                for &x in &pendants[..k] {
                    clear(&mut rest[..words], x);
                }
                if self.place(i + 1, c, adj, rest) {
                    return true;
                }
                continue;
            }
            for &x in &pendants {
                clear(&mut base, x);
            }
            let classes = twin_classes(adj, &base, &others);
            let wanted = k - pendants.len();
            let mut counts = vec![0usize; classes.len()];
            if self.try_counts(i, c, adj, rest, &base, &classes, &mut counts, 0, wanted) {
                return true;
            }
        }
        false
    }

    #[allow(clippy::too_many_arguments)]
    fn try_counts(
        &self,
        i: usize,
        c: usize,
        adj: &BitMatrix,
        rest: &mut [u64],
        base: &[u64],
        classes: &[Vec<usize>],
        counts: &mut Vec<usize>,
        at: usize,
        remaining: usize,
    ) -> bool {
        if at == classes.len() {
            if remaining != 0 {
                return false;
            }
            let words = adj.words();
            rest[..words].copy_from_slice(base);
            for (class, &take) in classes.iter().zip(counts.iter()) {
                for &x in &class[..take] {
                    clear(&mut rest[..words], x);
                }
            }
            return self.place(i + 1, c, adj, rest);
        }
        let capacity: usize = classes[at + 1..].iter().map(Vec::len).sum();
        let hi = remaining.min(classes[at].len());
        let lo = remaining.saturating_sub(capacity);
        for take in (lo..=hi).rev() {
            counts[at] = take;
            if self.try_counts(i, c, adj, rest, base, classes, counts, at + 1, remaining - take) {
                return true;
            }
        }
        counts[at] = 0;
        false
    }
}

/// Groups `candidates` into classes of mutual twins with respect to `avail`;
/// each class is sorted by label.
fn twin_classes(adj: &BitMatrix, avail: &[u64], candidates: &[usize]) -> Vec<Vec<usize>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &x in candidates {
        match classes
            .iter_mut()
            .find(|cls| cls.iter().all(|&y| twins(adj, avail, x, y)))
        {
            Some(cls) => cls.push(x),
            None => classes.push(vec![x]),
        }
    }
    classes
}

fn twins(adj: &BitMatrix, avail: &[u64], x: usize, y: usize) -> bool {
    let (rx, ry) = (adj.row(x), adj.row(y));
    (0..avail.len()).all(|w| {
        let mut mask = avail[w];
        if x / 64 == w {
            mask &= !(1 << (x % 64));
        }
        if y / 64 == w {
            mask &= !(1 << (y % 64));
        }
        rx[w] & mask == ry[w] & mask
    })
}

/// Whether the subgraph induced by `cur` has `k` disjoint edges.
fn matching(k: usize, adj: &BitMatrix, cur: &[u64], rest: &mut [u64]) -> bool {
    if k == 0 {
        return true;
    }
    if popcount(cur) < 2 * k {
        return false;
    }
    let words = adj.words();
    let (child, deeper) = rest.split_at_mut(words);

    // Greedy maximal matching answers most positive instances.
    child.copy_from_slice(cur);
    let mut greedy = 0;
    for u in iter_bits(cur) {
        if !test(child, u) {
            continue;
        }
        if let Some(w) = iter_bits(adj.row(u)).find(|&w| test(child, w)) {
            clear(child, u);
            clear(child, w);
            greedy += 1;
            if greedy >= k {
                return true;
            }
        }
    }

    let Some(u) = iter_bits(cur).find(|&u| residual(adj.row(u), cur) > 0) else {
        return false;
    };
    let partners: Vec<usize> = iter_bits(adj.row(u)).filter(|&w| test(cur, w)).collect();
    for w in partners {
        child.copy_from_slice(cur);
        clear(child, u);
        clear(child, w);
        if matching(k - 1, adj, child, deeper) {
            return true;
        }
    }
    child.copy_from_slice(cur);
    clear(child, u);
    matching(k, adj, child, deeper)
}

#[inline]
fn residual(row: &[u64], avail: &[u64]) -> usize {
    row.iter()
        .zip(avail)
        .map(|(a, b)| (a & b).count_ones() as usize)
        .sum()
}

#[inline]
fn popcount(set: &[u64]) -> usize {
    set.iter().map(|w| w.count_ones() as usize).sum()
}

#[inline]
fn test(set: &[u64], v: usize) -> bool {
    set[v / 64] >> (v % 64) & 1 == 1
}

#[inline]
fn clear(set: &mut [u64], v: usize) {
    set[v / 64] &= !(1 << (v % 64));
}
