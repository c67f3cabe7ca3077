//! Canonical labeling by individualization-refinement.
//!
//! Each connected component is searched separately. Inside a component, the
//! ordered partition is refined to an equitable one using neighbor counts per
//! cell, a vertex of the first non-singleton cell is individualized, and the
//! search recurses. Every leaf gives an ordering of the vertices; the
//! canonical ordering is the one with the lexicographically smallest permuted
//! adjacency rows. Leaves with equal rows yield automorphisms, which prune
//! both by skipping redundant subtrees and by orbits at later nodes.

use std::cmp::Ordering;
use std::fmt;

use super::{formats::graph6_encode, Graph, GraphError};

/// Largest vertex count accepted by [`canonical_form`].
pub const MAX_CANONICAL_VERTICES: usize = 64;

/// Isomorphism-class identifier: the graph6 string of the canonically relabeled graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(String);

impl CanonicalCode {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }

    /// Code of a graph that is already canonically labeled.
    pub(crate) fn from_canonical(g: &Graph) -> CanonicalCode {
        CanonicalCode(graph6_encode(g))
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl serde::Serialize for CanonicalCode {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0)
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", self.0)
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalCode, GraphError> {
    let perm = canonical_labeling(g)?;
    Ok(CanonicalCode(graph6_encode(&g.relabel(&perm))))
}

/// Permutation `perm` such that `g.relabel(&perm)` is the canonical representative.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<usize>, GraphError> {
    let n = g.vertex_count();
    if n > MAX_CANONICAL_VERTICES {
        return Err(GraphError::CanonicalCapExceeded {
            vertex_count: n,
            cap: MAX_CANONICAL_VERTICES,
        });
    }

    let mut parts: Vec<(Vec<u64>, Vec<usize>)> = g
        .components()
        .into_iter()
        .map(|comp| {
            let local = local_rows(g, &comp);
            let mut search = Search::new(&local);
            search.run();
            let (rows, order) = search.best.expect("non-empty component has a leaf");
            (rows, order.into_iter().map(|i| comp[i]).collect())
        })
        .collect();
    // Component order: by size, then by canonical rows.
    parts.sort_by(|a, b| a.1.len().cmp(&b.1.len()).then_with(|| a.0.cmp(&b.0)));

    let mut perm = vec![0; n];
    let mut next = 0;
    for (_, order) in &parts {
        for &v in order {
            perm[v] = next;
            next += 1;
        }
    }
    Ok(perm)
}

fn local_rows(g: &Graph, comp: &[usize]) -> Vec<u64> {
    let mut index = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in comp.iter().enumerate() {
        index[v] = i;
    }
    comp.iter()
        .map(|&v| {
            g.neighbors(v)
                .filter(|&w| index[w] != usize::MAX)
                .fold(0u64, |acc, w| acc | 1 << index[w])
        })
        .collect()
}

type Cells = Vec<Vec<usize>>;

struct Search<'a> {
    rows: &'a [u64],
    best: Option<(Vec<u64>, Vec<usize>)>,
    best_path: Vec<usize>,
    autos: Vec<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn new(rows: &'a [u64]) -> Self {
        Search {
            rows,
            best: None,
            best_path: Vec::new(),
            autos: Vec::new(),
        }
    }

    fn run(&mut self) {
        let all: Vec<usize> = (0..self.rows.len()).collect();
        let mut path = Vec::new();
        self.visit(vec![all], &mut path);
    }

    /// Returns `Some(d)` when the subtree rooted at depth `d + 1` on the current
    /// path is known to be the image of an explored one.
    fn visit(&mut self, cells: Cells, path: &mut Vec<usize>) -> Option<usize> {
        let cells = refine(self.rows, cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            return self.leaf(&cells, path);
        };
        let depth = path.len();
        let candidates = cells[target].clone();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &candidates {
            if !tried.is_empty() && self.same_orbit(v, &tried, path) {
                continue;
            }
            tried.push(v);
            let next = individualize(&cells, target, v);
            path.push(v);
            let abort = self.visit(next, path);
            path.pop();
            if let Some(d) = abort {
                if d < depth {
                    return Some(d);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &Cells, path: &[usize]) -> Option<usize> {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let rows = permuted_rows(self.rows, &order);
        let cmp = match &self.best {
            None => Ordering::Less,
            Some((best_rows, _)) => rows.cmp(best_rows),
        };
        match cmp {
            Ordering::Less => {
                self.best = Some((rows, order));
                self.best_path = path.to_vec();
                None
            }
            Ordering::Equal => {
                let best_order = &self.best.as_ref().unwrap().1;
                let mut auto = vec![0; order.len()];
                for (&from, &to) in best_order.iter().zip(&order) {
                    auto[from] = to;
                }
                self.autos.push(auto);
                let common = path
                    .iter()
                    .zip(&self.best_path)
                    .take_while(|(a, b)| a == b)
                    .count();
                Some(common)
            }
            Ordering::Greater => None,
        }
    }

    /// Whether `v` shares an orbit with a vertex in `tried` under the known
    /// automorphisms that fix `path` pointwise.
    fn same_orbit(&self, v: usize, tried: &[usize], path: &[usize]) -> bool {
        let n = self.rows.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut any = false;
        for auto in &self.autos {
            if path.iter().all(|&p| auto[p] == p) {
                any = true;
                for (x, &y) in auto.iter().enumerate() {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, v);
        tried.iter().any(|&t| find(&mut parent, t) == root)
    }
}

fn permuted_rows(rows: &[u64], order: &[usize]) -> Vec<u64> {
    let mut pos = vec![0; order.len()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    order
        .iter()
        .map(|&v| {
            let mut r = rows[v];
            let mut out = 0u64;
            while r != 0 {
                let w = r.trailing_zeros() as usize;
                r &= r - 1;
                out |= 1 << pos[w];
            }
            out
        })
        .collect()
}

fn individualize(cells: &Cells, target: usize, v: usize) -> Cells {
    let mut out = Vec::with_capacity(cells.len() + 1);
    for (i, cell) in cells.iter().enumerate() {
        if i == target {
            out.push(vec![v]);
            out.push(cell.iter().copied().filter(|&w| w != v).collect());
        } else {
            out.push(cell.clone());
        }
    }
    out
}

/// Splits cells by neighbor counts into every cell until the partition is equitable.
fn refine(rows: &[u64], mut cells: Cells) -> Cells {
    loop {
        let masks: Vec<u64> = cells
            .iter()
            .map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect();
        let mut next: Cells = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    let sig = masks.iter().map(|&m| (rows[v] & m).count_ones()).collect();
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{disjoint_union, make_complete, make_cycle, make_path, make_petersen, make_star};

    fn all_perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in all_perms(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn path_reversal() {
        let p4 = make_path(4).unwrap();
        let rev = p4.relabel(&[3, 2, 1, 0]);
        assert_eq!(canonical_form(&p4).unwrap(), canonical_form(&rev).unwrap());
    }

    #[test]
    fn star_vs_triangle() {
        assert_ne!(
            canonical_form(&make_star(3).unwrap()).unwrap(),
            canonical_form(&make_complete(3).unwrap()).unwrap()
        );
    }

    #[test]
    fn c4_single_code_over_all_relabelings() {
        let c4 = make_cycle(4).unwrap();
        let mut codes: Vec<_> = all_perms(4)
            .iter()
            .map(|p| canonical_form(&c4.relabel(p)).unwrap())
            .collect();
        codes.sort();
        codes.dedup();
        assert_eq!(codes.len(), 1);
    }

    #[test]
    fn symmetric_graphs_terminate() {
        let pet = make_petersen();
        let code = canonical_form(&pet).unwrap();
        let perm: Vec<usize> = (0..10).map(|i| (i * 3 + 7) % 10).collect();
        assert_eq!(code, canonical_form(&pet.relabel(&perm)).unwrap());
        let big_star = make_star(20).unwrap();
        assert!(canonical_form(&big_star).is_ok());
        let k10 = make_complete(10).unwrap();
        assert!(canonical_form(&k10).is_ok());
    }

    #[test]
    fn distinguishes_components() {
        let a = disjoint_union(&make_cycle(6).unwrap(), &Graph::empty(0));
        let b = disjoint_union(&make_complete(3).unwrap(), &make_complete(3).unwrap());
        assert_ne!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
    }

    #[test]
    fn cap() {
        assert!(matches!(
            canonical_form(&Graph::empty(65)),
            Err(GraphError::CanonicalCapExceeded { .. })
        ));
    }
}
