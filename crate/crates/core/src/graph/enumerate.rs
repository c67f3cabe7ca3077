//! Exhaustive generation of small graphs, one representative per isomorphism class.

use std::collections::BTreeMap;

use super::{canonical_labeling, CanonicalCode, Graph, GraphError};

pub const DEFAULT_ENUMERATION_BUDGET: usize = 8;

/// All graphs with exactly `edge_count` edges and no isolated vertices, using
/// the default budget.
pub fn enumerate_graphs(edge_count: usize) -> Result<Vec<Graph>, GraphError> {
    enumerate_graphs_with_budget(edge_count, DEFAULT_ENUMERATION_BUDGET)
}

/// Grows the classes one edge at a time: every graph with `e` edges and no
/// isolated vertices arises from one with `e - 1` edges by adding an edge
/// between two existing vertices, an existing vertex and a new vertex, or two
/// new vertices. Representatives are canonically labeled and returned sorted by
/// vertex count, then canonical code.
pub fn enumerate_graphs_with_budget(
    edge_count: usize,
    budget: usize,
) -> Result<Vec<Graph>, GraphError> {
    if edge_count > budget {
        return Err(GraphError::EnumerationBudgetExceeded {
            requested: edge_count,
            budget,
        });
    }
    if edge_count == 0 {
        return Ok(vec![Graph::empty(0)]);
    }
    let mut level = vec![Graph::empty(0)];
    for _ in 0..edge_count {
        let mut next: BTreeMap<(usize, CanonicalCode), Graph> = BTreeMap::new();
        for g in &level {
            let n = g.vertex_count();
            for u in 0..n + 1 {
                for v in u + 1..n + 2 {
                    // Vertex n + 1 is only meaningful when vertex n is also new.
                    if (v == n + 1 && u != n) || (u < n && v < n && g.has_edge(u, v)) {
                        continue;
                    }
                    let size = n + (u >= n) as usize + (v >= n) as usize;
                    let mut h = Graph::empty(size);
                    for (a, b) in g.edges() {
                        h.add_edge(a, b).expect("copied edge");
                    }
                    h.add_edge(u, v).expect("new edge");
                    insert(&mut next, h)?;
                }
            }
        }
        level = next.into_values().collect();
    }
    Ok(level)
}

/// All graphs on exactly `n` vertices (isolated vertices allowed), by vertex extension.
pub fn enumerate_graphs_on_vertices(n: usize) -> Result<Vec<Graph>, GraphError> {
    let mut level = vec![Graph::empty(0)];
    for k in 0..n {
        let mut next = BTreeMap::new();
        for g in &level {
            for mask in 0u64..1 << k {
                let mut h = Graph::empty(k + 1);
                for (a, b) in g.edges() {
                    h.add_edge(a, b).expect("copied edge");
                }
                for w in 0..k {
                    if mask >> w & 1 == 1 {
                        h.add_edge(w, k).expect("new edge");
                    }
                }
                insert(&mut next, h)?;
            }
        }
        level = next.into_values().collect();
    }
    Ok(level)
}

fn insert(map: &mut BTreeMap<(usize, CanonicalCode), Graph>, h: Graph) -> Result<(), GraphError> {
    let perm = canonical_labeling(&h)?;
    let canon = h.relabel(&perm);
    let code = CanonicalCode::from_canonical(&canon);
    map.entry((canon.vertex_count(), code)).or_insert(canon);
    Ok(())
}
