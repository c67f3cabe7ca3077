//! Independent brute-force oracles and random generators shared by the integration tests.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use srn_core::graph::Graph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

/// Adjacency as plain vectors, independent of the library's bit matrices.
pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let mut a = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

/// Whether the graph given by `adj` contains vertex-disjoint stars of the
/// given sizes. Tries every center and every leaf subset for each star in turn.
pub fn brute_contains(adj: &[Vec<bool>], sizes: &[usize]) -> bool {
    let n = adj.len();
    let need: usize = sizes.iter().map(|s| s + 1).sum();
    if need > n {
        return false;
    }
    let mut used = vec![false; n];
    place(adj, sizes, &mut used)
}

fn place(adj: &[Vec<bool>], sizes: &[usize], used: &mut [bool]) -> bool {
    let Some((&k, rest)) = sizes.split_first() else {
        return true;
    };
    let n = adj.len();
    for c in 0..n {
        if used[c] {
            continue;
        }
        let free: Vec<usize> = (0..n).filter(|&x| !used[x] && x != c && adj[c][x]).collect();
        if free.len() < k {
            continue;
        }
        used[c] = true;
        let mut pick = Vec::new();
        if subsets(adj, rest, used, &free, 0, k, &mut pick) {
            used[c] = false;
            return true;
        }
        used[c] = false;
    }
    false
}

fn subsets(
    adj: &[Vec<bool>],
    rest: &[usize],
    used: &mut [bool],
    free: &[usize],
    from: usize,
    k: usize,
    pick: &mut Vec<usize>,
) -> bool {
    if pick.len() == k {
        for &x in pick.iter() {
            used[x] = true;
        }
        let ok = place(adj, rest, used);
        for &x in pick.iter() {
            used[x] = false;
        }
        return ok;
    }
    for i in from..free.len() {
        if free.len() - i < k - pick.len() {
            break;
        }
        pick.push(free[i]);
        if subsets(adj, rest, used, free, i + 1, k, pick) {
            pick.pop();
            return true;
        }
        pick.pop();
    }
    false
}

/// Class subgraph adjacency for one color under `colors[i]` for `edges[i]`.
pub fn class_adjacency(n: usize, edges: &[(usize, usize)], colors: &[usize], color: usize) -> Vec<Vec<bool>> {
    let mut a = vec![vec![false; n]; n];
    for (&(u, v), &c) in edges.iter().zip(colors) {
        if c == color {
            a[u][v] = true;
            a[v][u] = true;
        }
    }
    a
}

/// Naive arrowing over all `q^e` colorings of `edges`, enumerated with the
/// first edge as the most significant digit. Returns the first free coloring.
pub fn naive_first_free(n: usize, edges: &[(usize, usize)], forests: &[Vec<usize>]) -> Option<Vec<usize>> {
    let q = forests.len();
    let e = edges.len();
    let total = q.pow(e as u32);
    let mut colors = vec![0; e];
    for code in 0..total {
        let mut x = code;
        for i in (0..e).rev() {
            colors[i] = x % q;
            x /= q;
        }
        let free = (0..q).all(|c| !brute_contains(&class_adjacency(n, edges, &colors, c), &forests[c]));
        if free {
            return Some(colors);
        }
    }
    None
}

/// Number of isomorphism classes of graphs on `n` vertices by Burnside's lemma.
pub fn burnside_graph_count(n: usize) -> u128 {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let index = |a: usize, b: usize| pairs.iter().position(|&p| p == (a.min(b), a.max(b))).unwrap();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut sum: u128 = 0;
    let mut count: u128 = 0;
    loop {
        let mut seen = vec![false; pairs.len()];
        let mut cycles = 0;
        for s in 0..pairs.len() {
            if seen[s] {
                continue;
            }
            cycles += 1;
            let mut cur = s;
            while !seen[cur] {
                seen[cur] = true;
                let (a, b) = pairs[cur];
                cur = index(perm[a], perm[b]);
            }
        }
        sum += 1u128 << cycles;
        count += 1;
        if !next_permutation(&mut perm) {
            break;
        }
    }
    sum / count
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// All multisets of star sizes from `1..=max_size` with `1..=max_parts` parts,
/// each sorted non-increasing.
pub fn forest_shapes(max_size: usize, max_parts: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn rec(cap: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if left == 0 {
            return;
        }
        for s in (1..=cap).rev() {
            cur.push(s);
            rec(s, left - 1, cur, out);
            cur.pop();
        }
    }
    rec(max_size, max_parts, &mut Vec::new(), &mut out);
    out
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Random graph whose maximum degree is at most `cap`.
pub fn random_capped(rng: &mut ChaCha8Rng, n: usize, cap: usize, attempts: usize) -> Graph {
    let mut g = Graph::empty(n);
    if n < 2 {
        return g;
    }
    for _ in 0..attempts {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v && !g.has_edge(u, v) && g.degree(u) < cap && g.degree(v) < cap {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

pub fn random_bipartite(rng: &mut ChaCha8Rng, a: usize, b: usize, p: f64) -> Graph {
    let mut g = Graph::empty(a + b);
    for u in 0..a {
        for v in a..a + b {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Union of `k` edge-disjoint random Hamiltonian cycles on `n` vertices, so 2k-regular.
pub fn random_even_regular(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Graph {
    'retry: loop {
        let mut g = Graph::empty(n);
        for _ in 0..k {
            let mut placed = false;
            for _ in 0..200 {
                let mut order: Vec<usize> = (0..n).collect();
                order.shuffle(rng);
                let cyc: Vec<(usize, usize)> = (0..n).map(|i| (order[i], order[(i + 1) % n])).collect();
                if cyc.iter().all(|&(u, v)| !g.has_edge(u, v)) {
                    for (u, v) in cyc {
                        g.add_edge(u, v).unwrap();
                    }
                    placed = true;
                    break;
                }
            }
            if !placed {
                continue 'retry;
            }
        }
        return g;
    }
}

/// A cubic graph on 16 vertices with no perfect matching: a center joined to
/// three blocks, each a K_4 with one edge subdivided by the vertex adjacent to the center.
pub fn cubic_without_perfect_matching() -> Graph {
    let mut g = Graph::empty(16);
    for b in 0..3 {
        let base = 1 + 5 * b;
        let (x, a, bb, d, e) = (base, base + 1, base + 2, base + 3, base + 4);
        for (u, v) in [(0, x), (x, a), (x, bb), (a, d), (a, e), (bb, d), (bb, e), (d, e)] {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

pub fn max_degree_of(n: usize, edges: &[(usize, usize)]) -> usize {
    let mut deg = vec![0; n];
    for &(u, v) in edges {
        deg[u] += 1;
        deg[v] += 1;
    }
    deg.into_iter().max().unwrap_or(0)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn partitions(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if n == 0 {
        out.push(cur.clone());
        return;
    }
    for k in (1..=max.min(n)).rev() {
        cur.push(k);
        partitions(n - k, k, cur, out);
        cur.pop();
    }
}

/// Isomorphism classes of graphs on `n` vertices with exactly `e` edges, by
/// Burnside's lemma over cycle types of the vertex permutation.
pub fn burnside_count_with_edges(n: usize, e: usize) -> u128 {
    let mut types = Vec::new();
    partitions(n, n, &mut Vec::new(), &mut types);
    let fact = |k: usize| (1..=k as u128).product::<u128>();
    let mut sum: u128 = 0;
    for cycles in types {
        // Cycles of the induced permutation on vertex pairs: (length, count).
        let mut pair_cycles: Vec<(usize, usize)> = Vec::new();
        for (i, &a) in cycles.iter().enumerate() {
            if a % 2 == 1 {
                pair_cycles.push((a, (a - 1) / 2));
            } else {
                pair_cycles.push((a, (a - 2) / 2));
                pair_cycles.push((a / 2, 1));
            }
            for &b in &cycles[i + 1..] {
                let g = gcd(a, b);
                pair_cycles.push((a / g * b, g));
            }
        }
        // Generating polynomial in the edge count, truncated at degree e.
        let mut poly = vec![0u128; e + 1];
        poly[0] = 1;
        for (len, count) in pair_cycles {
            for _ in 0..count {
                for d in (len..=e).rev() {
                    poly[d] += poly[d - len];
                }
            }
        }
        let mut mult: u128 = 1;
        let mut k = 0;
        while k < cycles.len() {
            let mut j = k;
            while j < cycles.len() && cycles[j] == cycles[k] {
                j += 1;
            }
            mult *= (cycles[k] as u128).pow((j - k) as u32) * fact(j - k);
            k = j;
        }
        sum += poly[e] * (fact(n) / mult);
    }
    sum / fact(n)
}

/// Classes with `e` edges and no isolated vertices.
pub fn burnside_count_no_isolated(e: usize) -> u128 {
    if e == 0 {
        return 1;
    }
    (2..=2 * e)
        .map(|n| burnside_count_with_edges(n, e) - burnside_count_with_edges(n - 1, e))
        .sum()
}
