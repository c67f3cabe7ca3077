//! Exact decision of `G -> (F_1, ..., F_q)` by pruned search over edge colorings.
//!
//! Edges are colored one at a time in a fixed order, colors in increasing
//! index. A branch is cut as soon as some color class contains its forest, so
//! the first complete coloring reached is the lexicographically least free
//! coloring in that order.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::free_coloring::{verify_free, EdgeColoring};
use crate::graph::{BitMatrix, Graph};
use crate::star_forest::{StarForest, StarPacker};

pub const DEFAULT_MAX_NODES: u64 = 200_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArrowError {
    #[error("at least one forest is required")]
    NoForests,
    #[error("thread count must be positive")]
    NoThreads,
}

/// Search limits. A node is one call of the search on a partial coloring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub time_limit: Option<Duration>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_nodes: DEFAULT_MAX_NODES,
            time_limit: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ArrowOptions {
    pub budget: SearchBudget,
    /// Among equal forests, color `j` may only appear after the lower color of that group.
    pub symmetry_breaking: bool,
    pub threads: usize,
}

impl Default for ArrowOptions {
    fn default() -> Self {
        ArrowOptions {
            budget: SearchBudget::default(),
            symmetry_breaking: true,
            threads: 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Arrows,
    DoesNotArrow,
    Undecided,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum UndecidedReason {
    NodeLimit,
    TimeLimit,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowVerdict {
    pub verdict: Verdict,
    /// Present exactly when the verdict is [`Verdict::DoesNotArrow`].
    pub counterexample: Option<EdgeColoring>,
    pub reason: Option<UndecidedReason>,
    pub colorings_explored: u64,
    pub elapsed: Duration,
}

impl ArrowVerdict {
    /// `Some(true)` if `G` arrows, `Some(false)` if not, `None` when undecided.
    pub fn arrows(&self) -> Option<bool> {
        match self.verdict {
            Verdict::Arrows => Some(true),
            Verdict::DoesNotArrow => Some(false),
            Verdict::Undecided => None,
        }
    }
}

/// Edges in BFS order from a maximum-degree vertex, neighbors ascending; each
/// further component starts at its own maximum-degree vertex.
pub fn search_order(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(g.edge_count());
    loop {
        let start = (0..n)
            .filter(|&v| !seen[v] && g.degree(v) > 0)
            .max_by(|&a, &b| g.degree(a).cmp(&g.degree(b)).then(b.cmp(&a)));
        let Some(start) = start else { break };
        seen[start] = true;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for w in g.neighbors(v) {
                if !done[w] {
                    order.push((v.min(w), v.max(w)));
                }
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
            done[v] = true;
        }
    }
    order
}

pub fn arrows(
    g: &Graph,
    forests: &[StarForest],
    options: &ArrowOptions,
) -> Result<ArrowVerdict, ArrowError> {
    if forests.is_empty() {
        return Err(ArrowError::NoForests);
    }
    if options.threads == 0 {
        return Err(ArrowError::NoThreads);
    }
    let started = Instant::now();
    let deadline = options.budget.time_limit.map(|t| started + t);
    let order = search_order(g);
    let ctx = Context::new(g.vertex_count(), forests, options.symmetry_breaking);
    let (outcome, nodes) = if options.threads > 1 {
        parallel_search(&ctx, &order, options, deadline)
    } else {
        let mut s = Searcher::new(&ctx, &order, options.budget.max_nodes, deadline, None);
        let r = s.dfs(0);
        let nodes = s.nodes;
        (s.into_outcome(r), nodes)
    };
    let verdict = build_verdict(g, forests, &order, outcome, nodes, started.elapsed());
    Ok(verdict)
}

/// [`arrows`] with default options, panicking if a reported counterexample
/// fails independent re-validation.
pub fn arrows_with_certificate_check(
    g: &Graph,
    forests: &[StarForest],
) -> Result<ArrowVerdict, ArrowError> {
    let v = arrows(g, forests, &ArrowOptions::default())?;
    if let Some(c) = &v.counterexample {
        let free = verify_free(g, c, forests).expect("counterexample is a total q-coloring");
        let direct = forests.iter().enumerate().all(|(i, f)| {
            !crate::star_forest::contains_star_forest(&c.class_graph(g.vertex_count(), i), f)
        });
        assert!(free && direct, "internal inconsistency: counterexample is not free");
    }
    Ok(v)
}

fn build_verdict(
    g: &Graph,
    forests: &[StarForest],
    order: &[(usize, usize)],
    outcome: Outcome,
    nodes: u64,
    elapsed: Duration,
) -> ArrowVerdict {
    let (verdict, counterexample, reason) = match outcome {
        Outcome::Exhausted => (Verdict::Arrows, None, None),
        Outcome::Found(colors) => {
            let c = EdgeColoring::new(forests.len(), order.iter().copied().zip(colors))
                .expect("search produces a valid coloring");
            let ok = verify_free(g, &c, forests).expect("search coloring is total");
            assert!(ok, "internal inconsistency: search returned a non-free coloring");
            (Verdict::DoesNotArrow, Some(c), None)
        }
        Outcome::Budget(r) => (Verdict::Undecided, None, Some(r)),
    };
    ArrowVerdict {
        verdict,
        counterexample,
        reason,
        colorings_explored: nodes,
        elapsed,
    }
}

#[derive(Clone, Debug)]
enum Outcome {
    Exhausted,
    Found(Vec<usize>),
    Budget(UndecidedReason),
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Step {
    Exhausted,
    Found,
    Budget(UndecidedReason),
    Cancelled,
}

struct Context {
    n: usize,
    q: usize,
    packers: Vec<StarPacker>,
    min_size: Vec<usize>,
    total: Vec<usize>,
    /// Lower color with an identical forest, when symmetry breaking applies.
    sym_prev: Vec<Option<usize>>,
}

impl Context {
    fn new(n: usize, forests: &[StarForest], symmetry: bool) -> Self {
        let sym_prev = (0..forests.len())
            .map(|i| {
                if symmetry {
                    (0..i).rev().find(|&j| forests[j] == forests[i])
                } else {
                    None
                }
            })
            .collect();
        Context {
            n,
            q: forests.len(),
            packers: forests.iter().map(StarPacker::new).collect(),
            min_size: forests.iter().map(|f| f.smallest()).collect(),
            total: forests.iter().map(|f| f.total_edges()).collect(),
            sym_prev,
        }
    }
}

struct Searcher<'a> {
    ctx: &'a Context,
    order: &'a [(usize, usize)],
    packers: Vec<StarPacker>,
    classes: Vec<BitMatrix>,
    deg: Vec<Vec<usize>>,
    count: Vec<usize>,
    assign: Vec<usize>,
    nodes: u64,
    max_nodes: u64,
    deadline: Option<Instant>,
    /// `(decided, me)`: stop once a subtree before `me` has decided the search.
    cancel: Option<(&'a AtomicUsize, usize)>,
}

impl<'a> Searcher<'a> {
    fn new(
        ctx: &'a Context,
        order: &'a [(usize, usize)],
        max_nodes: u64,
        deadline: Option<Instant>,
        cancel: Option<(&'a AtomicUsize, usize)>,
    ) -> Self {
        Searcher {
            ctx,
            order,
            packers: ctx.packers.clone(),
            classes: (0..ctx.q).map(|_| BitMatrix::new(ctx.n)).collect(),
            deg: vec![vec![0; ctx.n]; ctx.q],
            count: vec![0; ctx.q],
            assign: Vec::with_capacity(order.len()),
            nodes: 0,
            max_nodes,
            deadline,
            cancel,
        }
    }

    fn push(&mut self, color: usize) {
        let (u, v) = self.order[self.assign.len()];
        self.classes[color].set_sym(u, v);
        self.deg[color][u] += 1;
        self.deg[color][v] += 1;
        self.count[color] += 1;
        self.assign.push(color);
    }

    fn pop(&mut self) {
        let color = self.assign.pop().expect("non-empty assignment");
        let (u, v) = self.order[self.assign.len()];
        self.classes[color].clear_sym(u, v);
        self.deg[color][u] -= 1;
        self.deg[color][v] -= 1;
        self.count[color] -= 1;
    }

    /// Whether `color` may be given to the next edge.
    fn allowed(&self, color: usize) -> bool {
        self.ctx.sym_prev[color].is_none_or(|p| self.count[p] > 0)
    }

    /// Whether the class of the most recently colored edge now contains its forest.
    fn violated(&mut self) -> bool {
        let color = *self.assign.last().unwrap();
        let (u, v) = self.order[self.assign.len() - 1];
        let d = &self.deg[color];
        if d[u].max(d[v]) < self.ctx.min_size[color] || self.count[color] < self.ctx.total[color] {
            return false;
        }
        self.packers[color].contains(&self.classes[color])
    }

    fn tick(&mut self) -> Option<Step> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Some(Step::Budget(UndecidedReason::NodeLimit));
        }
        if self.nodes.is_multiple_of(1024) {
            if self.deadline.is_some_and(|d| Instant::now() >= d) {
                return Some(Step::Budget(UndecidedReason::TimeLimit));
            }
            if let Some((decided, me)) = self.cancel {
                if decided.load(Ordering::Relaxed) < me {
                    return Some(Step::Cancelled);
                }
            }
        }
        None
    }

    fn dfs(&mut self, idx: usize) -> Step {
        if let Some(stop) = self.tick() {
            return stop;
        }
        if idx == self.order.len() {
            return Step::Found;
        }
        for color in 0..self.ctx.q {
            if !self.allowed(color) {
                continue;
            }
            self.push(color);
            if !self.violated() {
                match self.dfs(idx + 1) {
                    Step::Exhausted => {}
                    other => return other,
                }
            }
            self.pop();
        }
        Step::Exhausted
    }

    /// Depth-first enumeration of surviving partial colorings of length `depth`,
    /// each tagged with the number of shallower nodes visited before it.
    fn prefixes(&mut self, idx: usize, depth: usize, out: &mut Vec<(Vec<usize>, u64)>) {
        if idx == depth {
            out.push((self.assign.clone(), self.nodes));
            return;
        }
        self.nodes += 1;
        for color in 0..self.ctx.q {
            if !self.allowed(color) {
                continue;
            }
            self.push(color);
            if !self.violated() {
                self.prefixes(idx + 1, depth, out);
            }
            self.pop();
        }
    }

    fn into_outcome(self, step: Step) -> Outcome {
        match step {
            Step::Exhausted => Outcome::Exhausted,
            Step::Found => Outcome::Found(self.assign),
            Step::Budget(r) => Outcome::Budget(r),
            Step::Cancelled => unreachable!("sequential search is never cancelled"),
        }
    }
}

/// Splits the tree at a fixed depth and explores the subtrees concurrently.
/// Results are combined in depth-first order with running node counts, so
/// verdict, counterexample and node count match the sequential search.
fn parallel_search(
    ctx: &Context,
    order: &[(usize, usize)],
    options: &ArrowOptions,
    deadline: Option<Instant>,
) -> (Outcome, u64) {
    let max_nodes = options.budget.max_nodes;
    let mut depth = 0;
    let mut width = 1usize;
    while depth < order.len() && width < 16 * options.threads {
        depth += 1;
        width = width.saturating_mul(ctx.q);
    }
    if depth == 0 || depth >= order.len() {
        let mut s = Searcher::new(ctx, order, max_nodes, deadline, None);
        let r = s.dfs(0);
        let nodes = s.nodes;
        return (s.into_outcome(r), nodes);
    }
    let mut root = Searcher::new(ctx, order, u64::MAX, None, None);
    let mut prefixes = Vec::new();
    root.prefixes(0, depth, &mut prefixes);
    let interior = root.nodes;

    let decided = AtomicUsize::new(usize::MAX);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.threads)
        .build()
        .expect("thread pool");
    let results: Vec<Option<(Step, Vec<usize>, u64)>> = pool.install(|| {
        prefixes
            .par_iter()
            .enumerate()
            .map(|(i, (prefix, _))| {
                if decided.load(Ordering::Relaxed) < i {
                    return None;
                }
                let mut s = Searcher::new(ctx, order, max_nodes, deadline, Some((&decided, i)));
                for &c in prefix {
                    s.push(c);
                }
                let step = s.dfs(depth);
                if matches!(step, Step::Found | Step::Budget(_)) {
                    decided.fetch_min(i, Ordering::Relaxed);
                }
                Some((step, s.assign, s.nodes))
            })
            .collect()
    });

    let mut below = 0u64;
    for ((_, before), result) in prefixes.iter().zip(results) {
        let spent = before + below;
        if spent > max_nodes {
            return (Outcome::Budget(UndecidedReason::NodeLimit), max_nodes + 1);
        }
        let (step, assign, nodes) = result.expect("subtrees up to the deciding one are explored");
        let running = spent + nodes;
        match step {
            Step::Exhausted if running <= max_nodes => below += nodes,
            Step::Found if running <= max_nodes => return (Outcome::Found(assign), running),
            Step::Budget(UndecidedReason::TimeLimit) => {
                return (Outcome::Budget(UndecidedReason::TimeLimit), running)
            }
            Step::Cancelled => unreachable!("only subtrees after the deciding one are cancelled"),
            _ => return (Outcome::Budget(UndecidedReason::NodeLimit), max_nodes + 1),
        }
    }
    let total = interior + below;
    if total > max_nodes {
        return (Outcome::Budget(UndecidedReason::NodeLimit), max_nodes + 1);
    }
    (Outcome::Exhausted, total)
}
