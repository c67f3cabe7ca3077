//! Size Ramsey numbers of star forests: the l-sequence formula, proved closed
//! forms, witness graphs, exhaustive computation and extremal families.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::arrowing::{arrows, ArrowError, ArrowOptions, Verdict};
use crate::graph::{
    canonical_form, canonical_labeling, disjoint_union_all, enumerate_graphs_with_budget,
    make_complete, make_cycle, make_star, CanonicalCode, Graph, GraphError,
    DEFAULT_ENUMERATION_BUDGET,
};
use crate::star_forest::{contains_star_forest, StarForest};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RamseyError {
    #[error("at least one forest is required")]
    NoForests,
    #[error("no proved characterization of minimal graphs for class {0}")]
    NoCharacterization(InstanceClass),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Arrow(#[from] ArrowError),
}

/// `values[i]` is `l_{first_index + i}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LSequence {
    pub first_index: usize,
    pub values: Vec<usize>,
    pub total: usize,
}

/// For `k = q..=p` (`p` the total number of stars), `l_k` is the maximum of
/// `Σ (n_{i,j_i} − 1) + 1` over index tuples with `Σ j_i = k`.
pub fn l_sequence(forests: &[StarForest]) -> LSequence {
    let q = forests.len();
    let p: usize = forests.iter().map(|f| f.components()).sum();
    // best[k]: largest Σ (n_{i,j_i} − 1) over the forests seen so far with Σ j_i = k.
    let mut best: Vec<Option<usize>> = vec![None; p + 1];
    best[0] = Some(0);
    for f in forests {
        let mut next = vec![None; p + 1];
        for (k, b) in best.iter().enumerate() {
            let Some(b) = *b else { continue };
            for (j, &n) in f.sizes().iter().enumerate() {
                let slot: &mut Option<usize> = &mut next[k + j + 1];
                let cand = b + n - 1;
                if slot.is_none_or(|s| s < cand) {
                    *slot = Some(cand);
                }
            }
        }
        best = next;
    }
    let values: Vec<usize> = (q..=p)
        .map(|k| best[k].expect("every k in q..=p is reachable") + 1)
        .collect();
    LSequence {
        first_index: q,
        total: values.iter().sum(),
        values,
    }
}

/// Direct enumeration of all index tuples.
pub fn l_sequence_brute(forests: &[StarForest]) -> LSequence {
    let q = forests.len();
    let p: usize = forests.iter().map(|f| f.components()).sum();
    let mut best = vec![0usize; p + 1];
    fn rec(forests: &[StarForest], i: usize, k: usize, acc: usize, best: &mut [usize]) {
        if i == forests.len() {
            best[k] = best[k].max(acc + 1);
            return;
        }
        for (j, &n) in forests[i].sizes().iter().enumerate() {
            rec(forests, i + 1, k + j + 1, acc + n - 1, best);
        }
    }
    rec(forests, 0, 0, 0, &mut best);
    let values: Vec<usize> = best[q..].to_vec();
    LSequence {
        first_index: q,
        total: values.iter().sum(),
        values,
    }
}

pub fn conjectured_size_ramsey(forests: &[StarForest]) -> usize {
    l_sequence(forests).total
}

/// `⊔ K_{1,l_k}`, which arrows the tuple and has the conjectured number of edges.
pub fn witness_graph(forests: &[StarForest]) -> Graph {
    let stars: Vec<Graph> = l_sequence(forests)
        .values
        .iter()
        .map(|&l| make_star(l).expect("l_k >= 1"))
        .collect();
    disjoint_union_all(&stars)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum InstanceClass {
    SameSizeStars,
    StarVsForest,
    OddStarsVsForest,
    TwoStarsVsForest,
    AllOdd,
    GyoriSchelpCondition,
    ConjectureOnly,
}

impl InstanceClass {
    /// The classes in the order [`classify_instance`] tests them.
    pub const PRIORITY: [InstanceClass; 7] = [
        InstanceClass::SameSizeStars,
        InstanceClass::StarVsForest,
        InstanceClass::OddStarsVsForest,
        InstanceClass::TwoStarsVsForest,
        InstanceClass::AllOdd,
        InstanceClass::GyoriSchelpCondition,
        InstanceClass::ConjectureOnly,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            InstanceClass::SameSizeStars => "same-size-stars",
            InstanceClass::StarVsForest => "star-vs-forest",
            InstanceClass::OddStarsVsForest => "odd-stars-vs-forest",
            InstanceClass::TwoStarsVsForest => "two-stars-vs-forest",
            InstanceClass::AllOdd => "all-odd",
            InstanceClass::GyoriSchelpCondition => "gyori-schelp-condition",
            InstanceClass::ConjectureOnly => "conjecture-only",
        }
    }

    pub fn is_proved(self) -> bool {
        self != InstanceClass::ConjectureOnly
    }

    /// Whether the minimal graphs of this class are known exactly.
    pub fn has_characterization(self) -> bool {
        matches!(
            self,
            InstanceClass::SameSizeStars | InstanceClass::StarVsForest | InstanceClass::OddStarsVsForest
        )
    }

    fn matches(self, forests: &[StarForest]) -> bool {
        if self == InstanceClass::ConjectureOnly {
            return true;
        }
        let [f1, f2] = forests else { return false };
        let (n, m) = (f1.sizes(), f2.sizes());
        let odd = |x: &usize| x % 2 == 1;
        match self {
            InstanceClass::SameSizeStars => f1.largest() == f1.smallest() && f2.largest() == f2.smallest(),
            InstanceClass::StarVsForest => n.len() == 1 && f2.smallest() >= 2,
            InstanceClass::OddStarsVsForest => {
                f1.largest() == f1.smallest() && odd(&n[0]) && odd(&m[0]) && f2.smallest() >= 2
            }
            InstanceClass::TwoStarsVsForest => n.len() == 2 && n[0] == n[1] && f2.smallest() >= 2,
            InstanceClass::AllOdd => n.iter().all(odd) && m.iter().all(odd),
            InstanceClass::GyoriSchelpCondition => {
                let l = l_sequence(forests).values;
                (0..l.len()).all(|k| {
                    let tail: usize = l[k..].iter().sum();
                    l[k] * l[k].saturating_sub(1) / 2 > tail
                })
            }
            InstanceClass::ConjectureOnly => true,
        }
    }
}

impl std::fmt::Display for InstanceClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The first proved case covering the pair, or `ConjectureOnly`. A single star
/// against a forest of at least two stars is reported as star-vs-forest even
/// when all sizes agree. Tuples with `q != 2` are always `ConjectureOnly`.
pub fn classify_instance(forests: &[StarForest]) -> InstanceClass {
    if forests.len() == 2
        && forests[1].components() >= 2
        && InstanceClass::StarVsForest.matches(forests)
    {
        return InstanceClass::StarVsForest;
    }
    InstanceClass::PRIORITY
        .into_iter()
        .find(|c| c.matches(forests))
        .expect("ConjectureOnly always matches")
}

/// Every proved case covering the pair, in priority order; `[ConjectureOnly]` if none.
pub fn classify_all(forests: &[StarForest]) -> Vec<InstanceClass> {
    let proved: Vec<InstanceClass> = InstanceClass::PRIORITY
        .into_iter()
        .filter(|c| c.is_proved() && c.matches(forests))
        .collect();
    if proved.is_empty() {
        vec![InstanceClass::ConjectureOnly]
    } else {
        proved
    }
}

/// The value asserted by the theorem for `class`, in that theorem's own closed
/// form; `None` if the class does not cover the pair or is conjectural.
pub fn theorem_value(class: InstanceClass, forests: &[StarForest]) -> Option<usize> {
    if !class.is_proved() || !class.matches(forests) {
        return None;
    }
    let [f1, f2] = forests else { return None };
    let (n, m) = (f1.sizes(), f2.sizes());
    let (s, t) = (n.len(), m.len());
    let sum_over_m = |n: usize| m.iter().map(|&mj| n + mj - 1).sum::<usize>();
    Some(match class {
        InstanceClass::SameSizeStars => (s + t - 1) * (n[0] + m[0] - 1),
        InstanceClass::StarVsForest => sum_over_m(n[0]),
        InstanceClass::OddStarsVsForest => (s - 1) * (n[0] + m[0] - 1) + sum_over_m(n[0]),
        InstanceClass::TwoStarsVsForest => n[0] + m[0] - 1 + sum_over_m(n[0]),
        InstanceClass::AllOdd | InstanceClass::GyoriSchelpCondition => l_sequence(forests).total,
        InstanceClass::ConjectureOnly => unreachable!(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchStatus {
    /// The value and the full minimal set are exact.
    Complete,
    /// Every graph with at most `max_edges` edges was decided and none arrows.
    NotFound,
    /// Some graph at or below the reported level stayed undecided.
    Partial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SizeRamseyResult {
    pub status: SearchStatus,
    pub value: Option<usize>,
    pub minimal_graphs: Vec<CanonicalCode>,
    pub undecided: Vec<CanonicalCode>,
    pub graphs_checked: usize,
}

/// Ascends `e = 1, 2, ..., max_edges`, deciding arrowing for every isomorphism
/// class of `e`-edge graphs without isolated vertices.
pub fn size_ramsey_exhaustive(
    forests: &[StarForest],
    max_edges: usize,
    enumeration_budget: usize,
    options: &ArrowOptions,
) -> Result<SizeRamseyResult, RamseyError> {
    if forests.is_empty() {
        return Err(RamseyError::NoForests);
    }
    if max_edges > enumeration_budget {
        return Err(GraphError::EnumerationBudgetExceeded {
            requested: max_edges,
            budget: enumeration_budget,
        }
        .into());
    }
    let inner = ArrowOptions { threads: 1, ..*options };
    let mut undecided = Vec::new();
    let mut checked = 0;
    for e in 1..=max_edges {
        let level = enumerate_graphs_with_budget(e, enumeration_budget)?;
        let decide = |g: &Graph| -> Result<Verdict, RamseyError> {
            if forests.iter().any(|f| !contains_star_forest(g, f)) {
                return Ok(Verdict::DoesNotArrow);
            }
            Ok(arrows(g, forests, &inner)?.verdict)
        };
        let verdicts: Vec<Verdict> = if options.threads > 1 {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(options.threads)
                .build()
                .expect("thread pool");
            pool.install(|| level.par_iter().map(decide).collect::<Result<_, _>>())?
        } else {
            level.iter().map(decide).collect::<Result<_, _>>()?
        };
        checked += level.len();
        let mut found = Vec::new();
        for (g, v) in level.iter().zip(verdicts) {
            match v {
                Verdict::Arrows => found.push(canonical_form(g)?),
                Verdict::Undecided => undecided.push(canonical_form(g)?),
                Verdict::DoesNotArrow => {}
            }
        }
        if !found.is_empty() {
            let status = if undecided.is_empty() {
                SearchStatus::Complete
            } else {
                SearchStatus::Partial
            };
            return Ok(SizeRamseyResult {
                status,
                value: Some(e),
                minimal_graphs: found,
                undecided,
                graphs_checked: checked,
            });
        }
    }
    Ok(SizeRamseyResult {
        status: if undecided.is_empty() {
            SearchStatus::NotFound
        } else {
            SearchStatus::Partial
        },
        value: None,
        minimal_graphs: Vec::new(),
        undecided,
        graphs_checked: checked,
    })
}

/// All predicted Ramsey-minimal graphs, canonically labeled, one per
/// isomorphism class, sorted by vertex count and canonical code.
pub fn extremal_family(
    class: InstanceClass,
    forests: &[StarForest],
) -> Result<Vec<Graph>, RamseyError> {
    if !class.has_characterization() || !class.matches(forests) {
        return Err(RamseyError::NoCharacterization(class));
    }
    let [f1, f2] = forests else {
        return Err(RamseyError::NoCharacterization(class));
    };
    let star = |k: usize| make_star(k).expect("positive size");
    let k3 = || make_complete(3).expect("K_3");
    let mut family: Vec<Graph> = Vec::new();
    match class {
        InstanceClass::SameSizeStars => {
            let (mut n, mut s, mut m, mut t) = (f1.largest(), f1.components(), f2.largest(), f2.components());
            if n < m {
                std::mem::swap(&mut n, &mut m);
                std::mem::swap(&mut s, &mut t);
            }
            let copies = s + t - 1;
            family.push(disjoint_union_all(&vec![star(n + m - 1); copies]));
            if n == 2 && m == 2 {
                for l in 0..=copies {
                    let mut parts = vec![k3(); l];
                    parts.extend(std::iter::repeat_n(star(3), copies - l));
                    family.push(disjoint_union_all(&parts));
                }
            }
            if s == 1 && m == 1 && n == 2 {
                let c4 = make_cycle(4).expect("C_4");
                for l in 0..=t / 2 {
                    let mut parts = vec![c4.clone(); l];
                    parts.extend(std::iter::repeat_n(star(2), t - 2 * l));
                    family.push(disjoint_union_all(&parts));
                }
            }
        }
        InstanceClass::StarVsForest => {
            let n = f1.largest();
            let options: Vec<Vec<Graph>> = f2
                .sizes()
                .iter()
                .map(|&mj| {
                    let mut o = vec![star(n + mj - 1)];
                    if n == 2 && mj == 2 {
                        o.push(k3());
                    }
                    o
                })
                .collect();
            let mut choice = vec![0usize; options.len()];
            loop {
                let parts: Vec<Graph> = choice
                    .iter()
                    .zip(&options)
                    .map(|(&c, o)| o[c].clone())
                    .collect();
                family.push(disjoint_union_all(&parts));
                let Some(i) = (0..choice.len()).rev().find(|&i| choice[i] + 1 < options[i].len()) else {
                    break;
                };
                choice[i] += 1;
                for c in &mut choice[i + 1..] {
                    *c = 0;
                }
            }
        }
        InstanceClass::OddStarsVsForest => {
            let (n, s) = (f1.largest(), f1.components());
            let m = f2.sizes();
            let mut parts = vec![star(n + m[0] - 1); s - 1];
            parts.extend(m.iter().map(|&mj| star(n + mj - 1)));
            family.push(disjoint_union_all(&parts));
        }
        _ => unreachable!("checked by has_characterization"),
    }
    canonical_set(family)
}

fn canonical_set(graphs: Vec<Graph>) -> Result<Vec<Graph>, RamseyError> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for g in graphs {
        let perm = canonical_labeling(&g)?;
        let c = g.relabel(&perm);
        if seen.insert((c.vertex_count(), canonical_form(&c)?)) {
            out.push(c);
        }
    }
    out.sort_by_cached_key(|g| (g.vertex_count(), canonical_form(g).expect("within cap")));
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CharacterizationStatus {
    /// Exhaustive minimal set equals the predicted family.
    Equal,
    /// Exhaustive search completed and disagrees with the prediction.
    Different,
    /// The search did not complete within the limits.
    Partial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharacterizationReport {
    pub class: InstanceClass,
    pub status: CharacterizationStatus,
    pub predicted_value: usize,
    pub found_value: Option<usize>,
    pub predicted: Vec<CanonicalCode>,
    pub found: Vec<CanonicalCode>,
    /// Predicted but not found.
    pub missing: Vec<CanonicalCode>,
    /// Found but not predicted.
    pub unexpected: Vec<CanonicalCode>,
}

/// Compares [`extremal_family`] with [`size_ramsey_exhaustive`].
pub fn verify_characterization(
    forests: &[StarForest],
    max_edges: usize,
    enumeration_budget: usize,
    options: &ArrowOptions,
) -> Result<CharacterizationReport, RamseyError> {
    let class = classify_instance(forests);
    let family = extremal_family(class, forests)?;
    let predicted: Vec<CanonicalCode> = family.iter().map(canonical_form).collect::<Result<_, _>>()?;
    let predicted_value = theorem_value(class, forests).expect("characterized classes are proved");
    let limit = max_edges.min(enumeration_budget);
    let (status, found_value, found) = if predicted_value > limit {
        (CharacterizationStatus::Partial, None, Vec::new())
    } else {
        let r = size_ramsey_exhaustive(forests, max_edges.min(predicted_value), enumeration_budget, options)?;
        let mut found = r.minimal_graphs.clone();
        found.sort();
        let mut sorted_pred = predicted.clone();
        sorted_pred.sort();
        let status = match r.status {
            SearchStatus::Complete if r.value == Some(predicted_value) && found == sorted_pred => {
                CharacterizationStatus::Equal
            }
            SearchStatus::Complete | SearchStatus::NotFound => CharacterizationStatus::Different,
            SearchStatus::Partial => CharacterizationStatus::Partial,
        };
        (status, r.value, r.minimal_graphs)
    };
    let missing = predicted.iter().filter(|c| !found.contains(c)).cloned().collect();
    let unexpected = if status == CharacterizationStatus::Partial {
        Vec::new()
    } else {
        found.iter().filter(|c| !predicted.contains(c)).cloned().collect()
    };
    Ok(CharacterizationReport {
        class,
        status,
        predicted_value,
        found_value,
        predicted,
        found,
        missing,
        unexpected,
    })
}

/// Convenience wrapper using the default enumeration budget and arrowing options.
pub fn size_ramsey(forests: &[StarForest], max_edges: usize) -> Result<SizeRamseyResult, RamseyError> {
    size_ramsey_exhaustive(forests, max_edges, DEFAULT_ENUMERATION_BUDGET, &ArrowOptions::default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::disjoint_union;

    fn f(s: &str) -> StarForest {
        s.parse().unwrap()
    }

    fn pair(a: &str, b: &str) -> Vec<StarForest> {
        vec![f(a), f(b)]
    }

    fn code(g: &Graph) -> CanonicalCode {
        canonical_form(g).unwrap()
    }

    fn codes(gs: &[Graph]) -> Vec<CanonicalCode> {
        let mut v: Vec<_> = gs.iter().map(code).collect();
        v.sort();
        v
    }

    #[test]
    fn l_sequence_examples() {
        let l = l_sequence(&pair("3,3", "2,2,2"));
        assert_eq!(l.values, vec![4; 4]);
        assert_eq!(l.total, 16);
        assert_eq!(l_sequence(&pair("4,2", "3,3")).values, vec![6, 6, 4]);
        assert_eq!(l_sequence(&pair("1", "1")).values, vec![1]);
        assert_eq!(l_sequence(&pair("3,3", "3,2")).values, vec![5, 5, 4]);
        assert_eq!(l_sequence(&[f("4,2,1")]).values, vec![4, 2, 1]);
        assert_eq!(l_sequence(&pair("4,2", "3,3")), l_sequence_brute(&pair("4,2", "3,3")));
    }

    #[test]
    fn conjectured_values() {
        assert_eq!(conjectured_size_ramsey(&pair("3", "3,2")), 9);
        assert_eq!(conjectured_size_ramsey(&pair("3,3", "3,2")), 14);
        assert_eq!(conjectured_size_ramsey(&pair("1", "1")), 1);
    }

    #[test]
    fn witnesses() {
        assert_eq!(code(&witness_graph(&pair("2", "2"))), code(&make_star(3).unwrap()));
        let w = witness_graph(&pair("3,3", "3,2"));
        assert_eq!(w.edge_count(), 14);
        let expect = disjoint_union_all(&[make_star(5).unwrap(), make_star(5).unwrap(), make_star(4).unwrap()]);
        assert_eq!(code(&w), code(&expect));
        assert_eq!(code(&witness_graph(&pair("3", "2"))), code(&make_star(4).unwrap()));
    }

    #[test]
    fn classification() {
        assert_eq!(classify_instance(&pair("3", "2,2")), InstanceClass::StarVsForest);
        assert_eq!(classify_instance(&pair("3,1", "1")), InstanceClass::AllOdd);
        assert_eq!(classify_instance(&pair("3,3", "3,2")), InstanceClass::OddStarsVsForest);
        assert_eq!(classify_instance(&pair("2,2", "2")), InstanceClass::SameSizeStars);
        assert_eq!(classify_instance(&pair("4,4", "3,2")), InstanceClass::TwoStarsVsForest);
        // l = (6, 4): C(6,2) = 15 > 10 and C(4,2) = 6 > 4.
        assert_eq!(classify_instance(&pair("4,2", "3")), InstanceClass::GyoriSchelpCondition);
        assert_eq!(classify_instance(&pair("2,1", "2,1")), InstanceClass::ConjectureOnly);
        assert_eq!(classify_instance(&[f("2"), f("2"), f("2")]), InstanceClass::ConjectureOnly);
        assert_eq!(
            classify_all(&pair("3,3", "3,2")),
            vec![InstanceClass::OddStarsVsForest, InstanceClass::TwoStarsVsForest]
        );
    }

    #[test]
    fn theorem_values() {
        assert_eq!(theorem_value(InstanceClass::OddStarsVsForest, &pair("3,3", "3,2")), Some(14));
        assert_eq!(theorem_value(InstanceClass::TwoStarsVsForest, &pair("3,3", "3,2")), Some(14));
        assert_eq!(theorem_value(InstanceClass::StarVsForest, &pair("3", "3,2")), Some(9));
        assert_eq!(theorem_value(InstanceClass::SameSizeStars, &pair("3,3", "2,2,2")), Some(16));
        assert_eq!(theorem_value(InstanceClass::StarVsForest, &pair("3,3", "3,2")), None);
    }

    #[test]
    fn exhaustive_small() {
        let r = size_ramsey(&pair("2", "2"), 4).unwrap();
        assert_eq!(r.status, SearchStatus::Complete);
        assert_eq!(r.value, Some(3));
        let mut got = r.minimal_graphs.clone();
        got.sort();
        assert_eq!(got, codes(&[make_complete(3).unwrap(), make_star(3).unwrap()]));

        let r = size_ramsey(&pair("1", "1"), 2).unwrap();
        assert_eq!(r.value, Some(1));
        assert_eq!(r.minimal_graphs, vec![code(&make_complete(2).unwrap())]);

        let r = size_ramsey(&pair("2", "2"), 2).unwrap();
        assert_eq!(r.status, SearchStatus::NotFound);
        assert!(size_ramsey(&pair("1", "1"), 9).is_err());
    }

    #[test]
    fn families() {
        let fam = extremal_family(InstanceClass::SameSizeStars, &pair("2", "2")).unwrap();
        assert_eq!(codes(&fam), codes(&[make_star(3).unwrap(), make_complete(3).unwrap()]));

        let fam = extremal_family(InstanceClass::StarVsForest, &pair("2", "2,2")).unwrap();
        let (s3, k3) = (make_star(3).unwrap(), make_complete(3).unwrap());
        assert_eq!(
            codes(&fam),
            codes(&[disjoint_union(&s3, &s3), disjoint_union(&s3, &k3), disjoint_union(&k3, &k3)])
        );

        let fam = extremal_family(InstanceClass::OddStarsVsForest, &pair("3,3", "3,2")).unwrap();
        assert_eq!(fam.len(), 1);
        assert_eq!(fam[0].edge_count(), 14);

        let fam = extremal_family(InstanceClass::SameSizeStars, &pair("2", "1,1")).unwrap();
        let p3 = make_path(3);
        assert_eq!(
            codes(&fam),
            codes(&[make_cycle(4).unwrap(), disjoint_union(&p3, &p3)])
        );

        assert_eq!(
            extremal_family(InstanceClass::TwoStarsVsForest, &pair("3,3", "3,2")),
            Err(RamseyError::NoCharacterization(InstanceClass::TwoStarsVsForest))
        );
    }

    fn make_path(n: usize) -> Graph {
        crate::graph::make_path(n).unwrap()
    }

    #[test]
    fn characterization_small() {
        let opts = ArrowOptions::default();
        for (a, b) in [("2", "2"), ("2", "1,1"), ("1", "1")] {
            let r = verify_characterization(&pair(a, b), 8, 8, &opts).unwrap();
            assert_eq!(r.status, CharacterizationStatus::Equal, "{a} vs {b}: {r:?}");
        }
        let r = verify_characterization(&pair("3,3", "3,2"), 8, 8, &opts).unwrap();
        assert_eq!(r.status, CharacterizationStatus::Partial);
    }
}
