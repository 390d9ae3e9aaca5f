//! Counting split, NG and pseudo-split graphs: by exhaustive enumeration and
//! from split-graph counts alone.

use std::collections::{HashMap, HashSet};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::{canonical, canonical_with_form, CanonicalCode};
use crate::degree::classify;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest `n` for which [`enumerate`] is offered (274668 graphs at 9).
pub const ENUMERATE_LIMIT: usize = 9;

/// Known counts for `n = 0..=11`.
pub mod reference {
    pub const SPLIT: [u64; 12] = [1, 1, 2, 4, 9, 21, 56, 164, 557, 2223, 10766, 64956];
    pub const SPLIT_UP_TO: [u64; 12] = [1, 2, 4, 8, 17, 38, 94, 258, 815, 3038, 13804, 78760];
    pub const UNBALANCED: [u64; 12] = [0, 1, 2, 4, 8, 17, 38, 94, 258, 815, 3038, 13804];
    pub const BALANCED: [u64; 12] = [1, 0, 0, 0, 1, 4, 18, 70, 299, 1408, 7728, 51152];
    pub const NG: [u64; 12] = [0, 1, 2, 4, 8, 18, 40, 98, 266, 832, 3076, 13898];
    pub const PSEUDO_SPLIT: [u64; 12] = [1, 1, 2, 4, 9, 22, 58, 168, 565, 2240, 10804, 65050];
    /// Balanced share of split graphs, in hundredths, for `n = 4..=11`.
    pub const BALANCED_RATIO_HUNDREDTHS: [u64; 8] = [11, 19, 32, 42, 54, 63, 72, 79];
    /// All graphs up to isomorphism, `n = 0..=9`.
    pub const GRAPHS: [u64; 10] = [1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668];
}

/// Canonical forms of all graphs on `n` vertices, sorted by canonical code.
pub fn enumerate(n: usize) -> Result<Vec<Graph>> {
    Ok(enumerate_up_to(n)?.pop().expect("level n present"))
}

/// [`enumerate`] for every order `0..=max_n`.
pub fn enumerate_up_to(max_n: usize) -> Result<Vec<Vec<Graph>>> {
    enumerate_hereditary(max_n, |_| true)
}

/// Like [`enumerate_up_to`], restricted to a class closed under vertex
/// deletion: only members are extended, only members are kept.
pub fn enumerate_hereditary<F>(max_n: usize, keep: F) -> Result<Vec<Vec<Graph>>>
where
    F: Fn(&Graph) -> bool + Sync,
{
    if max_n > ENUMERATE_LIMIT {
        return Err(Error::SizeBound {
            op: "enumeration",
            limit: ENUMERATE_LIMIT,
            n: max_n,
        });
    }
    let mut out = vec![vec![Graph::empty(0)?]];
    for k in 0..max_n {
        let next = extend(&out[k], k, &keep);
        out.push(next);
    }
    Ok(out)
}

/// Every graph on `k + 1` vertices arises from one on `k` by adding a vertex
/// with some neighbourhood; keep one per canonical code.
fn extend<F>(parents: &[Graph], k: usize, keep: &F) -> Vec<Graph>
where
    F: Fn(&Graph) -> bool + Sync,
{
    let merged = parents
        .par_iter()
        .fold(
            HashMap::new,
            |mut seen: HashMap<CanonicalCode, Graph>, p| {
                for mask in 0..(1u64 << k) {
                    let child = p.add_vertex(VertexSet(mask)).expect("k < 64");
                    let (code, form) = canonical_with_form(&child);
                    if !seen.contains_key(&code) && keep(&form) {
                        seen.insert(code, form);
                    }
                }
                seen
            },
        )
        .reduce(HashMap::new, |a, b| {
            if a.len() < b.len() {
                merge(b, a)
            } else {
                merge(a, b)
            }
        });
    let mut list: Vec<(CanonicalCode, Graph)> = merged.into_iter().collect();
    list.sort_unstable_by(|x, y| x.0.cmp(&y.0));
    list.into_iter().map(|(_, g)| g).collect()
}

fn merge(
    mut a: HashMap<CanonicalCode, Graph>,
    b: HashMap<CanonicalCode, Graph>,
) -> HashMap<CanonicalCode, Graph> {
    for (code, g) in b {
        a.entry(code).or_insert(g);
    }
    a
}

/// Class counts for one vertex count.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub n: usize,
    pub graphs: u64,
    pub split: u64,
    pub balanced: u64,
    pub unbalanced: u64,
    pub ng1: u64,
    pub ng2: u64,
    pub ng3: u64,
    pub ng: u64,
    pub pseudo_split: u64,
    /// Split graphs on at most `n` vertices; only known when every smaller
    /// order was counted too.
    pub t_cum: Option<u64>,
}

impl CensusRow {
    /// Graphs that are both NG-1 and NG-2 (`|A| = 1`).
    pub fn ng1_and_ng2(&self) -> u64 {
        (self.ng1 + self.ng2).saturating_sub(self.unbalanced)
    }

    /// NG-1 graphs that are not NG-2.
    pub fn ng1_only(&self) -> u64 {
        self.unbalanced.saturating_sub(self.ng2)
    }
}

/// Classify pairwise non-isomorphic graphs on `n` vertices and count them.
/// Fails on a repeated isomorphism class or a graph of another order.
pub fn tally(n: usize, graphs: &[Graph]) -> Result<CensusRow> {
    if let Some(g) = graphs.iter().find(|g| g.order() != n) {
        return Err(Error::MixedOrders {
            expected: n,
            found: g.order(),
        });
    }
    let labelled: Vec<_> = graphs
        .par_iter()
        .map(|g| (canonical(g), classify(g)))
        .collect();
    let mut seen = HashSet::with_capacity(labelled.len());
    let mut row = CensusRow {
        n,
        graphs: graphs.len() as u64,
        ..Default::default()
    };
    for (index, (code, label)) in labelled.into_iter().enumerate() {
        if !seen.insert(code) {
            return Err(Error::DuplicateGraph { index });
        }
        row.split += u64::from(label.split);
        row.balanced += u64::from(label.balanced);
        row.unbalanced += u64::from(label.unbalanced);
        row.ng1 += u64::from(label.ng1);
        row.ng2 += u64::from(label.ng2);
        row.ng3 += u64::from(label.ng3);
        row.ng += u64::from(label.ng);
        row.pseudo_split += u64::from(label.pseudo_split);
    }
    Ok(row)
}

/// Enumerate and tally every order `0..=max_n`.
pub fn census_up_to(max_n: usize) -> Result<Vec<CensusRow>> {
    let levels = enumerate_up_to(max_n)?;
    let mut rows = levels
        .iter()
        .enumerate()
        .map(|(n, gs)| tally(n, gs))
        .collect::<Result<Vec<_>>>()?;
    fill_cumulative(&mut rows);
    Ok(rows)
}

/// Set `t_cum` on every row of a run that starts at `n = 0` without gaps.
pub fn fill_cumulative(rows: &mut [CensusRow]) {
    let mut total = 0;
    for (i, row) in rows.iter_mut().enumerate() {
        if row.n != i {
            return;
        }
        total += row.split;
        row.t_cum = Some(total);
    }
}

/// Counts for order `n` derived from split counts `S_0..S_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormulaRow {
    pub n: usize,
    pub split: u64,
    pub t_cum: u64,
    pub unbalanced: u64,
    pub balanced: u64,
    pub ng1: u64,
    pub ng2: u64,
    pub ng3: u64,
    pub ng: u64,
    pub pseudo_split: u64,
}

/// Unbalanced graphs on `n` are the split graphs on fewer vertices; NG-1 and
/// NG-2 graphs on `n` each match split graphs on `n - 1`; NG-3 graphs on `n`
/// match split graphs on at most `n - 5` vertices.
pub fn formulas(split_counts: &[u64], n: usize) -> Result<FormulaRow> {
    if split_counts.len() <= n {
        return Err(Error::InsufficientPrefix {
            need: n,
            have: split_counts.len(),
        });
    }
    let up_to = |k: isize| -> u64 {
        if k < 0 {
            0
        } else {
            split_counts[..=k as usize].iter().sum()
        }
    };
    let n_i = n as isize;
    let split = split_counts[n];
    let unbalanced = up_to(n_i - 1);
    let ng1 = if n == 0 { 0 } else { split_counts[n - 1] };
    let ng3 = up_to(n_i - 5);
    Ok(FormulaRow {
        n,
        split,
        t_cum: up_to(n_i),
        unbalanced,
        balanced: split.saturating_sub(unbalanced),
        ng1,
        ng2: ng1,
        ng3,
        ng: unbalanced + ng3,
        pseudo_split: split + ng3,
    })
}

pub fn formula_table(split_counts: &[u64]) -> Vec<FormulaRow> {
    (0..split_counts.len())
        .map(|n| formulas(split_counts, n).expect("prefix present"))
        .collect()
}

/// Balanced split graphs as a fraction of all split graphs, rounded half up
/// to hundredths.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BalancedRatio {
    pub n: usize,
    pub balanced: u64,
    pub split: u64,
    pub hundredths: u64,
}

impl BalancedRatio {
    pub fn new(n: usize, balanced: u64, split: u64) -> Self {
        let hundredths = (200 * balanced + split) / (2 * split);
        BalancedRatio {
            n,
            balanced,
            split,
            hundredths,
        }
    }

    pub fn exact(&self) -> f64 {
        self.balanced as f64 / self.split as f64
    }
}

impl fmt::Display for BalancedRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{:02}", self.hundredths / 100, self.hundredths % 100)
    }
}

/// One checked equality.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub n: usize,
    pub identity: String,
    pub lhs: u64,
    pub rhs: u64,
}

impl Check {
    pub fn ok(&self) -> bool {
        self.lhs == self.rhs
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.ok() { "ok" } else { "MISMATCH" };
        write!(
            f,
            "n={:<2} {:<40} {} vs {} {}",
            self.n, self.identity, self.lhs, self.rhs, verdict
        )
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(Check::ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.ok())
    }

    fn push(&mut self, n: usize, identity: &str, lhs: u64, rhs: u64) {
        self.checks.push(Check {
            n,
            identity: identity.to_string(),
            lhs,
            rhs,
        });
    }
}

/// Cross-check counted rows against internal consistency, the split-count
/// formulas, the small-order identities between classes, and the known
/// reference values.
pub fn verify(rows: &[CensusRow]) -> VerifyReport {
    let mut rep = VerifyReport::default();
    let by_n: HashMap<usize, &CensusRow> = rows.iter().map(|r| (r.n, r)).collect();
    let split_prefix: Vec<u64> = (0..).map_while(|n| by_n.get(&n).map(|r| r.split)).collect();

    for r in rows {
        let n = r.n;
        rep.push(
            n,
            "split = balanced + unbalanced",
            r.split,
            r.balanced + r.unbalanced,
        );
        rep.push(n, "ng = unbalanced + ng3", r.ng, r.unbalanced + r.ng3);
        rep.push(
            n,
            "pseudo_split = split + ng3",
            r.pseudo_split,
            r.split + r.ng3,
        );
        if n > 0 {
            rep.push(n, "ng1 = ng2", r.ng1, r.ng2);
        }

        if n < split_prefix.len() {
            let f = formulas(&split_prefix, n).expect("prefix covers n");
            if let Some(t) = r.t_cum {
                rep.push(n, "t_cum = formula", t, f.t_cum);
            }
            rep.push(n, "unbalanced = formula", r.unbalanced, f.unbalanced);
            rep.push(n, "balanced = formula", r.balanced, f.balanced);
            rep.push(n, "ng1 = formula", r.ng1, f.ng1);
            rep.push(n, "ng2 = formula", r.ng2, f.ng2);
            rep.push(n, "ng3 = formula", r.ng3, f.ng3);
            rep.push(n, "ng = formula", r.ng, f.ng);
            rep.push(n, "pseudo_split = formula", r.pseudo_split, f.pseudo_split);
        }

        if n >= 1 {
            if let Some(prev) = by_n.get(&(n - 1)) {
                rep.push(n, "ng1 = split(n-1)", r.ng1, prev.split);
                rep.push(
                    n,
                    "ng1 and ng2 = balanced(n-1)",
                    r.ng1_and_ng2(),
                    prev.balanced,
                );
                rep.push(
                    n,
                    "ng1 only = unbalanced(n-1)",
                    r.ng1_only(),
                    prev.unbalanced,
                );
                rep.push(
                    n,
                    "unbalanced = unbalanced(n-1) + split(n-1)",
                    r.unbalanced,
                    prev.unbalanced + prev.split,
                );
            }
        }
        if n >= 4 {
            if let Some(back) = by_n.get(&(n - 4)) {
                rep.push(n, "ng3 = unbalanced(n-4)", r.ng3, back.unbalanced);
            }
        }

        if n < reference::SPLIT.len() {
            rep.push(n, "split = reference", r.split, reference::SPLIT[n]);
            rep.push(
                n,
                "unbalanced = reference",
                r.unbalanced,
                reference::UNBALANCED[n],
            );
            rep.push(
                n,
                "balanced = reference",
                r.balanced,
                reference::BALANCED[n],
            );
            rep.push(n, "ng = reference", r.ng, reference::NG[n]);
            rep.push(
                n,
                "pseudo_split = reference",
                r.pseudo_split,
                reference::PSEUDO_SPLIT[n],
            );
            if let Some(t) = r.t_cum {
                rep.push(n, "t_cum = reference", t, reference::SPLIT_UP_TO[n]);
            }
        }
        if n < reference::GRAPHS.len() {
            rep.push(n, "graphs = reference", r.graphs, reference::GRAPHS[n]);
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_enumeration_counts() {
        for n in 0..=6 {
            assert_eq!(
                enumerate(n).unwrap().len() as u64,
                reference::GRAPHS[n],
                "n={n}"
            );
        }
        assert!(enumerate(10).is_err());
    }

    #[test]
    fn census_matches_formulas_up_to_seven() {
        let rows = census_up_to(7).unwrap();
        let rep = verify(&rows);
        let failed: Vec<String> = rep.failures().map(|c| c.to_string()).collect();
        assert!(failed.is_empty(), "{failed:#?}");
        assert_eq!(rows[5].ng3, 1);
        assert_eq!(rows[0].split, 1);
        assert_eq!(rows[0].ng, 0);
    }

    #[test]
    fn formulas_reproduce_reference() {
        for f in formula_table(&reference::SPLIT) {
            assert_eq!(f.t_cum, reference::SPLIT_UP_TO[f.n]);
            assert_eq!(f.unbalanced, reference::UNBALANCED[f.n]);
            assert_eq!(f.balanced, reference::BALANCED[f.n]);
            assert_eq!(f.ng, reference::NG[f.n]);
            assert_eq!(f.pseudo_split, reference::PSEUDO_SPLIT[f.n]);
        }
        assert!(matches!(
            formulas(&[1, 1], 2),
            Err(Error::InsufficientPrefix { .. })
        ));
    }

    #[test]
    fn ratio_rounding() {
        assert_eq!(BalancedRatio::new(4, 1, 9).to_string(), "0.11");
        assert_eq!(
            BalancedRatio::new(0, 1, 8).hundredths,
            13,
            "0.125 rounds up"
        );
        assert_eq!(BalancedRatio::new(11, 51152, 64956).hundredths, 79);
    }

    #[test]
    fn tally_rejects_bad_input() {
        let p3 = Graph::path(3).unwrap();
        let p3b = p3.permute(&[2, 0, 1]).unwrap();
        assert!(matches!(
            tally(3, &[p3.clone(), p3b]),
            Err(Error::DuplicateGraph { index: 1 })
        ));
        assert!(matches!(
            tally(3, &[p3, Graph::empty(2).unwrap()]),
            Err(Error::MixedOrders { .. })
        ));
        assert_eq!(tally(4, &[]).unwrap().graphs, 0);
    }
}
