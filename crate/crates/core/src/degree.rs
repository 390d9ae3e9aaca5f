//! Recognition from the sorted degree sequence alone.
//!
//! With `d_1 >= ... >= d_n` and split index `m = max{i : d_i >= i - 1}`:
//!
//! * split iff `sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i`, and then `omega = m`;
//! * a split graph is balanced iff `d_m > m - 1`; otherwise it is NG-1 when
//!   `m` is the last index with `d_i = m - 1` and NG-2 when it is the first;
//! * NG-3 iff `sum_{i<=m+2} d_i = (m+2)(m+1) - 10 + sum_{i>m+2} d_i` and
//!   `d_i = m - 1` exactly for `m-2 <= i <= m+2`.
//!
//! Everything here is linear in `n + |E|`.

use std::fmt;

use serde::Serialize;

use crate::graph::Graph;

/// Non-increasing degree sequence with its split index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    /// `degrees[i - 1] = d_i`, non-increasing.
    pub degrees: Vec<usize>,
    /// `m = max{i : d_i >= i - 1}` (1-based); 0 for the empty graph.
    pub split_index: usize,
    /// `order[i - 1]` is the vertex with degree `d_i`; ties keep ascending ids.
    pub order: Vec<usize>,
}

impl DegreeProfile {
    /// Profile of a bare degree sequence; `order` is the identity on the
    /// sorted positions.
    pub fn from_degrees(mut degrees: Vec<usize>) -> Self {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        let order = (0..degrees.len()).collect();
        let split_index = split_index(&degrees);
        DegreeProfile {
            degrees,
            split_index,
            order,
        }
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    /// `d_i`, 1-based.
    pub fn d(&self, i: usize) -> usize {
        self.degrees[i - 1]
    }

    fn sum(&self, from: usize, to: usize) -> usize {
        // 1-based inclusive; empty when from > to
        if from > to {
            return 0;
        }
        self.degrees[from - 1..to].iter().sum()
    }

    /// Prefix degree sum equals m(m-1) plus the suffix sum.
    pub fn is_split(&self) -> bool {
        let n = self.len();
        let m = self.split_index;
        if n == 0 {
            return true;
        }
        self.sum(1, m) == m * (m - 1) + self.sum(m + 1, n)
    }

    pub fn split_kind(&self) -> SplitKind {
        if self.is_empty() {
            return SplitKind::Balanced;
        }
        if !self.is_split() {
            return SplitKind::NotSplit;
        }
        let n = self.len();
        let m = self.split_index;
        if self.d(m) > m - 1 {
            return SplitKind::Balanced;
        }
        // d_m = m - 1 here: the last index with that degree makes it NG-1, the
        // first makes it NG-2. A run through m on both sides cannot occur for
        // split graphs (d_{m-1} = d_m = d_{m+1} rules it out).
        let last = m == n || self.d(m + 1) < m - 1;
        let first = m == 1 || self.d(m - 1) > m - 1;
        match (last, first) {
            (true, true) => SplitKind::Ng1Ng2,
            (true, false) => SplitKind::Ng1,
            (false, true) => SplitKind::Ng2,
            (false, false) => {
                debug_assert!(
                    false,
                    "split profile with d_(m-1) = d_m = d_(m+1): {:?}",
                    self.degrees
                );
                SplitKind::NotSplit
            }
        }
    }

    pub fn is_ng3(&self) -> bool {
        let n = self.len();
        let m = self.split_index;
        if n < 5 || m < 3 || m + 2 > n {
            return false;
        }
        let lhs = self.sum(1, m + 2);
        let rhs = ((m + 2) * (m + 1) + self.sum(m + 3, n)).checked_sub(10);
        if rhs != Some(lhs) {
            return false;
        }
        self.degrees
            .iter()
            .enumerate()
            .all(|(i0, &d)| (d == m - 1) == (m - 2..=m + 2).contains(&(i0 + 1)))
    }

    pub fn classify(&self) -> ClassLabel {
        ClassLabel::new(self.split_kind(), self.is_ng3())
    }
}

fn split_index(sorted: &[usize]) -> usize {
    // d_i - (i - 1) is strictly decreasing in i, so the indices satisfying
    // d_i >= i - 1 form a prefix.
    sorted
        .iter()
        .enumerate()
        .take_while(|&(i0, &d)| d >= i0)
        .count()
}

/// Degree profile of `g`, using a stable counting sort.
pub fn profile(g: &Graph) -> DegreeProfile {
    let n = g.order();
    let degrees = g.degrees();
    let mut buckets = vec![0usize; n + 1];
    for &d in &degrees {
        buckets[d] += 1;
    }
    // Start offsets for a non-increasing layout.
    let mut start = vec![0usize; n + 1];
    let mut acc = 0;
    for d in (0..=n).rev() {
        start[d] = acc;
        acc += buckets[d];
    }
    let mut order = vec![0usize; n];
    for (v, &d) in degrees.iter().enumerate() {
        order[start[d]] = v;
        start[d] += 1;
    }
    let sorted: Vec<usize> = order.iter().map(|&v| degrees[v]).collect();
    let split_index = split_index(&sorted);
    DegreeProfile {
        degrees: sorted,
        split_index,
        order,
    }
}

pub fn classify(g: &Graph) -> ClassLabel {
    profile(g).classify()
}

/// Position of a graph in the split hierarchy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SplitKind {
    NotSplit,
    Balanced,
    /// Unbalanced, NG-1 but not NG-2.
    Ng1,
    /// Unbalanced, NG-2 but not NG-1.
    Ng2,
    /// Unbalanced with `|A| = 1`: both NG-1 and NG-2.
    Ng1Ng2,
}

impl SplitKind {
    pub fn is_split(self) -> bool {
        self != SplitKind::NotSplit
    }

    pub fn is_unbalanced(self) -> bool {
        matches!(self, SplitKind::Ng1 | SplitKind::Ng2 | SplitKind::Ng1Ng2)
    }

    pub fn is_ng1(self) -> bool {
        matches!(self, SplitKind::Ng1 | SplitKind::Ng1Ng2)
    }

    pub fn is_ng2(self) -> bool {
        matches!(self, SplitKind::Ng2 | SplitKind::Ng1Ng2)
    }
}

impl fmt::Display for SplitKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SplitKind::NotSplit => "not split",
            SplitKind::Balanced => "balanced split",
            SplitKind::Ng1 => "unbalanced NG-1 (not NG-2)",
            SplitKind::Ng2 => "unbalanced NG-2 (not NG-1)",
            SplitKind::Ng1Ng2 => "unbalanced NG-1 and NG-2",
        })
    }
}

/// Class membership flags. Built only through [`ClassLabel::new`], which keeps
/// the flags mutually consistent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ClassLabel {
    pub split: bool,
    pub balanced: bool,
    pub unbalanced: bool,
    pub ng1: bool,
    pub ng2: bool,
    pub ng3: bool,
    pub ng: bool,
    pub pseudo_split: bool,
}

impl ClassLabel {
    pub fn new(kind: SplitKind, ng3: bool) -> Self {
        debug_assert!(!(ng3 && kind.is_split()));
        let split = kind.is_split();
        let unbalanced = kind.is_unbalanced();
        ClassLabel {
            split,
            balanced: kind == SplitKind::Balanced,
            unbalanced,
            ng1: kind.is_ng1(),
            ng2: kind.is_ng2(),
            ng3,
            ng: unbalanced || ng3,
            pseudo_split: split || ng3,
        }
    }

    pub fn split_kind(&self) -> SplitKind {
        match (self.split, self.balanced, self.ng1, self.ng2) {
            (false, ..) => SplitKind::NotSplit,
            (true, true, ..) => SplitKind::Balanced,
            (true, false, true, true) => SplitKind::Ng1Ng2,
            (true, false, true, false) => SplitKind::Ng1,
            _ => SplitKind::Ng2,
        }
    }

    /// Names of the set flags in fixed order.
    pub fn names(&self) -> Vec<&'static str> {
        [
            (self.split, "split"),
            (self.balanced, "balanced"),
            (self.unbalanced, "unbalanced"),
            (self.ng1, "ng1"),
            (self.ng2, "ng2"),
            (self.ng3, "ng3"),
            (self.ng, "ng"),
            (self.pseudo_split, "pseudo_split"),
        ]
        .into_iter()
        .filter_map(|(on, name)| on.then_some(name))
        .collect()
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.names().join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prof(d: &[usize]) -> DegreeProfile {
        DegreeProfile::from_degrees(d.to_vec())
    }

    #[test]
    fn split_index_examples() {
        assert_eq!(prof(&[8, 7, 6, 5, 5, 5, 2, 2, 1, 1]).split_index, 6);
        assert_eq!(prof(&[8, 7, 6, 3, 3, 3, 2, 2, 1, 1]).split_index, 4);
        assert_eq!(prof(&[0]).split_index, 1);
        assert_eq!(prof(&[2, 2, 2, 2, 2]).split_index, 3);
        assert_eq!(prof(&[]).split_index, 0);
    }

    #[test]
    fn hammer_simeone_equality() {
        // 8+7+6+5+5+5 = 36 = 6*5 + (2+2+1+1)
        assert!(prof(&[8, 7, 6, 5, 5, 5, 2, 2, 1, 1]).is_split());
        // C5: 6 vs 6 + 4
        assert!(!prof(&[2, 2, 2, 2, 2]).is_split());
        // 2K2: 2 vs 2 + 2
        assert!(!prof(&[1, 1, 1, 1]).is_split());
        assert!(prof(&[]).is_split());
    }

    #[test]
    fn split_kinds() {
        assert_eq!(
            prof(&[8, 7, 6, 5, 5, 5, 2, 2, 1, 1]).split_kind(),
            SplitKind::Ng1
        );
        assert_eq!(
            prof(&[8, 7, 6, 3, 3, 3, 2, 2, 1, 1]).split_kind(),
            SplitKind::Ng2
        );
        assert_eq!(prof(&[2, 2, 1, 1]).split_kind(), SplitKind::Balanced);
        assert_eq!(prof(&[0]).split_kind(), SplitKind::Ng1Ng2);
        assert_eq!(prof(&[2, 2, 2, 2, 2]).split_kind(), SplitKind::NotSplit);
        assert_eq!(prof(&[]).split_kind(), SplitKind::Balanced);
    }

    #[test]
    fn ng3_degree_test() {
        // 10+9+8+5*5 = 52 = 8*7 - 10 + (2+2+1+1)
        assert!(prof(&[10, 9, 8, 5, 5, 5, 5, 5, 2, 2, 1, 1]).is_ng3());
        assert!(prof(&[2, 2, 2, 2, 2]).is_ng3());
        // condition (i) holds (3+3+2+1+1 = 10 = 20 - 10 + 0) but (ii) fails
        let ex = prof(&[3, 3, 2, 1, 1, 0]);
        assert_eq!(ex.split_index, 3);
        assert_eq!(ex.sum(1, 5), 5 * 4 - 10 + ex.sum(6, 6));
        assert!(!ex.is_ng3());
        assert!(!prof(&[1, 1, 1, 1]).is_ng3());
        assert!(!prof(&[]).is_ng3());
    }

    #[test]
    fn profile_is_a_stable_sort() {
        // star K1,3 plus isolated vertex: degrees [1, 3, 1, 1, 0]
        let g = Graph::build(5, &[(1, 0), (1, 2), (1, 3)]).unwrap();
        let p = profile(&g);
        assert_eq!(p.degrees, vec![3, 1, 1, 1, 0]);
        assert_eq!(p.order, vec![1, 0, 2, 3, 4]);
        assert_eq!(profile(&Graph::empty(0).unwrap()).split_index, 0);
    }

    #[test]
    fn labels() {
        let k1 = classify(&Graph::complete(1).unwrap());
        assert_eq!(k1.to_string(), "split,unbalanced,ng1,ng2,ng,pseudo_split");
        let c5 = classify(&Graph::cycle(5).unwrap());
        assert_eq!(c5.to_string(), "ng3,ng,pseudo_split");
        let empty = classify(&Graph::empty(0).unwrap());
        assert_eq!(empty.to_string(), "split,balanced,pseudo_split");
        for kind in [
            SplitKind::NotSplit,
            SplitKind::Balanced,
            SplitKind::Ng1,
            SplitKind::Ng2,
            SplitKind::Ng1Ng2,
        ] {
            assert_eq!(ClassLabel::new(kind, false).split_kind(), kind);
        }
    }
}
