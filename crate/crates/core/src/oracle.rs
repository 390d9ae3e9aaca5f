//! Definition-level brute force used to cross-check the degree recognisers.
//!
//! Nothing here looks at degree sequences: chromatic numbers come from an
//! exact colouring search, split-ness from exhaustive bipartition search, and
//! forbidden subgraphs from scanning all 4- and 5-vertex subsets.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::partition::{KsKind, KsPartition};

pub const CHROMATIC_LIMIT: usize = 16;
pub const CLIQUE_LIMIT: usize = 20;
pub const SPLIT_LIMIT: usize = 16;

fn bound(op: &'static str, limit: usize, g: &Graph) -> Result<()> {
    if g.order() > limit {
        Err(Error::SizeBound {
            op,
            limit,
            n: g.order(),
        })
    } else {
        Ok(())
    }
}

/// Exact chromatic number with an unlimited step budget.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    chromatic_number_with_budget(g, u64::MAX)
}

/// Exact chromatic number. Vertices are coloured in non-increasing degree
/// order; `k` starts at the clique number and grows until a colouring exists.
/// Each search node costs one step of `budget`.
pub fn chromatic_number_with_budget(g: &Graph, budget: u64) -> Result<usize> {
    bound("chromatic number", CHROMATIC_LIMIT, g)?;
    let n = g.order();
    if n == 0 {
        return Ok(0);
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut steps = 0u64;
    let mut k = clique_number(g)?;
    loop {
        let mut colors = vec![usize::MAX; n];
        if colorable(g, &order, 0, k, 0, &mut colors, &mut steps, budget)? {
            return Ok(k);
        }
        k += 1;
    }
}

#[allow(clippy::too_many_arguments)]
fn colorable(
    g: &Graph,
    order: &[usize],
    idx: usize,
    k: usize,
    used: usize,
    colors: &mut [usize],
    steps: &mut u64,
    budget: u64,
) -> Result<bool> {
    if idx == order.len() {
        return Ok(true);
    }
    *steps += 1;
    if *steps > budget {
        return Err(Error::BudgetExhausted(budget));
    }
    let v = order[idx];
    // a fresh colour is only tried once (colour symmetry)
    for c in 0..k.min(used + 1) {
        if g.neighbors(v).iter().any(|u| colors[u] == c) {
            continue;
        }
        colors[v] = c;
        if colorable(g, order, idx + 1, k, used.max(c + 1), colors, steps, budget)? {
            return Ok(true);
        }
        colors[v] = usize::MAX;
    }
    Ok(false)
}

/// Size of a largest clique (branch and bound on bit sets).
pub fn clique_number(g: &Graph) -> Result<usize> {
    bound("clique number", CLIQUE_LIMIT, g)?;
    let mut best = 0;
    expand(g, 0, g.vertices(), &mut best);
    Ok(best)
}

fn expand(g: &Graph, size: usize, mut cand: VertexSet, best: &mut usize) {
    if cand.is_empty() {
        *best = (*best).max(size);
        return;
    }
    while let Some(v) = cand.first() {
        if size + cand.len() <= *best {
            return;
        }
        expand(g, size + 1, cand.intersection(g.neighbors(v)), best);
        cand.remove(v);
    }
}

pub fn independence_number(g: &Graph) -> Result<usize> {
    clique_number(&g.complement())
}

/// Exhaustive search for a clique/stable-set bipartition.
pub fn is_split_definitional(g: &Graph) -> Result<bool> {
    bound("split search", SPLIT_LIMIT, g)?;
    Ok(ks_bipartitions(g).next().is_some())
}

/// All `(K, S)` with `K` a clique and `S = V - K` stable, K ascending as a bit
/// mask.
fn ks_bipartitions(g: &Graph) -> impl Iterator<Item = (VertexSet, VertexSet)> + '_ {
    let all = g.vertices();
    (0..=all.0).filter_map(move |mask| {
        let k = VertexSet(mask);
        let s = all.difference(k);
        (g.is_clique(k) && g.is_stable(s)).then_some((k, s))
    })
}

/// Every labelled KS-partition, found by trying all `2^n` subsets, tagged
/// using exact `omega` and `alpha`.
pub fn ks_partitions_exhaustive(g: &Graph) -> Result<Vec<KsPartition>> {
    bound("split search", SPLIT_LIMIT, g)?;
    let omega = clique_number(g)?;
    let alpha = independence_number(g)?;
    Ok(ks_bipartitions(g)
        .map(|(k, s)| {
            let kind = match (k.len() == omega, s.len() == alpha) {
                (true, true) => KsKind::Both,
                (true, false) => KsKind::KMax,
                (false, true) => KsKind::SMax,
                (false, false) => unreachable!("a KS-partition is K-max or S-max"),
            };
            KsPartition { k, s, kind }
        })
        .collect())
}

/// An induced obstruction and the vertices carrying it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "vertices", rename_all = "snake_case")]
pub enum Forbidden {
    TwoK2([usize; 4]),
    C4([usize; 4]),
    C5([usize; 5]),
}

/// First induced 2K2 or C4 (scanning 4-subsets in lexicographic order), else
/// the first induced C5. `None` means split.
pub fn forbidden_subgraph_check(g: &Graph) -> Result<Option<Forbidden>> {
    bound("forbidden subgraph scan", SPLIT_LIMIT, g)?;
    let n = g.order();
    let induced_edges = |vs: &[usize]| -> Vec<usize> {
        let set: VertexSet = vs.iter().copied().collect();
        vs.iter()
            .map(|&v| g.neighbors(v).intersection(set).len())
            .collect()
    };
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let vs = [a, b, c, d];
                    let degs = induced_edges(&vs);
                    if degs.iter().all(|&x| x == 1) {
                        return Ok(Some(Forbidden::TwoK2(vs)));
                    }
                    if degs.iter().all(|&x| x == 2) {
                        return Ok(Some(Forbidden::C4(vs)));
                    }
                }
            }
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    for e in d + 1..n {
                        let vs = [a, b, c, d, e];
                        if induced_edges(&vs).iter().all(|&x| x == 2) {
                            return Ok(Some(Forbidden::C5(vs)));
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Everything the oracle knows about a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub chi: usize,
    pub chi_complement: usize,
    pub omega: usize,
    pub alpha: usize,
    pub is_ng: bool,
    pub is_split_partition: bool,
    pub is_split_forbidden: bool,
    pub is_pseudo_split_forbidden: bool,
}

pub fn report(g: &Graph) -> Result<OracleReport> {
    let chi = chromatic_number(g)?;
    let chi_complement = chromatic_number(&g.complement())?;
    let forbidden = forbidden_subgraph_check(g)?;
    Ok(OracleReport {
        chi,
        chi_complement,
        omega: clique_number(g)?,
        alpha: independence_number(g)?,
        is_ng: chi + chi_complement == g.order() + 1,
        is_split_partition: is_split_definitional(g)?,
        is_split_forbidden: forbidden.is_none(),
        is_pseudo_split_forbidden: matches!(forbidden, None | Some(Forbidden::C5(_))),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn chromatic_numbers() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(chromatic_number(&c5).unwrap(), 3);
        assert_eq!(chromatic_number(&c5.complement()).unwrap(), 3);
        for n in 1..=6 {
            let k = Graph::complete(n).unwrap();
            assert_eq!(chromatic_number(&k).unwrap(), n);
            assert_eq!(
                chromatic_number(&k).unwrap() + chromatic_number(&k.complement()).unwrap(),
                n + 1
            );
        }
        assert_eq!(chromatic_number(&fixtures::ng1_ten_vertex()).unwrap(), 6);
        assert_eq!(chromatic_number(&Graph::empty(0).unwrap()).unwrap(), 0);
        // C7 needs 3 colours, its complement needs 4.
        let c7 = Graph::cycle(7).unwrap();
        assert_eq!(chromatic_number(&c7).unwrap(), 3);
        assert_eq!(chromatic_number(&c7.complement()).unwrap(), 4);
    }

    #[test]
    fn budget_and_size_limits() {
        let c7 = Graph::cycle(7).unwrap();
        assert!(matches!(
            chromatic_number_with_budget(&c7, 3),
            Err(Error::BudgetExhausted(3))
        ));
        let big = Graph::empty(17).unwrap();
        assert!(matches!(
            chromatic_number(&big),
            Err(Error::SizeBound { limit: 16, .. })
        ));
        assert!(clique_number(&Graph::empty(21).unwrap()).is_err());
        assert!(forbidden_subgraph_check(&big).is_err());
    }

    #[test]
    fn clique_and_independence() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(
            (
                clique_number(&c5).unwrap(),
                independence_number(&c5).unwrap()
            ),
            (2, 2)
        );
        let g1 = fixtures::ng1_ten_vertex();
        assert_eq!(
            (
                clique_number(&g1).unwrap(),
                independence_number(&g1).unwrap()
            ),
            (6, 5)
        );
        let two_k2 = Graph::build(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            (
                clique_number(&two_k2).unwrap(),
                independence_number(&two_k2).unwrap()
            ),
            (2, 2)
        );
    }

    #[test]
    fn forbidden_subgraphs() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(matches!(
            forbidden_subgraph_check(&c5).unwrap(),
            Some(Forbidden::C5(_))
        ));
        assert!(!is_split_definitional(&c5).unwrap());
        let r = report(&c5).unwrap();
        assert!(r.is_ng && !r.is_split_forbidden && r.is_pseudo_split_forbidden);

        let p4 = Graph::path(4).unwrap();
        assert_eq!(forbidden_subgraph_check(&p4).unwrap(), None);
        assert!(is_split_definitional(&p4).unwrap());

        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(
            forbidden_subgraph_check(&c4).unwrap(),
            Some(Forbidden::C4([0, 1, 2, 3]))
        );
        let r = report(&c4).unwrap();
        assert!(!r.is_split_partition && !r.is_pseudo_split_forbidden);

        let two_k2 = Graph::build(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            forbidden_subgraph_check(&two_k2).unwrap(),
            Some(Forbidden::TwoK2([0, 1, 2, 3]))
        );
    }

    #[test]
    fn exhaustive_ks_search() {
        let parts = ks_partitions_exhaustive(&Graph::path(4).unwrap()).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].kind, KsKind::Both);
        let parts = ks_partitions_exhaustive(&fixtures::ng1_ten_vertex()).unwrap();
        assert_eq!(parts.len(), 4);
        assert_eq!(parts.iter().filter(|p| p.kind == KsKind::KMax).count(), 1);
    }
}
