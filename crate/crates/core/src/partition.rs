//! ABC-partitions, KS-partitions and the auxiliary sets `C'` and `B'`.

use std::fmt;

use serde::Serialize;

use crate::degree::{profile, DegreeProfile, SplitKind};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Which NG form an ABC-partition exhibits, if any.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NgKind {
    /// `G[A]` is a clique with `|A| >= 2`.
    Ng1,
    /// `G[A]` is a stable set with `|A| >= 2`.
    Ng2,
    /// `|A| = 1`, so `G[A]` is both.
    Ng1Ng2,
    /// `G[A]` is a 5-cycle.
    Ng3,
}

impl fmt::Display for NgKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NgKind::Ng1 => "NG1",
            NgKind::Ng2 => "NG2",
            NgKind::Ng1Ng2 => "NG1∩NG2",
            NgKind::Ng3 => "NG3",
        })
    }
}

/// Vertices split by degree against `chi - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbcPartition {
    pub a: VertexSet,
    pub b: VertexSet,
    pub c: VertexSet,
    pub chi: usize,
    /// `None` unless all NG structure conditions hold.
    pub ng_kind: Option<NgKind>,
}

/// ABC-partition of `g` for the given chromatic number. The caller supplies
/// `chi`: `m` for split and NG-3 graphs, or an exact oracle value otherwise.
pub fn abc_partition(g: &Graph, chi: usize) -> Result<AbcPartition> {
    let n = g.order();
    if chi == 0 || chi > n {
        return Err(Error::ChiOutOfRange { chi, n });
    }
    let mut p = AbcPartition {
        a: VertexSet::EMPTY,
        b: VertexSet::EMPTY,
        c: VertexSet::EMPTY,
        chi,
        ng_kind: None,
    };
    for v in 0..n {
        let d = g.degree(v);
        match d.cmp(&(chi - 1)) {
            std::cmp::Ordering::Equal => p.a.insert(v),
            std::cmp::Ordering::Greater => p.b.insert(v),
            std::cmp::Ordering::Less => p.c.insert(v),
        }
    }
    p.ng_kind = verify_ng_structure(g, &p);
    Ok(p)
}

/// ABC-partition using `chi = m`, valid for split and NG-3 graphs. Fails with
/// a domain error for any other graph (their chromatic number is not
/// available from the degree sequence).
pub fn recognized_abc_partition(g: &Graph) -> Result<AbcPartition> {
    let p = profile(g);
    let kind = p.split_kind();
    let ng3 = p.is_ng3();
    if !(kind.is_split() || ng3) || g.order() == 0 {
        return Err(Error::domain(
            "abc partition",
            "a non-empty split or NG-3 graph",
            kind,
            ng3,
        ));
    }
    abc_partition(g, p.split_index)
}

/// Check the five NG conditions on a partition: `A` non-empty and a clique,
/// stable set or 5-cycle; `B` a clique; `C` stable; `A`-`B` complete; no
/// `A`-`C` edges.
pub fn verify_ng_structure(g: &Graph, p: &AbcPartition) -> Option<NgKind> {
    let (a, b, c) = (p.a, p.b, p.c);
    if a.is_empty()
        || !g.is_clique(b)
        || !g.is_stable(c)
        || !g.is_complete_between(a, b)
        || !g.is_anticomplete_between(a, c)
    {
        return None;
    }
    if a.len() == 1 {
        Some(NgKind::Ng1Ng2)
    } else if g.is_clique(a) {
        Some(NgKind::Ng1)
    } else if g.is_stable(a) {
        Some(NgKind::Ng2)
    } else if is_five_cycle(g, a) {
        Some(NgKind::Ng3)
    } else {
        None
    }
}

fn is_five_cycle(g: &Graph, a: VertexSet) -> bool {
    if a.len() != 5 || a.iter().any(|v| g.neighbors(v).intersection(a).len() != 2) {
        return false;
    }
    // 2-regular on five vertices: a triangle plus an edge is impossible, so
    // this is C5.
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum KsKind {
    /// `|K| = omega`, `|S| = alpha - 1`.
    KMax,
    /// `|S| = alpha`, `|K| = omega - 1`.
    SMax,
    /// `|K| = omega` and `|S| = alpha` (balanced graph).
    Both,
}

impl KsKind {
    pub fn is_k_max(self) -> bool {
        matches!(self, KsKind::KMax | KsKind::Both)
    }

    pub fn is_s_max(self) -> bool {
        matches!(self, KsKind::SMax | KsKind::Both)
    }
}

impl fmt::Display for KsKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            KsKind::KMax => "K-max",
            KsKind::SMax => "S-max",
            KsKind::Both => "both",
        })
    }
}

/// A clique / stable-set bipartition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KsPartition {
    pub k: VertexSet,
    pub s: VertexSet,
    pub kind: KsKind,
}

impl KsPartition {
    /// `K` is a clique, `S` is stable, and together they partition `V(g)`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.k.is_disjoint(self.s)
            && self.k.union(self.s) == g.vertices()
            && g.is_clique(self.k)
            && g.is_stable(self.s)
    }
}

fn require_split(op: &'static str, p: &DegreeProfile) -> Result<SplitKind> {
    let kind = p.split_kind();
    if !kind.is_split() {
        return Err(Error::domain(op, "a split graph", kind, p.is_ng3()));
    }
    Ok(kind)
}

/// `K` = the first `m` vertices in sorted degree order, `S` = the rest.
pub fn kmax_partition(g: &Graph, p: &DegreeProfile) -> Result<KsPartition> {
    let kind = require_split("kmax partition", p)?;
    let m = p.split_index;
    let k: VertexSet = p.order[..m].iter().copied().collect();
    let s = g.vertices().difference(k);
    let kind = if kind == SplitKind::Balanced {
        KsKind::Both
    } else {
        KsKind::KMax
    };
    Ok(KsPartition { k, s, kind })
}

/// `(omega, alpha)` of a split graph, read off its K-max partition: `alpha`
/// exceeds `|S|` exactly when some `K` vertex has no neighbour in `S`.
pub fn split_clique_and_independence(g: &Graph) -> Result<(usize, usize)> {
    let p = profile(g);
    let part = kmax_partition(g, &p)?;
    let extendable = part.k.iter().any(|v| g.neighbors(v).is_disjoint(part.s));
    Ok((part.k.len(), part.s.len() + usize::from(extendable)))
}

/// Every labelled KS-partition of a split graph.
///
/// Balanced graphs have exactly one. For unbalanced graphs the movable
/// vertices are exactly `A`: NG-1 graphs give the K-max `K = A ∪ B` followed
/// by one S-max partition per `a ∈ A`; NG-2 graphs give one K-max partition
/// per `a ∈ A` followed by the S-max `K = B`. Moved vertices ascend.
pub fn all_ks_partitions(g: &Graph) -> Result<Vec<KsPartition>> {
    let p = profile(g);
    let kind = require_split("all ks partitions", &p)?;
    if kind == SplitKind::Balanced {
        return Ok(vec![kmax_partition(g, &p)?]);
    }
    let abc = abc_partition(g, p.split_index)?;
    let (a, b, c) = (abc.a, abc.b, abc.c);
    let mut out = Vec::with_capacity(a.len() + 1);
    if kind.is_ng1() {
        out.push(KsPartition {
            k: a.union(b),
            s: c,
            kind: KsKind::KMax,
        });
        for v in a {
            out.push(KsPartition {
                k: a.union(b).without(v),
                s: c.with(v),
                kind: KsKind::SMax,
            });
        }
    } else {
        for v in a {
            out.push(KsPartition {
                k: b.with(v),
                s: a.union(c).without(v),
                kind: KsKind::KMax,
            });
        }
        out.push(KsPartition {
            k: b,
            s: a.union(c),
            kind: KsKind::SMax,
        });
    }
    Ok(out)
}

/// First S-max partition in [`all_ks_partitions`] order.
pub fn smax_partition(g: &Graph) -> Result<KsPartition> {
    let parts = all_ks_partitions(g)?;
    Ok(parts
        .into_iter()
        .find(|p| p.kind.is_s_max())
        .expect("every split graph has an S-max partition"))
}

/// `C'`: vertices of `C` adjacent to all of `B`. `B'`: vertices of `B` with
/// no neighbour in `C`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DerivedSets {
    pub c_prime: VertexSet,
    pub b_prime: VertexSet,
}

pub fn derived_sets(g: &Graph, p: &AbcPartition) -> DerivedSets {
    let c_prime =
        p.c.iter()
            .filter(|&v| p.b.is_subset(g.neighbors(v)))
            .collect();
    let b_prime =
        p.b.iter()
            .filter(|&v| g.neighbors(v).is_disjoint(p.c))
            .collect();
    DerivedSets { c_prime, b_prime }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn abc_of_worked_examples() {
        let g1 = fixtures::ng1_ten_vertex();
        let p = abc_partition(&g1, 6).unwrap();
        assert_eq!(p.a, set(&[3, 4, 5]));
        assert_eq!(p.b, set(&[0, 1, 2]));
        assert_eq!(p.c, set(&[6, 7, 8, 9]));
        assert_eq!(p.ng_kind, Some(NgKind::Ng1));

        let g2 = fixtures::ng2_ten_vertex();
        let p2 = recognized_abc_partition(&g2).unwrap();
        assert_eq!(
            (p2.a, p2.b, p2.c),
            (set(&[3, 4, 5]), set(&[0, 1, 2]), set(&[6, 7, 8, 9]))
        );
        assert_eq!(p2.ng_kind, Some(NgKind::Ng2));

        let g3 = fixtures::ng3_twelve_vertex();
        assert_eq!(
            recognized_abc_partition(&g3).unwrap().ng_kind,
            Some(NgKind::Ng3)
        );
    }

    #[test]
    fn abc_of_small_graphs() {
        let c5 = Graph::cycle(5).unwrap();
        let p = abc_partition(&c5, 3).unwrap();
        assert_eq!(
            (p.a, p.b, p.c),
            (c5.vertices(), VertexSet::EMPTY, VertexSet::EMPTY)
        );
        assert_eq!(p.ng_kind, Some(NgKind::Ng3));

        let p3 = Graph::path(3).unwrap();
        let p = abc_partition(&p3, 2).unwrap();
        assert_eq!((p.a, p.b, p.c), (set(&[0, 2]), set(&[1]), VertexSet::EMPTY));
        assert_eq!(p.ng_kind, Some(NgKind::Ng2));

        // P4: leaves in A, centres in B, but a leaf misses the far centre.
        let p4 = Graph::path(4).unwrap();
        let p = abc_partition(&p4, 2).unwrap();
        assert_eq!((p.a, p.b), (set(&[0, 3]), set(&[1, 2])));
        assert_eq!(p.ng_kind, None);

        assert!(matches!(
            abc_partition(&p4, 0),
            Err(Error::ChiOutOfRange { .. })
        ));
        assert!(matches!(
            abc_partition(&p4, 5),
            Err(Error::ChiOutOfRange { .. })
        ));
        assert!(recognized_abc_partition(&Graph::cycle(4).unwrap()).is_err());
    }

    #[test]
    fn kmax_partitions() {
        let g1 = fixtures::ng1_ten_vertex();
        let part = kmax_partition(&g1, &profile(&g1)).unwrap();
        assert_eq!(
            (part.k, part.s, part.kind),
            (set(&[0, 1, 2, 3, 4, 5]), set(&[6, 7, 8, 9]), KsKind::KMax)
        );

        let k1 = Graph::complete(1).unwrap();
        let part = kmax_partition(&k1, &profile(&k1)).unwrap();
        assert_eq!((part.k, part.s), (set(&[0]), VertexSet::EMPTY));

        let p4 = Graph::path(4).unwrap();
        let part = kmax_partition(&p4, &profile(&p4)).unwrap();
        assert_eq!(
            (part.k, part.s, part.kind),
            (set(&[1, 2]), set(&[0, 3]), KsKind::Both)
        );

        let c4 = Graph::cycle(4).unwrap();
        assert!(kmax_partition(&c4, &profile(&c4)).is_err());
    }

    #[test]
    fn all_partitions_counts() {
        let g1 = fixtures::ng1_ten_vertex();
        let parts = all_ks_partitions(&g1).unwrap();
        assert_eq!(parts.len(), 4);
        assert_eq!(parts[0].kind, KsKind::KMax);
        assert_eq!(parts.iter().filter(|p| p.kind == KsKind::SMax).count(), 3);
        assert_eq!(parts[1].s, set(&[3, 6, 7, 8, 9]));
        assert!(parts.iter().all(|p| p.is_valid_for(&g1)));

        assert_eq!(
            all_ks_partitions(&Graph::path(4).unwrap()).unwrap().len(),
            1
        );

        let k2 = Graph::complete(2).unwrap();
        let parts = all_ks_partitions(&k2).unwrap();
        assert_eq!(
            parts.len(),
            3,
            "|A| + 1 labelled partitions with A = both vertices"
        );
        assert_eq!(
            parts[0],
            KsPartition {
                k: set(&[0, 1]),
                s: VertexSet::EMPTY,
                kind: KsKind::KMax
            }
        );

        let g2 = fixtures::ng2_ten_vertex();
        let parts = all_ks_partitions(&g2).unwrap();
        assert_eq!(parts.len(), 4);
        assert_eq!(parts.last().unwrap().kind, KsKind::SMax);
        assert_eq!(parts.last().unwrap().k, set(&[0, 1, 2]));
    }

    #[test]
    fn clique_and_independence_of_g1() {
        assert_eq!(
            split_clique_and_independence(&fixtures::ng1_ten_vertex()).unwrap(),
            (6, 5)
        );
        assert_eq!(
            split_clique_and_independence(&Graph::path(4).unwrap()).unwrap(),
            (2, 2)
        );
    }

    #[test]
    fn derived_sets_examples() {
        let g1 = fixtures::ng1_ten_vertex();
        let d = derived_sets(&g1, &abc_partition(&g1, 6).unwrap());
        assert_eq!((d.c_prime, d.b_prime), (VertexSet::EMPTY, VertexSet::EMPTY));

        let c5 = Graph::cycle(5).unwrap();
        let d = derived_sets(&c5, &abc_partition(&c5, 3).unwrap());
        assert_eq!((d.c_prime, d.b_prime), (VertexSet::EMPTY, VertexSet::EMPTY));

        let (_, h) = fixtures::ng3_collision_pair();
        let p = recognized_abc_partition(&h).unwrap();
        assert_eq!(p.chi, 5);
        assert_eq!(derived_sets(&h, &p).b_prime, VertexSet::EMPTY);
    }
}
