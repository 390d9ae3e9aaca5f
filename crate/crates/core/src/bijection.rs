//! Constructive maps between NG classes and split-graph classes.
//!
//! | forward            | inverse          | between                                   |
//! |--------------------|------------------|-------------------------------------------|
//! | [`ng1_remove`]     | [`split_to_ng1`] | NG-1 on n, split on n-1                   |
//! | [`ng1_to_ng2`]     | [`ng2_to_ng1`]   | NG-1 on n, NG-2 on n                      |
//! | [`ng3_shrink`]     | [`ng3_grow`]     | NG-3 on n, NG-1 minus NG-2 on n-3         |
//! | [`strip_a`]        | [`rebuild_a`]    | NG-1 minus NG-2 on n, split on <= n-2     |
//! | [`strip_ab`]       | [`rebuild_d`]    | NG-3 on n, split on <= n-5                |
//! | [`phi`]            | [`psi`]          | KS-triples on n-1, K-max unbalanced on n  |
//!
//! All maps act on labelled graphs and are bijections on isomorphism classes.
//! Wherever a vertex or edge has to be picked, the lowest id (or the
//! lexicographically least pair) is used.

use crate::canon::{canonical_colored, CanonicalCode};
use crate::degree::{profile, SplitKind};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::partition::{
    abc_partition, derived_sets, kmax_partition, smax_partition, split_clique_and_independence,
    AbcPartition, KsKind, KsPartition,
};

struct Recognized {
    kind: SplitKind,
    ng3: bool,
    abc: Option<AbcPartition>,
}

fn recognize(g: &Graph) -> Recognized {
    let p = profile(g);
    let kind = p.split_kind();
    let ng3 = p.is_ng3();
    let abc = ((kind.is_split() || ng3) && g.order() > 0)
        .then(|| abc_partition(g, p.split_index).expect("1 <= m <= n"));
    Recognized { kind, ng3, abc }
}

fn domain_err(op: &'static str, expected: &'static str, r: &Recognized) -> Error {
    Error::domain(op, expected, r.kind, r.ng3)
}

/// Drop the lowest-id vertex of `A` from an NG-1 graph.
pub fn ng1_remove(g: &Graph) -> Result<Graph> {
    let r = recognize(g);
    if !r.kind.is_ng1() {
        return Err(domain_err("ng1-remove", "an NG-1 graph", &r));
    }
    let abc = r.abc.expect("NG-1 graphs are split");
    g.remove_vertex(abc.a.first().expect("A is non-empty"))
}

/// The four sub-cases of an NG-1 graph that `ng1_remove` sends to the four
/// kinds of split graph one vertex smaller.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ng1Case {
    /// `|A| >= 3`; image is NG-1 only.
    LargeA,
    /// `|A| = 2`, `C'` empty; image is NG-1 and NG-2.
    PairWithoutCPrime,
    /// `|A| = 2`, `C'` non-empty; image is NG-2 only.
    PairWithCPrime,
    /// `|A| = 1`; image is balanced.
    SingleA,
}

impl Ng1Case {
    /// Kind of `ng1_remove(g)` for a `g` in this case.
    pub fn image_kind(self) -> SplitKind {
        match self {
            Ng1Case::LargeA => SplitKind::Ng1,
            Ng1Case::PairWithoutCPrime => SplitKind::Ng1Ng2,
            Ng1Case::PairWithCPrime => SplitKind::Ng2,
            Ng1Case::SingleA => SplitKind::Balanced,
        }
    }
}

pub fn ng1_case(g: &Graph) -> Result<Ng1Case> {
    let r = recognize(g);
    if !r.kind.is_ng1() {
        return Err(domain_err("ng1 case", "an NG-1 graph", &r));
    }
    let abc = r.abc.expect("NG-1 graphs are split");
    Ok(match abc.a.len() {
        1 => Ng1Case::SingleA,
        2 if derived_sets(g, &abc).c_prime.is_empty() => Ng1Case::PairWithoutCPrime,
        2 => Ng1Case::PairWithCPrime,
        _ => Ng1Case::LargeA,
    })
}

/// Inverse of [`ng1_remove`]: add one vertex to a split graph so that the
/// result is NG-1.
pub fn split_to_ng1(h: &Graph) -> Result<Graph> {
    let r = recognize(h);
    let nbrs = match r.kind {
        SplitKind::NotSplit => return Err(domain_err("split-to-ng1", "a split graph", &r)),
        SplitKind::Ng1 => {
            let abc = r.abc.unwrap();
            abc.a.union(abc.b)
        }
        SplitKind::Ng2 | SplitKind::Ng1Ng2 => {
            let abc = r.abc.unwrap();
            abc.b.with(abc.a.first().unwrap())
        }
        SplitKind::Balanced => kmax_partition(h, &profile(h))?.k,
    };
    h.add_vertex(nbrs)
}

pub fn ng1_to_ng2(g: &Graph) -> Result<Graph> {
    let r = recognize(g);
    if !r.kind.is_ng1() {
        return Err(domain_err("ng1-to-ng2", "an NG-1 graph", &r));
    }
    Ok(g.complement())
}

pub fn ng2_to_ng1(g: &Graph) -> Result<Graph> {
    let r = recognize(g);
    if !r.kind.is_ng2() {
        return Err(domain_err("ng2-to-ng1", "an NG-2 graph", &r));
    }
    Ok(g.complement())
}

fn require_ng3(op: &'static str, g: &Graph) -> Result<AbcPartition> {
    let r = recognize(g);
    if !r.ng3 {
        return Err(domain_err(op, "an NG-3 graph", &r));
    }
    Ok(r.abc.expect("NG-3 graphs have chi = m"))
}

/// Keep one edge `{a1, a2}` of the 5-cycle on `A` together with `B ∪ C`.
/// Uses the lexicographically least edge of `G[A]`.
pub fn ng3_shrink(g: &Graph) -> Result<Graph> {
    let abc = require_ng3("ng3-shrink", g)?;
    let a1 = abc.a.first().unwrap();
    let a2 = g.neighbors(a1).intersection(abc.a).first().unwrap();
    shrink_keeping(g, &abc, a1, a2)
}

/// [`ng3_shrink`] keeping an explicitly chosen edge of `G[A]`.
pub fn ng3_shrink_with_edge(g: &Graph, a1: usize, a2: usize) -> Result<Graph> {
    let abc = require_ng3("ng3-shrink", g)?;
    if !(abc.a.contains(a1) && abc.a.contains(a2) && g.has_edge(a1, a2)) {
        return Err(Error::Domain {
            op: "ng3-shrink",
            expected: "an edge inside A",
            found: format!("pair ({a1}, {a2})"),
        });
    }
    shrink_keeping(g, &abc, a1, a2)
}

fn shrink_keeping(g: &Graph, abc: &AbcPartition, a1: usize, a2: usize) -> Result<Graph> {
    g.induced(abc.b.union(abc.c).with(a1).with(a2))
}

/// Inverse of [`ng3_shrink`]: close the two lowest vertices `a1 < a2` of `A_H`
/// into a 5-cycle `a1 a2 y1 y2 y3` with three new vertices, each joined to
/// `(A_H - {a1, a2}) ∪ B_H`. `n` must be `|V(H)| + 3`.
pub fn ng3_grow(h: &Graph, n: usize) -> Result<Graph> {
    let r = recognize(h);
    if r.kind != SplitKind::Ng1 {
        return Err(domain_err("ng3-grow", "an NG-1 graph that is not NG-2", &r));
    }
    if n != h.order() + 3 {
        return Err(Error::TargetMismatch {
            op: "ng3-grow",
            target: n,
            expected: h.order() + 3,
        });
    }
    let abc = r.abc.unwrap();
    let a1 = abc.a.first().unwrap();
    let a2 = abc.a.without(a1).first().unwrap();
    let join = abc.a.without(a1).without(a2).union(abc.b);
    let (y1, y2) = (h.order(), h.order() + 1);
    let g = h.add_vertex(join.with(a2))?;
    let g = g.add_vertex(join.with(y1))?;
    g.add_vertex(join.with(y2).with(a1))
}

/// `G - A` for any NG graph, together with its KS-partition `K = B`, `S = C`
/// (tagged by its actual type).
pub fn delete_a(g: &Graph) -> Result<(Graph, KsPartition)> {
    let r = recognize(g);
    if !(r.kind.is_unbalanced() || r.ng3) {
        return Err(domain_err("delete-a", "an NG graph", &r));
    }
    let abc = r.abc.unwrap();
    let keep = abc.b.union(abc.c);
    let h = g.induced(keep)?;
    let k = restrict(abc.b, keep);
    let s = restrict(abc.c, keep);
    let kind = ks_tag(&h, k, s)?;
    Ok((h, KsPartition { k, s, kind }))
}

/// `G[B ∪ C]` for an NG-1 graph that is not NG-2.
pub fn strip_a(g: &Graph) -> Result<Graph> {
    let r = recognize(g);
    if r.kind != SplitKind::Ng1 {
        return Err(domain_err("strip-a", "an NG-1 graph that is not NG-2", &r));
    }
    let abc = r.abc.unwrap();
    g.induced(abc.b.union(abc.c))
}

fn require_split_target(
    op: &'static str,
    h: &Graph,
    n: usize,
    extra: usize,
) -> Result<KsPartition> {
    let r = recognize(h);
    if !r.kind.is_split() {
        return Err(domain_err(op, "a split graph", &r));
    }
    if n < h.order() + extra {
        return Err(Error::TargetTooSmall {
            op,
            target: n,
            order: h.order(),
            min: h.order() + extra,
        });
    }
    smax_partition(h)
}

/// Inverse of [`strip_a`]: add a clique of `n - |V(H)|` new vertices joined
/// to the `K` side of an S-max partition of `H`.
pub fn rebuild_a(h: &Graph, n: usize) -> Result<Graph> {
    let part = require_split_target("rebuild-a", h, n, 2)?;
    let mut g = h.clone();
    let mut nbrs = part.k;
    for _ in h.order()..n {
        let w = g.order();
        g = g.add_vertex(nbrs)?;
        nbrs.insert(w);
    }
    Ok(g)
}

/// `G[(B - B') ∪ C]` for an NG-3 graph.
pub fn strip_ab(g: &Graph) -> Result<Graph> {
    let abc = require_ng3("strip-ab", g)?;
    let b_prime = derived_sets(g, &abc).b_prime;
    g.induced(abc.b.difference(b_prime).union(abc.c))
}

/// Inverse of [`strip_ab`]: add `n - |V(H)| >= 5` vertices `D` forming a
/// clique minus the 5-cycle on its first five members, joined to the `K` side
/// of an S-max partition of `H` and to nothing in `S`.
pub fn rebuild_d(h: &Graph, n: usize) -> Result<Graph> {
    let part = require_split_target("rebuild-d", h, n, 5)?;
    let base = h.order();
    let mut g = h.clone();
    let mut d = VertexSet::EMPTY;
    for _ in base..n {
        let w = g.order();
        g = g.add_vertex(part.k.union(d))?;
        d.insert(w);
    }
    for i in 0..5 {
        g.clear_edge(base + i, base + (i + 1) % 5);
    }
    Ok(g)
}

/// A graph with a tagged KS-partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KsTriple {
    pub graph: Graph,
    pub partition: KsPartition,
}

impl KsTriple {
    /// Canonical code of the graph with `K` and `S` coloured apart; equal for
    /// exactly the isomorphic triples.
    pub fn code(&self) -> CanonicalCode {
        let colors: Vec<u32> = (0..self.graph.order())
            .map(|v| u32::from(self.partition.s.contains(v)))
            .collect();
        canonical_colored(&self.graph, &colors)
    }

    /// Check that the partition is a KS-partition and its tag is right.
    pub fn validate(&self, op: &'static str) -> Result<()> {
        let p = &self.partition;
        if !p.is_valid_for(&self.graph) {
            return Err(Error::InvalidPartition { op });
        }
        let actual = ks_tag(&self.graph, p.k, p.s)?;
        if actual != p.kind {
            return Err(Error::TagMismatch {
                op,
                claimed: p.kind.to_string(),
                actual: actual.to_string(),
            });
        }
        Ok(())
    }
}

/// Type of the KS-partition `(k, s)` of a split graph.
pub fn ks_tag(g: &Graph, k: VertexSet, s: VertexSet) -> Result<KsKind> {
    let (omega, alpha) = split_clique_and_independence(g)?;
    Ok(match (k.len() == omega, s.len() == alpha) {
        (true, true) => KsKind::Both,
        (true, false) => KsKind::KMax,
        (false, true) => KsKind::SMax,
        (false, false) => return Err(Error::InvalidPartition { op: "ks tag" }),
    })
}

/// Add a vertex adjacent to all of `K` and put it in `K`. Accepts any valid
/// triple; the result is a K-max triple of an unbalanced split graph.
pub fn phi(t: &KsTriple) -> Result<KsTriple> {
    t.validate("phi")?;
    let w = t.graph.order();
    let graph = t.graph.add_vertex(t.partition.k)?;
    let k = t.partition.k.with(w);
    let s = t.partition.s;
    let kind = ks_tag(&graph, k, s)?;
    debug_assert_eq!(kind, KsKind::KMax);
    Ok(KsTriple {
        graph,
        partition: KsPartition { k, s, kind },
    })
}

/// Inverse of [`phi`] on K-max triples of unbalanced split graphs: delete the
/// lowest `w ∈ K` with no neighbour in `S`.
pub fn psi(t: &KsTriple) -> Result<KsTriple> {
    t.validate("psi")?;
    if t.partition.kind != KsKind::KMax {
        return Err(Error::TagMismatch {
            op: "psi",
            claimed: t.partition.kind.to_string(),
            actual: "expected a K-max partition of an unbalanced graph".into(),
        });
    }
    let k = t.partition.k;
    let s = t.partition.s;
    let w = k
        .iter()
        .find(|&v| t.graph.neighbors(v).is_disjoint(s))
        .expect("a K-max partition of an unbalanced graph has a K vertex with no S neighbour");
    let graph = t.graph.remove_vertex(w)?;
    let k = Graph::shift_after_removal(k.without(w), w);
    let s = Graph::shift_after_removal(s, w);
    let kind = ks_tag(&graph, k, s)?;
    Ok(KsTriple {
        graph,
        partition: KsPartition { k, s, kind },
    })
}

/// Relabel `set ⊆ keep` the way `induced(keep)` relabels vertices.
fn restrict(set: VertexSet, keep: VertexSet) -> VertexSet {
    keep.iter()
        .enumerate()
        .filter(|&(_, v)| set.contains(v))
        .map(|(i, _)| i)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::isomorphic;
    use crate::degree::classify;
    use crate::fixtures;

    fn k(n: usize) -> Graph {
        Graph::complete(n).unwrap()
    }

    #[test]
    fn ng1_remove_examples() {
        assert_eq!(ng1_case(&k(2)).unwrap(), Ng1Case::PairWithoutCPrime);
        let img = ng1_remove(&k(2)).unwrap();
        assert_eq!(img, k(1));
        assert_eq!(classify(&img).split_kind(), SplitKind::Ng1Ng2);
        for n in 4..=7 {
            assert_eq!(ng1_case(&k(n)).unwrap(), Ng1Case::LargeA);
            let img = ng1_remove(&k(n)).unwrap();
            assert_eq!(img, k(n - 1));
            assert_eq!(classify(&img).split_kind(), SplitKind::Ng1);
        }
        assert!(ng1_remove(&fixtures::ng2_ten_vertex()).is_err());
    }

    #[test]
    fn split_to_ng1_examples() {
        let p4 = Graph::path(4).unwrap();
        let g = split_to_ng1(&p4).unwrap();
        assert_eq!(g.neighbors(4), [1, 2].into_iter().collect());
        let abc = abc_partition(&g, profile(&g).split_index).unwrap();
        assert_eq!(
            (abc.a, abc.b, abc.c),
            (
                VertexSet::singleton(4),
                [1, 2].into_iter().collect(),
                [0, 3].into_iter().collect()
            )
        );
        assert_eq!(ng1_case(&g).unwrap(), Ng1Case::SingleA);
        assert_eq!(ng1_remove(&g).unwrap(), p4);

        assert_eq!(split_to_ng1(&k(1)).unwrap(), k(2));
        assert_eq!(split_to_ng1(&k(4)).unwrap(), k(5));
        assert_eq!(split_to_ng1(&Graph::empty(0).unwrap()).unwrap(), k(1));
        assert!(split_to_ng1(&Graph::cycle(5).unwrap()).is_err());
    }

    #[test]
    fn complementation() {
        assert_eq!(ng1_to_ng2(&k(3)).unwrap(), Graph::empty(3).unwrap());
        assert_eq!(ng1_to_ng2(&k(1)).unwrap(), k(1));
        let g1 = fixtures::ng1_ten_vertex();
        let co = ng1_to_ng2(&g1).unwrap();
        assert_eq!(profile(&co).degrees, vec![8, 8, 7, 7, 4, 4, 4, 3, 2, 1]);
        assert!(classify(&co).ng2);
        assert_eq!(ng2_to_ng1(&co).unwrap(), g1);
        assert!(ng1_to_ng2(&fixtures::ng2_ten_vertex()).is_err());
    }

    #[test]
    fn ng3_shrink_and_grow() {
        let c5 = Graph::cycle(5).unwrap();
        let small = ng3_shrink(&c5).unwrap();
        assert_eq!(small, k(2));
        assert_eq!(classify(&small).split_kind(), SplitKind::Ng1);
        assert!(isomorphic(&ng3_grow(&k(2), 5).unwrap(), &c5));
        assert!(ng3_grow(&k(2), 6).is_err());
        assert!(ng3_grow(&k(1), 4).is_err(), "K1 is NG-1 and NG-2");

        let g3 = fixtures::ng3_twelve_vertex();
        let h = ng3_shrink(&g3).unwrap();
        assert_eq!(h.order(), 9);
        assert_eq!(classify(&h).split_kind(), SplitKind::Ng1);
        assert!(isomorphic(&ng3_grow(&h, 12).unwrap(), &g3));
    }

    #[test]
    fn ng3_shrink_edge_choice_is_irrelevant() {
        for g in [
            fixtures::ng3_twelve_vertex(),
            Graph::cycle(5).unwrap(),
            fixtures::ng3_collision_pair().1,
        ] {
            let abc = abc_partition(&g, profile(&g).split_index).unwrap();
            let base = ng3_shrink(&g).unwrap();
            let mut edges = 0;
            for a1 in abc.a {
                for a2 in abc.a {
                    if a1 < a2 && g.has_edge(a1, a2) {
                        edges += 1;
                        assert!(isomorphic(
                            &ng3_shrink_with_edge(&g, a1, a2).unwrap(),
                            &base
                        ));
                    }
                }
            }
            assert_eq!(edges, 5);
        }
    }

    #[test]
    fn strip_and_rebuild_a() {
        for n in 2..=6 {
            assert_eq!(strip_a(&k(n)).unwrap().order(), 0);
            assert!(isomorphic(
                &rebuild_a(&Graph::empty(0).unwrap(), n).unwrap(),
                &k(n)
            ));
        }
        let g1 = fixtures::ng1_ten_vertex();
        let h = strip_a(&g1).unwrap();
        assert_eq!(h.order(), 7);
        assert_eq!(h.edge_count(), 3 + 6);
        assert!(isomorphic(&rebuild_a(&h, 10).unwrap(), &g1));

        let g = rebuild_a(&k(1), 3).unwrap();
        assert_eq!(g.edges(), vec![(1, 2)]);
        assert_eq!(classify(&g).split_kind(), SplitKind::Ng1);
        assert_eq!(strip_a(&g).unwrap(), k(1));
        assert!(matches!(
            rebuild_a(&k(1), 2),
            Err(Error::TargetTooSmall { min: 3, .. })
        ));
        assert!(strip_a(&k(1)).is_err());
    }

    #[test]
    fn strip_ab_and_rebuild_d() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(strip_ab(&c5).unwrap().order(), 0);
        assert!(isomorphic(
            &rebuild_d(&Graph::empty(0).unwrap(), 5).unwrap(),
            &c5
        ));

        let g3 = fixtures::ng3_twelve_vertex();
        let h = strip_ab(&g3).unwrap();
        assert_eq!(h.order(), 7, "B' is empty, so only A goes");
        assert!(classify(&h).split);
        assert!(isomorphic(&rebuild_d(&h, 12).unwrap(), &g3));
        assert!(matches!(
            rebuild_d(&h, 11),
            Err(Error::TargetTooSmall { min: 12, .. })
        ));
    }

    #[test]
    fn deleting_a_collides_on_ng3_pair() {
        let (g, h) = fixtures::ng3_collision_pair();
        assert!(!isomorphic(&g, &h));
        let (ga, _) = delete_a(&g).unwrap();
        let (ha, _) = delete_a(&h).unwrap();
        assert!(isomorphic(&ga, &ha));
        // the B' refinement separates them again
        assert!(!isomorphic(&strip_ab(&g).unwrap(), &strip_ab(&h).unwrap()));
    }

    #[test]
    fn delete_a_partition_types() {
        let (h, part) = delete_a(&fixtures::ng1_ten_vertex()).unwrap();
        assert!(part.is_valid_for(&h));
        assert!(part.kind.is_s_max());
        let (h, part) = delete_a(&fixtures::ng2_ten_vertex()).unwrap();
        assert!(part.is_valid_for(&h));
        assert!(part.kind.is_k_max());
    }

    #[test]
    fn phi_psi_round_trip() {
        let k1 = KsTriple {
            graph: k(1),
            partition: KsPartition {
                k: VertexSet::singleton(0),
                s: VertexSet::EMPTY,
                kind: KsKind::KMax,
            },
        };
        let up = phi(&k1).unwrap();
        assert_eq!(up.graph, k(2));
        assert_eq!(up.partition.k, [0, 1].into_iter().collect());
        assert_eq!(up.partition.kind, KsKind::KMax);
        let down = psi(&up).unwrap();
        assert_eq!(down.code(), k1.code());

        let wrong = KsTriple {
            partition: KsPartition {
                kind: KsKind::SMax,
                ..k1.partition.clone()
            },
            ..k1.clone()
        };
        assert!(matches!(phi(&wrong), Err(Error::TagMismatch { .. })));
        let smax = KsTriple {
            graph: k(1),
            partition: KsPartition {
                k: VertexSet::EMPTY,
                s: VertexSet::singleton(0),
                kind: KsKind::SMax,
            },
        };
        assert!(psi(&smax).is_err());
        assert_eq!(psi(&phi(&smax).unwrap()).unwrap().code(), smax.code());
    }
}
