//! Exhaustive checks that each map in [`crate::bijection`] is a bijection
//! between the classes it claims, on every isomorphism class up to a size.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::bijection::{self, KsTriple};
use crate::canon::{canonical, isomorphic, CanonicalCode};
use crate::census::enumerate_hereditary;
use crate::degree::{classify, ClassLabel, SplitKind};
use crate::error::Result;
use crate::graph::Graph;
use crate::partition::{all_ks_partitions, KsKind};

/// All pseudo-split graphs up to some order, with their labels. Split, NG-1,
/// NG-2 and NG-3 graphs are all pseudo-split, so this covers every map.
pub struct Catalog {
    levels: Vec<Vec<(Graph, ClassLabel)>>,
}

impl Catalog {
    pub fn enumerate(max_n: usize) -> Result<Self> {
        let levels = enumerate_hereditary(max_n, |g| classify(g).pseudo_split)?;
        let levels = levels
            .into_iter()
            .map(|gs| {
                gs.into_iter()
                    .map(|g| {
                        let label = classify(&g);
                        (g, label)
                    })
                    .collect()
            })
            .collect();
        Ok(Catalog { levels })
    }

    pub fn max_n(&self) -> usize {
        self.levels.len() - 1
    }

    /// Graphs on exactly `n` vertices whose label satisfies `pred`; empty for
    /// negative `n`.
    pub fn class(&self, n: isize, pred: impl Fn(&ClassLabel) -> bool) -> Vec<&Graph> {
        if n < 0 {
            return Vec::new();
        }
        self.levels[n as usize]
            .iter()
            .filter(|(_, l)| pred(l))
            .map(|(g, _)| g)
            .collect()
    }

    /// Split graphs on at most `n` vertices.
    pub fn split_up_to(&self, n: isize) -> Vec<&Graph> {
        (0..=n).flat_map(|k| self.class(k, |l| l.split)).collect()
    }
}

/// Outcome of one map at one order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub map: &'static str,
    pub n: usize,
    pub domain: usize,
    pub codomain: usize,
    /// Isomorphism classes hit by the forward map.
    pub distinct_images: usize,
    /// Images (either direction) outside the claimed class, or errors.
    pub misplaced: usize,
    /// Inputs not recovered up to isomorphism after a round trip.
    pub round_trip_failures: usize,
}

impl SweepReport {
    pub fn ok(&self) -> bool {
        self.domain == self.codomain
            && self.distinct_images == self.domain
            && self.misplaced == 0
            && self.round_trip_failures == 0
    }
}

struct Tally {
    codes: Vec<Option<CanonicalCode>>,
    misplaced: usize,
    failures: usize,
}

/// Apply `fwd` to each of `inputs`, check the image with `fits`, and compare
/// `back(fwd(x))` with `x`.
fn run<F, B, C>(inputs: &[&Graph], fwd: F, back: B, fits: C) -> Tally
where
    F: Fn(&Graph) -> Result<Graph> + Sync,
    B: Fn(&Graph) -> Result<Graph> + Sync,
    C: Fn(&Graph, &Graph) -> bool + Sync,
{
    let results: Vec<(Option<CanonicalCode>, bool, bool)> = inputs
        .par_iter()
        .map(|&x| match fwd(x) {
            Err(_) => (None, true, true),
            Ok(y) => {
                let placed = fits(x, &y);
                let recovered = back(&y).map(|z| isomorphic(&z, x)).unwrap_or(false);
                (Some(canonical(&y)), !placed, !recovered)
            }
        })
        .collect();
    Tally {
        misplaced: results.iter().filter(|r| r.1).count(),
        failures: results.iter().filter(|r| r.2).count(),
        codes: results.into_iter().map(|r| r.0).collect(),
    }
}

#[allow(clippy::too_many_arguments)]
fn sweep<F, B, C, D>(
    map: &'static str,
    n: usize,
    domain: &[&Graph],
    codomain: &[&Graph],
    fwd: F,
    back: B,
    fits_codomain: C,
    fits_domain: D,
) -> SweepReport
where
    F: Fn(&Graph) -> Result<Graph> + Sync,
    B: Fn(&Graph) -> Result<Graph> + Sync,
    C: Fn(&Graph, &Graph) -> bool + Sync,
    D: Fn(&Graph, &Graph) -> bool + Sync,
{
    let there = run(domain, &fwd, &back, fits_codomain);
    let back_again = run(codomain, &back, &fwd, fits_domain);
    let distinct: HashSet<_> = there.codes.iter().flatten().collect();
    SweepReport {
        map,
        n,
        domain: domain.len(),
        codomain: codomain.len(),
        distinct_images: distinct.len(),
        misplaced: there.misplaced + back_again.misplaced,
        round_trip_failures: there.failures + back_again.failures,
    }
}

fn kind_of(g: &Graph) -> SplitKind {
    classify(g).split_kind()
}

/// NG-1 on `n` against split on `n - 1`, including the sub-case kinds.
pub fn sweep_ng1_remove(cat: &Catalog, n: usize) -> SweepReport {
    let n_i = n as isize;
    let domain = if n == 0 {
        Vec::new()
    } else {
        cat.class(n_i, |l| l.ng1)
    };
    let codomain = cat.class(n_i - 1, |l| l.split);
    sweep(
        "ng1-remove",
        n,
        &domain,
        &codomain,
        bijection::ng1_remove,
        bijection::split_to_ng1,
        |x, y| {
            bijection::ng1_case(x)
                .map(|c| c.image_kind() == kind_of(y))
                .unwrap_or(false)
                && y.order() + 1 == x.order()
        },
        |_, x| classify(x).ng1 && x.order() == n,
    )
}

pub fn sweep_complement(cat: &Catalog, n: usize) -> SweepReport {
    let n_i = n as isize;
    let domain = if n == 0 {
        Vec::new()
    } else {
        cat.class(n_i, |l| l.ng1)
    };
    let codomain = if n == 0 {
        Vec::new()
    } else {
        cat.class(n_i, |l| l.ng2)
    };
    sweep(
        "ng1-to-ng2",
        n,
        &domain,
        &codomain,
        bijection::ng1_to_ng2,
        bijection::ng2_to_ng1,
        |_, y| classify(y).ng2,
        |_, x| classify(x).ng1,
    )
}

pub fn sweep_strip_a(cat: &Catalog, n: usize) -> SweepReport {
    let n_i = n as isize;
    let domain = cat.class(n_i, |l| l.split_kind() == SplitKind::Ng1);
    let codomain = cat.split_up_to(n_i - 2);
    sweep(
        "strip-a",
        n,
        &domain,
        &codomain,
        bijection::strip_a,
        |h| bijection::rebuild_a(h, n),
        |_, y| classify(y).split && y.order() + 2 <= n,
        |_, x| kind_of(x) == SplitKind::Ng1 && x.order() == n,
    )
}

pub fn sweep_ng3_shrink(cat: &Catalog, n: usize) -> SweepReport {
    let n_i = n as isize;
    let domain = cat.class(n_i, |l| l.ng3);
    let codomain = cat.class(n_i - 3, |l| l.split_kind() == SplitKind::Ng1);
    sweep(
        "ng3-shrink",
        n,
        &domain,
        &codomain,
        bijection::ng3_shrink,
        |h| bijection::ng3_grow(h, n),
        |_, y| kind_of(y) == SplitKind::Ng1 && y.order() + 3 == n,
        |_, x| classify(x).ng3 && x.order() == n,
    )
}

pub fn sweep_strip_ab(cat: &Catalog, n: usize) -> SweepReport {
    let n_i = n as isize;
    let domain = cat.class(n_i, |l| l.ng3);
    let codomain = cat.split_up_to(n_i - 5);
    sweep(
        "strip-ab",
        n,
        &domain,
        &codomain,
        bijection::strip_ab,
        |h| bijection::rebuild_d(h, n),
        |_, y| classify(y).split && y.order() + 5 <= n,
        |_, x| classify(x).ng3 && x.order() == n,
    )
}

/// Distinct labelled-up-to-isomorphism triples drawn from `graphs`.
fn triples<'a>(
    graphs: impl Iterator<Item = &'a Graph>,
    keep: impl Fn(KsKind) -> bool,
) -> Vec<KsTriple> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for g in graphs {
        for partition in all_ks_partitions(g).expect("split input") {
            if !keep(partition.kind) {
                continue;
            }
            let t = KsTriple {
                graph: g.clone(),
                partition,
            };
            if seen.insert(t.code()) {
                out.push(t);
            }
        }
    }
    out
}

/// KS-triples on `n - 1` against K-max triples of unbalanced graphs on `n`.
pub fn sweep_phi(cat: &Catalog, n: usize) -> SweepReport {
    let n_i = n as isize;
    let domain = triples(cat.class(n_i - 1, |l| l.split).into_iter(), |_| true);
    let codomain = triples(cat.class(n_i, |l| l.unbalanced).into_iter(), |k| {
        k == KsKind::KMax
    });

    let check = |t: &KsTriple,
                 f: &dyn Fn(&KsTriple) -> Result<KsTriple>,
                 g: &dyn Fn(&KsTriple) -> Result<KsTriple>,
                 fits: &dyn Fn(&KsTriple) -> bool|
     -> (Option<CanonicalCode>, bool, bool) {
        match f(t) {
            Err(_) => (None, true, true),
            Ok(u) => {
                let recovered = g(&u).map(|v| v.code() == t.code()).unwrap_or(false);
                (Some(u.code()), !fits(&u), !recovered)
            }
        }
    };
    let fits_codomain = |u: &KsTriple| {
        u.graph.order() == n && classify(&u.graph).unbalanced && u.partition.kind == KsKind::KMax
    };
    let fits_domain = |u: &KsTriple| u.graph.order() + 1 == n && classify(&u.graph).split;
    let there: Vec<_> = domain
        .par_iter()
        .map(|t| check(t, &bijection::phi, &bijection::psi, &fits_codomain))
        .collect();
    let back: Vec<_> = codomain
        .par_iter()
        .map(|t| check(t, &bijection::psi, &bijection::phi, &fits_domain))
        .collect();
    let distinct: HashSet<_> = there.iter().filter_map(|r| r.0.as_ref()).collect();
    let all = there.iter().chain(&back);
    SweepReport {
        map: "phi",
        n,
        domain: domain.len(),
        codomain: codomain.len(),
        distinct_images: distinct.len(),
        misplaced: all.clone().filter(|r| r.1).count(),
        round_trip_failures: all.filter(|r| r.2).count(),
    }
}

/// Every sweep for every order `1..=max_n` the catalogue covers.
pub fn sweep_all(cat: &Catalog, max_n: usize) -> Vec<SweepReport> {
    let mut out = Vec::new();
    for n in 1..=max_n.min(cat.max_n()) {
        out.push(sweep_ng1_remove(cat, n));
        out.push(sweep_complement(cat, n));
        out.push(sweep_strip_a(cat, n));
        out.push(sweep_ng3_shrink(cat, n));
        out.push(sweep_strip_ab(cat, n));
        out.push(sweep_phi(cat, n));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_maps_are_bijections_up_to_seven() {
        let cat = Catalog::enumerate(7).unwrap();
        for r in sweep_all(&cat, 7) {
            assert!(r.ok(), "{r:?}");
        }
    }

    #[test]
    fn sweep_sizes() {
        let cat = Catalog::enumerate(6).unwrap();
        let r = sweep_ng1_remove(&cat, 6);
        assert_eq!((r.domain, r.codomain), (21, 21));
        let r = sweep_ng3_shrink(&cat, 5);
        assert_eq!((r.domain, r.codomain), (1, 1));
        let r = sweep_phi(&cat, 6);
        assert_eq!(r.domain, 38);
    }
}
