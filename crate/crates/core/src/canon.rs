//! Canonical codes for isomorphism testing.
//!
//! The code of a graph is the minimum, over the leaves of an
//! individualisation/refinement search tree, of the relabelled adjacency rows.
//! Colour refinement is label-invariant, so the set of leaves (and therefore
//! the minimum) only depends on the isomorphism class. Vertices in a target
//! cell that are twins of an earlier branch are skipped: swapping twins is an
//! automorphism, so their subtrees produce the same leaves.

use std::fmt;

use crate::graph::Graph;

/// Relabelling-invariant identifier of an isomorphism class (of a graph, or of
/// a vertex-coloured graph when produced by [`canonical_colored`]).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode(")?;
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        write!(f, ")")
    }
}

pub fn canonical(g: &Graph) -> CanonicalCode {
    canonical_colored(g, &vec![0; g.order()])
}

/// Code of `g` with vertex `v` coloured `colors[v]`. Two coloured graphs get
/// the same code iff some isomorphism maps each vertex to one of equal colour.
pub fn canonical_colored(g: &Graph, colors: &[u32]) -> CanonicalCode {
    let (rows, _) = best_leaf(g, colors);
    encode(g.order(), colors, &rows)
}

/// Code and canonical form from a single search.
pub fn canonical_with_form(g: &Graph) -> (CanonicalCode, Graph) {
    let colors = vec![0; g.order()];
    let (rows, _) = best_leaf(g, &colors);
    let code = encode(g.order(), &colors, &rows);
    (
        code,
        Graph::from_rows(rows).expect("relabelled rows stay symmetric"),
    )
}

fn encode(n: usize, colors: &[u32], rows: &[u64]) -> CanonicalCode {
    let mut sorted: Vec<u32> = colors.to_vec();
    sorted.sort_unstable();
    let row_bytes = n.div_ceil(8);
    let mut bytes = Vec::with_capacity(1 + 4 * n + n * row_bytes);
    bytes.push(n as u8);
    if colors.iter().any(|&c| c != 0) {
        for c in &sorted {
            bytes.extend_from_slice(&c.to_le_bytes());
        }
    }
    for r in rows {
        bytes.extend_from_slice(&r.to_le_bytes()[..row_bytes]);
    }
    CanonicalCode(bytes)
}

/// Permutation `perm` with `g.permute(&perm) == canonical_form(g)`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    best_leaf(g, &vec![0; g.order()]).1
}

/// Canonical representative of the isomorphism class of `g`.
pub fn canonical_form(g: &Graph) -> Graph {
    let (rows, _) = best_leaf(g, &vec![0; g.order()]);
    Graph::from_rows(rows).expect("relabelled rows stay symmetric")
}

pub fn isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.edge_count() == h.edge_count()
        && {
            let mut dg = g.degrees();
            let mut dh = h.degrees();
            dg.sort_unstable();
            dh.sort_unstable();
            dg == dh
        }
        && canonical(g) == canonical(h)
}

fn best_leaf(g: &Graph, colors: &[u32]) -> (Vec<u64>, Vec<usize>) {
    let n = g.order();
    assert_eq!(colors.len(), n, "one colour per vertex");
    let mut distinct: Vec<u32> = colors.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    let start: Vec<u32> = colors
        .iter()
        .map(|c| distinct.binary_search(c).unwrap() as u32)
        .collect();
    let mut search = Search { g, best: None };
    search.run(start);
    search.best.unwrap_or_default()
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<u64>, Vec<usize>)>,
}

impl Search<'_> {
    fn run(&mut self, mut colors: Vec<u32>) {
        let n = self.g.order();
        let cells = refine(self.g, &mut colors);
        if cells == n {
            self.leaf(&colors);
            return;
        }

        let mut sizes = vec![0usize; cells];
        for &c in &colors {
            sizes[c as usize] += 1;
        }
        let target = sizes.iter().position(|&s| s > 1).unwrap() as u32;

        let rows = self.g.rows();
        let mut tried: Vec<usize> = Vec::new();
        for v in (0..n).filter(|&v| colors[v] == target) {
            let twin_of_tried = tried
                .iter()
                .any(|&u| rows[u] & !(1u64 << v) == rows[v] & !(1u64 << u));
            if twin_of_tried {
                continue;
            }
            tried.push(v);
            let next = colors
                .iter()
                .enumerate()
                .map(|(u, &c)| 2 * c + u32::from(c == target && u != v))
                .collect();
            self.run(next);
        }
    }

    fn leaf(&mut self, colors: &[u32]) {
        let perm: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
        let mut rows = vec![0u64; perm.len()];
        for (u, &row) in self.g.rows().iter().enumerate() {
            let mut r = 0u64;
            let mut bits = row;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                r |= 1u64 << perm[v];
                bits &= bits - 1;
            }
            rows[perm[u]] = r;
        }
        let better = match &self.best {
            None => true,
            Some((best, _)) => rows < *best,
        };
        if better {
            self.best = Some((rows, perm));
        }
    }
}

/// Iterated colour refinement. Colours are first ranked densely, then
/// renumbered `0..k` in the order of their (old colour, neighbour-colour
/// counts) signature; returns `k`.
fn refine(g: &Graph, colors: &mut [u32]) -> usize {
    let n = g.order();
    let mut cells = {
        let mut d: Vec<u32> = colors.to_vec();
        d.sort_unstable();
        d.dedup();
        for c in colors.iter_mut() {
            *c = d.binary_search(c).unwrap() as u32;
        }
        d.len()
    };
    loop {
        if cells == n {
            return cells;
        }
        let mut sigs: Vec<(u32, Vec<u8>, usize)> = (0..n)
            .map(|v| {
                let mut counts = vec![0u8; cells];
                for u in g.neighbors(v) {
                    counts[colors[u] as usize] += 1;
                }
                (colors[v], counts, v)
            })
            .collect();
        sigs.sort_unstable();
        let mut next = 0u32;
        for i in 0..n {
            if i > 0 && (sigs[i].0, &sigs[i].1) != (sigs[i - 1].0, &sigs[i - 1].1) {
                next += 1;
            }
            colors[sigs[i].2] = next;
        }
        let new_cells = next as usize + 1;
        if new_cells == cells {
            return cells;
        }
        cells = new_cells;
    }
}
