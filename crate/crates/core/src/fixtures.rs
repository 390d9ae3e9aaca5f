//! Hand-built graphs with known classifications, shared by tests, the CLI
//! and the browser demo.
//!
//! Vertex ids are 0-based; in the degree tables below vertex `v_i` is id
//! `i - 1`.

use crate::graph::Graph;

/// Clique `B = {0,1,2}` joined to `A = {3,4,5}` (also a clique), stable
/// `C = {6,7,8,9}` with `B`-`C` edges 0-6, 0-7, 0-8, 1-6, 1-7, 2-9.
/// Degrees `(8,7,6,5,5,5,2,2,1,1)`; NG-1 only, `m = 6`.
pub fn ng1_ten_vertex() -> Graph {
    let mut edges = clique_edges(&[0, 1, 2, 3, 4, 5]);
    edges.extend(BC_EDGES);
    Graph::build(10, &edges).expect("valid fixture")
}

const BC_EDGES: [(usize, usize); 6] = [(0, 6), (0, 7), (0, 8), (1, 6), (1, 7), (2, 9)];

/// [`ng1_ten_vertex`] with the three edges inside `A` removed.
/// Degrees `(8,7,6,3,3,3,2,2,1,1)`; NG-2 only, `m = 4`.
pub fn ng2_ten_vertex() -> Graph {
    let mut g = ng1_ten_vertex();
    for (u, v) in [(3, 4), (3, 5), (4, 5)] {
        g.clear_edge(u, v);
    }
    g
}

/// [`ng1_ten_vertex`] with `A` expanded to the 5-cycle 3-4-5-6-7 and `C`
/// shifted to `{8,...,11}`. Degrees `(10,9,8,5,5,5,5,5,2,2,1,1)`; NG-3, `m = 6`.
pub fn ng3_twelve_vertex() -> Graph {
    let mut edges = clique_edges(&[0, 1, 2]);
    edges.extend(cycle_edges(&[3, 4, 5, 6, 7]));
    edges.extend(join_edges(&[0, 1, 2], &[3, 4, 5, 6, 7]));
    edges.extend(BC_EDGES.iter().map(|&(b, c)| (b, c + 2)));
    Graph::build(12, &edges).expect("valid fixture")
}

/// Split graph with `K = {0,1,2}`, `S = {3,4,5}` and extra edges 0-4, 1-3.
/// Degrees `(3,3,2,1,1,0)`, `m = 3`: satisfies the NG-3 degree-sum equality
/// but not the run-of-five condition.
pub fn split_six_vertex() -> Graph {
    let mut edges = clique_edges(&[0, 1, 2]);
    edges.extend([(0, 4), (1, 3)]);
    Graph::build(6, &edges).expect("valid fixture")
}

/// Two non-isomorphic NG-3 graphs whose `G - A` are isomorphic.
///
/// First: `B = {0,1,2}`, `A` = 5-cycle on `{3..7}`, `C = {8,9}`, single
/// `B`-`C` edge 0-8 (`chi = 6`). Second: `B = {0,1}`, `A` = 5-cycle on
/// `{2..6}`, `C = {7,8,9}`, `B`-`C` edges 0-7, 0-9, 1-9 (`chi = 5`).
pub fn ng3_collision_pair() -> (Graph, Graph) {
    let mut e1 = clique_edges(&[0, 1, 2]);
    e1.extend(cycle_edges(&[3, 4, 5, 6, 7]));
    e1.extend(join_edges(&[0, 1, 2], &[3, 4, 5, 6, 7]));
    e1.push((0, 8));

    let mut e2 = clique_edges(&[0, 1]);
    e2.extend(cycle_edges(&[2, 3, 4, 5, 6]));
    e2.extend(join_edges(&[0, 1], &[2, 3, 4, 5, 6]));
    e2.extend([(0, 7), (0, 9), (1, 9)]);

    (
        Graph::build(10, &e1).expect("valid fixture"),
        Graph::build(10, &e2).expect("valid fixture"),
    )
}

fn clique_edges(vs: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            out.push((u, v));
        }
    }
    out
}

fn cycle_edges(vs: &[usize]) -> Vec<(usize, usize)> {
    (0..vs.len())
        .map(|i| (vs[i], vs[(i + 1) % vs.len()]))
        .collect()
}

fn join_edges(xs: &[usize], ys: &[usize]) -> Vec<(usize, usize)> {
    xs.iter()
        .flat_map(|&x| ys.iter().map(move |&y| (x, y)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degree::profile;

    #[test]
    fn degree_tables() {
        assert_eq!(
            profile(&ng1_ten_vertex()).degrees,
            vec![8, 7, 6, 5, 5, 5, 2, 2, 1, 1]
        );
        assert_eq!(
            profile(&ng2_ten_vertex()).degrees,
            vec![8, 7, 6, 3, 3, 3, 2, 2, 1, 1]
        );
        assert_eq!(
            profile(&ng3_twelve_vertex()).degrees,
            vec![10, 9, 8, 5, 5, 5, 5, 5, 2, 2, 1, 1]
        );
        assert_eq!(profile(&split_six_vertex()).degrees, vec![3, 3, 2, 1, 1, 0]);
        let (g, h) = ng3_collision_pair();
        assert_eq!(profile(&g).degrees, vec![8, 7, 7, 5, 5, 5, 5, 5, 1, 0]);
        assert_eq!(profile(&h).degrees, vec![8, 7, 4, 4, 4, 4, 4, 2, 1, 0]);
    }
}
