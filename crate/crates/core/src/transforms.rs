//! Graph rewrites whose effect on the alpha-spectral radius is known.
//!
//! Every rewrite keeps the input labels; a vertex created by the rewrite
//! gets the next free label.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A rewritten graph together with the edges it lost and gained.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RewriteResult {
    #[serde(skip)]
    pub graph: Graph,
    pub removed: Vec<(usize, usize)>,
    pub added: Vec<(usize, usize)>,
}

fn ordered(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

/// Moves the edges `vw`, `w` in `moved`, to `uw`.
pub fn graft(g: &Graph, u: usize, v: usize, moved: &[usize]) -> Result<RewriteResult> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::InvalidMoveSet("u and v coincide".into()));
    }
    if moved.is_empty() {
        return Err(Error::InvalidMoveSet("nothing to move".into()));
    }
    let mut graph = g.clone();
    let (mut removed, mut added) = (Vec::new(), Vec::new());
    for (i, &w) in moved.iter().enumerate() {
        if moved[..i].contains(&w) {
            return Err(Error::InvalidMoveSet(format!("vertex {w} listed twice")));
        }
        if w == u || !g.has_edge(v, w) || g.has_edge(u, w) {
            return Err(Error::InvalidMoveSet(format!("{w} is not in N(v) minus N(u) and u")));
        }
        graph.remove_edge(v, w)?;
        graph.add_edge(u, w)?;
        removed.push(ordered(v, w));
        added.push(ordered(u, w));
    }
    Ok(RewriteResult { graph, removed, added })
}

/// Deletes the cut edge `uv`, merges `v` into `u`, and re-attaches `v` as a
/// pendant vertex of `u`. The vertex count is unchanged.
pub fn contract_cut_edge_with_pendant(g: &Graph, u: usize, v: usize) -> Result<RewriteResult> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if !g.has_edge(u, v) {
        return Err(Error::EdgeNotFound(u, v));
    }
    if !g.is_cut_edge(u, v) {
        return Err(Error::NotACutEdge(u, v));
    }
    let mut graph = g.clone();
    let (mut removed, mut added) = (Vec::new(), Vec::new());
    for &w in g.neighbors(v).iter().filter(|&&w| w != u) {
        // a cut edge has no common neighbours at its ends
        graph.remove_edge(v, w)?;
        graph.add_edge(u, w)?;
        removed.push(ordered(v, w));
        added.push(ordered(u, w));
    }
    Ok(RewriteResult { graph, removed, added })
}

/// Replaces `uv` and `wy` by `uw` and `vy`.
pub fn two_switch(g: &Graph, e1: (usize, usize), e2: (usize, usize)) -> Result<RewriteResult> {
    let ((u, v), (w, y)) = (e1, e2);
    for x in [u, v, w, y] {
        g.check_vertex(x)?;
    }
    let all = [u, v, w, y];
    if (0..4).any(|i| all[i + 1..].contains(&all[i])) {
        return Err(Error::SwitchConflict(format!("vertices {u}, {v}, {w}, {y} are not distinct")));
    }
    for (a, b) in [e1, e2] {
        if !g.has_edge(a, b) {
            return Err(Error::EdgeNotFound(a, b));
        }
    }
    for (a, b) in [(u, w), (v, y)] {
        if g.has_edge(a, b) {
            return Err(Error::SwitchConflict(format!("edge {a}-{b} already present")));
        }
    }
    let mut graph = g.clone();
    graph.remove_edge(u, v)?;
    graph.remove_edge(w, y)?;
    graph.add_edge(u, w)?;
    graph.add_edge(v, y)?;
    Ok(RewriteResult { graph, removed: vec![ordered(u, v), ordered(w, y)], added: vec![ordered(u, w), ordered(v, y)] })
}

/// Replaces edge `uv` by a path `u w v` through a new vertex `w`.
pub fn subdivide(g: &Graph, e: (usize, usize)) -> Result<RewriteResult> {
    let (u, v) = e;
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if !g.has_edge(u, v) {
        return Err(Error::EdgeNotFound(u, v));
    }
    let mut graph = g.clone();
    graph.remove_edge(u, v)?;
    let w = graph.add_vertex();
    graph.add_edge(u, w)?;
    graph.add_edge(w, v)?;
    Ok(RewriteResult { graph, removed: vec![ordered(u, v)], added: vec![(u, w), (v, w)] })
}

/// `G_(u,v)(k, l)`: pendant paths of lengths `k` at `u` and `l` at `v`.
pub fn pendant_pair(base: &Graph, u: usize, v: usize, k: usize, l: usize) -> Result<Graph> {
    let mut g = base.clone();
    g.attach_path(u, k)?;
    g.attach_path(v, l)?;
    Ok(g)
}

/// The pair `(G_(u,v)(k, l), G_(u,v)(k - 1, l + 1))`.
pub fn shift_pendant_paths(base: &Graph, u: usize, v: usize, k: usize, l: usize) -> Result<(Graph, Graph)> {
    base.check_vertex(u)?;
    base.check_vertex(v)?;
    if k < l + 2 {
        return Err(Error::InvalidShift(format!("need k - l >= 2, got k={k}, l={l}")));
    }
    if !base.has_edge(u, v) {
        return Err(Error::InvalidShift(format!("{u}-{v} is not an edge of the base")));
    }
    Ok((pendant_pair(base, u, v, k, l)?, pendant_pair(base, u, v, k - 1, l + 1)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;

    #[test]
    fn graft_moves_leaves() {
        let star = Graph::star(3);
        let r = graft(&star, 1, 0, &[2, 3]).unwrap();
        assert!(is_isomorphic(&r.graph, &Graph::star(3)));
        assert_eq!(r.graph.degree(1), 3);
        assert!(graft(&star, 1, 0, &[]).is_err());
        assert!(graft(&star, 1, 0, &[1]).is_err());
        assert!(graft(&star, 1, 0, &[2, 2]).is_err());
    }

    #[test]
    fn contraction_examples() {
        let r = contract_cut_edge_with_pendant(&Graph::path(4), 1, 2).unwrap();
        assert!(is_isomorphic(&r.graph, &Graph::star(3)));
        for (u, v) in [(0, 1), (1, 0), (1, 2)] {
            let r = contract_cut_edge_with_pendant(&Graph::path(3), u, v).unwrap();
            assert!(is_isomorphic(&r.graph, &Graph::path(3)));
        }
        assert_eq!(contract_cut_edge_with_pendant(&Graph::cycle(3), 0, 1).unwrap_err(), Error::NotACutEdge(0, 1));
    }

    #[test]
    fn switch_examples() {
        let c6 = Graph::cycle(6);
        // one orientation splits C6 into two triangles, the other keeps a hexagon
        let a = two_switch(&c6, (0, 1), (3, 4)).unwrap().graph;
        let b = two_switch(&c6, (0, 1), (4, 3)).unwrap().graph;
        assert_eq!((a.size(), b.size()), (6, 6));
        let shapes = [a.components().len(), b.components().len()];
        assert!(shapes.contains(&1) && shapes.contains(&2));
        let p = two_switch(&Graph::path(5), (0, 1), (3, 4)).unwrap().graph;
        assert_eq!(p.degrees().iter().sum::<usize>(), 8);
        assert!(matches!(two_switch(&Graph::path(5), (0, 1), (1, 2)), Err(Error::SwitchConflict(_))));
    }

    #[test]
    fn subdivision_examples() {
        assert!(is_isomorphic(&subdivide(&Graph::cycle(3), (0, 1)).unwrap().graph, &Graph::cycle(4)));
        assert!(is_isomorphic(&subdivide(&Graph::path(2), (0, 1)).unwrap().graph, &Graph::path(3)));
        let theta = crate::families::theta_base(2, 2, 1).unwrap();
        let bigger = subdivide(&theta, (0, 1)).unwrap().graph;
        assert!(is_isomorphic(&bigger, &crate::families::theta_base(2, 2, 2).unwrap()));
        assert!(subdivide(&Graph::path(3), (0, 2)).is_err());
    }

    #[test]
    fn shift_examples() {
        let (a, b) = shift_pendant_paths(&Graph::path(2), 0, 1, 2, 0).unwrap();
        assert!(is_isomorphic(&a, &Graph::path(4)));
        assert!(is_isomorphic(&b, &Graph::path(4)));
        assert!(shift_pendant_paths(&Graph::cycle(3), 0, 1, 2, 1).is_err());
        assert!(shift_pendant_paths(&Graph::path(3), 0, 2, 3, 0).is_err());
    }
}
