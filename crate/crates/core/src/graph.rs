//! Simple undirected graphs on dense vertex labels `0..n`.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite simple undirected graph. Vertices are `0..n`; neighbor lists are
/// kept sorted so that equality is equality of labeled graphs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PathKind {
    /// One end is a vertex of degree 1; the other end is the root.
    Pendant,
    /// Both ends have degree at least 3, interior vertices have degree 2.
    Internal,
    /// A shortest path between its ends.
    Geodesic,
}

/// An ordered vertex sequence along a path of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathDescriptor {
    pub vertices: Vec<usize>,
    pub kind: PathKind,
}

impl PathDescriptor {
    /// Number of edges on the path.
    pub fn length(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices.windows(2).map(|w| (w[0], w[1]))
    }
}

/// The base of a c-cyclic graph together with the labels its vertices carry
/// in the parent graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Base {
    pub graph: Graph,
    /// `vertices[i]` is the parent label of base vertex `i`.
    pub vertices: Vec<usize>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], m: 0 }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("path edges are valid")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut g = Graph::path(n);
        g.add_edge(n - 1, 0).expect("closing edge is new");
        g
    }

    /// `K_{1,k}` with center 0.
    pub fn star(k: usize) -> Self {
        let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
        Graph::from_edges(k + 1, &edges).expect("star edges are valid")
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).expect("complete graph edges are new");
            }
        }
        g
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.order() })
        }
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for (u, nb) in self.adj.iter().enumerate() {
            out.extend(nb.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Err(Error::DuplicateEdge(u.min(v), u.max(v))),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                self.m += 1;
                Ok(())
            }
        }
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        match self.adj[u].binary_search(&v) {
            Ok(pos) => {
                self.adj[u].remove(pos);
                let pos = self.adj[v].binary_search(&u).expect("adjacency is symmetric");
                self.adj[v].remove(pos);
                self.m -= 1;
                Ok(())
            }
            Err(_) => Err(Error::EdgeNotFound(u.min(v), u.max(v))),
        }
    }

    /// Hangs a path with `len` new vertices off `root`; returns the new
    /// vertices ordered from the root outward.
    pub fn attach_path(&mut self, root: usize, len: usize) -> Result<Vec<usize>> {
        self.check_vertex(root)?;
        let mut prev = root;
        let mut out = Vec::with_capacity(len);
        for _ in 0..len {
            let w = self.add_vertex();
            self.add_edge(prev, w)?;
            out.push(w);
            prev = w;
        }
        Ok(out)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order());
        let mut g = Graph::new(self.order());
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]).expect("permutation preserves simplicity");
        }
        g
    }

    /// The subgraph induced on `vertices`; vertex `i` of the result is
    /// `vertices[i]` of `self`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::new(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = index[w];
                if j != usize::MAX && i < j {
                    g.add_edge(i, j).expect("induced edges are simple");
                }
            }
        }
        g
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        for s in 0..self.order() {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.distances_from(0).iter().all(Option::is_some)
    }

    fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::DisconnectedGraph)
        }
    }

    /// Largest distance over all vertex pairs, or `None` when disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for s in 0..self.order() {
            for d in self.distances_from(s) {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    /// `m - n + 1` of a connected graph.
    pub fn cyclomatic_number(&self) -> Result<usize> {
        self.require_connected()?;
        Ok((self.m + 1).saturating_sub(self.order()))
    }

    /// Strips vertices of degree 1 until none remain.
    pub fn base(&self) -> Result<Base> {
        if self.cyclomatic_number()? == 0 {
            return Err(Error::TreeHasNoBase);
        }
        let mut deg = self.degrees();
        let mut alive = vec![true; self.order()];
        let mut stack: Vec<usize> = (0..self.order()).filter(|&v| deg[v] == 1).collect();
        while let Some(v) = stack.pop() {
            if !alive[v] {
                continue;
            }
            alive[v] = false;
            for &w in &self.adj[v] {
                if alive[w] {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        stack.push(w);
                    }
                }
            }
        }
        let vertices: Vec<usize> = (0..self.order()).filter(|&v| alive[v]).collect();
        Ok(Base { graph: self.induced_subgraph(&vertices), vertices })
    }

    /// A shortest path realising the diameter. The endpoint pair is the
    /// lexicographically smallest at maximal distance and the vertex
    /// sequence is the lexicographically smallest geodesic between them.
    pub fn find_diameter_path(&self) -> Result<PathDescriptor> {
        self.require_connected()?;
        let n = self.order();
        if n == 0 {
            return Ok(PathDescriptor { vertices: vec![], kind: PathKind::Geodesic });
        }
        let all: Vec<Vec<usize>> = (0..n)
            .map(|s| self.distances_from(s).into_iter().map(|d| d.unwrap()).collect())
            .collect();
        let diam = all.iter().flatten().copied().max().unwrap_or(0);
        let (start, end) = (0..n)
            .flat_map(|u| (u..n).map(move |v| (u, v)))
            .find(|&(u, v)| all[u][v] == diam)
            .expect("some pair realises the diameter");
        let mut vertices = vec![start];
        let mut cur = start;
        while cur != end {
            let remaining = all[cur][end];
            cur = *self.adj[cur]
                .iter()
                .find(|&&w| all[w][end] + 1 == remaining)
                .expect("a geodesic step exists");
            vertices.push(cur);
        }
        Ok(PathDescriptor { vertices, kind: PathKind::Geodesic })
    }

    /// Maximal pendant paths, each listed root first and ending at a vertex
    /// of degree 1. The root is the first vertex of degree other than 2
    /// met when walking in from the leaf.
    pub fn pendant_paths(&self) -> Vec<PathDescriptor> {
        let mut out = Vec::new();
        for leaf in (0..self.order()).filter(|&v| self.degree(v) == 1) {
            let mut walk = vec![leaf];
            let mut prev = leaf;
            let mut cur = self.adj[leaf][0];
            while self.degree(cur) == 2 {
                walk.push(cur);
                let next = if self.adj[cur][0] == prev { self.adj[cur][1] } else { self.adj[cur][0] };
                prev = cur;
                cur = next;
            }
            if self.degree(cur) == 1 {
                // the whole graph is a path; report it once
                if leaf > cur {
                    continue;
                }
            }
            walk.push(cur);
            walk.reverse();
            out.push(PathDescriptor { vertices: walk, kind: PathKind::Pendant });
        }
        out
    }

    /// Internal paths (and internal cycles, whose first and last vertex
    /// coincide). Each is reported once.
    pub fn internal_paths(&self) -> Vec<PathDescriptor> {
        let mut out = Vec::new();
        for s in (0..self.order()).filter(|&v| self.degree(v) >= 3) {
            for &first in &self.adj[s] {
                let mut walk = vec![s];
                let mut prev = s;
                let mut cur = first;
                while self.degree(cur) == 2 {
                    walk.push(cur);
                    let next = if self.adj[cur][0] == prev { self.adj[cur][1] } else { self.adj[cur][0] };
                    prev = cur;
                    cur = next;
                }
                if self.degree(cur) < 3 {
                    continue;
                }
                walk.push(cur);
                let reversed: Vec<usize> = walk.iter().rev().copied().collect();
                if walk <= reversed {
                    out.push(PathDescriptor { vertices: walk, kind: PathKind::Internal });
                }
            }
        }
        out
    }

    /// Whether removing edge `uv` disconnects its endpoints.
    pub fn is_cut_edge(&self, u: usize, v: usize) -> bool {
        if !self.has_edge(u, v) {
            return false;
        }
        let mut h = self.clone();
        h.remove_edge(u, v).expect("edge exists");
        h.distances_from(u)[v].is_none()
    }

    /// Vertices whose removal increases the number of components.
    pub fn cut_vertices(&self) -> Vec<usize> {
        let base = self.components().len();
        (0..self.order())
            .filter(|&v| {
                let keep: Vec<usize> = (0..self.order()).filter(|&w| w != v).collect();
                self.induced_subgraph(&keep).components().len() > base
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_multi_edges() {
        let mut g = Graph::new(3);
        assert_eq!(g.add_edge(1, 1), Err(Error::SelfLoop(1)));
        g.add_edge(0, 1).unwrap();
        assert_eq!(g.add_edge(1, 0), Err(Error::DuplicateEdge(0, 1)));
        assert!(matches!(g.add_edge(0, 3), Err(Error::VertexOutOfRange { vertex: 3, n: 3 })));
    }

    #[test]
    fn diameters_of_small_graphs() {
        assert_eq!(Graph::cycle(5).diameter(), Some(2));
        assert_eq!(Graph::path(4).diameter(), Some(3));
        assert_eq!(Graph::new(2).diameter(), None);
        assert_eq!(Graph::complete(4).diameter(), Some(1));
    }

    #[test]
    fn cyclomatic_numbers() {
        assert_eq!(Graph::cycle(3).cyclomatic_number(), Ok(1));
        let tree = Graph::from_edges(7, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (5, 6)]).unwrap();
        assert_eq!(tree.cyclomatic_number(), Ok(0));
        let theta = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(theta.cyclomatic_number(), Ok(2));
        assert_eq!(Graph::new(2).cyclomatic_number(), Err(Error::DisconnectedGraph));
    }

    #[test]
    fn base_strips_pendant_trees() {
        let mut g = Graph::cycle(3);
        let p = g.attach_path(1, 1).unwrap();
        assert_eq!(p, vec![3]);
        let b = g.base().unwrap();
        assert_eq!(b.vertices, vec![0, 1, 2]);
        assert_eq!(b.graph, Graph::cycle(3));
        assert_eq!(Graph::path(5).base(), Err(Error::TreeHasNoBase));
        assert_eq!(Graph::new(3).base(), Err(Error::DisconnectedGraph));
    }

    #[test]
    fn diameter_paths_are_deterministic() {
        let p = Graph::path(5).find_diameter_path().unwrap();
        assert_eq!(p.vertices, vec![0, 1, 2, 3, 4]);
        let c = Graph::cycle(6).find_diameter_path().unwrap();
        assert_eq!(c.vertices, vec![0, 1, 2, 3]);
        assert_eq!(c.length(), 3);
        assert_eq!(Graph::new(2).find_diameter_path(), Err(Error::DisconnectedGraph));
    }

    #[test]
    fn pendant_and_internal_paths() {
        // C3 on {0,1,2} with a 2-path hanging off 1
        let mut g = Graph::cycle(3);
        g.attach_path(1, 2).unwrap();
        let pendant = g.pendant_paths();
        assert_eq!(pendant.len(), 1);
        assert_eq!(pendant[0].vertices, vec![1, 3, 4]);
        let internal = g.internal_paths();
        // the cycle through 1 returns to 1
        assert_eq!(internal.len(), 1);
        assert_eq!(internal[0].vertices.first(), internal[0].vertices.last());

        let theta = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        let internal = theta.internal_paths();
        assert_eq!(internal.len(), 3);
        assert!(internal.iter().any(|p| p.vertices == vec![1, 2]));
    }

    #[test]
    fn cut_edges_and_vertices() {
        let mut g = Graph::cycle(3);
        g.attach_path(0, 2).unwrap();
        assert!(g.is_cut_edge(0, 3));
        assert!(!g.is_cut_edge(0, 1));
        assert_eq!(g.cut_vertices(), vec![0, 3]);
    }

    #[test]
    fn induced_and_relabel() {
        let g = Graph::path(4);
        let h = g.induced_subgraph(&[1, 2, 3]);
        assert_eq!(h, Graph::path(3));
        let r = g.relabel(&[3, 2, 1, 0]);
        assert_eq!(r, Graph::path(4));
    }
}
