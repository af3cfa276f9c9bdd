//! Canonical labeling by colour refinement plus individualisation search.
//!
//! The search explores every leaf of the refinement tree except those that
//! differ only by swapping twin vertices (same neighbourhood up to each
//! other). Exact for any graph; fast enough for the orders enumerated here.

use std::cmp::Ordering;

use crate::graph::Graph;

/// Isomorphism-invariant certificate: the adjacency bit rows of the
/// canonically relabeled graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    rows: Vec<u64>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n
    }

    /// Rebuilds the canonically labeled graph.
    pub fn to_graph(&self) -> Graph {
        let words = self.n.div_ceil(64).max(1);
        let mut g = Graph::new(self.n);
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.rows[i * words + j / 64] >> (j % 64) & 1 == 1 {
                    g.add_edge(i, j).expect("certificate rows are simple");
                }
            }
        }
        g
    }
}

struct Search<'a> {
    g: &'a Graph,
    words: usize,
    nbits: Vec<Vec<u64>>,
    best: Option<(Vec<u64>, Vec<usize>)>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.order();
        let words = n.div_ceil(64).max(1);
        let nbits = (0..n)
            .map(|v| {
                let mut row = vec![0u64; words];
                for &w in g.neighbors(v) {
                    row[w / 64] |= 1 << (w % 64);
                }
                row
            })
            .collect();
        Search { g, words, nbits, best: None }
    }

    fn twins(&self, a: usize, b: usize) -> bool {
        let mut ra = self.nbits[a].clone();
        let mut rb = self.nbits[b].clone();
        ra[b / 64] &= !(1 << (b % 64));
        rb[a / 64] &= !(1 << (a % 64));
        ra == rb
    }

    /// Splits cells by neighbour counts into every cell until stable.
    fn refine(&self, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
        let n = self.g.order();
        let mut cell_of = vec![0usize; n];
        loop {
            for (c, cell) in cells.iter().enumerate() {
                for &v in cell {
                    cell_of[v] = c;
                }
            }
            let mut next = Vec::with_capacity(cells.len());
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<usize>, usize)> = cell
                    .iter()
                    .map(|&v| {
                        let mut counts = vec![0usize; cells.len()];
                        for &w in self.g.neighbors(v) {
                            counts[cell_of[w]] += 1;
                        }
                        (counts, v)
                    })
                    .collect();
                keyed.sort();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                        start = i;
                    }
                }
            }
            if next.len() == cells.len() {
                return next;
            }
            cells = next;
        }
    }

    fn certificate(&self, position: &[usize]) -> Vec<u64> {
        let n = self.g.order();
        let mut rows = vec![0u64; n * self.words];
        for (u, v) in self.g.edges() {
            let (pu, pv) = (position[u], position[v]);
            rows[pu * self.words + pv / 64] |= 1 << (pv % 64);
            rows[pv * self.words + pu / 64] |= 1 << (pu % 64);
        }
        rows
    }

    fn run(&mut self, cells: Vec<Vec<usize>>) {
        let cells = self.refine(cells);
        match cells.iter().position(|c| c.len() > 1) {
            None => {
                let mut position = vec![0; self.g.order()];
                for (i, cell) in cells.iter().enumerate() {
                    position[cell[0]] = i;
                }
                let cert = self.certificate(&position);
                let better = match &self.best {
                    None => true,
                    Some((b, _)) => cert.cmp(b) == Ordering::Greater,
                };
                if better {
                    self.best = Some((cert, position));
                }
            }
            Some(target) => {
                let mut tried: Vec<usize> = Vec::new();
                for &v in &cells[target] {
                    if tried.iter().any(|&t| self.twins(t, v)) {
                        continue;
                    }
                    tried.push(v);
                    let mut next = Vec::with_capacity(cells.len() + 1);
                    next.extend_from_slice(&cells[..target]);
                    next.push(vec![v]);
                    next.push(cells[target].iter().copied().filter(|&w| w != v).collect());
                    next.extend_from_slice(&cells[target + 1..]);
                    self.run(next);
                }
            }
        }
    }
}

/// Canonical relabeling: returns the certificate and `position[v]`, the new
/// label of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> (CanonicalForm, Vec<usize>) {
    let n = g.order();
    if n == 0 {
        return (CanonicalForm { n: 0, rows: vec![] }, vec![]);
    }
    let mut search = Search::new(g);
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (g.degree(v), v));
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for v in by_degree {
        match cells.last_mut() {
            Some(cell) if g.degree(cell[0]) == g.degree(v) => cell.push(v),
            _ => cells.push(vec![v]),
        }
    }
    search.run(cells);
    let (rows, position) = search.best.expect("search visits at least one leaf");
    (CanonicalForm { n, rows }, position)
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).0
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.size() != h.size() {
        return false;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    dg == dh && canonical_form(g) == canonical_form(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..=p.len() {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    /// Exhaustive oracle: try every bijection.
    fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
        g.order() == h.order()
            && g.size() == h.size()
            && permutations(g.order()).iter().any(|p| g.relabel(p) == *h)
    }

    #[test]
    fn relabeled_cycle_is_isomorphic() {
        let c4 = Graph::cycle(4);
        let r = c4.relabel(&[2, 0, 3, 1]);
        assert!(is_isomorphic(&c4, &r));
        assert_eq!(canonical_form(&c4).to_graph(), canonical_form(&r).to_graph());
    }

    #[test]
    fn path_and_star_differ() {
        assert!(!is_isomorphic(&Graph::path(4), &Graph::star(3)));
    }

    #[test]
    fn canonical_labeling_relabels_to_certificate() {
        let mut g = Graph::cycle(5);
        g.attach_path(2, 3).unwrap();
        let (form, position) = canonical_labeling(&g);
        assert_eq!(g.relabel(&position), form.to_graph());
    }

    #[test]
    fn agrees_with_brute_force_on_all_graphs_of_order_5() {
        let pairs: Vec<(usize, usize)> = (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))).collect();
        let graphs: Vec<Graph> = (0u32..1 << pairs.len())
            .step_by(7)
            .map(|mask| {
                let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| *e).collect();
                Graph::from_edges(5, &edges).unwrap()
            })
            .collect();
        for (i, g) in graphs.iter().enumerate().take(60) {
            for h in graphs.iter().skip(i).take(40) {
                assert_eq!(is_isomorphic(g, h), brute_isomorphic(g, h), "{:?} vs {:?}", g.edges(), h.edges());
            }
        }
    }

    #[test]
    fn many_twin_leaves_are_cheap() {
        let g = Graph::star(40);
        let h = g.relabel(&(0..41).rev().collect::<Vec<_>>());
        assert!(is_isomorphic(&g, &h));
    }
}
