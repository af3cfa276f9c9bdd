//! Cross-checks of the deletion calculus against direct determinants.
//!
//! The vertex expansion is evaluated at chosen vertices. The coalescence
//! formula is tried at every cut vertex, and the rooted-product formula at
//! consecutive pairs of cut vertices. Each result is compared with `phi(G)`.

use serde::Serialize;

use super::{coalesce_phi, phi, psi, rooted_product_phi, schwenk_vertex, RootedProductParts, WeightedDigraph};
use crate::error::Result;
use crate::graph::Graph;
use crate::poly::{Rational, RationalPolynomial};

/// Which vertices the vertex expansion is evaluated at.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExpansionScope {
    Every,
    /// At most this many vertices, spread evenly over the labels.
    Sample(usize),
}

/// Counts of identities checked and failed for one graph and alpha.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct OracleTally {
    pub expansion_checked: usize,
    pub expansion_failed: Vec<usize>,
    pub coalescence_checked: usize,
    pub coalescence_failed: Vec<usize>,
    pub rooted_checked: usize,
    pub rooted_failed: Vec<(usize, usize)>,
}

impl OracleTally {
    pub fn mismatches(&self) -> usize {
        self.expansion_failed.len() + self.coalescence_failed.len() + self.rooted_failed.len()
    }

    pub fn checked(&self) -> usize {
        self.expansion_checked + self.coalescence_checked + self.rooted_checked
    }

    pub fn absorb(&mut self, other: OracleTally) {
        self.expansion_checked += other.expansion_checked;
        self.expansion_failed.extend(other.expansion_failed);
        self.coalescence_checked += other.coalescence_checked;
        self.coalescence_failed.extend(other.coalescence_failed);
        self.rooted_checked += other.rooted_checked;
        self.rooted_failed.extend(other.rooted_failed);
    }
}

/// `g[keep]` together with the position of `root` inside it.
fn piece(g: &Graph, keep: &[usize], root: usize) -> (Graph, usize) {
    let at = keep.iter().position(|&v| v == root).expect("root is kept");
    (g.induced_subgraph(keep), at)
}

/// Components of `G - u`.
fn branches(g: &Graph, u: usize) -> Vec<Vec<usize>> {
    let rest: Vec<usize> = (0..g.order()).filter(|&w| w != u).collect();
    g.induced_subgraph(&rest)
        .components()
        .into_iter()
        .map(|c| c.into_iter().map(|i| rest[i]).collect())
        .collect()
}

fn complement(n: usize, drop: &[usize]) -> Vec<usize> {
    (0..n).filter(|v| !drop.contains(v)).collect()
}

fn with_root(part: &[usize], root: usize) -> Vec<usize> {
    let mut out = part.to_vec();
    out.push(root);
    out.sort_unstable();
    out
}

fn coalescence_holds(g: &Graph, u: usize, direct: &RationalPolynomial, alpha: &Rational) -> Result<bool> {
    let branch = &branches(g, u)[0];
    let (h, hv) = piece(g, &with_root(branch, u), u);
    let (rest, gu) = piece(g, &complement(g.order(), branch), u);
    let rebuilt = coalesce_phi(&phi(&rest, alpha)?, &psi(&rest, &[gu], alpha)?, &phi(&h, alpha)?, &psi(&h, &[hv], alpha)?);
    Ok(&rebuilt == direct)
}

fn rooted_holds(g: &Graph, u: usize, v: usize, direct: &RationalPolynomial, alpha: &Rational) -> Result<bool> {
    let pick = |at: usize, avoid: usize| branches(g, at).into_iter().find(|c| !c.contains(&avoid)).expect("cut vertex");
    let (c1, c2) = (pick(u, v), pick(v, u));
    let (h1, w1) = piece(g, &with_root(&c1, u), u);
    let (h2, w2) = piece(g, &with_root(&c2, v), v);
    let core: Vec<usize> = complement(g.order(), &[c1.as_slice(), c2.as_slice()].concat());
    let (base, bu) = piece(g, &core, u);
    let bv = core.iter().position(|&w| w == v).expect("v is kept");
    let parts = RootedProductParts {
        g: phi(&base, alpha)?,
        g_u: psi(&base, &[bu], alpha)?,
        g_v: psi(&base, &[bv], alpha)?,
        g_uv: psi(&base, &[bu, bv], alpha)?,
        g1: phi(&h1, alpha)?,
        g1p: psi(&h1, &[w1], alpha)?,
        g2: phi(&h2, alpha)?,
        g2p: psi(&h2, &[w2], alpha)?,
    };
    Ok(&rooted_product_phi(&parts) == direct)
}

/// Runs every applicable identity on a connected graph.
pub fn check_graph(g: &Graph, alpha: &Rational, scope: ExpansionScope) -> Result<OracleTally> {
    let digraph = WeightedDigraph::coates(g, alpha)?;
    let direct = digraph.charpoly();
    let n = g.order();
    let mut tally = OracleTally::default();

    let vertices: Vec<usize> = match scope {
        ExpansionScope::Every => (0..n).collect(),
        ExpansionScope::Sample(k) if k >= n => (0..n).collect(),
        ExpansionScope::Sample(k) => {
            let mut picked: Vec<usize> = (0..k).map(|i| i * (n - 1) / (k - 1).max(1)).collect();
            picked.dedup();
            picked
        }
    };
    for v in vertices {
        tally.expansion_checked += 1;
        if schwenk_vertex(&digraph, v)? != direct {
            tally.expansion_failed.push(v);
        }
    }

    let cuts = g.cut_vertices();
    for &u in &cuts {
        tally.coalescence_checked += 1;
        if !coalescence_holds(g, u, &direct, alpha)? {
            tally.coalescence_failed.push(u);
        }
    }
    for pair in cuts.windows(2) {
        tally.rooted_checked += 1;
        if !rooted_holds(g, pair[0], pair[1], &direct, alpha)? {
            tally.rooted_failed.push((pair[0], pair[1]));
        }
    }
    Ok(tally)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{bstar3, theta};
    use crate::poly::{int, rational};

    #[test]
    fn small_family_members_agree() {
        for a in [int(0), rational(1, 3), rational(1, 2), rational(2, 3)] {
            for g in [bstar3(8, 4).unwrap(), theta(5, 1, 2, 1).unwrap(), Graph::path(5)] {
                let t = check_graph(&g, &a, ExpansionScope::Every).unwrap();
                assert_eq!(t.mismatches(), 0);
                assert!(t.coalescence_checked > 0 && t.rooted_checked > 0);
            }
        }
    }

    #[test]
    fn cycles_have_no_cut_vertices() {
        let t = check_graph(&Graph::cycle(5), &rational(1, 2), ExpansionScope::Sample(2)).unwrap();
        assert_eq!((t.expansion_checked, t.coalescence_checked, t.rooted_checked), (2, 0, 0));
    }
}
