//! Exact characteristic polynomials of `A_alpha(G)` and the vertex-deletion
//! calculus built on them.
//!
//! All polynomials live in `Q[x]` with alpha baked into the coefficients.
//! Deleting vertices always happens on the weighted digraph of the full
//! matrix, so the vertices that remain keep the loop weight `alpha * deg_G`.

pub mod appendix;
pub mod det;
pub mod oracle;
pub mod roots;

use num_traits::{One, Zero};

use crate::alpha::check_alpha;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::{int, Rational, RationalPolynomial};

/// Exact entries of `A_alpha(G) = alpha D + (1 - alpha) A`.
pub fn alpha_entries(g: &Graph, alpha: &Rational) -> Result<Vec<Vec<Rational>>> {
    check_alpha(alpha)?;
    let n = g.order();
    let off = Rational::one() - alpha;
    let mut m = vec![vec![Rational::zero(); n]; n];
    for (v, row) in m.iter_mut().enumerate() {
        row[v] = alpha * int(g.degree(v) as i64);
        for &w in g.neighbors(v) {
            row[w] = off.clone();
        }
    }
    Ok(m)
}

/// `det(xI - A_alpha(G))`.
pub fn phi(g: &Graph, alpha: &Rational) -> Result<RationalPolynomial> {
    Ok(WeightedDigraph::coates(g, alpha)?.charpoly())
}

/// Characteristic polynomial of `A_alpha(G)` with the rows and columns of
/// `u_set` removed.
pub fn psi(g: &Graph, u_set: &[usize], alpha: &Rational) -> Result<RationalPolynomial> {
    for &u in u_set {
        g.check_vertex(u)?;
    }
    Ok(WeightedDigraph::coates(g, alpha)?.delete(u_set).charpoly())
}

/// `f_t`: the characteristic polynomial of a path on `t` vertices whose
/// first vertex carries the loop weight `2 alpha` of an inner vertex.
pub fn path_poly(t: usize, alpha: &Rational) -> RationalPolynomial {
    path_polys(t, alpha).pop().expect("at least f_0")
}

/// `[f_0, ..., f_t]`.
pub fn path_polys(t: usize, alpha: &Rational) -> Vec<RationalPolynomial> {
    let c = (Rational::one() - alpha) * (Rational::one() - alpha);
    let step = RationalPolynomial::linear(alpha * int(2));
    let mut out = vec![RationalPolynomial::one()];
    if t >= 1 {
        out.push(RationalPolynomial::linear(alpha.clone()));
    }
    for k in 2..=t {
        let next = &(&step * &out[k - 1]) - &out[k - 2].scale(&c);
        out.push(next);
    }
    out
}

/// `phi_alpha(P_t) = f_t + alpha f_(t-1)`; the empty path gives 1.
pub fn phi_path(t: usize, alpha: &Rational) -> RationalPolynomial {
    if t == 0 {
        return RationalPolynomial::one();
    }
    let f = path_polys(t, alpha);
    &f[t] + &f[t - 1].scale(alpha)
}

/// Coates digraph of a symmetric rational matrix: arc `(i, j)` carries
/// `a_ij`, loops carry the diagonal.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedDigraph {
    weights: Vec<Vec<Rational>>,
}

impl WeightedDigraph {
    pub fn from_matrix(weights: Vec<Vec<Rational>>) -> Result<Self> {
        let n = weights.len();
        for (i, row) in weights.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch { expected: n, got: row.len() });
            }
            for j in 0..i {
                if row[j] != weights[j][i] {
                    return Err(Error::InvalidFamilyParams(format!("weights ({i},{j}) and ({j},{i}) differ")));
                }
            }
        }
        Ok(WeightedDigraph { weights })
    }

    pub fn coates(g: &Graph, alpha: &Rational) -> Result<Self> {
        Ok(WeightedDigraph { weights: alpha_entries(g, alpha)? })
    }

    pub fn order(&self) -> usize {
        self.weights.len()
    }

    pub fn weight(&self, i: usize, j: usize) -> &Rational {
        &self.weights[i][j]
    }

    pub fn matrix(&self) -> &[Vec<Rational>] {
        &self.weights
    }

    /// Removes the given vertices; the others keep their loops and arcs and
    /// are renumbered in increasing order.
    pub fn delete(&self, vertices: &[usize]) -> Self {
        let keep: Vec<usize> = (0..self.order()).filter(|v| !vertices.contains(v)).collect();
        let weights = keep
            .iter()
            .map(|&i| keep.iter().map(|&j| self.weights[i][j].clone()).collect())
            .collect();
        WeightedDigraph { weights }
    }

    pub fn charpoly(&self) -> RationalPolynomial {
        det::charpoly(&self.weights)
    }

    /// Undirected cycles of length at least three through `v`, each listed
    /// once as a vertex sequence starting at `v`.
    pub fn cycles_through(&self, v: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut path = vec![v];
        let mut on_path = vec![false; self.order()];
        on_path[v] = true;
        self.extend_cycles(v, &mut path, &mut on_path, &mut out);
        out
    }

    fn extend_cycles(&self, v: usize, path: &mut Vec<usize>, on_path: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let last = *path.last().unwrap();
        for w in 0..self.order() {
            if w == last || self.weights[last][w].is_zero() {
                continue;
            }
            if w == v {
                // orient each cycle once: second vertex below the last one
                if path.len() >= 3 && path[1] < last {
                    out.push(path.clone());
                }
            } else if !on_path[w] {
                on_path[w] = true;
                path.push(w);
                self.extend_cycles(v, path, on_path, out);
                path.pop();
                on_path[w] = false;
            }
        }
    }

    fn cycle_weight(&self, cycle: &[usize]) -> Rational {
        (0..cycle.len())
            .map(|i| &self.weights[cycle[i]][cycle[(i + 1) % cycle.len()]])
            .fold(Rational::one(), |acc, w| acc * w)
    }
}

/// Characteristic polynomial by expansion at vertex `v`:
/// `(x - a_vv) phi(D - v) - sum_u a_uv^2 phi(D - u - v) - 2 sum_C w(C) phi(D - V(C))`.
pub fn schwenk_vertex(d: &WeightedDigraph, v: usize) -> Result<RationalPolynomial> {
    let n = d.order();
    if v >= n {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    let mut total = &RationalPolynomial::linear(d.weight(v, v).clone()) * &d.delete(&[v]).charpoly();
    for u in (0..n).filter(|&u| u != v && !d.weight(u, v).is_zero()) {
        let w = d.weight(u, v);
        total = &total - &d.delete(&[u, v]).charpoly().scale(&(w * w));
    }
    for cycle in d.cycles_through(v) {
        let w = d.cycle_weight(&cycle) * int(2);
        total = &total - &d.delete(&cycle).charpoly().scale(&w);
    }
    Ok(total)
}

/// `phi(G(u,v)H) = phi(G) phi(H - v) + phi(G - u) phi(H) - x phi(G - u) phi(H - v)`.
///
/// For `A_alpha` the merged root's loop weight is the sum of the two roots'
/// loop weights, so each piece is passed with its own degrees.
pub fn coalesce_phi(
    g_phi: &RationalPolynomial,
    g_psi_u: &RationalPolynomial,
    h_phi: &RationalPolynomial,
    h_psi_v: &RationalPolynomial,
) -> RationalPolynomial {
    let x = RationalPolynomial::x();
    &(&(g_phi * h_psi_v) + &(g_psi_u * h_phi)) - &(&(&x * g_psi_u) * h_psi_v)
}

/// Ingredients of a rooted product `G(H_1, H_2)` with roots `u, v` of `G`
/// and `w_1, w_2` of the `H_i`.
#[derive(Clone, Debug)]
pub struct RootedProductParts {
    /// `phi(G)`
    pub g: RationalPolynomial,
    /// `psi(G, u)`
    pub g_u: RationalPolynomial,
    /// `psi(G, v)`
    pub g_v: RationalPolynomial,
    /// `psi(G, {u, v})`
    pub g_uv: RationalPolynomial,
    /// `phi(H_1)`
    pub g1: RationalPolynomial,
    /// `psi(H_1, w_1)`
    pub g1p: RationalPolynomial,
    /// `phi(H_2)`
    pub g2: RationalPolynomial,
    /// `psi(H_2, w_2)`
    pub g2p: RationalPolynomial,
}

pub fn rooted_product_phi(p: &RootedProductParts) -> RationalPolynomial {
    let x = RationalPolynomial::x();
    let e1 = &p.g1 - &(&x * &p.g1p);
    let e2 = &p.g2 - &(&x * &p.g2p);
    let t1 = &(&p.g * &p.g1p) * &p.g2p;
    let t2 = &(&p.g_u * &e1) * &p.g2p;
    let t3 = &(&p.g_v * &e2) * &p.g1p;
    let t4 = &(&p.g_uv * &e1) * &e2;
    &(&(&t1 + &t2) + &t3) + &t4
}

/// `DF_1 psi^2 + DF_2 (phi - x psi) psi + DF_3 (phi - x psi)^2` with
/// `phi = phi(G)` and `psi = psi(G, u)`.
pub fn rooted_product_difference(
    df1: &RationalPolynomial,
    df2: &RationalPolynomial,
    df3: &RationalPolynomial,
    g_phi: &RationalPolynomial,
    g_psi_u: &RationalPolynomial,
) -> RationalPolynomial {
    let e = g_phi - &(&RationalPolynomial::x() * g_psi_u);
    let a = &(df1 * g_psi_u) * g_psi_u;
    let b = &(df2 * &e) * g_psi_u;
    let c = &(df3 * &e) * &e;
    &(&a + &b) + &c
}

/// `f_(k+1) f_l - f_k f_(l+1)`, checked against the closed form
/// `c^k (alpha f_p + c f_(p-1))` with `c = (1 - alpha)^2` and `p = l - k`.
pub fn path_wronskian(k: usize, l: usize, alpha: &Rational) -> Result<RationalPolynomial> {
    if k < 1 || l < k {
        return Err(Error::IndexOutOfRange(format!("need l >= k >= 1, got k={k}, l={l}")));
    }
    check_alpha(alpha)?;
    let f = path_polys(l + 1, alpha);
    let direct = &(&f[k + 1] * &f[l]) - &(&f[k] * &f[l + 1]);
    let p = l - k;
    let closed = if p == 0 {
        RationalPolynomial::zero()
    } else {
        let c = (Rational::one() - alpha) * (Rational::one() - alpha);
        let inner = &f[p].scale(alpha) + &f[p - 1].scale(&c);
        inner.scale(&num_traits::pow(c, k))
    };
    if direct != closed {
        return Err(Error::ClosedFormMismatch { k, l });
    }
    Ok(direct)
}
