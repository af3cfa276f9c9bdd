//! Generators for the named unicyclic and bicyclic families.
//!
//! # Labeling
//!
//! Base vertices come first, then the `s` pendant leaves, then the vertices
//! of the path of length `a` (from the base outward), then those of the path
//! of length `b`.
//!
//! * Triangle bases: `w1 = 0`, `w2 = 1`, `w3 = 2`.
//! * The bicyclic base on four vertices: `w1 = 0`, `w2 = 1`, `w3 = 2`,
//!   `w4 = 3` with edges `w1w2, w1w4, w3w2, w3w4, w2w4`, so `w2` and `w4`
//!   have degree 3 and `w1`, `w3` have degree 2.
//! * The small infinity graph: centre `w0 = 0` and triangles `w0 w1 w2`,
//!   `w0 w3 w4`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A member of a named family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// Triangle with `s` pendant edges and paths `a`, `b` at `w2`.
    Delta1 { s: usize, a: usize, b: usize },
    /// Triangle with `s` pendant edges and path `a` at `w2`, path `b` at `w3`.
    Delta2 { s: usize, a: usize, b: usize },
    /// The five attachments to the four-vertex bicyclic base, `i` in `1..=5`.
    Theta { i: usize, s: usize, a: usize, b: usize },
    /// Cycles `C_n1`, `C_n2` joined by a path on `n3` vertices.
    InfinityBase { n1: usize, n2: usize, n3: usize },
    /// Three internally disjoint paths of lengths `n1 >= n2 >= n3`.
    ThetaBase { n1: usize, n2: usize, n3: usize },
    UStar2 { n: usize, d: usize },
    BStar3 { n: usize, d: usize },
    BStar5 { n: usize, d: usize },
    /// `G_i`, `i` in `1..=4`.
    G { i: usize, z: usize },
    /// `H_i(a, b)`: `G_i` with its roots extended to pendant paths.
    H { i: usize, a: usize, b: usize, z: usize },
    InfSmall,
    ThetaSmall,
}

fn bad(reason: impl Into<String>) -> Error {
    Error::InvalidFamilyParams(reason.into())
}

fn attach_star(g: &mut Graph, root: usize, s: usize) {
    for _ in 0..s {
        let leaf = g.add_vertex();
        g.add_edge(root, leaf).expect("fresh leaf");
    }
}

fn attach(g: &mut Graph, root: usize, len: usize) {
    g.attach_path(root, len).expect("root exists");
}

/// The four-vertex bicyclic base.
pub fn theta_small() -> Graph {
    Graph::from_edges(4, &[(0, 1), (0, 3), (2, 1), (2, 3), (1, 3)]).expect("valid")
}

pub fn inf_small() -> Graph {
    Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).expect("valid")
}

pub fn delta(i: usize, s: usize, a: usize, b: usize) -> Result<Graph> {
    let mut g = Graph::cycle(3);
    let (w2, w3) = (1, 2);
    attach_star(&mut g, w2, s);
    attach(&mut g, w2, a);
    match i {
        1 => attach(&mut g, w2, b),
        2 => attach(&mut g, w3, b),
        _ => return Err(bad(format!("triangle family index {i} not in 1..=2"))),
    }
    Ok(g)
}

pub fn theta(i: usize, s: usize, a: usize, b: usize) -> Result<Graph> {
    let mut g = theta_small();
    let (w1, w2, w3, w4) = (0, 1, 2, 3);
    let (star, pa, pb) = match i {
        1 => (w1, w1, w1),
        2 => (w2, w2, w2),
        3 => (w2, w2, w4),
        4 => (w1, w1, w3),
        5 => (w2, w1, w3),
        _ => return Err(bad(format!("bicyclic family index {i} not in 1..=5"))),
    };
    attach_star(&mut g, star, s);
    attach(&mut g, pa, a);
    attach(&mut g, pb, b);
    Ok(g)
}

/// Vertex `0` is the joint of the first cycle, the path follows, and the
/// second cycle starts at the far end of the path.
pub fn infinity_base(n1: usize, n2: usize, n3: usize) -> Result<Graph> {
    if n1 < 3 || n2 < 3 || n3 < 1 {
        return Err(bad("infinity base needs n1, n2 >= 3 and n3 >= 1"));
    }
    let mut g = Graph::cycle(n1);
    let path = g.attach_path(0, n3 - 1).expect("root exists");
    let joint = *path.last().unwrap_or(&0);
    let first = g.order();
    for k in 0..n2 - 1 {
        g.add_vertex();
        let prev = if k == 0 { joint } else { first + k - 1 };
        g.add_edge(prev, first + k).expect("fresh vertex");
    }
    g.add_edge(first + n2 - 2, joint).expect("closes the second cycle");
    Ok(g)
}

/// Ends `u = 0` and `v = 1`, then the interiors of the three paths.
pub fn theta_base(n1: usize, n2: usize, n3: usize) -> Result<Graph> {
    if !(n1 >= n2 && n2 >= n3 && n3 >= 1 && n2 >= 2) {
        return Err(bad("theta base needs n1 >= n2 >= n3 >= 1 and n2 >= 2"));
    }
    let mut g = Graph::new(2);
    for len in [n1, n2, n3] {
        let mut prev = 0;
        for _ in 1..len {
            let w = g.add_vertex();
            g.add_edge(prev, w).expect("fresh vertex");
            prev = w;
        }
        g.add_edge(prev, 1).expect("paths are internally disjoint");
    }
    Ok(g)
}

fn check_order_diameter(g: Graph, n: usize, d: usize, what: &str) -> Result<Graph> {
    let got = (g.order(), g.diameter());
    if got != (n, Some(d)) {
        return Err(bad(format!("{what}: generated order {} and diameter {:?}, expected {n} and {d}", got.0, got.1)));
    }
    Ok(g)
}

/// Split of `len` into `a >= b >= a - 1`.
fn balanced(len: usize) -> (usize, usize) {
    (len.div_ceil(2), len / 2)
}

/// Parameters `(s, a, b)` of `U2*(n, d)`.
pub fn ustar2_params(n: usize, d: usize) -> Result<(usize, usize, usize)> {
    if n < 4 || d < 2 || d + 2 > n {
        return Err(bad(format!("U2*({n},{d}) needs n >= 4 and 2 <= d <= n - 2")));
    }
    let (a, b) = balanced(d - 1);
    Ok((n - 3 - a - b, a, b))
}

pub fn ustar2(n: usize, d: usize) -> Result<Graph> {
    let (s, a, b) = ustar2_params(n, d)?;
    check_order_diameter(delta(2, s, a, b)?, n, d, "U2*")
}

pub fn bstar3_params(n: usize, d: usize) -> Result<(usize, usize, usize)> {
    if d < 2 || d + 3 > n {
        return Err(bad(format!("B3*({n},{d}) needs 2 <= d <= n - 3")));
    }
    let (a, b) = balanced(d - 1);
    Ok((n - 4 - a - b, a, b))
}

pub fn bstar3(n: usize, d: usize) -> Result<Graph> {
    let (s, a, b) = bstar3_params(n, d)?;
    check_order_diameter(theta(3, s, a, b)?, n, d, "B3*")
}

pub fn bstar5_params(n: usize, d: usize) -> Result<(usize, usize, usize)> {
    if d < 3 || d + 2 > n {
        return Err(bad(format!("B5*({n},{d}) needs 3 <= d <= n - 2")));
    }
    let (a, b) = balanced(d - 2);
    Ok((n - 4 - a - b, a, b))
}

pub fn bstar5(n: usize, d: usize) -> Result<Graph> {
    let (s, a, b) = bstar5_params(n, d)?;
    check_order_diameter(theta(5, s, a, b)?, n, d, "B5*")
}

/// `G_i` with its two roots `(u_1, v_1)`.
pub fn g_graph(i: usize, z: usize) -> Result<(Graph, usize, usize)> {
    let (w1, w3, w4) = (0, 2, 3);
    Ok(match i {
        1 => (theta(3, z, 1, 0)?, 4 + z, w4),
        2 => (theta(5, z + 1, 0, 0)?, w1, w3),
        3 => (theta(3, z, 1, 1)?, 4 + z, 5 + z),
        4 => (theta(5, z + 1, 0, 1)?, w1, 5 + z),
        _ => return Err(bad(format!("G_{i}: index not in 1..=4"))),
    })
}

/// `H_i(a, b)`: pendant paths of lengths `a - 1` and `b - 1` at `u_1` and
/// `v_1`, so that `H_i(1, 1) = G_i`.
pub fn hgraph(i: usize, a: usize, b: usize, z: usize) -> Result<Graph> {
    if a < 1 || b < 1 {
        return Err(bad("H_i(a, b) needs a, b >= 1"));
    }
    let (mut g, u1, v1) = g_graph(i, z)?;
    attach(&mut g, u1, a - 1);
    attach(&mut g, v1, b - 1);
    Ok(g)
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph> {
        match *self {
            FamilySpec::Delta1 { s, a, b } => delta(1, s, a, b),
            FamilySpec::Delta2 { s, a, b } => delta(2, s, a, b),
            FamilySpec::Theta { i, s, a, b } => theta(i, s, a, b),
            FamilySpec::InfinityBase { n1, n2, n3 } => infinity_base(n1, n2, n3),
            FamilySpec::ThetaBase { n1, n2, n3 } => theta_base(n1, n2, n3),
            FamilySpec::UStar2 { n, d } => ustar2(n, d),
            FamilySpec::BStar3 { n, d } => bstar3(n, d),
            FamilySpec::BStar5 { n, d } => bstar5(n, d),
            FamilySpec::G { i, z } => g_graph(i, z).map(|(g, _, _)| g),
            FamilySpec::H { i, a, b, z } => hgraph(i, a, b, z),
            FamilySpec::InfSmall => Ok(inf_small()),
            FamilySpec::ThetaSmall => Ok(theta_small()),
        }
    }

    /// Cyclomatic number of every member.
    pub fn cyclomatic(&self) -> usize {
        match self {
            FamilySpec::Delta1 { .. } | FamilySpec::Delta2 { .. } | FamilySpec::UStar2 { .. } => 1,
            _ => 2,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Delta1 { s, a, b } => write!(f, "delta1:s={s},a={a},b={b}"),
            FamilySpec::Delta2 { s, a, b } => write!(f, "delta2:s={s},a={a},b={b}"),
            FamilySpec::Theta { i, s, a, b } => write!(f, "theta{i}:s={s},a={a},b={b}"),
            FamilySpec::InfinityBase { n1, n2, n3 } => write!(f, "inf:n1={n1},n2={n2},n3={n3}"),
            FamilySpec::ThetaBase { n1, n2, n3 } => write!(f, "thetabase:n1={n1},n2={n2},n3={n3}"),
            FamilySpec::UStar2 { n, d } => write!(f, "ustar2:n={n},d={d}"),
            FamilySpec::BStar3 { n, d } => write!(f, "bstar3:n={n},d={d}"),
            FamilySpec::BStar5 { n, d } => write!(f, "bstar5:n={n},d={d}"),
            FamilySpec::G { i, z } => write!(f, "g{i}:z={z}"),
            FamilySpec::H { i, a, b, z } => write!(f, "h{i}:a={a},b={b},z={z}"),
            FamilySpec::InfSmall => write!(f, "infsmall"),
            FamilySpec::ThetaSmall => write!(f, "thetasmall"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Parses strings such as `theta3:s=3,a=5,b=4` or `bstar3:n=16,d=9`.
    fn from_str(input: &str) -> Result<Self> {
        let fail = |reason: String| Error::FamilyParse { input: input.to_string(), reason };
        let (name, rest) = input.trim().split_once(':').unwrap_or((input.trim(), ""));
        let name = name.to_ascii_lowercase();
        let mut params: Vec<(String, usize)> = Vec::new();
        for item in rest.split(',').filter(|s| !s.trim().is_empty()) {
            let (k, v) = item.split_once('=').ok_or_else(|| fail(format!("expected key=value, got {item:?}")))?;
            let v = v.trim().parse().map_err(|_| fail(format!("{:?} is not a nonnegative integer", v.trim())))?;
            params.push((k.trim().to_ascii_lowercase(), v));
        }
        let take = |expected: &[&str]| -> Result<Vec<usize>> {
            for (k, _) in &params {
                if !expected.contains(&k.as_str()) {
                    return Err(fail(format!("unknown parameter {k:?} (expected {})", expected.join(", "))));
                }
            }
            expected
                .iter()
                .map(|e| {
                    params
                        .iter()
                        .find(|(k, _)| k == e)
                        .map(|(_, v)| *v)
                        .ok_or_else(|| fail(format!("missing parameter {e:?}")))
                })
                .collect()
        };
        let index = |prefix: &str| name.strip_prefix(prefix).and_then(|i| i.parse::<usize>().ok());
        let spec = match name.as_str() {
            "delta1" | "delta2" => {
                let p = take(&["s", "a", "b"])?;
                let (s, a, b) = (p[0], p[1], p[2]);
                if name == "delta1" { FamilySpec::Delta1 { s, a, b } } else { FamilySpec::Delta2 { s, a, b } }
            }
            "inf" => {
                let p = take(&["n1", "n2", "n3"])?;
                FamilySpec::InfinityBase { n1: p[0], n2: p[1], n3: p[2] }
            }
            "thetabase" => {
                let p = take(&["n1", "n2", "n3"])?;
                FamilySpec::ThetaBase { n1: p[0], n2: p[1], n3: p[2] }
            }
            "ustar2" | "bstar3" | "bstar5" => {
                let p = take(&["n", "d"])?;
                let (n, d) = (p[0], p[1]);
                match name.as_str() {
                    "ustar2" => FamilySpec::UStar2 { n, d },
                    "bstar3" => FamilySpec::BStar3 { n, d },
                    _ => FamilySpec::BStar5 { n, d },
                }
            }
            "infsmall" => {
                take(&[])?;
                FamilySpec::InfSmall
            }
            "thetasmall" => {
                take(&[])?;
                FamilySpec::ThetaSmall
            }
            _ => match (index("thetabase"), index("theta"), index("g"), index("h")) {
                (None, Some(i), _, _) if (1..=5).contains(&i) => {
                    let p = take(&["s", "a", "b"])?;
                    FamilySpec::Theta { i, s: p[0], a: p[1], b: p[2] }
                }
                (_, _, Some(i), _) if (1..=4).contains(&i) => FamilySpec::G { i, z: take(&["z"])?[0] },
                (_, _, _, Some(i)) if (1..=4).contains(&i) => {
                    let p = take(&["a", "b", "z"])?;
                    FamilySpec::H { i, a: p[0], b: p[1], z: p[2] }
                }
                _ => return Err(fail(format!("unknown family {name:?}"))),
            },
        };
        Ok(spec)
    }
}

/// Every family member of order at most `max_n` with a family index, used
/// by the oracle suites. Parameterised families are listed for all
/// `(s, a, b)` that fit; the named extremal graphs for every feasible
/// `(n, d)`.
pub fn catalog(max_n: usize) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    let triples = |room: usize| {
        (0..=room).flat_map(move |s| (0..=room - s).flat_map(move |a| (0..=room - s - a).map(move |b| (s, a, b))))
    };
    if max_n >= 3 {
        for (s, a, b) in triples(max_n - 3) {
            if a >= b {
                out.push(FamilySpec::Delta1 { s, a, b });
            }
            out.push(FamilySpec::Delta2 { s, a, b });
        }
    }
    if max_n >= 4 {
        out.push(FamilySpec::ThetaSmall);
        for i in 1..=5 {
            for (s, a, b) in triples(max_n - 4) {
                if i <= 2 && a < b {
                    continue;
                }
                out.push(FamilySpec::Theta { i, s, a, b });
            }
        }
    }
    if max_n >= 5 {
        out.push(FamilySpec::InfSmall);
    }
    for n in 4..=max_n {
        for d in 2..n {
            if ustar2_params(n, d).is_ok() {
                out.push(FamilySpec::UStar2 { n, d });
            }
            if bstar3_params(n, d).is_ok() {
                out.push(FamilySpec::BStar3 { n, d });
            }
            if bstar5_params(n, d).is_ok() {
                out.push(FamilySpec::BStar5 { n, d });
            }
        }
    }
    for i in 1..=4 {
        for z in 0..=max_n {
            let Ok((g, _, _)) = g_graph(i, z) else { continue };
            if g.order() > max_n {
                break;
            }
            out.push(FamilySpec::G { i, z });
            for a in 1..=max_n {
                for b in 1..=max_n {
                    if g.order() + a + b - 2 <= max_n && (a, b) != (1, 1) {
                        out.push(FamilySpec::H { i, a, b, z });
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_labeling() {
        let t = theta_small();
        assert_eq!(t.degrees(), vec![2, 3, 2, 3]);
        assert_eq!(inf_small().degree(0), 4);
        let tb = theta_base(2, 2, 1).unwrap();
        let mut d = tb.degrees();
        d.sort_unstable();
        assert_eq!(d, vec![2, 2, 3, 3]);
    }

    #[test]
    fn small_examples() {
        let g = delta(2, 0, 1, 1).unwrap();
        assert_eq!((g.order(), g.diameter()), (5, Some(3)));
        assert_eq!(ustar2_params(7, 3).unwrap(), (2, 1, 1));
        assert_eq!(ustar2_params(5, 2).unwrap(), (1, 1, 0));
        assert_eq!(ustar2_params(9, 7).unwrap().0, 0);
        assert_eq!(bstar3_params(16, 9).unwrap(), (4, 4, 4));
        assert_eq!(bstar5_params(16, 9).unwrap(), (5, 4, 3));
        assert_eq!(bstar3_params(6, 2).unwrap(), (1, 1, 0));
        assert!(bstar5_params(8, 2).is_err());
        assert!(ustar2_params(6, 5).is_err());
    }

    #[test]
    fn infinity_base_shapes() {
        let g = infinity_base(3, 3, 1).unwrap();
        assert_eq!((g.order(), g.size()), (5, 6));
        assert_eq!(g.degree(0), 4);
        let g = infinity_base(4, 5, 3).unwrap();
        assert_eq!((g.order(), g.size(), g.cyclomatic_number().unwrap()), (10, 11, 2));
    }

    #[test]
    fn h_of_one_one_is_g() {
        for i in 1..=4 {
            for z in 0..3 {
                assert_eq!(hgraph(i, 1, 1, z).unwrap(), g_graph(i, z).unwrap().0);
            }
        }
        assert!(hgraph(1, 0, 1, 0).is_err());
    }

    #[test]
    fn parse_round_trip() {
        for s in [
            "theta3:s=3,a=5,b=4",
            "bstar3:n=16,d=9",
            "g1:z=2",
            "h3:a=2,b=2,z=0",
            "inf:n1=3,n2=4,n3=2",
            "thetabase:n1=3,n2=2,n3=1",
            "infsmall",
            "thetasmall",
            "delta1:s=0,a=2,b=1",
            "ustar2:n=7,d=3",
        ] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        for bad in ["theta6:s=1,a=1,b=1", "bstar3:n=16", "bstar3:n=16,d=x", "nope", "g1:z=1,q=2", "theta3:s"] {
            assert!(bad.parse::<FamilySpec>().is_err(), "{bad}");
        }
    }
}
