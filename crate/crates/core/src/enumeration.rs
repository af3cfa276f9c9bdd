//! Exhaustive censuses of connected unicyclic and bicyclic graphs up to
//! isomorphism, and the alpha-spectral-radius maximizer of each
//! order/diameter class.
//!
//! Two generators are provided and kept independent of each other:
//!
//! * [`census`] grows every class from the cyclic bases by repeatedly adding
//!   a leaf. Any connected graph with a vertex of degree one is a smaller
//!   graph of the same cyclomatic number plus a leaf, and a graph of minimum
//!   degree two is its own base, so nothing is missed.
//! * [`census_by_subsets`] walks every `m`-subset of the edges of `K_n`,
//!   keeping connected labelings whose degree sequence is non-increasing.
//!   It is exponential and meant only as a cross-check at small orders.
//!
//! Both deduplicate by [`canonical_form`].

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::alpha::{check_alpha, format_alpha};
use crate::canon::{canonical_form, is_isomorphic, CanonicalForm};
use crate::charpoly::phi;
use crate::charpoly::roots::compare_largest_roots;
use crate::error::{Error, Result};
use crate::exec::{self, ExecMode};
use crate::families::{bstar3, bstar5, infinity_base, theta_base, ustar2};
use crate::graph::Graph;
use crate::graph6;
use crate::poly::Rational;
use crate::spectral::{spectral_radius, SpectralResult};

/// Largest order [`census`] accepts unless told otherwise.
pub const DEFAULT_CAP: usize = 11;
/// Largest order the subset generator accepts: `C(36, 10)` subsets at `n = 9`.
pub const SUBSET_CAP: usize = 9;
/// Radii closer than this to the maximum are settled exactly.
pub const DEFAULT_TIE_TOL: f64 = 1e-7;
/// Eigensolver residual target used for every census member.
pub const SOLVER_TOL: f64 = 1e-12;

/// The class of connected graphs with `n` vertices, diameter `d` and
/// `n + cyclomatic - 1` edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SearchSpace {
    pub n: usize,
    pub d: usize,
    pub cyclomatic: usize,
}

impl SearchSpace {
    pub fn new(n: usize, d: usize, cyclomatic: usize) -> Result<Self> {
        if !(1..=2).contains(&cyclomatic) {
            return Err(Error::InvalidSpace(format!("cyclomatic number must be 1 or 2, got {cyclomatic}")));
        }
        if n < 3 {
            return Err(Error::InvalidSpace(format!("order must be at least 3, got {n}")));
        }
        if d < 1 || d + 2 > n {
            return Err(Error::InvalidSpace(format!("diameter must lie in 1..={}, got {d}", n - 2)));
        }
        Ok(SearchSpace { n, d, cyclomatic })
    }

    pub fn size(&self) -> usize {
        self.n + self.cyclomatic - 1
    }
}

impl fmt::Display for SearchSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = if self.cyclomatic == 1 { "U" } else { "B" };
        write!(f, "{name}({},{})", self.n, self.d)
    }
}

/// Knobs shared by the census and argmax routines.
#[derive(Clone, Copy, Debug)]
pub struct EnumOptions {
    pub cap: usize,
    pub mode: ExecMode,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions { cap: DEFAULT_CAP, mode: ExecMode::default() }
    }
}

/// One isomorphism class of a census.
#[derive(Clone, Debug)]
pub struct Member {
    pub form: CanonicalForm,
    /// The canonically labeled representative.
    pub graph: Graph,
    pub diameter: usize,
}

/// Every class of connected graphs of a given order and cyclomatic number,
/// sorted by canonical form.
#[derive(Clone, Debug)]
pub struct Census {
    pub n: usize,
    pub cyclomatic: usize,
    pub members: Vec<Member>,
}

impl Census {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Members of diameter exactly `d`.
    pub fn with_diameter(&self, d: usize) -> Vec<&Member> {
        self.members.iter().filter(|m| m.diameter == d).collect()
    }

    pub fn forms(&self) -> BTreeSet<CanonicalForm> {
        self.members.iter().map(|m| m.form.clone()).collect()
    }
}

fn check_cyclomatic(c: usize) -> Result<()> {
    if (1..=2).contains(&c) {
        Ok(())
    } else {
        Err(Error::InvalidSpace(format!("cyclomatic number must be 1 or 2, got {c}")))
    }
}

/// The minimum-degree-two graphs of order `n`: the cycle, or every theta
/// and infinity graph.
fn bases(n: usize, c: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    if c == 1 {
        if n >= 3 {
            out.push(Graph::cycle(n));
        }
        return out;
    }
    // theta(n1, n2, n3) has n1 + n2 + n3 - 1 vertices
    for n3 in 1..=n {
        for n2 in n3.max(2)..=n {
            for n1 in n2..=n {
                if n1 + n2 + n3 == n + 1 {
                    out.extend(theta_base(n1, n2, n3).ok());
                }
            }
        }
    }
    // infinity(n1, n2, n3) has n1 + n2 + n3 - 2 vertices
    for n2 in 3..=n {
        for n1 in n2..=n {
            if n1 + n2 < n + 2 {
                out.extend(infinity_base(n1, n2, n + 2 - n1 - n2).ok());
            }
        }
    }
    out
}

fn leaf_extensions(g: &Graph) -> Vec<CanonicalForm> {
    (0..g.order())
        .map(|v| {
            let mut h = g.clone();
            h.attach_path(v, 1).expect("vertex exists");
            canonical_form(&h)
        })
        .collect()
}

fn members(forms: BTreeSet<CanonicalForm>, mode: ExecMode) -> Vec<Member> {
    let forms: Vec<CanonicalForm> = forms.into_iter().collect();
    exec::map(mode, &forms, |form| {
        let graph = form.to_graph();
        let diameter = graph.diameter().expect("census members are connected");
        Member { form: form.clone(), graph, diameter }
    })
}

/// Census of order `n` built by leaf augmentation from the bases.
pub fn census(n: usize, cyclomatic: usize, opts: EnumOptions) -> Result<Census> {
    check_cyclomatic(cyclomatic)?;
    if n > opts.cap {
        return Err(Error::CapExceeded { n, cap: opts.cap });
    }
    let smallest = if cyclomatic == 1 { 3 } else { 4 };
    let mut level: BTreeSet<CanonicalForm> = BTreeSet::new();
    for order in smallest..=n {
        let previous: Vec<CanonicalForm> = level.into_iter().collect();
        let grown = exec::map(opts.mode, &previous, |form| leaf_extensions(&form.to_graph()));
        level = grown.into_iter().flatten().collect();
        level.extend(bases(order, cyclomatic).iter().map(canonical_form));
    }
    Ok(Census { n, cyclomatic, members: members(level, opts.mode) })
}

/// Next integer with the same number of set bits (Gosper's hack).
fn next_subset(x: u64) -> u64 {
    let c = x & x.wrapping_neg();
    let r = x + c;
    (((r ^ x) >> 2) / c) | r
}

/// Census of order `n` by filtering edge subsets of `K_n`.
pub fn census_by_subsets(n: usize, cyclomatic: usize, mode: ExecMode) -> Result<Census> {
    check_cyclomatic(cyclomatic)?;
    if n > SUBSET_CAP {
        return Err(Error::CapExceeded { n, cap: SUBSET_CAP });
    }
    let m = n + cyclomatic - 1;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    if m > pairs.len() || n < 3 {
        return Ok(Census { n, cyclomatic, members: Vec::new() });
    }
    let mut incident = vec![0u64; n];
    for (e, &(i, j)) in pairs.iter().enumerate() {
        incident[i] |= 1 << e;
        incident[j] |= 1 << e;
    }

    let accept = |mask: u64| -> Option<CanonicalForm> {
        let mut prev = usize::MAX;
        for inc in &incident {
            let deg = (mask & inc).count_ones() as usize;
            if deg == 0 || deg > prev {
                return None;
            }
            prev = deg;
        }
        let g = Graph::from_edges(n, &pairs.iter().enumerate().filter(|(e, _)| mask >> e & 1 == 1).map(|(_, &p)| p).collect::<Vec<_>>())
            .expect("subset of K_n is simple");
        g.is_connected().then(|| canonical_form(&g))
    };

    // split by the highest chosen edge so chunks are independent
    let chunks = exec::map_range(mode, pairs.len() - m + 1, |k| {
        let top = m - 1 + k;
        let high = 1u64 << top;
        let mut found = BTreeSet::new();
        if m == 1 {
            found.extend(accept(high));
            return found;
        }
        let mut rest = (1u64 << (m - 1)) - 1;
        while rest < high {
            found.extend(accept(rest | high));
            rest = next_subset(rest);
        }
        found
    });
    let forms: BTreeSet<CanonicalForm> = chunks.into_iter().flatten().collect();
    Ok(Census { n, cyclomatic, members: members(forms, mode) })
}

/// Every class in `space`, canonically labeled.
pub fn enumerate(space: SearchSpace) -> Result<Vec<Graph>> {
    enumerate_with(space, EnumOptions::default())
}

pub fn enumerate_with(space: SearchSpace, opts: EnumOptions) -> Result<Vec<Graph>> {
    let c = census(space.n, space.cyclomatic, opts)?;
    Ok(c.with_diameter(space.d).into_iter().map(|m| m.graph.clone()).collect())
}

/// Graph6 lines, one graph per line.
pub fn snapshot(graphs: &[Graph]) -> String {
    graphs.iter().map(|g| graph6::encode(g) + "\n").collect()
}

/// Result of a maximizer search over one search space.
#[derive(Clone, Debug, Serialize)]
pub struct ExtremalReport {
    pub space: SearchSpace,
    pub alpha: String,
    #[serde(skip)]
    pub maximizer: Graph,
    pub maximizer_graph6: String,
    pub radius: f64,
    /// `radius` minus the best radius of any class not exactly tied with
    /// the maximizer; `None` when there is no such class.
    pub runner_up_gap: Option<f64>,
    /// Classes within the tie tolerance that exact comparison placed
    /// strictly below the maximizer.
    pub near_ties: Vec<String>,
    /// Non-isomorphic classes whose largest root equals the maximum exactly.
    pub exact_ties: Vec<String>,
    pub census: usize,
}

struct Scored<'a> {
    member: &'a Member,
    result: SpectralResult,
}

/// Maximizer of `rho_alpha` over `space` with default options.
pub fn argmax_radius(space: SearchSpace, alpha: &Rational, tie_tol: f64) -> Result<ExtremalReport> {
    let c = census(space.n, space.cyclomatic, EnumOptions::default())?;
    argmax_in(&c, space, alpha, tie_tol, ExecMode::default())
}

/// Maximizer over the members of a prebuilt census with diameter `space.d`.
///
/// Candidates within `tie_tol` of the numeric maximum are ordered by exact
/// comparison of the largest roots of their characteristic polynomials;
/// remaining exact ties break toward the smaller canonical form.
pub fn argmax_in(census: &Census, space: SearchSpace, alpha: &Rational, tie_tol: f64, mode: ExecMode) -> Result<ExtremalReport> {
    check_alpha(alpha)?;
    if census.n != space.n || census.cyclomatic != space.cyclomatic {
        return Err(Error::InvalidSpace(format!("census of order {} does not cover {space}", census.n)));
    }
    let pool = census.with_diameter(space.d);
    if pool.is_empty() {
        return Err(Error::EmptySpace { n: space.n, d: space.d, cyclomatic: space.cyclomatic });
    }
    let results = exec::map(mode, &pool, |m| spectral_radius(&m.graph, alpha, SOLVER_TOL));
    let mut scored = Vec::with_capacity(pool.len());
    for (member, result) in pool.into_iter().zip(results) {
        scored.push(Scored { member, result: result? });
    }
    scored.sort_by(|a, b| b.result.radius.total_cmp(&a.result.radius).then_with(|| a.member.form.cmp(&b.member.form)));

    let top = scored[0].result.radius;
    let close = scored.iter().take_while(|s| top - s.result.radius <= tie_tol).count();
    let (mut best, mut exact_ties, mut near_ties) = (0usize, Vec::new(), Vec::new());
    if close > 1 {
        let polys = exec::map(mode, &scored[..close], |s| phi(&s.member.graph, alpha));
        let polys = polys.into_iter().collect::<Result<Vec<_>>>()?;
        for i in 1..close {
            let ord = compare_largest_roots(&polys[i], &polys[best]);
            let smaller_form = scored[i].member.form < scored[best].member.form;
            if ord == Ordering::Greater || (ord == Ordering::Equal && smaller_form) {
                best = i;
            }
        }
        for i in (0..close).filter(|&i| i != best) {
            match compare_largest_roots(&polys[i], &polys[best]) {
                Ordering::Equal => exact_ties.push(i),
                _ => near_ties.push(i),
            }
        }
    }
    let radius = scored[best].result.radius;
    let runner_up = (0..scored.len())
        .filter(|&i| i != best && !exact_ties.contains(&i))
        .map(|i| scored[i].result.radius)
        .reduce(f64::max);
    let encode = |ids: &[usize]| ids.iter().map(|&i| graph6::encode(&scored[i].member.graph)).collect();
    Ok(ExtremalReport {
        space,
        alpha: format_alpha(alpha),
        maximizer: scored[best].member.graph.clone(),
        maximizer_graph6: graph6::encode(&scored[best].member.graph),
        radius,
        runner_up_gap: runner_up.map(|r| radius - r),
        near_ties: encode(&near_ties),
        exact_ties: encode(&exact_ties),
        census: scored.len(),
    })
}

/// The extremal graphs predicted for `space` that actually exist there,
/// by name (`ustar2`, `bstar3`, `bstar5`).
pub fn predicted_extremals(space: SearchSpace) -> Vec<(&'static str, Graph)> {
    let (n, d) = (space.n, space.d);
    let candidates: Vec<(&'static str, Result<Graph>)> = if space.cyclomatic == 1 {
        vec![("ustar2", ustar2(n, d))]
    } else {
        vec![("bstar3", bstar3(n, d)), ("bstar5", bstar5(n, d))]
    };
    candidates.into_iter().filter_map(|(name, g)| g.ok().map(|g| (name, g))).collect()
}

/// Names of the predicted extremal graphs isomorphic to `g`.
pub fn identify(space: SearchSpace, g: &Graph) -> Vec<&'static str> {
    predicted_extremals(space).into_iter().filter(|(_, h)| is_isomorphic(g, h)).map(|(name, _)| name).collect()
}

/// Outcome of [`compare_pair`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Greater,
    Less,
    Indistinguishable,
}

#[derive(Clone, Debug, Serialize)]
pub struct PairComparison {
    pub verdict: Verdict,
    pub rho_g: f64,
    pub rho_h: f64,
    /// `rho_g - rho_h`.
    pub gap: f64,
    /// Twice the larger of the two eigensolver error bounds.
    pub bound: f64,
}

/// Sign of `rho_alpha(g) - rho_alpha(h)`, or [`Verdict::Indistinguishable`]
/// when the gap is within the certified error bound.
pub fn compare_pair(g: &Graph, h: &Graph, alpha: &Rational) -> Result<PairComparison> {
    let rg = spectral_radius(g, alpha, SOLVER_TOL)?;
    let rh = spectral_radius(h, alpha, SOLVER_TOL)?;
    let gap = rg.radius - rh.radius;
    let bound = 2.0 * rg.error_bound().max(rh.error_bound());
    let verdict = if gap.abs() <= bound {
        Verdict::Indistinguishable
    } else if gap > 0.0 {
        Verdict::Greater
    } else {
        Verdict::Less
    };
    Ok(PairComparison { verdict, rho_g: rg.radius, rho_h: rh.radius, gap, bound })
}
