//! Randomised property suites for the radius-monotone rewrites.
//!
//! Each instance draws its own ChaCha stream from `(seed, lemma, alpha,
//! index)`, so a run is reproducible from the seed and independent of the
//! execution mode. Instances that miss a hypothesis (including Perron
//! entries tied within [`SuiteConfig::tie_tol`]) are discarded, never
//! asserted.

use std::cmp::Ordering;
use std::fmt;

use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::alpha::format_alpha;
use crate::charpoly::phi;
use crate::charpoly::roots::compare_largest_roots;
use crate::exec::{self, ExecMode};
use crate::families::{catalog, FamilySpec};
use crate::graph::Graph;
use crate::graph6;
use crate::poly::{int, rational, Rational};
use crate::spectral::{spectral_radius, spectral_radius_any, SpectralResult};
use crate::transforms;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Lemma {
    /// Moving neighbours of `v` to `u` with `x_u >= x_v` raises the radius.
    Graft,
    /// Contracting a cut edge and re-attaching a pendant edge raises it.
    CutEdge,
    /// Subdividing an edge of an internal path lowers it.
    Subdivision,
    /// A 2-switch with `x_u >= x_y`, `x_w >= x_v` (one strict) raises it.
    TwoSwitch,
    /// Balancing two pendant paths on adjacent vertices raises it.
    PendantShift,
    /// Perron entries strictly decrease along a pendant path when rho > 2.
    PendantDecay,
}

impl Lemma {
    pub const ALL: [Lemma; 6] =
        [Lemma::Graft, Lemma::CutEdge, Lemma::Subdivision, Lemma::TwoSwitch, Lemma::PendantShift, Lemma::PendantDecay];

    fn tag(self) -> u64 {
        self as u64 + 1
    }
}

impl fmt::Display for Lemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Lemma::Graft => "graft",
            Lemma::CutEdge => "cut-edge",
            Lemma::Subdivision => "subdivision",
            Lemma::TwoSwitch => "two-switch",
            Lemma::PendantShift => "pendant-shift",
            Lemma::PendantDecay => "pendant-decay",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Valid instances per lemma and alpha.
    pub instances: usize,
    pub alphas: Vec<Rational>,
    pub max_n: usize,
    /// Eigensolver tolerance.
    pub tol: f64,
    /// Radius gaps at or below this are settled by exact comparison; Perron
    /// entry gaps must exceed it.
    pub margin: f64,
    /// Perron entries closer than this count as tied.
    pub tie_tol: f64,
    pub mode: ExecMode,
    /// Negative control: graft towards the smaller Perron entry instead.
    pub invert_graft: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 2024,
            instances: 200,
            alphas: vec![int(0), rational(1, 4), rational(1, 2), rational(3, 4)],
            max_n: 12,
            tol: 1e-12,
            margin: 1e-9,
            tie_tol: 1e-9,
            mode: ExecMode::default(),
            invert_graft: false,
        }
    }
}

/// A failed instance, with both graphs in graph6.
#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub lemma: Lemma,
    pub alpha: String,
    pub before: String,
    pub after: String,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub lemma: Lemma,
    pub alpha: String,
    pub checked: usize,
    pub discarded: usize,
    /// Smallest observed gap in the direction the lemma predicts.
    pub min_margin: f64,
    pub violations: Vec<Violation>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.checked > 0
    }
}

enum Outcome {
    Checked(f64),
    Violated(Violation, f64),
}

struct Ctx<'a> {
    cfg: &'a SuiteConfig,
    alpha: &'a Rational,
    lemma: Lemma,
}

impl Ctx<'_> {
    fn perron(&self, g: &Graph) -> Option<SpectralResult> {
        spectral_radius(g, self.alpha, self.cfg.tol).ok()
    }

    fn radius(&self, g: &Graph) -> Option<f64> {
        spectral_radius_any(g, self.alpha, self.cfg.tol).ok()
    }

    /// `gap` is positive when the lemma's prediction holds.
    fn judge(&self, gap: f64, before: &Graph, after: &Graph, detail: String) -> Outcome {
        self.verdict(gap > self.cfg.margin, gap, before, after, detail)
    }

    /// Like [`Ctx::judge`] for a predicted strict increase of the radius
    /// from `low` to `high`. Gaps inside the margin are settled by comparing
    /// the largest roots of the exact characteristic polynomials.
    fn judge_radius(&self, gap: f64, low: &Graph, high: &Graph, before: &Graph, after: &Graph, detail: String) -> Outcome {
        let holds = if gap.abs() <= self.cfg.margin {
            match (phi(high, self.alpha), phi(low, self.alpha)) {
                (Ok(p), Ok(q)) => compare_largest_roots(&p, &q) == Ordering::Greater,
                _ => false,
            }
        } else {
            gap > 0.0
        };
        self.verdict(holds, gap, before, after, detail)
    }

    fn verdict(&self, holds: bool, gap: f64, before: &Graph, after: &Graph, detail: String) -> Outcome {
        if holds {
            Outcome::Checked(gap)
        } else {
            let v = Violation {
                lemma: self.lemma,
                alpha: format_alpha(self.alpha),
                before: graph6::encode(before),
                after: graph6::encode(after),
                detail: format!("{detail}; gap {gap:.3e} (margin {:.1e})", self.cfg.margin),
            };
            Outcome::Violated(v, gap)
        }
    }
}

/// A random connected graph: a random recursive tree plus up to `extra`
/// random chords.
pub fn random_connected(rng: &mut impl Rng, n: usize, extra: usize) -> Graph {
    let mut g = Graph::new(n);
    for v in 1..n {
        let p = rng.random_range(0..v);
        g.add_edge(p, v).expect("tree edge");
    }
    for _ in 0..extra {
        let (u, v) = (rng.random_range(0..n), rng.random_range(0..n));
        if u != v && !g.has_edge(u, v) {
            g.add_edge(u, v).expect("checked");
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    g.relabel(&perm)
}

fn random_graph(rng: &mut ChaCha8Rng, min_n: usize, max_n: usize, max_extra: usize) -> Graph {
    let n = rng.random_range(min_n..=max_n);
    let extra = rng.random_range(0..=max_extra);
    random_connected(rng, n, extra)
}

fn try_graft(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Option<Outcome> {
    let g = random_graph(rng, 4, ctx.cfg.max_n, 4);
    let n = g.order();
    let (u, v) = (rng.random_range(0..n), rng.random_range(0..n));
    if u == v {
        return None;
    }
    let x = ctx.perron(&g)?.perron;
    if (x[u] - x[v]).abs() < ctx.cfg.tie_tol {
        return None;
    }
    // lemma direction: move onto the larger entry; the control inverts it
    let (to, from) = if (x[u] > x[v]) != ctx.cfg.invert_graft { (u, v) } else { (v, u) };
    let candidates: Vec<usize> =
        g.neighbors(from).iter().copied().filter(|&w| w != to && !g.has_edge(to, w)).collect();
    if candidates.is_empty() {
        return None;
    }
    let k = rng.random_range(1..=candidates.len());
    let moved: Vec<usize> = candidates.choose_multiple(rng, k).copied().collect();
    let after = transforms::graft(&g, to, from, &moved).ok()?.graph;
    let gap = ctx.radius(&after)? - ctx.radius(&g)?;
    Some(ctx.judge_radius(gap, &g, &after, &g, &after, format!("graft {moved:?} from {from} to {to}")))
}

fn try_cut_edge(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Option<Outcome> {
    let g = random_graph(rng, 4, ctx.cfg.max_n, 3);
    // a pendant cut edge reproduces the same graph, so both ends must be inner
    let cuts: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| g.degree(u) >= 2 && g.degree(v) >= 2 && g.is_cut_edge(u, v))
        .collect();
    let &(u, v) = cuts.choose(rng)?;
    let (u, v) = if rng.random_bool(0.5) { (u, v) } else { (v, u) };
    let after = transforms::contract_cut_edge_with_pendant(&g, u, v).ok()?.graph;
    let gap = ctx.radius(&after)? - ctx.radius(&g)?;
    Some(ctx.judge_radius(gap, &g, &after, &g, &after, format!("contract cut edge {u}-{v}")))
}

fn try_subdivision(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Option<Outcome> {
    let g = random_graph(rng, 4, ctx.cfg.max_n - 1, 5);
    let paths = g.internal_paths();
    let path = paths.choose(rng)?;
    let edges: Vec<(usize, usize)> = path.edges().collect();
    let &e = edges.choose(rng)?;
    let rho = ctx.radius(&g)?;
    if rho <= 2.0 + ctx.cfg.margin {
        return None;
    }
    let after = transforms::subdivide(&g, e).ok()?.graph;
    let gap = rho - ctx.radius(&after)?;
    Some(ctx.judge_radius(gap, &after, &g, &g, &after, format!("subdivide internal edge {}-{}", e.0, e.1)))
}

fn try_two_switch(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Option<Outcome> {
    let g = random_graph(rng, 4, ctx.cfg.max_n, 5);
    let edges = g.edges();
    let (&(a, b), &(c, d)) = (edges.choose(rng)?, edges.choose(rng)?);
    let x = ctx.perron(&g)?.perron;
    let tie = ctx.cfg.tie_tol;
    // try the four orientations and keep those meeting the hypotheses
    let mut options = Vec::new();
    for (u, v) in [(a, b), (b, a)] {
        for (w, y) in [(c, d), (d, c)] {
            let (d1, d2) = (x[u] - x[y], x[w] - x[v]);
            let near_tie = d1.abs() < tie || d2.abs() < tie;
            if d1 > 0.0 && d2 > 0.0 && !near_tie {
                options.push(((u, v), (w, y)));
            }
        }
    }
    let &(e1, e2) = options.choose(rng)?;
    let after = transforms::two_switch(&g, e1, e2).ok()?.graph;
    let gap = ctx.radius(&after)? - ctx.radius(&g)?;
    Some(ctx.judge_radius(gap, &g, &after, &g, &after, format!("switch {e1:?}, {e2:?}")))
}

fn try_pendant_shift(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Option<Outcome> {
    let base = random_graph(rng, 3, ctx.cfg.max_n.saturating_sub(4).max(3), 3);
    let edges: Vec<(usize, usize)> =
        base.edges().into_iter().filter(|&(u, v)| base.degree(u) >= 2 && base.degree(v) >= 2).collect();
    let &(u, v) = edges.choose(rng)?;
    let (u, v) = if rng.random_bool(0.5) { (u, v) } else { (v, u) };
    let room = ctx.cfg.max_n.saturating_sub(base.order()).max(2);
    let k = rng.random_range(2..=room.max(2));
    let l = rng.random_range(0..=k - 2);
    let (before, after) = transforms::shift_pendant_paths(&base, u, v, k, l).ok()?;
    let gap = ctx.radius(&after)? - ctx.radius(&before)?;
    Some(ctx.judge_radius(gap, &before, &after, &before, &after, format!("shift paths ({k},{l}) to ({},{}) on edge {u}-{v}", k - 1, l + 1)))
}

fn try_pendant_decay(ctx: &Ctx, rng: &mut ChaCha8Rng, members: &[FamilySpec]) -> Option<Outcome> {
    let spec = members.choose(rng)?;
    let g = spec.build().ok()?;
    let res = ctx.perron(&g)?;
    if res.radius <= 2.0 + ctx.cfg.margin {
        return None;
    }
    let paths = g.pendant_paths();
    let path = paths.choose(rng)?;
    let x = &res.perron;
    let gap = path.vertices.windows(2).map(|w| x[w[0]] - x[w[1]]).fold(f64::INFINITY, f64::min);
    Some(ctx.judge(gap, &g, &g, format!("{spec}: entries along pendant path {:?}", path.vertices)))
}

fn instance_rng(seed: u64, lemma: Lemma, alpha_index: usize, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(lemma.tag() << 32 | (alpha_index as u64) << 24 | index as u64);
    rng
}

const MAX_ATTEMPTS: usize = 400;

/// Runs one lemma at every alpha of the configuration.
pub fn run_suite(lemma: Lemma, cfg: &SuiteConfig) -> Vec<SuiteReport> {
    let members: Vec<FamilySpec> = if lemma == Lemma::PendantDecay {
        catalog(cfg.max_n).into_iter().filter(|s| !matches!(s, FamilySpec::ThetaSmall | FamilySpec::InfSmall)).collect()
    } else {
        Vec::new()
    };
    cfg.alphas
        .iter()
        .enumerate()
        .map(|(ai, alpha)| {
            let ctx = Ctx { cfg, alpha, lemma };
            let results = exec::map_range(cfg.mode, cfg.instances, |i| {
                let mut rng = instance_rng(cfg.seed, lemma, ai, i);
                let mut discarded = 0;
                for _ in 0..MAX_ATTEMPTS {
                    let outcome = match lemma {
                        Lemma::Graft => try_graft(&ctx, &mut rng),
                        Lemma::CutEdge => try_cut_edge(&ctx, &mut rng),
                        Lemma::Subdivision => try_subdivision(&ctx, &mut rng),
                        Lemma::TwoSwitch => try_two_switch(&ctx, &mut rng),
                        Lemma::PendantShift => try_pendant_shift(&ctx, &mut rng),
                        Lemma::PendantDecay => try_pendant_decay(&ctx, &mut rng, &members),
                    };
                    match outcome {
                        Some(o) => return (Some(o), discarded),
                        None => discarded += 1,
                    }
                }
                (None, discarded)
            });
            let mut report = SuiteReport {
                lemma,
                alpha: format_alpha(alpha),
                checked: 0,
                discarded: 0,
                min_margin: f64::INFINITY,
                violations: Vec::new(),
            };
            for (outcome, discarded) in results {
                report.discarded += discarded;
                match outcome {
                    Some(Outcome::Checked(gap)) => {
                        report.checked += 1;
                        report.min_margin = report.min_margin.min(gap);
                    }
                    Some(Outcome::Violated(v, gap)) => {
                        report.checked += 1;
                        report.min_margin = report.min_margin.min(gap);
                        report.violations.push(v);
                    }
                    None => {}
                }
            }
            report
        })
        .collect()
}

pub fn run_all(cfg: &SuiteConfig) -> Vec<SuiteReport> {
    Lemma::ALL.iter().flat_map(|&l| run_suite(l, cfg)).collect()
}
