//! Exhaustive search over small labelled graphs.
//!
//! [`enumerate`] walks every graph on n vertices satisfying a [`Predicate`];
//! [`argmax`] finds the maximum of an [`Objective`] over that class together
//! with every extremal isomorphism class. [`verify_theorem`] runs the catalog
//! of extremal statements through the search.

mod catalog;
mod enumerate;
mod report;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use catalog::{theorem_ids, verify_theorem, VerifyParams};
pub use enumerate::Enumeration;
pub(crate) use report::fmt_num;
pub use report::{emit_report, ReportFormat, ReportRow, RowStatus, VerificationReport};

use crate::error::{Error, Result};
use crate::graph::{CanonicalForm, Graph};
use crate::spectra::{self, PSpectralOptions};

/// Smallest vertex count the search accepts.
pub const SEARCH_MIN_VERTICES: usize = 3;
/// Largest vertex count the search accepts.
pub const SEARCH_MAX_VERTICES: usize = 8;
/// Values within this of the maximum count as extremal.
pub const WITNESS_TOLERANCE: f64 = 1e-9;
/// p-spectral classes within this of the maximum are solved again.
pub const P_CONFIRM_WINDOW: f64 = 1e-6;
/// Random starts used when confirming near-extremal p-spectral classes.
pub const P_CONFIRM_RESTARTS: usize = 32;

/// A class of graphs, as a conjunction of constraints. The default accepts
/// every graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Predicate {
    /// Forbid K_k as a subgraph.
    pub clique_free_k: Option<usize>,
    /// Require χ ≥ k.
    pub min_chromatic: Option<usize>,
    /// Require χ ≤ k.
    pub max_chromatic: Option<usize>,
    pub connected_only: bool,
}

impl Predicate {
    pub fn any() -> Self {
        Predicate::default()
    }

    /// K_k-free graphs.
    pub fn clique_free(k: usize) -> Self {
        Predicate {
            clique_free_k: Some(k),
            ..Predicate::default()
        }
    }

    /// Graphs that are not r-partite, χ ≥ r + 1.
    pub fn non_partite(r: usize) -> Self {
        Predicate {
            min_chromatic: Some(r + 1),
            ..Predicate::default()
        }
    }

    /// r-partite graphs, χ ≤ r.
    pub fn partite(r: usize) -> Self {
        Predicate {
            max_chromatic: Some(r),
            ..Predicate::default()
        }
    }

    pub fn connected() -> Self {
        Predicate {
            connected_only: true,
            ..Predicate::default()
        }
    }

    /// Both constraints; bounds of the same kind combine to the stronger one.
    pub fn and(self, other: Predicate) -> Self {
        fn tighter(a: Option<usize>, b: Option<usize>, pick: fn(usize, usize) -> usize) -> Option<usize> {
            match (a, b) {
                (Some(x), Some(y)) => Some(pick(x, y)),
                (x, y) => x.or(y),
            }
        }
        Predicate {
            clique_free_k: tighter(self.clique_free_k, other.clique_free_k, usize::min),
            min_chromatic: tighter(self.min_chromatic, other.min_chromatic, usize::max),
            max_chromatic: tighter(self.max_chromatic, other.max_chromatic, usize::min),
            connected_only: self.connected_only || other.connected_only,
        }
    }

    pub fn accepts(&self, g: &Graph) -> bool {
        if let Some(k) = self.clique_free_k {
            if g.has_clique(k) {
                return false;
            }
        }
        if let Some(k) = self.max_chromatic {
            if !g.is_colorable(k) {
                return false;
            }
        }
        if let Some(k) = self.min_chromatic {
            if k >= 1 && g.is_colorable(k - 1) {
                return false;
            }
        }
        !self.connected_only || g.is_connected()
    }

    fn validate(&self) -> Result<()> {
        if self.clique_free_k == Some(0) {
            return Err(Error::Domain("K_0 cannot be forbidden".into()));
        }
        if self.min_chromatic == Some(0) {
            return Err(Error::Domain("chromatic lower bound must be at least 1".into()));
        }
        Ok(())
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(k) = self.clique_free_k {
            parts.push(format!("K{k}-free"));
        }
        if let Some(k) = self.min_chromatic {
            parts.push(format!("chi>={k}"));
        }
        if let Some(k) = self.max_chromatic {
            parts.push(format!("chi<={k}"));
        }
        if self.connected_only {
            parts.push("connected".into());
        }
        if parts.is_empty() {
            f.write_str("all graphs")
        } else {
            f.write_str(&parts.join(", "))
        }
    }
}

/// Quantity maximised by [`argmax`].
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "param")]
pub enum Objective {
    EdgeCount,
    Adjacency,
    SignlessLaplacian,
    AAlpha(f64),
    PSpectral(f64),
}

impl Objective {
    fn validate(&self) -> Result<()> {
        match *self {
            Objective::AAlpha(a) if !(0.0..=1.0).contains(&a) => {
                Err(Error::Domain(format!("alpha must lie in [0, 1], got {a}")))
            }
            Objective::PSpectral(p) if !(p > 1.0 && p.is_finite()) => {
                Err(Error::Domain(format!("p must be a finite real > 1, got {p}")))
            }
            _ => Ok(()),
        }
    }

    pub fn evaluate(&self, g: &Graph, opts: &SearchOptions) -> Result<f64> {
        let tol = opts.tolerance;
        Ok(match *self {
            Objective::EdgeCount => g.edge_count() as f64,
            Objective::Adjacency => spectra::adjacency_radius(g, tol)?.value,
            Objective::SignlessLaplacian => spectra::signless_laplacian_radius(g, tol)?.value,
            Objective::AAlpha(a) => spectra::a_alpha_radius(g, a, tol)?.value,
            Objective::PSpectral(p) => spectra::p_spectral_radius(g, &opts.p_options(p))?.value,
        })
    }

    /// Upper bound over graphs with n vertices and at most m edges.
    fn upper_bound(&self, n: usize, m: usize) -> f64 {
        let mf = m as f64;
        // λ ≤ (√(1 + 8m) − 1) / 2 holds for every graph.
        let stanley = ((1.0 + 8.0 * mf).sqrt() - 1.0) / 2.0;
        match *self {
            Objective::EdgeCount => mf,
            Objective::Adjacency => stanley,
            // q ≤ 2m/(n − 1) + n − 2 holds for every graph.
            Objective::SignlessLaplacian => 2.0 * mf / (n as f64 - 1.0) + n as f64 - 2.0,
            Objective::AAlpha(a) => a * (mf.min(n as f64 - 1.0)) + (1.0 - a) * stanley,
            Objective::PSpectral(p) => (2.0 * mf).powf(1.0 - 1.0 / p),
        }
    }

    fn keep_window(&self) -> f64 {
        match self {
            Objective::PSpectral(_) => P_CONFIRM_WINDOW,
            _ => WITNESS_TOLERANCE,
        }
    }
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Objective::EdgeCount => f.write_str("edge count"),
            Objective::Adjacency => f.write_str("lambda"),
            Objective::SignlessLaplacian => f.write_str("q"),
            Objective::AAlpha(a) => write!(f, "lambda_alpha(alpha={a})"),
            Objective::PSpectral(p) => write!(f, "lambda_p(p={p})"),
        }
    }
}

/// Solver settings for a search.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchOptions {
    /// Worker threads; 0 uses every available core.
    pub jobs: usize,
    pub tolerance: f64,
    pub seed: u64,
    /// Random starts per p-spectral evaluation.
    pub restarts: usize,
    /// Disable objective bounds, leaving only the predicate pruning.
    pub no_bound_pruning: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            jobs: 0,
            tolerance: spectra::DEFAULT_TOLERANCE,
            seed: 0,
            restarts: PSpectralOptions::new(2.0).restarts,
            no_bound_pruning: false,
        }
    }
}

impl SearchOptions {
    fn p_options(&self, p: f64) -> PSpectralOptions {
        PSpectralOptions::new(p)
            .with_restarts(self.restarts)
            .with_seed(self.seed)
            .with_tolerance(self.tolerance)
    }

    fn pool(&self) -> Result<rayon::ThreadPool> {
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.jobs)
            .build()
            .map_err(|e| Error::Precondition(format!("thread pool: {e}")))
    }
}

/// One extremal isomorphism class.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub value: f64,
    /// Canonical representative.
    pub graph: Graph,
    pub canonical: CanonicalForm,
}

/// Maximum of an objective over a class, with every class attaining it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchResult {
    pub n: usize,
    pub max: f64,
    /// Extremal classes in canonical order.
    pub witnesses: Vec<Witness>,
    /// Leaves whose objective was evaluated.
    pub evaluated: u64,
}

impl SearchResult {
    pub fn unique(&self) -> bool {
        self.witnesses.len() == 1
    }

    pub fn contains(&self, g: &Graph) -> Result<bool> {
        let c = g.canonical_form()?;
        Ok(self.witnesses.iter().any(|w| w.canonical == c))
    }
}

fn check_order(n: usize) -> Result<()> {
    if (SEARCH_MIN_VERTICES..=SEARCH_MAX_VERTICES).contains(&n) {
        Ok(())
    } else {
        Err(Error::UnsupportedSize(format!(
            "search needs {SEARCH_MIN_VERTICES} <= n <= {SEARCH_MAX_VERTICES}, got {n}"
        )))
    }
}

/// Every labelled graph on `n` vertices accepted by `pred`.
pub fn enumerate(n: usize, pred: &Predicate) -> Result<Enumeration<'_>> {
    check_order(n)?;
    pred.validate()?;
    Ok(Enumeration::new(n, pred))
}

/// Applies `f` to every labelled graph on `n` vertices accepted by `pred`, in
/// parallel, and folds the results with `combine` starting from `init`.
/// `combine` must be associative and commutative for the result to be
/// independent of scheduling.
pub fn sweep<T, F, C>(n: usize, pred: &Predicate, jobs: usize, init: T, f: F, combine: C) -> Result<T>
where
    T: Clone + Send + Sync,
    F: Fn(&Graph) -> Result<T> + Sync,
    C: Fn(T, T) -> T + Sync,
{
    check_order(n)?;
    pred.validate()?;
    let pool = SearchOptions {
        jobs,
        ..SearchOptions::default()
    }
    .pool()?;
    let depth = enumerate::shard_depth(n);
    let prefixes = enumerate::prefixes(n, pred, depth);
    pool.install(|| {
        prefixes
            .par_iter()
            .map(|rows| -> Result<T> {
                let mut w = enumerate::Walker::new(n, pred, rows.clone(), depth, usize::MAX);
                let mut acc = init.clone();
                while w.next_leaf(&mut |_, _| true) {
                    acc = combine(acc, f(&w.graph())?);
                }
                Ok(acc)
            })
            .try_reduce(|| init.clone(), |a, b| Ok(combine(a, b)))
    })
}

/// Shared best value. Objectives are nonnegative, so the IEEE bit patterns
/// order like the values.
struct Incumbent(AtomicU64);

impl Incumbent {
    fn get(&self) -> f64 {
        f64::from_bits(self.0.load(Ordering::Relaxed))
    }

    fn raise(&self, v: f64) {
        self.0.fetch_max(v.max(0.0).to_bits(), Ordering::Relaxed);
    }
}

struct ShardOutcome {
    best: f64,
    near: Vec<(f64, Graph)>,
    evaluated: u64,
}

impl ShardOutcome {
    fn empty() -> Self {
        ShardOutcome {
            best: f64::NEG_INFINITY,
            near: Vec::new(),
            evaluated: 0,
        }
    }

    fn offer(&mut self, value: f64, g: Graph, window: f64) {
        if value > self.best {
            self.best = value;
            self.near.retain(|(v, _)| *v >= value - window);
        }
        if value >= self.best - window {
            self.near.push((value, g));
        }
    }

    fn merge(mut self, other: ShardOutcome, window: f64) -> Self {
        self.evaluated += other.evaluated;
        let best = self.best.max(other.best);
        self.best = best;
        self.near.extend(other.near);
        self.near.retain(|(v, _)| *v >= best - window);
        self
    }
}

/// Maximum of `objective` over the graphs on `n` vertices accepted by `pred`,
/// with every isomorphism class within [`WITNESS_TOLERANCE`] of it.
///
/// Subtrees are cut by the clique and colour constraints and by an upper
/// bound on the objective from the edge count. p-spectral values are cached
/// per isomorphism class, and classes near the maximum are solved again with
/// [`P_CONFIRM_RESTARTS`] random starts before the witnesses are fixed.
pub fn argmax(n: usize, pred: &Predicate, objective: Objective, opts: &SearchOptions) -> Result<SearchResult> {
    check_order(n)?;
    pred.validate()?;
    objective.validate()?;
    let window = objective.keep_window();
    let pool = opts.pool()?;
    let depth = enumerate::shard_depth(n);
    let prefixes = enumerate::prefixes(n, pred, depth);
    let incumbent = Incumbent(AtomicU64::new(0f64.to_bits()));
    let is_p = matches!(objective, Objective::PSpectral(_));

    let cache: Mutex<HashMap<CanonicalForm, f64>> = Mutex::new(HashMap::new());

    let shard = |rows: &Vec<u64>| -> Result<ShardOutcome> {
        let mut w = enumerate::Walker::new(n, pred, rows.clone(), depth, usize::MAX);
        let mut out = ShardOutcome::empty();
        let mut keep = |m: usize, open: usize| {
            opts.no_bound_pruning || objective.upper_bound(n, m + open) >= incumbent.get() - window
        };
        while w.next_leaf(&mut keep) {
            let g = w.graph();
            debug_assert!(pred.accepts(&g));
            let value = if is_p {
                // Solved once per class, on the canonical labelling.
                let c = g.canonical_form()?;
                let hit = cache.lock().expect("cache lock").get(&c).copied();
                match hit {
                    Some(v) => v,
                    None => {
                        out.evaluated += 1;
                        let v = objective.evaluate(&c.graph(), opts)?;
                        cache.lock().expect("cache lock").insert(c, v);
                        v
                    }
                }
            } else {
                out.evaluated += 1;
                objective.evaluate(&g, opts)?
            };
            incumbent.raise(value);
            if value >= incumbent.get() - window {
                out.offer(value, g, window);
            }
        }
        Ok(out)
    };

    let merged = pool.install(|| {
        prefixes
            .par_iter()
            .map(shard)
            .try_reduce(ShardOutcome::empty, |a, b| Ok(a.merge(b, window)))
    })?;
    if merged.near.is_empty() {
        return Err(Error::EmptyClass(format!("no graph on {n} vertices is {pred}")));
    }

    // Final values are recomputed on canonical representatives so that they
    // do not depend on which labelling a worker met first.
    let mut classes: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
    for (_, g) in merged.near {
        let c = g.canonical_form()?;
        classes.entry(c.clone()).or_insert_with(|| c.graph());
    }
    let confirm = match objective {
        Objective::PSpectral(p) => Some(opts.p_options(p).with_restarts(P_CONFIRM_RESTARTS.max(opts.restarts))),
        _ => None,
    };
    let mut valued = Vec::with_capacity(classes.len());
    for (c, g) in classes {
        let v = match &confirm {
            Some(o) => {
                let first = cache.lock().expect("cache lock").get(&c).copied().unwrap_or(0.0);
                first.max(spectra::p_spectral_radius(&g, o)?.value)
            }
            None => objective.evaluate(&g, opts)?,
        };
        valued.push((c, g, v));
    }
    let max = valued.iter().map(|x| x.2).fold(f64::NEG_INFINITY, f64::max);
    let witnesses = valued
        .into_iter()
        .filter(|x| x.2 >= max - WITNESS_TOLERANCE)
        .map(|(canonical, graph, value)| Witness {
            value,
            graph,
            canonical,
        })
        .collect();
    Ok(SearchResult {
        n,
        max,
        witnesses,
        evaluated: merged.evaluated,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{turan_graph, y_graph};

    fn count(n: usize, pred: &Predicate) -> usize {
        enumerate(n, pred).unwrap().count()
    }

    #[test]
    fn unconstrained_counts() {
        for n in 3..=5 {
            assert_eq!(count(n, &Predicate::any()), 1 << (n * (n - 1) / 2));
        }
    }

    #[test]
    fn constrained_counts_match_filtering() {
        let all: Vec<Graph> = enumerate(5, &Predicate::any()).unwrap().collect();
        let preds = [
            Predicate::clique_free(3),
            Predicate::clique_free(4),
            Predicate::non_partite(2),
            Predicate::partite(2),
            Predicate::partite(3).and(Predicate::connected()),
            Predicate::clique_free(4).and(Predicate::non_partite(3)),
            Predicate::clique_free(3).and(Predicate::non_partite(2)),
            Predicate::connected(),
        ];
        for pred in &preds {
            let expected = all.iter().filter(|g| pred.accepts(g)).count();
            assert_eq!(count(5, pred), expected, "{pred}");
        }
        // labelled triangle-free graphs on 5 and 6 vertices
        assert_eq!(count(5, &Predicate::clique_free(3)), 388);
        assert_eq!(count(6, &Predicate::clique_free(3)), 5789);
    }

    #[test]
    fn sweep_agrees_with_iterator() {
        let pred = Predicate::clique_free(3);
        let total = sweep(6, &pred, 2, 0usize, |_| Ok(1), |a, b| a + b).unwrap();
        assert_eq!(total, 5789);
    }

    #[test]
    fn argmax_small_cases() {
        let opts = SearchOptions::default();
        let r = argmax(5, &Predicate::clique_free(3), Objective::EdgeCount, &opts).unwrap();
        assert_eq!(r.max, 6.0);
        assert!(r.unique());
        assert!(r.contains(&turan_graph(5, 2).unwrap()).unwrap());

        let r = argmax(6, &Predicate::clique_free(4), Objective::Adjacency, &opts).unwrap();
        assert!((r.max - 4.0).abs() < 1e-9);
        assert!(r.unique());

        let pred = Predicate::clique_free(3).and(Predicate::non_partite(2));
        assert!(matches!(
            argmax(4, &pred, Objective::EdgeCount, &opts),
            Err(Error::EmptyClass(_))
        ));
        let r = argmax(5, &pred, Objective::Adjacency, &opts).unwrap();
        assert!((r.max - 2.0).abs() < 1e-9);
    }

    #[test]
    fn pruning_does_not_change_results() {
        let pred = Predicate::clique_free(4).and(Predicate::non_partite(3));
        for objective in [
            Objective::EdgeCount,
            Objective::Adjacency,
            Objective::SignlessLaplacian,
            Objective::AAlpha(0.5),
            Objective::PSpectral(3.0),
        ] {
            let fast = argmax(7, &pred, objective, &SearchOptions::default()).unwrap();
            let slow = argmax(
                7,
                &pred,
                objective,
                &SearchOptions {
                    no_bound_pruning: true,
                    ..SearchOptions::default()
                },
            )
            .unwrap();
            assert!((fast.max - slow.max).abs() < 1e-9, "{objective}");
            let fc: Vec<_> = fast.witnesses.iter().map(|w| &w.canonical).collect();
            let sc: Vec<_> = slow.witnesses.iter().map(|w| &w.canonical).collect();
            assert_eq!(fc, sc, "{objective}");
            assert!(fast.evaluated <= slow.evaluated);
        }
        let y = argmax(7, &pred, Objective::Adjacency, &SearchOptions::default()).unwrap();
        assert!(y.contains(&y_graph(7, 3).unwrap()).unwrap());
    }

    #[test]
    fn jobs_do_not_change_results() {
        let pred = Predicate::clique_free(3);
        let a = argmax(
            6,
            &pred,
            Objective::SignlessLaplacian,
            &SearchOptions {
                jobs: 1,
                ..Default::default()
            },
        )
        .unwrap();
        let b = argmax(
            6,
            &pred,
            Objective::SignlessLaplacian,
            &SearchOptions {
                jobs: 3,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(a.witnesses, b.witnesses);
        assert_eq!(a.max, b.max);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            enumerate(2, &Predicate::any()),
            Err(Error::UnsupportedSize(_))
        ));
        assert!(matches!(
            enumerate(9, &Predicate::any()),
            Err(Error::UnsupportedSize(_))
        ));
        let opts = SearchOptions::default();
        assert!(argmax(5, &Predicate::any(), Objective::AAlpha(2.0), &opts).is_err());
        assert!(argmax(5, &Predicate::any(), Objective::PSpectral(1.0), &opts).is_err());
    }
}
