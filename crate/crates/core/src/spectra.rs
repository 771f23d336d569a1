//! Spectral radii of graph matrices.
//!
//! The adjacency, signless Laplacian and A_α radii come from shifted power
//! iteration, solved per connected component. The p-spectral radius uses a
//! nonlinear power iteration on the p-sphere with several starting points.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

pub const DEFAULT_TOLERANCE: f64 = 1e-10;
pub const DEFAULT_MAX_ITERATIONS: usize = 1_000_000;

/// Components whose radii differ by at most this are treated as tied.
const COMPONENT_TIE: f64 = 1e-12;

/// A spectral radius with the optimal nonnegative unit vector.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralResult {
    pub value: f64,
    /// Unit in the 2-norm, or in the p-norm for the p-spectral radius.
    pub vector: Vec<f64>,
    pub residual: f64,
    pub iterations: usize,
    /// Set when global optimality is not guaranteed by the method.
    pub heuristic: bool,
}

/// Σ of `x` over the neighbours of `v`.
///
/// # Panics
/// If `x` is shorter than the vertex count.
pub fn neighbor_weight_sum(g: &Graph, x: &[f64], v: usize) -> f64 {
    bits(g.neighbors(v)).map(|w| x[w]).sum()
}

/// λ(G), the largest adjacency eigenvalue.
pub fn adjacency_radius(g: &Graph, tolerance: f64) -> Result<SpectralResult> {
    matrix_radius(g, 0.0, 1.0, tolerance)
}

/// q(G), the largest eigenvalue of D + A.
pub fn signless_laplacian_radius(g: &Graph, tolerance: f64) -> Result<SpectralResult> {
    matrix_radius(g, 1.0, 1.0, tolerance)
}

/// Largest eigenvalue of αD + (1 − α)A.
pub fn a_alpha_radius(g: &Graph, alpha: f64, tolerance: f64) -> Result<SpectralResult> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::Domain(format!("alpha must lie in [0, 1], got {alpha}")));
    }
    matrix_radius(g, alpha, 1.0 - alpha, tolerance)
}

fn check_tolerance(tolerance: f64) -> Result<()> {
    if tolerance > 0.0 && tolerance.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("tolerance must be positive, got {tolerance}")))
    }
}

/// Largest eigenvalue of `dw·D + aw·A`, maximised over components.
fn matrix_radius(g: &Graph, dw: f64, aw: f64, tolerance: f64) -> Result<SpectralResult> {
    check_tolerance(tolerance)?;
    let n = g.order();
    let mut best: Option<SpectralResult> = None;
    let mut iterations = 0;
    for comp in g.components() {
        let r = component_radius(g, comp, dw, aw, tolerance)?;
        iterations += r.iterations;
        if best.as_ref().is_none_or(|b| r.value > b.value + COMPONENT_TIE) {
            best = Some(r);
        }
    }
    let mut best = best.expect("a graph has at least one component");
    best.iterations = iterations;
    debug_assert_eq!(best.vector.len(), n);
    Ok(best)
}

fn component_radius(g: &Graph, comp: u64, dw: f64, aw: f64, tol: f64) -> Result<SpectralResult> {
    let n = g.order();
    let verts: Vec<usize> = bits(comp).collect();
    let k = verts.len();
    let mut vector = vec![0.0; n];
    if k == 1 {
        vector[verts[0]] = 1.0;
        return Ok(SpectralResult {
            value: 0.0,
            vector,
            residual: 0.0,
            iterations: 0,
            heuristic: false,
        });
    }
    let mut local = vec![usize::MAX; n];
    for (i, &v) in verts.iter().enumerate() {
        local[v] = i;
    }
    let nbrs: Vec<Vec<usize>> = verts
        .iter()
        .map(|&v| bits(g.neighbors(v)).map(|w| local[w]).collect())
        .collect();
    let diag: Vec<f64> = nbrs.iter().map(|nb| dw * nb.len() as f64).collect();
    // The shift keeps the iteration matrix primitive on bipartite components.
    let shift = aw;
    let mut x = vec![1.0 / (k as f64).sqrt(); k];
    let mut y = vec![0.0; k];
    let mut residual = f64::INFINITY;
    for it in 1..=DEFAULT_MAX_ITERATIONS {
        for i in 0..k {
            y[i] = diag[i] * x[i] + aw * nbrs[i].iter().map(|&j| x[j]).sum::<f64>();
        }
        let rho: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        residual = x.iter().zip(&y).map(|(a, b)| (b - rho * a).abs()).fold(0.0, f64::max);
        if residual <= tol {
            for (i, &v) in verts.iter().enumerate() {
                vector[v] = x[i];
            }
            return Ok(SpectralResult {
                value: rho,
                vector,
                residual,
                iterations: it,
                heuristic: false,
            });
        }
        for i in 0..k {
            y[i] += shift * x[i];
        }
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        for i in 0..k {
            x[i] = y[i] / norm;
        }
    }
    Err(Error::Convergence {
        iterations: DEFAULT_MAX_ITERATIONS,
        residual,
    })
}

/// Settings for [`p_spectral_radius`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PSpectralOptions {
    pub p: f64,
    /// Random starts in addition to the deterministic ones.
    pub restarts: usize,
    pub max_iterations: usize,
    pub tolerance: f64,
    pub seed: u64,
}

impl PSpectralOptions {
    pub fn new(p: f64) -> Self {
        PSpectralOptions {
            p,
            restarts: 8,
            max_iterations: 200_000,
            tolerance: DEFAULT_TOLERANCE,
            seed: 0,
        }
    }

    pub fn with_restarts(mut self, restarts: usize) -> Self {
        self.restarts = restarts;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_tolerance(mut self, tolerance: f64) -> Self {
        self.tolerance = tolerance;
        self
    }
}

/// 2·Σ_{ij ∈ E} x_i x_j.
pub fn edge_form(g: &Graph, x: &[f64]) -> f64 {
    (0..g.order()).map(|v| x[v] * neighbor_weight_sum(g, x, v)).sum()
}

fn p_normalize(x: &mut [f64], p: f64) -> bool {
    let norm = x.iter().map(|v| v.powf(p)).sum::<f64>().powf(1.0 / p);
    if !(norm > 0.0 && norm.is_finite()) {
        return false;
    }
    for v in x.iter_mut() {
        *v /= norm;
    }
    true
}

/// max_v |λ x_v^{p−1} − s_G(v, x)| with λ the value of the edge form at `x`.
fn stationarity_residual(g: &Graph, x: &[f64], p: f64, value: f64) -> f64 {
    (0..g.order())
        .map(|v| (value * x[v].powf(p - 1.0) - neighbor_weight_sum(g, x, v)).abs())
        .fold(0.0, f64::max)
}

struct Ascent {
    value: f64,
    vector: Vec<f64>,
    residual: f64,
    iterations: usize,
    converged: bool,
}

/// Nonlinear power iteration from `x`.
///
/// The update maximises the linearisation of 2Σx_ix_j + (2c/p)Σx_v^p over the
/// p-sphere, which is an ascent step whenever that function is convex. A
/// halving line search keeps the edge form monotone otherwise.
fn ascend(g: &Graph, mut x: Vec<f64>, opts: &PSpectralOptions, shift: f64) -> Ascent {
    let p = opts.p;
    let e = 1.0 / (p - 1.0);
    let n = g.order();
    let mut value = edge_form(g, &x);
    let mut residual = stationarity_residual(g, &x, p, value);
    let mut cand = vec![0.0; n];
    for it in 1..=opts.max_iterations {
        if residual <= opts.tolerance {
            return Ascent {
                value,
                vector: x,
                residual,
                iterations: it - 1,
                converged: true,
            };
        }
        for v in 0..n {
            let s = neighbor_weight_sum(g, &x, v);
            cand[v] = (s + shift * x[v].powf(p - 1.0)).powf(e);
        }
        if !p_normalize(&mut cand, p) {
            break;
        }
        let mut next_value = edge_form(g, &cand);
        let mut beta = 0.5;
        while next_value < value - 1e-15 * value.abs() && beta > 1e-6 {
            for v in 0..n {
                cand[v] = beta * cand[v] + (1.0 - beta) * x[v];
            }
            p_normalize(&mut cand, p);
            next_value = edge_form(g, &cand);
            beta *= 0.5;
        }
        std::mem::swap(&mut x, &mut cand);
        value = next_value;
        residual = stationarity_residual(g, &x, p, value);
    }
    Ascent {
        value,
        vector: x,
        residual,
        iterations: opts.max_iterations,
        converged: residual <= opts.tolerance,
    }
}

/// λ^(p)(G) = 2·max{Σ_{ij∈E} x_i x_j : ‖x‖_p = 1, x ≥ 0} for p > 1.
///
/// Starts from the uniform vector, from the uniform vector on each nontrivial
/// component, and from `opts.restarts` seeded random vectors; the best
/// converged value wins. Results with p < 2 are flagged as heuristic, since
/// the problem is not known to have a unique stationary point there.
pub fn p_spectral_radius(g: &Graph, opts: &PSpectralOptions) -> Result<SpectralResult> {
    let p = opts.p;
    if !(p > 1.0 && p.is_finite()) {
        return Err(Error::Domain(format!("p must be a finite real > 1, got {p}")));
    }
    check_tolerance(opts.tolerance)?;
    let n = g.order();
    if g.edge_count() == 0 {
        return Ok(SpectralResult {
            value: 0.0,
            vector: vec![0.0; n],
            residual: 0.0,
            iterations: 0,
            heuristic: false,
        });
    }
    let active: Vec<bool> = (0..n).map(|v| g.degree(v) > 0).collect();
    let support = |mask: u64| -> Vec<f64> {
        (0..n)
            .map(|v| if active[v] && mask >> v & 1 == 1 { 1.0 } else { 0.0 })
            .collect()
    };
    let mut starts = vec![support(g.vertex_mask())];
    let comps: Vec<u64> = g.components().into_iter().filter(|c| c.count_ones() > 1).collect();
    if comps.len() > 1 {
        starts.extend(comps.iter().map(|&c| support(c)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..opts.restarts {
        starts.push(
            (0..n)
                .map(|v| if active[v] { rng.random_range(0.05..1.0) } else { 0.0 })
                .collect(),
        );
    }
    let shift = g.max_degree() as f64 / (p - 1.0).min(1.0);
    let mut best: Option<Ascent> = None;
    let mut total = 0;
    let mut least_residual = f64::INFINITY;
    for mut x in starts {
        p_normalize(&mut x, p);
        let run = ascend(g, x, opts, shift);
        total += run.iterations;
        least_residual = least_residual.min(run.residual);
        if run.converged && best.as_ref().is_none_or(|b| run.value > b.value) {
            best = Some(run);
        }
    }
    match best {
        Some(b) => Ok(SpectralResult {
            value: b.value,
            vector: b.vector,
            residual: b.residual,
            iterations: total,
            heuristic: p < 2.0,
        }),
        None => Err(Error::Convergence {
            iterations: total,
            residual: least_residual,
        }),
    }
}
