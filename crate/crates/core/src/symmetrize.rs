//! Spectral Zykov symmetrization and Erdős degree majorization.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};
use crate::spectra::{adjacency_radius, neighbor_weight_sum, DEFAULT_TOLERANCE};

/// Weighted neighbour sums closer than this are treated as equal.
pub const TIE_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StepKind {
    /// Non-adjacent pair with strictly different weighted neighbour sums.
    Zykov,
    /// Non-adjacent pair with equal sums but different neighbourhoods.
    ZykovTie,
    Majorization,
}

/// A Zykov move: `replaced` becomes a twin of `template`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZykovMove {
    pub replaced: usize,
    pub template: usize,
    pub tie: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceStep {
    pub kind: StepKind,
    /// `[replaced, template]` for Zykov moves, `[pivot]` for majorization.
    pub vertices: Vec<usize>,
    pub lambda_before: f64,
    pub lambda_after: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SymmetrizationTrace {
    pub steps: Vec<TraceStep>,
    pub final_graph: Graph,
    /// Part sizes, smallest first, when the final graph is complete multipartite.
    pub final_parts: Option<Vec<usize>>,
}

impl SymmetrizationTrace {
    pub fn initial_lambda(&self) -> Option<f64> {
        self.steps.first().map(|s| s.lambda_before)
    }

    pub fn final_lambda(&self) -> Option<f64> {
        self.steps.last().map(|s| s.lambda_after)
    }
}

/// Z_{u,v}(G): removes every edge at `u`, then joins `u` to N(v).
pub fn zykov_shift(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    let n = g.order();
    if u >= n || v >= n {
        return Err(Error::Precondition(format!("vertices ({u}, {v}) outside 0..{n}")));
    }
    if u == v {
        return Err(Error::Precondition(format!("u and v coincide ({u})")));
    }
    if g.has_edge(u, v) {
        return Err(Error::Precondition(format!("{u} and {v} are adjacent")));
    }
    let mut rows = g.rows().to_vec();
    for w in bits(rows[u]) {
        rows[w] &= !(1 << u);
    }
    rows[u] = rows[v];
    for w in bits(rows[u]) {
        rows[w] |= 1 << u;
    }
    Ok(Graph::from_rows_unchecked(rows))
}

/// Picks the next Zykov move under the weights `x`.
///
/// Non-adjacent pairs are scanned in lexicographic order. The first pair whose
/// sums differ by more than [`TIE_TOLERANCE`] wins, and the vertex with the
/// smaller sum is overwritten. If no such pair exists, the first tied pair
/// with different neighbourhoods is used and its higher index becomes a twin
/// of the lower.
pub fn next_zykov_move(g: &Graph, x: &[f64]) -> Option<ZykovMove> {
    let n = g.order();
    let s: Vec<f64> = (0..n).map(|v| neighbor_weight_sum(g, x, v)).collect();
    let mut tie = None;
    for i in 0..n {
        for j in i + 1..n {
            if g.has_edge(i, j) || g.neighbors(i) == g.neighbors(j) {
                continue;
            }
            if (s[i] - s[j]).abs() > TIE_TOLERANCE {
                let (replaced, template) = if s[i] > s[j] { (j, i) } else { (i, j) };
                return Some(ZykovMove {
                    replaced,
                    template,
                    tie: false,
                });
            }
            if tie.is_none() {
                tie = Some(ZykovMove {
                    replaced: j,
                    template: i,
                    tie: true,
                });
            }
        }
    }
    tie
}

/// One spectral Zykov step; `None` once every non-adjacent pair are twins,
/// i.e. the graph is complete multipartite.
pub fn spectral_zykov_step(g: &Graph, x: &[f64]) -> Option<(Graph, ZykovMove)> {
    let mv = next_zykov_move(g, x)?;
    let h = zykov_shift(g, mv.replaced, mv.template).expect("move is between non-adjacent vertices");
    Some((h, mv))
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Precondition("graph must be connected".into()))
    }
}

/// Repeats [`spectral_zykov_step`], re-solving the Perron vector after every
/// move, until the graph is complete multipartite. `max_steps` defaults to n².
pub fn symmetrize_to_multipartite(g: &Graph, max_steps: Option<usize>) -> Result<SymmetrizationTrace> {
    require_connected(g)?;
    let budget = max_steps.unwrap_or(g.order() * g.order());
    if budget == 0 {
        return Err(Error::Precondition("max_steps must be at least 1".into()));
    }
    let mut cur = g.clone();
    let mut perron = adjacency_radius(&cur, DEFAULT_TOLERANCE)?;
    let mut steps = Vec::new();
    loop {
        let Some((next, mv)) = spectral_zykov_step(&cur, &perron.vector) else {
            let final_parts = cur.complete_multipartite_parts();
            return Ok(SymmetrizationTrace {
                steps,
                final_graph: cur,
                final_parts,
            });
        };
        if steps.len() == budget {
            let final_parts = cur.complete_multipartite_parts();
            return Err(Error::Budget {
                steps: budget,
                trace: Box::new(SymmetrizationTrace {
                    steps,
                    final_graph: cur,
                    final_parts,
                }),
            });
        }
        let after = adjacency_radius(&next, DEFAULT_TOLERANCE)?;
        steps.push(TraceStep {
            kind: if mv.tie { StepKind::ZykovTie } else { StepKind::Zykov },
            vertices: vec![mv.replaced, mv.template],
            lambda_before: perron.value,
            lambda_after: after.value,
        });
        cur = next;
        perron = after;
    }
}

/// Vertex of `active` with the largest weighted neighbour sum; lowest index on ties.
pub fn majorization_pivot(g: &Graph, x: &[f64], active: u64) -> Option<usize> {
    let mut best: Option<(usize, f64)> = None;
    for v in bits(active & g.vertex_mask()) {
        let s = neighbor_weight_sum(g, x, v);
        if best.is_none_or(|(_, b)| s > b) {
            best = Some((v, s));
        }
    }
    best.map(|(v, _)| v)
}

/// One Erdős majorization step inside `active`.
///
/// With v the pivot and N = N(v) ∩ active, every vertex of active ∖ N other
/// than v loses its edges inside `active`, then active ∖ N is joined
/// completely to N. Edges leaving `active` are untouched.
pub fn erdos_majorization_step(g: &Graph, x: &[f64], active: u64) -> Result<Graph> {
    let active = active & g.vertex_mask();
    let v = majorization_pivot(g, x, active).ok_or_else(|| Error::Precondition("active set is empty".into()))?;
    Ok(majorize_at(g, v, active))
}

fn majorize_at(g: &Graph, v: usize, active: u64) -> Graph {
    let nb = g.neighbors(v) & active;
    let rest = active & !nb;
    let mut rows = g.rows().to_vec();
    for w in bits(rest & !(1 << v)) {
        for t in bits(rows[w] & active) {
            rows[t] &= !(1 << w);
        }
        rows[w] &= !active;
    }
    for w in bits(rest) {
        rows[w] |= nb;
        for t in bits(nb) {
            rows[t] |= 1 << w;
        }
    }
    Graph::from_rows_unchecked(rows)
}

/// Applies majorization steps with the Perron vector of `g`, shrinking the
/// active set to the pivot's neighbourhood each time, until it is empty.
pub fn erdos_majorization_pipeline(g: &Graph) -> Result<SymmetrizationTrace> {
    require_connected(g)?;
    let perron = adjacency_radius(g, DEFAULT_TOLERANCE)?;
    let x = &perron.vector;
    let mut cur = g.clone();
    let mut lambda = perron.value;
    let mut active = g.vertex_mask();
    let mut steps = Vec::new();
    while let Some(v) = majorization_pivot(&cur, x, active) {
        let next = majorize_at(&cur, v, active);
        let after = adjacency_radius(&next, DEFAULT_TOLERANCE)?.value;
        steps.push(TraceStep {
            kind: StepKind::Majorization,
            vertices: vec![v],
            lambda_before: lambda,
            lambda_after: after,
        });
        active &= next.neighbors(v);
        cur = next;
        lambda = after;
    }
    let final_parts = cur.complete_multipartite_parts();
    Ok(SymmetrizationTrace {
        steps,
        final_graph: cur,
        final_parts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::turan_graph;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::build(n, &edges).unwrap()
    }

    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::build(10, &edges).unwrap()
    }

    #[test]
    fn zykov_shift_examples() {
        let p3 = Graph::build(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(zykov_shift(&p3, 0, 2).unwrap(), p3);
        assert!(matches!(zykov_shift(&p3, 0, 1), Err(Error::Precondition(_))));
        let c5 = cycle(5);
        for (u, v) in [(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)] {
            assert_eq!(zykov_shift(&c5, u, v).unwrap().clique_number(), 2);
            assert_eq!(zykov_shift(&c5, v, u).unwrap().clique_number(), 2);
        }
    }

    #[test]
    fn step_on_c5_uses_tie_rule() {
        let c5 = cycle(5);
        let x = adjacency_radius(&c5, DEFAULT_TOLERANCE).unwrap().vector;
        let (_, mv) = spectral_zykov_step(&c5, &x).unwrap();
        assert_eq!(
            mv,
            ZykovMove {
                replaced: 2,
                template: 0,
                tie: true
            }
        );
        let t = turan_graph(7, 3).unwrap();
        let x = adjacency_radius(&t, DEFAULT_TOLERANCE).unwrap().vector;
        assert!(spectral_zykov_step(&t, &x).is_none());
    }

    #[test]
    fn driver_examples() {
        let t = symmetrize_to_multipartite(&turan_graph(7, 3).unwrap(), None).unwrap();
        assert!(t.steps.is_empty());
        assert_eq!(t.final_parts, Some(vec![2, 2, 3]));

        let t = symmetrize_to_multipartite(&cycle(5), None).unwrap();
        let parts = t.final_parts.clone().unwrap();
        assert_eq!(parts.len(), 2);
        assert!(t.final_lambda().unwrap() >= 2.0 - 1e-9);

        let t = symmetrize_to_multipartite(&petersen(), None).unwrap();
        let parts = t.final_parts.clone().unwrap();
        assert_eq!(parts.len(), 2);
        assert!(((parts[0] * parts[1]) as f64).sqrt() >= 3.0 - 1e-9);

        let two_k2 = Graph::build(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            symmetrize_to_multipartite(&two_k2, None),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn budget_error_keeps_trace() {
        match symmetrize_to_multipartite(&petersen(), Some(1)) {
            Err(Error::Budget { steps, trace }) => {
                assert_eq!(steps, 1);
                assert_eq!(trace.steps.len(), 1);
            }
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn majorization_pipeline() {
        let c5 = cycle(5);
        let t = erdos_majorization_pipeline(&c5).unwrap();
        assert_eq!(t.final_parts.as_ref().map(Vec::len), Some(2));
        let tg = turan_graph(7, 3).unwrap();
        assert_eq!(erdos_majorization_pipeline(&tg).unwrap().final_graph, tg);
        assert!(erdos_majorization_step(&c5, &[1.0; 5], 0).is_err());
    }
}
