//! Simple undirected graphs on at most 64 vertices, stored as adjacency bitrows.
//!
//! Row `i` holds the neighbourhood of vertex `i` as a bitmask, so clique and
//! colouring searches reduce to word-sized `&`/`popcount` operations.

mod canonical;
mod clique;
mod coloring;
pub mod graph6;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use canonical::{CanonicalForm, CANONICAL_MAX_VERTICES};
pub(crate) use clique::has_clique_in;
pub(crate) use coloring::is_colorable;

use crate::error::{Error, Result};

/// Largest supported vertex count; one adjacency row fits in a `u64`.
pub const MAX_VERTICES: usize = 64;

/// Iterates over the set bits of `mask`, lowest first.
#[inline]
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

#[inline]
pub(crate) const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A simple undirected graph on vertices `0..n`.
///
/// Values are immutable once built; every operation that changes edges returns
/// a new graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from an edge list; duplicate pairs are merged.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        check_order(n)?;
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Construction(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::Construction(format!("loop at vertex {u}")));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { n, adj })
    }

    /// Builds a graph from adjacency rows, validating symmetry and irreflexivity.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        check_order(n)?;
        let outside = !low_mask(n);
        for (i, &row) in rows.iter().enumerate() {
            if row & outside != 0 {
                return Err(Error::Construction(format!("row {i} has bits beyond vertex {}", n - 1)));
            }
            if row >> i & 1 == 1 {
                return Err(Error::Construction(format!("loop at vertex {i}")));
            }
            for j in bits(row) {
                if rows[j] >> i & 1 == 0 {
                    return Err(Error::Construction(format!("asymmetric adjacency between {i} and {j}")));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    /// Wraps rows that are already known to be valid.
    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Self {
        let g = Graph {
            n: rows.len(),
            adj: rows,
        };
        g.debug_check();
        g
    }

    #[inline]
    pub(crate) fn debug_check(&self) {
        #[cfg(debug_assertions)]
        {
            assert!((1..=MAX_VERTICES).contains(&self.n));
            for i in 0..self.n {
                assert_eq!(self.adj[i] >> i & 1, 0, "loop at {i}");
                assert_eq!(self.adj[i] & !low_mask(self.n), 0);
                for j in bits(self.adj[i]) {
                    assert_eq!(self.adj[j] >> i & 1, 1, "asymmetric {i} {j}");
                }
            }
        }
    }

    /// Number of vertices.
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    /// Bitmask of all vertices.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    /// Neighbourhood of `v` as a bitmask.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(i, j)` with `i < j`, ordered by `j` then `i`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..self.n).flat_map(move |j| bits(self.adj[j] & low_mask(j)).map(move |i| (i, j)))
    }

    /// Returns a copy with the edge `{u, v}` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.check_pair(u, v)?;
        let mut g = self.clone();
        g.adj[u] |= 1 << v;
        g.adj[v] |= 1 << u;
        Ok(g)
    }

    /// Returns a copy with the edge `{u, v}` removed (a no-op if absent).
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.check_pair(u, v)?;
        let mut g = self.clone();
        g.adj[u] &= !(1 << v);
        g.adj[v] &= !(1 << u);
        Ok(g)
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::Construction(format!("pair ({u}, {v}) outside 0..{}", self.n)));
        }
        if u == v {
            return Err(Error::Construction(format!("loop at vertex {u}")));
        }
        Ok(())
    }

    /// Subgraph induced by the vertices in `mask`, relabelled in increasing order.
    pub fn induced(&self, mask: u64) -> Result<Self> {
        let keep: Vec<usize> = bits(mask & self.vertex_mask()).collect();
        check_order(keep.len())?;
        let rows = keep
            .iter()
            .map(|&v| {
                keep.iter()
                    .enumerate()
                    .filter(|&(_, &w)| self.has_edge(v, w))
                    .fold(0u64, |acc, (k, _)| acc | 1 << k)
            })
            .collect();
        Ok(Graph::from_rows_unchecked(rows))
    }

    /// `G \ {v}`: deletes `v` and relabels the remaining vertices in order.
    pub fn delete_vertex(&self, v: usize) -> Result<Self> {
        if v >= self.n {
            return Err(Error::Construction(format!("vertex {v} outside 0..{}", self.n)));
        }
        self.induced(self.vertex_mask() & !(1 << v))
    }

    /// Relabels vertices so that old vertex `i` becomes `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::Construction(format!(
                "permutation has length {}, graph has {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || seen >> p & 1 == 1 {
                return Err(Error::Construction("not a permutation".into()));
            }
            seen |= 1 << p;
        }
        let mut rows = vec![0u64; self.n];
        for (i, &pi) in perm.iter().enumerate() {
            rows[pi] = bits(self.adj[i]).fold(0, |acc, j| acc | 1 << perm[j]);
        }
        Ok(Graph::from_rows_unchecked(rows))
    }

    /// Connected components as vertex masks, ordered by their lowest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut out = Vec::new();
        let mut unseen = self.vertex_mask();
        while unseen != 0 {
            let start = unseen.trailing_zeros() as usize;
            let comp = self.reach(start);
            unseen &= !comp;
            out.push(comp);
        }
        out
    }

    fn reach(&self, start: usize) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let next = bits(frontier).fold(0u64, |acc, v| acc | self.adj[v]);
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.reach(0) == self.vertex_mask()
    }

    /// ω(G), the size of a largest clique.
    pub fn clique_number(&self) -> usize {
        clique::clique_number(&self.adj)
    }

    /// Whether G contains `K_k`. Stops at the first clique of size `k`.
    pub fn has_clique(&self, k: usize) -> bool {
        clique::has_clique(&self.adj, k)
    }

    /// χ(G), the chromatic number.
    pub fn chromatic_number(&self) -> usize {
        coloring::chromatic_number(&self.adj, self.clique_number())
    }

    /// Whether G admits a proper colouring with `k` colours.
    pub fn is_colorable(&self, k: usize) -> bool {
        coloring::is_colorable(&self.adj, k)
    }

    /// Whether the vertex set splits into `r` independent sets (χ(G) ≤ r).
    pub fn is_r_partite(&self, r: usize) -> bool {
        match r {
            0 => false,
            1 => self.edge_count() == 0,
            2 => coloring::is_bipartite(&self.adj),
            _ => coloring::is_colorable(&self.adj, r),
        }
    }

    /// If G is complete multipartite, its part sizes in non-decreasing order.
    ///
    /// Non-adjacency must be an equivalence relation whose classes are
    /// independent sets; the edgeless graph counts as one part.
    pub fn complete_multipartite_parts(&self) -> Option<Vec<usize>> {
        let all = self.vertex_mask();
        let mut unseen = all;
        let mut parts = Vec::new();
        while unseen != 0 {
            let v = unseen.trailing_zeros() as usize;
            let class = all & !self.adj[v];
            for w in bits(class) {
                if self.adj[w] != self.adj[v] {
                    return None;
                }
            }
            parts.push(class.count_ones() as usize);
            unseen &= !class;
        }
        parts.sort_unstable();
        Some(parts)
    }

    pub fn canonical_form(&self) -> Result<CanonicalForm> {
        CanonicalForm::of(self)
    }

    pub fn to_graph6(&self) -> String {
        graph6::encode(self)
    }

    pub fn from_graph6(text: &str) -> Result<Self> {
        graph6::decode(text)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", self.to_graph6())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_graph6())
    }
}

impl From<Graph> for String {
    fn from(g: Graph) -> String {
        g.to_graph6()
    }
}

impl TryFrom<String> for Graph {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        graph6::decode(&s)
    }
}

fn check_order(n: usize) -> Result<()> {
    if (1..=MAX_VERTICES).contains(&n) {
        Ok(())
    } else {
        Err(Error::Construction(format!(
            "vertex count {n} outside 1..={MAX_VERTICES}"
        )))
    }
}

/// Free-function form of [`Graph::build`].
pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
    Graph::build(n, edges)
}
