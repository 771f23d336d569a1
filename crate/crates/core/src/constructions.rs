//! Builders for the named graph families.
//!
//! Blocks of a multipartite graph occupy consecutive index ranges in the order
//! the part sizes are given. Special vertices sit at fixed positions, noted on
//! each builder.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

/// Part sizes (b_1, …, b_r) of a multipartite construction, in the given order.
///
/// The order matters for [`lemma42_graph`], where b_1 and b_2 are the parts
/// holding the two special vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct PartSizes(Vec<usize>);

impl PartSizes {
    /// Requires r ≥ 2, every part ≥ 1 and a total of at most 63.
    pub fn new(sizes: Vec<usize>) -> Result<Self> {
        if sizes.len() < 2 {
            return Err(Error::Domain(format!("need at least two parts, got {}", sizes.len())));
        }
        if sizes.contains(&0) {
            return Err(Error::Domain("part sizes must be positive".into()));
        }
        let total: usize = sizes.iter().sum();
        if total > MAX_VERTICES - 1 {
            return Err(Error::Domain(format!(
                "parts total {total}, at most {} allowed",
                MAX_VERTICES - 1
            )));
        }
        Ok(PartSizes(sizes))
    }

    pub fn sizes(&self) -> &[usize] {
        &self.0
    }

    pub fn r(&self) -> usize {
        self.0.len()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// The same multiset in non-decreasing order.
    pub fn sorted(&self) -> PartSizes {
        let mut s = self.0.clone();
        s.sort_unstable();
        PartSizes(s)
    }

    /// Σ_{i<j} b_i b_j, the edge count of the complete multipartite graph.
    pub fn multipartite_edges(&self) -> usize {
        let t = self.total();
        (t * t - self.0.iter().map(|b| b * b).sum::<usize>()) / 2
    }

    /// Every ordered r-tuple of positive parts summing to `total`.
    pub fn compositions(total: usize, r: usize) -> Vec<PartSizes> {
        fn rec(left: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<PartSizes>) {
            if slots == 1 {
                cur.push(left);
                out.push(PartSizes(cur.clone()));
                cur.pop();
                return;
            }
            for b in 1..=left.saturating_sub(slots - 1) {
                cur.push(b);
                rec(left - b, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if r >= 2 && total >= r && total < MAX_VERTICES {
            rec(total, r, &mut Vec::with_capacity(r), &mut out);
        }
        out
    }
}

impl TryFrom<Vec<usize>> for PartSizes {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        PartSizes::new(v)
    }
}

impl From<PartSizes> for Vec<usize> {
    fn from(p: PartSizes) -> Vec<usize> {
        p.0
    }
}

impl fmt::Display for PartSizes {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|b| b.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

fn multipartite_rows(sizes: &[usize], n: usize) -> Vec<u64> {
    let mut rows = vec![0u64; n];
    let mut start = 0;
    let total: usize = sizes.iter().sum();
    let all = crate::graph::low_mask(total);
    for &b in sizes {
        let block = crate::graph::low_mask(start + b) & !crate::graph::low_mask(start);
        for row in &mut rows[start..start + b] {
            *row = all & !block;
        }
        start += b;
    }
    rows
}

/// K_{b_1,…,b_r}.
pub fn complete_multipartite(parts: &PartSizes) -> Graph {
    let n = parts.total();
    Graph::from_rows_unchecked(multipartite_rows(parts.sizes(), n))
}

/// Part sizes of T_r(n) in non-decreasing order.
pub fn turan_parts(n: usize, r: usize) -> Result<Vec<usize>> {
    if r == 0 || r > n {
        return Err(Error::Domain(format!(
            "Turán graph needs 1 <= r <= n, got n = {n}, r = {r}"
        )));
    }
    let q = n / r;
    let big = n % r;
    Ok((0..r).map(|i| if i < r - big { q } else { q + 1 }).collect())
}

/// e(T_r(n)).
pub fn turan_edges(n: usize, r: usize) -> Result<usize> {
    let parts = turan_parts(n, r)?;
    Ok((n * n - parts.iter().map(|b| b * b).sum::<usize>()) / 2)
}

/// T_r(n), the balanced complete r-partite graph; T_1(n) is edgeless.
pub fn turan_graph(n: usize, r: usize) -> Result<Graph> {
    let parts = turan_parts(n, r)?;
    if n > MAX_VERTICES {
        return Err(Error::Construction(format!("{n} vertices exceeds {MAX_VERTICES}")));
    }
    Ok(Graph::from_rows_unchecked(multipartite_rows(&parts, n)))
}

/// SK_{a,b}: K_{a,b} with the edge between vertex 0 and vertex `a` subdivided
/// by the new vertex `a + b`.
pub fn sk_graph(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(Error::Domain(format!("SK needs a, b >= 1, got ({a}, {b})")));
    }
    let n = a + b + 1;
    if n > MAX_VERTICES {
        return Err(Error::Construction(format!("{n} vertices exceeds {MAX_VERTICES}")));
    }
    let mut rows = multipartite_rows(&[a, b], n);
    rows[0] &= !(1 << a);
    rows[a] &= !1;
    let c = a + b;
    rows[c] = 1 | 1 << a;
    rows[0] |= 1 << c;
    rows[a] |= 1 << c;
    Ok(Graph::from_rows_unchecked(rows))
}

/// K_{b_1,…,b_r} with a new last vertex u, the edge vw removed for v the first
/// vertex of B_1 and w the first of B_2, and u joined to v, w and every
/// vertex of B_3 ∪ … ∪ B_r.
pub fn lemma42_graph(parts: &PartSizes) -> Result<Graph> {
    let s = parts.sizes();
    let n = parts.total() + 1;
    let mut rows = multipartite_rows(s, n);
    let v = 0;
    let w = s[0];
    let u = n - 1;
    rows[v] &= !(1 << w);
    rows[w] &= !(1 << v);
    let rest = crate::graph::low_mask(n - 1) & !crate::graph::low_mask(s[0] + s[1]);
    rows[u] = 1 << v | 1 << w | rest;
    for t in crate::graph::bits(rows[u]) {
        rows[t] |= 1 << u;
    }
    Ok(Graph::from_rows_unchecked(rows))
}

/// Part sizes of T_r(n − 1), smallest first; the composition behind Y_r(n).
pub fn y_parts(n: usize, r: usize) -> Result<PartSizes> {
    if r < 2 || n < 2 * r + 1 {
        return Err(Error::Domain(format!(
            "Y_r(n) needs r >= 2 and n >= 2r + 1, got n = {n}, r = {r}"
        )));
    }
    if n > MAX_VERTICES {
        return Err(Error::Construction(format!("{n} vertices exceeds {MAX_VERTICES}")));
    }
    PartSizes::new(turan_parts(n - 1, r)?)
}

/// Y_r(n): [`lemma42_graph`] on the parts of T_r(n − 1) with v, w in the two
/// smallest parts.
pub fn y_graph(n: usize, r: usize) -> Result<Graph> {
    lemma42_graph(&y_parts(n, r)?)
}

/// The triangle-free non-bipartite graph with X = {0, …, ⌊n/2⌋ − 1} split as
/// X_1 = the first `x1` vertices, u = ⌊n/2⌋ and v = ⌊n/2⌋ + 1 adjacent, u
/// joined to X_1, v joined to X_2, and X complete to the rest of Y.
///
/// Requires n ≥ 5 and 1 ≤ x1 ≤ ⌊n/2⌋ − 1; an empty X_1 or X_2 would make the
/// graph bipartite.
pub fn erdos_family_graph(n: usize, x1: usize) -> Result<Graph> {
    let h = n / 2;
    if n < 5 || x1 == 0 || x1 >= h {
        return Err(Error::Domain(format!(
            "need n >= 5 and 1 <= x1 <= {}, got n = {n}, x1 = {x1}",
            h.saturating_sub(1)
        )));
    }
    if n > MAX_VERTICES {
        return Err(Error::Construction(format!("{n} vertices exceeds {MAX_VERTICES}")));
    }
    let (u, v) = (h, h + 1);
    let mut edges = vec![(u, v)];
    for x in 0..h {
        edges.push((x, if x < x1 { u } else { v }));
        for y in h + 2..n {
            edges.push((x, y));
        }
    }
    Graph::build(n, &edges)
}

/// S_{n,k} = K_k ∨ I_{n−k}; the clique is on the first k vertices.
pub fn split_graph(n: usize, k: usize) -> Result<Graph> {
    if k == 0 || k >= n {
        return Err(Error::Domain(format!(
            "split graph needs 1 <= k < n, got n = {n}, k = {k}"
        )));
    }
    if n > MAX_VERTICES {
        return Err(Error::Construction(format!("{n} vertices exceeds {MAX_VERTICES}")));
    }
    let all = crate::graph::low_mask(n);
    let clique = crate::graph::low_mask(k);
    let rows = (0..n).map(|v| if v < k { all & !(1 << v) } else { clique }).collect();
    Ok(Graph::from_rows_unchecked(rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parts(v: &[usize]) -> PartSizes {
        PartSizes::new(v.to_vec()).unwrap()
    }

    fn canon(g: &Graph) -> crate::graph::CanonicalForm {
        g.canonical_form().unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::build(n, &edges).unwrap()
    }

    #[test]
    fn part_sizes_validation() {
        assert!(PartSizes::new(vec![3]).is_err());
        assert!(PartSizes::new(vec![1, 0]).is_err());
        assert!(PartSizes::new(vec![32, 32]).is_err());
        assert!(PartSizes::new(vec![31, 32]).is_ok());
        assert_eq!(parts(&[3, 1, 2]).sorted().sizes(), &[1, 2, 3]);
        assert_eq!(PartSizes::compositions(5, 2).len(), 4);
        assert_eq!(PartSizes::compositions(6, 3).len(), 10);
    }

    #[test]
    fn multipartite_examples() {
        assert_eq!(complete_multipartite(&parts(&[2, 3])).edge_count(), 6);
        assert_eq!(complete_multipartite(&parts(&[1, 1, 1])).edge_count(), 3);
        assert_eq!(complete_multipartite(&parts(&[2, 2, 3])).edge_count(), 16);
    }

    #[test]
    fn turan_examples() {
        let t = turan_graph(5, 2).unwrap();
        assert_eq!(t.edge_count(), 6);
        assert_eq!(t.complete_multipartite_parts(), Some(vec![2, 3]));
        assert_eq!(turan_graph(7, 3).unwrap().edge_count(), 16);
        assert_eq!(turan_graph(4, 1).unwrap().edge_count(), 0);
        assert!(turan_graph(3, 4).is_err());
        for n in 3..=20 {
            for r in 2..n.min(6) {
                let g = turan_graph(n, r).unwrap();
                assert!(!g.has_clique(r + 1));
                assert!(g.is_r_partite(r));
                assert_eq!(g.edge_count(), turan_edges(n, r).unwrap());
            }
        }
    }

    #[test]
    fn sk_examples() {
        assert_eq!(canon(&sk_graph(2, 2).unwrap()), canon(&cycle(5)));
        let g = sk_graph(2, 3).unwrap();
        assert_eq!((g.order(), g.edge_count(), g.chromatic_number()), (6, 7, 3));
        for a in 1..=8 {
            for b in 1..=8 {
                let g = sk_graph(a, b).unwrap();
                assert!(!g.has_clique(3));
                assert_eq!(!g.is_r_partite(2), a.min(b) >= 2, "({a}, {b})");
            }
        }
    }

    #[test]
    fn lemma42_examples() {
        assert_eq!(canon(&lemma42_graph(&parts(&[2, 2])).unwrap()), canon(&cycle(5)));
        let g = lemma42_graph(&parts(&[2, 2, 2])).unwrap();
        assert!(!g.has_clique(4));
        assert_eq!(g.chromatic_number(), 4);
        assert_eq!(g.edge_count(), 15);
    }

    #[test]
    fn y_examples() {
        assert_eq!(canon(&y_graph(5, 2).unwrap()), canon(&cycle(5)));
        assert_eq!(y_graph(13, 3).unwrap().edge_count(), 53);
        assert!(matches!(y_graph(6, 3), Err(Error::Domain(_))));
        for n in 5..=9 {
            let sk = sk_graph((n - 1) / 2, n / 2).unwrap();
            assert_eq!(canon(&y_graph(n, 2).unwrap()), canon(&sk));
        }
        for r in 2..=4 {
            for n in 2 * r + 1..=20 {
                let g = y_graph(n, r).unwrap();
                assert!(!g.has_clique(r + 1));
                assert_eq!(g.chromatic_number(), r + 1);
                assert_eq!(g.edge_count(), turan_edges(n, r).unwrap() - n / r + 1);
            }
        }
    }

    #[test]
    fn erdos_family_examples() {
        for n in 5..=12 {
            for x1 in 1..n / 2 {
                let g = erdos_family_graph(n, x1).unwrap();
                assert_eq!(g.edge_count(), (n - 1) * (n - 1) / 4 + 1);
                assert_eq!(g.clique_number(), 2);
                assert_eq!(g.chromatic_number(), 3);
            }
            if n <= 10 {
                let sk = sk_graph((n - 1) / 2, n / 2).unwrap();
                assert_eq!(canon(&erdos_family_graph(n, n / 2 - 1).unwrap()), canon(&sk));
            }
        }
        assert!(erdos_family_graph(7, 0).is_err());
        assert!(erdos_family_graph(7, 3).is_err());
        assert!(erdos_family_graph(4, 1).is_err());
    }

    #[test]
    fn split_examples() {
        let star = split_graph(5, 1).unwrap();
        assert_eq!(star.complete_multipartite_parts(), Some(vec![1, 4]));
        assert_eq!(split_graph(4, 2).unwrap().edge_count(), 5);
        assert_eq!(split_graph(5, 4).unwrap().edge_count(), 10);
        assert!(split_graph(3, 3).is_err());
    }
}
