//! Depth-first enumeration of labelled graphs, one vertex pair at a time.
//!
//! Pairs are decided in column order (0,1), (0,2), (1,2), (0,3), … with the
//! edge tried before the non-edge. Forbidden cliques are pruned the moment an
//! edge would close one; the colour bound is checked whenever a column, and
//! hence an induced subgraph on a prefix of the vertices, is complete.

use super::Predicate;
use crate::graph::{has_clique_in, is_colorable, low_mask, Graph};

#[derive(Clone)]
pub(crate) struct Walker<'a> {
    pred: &'a Predicate,
    pairs: Vec<(usize, usize)>,
    /// Last pair index of each column, so `column_end[k]` is true when pair k
    /// completes the induced subgraph on 0..=j.
    column_end: Vec<bool>,
    rows: Vec<u64>,
    edges: usize,
    /// 0 untried, 1 edge taken, 2 non-edge taken.
    choice: Vec<u8>,
    depth: usize,
    floor: usize,
    limit: usize,
    at_leaf: bool,
    done: bool,
}

pub(crate) fn column_pairs(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

impl<'a> Walker<'a> {
    /// Walks every completion of the first `depth` pairs fixed as in `rows`.
    /// `limit` is the depth treated as a leaf.
    pub(crate) fn new(n: usize, pred: &'a Predicate, rows: Vec<u64>, depth: usize, limit: usize) -> Self {
        let pairs = column_pairs(n);
        let column_end = pairs.iter().map(|&(i, j)| i + 1 == j).collect();
        let edges = rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
        let total = pairs.len();
        Walker {
            pred,
            pairs,
            column_end,
            rows,
            edges,
            choice: vec![0; total + 1],
            depth,
            floor: depth,
            limit: limit.min(total),
            at_leaf: false,
            done: false,
        }
    }

    pub(crate) fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub(crate) fn graph(&self) -> Graph {
        Graph::from_rows_unchecked(self.rows.clone())
    }

    fn set(&mut self, k: usize, on: bool) {
        let (i, j) = self.pairs[k];
        if on {
            self.rows[i] |= 1 << j;
            self.rows[j] |= 1 << i;
            self.edges += 1;
        } else {
            self.rows[i] &= !(1 << j);
            self.rows[j] &= !(1 << i);
            self.edges -= 1;
        }
    }

    fn closes_clique(&self, k: usize) -> bool {
        let Some(kk) = self.pred.clique_free_k else {
            return false;
        };
        let (i, j) = self.pairs[k];
        if kk <= 2 {
            return true;
        }
        has_clique_in(&self.rows, self.rows[i] & self.rows[j], kk - 2)
    }

    /// Hereditary colour bound on the completed prefix 0..=j.
    fn prefix_ok(&self, k: usize) -> bool {
        let Some(r) = self.pred.max_chromatic else {
            return true;
        };
        if !self.column_end[k] {
            return true;
        }
        let j = self.pairs[k].1;
        let mask = low_mask(j + 1);
        let sub: Vec<u64> = self.rows[..=j].iter().map(|row| row & mask).collect();
        is_colorable(&sub, r)
    }

    fn leaf_ok(&self) -> bool {
        if self.limit < self.pairs.len() {
            return true;
        }
        if let Some(k) = self.pred.min_chromatic {
            if is_colorable(&self.rows, k - 1) {
                return false;
            }
        }
        if self.pred.connected_only && !self.graph().is_connected() {
            return false;
        }
        true
    }

    fn backtrack(&mut self) -> bool {
        if self.depth == self.floor {
            self.done = true;
            return false;
        }
        self.depth -= 1;
        if self.choice[self.depth] == 1 {
            self.set(self.depth, false);
        }
        true
    }

    fn descend(&mut self) {
        self.depth += 1;
        self.choice[self.depth] = 0;
    }

    /// Advances to the next accepted leaf. `keep(edges, undecided)` may veto
    /// a subtree from the edge count so far and the number of open pairs.
    pub(crate) fn next_leaf(&mut self, keep: &mut impl FnMut(usize, usize) -> bool) -> bool {
        if self.done {
            return false;
        }
        if self.at_leaf {
            self.at_leaf = false;
            if !self.backtrack() {
                return false;
            }
        } else if self.depth == self.floor {
            self.choice[self.depth] = 0;
            if !keep(self.edges, self.limit - self.depth) {
                self.done = true;
                return false;
            }
        }
        loop {
            let d = self.depth;
            if d == self.limit {
                if self.leaf_ok() {
                    self.at_leaf = true;
                    return true;
                }
                if !self.backtrack() {
                    return false;
                }
                continue;
            }
            let open = self.limit - d - 1;
            match self.choice[d] {
                0 => {
                    self.choice[d] = 1;
                    if !self.closes_clique(d) && keep(self.edges + 1, open) {
                        self.set(d, true);
                        if self.prefix_ok(d) {
                            self.descend();
                        } else {
                            self.set(d, false);
                        }
                    }
                }
                1 => {
                    self.choice[d] = 2;
                    if keep(self.edges, open) && self.prefix_ok(d) {
                        self.descend();
                    }
                }
                _ => {
                    if !self.backtrack() {
                        return false;
                    }
                }
            }
        }
    }
}

/// Iterator over every labelled graph on `n` vertices accepted by a predicate.
pub struct Enumeration<'a> {
    walker: Walker<'a>,
}

impl<'a> Enumeration<'a> {
    pub(crate) fn new(n: usize, pred: &'a Predicate) -> Self {
        let pairs = n * (n - 1) / 2;
        Enumeration {
            walker: Walker::new(n, pred, vec![0; n], 0, pairs),
        }
    }
}

impl Iterator for Enumeration<'_> {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.walker.next_leaf(&mut |_, _| true) {
            let g = self.walker.graph();
            debug_assert!(self.walker.pred.accepts(&g));
            Some(g)
        } else {
            None
        }
    }
}

/// Every prefix state at depth `depth`, as adjacency rows.
pub(crate) fn prefixes(n: usize, pred: &Predicate, depth: usize) -> Vec<Vec<u64>> {
    let mut w = Walker::new(n, pred, vec![0; n], 0, depth);
    let mut out = Vec::new();
    while w.next_leaf(&mut |_, _| true) {
        out.push(w.rows().to_vec());
    }
    out
}

/// Prefix depth used to split a search into independent shards: every pair
/// among the first min(n − 2, 6) vertices.
pub(crate) fn shard_depth(n: usize) -> usize {
    let k = n.saturating_sub(2).min(6);
    k * (k - 1) / 2
}
