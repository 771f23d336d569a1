//! Maximum clique by branch and bound with greedy colouring bounds.

use super::bits;

/// Greedy sequential colouring of `cand`; returns vertices in colour order with
/// the colour count up to and including each one.
fn color_sort(adj: &[u64], cand: u64, order: &mut Vec<usize>, bounds: &mut Vec<usize>) {
    order.clear();
    bounds.clear();
    let mut uncolored = cand;
    let mut color = 0;
    while uncolored != 0 {
        color += 1;
        let mut avail = uncolored;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            avail &= !(1 << v) & !adj[v];
            uncolored &= !(1 << v);
            order.push(v);
            bounds.push(color);
        }
    }
}

fn expand(adj: &[u64], cand: u64, size: usize, best: &mut usize, target: usize) -> bool {
    let mut order = Vec::with_capacity(cand.count_ones() as usize);
    let mut bounds = Vec::with_capacity(order.capacity());
    color_sort(adj, cand, &mut order, &mut bounds);
    let mut cand = cand;
    for idx in (0..order.len()).rev() {
        if size + bounds[idx] <= *best {
            return false;
        }
        let v = order[idx];
        let next = cand & adj[v];
        if next == 0 {
            if size + 1 > *best {
                *best = size + 1;
                if *best >= target {
                    return true;
                }
            }
        } else if expand(adj, next, size + 1, best, target) {
            return true;
        }
        cand &= !(1 << v);
    }
    false
}

pub(crate) fn clique_number(adj: &[u64]) -> usize {
    let all = super::low_mask(adj.len());
    let mut best = 0;
    expand(adj, all, 0, &mut best, usize::MAX);
    best
}

/// Whether the vertices in `mask` contain a clique of size `k`.
pub(crate) fn has_clique_in(adj: &[u64], mask: u64, k: usize) -> bool {
    match k {
        0 => true,
        1 => mask != 0,
        2 => bits(mask).any(|v| adj[v] & mask != 0),
        _ => {
            if (mask.count_ones() as usize) < k {
                return false;
            }
            let mut best = k - 1;
            expand(adj, mask, 0, &mut best, k)
        }
    }
}

pub(crate) fn has_clique(adj: &[u64], k: usize) -> bool {
    has_clique_in(adj, super::low_mask(adj.len()), k)
}

#[cfg(test)]
mod tests {
    use crate::graph::Graph;

    fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        Graph::build(n, &edges).unwrap()
    }

    #[test]
    fn small_cases() {
        assert_eq!(complete(4).clique_number(), 4);
        let c5 = Graph::build(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(c5.clique_number(), 2);
        assert_eq!(Graph::empty(3).unwrap().clique_number(), 1);
        assert!(complete(4).has_clique(3));
        assert!(!c5.has_clique(3));
        assert!(c5.has_clique(1));
    }

    #[test]
    fn has_clique_matches_clique_number() {
        // every graph on 6 vertices
        for mask in 0u32..1 << 15 {
            let mut edges = Vec::new();
            let mut bit = 0;
            for j in 1..6 {
                for i in 0..j {
                    if mask >> bit & 1 == 1 {
                        edges.push((i, j));
                    }
                    bit += 1;
                }
            }
            let g = Graph::build(6, &edges).unwrap();
            let w = g.clique_number();
            for k in 1..=6 {
                assert_eq!(g.has_clique(k), w >= k, "mask {mask} k {k}");
            }
        }
    }
}
