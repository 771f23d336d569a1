//! Exact vertex colouring by DSatur-ordered backtracking.

use super::bits;

pub(crate) fn is_bipartite(adj: &[u64]) -> bool {
    let n = adj.len();
    let mut side = vec![u8::MAX; n];
    let mut stack = Vec::new();
    for s in 0..n {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        stack.push(s);
        while let Some(v) = stack.pop() {
            for w in bits(adj[v]) {
                if side[w] == u8::MAX {
                    side[w] = side[v] ^ 1;
                    stack.push(w);
                } else if side[w] == side[v] {
                    return false;
                }
            }
        }
    }
    true
}

struct Colorer<'a> {
    adj: &'a [u64],
    k: usize,
    /// classes[c] = vertices currently coloured c.
    classes: Vec<u64>,
    uncolored: u64,
}

impl Colorer<'_> {
    fn saturation(&self, v: usize) -> usize {
        self.classes.iter().filter(|&&c| c & self.adj[v] != 0).count()
    }

    fn solve(&mut self) -> bool {
        if self.uncolored == 0 {
            return true;
        }
        // DSatur: most saturated vertex, ties broken by uncoloured degree.
        let mut pick = usize::MAX;
        let mut key = (0usize, 0usize);
        for v in bits(self.uncolored) {
            let k = (self.saturation(v), (self.adj[v] & self.uncolored).count_ones() as usize);
            if pick == usize::MAX || k > key {
                pick = v;
                key = k;
            }
        }
        let v = pick;
        self.uncolored &= !(1 << v);
        let mut opened_empty = false;
        for c in 0..self.k {
            if self.classes[c] & self.adj[v] != 0 {
                continue;
            }
            // Empty colour classes are interchangeable; try only one.
            if self.classes[c] == 0 {
                if opened_empty {
                    continue;
                }
                opened_empty = true;
            }
            self.classes[c] |= 1 << v;
            if self.solve() {
                return true;
            }
            self.classes[c] &= !(1 << v);
        }
        self.uncolored |= 1 << v;
        false
    }
}

pub(crate) fn is_colorable(adj: &[u64], k: usize) -> bool {
    let n = adj.len();
    if k >= n {
        return true;
    }
    if k == 0 {
        return n == 0;
    }
    if k == 1 {
        return adj.iter().all(|&r| r == 0);
    }
    if k == 2 {
        return is_bipartite(adj);
    }
    let mut c = Colorer {
        adj,
        k,
        classes: vec![0; k],
        uncolored: super::low_mask(n),
    };
    c.solve()
}

pub(crate) fn chromatic_number(adj: &[u64], omega: usize) -> usize {
    let mut k = omega.max(1);
    while !is_colorable(adj, k) {
        k += 1;
    }
    k
}

#[cfg(test)]
mod tests {
    use crate::graph::Graph;

    #[test]
    fn small_cases() {
        let c5 = Graph::build(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(c5.chromatic_number(), 3);
        let k34: Vec<_> = (0..3).flat_map(|i| (3..7).map(move |j| (i, j))).collect();
        assert_eq!(Graph::build(7, &k34).unwrap().chromatic_number(), 2);
        assert!(Graph::empty(1).unwrap().is_r_partite(1));
        assert!(!c5.is_r_partite(2));
        assert!(c5.is_r_partite(3));
    }

    #[test]
    fn partite_matches_chromatic_on_all_small_graphs() {
        for n in 1..=6usize {
            let pairs = n * (n - 1) / 2;
            for mask in 0u32..1 << pairs {
                let mut edges = Vec::new();
                let mut bit = 0;
                for j in 1..n {
                    for i in 0..j {
                        if mask >> bit & 1 == 1 {
                            edges.push((i, j));
                        }
                        bit += 1;
                    }
                }
                let g = Graph::build(n, &edges).unwrap();
                let chi = g.chromatic_number();
                assert!(g.clique_number() <= chi);
                for r in 1..=n {
                    assert_eq!(g.is_r_partite(r), chi <= r, "n {n} mask {mask} r {r}");
                }
            }
        }
    }
}
