//! Canonical labelling for small graphs.
//!
//! The canonical form is the lexicographically smallest column-ordered upper
//! triangle over all relabellings that list vertices by their colour-refinement
//! class. Class order is itself an isomorphism invariant, so restricting the
//! minimisation to class-respecting orders keeps the result canonical.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{bits, graph6, Graph};
use crate::error::{Error, Result};

/// Largest vertex count accepted by [`CanonicalForm::of`].
pub const CANONICAL_MAX_VERTICES: usize = 10;

/// Isomorphism-invariant encoding: the graph6 bytes of the canonical relabelling.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct CanonicalForm {
    bytes: Vec<u8>,
}

impl CanonicalForm {
    pub fn of(g: &Graph) -> Result<Self> {
        let n = g.order();
        if n > CANONICAL_MAX_VERTICES {
            return Err(Error::UnsupportedSize(format!(
                "canonical form needs n <= {CANONICAL_MAX_VERTICES}, got {n}"
            )));
        }
        let order = canonical_order(g);
        let mut perm = vec![0; n];
        for (pos, &v) in order.iter().enumerate() {
            perm[v] = pos;
        }
        let h = g.permuted(&perm)?;
        Ok(CanonicalForm {
            bytes: graph6::encode(&h).into_bytes(),
        })
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn to_graph6(&self) -> String {
        String::from_utf8(self.bytes.clone()).expect("graph6 is ASCII")
    }

    /// The canonically labelled representative.
    pub fn graph(&self) -> Graph {
        graph6::decode(&self.to_graph6()).expect("canonical bytes are valid graph6")
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.to_graph6())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_graph6())
    }
}

impl From<CanonicalForm> for String {
    fn from(c: CanonicalForm) -> String {
        c.to_graph6()
    }
}

impl TryFrom<String> for CanonicalForm {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        CanonicalForm::of(&graph6::decode(&s)?)
    }
}

/// Stable colour refinement; returns a class id per vertex, ids ordered by
/// an invariant signature.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut color: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = bits(g.neighbors(v)).map(|w| color[w]).collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs
            .iter()
            .map(|s| distinct.binary_search(s).expect("present"))
            .collect();
        let before = {
            let mut c = color.clone();
            c.sort_unstable();
            c.dedup();
            c.len()
        };
        color = next;
        if distinct.len() == before {
            return color;
        }
    }
}

struct Search<'a> {
    g: &'a Graph,
    slot_class: Vec<usize>,
    class_of: Vec<usize>,
    placed: Vec<usize>,
    used: u64,
    best: Vec<u64>,
    best_order: Vec<usize>,
}

impl Search<'_> {
    /// Column `pos` of the relabelled upper triangle; row 0 is the most
    /// significant bit so integer order equals string order.
    fn column(&self, v: usize, pos: usize) -> u64 {
        let nb = self.g.neighbors(v);
        (0..pos).fold(0u64, |acc, i| (acc << 1) | (nb >> self.placed[i] & 1))
    }

    fn run(&mut self, pos: usize) {
        let n = self.g.order();
        if pos == n {
            self.best_order = self.placed.clone();
            return;
        }
        let class = self.slot_class[pos];
        let cands: Vec<usize> = (0..n)
            .filter(|&v| self.used >> v & 1 == 0 && self.class_of[v] == class)
            .collect();
        for (idx, &v) in cands.iter().enumerate() {
            // Skip v when an earlier candidate is its twin: swapping them is an
            // automorphism fixing everything placed so far.
            let twin = cands[..idx].iter().any(|&u| {
                let mask = !(1u64 << u | 1 << v);
                self.g.neighbors(u) & mask == self.g.neighbors(v) & mask
            });
            if twin {
                continue;
            }
            let col = self.column(v, pos);
            if col > self.best[pos] {
                continue;
            }
            if col < self.best[pos] {
                self.best[pos] = col;
                for b in &mut self.best[pos + 1..] {
                    *b = u64::MAX;
                }
            }
            self.placed[pos] = v;
            self.used |= 1 << v;
            self.run(pos + 1);
            self.used &= !(1 << v);
        }
    }
}

/// Vertex order realising the canonical form: `order[pos]` is the original
/// vertex placed at `pos`.
fn canonical_order(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let class_of = refine(g);
    let mut slot_class = class_of.clone();
    slot_class.sort_unstable();
    let mut s = Search {
        g,
        slot_class,
        class_of,
        placed: vec![0; n],
        used: 0,
        best: vec![u64::MAX; n],
        best_order: Vec::new(),
    };
    s.run(0);
    s.best_order
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
        let mut edges = Vec::new();
        for j in 1..n {
            for i in 0..j {
                if rng.random_bool(p) {
                    edges.push((i, j));
                }
            }
        }
        Graph::build(n, &edges).unwrap()
    }

    #[test]
    fn invariant_under_relabelling() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let n = rng.random_range(1..=10);
            let density = rng.random_range(0.1..0.9);
            let g = random_graph(&mut rng, n, density);
            let c = g.canonical_form().unwrap();
            for _ in 0..10 {
                let mut perm: Vec<usize> = (0..n).collect();
                perm.shuffle(&mut rng);
                assert_eq!(g.permuted(&perm).unwrap().canonical_form().unwrap(), c);
            }
            assert_eq!(c.graph().edge_count(), g.edge_count());
        }
    }

    #[test]
    fn distinguishes_small_graphs() {
        let p3 = Graph::build(3, &[(0, 1), (1, 2)]).unwrap();
        let k3 = Graph::build(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_ne!(p3.canonical_form().unwrap(), k3.canonical_form().unwrap());
        let k23 = Graph::build(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        let k14 = Graph::build(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_ne!(k23.canonical_form().unwrap(), k14.canonical_form().unwrap());
    }

    #[test]
    fn counts_isomorphism_classes() {
        // Unlabelled graph counts on 1..=6 vertices.
        let expected = [1usize, 2, 4, 11, 34, 156];
        for n in 1..=6usize {
            let pairs = n * (n - 1) / 2;
            let mut seen = std::collections::HashSet::new();
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
                seen.insert(Graph::build(n, &edges).unwrap().canonical_form().unwrap());
            }
            assert_eq!(seen.len(), expected[n - 1], "n = {n}");
        }
    }

    #[test]
    fn rejects_large_graphs() {
        let g = Graph::empty(11).unwrap();
        assert!(matches!(g.canonical_form(), Err(Error::UnsupportedSize(_))));
    }

    #[test]
    fn petersen_is_fast_and_invariant() {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        let g = Graph::build(10, &edges).unwrap();
        let c = g.canonical_form().unwrap();
        let perm = [3, 9, 1, 0, 7, 2, 8, 6, 4, 5];
        assert_eq!(g.permuted(&perm).unwrap().canonical_form().unwrap(), c);
    }
}
