//! Characteristic polynomials attached to the multipartite constructions.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{charpoly_of_matrix, Polynomial};
use crate::constructions::PartSizes;
use crate::error::{Error, Result};

fn lin(c: i64) -> Polynomial {
    Polynomial::linear(c)
}

fn int(v: usize) -> i64 {
    i64::try_from(v).expect("part size fits in i64")
}

/// F_{a,b}(x) = x⁵ − (ab+1)x³ + (3ab−2a−2b+1)x − 2ab+2a+2b−2, whose largest
/// root is λ(SK_{a,b}).
pub fn f_quintic(a: usize, b: usize) -> Polynomial {
    let (a, b) = (int(a), int(b));
    Polynomial::from_i64(&[
        -2 * a * b + 2 * a + 2 * b - 2,
        3 * a * b - 2 * a - 2 * b + 1,
        0,
        -(a * b + 1),
        0,
        1,
    ])
}

/// R_{b1,b2}(x) in expanded form.
pub fn r_quintic(b1: usize, b2: usize) -> Polynomial {
    let (a, b) = (int(b1), int(b2));
    Polynomial::from_i64(&[
        3 * (a - 1) * (b - 1),
        2 * a + 2 * b - 3 * a * b - 1,
        -(a * b + a + b - 3),
        a * b + 1,
        a + b + 1,
        1,
    ])
}

/// The 5×5 integer matrix C with R_{b1,b2}(x) = det(xI + C).
pub fn r_matrix(b1: usize, b2: usize) -> Vec<Vec<BigInt>> {
    let (a, b) = (int(b1) - 1, int(b2) - 1);
    [
        [1, 1, 0, a, 0],
        [1, 1, 0, 0, b],
        [0, 0, 1, a, b],
        [1, 0, 1, a, 0],
        [0, 1, 1, 0, b],
    ]
    .iter()
    .map(|row| row.iter().map(|&v| BigInt::from(v)).collect())
    .collect()
}

/// R_{b1,b2}(x) computed as the determinant det(xI + C).
pub fn r_quintic_det(b1: usize, b2: usize) -> Polynomial {
    let neg: Vec<Vec<BigInt>> = r_matrix(b1, b2)
        .into_iter()
        .map(|row| row.into_iter().map(|v| -v).collect())
        .collect();
    charpoly_of_matrix(&neg)
}

/// The (r+3)×(r+3) quotient matrix of the twin-class partition of
/// `lemma42_graph(parts)`, ordered v, w, u, B_1∖{v}, B_2∖{w}, B_3, …, B_r.
pub fn quotient_matrix(parts: &PartSizes) -> Vec<Vec<BigInt>> {
    let b: Vec<i64> = parts.sizes().iter().map(|&v| int(v)).collect();
    let r = b.len();
    let (b1, b2) = (b[0] - 1, b[1] - 1);
    let head: [[i64; 5]; 5] = [
        [0, 0, 1, 0, b2],
        [0, 0, 1, b1, 0],
        [1, 1, 0, 0, 0],
        [0, 1, 0, 0, b2],
        [1, 0, 0, b1, 0],
    ];
    let mut m = Vec::with_capacity(r + 3);
    for row in head {
        let mut full: Vec<i64> = row.to_vec();
        full.extend(&b[2..]);
        m.push(full);
    }
    for i in 2..r {
        let mut full = vec![1, 1, 1, b1, b2];
        full.extend((2..r).map(|j| if j == i { 0 } else { b[j] }));
        m.push(full);
    }
    m.into_iter()
        .map(|row| row.into_iter().map(BigInt::from).collect())
        .collect()
}

/// det(xI − A_r) for the quotient matrix, as a direct determinant.
pub fn f_parts_det(parts: &PartSizes) -> Polynomial {
    charpoly_of_matrix(&quotient_matrix(parts))
}

/// F_{b_1,…,b_r}(x) by the last-column recurrences
/// F_{b1,b2,b3} = (x+b3)F_{b1,b2} − b3·R_{b1,b2} and, for r ≥ 4,
/// F_{b1..br} = (x+br)F_{b1..b(r−1)} − br·Π_{i=3}^{r−1}(x+b_i)·R_{b1,b2}.
pub fn f_parts(parts: &PartSizes) -> Polynomial {
    let b = parts.sizes();
    let r = b.len();
    let mut f = f_quintic(b[0], b[1]);
    if r == 2 {
        return f;
    }
    let rq = r_quintic(b[0], b[1]);
    for k in 2..r {
        let bk = int(b[k]);
        let prod = b[2..k]
            .iter()
            .fold(Polynomial::constant(1), |acc, &bi| acc * lin(int(bi)));
        f = lin(bk) * f - (prod * &rq).scale(&BigInt::from(bk));
    }
    f
}

/// The three rebalancing moves on (b_1, b_2, b_3).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseKind {
    /// (b1, b2, b3) → (b1 + 1, b2 − 1, b3)
    Case2,
    /// (b1, b2, b3) → (b1 + 1, b2, b3 − 1)
    Case3,
    /// (b1, b2, b3) → (b1 − 1, b2, b3 + 1)
    Case4,
}

impl CaseKind {
    pub const ALL: [CaseKind; 3] = [CaseKind::Case2, CaseKind::Case3, CaseKind::Case4];

    /// The part sizes after the move, if every part stays positive.
    pub fn shifted(self, parts: (usize, usize, usize)) -> Option<(usize, usize, usize)> {
        let (b1, b2, b3) = parts;
        if b1 == 0 || b2 == 0 || b3 == 0 {
            return None;
        }
        match self {
            CaseKind::Case2 => (b2 >= 2).then(|| (b1 + 1, b2 - 1, b3)),
            CaseKind::Case3 => (b3 >= 2).then(|| (b1 + 1, b2, b3 - 1)),
            CaseKind::Case4 => (b1 >= 2).then(|| (b1 - 1, b2, b3 + 1)),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CaseKind::Case2 => "case2",
            CaseKind::Case3 => "case3",
            CaseKind::Case4 => "case4",
        }
    }
}

fn triple(p: (usize, usize, usize)) -> Result<PartSizes> {
    PartSizes::new(vec![p.0, p.1, p.2])
}

/// F(shifted parts) − F(parts), computed from [`f_parts`].
pub fn case_difference(kind: CaseKind, parts: (usize, usize, usize)) -> Result<Polynomial> {
    let moved = kind
        .shifted(parts)
        .ok_or_else(|| Error::Domain(format!("{} move on {:?} would empty a part", kind.name(), parts)))?;
    Ok(f_parts(&triple(moved)?) - f_parts(&triple(parts)?))
}

/// The same difference from its hand-expanded closed form.
pub fn case_difference_printed(kind: CaseKind, parts: (usize, usize, usize)) -> Result<Polynomial> {
    kind.shifted(parts)
        .ok_or_else(|| Error::Domain(format!("{} move on {:?} would empty a part", kind.name(), parts)))?;
    let (b1, b2, b3) = (int(parts.0), int(parts.1), int(parts.2));
    Ok(match kind {
        CaseKind::Case2 => {
            // (b1−b2+1)(x−1)((x−1)(x+2)(x+b3) + b3(x²−3))
            let inner = lin(-1) * lin(2) * lin(b3) + Polynomial::from_i64(&[-3, 0, 1]).scale(&BigInt::from(b3));
            (lin(-1) * inner).scale(&BigInt::from(b1 - b2 + 1))
        }
        CaseKind::Case3 => Polynomial::from_i64(&[
            5 * b1 * b2 - 5 * b1 - 5 * b2 * b3 + 5 * b3,
            6 * b2 * b3 - 6 * b1 * b2 + 4 * b1 - 4 * b2 - 4 * b3 + 4,
            b2 * b3 - b1 * b2 - b1 + b2 + b3,
            2 * (b2 * (b1 - b3 + 1) + 1),
            b1 - b3 + 2,
        ]),
        CaseKind::Case4 => Polynomial::from_i64(&[
            -5 * b1 * b2 + 5 * b1 + 5 * b2 * b3 + 10 * b2 - 5 * b3 - 10,
            6 * b1 * b2 - 6 * b2 * b3 - 4 * b1 - 8 * b2 + 4 * b3 + 4,
            b1 * b2 - b2 * b3 + b1 - b3 - 3 * b2 - 2,
            2 * b2 * (b3 - b1 + 1) - 2,
            b3 - b1,
        ]),
    })
}

/// det(xI − A(K_{t_1,…,t_r})) = x^{n−r}(Π(x+t_i) − Σ_i t_i Π_{j≠i}(x+t_j)).
pub fn charpoly_multipartite_adjacency(parts: &PartSizes) -> Polynomial {
    let t: Vec<i64> = parts.sizes().iter().map(|&v| int(v)).collect();
    let n = parts.total();
    let factors: Vec<Polynomial> = t.iter().map(|&ti| lin(ti)).collect();
    Polynomial::monomial(n - t.len()) * cleared_sum(&t, &factors)
}

/// det(xI − Q(K_{t_1,…,t_r})) =
/// Π(x−n+t_i)^{t_i−1} · (Π(x−n+2t_i) − Σ_i t_i Π_{j≠i}(x−n+2t_j)).
pub fn charpoly_multipartite_signless(parts: &PartSizes) -> Polynomial {
    let t: Vec<i64> = parts.sizes().iter().map(|&v| int(v)).collect();
    let n = int(parts.total());
    let factors: Vec<Polynomial> = t.iter().map(|&ti| lin(2 * ti - n)).collect();
    let head = t.iter().fold(Polynomial::constant(1), |acc, &ti| {
        acc * lin(ti - n).pow(usize::try_from(ti - 1).expect("positive part"))
    });
    head * cleared_sum(&t, &factors)
}

/// Π f_i − Σ_i t_i Π_{j≠i} f_j, i.e. (1 − Σ t_i/f_i)·Π f_i with denominators cleared.
fn cleared_sum(t: &[i64], factors: &[Polynomial]) -> Polynomial {
    let all = factors.iter().fold(Polynomial::constant(1), |acc, f| acc * f);
    let mut out = all;
    for (i, &ti) in t.iter().enumerate() {
        let others = factors
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .fold(Polynomial::constant(1), |acc, (_, f)| acc * f);
        out = out - others.scale(&BigInt::from(ti));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charpoly::{charpoly_exact, charpoly_signless_exact, largest_root};
    use crate::constructions::complete_multipartite;

    fn parts(v: &[usize]) -> PartSizes {
        PartSizes::new(v.to_vec()).unwrap()
    }

    #[test]
    fn f_quintic_examples() {
        assert_eq!(f_quintic(2, 2), Polynomial::from_i64(&[-2, 5, 0, -5, 0, 1]));
        assert!((largest_root(&f_quintic(2, 2), 1e-13).unwrap() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn f_shift_identity() {
        for s in 1..=6usize {
            for t in s..=6usize {
                let lhs = f_quintic(s + 2, t + 2) - f_quintic(s + 1, t + 3);
                let k = int(t) - int(s) + 1;
                let rhs = (lin(-1).pow(2) * lin(2)).scale(&BigInt::from(-k));
                assert_eq!(lhs, rhs, "s = {s}, t = {t}");
            }
        }
    }

    #[test]
    fn r_forms_agree() {
        for b1 in 1..=8 {
            for b2 in 1..=8 {
                assert_eq!(r_quintic(b1, b2), r_quintic_det(b1, b2), "({b1}, {b2})");
            }
        }
        assert_eq!(r_quintic(1, 1), Polynomial::from_i64(&[0, 0, 0, 2, 3, 1]));
    }

    #[test]
    fn r_shift_identity() {
        for b1 in 1..=7usize {
            for b2 in 2..=7usize {
                let lhs = r_quintic(b1 + 1, b2 - 1) - r_quintic(b1, b2);
                let k = int(b1) - int(b2) + 1;
                let rhs = (lin(-1) * Polynomial::from_i64(&[-3, 0, 1])).scale(&BigInt::from(-k));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn recurrence_matches_determinant() {
        for r in 2..=5 {
            for p in PartSizes::compositions(r + 4, r) {
                assert_eq!(f_parts(&p), f_parts_det(&p), "{p}");
            }
        }
    }

    #[test]
    fn printed_case_differences() {
        for b1 in 1..=6 {
            for b2 in 1..=6 {
                for b3 in 1..=6 {
                    for kind in CaseKind::ALL {
                        let t = (b1, b2, b3);
                        match (case_difference(kind, t), case_difference_printed(kind, t)) {
                            (Ok(a), Ok(b)) => assert_eq!(a, b, "{kind:?} {t:?}"),
                            (Err(_), Err(_)) => {}
                            _ => panic!("domain mismatch for {kind:?} {t:?}"),
                        }
                    }
                }
            }
        }
        assert!(matches!(
            case_difference(CaseKind::Case4, (1, 2, 3)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn closed_forms() {
        assert_eq!(
            charpoly_multipartite_adjacency(&parts(&[2, 2])),
            Polynomial::monomial(2) * lin(2) * lin(-2)
        );
        assert_eq!(
            charpoly_multipartite_signless(&parts(&[1, 1])),
            Polynomial::from_i64(&[0, -2, 1])
        );
        for p in [parts(&[1, 2, 3]), parts(&[2, 3]), parts(&[1, 1, 1, 1])] {
            let g = complete_multipartite(&p);
            assert_eq!(charpoly_multipartite_adjacency(&p), charpoly_exact(&g).unwrap());
            assert_eq!(charpoly_multipartite_signless(&p), charpoly_signless_exact(&g).unwrap());
        }
        let q = largest_root(&charpoly_multipartite_signless(&parts(&[2, 3])), 1e-13).unwrap();
        assert!((q - 5.0).abs() < 1e-12);
    }
}
