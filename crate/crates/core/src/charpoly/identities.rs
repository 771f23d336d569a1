//! Exact checks of the polynomial identities behind the family recurrences.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{
    case_difference, case_difference_printed, f_parts, f_parts_det, f_quintic, r_quintic, r_quintic_det, CaseKind,
    Polynomial,
};
use crate::constructions::PartSizes;

/// One identity on one parameter tuple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub identity: String,
    pub params: Vec<usize>,
    pub holds: bool,
}

/// Pass counts for one identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentitySummary {
    pub identity: String,
    pub statement: String,
    pub checked: usize,
    pub failed: usize,
}

/// Every identity checked on every tuple of a grid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityTable {
    pub max: usize,
    pub summary: Vec<IdentitySummary>,
    pub checks: Vec<IdentityCheck>,
}

impl IdentityTable {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

const IDENTITIES: [(&str, &str); 7] = [
    (
        "f_shift",
        "F_{s+2,t+2} - F_{s+1,t+3} = -(t-s+1)(x-1)^2(x+2), 1 <= s <= t <= max-1",
    ),
    (
        "r_shift",
        "R_{b1+1,b2-1} - R_{b1,b2} = -(b1-b2+1)(x-1)(x^2-3), 1 <= b1 <= max, 2 <= b2 <= max",
    ),
    ("r_determinant", "expanded R_{b1,b2} = det(xI + C), 1 <= b1, b2 <= max"),
    (
        "case2",
        "factored case 2 difference = difference of recurrence polynomials, parts <= max",
    ),
    (
        "case3",
        "expanded case 3 difference = difference of recurrence polynomials, parts <= max",
    ),
    (
        "case4",
        "expanded case 4 difference = difference of recurrence polynomials, parts <= max",
    ),
    (
        "recurrence",
        "last-column recurrence = quotient-matrix determinant, 2 <= r <= 4, total <= max",
    ),
];

fn lin(c: i64) -> Polynomial {
    Polynomial::linear(c)
}

fn signed(v: usize) -> i64 {
    i64::try_from(v).expect("grid value fits in i64")
}

/// Checks the identities on the grid bounded by `max`.
pub fn check_identities(max: usize) -> IdentityTable {
    let mut checks = Vec::new();
    let mut push = |identity: &str, params: Vec<usize>, holds: bool| {
        checks.push(IdentityCheck {
            identity: identity.to_string(),
            params,
            holds,
        });
    };
    for s in 1..max {
        for t in s..max {
            let lhs = f_quintic(s + 2, t + 2) - f_quintic(s + 1, t + 3);
            let rhs = (lin(-1).pow(2) * lin(2)).scale(&BigInt::from(signed(s) - signed(t) - 1));
            push("f_shift", vec![s, t], lhs == rhs);
        }
    }
    for b1 in 1..=max {
        for b2 in 2..=max {
            let lhs = r_quintic(b1 + 1, b2 - 1) - r_quintic(b1, b2);
            let rhs = (lin(-1) * Polynomial::from_i64(&[-3, 0, 1])).scale(&BigInt::from(signed(b2) - signed(b1) - 1));
            push("r_shift", vec![b1, b2], lhs == rhs);
        }
    }
    for b1 in 1..=max {
        for b2 in 1..=max {
            push(
                "r_determinant",
                vec![b1, b2],
                r_quintic(b1, b2) == r_quintic_det(b1, b2),
            );
        }
    }
    for kind in CaseKind::ALL {
        for b1 in 1..=max {
            for b2 in 1..=max {
                for b3 in 1..=max {
                    let t = (b1, b2, b3);
                    if kind.shifted(t).is_none() {
                        continue;
                    }
                    let holds = match (case_difference(kind, t), case_difference_printed(kind, t)) {
                        (Ok(a), Ok(b)) => a == b,
                        _ => false,
                    };
                    push(kind.name(), vec![b1, b2, b3], holds);
                }
            }
        }
    }
    for r in 2..=4 {
        for total in r..=max {
            for p in PartSizes::compositions(total, r) {
                let holds = f_parts(&p) == f_parts_det(&p);
                push("recurrence", p.sizes().to_vec(), holds);
            }
        }
    }
    let summary = IDENTITIES
        .iter()
        .map(|&(id, statement)| {
            let mine: Vec<_> = checks.iter().filter(|c| c.identity == id).collect();
            IdentitySummary {
                identity: id.to_string(),
                statement: statement.to_string(),
                checked: mine.len(),
                failed: mine.iter().filter(|c| !c.holds).count(),
            }
        })
        .collect();
    IdentityTable { max, summary, checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_holds() {
        let t = check_identities(7);
        assert!(t.all_hold());
        let count = |id: &str| t.summary.iter().find(|s| s.identity == id).unwrap().checked;
        assert_eq!(count("f_shift"), 21);
        assert_eq!(count("r_shift"), 42);
        assert_eq!(count("case2"), 7 * 6 * 7);
        assert!(count("recurrence") > 0);
    }

    #[test]
    fn empty_grid() {
        let t = check_identities(1);
        assert!(t.all_hold());
        assert_eq!(t.summary[0].checked, 0);
    }
}
