//! Exact integer polynomials, characteristic polynomials and real root isolation.

mod exact;
mod family;
mod identities;
mod sturm;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

pub use exact::{charpoly_exact, charpoly_of_matrix, charpoly_signless_exact, EXACT_MAX_VERTICES};
pub use family::{
    case_difference, case_difference_printed, charpoly_multipartite_adjacency, charpoly_multipartite_signless, f_parts,
    f_parts_det, f_quintic, quotient_matrix, r_matrix, r_quintic, r_quintic_det, CaseKind,
};
pub use identities::{check_identities, IdentityCheck, IdentitySummary, IdentityTable};
pub use sturm::{count_roots_above, count_roots_in, largest_root, largest_root_bracket, SturmChain};

/// Dense univariate polynomial with arbitrary-precision integer coefficients,
/// lowest degree first. The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "Vec<String>", try_from = "Vec<String>")]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = Polynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Polynomial::new(vec![c.into()])
    }

    /// The polynomial x.
    pub fn x() -> Self {
        Polynomial::from_i64(&[0, 1])
    }

    /// x + c.
    pub fn linear(c: impl Into<BigInt>) -> Self {
        Polynomial::new(vec![c.into(), BigInt::one()])
    }

    /// xᵏ.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        Polynomial { coeffs }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Polynomial::constant(1), |acc, _| &acc * self)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Polynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    /// Exact value at a rational point.
    pub fn evaluate_at(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| {
            acc * x + BigRational::from_integer(c.clone())
        })
    }

    pub fn evaluate_int(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Sign of the value at `x` as -1, 0 or 1, without building the rational.
    pub(crate) fn sign_at(&self, x: &BigRational) -> i32 {
        // Evaluate the homogenised form Σ c_k n^k d^{deg-k}, which has the
        // sign of P(n/d) because d > 0.
        let (num, den) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut dpow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * num + c * &dpow;
            dpow *= den;
        }
        signum(&acc)
    }

    pub fn evaluate_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// P(x + c).
    pub fn compose_linear(&self, c: impl Into<BigInt>) -> Self {
        let shift = Polynomial::linear(c);
        self.coeffs.iter().rev().fold(Polynomial::zero(), |acc, a| {
            &(&acc * &shift) + &Polynomial::constant(a.clone())
        })
    }

    /// P(−x).
    pub fn reflect(&self) -> Self {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Non-negative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// P divided by its content, with a positive leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.leading().is_negative() {
            g = -g;
        }
        Polynomial::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// P divided by its content, keeping the sign of every coefficient.
    pub(crate) fn primitive_signed(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let g = self.content();
        Polynomial::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Remainder of `self` by `d` times a positive integer, so its signs match
    /// the true remainder over the rationals.
    pub(crate) fn signed_pseudo_rem(&self, d: &Polynomial) -> Polynomial {
        let dd = d.degree().expect("division by the zero polynomial");
        let lc = d.leading();
        let lc_abs = lc.abs();
        let mut r = self.coeffs.clone();
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1;
            let top = r[k].clone();
            // r ← |lc|·r − sgn(lc)·top·x^{k−dd}·d
            for c in r.iter_mut() {
                *c *= &lc_abs;
            }
            let factor = if lc.is_negative() { -top } else { top };
            for (i, c) in d.coeffs.iter().enumerate() {
                r[k - dd + i] -= &factor * c;
            }
            debug_assert!(r[k].is_zero());
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        Polynomial::new(r)
    }

    /// Exact division over the integers; None when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        let dd = d.degree()?;
        if self.is_zero() {
            return Some(Polynomial::zero());
        }
        let n = self.degree()?;
        if n < dd {
            return None;
        }
        let lc = d.leading();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); n - dd + 1];
        for k in (dd..=n).rev() {
            let (qk, rem) = r[k].div_rem(&lc);
            if !rem.is_zero() {
                return None;
            }
            for (i, c) in d.coeffs.iter().enumerate() {
                r[k - dd + i] -= &qk * c;
            }
            q[k - dd] = qk;
        }
        if r.iter().all(|c| c.is_zero()) {
            Some(Polynomial::new(q))
        } else {
            None
        }
    }

    /// Greatest common divisor, primitive with positive leading coefficient.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let mut a = self.primitive();
        let mut b = other.primitive();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.signed_pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        a.primitive()
    }

    /// P / gcd(P, P'): same roots, each simple.
    pub fn squarefree(&self) -> Polynomial {
        let g = self.gcd(&self.derivative());
        if g.degree().unwrap_or(0) == 0 {
            return self.primitive();
        }
        self.primitive()
            .div_exact(&g)
            .expect("gcd divides the polynomial")
            .primitive()
    }

    /// Coefficients as decimal strings, lowest degree first.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

pub(crate) fn signum(x: &BigInt) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

impl From<Polynomial> for Vec<String> {
    fn from(p: Polynomial) -> Self {
        p.to_strings()
    }
}

impl TryFrom<Vec<String>> for Polynomial {
    type Error = num_bigint::ParseBigIntError;
    fn try_from(v: Vec<String>) -> Result<Self, Self::Error> {
        v.iter()
            .map(|s| s.parse::<BigInt>())
            .collect::<Result<Vec<_>, _>>()
            .map(Polynomial::new)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let unit = mag.is_one() && k > 0;
            if !unit {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &Polynomial) -> Polynomial {
                (&self).$m(rhs)
            }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64(c)
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn arithmetic() {
        assert_eq!(p(&[-1, 1]) * p(&[1, 1]), p(&[-1, 0, 1]));
        assert_eq!(p(&[1, 2]) - p(&[1, 2]), Polynomial::zero());
        assert_eq!(p(&[0, 0, 1]).compose_linear(1), p(&[1, 2, 1]));
        assert_eq!(p(&[0, 0, 0, 1]).derivative(), p(&[0, 0, 3]));
        assert_eq!(p(&[1, 0, 0]).degree(), Some(0));
        assert_eq!(Polynomial::zero().degree(), None);
    }

    #[test]
    fn evaluation() {
        let f = p(&[-2, 5, 0, -5, 0, 1]);
        assert_eq!(f.evaluate_at(&q(2, 1)), q(0, 1));
        assert_eq!(p(&[-1, 0, 4]).evaluate_at(&q(1, 2)), q(0, 1));
        assert_eq!(p(&[1, 1]).sign_at(&q(-3, 2)), -1);
        assert_eq!(p(&[-1, 0, 4]).sign_at(&q(1, 2)), 0);
        assert_eq!(p(&[3, 0, 1]).sign_at(&q(-7, 3)), 1);
    }

    #[test]
    fn division_and_gcd() {
        let a = p(&[-1, 0, 1]);
        let b = p(&[1, 1]);
        assert_eq!(a.div_exact(&b), Some(p(&[-1, 1])));
        assert_eq!(a.div_exact(&p(&[2, 1])), None);
        let sq = p(&[1, 1]).pow(2) * p(&[-2, 1]);
        assert_eq!(sq.gcd(&sq.derivative()), p(&[1, 1]));
        assert_eq!(sq.squarefree(), p(&[-2, -1, 1]));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[-2, 5, 0, -5, 0, 1]).to_string(), "x^5 - 5x^3 + 5x - 2");
        assert_eq!(p(&[0, -1]).to_string(), "-x");
    }

    #[test]
    fn serde_round_trip() {
        let f = p(&[-2, 5, 0, -5, 0, 1]);
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"["-2","5","0","-5","0","1"]"#);
        assert_eq!(serde_json::from_str::<Polynomial>(&s).unwrap(), f);
    }
}
