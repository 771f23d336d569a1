//! Real root counting and isolation with Sturm sequences over the rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use super::Polynomial;
use crate::error::{Error, Result};

/// Sturm sequence of the square-free part of a polynomial.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<Polynomial>,
}

impl SturmChain {
    pub fn new(p: &Polynomial) -> Self {
        let sf = p.squarefree();
        let mut chain = vec![sf.clone()];
        if sf.degree().unwrap_or(0) == 0 {
            return SturmChain { chain };
        }
        let mut prev = sf.clone();
        let mut cur = sf.derivative().primitive_signed();
        while !cur.is_zero() {
            chain.push(cur.clone());
            let next = -prev.signed_pseudo_rem(&cur);
            prev = cur;
            cur = next.primitive_signed();
        }
        SturmChain { chain }
    }

    fn variations(&self, x: &BigRational) -> usize {
        let mut last = 0;
        let mut count = 0;
        for p in &self.chain {
            let s = p.sign_at(x);
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    fn variations_at_infinity(&self, positive: bool) -> usize {
        let mut last = 0;
        let mut count = 0;
        for p in &self.chain {
            let deg = p.degree().unwrap_or(0);
            let mut s = super::signum(&p.leading());
            if !positive && deg % 2 == 1 {
                s = -s;
            }
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    /// Distinct real roots in the half-open interval (a, b].
    pub fn count_in(&self, a: &BigRational, b: &BigRational) -> usize {
        if a >= b {
            return 0;
        }
        self.variations(a).saturating_sub(self.variations(b))
    }

    /// Distinct real roots strictly greater than `a`.
    pub fn count_above(&self, a: &BigRational) -> usize {
        self.variations(a).saturating_sub(self.variations_at_infinity(true))
    }

    /// Distinct real roots.
    pub fn count_real(&self) -> usize {
        self.variations_at_infinity(false)
            .saturating_sub(self.variations_at_infinity(true))
    }
}

/// Distinct real roots of `p` in (a, b].
pub fn count_roots_in(p: &Polynomial, a: &BigRational, b: &BigRational) -> usize {
    SturmChain::new(p).count_in(a, b)
}

/// Distinct real roots of `p` strictly above `a`.
pub fn count_roots_above(p: &Polynomial, a: &BigRational) -> usize {
    SturmChain::new(p).count_above(a)
}

/// 1 + max |a_k / a_n|, rounded up: every root has modulus below this.
fn cauchy_bound(p: &Polynomial) -> BigInt {
    let lead = p.leading().abs();
    let max = p
        .coeffs()
        .iter()
        .take(p.coeffs().len() - 1)
        .map(|c| c.abs())
        .max()
        .unwrap_or_default();
    let (q, r) = (&max / &lead, &max % &lead);
    q + if r.is_zero() { 1 } else { 2 }
}

/// Rational interval (lo, hi] of width at most `tolerance` holding the
/// largest real root of `p`.
pub fn largest_root_bracket(p: &Polynomial, tolerance: f64) -> Result<(BigRational, BigRational)> {
    if p.degree().unwrap_or(0) == 0 {
        return Err(Error::Domain("constant polynomial has no roots".into()));
    }
    if !(tolerance > 0.0 && tolerance.is_finite()) {
        return Err(Error::Domain(format!("tolerance must be positive, got {tolerance}")));
    }
    let chain = SturmChain::new(p);
    if chain.count_real() == 0 {
        return Err(Error::Domain(format!("{p} has no real root")));
    }
    let bound = BigRational::from_integer(cauchy_bound(p));
    let mut lo = -bound.clone();
    let mut hi = bound;
    let tol = BigRational::from_float(tolerance).expect("finite tolerance");
    let two = BigRational::from_integer(2.into());
    while &hi - &lo > tol {
        let mid = (&lo + &hi) / &two;
        if chain.count_above(&mid) >= 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((lo, hi))
}

/// Largest real root of `p`, located by exact bisection to within `tolerance`.
pub fn largest_root(p: &Polynomial, tolerance: f64) -> Result<f64> {
    let (lo, hi) = largest_root_bracket(p, tolerance)?;
    let mid = (lo + hi) / BigRational::from_integer(2.into());
    Ok(mid.to_f64().expect("bounded rational"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64(c)
    }

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn counts() {
        // (x-1)(x-2)(x+3)
        let f = p(&[6, -7, 0, 1]);
        assert_eq!(count_roots_in(&f, &q(0), &q(5)), 2);
        assert_eq!(count_roots_in(&f, &q(-5), &q(5)), 3);
        assert_eq!(count_roots_in(&f, &q(1), &q(2)), 1);
        assert_eq!(count_roots_above(&f, &q(1)), 1);
        assert_eq!(SturmChain::new(&f).count_real(), 3);
        // repeated roots count once
        let g = p(&[1, 1]).pow(3) * p(&[-2, 1]);
        assert_eq!(SturmChain::new(&g).count_real(), 2);
        assert_eq!(SturmChain::new(&p(&[1, 0, 1])).count_real(), 0);
    }

    #[test]
    fn largest_roots() {
        assert!((largest_root(&p(&[-2, 0, 1]), 1e-14).unwrap() - 2f64.sqrt()).abs() < 1e-13);
        let f = p(&[-2, 5, 0, -5, 0, 1]);
        assert!((largest_root(&f, 1e-14).unwrap() - 2.0).abs() < 1e-13);
        let sq = p(&[-1, 1]).pow(2) * p(&[3, 1]);
        assert!((largest_root(&sq, 1e-14).unwrap() - 1.0).abs() < 1e-13);
        assert!(matches!(largest_root(&p(&[1, 0, 1]), 1e-9), Err(Error::Domain(_))));
        assert!(largest_root(&p(&[5]), 1e-9).is_err());
    }
}
