//! Exact isolation of the largest real root with Sturm sequences.

use std::cmp::Ordering;

use num_traits::{One, Signed, Zero};

use crate::poly::{int, to_f64, Rational, RationalPolynomial};

/// Sturm chain of the square-free part of a polynomial.
#[derive(Clone, Debug)]
pub struct Sturm {
    chain: Vec<RationalPolynomial>,
}

impl Sturm {
    pub fn new(p: &RationalPolynomial) -> Self {
        assert!(!p.is_zero(), "Sturm chain of the zero polynomial");
        let d = p.derivative();
        let g = p.gcd(&d);
        let sf = p.div_rem(&g).0;
        let mut chain = vec![sf.clone(), sf.derivative()];
        while !chain.last().unwrap().is_zero() {
            let k = chain.len();
            let r = chain[k - 2].div_rem(&chain[k - 1]).1;
            chain.push(-r);
        }
        chain.pop();
        Sturm { chain }
    }

    pub fn square_free(&self) -> &RationalPolynomial {
        &self.chain[0]
    }

    fn variations(signs: impl Iterator<Item = i8>) -> usize {
        let mut last = 0i8;
        let mut count = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    fn variations_at(&self, x: &Rational) -> usize {
        Self::variations(self.chain.iter().map(|p| sign(&p.eval(x))))
    }

    fn variations_at_infinity(&self) -> usize {
        Self::variations(self.chain.iter().map(|p| sign(p.leading().unwrap())))
    }

    /// Distinct real roots strictly greater than `x`, which must not be a root.
    pub fn roots_above(&self, x: &Rational) -> usize {
        self.variations_at(x) - self.variations_at_infinity()
    }
}

fn sign(r: &Rational) -> i8 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

/// Cauchy bound: every root has absolute value below the result.
pub fn root_bound(p: &RationalPolynomial) -> Rational {
    let lead = p.leading().expect("nonzero polynomial").abs();
    let max = p.coeffs()[..p.coeffs().len() - 1]
        .iter()
        .map(|c| c.abs() / &lead)
        .max()
        .unwrap_or_else(Rational::zero);
    max + int(1)
}

/// An open interval `(lo, hi)` containing exactly one distinct root of the
/// polynomial and no roots above it. Both ends are non-roots.
#[derive(Clone, Debug)]
pub struct LargestRoot {
    sturm: Sturm,
    pub lo: Rational,
    pub hi: Rational,
}

impl LargestRoot {
    /// `None` when the polynomial has no real root.
    pub fn isolate(p: &RationalPolynomial) -> Option<Self> {
        let sturm = Sturm::new(p);
        let bound = root_bound(sturm.square_free());
        let lo = -bound.clone();
        if sturm.roots_above(&lo) == 0 {
            return None;
        }
        let mut iso = LargestRoot { sturm, lo, hi: bound };
        while iso.sturm.roots_above(&iso.lo) > 1 {
            iso.bisect();
        }
        Some(iso)
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    fn bisect(&mut self) {
        let two = int(2);
        let mut mid = (&self.lo + &self.hi) / &two;
        while self.sturm.square_free().eval(&mid).is_zero() {
            mid = (&mid + &self.hi) / &two;
        }
        if self.sturm.roots_above(&mid) > 0 {
            self.lo = mid;
        } else {
            self.hi = mid;
        }
    }

    pub fn refine_to(&mut self, width: &Rational) {
        while &self.width() > width {
            self.bisect();
        }
    }

    pub fn midpoint_f64(&self) -> f64 {
        to_f64(&((&self.lo + &self.hi) / int(2)))
    }
}

/// Largest real root to within about `1e-15` relative accuracy.
pub fn largest_real_root(p: &RationalPolynomial) -> Option<f64> {
    let mut iso = LargestRoot::isolate(p)?;
    let scale = iso.hi.abs().max(Rational::one());
    let width = scale * Rational::new(1.into(), num_traits::pow(num_bigint::BigInt::from(2), 56));
    iso.refine_to(&width);
    Some(iso.midpoint_f64())
}

/// Exact comparison of the largest real roots of two polynomials that both
/// have real roots. Equality is decided through the common factor, never
/// through a numeric threshold.
pub fn compare_largest_roots(p: &RationalPolynomial, q: &RationalPolynomial) -> Ordering {
    let mut a = LargestRoot::isolate(p).expect("p has a real root");
    let mut b = LargestRoot::isolate(q).expect("q has a real root");
    let g = p.gcd(q);
    let common = (g.degree().unwrap_or(0) > 0).then(|| Sturm::new(&g));
    loop {
        if a.hi <= b.lo {
            return Ordering::Less;
        }
        if b.hi <= a.lo {
            return Ordering::Greater;
        }
        if let Some(s) = &common {
            let lo = (&a.lo).max(&b.lo).clone();
            let hi = (&a.hi).min(&b.hi).clone();
            // lo and hi are non-roots of p or q, hence of g
            if s.roots_above(&lo) > s.roots_above(&hi) {
                return Ordering::Equal;
            }
        }
        if a.width() >= b.width() {
            a.bisect();
        } else {
            b.bisect();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational;

    fn p(c: &[i64]) -> RationalPolynomial {
        RationalPolynomial::from_i64(c)
    }

    #[test]
    fn sturm_counts_roots() {
        // (x-1)(x-2)(x+3)
        let f = &(&RationalPolynomial::linear(int(1)) * &RationalPolynomial::linear(int(2)))
            * &RationalPolynomial::linear(int(-3));
        let s = Sturm::new(&f);
        assert_eq!(s.roots_above(&int(-10)), 3);
        assert_eq!(s.roots_above(&rational(3, 2)), 1);
        assert_eq!(s.roots_above(&int(5)), 0);
        // repeated roots count once
        let s = Sturm::new(&f.pow(2));
        assert_eq!(s.roots_above(&int(0)), 2);
    }

    #[test]
    fn largest_roots() {
        let r = largest_real_root(&p(&[-2, 0, 1])).unwrap();
        assert!((r - 2f64.sqrt()).abs() < 1e-14);
        assert!(largest_real_root(&p(&[1, 0, 1])).is_none());
        let r = largest_real_root(&p(&[-4, 0, 1]).pow(3)).unwrap();
        assert!((r - 2.0).abs() < 1e-14);
    }

    #[test]
    fn exact_comparison() {
        let a = p(&[-2, 0, 1]); // sqrt 2
        let b = p(&[-3, 0, 1]); // sqrt 3
        assert_eq!(compare_largest_roots(&a, &b), Ordering::Less);
        assert_eq!(compare_largest_roots(&b, &a), Ordering::Greater);
        // same largest root sqrt 2, different polynomials
        let c = &a * &p(&[1, 1]);
        assert_eq!(compare_largest_roots(&a, &c), Ordering::Equal);
        // rational largest root hit exactly by bisection midpoints
        let d = &p(&[0, 1]) * &p(&[-1, 1]);
        let e = &p(&[-1, 1]) * &p(&[1, 1]);
        assert_eq!(compare_largest_roots(&d, &e), Ordering::Equal);
    }
}
