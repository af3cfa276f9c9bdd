//! Fraction-free (Bareiss) elimination over `Z[y]`.
//!
//! A symmetric rational matrix `W` is scaled by the common denominator `L`
//! of its entries to an integer matrix `M = L W`. Bareiss elimination on
//! `yI - M` gives `P(y) = det(yI - M)` and then `det(xI - W) = L^-n P(Lx)`.
//! Every pivot is a leading principal minor of `yI - M`, hence monic, so
//! each Bareiss division is an exact division by a monic polynomial.
//!
//! The kernel runs on checked `i128` and falls back to `BigInt` on overflow.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::poly::{Rational, RationalPolynomial};

trait Coef: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Option<Self>;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    /// Exact quotient; `None` on overflow.
    fn div_exact(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
}

impl Coef for i128 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn div_exact(&self, o: &Self) -> Option<Self> {
        debug_assert_eq!(self % o, 0, "inexact Bareiss division");
        self.checked_div(*o)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
}

impl Coef for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn div_exact(&self, o: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(o);
        debug_assert!(Zero::is_zero(&r), "inexact Bareiss division");
        Some(q)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
}

type Poly<C> = Vec<C>;

fn trim<C: Coef>(mut p: Poly<C>) -> Poly<C> {
    while p.last().is_some_and(Coef::is_zero) {
        p.pop();
    }
    p
}

fn mul<C: Coef>(a: &Poly<C>, b: &Poly<C>) -> Option<Poly<C>> {
    if a.is_empty() || b.is_empty() {
        return Some(vec![]);
    }
    let mut out = vec![C::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].add(&x.mul(y)?)?;
        }
    }
    Some(trim(out))
}

fn sub<C: Coef>(a: &Poly<C>, b: &Poly<C>) -> Option<Poly<C>> {
    let len = a.len().max(b.len());
    let zero = C::zero();
    let out = (0..len)
        .map(|k| a.get(k).unwrap_or(&zero).sub(b.get(k).unwrap_or(&zero)))
        .collect::<Option<Vec<_>>>()?;
    Some(trim(out))
}

/// Exact division; the remainder must vanish.
fn div_exact<C: Coef>(a: &Poly<C>, b: &Poly<C>) -> Option<Poly<C>> {
    if a.is_empty() {
        return Some(vec![]);
    }
    let db = b.len() - 1;
    let lead = &b[db];
    let mut rem = a.clone();
    let da = a.len() - 1;
    assert!(da >= db, "Bareiss quotient of lower degree than divisor");
    let mut q = vec![C::zero(); da - db + 1];
    for k in (0..=da - db).rev() {
        let c = rem[k + db].div_exact(lead)?;
        if c.is_zero() {
            continue;
        }
        for (i, d) in b.iter().enumerate() {
            rem[k + i] = rem[k + i].sub(&c.mul(d)?)?;
        }
        q[k] = c;
    }
    debug_assert!(rem.iter().all(Coef::is_zero), "inexact Bareiss division");
    Some(trim(q))
}

/// `det(yI - m)` with coefficients lowest degree first.
fn bareiss<C: Coef>(m: &[Vec<C>]) -> Option<Poly<C>> {
    let n = m.len();
    if n == 0 {
        return Some(vec![C::one()]);
    }
    let mut t: Vec<Vec<Poly<C>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = m[i][j].neg()?;
                    Some(if i == j { trim(vec![c, C::one()]) } else { trim(vec![c]) })
                })
                .collect::<Option<Vec<_>>>()
        })
        .collect::<Option<Vec<_>>>()?;
    let mut prev: Poly<C> = vec![C::one()];
    let mut negate = false;
    for k in 0..n - 1 {
        if t[k][k].is_empty() {
            match (k + 1..n).find(|&i| !t[i][k].is_empty()) {
                Some(i) => {
                    t.swap(k, i);
                    negate = !negate;
                }
                None => return Some(vec![]),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = sub(&mul(&t[k][k], &t[i][j])?, &mul(&t[i][k], &t[k][j])?)?;
                t[i][j] = div_exact(&num, &prev)?;
            }
        }
        prev = t[k][k].clone();
    }
    let det = t[n - 1][n - 1].clone();
    if negate {
        det.iter().map(Coef::neg).collect()
    } else {
        Some(det)
    }
}

fn integer_charpoly(m: &[Vec<BigInt>]) -> Vec<BigInt> {
    let small: Option<Vec<Vec<i128>>> = m
        .iter()
        .map(|row| row.iter().map(|c| i128::try_from(c).ok()).collect())
        .collect();
    if let Some(det) = small.as_deref().and_then(bareiss) {
        return det.into_iter().map(BigInt::from).collect();
    }
    bareiss(m).expect("BigInt arithmetic does not overflow")
}

/// Characteristic polynomial `det(xI - w)` of a square rational matrix.
pub fn charpoly(w: &[Vec<Rational>]) -> RationalPolynomial {
    let n = w.len();
    let l = w
        .iter()
        .flatten()
        .fold(<BigInt as One>::one(), |acc, c| acc.lcm(c.denom()));
    let m: Vec<Vec<BigInt>> = w
        .iter()
        .map(|row| {
            assert_eq!(row.len(), n, "matrix must be square");
            row.iter().map(|c| (c * Rational::from_integer(l.clone())).to_integer()).collect()
        })
        .collect();
    let p = integer_charpoly(&m);
    // coefficient k of det(xI - W) is P_k L^(k - n)
    let coeffs = p
        .into_iter()
        .enumerate()
        .map(|(k, c)| Rational::new(c, num_traits::pow(l.clone(), n - k)))
        .collect();
    RationalPolynomial::from_coeffs(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, rational};

    fn q(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&c| int(c)).collect()).collect()
    }

    #[test]
    fn small_integer_matrices() {
        // [[0,1],[1,0]] -> x^2 - 1
        assert_eq!(charpoly(&q(&[&[0, 1], &[1, 0]])), RationalPolynomial::from_i64(&[-1, 0, 1]));
        assert_eq!(charpoly(&[]), RationalPolynomial::one());
        // triangular: product of (x - d_i)
        let t = q(&[&[2, 5, 7], &[0, 3, 1], &[0, 0, -1]]);
        let expect = &(&RationalPolynomial::linear(int(2)) * &RationalPolynomial::linear(int(3)))
            * &RationalPolynomial::linear(int(-1));
        assert_eq!(charpoly(&t), expect);
    }

    #[test]
    fn rational_entries() {
        let h = rational(1, 2);
        let w = vec![vec![h.clone(), h.clone()], vec![h.clone(), h.clone()]];
        // eigenvalues 0 and 1
        assert_eq!(charpoly(&w), RationalPolynomial::from_i64(&[0, -1, 1]));
    }

    #[test]
    fn bigint_fallback_matches() {
        let big = 1i64 << 40;
        let m = q(&[&[big, big, 1], &[big, big, big], &[1, big, big]]);
        let ints: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|c| c.to_integer()).collect()).collect();
        let via_big = bareiss(&ints).unwrap();
        let small: Vec<Vec<i128>> = ints.iter().map(|r| r.iter().map(|c| i128::try_from(c).unwrap()).collect()).collect();
        // i128 overflows on the cubic terms and reports it instead of wrapping
        assert!(bareiss(&small).is_none());
        assert_eq!(integer_charpoly(&ints), via_big);
    }
}
