//! Dense univariate polynomials over the rationals.
//!
//! Just enough arithmetic to support cyclotomic fields: exact division with
//! remainder, the extended Euclidean algorithm for modular inverses, and the
//! cyclotomic polynomials themselves, computed by iterated exact division of
//! `x^n - 1` by the cyclotomic polynomials of the proper divisors of `n`.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::rational::{int, Rat};

/// Univariate polynomial; `coeffs[i]` multiplies `x^i`, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnivariatePoly {
    coeffs: Vec<Rat>,
}

impl UnivariatePoly {
    /// Builds a polynomial from low-to-high coefficients, trimming zeros.
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UnivariatePoly { coeffs }
    }

    pub fn zero() -> Self {
        UnivariatePoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UnivariatePoly { coeffs: vec![int(1)] }
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `x^k`.
    pub fn x_pow(k: usize) -> Self {
        let mut coeffs = vec![int(0); k + 1];
        coeffs[k] = int(1);
        UnivariatePoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(|| int(0))
    }

    /// Leading coefficient.
    ///
    /// # Panics
    ///
    /// Panics on the zero polynomial.
    pub fn leading_coeff(&self) -> &Rat {
        self.coeffs.last().expect("leading coefficient of zero polynomial")
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        Self::new(out)
    }

    pub fn neg(&self) -> Self {
        UnivariatePoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![int(0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Quotient and remainder with `deg r < deg divisor`.
    ///
    /// # Panics
    ///
    /// Panics when `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dd = divisor.coeffs.len() - 1;
        let lead = divisor.leading_coeff().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![int(0); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = rem[k].clone();
            if c.is_zero() {
                continue;
            }
            let q = c / &lead;
            for (j, b) in divisor.coeffs.iter().enumerate() {
                let idx = k - dd + j;
                rem[idx] -= &q * b;
            }
            quot[k - dd] = q;
        }
        (Self::new(quot), Self::new(rem))
    }

    /// Rescales to leading coefficient 1; the zero polynomial is unchanged.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let lead = self.leading_coeff().clone();
        self.scale(&(int(1) / lead))
    }
}

/// Extended Euclid: returns monic `g = gcd(a, b)` and `u, v` with `u*a + v*b = g`.
pub fn extended_gcd(
    a: &UnivariatePoly,
    b: &UnivariatePoly,
) -> (UnivariatePoly, UnivariatePoly, UnivariatePoly) {
    let mut r0 = a.clone();
    let mut s0 = UnivariatePoly::one();
    let mut t0 = UnivariatePoly::zero();
    let mut r1 = b.clone();
    let mut s1 = UnivariatePoly::zero();
    let mut t1 = UnivariatePoly::one();
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1);
        let s = s0.sub(&q.mul(&s1));
        let t = t0.sub(&q.mul(&t1));
        r0 = r1;
        s0 = s1;
        t0 = t1;
        r1 = r;
        s1 = s;
        t1 = t;
    }
    if r0.is_zero() {
        return (UnivariatePoly::zero(), UnivariatePoly::zero(), UnivariatePoly::zero());
    }
    let c = int(1) / r0.leading_coeff().clone();
    (r0.scale(&c), s0.scale(&c), t0.scale(&c))
}

/// The `n`-th cyclotomic polynomial.
///
/// Computed as `(x^n - 1)` divided by the cyclotomic polynomials of all
/// proper divisors of `n`; every division is exact.
///
/// # Panics
///
/// Panics when `n == 0`.
pub fn cyclotomic_polynomial(n: u32) -> UnivariatePoly {
    assert!(n > 0, "cyclotomic polynomial of order 0");
    let mut table: Vec<Option<UnivariatePoly>> = vec![None; n as usize + 1];
    for d in 1..=n {
        if n % d != 0 {
            continue;
        }
        let mut p = UnivariatePoly::x_pow(d as usize).sub(&UnivariatePoly::one());
        for e in 1..d {
            if d % e != 0 {
                continue;
            }
            let phi = table[e as usize].as_ref().expect("divisor table filled in order");
            let (q, r) = p.div_rem(phi);
            debug_assert!(r.is_zero());
            p = q;
        }
        table[d as usize] = Some(p);
    }
    table[n as usize].take().expect("n is a divisor of itself")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn upoly(coeffs: &[i64]) -> UnivariatePoly {
        UnivariatePoly::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn construction_trims() {
        assert_eq!(upoly(&[1, 2, 0, 0]), upoly(&[1, 2]));
        assert!(upoly(&[0, 0]).is_zero());
        assert_eq!(upoly(&[0]).degree(), None);
        assert_eq!(upoly(&[5]).degree(), Some(0));
        assert_eq!(upoly(&[0, 0, 3]).degree(), Some(2));
    }

    #[test]
    fn ring_ops() {
        let a = upoly(&[1, 1]);
        let b = upoly(&[-1, 1]);
        assert_eq!(a.mul(&b), upoly(&[-1, 0, 1]));
        assert_eq!(a.add(&b), upoly(&[0, 2]));
        assert_eq!(a.sub(&a), UnivariatePoly::zero());
        assert_eq!(a.mul(&UnivariatePoly::zero()), UnivariatePoly::zero());
        assert_eq!(upoly(&[2, 4]).scale(&rat(1, 2)), upoly(&[1, 2]));
    }

    #[test]
    fn division_examples() {
        let (q, r) = upoly(&[-1, 0, 1]).div_rem(&upoly(&[-1, 1]));
        assert_eq!(q, upoly(&[1, 1]));
        assert!(r.is_zero());

        let (q, r) = upoly(&[1, 2, 0, 1]).div_rem(&upoly(&[1, 0, 1]));
        assert_eq!(q, upoly(&[0, 1]));
        assert_eq!(r, upoly(&[1, 1]));

        let (q, r) = upoly(&[1, 1]).div_rem(&upoly(&[1, 0, 1]));
        assert!(q.is_zero());
        assert_eq!(r, upoly(&[1, 1]));
    }

    #[test]
    fn division_identity_holds() {
        let polys = [
            upoly(&[3, 0, -2, 1, 7]),
            upoly(&[1, 1, 1]),
            upoly(&[-5, 2]),
            upoly(&[4]),
        ];
        for a in &polys {
            for b in &polys {
                let (q, r) = a.div_rem(b);
                assert_eq!(&q.mul(b).add(&r), a);
                if !r.is_zero() {
                    assert!(r.degree().unwrap() < b.degree().unwrap());
                }
            }
        }
    }

    #[test]
    #[should_panic]
    fn division_by_zero_panics() {
        let _ = upoly(&[1, 1]).div_rem(&UnivariatePoly::zero());
    }

    #[test]
    fn extended_gcd_bezout() {
        let a = upoly(&[-1, 0, 1]);
        let b = upoly(&[-1, 1]);
        let (g, u, v) = extended_gcd(&a, &b);
        assert_eq!(g, upoly(&[-1, 1]));
        assert_eq!(u.mul(&a).add(&v.mul(&b)), g);

        let a = upoly(&[1, 1, 1, 1, 1]);
        let b = upoly(&[1, 1]);
        let (g, u, v) = extended_gcd(&a, &b);
        assert_eq!(g, UnivariatePoly::one());
        assert_eq!(u.mul(&a).add(&v.mul(&b)), g);
    }

    #[test]
    fn extended_gcd_is_monic_on_a_grid() {
        let samples = [
            upoly(&[0, 2]),
            upoly(&[2, 4]),
            upoly(&[-6, 0, 3]),
            upoly(&[1, 2, 1]),
            upoly(&[-1, 0, 0, 1]),
        ];
        for a in &samples {
            for b in &samples {
                let (g, u, v) = extended_gcd(a, b);
                assert_eq!(u.mul(a).add(&v.mul(b)), g);
                if !g.is_zero() {
                    assert_eq!(g.leading_coeff(), &int(1));
                }
            }
        }
    }

    #[test]
    fn cyclotomic_small_orders() {
        assert_eq!(cyclotomic_polynomial(1), upoly(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), upoly(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(3), upoly(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(5), upoly(&[1, 1, 1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(6), upoly(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), upoly(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn cyclotomic_product_recovers_x_n_minus_1() {
        for n in 1u32..=30 {
            let mut prod = UnivariatePoly::one();
            for d in 1..=n {
                if n % d == 0 {
                    prod = prod.mul(&cyclotomic_polynomial(d));
                }
            }
            let expect = UnivariatePoly::x_pow(n as usize).sub(&UnivariatePoly::one());
            assert_eq!(prod, expect, "order {n}");
        }
    }
}
