//! Cyclotomic fields `QQ(zeta_n)` with exact arithmetic.
//!
//! Elements are residues modulo the `n`-th cyclotomic polynomial, stored as
//! rational coefficient vectors of length `phi(n)` on the power basis
//! `1, zeta, ..., zeta^(phi(n)-1)`. Because the modulus is irreducible over
//! the rationals this is a field; inverses come from the extended Euclidean
//! algorithm. Elements remember their order and refuse to mix across
//! different fields.

use alloc::string::String;
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::Zero;

use crate::field::{Field, Rationals};
use crate::monomial::Monomial;
use crate::parse::{parse_poly, ParsePolyError};
use crate::poly::PolynomialRing;
use crate::rational::{int, Rat};
use crate::univariate::{cyclotomic_polynomial, extended_gcd, UnivariatePoly};

/// The field `QQ(zeta_n)`, described by its order and minimal polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicField {
    order: u32,
    modulus: UnivariatePoly,
}

/// Element of a cyclotomic field; `coeffs[i]` multiplies `zeta^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicNumber {
    order: u32,
    coeffs: Vec<Rat>,
}

impl CyclotomicNumber {
    pub fn order(&self) -> u32 {
        self.order
    }

    /// Coefficients on the power basis, length `phi(order)`.
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }
}

impl CyclotomicField {
    /// Builds `QQ(zeta_n)`.
    ///
    /// # Panics
    ///
    /// Panics when `n` is zero.
    pub fn new(n: u32) -> Self {
        CyclotomicField { order: n, modulus: cyclotomic_polynomial(n) }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Field degree over the rationals, `phi(n)`.
    pub fn degree(&self) -> usize {
        self.modulus.degree().expect("cyclotomic modulus is nonzero")
    }

    pub fn modulus(&self) -> &UnivariatePoly {
        &self.modulus
    }

    fn check(&self, a: &CyclotomicNumber) {
        assert_eq!(a.order, self.order, "cyclotomic order mismatch");
    }

    fn from_upoly(&self, p: UnivariatePoly) -> CyclotomicNumber {
        let (_, r) = p.div_rem(&self.modulus);
        let mut coeffs = r.coeffs().to_vec();
        coeffs.resize(self.degree(), int(0));
        CyclotomicNumber { order: self.order, coeffs }
    }

    fn to_upoly(&self, a: &CyclotomicNumber) -> UnivariatePoly {
        UnivariatePoly::new(a.coeffs.clone())
    }

    /// Builds an element from power basis coefficients of any length,
    /// reducing modulo the cyclotomic polynomial.
    pub fn from_coeffs(&self, coeffs: Vec<Rat>) -> CyclotomicNumber {
        self.from_upoly(UnivariatePoly::new(coeffs))
    }

    /// The primitive root of unity `zeta_n`.
    pub fn zeta(&self) -> CyclotomicNumber {
        self.zeta_pow(1)
    }

    /// `zeta^k` for any integer `k`, negative meaning inverse powers.
    pub fn zeta_pow(&self, k: i64) -> CyclotomicNumber {
        let e = k.rem_euclid(i64::from(self.order)) as usize;
        self.from_upoly(UnivariatePoly::x_pow(e))
    }

    /// Returns the rational value when the element lies in the prime field.
    pub fn to_rational(&self, a: &CyclotomicNumber) -> Option<Rat> {
        self.check(a);
        if a.coeffs[1..].iter().all(Zero::is_zero) {
            Some(a.coeffs[0].clone())
        } else {
            None
        }
    }

    /// The Galois automorphism `zeta -> zeta^k`.
    ///
    /// # Panics
    ///
    /// Panics when `k` is not coprime to the order.
    pub fn galois(&self, a: &CyclotomicNumber, k: u32) -> CyclotomicNumber {
        self.check(a);
        let k = k % self.order;
        assert!(
            k.gcd(&self.order) == 1,
            "galois exponent {k} not coprime to order {}",
            self.order
        );
        let n = self.order as usize;
        let mut coeffs = alloc::vec![int(0); n];
        for (i, c) in a.coeffs.iter().enumerate() {
            coeffs[(i * k as usize) % n] += c;
        }
        self.from_upoly(UnivariatePoly::new(coeffs))
    }

    /// Complex conjugation, `zeta -> zeta^(-1)`.
    pub fn conj(&self, a: &CyclotomicNumber) -> CyclotomicNumber {
        if self.order == 1 {
            self.check(a);
            return a.clone();
        }
        self.galois(a, self.order - 1)
    }

    fn z_ring() -> PolynomialRing<Rationals> {
        PolynomialRing::new(Rationals, &["z"])
    }

    /// Parses an element written as a polynomial in `z`, e.g. `1/2*z^3 - z + 2`.
    pub fn parse_elem(&self, input: &str) -> Result<CyclotomicNumber, ParsePolyError> {
        let ring = Self::z_ring();
        let p = parse_poly(&ring, input)?;
        let mut coeffs = alloc::vec![int(0); p.degree().unwrap_or(0) as usize + 1];
        for (m, c) in p.terms() {
            coeffs[m.exp(0) as usize] = c.clone();
        }
        Ok(self.from_coeffs(coeffs))
    }
}

impl Field for CyclotomicField {
    type Elem = CyclotomicNumber;

    fn zero(&self) -> CyclotomicNumber {
        CyclotomicNumber { order: self.order, coeffs: alloc::vec![int(0); self.degree()] }
    }

    fn one(&self) -> CyclotomicNumber {
        self.from_rat(&int(1))
    }

    fn is_zero(&self, a: &CyclotomicNumber) -> bool {
        self.check(a);
        a.coeffs.iter().all(Zero::is_zero)
    }

    fn add(&self, a: &CyclotomicNumber, b: &CyclotomicNumber) -> CyclotomicNumber {
        self.check(a);
        self.check(b);
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        CyclotomicNumber { order: self.order, coeffs }
    }

    fn neg(&self, a: &CyclotomicNumber) -> CyclotomicNumber {
        self.check(a);
        CyclotomicNumber {
            order: self.order,
            coeffs: a.coeffs.iter().map(|x| -x.clone()).collect(),
        }
    }

    fn mul(&self, a: &CyclotomicNumber, b: &CyclotomicNumber) -> CyclotomicNumber {
        self.check(a);
        self.check(b);
        self.from_upoly(self.to_upoly(a).mul(&self.to_upoly(b)))
    }

    fn inv(&self, a: &CyclotomicNumber) -> CyclotomicNumber {
        self.check(a);
        assert!(!self.is_zero(a), "inverse of zero");
        // The modulus is irreducible, so gcd(a, modulus) = 1 = u*a + v*modulus.
        let (g, u, _) = extended_gcd(&self.to_upoly(a), &self.modulus);
        assert_eq!(g, UnivariatePoly::one(), "modulus must be irreducible");
        self.from_upoly(u)
    }

    fn from_rat(&self, q: &Rat) -> CyclotomicNumber {
        let mut coeffs = alloc::vec![int(0); self.degree()];
        coeffs[0] = q.clone();
        CyclotomicNumber { order: self.order, coeffs }
    }

    fn name(&self) -> String {
        use core::fmt::Write;
        let mut s = String::from("QQ");
        if self.order > 1 {
            let _ = write!(s, "(zeta_{})", self.order);
        }
        s
    }

    fn format_elem(&self, a: &CyclotomicNumber) -> String {
        self.check(a);
        let ring = Self::z_ring();
        let poly = ring.from_terms(
            a.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::new(&[i as u16]), c.clone()))
                .collect(),
        );
        ring.format_poly(&poly)
    }
}
