//! Field abstraction shared by polynomial rings and linear algebra.
//!
//! A `Field` value is a lightweight descriptor carrying whatever data the
//! arithmetic needs (for cyclotomic fields, the order and the modulus), and
//! every operation takes the element type by reference. This keeps elements
//! plain data and lets one generic engine serve both the rationals and any
//! cyclotomic field.

use alloc::string::String;

use num_traits::{One, Signed, Zero};

use crate::rational::{format_rat, Rat};

/// An exact field with explicit operation context.
pub trait Field: Clone + PartialEq + core::fmt::Debug {
    type Elem: Clone + PartialEq + core::fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// Multiplicative inverse.
    ///
    /// # Panics
    ///
    /// Panics when `a` is zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;

    /// Embeds a rational number.
    fn from_rat(&self, q: &Rat) -> Self::Elem;

    /// Short human readable field name.
    fn name(&self) -> String;

    /// Renders one element.
    fn format_elem(&self, a: &Self::Elem) -> String;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    /// Division `a / b`; panics when `b` is zero.
    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b))
    }

    fn from_int(&self, n: i64) -> Self::Elem {
        self.from_rat(&crate::rational::int(n))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        a == &self.one()
    }

    /// Nonnegative integer power by repeated squaring.
    fn pow(&self, a: &Self::Elem, mut e: u32) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Rescales a nonempty coefficient list, leading entry first, by one
    /// nonzero scalar into a canonical shape. The default makes it monic.
    fn scale_canonical(&self, coeffs: &mut [Self::Elem]) {
        let lead = coeffs[0].clone();
        assert!(!self.is_zero(&lead), "canonical scaling of zero leading coefficient");
        if self.is_one(&lead) {
            return;
        }
        let inv = self.inv(&lead);
        for c in coeffs.iter_mut() {
            *c = self.mul(c, &inv);
        }
    }
}

/// The field of rational numbers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = Rat;

    fn zero(&self) -> Rat {
        Rat::zero()
    }

    fn one(&self) -> Rat {
        Rat::one()
    }

    fn is_zero(&self, a: &Rat) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &Rat, b: &Rat) -> Rat {
        a + b
    }

    fn neg(&self, a: &Rat) -> Rat {
        -a.clone()
    }

    fn mul(&self, a: &Rat, b: &Rat) -> Rat {
        a * b
    }

    fn inv(&self, a: &Rat) -> Rat {
        assert!(!a.is_zero(), "inverse of zero");
        Rat::one() / a.clone()
    }

    fn from_rat(&self, q: &Rat) -> Rat {
        q.clone()
    }

    fn name(&self) -> String {
        String::from("QQ")
    }

    fn format_elem(&self, a: &Rat) -> String {
        format_rat(a)
    }

    /// Integer coefficients with content 1 and positive leading entry.
    fn scale_canonical(&self, coeffs: &mut [Rat]) {
        use num_bigint::BigInt;
        use num_integer::Integer;

        let lead = coeffs[0].clone();
        assert!(!lead.is_zero(), "canonical scaling of zero leading coefficient");
        let mut den_lcm = BigInt::one();
        for c in coeffs.iter() {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for c in coeffs.iter() {
            num_gcd = num_gcd.gcd(&(c.numer() * &den_lcm / c.denom()));
        }
        let mut scale = Rat::new(den_lcm, num_gcd);
        if lead.is_negative() {
            scale = -scale;
        }
        for c in coeffs.iter_mut() {
            *c = &*c * &scale;
        }
    }
}
