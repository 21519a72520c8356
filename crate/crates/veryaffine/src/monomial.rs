//! Exponent vectors and monomial orders.
//!
//! A monomial is a fixed arity exponent vector; it knows nothing about
//! variable names. Three orders matter here: lex, graded reverse lex, and a
//! two block elimination order (grevlex between the first `k` variables and
//! the rest, so eliminating the first block is a Groebner basis projection).

use core::cmp::Ordering;

use smallvec::SmallVec;

/// Exponent vector with small inline storage.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[u16; 10]>,
}

/// Monomial order used for leading terms, division and Groebner bases.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Plain lexicographic order.
    Lex,
    /// Graded reverse lexicographic order.
    GrevLex,
    /// Elimination order for the first `k` variables: compares the first
    /// block by grevlex, then the remaining block by grevlex.
    Block(usize),
}

impl Monomial {
    pub fn new(exps: &[u16]) -> Self {
        Monomial { exps: SmallVec::from_slice(exps) }
    }

    /// The constant monomial in `arity` variables.
    pub fn one(arity: usize) -> Self {
        Monomial { exps: SmallVec::from_elem(0, arity) }
    }

    /// The variable `x_i`.
    pub fn var(arity: usize, i: usize) -> Self {
        assert!(i < arity, "variable index out of range");
        let mut m = Self::one(arity);
        m.exps[i] = 1;
        m
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    /// Total degree.
    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| u32::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    fn check_arity(&self, other: &Self) {
        assert_eq!(self.arity(), other.arity(), "monomial arity mismatch");
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_arity(other);
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(b).expect("monomial exponent overflow"))
            .collect();
        Monomial { exps }
    }

    /// Whether `self` divides `other`.
    pub fn divides(&self, other: &Self) -> bool {
        self.check_arity(other);
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a <= b)
    }

    /// The quotient `self / divisor`.
    ///
    /// # Panics
    ///
    /// Panics when `divisor` does not divide `self`.
    pub fn quotient(&self, divisor: &Self) -> Self {
        assert!(divisor.divides(self), "monomial quotient is not a monomial");
        let exps = self.exps.iter().zip(&divisor.exps).map(|(&a, &b)| a - b).collect();
        Monomial { exps }
    }

    pub fn lcm(&self, other: &Self) -> Self {
        self.check_arity(other);
        let exps = self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)).collect();
        Monomial { exps }
    }

    /// True when the supports are disjoint.
    pub fn coprime(&self, other: &Self) -> bool {
        self.check_arity(other);
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Indices of variables appearing with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    /// True when none of the first `k` variables appear.
    pub fn free_of_first(&self, k: usize) -> bool {
        self.exps[..k].iter().all(|&e| e == 0)
    }

    /// Drops the first `k` exponents; used when projecting to a subring.
    pub fn drop_first(&self, k: usize) -> Self {
        Monomial { exps: SmallVec::from_slice(&self.exps[k..]) }
    }

    /// Prepends `k` zero exponents; used when extending the ring.
    pub fn prepend_zeros(&self, k: usize) -> Self {
        let mut exps = SmallVec::from_elem(0, k);
        exps.extend_from_slice(&self.exps);
        Monomial { exps }
    }

    /// Compares under the given order.
    ///
    /// # Panics
    ///
    /// Panics on arity mismatch, or when a block order splits outside the
    /// arity.
    pub fn cmp_under(&self, other: &Self, ord: MonomialOrder) -> Ordering {
        self.check_arity(other);
        match ord {
            MonomialOrder::Lex => lex(&self.exps, &other.exps),
            MonomialOrder::GrevLex => grevlex(&self.exps, &other.exps),
            MonomialOrder::Block(k) => {
                assert!(k <= self.arity(), "block split beyond arity");
                grevlex(&self.exps[..k], &other.exps[..k])
                    .then_with(|| grevlex(&self.exps[k..], &other.exps[k..]))
            }
        }
    }
}

fn lex(a: &[u16], b: &[u16]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

fn grevlex(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| u32::from(e)).sum();
    let db: u32 = b.iter().map(|&e| u32::from(e)).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        other => return other,
    }
    // Equal degree: the larger monomial has the smaller exponent at the
    // last position where they differ.
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::new(e)
    }

    #[test]
    fn basic_ops() {
        let a = m(&[2, 0, 1]);
        let b = m(&[1, 3, 0]);
        assert_eq!(a.mul(&b), m(&[3, 3, 1]));
        assert_eq!(a.lcm(&b), m(&[2, 3, 1]));
        assert_eq!(a.degree(), 3);
        assert!(m(&[1, 0, 1]).divides(&a));
        assert!(!b.divides(&a));
        assert_eq!(a.quotient(&m(&[1, 0, 1])), m(&[1, 0, 0]));
        assert!(m(&[1, 0, 0]).coprime(&m(&[0, 2, 0])));
        assert!(!a.coprime(&b));
        assert!(Monomial::one(4).is_one());
        assert_eq!(Monomial::var(3, 1), m(&[0, 1, 0]));
        assert_eq!(a.support().collect::<alloc::vec::Vec<_>>(), [0, 2]);
    }

    #[test]
    #[should_panic]
    fn quotient_requires_divisibility() {
        let _ = m(&[1, 0]).quotient(&m(&[0, 1]));
    }

    #[test]
    #[should_panic]
    fn arity_mismatch_panics() {
        let _ = m(&[1, 0]).mul(&m(&[1, 0, 0]));
    }

    #[test]
    fn lex_examples() {
        // x > y^5 and x^2 y > x y^3 under lex with x before y.
        assert_eq!(m(&[1, 0]).cmp_under(&m(&[0, 5]), MonomialOrder::Lex), Ordering::Greater);
        assert_eq!(m(&[2, 1]).cmp_under(&m(&[1, 3]), MonomialOrder::Lex), Ordering::Greater);
        assert_eq!(m(&[1, 1]).cmp_under(&m(&[1, 1]), MonomialOrder::Lex), Ordering::Equal);
    }

    #[test]
    fn grevlex_examples() {
        // Degree decides first.
        assert_eq!(m(&[0, 3]).cmp_under(&m(&[1, 0]), MonomialOrder::GrevLex), Ordering::Greater);
        // Same degree: x y^3 beats x^2 y z (smaller exponent at the last
        // difference wins, and the z exponents 0 < 1 differ last).
        assert_eq!(
            m(&[2, 1, 1]).cmp_under(&m(&[1, 3, 0]), MonomialOrder::GrevLex),
            Ordering::Less
        );
        // Same degree: x y beats y^2.
        assert_eq!(m(&[1, 1]).cmp_under(&m(&[0, 2]), MonomialOrder::GrevLex), Ordering::Greater);
    }

    #[test]
    fn block_order_eliminates_first_variables() {
        // Anything touching the first block dominates anything that does not.
        let ord = MonomialOrder::Block(2);
        assert_eq!(
            m(&[1, 0, 0, 0]).cmp_under(&m(&[0, 0, 9, 9]), ord),
            Ordering::Greater
        );
        assert_eq!(
            m(&[0, 1, 2, 0]).cmp_under(&m(&[0, 1, 0, 3]), ord),
            Ordering::Less
        );
        // First block ties are broken inside the second block by grevlex.
        assert_eq!(
            m(&[0, 0, 1, 1]).cmp_under(&m(&[0, 0, 0, 2]), ord),
            Ordering::Greater
        );
    }

    #[test]
    fn orders_are_total_and_multiplicative() {
        let orders = [MonomialOrder::Lex, MonomialOrder::GrevLex, MonomialOrder::Block(1)];
        let mut monos = alloc::vec::Vec::new();
        for a in 0u16..3 {
            for b in 0u16..3 {
                for c in 0u16..3 {
                    monos.push(m(&[a, b, c]));
                }
            }
        }
        for ord in orders {
            for x in &monos {
                for y in &monos {
                    let cmp = x.cmp_under(y, ord);
                    assert_eq!(cmp.reverse(), y.cmp_under(x, ord));
                    if cmp == Ordering::Equal {
                        assert_eq!(x, y);
                    }
                    // One is the minimum.
                    if x.is_one() && !y.is_one() {
                        assert_eq!(cmp, Ordering::Less);
                    }
                    // Multiplying both sides preserves the comparison.
                    for t in &monos {
                        assert_eq!(x.mul(t).cmp_under(&y.mul(t), ord), cmp);
                    }
                }
            }
        }
    }

    #[test]
    fn projection_helpers() {
        let a = m(&[0, 0, 2, 5]);
        assert!(a.free_of_first(2));
        assert!(!m(&[0, 1, 0, 0]).free_of_first(2));
        assert_eq!(a.drop_first(2), m(&[2, 5]));
        assert_eq!(m(&[2, 5]).prepend_zeros(2), m(&[0, 0, 2, 5]));
    }
}
