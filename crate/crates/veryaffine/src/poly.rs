//! Sparse multivariate polynomials over an exact field.
//!
//! A polynomial stores its nonzero terms sorted strictly decreasing under
//! graded reverse lex; that canonical shape makes equality structural and
//! printing deterministic. Operations live on the ring descriptor, which
//! carries the coefficient field and the variable names. Division and
//! S polynomials accept any monomial order and re-sort working copies as
//! needed.

use alloc::borrow::ToOwned;
use alloc::string::String;
use alloc::vec::Vec;

use crate::budget::{Budget, BudgetExhausted};
use crate::field::{Field, Rationals};
use crate::monomial::{Monomial, MonomialOrder};
use crate::rational::format_rat;

/// Polynomial in canonical form: terms sorted decreasing under grevlex,
/// no zero coefficients, every monomial of the ring's arity.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiPoly<F: Field> {
    arity: usize,
    terms: Vec<(Monomial, F::Elem)>,
}

impl<F: Field> MultiPoly<F> {
    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order, largest first.
    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    /// Total degree, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }
}

/// Result of multivariate division: `f = sum(quotients[i] * divisors[i]) + remainder`.
#[derive(Clone, Debug, PartialEq)]
pub struct Division<F: Field> {
    pub quotients: Vec<MultiPoly<F>>,
    pub remainder: MultiPoly<F>,
}

/// Ring descriptor: coefficient field plus ordered variable names.
#[derive(Clone, Debug, PartialEq)]
pub struct PolynomialRing<F: Field> {
    field: F,
    vars: Vec<String>,
}

fn valid_var_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl<F: Field> PolynomialRing<F> {
    /// Builds a ring descriptor.
    ///
    /// # Panics
    ///
    /// Panics when a variable name is not an identifier or names repeat.
    pub fn new(field: F, vars: &[&str]) -> Self {
        assert!(!vars.is_empty(), "polynomial ring needs at least one variable");
        for (i, v) in vars.iter().enumerate() {
            assert!(valid_var_name(v), "invalid variable name `{v}`");
            assert!(!vars[..i].contains(v), "duplicate variable name `{v}`");
        }
        PolynomialRing {
            field,
            vars: vars.iter().map(|&v| v.to_owned()).collect(),
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    fn check(&self, f: &MultiPoly<F>) {
        assert_eq!(f.arity, self.arity(), "polynomial arity does not match ring");
    }

    pub fn zero(&self) -> MultiPoly<F> {
        MultiPoly { arity: self.arity(), terms: Vec::new() }
    }

    pub fn constant(&self, c: F::Elem) -> MultiPoly<F> {
        self.term(Monomial::one(self.arity()), c)
    }

    pub fn one(&self) -> MultiPoly<F> {
        self.constant(self.field.one())
    }

    pub fn int(&self, n: i64) -> MultiPoly<F> {
        self.constant(self.field.from_int(n))
    }

    /// The variable `x_i` as a polynomial.
    pub fn var(&self, i: usize) -> MultiPoly<F> {
        self.term(Monomial::var(self.arity(), i), self.field.one())
    }

    /// Single term `c * m`; zero coefficient gives the zero polynomial.
    pub fn term(&self, m: Monomial, c: F::Elem) -> MultiPoly<F> {
        assert_eq!(m.arity(), self.arity(), "monomial arity does not match ring");
        if self.field.is_zero(&c) {
            return self.zero();
        }
        MultiPoly { arity: self.arity(), terms: alloc::vec![(m, c)] }
    }

    /// Normalizes an arbitrary term list: sorts, merges duplicates, drops zeros.
    pub fn from_terms(&self, terms: Vec<(Monomial, F::Elem)>) -> MultiPoly<F> {
        let mut terms = terms;
        for (m, _) in &terms {
            assert_eq!(m.arity(), self.arity(), "monomial arity does not match ring");
        }
        terms.sort_by(|a, b| b.0.cmp_under(&a.0, MonomialOrder::GrevLex));
        let mut out: Vec<(Monomial, F::Elem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((last_m, last_c)) if *last_m == m => {
                    *last_c = self.field.add(last_c, &c);
                    if self.field.is_zero(last_c) {
                        out.pop();
                    }
                }
                _ => {
                    if !self.field.is_zero(&c) {
                        out.push((m, c));
                    }
                }
            }
        }
        MultiPoly { arity: self.arity(), terms: out }
    }

    pub fn add(&self, f: &MultiPoly<F>, g: &MultiPoly<F>) -> MultiPoly<F> {
        self.check(f);
        self.check(g);
        let terms = merge_scaled(
            &self.field,
            &f.terms,
            &g.terms,
            &self.field.one(),
            None,
            MonomialOrder::GrevLex,
        );
        MultiPoly { arity: f.arity, terms }
    }

    pub fn neg(&self, f: &MultiPoly<F>) -> MultiPoly<F> {
        self.check(f);
        MultiPoly {
            arity: f.arity,
            terms: f.terms.iter().map(|(m, c)| (m.clone(), self.field.neg(c))).collect(),
        }
    }

    pub fn sub(&self, f: &MultiPoly<F>, g: &MultiPoly<F>) -> MultiPoly<F> {
        self.check(f);
        self.check(g);
        let minus_one = self.field.neg(&self.field.one());
        let terms = merge_scaled(
            &self.field,
            &f.terms,
            &g.terms,
            &minus_one,
            None,
            MonomialOrder::GrevLex,
        );
        MultiPoly { arity: f.arity, terms }
    }

    pub fn scale(&self, c: &F::Elem, f: &MultiPoly<F>) -> MultiPoly<F> {
        self.check(f);
        if self.field.is_zero(c) {
            return self.zero();
        }
        MultiPoly {
            arity: f.arity,
            terms: f.terms.iter().map(|(m, a)| (m.clone(), self.field.mul(a, c))).collect(),
        }
    }

    /// Multiplies by the single term `c * m`.
    pub fn mul_term(&self, f: &MultiPoly<F>, m: &Monomial, c: &F::Elem) -> MultiPoly<F> {
        self.check(f);
        if self.field.is_zero(c) {
            return self.zero();
        }
        MultiPoly {
            arity: f.arity,
            terms: f
                .terms
                .iter()
                .map(|(fm, fc)| (fm.mul(m), self.field.mul(fc, c)))
                .collect(),
        }
    }

    pub fn mul(&self, f: &MultiPoly<F>, g: &MultiPoly<F>) -> MultiPoly<F> {
        self.check(f);
        self.check(g);
        let mut acc: Vec<(Monomial, F::Elem)> = Vec::new();
        for (m, c) in &f.terms {
            acc = merge_scaled(&self.field, &acc, &g.terms, c, Some(m), MonomialOrder::GrevLex);
        }
        MultiPoly { arity: f.arity, terms: acc }
    }

    pub fn pow(&self, f: &MultiPoly<F>, mut e: u32) -> MultiPoly<F> {
        self.check(f);
        let mut base = f.clone();
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

    /// Leading term under `ord`, `None` for the zero polynomial.
    pub fn leading_term<'a>(
        &self,
        f: &'a MultiPoly<F>,
        ord: MonomialOrder,
    ) -> Option<(&'a Monomial, &'a F::Elem)> {
        self.check(f);
        if ord == MonomialOrder::GrevLex {
            return f.terms.first().map(|(m, c)| (m, c));
        }
        f.terms
            .iter()
            .max_by(|a, b| a.0.cmp_under(&b.0, ord))
            .map(|(m, c)| (m, c))
    }

    /// Evaluates at a point given in variable order.
    pub fn evaluate(&self, f: &MultiPoly<F>, point: &[F::Elem]) -> F::Elem {
        self.check(f);
        assert_eq!(point.len(), self.arity(), "point arity does not match ring");
        let mut acc = self.field.zero();
        for (m, c) in &f.terms {
            let mut term = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    term = self.field.mul(&term, &self.field.pow(&point[i], u32::from(e)));
                }
            }
            acc = self.field.add(&acc, &term);
        }
        acc
    }

    /// Clones the term list sorted decreasing under `ord`.
    pub(crate) fn terms_under(
        &self,
        f: &MultiPoly<F>,
        ord: MonomialOrder,
    ) -> Vec<(Monomial, F::Elem)> {
        self.check(f);
        let mut terms = f.terms.clone();
        if ord != MonomialOrder::GrevLex {
            terms.sort_by(|a, b| b.0.cmp_under(&a.0, ord));
        }
        terms
    }

    /// Rebuilds a canonical polynomial from terms with distinct monomials.
    pub(crate) fn poly_from_distinct_terms(
        &self,
        mut terms: Vec<(Monomial, F::Elem)>,
    ) -> MultiPoly<F> {
        terms.sort_by(|a, b| b.0.cmp_under(&a.0, MonomialOrder::GrevLex));
        MultiPoly { arity: self.arity(), terms }
    }

    /// Multivariate division of `f` by an ordered list of divisors.
    ///
    /// Repeatedly cancels the leading term of the running polynomial against
    /// the first divisor whose leading monomial divides it; terms no divisor
    /// can touch move to the remainder. No remainder monomial is divisible
    /// by any divisor's leading monomial.
    ///
    /// # Panics
    ///
    /// Panics when any divisor is zero.
    pub fn divide(
        &self,
        f: &MultiPoly<F>,
        divisors: &[MultiPoly<F>],
        ord: MonomialOrder,
        budget: &mut Budget,
    ) -> Result<Division<F>, BudgetExhausted> {
        self.check(f);
        let mut sorted: Vec<Vec<(Monomial, F::Elem)>> = Vec::with_capacity(divisors.len());
        for d in divisors {
            self.check(d);
            assert!(!d.is_zero(), "division by zero polynomial");
            sorted.push(self.terms_under(d, ord));
        }
        let mut quotients: Vec<Vec<(Monomial, F::Elem)>> =
            divisors.iter().map(|_| Vec::new()).collect();
        let mut remainder: Vec<(Monomial, F::Elem)> = Vec::new();
        let mut p = self.terms_under(f, ord);
        'outer: while let Some((lm, lc)) = p.first().cloned() {
            budget.step()?;
            for (i, d) in sorted.iter().enumerate() {
                let (dm, dc) = &d[0];
                if dm.divides(&lm) {
                    let qm = lm.quotient(dm);
                    let qc = self.field.div(&lc, dc);
                    let neg_qc = self.field.neg(&qc);
                    p = merge_scaled(&self.field, &p, d, &neg_qc, Some(&qm), ord);
                    quotients[i].push((qm, qc));
                    continue 'outer;
                }
            }
            remainder.push(p.remove(0));
        }
        // Each quotient collected its terms with strictly decreasing
        // monomials, and the remainder was emitted in decreasing order, so
        // all monomials are distinct.
        Ok(Division {
            quotients: quotients
                .into_iter()
                .map(|q| self.poly_from_distinct_terms(q))
                .collect(),
            remainder: self.poly_from_distinct_terms(remainder),
        })
    }

    /// Remainder of division, the normal form of `f` modulo `divisors`.
    pub fn normal_form(
        &self,
        f: &MultiPoly<F>,
        divisors: &[MultiPoly<F>],
        ord: MonomialOrder,
        budget: &mut Budget,
    ) -> Result<MultiPoly<F>, BudgetExhausted> {
        Ok(self.divide(f, divisors, ord, budget)?.remainder)
    }

    /// The S polynomial `(L / lt(f)) f - (L / lt(g)) g` with `L = lcm(lm f, lm g)`.
    ///
    /// # Panics
    ///
    /// Panics when `f` or `g` is zero.
    pub fn s_polynomial(
        &self,
        f: &MultiPoly<F>,
        g: &MultiPoly<F>,
        ord: MonomialOrder,
    ) -> MultiPoly<F> {
        let (fm, fc) = self.leading_term(f, ord).expect("s polynomial of zero");
        let (gm, gc) = self.leading_term(g, ord).expect("s polynomial of zero");
        let l = fm.lcm(gm);
        let a = self.mul_term(f, &l.quotient(fm), &self.field.inv(fc));
        let b = self.mul_term(g, &l.quotient(gm), &self.field.inv(gc));
        self.sub(&a, &b)
    }
}

impl PolynomialRing<Rationals> {
    /// Embeds a rational polynomial into the same variables over another field.
    pub fn embed<G: Field>(
        &self,
        f: &MultiPoly<Rationals>,
        target: &PolynomialRing<G>,
    ) -> MultiPoly<G> {
        self.check(f);
        assert_eq!(self.arity(), target.arity(), "embedding changes arity");
        MultiPoly {
            arity: f.arity,
            terms: f
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), target.field().from_rat(c)))
                .collect(),
        }
    }

    /// Canonical rendering, e.g. `w*x^2 - 3*y + 1/2`.
    pub fn format_poly(&self, f: &MultiPoly<Rationals>) -> String {
        use core::fmt::Write;
        use num_traits::Signed;

        self.check(f);
        if f.is_zero() {
            return String::from("0");
        }
        let mut out = String::new();
        for (i, (m, c)) in f.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let coeff = format_rat(&abs);
            if m.is_one() {
                out.push_str(&coeff);
            } else {
                if coeff != "1" {
                    out.push_str(&coeff);
                    out.push('*');
                }
                let mut first = true;
                for (idx, &e) in m.exps().iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    if !first {
                        out.push('*');
                    }
                    first = false;
                    out.push_str(&self.vars[idx]);
                    if e > 1 {
                        let _ = write!(out, "^{e}");
                    }
                }
            }
        }
        out
    }
}

/// Computes `a + scale * x^shift * b` on term lists sorted decreasing under `ord`.
pub(crate) fn merge_scaled<F: Field>(
    field: &F,
    a: &[(Monomial, F::Elem)],
    b: &[(Monomial, F::Elem)],
    scale: &F::Elem,
    shift: Option<&Monomial>,
    ord: MonomialOrder,
) -> Vec<(Monomial, F::Elem)> {
    let shifted = |m: &Monomial| match shift {
        Some(s) => m.mul(s),
        None => m.clone(),
    };
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut j = 0;
    let mut cur_b: Option<(Monomial, F::Elem)> = b
        .first()
        .map(|(m, c)| (shifted(m), field.mul(c, scale)));
    while i < a.len() || cur_b.is_some() {
        let take_a = match (&a.get(i), &cur_b) {
            (Some((am, _)), Some((bm, _))) => match am.cmp_under(bm, ord) {
                core::cmp::Ordering::Greater => true,
                core::cmp::Ordering::Less => false,
                core::cmp::Ordering::Equal => {
                    let (am, ac) = &a[i];
                    let sum = field.add(ac, &cur_b.as_ref().expect("checked").1);
                    if !field.is_zero(&sum) {
                        out.push((am.clone(), sum));
                    }
                    i += 1;
                    j += 1;
                    cur_b = b.get(j).map(|(m, c)| (shifted(m), field.mul(c, scale)));
                    continue;
                }
            },
            (Some(_), None) => true,
            (None, Some(_)) => false,
            (None, None) => break,
        };
        if take_a {
            let (m, c) = &a[i];
            out.push((m.clone(), c.clone()));
            i += 1;
        } else {
            let (m, c) = cur_b.take().expect("checked");
            if !field.is_zero(&c) {
                out.push((m, c));
            }
            j += 1;
            cur_b = b.get(j).map(|(m, c)| (shifted(m), field.mul(c, scale)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn ring2() -> PolynomialRing<Rationals> {
        PolynomialRing::new(Rationals, &["x", "y"])
    }

    fn poly(ring: &PolynomialRing<Rationals>, terms: &[(i64, &[u16])]) -> MultiPoly<Rationals> {
        ring.from_terms(
            terms
                .iter()
                .map(|&(c, e)| (Monomial::new(e), int(c)))
                .collect(),
        )
    }

    #[test]
    fn canonical_form_merges_and_sorts() {
        let r = ring2();
        let f = r.from_terms(alloc::vec![
            (Monomial::new(&[1, 1]), int(1)),
            (Monomial::new(&[0, 0]), int(0)),
            (Monomial::new(&[1, 1]), int(2)),
            (Monomial::new(&[2, 0]), int(1)),
            (Monomial::new(&[2, 0]), int(-1)),
        ]);
        assert_eq!(f, poly(&r, &[(3, &[1, 1])]));
        assert!(r.from_terms(alloc::vec![]).is_zero());
    }

    #[test]
    fn ring_identities() {
        let r = ring2();
        let f = poly(&r, &[(1, &[1, 0]), (-1, &[0, 1])]);
        let g = poly(&r, &[(1, &[1, 0]), (1, &[0, 1])]);
        // (x - y)(x + y) = x^2 - y^2
        assert_eq!(r.mul(&f, &g), poly(&r, &[(1, &[2, 0]), (-1, &[0, 2])]));
        assert_eq!(r.add(&f, &r.neg(&f)), r.zero());
        assert_eq!(r.mul(&f, &r.one()), f);
        assert_eq!(r.mul(&f, &r.zero()), r.zero());
        assert_eq!(r.sub(&g, &g), r.zero());
        let h = poly(&r, &[(5, &[0, 3]), (2, &[1, 1])]);
        let left = r.mul(&f, &r.add(&g, &h));
        let right = r.add(&r.mul(&f, &g), &r.mul(&f, &h));
        assert_eq!(left, right);
    }

    #[test]
    fn powers_and_scaling() {
        let r = ring2();
        let f = poly(&r, &[(1, &[1, 0]), (1, &[0, 0])]);
        let cube = r.pow(&f, 3);
        assert_eq!(
            cube,
            poly(&r, &[(1, &[3, 0]), (3, &[2, 0]), (3, &[1, 0]), (1, &[0, 0])])
        );
        assert_eq!(r.pow(&f, 0), r.one());
        assert_eq!(
            r.scale(&rat(1, 2), &poly(&r, &[(4, &[1, 0])])),
            poly(&r, &[(2, &[1, 0])])
        );
        assert_eq!(r.scale(&int(0), &f), r.zero());
    }

    #[test]
    fn leading_terms_depend_on_order() {
        let r = ring2();
        // f = x + y^3
        let f = poly(&r, &[(1, &[1, 0]), (1, &[0, 3])]);
        let (m, _) = r.leading_term(&f, MonomialOrder::Lex).unwrap();
        assert_eq!(m, &Monomial::new(&[1, 0]));
        let (m, _) = r.leading_term(&f, MonomialOrder::GrevLex).unwrap();
        assert_eq!(m, &Monomial::new(&[0, 3]));
        // x^2 - y leads with x^2 either way.
        let g = poly(&r, &[(1, &[2, 0]), (-1, &[0, 1])]);
        let (m, c) = r.leading_term(&g, MonomialOrder::Lex).unwrap();
        assert_eq!((m, c), (&Monomial::new(&[2, 0]), &int(1)));
        assert!(r.leading_term(&r.zero(), MonomialOrder::Lex).is_none());
    }

    #[test]
    fn evaluation() {
        let r = PolynomialRing::new(Rationals, &["w", "x", "y", "z"]);
        // w + y - 1 vanishes on (a, b, 1 - a, 1 - b).
        let f = r.from_terms(alloc::vec![
            (Monomial::new(&[1, 0, 0, 0]), int(1)),
            (Monomial::new(&[0, 0, 1, 0]), int(1)),
            (Monomial::new(&[0, 0, 0, 0]), int(-1)),
        ]);
        let point = [int(2), int(3), int(-1), int(-2)];
        assert_eq!(r.evaluate(&f, &point), int(0));
        let g = r.pow(&r.var(0), 5);
        assert_eq!(r.evaluate(&g, &point), int(32));
        assert_eq!(r.evaluate(&r.zero(), &point), int(0));
    }

    #[test]
    fn division_textbook_example() {
        let r = ring2();
        let f = poly(&r, &[(1, &[2, 1])]); // x^2 y
        let d1 = poly(&r, &[(1, &[2, 0]), (-1, &[0, 1])]); // x^2 - y
        let d2 = poly(&r, &[(1, &[1, 1]), (-1, &[0, 0])]); // x y - 1
        let mut budget = Budget::unlimited();
        let div = r
            .divide(&f, &[d1.clone(), d2.clone()], MonomialOrder::GrevLex, &mut budget)
            .unwrap();
        assert_eq!(div.remainder, poly(&r, &[(1, &[0, 2])])); // y^2
        assert_eq!(div.quotients[0], poly(&r, &[(1, &[0, 1])])); // y
        assert!(div.quotients[1].is_zero());
        // Recombine.
        let recombined = r.add(
            &r.add(&r.mul(&div.quotients[0], &d1), &r.mul(&div.quotients[1], &d2)),
            &div.remainder,
        );
        assert_eq!(recombined, f);

        // Divisor order matters for the raw division algorithm.
        let div = r
            .divide(&f, &[d2.clone(), d1.clone()], MonomialOrder::GrevLex, &mut budget)
            .unwrap();
        assert_eq!(div.remainder, poly(&r, &[(1, &[1, 0])])); // x
    }

    #[test]
    fn remainder_is_irreducible() {
        let r = ring2();
        let f = poly(&r, &[(1, &[3, 2]), (2, &[1, 1]), (7, &[0, 0])]);
        let divisors = [
            poly(&r, &[(1, &[2, 0]), (-1, &[0, 1])]),
            poly(&r, &[(1, &[1, 1]), (-1, &[0, 0])]),
        ];
        let mut budget = Budget::unlimited();
        for ord in [MonomialOrder::Lex, MonomialOrder::GrevLex] {
            let div = r.divide(&f, &divisors, ord, &mut budget).unwrap();
            for (m, _) in div.remainder.terms() {
                for d in &divisors {
                    let (dm, _) = r.leading_term(d, ord).unwrap();
                    assert!(!dm.divides(m));
                }
            }
            let mut acc = div.remainder.clone();
            for (q, d) in div.quotients.iter().zip(&divisors) {
                acc = r.add(&acc, &r.mul(q, d));
            }
            assert_eq!(acc, f);
        }
    }

    #[test]
    fn division_budget_exhausts() {
        let r = ring2();
        let f = poly(&r, &[(1, &[20, 0])]);
        let d = poly(&r, &[(1, &[1, 0]), (1, &[0, 0])]);
        let mut budget = Budget::limited(3);
        let res = r.divide(&f, &[d], MonomialOrder::Lex, &mut budget);
        assert!(res.is_err());
    }

    #[test]
    fn s_polynomial_examples() {
        let r = ring2();
        let f = poly(&r, &[(1, &[2, 0]), (-1, &[0, 1])]); // x^2 - y
        let g = poly(&r, &[(1, &[1, 1]), (-1, &[0, 0])]); // x y - 1
        let s = r.s_polynomial(&f, &g, MonomialOrder::Lex);
        assert_eq!(s, poly(&r, &[(1, &[1, 0]), (-1, &[0, 2])])); // x - y^2
        assert_eq!(r.s_polynomial(&f, &f, MonomialOrder::Lex), r.zero());
        // Coprime leading monomials cancel completely here.
        let a = poly(&r, &[(1, &[2, 0])]);
        let b = poly(&r, &[(1, &[0, 3])]);
        assert_eq!(r.s_polynomial(&a, &b, MonomialOrder::GrevLex), r.zero());
        // Scaled inputs give the same monic-leading S polynomial.
        let s2 = r.s_polynomial(&r.scale(&rat(7, 3), &f), &r.scale(&int(-2), &g), MonomialOrder::Lex);
        assert_eq!(s2, s);
    }

    #[test]
    fn normal_form_is_idempotent_on_random_inputs() {
        use rand::{Rng, SeedableRng};
        let r = ring2();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let mut budget = Budget::unlimited();
        for _ in 0..60 {
            let mut random_poly = |max_terms: usize| {
                let n = rng.gen_range(0..=max_terms);
                let terms = (0..n)
                    .map(|_| {
                        (
                            Monomial::new(&[rng.gen_range(0..4u16), rng.gen_range(0..4u16)]),
                            int(rng.gen_range(-5..=5i64)),
                        )
                    })
                    .collect();
                r.from_terms(terms)
            };
            let f = random_poly(6);
            let divisors: Vec<_> = (0..2).map(|_| random_poly(3)).filter(|d| !d.is_zero()).collect();
            for ord in [MonomialOrder::Lex, MonomialOrder::GrevLex, MonomialOrder::Block(1)] {
                let nf = r.normal_form(&f, &divisors, ord, &mut budget).unwrap();
                let again = r.normal_form(&nf, &divisors, ord, &mut budget).unwrap();
                assert_eq!(nf, again);
            }
        }
    }

    #[test]
    fn formatting() {
        let r = ring2();
        assert_eq!(r.format_poly(&r.zero()), "0");
        assert_eq!(r.format_poly(&r.one()), "1");
        assert_eq!(r.format_poly(&r.int(-3)), "-3");
        let f = poly(&r, &[(1, &[2, 1]), (-3, &[0, 1]), (1, &[0, 0])]);
        assert_eq!(r.format_poly(&f), "x^2*y - 3*y + 1");
        let g = r.from_terms(alloc::vec![
            (Monomial::new(&[1, 0]), rat(-1, 2)),
            (Monomial::new(&[0, 1]), int(1)),
        ]);
        assert_eq!(r.format_poly(&g), "-1/2*x + y");
        let h = r.from_terms(alloc::vec![(Monomial::new(&[0, 1]), int(-1))]);
        assert_eq!(r.format_poly(&h), "-y");
    }

    #[test]
    fn format_orders_terms_canonically() {
        let r = PolynomialRing::new(Rationals, &["t1", "t2", "t3", "t4"]);
        let f = r.from_terms(alloc::vec![
            (Monomial::new(&[0, 0, 0, 0]), int(4)),
            (Monomial::new(&[0, 2, 0, 2]), int(1)),
            (Monomial::new(&[1, 0, 1, 0]), int(-2)),
        ]);
        assert_eq!(r.format_poly(&f), "t2^2*t4^2 - 2*t1*t3 + 4");
    }

    #[test]
    fn embedding_into_a_larger_field() {
        use crate::cyclotomic::CyclotomicField;
        let r = ring2();
        let f = r.from_terms(alloc::vec![
            (Monomial::new(&[1, 0]), rat(1, 2)),
            (Monomial::new(&[0, 0]), int(-1)),
        ]);
        let k = CyclotomicField::new(3);
        let rk = PolynomialRing::new(k.clone(), &["x", "y"]);
        let g = r.embed(&f, &rk);
        assert_eq!(g.num_terms(), 2);
        // The y variable does not occur, so any cyclotomic value works.
        let val = rk.evaluate(&g, &[k.from_int(2), k.zeta_pow(1)]);
        assert!(k.is_zero(&val));
    }

    #[test]
    #[should_panic]
    fn arity_mismatch_is_a_bug() {
        let r = ring2();
        let r3 = PolynomialRing::new(Rationals, &["x", "y", "z"]);
        let f = r3.var(2);
        let _ = r.add(&f, &r.one());
    }

    #[test]
    #[should_panic]
    fn duplicate_variables_rejected() {
        let _ = PolynomialRing::new(Rationals, &["x", "x"]);
    }
}
