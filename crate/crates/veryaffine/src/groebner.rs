//! Buchberger's algorithm and the ideal operations built on it.
//!
//! The engine is plain Buchberger with the normal selection strategy
//! (smallest lcm first), the product criterion, and the chain criterion,
//! followed by inter reduction to the unique reduced Groebner basis. No
//! signatures, no modular tricks: the point is auditability, and the ideals
//! this crate meets are small enough that the textbook algorithm is fast.
//!
//! Elimination uses either a two block order or pure lex; saturation adjoins
//! an inverse variable and eliminates it. Both are selectable so results can
//! be cross checked between independent orders.

use alloc::collections::{BTreeSet, BinaryHeap};
use alloc::vec::Vec;

use crate::budget::{Budget, BudgetExhausted};
use crate::field::Field;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{merge_scaled, MultiPoly, PolynomialRing};

/// Failure modes of Groebner level computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroebnerError {
    Budget(BudgetExhausted),
    /// The ideal is the whole ring, so the requested quantity is undefined.
    UnitIdeal,
}

impl core::fmt::Display for GroebnerError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            GroebnerError::Budget(b) => write!(f, "{b}"),
            GroebnerError::UnitIdeal => write!(f, "the ideal is the unit ideal"),
        }
    }
}

impl From<BudgetExhausted> for GroebnerError {
    fn from(e: BudgetExhausted) -> Self {
        GroebnerError::Budget(e)
    }
}

/// How to realize an elimination order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum EliminationStrategy {
    /// Grevlex within two blocks; usually much faster.
    #[default]
    Block,
    /// Pure lexicographic order; slower, used for cross checking.
    Lex,
}

impl EliminationStrategy {
    fn order_for(self, k: usize) -> MonomialOrder {
        match self {
            EliminationStrategy::Block => MonomialOrder::Block(k),
            EliminationStrategy::Lex => MonomialOrder::Lex,
        }
    }
}

/// Finitely generated ideal with an optional cached reduced Groebner basis.
#[derive(Clone, Debug)]
pub struct Ideal<F: Field> {
    ring: PolynomialRing<F>,
    generators: Vec<MultiPoly<F>>,
    cache: Option<(MonomialOrder, Vec<MultiPoly<F>>)>,
}

impl<F: Field> Ideal<F> {
    /// Builds an ideal; zero generators are dropped.
    pub fn new(ring: PolynomialRing<F>, generators: Vec<MultiPoly<F>>) -> Self {
        let generators: Vec<_> = generators.into_iter().filter(|g| !g.is_zero()).collect();
        for g in &generators {
            assert_eq!(g.arity(), ring.arity(), "generator arity does not match ring");
        }
        Ideal { ring, generators, cache: None }
    }

    pub fn ring(&self) -> &PolynomialRing<F> {
        &self.ring
    }

    pub fn generators(&self) -> &[MultiPoly<F>] {
        &self.generators
    }

    /// The cached basis and its order, when one has been computed.
    pub fn cached_basis(&self) -> Option<(MonomialOrder, &[MultiPoly<F>])> {
        self.cache.as_ref().map(|(ord, basis)| (*ord, basis.as_slice()))
    }

    fn preferred_order(&self) -> MonomialOrder {
        self.cache
            .as_ref()
            .map_or(MonomialOrder::GrevLex, |(ord, _)| *ord)
    }

    /// The reduced Groebner basis under `ord`, computed once and cached.
    pub fn groebner_basis(
        &mut self,
        ord: MonomialOrder,
        budget: &mut Budget,
    ) -> Result<&[MultiPoly<F>], GroebnerError> {
        let stale = match &self.cache {
            Some((cached_ord, _)) => *cached_ord != ord,
            None => true,
        };
        if stale {
            let basis = buchberger(&self.ring, &self.generators, ord, budget)?;
            self.cache = Some((ord, basis));
        }
        Ok(&self.cache.as_ref().expect("just filled").1)
    }

    /// Ideal membership via normal form against a reduced basis.
    pub fn contains(
        &mut self,
        f: &MultiPoly<F>,
        budget: &mut Budget,
    ) -> Result<bool, GroebnerError> {
        let ord = self.preferred_order();
        let ring = self.ring.clone();
        let basis = self.groebner_basis(ord, budget)?;
        let nf = ring.normal_form(f, basis, ord, budget)?;
        Ok(nf.is_zero())
    }

    /// Whether the two ideals are equal, by mutual generator membership.
    ///
    /// # Panics
    ///
    /// Panics when the rings differ.
    pub fn equals(
        &mut self,
        other: &mut Ideal<F>,
        budget: &mut Budget,
    ) -> Result<bool, GroebnerError> {
        assert_eq!(self.ring, other.ring, "ideal comparison across different rings");
        for g in other.generators.clone() {
            if !self.contains(&g, budget)? {
                return Ok(false);
            }
        }
        for g in self.generators.clone() {
            if !other.contains(&g, budget)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Projects away the first `k` variables.
    ///
    /// Computes a Groebner basis under an elimination order and keeps the
    /// basis elements free of the eliminated variables; those form a reduced
    /// basis of the intersection with the smaller ring.
    ///
    /// # Panics
    ///
    /// Panics unless `0 < k < arity`.
    pub fn eliminate(
        &mut self,
        k: usize,
        strategy: EliminationStrategy,
        budget: &mut Budget,
    ) -> Result<Ideal<F>, GroebnerError> {
        let arity = self.ring.arity();
        assert!(k > 0 && k < arity, "can only eliminate a proper prefix of variables");
        let ord = strategy.order_for(k);
        let basis = self.groebner_basis(ord, budget)?.to_vec();
        let var_names: Vec<&str> = self.ring.vars()[k..].iter().map(|s| s.as_str()).collect();
        let sub_ring = PolynomialRing::new(self.ring.field().clone(), &var_names);
        let mut projected = Vec::new();
        for g in basis {
            if g.terms().iter().all(|(m, _)| m.free_of_first(k)) {
                let terms = g
                    .terms()
                    .iter()
                    .map(|(m, c)| (m.drop_first(k), c.clone()))
                    .collect();
                projected.push(sub_ring.from_terms(terms));
            }
        }
        let induced = match strategy {
            EliminationStrategy::Block => MonomialOrder::GrevLex,
            EliminationStrategy::Lex => MonomialOrder::Lex,
        };
        Ok(Ideal {
            ring: sub_ring,
            generators: projected.clone(),
            cache: Some((induced, projected)),
        })
    }

    /// Saturation `I : f^infinity` by inverting `f` with a fresh variable
    /// and eliminating it again.
    pub fn saturate(
        &mut self,
        f: &MultiPoly<F>,
        strategy: EliminationStrategy,
        budget: &mut Budget,
    ) -> Result<Ideal<F>, GroebnerError> {
        assert_eq!(f.arity(), self.ring.arity(), "saturation element arity mismatch");
        let fresh = fresh_var_name(self.ring.vars());
        let mut var_names: Vec<&str> = alloc::vec![fresh.as_str()];
        var_names.extend(self.ring.vars().iter().map(|s| s.as_str()));
        let big_ring = PolynomialRing::new(self.ring.field().clone(), &var_names);
        let lift = |g: &MultiPoly<F>| {
            big_ring.from_terms(
                g.terms()
                    .iter()
                    .map(|(m, c)| (m.prepend_zeros(1), c.clone()))
                    .collect(),
            )
        };
        let mut gens: Vec<MultiPoly<F>> = self.generators.iter().map(lift).collect();
        let inverted = big_ring.mul_term(
            &lift(f),
            &Monomial::var(big_ring.arity(), 0),
            &big_ring.field().one(),
        );
        gens.push(big_ring.sub(&big_ring.one(), &inverted));
        let mut extended = Ideal::new(big_ring, gens);
        extended.eliminate(1, strategy, budget)
    }

    /// Iterated saturation by each element in order.
    pub fn saturate_many(
        &mut self,
        fs: &[MultiPoly<F>],
        strategy: EliminationStrategy,
        budget: &mut Budget,
    ) -> Result<Ideal<F>, GroebnerError> {
        let mut current = self.clone();
        for f in fs {
            current = current.saturate(f, strategy, budget)?;
        }
        Ok(current)
    }

    /// Krull dimension of the affine scheme cut out by the ideal, computed
    /// as the largest variable subset independent modulo the leading terms.
    ///
    /// Returns `GroebnerError::UnitIdeal` when no scheme is left.
    pub fn krull_dimension(&mut self, budget: &mut Budget) -> Result<usize, GroebnerError> {
        let ord = self.preferred_order();
        let arity = self.ring.arity();
        assert!(arity <= 32, "dimension search limited to 32 variables");
        let ring = self.ring.clone();
        let basis = self.groebner_basis(ord, budget)?;
        let mut lead_supports: Vec<u32> = Vec::with_capacity(basis.len());
        for g in basis {
            let (lm, _) = ring.leading_term(g, ord).expect("basis has no zero polynomial");
            if lm.is_one() {
                return Err(GroebnerError::UnitIdeal);
            }
            lead_supports.push(lm.support().fold(0u32, |acc, i| acc | (1 << i)));
        }
        let mut best = 0u32;
        for mask in 0u32..(1 << arity) {
            // Independent: no leading monomial lives entirely inside `mask`.
            if lead_supports.iter().any(|&sup| sup & !mask == 0) {
                continue;
            }
            best = best.max(mask.count_ones());
        }
        Ok(best as usize)
    }
}

fn fresh_var_name(existing: &[alloc::string::String]) -> alloc::string::String {
    use alloc::string::ToString;
    if !existing.iter().any(|v| v == "s") {
        return "s".to_string();
    }
    let mut i = 0u32;
    loop {
        let candidate = alloc::format!("s{i}");
        if !existing.iter().any(|v| *v == candidate) {
            return candidate;
        }
        i += 1;
    }
}

/// True when every S polynomial of the list reduces to zero against it.
pub fn is_groebner_basis<F: Field>(
    ring: &PolynomialRing<F>,
    basis: &[MultiPoly<F>],
    ord: MonomialOrder,
    budget: &mut Budget,
) -> Result<bool, BudgetExhausted> {
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let s = ring.s_polynomial(&basis[i], &basis[j], ord);
            if !ring.normal_form(&s, basis, ord, budget)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// True when the basis is reduced: monic elements, and no monomial of any
/// element divisible by another element's leading monomial.
pub fn is_reduced_basis<F: Field>(
    ring: &PolynomialRing<F>,
    basis: &[MultiPoly<F>],
    ord: MonomialOrder,
) -> bool {
    for (i, g) in basis.iter().enumerate() {
        let Some((_, lc)) = ring.leading_term(g, ord) else {
            return false;
        };
        if !ring.field().is_one(lc) {
            return false;
        }
        for (j, other) in basis.iter().enumerate() {
            if i == j {
                continue;
            }
            let (om, _) = ring.leading_term(other, ord).expect("zero in basis");
            if g.terms().iter().any(|(m, _)| om.divides(m)) {
                return false;
            }
        }
    }
    true
}

/// Critical pair ordered by (lcm under the order, then indices).
#[derive(Clone, Debug, PartialEq, Eq)]
struct PairKey {
    ord: MonomialOrder,
    lcm: Monomial,
    i: usize,
    j: usize,
}

impl Ord for PairKey {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.lcm
            .cmp_under(&other.lcm, self.ord)
            .then(self.i.cmp(&other.i))
            .then(self.j.cmp(&other.j))
    }
}

impl PartialOrd for PairKey {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

type Terms<F> = Vec<(Monomial, <F as Field>::Elem)>;

struct Engine<'a, F: Field> {
    ring: &'a PolynomialRing<F>,
    ord: MonomialOrder,
    basis: Vec<Terms<F>>,
}

impl<'a, F: Field> Engine<'a, F> {
    fn lm(&self, i: usize) -> &Monomial {
        &self.basis[i][0].0
    }

    fn canonicalize(&self, terms: &mut Terms<F>) {
        let mut coeffs: Vec<F::Elem> = terms.iter().map(|(_, c)| c.clone()).collect();
        self.ring.field().scale_canonical(&mut coeffs);
        for ((_, c), nc) in terms.iter_mut().zip(coeffs) {
            *c = nc;
        }
    }

    /// Full normal form of `p` against the current basis.
    fn reduce(&self, mut p: Terms<F>, budget: &mut Budget) -> Result<Terms<F>, BudgetExhausted> {
        let field = self.ring.field();
        let mut out: Terms<F> = Vec::new();
        'outer: while let Some((lm, lc)) = p.first().cloned() {
            budget.step()?;
            for g in &self.basis {
                let (gm, gc) = &g[0];
                if gm.divides(&lm) {
                    let qm = lm.quotient(gm);
                    let qc = field.neg(&field.div(&lc, gc));
                    p = merge_scaled(field, &p, g, &qc, Some(&qm), self.ord);
                    continue 'outer;
                }
            }
            out.push(p.remove(0));
        }
        Ok(out)
    }

    fn s_poly(&self, i: usize, j: usize) -> Terms<F> {
        let field = self.ring.field();
        let (li, lj) = (self.lm(i), self.lm(j));
        let lcm = li.lcm(lj);
        let qi = lcm.quotient(li);
        let ci = field.inv(&self.basis[i][0].1);
        let a: Terms<F> = self.basis[i]
            .iter()
            .map(|(m, c)| (m.mul(&qi), field.mul(c, &ci)))
            .collect();
        let qj = lcm.quotient(lj);
        let cj = field.neg(&field.inv(&self.basis[j][0].1));
        merge_scaled(field, &a, &self.basis[j], &cj, Some(&qj), self.ord)
    }
}

/// Computes the reduced Groebner basis of the generators under `ord`.
///
/// The result is monic, inter reduced, and sorted by increasing leading
/// monomial, which makes it unique for the given ideal and order.
fn buchberger<F: Field>(
    ring: &PolynomialRing<F>,
    generators: &[MultiPoly<F>],
    ord: MonomialOrder,
    budget: &mut Budget,
) -> Result<Vec<MultiPoly<F>>, GroebnerError> {
    let mut engine = Engine { ring, ord, basis: Vec::new() };
    for g in generators {
        if g.is_zero() {
            continue;
        }
        let mut terms = ring.terms_under(g, ord);
        engine.canonicalize(&mut terms);
        engine.basis.push(terms);
    }

    let mut heap: BinaryHeap<core::cmp::Reverse<PairKey>> = BinaryHeap::new();
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    let push_pairs = |engine: &Engine<'_, F>,
                          heap: &mut BinaryHeap<core::cmp::Reverse<PairKey>>,
                          pending: &mut BTreeSet<(usize, usize)>,
                          j: usize| {
        for i in 0..j {
            let lcm = engine.lm(i).lcm(engine.lm(j));
            heap.push(core::cmp::Reverse(PairKey { ord, lcm, i, j }));
            pending.insert((i, j));
        }
    };
    for j in 0..engine.basis.len() {
        push_pairs(&engine, &mut heap, &mut pending, j);
    }

    while let Some(core::cmp::Reverse(pair)) = heap.pop() {
        pending.remove(&(pair.i, pair.j));
        budget.step().map_err(GroebnerError::from)?;
        let (i, j) = (pair.i, pair.j);
        if engine.lm(i).coprime(engine.lm(j)) {
            continue;
        }
        let chain = (0..engine.basis.len()).any(|k| {
            k != i
                && k != j
                && engine.lm(k).divides(&pair.lcm)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let s = engine.s_poly(i, j);
        let mut r = engine.reduce(s, budget)?;
        if r.is_empty() {
            continue;
        }
        engine.canonicalize(&mut r);
        engine.basis.push(r);
        push_pairs(&engine, &mut heap, &mut pending, engine.basis.len() - 1);
    }

    Ok(finalize(&mut engine, budget)?)
}

fn key(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Minimalizes, inter reduces, makes monic, and sorts the basis.
fn finalize<F: Field>(
    engine: &mut Engine<'_, F>,
    budget: &mut Budget,
) -> Result<Vec<MultiPoly<F>>, BudgetExhausted> {
    let field = engine.ring.field().clone();

    // Minimal basis: drop any element whose leading monomial is divisible by
    // another kept element's leading monomial. Scanning by ascending leading
    // monomial makes "kept so far" the only candidates.
    let mut order: Vec<usize> = (0..engine.basis.len()).collect();
    order.sort_by(|&a, &b| engine.lm(a).cmp_under(engine.lm(b), engine.ord));
    let mut kept: Vec<Terms<F>> = Vec::new();
    for idx in order {
        let lm = engine.lm(idx);
        if kept.iter().any(|g| g[0].0.divides(lm)) {
            continue;
        }
        kept.push(engine.basis[idx].clone());
    }

    // Inter reduce tails until stable.
    engine.basis = kept;
    loop {
        let mut changed = false;
        for i in 0..engine.basis.len() {
            let g = engine.basis[i].clone();
            let rest = Engine {
                ring: engine.ring,
                ord: engine.ord,
                basis: engine
                    .basis
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, p)| p.clone())
                    .collect(),
            };
            let mut r = rest.reduce(g, budget)?;
            debug_assert!(!r.is_empty(), "minimal basis element reduced away");
            engine.canonicalize(&mut r);
            if r != engine.basis[i] {
                engine.basis[i] = r;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }

    // Monic output sorted by ascending leading monomial.
    let mut polys: Vec<Terms<F>> = core::mem::take(&mut engine.basis);
    polys.sort_by(|a, b| a[0].0.cmp_under(&b[0].0, engine.ord));
    Ok(polys
        .into_iter()
        .map(|mut terms| {
            let inv = field.inv(&terms[0].1);
            if !field.is_one(&terms[0].1) {
                for (_, c) in terms.iter_mut() {
                    *c = field.mul(c, &inv);
                }
            }
            engine.ring.poly_from_distinct_terms(terms)
        })
        .collect())
}
