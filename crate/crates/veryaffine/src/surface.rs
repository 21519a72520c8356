//! The surfaces themselves: the plane in the torus, the monomial quotient
//! map, and the implicitization pipeline that recovers each image surface's
//! defining equations.
//!
//! The base object is `U = {w + y = 1, x + z = 1}` inside the torus
//! `(C*)^4`. For odd `n` the map `p_n(w, x, y, z) = (w^n, w/x, w*y, w*z)`
//! sends `U` onto a closed surface `U_n` in a new torus with coordinates
//! `t1..t4`. The ideal of `U_n` is computed exactly: take the graph of
//! `p_n` over `U`, saturate away the coordinate hyperplanes so only the
//! torus part survives, and eliminate the source variables.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};

use crate::budget::Budget;
use crate::field::{Field, Rationals};
use crate::groebner::{EliminationStrategy, GroebnerError, Ideal};
use crate::parse::{parse_poly, ParsePolyError};
use crate::poly::{MultiPoly, PolynomialRing};
use crate::rational::{int, rat, Rat};
use crate::report::Check;

/// Coordinates of the source torus.
pub const SOURCE_VARS: [&str; 4] = ["w", "x", "y", "z"];
/// Coordinates of the target torus.
pub const TARGET_VARS: [&str; 4] = ["t1", "t2", "t3", "t4"];

/// SHA-256 of the vendored equation file for `n = 5`.
pub const U5_FIXTURE_SHA256: &str =
    "9ac172edd1ddb1d60fc13a6537ef1257095d812e5e52870233a30e4e98fe00b2";

/// The vendored implicit equations for `n = 5`, one polynomial per line.
pub fn vendored_u5_equations() -> &'static str {
    include_str!("../data/u5_equations.txt")
}

/// Lowercase hex SHA-256 of a string.
pub fn sha256_hex(data: &str) -> String {
    use sha2::{Digest, Sha256};
    const HEX: &[u8; 16] = b"0123456789abcdef";
    let digest = Sha256::digest(data.as_bytes());
    let mut out = String::with_capacity(64);
    for b in digest {
        out.push(HEX[(b >> 4) as usize] as char);
        out.push(HEX[(b & 15) as usize] as char);
    }
    out
}

/// `QQ[w, x, y, z]`.
pub fn source_ring() -> PolynomialRing<Rationals> {
    PolynomialRing::new(Rationals, &SOURCE_VARS)
}

/// `QQ[t1, t2, t3, t4]`.
pub fn target_ring() -> PolynomialRing<Rationals> {
    PolynomialRing::new(Rationals, &TARGET_VARS)
}

/// `QQ[w, x, y, z, t1, t2, t3, t4]`, source block first so it can be
/// eliminated.
pub fn graph_ring() -> PolynomialRing<Rationals> {
    PolynomialRing::new(Rationals, &["w", "x", "y", "z", "t1", "t2", "t3", "t4"])
}

/// The ideal of the plane `{w + y = 1, x + z = 1}` in the source ring.
pub fn plane_ideal() -> Ideal<Rationals> {
    let r = source_ring();
    let gens = alloc::vec![
        r.sub(&r.add(&r.var(0), &r.var(2)), &r.one()),
        r.sub(&r.add(&r.var(1), &r.var(3)), &r.one()),
    ];
    Ideal::new(r, gens)
}

/// The point `(a, b, 1 - a, 1 - b)` of the plane.
///
/// # Panics
///
/// Panics when `a` or `b` is 0 or 1, since the point must stay in the torus.
pub fn plane_point(a: &Rat, b: &Rat) -> [Rat; 4] {
    let one = int(1);
    for v in [a, b] {
        assert!(*v != int(0) && *v != one, "plane point leaves the torus");
    }
    [a.clone(), b.clone(), &one - a, &one - b]
}

/// Deterministic sample of plane points with small rational parameters.
pub fn sample_plane_points(seed: u64, count: usize) -> Vec<[Rat; 4]> {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let draw = |rng: &mut rand_chacha::ChaCha8Rng| loop {
        let q = rat(rng.gen_range(-9..=9), rng.gen_range(1..=9));
        if q != int(0) && q != int(1) {
            return q;
        }
    };
    (0..count)
        .map(|_| {
            let a = draw(&mut rng);
            let b = draw(&mut rng);
            plane_point(&a, &b)
        })
        .collect()
}

/// The monomial quotient map `p_n(w, x, y, z) = (w^n, w/x, w*y, w*z)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuotientMap {
    n: u32,
}

impl QuotientMap {
    /// # Panics
    ///
    /// Panics unless `n` is odd and positive; even `n` does not produce a
    /// closed surface by this construction.
    pub fn new(n: u32) -> Self {
        assert!(n % 2 == 1, "the quotient map is only defined for odd n");
        QuotientMap { n }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Applies the map to a torus point over any field.
    ///
    /// # Panics
    ///
    /// Panics (division by zero) when `x` is zero.
    pub fn apply<F: Field>(&self, field: &F, p: &[F::Elem; 4]) -> [F::Elem; 4] {
        let [w, x, y, z] = p;
        [
            field.pow(w, self.n),
            field.div(w, x),
            field.mul(w, y),
            field.mul(w, z),
        ]
    }

    /// The ideal of the closure of the graph of `p_n` restricted to the
    /// torus part of the plane, inside the graph ring.
    ///
    /// The raw graph relations only see `t2*x = w`; saturating by the product
    /// of the source coordinates removes every component that meets a
    /// coordinate hyperplane, leaving exactly the torus closure.
    pub fn graph_ideal(
        &self,
        strategy: EliminationStrategy,
        budget: &mut Budget,
    ) -> Result<Ideal<Rationals>, GroebnerError> {
        let r = graph_ring();
        let (w, x, y, z) = (r.var(0), r.var(1), r.var(2), r.var(3));
        let (t1, t2, t3, t4) = (r.var(4), r.var(5), r.var(6), r.var(7));
        let gens = alloc::vec![
            r.sub(&r.add(&w, &y), &r.one()),
            r.sub(&r.add(&x, &z), &r.one()),
            r.sub(&t1, &r.pow(&w, self.n)),
            r.sub(&r.mul(&t2, &x), &w),
            r.sub(&t3, &r.mul(&w, &y)),
            r.sub(&t4, &r.mul(&w, &z)),
        ];
        let coords = r.mul(&r.mul(&w, &x), &r.mul(&y, &z));
        Ideal::new(r, gens).saturate(&coords, strategy, budget)
    }

    /// The kernel of the coordinate map onto the image: the ideal of
    /// `U_n` in the target ring, obtained by eliminating the source block.
    pub fn kernel(
        &self,
        strategy: EliminationStrategy,
        budget: &mut Budget,
    ) -> Result<Ideal<Rationals>, GroebnerError> {
        self.graph_ideal(strategy, budget)?.eliminate(4, strategy, budget)
    }
}

/// Parses an equation file: one polynomial per line, `#` comments allowed.
pub fn parse_equations(
    ring: &PolynomialRing<Rationals>,
    text: &str,
) -> Result<Vec<MultiPoly<Rationals>>, ParsePolyError> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| parse_poly(ring, l))
        .collect()
}

/// Runs the `n = 5` verification against a precomputed kernel ideal.
///
/// The checks are data, not assertions: a false claim produces a failing
/// `Check`, while only resource exhaustion is an error.
pub fn verify_example5_against(
    kernel: &mut Ideal<Rationals>,
    fixture: &str,
    strategy: EliminationStrategy,
    budget: &mut Budget,
) -> Result<Vec<Check>, GroebnerError> {
    let t = target_ring();
    assert_eq!(kernel.ring(), &t, "kernel must live in the target ring");
    let mut checks = Vec::new();

    let digest = sha256_hex(fixture);
    checks.push(Check::new(
        "fixture.sha256_pinned",
        digest == U5_FIXTURE_SHA256,
        format!("sha256 {digest}"),
    ));

    let eqs = match parse_equations(&t, fixture) {
        Ok(eqs) => {
            checks.push(Check::new(
                "fixture.parse",
                eqs.len() == 4,
                format!("{} equations", eqs.len()),
            ));
            if eqs.len() != 4 {
                return Ok(checks);
            }
            eqs
        }
        Err(e) => {
            checks.push(Check::new("fixture.parse", false, format!("{e}")));
            return Ok(checks);
        }
    };

    let map = QuotientMap::new(5);
    let points = sample_plane_points(175, 12);
    let images: Vec<[Rat; 4]> = points.iter().map(|p| map.apply(&Rationals, p)).collect();
    let vanish = images.iter().all(|u| {
        eqs.iter().all(|eq| Rationals.is_zero(&t.evaluate(eq, u)))
    });
    checks.push(Check::new(
        "fixture.vanishes_on_image_samples",
        vanish,
        format!("{} sampled image points", images.len()),
    ));

    let mut contained = 0usize;
    for eq in &eqs {
        if kernel.contains(eq, budget)? {
            contained += 1;
        }
    }
    checks.push(Check::new(
        "kernel.contains_fixture",
        contained == eqs.len(),
        format!("{contained} of {} equations lie in the kernel", eqs.len()),
    ));

    let coords = t.mul(&t.mul(&t.var(0), &t.var(1)), &t.mul(&t.var(2), &t.var(3)));
    let mut fixture_ideal = Ideal::new(t.clone(), eqs);
    let mut saturated = fixture_ideal.saturate(&coords, strategy, budget)?;
    let agree = kernel.equals(&mut saturated, budget)?;
    checks.push(Check::new(
        "kernel.equals_saturated_fixture",
        agree,
        "kernel matches the fixture ideal saturated by t1*t2*t3*t4",
    ));

    match kernel.krull_dimension(budget) {
        Ok(d) => checks.push(Check::new("kernel.dimension", d == 2, format!("dimension {d}"))),
        Err(GroebnerError::UnitIdeal) => {
            checks.push(Check::new("kernel.dimension", false, "kernel is the unit ideal"))
        }
        Err(e) => return Err(e),
    }

    let basis_vanish = kernel
        .generators()
        .iter()
        .all(|g| images.iter().all(|u| Rationals.is_zero(&t.evaluate(g, u))));
    checks.push(Check::new(
        "kernel.vanishes_on_image_samples",
        basis_vanish,
        format!("{} generators on {} points", kernel.generators().len(), images.len()),
    ));

    Ok(checks)
}

/// Computes the `n = 5` kernel and verifies it against an equation file.
pub fn verify_example5(
    fixture: &str,
    strategy: EliminationStrategy,
    budget: &mut Budget,
) -> Result<Vec<Check>, GroebnerError> {
    let mut kernel = QuotientMap::new(5).kernel(strategy, budget)?;
    verify_example5_against(&mut kernel, fixture, strategy, budget)
}
