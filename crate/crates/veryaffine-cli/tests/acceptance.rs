//! Acceptance suite: one test per shipping criterion, each ending in a
//! single pass or fail line so the run reads as a checklist.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use veryaffine::euler::{all_certificates, closed_form_point, euler_characteristic};
use veryaffine::groebner::is_groebner_basis;
use veryaffine::parse::parse_poly;
use veryaffine::surface::{self, parse_equations, target_ring, vendored_u5_equations};
use veryaffine::univariate::{cyclotomic_polynomial, UnivariatePoly};
use veryaffine::{
    Budget, CyclotomicField, EliminationStrategy, Field, Ideal, Monomial, MonomialOrder,
    PolynomialRing, QuotientMap, Rationals,
};

fn conclude(name: &str, ok: bool) {
    println!("acceptance {name}: {}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "acceptance criterion {name} failed");
}

fn kernel_of(n: u32, strategy: EliminationStrategy) -> Ideal<Rationals> {
    let mut budget = Budget::default();
    QuotientMap::new(n).kernel(strategy, &mut budget).expect("kernel fits the default budget")
}

#[test]
fn implicit_equations_match_the_vendored_system() {
    let start = Instant::now();
    let mut budget = Budget::default();

    let mut kernel = kernel_of(5, EliminationStrategy::Block);
    let t = target_ring();
    let eqs = parse_equations(&t, vendored_u5_equations()).expect("vendored file parses");
    let four = eqs.len() == 4;
    let coords = t.mul(&t.mul(&t.var(0), &t.var(1)), &t.mul(&t.var(2), &t.var(3)));
    let mut saturated = Ideal::new(t.clone(), eqs)
        .saturate(&coords, EliminationStrategy::Block, &mut budget)
        .expect("saturation fits the budget");
    let equal = kernel.equals(&mut saturated, &mut budget).expect("comparison fits the budget");

    conclude(
        "implicit_equations_n5",
        four && equal && start.elapsed() < Duration::from_secs(300),
    );
}

#[test]
fn euler_characteristic_table() {
    let expected = [(1u32, 1i64), (3, 0), (5, -1), (7, -2), (9, -3), (11, -4)];
    let mut ok = true;
    for (n, chi) in expected {
        let start = Instant::now();
        let report = euler_characteristic(n);
        let good = report.chi == chi
            && report.checks.iter().all(|c| c.passed())
            && start.elapsed() < Duration::from_secs(30);
        if !good {
            eprintln!("n = {n}: chi {} expected {chi}", report.chi);
            ok = false;
        }
    }
    conclude("euler_characteristic_table", ok);
}

#[test]
fn singular_point_counts_and_pairing() {
    let mut ok = true;
    for n in [1u32, 3, 5, 7, 9, 11] {
        let report = euler_characteristic(n);
        let half = (n - 1) / 2;
        let pairs: Vec<(u32, u32)> = (1..=half).map(|i| (i, n - i)).collect();
        let good = report.num_singular_points == half
            && report.num_intersections == n - 1
            && report.pairing == pairs;
        if !good {
            eprintln!("n = {n}: {} singular points, pairing {:?}", report.num_singular_points, report.pairing);
            ok = false;
        }
    }
    conclude("singular_points_and_pairing", ok);
}

#[test]
fn intersection_certificates_are_transverse() {
    let mut ok = true;
    for n in [3u32, 5, 7, 9, 11] {
        let field = CyclotomicField::new(n);
        let map = QuotientMap::new(n);
        let mut points = Vec::new();
        for (idx, result) in all_certificates(&field, &map).into_iter().enumerate() {
            let i = idx as u32 + 1;
            let Ok(cert) = result else {
                ok = false;
                continue;
            };
            let diff = field.sub(&field.zeta_pow(i64::from(i)), &field.zeta_pow(-i64::from(i)));
            let expected_det = field.mul(&diff, &diff);
            if cert.i != i
                || cert.point != closed_form_point(&field, i)
                || field.is_zero(&cert.det)
                || cert.det != expected_det
            {
                ok = false;
            }
            points.push(cert.point);
        }
        for a in 0..points.len() {
            for b in a + 1..points.len() {
                if points[a] == points[b] {
                    ok = false;
                }
            }
        }
    }
    conclude("intersection_certificates", ok);
}

#[test]
fn sampled_images_satisfy_every_generator() {
    let mut ok = true;
    for n in [3u32, 5] {
        let map = QuotientMap::new(n);
        let kernel = kernel_of(n, EliminationStrategy::Block);
        let ring = kernel.ring();
        for p in surface::sample_plane_points(2026, 20) {
            let image = map.apply(&Rationals, &p);
            let vanish =
                kernel.generators().iter().all(|g| Rationals.is_zero(&ring.evaluate(g, &image)));
            if !vanish {
                ok = false;
            }
        }
    }
    conclude("sampled_images", ok);
}

#[test]
fn kernel_dimension_is_two() {
    let mut budget = Budget::default();
    let mut kernel = kernel_of(5, EliminationStrategy::Block);
    let dim = kernel.krull_dimension(&mut budget).expect("dimension fits the budget");
    conclude("kernel_dimension", dim == 2);
}

#[test]
fn algebra_property_suites() {
    let mut failures: Vec<&str> = Vec::new();
    let mut budget = Budget::unlimited();

    // Returned bases certify as Groebner bases after the fact.
    {
        let mut good = true;
        for strategy in [EliminationStrategy::Block, EliminationStrategy::Lex] {
            let kernel = kernel_of(3, strategy);
            let ring = kernel.ring().clone();
            let (ord, basis) = kernel.cached_basis().expect("fresh kernel carries its basis");
            if !is_groebner_basis(&ring, basis, ord, &mut budget).unwrap() {
                good = false;
            }
        }
        if !good {
            failures.push("basis_certificates");
        }
    }

    // A textbook lex elimination with a hand checked frozen answer.
    {
        let r = PolynomialRing::new(Rationals, &["x", "y"]);
        let p = |s: &str| parse_poly(&r, s).unwrap();
        let mut ideal = Ideal::new(r.clone(), vec![p("x^2 - y"), p("x*y - 1")]);
        let basis = ideal.groebner_basis(MonomialOrder::Lex, &mut budget).unwrap();
        let shown: Vec<String> = basis.iter().map(|g| r.format_poly(g)).collect();
        if shown != ["y^3 - 1", "-y^2 + x"] {
            failures.push("frozen_lex_basis");
        }
    }

    // The cyclotomic factors of x^n - 1 multiply back together.
    {
        let mut good = true;
        for n in 1..=30u32 {
            let mut product = UnivariatePoly::one();
            for d in 1..=n {
                if n % d == 0 {
                    product = product.mul(&cyclotomic_polynomial(d));
                }
            }
            let expected = UnivariatePoly::x_pow(n as usize).sub(&UnivariatePoly::one());
            if product != expected {
                good = false;
            }
        }
        if !good {
            failures.push("cyclotomic_products");
        }
    }

    // Random nonzero cyclotomic numbers invert exactly.
    {
        let mut rng = ChaCha8Rng::seed_from_u64(2026);
        let mut good = true;
        let mut tried = 0usize;
        while tried < 100 {
            let n = [3u32, 5, 7, 9, 11, 15][rng.gen_range(0..6)];
            let field = CyclotomicField::new(n);
            let coeffs: Vec<_> =
                (0..field.degree()).map(|_| Rationals.from_int(rng.gen_range(-5..=5))).collect();
            let a = field.from_coeffs(coeffs);
            if field.is_zero(&a) {
                continue;
            }
            tried += 1;
            if !field.is_one(&field.mul(&a, &field.inv(&a))) {
                good = false;
            }
        }
        if !good {
            failures.push("random_inverses");
        }
    }

    // Normal forms are idempotent and membership ignores the order.
    {
        let r = PolynomialRing::new(Rationals, &["x", "y", "z"]);
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let random_poly = |rng: &mut ChaCha8Rng| {
            let terms = (0..rng.gen_range(1..4))
                .map(|_| {
                    let exps: Vec<u16> = (0..3).map(|_| rng.gen_range(0..3u16)).collect();
                    (Monomial::new(&exps), Rationals.from_int(rng.gen_range(-3..=3)))
                })
                .collect();
            r.from_terms(terms)
        };
        let mut good = true;
        for _ in 0..10 {
            let gens: Vec<_> = (0..2).map(|_| random_poly(&mut rng)).collect();
            let probe = random_poly(&mut rng);
            let mut verdicts = Vec::new();
            for ord in [MonomialOrder::Lex, MonomialOrder::GrevLex, MonomialOrder::Block(2)] {
                let mut ideal = Ideal::new(r.clone(), gens.clone());
                let basis = ideal.groebner_basis(ord, &mut budget).unwrap().to_vec();
                let nf = r.normal_form(&probe, &basis, ord, &mut budget).unwrap();
                let again = r.normal_form(&nf, &basis, ord, &mut budget).unwrap();
                if nf != again {
                    good = false;
                }
                verdicts.push(ideal.contains(&probe, &mut budget).unwrap());
            }
            if verdicts.windows(2).any(|w| w[0] != w[1]) {
                good = false;
            }
        }
        if !good {
            failures.push("normal_form_and_membership");
        }
    }

    if !failures.is_empty() {
        eprintln!("failing suites: {failures:?}");
    }
    conclude("algebra_property_suites", failures.is_empty());
}

#[test]
fn repeated_structured_runs_are_byte_identical() {
    let run = || {
        std::process::Command::new(env!("CARGO_BIN_EXE_veryaffine"))
            .args(["verify", "--n", "5", "--output", "structured"])
            .output()
            .expect("binary runs")
    };
    let first = run();
    let second = run();
    let ok = first.status.code() == Some(0)
        && !first.stdout.is_empty()
        && first.stdout == second.stdout;
    conclude("deterministic_reports", ok);
}
