//! Command line front end for the surface toolkit.
//!
//! Each subcommand prints one deterministic report, as plain text or as
//! JSON, and the exit code follows the report: 0 when every check passes,
//! 1 when a check fails, 2 for usage mistakes, 3 when the step budget runs
//! out.  Mathematical failures never panic; they become failing checks.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use veryaffine::budget::DEFAULT_STEP_LIMIT;
use veryaffine::euler::{all_certificates, euler_characteristic, images_satisfy_kernel};
use veryaffine::groebner::{is_groebner_basis, is_reduced_basis};
use veryaffine::surface::{self, verify_example5_against};
use veryaffine::{
    Budget, Check, CyclotomicField, EliminationStrategy, EulerReport, Field, GroebnerError,
    Ideal, IntersectionCertificate, QuotientMap, Rationals,
};

#[derive(Parser)]
#[command(name = "veryaffine", version, about = "Exact construction and verification of a family of very affine surfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the implicit equations of the image surface.
    Construct(ConstructOpts),
    /// Verify the intersection count and the Euler characteristic.
    Euler(EulerOpts),
    /// Print the certified intersection points and their images.
    Intersections(EulerOpts),
    /// Run the full verification pipeline for one odd order.
    Verify(VerifyOpts),
    /// Check the vendored n = 5 equations against a fresh elimination.
    Example5(Example5Opts),
}

#[derive(Args)]
struct ConstructOpts {
    /// Order of the cyclic group acting on the plane; must be odd.
    #[arg(long, value_parser = parse_odd)]
    n: u32,
    #[command(flatten)]
    engine: EngineOpts,
    #[command(flatten)]
    out: OutputArg,
}

#[derive(Args)]
struct EulerOpts {
    /// Order of the cyclic group acting on the plane; must be odd.
    #[arg(long, value_parser = parse_odd)]
    n: u32,
    #[command(flatten)]
    out: OutputArg,
}

#[derive(Args)]
struct VerifyOpts {
    /// Order of the cyclic group acting on the plane; must be odd.
    #[arg(long, value_parser = parse_odd)]
    n: u32,
    /// Seed for the sampled plane points.
    #[arg(long, default_value_t = 7)]
    seed: u64,
    /// How many random plane points to push through the map.
    #[arg(long, default_value_t = 20, value_parser = parse_samples)]
    samples: usize,
    /// Equation file checked in place of the vendored one; n = 5 only.
    #[arg(long)]
    fixture: Option<PathBuf>,
    #[command(flatten)]
    engine: EngineOpts,
    #[command(flatten)]
    out: OutputArg,
}

#[derive(Args)]
struct Example5Opts {
    /// Equation file checked in place of the vendored one.
    #[arg(long)]
    fixture: Option<PathBuf>,
    #[command(flatten)]
    engine: EngineOpts,
    #[command(flatten)]
    out: OutputArg,
}

/// Knobs shared by every subcommand that eliminates variables.
#[derive(Args)]
struct EngineOpts {
    /// Elimination order used for the kernel computation.
    #[arg(long, value_enum, default_value_t = OrderOpt::Block)]
    order: OrderOpt,
    /// Step budget shared by all polynomial reductions in the run.
    #[arg(long, default_value_t = DEFAULT_STEP_LIMIT)]
    budget: u64,
}

#[derive(Args)]
struct OutputArg {
    /// Report format.
    #[arg(long, value_enum, default_value_t = OutputOpt::Text)]
    output: OutputOpt,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrderOpt {
    /// Grevlex on both blocks, source block dominant.
    Block,
    /// Pure lexicographic order.
    Lex,
}

impl OrderOpt {
    fn strategy(self) -> EliminationStrategy {
        match self {
            OrderOpt::Block => EliminationStrategy::Block,
            OrderOpt::Lex => EliminationStrategy::Lex,
        }
    }

    fn label(self) -> &'static str {
        match self {
            OrderOpt::Block => "block",
            OrderOpt::Lex => "lex",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputOpt {
    /// Human readable report.
    Text,
    /// Pretty printed JSON with the same content.
    Structured,
}

fn parse_odd(s: &str) -> Result<u32, String> {
    let n: u32 = s.parse().map_err(|_| String::from("expected a positive integer"))?;
    if n == 0 || n % 2 == 0 {
        return Err(format!("the group order must be odd, got {n}"));
    }
    Ok(n)
}

fn parse_samples(s: &str) -> Result<usize, String> {
    let count: usize = s.parse().map_err(|_| String::from("expected a positive integer"))?;
    if count == 0 {
        return Err(String::from("at least one sample point is required"));
    }
    Ok(count)
}

enum CliError {
    Usage(String),
    Fixture(PathBuf, std::io::Error),
    Groebner(GroebnerError),
}

impl From<GroebnerError> for CliError {
    fn from(e: GroebnerError) -> Self {
        CliError::Groebner(e)
    }
}

/// Run configuration echoed back at the top of every report.
#[derive(Serialize)]
struct Config {
    command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    order: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    samples: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    budget: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    fixture: Option<String>,
}

impl Config {
    fn new(command: &'static str) -> Self {
        Config {
            command,
            n: None,
            order: None,
            seed: None,
            samples: None,
            budget: None,
            fixture: None,
        }
    }
}

#[derive(Serialize)]
struct Construction {
    n: u32,
    order: &'static str,
    generators: Vec<String>,
    checks: Vec<Check>,
}

#[derive(Serialize)]
struct CertificateOut {
    i: u32,
    point: [String; 4],
    det: String,
    image: [String; 4],
}

impl CertificateOut {
    fn render(field: &CyclotomicField, c: &IntersectionCertificate) -> Self {
        CertificateOut {
            i: c.i,
            point: std::array::from_fn(|k| field.format_elem(&c.point[k])),
            det: field.format_elem(&c.det),
            image: std::array::from_fn(|k| field.format_elem(&c.image[k])),
        }
    }
}

#[derive(Serialize)]
struct Theorem {
    chi_plane: i64,
    num_intersections: u32,
    num_singular_points: u32,
    chi: i64,
    pairing: Vec<(u32, u32)>,
    checks: Vec<Check>,
}

#[derive(Serialize, Default)]
struct Summary {
    checks: usize,
    failed: usize,
    pass: bool,
}

/// Everything a subcommand reports; sections it did not touch stay out of
/// the JSON entirely.
#[derive(Serialize)]
struct Report {
    config: Config,
    #[serde(skip_serializing_if = "Option::is_none")]
    construction: Option<Construction>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificates: Option<Vec<CertificateOut>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lemma: Option<Vec<Check>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    corollary: Option<Vec<Check>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    theorem: Option<Theorem>,
    #[serde(skip_serializing_if = "Option::is_none")]
    example5: Option<Vec<Check>>,
    summary: Summary,
}

impl Report {
    fn new(config: Config) -> Self {
        Report {
            config,
            construction: None,
            certificates: None,
            lemma: None,
            corollary: None,
            theorem: None,
            example5: None,
            summary: Summary::default(),
        }
    }

    fn all_checks(&self) -> Vec<&Check> {
        let mut all = Vec::new();
        if let Some(c) = &self.construction {
            all.extend(&c.checks);
        }
        if let Some(list) = &self.lemma {
            all.extend(list);
        }
        if let Some(list) = &self.corollary {
            all.extend(list);
        }
        if let Some(t) = &self.theorem {
            all.extend(&t.checks);
        }
        if let Some(list) = &self.example5 {
            all.extend(list);
        }
        all
    }

    fn finish(mut self) -> Self {
        let checks = self.all_checks();
        let failed = checks.iter().filter(|c| !c.passed()).count();
        self.summary = Summary { checks: checks.len(), failed, pass: failed == 0 };
        self
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(pass) => {
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Fixture(path, err)) => {
            eprintln!("error: cannot read {}: {err}", path.display());
            ExitCode::from(2)
        }
        Err(CliError::Groebner(GroebnerError::Budget(e))) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
        Err(CliError::Groebner(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<bool, CliError> {
    let (report, output) = match command {
        Command::Construct(o) => cmd_construct(o)?,
        Command::Euler(o) => cmd_euler(o)?,
        Command::Intersections(o) => cmd_intersections(o)?,
        Command::Verify(o) => cmd_verify(o)?,
        Command::Example5(o) => cmd_example5(o)?,
    };
    match output {
        OutputOpt::Text => print!("{}", render_text(&report)),
        OutputOpt::Structured => {
            let json = serde_json::to_string_pretty(&report).expect("reports are plain data");
            println!("{json}");
        }
    }
    Ok(report.summary.pass)
}

struct BuiltConstruction {
    section: Construction,
    kernel: Ideal<Rationals>,
}

/// Computes the kernel ideal and the checks that certify it.
///
/// The sample check and the cross order comparison only run for `verify`;
/// plain `construct` keeps the cheap structural checks.
fn build_construction(
    n: u32,
    order: OrderOpt,
    budget: &mut Budget,
    samples: Option<(u64, usize)>,
    cross_check: bool,
) -> Result<BuiltConstruction, CliError> {
    let map = QuotientMap::new(n);
    let mut kernel = map.kernel(order.strategy(), budget)?;
    let ring = kernel.ring().clone();
    let generators: Vec<String> =
        kernel.generators().iter().map(|g| ring.format_poly(g)).collect();

    let mut checks = Vec::new();

    match kernel.krull_dimension(budget) {
        Ok(dim) => checks.push(Check::new(
            "construction.dimension",
            dim == 2,
            format!("krull dimension {dim}, surface needs 2"),
        )),
        Err(GroebnerError::UnitIdeal) => checks.push(Check::new(
            "construction.dimension",
            false,
            "the kernel is the unit ideal",
        )),
        Err(e @ GroebnerError::Budget(_)) => return Err(e.into()),
    }

    {
        let (ord, basis) = kernel.cached_basis().expect("fresh kernel carries its basis");
        let confirmed = is_groebner_basis(&ring, basis, ord, budget)
            .map_err(|e| GroebnerError::Budget(e))?;
        checks.push(Check::new(
            "construction.basis_is_groebner",
            confirmed,
            format!("all S polynomials of the {} element basis reduce to zero", basis.len()),
        ));
        checks.push(Check::new(
            "construction.basis_is_reduced",
            is_reduced_basis(&ring, basis, ord),
            "basis is monic and mutually irreducible",
        ));
    }

    if cross_check && n <= 11 {
        let other = match order {
            OrderOpt::Block => OrderOpt::Lex,
            OrderOpt::Lex => OrderOpt::Block,
        };
        let mut recomputed = map.kernel(other.strategy(), budget)?;
        let agree = kernel.equals(&mut recomputed, budget)?;
        checks.push(Check::new(
            "construction.orders_agree",
            agree,
            format!("{} and {} eliminations give the same ideal", order.label(), other.label()),
        ));
    }

    if let Some((seed, count)) = samples {
        let field = Rationals;
        let mut bad = 0usize;
        for p in surface::sample_plane_points(seed, count) {
            let image = map.apply(&field, &p);
            let vanish = kernel
                .generators()
                .iter()
                .all(|g| field.is_zero(&ring.evaluate(g, &image)));
            if !vanish {
                bad += 1;
            }
        }
        checks.push(Check::new(
            "construction.samples_vanish",
            bad == 0,
            format!("{} of {count} sampled image points satisfy every generator", count - bad),
        ));
    }

    let section = Construction { n, order: order.label(), generators, checks };
    Ok(BuiltConstruction { section, kernel })
}

/// Splits the flat check list into the lemma, corollary and theorem layers.
fn split_euler(r: EulerReport) -> (Vec<Check>, Vec<Check>, Theorem) {
    let mut lemma = Vec::new();
    let mut corollary = Vec::new();
    let mut theorem_checks = Vec::new();
    for c in r.checks {
        if c.name.starts_with("lemma.") {
            lemma.push(c);
        } else if c.name.starts_with("corollary.") {
            corollary.push(c);
        } else {
            theorem_checks.push(c);
        }
    }
    let theorem = Theorem {
        chi_plane: r.chi_plane,
        num_intersections: r.num_intersections,
        num_singular_points: r.num_singular_points,
        chi: r.chi,
        pairing: r.pairing,
        checks: theorem_checks,
    };
    (lemma, corollary, theorem)
}

fn cmd_construct(o: ConstructOpts) -> Result<(Report, OutputOpt), CliError> {
    let mut budget = Budget::limited(o.engine.budget);
    let built = build_construction(o.n, o.engine.order, &mut budget, None, false)?;

    let mut config = Config::new("construct");
    config.n = Some(o.n);
    config.order = Some(o.engine.order.label());
    config.budget = Some(o.engine.budget);

    let mut report = Report::new(config);
    report.construction = Some(built.section);
    Ok((report.finish(), o.out.output))
}

fn cmd_euler(o: EulerOpts) -> Result<(Report, OutputOpt), CliError> {
    let (lemma, corollary, theorem) = split_euler(euler_characteristic(o.n));

    let mut config = Config::new("euler");
    config.n = Some(o.n);

    let mut report = Report::new(config);
    report.lemma = Some(lemma);
    report.corollary = Some(corollary);
    report.theorem = Some(theorem);
    Ok((report.finish(), o.out.output))
}

fn cmd_intersections(o: EulerOpts) -> Result<(Report, OutputOpt), CliError> {
    let field = CyclotomicField::new(o.n);
    let map = QuotientMap::new(o.n);

    let mut certs = Vec::new();
    let mut singular = 0usize;
    for result in all_certificates(&field, &map) {
        match result {
            Ok(c) => certs.push(c),
            Err(_) => singular += 1,
        }
    }
    let lemma = vec![Check::new(
        "lemma.points_solve_linear_system",
        singular == 0 && certs.len() as u32 == o.n - 1,
        format!("{} unique solutions, {singular} singular systems", certs.len()),
    )];
    let rendered = certs.iter().map(|c| CertificateOut::render(&field, c)).collect();

    let mut config = Config::new("intersections");
    config.n = Some(o.n);

    let mut report = Report::new(config);
    report.certificates = Some(rendered);
    report.lemma = Some(lemma);
    Ok((report.finish(), o.out.output))
}

fn cmd_verify(o: VerifyOpts) -> Result<(Report, OutputOpt), CliError> {
    if o.fixture.is_some() && o.n != 5 {
        return Err(CliError::Usage(String::from(
            "--fixture only applies to the n = 5 equations; pass --n 5",
        )));
    }
    let mut budget = Budget::limited(o.engine.budget);
    let strategy = o.engine.order.strategy();

    let built = build_construction(o.n, o.engine.order, &mut budget, Some((o.seed, o.samples)), true)?;
    let BuiltConstruction { section, mut kernel } = built;

    let (lemma, mut corollary, theorem) = split_euler(euler_characteristic(o.n));

    let field = CyclotomicField::new(o.n);
    let map = QuotientMap::new(o.n);
    let certs: Vec<IntersectionCertificate> =
        all_certificates(&field, &map).into_iter().flatten().collect();
    corollary.push(images_satisfy_kernel(&field, &certs, &kernel));

    let example5 = if o.n == 5 {
        let text = read_fixture(o.fixture.as_deref())?;
        Some(verify_example5_against(&mut kernel, &text, strategy, &mut budget)?)
    } else {
        None
    };

    let mut config = Config::new("verify");
    config.n = Some(o.n);
    config.order = Some(o.engine.order.label());
    config.seed = Some(o.seed);
    config.samples = Some(o.samples);
    config.budget = Some(o.engine.budget);
    config.fixture = o.fixture.as_ref().map(|p| p.display().to_string());

    let mut report = Report::new(config);
    report.construction = Some(section);
    report.lemma = Some(lemma);
    report.corollary = Some(corollary);
    report.theorem = Some(theorem);
    report.example5 = example5;
    Ok((report.finish(), o.out.output))
}

fn cmd_example5(o: Example5Opts) -> Result<(Report, OutputOpt), CliError> {
    let mut budget = Budget::limited(o.engine.budget);
    let strategy = o.engine.order.strategy();
    let text = read_fixture(o.fixture.as_deref())?;

    let mut kernel = QuotientMap::new(5).kernel(strategy, &mut budget)?;
    let checks = verify_example5_against(&mut kernel, &text, strategy, &mut budget)?;

    let mut config = Config::new("example5");
    config.n = Some(5);
    config.order = Some(o.engine.order.label());
    config.budget = Some(o.engine.budget);
    config.fixture = o.fixture.as_ref().map(|p| p.display().to_string());

    let mut report = Report::new(config);
    report.example5 = Some(checks);
    Ok((report.finish(), o.out.output))
}

fn read_fixture(path: Option<&std::path::Path>) -> Result<String, CliError> {
    match path {
        Some(p) => std::fs::read_to_string(p)
            .map_err(|e| CliError::Fixture(p.to_path_buf(), e)),
        None => Ok(String::from(surface::vendored_u5_equations())),
    }
}

fn render_checks(out: &mut String, checks: &[Check]) {
    for c in checks {
        let mark = if c.passed() { "[pass]" } else { "[FAIL]" };
        let _ = writeln!(out, "  {mark} {}: {}", c.name, c.witness);
    }
}

fn render_text(report: &Report) -> String {
    let mut out = String::new();
    let c = &report.config;
    let _ = write!(out, "command: {}", c.command);
    if let Some(n) = c.n {
        let _ = write!(out, ", n = {n}");
    }
    if let Some(order) = c.order {
        let _ = write!(out, ", order = {order}");
    }
    if let Some(seed) = c.seed {
        let _ = write!(out, ", seed = {seed}");
    }
    if let Some(samples) = c.samples {
        let _ = write!(out, ", samples = {samples}");
    }
    if let Some(budget) = c.budget {
        let _ = write!(out, ", budget = {budget}");
    }
    if let Some(fixture) = &c.fixture {
        let _ = write!(out, ", fixture = {fixture}");
    }
    out.push('\n');

    if let Some(cons) = &report.construction {
        let _ = writeln!(out, "construction: {} generators cut out the image surface", cons.generators.len());
        for g in &cons.generators {
            let _ = writeln!(out, "  {g} = 0");
        }
        render_checks(&mut out, &cons.checks);
    }
    if let Some(certs) = &report.certificates {
        let _ = writeln!(out, "intersections: {} transverse points", certs.len());
        for cert in certs {
            let _ = writeln!(out, "  i = {}", cert.i);
            let _ = writeln!(out, "    point ({})", cert.point.join(", "));
            let _ = writeln!(out, "    det   {}", cert.det);
            let _ = writeln!(out, "    image ({})", cert.image.join(", "));
        }
    }
    if let Some(lemma) = &report.lemma {
        let _ = writeln!(out, "lemma: each nontrivial translate meets the plane once");
        render_checks(&mut out, lemma);
    }
    if let Some(corollary) = &report.corollary {
        let _ = writeln!(out, "corollary: singular points of the image");
        render_checks(&mut out, corollary);
    }
    if let Some(t) = &report.theorem {
        let _ = writeln!(
            out,
            "theorem: chi = {} (plane {}, minus {} intersections, plus {} singular points)",
            t.chi, t.chi_plane, t.num_intersections, t.num_singular_points
        );
        if !t.pairing.is_empty() {
            let pairs: Vec<String> =
                t.pairing.iter().map(|(a, b)| format!("({a}, {b})")).collect();
            let _ = writeln!(out, "  pairing: {}", pairs.join(" "));
        }
        render_checks(&mut out, &t.checks);
    }
    if let Some(example5) = &report.example5 {
        let _ = writeln!(out, "example5: vendored equations against a fresh elimination");
        render_checks(&mut out, example5);
    }
    let s = &report.summary;
    let verdict = if s.pass { "PASS" } else { "FAIL" };
    let _ = writeln!(out, "summary: {} checks, {} failed, {verdict}", s.checks, s.failed);
    out
}
