//! Command-line front end: JSON in, JSON or CSV reports out.
//!
//! Exit status is 0 on success, 1 when a verification fails and 2 on bad input.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Error;
use crate::graded_algebras as alg;
use crate::harness::{run_harness, Harness, HarnessConfig};
use crate::limits;
use crate::num::{parse_rational, to_f64, Rat};
use crate::polyhedra::{self as poly, Polynomial, RationalCone, RationalPolytope};
use crate::random::{DEFAULT_BOX, DEFAULT_VERTICES};
use crate::semigroup as sg;
use crate::valuations::{product_subspace, reduce_subspace, LaurentPoly, LaurentSubspace, TermOrder};

#[derive(Parser, Debug)]
#[command(name = "okounkov", version, about = "Exact semigroups, Newton-Okounkov bodies, valuations and mixed volumes")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Report format; CSV is available for Hilbert tables and algebra bodies.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Add decimal approximations of every exact rational under "approx".
    #[arg(long, global = true)]
    pub float: bool,
    /// Ambient dimension cap (overrides the environment variable).
    #[arg(long, global = true)]
    pub dim_cap: Option<usize>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Semigroups of lattice points.
    #[command(subcommand)]
    Semigroup(SemigroupCmd),
    /// Rational polytopes.
    #[command(subcommand)]
    Polytope(PolytopeCmd),
    /// Gröbner valuations.
    #[command(subcommand)]
    Valuation(ValuationCmd),
    /// Graded algebras A_L.
    #[command(subcommand)]
    Algebra(AlgebraCmd),
    /// Seeded randomized inequality harnesses.
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Args, Debug)]
pub struct InArg {
    /// Input JSON file, or `-` for stdin.
    #[arg(long = "in")]
    pub input: PathBuf,
}

#[derive(Subcommand, Debug)]
pub enum SemigroupCmd {
    Analyze(InArg),
    Levels {
        #[command(flatten)]
        input: InArg,
        #[arg(long)]
        k: usize,
    },
    Regularize {
        #[command(flatten)]
        input: InArg,
        #[arg(long)]
        k: usize,
    },
    Conductor {
        #[command(flatten)]
        input: InArg,
        /// Check the shift property up to this grade.
        #[arg(long)]
        verify_k: Option<usize>,
    },
    ApproxCheck {
        #[command(flatten)]
        input: InArg,
        /// Inner cone JSON; defaults to Con(S) shrunk toward its centre.
        #[arg(long)]
        inner: Option<PathBuf>,
        /// Squared threshold N^2 as "p/q"; defaults to one derived from the conductor.
        #[arg(long)]
        n2: Option<String>,
        /// Enumeration radius K; defaults to the least integer with K^2 >= N^2, plus 2.
        #[arg(long)]
        k: Option<i64>,
    },
    Body(InArg),
    Hilbert {
        #[command(flatten)]
        input: InArg,
        #[arg(long)]
        k: usize,
    },
    WeightedSum {
        #[command(flatten)]
        input: InArg,
        /// Polynomial JSON.
        #[arg(long)]
        poly: PathBuf,
        #[arg(long)]
        k: usize,
    },
    Fujita {
        #[command(flatten)]
        input: InArg,
        #[arg(long)]
        p: i64,
    },
    LevelwiseSum {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum PolytopeCmd {
    Hull(InArg),
    Volume(InArg),
    Minkowski { a: PathBuf, b: PathBuf },
    MixedVolume { bodies: Vec<PathBuf> },
    Integrate {
        #[command(flatten)]
        input: InArg,
        #[arg(long)]
        poly: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
pub enum ValuationCmd {
    Value {
        #[arg(long)]
        poly: PathBuf,
        #[arg(long)]
        order: PathBuf,
        /// Report `v_t` of `f t^degree` as well.
        #[arg(long)]
        degree: Option<u64>,
    },
    SubspaceValues {
        #[command(flatten)]
        input: InArg,
        #[arg(long)]
        order: PathBuf,
    },
    Product {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        order: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
pub enum AlgebraCmd {
    Hilbert(InArg),
    Semigroup(InArg),
    Body(InArg),
    Kushnirenko {
        /// JSON list of exponent vectors.
        #[arg(long)]
        exponents: PathBuf,
        #[arg(long, default_value_t = 5)]
        k: usize,
        /// JSON list of exponent sets for a Bernstein number.
        #[arg(long)]
        bernstein: Option<PathBuf>,
    },
    Product { a: PathBuf, b: PathBuf },
    BrunnMinkowski {
        a: PathBuf,
        b: PathBuf,
        /// Largest truncation tried when the inequality fails.
        #[arg(long, default_value_t = 32)]
        max_k: usize,
    },
    Fujita {
        #[command(flatten)]
        input: InArg,
        /// Degree p; all p in 1..=K when omitted.
        #[arg(long)]
        p: Option<usize>,
    },
}

#[derive(Args, Debug)]
pub struct HarnessArgs {
    #[arg(long, default_value_t = 2)]
    pub dim: usize,
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = DEFAULT_VERTICES)]
    pub vertices: usize,
    #[arg(long = "box", default_value_t = DEFAULT_BOX)]
    pub bound: i64,
    /// Truncation for the superadditivity harness.
    #[arg(long, default_value_t = 4)]
    pub k: usize,
}

#[derive(Subcommand, Debug)]
pub enum VerifyCmd {
    Af(HarnessArgs),
    Bm(HarnessArgs),
    Hodge2d(HarnessArgs),
    Isoperimetric(HarnessArgs),
    Superadditivity(HarnessArgs),
}

/// A finished command: the report and whether its verification passed.
pub struct Outcome {
    pub report: Value,
    pub csv: Option<String>,
    pub passed: bool,
}

#[derive(Debug)]
pub enum Failure {
    Input(String),
    Library(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Input(s) => write!(f, "input error: {s}"),
            Failure::Library(e) => write!(f, "{e}"),
        }
    }
}

type CmdResult = Result<Outcome, Failure>;

fn read_text(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load<T: DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = read_text(path)?;
    serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("reports serialize")
}

fn ok<T: Serialize>(t: &T) -> CmdResult {
    Ok(Outcome { report: to_value(t), csv: None, passed: true })
}

fn checked<T: Serialize>(t: &T, passed: bool) -> CmdResult {
    Ok(Outcome { report: to_value(t), csv: None, passed })
}

fn with_csv<T: Serialize>(t: &T, csv: String) -> CmdResult {
    Ok(Outcome { report: to_value(t), csv: Some(csv), passed: true })
}

fn load_cone(path: &Path) -> Result<RationalCone, Failure> {
    let c: RationalCone = load(path)?;
    if let Some(g) = c.ray_generators().iter().find(|g| g.len() != c.ambient_dim()) {
        return Err(Failure::Input(format!("cone generator of length {} in dimension {}", g.len(), c.ambient_dim())));
    }
    Ok(c)
}

fn least_radius(n2: &Rat) -> i64 {
    let mut k: i64 = 0;
    while Rat::from_integer((k * k).into()) < *n2 {
        k += 1;
    }
    k
}

fn semigroup_cmd(cmd: &SemigroupCmd) -> CmdResult {
    match cmd {
        SemigroupCmd::Analyze(i) => ok(&sg::analyze(&load(&i.input)?)?),
        SemigroupCmd::Levels { input, k } => ok(&json!({ "levels": sg::levels(&load(&input.input)?, *k)? })),
        SemigroupCmd::Regularize { input, k } => {
            let s: sg::SemigroupSpec = load(&input.input)?;
            let (grading, reg) = sg::regularization_sets(&s, *k)?;
            ok(&json!({ "grading": grading, "levels": reg, "gaps": sg::gaps(&s, *k)? }))
        }
        SemigroupCmd::Conductor { input, verify_k } => {
            let s: sg::SemigroupSpec = load(&input.input)?;
            let report = sg::conductor(&s)?;
            match verify_k {
                None => ok(&report),
                Some(k) => {
                    let violations = sg::conductor_violations(&s, &report.g0, *k)?;
                    let passed = violations.is_empty();
                    checked(&json!({ "conductor": report, "verified_to": k, "violations": violations }), passed)
                }
            }
        }
        SemigroupCmd::ApproxCheck { input, inner, n2, k } => {
            let s: sg::SemigroupSpec = load(&input.input)?;
            let inner = match inner {
                Some(p) => load_cone(p)?,
                None => sg::shrunk_cone(&s)?,
            };
            let n2: Rat = match n2 {
                Some(t) => parse_rational(t)?,
                None => sg::approximation_threshold(&s, &inner)?,
            };
            let k = match k {
                Some(k) => *k,
                None => least_radius(&n2) + 2,
            };
            let r = sg::verify_approximation(&s, &inner, &n2, k)?;
            let passed = r.violations.is_empty();
            checked(&json!({ "inner_cone": inner, "report": r }), passed)
        }
        SemigroupCmd::Body(i) => ok(&sg::newton_okounkov_body(&load(&i.input)?)?),
        SemigroupCmd::Hilbert { input, k } => {
            let h = sg::hilbert(&load(&input.input)?, *k)?;
            let csv = h.to_csv();
            with_csv(&h, csv)
        }
        SemigroupCmd::WeightedSum { input, poly, k } => {
            let f: Polynomial = load(poly)?;
            ok(&sg::weighted_sum_report(&load(&input.input)?, &f, *k)?)
        }
        SemigroupCmd::Fujita { input, p } => {
            let (sub, report) = sg::level_subsemigroup(&load(&input.input)?, *p)?;
            ok(&json!({ "subsemigroup": sub, "report": report }))
        }
        SemigroupCmd::LevelwiseSum { a, b, k } => ok(&sg::levelwise_sum(&load(a)?, &load(b)?, *k)?),
    }
}

fn polytope_cmd(cmd: &PolytopeCmd) -> CmdResult {
    match cmd {
        PolytopeCmd::Hull(i) => {
            let p: RationalPolytope = load(&i.input)?;
            ok(&json!({ "polytope": p, "dim": p.dim(), "hrep": p.hrep() }))
        }
        PolytopeCmd::Volume(i) => {
            let p: RationalPolytope = load(&i.input)?;
            ok(&json!({
                "dim": p.dim(),
                "volume": crate::num::format_rational(&p.volume()),
                "integral_volume": crate::num::format_rational(&p.integral_volume()),
            }))
        }
        PolytopeCmd::Minkowski { a, b } => ok(&poly::minkowski_sum(&load(a)?, &load(b)?)?),
        PolytopeCmd::MixedVolume { bodies } => {
            let bodies = bodies.iter().map(|p| load(p)).collect::<Result<Vec<RationalPolytope>, _>>()?;
            ok(&poly::mixed_volume(&bodies)?)
        }
        PolytopeCmd::Integrate { input, poly: f } => {
            let p: RationalPolytope = load(&input.input)?;
            let f: Polynomial = load(f)?;
            if !f.is_zero() && f.top_component() != f {
                return Err(Failure::Input("the polynomial must be homogeneous".into()));
            }
            ok(&json!({ "integral": crate::num::format_rational(&poly::integrate_homogeneous(&p, &f)?) }))
        }
    }
}

fn valuation_cmd(cmd: &ValuationCmd) -> CmdResult {
    match cmd {
        ValuationCmd::Value { poly, order, degree } => {
            let f: LaurentPoly = load(poly)?;
            let o: TermOrder = load(order)?;
            let v = f.val(&o)?;
            match degree {
                Some(k) => ok(&json!({ "value": v, "vt": f.vt_value(*k, &o)? })),
                None => ok(&json!({ "value": v })),
            }
        }
        ValuationCmd::SubspaceValues { input, order } => {
            let l: LaurentSubspace = load(&input.input)?;
            ok(&reduce_subspace(&l, &load(order)?)?)
        }
        ValuationCmd::Product { a, b, order } => {
            let o: TermOrder = load(order)?;
            let (a, b): (LaurentSubspace, LaurentSubspace) = (load(a)?, load(b)?);
            let (ra, rb) = (reduce_subspace(&a, &o)?, reduce_subspace(&b, &o)?);
            let p = product_subspace(&a, &b, &o)?;
            let rp = reduce_subspace(&p, &o)?;
            let mut sum: Vec<Vec<i64>> = ra
                .values
                .iter()
                .flat_map(|x| rb.values.iter().map(move |y| x.iter().zip(y).map(|(u, v)| u + v).collect()))
                .collect();
            sum.sort_by(|x, y| o.compare(x, y));
            sum.dedup();
            let contained = sum.iter().all(|x| rp.values.contains(x));
            checked(&json!({ "product": p, "values": rp.values, "sum_of_values": sum, "contained": contained }), contained)
        }
    }
}

fn algebra_cmd(cmd: &AlgebraCmd) -> CmdResult {
    match cmd {
        AlgebraCmd::Hilbert(i) => {
            let h = alg::hilbert_function(&load(&i.input)?)?;
            let csv = h.to_csv();
            with_csv(&h, csv)
        }
        AlgebraCmd::Semigroup(i) => ok(&alg::algebra_semigroup(&load(&i.input)?)?),
        AlgebraCmd::Body(i) => {
            let b = alg::body_approximation(&load(&i.input)?)?;
            let csv = b.to_csv();
            with_csv(&b, csv)
        }
        AlgebraCmd::Kushnirenko { exponents, k, bernstein } => {
            let i: Vec<Vec<i64>> = load(exponents)?;
            let r = alg::kushnirenko_report(&i, *k)?;
            let passed = r.exact;
            let b = match bernstein {
                Some(p) => Some(alg::bernstein_report(&load::<Vec<Vec<Vec<i64>>>>(p)?)?),
                None => None,
            };
            checked(&json!({ "kushnirenko": r, "bernstein": b }), passed)
        }
        AlgebraCmd::Product { a, b } => {
            let (ab, r) = alg::componentwise_product(&load(a)?, &load(b)?)?;
            let passed = r.holds;
            checked(&json!({ "product": ab, "superadditivity": r }), passed)
        }
        AlgebraCmd::BrunnMinkowski { a, b, max_k } => {
            let r = alg::brunn_minkowski_report(&load(a)?, &load(b)?, *max_k)?;
            let passed = r.holds;
            checked(&r, passed)
        }
        AlgebraCmd::Fujita { input, p } => {
            let a: alg::AlgebraSpec = load(&input.input)?;
            match p {
                Some(p) => ok(&alg::fujita_report(&a, *p)?),
                None => ok(&alg::fujita_scan(&a)?),
            }
        }
    }
}

fn verify_cmd(cmd: &VerifyCmd) -> CmdResult {
    let (h, args) = match cmd {
        VerifyCmd::Af(a) => (Harness::Af, a),
        VerifyCmd::Bm(a) => (Harness::Bm, a),
        VerifyCmd::Hodge2d(a) => (Harness::Hodge2d, a),
        VerifyCmd::Isoperimetric(a) => (Harness::Isoperimetric, a),
        VerifyCmd::Superadditivity(a) => (Harness::Superadditivity, a),
    };
    let mut cfg = HarnessConfig::new(h, args.dim, args.trials, args.seed);
    cfg.vertices = args.vertices;
    cfg.bound = args.bound;
    cfg.truncation = args.k;
    let r = run_harness(&cfg)?;
    let passed = r.passed;
    checked(&r, passed)
}

pub fn execute(cmd: &Command) -> CmdResult {
    match cmd {
        Command::Semigroup(c) => semigroup_cmd(c),
        Command::Polytope(c) => polytope_cmd(c),
        Command::Valuation(c) => valuation_cmd(c),
        Command::Algebra(c) => algebra_cmd(c),
        Command::Verify(c) => verify_cmd(c),
    }
}

fn approx(v: &Value) -> Value {
    match v {
        Value::String(s) if s.bytes().any(|b| b.is_ascii_digit()) => match parse_rational(s) {
            Ok(r) => json!(to_f64(&r)),
            Err(_) => v.clone(),
        },
        Value::Array(a) => Value::Array(a.iter().map(approx).collect()),
        Value::Object(o) => Value::Object(o.iter().map(|(k, x)| (k.clone(), approx(x))).collect()),
        _ => v.clone(),
    }
}

/// Renders an outcome as the bytes written to the output.
pub fn render(outcome: &Outcome, global: &GlobalOpts) -> Result<String, Failure> {
    if global.format == Format::Csv {
        return outcome.csv.clone().ok_or_else(|| Failure::Input("this command has no CSV form".into()));
    }
    let mut report = outcome.report.clone();
    if global.float {
        let a = approx(&report);
        match &mut report {
            Value::Object(o) => {
                o.insert("approx".into(), a);
            }
            _ => report = json!({ "report": report, "approx": a }),
        }
    }
    Ok(serde_json::to_string_pretty(&report).expect("json values serialize") + "\n")
}

fn apply_dim_cap(global: &GlobalOpts) -> Result<(), Failure> {
    let cap = match global.dim_cap {
        Some(c) => Some(c),
        None => match std::env::var(limits::DIM_CAP_ENV) {
            Ok(s) => Some(s.trim().parse().map_err(|_| Failure::Input(format!("{}={s:?} is not a number", limits::DIM_CAP_ENV)))?),
            Err(_) => None,
        },
    };
    if let Some(c) = cap {
        limits::set_dim_cap(c);
    }
    Ok(())
}

/// Parses arguments, runs the command and writes the report; returns the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let result = apply_dim_cap(&cli.global).and_then(|_| execute(&cli.command)).and_then(|o| {
        let text = render(&o, &cli.global)?;
        Ok((o.passed, text))
    });
    match result {
        Ok((passed, text)) => {
            let written = match &cli.global.out {
                Some(p) => std::fs::write(p, &text).map_err(|e| format!("{}: {e}", p.display())),
                None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return 2;
            }
            if passed {
                0
            } else {
                eprintln!("verification failed; see the report for the witness");
                1
            }
        }
        Err(f) => {
            eprintln!("error: {f}");
            2
        }
    }
}
