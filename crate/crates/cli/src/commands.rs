use std::time::Instant;

use clap::{Args, ValueEnum};
use num_complex::Complex64;

use hardedge::densities::{mellin_quadrature, DensitySpec, EdgeClass};
use hardedge::ensemble::{mc_inverse_moment, sample_spectrum, EnsembleConfig};
use hardedge::moments::{moment_finite_n, Beta4Form, Method, MomentQuery};
use hardedge::scalar::format_rational;
use hardedge::specfun::{bessel_zeta, ZetaMethod};
use hardedge::verify::{run_suite, Suite};
use hardedge::{Error, Mode, Result, Scalar};

use crate::record::{decimal, CheckRecord, Record};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NumberMode {
    Float,
    Rational,
}

impl NumberMode {
    fn exact(self) -> bool {
        self == NumberMode::Rational
    }

    fn tag(self) -> &'static str {
        match self {
            NumberMode::Float => "float",
            NumberMode::Rational => "rational",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Auto,
    Partition,
    Mellin,
    IntegerCase,
    Recurrence,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Auto => Method::Auto,
            MethodArg::Partition => Method::Partition,
            MethodArg::Mellin => Method::Mellin,
            MethodArg::IntegerCase => Method::IntegerCase,
            MethodArg::Recurrence => Method::Recurrence,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormArg {
    #[value(name = "3f2")]
    ThreeFTwo,
    #[value(name = "4f3")]
    FourFThree,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ZetaMethodArg {
    Recursion,
    ZeroSum,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Formulas,
    Quadrature,
    Duality,
    Lowtemp,
    Montecarlo,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Formulas => Suite::Formulas,
            SuiteArg::Quadrature => Suite::Quadrature,
            SuiteArg::Duality => Suite::Duality,
            SuiteArg::Lowtemp => Suite::Lowtemp,
            SuiteArg::Montecarlo => Suite::MonteCarlo,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    FiniteBeta2,
    HardEdge,
    MarchenkoPastur,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("order").required(true).args(["k", "s"]))]
pub struct MomentArgs {
    /// Integer order k of E Σ λ^{-k}
    #[arg(long)]
    pub k: Option<u32>,
    /// Real part of a complex order s (limiting Mellin transform)
    #[arg(long, allow_hyphen_values = true)]
    pub s: Option<f64>,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub s_imag: f64,
    #[arg(long)]
    pub beta: String,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: String,
    /// Finite ensemble size; omit for the hard-edge limit
    #[arg(long = "N", conflicts_with = "limit")]
    pub n: Option<u64>,
    /// The N → ∞ limit of N^{-k} M_N (the default when --N is absent)
    #[arg(long)]
    pub limit: bool,
    #[arg(long, value_enum, default_value_t = NumberMode::Float)]
    pub mode: NumberMode,
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    pub method: MethodArg,
    #[arg(long, value_enum, default_value_t = FormArg::ThreeFTwo)]
    pub beta4_form: FormArg,
}

#[derive(Debug, Args)]
pub struct ZetaArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub nu: String,
    /// Even order 2k
    #[arg(long)]
    pub order: u32,
    #[arg(long, value_enum, default_value_t = ZetaMethodArg::Recursion)]
    pub method: ZetaMethodArg,
    #[arg(long, value_enum, default_value_t = NumberMode::Float)]
    pub mode: NumberMode,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[arg(long = "N")]
    pub n: usize,
    #[arg(long)]
    pub beta: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: f64,
    #[arg(long)]
    pub k: u32,
    #[arg(long, default_value_t = 20_000)]
    pub samples: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Include the spectrum of sample 0
    #[arg(long)]
    pub dump_spectrum: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = SuiteArg::All)]
    pub suite: SuiteArg,
    #[arg(long, value_enum, default_value_t = NumberMode::Float)]
    pub mode: NumberMode,
}

#[derive(Debug, Args)]
pub struct DensityArgs {
    #[arg(long, value_enum)]
    pub kind: KindArg,
    #[arg(long = "N")]
    pub n: Option<u64>,
    /// β ∈ {1, 2, 4} for the hard edge
    #[arg(long, default_value_t = 2.0)]
    pub beta: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<f64>,
    /// Marchenko–Pastur ratio c ∈ (0, 1]
    #[arg(long)]
    pub c: Option<f64>,
}

#[derive(Debug, Args)]
pub struct PointArgs {
    #[command(flatten)]
    pub spec: DensityArgs,
    #[arg(long, allow_hyphen_values = true)]
    pub x: f64,
}

#[derive(Debug, Args)]
pub struct MellinArgs {
    #[command(flatten)]
    pub spec: DensityArgs,
    #[arg(long, allow_hyphen_values = true)]
    pub s: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub s_imag: f64,
}

fn missing(flag: &str, kind: &str) -> Error {
    Error::Domain(format!("--{flag} is required for --kind {kind}"))
}

impl DensityArgs {
    fn spec(&self) -> Result<DensitySpec> {
        Ok(match self.kind {
            KindArg::FiniteBeta2 => DensitySpec::FiniteBeta2 {
                n: self.n.ok_or_else(|| missing("N", "finite-beta2"))?,
                alpha: self.alpha.ok_or_else(|| missing("alpha", "finite-beta2"))?,
            },
            KindArg::HardEdge => DensitySpec::HardEdge {
                class: EdgeClass::from_beta(self.beta)?,
                alpha: self.alpha.ok_or_else(|| missing("alpha", "hard-edge"))?,
            },
            KindArg::MarchenkoPastur => DensitySpec::MarchenkoPastur {
                c: self.c.ok_or_else(|| missing("c", "marchenko-pastur"))?,
            },
        })
    }

    fn echo(&self, record: Record) -> Record {
        let kind = self.kind.to_possible_value().expect("kinds are named");
        let mut record = record.query("kind", kind.get_name());
        if let Some(n) = self.n {
            record = record.query("N", n);
        }
        if self.kind == KindArg::HardEdge {
            record = record.query("beta", decimal(self.beta));
        }
        if let Some(a) = self.alpha {
            record = record.query("alpha", decimal(a));
        }
        if let Some(c) = self.c {
            record = record.query("c", decimal(c));
        }
        record
    }
}

/// Renders a scalar: rationals as p/q, reals in 17 digits, complex as two fields.
fn put_scalar(record: &mut Record, key: &str, value: &Scalar) {
    match value {
        Scalar::Rational(r) => record.value(key, format_rational(r)),
        Scalar::Real(x) => record.value(key, decimal(*x)),
        Scalar::Complex(z) => {
            record.value(&format!("{key}_re"), decimal(z.re));
            record.value(&format!("{key}_im"), decimal(z.im));
        }
    }
}

fn elapsed(start: Instant) -> f64 {
    (start.elapsed().as_secs_f64() * 1e6).round() / 1e3
}

pub fn moment(args: &MomentArgs) -> Result<Record> {
    let start = Instant::now();
    let beta = Scalar::parse(&args.beta, args.mode.exact())?;
    let alpha = Scalar::parse(&args.alpha, args.mode.exact())?;
    let mut record = Record::new("moment")
        .query("beta", &args.beta)
        .query("alpha", &args.alpha)
        .query("mode", args.mode.tag());
    let mut query = match (args.k, args.s) {
        (Some(k), _) => {
            record = record.query("k", k);
            MomentQuery::integer(k, beta, alpha, args.n)
        }
        (None, Some(re)) => {
            if args.mode.exact() {
                return Err(Error::ModeMismatch("complex orders are evaluated in floating point only".into()));
            }
            record = record.query("s", decimal(re)).query("s_imag", decimal(args.s_imag));
            let mut q = MomentQuery::complex(Complex64::new(re, args.s_imag), beta, alpha);
            q.n_size = args.n;
            q
        }
        (None, None) => return Err(Error::Domain("one of --k or --s is required".into())),
    };
    record = match args.n {
        Some(n) => record.query("N", n),
        None => record.query("limit", true),
    };
    query.beta4_form = match args.beta4_form {
        FormArg::ThreeFTwo => Beta4Form::ThreeFTwo,
        FormArg::FourFThree => Beta4Form::FourFThree,
    };
    let evaluation = query.evaluate(args.method.into())?;
    put_scalar(&mut record, "value", &evaluation.value);
    record.method = Some(evaluation.method.tag().to_string());
    record.elapsed_ms = Some(elapsed(start));
    Ok(record)
}

pub fn zeta(args: &ZetaArgs) -> Result<Record> {
    let start = Instant::now();
    let nu = Scalar::parse(&args.nu, args.mode.exact())?;
    let mut record = Record::new("zeta")
        .query("nu", &args.nu)
        .query("order", args.order)
        .query("mode", args.mode.tag());
    let wants_zero_sum = matches!(args.method, ZetaMethodArg::ZeroSum | ZetaMethodArg::Both);
    if wants_zero_sum && args.mode.exact() {
        return Err(Error::ModeMismatch("the zero-sum method is floating point only".into()));
    }
    if matches!(args.method, ZetaMethodArg::Recursion | ZetaMethodArg::Both) {
        let v = bessel_zeta(&nu, args.order, ZetaMethod::Recursion)?;
        put_scalar(&mut record, "recursion", &v);
    }
    if wants_zero_sum {
        let v = bessel_zeta(&nu, args.order, ZetaMethod::ZeroSum)?;
        put_scalar(&mut record, "zero_sum", &v);
    }
    if args.method == ZetaMethodArg::Both {
        let a: f64 = record.values["recursion"].parse().unwrap_or(f64::NAN);
        let b: f64 = record.values["zero_sum"].parse().unwrap_or(f64::NAN);
        record.value("relative_gap", decimal((a - b).abs() / a.abs()));
    }
    record.method = Some(format!("{:?}", args.method).to_lowercase());
    record.elapsed_ms = Some(elapsed(start));
    Ok(record)
}

pub fn simulate(args: &SimulateArgs) -> Result<Record> {
    let start = Instant::now();
    let config = EnsembleConfig::new(args.n, args.beta, args.alpha, args.samples, args.seed)?;
    let estimate = mc_inverse_moment(&config, args.k)?;
    let exact = moment_finite_n::<f64>(args.k, &args.beta, &args.alpha, args.n as u64)?;
    let mut record = Record::new("simulate")
        .query("N", args.n)
        .query("beta", decimal(args.beta))
        .query("alpha", decimal(args.alpha))
        .query("k", args.k)
        .query("samples", args.samples);
    record.value("mean", decimal(estimate.mean));
    record.value("exact", decimal(exact));
    record.value("z", decimal(estimate.z_score(exact)));
    record.value("clamped", estimate.clamped.to_string());
    if args.dump_spectrum {
        let spectrum = sample_spectrum(&config, &mut config.stream(0))?;
        let joined: Vec<String> = spectrum.iter().map(|&x| decimal(x)).collect();
        record.value("spectrum", joined.join(" "));
    }
    record.method = Some("tridiagonal-monte-carlo".into());
    record.stderr = Some(decimal(estimate.stderr));
    record.seed = Some(args.seed);
    record.elapsed_ms = Some(elapsed(start));
    Ok(record)
}

pub fn verify(args: &VerifyArgs) -> Record {
    let start = Instant::now();
    let mode = if args.mode.exact() { Mode::Rational } else { Mode::Real };
    let report = run_suite(args.suite.into(), mode);
    let mut record = Record::new("verify")
        .query("suite", report.suite.name())
        .query("mode", args.mode.tag());
    record.checks = report.checks.iter().map(CheckRecord::from).collect();
    record.value("checks", report.checks.len().to_string());
    record.value("failures", report.failures().to_string());
    record.passed = Some(report.passed());
    record.elapsed_ms = Some(elapsed(start));
    record
}

pub fn density(args: &PointArgs) -> Result<Record> {
    let start = Instant::now();
    let spec = args.spec.spec()?;
    let mut record = args.spec.echo(Record::new("density")).query("x", decimal(args.x));
    record.value("density", decimal(spec.density(args.x)?));
    record.elapsed_ms = Some(elapsed(start));
    Ok(record)
}

pub fn mellin(args: &MellinArgs) -> Result<Record> {
    let start = Instant::now();
    let spec = args.spec.spec()?;
    let s = Complex64::new(args.s, args.s_imag);
    let mut record = args
        .spec
        .echo(Record::new("mellin"))
        .query("s", decimal(args.s))
        .query("s_imag", decimal(args.s_imag));
    let integral = mellin_quadrature(&spec, s)?;
    put_scalar(&mut record, "value", &Scalar::Complex(integral.value));
    record.method = Some("quadrature".into());
    record.error_bound = Some(decimal(integral.error));
    record.elapsed_ms = Some(elapsed(start));
    Ok(record)
}
