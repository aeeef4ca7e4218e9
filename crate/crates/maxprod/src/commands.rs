//! Command-line interface: argument definitions and subcommand drivers.
//!
//! Every driver returns a summary instead of printing, so the commands can be
//! exercised as library calls. [`run`] prints the summaries.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use maxprod_core::kernel::Sigmoidal;
use maxprod_core::{
    verify_sigma_conditions, BoxDomain, CoefficientGrid, ConditionReport, EvalConfig, KernelKind,
    MaxProductOperator, ProductKernel, ScalarField, SigmoidalKernel, WindowMode,
    DEFAULT_QUADRATURE_POINTS,
};

use crate::corpus::TestFunction;
use crate::error::{Error, Result};
use crate::imaging::{field_to_image, image_to_coefficients};
use crate::manifest::{default_manifest_path, RunManifest};
use crate::metrics::{error_rows, fmt_f64, write_error_table, write_float_table, ErrorRow, Metric};
use crate::parallel::{evaluate_grid_parallel, threads_from_env, with_threads};
use crate::pgm::{load_pgm, save_pgm, PgmFormat};
use crate::series::{load_series_csv, series_to_coefficients};

#[derive(Debug, Parser)]
#[command(
    name = "maxprod",
    version,
    about = "Max-product Kantorovich neural network operators"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the sigmoidal conditions and kernel spot values.
    KernelCheck(KernelCheckArgs),
    /// Approximate a built-in function and report errors.
    Approx(ApproxArgs),
    /// Model a `label,value` series on [0, 1].
    Model(ModelArgs),
    /// Reconstruct or enlarge a grayscale PGM image.
    Image(ImageArgs),
    /// Error table over a list of n.
    Converge(ConvergeArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KernelArg {
    Logistic,
    Tanh,
    Ramp,
}

impl From<KernelArg> for KernelKind {
    fn from(k: KernelArg) -> Self {
        match k {
            KernelArg::Logistic => KernelKind::Logistic,
            KernelArg::Tanh => KernelKind::HyperbolicTangent,
            KernelArg::Ramp => KernelKind::Ramp,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum FormatArg {
    P2,
    #[default]
    P5,
}

/// `a:b`
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval(pub f64, pub f64);

impl FromStr for Interval {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let (a, b) = s
            .split_once(':')
            .ok_or_else(|| format!("expected a:b, got {s:?}"))?;
        let a = a
            .trim()
            .parse::<f64>()
            .map_err(|_| format!("bad lower bound in {s:?}"))?;
        let b = b
            .trim()
            .parse::<f64>()
            .map_err(|_| format!("bad upper bound in {s:?}"))?;
        Ok(Interval(a, b))
    }
}

/// `WxH`
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Size(pub usize, pub usize);

impl FromStr for Size {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let (w, h) = s
            .split_once(['x', 'X'])
            .ok_or_else(|| format!("expected WxH, got {s:?}"))?;
        let w = w
            .parse::<usize>()
            .map_err(|_| format!("bad width in {s:?}"))?;
        let h = h
            .parse::<usize>()
            .map_err(|_| format!("bad height in {s:?}"))?;
        if w < 2 || h < 2 {
            return Err(format!("output size must be at least 2x2, got {s:?}"));
        }
        Ok(Size(w, h))
    }
}

/// Window and threading flags shared by the evaluating commands.
#[derive(Debug, Clone, Args)]
pub struct EvalArgs {
    /// Tolerance of windowed evaluation.
    #[arg(long, default_value_t = maxprod_core::DEFAULT_WINDOW_EPSILON)]
    pub window_eps: f64,
    /// Use every lattice index (no window).
    #[arg(long)]
    pub exact: bool,
    /// Worker threads; overrides the MAXPROD_THREADS environment variable.
    #[arg(long)]
    pub threads: Option<usize>,
}

impl Default for EvalArgs {
    fn default() -> Self {
        EvalArgs {
            window_eps: maxprod_core::DEFAULT_WINDOW_EPSILON,
            exact: false,
            threads: None,
        }
    }
}

impl EvalArgs {
    fn config(&self, quadrature_points: usize) -> EvalConfig {
        let window = if self.exact {
            WindowMode::Exact
        } else {
            WindowMode::Windowed {
                epsilon: self.window_eps,
            }
        };
        EvalConfig {
            window,
            quadrature_points,
        }
    }

    fn threads(&self) -> Result<Option<usize>> {
        match self.threads {
            Some(0) => Err(Error::Usage("--threads must be positive".into())),
            Some(n) => Ok(Some(n)),
            None => threads_from_env(),
        }
    }

    fn record(&self, m: &mut RunManifest) {
        if self.exact {
            m.param("window", "exact");
        } else {
            m.param("window", "windowed")
                .param("window_epsilon", self.window_eps);
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct KernelCheckArgs {
    #[arg(long, value_enum)]
    pub kernel: KernelArg,
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    #[arg(long, default_value_t = 20.0)]
    pub range: f64,
    /// Also write the report to this file.
    #[arg(long)]
    pub report: Option<PathBuf>,
    #[arg(long)]
    pub manifest: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct ApproxArgs {
    /// Built-in function: square, sine, abs, step.
    #[arg(long = "f")]
    pub function: TestFunction,
    #[arg(long)]
    pub n: u32,
    #[arg(long, value_enum, default_value = "logistic")]
    pub kernel: KernelArg,
    #[arg(long, default_value = "0:1")]
    pub domain: Interval,
    #[arg(long, default_value_t = 201)]
    pub resolution: usize,
    /// sup, l1, l2, lp:P, power:P, zygmund:A:B, exp:G (repeatable).
    #[arg(long = "metric", value_delimiter = ',', default_values = ["sup", "l1", "l2"])]
    pub metrics: Vec<Metric>,
    /// Scalings for modular metrics.
    #[arg(long = "lambda", value_delimiter = ',', default_values_t = [0.1, 1.0])]
    pub lambdas: Vec<f64>,
    #[arg(long, default_value_t = DEFAULT_QUADRATURE_POINTS)]
    pub quadrature: usize,
    #[command(flatten)]
    pub eval: EvalArgs,
    /// Point table x,f,k_n.
    #[arg(long)]
    pub output: PathBuf,
    /// Error table n,kernel,metric,lambda,value.
    #[arg(long)]
    pub errors: Option<PathBuf>,
    #[arg(long)]
    pub manifest: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct ConvergeArgs {
    #[arg(long = "f")]
    pub function: TestFunction,
    #[arg(long, value_enum, default_value = "logistic")]
    pub kernel: KernelArg,
    /// Ascending list, e.g. 5,10,20,40,80.
    #[arg(long = "n", value_delimiter = ',', required = true)]
    pub ns: Vec<u32>,
    #[arg(long, default_value = "0:1")]
    pub domain: Interval,
    #[arg(long, default_value_t = 201)]
    pub resolution: usize,
    #[arg(long = "metric", value_delimiter = ',', default_values = ["sup", "l1", "l2"])]
    pub metrics: Vec<Metric>,
    #[arg(long = "lambda", value_delimiter = ',', default_values_t = [0.1, 1.0])]
    pub lambdas: Vec<f64>,
    #[arg(long, default_value_t = DEFAULT_QUADRATURE_POINTS)]
    pub quadrature: usize,
    #[command(flatten)]
    pub eval: EvalArgs,
    #[arg(long)]
    pub output: PathBuf,
    #[arg(long)]
    pub manifest: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct ModelArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Extend the lattice to k = n so the last datum also enters.
    #[arg(long)]
    pub include_endpoint: bool,
    #[arg(long, value_enum, default_value = "logistic")]
    pub kernel: KernelArg,
    #[arg(long, default_value_t = 201)]
    pub resolution: usize,
    #[command(flatten)]
    pub eval: EvalArgs,
    /// Curve table x,value.
    #[arg(long)]
    pub output: PathBuf,
    /// Node table k,label,x,value,used.
    #[arg(long)]
    pub nodes: Option<PathBuf>,
    #[arg(long)]
    pub manifest: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct ImageArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub n: u32,
    /// Output size WxH; defaults to the input size.
    #[arg(long)]
    pub out_size: Option<Size>,
    #[arg(long, value_enum, default_value = "logistic")]
    pub kernel: KernelArg,
    #[command(flatten)]
    pub eval: EvalArgs,
    #[arg(long, value_enum, default_value = "p5")]
    pub format: FormatArg,
    #[arg(long)]
    pub output: PathBuf,
    #[arg(long)]
    pub manifest: Option<PathBuf>,
}

fn finish(
    mut manifest: RunManifest,
    started: Instant,
    explicit: Option<&Path>,
    output: &Path,
) -> Result<PathBuf> {
    manifest.wall_time_seconds = started.elapsed().as_secs_f64();
    let path = explicit.map_or_else(|| default_manifest_path(output), Path::to_path_buf);
    manifest.write(&path)?;
    Ok(path)
}

fn kernel_of(arg: KernelArg, dimension: usize) -> Result<ProductKernel> {
    Ok(ProductKernel::new(
        SigmoidalKernel::new(arg.into()),
        dimension,
    )?)
}

#[derive(Debug, Clone)]
pub struct KernelCheckSummary {
    pub report: ConditionReport,
    pub phi_at_two: f64,
    pub phi_at_zero: f64,
    pub phi_integral: f64,
    pub pass: bool,
}

impl KernelCheckSummary {
    pub fn text(&self) -> String {
        let verdict = |ok: bool| if ok { "pass" } else { "fail" };
        let mut s = String::new();
        let _ = writeln!(
            s,
            "sigma1_odd_symmetry: {}",
            verdict(self.report.odd_symmetry)
        );
        let _ = writeln!(
            s,
            "sigma2_unimodal_density: {}",
            verdict(self.report.unimodal_density)
        );
        let _ = writeln!(
            s,
            "sigma3_left_tail_decay: {}",
            verdict(self.report.left_tail_decay)
        );
        let _ = writeln!(s, "phi_at_2: {}", fmt_f64(self.phi_at_two));
        let _ = writeln!(s, "phi_at_0: {}", fmt_f64(self.phi_at_zero));
        let _ = writeln!(s, "phi_integral: {}", fmt_f64(self.phi_integral));
        let _ = writeln!(s, "all: {}", verdict(self.pass));
        s
    }
}

/// Absolute tolerance on the integral of the density in `kernel-check`.
pub const INTEGRAL_TOLERANCE: f64 = 1e-4;

pub fn cmd_kernel_check(args: &KernelCheckArgs) -> Result<KernelCheckSummary> {
    let started = Instant::now();
    let kernel = SigmoidalKernel::new(args.kernel.into());
    let report = verify_sigma_conditions(&kernel, args.samples, args.range)?;
    let phi_at_two = kernel.phi(2.0);
    let phi_at_zero = kernel.phi(0.0);
    let phi_integral = kernel.phi_l1_norm(kernel.l1_truncation_radius(), 1e-3)?;
    let pass = report.all_pass()
        && phi_at_two > 0.0
        && phi_at_zero <= 0.5
        && (phi_integral - 1.0).abs() <= INTEGRAL_TOLERANCE;
    let summary = KernelCheckSummary {
        report,
        phi_at_two,
        phi_at_zero,
        phi_integral,
        pass,
    };

    if let Some(path) = &args.report {
        std::fs::write(path, summary.text()).map_err(|e| Error::io(path, e))?;
    }
    let manifest_path = args
        .manifest
        .clone()
        .or_else(|| args.report.as_deref().map(default_manifest_path));
    if let Some(path) = manifest_path {
        let mut m = RunManifest::new("kernel-check");
        m.param("kernel", kernel.kind())
            .param("samples", args.samples)
            .param("range", args.range);
        if let Some(r) = &args.report {
            m.output("report", r);
        }
        finish(m, started, Some(&path), &path)?;
    }
    Ok(summary)
}

#[derive(Debug, Clone)]
pub struct ApproxSummary {
    pub coefficients: usize,
    pub errors: Vec<ErrorRow>,
    pub manifest: PathBuf,
}

struct Approximation {
    coefficients: usize,
    rows: Vec<ErrorRow>,
    approx: ScalarField,
    exact: ScalarField,
}

#[allow(clippy::too_many_arguments)]
fn approximate(
    function: TestFunction,
    n: u32,
    kernel: KernelArg,
    domain: Interval,
    resolution: usize,
    metrics: &[Metric],
    lambdas: &[f64],
    quadrature: usize,
    eval: &EvalArgs,
) -> Result<Approximation> {
    let domain = BoxDomain::interval(domain.0, domain.1)?;
    let grid =
        CoefficientGrid::from_function(|u| function.eval(u[0]), n, domain.clone(), quadrature)?;
    let cfg = eval.config(quadrature);
    let kernel = kernel_of(kernel, 1)?;
    let op = MaxProductOperator::new(&grid, kernel, &cfg)?;
    let approx = with_threads(eval.threads()?, || {
        evaluate_grid_parallel(&op, &[resolution])
    })??;
    let exact = ScalarField::sample(domain, vec![resolution], |x| function.eval(x[0]))?;
    let rows = error_rows(
        n,
        kernel.base().kind().name(),
        &approx,
        &exact,
        metrics,
        lambdas,
    )?;
    Ok(Approximation {
        coefficients: grid.values().len(),
        rows,
        approx,
        exact,
    })
}

fn check_lambdas(lambdas: &[f64]) -> Result<()> {
    match lambdas.iter().find(|&&l| !(l > 0.0 && l.is_finite())) {
        Some(l) => Err(Error::Usage(format!("lambda must be positive, got {l}"))),
        None => Ok(()),
    }
}

pub fn cmd_approx(args: &ApproxArgs) -> Result<ApproxSummary> {
    let started = Instant::now();
    check_lambdas(&args.lambdas)?;
    let result = approximate(
        args.function,
        args.n,
        args.kernel,
        args.domain,
        args.resolution,
        &args.metrics,
        &args.lambdas,
        args.quadrature,
        &args.eval,
    )?;
    let rows = result
        .exact
        .values()
        .iter()
        .zip(result.approx.values())
        .enumerate()
        .map(|(i, (&f, &k))| vec![result.exact.point(i)[0], f, k]);
    write_float_table(&args.output, &["x", "f", "k_n"], rows)?;
    if let Some(path) = &args.errors {
        write_error_table(path, &result.rows)?;
    }

    let mut m = RunManifest::new("approx");
    m.param("function", args.function)
        .param("n", args.n)
        .param("kernel", KernelKind::from(args.kernel))
        .param("domain", format!("{}:{}", args.domain.0, args.domain.1))
        .param("resolution", args.resolution)
        .param("metrics", join(&args.metrics))
        .param("lambdas", join(&args.lambdas))
        .param("quadrature_points", args.quadrature);
    args.eval.record(&mut m);
    m.output("points", &args.output);
    if let Some(path) = &args.errors {
        m.output("errors", path);
    }
    let manifest = finish(m, started, args.manifest.as_deref(), &args.output)?;
    Ok(ApproxSummary {
        coefficients: result.coefficients,
        errors: result.rows,
        manifest,
    })
}

fn join<T: ToString>(items: &[T]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

pub fn cmd_converge(args: &ConvergeArgs) -> Result<Vec<ErrorRow>> {
    let started = Instant::now();
    check_lambdas(&args.lambdas)?;
    if args.ns.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Usage(format!(
            "n list must be strictly ascending, got {}",
            join(&args.ns)
        )));
    }
    let mut rows = Vec::new();
    for &n in &args.ns {
        let result = approximate(
            args.function,
            n,
            args.kernel,
            args.domain,
            args.resolution,
            &args.metrics,
            &args.lambdas,
            args.quadrature,
            &args.eval,
        )?;
        rows.extend(result.rows);
    }
    write_error_table(&args.output, &rows)?;

    let mut m = RunManifest::new("converge");
    m.param("function", args.function)
        .param("n", join(&args.ns))
        .param("kernel", KernelKind::from(args.kernel))
        .param("domain", format!("{}:{}", args.domain.0, args.domain.1))
        .param("resolution", args.resolution)
        .param("metrics", join(&args.metrics))
        .param("lambdas", join(&args.lambdas))
        .param("quadrature_points", args.quadrature);
    args.eval.record(&mut m);
    m.output("errors", &args.output);
    finish(m, started, args.manifest.as_deref(), &args.output)?;
    Ok(rows)
}

#[derive(Debug, Clone)]
pub struct ModelSummary {
    pub n: u32,
    pub coefficients: usize,
    pub include_endpoint: bool,
    pub unused: Option<(String, f64)>,
    pub shift: f64,
    pub manifest: PathBuf,
}

pub fn cmd_model(args: &ModelArgs) -> Result<ModelSummary> {
    let started = Instant::now();
    if args.resolution < 2 {
        return Err(Error::Usage("resolution must be at least 2".into()));
    }
    let series = load_series_csv(&args.input)?;
    let model = series_to_coefficients(&series, args.include_endpoint)?;
    let kernel = kernel_of(args.kernel, 1)?;
    let op = MaxProductOperator::new(
        &model.grid,
        kernel,
        &args.eval.config(DEFAULT_QUADRATURE_POINTS),
    )?;
    let curve = with_threads(args.eval.threads()?, || {
        evaluate_grid_parallel(&op, &[args.resolution])
    })??;
    write_float_table(
        &args.output,
        &["x", "value"],
        curve
            .values()
            .iter()
            .enumerate()
            .map(|(i, &v)| vec![curve.point(i)[0], v]),
    )?;

    let n = model.grid.n();
    if let Some(path) = &args.nodes {
        let mut w =
            csv::Writer::from_path(path).map_err(|e| Error::MalformedInput(e.to_string()))?;
        let io = |e: csv::Error| Error::MalformedInput(format!("{}: {e}", path.display()));
        w.write_record(["k", "label", "x", "value", "used"])
            .map_err(io)?;
        let used = model.grid.values().len();
        for (k, (label, &value)) in series.labels().iter().zip(series.values()).enumerate() {
            w.write_record([
                k.to_string(),
                label.clone(),
                fmt_f64(k as f64 / f64::from(n)),
                fmt_f64(value),
                (k < used).to_string(),
            ])
            .map_err(io)?;
        }
        w.flush().map_err(|e| Error::io(path, e))?;
    }

    let mut m = RunManifest::new("model");
    m.param("n", n)
        .param("kernel", KernelKind::from(args.kernel))
        .param("resolution", args.resolution)
        .param("include_endpoint", args.include_endpoint)
        .param(
            "index_set",
            if args.include_endpoint {
                "extended to k = 0..n (deviates from the standard lattice k = 0..n-1)"
            } else {
                "k = 0..n-1"
            },
        )
        .param("shift", model.grid.shift());
    if let Some((label, _)) = &model.unused {
        m.param("unused_datum", label);
    }
    args.eval.record(&mut m);
    m.input("series", &args.input).output("curve", &args.output);
    if let Some(path) = &args.nodes {
        m.output("nodes", path);
    }
    let manifest = finish(m, started, args.manifest.as_deref(), &args.output)?;
    Ok(ModelSummary {
        n,
        coefficients: model.grid.values().len(),
        include_endpoint: model.include_endpoint,
        unused: model.unused,
        shift: model.grid.shift(),
        manifest,
    })
}

#[derive(Debug, Clone)]
pub struct ImageSummary {
    pub input_size: (usize, usize),
    pub output_size: (usize, usize),
    pub coefficients: usize,
    pub clamped: usize,
    pub manifest: PathBuf,
}

pub fn cmd_image(args: &ImageArgs) -> Result<ImageSummary> {
    let started = Instant::now();
    let input = load_image(&args.input)?;
    let grid = image_to_coefficients(&input, args.n)?;
    let Size(w, h) = args.out_size.unwrap_or(Size(input.width(), input.height()));
    let kernel = kernel_of(args.kernel, 2)?;
    let op = MaxProductOperator::new(&grid, kernel, &args.eval.config(DEFAULT_QUADRATURE_POINTS))?;
    let field = with_threads(args.eval.threads()?, || {
        evaluate_grid_parallel(&op, &[w, h])
    })??;
    let quantized = field_to_image(&field, input.maxval())?;
    save_image(&quantized.image, &args.output, args.format)?;

    let mut m = RunManifest::new("image");
    m.param("n", args.n)
        .param("kernel", KernelKind::from(args.kernel))
        .param("output_size", format!("{w}x{h}"))
        .param("format", format!("{:?}", args.format).to_lowercase())
        .param("clamped_pixels", quantized.clamped);
    args.eval.record(&mut m);
    m.input("image", &args.input).output("image", &args.output);
    let manifest = finish(m, started, args.manifest.as_deref(), &args.output)?;
    Ok(ImageSummary {
        input_size: (input.width(), input.height()),
        output_size: (w, h),
        coefficients: grid.values().len(),
        clamped: quantized.clamped,
        manifest,
    })
}

fn has_png_extension(path: &Path) -> bool {
    path.extension()
        .is_some_and(|e| e.eq_ignore_ascii_case("png"))
}

fn load_image(path: &Path) -> Result<crate::pgm::GrayImage> {
    #[cfg(feature = "png")]
    if has_png_extension(path) {
        return crate::png_io::load_png(path);
    }
    if has_png_extension(path) {
        return Err(Error::Usage(
            "PNG support requires the `png` feature".into(),
        ));
    }
    load_pgm(path)
}

fn save_image(image: &crate::pgm::GrayImage, path: &Path, format: FormatArg) -> Result<()> {
    #[cfg(feature = "png")]
    if has_png_extension(path) {
        return crate::png_io::save_png(image, path);
    }
    if has_png_extension(path) {
        return Err(Error::Usage(
            "PNG support requires the `png` feature".into(),
        ));
    }
    let format = match format {
        FormatArg::P2 => PgmFormat::Ascii,
        FormatArg::P5 => PgmFormat::Binary,
    };
    save_pgm(image, path, format)
}

/// Runs a parsed command line, prints its summary and returns the exit code.
pub fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::KernelCheck(args) => {
            let summary = cmd_kernel_check(&args)?;
            print!(
                "kernel: {}\n{}",
                KernelKind::from(args.kernel),
                summary.text()
            );
            Ok(if summary.pass { 0 } else { 1 })
        }
        Command::Approx(args) => {
            let summary = cmd_approx(&args)?;
            println!("coefficients: {}", summary.coefficients);
            print_rows(&summary.errors);
            println!("points: {}", args.output.display());
            Ok(0)
        }
        Command::Converge(args) => {
            let rows = cmd_converge(&args)?;
            print_rows(&rows);
            println!("errors: {}", args.output.display());
            Ok(0)
        }
        Command::Model(args) => {
            let summary = cmd_model(&args)?;
            println!("n: {}", summary.n);
            println!("coefficients: {}", summary.coefficients);
            println!("include_endpoint: {}", summary.include_endpoint);
            if let Some((label, value)) = &summary.unused {
                println!("unused datum: {label} = {value}");
            }
            if summary.shift > 0.0 {
                println!("shift: {}", summary.shift);
            }
            println!("curve: {}", args.output.display());
            Ok(0)
        }
        Command::Image(args) => {
            let summary = cmd_image(&args)?;
            println!("input: {}x{}", summary.input_size.0, summary.input_size.1);
            println!(
                "output: {}x{}",
                summary.output_size.0, summary.output_size.1
            );
            println!("coefficients: {}", summary.coefficients);
            println!("clamped pixels: {}", summary.clamped);
            println!("image: {}", args.output.display());
            Ok(0)
        }
    }
}

fn print_rows(rows: &[ErrorRow]) {
    for r in rows {
        match r.lambda {
            Some(l) => println!("n={} {} lambda={l}: {}", r.n, r.metric, fmt_f64(r.value)),
            None => println!("n={} {}: {}", r.n, r.metric, fmt_f64(r.value)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_interval_and_size() {
        assert_eq!("0.4:0.6".parse::<Interval>().unwrap(), Interval(0.4, 0.6));
        assert!("0.4".parse::<Interval>().is_err());
        assert_eq!("120x80".parse::<Size>().unwrap(), Size(120, 80));
        assert!("1x80".parse::<Size>().is_err());
        assert!("120".parse::<Size>().is_err());
    }

    #[test]
    fn cli_parses_examples() {
        let cli = Cli::try_parse_from([
            "maxprod",
            "approx",
            "--f",
            "step",
            "--n",
            "40",
            "--kernel",
            "logistic",
            "--metric",
            "l1",
            "--output",
            "/tmp/x.csv",
        ])
        .unwrap();
        match cli.command {
            Command::Approx(a) => {
                assert_eq!(a.function, TestFunction::Step);
                assert_eq!(a.metrics, vec![Metric::Lp(1.0)]);
                assert_eq!(a.lambdas, vec![0.1, 1.0]);
            }
            other => panic!("{other:?}"),
        }
        let err =
            Cli::try_parse_from(["maxprod", "kernel-check", "--kernel", "cubic"]).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        let cli = Cli::try_parse_from([
            "maxprod",
            "converge",
            "--f",
            "square",
            "--n",
            "5,10,20",
            "--metric",
            "sup,exp:1",
            "--output",
            "o.csv",
        ])
        .unwrap();
        match cli.command {
            Command::Converge(a) => assert_eq!(a.ns, vec![5, 10, 20]),
            other => panic!("{other:?}"),
        }
    }
}
