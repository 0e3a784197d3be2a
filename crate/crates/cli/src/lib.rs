//! The `sointegra` command line: JSON verification reports and CSV tables.
//!
//! Exit status: 0 when every check passes, 2 when a check fails, 64 for
//! usage and parse errors.

pub mod report;
pub mod suites;
pub mod tables;

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use sointegra_core::exactfield::FieldElem;
use sointegra_core::exprdsl::{evaluate, parse_ast, ExprError, Value};
use sointegra_core::gauge::AlgebraFamily;
use sointegra_core::operator::{Algebra, DiffOp};
use sointegra_core::par;
use sointegra_core::spectral::QuantumNumbers;

use report::Report;
use tables::Solver;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Parser, Debug)]
#[command(name = "sointegra", version, about = "Exact checks for spin-orbit superintegrable Hamiltonians")]
pub struct Cli {
    /// Write the report or table here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Record per-check wall time (makes reports nondeterministic).
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Exact verification suites.
    #[command(subcommand)]
    Verify(Verify),
    /// Determining-equation analysis for a given spin-orbit potential.
    Deteq(DeteqArgs),
    /// Bound-state energies from the closed form and/or by shooting.
    Spectrum(SpectrumArgs),
    /// Sample an eigenspinor on a grid.
    Wavefunction(WaveArgs),
    /// Commutator table of the six- or nine-dimensional algebra.
    Algebra(AlgebraArgs),
}

#[derive(Subcommand, Debug)]
pub enum Verify {
    /// Gauge identities, both algebras, every catalog integral, rank and Φ checks, closures.
    Catalog,
    /// Check `[H, X] = 0` for expressions (or files containing them).
    Integral(IntegralArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Hbar {
    One,
    Symbolic,
}

#[derive(Args, Debug)]
pub struct IntegralArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub hamiltonian: String,
    #[arg(long, allow_hyphen_values = true)]
    pub integral: String,
    #[arg(long, value_enum, default_value = "one")]
    pub hbar: Hbar,
}

#[derive(Args, Debug)]
pub struct DeteqArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub v1: String,
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    pub v0: String,
}

#[derive(Args, Debug)]
pub struct SpectrumArgs {
    /// Coulomb coupling, an integer, fraction or decimal; must be negative.
    #[arg(long, allow_hyphen_values = true)]
    pub mu: String,
    #[arg(long)]
    pub nmax: u32,
    /// Largest j, a positive half-odd integer such as 3/2.
    #[arg(long)]
    pub jmax: String,
    #[arg(long, value_enum, default_value = "both")]
    pub solver: Solver,
}

#[derive(Args, Debug)]
pub struct WaveArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub j: String,
    #[arg(long, allow_hyphen_values = true)]
    pub m: String,
    #[arg(long, allow_hyphen_values = true)]
    pub eps: i8,
    #[arg(long, allow_hyphen_values = true)]
    pub mu: String,
    #[arg(long, default_value_t = 40)]
    pub nr: usize,
    #[arg(long, default_value_t = 16)]
    pub ntheta: usize,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    pub phi: f64,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FamilyArg {
    Six,
    Nine,
}

#[derive(Args, Debug)]
pub struct AlgebraArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
}

/// What a command produced.
pub struct Output {
    pub code: i32,
    pub text: String,
}

#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

fn usage(msg: impl Into<String>) -> UsageError {
    UsageError(msg.into())
}

/// The argument itself, or the contents of the file it names.
fn expr_source(arg: &str) -> Result<String, UsageError> {
    let p = Path::new(arg);
    if p.is_file() {
        std::fs::read_to_string(p).map_err(|e| usage(format!("{arg}: {e}")))
    } else {
        Ok(arg.to_string())
    }
}

fn located(what: &str, e: ExprError) -> UsageError {
    usage(format!("--{what}: {e}"))
}

fn parse_op(what: &str, arg: &str, alg: &Algebra) -> Result<DiffOp, UsageError> {
    let text = expr_source(arg)?;
    let e = parse_ast(&text).map_err(|e| located(what, e))?;
    Ok(evaluate(&e, alg).map_err(|e| located(what, e))?.into_operator())
}

fn parse_fn(what: &str, arg: &str, alg: &Algebra) -> Result<FieldElem, UsageError> {
    let text = expr_source(arg)?;
    let e = parse_ast(&text).map_err(|e| located(what, e))?;
    match evaluate(&e, alg).map_err(|e| located(what, e))? {
        Value::Scalar(f) => Ok(f),
        Value::Operator(_) => Err(usage(format!(
            "--{what}: at {}:{}: expected a function, found an operator",
            e.pos.line, e.pos.col
        ))),
    }
}

/// `a`, `a/b` or a decimal.
pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    if let Some((a, b)) = s.split_once('/') {
        let a: num_bigint::BigInt = a.trim().parse().map_err(|_| format!("bad numerator in `{s}`"))?;
        let b: num_bigint::BigInt = b.trim().parse().map_err(|_| format!("bad denominator in `{s}`"))?;
        if b == 0.into() {
            return Err(format!("zero denominator in `{s}`"));
        }
        return Ok(BigRational::new(a, b));
    }
    if let Ok(a) = s.parse::<num_bigint::BigInt>() {
        return Ok(BigRational::from_integer(a));
    }
    let x: f64 = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    BigRational::from_float(x).ok_or_else(|| format!("`{s}` is not finite"))
}

/// Twice a half-integer given as `k/2` or an integer.
pub fn parse_twice(s: &str) -> Result<i64, String> {
    let q = parse_rational(s)?;
    let two = q * BigRational::from_integer(2.into());
    if !two.is_integer() {
        return Err(format!("`{s}` is not a half-integer"));
    }
    two.to_integer().to_i64().ok_or_else(|| format!("`{s}` is too large"))
}

fn negative_mu(s: &str) -> Result<(BigRational, f64), UsageError> {
    let q = parse_rational(s).map_err(|e| usage(format!("--mu: {e}")))?;
    if !q.is_negative() {
        return Err(usage(format!("--mu: coupling must be negative, got {s}")));
    }
    let f = q.to_f64().unwrap_or(f64::NAN);
    Ok((q, f))
}

fn report_output(command: Vec<String>, checks: Vec<report::Check>) -> Output {
    let r = Report::new(command, checks);
    Output { code: if r.passed() { EXIT_OK } else { EXIT_FAIL }, text: r.to_json() }
}

/// Execute a parsed command. `echo` is the argument list without the program name.
pub fn execute(cli: &Cli, echo: Vec<String>) -> Result<Output, UsageError> {
    let timing = cli.timing;
    match &cli.command {
        Command::Verify(Verify::Catalog) => Ok(report_output(echo, suites::catalog_checks(timing))),
        Command::Verify(Verify::Integral(a)) => {
            let alg = match a.hbar {
                Hbar::One => Algebra::unit(),
                Hbar::Symbolic => Algebra::symbolic(),
            };
            let h = parse_op("hamiltonian", &a.hamiltonian, &alg)?;
            let x = parse_op("integral", &a.integral, &alg)?;
            Ok(report_output(echo, suites::integral_checks(h, x, timing)))
        }
        Command::Deteq(a) => {
            let alg = Algebra::unit();
            let v1 = parse_fn("v1", &a.v1, &alg)?;
            let v0 = parse_fn("v0", &a.v0, &alg)?;
            Ok(report_output(echo, suites::deteq_checks(v1, v0, timing)))
        }
        Command::Algebra(a) => {
            let fam = match a.family {
                FamilyArg::Six => AlgebraFamily::SixDim,
                FamilyArg::Nine => AlgebraFamily::NineDim,
            };
            Ok(report_output(echo, suites::algebra_checks(fam, timing)))
        }
        Command::Spectrum(a) => {
            let (mu, mu_f) = negative_mu(&a.mu)?;
            let two_j = parse_twice(&a.jmax).map_err(|e| usage(format!("--jmax: {e}")))?;
            if two_j <= 0 || two_j % 2 == 0 {
                return Err(usage(format!("--jmax: {} is not a positive half-odd integer", a.jmax)));
            }
            let rows = tables::spectrum(&mu, mu_f, a.nmax, two_j as u32, a.solver)
                .map_err(|e| usage(e.to_string()))?;
            let text = tables::spectrum_csv(&rows).map_err(|e| usage(e.to_string()))?;
            let bad = rows
                .iter()
                .any(|r| r.rel_diff().is_some_and(|d| !(d <= tables::SOLVER_TOLERANCE)));
            Ok(Output { code: if bad { EXIT_FAIL } else { EXIT_OK }, text })
        }
        Command::Wavefunction(a) => {
            let (_, mu_f) = negative_mu(&a.mu)?;
            let tj = parse_twice(&a.j).map_err(|e| usage(format!("--j: {e}")))?;
            let tm = parse_twice(&a.m).map_err(|e| usage(format!("--m: {e}")))?;
            if tj <= 0 || tj > u32::MAX as i64 || tm.abs() > i32::MAX as i64 {
                return Err(usage(format!("--j: {} is out of range", a.j)));
            }
            if a.nr == 0 || a.ntheta == 0 {
                return Err(usage("--nr and --ntheta must be positive"));
            }
            let qn = QuantumNumbers::new(a.n, tj as u32, tm as i32, a.eps)
                .map_err(|e| usage(e.to_string()))?;
            let text = tables::wavefunction_csv(qn, mu_f, a.nr, a.ntheta, a.phi)
                .map_err(|e| usage(e.to_string()))?;
            Ok(Output { code: EXIT_OK, text })
        }
    }
}

/// Parse `args` (including the program name), run, write output, return the exit status.
pub fn run<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let echo: Vec<String> = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect();
    let result = match par::with_thread_cap(|| execute(&cli, echo)) {
        Ok(r) => r,
        Err(e) => Err(usage(e)),
    };
    match result {
        Ok(out) => {
            let written = match &cli.out {
                Some(p) => std::fs::write(p, &out.text).map_err(|e| format!("{}: {e}", p.display())),
                None => {
                    use std::io::Write;
                    std::io::stdout().write_all(out.text.as_bytes()).map_err(|e| e.to_string())
                }
            };
            match written {
                Ok(()) => out.code,
                Err(e) => {
                    eprintln!("error: {e}");
                    EXIT_USAGE
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}
