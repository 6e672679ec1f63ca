use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use jortho::checks::{self, float, DualMode, Mode, PropertyReport};
use jortho::exactnum::{int, Matrix, Rational};
use jortho::jacobi::{jacobi_op, reduced_op, spectrum, JacobiError, SpectrumReport};
use jortho::space::ScalarProduct;
use jortho::tensor::{catalog, constant_curvature, from_skew, io, kulkarni_nomizu, random_curvature, CurvatureTensor};
use jortho::verify::{self, SuiteConfig, SuiteError};

mod parse;

#[derive(Parser)]
#[command(name = "jortho", version, about = "Exact checks of Jacobi-orthogonality and Osserman-type conditions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a curvature tensor and write it as JSON.
    Make(MakeArgs),
    /// Run one property checker on a tensor file.
    Check(CheckArgs),
    /// Print the spectrum of the Jacobi operator at a vector.
    Spectrum(SpectrumArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(clap::Args)]
struct MakeArgs {
    /// constant, skew, kn, random or quasi-clifford:<family>
    #[arg(long)]
    family: String,
    #[arg(long, value_parser = parse::signature)]
    signature: (usize, usize),
    /// Comma-separated coefficients (mu0 first for quasi-Clifford families).
    #[arg(long, value_parser = parse::rationals, allow_hyphen_values = true)]
    mu: Option<parse::Rationals>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Coefficient range for --family random.
    #[arg(long, default_value_t = 5)]
    magnitude: i64,
    /// Skew-adjoint map for --family skew, rows separated by ';'.
    #[arg(long, value_parser = parse::matrix, allow_hyphen_values = true)]
    matrix: Option<Matrix<Rational>>,
    /// First symmetric form for --family kn.
    #[arg(long, value_parser = parse::matrix, allow_hyphen_values = true)]
    h: Option<Matrix<Rational>>,
    /// Second symmetric form for --family kn (defaults to the metric).
    #[arg(long, value_parser = parse::matrix, allow_hyphen_values = true)]
    k: Option<Matrix<Rational>>,
    /// Output file; standard output when omitted.
    #[arg(long, short)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    Osserman,
    KStein,
    Diagonalizable,
    JacobiDual,
    WeakJacobiDual,
    JacobiOrthogonal,
    ConstantCurvature,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Auto,
    Symbolic,
    Sampled,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Auto => Mode::Auto,
            ModeArg::Symbolic => Mode::Symbolic,
            ModeArg::Sampled => Mode::Sampled,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Backend {
    Exact,
    Float,
}

#[derive(clap::Args)]
struct CheckArgs {
    file: PathBuf,
    #[arg(long = "check", value_enum)]
    property: Property,
    /// Order for --check k-stein.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, default_value_t = 20)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "auto")]
    mode: ModeArg,
    #[arg(long, value_enum, default_value = "exact")]
    backend: Backend,
    /// Absolute tolerance, required by the float backend.
    #[arg(long, value_parser = parse::tolerance)]
    tol: Option<f64>,
}

#[derive(clap::Args)]
struct SpectrumArgs {
    file: PathBuf,
    /// Base vector, comma-separated.
    #[arg(long, value_parser = parse::rationals, allow_hyphen_values = true)]
    at: parse::Rationals,
    /// Restrict to the orthogonal complement of the base vector.
    #[arg(long)]
    reduced: bool,
}

#[derive(clap::Args)]
struct VerifyArgs {
    suite: String,
    #[arg(long, default_value_t = 20)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Signature p,q; repeat for several.
    #[arg(long = "signature", value_parser = parse::signature)]
    signatures: Vec<(usize, usize)>,
    /// Extra dimensions for exploratory campaigns, comma-separated.
    #[arg(long, value_parser = parse::dims)]
    dims: Option<parse::Dims>,
    /// Samples per sampled checker inside an instance.
    #[arg(long, default_value_t = 6)]
    check_trials: usize,
    #[arg(long, value_enum, default_value = "auto")]
    mode: ModeArg,
    /// Add an instance with a broken Hurwitz relation.
    #[arg(long)]
    corrupted: bool,
    /// Where counterexamples are written when the suite fails.
    #[arg(long, default_value = "counterexamples.json")]
    dump: PathBuf,
}

/// An input error, reported with exit status 2.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

fn input(msg: impl Into<String>) -> InputError {
    InputError(msg.into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Make(a) => make(a),
        Command::Check(a) => check(a),
        Command::Spectrum(a) => show_spectrum(a),
        Command::Verify(a) => run_verify(a),
    };
    match result {
        Ok(code) => code,
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load(path: &Path) -> Result<CurvatureTensor, InputError> {
    let text = fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))?;
    io::from_json(&text).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn single_mu(mu: &Option<parse::Rationals>) -> Result<Rational, InputError> {
    match mu.as_ref().map(|m| m.0.as_slice()) {
        None => Ok(int(1)),
        Some([m]) => Ok(m.clone()),
        Some(_) => Err(input("--mu: this family takes a single coefficient")),
    }
}

fn make(a: MakeArgs) -> Result<ExitCode, InputError> {
    let (p, q) = a.signature;
    let g = ScalarProduct::canonical(p, q);
    let r = match a.family.as_str() {
        "constant" => constant_curvature(&g, &single_mu(&a.mu)?),
        "skew" => {
            let j = a.matrix.as_ref().ok_or_else(|| input("--matrix is required for --family skew"))?;
            from_skew(&g, j).map_err(|e| input(format!("--matrix: {e}")))?.scale(&single_mu(&a.mu)?)
        }
        "kn" => {
            let h = a.h.as_ref().ok_or_else(|| input("--h is required for --family kn"))?;
            let k = a.k.clone().unwrap_or_else(|| g.gram().clone());
            kulkarni_nomizu(&g, h, &k).map_err(|e| input(format!("--h/--k: {e}")))?
        }
        "random" => random_curvature(&g, a.seed, a.magnitude).map_err(|e| input(format!("--magnitude: {e}")))?,
        other => {
            let Some(name) = other.strip_prefix("quasi-clifford:") else {
                return Err(input(format!(
                    "--family: unknown family {other:?} (expected constant, skew, kn, random or quasi-clifford:<name>)"
                )));
            };
            let count = catalog::coefficient_count(name, p, q).map_err(|e| input(format!("--family: {e}")))?;
            let mus = a.mu.clone().map(|m| m.0).unwrap_or_else(|| vec![int(1); count]);
            catalog::family_tensor(name, p, q, &mus).map_err(|e| input(format!("--family/--mu: {e}")))?
        }
    };
    let text = io::to_json(&r);
    match &a.out {
        Some(path) => fs::write(path, text).map_err(|e| input(format!("{}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn exit_for(rep: &PropertyReport) -> ExitCode {
    println!("{}", rep.to_json());
    if rep.holds() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn check(a: CheckArgs) -> Result<ExitCode, InputError> {
    let r = load(&a.file)?;
    let n = r.dim();
    let need_k = || -> Result<usize, InputError> {
        let k = a.k.ok_or_else(|| input("--k is required for --check k-stein"))?;
        if k == 0 || k > n {
            return Err(input(format!("--k: must satisfy 1 <= k <= {n}, got {k}")));
        }
        Ok(k)
    };
    if a.trials == 0 {
        return Err(input("--trials: must be at least 1"));
    }
    let mode = Mode::from(a.mode);
    let rep = match a.backend {
        Backend::Float => {
            let tol = a.tol.ok_or_else(|| input("--tol is required with --backend float"))?;
            match a.property {
                Property::Osserman => float::osserman(&r, tol, a.trials, a.seed)?,
                Property::KStein => float::k_stein(&r, need_k()?, tol, a.trials, a.seed)?,
                Property::JacobiOrthogonal => float::jacobi_orthogonal(&r, tol, a.trials, a.seed),
                Property::ConstantCurvature => float::constant_sectional(&r, tol),
                _ => return Err(input("--backend: the float backend supports osserman, k-stein, jacobi-orthogonal and constant-curvature")),
            }
        }
        Backend::Exact => {
            if a.tol.is_some() {
                return Err(input("--tol: only meaningful with --backend float"));
            }
            match a.property {
                Property::Osserman => checks::osserman_with(&r, mode, a.trials, a.seed)?,
                Property::KStein => checks::k_stein_with(&r, need_k()?, mode, a.trials, a.seed)?.report,
                Property::Diagonalizable => checks::jacobi_diagonalizable(&r, a.trials, a.seed),
                Property::JacobiDual => checks::jacobi_dual(&r, DualMode::Full, a.trials, a.seed),
                Property::WeakJacobiDual => checks::jacobi_dual(&r, DualMode::Weak, a.trials, a.seed),
                Property::JacobiOrthogonal => checks::jacobi_orthogonal(&r, mode, a.trials, a.seed),
                Property::ConstantCurvature => checks::constant_sectional(&r),
            }
        }
    };
    Ok(exit_for(&rep))
}

fn show_spectrum(a: SpectrumArgs) -> Result<ExitCode, InputError> {
    let r = load(&a.file)?;
    if a.at.0.len() != r.dim() {
        return Err(input(format!("--at: expected {} coordinates, got {}", r.dim(), a.at.0.len())));
    }
    let op = if a.reduced {
        reduced_op(&r, &a.at.0).map_err(|e| match e {
            JacobiError::NullBase => input("--at: reduced operator undefined for null X"),
            other => input(format!("--at: {other}")),
        })?
    } else {
        jacobi_op(&r, &a.at.0).map_err(|e| input(format!("--at: {e}")))?
    };
    let spec = spectrum(&op)?;
    let report = SpectrumReport::new(&op, &spec);
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(ExitCode::SUCCESS)
}

fn run_verify(a: VerifyArgs) -> Result<ExitCode, InputError> {
    let mut cfg = SuiteConfig::new(a.trials, a.seed).with_signatures(&a.signatures);
    cfg.dims = a.dims.map(|d| d.0).unwrap_or_default();
    cfg.check_trials = a.check_trials;
    cfg.mode = a.mode.into();
    cfg.include_corrupted = a.corrupted;
    let rep = verify::run_suite(&a.suite, &cfg).map_err(|e| match e {
        SuiteError::UnknownSuite(_) => input(e.to_string()),
        SuiteError::Config(m) => input(format!("invalid configuration: {m}")),
    })?;
    print!("{}", rep.to_json());
    if rep.passed {
        return Ok(ExitCode::SUCCESS);
    }
    let dump = serde_json::to_string_pretty(&rep.counterexamples)? + "\n";
    fs::write(&a.dump, dump).map_err(|e| input(format!("--dump {}: {e}", a.dump.display())))?;
    eprintln!("{} counterexample(s) written to {}", rep.counterexamples.len(), a.dump.display());
    Ok(ExitCode::from(1))
}
