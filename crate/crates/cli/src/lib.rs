//! Command implementations for the `mixcode` binary.
//!
//! Every command writes its normal output to `out` and diagnostics to `err`
//! and returns a process exit code:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success |
//! | 1 | a verification check failed |
//! | 2 | invalid parameters |
//! | 3 | enumeration cap exceeded |
//! | 4 | malformed input |

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use mixcode::analysis::{
    is_gray_linear, kernel, min_hamming_distance, rank, KernelMethod, RankMethod,
};
use mixcode::constructions::{
    construct_kernel_code, construct_kernel_code_single_column, construct_pair_code,
    construct_rank_code, AchievabilityTable,
};
use mixcode::gray::big_phi;
use mixcode::mixed_code::CodeFile;
use mixcode::{AdditiveCode, CodeType, EnumerationCap, GeneratorMatrix, MixedWord, Prime};

mod verify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_MALFORMED: i32 = 4;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error("{0}")]
    Cap(String),
    #[error("{0}")]
    Malformed(String),
    #[error("{0}")]
    CheckFailed(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => EXIT_INVALID,
            CliError::Cap(_) => EXIT_CAP,
            CliError::Malformed(_) | CliError::Io(_) => EXIT_MALFORMED,
            CliError::CheckFailed(_) => EXIT_CHECK_FAILED,
        }
    }
}

/// Library errors raised while acting on validated parameters.
impl From<mixcode::Error> for CliError {
    fn from(e: mixcode::Error) -> Self {
        use mixcode::Error as E;
        match e {
            E::CapExceeded { .. } => CliError::Cap(e.to_string()),
            E::Malformed(_)
            | E::NotGrayImage(_)
            | E::EntryOutOfRange { .. }
            | E::ShapeMismatch(_) => CliError::Malformed(e.to_string()),
            E::Inconsistent(_) => CliError::CheckFailed(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

/// Errors while reading input are always "malformed input".
fn malformed(e: mixcode::Error) -> CliError {
    match e {
        mixcode::Error::CapExceeded { .. } => CliError::Cap(e.to_string()),
        _ => CliError::Malformed(e.to_string()),
    }
}

type CliResult<T = ()> = Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(
    name = "mixcode",
    version,
    about = "Additive codes over Z_p x Z_{p^2} and their Gray images"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a witness code with a prescribed rank, kernel dimension or both.
    Construct(ConstructArgs),
    /// Report type, rank, kernel dimension and linearity of a code file.
    Analyze(AnalyzeArgs),
    /// Print the achievable (rank, kernel) grid of a type as CSV.
    Table(TableArgs),
    /// Write the dual code and print both types.
    Dual(DualArgs),
    /// Print the Gray image of a word.
    Gray(GrayArgs),
    /// Run every oracle cross-check that fits under the cap.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct TypeArgs {
    #[arg(long)]
    pub p: u32,
    #[arg(long)]
    pub alpha: usize,
    #[arg(long)]
    pub beta: usize,
    #[arg(long)]
    pub gamma: usize,
    #[arg(long)]
    pub delta: usize,
    #[arg(long)]
    pub kappa: usize,
}

impl TypeArgs {
    fn resolve(&self) -> CliResult<(Prime, CodeType)> {
        let p = Prime::new(self.p)?;
        let t = CodeType::new(self.alpha, self.beta, self.gamma, self.delta, self.kappa)?;
        Ok((p, t))
    }
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("target").required(true).args(["rank", "kernel", "pair"]))]
pub struct ConstructArgs {
    #[command(flatten)]
    pub code_type: TypeArgs,
    /// Target rank (p = 3).
    #[arg(long)]
    pub rank: Option<usize>,
    /// Target kernel dimension (any odd p).
    #[arg(long)]
    pub kernel: Option<usize>,
    /// Target rank and kernel dimension as `R,K` (p = 3).
    #[arg(long, value_parser = parse_pair)]
    pub pair: Option<(usize, usize)>,
    /// With --kernel: put p-1 in the first column of S only.
    #[arg(long, requires = "kernel")]
    pub single_column: bool,
    #[arg(short, long)]
    pub output: PathBuf,
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (r, k) = s.split_once(',').ok_or("expected R,K")?;
    let r = r.trim().parse().map_err(|_| format!("bad rank {r:?}"))?;
    let k = k
        .trim()
        .parse()
        .map_err(|_| format!("bad kernel dimension {k:?}"))?;
    Ok((r, k))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RankChoice {
    Span,
    Bruteforce,
    Auto,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KernelChoice {
    Coset,
    Bruteforce,
    Auto,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    pub file: PathBuf,
    #[arg(long, value_enum, default_value = "auto")]
    pub rank_method: RankChoice,
    #[arg(long, value_enum, default_value = "auto")]
    pub kernel_method: KernelChoice,
    /// Also report the minimum Hamming distance of the Gray image.
    #[arg(long)]
    pub min_dist: bool,
    /// Enumeration cap in codewords.
    #[arg(long, default_value_t = EnumerationCap::DEFAULT.0)]
    pub cap: u128,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[command(flatten)]
    pub code_type: TypeArgs,
    /// Construct and analyse a witness for every achievable cell.
    #[arg(long)]
    pub verify: bool,
    #[arg(long, default_value_t = EnumerationCap::DEFAULT.0)]
    pub cap: u128,
    /// Write the CSV here instead of standard output.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DualArgs {
    pub file: PathBuf,
    #[arg(short, long)]
    pub output: PathBuf,
}

#[derive(Debug, Args)]
pub struct GrayArgs {
    #[arg(long)]
    pub p: u32,
    /// Word literal `x1,x2,...|y1,y2,...`.
    #[arg(long, allow_hyphen_values = true)]
    pub word: String,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub file: PathBuf,
    #[arg(long, default_value_t = EnumerationCap::DEFAULT.0)]
    pub cap: u128,
}

/// Parses `args` (including the program name) and runs the command.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli, out, err),
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(rendered.as_bytes());
            } else {
                let _ = out.write_all(rendered.as_bytes());
            }
            code
        }
    }
}

pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::Construct(a) => cmd_construct(&a, out),
        Command::Analyze(a) => cmd_analyze(&a, out),
        Command::Table(a) => cmd_table(&a, out, err),
        Command::Dual(a) => cmd_dual(&a, out),
        Command::Gray(a) => cmd_gray(&a, out),
        Command::Verify(a) => verify::cmd_verify(&a, out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn load_code(path: &Path) -> CliResult<GeneratorMatrix> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Malformed(format!("cannot read {}: {e}", path.display())))?;
    CodeFile::parse(&text)
        .and_then(|f| f.to_matrix())
        .map_err(malformed)
}

fn write_code(path: &Path, g: &GeneratorMatrix) -> CliResult {
    std::fs::write(path, CodeFile::from_matrix(g).to_json())?;
    Ok(())
}

pub fn cmd_construct(a: &ConstructArgs, out: &mut dyn Write) -> CliResult {
    let (p, t) = a.code_type.resolve()?;
    let needs_p3 = a.rank.is_some() || a.pair.is_some();
    if needs_p3 && p.get() != 3 {
        return Err(CliError::Invalid(format!(
            "rank and pair constructions need p = 3, got p = {p}"
        )));
    }
    let g = if let Some(r) = a.rank {
        construct_rank_code(t, r)?
    } else if let Some(k) = a.kernel {
        if a.single_column {
            construct_kernel_code_single_column(p, t, k)?
        } else {
            construct_kernel_code(p, t, k)?
        }
    } else if let Some((r, k)) = a.pair {
        construct_pair_code(t, r, k)?
    } else {
        return Err(CliError::Invalid(
            "one of --rank, --kernel, --pair is required".into(),
        ));
    };
    write_code(&a.output, &g)?;
    writeln!(out, "type: {}", g.code_type())?;
    writeln!(out, "wrote: {}", a.output.display())?;
    Ok(())
}

/// The key-value analysis report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalysisReport {
    pub p: u32,
    pub code_type: CodeType,
    pub rank: usize,
    pub r_bar: usize,
    pub rank_method: RankMethod,
    pub kernel_dim: usize,
    pub k_bar: usize,
    pub kernel_method: KernelMethod,
    pub linear: bool,
    pub min_distance: Option<Option<u32>>,
}

impl AnalysisReport {
    pub fn render(&self) -> String {
        let t = self.code_type;
        let mut s = String::new();
        let mut kv = |k: &str, v: String| s.push_str(&format!("{k}: {v}\n"));
        kv("type", t.to_string());
        kv("p", self.p.to_string());
        kv("size", format!("{}^{}", self.p, t.log_size()));
        kv("rank", self.rank.to_string());
        kv("r_bar", self.r_bar.to_string());
        kv("rank_method", self.rank_method.name().into());
        kv("kernel_dim", self.kernel_dim.to_string());
        kv("k_bar", self.k_bar.to_string());
        kv("kernel_method", self.kernel_method.name().into());
        kv("linear", self.linear.to_string());
        if let Some(d) = self.min_distance {
            kv("min_distance", d.map_or("none".into(), |d| d.to_string()));
        }
        s
    }
}

pub fn analyze_code(
    code: &AdditiveCode,
    rank_choice: RankChoice,
    kernel_choice: KernelChoice,
    min_dist: bool,
    cap: EnumerationCap,
) -> CliResult<AnalysisReport> {
    let p = code.prime();
    let t = code.code_type();
    let rank_method = match rank_choice {
        RankChoice::Span => RankMethod::Span,
        RankChoice::Bruteforce => RankMethod::BruteForce,
        RankChoice::Auto if p.get() == 3 => RankMethod::Span,
        RankChoice::Auto => RankMethod::BruteForce,
    };
    let coset_fits = p.pow(t.delta).is_some_and(|n| n <= cap.0);
    let kernel_method = match kernel_choice {
        KernelChoice::Coset => KernelMethod::Coset,
        KernelChoice::Bruteforce => KernelMethod::BruteForce,
        KernelChoice::Auto if coset_fits => KernelMethod::Coset,
        KernelChoice::Auto => KernelMethod::BruteForce,
    };
    let r = rank(code, rank_method, cap)?;
    let k = kernel(code, kernel_method, cap)?;
    let linear = is_gray_linear(code, cap)?;
    let min_distance = if min_dist {
        Some(min_hamming_distance(code, cap)?)
    } else {
        None
    };
    Ok(AnalysisReport {
        p: p.get(),
        code_type: t,
        rank: r.rank,
        r_bar: r.r_bar,
        rank_method,
        kernel_dim: k.kernel_dim,
        k_bar: k.k_bar,
        kernel_method,
        linear,
        min_distance,
    })
}

pub fn cmd_analyze(a: &AnalyzeArgs, out: &mut dyn Write) -> CliResult {
    let code = AdditiveCode::new(load_code(&a.file)?);
    let report = analyze_code(
        &code,
        a.rank_method,
        a.kernel_method,
        a.min_dist,
        EnumerationCap(a.cap),
    )?;
    out.write_all(report.render().as_bytes())?;
    Ok(())
}

pub fn cmd_table(a: &TableArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    let (p, t) = a.code_type.resolve()?;
    if p.get() != 3 {
        return Err(CliError::Invalid(format!(
            "the (r, k) table needs p = 3, got p = {p}"
        )));
    }
    let table = AchievabilityTable::new(t)?;
    let mut failures = Vec::new();
    if a.verify {
        let checks = table.verify(EnumerationCap(a.cap))?;
        for c in &checks {
            if !c.ok() {
                failures.push(format!(
                    "cell (r={}, k={}) measured (r={}, k={})",
                    c.rank, c.kernel, c.measured_rank, c.measured_kernel
                ));
            }
        }
        writeln!(
            err,
            "verified {} achievable cells, {} mismatches",
            checks.len(),
            failures.len()
        )?;
    }
    let csv = table.to_csv();
    match &a.output {
        Some(path) => std::fs::write(path, &csv)?,
        None => out.write_all(csv.as_bytes())?,
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(CliError::CheckFailed(failures.join("; ")))
    }
}

pub fn cmd_dual(a: &DualArgs, out: &mut dyn Write) -> CliResult {
    let code = AdditiveCode::new(load_code(&a.file)?);
    let dual = code.dual();
    write_code(&a.output, dual.generators())?;
    writeln!(out, "type: {}", code.code_type())?;
    writeln!(out, "dual_type: {}", dual.code_type())?;
    Ok(())
}

pub fn cmd_gray(a: &GrayArgs, out: &mut dyn Write) -> CliResult {
    let p = Prime::new(a.p)?;
    let w = MixedWord::parse(p, &a.word).map_err(malformed)?;
    writeln!(out, "{}", big_phi(&w))?;
    Ok(())
}
