use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gapped::bounds::{self, default_beta_palindromes, default_beta_repeats};
use gapped::covermap::{self, Point};
use gapped::enumerate::{self, compute_runs, manacher};
use gapped::random::{random_trial, random_word};
use gapped::rational::{self, Rational};
use gapped::selfcheck::{self, Options};
use gapped::{GappedPalindrome, GappedRepeat, Word};
use rayon::prelude::*;
use serde::Serialize;

const USAGE_ERROR: u8 = 2;

#[derive(Parser)]
#[command(name = "gapped", version, about = "Maximal gapped repeats and palindromes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stream maximal repeats, palindromes, runs or ordinary palindromes.
    Enumerate {
        #[arg(long, value_enum)]
        kind: Kind,
        /// Keep only alpha-gapped pairs (period <= alpha * arm length); unbounded when omitted.
        #[arg(long, value_parser = parse_rational)]
        alpha: Option<Rational>,
        #[arg(long, value_enum, default_value_t = Format::Jsonl)]
        format: Format,
        #[command(flatten)]
        input: Input,
    },
    /// Check every bound on one word and print the JSON report.
    Verify {
        #[arg(long, value_parser = parse_rational)]
        alpha: Rational,
        #[arg(long, value_parser = parse_rational)]
        beta_repeats: Option<Rational>,
        #[arg(long, value_parser = parse_rational)]
        beta_palindromes: Option<Rational>,
        #[command(flatten)]
        input: Input,
    },
    /// Differential testing of the enumerators against the brute-force oracles.
    Fuzz {
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 40)]
        max_n: usize,
        #[arg(long, default_value_t = 2)]
        sigma: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Alphas to check each word at; comma separated.
        #[arg(long, value_parser = parse_rational, value_delimiter = ',', default_value = "1.01,3/2,2,4")]
        alpha: Vec<Rational>,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Emit the point images of maximal repeats (phi) or aperiodic palindromes (phi_t).
    Points {
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long, value_parser = parse_rational, default_value = "2")]
        alpha: Rational,
        /// Defaults to 2/3 for phi and 6/7 for phi_t.
        #[arg(long, value_parser = parse_rational)]
        beta: Option<Rational>,
        /// Defaults to (1 - beta) / alpha.
        #[arg(long, value_parser = parse_rational)]
        gamma: Option<Rational>,
        #[arg(long, value_enum, default_value_t = Format::Jsonl)]
        format: Format,
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Use the bytes of this string as the word.
    #[arg(long)]
    text: Option<String>,
    /// Read the word as raw bytes from a file.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Random word from length, alphabet size and seed.
    #[arg(long, num_args = 3, value_names = ["N", "SIGMA", "SEED"])]
    random: Option<Vec<u64>>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Repeats,
    Palindromes,
    Runs,
    Ordinary,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Jsonl,
    Tsv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    Phi,
    #[value(name = "phi_t")]
    PhiT,
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    rational::parse(s).map_err(|e| e.to_string())
}

/// Failure that maps to the usage/IO exit code.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

impl Input {
    fn read(&self) -> Result<Word, UsageError> {
        if let Some(t) = &self.text {
            return Ok(Word::from_bytes(t.as_bytes()));
        }
        if let Some(path) = &self.file {
            let bytes = std::fs::read(path).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
            return Ok(Word::from_bytes(&bytes));
        }
        let r = self.random.as_ref().expect("clap enforces one input");
        let sigma = u32::try_from(r[1]).ok().filter(|&s| s >= 1).ok_or_else(|| UsageError("SIGMA must be in 1..=2^32-1".into()))?;
        Ok(random_word(r[0] as usize, sigma, r[2]))
    }
}

#[derive(Serialize)]
struct PairRow {
    left_beg: usize,
    left_end: usize,
    right_beg: usize,
    right_end: usize,
    period: usize,
    gap: isize,
    arm_len: usize,
}

impl From<&GappedRepeat> for PairRow {
    fn from(r: &GappedRepeat) -> Self {
        PairRow {
            left_beg: r.left.beg,
            left_end: r.left.end,
            right_beg: r.right.beg,
            right_end: r.right.end,
            period: r.period(),
            gap: r.gap(),
            arm_len: r.arm_len(),
        }
    }
}

impl From<&GappedPalindrome> for PairRow {
    fn from(p: &GappedPalindrome) -> Self {
        PairRow {
            left_beg: p.left.beg,
            left_end: p.left.end,
            right_beg: p.right.beg,
            right_end: p.right.end,
            period: p.period(),
            gap: p.gap(),
            arm_len: p.arm_len(),
        }
    }
}

impl PairRow {
    fn tsv(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.left_beg, self.left_end, self.right_beg, self.right_end, self.period, self.gap, self.arm_len
        )
    }
}

#[derive(Serialize)]
struct RunRow {
    beg: usize,
    end: usize,
    period: usize,
    exponent: String,
}

#[derive(Serialize)]
struct SegmentRow {
    beg: usize,
    end: usize,
}

#[derive(Serialize)]
struct PointsSummary {
    points: usize,
    gamma: String,
    conflicts: usize,
}

fn emit<T: Serialize>(out: &mut impl Write, format: Format, row: &T, tsv: impl FnOnce(&T) -> String) -> io::Result<()> {
    match format {
        Format::Jsonl => {
            serde_json::to_writer(&mut *out, row)?;
            writeln!(out)
        }
        Format::Tsv => writeln!(out, "{}", tsv(row)),
    }
}

fn check_alpha(alpha: Rational) -> Result<(), UsageError> {
    if alpha < Rational::from_integer(1) {
        return Err(UsageError(format!("alpha must be >= 1, got {}", rational::render(alpha))));
    }
    Ok(())
}

fn cmd_enumerate(kind: Kind, alpha: Option<Rational>, format: Format, input: &Input) -> Result<ExitCode, UsageError> {
    if let Some(a) = alpha {
        check_alpha(a)?;
    }
    let w = input.read()?;
    let mut out = BufWriter::new(io::stdout().lock());
    match kind {
        Kind::Repeats => {
            let reps = match alpha {
                Some(a) => enumerate::enumerate_all_repeats(&w, a)?,
                None => enumerate::all_maximal_repeats(&w),
            };
            for r in &reps {
                emit(&mut out, format, &PairRow::from(r), PairRow::tsv)?;
            }
        }
        Kind::Palindromes => {
            let pals = match alpha {
                Some(a) => enumerate::enumerate_all_palindromes(&w, a)?,
                None => enumerate::all_maximal_palindromes(&w),
            };
            for p in &pals {
                emit(&mut out, format, &PairRow::from(p), PairRow::tsv)?;
            }
        }
        Kind::Runs => {
            for r in compute_runs(&w) {
                let row = RunRow { beg: r.beg, end: r.end, period: r.period, exponent: rational::render(r.exponent()) };
                emit(&mut out, format, &row, |r| format!("{}\t{}\t{}\t{}", r.beg, r.end, r.period, r.exponent))?;
            }
        }
        Kind::Ordinary => {
            for s in manacher(&w) {
                emit(&mut out, format, &SegmentRow { beg: s.beg, end: s.end }, |s| format!("{}\t{}", s.beg, s.end))?;
            }
        }
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(
    alpha: Rational,
    beta_repeats: Option<Rational>,
    beta_palindromes: Option<Rational>,
    input: &Input,
) -> Result<ExitCode, UsageError> {
    if alpha <= Rational::from_integer(1) {
        return Err(UsageError(format!("alpha must be > 1, got {}", rational::render(alpha))));
    }
    let w = input.read()?;
    let report = bounds::verify_bounds_with(
        &w,
        alpha,
        beta_repeats.unwrap_or_else(default_beta_repeats),
        beta_palindromes.unwrap_or_else(default_beta_palindromes),
    )?;
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, &report)?;
    writeln!(out)?;
    Ok(if report.all_pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_fuzz(
    trials: u64,
    max_n: usize,
    sigma: u32,
    seed: u64,
    alphas: &[Rational],
    inject_fault: bool,
) -> Result<ExitCode, UsageError> {
    if max_n == 0 || sigma == 0 {
        return Err(UsageError("max-n and sigma must be positive".into()));
    }
    for &a in alphas {
        check_alpha(a)?;
    }
    let options = Options { inject_fault };
    // Trial t is fully determined by seed + t, so a failure reproduces as a
    // single trial with that seed.
    let failure = (0..trials).into_par_iter().find_map_first(|t| {
        let trial_seed = seed.wrapping_add(t);
        let w = random_trial(max_n, sigma, trial_seed);
        alphas.iter().find_map(|&a| selfcheck::check_word(&w, a, options).err().map(|m| (trial_seed, w.clone(), a, m)))
    });
    match failure {
        None => {
            println!("fuzz: trials={trials} max_n={max_n} sigma={sigma} seed={seed} failures=0");
            Ok(ExitCode::SUCCESS)
        }
        Some((trial_seed, w, alpha, m)) => {
            println!("fuzz: counterexample at seed={trial_seed} alpha={}", rational::render(alpha));
            println!("word: {:?}", w.symbols());
            println!("{m}");
            println!(
                "reproduce: gapped fuzz --trials 1 --max-n {max_n} --sigma {sigma} --seed {trial_seed} --alpha {}{}",
                rational::render(alpha),
                if inject_fault { " --inject-fault" } else { "" }
            );
            Ok(ExitCode::from(1))
        }
    }
}

fn cmd_points(
    which: Which,
    alpha: Rational,
    beta: Option<Rational>,
    gamma: Option<Rational>,
    format: Format,
    input: &Input,
) -> Result<ExitCode, UsageError> {
    check_alpha(alpha)?;
    let beta = beta.unwrap_or_else(|| match which {
        Which::Phi => default_beta_repeats(),
        Which::PhiT => default_beta_palindromes(),
    });
    let one = Rational::from_integer(1);
    if !(Rational::from_integer(0) < beta && beta < one) {
        return Err(UsageError(format!("beta must lie in (0, 1), got {}", rational::render(beta))));
    }
    let gamma = gamma.unwrap_or((one - beta) / alpha);
    let w = input.read()?;
    let points: Vec<Point> = match which {
        Which::Phi => enumerate::enumerate_all_repeats(&w, alpha)?.iter().map(covermap::phi).collect(),
        Which::PhiT => {
            let pals = enumerate::enumerate_all_palindromes(&w, alpha)?;
            bounds::classify_palindromes(&w, &pals, beta)?.aperiodic.iter().map(covermap::phi_t).collect()
        }
    };
    let conflicts = covermap::cover_conflicts(&points, gamma)?.len();
    let mut out = BufWriter::new(io::stdout().lock());
    for p in &points {
        emit(&mut out, format, p, |p| format!("{}\t{}", p.x, p.y))?;
    }
    let summary = PointsSummary { points: points.len(), gamma: rational::render(gamma), conflicts };
    emit(&mut out, format, &summary, |s| format!("# points={} gamma={} conflicts={}", s.points, s.gamma, s.conflicts))?;
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn configure_threads() {
    if let Some(n) = std::env::var("GW_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        // Fails only if a pool already exists, which cannot happen this early.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    let result = match &cli.command {
        Command::Enumerate { kind, alpha, format, input } => cmd_enumerate(*kind, *alpha, *format, input),
        Command::Verify { alpha, beta_repeats, beta_palindromes, input } => {
            cmd_verify(*alpha, *beta_repeats, *beta_palindromes, input)
        }
        Command::Fuzz { trials, max_n, sigma, seed, alpha, inject_fault } => {
            cmd_fuzz(*trials, *max_n, *sigma, *seed, alpha, *inject_fault)
        }
        Command::Points { which, alpha, beta, gamma, format, input } => {
            cmd_points(*which, *alpha, *beta, *gamma, *format, input)
        }
    };
    match result {
        Ok(code) => code,
        Err(UsageError(msg)) if msg.contains("Broken pipe") => ExitCode::SUCCESS,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(USAGE_ERROR)
        }
    }
}
