//! Command-line front end: transforms, multiplication, count tables, self-test.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error.

mod selftest;

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use tft_core::text::{format_column, format_row, parse_polynomial_pair, parse_residues_exact};
use tft_core::{bound_check, itft_in_place, tft_in_place, tft_polymul, BoundReport, CountingRing, Fp};
use tft_core::{PrimeField, TransformKind, TransformPlan};

#[derive(Parser)]
#[command(name = "tft-cli", version, about = "In-place truncated Fourier transform over Z/p")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Forward truncated transform of L residues.
    Tft(TransformArgs),
    /// Inverse truncated transform of L values.
    Itft(TransformArgs),
    /// Multiply two polynomials given as two lines of coefficients.
    Mul(MulArgs),
    /// Operation counts against the proven bounds, as CSV.
    Counts(CountsArgs),
    /// Oracle, round-trip, audit and bound checks for every length up to --max.
    Selftest(SelftestArgs),
}

#[derive(Args)]
struct TransformArgs {
    #[arg(long, default_value_t = PrimeField::DEFAULT_MODULUS)]
    modulus: u64,
    #[arg(long)]
    length: usize,
    /// Read input from FILE instead of stdin.
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,
}

#[derive(Args)]
struct MulArgs {
    #[arg(long, default_value_t = PrimeField::DEFAULT_MODULUS)]
    modulus: u64,
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Forward,
    Inverse,
    Both,
}

#[derive(Args)]
struct CountsArgs {
    #[arg(long)]
    min: usize,
    #[arg(long)]
    max: usize,
    #[arg(long, value_enum, default_value_t = Kind::Both)]
    kind: Kind,
}

#[derive(Args)]
struct SelftestArgs {
    #[arg(long, default_value_t = 256)]
    max: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Run the kernels with a wrong root to check that failures are caught.
    #[arg(long, hide = true)]
    inject_fault: bool,
}

enum Failure {
    Usage(String),
    Verification,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Tft(args) => transform(&args, false),
        Command::Itft(args) => transform(&args, true),
        Command::Mul(args) => mul(&args),
        Command::Counts(args) => counts(&args),
        Command::Selftest(args) => {
            selftest::run(args.max, args.seed, args.inject_fault).map_err(|_| Failure::Verification)
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read_input(path: Option<&PathBuf>) -> Result<String, Failure> {
    match path {
        Some(p) => fs::read_to_string(p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn emit(text: &str) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        // a closed pipe downstream is not an input error
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn transform(args: &TransformArgs, inverse: bool) -> Result<(), Failure> {
    let field = PrimeField::new(args.modulus)?;
    let plan = TransformPlan::new(&field, args.length)?;
    let text = read_input(args.input.as_ref())?;
    let mut values: Vec<Fp> = parse_residues_exact(&text, &field, args.length)?;
    if inverse {
        itft_in_place(&field, &plan, &mut values[..])?;
    } else {
        tft_in_place(&field, &plan, &mut values[..])?;
    }
    emit(&format_column(&values))
}

fn mul(args: &MulArgs) -> Result<(), Failure> {
    let field = PrimeField::new(args.modulus)?;
    let text = read_input(args.input.as_ref())?;
    let (f, g) = parse_polynomial_pair(&text, &field)?;
    emit(&format_row(&tft_polymul(&field, &f, &g)?))
}

fn counts(args: &CountsArgs) -> Result<(), Failure> {
    let field = PrimeField::default_field();
    let cap = 1usize << field.two_adicity();
    if args.min == 0 || args.min > args.max || args.max > cap {
        return Err(Failure::Usage(format!(
            "length range [{}, {}] must be nonempty and inside [1, {cap}]",
            args.min, args.max
        )));
    }
    let kinds: &[TransformKind] = match args.kind {
        Kind::Forward => &[TransformKind::Forward],
        Kind::Inverse => &[TransformKind::Inverse],
        Kind::Both => &[TransformKind::Forward, TransformKind::Inverse],
    };
    let mut csv = format!("{}\n", BoundReport::CSV_HEADER);
    let mut failed = 0;
    for ell in args.min..=args.max {
        let plan = TransformPlan::new(&field, ell)?;
        let input: Vec<Fp> = (0..ell as u64).map(|i| field.reduce(i + 1)).collect();
        for &kind in kinds {
            let ring = CountingRing::new(field);
            let mut buf = input.clone();
            match kind {
                TransformKind::Inverse => itft_in_place(&ring, &plan, &mut buf[..])?,
                _ => tft_in_place(&ring, &plan, &mut buf[..])?,
            }
            let report = bound_check(ell, ring.counters(), kind);
            if !report.pass() {
                failed += 1;
            }
            csv.push_str(&report.csv_row());
            csv.push('\n');
        }
    }
    emit(&csv)?;
    if failed > 0 {
        eprintln!("{failed} rows exceed their bounds");
        return Err(Failure::Verification);
    }
    Ok(())
}
