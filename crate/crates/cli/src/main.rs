//! `ebloch`: evaluate the lifted Rogers dilogarithm, sweep the relations of
//! the extended pre-Bloch group, and compute complex volumes.

use std::fs;
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ebloch::ccs::{complex_volume, FlattenedTriangulation};
use ebloch::prebloch::{kappa_hat, FormalSum};
use ebloch::sweep::{run_sweep, Relation, SweepConfig, SweepReport};
use ebloch::{CmodZ2, FlattenedNumber, HighPrecision, IndexReading, Real};
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(name = "ebloch", version, about = "Extended Bloch group and lifted Rogers dilogarithm")]
struct Cli {
    #[command(flatten)]
    opts: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct GlobalOpts {
    /// Residual tolerance for checks.
    #[arg(long, global = true, env = "EBLOCH_TOL", default_value_t = 1e-9)]
    tol: f64,
    /// Seed for randomized sweeps.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Samples per sweep.
    #[arg(long, global = true, default_value_t = 500)]
    samples: usize,
    /// Indices are drawn from [-B, B].
    #[arg(long, global = true, default_value_t = 5, value_name = "B")]
    index_bound: i64,
    #[arg(long, global = true, value_enum, default_value_t = Precision::Double)]
    precision: Precision,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// How stored indices enter the logarithms.
    #[arg(long, global = true, value_enum, default_value_t = Reading::Half)]
    index_reading: Reading,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Precision {
    /// IEEE double.
    Double,
    /// 256-bit binary float, about 71 digits.
    High,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    /// JSON.
    Structured,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Reading {
    /// `Log z + 2πi·p` for the label `2p`.
    Half,
    /// `Log z + 2πi·2p`; breaks the order-two element.
    Even,
}

impl From<Reading> for IndexReading {
    fn from(r: Reading) -> Self {
        match r {
            Reading::Half => IndexReading::HalfIndex,
            Reading::Even => IndexReading::EvenLabel,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate L̂ on a generator `z_re z_im side p q`, on `kappa`, or on a
    /// file of `coeff z_re z_im side p q` lines (`-` for stdin).
    Eval {
        #[arg(required = true, num_args = 1..=5, allow_negative_numbers = true)]
        args: Vec<String>,
    },
    /// Run seeded randomized sweeps of a relation (`all` for every one).
    Check {
        /// five-term, cycle, mirror, homo, index-q, index-p, index-pq,
        /// chi-hom, symmetry-1 .. symmetry-5, kappa, splitting, wedge, all
        relation: String,
    },
    /// Complex volume of a flattened triangulation file.
    Ccs { path: PathBuf },
}

#[derive(Debug)]
enum Failure {
    /// Bad input; exit status 2.
    Usage(String),
    /// Evaluation or I/O error; exit status 2.
    Error(ebloch::Error),
    /// Checks ran and at least one failed; exit status 1.
    Checks,
}

impl From<ebloch::Error> for Failure {
    fn from(e: ebloch::Error) -> Self {
        Failure::Error(e)
    }
}

#[derive(Serialize)]
struct ValueRecord {
    precision: &'static str,
    terms: usize,
    value_re: f64,
    value_im: f64,
    value_mod_2pi2_re: f64,
    value_mod_2pi2_im: f64,
    split_re: f64,
    split_im: f64,
}

fn value_text<T: Real>(v: &CmodZ2<T>) -> String {
    let split = ebloch::scalar::exp(v.value() / ebloch::scalar::two_pi_i::<T>());
    format!(
        "value: {v}\nvalue mod 2pi^2: {}\nsplit: {} {}\n",
        v.reduce_mod_transfer(),
        split.re,
        split.im
    )
}

fn value_record<T: Real>(v: &CmodZ2<T>, terms: usize) -> ValueRecord {
    let split = ebloch::scalar::exp(v.value() / ebloch::scalar::two_pi_i::<T>());
    let t = v.reduce_mod_transfer().value();
    ValueRecord {
        precision: T::NAME,
        terms,
        value_re: v.re().to_f64(),
        value_im: v.im().to_f64(),
        value_mod_2pi2_re: t.re.to_f64(),
        value_mod_2pi2_im: t.im.to_f64(),
        split_re: split.re.to_f64(),
        split_im: split.im.to_f64(),
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        io::Read::read_to_string(&mut io::stdin(), &mut s).map_err(|e| Failure::Error(e.into()))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Error(ebloch::Error::Io(format!("{path}: {e}"))))
    }
}

fn eval_sum<T: Real>(args: &[String]) -> Result<FormalSum<T>, Failure> {
    match args {
        [k] if k == "kappa" => Ok(kappa_hat()),
        [path] => FormalSum::parse(&read_input(path)?).map_err(Failure::from),
        [_, _, _, _, _] => {
            let fields: Vec<&str> = args.iter().map(String::as_str).collect();
            let f = FlattenedNumber::<T>::parse_fields(&fields).map_err(Failure::Usage)?;
            Ok(FormalSum::generator(f))
        }
        _ => Err(Failure::Usage(format!(
            "expected `z_re z_im side p q`, `kappa` or a file, got {} arguments",
            args.len()
        ))),
    }
}

fn cmd_eval<T: Real>(opts: &GlobalOpts, args: &[String], out: &mut impl Write) -> Result<(), Failure> {
    let s = eval_sum::<T>(args)?;
    let v = s.eval_lhat_with(opts.index_reading.into());
    match opts.format {
        Format::Text => write!(out, "{}", value_text(&v)),
        Format::Structured => writeln!(out, "{}", json(&value_record(&v, s.len()))),
    }
    .map_err(|e| Failure::Error(e.into()))
}

fn cmd_check<T: Real>(opts: &GlobalOpts, relation: &str, out: &mut impl Write) -> Result<(), Failure> {
    let relations = if relation == "all" {
        Relation::all()
    } else {
        vec![relation.parse::<Relation>()?]
    };
    let mut reports: Vec<SweepReport> = Vec::new();
    for r in relations {
        let cfg = SweepConfig {
            samples: opts.samples,
            seed: opts.seed,
            tol: opts.tol,
            index_bound: opts.index_bound,
            reading: opts.index_reading.into(),
            ..SweepConfig::new(r)
        };
        reports.push(run_sweep::<T>(&cfg)?);
    }
    let written = match opts.format {
        Format::Text => reports.iter().enumerate().try_for_each(|(i, r)| {
            if i > 0 {
                writeln!(out)?;
            }
            write!(out, "{r}")
        }),
        Format::Structured if reports.len() == 1 => writeln!(out, "{}", json(&reports[0])),
        Format::Structured => writeln!(out, "{}", json(&reports)),
    };
    written.map_err(|e| Failure::Error(e.into()))?;
    if reports.iter().all(|r| r.passed) {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

fn cmd_ccs<T: Real>(opts: &GlobalOpts, path: &Path, out: &mut impl Write) -> Result<(), Failure> {
    let file = fs::File::open(path)
        .map_err(|e| Failure::Error(ebloch::Error::Io(format!("{}: {e}", path.display()))))?;
    let t = FlattenedTriangulation::<T>::load(BufReader::new(file))?;
    let report = complex_volume(&t);
    match opts.format {
        Format::Text => write!(out, "{report}"),
        Format::Structured => writeln!(out, "{}", json(&report.record())),
    }
    .map_err(|e| Failure::Error(e.into()))
}

fn json<S: Serialize>(value: &S) -> String {
    serde_json::to_string_pretty(value).expect("report serializes")
}

fn run<T: Real>(cli: &Cli, out: &mut impl Write) -> Result<(), Failure> {
    match &cli.command {
        Command::Eval { args } => cmd_eval::<T>(&cli.opts, args, out),
        Command::Check { relation } => cmd_check::<T>(&cli.opts, relation, out),
        Command::Ccs { path } => cmd_ccs::<T>(&cli.opts, path, out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = match cli.opts.precision {
        Precision::Double => run::<f64>(&cli, &mut out),
        Precision::High => run::<HighPrecision>(&cli, &mut out),
    };
    let _ = out.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("usage: ebloch eval <z_re z_im side p q | kappa | FILE>");
            ExitCode::from(2)
        }
        Err(Failure::Error(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
