//! Command-line front end. Every command writes one JSON document (CSV for
//! `survey`) and exits 0 on success, 2 on bad input, 1 when an internal
//! check fails.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::designs::{
    condition_space, find_t_design_fp, poset_x, spectrum, wilson_exists, DesignParams,
};
use crate::error::{Error, Result};
use crate::h1::Kind;
use crate::h1::{brute_force_h1, classify, predicted_h1, survey, write_survey, DEFAULT_BUDGET};
use crate::hemmer::{construct_base_case, construct_james, construct_pointed, verify_hemmer};
use crate::numtheory::PrimeModulus;
use crate::tabloid::{Element, Partition2};

#[derive(Parser, Debug)]
#[command(
    name = "specht-h1",
    version,
    about = "Hemmer elements and p-ary designs for two-part Specht modules"
)]
struct Cli {
    /// Indent JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Shape {
    #[arg(long)]
    a: usize,
    #[arg(long)]
    b: usize,
    #[arg(long)]
    p: u64,
}

impl Shape {
    fn parse(&self) -> Result<(Partition2, PrimeModulus)> {
        Ok((Partition2::new(self.a, self.b)?, PrimeModulus::new(self.p)?))
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Method {
    Auto,
    Base,
    James,
    Pointed,
    Solve,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DesignMode {
    Exists,
    Find,
    Spectrum,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// James, pointed or neither, with the predicted H^1 dimension.
    Classify(Shape),
    /// Build a Hemmer element.
    Construct {
        #[command(flatten)]
        shape: Shape,
        #[arg(long, value_enum, default_value = "auto")]
        method: Method,
    },
    /// Check the Hemmer conditions for an element file.
    Verify {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        file: PathBuf,
    },
    /// Existence, search or spectrum of p-ary designs.
    Design {
        #[arg(long, value_enum)]
        mode: DesignMode,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        g: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        /// Constant the t-shadow should take (find mode).
        #[arg(long, default_value_t = 1)]
        target: u32,
        /// Element file (spectrum mode).
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// The poset of admissible levels and its components.
    Poset(Shape),
    /// Brute-force count of Hemmer extensions.
    H1dim {
        #[command(flatten)]
        shape: Shape,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Oracle sweep over all partitions of size at most nmax, as CSV.
    Survey {
        #[arg(long)]
        nmax: usize,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(args, &mut io::stdout().lock(), &mut io::stderr().lock())
}

/// [`run`] with explicit streams.
pub fn run_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let stream: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = stream.write_all(rendered.as_bytes());
            return code;
        }
    };
    match execute(&cli).and_then(|body| emit(&cli, &body, stdout)) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            if e.is_input_error() {
                2
            } else {
                1
            }
        }
    }
}

enum Output {
    Json(serde_json::Value),
    Csv(Vec<u8>),
}

fn to_json<T: Serialize>(x: &T) -> Result<Output> {
    Ok(Output::Json(serde_json::to_value(x)?))
}

fn emit(cli: &Cli, body: &Output, stdout: &mut dyn Write) -> Result<()> {
    let bytes = match body {
        Output::Json(v) => {
            let mut s = if cli.pretty {
                serde_json::to_string_pretty(v)?
            } else {
                serde_json::to_string(v)?
            };
            s.push('\n');
            s.into_bytes()
        }
        Output::Csv(b) => b.clone(),
    };
    match &cli.out {
        Some(path) => File::create(path)?.write_all(&bytes)?,
        None => stdout.write_all(&bytes)?,
    }
    Ok(())
}

fn read_element(path: &Path, p: PrimeModulus) -> Result<Element> {
    let u: Element = serde_json::from_reader(BufReader::new(File::open(path)?))?;
    if u.modulus() != p {
        return Err(Error::Schema(format!(
            "element is over GF({}) but --p is {p}",
            u.modulus()
        )));
    }
    Ok(u)
}

fn need(x: Option<usize>, flag: &str) -> Result<usize> {
    x.ok_or_else(|| Error::Precondition(format!("--{flag} is required in this mode")))
}

fn execute(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Classify(shape) => {
            let (lambda, p) = shape.parse()?;
            let c = classify(lambda, p);
            to_json(&json!({
                "a": lambda.a(),
                "b": lambda.b(),
                "p": p,
                "kind": c.kind,
                "beta": c.beta,
                "bhat": c.bhat,
                "predicted_h1": predicted_h1(lambda, p),
            }))
        }
        Command::Construct { shape, method } => {
            let (lambda, p) = shape.parse()?;
            to_json(&construct(lambda, p, *method)?)
        }
        Command::Verify { p, file } => {
            let p = PrimeModulus::new(*p)?;
            to_json(&verify_hemmer(&read_element(file, p)?))
        }
        Command::Design {
            mode,
            p,
            g,
            b,
            t,
            target,
            file,
        } => {
            let p = PrimeModulus::new(*p)?;
            match mode {
                DesignMode::Spectrum => {
                    let path = file.as_ref().ok_or_else(|| {
                        Error::Precondition("--file is required in this mode".into())
                    })?;
                    to_json(&spectrum(&read_element(path, p)?))
                }
                DesignMode::Exists => {
                    let params =
                        DesignParams::new(need(*g, "g")?, need(*b, "b")?, need(*t, "t")?, Some(p))?;
                    to_json(&json!({ "exists": wilson_exists(params)? }))
                }
                DesignMode::Find => {
                    let params =
                        DesignParams::new(need(*g, "g")?, need(*b, "b")?, need(*t, "t")?, Some(p))?;
                    let found = find_t_design_fp(params, *target)?;
                    to_json(&json!({ "found": found.is_some(), "design": found }))
                }
            }
        }
        Command::Poset(shape) => {
            let (lambda, p) = shape.parse()?;
            to_json(&poset_x(lambda, p))
        }
        Command::H1dim { shape, budget } => {
            let (lambda, p) = shape.parse()?;
            to_json(&brute_force_h1(lambda, p, *budget)?)
        }
        Command::Survey { nmax, p, budget } => {
            let rows = survey(*nmax, PrimeModulus::new(*p)?, *budget)?;
            let mut buf = Vec::new();
            write_survey(&rows, &mut buf)?;
            Ok(Output::Csv(buf))
        }
    }
}

fn construct(lambda: Partition2, p: PrimeModulus, method: Method) -> Result<Element> {
    let (a, b) = (lambda.a(), lambda.b());
    match method {
        Method::Base => construct_base_case(a, b, p),
        Method::James => construct_james(a, b, p),
        Method::Pointed => construct_pointed(a, b, p),
        Method::Auto => match classify(lambda, p).kind {
            Kind::James => construct_james(a, b, p),
            Kind::Pointed => construct_pointed(a, b, p),
            Kind::Neither => Err(Error::Precondition(format!(
                "({a},{b}) is neither James nor pointed for p = {p}, so no Hemmer element exists"
            ))),
        },
        Method::Solve => {
            let levels: Vec<usize> = (0..b).collect();
            let space = condition_space(lambda.n(), b, &levels, p, true)?;
            space
                .basis
                .unwrap_or_default()
                .into_iter()
                .find(|u| verify_hemmer(u).is_hemmer)
                .ok_or_else(|| {
                    Error::Precondition(format!(
                        "no basis vector of the condition space of ({a},{b}) is Hemmer"
                    ))
                })
        }
    }
}
