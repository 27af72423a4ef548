use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use indexmap::IndexMap;

use qkaplansky::bijections::{foata, foata_inv, psi, psi_inv, tau, tau_inv, wrap, wrap_inv};
use qkaplansky::{
    gaussian, kaplansky, q_catalan, reiner_stanton, BinaryWord, Bounds, CheckId, CheckReport,
    Checker, Error, IntPoly, Profile,
};
use qkaplansky_cli::{
    render_bijection, render_poly, render_reports, BijectionRecord, Format, OutputRecord,
};

/// Exact q-Kaplansky, Gaussian and q-Catalan polynomials, and bounded
/// verification sweeps.
#[derive(Parser)]
#[command(name = "qkap", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    output: OutputFlags,
}

#[derive(Args)]
#[group(multiple = false)]
struct OutputFlags {
    /// Emit JSON
    #[arg(long, global = true)]
    json: bool,
    /// Emit CSV
    #[arg(long, global = true)]
    csv: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Print the coefficients of one polynomial
    Coeffs {
        family: Family,
        /// `n m` (`n` alone for catalan)
        #[arg(required = true, allow_negative_numbers = true)]
        params: Vec<i64>,
    },
    /// Run one check, or all of them
    Check {
        /// A check id, or `all`
        id: String,
        #[arg(long)]
        max_n: Option<u32>,
        #[arg(long)]
        min_n: Option<u32>,
        #[arg(long)]
        max_m: Option<u32>,
        #[arg(long, default_value = "standard")]
        profile: ProfileArg,
        /// Allow bounds past the per-check safety limit
        #[arg(long)]
        force: bool,
    },
    /// Scan a unimodality conjecture over a range of n
    Scan {
        conjecture: Conjecture,
        #[arg(long)]
        from: u32,
        #[arg(long)]
        to: u32,
        #[arg(long)]
        force: bool,
    },
    /// Apply a word map and print both statistics
    Bijection { map: MapName, word: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Gaussian,
    Kaplansky,
    Catalan,
    ReinerStanton,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProfileArg {
    Quick,
    Standard,
    Extended,
}

#[derive(Clone, Copy, ValueEnum)]
enum Conjecture {
    Conj18,
    Conj19,
}

#[derive(Clone, Copy, ValueEnum)]
enum MapName {
    Foata,
    FoataInv,
    Psi,
    PsiInv,
    Wrap,
    WrapInv,
    Tau,
    TauInv,
}

enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BoundsTooLarge { .. } => Failure::Usage(format!("{e}; use --force")),
            e => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn poly_for(
    family: Family,
    params: &[i64],
) -> Result<(&'static str, IndexMap<String, i64>, IntPoly), Failure> {
    let (name, keys): (&str, &[&str]) = match family {
        Family::Gaussian => ("gaussian", &["n", "m"]),
        Family::Kaplansky => ("kaplansky", &["n", "m"]),
        Family::Catalan => ("catalan", &["n"]),
        Family::ReinerStanton => ("reiner-stanton", &["n", "m"]),
    };
    if params.len() != keys.len() {
        return Err(Failure::Usage(format!(
            "{name} takes {} parameter(s): {}",
            keys.len(),
            keys.join(" ")
        )));
    }
    let map = keys
        .iter()
        .zip(params)
        .map(|(k, &v)| (k.to_string(), v))
        .collect();
    let poly = match family {
        Family::Gaussian => gaussian(params[0], params[1]),
        Family::Kaplansky => kaplansky(params[0], params[1])?,
        Family::Catalan => q_catalan(params[0])?,
        Family::ReinerStanton => reiner_stanton(params[0], params[1])?,
    };
    Ok((name, map, poly))
}

fn apply_map(map: MapName, w: &BinaryWord) -> Result<(&'static str, BinaryWord), Error> {
    Ok(match map {
        MapName::Foata => ("foata", foata(w)),
        MapName::FoataInv => ("foata-inv", foata_inv(w)),
        MapName::Psi => ("psi", psi(w)),
        MapName::PsiInv => ("psi-inv", psi_inv(w)?),
        MapName::Wrap => ("wrap", wrap(w)),
        MapName::WrapInv => ("wrap-inv", wrap_inv(w)?),
        MapName::Tau => ("tau", tau(w)),
        MapName::TauInv => ("tau-inv", tau_inv(w)?),
    })
}

fn profile(p: ProfileArg) -> Profile {
    match p {
        ProfileArg::Quick => Profile::Quick,
        ProfileArg::Standard => Profile::Standard,
        ProfileArg::Extended => Profile::Extended,
    }
}

/// Profile defaults with any explicit overrides applied.
fn bounds_for(
    id: CheckId,
    p: Profile,
    min_n: Option<u32>,
    max_n: Option<u32>,
    max_m: Option<u32>,
) -> Bounds {
    let mut b = id.default_bounds(p);
    if let Some(v) = min_n {
        b.min_n = v;
    }
    if let Some(v) = max_n {
        b.max_n = v;
    }
    if max_m.is_some() {
        b.max_m = max_m;
    }
    b
}

fn verdict(reports: &[CheckReport]) -> ExitCode {
    if reports.iter().any(CheckReport::found_violation) {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<ExitCode, Failure> {
    let fmt = match (cli.output.json, cli.output.csv) {
        (true, _) => Format::Json,
        (_, true) => Format::Csv,
        _ => Format::Human,
    };
    match cli.command {
        Command::Coeffs { family, params } => {
            let (name, map, poly) = poly_for(family, &params)?;
            render_poly(out, &OutputRecord::new(name, map, &poly), &poly, fmt)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Check {
            id,
            max_n,
            min_n,
            max_m,
            profile: p,
            force,
        } => {
            let p = profile(p);
            let checker = Checker::new().allow_large(force);
            let overridden = min_n.is_some() || max_n.is_some() || max_m.is_some();
            let reports = if id == "all" && !overridden {
                checker.run_all(p)
            } else if id == "all" {
                let mut reports = Vec::new();
                for &id in CheckId::ALL {
                    // the example check is a single fixed instance, not a range
                    let b = if id == CheckId::KaplanskyNonunimodalExample {
                        id.default_bounds(p)
                    } else {
                        bounds_for(id, p, min_n, max_n, max_m)
                    };
                    reports.push(checker.run(id, b)?);
                }
                reports
            } else {
                let id: CheckId = id.parse()?;
                vec![checker.run(id, bounds_for(id, p, min_n, max_n, max_m))?]
            };
            render_reports(out, &reports, fmt)?;
            Ok(verdict(&reports))
        }
        Command::Scan {
            conjecture,
            from,
            to,
            force,
        } => {
            let id = match conjecture {
                Conjecture::Conj18 => CheckId::Conj18Scan,
                Conjecture::Conj19 => CheckId::Conj19Scan,
            };
            let report = Checker::new()
                .allow_large(force)
                .run(id, Bounds::range(from, to))?;
            let reports = [report];
            render_reports(out, &reports, fmt)?;
            Ok(verdict(&reports))
        }
        Command::Bijection { map, word } => {
            let w: BinaryWord = word.parse()?;
            let (name, image) = apply_map(map, &w)?;
            render_bijection(out, &BijectionRecord::new(name, &w, &image), fmt)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
