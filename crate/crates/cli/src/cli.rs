use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hawaii_core::cauchy::IndexMethod;
use serde_json::json;

use crate::commands::{self, IndexScope, Rendered, Theorem};
use crate::error::{CliError, CliResult};
use crate::fuzz::{fuzz, Suite};
use crate::parse::{parse_extended, parse_nonconstant_polynomial, parse_nonzero_polynomial, parse_polynomial, parse_rational};
use crate::report::Report;

const POLY_HELP: &str = "comma-separated rational coefficients, constant term first: \"-6,6,-3,1\" is z^3 - 3z^2 + 6z - 6";

#[derive(Parser, Debug)]
#[command(
    name = "hawaii",
    version,
    about = "Exact checks of the Hawaii inequality, Laguerre derivatives and Cauchy indices",
    after_help = "Polynomials are written as ascending coefficient lists (constant term first), \
                  each coefficient \"n\" or \"n/d\".\n\
                  Exit codes: 0 verified or not applicable, 1 violation found, 2 usage error."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct Output {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Report `timing_ms` as null so that outputs compare byte for byte.
    #[arg(long, global = true)]
    pub no_timing: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Counts behind the Hawaii inequality: Z_R(Q[p]) <= 2m.
    Analyze {
        #[arg(allow_hyphen_values = true, help = POLY_HELP)]
        poly: String,
        #[command(flatten)]
        out: Output,
    },
    /// Cauchy index of num/den over the real line, an interval, or the projective line.
    Index {
        #[arg(long, allow_hyphen_values = true)]
        num: String,
        #[arg(long, allow_hyphen_values = true)]
        den: String,
        /// Open interval (a, b); endpoints are rationals, `-inf` or `inf`.
        #[arg(long, num_args = 2, value_names = ["A", "B"], allow_hyphen_values = true, conflicts_with = "projective")]
        interval: Option<Vec<String>>,
        /// Add the index at infinity.
        #[arg(long)]
        projective: bool,
        #[arg(long, value_enum, default_value_t = MethodArg::Euclidean)]
        method: MethodArg,
        #[command(flatten)]
        out: Output,
    },
    /// Laguerre derivative p' + sigma p, or its inverse.
    Laguerre {
        #[arg(allow_hyphen_values = true, help = POLY_HELP)]
        poly: String,
        #[arg(long, allow_hyphen_values = true)]
        sigma: String,
        /// Solve p' + sigma p = poly for p instead (sigma != 0).
        #[arg(long)]
        invert: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Scan sigma -> Z_C(p_sigma) and report its minimum.
    SigmaMin {
        #[arg(allow_hyphen_values = true, help = POLY_HELP)]
        poly: String,
        #[command(flatten)]
        out: Output,
    },
    /// Check one statement on one polynomial.
    Verify {
        #[arg(allow_hyphen_values = true, help = POLY_HELP)]
        poly: String,
        #[arg(long, value_enum)]
        theorem: TheoremArg,
        #[arg(long, allow_hyphen_values = true)]
        sigma: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[command(flatten)]
        out: Output,
    },
    /// Run seeded random instances through the property suites.
    Fuzz {
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        count: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        /// Worker threads (default: all cores).
        #[arg(long)]
        threads: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy)]
pub enum MethodArg {
    Euclidean,
    PerPole,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
pub enum TheoremArg {
    Hawaii,
    T21,
    T31,
    T42,
    T43,
    Sandwich,
    Identity,
    Conjecture,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
pub enum SuiteArg {
    All,
    Indices,
    Identities,
    Theorems,
}

impl From<TheoremArg> for Theorem {
    fn from(t: TheoremArg) -> Self {
        match t {
            TheoremArg::Hawaii => Theorem::Hawaii,
            TheoremArg::T21 => Theorem::T21,
            TheoremArg::T31 => Theorem::T31,
            TheoremArg::T42 => Theorem::T42,
            TheoremArg::T43 => Theorem::T43,
            TheoremArg::Sandwich => Theorem::Sandwich,
            TheoremArg::Identity => Theorem::Identity,
            TheoremArg::Conjecture => Theorem::Conjecture,
        }
    }
}

fn execute(command: &Command) -> CliResult<Rendered> {
    match command {
        Command::Analyze { poly, .. } => commands::analyze(&parse_nonconstant_polynomial(poly)?),
        Command::Index { num, den, interval, projective, method, .. } => {
            let num = parse_polynomial(num)?;
            let den = parse_nonzero_polynomial(den)?;
            let method = match method {
                MethodArg::Euclidean => IndexMethod::Euclidean,
                MethodArg::PerPole => IndexMethod::PerPole,
            };
            match interval {
                Some(ends) => {
                    let a = parse_extended(&ends[0])?;
                    let b = parse_extended(&ends[1])?;
                    commands::index(&num, &den, IndexScope::Interval(&a, &b), method)
                }
                None if *projective => commands::index(&num, &den, IndexScope::Projective, method),
                None => commands::index(&num, &den, IndexScope::Line, method),
            }
        }
        Command::Laguerre { poly, sigma, invert, .. } => {
            commands::laguerre(&parse_nonzero_polynomial(poly)?, &parse_rational(sigma)?, *invert)
        }
        Command::SigmaMin { poly, .. } => commands::sigma_min(&parse_nonconstant_polynomial(poly)?),
        Command::Verify { poly, theorem, sigma, lambda, .. } => {
            let p = parse_nonconstant_polynomial(poly)?;
            let sigma = sigma.as_deref().map(parse_rational).transpose()?;
            let lambda = lambda.as_deref().map(parse_rational).transpose()?;
            commands::verify(&p, (*theorem).into(), sigma.as_ref(), lambda.as_ref())
        }
        Command::Fuzz { degree, count, seed, suite, threads, .. } => {
            if *degree == 0 {
                return Err(CliError::Usage("--degree must be at least 1".into()));
            }
            let suite = match suite {
                SuiteArg::All => Suite::All,
                SuiteArg::Indices => Suite::Indices,
                SuiteArg::Identities => Suite::Identities,
                SuiteArg::Theorems => Suite::Theorems,
            };
            let run = || fuzz(*degree, *count, *seed, suite);
            let summary = match threads {
                Some(n) => rayon::ThreadPoolBuilder::new()
                    .num_threads(*n)
                    .build()
                    .map_err(|e| CliError::Usage(e.to_string()))?
                    .install(run),
                None => run(),
            };
            let violations: Vec<String> = summary
                .violations
                .iter()
                .map(|v| format!("instance {} ({}): {}: {}", v.instance, v.polynomial, v.check, v.message))
                .collect();
            let c = &summary.checks;
            let mut text = format!(
                "{count} instances, {} checks: {} verified, {} premise not met, {} inconclusive, {} violations\n",
                c.total(),
                c.verified,
                c.premise_not_met,
                c.inconclusive,
                c.violation
            );
            for v in &violations {
                text.push_str(&format!("VIOLATION {v}\n"));
            }
            let input = json!({ "degree": degree, "count": count, "seed": seed, "suite": suite });
            Ok(Rendered {
                report: Report {
                    command: "fuzz".into(),
                    input,
                    result: serde_json::to_value(&summary).expect("serializable"),
                    violations,
                    timing_ms: None,
                },
                text,
            })
        }
    }
}

fn output_flags(command: &Command) -> Output {
    match command {
        Command::Analyze { out, .. }
        | Command::Index { out, .. }
        | Command::Laguerre { out, .. }
        | Command::SigmaMin { out, .. }
        | Command::Verify { out, .. }
        | Command::Fuzz { out, .. } => *out,
    }
}

/// Parse `args` (including the program name), run, write to `out`/`err`,
/// and return the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(rendered.as_bytes());
            } else {
                let _ = out.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    let flags = output_flags(&cli.command);
    let start = Instant::now();
    let mut rendered = match execute(&cli.command) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    if !flags.no_timing {
        rendered.report.timing_ms = Some(start.elapsed().as_secs_f64() * 1000.0);
    }
    let written = if flags.json {
        serde_json::to_string_pretty(&rendered.report)
            .map_err(std::io::Error::other)
            .and_then(|s| writeln!(out, "{s}"))
    } else {
        out.write_all(rendered.text.as_bytes())
    };
    if written.is_err() {
        return 2;
    }
    rendered.report.exit_code()
}
