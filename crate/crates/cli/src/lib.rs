//! Command-line surface for `irredcert`.
//!
//! Exit codes: 0 certificate found or valid, 1 no certificate, 2 input error
//! or invalid certificate, 3 effort budget exhausted.

use std::io::{self, Read, Write};

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{json, Value};

use irredcert::acceptance::run_all;
use irredcert::bivariate::{irreducibility_certificate, linear_y_factor_test, theorem4_bound};
use irredcert::certificates::{auto_bound, theorem3_digits_bound, verify, SearchOptions};
use irredcert::expr::{parse_bipoly, parse_int_poly, parse_rat_poly, parse_rational, ParsedPoly};
use irredcert::newton::{newton_polygon, theorem5_bound};
use irredcert::oracle::factor_poly;
use irredcert::{Certificate, Config, Error, DEFAULT_SEED};

pub const EXIT_FOUND: i32 = 0;
pub const EXIT_NONE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_EFFORT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "irredcert", version, about = "Certified bounds on the number of irreducible factors of a polynomial")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Seed for randomized primality and factoring steps
    #[arg(long, global = true, env = "IRREDCERT_SEED", default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Rho iterations per composite cofactor; the oracle gets five times as many candidates
    #[arg(long, global = true)]
    effort: Option<u64>,
    /// Print JSON instead of text
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Search evaluation points for the smallest factor-count bound
    Bound {
        poly: String,
        /// Number of m values scanned above the height threshold
        #[arg(long, default_value_t = 100)]
        m_offset: u64,
        /// Largest unitary divisor d tried at each m
        #[arg(long)]
        d_max: Option<BigInt>,
        /// Also scan the reciprocal polynomial
        #[arg(long)]
        reciprocal: bool,
    },
    /// Re-validate a certificate read from a file, or from stdin when the path is `-`
    Certify { path: String },
    /// Bound for the polynomial whose coefficients are the base-b digits of N
    Digits {
        #[arg(long, default_value = "10")]
        base: BigInt,
        n: BigInt,
    },
    /// Substitution, Newton polygon and linear-factor checks for f(x, y)
    Bivariate {
        poly: String,
        /// Polynomial a(x) substituted for y
        #[arg(long)]
        subst: Option<String>,
        /// Base rho > 1 of the height
        #[arg(long, default_value = "2")]
        rho: String,
    },
    /// Newton polygon of f(x, y) as JSON
    Np { poly: String },
    /// Factor a univariate polynomial over the integers
    Factor { poly: String },
    /// Run the acceptance suite
    Selftest,
}

fn config(g: &Global) -> Config {
    let mut cfg = Config::default().with_seed(g.seed);
    if let Some(effort) = g.effort {
        cfg.rho_iterations = effort;
        cfg.oracle_budget = effort.saturating_mul(5);
    }
    cfg
}

fn exit_code(e: &Error) -> i32 {
    if e.is_effort_exhausted() {
        EXIT_EFFORT
    } else {
        EXIT_INPUT
    }
}

fn summary(cert: &Certificate) -> String {
    let mut out = format!(
        "{}: {} <= {} for {}",
        cert.theorem,
        match cert.bound_kind {
            irredcert::BoundKind::FactorCount => "irreducible factors",
            irredcert::BoundKind::FactorDegree => "degree of some factor",
        },
        cert.bound,
        cert.poly
    );
    let w = &cert.witnesses;
    let mut parts = Vec::new();
    if let Some(m) = &w.m {
        parts.push(format!("m = {m}"));
    }
    if let Some(d) = &w.d {
        parts.push(format!("d = {d}"));
    }
    if let Some(p) = &w.p {
        parts.push(format!("p = {p}"));
    }
    if w.reciprocal {
        parts.push("reciprocal".into());
    }
    if let Some(fz) = &w.value_factorization {
        parts.push(format!("value = {fz}"));
    }
    if let Some(a) = &w.subst {
        parts.push(format!("y = {a}"));
    }
    if !parts.is_empty() {
        out.push_str(&format!(" ({})", parts.join(", ")));
    }
    if cert.vacuous {
        out.push_str(" [vacuous]");
    }
    for d in &cert.diagnostics {
        out.push_str(&format!("\n  note: {d}"));
    }
    out
}

struct Report {
    code: i32,
    json: Value,
    text: String,
}

fn cert_report(cert: Option<Certificate>, diagnostics: Vec<String>) -> Report {
    match cert {
        Some(cert) => Report {
            code: EXIT_FOUND,
            json: serde_json::to_value(&cert).expect("serializable"),
            text: summary(&cert),
        },
        None => Report {
            code: EXIT_NONE,
            json: json!({ "certificate": null, "diagnostics": diagnostics }),
            text: std::iter::once("no certificate found".to_string())
                .chain(diagnostics.iter().map(|d| format!("  note: {d}")))
                .collect::<Vec<_>>()
                .join("\n"),
        },
    }
}

fn read_source(path: &str) -> irredcert::Result<String> {
    let mut text = String::new();
    let res = if path == "-" {
        io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| Error::InvalidArgument(format!("{path}: {e}")))?;
    Ok(text)
}

fn optional<T>(r: irredcert::Result<T>) -> irredcert::Result<Result<T, String>> {
    match r {
        Err(e) if e.is_effort_exhausted() => Err(e),
        Err(e) => Ok(Err(e.to_string())),
        Ok(v) => Ok(Ok(v)),
    }
}

fn cert_value(c: &Result<Option<Certificate>, String>) -> Value {
    match c {
        Ok(Some(c)) => serde_json::to_value(c).expect("serializable"),
        Ok(None) => Value::Null,
        Err(e) => json!({ "error": e }),
    }
}

fn cert_text(name: &str, c: &Result<Option<Certificate>, String>) -> String {
    match c {
        Ok(Some(c)) => format!("{name}: {}", summary(c)),
        Ok(None) => format!("{name}: not applicable"),
        Err(e) => format!("{name}: {e}"),
    }
}

fn bivariate(poly: &str, subst: Option<&str>, rho: &str, cfg: &Config) -> irredcert::Result<Report> {
    let f = parse_bipoly(poly)?;
    let rho = parse_rational(rho)?;
    let t4 = match subst {
        Some(a) => optional(theorem4_bound(&f, &parse_rat_poly(a)?, &rho, cfg).map(Some))?,
        None => Ok(None),
    };
    let t5 = optional(theorem5_bound(&f))?;
    let linear = optional(linear_y_factor_test(&f, cfg))?;
    let verdict = optional(irreducibility_certificate(&f, cfg))?;
    let found = [&t4, &t5, &verdict].iter().any(|c| matches!(c, Ok(Some(_))));
    let linear_json = match &linear {
        Ok(g) => g.as_ref().map_or(Value::Null, |g| Value::String(g.to_string())),
        Err(e) => json!({ "error": e }),
    };
    let linear_text = match &linear {
        Ok(Some(g)) => format!("factor linear in y: {g}"),
        Ok(None) => "factor linear in y: none".to_string(),
        Err(e) => format!("factor linear in y: {e}"),
    };
    Ok(Report {
        code: if found { EXIT_FOUND } else { EXIT_NONE },
        json: json!({
            "poly": f.to_string(),
            "substitution": cert_value(&t4),
            "newton_polygon": cert_value(&t5),
            "linear_factor": linear_json,
            "irreducible": cert_value(&verdict),
        }),
        text: [
            cert_text("substitution", &t4),
            cert_text("newton polygon", &t5),
            linear_text,
            cert_text("irreducible", &verdict),
        ]
        .join("\n"),
    })
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> irredcert::Result<Report> {
    let cfg = config(&cli.global);
    match &cli.command {
        Command::Bound {
            poly,
            m_offset,
            d_max,
            reciprocal,
        } => {
            let f = parse_int_poly(poly)?;
            let opts = SearchOptions {
                m_offset: *m_offset,
                use_reciprocal: *reciprocal,
                d_max: d_max.clone(),
                ..SearchOptions::default()
            };
            let outcome = auto_bound(&f, &opts, &cfg)?;
            Ok(cert_report(outcome.best, outcome.diagnostics))
        }
        Command::Certify { path } => {
            let cert = Certificate::from_json(&read_source(path)?)?;
            verify(&cert, &cfg)?;
            Ok(Report {
                code: EXIT_FOUND,
                json: json!({ "valid": true, "certificate": cert }),
                text: format!("valid\n{}", summary(&cert)),
            })
        }
        Command::Digits { base, n } => {
            let (f, cert) = theorem3_digits_bound(n, base, &cfg)?;
            let mut report = cert_report(Some(cert), Vec::new());
            report.text = format!("digit polynomial: {f}\n{}", report.text);
            Ok(report)
        }
        Command::Bivariate { poly, subst, rho } => bivariate(poly, subst.as_deref(), rho, &cfg),
        Command::Np { poly } => {
            let polygon = newton_polygon(&parse_bipoly(poly)?)?.to_json();
            Ok(Report {
                code: EXIT_FOUND,
                text: serde_json::to_string(&polygon).expect("serializable"),
                json: polygon,
            })
        }
        Command::Factor { poly } => {
            let f = match irredcert::expr::parse_poly(poly)? {
                ParsedPoly::Univariate(f) => f,
                ParsedPoly::Bivariate(_) => return Err(Error::InvalidArgument("factor takes a polynomial in x".into())),
            };
            let fz = factor_poly(&f, &cfg)?;
            Ok(Report {
                code: EXIT_FOUND,
                json: json!({
                    "poly": f.to_string(),
                    "content": fz.content.to_string(),
                    "factors": fz.factors.iter().map(|(g, e)| json!({ "factor": g.to_string(), "multiplicity": e })).collect::<Vec<_>>(),
                    "count": fz.count(),
                }),
                text: format!("{fz}\nirreducible factors: {}", fz.count()),
            })
        }
        Command::Selftest => {
            let reports = run_all(&cfg);
            for r in &reports {
                if !cli.global.json {
                    writeln!(out, "{r}").ok();
                }
            }
            let passed = reports.iter().all(|r| r.passed);
            Ok(Report {
                code: if passed { EXIT_FOUND } else { EXIT_NONE },
                json: json!(reports
                    .iter()
                    .map(|r| json!({ "id": r.id, "title": r.title, "passed": r.passed, "details": r.details }))
                    .collect::<Vec<_>>()),
                text: format!(
                    "{} of {} criteria passed",
                    reports.iter().filter(|r| r.passed).count(),
                    reports.len()
                ),
            })
        }
    }
}

/// Runs the command line `argv` (program name first) and returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_FOUND };
            let text = e.render().to_string();
            if e.use_stderr() {
                write!(err, "{text}").ok();
            } else {
                write!(out, "{text}").ok();
            }
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(report) => {
            if cli.global.json {
                writeln!(out, "{}", serde_json::to_string_pretty(&report.json).expect("serializable")).ok();
            } else {
                writeln!(out, "{}", report.text).ok();
            }
            report.code
        }
        Err(e) => {
            writeln!(err, "error: {e}").ok();
            exit_code(&e)
        }
    }
}
