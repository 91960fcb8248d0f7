//! `scatdet` command-line front end.
//!
//! Exit codes: 0 success, 1 a check failed, 2 bad arguments or input,
//! 3 evaluation at a singular point without `--germ`.

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use scatdet::divisor::{argument_principle_net, count_divisor, Rectangle};
use scatdet::report::{format_sci, to_json_string, ReportEnvelope};
use scatdet::scattering::{
    central_value, dirichlet_head, germ_at, phi_eval, ScatteringFamily, DEFAULT_GERM_DEPTH, MAX_GERM_DEPTH,
};
use scatdet::specfun::{log_gamma, HALF_LOG_TWO_PI};
use scatdet::superzeta::{regularized_det, superzeta_sum, ZeroSet};
use scatdet::surface::GroupDescriptor;
use scatdet::Error;
use serde::Serialize;
use serde_json::json;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "scatdet", version, about = "Scattering determinants and the sign of phi(1/2)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate phi(s), or its Laurent germ at a real point.
    PhiEval(PhiEvalArgs),
    /// Check phi(1/2) = (-1)^(N+P) sgn d(1).
    Verify(VerifyArgs),
    /// Real zeros and poles of phi right of 1/2, with the numeric cross-check.
    Divisor(DivisorArgs),
    /// Trivial-zero multiplicities, floor formula against sine sums (CSV).
    Multiplicities(MultiplicityArgs),
    /// Superzeta sums and the regularized product for a zero set.
    SuperzetaDemo(SuperzetaArgs),
}

#[derive(Args, Clone)]
struct FamilyArgs {
    /// modular | gamma0 | gamma0plus
    #[arg(long)]
    family: Option<String>,
    /// Comma-separated distinct primes, e.g. 2,3,5
    #[arg(long, value_delimiter = ',')]
    primes: Vec<u64>,
    /// Family as JSON: {"family": ..., "primes": [...]}
    #[arg(long, conflicts_with_all = ["family", "primes"])]
    family_json: Option<String>,
}

#[derive(Args)]
struct PhiEvalArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Point s as "re" or "re,im"
    #[arg(long, allow_hyphen_values = true)]
    s: String,
    /// Print the Laurent germ at the real point s instead of the value
    #[arg(long)]
    germ: bool,
    /// Number of germ coefficients
    #[arg(long, default_value_t = DEFAULT_GERM_DEPTH)]
    depth: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Run every family of the acceptance set
    #[arg(long, conflicts_with_all = ["family", "primes", "family_json"])]
    all: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct DivisorArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct MultiplicityArgs {
    /// Path to a descriptor JSON file {"genus", "cusps", "elliptic_orders"}
    #[arg(long, conflicts_with_all = ["genus", "cusps", "orders"])]
    descriptor: Option<std::path::PathBuf>,
    #[arg(long)]
    genus: Option<u32>,
    #[arg(long)]
    cusps: Option<u32>,
    /// Comma-separated elliptic orders
    #[arg(long, value_delimiter = ',')]
    orders: Vec<u32>,
    #[arg(long, default_value_t = 200)]
    n_max: u32,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SuperzetaArgs {
    /// Zero set as JSON: {"kind":"finite","zeros":[[re,im,mult],...]} or
    /// {"kind":"progression","start":x,"step":h} with h < 0
    #[arg(long, allow_hyphen_values = true)]
    zeros: String,
    /// Point z as "re" or "re,im"
    #[arg(long, allow_hyphen_values = true)]
    z: String,
    /// Terms kept in the sums over a progression
    #[arg(long, default_value_t = 1000)]
    cutoff: usize,
    #[arg(long)]
    json: bool,
}

enum Failure {
    Usage(String),
    Check(String),
    Singular(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Singularity(_) => Failure::Singular(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type CliResult = Result<(), Failure>;

fn parse_complex(text: &str) -> Result<Complex64, Failure> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let num = |p: &str| {
        p.parse::<f64>()
            .ok()
            .filter(|v| v.is_finite())
            .ok_or_else(|| Failure::Usage(format!("cannot parse {text:?} as re[,im]")))
    };
    match parts.as_slice() {
        [re] => Ok(Complex64::new(num(re)?, 0.0)),
        [re, im] => Ok(Complex64::new(num(re)?, num(im)?)),
        _ => Err(Failure::Usage(format!("cannot parse {text:?} as re[,im]"))),
    }
}

fn family_from(args: &FamilyArgs) -> Result<ScatteringFamily, Failure> {
    if let Some(text) = &args.family_json {
        return serde_json::from_str(text).map_err(|e| Failure::Usage(format!("family JSON: {e}")));
    }
    let kind = args
        .family
        .as_deref()
        .ok_or_else(|| Failure::Usage("one of --family or --family-json is required".into()))?;
    Ok(ScatteringFamily::from_parts(kind, args.primes.clone())?)
}

fn emit<T: Serialize>(command: &str, input: serde_json::Value, result: &T, tolerances: &str) -> CliResult {
    let env = ReportEnvelope::new(command, input, result, tolerances);
    let text = to_json_string(&env).map_err(|e| Failure::Usage(e.to_string()))?;
    println!("{text}");
    Ok(())
}

fn complex_text(v: Complex64) -> String {
    format!("{} {} {}i", format_sci(v.re), if v.im < 0.0 { '-' } else { '+' }, format_sci(v.im.abs()))
}

fn phi_eval_cmd(a: PhiEvalArgs) -> CliResult {
    let family = family_from(&a.family)?;
    let s = parse_complex(&a.s)?;
    let input = json!({ "family": family, "s": [s.re, s.im], "germ": a.germ });
    if a.germ {
        if s.im != 0.0 {
            return Err(Failure::Usage("--germ needs a real point s".into()));
        }
        if !(3..=MAX_GERM_DEPTH).contains(&a.depth) {
            return Err(Failure::Usage(format!("--depth must lie in 3..={MAX_GERM_DEPTH}")));
        }
        let germ = germ_at(&family, s.re, a.depth)?;
        if a.json {
            return emit("phi-eval", input, &germ, "germ: Cauchy-circle coefficients, 64 nodes");
        }
        match germ.value() {
            Some(v) => println!("order 0, value {v:.12}"),
            None => println!("order {}, leading coefficient {:.12}", germ.order, germ.leading()),
        }
        println!(
            "coefficients: {}",
            germ.coeffs.iter().map(|c| format_sci(*c)).collect::<Vec<_>>().join(" ")
        );
        return Ok(());
    }
    let v = phi_eval(&family, s)?;
    if a.json {
        return emit("phi-eval", input, &v, "relative 1e-9 away from singular points");
    }
    println!("phi({}) = {}", complex_text(s), complex_text(v));
    Ok(())
}

#[derive(Serialize)]
struct VerifyRow {
    family: String,
    zeros: u32,
    poles: u32,
    sgn_d1: i32,
    predicted: i32,
    germ_value: f64,
    extrapolated_value: f64,
    matches: bool,
}

fn verify_row(family: &ScatteringFamily) -> Result<VerifyRow, Failure> {
    let divisor = count_divisor(family)?;
    let head = dirichlet_head(family, 1)?;
    let central = central_value(family)?;
    Ok(VerifyRow {
        family: family.to_string(),
        zeros: divisor.zeros,
        poles: divisor.poles,
        sgn_d1: if head.d1 < 0.0 { -1 } else { 1 },
        predicted: central.predicted_sign,
        germ_value: central.germ_value,
        extrapolated_value: central.extrapolated_value,
        matches: central.matches,
    })
}

fn verify_cmd(a: VerifyArgs) -> CliResult {
    let families = if a.all { ScatteringFamily::standard_set() } else { vec![family_from(&a.family)?] };
    let rows = families.iter().map(verify_row).collect::<Result<Vec<_>, _>>()?;
    if a.json {
        let input = json!({ "families": families, "all": a.all });
        emit("verify", input, &rows, "germ 1e-6, extrapolation 1e-4")?;
    } else {
        println!(
            "{:<14} {:>3} {:>3} {:>6} {:>9} {:>20} {:>20} {:>6}",
            "family", "N", "P", "sgn_d1", "predicted", "germ", "extrapolated", "match"
        );
        for r in &rows {
            println!(
                "{:<14} {:>3} {:>3} {:>6} {:>9} {:>20} {:>20} {:>6}",
                r.family,
                r.zeros,
                r.poles,
                r.sgn_d1,
                r.predicted,
                format_sci(r.germ_value),
                format_sci(r.extrapolated_value),
                if r.matches { "yes" } else { "NO" }
            );
        }
    }
    match rows.iter().find(|r| !r.matches) {
        Some(r) => {
            Err(Failure::Check(format!("{}: central value does not match the predicted sign", r.family)))
        }
        None => Ok(()),
    }
}

#[derive(Serialize)]
struct DivisorReport {
    divisor: scatdet::divisor::DivisorCount,
    rectangle: Rectangle,
    winding: i64,
    winding_residual: f64,
}

fn divisor_cmd(a: DivisorArgs) -> CliResult {
    let family = family_from(&a.family)?;
    let divisor = count_divisor(&family)?;
    let rectangle = Rectangle::standard();
    let w = argument_principle_net(&family, &rectangle)?;
    let agree = w.net == divisor.net();
    if a.json {
        let report = DivisorReport { divisor, rectangle, winding: w.net, winding_residual: w.residual };
        emit("divisor", json!({ "family": family }), &report, "winding residual 1e-3")?;
    } else {
        println!("{family}: N = {}, P = {}", divisor.zeros, divisor.poles);
        println!("{:>10} {:>6}  source", "location", "order");
        for e in &divisor.breakdown {
            println!("{:>10.6} {:>6}  {}", e.location, e.order, e.source);
        }
        for j in &divisor.justifications {
            println!("  - {j}");
        }
        println!(
            "winding on [{}, {}] x [{}, {}]: {} (residual {:.1e}), ledger N - P = {}",
            rectangle.re_min,
            rectangle.re_max,
            rectangle.im_min,
            rectangle.im_max,
            w.net,
            w.residual,
            divisor.net()
        );
    }
    if agree {
        Ok(())
    } else {
        Err(Failure::Check("winding number disagrees with the ledger".into()))
    }
}

fn multiplicities_cmd(a: MultiplicityArgs) -> CliResult {
    if a.n_max > 10_000 {
        return Err(Failure::Usage("--n-max must not exceed 10000".into()));
    }
    let desc = match &a.descriptor {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            serde_json::from_str::<GroupDescriptor>(&text)
                .map_err(|e| Failure::Usage(format!("descriptor: {e}")))?
        }
        None => match (a.genus, a.cusps) {
            (Some(g), Some(c)) => GroupDescriptor::new(g, c, a.orders.clone())?,
            (None, None) if a.orders.is_empty() => GroupDescriptor::modular(),
            _ => return Err(Failure::Usage("give --descriptor, or both --genus and --cusps".into())),
        },
    };
    let rows: Vec<_> = (0..=a.n_max).map(|n| desc.multiplicity_report(n)).collect();
    if a.json {
        let input = json!({ "descriptor": desc, "n_max": a.n_max });
        emit("multiplicities", input, &rows, "agree: |floor - sine| < 1e-8")?;
    } else {
        println!("n,floor_formula,sine_formula,agree");
        for r in &rows {
            println!("{},{},{},{}", r.n, r.floor_formula, format_sci(r.sine_formula), r.agree);
        }
    }
    match rows.iter().find(|r| !r.agree) {
        Some(r) => Err(Failure::Check(format!("formulas disagree at n = {}", r.n))),
        None => Ok(()),
    }
}

#[derive(Serialize)]
struct SuperzetaReport {
    samples: Vec<(f64, Complex64, f64)>,
    determinant: Complex64,
    cross_check_name: String,
    cross_check: Complex64,
    cross_check_pass: bool,
}

fn superzeta_cmd(a: SuperzetaArgs) -> CliResult {
    let zs: ZeroSet = serde_json::from_str(&a.zeros).map_err(|e| Failure::Usage(format!("zero set: {e}")))?;
    let z = parse_complex(&a.z)?;
    zs.check_domain(z)?;
    let samples = [3.0, 4.0, 6.0]
        .iter()
        .map(|&s| {
            superzeta_sum(&zs, Complex64::new(s, 0.0), z, a.cutoff).map(|v| (s, v.value, v.error_estimate))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let determinant = regularized_det(&zs, z)?;
    let (name, oracle, tol) = match &zs {
        ZeroSet::Finite(zeros) => (
            "direct product",
            zeros.iter().fold(Complex64::new(1.0, 0.0), |acc, (y, m)| acc * (z - y).powi(*m as i32)),
            1e-12,
        ),
        ZeroSet::Progression { start, step } => {
            // Lerch: d^{½ − a} √(2π) / Γ(a), a = (z − start)/d
            let d = -step;
            let a = (z - start) / d;
            let log = (0.5 - a) * d.ln() + HALF_LOG_TWO_PI - log_gamma(a)?;
            ("Lerch formula", log.exp(), 1e-8)
        }
    };
    let pass = (determinant - oracle).norm() <= tol * oracle.norm().max(1.0);
    if a.json {
        let report = SuperzetaReport {
            samples,
            determinant,
            cross_check_name: name.to_string(),
            cross_check: oracle,
            cross_check_pass: pass,
        };
        emit(
            "superzeta-demo",
            json!({ "zeros": zs, "z": [z.re, z.im] }),
            &report,
            "finite 1e-12, Lerch 1e-8",
        )?;
    } else {
        for (s, v, err) in &samples {
            println!("Z({s}, z) = {} (tail error ~ {:.1e})", complex_text(*v), err);
        }
        println!("D(z) = {}", complex_text(determinant));
        println!("{name}: {} [{}]", complex_text(oracle), if pass { "pass" } else { "FAIL" });
    }
    if pass {
        Ok(())
    } else {
        Err(Failure::Check(format!("{name} cross-check failed")))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::PhiEval(a) => phi_eval_cmd(a),
        Command::Verify(a) => verify_cmd(a),
        Command::Divisor(a) => divisor_cmd(a),
        Command::Multiplicities(a) => multiplicities_cmd(a),
        Command::SuperzetaDemo(a) => superzeta_cmd(a),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Singular(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
