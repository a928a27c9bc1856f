//! Command-line front door: `design`, `verify`, `bound`, `sweep`,
//! `reliability` and `export-dot` subcommands with machine-readable output.
//!
//! Exit codes: 0 ok, 1 usage or I/O error, 2 negative verification,
//! 3 enumeration budget exceeded, 4 infeasible parameters.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::Ratio;
use serde::Serialize;

use crate::bounds::{curve_rows, BoundsError, Rational};
use crate::designer::{design, DesignError, DesignParams, StrategyKind};
use crate::graph::TwoLayerNetwork;
use crate::reliability::{
    closed_form_mean_connectivity, infer_strategy, monte_carlo_mean_connectivity, FailureModel,
    ReliabilityError,
};
use crate::robustness::sweep_k2;
use crate::verifier::{
    is_resistant_bruteforce, is_resistant_mincut, ResistanceReport, VerifierError, VerifyMethod,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_NOT_RESISTANT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_INFEASIBLE: i32 = 4;

/// Thread cap honored by the binary: unset or 0 means automatic.
pub const THREADS_ENV_VAR: &str = "RESISTNET_THREADS";

#[derive(Parser, Debug)]
#[command(
    name = "resistnet",
    version,
    about = "Minimum-cost two-layer networks resistant to heterogeneous link-removal attacks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Select, build and verify the minimum-cost resistant design.
    Design {
        #[arg(long)]
        n1: u32,
        #[arg(long)]
        n2: u32,
        #[arg(long)]
        k1: u32,
        #[arg(long)]
        k2: u32,
        /// Cost per protected link ("5", "3.15" or "11/2").
        #[arg(long, value_parser = parse_ratio)]
        cp: Rational,
        /// Cost per non-protected link.
        #[arg(long, value_parser = parse_ratio)]
        cnp: Rational,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// Check a stored network for (k1, k2)-resistance.
    Verify {
        #[arg(long)]
        network: PathBuf,
        #[arg(long)]
        k1: u32,
        #[arg(long)]
        k2: u32,
        #[arg(long, value_enum, default_value_t = MethodArg::Mincut)]
        method: MethodArg,
        /// Subset-enumeration ceiling for the brute-force method.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Emit the lower-bound curve as CSV over every protected budget.
    Bound {
        #[arg(long)]
        n1: u32,
        #[arg(long)]
        n2: u32,
        #[arg(long)]
        k1: u32,
        #[arg(long)]
        k2: u32,
    },
    /// Design across a range of k2 values; CSV, one row per k2.
    Sweep {
        #[arg(long)]
        n1: u32,
        #[arg(long)]
        n2: u32,
        #[arg(long)]
        k1: u32,
        #[arg(long, value_parser = parse_ratio)]
        cp: Rational,
        #[arg(long, value_parser = parse_ratio)]
        cnp: Rational,
        #[arg(long = "k2-from")]
        k2_from: u32,
        #[arg(long = "k2-to")]
        k2_to: u32,
    },
    /// Estimate mean connectivity under random link failures.
    Reliability {
        #[arg(long)]
        network: PathBuf,
        #[arg(long)]
        kappa: f64,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        k1: u32,
        #[arg(long)]
        k2: u32,
        /// Shape for the closed-form column; inferred from the protected
        /// budget when omitted.
        #[arg(long, value_enum)]
        strategy: Option<StrategyArg>,
    },
    /// Render a stored network as GraphViz DOT.
    ExportDot {
        #[arg(long)]
        network: PathBuf,
        /// Output path; stdout when omitted.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum OutputFormat {
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum MethodArg {
    Mincut,
    Brute,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum StrategyArg {
    S0,
    Sn2m1,
    Snm1,
}

impl From<StrategyArg> for StrategyKind {
    fn from(arg: StrategyArg) -> Self {
        match arg {
            StrategyArg::S0 => StrategyKind::S0,
            StrategyArg::Sn2m1 => StrategyKind::SN2M1,
            StrategyArg::Snm1 => StrategyKind::SNM1,
        }
    }
}

/// Exact rational flag: "num/den", an integer, or a decimal with at most six
/// fractional digits (converted over a power-of-ten denominator).
pub fn parse_ratio(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let num: i64 = num.trim().parse().map_err(|_| format!("bad numerator in '{s}'"))?;
        let den: i64 = den.trim().parse().map_err(|_| format!("bad denominator in '{s}'"))?;
        if den == 0 {
            return Err(format!("zero denominator in '{s}'"));
        }
        return Ok(Ratio::new(num, den));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.len() > 6 {
            return Err(format!("'{s}' has more than 6 fractional digits"));
        }
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!("bad decimal '{s}'"));
        }
        let negative = int.starts_with('-');
        let int: i64 = if int == "-" || int.is_empty() {
            0
        } else {
            int.parse().map_err(|_| format!("bad decimal '{s}'"))?
        };
        let scale = 10i64.pow(frac.len() as u32);
        let frac: i64 = frac.parse().map_err(|_| format!("bad decimal '{s}'"))?;
        let magnitude = int.unsigned_abs() as i64 * scale + frac;
        let signed = if negative || int < 0 { -magnitude } else { magnitude };
        return Ok(Ratio::new(signed, scale));
    }
    let int: i64 = s.parse().map_err(|_| format!("'{s}' is not a rational"))?;
    Ok(Ratio::from_integer(int))
}

#[derive(Serialize)]
struct VerifyJson {
    resistant: bool,
    condition_a_ok: bool,
    condition_b_ok: bool,
    method: &'static str,
    witness: Option<Vec<(u32, u32)>>,
}

impl VerifyJson {
    fn from_report(report: &ResistanceReport) -> Self {
        Self {
            resistant: report.resistant,
            condition_a_ok: report.condition_a_ok,
            condition_b_ok: report.condition_b_ok,
            method: match report.method {
                VerifyMethod::MinCut => "mincut",
                VerifyMethod::BruteForce => "brute",
            },
            witness: report
                .witness_attack
                .as_ref()
                .map(|w| w.iter().map(|&(u, v)| (u.0, v.0)).collect()),
        }
    }
}

/// Dispatches a parsed command, writing its output to `out`. Returns the
/// process exit code; error text goes to stderr.
pub fn run<W: Write>(cli: Cli, out: &mut W) -> i32 {
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            failure.code
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Self { code, message: message.into() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::new(EXIT_USAGE, e.to_string())
    }
}

impl From<DesignError> for Failure {
    fn from(e: DesignError) -> Self {
        let code = match &e {
            DesignError::Internal(_) => EXIT_USAGE,
            DesignError::Verifier(VerifierError::BudgetExceeded { .. }) => EXIT_BUDGET,
            _ => EXIT_INFEASIBLE,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<VerifierError> for Failure {
    fn from(e: VerifierError) -> Self {
        let code = match &e {
            VerifierError::BudgetExceeded { .. } => EXIT_BUDGET,
            _ => EXIT_INFEASIBLE,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<BoundsError> for Failure {
    fn from(e: BoundsError) -> Self {
        Failure::new(EXIT_INFEASIBLE, e.to_string())
    }
}

impl From<ReliabilityError> for Failure {
    fn from(e: ReliabilityError) -> Self {
        let code = match &e {
            ReliabilityError::Verifier(VerifierError::BudgetExceeded { .. }) => EXIT_BUDGET,
            _ => EXIT_INFEASIBLE,
        };
        Failure::new(code, e.to_string())
    }
}

fn load_network(path: &PathBuf) -> Result<TwoLayerNetwork, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::new(EXIT_USAGE, format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Failure::new(EXIT_USAGE, format!("bad network file {}: {e}", path.display())))
}

fn execute<W: Write>(command: Command, out: &mut W) -> Result<i32, Failure> {
    match command {
        Command::Design { n1, n2, k1, k2, cp, cnp, format } => {
            let params = DesignParams::new(n1, n2, k1, k2, cp, cnp)?;
            let result = design(&params)?;
            match format {
                OutputFormat::Json => {
                    let json = serde_json::to_string(&result.report())
                        .map_err(|e| Failure::new(EXIT_USAGE, e.to_string()))?;
                    writeln!(out, "{json}")?;
                }
                OutputFormat::Dot => {
                    write!(out, "{}", result.network.to_dot())?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Verify { network, k1, k2, method, budget } => {
            let net = load_network(&network)?;
            let report = match method {
                MethodArg::Mincut => is_resistant_mincut(&net, k1, k2)?,
                MethodArg::Brute => is_resistant_bruteforce(&net, k1, k2, budget)?,
            };
            let json = serde_json::to_string(&VerifyJson::from_report(&report))
                .map_err(|e| Failure::new(EXIT_USAGE, e.to_string()))?;
            writeln!(out, "{json}")?;
            Ok(if report.resistant { EXIT_OK } else { EXIT_NOT_RESISTANT })
        }
        Command::Bound { n1, n2, k1, k2 } => {
            writeln!(out, "p,phi_numerator,phi_denominator,ceil_phi,segment_label")?;
            for row in curve_rows(n1, n2, k1, k2)? {
                writeln!(
                    out,
                    "{},{},{},{},{}",
                    row.p,
                    row.phi.numer(),
                    row.phi.denom(),
                    row.min_links,
                    row.segment
                )?;
            }
            Ok(EXIT_OK)
        }
        Command::Sweep { n1, n2, k1, cp, cnp, k2_from, k2_to } => {
            if k2_from > k2_to {
                return Err(Failure::new(
                    EXIT_USAGE,
                    format!("--k2-from {k2_from} exceeds --k2-to {k2_to}"),
                ));
            }
            let values: Vec<u32> = (k2_from..=k2_to).collect();
            let rows = sweep_k2(n1, n2, k1, cp, cnp, &values);
            writeln!(out, "k2,strategy,p,m,cost_num,cost_den")?;
            let mut any_ok = false;
            for row in &rows {
                match &row.outcome {
                    Ok(entry) => {
                        any_ok = true;
                        writeln!(
                            out,
                            "{},{},{},{},{},{}",
                            row.k2,
                            entry.strategy.as_str(),
                            entry.p,
                            entry.m,
                            entry.cost.numer(),
                            entry.cost.denom()
                        )?;
                    }
                    Err(message) => {
                        eprintln!("sweep: k2={}: {message}", row.k2);
                        writeln!(out, "{},error,,,,", row.k2)?;
                    }
                }
            }
            Ok(if any_ok { EXIT_OK } else { EXIT_INFEASIBLE })
        }
        Command::Reliability { network, kappa, trials, seed, k1, k2, strategy } => {
            let net = load_network(&network)?;
            let model = FailureModel::new(kappa, trials, seed)?;
            let shape: Option<StrategyKind> =
                strategy.map(Into::into).or_else(|| infer_strategy(&net));
            let closed = match shape {
                Some(kind) => Some(closed_form_mean_connectivity(
                    net.n1(),
                    net.n2(),
                    k1,
                    k2,
                    kind,
                    kappa,
                )?),
                None => None,
            };
            let mc = monte_carlo_mean_connectivity(&net, &model, k1, k2)?;
            writeln!(out, "kappa,closed_form,mc_estimate,mc_halfwidth,trials,seed")?;
            let closed_text = closed.map_or(String::new(), |v| v.to_string());
            writeln!(
                out,
                "{},{},{},{},{},{}",
                kappa, closed_text, mc.estimate, mc.half_width, mc.trials, mc.seed
            )?;
            Ok(EXIT_OK)
        }
        Command::ExportDot { network, output } => {
            let net = load_network(&network)?;
            let dot = net.to_dot();
            match output {
                Some(path) => fs::write(&path, dot).map_err(|e| {
                    Failure::new(EXIT_USAGE, format!("cannot write {}: {e}", path.display()))
                })?,
                None => write!(out, "{dot}")?,
            }
            Ok(EXIT_OK)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational {
        Ratio::new(n, d)
    }

    #[test]
    fn ratio_parsing_accepts_the_three_forms() {
        assert_eq!(parse_ratio("5").unwrap(), rat(5, 1));
        assert_eq!(parse_ratio("11/2").unwrap(), rat(11, 2));
        assert_eq!(parse_ratio("3.15").unwrap(), rat(63, 20));
        assert_eq!(parse_ratio("0.000001").unwrap(), rat(1, 1_000_000));
        assert_eq!(parse_ratio("-2.5").unwrap(), rat(-5, 2));
        assert_eq!(parse_ratio(" 7 ").unwrap(), rat(7, 1));
    }

    #[test]
    fn ratio_parsing_rejects_garbage() {
        assert!(parse_ratio("1.2345678").is_err());
        assert!(parse_ratio("3/0").is_err());
        assert!(parse_ratio("one").is_err());
        assert!(parse_ratio("1.").is_err());
        assert!(parse_ratio("1.2e3").is_err());
    }

    #[test]
    fn design_command_writes_report_json() {
        let cli = Cli::try_parse_from([
            "resistnet", "design", "--n1", "20", "--n2", "5", "--k1", "5", "--k2", "9", "--cp",
            "5", "--cnp", "1",
        ])
        .unwrap();
        let mut out = Vec::new();
        assert_eq!(run(cli, &mut out), EXIT_OK);
        let text = String::from_utf8(out).unwrap();
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(value["strategy"], "SN2M1");
        assert_eq!(value["p"], 4);
        assert_eq!(value["m"], 63);
        assert_eq!(value["optimal_claimed"], true);
    }

    #[test]
    fn infeasible_parameters_exit_with_code_4() {
        let cli = Cli::try_parse_from([
            "resistnet", "design", "--n1", "2", "--n2", "1", "--k1", "3", "--k2", "1", "--cp",
            "2", "--cnp", "1",
        ])
        .unwrap();
        let mut out = Vec::new();
        assert_eq!(run(cli, &mut out), EXIT_INFEASIBLE);
        assert!(out.is_empty());
    }
}
