//! Command-line front-end.
//!
//! Exit codes: 0 = pass, 1 = inadmissible configuration, 2 = input error,
//! 3 = theorem-level verification failure.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use hp2_weights::config::ConfigFile;
use hp2_weights::data::FixedPointData;
use hp2_weights::errors::VerifierError;
use hp2_weights::hp2::{weights_from_params, Family, Hp2ActionParams};
use hp2_weights::localization::{pontryagin_report, PontryaginReport};
use hp2_weights::verifier::{admissible, classify, search, AdmissibilityReport, ClassifyOutcome};

const EXIT_PASS: u8 = 0;
const EXIT_INADMISSIBLE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_THEOREM: u8 = 3;

#[derive(Parser)]
#[command(
    name = "hp2w",
    about = "Exact verification of circle actions with three fixed points on 8-manifolds",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    Standard,
    Semi,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the admissibility pipeline and print the Pontryagin report.
    Check {
        path: PathBuf,
        /// Machine-readable output.
        #[arg(long)]
        json: bool,
    },
    /// Generate the fixed-point data of a family action.
    Hp2 {
        /// Raw family exponents k1,k2,k3 (any integers; requires --family).
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        k: Option<Vec<i64>>,
        /// Action family for --k.
        #[arg(long, value_enum)]
        family: Option<FamilyArg>,
        /// Doubled parameters d1,d2,d3 (strictly increasing, one parity).
        #[arg(long, value_delimiter = ',')]
        doubled: Option<Vec<u64>>,
    },
    /// Match a configuration against the two action families.
    Classify {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Exhaustively verify the classification up to a weight bound.
    Search {
        #[arg(long)]
        bound: u64,
        /// Write every admissible configuration with its match to a file.
        #[arg(long)]
        emit: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.cmd {
        Cmd::Check { path, json } => cmd_check(&path, json),
        Cmd::Hp2 { k, family, doubled } => cmd_hp2(k, family, doubled),
        Cmd::Classify { path, json } => cmd_classify(&path, json),
        Cmd::Search { bound, emit, json } => cmd_search(bound, emit.as_deref(), json),
    };
    ExitCode::from(code)
}

fn load_data(path: &Path) -> Result<FixedPointData, String> {
    let text =
        fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let cfg: ConfigFile = serde_json::from_str(&text)
        .map_err(|e| format!("{}: parse error at line {}, column {}: {e}", path.display(), e.line(), e.column()))?;
    cfg.to_data().map_err(|e| format!("{}: {e}", path.display()))
}

fn rational_string(r: &hp2_weights::ExactRational) -> String {
    r.to_string()
}

fn report_json(report: &AdmissibilityReport) -> serde_json::Value {
    json!({
        "admissible": report.passed,
        "checks": report.checks.iter().map(|c| json!({
            "name": c.name,
            "passed": c.passed,
            "detail": c.detail,
        })).collect::<Vec<_>>(),
    })
}

fn pontryagin_json(p: &PontryaginReport) -> serde_json::Value {
    json!({
        "unit_sum": rational_string(&p.unit_sum),
        "p1_sum": rational_string(&p.p1_sum),
        "p1_squared": rational_string(&p.p1_squared),
        "p2": rational_string(&p.p2),
        "signature_candidate": rational_string(&p.signature_candidate),
    })
}

fn print_report(report: &AdmissibilityReport) {
    for c in &report.checks {
        let mark = if c.passed { "PASS" } else { "FAIL" };
        println!("[{mark}] {:<24} {}", c.name, c.detail);
    }
    println!("admissible: {}", if report.passed { "yes" } else { "no" });
}

fn print_pontryagin(p: &PontryaginReport) {
    println!("unit_sum            = {}", p.unit_sum);
    println!("p1_sum              = {}", p.p1_sum);
    println!("p1^2                = {}", p.p1_squared);
    println!("p2                  = {}", p.p2);
    println!("signature_candidate = {}", p.signature_candidate);
}

fn cmd_check(path: &Path, json: bool) -> u8 {
    let data = match load_data(path) {
        Ok(d) => d,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INPUT;
        }
    };
    let report = match admissible(&data) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INPUT;
        }
    };
    let pont = pontryagin_report(&data).expect("admissible() already checked the dimension");
    if json {
        let mut value = report_json(&report);
        value["pontryagin"] = pontryagin_json(&pont);
        println!("{}", serde_json::to_string_pretty(&value).unwrap());
    } else {
        print_report(&report);
        print_pontryagin(&pont);
    }
    if report.passed {
        EXIT_PASS
    } else {
        EXIT_INADMISSIBLE
    }
}

fn cmd_hp2(k: Option<Vec<i64>>, family: Option<FamilyArg>, doubled: Option<Vec<u64>>) -> u8 {
    let params = match (k, family, doubled) {
        (None, None, Some(d)) if d.len() != 3 => {
            eprintln!("error: --doubled takes exactly three values, got {}", d.len());
            return EXIT_INPUT;
        }
        (Some(k), Some(_), None) if k.len() != 3 => {
            eprintln!("error: --k takes exactly three values, got {}", k.len());
            return EXIT_INPUT;
        }
        (None, None, Some(d)) => match Hp2ActionParams::new(d[0], d[1], d[2]) {
            Ok(p) => p,
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_INPUT;
            }
        },
        (Some(k), Some(family), None) => {
            // Arbitrary integer exponents are normalized by sorting the
            // absolute doubled values.
            let mut d: Vec<u64> = k
                .iter()
                .map(|&ki| match family {
                    FamilyArg::Standard => (2 * ki).unsigned_abs(),
                    FamilyArg::Semi => (1 + 2 * ki).unsigned_abs(),
                })
                .collect();
            d.sort_unstable();
            match Hp2ActionParams::new(d[0], d[1], d[2]) {
                Ok(p) => p,
                Err(e) => {
                    eprintln!("error: {e}");
                    return EXIT_INPUT;
                }
            }
        }
        _ => {
            eprintln!("error: pass either --doubled d1,d2,d3 or both --k k1,k2,k3 and --family");
            return EXIT_INPUT;
        }
    };
    let data = weights_from_params(&params);
    let cfg = ConfigFile::from_data(&data);
    println!("{}", serde_json::to_string_pretty(&cfg).unwrap());
    EXIT_PASS
}

fn cmd_classify(path: &Path, json: bool) -> u8 {
    let data = match load_data(path) {
        Ok(d) => d,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INPUT;
        }
    };
    match classify(&data) {
        Ok(ClassifyOutcome::Match(m)) => {
            let family = m.params.family();
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "matched": true,
                        "family": family.name(),
                        "doubled": [m.params.doubled().0, m.params.doubled().1, m.params.doubled().2],
                        "p": m.params.exponents_string(),
                        "role_permutation": m.role_permutation,
                        "case": format!("{:?}", m.case_label),
                    }))
                    .unwrap()
                );
            } else {
                let name = match family {
                    Family::Standard => "Standard",
                    Family::SemiInteger => "SemiInteger",
                };
                println!("{name}, p = {}", m.params.exponents_string());
                println!("doubled = {:?}", m.params.doubled());
                println!(
                    "role permutation (input index of q1, q2, q3): {:?}",
                    m.role_permutation
                );
                println!("case: {:?}", m.case_label);
            }
            EXIT_PASS
        }
        Ok(ClassifyOutcome::Inadmissible(report)) => {
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report_json(&report)).unwrap()
                );
            } else {
                print_report(&report);
            }
            EXIT_INADMISSIBLE
        }
        Err(VerifierError::TheoremViolation { detail }) => {
            eprintln!("THEOREM VIOLATION: {detail}");
            EXIT_THEOREM
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INPUT
        }
    }
}

fn cmd_search(bound: u64, emit: Option<&Path>, json: bool) -> u8 {
    let summary = match search(bound) {
        Ok(s) => s,
        Err(VerifierError::BoundTooSmall(b)) => {
            eprintln!("error: {}", VerifierError::BoundTooSmall(b));
            return EXIT_INPUT;
        }
        Err(VerifierError::TheoremViolation { detail }) => {
            eprintln!("THEOREM VIOLATION: {detail}");
            return EXIT_THEOREM;
        }
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INPUT;
        }
    };
    let families: Vec<&'static str> = summary
        .admissible_configs
        .iter()
        .map(|(_, m)| m.params.family().name())
        .collect();
    let standard = families.iter().filter(|f| **f == "standard").count();
    let semi = families.len() - standard;
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "bound": summary.bound,
                "admissible": summary.admissible_configs.len(),
                "standard": standard,
                "semi_integer": semi,
                "case_counts": summary.case_counts,
                "case3_b2_check": summary.case3_b2_check,
                "generated_set_equal": summary.generated_set_equal,
                "verified": summary.verified(),
            }))
            .unwrap()
        );
    } else {
        println!("bound: {}", summary.bound);
        println!(
            "admissible configurations: {} (standard: {standard}, semi-integer: {semi})",
            summary.admissible_configs.len()
        );
        println!(
            "case counts: case1={}, case2={}, case3={}",
            summary.case_counts[0], summary.case_counts[1], summary.case_counts[2]
        );
        println!(
            "strict case 3 absent: {}",
            if summary.case3_b2_check { "yes" } else { "no" }
        );
        println!(
            "generated set equality: {}",
            if summary.generated_set_equal { "yes" } else { "no" }
        );
        println!(
            "verification: {}",
            if summary.verified() { "PASS" } else { "FAIL" }
        );
    }
    if let Some(path) = emit {
        let entries: Vec<serde_json::Value> = summary
            .admissible_configs
            .iter()
            .map(|(cfg, m)| {
                json!({
                    "config": ConfigFile::from_data(cfg),
                    "family": m.params.family().name(),
                    "doubled": [m.params.doubled().0, m.params.doubled().1, m.params.doubled().2],
                    "p": m.params.exponents_string(),
                    "role_permutation": m.role_permutation,
                    "case": format!("{:?}", m.case_label),
                })
            })
            .collect();
        if let Err(e) = fs::write(path, serde_json::to_string_pretty(&entries).unwrap()) {
            eprintln!("error: {}: {e}", path.display());
            return EXIT_INPUT;
        }
    }
    if summary.verified() {
        EXIT_PASS
    } else {
        EXIT_THEOREM
    }
}
