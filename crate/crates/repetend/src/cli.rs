//! Command-line front end: every library operation as a subcommand, one
//! structured record per output line.
//!
//! Numbers of arbitrary size travel as decimal strings so nothing is ever
//! rounded; digit strings travel as comma-separated decimal digit values
//! (unambiguous in any base). Exit codes: 0 on success, 1 on a domain
//! error, 2 on a usage error.

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::{ArgAction, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::certify::{
    self, CertifyOptions, PrimitivityCertificate, Rejection, Scan, ScanConfig, ScanEvent, ScanMode,
    DEFAULT_RANDOM_DRAWS,
};
use crate::error::Error;
use crate::expansion::{self, DigitString};
use crate::numtheory::{self, DEFAULT_FACTOR_BUDGET, DEFAULT_SEED};
use crate::reconstruction::{self, ReconstructionResult};
use crate::symmetry;
use crate::verify;
use crate::Natural;

const SCHEMA_VERSION: &str = "1";

/// Environment variable consulted for the seed when `--seed` is absent.
pub const SEED_ENV_VAR: &str = "REPETEND_SEED";

#[derive(Parser)]
#[command(
    name = "repetend",
    version,
    about = "Base-n repeating expansions of 1/m: digit symmetries, reconstruction, certification"
)]
struct Cli {
    /// Emit JSON records (pass `--json false` for plain key:value text)
    #[arg(long, global = true, default_value_t = true, action = ArgAction::Set, value_name = "BOOL")]
    json: bool,

    /// Suppress diagnostics on standard error
    #[arg(long, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Repeating expansion of 1/m in the given base
    Expand {
        #[arg(long)]
        modulus: Natural,
        #[arg(long)]
        base: u64,
    },
    /// One expansion digit straight from the residue formula
    Digits {
        #[arg(long)]
        modulus: Natural,
        #[arg(long)]
        base: u64,
        /// 1-based digit index
        #[arg(long)]
        index: u64,
    },
    /// Integer and repeating value of a digit string
    Value {
        /// Comma-separated digit values, leading zeros significant
        #[arg(long)]
        string: String,
        #[arg(long)]
        base: u64,
    },
    /// Recover the modulus from a string value or a digit string
    Reconstruct {
        #[arg(long, conflicts_with = "string")]
        value: Option<Natural>,
        #[arg(long)]
        string: Option<String>,
        #[arg(long)]
        base: u64,
    },
    /// Rotate a repetend and report the matching fraction
    Shift {
        #[arg(long, conflicts_with = "string")]
        modulus: Option<Natural>,
        #[arg(long)]
        string: Option<String>,
        #[arg(long)]
        base: u64,
        #[arg(long)]
        shift: u64,
    },
    /// The cyclic subgroup generated by the base modulo m
    Orbit {
        #[arg(long)]
        modulus: Natural,
        #[arg(long)]
        base: u64,
    },
    /// Half-period digit complement check for a prime modulus
    Complement {
        #[arg(long)]
        modulus: Natural,
        #[arg(long)]
        base: u64,
    },
    /// Run-length form of a digit string or repetend; base-2 structure report
    Runs {
        #[arg(long, conflicts_with = "string")]
        modulus: Option<Natural>,
        #[arg(long)]
        string: Option<String>,
        #[arg(long)]
        base: u64,
    },
    /// The exact quotient (base^(m-1) - 1)/m for an odd prime m
    Alpha {
        #[arg(long)]
        modulus: Natural,
        #[arg(long)]
        base: u64,
    },
    /// Primitivity of the base modulo an odd prime, decided from digits
    Primitive {
        #[arg(long)]
        modulus: Natural,
        #[arg(long)]
        base: u64,
    },
    /// Certify primes from a candidate string value
    Certify {
        #[arg(long)]
        value: Natural,
        #[arg(long)]
        base: u64,
        /// Factorization iteration budget
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Stream certificates over candidate values up to a length bound
    Scan {
        #[arg(long)]
        base: u64,
        #[arg(long)]
        max_length: u32,
        #[arg(long, value_enum, default_value_t = ScanModeArg::Exhaustive)]
        mode: ScanModeArg,
        #[arg(long)]
        seed: Option<u64>,
        /// Maximum number of candidates examined
        #[arg(long)]
        budget: Option<u64>,
        /// Number of draws in random mode
        #[arg(long)]
        draws: Option<u64>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Run the whole invariant suite and print a pass/fail table
    VerifyLemmas {
        #[arg(long, default_value_t = 500)]
        max_m: u64,
        #[arg(long, value_delimiter = ',', default_value = "2,10")]
        bases: Vec<u64>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ScanModeArg {
    Exhaustive,
    Random,
}

/// Entry point used by the binary: parses, dispatches, and returns the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let mut out = std::io::stdout().lock();
    let mut err = std::io::stderr().lock();
    run_with_io(args, &mut out, &mut err)
}

/// [`run`] against caller-supplied streams, for embedding and tests.
pub fn run_with_io<'a, I, T>(args: I, out: &'a mut dyn Write, err: &'a mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let rendered = e.render();
            let target = if code == 0 { out } else { err };
            let _ = write!(target, "{rendered}");
            return code;
        }
    };
    let mut emitter = Emitter {
        json: cli.json,
        quiet: cli.quiet,
        out,
        err,
    };
    match dispatch(&cli.command, &mut emitter) {
        Ok(code) => code,
        Err(failure) => {
            emitter.emit_record(&failure.record);
            emitter.diagnostic(&failure.message);
            1
        }
    }
}

struct DomainFailure {
    record: Value,
    message: String,
}

struct Emitter<'a> {
    json: bool,
    quiet: bool,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Emitter<'_> {
    fn emit_record(&mut self, record: &Value) {
        if self.json {
            let _ = writeln!(self.out, "{record}");
        } else {
            let _ = writeln!(self.out, "{}", render_plain(record));
        }
    }

    fn diagnostic(&mut self, message: &str) {
        if !self.quiet {
            let _ = writeln!(self.err, "repetend: {message}");
        }
    }
}

fn record(command: &str, inputs: &[(&str, String)], result: Value) -> Value {
    let mut inputs_map = Map::new();
    for (k, v) in inputs {
        inputs_map.insert((*k).into(), Value::String(v.clone()));
    }
    json!({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs_map,
        "result": result,
    })
}

fn error_record(command: &str, inputs: &[(&str, String)], error: &Error) -> Value {
    let mut inputs_map = Map::new();
    for (k, v) in inputs {
        inputs_map.insert((*k).into(), Value::String(v.clone()));
    }
    json!({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs_map,
        "error": {
            "name": error.name(),
            "message": error.to_string(),
        },
    })
}

fn fail(command: &str, inputs: &[(&str, String)], error: Error) -> DomainFailure {
    DomainFailure {
        record: error_record(command, inputs, &error),
        message: error.to_string(),
    }
}

fn render_plain(record: &Value) -> String {
    let mut lines = Vec::new();
    flatten_value("", record, &mut lines);
    lines.join("\n")
}

fn flatten_value(prefix: &str, value: &Value, lines: &mut Vec<String>) {
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten_value(&key, v, lines);
            }
        }
        Value::Array(items) => {
            if items.iter().all(|v| !v.is_object() && !v.is_array()) {
                let joined: Vec<String> = items.iter().map(plain_scalar).collect();
                lines.push(format!("{prefix}: [{}]", joined.join(", ")));
            } else {
                for (i, v) in items.iter().enumerate() {
                    flatten_value(&format!("{prefix}[{i}]"), v, lines);
                }
            }
        }
        other => lines.push(format!("{prefix}: {}", plain_scalar(other))),
    }
}

fn plain_scalar(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn digit_string_arg(base: u64, text: &str) -> Result<DigitString, Error> {
    DigitString::parse(base, text)
}

fn resolve_seed(explicit: Option<u64>) -> u64 {
    if let Some(seed) = explicit {
        return seed;
    }
    if let Ok(text) = std::env::var(SEED_ENV_VAR) {
        if let Ok(seed) = text.trim().parse::<u64>() {
            return seed;
        }
    }
    DEFAULT_SEED
}

fn nat_str(n: &Natural) -> Value {
    Value::String(n.to_string())
}

fn fraction_json(f: &expansion::ExactFraction) -> Value {
    json!({
        "numerator": f.numerator().to_string(),
        "denominator": f.denominator().to_string(),
    })
}

fn factorization_json(f: &numtheory::Factorization) -> Value {
    Value::Array(
        f.pairs()
            .iter()
            .map(|(p, e)| json!([p.to_string(), e]))
            .collect(),
    )
}

fn certificate_json(c: &PrimitivityCertificate) -> Value {
    json!({
        "base": c.base.to_string(),
        "value": c.value.to_string(),
        "string": c.string.to_string(),
        "length": c.length.to_string(),
        "modulus": c.modulus.to_string(),
        "modulus_factorization": factorization_json(&c.modulus_factorization),
        "value_factorization": c
            .value_factorization
            .as_ref()
            .map(factorization_json)
            .unwrap_or(Value::Null),
        "prime": c.prime.to_string(),
        "prime_exponent": c.prime_exponent,
        "length_condition": c.length_condition,
        "order_condition_stated": c.order_condition_stated,
        "order_condition_reduced": c.order_condition_reduced,
        "verified": c.verified,
    })
}

fn reconstruction_json(r: &ReconstructionResult, mode: &str) -> Value {
    json!({
        "mode": mode,
        "value": r.value().to_string(),
        "length": r.length().to_string(),
        "padded_string": r.padded_string().to_string(),
        "modulus": r.modulus().to_string(),
        "order_of_base_mod_m": r.order_of_base_mod_m().to_string(),
        "order_matches_length": r.order_matches_length(),
        "collapsed": r.collapsed(),
    })
}

fn dispatch(command: &Command, emitter: &mut Emitter<'_>) -> Result<i32, DomainFailure> {
    match command {
        Command::Expand { modulus, base } => {
            let inputs = [("modulus", modulus.to_string()), ("base", base.to_string())];
            let expansion =
                expansion::expand(modulus, *base).map_err(|e| fail("expand", &inputs, e))?;
            let value = expansion::string_value(expansion.repetend());
            let first_nonzero = expansion::first_nonzero_index(modulus, *base)
                .map_err(|e| fail("expand", &inputs, e))?;
            let result = json!({
                "period": expansion.period().to_string(),
                "digits": expansion.repetend().to_string(),
                "value": value.to_string(),
                "first_nonzero_index": first_nonzero.to_string(),
            });
            emitter.emit_record(&record("expand", &inputs, result));
            Ok(0)
        }
        Command::Digits {
            modulus,
            base,
            index,
        } => {
            let inputs = [
                ("modulus", modulus.to_string()),
                ("base", base.to_string()),
                ("index", index.to_string()),
            ];
            let digit = expansion::digit_via_residues(modulus, *base, *index)
                .map_err(|e| fail("digits", &inputs, e))?;
            let result = json!({
                "index": index.to_string(),
                "digit": digit.to_string(),
            });
            emitter.emit_record(&record("digits", &inputs, result));
            Ok(0)
        }
        Command::Value { string, base } => {
            let inputs = [("string", string.clone()), ("base", base.to_string())];
            let s = digit_string_arg(*base, string).map_err(|e| fail("value", &inputs, e))?;
            let value = expansion::string_value(&s);
            let fraction = expansion::repeating_value(&s).map_err(|e| fail("value", &inputs, e))?;
            let result = json!({
                "value": value.to_string(),
                "repeating_value": fraction_json(&fraction),
            });
            emitter.emit_record(&record("value", &inputs, result));
            Ok(0)
        }
        Command::Reconstruct {
            value,
            string,
            base,
        } => {
            let mut inputs: Vec<(&str, String)> = vec![("base", base.to_string())];
            if let Some(v) = value {
                inputs.push(("value", v.to_string()));
            }
            if let Some(s) = string {
                inputs.push(("string", s.clone()));
            }
            let (reconstruction, mode) = match (value, string) {
                (Some(v), None) => (
                    reconstruction::reconstruct_from_integer(v, *base)
                        .map_err(|e| fail("reconstruct", &inputs, e))?,
                    "integer",
                ),
                (None, Some(s)) => {
                    let parsed =
                        digit_string_arg(*base, s).map_err(|e| fail("reconstruct", &inputs, e))?;
                    (
                        reconstruction::reconstruct_from_string(&parsed)
                            .map_err(|e| fail("reconstruct", &inputs, e))?,
                        "string",
                    )
                }
                _ => {
                    return Err(fail(
                        "reconstruct",
                        &inputs,
                        Error::InvalidInput(
                            "exactly one of --value and --string is required".into(),
                        ),
                    ))
                }
            };
            emitter.emit_record(&record(
                "reconstruct",
                &inputs,
                reconstruction_json(&reconstruction, mode),
            ));
            Ok(0)
        }
        Command::Shift {
            modulus,
            string,
            base,
            shift,
        } => {
            let mut inputs: Vec<(&str, String)> =
                vec![("base", base.to_string()), ("shift", shift.to_string())];
            if let Some(m) = modulus {
                inputs.push(("modulus", m.to_string()));
            }
            if let Some(s) = string {
                inputs.push(("string", s.clone()));
            }
            let (rotated, fraction) = match (modulus, string) {
                (Some(m), None) => {
                    let expansion =
                        expansion::expand(m, *base).map_err(|e| fail("shift", &inputs, e))?;
                    let rotated = symmetry::cyclic_shift(expansion.repetend(), *shift);
                    let fraction = symmetry::shift_fraction(m, *base, *shift)
                        .map_err(|e| fail("shift", &inputs, e))?;
                    (rotated, fraction)
                }
                (None, Some(s)) => {
                    let parsed =
                        digit_string_arg(*base, s).map_err(|e| fail("shift", &inputs, e))?;
                    let rotated = symmetry::cyclic_shift(&parsed, *shift);
                    let fraction = expansion::repeating_value(&rotated)
                        .map_err(|e| fail("shift", &inputs, e))?;
                    (rotated, fraction)
                }
                _ => {
                    return Err(fail(
                        "shift",
                        &inputs,
                        Error::InvalidInput(
                            "exactly one of --modulus and --string is required".into(),
                        ),
                    ))
                }
            };
            let result = json!({
                "shifted": rotated.to_string(),
                "fraction": fraction_json(&fraction),
            });
            emitter.emit_record(&record("shift", &inputs, result));
            Ok(0)
        }
        Command::Orbit { modulus, base } => {
            let inputs = [("modulus", modulus.to_string()), ("base", base.to_string())];
            let orbit =
                symmetry::orbit_residues(modulus, *base).map_err(|e| fail("orbit", &inputs, e))?;
            let residues: Vec<Value> = orbit.iter().map(nat_str).collect();
            let result = json!({
                "order": orbit.len().to_string(),
                "residues": residues,
            });
            emitter.emit_record(&record("orbit", &inputs, result));
            Ok(0)
        }
        Command::Complement { modulus, base } => {
            let inputs = [("modulus", modulus.to_string()), ("base", base.to_string())];
            let holds = symmetry::complement_pairs_check(modulus, *base)
                .map_err(|e| fail("complement", &inputs, e))?;
            let result = json!({ "holds": holds });
            emitter.emit_record(&record("complement", &inputs, result));
            Ok(0)
        }
        Command::Runs {
            modulus,
            string,
            base,
        } => {
            let mut inputs: Vec<(&str, String)> = vec![("base", base.to_string())];
            if let Some(m) = modulus {
                inputs.push(("modulus", m.to_string()));
            }
            if let Some(s) = string {
                inputs.push(("string", s.clone()));
            }
            let digit_string = match (modulus, string) {
                (Some(m), None) => expansion::expand(m, *base)
                    .map_err(|e| fail("runs", &inputs, e))?
                    .repetend()
                    .clone(),
                (None, Some(s)) => {
                    digit_string_arg(*base, s).map_err(|e| fail("runs", &inputs, e))?
                }
                _ => {
                    return Err(fail(
                        "runs",
                        &inputs,
                        Error::InvalidInput(
                            "exactly one of --modulus and --string is required".into(),
                        ),
                    ))
                }
            };
            let runs = symmetry::run_length_encode(&digit_string);
            let runs_json: Vec<Value> = runs
                .runs()
                .iter()
                .map(|r| json!([r.symbol.to_string(), r.length]))
                .collect();
            let structure = match (modulus, *base) {
                (Some(m), 2) => match symmetry::base2_structure_report(m) {
                    Ok(report) => json!({
                        "run_count": report.runs.run_count(),
                        "run_count_mod_four_ok": report.run_count_mod_four_ok,
                        "half_symmetry_ok": report.half_symmetry_ok,
                        "decrement_pairing_ok": report.decrement_pairing_ok,
                        "all_checks_pass": report.all_checks_pass(),
                    }),
                    Err(e) => json!({ "unavailable": e.to_string() }),
                },
                _ => Value::Null,
            };
            let result = json!({
                "digits": digit_string.to_string(),
                "runs": runs_json,
                "structure": structure,
            });
            emitter.emit_record(&record("runs", &inputs, result));
            Ok(0)
        }
        Command::Alpha { modulus, base } => {
            let inputs = [("modulus", modulus.to_string()), ("base", base.to_string())];
            let quotient =
                certify::fermat_quotient(modulus, *base).map_err(|e| fail("alpha", &inputs, e))?;
            let length = (modulus - 1u32).to_string();
            let padded = DigitString::from_natural_padded(
                &quotient,
                *base,
                (modulus - 1u32).try_into().map_err(|_| {
                    fail(
                        "alpha",
                        &inputs,
                        Error::InvalidInput("modulus too large".into()),
                    )
                })?,
            )
            .map_err(|e| fail("alpha", &inputs, e))?;
            let result = json!({
                "alpha": quotient.to_string(),
                "padded_length": length,
                "padded_string": padded.to_string(),
            });
            emitter.emit_record(&record("alpha", &inputs, result));
            Ok(0)
        }
        Command::Primitive { modulus, base } => {
            let inputs = [("modulus", modulus.to_string()), ("base", base.to_string())];
            let primitive = certify::is_primitive_root_by_expansion(modulus, *base)
                .map_err(|e| fail("primitive", &inputs, e))?;
            let result = json!({ "is_primitive_root": primitive });
            emitter.emit_record(&record("primitive", &inputs, result));
            Ok(0)
        }
        Command::Certify {
            value,
            base,
            budget,
            seed,
        } => {
            let seed = resolve_seed(*seed);
            let options = CertifyOptions {
                factor_budget: budget.unwrap_or(DEFAULT_FACTOR_BUDGET),
                factor_seed: seed,
            };
            let inputs = [
                ("value", value.to_string()),
                ("base", base.to_string()),
                ("budget", options.factor_budget.to_string()),
                ("seed", seed.to_string()),
            ];
            let outcome = certify::certify_value_with(value, *base, &options)
                .map_err(|e| fail("certify", &inputs, e))?;
            let result = match outcome {
                certify::CertifyOutcome::Certified(certs) => json!({
                    "outcome": "certified",
                    "certificates": certs.iter().map(certificate_json).collect::<Vec<_>>(),
                }),
                certify::CertifyOutcome::Rejected(rejection) => {
                    let detail = match &rejection {
                        Rejection::Collapsed { modulus } => {
                            json!({ "modulus": modulus.to_string() })
                        }
                        Rejection::WordPeriodic { word_period } => {
                            json!({ "word_period": word_period })
                        }
                        Rejection::NoQualifyingPrime { modulus } => {
                            json!({ "modulus": modulus.to_string() })
                        }
                    };
                    json!({
                        "outcome": "rejected",
                        "reason": rejection.reason(),
                        "detail": detail,
                    })
                }
            };
            emitter.emit_record(&record("certify", &inputs, result));
            Ok(0)
        }
        Command::Scan {
            base,
            max_length,
            mode,
            seed,
            budget,
            draws,
            workers,
        } => {
            let seed = resolve_seed(*seed);
            let mode_value = match mode {
                ScanModeArg::Exhaustive => ScanMode::Exhaustive,
                ScanModeArg::Random => ScanMode::Random {
                    seed,
                    draws: draws.unwrap_or(DEFAULT_RANDOM_DRAWS),
                },
            };
            let inputs = [
                ("base", base.to_string()),
                ("max_length", max_length.to_string()),
                (
                    "mode",
                    match mode {
                        ScanModeArg::Exhaustive => "exhaustive".to_string(),
                        ScanModeArg::Random => "random".to_string(),
                    },
                ),
                ("seed", seed.to_string()),
                (
                    "budget",
                    budget
                        .map(|b| b.to_string())
                        .unwrap_or_else(|| "none".into()),
                ),
                ("workers", workers.to_string()),
            ];
            let config = ScanConfig {
                base: *base,
                max_length: *max_length,
                mode: mode_value,
                budget: *budget,
                workers: *workers,
                options: CertifyOptions {
                    factor_budget: DEFAULT_FACTOR_BUDGET,
                    factor_seed: seed,
                },
            };
            let mut scan = Scan::new(config).map_err(|e| fail("scan", &inputs, e))?;
            if let Some(note) = scan.advisory() {
                emitter.diagnostic(note);
            }
            let advisory = scan.advisory().map(str::to_owned);
            let mut error: Option<Error> = None;
            for event in &mut scan {
                match event {
                    Ok(ScanEvent::Certificate(cert)) => {
                        let mut payload = json!({ "event": "certificate" });
                        payload["certificate"] = certificate_json(&cert);
                        emitter.emit_record(&record("scan", &inputs, payload));
                    }
                    Ok(ScanEvent::Truncated { examined }) => {
                        let payload = json!({
                            "event": "truncated",
                            "examined": examined.to_string(),
                        });
                        emitter.emit_record(&record("scan", &inputs, payload));
                    }
                    Err(e) => {
                        error = Some(e);
                        break;
                    }
                }
            }
            let summary = json!({
                "event": "summary",
                "examined": scan.examined().to_string(),
                "certificates": scan.emitted().to_string(),
                "complete": !scan.truncated() && error.is_none(),
                "advisory": advisory.map(Value::String).unwrap_or(Value::Null),
            });
            emitter.emit_record(&record("scan", &inputs, summary));
            if let Some(e) = error {
                return Err(fail("scan", &inputs, e));
            }
            Ok(0)
        }
        Command::VerifyLemmas { max_m, bases } => {
            let inputs = [
                ("max_m", max_m.to_string()),
                (
                    "bases",
                    bases
                        .iter()
                        .map(u64::to_string)
                        .collect::<Vec<_>>()
                        .join(","),
                ),
            ];
            if *max_m < 2 || bases.is_empty() || bases.iter().any(|&b| b < 2) {
                return Err(fail(
                    "verify-lemmas",
                    &inputs,
                    Error::InvalidInput("need max-m >= 2 and bases >= 2".into()),
                ));
            }
            let reports = verify::run_all(*max_m, bases);
            let mut all_passed = true;
            for report in &reports {
                all_passed &= report.passed();
                let failures: Vec<Value> = report
                    .failures
                    .iter()
                    .map(|f| Value::String(f.clone()))
                    .collect();
                let payload = json!({
                    "check": report.key,
                    "label": report.label,
                    "cases": report.cases.to_string(),
                    "passed": report.passed(),
                    "failures": failures,
                    "suppressed_failures": report.suppressed_failures().to_string(),
                });
                emitter.emit_record(&record("verify-lemmas", &inputs, payload));
                emitter.diagnostic(&format!(
                    "{} {} ({} cases)",
                    if report.passed() { "PASS" } else { "FAIL" },
                    report.key,
                    report.cases
                ));
            }
            let summary = json!({
                "check": "summary",
                "all_passed": all_passed,
                "checks": reports.len().to_string(),
            });
            emitter.emit_record(&record("verify-lemmas", &inputs, summary));
            Ok(if all_passed { 0 } else { 1 })
        }
    }
}
