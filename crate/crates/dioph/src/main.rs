//! `dioph`: command-line front end.
//!
//! Exit codes are a stable contract: 0 affirmative/ok, 1 negative
//! (unsolvable / property failure), 2 usage or validation error.
//! With `--json`, stdout carries exactly one JSON document and all
//! diagnostics go to stderr; big integers are serialized as decimal
//! strings so nothing is truncated by 64-bit consumers.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::{BigInt, BigUint};
use serde_json::{json, Value};

use dioph::denumerant::{
    count_special_case_with_cap, count_structural, CountBreakdown, DEFAULT_BRUTEFORCE_CAP,
};
use dioph::frobenius::{frobenius_report, FrobeniusReport};
use dioph::solvability::{decide, SolvabilityVerdict};
use dioph::tuple::CoprimeTuple;
use dioph::verify::{run_sweep, SweepConfig};

#[derive(Parser)]
#[command(
    name = "dioph",
    version,
    about = "Solvability, exact solution counts, and Frobenius numbers for \
             a_1 x_1 + ... + a_n x_n = b over non-negative integers"
)]
struct Cli {
    /// Emit exactly one JSON document on stdout
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count the non-negative integer solutions of sum(a_i x_i) = b
    Count(CountArgs),
    /// Decide solvability with certificates (exit 0 solvable, 1 not)
    Solvable(InstanceArgs),
    /// Frobenius number with every applicable bound and its gap
    Frobenius(TupleArgs),
    /// count + solvable + frobenius over one tuple, as one document
    Analyze(CountArgs),
    /// Run the cross-validation property sweep (exit 1 on any failure)
    Verify(VerifyArgs),
}

#[derive(Args)]
struct TupleArgs {
    /// Coefficients a_1 a_2 ... (positive integers, setwise coprime)
    #[arg(required = true, num_args = 2..)]
    coeffs: Vec<u64>,
}

#[derive(Args)]
struct InstanceArgs {
    #[command(flatten)]
    tuple: TupleArgs,

    /// Right-hand side (non-negative decimal, any size)
    #[arg(long)]
    b: String,
}

#[derive(Args)]
struct CountArgs {
    #[command(flatten)]
    instance: InstanceArgs,

    /// Ceiling on the brute-force oracle used by the closed-form route
    #[arg(long, default_value_t = DEFAULT_BRUTEFORCE_CAP)]
    max_bruteforce: u64,
}

#[derive(Args)]
struct VerifyArgs {
    /// Largest random-tuple length (>= 2)
    #[arg(long, default_value_t = 5)]
    max_n: usize,

    /// Largest random coefficient; also the range of the pair law
    #[arg(long, default_value_t = 30)]
    max_coeff: u64,

    /// Number of random tuples to sample
    #[arg(long, default_value_t = 500)]
    samples: usize,

    /// Sweep seed; equal seeds produce byte-identical reports
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json_mode = cli.json;
    let command_name = match &cli.command {
        Command::Count(_) => "count",
        Command::Solvable(_) => "solvable",
        Command::Frobenius(_) => "frobenius",
        Command::Analyze(_) => "analyze",
        Command::Verify(_) => "verify",
    };
    match dispatch(cli.command, json_mode) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            if json_mode {
                let doc = json!({
                    "status": "error",
                    "command": command_name,
                    "error": message,
                });
                println!("{doc}");
            }
            ExitCode::from(2)
        }
    }
}

fn dispatch(command: Command, json_mode: bool) -> Result<ExitCode, String> {
    match command {
        Command::Count(args) => cmd_count(args, json_mode),
        Command::Solvable(args) => cmd_solvable(args, json_mode),
        Command::Frobenius(args) => cmd_frobenius(args, json_mode),
        Command::Analyze(args) => cmd_analyze(args, json_mode),
        Command::Verify(args) => cmd_verify(args, json_mode),
    }
}

fn parse_tuple(args: &TupleArgs) -> Result<CoprimeTuple, String> {
    CoprimeTuple::new(args.coeffs.clone()).map_err(|e| e.to_string())
}

fn parse_rhs(text: &str) -> Result<BigUint, String> {
    text.parse::<BigUint>()
        .map_err(|_| format!("--b expects a non-negative decimal integer, got {text:?}"))
}

fn tuple_value(t: &CoprimeTuple) -> Value {
    Value::Array(t.coeffs().iter().map(|&a| json!(a)).collect())
}

fn emit(json_mode: bool, doc: Value, human: String) {
    if json_mode {
        println!("{doc}");
    } else {
        print!("{human}");
    }
}

// ---- count ----------------------------------------------------------

struct CountOutcome {
    result: Value,
    human: String,
}

fn count_outcome(t: &CoprimeTuple, b: &BigUint, cap: u64) -> Result<CountOutcome, String> {
    let breakdown = count_structural(t, b).map_err(|e| e.to_string())?;
    let (special_value, special_human) = special_route(t, b, cap, &breakdown);

    let p = &breakdown.params;
    let l_values: Vec<String> = breakdown
        .l_vector
        .as_ref()
        .map(|lv| lv.values().iter().map(|v| v.to_string()).collect())
        .unwrap_or_default();
    let terms: Vec<Value> = breakdown
        .terms
        .as_ref()
        .map(|terms| {
            terms
                .iter()
                .map(|term| {
                    json!({
                        "k": term.k,
                        "l_k": term.l_k.to_string(),
                        "binomial": term.binomial.to_string(),
                        "value": term.value.to_string(),
                    })
                })
                .collect()
        })
        .unwrap_or_default();

    let result = json!({
        "total": breakdown.total.to_string(),
        "route": breakdown.route.as_str(),
        "r": p.r.to_string(),
        "b_prime": p.b_prime.to_string(),
        "s": p.s,
        "l_vector": l_values,
        "terms": terms,
        "special_case": special_value,
    });

    let mut human = String::new();
    human.push_str(&format!("P({b}) = {}\n", breakdown.total));
    human.push_str(&format!(
        "route {}: b' = {}, r = {}, s = {}\n",
        breakdown.route.as_str(),
        p.b_prime,
        p.r,
        p.s
    ));
    if let Some(terms) = &breakdown.terms {
        for term in terms {
            human.push_str(&format!(
                "  k={}: l_k={} * binomial={} -> {}\n",
                term.k, term.l_k, term.binomial, term.value
            ));
        }
    }
    human.push_str(&special_human);
    Ok(CountOutcome { result, human })
}

fn special_route(
    t: &CoprimeTuple,
    b: &BigUint,
    cap: u64,
    structural: &CountBreakdown,
) -> (Value, String) {
    if !t.condition8_holds() {
        return (
            json!({"applies": false}),
            "closed-form route: not applicable (sum(a_i) < (n-2)M + 2)\n".to_string(),
        );
    }
    match count_special_case_with_cap(t, b, cap) {
        Ok(sp) => {
            let agrees = sp.total == structural.total;
            let value = json!({
                "applies": true,
                "route": sp.route.as_str(),
                "total": sp.total.to_string(),
                "agrees": agrees,
            });
            let human = format!(
                "closed-form route {}: {} (agrees: {agrees})\n",
                sp.route.as_str(),
                sp.total
            );
            (value, human)
        }
        Err(e) => (
            json!({"applies": true, "error": e.to_string()}),
            format!("closed-form route failed: {e}\n"),
        ),
    }
}

fn cmd_count(args: CountArgs, json_mode: bool) -> Result<ExitCode, String> {
    let t = parse_tuple(&args.instance.tuple)?;
    let b = parse_rhs(&args.instance.b)?;
    let outcome = count_outcome(&t, &b, args.max_bruteforce)?;
    let doc = json!({
        "status": "ok",
        "command": "count",
        "tuple": tuple_value(&t),
        "b": b.to_string(),
        "result": outcome.result,
    });
    emit(json_mode, doc, outcome.human);
    Ok(ExitCode::SUCCESS)
}

// ---- solvable -------------------------------------------------------

struct SolvableOutcome {
    result: Value,
    certificates: Value,
    human: String,
    solvable: bool,
}

fn solvable_outcome(t: &CoprimeTuple, b: &BigUint) -> Result<SolvableOutcome, String> {
    let verdict: SolvabilityVerdict = decide(t, b).map_err(|e| e.to_string())?;
    let certificates: Vec<String> = verdict.certificates.iter().map(|c| c.to_string()).collect();
    let count = verdict
        .count
        .as_ref()
        .map(|c| c.to_string())
        .unwrap_or_default();
    let result = json!({
        "solvable": verdict.solvable,
        "count": count,
    });
    let human = format!(
        "b = {b}: {} (P(b) = {count})\ncertificates: {}\n",
        if verdict.solvable {
            "solvable"
        } else {
            "not solvable"
        },
        certificates.join(", ")
    );
    Ok(SolvableOutcome {
        result,
        certificates: json!(certificates),
        human,
        solvable: verdict.solvable,
    })
}

fn cmd_solvable(args: InstanceArgs, json_mode: bool) -> Result<ExitCode, String> {
    let t = parse_tuple(&args.tuple)?;
    let b = parse_rhs(&args.b)?;
    let outcome = solvable_outcome(&t, &b)?;
    let doc = json!({
        "status": "ok",
        "command": "solvable",
        "tuple": tuple_value(&t),
        "b": b.to_string(),
        "result": outcome.result,
        "certificates": outcome.certificates,
    });
    emit(json_mode, doc, outcome.human);
    Ok(if outcome.solvable {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

// ---- frobenius ------------------------------------------------------

struct FrobeniusOutcome {
    result: Value,
    bounds: Value,
    human: String,
}

fn frobenius_outcome(t: &CoprimeTuple) -> Result<FrobeniusOutcome, String> {
    let report: FrobeniusReport = frobenius_report(t).map_err(|e| e.to_string())?;
    let gap = |bound: &BigInt| (bound - &report.exact).to_string();

    let thm8 = report
        .bound_thm8
        .as_ref()
        .map(|c| json!({"value": c.to_string(), "gap": gap(c)}))
        .unwrap_or(Value::Null);
    let r0 = report
        .bound_r0
        .as_ref()
        .map(|r0| {
            json!({
                "value": r0.to_string(),
                "gap": gap(r0),
                "sharp": report.r0_sharp.unwrap_or(false),
            })
        })
        .unwrap_or(Value::Null);
    let thm7 = report
        .closed_form_thm7
        .as_ref()
        .map(|v| Value::String(v.to_string()))
        .unwrap_or(Value::Null);

    let bounds = json!({"thm8": thm8, "r0": r0, "thm7_closed_form": thm7});
    let result = json!({
        "exact": report.exact.to_string(),
        "method": report.method.as_str(),
    });

    let mut human = format!("Frob{t} = {}  [{}]\n", report.exact, report.method.as_str());
    match &report.bound_thm8 {
        Some(c) => human.push_str(&format!("bound thm8: {c} (gap {})\n", gap(c))),
        None => human.push_str("bound thm8: none (no coprime pair)\n"),
    }
    match &report.bound_r0 {
        Some(r0) => human.push_str(&format!(
            "bound r0: {r0} (gap {}{})\n",
            gap(r0),
            if report.r0_sharp == Some(true) {
                ", sharp"
            } else {
                ""
            }
        )),
        None => human.push_str("bound r0: none (sum(a_i) < (n-2)M + 2)\n"),
    }
    match &report.closed_form_thm7 {
        Some(v) => human.push_str(&format!("closed form: {v} (product-shaped tuple)\n")),
        None => human.push_str("closed form: none (tuple not product-shaped)\n"),
    }
    Ok(FrobeniusOutcome {
        result,
        bounds,
        human,
    })
}

fn cmd_frobenius(args: TupleArgs, json_mode: bool) -> Result<ExitCode, String> {
    let t = parse_tuple(&args)?;
    let outcome = frobenius_outcome(&t)?;
    let doc = json!({
        "status": "ok",
        "command": "frobenius",
        "tuple": tuple_value(&t),
        "result": outcome.result,
        "bounds": outcome.bounds,
    });
    emit(json_mode, doc, outcome.human);
    Ok(ExitCode::SUCCESS)
}

// ---- analyze --------------------------------------------------------

fn cmd_analyze(args: CountArgs, json_mode: bool) -> Result<ExitCode, String> {
    let t = parse_tuple(&args.instance.tuple)?;
    let b = parse_rhs(&args.instance.b)?;
    let count = count_outcome(&t, &b, args.max_bruteforce)?;
    let solvable = solvable_outcome(&t, &b)?;
    let frobenius = frobenius_outcome(&t)?;

    let doc = json!({
        "status": "ok",
        "command": "analyze",
        "tuple": tuple_value(&t),
        "b": b.to_string(),
        "result": {
            "count": count.result,
            "solvability": solvable.result,
            "frobenius": frobenius.result,
        },
        "certificates": solvable.certificates,
        "bounds": frobenius.bounds,
    });
    let human = format!(
        "tuple {t}: n = {}, M = {}\n{}{}{}",
        t.n(),
        t.lcm(),
        count.human,
        solvable.human,
        frobenius.human
    );
    emit(json_mode, doc, human);
    Ok(ExitCode::SUCCESS)
}

// ---- verify ---------------------------------------------------------

fn cmd_verify(args: VerifyArgs, json_mode: bool) -> Result<ExitCode, String> {
    if args.max_n < 2 {
        return Err("--max-n must be at least 2".to_string());
    }
    if args.max_coeff < 1 {
        return Err("--max-coeff must be at least 1".to_string());
    }
    let cfg = SweepConfig {
        max_n: args.max_n,
        max_coeff: args.max_coeff,
        samples: args.samples,
        seed: args.seed,
        ..SweepConfig::default()
    };
    let report = run_sweep(&cfg);

    let properties: Vec<Value> = report
        .properties
        .iter()
        .map(|p| {
            json!({
                "name": p.name,
                "checked": p.checked,
                "failures": p.failures,
                "first_failure": p.first_failure,
            })
        })
        .collect();
    let doc = json!({
        "status": "ok",
        "command": "verify",
        "result": {
            "seed": cfg.seed,
            "max_n": cfg.max_n,
            "max_coeff": cfg.max_coeff,
            "samples": cfg.samples,
            "m_cap": cfg.m_cap,
            "corpus": {
                "exhaustive": report.exhaustive_tuples,
                "random": report.random_tuples,
            },
            "all_passed": report.all_passed(),
            "properties": properties,
        },
    });
    let passed = report.all_passed();
    emit(json_mode, doc, report.render_text());
    Ok(if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
