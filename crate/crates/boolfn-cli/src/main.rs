//! Command-line front end: transforms, constructions, theorem verifiers
//! and the iteration driver, with bit-exact truth-table I/O.
//!
//! Exit codes: 0 success, 1 negative verdict (e.g. "not bent" or a
//! failed verification), 2 usage error, 3 capacity or integrity error.

use std::io::Write;
use std::process::ExitCode;
use std::sync::atomic::{AtomicU64, Ordering};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use sha2::{Digest, Sha256};

use boolfn::constructions::{
    affine_shift_triple, hodzic, inner_product_quadratic, mm_bent, random_mm_bent, rothaus,
};
use boolfn::iteration::run_iteration;
use boolfn::spectral::{check_bent, wht_fast};
use boolfn::theorems::{
    verify_second_level_with, verify_theorem1_with, verify_theorem2_with, EnumerationMode,
    SweepOptions, VerificationReport,
};
use boolfn::{BentTriple, BooleanFunction, Error as LibError, HodzicVariant, RothausVariant};

#[derive(Parser)]
#[command(name = "boolfn", version, about = "Boolean function analysis toolkit")]
struct Cli {
    /// Truth-table rendering for emitted functions
    #[arg(long, global = true, value_enum, default_value_t = Format::Binary)]
    format: Format,
    /// Emit exactly one JSON document on stdout
    #[arg(long, global = true)]
    machine: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Binary,
    Hex,
}

#[derive(Subcommand)]
enum Command {
    /// Walsh-Hadamard spectrum of a function
    Wht {
        /// Truth table, inline or @file
        tt: String,
        /// Single comma-separated line instead of one value per line
        #[arg(long)]
        compact: bool,
    },
    /// Algebraic normal form coefficient table and degree
    Anf {
        /// Truth table, inline or @file
        tt: String,
    },
    /// Bentness verdict; exits 1 when not bent
    IsBent {
        /// Truth table, inline or @file
        tt: String,
    },
    /// Hamming weight
    Weight {
        /// Truth table, inline or @file
        tt: String,
    },
    /// Two-variable extension of a triple (n + 2 variables)
    Rothaus {
        #[command(flatten)]
        triple: TripleArgs,
        #[arg(long, value_enum, default_value_t = RothausVariantArg::F)]
        variant: RothausVariantArg,
    },
    /// Four-variable extension of a triple (n + 4 variables)
    Hodzic {
        #[command(flatten)]
        triple: TripleArgs,
        #[arg(long, value_enum, default_value_t = HodzicVariantArg::G)]
        variant: HodzicVariantArg,
    },
    /// Iterate the four-variable extension k times from a seed triple
    Iterate {
        #[command(flatten)]
        triple: TripleArgs,
        /// Number of levels to produce
        #[arg(long)]
        k: usize,
        /// Trust the construction instead of transform-checking levels
        #[arg(long)]
        no_verify: bool,
        /// Print full truth tables per level, not just digests
        #[arg(long)]
        full_tables: bool,
    },
    /// Sweep a theorem claim over triples of functions
    Verify {
        #[arg(value_enum)]
        claim: Claim,
        /// Variable count of the inputs
        #[arg(long)]
        n: usize,
        /// Enumerate every triple (feasibility-gated)
        #[arg(long)]
        exhaustive: bool,
        /// Number of random triples to sample
        #[arg(long)]
        samples: Option<u64>,
        /// Seed for sampled mode (required with --samples)
        #[arg(long)]
        seed: Option<u64>,
        /// Worker count for the sweep (default: available parallelism)
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Generators
    #[command(subcommand)]
    Gen(GenCommand),
    /// Triple factories
    #[command(subcommand)]
    Triple(TripleCommand),
}

#[derive(Args)]
struct TripleArgs {
    /// Truth table of A, inline or @file
    #[arg(long)]
    a: String,
    /// Truth table of B, inline or @file
    #[arg(long)]
    b: String,
    /// Truth table of C, inline or @file
    #[arg(long)]
    c: String,
}

#[derive(Subcommand)]
enum GenCommand {
    /// Maiorana-McFarland bent function on 2m variables
    Mm {
        #[arg(long)]
        m: usize,
        /// PRNG seed (ChaCha8); identical seeds give identical tables
        #[arg(long, conflicts_with_all = ["pi", "rho"])]
        seed: Option<u64>,
        /// Explicit permutation as a comma-separated index list of
        /// length 2^m (requires --rho)
        #[arg(long, requires = "rho")]
        pi: Option<String>,
        /// Truth table of rho on m variables (requires --pi)
        #[arg(long, requires = "pi")]
        rho: Option<String>,
    },
    /// The inner-product quadratic x1x2 + x3x4 + ... on n variables
    Quadratic {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum TripleCommand {
    /// (A, A + l1.x, A + l2.x) from a bent A and two linear masks
    AffineShift {
        /// Truth table of A, inline or @file
        #[arg(long)]
        a: String,
        /// Mask bits of l1 as a binary string of length n (x1 first)
        #[arg(long)]
        l1: String,
        /// Mask bits of l2 as a binary string of length n (x1 first)
        #[arg(long)]
        l2: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Claim {
    Theorem1,
    Theorem2,
    SecondLevel,
}

#[derive(Clone, Copy, ValueEnum)]
enum RothausVariantArg {
    F,
    Fp,
    Fpp,
}

impl From<RothausVariantArg> for RothausVariant {
    fn from(v: RothausVariantArg) -> Self {
        match v {
            RothausVariantArg::F => RothausVariant::F,
            RothausVariantArg::Fp => RothausVariant::FPrime,
            RothausVariantArg::Fpp => RothausVariant::FDoublePrime,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum HodzicVariantArg {
    G,
    Gp,
    Gpp,
}

impl From<HodzicVariantArg> for HodzicVariant {
    fn from(v: HodzicVariantArg) -> Self {
        match v {
            HodzicVariantArg::G => HodzicVariant::G,
            HodzicVariantArg::Gp => HodzicVariant::GPrime,
            HodzicVariantArg::Gpp => HodzicVariant::GDoublePrime,
        }
    }
}

enum CliError {
    Lib(LibError),
    Io(String, std::io::Error),
    Usage(String),
}

impl From<LibError> for CliError {
    fn from(e: LibError) -> Self {
        CliError::Lib(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io(..) => 2,
            CliError::Lib(e) => match e {
                LibError::NotBent { .. } => 1,
                LibError::TooManyVariables { .. } | LibError::ExhaustiveInfeasible { .. } => 3,
                LibError::SpectrumParity { .. }
                | LibError::NonIntegralDivision { .. }
                | LibError::IdentityViolation { .. } => 3,
                _ => 2,
            },
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Lib(e) => e.to_string(),
            CliError::Io(path, e) => format!("cannot read {path}: {e}"),
            CliError::Usage(msg) => msg.clone(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {}", err.message());
            ExitCode::from(err.exit_code())
        }
    }
}

/// Inline truth tables are capped at 12 variables; larger functions must
/// come from @file references.
fn read_function_arg(arg: &str) -> Result<BooleanFunction, CliError> {
    if let Some(path) = arg.strip_prefix('@') {
        let text =
            std::fs::read_to_string(path).map_err(|e| CliError::Io(path.to_string(), e))?;
        Ok(BooleanFunction::parse(text.trim())?)
    } else {
        let f = BooleanFunction::parse(arg)?;
        if f.n() > 12 {
            return Err(CliError::Usage(format!(
                "inline truth tables are limited to 12 variables, got {}; pass @file instead",
                f.n()
            )));
        }
        Ok(f)
    }
}

fn read_triple(args: &TripleArgs) -> Result<BentTriple, CliError> {
    let a = read_function_arg(&args.a)?;
    let b = read_function_arg(&args.b)?;
    let c = read_function_arg(&args.c)?;
    Ok(BentTriple::new(a, b, c)?)
}

fn parse_index_list(s: &str) -> Result<Vec<usize>, CliError> {
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Usage(format!("bad index {part:?} in --pi")))
        })
        .collect()
}

fn parse_mask(s: &str, n: usize, name: &str) -> Result<Vec<bool>, CliError> {
    if s.len() != n || s.chars().any(|c| c != '0' && c != '1') {
        return Err(CliError::Usage(format!(
            "{name} must be a binary string of length {n}"
        )));
    }
    Ok(s.chars().map(|c| c == '1').collect())
}

fn render(f: &BooleanFunction, format: Format) -> Result<String, CliError> {
    match format {
        Format::Binary => Ok(f.to_binary_string()),
        Format::Hex => Ok(f.to_hex_string()?),
    }
}

fn table_digest(f: &BooleanFunction) -> String {
    let mut hasher = Sha256::new();
    hasher.update(f.to_le_bytes());
    format!("{:x}", hasher.finalize())
}

fn dispatch(cli: &Cli) -> Result<u8, CliError> {
    match &cli.command {
        Command::Wht { tt, compact } => cmd_wht(cli, tt, *compact),
        Command::Anf { tt } => cmd_anf(cli, tt),
        Command::IsBent { tt } => cmd_is_bent(cli, tt),
        Command::Weight { tt } => cmd_weight(cli, tt),
        Command::Rothaus { triple, variant } => {
            let t = read_triple(triple)?;
            let out = rothaus(&t, (*variant).into())?;
            emit_table(cli, "rothaus", &out)
        }
        Command::Hodzic { triple, variant } => {
            let t = read_triple(triple)?;
            let out = hodzic(&t, (*variant).into())?;
            emit_table(cli, "hodzic", &out)
        }
        Command::Iterate {
            triple,
            k,
            no_verify,
            full_tables,
        } => cmd_iterate(cli, triple, *k, !*no_verify, *full_tables),
        Command::Verify {
            claim,
            n,
            exhaustive,
            samples,
            seed,
            jobs,
        } => cmd_verify(cli, *claim, *n, *exhaustive, *samples, *seed, *jobs),
        Command::Gen(GenCommand::Mm { m, seed, pi, rho }) => {
            let out = match (seed, pi, rho) {
                (Some(seed), None, None) => random_mm_bent(*m, *seed)?,
                (None, Some(pi), Some(rho)) => {
                    let pi = parse_index_list(pi)?;
                    let rho = read_function_arg(rho)?;
                    if rho.n() != *m {
                        return Err(CliError::Usage(format!(
                            "--rho must be a function on {m} variables, got {}",
                            rho.n()
                        )));
                    }
                    mm_bent(&pi, &rho)?
                }
                _ => {
                    return Err(CliError::Usage(
                        "pass either --seed or an explicit --pi with --rho".to_string(),
                    ))
                }
            };
            emit_table(cli, "gen mm", &out)
        }
        Command::Gen(GenCommand::Quadratic { n }) => {
            let out = inner_product_quadratic(*n)?;
            emit_table(cli, "gen quadratic", &out)
        }
        Command::Triple(TripleCommand::AffineShift { a, l1, l2 }) => {
            cmd_affine_shift(cli, a, l1, l2)
        }
    }
}

fn cmd_wht(cli: &Cli, tt: &str, compact: bool) -> Result<u8, CliError> {
    let f = read_function_arg(tt)?;
    let spectrum = wht_fast(&f);
    if cli.machine {
        print_json(&json!({
            "command": "wht",
            "n": f.n(),
            "values": spectrum.values(),
        }));
    } else if compact {
        let line: Vec<String> = spectrum.values().iter().map(|v| v.to_string()).collect();
        println!("{}", line.join(","));
    } else {
        let stdout = std::io::stdout();
        let mut out = stdout.lock();
        for v in spectrum.values() {
            writeln!(out, "{v}").expect("stdout");
        }
    }
    Ok(0)
}

fn cmd_anf(cli: &Cli, tt: &str) -> Result<u8, CliError> {
    let f = read_function_arg(tt)?;
    let anf = f.moebius();
    let coeffs = render(anf.as_table(), cli.format)?;
    if cli.machine {
        print_json(&json!({
            "command": "anf",
            "n": f.n(),
            "coefficients": coeffs,
            "degree": anf.degree(),
            "is_zero": anf.is_zero(),
        }));
    } else {
        println!("{coeffs}");
        if anf.is_zero() {
            println!("degree: 0 (zero function)");
        } else {
            println!("degree: {}", anf.degree());
        }
    }
    Ok(0)
}

fn cmd_is_bent(cli: &Cli, tt: &str) -> Result<u8, CliError> {
    let f = read_function_arg(tt)?;
    let verdict = check_bent(&f);
    if cli.machine {
        print_json(&json!({
            "command": "is-bent",
            "n": f.n(),
            "bent": verdict.is_bent(),
            "reason": verdict.reason(),
        }));
    } else {
        println!("{}", if verdict.is_bent() { "bent" } else { "not bent" });
        if let Some(reason) = verdict.reason() {
            eprintln!("reason: {reason}");
        }
    }
    Ok(if verdict.is_bent() { 0 } else { 1 })
}

fn cmd_weight(cli: &Cli, tt: &str) -> Result<u8, CliError> {
    let f = read_function_arg(tt)?;
    let weight = f.hamming_weight();
    if cli.machine {
        print_json(&json!({
            "command": "weight",
            "n": f.n(),
            "weight": weight,
        }));
    } else {
        println!("{weight}");
    }
    Ok(0)
}

fn emit_table(cli: &Cli, command: &str, f: &BooleanFunction) -> Result<u8, CliError> {
    let table = render(f, cli.format)?;
    if cli.machine {
        print_json(&json!({
            "command": command,
            "n": f.n(),
            "table": table,
        }));
    } else {
        println!("{table}");
    }
    Ok(0)
}

fn cmd_affine_shift(cli: &Cli, a: &str, l1: &str, l2: &str) -> Result<u8, CliError> {
    let base = read_function_arg(a)?;
    let l1 = parse_mask(l1, base.n(), "--l1")?;
    let l2 = parse_mask(l2, base.n(), "--l2")?;
    let t = affine_shift_triple(&base, &l1, &l2)?;
    if cli.machine {
        print_json(&json!({
            "command": "triple affine-shift",
            "n": t.n(),
            "a": render(t.a(), cli.format)?,
            "b": render(t.b(), cli.format)?,
            "c": render(t.c(), cli.format)?,
        }));
    } else {
        println!("{}", render(t.a(), cli.format)?);
        println!("{}", render(t.b(), cli.format)?);
        println!("{}", render(t.c(), cli.format)?);
    }
    Ok(0)
}

fn level_function_doc(
    name: &str,
    f: &BooleanFunction,
    verified: bool,
    full_tables: bool,
    format: Format,
) -> Result<serde_json::Value, CliError> {
    let mut doc = json!({
        "name": name,
        "sha256": table_digest(f),
        "bent": if verified { json!(true) } else { serde_json::Value::Null },
    });
    if full_tables {
        doc["table"] = json!(render(f, format)?);
    }
    Ok(doc)
}

fn cmd_iterate(
    cli: &Cli,
    triple: &TripleArgs,
    k: usize,
    verify: bool,
    full_tables: bool,
) -> Result<u8, CliError> {
    let seed = read_triple(triple)?;
    let seed_n = seed.n();
    let levels = run_iteration(seed, k, verify)?;
    if cli.machine {
        let mut docs = Vec::new();
        for state in &levels {
            let t = state.triple();
            docs.push(json!({
                "level": state.level(),
                "n": t.n(),
                "functions": [
                    level_function_doc("g", t.a(), verify, full_tables, cli.format)?,
                    level_function_doc("g'", t.b(), verify, full_tables, cli.format)?,
                    level_function_doc("g''", t.c(), verify, full_tables, cli.format)?,
                ],
                "sum_bent": if verify { json!(true) } else { serde_json::Value::Null },
            }));
        }
        print_json(&json!({
            "command": "iterate",
            "seed_n": seed_n,
            "k": k,
            "verified": verify,
            "levels": docs,
        }));
    } else {
        let status = if verify { "bent" } else { "trusted" };
        for state in &levels {
            let t = state.triple();
            println!("level {}: n = {}", state.level(), t.n());
            for (name, f) in [("g  ", t.a()), ("g' ", t.b()), ("g''", t.c())] {
                println!("  {name} sha256={} {status}", table_digest(f));
                if full_tables {
                    println!("       {}", render(f, cli.format)?);
                }
            }
            println!("  g+g'+g'' {status}");
        }
    }
    Ok(0)
}

fn resolve_mode(
    exhaustive: bool,
    samples: Option<u64>,
    seed: Option<u64>,
) -> Result<EnumerationMode, CliError> {
    match (exhaustive, samples) {
        (true, None) => Ok(EnumerationMode::Exhaustive),
        (false, Some(count)) => {
            let seed = seed.ok_or_else(|| {
                CliError::Usage("sampled mode needs an explicit --seed".to_string())
            })?;
            Ok(EnumerationMode::Sampled { count, seed })
        }
        (true, Some(_)) => Err(CliError::Usage(
            "--exhaustive and --samples are mutually exclusive".to_string(),
        )),
        (false, None) => Err(CliError::Usage(
            "pick one of --exhaustive or --samples <count> --seed <seed>".to_string(),
        )),
    }
}

fn cmd_verify(
    cli: &Cli,
    claim: Claim,
    n: usize,
    exhaustive: bool,
    samples: Option<u64>,
    seed: Option<u64>,
    jobs: Option<usize>,
) -> Result<u8, CliError> {
    let mode = resolve_mode(exhaustive, samples, seed)?;
    let started = Instant::now();
    let last_tick = AtomicU64::new(0);
    let progress = move |done: u64, total: u64| {
        let ms = started.elapsed().as_millis() as u64;
        let prev = last_tick.load(Ordering::Relaxed);
        if ms >= prev + 1000
            && last_tick
                .compare_exchange(prev, ms, Ordering::Relaxed, Ordering::Relaxed)
                .is_ok()
        {
            eprintln!(
                "progress: {done}/{total} ({:.1}%)",
                100.0 * done as f64 / total as f64
            );
        }
    };
    let opts = SweepOptions {
        jobs,
        progress: Some(&progress),
    };
    let report = match claim {
        Claim::Theorem1 => verify_theorem1_with(n, mode, &opts)?,
        Claim::Theorem2 => verify_theorem2_with(n, mode, &opts)?,
        Claim::SecondLevel => verify_second_level_with(n, mode, &opts)?,
    };
    print_report(cli, &report);
    Ok(if report.success() { 0 } else { 1 })
}

fn print_report(cli: &Cli, report: &VerificationReport) {
    let (mode, samples, seed) = match report.mode {
        EnumerationMode::Exhaustive => ("exhaustive", None, None),
        EnumerationMode::Sampled { count, seed } => ("sampled", Some(count), Some(seed)),
    };
    if cli.machine {
        let counterexamples: Vec<_> = report
            .counterexamples
            .iter()
            .map(|c| json!({ "inputs": c.inputs, "detail": c.detail }))
            .collect();
        print_json(&json!({
            "claim": report.claim,
            "mode": mode,
            "samples": samples,
            "seed": seed,
            "n": report.n,
            "cases_checked": report.cases_checked,
            "satisfying_count": report.satisfying_count,
            "counterexamples": counterexamples,
            "elapsed_ms": report.elapsed.as_millis() as u64,
            "success": report.success(),
        }));
    } else {
        println!("claim: {}", report.claim);
        println!("n: {}", report.n);
        match (samples, seed) {
            (Some(count), Some(seed)) => println!("mode: sampled ({count} cases, seed {seed})"),
            _ => println!("mode: exhaustive"),
        }
        println!("cases checked: {}", report.cases_checked);
        if let Some(s) = report.satisfying_count {
            println!("satisfying: {s}");
        }
        println!("counterexamples: {}", report.counterexamples.len());
        for c in &report.counterexamples {
            println!("  {} -- {}", c.inputs.join(" "), c.detail);
        }
        println!("elapsed: {:.2?}", report.elapsed);
        println!(
            "verdict: {}",
            if report.success() { "PASS" } else { "FAIL" }
        );
    }
}

fn print_json(doc: &serde_json::Value) {
    println!("{}", serde_json::to_string(doc).expect("serializable"));
}
