use std::io::Write;
use std::process::ExitCode;
use std::sync::Mutex;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use rho_core::homology::{blocks, graded_character, homology_terms, total_character, var_prefix};
use rho_core::laurent::DEFAULT_MAX_DET_SIZE;
use rho_core::report::{sort_verdicts, VerdictReport};
use rho_core::verify::{
    check_identity, dimension_mismatch, run_suite, total_dimension, verify_instance, Identity,
    SuiteConfig,
};
use rho_core::weights::{
    BcdParams, Family, HalfInt, Params, SpinComponent, TypeAParams, WeightVec,
};
use rho_core::Error;

#[derive(Parser)]
#[command(
    name = "rho",
    version,
    about = "Kostant homology of cominuscule parabolics"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Betti table: one row per homology summand.
    Betti(Target),
    /// Graded or total character of the homology.
    Char {
        #[command(flatten)]
        target: Target,
        /// Keep the homological grading variable t.
        #[arg(long)]
        t_graded: bool,
    },
    /// Equidistribution blocks with their characters.
    Blocks(Target),
    /// Total dimension by the closed products.
    Dims(Target),
    /// Run the checks for one instance, or the whole suite with --all.
    Verify {
        #[command(flatten)]
        target: OptTarget,
        /// Run the full suite at bounded sizes.
        #[arg(long)]
        all: bool,
        /// Largest size the suite or a determinant expansion may reach.
        #[arg(long, env = "RHO_MAX_SIZE")]
        max_size: Option<usize>,
        /// Seed for the sampled weights of the suite.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Include per-verdict milliseconds in the summary.
        #[arg(long)]
        timings: bool,
        /// Emit JSON instead of aligned text.
        #[arg(long)]
        json: bool,
    },
    /// Check the named character identities.
    Identities {
        /// A single identity, e.g. denom_product.
        #[arg(long)]
        name: Option<String>,
        /// A single size instead of the default range.
        #[arg(long)]
        size: Option<usize>,
        /// Emit JSON instead of aligned text.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TypeArg {
    A,
    B,
    C,
    D,
}

#[derive(Clone, Copy, ValueEnum)]
enum ComponentArg {
    Even,
    Odd,
    Both,
}

#[derive(Args)]
struct Target {
    #[command(flatten)]
    inner: OptTarget,
    /// Emit JSON instead of aligned text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct OptTarget {
    /// Root system type.
    #[arg(long = "type", value_name = "TYPE", value_enum, ignore_case = true)]
    ty: Option<TypeArg>,
    /// Type A: rank of the first Levi block.
    #[arg(long)]
    n: Option<usize>,
    /// Type A: rank of the second Levi block.
    #[arg(long)]
    k: Option<usize>,
    /// Types B, C, D: rank of the gl_m Levi.
    #[arg(long)]
    m: Option<usize>,
    /// Comma list such as 2,1 or 3/2,1/2; padded with zeros.
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    /// Family D: restrict to even or odd subsets.
    #[arg(long, value_enum, default_value = "both", ignore_case = true)]
    spin_component: ComponentArg,
}

enum Failure {
    Usage(String),
    Failed(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Invalid(_)
            | Error::InvalidWeight { .. }
            | Error::Unsupported(_)
            | Error::TooLarge { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Failed(e.to_string()),
        }
    }
}

type Outcome = std::result::Result<(), Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

impl OptTarget {
    fn params(&self) -> std::result::Result<Params, Failure> {
        let ty = self.ty.ok_or_else(|| usage("--type is required"))?;
        let lambda = match &self.lambda {
            Some(s) => WeightVec::parse_list(s).map_err(|e| usage(format!("--lambda: {e}")))?,
            None => WeightVec::default(),
        };
        let pad = |len: usize| -> std::result::Result<WeightVec, Failure> {
            if lambda.len() > len {
                return Err(usage(format!(
                    "--lambda: {} entries, at most {len} allowed",
                    lambda.len()
                )));
            }
            let mut v = lambda.0.clone();
            v.resize(len, HalfInt::ZERO);
            Ok(WeightVec(v))
        };
        match ty {
            TypeArg::A => {
                if self.m.is_some() {
                    return Err(usage("--m does not apply to type A; use --n and --k"));
                }
                if !matches!(self.spin_component, ComponentArg::Both) {
                    return Err(usage("--spin-component applies to type D only"));
                }
                let n = self.n.ok_or_else(|| usage("--n is required for type A"))?;
                let k = self.k.ok_or_else(|| usage("--k is required for type A"))?;
                if n == 0 {
                    return Err(usage("--n must be at least 1"));
                }
                if k == 0 || k > n {
                    return Err(usage(format!("--k must satisfy 1 <= k <= n, got k={k}")));
                }
                let l = pad(n + k)?;
                TypeAParams::new(n, k, l)
                    .map(Params::A)
                    .map_err(|e| usage(format!("--lambda: {e}")))
            }
            TypeArg::B | TypeArg::C | TypeArg::D => {
                if self.n.is_some() || self.k.is_some() {
                    return Err(usage("--n and --k apply to type A only; use --m"));
                }
                let family = match ty {
                    TypeArg::B => Family::B,
                    TypeArg::C => Family::C,
                    _ => Family::D,
                };
                let component = match self.spin_component {
                    ComponentArg::Both => SpinComponent::Both,
                    _ if family != Family::D => {
                        return Err(usage("--spin-component applies to type D only"))
                    }
                    ComponentArg::Even => SpinComponent::Even,
                    ComponentArg::Odd => SpinComponent::Odd,
                };
                let m = self
                    .m
                    .ok_or_else(|| usage("--m is required for types B, C, D"))?;
                if m == 0 || m > 63 {
                    return Err(usage(format!("--m must be in 1..=63, got {m}")));
                }
                let l = pad(m)?;
                BcdParams::with_component(family, m, l, component)
                    .map(Params::Bcd)
                    .map_err(|e| usage(format!("--lambda: {e}")))
            }
        }
    }
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json renders"));
}

/// Left-aligned columns separated by two spaces.
fn aligned(rows: &[Vec<String>]) -> Vec<String> {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    rows.iter()
        .map(|r| {
            let cells: Vec<String> = r
                .iter()
                .enumerate()
                .map(|(c, s)| format!("{s:<w$}", w = widths[c]))
                .collect();
            cells.join("  ").trim_end().to_string()
        })
        .collect()
}

fn cmd_betti(t: &Target) -> Outcome {
    let p = t.inner.params()?;
    let table = homology_terms(&p)?;
    if t.json {
        print_json(&table.to_json());
        return Ok(());
    }
    println!("{}", p.label());
    let mut rows = vec![vec![
        "S".into(),
        "hom".into(),
        "internal".into(),
        "weights".into(),
        "dim".into(),
    ]];
    for term in &table.terms {
        let w: Vec<String> = term.weights.iter().map(|w| w.to_string()).collect();
        rows.push(vec![
            term.subset.to_string(),
            term.hom.to_string(),
            term.internal.to_string(),
            w.join(" ⊗ "),
            term.dim.to_string(),
        ]);
    }
    for line in aligned(&rows) {
        println!("{line}");
    }
    let totals: Vec<String> = table.totals.iter().map(|x| x.to_string()).collect();
    println!("by degree {}", totals.join(" "));
    println!("total {}", table.grand_total);
    Ok(())
}

fn cmd_char(t: &Target, t_graded: bool) -> Outcome {
    let p = t.inner.params()?;
    let c = if t_graded {
        graded_character(&p)?
    } else {
        total_character(&p)?
    };
    let prefix = var_prefix(&p);
    if t.json {
        print_json(&json!({
            "params": p,
            "t_graded": t_graded,
            "character": c.to_json(prefix),
        }));
    } else {
        println!("{}", p.label());
        println!("{}", c.display_with(prefix));
    }
    Ok(())
}

fn cmd_blocks(t: &Target) -> Outcome {
    let p = t.inner.params()?;
    let bs = blocks(&p)?;
    let prefix = var_prefix(&p);
    let equal = bs.iter().all(|b| b.character == bs[0].character);
    if t.json {
        print_json(&json!({
            "params": p,
            "blocks": bs.iter().map(|b| json!({
                "T": b.key,
                "dim": b.dim.to_string(),
                "character": b.character.to_json(prefix),
            })).collect::<Vec<_>>(),
            "all_equal": equal,
        }));
        return Ok(());
    }
    println!("{}", p.label());
    for b in &bs {
        println!("T={} dim {}", b.key, b.dim);
        println!("  {}", b.character.display_with(prefix));
    }
    println!("all blocks equal: {}", if equal { "yes" } else { "no" });
    Ok(())
}

fn cmd_dims(t: &Target) -> Outcome {
    let p = t.inner.params()?;
    let r = total_dimension(&p).map_err(|e| match (&e, &p) {
        (Error::Unsupported(_), Params::A(_)) => usage(format!("--k: {e}")),
        _ => e.into(),
    })?;
    let mismatch = dimension_mismatch(&r);
    if t.json {
        let mut v = r.to_json();
        if let Some(w) = &mismatch {
            v["mismatch"] = w.clone();
        }
        print_json(&v);
    } else {
        let opt = |x: &Option<rho_core::Rational>| x.as_ref().map(|x| x.to_string());
        println!("{}", p.label());
        println!("{}", r.factored());
        let mut rows: Vec<Vec<String>> = vec![
            vec!["value".into(), r.value.to_string()],
            vec!["2-power".into(), r.two_power.to_string()],
            vec!["top".into(), r.top_dim.to_string()],
            vec!["bottom".into(), r.bot_dim.to_string()],
        ];
        let optional = [
            ("proposition", opt(&r.proposition)),
            ("C_λ", opt(&r.c_lambda)),
            ("Ξ1", opt(&r.xi1)),
            ("Ξ2", opt(&r.xi2)),
            ("Θ", opt(&r.theta)),
        ];
        for (name, v) in optional {
            if let Some(v) = v {
                rows.push(vec![name.into(), v]);
            }
        }
        rows.push(vec!["dim n_-".into(), r.dim_n_minus.to_string()]);
        rows.push(vec!["table total".into(), r.table_total.to_string()]);
        if let Some(c) = opt(&r.component_total) {
            rows.push(vec!["component total".into(), c]);
        }
        for line in aligned(&rows) {
            println!("{line}");
        }
    }
    match mismatch {
        Some(w) => Err(Failure::Failed(format!("dimension routes disagree: {w}"))),
        None => Ok(()),
    }
}

/// Prints the sorted summary and turns the first failure into exit 1.
fn summarize(verdicts: &[VerdictReport], timings: bool, json_out: bool) -> Outcome {
    let failed: Vec<&VerdictReport> = verdicts.iter().filter(|v| !v.pass).collect();
    let skipped = verdicts.iter().filter(|v| v.skipped.is_some()).count();
    if json_out {
        let list: Vec<Value> = verdicts
            .iter()
            .map(|v| {
                let mut j = serde_json::to_value(v).expect("verdict serializes");
                if !timings {
                    j.as_object_mut().map(|o| o.remove("ms"));
                }
                j
            })
            .collect();
        print_json(&json!({
            "verdicts": list,
            "total": verdicts.len(),
            "failed": failed.len(),
            "skipped": skipped,
        }));
    } else {
        for v in verdicts {
            if timings {
                println!("{} [{} ms]", v.line(), v.ms);
            } else {
                println!("{}", v.line());
            }
        }
        println!(
            "{} verdicts, {} passed, {} failed, {} skipped",
            verdicts.len(),
            verdicts.len() - failed.len() - skipped,
            failed.len(),
            skipped
        );
    }
    match failed.first() {
        Some(v) => Err(Failure::Failed(format!("first failure: {}", v.line()))),
        None => Ok(()),
    }
}

fn stream(v: &VerdictReport, lock: &Mutex<()>) {
    let _guard = lock.lock().unwrap_or_else(|e| e.into_inner());
    let mut err = std::io::stderr().lock();
    let _ = writeln!(err, "{} [{} ms]", v.line(), v.ms);
}

fn cmd_verify(
    target: &OptTarget,
    all: bool,
    max_size: Option<usize>,
    seed: u64,
    timings: bool,
    json_out: bool,
) -> Outcome {
    let lock = Mutex::new(());
    let verdicts = if all {
        if target.ty.is_some() || target.lambda.is_some() {
            return Err(usage(
                "--all runs the whole suite; drop --type and --lambda",
            ));
        }
        if max_size == Some(0) {
            return Err(usage("--max-size must be at least 1"));
        }
        run_suite(&SuiteConfig::new(max_size, seed), |v| stream(v, &lock))
    } else {
        let p = target.params()?;
        let v = verify_instance(&p, max_size.unwrap_or(DEFAULT_MAX_DET_SIZE));
        v.iter().for_each(|x| stream(x, &lock));
        v
    };
    summarize(&verdicts, timings, json_out)
}

fn cmd_identities(name: Option<&str>, size: Option<usize>, json_out: bool) -> Outcome {
    let ids: Vec<Identity> = match name {
        Some(n) => vec![n
            .parse()
            .map_err(|e: Error| usage(format!("--name: {e}")))?],
        None => Identity::ALL.to_vec(),
    };
    if size == Some(0) {
        return Err(usage("--size must be at least 1"));
    }
    let mut verdicts = Vec::new();
    for id in ids {
        let sizes = match (size, id) {
            (Some(s), _) => s..=s,
            (None, Identity::DenomProduct) => 1..=5,
            (None, _) => 1..=3,
        };
        for s in sizes {
            verdicts.push(check_identity(id, s));
        }
    }
    sort_verdicts(&mut verdicts);
    if json_out {
        print_json(&Value::Array(
            verdicts.iter().map(|v| v.identity_json()).collect(),
        ));
    } else {
        for v in &verdicts {
            println!("{}", v.line());
        }
    }
    match verdicts.iter().find(|v| !v.pass) {
        Some(v) => Err(Failure::Failed(format!("first failure: {}", v.line()))),
        None => Ok(()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let outcome = match &cli.command {
        Command::Betti(t) => cmd_betti(t),
        Command::Char { target, t_graded } => cmd_char(target, *t_graded),
        Command::Blocks(t) => cmd_blocks(t),
        Command::Dims(t) => cmd_dims(t),
        Command::Verify {
            target,
            all,
            max_size,
            seed,
            timings,
            json,
        } => cmd_verify(target, *all, *max_size, *seed, *timings, *json),
        Command::Identities { name, size, json } => cmd_identities(name.as_deref(), *size, *json),
    };
    ExitCode::from(exit_code(outcome))
}

/// 0 on success, 1 for a verified failure, 2 for unusable input.
fn exit_code(outcome: Outcome) -> u8 {
    match outcome {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(Failure::Failed(msg)) => {
            eprintln!("{msg}");
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn verdict(check: &str, pass: bool) -> VerdictReport {
        VerdictReport {
            check: check.into(),
            params: json!({ "size": 1 }),
            pass,
            witness: (!pass).then(|| json!({ "lhs": "1", "rhs": "2" })),
            skipped: None,
            ms: 3,
        }
    }

    #[test]
    fn failing_verdicts_exit_one_with_the_first_witness() {
        let vs = [verdict("a", true), verdict("b", false), verdict("c", false)];
        match summarize(&vs, false, false) {
            Err(Failure::Failed(msg)) => {
                assert!(msg.contains("FAIL b") && msg.contains("witness"), "{msg}")
            }
            _ => panic!("expected a failure"),
        }
        assert_eq!(exit_code(summarize(&vs, false, true)), 1);
    }

    #[test]
    fn passing_and_skipped_verdicts_exit_zero() {
        let mut skip = verdict("s", true);
        skip.skipped = Some("too large".into());
        assert_eq!(
            exit_code(summarize(&[verdict("a", true), skip], false, false)),
            0
        );
    }

    #[test]
    fn core_errors_split_into_usage_and_failure() {
        assert_eq!(exit_code(Err(Error::Invalid("x".into()).into())), 2);
        assert_eq!(exit_code(Err(Error::Unsupported("x".into()).into())), 2);
        assert_eq!(exit_code(Err(Error::DivisionByZero.into())), 1);
    }
}
