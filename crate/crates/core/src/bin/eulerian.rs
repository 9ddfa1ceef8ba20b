//! Command-line front end: compute polynomials, run the verification
//! registry, apply the bijections, and export coefficient tables.
//!
//! Exit codes: 0 success, 1 verification failure, 2 argument or precondition
//! error, 3 enumeration cap exceeded.

use clap::{Args, Parser, Subcommand, ValueEnum};
use eulerian::bijections::{self, BijectionError};
use eulerian::enumerate::SignedSetPartition;
use eulerian::verify::{self, CostClass, VerifyError};
use eulerian::{
    Context, EnumCaps, EulerianError, FamilyKind, FamilySpec, IntPolynomial, Sign, Word,
};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

#[derive(Parser)]
#[command(name = "eulerian", version, about = "Eulerian polynomials of types A, B, D: exact computation, identity verification, bijections, and tables")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one polynomial by enumeration or by identity.
    Compute(ComputeArgs),
    /// Run registered identities and write a JSON report.
    Verify(VerifyArgs),
    /// Apply one of the bijections to a word.
    Bijection(BijectionArgs),
    /// Export coefficient tables for whole families.
    Table(TableArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Enumerate,
    Identity,
}

impl Method {
    fn as_str(self) -> &'static str {
        match self {
            Method::Enumerate => "enumerate",
            Method::Identity => "identity",
        }
    }
}

#[derive(Args)]
struct ComputeArgs {
    /// Family: A, B, D, A_restricted, B_restricted, D_restricted, B_half, D_half.
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: u32,
    /// Last entry, for restricted families (negative values use a leading minus,
    /// standing in for the overbar notation).
    #[arg(long, allow_hyphen_values = true)]
    last: Option<i32>,
    /// Last-entry sign for half families: + or -.
    #[arg(long, allow_hyphen_values = true)]
    sign: Option<String>,
    #[arg(long, value_enum)]
    method: Method,
    /// Print the result as a JSON object instead of a bracketed list.
    #[arg(long)]
    json: bool,
    /// Cache directory (defaults to EULERIAN_CACHE_DIR if set).
    #[arg(long)]
    cache: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Run a single registered identity.
    #[arg(long, conflicts_with = "all")]
    identity: Option<String>,
    /// Run the whole registry.
    #[arg(long)]
    all: bool,
    /// Rank bound for identity-vs-identity comparisons.
    #[arg(long, default_value_t = 8)]
    cheap_max: u32,
    /// Rank bound for comparisons against brute-force enumeration.
    #[arg(long, default_value_t = 6)]
    oracle_max: u32,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BijectionArgs {
    /// One of: lemma21, lemma22, partition, smooth, nonsmooth, negation.
    #[arg(long)]
    name: String,
    /// Comma-separated signed integers. For the partition inverse, blocks are
    /// separated by '|'; for the nonsmooth inverse, the first value is the
    /// removed entry's absolute value.
    #[arg(long, allow_hyphen_values = true)]
    input: String,
    /// Ground set for lemma21/lemma22, comma-separated.
    #[arg(long, allow_hyphen_values = true)]
    ground_set: Option<String>,
    /// Apply the inverse map.
    #[arg(long)]
    inverse: bool,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long)]
    max_n: u32,
    /// Comma-separated family list.
    #[arg(long, default_value = "A,B,D")]
    families: String,
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    format: TableFormat,
    /// Write here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Json,
    Csv,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Context::with_caps(caps_from_env());
    let result = match cli.command {
        Command::Compute(args) => cmd_compute(&ctx, &args),
        Command::Verify(args) => cmd_verify(&ctx, &args),
        Command::Bijection(args) => cmd_bijection(&args),
        Command::Table(args) => cmd_table(&ctx, &args),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Cap(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Cap(_) => 3,
            CliError::Io(_) => 2,
        }
    }
}

impl From<EulerianError> for CliError {
    fn from(e: EulerianError) -> Self {
        match e {
            EulerianError::CapExceeded { .. } => CliError::Cap(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<BijectionError> for CliError {
    fn from(e: BijectionError) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn caps_from_env() -> EnumCaps {
    let mut caps = EnumCaps::default();
    if let Ok(v) = std::env::var("EULERIAN_ENUM_CAP_A") {
        if let Ok(v) = v.parse() {
            caps.type_a = v;
        }
    }
    if let Ok(v) = std::env::var("EULERIAN_ENUM_CAP_B") {
        if let Ok(v) = v.parse() {
            caps.type_b = v;
        }
    }
    caps
}

fn parse_spec(family: &str, n: u32, last: Option<i32>, sign: Option<&str>) -> Result<FamilySpec, CliError> {
    let kind = FamilyKind::from_str(family).map_err(|e| CliError::Usage(e.to_string()))?;
    let sign = sign
        .map(Sign::from_str)
        .transpose()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    FamilySpec::new(kind, n, last, sign).map_err(|e| CliError::Usage(e.to_string()))
}

fn compute_json(spec: &FamilySpec, method: Method, poly: &IntPolynomial) -> serde_json::Value {
    let mut obj = serde_json::Map::new();
    obj.insert("family".into(), spec.kind().as_str().into());
    obj.insert("n".into(), spec.n().into());
    if let Some(last) = spec.last() {
        obj.insert("last".into(), last.into());
    }
    if let Some(sign) = spec.sign() {
        obj.insert("sign".into(), sign.as_str().into());
    }
    obj.insert("method".into(), method.as_str().into());
    obj.insert(
        "coeffs".into(),
        poly.to_decimal_strings()
            .into_iter()
            .map(serde_json::Value::from)
            .collect::<Vec<_>>()
            .into(),
    );
    serde_json::Value::Object(obj)
}

fn cache_path(dir: &Path, spec: &FamilySpec, method: Method) -> PathBuf {
    let mut key = format!("{}_n{}", spec.kind().as_str(), spec.n());
    if let Some(last) = spec.last() {
        key.push_str(&format!("_last{last}"));
    }
    if let Some(sign) = spec.sign() {
        key.push_str(match sign {
            Sign::Plus => "_plus",
            Sign::Minus => "_minus",
        });
    }
    key.push_str(&format!("_{}.json", method.as_str()));
    dir.join(key)
}

/// Advisory read: any parse failure is treated as a miss.
fn cache_read(path: &Path) -> Option<IntPolynomial> {
    let text = std::fs::read_to_string(path).ok()?;
    let value: serde_json::Value = serde_json::from_str(&text).ok()?;
    let coeffs: Vec<String> = value
        .get("coeffs")?
        .as_array()?
        .iter()
        .map(|v| v.as_str().map(str::to_string))
        .collect::<Option<_>>()?;
    IntPolynomial::from_decimal_strings(&coeffs)
}

fn cmd_compute(ctx: &Context, args: &ComputeArgs) -> Result<ExitCode, CliError> {
    let spec = parse_spec(&args.family, args.n, args.last, args.sign.as_deref())?;
    let cache_dir = args
        .cache
        .clone()
        .or_else(|| std::env::var_os("EULERIAN_CACHE_DIR").map(PathBuf::from));
    let cache_file = cache_dir.as_ref().map(|d| cache_path(d, &spec, args.method));
    let mut poly = cache_file.as_ref().and_then(|p| cache_read(p));
    if poly.is_none() {
        let fresh = match args.method {
            Method::Enumerate => ctx.poly_by_enumeration(&spec)?,
            Method::Identity => ctx.poly_by_identity(&spec)?,
        };
        if let Some(path) = &cache_file {
            if let Some(dir) = path.parent() {
                std::fs::create_dir_all(dir)?;
            }
            std::fs::write(path, compute_json(&spec, args.method, &fresh).to_string())?;
        }
        poly = Some(fresh);
    }
    let poly = poly.expect("computed above");
    if args.json {
        println!("{}", compute_json(&spec, args.method, &poly));
    } else {
        println!("{}", poly.bracketed());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(ctx: &Context, args: &VerifyArgs) -> Result<ExitCode, CliError> {
    let report = if let Some(name) = &args.identity {
        let spec = verify::find_identity(name)
            .ok_or_else(|| CliError::Usage(format!("unknown identity: {name}")))?;
        let max_n = match spec.class {
            CostClass::Cheap => args.cheap_max,
            CostClass::Oracle => args.oracle_max,
        };
        verify::run_identity(ctx, name, max_n)
    } else if args.all {
        verify::run_all(ctx, args.cheap_max, args.oracle_max)
    } else {
        return Err(CliError::Usage("pass --identity NAME or --all".into()));
    }
    .map_err(|e| match e {
        VerifyError::Eulerian(inner) => CliError::from(inner),
        other => CliError::Usage(other.to_string()),
    })?;
    let json = report.to_json();
    match &args.out {
        Some(path) => std::fs::write(path, json)?,
        None => println!("{json}"),
    }
    eprintln!(
        "pass {} / fail {} / observed-disagreement {}",
        report.summary.pass, report.summary.fail, report.summary.observed_disagreement
    );
    Ok(if report.has_failures() {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn parse_ints(s: &str) -> Result<Vec<i32>, CliError> {
    s.split(',')
        .map(|p| p.trim().parse::<i32>())
        .collect::<Result<_, _>>()
        .map_err(|e| CliError::Usage(format!("malformed integer list '{s}': {e}")))
}

fn parse_word(s: &str) -> Result<Word, CliError> {
    Word::new(parse_ints(s)?).map_err(|e| CliError::Usage(e.to_string()))
}

fn show_word(w: &Word) -> String {
    format!("({w})")
}

fn cmd_bijection(args: &BijectionArgs) -> Result<ExitCode, CliError> {
    let ground_set = args
        .ground_set
        .as_deref()
        .map(|s| {
            eulerian::GroundSet::new(parse_ints(s)?).map_err(|e| CliError::Usage(e.to_string()))
        })
        .transpose()?;
    let need_set = || {
        ground_set
            .clone()
            .ok_or_else(|| CliError::Usage("this map needs --ground-set".into()))
    };
    match (args.name.as_str(), args.inverse) {
        ("lemma21", inv) => {
            let w = parse_word(&args.input)?;
            let x = need_set()?;
            let out = if inv {
                bijections::phi_lemma21_inv(&x, &w)?
            } else {
                bijections::phi_lemma21(&x, &w)?
            };
            println!("{}", show_word(&out));
            if inv {
                println!("des {} -> des_B {}", w.des(), out.des_b());
            } else {
                println!("des_B {} -> des {}", w.des_b(), out.des());
            }
        }
        ("lemma22", inv) => {
            let w = parse_word(&args.input)?;
            let x = need_set()?;
            let out = if inv {
                bijections::phi_lemma22_inv(&x, &w)?
            } else {
                bijections::phi_lemma22(&x, &w)?
            };
            println!("{}", show_word(&out));
            println!("des_B {} -> des_B {}", w.des_b(), out.des_b());
        }
        ("partition", false) => {
            let w = parse_word(&args.input)?;
            let p = bijections::phi_partition(&w)?;
            let blocks: Vec<String> = p
                .blocks()
                .iter()
                .map(|b| {
                    format!(
                        "({})",
                        b.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")
                    )
                })
                .collect();
            println!("{}", blocks.join(" | "));
            let parts: Vec<String> = p
                .blocks()
                .iter()
                .map(|b| Word::new(b.clone()).expect("valid block").des_b().to_string())
                .collect();
            println!("des_B {} = {}", w.des_b(), parts.join("+"));
        }
        ("partition", true) => {
            let blocks = args
                .input
                .split('|')
                .map(parse_ints)
                .collect::<Result<Vec<_>, _>>()?;
            let p = SignedSetPartition::new(blocks).map_err(|e| CliError::Usage(e.to_string()))?;
            let w = bijections::psi_partition(&p);
            println!("{}", show_word(&w));
            println!("des_B {}", w.des_b());
        }
        ("smooth", inv) => {
            let w = parse_word(&args.input)?;
            let out = if inv {
                bijections::phi_smooth_inv(&w)?
            } else {
                bijections::phi_smooth(&w)?
            };
            println!("{}", show_word(&out));
            if inv {
                println!("des_D {} -> des_B {}", w.des_d(), out.des_b());
            } else {
                println!("des_B {} -> des_D {}", w.des_b(), out.des_d());
            }
        }
        ("nonsmooth", false) => {
            let w = parse_word(&args.input)?;
            let (u, v) = bijections::phi_nonsmooth(&w)?;
            println!("({u} | {v})");
            println!("des_B {} = {}", w.des_b(), v.des_b());
        }
        ("nonsmooth", true) => {
            let values = parse_ints(&args.input)?;
            let (&u, rest) = values
                .split_first()
                .ok_or_else(|| CliError::Usage("empty input".into()))?;
            let v = Word::new(rest.to_vec()).map_err(|e| CliError::Usage(e.to_string()))?;
            let w = bijections::phi_nonsmooth_inv(u, &v)?;
            println!("{}", show_word(&w));
            println!("des_B {} -> des_B {}", v.des_b(), w.des_b());
        }
        ("negation", _) => {
            let w = parse_word(&args.input)?;
            let out = bijections::negation_map(&w);
            println!("{}", show_word(&out));
            println!("des_B {} -> des_B {}", w.des_b(), out.des_b());
        }
        (other, _) => {
            return Err(CliError::Usage(format!(
                "unknown bijection '{other}' (expected lemma21, lemma22, partition, smooth, nonsmooth, negation)"
            )))
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn table_specs(kind: FamilyKind, max_n: u32) -> Vec<FamilySpec> {
    let mut specs = Vec::new();
    for n in 1..=max_n {
        match kind {
            FamilyKind::A | FamilyKind::B | FamilyKind::D => {
                specs.push(FamilySpec::plain(kind, n).expect("valid"));
            }
            FamilyKind::ARestricted => {
                for last in 1..=n as i32 {
                    specs.push(FamilySpec::restricted(kind, n, last).expect("valid"));
                }
            }
            FamilyKind::BRestricted | FamilyKind::DRestricted => {
                for last in (-(n as i32)..=n as i32).filter(|&l| l != 0) {
                    specs.push(FamilySpec::restricted(kind, n, last).expect("valid"));
                }
            }
            FamilyKind::BHalf | FamilyKind::DHalf => {
                for sign in [Sign::Plus, Sign::Minus] {
                    specs.push(FamilySpec::half(kind, n, sign).expect("valid"));
                }
            }
        }
    }
    specs
}

fn cmd_table(ctx: &Context, args: &TableArgs) -> Result<ExitCode, CliError> {
    let mut kinds = args
        .families
        .split(',')
        .map(|f| FamilyKind::from_str(f.trim()).map_err(|e| CliError::Usage(e.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    kinds.sort_by_key(|k| k.as_str());
    kinds.dedup();

    let mut rows = Vec::new();
    for kind in kinds {
        for spec in table_specs(kind, args.max_n) {
            let poly = ctx.poly_by_identity(&spec)?;
            rows.push((spec, poly));
        }
    }
    rows.sort_by(|(a, _), (b, _)| {
        (a.kind().as_str(), a.n(), a.last(), a.sign().map(|s| s == Sign::Minus))
            .cmp(&(b.kind().as_str(), b.n(), b.last(), b.sign().map(|s| s == Sign::Minus)))
    });

    let text = match args.format {
        TableFormat::Csv => {
            let mut out = String::from("family,n,last,sign,method,coeffs\n");
            for (spec, poly) in &rows {
                out.push_str(&format!(
                    "{},{},{},{},identity,{}\n",
                    spec.kind().as_str(),
                    spec.n(),
                    spec.last().map(|l| l.to_string()).unwrap_or_default(),
                    spec.sign().map(|s| s.as_str().to_string()).unwrap_or_default(),
                    poly.to_decimal_strings().join(";"),
                ));
            }
            out
        }
        TableFormat::Json => {
            let objects: Vec<serde_json::Value> = rows
                .iter()
                .map(|(spec, poly)| compute_json(spec, Method::Identity, poly))
                .collect();
            format!("{}\n", serde_json::to_string_pretty(&objects).expect("serialization"))
        }
    };
    match &args.out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}
