use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use braidulam::classifier::certificate::{classify_ma_with, SampleOptions};
use braidulam::classifier::parity::sampled_parity;
use braidulam::classifier::witness::witness_ma;
use braidulam::oracle::{search_system, SearchBounds, DEFAULT_BUDGET};
use braidulam::param_braid::verify_param_presentation;
use braidulam::torus_braid::verify_presentation;
use braidulam::{
    classify, verify_certificate, BundleKind, Certificate, ClassDescriptor, FreeWord, HomClassMA, HomClassT3,
    Involution,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

const SCHEMA_VERSION: u32 = 1;
const SEED_VAR: &str = "BRAIDULAM_SEED";

#[derive(Parser)]
#[command(name = "braidulam", version, about = "Borsuk-Ulam classifier for torus bundles over the circle")]
struct Cli {
    /// Output format; text is a rendering of the JSON document.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Bundle {
    Ma,
    T3,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a homotopy class and print a certificate.
    Classify(ClassifyArgs),
    /// Print the explicit witness triple for an MA class with odd r.
    Witness {
        /// r=..,s=..,u=..,v=..
        #[arg(long)]
        class: String,
    },
    /// Re-check a certificate read from a file or standard input.
    Verify {
        /// Certificate file; standard input when omitted or `-`.
        file: Option<PathBuf>,
    },
    /// Check every relation of the braid and parametrized braid presentations.
    Relations,
    /// Bounded search for solutions of the MA system.
    Search(SearchArgs),
    /// Evaluate epsilon on a balanced word, e.g. "B" or "x y x^-1 y^-1".
    Epsilon { word: String },
}

#[derive(Args)]
struct ClassifyArgs {
    #[arg(long, value_enum, requires = "descriptor")]
    bundle: Option<Bundle>,
    /// MA class as r=..,s=..,u=..,v=..
    #[arg(long, group = "descriptor")]
    class: Option<String>,
    /// T3 class as "r1,r3,u;r2,r4,v"
    #[arg(long, group = "descriptor")]
    matrix: Option<String>,
    /// JSON class descriptor file; standard input when no descriptor flag is given.
    #[arg(long, conflicts_with = "descriptor")]
    input: Option<PathBuf>,
    #[arg(long)]
    involution: Option<String>,
    /// Attach this many seeded parity samples to MA BUP certificates.
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 4)]
    max_factors: usize,
    #[arg(long, default_value_t = 3)]
    max_exp: i64,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    class: String,
    #[arg(long, default_value_t = 2)]
    max_factors: usize,
    #[arg(long, default_value_t = 2)]
    max_exp: i64,
    /// Seed for the sampled parity pass that accompanies the search.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    samples: usize,
    /// Refuse searches whose sieve leaves more candidates than this.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u128,
}

enum Failure {
    /// Exit 1: the input was understood but does not verify.
    Rejected(String, Option<Value>),
    /// Exit 2: the input could not be understood.
    Usage(String),
}

impl From<braidulam::Error> for Failure {
    fn from(e: braidulam::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<Value, Failure>;

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("library types serialize")
}

fn seed(flag: u64) -> Result<u64, Failure> {
    match std::env::var(SEED_VAR) {
        Ok(s) => s.trim().parse().map_err(|_| Failure::Usage(format!("{SEED_VAR} is not an unsigned integer: `{s}`"))),
        Err(_) => Ok(flag),
    }
}

fn read_input(path: Option<&PathBuf>) -> Result<String, Failure> {
    let mut s = String::new();
    match path {
        Some(p) if p.as_os_str() != "-" => {
            s = std::fs::read_to_string(p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
        }
        _ => {
            std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
        }
    }
    Ok(s)
}

fn parse_ma_class(s: &str) -> Result<HomClassMA, Failure> {
    let mut vals: [Option<i64>; 4] = [None; 4];
    for part in s.split(',') {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| Failure::Usage(format!("expected key=value in --class, got `{part}`")))?;
        let slot = match k.trim() {
            "r" => 0,
            "s" => 1,
            "u" => 2,
            "v" => 3,
            other => return Err(Failure::Usage(format!("unknown class coordinate `{other}`"))),
        };
        if vals[slot].is_some() {
            return Err(Failure::Usage(format!("coordinate `{}` given twice", k.trim())));
        }
        let v = v.trim().parse().map_err(|_| Failure::Usage(format!("`{}` is not an integer", v.trim())))?;
        vals[slot] = Some(v);
    }
    match vals {
        [Some(r), Some(s), Some(u), Some(v)] => Ok(HomClassMA::new(r, s, u, v)),
        _ => Err(Failure::Usage("--class needs all of r, s, u, v".into())),
    }
}

fn parse_matrix(s: &str) -> Result<HomClassT3, Failure> {
    let rows: Vec<&str> = s.split(';').collect();
    if rows.len() != 2 {
        return Err(Failure::Usage(format!("--matrix needs two rows separated by `;`, got `{s}`")));
    }
    let mut m = [[0i64; 3]; 2];
    for (i, row) in rows.iter().enumerate() {
        let entries: Vec<&str> = row.split(',').map(str::trim).collect();
        if entries.len() != 3 {
            return Err(Failure::Usage(format!("matrix row `{row}` needs three entries")));
        }
        for (j, e) in entries.iter().enumerate() {
            m[i][j] = e.parse().map_err(|_| Failure::Usage(format!("`{e}` is not an integer")))?;
        }
    }
    Ok(HomClassT3::from_matrix(m))
}

fn parse_involution(s: Option<&str>) -> Result<Option<Involution>, Failure> {
    s.map(|s| s.parse().map_err(Failure::from)).transpose()
}

fn run_classify(a: &ClassifyArgs) -> Outcome {
    let desc = match (a.bundle, &a.class, &a.matrix) {
        (Some(Bundle::Ma), Some(c), None) => ClassDescriptor::Ma { class: parse_ma_class(c)? },
        (Some(Bundle::T3), None, Some(m)) => ClassDescriptor::t3(&parse_matrix(m)?),
        (Some(Bundle::Ma), _, _) => return Err(Failure::Usage("--bundle ma takes --class".into())),
        (Some(Bundle::T3), _, _) => return Err(Failure::Usage("--bundle t3 takes --matrix".into())),
        (None, None, None) => {
            let text = read_input(a.input.as_ref())?;
            serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("class descriptor: {e}")))?
        }
        (None, _, _) => return Err(Failure::Usage("--class and --matrix need --bundle".into())),
    };
    let inv = parse_involution(a.involution.as_deref())?;
    let cert = match (&desc, a.samples) {
        (ClassDescriptor::Ma { class }, Some(samples)) => {
            if inv.is_some_and(|i| i != Involution::Tau) {
                return Err(Failure::Usage("MA classes only admit the involution tau".into()));
            }
            let o = SampleOptions { seed: seed(a.seed)?, samples, max_factors: a.max_factors, max_exp: a.max_exp };
            classify_ma_with(class, Some(o))?
        }
        (ClassDescriptor::T3 { .. }, Some(_)) => return Err(Failure::Usage("--samples applies to MA classes".into())),
        _ => classify(&desc, inv)?,
    };
    Ok(to_value(&cert))
}

fn run_verify(file: Option<&PathBuf>) -> Outcome {
    let text = read_input(file)?;
    let raw: Value = serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("certificate: {e}")))?;
    let cert: Certificate = match serde_json::from_value(raw) {
        Ok(c) => c,
        Err(e) => return Err(Failure::Rejected(format!("malformed certificate: {e}"), None)),
    };
    match verify_certificate(&cert) {
        Ok(rep) => {
            let v = json!({ "schema_version": SCHEMA_VERSION, "report": to_value(&rep) });
            if rep.verified {
                Ok(v)
            } else {
                Err(Failure::Rejected("certificate not verified".into(), Some(v)))
            }
        }
        Err(e) => Err(Failure::Rejected(format!("malformed certificate: {e}"), None)),
    }
}

fn run_relations() -> Outcome {
    let mut reports = verify_presentation();
    reports.push(verify_param_presentation(BundleKind::MaUnipotent));
    reports.push(verify_param_presentation(BundleKind::T3Trivial));
    let ok = reports.iter().all(|r| r.all_passed());
    let v = json!({ "schema_version": SCHEMA_VERSION, "all_passed": ok, "reports": to_value(&reports) });
    if ok {
        Ok(v)
    } else {
        Err(Failure::Rejected("some relations failed".into(), Some(v)))
    }
}

fn run_search(a: &SearchArgs) -> Outcome {
    let cls = parse_ma_class(&a.class)?;
    if a.max_exp < 0 {
        return Err(Failure::Usage("--max-exp must be non-negative".into()));
    }
    let bounds = SearchBounds { max_factors: a.max_factors, max_exp: a.max_exp };
    let report = search_system(&cls, bounds, a.budget)?;
    // the parity obstruction only speaks about even r
    let samples = if cls.r % 2 == 0 {
        to_value(&sampled_parity(&cls, seed(a.seed)?, a.samples, a.max_factors, a.max_exp)?)
    } else {
        Value::Null
    };
    Ok(json!({ "schema_version": SCHEMA_VERSION, "search": to_value(&report), "sampled_parity": samples }))
}

fn run_witness(class: &str) -> Outcome {
    let cls = parse_ma_class(class)?;
    if cls.r % 2 == 0 {
        return Err(Failure::Rejected(format!("{cls} has even r: no witness exists"), None));
    }
    let w = witness_ma(&cls)?;
    Ok(json!({ "schema_version": SCHEMA_VERSION, "class": to_value(&cls), "witness": to_value(&w.to_text()) }))
}

fn run_epsilon(word: &str) -> Outcome {
    let w: FreeWord = word.parse()?;
    Ok(json!(w.epsilon()?))
}

fn render_text(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                if x.is_object() || (x.is_array() && !is_flat(x)) {
                    out.push_str(&format!("{pad}{k}:\n"));
                    render_text(x, indent + 1, out);
                } else {
                    out.push_str(&format!("{pad}{k}: {}\n", scalar(x)));
                }
            }
        }
        Value::Array(xs) if !is_flat(v) => {
            for x in xs {
                out.push_str(&format!("{pad}-\n"));
                render_text(x, indent + 1, out);
            }
        }
        _ => out.push_str(&format!("{pad}{}\n", scalar(v))),
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(xs) => xs.iter().all(|x| !x.is_object() && is_flat(x)),
        Value::Object(_) => false,
        _ => true,
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(xs) => format!("[{}]", xs.iter().map(scalar).collect::<Vec<_>>().join(", ")),
        other => other.to_string(),
    }
}

fn emit(v: &Value, format: Format) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(v).expect("json values serialize")),
        Format::Text => {
            let mut s = String::new();
            render_text(v, 0, &mut s);
            print!("{s}");
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Classify(a) => run_classify(a),
        Command::Witness { class } => run_witness(class),
        Command::Verify { file } => run_verify(file.as_ref()),
        Command::Relations => run_relations(),
        Command::Search(a) => run_search(a),
        Command::Epsilon { word } => run_epsilon(word),
    };
    match result {
        Ok(v) => {
            emit(&v, cli.format);
            ExitCode::SUCCESS
        }
        Err(Failure::Rejected(msg, report)) => {
            if let Some(v) = report {
                emit(&v, cli.format);
            }
            eprintln!("braidulam: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("braidulam: {msg}");
            ExitCode::from(2)
        }
    }
}
