//! Argument handling and output formatting for the `spinwhit` binary.
//!
//! Every successful command prints one JSON envelope
//! `{schema_version, command, input, result, warnings}`. Exit codes: 0 on
//! success, 2 on invalid input, 3 when the requested Whittaker module is zero,
//! 1 for internal failures (including failed `verify` checks).

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use spinwhit::catalog::{kspectrum_enumerate, validate_inf_char, InfCharacter, IrrLabel};
use spinwhit::gt::{branch, dimension, enumerate_patterns};
use spinwhit::radial::shift_matrix;
use spinwhit::verify::{self, Bounds, Suite};
use spinwhit::whittaker::{classify_gamma, derive_socle, satisfied_conditions, socle_filtration, GammaCondition};
use spinwhit::{Error, HalfInt, SpinWeight};

pub const SCHEMA_VERSION: &str = "1";

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_ZERO_MODULE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "spinwhit", version, about = "Socle filtrations of standard Whittaker modules for Spin(r,1)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Socle filtration of I(eta, Lambda, sigma_gamma)
    Socle(SocleArgs),
    /// Which nonvanishing condition gamma satisfies
    Classify(ModuleArgs),
    /// Run the property suites against their oracles
    Verify(VerifyArgs),
    /// Gelfand-Tsetlin patterns of a K-type
    Gt(WeightArgs),
    /// Restriction of a Spin(r) K-type to Spin(r-1)
    Branch(WeightArgs),
    /// K-types of an irreducible (g,K)-module up to a cap on lambda_1
    Kspectrum(KspectrumArgs),
    /// Shift operator P_k as a matrix of radial operators
    Shift(ShiftArgs),
}

#[derive(Args, Debug)]
pub struct ModuleArgs {
    /// Group Spin(r,1)
    #[arg(short = 'r')]
    pub r: usize,
    /// Infinitesimal character, comma separated ("5/2,1/2" or "2.5,0.5")
    #[arg(short = 'L', long = "lambda", value_parser = parse_list, allow_hyphen_values = true)]
    pub lambda: HalfList,
    /// Highest weight gamma of the M^eta-type (empty for r = 3)
    #[arg(short = 'g', long = "gamma", value_parser = parse_list, allow_hyphen_values = true, default_value = "")]
    pub gamma: HalfList,
}

#[derive(Args, Debug)]
pub struct SocleArgs {
    #[command(flatten)]
    pub module: ModuleArgs,
    /// Also rebuild the filtration from the lower-level facts and print the trace
    #[arg(long)]
    pub derive: bool,
    /// Print the diagram as a DOT digraph
    #[arg(long)]
    pub dot: bool,
    /// Print the JSON envelope (default unless --dot is given)
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, default_value = "all", value_parser = |s: &str| s.parse::<Suite>().map_err(|e| e.to_string()))]
    pub suite: Suite,
    #[arg(long)]
    pub max_rank: Option<usize>,
    #[arg(long, value_parser = parse_half)]
    pub max_entry: Option<HalfInt>,
}

#[derive(Args, Debug)]
pub struct WeightArgs {
    #[arg(short = 'r')]
    pub r: usize,
    /// Highest weight, comma separated
    #[arg(short = 'l', long = "weight", value_parser = parse_list, allow_hyphen_values = true)]
    pub weight: HalfList,
    /// Print only the dimension
    #[arg(long)]
    pub dim: bool,
}

#[derive(Args, Debug)]
pub struct KspectrumArgs {
    #[arg(short = 'r')]
    pub r: usize,
    #[arg(short = 'L', long = "lambda", value_parser = parse_list, allow_hyphen_values = true)]
    pub lambda: HalfList,
    /// pi0, pi1 or pbar<i>
    #[arg(long, value_parser = |s: &str| s.parse::<IrrLabel>().map_err(|e| e.to_string()))]
    pub label: IrrLabel,
    /// Largest lambda_1 listed
    #[arg(long, value_parser = parse_half)]
    pub cap: HalfInt,
}

#[derive(Args, Debug)]
pub struct ShiftArgs {
    #[arg(short = 'r')]
    pub r: usize,
    #[arg(short = 'l', long = "weight", value_parser = parse_list, allow_hyphen_values = true)]
    pub weight: HalfList,
    #[arg(short = 'g', long = "gamma", value_parser = parse_list, allow_hyphen_values = true, default_value = "")]
    pub gamma: HalfList,
    #[arg(short = 'k', allow_hyphen_values = true)]
    pub k: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfList(pub Vec<HalfInt>);

pub fn parse_half(s: &str) -> Result<HalfInt, String> {
    s.trim().parse::<HalfInt>().map_err(|e| e.to_string())
}

pub fn parse_list(s: &str) -> Result<HalfList, String> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    if s.is_empty() {
        return Ok(HalfList(Vec::new()));
    }
    s.split(',').map(parse_half).collect::<Result<Vec<_>, _>>().map(HalfList)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Envelope {
    pub schema_version: String,
    pub command: String,
    pub input: Value,
    pub result: Value,
    pub warnings: Vec<String>,
}

impl Envelope {
    fn new(command: &str, input: Value, result: Value, warnings: Vec<String>) -> Self {
        Envelope { schema_version: SCHEMA_VERSION.into(), command: command.into(), input, result, warnings }
    }

    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("envelope serializes");
        s.push('\n');
        s
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn fail(e: &Error) -> Self {
        let code = match e {
            Error::Consistency(_) => EXIT_INTERNAL,
            _ => EXIT_INVALID,
        };
        Output { code, stdout: String::new(), stderr: format!("error: {e}\n") }
    }
}

fn strings(v: &[HalfInt]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn module_input(m: &ModuleArgs) -> Value {
    json!({ "r": m.r, "lambda": strings(&m.lambda.0), "gamma": strings(&m.gamma.0) })
}

fn warnings_for(lam: &InfCharacter) -> Vec<String> {
    let mut w = Vec::new();
    if lam.zero_last_entry {
        w.push("zero_last_entry: Lambda_{n+1} = 0".to_string());
    }
    w
}

fn module(m: &ModuleArgs) -> Result<(InfCharacter, SpinWeight), Error> {
    let lam = validate_inf_char(m.r, &m.lambda.0)?;
    if m.r < 3 {
        return Err(Error::Domain("r must be at least 3".into()));
    }
    let gamma = SpinWeight::new(m.r - 2, m.gamma.0.clone())?;
    Ok((lam, gamma))
}

pub fn run_args<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                Output::ok(text)
            } else {
                Output { code, stdout: String::new(), stderr: text }
            }
        }
    }
}

pub fn run(cli: Cli) -> Output {
    let res = match &cli.command {
        Command::Socle(a) => socle(a),
        Command::Classify(a) => classify(a),
        Command::Verify(a) => return verify_cmd(a),
        Command::Gt(a) => gt(a),
        Command::Branch(a) => branch_cmd(a),
        Command::Kspectrum(a) => kspectrum(a),
        Command::Shift(a) => shift(a),
    };
    res.unwrap_or_else(|e| Output::fail(&e))
}

fn socle(a: &SocleArgs) -> Result<Output, Error> {
    let (lam, gamma) = module(&a.module)?;
    let tag = classify_gamma(&lam, &gamma)?;
    let warnings = warnings_for(&lam);
    let diagram = socle_filtration(&lam, &gamma)?;
    let want_json = a.json || !a.dot;
    let Some(diagram) = diagram else {
        let env = Envelope::new(
            "socle",
            module_input(&a.module),
            json!({ "condition": tag.to_string(), "zero_module": true }),
            warnings,
        );
        return Ok(Output {
            code: EXIT_ZERO_MODULE,
            stdout: if want_json { env.render() } else { String::new() },
            stderr: "zero module\n".into(),
        });
    };
    let dot = diagram.to_dot("socle");
    let mut result = json!({
        "condition": tag.to_string(),
        "zero_module": false,
        "diagram": diagram,
    });
    if a.derive {
        let (derived, trace) = derive_socle(&lam, &gamma)?;
        if derived.as_ref() != Some(&diagram) {
            return Err(Error::Consistency("derived filtration differs from the stated one".into()));
        }
        result["trace"] = serde_json::to_value(&trace).expect("trace serializes");
    }
    if !want_json {
        return Ok(Output::ok(dot));
    }
    if a.dot {
        result["dot"] = Value::String(dot);
    }
    Ok(Output::ok(Envelope::new("socle", module_input(&a.module), result, warnings).render()))
}

fn classify(a: &ModuleArgs) -> Result<Output, Error> {
    let (lam, gamma) = module(a)?;
    let tags = satisfied_conditions(&lam, &gamma)?;
    let tag = classify_gamma(&lam, &gamma)?;
    let result = json!({
        "condition": tag.to_string(),
        "zero_module": tag == GammaCondition::Zero,
        "satisfied": tags.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
    });
    Ok(Output::ok(Envelope::new("classify", module_input(a), result, warnings_for(&lam)).render()))
}

fn verify_cmd(a: &VerifyArgs) -> Output {
    let mut bounds = Bounds::default_for(a.suite);
    if let Some(r) = a.max_rank {
        bounds.max_rank = r;
    }
    if let Some(e) = a.max_entry {
        bounds.max_entry = e;
    }
    let report = verify::run(a.suite, bounds);
    let passed = report.passed();
    let mut result = serde_json::to_value(&report).expect("report serializes");
    if let Some(suites) = result.get_mut("suites").and_then(Value::as_array_mut) {
        for s in suites {
            if let Some(f) = s.get_mut("failures").and_then(Value::as_array_mut) {
                f.truncate(50);
            }
        }
    }
    result["passed"] = Value::Bool(passed);
    let input = json!({ "suite": a.suite.to_string(), "max_rank": bounds.max_rank, "max_entry": bounds.max_entry.to_string() });
    let out = Envelope::new("verify", input, result, Vec::new()).render();
    Output { code: if passed { EXIT_OK } else { EXIT_INTERNAL }, stdout: out, stderr: String::new() }
}

fn gt(a: &WeightArgs) -> Result<Output, Error> {
    let w = SpinWeight::new(a.r, a.weight.0.clone())?;
    let input = json!({ "r": a.r, "weight": strings(&w.entries) });
    let result = if a.dim {
        json!(dimension(&w))
    } else {
        let pats: Vec<Vec<Vec<String>>> = enumerate_patterns(&w).iter().map(verify::pattern_rows).collect();
        json!({ "dimension": dimension(&w), "patterns": pats })
    };
    Ok(Output::ok(Envelope::new("gt", input, result, Vec::new()).render()))
}

fn branch_cmd(a: &WeightArgs) -> Result<Output, Error> {
    let w = SpinWeight::new(a.r, a.weight.0.clone())?;
    let input = json!({ "r": a.r, "weight": strings(&w.entries) });
    let parts: Vec<String> = branch(&w)?.iter().map(|b| b.to_string()).collect();
    Ok(Output::ok(Envelope::new("branch", input, json!(parts), Vec::new()).render()))
}

fn kspectrum(a: &KspectrumArgs) -> Result<Output, Error> {
    let lam = validate_inf_char(a.r, &a.lambda.0)?;
    let ks: Vec<String> = kspectrum_enumerate(&lam, a.label, a.cap)?.iter().map(|k| k.to_string()).collect();
    let input = json!({ "r": a.r, "lambda": strings(&lam.entries), "label": a.label.to_string(), "cap": a.cap.to_string() });
    Ok(Output::ok(Envelope::new("kspectrum", input, json!(ks), warnings_for(&lam)).render()))
}

fn shift(a: &ShiftArgs) -> Result<Output, Error> {
    if a.r < 3 {
        return Err(Error::Domain("r must be at least 3".into()));
    }
    let w = SpinWeight::new(a.r, a.weight.0.clone())?;
    let g = SpinWeight::new(a.r - 2, a.gamma.0.clone())?;
    let m = shift_matrix(&w, &g, a.k)?;
    let entries: Vec<Value> = m
        .entries
        .iter()
        .map(|(&(t, s), c)| json!({ "target": t, "source": s, "value": c.to_string() }))
        .collect();
    let result = json!({
        "source": m.source,
        "target": m.target,
        "entries": entries,
    });
    let input = json!({ "r": a.r, "weight": strings(&w.entries), "gamma": strings(&g.entries), "k": a.k });
    Ok(Output::ok(Envelope::new("shift", input, result, Vec::new()).render()))
}
