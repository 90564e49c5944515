//! JSON input documents, builtin representations and the command line front end.
//!
//! Document layout (all integers that can grow large are decimal strings):
//!
//! ```json
//! {
//!   "schema": 1,
//!   "group": {"n": 3, "q": 3},
//!   "representation": {"degree": "26", "values": ["-6"]},
//!   "options": {"max_degree": 16, "output_format": "json"}
//! }
//! ```
//!
//! `representation` may instead be `{"builtin": "pi1-doubled", "params": {}}`.

use std::ffi::OsString;
use std::io::Read;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, BigUint};
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::f2poly::GF2Poly;
use crate::swc_gl::GradedClass;
use crate::swc_sl::{
    multiplicities, sl3_obstruction_class, sl5_w8, sl_total_swc, universal_w4, universal_w8, w_top_vanishes,
    window_multiplicities, CharData, GroupSpec, DEFAULT_MAX_DEGREE,
};
use crate::symfunc::{dickson_factor, dickson_full, to_elementary_basis};

pub const SCHEMA_VERSION: u32 = 1;

pub const BUILTINS: [&str; 4] = ["trivial", "regular", "pi1-doubled", "pi2-doubled"];

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Options {
    pub max_degree: Option<u64>,
    pub output_format: Option<OutputFormat>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RepresentationSpec {
    Explicit { degree: BigUint, values: Vec<BigInt> },
    Builtin { name: String },
}

/// A parsed and validated input document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepInputDocument {
    pub group: GroupSpec,
    pub representation: RepresentationSpec,
    pub options: Options,
    data: CharData,
}

impl RepInputDocument {
    pub fn new(group: GroupSpec, representation: RepresentationSpec, options: Options) -> Result<Self> {
        let data = match &representation {
            RepresentationSpec::Explicit { degree, values } => CharData::new(group, degree.clone(), values.clone())?,
            RepresentationSpec::Builtin { name } => builtin_rep(name, group)?,
        };
        Ok(RepInputDocument { group, representation, options, data })
    }

    pub fn char_data(&self) -> &CharData {
        &self.data
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    schema: Option<u32>,
    group: RawGroup,
    representation: RawRepresentation,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    options: Option<RawOptions>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGroup {
    n: u32,
    q: u64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRepresentation {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    degree: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    values: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    builtin: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    params: Option<Map<String, Value>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOptions {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    max_degree: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    output_format: Option<OutputFormat>,
}

fn parse_decimal<T: FromStr>(field: &str, text: &str) -> Result<T> {
    let trimmed = text.trim();
    let digits = trimmed.strip_prefix(['-', '+']).unwrap_or(trimmed);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("{field}: '{text}' is not a decimal integer")));
    }
    trimmed
        .parse()
        .map_err(|_| Error::Parse(format!("{field}: '{text}' is out of range")))
}

/// Parses and validates a JSON document.
pub fn parse_document(text: &str) -> Result<RepInputDocument> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let raw: RawDocument = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        Error::Parse(format!("line {}, column {}, at '{path}': {inner}", inner.line(), inner.column()))
    })?;
    if let Some(v) = raw.schema {
        if v != SCHEMA_VERSION {
            return Err(Error::Validation(format!("schema: unsupported version {v}, expected {SCHEMA_VERSION}")));
        }
    }
    let group = GroupSpec::new(raw.group.n, raw.group.q).map_err(|e| prefix("group", e))?;
    let rep = raw.representation;
    let representation = match (rep.degree, rep.values, rep.builtin) {
        (Some(degree), Some(values), None) => {
            if rep.params.is_some() {
                return Err(Error::Validation("representation.params: only allowed with a builtin".into()));
            }
            let degree = parse_decimal("representation.degree", &degree)?;
            let values = values
                .iter()
                .enumerate()
                .map(|(i, v)| parse_decimal(&format!("representation.values[{i}]"), v))
                .collect::<Result<Vec<BigInt>>>()?;
            RepresentationSpec::Explicit { degree, values }
        }
        (None, None, Some(name)) => {
            if rep.params.as_ref().is_some_and(|p| !p.is_empty()) {
                return Err(Error::Validation(format!("representation.params: builtin '{name}' takes no parameters")));
            }
            RepresentationSpec::Builtin { name }
        }
        _ => {
            return Err(Error::Validation(
                "representation: give either 'degree' and 'values' or 'builtin'".into(),
            ))
        }
    };
    let options = raw
        .options
        .map(|o| Options { max_degree: o.max_degree, output_format: o.output_format })
        .unwrap_or_default();
    RepInputDocument::new(group, representation, options).map_err(|e| prefix("representation", e))
}

fn prefix(field: &str, e: Error) -> Error {
    match e {
        Error::Validation(msg) => Error::Validation(format!("{field}: {msg}")),
        other => other,
    }
}

/// Canonical JSON text of a document.
pub fn render_document(doc: &RepInputDocument) -> String {
    let representation = match &doc.representation {
        RepresentationSpec::Explicit { degree, values } => RawRepresentation {
            degree: Some(degree.to_string()),
            values: Some(values.iter().map(|v| v.to_string()).collect()),
            builtin: None,
            params: None,
        },
        RepresentationSpec::Builtin { name } => RawRepresentation {
            degree: None,
            values: None,
            builtin: Some(name.clone()),
            params: Some(Map::new()),
        },
    };
    let options = (doc.options != Options::default()).then_some(RawOptions {
        max_degree: doc.options.max_degree,
        output_format: doc.options.output_format,
    });
    let raw = RawDocument {
        schema: Some(SCHEMA_VERSION),
        group: RawGroup { n: doc.group.n(), q: doc.group.q() },
        representation,
        options,
    };
    serde_json::to_string_pretty(&raw).expect("plain data serializes")
}

/// Character data of a named example representation.
///
/// `pi1-doubled` and `pi2-doubled` are `S(Ind_P^G alpha)` and
/// `S(Ind_P^G sigma_phi)` for `SL(3,q)`, where `S(pi) = pi + pi^dual`
/// doubles the (real) character.
pub fn builtin_rep(name: &str, group: GroupSpec) -> Result<CharData> {
    let half = group.half();
    let q = BigInt::from(group.q());
    let (degree, values) = match name {
        "trivial" => (BigUint::from(1u32), vec![BigInt::from(1); half]),
        "regular" => (group.order(), vec![BigInt::from(0); half]),
        "pi1-doubled" | "pi2-doubled" => {
            if group.n() != 3 {
                return Err(Error::Arity(format!("builtin '{name}' exists only for n = 3")));
            }
            let plane: BigInt = &q * &q + &q + 1;
            let (deg, chi): (BigInt, BigInt) = if name == "pi1-doubled" {
                (plane, -&q)
            } else {
                ((&q - BigInt::from(1)) * plane, BigInt::from(1) - &q)
            };
            let degree = (deg * BigInt::from(2)).to_biguint().expect("positive");
            (degree, vec![chi * BigInt::from(2)])
        }
        other => return Err(Error::UnknownBuiltin(other.to_string())),
    };
    CharData::new(group, degree, values)
}

#[derive(Parser, Debug)]
#[command(name = "stiefel", version, about = "Stiefel-Whitney classes of orthogonal representations of SL(n,q)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Total class up to a degree bound.
    Compute {
        #[command(flatten)]
        rep: RepArgs,
        #[arg(long)]
        max_degree: Option<u64>,
        #[arg(long, value_enum, default_value_t = BasisArg::Elementary)]
        basis: BasisArg,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Multiplicities m_0..m_((n-1)/2) of the restriction to the diagonal 2-torsion.
    Decompose {
        #[command(flatten)]
        rep: RepArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Expansion of the Dickson factor D^[k] (or the full product without --k).
    Dickson {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        max_degree: Option<u64>,
        #[arg(long, value_enum, default_value_t = BasisArg::Elementary)]
        basis: BasisArg,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Vanishing of w_4, w_8 and the top class.
    Vanish {
        #[command(flatten)]
        rep: RepArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// First nonzero positive-degree class for SL(3,q).
    Obstruction {
        #[command(flatten)]
        rep: RepArgs,
        #[command(flatten)]
        out: OutArgs,
    },
}

#[derive(Args, Debug)]
struct RepArgs {
    /// JSON input document ("-" reads standard input).
    #[arg(long, conflicts_with_all = ["n", "q", "degree", "values", "builtin"])]
    input: Option<String>,
    #[arg(long = "n")]
    n: Option<u32>,
    #[arg(long = "q")]
    q: Option<u64>,
    #[arg(long, allow_hyphen_values = true, conflicts_with = "builtin")]
    degree: Option<String>,
    /// Comma-separated chi(b_2), chi(b_4), ...
    #[arg(long, allow_hyphen_values = true, conflicts_with = "builtin")]
    values: Option<String>,
    #[arg(long)]
    builtin: Option<String>,
}

#[derive(Args, Debug)]
struct OutArgs {
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BasisArg {
    Elementary,
    Monomial,
}

/// Captured result of one CLI invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum CliError {
    Usage(String),
    Lib(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn load_input(rep: &RepArgs) -> CliResult<RepInputDocument> {
    if let Some(path) = &rep.input {
        let mut text = String::new();
        let read = if path == "-" {
            std::io::stdin().read_to_string(&mut text).map(|_| ())
        } else {
            std::fs::read_to_string(path).map(|t| text = t)
        };
        read.map_err(|e| CliError::Usage(format!("cannot read {path}: {e}")))?;
        return Ok(parse_document(&text)?);
    }
    let (Some(n), Some(q)) = (rep.n, rep.q) else {
        return Err(CliError::Usage("give --input, or --n and --q with a representation".into()));
    };
    let group = GroupSpec::new(n, q)?;
    let representation = match (&rep.builtin, &rep.degree, &rep.values) {
        (Some(name), None, None) => RepresentationSpec::Builtin { name: name.clone() },
        (None, Some(degree), values) => {
            let degree = parse_decimal("--degree", degree)?;
            let values = match values {
                None => Vec::new(),
                Some(v) if v.trim().is_empty() => Vec::new(),
                Some(v) => v
                    .split(',')
                    .enumerate()
                    .map(|(i, x)| parse_decimal(&format!("--values[{i}]"), x))
                    .collect::<Result<Vec<BigInt>>>()?,
            };
            RepresentationSpec::Explicit { degree, values }
        }
        _ => return Err(CliError::Usage("give --builtin, or --degree with --values".into())),
    };
    Ok(RepInputDocument::new(group, representation, Options::default())?)
}

fn wants_json(flag: bool, doc: Option<&RepInputDocument>) -> bool {
    flag || doc.is_some_and(|d| d.options.output_format == Some(OutputFormat::Json))
}

fn render_class(class: &GradedClass, json: bool) -> String {
    let parts = class.classes();
    if json {
        let mut classes = Map::new();
        for (k, p) in &parts {
            classes.insert(k.to_string(), Value::String(p.to_string()));
        }
        let mut out = json!({ "classes": classes });
        if class.delta {
            out["exterior_factor"] = Value::Bool(true);
        }
        return out.to_string() + "\n";
    }
    parts.iter().map(|(k, p)| format!("w_{k} = {p}\n")).collect()
}

fn poly_or_zero(p: &GF2Poly) -> String {
    p.clone().untruncated().to_string()
}

fn run(cli: Cli) -> CliResult<(String, bool)> {
    match cli.command {
        Command::Compute { rep, max_degree, basis, out } => {
            let doc = load_input(&rep)?;
            let json = wants_json(out.json, Some(&doc));
            let bound = max_degree.or(doc.options.max_degree).unwrap_or(DEFAULT_MAX_DEGREE);
            let mut class = sl_total_swc(doc.char_data(), bound)?;
            if basis == BasisArg::Monomial {
                class = class.to_monomial_basis()?;
            }
            Ok((render_class(&class, json), json))
        }
        Command::Decompose { rep, out } => {
            let doc = load_input(&rep)?;
            let json = wants_json(out.json, Some(&doc));
            let m = multiplicities(doc.char_data());
            let n = doc.group.n() as usize;
            let full: Vec<String> = (0..n).map(|k| m.get(k.min(n - k)).to_string()).collect();
            if json {
                let half: Vec<String> = m.iter().map(|x| x.to_string()).collect();
                Ok((json!({ "m": half, "restriction": full }).to_string() + "\n", true))
            } else {
                let lines: String = m.iter().enumerate().map(|(k, x)| format!("m_{k} = {x}\n")).collect();
                Ok((lines + &format!("restriction = ({})\n", full.join(", ")), false))
            }
        }
        Command::Dickson { r, k, max_degree, basis, out } => {
            let poly = match k {
                Some(k) => dickson_factor(r, k, max_degree)?,
                None => dickson_full(r, max_degree)?,
            };
            let poly = match basis {
                BasisArg::Elementary => to_elementary_basis(&poly)?,
                BasisArg::Monomial => poly,
            };
            let text = poly_or_zero(&poly);
            if out.json {
                let mut obj = json!({ "r": r, "poly": text });
                if let Some(k) = k {
                    obj["k"] = json!(k);
                }
                Ok((obj.to_string() + "\n", true))
            } else {
                Ok((text + "\n", false))
            }
        }
        Command::Vanish { rep, out } => {
            let doc = load_input(&rep)?;
            let json = wants_json(out.json, Some(&doc));
            let report = vanish_report(doc.char_data())?;
            if json {
                Ok((report.to_string() + "\n", true))
            } else {
                let obj = report.as_object().expect("object");
                Ok((obj.iter().map(|(k, v)| format!("{k} = {}\n", plain(v))).collect(), false))
            }
        }
        Command::Obstruction { rep, out } => {
            let doc = load_input(&rep)?;
            let json = wants_json(out.json, Some(&doc));
            let data = doc.char_data();
            let e = crate::swc_sl::sl3_e(data)?;
            let found = sl3_obstruction_class(data)?;
            if json {
                let obj = match &found {
                    Some((deg, class)) => json!({ "e": e.to_string(), "degree": deg, "class": class.to_string() }),
                    None => json!({ "e": e.to_string(), "degree": null, "class": null }),
                };
                Ok((obj.to_string() + "\n", true))
            } else {
                Ok(match found {
                    Some((deg, class)) => (format!("e = {e}\nw_{deg} = {class}\n"), false),
                    None => (format!("e = {e}\nall positive-degree classes vanish\n"), false),
                })
            }
        }
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Object(m) => m.iter().map(|(k, v)| format!("{k}: {}", plain(v))).collect::<Vec<_>>().join(", "),
        other => other.to_string(),
    }
}

/// `w_4`, `w_8` and top-class verdicts with their congruence certificates.
fn vanish_report(data: &CharData) -> Result<Value> {
    let group = data.group();
    let mut certificate = Map::new();
    let total = || sl_total_swc(data, 8);
    let (w4, w8) = if group.n() >= 5 {
        let (m1, m2) = window_multiplicities(data)?;
        for modulus in [4u32, 8] {
            certificate.insert(format!("m1 mod {modulus}"), json!((&m1 % modulus).to_string()));
            certificate.insert(format!("m2 mod {modulus}"), json!((&m2 % modulus).to_string()));
        }
        let w4 = universal_w4(data)?;
        let w8 = if !w4.is_zero() {
            total()?.degree_part(8)
        } else if group.q_mod4() == 1 {
            universal_w8(data)?
        } else if group.n() == 5 {
            sl5_w8(data)?
        } else {
            total()?.degree_part(8)
        };
        (w4, w8)
    } else {
        let class = total()?;
        (class.degree_part(4), class.degree_part(8))
    };
    let top = w_top_vanishes(data)?;
    certificate.insert("m0".into(), json!(top.m0.to_string()));
    let w_top = if top.vanishes {
        "0".to_string()
    } else {
        match &top.e {
            Some(e) if e.count_ones() <= 16 => top.top_class()?.map(|p| p.to_string()).unwrap_or_default(),
            _ => "nonzero".to_string(),
        }
    };
    Ok(json!({
        "w4": poly_or_zero(&w4),
        "w8": poly_or_zero(&w8),
        "w_top": w_top,
        "certificate": certificate,
    }))
}

fn error_json(kind: &str, message: &str) -> String {
    json!({ "error": { "kind": kind, "message": message } }).to_string() + "\n"
}

/// Runs the command line interface on `argv` (including the program name).
/// Exit codes: 0 success, 1 validation or computation error, 2 usage error.
pub fn run_cli<I, T>(argv: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let json_flag = argv.iter().any(|a| a == "--json");
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return CliOutput { code: 0, stdout: rendered, stderr: String::new() };
            }
            let stderr = if json_flag { error_json("UsageError", rendered.trim()) } else { rendered };
            return CliOutput { code: 2, stdout: String::new(), stderr };
        }
    };
    match run(cli) {
        Ok((stdout, _)) => CliOutput { code: 0, stdout, stderr: String::new() },
        Err(CliError::Usage(msg)) => CliOutput {
            code: 2,
            stdout: String::new(),
            stderr: if json_flag { error_json("UsageError", &msg) } else { format!("error: {msg}\n") },
        },
        Err(CliError::Lib(e)) => CliOutput {
            code: 1,
            stdout: String::new(),
            stderr: if json_flag { error_json(e.kind(), &e.to_string()) } else { format!("error: {e}\n") },
        },
    }
}
