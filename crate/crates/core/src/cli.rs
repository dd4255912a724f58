//! Command-line front end. Every subcommand writes one JSON document (or CSV
//! for `code --csv`) whose header carries `"schema": 1` and the field spec.
//!
//! Exit codes: 0 ok, 2 theorem mismatch, 64 usage or bad input, 74 I/O.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::boolfun::{classify, walsh_transform, TruthTable};
use crate::codes::{code_from_defining_set, weight_dist_via_walsh, DefiningSet};
use crate::diffsets::{is_additive_difference_set, is_multiplicative_difference_set};
use crate::error::Error;
use crate::funlib::family::FAMILY_NAMES;
use crate::funlib::{image_of_xx1, image_set, instantiate, Family, Func};
use crate::gf2m::{Elem, FieldSpec};
use crate::opoly::{is_o_polynomial, Mode};
use crate::verify::{manifest, run_suite, suite_json, Budget, Filter, Kind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_THEOREM_MISMATCH: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_IO: i32 = 74;

/// The JSON schema for every document this tool writes.
pub const REPORT_SCHEMA: &str = include_str!("../schema/report.schema.json");

#[derive(Parser, Debug)]
#[command(name = "bfcodes", version, about = "Binary codes from defining sets in GF(2^m)")]
struct Cli {
    /// Worker threads; 0 uses every core.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Walsh spectrum summary and class of a Boolean function (Tr(f) for vectorial f).
    Walsh(FnArgs),
    /// Function evaluation and the family catalog.
    #[command(name = "fn", subcommand)]
    Func(FnCmd),
    /// Code C_D from a defining set.
    #[command(subcommand)]
    Code(CodeCmd),
    /// O-polynomial tests.
    #[command(subcommand)]
    Opoly(OpolyCmd),
    /// Difference-set tests.
    #[command(subcommand)]
    Diffset(DiffsetCmd),
    /// Run registry rows.
    Verify(VerifyArgs),
    /// Print the claims manifest.
    Claims,
    /// Print the report JSON schema.
    Schema,
}

#[derive(Args, Debug)]
struct FnArgs {
    #[arg(long)]
    m: u32,
    /// Family, e.g. `gold:h=1`, `segre:a=0x05`, `dds:a`.
    #[arg(long = "fn")]
    family: String,
}

#[derive(Subcommand, Debug)]
enum FnCmd {
    /// Evaluate at one or more points.
    Eval {
        #[command(flatten)]
        f: FnArgs,
        /// Comma-separated points, decimal or 0x hex.
        #[arg(long, value_delimiter = ',')]
        x: Vec<String>,
    },
    /// Known family names.
    List,
}

#[derive(Subcommand, Debug)]
enum CodeCmd {
    /// D = support of f (of Tr(f) for vectorial f).
    FromSupport {
        #[command(flatten)]
        f: FnArgs,
        #[arg(long)]
        csv: bool,
    },
    /// D = image of f.
    FromImage {
        #[command(flatten)]
        f: FnArgs,
        /// Drop 0 from the image.
        #[arg(long)]
        star: bool,
        #[arg(long)]
        csv: bool,
    },
    /// D given explicitly.
    FromSet {
        #[arg(long)]
        m: u32,
        #[arg(long, value_delimiter = ',')]
        elems: Vec<String>,
        #[arg(long)]
        csv: bool,
    },
}

#[derive(Subcommand, Debug)]
enum OpolyCmd {
    Check {
        #[command(flatten)]
        f: FnArgs,
        /// def, 2to1 or both.
        #[arg(long, default_value = "both")]
        mode: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GroupArg {
    Add,
    Mult,
}

#[derive(Subcommand, Debug)]
enum DiffsetCmd {
    Check {
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum)]
        group: GroupArg,
        /// `support:<fn>`, `image:<fn>`, `image*:<fn>`, `xx1*:<fn>` or `elems:<x,...>`.
        #[arg(long)]
        set: String,
    },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Glob over claim ids.
    #[arg(long)]
    ids: Option<String>,
    /// Restrict to kinds: theorem, corollary, conjecture, report-mode.
    #[arg(long, value_delimiter = ',')]
    kind: Vec<String>,
    #[arg(long, default_value_t = 3)]
    m_min: u32,
    #[arg(long, default_value_t = 8)]
    m_max: u32,
    /// Override every claim's own m cap.
    #[arg(long)]
    budget_m: Option<u32>,
    /// Full report goes here; stdout then gets the summary only.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Keep per-row wall times (output is then not reproducible byte for byte).
    #[arg(long)]
    timings: bool,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = std::result::Result<i32, Failure>;

fn field(m: u32) -> std::result::Result<FieldSpec, Failure> {
    Ok(FieldSpec::new(m)?)
}

fn func(field: &FieldSpec, s: &str) -> std::result::Result<Func, Failure> {
    let fam: Family = s.parse()?;
    Ok(instantiate(field, &fam)?)
}

fn parse_elem(field: &FieldSpec, s: &str) -> std::result::Result<Elem, Failure> {
    let s = s.trim();
    let v = match s.strip_prefix("0x") {
        Some(h) => u64::from_str_radix(h, 16),
        None => s.parse(),
    }
    .map_err(|_| Failure::Usage(format!("not a field element: `{s}`")))?;
    Ok(field.elem(v)?)
}

fn header(field: &FieldSpec) -> serde_json::Map<String, Value> {
    let mut h = serde_json::Map::new();
    h.insert("schema".into(), json!(1));
    h.insert("field".into(), json!(field.to_string()));
    h.insert("m".into(), json!(field.m()));
    h
}

fn with_body(field: &FieldSpec, body: impl Serialize) -> Value {
    let mut h = header(field);
    if let Value::Object(b) = serde_json::to_value(body).expect("serializable") {
        h.extend(b);
    }
    Value::Object(h)
}

fn emit(out: &mut impl Write, v: &Value) -> std::io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, v)?;
    writeln!(out)
}

fn walsh(a: &FnArgs, out: &mut impl Write) -> Outcome {
    let fs = field(a.m)?;
    let f = func(&fs, &a.family)?;
    let ws = walsh_transform(&fs, &f.truth_table(&fs));
    let doc = with_body(
        &fs,
        json!({
            "function": f.name(),
            "spectrum_summary": ws.summary_rows(),
            "class": classify(&ws, fs.m()).name(),
        }),
    );
    emit(out, &doc)?;
    Ok(EXIT_OK)
}

fn fn_cmd(c: &FnCmd, out: &mut impl Write) -> Outcome {
    match c {
        FnCmd::List => {
            emit(out, &json!({ "schema": 1, "families": FAMILY_NAMES }))?;
        }
        FnCmd::Eval { f, x } => {
            let fs = field(f.m)?;
            let g = func(&fs, &f.family)?;
            let mut rows = Vec::new();
            for s in x {
                let x = parse_elem(&fs, s)?;
                rows.push(json!({ "x": x, "value": g.eval(&fs, x) }));
            }
            emit(out, &with_body(&fs, json!({ "function": g.name(), "values": rows })))?;
        }
    }
    Ok(EXIT_OK)
}

fn code_report(fs: &FieldSpec, source: &str, d: &DefiningSet, csv: bool, out: &mut impl Write) -> Outcome {
    let direct = code_from_defining_set(fs, d)?;
    let walsh = weight_dist_via_walsh(fs, &TruthTable::indicator(fs, d))?;
    if csv {
        out.write_all(direct.to_csv().as_bytes())?;
    } else {
        let mut doc = with_body(fs, &direct);
        doc["source"] = json!(source);
        doc["routes_agree"] = json!(direct == walsh);
        emit(out, &doc)?;
    }
    Ok(EXIT_OK)
}

fn code_cmd(c: &CodeCmd, out: &mut impl Write) -> Outcome {
    match c {
        CodeCmd::FromSupport { f, csv } => {
            let fs = field(f.m)?;
            let g = func(&fs, &f.family)?;
            let d = g.truth_table(&fs).support();
            code_report(&fs, &format!("support({})", g.name()), &d, *csv, out)
        }
        CodeCmd::FromImage { f, star, csv } => {
            let fs = field(f.m)?;
            let g = func(&fs, &f.family)?;
            let mut d = image_set(&fs, &g);
            if *star {
                d = d.without_zero();
            }
            let tag = if *star { "image*" } else { "image" };
            code_report(&fs, &format!("{tag}({})", g.name()), &d, *csv, out)
        }
        CodeCmd::FromSet { m, elems, csv } => {
            let fs = field(*m)?;
            let d = explicit_set(&fs, elems)?;
            code_report(&fs, "set", &d, *csv, out)
        }
    }
}

fn explicit_set<S: AsRef<str>>(fs: &FieldSpec, elems: &[S]) -> std::result::Result<DefiningSet, Failure> {
    let xs = elems.iter().filter(|s| !s.as_ref().trim().is_empty()).map(|s| parse_elem(fs, s.as_ref())).collect::<std::result::Result<Vec<_>, _>>()?;
    Ok(DefiningSet::from_elements(fs, xs)?)
}

fn opoly_cmd(c: &OpolyCmd, out: &mut impl Write) -> Outcome {
    let OpolyCmd::Check { f, mode } = c;
    let mode: Mode = mode.parse()?;
    let fs = field(f.m)?;
    let g = func(&fs, &f.family)?;
    let r = is_o_polynomial(&fs, &g, mode);
    emit(out, &with_body(&fs, &r))?;
    Ok(EXIT_OK)
}

/// The `--set` grammar of `diffset check`.
fn set_spec(fs: &FieldSpec, spec: &str) -> std::result::Result<DefiningSet, Failure> {
    let (kind, rest) = spec.split_once(':').ok_or_else(|| Failure::Usage(format!("set spec `{spec}` has no kind")))?;
    Ok(match kind {
        "support" => func(fs, rest)?.truth_table(fs).support(),
        "image" => image_set(fs, &func(fs, rest)?),
        "image*" => image_set(fs, &func(fs, rest)?).without_zero(),
        "xx1*" => image_of_xx1(fs, &func(fs, rest)?).without_zero(),
        "elems" => explicit_set(fs, &rest.split(',').collect::<Vec<_>>())?,
        _ => return Err(Failure::Usage(format!("set kind `{kind}`, expected support|image|image*|xx1*|elems"))),
    })
}

fn diffset_cmd(c: &DiffsetCmd, out: &mut impl Write) -> Outcome {
    let DiffsetCmd::Check { m, group, set } = c;
    let fs = field(*m)?;
    let d = set_spec(&fs, set)?;
    let r = match group {
        GroupArg::Add => is_additive_difference_set(&fs, &d),
        GroupArg::Mult => is_multiplicative_difference_set(&fs, &d)?,
    };
    let mut doc = with_body(&fs, &r);
    doc["set"] = json!(set);
    emit(out, &doc)?;
    Ok(EXIT_OK)
}

fn verify_cmd(a: &VerifyArgs, out: &mut impl Write) -> Outcome {
    let kinds = a.kind.iter().map(|k| k.parse::<Kind>()).collect::<std::result::Result<Vec<_>, _>>()?;
    let filter = Filter::new(a.ids.as_deref(), a.m_min, a.m_max)?.with_kinds(&kinds);
    let budget = Budget { max_m: a.budget_m, ..Budget::default() };
    let reports = run_suite(&filter, budget);
    let doc = suite_json(&filter, &reports, a.timings);
    match &a.out {
        Some(path) => {
            let mut f = std::io::BufWriter::new(std::fs::File::create(path)?);
            emit(&mut f, &doc)?;
            f.flush()?;
            let mut counts = std::collections::BTreeMap::new();
            for r in reports.iter().filter(|r| r.is_failure()) {
                *counts.entry((r.claim.as_str(), r.m)).or_insert(0usize) += 1;
            }
            let failures: Vec<String> = counts.iter().map(|((id, m), n)| format!("{id} m={m} ({n} rows)")).collect();
            emit(out, &json!({ "schema": 1, "summary": doc["summary"], "theorem_mismatches": failures }))?;
        }
        None => emit(out, &doc)?,
    }
    Ok(if reports.iter().any(|r| r.is_failure()) { EXIT_THEOREM_MISMATCH } else { EXIT_OK })
}

fn dispatch(cli: &Cli, out: &mut impl Write) -> Outcome {
    match &cli.cmd {
        Cmd::Walsh(a) => walsh(a, out),
        Cmd::Func(c) => fn_cmd(c, out),
        Cmd::Code(c) => code_cmd(c, out),
        Cmd::Opoly(c) => opoly_cmd(c, out),
        Cmd::Diffset(c) => diffset_cmd(c, out),
        Cmd::Verify(a) => verify_cmd(a, out),
        Cmd::Claims => {
            emit(out, &manifest())?;
            Ok(EXIT_OK)
        }
        Cmd::Schema => {
            out.write_all(REPORT_SCHEMA.as_bytes())?;
            Ok(EXIT_OK)
        }
    }
}

/// Parse `args` (including the program name) and run. Results go to `out`,
/// diagnostics to `err`; the return value is the process exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind::*;
            let ok = matches!(e.kind(), DisplayHelp | DisplayVersion);
            let text = e.render().to_string();
            let _ = if ok { write!(out, "{text}") } else { write!(err, "{text}") };
            return if ok { EXIT_OK } else { EXIT_USAGE };
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: thread pool: {e}");
            return EXIT_USAGE;
        }
    };
    let mut buf = Vec::new();
    let result = pool.install(|| dispatch(&cli, &mut buf));
    if let Err(e) = out.write_all(&buf).and_then(|_| out.flush()) {
        let _ = writeln!(err, "error: {e}");
        return EXIT_IO;
    }
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_IO
        }
    }
}
