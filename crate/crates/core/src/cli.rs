//! Command-line front end. Exit codes: 0 valid, 2 invalid input or not a
//! string C-group, 3 a search or enumeration cap was exceeded.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::constructions::{cubic_toroid, LabeledTetrahedron, ToroidModel};
use crate::corpus::{corpus, Instance};
use crate::cpr::CprGraph;
use crate::duality::{class_report, classify, ClassReport};
use crate::error::{Error, Result};
use crate::fpgroup::{parse_word, Entry, Presentation, DEFAULT_COSET_CAP};
use crate::lattice::FaceLattice;
use crate::sggi::{SchlafliType, Sggi};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "polydual", version, about = "Self-duality of abstract regular polytopes")]
pub struct Cli {
    /// Element and coset cap for searches and enumerations.
    #[arg(long, global = true, env = "POLYDUAL_CAP")]
    pub cap: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Validate and classify one instance.
    Classify {
        #[command(flatten)]
        source: Source,
        /// Include wall-clock timings in the report.
        #[arg(long)]
        timings: bool,
    },
    /// Check the string C-group axioms.
    Check {
        #[command(flatten)]
        source: Source,
    },
    /// Classify every instance of a built-in corpus.
    Survey {
        #[arg(long, default_value = "standard")]
        corpus: String,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = SurveyFormat::Text)]
        format: SurveyFormat,
    },
    /// Write an instance in one of the supported formats.
    Emit {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = EmitFormat::Text)]
        format: EmitFormat,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Search for a flag dual to the base flag.
    DualFlag {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = SurveyFormat::Text)]
        format: SurveyFormat,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum SurveyFormat {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum EmitFormat {
    Text,
    Dot,
    Json,
    Sggi,
    Lattice,
}

#[derive(Args, Debug, Default)]
pub struct Source {
    /// polygon, simplex, tetrahedron, edge, torus44, cubic-toroid, all-p,
    /// even-k, rank-n, petrie-simplex, n3plus, n4plus
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub s: Option<usize>,
    /// Shorthand for `--family torus44 --s S`.
    #[arg(long, value_name = "S")]
    pub torus44: Option<usize>,
    /// Schläfli entries of a string Coxeter group, e.g. `3,4,3` or `inf,inf`.
    #[arg(long)]
    pub coxeter: Option<String>,
    /// Extra relator for `--coxeter`, as space separated generator indices.
    #[arg(long)]
    pub relator: Vec<String>,
    /// An sggi (`rank n degree k`), CPR graph (`cpr ...`) or presentation (`gens n`) file.
    #[arg(long)]
    pub input: Option<PathBuf>,
}

/// What a source resolves to before any group is built.
enum Resolved {
    Instance(Instance),
    Sggi(Sggi),
    Cpr(CprGraph),
    Presentation(Presentation),
}

impl Resolved {
    fn name(&self, source: &Source) -> String {
        match self {
            Resolved::Instance(i) => i.to_string(),
            _ => source.input.as_ref().map(|p| p.display().to_string()).unwrap_or_default(),
        }
    }

    fn sggi(&self, cap: usize) -> Result<Sggi> {
        match self {
            Resolved::Instance(i) => i.build(cap),
            Resolved::Sggi(s) => Ok(s.clone().with_cap(cap)),
            Resolved::Cpr(g) => Ok(g.to_sggi()?.with_cap(cap)),
            Resolved::Presentation(p) => Ok(crate::fpgroup::to_sggi(p, cap)?.with_cap(cap)),
        }
    }

    fn cpr(&self) -> Option<Result<CprGraph>> {
        match self {
            Resolved::Instance(i) => i.cpr(),
            Resolved::Cpr(g) => Some(Ok(g.clone())),
            _ => None,
        }
    }

    fn presentation(&self) -> Option<Result<Presentation>> {
        match self {
            Resolved::Instance(i) => i.presentation(),
            Resolved::Presentation(p) => Some(Ok(p.clone())),
            _ => None,
        }
    }
}

fn resolve(source: &Source) -> Result<Resolved> {
    let given = [source.family.is_some(), source.torus44.is_some(), source.coxeter.is_some(), source.input.is_some()];
    match given.iter().filter(|&&b| b).count() {
        0 => return Err(Error::BadParameter("give one of --family, --torus44, --coxeter, --input".into())),
        1 => {}
        _ => return Err(Error::BadParameter("--family, --torus44, --coxeter and --input are exclusive".into())),
    }
    if !source.relator.is_empty() && source.coxeter.is_none() {
        return Err(Error::BadParameter("--relator needs --coxeter".into()));
    }
    if let Some(f) = &source.family {
        return Ok(Resolved::Instance(Instance::family(f, source.p, source.k, source.n, source.s)?));
    }
    if let Some(s) = source.torus44 {
        return Ok(Resolved::Instance(Instance::Torus44(s)));
    }
    if let Some(c) = &source.coxeter {
        let entries = Entry::parse_list(c)?;
        let relators = source.relator.iter().map(|r| parse_word(r)).collect::<Result<Vec<_>>>()?;
        let inst = Instance::Coxeter(entries, relators);
        inst.presentation().unwrap()?;
        return Ok(Resolved::Instance(inst));
    }
    let path = source.input.as_ref().unwrap();
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::BadParameter(format!("cannot read {}: {e}", path.display())))?;
    let header = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#')).unwrap_or("");
    Ok(if header.starts_with("rank") {
        Resolved::Sggi(Sggi::parse(&text)?)
    } else if header.starts_with("gens") {
        Resolved::Presentation(Presentation::parse(&text)?)
    } else {
        Resolved::Cpr(CprGraph::parse(&text)?)
    })
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } => EXIT_CAP,
        _ => EXIT_INVALID,
    }
}

#[derive(Serialize)]
pub struct Report {
    pub instance: String,
    pub valid: bool,
    pub rank: usize,
    pub degree: usize,
    pub order: u128,
    pub schlafli: SchlafliType,
    #[serde(flatten)]
    pub class: ClassReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<&'static str, f64>>,
}

#[derive(Serialize)]
struct Failure {
    instance: String,
    error: String,
}

fn classify_report(name: String, s: &Sggi, timings: bool) -> Result<Report> {
    let mut t = BTreeMap::new();
    let start = Instant::now();
    let valid = s.is_string_c_group()?;
    t.insert("check", start.elapsed().as_secs_f64() * 1e3);
    let start = Instant::now();
    let class = class_report(s)?;
    t.insert("classify", start.elapsed().as_secs_f64() * 1e3);
    Ok(Report {
        instance: name,
        valid,
        rank: s.rank(),
        degree: s.degree(),
        order: s.order(),
        schlafli: s.schlafli_type(),
        class,
        timings_ms: timings.then_some(t),
    })
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("reports serialize")
}

/// Runs a parsed command, writing to `out` and `err`. Returns the exit code.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cap = cli.cap.unwrap_or(DEFAULT_COSET_CAP);
    let result = match cli.command {
        Command::Classify { source, timings } => cmd_classify(&source, cap, timings, out),
        Command::Check { source } => cmd_check(&source, cap, out),
        Command::Survey { corpus, jobs, format } => cmd_survey(&corpus, jobs, format, cap, out),
        Command::Emit { source, format, output } => cmd_emit(&source, format, output, cap, out),
        Command::DualFlag { source, format } => cmd_dual_flag(&source, format, cap, out),
    };
    match result {
        Ok(code) => code,
        Err((name, e)) => {
            let _ = writeln!(out, "{}", json(&Failure { instance: name, error: e.to_string() }));
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

type CmdResult = std::result::Result<i32, (String, Error)>;

fn build(source: &Source, cap: usize) -> std::result::Result<(String, Resolved, Sggi), (String, Error)> {
    let r = resolve(source).map_err(|e| (String::new(), e))?;
    let name = r.name(source);
    let s = r.sggi(cap).map_err(|e| (name.clone(), e))?;
    Ok((name, r, s))
}

fn cmd_classify(source: &Source, cap: usize, timings: bool, out: &mut dyn Write) -> CmdResult {
    let (name, _, s) = build(source, cap)?;
    let report = classify_report(name.clone(), &s, timings).map_err(|e| (name, e))?;
    let _ = writeln!(out, "{}", json(&report));
    Ok(if report.valid { EXIT_OK } else { EXIT_INVALID })
}

fn cmd_check(source: &Source, cap: usize, out: &mut dyn Write) -> CmdResult {
    let (name, _, s) = build(source, cap)?;
    let report = s.check_report().map_err(|e| (name, e))?;
    let _ = writeln!(out, "{}", json(&report));
    Ok(if report.valid { EXIT_OK } else { EXIT_INVALID })
}

#[derive(Serialize)]
struct SurveyRow {
    instance: String,
    class: String,
}

#[derive(Serialize, Default)]
struct SurveyCounts {
    self_dual: usize,
    internal: usize,
    external: usize,
    none: usize,
    errors: usize,
}

fn cmd_survey(name: &str, jobs: usize, format: SurveyFormat, cap: usize, out: &mut dyn Write) -> CmdResult {
    let instances = corpus(name).map_err(|e| (name.to_string(), e))?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| (name.to_string(), Error::BadParameter(e.to_string())))?;
    let rows: Vec<SurveyRow> = pool.install(|| {
        instances
            .par_iter()
            .map(|inst| {
                let class = inst
                    .build(cap)
                    .and_then(|s| classify(&s))
                    .map(|c| c.name().to_string())
                    .unwrap_or_else(|e| format!("error: {e}"));
                SurveyRow { instance: inst.to_string(), class }
            })
            .collect()
    });
    let mut counts = SurveyCounts::default();
    for r in &rows {
        match r.class.as_str() {
            "internal" => counts.internal += 1,
            "external" => counts.external += 1,
            "none" => counts.none += 1,
            _ => counts.errors += 1,
        }
    }
    counts.self_dual = counts.internal + counts.external;
    match format {
        SurveyFormat::Json => {
            let _ = writeln!(out, "{}", json(&serde_json::json!({ "corpus": name, "rows": rows, "counts": counts })));
        }
        SurveyFormat::Text => {
            let width = rows.iter().map(|r| r.instance.len()).max().unwrap_or(0);
            for r in &rows {
                let _ = writeln!(out, "{:width$}  {}", r.instance, r.class);
            }
            let _ = writeln!(
                out,
                "self-dual {}  internal {}  external {}  none {}  errors {}",
                counts.self_dual, counts.internal, counts.external, counts.none, counts.errors
            );
        }
    }
    Ok(if counts.errors == 0 { EXIT_OK } else { EXIT_INVALID })
}

fn cmd_emit(
    source: &Source,
    format: EmitFormat,
    output: Option<PathBuf>,
    cap: usize,
    out: &mut dyn Write,
) -> CmdResult {
    let r = resolve(source).map_err(|e| (String::new(), e))?;
    let name = r.name(source);
    let fail = |e: Error| (name.clone(), e);
    let cpr = r.cpr().transpose().map_err(fail)?;
    let text = match format {
        EmitFormat::Dot => match &cpr {
            Some(g) => g.to_dot(),
            None => return Err(fail(Error::BadParameter("dot output needs a CPR graph source".into()))),
        },
        EmitFormat::Text => match (&cpr, r.presentation().transpose().map_err(fail)?) {
            (Some(g), _) => g.serialize(),
            (None, Some(p)) => p.to_text(),
            (None, None) => r.sggi(cap).map_err(fail)?.to_text(),
        },
        EmitFormat::Json => match &cpr {
            Some(g) => json(&g.to_json()) + "\n",
            None => {
                let s = r.sggi(cap).map_err(fail)?;
                let gens: Vec<String> = s.gens().iter().map(|g| g.to_string()).collect();
                json(&serde_json::json!({ "rank": s.rank(), "degree": s.degree(), "generators": gens })) + "\n"
            }
        },
        EmitFormat::Sggi => r.sggi(cap).map_err(fail)?.to_text(),
        EmitFormat::Lattice => {
            let s = r.sggi(cap).map_err(fail)?;
            let l = FaceLattice::build(&s, true).map_err(fail)?;
            json(&l.to_json()) + "\n"
        }
    };
    match output {
        Some(path) => std::fs::write(&path, text)
            .map_err(|e| fail(Error::BadParameter(format!("cannot write {}: {e}", path.display()))))?,
        None => {
            let _ = out.write_all(text.as_bytes());
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct DualFlagReport {
    instance: String,
    found: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    faces: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    vertex: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    edge_to: Option<Vec<i64>>,
}

fn coords(x: &[i64]) -> String {
    let c: Vec<String> = x.iter().map(|v| v.to_string()).collect();
    format!("({})", c.join(","))
}

fn cmd_dual_flag(source: &Source, format: SurveyFormat, cap: usize, out: &mut dyn Write) -> CmdResult {
    let (name, r, s) = build(source, cap)?;
    let fail = |e: Error| (name.clone(), e);
    let l = FaceLattice::build(&s, true).map_err(fail)?;
    let psi = l.dual_flag_search();
    let mut report = DualFlagReport {
        instance: name.clone(),
        found: psi.is_some(),
        faces: psi.as_ref().map(|f| f.faces.clone()),
        labels: None,
        vertex: None,
        edge_to: None,
    };
    let toroid: Option<ToroidModel> = match &r {
        Resolved::Instance(Instance::Torus44(s)) => Some(ToroidModel::new(2, *s).map_err(fail)?),
        Resolved::Instance(Instance::CubicToroid(n, s)) => Some(cubic_toroid(*n, *s).map_err(fail)?),
        _ => None,
    };
    if let Some(psi) = &psi {
        if matches!(r, Resolved::Instance(Instance::Tetrahedron)) {
            report.labels = Some(LabeledTetrahedron::flag_labels(&l, psi));
        }
        if let Some(t) = &toroid {
            let (v, e) = t.flag_vertex_and_edge(l.element_of(psi).unwrap());
            report.vertex = Some(v);
            report.edge_to = Some(e);
        }
    }
    match format {
        SurveyFormat::Json => {
            let _ = writeln!(out, "{}", json(&report));
        }
        SurveyFormat::Text => {
            let line = match (&report.faces, &report.labels, &report.vertex, &report.edge_to) {
                (None, ..) => "none".to_string(),
                (_, Some(labels), ..) => format!("({})", labels.join(", ")),
                (_, _, Some(v), Some(e)) => format!("vertex {} edge {}-{}", coords(v), coords(v), coords(e)),
                (Some(f), ..) => {
                    let f: Vec<String> = f.iter().map(|x| x.to_string()).collect();
                    format!("({})", f.join(", "))
                }
            };
            let _ = writeln!(out, "{line}");
        }
    }
    Ok(EXIT_OK)
}
