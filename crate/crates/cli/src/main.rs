use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use posetlab::catalog;
use posetlab::constructions::horizontal_sum;
use posetlab::dot::to_dot;
use posetlab::format::{parse, render};
use posetlab::properties::Property;
use posetlab::report::{NamedReport, NamedWitness};
use posetlab::residuation::{build, Axiom};
use posetlab::search::{self, SearchConfig, SearchQuery};
use posetlab::{Construction, FinitePoset, Outcome, PosetError};

#[derive(Parser)]
#[command(name = "posetlab", version, about = "Check, build and search finite bounded posets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check one property; exit 0 if it holds, 1 if not, 2 on bad input.
    Check {
        file: PathBuf,
        #[arg(long)]
        property: String,
        /// Evaluate the property's laws at these elements only.
        #[arg(long, num_args = 1..)]
        at: Option<Vec<String>>,
    },
    /// Verdicts for every property.
    Classify { file: PathBuf },
    /// Build an operator pair and optionally verify its axioms.
    Residuate {
        file: PathBuf,
        #[arg(long)]
        construction: String,
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        divisibility: bool,
        /// Evaluate the axioms of matching arity at these elements.
        #[arg(long, num_args = 1..)]
        at: Option<Vec<String>>,
    },
    /// Horizontal sum of two or more bounded posets.
    Hsum {
        #[arg(required = true, num_args = 2..)]
        files: Vec<PathBuf>,
        #[arg(short, long)]
        out: Option<PathBuf>,
        #[arg(long)]
        name: Option<String>,
    },
    /// Hasse diagram in DOT.
    Dot { file: PathBuf },
    /// Built-in posets.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Enumerate small bounded posets and filter by properties.
    Search {
        #[arg(long)]
        max_size: usize,
        #[arg(long)]
        require: Vec<String>,
        #[arg(long)]
        forbid: Vec<String>,
        #[arg(long, default_value = "none")]
        unary_mode: String,
        #[arg(long)]
        limit: Option<usize>,
        /// Raise or lower the enumeration cap (default 8, or POSET_MAX_SIZE).
        #[arg(long)]
        cap: Option<usize>,
        /// Emit poset files instead of JSON.
        #[arg(long)]
        files: bool,
    },
    /// Check every claim on all structures up to a size; exit 1 on any violation.
    Sweep {
        #[arg(long)]
        max_size: usize,
        /// Write each counterexample as a poset file here.
        #[arg(long)]
        out_dir: Option<PathBuf>,
        #[arg(long)]
        cap: Option<usize>,
        /// Sweep the catalog entries instead of the enumeration.
        #[arg(long)]
        catalog: bool,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    Show {
        id: String,
    },
    Export {
        id: String,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Poset(PosetError),
}

impl From<PosetError> for Failure {
    fn from(e: PosetError) -> Self {
        Failure::Poset(e)
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Input(s) => f.write_str(s),
            Failure::Poset(e) => write!(f, "{e}"),
        }
    }
}

type Run = Result<bool, Failure>;

fn load(path: &Path) -> Result<FinitePoset, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

/// Writes to stdout, ignoring a closed pipe (e.g. output piped into `head`).
fn say(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn emit<T: Serialize>(value: &T) {
    say(&(serde_json::to_string_pretty(value).expect("serializable") + "\n"));
}

fn write_out(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display()))),
        None => {
            say(text);
            Ok(())
        }
    }
}

fn elements(p: &FinitePoset, names: &[String]) -> Result<Vec<usize>, Failure> {
    Ok(names.iter().map(|n| p.element(n)).collect::<Result<_, _>>()?)
}

#[derive(Serialize)]
struct PointVerdict {
    law: String,
    outcome: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    lhs: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rhs: Option<Vec<String>>,
}

#[derive(Serialize)]
struct PointReport {
    poset: String,
    subject: String,
    elements: Vec<String>,
    holds: bool,
    laws: Vec<PointVerdict>,
}

#[derive(Serialize)]
struct CheckOutput {
    poset: String,
    #[serde(flatten)]
    report: NamedReport,
}

fn check(file: &Path, property: &str, at: Option<&[String]>) -> Run {
    let p = load(file)?;
    let prop: Property = property.parse()?;
    let Some(at) = at else {
        let report = prop.check(&p)?;
        let holds = report.holds;
        emit(&CheckOutput { poset: p.name().to_string(), report: report.named(&p) });
        return Ok(holds);
    };
    let args = elements(&p, at)?;
    let laws: Vec<_> = prop.laws().iter().filter(|l| l.arity() == args.len()).collect();
    if laws.is_empty() {
        return Err(Failure::Input(format!("no law of {prop} takes {} elements", args.len())));
    }
    let mut verdicts = Vec::new();
    for law in laws {
        let v = match law.evaluate(&p, &args)? {
            Outcome::Vacuous => PointVerdict { law: law.name().into(), outcome: "vacuous", lhs: None, rhs: None },
            Outcome::Holds => PointVerdict { law: law.name().into(), outcome: "holds", lhs: None, rhs: None },
            Outcome::Fails { lhs, rhs } => PointVerdict {
                law: law.name().into(),
                outcome: "fails",
                lhs: Some(p.names_of(&lhs)),
                rhs: Some(p.names_of(&rhs)),
            },
        };
        verdicts.push(v);
    }
    let holds = verdicts.iter().all(|v| v.outcome != "fails");
    emit(&PointReport {
        poset: p.name().to_string(),
        subject: prop.name().to_string(),
        elements: at.to_vec(),
        holds,
        laws: verdicts,
    });
    Ok(holds)
}

#[derive(Serialize)]
struct ClassifyOutput {
    poset: String,
    size: usize,
    /// `null` when the input lacks what the property needs (bounds or a unary map)
    properties: BTreeMap<String, Option<bool>>,
    notes: BTreeMap<String, String>,
}

fn classify(file: &Path) -> Run {
    let p = load(file)?;
    let mut properties = BTreeMap::new();
    let mut notes = BTreeMap::new();
    for prop in Property::ALL {
        let verdict = match prop.check(&p) {
            Ok(r) => Some(r.holds),
            Err(PosetError::PreconditionFailed(why)) => {
                notes.insert(prop.name().to_string(), why);
                Some(false)
            }
            Err(e) => {
                notes.insert(prop.name().to_string(), e.to_string());
                None
            }
        };
        properties.insert(prop.name().to_string(), verdict);
    }
    emit(&ClassifyOutput { poset: p.name().to_string(), size: p.len(), properties, notes });
    Ok(true)
}

#[derive(Serialize)]
struct AxiomsOutput {
    unit: NamedReport,
    order: NamedReport,
    adjointness: NamedReport,
    negation: NamedReport,
    commutativity: NamedReport,
    double_negation: Option<NamedReport>,
    left_residuated: bool,
    residuated: bool,
}

#[derive(Serialize)]
struct ResiduateOutput {
    poset: String,
    construction: String,
    elements: Vec<String>,
    /// image of each element under the pair's unary map
    unary: Vec<String>,
    m: Vec<Vec<Vec<String>>>,
    r: Vec<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    axioms: Option<AxiomsOutput>,
    #[serde(skip_serializing_if = "Option::is_none")]
    divisibility: Option<NamedReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    at: Option<Vec<PointVerdict>>,
}

const AXIOMS: [Axiom; 7] = [
    Axiom::Unit,
    Axiom::Order,
    Axiom::Adjointness,
    Axiom::Negation,
    Axiom::Commutativity,
    Axiom::Divisibility,
    Axiom::DoubleNegation,
];

fn residuate(file: &Path, construction: &str, verify: bool, divisibility: bool, at: Option<&[String]>) -> Run {
    let p = load(file)?;
    let c: Construction = construction.parse()?;
    let pair = build(&p, c)?;
    let n = p.len();
    let table = |f: &dyn Fn(usize, usize) -> Vec<String>| -> Vec<Vec<Vec<String>>> {
        (0..n).map(|x| (0..n).map(|y| f(x, y)).collect()).collect()
    };
    let mut ok = true;
    let axioms = verify.then(|| {
        let r = pair.verify_axioms();
        ok &= r.left_residuated() && r.double_negation.as_ref().is_none_or(|d| d.holds);
        AxiomsOutput {
            unit: r.unit.named(&p),
            order: r.order.named(&p),
            adjointness: r.adjointness.named(&p),
            negation: r.negation.named(&p),
            commutativity: r.commutativity.named(&p),
            double_negation: r.double_negation.as_ref().map(|d| d.named(&p)),
            left_residuated: r.left_residuated(),
            residuated: r.residuated(),
        }
    });
    let divisibility = divisibility.then(|| {
        let r = pair.verify_divisibility();
        ok &= r.holds;
        r.named(&p)
    });
    let at = match at {
        None => None,
        Some(names) => {
            let args = elements(&p, names)?;
            let verdicts: Vec<PointVerdict> = AXIOMS
                .iter()
                .filter(|a| a.arity() == args.len())
                .map(|a| match pair.evaluate(*a, &args) {
                    None => PointVerdict { law: a.name().into(), outcome: "holds", lhs: None, rhs: None },
                    Some(w) => {
                        let NamedWitness { lhs, rhs, .. } = w.named(&p);
                        PointVerdict { law: a.name().into(), outcome: "fails", lhs: Some(lhs), rhs: Some(rhs) }
                    }
                })
                .collect();
            ok &= verdicts.iter().all(|v| v.outcome == "holds");
            Some(verdicts)
        }
    };
    emit(&ResiduateOutput {
        poset: p.name().to_string(),
        construction: c.name().to_string(),
        elements: p.names().to_vec(),
        unary: (0..n).map(|x| p.name_of(pair.unary().apply(x)).to_string()).collect(),
        m: table(&|x, y| p.names_of(&pair.m(x, y))),
        r: table(&|x, y| p.names_of(&pair.r(x, y))),
        axioms,
        divisibility,
        at,
    });
    Ok(ok)
}

fn hsum(files: &[PathBuf], out: Option<&Path>, name: Option<&str>) -> Run {
    let blocks = files.iter().map(|f| load(f)).collect::<Result<Vec<_>, _>>()?;
    let mut sum = horizontal_sum(&blocks)?;
    if let Some(name) = name {
        sum = sum.renamed(name)?;
    }
    write_out(out, &render(&sum))?;
    Ok(true)
}

#[derive(Serialize)]
struct PosetJson {
    name: String,
    size: usize,
    elements: Vec<String>,
    covers: Vec<[String; 2]>,
    /// `x -> x'`, absent without a unary map
    comp: Option<BTreeMap<String, String>>,
}

impl PosetJson {
    fn of(p: &FinitePoset) -> Self {
        PosetJson {
            name: p.name().to_string(),
            size: p.len(),
            elements: p.names().to_vec(),
            covers: p.covers().into_iter().map(|(a, b)| [p.name_of(a).into(), p.name_of(b).into()]).collect(),
            comp: p
                .unary()
                .map(|u| (0..p.len()).map(|x| (p.name_of(x).into(), p.name_of(u.apply(x)).into())).collect()),
        }
    }
}

#[derive(Serialize)]
struct ShowOutput {
    id: String,
    #[serde(flatten)]
    poset: PosetJson,
    expected: BTreeMap<String, bool>,
}

fn catalog_cmd(action: &CatalogAction) -> Run {
    match action {
        CatalogAction::List => {
            for id in catalog::list() {
                say(&format!("{id}\n"));
            }
        }
        CatalogAction::Show { id } => {
            let e = catalog::get(id)?;
            emit(&ShowOutput {
                id: e.id.clone(),
                poset: PosetJson::of(&e.poset),
                expected: e.expected.iter().map(|(p, v)| (p.name().to_string(), *v)).collect(),
            });
        }
        CatalogAction::Export { id, out } => write_out(out.as_deref(), &render(&catalog::get(id)?.poset))?,
    }
    Ok(true)
}

fn config(cap: Option<usize>) -> SearchConfig {
    let mut cfg = SearchConfig::from_env();
    if let Some(cap) = cap {
        if cap > search::DEFAULT_CAP {
            eprintln!(
                "warning: enumeration cap raised to {cap}; run time grows very quickly past {}",
                search::DEFAULT_CAP
            );
        }
        cfg.cap = cap;
    }
    cfg
}

struct SearchArgs<'a> {
    max_size: usize,
    require: &'a [String],
    forbid: &'a [String],
    unary_mode: &'a str,
    limit: Option<usize>,
    cap: Option<usize>,
    files: bool,
}

fn search_cmd(a: SearchArgs<'_>) -> Run {
    let mut q = SearchQuery::new(a.max_size, a.unary_mode.parse()?);
    q.require = SearchQuery::properties(a.require)?;
    q.forbid = SearchQuery::properties(a.forbid)?;
    q.limit = a.limit;
    let found = search::find(&q, &config(a.cap))?;
    if a.files {
        let texts: Vec<String> = found.iter().map(render).collect();
        say(&texts.join("\n"));
    } else {
        emit(&found.iter().map(PosetJson::of).collect::<Vec<_>>());
    }
    Ok(true)
}

#[derive(Serialize)]
struct ViolationJson {
    claim: String,
    poset: PosetJson,
    detail: String,
}

#[derive(Serialize)]
struct SweepOutput {
    max_size: usize,
    structures: usize,
    checks: BTreeMap<String, usize>,
    violations: Vec<ViolationJson>,
}

fn sweep_cmd(max_size: usize, out_dir: Option<&Path>, cap: Option<usize>, on_catalog: bool) -> Run {
    let report = if on_catalog { search::sweep_catalog()? } else { search::sweep_claims(max_size, &config(cap))? };
    if let Some(dir) = out_dir {
        fs::create_dir_all(dir).map_err(|e| Failure::Input(format!("{}: {e}", dir.display())))?;
        for (i, v) in report.violations.iter().enumerate() {
            let path = dir.join(format!("{i:04}_{}.poset", v.claim));
            fs::write(&path, v.to_file_text()).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
        }
    }
    emit(&SweepOutput {
        max_size: report.max_size,
        structures: report.structures,
        checks: report.checks.clone(),
        violations: report
            .violations
            .iter()
            .map(|v| ViolationJson { claim: v.claim.clone(), poset: PosetJson::of(&v.poset), detail: v.detail.clone() })
            .collect(),
    });
    Ok(report.ok())
}

fn run(cli: &Cli) -> Run {
    match &cli.command {
        Command::Check { file, property, at } => check(file, property, at.as_deref()),
        Command::Classify { file } => classify(file),
        Command::Residuate { file, construction, verify, divisibility, at } => {
            residuate(file, construction, *verify, *divisibility, at.as_deref())
        }
        Command::Hsum { files, out, name } => hsum(files, out.as_deref(), name.as_deref()),
        Command::Dot { file } => {
            say(&to_dot(&load(file)?));
            Ok(true)
        }
        Command::Catalog { action } => catalog_cmd(action),
        Command::Search { max_size, require, forbid, unary_mode, limit, cap, files } => search_cmd(SearchArgs {
            max_size: *max_size,
            require,
            forbid,
            unary_mode,
            limit: *limit,
            cap: *cap,
            files: *files,
        }),
        Command::Sweep { max_size, out_dir, cap, catalog } => sweep_cmd(*max_size, out_dir.as_deref(), *cap, *catalog),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
