//! The `kunzkit` command line.
//!
//! Exit codes: 0 on success, 1 when an internal consistency check fails,
//! 2 on invalid input.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Once;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::families::{self, FamilyError, FamilyMember, FamilyName};
use crate::kunz::KunzNilsemigroup;
use crate::semigroup::{Factorization, MinimalPresentation, NumericalSemigroup, SemigroupError};
use crate::survey::{self, EtaProfile, SurveyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

static CANCEL: AtomicBool = AtomicBool::new(false);
static HANDLER: Once = Once::new();

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
    Csv,
}

/// Inclusive range of multiplicities, written `a..b` or as a single value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MRange {
    pub start: u64,
    pub end: u64,
}

impl MRange {
    pub fn values(&self) -> Vec<u64> {
        (self.start..=self.end).collect()
    }
}

impl FromStr for MRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| t.trim().parse::<u64>().map_err(|e| format!("{t:?}: {e}"));
        let (start, end) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
            None => {
                let v = parse(s)?;
                (v, v)
            }
        };
        if start < 2 || end < start {
            return Err(format!("range {s:?} must satisfy 2 <= a <= b"));
        }
        Ok(Self { start, end })
    }
}

#[derive(Debug, Parser)]
#[command(name = "kunzkit", version, about = "Minimal presentations of numerical semigroups via Kunz nilsemigroups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Invariants, Kunz poset and minimal presentation of a semigroup.
    Info {
        #[arg(required = true)]
        generators: Vec<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Build a member of a parametric family and verify (m, e, eta).
    Family(FamilyArgs),
    /// Achieved eta values over bounded Kunz coordinates.
    Survey(SurveyArgs),
    /// Check the known eta bounds on every surveyed nilsemigroup.
    Verify {
        #[arg(long, default_value = "2..8")]
        m: MRange,
        #[arg(long)]
        bound: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug, Args)]
struct FamilyArgs {
    /// max_embdim, rosales, interval, extra_betti, eta3, embdim4, extend or fixture.
    name: String,
    #[arg(long)]
    m: Option<u64>,
    #[arg(long)]
    e: Option<u64>,
    #[arg(long)]
    r: Option<u64>,
    #[arg(long)]
    s: Option<u64>,
    #[arg(long)]
    eta: Option<u64>,
    /// Generators of the base semigroup for `extend`, comma separated.
    #[arg(long, value_delimiter = ',')]
    base: Vec<u64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Args)]
struct SurveyArgs {
    #[arg(long)]
    m: MRange,
    #[arg(long)]
    bound: Option<u32>,
    /// Write the profile here; `.json` gives JSON, anything else CSV.
    #[arg(long)]
    emit: Option<PathBuf>,
    #[arg(long)]
    e: Option<usize>,
    #[arg(long)]
    max_eta: Option<usize>,
    #[arg(long)]
    check_stabilization: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

/// Failure carrying its exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn usage(message: impl ToString) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.to_string(),
        }
    }

    fn internal(message: impl ToString) -> Self {
        Self {
            code: EXIT_INTERNAL,
            message: message.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::internal(e)
    }
}

/// Parses `args` (program name first), writes to `out` and `err`, and
/// returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    let result = match cli.command {
        Command::Info { generators, format } => run_info(&generators, format, out),
        Command::Family(a) => run_family(&a, out),
        Command::Survey(a) => run_survey(&a, out),
        Command::Verify { m, bound, format } => run_verify(m, bound, format, out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn semigroup_failure(e: SemigroupError) -> Failure {
    match e {
        SemigroupError::Postcondition(_) | SemigroupError::Overflow => Failure::internal(e),
        _ => Failure::usage(e),
    }
}

#[derive(Serialize)]
struct TradeJson<'a> {
    left: &'a Factorization,
    right: &'a Factorization,
    element: Value,
}

fn presentation_json(p: &MinimalPresentation) -> Value {
    let trades: Vec<TradeJson> = p
        .trades
        .iter()
        .map(|t| TradeJson {
            left: &t.left,
            right: &t.right,
            element: json!(t.element),
        })
        .collect();
    json!(trades)
}

fn nil_json(x: Option<usize>, labels: &[u32]) -> Value {
    x.map_or(json!("inf"), |v| json!(labels[v]))
}

fn kunz_json(n: &KunzNilsemigroup) -> Value {
    let labels = n.labels();
    let poset = n.kunz_poset();
    let atoms: Vec<u32> = n.atoms().iter().map(|&a| labels[a]).collect();
    let covers: Vec<Value> = poset
        .covers()
        .iter()
        .map(|c| json!({"lower": labels[c.lower], "upper": labels[c.upper], "atom": atoms[c.atom]}))
        .collect();
    let outer: Vec<Value> = n.outer_betti_elements().iter().map(|b| json!(b.factorizations)).collect();
    let nil_trades: Vec<Value> = n
        .nil_minimal_presentation()
        .iter()
        .map(|t| json!({"left": t.left, "right": t.right, "element": labels[t.element]}))
        .collect();
    let table: Vec<Value> = n
        .full_table()
        .iter()
        .map(|row| json!(row.iter().map(|&x| nil_json(x, labels)).collect::<Vec<_>>()))
        .collect();
    json!({
        "atoms": atoms,
        "covers": covers,
        "outer_betti": outer,
        "nil_trades": nil_trades,
        "table": table,
    })
}

struct InfoReport {
    s: NumericalSemigroup,
    nil: Option<KunzNilsemigroup>,
    direct: MinimalPresentation,
    lifted: Option<MinimalPresentation>,
}

impl InfoReport {
    fn eta_kunz(&self) -> usize {
        self.lifted.as_ref().map_or(0, |p| p.eta)
    }

    fn agree(&self) -> bool {
        match &self.lifted {
            Some(p) => p.eta == self.direct.eta && p.betti_elements == self.direct.betti_elements,
            None => self.direct.eta == 0,
        }
    }

    fn presentation(&self) -> &MinimalPresentation {
        self.lifted.as_ref().unwrap_or(&self.direct)
    }
}

fn info_report(generators: &[u64]) -> Result<InfoReport, Failure> {
    let s = NumericalSemigroup::new(generators).map_err(semigroup_failure)?;
    let direct = if s.multiplicity() == 1 {
        MinimalPresentation::from_trades(Vec::new())
    } else {
        s.minimal_presentation_direct().map_err(semigroup_failure)?
    };
    let (nil, lifted) = if s.multiplicity() == 1 {
        (None, None)
    } else {
        let n = KunzNilsemigroup::from_semigroup(&s).map_err(Failure::internal)?;
        let p = n.lifted_presentation(&s).map_err(Failure::internal)?;
        (Some(n), Some(p))
    };
    Ok(InfoReport { s, nil, direct, lifted })
}

fn info_json(rep: &InfoReport) -> Value {
    let s = &rep.s;
    let p = rep.presentation();
    json!({
        "semigroup": {
            "generators": s.generators(),
            "m": s.multiplicity(),
            "e": s.embedding_dimension(),
            "r": s.codimension(),
            "frobenius": s.frobenius().map_or(-1, |f| f as i64),
            "apery": s.apery_set().elements(),
            "eta": p.eta,
            "betti": p.betti_elements,
            "presentation": presentation_json(p),
            "kunz": rep.nil.as_ref().map_or(Value::Null, kunz_json),
        },
        "eta_kunz": rep.eta_kunz(),
        "eta_direct": rep.direct.eta,
        "agree": rep.agree(),
    })
}

/// The JSON document printed by `info --format json`.
pub fn info_document(generators: &[u64]) -> Result<Value, Failure> {
    info_report(generators).map(|rep| info_json(&rep))
}

fn run_info(generators: &[u64], format: Format, out: &mut dyn Write) -> Result<(), Failure> {
    let rep = info_report(generators)?;
    match format {
        Format::Json => {
            let doc = info_json(&rep);
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).map_err(Failure::internal)?)?;
        }
        Format::Dot => {
            let n = rep
                .nil
                .as_ref()
                .ok_or_else(|| Failure::usage("multiplicity 1 has no Kunz poset"))?;
            write!(out, "{}", n.kunz_poset().to_dot())?;
        }
        Format::Text => write_info_text(&rep, out)?,
        Format::Csv => return Err(Failure::usage("info supports text, json and dot")),
    }
    if !rep.agree() {
        return Err(Failure::internal(format!(
            "Kunz route gives eta {} but the direct scan gives {}",
            rep.eta_kunz(),
            rep.direct.eta
        )));
    }
    Ok(())
}

fn write_info_text(rep: &InfoReport, out: &mut dyn Write) -> io::Result<()> {
    let s = &rep.s;
    writeln!(out, "S = {s}")?;
    writeln!(
        out,
        "m = {}, e = {}, r = {}",
        s.multiplicity(),
        s.embedding_dimension(),
        s.codimension()
    )?;
    match s.frobenius() {
        Ok(f) => writeln!(out, "Frobenius number = {f}")?,
        Err(_) => writeln!(out, "Frobenius number = -1")?,
    }
    let ap: Vec<String> = s.apery_set().elements().iter().map(u64::to_string).collect();
    writeln!(out, "Apery set = {{{}}}", ap.join(", "))?;
    if let Some(n) = &rep.nil {
        let labels = n.labels();
        let atoms: Vec<String> = n.atoms().iter().map(|&a| labels[a].to_string()).collect();
        writeln!(out, "Kunz atoms = {{{}}}", atoms.join(", "))?;
        writeln!(out, "Kunz poset covers:")?;
        for c in n.kunz_poset().covers() {
            writeln!(
                out,
                "  {} -> {} (atom {})",
                labels[c.lower],
                labels[c.upper],
                labels[n.atoms()[c.atom]]
            )?;
        }
        let outer = n.outer_betti_elements();
        writeln!(out, "outer Betti elements ({}):", outer.len())?;
        for b in &outer {
            let fs: Vec<String> = b.factorizations.iter().map(ToString::to_string).collect();
            writeln!(out, "  {{{}}}", fs.join(", "))?;
        }
        let trades = n.nil_minimal_presentation();
        writeln!(out, "nilsemigroup trades ({}):", trades.len())?;
        for t in &trades {
            writeln!(out, "  {} ~ {} at {}", t.left, t.right, labels[t.element])?;
        }
    }
    let p = rep.presentation();
    writeln!(out, "minimal presentation ({} trades):", p.eta)?;
    for t in &p.trades {
        writeln!(out, "  {} ~ {} at {}", t.left, t.right, t.element)?;
    }
    let betti: Vec<String> = p.betti_elements.iter().map(u64::to_string).collect();
    writeln!(out, "Betti elements = {{{}}}", betti.join(", "))?;
    writeln!(
        out,
        "eta = {} (Kunz) / {} (direct){}",
        rep.eta_kunz(),
        rep.direct.eta,
        if rep.agree() { "" } else { "  DISAGREE" }
    )
}

fn family_failure(e: FamilyError) -> Failure {
    match e {
        FamilyError::Hypothesis(_) => Failure::usage(e),
        _ => Failure::internal(e),
    }
}

fn build_family(a: &FamilyArgs) -> Result<FamilyMember, Failure> {
    let name: FamilyName = a.name.parse().map_err(|e: FamilyError| Failure::usage(e))?;
    let need = |v: Option<u64>, flag: &str| v.ok_or_else(|| Failure::usage(format!("{name} needs --{flag}")));
    let member = match name {
        FamilyName::MaxEmbdim => families::max_embdim(need(a.m, "m")?),
        FamilyName::Rosales => families::rosales(need(a.m, "m")?, need(a.e, "e")?),
        FamilyName::Interval => families::interval(need(a.e, "e")?, need(a.r, "r")?, need(a.s, "s")?),
        FamilyName::ExtraBetti => families::extra_betti(need(a.e, "e")?, need(a.r, "r")?),
        FamilyName::Eta3 => families::eta3(need(a.m, "m")?),
        FamilyName::Embdim4 => families::embdim4(need(a.m, "m")?, need(a.eta, "eta")?),
        FamilyName::Extend => {
            if a.base.is_empty() {
                return Err(Failure::usage("extend needs --base"));
            }
            let base = NumericalSemigroup::new(&a.base).map_err(semigroup_failure)?;
            families::extend_eta(&base, need(a.m, "m")?)
        }
        FamilyName::Fixture => families::fixture_extra_betti_e4(),
    };
    member.map_err(family_failure)
}

fn run_family(a: &FamilyArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let f = build_family(a)?;
    let (m, e, eta) = f.spec.expected;
    match a.format {
        Format::Json => {
            let doc = json!({
                "family": f.spec.name,
                "parameters": f.spec.parameters,
                "generators": f.semigroup.generators(),
                "m": m,
                "e": e,
                "eta": eta,
                "eta_kunz": f.eta_kunz,
                "eta_direct": f.eta_direct,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).map_err(Failure::internal)?)?;
        }
        Format::Text => {
            writeln!(out, "{}", f.semigroup)?;
            writeln!(out, "verified (m, e, eta) = ({m}, {e}, {eta})")?;
        }
        Format::Dot | Format::Csv => return Err(Failure::usage("family supports text and json")),
    }
    Ok(())
}

fn install_interrupt_handler() {
    HANDLER.call_once(|| {
        // A second handler in the same process is refused; surveys then
        // simply run to completion.
        let _ = ctrlc::set_handler(|| CANCEL.store(true, Ordering::SeqCst));
    });
}

fn run_survey(a: &SurveyArgs, out: &mut dyn Write) -> Result<(), Failure> {
    if a.bound == Some(0) {
        return Err(Failure::usage("--bound must be at least 1"));
    }
    if a.format == Format::Dot {
        return Err(Failure::usage("survey supports text, json and csv"));
    }
    install_interrupt_handler();
    CANCEL.store(false, Ordering::SeqCst);
    let config = SurveyConfig {
        bound: a.bound,
        e_filter: a.e,
        max_eta: a.max_eta,
        threads: None,
        check_stabilization: a.check_stabilization,
    };
    let (profile, _) = survey::survey(&a.m.values(), &config, &CANCEL).map_err(Failure::internal)?;
    if let Some(path) = &a.emit {
        write_profile(&profile, path)?;
    }
    match a.format {
        Format::Json => writeln!(out, "{}", profile.to_json().map_err(Failure::internal)?)?,
        Format::Csv => profile.write_csv(&mut *out).map_err(Failure::internal)?,
        _ => write!(out, "{}", profile.render_text())?,
    }
    Ok(())
}

fn write_profile(profile: &EtaProfile, path: &PathBuf) -> Result<(), Failure> {
    let file = File::create(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    let mut w = BufWriter::new(file);
    if path.extension().is_some_and(|x| x == "json") {
        writeln!(w, "{}", profile.to_json().map_err(Failure::internal)?)?;
    } else {
        profile.write_csv(&mut w).map_err(Failure::internal)?;
    }
    w.flush()?;
    Ok(())
}

fn run_verify(range: MRange, bound: Option<u32>, format: Format, out: &mut dyn Write) -> Result<(), Failure> {
    let config = SurveyConfig {
        bound,
        ..SurveyConfig::default()
    };
    let never = AtomicBool::new(false);
    let (profile, _) = survey::survey(&range.values(), &config, &never).map_err(Failure::internal)?;
    let report = survey::verify_bounds(&profile);
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report).map_err(Failure::internal)?)?,
        _ => {
            writeln!(
                out,
                "checked {} achieved (m, e, eta) triples for m in {}..{}",
                report.checked, range.start, range.end
            )?;
            for v in &report.violations {
                writeln!(
                    out,
                    "violation: {} at (m, e, eta) = ({}, {}, {}) witness {:?}",
                    v.kind, v.m, v.e, v.eta, v.witness_generators
                )?;
            }
            writeln!(out, "{} violations", report.violations.len())?;
        }
    }
    if report.is_clean() {
        Ok(())
    } else {
        Err(Failure::internal("bound violations found"))
    }
}
