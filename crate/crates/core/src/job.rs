//! Structured requests and results for the command line and batch runs.
//!
//! A batch file holds one JSON [`JobRequest`] per line; blank lines and lines
//! starting with `#` are skipped. Every record produces one output line, and a
//! final summary line follows when at least one record was read.

use std::collections::BTreeMap;
use std::io::{self, BufRead, Write};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::count::{Advisory, Enumerativity, VirtualCount};
use crate::engine::{
    duality_check, vi_integral, vi_integral_parallel, GrassmannSpec, IntegralCache,
};
use crate::error::{Error, Result};
use crate::qh_oracle::fixed_domain_count_g0;
use crate::symfunc::{InsertionKind, Monomial};
use crate::twist::{self, BClassWord, ProblemSpec};
use crate::Rational;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Grassmannian,
    Hypersurface,
    CompleteIntersection,
    ClosedForm,
    DualityCheck,
    BReduce,
    Tevelev,
    OracleCheck,
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        serde_json::from_value(serde_json::Value::String(s.to_string()))
            .map_err(|_| Error::Parse(format!("unknown mode {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EvalPath {
    #[default]
    Closed,
    #[serde(alias = "phi-expansion")]
    Phi,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClosedForm {
    Projective,
    Lg24,
}

/// Insertions as `"a1:4,a2:1"` or as `[kind, index, exponent]` triples with
/// kind `"a"`/`"chern"` or `"s"`/`"segre"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Insertions {
    Text(String),
    Triples(Vec<(String, u32, u32)>),
}

impl Default for Insertions {
    fn default() -> Self {
        Insertions::Text(String::new())
    }
}

impl Insertions {
    pub fn to_monomial(&self) -> Result<Monomial> {
        match self {
            Insertions::Text(s) => Monomial::parse(s),
            Insertions::Triples(v) => {
                let mut m = Monomial::new();
                for (kind, i, e) in v {
                    let k = match kind.to_ascii_lowercase().as_str() {
                        "a" | "chern" => InsertionKind::Chern(*i),
                        "s" | "segre" => InsertionKind::Segre(*i),
                        other => {
                            return Err(Error::Parse(format!("unknown insertion kind {other:?}")))
                        }
                    };
                    m.push(k, *e);
                }
                Ok(m)
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub struct JobRequest {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub id: Option<String>,
    pub mode: Option<Mode>,
    pub g: Option<u32>,
    pub d: Option<u32>,
    pub r: Option<usize>,
    pub n: Option<usize>,
    /// Hypersurface degrees.
    #[serde(default)]
    pub l: Vec<u32>,
    #[serde(default)]
    pub ins: Insertions,
    pub workers: Option<usize>,
    #[serde(default)]
    pub path: EvalPath,
    pub form: Option<ClosedForm>,
    pub m1: Option<u32>,
    pub m2: Option<u32>,
    /// `j` of each `b^j b^(j+g)` pair for `b-reduce`.
    #[serde(default)]
    pub pairs: Vec<u32>,
    /// Number of point conditions for `tevelev`.
    pub t: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionAudit {
    pub e: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e_twisted: Option<i64>,
    pub insertion_degree: i64,
}

/// Independent routes to the same number.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PathReport {
    pub routes: BTreeMap<String, String>,
    pub agree: bool,
    /// Whether agreement is a theorem here; a disagreement with this unset is
    /// reported but not a failure.
    pub expected: bool,
}

impl PathReport {
    fn new(routes: impl IntoIterator<Item = (&'static str, Rational)>, expected: bool) -> Self {
        let routes: BTreeMap<String, Rational> = routes
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect();
        let mut values = routes.values();
        let first = values.next().cloned();
        let agree = values.all(|v| Some(v) == first.as_ref());
        PathReport {
            routes: routes
                .into_iter()
                .map(|(k, v)| (k, v.to_string()))
                .collect(),
            agree,
            expected,
        }
    }

    pub fn failed(&self) -> bool {
        self.expected && !self.agree
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Stats {
    pub wall_ms: f64,
    pub subsets: u128,
    pub workers: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct JobResult {
    pub schema: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub id: Option<String>,
    pub mode: Mode,
    /// Exact value, `p` or `p/q`.
    pub value: String,
    pub numerator: String,
    pub denominator: String,
    /// Derived float approximation of `value`; never used for checks.
    pub approx_f64: f64,
    pub is_integer: bool,
    pub advisory: Advisory,
    pub dimension: DimensionAudit,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub paths: Option<PathReport>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, serde_json::Value>,
    pub stats: Stats,
}

impl JobResult {
    /// Parses `value` back to the exact rational.
    pub fn exact(&self) -> Result<Rational> {
        self.value
            .parse::<Rational>()
            .map_err(|e| Error::Parse(format!("value {:?}: {e}", self.value)))
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("{} = {}", mode_name(self.mode), self.value);
        if !self.is_integer {
            out.push_str(&format!(" (~ {})", self.approx_f64));
        }
        out.push_str(&format!(
            "\n  advisory: {} ({})",
            self.advisory.kind, self.advisory.reason
        ));
        out.push_str(&format!(
            "\n  dimension: e = {}, insertion degree = {}",
            self.dimension.e, self.dimension.insertion_degree
        ));
        if let Some(e) = self.dimension.e_twisted {
            out.push_str(&format!(", twisted e = {e}"));
        }
        if let Some(p) = &self.paths {
            let routes: Vec<String> = p.routes.iter().map(|(k, v)| format!("{k} = {v}")).collect();
            out.push_str(&format!(
                "\n  paths: {} -> {}",
                routes.join(", "),
                if p.agree { "agree" } else { "DISAGREE" }
            ));
        }
        for (k, v) in &self.details {
            out.push_str(&format!("\n  {k}: {v}"));
        }
        out.push_str(&format!(
            "\n  {:.1} ms, {} subsets, {} workers",
            self.stats.wall_ms, self.stats.subsets, self.stats.workers
        ));
        out
    }
}

fn mode_name(mode: Mode) -> String {
    serde_json::to_value(mode)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default()
}

/// A failed record.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct JobError {
    pub schema: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub id: Option<String>,
    pub error: String,
    pub message: String,
    pub exit_code: i32,
}

impl JobError {
    pub fn new(id: Option<String>, err: &Error) -> Self {
        JobError {
            schema: SCHEMA_VERSION,
            id,
            error: error_kind(err).into(),
            message: err.to_string(),
            exit_code: exit_code(err),
        }
    }
}

pub fn error_kind(err: &Error) -> &'static str {
    match err {
        Error::ZeroOrder => "zero-order",
        Error::OrderMismatch { .. } => "order-mismatch",
        Error::NotInvertible { .. } => "not-invertible",
        Error::NotRational { .. } => "not-rational",
        Error::NonIntegral { .. } => "non-integral",
        Error::DimensionMismatch { .. } => "dimension-mismatch",
        Error::RegimeViolation(_) => "regime-violation",
        Error::InvalidInsertion(_) => "invalid-insertion",
        Error::InvalidSpec(_) => "invalid-spec",
        Error::Parse(_) => "parse",
    }
}

/// 2 for validation errors, 3 for internal invariant breaches.
pub fn exit_code(err: &Error) -> i32 {
    if err.is_internal() {
        3
    } else {
        2
    }
}

pub fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn need<T: Copy>(v: Option<T>, name: &str) -> Result<T> {
    v.ok_or_else(|| Error::InvalidSpec(format!("missing parameter {name}")))
}

struct Outcome {
    count: VirtualCount,
    dimension: DimensionAudit,
    paths: Option<PathReport>,
    details: BTreeMap<String, serde_json::Value>,
    subsets: u128,
}

impl Outcome {
    fn new(count: VirtualCount, dimension: DimensionAudit, subsets: u128) -> Self {
        Outcome {
            count,
            dimension,
            paths: None,
            details: BTreeMap::new(),
            subsets,
        }
    }
}

impl JobRequest {
    fn base(&self) -> Result<GrassmannSpec> {
        GrassmannSpec::new(
            need(self.r, "r")?,
            need(self.n, "n")?,
            self.g.unwrap_or(0),
            need(self.d, "d")?,
        )
    }

    fn problem(&self) -> Result<ProblemSpec> {
        ProblemSpec::new(self.base()?, self.l.clone(), self.ins.to_monomial()?)
    }
}

fn plain_audit(base: &GrassmannSpec, mono: &Monomial) -> DimensionAudit {
    DimensionAudit {
        e: base.virtual_dim(),
        e_twisted: None,
        insertion_degree: mono.weight(),
    }
}

fn twisted_audit(spec: &ProblemSpec) -> DimensionAudit {
    DimensionAudit {
        e: spec.base.virtual_dim(),
        e_twisted: Some(spec.twisted_dim()),
        insertion_degree: spec.insertions.weight(),
    }
}

fn grassmann_advisory() -> Advisory {
    Advisory::new(
        Enumerativity::EnumerativeIfWeaklyConvex,
        "Grassmannian target: the count is enumerative for sufficiently large d",
    )
}

fn integral(base: &GrassmannSpec, mono: &Monomial, workers: usize) -> Result<VirtualCount> {
    if workers > 1 {
        vi_integral_parallel(base, mono, workers)
    } else {
        vi_integral(base, mono)
    }
}

fn twisted(spec: &ProblemSpec, path: EvalPath, cache: &mut IntegralCache) -> Result<Outcome> {
    let subsets = spec.base.subset_count();
    let audit = twisted_audit(spec);
    let single = spec.multidegree.len() == 1;
    match path {
        EvalPath::Closed => {
            let c = if single {
                twist::hypersurface_integral_with(spec, cache)?
            } else {
                twist::complete_intersection_integral_with(spec, cache)?
            };
            Ok(Outcome::new(c, audit, subsets))
        }
        EvalPath::Phi => Ok(Outcome::new(
            twist::phi_expansion_integral_with(spec, cache)?,
            audit,
            subsets,
        )),
        EvalPath::Both => {
            let cmp = twist::compare_paths_with(spec, cache)?;
            let mut out = Outcome::new(cmp.closed.clone(), audit, subsets);
            out.paths = Some(PathReport::new(
                [("closed", cmp.closed.value), ("phi", cmp.phi.value)],
                cmp.agreement_expected,
            ));
            Ok(out)
        }
    }
}

fn dispatch(req: &JobRequest, workers: usize) -> Result<Outcome> {
    let mode = req
        .mode
        .ok_or_else(|| Error::InvalidSpec("missing parameter mode".into()))?;
    let mut cache = IntegralCache::with_workers(workers);
    match mode {
        Mode::Grassmannian => {
            let base = req.base()?;
            let mono = req.ins.to_monomial()?;
            let mut c = integral(&base, &mono, workers)?;
            c.advisory = grassmann_advisory();
            Ok(Outcome::new(
                c,
                plain_audit(&base, &mono),
                base.subset_count(),
            ))
        }
        Mode::Hypersurface => {
            if req.l.len() != 1 {
                return Err(Error::InvalidSpec(format!(
                    "hypersurface needs exactly one degree, got {:?}",
                    req.l
                )));
            }
            twisted(&req.problem()?, req.path, &mut cache)
        }
        Mode::CompleteIntersection => {
            if req.l.is_empty() {
                return Err(Error::InvalidSpec(
                    "complete intersection needs at least one degree".into(),
                ));
            }
            twisted(&req.problem()?, req.path, &mut cache)
        }
        Mode::ClosedForm => closed_form(req, &mut cache),
        Mode::DualityCheck => {
            let base = req.base()?;
            let mono = req.ins.to_monomial()?;
            let rep = duality_check(&base, &mono)?;
            let mut out = Outcome::new(
                VirtualCount::certified(rep.chern_side.value.clone(), grassmann_advisory())?,
                plain_audit(&base, &mono),
                base.subset_count() + base.dual()?.subset_count(),
            );
            out.details.insert("equal".into(), rep.equal.into());
            out.paths = Some(PathReport::new(
                [
                    ("chern-side", rep.chern_side.value),
                    ("segre-side", rep.segre_side.value),
                ],
                true,
            ));
            Ok(out)
        }
        Mode::BReduce => {
            let base = req.base()?;
            let word = BClassWord::new(req.pairs.clone(), req.ins.to_monomial()?);
            let c = twist::reduce_b_classes_with(&word, &base, &mut cache)?;
            let audit = DimensionAudit {
                e: base.virtual_dim(),
                e_twisted: None,
                insertion_degree: word.trailing.weight() + word.len() as i64,
            };
            Ok(Outcome::new(c, audit, base.subset_count()))
        }
        Mode::Tevelev => tevelev(req),
        Mode::OracleCheck => {
            let base = req.base()?;
            if base.g != 0 {
                return Err(Error::InvalidSpec(
                    "the quantum cohomology oracle is genus 0 only".into(),
                ));
            }
            let mono = req.ins.to_monomial()?;
            let oracle = fixed_domain_count_g0(base.r, base.n, base.d, &mono)?;
            let engine = integral(&base, &mono, workers)?;
            let mut out = Outcome::new(
                VirtualCount::certified(
                    Rational::from_integer(oracle.clone()),
                    grassmann_advisory(),
                )?,
                plain_audit(&base, &mono),
                base.subset_count(),
            );
            out.paths = Some(PathReport::new(
                [
                    ("oracle", Rational::from_integer(oracle)),
                    ("engine", engine.value),
                ],
                true,
            ));
            Ok(out)
        }
    }
}

fn closed_form(req: &JobRequest, cache: &mut IntegralCache) -> Result<Outcome> {
    let g = req.g.unwrap_or(0);
    let d = need(req.d, "d")?;
    let form = req.form.unwrap_or(if req.m1.is_some() || req.m2.is_some() {
        ClosedForm::Lg24
    } else {
        ClosedForm::Projective
    });
    let (count, spec) = match form {
        ClosedForm::Projective => {
            let r = need(req.r, "r")?;
            if let Some(n) = req.n.filter(|&n| n != r + 1) {
                return Err(Error::InvalidSpec(format!(
                    "projective closed form needs n = r + 1, got n = {n}"
                )));
            }
            if req.l.is_empty() {
                return Err(Error::InvalidSpec("missing parameter l".into()));
            }
            let base = GrassmannSpec::new(r, r + 1, g, d)?;
            let probe = ProblemSpec::new(base, req.l.clone(), Monomial::new())?;
            probe.check_regime()?;
            let e_l = probe.twisted_dim();
            if e_l < 0 {
                return Err(Error::DimensionMismatch {
                    expected: e_l,
                    found: 0,
                });
            }
            let spec = ProblemSpec::new(base, req.l.clone(), Monomial::chern_power(1, e_l as u32))?;
            (twist::closed_form_projective(g, d, r, &req.l), spec)
        }
        ClosedForm::Lg24 => {
            let (m1, m2) = (req.m1.unwrap_or(0), req.m2.unwrap_or(0));
            let count = twist::closed_form_lg24(g, d, m1, m2)?;
            let mono = Monomial::chern_power(1, m1).with(InsertionKind::Chern(2), m2);
            let spec = ProblemSpec::hypersurface(GrassmannSpec::new(2, 4, g, d)?, 1, mono)?;
            (count, spec)
        }
    };
    let mut out = Outcome::new(count, twisted_audit(&spec), 0);
    out.count.advisory = twist::enumerativity_advisor(&spec);
    if req.path != EvalPath::Closed {
        let engine = twist::complete_intersection_integral_with(&spec, cache)?;
        let mut routes = vec![
            ("formula", out.count.value.clone()),
            ("engine", engine.value),
        ];
        if req.path == EvalPath::Both {
            routes.push((
                "phi",
                twist::phi_expansion_integral_with(&spec, cache)?.value,
            ));
        }
        out.subsets = spec.base.subset_count();
        out.paths = Some(PathReport::new(routes, g <= d));
    }
    Ok(out)
}

fn tevelev(req: &JobRequest) -> Result<Outcome> {
    let g = req.g.unwrap_or(0);
    let d = need(req.d, "d")?;
    let r = need(req.r, "r")?;
    if let Some(n) = req.n.filter(|&n| n != r + 1) {
        return Err(Error::InvalidSpec(format!(
            "point counts live on P^r, need n = r + 1, got n = {n}"
        )));
    }
    let l = match req.l.as_slice() {
        [l] => *l,
        other => {
            return Err(Error::InvalidSpec(format!(
                "tevelev needs exactly one degree, got {other:?}"
            )))
        }
    };
    let t = match req.t {
        Some(t) => t,
        None => {
            let spec =
                ProblemSpec::hypersurface(GrassmannSpec::new(r, r + 1, g, d)?, l, Monomial::new())?;
            let e_l = spec.twisted_dim();
            if r < 2 || e_l <= 0 || e_l % (r as i64 - 1) != 0 {
                return Err(Error::InvalidSpec(format!(
                    "e_l = {e_l} is not a positive multiple of r - 1"
                )));
            }
            (e_l / (r as i64 - 1)) as u32
        }
    };
    let rep = twist::tevelev_compare(g, d, r, l, t)?;
    let base = GrassmannSpec::new(r, r + 1, g, d)?;
    let spec = ProblemSpec::hypersurface(base, l, Monomial::chern_power(r as u32 - 1, t))?;
    let mut out = Outcome::new(rep.q.clone(), twisted_audit(&spec), 0);
    out.details.insert("t".into(), t.into());
    out.details
        .insert("implied_tev".into(), rep.implied_tev.to_string().into());
    out.details.insert(
        "implied_tev_is_integer".into(),
        rep.implied_is_integer.into(),
    );
    out.details
        .insert("comparison_regime".into(), rep.comparison_regime.into());
    if req.path != EvalPath::Closed {
        let engine = twist::tevelev_q_via_engine(g, d, r, l, t)?;
        out.paths = Some(PathReport::new(
            [("formula", rep.q.value), ("engine", engine)],
            d >= g,
        ));
        out.subsets = base.subset_count();
    }
    Ok(out)
}

/// Runs one request. `default_workers` applies when the request names none.
pub fn run(req: &JobRequest, default_workers: usize) -> Result<JobResult> {
    let workers = req.workers.unwrap_or(default_workers).max(1);
    let start = Instant::now();
    let out = dispatch(req, workers)?;
    let wall_ms = start.elapsed().as_secs_f64() * 1e3;
    let value = &out.count.value;
    Ok(JobResult {
        schema: SCHEMA_VERSION,
        id: req.id.clone(),
        mode: req.mode.expect("dispatch checked the mode"),
        value: value.to_string(),
        numerator: value.numer().to_string(),
        denominator: value.denom().to_string(),
        approx_f64: out.count.approx(),
        is_integer: out.count.is_integer,
        advisory: out.count.advisory,
        dimension: out.dimension,
        paths: out.paths,
        details: out.details,
        stats: Stats {
            wall_ms,
            subsets: out.subsets,
            workers,
        },
    })
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BatchSummary {
    pub records: usize,
    pub ok: usize,
    pub errors: usize,
    pub path_checks: usize,
    pub path_failures: usize,
    /// Disagreements where agreement is not a theorem.
    pub disagreements_reported: usize,
    pub exit_code: i32,
}

#[derive(Serialize)]
struct SummaryLine<'a> {
    schema: u32,
    summary: &'a BatchSummary,
}

/// Runs every record in `input`, writing one JSON line per record and a
/// summary line. Record failures are written as [`JobError`] lines.
pub fn batch<R: BufRead, W: Write>(
    input: R,
    mut out: W,
    default_workers: usize,
) -> io::Result<BatchSummary> {
    let mut summary = BatchSummary::default();
    for (lineno, line) in input.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        summary.records += 1;
        let parsed: Result<JobRequest> = serde_json::from_str(trimmed)
            .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)));
        let id = parsed.as_ref().ok().and_then(|r| r.id.clone());
        match parsed.and_then(|req| run(&req, default_workers)) {
            Ok(res) => {
                summary.ok += 1;
                if let Some(p) = &res.paths {
                    summary.path_checks += 1;
                    if p.failed() {
                        summary.path_failures += 1;
                    } else if !p.agree {
                        summary.disagreements_reported += 1;
                    }
                }
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&res).map_err(io::Error::other)?
                )?;
            }
            Err(err) => {
                summary.errors += 1;
                let rec = JobError::new(id, &err);
                summary.exit_code = summary.exit_code.max(rec.exit_code);
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&rec).map_err(io::Error::other)?
                )?;
            }
        }
    }
    if summary.path_failures > 0 {
        summary.exit_code = 3;
    }
    if summary.records > 0 {
        let line = SummaryLine {
            schema: SCHEMA_VERSION,
            summary: &summary,
        };
        writeln!(
            out,
            "{}",
            serde_json::to_string(&line).map_err(io::Error::other)?
        )?;
    }
    Ok(summary)
}

/// Named requests reproducing the published examples.
pub fn presets() -> Vec<(&'static str, &'static str, JobRequest)> {
    let base = |mode: Mode, g: u32, d: u32, r: usize, n: usize| JobRequest {
        mode: Some(mode),
        g: Some(g),
        d: Some(d),
        r: Some(r),
        n: Some(n),
        ..JobRequest::default()
    };
    vec![
        (
            "p2-elliptic",
            "maps from an elliptic curve to P^2, d = 1, a_1^3: 3",
            JobRequest {
                ins: Insertions::Text("a1:3".into()),
                ..base(Mode::Grassmannian, 1, 1, 2, 3)
            },
        ),
        (
            "lg24",
            "LG(2,4) as a hyperplane section of G(2,4), g = 1, d = 2, a_1^4 a_2: 24",
            JobRequest {
                l: vec![1],
                ins: Insertions::Text("a1:4,a2:1".into()),
                path: EvalPath::Both,
                ..base(Mode::Hypersurface, 1, 2, 2, 4)
            },
        ),
        (
            "lg24-a1",
            "LG(2,4) closed form, g = 0, d = 1, a_1^6: 8",
            JobRequest {
                form: Some(ClosedForm::Lg24),
                m1: Some(6),
                m2: Some(0),
                path: EvalPath::Both,
                ..base(Mode::ClosedForm, 0, 1, 2, 4)
            },
        ),
        (
            "lg24-a2",
            "LG(2,4) closed form, g = 0, d = 1, a_2^3: 1",
            JobRequest {
                form: Some(ClosedForm::Lg24),
                m1: Some(0),
                m2: Some(3),
                path: EvalPath::Both,
                ..base(Mode::ClosedForm, 0, 1, 2, 4)
            },
        ),
        (
            "quadric-p3",
            "quadric surface in P^3, g = 0, d = 2, a_1^6: 32",
            JobRequest {
                l: vec![2],
                ins: Insertions::Text("a1:6".into()),
                path: EvalPath::Both,
                ..base(Mode::Hypersurface, 0, 2, 3, 4)
            },
        ),
        (
            "ci-22-p4",
            "intersection of two quadrics in P^4, g = 0, d = 1, a_1^3: 64",
            JobRequest {
                l: vec![2, 2],
                ins: Insertions::Text("a1:3".into()),
                path: EvalPath::Both,
                ..base(Mode::CompleteIntersection, 0, 1, 4, 5)
            },
        ),
        (
            "b-pair",
            "one b-class pair on Quot of P^2, g = 1, d = 1, a_1^2: 1",
            JobRequest {
                pairs: vec![1],
                ins: Insertions::Text("a1:2".into()),
                ..base(Mode::BReduce, 1, 1, 2, 3)
            },
        ),
        (
            "duality-p2",
            "Chern side on G(2,3) against Segre side on G(1,3), g = 1, d = 1, a_1^3: 3",
            JobRequest {
                ins: Insertions::Text("a1:3".into()),
                ..base(Mode::DualityCheck, 1, 1, 2, 3)
            },
        ),
    ]
}
