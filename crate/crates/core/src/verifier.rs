//! The check catalog, its runner, and the table and JSON renderings of a
//! report.
//!
//! Checks run on a bounded worker pool. Each check executes on its own
//! thread so that a timeout or panic marks that record and nothing else; the
//! report always lists records in catalog order.

use std::fmt::Write as _;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::mpsc;
use std::sync::{Arc, Mutex, OnceLock};
use std::thread;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::contour::{hankel_exp_integral, hankel_resolvent_integral, resolvent_residue, HankelPath};
use crate::elliptic::{
    complete_k, complete_pi, defining_f, defining_k, defining_pi, incomplete_f, landen_residual,
    Amplitude, Characteristic, Modulus,
};
use crate::error::{Error, Result};
use crate::quadrature::{QuadratureConfig, QuadratureResult};
use crate::representations::{
    b_fn, byrd_friedman_checks, elliptic_values, eval_representation, PaperConstants,
    RepresentationId, SQRT_3,
};
use crate::series_forms::{double_series_partial_sums, hankel_series, u_integral, u_series, SeriesConfig};

/// Published six-digit value of I.
pub const PUBLISHED_VALUE: f64 = 0.666_377;
pub const PUBLISHED_TOL: f64 = 5e-7;
/// Expected gap between I and the tabulated π/(2√6).
pub const DISCREPANCY_GAP: f64 = 0.0251;
pub const DISCREPANCY_TOL: f64 = 2e-4;
/// Agreement between quadrature or elliptic evaluations.
pub const QUADRATURE_TOL: f64 = 1e-9;
/// Agreement of the series-based forms with R0.
pub const SERIES_TOL: f64 = 1e-5;
/// Exact algebraic relations.
pub const CONSTANT_TOL: f64 = 1e-14;
pub const DEFAULT_TIMEOUT: Duration = Duration::from_secs(30);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    NoConverge,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::NoConverge => "no-converge",
        }
    }
}

/// How `abs_diff` is judged against `tolerance`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    /// lhs against a published number.
    Reference,
    /// Two independently computed expressions.
    Agreement,
    /// Residual of an exact relation; rhs is 0.
    Identity,
    /// Passes when abs_diff is within `tolerance` of [`DISCREPANCY_GAP`].
    Discrepancy,
}

impl Kind {
    fn accepts(self, abs_diff: f64, tolerance: f64) -> bool {
        match self {
            Kind::Discrepancy => (abs_diff - DISCREPANCY_GAP).abs() <= tolerance,
            _ => abs_diff <= tolerance,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Overall {
    Pass,
    Fail,
}

/// Reals as JSON numbers with 17 significant digits; non-finite as null.
mod sig17 {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};
    use std::str::FromStr;

    pub fn serialize<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
        if v.is_finite() {
            let n = serde_json::Number::from_str(&format!("{v:.16e}")).map_err(serde::ser::Error::custom)?;
            n.serialize(s)
        } else {
            s.serialize_none()
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        // parse the literal with the correctly rounded std parser
        match Option::<serde_json::Number>::deserialize(d)? {
            Some(n) => n.to_string().parse().map_err(serde::de::Error::custom),
            None => Ok(f64::NAN),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    pub kind: Kind,
    pub description: String,
    #[serde(with = "sig17")]
    pub lhs: f64,
    #[serde(with = "sig17")]
    pub rhs: f64,
    #[serde(with = "sig17")]
    pub abs_diff: f64,
    #[serde(with = "sig17")]
    pub tolerance: f64,
    pub status: Status,
    pub paper_anchor: String,
    pub evals: u64,
    pub wall_time_ms: u64,
}

/// Equality treats two NaN reals as equal, so records round-trip.
impl PartialEq for CheckRecord {
    fn eq(&self, other: &Self) -> bool {
        let same = |a: f64, b: f64| a == b || (a.is_nan() && b.is_nan());
        self.id == other.id
            && self.kind == other.kind
            && self.description == other.description
            && same(self.lhs, other.lhs)
            && same(self.rhs, other.rhs)
            && same(self.abs_diff, other.abs_diff)
            && same(self.tolerance, other.tolerance)
            && self.status == other.status
            && self.paper_anchor == other.paper_anchor
            && self.evals == other.evals
            && self.wall_time_ms == other.wall_time_ms
    }
}

impl CheckRecord {
    /// A record with no values yet; its status is `fail` until
    /// [`with_values`](Self::with_values) is applied.
    pub fn new(id: &str, kind: Kind, description: &str, anchor: &str) -> Self {
        Self {
            id: id.to_owned(),
            kind,
            description: description.to_owned(),
            lhs: f64::NAN,
            rhs: f64::NAN,
            abs_diff: f64::NAN,
            tolerance: f64::NAN,
            status: Status::Fail,
            paper_anchor: anchor.to_owned(),
            evals: 0,
            wall_time_ms: 0,
        }
    }

    /// Set both sides and judge them. Apply before [`with_converged`](Self::with_converged).
    pub fn with_values(mut self, lhs: f64, rhs: f64, tolerance: f64) -> Self {
        self.lhs = lhs;
        self.rhs = rhs;
        self.abs_diff = (lhs - rhs).abs();
        self.tolerance = tolerance;
        self.status = if self.kind.accepts(self.abs_diff, tolerance) {
            Status::Pass
        } else {
            Status::Fail
        };
        self
    }

    pub fn with_converged(mut self, converged: bool) -> Self {
        if !converged {
            self.status = Status::NoConverge;
        }
        self
    }

    pub fn with_evals(mut self, evals: usize) -> Self {
        self.evals = evals as u64;
        self
    }

    fn with_error(mut self, message: &str) -> Self {
        self.status = Status::Fail;
        self.description = format!("{} [error: {message}]", self.description);
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub records: Vec<CheckRecord>,
    pub tool_version: String,
    pub config_echo: String,
    pub overall: Overall,
}

impl Report {
    pub fn new(records: Vec<CheckRecord>, config_echo: String) -> Self {
        let overall = if records.iter().all(CheckRecord::passed) {
            Overall::Pass
        } else {
            Overall::Fail
        };
        Self {
            records,
            tool_version: env!("CARGO_PKG_VERSION").to_owned(),
            config_echo,
            overall,
        }
    }

    pub fn passed(&self) -> bool {
        self.overall == Overall::Pass
    }

    pub fn record(&self, id: &str) -> Option<&CheckRecord> {
        self.records.iter().find(|r| r.id == id)
    }
}

/// Computed sides of a check.
#[derive(Debug, Clone, Copy)]
struct Measured {
    lhs: f64,
    rhs: f64,
    tolerance: f64,
    converged: bool,
    evals: usize,
}

impl Measured {
    fn exact(lhs: f64, rhs: f64, tolerance: f64) -> Self {
        Self {
            lhs,
            rhs,
            tolerance,
            converged: true,
            evals: 0,
        }
    }

    fn residual(worst: f64, tolerance: f64, converged: bool, evals: usize) -> Self {
        Self {
            lhs: worst,
            rhs: 0.0,
            tolerance,
            converged,
            evals,
        }
    }
}

/// Shared state of one run; representation values are computed once.
pub struct Context {
    cfg: QuadratureConfig,
    scfg: SeriesConfig,
    reps: [OnceLock<Result<QuadratureResult>>; 13],
    byrd_friedman: OnceLock<Result<Vec<CheckRecord>>>,
}

impl Context {
    fn new(cfg: QuadratureConfig, scfg: SeriesConfig) -> Self {
        Self {
            cfg,
            scfg,
            reps: Default::default(),
            byrd_friedman: OnceLock::new(),
        }
    }

    fn rep(&self, id: RepresentationId) -> Result<QuadratureResult> {
        self.reps[id.index()]
            .get_or_init(|| eval_representation(id, &self.cfg, &self.scfg))
            .clone()
    }
}

#[derive(Clone, Copy)]
enum Run {
    Rep(RepresentationId),
    Custom(fn(&Context) -> Result<Measured>),
    ByrdFriedman(usize),
}

/// One catalog entry.
#[derive(Clone, Copy)]
pub struct CheckSpec {
    pub id: &'static str,
    pub kind: Kind,
    pub description: &'static str,
    pub anchor: &'static str,
    run: Run,
}

const fn custom(
    id: &'static str,
    kind: Kind,
    description: &'static str,
    anchor: &'static str,
    f: fn(&Context) -> Result<Measured>,
) -> CheckSpec {
    CheckSpec {
        id,
        kind,
        description,
        anchor,
        run: Run::Custom(f),
    }
}

fn representation(rep: RepresentationId) -> CheckSpec {
    CheckSpec {
        id: rep.as_str(),
        kind: Kind::Agreement,
        description: rep.description(),
        anchor: rep.anchor(),
        run: Run::Rep(rep),
    }
}

/// All checks in report order.
pub fn catalog() -> &'static [CheckSpec] {
    static CATALOG: OnceLock<Vec<CheckSpec>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let mut c = vec![
            custom(
                "constants",
                Kind::Identity,
                "largest residual of the exact relations among k, k', 1/k, alpha, a, C0",
                "algebraic constants of the reduction",
                check_constants,
            ),
            custom(
                "R0",
                Kind::Reference,
                "defining integral against the published 0.666377",
                "GR 3.248.5",
                check_r0_published,
            ),
            custom(
                "R0-vs-wrong",
                Kind::Discrepancy,
                "defining integral against the tabulated pi/(2 sqrt6); gap must be 0.0251",
                "GR 3.248.5 erratum",
                check_r0_wrong,
            ),
        ];
        c.extend(RepresentationId::ALL[1..].iter().map(|&r| representation(r)));
        c.extend([
            custom(
                "chain",
                Kind::Agreement,
                "max and min over the non-series representations",
                "whole reduction chain",
                check_chain,
            ),
            CheckSpec {
                id: "V0-kprime",
                kind: Kind::Agreement,
                description: "int_1^(1/k) dx/Delta = K(k')",
                anchor: "complete integral of the complementary modulus",
                run: Run::ByrdFriedman(0),
            },
            CheckSpec {
                id: "V1-bf25600",
                kind: Kind::Agreement,
                description: "int_1^a dx/Delta = ((3 + sqrt3)/3) F(alpha, 1/sqrt3)",
                anchor: "Byrd-Friedman 256.00",
                run: Run::ByrdFriedman(1),
            },
            CheckSpec {
                id: "V2-bf25639",
                kind: Kind::Agreement,
                description: "int_1^(1/k) dx/((x + 1 + sqrt3) Delta) in K and Pi",
                anchor: "Byrd-Friedman 256.39, 340.01",
                run: Run::ByrdFriedman(2),
            },
            custom(
                "V3-pre-landen",
                Kind::Agreement,
                "sqrt3 K(k') = (1 + sqrt3) K(1/sqrt3)",
                "DLMF 19.8.12 at k = 2 - sqrt3",
                check_pre_landen,
            ),
            custom(
                "landen",
                Kind::Identity,
                "descending Landen residual at k in {2 - sqrt3, 0.5, 0.9}",
                "DLMF 19.8.12",
                check_landen,
            ),
            custom(
                "V4-u-forms",
                Kind::Identity,
                "U(t): power series against integral, t in {0.1, 0.5, 1, 2, 5}",
                "series and integral forms of U",
                check_u_forms,
            ),
            custom(
                "V5-hankel",
                Kind::Identity,
                "Hankel contour integral against its series, t in {0.5, 1, 2, 5}",
                "Hankel representation of the nested root",
                check_hankel,
            ),
            custom(
                "contour-delta",
                Kind::Identity,
                "Hankel contour integral, drift over delta in {1/4, 1/2, 1}",
                "independence of the contour distance",
                check_contour_delta,
            ),
            custom(
                "V6-residue",
                Kind::Identity,
                "resolvent contour integral against the residue, 20-point u-grid",
                "residue reduction",
                check_residue,
            ),
            custom(
                "V7-threshold",
                Kind::Agreement,
                "sqrt B((2 + sqrt3)/8) = sqrt3 - 3/2",
                "lower limit of the logarithmic form",
                check_threshold,
            ),
            custom(
                "V8-c-cancel",
                Kind::Identity,
                "C0 + (2 sqrt3/sqrt(2 - sqrt3)) ((1 + sqrt3)/4) log(4 sqrt3 - 6)",
                "vanishing constant of the logarithmic form",
                check_c_cancel,
            ),
            custom(
                "elliptic-oracle",
                Kind::Identity,
                "Carlson F, K, Pi against quadrature of their x-forms, 10-point grid",
                "DLMF 19.2, 19.25",
                check_elliptic_oracle,
            ),
            custom(
                "R2-bracket",
                Kind::Identity,
                "largest violation of the alternating bracket of the double series around R0",
                "binomial expansion of the nested root",
                check_bracket,
            ),
        ]);
        c
    })
}

fn check_constants(_: &Context) -> Result<Measured> {
    let worst = PaperConstants::get()
        .residuals()
        .iter()
        .map(|(_, r)| r.abs())
        .fold(0.0, f64::max);
    Ok(Measured::residual(worst, CONSTANT_TOL, true, 0))
}

fn check_r0_published(ctx: &Context) -> Result<Measured> {
    let r0 = ctx.rep(RepresentationId::R0)?;
    Ok(Measured {
        lhs: r0.value,
        rhs: PUBLISHED_VALUE,
        tolerance: PUBLISHED_TOL,
        converged: r0.converged,
        evals: r0.evals,
    })
}

fn check_r0_wrong(ctx: &Context) -> Result<Measured> {
    let r0 = ctx.rep(RepresentationId::R0)?;
    Ok(Measured {
        lhs: r0.value,
        rhs: PaperConstants::get().wrong_value,
        tolerance: DISCREPANCY_TOL,
        converged: r0.converged,
        evals: r0.evals,
    })
}

fn check_representation(ctx: &Context, rep: RepresentationId) -> Result<Measured> {
    let value = ctx.rep(rep)?;
    let r0 = ctx.rep(RepresentationId::R0)?;
    Ok(Measured {
        lhs: value.value,
        rhs: r0.value,
        tolerance: if rep.is_series_based() {
            SERIES_TOL
        } else {
            QUADRATURE_TOL
        },
        converged: value.converged && r0.converged,
        evals: value.evals,
    })
}

fn check_chain(ctx: &Context) -> Result<Measured> {
    let mut hi = f64::NEG_INFINITY;
    let mut lo = f64::INFINITY;
    let mut converged = true;
    let mut evals = 0;
    for rep in RepresentationId::ALL.into_iter().filter(|r| !r.is_series_based()) {
        let r = ctx.rep(rep)?;
        hi = hi.max(r.value);
        lo = lo.min(r.value);
        converged &= r.converged;
        evals += r.evals;
    }
    Ok(Measured {
        lhs: hi,
        rhs: lo,
        tolerance: QUADRATURE_TOL,
        converged,
        evals,
    })
}

fn check_pre_landen(_: &Context) -> Result<Measured> {
    let (k_prime, k_third, _, _) = elliptic_values()?;
    Ok(Measured::exact(SQRT_3 * k_prime, (1.0 + SQRT_3) * k_third, 1e-12))
}

fn check_landen(_: &Context) -> Result<Measured> {
    let mut worst: f64 = 0.0;
    for k in [PaperConstants::get().k, 0.5, 0.9] {
        worst = worst.max(landen_residual(Modulus::new(k)?).abs());
    }
    Ok(Measured::residual(worst, 1e-12, true, 0))
}

fn check_u_forms(ctx: &Context) -> Result<Measured> {
    let (mut worst, mut converged, mut evals) = (0.0f64, true, 0);
    for t in [0.1, 0.5, 1.0, 2.0, 5.0] {
        let s = u_series(t, &ctx.scfg)?;
        let q = u_integral(t, &ctx.cfg)?;
        worst = worst.max((s.value - q.value).abs());
        converged &= s.converged && q.converged;
        evals += q.evals;
    }
    Ok(Measured::residual(worst, 1e-11, converged, evals))
}

fn check_hankel(ctx: &Context) -> Result<Measured> {
    let (mut worst, mut converged, mut evals) = (0.0f64, true, 0);
    for t in [0.5, 1.0, 2.0, 5.0] {
        let s = hankel_series(t, &ctx.scfg)?;
        let c = hankel_exp_integral(t, &HankelPath::default(), &ctx.cfg)?;
        worst = worst.max((s.value - c.value).abs());
        converged &= s.converged && c.converged;
        evals += c.evals;
    }
    Ok(Measured::residual(worst, 1e-8, converged, evals))
}

fn check_contour_delta(ctx: &Context) -> Result<Measured> {
    let (mut worst, mut converged, mut evals) = (0.0f64, true, 0);
    for t in [0.5, 1.0, 2.0, 5.0] {
        let base = hankel_exp_integral(t, &HankelPath::default(), &ctx.cfg)?;
        for delta in [0.25, 1.0] {
            let c = hankel_exp_integral(t, &HankelPath::new(delta)?, &ctx.cfg)?;
            worst = worst.max((c.value - base.value).abs());
            converged &= c.converged;
            evals += c.evals;
        }
        converged &= base.converged;
        evals += base.evals;
    }
    Ok(Measured::residual(worst, 1e-10, converged, evals))
}

fn check_residue(ctx: &Context) -> Result<Measured> {
    let (mut worst, mut converged, mut evals) = (0.0f64, true, 0);
    for i in 0..20 {
        let u = f64::from(i) / 19.0;
        let w = u * (1.0 - u);
        let c = 16.0 / 3.0 * w * w;
        let r = hankel_resolvent_integral(c, &HankelPath::default(), &ctx.cfg)?;
        worst = worst.max((r.value - resolvent_residue(c)?).abs());
        converged &= r.converged;
        evals += r.evals;
    }
    Ok(Measured::residual(worst, 1e-9, converged, evals))
}

fn check_threshold(_: &Context) -> Result<Measured> {
    let t0 = PaperConstants::get().log_threshold();
    Ok(Measured::exact(b_fn(t0)?.sqrt(), SQRT_3 - 1.5, CONSTANT_TOL))
}

fn check_c_cancel(_: &Context) -> Result<Measured> {
    Ok(Measured::residual(
        PaperConstants::get().c_cancellation().abs(),
        CONSTANT_TOL,
        true,
        0,
    ))
}

/// The 10-point (φ, k, n) grid of the elliptic oracle check.
pub fn elliptic_grid() -> impl Iterator<Item = (Amplitude, Modulus, Characteristic)> {
    (0..10).map(|i| {
        let i = f64::from(i);
        (
            Amplitude::new(0.15 * (i + 1.0)).expect("grid amplitude"),
            Modulus::new(0.05 + 0.1 * i).expect("grid modulus"),
            Characteristic::new(-0.5 + 0.14 * i).expect("grid characteristic"),
        )
    })
}

fn check_elliptic_oracle(ctx: &Context) -> Result<Measured> {
    let (mut worst, mut converged, mut evals) = (0.0f64, true, 0);
    let mut track = |carlson: f64, q: QuadratureResult| {
        worst = worst.max((carlson - q.value).abs());
        converged &= q.converged;
        evals += q.evals;
    };
    for (phi, k, n) in elliptic_grid() {
        track(incomplete_f(phi, k), defining_f(phi, k, &ctx.cfg)?);
        track(complete_k(k), defining_k(k, &ctx.cfg)?);
        track(complete_pi(n, k.get())?, defining_pi(n, k.get(), &ctx.cfg)?);
    }
    Ok(Measured::residual(worst, 1e-11, converged, evals))
}

/// Plain partial sums of the double series alternate around I: even-indexed
/// ones lie above it, odd-indexed ones below.
fn check_bracket(ctx: &Context) -> Result<Measured> {
    let r0 = ctx.rep(RepresentationId::R0)?;
    let sums = double_series_partial_sums(crate::series_forms::DOUBLE_SERIES_MAX_OUTER, &ctx.scfg);
    let worst = sums
        .iter()
        .enumerate()
        .map(|(n, &p)| if n % 2 == 0 { r0.value - p } else { p - r0.value })
        .fold(0.0f64, f64::max);
    Ok(Measured::residual(worst, 1e-12, r0.converged, sums.len()))
}

fn execute(spec: &CheckSpec, ctx: &Context) -> CheckRecord {
    let record = CheckRecord::new(spec.id, spec.kind, spec.description, spec.anchor);
    let measured = match spec.run {
        Run::Rep(rep) => check_representation(ctx, rep),
        Run::Custom(f) => f(ctx),
        Run::ByrdFriedman(i) => {
            return match ctx
                .byrd_friedman
                .get_or_init(|| byrd_friedman_checks(&ctx.cfg))
            {
                Ok(records) => {
                    let r = &records[i];
                    CheckRecord {
                        description: spec.description.to_owned(),
                        paper_anchor: spec.anchor.to_owned(),
                        ..r.clone()
                    }
                }
                Err(e) => record.with_error(&e.to_string()),
            };
        }
    };
    match measured {
        Ok(m) => record
            .with_values(m.lhs, m.rhs, m.tolerance)
            .with_converged(m.converged)
            .with_evals(m.evals),
        Err(e) => record.with_error(&e.to_string()),
    }
}

/// Everything that controls a run.
#[derive(Debug, Clone)]
pub struct RunOptions {
    pub selection: Option<Vec<String>>,
    pub cfg: QuadratureConfig,
    pub scfg: SeriesConfig,
    pub timeout: Duration,
    /// Worker count; `None` uses the available parallelism.
    pub jobs: Option<usize>,
}

impl RunOptions {
    pub fn new(cfg: QuadratureConfig, scfg: SeriesConfig) -> Self {
        Self {
            selection: None,
            cfg,
            scfg,
            timeout: DEFAULT_TIMEOUT,
            jobs: None,
        }
    }

    fn config_echo(&self) -> String {
        format!(
            "abs_tol={:e} max_evals={} series_tol={:e} max_terms={} accelerate={} timeout_secs={}",
            self.cfg.abs_tol(),
            self.cfg.max_evals(),
            self.scfg.tail_tol(),
            self.scfg.max_terms(),
            self.scfg.accelerate(),
            self.timeout.as_secs_f64(),
        )
    }
}

/// Resolve a selection to catalog indices; an empty or absent selection
/// means the whole catalog.
pub fn resolve_selection(selection: Option<&[String]>) -> Result<Vec<usize>> {
    let cat = catalog();
    match selection {
        None => Ok((0..cat.len()).collect()),
        Some([]) => Ok((0..cat.len()).collect()),
        Some(ids) => {
            let mut picked: Vec<usize> = ids
                .iter()
                .map(|id| {
                    cat.iter()
                        .position(|c| c.id == id)
                        .ok_or_else(|| Error::InvalidConfig(format!("unknown check id {id:?}")))
                })
                .collect::<Result<_>>()?;
            picked.sort_unstable();
            picked.dedup();
            Ok(picked)
        }
    }
}

/// Run the selected checks (all when `selection` is `None` or empty).
pub fn run_checks(
    selection: Option<&[String]>,
    cfg: &QuadratureConfig,
    scfg: &SeriesConfig,
) -> Result<Report> {
    let mut options = RunOptions::new(*cfg, *scfg);
    options.selection = selection.map(<[String]>::to_vec);
    run_checks_with(&options)
}

pub fn run_checks_with(options: &RunOptions) -> Result<Report> {
    let picked = resolve_selection(options.selection.as_deref())?;
    let cat = catalog();
    let ctx = Arc::new(Context::new(options.cfg, options.scfg));
    let slots: Mutex<Vec<Option<CheckRecord>>> = Mutex::new(vec![None; picked.len()]);
    let next = AtomicUsize::new(0);
    let workers = options
        .jobs
        .unwrap_or_else(|| thread::available_parallelism().map_or(1, usize::from))
        .clamp(1, picked.len().max(1));

    thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let slot = next.fetch_add(1, Ordering::Relaxed);
                let Some(&index) = picked.get(slot) else {
                    break;
                };
                let record = run_isolated(&cat[index], &ctx, options.timeout);
                slots.lock().expect("slot lock")[slot] = Some(record);
            });
        }
    });

    let records = slots
        .into_inner()
        .expect("slot lock")
        .into_iter()
        .map(|r| r.expect("every slot filled"))
        .collect();
    Ok(Report::new(records, options.config_echo()))
}

/// Run one check on its own thread. A timeout yields `no-converge` and leaves
/// the thread detached; a panic yields `fail`.
fn run_isolated(spec: &'static CheckSpec, ctx: &Arc<Context>, timeout: Duration) -> CheckRecord {
    let (tx, rx) = mpsc::channel();
    let ctx = Arc::clone(ctx);
    let start = Instant::now();
    let spawned = thread::Builder::new()
        .name(format!("check-{}", spec.id))
        .spawn(move || {
            let mut record = execute(spec, &ctx);
            record.wall_time_ms = start.elapsed().as_millis() as u64;
            let _ = tx.send(record);
        });
    let blank = || CheckRecord::new(spec.id, spec.kind, spec.description, spec.anchor);
    if let Err(e) = spawned {
        return blank().with_error(&e.to_string());
    }
    match rx.recv_timeout(timeout) {
        Ok(record) => record,
        Err(mpsc::RecvTimeoutError::Timeout) => {
            let mut r = blank().with_converged(false);
            r.description = format!("{} [timed out]", r.description);
            r.wall_time_ms = timeout.as_millis() as u64;
            r
        }
        Err(mpsc::RecvTimeoutError::Disconnected) => {
            let mut r = blank().with_error("check panicked");
            r.wall_time_ms = start.elapsed().as_millis() as u64;
            r
        }
    }
}

/// `%.12g`-style formatting.
fn sig12(v: f64) -> String {
    if !v.is_finite() {
        return format!("{v}");
    }
    if v == 0.0 {
        return "0".to_owned();
    }
    let exponent = v.abs().log10().floor() as i32;
    if (-5..12).contains(&exponent) {
        let decimals = (11 - exponent).max(0) as usize;
        let s = format!("{v:.decimals$}");
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_owned()
        } else {
            s
        }
    } else {
        format!("{v:.11e}")
    }
}

const TABLE_HEADER: [&str; 6] = ["id", "lhs", "rhs", "|diff|", "status", "anchor"];

/// Fixed-width table, one row per record.
pub fn render_table(report: &Report) -> String {
    let mut out = String::new();
    let row = |out: &mut String, cells: [&str; 6]| {
        let _ = writeln!(
            out,
            "{:<16} {:>20} {:>20} {:>10} {:<12} {}",
            cells[0], cells[1], cells[2], cells[3], cells[4], cells[5]
        );
    };
    row(&mut out, TABLE_HEADER);
    for r in &report.records {
        row(
            &mut out,
            [
                &r.id,
                &sig12(r.lhs),
                &sig12(r.rhs),
                &format!("{:.2e}", r.abs_diff),
                r.status.as_str(),
                &r.paper_anchor,
            ],
        );
    }
    out
}

pub fn render_json(report: &Report) -> String {
    serde_json::to_string_pretty(report).expect("report serializes")
}

pub fn parse(text: &str) -> serde_json::Result<Report> {
    serde_json::from_str(text)
}
