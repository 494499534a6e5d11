//! Suite registry, exhaustive sweeps and deterministic reporting.

use std::fmt;
use std::io::Write;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::chromatic::{
    an_coefficients, an_expansion, csf_bruteforce, gp_expansion_with, graph_from_dyck_path,
    graph_from_shape, verify_rect_recursion_with, verify_symmetry, CsfMemo,
};
use crate::error::{Error, Result};
use crate::hits::{
    verify_board_lemmas, verify_del_contract, verify_gr_relation, verify_hit_identities,
    verify_keyrels, verify_mahonian, verify_rect_closed_forms, verify_stat_route,
};
use crate::report::{arm_fault_injection, disarm_fault_injection, VerifyReport};
use crate::rooks::{verify_f_ratio, verify_f_routes, verify_rook_identities};
use crate::shapes::{enumerate_shapes, BoardShape};

/// Largest board width accepted by placement-based suites.
pub const PLACEMENT_CEILING: usize = 6;
/// Largest vertex count (and colour count) accepted by colouring-based suites.
pub const COLORING_CEILING: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Mahonian,
    Stat,
    RookIds,
    FRoutes,
    FRatio,
    HitIds,
    DelCon,
    Boards,
    Rect,
    KeyRel,
    Gr,
    Graphs,
    Symmetry,
    Recursion,
    Gp,
    An,
    RectCsf,
}

impl Suite {
    pub const ALL: [Suite; 17] = [
        Suite::Mahonian,
        Suite::Stat,
        Suite::RookIds,
        Suite::FRoutes,
        Suite::FRatio,
        Suite::HitIds,
        Suite::DelCon,
        Suite::Boards,
        Suite::Rect,
        Suite::KeyRel,
        Suite::Gr,
        Suite::Graphs,
        Suite::Symmetry,
        Suite::Recursion,
        Suite::Gp,
        Suite::An,
        Suite::RectCsf,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Suite::Mahonian => "mahonian",
            Suite::Stat => "stat",
            Suite::RookIds => "rook-ids",
            Suite::FRoutes => "froutes",
            Suite::FRatio => "fratio",
            Suite::HitIds => "hit-ids",
            Suite::DelCon => "delcon",
            Suite::Boards => "boards",
            Suite::Rect => "rect",
            Suite::KeyRel => "keyrel",
            Suite::Gr => "gr",
            Suite::Graphs => "graphs",
            Suite::Symmetry => "symmetry",
            Suite::Recursion => "recursion",
            Suite::Gp => "gp",
            Suite::An => "an",
            Suite::RectCsf => "rect-csf",
        }
    }

    /// Colouring suites enumerate proper colourings and are bounded by vertex
    /// count; the rest enumerate rook placements and are bounded by width.
    pub fn is_coloring(self) -> bool {
        matches!(
            self,
            Suite::Graphs
                | Suite::Symmetry
                | Suite::Recursion
                | Suite::Gp
                | Suite::An
                | Suite::RectCsf
        )
    }

    fn admits(self, s: &BoardShape) -> bool {
        match self {
            Suite::FRatio => !s.is_empty(),
            Suite::Gr => s.rows() == s.cols(),
            Suite::An => s.length() <= s.first_part(),
            Suite::RectCsf => s.rows() + s.cols() > 0 && s.parts().iter().all(|&p| p == s.cols()),
            _ => true,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.id() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

/// Parses a suite id, expanding `all` to every suite.
pub fn parse_suites(id: &str) -> Result<Vec<Suite>> {
    if id == "all" {
        return Ok(Suite::ALL.to_vec());
    }
    Ok(vec![id.parse()?])
}

/// Sweep bounds. Shapes range over `λ ⊂ n x m` with `n <= m <= max_m`,
/// `n <= max_n` and `|λ| <= max_cells`; colouring suites also need
/// `m + n <= max_vertices`. `board` pins a single board instead.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_m: usize,
    pub max_n: Option<usize>,
    pub max_cells: Option<usize>,
    pub max_vertices: usize,
    /// Colour count for colouring suites; `None` uses `m + n` per shape.
    pub colors: Option<usize>,
    pub board: Option<(usize, usize)>,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_m: 5,
            max_n: None,
            max_cells: None,
            max_vertices: 6,
            colors: None,
            board: None,
        }
    }
}

impl Bounds {
    fn describe(&self, suite: Suite) -> String {
        let opt = |v: Option<usize>| v.map_or("any".to_string(), |x| x.to_string());
        let mut out = match self.board {
            Some((n, m)) => format!("board={n}x{m}"),
            None => format!("max_m={} max_n={}", self.max_m, opt(self.max_n)),
        };
        out.push_str(&format!(" max_cells={}", opt(self.max_cells)));
        if suite.is_coloring() {
            out.push_str(&format!(
                " max_vertices={} colors={}",
                self.max_vertices,
                self.colors.map_or("m+n".to_string(), |c| c.to_string())
            ));
        }
        out
    }

    fn boards(&self, suite: Suite) -> Vec<(usize, usize)> {
        let candidates: Vec<(usize, usize)> = match self.board {
            Some(b) => vec![b],
            None => (0..=self.max_m)
                .flat_map(|m| (0..=m.min(self.max_n.unwrap_or(m))).map(move |n| (n, m)))
                .collect(),
        };
        candidates
            .into_iter()
            .filter(|&(n, m)| {
                !suite.is_coloring() || self.board.is_some() || m + n <= self.max_vertices
            })
            .collect()
    }

    fn check_ceilings(&self, suite: Suite) -> Result<()> {
        let widest = self.board.map_or(self.max_m, |(_, m)| m);
        if let Some((n, m)) = self.board {
            if n > m {
                return Err(Error::InvalidArgument(format!(
                    "sweeps need rows <= cols, got {n}x{m}"
                )));
            }
        }
        if suite.is_coloring() {
            let vertices = self.board.map_or(self.max_vertices, |(n, m)| n + m);
            if vertices > COLORING_CEILING || self.colors.is_some_and(|c| c > COLORING_CEILING) {
                return Err(Error::BoundExceeded(format!(
                    "suite {suite} is limited to m+n <= {COLORING_CEILING} and at most {COLORING_CEILING} colours"
                )));
            }
        } else if widest > PLACEMENT_CEILING {
            return Err(Error::BoundExceeded(format!(
                "suite {suite} is limited to m <= {PLACEMENT_CEILING}"
            )));
        }
        Ok(())
    }

    /// Every shape of the sweep for `suite`, in enumeration order.
    pub fn shapes(&self, suite: Suite) -> Vec<BoardShape> {
        self.boards(suite)
            .into_iter()
            .flat_map(|(n, m)| enumerate_shapes(m, n, self.max_cells))
            .filter(|s| suite.admits(s))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOptions {
    pub jobs: usize,
    pub unsafe_bounds: bool,
    /// Corrupts the first comparison of the first case, to exercise the
    /// failure path.
    pub inject_fault: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            jobs: 1,
            unsafe_bounds: false,
            inject_fault: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseFailure {
    pub shape: String,
    pub board: String,
    pub identity: String,
    pub context: String,
    pub left: String,
    pub right: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub params: String,
    pub cases: usize,
    pub checks: usize,
    pub failures: Vec<CaseFailure>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn run_case(suite: Suite, s: &BoardShape, colors: Option<usize>) -> VerifyReport {
    let mut report = VerifyReport::new();
    let id = suite.id();
    let absorb = |r: Result<VerifyReport>, report: &mut VerifyReport| match r {
        Ok(r) => report.merge(r),
        Err(e) => report.record_error(id, "", e),
    };
    let colors = colors.unwrap_or(s.rows() + s.cols());
    match suite {
        Suite::Mahonian => absorb(verify_mahonian(s), &mut report),
        Suite::Stat => absorb(verify_stat_route(s), &mut report),
        Suite::RookIds => {
            for k in 0..=s.rows() {
                absorb(verify_rook_identities(s, k), &mut report);
            }
        }
        Suite::FRoutes => report.merge(verify_f_routes(s)),
        Suite::FRatio => absorb(verify_f_ratio(s), &mut report),
        Suite::HitIds => {
            for k in 0..=s.rows() {
                absorb(verify_hit_identities(s, k), &mut report);
            }
        }
        Suite::DelCon => {
            for e in s.corners() {
                absorb(verify_del_contract(s, e), &mut report);
            }
        }
        Suite::Boards => absorb(verify_board_lemmas(s), &mut report),
        Suite::Rect => absorb(verify_rect_closed_forms(s), &mut report),
        Suite::KeyRel => absorb(verify_keyrels(s), &mut report),
        Suite::Gr => absorb(verify_gr_relation(s), &mut report),
        Suite::Graphs => {
            let by_complement = graph_from_shape(s);
            let by_path = graph_from_dyck_path(s);
            let detail = format!("{:?} vs {:?}", by_complement.edges(), by_path.edges());
            report.check(
                "complement-matches-path",
                "",
                by_complement == by_path,
                detail,
            );
        }
        Suite::Symmetry => report.merge(verify_symmetry(s, colors)),
        Suite::Recursion => {
            let brute = csf_bruteforce(&graph_from_shape(s), colors);
            let recursive = CsfMemo::new().csf(s, colors);
            report.check_eq(
                "recursion-matches-colourings",
                format!("M={colors}"),
                &recursive,
                &brute,
            );
        }
        Suite::Gp => {
            let brute = csf_bruteforce(&graph_from_shape(s), colors);
            match gp_expansion_with(&mut CsfMemo::new(), s, colors) {
                Ok(gp) => {
                    report.check_eq("hit-expansion", format!("M={colors}"), &gp, &brute);
                }
                Err(e) => report.record_error("hit-expansion", format!("M={colors}"), e),
            }
        }
        Suite::An => {
            let brute = csf_bruteforce(&graph_from_shape(s), colors);
            match an_expansion(s, colors) {
                Ok(an) => {
                    report.check_eq("elementary-expansion", format!("M={colors}"), &an, &brute);
                }
                Err(e) => report.record_error("elementary-expansion", format!("M={colors}"), e),
            }
            match an_coefficients(s) {
                Ok(terms) => {
                    for t in terms {
                        let ctx = format!("e({},{})", t.a, t.b);
                        report.check(
                            "elementary-coefficients-in-Nq",
                            ctx,
                            t.coeff.is_in_nq(),
                            &t.coeff,
                        );
                    }
                }
                Err(e) => report.record_error("elementary-coefficients-in-Nq", "", e),
            }
        }
        Suite::RectCsf => {
            let colors = colors.max(1);
            let r = verify_rect_recursion_with(
                &mut CsfMemo::new(),
                s.cols(),
                s.rows(),
                s.length(),
                colors,
            );
            absorb(r, &mut report);
        }
    }
    report
}

/// Runs one suite over its sweep with `opts.jobs` worker threads. Results
/// are merged in enumeration order, so the report does not depend on the
/// worker count.
pub fn run_suite(suite: Suite, bounds: &Bounds, opts: &RunOptions) -> Result<SuiteReport> {
    if !opts.unsafe_bounds {
        bounds.check_ceilings(suite)?;
    }
    if opts.jobs == 0 {
        return Err(Error::InvalidArgument("jobs must be at least 1".into()));
    }
    let start = Instant::now();
    let shapes = bounds.shapes(suite);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
    let results: Vec<VerifyReport> = pool.install(|| {
        shapes
            .par_iter()
            .enumerate()
            .map(|(i, s)| {
                if opts.inject_fault && i == 0 {
                    arm_fault_injection();
                }
                let r = run_case(suite, s, bounds.colors);
                disarm_fault_injection();
                r
            })
            .collect()
    });
    let mut report = SuiteReport {
        suite: suite.id().to_string(),
        params: bounds.describe(suite),
        cases: shapes.len(),
        checks: 0,
        failures: Vec::new(),
        wall_time: Duration::ZERO,
    };
    for (s, r) in shapes.iter().zip(results) {
        report.checks += r.checks;
        report
            .failures
            .extend(r.failures.into_iter().map(|f| CaseFailure {
                shape: s.parts_label(),
                board: s.board_label(),
                identity: f.identity,
                context: f.context,
                left: f.left,
                right: f.right,
            }));
    }
    report.wall_time = start.elapsed();
    Ok(report)
}

/// Runs a suite id (`all` runs every suite in registry order). Only the
/// first suite sees an injected fault.
pub fn run_suites(id: &str, bounds: &Bounds, opts: &RunOptions) -> Result<Vec<SuiteReport>> {
    let suites = parse_suites(id)?;
    if !opts.unsafe_bounds {
        for &s in &suites {
            bounds.check_ceilings(s)?;
        }
    }
    let mut out = Vec::with_capacity(suites.len());
    for (i, s) in suites.into_iter().enumerate() {
        let opts = RunOptions {
            inject_fault: opts.inject_fault && i == 0,
            ..opts.clone()
        };
        out.push(run_suite(s, bounds, &opts)?);
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Tsv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "tsv" => Ok(Format::Tsv),
            other => Err(Error::InvalidArgument(format!("unknown format `{other}`"))),
        }
    }
}

#[derive(Serialize)]
struct RunJson<'a> {
    passed: bool,
    suites: &'a [SuiteReport],
}

fn tsv_field(s: &str) -> String {
    s.replace(['\t', '\n'], " ")
}

/// Serializes reports. Wall time is left out so that output is bit-stable.
///
/// TSV has one `SUITE` line per suite followed by one `FAIL` line per
/// failure: `FAIL suite shape board identity context left right`.
pub fn emit(reports: &[SuiteReport], format: Format, out: &mut dyn Write) -> std::io::Result<()> {
    match format {
        Format::Json => {
            let passed = reports.iter().all(SuiteReport::passed);
            serde_json::to_writer_pretty(
                &mut *out,
                &RunJson {
                    passed,
                    suites: reports,
                },
            )?;
            writeln!(out)
        }
        Format::Tsv => {
            for r in reports {
                let status = if r.passed() { "PASS" } else { "FAIL" };
                writeln!(
                    out,
                    "SUITE\t{}\t{}\tcases={}\tchecks={}\tfailures={}\t{status}",
                    r.suite,
                    r.params,
                    r.cases,
                    r.checks,
                    r.failures.len()
                )?;
                for f in &r.failures {
                    writeln!(
                        out,
                        "FAIL\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                        r.suite,
                        f.shape,
                        f.board,
                        f.identity,
                        tsv_field(&f.context),
                        tsv_field(&f.left),
                        tsv_field(&f.right)
                    )?;
                }
            }
            Ok(())
        }
    }
}

/// Exit status for a finished run: 0 when every identity held, 1 otherwise.
pub fn exit_code(reports: &[SuiteReport]) -> i32 {
    if reports.iter().all(SuiteReport::passed) {
        0
    } else {
        1
    }
}
