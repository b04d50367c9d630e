//! Runs verification suites over single groups or the corpus and collects
//! reports in a fixed order.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde_json::json;
use thiserror::Error;

use crate::arith::{ArithError, ArithmeticFunction, StandardArith};
use crate::corpus::{corpus_up_to, known_solvable};
use crate::group::{
    build_group, enumerate_subgroups, GroupError, GroupSpec, GroupTable, SubgroupLattice,
    DEFAULT_MAX_ORDER, DEFAULT_SUBGROUP_BUDGET,
};
use crate::theorems::{
    arith_suite, bouc_suite, brown_suite, build_lattice_algebra, burnside_suite, frobenius_suite,
    generator_suite, hio_suite, identity_suite, muthm_suite, prop21_suite, prop63_suite,
    ring_property_reports, sylow_suite, CongruenceReport, LatticeAlgebra, TheoremError,
    DEFAULT_COSET_BUDGET,
};

pub const DEFAULT_BURNSIDE_BOUND: usize = 12;
pub const DEFAULT_SEED: u64 = 0xA11CE;
/// Random functions per ring property in a per-group arithmetic run.
pub const DEFAULT_ARITH_SAMPLES: usize = 25;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Prop21,
    Burnside,
    Arith,
    Hio,
    Muthm,
    Sylow,
    Frobenius,
    Brown,
    Prop63,
    Bouc,
    Generators,
    Identities,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::Prop21,
        Suite::Burnside,
        Suite::Arith,
        Suite::Hio,
        Suite::Muthm,
        Suite::Sylow,
        Suite::Frobenius,
        Suite::Brown,
        Suite::Prop63,
        Suite::Bouc,
        Suite::Generators,
        Suite::Identities,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Prop21 => "prop21",
            Suite::Burnside => "burnside",
            Suite::Arith => "arith",
            Suite::Hio => "hio",
            Suite::Muthm => "muthm",
            Suite::Sylow => "sylow",
            Suite::Frobenius => "frobenius",
            Suite::Brown => "brown",
            Suite::Prop63 => "prop63",
            Suite::Bouc => "bouc",
            Suite::Generators => "generators",
            Suite::Identities => "identities",
        }
    }

    fn needs_algebra(self) -> bool {
        !matches!(self, Suite::Prop21 | Suite::Burnside | Suite::Arith)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = RunError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| RunError::UnknownSuite(s.to_string()))
    }
}

/// Parses a comma-separated suite list; `all` selects every suite. The result
/// is sorted and deduplicated.
pub fn parse_suites(list: &str) -> Result<Vec<Suite>, RunError> {
    let mut out = Vec::new();
    for part in list.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        if part == "all" {
            out.extend(Suite::ALL);
        } else {
            out.push(part.parse()?);
        }
    }
    if out.is_empty() {
        return Err(RunError::UnknownSuite(list.to_string()));
    }
    out.sort();
    out.dedup();
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

impl FromStr for Format {
    type Err = RunError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            _ => Err(RunError::UnknownFormat(s.to_string())),
        }
    }
}

#[derive(Debug, Error)]
pub enum RunError {
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("unknown format {0:?}")]
    UnknownFormat(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("failed to build worker pool: {0}")]
    Pool(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub suites: Vec<Suite>,
    pub max_order: usize,
    pub burnside_bound: usize,
    pub subgroup_budget: usize,
    pub coset_budget: usize,
    pub seed: u64,
    pub arith_samples: usize,
    /// Worker threads; `None` uses rayon's default.
    pub jobs: Option<usize>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            suites: Suite::ALL.to_vec(),
            max_order: DEFAULT_MAX_ORDER,
            burnside_bound: DEFAULT_BURNSIDE_BOUND,
            subgroup_budget: DEFAULT_SUBGROUP_BUDGET,
            coset_budget: DEFAULT_COSET_BUDGET,
            seed: DEFAULT_SEED,
            arith_samples: DEFAULT_ARITH_SAMPLES,
            jobs: None,
        }
    }
}

/// Reports from a run, in canonical order.
#[derive(Clone, Debug, PartialEq)]
pub struct RunOutcome {
    pub reports: Vec<CongruenceReport>,
    pub groups: usize,
}

impl RunOutcome {
    pub fn failures(&self) -> usize {
        self.reports.iter().filter(|r| !r.pass && !r.is_skipped()).count()
    }

    pub fn skipped(&self) -> usize {
        self.reports.iter().filter(|r| r.is_skipped()).count()
    }

    /// 0 when everything passed, 1 on any failure, 3 when the only problems
    /// are skipped (over-budget) checks.
    pub fn exit_code(&self) -> i32 {
        if self.failures() > 0 {
            1
        } else if self.skipped() > 0 {
            3
        } else {
            0
        }
    }

    pub fn summary(&self) -> String {
        format!(
            "groups: {} reports: {} failed: {} skipped: {}",
            self.groups,
            self.reports.len(),
            self.failures(),
            self.skipped()
        )
    }

    /// Every report on its own line, in the requested format.
    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        for r in &self.reports {
            match format {
                Format::Text => out.push_str(&r.to_string()),
                Format::Json => out.push_str(&r.to_json_line()),
            }
            out.push('\n');
        }
        out
    }
}

fn is_budget(e: &GroupError) -> bool {
    matches!(e, GroupError::BudgetExceeded { .. } | GroupError::OrderExceeded { .. })
}

fn run_suite(
    suite: Suite,
    g: &GroupTable,
    lattice: &SubgroupLattice,
    algebra: Option<&LatticeAlgebra>,
    solvable: bool,
    cfg: &RunConfig,
) -> Vec<CongruenceReport> {
    match suite {
        Suite::Prop21 => prop21_suite(g),
        Suite::Burnside => burnside_suite(g, lattice, cfg.burnside_bound),
        Suite::Arith => arith_suite(g, cfg.arith_samples, cfg.seed),
        _ => {
            let l = algebra.expect("algebra built for lattice suites");
            match suite {
                Suite::Hio => hio_suite(l),
                Suite::Muthm => muthm_suite(l),
                Suite::Sylow => sylow_suite(l),
                Suite::Frobenius => frobenius_suite(l),
                Suite::Brown => brown_suite(l, solvable),
                Suite::Prop63 => prop63_suite(l),
                Suite::Bouc => bouc_suite(l, cfg.coset_budget),
                Suite::Generators => generator_suite(l),
                Suite::Identities => identity_suite(l),
                Suite::Prop21 | Suite::Burnside | Suite::Arith => unreachable!(),
            }
        }
    }
}

fn skipped_all(label: &str, cfg: &RunConfig, reason: &str) -> Vec<CongruenceReport> {
    cfg.suites
        .iter()
        .map(|s| CongruenceReport::skipped(label, s.name(), reason))
        .collect()
}

/// All selected suites for one group. Over-budget groups yield skipped
/// records rather than an error.
pub fn verify_spec(spec: &GroupSpec, solvable: Option<bool>, cfg: &RunConfig) -> Vec<CongruenceReport> {
    let label = spec.to_string();
    let g = match build_group(spec, cfg.max_order) {
        Ok(g) => g,
        Err(e) => return skipped_all(&label, cfg, &e.to_string()),
    };
    let lattice = match enumerate_subgroups(&g, cfg.subgroup_budget) {
        Ok(l) => l,
        Err(e) => return skipped_all(&label, cfg, &e.to_string()),
    };
    let solvable = solvable.unwrap_or_else(|| known_solvable(spec, g.order()));
    let algebra = if cfg.suites.iter().any(|s| s.needs_algebra()) {
        match build_lattice_algebra(g.clone(), cfg.subgroup_budget) {
            Ok(l) => Some(l),
            Err(TheoremError::Group(e)) if is_budget(&e) => return skipped_all(&label, cfg, &e.to_string()),
            Err(e) => panic!("lattice algebra of a valid group: {e}"),
        }
    } else {
        None
    };
    cfg.suites
        .iter()
        .flat_map(|&s| run_suite(s, &g, &lattice, algebra.as_ref(), solvable, cfg))
        .collect()
}

/// Parses and verifies one group spec.
pub fn run_single(spec_text: &str, cfg: &RunConfig) -> Result<RunOutcome, RunError> {
    let spec = GroupSpec::parse(spec_text)?;
    Ok(RunOutcome {
        reports: verify_spec(&spec, None, cfg),
        groups: 1,
    })
}

/// Verifies every corpus group of order at most `cfg.max_order`, in parallel,
/// keeping manifest order in the output.
pub fn run_corpus(cfg: &RunConfig) -> Result<RunOutcome, RunError> {
    let entries = corpus_up_to(cfg.max_order);
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = cfg.jobs {
        builder = builder.num_threads(j);
    }
    let pool = builder.build().map_err(|e| RunError::Pool(e.to_string()))?;
    let per_group: Vec<Vec<CongruenceReport>> = pool.install(|| {
        entries
            .par_iter()
            .map(|e| verify_spec(&e.spec, Some(e.solvable), cfg))
            .collect()
    });
    Ok(RunOutcome {
        groups: entries.len(),
        reports: per_group.into_iter().flatten().collect(),
    })
}

/// Subgroup inventory of a group: per conjugacy class the subgroup order and
/// class size, then `mu(1, G)` and `phi^{-1}(1, G)`.
pub fn lattice_listing(l: &LatticeAlgebra) -> String {
    let lat = l.lattice();
    let mut out = format!(
        "group {} order {} subgroups {} classes {}\n",
        l.label(),
        l.order(),
        lat.len(),
        lat.conj_classes().len()
    );
    for (i, class) in lat.conj_classes().iter().enumerate() {
        let rep = lat.subgroup(class[0]);
        let cyclic = if lat.is_cyclic(l.group(), class[0]) { " cyclic" } else { "" };
        out.push_str(&format!(
            "class {i}: order {} members {} rep {:?}{cyclic}\n",
            rep.size(),
            class.len(),
            rep.members()
        ));
    }
    let (b, t) = (l.bottom(), l.top());
    out.push_str(&format!("mu(1,G) = {}\n", l.mu().get(b, t)));
    out.push_str(&format!("phi^-1(1,G) = {}\n", l.phi_inv().get(b, t)));
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithCheck {
    Coset,
    Ring,
    Special,
}

impl FromStr for ArithCheck {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "coset" => Ok(ArithCheck::Coset),
            "ring" => Ok(ArithCheck::Ring),
            "special" => Ok(ArithCheck::Special),
            _ => Err(format!("unknown check {s:?}")),
        }
    }
}

/// Arithmetic-function checks mod `n`. With a named function, `coset` and
/// `special` report its membership; without one they check the standard
/// members.
pub fn run_arith(
    n: u64,
    check: ArithCheck,
    function: Option<&str>,
    samples: usize,
    seed: u64,
) -> Result<RunOutcome, RunError> {
    if n == 0 {
        return Err(ArithError::InvalidModulus.into());
    }
    let label = format!("Ar{n}");
    let named: Vec<StandardArith> = match (check, function) {
        (_, Some(name)) => vec![name.parse()?],
        (ArithCheck::Coset, None) => {
            let mut v: Vec<_> = (1..=3).map(StandardArith::Sigma).collect();
            v.extend(
                (1..n.max(2))
                    .filter(|&u| num_integer::Integer::gcd(&u, &n) == 1)
                    .map(StandardArith::Power),
            );
            v
        }
        (ArithCheck::Special, None) => vec![StandardArith::Epsilon, StandardArith::Identity],
        (ArithCheck::Ring, None) => Vec::new(),
    };
    let mut reports = Vec::new();
    if check == ArithCheck::Ring {
        reports.extend(ring_property_reports(n, samples, seed, &label));
    }
    for kind in named {
        let f = ArithmeticFunction::standard(kind, n)?;
        let (theorem, anchor, holds) = match check {
            ArithCheck::Coset | ArithCheck::Ring => (
                "frobenius_coset_membership",
                "b is a unit and b*phi is special",
                f.in_frobenius_coset(),
            ),
            ArithCheck::Special => ("special_membership", "f(t) = 0 mod t for every t | n", f.is_special()),
        };
        reports.push(CongruenceReport::mismatches(
            &label,
            theorem,
            anchor,
            json!({ "n": n, "function": kind.to_string(), "values": f.values() }),
            usize::from(!holds),
        ));
    }
    if check == ArithCheck::Coset && function.is_none() {
        let phi = ArithmeticFunction::standard(StandardArith::EulerPhi, n)?;
        let inv = phi.invert()?;
        reports.push(CongruenceReport::mismatches(
            &label,
            "frobenius_coset_membership",
            "b is a unit and b*phi is special",
            json!({ "n": n, "function": "phi^-1", "values": inv.values() }),
            usize::from(!inv.in_frobenius_coset()),
        ));
    }
    Ok(RunOutcome { reports, groups: 0 })
}
