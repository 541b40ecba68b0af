//! Verification campaigns over many graphs.
//!
//! A sweep runs every bound check on each graph, in parallel, and folds the
//! results in input order so reports are identical for identical inputs.

mod search;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::bounds::{
    BoundChecker, BoundError, CheckSet, CheckStatus, Dominance, EqualityClass, Side, TheoremId,
    Tolerance,
};
use crate::graph::{
    encode_graph6, enumerate_connected, random_connected_with, Graph, GraphError, GRAPH6_MAX_ORDER,
    MAX_ENUMERATION_ORDER,
};

pub use search::{extremal_search, SearchOutcome, Witness};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SweepError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Bound(#[from] BoundError),
    #[error("{0}")]
    Argument(String),
    #[error("search degenerate: no edge flip keeps the graph connected")]
    Degenerate,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SweepMode {
    Exhaustive {
        n_max: usize,
    },
    Random {
        n: usize,
        p: f64,
        count: usize,
        seed: u64,
    },
}

/// A bound that failed by more than the tolerance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub graph6: String,
    pub theorem: TheoremId,
    pub side: Side,
    pub slack: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DominanceException {
    pub graph6: String,
    pub dominance: Dominance,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MismatchKind {
    /// Tight although the graph is outside the expected equality class.
    TightOutsideClass,
    /// In the expected equality class but not tight.
    ClassMemberNotTight,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EqualityMismatch {
    pub graph6: String,
    pub theorem: TheoremId,
    pub side: Side,
    pub kind: MismatchKind,
}

/// Tightness counts for one theorem over a sweep.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CensusEntry {
    pub theorem: TheoremId,
    pub equality_class: EqualityClass,
    /// Graphs in the equality class.
    pub class_members: usize,
    /// Class members tight on every side the bound has.
    pub class_members_tight: usize,
    pub tight_lower: usize,
    pub tight_upper: usize,
    /// Graphs tight on every side the bound has.
    pub tight_all_sides: usize,
    pub tight_lower_outside_class: usize,
    pub tight_upper_outside_class: usize,
    pub tight_all_sides_outside_class: usize,
    /// Every tight graph (on any side) lies in the equality class.
    pub all_tight_in_class: bool,
    pub overflow_skipped: usize,
}

impl CensusEntry {
    fn new(theorem: TheoremId) -> CensusEntry {
        CensusEntry {
            theorem,
            equality_class: theorem.expected_equality(),
            class_members: 0,
            class_members_tight: 0,
            tight_lower: 0,
            tight_upper: 0,
            tight_all_sides: 0,
            tight_lower_outside_class: 0,
            tight_upper_outside_class: 0,
            tight_all_sides_outside_class: 0,
            all_tight_in_class: true,
            overflow_skipped: 0,
        }
    }

    /// Every class member tight on all sides and no outsider tight anywhere.
    pub fn characterization_holds(&self) -> bool {
        self.class_members_tight == self.class_members && self.all_tight_in_class
    }
}

/// Non-tight graph with the smallest slack seen for one theorem side.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExtremalEntry {
    pub theorem: TheoremId,
    pub side: Side,
    pub graph6: String,
    pub slack: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepReport {
    pub mode: SweepMode,
    pub n_range: (usize, usize),
    pub graph_count: usize,
    pub alpha_grid: Vec<f64>,
    pub tolerance: f64,
    pub regular_graphs: usize,
    pub edge_product_constant_graphs: usize,
    pub violations: Vec<Violation>,
    pub dominance_exceptions: Vec<DominanceException>,
    pub equality_mismatches: Vec<EqualityMismatch>,
    pub tightness_census: Vec<CensusEntry>,
    pub extremal: Vec<ExtremalEntry>,
}

impl SweepReport {
    /// No bound failed and no improvement claim failed.
    pub fn is_sound(&self) -> bool {
        self.violations.is_empty() && self.dominance_exceptions.is_empty()
    }

    pub fn census(&self, theorem: TheoremId) -> Option<&CensusEntry> {
        self.tightness_census.iter().find(|c| c.theorem == theorem)
    }

    /// Equality mismatches that contradict a proven characterization.
    ///
    /// Only meaningful for exhaustive sweeps. t-mzz is excluded: its
    /// equality clause is stated as a one-way implication, so its converse is
    /// reported but not enforced.
    pub fn hard_mismatches(&self) -> Vec<&EqualityMismatch> {
        self.equality_mismatches
            .iter()
            .filter(|m| !matches!(m.theorem, TheoremId::TMzz(_)))
            .collect()
    }
}

/// One row per (graph, theorem, side) for flat exports.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckRow {
    pub graph6: String,
    pub theorem: &'static str,
    pub alpha: Option<f64>,
    pub side: Side,
    pub bound: Option<f64>,
    pub value: f64,
    pub slack: Option<f64>,
    pub tight: bool,
    pub in_class: bool,
    pub status: CheckStatus,
}

struct GraphResult {
    graph6: String,
    is_regular: bool,
    edge_product_constant: bool,
    set: CheckSet,
}

fn check_graph(g: &Graph, alphas: &[f64], tol: Tolerance) -> Result<GraphResult, SweepError> {
    let checker = BoundChecker::new(g, tol)?;
    let set = checker.all(alphas)?;
    Ok(GraphResult {
        graph6: encode_graph6(g)?,
        is_regular: checker.stats().is_regular,
        edge_product_constant: checker.stats().edge_product_constant,
        set,
    })
}

fn validate_alphas(alphas: &[f64]) -> Result<(), SweepError> {
    for &a in alphas {
        crate::indices::check_alpha(a).map_err(BoundError::from)?;
    }
    Ok(())
}

/// Runs every check on `graphs` and folds the results.
///
/// Returns the report and, when `collect_rows` is set, one [`CheckRow`] per
/// (graph, theorem, side).
pub fn run_sweep(
    mode: SweepMode,
    graphs: &[Graph],
    alphas: &[f64],
    tol: Tolerance,
    collect_rows: bool,
) -> Result<(SweepReport, Vec<CheckRow>), SweepError> {
    validate_alphas(alphas)?;
    let results = graphs
        .par_iter()
        .map(|g| check_graph(g, alphas, tol))
        .collect::<Result<Vec<_>, _>>()?;

    let theorems = BoundChecker::theorems_for(alphas);
    let mut census: Vec<CensusEntry> = theorems.iter().copied().map(CensusEntry::new).collect();
    let mut extremal: Vec<Option<ExtremalEntry>> = vec![None; theorems.len() * 2];
    let mut violations = Vec::new();
    let mut dominance_exceptions = Vec::new();
    let mut equality_mismatches = Vec::new();
    let mut rows = Vec::new();
    let (mut regular_graphs, mut epc_graphs) = (0, 0);
    let (mut n_lo, mut n_hi) = (usize::MAX, 0);

    for (g, r) in graphs.iter().zip(&results) {
        n_lo = n_lo.min(g.n());
        n_hi = n_hi.max(g.n());
        regular_graphs += usize::from(r.is_regular);
        epc_graphs += usize::from(r.edge_product_constant);

        for d in r.set.dominance.iter().filter(|d| !d.holds) {
            dominance_exceptions.push(DominanceException {
                graph6: r.graph6.clone(),
                dominance: d.clone(),
            });
        }

        for (i, check) in r.set.checks.iter().enumerate() {
            debug_assert_eq!(check.theorem, census[i].theorem);
            let entry = &mut census[i];
            if check.status == CheckStatus::OverflowSkipped {
                entry.overflow_skipped += 1;
                continue;
            }
            if check.in_class {
                entry.class_members += 1;
                entry.class_members_tight += usize::from(check.tight_all_sides());
            }
            if check.tight_all_sides() {
                entry.tight_all_sides += 1;
                entry.tight_all_sides_outside_class += usize::from(!check.in_class);
            }
            for (k, side) in Side::BOTH.into_iter().enumerate() {
                let Some(slack) = check.slack(side) else {
                    continue;
                };
                let tight = check.tight(side);
                if tight {
                    match side {
                        Side::Lower => entry.tight_lower += 1,
                        Side::Upper => entry.tight_upper += 1,
                    }
                    if !check.in_class {
                        match side {
                            Side::Lower => entry.tight_lower_outside_class += 1,
                            Side::Upper => entry.tight_upper_outside_class += 1,
                        }
                        entry.all_tight_in_class = false;
                    }
                }
                if slack < -tol.threshold(check.value) {
                    violations.push(Violation {
                        graph6: r.graph6.clone(),
                        theorem: check.theorem,
                        side,
                        slack,
                    });
                }
                if tight != check.in_class {
                    equality_mismatches.push(EqualityMismatch {
                        graph6: r.graph6.clone(),
                        theorem: check.theorem,
                        side,
                        kind: if tight {
                            MismatchKind::TightOutsideClass
                        } else {
                            MismatchKind::ClassMemberNotTight
                        },
                    });
                }
                if !tight && slack > 0.0 {
                    let slot = &mut extremal[2 * i + k];
                    let better = match slot {
                        None => true,
                        Some(e) => slack < e.slack || (slack == e.slack && r.graph6 < e.graph6),
                    };
                    if better {
                        *slot = Some(ExtremalEntry {
                            theorem: check.theorem,
                            side,
                            graph6: r.graph6.clone(),
                            slack,
                        });
                    }
                }
                if collect_rows {
                    rows.push(CheckRow {
                        graph6: r.graph6.clone(),
                        theorem: check.theorem.name(),
                        alpha: check.theorem.alpha(),
                        side,
                        bound: check.bound(side),
                        value: check.value,
                        slack: Some(slack),
                        tight,
                        in_class: check.in_class,
                        status: check.status,
                    });
                }
            }
        }
    }

    violations.sort_by(|a, b| a.graph6.cmp(&b.graph6));
    dominance_exceptions.sort_by(|a, b| a.graph6.cmp(&b.graph6));

    let report = SweepReport {
        mode,
        n_range: if graphs.is_empty() {
            (0, 0)
        } else {
            (n_lo, n_hi)
        },
        graph_count: graphs.len(),
        alpha_grid: alphas.to_vec(),
        tolerance: tol.value(),
        regular_graphs,
        edge_product_constant_graphs: epc_graphs,
        violations,
        dominance_exceptions,
        equality_mismatches,
        tightness_census: census,
        extremal: extremal.into_iter().flatten().collect(),
    };
    Ok((report, rows))
}

/// Every connected class on 2..=n_max vertices, n_max <= 7.
pub fn exhaustive_graphs(n_max: usize) -> Result<Vec<Graph>, SweepError> {
    if !(2..=MAX_ENUMERATION_ORDER).contains(&n_max) {
        return Err(SweepError::Argument(format!(
            "exhaustive sweeps need 2 <= n_max <= {MAX_ENUMERATION_ORDER}, got {n_max}"
        )));
    }
    let mut graphs = Vec::new();
    for n in 2..=n_max {
        graphs.extend(enumerate_connected(n)?);
    }
    Ok(graphs)
}

pub fn exhaustive_sweep(
    n_max: usize,
    alphas: &[f64],
    tol: Tolerance,
) -> Result<SweepReport, SweepError> {
    exhaustive_sweep_with_rows(n_max, alphas, tol, false).map(|(r, _)| r)
}

pub fn exhaustive_sweep_with_rows(
    n_max: usize,
    alphas: &[f64],
    tol: Tolerance,
    collect_rows: bool,
) -> Result<(SweepReport, Vec<CheckRow>), SweepError> {
    let graphs = exhaustive_graphs(n_max)?;
    run_sweep(
        SweepMode::Exhaustive { n_max },
        &graphs,
        alphas,
        tol,
        collect_rows,
    )
}

/// `count` connected `G(n, p)` samples drawn from one generator seeded with
/// `seed`.
pub fn random_graphs(n: usize, p: f64, count: usize, seed: u64) -> Result<Vec<Graph>, SweepError> {
    if !(2..=GRAPH6_MAX_ORDER).contains(&n) {
        return Err(SweepError::Argument(format!(
            "random sweeps need 2 <= n <= {GRAPH6_MAX_ORDER}, got {n}"
        )));
    }
    if count == 0 {
        return Err(SweepError::Argument("count must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_connected_with(&mut rng, n, p).map_err(SweepError::from))
        .collect()
}

pub fn random_sweep(
    n: usize,
    p: f64,
    count: usize,
    seed: u64,
    alphas: &[f64],
    tol: Tolerance,
) -> Result<SweepReport, SweepError> {
    random_sweep_with_rows(n, p, count, seed, alphas, tol, false).map(|(r, _)| r)
}

pub fn random_sweep_with_rows(
    n: usize,
    p: f64,
    count: usize,
    seed: u64,
    alphas: &[f64],
    tol: Tolerance,
    collect_rows: bool,
) -> Result<(SweepReport, Vec<CheckRow>), SweepError> {
    let graphs = random_graphs(n, p, count, seed)?;
    let mode = SweepMode::Random { n, p, count, seed };
    run_sweep(mode, &graphs, alphas, tol, collect_rows)
}
