//! Hill climbing over single-edge flips toward small bound slack.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use super::SweepError;
use crate::bounds::{BoundChecker, BoundError, CheckStatus, Side, TheoremId, Tolerance};
use crate::graph::{encode_graph6, random_connected_with, Graph, GRAPH6_MAX_ORDER};

/// Edge probability of the random start (and restart) graphs.
const START_DENSITY: f64 = 0.5;

fn as_graph6<S: Serializer>(g: &Graph, s: S) -> Result<S::Ok, S::Error> {
    let code = encode_graph6(g).map_err(serde::ser::Error::custom)?;
    s.serialize_str(&code)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    #[serde(rename = "graph6", serialize_with = "as_graph6")]
    pub graph: Graph,
    pub slack: f64,
    pub tight: bool,
    pub in_class: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchOutcome {
    pub theorem: TheoremId,
    pub side: Side,
    pub n: usize,
    pub seed: u64,
    /// Smallest slack found, tight graphs included.
    pub best: Witness,
    /// Smallest slack among graphs that are not tight.
    pub best_non_tight: Option<Witness>,
    pub evaluations: usize,
    pub restarts: usize,
}

struct Evaluation {
    slack: f64,
    tight: bool,
    in_class: bool,
}

fn evaluate(
    g: &Graph,
    theorem: TheoremId,
    side: Side,
    tol: Tolerance,
) -> Result<Option<Evaluation>, BoundError> {
    let check = BoundChecker::new(g, tol)?.check(theorem)?;
    if check.status == CheckStatus::OverflowSkipped {
        return Ok(None);
    }
    Ok(check.slack(side).map(|slack| Evaluation {
        slack,
        tight: check.tight(side),
        in_class: check.in_class,
    }))
}

/// Random-restart hill climbing on `n`-vertex connected graphs.
///
/// Each step scans all vertex pairs in a random order and takes the first
/// flip that keeps the graph connected and strictly lowers the slack. A
/// local minimum triggers a restart from a fresh random graph; a tight graph
/// ends the search. `iterations` caps the number of graphs evaluated,
/// counting start graphs.
pub fn extremal_search(
    theorem: TheoremId,
    side: Side,
    n: usize,
    iterations: usize,
    seed: u64,
) -> Result<SearchOutcome, SweepError> {
    if !theorem.has_side(side) {
        return Err(BoundError::MissingSide {
            theorem: theorem.name(),
            side,
        }
        .into());
    }
    if !(3..=GRAPH6_MAX_ORDER).contains(&n) {
        return Err(SweepError::Argument(format!(
            "search needs 3 <= n <= {GRAPH6_MAX_ORDER}, got {n}"
        )));
    }
    if iterations == 0 {
        return Err(SweepError::Argument("iterations must be at least 1".into()));
    }
    let tol = Tolerance::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();

    let mut best: Option<Witness> = None;
    let mut best_non_tight: Option<Witness> = None;
    let mut evaluations = 0;
    let mut restarts = 0;
    let mut any_valid_move = false;

    let record =
        |g: &Graph, e: &Evaluation, best: &mut Option<Witness>, bnt: &mut Option<Witness>| {
            let witness = || Witness {
                graph: g.clone(),
                slack: e.slack,
                tight: e.tight,
                in_class: e.in_class,
            };
            if best.as_ref().is_none_or(|b| e.slack < b.slack) {
                *best = Some(witness());
            }
            if !e.tight && e.slack > 0.0 && bnt.as_ref().is_none_or(|b| e.slack < b.slack) {
                *bnt = Some(witness());
            }
        };

    'restart: while evaluations < iterations {
        let mut current = random_connected_with(&mut rng, n, START_DENSITY)?;
        evaluations += 1;
        let Some(mut cur_eval) = evaluate(&current, theorem, side, tol)? else {
            restarts += 1;
            continue;
        };
        record(&current, &cur_eval, &mut best, &mut best_non_tight);

        loop {
            if cur_eval.tight {
                break 'restart;
            }
            pairs.shuffle(&mut rng);
            let mut moved = false;
            for &(u, v) in &pairs {
                if evaluations >= iterations {
                    break 'restart;
                }
                let candidate = current.with_toggled(u, v)?;
                if !candidate.is_connected() {
                    continue;
                }
                any_valid_move = true;
                evaluations += 1;
                let Some(e) = evaluate(&candidate, theorem, side, tol)? else {
                    continue;
                };
                record(&candidate, &e, &mut best, &mut best_non_tight);
                if e.slack < cur_eval.slack {
                    current = candidate;
                    cur_eval = e;
                    moved = true;
                    break;
                }
            }
            if !moved {
                if !any_valid_move {
                    return Err(SweepError::Degenerate);
                }
                restarts += 1;
                continue 'restart;
            }
        }
    }

    let best = best.ok_or(SweepError::Degenerate)?;
    Ok(SearchOutcome {
        theorem,
        side,
        n,
        seed,
        best,
        best_non_tight,
        evaluations,
        restarts,
    })
}
