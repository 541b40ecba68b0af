//! JSON and CSV emitters. JSON writes one object per line; CSV is a flat
//! projection of the same data.

use std::io::Write;

use serde::Serialize;

use ga_core::bounds::{CheckSet, CheckStatus, Side};
use ga_core::graph::{encode_graph6, Graph, GRAPH6_MAX_ORDER};
use ga_core::indices::AlphaValue;
use ga_core::sweep::{CheckRow, SearchOutcome};
use ga_core::{IndexPanel, SweepReport};

use crate::{Failure, OutputFormat};

fn graph6_of(g: &Graph) -> Option<String> {
    (g.n() <= GRAPH6_MAX_ORDER)
        .then(|| encode_graph6(g).ok())
        .flatten()
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

#[derive(Debug, Serialize)]
pub struct ComputeRecord {
    pub index: usize,
    pub graph6: Option<String>,
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    #[serde(rename = "Delta")]
    pub max_delta: usize,
    pub is_regular: bool,
    pub ga1: f64,
    pub m1: f64,
    pub m2: f64,
    pub randic: f64,
    pub r_alpha: Vec<AlphaValue>,
    pub log_nk_star: f64,
}

impl ComputeRecord {
    pub fn new(index: usize, g: &Graph, panel: IndexPanel) -> ComputeRecord {
        let stats = g.degree_stats();
        ComputeRecord {
            index,
            graph6: graph6_of(g),
            n: g.n(),
            m: g.m(),
            delta: stats.min_degree,
            max_delta: stats.max_degree,
            is_regular: stats.is_regular,
            ga1: panel.ga1,
            m1: panel.m1,
            m2: panel.m2,
            randic: panel.randic,
            r_alpha: panel.general_randic,
            log_nk_star: panel.log_nk_star,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CheckRecord {
    pub index: usize,
    pub graph6: Option<String>,
    pub n: usize,
    pub m: usize,
    #[serde(flatten)]
    pub set: CheckSet,
}

impl CheckRecord {
    pub fn new(index: usize, g: &Graph, set: CheckSet) -> CheckRecord {
        CheckRecord {
            index,
            graph6: graph6_of(g),
            n: g.n(),
            m: g.m(),
            set,
        }
    }
}

#[derive(Serialize)]
struct CheckCsvRow<'a> {
    index: usize,
    graph6: &'a str,
    theorem: &'static str,
    alpha: Option<f64>,
    side: Side,
    bound: Option<f64>,
    value: f64,
    slack: Option<f64>,
    holds: bool,
    tight: bool,
    in_class: bool,
    status: CheckStatus,
}

pub struct Emitter {
    out: Box<dyn Write>,
    format: OutputFormat,
}

impl Emitter {
    pub fn new(out: Box<dyn Write>, format: OutputFormat) -> Emitter {
        Emitter { out, format }
    }

    pub fn flush(&mut self) -> Result<(), Failure> {
        Ok(self.out.flush()?)
    }

    fn json_line<T: Serialize>(&mut self, value: &T) -> Result<(), Failure> {
        serde_json::to_writer(&mut self.out, value)?;
        Ok(writeln!(self.out)?)
    }

    pub fn compute(&mut self, records: &[ComputeRecord]) -> Result<(), Failure> {
        if self.format == OutputFormat::Json {
            return records.iter().try_for_each(|r| self.json_line(r));
        }
        let mut w = csv::Writer::from_writer(&mut self.out);
        let mut header: Vec<String> = [
            "index",
            "graph6",
            "n",
            "m",
            "delta",
            "Delta",
            "is_regular",
            "ga1",
            "m1",
            "m2",
            "randic",
        ]
        .map(String::from)
        .to_vec();
        if let Some(first) = records.first() {
            header.extend(
                first
                    .r_alpha
                    .iter()
                    .map(|a| format!("r_alpha[{}]", a.alpha)),
            );
        }
        header.push("log_nk_star".into());
        w.write_record(&header)?;
        for r in records {
            let mut row = vec![
                r.index.to_string(),
                opt(r.graph6.as_ref()),
                r.n.to_string(),
                r.m.to_string(),
                r.delta.to_string(),
                r.max_delta.to_string(),
                r.is_regular.to_string(),
                r.ga1.to_string(),
                r.m1.to_string(),
                r.m2.to_string(),
                r.randic.to_string(),
            ];
            row.extend(r.r_alpha.iter().map(|a| a.value.to_string()));
            row.push(r.log_nk_star.to_string());
            w.write_record(&row)?;
        }
        Ok(w.flush()?)
    }

    pub fn check(&mut self, records: &[CheckRecord]) -> Result<(), Failure> {
        if self.format == OutputFormat::Json {
            return records.iter().try_for_each(|r| self.json_line(r));
        }
        let mut w = csv::Writer::from_writer(&mut self.out);
        for r in records {
            for c in &r.set.checks {
                for side in Side::BOTH.into_iter().filter(|&s| c.theorem.has_side(s)) {
                    w.serialize(CheckCsvRow {
                        index: r.index,
                        graph6: r.graph6.as_deref().unwrap_or(""),
                        theorem: c.theorem.name(),
                        alpha: c.theorem.alpha(),
                        side,
                        bound: c.bound(side),
                        value: c.value,
                        slack: c.slack(side),
                        holds: c.holds,
                        tight: c.tight(side),
                        in_class: c.in_class,
                        status: c.status,
                    })?;
                }
            }
        }
        Ok(w.flush()?)
    }

    pub fn sweep(&mut self, report: &SweepReport, rows: &[CheckRow]) -> Result<(), Failure> {
        if self.format == OutputFormat::Json {
            return self.json_line(report);
        }
        let mut w = csv::Writer::from_writer(&mut self.out);
        for row in rows {
            w.serialize(row)?;
        }
        Ok(w.flush()?)
    }

    pub fn search(&mut self, outcome: &SearchOutcome) -> Result<(), Failure> {
        if self.format == OutputFormat::Json {
            return self.json_line(outcome);
        }
        let mut w = csv::Writer::from_writer(&mut self.out);
        w.write_record([
            "theorem",
            "alpha",
            "side",
            "n",
            "seed",
            "best_graph6",
            "best_slack",
            "best_tight",
            "best_in_class",
            "non_tight_graph6",
            "non_tight_slack",
            "evaluations",
            "restarts",
        ])?;
        let best = &outcome.best;
        let nt = outcome.best_non_tight.as_ref();
        w.write_record([
            outcome.theorem.name().to_string(),
            opt(outcome.theorem.alpha()),
            outcome.side.to_string(),
            outcome.n.to_string(),
            outcome.seed.to_string(),
            opt(graph6_of(&best.graph)),
            best.slack.to_string(),
            best.tight.to_string(),
            best.in_class.to_string(),
            opt(nt.and_then(|w| graph6_of(&w.graph))),
            opt(nt.map(|w| w.slack)),
            outcome.evaluations.to_string(),
            outcome.restarts.to_string(),
        ])?;
        Ok(w.flush()?)
    }
}
