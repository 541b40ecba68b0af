//! Vertex-degree-based topological indices.
//!
//! | index | definition |
//! |-------|------------|
//! | GA₁   | Σ_{uv∈E} 2√(d_u d_v)/(d_u + d_v) |
//! | M₁    | Σ_{u∈V} d_u² = Σ_{uv∈E} (d_u + d_v) |
//! | M₂    | Σ_{uv∈E} d_u d_v |
//! | R     | Σ_{uv∈E} 1/√(d_u d_v) |
//! | R_α   | Σ_{uv∈E} (d_u d_v)^α, α ≠ 0 |
//! | NK*   | Π_{u∈V} d_u^{d_u} = Π_{uv∈E} d_u d_v, kept as its natural log |
//!
//! Isolated vertices are accepted and contribute nothing (0⁰ = 1 for NK*).

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum IndexError {
    #[error("graph has no edges")]
    EmptyEdgeSet,
    #[error("alpha must be a nonzero finite real, got {0}")]
    InvalidAlpha(f64),
    #[error("arguments must be positive, got ({0}, {1})")]
    NonPositiveArgument(f64, f64),
}

fn edge_degrees(g: &Graph) -> impl Iterator<Item = (f64, f64)> + '_ {
    g.edges()
        .iter()
        .map(|&(u, v)| (g.degree(u) as f64, g.degree(v) as f64))
}

pub(crate) fn check_alpha(alpha: f64) -> Result<(), IndexError> {
    if alpha == 0.0 || !alpha.is_finite() {
        return Err(IndexError::InvalidAlpha(alpha));
    }
    Ok(())
}

/// First geometric-arithmetic index. Each edge term lies in (0, 1].
pub fn ga1(g: &Graph) -> Result<f64, IndexError> {
    if g.m() == 0 {
        return Err(IndexError::EmptyEdgeSet);
    }
    Ok(edge_degrees(g)
        .map(|(a, b)| 2.0 * (a * b).sqrt() / (a + b))
        .sum())
}

/// First Zagreb index, vertex form.
pub fn m1(g: &Graph) -> f64 {
    let vertex: usize = (0..g.n()).map(|u| g.degree(u).pow(2)).sum();
    debug_assert_eq!(vertex, m1_edge_form(g) as usize);
    vertex as f64
}

/// First Zagreb index via Σ_{uv∈E}(d_u + d_v).
pub fn m1_edge_form(g: &Graph) -> f64 {
    g.edges()
        .iter()
        .map(|&(u, v)| g.degree(u) + g.degree(v))
        .sum::<usize>() as f64
}

/// Second Zagreb index.
pub fn m2(g: &Graph) -> f64 {
    g.edges()
        .iter()
        .map(|&(u, v)| g.degree(u) * g.degree(v))
        .sum::<usize>() as f64
}

pub fn general_randic(g: &Graph, alpha: f64) -> Result<f64, IndexError> {
    check_alpha(alpha)?;
    Ok(edge_degrees(g).map(|(a, b)| (a * b).powf(alpha)).sum())
}

/// Randić connectivity index, R_{-1/2}.
pub fn randic(g: &Graph) -> f64 {
    edge_degrees(g).map(|(a, b)| 1.0 / (a * b).sqrt()).sum()
}

/// ln NK*, edge-product form.
pub fn log_nk_star(g: &Graph) -> f64 {
    let edge = edge_degrees(g).map(|(a, b)| (a * b).ln()).sum::<f64>();
    debug_assert!(
        (edge - log_nk_star_vertex_form(g)).abs() <= 1e-9 * edge.abs().max(1.0),
        "edge and vertex forms of ln NK* disagree"
    );
    edge
}

/// ln NK* via Σ_u d_u ln d_u.
pub fn log_nk_star_vertex_form(g: &Graph) -> f64 {
    (0..g.n())
        .map(|u| g.degree(u))
        .filter(|&d| d > 0)
        .map(|d| d as f64 * (d as f64).ln())
        .sum()
}

/// Ratio of geometric to arithmetic mean, 2√(xy)/(x+y).
pub fn g_edge(x: f64, y: f64) -> Result<f64, IndexError> {
    if !(x > 0.0 && y > 0.0) {
        return Err(IndexError::NonPositiveArgument(x, y));
    }
    Ok(2.0 * (x * y).sqrt() / (x + y))
}

/// Harmonic mean, 2xy/(x+y).
pub fn h_edge(x: f64, y: f64) -> Result<f64, IndexError> {
    if !(x > 0.0 && y > 0.0) {
        return Err(IndexError::NonPositiveArgument(x, y));
    }
    Ok(2.0 * x * y / (x + y))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AlphaValue {
    pub alpha: f64,
    pub value: f64,
}

/// Every index the bounds consume, computed once per graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IndexPanel {
    pub ga1: f64,
    pub m1: f64,
    pub m2: f64,
    pub randic: f64,
    pub general_randic: Vec<AlphaValue>,
    pub log_nk_star: f64,
}

impl IndexPanel {
    pub fn compute(g: &Graph, alphas: &[f64]) -> Result<IndexPanel, IndexError> {
        let general_randic = alphas
            .iter()
            .map(|&alpha| {
                Ok(AlphaValue {
                    alpha,
                    value: general_randic(g, alpha)?,
                })
            })
            .collect::<Result<_, IndexError>>()?;
        Ok(IndexPanel {
            ga1: ga1(g)?,
            m1: m1(g),
            m2: m2(g),
            randic: randic(g),
            general_randic,
            log_nk_star: log_nk_star(g),
        })
    }

    pub fn r_alpha(&self, alpha: f64) -> Option<f64> {
        self.general_randic
            .iter()
            .find(|av| av.alpha == alpha)
            .map(|av| av.value)
    }
}
