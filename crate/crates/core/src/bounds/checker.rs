use serde::Serialize;

use super::{
    BoundCheck, BoundError, Side, TheoremId, Tolerance, BRANCH_TOLERANCE, NK_EXPONENT_LIMIT,
};
use crate::graph::{DegreeStats, Graph};
use crate::indices;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Interval {
    pub lower: f64,
    pub upper: f64,
}

impl Interval {
    fn scaled(lower: f64, upper: f64, by: f64) -> Interval {
        Interval {
            lower: lower * by,
            upper: upper * by,
        }
    }
}

/// Improvement relations between pairs of bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DominanceClaim {
    /// upper(t-end2) ≤ upper(eq1).
    End2UpperBelowEq1,
    /// lower(cor-mis29) ≥ lower(s-thm4-reference).
    Mis29LowerAboveReference,
    /// For alpha < 0, the t-z1 interval lies inside the t-lb55 interval.
    Z1InsideLb55,
    /// For alpha > 0, the t-lb55 interval lies inside the t-z1 interval.
    Lb55InsideZ1,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Dominance {
    pub claim: DominanceClaim,
    pub alpha: Option<f64>,
    /// Smallest improvement over the weaker bound; negative when the claim
    /// fails.
    pub margin: f64,
    pub holds: bool,
}

/// Output of [`BoundChecker::all`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckSet {
    pub checks: Vec<BoundCheck>,
    pub dominance: Vec<Dominance>,
}

/// Evaluates bounds on one connected graph with cached indices.
#[derive(Debug, Clone)]
pub struct BoundChecker<'g> {
    graph: &'g Graph,
    stats: DegreeStats,
    tol: Tolerance,
    n: f64,
    m: f64,
    min_deg: f64,
    max_deg: f64,
    ga1: f64,
    m1: f64,
    m2: f64,
    randic: f64,
    r_minus_one: f64,
    log_nk: f64,
}

fn agree(a: f64, b: f64) -> bool {
    (a - b).abs() <= BRANCH_TOLERANCE * a.abs().max(b.abs())
}

impl<'g> BoundChecker<'g> {
    /// Fails unless `g` is connected with at least one edge (hence minimum
    /// degree at least 1).
    pub fn new(graph: &'g Graph, tol: Tolerance) -> Result<BoundChecker<'g>, BoundError> {
        if graph.m() == 0 {
            return Err(BoundError::Edgeless);
        }
        if !graph.is_connected() {
            return Err(BoundError::Disconnected {
                components: graph.components().len(),
            });
        }
        let stats = graph.degree_stats();
        Ok(BoundChecker {
            n: stats.n as f64,
            m: stats.m as f64,
            min_deg: stats.min_degree as f64,
            max_deg: stats.max_degree as f64,
            ga1: indices::ga1(graph)?,
            m1: indices::m1(graph),
            m2: indices::m2(graph),
            randic: indices::randic(graph),
            r_minus_one: indices::general_randic(graph, -1.0)?,
            log_nk: indices::log_nk_star(graph),
            graph,
            stats,
            tol,
        })
    }

    pub fn stats(&self) -> &DegreeStats {
        &self.stats
    }

    pub fn graph(&self) -> &Graph {
        self.graph
    }

    pub fn ga1(&self) -> f64 {
        self.ga1
    }

    pub fn tolerance(&self) -> Tolerance {
        self.tol
    }

    fn r_alpha(&self, alpha: f64) -> Result<f64, BoundError> {
        // R_{-1} is cached
        if alpha == -1.0 {
            return Ok(self.r_minus_one);
        }
        Ok(indices::general_randic(self.graph, alpha)?)
    }

    fn finish(
        &self,
        theorem: TheoremId,
        lower: Option<f64>,
        value: f64,
        upper: Option<f64>,
    ) -> BoundCheck {
        BoundCheck::evaluate(theorem, lower, value, upper, &self.stats, self.tol)
    }

    fn two_sided(&self, theorem: TheoremId, iv: Interval) -> BoundCheck {
        self.finish(theorem, Some(iv.lower), self.ga1, Some(iv.upper))
    }

    pub fn eq1(&self) -> BoundCheck {
        let upper = self.m1 / (2.0 * self.min_deg);
        self.finish(TheoremId::Eq1Known, None, self.ga1, Some(upper))
    }

    pub fn t_end2(&self) -> BoundCheck {
        let (d, big) = (self.min_deg, self.max_deg);
        let lower = d * self.m1 / (2.0 * big * big);
        let upper = (self.n * self.m1).sqrt() / 2.0;
        self.two_sided(TheoremId::TEnd2, Interval { lower, upper })
    }

    pub fn t_p4bis(&self) -> BoundCheck {
        let (d, big, m) = (self.min_deg, self.max_deg, self.m);
        let pairs = m * (m - 1.0);
        let lower = ((big + d).powi(2) * self.m2 + 4.0 * big.powi(3) * d * pairs).sqrt()
            / (big * (big + d));
        let upper = (self.m2 + d * d * pairs).sqrt() / d;
        self.two_sided(TheoremId::TP4bis, Interval { lower, upper })
    }

    pub fn t_r(&self) -> BoundCheck {
        let value = self.ga1 + self.max_deg * self.randic;
        self.finish(TheoremId::TR, Some(2.0 * self.m), value, None)
    }

    /// Both branch intervals of t-z1: `(a)` for alpha ≤ −1/2, `(b)` for
    /// alpha ≥ −1/2. Each is evaluated regardless of alpha.
    pub fn t_z1_branches(&self, alpha: f64) -> Result<(Interval, Interval), BoundError> {
        let r = self.r_alpha(alpha)?;
        let (d, big) = (self.min_deg, self.max_deg);
        let a = Interval::scaled(d.powf(-2.0 * alpha), big.powf(-2.0 * alpha), r);
        let b = Interval::scaled(
            d * big.powf(-2.0 * alpha - 1.0),
            big * d.powf(-2.0 * alpha - 1.0),
            r,
        );
        Ok((a, b))
    }

    fn t_z1_interval(&self, alpha: f64) -> Result<Interval, BoundError> {
        let (a, b) = self.t_z1_branches(alpha)?;
        select_branch("t-z1", alpha, -0.5, a, b)
    }

    pub fn t_z1(&self, alpha: f64) -> Result<BoundCheck, BoundError> {
        let iv = self.t_z1_interval(alpha)?;
        Ok(self.two_sided(TheoremId::TZ1(alpha), iv))
    }

    pub fn cor_randic(&self) -> BoundCheck {
        let iv = Interval::scaled(self.min_deg, self.max_deg, self.randic);
        self.two_sided(TheoremId::CorRandic, iv)
    }

    /// Both branch intervals of t-lb55: `(a)` for alpha ≤ 1/2, `(b)` for
    /// alpha ≥ 1/2.
    pub fn t_lb55_branches(&self, alpha: f64) -> Result<(Interval, Interval), BoundError> {
        let r = self.r_alpha(alpha)?;
        let (d, big) = (self.min_deg, self.max_deg);
        let e = 1.0 - 2.0 * alpha;
        let a = Interval::scaled(d.powf(e) / big, big.powf(e) / d, r);
        let b = Interval::scaled(big.powf(-2.0 * alpha), d.powf(-2.0 * alpha), r);
        Ok((a, b))
    }

    fn t_lb55_interval(&self, alpha: f64) -> Result<Interval, BoundError> {
        let (a, b) = self.t_lb55_branches(alpha)?;
        select_branch("t-lb55", alpha, 0.5, a, b)
    }

    pub fn t_lb55(&self, alpha: f64) -> Result<BoundCheck, BoundError> {
        let iv = self.t_lb55_interval(alpha)?;
        Ok(self.two_sided(TheoremId::TLb55(alpha), iv))
    }

    pub fn t_mz(&self) -> BoundCheck {
        let (d, big) = (self.min_deg, self.max_deg);
        let root = (self.m * self.r_minus_one).sqrt();
        let lower = 2.0 * big * d * d / (big * big + d * d) * root;
        self.two_sided(
            TheoremId::TMz,
            Interval {
                lower,
                upper: big * root,
            },
        )
    }

    pub fn t_mz2(&self) -> BoundCheck {
        let (d, big) = (self.min_deg, self.max_deg);
        let lower = 4.0 * big * big * d * d * (2.0 * d * self.m1 * self.r_minus_one).sqrt()
            / ((big * big + d * d) * (d + big).powi(2));
        let upper = (2.0 * big * self.m1 * self.r_minus_one).sqrt() / 2.0;
        self.two_sided(TheoremId::TMz2, Interval { lower, upper })
    }

    /// The two `k_α` formulas: for 0 < alpha ≤ 1 and for alpha ≥ 1.
    pub fn t_mzz_coefficients(&self, alpha: f64) -> Result<(f64, f64), BoundError> {
        mzz_alpha(alpha)?;
        let (d, big) = (self.min_deg, self.max_deg);
        let small = 2.0 * big.sqrt() * d.powf(1.5) / (big * big + d * d);
        let large = 2.0 * big.powf(alpha - 0.5) * d.powf(alpha + 0.5)
            / (big.powf(2.0 * alpha) + d.powf(2.0 * alpha));
        Ok((small, large))
    }

    pub fn t_mzz(&self, alpha: f64) -> Result<BoundCheck, BoundError> {
        let (small, large) = self.t_mzz_coefficients(alpha)?;
        let k = if alpha == 1.0 {
            if !agree(small, large) {
                return Err(BoundError::BranchMismatch {
                    theorem: "t-mzz",
                    alpha,
                    first: small,
                    second: large,
                });
            }
            small
        } else if alpha < 1.0 {
            small
        } else {
            large
        };
        let upper = (self.r_alpha(alpha)? * self.r_alpha(-alpha)?).sqrt();
        Ok(self.two_sided(TheoremId::TMzz(alpha), Interval::scaled(k, 1.0, upper)))
    }

    pub fn cor_mis29(&self) -> BoundCheck {
        let (d, big) = (self.min_deg, self.max_deg);
        let lower = 2.0 * d / (big * big + d * d) * (d * big * self.m2 * self.r_minus_one).sqrt();
        let upper = (self.m2 * self.r_minus_one).sqrt();
        self.two_sided(TheoremId::CorMis29, Interval { lower, upper })
    }

    /// The earlier `√(M₂R₋₁)` bounds that cor-mis29 improves on.
    pub fn s_thm4_reference(&self) -> BoundCheck {
        let (d, big) = (self.min_deg, self.max_deg);
        let upper = (self.m2 * self.r_minus_one).sqrt();
        let lower = 2.0 * d * d / (big * big + d * d) * upper;
        self.two_sided(TheoremId::SThm4Reference, Interval { lower, upper })
    }

    /// `alpha * ln NK* / m`, the exponent of the NK* factor.
    fn nk_exponent(&self, alpha: f64) -> f64 {
        alpha * self.log_nk / self.m
    }

    pub fn t_nk3(&self, alpha: f64) -> Result<BoundCheck, BoundError> {
        let theorem = TheoremId::TNk3(alpha);
        let value = self.r_alpha(alpha)?;
        let exponent = self.nk_exponent(alpha);
        if exponent.abs() > NK_EXPONENT_LIMIT {
            return Ok(BoundCheck::skipped(theorem, value, &self.stats));
        }
        let lower = self.m * exponent.exp();
        Ok(self.finish(theorem, Some(lower), value, None))
    }

    /// Both branch lower bounds of cor-nk3: `(a)` for alpha ≤ −1/2, `(b)`
    /// for alpha ≥ −1/2. `None` when the NK* exponent is out of range.
    pub fn cor_nk3_branches(&self, alpha: f64) -> Result<Option<(f64, f64)>, BoundError> {
        indices::check_alpha(alpha)?;
        let exponent = self.nk_exponent(alpha);
        if exponent.abs() > NK_EXPONENT_LIMIT {
            return Ok(None);
        }
        let (d, big) = (self.min_deg, self.max_deg);
        let base = self.m.ln() + exponent;
        let a = (-2.0 * alpha * d.ln() + base).exp();
        let b = (d.ln() + (-2.0 * alpha - 1.0) * big.ln() + base).exp();
        Ok(Some((a, b)))
    }

    pub fn cor_nk3(&self, alpha: f64) -> Result<BoundCheck, BoundError> {
        let theorem = TheoremId::CorNk3(alpha);
        let Some((a, b)) = self.cor_nk3_branches(alpha)? else {
            return Ok(BoundCheck::skipped(theorem, self.ga1, &self.stats));
        };
        let lower = if alpha == -0.5 {
            if !agree(a, b) {
                return Err(BoundError::BranchMismatch {
                    theorem: "cor-nk3",
                    alpha,
                    first: a,
                    second: b,
                });
            }
            a
        } else if alpha < -0.5 {
            a
        } else {
            b
        };
        Ok(self.finish(theorem, Some(lower), self.ga1, None))
    }

    /// Evaluates `theorem` on this graph.
    pub fn check(&self, theorem: TheoremId) -> Result<BoundCheck, BoundError> {
        Ok(match theorem {
            TheoremId::Eq1Known => self.eq1(),
            TheoremId::TEnd2 => self.t_end2(),
            TheoremId::TP4bis => self.t_p4bis(),
            TheoremId::TR => self.t_r(),
            TheoremId::TZ1(a) => self.t_z1(a)?,
            TheoremId::CorRandic => self.cor_randic(),
            TheoremId::TLb55(a) => self.t_lb55(a)?,
            TheoremId::TMz => self.t_mz(),
            TheoremId::TMz2 => self.t_mz2(),
            TheoremId::TMzz(a) => self.t_mzz(a)?,
            TheoremId::CorMis29 => self.cor_mis29(),
            TheoremId::TNk3(a) => self.t_nk3(a)?,
            TheoremId::CorNk3(a) => self.cor_nk3(a)?,
            TheoremId::SThm4Reference => self.s_thm4_reference(),
        })
    }

    /// The theorem list [`BoundChecker::all`] evaluates for `alphas`.
    pub fn theorems_for(alphas: &[f64]) -> Vec<TheoremId> {
        let mut out = vec![
            TheoremId::Eq1Known,
            TheoremId::TEnd2,
            TheoremId::TP4bis,
            TheoremId::TR,
            TheoremId::CorRandic,
            TheoremId::TMz,
            TheoremId::TMz2,
            TheoremId::CorMis29,
        ];
        for &a in alphas {
            out.push(TheoremId::TZ1(a));
            out.push(TheoremId::TLb55(a));
            if a > 0.0 {
                out.push(TheoremId::TMzz(a));
            }
            out.push(TheoremId::TNk3(a));
            out.push(TheoremId::CorNk3(a));
        }
        out
    }

    /// Every family once per alpha (t-mzz only for alpha > 0) plus the
    /// dominance relations between bounds.
    pub fn all(&self, alphas: &[f64]) -> Result<CheckSet, BoundError> {
        for &a in alphas {
            indices::check_alpha(a)?;
        }
        let checks = Self::theorems_for(alphas)
            .into_iter()
            .map(|t| self.check(t))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CheckSet {
            checks,
            dominance: self.dominance(alphas)?,
        })
    }

    pub fn dominance(&self, alphas: &[f64]) -> Result<Vec<Dominance>, BoundError> {
        let end2 = self.t_end2().upper.expect("two-sided");
        let eq1 = self.eq1().upper.expect("upper bound");
        let mis29 = self.cor_mis29().lower.expect("two-sided");
        let reference = self.s_thm4_reference().lower.expect("two-sided");
        let mut out = vec![
            self.relation(
                DominanceClaim::End2UpperBelowEq1,
                None,
                eq1 - end2,
                eq1.max(end2),
            ),
            self.relation(
                DominanceClaim::Mis29LowerAboveReference,
                None,
                mis29 - reference,
                mis29.max(reference),
            ),
        ];
        for &a in alphas {
            let z1 = self.t_z1_interval(a)?;
            let lb55 = self.t_lb55_interval(a)?;
            let (claim, inner, outer) = if a < 0.0 {
                (DominanceClaim::Z1InsideLb55, z1, lb55)
            } else {
                (DominanceClaim::Lb55InsideZ1, lb55, z1)
            };
            let margin = (inner.lower - outer.lower).min(outer.upper - inner.upper);
            out.push(self.relation(claim, Some(a), margin, outer.upper));
        }
        Ok(out)
    }

    fn relation(
        &self,
        claim: DominanceClaim,
        alpha: Option<f64>,
        margin: f64,
        scale: f64,
    ) -> Dominance {
        Dominance {
            claim,
            alpha,
            margin,
            holds: margin >= -self.tol.threshold(scale),
        }
    }

    /// Slack of `theorem` on `side`, failing if the theorem lacks that side.
    pub fn slack(&self, theorem: TheoremId, side: Side) -> Result<Option<f64>, BoundError> {
        if !theorem.has_side(side) {
            return Err(BoundError::MissingSide {
                theorem: theorem.name(),
                side,
            });
        }
        Ok(self.check(theorem)?.slack(side))
    }
}

fn mzz_alpha(alpha: f64) -> Result<(), BoundError> {
    indices::check_alpha(alpha)?;
    if alpha <= 0.0 {
        return Err(BoundError::AlphaNotPositive {
            theorem: "t-mzz",
            alpha,
        });
    }
    Ok(())
}

/// Picks branch `a` below `boundary`, `b` above, and at the boundary checks
/// that both agree.
fn select_branch(
    theorem: &'static str,
    alpha: f64,
    boundary: f64,
    a: Interval,
    b: Interval,
) -> Result<Interval, BoundError> {
    if alpha == boundary {
        for (x, y) in [(a.lower, b.lower), (a.upper, b.upper)] {
            if !agree(x, y) {
                return Err(BoundError::BranchMismatch {
                    theorem,
                    alpha,
                    first: x,
                    second: y,
                });
            }
        }
        return Ok(a);
    }
    Ok(if alpha < boundary { a } else { b })
}
