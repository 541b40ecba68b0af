//! Executable bound checks on GA₁.
//!
//! Each check evaluates one inequality on one connected graph, reports the
//! slack on every finite side, flags tightness at a relative tolerance, and
//! compares tightness with the class of graphs on which the inequality is
//! known to be an equality.

mod checker;

use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{DegreeStats, Graph};
use crate::indices::IndexError;

pub use checker::{BoundChecker, CheckSet, Dominance, DominanceClaim, Interval};

/// Alpha grid used when none is supplied: both branches of every
/// parameterized family plus the branch boundaries.
pub const DEFAULT_ALPHAS: [f64; 6] = [-2.0, -1.0, -0.5, 0.5, 1.0, 2.0];

/// Relative agreement required between two branch formulas evaluated at a
/// shared boundary value of alpha.
pub const BRANCH_TOLERANCE: f64 = 1e-12;

/// Largest `|alpha * ln NK* / m|` evaluated before an NK*-based check is
/// skipped as an overflow risk.
pub const NK_EXPONENT_LIMIT: f64 = 700.0;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BoundError {
    #[error("graph has no edges")]
    Edgeless,
    #[error(
        "graph is disconnected ({components} components); check each component \
         separately, the indices are additive over components"
    )]
    Disconnected { components: usize },
    #[error(transparent)]
    Index(#[from] IndexError),
    #[error("{theorem} requires alpha > 0, got {alpha}")]
    AlphaNotPositive { theorem: &'static str, alpha: f64 },
    #[error("{theorem} takes an alpha parameter")]
    MissingAlpha { theorem: &'static str },
    #[error("{theorem} takes no alpha parameter")]
    UnexpectedAlpha { theorem: &'static str },
    #[error("unknown theorem {0:?}")]
    UnknownTheorem(String),
    #[error("{theorem} has no {side} bound")]
    MissingSide { theorem: &'static str, side: Side },
    #[error("branch formulas of {theorem} disagree at alpha = {alpha}: {first} vs {second}")]
    BranchMismatch {
        theorem: &'static str,
        alpha: f64,
        first: f64,
        second: f64,
    },
    #[error("tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),
}

/// One inequality, with its alpha where the family is parameterized.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TheoremId {
    /// Known upper bound `GA₁ ≤ M₁/(2δ)`.
    Eq1Known,
    /// `δM₁/(2Δ²) ≤ GA₁ ≤ √(nM₁)/2`.
    TEnd2,
    /// Two-sided bound through `M₂` and `m(m−1)`.
    TP4bis,
    /// `GA₁ + ΔR ≥ 2m`.
    TR,
    /// General Randić bounds from the harmonic-mean estimate.
    TZ1(f64),
    /// `δR ≤ GA₁ ≤ ΔR`.
    CorRandic,
    /// General Randić bounds from splitting `(d_u d_v)^{1/2}`.
    TLb55(f64),
    /// Bounds through `√(m R₋₁)`.
    TMz,
    /// Bounds through `√(M₁ R₋₁)`.
    TMz2,
    /// `k_α √(R_α R₋α) ≤ GA₁ ≤ √(R_α R₋α)`, alpha > 0.
    TMzz(f64),
    /// Bounds through `√(M₂ R₋₁)`.
    CorMis29,
    /// `R_α ≥ m NK*^{α/m}` (bounds R_α, not GA₁).
    TNk3(f64),
    /// Lower bounds on GA₁ through NK*.
    CorNk3(f64),
    /// Earlier `√(M₂ R₋₁)` bounds, kept as the baseline for the improvement
    /// claim.
    SThm4Reference,
}

impl TheoremId {
    /// Identifiers accepted by [`TheoremId::parse`], in check order.
    pub const NAMES: [&'static str; 14] = [
        "eq1",
        "t-end2",
        "t-p4bis",
        "t-r",
        "t-z1",
        "cor-randic",
        "t-lb55",
        "t-mz",
        "t-mz2",
        "t-mzz",
        "cor-mis29",
        "t-nk3",
        "cor-nk3",
        "s-thm4-reference",
    ];

    pub fn name(&self) -> &'static str {
        match self {
            TheoremId::Eq1Known => "eq1",
            TheoremId::TEnd2 => "t-end2",
            TheoremId::TP4bis => "t-p4bis",
            TheoremId::TR => "t-r",
            TheoremId::TZ1(_) => "t-z1",
            TheoremId::CorRandic => "cor-randic",
            TheoremId::TLb55(_) => "t-lb55",
            TheoremId::TMz => "t-mz",
            TheoremId::TMz2 => "t-mz2",
            TheoremId::TMzz(_) => "t-mzz",
            TheoremId::CorMis29 => "cor-mis29",
            TheoremId::TNk3(_) => "t-nk3",
            TheoremId::CorNk3(_) => "cor-nk3",
            TheoremId::SThm4Reference => "s-thm4-reference",
        }
    }

    pub fn alpha(&self) -> Option<f64> {
        match *self {
            TheoremId::TZ1(a)
            | TheoremId::TLb55(a)
            | TheoremId::TMzz(a)
            | TheoremId::TNk3(a)
            | TheoremId::CorNk3(a) => Some(a),
            _ => None,
        }
    }

    /// Builds an id from its name and optional alpha, validating the alpha.
    pub fn parse(name: &str, alpha: Option<f64>) -> Result<TheoremId, BoundError> {
        let fixed = |id: TheoremId| match alpha {
            None => Ok(id),
            Some(_) => Err(BoundError::UnexpectedAlpha { theorem: id.name() }),
        };
        let param = |make: fn(f64) -> TheoremId, theorem: &'static str| {
            let a = alpha.ok_or(BoundError::MissingAlpha { theorem })?;
            crate::indices::check_alpha(a)?;
            let id = make(a);
            if matches!(id, TheoremId::TMzz(_)) && a <= 0.0 {
                return Err(BoundError::AlphaNotPositive { theorem, alpha: a });
            }
            Ok(id)
        };
        match name {
            "eq1" => fixed(TheoremId::Eq1Known),
            "t-end2" => fixed(TheoremId::TEnd2),
            "t-p4bis" => fixed(TheoremId::TP4bis),
            "t-r" => fixed(TheoremId::TR),
            "t-z1" => param(TheoremId::TZ1, "t-z1"),
            "cor-randic" => fixed(TheoremId::CorRandic),
            "t-lb55" => param(TheoremId::TLb55, "t-lb55"),
            "t-mz" => fixed(TheoremId::TMz),
            "t-mz2" => fixed(TheoremId::TMz2),
            "t-mzz" => param(TheoremId::TMzz, "t-mzz"),
            "cor-mis29" => fixed(TheoremId::CorMis29),
            "t-nk3" => param(TheoremId::TNk3, "t-nk3"),
            "cor-nk3" => param(TheoremId::CorNk3, "cor-nk3"),
            "s-thm4-reference" => fixed(TheoremId::SThm4Reference),
            other => Err(BoundError::UnknownTheorem(other.to_string())),
        }
    }

    pub fn has_side(&self, side: Side) -> bool {
        match side {
            Side::Lower => !matches!(self, TheoremId::Eq1Known),
            Side::Upper => !matches!(
                self,
                TheoremId::TR | TheoremId::TNk3(_) | TheoremId::CorNk3(_)
            ),
        }
    }

    pub fn expected_equality(&self) -> EqualityClass {
        match self {
            TheoremId::TNk3(_) => EqualityClass::EdgeProductConstant,
            _ => EqualityClass::Regular,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.alpha() {
            Some(a) => write!(f, "{}[alpha={}]", self.name(), a),
            None => f.write_str(self.name()),
        }
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("TheoremId", 2)?;
        s.serialize_field("name", self.name())?;
        s.serialize_field("alpha", &self.alpha())?;
        s.end()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Lower,
    Upper,
}

impl Side {
    pub const BOTH: [Side; 2] = [Side::Lower, Side::Upper];

    pub fn as_str(&self) -> &'static str {
        match self {
            Side::Lower => "lower",
            Side::Upper => "upper",
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Side {
    type Err = String;

    fn from_str(s: &str) -> Result<Side, String> {
        match s {
            "lower" => Ok(Side::Lower),
            "upper" => Ok(Side::Upper),
            other => Err(format!("side must be `lower` or `upper`, got {other:?}")),
        }
    }
}

/// Graphs on which an inequality is expected to be an equality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum EqualityClass {
    Regular,
    EdgeProductConstant,
    /// Every edge joins a minimum-degree and a maximum-degree vertex.
    BidegreedExtreme,
}

impl EqualityClass {
    pub fn contains(&self, stats: &DegreeStats) -> bool {
        match self {
            EqualityClass::Regular => stats.is_regular,
            EqualityClass::EdgeProductConstant => stats.edge_product_constant,
            EqualityClass::BidegreedExtreme => stats.bidegreed_extreme,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Evaluated,
    /// The NK* exponent exceeded [`NK_EXPONENT_LIMIT`].
    OverflowSkipped,
}

/// Relative tolerance: a slack `s` counts as nonnegative when
/// `s >= -tol * max(1, |value|)` and as tight when `|s| <= tol * max(1, |value|)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerance(f64);

impl Tolerance {
    pub fn new(tol: f64) -> Result<Tolerance, BoundError> {
        if tol > 0.0 && tol.is_finite() {
            Ok(Tolerance(tol))
        } else {
            Err(BoundError::InvalidTolerance(tol))
        }
    }

    pub fn value(&self) -> f64 {
        self.0
    }

    pub fn threshold(&self, value: f64) -> f64 {
        self.0 * value.abs().max(1.0)
    }
}

impl Default for Tolerance {
    fn default() -> Tolerance {
        Tolerance(1e-9)
    }
}

/// One inequality evaluated on one graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundCheck {
    pub theorem: TheoremId,
    pub lower: Option<f64>,
    pub upper: Option<f64>,
    /// The bounded quantity: GA₁, except `GA₁ + ΔR` for t-r and `R_α` for t-nk3.
    pub value: f64,
    pub slack_lower: Option<f64>,
    pub slack_upper: Option<f64>,
    pub holds: bool,
    pub tight_lower: bool,
    pub tight_upper: bool,
    pub expected_equality: EqualityClass,
    /// Whether the graph belongs to `expected_equality`.
    pub in_class: bool,
    /// Every finite side is tight exactly when the graph is in the class.
    pub observed_equality_matches: Option<bool>,
    pub status: CheckStatus,
}

impl BoundCheck {
    pub(crate) fn evaluate(
        theorem: TheoremId,
        lower: Option<f64>,
        value: f64,
        upper: Option<f64>,
        stats: &DegreeStats,
        tol: Tolerance,
    ) -> BoundCheck {
        let expected_equality = theorem.expected_equality();
        let in_class = expected_equality.contains(stats);
        let threshold = tol.threshold(value);
        let slack_lower = lower.map(|lo| value - lo);
        let slack_upper = upper.map(|hi| hi - value);
        let ok = |s: Option<f64>| s.is_none_or(|s| s >= -threshold);
        let tight = |s: Option<f64>| s.is_some_and(|s| s.abs() <= threshold);
        let (tight_lower, tight_upper) = (tight(slack_lower), tight(slack_upper));
        let matches = Side::BOTH
            .iter()
            .filter(|&&side| theorem.has_side(side))
            .all(|&side| {
                let t = if side == Side::Lower {
                    tight_lower
                } else {
                    tight_upper
                };
                t == in_class
            });
        BoundCheck {
            theorem,
            lower,
            upper,
            value,
            slack_lower,
            slack_upper,
            holds: ok(slack_lower) && ok(slack_upper),
            tight_lower,
            tight_upper,
            expected_equality,
            in_class,
            observed_equality_matches: Some(matches),
            status: CheckStatus::Evaluated,
        }
    }

    pub(crate) fn skipped(theorem: TheoremId, value: f64, stats: &DegreeStats) -> BoundCheck {
        let expected_equality = theorem.expected_equality();
        BoundCheck {
            theorem,
            lower: None,
            upper: None,
            value,
            slack_lower: None,
            slack_upper: None,
            holds: true,
            tight_lower: false,
            tight_upper: false,
            expected_equality,
            in_class: expected_equality.contains(stats),
            observed_equality_matches: None,
            status: CheckStatus::OverflowSkipped,
        }
    }

    pub fn bound(&self, side: Side) -> Option<f64> {
        match side {
            Side::Lower => self.lower,
            Side::Upper => self.upper,
        }
    }

    pub fn slack(&self, side: Side) -> Option<f64> {
        match side {
            Side::Lower => self.slack_lower,
            Side::Upper => self.slack_upper,
        }
    }

    pub fn tight(&self, side: Side) -> bool {
        match side {
            Side::Lower => self.tight_lower,
            Side::Upper => self.tight_upper,
        }
    }

    /// Tight on every side the inequality has (false when skipped).
    pub fn tight_all_sides(&self) -> bool {
        self.status == CheckStatus::Evaluated
            && Side::BOTH
                .iter()
                .filter(|&&s| self.theorem.has_side(s))
                .all(|&s| self.tight(s))
    }
}

fn checker(g: &Graph) -> Result<BoundChecker<'_>, BoundError> {
    BoundChecker::new(g, Tolerance::default())
}

pub fn check_eq1(g: &Graph) -> Result<BoundCheck, BoundError> {
    Ok(checker(g)?.eq1())
}

pub fn check_t_end2(g: &Graph) -> Result<BoundCheck, BoundError> {
    Ok(checker(g)?.t_end2())
}

pub fn check_t_p4bis(g: &Graph) -> Result<BoundCheck, BoundError> {
    Ok(checker(g)?.t_p4bis())
}

pub fn check_t_r(g: &Graph) -> Result<BoundCheck, BoundError> {
    Ok(checker(g)?.t_r())
}

pub fn check_t_z1(g: &Graph, alpha: f64) -> Result<BoundCheck, BoundError> {
    checker(g)?.t_z1(alpha)
}

pub fn check_cor_randic(g: &Graph) -> Result<BoundCheck, BoundError> {
    Ok(checker(g)?.cor_randic())
}

pub fn check_t_lb55(g: &Graph, alpha: f64) -> Result<BoundCheck, BoundError> {
    checker(g)?.t_lb55(alpha)
}

pub fn check_t_mz(g: &Graph) -> Result<BoundCheck, BoundError> {
    Ok(checker(g)?.t_mz())
}

pub fn check_t_mz2(g: &Graph) -> Result<BoundCheck, BoundError> {
    Ok(checker(g)?.t_mz2())
}

pub fn check_t_mzz(g: &Graph, alpha: f64) -> Result<BoundCheck, BoundError> {
    checker(g)?.t_mzz(alpha)
}

pub fn check_cor_mis29(g: &Graph) -> Result<BoundCheck, BoundError> {
    Ok(checker(g)?.cor_mis29())
}

pub fn check_t_nk3(g: &Graph, alpha: f64) -> Result<BoundCheck, BoundError> {
    checker(g)?.t_nk3(alpha)
}

pub fn check_cor_nk3(g: &Graph, alpha: f64) -> Result<BoundCheck, BoundError> {
    checker(g)?.cor_nk3(alpha)
}

pub fn check_all(g: &Graph, alphas: &[f64]) -> Result<CheckSet, BoundError> {
    checker(g)?.all(alphas)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_names() {
        assert_eq!(TheoremId::parse("t-end2", None).unwrap(), TheoremId::TEnd2);
        assert_eq!(
            TheoremId::parse("t-nk3", Some(1.0)).unwrap(),
            TheoremId::TNk3(1.0)
        );
        assert!(matches!(
            TheoremId::parse("t-nk3", None),
            Err(BoundError::MissingAlpha { .. })
        ));
        assert!(matches!(
            TheoremId::parse("t-r", Some(1.0)),
            Err(BoundError::UnexpectedAlpha { .. })
        ));
        assert!(matches!(
            TheoremId::parse("t-mzz", Some(-1.0)),
            Err(BoundError::AlphaNotPositive { .. })
        ));
        assert!(matches!(
            TheoremId::parse("t-z1", Some(0.0)),
            Err(BoundError::Index(IndexError::InvalidAlpha(_)))
        ));
        assert!(TheoremId::parse("nope", None).is_err());
        for name in TheoremId::NAMES {
            let alpha =
                matches!(name, "t-z1" | "t-lb55" | "t-mzz" | "t-nk3" | "cor-nk3").then_some(1.0);
            assert_eq!(TheoremId::parse(name, alpha).unwrap().name(), name);
        }
    }

    #[test]
    fn display_and_sides() {
        assert_eq!(TheoremId::TZ1(-0.5).to_string(), "t-z1[alpha=-0.5]");
        assert_eq!(TheoremId::TMz.to_string(), "t-mz");
        assert!(!TheoremId::Eq1Known.has_side(Side::Lower));
        assert!(!TheoremId::TR.has_side(Side::Upper));
        assert!(TheoremId::TMzz(1.0).has_side(Side::Lower));
    }

    #[test]
    fn tolerance_validation() {
        assert!(Tolerance::new(0.0).is_err());
        assert!(Tolerance::new(f64::INFINITY).is_err());
        assert!((Tolerance::new(1e-6).unwrap().threshold(-50.0) - 5e-5).abs() < 1e-18);
        assert_eq!(Tolerance::default().threshold(0.5), 1e-9);
    }
}
