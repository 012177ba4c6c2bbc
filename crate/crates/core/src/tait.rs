//! Breadth identities and bounds, with verdicts and certificates.

use serde::Serialize;

use crate::bracket::{kauffman_bracket, BracketConfig, BracketReport};
use crate::diagram::Diagram;
use crate::error::Error;
use crate::laurent::{Order, RationalFn};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inapplicable,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inapplicable => "inapplicable",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hypotheses {
    pub connected: bool,
    pub alternating: bool,
    pub z2_trivial: bool,
    /// `g(D) = g`.
    pub full_genus: bool,
    pub no_nugatory: bool,
    /// No crossing meets a single external face at two corners.
    pub no_twice_external: bool,
    pub k: usize,
}

impl Hypotheses {
    pub fn of(d: &Diagram) -> Hypotheses {
        let simple = d.simplicity();
        Hypotheses {
            connected: d.is_connected() && d.crossing_count() > 0,
            alternating: d.is_alternating(),
            z2_trivial: d.z2_class().is_zero(),
            full_genus: d.diagram_genus() == d.genus(),
            no_nugatory: simple.nugatory.is_empty(),
            no_twice_external: simple.twice_external.is_empty(),
            k: simple.k(),
        }
    }

    pub fn all_hold(&self) -> bool {
        self.connected
            && self.alternating
            && self.z2_trivial
            && self.full_genus
            && self.no_nugatory
            && self.no_twice_external
    }
}

/// `B(⟨D⟩)` against `4n + 4 - 4g(D) - 4k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremVerdict {
    pub hypotheses: Hypotheses,
    pub expected: i64,
    pub actual: i64,
    pub verdict: Verdict,
}

pub fn expected_breadth(n: usize, g: usize, k: usize) -> i64 {
    4 * n as i64 + 4 - 4 * g as i64 - 4 * k as i64
}

pub fn check_jones_tait(d: &Diagram) -> Result<TheoremVerdict, Error> {
    let report = kauffman_bracket(d, &BracketConfig::default())?;
    Ok(jones_tait_verdict(d, &report))
}

/// Same as [`check_jones_tait`] with an already computed bracket.
pub fn jones_tait_verdict(d: &Diagram, report: &BracketReport) -> TheoremVerdict {
    let hypotheses = Hypotheses::of(d);
    let expected = expected_breadth(d.crossing_count(), d.diagram_genus(), hypotheses.k);
    let actual = report.breadth;
    let verdict = if !hypotheses.all_hold() {
        Verdict::Inapplicable
    } else if expected == actual {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    TheoremVerdict { hypotheses, expected, actual, verdict }
}

/// `B(⟨D⟩) ≤ ord_∞⟨D|s₊⟩ - ord_0⟨D|s₋⟩`, with equality for adequate
/// diagrams.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Ineq1 {
    pub breadth: i64,
    /// `None` when one of the extreme state terms vanishes.
    pub bound: Option<i64>,
    pub adequate: (bool, bool),
    pub holds: bool,
    pub equality: bool,
}

/// `s₊D + s₋D ≤ n + 1 - g`; asserted only when `g(D) = g ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Ineq2 {
    pub lhs: usize,
    pub rhs: i64,
    pub holds: bool,
    /// `false` at `g = 0` or `g(D) < g`, where the values are reported only.
    pub asserted: bool,
}

/// For alternating simple diagrams: `ord_∞⟨D|s₊⟩ - ord_0⟨D|s₋⟩ = 4n + 4 - 4g`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlterEq {
    pub value: Option<i64>,
    pub expected: i64,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    /// Connected and `Z/2`-trivial.
    pub applicable: bool,
    pub ineq1: Ineq1,
    pub ineq2: Ineq2,
    pub alter_eq: Option<AlterEq>,
}

impl LemmaReport {
    /// Every asserted statement holds (vacuously when not applicable).
    pub fn consistent(&self) -> bool {
        if !self.applicable {
            return true;
        }
        let eq_ok = !(self.ineq1.adequate.0 && self.ineq1.adequate.1) || self.ineq1.equality;
        self.ineq1.holds
            && eq_ok
            && (!self.ineq2.asserted || self.ineq2.holds)
            && self.alter_eq.as_ref().is_none_or(|a| a.holds)
    }
}

pub fn check_lemma_bounds(d: &Diagram) -> Result<LemmaReport, Error> {
    let report = kauffman_bracket(d, &BracketConfig::default())?;
    Ok(lemma_bounds(d, &report))
}

pub fn lemma_bounds(d: &Diagram, report: &BracketReport) -> LemmaReport {
    let n = d.crossing_count();
    let g = d.genus();
    let applicable = d.is_connected() && d.z2_class().is_zero();
    let bound = match (report.plus.max_degree, report.minus.min_degree) {
        (Order::Finite(hi), Order::Finite(lo)) => Some(hi - lo),
        _ => None,
    };
    let adequate = d.adequacy();
    let breadth = report.breadth;
    let ineq1 = Ineq1 {
        breadth,
        bound,
        adequate,
        holds: report.bracket.is_zero() || bound.is_some_and(|b| breadth <= b),
        equality: bound == Some(breadth),
    };
    let lhs = report.plus.trivial + report.minus.trivial;
    let rhs = n as i64 + 1 - g as i64;
    let ineq2 = Ineq2 { lhs, rhs, holds: lhs as i64 <= rhs, asserted: g >= 1 && d.diagram_genus() == g };
    let simple = d.simplicity();
    let alter_eq = (d.is_alternating() && simple.is_simple() && d.diagram_genus() == g).then(|| {
        let expected = expected_breadth(n, g, 0);
        AlterEq { value: bound, expected, holds: bound == Some(expected) }
    });
    LemmaReport { applicable, ineq1, ineq2, alter_eq }
}

/// Link-level hypotheses vouched for by the caller.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LinkFlags {
    pub non_h_split: bool,
    pub z2_trivial: bool,
    /// Homotopic genus `g` of the link, if known.
    pub homotopic_genus: Option<usize>,
    /// The link meets the sphere condition of the classical theory.
    pub sphere_condition: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum Certificate {
    /// `B mod 4 ≠ 0`: not alternating.
    #[serde(rename = "1")]
    BreadthNotMultipleOfFour { breadth: i64 },
    /// `B` not a positive multiple of 4: no simple alternating diagram.
    #[serde(rename = "2")]
    BreadthNotPositiveMultiple { breadth: i64 },
    /// `B < 4n + 4 - 4g`: no alternating diagram with `n` crossings.
    #[serde(rename = "3")]
    BreadthBelowBound { breadth: i64, crossings: usize, genus: usize, bound: i64 },
}

impl Certificate {
    pub fn kind(&self) -> u8 {
        match self {
            Certificate::BreadthNotMultipleOfFour { .. } => 1,
            Certificate::BreadthNotPositiveMultiple { .. } => 2,
            Certificate::BreadthBelowBound { .. } => 3,
        }
    }
}

/// The strongest certificate that applies. `crossings` is the crossing
/// count of a candidate alternating diagram, used by the third criterion
/// together with the homotopic genus flag.
pub fn non_alternating_certificate(
    bracket: &RationalFn,
    flags: &LinkFlags,
    crossings: Option<usize>,
) -> Option<Certificate> {
    let breadth = bracket.breadth();
    if bracket.is_zero() {
        return Some(Certificate::BreadthNotPositiveMultiple { breadth: 0 });
    }
    if breadth.rem_euclid(4) != 0 {
        return Some(Certificate::BreadthNotMultipleOfFour { breadth });
    }
    if breadth <= 0 {
        return Some(Certificate::BreadthNotPositiveMultiple { breadth });
    }
    if let (Some(n), Some(g)) = (crossings, flags.homotopic_genus) {
        if flags.non_h_split && flags.z2_trivial {
            let bound = expected_breadth(n, g, 0);
            if breadth < bound {
                return Some(Certificate::BreadthBelowBound { breadth, crossings: n, genus: g, bound });
            }
        }
    }
    None
}

/// Least `n ≥ 0` with `B ≤ 4n + 2 - 2g` (`g ≥ 1`) or `B ≤ 4n + 4` (`g = 0`).
pub fn crossing_lower_bound(bracket: &RationalFn, g: usize) -> usize {
    let b = bracket.breadth();
    let slack = if g == 0 { 4 } else { 2 - 2 * g as i64 };
    let need = b - slack;
    if need <= 0 {
        0
    } else {
        (need + 3).div_euclid(4) as usize
    }
}
