//! Admissibility pipeline, family classifier, and the bounded exhaustive
//! search over three-point weight configurations.
//!
//! The search enumerates pairings directly (the a/b/c role assignment is
//! built in, so the pairing condition holds by construction), rejects
//! candidates with exact integer arithmetic, deduplicates by canonical
//! form, and cross-checks the surviving set against the configurations
//! generated from the two action families.

use std::collections::{BTreeMap, BTreeSet};

use num::Zero;

use crate::constraints::{
    classify_case, enumerate_pairings, first_multiplicity_violation, sign_pattern_valid,
    CaseLabel, Pairing,
};
use crate::data::{FixedPoint, FixedPointData, Sign, WeightMultiset};
use crate::errors::{ConstraintError, VerifierError};
use crate::hp2::{recover_params, weights_from_params, Hp2ActionParams};
use crate::localization::{localization_sum, SymmetricPolynomialSpec};

/// Outcome of one named admissibility check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Ordered record of every admissibility check; `passed` holds exactly when
/// every check passed. Inadmissibility is a result, never an error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibilityReport {
    pub passed: bool,
    pub checks: Vec<CheckOutcome>,
}

impl AdmissibilityReport {
    /// Name of the first failing check, if any.
    pub fn first_failure(&self) -> Option<&'static str> {
        self.checks.iter().find(|c| !c.passed).map(|c| c.name)
    }
}

/// A successful match of input data against a family action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchResult {
    pub params: Hp2ActionParams,
    /// Input index of the point playing role q1, q2, q3.
    pub role_permutation: [usize; 3],
    pub case_label: CaseLabel,
}

/// Result of classifying structurally valid data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassifyOutcome {
    Match(MatchResult),
    Inadmissible(AdmissibilityReport),
}

/// Runs every necessary condition in order, recording each outcome.
pub fn admissible(data: &FixedPointData) -> Result<AdmissibilityReport, ConstraintError> {
    if data.half_dimension() != 4 {
        return Err(ConstraintError::HalfDimension(data.half_dimension()));
    }
    let m = data.points().len();
    let mut checks: Vec<CheckOutcome> = Vec::new();
    let mut push = |name: &'static str, passed: bool, detail: String| {
        checks.push(CheckOutcome {
            name,
            passed,
            detail,
        });
    };

    push(
        "weight positivity",
        true,
        "enforced at construction".to_string(),
    );
    push("point count >= 2", m >= 2, format!("{m} fixed points"));

    let per_point = data.pointwise_gcd();
    push(
        "per-point gcd = 1",
        per_point.iter().all(|&g| g == 1),
        format!("{per_point:?}"),
    );
    let global = data.global_gcd();
    push("global gcd = 1", global == 1, format!("gcd = {global}"));
    push(
        "sign pattern",
        sign_pattern_valid(data),
        format!(
            "signs {:?}",
            data.points()
                .iter()
                .map(|p| p.sign.as_i8())
                .collect::<Vec<_>>()
        ),
    );

    let pairings: Vec<Pairing> = if m == 3 {
        enumerate_pairings(data)?
    } else {
        Vec::new()
    };
    push(
        "pairing existence",
        m == 3 && !pairings.is_empty(),
        if m == 3 {
            format!("{} pairing(s)", pairings.len())
        } else {
            "requires exactly 3 fixed points".to_string()
        },
    );

    let unit = localization_sum(data, &SymmetricPolynomialSpec::unit())
        .expect("the unit polynomial is valid in any dimension");
    push("unit-class vanishing", unit.is_zero(), format!("sum = {unit}"));
    let p1 = localization_sum(data, &SymmetricPolynomialSpec::elementary(1))
        .expect("e_1 is valid for four weights");
    push("p1 vanishing", p1.is_zero(), format!("sum = {p1}"));

    let mult = if m == 3 {
        first_multiplicity_violation(data)
    } else {
        None
    };
    push(
        "multiplicity consistency",
        m == 3 && mult.is_none(),
        match (m, mult) {
            (3, None) => "all nonzero multiplicity counts agree".to_string(),
            (3, Some(a)) => format!("violated at divisor {a}"),
            _ => "requires exactly 3 fixed points".to_string(),
        },
    );

    let classified = pairings.iter().filter(|p| classify_case(p).is_some()).count();
    push(
        "case classification",
        classified > 0,
        format!("{classified} of {} pairing(s) match a case", pairings.len()),
    );

    let passed = checks.iter().all(|c| c.passed);
    Ok(AdmissibilityReport { passed, checks })
}

/// Finds the case label of the pairing backing a recovery, preferring the
/// recovered role permutation.
fn matched_case(data: &FixedPointData, perm: [usize; 3]) -> Result<CaseLabel, VerifierError> {
    let pairings = enumerate_pairings(data)?;
    pairings
        .iter()
        .filter(|p| p.point_order == perm)
        .find_map(classify_case)
        .or_else(|| pairings.iter().find_map(classify_case))
        .ok_or_else(|| VerifierError::TheoremViolation {
            detail: "admissible data has no classifiable pairing".to_string(),
        })
}

/// Full classification: admissibility, parameter recovery, and validation
/// by regenerating the family data and comparing canonical forms. A
/// recovery or regeneration failure on admissible data is a theorem
/// violation and surfaces as a hard error.
pub fn classify(data: &FixedPointData) -> Result<ClassifyOutcome, VerifierError> {
    let report = admissible(data)?;
    if !report.passed {
        return Ok(ClassifyOutcome::Inadmissible(report));
    }
    let (params, role_permutation) =
        recover_params(data).map_err(|e| VerifierError::TheoremViolation {
            detail: format!("admissible data failed parameter recovery: {e}"),
        })?;
    let regenerated = weights_from_params(&params);
    if regenerated != data.canonical_form() {
        return Err(VerifierError::TheoremViolation {
            detail: format!(
                "recovered parameters {:?} regenerate different weight data",
                params.doubled()
            ),
        });
    }
    let case_label = matched_case(data, role_permutation)?;
    Ok(ClassifyOutcome::Match(MatchResult {
        params,
        role_permutation,
        case_label,
    }))
}

/// Outcome of the bounded exhaustive search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchSummary {
    pub bound: u64,
    /// Every admissible canonical configuration with its family match,
    /// sorted by canonical form.
    pub admissible_configs: Vec<(FixedPointData, MatchResult)>,
    /// Counts of classifiable pairings of admissible configurations, by
    /// case, indexed Case1/Case2/Case3.
    pub case_counts: [usize; 3],
    /// True when no pairing of an admissible configuration classifies as a
    /// strict Case 3, i.e. every Case-3-shaped pairing had b2 = a1/2 and
    /// was absorbed into Case 1.
    pub case3_b2_check: bool,
    /// True when the admissible set equals the set generated from all
    /// family parameters whose maximum induced weight is within the bound.
    pub generated_set_equal: bool,
}

impl SearchSummary {
    /// The theorem-level verdict: nothing outside the generated families,
    /// no Case 2, no strict Case 3.
    pub fn verified(&self) -> bool {
        self.generated_set_equal && self.case_counts[1] == 0 && self.case3_b2_check
    }
}

fn assemble(weights: [[u64; 4]; 3], minus: usize) -> FixedPointData {
    let points = weights
        .iter()
        .enumerate()
        .map(|(i, w)| {
            FixedPoint::new(
                WeightMultiset::new(w.to_vec()).expect("enumeration weights are positive"),
                if i == minus { Sign::Minus } else { Sign::Plus },
            )
        })
        .collect();
    FixedPointData::new(4, points).expect("three points with four weights each")
}

/// Candidate configurations passing the exact unit-class and p1 rejection
/// tests, deduplicated by canonical form. The enumeration runs over
/// pairings directly: a1 is the maximal weight, a2 <= a1, b2 <= b1 <= a1,
/// c2 <= c1 <= a1, with the three majority-plus sign placements.
fn enumerate_candidates(bound: u64) -> BTreeSet<FixedPointData> {
    let mut candidates = BTreeSet::new();
    for a1 in 2..=bound {
        collect_candidates_for_a1(a1, &mut candidates);
    }
    candidates
}

/// One partition of the enumeration space, keyed by the leading loop
/// variable so partitions can be evaluated independently and merged.
fn collect_candidates_for_a1(a1: u64, candidates: &mut BTreeSet<FixedPointData>) {
    for a2 in 1..=a1 {
        for b1 in 1..=a1 {
            for b2 in 1..=b1 {
                for c1 in 1..=a1 {
                    for c2 in 1..=c1 {
                        let weights = [[a1, a2, b1, b2], [a1, a2, c1, c2], [b1, b2, c1, c2]];
                        let prod: Vec<i128> = weights
                            .iter()
                            .map(|w| w.iter().map(|&x| x as i128).product())
                            .collect();
                        let sumsq: Vec<i128> = weights
                            .iter()
                            .map(|w| w.iter().map(|&x| (x * x) as i128).sum())
                            .collect();
                        for minus in 0..3 {
                            let mut unit = 0i128;
                            let mut p1 = 0i128;
                            for i in 0..3 {
                                let cross = prod[(i + 1) % 3] * prod[(i + 2) % 3];
                                let s = if i == minus { -1 } else { 1 };
                                unit += s * cross;
                                p1 += s * sumsq[i] * cross;
                            }
                            if unit != 0 || p1 != 0 {
                                continue;
                            }
                            candidates.insert(assemble(weights, minus).canonical_form());
                        }
                    }
                }
            }
        }
    }
}

/// Canonical forms of every family configuration whose maximum induced
/// weight is at most `bound`.
fn generated_set(bound: u64) -> BTreeSet<FixedPointData> {
    let mut generated = BTreeSet::new();
    // Max induced weight is (d3 + d2) / 2, so d3 + d2 <= 2 * bound.
    for parity in 0..2u64 {
        for d1 in (parity..2 * bound).step_by(2) {
            for d2 in ((d1 + 2)..2 * bound).step_by(2) {
                for d3 in ((d2 + 2)..=(2 * bound).saturating_sub(d2)).step_by(2) {
                    let params = Hp2ActionParams::new(d1, d2, d3)
                        .expect("loop bounds keep the triple strictly increasing, one parity");
                    generated.insert(weights_from_params(&params));
                }
            }
        }
    }
    generated
}

/// Exhaustively verifies the classification for all weights up to `bound`.
pub fn search(bound: u64) -> Result<SearchSummary, VerifierError> {
    if bound < 2 {
        return Err(VerifierError::BoundTooSmall(bound));
    }
    let candidates = enumerate_candidates(bound);

    let mut admissible_map: BTreeMap<FixedPointData, MatchResult> = BTreeMap::new();
    let mut case_counts = [0usize; 3];
    let mut case3_b2_check = true;
    for cand in &candidates {
        let report = admissible(cand)?;
        if !report.passed {
            continue;
        }
        let matched = match classify(cand)? {
            ClassifyOutcome::Match(m) => m,
            ClassifyOutcome::Inadmissible(_) => unreachable!("admissibility already checked"),
        };
        for p in enumerate_pairings(cand)? {
            match classify_case(&p) {
                Some(label) => {
                    case_counts[label.index()] += 1;
                    if label == CaseLabel::Case3 {
                        case3_b2_check = false;
                    }
                }
                None => {}
            }
        }
        admissible_map.insert(cand.clone(), matched);
    }

    let admissible_set: BTreeSet<FixedPointData> = admissible_map.keys().cloned().collect();
    let generated_set_equal = generated_set(bound) == admissible_set;

    Ok(SearchSummary {
        bound,
        admissible_configs: admissible_map.into_iter().collect(),
        case_counts,
        case3_b2_check,
        generated_set_equal,
    })
}
