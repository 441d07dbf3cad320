//! Combinatorial necessary conditions on three-fixed-point weight data:
//! pairing of equal weights across distinct points, multiplicity profiles
//! of a common divisor, residue compatibility, and the three-case pattern
//! classification of the shared c-pair.

use std::collections::BTreeSet;

use crate::data::{multiset_minus, FixedPointData, Sign, WeightMultiset};
use crate::errors::ConstraintError;

/// A role assignment of the twelve weights: the a-pair is shared by q1 and
/// q2, the b-pair by q1 and q3, the c-pair by q2 and q3. `point_order[r]`
/// is the input index of the point playing role `q_{r+1}`.
///
/// Invariants: a1 >= a2, b1 >= b2, c1 >= c2, and a1 is the global maximum
/// weight.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pairing {
    pub point_order: [usize; 3],
    pub a_pair: (u64, u64),
    pub b_pair: (u64, u64),
    pub c_pair: (u64, u64),
}

/// The three admissible patterns for the c-pair in terms of (a1, b1, b2).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CaseLabel {
    /// {c1, c2} = {a1 - b1, a1 - b2}
    Case1,
    /// {c1, c2} = {b1, b2}
    Case2,
    /// {c1, c2} = {a1 - b1, b2} with b2 != a1 / 2
    Case3,
}

impl CaseLabel {
    pub fn index(self) -> usize {
        match self {
            CaseLabel::Case1 => 0,
            CaseLabel::Case2 => 1,
            CaseLabel::Case3 => 2,
        }
    }
}

/// Per-point counts of weights divisible by a fixed divisor a > 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityProfile {
    pub divisor: u64,
    pub counts: Vec<usize>,
}

const PERMS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

fn sorted_pair(x: u64, y: u64) -> (u64, u64) {
    if x >= y {
        (x, y)
    } else {
        (y, x)
    }
}

/// Enumerates all distinct role assignments whose reconstruction reproduces
/// the three input multisets. Distinct index choices inducing the same
/// (point_order, pairs) tuple are reported once. Empty when no pairing
/// exists.
pub fn enumerate_pairings(data: &FixedPointData) -> Result<Vec<Pairing>, ConstraintError> {
    if data.half_dimension() != 4 {
        return Err(ConstraintError::HalfDimension(data.half_dimension()));
    }
    if data.points().len() != 3 {
        return Err(ConstraintError::PointCount(data.points().len()));
    }
    let w: Vec<&[u64]> = data.points().iter().map(|p| p.weights.as_slice()).collect();
    let global_max = data.max_weight();
    let mut found: BTreeSet<Pairing> = BTreeSet::new();
    for order in PERMS {
        let q1 = w[order[0]];
        let q2 = w[order[1]];
        let q3 = w[order[2]];
        for i in 0..4 {
            for j in (i + 1)..4 {
                let a_pair = sorted_pair(q1[i], q1[j]);
                if a_pair.0 != global_max {
                    continue;
                }
                let rest: Vec<u64> = (0..4).filter(|&k| k != i && k != j).map(|k| q1[k]).collect();
                let b_pair = sorted_pair(rest[0], rest[1]);
                let Some(c_rest) = multiset_minus(q2, &[a_pair.0, a_pair.1]) else {
                    continue;
                };
                let c_pair = (c_rest[0], c_rest[1]);
                let mut expected = vec![b_pair.0, b_pair.1, c_pair.0, c_pair.1];
                expected.sort_unstable_by(|x, y| y.cmp(x));
                if expected != q3 {
                    continue;
                }
                found.insert(Pairing {
                    point_order: order,
                    a_pair,
                    b_pair,
                    c_pair,
                });
            }
        }
    }
    Ok(found.into_iter().collect())
}

/// Counts, at each point, the weights divisible by `a`.
pub fn multiplicity_profile(
    data: &FixedPointData,
    a: u64,
) -> Result<MultiplicityProfile, ConstraintError> {
    if a < 2 {
        return Err(ConstraintError::DivisorTooSmall(a));
    }
    let counts = data
        .points()
        .iter()
        .map(|p| p.weights.iter().filter(|w| w % a == 0).count())
        .collect();
    Ok(MultiplicityProfile { divisor: a, counts })
}

/// Checks, for every divisor a from 2 to the maximum weight, that the
/// nonzero multiplicity counts are all equal and that no divisor appears at
/// exactly one point. Returns the smallest violating divisor, or `None`
/// when consistent.
pub fn first_multiplicity_violation(data: &FixedPointData) -> Option<u64> {
    for a in 2..=data.max_weight() {
        let profile = multiplicity_profile(data, a).expect("a >= 2");
        let nonzero: Vec<usize> = profile.counts.iter().copied().filter(|&c| c > 0).collect();
        if nonzero.is_empty() {
            continue;
        }
        // A divisor present at exactly one point would put that point on a
        // fixed submanifold component with a single fixed point.
        if nonzero.len() == 1 {
            return Some(a);
        }
        if nonzero.iter().any(|&c| c != nonzero[0]) {
            return Some(a);
        }
    }
    None
}

/// Images of the weights under w -> min(w mod a, a - w mod a), the
/// factorization of positive integers through Z_a / (+-1). Returned sorted
/// descending, as a multiset.
pub fn residues_mod_a(weights: &WeightMultiset, a: u64) -> Result<Vec<u64>, ConstraintError> {
    if a < 2 {
        return Err(ConstraintError::DivisorTooSmall(a));
    }
    let mut out: Vec<u64> = weights
        .iter()
        .map(|w| {
            let r = w % a;
            r.min(a - r)
        })
        .collect();
    out.sort_unstable_by(|x, y| y.cmp(x));
    Ok(out)
}

fn sorted_i128_pair(x: i128, y: i128) -> (i128, i128) {
    if x >= y {
        (x, y)
    } else {
        (y, x)
    }
}

/// Matches the c-pair against the three admissible patterns; when several
/// patterns match, the lowest case number wins. `None` marks a pairing
/// matching no pattern, which is inadmissible.
pub fn classify_case(p: &Pairing) -> Option<CaseLabel> {
    let a1 = p.a_pair.0 as i128;
    let (b1, b2) = (p.b_pair.0 as i128, p.b_pair.1 as i128);
    let c = sorted_i128_pair(p.c_pair.0 as i128, p.c_pair.1 as i128);
    if c == sorted_i128_pair(a1 - b1, a1 - b2) {
        return Some(CaseLabel::Case1);
    }
    if c == (b1, b2) {
        return Some(CaseLabel::Case2);
    }
    if c == sorted_i128_pair(a1 - b1, b2) && 2 * b2 != a1 {
        return Some(CaseLabel::Case3);
    }
    None
}

/// True iff both signs occur among the points. A vanishing unit-class sum
/// needs terms of both signs.
pub fn sign_pattern_valid(data: &FixedPointData) -> bool {
    let has = |s: Sign| data.points().iter().any(|p| p.sign == s);
    has(Sign::Plus) && has(Sign::Minus)
}
