//! The two circle-action families on the quaternionic projective plane:
//! weight generation from doubled parameters, sign solving, and parameter
//! recovery from admissible weight data.

use num::{BigInt, Zero};

use crate::data::{multiset_minus, FixedPoint, FixedPointData, Sign, WeightMultiset};
use crate::errors::{Hp2Error, RecoverError, SignSolveError};

/// Which of the two action families a parameter triple belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// All exponents are integers.
    Standard,
    /// All exponents are half-integers (odd halves).
    SemiInteger,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Standard => "standard",
            Family::SemiInteger => "semi-integer",
        }
    }
}

/// Doubled exponent triple (d1, d2, d3) = (2 p1, 2 p2, 2 p3) with
/// d1 < d2 < d3 and all entries of one parity. All-even triples encode the
/// standard family, all-odd the semi-integer family; the shared parity
/// keeps every induced weight (d_j +- d_i) / 2 a positive integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hp2ActionParams {
    doubled: (u64, u64, u64),
}

impl Hp2ActionParams {
    pub fn new(d1: u64, d2: u64, d3: u64) -> Result<Self, Hp2Error> {
        if !(d1 < d2 && d2 < d3) {
            return Err(Hp2Error::NotStrictlyIncreasing(d1, d2, d3));
        }
        if d1 % 2 != d2 % 2 || d2 % 2 != d3 % 2 {
            return Err(Hp2Error::MixedParity(d1, d2, d3));
        }
        Ok(Hp2ActionParams {
            doubled: (d1, d2, d3),
        })
    }

    pub fn doubled(&self) -> (u64, u64, u64) {
        self.doubled
    }

    pub fn family(&self) -> Family {
        if self.doubled.0 % 2 == 0 {
            Family::Standard
        } else {
            Family::SemiInteger
        }
    }

    /// Weight multisets at the three coordinate fixed points, before sign
    /// assignment and normalization: {|p2 +- p1|, |p3 +- p1|} at (1:0:0),
    /// {|p2 +- p1|, |p3 +- p2|} at (0:1:0), {|p3 +- p2|, |p3 +- p1|} at
    /// (0:0:1), in doubled arithmetic.
    pub fn raw_weights(&self) -> [[u64; 4]; 3] {
        let (d1, d2, d3) = self.doubled;
        let w21 = ((d2 + d1) / 2, (d2 - d1) / 2);
        let w31 = ((d3 + d1) / 2, (d3 - d1) / 2);
        let w32 = ((d3 + d2) / 2, (d3 - d2) / 2);
        [
            [w21.0, w21.1, w31.0, w31.1],
            [w21.0, w21.1, w32.0, w32.1],
            [w32.0, w32.1, w31.0, w31.1],
        ]
    }

    /// GCD of all twelve induced weights. 1 exactly when the action is
    /// faithful.
    pub fn induced_weight_gcd(&self) -> u64 {
        use num::Integer;
        self.raw_weights()
            .iter()
            .flatten()
            .fold(0u64, |g, w| g.gcd(w))
    }

    pub fn is_primitive(&self) -> bool {
        self.induced_weight_gcd() == 1
    }

    /// The primitive triple obtained by dividing out the induced weight
    /// GCD; encodes the faithful action left after factoring out the
    /// trivially acting subgroup.
    pub fn reduced(&self) -> Hp2ActionParams {
        let g = self.induced_weight_gcd();
        if g <= 1 {
            return *self;
        }
        let (d1, d2, d3) = self.doubled;
        Hp2ActionParams::new(d1 / g, d2 / g, d3 / g)
            .expect("the induced weight gcd divides each doubled parameter")
    }

    /// The exponents p_i rendered as integers or exact halves.
    pub fn exponents_string(&self) -> String {
        let half = |d: u64| {
            if d % 2 == 0 {
                format!("{}", d / 2)
            } else {
                format!("{d}/2")
            }
        };
        let (d1, d2, d3) = self.doubled;
        format!("({}, {}, {})", half(d1), half(d2), half(d3))
    }
}

/// Finds the sign triple making the unit-class localization sum vanish,
/// returned in majority-plus form. Unique up to global flip for genuine
/// action data; ambiguity is guarded against anyway.
pub fn sign_solve(multisets: &[WeightMultiset; 3]) -> Result<[Sign; 3], SignSolveError> {
    let prods: Vec<BigInt> = multisets.iter().map(WeightMultiset::product).collect();
    let mut hits: Vec<usize> = Vec::new();
    for minus in 0..3 {
        // sum of sign_i / prod_i over the common denominator prod_1*2*3
        let mut numerator = BigInt::zero();
        for i in 0..3 {
            let term = &prods[(i + 1) % 3] * &prods[(i + 2) % 3];
            if i == minus {
                numerator -= term;
            } else {
                numerator += term;
            }
        }
        if numerator.is_zero() {
            hits.push(minus);
        }
    }
    match hits.as_slice() {
        [] => Err(SignSolveError::NoSolution),
        [minus] => {
            let mut signs = [Sign::Plus; 3];
            signs[*minus] = Sign::Minus;
            Ok(signs)
        }
        _ => Err(SignSolveError::Ambiguous),
    }
}

/// Generates the canonical fixed-point data of the action encoded by
/// `params`: the three coordinate-point weight multisets with solved signs,
/// normalized to a faithful action and put in canonical form.
pub fn weights_from_params(params: &Hp2ActionParams) -> FixedPointData {
    let multisets = params.raw_weights().map(|w| {
        WeightMultiset::new(w.to_vec())
            .expect("strict parameter ordering keeps every induced weight positive")
    });
    let signs =
        sign_solve(&multisets).expect("family weight data admits a unique sign assignment");
    let points = multisets
        .into_iter()
        .zip(signs)
        .map(|(weights, sign)| FixedPoint::new(weights, sign))
        .collect();
    FixedPointData::new(4, points)
        .expect("each coordinate point carries four weights")
        .normalize_faithful()
        .canonical_form()
}

/// Recovers the doubled parameters from admissible data: relabels points so
/// the minority-sign point is q1, splits its weights as {a1, a2, b1, b2}
/// with a1 = a2 + b1 + b2, and inverts the identities d3 = a1 + a2,
/// d2 = a1 - a2, d1 = b1 - b2. Also returns the role permutation (input
/// index of q1, q2, q3).
pub fn recover_params(
    data: &FixedPointData,
) -> Result<(Hp2ActionParams, [usize; 3]), RecoverError> {
    if data.half_dimension() != 4 {
        return Err(crate::errors::ConstraintError::HalfDimension(data.half_dimension()).into());
    }
    if data.points().len() != 3 {
        return Err(crate::errors::ConstraintError::PointCount(data.points().len()).into());
    }
    let plus_count = data
        .points()
        .iter()
        .filter(|p| p.sign == Sign::Plus)
        .count();
    let minority_sign = match plus_count {
        1 => Sign::Plus,
        2 => Sign::Minus,
        _ => return Err(RecoverError::NotClassifiable),
    };
    let q1_idx = data
        .points()
        .iter()
        .position(|p| p.sign == minority_sign)
        .expect("minority sign occurs once");
    let others: Vec<usize> = (0..3).filter(|&i| i != q1_idx).collect();
    let q1 = data.points()[q1_idx].weights.as_slice();
    let a1 = q1[0];
    for (i2, i3) in [(others[0], others[1]), (others[1], others[0])] {
        let q2 = data.points()[i2].weights.as_slice();
        let q3 = data.points()[i3].weights.as_slice();
        for a2_pos in 1..4 {
            let a2 = q1[a2_pos];
            let rest: Vec<u64> = (1..4).filter(|&k| k != a2_pos).map(|k| q1[k]).collect();
            let (b1, b2) = if rest[0] >= rest[1] {
                (rest[0], rest[1])
            } else {
                (rest[1], rest[0])
            };
            if a1 != a2 + b1 + b2 {
                continue;
            }
            let Some(c) = multiset_minus(q2, &[a1, a2]) else {
                continue;
            };
            let mut expected = vec![b1, b2, c[0], c[1]];
            expected.sort_unstable_by(|x, y| y.cmp(x));
            if expected != q3 {
                continue;
            }
            if let Ok(params) = Hp2ActionParams::new(b1 - b2, a1 - a2, a1 + a2) {
                return Ok((params, [q1_idx, i2, i3]));
            }
        }
    }
    Err(RecoverError::NotClassifiable)
}
