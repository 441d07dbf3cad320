//! Fixed-point data model: weight multisets, signed fixed points, and the
//! normalization / canonicalization utilities shared by every other module.
//!
//! All arithmetic downstream of these types is exact; the types themselves
//! make degenerate inputs (zero weights, empty point lists) unrepresentable.
//! Every type here is an immutable value after construction.

use num::Integer;

use crate::errors::DataError;

/// Exact arbitrary-precision fraction used for all localization arithmetic.
pub type ExactRational = num::BigRational;

/// Orientation sign of a fixed point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_i8(v: i8) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }
}

/// Multiset of positive integer weights, stored in descending order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightMultiset(Vec<u64>);

impl WeightMultiset {
    /// Builds a multiset, rejecting zero weights at construction time.
    pub fn new(mut weights: Vec<u64>) -> Result<Self, DataError> {
        if weights.is_empty() {
            return Err(DataError::EmptyWeights);
        }
        if weights.contains(&0) {
            return Err(DataError::ZeroWeight);
        }
        weights.sort_unstable_by(|a, b| b.cmp(a));
        Ok(WeightMultiset(weights))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().copied()
    }

    /// GCD of all weights in the multiset.
    pub fn gcd(&self) -> u64 {
        self.0.iter().fold(0u64, |g, &w| g.gcd(&w))
    }

    pub fn max_weight(&self) -> u64 {
        self.0[0]
    }

    /// Exact product of all weights.
    pub fn product(&self) -> num::BigInt {
        self.0
            .iter()
            .fold(num::BigInt::from(1u8), |p, &w| p * num::BigInt::from(w))
    }
}

/// A fixed point: its tangent weights plus an orientation sign.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FixedPoint {
    pub weights: WeightMultiset,
    pub sign: Sign,
}

impl FixedPoint {
    pub fn new(weights: WeightMultiset, sign: Sign) -> FixedPoint {
        FixedPoint { weights, sign }
    }

    pub fn flipped(&self) -> FixedPoint {
        FixedPoint {
            weights: self.weights.clone(),
            sign: self.sign.flipped(),
        }
    }
}

/// Weight data of a circle action on a 2n-manifold with isolated fixed
/// points: n plus an ordered list of signed weight multisets.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FixedPointData {
    half_dimension: usize,
    points: Vec<FixedPoint>,
}

impl FixedPointData {
    /// Builds fixed-point data, checking that every point carries exactly
    /// `half_dimension` weights and that at least one point exists.
    pub fn new(half_dimension: usize, points: Vec<FixedPoint>) -> Result<Self, DataError> {
        if points.is_empty() {
            return Err(DataError::NoPoints);
        }
        for (i, p) in points.iter().enumerate() {
            if p.weights.len() != half_dimension {
                return Err(DataError::WeightCount {
                    point: i,
                    got: p.weights.len(),
                    expected: half_dimension,
                });
            }
        }
        Ok(FixedPointData {
            half_dimension,
            points,
        })
    }

    pub fn half_dimension(&self) -> usize {
        self.half_dimension
    }

    pub fn points(&self) -> &[FixedPoint] {
        &self.points
    }

    pub fn max_weight(&self) -> u64 {
        self.points
            .iter()
            .map(|p| p.weights.max_weight())
            .max()
            .unwrap()
    }

    /// GCD of every weight across all points.
    pub fn global_gcd(&self) -> u64 {
        self.points
            .iter()
            .flat_map(|p| p.weights.iter())
            .fold(0u64, |g, w| g.gcd(&w))
    }

    /// GCD of the weight multiset at each point, in point order.
    pub fn pointwise_gcd(&self) -> Vec<u64> {
        self.points.iter().map(|p| p.weights.gcd()).collect()
    }

    /// Divides all weights by their global GCD, so the output corresponds
    /// to the faithful action obtained by factoring out the trivially
    /// acting finite subgroup. Signs are unchanged. Idempotent.
    pub fn normalize_faithful(&self) -> FixedPointData {
        let g = self.global_gcd();
        if g <= 1 {
            return self.clone();
        }
        let points = self
            .points
            .iter()
            .map(|p| FixedPoint {
                weights: WeightMultiset::new(p.weights.iter().map(|w| w / g).collect())
                    .expect("dividing positive weights by their gcd keeps them positive"),
                sign: p.sign,
            })
            .collect();
        FixedPointData {
            half_dimension: self.half_dimension,
            points,
        }
    }

    fn flipped(&self) -> FixedPointData {
        FixedPointData {
            half_dimension: self.half_dimension,
            points: self.points.iter().map(FixedPoint::flipped).collect(),
        }
    }

    /// Deduplication representative: weights sorted descending within each
    /// point (a multiset invariant already), points sorted by (weights,
    /// sign), and the global orientation flipped if needed so the majority
    /// sign is `+`. On a tie the orientation whose first point carries `+`
    /// wins, then the lexicographically smaller point list. Idempotent and
    /// invariant under point permutation and global sign flip.
    pub fn canonical_form(&self) -> FixedPointData {
        let sort = |mut d: FixedPointData| {
            d.points.sort();
            d
        };
        let orig = sort(self.clone());
        let flip = sort(self.flipped());
        let plus = |d: &FixedPointData| {
            d.points.iter().filter(|p| p.sign == Sign::Plus).count() * 2
        };
        let m = self.points.len();
        if plus(&orig) > m {
            orig
        } else if plus(&flip) > m {
            flip
        } else {
            let of = orig.points[0].sign == Sign::Plus;
            let ff = flip.points[0].sign == Sign::Plus;
            if of && !ff {
                orig
            } else if ff && !of {
                flip
            } else if orig <= flip {
                orig
            } else {
                flip
            }
        }
    }
}

/// Removes `sub` from `from` as multisets; `None` if `sub` is not contained.
pub(crate) fn multiset_minus(from: &[u64], sub: &[u64]) -> Option<Vec<u64>> {
    let mut rest: Vec<u64> = from.to_vec();
    for &s in sub {
        let pos = rest.iter().position(|&w| w == s)?;
        rest.swap_remove(pos);
    }
    rest.sort_unstable_by(|a, b| b.cmp(a));
    Some(rest)
}
