//! Exact verification toolkit for smooth circle actions with isolated
//! fixed points on closed oriented manifolds, specialised to dimension 8
//! with three fixed points.
//!
//! The crate models an action by its fixed-point weight data, evaluates
//! localization sums for Pontryagin numbers in exact rational arithmetic,
//! implements the combinatorial necessary conditions on such data, and
//! exhaustively checks that every admissible configuration up to a weight
//! bound carries the weights of one of the two circle-action families on
//! the quaternionic projective plane.
//!
//! Module map:
//! - [`data`] — weight multisets, signed fixed points, normalization and
//!   canonical forms;
//! - [`localization`] — localization sums and the Pontryagin-number report;
//! - [`constraints`] — weight pairing, multiplicity profiles, residues, and
//!   the three-case pattern classification;
//! - [`hp2`] — the standard and semi-integer action families;
//! - [`verifier`] — the admissibility pipeline, classifier, and bounded
//!   exhaustive search;
//! - [`config`] — the JSON file format used by the CLI.

pub mod config;
pub mod constraints;
pub mod data;
pub mod errors;
pub mod hp2;
pub mod localization;
pub mod verifier;

pub use data::{ExactRational, FixedPoint, FixedPointData, Sign, WeightMultiset};
pub use hp2::{Family, Hp2ActionParams};
pub use localization::{PontryaginReport, SymmetricPolynomialSpec};
pub use verifier::{AdmissibilityReport, ClassifyOutcome, MatchResult, SearchSummary};

#[cfg(test)]
pub(crate) mod test_util {
    use crate::data::{FixedPoint, FixedPointData, Sign, WeightMultiset};

    /// Builds fixed-point data from literal weight lists and +-1 signs.
    pub(crate) fn data(n: usize, points: &[(&[u64], i8)]) -> FixedPointData {
        FixedPointData::new(
            n,
            points
                .iter()
                .map(|(w, s)| {
                    FixedPoint::new(
                        WeightMultiset::new(w.to_vec()).unwrap(),
                        Sign::from_i8(*s).unwrap(),
                    )
                })
                .collect(),
        )
        .unwrap()
    }
}
