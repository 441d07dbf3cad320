//! JSON configuration format: one fixed-point configuration per file, with
//! a `dimension` field and a list of `{weights, sign}` records.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::data::{FixedPoint, FixedPointData, Sign, WeightMultiset};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub dimension: u64,
    pub points: Vec<ConfigPoint>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigPoint {
    pub weights: Vec<u64>,
    pub sign: i8,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConfigError {
    #[error("dimension: expected a positive even integer, got {0}")]
    BadDimension(u64),
    #[error("points: at least one fixed point is required")]
    NoPoints,
    #[error("points[{index}].weights: expected {expected} weights, got {got}")]
    WeightCount {
        index: usize,
        expected: usize,
        got: usize,
    },
    #[error("points[{index}].weights[{position}]: weights must be positive")]
    ZeroWeight { index: usize, position: usize },
    #[error("points[{index}].sign: expected +1 or -1, got {got}")]
    BadSign { index: usize, got: i8 },
}

impl ConfigFile {
    /// Validates field by field with a field-precise error.
    pub fn to_data(&self) -> Result<FixedPointData, ConfigError> {
        if self.dimension == 0 || self.dimension % 2 != 0 {
            return Err(ConfigError::BadDimension(self.dimension));
        }
        let n = (self.dimension / 2) as usize;
        if self.points.is_empty() {
            return Err(ConfigError::NoPoints);
        }
        let mut points = Vec::with_capacity(self.points.len());
        for (index, p) in self.points.iter().enumerate() {
            if p.weights.len() != n {
                return Err(ConfigError::WeightCount {
                    index,
                    expected: n,
                    got: p.weights.len(),
                });
            }
            if let Some(position) = p.weights.iter().position(|&w| w == 0) {
                return Err(ConfigError::ZeroWeight { index, position });
            }
            let sign = Sign::from_i8(p.sign).ok_or(ConfigError::BadSign {
                index,
                got: p.sign,
            })?;
            let weights =
                WeightMultiset::new(p.weights.clone()).expect("zero weights checked above");
            points.push(FixedPoint::new(weights, sign));
        }
        Ok(FixedPointData::new(n, points).expect("point shape checked above"))
    }

    pub fn from_data(data: &FixedPointData) -> ConfigFile {
        ConfigFile {
            dimension: 2 * data.half_dimension() as u64,
            points: data
                .points()
                .iter()
                .map(|p| ConfigPoint {
                    weights: p.weights.as_slice().to_vec(),
                    sign: p.sign.as_i8(),
                })
                .collect(),
        }
    }
}
