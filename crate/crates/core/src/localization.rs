//! Localization sums over fixed-point data: a signed sum over fixed points
//! of a symmetric polynomial in the squared weights divided by the product
//! of the weights. Evaluated exactly, these sums are the Pontryagin numbers
//! of the underlying manifold.

use num::{BigInt, One, Zero};

use crate::data::{ExactRational, FixedPointData, Sign, WeightMultiset};
use crate::errors::SigmaError;

/// One term of a symmetric polynomial in the elementary symmetric basis:
/// `coefficient * e_{k1} * e_{k2} * ...` with the `e_k` evaluated on the
/// squared weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaTerm {
    pub coefficient: i64,
    /// Indices of the elementary symmetric factors, each >= 1.
    pub monomial: Vec<usize>,
}

impl SigmaTerm {
    fn degree(&self) -> usize {
        self.monomial.iter().sum()
    }
}

/// An integer-coefficient polynomial in elementary symmetric functions,
/// homogeneous with respect to the grading `deg e_k = k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricPolynomialSpec {
    terms: Vec<SigmaTerm>,
    degree: usize,
}

impl SymmetricPolynomialSpec {
    /// Validates index positivity and homogeneity. An empty monomial is the
    /// degree-0 constant 1; an empty term list is the zero polynomial.
    pub fn new(terms: Vec<(i64, Vec<usize>)>) -> Result<Self, SigmaError> {
        let terms: Vec<SigmaTerm> = terms
            .into_iter()
            .map(|(coefficient, mut monomial)| {
                monomial.sort_unstable();
                SigmaTerm {
                    coefficient,
                    monomial,
                }
            })
            .collect();
        for t in &terms {
            if t.monomial.contains(&0) {
                return Err(SigmaError::ZeroIndex);
            }
        }
        let degree = terms.first().map(SigmaTerm::degree).unwrap_or(0);
        for t in &terms {
            if t.degree() != degree {
                return Err(SigmaError::MixedDegree {
                    first: degree,
                    other: t.degree(),
                });
            }
        }
        Ok(SymmetricPolynomialSpec { terms, degree })
    }

    /// The constant polynomial 1.
    pub fn unit() -> Self {
        Self::new(vec![(1, vec![])]).unwrap()
    }

    /// The single elementary symmetric function `e_k`.
    pub fn elementary(k: usize) -> Self {
        Self::new(vec![(1, vec![k])]).unwrap()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &[SigmaTerm] {
        &self.terms
    }
}

/// Values `e_0 .. e_n` of the elementary symmetric functions at the squared
/// weights, via the product expansion of `prod (1 + w^2 x)`.
fn elementary_symmetric_of_squares(weights: &WeightMultiset) -> Vec<BigInt> {
    let n = weights.len();
    let mut e = vec![BigInt::zero(); n + 1];
    e[0] = BigInt::one();
    for w in weights.iter() {
        let sq = BigInt::from(w) * BigInt::from(w);
        for k in (1..=n).rev() {
            let add = &e[k - 1] * &sq;
            e[k] += add;
        }
    }
    e
}

/// Evaluates `sigma` at the squared weights. Errors when a monomial index
/// exceeds the number of variables.
pub fn eval_sigma(
    sigma: &SymmetricPolynomialSpec,
    weights: &WeightMultiset,
) -> Result<BigInt, SigmaError> {
    let n = weights.len();
    for t in sigma.terms() {
        if let Some(&k) = t.monomial.iter().find(|&&k| k > n) {
            return Err(SigmaError::IndexOutOfRange { k, n });
        }
    }
    let e = elementary_symmetric_of_squares(weights);
    let mut total = BigInt::zero();
    for t in sigma.terms() {
        let mut prod = BigInt::from(t.coefficient);
        for &k in &t.monomial {
            prod *= &e[k];
        }
        total += prod;
    }
    Ok(total)
}

/// The localization sum `sum_i sign(q_i) * sigma(squared weights at q_i) /
/// prod(weights at q_i)`, computed exactly.
pub fn localization_sum(
    data: &FixedPointData,
    sigma: &SymmetricPolynomialSpec,
) -> Result<ExactRational, SigmaError> {
    let mut total = ExactRational::zero();
    for p in data.points() {
        let num = eval_sigma(sigma, &p.weights)?;
        let num = match p.sign {
            Sign::Plus => num,
            Sign::Minus => -num,
        };
        total += ExactRational::new(num, p.weights.product());
    }
    Ok(total)
}

/// The degree <= 2 characteristic numbers of 8-dimensional data, all exact.
///
/// `signature_candidate = (7 p2 - p1^2) / 45` is the degree-2 L-genus, an
/// external consistency probe rather than a localization quantity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PontryaginReport {
    pub unit_sum: ExactRational,
    pub p1_sum: ExactRational,
    pub p1_squared: ExactRational,
    pub p2: ExactRational,
    pub signature_candidate: ExactRational,
}

/// Evaluates the localization sum for sigma in {1, e1, e1^2, e2} on
/// 8-dimensional data. Errors when the half-dimension is not 4.
pub fn pontryagin_report(data: &FixedPointData) -> Result<PontryaginReport, SigmaError> {
    if data.half_dimension() != 4 {
        return Err(SigmaError::DimensionMismatch {
            n: data.half_dimension(),
        });
    }
    let unit_sum = localization_sum(data, &SymmetricPolynomialSpec::unit())?;
    let p1_sum = localization_sum(data, &SymmetricPolynomialSpec::elementary(1))?;
    let p1_squared = localization_sum(data, &SymmetricPolynomialSpec::new(vec![(1, vec![1, 1])])?)?;
    let p2 = localization_sum(data, &SymmetricPolynomialSpec::elementary(2))?;
    let signature_candidate = (ExactRational::from(BigInt::from(7)) * &p2 - &p1_squared)
        / ExactRational::from(BigInt::from(45));
    Ok(PontryaginReport {
        unit_sum,
        p1_sum,
        p1_squared,
        p2,
        signature_candidate,
    })
}
