//! Shared strategies and property checks used by both the property suite
//! and the acceptance suite.

#![allow(dead_code)]

use num::{BigInt, BigRational, Zero};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

use hp2_weights::constraints::enumerate_pairings;
use hp2_weights::data::{FixedPoint, FixedPointData, Sign, WeightMultiset};
use hp2_weights::localization::{localization_sum, SymmetricPolynomialSpec};

pub fn build_data(n: usize, points: &[(&[u64], i8)]) -> FixedPointData {
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

pub fn arb_data() -> impl Strategy<Value = FixedPointData> {
    (1usize..=5, 1usize..=4).prop_flat_map(|(n, m)| {
        prop::collection::vec(
            (prop::collection::vec(1u64..=20, n), prop::bool::ANY),
            m,
        )
        .prop_map(move |pts| {
            FixedPointData::new(
                n,
                pts.into_iter()
                    .map(|(w, s)| {
                        FixedPoint::new(
                            WeightMultiset::new(w).unwrap(),
                            if s { Sign::Plus } else { Sign::Minus },
                        )
                    })
                    .collect(),
            )
            .unwrap()
        })
    })
}

/// Greedy cut of a seed stream into a partition of `degree` with parts at
/// most `max_part`.
fn cut_partition(seed: &[usize], degree: usize, max_part: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut rem = degree;
    let mut i = 0;
    while rem > 0 {
        let raw = seed.get(i).copied().unwrap_or(1);
        let p = raw.clamp(1, max_part.min(rem));
        out.push(p);
        rem -= p;
        i += 1;
    }
    out
}

pub type LinearityInput = (FixedPointData, (i64, Vec<usize>), (i64, Vec<usize>));

/// Data plus two equal-degree monomials with coefficients.
pub fn linearity_input() -> impl Strategy<Value = LinearityInput> {
    (2usize..=5, 1usize..=4).prop_flat_map(|(n, m)| {
        (
            prop::collection::vec(
                (prop::collection::vec(1u64..=15, n), prop::bool::ANY),
                m,
            ),
            1usize..=2 * n,
            prop::collection::vec(1..=n, 12),
            prop::collection::vec(1..=n, 12),
            -20i64..=20,
            -20i64..=20,
        )
            .prop_map(move |(pts, d, s1, s2, c1, c2)| {
                let data = FixedPointData::new(
                    n,
                    pts.into_iter()
                        .map(|(w, s)| {
                            FixedPoint::new(
                                WeightMultiset::new(w).unwrap(),
                                if s { Sign::Plus } else { Sign::Minus },
                            )
                        })
                        .collect(),
                )
                .unwrap();
                (
                    data,
                    (c1, cut_partition(&s1, d, n)),
                    (c2, cut_partition(&s2, d, n)),
                )
            })
    })
}

pub fn check_linearity(input: LinearityInput) -> Result<(), TestCaseError> {
    let (data, t1, t2) = input;
    let combined = SymmetricPolynomialSpec::new(vec![t1.clone(), t2.clone()]).unwrap();
    let single1 = SymmetricPolynomialSpec::new(vec![t1]).unwrap();
    let single2 = SymmetricPolynomialSpec::new(vec![t2]).unwrap();
    let lhs = localization_sum(&data, &combined).unwrap();
    let rhs = localization_sum(&data, &single1).unwrap() + localization_sum(&data, &single2).unwrap();
    prop_assert_eq!(lhs, rhs);
    Ok(())
}

pub type HomogeneityInput = (FixedPointData, Vec<usize>, u64);

pub fn homogeneity_input() -> impl Strategy<Value = HomogeneityInput> {
    (2usize..=5, 1usize..=4).prop_flat_map(|(n, m)| {
        (
            prop::collection::vec(
                (prop::collection::vec(1u64..=12, n), prop::bool::ANY),
                m,
            ),
            0usize..=n,
            prop::collection::vec(1..=n, 8),
            2u64..=4,
        )
            .prop_map(move |(pts, d, seed, scale)| {
                let data = FixedPointData::new(
                    n,
                    pts.into_iter()
                        .map(|(w, s)| {
                            FixedPoint::new(
                                WeightMultiset::new(w).unwrap(),
                                if s { Sign::Plus } else { Sign::Minus },
                            )
                        })
                        .collect(),
                )
                .unwrap();
                (data, cut_partition(&seed, d, n), scale)
            })
    })
}

/// Scaling all weights by s multiplies a degree-d localization sum by
/// s^(2d - n).
pub fn check_homogeneity(input: HomogeneityInput) -> Result<(), TestCaseError> {
    let (data, monomial, scale) = input;
    let n = data.half_dimension();
    let d: usize = monomial.iter().sum();
    let sigma = SymmetricPolynomialSpec::new(vec![(1, monomial)]).unwrap();
    let scaled = FixedPointData::new(
        n,
        data.points()
            .iter()
            .map(|p| {
                FixedPoint::new(
                    WeightMultiset::new(p.weights.iter().map(|w| w * scale).collect()).unwrap(),
                    p.sign,
                )
            })
            .collect(),
    )
    .unwrap();
    let base = localization_sum(&data, &sigma).unwrap();
    let scaled_sum = localization_sum(&scaled, &sigma).unwrap();
    let factor = BigRational::new(
        BigInt::from(scale).pow(2 * d as u32),
        BigInt::from(scale).pow(n as u32),
    );
    prop_assert_eq!(scaled_sum, base * factor);
    Ok(())
}

pub type CanonicalInput = (FixedPointData, Vec<usize>);

pub fn canonical_input() -> impl Strategy<Value = CanonicalInput> {
    arb_data().prop_flat_map(|d| {
        let m = d.points().len();
        (Just(d), Just((0..m).collect::<Vec<usize>>()).prop_shuffle())
    })
}

pub fn check_canonical(input: CanonicalInput) -> Result<(), TestCaseError> {
    let (data, perm) = input;
    let canonical = data.canonical_form();
    prop_assert_eq!(canonical.canonical_form(), canonical.clone());
    let permuted = FixedPointData::new(
        data.half_dimension(),
        perm.iter().map(|&i| data.points()[i].clone()).collect(),
    )
    .unwrap();
    prop_assert_eq!(permuted.canonical_form(), canonical.clone());
    let flipped = FixedPointData::new(
        data.half_dimension(),
        data.points().iter().map(FixedPoint::flipped).collect(),
    )
    .unwrap();
    prop_assert_eq!(flipped.canonical_form(), canonical);
    Ok(())
}

pub fn check_normalize(data: FixedPointData) -> Result<(), TestCaseError> {
    let once = data.normalize_faithful();
    prop_assert_eq!(once.normalize_faithful(), once.clone());
    prop_assert_eq!(once.global_gcd(), 1);
    Ok(())
}

pub type PairingInput = (u64, u64, u64, u64, u64, u64);

/// (a1, a2, b1, b2, c1, c2) with a1 maximal and pairs sorted.
pub fn pairing_input() -> impl Strategy<Value = PairingInput> {
    (2u64..=12).prop_flat_map(|a1| {
        (1..=a1, 1..=a1, 1..=a1).prop_flat_map(move |(a2, b1, c1)| {
            (
                Just(a1),
                Just(a2),
                Just(b1),
                1..=b1,
                Just(c1),
                1..=c1,
            )
        })
    })
}

pub fn check_pairing_roundtrip(input: PairingInput) -> Result<(), TestCaseError> {
    let (a1, a2, b1, b2, c1, c2) = input;
    let data = build_data(
        4,
        &[
            (&[a1, a2, b1, b2], -1),
            (&[a1, a2, c1, c2], 1),
            (&[b1, b2, c1, c2], 1),
        ],
    );
    let pairings = enumerate_pairings(&data).unwrap();
    // The constructed assignment is among the results.
    let found = pairings.iter().any(|p| {
        p.point_order == [0, 1, 2]
            && p.a_pair == (a1, a2)
            && p.b_pair == (b1, b2)
            && p.c_pair == (c1, c2)
    });
    prop_assert!(found, "constructed pairing missing for {:?}", input);
    // Every reported pairing reconstructs the input multisets exactly.
    for p in &pairings {
        let expect = |pair1: (u64, u64), pair2: (u64, u64)| {
            let mut v = vec![pair1.0, pair1.1, pair2.0, pair2.1];
            v.sort_unstable_by(|x, y| y.cmp(x));
            v
        };
        let slices = [
            expect(p.a_pair, p.b_pair),
            expect(p.a_pair, p.c_pair),
            expect(p.b_pair, p.c_pair),
        ];
        for (role, want) in slices.iter().enumerate() {
            let got = data.points()[p.point_order[role]].weights.as_slice();
            prop_assert_eq!(got, want.as_slice());
        }
    }
    Ok(())
}

pub type RationalTriple = (BigRational, BigRational, BigRational);

pub fn rational_input() -> impl Strategy<Value = RationalTriple> {
    let r = (-1000i64..=1000, 1i64..=1000)
        .prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)));
    (r.clone(), r.clone(), r)
}

pub fn check_rational_axioms(input: RationalTriple) -> Result<(), TestCaseError> {
    let (a, b, c) = input;
    prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
    prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
    prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
    prop_assert!((&a + (-&a)).is_zero());
    Ok(())
}
