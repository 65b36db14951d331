use levelone_core::ci::{self, CompleteIntersection};
use levelone_core::cover::{cross_validate, CyclicCover, WeightedHypersurface};
use levelone_core::exact::{binomial, geometric_quotient_series, partitions_in_box, rat};
use levelone_core::{HodgeLevel, TruncSeries};
use num_bigint::BigInt;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn series_inverse_is_two_sided(coeffs in prop::collection::vec(-9i64..=9, 1..8), order in 1usize..12) {
        let mut coeffs = coeffs;
        if coeffs[0] == 0 {
            coeffs[0] = 1;
        }
        let s = TruncSeries::from_integers(&coeffs, order);
        let inv = s.inverse().unwrap();
        prop_assert_eq!(&(&s * &inv), &TruncSeries::one(order));
        prop_assert_eq!(&(&inv * &s), &TruncSeries::one(order));
    }

    #[test]
    fn equal_quotient_is_one(exps in prop::collection::vec(1i64..6, 1..5), order in 1usize..15) {
        let q = geometric_quotient_series(&exps, &exps, order).unwrap();
        prop_assert_eq!(q, TruncSeries::one(order));
    }

    #[test]
    fn binomial_symmetry_and_vandermonde(n in 0u64..40, k in 0i64..40, m in 0u64..20) {
        prop_assert_eq!(binomial(n, k), binomial(n, n as i64 - k));
        let lhs = binomial(n + m, k);
        let rhs: BigInt = (0..=k).map(|j| binomial(n, j) * binomial(m, k - j)).sum();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn alternating_betti_sum_is_euler(n in 1usize..=9, degs in prop::collection::vec(2u32..=5, 1..4)) {
        prop_assume!(degs.iter().sum::<u32>() <= 12);
        let x = CompleteIntersection::new(n, &degs).unwrap();
        let table = ci::betti_table(&x).unwrap();
        prop_assert_eq!(BigInt::from(table.alternating_sum()), ci::euler_characteristic(&x));
        prop_assert!(table.is_poincare_symmetric());
    }
}

/// Palindromy of the Milnor-ring Poincare series: the socle is one-dimensional.
#[test]
fn jacobian_series_is_palindromic() {
    for n in 1..=8usize {
        for c in 2..=8u32 {
            let w = WeightedHypersurface::new(vec![1; n + 2], c).unwrap();
            let socle = w.socle_degree();
            if socle < 0 {
                continue;
            }
            let series = w.milnor_poincare(socle as usize + 3);
            assert!(series.is_palindromic(socle as usize), "n={n} c={c}");
            assert_eq!(series.coefficient(socle as usize).unwrap(), &rat(1));
            assert_eq!(series.coefficient(socle as usize + 1).unwrap(), &rat(0));
        }
    }
}

#[test]
fn box_partition_count() {
    for rows in 0..=5 {
        for cols in 0..=5 {
            let want = binomial((rows + cols) as u64, rows as i64);
            assert_eq!(BigInt::from(partitions_in_box(rows, cols).len()), want);
        }
    }
}

#[test]
fn hodge_routes_agree_on_complete_intersections() {
    for n in 1..=9usize {
        for total in 2..=12u32 {
            for degs in multisets(total) {
                let x = CompleteIntersection::new(n, &degs).unwrap();
                let d = ci::hodge_diamond(&x).unwrap_or_else(|e| panic!("{x}: {e}"));
                d.check_symmetries().unwrap();
                assert_eq!(d.betti(n), ci::middle_betti(&x).unwrap(), "{x}");
                assert_eq!(
                    BigInt::from(d.euler_characteristic()),
                    ci::euler_characteristic(&x)
                );
            }
        }
    }
}

fn multisets(total: u32) -> Vec<Vec<u32>> {
    fn rec(min: u32, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for d in min..=left {
            cur.push(d);
            rec(d, left - d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(2, total, &mut Vec::new(), &mut out);
    out
}

#[test]
fn cover_sweep_routes_agree() {
    let mut checked = 0;
    for n in 1..=6usize {
        for m in 2..=4u32 {
            for k in 1..=3u32 {
                let cover = CyclicCover::new(n, m, m * k).unwrap();
                for report in cross_validate(&cover).unwrap() {
                    assert!(report.agree, "{cover}: {:?}", report);
                }
                let (level, _) = cover.level_and_jacobian().unwrap();
                if let HodgeLevel::Level(l) = level {
                    assert!(l <= n);
                }
                checked += 1;
            }
        }
    }
    assert!(checked >= 20);
}
