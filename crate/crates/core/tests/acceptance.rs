//! Acceptance suite: one test per criterion, each printing a pass line with
//! the measured values (visible with `--nocapture`).
//!
//! Criteria:
//! 1. table-algorithm histograms equal recurrence rows, exhaustively, n <= 16
//! 2. pinned row values and exact row sums at n in {3, 20, 210}
//! 3. width exponents at n = 210 inside the published windows, timed
//! 4. rescaled envelope convergence at n = 210 versus n = 20
//! 5. trajectory endpoint/link claims up to n = 14
//! 6. exact-row moments versus closed forms at n in {5, 20, 210}
//! 7. randomized property suites over n <= 64

use std::time::Instant;

use num_bigint::BigUint;
use num_traits::One;
use proptest::prelude::*;

use qtriangles::distributions::{
    compare_envelopes, distribution, estimate_exponent, half_mass_interval,
};
use qtriangles::trajectories::{endpoint_classes, link_reports, Link, WalkSystem};
use qtriangles::triangles::{coefficient, nonlinear_row, pascal_row, row};
use qtriangles::words::{histogram, word_from_ordinal, IndexKind};
use qtriangles::TriangleKind;

fn ints(xs: &[u64]) -> Vec<BigUint> {
    xs.iter().map(|&x| BigUint::from(x)).collect()
}

#[test]
fn criterion_1_histograms_equal_rows_up_to_16() {
    let start = Instant::now();
    for n in 0..=16 {
        assert_eq!(
            histogram(n, IndexKind::P).unwrap(),
            pascal_row(n),
            "p-histogram differs from Pascal row at n={n}"
        );
        assert_eq!(
            histogram(n, IndexKind::Q).unwrap(),
            nonlinear_row(n),
            "q-histogram differs from nonlinear row at n={n}"
        );
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 10.0,
        "exhaustive sweep took {elapsed:?}, budget is 10 s"
    );
    println!("criterion 1: PASS (histogram == row for all n <= 16, both kinds, in {elapsed:?})");
}

#[test]
fn criterion_2_pinned_row_values() {
    assert_eq!(
        coefficient(TriangleKind::Nonlinear, 3, 3).unwrap(),
        BigUint::from(2u32)
    );
    assert_eq!(nonlinear_row(3).coeffs(), ints(&[1, 1, 1, 2, 1, 1, 1]));
    assert_eq!(pascal_row(3).coeffs(), ints(&[1, 3, 3, 1]));
    for n in [3u32, 20, 210] {
        for kind in [TriangleKind::Linear, TriangleKind::Nonlinear] {
            assert_eq!(
                row(kind, n).sum(),
                BigUint::from(2u32).pow(n),
                "{kind} row sum at n={n}"
            );
        }
    }
    println!("criterion 2: PASS (pinned rows and exact 2^n sums at n in {{3, 20, 210}})");
}

#[test]
fn criterion_3_exponents_at_210() {
    let start = Instant::now();
    let linear = estimate_exponent(TriangleKind::Linear, 210);
    let linear_time = start.elapsed();
    assert!(
        (0.40..=0.46).contains(&linear.k),
        "k1(210) = {} outside [0.40, 0.46]",
        linear.k
    );
    assert!(linear_time.as_secs_f64() < 5.0, "linear run took {linear_time:?}");

    let start = Instant::now();
    let nonlinear = estimate_exponent(TriangleKind::Nonlinear, 210);
    let nonlinear_time = start.elapsed();
    assert!(
        (0.68..=0.74).contains(&nonlinear.k),
        "k2(210) = {} outside [0.68, 0.74]",
        nonlinear.k
    );
    assert!(
        nonlinear_time.as_secs_f64() < 5.0,
        "nonlinear run took {nonlinear_time:?}"
    );
    println!(
        "criterion 3: PASS (k1(210) = {:.4} in {linear_time:?}, k2(210) = {:.4} in {nonlinear_time:?})",
        linear.k, nonlinear.k
    );
}

#[test]
fn criterion_4_envelope_convergence() {
    let at_210 = compare_envelopes(210);
    assert_eq!(at_210.rescale_factor, 105.5);
    assert!(
        at_210.sup_distance <= 0.05,
        "sup distance at 210 is {}",
        at_210.sup_distance
    );

    let at_20 = compare_envelopes(20);
    assert_eq!(at_20.rescale_factor, 10.5);
    assert!(
        at_20.sup_distance > at_210.sup_distance,
        "expected sup(20) = {} > sup(210) = {}",
        at_20.sup_distance,
        at_210.sup_distance
    );
    println!(
        "criterion 4: PASS (rescale 105.5, sup(210) = {:.4} <= 0.05, sup(20) = {:.4} > sup(210))",
        at_210.sup_distance, at_20.sup_distance
    );
}

#[test]
fn criterion_5_trajectory_claims() {
    // the superimposed final link of the two complementary-prefix words
    let reports = link_reports(4, WalkSystem::IntegratedWalk).unwrap();
    let ambiguous: Vec<_> = reports.iter().filter(|r| r.is_ambiguous()).collect();
    assert_eq!(ambiguous.len(), 1);
    assert_eq!(
        ambiguous[0].link,
        Link {
            step: 4,
            start: 0,
            angle: 0
        }
    );
    let words: Vec<String> = ambiguous[0].words.iter().map(|w| w.to_string()).collect();
    assert_eq!(words, ["abba", "baab"]);

    for n in 0..=14 {
        let reports = link_reports(n, WalkSystem::PlainWalk).unwrap();
        assert!(
            reports.iter().all(|r| !r.is_ambiguous()),
            "ambiguous plain-walk link at n={n}"
        );
    }

    for n in 0..=14 {
        for system in [WalkSystem::PlainWalk, WalkSystem::IntegratedWalk] {
            let classes = endpoint_classes(n, system).unwrap();
            let expected = row(system.triangle_kind(), n);
            assert_eq!(classes.classes.len(), expected.len());
            for class in &classes.classes {
                assert_eq!(
                    BigUint::from(class.words.len()),
                    expected.coeffs()[class.index as usize],
                    "{system:?} n={n} index {}",
                    class.index
                );
            }
        }
    }
    println!("criterion 5: PASS (abba/baab link detected; plain walk unambiguous and class sizes match rows for n <= 14)");
}

#[test]
fn criterion_6_moment_oracles() {
    for n in [5u32, 20, 210] {
        let nf = f64::from(n);
        let linear = distribution(TriangleKind::Linear, n);
        let (mean, var) = (nf / 2.0, nf / 4.0);
        assert!((linear.mean - mean).abs() <= 1e-9 * mean, "linear mean n={n}");
        assert!(
            (linear.variance - var).abs() <= 1e-9 * var,
            "linear variance n={n}"
        );

        let nonlinear = distribution(TriangleKind::Nonlinear, n);
        let (mean, var) = (nf * (nf + 1.0) / 4.0, nf * (nf + 1.0) * (2.0 * nf + 1.0) / 24.0);
        assert!(
            (nonlinear.mean - mean).abs() <= 1e-9 * mean,
            "nonlinear mean n={n}"
        );
        assert!(
            (nonlinear.variance - var).abs() <= 1e-9 * var,
            "nonlinear variance n={n}"
        );
    }
    println!("criterion 6: PASS (means and variances match closed forms to 1e-9 relative at n in {{5, 20, 210}})");
}

proptest! {
    #![proptest_config(ProptestConfig {
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn criterion_7_row_symmetry(n in 1u32..=64, linear in proptest::bool::ANY) {
        let kind = if linear { TriangleKind::Linear } else { TriangleKind::Nonlinear };
        let row = row(kind, n);
        let coeffs = row.coeffs();
        for i in 0..coeffs.len() / 2 {
            prop_assert_eq!(&coeffs[i], &coeffs[coeffs.len() - 1 - i]);
        }
    }

    #[test]
    fn criterion_7_normalization(n in 1u32..=64, linear in proptest::bool::ANY) {
        let kind = if linear { TriangleKind::Linear } else { TriangleKind::Nonlinear };
        let sum: f64 = distribution(kind, n).probabilities.iter().sum();
        prop_assert!((sum - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn criterion_7_complement_identity(n in 1u32..=64, raw in proptest::num::u64::ANY) {
        let m = if n == 64 { raw } else { raw & ((1u64 << n) - 1) };
        let w = word_from_ordinal(n, m).unwrap();
        let q_max = u64::from(n) * (u64::from(n) + 1) / 2;
        prop_assert_eq!(w.q_index() + w.complement().q_index(), q_max);
    }

    #[test]
    fn criterion_7_half_mass_minimality(n in 1u32..=64, linear in proptest::bool::ANY) {
        let kind = if linear { TriangleKind::Linear } else { TriangleKind::Nonlinear };
        let row = row(kind, n);
        let interval = half_mass_interval(&row);
        let half = BigUint::from(2u32).pow(n - 1);
        prop_assert!(interval.mass >= half);
        prop_assert_eq!(interval.lo + interval.hi, row.last_index());
        let inner = if interval.hi - interval.lo >= 2 {
            row.coeffs()[(interval.lo + 1) as usize..interval.hi as usize]
                .iter()
                .sum()
        } else {
            BigUint::ZERO
        };
        prop_assert!(inner < half);
    }
}

#[test]
fn criterion_7_pass_line() {
    // the four property suites above are the criterion; this line reports it
    println!("criterion 7: PASS (symmetry, normalization, complement identity, minimality over randomized n <= 64)");
}

// ensure row 0 is shared ground for both constructions
#[test]
fn row_zero_is_the_unit_row() {
    assert_eq!(pascal_row(0).coeffs(), ints(&[1]));
    assert_eq!(nonlinear_row(0).coeffs(), ints(&[1]));
    assert_eq!(histogram(0, IndexKind::P).unwrap().coeffs(), ints(&[1]));
    assert_eq!(histogram(0, IndexKind::Q).unwrap().coeffs(), ints(&[1]));
}
