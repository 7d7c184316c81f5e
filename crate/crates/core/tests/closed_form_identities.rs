use rug::{Integer, Rational};
use slopewalk::closed_forms::{
    bizley_series, general_slope_sum, general_sum, grossman_sum, knuth_sum, naka_integral, rational_catalan,
    recurrence_check, starting_points,
};
use slopewalk::lattice_enum::{count_directed, count_ne_below, distance_profile, JumpPolynomial, RationalSlope};

#[test]
fn bizley_grossman_and_lattice_agree() {
    for (a, b) in [(1u64, 1u64), (1, 2), (2, 3), (2, 5), (3, 4), (3, 5), (3, 7), (4, 5)] {
        let series = bizley_series(a, b, 5).unwrap();
        let slope = RationalSlope::touching(a, 0, b).unwrap();
        for (k, biz) in series.iter().enumerate() {
            assert_eq!(*biz, grossman_sum(a, b, k).unwrap(), "({a},{b}) k={k}");
            let end = ((b * k as u64) as i64, (a * k as u64) as i64);
            assert_eq!(*biz, count_ne_below(&slope, end), "({a},{b}) k={k}");
        }
    }
}

#[test]
fn rational_catalan_counts_primitive_paths() {
    for (a, b) in [(1u64, 2u64), (2, 3), (2, 5), (3, 4), (3, 5), (4, 7)] {
        let primitive = count_ne_below(&RationalSlope::touching(a, 0, b).unwrap(), (b as i64, a as i64));
        assert_eq!(rational_catalan(a, b).unwrap(), primitive, "({a},{b})");
    }
}

#[test]
fn knuth_sum_matches_walks() {
    let jumps = JumpPolynomial::down_up(2, 5).unwrap();
    for n in 1..=8u64 {
        let m = (7 * n - 2) as usize;
        let a_n = count_directed(&jumps, m, 4, Some(1), true).unwrap();
        let b_n = count_directed(&jumps, m, 3, Some(0), true).unwrap();
        assert_eq!(knuth_sum(n).unwrap(), a_n + b_n, "n={n}");
        assert!(recurrence_check(n).unwrap(), "n={n}");
    }
}

#[test]
fn general_sum_matches_lattice() {
    for (a, c) in [(1u64, 2u64), (1, 3), (2, 3), (2, 5), (3, 4), (3, 5), (1, 5), (2, 7)] {
        for l in 0..c {
            if (l + 1) * a >= c {
                break;
            }
            for s in 1..=3u64 {
                let end = ((c * s) as i64 - 1, (a * s) as i64 - 1);
                let lattice: Integer = (l * a + 1..=(l + 1) * a)
                    .map(|k| count_ne_below(&RationalSlope::strict(a, k, c).unwrap(), end))
                    .sum();
                assert_eq!(general_sum(a, c, l, s).unwrap(), lattice, "({a},{c}) l={l} s={s}");
            }
        }
    }
}

#[test]
fn lattice_integral_and_offset_sum_match_lattice() {
    for (a, b, c) in [(2u64, 2u64, 5u64), (2, 1, 5), (1, 1, 2), (2, 3, 3), (3, 2, 5), (1, 3, 1)] {
        let fam = starting_points(a, b, c).unwrap();
        assert_eq!(fam.s0(), 0);
        let slope = RationalSlope::strict(a, b, c).unwrap();
        for s in 0..=3i64 {
            let q = fam.point(s);
            assert!(slope.on_line(q.0, q.1), "({a},{b},{c}) s={s}");
            let integral: Rational = distance_profile(&slope, q).unwrap().integral();
            assert_eq!(naka_integral(a, b, c, s).unwrap(), integral, "({a},{b},{c}) s={s}");
            let offsets: Integer = (1..=fam.b)
                .map(|j| count_ne_below(&RationalSlope::strict(fam.a, j, fam.c).unwrap(), (q.0, q.1 - 1)))
                .sum();
            assert_eq!(general_slope_sum(a, b, c, s).unwrap(), offsets, "({a},{b},{c}) s={s}");
        }
    }
}

#[test]
fn non_reduced_triples_without_solutions_are_rejected() {
    assert!(starting_points(2, 1, 4).is_err());
    assert!(starting_points(3, 2, 6).is_err());
}
