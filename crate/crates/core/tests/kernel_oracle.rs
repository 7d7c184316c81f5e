use rug::Rational;
use slopewalk::kernel_series::{meander_gf, power_sum, slope25_f0_g1, BranchSeries};
use slopewalk::lattice_enum::{count_directed, CountTable, JumpPolynomial};

const SLOPES: [(u64, u64); 5] = [(1, 1), (1, 2), (2, 3), (2, 5), (3, 5)];
const ORDER: usize = 25;

#[test]
fn meander_series_match_walk_counts() {
    for (a, c) in SLOPES {
        let jumps = JumpPolynomial::down_up(a, c).unwrap();
        for h in a..=a + 2 {
            let table = CountTable::build(&jumps, ORDER, h as i64, true).unwrap();
            for i in 0..a {
                let f = meander_gf(a, c, h, i, ORDER).unwrap();
                for n in 0..=ORDER {
                    assert_eq!(*f.coeff(n), table.count(n, i as i64), "({a},{c}) {h}->{i} n={n}");
                }
            }
        }
    }
}

#[test]
fn branch_constructions_agree_and_solve_the_kernel() {
    for (a, c) in SLOPES {
        let order = a as usize * 12;
        let fixed = BranchSeries::by_fixed_point(a, c, order).unwrap();
        let lagrange = BranchSeries::by_lagrange(a, c, order).unwrap();
        for series in [&fixed, &lagrange] {
            let r = series.kernel_residual();
            assert!((0..r.order()).all(|k| r.coeff(k).cmp0().is_eq()), "({a},{c})");
        }
        for h in 1..=a as u32 + 2 {
            let (pf, pl) = (fixed.power_sum(h), lagrange.power_sum(h));
            let direct = power_sum(h as u64, a, c, pf.order()).unwrap();
            for n in 0..pf.order() {
                assert_eq!(pf.coeff(n), pl.coeff(n), "({a},{c}) h={h} n={n}");
                assert_eq!(pf.coeff(n), direct.coeff(n), "({a},{c}) h={h} n={n}");
            }
        }
    }
}

/// `h` times the number of free walks of length `m` from 0 to `-h` equals
/// `m [z^m]` of the `h`-th power sum of the small branches.
#[test]
fn power_sums_count_free_walks_to_negative_altitudes() {
    for (a, c) in SLOPES {
        let jumps = JumpPolynomial::down_up(a, c).unwrap();
        for h in 1..=a + c {
            let p = power_sum(h, a, c, ORDER + 1).unwrap();
            for m in 1..=ORDER + 1 {
                let walks = count_directed(&jumps, m, 0, Some(-(h as i64)), false).unwrap();
                let lhs = Rational::from(walks * h);
                let rhs = Rational::from(p.coeff(m) * m as u32);
                assert_eq!(lhs, rhs, "({a},{c}) h={h} m={m}");
            }
        }
    }
}

#[test]
fn fifth_power_sum_gives_meander_totals() {
    let (f0, g1) = slope25_f0_g1(7 * 6).unwrap();
    let p5 = power_sum(5, 2, 5, 7 * 6).unwrap();
    for n in 1..=6usize {
        // Meanders of length 7n - 2 close into walks of length 7n - 1.
        let total = Rational::from(f0.coeff(7 * n - 2) + g1.coeff(7 * n - 2));
        assert_eq!(*p5.coeff(7 * n - 1), total, "n={n}");
        assert_ne!(total, 0);
    }
}
