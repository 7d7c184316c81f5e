use rug::ops::Pow;
use rug::{Float, Integer, Rational};
use serde_json::{json, Value};
use slopewalk::asymptotics::{rotation_law_check, rotation_samples};
use slopewalk::closed_forms::{
    bizley_series, general_slope_sum, general_sum, grossman_sum, half_tree_product_check, knuth_sum,
    log_tree_identity_check, naka_integral, recurrence_check, starting_points,
};
use slopewalk::kernel_series::slope25_f0_g1;
use slopewalk::lattice_enum::{count_directed, count_ne_below, distance_profile, JumpPolynomial, RationalSlope};
use slopewalk::Result;

use crate::output::{int, integral, rat, sci, usage, Output, Record};
use crate::parse::{self, Slope};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    /// Bizley exp-of-series, Grossman partition sum and lattice counts.
    Bizley,
    /// `A_n + B_n` closed form against walks and kernel coefficients.
    Knuth,
    /// The hypergeometric recurrence of the `A_n + B_n` sum.
    Recurrence,
    /// Lattice path integral against `W_t` counts.
    Naka,
    /// Sums over line offsets against lattice counts.
    General,
    /// Rotation law of the small branches.
    Rotation,
    /// `ln T(z)` identity for the tree function.
    Logtree,
    /// `T(z) T(-z)` even-part identity at `t = 3/2`.
    Halftree,
}

#[derive(clap::Args)]
pub struct Args {
    #[arg(long, value_enum)]
    suite: Suite,
    /// Size bound: largest `k`, `n`, `s` or series order, depending on the suite.
    #[arg(long)]
    max: Option<u64>,
    #[arg(long)]
    a: Option<u64>,
    #[arg(long)]
    b: Option<u64>,
    #[arg(long, value_parser = parse::slope)]
    slope: Option<Slope>,
    #[arg(long)]
    offset: Option<u64>,
    /// Largest `a + c` for the general suite.
    #[arg(long, default_value_t = 10)]
    size: u64,
    #[arg(long, value_parser = parse::rational, allow_hyphen_values = true)]
    t: Option<Rational>,
    /// Number of sample points for the rotation suite.
    #[arg(long, default_value_t = 10)]
    samples: usize,
    #[arg(long)]
    digits: Option<u32>,
}

/// Collects checks in order; a failed check keeps its payload.
struct Checks {
    list: Vec<Value>,
    failed: usize,
}

impl Checks {
    fn new() -> Self {
        Checks { list: Vec::new(), failed: 0 }
    }

    fn push(&mut self, name: String, ok: bool, payload: Value) {
        if !ok {
            self.failed += 1;
        }
        self.list.push(json!({ "check": name, "status": if ok { "pass" } else { "fail" }, "data": payload }));
    }
}

pub fn run(args: Args) -> Result<Output> {
    let mut rec = Record::new("verify");
    let mut checks = Checks::new();
    let name = match args.suite {
        Suite::Bizley => {
            let a = args.a.ok_or_else(|| usage("bizley suite needs --a"))?;
            let b = args.b.ok_or_else(|| usage("bizley suite needs --b"))?;
            let max = args.max.unwrap_or(6) as usize;
            rec.param("a", a).param("b", b).param("max", max);
            bizley(a, b, max, &mut checks)?;
            "bizley"
        }
        Suite::Knuth => {
            let max = args.max.unwrap_or(6);
            rec.param("max", max);
            knuth(max, &mut checks)?;
            "knuth"
        }
        Suite::Recurrence => {
            let max = args.max.unwrap_or(20);
            rec.param("max", max);
            for n in 1..=max {
                let ok = recurrence_check(n)?;
                checks.push(format!("n={n}"), ok, json!({ "c_n": int(&knuth_sum(n)?) }));
            }
            "recurrence"
        }
        Suite::Naka => {
            let s = args.slope.unwrap_or(Slope { a: 2, c: 5 });
            let b = args.offset.unwrap_or(2);
            let max = args.max.unwrap_or(2) as i64;
            rec.param("slope", s.to_string()).param("offset", b).param("max", max);
            naka(s, b, max, &mut checks)?;
            "naka"
        }
        Suite::General => {
            let max = args.max.unwrap_or(3);
            rec.param("max", max).param("size", args.size);
            general(args.size, max, &mut checks)?;
            "general"
        }
        Suite::Rotation => {
            let s = args.slope.unwrap_or(Slope { a: 2, c: 5 });
            let prec = crate::precision(args.digits)?;
            rec.param("slope", s.to_string()).param("samples", args.samples).param("digits", prec.digits());
            let samples = rotation_samples(s.a, s.c, args.samples, prec)?;
            let report = rotation_law_check(s.a, s.c, &samples, prec)?;
            // Ten digits of headroom below the working precision, but never
            // looser than 1e-30 at the default 50 digits.
            let tol = Float::with_val(prec.bits(), 10).pow(-(prec.digits() as i32 - 20).max(5));
            checks.push(
                format!("rotation {s}"),
                report.holds(&tol),
                json!({
                    "kappa": report.kappa,
                    "permutation": report.permutation,
                    "max_deviation": sci(&report.max_deviation),
                    "pairing_deviation": sci(&report.pairing_deviation),
                    "tolerance": sci(&tol),
                }),
            );
            "rotation"
        }
        Suite::Logtree => {
            let t = args.t.clone().unwrap_or_else(|| Rational::from((3, 2)));
            let max = args.max.unwrap_or(30) as usize;
            rec.param("t", t.to_string()).param("max", max);
            checks.push(format!("t={t} order={max}"), log_tree_identity_check(&t, max)?, Value::Null);
            "logtree"
        }
        Suite::Halftree => {
            let max = args.max.unwrap_or(30) as usize;
            rec.param("max", max);
            checks.push(format!("order={max}"), half_tree_product_check(max)?, Value::Null);
            "halftree"
        }
    };
    rec.param("suite", name);
    rec.value("checks", checks.list);
    rec.value("failed", checks.failed);
    if checks.failed > 0 {
        rec.fail();
    }
    Ok(rec.finish("pass", "fail"))
}

fn bizley(a: u64, b: u64, max: usize, checks: &mut Checks) -> Result<()> {
    let series = bizley_series(a, b, max)?;
    let slope = RationalSlope::touching(a, 0, b)?;
    for (k, biz) in series.iter().enumerate() {
        let gross = grossman_sum(a, b, k)?;
        let dp = count_ne_below(&slope, ((b * k as u64) as i64, (a * k as u64) as i64));
        checks.push(
            format!("k={k}"),
            *biz == gross && gross == dp,
            json!({ "bizley": int(biz), "grossman": int(&gross), "lattice": int(&dp) }),
        );
    }
    Ok(())
}

fn knuth(max: u64, checks: &mut Checks) -> Result<()> {
    if max == 0 {
        return Err(usage("knuth suite needs --max >= 1"));
    }
    let jumps = JumpPolynomial::down_up(2, 5)?;
    let (f0, g1) = slope25_f0_g1((7 * max - 2) as usize)?;
    for n in 1..=max {
        let m = (7 * n - 2) as usize;
        let a_n = count_directed(&jumps, m, 4, Some(1), true)?;
        let b_n = count_directed(&jumps, m, 3, Some(0), true)?;
        let (ka, kb) = (integral(g1.coeff(m))?, integral(f0.coeff(m))?);
        let closed = knuth_sum(n)?;
        let sum = Integer::from(&a_n + &b_n);
        checks.push(
            format!("n={n}"),
            a_n == ka && b_n == kb && sum == closed,
            json!({
                "a_n": int(&a_n),
                "b_n": int(&b_n),
                "a_n_kernel": int(&ka),
                "b_n_kernel": int(&kb),
                "closed_form": int(&closed),
            }),
        );
    }
    Ok(())
}

fn naka(s: Slope, b: u64, max: i64, checks: &mut Checks) -> Result<()> {
    let fam = starting_points(s.a, b, s.c)?;
    let slope = RationalSlope::strict(s.a, b, s.c)?;
    for k in 0..=max {
        let q = fam.point(k);
        let profile = distance_profile(&slope, q)?;
        let dp = profile.integral();
        let closed = naka_integral(s.a, b, s.c, k)?;
        let sum_closed = general_slope_sum(s.a, b, s.c, k)?;
        let sum_dp: Integer = (1..=fam.b)
            .map(|j| Ok(count_ne_below(&RationalSlope::strict(fam.a, j, fam.c)?, (q.0, q.1 - 1))))
            .sum::<Result<Integer>>()?;
        let w: Vec<Value> = profile.counts.iter().map(|(t, n)| json!({ "t": rat(t), "count": int(n) })).collect();
        checks.push(
            format!("s={k}"),
            dp == closed && sum_dp == sum_closed,
            json!({
                "point": [q.0, q.1],
                "integral": rat(&closed),
                "integral_lattice": rat(&dp),
                "w_t": w,
                "offset_sum": int(&sum_closed),
                "offset_sum_lattice": int(&sum_dp),
            }),
        );
    }
    Ok(())
}

fn general(size: u64, max_s: u64, checks: &mut Checks) -> Result<()> {
    for p in 2..=size {
        for a in 1..p {
            let c = p - a;
            if a >= c || Integer::from(a).gcd(&Integer::from(c)) != 1 {
                continue;
            }
            for l in 0.. {
                if (l + 1) * a >= c {
                    break;
                }
                for s in 1..=max_s {
                    let closed = general_sum(a, c, l, s)?;
                    let end = ((c * s) as i64 - 1, (a * s) as i64 - 1);
                    let dp: Integer = (l * a + 1..=(l + 1) * a)
                        .map(|k| Ok(count_ne_below(&RationalSlope::strict(a, k, c)?, end)))
                        .sum::<Result<Integer>>()?;
                    checks.push(
                        format!("a={a} c={c} l={l} s={s}"),
                        closed == dp,
                        json!({ "closed_form": int(&closed), "lattice": int(&dp) }),
                    );
                }
            }
        }
    }
    Ok(())
}
