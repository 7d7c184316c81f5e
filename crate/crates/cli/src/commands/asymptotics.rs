use rug::{Float, Integer, Rational};
use serde_json::json;
use slopewalk::asymptotics::{
    an_bn_asymptotic, convergence_report, knuth_constants, rotation_kappa, structural_constants, AsymptoticProfile,
    Precision,
};
use slopewalk::lattice_enum::{CountTable, JumpPolynomial};
use slopewalk::Result;

use super::Format;
use crate::output::{csv, fixed, int, rat, real, sci, usage, Output, Record};
use crate::parse::{self, Slope};

/// Structural constants for jumps `-a, +c`; at slope 2/5 also the two-term
/// constants. `--area` switches to the mean-area model with jumps `+2, -3`.
#[derive(clap::Args)]
pub struct Args {
    #[arg(long, value_parser = parse::slope, default_value = "2/5")]
    slope: Slope,
    #[arg(long)]
    digits: Option<u32>,
    /// Mean-area convergence table for excursions with jumps `+2, -3`.
    #[arg(long)]
    area: bool,
    /// Largest length (area) or largest `n` (slope-2/5 ratio table).
    #[arg(long)]
    convergence: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

pub fn run(args: Args) -> Result<Output> {
    let prec = crate::precision(args.digits)?;
    let d = prec.digits();
    let mut rec = Record::new("asymptotics");
    rec.param("slope", args.slope.to_string()).param("digits", d);
    if args.area {
        if args.slope != (Slope { a: 2, c: 3 }) {
            return Err(usage("--area is the slope 2/3 model; pass --slope 2/3"));
        }
        return area(args.convergence.unwrap_or(2000), prec, args.format, rec);
    }
    let two_fifths = args.slope == Slope { a: 2, c: 5 };
    if let Some(n) = args.convergence {
        if !two_fifths {
            return Err(usage("--convergence without --area is the slope 2/5 ratio table"));
        }
        return ratio_table(n, prec, args.format, rec);
    }
    if args.format == Format::Csv {
        return Err(usage("CSV output is only available for convergence tables"));
    }
    let (a, c) = (args.slope.a, args.slope.c);
    let sc = structural_constants(a, c, prec)?;
    rec.value("tau", real(&sc.tau, d))
        .value("rho", real(&sc.rho, d))
        .value("period", sc.period())
        .value("rotation_kappa", rotation_kappa(a, c)?)
        .value("p_prime_residual", sci(&sc.p_prime_residual()))
        .value("rho_residual", sci(&sc.rho_residual()));
    if two_fifths {
        knuth(prec, &mut rec)?;
    }
    Ok(rec.finish("ok", "error"))
}

fn knuth(prec: Precision, rec: &mut Record) -> Result<()> {
    let d = prec.digits();
    let p: AsymptoticProfile = knuth_constants(prec)?;
    let pu = p.puiseux();
    rec.value("tau2", real(&p.tau2, d))
        .value("mu", real(&p.mu, d))
        .value("alpha1", real(&p.alpha1, d))
        .value("beta1", real(&p.beta1, d))
        .value("alpha2", real(&p.alpha2, d))
        .value("beta2", real(&p.beta2, d))
        .value("kappa1", real(&p.kappa1, d))
        .value("kappa2", real(&p.kappa2, d))
        .value(
            "puiseux",
            json!({ "c": real(&pu.c7, d), "c_prime": real(&pu.c7_prime, d), "d": real(&pu.d7, d) }),
        )
        .value(
            "residuals",
            json!({
                "tau2_annihilator": sci(&p.tau2_annihilator_residual()),
                "kappa1_minpoly": sci(&p.kappa1_minpoly_residual()),
                "kappa2_minpoly": sci(&p.kappa2_minpoly_residual()),
                "kappa2_relation": sci(&p.kappa2_relation_residual()),
            }),
        );
    Ok(())
}

struct Row {
    n: usize,
    a_n: Integer,
    b_n: Integer,
    ratio: Rational,
    dev: Float,
    errors: [Float; 4],
}

/// Exact `A_n / B_n` against `kappa_1 - kappa_2 / n`, and the two-term
/// estimates against the exact counts.
fn ratio_table(max_n: usize, prec: Precision, format: Format, mut rec: Record) -> Result<Output> {
    if max_n == 0 {
        return Err(usage("--convergence needs n >= 1"));
    }
    let d = prec.digits();
    let bits = prec.bits();
    let p = knuth_constants(prec)?;
    let jumps = JumpPolynomial::down_up(2, 5)?;
    let len = 7 * max_n - 2;
    let from4 = CountTable::build(&jumps, len, 4, true)?;
    let from3 = CountTable::build(&jumps, len, 3, true)?;
    let mut rows = Vec::with_capacity(max_n);
    for n in 1..=max_n {
        let m = 7 * n - 2;
        let (a_n, b_n) = (from4.count(m, 1), from3.count(m, 0));
        let ratio = Rational::from((a_n.clone(), b_n.clone()));
        let approx = Float::with_val(bits, &p.kappa1 - Float::with_val(bits, &p.kappa2 / n as u32));
        let ratio_f = Float::with_val(bits, &ratio);
        let est = an_bn_asymptotic(n as u64, &p)?;
        let rel = |e: &Float, exact: &Integer| -> Float { (Float::with_val(bits, e / exact) - 1u32).abs() };
        rows.push(Row {
            n,
            dev: Float::with_val(bits, &ratio_f - &approx),
            errors: [rel(&est.a_n, &a_n), rel(&est.b_n, &b_n), rel(&est.a_n_refined, &a_n), rel(&est.b_n_refined, &b_n)],
            a_n,
            b_n,
            ratio,
        });
    }
    const ERRS: [&str; 4] = ["a_n_rel_error", "b_n_rel_error", "a_n_refined_rel_error", "b_n_refined_rel_error"];
    match format {
        Format::Csv => {
            let rows: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    let mut v = vec![r.n.to_string(), r.a_n.to_string(), r.b_n.to_string(), r.ratio.to_string(), fixed(&r.dev, d)];
                    v.extend(r.errors.iter().map(|e| fixed(e, d)));
                    v
                })
                .collect();
            let mut header = vec!["n", "a_n", "b_n", "ratio", "ratio_minus_two_term"];
            header.extend(ERRS);
            Ok(csv(&header, &rows))
        }
        Format::Json => {
            let table: Vec<_> = rows
                .iter()
                .map(|r| {
                    let mut m = serde_json::Map::new();
                    m.insert("n".into(), r.n.into());
                    m.insert("a_n".into(), int(&r.a_n));
                    m.insert("b_n".into(), int(&r.b_n));
                    m.insert("ratio".into(), rat(&r.ratio));
                    m.insert("ratio_minus_two_term".into(), real(&r.dev, d));
                    for (k, e) in ERRS.iter().zip(&r.errors) {
                        m.insert((*k).into(), real(e, d));
                    }
                    serde_json::Value::Object(m)
                })
                .collect();
            rec.param("convergence", max_n)
                .value("kappa1", real(&p.kappa1, d))
                .value("kappa2", real(&p.kappa2, d))
                .value("table", table);
            Ok(rec.finish("ok", "error"))
        }
    }
}

fn area(max_n: usize, prec: Precision, format: Format, mut rec: Record) -> Result<Output> {
    let d = prec.digits();
    let report = convergence_report(max_n, prec)?;
    match format {
        Format::Csv => {
            let rows: Vec<Vec<String>> =
                report.samples.iter().map(|s| vec![s.n.to_string(), s.mean_area.to_string(), fixed(&s.ratio, d)]).collect();
            Ok(csv(&["n", "mean_area", "ratio"], &rows))
        }
        Format::Json => {
            let table: Vec<_> = report
                .samples
                .iter()
                .map(|s| json!({ "n": s.n, "mean_area": rat(&s.mean_area), "ratio": real(&s.ratio, d) }))
                .collect();
            rec.param("area", true)
                .param("convergence", max_n)
                .value("constant", real(&report.constant, d))
                .value("extrapolated", real(&report.extrapolated, d))
                .value("relative_error", real(&report.relative_error(), d))
                .value("raw_relative_error", real(&report.raw_relative_error(), d))
                .value("scaling_constant", real(&report.scaling_constant, d))
                .value("scaling_relative_error", real(&report.scaling_relative_error(), d))
                .value("table", table);
            Ok(rec.finish("ok", "error"))
        }
    }
}
