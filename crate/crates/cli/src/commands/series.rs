use rug::Rational;
use slopewalk::closed_forms::{bizley_series, tree_series};
use slopewalk::kernel_series::{meander_gf, power_sum, slope25_f0_g1};
use slopewalk::Result;

use super::Format;
use crate::output::{csv, rat, usage, Output, Record};
use crate::parse::{self, Slope};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum What {
    /// Slope 2/5 meanders from altitude 3 to 0.
    #[value(name = "F0")]
    F0,
    /// Slope 2/5 meanders from altitude 4 to 1.
    #[value(name = "G1")]
    G1,
    /// Meanders with jumps `-a, +c` from `--from h` to `--to i`.
    #[value(name = "Fi")]
    Fi,
    /// `f(a k, b k)` for `k = 0, 1, ...`.
    #[value(name = "bizley")]
    Bizley,
    /// `T(z)^r` for `T = 1 + z T^t`.
    #[value(name = "tree")]
    Tree,
    /// `u_1^h + ... + u_a^h` over the small branches.
    #[value(name = "powersum")]
    Powersum,
}

/// Prints the first `--order` coefficients (indices `0..order`).
#[derive(clap::Args)]
pub struct Args {
    #[arg(long, value_enum, ignore_case = true)]
    what: What,
    #[arg(long, value_parser = parse::slope)]
    slope: Option<Slope>,
    #[arg(long)]
    from: Option<u64>,
    #[arg(long)]
    to: Option<u64>,
    #[arg(long)]
    a: Option<u64>,
    #[arg(long)]
    b: Option<u64>,
    #[arg(long, value_parser = parse::rational, allow_hyphen_values = true)]
    t: Option<Rational>,
    #[arg(long, value_parser = parse::rational, allow_hyphen_values = true)]
    r: Option<Rational>,
    #[arg(long)]
    h: Option<u64>,
    #[arg(long)]
    order: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

fn need<T: Copy>(v: Option<T>, flag: &str, what: &str) -> Result<T> {
    v.ok_or_else(|| usage(format!("--what {what} needs {flag}")))
}

pub fn run(args: Args) -> Result<Output> {
    if args.order == 0 {
        return Err(usage("--order must be at least 1"));
    }
    let top = args.order - 1;
    let mut rec = Record::new("series");
    let coeffs: Vec<Rational> = match args.what {
        What::F0 | What::G1 => {
            let s = args.slope.unwrap_or(Slope { a: 2, c: 5 });
            if s != (Slope { a: 2, c: 5 }) {
                return Err(usage("F0 and G1 are defined for slope 2/5; use --what Fi otherwise"));
            }
            rec.param("what", if args.what == What::F0 { "F0" } else { "G1" }).param("slope", s.to_string());
            let (f0, g1) = slope25_f0_g1(top.max(5))?;
            let f = if args.what == What::F0 { f0 } else { g1 };
            f.coeffs()[..args.order].to_vec()
        }
        What::Fi => {
            let s = need(args.slope, "--slope", "Fi")?;
            let h = need(args.from, "--from", "Fi")?;
            let i = need(args.to, "--to", "Fi")?;
            rec.param("what", "Fi").param("slope", s.to_string()).param("from", h).param("to", i);
            meander_gf(s.a, s.c, h, i, top)?.into_coeffs()
        }
        What::Bizley => {
            let a = need(args.a, "--a", "bizley")?;
            let b = need(args.b, "--b", "bizley")?;
            rec.param("what", "bizley").param("a", a).param("b", b);
            bizley_series(a, b, top)?.into_iter().map(Rational::from).collect()
        }
        What::Tree => {
            let t = args.t.clone().ok_or_else(|| usage("--what tree needs --t"))?;
            let r = args.r.clone().unwrap_or_else(|| Rational::from(1));
            rec.param("what", "tree").param("t", t.to_string()).param("r", r.to_string());
            tree_series(&t, &r, top)?.into_coeffs()
        }
        What::Powersum => {
            let s = need(args.slope, "--slope", "powersum")?;
            let h = need(args.h, "--h", "powersum")?;
            rec.param("what", "powersum").param("slope", s.to_string()).param("h", h);
            power_sum(h, s.a, s.c, top)?.into_coeffs()
        }
    };
    rec.param("order", args.order);
    match args.format {
        Format::Json => {
            rec.value("coefficients", coeffs.iter().map(rat).collect::<Vec<_>>());
            Ok(rec.finish("ok", "error"))
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> = coeffs.iter().enumerate().map(|(n, c)| vec![n.to_string(), c.to_string()]).collect();
            Ok(csv(&["n", "coefficient"], &rows))
        }
    }
}
