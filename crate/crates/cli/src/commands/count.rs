use rug::Integer;
use slopewalk::closed_forms::bizley_series;
use slopewalk::kernel_series::meander_gf;
use slopewalk::lattice_enum::{count_directed, count_ne_below, JumpPolynomial, RationalSlope, Strictness};
use slopewalk::Result;

use crate::output::{int, integral, usage, Output, Record};
use crate::parse::{self, Jumps, Point, Slope};

/// Either `--slope a/c --offset b --end x,y` for North/East paths weakly
/// (or, with `--strict`, strictly) below `y = (a x + b)/c`, or
/// `--jumps "-a,+c" --len n --from h [--to k] [--meander]` for walks.
#[derive(clap::Args)]
pub struct Args {
    #[arg(long, value_parser = parse::slope, conflicts_with = "jumps")]
    slope: Option<Slope>,
    #[arg(long, default_value_t = 0)]
    offset: u64,
    #[arg(long, conflicts_with = "touch")]
    strict: bool,
    /// Allow touching the line (the default).
    #[arg(long)]
    touch: bool,
    #[arg(long, value_parser = parse::point)]
    end: Option<Point>,
    #[arg(long, value_parser = parse::jumps, allow_hyphen_values = true)]
    jumps: Option<Jumps>,
    #[arg(long)]
    len: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    from: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    to: Option<i64>,
    /// Keep every altitude non-negative.
    #[arg(long)]
    meander: bool,
    /// Also evaluate the matching closed form, when there is one.
    #[arg(long)]
    oracle_check: bool,
}

pub fn run(args: Args) -> Result<Output> {
    let mut rec = Record::new("count");
    let (count, oracle) = match (&args.slope, &args.jumps) {
        (Some(s), None) => count_below_line(&args, *s, &mut rec)?,
        (None, Some(j)) => count_walks(&args, j, &mut rec)?,
        _ => return Err(usage("count needs either --slope or --jumps")),
    };
    rec.value("count", int(&count));
    if args.oracle_check {
        match oracle {
            Some((name, v)) => {
                rec.value("closed_form", name);
                rec.value("closed_form_value", int(&v));
                rec.value("equal", v == count);
                if v != count {
                    rec.fail();
                }
            }
            None => {
                rec.value("closed_form", serde_json::Value::Null);
            }
        }
    }
    Ok(rec.finish("ok", "mismatch"))
}

type Counted = (Integer, Option<(&'static str, Integer)>);

fn count_below_line(args: &Args, s: Slope, rec: &mut Record) -> Result<Counted> {
    let end = args.end.ok_or_else(|| usage("--slope needs --end x,y"))?;
    if args.len.is_some() || args.from.is_some() || args.to.is_some() || args.meander {
        return Err(usage("--len/--from/--to/--meander only apply to --jumps"));
    }
    let strictness = if args.strict { Strictness::Strict } else { Strictness::TouchAllowed };
    let line = RationalSlope::new(s.a, args.offset, s.c, strictness)?;
    rec.param("slope", s.to_string())
        .param("offset", args.offset)
        .param("strict", args.strict)
        .param("end", vec![end.x, end.y]);
    let count = count_ne_below(&line, (end.x, end.y));
    // Weakly below a line through the origin and ending on it: Bizley.
    let (a, c) = (line.a() as i64, line.c() as i64);
    let on_line = line.b() == 0 && end.x * a == end.y * c && end.x >= 0;
    let oracle = if strictness == Strictness::TouchAllowed && on_line && Integer::from(a).gcd(&Integer::from(c)) == 1 {
        let k = (end.x / c) as usize;
        Some(("bizley", bizley_series(a as u64, c as u64, k)?.swap_remove(k)))
    } else {
        None
    };
    Ok((count, oracle))
}

fn count_walks(args: &Args, j: &Jumps, rec: &mut Record) -> Result<Counted> {
    if args.end.is_some() || args.strict || args.offset != 0 {
        return Err(usage("--end/--strict/--offset only apply to --slope"));
    }
    let n = args.len.ok_or_else(|| usage("--jumps needs --len"))?;
    let from = args.from.ok_or_else(|| usage("--jumps needs --from"))?;
    let jumps = JumpPolynomial::from_jumps(&j.0)?;
    rec.param("jumps", j.0.clone())
        .param("len", n)
        .param("from", from)
        .param("to", args.to)
        .param("meander", args.meander);
    let count = count_directed(&jumps, n, from, args.to, args.meander)?;
    let oracle = match (jumps.min_jump(), jumps.max_jump(), args.to) {
        (lo, hi, Some(to)) if args.meander && j.0.len() == 2 && lo < 0 && hi > 0 => {
            let (a, c) = (lo.unsigned_abs(), hi as u64);
            let coprime = Integer::from(a).gcd(&Integer::from(c)) == 1;
            if coprime && from >= a as i64 && (0..a as i64).contains(&to) {
                let f = meander_gf(a, c, from as u64, to as u64, n)?;
                Some(("kernel", integral(f.coeff(n))?))
            } else {
                None
            }
        }
        _ => None,
    };
    Ok((count, oracle))
}
