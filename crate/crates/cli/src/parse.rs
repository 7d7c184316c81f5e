//! Value parsers for clap. Errors come back as strings so clap reports them
//! with its usual exit code 2.

use rug::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Slope {
    pub a: u64,
    pub c: u64,
}

impl std::fmt::Display for Slope {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.a, self.c)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Jumps(pub Vec<i64>);

pub fn slope(s: &str) -> Result<Slope, String> {
    let (a, c) = s.split_once('/').ok_or_else(|| format!("expected a/c, got {s:?}"))?;
    let a: u64 = a.trim().parse().map_err(|e| format!("bad numerator {a:?}: {e}"))?;
    let c: u64 = c.trim().parse().map_err(|e| format!("bad denominator {c:?}: {e}"))?;
    if a == 0 || c == 0 {
        return Err(format!("slope {a}/{c} needs positive a and c"));
    }
    Ok(Slope { a, c })
}

pub fn point(s: &str) -> Result<Point, String> {
    let (x, y) = s.split_once(',').ok_or_else(|| format!("expected x,y, got {s:?}"))?;
    let x = x.trim().parse().map_err(|e| format!("bad x {x:?}: {e}"))?;
    let y = y.trim().parse().map_err(|e| format!("bad y {y:?}: {e}"))?;
    Ok(Point { x, y })
}

pub fn jumps(s: &str) -> Result<Jumps, String> {
    let v = s
        .split(',')
        .map(|t| {
            let t = t.trim();
            t.strip_prefix('+').unwrap_or(t).parse::<i64>().map_err(|e| format!("bad jump {t:?}: {e}"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if v.is_empty() {
        return Err("empty jump set".into());
    }
    Ok(Jumps(v))
}

pub fn rational(s: &str) -> Result<Rational, String> {
    s.trim().parse::<Rational>().map_err(|e| format!("bad rational {s:?}: {e}"))
}
