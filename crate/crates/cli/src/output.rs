use rug::ops::Pow;
use rug::{Float, Integer, Rational};
use serde_json::{json, Map, Value};
use slopewalk::Error;

/// What a command hands back to `main`: the text for stdout and the exit code.
pub struct Output {
    pub text: String,
    pub code: u8,
}

pub const EXIT_MISMATCH: u8 = 4;

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::InvalidArgument(_) | Error::NotIntegral(_) | Error::NoExcursions(_) => 2,
        Error::NoSolution { .. } => 3,
        Error::Mismatch(_) => EXIT_MISMATCH,
        Error::RootFinder(_) => 5,
        Error::NotInvertible => 1,
    }
}

pub fn usage(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

/// One JSON document per invocation with keys `command`, `parameters`,
/// `values`, `status` in that order.
pub struct Record {
    command: &'static str,
    parameters: Map<String, Value>,
    values: Map<String, Value>,
    failed: bool,
}

impl Record {
    pub fn new(command: &'static str) -> Self {
        Record { command, parameters: Map::new(), values: Map::new(), failed: false }
    }

    pub fn param(&mut self, key: &str, v: impl Into<Value>) -> &mut Self {
        self.parameters.insert(key.into(), v.into());
        self
    }

    pub fn value(&mut self, key: &str, v: impl Into<Value>) -> &mut Self {
        self.values.insert(key.into(), v.into());
        self
    }

    pub fn fail(&mut self) {
        self.failed = true;
    }

    pub fn finish(self, status_ok: &str, status_bad: &str) -> Output {
        let status = if self.failed { status_bad } else { status_ok };
        let doc = json!({
            "command": self.command,
            "parameters": Value::Object(self.parameters),
            "values": Value::Object(self.values),
            "status": status,
        });
        let mut text = serde_json::to_string_pretty(&doc).expect("JSON values always serialize");
        text.push('\n');
        Output { text, code: if self.failed { EXIT_MISMATCH } else { 0 } }
    }
}

pub fn int(x: &Integer) -> Value {
    Value::String(x.to_string())
}

/// A series coefficient that counts something, so must be an integer.
pub fn integral(x: &Rational) -> slopewalk::Result<Integer> {
    if *x.denom() != 1 {
        return Err(Error::NotIntegral(x.to_string()));
    }
    Ok(x.numer().clone())
}

pub fn rat(x: &Rational) -> Value {
    Value::String(x.to_string())
}

/// `x` rounded to `digits` places after the point, e.g. `-0.7077`.
pub fn fixed(x: &Float, digits: u32) -> String {
    let bits = x.prec() + digits * 4 + 16;
    let scale = Float::with_val(bits, Integer::from(10).pow(digits));
    let scaled = Float::with_val(bits, x * &scale);
    let mut n = scaled.round().to_integer().unwrap_or_default();
    let neg = n < 0;
    n.abs_mut();
    let mut s = n.to_string();
    let width = digits as usize + 1;
    if s.len() < width {
        s = "0".repeat(width - s.len()) + &s;
    }
    if digits > 0 {
        s.insert(s.len() - digits as usize, '.');
    }
    if neg {
        s.insert(0, '-');
    }
    s
}

/// A real number as a fixed-point string tagged with its precision.
pub fn real(x: &Float, digits: u32) -> Value {
    json!({ "value": fixed(x, digits), "digits": digits })
}

/// A small quantity such as a residual, in scientific notation.
pub fn sci(x: &Float) -> Value {
    if x.is_zero() {
        return Value::String("0".into());
    }
    Value::String(x.to_string_radix(10, Some(6)))
}

pub fn csv(header: &[&str], rows: &[Vec<String>]) -> Output {
    let mut text = header.join(",");
    text.push('\n');
    for r in rows {
        text.push_str(&r.join(","));
        text.push('\n');
    }
    Output { text, code: 0 }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_point_rendering() {
        let x = Float::with_val(200, -0.5f64);
        assert_eq!(fixed(&x, 3), "-0.500");
        assert_eq!(fixed(&Float::with_val(200, 2.25f64), 1), "2.3");
        assert_eq!(fixed(&Float::with_val(200, 3), 0), "3");
        assert_eq!(fixed(&Float::with_val(200, 0.001f64), 2), "0.00");
    }
}
