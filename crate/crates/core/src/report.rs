//! JSON report envelope with deterministic float formatting.
//!
//! Every float is written as `%.12e` (`1.744568082131e+00`), non-finite
//! values as `null`, and struct fields in declaration order, so identical
//! runs produce byte-identical output.

use serde::{Deserialize, Serialize};
use serde_json::ser::Formatter;
use std::io;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportEnvelope<T> {
    pub command: String,
    pub input_echo: serde_json::Value,
    pub result: T,
    pub tolerance_profile: String,
    pub version: String,
}

impl<T: Serialize> ReportEnvelope<T> {
    pub fn new(command: &str, input_echo: serde_json::Value, result: T, tolerance_profile: &str) -> Self {
        Self {
            command: command.to_string(),
            input_echo,
            result,
            tolerance_profile: tolerance_profile.to_string(),
            version: VERSION.to_string(),
        }
    }
}

/// C-style `%.12e`: twelve digits after the point, signed two-digit exponent.
pub fn format_sci(x: f64) -> String {
    let s = format!("{x:.12e}");
    let (mantissa, exp) = s.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    let sign = if exp < 0 { '-' } else { '+' };
    format!("{mantissa}e{sign}{:02}", exp.abs())
}

#[derive(Default)]
struct SciFormatter;

impl Formatter for SciFormatter {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        if value.is_finite() {
            writer.write_all(format_sci(value).as_bytes())
        } else {
            writer.write_all(b"null")
        }
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(writer, value as f64)
    }
}

/// Compact JSON with `%.12e` floats.
pub fn to_json_string<T: Serialize>(value: &T) -> serde_json::Result<String> {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, SciFormatter);
    value.serialize(&mut ser)?;
    Ok(String::from_utf8(out).expect("serde_json writes UTF-8"))
}
