//! Function-document parsing and rendering.
//!
//! Files are JSON objects with a `terms` array of
//! `{"left": [w, x, y, z], "right": [w, x, y, z]}` entries. Numbers are
//! written with 17 significant digits so a parse-print cycle is lossless for
//! doubles; human-readable output rounds to 6 significant digits.

use std::io::{self, Write};

use quatlin::linfun::{GeneralLinearFunction, TermPair};
use quatlin::quat::Quaternion;
use serde::ser::Serialize;
use serde::Deserialize;
use serde_json::ser::{Formatter, PrettyFormatter, Serializer};

/// Serialized form of a general linear function.
#[derive(Debug, serde::Serialize, Deserialize)]
pub struct FunctionDocument {
    pub terms: Vec<TermDocument>,
}

#[derive(Debug, serde::Serialize, Deserialize)]
pub struct TermDocument {
    pub left: [f64; 4],
    pub right: [f64; 4],
}

impl FunctionDocument {
    pub fn from_function(f: &GeneralLinearFunction) -> Self {
        Self {
            terms: f
                .terms
                .iter()
                .map(|t| TermDocument {
                    left: t.left.as_vector(),
                    right: t.right.as_vector(),
                })
                .collect(),
        }
    }

    /// Parse and validate a document. The error string carries the position
    /// or the offending field.
    pub fn parse(text: &str) -> Result<Self, String> {
        let doc: FunctionDocument =
            serde_json::from_str(text).map_err(|e| e.to_string())?;
        for (n, term) in doc.terms.iter().enumerate() {
            for (name, array) in [("left", &term.left), ("right", &term.right)] {
                if let Some(c) = array.iter().position(|v| !v.is_finite()) {
                    return Err(format!(
                        "term {n}: {name} component {c} is not a finite number"
                    ));
                }
            }
        }
        Ok(doc)
    }

    pub fn to_function(&self) -> GeneralLinearFunction {
        GeneralLinearFunction::new(
            self.terms
                .iter()
                .map(|t| {
                    TermPair::new(
                        Quaternion::from_vector(t.left),
                        Quaternion::from_vector(t.right),
                    )
                })
                .collect(),
        )
    }
}

// ── JSON writer ──────────────────────────────────────────────────────

/// Pretty formatter that prints every float with 17 significant digits.
struct SciFormatter<'a> {
    inner: PrettyFormatter<'a>,
}

impl<'a> SciFormatter<'a> {
    fn new() -> Self {
        Self { inner: PrettyFormatter::new() }
    }
}

impl<'a> Formatter for SciFormatter<'a> {
    fn write_f64<W: ?Sized + Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        write!(writer, "{value:.16e}")
    }

    fn begin_array<W: ?Sized + Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.inner.begin_array(writer)
    }

    fn end_array<W: ?Sized + Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.inner.end_array(writer)
    }

    fn begin_array_value<W: ?Sized + Write>(&mut self, writer: &mut W, first: bool) -> io::Result<()> {
        self.inner.begin_array_value(writer, first)
    }

    fn end_array_value<W: ?Sized + Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.inner.end_array_value(writer)
    }

    fn begin_object<W: ?Sized + Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.inner.begin_object(writer)
    }

    fn end_object<W: ?Sized + Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.inner.end_object(writer)
    }

    fn begin_object_key<W: ?Sized + Write>(&mut self, writer: &mut W, first: bool) -> io::Result<()> {
        self.inner.begin_object_key(writer, first)
    }

    fn begin_object_value<W: ?Sized + Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.inner.begin_object_value(writer)
    }

    fn end_object_value<W: ?Sized + Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.inner.end_object_value(writer)
    }
}

/// Serialize any value as pretty JSON with 17-significant-digit floats and a
/// trailing newline.
pub fn to_json_string<T: Serialize>(value: &T) -> String {
    let mut out = Vec::new();
    let mut ser = Serializer::with_formatter(&mut out, SciFormatter::new());
    value
        .serialize(&mut ser)
        .expect("in-memory JSON serialization");
    out.push(b'\n');
    String::from_utf8(out).expect("serializer emits UTF-8")
}

// ── Human-readable rendering ─────────────────────────────────────────

/// Format with 6 significant digits, decimal where reasonable, scientific
/// otherwise; trailing zeros trimmed.
pub fn sig6(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let sci = format!("{x:.5e}");
    let epos = sci.find('e').expect("exponent marker");
    let exp: i32 = sci[epos + 1..].parse().expect("exponent digits");
    if (-4..=5).contains(&exp) {
        let precision = (5 - exp).max(0) as usize;
        let mut s = format!("{x:.precision$}");
        if s.contains('.') {
            while s.ends_with('0') {
                s.pop();
            }
            if s.ends_with('.') {
                s.pop();
            }
        }
        s
    } else {
        let mut mantissa = sci[..epos].to_string();
        if mantissa.contains('.') {
            while mantissa.ends_with('0') {
                mantissa.pop();
            }
            if mantissa.ends_with('.') {
                mantissa.pop();
            }
        }
        format!("{mantissa}e{exp}")
    }
}

/// `w + xi + yj + zk` with folded signs, 6 significant digits.
pub fn quat(q: Quaternion) -> String {
    let mut s = sig6(q.w);
    for (v, unit) in [(q.x, "i"), (q.y, "j"), (q.z, "k")] {
        if v < 0.0 {
            s.push_str(&format!(" - {}{unit}", sig6(-v)));
        } else {
            s.push_str(&format!(" + {}{unit}", sig6(v)));
        }
    }
    s
}

/// Four indented rows of 6-significant-digit entries.
pub fn matrix(m: &[[f64; 4]; 4]) -> String {
    m.iter()
        .map(|row| {
            let cells: Vec<String> = row.iter().map(|&e| sig6(e)).collect();
            format!("  {}", cells.join(" "))
        })
        .collect::<Vec<_>>()
        .join("\n")
}
