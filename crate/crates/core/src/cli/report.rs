use std::io;

use serde::{Deserialize, Serialize};
use serde_json::ser::{Formatter, PrettyFormatter};

use super::config::Config;
use crate::error::{Error, Result};
use crate::norms::{mixed_norm, product_weighted_l1, product_weighted_sup, Exponent, MixedNormSpec, MixedVariant};
use crate::repr::Weight;
use crate::schur::BoundednessReport;
use crate::transforms::CoeffField2D;

pub const VERSION: &str = concat!("coorbit ", env!("CARGO_PKG_VERSION"));

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NormRow {
    pub name: String,
    pub p: Exponent,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NormTable {
    pub title: String,
    pub rows: Vec<NormRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub version: String,
    pub command: String,
    pub config: Config,
    pub reports: Vec<BoundednessReport>,
    pub norm_tables: Vec<NormTable>,
    /// Wall-clock seconds, only with `timing=true` so that reports stay reproducible.
    pub duration_seconds: Option<f64>,
}

impl ReportDocument {
    pub fn new(command: &str, config: &Config) -> Self {
        ReportDocument {
            version: VERSION.to_string(),
            command: command.to_string(),
            config: config.clone(),
            reports: Vec::new(),
            norm_tables: Vec::new(),
            duration_seconds: None,
        }
    }

    pub fn to_json(&self) -> Result<String> {
        let mut buf = Vec::new();
        let mut ser = serde_json::Serializer::with_formatter(&mut buf, FixedDigits::default());
        self.serialize(&mut ser)
            .map_err(|e| Error::Io(format!("report serialization: {e}")))?;
        buf.push(b'\n');
        String::from_utf8(buf).map_err(|e| Error::Io(e.to_string()))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }
}

/// Pretty JSON with every float written as `d.dddddddddddddddde<exp>`
/// (17 significant digits).
#[derive(Default)]
struct FixedDigits {
    pretty: PrettyFormatter<'static>,
}

impl Formatter for FixedDigits {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        if value.is_finite() {
            write!(writer, "{value:.16e}")
        } else {
            writer.write_all(b"null")
        }
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(writer, f64::from(value))
    }

    fn begin_array<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.pretty.begin_array(writer)
    }

    fn end_array<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.pretty.end_array(writer)
    }

    fn begin_array_value<W: ?Sized + io::Write>(&mut self, writer: &mut W, first: bool) -> io::Result<()> {
        self.pretty.begin_array_value(writer, first)
    }

    fn end_array_value<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.pretty.end_array_value(writer)
    }

    fn begin_object<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.pretty.begin_object(writer)
    }

    fn end_object<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.pretty.end_object(writer)
    }

    fn begin_object_key<W: ?Sized + io::Write>(&mut self, writer: &mut W, first: bool) -> io::Result<()> {
        self.pretty.begin_object_key(writer, first)
    }

    fn begin_object_value<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.pretty.begin_object_value(writer)
    }

    fn end_object_value<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.pretty.end_object_value(writer)
    }
}

/// Mixed norms of a tensor transform under `m1^{-1} (x) m2` for `p = 1, 2, inf`,
/// followed by the product-weighted `l^1` and `l^inf_{1/w}` norms with `w = m1 (x) m2`.
pub fn kernel_norm_table(title: &str, vk: &CoeffField2D, m1: &Weight, m2: &Weight) -> Result<NormTable> {
    let mut rows = Vec::new();
    for (name, variant) in [
        ("sup-over-first", MixedVariant::SupOverFirst),
        ("sup-over-second", MixedVariant::SupOverSecond),
    ] {
        for p in [Exponent::ONE, Exponent::TWO, Exponent::Infinite] {
            let value = mixed_norm(vk, &MixedNormSpec { p, variant, m1: *m1, m2: *m2 })?;
            rows.push(NormRow { name: name.to_string(), p, value });
        }
    }
    rows.push(NormRow {
        name: "product-weighted-l1".into(),
        p: Exponent::ONE,
        value: product_weighted_l1(vk, m1, m2)?,
    });
    rows.push(NormRow {
        name: "product-weighted-sup".into(),
        p: Exponent::Infinite,
        value: product_weighted_sup(vk, m1, m2)?,
    });
    Ok(NormTable { title: title.to_string(), rows })
}
