//! Flat, line-oriented certificate records (JSON lines and CSV).
//!
//! CSV floats are written with 17 significant digits; JSON uses
//! shortest round-trip formatting. Both parse back to identical values.

use serde::{Deserialize, Serialize};

use super::{CorollaryRow, VerificationCertificate};
use crate::bounds::Orientation;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub check: String,
    pub target: String,
    pub alpha: f64,
    pub beta_re: f64,
    pub beta_im: f64,
    pub gamma: f64,
    pub m: usize,
    pub bound: f64,
    pub observed_infimum: f64,
    pub argmin_re: f64,
    pub argmin_im: f64,
    pub margin: f64,
    pub pole_flags: usize,
    /// Semicolon-separated radii.
    pub radii: String,
    pub points_per_circle: usize,
    pub refine_rounds: usize,
    pub orientation: Orientation,
    pub pass: bool,
    pub corollary: Option<u8>,
    pub constant: Option<f64>,
}

pub const CSV_HEADER: [&str; 20] = [
    "check",
    "target",
    "alpha",
    "beta_re",
    "beta_im",
    "gamma",
    "m",
    "bound",
    "observed_infimum",
    "argmin_re",
    "argmin_im",
    "margin",
    "pole_flags",
    "radii",
    "points_per_circle",
    "refine_rounds",
    "orientation",
    "pass",
    "corollary",
    "constant",
];

pub(crate) fn sig17(x: f64) -> String {
    format!("{x:.16e}")
}

impl From<&VerificationCertificate> for CertificateRecord {
    fn from(c: &VerificationCertificate) -> Self {
        Self {
            check: c.check.label().to_string(),
            target: c.check.target().to_string(),
            alpha: c.params.alpha(),
            beta_re: c.params.beta().re,
            beta_im: c.params.beta().im,
            gamma: c.params.gamma_shape(),
            m: c.m,
            bound: c.bound,
            observed_infimum: c.observed_infimum,
            argmin_re: c.argmin.re,
            argmin_im: c.argmin.im,
            margin: c.margin,
            pole_flags: c.pole_flags,
            radii: c.grid.radii.iter().map(|r| sig17(*r)).collect::<Vec<_>>().join(";"),
            points_per_circle: c.grid.points_per_circle,
            refine_rounds: c.grid.refine_rounds,
            orientation: c.check.orientation(),
            pass: c.pass,
            corollary: None,
            constant: None,
        }
    }
}

impl From<&CorollaryRow> for CertificateRecord {
    fn from(row: &CorollaryRow) -> Self {
        Self {
            corollary: Some(row.corollary),
            constant: Some(row.constant_value()),
            ..Self::from(&row.certificate)
        }
    }
}

impl CertificateRecord {
    fn csv_fields(&self) -> Vec<String> {
        vec![
            self.check.clone(),
            self.target.clone(),
            sig17(self.alpha),
            sig17(self.beta_re),
            sig17(self.beta_im),
            sig17(self.gamma),
            self.m.to_string(),
            sig17(self.bound),
            sig17(self.observed_infimum),
            sig17(self.argmin_re),
            sig17(self.argmin_im),
            sig17(self.margin),
            self.pole_flags.to_string(),
            self.radii.clone(),
            self.points_per_circle.to_string(),
            self.refine_rounds.to_string(),
            format!("{:?}", self.orientation),
            self.pass.to_string(),
            self.corollary.map(|c| c.to_string()).unwrap_or_default(),
            self.constant.map(sig17).unwrap_or_default(),
        ]
    }

    pub fn radii_values(&self) -> Result<Vec<f64>> {
        self.radii
            .split(';')
            .map(|s| s.parse::<f64>().map_err(|e| Error::Domain(format!("bad radius '{s}': {e}"))))
            .collect()
    }
}

pub fn to_csv(records: &[CertificateRecord]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("in-memory write");
    for r in records {
        w.write_record(r.csv_fields()).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
}

pub fn parse_csv(text: &str) -> Result<Vec<CertificateRecord>> {
    csv::Reader::from_reader(text.as_bytes())
        .deserialize()
        .map(|r| r.map_err(|e| Error::Domain(format!("bad csv record: {e}"))))
        .collect()
}

pub fn to_json_lines(records: &[CertificateRecord]) -> String {
    records
        .iter()
        .map(|r| serde_json::to_string(r).expect("record serializes") + "\n")
        .collect()
}

pub fn parse_json_lines(text: &str) -> Result<Vec<CertificateRecord>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| serde_json::from_str(l).map_err(|e| Error::Domain(format!("bad json record: {e}"))))
        .collect()
}
