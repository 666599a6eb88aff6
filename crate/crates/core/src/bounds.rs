//! Closed-form bounds.
//!
//! With `c = γ+α` and `b = |β|`:
//!
//! | quotient          | lower bound             | hypothesis |
//! |-------------------|-------------------------|------------|
//! | `R / R_m`         | `(2c − 3b) / (2c − b)`  | `2c ≥ 3b`  |
//! | `R_m / R`         | `(2c − b) / (2c + b)`   | `2c ≥ 3b`  |
//! | `R' / R'_m`       | `(c − 3b) / (c − b)`    | `c ≥ 3b`   |
//! | `R'_m / R'`       | `(c − b) / (c + b)`     | `c ≥ 3b`   |
//! | `I[R] / I[R]_m`   | `(2c − 2b) / (2c − b)`  | `c ≥ b`    |
//! | `I[R]_m / I[R]`   | `(2c − b) / (2c)`       | `c ≥ b`    |
//!
//! and the modulus bounds `|R| ≤ (2c+b)/(2c−b)` (`2c > b`),
//! `|R'| ≤ (c+b)/(c−b)` (`c > b`), `|I[R]| ≤ 2c/(2c−b)` (`2c > b`).

use crate::coeffs::RabotnovParams;
use crate::error::{Error, Result};
use crate::functions::SeriesKind;

/// The six quotients of a series and its `m`-th partial sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum RatioKind {
    FOverFm,
    FmOverF,
    FpOverFmp,
    FmpOverFp,
    IOverIm,
    ImOverI,
}

impl RatioKind {
    pub const ALL: [RatioKind; 6] = [
        RatioKind::FOverFm,
        RatioKind::FmOverF,
        RatioKind::FpOverFmp,
        RatioKind::FmpOverFp,
        RatioKind::IOverIm,
        RatioKind::ImOverI,
    ];

    pub fn series_kind(self) -> SeriesKind {
        match self {
            RatioKind::FOverFm | RatioKind::FmOverF => SeriesKind::Base,
            RatioKind::FpOverFmp | RatioKind::FmpOverFp => SeriesKind::Derivative,
            RatioKind::IOverIm | RatioKind::ImOverI => SeriesKind::Alexander,
        }
    }

    /// True for the reciprocal quotients (partial sum in the numerator).
    pub fn partial_sum_on_top(self) -> bool {
        matches!(self, RatioKind::FmOverF | RatioKind::FmpOverFp | RatioKind::ImOverI)
    }

    pub fn name(self) -> &'static str {
        match self {
            RatioKind::FOverFm => "FOverFm",
            RatioKind::FmOverF => "FmOverF",
            RatioKind::FpOverFmp => "FpOverFmp",
            RatioKind::FmpOverFp => "FmpOverFp",
            RatioKind::IOverIm => "IOverIm",
            RatioKind::ImOverI => "ImOverI",
        }
    }

    /// Human-readable quotient, e.g. `R/R_m`.
    pub fn formula(self) -> &'static str {
        match self {
            RatioKind::FOverFm => "R/R_m",
            RatioKind::FmOverF => "R_m/R",
            RatioKind::FpOverFmp => "R'/R'_m",
            RatioKind::FmpOverFp => "R'_m/R'",
            RatioKind::IOverIm => "I[R]/I[R]_m",
            RatioKind::ImOverI => "I[R]_m/I[R]",
        }
    }
}

impl std::fmt::Display for RatioKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for RatioKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s.chars().filter(|c| c.is_ascii_alphanumeric()).collect::<String>().to_ascii_lowercase();
        RatioKind::ALL
            .into_iter()
            .find(|r| r.name().to_ascii_lowercase() == key)
            .ok_or_else(|| Error::Domain(format!("unknown ratio '{s}'")))
    }
}

/// Whether a bound limits a quantity from below (real parts of quotients)
/// or from above (moduli).
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Orientation {
    Lower,
    Upper,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundResult {
    pub bound: f64,
    pub hypothesis_ok: bool,
    pub hypothesis_text: &'static str,
    pub orientation: Orientation,
}

/// Lower bound on `Re{ratio}` over the unit disk, valid for every `m`.
///
/// The value is returned even when the hypothesis fails so that callers
/// can probe the boundary; `hypothesis_ok` says whether it is proven.
pub fn theorem_bound(params: &RabotnovParams, ratio: RatioKind) -> BoundResult {
    let c = params.shape_sum();
    let b = params.beta_abs();
    let (bound, ok, text) = match ratio {
        RatioKind::FOverFm => ((2.0 * c - 3.0 * b) / (2.0 * c - b), 2.0 * c >= 3.0 * b, "2(γ+α) ≥ 3|β|"),
        RatioKind::FmOverF => ((2.0 * c - b) / (2.0 * c + b), 2.0 * c >= 3.0 * b, "2(γ+α) ≥ 3|β|"),
        RatioKind::FpOverFmp => ((c - 3.0 * b) / (c - b), c >= 3.0 * b, "γ+α ≥ 3|β|"),
        RatioKind::FmpOverFp => ((c - b) / (c + b), c >= 3.0 * b, "γ+α ≥ 3|β|"),
        RatioKind::IOverIm => ((2.0 * c - 2.0 * b) / (2.0 * c - b), c >= b, "γ+α ≥ |β|"),
        RatioKind::ImOverI => ((2.0 * c - b) / (2.0 * c), c >= b, "γ+α ≥ |β|"),
    };
    BoundResult { bound, hypothesis_ok: ok, hypothesis_text: text, orientation: Orientation::Lower }
}

/// Upper bound on the modulus of the series of `kind` over the unit disk.
///
/// Hypotheses are strict; at equality the bound is infinite or undefined
/// and `hypothesis_ok` is false.
pub fn lemma2_bound(params: &RabotnovParams, kind: SeriesKind) -> BoundResult {
    let c = params.shape_sum();
    let b = params.beta_abs();
    let (bound, ok, text) = match kind {
        SeriesKind::Base => ((2.0 * c + b) / (2.0 * c - b), 2.0 * c > b, "2(γ+α) > |β|"),
        SeriesKind::Derivative => ((c + b) / (c - b), c > b, "γ+α > |β|"),
        SeriesKind::Alexander => (2.0 * c / (2.0 * c - b), 2.0 * c > b, "2(γ+α) > |β|"),
    };
    BoundResult { bound, hypothesis_ok: ok, hypothesis_text: text, orientation: Orientation::Upper }
}
