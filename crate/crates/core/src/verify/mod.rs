//! Sampled verification of the bounds on the unit disk.
//!
//! A quotient `f/g` is analytic wherever `g` has no zero, so the minimum of
//! its real part over a closed disk sits on the boundary circle. The grid
//! therefore concentrates on radii close to 1 while still scanning the
//! interior to catch zeros of the denominator. Certificates cover
//! `|z| ≤ max radius` (0.999 by default), not the open disk itself.

mod grid;
mod record;

use num_complex::Complex64;

use crate::bounds::{lemma2_bound, theorem_bound, Orientation, RatioKind};
use crate::coeffs::RabotnovParams;
use crate::error::{Error, Result};
use crate::functions::{is_pole_proximate, Evaluator, SeriesKind, DEFAULT_TOL};

pub use grid::{SamplingGrid, MIN_POINTS_PER_CIRCLE};
pub use record::{parse_csv, parse_json_lines, to_csv, to_json_lines, CertificateRecord, CSV_HEADER};

/// Slack on `margin` before a certificate fails.
pub const MARGIN_TOL: f64 = 1e-9;

/// What a certificate checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    /// Lower bound on `Re{ratio}`.
    Theorem(RatioKind),
    /// Upper bound on the modulus of a series.
    Lemma2(SeriesKind),
    /// `Re{R'} ≥ bound of R'/R'_0`, which is positive on the hypothesis region.
    Univalence,
}

impl CheckKind {
    pub fn orientation(self) -> Orientation {
        match self {
            CheckKind::Lemma2(_) => Orientation::Upper,
            _ => Orientation::Lower,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            CheckKind::Theorem(_) => "theorem",
            CheckKind::Lemma2(_) => "lemma2",
            CheckKind::Univalence => "univalence",
        }
    }

    pub fn target(self) -> &'static str {
        match self {
            CheckKind::Theorem(r) => r.name(),
            CheckKind::Lemma2(k) => k.name(),
            CheckKind::Univalence => "derivative",
        }
    }
}

/// Record of one sampled verification run.
///
/// For lower-bound checks `observed_infimum` is the smallest sampled real
/// part and `margin = observed − bound`. For modulus checks
/// ([`Orientation::Upper`]) it holds the largest sampled modulus, `argmin`
/// its location, and `margin = bound − observed`. Either way
/// `pass ⇔ margin ≥ −1e−9`.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationCertificate {
    pub params: RabotnovParams,
    pub check: CheckKind,
    pub m: usize,
    pub bound: f64,
    pub observed_infimum: f64,
    pub argmin: Complex64,
    pub margin: f64,
    pub pole_flags: usize,
    pub grid: SamplingGrid,
    pub pass: bool,
}

impl VerificationCertificate {
    fn with_bound(mut self, bound: f64) -> Self {
        self.bound = bound;
        self.margin = match self.check.orientation() {
            Orientation::Lower => self.observed_infimum - bound,
            Orientation::Upper => bound - self.observed_infimum,
        };
        self.pass = self.margin >= -MARGIN_TOL;
        self
    }
}

/// Smallest sampled `Re{ratio}` over `grid`; `bound`, `margin` are NaN and
/// `pass` is false until a bound is attached.
pub fn estimate_infimum(
    params: &RabotnovParams,
    ratio: RatioKind,
    m: usize,
    grid: &SamplingGrid,
) -> Result<VerificationCertificate> {
    let ev = Evaluator::new(*params);
    let scan = grid::minimize(grid, |z| {
        let (num, den) = ev.ratio_parts(ratio, m, z, DEFAULT_TOL)?;
        Ok((!is_pole_proximate(num, den)).then(|| (num / den).re))
    })?;
    Ok(VerificationCertificate {
        params: *params,
        check: CheckKind::Theorem(ratio),
        m,
        bound: f64::NAN,
        observed_infimum: scan.min,
        argmin: scan.argmin,
        margin: f64::NAN,
        pole_flags: scan.pole_flags,
        grid: grid.clone(),
        pass: false,
    })
}

/// Checks the lower bound for `ratio` on `grid`.
///
/// Refuses (rather than fails) when the hypothesis does not hold.
pub fn verify_theorem(
    params: &RabotnovParams,
    ratio: RatioKind,
    m: usize,
    grid: &SamplingGrid,
) -> Result<VerificationCertificate> {
    let bound = theorem_bound(params, ratio);
    if !bound.hypothesis_ok {
        return Err(Error::Hypothesis(format!("{} needs {}", ratio.formula(), bound.hypothesis_text)));
    }
    Ok(estimate_infimum(params, ratio, m, grid)?.with_bound(bound.bound))
}

/// Checks the modulus bound for the series of `kind` on `grid`.
pub fn verify_lemma2(
    params: &RabotnovParams,
    kind: SeriesKind,
    grid: &SamplingGrid,
) -> Result<VerificationCertificate> {
    let bound = lemma2_bound(params, kind);
    if !bound.hypothesis_ok {
        return Err(Error::Hypothesis(format!("modulus bound for {kind} needs {}", bound.hypothesis_text)));
    }
    let ev = Evaluator::new(*params);
    let scan = grid::minimize(grid, |z| Ok(Some(-ev.series(kind, z, DEFAULT_TOL)?.value.norm())))?;
    let cert = VerificationCertificate {
        params: *params,
        check: CheckKind::Lemma2(kind),
        m: 0,
        bound: f64::NAN,
        observed_infimum: -scan.min,
        argmin: scan.argmin,
        margin: f64::NAN,
        pole_flags: scan.pole_flags,
        grid: grid.clone(),
        pass: false,
    };
    Ok(cert.with_bound(bound.bound))
}

/// Checks `min Re{R'} ≥ (γ+α−3|β|)/(γ+α−|β|) ≥ 0` on `grid`.
pub fn verify_univalence_remark(params: &RabotnovParams, grid: &SamplingGrid) -> Result<VerificationCertificate> {
    let bound = theorem_bound(params, RatioKind::FpOverFmp);
    if !bound.hypothesis_ok {
        return Err(Error::Hypothesis(format!("Re{{R'}} > 0 needs {}", bound.hypothesis_text)));
    }
    let ev = Evaluator::new(*params);
    let scan = grid::minimize(grid, |z| Ok(Some(ev.series(SeriesKind::Derivative, z, DEFAULT_TOL)?.value.re)))?;
    let cert = VerificationCertificate {
        params: *params,
        check: CheckKind::Univalence,
        m: 0,
        bound: f64::NAN,
        observed_infimum: scan.min,
        argmin: scan.argmin,
        margin: f64::NAN,
        pole_flags: scan.pole_flags,
        grid: grid.clone(),
        pass: false,
    };
    Ok(cert.with_bound(bound.bound))
}

/// One displayed inequality of the special-case table.
#[derive(Debug, Clone, PartialEq)]
pub struct CorollaryRow {
    /// 1 to 4.
    pub corollary: u8,
    /// The published constant as a fraction `(numerator, denominator)`.
    pub constant: (u32, u32),
    pub certificate: VerificationCertificate,
}

impl CorollaryRow {
    pub fn constant_value(&self) -> f64 {
        f64::from(self.constant.0) / f64::from(self.constant.1)
    }
}

/// The fourteen special-case inequalities: `(corollary, (α, β, γ), ratio, constant)`.
pub const COROLLARIES: [(u8, (f64, f64, f64), RatioKind, (u32, u32)); 14] = [
    (1, (0.0, -1.0 / 3.0, 1.0), RatioKind::FOverFm, (3, 5)),
    (1, (0.0, -1.0 / 3.0, 1.0), RatioKind::FmOverF, (5, 7)),
    (1, (0.0, -1.0 / 3.0, 1.0), RatioKind::FpOverFmp, (0, 1)),
    (1, (0.0, -1.0 / 3.0, 1.0), RatioKind::FmpOverFp, (1, 2)),
    (2, (1.0, 0.5, 1.0), RatioKind::FOverFm, (5, 7)),
    (2, (1.0, 0.5, 1.0), RatioKind::FmOverF, (7, 9)),
    (2, (1.0, 0.5, 1.0), RatioKind::FpOverFmp, (1, 3)),
    (2, (1.0, 0.5, 1.0), RatioKind::FmpOverFp, (3, 5)),
    (3, (1.0, -0.25, 1.0), RatioKind::FOverFm, (13, 15)),
    (3, (1.0, -0.25, 1.0), RatioKind::FmOverF, (15, 17)),
    (3, (1.0, -0.25, 1.0), RatioKind::FpOverFmp, (5, 7)),
    (3, (1.0, -0.25, 1.0), RatioKind::FmpOverFp, (7, 9)),
    (4, (1.0, 1.0, 1.0), RatioKind::FOverFm, (1, 3)),
    (4, (1.0, 1.0, 1.0), RatioKind::FmOverF, (3, 5)),
];

/// Verifies every special-case inequality at `m = 0` on the default grid.
pub fn corollary_table() -> Result<Vec<CorollaryRow>> {
    corollary_table_on(&SamplingGrid::default())
}

pub fn corollary_table_on(grid: &SamplingGrid) -> Result<Vec<CorollaryRow>> {
    COROLLARIES
        .iter()
        .map(|&(corollary, (a, b, g), ratio, constant)| {
            let params = RabotnovParams::real(a, b, g)?;
            let certificate = verify_theorem(&params, ratio, 0, grid)?;
            Ok(CorollaryRow { corollary, constant, certificate })
        })
        .collect()
}
