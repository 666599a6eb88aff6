//! Evaluation of the normalized function, its derivative and Alexander
//! transform, their partial sums, and the quotients whose real parts the
//! bounds module estimates.
//!
//! All three series share the shape `z^s · (1 + Σ w_n A_n z^n)` with
//! `s = 1` for the function and the Alexander transform and `s = 0` for
//! the derivative. The bracketed factor is called the *reduced* series
//! here; quotients are formed from reduced values so that the common
//! factor `z` cancels exactly and `z = 0` needs no special handling.

mod mittag_leffler;
mod special;

use num_complex::Complex64;

use crate::bounds::RatioKind;
use crate::coeffs::{tail_majorant, CoefficientCache, RabotnovParams, MAX_TERMS};
use crate::error::{Error, Result};

pub use mittag_leffler::eval_mittag_leffler;
pub use special::{eval_special_case, SpecialCase};

pub const DEFAULT_TOL: f64 = 1e-12;

/// Largest modulus accepted by the infinite-series evaluators.
pub const MAX_SERIES_RADIUS: f64 = 1.0 - 1e-6;

/// Relative size below which a quotient denominator counts as zero.
pub const POLE_THRESHOLD: f64 = 1e-13;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum SeriesKind {
    /// `R(z) = z + Σ A_n z^{n+1}`
    Base,
    /// `R'(z) = 1 + Σ (n+1) A_n z^n`
    Derivative,
    /// `I[R](z) = z + Σ A_n/(n+1) z^{n+1}`
    Alexander,
}

impl SeriesKind {
    pub const ALL: [SeriesKind; 3] = [SeriesKind::Base, SeriesKind::Derivative, SeriesKind::Alexander];

    pub fn weight(self, n: usize) -> f64 {
        match self {
            SeriesKind::Base => 1.0,
            SeriesKind::Derivative => (n + 1) as f64,
            SeriesKind::Alexander => 1.0 / (n + 1) as f64,
        }
    }

    /// Whether the series carries the leading factor `z`.
    fn has_z_factor(self) -> bool {
        !matches!(self, SeriesKind::Derivative)
    }

    pub fn name(self) -> &'static str {
        match self {
            SeriesKind::Base => "base",
            SeriesKind::Derivative => "derivative",
            SeriesKind::Alexander => "alexander",
        }
    }
}

impl std::fmt::Display for SeriesKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for SeriesKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "base" | "f" => Ok(SeriesKind::Base),
            "derivative" | "fp" => Ok(SeriesKind::Derivative),
            "alexander" | "i" => Ok(SeriesKind::Alexander),
            other => Err(Error::Domain(format!("unknown series kind '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub value: Complex64,
    /// Number of series coefficients `A_1..A_N` summed.
    pub terms_used: usize,
    /// Guaranteed bound on the truncation error.
    pub tail_bound: f64,
}

/// Coefficient-caching evaluator bound to one parameter triple.
///
/// Every free function in this module builds a fresh one; the verifier
/// keeps a single evaluator alive across a whole grid.
#[derive(Debug)]
pub struct Evaluator {
    cache: CoefficientCache,
}

impl Evaluator {
    pub fn new(params: RabotnovParams) -> Self {
        Self { cache: CoefficientCache::new(params) }
    }

    pub fn params(&self) -> &RabotnovParams {
        self.cache.params()
    }

    /// Smallest `N` whose scaled tail majorant is within `tol`, together
    /// with that bound.
    fn truncation(&self, kind: SeriesKind, radius: f64, tol: f64) -> Result<(usize, f64)> {
        let params = self.params();
        let mut last = f64::INFINITY;
        let mut power = if kind.has_z_factor() { radius } else { 1.0 };
        for n in 0..=MAX_TERMS {
            last = tail_majorant(params, n, kind) * power;
            if last <= tol {
                return Ok((n, last));
            }
            power *= radius;
        }
        Err(Error::Convergence { tol, cap: MAX_TERMS, tail_bound: last })
    }

    /// `1 + Σ_{n=1}^{N} w_n A_n z^n` by Horner from the highest degree.
    fn reduced_polynomial(&self, kind: SeriesKind, degree: usize, z: Complex64) -> Complex64 {
        self.cache.with_prefix(degree, |coeffs| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (i, a) in coeffs.iter().enumerate().rev() {
                acc = (acc + a * kind.weight(i + 1)) * z;
            }
            acc + 1.0
        })
    }

    fn reduced_series(&self, kind: SeriesKind, z: Complex64, tol: f64) -> Result<EvalResult> {
        check_tol(tol)?;
        let r = z.norm();
        if !(r <= MAX_SERIES_RADIUS) {
            return Err(Error::Domain(format!(
                "series evaluation needs |z| <= {MAX_SERIES_RADIUS}, got |z| = {r}"
            )));
        }
        if r == 0.0 {
            return Ok(EvalResult { value: Complex64::new(1.0, 0.0), terms_used: 0, tail_bound: 0.0 });
        }
        let (n, tail_bound) = self.truncation(kind, r, tol)?;
        Ok(EvalResult { value: self.reduced_polynomial(kind, n, z), terms_used: n, tail_bound })
    }

    pub fn series(&self, kind: SeriesKind, z: Complex64, tol: f64) -> Result<EvalResult> {
        let mut res = self.reduced_series(kind, z, tol)?;
        if kind.has_z_factor() {
            res.value *= z;
        }
        Ok(res)
    }

    pub fn partial_sum(&self, kind: SeriesKind, m: usize, z: Complex64) -> Complex64 {
        let g = self.reduced_polynomial(kind, m, z);
        if kind.has_z_factor() {
            z * g
        } else {
            g
        }
    }

    /// Numerator and denominator of `ratio`, both in reduced form.
    pub fn ratio_parts(
        &self,
        ratio: RatioKind,
        m: usize,
        z: Complex64,
        tol: f64,
    ) -> Result<(Complex64, Complex64)> {
        let kind = ratio.series_kind();
        let full = self.reduced_series(kind, z, tol)?.value;
        let partial = self.reduced_polynomial(kind, m, z);
        Ok(if ratio.partial_sum_on_top() { (partial, full) } else { (full, partial) })
    }

    pub fn ratio(&self, ratio: RatioKind, m: usize, z: Complex64, tol: f64) -> Result<Complex64> {
        let (num, den) = self.ratio_parts(ratio, m, z, tol)?;
        if is_pole_proximate(num, den) {
            return Err(Error::PoleProximity { numerator: num.norm(), denominator: den.norm() });
        }
        Ok(num / den)
    }
}

pub(crate) fn is_pole_proximate(num: Complex64, den: Complex64) -> bool {
    !(den.norm() >= POLE_THRESHOLD * num.norm().max(1.0))
}

pub(crate) fn check_tol(tol: f64) -> Result<()> {
    if tol.is_finite() && tol > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("tolerance must be finite and positive, got {tol}")))
    }
}

/// Infinite series of `kind` at `z`, truncated once the tail majorant is
/// within `tol`.
pub fn eval_series(params: &RabotnovParams, kind: SeriesKind, z: Complex64, tol: f64) -> Result<EvalResult> {
    Evaluator::new(*params).series(kind, z, tol)
}

/// The `m`-th partial sum; `m = 0` gives `z` (or `1` for the derivative).
pub fn eval_partial_sum(params: &RabotnovParams, kind: SeriesKind, m: usize, z: Complex64) -> Complex64 {
    Evaluator::new(*params).partial_sum(kind, m, z)
}

/// One of the six function / partial-sum quotients at `z`.
///
/// The common factor `z` is cancelled before dividing, so `z = 0` yields
/// the limit `1`.
pub fn eval_ratio(
    params: &RabotnovParams,
    ratio: RatioKind,
    m: usize,
    z: Complex64,
    tol: f64,
) -> Result<Complex64> {
    Evaluator::new(*params).ratio(ratio, m, z, tol)
}
