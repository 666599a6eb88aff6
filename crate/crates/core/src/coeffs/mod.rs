//! Series coefficients `A_n = β^n Γ(γ+α) / Γ((γ+α)(n+1))`, their weighted
//! variants, and the factorial majorant `|A_n| ≤ (|β|/(γ+α))^n / n!` used
//! for truncation control.

mod gamma;

use std::sync::RwLock;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::functions::SeriesKind;

pub use gamma::log_gamma;
pub(crate) use gamma::log_gamma_unchecked;

/// Hard cap on the truncation index of any infinite series.
pub const MAX_TERMS: usize = 500;

/// The parameter triple `(α, β, γ)`: `α ≥ 0`, `γ ≥ 1`, `β` any finite
/// complex number.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RabotnovParams {
    alpha: f64,
    beta: Complex64,
    gamma_shape: f64,
}

impl RabotnovParams {
    pub fn new(alpha: f64, beta: Complex64, gamma_shape: f64) -> Result<Self> {
        if !(alpha.is_finite() && alpha >= 0.0) {
            return Err(Error::Domain(format!("alpha must be finite and >= 0, got {alpha}")));
        }
        if !(gamma_shape.is_finite() && gamma_shape >= 1.0) {
            return Err(Error::Domain(format!(
                "gamma must be finite and >= 1, got {gamma_shape}"
            )));
        }
        if !(beta.re.is_finite() && beta.im.is_finite()) {
            return Err(Error::Domain(format!("beta must be finite, got {beta}")));
        }
        Ok(Self { alpha, beta, gamma_shape })
    }

    /// Shorthand for real `β`.
    pub fn real(alpha: f64, beta: f64, gamma_shape: f64) -> Result<Self> {
        Self::new(alpha, Complex64::new(beta, 0.0), gamma_shape)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> Complex64 {
        self.beta
    }

    pub fn gamma_shape(&self) -> f64 {
        self.gamma_shape
    }

    /// `γ + α`, the only combination of the two real parameters that enters
    /// the coefficients.
    pub fn shape_sum(&self) -> f64 {
        self.gamma_shape + self.alpha
    }

    pub fn beta_abs(&self) -> f64 {
        self.beta.norm()
    }

    /// `|β| / (γ+α)`, the ratio of the majorant's exponential series.
    pub fn majorant_ratio(&self) -> f64 {
        self.beta_abs() / self.shape_sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Coefficient {
    pub index: usize,
    pub value: Complex64,
    /// `(|β|/(γ+α))^n / n!`
    pub magnitude_majorant: f64,
}

/// `A_n` for `n ≥ 1`, computed in log space with `β^n` in polar form.
pub fn coefficient(params: &RabotnovParams, n: usize) -> Result<Coefficient> {
    if n == 0 {
        return Err(Error::Domain("coefficient index must be >= 1".into()));
    }
    Ok(Coefficient {
        index: n,
        value: coefficient_value(params, n),
        magnitude_majorant: factorial_power(params.majorant_ratio(), n),
    })
}

pub(crate) fn coefficient_value(params: &RabotnovParams, n: usize) -> Complex64 {
    let b = params.beta_abs();
    if b == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    let c = params.shape_sum();
    let nf = n as f64;
    let log_mag = nf * b.ln() + log_gamma_unchecked(c) - log_gamma_unchecked(c * (nf + 1.0));
    let mag = log_mag.exp();
    let beta = params.beta;
    if beta.im == 0.0 {
        // exact phase for real β
        let sign = if beta.re < 0.0 && n % 2 == 1 { -1.0 } else { 1.0 };
        return Complex64::new(sign * mag, 0.0);
    }
    Complex64::from_polar(mag, nf * beta.arg())
}

/// `A_n` times the weight of `kind`: `1`, `n+1` or `1/(n+1)`.
pub fn weighted_coefficient(params: &RabotnovParams, n: usize, kind: SeriesKind) -> Result<Complex64> {
    Ok(coefficient(params, n)?.value * kind.weight(n))
}

/// `ln Γ((γ+α)n) − [(n−1) ln(γ+α) + ln (n−1)! + ln Γ(γ+α)]`.
///
/// Nonnegative whenever `α ≥ 0`, `γ ≥ 1`, and exactly zero when `γ+α = 1`.
pub fn lemma1_margin(alpha: f64, gamma_shape: f64, n: usize) -> Result<f64> {
    if !(alpha.is_finite() && alpha >= 0.0) {
        return Err(Error::Domain(format!("alpha must be >= 0, got {alpha}")));
    }
    if !(gamma_shape.is_finite() && gamma_shape >= 1.0) {
        return Err(Error::Domain(format!("gamma must be >= 1, got {gamma_shape}")));
    }
    if n == 0 {
        return Err(Error::Domain("n must be >= 1".into()));
    }
    let c = gamma_shape + alpha;
    let nf = n as f64;
    let rhs = log_gamma_unchecked(c * nf);
    let lhs = (nf - 1.0) * c.ln() + log_gamma_unchecked(nf) + log_gamma_unchecked(c);
    Ok(rhs - lhs)
}

/// Upper bound on `Σ_{n>N} |A_n| w_n` where `w_n` is the weight of `kind`.
///
/// Every weighted coefficient is dominated termwise by the factorial
/// majorant, so the bound only depends on `x = |β|/(γ+α)`.
pub fn tail_majorant(params: &RabotnovParams, n_terms: usize, kind: SeriesKind) -> f64 {
    let x = params.majorant_ratio();
    if x == 0.0 {
        return 0.0;
    }
    let n = n_terms as i64;
    match kind {
        SeriesKind::Base | SeriesKind::Alexander => exp_tail(x, n),
        // (n+1) x^n / n! = x · x^{n-1}/(n-1)! + x^n/n!
        SeriesKind::Derivative => x * exp_tail(x, n - 1) + exp_tail(x, n),
    }
}

/// Bound on `Σ_{k>m} x^k / k!` for `m ≥ −1`; `m = −1` is the whole series.
fn exp_tail(x: f64, m: i64) -> f64 {
    if m < 0 {
        return x.exp();
    }
    let first = factorial_power(x, (m + 1) as usize);
    let limit = (m + 2) as f64;
    if x < limit {
        first / (1.0 - x / limit)
    } else {
        first * x.exp()
    }
}

/// `x^n / n!` via logs.
fn factorial_power(x: f64, n: usize) -> f64 {
    if n == 0 {
        return 1.0;
    }
    if x == 0.0 {
        return 0.0;
    }
    let nf = n as f64;
    (nf * x.ln() - log_gamma_unchecked(nf + 1.0)).exp()
}

/// Append-only table of `A_1, A_2, …` for one parameter triple.
///
/// Readers always see a consistent prefix; extension takes the write lock.
#[derive(Debug)]
pub struct CoefficientCache {
    params: RabotnovParams,
    table: RwLock<Vec<Complex64>>,
}

impl CoefficientCache {
    pub fn new(params: RabotnovParams) -> Self {
        Self { params, table: RwLock::new(Vec::new()) }
    }

    pub fn params(&self) -> &RabotnovParams {
        &self.params
    }

    pub fn len(&self) -> usize {
        self.table.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Runs `f` on `[A_1, …, A_n]`, computing missing entries first.
    pub fn with_prefix<R>(&self, n: usize, f: impl FnOnce(&[Complex64]) -> R) -> R {
        {
            let table = self.table.read().unwrap();
            if table.len() >= n {
                return f(&table[..n]);
            }
        }
        let mut table = self.table.write().unwrap();
        while table.len() < n {
            let next = table.len() + 1;
            table.push(coefficient_value(&self.params, next));
        }
        f(&table[..n])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn factorial(n: u32) -> f64 {
        (1..=n).map(f64::from).product()
    }

    #[test]
    fn params_validation() {
        assert!(RabotnovParams::real(-0.1, 0.0, 1.0).is_err());
        assert!(RabotnovParams::real(0.0, 0.0, 0.99).is_err());
        assert!(RabotnovParams::real(0.0, f64::NAN, 1.0).is_err());
        assert!(RabotnovParams::new(0.0, Complex64::new(0.0, f64::INFINITY), 1.0).is_err());
        assert!(RabotnovParams::real(0.0, -5.0, 1.0).is_ok());
    }

    #[test]
    fn coefficient_examples() {
        let p = RabotnovParams::real(0.0, -1.0 / 3.0, 1.0).unwrap();
        let a2 = coefficient(&p, 2).unwrap();
        assert!((a2.value.re - 1.0 / 18.0).abs() < 1e-16);
        assert_eq!(a2.value.im, 0.0);

        let p = RabotnovParams::real(0.7, 0.0, 1.3).unwrap();
        assert_eq!(coefficient(&p, 1).unwrap().value, Complex64::new(0.0, 0.0));

        // Γ(2)/Γ(8) = 1/5040, times (1/2)^3
        let p = RabotnovParams::real(1.0, 0.5, 1.0).unwrap();
        let a3 = coefficient(&p, 3).unwrap().value.re;
        let expect = 0.125 * factorial(1) / factorial(7);
        assert!((a3 - expect).abs() < 1e-14 * expect);

        assert!(coefficient(&p, 0).is_err());
    }

    #[test]
    fn complex_beta_phase() {
        let beta = Complex64::from_polar(0.8, 0.3);
        let p = RabotnovParams::new(0.5, beta, 1.5).unwrap();
        let c = p.shape_sum();
        for n in 1..=12usize {
            let g = (log_gamma(c).unwrap() - log_gamma(c * (n as f64 + 1.0)).unwrap()).exp();
            let expect = beta.powu(n as u32) * g;
            let got = coefficient(&p, n).unwrap().value;
            assert!((got - expect).norm() < 1e-14 * expect.norm(), "n={n}");
        }
    }

    #[test]
    fn weighted_examples() {
        let p = RabotnovParams::real(0.0, -1.0 / 3.0, 1.0).unwrap();
        let a1 = coefficient(&p, 1).unwrap().value;
        assert_eq!(weighted_coefficient(&p, 1, SeriesKind::Base).unwrap(), a1);
        let d = weighted_coefficient(&p, 1, SeriesKind::Derivative).unwrap();
        assert!((d.re + 2.0 / 3.0).abs() < 1e-15);
        let i = weighted_coefficient(&p, 1, SeriesKind::Alexander).unwrap();
        assert!((i.re + 1.0 / 6.0).abs() < 1e-15);
    }

    #[test]
    fn lemma1_examples() {
        assert_eq!(lemma1_margin(0.0, 1.0, 1).unwrap(), 0.0);
        for n in 1..=60 {
            assert_eq!(lemma1_margin(0.0, 1.0, n).unwrap(), 0.0);
        }
        let v = lemma1_margin(1.0, 1.0, 3).unwrap();
        assert!((v - 15f64.ln()).abs() < 1e-14);
        assert!(lemma1_margin(-1.0, 1.0, 3).is_err());
        assert!(lemma1_margin(0.0, 0.5, 3).is_err());
    }

    #[test]
    fn tail_majorant_examples() {
        let zero = RabotnovParams::real(0.3, 0.0, 1.0).unwrap();
        for kind in SeriesKind::ALL {
            assert_eq!(tail_majorant(&zero, 7, kind), 0.0);
        }

        // x = 1, N = 10
        let p = RabotnovParams::real(0.0, 1.0, 1.0).unwrap();
        let bound = tail_majorant(&p, 10, SeriesKind::Base);
        let expect = 1.0 / factorial(11) / (1.0 - 1.0 / 12.0);
        assert!((bound - expect).abs() < 1e-14 * expect);
        let true_tail: f64 = (11..40).map(|k| 1.0 / factorial(k)).sum();
        assert!(bound >= true_tail);

        // x = 0.5, N = 0
        let p = RabotnovParams::real(0.0, 0.5, 1.0).unwrap();
        let bound = tail_majorant(&p, 0, SeriesKind::Base);
        assert!((bound - 2.0 / 3.0).abs() < 1e-15);
        assert!(bound >= 0.5f64.exp() - 1.0);
    }

    #[test]
    fn derivative_tail_dominates_weighted_sum() {
        let p = RabotnovParams::real(0.0, 3.0, 1.0).unwrap();
        for n in 0..20 {
            let bound = tail_majorant(&p, n, SeriesKind::Derivative);
            let truth: f64 = (n + 1..n + 200)
                .map(|k| weighted_coefficient(&p, k, SeriesKind::Derivative).unwrap().norm())
                .sum();
            assert!(bound >= truth, "N={n}: {bound} < {truth}");
        }
    }

    #[test]
    fn cache_matches_direct_evaluation() {
        let p = RabotnovParams::new(0.4, Complex64::new(-0.6, 0.9), 2.0).unwrap();
        let cache = CoefficientCache::new(p);
        assert!(cache.is_empty());
        let short = cache.with_prefix(5, |c| c.to_vec());
        let long = cache.with_prefix(20, |c| c.to_vec());
        assert_eq!(cache.len(), 20);
        assert_eq!(&long[..5], &short[..]);
        for (i, v) in long.iter().enumerate() {
            assert_eq!(*v, coefficient(&p, i + 1).unwrap().value);
        }
    }

    fn params_strategy() -> impl Strategy<Value = RabotnovParams> {
        (0.0..6.0f64, 1.0..12.0f64, 0.0..20.0f64, -3.2..3.2f64).prop_map(|(a, g, r, t)| {
            RabotnovParams::new(a, Complex64::from_polar(r, t), g).unwrap()
        })
    }

    proptest! {
        #[test]
        fn coefficient_below_majorant(p in params_strategy(), n in 1usize..=60) {
            let c = coefficient(&p, n).unwrap();
            prop_assert!(c.value.norm() <= c.magnitude_majorant * (1.0 + 1e-12) + 1e-15);
        }

        #[test]
        fn tail_majorant_dominates_truncated_tail(p in params_strategy(), n in 0usize..40, k in 0usize..3) {
            let kind = SeriesKind::ALL[k];
            let bound = tail_majorant(&p, n, kind);
            let truth: f64 = (n + 1..=n + 200)
                .map(|j| weighted_coefficient(&p, j, kind).unwrap().norm())
                .sum();
            prop_assert!(bound >= truth * (1.0 - 1e-12), "{} < {}", bound, truth);
        }
    }
}
