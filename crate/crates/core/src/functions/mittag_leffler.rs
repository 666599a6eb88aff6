use num_complex::Complex64;

use crate::coeffs::{log_gamma_unchecked, MAX_TERMS};
use crate::error::{Error, Result};
use crate::functions::{check_tol, EvalResult};

/// Two-parameter Mittag-Leffler function `E_{a,b}(w) = Σ_{k≥0} w^k / Γ(ak+b)`.
///
/// Plain power series. Since `ln Γ` is convex the term ratio
/// `ρ_k = |w| Γ(ak+b) / Γ(ak+a+b)` never increases with `k`, so once
/// `ρ_{K+1} < 1` the neglected tail is at most `t_{K+1} / (1 − ρ_{K+1})`.
pub fn eval_mittag_leffler(a: f64, b: f64, w: Complex64, tol: f64) -> Result<EvalResult> {
    if !(a.is_finite() && a > 0.0 && b.is_finite() && b > 0.0) {
        return Err(Error::Domain(format!("Mittag-Leffler needs a > 0 and b > 0, got a={a}, b={b}")));
    }
    if !(w.re.is_finite() && w.im.is_finite()) {
        return Err(Error::Domain(format!("Mittag-Leffler argument must be finite, got {w}")));
    }
    check_tol(tol)?;

    let r = w.norm();
    if r == 0.0 {
        let v = (-log_gamma_unchecked(b)).exp();
        return Ok(EvalResult { value: Complex64::new(v, 0.0), terms_used: 0, tail_bound: 0.0 });
    }
    let ln_r = r.ln();
    let log_term = |k: usize| {
        let kf = k as f64;
        kf * ln_r - log_gamma_unchecked(a * kf + b)
    };
    let phase = |k: usize| -> Complex64 {
        if w.im == 0.0 {
            let s = if w.re < 0.0 && k % 2 == 1 { -1.0 } else { 1.0 };
            Complex64::new(s, 0.0)
        } else {
            Complex64::from_polar(1.0, k as f64 * w.arg())
        }
    };

    let mut last = f64::INFINITY;
    for k in 0..=MAX_TERMS {
        // tail after term k
        let next = log_term(k + 1);
        let rho = (log_term(k + 2) - next).exp();
        if rho < 1.0 {
            last = next.exp() / (1.0 - rho);
            if last <= tol {
                let value = (0..=k)
                    .rev()
                    .fold(Complex64::new(0.0, 0.0), |acc, j| acc + phase(j) * log_term(j).exp());
                return Ok(EvalResult { value, terms_used: k + 1, tail_bound: last });
            }
        }
    }
    Err(Error::Convergence { tol, cap: MAX_TERMS, tail_bound: last })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn real(w: f64) -> Complex64 {
        Complex64::new(w, 0.0)
    }

    #[test]
    fn elementary_cases() {
        let v = eval_mittag_leffler(1.0, 1.0, real(0.5), 1e-14).unwrap();
        assert!((v.value.re - 0.5f64.exp()).abs() < 1e-14);
        assert!((v.value.re - 1.648_721_3).abs() < 1e-7);

        let v = eval_mittag_leffler(2.0, 1.0, real(0.25), 1e-14).unwrap();
        assert!((v.value.re - 0.5f64.cosh()).abs() < 1e-14);
        assert!((v.value.re - 1.127_626_0).abs() < 1e-7);

        let v = eval_mittag_leffler(2.0, 2.0, real(0.25), 1e-14).unwrap();
        assert!((v.value.re - 0.5f64.sinh() / 0.5).abs() < 1e-14);
        assert!((v.value.re - 1.042_190_6).abs() < 1e-7);
    }

    #[test]
    fn complex_exponential() {
        let w = Complex64::new(-1.3, 2.1);
        let v = eval_mittag_leffler(1.0, 1.0, w, 1e-14).unwrap();
        assert!((v.value - w.exp()).norm() < 1e-13);
        assert!(v.tail_bound <= 1e-14);
    }

    #[test]
    fn zero_argument() {
        let v = eval_mittag_leffler(1.5, 3.0, real(0.0), 1e-12).unwrap();
        assert!((v.value.re - 0.5).abs() < 1e-15);
    }

    #[test]
    fn domain_and_convergence_errors() {
        assert!(matches!(eval_mittag_leffler(0.0, 1.0, real(0.1), 1e-12), Err(Error::Domain(_))));
        assert!(matches!(eval_mittag_leffler(1.0, -1.0, real(0.1), 1e-12), Err(Error::Domain(_))));
        assert!(matches!(
            eval_mittag_leffler(1.0, 1.0, real(1e4), 1e-12),
            Err(Error::Convergence { .. })
        ));
    }
}
