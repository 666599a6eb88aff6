use num_complex::Complex64;

use crate::coeffs::RabotnovParams;

/// Parameter triples for which the normalized function reduces to an
/// elementary closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpecialCase {
    /// `(0, −1/3, 1)`: `z e^{−z/3}`
    ExpCase,
    /// `(1, 1/2, 1)`: `√(2z) sinh √(z/2)`
    SinhHalfCase,
    /// `(1, −1/4, 1)`: `2√z sin(√z/2)`
    SinQuarterCase,
    /// `(1, 1, 1)`: `√z sinh √z`
    SinhOneCase,
    /// `(1, 2, 1)`: `½ √(2z) sinh √(2z)`
    SinhTwoCase,
}

impl SpecialCase {
    pub const ALL: [SpecialCase; 5] = [
        SpecialCase::ExpCase,
        SpecialCase::SinhHalfCase,
        SpecialCase::SinQuarterCase,
        SpecialCase::SinhOneCase,
        SpecialCase::SinhTwoCase,
    ];

    /// `(α, β, γ)`
    pub fn triple(self) -> (f64, f64, f64) {
        match self {
            SpecialCase::ExpCase => (0.0, -1.0 / 3.0, 1.0),
            SpecialCase::SinhHalfCase => (1.0, 0.5, 1.0),
            SpecialCase::SinQuarterCase => (1.0, -0.25, 1.0),
            SpecialCase::SinhOneCase => (1.0, 1.0, 1.0),
            SpecialCase::SinhTwoCase => (1.0, 2.0, 1.0),
        }
    }

    pub fn params(self) -> RabotnovParams {
        let (a, b, g) = self.triple();
        RabotnovParams::real(a, b, g).expect("special-case triples are valid")
    }
}

/// Closed form of `case` at `z`, principal branch of `√z`; `0` at the origin.
pub fn eval_special_case(case: SpecialCase, z: Complex64) -> Complex64 {
    if z == Complex64::new(0.0, 0.0) {
        return z;
    }
    match case {
        SpecialCase::ExpCase => z * (-z / 3.0).exp(),
        SpecialCase::SinhHalfCase => (2.0 * z).sqrt() * (z / 2.0).sqrt().sinh(),
        SpecialCase::SinQuarterCase => {
            let s = z.sqrt();
            2.0 * s * (s / 2.0).sin()
        }
        SpecialCase::SinhOneCase => {
            let s = z.sqrt();
            s * s.sinh()
        }
        SpecialCase::SinhTwoCase => {
            let s = (2.0 * z).sqrt();
            0.5 * s * s.sinh()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_examples() {
        let zero = Complex64::new(0.0, 0.0);
        for case in SpecialCase::ALL {
            assert_eq!(eval_special_case(case, zero), zero);
        }
        let v = eval_special_case(SpecialCase::SinhOneCase, Complex64::new(0.25, 0.0));
        assert!((v.re - 0.5 * 0.5f64.sinh()).abs() < 1e-15);
        assert!((v.re - 0.260_547_7).abs() < 1e-7);
        let v = eval_special_case(SpecialCase::SinQuarterCase, Complex64::new(0.81, 0.0));
        assert!((v.re - 1.8 * 0.45f64.sin()).abs() < 1e-15);
        assert!((v.re - 0.782_937_9).abs() < 1e-7);
    }

    #[test]
    fn continuous_across_negative_axis() {
        // the closed forms are even in √z, so the branch cut must not show
        for case in SpecialCase::ALL {
            let above = eval_special_case(case, Complex64::new(-0.7, 1e-14));
            let below = eval_special_case(case, Complex64::new(-0.7, -1e-14));
            assert!((above - below).norm() < 1e-12, "{case:?}");
        }
    }
}
