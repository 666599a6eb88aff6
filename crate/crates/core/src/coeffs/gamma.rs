//! Real log-gamma for positive arguments.
//!
//! Three regimes:
//!
//! - `x ≥ 10`: Stirling series with eight Bernoulli corrections.
//! - `0.5 ≤ x < 2.5`: Taylor expansion of `ln Γ(2 + ε)` in `ε` built from
//!   `ζ(k) − 1`, which keeps full relative accuracy next to the zeros of
//!   `ln Γ` at 1 and 2.
//! - everything else is shifted into one of the above by `Γ(x+1) = xΓ(x)`.

use crate::error::{Error, Result};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_606_512_1;
const HALF_LN_2PI: f64 = 0.918_938_533_204_672_741_780_329_736_4;

/// `ζ(k) − 1` for `k = 2..=40`.
const ZETA_MINUS_ONE: [f64; 39] = [
    0.644_934_066_848_226_436_47,
    0.202_056_903_159_594_285_4,
    0.082_323_233_711_138_191_516,
    0.036_927_755_143_369_926_331,
    0.017_343_061_984_449_139_715,
    0.008_349_277_381_922_826_839_8,
    0.004_077_356_197_944_339_378_7,
    0.002_008_392_826_082_214_417_9,
    0.000_994_575_127_818_085_337_15,
    0.000_494_188_604_119_464_558_7,
    0.000_246_086_553_308_048_298_64,
    0.000_122_713_347_578_489_146_75,
    6.124_813_505_870_482_925_9e-5,
    3.058_823_630_702_049_355_2e-5,
    1.528_225_940_865_187_173_3e-5,
    7.637_197_637_899_762_273_6e-6,
    3.817_293_264_999_839_856_5e-6,
    1.908_212_716_553_938_925_7e-6,
    9.539_620_338_727_961_131_5e-7,
    4.769_329_867_878_064_631_2e-7,
    2.384_505_027_277_329_9e-7,
    1.192_199_259_653_110_730_7e-7,
    5.960_818_905_125_947_961_2e-8,
    2.980_350_351_465_228_018_6e-8,
    1.490_155_482_836_504_123_5e-8,
    7.450_711_789_835_429_492e-9,
    3.725_334_024_788_457_054_8e-9,
    1.862_659_723_513_049_006_4e-9,
    9.313_274_324_196_681_828_7e-10,
    4.656_629_065_033_784_073e-10,
    2.328_311_833_676_505_492e-10,
    1.164_155_017_270_051_977_6e-10,
    5.820_772_087_902_700_889_2e-11,
    2.910_385_044_497_099_686_9e-11,
    1.455_192_189_104_198_423_6e-11,
    7.275_959_835_057_481_014_5e-12,
    3.637_979_547_378_651_190_2e-12,
    1.818_989_650_307_065_947_6e-12,
    9.094_947_840_263_889_282_5e-13,
];

/// Stirling corrections `B_{2k} / (2k (2k−1))`, `k = 1..=8`.
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];

/// `ln Γ(x)` for finite `x > 0`.
///
/// Relative error stays below `1e-13` on `[0.5, 500]`, including the
/// neighbourhoods of 1 and 2 where the value crosses zero.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !(x.is_finite() && x > 0.0) {
        return Err(Error::Domain(format!(
            "log_gamma needs a finite positive argument, got {x}"
        )));
    }
    Ok(log_gamma_unchecked(x))
}

pub(crate) fn log_gamma_unchecked(x: f64) -> f64 {
    if x == 1.0 || x == 2.0 {
        return 0.0;
    }
    if x < 0.5 {
        // Γ(x) = Γ(x+1)/x
        return log_gamma_unchecked(x + 1.0) - x.ln();
    }
    if x < 1.5 {
        // ln Γ(1+ε) = ln Γ(2+ε) − ln(1+ε)
        let eps = x - 1.0;
        return shifted_series(eps) - eps.ln_1p();
    }
    if x < 2.5 {
        return shifted_series(x - 2.0);
    }
    if x < 10.0 {
        let mut y = x;
        let mut prod = 1.0;
        while y >= 2.5 {
            y -= 1.0;
            prod *= y;
        }
        return prod.ln() + shifted_series(y - 2.0);
    }
    stirling(x)
}

/// `ln Γ(2 + ε)` for `|ε| ≤ 0.5`.
fn shifted_series(eps: f64) -> f64 {
    // Σ_{k≥2} (−1)^k (ζ(k) − 1) ε^k / k, summed from the smallest term up.
    let mut tail = 0.0;
    for (i, z) in ZETA_MINUS_ONE.iter().enumerate().rev() {
        let k = (i + 2) as f64;
        let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
        tail = tail * eps + sign * z / k;
    }
    eps * ((1.0 - EULER_GAMMA) + eps * tail)
}

fn stirling(x: f64) -> f64 {
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let mut corr = 0.0;
    for c in STIRLING.iter().rev() {
        corr = corr * inv2 + c;
    }
    (x - 0.5) * x.ln() - x + HALF_LN_2PI + corr * inv
}
