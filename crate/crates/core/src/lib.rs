//! Numerics for the normalized generalized Rabotnov function
//!
//! ```text
//! R(z) = z + Σ_{n≥1} A_n z^{n+1},   A_n = β^n Γ(γ+α) / Γ((γ+α)(n+1))
//! ```
//!
//! together with its derivative, its Alexander transform `∫₀^z R(t)/t dt`,
//! their partial sums, the closed-form lower bounds on the real parts of
//! function / partial-sum quotients, and a sampling verifier that checks
//! those bounds on the unit disk.
//!
//! Module map:
//!
//! - [`coeffs`]: log-gamma, series coefficients, factorial majorants.
//! - [`functions`]: series and partial-sum evaluation, Mittag-Leffler,
//!   closed-form special cases, quotients.
//! - [`bounds`]: lower bounds for the six quotients and modulus bounds.
//! - [`verify`]: sampled infimum estimation and certificates.
//! - [`cli`]: command-line front end.

pub mod bounds;
pub mod cli;
pub mod coeffs;
pub mod error;
pub mod functions;
pub mod verify;

pub use bounds::{lemma2_bound, theorem_bound, BoundResult, Orientation, RatioKind};
pub use coeffs::{
    coefficient, lemma1_margin, log_gamma, tail_majorant, weighted_coefficient, Coefficient,
    CoefficientCache, RabotnovParams, MAX_TERMS,
};
pub use error::{Error, Result};
pub use functions::{
    eval_mittag_leffler, eval_partial_sum, eval_ratio, eval_series, eval_special_case,
    EvalResult, SeriesKind, SpecialCase, DEFAULT_TOL,
};
pub use verify::{
    corollary_table, estimate_infimum, verify_lemma2, verify_theorem, verify_univalence_remark,
    CheckKind, CorollaryRow, SamplingGrid, VerificationCertificate,
};

pub use num_complex::Complex64;
