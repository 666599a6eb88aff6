use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The series needed more terms than the hard cap allows.
    #[error("series did not reach tolerance {tol:e} within {cap} terms (tail bound {tail_bound:e})")]
    Convergence { tol: f64, cap: usize, tail_bound: f64 },

    /// A quotient denominator is numerically zero.
    #[error("denominator {denominator:e} is too close to zero (numerator {numerator:e})")]
    PoleProximity { numerator: f64, denominator: f64 },

    /// The theorem or lemma hypothesis does not hold for these parameters.
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),

    /// Every sample of a verification grid was discarded as pole-proximate.
    #[error("all {0} samples were discarded as pole-proximate")]
    DegenerateDenominator(usize),
}
