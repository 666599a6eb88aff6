use std::f64::consts::TAU;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::functions::MAX_SERIES_RADIUS;

/// Minimum number of samples on any circle.
pub const MIN_POINTS_PER_CIRCLE: usize = 256;

/// Golden-section steps per refinement round.
const GOLDEN_STEPS: usize = 30;

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Concentric circles sampled by the verifier.
#[derive(Debug, Clone, PartialEq)]
pub struct SamplingGrid {
    /// Strictly increasing radii in `(0, 1)`.
    pub radii: Vec<f64>,
    /// Samples on the outermost circle; inner circles get a share
    /// proportional to their radius, never fewer than 256.
    pub points_per_circle: usize,
    /// Rounds of golden-section refinement around each circle's minimum.
    pub refine_rounds: usize,
}

impl Default for SamplingGrid {
    fn default() -> Self {
        let mut radii: Vec<f64> = (1..=9).map(|i| f64::from(i) / 10.0).collect();
        radii.extend([0.99, 0.999]);
        Self { radii, points_per_circle: 4096, refine_rounds: 3 }
    }
}

impl SamplingGrid {
    pub fn validate(&self) -> Result<()> {
        if self.radii.is_empty() {
            return Err(Error::Domain("sampling grid needs at least one radius".into()));
        }
        if self.points_per_circle == 0 {
            return Err(Error::Domain("points_per_circle must be positive".into()));
        }
        for r in &self.radii {
            if !(*r > 0.0 && *r <= MAX_SERIES_RADIUS) {
                return Err(Error::Domain(format!(
                    "grid radius {r} outside (0, {MAX_SERIES_RADIUS}]"
                )));
            }
        }
        if self.radii.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Domain("grid radii must be strictly increasing".into()));
        }
        Ok(())
    }

    pub fn outer_radius(&self) -> f64 {
        *self.radii.last().expect("validated grid has a radius")
    }

    pub fn points_on(&self, radius: f64) -> usize {
        let scaled = (self.points_per_circle as f64 * radius / self.outer_radius()).round() as usize;
        scaled.max(MIN_POINTS_PER_CIRCLE)
    }

    /// Same circles, `factor` times as many samples, no refinement.
    pub fn densified(&self, factor: usize) -> Self {
        Self {
            radii: self.radii.clone(),
            points_per_circle: self.points_per_circle * factor,
            refine_rounds: 0,
        }
    }

    pub fn total_points(&self) -> usize {
        self.radii.iter().map(|&r| self.points_on(r)).sum()
    }
}

/// Outcome of minimizing a sampled objective over a grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Scan {
    pub min: f64,
    pub argmin: Complex64,
    pub pole_flags: usize,
}

#[derive(Debug, Clone, Copy)]
struct CircleScan {
    min: f64,
    theta: f64,
    pole_flags: usize,
    samples: usize,
}

/// Minimizes `objective` over the grid.
///
/// `objective` returns `Ok(None)` for samples that must be discarded
/// (pole-proximate); those are counted. Circles are scanned in parallel
/// and merged in radius order, first strict minimum wins, so the result
/// does not depend on scheduling.
pub(crate) fn minimize<F>(grid: &SamplingGrid, objective: F) -> Result<Scan>
where
    F: Fn(Complex64) -> Result<Option<f64>> + Sync,
{
    grid.validate()?;
    let circles: Vec<Result<CircleScan>> = grid
        .radii
        .par_iter()
        .map(|&r| scan_circle(r, grid.points_on(r), grid.refine_rounds, &objective))
        .collect();

    let mut best: Option<(f64, Complex64)> = None;
    let mut pole_flags = 0;
    let mut samples = 0;
    for (circle, &r) in circles.into_iter().zip(&grid.radii) {
        let circle = circle?;
        pole_flags += circle.pole_flags;
        samples += circle.samples;
        if circle.min.is_finite() && best.map_or(true, |(m, _)| circle.min < m) {
            best = Some((circle.min, Complex64::from_polar(r, circle.theta)));
        }
    }
    match best {
        Some((min, argmin)) => Ok(Scan { min, argmin, pole_flags }),
        None => Err(Error::DegenerateDenominator(samples)),
    }
}

fn scan_circle<F>(radius: f64, points: usize, rounds: usize, objective: &F) -> Result<CircleScan>
where
    F: Fn(Complex64) -> Result<Option<f64>>,
{
    let mut pole_flags = 0;
    let mut samples = 0;
    let mut eval = |theta: f64| -> Result<f64> {
        samples += 1;
        match objective(Complex64::from_polar(radius, theta))? {
            Some(v) if !v.is_nan() => Ok(v),
            _ => {
                pole_flags += 1;
                Ok(f64::INFINITY)
            }
        }
    };

    let step = TAU / points as f64;
    let mut min = f64::INFINITY;
    let mut theta_min = 0.0;
    for j in 0..points {
        let theta = step * j as f64;
        let v = eval(theta)?;
        if v < min {
            min = v;
            theta_min = theta;
        }
    }

    if min.is_finite() {
        let mut half_width = step;
        for _ in 0..rounds {
            let mut lo = theta_min - half_width;
            let mut hi = theta_min + half_width;
            let mut x1 = hi - INV_PHI * (hi - lo);
            let mut x2 = lo + INV_PHI * (hi - lo);
            let mut f1 = eval(x1)?;
            let mut f2 = eval(x2)?;
            for _ in 0..GOLDEN_STEPS {
                for (x, f) in [(x1, f1), (x2, f2)] {
                    if f < min {
                        min = f;
                        theta_min = x;
                    }
                }
                if f1 <= f2 {
                    hi = x2;
                    x2 = x1;
                    f2 = f1;
                    x1 = hi - INV_PHI * (hi - lo);
                    f1 = eval(x1)?;
                } else {
                    lo = x1;
                    x1 = x2;
                    f1 = f2;
                    x2 = lo + INV_PHI * (hi - lo);
                    f2 = eval(x2)?;
                }
            }
            for (x, f) in [(x1, f1), (x2, f2)] {
                if f < min {
                    min = f;
                    theta_min = x;
                }
            }
            half_width /= 2.0;
        }
    }
    Ok(CircleScan { min, theta: theta_min.rem_euclid(TAU), pole_flags, samples })
}
