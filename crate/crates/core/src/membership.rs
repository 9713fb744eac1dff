//! Region predicates and finite-sample membership tests for `q = zf'/f`.
//!
//! Membership in a subordination class with a convex (or starlike)
//! majorant is tested through value containment of `q` on circles `|z| = r`.
//! Every report here is finite-sample evidence, not a proof.

use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, PI};

use crate::factory::{q_of, NormalizedFunction};
use crate::kernel::{mapping_boundary_value, quotient_bounds, strip_bounds, Alpha, QuotientBounds};
use crate::series::TruncatedSeries;
use crate::{Complex64, Error, Result};

/// Default number of boundary samples.
pub const DEFAULT_SAMPLES: usize = 720;

/// Largest admissible test radius.
pub const MAX_RADIUS: f64 = 1.0 - 1e-9;

/// Slack used by the distortion-bound check.
pub const BOUND_SLACK: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum RegionPredicate {
    /// `lower < Re w < upper` for the strip of the given angle.
    Strip(Alpha),
    /// `Re w > beta`.
    Starlike { beta: f64 },
    /// `|arg w| < pi gamma / 2`.
    StronglyStarlike { gamma: f64 },
    /// `v^2 < 2u - 1`, the parabola region.
    Parabolic,
    /// `(u^2 + v^2)^2 < 2(u^2 - v^2)` with `u > 0`, the right loop of the
    /// lemniscate.
    Lemniscate,
}

impl RegionPredicate {
    pub fn starlike(beta: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&beta) {
            return Err(Error::InvalidParameter {
                name: "beta",
                value: beta,
            });
        }
        Ok(Self::Starlike { beta })
    }

    pub fn strongly_starlike(gamma: f64) -> Result<Self> {
        if !(gamma > 0.0 && gamma <= 1.0) {
            return Err(Error::InvalidParameter {
                name: "gamma",
                value: gamma,
            });
        }
        Ok(Self::StronglyStarlike { gamma })
    }

    /// Signed margin: positive strictly inside, zero on the boundary.
    pub fn contains(&self, w: Complex64) -> f64 {
        let (u, v) = (w.re, w.im);
        match *self {
            Self::Strip(alpha) => strip_bounds(alpha).margin(u),
            Self::Starlike { beta } => u - beta,
            Self::StronglyStarlike { gamma } => FRAC_PI_2 * gamma - w.arg().abs(),
            Self::Parabolic => (2.0 * u - 1.0) - v * v,
            Self::Lemniscate => {
                // the quartic is also positive on the left loop
                let m = u * u + v * v;
                (2.0 * (u * u - v * v) - m * m).min(u)
            }
        }
    }
}

/// `K` equally spaced points on `|z| = r`, starting at `z = r`.
pub fn circle_points(r: f64, samples: usize) -> impl Iterator<Item = Complex64> {
    (0..samples).map(move |k| Complex64::from_polar(r, 2.0 * PI * k as f64 / samples as f64))
}

fn check_radius_and_samples(r: f64, samples: usize) -> Result<()> {
    if !(r > 0.0 && r <= MAX_RADIUS) {
        return Err(Error::InvalidParameter {
            name: "radius",
            value: r,
        });
    }
    if samples < 8 {
        return Err(Error::InvalidParameter {
            name: "samples",
            value: samples as f64,
        });
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MembershipReport {
    pub predicate: RegionPredicate,
    pub radius: f64,
    pub samples: usize,
    /// Smallest margin seen; negative means a sampled violation.
    pub worst_margin: f64,
    /// Sample point on `|z| = radius` where the worst margin occurred.
    pub witness: Complex64,
}

impl MembershipReport {
    pub fn passed(&self) -> bool {
        self.worst_margin > 0.0
    }
}

/// Samples `q = zf'/f` on `|z| = r` and records the worst margin.
pub fn test_membership(
    f: &NormalizedFunction,
    predicate: RegionPredicate,
    r: f64,
    samples: usize,
) -> Result<MembershipReport> {
    check_radius_and_samples(r, samples)?;
    let q = q_of(f);
    let (worst_margin, witness) = circle_points(r, samples)
        .map(|z| (predicate.contains(q.evaluate(z)), z))
        .fold((f64::INFINITY, Complex64::new(r, 0.0)), |best, cur| {
            if cur.0 < best.0 {
                cur
            } else {
                best
            }
        });
    Ok(MembershipReport {
        predicate,
        radius: r,
        samples,
        worst_margin,
        witness,
    })
}

/// Extremes of `q` attained on the sample circle next to the sharp bounds.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundsReport {
    pub radius: f64,
    pub samples: usize,
    pub bounds: QuotientBounds,
    pub re_min: f64,
    pub re_max: f64,
    pub im_abs_max: f64,
}

/// Checks `re_lower <= Re q <= re_upper` and `|Im q| <= im_bound` on every
/// sample, each with slack [`BOUND_SLACK`].
pub fn distortion_bounds_check(
    f: &NormalizedFunction,
    alpha: Alpha,
    r: f64,
    samples: usize,
) -> Result<BoundsReport> {
    check_radius_and_samples(r, samples)?;
    let bounds = quotient_bounds(r, alpha);
    let q = q_of(f);
    let mut report = BoundsReport {
        radius: r,
        samples,
        bounds,
        re_min: f64::INFINITY,
        re_max: f64::NEG_INFINITY,
        im_abs_max: 0.0,
    };
    for z in circle_points(r, samples) {
        let w = q.evaluate(z);
        let excess = (bounds.re_lower - w.re)
            .max(w.re - bounds.re_upper)
            .max(w.im.abs() - bounds.im_bound);
        if excess > BOUND_SLACK {
            return Err(Error::BoundViolation { witness: z, excess });
        }
        report.re_min = report.re_min.min(w.re);
        report.re_max = report.re_max.max(w.re);
        report.im_abs_max = report.im_abs_max.max(w.im.abs());
    }
    Ok(report)
}

/// The Hadamard kernel `z^2/(1-z)^2 - F(e^{i theta}) z/(1-z)`, i.e. the
/// series with coefficients `(n - 1) - F(e^{i theta})` for `n >= 1`.
pub fn convolution_kernel(alpha: Alpha, theta: f64, order: usize) -> Result<TruncatedSeries> {
    let boundary = mapping_boundary_value(alpha, theta)?;
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(Complex64::new(0.0, 0.0));
    coeffs.extend((1..=order).map(|n| Complex64::new((n - 1) as f64, 0.0) - boundary));
    TruncatedSeries::new(coeffs)
}

/// `zf'(z) - (1 + F(e^{i theta})) f(z)` evaluated directly.
pub fn convolution_direct(
    f: &NormalizedFunction,
    alpha: Alpha,
    theta: f64,
    z: Complex64,
) -> Result<Complex64> {
    let boundary = mapping_boundary_value(alpha, theta)?;
    let (value, slope) = f.series().evaluate_with_derivative(z);
    Ok(z * slope - (boundary + 1.0) * value)
}

/// The same quantity through the Hadamard product with
/// [`convolution_kernel`].
pub fn convolution_hadamard(
    f: &NormalizedFunction,
    alpha: Alpha,
    theta: f64,
    z: Complex64,
) -> Result<Complex64> {
    let kernel = convolution_kernel(alpha, theta, f.order())?;
    Ok(f.series().hadamard(&kernel).evaluate(z))
}

/// Interior grid on which the convolution expression is sampled: `radial`
/// circles from `|z| = 0.05` up to `r`, `angular` points each. The origin is
/// left out since the expression vanishes there for every normalized `f`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConvolutionGrid {
    pub radial: usize,
    pub angular: usize,
}

impl Default for ConvolutionGrid {
    fn default() -> Self {
        Self {
            radial: 20,
            angular: 72,
        }
    }
}

impl ConvolutionGrid {
    pub const INNER_RADIUS: f64 = 0.05;

    pub fn points(&self, r: f64) -> Vec<Complex64> {
        let mut pts = Vec::with_capacity(self.radial * self.angular);
        for j in 0..self.radial {
            let rho = if self.radial == 1 {
                r
            } else {
                Self::INNER_RADIUS + (r - Self::INNER_RADIUS) * j as f64 / (self.radial - 1) as f64
            };
            pts.extend(circle_points(rho, self.angular));
        }
        pts
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConvolutionReport {
    pub min_modulus: f64,
    pub theta: f64,
    pub z: Complex64,
}

/// Smallest `|zf' - (1 + F(e^{i theta})) f|` over the angle list and the
/// interior grid. Members give a strictly positive minimum.
pub fn convolution_criterion(
    f: &NormalizedFunction,
    alpha: Alpha,
    thetas: &[f64],
    r: f64,
    grid: ConvolutionGrid,
) -> Result<ConvolutionReport> {
    if !(ConvolutionGrid::INNER_RADIUS..1.0).contains(&r) {
        return Err(Error::InvalidParameter {
            name: "radius",
            value: r,
        });
    }
    if grid.radial == 0 || grid.angular == 0 {
        return Err(Error::InvalidParameter {
            name: "grid size",
            value: 0.0,
        });
    }
    let boundaries = thetas
        .iter()
        .map(|&t| {
            if !(t > 0.0 && t < 2.0 * PI) {
                return Err(Error::ExcludedTheta { theta: t });
            }
            mapping_boundary_value(alpha, t).map(|b| (t, b + 1.0))
        })
        .collect::<Result<Vec<_>>>()?;
    let samples: Vec<(Complex64, Complex64, Complex64)> = grid
        .points(r)
        .into_iter()
        .map(|z| {
            let (value, slope) = f.series().evaluate_with_derivative(z);
            (z, z * slope, value)
        })
        .collect();
    let mut best = ConvolutionReport {
        min_modulus: f64::INFINITY,
        theta: f64::NAN,
        z: Complex64::new(0.0, 0.0),
    };
    for &(theta, shifted) in &boundaries {
        for &(z, zfp, fv) in &samples {
            let m = (zfp - shifted * fv).norm();
            if m < best.min_modulus {
                best = ConvolutionReport {
                    min_modulus: m,
                    theta,
                    z,
                };
            }
        }
    }
    Ok(best)
}

/// Outcome of screening `1 + zf''/f'` against the strip and, when the screen
/// passes, checking `zf'/f` against it.
///
/// The screen tests value containment in the strip, a necessary condition
/// for the subordination hypothesis, so a pass is weaker evidence than the
/// hypothesis itself.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SufficientConditionReport {
    pub radius: f64,
    pub samples: usize,
    pub hypothesis_margin: f64,
    pub hypothesis_holds: bool,
    /// Present only when the screen passed.
    pub conclusion_margin: Option<f64>,
    pub screening_only: bool,
}

impl SufficientConditionReport {
    /// False only when the screen passed but the conclusion failed.
    pub fn implication_consistent(&self) -> bool {
        match self.conclusion_margin {
            Some(m) => m > 0.0,
            None => true,
        }
    }
}

pub fn sufficient_condition_check(
    f: &NormalizedFunction,
    alpha: Alpha,
    r: f64,
    samples: usize,
) -> Result<SufficientConditionReport> {
    check_radius_and_samples(r, samples)?;
    let strip = RegionPredicate::Strip(alpha);
    let d1 = f.series().derivative();
    let d2 = d1.derivative();
    let mut hypothesis_margin = f64::INFINITY;
    for z in circle_points(r, samples) {
        let fp = d1.evaluate(z);
        if fp.norm() < 1e-9 {
            return Err(Error::DerivativeVanishes { z });
        }
        let p = Complex64::new(1.0, 0.0) + z * d2.evaluate(z) / fp;
        hypothesis_margin = hypothesis_margin.min(strip.contains(p));
    }
    let hypothesis_holds = hypothesis_margin > 0.0;
    let conclusion_margin = if hypothesis_holds {
        Some(test_membership(f, strip, r, samples)?.worst_margin)
    } else {
        None
    };
    Ok(SufficientConditionReport {
        radius: r,
        samples,
        hypothesis_margin,
        hypothesis_holds,
        conclusion_margin,
        screening_only: true,
    })
}
