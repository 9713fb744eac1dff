//! Inclusion radii.
//!
//! Each target class gives a continuous function of `r` that is negative at
//! `r = 0` and positive near `r = 1`; the inclusion radius is its least
//! positive root. All of them are built from the sharp rectangle
//! `[re_lower, re_upper] x [-im_bound, im_bound]` of
//! [`crate::kernel::quotient_bounds`].

use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, PI};

// Unused when std is linked: inherent float methods take precedence.
#[allow(unused_imports)]
use num_traits::Float;

use crate::kernel::{aperture_angle, center_angle, modulus_bound, Alpha};
use crate::membership::RegionPredicate;
use crate::{Error, Result};

/// Largest radius the scan reaches.
pub const SCAN_LIMIT: f64 = 1.0 - 1e-9;

/// Strongly starlike target: `arctan(log N / (2 sin a + M1 - M2)) - pi gamma / 2`.
pub fn strongly_starlike_function(r: f64, alpha: Alpha, gamma: f64) -> f64 {
    let denom = 2.0 * alpha.sin() + center_angle(r, alpha) - aperture_angle(r, alpha);
    (modulus_bound(r, alpha).ln() / denom).atan() - FRAC_PI_2 * gamma
}

/// Parabolic target: `(log N)^2 / (4 sin^2 a) - (M1 - M2) / sin a - 1`.
pub fn parabolic_function(r: f64, alpha: Alpha) -> f64 {
    let s = alpha.sin();
    let log_n = modulus_bound(r, alpha).ln();
    log_n * log_n / (4.0 * s * s) - (center_angle(r, alpha) - aperture_angle(r, alpha)) / s - 1.0
}

/// Which corner of the bound rectangle a lemniscate equation tracks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LemniscateBranch {
    /// `u = 1 + (M1 + M2) / (2 sin a)`.
    Plus,
    /// `u = 1 + (M1 - M2) / (2 sin a)`.
    Minus,
}

/// The corner `(u, v)` used by the lemniscate equations.
pub fn lemniscate_corner(r: f64, alpha: Alpha, branch: LemniscateBranch) -> (f64, f64) {
    let two_sin = 2.0 * alpha.sin();
    let m1 = center_angle(r, alpha);
    let m2 = aperture_angle(r, alpha);
    let u = match branch {
        LemniscateBranch::Plus => 1.0 + (m1 + m2) / two_sin,
        LemniscateBranch::Minus => 1.0 + (m1 - m2) / two_sin,
    };
    (u, modulus_bound(r, alpha).ln() / two_sin)
}

/// Lemniscate target: `(u^2 + v^2)^2 - 2u^2 + 2v^2` at the chosen corner.
pub fn lemniscate_function(r: f64, alpha: Alpha, branch: LemniscateBranch) -> f64 {
    let (u, v) = lemniscate_corner(r, alpha, branch);
    let m = u * u + v * v;
    m * m - 2.0 * u * u + 2.0 * v * v
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RootOptions {
    pub scan_step: f64,
    pub tol: f64,
}

impl Default for RootOptions {
    fn default() -> Self {
        Self {
            scan_step: 1e-3,
            tol: 1e-10,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Root {
    pub value: f64,
    /// Function evaluations spent in scan and bisection.
    pub iterations: usize,
}

/// First sign change of `f` on `(0, 1 - 1e-9]` at resolution `scan_step`,
/// refined by bisection until the bracket is no wider than `tol`. Returns
/// the bracket midpoint.
pub fn least_positive_root<F: FnMut(f64) -> f64>(mut f: F, opts: RootOptions) -> Result<Root> {
    if !(opts.scan_step > 0.0 && opts.scan_step < 1.0) {
        return Err(Error::InvalidParameter {
            name: "scan_step",
            value: opts.scan_step,
        });
    }
    if opts.tol.is_nan() || opts.tol <= 0.0 {
        return Err(Error::InvalidParameter {
            name: "tol",
            value: opts.tol,
        });
    }
    let f0 = f(0.0);
    if f0.is_nan() || f0 >= 0.0 {
        return Err(Error::NotNegativeAtOrigin { value: f0 });
    }
    let mut iterations = 1;
    let mut lo = 0.0;
    let mut hi = None;
    let mut k = 1usize;
    while lo < SCAN_LIMIT {
        let r = (k as f64 * opts.scan_step).min(SCAN_LIMIT);
        let v = f(r);
        iterations += 1;
        if v.is_nan() {
            return Err(Error::NonFinite);
        }
        if v >= 0.0 {
            hi = Some(r);
            break;
        }
        lo = r;
        k += 1;
    }
    let mut hi = hi.ok_or(Error::NoSignChange)?;
    while hi - lo > opts.tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        iterations += 1;
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(Root {
        value: 0.5 * (lo + hi),
        iterations,
    })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum TargetClass {
    /// Strongly starlike of order `gamma`, `0 < gamma < 1`.
    StronglyStarlike { gamma: f64 },
    /// Parabolic starlike.
    Parabolic,
    /// `zf'/f` subordinate to `sqrt(1 + z)`.
    Lemniscate,
}

impl TargetClass {
    pub fn strongly_starlike(gamma: f64) -> Result<Self> {
        if !(gamma > 0.0 && gamma < 1.0) {
            return Err(Error::InvalidParameter {
                name: "gamma",
                value: gamma,
            });
        }
        Ok(Self::StronglyStarlike { gamma })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::StronglyStarlike { .. } => "ss",
            Self::Parabolic => "ps",
            Self::Lemniscate => "sl",
        }
    }

    pub fn gamma(&self) -> Option<f64> {
        match *self {
            Self::StronglyStarlike { gamma } => Some(gamma),
            _ => None,
        }
    }

    /// Region predicate whose containment the radius guarantees.
    pub fn predicate(&self) -> RegionPredicate {
        match *self {
            Self::StronglyStarlike { gamma } => RegionPredicate::StronglyStarlike { gamma },
            Self::Parabolic => RegionPredicate::Parabolic,
            Self::Lemniscate => RegionPredicate::Lemniscate,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RadiusProblem {
    pub target: TargetClass,
    pub alpha: Alpha,
}

impl RadiusProblem {
    pub fn new(target: TargetClass, alpha: Alpha) -> Self {
        Self { target, alpha }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NamedRoot {
    pub name: &'static str,
    pub value: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RadiusSolution {
    pub problem: RadiusProblem,
    pub radius: f64,
    /// Every root that was solved for; the lemniscate case lists both
    /// corners.
    pub roots: Vec<NamedRoot>,
    pub iterations: usize,
}

pub fn solve(problem: RadiusProblem, opts: RootOptions) -> Result<RadiusSolution> {
    let alpha = problem.alpha;
    let (radius, roots, iterations) = match problem.target {
        TargetClass::StronglyStarlike { gamma } => {
            let root = least_positive_root(|r| strongly_starlike_function(r, alpha, gamma), opts)?;
            (
                root.value,
                alloc::vec![NamedRoot {
                    name: "r1",
                    value: root.value
                }],
                root.iterations,
            )
        }
        TargetClass::Parabolic => {
            let root = least_positive_root(|r| parabolic_function(r, alpha), opts)?;
            (
                root.value,
                alloc::vec![NamedRoot {
                    name: "r2",
                    value: root.value
                }],
                root.iterations,
            )
        }
        TargetClass::Lemniscate => {
            let plus = least_positive_root(
                |r| lemniscate_function(r, alpha, LemniscateBranch::Plus),
                opts,
            )?;
            let minus = least_positive_root(
                |r| lemniscate_function(r, alpha, LemniscateBranch::Minus),
                opts,
            )?;
            (
                plus.value.min(minus.value),
                alloc::vec![
                    NamedRoot {
                        name: "r3",
                        value: plus.value
                    },
                    NamedRoot {
                        name: "r4",
                        value: minus.value
                    },
                ],
                plus.iterations + minus.iterations,
            )
        }
    };
    Ok(RadiusSolution {
        problem,
        radius,
        roots,
        iterations,
    })
}

/// Published radii for `alpha = pi/2`: strongly starlike of order 1/2,
/// parabolic starlike, lemniscate.
pub const REFERENCE_RADII: [f64; 3] = [0.493918, 0.421547, 0.304506];

/// The three `alpha = pi/2` problems in [`REFERENCE_RADII`] order.
pub fn reference_problems() -> [RadiusProblem; 3] {
    let alpha = Alpha::right_angle();
    [
        RadiusProblem::new(TargetClass::StronglyStarlike { gamma: 0.5 }, alpha),
        RadiusProblem::new(TargetClass::Parabolic, alpha),
        RadiusProblem::new(TargetClass::Lemniscate, alpha),
    ]
}

/// `lim_{r -> 1-}` of the strongly starlike function.
pub fn strongly_starlike_limit(gamma: f64) -> f64 {
    FRAC_PI_2 - PI * gamma / 2.0
}
