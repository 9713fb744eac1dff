//! Angle-parameterized special functions of the strip class.
//!
//! For `pi/2 <= alpha < pi` the map
//!
//! ```text
//! F(z) = log((1 + e^{i alpha} z) / (1 + e^{-i alpha} z)) / (2 i sin alpha)
//! ```
//!
//! is convex univalent on the unit disk with image the vertical strip
//! `(alpha - pi)/(2 sin alpha) < Re w < alpha/(2 sin alpha)`. A normalized `f`
//! is a member of the class when `zf'/f - 1` is subordinate to `F`.
//!
//! On the circle `|z| = r` the Mobius quotient `Q = (1 + e^{ia}w)/(1 + e^{-ia}w)`
//! of any Schwarz function `w` stays inside a disk with center `C` and radius
//! `R`; [`center_angle`], [`aperture_angle`] and [`modulus_bound`] are the
//! polar extents of that disk and give the sharp distortion bounds on
//! `zf'/f`.

use core::f64::consts::{FRAC_PI_2, PI};

use alloc::vec::Vec;

// Unused when std is linked: inherent float methods take precedence.
#[allow(unused_imports)]
use num_traits::Float;

use crate::series::TruncatedSeries;
use crate::{Complex64, Error, Result};

/// Validated angle `alpha` in `[pi/2, pi)`.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct Alpha(f64);

impl Alpha {
    /// Relative tolerance admitted below `pi/2`.
    pub const LEFT_TOLERANCE: f64 = 1e-12;

    pub fn new(alpha: f64) -> Result<Self> {
        if !alpha.is_finite() {
            return Err(Error::NonFinite);
        }
        if !(FRAC_PI_2 * (1.0 - Self::LEFT_TOLERANCE)..PI).contains(&alpha) {
            return Err(Error::AlphaOutOfRange { alpha });
        }
        let alpha = alpha.max(FRAC_PI_2);
        debug_assert!(alpha.sin() > 0.0);
        Ok(Self(alpha))
    }

    /// The right-angle case `alpha = pi/2`.
    pub fn right_angle() -> Self {
        Self(FRAC_PI_2)
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn sin(self) -> f64 {
        self.0.sin()
    }
}

/// Real-part bounds of `zf'/f` for members of the class.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StripBounds {
    pub lower: f64,
    pub upper: f64,
}

impl StripBounds {
    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }

    /// Signed distance of `re` into the open interval.
    pub fn margin(&self, re: f64) -> f64 {
        (re - self.lower).min(self.upper - re)
    }
}

pub fn strip_bounds(alpha: Alpha) -> StripBounds {
    let a = alpha.value();
    let s = alpha.sin();
    StripBounds {
        lower: 1.0 + (a - PI) / (2.0 * s),
        upper: 1.0 + a / (2.0 * s),
    }
}

/// `B_n(alpha) = (-1)^{n-1} sin(n alpha) / (n sin alpha)`, the Taylor
/// coefficients of the strip map.
pub fn mapping_coefficient(alpha: Alpha, n: usize) -> f64 {
    assert!(n >= 1, "mapping coefficients start at n = 1");
    let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
    sign * (n as f64 * alpha.value()).sin() / (n as f64 * alpha.sin())
}

/// `sum_{n=1}^{order} B_n z^n`.
pub fn mapping_series(alpha: Alpha, order: usize) -> TruncatedSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(Complex64::new(0.0, 0.0));
    coeffs.extend((1..=order).map(|n| Complex64::new(mapping_coefficient(alpha, n), 0.0)));
    TruncatedSeries::from_vec_unchecked(coeffs)
}

/// The same series built from the logarithm definition instead of the
/// closed-form coefficients.
pub fn mapping_series_via_log(alpha: Alpha, order: usize) -> TruncatedSeries {
    let a = alpha.value();
    let plus = Complex64::from_polar(1.0, a);
    let minus = Complex64::from_polar(1.0, -a);
    let one = Complex64::new(1.0, 0.0);
    let num = TruncatedSeries::from_vec_unchecked(linear(one, plus, order));
    let den = TruncatedSeries::from_vec_unchecked(linear(one, minus, order));
    // constant terms are 1, so the logs cannot fail
    let diff = num
        .log()
        .expect("unit constant")
        .sub(&den.log().expect("unit constant"));
    diff.scale(Complex64::new(0.0, 2.0 * alpha.sin()).inv())
}

fn linear(c0: Complex64, c1: Complex64, order: usize) -> Vec<Complex64> {
    let mut v = alloc::vec![Complex64::new(0.0, 0.0); order + 1];
    v[0] = c0;
    if order >= 1 {
        v[1] = c1;
    }
    v
}

const BRANCH_GUARD: f64 = 1e-12;

/// `F(z)` by the principal logarithm. The Mobius quotient maps the disk into
/// the half-plane `alpha - pi < arg < alpha`, which never meets the negative
/// real axis, so no branch tracking is needed.
pub fn mapping_point(alpha: Alpha, z: Complex64) -> Result<Complex64> {
    let a = alpha.value();
    let num = Complex64::new(1.0, 0.0) + Complex64::from_polar(1.0, a) * z;
    let den = Complex64::new(1.0, 0.0) + Complex64::from_polar(1.0, -a) * z;
    if num.norm() < BRANCH_GUARD || den.norm() < BRANCH_GUARD {
        return Err(Error::BranchHazard { z });
    }
    Ok((num / den).ln() / Complex64::new(0.0, 2.0 * alpha.sin()))
}

/// `F(e^{i theta})`, the boundary value used by the convolution test.
///
/// Two directions are singular: `theta - alpha = pi` (pole of the quotient)
/// and `theta + alpha = pi` (zero of the quotient), both modulo `2 pi`.
pub fn mapping_boundary_value(alpha: Alpha, theta: f64) -> Result<Complex64> {
    const GUARD: f64 = 1e-9;
    let a = alpha.value();
    let near_pi = |x: f64| {
        let d = num_traits::Euclid::rem_euclid(&(x - PI), &(2.0 * PI));
        d.min(2.0 * PI - d) < GUARD
    };
    if near_pi(theta - a) || near_pi(theta + a) {
        return Err(Error::ExcludedTheta { theta });
    }
    let num = Complex64::new(1.0, 0.0) + Complex64::from_polar(1.0, theta + a);
    let den = Complex64::new(1.0, 0.0) + Complex64::from_polar(1.0, theta - a);
    Ok((num / den).ln() / Complex64::new(0.0, 2.0 * alpha.sin()))
}

fn check_radius(r: f64) {
    assert!(
        (0.0..1.0).contains(&r),
        "radius must lie in [0, 1), got {r}"
    );
}

/// `sqrt(1 - 2 r^2 cos 2a + r^4)`, i.e. `(1 - r^2) |C|`.
fn center_scale(r: f64, alpha: Alpha) -> f64 {
    let r2 = r * r;
    (1.0 - 2.0 * r2 * (2.0 * alpha.value()).cos() + r2 * r2).sqrt()
}

const ASIN_SLACK: f64 = 1e-12;

/// `asin` with rounding excursions past `[-1, 1]` clamped. A larger excursion
/// means an upstream formula is wrong, so it panics.
fn clamped_asin(x: f64) -> f64 {
    assert!(
        x.abs() <= 1.0 + ASIN_SLACK,
        "internal consistency: asin argument {x} outside [-1, 1]"
    );
    x.clamp(-1.0, 1.0).asin()
}

/// `M1(r, alpha) = asin(-r^2 sin 2a / sqrt(1 - 2r^2 cos 2a + r^4))`, the
/// argument of the image-disk center.
///
/// # Panics
/// If `r` is outside `[0, 1)`.
pub fn center_angle(r: f64, alpha: Alpha) -> f64 {
    check_radius(r);
    clamped_asin(-r * r * (2.0 * alpha.value()).sin() / center_scale(r, alpha))
}

/// `M2(r, alpha) = asin(2 r sin a / sqrt(1 - 2r^2 cos 2a + r^4))`, the
/// half-angle under which the image disk is seen from the origin.
///
/// # Panics
/// If `r` is outside `[0, 1)`.
pub fn aperture_angle(r: f64, alpha: Alpha) -> f64 {
    check_radius(r);
    clamped_asin(2.0 * r * alpha.sin() / center_scale(r, alpha))
}

/// `N(r, alpha) = (sqrt(1 - 2r^2 cos 2a + r^4) + 2 r sin a) / (1 - r^2)`,
/// the largest modulus on the image disk.
///
/// # Panics
/// If `r` is outside `[0, 1)`.
pub fn modulus_bound(r: f64, alpha: Alpha) -> f64 {
    check_radius(r);
    (center_scale(r, alpha) + 2.0 * r * alpha.sin()) / (1.0 - r * r)
}

/// The smallest modulus on the image disk, `|C| - R`; equals
/// `1 / modulus_bound`.
pub fn modulus_lower_bound(r: f64, alpha: Alpha) -> f64 {
    check_radius(r);
    (center_scale(r, alpha) - 2.0 * r * alpha.sin()) / (1.0 - r * r)
}

/// Sharp bounds on `zf'/f` over `|z| = r`:
/// `re_lower <= Re <= re_upper` and `|Im| <= im_bound`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuotientBounds {
    pub re_lower: f64,
    pub re_upper: f64,
    pub im_bound: f64,
}

pub fn quotient_bounds(r: f64, alpha: Alpha) -> QuotientBounds {
    let m1 = center_angle(r, alpha);
    let m2 = aperture_angle(r, alpha);
    let two_sin = 2.0 * alpha.sin();
    QuotientBounds {
        re_lower: 1.0 + (m1 - m2) / two_sin,
        re_upper: 1.0 + (m1 + m2) / two_sin,
        im_bound: modulus_bound(r, alpha).ln() / two_sin,
    }
}

/// Disk containing the Mobius quotient `Q` on `|z| <= r`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ImageDisk {
    pub center: Complex64,
    pub radius: f64,
}

impl ImageDisk {
    /// `|C|^2 - R^2`, identically 1.
    pub fn power_of_origin(&self) -> f64 {
        self.center.norm_sqr() - self.radius * self.radius
    }

    pub fn contains(&self, w: Complex64, slack: f64) -> bool {
        (w - self.center).norm() <= self.radius + slack
    }
}

pub fn image_disk(r: f64, alpha: Alpha) -> ImageDisk {
    check_radius(r);
    let a = alpha.value();
    let r2 = r * r;
    let d = 1.0 - r2;
    ImageDisk {
        center: Complex64::new((1.0 - r2 * (2.0 * a).cos()) / d, -r2 * (2.0 * a).sin() / d),
        radius: 2.0 * r * alpha.sin() / d,
    }
}

/// One limit: the computed value next to the value it is claimed to approach.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LimitPair {
    pub computed: f64,
    pub stated: f64,
}

impl LimitPair {
    pub fn error(&self) -> f64 {
        if self.stated.is_infinite() {
            f64::INFINITY
        } else {
            (self.computed - self.stated).abs()
        }
    }
}

/// The three bound functions evaluated at `r = 1e-8` and `r = 1 - 1e-8`,
/// paired with their classical limits. `+inf` stands for the divergent
/// limit of the modulus bound.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LimitReport {
    pub near_zero_r: f64,
    pub near_one_r: f64,
    pub center_angle_at_zero: LimitPair,
    pub aperture_angle_at_zero: LimitPair,
    pub modulus_bound_at_zero: LimitPair,
    pub center_angle_at_one: LimitPair,
    pub aperture_angle_at_one: LimitPair,
    pub modulus_bound_at_one: LimitPair,
}

pub fn limits_check(alpha: Alpha) -> LimitReport {
    let r0 = 1e-8;
    let r1 = 1.0 - 1e-8;
    let a = alpha.value();
    LimitReport {
        near_zero_r: r0,
        near_one_r: r1,
        center_angle_at_zero: LimitPair {
            computed: center_angle(r0, alpha),
            stated: 0.0,
        },
        aperture_angle_at_zero: LimitPair {
            computed: aperture_angle(r0, alpha),
            stated: 0.0,
        },
        modulus_bound_at_zero: LimitPair {
            computed: modulus_bound(r0, alpha),
            stated: 1.0,
        },
        center_angle_at_one: LimitPair {
            computed: center_angle(r1, alpha),
            stated: 1.5 * PI - a,
        },
        aperture_angle_at_one: LimitPair {
            computed: aperture_angle(r1, alpha),
            stated: FRAC_PI_2,
        },
        modulus_bound_at_one: LimitPair {
            computed: modulus_bound(r1, alpha),
            stated: f64::INFINITY,
        },
    }
}
