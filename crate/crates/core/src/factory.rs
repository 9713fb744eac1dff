//! Construction of class members.
//!
//! Every member has the form `f(z) = z exp( int_0^z F(w(t)) / t dt )` for a
//! Schwarz function `w`, where `F` is the strip map of [`crate::kernel`].
//! With `w(z) = z` this is the extremal function `f_alpha`.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_traits::Zero;
// Unused when std is linked: inherent float methods take precedence.
#[allow(unused_imports)]
use num_traits::Float;

use crate::kernel::{mapping_series, Alpha};
use crate::series::TruncatedSeries;
use crate::{Complex64, Error, Result};

/// A truncated `f(z) = z + a_2 z^2 + ... + a_N z^N`.
#[derive(Clone, Debug, PartialEq)]
pub struct NormalizedFunction {
    series: TruncatedSeries,
}

impl NormalizedFunction {
    /// Accepts a series with `c_0 = 0` and `c_1 = 1` exactly.
    pub fn new(series: TruncatedSeries) -> Result<Self> {
        if series.order() < 1
            || !series.coeff(0).is_zero()
            || series.coeff(1) != Complex64::new(1.0, 0.0)
        {
            return Err(Error::NotNormalized);
        }
        Ok(Self { series })
    }

    /// `f(z) = z`.
    pub fn identity(order: usize) -> Self {
        Self {
            series: TruncatedSeries::identity(order.max(1)),
        }
    }

    /// The Koebe function `z / (1 - z)^2 = sum n z^n`. Starlike, but not a
    /// member of the strip class.
    pub fn koebe(order: usize) -> Self {
        let coeffs = (0..=order.max(1))
            .map(|n| Complex64::new(n as f64, 0.0))
            .collect();
        Self {
            series: TruncatedSeries::from_vec_unchecked(coeffs),
        }
    }

    pub fn series(&self) -> &TruncatedSeries {
        &self.series
    }

    pub fn order(&self) -> usize {
        self.series.order()
    }

    /// `a_n`, with `a_1 = 1`.
    pub fn coeff(&self, n: usize) -> Complex64 {
        self.series.coeff(n)
    }

    pub fn evaluate(&self, z: Complex64) -> Complex64 {
        self.series.evaluate(z)
    }

    fn from_scaled_exp(exp_part: TruncatedSeries) -> Self {
        // z * E(z); E(0) = 1 so the result is normalized up to rounding,
        // which is then removed.
        let mut coeffs = Vec::with_capacity(exp_part.order() + 2);
        coeffs.push(Complex64::zero());
        coeffs.extend_from_slice(exp_part.coeffs());
        coeffs[1] = Complex64::new(1.0, 0.0);
        Self {
            series: TruncatedSeries::from_vec_unchecked(coeffs),
        }
    }
}

/// Polynomial surrogate for a Schwarz function: `w(0) = 0` and the modulus
/// sampled on `|z| = 1 - 1e-6` at 2048 points stays below 1.
///
/// The polynomial is treated as exact, so higher coefficients are zero
/// rather than unknown.
#[derive(Clone, Debug, PartialEq)]
pub struct SchwarzFunction {
    series: TruncatedSeries,
    certified_bound: f64,
}

impl SchwarzFunction {
    pub const SAMPLE_RADIUS: f64 = 1.0 - 1e-6;
    pub const SAMPLES: usize = 2048;

    pub fn new(series: TruncatedSeries) -> Result<Self> {
        if !series.coeff(0).is_zero() {
            return Err(Error::NotSchwarz {
                bound: series.coeff(0).norm(),
            });
        }
        let bound = sampled_sup(&series);
        if bound >= 1.0 {
            return Err(Error::NotSchwarz { bound });
        }
        Ok(Self {
            series,
            certified_bound: bound,
        })
    }

    /// Rescales `series` so its sampled sup-norm equals `bound`, then
    /// certifies it.
    pub fn with_bound(series: TruncatedSeries, bound: f64) -> Result<Self> {
        if !(bound > 0.0 && bound < 1.0) {
            return Err(Error::InvalidParameter {
                name: "Schwarz bound",
                value: bound,
            });
        }
        let sup = sampled_sup(&series);
        if sup == 0.0 {
            return Self::new(series);
        }
        Self::new(series.scale(Complex64::new(bound / sup, 0.0)))
    }

    /// `w(z) = z`.
    pub fn identity() -> Self {
        let series = TruncatedSeries::identity(1);
        Self {
            certified_bound: Self::SAMPLE_RADIUS,
            series,
        }
    }

    pub fn series(&self) -> &TruncatedSeries {
        &self.series
    }

    pub fn certified_bound(&self) -> f64 {
        self.certified_bound
    }

    /// The polynomial as a series of the requested order: zero-extended or
    /// truncated.
    pub fn series_at_order(&self, order: usize) -> TruncatedSeries {
        let mut coeffs = self.series.coeffs().to_vec();
        coeffs.resize(order + 1, Complex64::zero());
        TruncatedSeries::from_vec_unchecked(coeffs)
    }
}

fn sampled_sup(series: &TruncatedSeries) -> f64 {
    let n = SchwarzFunction::SAMPLES;
    (0..n)
        .map(|k| {
            let z = Complex64::from_polar(
                SchwarzFunction::SAMPLE_RADIUS,
                2.0 * PI * k as f64 / n as f64,
            );
            series.evaluate(z).norm()
        })
        .fold(0.0, f64::max)
}

fn check_order(order: usize) -> Result<()> {
    if order < 2 {
        return Err(Error::InvalidParameter {
            name: "order",
            value: order as f64,
        });
    }
    Ok(())
}

/// The extremal member `f_alpha(z) = z exp(sum_{n=1}^{N-1} B_n z^n / n)`,
/// truncated at order `N`.
pub fn extremal(alpha: Alpha, order: usize) -> Result<NormalizedFunction> {
    check_order(order)?;
    let log_part = mapping_series(alpha, order - 1).integrate_over_z()?;
    Ok(NormalizedFunction::from_scaled_exp(log_part.exp()))
}

/// `F(w(z))` to the given order, from `(F o w)' = w' / (1 + 2 cos(alpha) w + w^2)`.
///
/// Agrees with `mapping_series(alpha, order).compose(w)`, but the division by
/// a polynomial of degree `2 deg w` costs `O(order deg w)` where the dense
/// composition costs `O(order^2 deg w)`.
pub fn mapped_schwarz(alpha: Alpha, w: &SchwarzFunction, order: usize) -> Result<TruncatedSeries> {
    let ws = w.series_at_order(order + 1);
    let denominator = TruncatedSeries::one(order + 1)
        .add(&ws.scale(Complex64::new(2.0 * alpha.value().cos(), 0.0)))
        .add(&ws.mul(&ws));
    let slope = ws.derivative().div(&denominator)?;
    slope.shift_up().integrate_over_z()
}

/// Member generated by the Schwarz function `w`:
/// `f = z exp(int_0^z F(w(t)) / t dt)`.
pub fn from_schwarz(alpha: Alpha, w: &SchwarzFunction, order: usize) -> Result<NormalizedFunction> {
    check_order(order)?;
    let log_part = mapped_schwarz(alpha, w, order - 1)?.integrate_over_z()?;
    Ok(NormalizedFunction::from_scaled_exp(log_part.exp()))
}

/// `q = zf'/f`, computed as `f' / (f/z)` so the divisor has constant term 1.
/// The result has order `N - 1` and `q(0) = 1`.
pub fn q_of(f: &NormalizedFunction) -> TruncatedSeries {
    let reduced = f
        .series
        .shift_down()
        .expect("normalized series vanish at 0");
    f.series
        .derivative()
        .div(&reduced)
        .expect("normalized series have unit leading coefficient")
}

/// Solves `zf' = f q` for the coefficients of `f`, given
/// `q = 1 + A_1 z + A_2 z^2 + ...`:
///
/// `a_n = (A_{n-1} + a_2 A_{n-2} + ... + a_{n-1} A_1) / (n - 1)`.
///
/// `a_coeffs[k]` is `A_{k+1}`; the result holds `a_2, ..., a_{len+1}`.
pub fn coefficient_recursion(a_coeffs: &[Complex64]) -> Vec<Complex64> {
    let mut out: Vec<Complex64> = Vec::with_capacity(a_coeffs.len());
    for n in 2..=a_coeffs.len() + 1 {
        let mut acc = a_coeffs[n - 2];
        for k in 2..n {
            acc += out[k - 2] * a_coeffs[n - k - 1];
        }
        out.push(acc / (n - 1) as f64);
    }
    out
}

/// `q - 1` as the `A_n` list expected by [`coefficient_recursion`].
pub fn excess_coefficients(q: &TruncatedSeries) -> Vec<Complex64> {
    q.coeffs()[1..].to_vec()
}
