//! Truncated complex Taylor polynomials.
//!
//! A [`TruncatedSeries`] of order `N` stores `c_0, ..., c_N` and stands for
//! the power series `c_0 + c_1 z + ... + c_N z^N + O(z^{N+1})`. Binary
//! operations truncate to the smaller of the two orders; nothing is padded.
//! Every coefficient of a result is exact up to rounding: truncation never
//! leaks into the retained terms.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;
// Unused when std is linked: inherent float methods take precedence.
#[allow(unused_imports)]
use num_traits::Float;

use crate::{Complex64, Error, Result};

/// Default series order used across the toolkit.
pub const DEFAULT_ORDER: usize = 64;

/// Default guard for division: constant terms with modulus at or below this
/// are treated as zero.
pub const DEFAULT_DIV_EPS: f64 = 1e-300;

#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries {
    coeffs: Vec<Complex64>,
}

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

impl TruncatedSeries {
    /// Builds a series from `c_0..c_N`. Rejects an empty list and any
    /// non-finite coefficient.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptySeries);
        }
        if coeffs
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::NonFinite);
        }
        Ok(Self { coeffs })
    }

    /// Real coefficients, mostly a convenience for tests and literals.
    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&x| c(x)).collect())
    }

    pub(crate) fn from_vec_unchecked(coeffs: Vec<Complex64>) -> Self {
        debug_assert!(!coeffs.is_empty());
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![Complex64::zero(); order + 1],
        }
    }

    pub fn constant(value: Complex64, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = value;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(c(1.0), order)
    }

    /// The series `z` (order at least 1 is needed for the term to survive).
    pub fn identity(order: usize) -> Self {
        Self::monomial(1, c(1.0), order)
    }

    /// `value * z^power`, dropped entirely if `power > order`.
    pub fn monomial(power: usize, value: Complex64, order: usize) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.coeffs[power] = value;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Complex64> {
        self.coeffs
    }

    /// Coefficient of `z^n`; zero beyond the order.
    pub fn coeff(&self, n: usize) -> Complex64 {
        self.coeffs.get(n).copied().unwrap_or_else(Complex64::zero)
    }

    /// Drops every term above `order`. Raising the order is not possible.
    pub fn truncate(&self, order: usize) -> Self {
        let n = order.min(self.order());
        Self {
            coeffs: self.coeffs[..=n].to_vec(),
        }
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|&a| a * factor).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self {
            coeffs: (0..=n).map(|k| self.coeffs[k] + other.coeffs[k]).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self {
            coeffs: (0..=n).map(|k| self.coeffs[k] - other.coeffs[k]).collect(),
        }
    }

    /// Cauchy product truncated at the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = vec![Complex64::zero(); n + 1];
        // Loop over the sparser operand's nonzero terms.
        let (sparse, dense) = if nonzeros(&self.coeffs[..=n]) <= nonzeros(&other.coeffs[..=n]) {
            (&self.coeffs, &other.coeffs)
        } else {
            (&other.coeffs, &self.coeffs)
        };
        for (i, &a) in sparse[..=n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (slot, &b) in out[i..].iter_mut().zip(dense.iter()) {
                *slot += a * b;
            }
        }
        Self { coeffs: out }
    }

    /// Term-wise (Hadamard) product, the convolution `f * g`.
    pub fn hadamard(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self {
            coeffs: (0..=n).map(|k| self.coeffs[k] * other.coeffs[k]).collect(),
        }
    }

    /// `self / divisor` with the default guard [`DEFAULT_DIV_EPS`].
    pub fn div(&self, divisor: &Self) -> Result<Self> {
        self.div_with_eps(divisor, DEFAULT_DIV_EPS)
    }

    /// Forward substitution: the unique `q` with `divisor * q = self` to the
    /// common order.
    pub fn div_with_eps(&self, divisor: &Self, eps: f64) -> Result<Self> {
        let b0 = divisor.coeffs[0];
        if b0.norm() <= eps {
            return Err(Error::DivisionByNonUnit { constant: b0 });
        }
        let n = self.order().min(divisor.order());
        let inv = b0.inv();
        let support: Vec<(usize, Complex64)> = divisor.coeffs[1..=n]
            .iter()
            .enumerate()
            .filter(|(_, b)| !b.is_zero())
            .map(|(k, &b)| (k + 1, b))
            .collect();
        let mut out: Vec<Complex64> = Vec::with_capacity(n + 1);
        for m in 0..=n {
            let mut acc = self.coeffs[m];
            for &(k, b) in support.iter().take_while(|(k, _)| *k <= m) {
                acc -= b * out[m - k];
            }
            out.push(acc * inv);
        }
        Ok(Self { coeffs: out })
    }

    /// `exp` of the series. The constant term is factored out as `exp(c_0)`,
    /// the rest follows from `E' = a' E`.
    pub fn exp(&self) -> Self {
        let n = self.order();
        let scaled: Vec<(usize, Complex64)> = self.coeffs[1..]
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(k, &a)| (k + 1, a * (k + 1) as f64))
            .collect();
        let mut out = Vec::with_capacity(n + 1);
        out.push(self.coeffs[0].exp());
        for m in 1..=n {
            let mut acc = Complex64::zero();
            for &(k, ka) in scaled.iter().take_while(|(k, _)| *k <= m) {
                acc += ka * out[m - k];
            }
            out.push(acc / m as f64);
        }
        Self { coeffs: out }
    }

    /// Principal-branch logarithm, from `L' = a'/a` with `L(0) = log a(0)`.
    pub fn log(&self) -> Result<Self> {
        self.log_with_eps(DEFAULT_DIV_EPS)
    }

    pub fn log_with_eps(&self, eps: f64) -> Result<Self> {
        let a0 = self.coeffs[0];
        if a0.norm() <= eps {
            return Err(Error::DivisionByNonUnit { constant: a0 });
        }
        let n = self.order();
        let inv = a0.inv();
        let mut out = Vec::with_capacity(n + 1);
        out.push(a0.ln());
        // m L_m = m a_m / a_0 - (1/a_0) sum_{k=1}^{m-1} k L_k a_{m-k}
        for m in 1..=n {
            let mut acc = self.coeffs[m] * m as f64;
            for (k, &lk) in out.iter().enumerate().take(m).skip(1) {
                let a = self.coeffs[m - k];
                if !a.is_zero() {
                    acc -= lk * a * k as f64;
                }
            }
            out.push(acc * inv / m as f64);
        }
        Ok(Self { coeffs: out })
    }

    /// Term-by-term derivative; the order drops by one (order 0 stays 0).
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        Self {
            coeffs: self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(k, &a)| a * (k + 1) as f64)
                .collect(),
        }
    }

    /// Antiderivative vanishing at 0, kept at the same order (the top term
    /// `c_N z^{N+1}/(N+1)` falls off). Only series with `c_0 = 0` are
    /// accepted.
    pub fn integrate(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let n = self.order();
        let mut out = vec![Complex64::zero(); n + 1];
        for (k, slot) in out.iter_mut().enumerate().skip(1) {
            *slot = self.coeffs[k - 1] / k as f64;
        }
        Ok(Self { coeffs: out })
    }

    /// `int_0^z a(t)/t dt = sum_{n>=1} c_n z^n / n` for a series with
    /// `c_0 = 0`. Same order as the input; no term is lost.
    pub fn integrate_over_z(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let mut out = self.coeffs.clone();
        for (k, a) in out.iter_mut().enumerate().skip(1) {
            *a /= k as f64;
        }
        Ok(Self { coeffs: out })
    }

    /// `a(z)/z` for a series with `c_0 = 0`; the order drops by one.
    pub fn shift_down(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        if self.order() == 0 {
            return Ok(Self::zero(0));
        }
        Ok(Self {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// `z * a(z)` at the same order, dropping the top coefficient.
    pub fn shift_up(&self) -> Self {
        let mut out = Vec::with_capacity(self.coeffs.len());
        out.push(Complex64::zero());
        out.extend_from_slice(&self.coeffs[..self.order()]);
        Self { coeffs: out }
    }

    /// Horner evaluation. Intended for `|z| <= 1`, where the truncation tail
    /// is the caller's to bound.
    pub fn evaluate(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::zero(), |acc, &a| acc * z + a)
    }

    /// Value and derivative at `z` in one Horner pass.
    pub fn evaluate_with_derivative(&self, z: Complex64) -> (Complex64, Complex64) {
        let mut p = Complex64::zero();
        let mut dp = Complex64::zero();
        for &a in self.coeffs.iter().rev() {
            dp = dp * z + p;
            p = p * z + a;
        }
        (p, dp)
    }

    /// `outer(inner(z))`, truncated at the smaller order. The inner series
    /// must vanish at 0 exactly.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonzeroInnerConstant);
        }
        let n = self.order().min(inner.order());
        let inner_terms: Vec<(usize, Complex64)> = inner.coeffs[1..=n]
            .iter()
            .enumerate()
            .filter(|(_, w)| !w.is_zero())
            .map(|(k, &w)| (k + 1, w))
            .collect();
        // Horner over the outer coefficients. The partial sum for c_k is
        // multiplied by inner k more times, each raising the valuation by at
        // least one, so only degrees <= n - k can reach the result.
        let mut acc = vec![Complex64::zero(); n + 1];
        acc[0] = self.coeffs[n];
        let mut scratch = vec![Complex64::zero(); n + 1];
        for k in (0..n).rev() {
            let live = n - k;
            for s in scratch[..=live].iter_mut() {
                *s = Complex64::zero();
            }
            for &(j, w) in &inner_terms {
                if j > live {
                    break;
                }
                for (slot, &a) in scratch[j..=live].iter_mut().zip(acc.iter()) {
                    *slot += w * a;
                }
            }
            scratch[0] += self.coeffs[k];
            core::mem::swap(&mut acc, &mut scratch);
        }
        Ok(Self { coeffs: acc })
    }

    /// Largest coefficient modulus.
    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }
}

fn nonzeros(cs: &[Complex64]) -> usize {
    cs.iter().filter(|z| !z.is_zero()).count()
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: Self) -> TruncatedSeries {
        TruncatedSeries::add(self, rhs)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: Self) -> TruncatedSeries {
        TruncatedSeries::sub(self, rhs)
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: Self) -> TruncatedSeries {
        TruncatedSeries::mul(self, rhs)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        self.scale(c(-1.0))
    }
}

/// Smallest order `N` with `r^{N+1} / (1 - r) <= tol`: the tail of a series
/// with coefficients bounded by 1, evaluated at `|z| = r`, is then below
/// `tol`.
pub fn order_for_radius(r: f64, tol: f64) -> usize {
    assert!((0.0..1.0).contains(&r), "radius must lie in [0, 1)");
    assert!(tol > 0.0);
    if r == 0.0 {
        return 1;
    }
    let needed = (tol * (1.0 - r)).ln() / r.ln() - 1.0;
    (needed.ceil().max(1.0)) as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(cs: &[f64]) -> TruncatedSeries {
        TruncatedSeries::from_real(cs).unwrap()
    }

    fn close(a: &TruncatedSeries, b: &TruncatedSeries, tol: f64) -> bool {
        a.order() == b.order()
            && a.coeffs()
                .iter()
                .zip(b.coeffs())
                .all(|(x, y)| (x - y).norm() <= tol)
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert_eq!(TruncatedSeries::new(vec![]), Err(Error::EmptySeries));
        assert_eq!(
            TruncatedSeries::new(vec![c(1.0), Complex64::new(f64::NAN, 0.0)]),
            Err(Error::NonFinite)
        );
        assert_eq!(
            TruncatedSeries::from_real(&[f64::INFINITY]),
            Err(Error::NonFinite)
        );
    }

    #[test]
    fn add_examples() {
        assert_eq!(s(&[1.0, 1.0]).add(&s(&[1.0, -1.0])), s(&[2.0, 0.0]));
        let a = s(&[0.3, -1.0, 2.0]);
        assert_eq!(a.add(&TruncatedSeries::zero(2)), a);
        assert_eq!(
            s(&[0.0, 1.0, 1.0]).add(&s(&[0.0, 0.0, 1.0])),
            s(&[0.0, 1.0, 2.0])
        );
        // result order is the smaller one
        assert_eq!(s(&[1.0, 2.0, 3.0]).add(&s(&[1.0, 1.0])).order(), 1);
    }

    #[test]
    fn mul_examples() {
        assert_eq!(
            s(&[1.0, 1.0, 0.0]).mul(&s(&[1.0, -1.0, 0.0])),
            s(&[1.0, 0.0, -1.0])
        );
        let a = s(&[0.5, 2.0, -1.0]);
        assert_eq!(a.mul(&TruncatedSeries::one(2)), a);
        let geometric = s(&[1.0; 9]);
        let mut expect = vec![0.0; 9];
        expect[0] = 1.0;
        assert_eq!(
            geometric.mul(&s(&[1.0, -1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0])),
            s(&expect)
        );
    }

    #[test]
    fn div_examples() {
        let one = TruncatedSeries::one(6);
        let q = one.div(&s(&[1.0, -1.0, 0.0, 0.0, 0.0, 0.0, 0.0])).unwrap();
        assert_eq!(q, s(&[1.0; 7]));

        let a = s(&[2.0, -1.0, 0.25, 3.0]);
        assert!(close(&a.div(&a).unwrap(), &TruncatedSeries::one(3), 1e-15));

        // (1 + 2z) / (1 + z) = 1 + z - z^2 + z^3 - ...
        let q = s(&[1.0, 2.0, 0.0, 0.0, 0.0])
            .div(&s(&[1.0, 1.0, 0.0, 0.0, 0.0]))
            .unwrap();
        assert_eq!(q, s(&[1.0, 1.0, -1.0, 1.0, -1.0]));
    }

    #[test]
    fn div_guards_constant_term() {
        let err = s(&[1.0, 1.0]).div(&s(&[0.0, 1.0])).unwrap_err();
        assert!(matches!(err, Error::DivisionByNonUnit { .. }));
        assert!(s(&[1.0]).div_with_eps(&s(&[1e-5]), 1e-3).is_err());
        assert!(s(&[1.0]).div_with_eps(&s(&[1e-5]), 1e-6).is_ok());
    }

    #[test]
    fn exp_examples() {
        assert_eq!(TruncatedSeries::zero(5).exp(), TruncatedSeries::one(5));
        let e = TruncatedSeries::identity(10).exp();
        let mut fact = 1.0;
        for n in 0..=10 {
            if n > 0 {
                fact *= n as f64;
            }
            assert!((e.coeff(n) - c(1.0 / fact)).norm() < 1e-16);
        }
        let log1p = s(&[1.0, 1.0, 0.0, 0.0, 0.0, 0.0]).log().unwrap();
        assert!(close(
            &log1p.exp(),
            &s(&[1.0, 1.0, 0.0, 0.0, 0.0, 0.0]),
            1e-15
        ));
    }

    #[test]
    fn exp_handles_constant_term() {
        let e = s(&[2.0, 1.0, 0.0]).exp();
        let e2 = 2f64.exp();
        assert!((e.coeff(0).re - e2).abs() < 1e-14);
        assert!((e.coeff(1).re - e2).abs() < 1e-14);
        assert!((e.coeff(2).re - e2 / 2.0).abs() < 1e-14);
    }

    #[test]
    fn log_examples() {
        assert_eq!(
            TruncatedSeries::one(4).log().unwrap(),
            TruncatedSeries::zero(4)
        );
        let l = s(&[1.0, 1.0, 0.0, 0.0, 0.0, 0.0]).log().unwrap();
        let expect = s(&[0.0, 1.0, -0.5, 1.0 / 3.0, -0.25, 0.2]);
        assert!(close(&l, &expect, 1e-16));
        let p = s(&[0.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0]);
        assert!(close(&p.exp().log().unwrap(), &p, 1e-15));
        assert!(matches!(
            s(&[0.0, 1.0]).log(),
            Err(Error::DivisionByNonUnit { .. })
        ));
    }

    #[test]
    fn log_uses_principal_branch() {
        let l = s(&[-1.0, 0.0]).log().unwrap();
        assert!((l.coeff(0) - Complex64::new(0.0, core::f64::consts::PI)).norm() < 1e-15);
    }

    #[test]
    fn derivative_and_integrate() {
        assert_eq!(s(&[0.0, 0.0, 1.0]).derivative(), s(&[0.0, 2.0]));
        assert_eq!(s(&[1.0, 0.0]).integrate(), Err(Error::NonzeroConstantTerm));
        assert_eq!(
            s(&[0.0, 1.0, 0.0]).integrate().unwrap(),
            s(&[0.0, 0.0, 0.5])
        );
        let a = s(&[0.0, 1.0, 0.0, 1.0, 0.0]);
        assert_eq!(a.integrate().unwrap().derivative(), a.truncate(3));
        assert_eq!(
            TruncatedSeries::one(0).derivative(),
            TruncatedSeries::zero(0)
        );
    }

    #[test]
    fn integrate_over_z_divides_by_index() {
        let a = s(&[0.0, 1.0, 2.0, 3.0]);
        assert_eq!(a.integrate_over_z().unwrap(), s(&[0.0, 1.0, 1.0, 1.0]));
        assert!(s(&[1.0, 1.0]).integrate_over_z().is_err());
    }

    #[test]
    fn shifts() {
        let a = s(&[0.0, 1.0, 2.0]);
        assert_eq!(a.shift_down().unwrap(), s(&[1.0, 2.0]));
        assert_eq!(a.shift_up(), s(&[0.0, 0.0, 1.0]));
        assert!(s(&[1.0, 2.0]).shift_down().is_err());
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(s(&[1.0, 1.0]).evaluate(c(0.0)), c(1.0));
        let a = s(&[0.7, -2.0, 3.0]);
        assert_eq!(a.evaluate(c(0.0)), a.coeff(0));

        // z / (1 - z) at z = 1/2, order 50: tail is 0.5^51 / 0.5
        let mut cs = vec![1.0; 51];
        cs[0] = 0.0;
        let v = s(&cs).evaluate(c(0.5));
        assert!((v - c(1.0)).norm() <= 0.5f64.powi(51) / 0.5 * 1.0001);
    }

    #[test]
    fn evaluate_with_derivative_matches_derivative_series() {
        let a = s(&[0.5, -1.0, 2.0, 0.25, 3.0]);
        let z = Complex64::new(0.3, -0.4);
        let (v, dv) = a.evaluate_with_derivative(z);
        assert!((v - a.evaluate(z)).norm() < 1e-15);
        assert!((dv - a.derivative().evaluate(z)).norm() < 1e-14);
    }

    #[test]
    fn compose_examples() {
        let a = s(&[0.2, -1.0, 0.5, 3.0]);
        assert_eq!(a.compose(&TruncatedSeries::identity(3)).unwrap(), a);
        assert_eq!(
            s(&[1.0, 1.0, 0.0, 0.0])
                .compose(&s(&[0.0, 0.0, 1.0, 0.0]))
                .unwrap(),
            s(&[1.0, 0.0, 1.0, 0.0])
        );
        // log(1 + z) composed with z/2 has coefficients (-1)^{n-1} / (n 2^n)
        let n = 12;
        let mut log1p = vec![1.0, 1.0];
        log1p.resize(n + 1, 0.0);
        let l = s(&log1p).log().unwrap();
        let mut half = vec![0.0; n + 1];
        half[1] = 0.5;
        let composed = l.compose(&s(&half)).unwrap();
        for k in 1..=n {
            let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
            let expect = sign / (k as f64 * 2f64.powi(k as i32));
            assert!((composed.coeff(k).re - expect).abs() < 1e-16);
        }
        assert_eq!(
            a.compose(&s(&[0.1, 1.0, 0.0, 0.0])),
            Err(Error::NonzeroInnerConstant)
        );
    }

    #[test]
    fn compose_truncates_to_smaller_order() {
        let outer = s(&[1.0, 1.0, 1.0, 1.0, 1.0]);
        let inner = s(&[0.0, 1.0, 1.0]);
        let out = outer.compose(&inner).unwrap();
        // 1 + (z+z^2) + (z+z^2)^2 = 1 + z + 2z^2 + ...
        assert_eq!(out, s(&[1.0, 1.0, 2.0]));
    }

    #[test]
    fn hadamard_reproduces_identity_kernels() {
        let f = s(&[0.0, 1.0, -0.5, 0.25, 2.0]);
        let geometric = s(&[0.0, 1.0, 1.0, 1.0, 1.0]);
        let koebe = s(&[0.0, 1.0, 2.0, 3.0, 4.0]);
        assert_eq!(f.hadamard(&geometric), f);
        assert_eq!(f.hadamard(&koebe), s(&[0.0, 1.0, -1.0, 0.75, 8.0]));
    }

    #[test]
    fn order_for_radius_bounds_geometric_tail() {
        for &(r, tol) in &[(0.5, 1e-12), (0.9, 1e-10), (0.99, 1e-11)] {
            let n = order_for_radius(r, tol);
            let tail = r.powi(n as i32 + 1) / (1.0 - r);
            assert!(tail <= tol * (1.0 + 1e-9));
            let prev = r.powi(n as i32) / (1.0 - r);
            assert!(prev > tol || n == 1);
        }
    }
}
