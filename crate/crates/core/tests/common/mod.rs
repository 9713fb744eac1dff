#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use strip_starlike::factory::SchwarzFunction;
use strip_starlike::kernel::Alpha;
use strip_starlike::series::TruncatedSeries;
use strip_starlike::Complex64;

/// Random polynomial Schwarz functions of degree <= 8 with sampled sup-norm
/// below 0.95.
pub fn schwarz_corpus(count: usize, seed: u64) -> Vec<SchwarzFunction> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let degree = rng.gen_range(1..=8);
            let mut coeffs = vec![Complex64::new(0.0, 0.0)];
            for _ in 0..degree {
                coeffs.push(Complex64::new(
                    rng.gen_range(-1.0..1.0),
                    rng.gen_range(-1.0..1.0),
                ));
            }
            let bound = rng.gen_range(0.3..0.949);
            let w =
                SchwarzFunction::with_bound(TruncatedSeries::new(coeffs).unwrap(), bound).unwrap();
            assert!(w.certified_bound() < 0.95);
            w
        })
        .collect()
}

/// Ten angles spread over `[pi/2, pi)`.
pub fn alpha_grid() -> Vec<Alpha> {
    let lo = std::f64::consts::FRAC_PI_2;
    let hi = 3.0;
    (0..10)
        .map(|k| Alpha::new(lo + (hi - lo) * k as f64 / 9.0).unwrap())
        .collect()
}

pub fn random_series(rng: &mut ChaCha8Rng, order: usize, decay: f64) -> TruncatedSeries {
    let coeffs = (0..=order)
        .map(|k| {
            let scale = decay.powi(k as i32);
            Complex64::new(
                rng.gen_range(-1.0..1.0) * scale,
                rng.gen_range(-1.0..1.0) * scale,
            )
        })
        .collect();
    TruncatedSeries::new(coeffs).unwrap()
}

pub fn max_diff(a: &TruncatedSeries, b: &TruncatedSeries) -> f64 {
    assert_eq!(a.order(), b.order());
    a.coeffs()
        .iter()
        .zip(b.coeffs())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

pub fn rel_diff(a: &TruncatedSeries, b: &TruncatedSeries) -> f64 {
    max_diff(a, b) / a.max_abs().max(b.max_abs()).max(1.0)
}
