mod common;

use std::f64::consts::{FRAC_PI_2, PI};

use proptest::prelude::*;
use strip_starlike::kernel::{
    aperture_angle, center_angle, image_disk, mapping_coefficient, mapping_point, mapping_series,
    mapping_series_via_log, modulus_bound, modulus_lower_bound, quotient_bounds, strip_bounds,
    Alpha,
};
use strip_starlike::Complex64;

fn grid(n: usize) -> impl Iterator<Item = (f64, Alpha)> {
    (0..n).flat_map(move |i| {
        let r = 0.98 * i as f64 / (n - 1) as f64;
        (0..n).map(move |j| {
            let a = FRAC_PI_2 + (PI - 1e-3 - FRAC_PI_2) * j as f64 / (n - 1) as f64;
            (r, Alpha::new(a).unwrap())
        })
    })
}

#[test]
fn arcsin_argument_identity() {
    for (r, alpha) in grid(50) {
        let a = alpha.value();
        let lhs = (2.0 * r * a.sin()).powi(2) + (1.0 - r * r).powi(2);
        let rhs = 1.0 - 2.0 * r * r * (2.0 * a).cos() + r.powi(4);
        assert!((lhs - rhs).abs() < 1e-12, "r={r} a={a}");
    }
}

#[test]
fn disk_power_and_reciprocal_modulus() {
    for (r, alpha) in grid(50) {
        let disk = image_disk(r, alpha);
        assert!((disk.power_of_origin() - 1.0).abs() < 1e-10 * (1.0 + disk.radius * disk.radius));
        let prod = modulus_bound(r, alpha) * modulus_lower_bound(r, alpha);
        assert!((prod - 1.0).abs() < 1e-10, "r={r} prod={prod}");
        assert!(
            (disk.center.norm() + disk.radius - modulus_bound(r, alpha)).abs()
                < 1e-9 * modulus_bound(r, alpha)
        );
    }
}

#[test]
fn strip_width_is_pi_over_two_sin() {
    for (_, alpha) in grid(50) {
        let b = strip_bounds(alpha);
        assert!((b.width() - PI / (2.0 * alpha.sin())).abs() < 1e-10);
        assert!(b.lower > 0.0);
    }
}

#[test]
fn modulus_bound_exceeds_one_inside_disk() {
    for (r, alpha) in grid(50).filter(|(r, _)| *r > 0.0) {
        assert!(modulus_bound(r, alpha) > 1.0);
    }
}

#[test]
fn center_angle_sign() {
    for (r, alpha) in grid(50) {
        let m1 = center_angle(r, alpha);
        if alpha.value() == FRAC_PI_2 {
            assert!(m1.abs() < 1e-15);
        } else {
            assert!(m1 >= 0.0);
        }
    }
}

#[test]
fn dual_construction_agrees() {
    for alpha in common::alpha_grid() {
        let closed = mapping_series(alpha, 100);
        let via_log = mapping_series_via_log(alpha, 100);
        assert!(
            common::max_diff(&closed, &via_log) < 1e-12,
            "alpha={}",
            alpha.value()
        );
    }
}

#[test]
fn mapping_coefficients_bounded_by_one() {
    for j in 0..50 {
        let alpha = Alpha::new(FRAC_PI_2 + (PI - FRAC_PI_2) * j as f64 / 50.0).unwrap();
        for n in 1..=200 {
            assert!(mapping_coefficient(alpha, n).abs() <= 1.0 + 1e-12, "n={n}");
        }
    }
}

#[test]
fn bracket_is_nested_in_radius() {
    for alpha in common::alpha_grid() {
        let mut prev = quotient_bounds(0.0, alpha);
        for i in 1..100 {
            let cur = quotient_bounds(0.99 * i as f64 / 99.0, alpha);
            assert!(cur.re_lower <= prev.re_lower + 1e-15);
            assert!(prev.re_upper <= cur.re_upper + 1e-15);
            assert!(prev.im_bound <= cur.im_bound + 1e-15);
            prev = cur;
        }
    }
}

#[test]
fn bracket_sits_inside_strip() {
    for (r, alpha) in grid(30) {
        let b = quotient_bounds(r, alpha);
        let s = strip_bounds(alpha);
        assert!(b.re_lower > s.lower && b.re_upper < s.upper);
        assert!(aperture_angle(r, alpha) < FRAC_PI_2 || r == 0.0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn quotient_stays_off_negative_axis(a in FRAC_PI_2..PI - 1e-6, rho in 0.0f64..0.999, t in 0.0f64..2.0 * PI) {
        let alpha = Alpha::new(a).unwrap();
        let z = Complex64::from_polar(rho, t);
        let q = (Complex64::new(1.0, 0.0) + Complex64::from_polar(1.0, a) * z)
            / (Complex64::new(1.0, 0.0) + Complex64::from_polar(1.0, -a) * z);
        let arg = q.arg();
        prop_assert!(arg > a - PI - 1e-12 && arg < a + 1e-12);
        let w = mapping_point(alpha, z).unwrap();
        let s = strip_bounds(alpha);
        prop_assert!(1.0 + w.re > s.lower && 1.0 + w.re < s.upper);
    }

    #[test]
    fn point_value_matches_series(a in FRAC_PI_2..3.0, rho in 0.0f64..0.5, t in 0.0f64..2.0 * PI) {
        let alpha = Alpha::new(a).unwrap();
        let z = Complex64::from_polar(rho, t);
        let series = mapping_series(alpha, 80).evaluate(z);
        prop_assert!((series - mapping_point(alpha, z).unwrap()).norm() < 1e-12);
    }

    #[test]
    fn image_disk_contains_quotient(a in FRAC_PI_2..PI - 1e-3, r in 0.01f64..0.99, t in 0.0f64..2.0 * PI) {
        let alpha = Alpha::new(a).unwrap();
        let z = Complex64::from_polar(r, t);
        let q = (Complex64::new(1.0, 0.0) + Complex64::from_polar(1.0, a) * z)
            / (Complex64::new(1.0, 0.0) + Complex64::from_polar(1.0, -a) * z);
        let disk = image_disk(r, alpha);
        prop_assert!(disk.contains(q, 1e-9 * (1.0 + disk.radius)));
        prop_assert!(((q - disk.center).norm() - disk.radius).abs() < 1e-8 * (1.0 + disk.radius));
    }
}
