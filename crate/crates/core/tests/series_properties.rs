use proptest::prelude::*;
use strip_starlike::series::TruncatedSeries;
use strip_starlike::Complex64;

fn series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), order + 1).prop_map(|cs| {
        TruncatedSeries::new(
            cs.into_iter()
                .map(|(re, im)| Complex64::new(re, im))
                .collect(),
        )
        .unwrap()
    })
}

/// Series with `c_0 = 1` and geometrically decaying tail.
fn unit_series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), order).prop_map(|cs| {
        let mut coeffs = vec![Complex64::new(1.0, 0.0)];
        coeffs.extend(
            cs.into_iter()
                .enumerate()
                .map(|(k, (re, im))| Complex64::new(re, im) * 0.5f64.powi(k as i32 + 1)),
        );
        TruncatedSeries::new(coeffs).unwrap()
    })
}

fn rel(a: &TruncatedSeries, b: &TruncatedSeries) -> f64 {
    let scale = a.max_abs().max(b.max_abs()).max(1.0);
    a.coeffs()
        .iter()
        .zip(b.coeffs())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
        / scale
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn add_and_mul_commute(a in series(12), b in series(12)) {
        prop_assert!(rel(&a.add(&b), &b.add(&a)) == 0.0);
        prop_assert!(rel(&a.mul(&b), &b.mul(&a)) < 1e-12);
    }

    #[test]
    fn mul_associates_and_distributes(a in series(10), b in series(10), c in series(10)) {
        prop_assert!(rel(&a.mul(&b).mul(&c), &a.mul(&b.mul(&c))) < 1e-12);
        prop_assert!(rel(&a.mul(&b.add(&c)), &a.mul(&b).add(&a.mul(&c))) < 1e-12);
    }

    #[test]
    fn div_then_mul_round_trips(a in series(16), b in unit_series(16), c0 in 0.5f64..2.0, phase in 0.0f64..std::f64::consts::TAU) {
        let b = b.scale(Complex64::from_polar(c0, phase));
        let q = a.div(&b).unwrap();
        prop_assert!(rel(&b.mul(&q), &a) < 1e-12);
    }

    #[test]
    fn exp_and_log_are_inverse(a in unit_series(20)) {
        let back = a.log().unwrap().exp();
        prop_assert!(rel(&back, &a) < 1e-10);
        let l = a.log().unwrap();
        prop_assert!(rel(&l.exp().log().unwrap(), &l) < 1e-10);
    }

    #[test]
    fn derivative_undoes_integrate(a in series(15)) {
        let mut cs = a.coeffs().to_vec();
        cs[0] = Complex64::new(0.0, 0.0);
        let a = TruncatedSeries::new(cs).unwrap();
        let back = a.integrate().unwrap().derivative();
        let expect = a.truncate(a.order() - 1);
        prop_assert!(rel(&back, &expect) < 1e-15);
    }

    #[test]
    fn evaluate_is_linear(a in series(12), b in series(12), re in -0.7f64..0.7, im in -0.7f64..0.7) {
        let z = Complex64::new(re, im);
        let lhs = a.add(&b).evaluate(z);
        let rhs = a.evaluate(z) + b.evaluate(z);
        prop_assert!((lhs - rhs).norm() < 1e-12);
    }

    #[test]
    fn compose_agrees_pointwise(a in series(40), w1 in -0.3f64..0.3, w2 in -0.3f64..0.3) {
        // inner = w1 z + w2 z^2 keeps |inner| < 0.6 on |z| <= 1, so a(inner(z)) at |z| = 0.1
        // is well inside both radii of convergence
        let mut inner = vec![Complex64::new(0.0, 0.0); 41];
        inner[1] = Complex64::new(w1, 0.0);
        inner[2] = Complex64::new(0.0, w2);
        let inner = TruncatedSeries::new(inner).unwrap();
        let composed = a.compose(&inner).unwrap();
        let z = Complex64::new(0.06, 0.08);
        let direct = a.evaluate(inner.evaluate(z));
        prop_assert!((composed.evaluate(z) - direct).norm() < 1e-12);
    }
}
