use num_complex::Complex64;
use proptest::prelude::*;

use swanson::grid::GridFunction;
use swanson::models::{MorseModel, PoschlTellerModel, SuperpotentialModel};
use swanson::similarity::{
    apply_hermitian, apply_swanson, charge_density, eta, rho, rho_inverse, riccati_map,
    SwansonParams,
};
use swanson::specfun::{assoc_laguerre, hyp1f1, hyp2f1, log_gamma};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// `(alpha, beta)` inside the admissible region with `|mu| <= 3`.
fn params() -> impl Strategy<Value = SwansonParams> {
    (-0.9..0.9f64, -0.9..0.9f64)
        .prop_filter_map("admissible", |(a, b)| {
            SwansonParams::new(a, b).ok().filter(|p| p.mu().abs() <= 3.0 && p.one_minus_sum() > 0.2)
        })
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 64,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn mu_formula(a in -2.0..0.99f64, b in -2.0..0.99f64) {
        match SwansonParams::new(a, b) {
            Ok(p) => {
                let mu = (a - b) / (1.0 - a - b);
                prop_assert!((p.mu() - mu).abs() <= 4.0 * f64::EPSILON * mu.abs());
                prop_assert!(a + b < 1.0 && 4.0 * a * b < 1.0);
            }
            Err(_) => prop_assert!(a + b >= 1.0 || 4.0 * a * b >= 1.0),
        }
    }

    #[test]
    fn hermitian_reduction(a in -0.4..0.45f64, x in -20.0..20.0f64, lambda2 in 0.2..4.0f64) {
        let p = SwansonParams::new(a, a).unwrap();
        prop_assert_eq!(p.mu(), 0.0);
        let m = PoschlTellerModel::new(lambda2, 1.0, p).unwrap();
        let sp = m.superpotential();
        prop_assert_eq!(rho(&p, &sp, x).unwrap(), 1.0);
        prop_assert_eq!(eta(&p, &sp, x).unwrap(), 1.0);
        let psi = GridFunction::from_fn(-1.0, 1.0, 11, |y| c(y.cos(), y)).unwrap();
        let chi = charge_density(&p, &sp, &psi).unwrap();
        for (q, v) in chi.values().iter().zip(psi.values()) {
            prop_assert_eq!(q.re, v.norm_sqr());
        }
    }

    #[test]
    fn intertwining(
        p in params(),
        lambda2 in 0.2..3.0f64,
        x0 in -1.0..1.0f64,
        w in 0.4..1.0f64,
        q in -3.0..3.0f64,
    ) {
        let m = PoschlTellerModel::new(lambda2, 1.0, p).unwrap();
        let sp = m.superpotential();
        let v = riccati_map(&p, sp);
        let f = GridFunction::from_fn(-5.0, 5.0, 10001, |x| {
            (-(x - x0).powi(2) / (2.0 * w * w)).exp() * c(0.0, q * x).exp()
        }).unwrap();
        let hf = apply_swanson(&p, &sp, &f).unwrap();
        let rf = f.map(|x, val| val * rho(&p, &sp, x).unwrap());
        let h_rf = apply_hermitian(|x| v.value(x), &rf).unwrap();
        let scale = rf.max_abs();
        for i in f.interior() {
            let lhs = hf.values()[i] * rho(&p, &sp, f.x(i)).unwrap();
            prop_assert!((lhs - h_rf.values()[i]).norm() < 1e-6 * scale);
        }
    }

    #[test]
    fn poschl_teller_conservation(p in params(), lambda2 in 0.1..5.0f64, k in 0.05..10.0f64) {
        let m = PoschlTellerModel::new(lambda2, 1.0, p).unwrap();
        let s = m.scattering(k).unwrap();
        prop_assert!((s.flux() - 1.0).abs() < 1e-9, "flux {}", s.flux());
    }

    #[test]
    fn morse_total_reflection(p in params(), a2 in 0.2..3.0f64, b2 in 0.2..2.0f64, k in 0.1..6.0f64) {
        let m = MorseModel::new(a2, b2, 1.0, p).unwrap();
        let s = m.scattering(k).unwrap();
        prop_assert!((s.r.norm() - 1.0).abs() < 1e-9);
        prop_assert_eq!(s.t.norm(), 0.0);
    }

    #[test]
    fn charge_is_hermitian_density(p in params(), lambda2 in 0.2..3.0f64, k in 0.1..5.0f64, x in -6.0..6.0f64) {
        let model = SuperpotentialModel::PoschlTeller(PoschlTellerModel::new(lambda2, 1.0, p).unwrap());
        let st = model.scattering_state(k).unwrap();
        let sp = model.superpotential();
        let phi = st.phi(x).unwrap();
        let psi = st.psi(x).unwrap();
        prop_assert!((psi - phi * rho_inverse(&p, &sp, x).unwrap()).norm() <= 1e-15 * psi.norm());
        let chi = eta(&p, &sp, x).unwrap() * psi.norm_sqr();
        prop_assert!((chi - phi.norm_sqr()).abs() <= 1e-12 * phi.norm_sqr().max(1e-300));
    }

    #[test]
    fn hyp2f1_contiguous_in_a(
        ar in -2.0..2.0f64, ai in -1.0..1.0f64,
        br in -2.0..2.0f64, bi in -1.0..1.0f64,
        cr in 0.3..3.0f64,
        r in 0.0..0.95f64, t in -3.1..3.1f64,
    ) {
        // (c-a) F(a-1) + (2a - c + (b-a) z) F(a) + a (z-1) F(a+1) = 0
        let (a, b, cc) = (c(ar, ai), c(br, bi), c(cr, 0.0));
        let z = Complex64::from_polar(r, t);
        let lo = hyp2f1(a - 1.0, b, cc, z).unwrap();
        let mid = hyp2f1(a, b, cc, z).unwrap();
        let hi = hyp2f1(a + 1.0, b, cc, z).unwrap();
        let terms = [(cc - a) * lo, (a * 2.0 - cc + (b - a) * z) * mid, a * (z - 1.0) * hi];
        let scale: f64 = terms.iter().map(|v| v.norm()).sum();
        let sum: Complex64 = terms.iter().sum();
        prop_assert!(sum.norm() <= 1e-9 * scale.max(1.0), "residual {}", sum.norm() / scale);
    }

    #[test]
    fn kummer_contiguous_in_b(ar in -3.0..3.0f64, ai in -3.0..3.0f64, br in 1.5..8.0f64, bi in -3.0..3.0f64, z in 0.0..150.0f64) {
        // b(b-1) M(a,b-1,z) + b(1-b-z) M(a,b,z) + z(b-a) M(a,b+1,z) = 0
        let (a, b) = (c(ar, ai), c(br, bi));
        let terms = [
            b * (b - 1.0) * hyp1f1(a, b - 1.0, z).unwrap(),
            b * (-b - z + 1.0) * hyp1f1(a, b, z).unwrap(),
            (b - a) * z * hyp1f1(a, b + 1.0, z).unwrap(),
        ];
        let scale: f64 = terms.iter().map(|v| v.norm()).sum();
        let sum: Complex64 = terms.iter().sum();
        prop_assert!(sum.norm() <= 1e-9 * scale.max(1e-300), "residual {}", sum.norm() / scale);
    }

    #[test]
    fn log_gamma_recurrence(re in -30.0..30.0f64, im in -30.0..30.0f64) {
        let z = c(re, im);
        prop_assume!(z.norm() > 0.1 && (z + 1.0).norm() > 0.1);
        let d = log_gamma(z + 1.0).unwrap() - log_gamma(z).unwrap() - z.ln();
        prop_assert!((d.exp() - 1.0).norm() < 1e-12 * (1.0 + log_gamma(z).unwrap().norm()));
    }

    #[test]
    fn laguerre_three_term(n in 1usize..30, alpha in 0.0..12.0f64, z in 0.0..40.0f64) {
        // (n+1) L_{n+1} = (2n+1+α-z) L_n - (n+α) L_{n-1}
        let nf = n as f64;
        let lhs = (nf + 1.0) * assoc_laguerre(n + 1, alpha, z);
        let a = (2.0 * nf + 1.0 + alpha - z) * assoc_laguerre(n, alpha, z);
        let b = (nf + alpha) * assoc_laguerre(n - 1, alpha, z);
        prop_assert!((lhs - a + b).abs() <= 1e-12 * (lhs.abs() + a.abs() + b.abs()).max(1.0));
    }
}
