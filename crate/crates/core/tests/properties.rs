use epikit_core::*;
use proptest::prelude::*;

fn state(s: f64, i: f64) -> State {
    State {
        tau: 0.0,
        s,
        i,
        r: 1.0 - s - i,
    }
}

proptest! {
    #[test]
    fn rhs_components_sum_to_zero(r0 in 0.1f64..10.0, s in 0.5f64..1.0, frac in 0.0f64..1.0) {
        let i = (1.0 - s) * frac;
        let p = ModelParams::idealized(r0).unwrap();
        let st = state(s, i);
        let d = sir_rhs(&st, &p);
        prop_assert!((d.ds + d.di + d.dr).abs() <= 1e-15);
        let d = modified_rhs(&st, &p).unwrap();
        prop_assert!((d.ds + d.di + d.dr).abs() <= 1e-15);
    }

    #[test]
    fn modified_effective_r_never_exceeds_sir(r0 in 0.1f64..10.0, s in 0.5f64..1.0) {
        let p = ModelParams::idealized(r0).unwrap();
        let m = effective_r(s, &p, ModelKind::ModifiedSir).unwrap();
        let r = effective_r(s, &p, ModelKind::Sir).unwrap();
        prop_assert!(m <= r);
        if s < 1.0 {
            prop_assert!(m < r);
        }
    }

    #[test]
    fn s_r_round_trip(r0 in 0.1f64..10.0, i0 in 0.0f64..0.5, frac in 0.01f64..1.0) {
        let p = ModelParams::new(r0, i0).unwrap();
        let s = p.s0() * frac;
        let r = r_of_s(s, &p).unwrap();
        prop_assert!((s_of_r(r, &p) - s).abs() <= 1e-12);
    }

    #[test]
    fn infected_positive_inside_orbit(r0 in 1.05f64..10.0, i0 in 1e-8f64..0.1, frac in 0.001f64..0.999) {
        let p = ModelParams::new(r0, i0).unwrap();
        let s_inf = final_size(&p, FinalSizeMethod::Bisection).unwrap().s_inf;
        let s = s_inf + frac * (p.s0() - s_inf);
        prop_assert!(i_of_s(s, &p).unwrap() > 0.0);
    }

    #[test]
    fn peak_inside_final_size(r0 in 1.01f64..20.0) {
        let p = ModelParams::idealized(r0).unwrap();
        let peak = peak_values(&p).unwrap();
        let end = final_size(&p, FinalSizeMethod::Bisection).unwrap();
        prop_assert!(end.s_inf < peak.s_star);
        prop_assert!(peak.r_star <= (-1.0f64).exp() + 1e-12);
        prop_assert!((peak.s_star + peak.i_star + peak.r_star - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn logistic_inverse(b in 0.1f64..5.0, t_star in -10.0f64..10.0, i in 0.001f64..0.999) {
        let sol = LogisticSolution::new(b, t_star).unwrap();
        let t = si_time_of_i(&sol, i).unwrap();
        prop_assert!((si_solution(&sol, t).0 - i).abs() <= 1e-12);
    }
}
