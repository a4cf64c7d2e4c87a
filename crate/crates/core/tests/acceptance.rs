//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.

use std::process::ExitCode;

use hermite_asymptotics::charlier_asym::{f_airy_edge, f_outer, EdgeSide, OuterSide};
use hermite_asymptotics::exactpoly::{
    charlier_exact_sum, hermite_exact_sum, hermite_recurrence_log, hermite_zeros_exact, CharlierPoint, HermitePoint,
};
use hermite_asymptotics::hermite_asym::{
    lambda_airy, lambda_osc_complex_pair, lambda_oscillatory, lambda_outer, pair_sum, Side,
};
use hermite_asymptotics::specfun::{airy_ai, bessel_j};
use hermite_asymptotics::zeros::{kepler_newton, tau_estimates, zero_estimates, KapteynOptions, KeplerProblem, Method};
use hermite_asymptotics::{Fidelity, SignedLogReal};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn exact_h(n: u32, xi: f64) -> SignedLogReal {
    hermite_exact_sum(HermitePoint::new(n, xi).unwrap()).unwrap()
}

fn exact_c(n: u32, a: f64, x: f64) -> SignedLogReal {
    charlier_exact_sum(CharlierPoint::new(n, a, x).unwrap()).unwrap()
}

fn strictly_decreasing(v: &[f64]) -> bool {
    v.windows(2).all(|w| w[1] < w[0])
}

fn bit_equal(a: SignedLogReal, b: SignedLogReal) -> bool {
    a.sign() == b.sign() && a.log_abs().to_bits() == b.log_abs().to_bits()
}

fn parity(n: u32) -> SignedLogReal {
    SignedLogReal::new(if n % 2 == 0 { 1 } else { -1 }, 0.0)
}

fn fmt_errs(v: &[f64]) -> String {
    v.iter().map(|e| format!("{e:.3e}")).collect::<Vec<_>>().join(", ")
}

const DEGREES: [u32; 4] = [10, 20, 40, 80];

fn oracle_self_consistency() -> Outcome {
    let mut worst = 0.0f64;
    for n in 0..=50 {
        for i in 0..41 {
            let xi = -10.0 + 0.5 * f64::from(i);
            let p = HermitePoint::new(n, xi).unwrap();
            let rec = hermite_recurrence_log(p).unwrap();
            worst = worst.max(rec.rel_err(hermite_exact_sum(p).unwrap()));
        }
    }
    outcome(worst <= 1e-10, format!("worst relative gap {worst:.3e} (limit 1e-10)"))
}

fn outer_regions() -> Outcome {
    let errs: Vec<f64> = DEGREES
        .iter()
        .map(|&n| {
            let xi = 1.5 * (2.0 * f64::from(n)).sqrt();
            lambda_outer(n, xi, Side::Right).unwrap().rel_err(exact_h(n, xi))
        })
        .collect();
    let mut symmetric = true;
    for n in 0..=60u32 {
        for k in 0..5 {
            let xi = (2.0 * f64::from(n)).sqrt() * (1.001 + 0.37 * f64::from(k)) + 0.01;
            let left = lambda_outer(n, -xi, Side::Left).unwrap();
            let right = lambda_outer(n, xi, Side::Right).unwrap();
            symmetric &= bit_equal(left, parity(n) * right);
        }
    }
    let pass = strictly_decreasing(&errs) && errs[3] <= 2e-2 && symmetric;
    outcome(pass, format!("errors [{}] at n = 10, 20, 40, 80; mirror bit-exact: {symmetric}", fmt_errs(&errs)))
}

fn oscillatory_region() -> Outcome {
    let errs: Vec<f64> = DEGREES
        .iter()
        .map(|&n| {
            let xi = 0.3 * (2.0 * f64::from(n)).sqrt();
            lambda_oscillatory(n, xi).unwrap().rel_err(exact_h(n, xi))
        })
        .collect();
    let spot = lambda_oscillatory(2, 0.0).unwrap();
    let spot_err = spot.rel_err(exact_h(2, 0.0));
    let monotone = strictly_decreasing(&errs);
    let pass = monotone && spot_err <= 5e-2;
    outcome(
        pass,
        format!(
            "errors [{}] at n = 10, 20, 40, 80 (monotone: {monotone}); spot (2, 0) = {:.4} vs -2, error {spot_err:.3e}",
            fmt_errs(&errs),
            spot.to_f64_lossy()
        ),
    )
}

fn complex_real_identity() -> Outcome {
    let mut worst = 0.0f64;
    let mut count = 0;
    for n in [5u32, 20, 100] {
        let r = (2.0 * f64::from(n)).sqrt();
        for i in 0..100 {
            let xi = r * (-0.995 + 1.99 * f64::from(i) / 99.0);
            let pair = lambda_osc_complex_pair(n, xi).unwrap();
            worst = worst.max(pair_sum(pair).rel_err(lambda_oscillatory(n, xi).unwrap()));
            count += 1;
        }
    }
    outcome(worst <= 1e-12, format!("worst relative gap {worst:.3e} over {count} points (limit 1e-12)"))
}

fn airy_regions() -> Outcome {
    let errs: Vec<f64> = [4u32, 16, 64]
        .iter()
        .map(|&n| {
            let xi = (2.0 * f64::from(n)).sqrt();
            lambda_airy(n, xi, Side::Right, Fidelity::Corrected).unwrap().rel_err(exact_h(n, xi))
        })
        .collect();
    let mut symmetric = true;
    for n in 1..=60u32 {
        for k in -3..=3 {
            let xi = (2.0 * f64::from(n)).sqrt() + 0.21 * f64::from(k);
            let left = lambda_airy(n, -xi, Side::Left, Fidelity::Corrected).unwrap();
            let right = lambda_airy(n, xi, Side::Right, Fidelity::Corrected).unwrap();
            symmetric &= bit_equal(left, parity(n) * right);
        }
    }
    let xi = 8f64.sqrt();
    let printed = lambda_airy(4, xi, Side::Right, Fidelity::AsPrinted).unwrap().rel_err(exact_h(4, xi));
    let pass = errs[0] <= 0.25 && strictly_decreasing(&errs) && symmetric && printed > 0.9;
    outcome(
        pass,
        format!(
            "errors [{}] at n = 4, 16, 64; mirror bit-exact: {symmetric}; as-printed error {printed:.4}",
            fmt_errs(&errs)
        ),
    )
}

fn charlier_corrections() -> Outcome {
    let p = |n, a, x| CharlierPoint::new(n, a, x).unwrap();
    let f3 = f_outer(p(1, 100.0, 40.0), OuterSide::Below, Fidelity::Corrected).unwrap();
    let f3_err = (f3.to_f64_lossy() - 0.6).abs() / 0.6;
    let f4 = f_outer(p(1, 100.0, 200.0), OuterSide::Above, Fidelity::Corrected).unwrap();
    let f4_err = (f4.to_f64_lossy() + 1.0).abs();
    let edge = f_airy_edge(p(4, 100.0, 144.0), EdgeSide::Plus, Fidelity::Corrected).unwrap();
    let edge_exact = exact_c(4, 100.0, 144.0);
    let edge_err = edge.rel_err(edge_exact);
    let mut unit_at_origin = true;
    for (n, a) in [(1u32, 2.0), (1, 100.0), (5, 30.0), (20, 100.0), (39, 40.0), (100, 1000.0)] {
        let v = f_outer(p(n, a, 0.0), OuterSide::Below, Fidelity::Corrected).unwrap();
        unit_at_origin &= v == SignedLogReal::ONE;
    }
    let pass = f3_err <= 0.01 && f4_err <= 0.005 && edge_err <= 0.25 && unit_at_origin;
    outcome(
        pass,
        format!(
            "F3 {:.6} ({f3_err:.2e}); F4 {:.6} ({f4_err:.2e}); edge {:.6} vs exact {:.8} ({edge_err:.4}); F3(0) = 1: {unit_at_origin}",
            f3.to_f64_lossy(),
            f4.to_f64_lossy(),
            edge.to_f64_lossy(),
            edge_exact.to_f64_lossy()
        ),
    )
}

fn limit_relation() -> Outcome {
    let (n, xi) = (6u32, 0.7);
    let h = exact_h(n, xi);
    let errs: Vec<f64> = [1e2, 1e4, 1e6]
        .iter()
        .map(|&a: &f64| {
            let c = exact_c(n, a, a + xi * (2.0 * a).sqrt());
            let scaled = parity(n) * SignedLogReal::from_log(0.5 * f64::from(n) * (2.0 * a).ln()) * c;
            scaled.sub(h).abs().to_f64_lossy()
        })
        .collect();
    let ratios: Vec<f64> = errs.windows(2).map(|w| w[0] / w[1]).collect();
    let pass = strictly_decreasing(&errs) && ratios.iter().all(|r| (3.0..=30.0).contains(r));
    outcome(pass, format!("errors [{}]; ratios [{}]", fmt_errs(&errs), fmt_errs(&ratios)))
}

fn kepler_machinery() -> Outcome {
    let mut worst_residual = 0.0f64;
    for n in [1u32, 2, 5, 10, 50, 100, 500] {
        for j in 1..=n {
            let prob = KeplerProblem::for_zero(n, j);
            let e = kepler_newton(prob.mean_anomaly, prob.eps).unwrap();
            worst_residual = worst_residual.max(prob.residual(e).abs());
        }
    }
    let mut worst_gap = 0.0f64;
    for n in [1u32, 5, 10, 50] {
        let opts = KapteynOptions::for_degree(n);
        let newton = tau_estimates(n, Method::Newton, &opts).unwrap();
        let kapteyn = tau_estimates(n, Method::Kapteyn, &opts).unwrap();
        for (a, b) in newton.iter().zip(&kapteyn) {
            worst_gap = worst_gap.max((a - b).abs());
        }
    }
    let opts = KapteynOptions::for_degree(1);
    let mut trivial = true;
    for method in [Method::Newton, Method::Kapteyn] {
        let z = &zero_estimates(1, method, &opts, false).unwrap()[0];
        trivial &= z.tau == 0.0 && z.zeta == 0.0;
    }
    let pass = worst_residual <= 1e-13 && worst_gap <= 1e-9 && trivial;
    outcome(
        pass,
        format!("Newton residual {worst_residual:.2e}; Kapteyn-Newton gap {worst_gap:.2e}; n = 1 exact zero: {trivial}"),
    )
}

fn max_zero_error(n: u32) -> f64 {
    let opts = KapteynOptions::for_degree(n);
    zero_estimates(n, Method::Newton, &opts, true)
        .unwrap()
        .iter()
        .map(|z| (z.zeta - z.exact_zeta.unwrap()).abs())
        .fold(0.0, f64::max)
}

fn zeros_accuracy() -> Outcome {
    let (e16, e20, e64) = (max_zero_error(16), max_zero_error(20), max_zero_error(64));
    let mut shape_ok = true;
    for n in 1..=100u32 {
        let opts = KapteynOptions::for_degree(n);
        let z: Vec<f64> = zero_estimates(n, Method::Newton, &opts, false).unwrap().iter().map(|z| z.zeta).collect();
        shape_ok &= z.windows(2).all(|w| w[0] > w[1]);
        shape_ok &= (0..z.len()).all(|j| (z[j] + z[z.len() - 1 - j]).abs() <= 1e-10);
    }
    let true_zeros_ok = hermite_zeros_exact(20).unwrap().len() == 20;
    let pass = e20 <= 0.05 && e64 < e16 && shape_ok && true_zeros_ok;
    outcome(
        pass,
        format!("max error n=16 {e16:.3e}, n=20 {e20:.3e}, n=64 {e64:.3e}; ordered and antisymmetric to n = 100: {shape_ok}"),
    )
}

fn kernels() -> Outcome {
    let h = 1e-3;
    let mut airy_worst = 0.0f64;
    for i in 0..=1000 {
        let z = -5.0 + 0.01 * f64::from(i);
        let second = (airy_ai(z + h).unwrap() - 2.0 * airy_ai(z).unwrap() + airy_ai(z - h).unwrap()) / (h * h);
        airy_worst = airy_worst.max((second - z * airy_ai(z).unwrap()).abs());
    }
    let mut rec_worst = 0.0f64;
    for k in (1..=100).step_by(3) {
        for i in 0..=60 {
            let x = 0.1 + (50.0 - 0.1) * f64::from(i) / 60.0;
            let j = |m: i64| bessel_j(m, x).unwrap();
            rec_worst = rec_worst.max((j(k - 1) + j(k + 1) - 2.0 * k as f64 / x * j(k)).abs());
        }
    }
    let mut norm_worst = 0.0f64;
    for i in 0..=200 {
        let x = 0.1 * f64::from(i);
        let sum: f64 = (1..=60).map(|k| bessel_j(2 * k, x).unwrap()).sum();
        norm_worst = norm_worst.max((bessel_j(0, x).unwrap() + 2.0 * sum - 1.0).abs());
    }
    let pass = airy_worst <= 1e-4 && rec_worst <= 1e-10 && norm_worst <= 1e-10;
    outcome(
        pass,
        format!("Airy ODE {airy_worst:.2e}; Bessel recurrence {rec_worst:.2e}; normalization {norm_worst:.2e}"),
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("oracle self-consistency", oracle_self_consistency),
        ("outer regions II/III", outer_regions),
        ("oscillatory region VI", oscillatory_region),
        ("complex/real identity", complex_real_identity),
        ("Airy regions IV/V", airy_regions),
        ("corrected Charlier formulas", charlier_corrections),
        ("Charlier-to-Hermite limit", limit_relation),
        ("Kepler machinery", kepler_machinery),
        ("zeros accuracy", zeros_accuracy),
        ("special-function kernels", kernels),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let o = check();
        println!("{} {:>2} {name}: {}", if o.pass { "PASS" } else { "FAIL" }, i + 1, o.detail);
        if !o.pass {
            failed.push(i + 1);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all {} criteria pass", criteria.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        ExitCode::FAILURE
    }
}
