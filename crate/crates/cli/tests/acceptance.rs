//! One line per acceptance criterion, with the measured error and runtime.

use std::path::Path;
use std::process::Command;
use std::time::Instant;

use covosc::basis::{gauss_hermite, integrate_2d, overlap_1d, GaussianFrame};
use covosc::boost::overlap_rest_boosted;
use covosc::entanglement::{
    entropy_analytic, entropy_oracle, expansion_coefficient, purity, rapidity_of, reduced_density,
    reduced_density_ground, spatial_distribution, temperature_of, thermal_density, Temperature, Truncation,
};
use covosc::oracle;
use covosc::phase_space::{
    interaction_time_ratio, momentum_second_moment, momentum_wf, uncertainty_products, wigner_radius,
    wigner_radius_beta, wigner_reduced,
};
use covosc::verify;
use covosc::{MomentumPoint, Rapidity};

type Criterion = fn() -> (bool, String);

struct Line {
    id: u32,
    passed: bool,
    summary: String,
}

fn rap(eta: f64) -> Rapidity {
    Rapidity::new(eta).unwrap()
}

fn grid21() -> Vec<f64> {
    (0..21).map(|i| -3.0 + 0.3 * i as f64).collect()
}

fn criterion_1() -> (bool, String) {
    let mut worst = 0.0f64;
    for m in 0..=20 {
        for n in 0..=20 {
            let delta = if m == n { 1.0 } else { 0.0 };
            worst = worst.max((overlap_1d(m, n) - delta).abs());
        }
    }
    (
        worst <= 1e-10,
        format!("max |<phi_m|phi_n> - d_mn| = {worst:.2e} (tol 1e-10)"),
    )
}

fn criterion_2() -> (bool, String) {
    let (mut printed, mut off, mut half_more) = (0.0f64, 0.0f64, 0.0f64);
    for beta in [0.2, 0.5, 0.8] {
        let r = Rapidity::from_beta(beta).unwrap();
        let one_minus = 1.0 - beta * beta;
        for n in 0..=4u32 {
            for m in 0..=4u32 {
                let o = overlap_rest_boosted(n, m, r).unwrap();
                if n == m {
                    printed = printed.max((o - one_minus.powf(n as f64 / 2.0)).abs());
                    half_more = half_more.max((o - one_minus.powf((n as f64 + 1.0) / 2.0)).abs());
                } else {
                    off = off.max(o.abs());
                }
            }
        }
    }
    (
        printed <= 1e-8 && off <= 1e-8,
        format!(
            "diagonal vs (1-b^2)^(n/2): {printed:.2e}; off-diagonal {off:.2e} (tol 1e-8); \
             diagonal vs (1-b^2)^((n+1)/2): {half_more:.2e}"
        ),
    )
}

fn criterion_3() -> (bool, String) {
    let mut worst = 0.0f64;
    for n in 0..=2u32 {
        for k in 0..=8u32 {
            for eta in [0.25, 0.5, 1.0, 1.5] {
                let r = rap(eta);
                let projection = oracle::expansion_projection(n, n + k, k, r).unwrap();
                worst = worst.max((projection - expansion_coefficient(n, k, r)).abs());
            }
        }
    }
    let documented = verify::ledger_entries()
        .iter()
        .any(|e| e.adopted.contains("phi_k(t)") && e.printed.contains("phi_n(t)"));
    (
        worst <= 1e-8 && documented,
        format!(
            "max |coefficient - projection| = {worst:.2e} (tol 1e-8); time-index resolution in report: {documented}"
        ),
    )
}

fn criterion_4() -> (bool, String) {
    let mut worst = 0.0f64;
    let mut ok = true;
    for n in 0..=2u32 {
        for eta in [0.25, 0.5, 1.0, 2.0] {
            worst = worst.max((entropy_analytic(n, rap(eta)) - entropy_oracle(n, rap(eta))).abs());
        }
        ok &= entropy_analytic(n, Rapidity::REST) == 0.0;
        let s: Vec<f64> = [0.0, 0.25, 0.5, 1.0, 2.0]
            .iter()
            .map(|&e| entropy_analytic(n, rap(e)))
            .collect();
        ok &= s.windows(2).all(|w| w[1] > w[0]);
    }
    (
        worst <= 1e-9 && ok,
        format!("max |S_closed - S_sum| = {worst:.2e} (tol 1e-9); S(0) = 0 and increasing: {ok}"),
    )
}

fn criterion_5() -> (bool, String) {
    let grid = grid21();
    let mut worst = 0.0f64;
    for eta in [0.5, 1.0, 2.0] {
        let r = rap(eta);
        let t = temperature_of(r);
        for &z in &grid {
            for &z2 in &grid {
                let reduced = reduced_density(0, r, z, z2, Truncation::Auto).unwrap();
                worst = worst.max((thermal_density(t, z, z2) - reduced).abs());
            }
        }
    }
    let mut round = 0.0f64;
    for t in [0.1, 0.5, 1.0, 2.0, 5.0] {
        let r = rapidity_of(Temperature::new(t).unwrap());
        round = round.max((r.beta().powi(2) - (-1.0 / t).exp()).abs());
    }
    for eta in [0.5, 1.0, 2.0] {
        let r = rap(eta);
        round = round.max((r.beta().powi(2) - (-1.0 / temperature_of(r).value()).exp()).abs());
    }
    (
        worst <= 1e-9 && round <= 1e-12,
        format!("max kernel deviation = {worst:.2e} (tol 1e-9); map round trip = {round:.2e} (tol 1e-12)"),
    )
}

fn criterion_6() -> (bool, String) {
    let rest = purity(0, Rapidity::REST);
    let mut worst = 0.0f64;
    let mut below = true;
    for eta in [0.25, 0.5, 1.0, 2.0] {
        let r = rap(eta);
        let closed = 1.0 / (2.0 * eta).cosh();
        let series = purity(0, r);
        let kernel = |z: f64, z2: f64| reduced_density(0, r, z, z2, Truncation::Auto).unwrap();
        let direct = oracle::purity_double_integral(kernel, r, 48).unwrap();
        let closed_kernel = oracle::purity_double_integral(|z, z2| reduced_density_ground(r, z, z2), r, 48).unwrap();
        for v in [series, direct, closed_kernel] {
            worst = worst.max((v - closed).abs());
        }
        below &= series < 1.0;
    }
    (
        rest == 1.0 && worst <= 1e-8 && below,
        format!("Tr rho^2 at rest = {rest}; max deviation from 1/cosh 2eta = {worst:.2e} (tol 1e-8); < 1 in motion: {below}"),
    )
}

fn criterion_7() -> (bool, String) {
    let axis: Vec<f64> = (0..17).map(|i| -2.0 + 0.25 * i as f64).collect();
    let mut fourier = 0.0f64;
    for eta in [0.0, 0.5, 1.0, 1.5] {
        let r = rap(eta);
        for &pz in &axis {
            for &p0 in &axis {
                let m = MomentumPoint::new(pz, p0);
                let (re, im) = oracle::fourier_transform(r, m, 96).unwrap();
                fourier = fourier.max((re - momentum_wf(r, m)).abs()).max(im.abs());
            }
        }
    }
    let mut widths = 0.0f64;
    for eta in [0.5, 1.0, 2.0] {
        let r = rap(eta);
        let expected = (2.0 * eta).cosh().sqrt();
        let z2 = oracle::second_moment_1d(|z| spatial_distribution(r, z), expected).unwrap();
        let p2 = momentum_second_moment(r).unwrap();
        // Rest-frame second moments are 1/2.
        widths = widths
            .max(((2.0 * z2).sqrt() - expected).abs())
            .max(((2.0 * p2).sqrt() - expected).abs());
    }
    (
        fourier <= 1e-7 && widths <= 1e-10,
        format!("max transform deviation = {fourier:.2e} (tol 1e-7); width deviation = {widths:.2e}"),
    )
}

fn criterion_8() -> (bool, String) {
    let mut worst = 0.0f64;
    for eta in [0.0, 0.5, 1.0, 2.0] {
        let (a, b) = uncertainty_products(rap(eta)).unwrap();
        worst = worst.max((a - 0.25).abs()).max((b - 0.25).abs());
    }
    (worst <= 1e-8, format!("max |product - 1/4| = {worst:.2e} (tol 1e-8)"))
}

fn criterion_9() -> (bool, String) {
    let mut full = 0.0f64;
    for eta in [0.0, 0.5, 1.0] {
        full = full.max((oracle::wigner_4d_normalization(rap(eta), 24).unwrap() - 1.0).abs());
    }
    let rule = gauss_hermite(64).unwrap();
    let mut reduced = 0.0f64;
    for eta in [0.5, 1.0, 2.0] {
        let r = rap(eta);
        let radius = wigner_radius(r);
        let frame = GaussianFrame::cartesian(radius, radius);
        let norm = integrate_2d(|z, p| wigner_reduced(r, z, p), &rule, &frame).unwrap();
        let fold = wigner_reduced(r, radius, 0.0) / wigner_reduced(r, 0.0, 0.0);
        reduced = reduced
            .max((norm - 1.0).abs())
            .max((fold - (-1.0f64).exp()).abs())
            .max((radius - (2.0 * eta).cosh().sqrt()).abs());
    }
    let beta_form = (wigner_radius_beta(0.6).unwrap() - 2.125f64.sqrt()).abs();
    (
        full <= 1e-7 && reduced <= 1e-10 && beta_form <= 1e-10,
        format!("|int W - 1| = {full:.2e} (tol 1e-7); reduced = {reduced:.2e} (tol 1e-10); radius at b = 0.6 off by {beta_form:.2e}"),
    )
}

fn criterion_10() -> (bool, String) {
    let ratio = interaction_time_ratio(4000.0).unwrap();
    (
        (1.55e-8..=1.65e-8).contains(&ratio),
        format!("e^(-2eta) at gamma = 4000: {ratio:.4e}"),
    )
}

fn criterion_11() -> (bool, String) {
    let mut worst = 0.0f64;
    for n in 0..=2u32 {
        for eta in [0.0, 0.5, 1.0] {
            worst = worst.max(oracle::oscillator_equation_residual(n, rap(eta), n as f64, 4.0, 0.01).unwrap());
        }
    }
    (worst <= 1e-4, format!("max relative residual = {worst:.2e} (tol 1e-4)"))
}

fn criterion_12() -> (bool, String) {
    let bin = env!("CARGO_BIN_EXE_covosc");
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let mut matched = Vec::new();
    for scan in ["scan-temperature", "scan-observables"] {
        let out = Command::new(bin)
            .args([scan, "--eta-min", "0", "--eta-max", "3", "--steps", "61"])
            .env("SOURCE_DATE_EPOCH", "0")
            .output()
            .unwrap();
        let expected = std::fs::read(golden.join(format!("{scan}.csv"))).unwrap();
        matched.push(out.status.success() && out.stdout == expected);
    }
    let start = Instant::now();
    let status = Command::new(bin).args(["verify", "--quiet"]).output().unwrap().status;
    let secs = start.elapsed().as_secs_f64();
    let ok = matched.iter().all(|&m| m) && status.code() == Some(0) && secs < 120.0;
    (
        ok,
        format!(
            "golden byte match {matched:?}; verify exit {:?} in {secs:.1} s (limit 120 s)",
            status.code()
        ),
    )
}

/// Criteria whose stated target contradicts the computed result, so they fail
/// honestly and are reported as such.
const EXPECTED_FAILURES: &[u32] = &[2];

fn main() {
    let criteria: [(u32, Criterion); 12] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
        (11, criterion_11),
        (12, criterion_12),
    ];
    let mut lines = Vec::new();
    for (id, run) in criteria {
        let start = Instant::now();
        let (passed, detail) = run();
        let line = Line {
            id,
            passed,
            summary: format!("{detail}; {:.2} s", start.elapsed().as_secs_f64()),
        };
        println!(
            "criterion {:>2}: {} {}",
            line.id,
            if line.passed { "PASS" } else { "FAIL" },
            line.summary
        );
        lines.push(line);
    }
    let failed: Vec<u32> = lines.iter().filter(|l| !l.passed).map(|l| l.id).collect();
    println!("failed: {failed:?} (expected {EXPECTED_FAILURES:?})");
    if failed != EXPECTED_FAILURES {
        eprintln!("unexpected acceptance outcome");
        std::process::exit(1);
    }
}
