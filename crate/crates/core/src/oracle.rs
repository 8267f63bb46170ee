//! Independent numerical oracles.
//!
//! Each function here recomputes a quantity that the rest of the crate
//! obtains in closed form, using only the defining integral and the
//! space-time wave functions. None of them calls the closed form it checks.

use std::f64::consts::PI;

use crate::basis::{gauss_hermite, integrate_2d, phi, GaussianFrame, OscillatorIndex, SampledField2D, DEFAULT_ORDER};
use crate::boost::{boosted_density_frame, boosted_wf, Rapidity, SpaceTimePoint};
use crate::coupled::{coupled_ground_wf, SqueezeParameter};
use crate::error::Result;
use crate::phase_space::{wigner_full, MomentumPoint};

/// Frame for integrands `boosted_wf(eta) * exp(-(z^2 + t^2)/2) * polynomial`.
fn projection_frame(r: Rapidity) -> GaussianFrame {
    GaussianFrame::light_cone_for_exponents(
        0.5 * (1.0 + (-2.0 * r.eta()).exp()),
        0.5 * (1.0 + (2.0 * r.eta()).exp()),
    )
}

/// `int int |coupled_ground_wf|^2 dx1 dx2`.
pub fn coupled_normalization(s: SqueezeParameter) -> Result<f64> {
    let rule = gauss_hermite(DEFAULT_ORDER)?;
    let frame = GaussianFrame::light_cone_for_exponents((-2.0 * s.eta()).exp(), (2.0 * s.eta()).exp());
    integrate_2d(|x1, x2| coupled_ground_wf(s, x1, x2).powi(2), &rule, &frame)
}

/// `int int coupled_ground_wf(x1, x2) phi_j(x1) phi_k(x2) dx1 dx2`.
pub fn coupled_projection(s: SqueezeParameter, j: OscillatorIndex, k: OscillatorIndex) -> Result<f64> {
    let rule = gauss_hermite(DEFAULT_ORDER)?;
    let r = Rapidity::new(s.eta())?;
    integrate_2d(
        |x1, x2| coupled_ground_wf(s, x1, x2) * phi(j, x1) * phi(k, x2),
        &rule,
        &projection_frame(r),
    )
}

/// `int int boosted_wf(n, eta) phi_{kz}(z) phi_{kt}(t) dz dt`.
pub fn expansion_projection(n: OscillatorIndex, kz: OscillatorIndex, kt: OscillatorIndex, r: Rapidity) -> Result<f64> {
    let rule = gauss_hermite(DEFAULT_ORDER)?;
    integrate_2d(
        |z, t| boosted_wf(n, r, SpaceTimePoint::new(z, t)) * phi(kz, z) * phi(kt, t),
        &rule,
        &projection_frame(r),
    )
}

/// Reduced kernel by direct partial trace, `int boosted_wf(n)(z, t) boosted_wf(n)(z2, t) dt`.
pub fn partial_trace(n: OscillatorIndex, r: Rapidity, z: f64, z2: f64) -> Result<f64> {
    // In t the product is a polynomial times exp(-cosh(2 eta) (t - shift)^2).
    let rule = gauss_hermite(DEFAULT_ORDER)?;
    let c = (2.0 * r.eta()).cosh();
    let scale = c.sqrt().recip();
    let shift = 0.5 * (z + z2) * (2.0 * r.eta()).sinh() / c;
    Ok(rule.integrate_1d(scale, |t| {
        let t = t + shift;
        boosted_wf(n, r, SpaceTimePoint::new(z, t)) * boosted_wf(n, r, SpaceTimePoint::new(z2, t))
    }))
}

/// `int rho(z, z) dz` for a kernel whose diagonal decays like `exp(-z^2/width^2)`.
pub fn kernel_trace<F: Fn(f64, f64) -> f64>(kernel: F, width: f64, order: usize) -> Result<f64> {
    let rule = gauss_hermite(order)?;
    Ok(rule.integrate_1d(width, |z| kernel(z, z)))
}

/// `Tr rho^2 = int int rho(z, z') rho(z', z) dz dz'` for a kernel of the
/// boosted ground-state family with Gaussian scale `cosh 2eta`.
pub fn purity_double_integral<F: Fn(f64, f64) -> f64>(kernel: F, r: Rapidity, order: usize) -> Result<f64> {
    let rule = gauss_hermite(order)?;
    let c = (2.0 * r.eta()).cosh();
    let frame = GaussianFrame::light_cone(c.sqrt(), c.sqrt().recip());
    integrate_2d(|z, zp| kernel(z, zp) * kernel(zp, z), &rule, &frame)
}

/// Largest `|int rho(z, z'') rho(z'', z') dz'' - rho(z, z')|` over `grid x grid`.
pub fn idempotency_defect<F: Fn(f64, f64) -> f64>(kernel: F, width: f64, grid: &[f64]) -> Result<f64> {
    let rule = gauss_hermite(DEFAULT_ORDER)?;
    let mut worst = 0.0f64;
    for &z in grid {
        for &zp in grid {
            let square = rule.integrate_1d(width, |m| kernel(z, m) * kernel(m, zp));
            worst = worst.max((square - kernel(z, zp)).abs());
        }
    }
    Ok(worst)
}

/// Numerical transform `(1/2pi) int int psi_eta(z, t) e^{i(z p_z - t p_0)} dz dt`
/// of the boosted ground state, returned as `(re, im)`.
pub fn fourier_transform(r: Rapidity, m: MomentumPoint, order: usize) -> Result<(f64, f64)> {
    let rule = gauss_hermite(order)?;
    let frame = GaussianFrame::light_cone_for_exponents(0.5 * (-2.0 * r.eta()).exp(), 0.5 * (2.0 * r.eta()).exp());
    let psi = |z: f64, t: f64| boosted_wf(0, r, SpaceTimePoint::new(z, t));
    let re = integrate_2d(|z, t| psi(z, t) * (z * m.p_z - t * m.p_0).cos(), &rule, &frame)?;
    let im = integrate_2d(|z, t| psi(z, t) * (z * m.p_z - t * m.p_0).sin(), &rule, &frame)?;
    Ok((re / (2.0 * PI), im / (2.0 * PI)))
}

/// `<z^2>` of a normalized one-dimensional density with Gaussian width `width`.
pub fn second_moment_1d<F: Fn(f64) -> f64>(density: F, width: f64) -> Result<f64> {
    let rule = gauss_hermite(DEFAULT_ORDER)?;
    let norm = rule.integrate_1d(width, &density);
    Ok(rule.integrate_1d(width, |z| z * z * density(z)) / norm)
}

/// Light-cone frame of a squeezed ground-state Gaussian in either the
/// `(z, t)` or the `(p_z, p_0)` plane: wide along the first axis by `e^eta`.
fn wigner_frame(r: Rapidity) -> GaussianFrame {
    GaussianFrame::light_cone(r.eta().exp(), (-r.eta()).exp())
}

/// Direct four-dimensional tensor Gauss-Hermite integral of `wigner_full`.
pub fn wigner_4d_normalization(r: Rapidity, order: usize) -> Result<f64> {
    let rule = gauss_hermite(order)?;
    let frame = wigner_frame(r);
    let inner = |z: f64, t: f64| -> Result<f64> { integrate_2d(|pz, p0| wigner_full(r, z, pz, t, p0), &rule, &frame) };
    integrate_2d(|z, t| inner(z, t).unwrap_or(f64::NAN), &rule, &frame)
}

/// `int int W(z, p_z, t, p_0) dp_z dp_0` at a space-time point.
pub fn wigner_position_marginal(r: Rapidity, z: f64, t: f64) -> Result<f64> {
    let rule = gauss_hermite(DEFAULT_ORDER)?;
    integrate_2d(|pz, p0| wigner_full(r, z, pz, t, p0), &rule, &wigner_frame(r))
}

/// `int int W(z, p_z, t, p_0) dz dt` at a momentum point.
pub fn wigner_momentum_marginal(r: Rapidity, p_z: f64, p_0: f64) -> Result<f64> {
    let rule = gauss_hermite(DEFAULT_ORDER)?;
    integrate_2d(|z, t| wigner_full(r, z, p_z, t, p_0), &rule, &wigner_frame(r))
}

/// `int int W(z, p_z, t, p_0) dt dp_0`, nested along `t` and `p_0`.
///
/// At fixed `z` the integrand is Gaussian in `t` with curvature `cosh 2eta`
/// centred at `z tanh 2eta`, and likewise in `p_0`.
pub fn wigner_reduction(r: Rapidity, z: f64, p_z: f64) -> Result<f64> {
    let rule = gauss_hermite(DEFAULT_ORDER)?;
    let c = (2.0 * r.eta()).cosh();
    let th = (2.0 * r.eta()).tanh();
    let scale = c.sqrt().recip();
    let value = rule.integrate_1d(scale, |dt| {
        let t = z * th + dt;
        rule.integrate_1d(scale, |dp| wigner_full(r, z, p_z, t, p_z * th + dp))
    });
    if !value.is_finite() {
        return Err(crate::error::Error::NonFinite { z, t: p_z, value });
    }
    Ok(value)
}

/// Relative residual of `(1/2){[z^2 - d_z^2] - [t^2 - d_t^2]} psi = lambda psi`
/// for `boosted_wf(n, eta)` sampled on a square grid of spacing `h` over
/// `[-extent, extent]^2`, using five-point fourth-order second differences
/// between grid neighbours. The residual is normalized by `max |psi|`.
pub fn oscillator_equation_residual(n: OscillatorIndex, r: Rapidity, lambda: f64, extent: f64, h: f64) -> Result<f64> {
    let points = (2.0 * extent / h).round() as usize + 1;
    let field = SampledField2D::sample(
        |z, t| boosted_wf(n, r, SpaceTimePoint::new(z, t)),
        (-extent, extent),
        (-extent, extent),
        points,
        points,
    )?;
    let (hz, ht) = (field.dz(), field.dt());
    let mut worst = 0.0f64;
    for i in 2..points - 2 {
        let z = field.z(i);
        for j in 2..points - 2 {
            let t = field.t(j);
            let psi = field.get(i, j);
            let d_zz = (-field.get(i + 2, j) + 16.0 * field.get(i + 1, j) - 30.0 * psi + 16.0 * field.get(i - 1, j)
                - field.get(i - 2, j))
                / (12.0 * hz * hz);
            let d_tt = (-field.get(i, j + 2) + 16.0 * field.get(i, j + 1) - 30.0 * psi + 16.0 * field.get(i, j - 1)
                - field.get(i, j - 2))
                / (12.0 * ht * ht);
            let lhs = 0.5 * ((z * z * psi - d_zz) - (t * t * psi - d_tt));
            worst = worst.max((lhs - lambda * psi).abs());
        }
    }
    Ok(worst / field.max_abs())
}

/// Quadrature norm of `boosted_wf(n, eta)`, in the squeezed light-cone frame.
pub fn boosted_normalization(n: OscillatorIndex, r: Rapidity) -> Result<f64> {
    let rule = gauss_hermite(DEFAULT_ORDER)?;
    integrate_2d(
        |z, t| boosted_wf(n, r, SpaceTimePoint::new(z, t)).powi(2),
        &rule,
        &boosted_density_frame(r),
    )
}
