//! Lorentz-covariant oscillator in the longitudinal `(z, t)` plane.
//!
//! A boost along `z` acts on the light-cone coordinates as a squeeze,
//! `u -> e^eta u`, `v -> e^-eta v`, and the boosted wave function is the
//! rest-frame one evaluated at the boosted-back point.

use std::f64::consts::FRAC_1_SQRT_2;

use crate::basis::{integrate_2d_converged, phi, GaussianFrame, OscillatorIndex, DEFAULT_ORDER};
use crate::error::{Error, Result};

/// Boost rapidity; the velocity is `beta = tanh(eta)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Rapidity(f64);

impl Rapidity {
    pub const REST: Rapidity = Rapidity(0.0);

    pub fn new(eta: f64) -> Result<Self> {
        if !eta.is_finite() {
            return Err(Error::Domain(format!("rapidity must be finite, got {eta}")));
        }
        Ok(Rapidity(eta))
    }

    /// Rapidity of a boost with velocity `beta` (in units of `c`).
    pub fn from_beta(beta: f64) -> Result<Self> {
        if beta.is_nan() || beta.abs() >= 1.0 {
            return Err(Error::Domain(format!("velocity must satisfy |beta| < 1, got {beta}")));
        }
        Ok(Rapidity(beta.atanh()))
    }

    pub fn eta(self) -> f64 {
        self.0
    }

    pub fn beta(self) -> f64 {
        self.0.tanh()
    }

    /// Lorentz factor `cosh(eta)`.
    pub fn gamma(self) -> f64 {
        self.0.cosh()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpaceTimePoint {
    pub z: f64,
    pub t: f64,
}

impl SpaceTimePoint {
    pub fn new(z: f64, t: f64) -> Self {
        SpaceTimePoint { z, t }
    }

    /// `z^2 - t^2`.
    pub fn interval(self) -> f64 {
        (self.z - self.t) * (self.z + self.t)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LightConePoint {
    pub u: f64,
    pub v: f64,
}

impl LightConePoint {
    pub fn to_space_time(self) -> SpaceTimePoint {
        SpaceTimePoint {
            z: (self.u + self.v) * FRAC_1_SQRT_2,
            t: (self.u - self.v) * FRAC_1_SQRT_2,
        }
    }
}

pub fn boost_zt(p: SpaceTimePoint, r: Rapidity) -> SpaceTimePoint {
    let (sh, ch) = (r.0.sinh(), r.0.cosh());
    SpaceTimePoint {
        z: p.z * ch + p.t * sh,
        t: p.z * sh + p.t * ch,
    }
}

pub fn to_light_cone(p: SpaceTimePoint) -> LightConePoint {
    LightConePoint {
        u: (p.z + p.t) * FRAC_1_SQRT_2,
        v: (p.z - p.t) * FRAC_1_SQRT_2,
    }
}

/// Rest-frame wave function `phi_n(z) phi_0(t)`: excitations along `z` only,
/// none along the time separation.
pub fn rest_wf(n: OscillatorIndex, p: SpaceTimePoint) -> f64 {
    phi(n, p.z) * phi(0, p.t)
}

/// Boosted wave function
/// `[1/(pi n! 2^n)]^1/2 H_n((e^-eta u + e^eta v)/sqrt2) exp{-(e^-2eta u^2 + e^2eta v^2)/2}`.
pub fn boosted_wf(n: OscillatorIndex, r: Rapidity, p: SpaceTimePoint) -> f64 {
    let lc = to_light_cone(p);
    let back = LightConePoint {
        u: (-r.0).exp() * lc.u,
        v: r.0.exp() * lc.v,
    }
    .to_space_time();
    rest_wf(n, back)
}

/// Frame whose Gaussian matches `rest_wf * boosted_wf` for rapidity `r`.
fn overlap_frame(r: Rapidity) -> GaussianFrame {
    GaussianFrame::light_cone_for_exponents(0.5 * (1.0 + (-2.0 * r.0).exp()), 0.5 * (1.0 + (2.0 * r.0).exp()))
}

/// Frame whose Gaussian matches `|boosted_wf|^2`.
pub fn boosted_density_frame(r: Rapidity) -> GaussianFrame {
    GaussianFrame::light_cone_for_exponents((-2.0 * r.0).exp(), (2.0 * r.0).exp())
}

/// Quadrature value of `int int rest_wf(n) boosted_wf(m, eta) dz dt`.
///
/// The closed-form expectation is `(1 - beta^2)^((n+1)/2) delta_nm`.
pub fn overlap_rest_boosted(n: OscillatorIndex, m: OscillatorIndex, r: Rapidity) -> Result<f64> {
    if n > 10 || m > 10 {
        return Err(Error::Domain(format!("overlap defined for n, m <= 10, got ({n}, {m})")));
    }
    integrate_2d_converged(
        |z, t| {
            let p = SpaceTimePoint::new(z, t);
            rest_wf(n, p) * boosted_wf(m, r, p)
        },
        &overlap_frame(r),
        DEFAULT_ORDER,
        1e-12,
    )
}

/// `(1 - beta^2)^((n+1)/2)`, the diagonal of the rest/boosted overlap.
///
/// The extra half power comes from the untouched time Gaussian: already for
/// `n = 0` the overlap of the two Gaussians is `1/cosh(eta)`.
pub fn contraction_factor(n: OscillatorIndex, r: Rapidity) -> f64 {
    r.gamma().recip().powi(n as i32 + 1)
}

/// The boost-invariant but non-normalizable Gaussian `exp{-(z^2 - t^2)/2}`.
pub fn gaussian_invariant_form(p: SpaceTimePoint) -> f64 {
    (-0.5 * p.interval()).exp()
}
