//! Momentum-energy and Wigner phase-space pictures of the boosted ground state.
//!
//! The momentum-energy wave function is the transform
//! `(1/2pi) int psi(z, t) exp{i(z p_z - t p_0)} dz dt`. With that kernel the
//! phase reads `-u p_u + v p_v`, so `p_u` is conjugate to `u` and `p_v` to
//! `v`; the Gaussian therefore carries `e^{2eta}` on `p_u^2` and `e^{-2eta}`
//! on `p_v^2`. A boost sends `p_u -> e^-eta p_u` and `p_v -> e^eta p_v`.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use crate::basis::{gauss_hermite, integrate_2d, GaussianFrame, DEFAULT_ORDER};
use crate::boost::{boosted_density_frame, boosted_wf, to_light_cone, Rapidity, SpaceTimePoint};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentumPoint {
    pub p_z: f64,
    pub p_0: f64,
}

impl MomentumPoint {
    pub fn new(p_z: f64, p_0: f64) -> Self {
        MomentumPoint { p_z, p_0 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LightConeMomenta {
    pub p_u: f64,
    pub p_v: f64,
}

impl LightConeMomenta {
    pub fn from_momentum(m: MomentumPoint) -> Self {
        LightConeMomenta {
            p_u: (m.p_0 - m.p_z) * FRAC_1_SQRT_2,
            p_v: (m.p_0 + m.p_z) * FRAC_1_SQRT_2,
        }
    }

    pub fn to_momentum(self) -> MomentumPoint {
        MomentumPoint {
            p_z: (self.p_v - self.p_u) * FRAC_1_SQRT_2,
            p_0: (self.p_v + self.p_u) * FRAC_1_SQRT_2,
        }
    }

    pub fn boost(self, r: Rapidity) -> Self {
        LightConeMomenta {
            p_u: (-r.eta()).exp() * self.p_u,
            p_v: r.eta().exp() * self.p_v,
        }
    }
}

/// Which light-cone momentum receives the `e^{+2eta}` exponent weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExponentAssignment {
    /// `e^{2eta} p_u^2 + e^{-2eta} p_v^2`, the transform of the boosted state.
    #[default]
    Transform,
    /// `e^{-2eta} p_u^2 + e^{2eta} p_v^2`, the opposite pairing.
    Swapped,
}

/// Ground-state momentum-energy wave function
/// `pi^-1/2 exp{-[e^{2eta} p_u^2 + e^{-2eta} p_v^2] / 2}`.
pub fn momentum_wf(r: Rapidity, m: MomentumPoint) -> f64 {
    momentum_wf_with(ExponentAssignment::Transform, r, m)
}

pub fn momentum_wf_with(assignment: ExponentAssignment, r: Rapidity, m: MomentumPoint) -> f64 {
    let lc = LightConeMomenta::from_momentum(m);
    let (a, b) = match assignment {
        ExponentAssignment::Transform => ((2.0 * r.eta()).exp(), (-2.0 * r.eta()).exp()),
        ExponentAssignment::Swapped => ((-2.0 * r.eta()).exp(), (2.0 * r.eta()).exp()),
    };
    (-0.5 * (a * lc.p_u * lc.p_u + b * lc.p_v * lc.p_v)).exp() / PI.sqrt()
}

/// Frame whose Gaussian matches `|momentum_wf|^2` (axes `p_v`, `-p_u`
/// map onto the light-cone axes `u`, `v` of the frame).
fn momentum_density_frame(r: Rapidity) -> GaussianFrame {
    // With (a, b) = ((p_z + p_0)/sqrt2, (p_z - p_0)/sqrt2): a = p_v, b = -p_u.
    GaussianFrame::light_cone_for_exponents((-2.0 * r.eta()).exp(), (2.0 * r.eta()).exp())
}

/// Conjugate second-moment products `(<u^2><p_u^2>, <v^2><p_v^2>)` of the
/// boosted ground state, each moment taken by quadrature over the
/// normalized density.
pub fn uncertainty_products(r: Rapidity) -> Result<(f64, f64)> {
    let rule = gauss_hermite(DEFAULT_ORDER)?;
    let space = boosted_density_frame(r);
    let momentum = momentum_density_frame(r);
    let density = |z: f64, t: f64| boosted_wf(0, r, SpaceTimePoint::new(z, t)).powi(2);
    let space_moment = |g: &dyn Fn(f64, f64) -> f64| -> Result<f64> {
        let norm = integrate_2d(density, &rule, &space)?;
        Ok(integrate_2d(|z, t| g(z, t) * density(z, t), &rule, &space)? / norm)
    };
    let mdensity = |pz: f64, p0: f64| momentum_wf(r, MomentumPoint::new(pz, p0)).powi(2);
    let momentum_moment = |g: &dyn Fn(f64, f64) -> f64| -> Result<f64> {
        let norm = integrate_2d(mdensity, &rule, &momentum)?;
        Ok(integrate_2d(|pz, p0| g(pz, p0) * mdensity(pz, p0), &rule, &momentum)? / norm)
    };
    let u2 = space_moment(&|z, t| to_light_cone(SpaceTimePoint::new(z, t)).u.powi(2))?;
    let v2 = space_moment(&|z, t| to_light_cone(SpaceTimePoint::new(z, t)).v.powi(2))?;
    let pu2 = momentum_moment(&|pz, p0| LightConeMomenta::from_momentum(MomentumPoint::new(pz, p0)).p_u.powi(2))?;
    let pv2 = momentum_moment(&|pz, p0| LightConeMomenta::from_momentum(MomentumPoint::new(pz, p0)).p_v.powi(2))?;
    Ok((u2 * pu2, v2 * pv2))
}

/// Second moment `<p_z^2>` of the longitudinal momentum marginal, by quadrature.
pub fn momentum_second_moment(r: Rapidity) -> Result<f64> {
    let rule = gauss_hermite(DEFAULT_ORDER)?;
    let frame = momentum_density_frame(r);
    let density = |pz: f64, p0: f64| momentum_wf(r, MomentumPoint::new(pz, p0)).powi(2);
    let norm = integrate_2d(density, &rule, &frame)?;
    Ok(integrate_2d(|pz, p0| pz * pz * density(pz, p0), &rule, &frame)? / norm)
}

/// A phase-space point with the Wigner function value at it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WignerSample {
    pub z: f64,
    pub p_z: f64,
    pub t: f64,
    pub p_0: f64,
    pub w: f64,
}

impl WignerSample {
    pub fn at(r: Rapidity, z: f64, p_z: f64, t: f64, p_0: f64) -> Self {
        WignerSample {
            z,
            p_z,
            t,
            p_0,
            w: wigner_full(r, z, p_z, t, p_0),
        }
    }
}

/// Wigner function of the boosted ground state,
/// `pi^-2 exp{-(1/2)[e^{-2eta}(z+t)^2 + e^{2eta}(z-t)^2 + e^{2eta}(p_0-p_z)^2 + e^{-2eta}(p_0+p_z)^2]}`.
///
/// It factorizes into the `(u, p_u)` and `(v, p_v)` planes; see
/// [`wigner_factors`].
pub fn wigner_full(r: Rapidity, z: f64, p_z: f64, t: f64, p_0: f64) -> f64 {
    let lc = to_light_cone(SpaceTimePoint::new(z, t));
    let lm = LightConeMomenta::from_momentum(MomentumPoint::new(p_z, p_0));
    let (wu, wv) = wigner_factors(r);
    wu(lc.u, lm.p_u) * wv(lc.v, lm.p_v)
}

/// Single-plane Wigner factors `(W_u(u, p_u), W_v(v, p_v))`, each a
/// normalized Gaussian on its plane.
pub fn wigner_factors(r: Rapidity) -> (impl Fn(f64, f64) -> f64, impl Fn(f64, f64) -> f64) {
    let squeeze = (2.0 * r.eta()).exp();
    let wu = move |u: f64, p_u: f64| (-(u * u / squeeze) - squeeze * p_u * p_u).exp() / PI;
    let wv = move |v: f64, p_v: f64| (-(squeeze * v * v) - p_v * p_v / squeeze).exp() / PI;
    (wu, wv)
}

/// Frame for one factor plane: axes `(x, p)` with exponent
/// `x^2/s + s p^2`, i.e. scales `sqrt(s)` and `1/sqrt(s)`.
fn factor_frame(squeeze: f64) -> GaussianFrame {
    GaussianFrame::cartesian(squeeze.sqrt(), squeeze.sqrt().recip())
}

/// `int W dz dp_z dt dp_0` as the product of the two single-plane integrals.
pub fn wigner_normalization(r: Rapidity) -> Result<f64> {
    let rule = gauss_hermite(DEFAULT_ORDER)?;
    let squeeze = (2.0 * r.eta()).exp();
    let (wu, wv) = wigner_factors(r);
    let iu = integrate_2d(wu, &rule, &factor_frame(squeeze))?;
    let iv = integrate_2d(wv, &rule, &factor_frame(squeeze.recip()))?;
    Ok(iu * iv)
}

/// Reduced Wigner function `int W dt dp_0`,
/// `exp{-(z^2 + p_z^2)/cosh 2eta} / (pi cosh 2eta)`.
pub fn wigner_reduced(r: Rapidity, z: f64, p_z: f64) -> f64 {
    let c = (2.0 * r.eta()).cosh();
    (-(z * z + p_z * p_z) / c).exp() / (PI * c)
}

/// e-folding radius `sqrt(cosh 2eta)` of [`wigner_reduced`].
pub fn wigner_radius(r: Rapidity) -> f64 {
    (2.0 * r.eta()).cosh().sqrt()
}

/// The same radius written in the velocity, `sqrt((1 + b^2)/(1 - b^2))`.
pub fn wigner_radius_beta(beta: f64) -> Result<f64> {
    if beta.is_nan() || beta.abs() >= 1.0 {
        return Err(Error::Domain(format!("velocity must satisfy |beta| < 1, got {beta}")));
    }
    let b2 = beta * beta;
    Ok(((1.0 + b2) / (1.0 - b2)).sqrt())
}

/// Ratio `e^{-2eta}` of the external probe's crossing time to the internal
/// oscillation period, for Lorentz factor `gamma = cosh eta`.
pub fn interaction_time_ratio(gamma: f64) -> Result<f64> {
    if !gamma.is_finite() || gamma < 1.0 {
        return Err(Error::Domain(format!(
            "Lorentz factor must be finite and >= 1, got {gamma}"
        )));
    }
    // e^eta = gamma + sqrt(gamma^2 - 1)
    let e_eta = gamma + ((gamma - 1.0) * (gamma + 1.0)).sqrt();
    Ok(e_eta.powi(-2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn rap(eta: f64) -> Rapidity {
        Rapidity::new(eta).unwrap()
    }

    #[test]
    fn momentum_at_rest_is_isotropic() {
        for &(pz, p0) in &[(0.0f64, 0.0f64), (1.0, -0.5), (-2.0, 0.3)] {
            let expected = (-(pz * pz + p0 * p0) / 2.0).exp() / PI.sqrt();
            let v = momentum_wf(Rapidity::REST, MomentumPoint::new(pz, p0));
            assert_relative_eq!(v, expected, max_relative = 1e-14);
            let s = momentum_wf_with(ExponentAssignment::Swapped, Rapidity::REST, MomentumPoint::new(pz, p0));
            assert_relative_eq!(s, expected, max_relative = 1e-14);
        }
    }

    #[test]
    fn momentum_wf_follows_boost_law() {
        // phi_eta(p) = phi_0 evaluated at the boosted-back light-cone momenta
        let r = rap(0.9);
        let m = MomentumPoint::new(0.4, -1.1);
        let back = LightConeMomenta::from_momentum(m).boost(rap(-0.9)).to_momentum();
        assert_relative_eq!(
            momentum_wf(r, m),
            momentum_wf(Rapidity::REST, back),
            max_relative = 1e-13
        );
    }

    #[test]
    fn uncertainty_at_rest() {
        let (a, b) = uncertainty_products(Rapidity::REST).unwrap();
        assert_relative_eq!(a, 0.25, max_relative = 1e-12);
        assert_relative_eq!(b, 0.25, max_relative = 1e-12);
    }

    #[test]
    fn wigner_at_rest() {
        assert_relative_eq!(
            wigner_full(Rapidity::REST, 0.0, 0.0, 0.0, 0.0),
            PI.powi(-2),
            max_relative = 1e-15
        );
        let (z, pz, t, p0): (f64, f64, f64, f64) = (0.3, -0.7, 1.1, 0.2);
        let expected = (-(z * z + pz * pz + t * t + p0 * p0)).exp() / PI.powi(2);
        assert_relative_eq!(
            wigner_full(Rapidity::REST, z, pz, t, p0),
            expected,
            max_relative = 1e-14
        );
    }

    #[test]
    fn wigner_light_cone_form() {
        let eta: f64 = 0.6;
        let (z, pz, t, p0): (f64, f64, f64, f64) = (0.3, -0.7, 1.1, 0.2);
        let (ep, em) = ((2.0 * eta).exp(), (-2.0 * eta).exp());
        let q = em * (z + t).powi(2) + ep * (z - t).powi(2) + ep * (p0 - pz).powi(2) + em * (p0 + pz).powi(2);
        let expected = (-0.5 * q).exp() / PI.powi(2);
        assert_relative_eq!(wigner_full(rap(eta), z, pz, t, p0), expected, max_relative = 1e-13);
        assert_relative_eq!(
            WignerSample::at(rap(eta), z, pz, t, p0).w,
            expected,
            max_relative = 1e-13
        );
    }

    #[test]
    fn reduced_wigner_and_radius() {
        assert_relative_eq!(
            wigner_reduced(Rapidity::REST, 0.5, 0.5),
            (-0.5f64).exp() / PI,
            max_relative = 1e-15
        );
        assert_eq!(wigner_radius(Rapidity::REST), 1.0);
        assert_relative_eq!(wigner_radius_beta(0.6).unwrap(), 2.125f64.sqrt(), max_relative = 1e-15);
        assert_relative_eq!(2.125f64.sqrt(), 1.457_737_973_711_325, max_relative = 1e-15);
        assert!(wigner_radius_beta(-1.0).is_err());
        for eta in [0.5, 1.0, 2.0] {
            let r = rap(eta);
            let radius = wigner_radius(r);
            assert_relative_eq!(
                wigner_reduced(r, radius, 0.0) / wigner_reduced(r, 0.0, 0.0),
                (-1.0f64).exp(),
                max_relative = 1e-12
            );
        }
    }

    #[test]
    fn time_ratio() {
        assert_eq!(interaction_time_ratio(1.0).unwrap(), 1.0);
        let lhc = interaction_time_ratio(4000.0).unwrap();
        assert!((1.55e-8..=1.65e-8).contains(&lhc), "{lhc}");
        let g = 1e4;
        assert_relative_eq!(
            interaction_time_ratio(g).unwrap(),
            1.0 / (4.0 * g * g),
            max_relative = 1e-4
        );
        assert!(interaction_time_ratio(0.99).is_err());
        assert!(interaction_time_ratio(f64::NAN).is_err());
    }

    proptest! {
        #[test]
        fn light_cone_momenta_round_trip(pz in -50.0..50.0f64, p0 in -50.0..50.0f64) {
            let back = LightConeMomenta::from_momentum(MomentumPoint::new(pz, p0)).to_momentum();
            prop_assert!((back.p_z - pz).abs() <= 1e-13 * (1.0 + pz.abs() + p0.abs()));
            prop_assert!((back.p_0 - p0).abs() <= 1e-13 * (1.0 + pz.abs() + p0.abs()));
        }

        #[test]
        fn wigner_positive(eta in -1.0..1.0f64, z in -3.0..3.0f64, pz in -3.0..3.0f64, t in -3.0..3.0f64, p0 in -3.0..3.0f64) {
            let w = wigner_full(rap(eta), z, pz, t, p0);
            prop_assert!(w > 0.0 && w.is_finite());
        }

        #[test]
        fn radius_forms_agree(eta in -3.0..3.0f64) {
            let r = rap(eta);
            prop_assert!((wigner_radius(r) - wigner_radius_beta(r.beta()).unwrap()).abs() <= 1e-12 * wigner_radius(r));
        }
    }
}
