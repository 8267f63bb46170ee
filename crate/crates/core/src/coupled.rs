//! Two coupled oscillators: normal coordinates, the canonical squeeze, the
//! Lorentz-type squeeze and the entangled expansion of the coupled ground
//! state.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use crate::error::{Error, Result};

/// Positions and momenta of the two oscillators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhasePoint2 {
    pub x1: f64,
    pub x2: f64,
    pub p1: f64,
    pub p2: f64,
}

/// Sum and difference (normal) coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalPoint {
    pub x_plus: f64,
    pub x_minus: f64,
    pub p_plus: f64,
    pub p_minus: f64,
}

/// Squeeze strength `eta`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct SqueezeParameter(f64);

impl SqueezeParameter {
    pub const MAX_ABS: f64 = 10.0;

    pub fn new(eta: f64) -> Result<Self> {
        if !eta.is_finite() || eta.abs() > Self::MAX_ABS {
            return Err(Error::Domain(format!(
                "squeeze parameter must satisfy |eta| <= {}, got {eta}",
                Self::MAX_ABS
            )));
        }
        Ok(SqueezeParameter(eta))
    }

    pub fn eta(self) -> f64 {
        self.0
    }
}

pub fn to_normal(p: PhasePoint2) -> NormalPoint {
    NormalPoint {
        x_plus: (p.x1 + p.x2) * FRAC_1_SQRT_2,
        x_minus: (p.x1 - p.x2) * FRAC_1_SQRT_2,
        p_plus: (p.p1 + p.p2) * FRAC_1_SQRT_2,
        p_minus: (p.p1 - p.p2) * FRAC_1_SQRT_2,
    }
}

pub fn from_normal(n: NormalPoint) -> PhasePoint2 {
    PhasePoint2 {
        x1: (n.x_plus + n.x_minus) * FRAC_1_SQRT_2,
        x2: (n.x_plus - n.x_minus) * FRAC_1_SQRT_2,
        p1: (n.p_plus + n.p_minus) * FRAC_1_SQRT_2,
        p2: (n.p_plus - n.p_minus) * FRAC_1_SQRT_2,
    }
}

/// Canonical squeeze: `(x+, p-)` shrink by `e^-eta`, `(x-, p+)` grow by `e^eta`.
pub fn canonical_squeeze(n: NormalPoint, s: SqueezeParameter) -> NormalPoint {
    let shrink = (-s.0).exp();
    let grow = s.0.exp();
    NormalPoint {
        x_plus: n.x_plus * shrink,
        p_minus: n.p_minus * shrink,
        x_minus: n.x_minus * grow,
        p_plus: n.p_plus * grow,
    }
}

/// Lorentz-type squeeze: position and momentum of each normal mode scale
/// together, `(x+, p+)` by `e^-eta` and `(x-, p-)` by `e^eta`. Not canonical.
pub fn lorentz_squeeze(n: NormalPoint, s: SqueezeParameter) -> NormalPoint {
    let shrink = (-s.0).exp();
    let grow = s.0.exp();
    NormalPoint {
        x_plus: n.x_plus * shrink,
        p_plus: n.p_plus * shrink,
        x_minus: n.x_minus * grow,
        p_minus: n.p_minus * grow,
    }
}

/// Total energy of the uncoupled pair.
pub fn total_energy(p: PhasePoint2) -> f64 {
    0.5 * (p.p1 * p.p1 + p.x1 * p.x1) + 0.5 * (p.p2 * p.p2 + p.x2 * p.x2)
}

/// Energy of the first oscillator minus that of the second.
pub fn invariant_hamiltonian(p: PhasePoint2) -> f64 {
    0.5 * (p.p1 * p.p1 + p.x1 * p.x1) - 0.5 * (p.p2 * p.p2 + p.x2 * p.x2)
}

/// The same quadratic form written in normal coordinates, `p+ p- + x+ x-`.
pub fn invariant_hamiltonian_normal(n: NormalPoint) -> f64 {
    n.p_plus * n.p_minus + n.x_plus * n.x_minus
}

/// Ground state of the squeezed pair,
/// `pi^-1/2 exp{-[e^-2eta (x1+x2)^2 + e^2eta (x1-x2)^2] / 4}`.
pub fn coupled_ground_wf(s: SqueezeParameter, x1: f64, x2: f64) -> f64 {
    let sum = x1 + x2;
    let diff = x1 - x2;
    let exponent = -0.25 * ((-2.0 * s.0).exp() * sum * sum + (2.0 * s.0).exp() * diff * diff);
    exponent.exp() / PI.sqrt()
}

/// Coefficient `tanh^k(eta) / cosh(eta)` of `phi_k(x1) phi_k(x2)` in the
/// entangled expansion of [`coupled_ground_wf`].
pub fn entangled_coefficient(k: u32, s: SqueezeParameter) -> f64 {
    s.0.tanh().powi(k as i32) / s.0.cosh()
}

/// Smallest `K` with `tanh^{2K}(eta) <= 1e-16 (1 - tanh^2 eta)`; terms
/// `0..K` of the expansion then carry all but that much probability.
pub fn series_terms(s: SqueezeParameter) -> usize {
    let t2 = s.0.tanh().powi(2);
    if t2 == 0.0 {
        return 1;
    }
    let bound = 1e-16 * (1.0 - t2);
    (bound.ln() / t2.ln()).ceil().max(1.0) as usize
}

/// Partial sum of the entangled expansion over `k < terms`.
pub fn coupled_ground_series(s: SqueezeParameter, x1: f64, x2: f64, terms: usize) -> f64 {
    if terms == 0 {
        return 0.0;
    }
    let a = crate::basis::phi_sequence(terms - 1, x1);
    let b = crate::basis::phi_sequence(terms - 1, x2);
    let t = s.0.tanh();
    let mut weight = 1.0 / s.0.cosh();
    let mut sum = 0.0;
    for (pa, pb) in a.iter().zip(&b) {
        sum += weight * pa * pb;
        weight *= t;
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn sq(eta: f64) -> SqueezeParameter {
        SqueezeParameter::new(eta).unwrap()
    }

    #[test]
    fn normal_coordinates() {
        let sym = to_normal(PhasePoint2 {
            x1: 1.0,
            x2: 1.0,
            p1: 0.0,
            p2: 0.0,
        });
        assert_relative_eq!(sym.x_plus, 2f64.sqrt(), max_relative = 1e-15);
        assert_eq!(sym.x_minus, 0.0);
        let anti = to_normal(PhasePoint2 {
            x1: 1.0,
            x2: -1.0,
            p1: 0.0,
            p2: 0.0,
        });
        assert_eq!(anti.x_plus, 0.0);
        assert_relative_eq!(anti.x_minus, 2f64.sqrt(), max_relative = 1e-15);
    }

    #[test]
    fn squeeze_definitions() {
        let n = NormalPoint {
            x_plus: 1.0,
            x_minus: 2.0,
            p_plus: 1.0,
            p_minus: -3.0,
        };
        assert_eq!(canonical_squeeze(n, sq(0.0)), n);
        assert_eq!(lorentz_squeeze(n, sq(0.0)), n);
        assert_relative_eq!(
            canonical_squeeze(n, sq(1.0)).x_plus,
            0.367_879_441_171_442_3,
            max_relative = 1e-15
        );
        let l = lorentz_squeeze(n, sq(0.5));
        assert_relative_eq!(l.x_plus, 0.606_530_659_712_633_4, max_relative = 1e-15);
        assert_relative_eq!(l.p_plus, 0.606_530_659_712_633_4, max_relative = 1e-15);
    }

    #[test]
    fn squeeze_parameter_range() {
        assert!(SqueezeParameter::new(10.0).is_ok());
        assert!(SqueezeParameter::new(-10.5).is_err());
        assert!(SqueezeParameter::new(f64::NAN).is_err());
    }

    #[test]
    fn hamiltonian_examples() {
        assert_eq!(
            invariant_hamiltonian(PhasePoint2 {
                x1: 0.3,
                x2: 0.3,
                p1: -1.0,
                p2: -1.0
            }),
            0.0
        );
        assert_eq!(
            invariant_hamiltonian(PhasePoint2 {
                x1: 1.0,
                x2: 0.0,
                p1: 0.0,
                p2: 0.0
            }),
            0.5
        );
        assert_eq!(
            total_energy(PhasePoint2 {
                x1: 1.0,
                x2: 0.0,
                p1: 0.0,
                p2: 1.0
            }),
            1.0
        );
    }

    #[test]
    fn ground_state_basics() {
        assert_relative_eq!(
            coupled_ground_wf(sq(0.0), 0.0, 0.0),
            PI.powf(-0.5),
            max_relative = 1e-15
        );
        for eta in [0.0, 0.7, -1.3] {
            assert_eq!(
                coupled_ground_wf(sq(eta), 0.4, -1.1),
                coupled_ground_wf(sq(eta), -1.1, 0.4)
            );
        }
        assert_eq!(entangled_coefficient(0, sq(0.0)), 1.0);
        for eta in [0.3, 1.0, 2.5] {
            let total: f64 = (0..series_terms(sq(eta)))
                .map(|k| entangled_coefficient(k as u32, sq(eta)).powi(2))
                .sum();
            assert_relative_eq!(total, 1.0, max_relative = 1e-14);
        }
    }

    #[test]
    fn truncation_rule() {
        assert_eq!(series_terms(sq(0.0)), 1);
        let s = sq(1.0);
        let k = series_terms(s);
        let t2 = 1f64.tanh().powi(2);
        assert!(t2.powi(k as i32) <= 1e-16 * (1.0 - t2));
        assert!(t2.powi(k as i32 - 1) > 1e-16 * (1.0 - t2));
    }

    #[test]
    fn series_reconstructs_ground_state() {
        let s = sq(1.0);
        let grid: Vec<f64> = (0..21).map(|i| -3.0 + 0.3 * i as f64).collect();
        let max_err = |terms: usize| {
            let mut worst = 0.0f64;
            for &x1 in &grid {
                for &x2 in &grid {
                    let err = (coupled_ground_series(s, x1, x2, terms) - coupled_ground_wf(s, x1, x2)).abs();
                    worst = worst.max(err);
                }
            }
            worst
        };
        let errs: Vec<f64> = [5, 10, 20, 40, 60].iter().map(|&k| max_err(k)).collect();
        assert!(errs.windows(2).all(|w| w[1] < w[0]), "{errs:?}");
        assert!(errs[4] <= 1e-6, "{errs:?}");
        // |phi_k(x)| <= pi^-1/4 bounds the pointwise tail geometrically.
        let k = series_terms(s);
        let t = 1f64.tanh();
        let bound = t.powi(k as i32) / (1.0 - t) / 1f64.cosh() / std::f64::consts::PI.sqrt();
        assert!(max_err(k) <= bound, "{} > {bound}", max_err(k));
    }

    proptest! {
        #[test]
        fn normal_round_trip(x1 in -1e3..1e3f64, x2 in -1e3..1e3f64, p1 in -1e3..1e3f64, p2 in -1e3..1e3f64) {
            let p = PhasePoint2 { x1, x2, p1, p2 };
            let back = from_normal(to_normal(p));
            let scale = 1e-14 * (1.0 + x1.abs() + x2.abs() + p1.abs() + p2.abs());
            prop_assert!((back.x1 - x1).abs() <= scale);
            prop_assert!((back.x2 - x2).abs() <= scale);
            prop_assert!((back.p1 - p1).abs() <= scale);
            prop_assert!((back.p2 - p2).abs() <= scale);
        }

        #[test]
        fn squeezes_preserve_invariant_hamiltonian(
            x1 in -5.0..5.0f64, x2 in -5.0..5.0f64, p1 in -5.0..5.0f64, p2 in -5.0..5.0f64,
            eta in -2.0..2.0f64,
        ) {
            let p = PhasePoint2 { x1, x2, p1, p2 };
            let n = to_normal(p);
            let h = invariant_hamiltonian(p);
            let tol = 1e-12 * (1.0 + total_energy(p)) * (2.0 * eta.abs()).exp();
            prop_assert!((invariant_hamiltonian_normal(n) - h).abs() <= tol);
            prop_assert!((invariant_hamiltonian_normal(canonical_squeeze(n, sq(eta))) - h).abs() <= tol);
            prop_assert!((invariant_hamiltonian_normal(lorentz_squeeze(n, sq(eta))) - h).abs() <= tol);
            prop_assert!((invariant_hamiltonian(from_normal(lorentz_squeeze(n, sq(eta)))) - h).abs() <= tol);
        }

        #[test]
        fn squeeze_products_and_inverse(
            xp in -5.0..5.0f64, xm in -5.0..5.0f64, pp in -5.0..5.0f64, pm in -5.0..5.0f64,
            eta in -2.0..2.0f64,
        ) {
            let n = NormalPoint { x_plus: xp, x_minus: xm, p_plus: pp, p_minus: pm };
            let c = canonical_squeeze(n, sq(eta));
            prop_assert!((c.x_plus * c.x_minus - xp * xm).abs() <= 1e-13 * (1.0 + (xp * xm).abs()));
            prop_assert!((c.p_plus * c.p_minus - pp * pm).abs() <= 1e-13 * (1.0 + (pp * pm).abs()));
            let back = canonical_squeeze(c, sq(-eta));
            for (a, b) in [(back.x_plus, xp), (back.x_minus, xm), (back.p_plus, pp), (back.p_minus, pm)] {
                prop_assert!((a - b).abs() <= 1e-14 * (1.0 + b.abs()));
            }
        }
    }
}
