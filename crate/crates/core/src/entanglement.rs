//! Space-time entanglement of the boosted oscillator.
//!
//! Tracing the boosted state over the unobserved time separation leaves a
//! density matrix that is diagonal in the oscillator basis, with
//! negative-binomial weights `p_k`. Everything here (purity, entropy, the
//! equivalent temperature) is a function of that spectrum.

use std::f64::consts::PI;

use crate::basis::{ln_binomial, phi_sequence, OscillatorIndex};
use crate::boost::Rapidity;
use crate::error::{Error, Result};

/// Tail mass left over by automatic truncation of spectral sums.
pub const TAIL_TOLERANCE: f64 = 1e-14;

/// Largest tail bound accepted for a caller-supplied truncation.
pub const FIXED_TRUNCATION_TOLERANCE: f64 = 1e-10;

/// Hard cap on series length; reached only for `|eta|` well beyond 5.
const MAX_TERMS: usize = 50_000_000;

/// Coefficient of `phi_{n+k}(z) phi_k(t)` in the expansion of
/// `boosted_wf(n, eta)`:
/// `(1/cosh eta)^(n+1) C(n+k, k)^(1/2) tanh^k(eta)`.
pub fn expansion_coefficient(n: OscillatorIndex, k: OscillatorIndex, r: Rapidity) -> f64 {
    let eta = r.eta();
    if eta == 0.0 {
        return if k == 0 { 1.0 } else { 0.0 };
    }
    let ln_mag = -(n as f64 + 1.0) * eta.cosh().ln()
        + 0.5 * ln_binomial((n + k) as u64, k as u64)
        + k as f64 * eta.abs().tanh().ln();
    let sign = if eta < 0.0 && k % 2 == 1 { -1.0 } else { 1.0 };
    sign * ln_mag.exp()
}

/// Eigenvalue spectrum of the reduced density matrix of `boosted_wf(n, eta)`:
/// `p_k = (1/cosh^2 eta)^(n+1) C(n+k, k) tanh^{2k}(eta)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralDensity {
    pub n: OscillatorIndex,
    pub rapidity: Rapidity,
}

impl SpectralDensity {
    pub fn new(n: OscillatorIndex, rapidity: Rapidity) -> Self {
        SpectralDensity { n, rapidity }
    }

    fn is_pure(&self) -> bool {
        self.rapidity.eta() == 0.0
    }

    /// `tanh^2 eta`, the ratio of the geometric part of the spectrum.
    pub fn ratio(&self) -> f64 {
        self.rapidity.eta().tanh().powi(2)
    }

    pub fn ln_eigenvalue(&self, k: u64) -> f64 {
        if self.is_pure() {
            return if k == 0 { 0.0 } else { f64::NEG_INFINITY };
        }
        let eta = self.rapidity.eta().abs();
        let n = self.n as u64;
        -2.0 * (n as f64 + 1.0) * eta.cosh().ln() + ln_binomial(n + k, k) + 2.0 * k as f64 * eta.tanh().ln()
    }

    pub fn eigenvalue(&self, k: u64) -> f64 {
        self.ln_eigenvalue(k).exp()
    }

    /// Upper bound on `sum_{j >= k} p_j`, or infinity while the term ratio
    /// `p_{j+1}/p_j` is still at least one.
    pub fn tail_bound(&self, k: u64) -> f64 {
        if self.is_pure() {
            return if k == 0 { 1.0 } else { 0.0 };
        }
        // p_{j+1}/p_j = x (n + j + 1)/(j + 1) decreases in j towards x.
        let ratio = self.ratio() * (self.n as f64 + k as f64 + 1.0) / (k as f64 + 1.0);
        if ratio >= 1.0 {
            return f64::INFINITY;
        }
        self.eigenvalue(k) / (1.0 - ratio)
    }

    /// Number of leading eigenvalues kept so the discarded tail is below
    /// `tolerance`.
    pub fn terms_for(&self, tolerance: f64) -> usize {
        if self.is_pure() {
            return 1;
        }
        // Skip the rising part of the distribution before testing the bound.
        let x = self.ratio();
        let mode = if x * (self.n as f64 + 1.0) > 1.0 {
            ((x * self.n as f64 + x - 1.0) / (1.0 - x)).floor().max(0.0) as usize
        } else {
            0
        };
        let mut k = mode;
        while k < MAX_TERMS {
            if self.tail_bound(k as u64) < tolerance {
                return k;
            }
            k += 1;
        }
        MAX_TERMS
    }

    pub fn terms(&self) -> usize {
        self.terms_for(TAIL_TOLERANCE)
    }

    /// All eigenvalues up to the automatic truncation point.
    pub fn eigenvalues(&self) -> Vec<f64> {
        (0..self.terms() as u64).map(|k| self.eigenvalue(k)).collect()
    }
}

/// Compensated (Neumaier) summation.
pub(crate) fn stable_sum<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    let mut sum = 0.0f64;
    let mut carry = 0.0f64;
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            carry += (sum - t) + v;
        } else {
            carry += (v - t) + sum;
        }
        sum = t;
    }
    sum + carry
}

/// How many terms of a spectral series to keep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Truncation {
    /// Keep terms until the analytic tail bound drops below [`TAIL_TOLERANCE`].
    #[default]
    Auto,
    /// Keep exactly this many terms.
    Terms(usize),
}

/// Reduced density kernel `rho(z, z2) = sum_k p_k phi_{n+k}(z) phi_{n+k}(z2)`.
///
/// A fixed truncation whose tail bound exceeds
/// [`FIXED_TRUNCATION_TOLERANCE`] is rejected.
pub fn reduced_density(n: OscillatorIndex, r: Rapidity, z: f64, z2: f64, truncation: Truncation) -> Result<f64> {
    let spectrum = SpectralDensity::new(n, r);
    let terms = match truncation {
        Truncation::Auto => spectrum.terms(),
        Truncation::Terms(terms) => {
            let tail_bound = spectrum.tail_bound(terms as u64);
            if tail_bound.is_nan() || tail_bound > FIXED_TRUNCATION_TOLERANCE {
                return Err(Error::Truncation { terms, tail_bound });
            }
            terms
        }
    };
    if terms == 0 {
        return Ok(0.0);
    }
    let top = n as usize + terms - 1;
    let a = phi_sequence(top, z);
    let b = phi_sequence(top, z2);
    Ok(stable_sum((0..terms).map(|k| {
        spectrum.eigenvalue(k as u64) * a[n as usize + k] * b[n as usize + k]
    })))
}

/// Closed-form reduced kernel of the boosted ground state,
/// `exp{-[(z+z2)^2 / cosh 2eta + (z-z2)^2 cosh 2eta] / 4} / sqrt(pi cosh 2eta)`.
pub fn reduced_density_ground(r: Rapidity, z: f64, z2: f64) -> f64 {
    let c = (2.0 * r.eta()).cosh();
    let sum = z + z2;
    let diff = z - z2;
    (-0.25 * (sum * sum / c + diff * diff * c)).exp() / (PI * c).sqrt()
}

/// `Tr rho^2 = sum_k p_k^2`.
pub fn purity(n: OscillatorIndex, r: Rapidity) -> f64 {
    let spectrum = SpectralDensity::new(n, r);
    stable_sum((0..spectrum.terms() as u64).map(|k| (2.0 * spectrum.ln_eigenvalue(k)).exp()))
}

/// Entropy from the rearranged closed form
/// `(n+1)[cosh^2 ln cosh^2 - sinh^2 ln sinh^2] - sum_k p_k ln C(n+k, k)`.
pub fn entropy_analytic(n: OscillatorIndex, r: Rapidity) -> f64 {
    let eta = r.eta();
    if eta == 0.0 {
        return 0.0;
    }
    let c2 = eta.cosh().powi(2);
    let s2 = eta.sinh().powi(2);
    let head = (n as f64 + 1.0) * (c2 * c2.ln() - s2 * s2.ln());
    if n == 0 {
        return head;
    }
    let spectrum = SpectralDensity::new(n, r);
    let tail = stable_sum((0..spectrum.terms() as u64).map(|k| {
        let ln_c = ln_binomial(n as u64 + k, k);
        spectrum.eigenvalue(k) * ln_c
    }));
    head - tail
}

/// Entropy `-sum_k p_k ln p_k` taken directly from the eigenvalues.
///
/// # Panics
///
/// If the truncated spectrum does not sum to one within `1e-10`.
pub fn entropy_oracle(n: OscillatorIndex, r: Rapidity) -> f64 {
    if r.eta() == 0.0 {
        return 0.0;
    }
    let spectrum = SpectralDensity::new(n, r);
    let ln_p: Vec<f64> = (0..spectrum.terms() as u64)
        .map(|k| spectrum.ln_eigenvalue(k))
        .collect();
    let total = stable_sum(ln_p.iter().map(|l| l.exp()));
    assert!((total - 1.0).abs() <= 1e-10, "spectrum sums to {total}");
    -stable_sum(ln_p.iter().map(|&l| l.exp() * l))
}

/// Entropy in terms of the velocity `beta = v/c`:
/// `-(n+1){ln(1-b^2) + b^2 ln b^2/(1-b^2)} - (1-b^2)^(n+1) sum_k C ln C b^{2k}`.
pub fn entropy_velocity_form(n: OscillatorIndex, beta: f64) -> Result<f64> {
    if beta.is_nan() || beta.abs() >= 1.0 {
        return Err(Error::Domain(format!("velocity must satisfy |beta| < 1, got {beta}")));
    }
    if beta == 0.0 {
        return Ok(0.0);
    }
    let b2 = beta * beta;
    let head = -(n as f64 + 1.0) * ((-b2).ln_1p() + b2 * b2.ln() / (1.0 - b2));
    if n == 0 {
        return Ok(head);
    }
    let spectrum = SpectralDensity::new(n, Rapidity::from_beta(beta)?);
    let prefactor_ln = (n as f64 + 1.0) * (-b2).ln_1p();
    let tail = stable_sum((0..spectrum.terms() as u64).map(|k| {
        let ln_c = ln_binomial(n as u64 + k, k);
        (prefactor_ln + ln_c + k as f64 * b2.ln()).exp() * ln_c
    }));
    Ok(head - tail)
}

/// Temperature in units of `hbar omega / k_B`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Temperature(f64);

impl Temperature {
    pub const ZERO: Temperature = Temperature(0.0);

    pub fn new(t: f64) -> Result<Self> {
        if !t.is_finite() || t < 0.0 {
            return Err(Error::Domain(format!(
                "temperature must be finite and non-negative, got {t}"
            )));
        }
        Ok(Temperature(t))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0.0
    }

    /// Boltzmann factor `exp(-1/T)` of one oscillator quantum.
    pub fn boltzmann(self) -> f64 {
        if self.is_zero() {
            0.0
        } else {
            (-1.0 / self.0).exp()
        }
    }
}

/// `ln(tanh^2 eta)` without cancellation at either end of the range.
fn ln_tanh_squared(eta: f64) -> f64 {
    let sech2 = eta.cosh().powi(-2);
    if sech2 < 0.5 {
        (-sech2).ln_1p()
    } else {
        2.0 * eta.abs().tanh().ln()
    }
}

/// `T = -1 / ln(tanh^2 eta)`, with `T = 0` at rest.
pub fn temperature_of(r: Rapidity) -> Temperature {
    if r.eta() == 0.0 {
        return Temperature::ZERO;
    }
    Temperature(-1.0 / ln_tanh_squared(r.eta()))
}

/// Inverse of [`temperature_of`] on `eta >= 0`: `tanh^2 eta = exp(-1/T)`.
pub fn rapidity_of(t: Temperature) -> Rapidity {
    if t.is_zero() {
        return Rapidity::REST;
    }
    let y = (-0.5 / t.0).exp();
    let one_minus_y = -(-0.5 / t.0).exp_m1();
    Rapidity::new(0.5 * ((1.0 + y) / one_minus_y).ln()).expect("finite for finite T")
}

/// Thermal oscillator kernel `(1 - e^{-1/T}) sum_k e^{-k/T} phi_k(z) phi_k(z2)`.
pub fn thermal_density(t: Temperature, z: f64, z2: f64) -> f64 {
    let q = t.boltzmann();
    if q == 0.0 {
        return crate::basis::phi(0, z) * crate::basis::phi(0, z2);
    }
    let terms = thermal_terms(t);
    let a = phi_sequence(terms - 1, z);
    let b = phi_sequence(terms - 1, z2);
    let norm = -(-1.0 / t.0).exp_m1();
    stable_sum((0..terms).map(|k| norm * (-(k as f64) / t.0).exp() * a[k] * b[k]))
}

/// Terms kept in [`thermal_density`]: the discarded weight `q^K` is below
/// [`TAIL_TOLERANCE`].
pub fn thermal_terms(t: Temperature) -> usize {
    if t.is_zero() {
        return 1;
    }
    ((-TAIL_TOLERANCE.ln() * t.0).ceil() as usize).clamp(1, MAX_TERMS)
}

/// Quark distribution `rho(z, z) = exp(-z^2 / cosh 2eta) / sqrt(pi cosh 2eta)`.
pub fn spatial_distribution(r: Rapidity, z: f64) -> f64 {
    let c = (2.0 * r.eta()).cosh();
    (-z * z / c).exp() / (PI * c).sqrt()
}

/// Width scale `sqrt(cosh 2eta)` of [`spatial_distribution`], relative to rest.
pub fn spatial_width(r: Rapidity) -> f64 {
    (2.0 * r.eta()).cosh().sqrt()
}
