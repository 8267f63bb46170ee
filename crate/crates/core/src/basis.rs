//! Hermite-Gaussian oscillator eigenfunctions and Gauss-Hermite quadrature.
//!
//! The quadrature routines here are the integration backbone of every
//! oracle in the crate. Integrals over the plane are evaluated with a
//! tensor-product Gauss-Hermite rule whose Gaussian weight is matched to
//! the decay of the integrand through a [`GaussianFrame`].

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use crate::error::{Error, Result};

/// Excitation number of an oscillator eigenstate.
pub type OscillatorIndex = u32;

/// `pi^(-1/4)`, the peak value of the normalized ground state.
pub const PI_POW_NEG_QUARTER: f64 = 0.751_125_544_464_942_5;

/// Largest excitation for which [`phi`] uses the direct product formula.
const DIRECT_PHI_MAX: OscillatorIndex = 20;

/// Rescaling threshold for the overflow-safe recurrences.
const RESCALE_AT: f64 = 1e150;

/// Natural log of `n!`.
pub fn ln_factorial(n: u64) -> f64 {
    if n <= DIRECT_PHI_MAX as u64 {
        return (2..=n).map(|k| k as f64).product::<f64>().ln();
    }
    (2..=n).map(|k| (k as f64).ln()).sum()
}

/// Natural log of the binomial coefficient `C(n, k)`.
pub fn ln_binomial(n: u64, k: u64) -> f64 {
    if k > n {
        return f64::NEG_INFINITY;
    }
    let small = k.min(n - k);
    let big = n - small;
    // C(n, k) = prod_{j=1}^{small} (big + j) / j
    (1..=small).map(|j| (big as f64 / j as f64).ln_1p()).sum()
}

/// Physicists' Hermite polynomial `H_n(x)` via the three-term recurrence
/// `H_{n+1} = 2x H_n - 2n H_{n-1}`.
pub fn hermite(n: OscillatorIndex, x: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 2.0 * x;
    for k in 1..n {
        let next = 2.0 * x * cur - 2.0 * k as f64 * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `H_n(x)` as `(mantissa, ln_scale)` with `H_n(x) = mantissa * exp(ln_scale)`.
fn hermite_scaled(n: OscillatorIndex, x: f64) -> (f64, f64) {
    let mut ln_scale = 0.0;
    let mut prev = 1.0;
    if n == 0 {
        return (prev, ln_scale);
    }
    let mut cur = 2.0 * x;
    for k in 1..n {
        let next = 2.0 * x * cur - 2.0 * k as f64 * prev;
        prev = cur;
        cur = next;
        if cur.abs() > RESCALE_AT {
            prev /= RESCALE_AT;
            cur /= RESCALE_AT;
            ln_scale += RESCALE_AT.ln();
        }
    }
    (cur, ln_scale)
}

/// Normalized oscillator eigenfunction
/// `(1 / (sqrt(pi) n! 2^n))^(1/2) H_n(x) exp(-x^2 / 2)`.
///
/// Above `n = 20` the normalization and the polynomial are combined in the
/// log domain so neither `n!` nor `H_n` overflows.
pub fn phi(n: OscillatorIndex, x: f64) -> f64 {
    if n <= DIRECT_PHI_MAX {
        let norm = 1.0 / (PI.sqrt() * factorial_small(n) * 2f64.powi(n as i32));
        return norm.sqrt() * hermite(n, x) * (-0.5 * x * x).exp();
    }
    let (mantissa, ln_scale) = hermite_scaled(n, x);
    if mantissa == 0.0 {
        return 0.0;
    }
    let ln_norm = -0.5 * (0.5 * PI.ln() + ln_factorial(n as u64) + n as f64 * 2f64.ln());
    mantissa.signum() * (mantissa.abs().ln() + ln_scale + ln_norm - 0.5 * x * x).exp()
}

fn factorial_small(n: OscillatorIndex) -> f64 {
    (2..=n).map(f64::from).product()
}

/// `[phi(0, x), phi(1, x), ..., phi(kmax, x)]` from the normalized
/// recurrence `phi_{k+1} = sqrt(2/(k+1)) x phi_k - sqrt(k/(k+1)) phi_{k-1}`.
///
/// The Gaussian factor is carried as a log scale, so the sequence stays
/// accurate at abscissae where `exp(-x^2/2)` alone would underflow.
pub fn phi_sequence(kmax: usize, x: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(kmax + 1);
    let mut ln_scale = -0.5 * x * x;
    let mut prev = 0.0;
    let mut cur = PI_POW_NEG_QUARTER;
    out.push(cur * ln_scale.exp());
    for k in 0..kmax {
        let kf = k as f64;
        let next = (2.0 / (kf + 1.0)).sqrt() * x * cur - (kf / (kf + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
        if cur.abs() > RESCALE_AT {
            prev /= RESCALE_AT;
            cur /= RESCALE_AT;
            ln_scale += RESCALE_AT.ln();
        }
        out.push(cur * ln_scale.exp());
    }
    out
}

/// Gauss-Hermite nodes and weights for the weight function `exp(-x^2)`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
    /// `weights[i] * exp(nodes[i]^2)`, used when the Gaussian is divided out
    /// of an integrand instead of being supplied by the caller.
    unweighted: Vec<f64>,
}

impl QuadratureRule {
    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    /// Abscissae in increasing order.
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Approximates `int f(x) exp(-x^2) dx`.
    pub fn integrate_weighted<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&x, &w)| w * f(x)).sum()
    }

    /// Approximates `int f(x) dx` for an `f` decaying like `exp(-(x/scale)^2)`.
    pub fn integrate_1d<F: Fn(f64) -> f64>(&self, scale: f64, f: F) -> f64 {
        scale
            * self
                .nodes
                .iter()
                .zip(&self.unweighted)
                .map(|(&x, &w)| w * f(scale * x))
                .sum::<f64>()
    }
}

/// Builds the `order`-point Gauss-Hermite rule.
///
/// Roots of `H_order` are located by Newton iteration on the orthonormal
/// Hermite recurrence, with the usual asymptotic starting guesses for the
/// largest roots and extrapolation from the previous two roots after that.
pub fn gauss_hermite(order: usize) -> Result<QuadratureRule> {
    if order == 0 {
        return Err(Error::Domain("quadrature order must be at least 1".into()));
    }
    let n = order;
    let nf = n as f64;
    let half = n.div_ceil(2);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let upper = (2.0 * nf + 1.0).sqrt() + 1.0;
    for i in 0..half {
        // The i-th largest root is eigenvalue n - 1 - i of the Jacobi matrix.
        let mut z = jacobi_eigenvalue(n, n - 1 - i, 0.0, upper);
        let mut derivative = 0.0;
        for _ in 0..4 {
            let (value, d) = orthonormal_hermite_and_derivative(n, z);
            derivative = d;
            let step = value / d;
            if !step.is_finite() || step.abs() > 1e-6 {
                break;
            }
            z -= step;
            if step.abs() <= 1e-16 * z.abs().max(1.0) {
                break;
            }
        }
        // Polish the weight at the converged root.
        let (_, d) = orthonormal_hermite_and_derivative(n, z);
        if d.is_finite() && d != 0.0 {
            derivative = d;
        }
        nodes[i] = z;
        nodes[n - 1 - i] = -z;
        let w = 2.0 / (derivative * derivative);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[half - 1] = 0.0;
    }
    nodes.reverse();
    weights.reverse();
    let unweighted = nodes.iter().zip(&weights).map(|(&x, &w)| w * (x * x).exp()).collect();
    Ok(QuadratureRule {
        nodes,
        weights,
        unweighted,
    })
}

/// Number of eigenvalues below `x` of the symmetric tridiagonal Hermite
/// Jacobi matrix of size `n` (zero diagonal, off-diagonal `sqrt(j/2)`).
fn sturm_count(n: usize, x: f64) -> usize {
    let mut count = 0;
    let mut q = -x;
    for j in 0..n {
        if j > 0 {
            q = -x - 0.5 * j as f64 / q;
        }
        if q == 0.0 {
            q = f64::MIN_POSITIVE;
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// Eigenvalue `k` (ascending, zero based) by bisection, searched in `[lo, hi]`.
fn jacobi_eigenvalue(n: usize, k: usize, mut lo: f64, mut hi: f64) -> f64 {
    if sturm_count(n, lo) > k {
        // The middle root of an odd rule sits at the lower end.
        lo = -hi;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if sturm_count(n, mid) > k {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Value of the orthonormal Hermite polynomial `p_n(z)` (normalized against
/// `exp(-z^2)`) and its derivative `sqrt(2n) p_{n-1}(z)`.
fn orthonormal_hermite_and_derivative(n: usize, z: f64) -> (f64, f64) {
    let mut p1 = PI_POW_NEG_QUARTER;
    let mut p2 = 0.0;
    for j in 0..n {
        let p3 = p2;
        p2 = p1;
        let jf = j as f64;
        p1 = z * (2.0 / (jf + 1.0)).sqrt() * p2 - (jf / (jf + 1.0)).sqrt() * p3;
    }
    (p1, (2.0 * n as f64).sqrt() * p2)
}

/// Default per-axis order used by the oracles.
pub const DEFAULT_ORDER: usize = 64;

/// Quadrature evaluation of `int phi_m(x) phi_n(x) dx`.
pub fn overlap_1d(m: OscillatorIndex, n: OscillatorIndex) -> f64 {
    // phi_m phi_n exp(x^2) is a polynomial of degree m + n.
    let order = DEFAULT_ORDER.max((m + n) as usize / 2 + 2);
    let rule = gauss_hermite(order).expect("order is positive");
    rule.integrate_1d(1.0, |x| phi(m, x) * phi(n, x))
}

/// Integration axes of a [`GaussianFrame`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axes {
    /// `(a, b) = (z, t)`.
    Cartesian,
    /// `(a, b) = ((z + t)/sqrt 2, (z - t)/sqrt 2)`.
    LightCone,
}

/// Gaussian envelope assumed by [`integrate_2d`]: the integrand is taken
/// to decay like `exp(-(a/scale_a)^2 - (b/scale_b)^2)` in the frame axes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianFrame {
    pub axes: Axes,
    pub scale_a: f64,
    pub scale_b: f64,
}

impl GaussianFrame {
    /// Weight `exp(-(z^2 + t^2))`.
    pub const UNIT: GaussianFrame = GaussianFrame {
        axes: Axes::Cartesian,
        scale_a: 1.0,
        scale_b: 1.0,
    };

    pub fn cartesian(scale_z: f64, scale_t: f64) -> Self {
        GaussianFrame {
            axes: Axes::Cartesian,
            scale_a: scale_z,
            scale_b: scale_t,
        }
    }

    pub fn light_cone(scale_u: f64, scale_v: f64) -> Self {
        GaussianFrame {
            axes: Axes::LightCone,
            scale_a: scale_u,
            scale_b: scale_v,
        }
    }

    /// Frame matching `exp(-alpha_u u^2 - alpha_v v^2)` in light-cone axes.
    pub fn light_cone_for_exponents(alpha_u: f64, alpha_v: f64) -> Self {
        Self::light_cone(alpha_u.recip().sqrt(), alpha_v.recip().sqrt())
    }

    fn to_zt(self, a: f64, b: f64) -> (f64, f64) {
        match self.axes {
            Axes::Cartesian => (a, b),
            Axes::LightCone => ((a + b) * FRAC_1_SQRT_2, (a - b) * FRAC_1_SQRT_2),
        }
    }
}

impl Default for GaussianFrame {
    fn default() -> Self {
        Self::UNIT
    }
}

/// Tensor-product Gauss-Hermite estimate of `int int f(z, t) dz dt`.
///
/// The frame's Gaussian is divided out of `f` analytically, so integrands
/// of the form polynomial times that Gaussian are integrated exactly once
/// the rule order exceeds half the polynomial degree.
pub fn integrate_2d<F>(f: F, rule: &QuadratureRule, frame: &GaussianFrame) -> Result<f64>
where
    F: Fn(f64, f64) -> f64,
{
    let mut total = 0.0;
    for (&xa, &wa) in rule.nodes.iter().zip(&rule.unweighted) {
        let a = frame.scale_a * xa;
        let mut row = 0.0;
        for (&xb, &wb) in rule.nodes.iter().zip(&rule.unweighted) {
            let b = frame.scale_b * xb;
            let (z, t) = frame.to_zt(a, b);
            let value = f(z, t);
            if !value.is_finite() {
                return Err(Error::NonFinite { z, t, value });
            }
            row += wb * value;
        }
        total += wa * row;
    }
    Ok(total * frame.scale_a * frame.scale_b)
}

/// [`integrate_2d`] at `order` and `order + 16`; fails with
/// [`Error::Accuracy`] when the two disagree by more than `tolerance`.
pub fn integrate_2d_converged<F>(f: F, frame: &GaussianFrame, order: usize, tolerance: f64) -> Result<f64>
where
    F: Fn(f64, f64) -> f64,
{
    let coarse = integrate_2d(&f, &gauss_hermite(order)?, frame)?;
    let fine = integrate_2d(&f, &gauss_hermite(order + 16)?, frame)?;
    if (fine - coarse).abs() > tolerance {
        return Err(Error::Accuracy {
            coarse,
            fine,
            tolerance,
        });
    }
    Ok(fine)
}

/// A real function sampled on a rectangular `(z, t)` grid.
///
/// `values` is row-major with `z` varying slowest: `values[i * nt + j]` is
/// the sample at `(z_i, t_j)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledField2D {
    values: Vec<f64>,
    pub z_min: f64,
    pub z_max: f64,
    pub t_min: f64,
    pub t_max: f64,
    pub nz: usize,
    pub nt: usize,
}

impl SampledField2D {
    pub fn sample<F>(f: F, (z_min, z_max): (f64, f64), (t_min, t_max): (f64, f64), nz: usize, nt: usize) -> Result<Self>
    where
        F: Fn(f64, f64) -> f64,
    {
        if nz < 2 || nt < 2 {
            return Err(Error::Domain(format!("grid needs at least 2x2 points, got {nz}x{nt}")));
        }
        if ![z_min, z_max, t_min, t_max].iter().all(|v| v.is_finite()) || z_min >= z_max || t_min >= t_max {
            return Err(Error::Domain("grid bounds must be finite and increasing".into()));
        }
        let mut field = SampledField2D {
            values: Vec::with_capacity(nz * nt),
            z_min,
            z_max,
            t_min,
            t_max,
            nz,
            nt,
        };
        for i in 0..nz {
            let z = field.z(i);
            for j in 0..nt {
                let t = field.t(j);
                let value = f(z, t);
                if !value.is_finite() {
                    return Err(Error::NonFinite { z, t, value });
                }
                field.values.push(value);
            }
        }
        Ok(field)
    }

    pub fn dz(&self) -> f64 {
        (self.z_max - self.z_min) / (self.nz - 1) as f64
    }

    pub fn dt(&self) -> f64 {
        (self.t_max - self.t_min) / (self.nt - 1) as f64
    }

    pub fn z(&self, i: usize) -> f64 {
        if i + 1 == self.nz {
            self.z_max
        } else {
            self.z_min + i as f64 * self.dz()
        }
    }

    pub fn t(&self, j: usize) -> f64 {
        if j + 1 == self.nt {
            self.t_max
        } else {
            self.t_min + j as f64 * self.dt()
        }
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.nt + j]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }
}
