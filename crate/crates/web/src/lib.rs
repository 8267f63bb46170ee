//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Fields are returned row-major as `Float64Array`s of `size * size` values,
//! row `i` holding the vertical coordinate and column `j` the horizontal one.

use covosc::boost::boosted_wf;
use covosc::entanglement::{entropy_analytic, purity, spatial_width, temperature_of, SpectralDensity};
use covosc::phase_space::{interaction_time_ratio, wigner_reduced};
use covosc::{Rapidity, SpaceTimePoint};
use wasm_bindgen::prelude::*;

fn rapidity(eta: f64) -> Result<Rapidity, JsError> {
    if eta.abs() > covosc::scan::MAX_ETA {
        return Err(JsError::new(&format!(
            "|eta| must be at most {}",
            covosc::scan::MAX_ETA
        )));
    }
    Rapidity::new(eta).map_err(|e| JsError::new(&e.to_string()))
}

fn axis(size: usize, extent: f64) -> Vec<f64> {
    let step = 2.0 * extent / (size.max(2) - 1) as f64;
    (0..size).map(|i| -extent + step * i as f64).collect()
}

/// `|psi_eta^n(z, t)|^2` on `[-extent, extent]^2`; rows run over `t` from the
/// top (`t = extent`) down, columns over `z`.
#[wasm_bindgen]
pub fn boosted_density(n: u32, eta: f64, size: usize, extent: f64) -> Result<Vec<f64>, JsError> {
    let r = rapidity(eta)?;
    let a = axis(size, extent);
    let mut out = Vec::with_capacity(size * size);
    for t in a.iter().rev() {
        for &z in &a {
            out.push(boosted_wf(n, r, SpaceTimePoint::new(z, *t)).powi(2));
        }
    }
    Ok(out)
}

/// Reduced Wigner function of the boosted ground state in `(z, p_z)`; rows
/// run over `p_z` from the top down, columns over `z`.
#[wasm_bindgen]
pub fn reduced_wigner(eta: f64, size: usize, extent: f64) -> Result<Vec<f64>, JsError> {
    let r = rapidity(eta)?;
    let a = axis(size, extent);
    let mut out = Vec::with_capacity(size * size);
    for p in a.iter().rev() {
        for &z in &a {
            out.push(wigner_reduced(r, z, *p));
        }
    }
    Ok(out)
}

/// The first `count` eigenvalues of the reduced density matrix for
/// excitation `n`, followed by entropy, purity, temperature, width and the
/// interaction-time ratio `e^{-2|eta|}`.
#[wasm_bindgen]
pub fn spectrum(n: u32, eta: f64, count: usize) -> Result<Vec<f64>, JsError> {
    let r = rapidity(eta)?;
    let density = SpectralDensity::new(n, r);
    let mut out: Vec<f64> = (0..count as u64).map(|k| density.eigenvalue(k)).collect();
    let ratio = interaction_time_ratio(r.gamma()).map_err(|e| JsError::new(&e.to_string()))?;
    out.extend([
        entropy_analytic(n, r),
        purity(n, r),
        temperature_of(r).value(),
        spatial_width(r),
        ratio,
    ]);
    Ok(out)
}
