//! Lorentz-covariant harmonic oscillators.
//!
//! The crate evaluates boosted oscillator wave functions in the longitudinal
//! space-time separation plane, their entangled-series expansions, the
//! reduced density matrix obtained by tracing over the time separation,
//! its entropy and the equivalent temperature, together with the
//! momentum-energy and Wigner phase-space pictures of the same state.
//!
//! Natural units are used throughout: `hbar = omega = c = k_B = 1`.
//!
//! Every closed form is paired with an independent quadrature oracle in
//! [`oracle`]; [`verify`] runs the full set of pairs and reports the
//! observed errors.

pub mod basis;
pub mod boost;
pub mod coupled;
pub mod entanglement;
mod error;
pub mod oracle;
pub mod phase_space;
pub mod scan;
pub mod verify;

pub use basis::{
    gauss_hermite, hermite, integrate_2d, overlap_1d, phi, Axes, GaussianFrame, OscillatorIndex, QuadratureRule,
    SampledField2D,
};
pub use boost::{LightConePoint, Rapidity, SpaceTimePoint};
pub use coupled::{NormalPoint, PhasePoint2, SqueezeParameter};
pub use entanglement::{SpectralDensity, Temperature, Truncation};
pub use error::{Error, Result};
pub use phase_space::{LightConeMomenta, MomentumPoint, WignerSample};
pub use scan::{OutputFormat, ScanConfig, ScanTable};
