//! Parameter scans over rapidity and temperature, emitted as CSV or JSON.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::basis::OscillatorIndex;
use crate::boost::Rapidity;
use crate::entanglement::{entropy_analytic, purity, rapidity_of, spatial_width, temperature_of, Temperature};
use crate::error::{Error, Result};
use crate::phase_space::{uncertainty_products, wigner_radius};

/// Largest rapidity accepted by the scans.
pub const MAX_ETA: f64 = 5.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanConfig {
    pub eta_min: f64,
    pub eta_max: f64,
    pub steps: usize,
    pub n: OscillatorIndex,
    pub output_format: OutputFormat,
    pub emit_plot: bool,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            eta_min: 0.0,
            eta_max: 3.0,
            steps: 61,
            n: 0,
            output_format: OutputFormat::Csv,
            emit_plot: false,
        }
    }
}

impl ScanConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |field, reason: String| Err(Error::Config { field, reason });
        if !self.eta_min.is_finite() || self.eta_min < 0.0 {
            return bad("eta-min", format!("must be finite and >= 0, got {}", self.eta_min));
        }
        if !self.eta_max.is_finite() || self.eta_max > MAX_ETA {
            return bad(
                "eta-max",
                format!("must be finite and <= {MAX_ETA}, got {}", self.eta_max),
            );
        }
        if self.eta_min >= self.eta_max {
            return bad(
                "eta-min",
                format!("must be below eta-max ({} >= {})", self.eta_min, self.eta_max),
            );
        }
        if self.steps < 2 {
            return bad("steps", format!("must be at least 2, got {}", self.steps));
        }
        Ok(())
    }

    /// Evenly spaced rapidities from `eta_min` to `eta_max` inclusive, with
    /// `eta = 0` prepended when the range starts above rest.
    pub fn eta_grid(&self) -> Result<Vec<f64>> {
        self.validate()?;
        Ok(grid_with_origin(self.eta_min, self.eta_max, self.steps))
    }

    fn describe(&self) -> Vec<(String, String)> {
        vec![
            ("eta_min".into(), self.eta_min.to_string()),
            ("eta_max".into(), self.eta_max.to_string()),
            ("steps".into(), self.steps.to_string()),
            ("n".into(), self.n.to_string()),
        ]
    }
}

fn grid_with_origin(min: f64, max: f64, steps: usize) -> Vec<f64> {
    let step = (max - min) / (steps - 1) as f64;
    let mut grid: Vec<f64> = (0..steps)
        .map(|i| if i + 1 == steps { max } else { min + i as f64 * step })
        .collect();
    if min > 0.0 {
        grid.insert(0, 0.0);
    }
    grid
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Column {
    pub name: String,
    pub unit: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanMetadata {
    pub generator: String,
    pub parameters: Vec<(String, String)>,
    pub version: String,
    pub timestamp: Option<String>,
}

/// Rows of scan output with named, unit-tagged columns.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanTable {
    pub columns: Vec<Column>,
    pub rows: Vec<Vec<f64>>,
    pub metadata: ScanMetadata,
}

fn format_value(v: f64) -> String {
    // 17 significant digits; -0 is written as 0 so output is sign-stable.
    let v = if v == 0.0 { 0.0 } else { v };
    format!("{v:.16e}")
}

impl ScanTable {
    fn new(generator: &str, columns: &[(&str, &str)], cfg: &ScanConfig) -> Self {
        ScanTable {
            columns: columns
                .iter()
                .map(|&(name, unit)| Column {
                    name: name.into(),
                    unit: unit.into(),
                })
                .collect(),
            rows: Vec::new(),
            metadata: ScanMetadata {
                generator: generator.into(),
                parameters: cfg.describe(),
                version: format!("covosc {}", env!("CARGO_PKG_VERSION")),
                timestamp: None,
            },
        }
    }

    fn push(&mut self, row: Vec<f64>) -> Result<()> {
        debug_assert_eq!(row.len(), self.columns.len());
        if let Some(bad) = row.iter().find(|v| !v.is_finite()) {
            return Err(Error::Domain(format!(
                "{} produced a non-finite value {bad} in row {}",
                self.metadata.generator,
                self.rows.len()
            )));
        }
        self.rows.push(row);
        Ok(())
    }

    pub fn column_index(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c.name == name)
    }

    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let i = self.column_index(name)?;
        Some(self.rows.iter().map(|r| r[i]).collect())
    }

    pub fn with_timestamp(mut self, timestamp: impl Into<String>) -> Self {
        self.metadata.timestamp = Some(timestamp.into());
        self
    }

    /// `#` metadata lines, a header line, then one line per row.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let m = &self.metadata;
        let _ = writeln!(out, "# generator: {}", m.generator);
        let _ = writeln!(out, "# version: {}", m.version);
        let params: Vec<String> = m.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let _ = writeln!(out, "# parameters: {}", params.join(", "));
        if let Some(ts) = &m.timestamp {
            let _ = writeln!(out, "# timestamp: {ts}");
        }
        let units: Vec<&str> = self.columns.iter().map(|c| c.unit.as_str()).collect();
        let _ = writeln!(out, "# units: {}", units.join(","));
        let names: Vec<&str> = self.columns.iter().map(|c| c.name.as_str()).collect();
        let _ = writeln!(out, "{}", names.join(","));
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|&v| format_value(v)).collect();
            let _ = writeln!(out, "{}", cells.join(","));
        }
        out
    }

    /// Reads the body of [`ScanTable::to_csv`] output: header names and rows.
    pub fn parse_csv_body(text: &str) -> Result<(Vec<String>, Vec<Vec<f64>>)> {
        let mut lines = text.lines().filter(|l| !l.starts_with('#') && !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Domain("missing CSV header".into()))?
            .split(',')
            .map(str::to_owned)
            .collect::<Vec<_>>();
        let rows = lines
            .map(|line| {
                line.split(',')
                    .map(|cell| {
                        cell.parse::<f64>()
                            .map_err(|e| Error::Domain(format!("bad cell `{cell}`: {e}")))
                    })
                    .collect::<Result<Vec<f64>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((header, rows))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scan tables serialize")
    }

    /// Gnuplot script plotting this table from `data_path`.
    pub fn plot_script(&self, data_path: &str) -> String {
        let (x, ys): (&str, &[&str]) = match self.metadata.generator.as_str() {
            "scan-temperature" => ("beta_squared", &["T"]),
            "scan-phase-transition" => ("T", &["beta_squared"]),
            _ => ("eta", &["entropy", "purity", "spatial_width", "wigner_radius"]),
        };
        let unit = |name: &str| {
            self.column_index(name)
                .map(|i| self.columns[i].unit.clone())
                .unwrap_or_default()
        };
        let mut out = String::new();
        let _ = writeln!(out, "# {} ({})", self.metadata.generator, self.metadata.version);
        let _ = writeln!(out, "set datafile separator ','");
        let _ = writeln!(out, "set datafile commentschars '#'");
        let _ = writeln!(out, "set key autotitle columnhead");
        let _ = writeln!(out, "set xlabel '{x} [{}]'", unit(x));
        let plots: Vec<String> = ys
            .iter()
            .filter(|y| self.column_index(y).is_some())
            .map(|y| format!("'{data_path}' using \"{x}\":\"{y}\" with lines"))
            .collect();
        let _ = writeln!(out, "plot {}", plots.join(", \\\n     "));
        let _ = writeln!(out, "pause mouse close");
        out
    }
}

/// Columns `(eta, beta, beta_squared, T)` over the rapidity grid.
pub fn scan_temperature(cfg: &ScanConfig) -> Result<ScanTable> {
    let grid = cfg.eta_grid()?;
    let mut table = ScanTable::new(
        "scan-temperature",
        &[
            ("eta", "1"),
            ("beta", "c"),
            ("beta_squared", "c^2"),
            ("T", "hbar*omega/k_B"),
        ],
        cfg,
    );
    for eta in grid {
        let r = Rapidity::new(eta)?;
        let beta = r.beta();
        table.push(vec![eta, beta, beta * beta, temperature_of(r).value()])?;
    }
    Ok(table)
}

/// Columns `(T, beta_squared)` on an even temperature grid spanning the
/// temperatures of the configured rapidity range.
pub fn scan_phase_transition(cfg: &ScanConfig) -> Result<ScanTable> {
    cfg.validate()?;
    let t_min = temperature_of(Rapidity::new(cfg.eta_min)?).value();
    let t_max = temperature_of(Rapidity::new(cfg.eta_max)?).value();
    let mut table = ScanTable::new(
        "scan-phase-transition",
        &[("T", "hbar*omega/k_B"), ("beta_squared", "c^2")],
        cfg,
    );
    for t in grid_with_origin(t_min, t_max, cfg.steps) {
        let beta = rapidity_of(Temperature::new(t)?).beta();
        table.push(vec![t, beta * beta])?;
    }
    Ok(table)
}

/// Columns `(eta, entropy, purity, spatial_width, wigner_radius,
/// uncertainty_product_u, uncertainty_product_v)` for excitation `cfg.n`.
pub fn scan_observables(cfg: &ScanConfig) -> Result<ScanTable> {
    let grid = cfg.eta_grid()?;
    let mut table = ScanTable::new(
        "scan-observables",
        &[
            ("eta", "1"),
            ("entropy", "k_B"),
            ("purity", "1"),
            ("spatial_width", "rest width"),
            ("wigner_radius", "rest radius"),
            ("uncertainty_product_u", "hbar^2"),
            ("uncertainty_product_v", "hbar^2"),
        ],
        cfg,
    );
    for eta in grid {
        let r = Rapidity::new(eta)?;
        let (pu, pv) = uncertainty_products(r)?;
        table.push(vec![
            eta,
            entropy_analytic(cfg.n, r),
            purity(cfg.n, r),
            spatial_width(r),
            wigner_radius(r),
            pu,
            pv,
        ])?;
    }
    Ok(table)
}
