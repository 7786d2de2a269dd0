//! Parameter sweeps over the two-element family, emitted as plot-ready CSV.

use std::fmt;

use crate::cbba::ValidationReport;
use crate::distance::{edm_distance, jousselme_distance, DistanceError, DistanceForm};
use crate::example1::{build_example1, Theta};

/// Grid points within this of `x_end` count as the endpoint.
const GRID_TOLERANCE: f64 = 1e-12;

/// A validated sweep request.
///
/// The grid is `x_start, x_start + x_step, ...`, capped at `x_end` with the
/// endpoint included when it lands within `1e-12`. Jousselme columns require
/// `y = 0`, since that distance is only defined for real-valued bodies.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    theta: Theta,
    y: f64,
    x_start: f64,
    x_end: f64,
    x_step: f64,
    forms: Vec<DistanceForm>,
    include_jousselme: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub enum SweepError {
    /// `x_start <= x_end` violated.
    EmptyRange { x_start: f64, x_end: f64 },
    /// `x_step > 0` violated.
    NonPositiveStep(f64),
    /// Jousselme requested with `y != 0`.
    JousselmeNeedsRealBodies { y: f64 },
    /// No distance columns requested at all.
    NoColumns,
    /// A grid point failed CBBA validation.
    Build { x: f64, report: ValidationReport },
    /// A grid point failed distance evaluation.
    Distance { x: f64, error: DistanceError },
}

impl fmt::Display for SweepError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SweepError::EmptyRange { x_start, x_end } => {
                write!(f, "empty sweep range: x_start {x_start} > x_end {x_end}")
            }
            SweepError::NonPositiveStep(step) => {
                write!(f, "sweep step must be positive, got {step}")
            }
            SweepError::JousselmeNeedsRealBodies { y } => {
                write!(f, "jousselme column requires y = 0, got y = {y}")
            }
            SweepError::NoColumns => write!(f, "no distance forms requested"),
            SweepError::Build { x, report } => {
                write!(f, "invalid CBBA at x = {x}:\n{report}")
            }
            SweepError::Distance { x, error } => {
                write!(f, "distance failed at x = {x}: {error}")
            }
        }
    }
}

impl std::error::Error for SweepError {}

impl SweepSpec {
    pub fn new(
        theta: Theta,
        y: f64,
        x_start: f64,
        x_end: f64,
        x_step: f64,
        forms: &[DistanceForm],
        include_jousselme: bool,
    ) -> Result<SweepSpec, SweepError> {
        if x_start > x_end {
            return Err(SweepError::EmptyRange { x_start, x_end });
        }
        if x_step.is_nan() || x_step <= 0.0 {
            return Err(SweepError::NonPositiveStep(x_step));
        }
        if include_jousselme && y != 0.0 {
            return Err(SweepError::JousselmeNeedsRealBodies { y });
        }
        // canonical column order, duplicates collapsed
        let forms: Vec<DistanceForm> = DistanceForm::ALL
            .into_iter()
            .filter(|f| forms.contains(f))
            .collect();
        if forms.is_empty() && !include_jousselme {
            return Err(SweepError::NoColumns);
        }
        Ok(SweepSpec {
            theta,
            y,
            x_start,
            x_end,
            x_step,
            forms,
            include_jousselme,
        })
    }

    /// The grid, ascending.
    pub fn grid(&self) -> Vec<f64> {
        let mut xs = Vec::new();
        let mut k = 0u64;
        loop {
            let x = self.x_start + (k as f64) * self.x_step;
            if x > self.x_end + GRID_TOLERANCE {
                break;
            }
            xs.push(x);
            k += 1;
        }
        xs
    }
}

/// One sweep result: an `x` column followed by one distance column per
/// requested form, rows ascending in `x`.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepTable {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl SweepTable {
    /// CSV with every numeric cell at 12 significant digits. Deterministic:
    /// the same spec always yields the same bytes.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|&v| format_significant(v, 12)).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }
}

/// Evaluates the requested distances at every grid point.
pub fn run_sweep(spec: &SweepSpec) -> Result<SweepTable, SweepError> {
    let mut columns = vec!["x".to_string()];
    for form in &spec.forms {
        columns.push(format!("d_{form}"));
    }
    if spec.include_jousselme {
        columns.push("d_jousselme".to_string());
    }

    let mut rows = Vec::new();
    for x in spec.grid() {
        let (m1, m2) = build_example1(x, spec.y, spec.theta)
            .map_err(|report| SweepError::Build { x, report })?;
        let mut row = vec![x];
        for &form in &spec.forms {
            let d =
                edm_distance(&m1, &m2, form).map_err(|error| SweepError::Distance { x, error })?;
            row.push(d);
        }
        if spec.include_jousselme {
            let d =
                jousselme_distance(&m1, &m2).map_err(|error| SweepError::Distance { x, error })?;
            row.push(d);
        }
        rows.push(row);
    }
    Ok(SweepTable { columns, rows })
}

/// Renders `v` as a plain decimal with `digits` significant digits.
pub fn format_significant(v: f64, digits: u32) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    let exponent = v.abs().log10().floor() as i32;
    let decimals = digits as i32 - 1 - exponent;
    if decimals <= 0 {
        format!("{v:.0}")
    } else {
        format!("{v:.*}", decimals as usize)
    }
}
