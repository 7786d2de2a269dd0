//! The two-element parametric family behind the sweep harness.
//!
//! On the frame `{A, B}`, the pair is
//!
//! ```text
//! m1: M({A}) = x + yi,       M(X) = (1-x) - yi
//! m2: M({A}) = (1-x) + yi,   M(X) = x - yi
//! ```
//!
//! with `X = {B}` (disjoint focal sets) or `X = {A,B}` (overlapping), chosen
//! by [`Theta`]. Both bodies always sum to exactly `1 + 0i`; the pair is
//! mirror-symmetric in `x` around `0.5`, where the two bodies coincide.

use std::fmt;

use crate::cbba::{Cbba, ValidationReport};
use crate::complex::Complex;
use crate::frame::Frame;

/// Selects the second focal set of the family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Theta {
    /// `X = {B}`: no overlap with `{A}`.
    One,
    /// `X = {A,B}`: overlaps `{A}`.
    Two,
}

impl Theta {
    pub fn second_set_names(self) -> &'static [&'static str] {
        match self {
            Theta::One => &["B"],
            Theta::Two => &["A", "B"],
        }
    }
}

impl fmt::Display for Theta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Theta::One => f.write_str("1"),
            Theta::Two => f.write_str("2"),
        }
    }
}

impl TryFrom<u8> for Theta {
    type Error = String;

    fn try_from(v: u8) -> Result<Theta, String> {
        match v {
            1 => Ok(Theta::One),
            2 => Ok(Theta::Two),
            other => Err(format!("theta must be 1 or 2, got {other}")),
        }
    }
}

/// Builds the `(m1, m2)` pair at one parameter point.
///
/// Zero masses (for example `x + yi` at `x = y = 0`) are dropped by
/// validation, and moduli above 1 propagate as `MAGNITUDE_EXCEEDED`.
pub fn build_example1(x: f64, y: f64, theta: Theta) -> Result<(Cbba, Cbba), ValidationReport> {
    let frame = Frame::new(["A", "B"]).unwrap();
    let a = frame.subset(["A"]).unwrap();
    let second = frame
        .subset(theta.second_set_names().iter().copied())
        .unwrap();
    let build = |first: Complex, rest: Complex| {
        Cbba::validate(frame.clone(), &[(a, first), (second, rest)])
    };
    let m1 = build(
        Complex::new(x, y).expect("finite parameters"),
        Complex::new(1.0 - x, -y).expect("finite parameters"),
    )?;
    let m2 = build(
        Complex::new(1.0 - x, y).expect("finite parameters"),
        Complex::new(x, -y).expect("finite parameters"),
    )?;
    Ok((m1, m2))
}
