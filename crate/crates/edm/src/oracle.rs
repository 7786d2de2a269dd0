//! Brute-force distance evaluation over the full power set.
//!
//! This is the independent cross-check for the optimized path: it
//! materializes every non-empty subset of the frame, builds the dense
//! similarity matrix inline from popcounts, and evaluates the quadratic
//! forms with explicit double loops. No focal-union restriction, no shared
//! matrix code. Quadratic in `2^n`, hence the frame-size cap.

use std::fmt;

use crate::cbba::Cbba;
use crate::complex::Complex;
use crate::distance::{DistanceError, DistanceForm, ZERO_TOLERANCE};
use crate::frame::SubsetMask;

/// Largest frame the brute-force evaluation accepts; the double loop costs
/// `4^n` terms.
pub const MAX_ORACLE_ELEMENTS: usize = 10;

#[derive(Debug, Clone, PartialEq)]
pub enum OracleError {
    FrameTooLarge(usize),
    Distance(DistanceError),
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::FrameTooLarge(n) => write!(
                f,
                "brute-force evaluation is capped at {MAX_ORACLE_ELEMENTS} elements, frame has {n}"
            ),
            OracleError::Distance(e) => e.fmt(f),
        }
    }
}

impl std::error::Error for OracleError {}

impl From<DistanceError> for OracleError {
    fn from(e: DistanceError) -> Self {
        OracleError::Distance(e)
    }
}

fn popcount_jaccard(a: u32, b: u32) -> f64 {
    let union = (a | b).count_ones();
    if union == 0 {
        return 0.0;
    }
    f64::from((a & b).count_ones()) / f64::from(union)
}

/// The distance evaluated verbatim over all `2^n - 1` non-empty subsets.
pub fn brute_force_distance(m1: &Cbba, m2: &Cbba, form: DistanceForm) -> Result<f64, OracleError> {
    if m1.frame() != m2.frame() {
        return Err(OracleError::Distance(DistanceError::FrameMismatch));
    }
    let n = m1.frame().len();
    if n > MAX_ORACLE_ELEMENTS {
        return Err(OracleError::FrameTooLarge(n));
    }

    let basis: Vec<u32> = (1..(1u32 << n)).collect();
    let v1: Vec<Complex> = basis
        .iter()
        .map(|&bits| m1.mass(SubsetMask::from_bits(bits)))
        .collect();
    let v2: Vec<Complex> = basis
        .iter()
        .map(|&bits| m2.mass(SubsetMask::from_bits(bits)))
        .collect();
    let normalization: f64 =
        v1.iter().map(|z| z.modulus()).sum::<f64>() + v2.iter().map(|z| z.modulus()).sum::<f64>();

    let value = match form {
        DistanceForm::Sesquilinear | DistanceForm::BilinearLiteral => {
            let conjugate = matches!(form, DistanceForm::Sesquilinear);
            let mut acc = Complex::ZERO;
            for i in 0..basis.len() {
                let di = v1[i] - v2[i];
                let left = if conjugate { di.conjugate() } else { di };
                for j in 0..basis.len() {
                    let dj = v1[j] - v2[j];
                    acc = acc + (left * dj) * popcount_jaccard(basis[i], basis[j]);
                }
            }
            let q = if conjugate {
                acc.re().max(0.0)
            } else {
                acc.modulus()
            };
            (q / normalization).sqrt()
        }
        DistanceForm::ScalarProduct => {
            let product = |u: &[Complex], v: &[Complex]| {
                let mut acc = Complex::ZERO;
                for i in 0..basis.len() {
                    for j in 0..basis.len() {
                        acc =
                            acc + (u[i] * v[j].conjugate()) * popcount_jaccard(basis[i], basis[j]);
                    }
                }
                acc.modulus()
            };
            let numerator = product(&v1, &v1) + product(&v2, &v2) - 2.0 * product(&v1, &v2);
            if numerator < -ZERO_TOLERANCE {
                return Err(OracleError::Distance(DistanceError::NegativeNumerator(
                    numerator,
                )));
            }
            (numerator.max(0.0) / normalization).sqrt()
        }
    };
    Ok(value)
}
