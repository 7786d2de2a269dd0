//! Validated complex basic belief assignments.
//!
//! [`Cbba::validate`] is the single trust boundary: everything downstream
//! (belief, plausibility, distances) operates on values that are known to
//! satisfy the mass-function conditions, so those operations never re-check
//! them.

use std::collections::BTreeMap;
use std::fmt;

use crate::complex::Complex;
use crate::frame::{Frame, FrameError, SubsetMask};

/// Slack on the complex sum condition `sum M(A) = 1 + 0i`, per component.
/// Exact equality is the mathematical condition; file-borne decimals need
/// room at double precision.
pub const SUM_TOLERANCE: f64 = 1e-9;

/// Slack on the per-entry modulus cap `|M(A)| <= 1`.
pub const MAGNITUDE_TOLERANCE: f64 = 1e-9;

/// Imaginary parts at or below this are treated as zero when deciding
/// whether a CBBA is a classical (real-valued) BBA.
pub const REAL_TOLERANCE: f64 = 1e-12;

/// A complex basic belief assignment: a map from non-empty subsets of a
/// frame to complex masses with `|M(A)| <= 1` and `sum M(A) = 1 + 0i`.
///
/// The stored key set is exactly the focal set: zero masses are dropped at
/// validation and the empty set is never stored. Values are immutable after
/// validation.
#[derive(Debug, Clone, PartialEq)]
pub struct Cbba {
    frame: Frame,
    masses: BTreeMap<SubsetMask, Complex>,
}

/// One violated validation condition.
#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub code: ViolationCode,
    /// The offending subset rendered with frame names, or `"global"`.
    pub subject: String,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationCode {
    /// Non-zero mass assigned to the empty set.
    EmptySetMass,
    /// A mass modulus exceeds 1 beyond tolerance.
    MagnitudeExceeded,
    /// The complex sum of masses deviates from `1 + 0i` beyond tolerance.
    SumNotOne,
    /// The same subset appears twice in the input.
    DuplicateSubset,
    /// A subset mask does not fit the frame.
    FrameMismatch,
    /// A document names an element outside its own frame.
    UnknownElement,
}

impl fmt::Display for ViolationCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ViolationCode::EmptySetMass => "EMPTY_SET_MASS",
            ViolationCode::MagnitudeExceeded => "MAGNITUDE_EXCEEDED",
            ViolationCode::SumNotOne => "SUM_NOT_ONE",
            ViolationCode::DuplicateSubset => "DUPLICATE_SUBSET",
            ViolationCode::FrameMismatch => "FRAME_MISMATCH",
            ViolationCode::UnknownElement => "UNKNOWN_ELEMENT",
        };
        f.write_str(s)
    }
}

/// Every condition a rejected input violated, one entry per finding.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub(crate) fn push(
        &mut self,
        code: ViolationCode,
        subject: impl Into<String>,
        detail: impl Into<String>,
    ) {
        self.violations.push(Violation {
            code,
            subject: subject.into(),
            detail: detail.into(),
        });
    }

    /// Tab-separated report lines, `CODE<TAB>subset<TAB>detail`.
    pub fn lines(&self) -> impl Iterator<Item = String> + '_ {
        self.violations
            .iter()
            .map(|v| format!("{}\t{}\t{}", v.code, v.subject, v.detail))
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, line) in self.lines().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            f.write_str(&line)?;
        }
        Ok(())
    }
}

impl std::error::Error for ValidationReport {}

impl Cbba {
    /// Validates raw `(subset, mass)` pairs into a CBBA.
    ///
    /// On success the result has zero masses dropped, so its key set is
    /// exactly the focal set. On failure the report names every violated
    /// condition, not just the first.
    pub fn validate(
        frame: Frame,
        raw_masses: &[(SubsetMask, Complex)],
    ) -> Result<Cbba, ValidationReport> {
        let mut report = ValidationReport::default();
        let mut masses = BTreeMap::new();
        let mut seen = Vec::with_capacity(raw_masses.len());
        let mut sum = Complex::ZERO;

        for &(mask, value) in raw_masses {
            sum = sum + value;
            if seen.contains(&mask) {
                report.push(
                    ViolationCode::DuplicateSubset,
                    frame.format_mask(mask),
                    format!("subset listed more than once (mass {value})"),
                );
                continue;
            }
            seen.push(mask);

            if !frame.contains_mask(mask) {
                report.push(
                    ViolationCode::FrameMismatch,
                    format!("{:#b}", mask.bits()),
                    format!("mask does not fit a frame of {} elements", frame.len()),
                );
                continue;
            }
            if mask.is_empty() {
                if !value.is_zero() {
                    report.push(
                        ViolationCode::EmptySetMass,
                        frame.format_mask(mask),
                        format!("mass {value} assigned to the empty set"),
                    );
                }
                continue;
            }
            let modulus = value.modulus();
            if modulus > 1.0 + MAGNITUDE_TOLERANCE {
                report.push(
                    ViolationCode::MagnitudeExceeded,
                    frame.format_mask(mask),
                    format!("mass {value} has modulus {modulus} > 1"),
                );
                continue;
            }
            if !value.is_zero() {
                masses.insert(mask, value);
            }
        }

        if (sum.re() - 1.0).abs() > SUM_TOLERANCE || sum.im().abs() > SUM_TOLERANCE {
            report.push(
                ViolationCode::SumNotOne,
                "global",
                format!("masses sum to {sum}, expected 1+0i"),
            );
        }

        if report.is_valid() {
            Ok(Cbba { frame, masses })
        } else {
            Err(report)
        }
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    /// Focal elements in ascending mask order with their masses.
    pub fn focal_elements(&self) -> impl Iterator<Item = (SubsetMask, Complex)> + '_ {
        self.masses.iter().map(|(&m, &v)| (m, v))
    }

    pub fn focal_count(&self) -> usize {
        self.masses.len()
    }

    /// The mass of `subset`; zero for anything outside the focal set.
    pub fn mass(&self, subset: SubsetMask) -> Complex {
        self.masses.get(&subset).copied().unwrap_or(Complex::ZERO)
    }

    /// `sum |M(A)|` over focal elements; the per-body half of the distance
    /// normalization. At least 1 for any valid CBBA, since the complex sum
    /// is 1.
    pub fn modulus_sum(&self) -> f64 {
        self.masses.values().map(|v| v.modulus()).sum()
    }

    /// Complex belief of `subset`: `sum of M(B)` over focal `B` contained in
    /// it. Zero for the empty set; `1 + 0i` (within the sum tolerance) for
    /// the whole frame.
    pub fn belief(&self, subset: SubsetMask) -> Result<Complex, FrameError> {
        self.frame.check_mask(subset)?;
        let mut total = Complex::ZERO;
        for (mask, value) in self.focal_elements() {
            if mask.is_subset_of(subset) {
                total = total + value;
            }
        }
        Ok(total)
    }

    /// Complex plausibility of `subset`: `sum of M(B)` over focal `B` that
    /// intersect it.
    pub fn plausibility(&self, subset: SubsetMask) -> Result<Complex, FrameError> {
        self.frame.check_mask(subset)?;
        let mut total = Complex::ZERO;
        for (mask, value) in self.focal_elements() {
            if mask.intersects(subset) {
                total = total + value;
            }
        }
        Ok(total)
    }

    /// True when every mass is real within [`REAL_TOLERANCE`], i.e. the CBBA
    /// is a classical BBA and belief/plausibility reduce to their classical
    /// definitions.
    pub fn is_real(&self) -> bool {
        self.masses.values().all(|v| v.im().abs() <= REAL_TOLERANCE)
    }
}
