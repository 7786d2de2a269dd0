//! The on-disk CBBA document format.
//!
//! A document is UTF-8 JSON with a `frame` (ordered element names) and a
//! `masses` list of `{set, re, im}` records. Unknown fields are rejected.
//! Parsing is structural only; the mass-function conditions are checked by
//! [`Cbba::validate`] afterwards, so a well-formed file can still come back
//! as a [`ValidationReport`].

use std::fmt;
use std::fs;
use std::io;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::cbba::{Cbba, ValidationReport, ViolationCode};
use crate::complex::Complex;
use crate::frame::{Frame, FrameError, SubsetMask};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CbbaDocument {
    pub frame: Vec<String>,
    pub masses: Vec<MassRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MassRecord {
    pub set: Vec<String>,
    pub re: f64,
    pub im: f64,
}

/// Failure to turn a file into a CBBA, split by layer: I/O and structural
/// problems preclude interpretation, an invalid document parses but violates
/// the mass-function conditions.
#[derive(Debug)]
pub enum LoadError {
    Io(io::Error),
    Json(serde_json::Error),
    /// The document's frame itself is malformed (empty, duplicates, too
    /// large).
    Frame(FrameError),
    /// A mass value is NaN or infinite.
    NonFinite {
        set: String,
    },
    Invalid(ValidationReport),
}

impl fmt::Display for LoadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LoadError::Io(e) => write!(f, "cannot read file: {e}"),
            LoadError::Json(e) => write!(f, "malformed document: {e}"),
            LoadError::Frame(e) => write!(f, "invalid frame: {e}"),
            LoadError::NonFinite { set } => {
                write!(f, "non-finite mass components for set {set}")
            }
            LoadError::Invalid(report) => write!(f, "invalid CBBA:\n{report}"),
        }
    }
}

impl std::error::Error for LoadError {}

impl From<io::Error> for LoadError {
    fn from(e: io::Error) -> Self {
        LoadError::Io(e)
    }
}

impl From<serde_json::Error> for LoadError {
    fn from(e: serde_json::Error) -> Self {
        LoadError::Json(e)
    }
}

/// Parses and validates a CBBA file.
///
/// Set names that are not frame elements are reported as `UNKNOWN_ELEMENT`
/// violations (the document is structurally fine, just inconsistent with its
/// own frame), alongside any mass-condition violations.
pub fn parse_cbba_file(path: &Path) -> Result<Cbba, LoadError> {
    let text = fs::read_to_string(path)?;
    parse_cbba_str(&text)
}

/// [`parse_cbba_file`] on in-memory text.
pub fn parse_cbba_str(text: &str) -> Result<Cbba, LoadError> {
    let document: CbbaDocument = serde_json::from_str(text)?;
    document_to_cbba(&document)
}

/// Binds a parsed document to a frame and validates it.
pub fn document_to_cbba(document: &CbbaDocument) -> Result<Cbba, LoadError> {
    let frame = Frame::new(document.frame.iter().cloned()).map_err(LoadError::Frame)?;
    let mut raw: Vec<(SubsetMask, Complex)> = Vec::with_capacity(document.masses.len());
    let mut report = ValidationReport::default();
    for record in &document.masses {
        let subject = format!("{{{}}}", record.set.join(","));
        let mut mask = SubsetMask::EMPTY;
        let mut unknown = false;
        for name in &record.set {
            match frame.subset([name.as_str()]) {
                Ok(single) => mask = mask.union(single),
                Err(FrameError::UnknownElement(name)) => {
                    unknown = true;
                    report.push(
                        ViolationCode::UnknownElement,
                        subject.clone(),
                        format!("element {name:?} is not in the frame"),
                    );
                }
                Err(_) => unreachable!("subset of a valid frame only fails on unknown names"),
            }
        }
        if unknown {
            continue;
        }
        let value = Complex::new(record.re, record.im).map_err(|_| LoadError::NonFinite {
            set: subject.clone(),
        })?;
        raw.push((mask, value));
    }
    if !report.is_valid() {
        return Err(LoadError::Invalid(report));
    }
    Cbba::validate(frame, &raw).map_err(LoadError::Invalid)
}

/// Renders a CBBA back into its document form, focal elements in ascending
/// mask order.
pub fn to_document(cbba: &Cbba) -> CbbaDocument {
    let frame = cbba.frame();
    CbbaDocument {
        frame: frame.elements().to_vec(),
        masses: cbba
            .focal_elements()
            .map(|(mask, value)| MassRecord {
                set: frame
                    .elements()
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask.bits() & (1 << i) != 0)
                    .map(|(_, name)| name.clone())
                    .collect(),
                re: value.re(),
                im: value.im(),
            })
            .collect(),
    }
}

/// Serializes a CBBA as pretty-printed JSON.
pub fn write_cbba_file(path: &Path, cbba: &Cbba) -> Result<(), LoadError> {
    let mut text = serde_json::to_string_pretty(&to_document(cbba))?;
    text.push('\n');
    fs::write(path, text)?;
    Ok(())
}
