//! Frames of discernment and bit-encoded subsets.
//!
//! A frame fixes an ordered list of distinct event names; element `i` of the
//! frame owns bit `i` of every [`SubsetMask`]. All set combinatorics reduce
//! to integer bit operations, which keeps the Jaccard index and the subset
//! tests exact.

use std::fmt;

/// Upper bound on frame size, so masks fit comfortably in machine integers
/// and exhaustive similarity matrices stay tractable in tests.
pub const MAX_ELEMENTS: usize = 20;

/// An ordered set of named, mutually exclusive events.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frame {
    elements: Vec<String>,
}

/// A subset of a frame, encoded as one bit per element.
///
/// The empty set is `bits == 0`. Masks carry no frame reference; every
/// frame-aware operation validates `bits < 2^n` against the frame it is
/// given.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetMask(u32);

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FrameError {
    /// Frames must have at least one element.
    Empty,
    /// More than [`MAX_ELEMENTS`] elements.
    TooLarge(usize),
    /// An element name appears twice.
    DuplicateElement(String),
    /// Element names must be non-empty.
    EmptyElementName,
    /// A named element does not belong to the frame.
    UnknownElement(String),
    /// A mask has bits outside the frame's `2^n` range.
    MaskOutOfRange { bits: u32, elements: usize },
}

impl fmt::Display for FrameError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FrameError::Empty => write!(f, "frame must contain at least one element"),
            FrameError::TooLarge(n) => {
                write!(f, "frame has {n} elements, maximum is {MAX_ELEMENTS}")
            }
            FrameError::DuplicateElement(name) => {
                write!(f, "duplicate frame element {name:?}")
            }
            FrameError::EmptyElementName => write!(f, "frame element names must be non-empty"),
            FrameError::UnknownElement(name) => {
                write!(f, "element {name:?} is not in the frame")
            }
            FrameError::MaskOutOfRange { bits, elements } => {
                write!(
                    f,
                    "subset mask {bits:#b} does not fit a frame of {elements} elements"
                )
            }
        }
    }
}

impl std::error::Error for FrameError {}

impl Frame {
    /// Builds a frame from ordered element names.
    ///
    /// Order is fixed here and determines bit positions for the life of the
    /// frame.
    pub fn new<I, S>(elements: I) -> Result<Frame, FrameError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let elements: Vec<String> = elements.into_iter().map(Into::into).collect();
        if elements.is_empty() {
            return Err(FrameError::Empty);
        }
        if elements.len() > MAX_ELEMENTS {
            return Err(FrameError::TooLarge(elements.len()));
        }
        for (i, name) in elements.iter().enumerate() {
            if name.is_empty() {
                return Err(FrameError::EmptyElementName);
            }
            if elements[..i].contains(name) {
                return Err(FrameError::DuplicateElement(name.clone()));
            }
        }
        Ok(Frame { elements })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        // Unreachable for constructed frames; kept for the len/is_empty pair.
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == name)
    }

    /// The mask selecting every element (the whole frame).
    pub fn full_mask(&self) -> SubsetMask {
        SubsetMask(((1u64 << self.elements.len()) - 1) as u32)
    }

    /// Builds a mask from element names.
    pub fn subset<I, S>(&self, names: I) -> Result<SubsetMask, FrameError>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut bits = 0u32;
        for name in names {
            let name = name.as_ref();
            let idx = self
                .index_of(name)
                .ok_or_else(|| FrameError::UnknownElement(name.to_string()))?;
            bits |= 1 << idx;
        }
        Ok(SubsetMask(bits))
    }

    /// Builds the singleton mask for one element.
    pub fn singleton(&self, name: &str) -> Result<SubsetMask, FrameError> {
        self.subset([name])
    }

    pub fn contains_mask(&self, mask: SubsetMask) -> bool {
        u64::from(mask.0) < (1u64 << self.elements.len())
    }

    pub fn check_mask(&self, mask: SubsetMask) -> Result<(), FrameError> {
        if self.contains_mask(mask) {
            Ok(())
        } else {
            Err(FrameError::MaskOutOfRange {
                bits: mask.0,
                elements: self.elements.len(),
            })
        }
    }

    /// The complement of `mask` within this frame.
    pub fn complement(&self, mask: SubsetMask) -> Result<SubsetMask, FrameError> {
        self.check_mask(mask)?;
        Ok(SubsetMask(!mask.0 & self.full_mask().0))
    }

    /// All `2^n` subsets in ascending bit order: the empty set first, the
    /// whole frame last. Deterministic.
    pub fn power_set(&self) -> Vec<SubsetMask> {
        (0..(1u64 << self.elements.len()))
            .map(|bits| SubsetMask(bits as u32))
            .collect()
    }

    /// Jaccard index `|A n B| / |A u B|` of two subsets of this frame.
    ///
    /// Returns `1` for identical non-empty subsets, `0` for disjoint ones,
    /// and `0` for the empty-empty pair by convention (that pair never
    /// arises from validated CBBAs, whose focal sets are non-empty).
    pub fn jaccard(&self, a: SubsetMask, b: SubsetMask) -> Result<f64, FrameError> {
        self.check_mask(a)?;
        self.check_mask(b)?;
        Ok(a.jaccard(b))
    }

    /// Renders a mask as `{A,B}` using this frame's element names.
    pub fn format_mask(&self, mask: SubsetMask) -> String {
        let names: Vec<&str> = self
            .elements
            .iter()
            .enumerate()
            .filter(|(i, _)| mask.0 & (1 << i) != 0)
            .map(|(_, name)| name.as_str())
            .collect();
        format!("{{{}}}", names.join(","))
    }
}

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    /// Wraps raw bits. Validity against a particular frame is checked by the
    /// operations that take one.
    pub fn from_bits(bits: u32) -> SubsetMask {
        SubsetMask(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn cardinality(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: SubsetMask) -> bool {
        self.0 & other.0 == self.0
    }

    pub fn intersects(self, other: SubsetMask) -> bool {
        self.0 & other.0 != 0
    }

    pub fn intersection(self, other: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 & other.0)
    }

    pub fn union(self, other: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 | other.0)
    }

    /// Frame-free Jaccard index from popcounts; exact integer arithmetic
    /// with a single division at the end. The empty-empty pair maps to `0`.
    pub fn jaccard(self, other: SubsetMask) -> f64 {
        let union = self.union(other).cardinality();
        if union == 0 {
            return 0.0;
        }
        f64::from(self.intersection(other).cardinality()) / f64::from(union)
    }
}
