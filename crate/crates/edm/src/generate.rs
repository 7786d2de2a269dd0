//! Seeded random CBBAs, the fuel for the property suites.
//!
//! Draw: pick a random non-empty focal collection, then a magnitude in
//! `(0, 1)` and a phase in `complex_fraction * (-pi/2, pi/2)` per focal set.
//! Projection to the mass-function conditions: real parts are normalized to
//! sum to 1 (phases stay inside a half-turn, so real parts are positive and
//! the normalizer cannot vanish), imaginary parts are shifted by their mean
//! to sum to 0. Draws whose projected moduli exceed 1 are rejected and
//! resampled. `complex_fraction = 0` pins every phase at zero and yields
//! classical BBAs.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cbba::Cbba;
use crate::complex::Complex;
use crate::frame::{Frame, SubsetMask};

/// Rejection rounds before giving up on a seed.
const MAX_ROUNDS: u32 = 64;

/// Focal collections are capped at this size to keep downstream quadratic
/// forms cheap on large frames.
const MAX_FOCALS: usize = 32;

#[derive(Debug, Clone, PartialEq)]
pub enum GenerateError {
    /// `complex_fraction` outside `[0, 1]`.
    InvalidFraction(f64),
    /// No draw satisfied the modulus cap within the round budget; re-seed.
    Failed { seed: u64, rounds: u32 },
}

impl fmt::Display for GenerateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenerateError::InvalidFraction(v) => {
                write!(f, "complex_fraction must lie in [0, 1], got {v}")
            }
            GenerateError::Failed { seed, rounds } => {
                write!(f, "no valid CBBA after {rounds} rounds for seed {seed}")
            }
        }
    }
}

impl std::error::Error for GenerateError {}

/// Draws a random valid CBBA on `frame`. Deterministic per seed.
pub fn random_cbba(frame: &Frame, seed: u64, complex_fraction: f64) -> Result<Cbba, GenerateError> {
    if !(0.0..=1.0).contains(&complex_fraction) {
        return Err(GenerateError::InvalidFraction(complex_fraction));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let subset_count = (1u64 << frame.len()) - 1;
    let max_focals = subset_count.min(MAX_FOCALS as u64) as usize;

    for _ in 0..MAX_ROUNDS {
        let focal_count = rng.gen_range(1..=max_focals);
        let focals = draw_focal_collection(&mut rng, subset_count, focal_count);

        let mut re = Vec::with_capacity(focal_count);
        let mut im = Vec::with_capacity(focal_count);
        for _ in 0..focal_count {
            let magnitude: f64 = rng.gen();
            let phase = complex_fraction
                * rng.gen_range(-std::f64::consts::FRAC_PI_2..std::f64::consts::FRAC_PI_2);
            re.push(magnitude * phase.cos());
            im.push(magnitude * phase.sin());
        }

        let total_re: f64 = re.iter().sum();
        if total_re < 1e-6 {
            continue;
        }
        let mean_im: f64 = im.iter().sum::<f64>() / focal_count as f64;

        let raw: Vec<(SubsetMask, Complex)> = focals
            .iter()
            .zip(re.iter().zip(im.iter()))
            .map(|(&mask, (&r, &i))| {
                (
                    mask,
                    Complex::new(r / total_re, i - mean_im).expect("finite projection"),
                )
            })
            .collect();

        if raw.iter().any(|(_, z)| z.modulus() > 1.0) {
            continue;
        }
        if let Ok(cbba) = Cbba::validate(frame.clone(), &raw) {
            return Ok(cbba);
        }
    }
    Err(GenerateError::Failed {
        seed,
        rounds: MAX_ROUNDS,
    })
}

/// `count` distinct non-empty masks, in draw order.
fn draw_focal_collection(rng: &mut ChaCha8Rng, subset_count: u64, count: usize) -> Vec<SubsetMask> {
    let mut picked: Vec<SubsetMask> = Vec::with_capacity(count);
    while picked.len() < count {
        let bits = rng.gen_range(1..=subset_count) as u32;
        let mask = SubsetMask::from_bits(bits);
        if !picked.contains(&mask) {
            picked.push(mask);
        }
    }
    picked
}
