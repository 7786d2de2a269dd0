//! Complex scalars: the field every mass value lives in.
//!
//! Only the operations the evidence machinery needs are provided: addition,
//! subtraction, multiplication, conjugation, modulus and phase. Division and
//! the transcendental functions are deliberately absent.

use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A complex number `re + im*i` with finite components.
///
/// Public constructors reject NaN and infinite components, so every value
/// obtained from this API has a well-defined modulus and phase.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Complex {
    re: f64,
    im: f64,
}

/// Rejection of a non-finite component at construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NonFiniteComponent {
    pub re: f64,
    pub im: f64,
}

impl fmt::Display for NonFiniteComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "non-finite complex components ({}, {})",
            self.re, self.im
        )
    }
}

impl std::error::Error for NonFiniteComponent {}

impl Complex {
    pub const ZERO: Complex = Complex { re: 0.0, im: 0.0 };
    pub const ONE: Complex = Complex { re: 1.0, im: 0.0 };
    pub const I: Complex = Complex { re: 0.0, im: 1.0 };

    /// Builds `re + im*i`, rejecting NaN and infinities.
    pub fn new(re: f64, im: f64) -> Result<Complex, NonFiniteComponent> {
        if re.is_finite() && im.is_finite() {
            Ok(Complex { re, im })
        } else {
            Err(NonFiniteComponent { re, im })
        }
    }

    /// Builds a real number `re + 0i`.
    pub fn real(re: f64) -> Result<Complex, NonFiniteComponent> {
        Complex::new(re, 0.0)
    }

    pub fn re(self) -> f64 {
        self.re
    }

    pub fn im(self) -> f64 {
        self.im
    }

    pub fn conjugate(self) -> Complex {
        Complex {
            re: self.re,
            im: -self.im,
        }
    }

    /// `sqrt(re^2 + im^2)`, the magnitude of the polar view.
    pub fn modulus(self) -> f64 {
        (self.re * self.re + self.im * self.im).sqrt()
    }

    /// `re^2 + im^2`, avoiding the square root.
    pub fn modulus_squared(self) -> f64 {
        self.re * self.re + self.im * self.im
    }

    /// The angle of the polar view, in `(-pi, pi]`.
    ///
    /// Computed with the two-argument arctangent so quadrants are
    /// unambiguous; `pi` is the canonical value on the negative real axis
    /// and the phase of zero is `0`.
    pub fn phase(self) -> f64 {
        let p = self.im.atan2(self.re);
        if p == -PI {
            PI
        } else {
            p
        }
    }

    pub fn is_zero(self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
}

impl Add for Complex {
    type Output = Complex;

    fn add(self, rhs: Complex) -> Complex {
        Complex {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl Sub for Complex {
    type Output = Complex;

    fn sub(self, rhs: Complex) -> Complex {
        Complex {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        }
    }
}

impl Mul for Complex {
    type Output = Complex;

    fn mul(self, rhs: Complex) -> Complex {
        Complex {
            re: self.re * rhs.re - self.im * rhs.im,
            im: self.re * rhs.im + rhs.re * self.im,
        }
    }
}

impl Mul<f64> for Complex {
    type Output = Complex;

    fn mul(self, rhs: f64) -> Complex {
        Complex {
            re: self.re * rhs,
            im: self.im * rhs,
        }
    }
}

impl Neg for Complex {
    type Output = Complex;

    fn neg(self) -> Complex {
        Complex {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im < 0.0 || (self.im == 0.0 && self.im.is_sign_negative()) {
            write!(f, "{}-{}i", self.re, -self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im).unwrap()
    }

    #[test]
    fn addition_is_componentwise() {
        assert_eq!(c(1.0, 2.0) + c(3.0, -1.0), c(4.0, 1.0));
    }

    #[test]
    fn subtraction_is_componentwise() {
        assert_eq!(c(1.0, 2.0) - c(3.0, -1.0), c(-2.0, 3.0));
    }

    #[test]
    fn i_squared_is_minus_one() {
        assert_eq!(Complex::I * Complex::I, c(-1.0, 0.0));
    }

    #[test]
    fn modulus_of_pythagorean_triple() {
        assert_eq!(c(3.0, 4.0).modulus(), 5.0);
    }

    #[test]
    fn phase_of_unit_imaginary() {
        assert_eq!(Complex::I.phase(), FRAC_PI_2);
    }

    #[test]
    fn phase_of_zero_is_zero() {
        assert_eq!(Complex::ZERO.phase(), 0.0);
    }

    #[test]
    fn phase_stays_in_half_open_range() {
        assert_eq!(c(-1.0, 0.0).phase(), PI);
        assert_eq!(Complex::new(-1.0, -0.0).unwrap().phase(), PI);
        assert!(c(-1.0, -1e-300).phase() > -PI);
    }

    #[test]
    fn conjugate_flips_imaginary_part_only() {
        let z = c(0.3, 0.1);
        assert_eq!(z.conjugate(), c(0.3, -0.1));
        assert_eq!(z.conjugate().modulus(), z.modulus());
        assert_eq!(z.conjugate().conjugate(), z);
    }

    #[test]
    fn non_finite_components_rejected() {
        assert!(Complex::new(f64::NAN, 0.0).is_err());
        assert!(Complex::new(0.0, f64::INFINITY).is_err());
        assert!(Complex::new(f64::NEG_INFINITY, f64::NAN).is_err());
    }

    #[test]
    fn display_uses_sign_of_imaginary_part() {
        assert_eq!(c(0.2, 0.1).to_string(), "0.2+0.1i");
        assert_eq!(c(0.8, -0.1).to_string(), "0.8-0.1i");
        assert_eq!(c(1.0, 0.0).to_string(), "1+0i");
    }
}
