//! Exact and floating scalars, and the specialisation maps `q -> value`.

mod laurent;
mod modp;

use std::fmt;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

pub use laurent::LaurentPoly;
pub use modp::ModP;

/// Exact rationals, used for `q = 2`, `q = 1/2`, `q = 1/4` and friends.
pub type ExactRational = BigRational;

/// Double precision complex numbers.
pub type ComplexValue = Complex64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("{0} is not a unit of Z[q, q^-1]")]
    NotAUnit(String),
    #[error("cannot substitute q = 0 into a polynomial with negative exponents")]
    ZeroSpecialization,
    #[error("q must be nonzero")]
    ZeroQ,
    #[error("q must be finite")]
    NonFinite,
    #[error("symbolic mode has no value to substitute for q")]
    NotSpecialized,
}

/// The arithmetic every matrix entry supports.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Division that is only required to succeed when the quotient lies in
    /// the ring. Fields always divide by nonzero elements.
    fn exact_div(&self, rhs: &Self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

impl Scalar for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        LaurentPoly::exact_div(self, rhs)
    }
    fn is_one(&self) -> bool {
        LaurentPoly::is_one(self)
    }
}

impl Scalar for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        (!Zero::is_zero(rhs)).then(|| self / rhs)
    }
}

impl Scalar for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        (!Scalar::is_zero(rhs)).then(|| self / rhs)
    }
}

/// Where `q` lives: kept formal, or specialised to a nonzero value.
#[derive(Debug, Clone, PartialEq)]
pub enum ScalarMode {
    Symbolic,
    Rational(ExactRational),
    Complex(ComplexValue),
}

impl ScalarMode {
    pub fn rational(q: ExactRational) -> Result<Self, ScalarError> {
        if Zero::is_zero(&q) {
            return Err(ScalarError::ZeroQ);
        }
        Ok(Self::Rational(q))
    }

    pub fn complex(q: ComplexValue) -> Result<Self, ScalarError> {
        if !q.re.is_finite() || !q.im.is_finite() {
            return Err(ScalarError::NonFinite);
        }
        if q == Complex64::new(0.0, 0.0) {
            return Err(ScalarError::ZeroQ);
        }
        Ok(Self::Complex(q))
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, Self::Complex(_))
    }
}

impl fmt::Display for ScalarMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Symbolic => f.write_str("symbolic"),
            Self::Rational(q) => write!(f, "q = {q}"),
            Self::Complex(q) => write!(f, "q = {}", format_complex(*q)),
        }
    }
}

/// A value obtained by substituting a number for `q`.
#[derive(Debug, Clone, PartialEq)]
pub enum Specialized {
    Rational(ExactRational),
    Complex(ComplexValue),
}

impl fmt::Display for Specialized {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Rational(r) => write!(f, "{r}"),
            Self::Complex(c) => f.write_str(&format_complex(*c)),
        }
    }
}

/// Evaluates `poly` at the `q` carried by a specialised mode.
pub fn lp_eval(poly: &LaurentPoly, mode: &ScalarMode) -> Result<Specialized, ScalarError> {
    match mode {
        ScalarMode::Symbolic => Err(ScalarError::NotSpecialized),
        ScalarMode::Rational(q) => poly.eval_rational(q).map(Specialized::Rational),
        ScalarMode::Complex(q) => poly.eval_complex(*q).map(Specialized::Complex),
    }
}

/// `a+bi` with shortest round-trip float formatting.
pub fn format_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.im < 0.0 {
        format!("{}-{}i", z.re, -z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}
