//! Arithmetic in `Z / (2^61 - 1)`, used as a cheap homomorphic prefilter by
//! the kernel search. Every exact identity `rho(w) = I` survives reduction
//! modulo the prime, so a mod-p miss is a certified miss; mod-p hits are
//! re-checked exactly.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::{LaurentPoly, Scalar};

const P: u64 = (1 << 61) - 1;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ModP(u64);

impl ModP {
    pub const MODULUS: u64 = P;

    pub fn new(x: u64) -> Self {
        Self(x % P)
    }

    pub fn from_i64(x: i64) -> Self {
        let m = x.rem_euclid(P as i64);
        Self(m as u64)
    }

    pub fn from_bigint(x: &BigInt) -> Self {
        let m = x.mod_floor(&BigInt::from(P));
        Self(m.to_u64().expect("residue fits in u64"))
    }

    /// `None` if the denominator vanishes modulo the prime.
    pub fn from_rational(x: &BigRational) -> Option<Self> {
        let num = Self::from_bigint(x.numer());
        let den = Self::from_bigint(x.denom());
        den.inverse().map(|d| num.mul(&d))
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Self(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn inverse(self) -> Option<Self> {
        (self.0 != 0).then(|| self.pow(P - 2))
    }

    /// Evaluates a Laurent polynomial at `q`, which must be nonzero.
    pub fn eval(poly: &LaurentPoly, q: ModP) -> Option<Self> {
        let q_inv = q.inverse()?;
        let mut acc = Self(0);
        for (e, c) in poly.terms() {
            let base = if e >= 0 {
                q.pow(e as u64)
            } else {
                q_inv.pow(e.unsigned_abs())
            };
            acc = acc.add(&base.mul(&Self::from_bigint(c)));
        }
        Some(acc)
    }
}

impl Scalar for ModP {
    fn zero() -> Self {
        Self(0)
    }
    fn one() -> Self {
        Self(1)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, rhs: &Self) -> Self {
        let s = self.0 + rhs.0;
        Self(if s >= P { s - P } else { s })
    }
    fn sub(&self, rhs: &Self) -> Self {
        Self(if self.0 >= rhs.0 {
            self.0 - rhs.0
        } else {
            self.0 + P - rhs.0
        })
    }
    fn mul(&self, rhs: &Self) -> Self {
        let wide = self.0 as u128 * rhs.0 as u128;
        // 2^61 = 1 (mod P)
        let lo = (wide as u64) & P;
        let hi = (wide >> 61) as u64;
        let s = lo + hi;
        Self(if s >= P { s - P } else { s })
    }
    fn neg(&self) -> Self {
        Self(if self.0 == 0 { 0 } else { P - self.0 })
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inverse().map(|inv| self.mul(&inv))
    }
}

impl fmt::Display for ModP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for ModP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModP({})", self.0)
    }
}

impl From<&BigInt> for ModP {
    fn from(x: &BigInt) -> Self {
        Self::from_bigint(x)
    }
}
