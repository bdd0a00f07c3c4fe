//! The parameter sets `P_k`, `R_k`, `S_k` and the witness words attached to
//! them.
//!
//! With `mu + 1/mu = q - 2` (for `P`) or `mu + 1/mu = 1/q - 2` (for `R`), the
//! two defining expressions of each set are `mu^{2k}` and `mu^{-2k}`, so
//! membership says `mu` is a `2k`-th root of unity.

use std::fmt;

use num_complex::Complex64;
use serde::Serialize;
use thiserror::Error;

use crate::words::{AlphaElem, Gen, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum QSetId {
    P(i64),
    R(i64),
    S(i64),
}

impl QSetId {
    pub fn k(self) -> i64 {
        match self {
            QSetId::P(k) | QSetId::R(k) | QSetId::S(k) => k,
        }
    }
}

impl fmt::Display for QSetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QSetId::P(k) => write!(f, "P_{k}"),
            QSetId::R(k) => write!(f, "R_{k}"),
            QSetId::S(k) => write!(f, "S_{k}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QSetError {
    #[error("q = {0} is excluded from {1} by definition")]
    ExcludedPoint(String, QSetId),
    #[error("q must be nonzero")]
    ZeroQ,
    #[error("q must be finite")]
    NonFinite,
    #[error("no closed-form spectrum is stated for {0}")]
    UnsupportedSet(QSetId),
}

fn check_q(set: QSetId, q: Complex64) -> Result<(), QSetError> {
    if !q.re.is_finite() || !q.im.is_finite() {
        return Err(QSetError::NonFinite);
    }
    if q == Complex64::new(0.0, 0.0) {
        return Err(QSetError::ZeroQ);
    }
    match set {
        QSetId::P(_) if q == Complex64::new(4.0, 0.0) => {
            Err(QSetError::ExcludedPoint("4".into(), set))
        }
        QSetId::R(_) if q == Complex64::new(0.25, 0.0) => {
            Err(QSetError::ExcludedPoint("1/4".into(), set))
        }
        _ => Ok(()),
    }
}

/// The pair `(2q)^{-1}(g - h)`, `(2q)^{-1}(g + h)` for `P` and `R`, with
/// principal square roots; `((1 - q)/q, (1 - q)/q)` for `S`.
fn base_pair(set: QSetId, q: Complex64) -> (Complex64, Complex64) {
    let one = Complex64::new(1.0, 0.0);
    match set {
        QSetId::P(_) => {
            let g = q * q - 2.0 * q;
            let h = (q - 4.0).sqrt() * q.powf(1.5);
            ((g - h) / (2.0 * q), (g + h) / (2.0 * q))
        }
        QSetId::R(_) => {
            let g = one - 2.0 * q;
            let h = (one - 4.0 * q).sqrt();
            ((g - h) / (2.0 * q), (g + h) / (2.0 * q))
        }
        QSetId::S(_) => {
            let v = (one - q) / q;
            (v, v)
        }
    }
}

fn powi(z: Complex64, e: i64) -> Complex64 {
    z.powi(i32::try_from(e).expect("exponent fits in i32"))
}

/// The defining expressions of the set evaluated at `q`. Both entries are
/// equal for `S`, which has only one.
pub fn qset_expressions(set: QSetId, q: Complex64) -> Result<[Complex64; 2], QSetError> {
    check_q(set, q)?;
    let (a, b) = base_pair(set, q);
    let e = 2 * set.k();
    Ok([powi(a, e), powi(b, e)])
}

/// True iff every defining expression is within `tol` of 1.
pub fn qset_member(set: QSetId, q: Complex64, tol: f64) -> Result<bool, QSetError> {
    let exprs = qset_expressions(set, q)?;
    Ok(exprs.iter().all(|z| (z - 1.0).norm() <= tol))
}

/// The unfaithfulness witness for each set:
/// `(a2 T)^{2k} T^{-2k}`, `(a1 a2 a1 T)^{2k} T^{-2k}` or
/// `(T a1 a2 a1)^{2k} T^{-2k}`.
pub fn qset_witness(set: QSetId) -> Word {
    let a = |e: AlphaElem| e.letters().to_vec();
    let block: Vec<Gen> = match set {
        QSetId::P(_) => [a(AlphaElem::A2), vec![Gen::T]].concat(),
        QSetId::R(_) => [a(AlphaElem::A1A2A1), vec![Gen::T]].concat(),
        QSetId::S(_) => [vec![Gen::T], a(AlphaElem::A1A2A1)].concat(),
    };
    let k = set.k();
    let base = Word::new(3, block).expect("letters valid for n = 3");
    base.pow(2 * k).concat(&Word::t_power(-2 * k))
}

/// `{1, (2q)^{-2k}(g - h)^{2k}, (2q)^{-2k}(g + h)^{2k}}` for `P` and `R`.
pub fn qset_expected_spectrum(set: QSetId, q: Complex64) -> Result<[Complex64; 3], QSetError> {
    if let QSetId::S(_) = set {
        return Err(QSetError::UnsupportedSet(set));
    }
    let [a, b] = qset_expressions(set, q)?;
    Ok([Complex64::new(1.0, 0.0), a, b])
}

/// Points `2 + z + 1/z` (for `P`) or `1/(2 + z + 1/z)` (for `R`) or
/// `1/(1 + z)` (for `S`) with `z` running over the 48th roots of unity,
/// plus a few generic points. Members of the sets for `k` dividing 24 lie
/// on this grid; duplicates and degenerate points (`q = 0` or the excluded
/// value) are left out.
pub fn probe_grid(set: QSetId) -> Vec<Complex64> {
    let mut out = Vec::new();
    for j in 0..48 {
        let z = Complex64::from_polar(1.0, std::f64::consts::PI * j as f64 / 24.0);
        let s = 2.0 + z + z.inv();
        let q = match set {
            QSetId::P(_) => s,
            QSetId::R(_) => s.inv(),
            QSetId::S(_) => (1.0 + z).inv(),
        };
        if q.re.is_finite() && q.im.is_finite() && q.norm() > 1e-9 && q.norm() < 1e9 {
            out.push(q);
        }
    }
    out.extend([
        Complex64::new(3.0, 1.0),
        Complex64::new(0.3, -0.7),
        Complex64::new(-1.5, 0.0),
        Complex64::new(5.0, 0.0),
    ]);
    out.retain(|&q| check_q(set, q).is_ok());
    let mut unique: Vec<Complex64> = Vec::new();
    for q in out {
        if unique.iter().all(|u| (u - q).norm() > 1e-9) {
            unique.push(q);
        }
    }
    unique
}
