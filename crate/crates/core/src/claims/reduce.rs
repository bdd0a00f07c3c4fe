//! Conjugating restricted-family words `A_1 T A_2 T ... A_r T^{1-r}` (r odd)
//! into shorter words with the same image, under conditions on products
//! `A_j A_k` in the alpha subgroup.
//!
//! Three cases:
//! - (a) `A_r A_1 = A_2 = ... = A_{r-1}`
//! - (b) `A_{r+1-j} A_j = 1` for `j = 1..(r-1)/2`
//! - (c, i) `A_{r+1-j} A_j = 1` for `j = 1..i+1` and
//!   `A_{r-i-1} A_{i+2} = A_{i+3} = ... = A_{r-i-2}`, for `0 <= i <= (r-5)/2`
//!
//! The identity `rho(w^-1 x w) = rho(reduced)` only uses that `T^2` is
//! central; the conditions make `reduced` a power word covered by the closed
//! forms.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::rep::symbolic_word_matrix;
use crate::words::families::assemble;
use crate::words::{AlphaElem, E1Spec, FamilyForm, Gen, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ReduceCase {
    A,
    B,
    C(usize),
}

impl fmt::Display for ReduceCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReduceCase::A => f.write_str("a"),
            ReduceCase::B => f.write_str("b"),
            ReduceCase::C(i) => write!(f, "c(i={i})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReduceError {
    #[error("r = {0}; need an odd r >= 3")]
    BadR(usize),
    #[error("case c needs 0 <= i <= (r-5)/2, got i = {i} with r = {r}")]
    IndexOutOfRange { i: usize, r: usize },
    #[error("case {case} does not apply: {equation} fails")]
    CaseNotApplicable { case: ReduceCase, equation: String },
    #[error("no case applies")]
    NoCase,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub case: ReduceCase,
    /// The word `x` built from the block list.
    pub x: Word,
    pub w: Word,
    pub reduced: Word,
}

impl Reduction {
    /// `w^-1 x w`, unreduced.
    pub fn conjugate(&self) -> Word {
        self.w.inverse().concat(&self.x).concat(&self.w)
    }

    /// Exact check that `rho(w^-1 x w) = rho(reduced)`.
    pub fn holds(&self) -> bool {
        symbolic_word_matrix(&self.conjugate()) == symbolic_word_matrix(&self.reduced)
    }

    /// Exact check that `rho(reduced)` is not the identity.
    pub fn reduced_nontrivial(&self) -> bool {
        !symbolic_word_matrix(&self.reduced).is_identity()
    }
}

/// Prints `A_j A_k = ...` with 1-based indices.
fn product_eq(j: usize, k: usize, rhs: &str) -> String {
    format!("A_{j} A_{k} = {rhs}")
}

fn check_inverse_pairs(a: &[AlphaElem], upto: usize, case: ReduceCase) -> Result<(), ReduceError> {
    let r = a.len();
    for j in 1..=upto {
        let k = r + 1 - j;
        if a[k - 1] * a[j - 1] != AlphaElem::Id {
            return Err(ReduceError::CaseNotApplicable {
                case,
                equation: product_eq(k, j, "1"),
            });
        }
    }
    Ok(())
}

/// Checks `A_k A_j = A_lo = ... = A_hi`.
fn check_chain(
    a: &[AlphaElem],
    k: usize,
    j: usize,
    lo: usize,
    hi: usize,
    case: ReduceCase,
) -> Result<(), ReduceError> {
    let p = a[k - 1] * a[j - 1];
    for m in lo..=hi {
        if a[m - 1] != p {
            return Err(ReduceError::CaseNotApplicable {
                case,
                equation: product_eq(k, j, &format!("A_{m}")),
            });
        }
    }
    Ok(())
}

/// `A_from T A_{from+1} T ... A_to T` (1-based, inclusive).
fn blocks_with_t(a: &[AlphaElem], from: usize, to: usize) -> Vec<Gen> {
    let mut out = Vec::new();
    for m in from..=to {
        out.extend_from_slice(a[m - 1].letters());
        out.push(Gen::T);
    }
    out
}

fn word(letters: Vec<Gen>) -> Word {
    Word::new(3, letters).expect("T/alpha letters are valid for n = 3")
}

/// `prefix (A_k A_j) T^e`.
fn tail(mut prefix: Vec<Gen>, prod: AlphaElem, e: i64) -> Word {
    prefix.extend_from_slice(prod.letters());
    word(prefix).concat(&Word::t_power(e))
}

/// Applies one case to `spec`, returning `w` and the reduced word.
pub fn conjugate_reduce(spec: &E1Spec, case: ReduceCase) -> Result<Reduction, ReduceError> {
    let a = &spec.a_list;
    let r = a.len();
    if r < 3 || r.is_multiple_of(2) {
        return Err(ReduceError::BadR(r));
    }
    let ri = r as i64;
    let (w, reduced) = match case {
        ReduceCase::A => {
            check_chain(a, r, 1, 2, r - 1, case)?;
            let w = word(blocks_with_t(a, 1, 1));
            let reduced = tail(blocks_with_t(a, 2, r - 1), a[r - 1] * a[0], 2 - ri);
            (w, reduced)
        }
        ReduceCase::B => {
            let h = (r - 1) / 2;
            check_inverse_pairs(a, h, case)?;
            (word(blocks_with_t(a, 1, h)), a[h].word())
        }
        ReduceCase::C(i) => {
            if r < 5 || i > (r - 5) / 2 {
                return Err(ReduceError::IndexOutOfRange { i, r });
            }
            check_inverse_pairs(a, i + 1, case)?;
            check_chain(a, r - i - 1, i + 2, i + 3, r - i - 2, case)?;
            let w = word(blocks_with_t(a, 1, i + 2));
            let prod = a[r - i - 2] * a[i + 1];
            let reduced = tail(
                blocks_with_t(a, i + 3, r - i - 2),
                prod,
                2 * i as i64 + 4 - ri,
            );
            (w, reduced)
        }
    };
    let e = spec.to_espec();
    let x = assemble(&e.a_list, &e.s_list, e.form);
    // T^{1-r} A_1 T ... T A_r is the trailing word conjugated by T^{r-1}
    let w = match spec.form {
        FamilyForm::TrailingT => w,
        FamilyForm::LeadingT => Word::t_power(1 - ri).concat(&w),
    };
    Ok(Reduction {
        case,
        x,
        w,
        reduced,
    })
}

/// Tries (b), then (c) by increasing `i`, then (a).
pub fn detect_and_reduce(spec: &E1Spec) -> Result<Reduction, ReduceError> {
    let r = spec.r();
    if r < 3 || r.is_multiple_of(2) {
        return Err(ReduceError::BadR(r));
    }
    let mut order = vec![ReduceCase::B];
    if r >= 5 {
        order.extend((0..=(r - 5) / 2).map(ReduceCase::C));
    }
    order.push(ReduceCase::A);
    order
        .into_iter()
        .find_map(|c| conjugate_reduce(spec, c).ok())
        .ok_or(ReduceError::NoCase)
}

/// A block list together with the case it was built to satisfy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub spec: E1Spec,
    pub case: ReduceCase,
}

fn case_a(r: usize, first: AlphaElem, x: AlphaElem) -> Vec<AlphaElem> {
    let mut a = vec![x; r];
    a[0] = first;
    a[r - 1] = x * first.inverse();
    a
}

fn case_b(outer: &[AlphaElem], middle: AlphaElem) -> Vec<AlphaElem> {
    let mut a = outer.to_vec();
    a.push(middle);
    a.extend(outer.iter().rev().map(|e| e.inverse()));
    a
}

fn case_c(r: usize, outer: &[AlphaElem], pivot: AlphaElem, x: AlphaElem) -> Vec<AlphaElem> {
    let i1 = outer.len();
    let mut a = vec![x; r];
    for (j, &e) in outer.iter().enumerate() {
        a[j] = e;
        a[r - 1 - j] = e.inverse();
    }
    a[i1] = pivot;
    a[r - 1 - i1] = x * pivot.inverse();
    a
}

/// Specs covering (a) and (b) at r = 3, 5, 7, (c) with i = 0 at r = 5, 7
/// and i = 1 at r = 7, in both forms, including the two r = 3 instances
/// `(a1, a2, a1)` and `(a2, a1 a2, a1)`.
pub fn reducer_corpus() -> Vec<CorpusEntry> {
    use AlphaElem::*;
    use FamilyForm::{LeadingT, TrailingT};
    let raw: Vec<(Vec<AlphaElem>, ReduceCase)> = vec![
        (vec![A1, A2, A1], ReduceCase::B),
        (vec![A2, A1A2, A1], ReduceCase::A),
        (case_a(5, A1, A2A1), ReduceCase::A),
        (case_a(7, A2, A1A2A1), ReduceCase::A),
        (case_a(7, A1A2, A1), ReduceCase::A),
        (case_b(&[A1A2], A1A2A1), ReduceCase::B),
        (case_b(&[A1, A2A1], A2), ReduceCase::B),
        (case_b(&[A1A2A1, A2, A1], A1A2), ReduceCase::B),
        (case_c(5, &[A2], A1, A1A2), ReduceCase::C(0)),
        (case_c(7, &[A1A2], A2, A1A2A1), ReduceCase::C(0)),
        (case_c(7, &[A1, A2A1], A2, A1A2), ReduceCase::C(1)),
        (case_c(7, &[A2, A1], A1A2A1, A1), ReduceCase::C(1)),
    ];
    let mut out = Vec::new();
    for (a, case) in raw {
        for form in [TrailingT, LeadingT] {
            out.push(CorpusEntry {
                spec: E1Spec::new(a.clone(), form),
                case,
            });
        }
    }
    out
}
